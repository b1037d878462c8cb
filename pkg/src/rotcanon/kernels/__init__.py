"""Backend selection for the hot kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used. Setting ``ROTCANON_PURE_PYTHON=1``
forces the fallback.
"""

import os

from . import _pykernels

CMP_NONE = _pykernels.CMP_NONE
CMP_MIN = _pykernels.CMP_MIN
CMP_EQ = _pykernels.CMP_EQ
FACES_ANY = _pykernels.FACES_ANY
FACES_SIMPLE = _pykernels.FACES_SIMPLE
FACES_INDUCED = _pykernels.FACES_INDUCED


def load_compiled():
    """Return the compiled kernel module, or ``None`` if it is unavailable."""
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = None if os.environ.get("ROTCANON_PURE_PYTHON") else load_compiled()
backend = _compiled if _compiled is not None else _pykernels
BACKEND = "compiled" if _compiled is not None else "python"

count_faces = backend.count_faces
code_walk = backend.code_walk
connectivity_level = backend.connectivity_level
planar_rotations = backend.planar_rotations

__all__ = [
    "BACKEND",
    "CMP_EQ",
    "CMP_MIN",
    "CMP_NONE",
    "FACES_ANY",
    "FACES_INDUCED",
    "FACES_SIMPLE",
    "code_walk",
    "connectivity_level",
    "count_faces",
    "load_compiled",
    "planar_rotations",
]
