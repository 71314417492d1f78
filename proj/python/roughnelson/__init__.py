"""Rough-set algebras of quasiorders.

Approximation operators, the lattice of rough pairs, law verification for
finite algebras, and the reconstruction of a finite Nelson algebra as the
rough-set algebra of a quasiorder it induces.
"""

try:
    from . import _core
    from ._core import *  # noqa: F401,F403
except ImportError:  # build-tree layout: the extension sits directly on sys.path
    import _core
    from _core import *  # noqa: F401,F403

__version__ = _core.__version__
