"""Soft-decision list decoding of one-point Hermitian codes."""

try:
    from ._hermdec import *  # noqa: F401,F403
    from ._hermdec import Code, dimension_to_u  # noqa: F401
except ImportError:
    # in-tree builds put the extension next to the package on sys.path
    from _hermdec import *  # noqa: F401,F403
    from _hermdec import Code, dimension_to_u  # noqa: F401

__all__ = ["Code", "dimension_to_u"]
