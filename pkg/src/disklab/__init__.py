"""disklab: a combinatorial laboratory for disk complexes of tubed surfaces.

The package builds explicit finite models of a family of surfaces obtained by
joining parallel copies of a closed orientable surface with unknotted tubes,
enumerates a catalog of compressing-disk descriptors for each model, realizes
octahedral suspension spheres inside the flag complex spanned by the catalog,
and certifies -- via exact integer homology and an explicitly verified
simplicial retraction -- that those spheres are homologically essential.

Public entry points live in the submodules:

- :mod:`disklab.flagcomplex` -- flag complexes, clique enumeration, suspension,
  octahedral spheres, vertex maps, JSON (de)serialization.
- :mod:`disklab.homology` -- exact Smith-normal-form homology over the integers
  and the cycle-level retraction certificate.
- :mod:`disklab.surface` -- polygon models of punctured surfaces, arc codes,
  and the arc-intersection engine.
- :mod:`disklab.disks` -- compressing-disk descriptors, side/type
  classification, disjointness, and catalog generation.
- :mod:`disklab.retraction` -- suspension spheres, outermost surgery, the
  recursive retraction, and minimality certificates.
- :mod:`disklab.cli` -- the ``disklab`` command-line interface.
"""

from disklab.errors import (
    DisklabError,
    InvalidConfigError,
    MalformedFileError,
    ResourceCapError,
    WellDefinednessError,
)

__all__ = [
    "DisklabError",
    "InvalidConfigError",
    "MalformedFileError",
    "ResourceCapError",
    "WellDefinednessError",
    "__version__",
]

__version__ = "0.1.0"
