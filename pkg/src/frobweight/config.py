"""Size caps used by the exhaustive constructions and searches.

Every routine that enumerates a structure takes a ``Caps`` argument (defaulting
to ``DEFAULT_CAPS``) and raises ``CapExceeded`` instead of silently starting a
search that cannot finish at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Caps:
    ring_size: int = 4096          # largest ring realized as a full Cayley table
    conductor: int = 256           # largest cyclotomic conductor
    universe: int = 2 ** 20        # largest tuple universe M^n or R^n
    matrix_family: int = 2 ** 24   # largest |R|^(n*n) swept for GL enumeration
    closure: int = 2 ** 16         # largest group or span closure
    axiom_triples: int = 2 ** 21   # full triple check below this, else sampled
    sample_triples: int = 100_000  # sampled triples above the exhaustive bound


DEFAULT_CAPS = Caps()

# Fixed seed used whenever a routine draws random samples and the caller did
# not supply one; printed by the CLI so runs can be reproduced.
DEFAULT_SEED = 1729
