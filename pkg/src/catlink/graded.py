"""Graded free modules over a coefficient base.

A module is a finite list of labelled generators with integer q-degrees;
the graded rank is a Laurent polynomial in q with nonnegative integer
coefficients.  Labels are opaque and survive shifts, sums and tensor
products so that maps between modules can be audited generator by
generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Laurent


@dataclass(frozen=True)
class GradedFreeModule:
    generators: tuple  # of (label, degree)

    @classmethod
    def from_degrees(cls, degrees, prefix="e"):
        return cls(tuple((f"{prefix}{i}", d) for i, d in enumerate(degrees)))

    @property
    def rank(self):
        return len(self.generators)

    def degrees(self):
        return [d for _, d in self.generators]

    def __iter__(self):
        return iter(self.generators)


ZERO_MODULE = GradedFreeModule(())


def graded_rank(module):
    """Sum of q^deg(g) over generators; (q + 1/q) for the rank-two A."""
    out = Laurent()
    for _, d in module.generators:
        out = out + Laurent.q(d)
    return out


def shift(module, j):
    """Raise every generator degree by j: graded_rank becomes q^j times."""
    return GradedFreeModule(tuple((lab, d + j) for lab, d in module.generators))


def direct_sum(a, b):
    return GradedFreeModule(tuple((("L", lab), d) for lab, d in a.generators)
                            + tuple((("R", lab), d) for lab, d in b.generators))


def tensor(a, b):
    return GradedFreeModule(tuple(((la, lb), da + db)
                                  for la, da in a.generators
                                  for lb, db in b.generators))
