"""Symmetric functions in two independent alphabets X and Y.

Elements are stored in the product power-sum basis p_rho(X) p_sigma(Y).
Only the operations needed to test product formulas are provided.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .partitions import Partition, partitions_of, sign_of, z_rho
from .symfunc import SymFunc, _accumulate, _merge

Key = tuple[Partition, Partition]


class TensorSymFunc:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def scalar(cls, c) -> TensorSymFunc:
        return cls({((), ()): c})

    @classmethod
    def embed(cls, f: SymFunc, slot: int) -> TensorSymFunc:
        """f(X) for slot 0, f(Y) for slot 1."""
        p = f.to("p").terms
        if slot == 0:
            return cls({(rho, ()): c for rho, c in p.items()})
        return cls({((), rho): c for rho, c in p.items()})

    @classmethod
    def product_alphabet(cls, basis: str, n: int) -> TensorSymFunc:
        """e_n(XY) or h_n(XY), using p_rho(XY) = p_rho(X) p_rho(Y)."""
        if basis not in ("e", "h"):
            raise ValueError(basis)
        return cls({
            (rho, rho): Fraction(sign_of(rho) if basis == "e" else 1, z_rho(rho))
            for rho in partitions_of(n)
        })

    def __add__(self, other: TensorSymFunc) -> TensorSymFunc:
        out = dict(self.terms)
        for k, c in _lift(other).terms.items():
            _accumulate(out, k, c)
        return TensorSymFunc(out)

    __radd__ = __add__

    def __neg__(self) -> TensorSymFunc:
        return TensorSymFunc({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> TensorSymFunc:
        return self + (-_lift(other))

    def __mul__(self, other) -> TensorSymFunc:
        other = _lift(other)
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                _accumulate(out, (_merge(a1, a2), _merge(b1, b2)), c1 * c2)
        return TensorSymFunc(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = TensorSymFunc.scalar(other)
        return isinstance(other, TensorSymFunc) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"TensorSymFunc({self.terms!r})"


def _lift(x) -> TensorSymFunc:
    return x if isinstance(x, TensorSymFunc) else TensorSymFunc.scalar(x)
