"""Truncated power series with MultiPoly coefficients.

A series knows its truncation order; coefficients past it are unknown and
reading them raises :class:`TruncationError` rather than returning zero.
"""
from __future__ import annotations

from typing import Sequence

from ..errors import DomainError, TruncationError, UsageError
from .poly import MultiPoly, VarTable


class PowerSeries:
    __slots__ = ("vars", "coeffs")

    def __init__(self, vars: VarTable, coeffs: Sequence[MultiPoly | int], order: int | None = None):
        coeffs = [c if isinstance(c, MultiPoly) else MultiPoly.const(vars, c) for c in coeffs]
        for c in coeffs:
            if c.vars != vars:
                raise UsageError("series coefficient over a different variable table")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise UsageError("series order must be nonnegative")
        zero = MultiPoly.zero(vars)
        coeffs = coeffs[: order + 1] + [zero] * (order + 1 - len(coeffs))
        self.vars = vars
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, vars: VarTable, order: int) -> PowerSeries:
        return cls(vars, [1], order)

    @classmethod
    def geometric(cls, vars: VarTable, ratio: MultiPoly, order: int) -> PowerSeries:
        """1 + r T + r^2 T^2 + ... = 1/(1 - r T)."""
        out = [MultiPoly.const(vars, 1)]
        for _ in range(order):
            out.append(out[-1] * ratio)
        return cls(vars, out, order)

    def __getitem__(self, i: int) -> MultiPoly:
        if i < 0:
            raise IndexError(i)
        if i > self.order:
            raise TruncationError(f"coefficient T^{i} is beyond truncation order {self.order}")
        return self.coeffs[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.vars == other.vars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(c.render() for c in self.coeffs)
        return f"PowerSeries([{body}], order={self.order})"

    def _check(self, other: PowerSeries) -> None:
        if self.vars != other.vars:
            raise UsageError("series over different variable tables")

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise TruncationError(f"cannot extend series of order {self.order} to {order}")
        return PowerSeries(self.vars, self.coeffs[: order + 1], order)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        self._check(other)
        n = min(self.order, other.order)
        return PowerSeries(self.vars, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> PowerSeries:
        return PowerSeries(self.vars, [-c for c in self.coeffs], self.order)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        return self + (-other)

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, MultiPoly)):
            return PowerSeries(self.vars, [c * other for c in self.coeffs], self.order)
        self._check(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = MultiPoly.zero(self.vars)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return PowerSeries(self.vars, out, n)

    __rmul__ = __mul__

    def invert(self) -> PowerSeries:
        c0 = self.coeffs[0]
        if not c0.is_unit_monomial():
            raise DomainError("series not invertible: constant term is not a unit")
        inv0 = c0.inverse_monomial()
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = MultiPoly.zero(self.vars)
            for i in range(1, k + 1):
                if self.coeffs[i] and out[k - i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-(acc * inv0))
        return PowerSeries(self.vars, out, self.order)

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return self.invert() ** (-k)
        result = PowerSeries.one(self.vars, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, factor: MultiPoly) -> PowerSeries:
        """Substitute T -> factor*T."""
        out, f = [], MultiPoly.const(self.vars, 1)
        for c in self.coeffs:
            out.append(c * f)
            f = f * factor
        return PowerSeries(self.vars, out, self.order)

    def at_minus_t(self) -> PowerSeries:
        return PowerSeries(self.vars, [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)], self.order)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c.is_zero() for c in self.coeffs[1:])

    def degree(self) -> float:
        """Index of the last nonzero known coefficient (-inf for the zero series)."""
        for i in range(self.order, -1, -1):
            if self.coeffs[i]:
                return i
        return float("-inf")


def series_arith(a: PowerSeries, b: PowerSeries, op: str) -> PowerSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown series operation {op!r}")


def series_invert(a: PowerSeries) -> PowerSeries:
    return a.invert()
