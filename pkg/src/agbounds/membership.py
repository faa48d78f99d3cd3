"""Membership tests for two-point divisor classes.

Everything reduces to d-table lookups: a class (deg, jq) lies in Gamma_Q
exactly when deg reaches the threshold d_pq[jq], and in Gamma_P when deg
reaches d_qp at the P-residue (deg - jq) mod m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveSpec


@dataclass(frozen=True)
class DivisorClass:
    """A two-point divisor class: total degree and Q-coefficient residue."""
    deg: int
    jq: int

    def sub(self, other: "DivisorClass", m: int) -> "DivisorClass":
        return DivisorClass(self.deg - other.deg, (self.jq - other.jq) % m)


def in_gamma_q(curve: CurveSpec, a: DivisorClass) -> bool:
    return a.deg >= curve.d_pq[a.jq % curve.period]


def in_gamma_p(curve: CurveSpec, a: DivisorClass) -> bool:
    return a.deg >= curve.d_qp[(a.deg - a.jq) % curve.period]


def is_effective_class(curve: CurveSpec, a: DivisorClass) -> bool:
    """Whether the class contains an effective divisor.

    Strips copies of Q one at a time; each subtraction lowers the degree,
    and Gamma_Q has no class of negative degree, so k <= max(deg, 0).
    """
    m = curve.period
    return any(in_gamma_q(curve, DivisorClass(a.deg - k, (a.jq - k) % m))
               for k in range(max(a.deg, 0) + 1))


def in_delta_p(curve: CurveSpec, c: DivisorClass, a: DivisorClass) -> bool:
    """A has no base point at P while A - C does."""
    return in_gamma_p(curve, a) and not in_gamma_p(curve, a.sub(c, curve.period))


def in_delta_q(curve: CurveSpec, c: DivisorClass, a: DivisorClass) -> bool:
    return in_gamma_q(curve, a) and not in_gamma_q(curve, a.sub(c, curve.period))
