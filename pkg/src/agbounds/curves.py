"""Curve descriptions via two-point d-tables.

A curve enters the computation only through its genus, the period m of the
class of P - Q, and the two threshold tables d_pq / d_qp.  The Suzuki family
is built from closed forms; any other curve is supplied as a table file.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass


class CurveError(ValueError):
    """Raised for malformed or inconsistent curve data."""


@dataclass(frozen=True)
class CurveSpec:
    name: str
    genus: int
    period: int                # m: order of P - Q in the class group
    d_pq: tuple               # d_pq[a] = threshold degree for membership in Gamma_Q
    d_qp: tuple               # same with the roles of P and Q exchanged
    suzuki_q0: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "d_pq", tuple(int(v) for v in self.d_pq))
        object.__setattr__(self, "d_qp", tuple(int(v) for v in self.d_qp))

    def swapped(self) -> "CurveSpec":
        """The same curve with the roles of P and Q exchanged."""
        return CurveSpec(self.name + " (P<->Q)", self.genus, self.period,
                         self.d_qp, self.d_pq, self.suzuki_q0)

    @property
    def is_point_symmetric(self) -> bool:
        return self.d_pq == self.d_qp


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def make_suzuki_curve(q0: int) -> CurveSpec:
    """Build the CurveSpec of the Suzuki curve with parameter q0.

    The d-table is filled by enumerating the lattice points |a|+|b| <= q0;
    each residue of the period must be hit exactly once, which is enforced
    rather than assumed.
    """
    if q0 < 2:
        raise CurveError(f"invalid parameter: q0 must be >= 2, got {q0}")
    if not _is_power_of_two(q0):
        warnings.warn(f"q0={q0} is not a power of 2; the table is synthetic, "
                      "not an actual Suzuki curve", stacklevel=2)
    q = 2 * q0 * q0
    g = q0 * (q - 1)
    m = q + 2 * q0 + 1
    d = [None] * m
    for a in range(-q0, q0 + 1):
        for b in range(-(q0 - abs(a)), q0 - abs(a) + 1):
            k = (a * (q0 + 1) + b * q0 - q0 * (q0 + 1)) % m
            if d[k] is not None:
                raise CurveError(f"internal consistency failure: residue {k} "
                                 f"assigned twice by the (a,b) enumeration")
            d[k] = (q0 - a) * (q - 1)
    if any(v is None for v in d):
        raise CurveError("internal consistency failure: (a,b) enumeration "
                         "left residues uncovered")
    return CurveSpec(name=f"suzuki-q0={q0}", genus=g, period=m,
                     d_pq=tuple(d), d_qp=tuple(d), suzuki_q0=q0)


def suzuki_d_closed_form(q0: int, k: int) -> int:
    """Single d-value by repeated division, equivalent to the table form."""
    if q0 < 2:
        raise CurveError(f"invalid parameter: q0 must be >= 2, got {q0}")
    q = 2 * q0 * q0
    m = q + 2 * q0 + 1
    t = (k - 1) % m
    q1, r1 = divmod(t, 2 * q0 + 1)
    q2, r2 = divmod(r1, q0 + 1)
    return (q - 1) * (2 * q0 - q1 - q2 - r2)


def gap_count(d_table, g_hint=None) -> int:
    """Number of j >= 0 with j < d[j mod m].  Finite since d is bounded."""
    m = len(d_table)
    top = max(d_table, default=0)
    return sum(1 for j in range(top) if j < d_table[j % m])


def validate_curve(spec: CurveSpec) -> list:
    """Check all CurveSpec invariants; returns a list of violations."""
    problems = []
    m, g = spec.period, spec.genus
    if m < 1:
        return [f"invalid period: m={m}"]
    if g < 0:
        problems.append(f"invalid genus: g={g}")
    for label, tab in (("d_pq", spec.d_pq), ("d_qp", spec.d_qp)):
        if len(tab) != m:
            return problems + [f"table length mismatch: len({label})={len(tab)}, m={m}"]
    for label, tab in (("d_pq", spec.d_pq), ("d_qp", spec.d_qp)):
        if tab[0] != 0:
            problems.append(f"{label}[0] = {tab[0]}, expected 0")
        for idx, v in enumerate(tab):
            if not 0 <= v <= 2 * g:
                problems.append(f"{label}[{idx}] = {v} outside [0, 2g] = [0, {2*g}]")
    # duality: d_pq(a) = a+b  <=>  d_qp(b) = a+b, checked at realized values
    for a in range(m):
        s = spec.d_pq[a]
        if spec.d_qp[(s - a) % m] != s:
            problems.append(f"duality violated at d_pq[{a}] = {s}")
    for b in range(m):
        s = spec.d_qp[b]
        if spec.d_pq[(s - b) % m] != s:
            problems.append(f"duality violated at d_qp[{b}] = {s}")
    for label, tab in (("d_pq", spec.d_pq), ("d_qp", spec.d_qp)):
        n_gaps = gap_count(tab)
        if n_gaps != g:
            problems.append(f"gap count of {label} is {n_gaps}, expected g = {g}")
    return problems


def save_curve(spec: CurveSpec, path) -> None:
    doc = {
        "name": spec.name,
        "g": spec.genus,
        "m": spec.period,
        "d_pq": list(spec.d_pq),
        "d_qp": list(spec.d_qp),
    }
    if spec.suzuki_q0 is not None:
        doc["suzuki_q0"] = spec.suzuki_q0
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_curve(path) -> CurveSpec:
    """Load and hard-validate a curve file."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CurveError(f"malformed curve file {path}: {exc}") from exc
    for key in ("name", "g", "m", "d_pq", "d_qp"):
        if key not in doc:
            raise CurveError(f"curve file {path} missing field '{key}'")
    if doc["m"] < 1:
        raise CurveError(f"invalid period: m={doc['m']}")
    for key in ("d_pq", "d_qp"):
        if len(doc[key]) != doc["m"]:
            raise CurveError(f"table length mismatch: len({key})={len(doc[key])}, "
                             f"m={doc['m']}")
    spec = CurveSpec(name=doc["name"], genus=doc["g"], period=doc["m"],
                     d_pq=tuple(doc["d_pq"]), d_qp=tuple(doc["d_qp"]),
                     suzuki_q0=doc.get("suzuki_q0"))
    problems = validate_curve(spec)
    if problems:
        raise CurveError(f"invalid curve in {path}: " + "; ".join(problems))
    return spec
