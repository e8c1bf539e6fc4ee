"""Local signatures of fiber germs and the global signature formula.

A fiber germ carries a value of the relevant Meyer function on its lifted
monodromy plus the signature of a fiber neighbourhood; their sum is the
local signature. Over a closed base the local signatures of the singular
germs add up to the signature of the total space, which is what
``check_fibration`` verifies and ``solve_unknown_germ`` inverts.

The built-in germ table covers the genus-4 rank-4 families (names under
"R4/") and the genus-5 non-trigonal family (names under "NT5/").
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import (
    IncompleteLedger,
    InvalidInput,
    SmoothGermNonzero,
    UnknownName,
    ZeroOrManyUnknowns,
)

BASES = ("disk", "P1")


@dataclass(frozen=True)
class ComplexSurfaceData:
    """Holomorphic invariants of a complex surface fibered in curves."""

    chi_O: int
    K2: int
    fiber_genus: int
    base: str = "P1"

    def __post_init__(self):
        if self.fiber_genus < 2:
            raise InvalidInput(f"fiber genus must be >= 2, got {self.fiber_genus}")
        if self.base not in BASES:
            raise InvalidInput(f"base must be one of {BASES}, got {self.base!r}")


def surface_topology(data: ComplexSurfaceData) -> tuple[int, int]:
    """(topological Euler characteristic, signature) from (chi_O, K^2).

    Noether: chi_O = (K^2 + chi_top) / 12; Hirzebruch: Sign = (K^2 - 2 chi_top)/3.
    Jointly: chi_top = 12 chi_O - K^2 and Sign = K^2 - 8 chi_O.
    """
    return 12 * data.chi_O - data.K2, data.K2 - 8 * data.chi_O


def holomorphic_from_topology(chi_top: int, sign: int) -> tuple[int, int]:
    """Invert surface_topology: recover (chi_O, K^2) from (chi_top, Sign)."""
    if (chi_top + sign) % 4 != 0:
        raise InvalidInput(f"chi_top + sign = {chi_top + sign} is not divisible by 4")
    chi_o = (chi_top + sign) // 4
    return chi_o, 2 * chi_top + 3 * sign


def fiber_count(chi_top: int, g: int, base_chi: int = 2) -> int:
    """Euler count of singular fiber germs: chi_top - base_chi * (2 - 2g).

    Counts germs weighted by their Euler contribution; each one-node germ
    contributes exactly 1, topologically trivial germs contribute 0.
    """
    if g < 2:
        raise InvalidInput(f"fiber genus must be >= 2, got {g}")
    return chi_top - base_chi * (2 - 2 * g)


@dataclass(frozen=True)
class FiberGerm:
    """A named fiber germ with its Meyer value and neighbourhood signature."""

    name: str
    phi_value: Fraction
    nbhd_sign: int
    smooth: bool = False

    @property
    def sigma(self) -> Fraction:
        return self.phi_value + self.nbhd_sign


def germ_sigma(phi_value: Fraction | int | str, nbhd_sign: int) -> Fraction:
    """Local signature: Meyer value of the lifted monodromy plus the
    signature of a fiber neighbourhood."""
    return Fraction(phi_value) + nbhd_sign


def smooth_germ_check(germ: FiberGerm) -> bool:
    """For a germ flagged smooth, assert both contributions vanish.

    Returns True when the smooth contract holds, False when the germ is not
    flagged smooth (nothing to check). A flagged germ with a nonzero entry
    raises SmoothGermNonzero.
    """
    if not germ.smooth:
        return False
    if germ.phi_value != 0 or germ.nbhd_sign != 0:
        raise SmoothGermNonzero(
            f"{germ.name}: phi = {germ.phi_value}, nbhd = {germ.nbhd_sign}"
        )
    return True


_GERM_TABLE: tuple[tuple[str, Fraction, int], ...] = (
    ("R4/F_I", Fraction(-9, 17), 0),
    ("R4/F_31", Fraction(28, 17), -1),
    ("R4/F_22", Fraction(36, 17), -1),
    ("R4/F_Rprime", Fraction(4, 17), 0),
    ("R4/F_R", Fraction(2, 17), 0),
    ("NT5/F_I", Fraction(-1, 2), 0),
)


def ledger() -> tuple[FiberGerm, ...]:
    """The built-in germ table.

    Genus 4 (rank-4 fibers): the one-node germ F_I, the genus (3,1) and
    (2,2) one-point unions F_31 and F_22, and the rank-3-quadric germs
    F_Rprime and F_R (topologically trivial, nonzero local signature).
    Genus 5 (non-trigonal fibers): the one-node germ F_I.
    """
    return tuple(FiberGerm(name, phi, nbhd) for name, phi, nbhd in _GERM_TABLE)


def germ(name: str) -> FiberGerm:
    for entry in ledger():
        if entry.name == name:
            return entry
    raise UnknownName(f"unknown germ {name!r}")


@dataclass(frozen=True)
class LedgerEntry:
    """One germ type in a fibration, with multiplicity; phi None = unknown."""

    name: str
    phi: Fraction | None
    nbhd_sign: int
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise InvalidInput(f"count must be >= 1, got {self.count}")

    @property
    def sigma(self) -> Fraction | None:
        return None if self.phi is None else self.phi + self.nbhd_sign


@dataclass(frozen=True)
class FibrationLedger:
    """A fibration as its total signature plus a multiset of germ entries."""

    total_sign: int
    germs: tuple[LedgerEntry, ...]


@dataclass(frozen=True)
class FibrationReport:
    total_sign: int
    germ_sum: Fraction
    residual: Fraction

    @property
    def ok(self) -> bool:
        return self.residual == 0


def check_fibration(led: FibrationLedger) -> FibrationReport:
    """Compare the total signature against the sum of local signatures.

    A mismatch is reported as an exact residual, never raised.
    """
    total = Fraction(0)
    for entry in led.germs:
        if entry.sigma is None:
            raise IncompleteLedger(f"germ {entry.name!r} has unknown signature")
        total += entry.count * entry.sigma
    return FibrationReport(led.total_sign, total, led.total_sign - total)


def solve_unknown_germ(led: FibrationLedger) -> LedgerEntry:
    """Solve the global signature formula for the single unknown germ.

    Returns the entry with its phi filled in so that the ledger balances
    exactly.
    """
    unknowns = [e for e in led.germs if e.sigma is None]
    if len(unknowns) != 1:
        raise ZeroOrManyUnknowns(f"{len(unknowns)} unknown germs, need exactly 1")
    unknown = unknowns[0]
    known = sum(
        (e.count * e.sigma for e in led.germs if e.sigma is not None), Fraction(0)
    )
    sigma = Fraction(led.total_sign - known, unknown.count)
    return replace(unknown, phi=sigma - unknown.nbhd_sign)


def _parse_phi(value) -> Fraction | None:
    if value is None:
        return None
    if isinstance(value, bool):
        raise InvalidInput(f"bad phi value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad phi value {value!r}") from exc
    raise InvalidInput(f"bad phi value {value!r}")


def ledger_from_obj(obj) -> FibrationLedger:
    """Build a ledger from the JSON object layout:

    { "total_sign": int,
      "germs": [ { "name": str, "phi": "p/q" | null, "nbhd_sign": int,
                   "count": int } ] }

    "phi": null (or absent) marks the germ whose signature is to be solved;
    "nbhd_sign" defaults to 0 and "count" to 1.
    """
    if not isinstance(obj, dict):
        raise InvalidInput("ledger must be a JSON object")
    try:
        total = obj["total_sign"]
        raw_germs = obj["germs"]
    except KeyError as exc:
        raise InvalidInput(f"ledger is missing key {exc}") from exc
    if not isinstance(total, int) or isinstance(total, bool):
        raise InvalidInput(f"total_sign must be an integer, got {total!r}")
    if not isinstance(raw_germs, list):
        raise InvalidInput("germs must be a list")
    entries = []
    for item in raw_germs:
        if not isinstance(item, dict) or "name" not in item:
            raise InvalidInput(f"bad germ entry {item!r}")
        nbhd = item.get("nbhd_sign", 0)
        count = item.get("count", 1)
        if not isinstance(nbhd, int) or isinstance(nbhd, bool):
            raise InvalidInput(f"bad nbhd_sign {nbhd!r}")
        if not isinstance(count, int) or isinstance(count, bool):
            raise InvalidInput(f"bad count {count!r}")
        entries.append(
            LedgerEntry(str(item["name"]), _parse_phi(item.get("phi")), nbhd, count)
        )
    return FibrationLedger(total, tuple(entries))


def ledger_from_json(text: str) -> FibrationLedger:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad ledger JSON: {exc}") from exc
    return ledger_from_obj(obj)


def ledger_to_obj(led: FibrationLedger) -> dict:
    return {
        "total_sign": led.total_sign,
        "germs": [
            {
                "name": e.name,
                "phi": None if e.phi is None else str(e.phi),
                "nbhd_sign": e.nbhd_sign,
                "count": e.count,
            }
            for e in led.germs
        ],
    }


def ledger_to_json(led: FibrationLedger) -> str:
    return json.dumps(ledger_to_obj(led), indent=2) + "\n"
