"""Set-valued conjunction and implication, and adjointness verification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from posetres.poset import Poset, PosetError, bit
from posetres.properties import (
    PropertyReport,
    UnaryOp,
    Verdict,
    check_all,
    is_boolean,
    is_relatively_pseudocomplemented,
    relative_pseudocomplement,
    th1_premises,
    th3_premises,
)


class Variant(enum.Enum):
    TH1 = "th1"
    BOOLEAN = "boolean"
    PIECEWISE = "piecewise"
    RP = "rp"


class MissingUnaryOp(PosetError):
    pass


class NoPseudocomplement(PosetError):
    pass


class PremisesViolated(PosetError):
    def __init__(self, report: PropertyReport):
        failed = report.first_failure()
        super().__init__(f"{report.title} violated: {failed.describe() if failed else ''}")
        self.report = report


def _needs_unary(p: Poset, u: UnaryOp | None, v: Variant) -> None:
    if v is Variant.RP:
        return
    if u is None:
        raise MissingUnaryOp(f"variant {v.value} needs a unary operation")
    p.require_bounded()


def odot(p: Poset, u: UnaryOp | None, v: Variant, x: int, y: int) -> int:
    """``x ⊙ y`` as a mask."""
    _needs_unary(p, u, v)
    L, U = p.lower_cone, p.upper_cone
    if v is Variant.BOOLEAN or v is Variant.RP:
        return p.maximal(L(bit(x) | bit(y)))
    if v is Variant.PIECEWISE and p.leq(x, u(y)):
        return bit(p.least)
    return p.maximal(L(U(bit(x) | bit(u(y))) | bit(y)))


def arrow(p: Poset, u: UnaryOp | None, v: Variant, x: int, y: int) -> int:
    """``x → y`` as a mask."""
    _needs_unary(p, u, v)
    L, U = p.lower_cone, p.upper_cone
    if v is Variant.RP:
        r = relative_pseudocomplement(p, x, y)
        if r is None:
            raise NoPseudocomplement(f"{p.names[x]}*{p.names[y]} does not exist")
        return bit(r)
    if v is Variant.BOOLEAN:
        return p.minimal(U(bit(u(x)) | bit(y)))
    if v is Variant.PIECEWISE and p.leq(x, y):
        return bit(p.greatest)
    return p.minimal(U(L(bit(x) | bit(y)) | bit(u(x))))


@dataclass(frozen=True)
class SetValuedTable:
    """An ``n x n`` grid of element masks; ``entries[x][y]`` is ``x op y``."""

    kind: str  # "odot" or "arrow"
    poset: Poset
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, xy: tuple[int, int]) -> int:
        x, y = xy
        return self.entries[x][y]

    def cell(self, x: str, y: str) -> tuple[str, ...]:
        p = self.poset
        return p.labels(self.entries[p.index(x)][p.index(y)])

    def replace(self, x: int, y: int, value: int) -> SetValuedTable:
        rows = [list(r) for r in self.entries]
        rows[x][y] = value
        return SetValuedTable(self.kind, self.poset, tuple(tuple(r) for r in rows))

    def as_labels(self) -> list[list[tuple[str, ...]]]:
        return [[self.poset.labels(m) for m in row] for row in self.entries]


def premises(p: Poset, u: UnaryOp | None, v: Variant) -> PropertyReport:
    if v is Variant.RP:
        return is_relatively_pseudocomplemented(p)
    _needs_unary(p, u, v)
    if v is Variant.TH1:
        return th1_premises(p, u)
    if v is Variant.BOOLEAN:
        return is_boolean(p, u)
    return th3_premises(p, u)


def build_tables(
    p: Poset, u: UnaryOp | None, v: Variant, enforce_premises: bool = True
) -> tuple[SetValuedTable, SetValuedTable]:
    """Full ⊙ and → tables for variant ``v``.

    With ``enforce_premises`` the matching premise bundle must pass, otherwise
    :class:`PremisesViolated` carries the failing report.
    """
    v = Variant(v)
    if enforce_premises:
        report = premises(p, u, v)
        if not report.passed:
            raise PremisesViolated(report)
    n = p.n
    t_odot = tuple(tuple(odot(p, u, v, x, y) for y in range(n)) for x in range(n))
    t_arrow = tuple(tuple(arrow(p, u, v, x, y) for y in range(n)) for x in range(n))
    return SetValuedTable("odot", p, t_odot), SetValuedTable("arrow", p, t_arrow)


@dataclass(frozen=True)
class AdjointnessVerdict:
    holds: bool
    # (a, b, c, a⊙b <= c, a <= b→c) for the first violating triple
    counterexample: tuple[str, str, str, bool, bool] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.holds:
            return "left adjointness holds"
        a, b, c, lhs, rhs = self.counterexample
        return (f"left adjointness fails at a={a}, b={b}, c={c}: "
                f"(a⊙b <= c) is {lhs} but (a <= b→c) is {rhs}")


def verify_left_adjointness(
    p: Poset, t_odot: SetValuedTable, t_arrow: SetValuedTable
) -> AdjointnessVerdict:
    """Check ``a⊙b <= c  iff  a <= b→c`` for all triples, using set-wise ``<=``."""
    for a, b, c in product(range(p.n), repeat=3):
        lhs = p.set_leq(t_odot[a, b], bit(c))
        rhs = p.set_leq(bit(a), t_arrow[b, c])
        if lhs != rhs:
            names = p.names
            return AdjointnessVerdict(False, (names[a], names[b], names[c], lhs, rhs))
    return AdjointnessVerdict(True)


def verify_identity_suite(
    p: Poset,
    u: UnaryOp | None,
    v: Variant,
    tables: tuple[SetValuedTable, SetValuedTable],
) -> PropertyReport:
    """The identities each theorem asserts for its operations, checked entry by entry."""
    v = Variant(v)
    t_odot, t_arrow = tables
    B = [bit(i) for i in range(p.n)]
    one = p.greatest
    zero = p.least

    def eq(name, arity, lhs, rhs):
        return check_all(p, name, arity, lambda *xs: lhs(*xs) == rhs(*xs))

    def iff(name, lhs, rhs):
        return check_all(p, name, 2, lambda x, y: lhs(x, y) == rhs(x, y))

    unit = [
        eq("x⊙1=x", 1, lambda x: t_odot[x, one], lambda x: B[x]),
        eq("1⊙x=x", 1, lambda x: t_odot[one, x], lambda x: B[x]),
    ]
    idem = eq("x⊙x=x", 1, lambda x: t_odot[x, x], lambda x: B[x])
    comm = eq("x⊙y=y⊙x", 2, lambda x, y: t_odot[x, y], lambda x, y: t_odot[y, x])
    top_arrow = eq("1→x=x", 1, lambda x: t_arrow[one, x], lambda x: B[x])

    if v is Variant.RP:
        verdicts = unit + [
            comm, idem, top_arrow,
            iff("x→y=1 iff x<=y", lambda x, y: t_arrow[x, y] == B[one], p.leq),
        ]
        return PropertyReport("identities (relatively pseudocomplemented)", tuple(verdicts))

    to_zero = eq("x→0=x'", 1, lambda x: t_arrow[x, zero], lambda x: B[u(x)])
    if v is Variant.PIECEWISE:
        verdicts = unit + [
            to_zero, top_arrow,
            check_all(p, "x<=y' => x⊙y=0", 2,
                      lambda x, y: not p.leq(x, u(y)) or t_odot[x, y] == B[zero]),
            check_all(p, "x<=y => x→y=1", 2,
                      lambda x, y: not p.leq(x, y) or t_arrow[x, y] == B[one]),
        ]
        return PropertyReport("identities (piecewise)", tuple(verdicts))

    verdicts = unit + [
        idem,
        eq("x⊙0=0", 1, lambda x: t_odot[x, zero], lambda x: B[zero]),
        eq("0→x=0'", 1, lambda x: t_arrow[zero, x], lambda x: B[u(zero)]),
        to_zero,
        eq("x→x'=x'", 1, lambda x: t_arrow[x, u(x)], lambda x: B[u(x)]),
        top_arrow,
    ]
    if v is Variant.BOOLEAN:
        verdicts += [
            comm,
            iff("x⊙y=0 iff x<=y'", lambda x, y: t_odot[x, y] == B[zero],
                lambda x, y: p.leq(x, u(y))),
            iff("x→y=1 iff x<=y", lambda x, y: t_arrow[x, y] == B[one], p.leq),
        ]
        return PropertyReport("identities (Boolean)", tuple(verdicts))
    return PropertyReport("identities (general)", tuple(verdicts))


def entries_are_antichains(t: SetValuedTable) -> Verdict:
    p = t.poset
    for x, y in product(range(p.n), repeat=2):
        m = t[x, y]
        if p.maximal(m) != m:
            return Verdict(f"{t.kind} entries are antichains", False, (p.names[x], p.names[y]))
    return Verdict(f"{t.kind} entries are antichains", True)


def empty_entries(t: SetValuedTable) -> list[tuple[int, int]]:
    return [(x, y) for x, row in enumerate(t.entries) for y, m in enumerate(row) if not m]

