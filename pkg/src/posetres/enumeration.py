"""Exhaustive enumeration of small posets and unary maps, and premise sweeps.

Posets are generated by backtracking over relation matrices with the order
axioms as pruning. Up to isomorphism only naturally labeled relations are
generated (``i <= j`` implies ``i <= j`` as integers), which still meets
every isomorphism class, and duplicates are removed by canonical form.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

from posetres.poset import Poset, bit, members
from posetres.properties import (
    UnaryOp,
    check_unary,
    is_boolean,
    is_relatively_pseudocomplemented,
    is_strongly_modular,
    th1_premises,
    th3_premises,
)
from posetres.residuation import Variant, build_tables, verify_identity_suite, verify_left_adjointness

MAX_ENUM_SIZE = 7
MAX_STORED_FAILURES = 100


class SizeBoundExceeded(ValueError):
    pass


class Constraint(enum.Enum):
    NONE = "none"
    INVOLUTION = "involution"
    ZERO_ONE_SWAP = "zero_one_swap"


class Premise(enum.Enum):
    TH1 = "th1"
    TH3 = "th3"
    BOOLEAN = "boolean"
    RP = "rp"


def _check_size(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_SIZE:
        raise SizeBoundExceeded(f"size must be between 1 and {MAX_ENUM_SIZE}, got {n}")


def _names(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(n))


def poset_from_up(up: list[int] | tuple[int, ...]) -> Poset:
    n = len(up)
    down = tuple(sum(bit(j) for j in range(n) if up[j] >> i & 1) for i in range(n))
    return Poset._make(_names(n), down, tuple(up))


def _labeled_ups(n: int) -> Iterator[list[int]]:
    """Every partial order on ``range(n)`` as rows of ``up`` masks."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    up = [bit(i) for i in range(n)]

    def consistent(i: int, j: int) -> bool:
        # all triples whose last pair (lexicographically) is (i, j) are now fully assigned
        for k in range(i):
            r = [[up[a] >> b & 1 for b in (k, i, j)] for a in (k, i, j)]
            for a in range(3):
                for b in range(3):
                    for c in range(3):
                        if r[a][b] and r[b][c] and not r[a][c]:
                            return False
        return True

    def rec(t: int) -> Iterator[list[int]]:
        if t == len(pairs):
            yield list(up)
            return
        i, j = pairs[t]
        for choice in (0, 1, 2):  # incomparable, i < j, j < i
            if choice == 1:
                up[i] |= bit(j)
            elif choice == 2:
                up[j] |= bit(i)
            if consistent(i, j):
                yield from rec(t + 1)
            up[i] &= ~bit(j)
            up[j] &= ~bit(i)

    yield from rec(0)


def _natural_ups(n: int) -> Iterator[list[int]]:
    """Partial orders whose order is contained in the integer order."""
    up = [bit(i) for i in range(n)]

    def rec(i: int) -> Iterator[list[int]]:
        # choose row i from the rows below it, processed from the top element down
        if i < 0:
            yield list(up)
            return
        above = range(i + 1, n)
        for chosen in product((0, 1), repeat=n - 1 - i):
            row = bit(i)
            for j, c in zip(above, chosen):
                if c:
                    row |= bit(j)
            # upward closed: for j in row, up[j] must be within row
            if all(up[j] & ~row == 0 for j in members(row & ~bit(i))):
                up[i] = row
                yield from rec(i - 1)
        up[i] = bit(i)

    yield from rec(n - 1)


def _invariant(up: tuple[int, ...] | list[int], down: list[int], i: int) -> tuple[int, int]:
    return (bin(down[i]).count("1"), bin(up[i]).count("1"))


def _permuted(up, order: tuple[int, ...]) -> tuple[int, ...]:
    """Rows of ``up`` after renaming ``order[k] -> k``."""
    pos = {v: k for k, v in enumerate(order)}
    out = []
    for v in order:
        row = 0
        for j in members(up[v]):
            row |= bit(pos[j])
        out.append(row)
    return tuple(out)


def canonical_form(p: Poset) -> tuple[int, ...]:
    """Canonical ``up`` rows: the lexicographic minimum over invariant-respecting relabelings.

    Vertices are first sorted by ``(|down-set|, |up-set|)``; only permutations
    inside each invariant class are tried. That candidate set is itself
    isomorphism invariant, so the minimum is a canonical form.
    """
    n = p.n
    up = p.up
    down = list(p.down)
    classes: dict[tuple[int, int], list[int]] = {}
    for i in range(n):
        classes.setdefault(_invariant(up, down, i), []).append(i)
    blocks = [classes[k] for k in sorted(classes)]
    best = None
    for choice in product(*(permutations(b) for b in blocks)):
        order = tuple(v for block in choice for v in block)
        cand = _permuted(up, order)
        if best is None or cand < best:
            best = cand
    return best


def canonical_form_bruteforce(p: Poset) -> tuple[int, ...]:
    """Lexicographic minimum over all ``n!`` relabelings."""
    return min(_permuted(p.up, order) for order in permutations(range(p.n)))


def enumerate_posets(n: int, up_to_iso: bool = True) -> Iterator[Poset]:
    """All partial orders on ``n`` points, or one per isomorphism class."""
    _check_size(n)
    if not up_to_iso:
        for up in _labeled_ups(n):
            yield poset_from_up(up)
        return
    seen = set()
    for up in _natural_ups(n):
        key = canonical_form(poset_from_up(up))
        if key not in seen:
            seen.add(key)
            yield poset_from_up(key)


def enumerate_unary_ops(p: Poset, constraint: Constraint = Constraint.NONE) -> Iterator[UnaryOp]:
    constraint = Constraint(constraint)
    n = p.n
    if constraint is Constraint.NONE:
        for image in product(range(n), repeat=n):
            yield UnaryOp(image)
    elif constraint is Constraint.ZERO_ONE_SWAP:
        zero, one = p.require_bounded()
        free = [i for i in range(n) if i not in (zero, one)]
        for values in product(range(n), repeat=len(free)):
            image = [0] * n
            image[zero], image[one] = one, zero
            for i, v in zip(free, values):
                image[i] = v
            yield UnaryOp(tuple(image))
    else:
        yield from _involutions(n)


def _involutions(n: int) -> Iterator[UnaryOp]:
    image = [-1] * n

    def rec(i: int) -> Iterator[UnaryOp]:
        while i < n and image[i] >= 0:
            i += 1
        if i == n:
            yield UnaryOp(tuple(image))
            return
        for j in range(i, n):
            if image[j] >= 0:
                continue
            image[i], image[j] = j, i
            yield from rec(i + 1)
            image[i] = image[j] = -1

    yield from rec(0)


@dataclass
class SweepReport:
    premise: Premise
    n_max: int
    models_examined: int = 0
    models_passing_premises: int = 0
    # (poset up-rows, unary image or None, detail)
    adjointness_failures: list[tuple] = field(default_factory=list)
    identity_failures: list[tuple] = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.adjointness_failures and not self.identity_failures

    def merge(self, other: SweepReport) -> SweepReport:
        out = SweepReport(self.premise, max(self.n_max, other.n_max))
        out.models_examined = self.models_examined + other.models_examined
        out.models_passing_premises = self.models_passing_premises + other.models_passing_premises
        out.adjointness_failures = (self.adjointness_failures + other.adjointness_failures)[
            :MAX_STORED_FAILURES]
        out.identity_failures = (self.identity_failures + other.identity_failures)[
            :MAX_STORED_FAILURES]
        out.runtime_seconds = self.runtime_seconds + other.runtime_seconds
        return out

    def summary(self) -> str:
        return (f"sweep {self.premise.value} n<={self.n_max}: "
                f"{self.models_examined} models examined, "
                f"{self.models_passing_premises} satisfy the premises, "
                f"{len(self.adjointness_failures)} adjointness failures, "
                f"{len(self.identity_failures)} identity failures "
                f"({self.runtime_seconds:.2f}s)")


_VARIANT = {
    Premise.TH1: Variant.TH1,
    Premise.TH3: Variant.PIECEWISE,
    Premise.BOOLEAN: Variant.BOOLEAN,
    Premise.RP: Variant.RP,
}


def _models(premise: Premise, n_max: int, up_to_iso: bool) -> Iterator[tuple[Poset, UnaryOp | None]]:
    for n in range(1, n_max + 1):
        for p in enumerate_posets(n, up_to_iso):
            if premise is Premise.RP:
                yield p, None
            elif p.bounded:
                for u in enumerate_unary_ops(p, Constraint.ZERO_ONE_SWAP):
                    yield p, u


def _premises_hold(premise: Premise, p: Poset, u: UnaryOp | None) -> bool:
    if premise is Premise.TH1:
        return th1_premises(p, u).passed
    if premise is Premise.TH3:
        return th3_premises(p, u).passed
    if premise is Premise.BOOLEAN:
        return is_boolean(p, u).passed
    return is_relatively_pseudocomplemented(p).passed


def sweep(premise: Premise, n_max: int, up_to_iso: bool = True) -> SweepReport:
    """Check adjointness and the identity suite on every model satisfying ``premise``."""
    premise = Premise(premise)
    _check_size(n_max)
    variant = _VARIANT[premise]
    report = SweepReport(premise, n_max)
    start = time.perf_counter()
    for p, u in _models(premise, n_max, up_to_iso):
        report.models_examined += 1
        if not _premises_hold(premise, p, u):
            continue
        report.models_passing_premises += 1
        tables = build_tables(p, u, variant, enforce_premises=False)
        image = u.image if u is not None else None
        verdict = verify_left_adjointness(p, *tables)
        if not verdict.holds and len(report.adjointness_failures) < MAX_STORED_FAILURES:
            report.adjointness_failures.append((p.up, image, verdict.counterexample))
        suite = verify_identity_suite(p, u, variant, tables)
        if not suite.passed and len(report.identity_failures) < MAX_STORED_FAILURES:
            report.identity_failures.append((p.up, image, suite.first_failure().describe()))
    report.runtime_seconds = time.perf_counter() - start
    return report


@dataclass
class CorollaryReport:
    n_max: int
    models_examined: int = 0
    qualifying_models: int = 0
    failures: list[tuple] = field(default_factory=list)


def check_corollary(n_max: int, up_to_iso: bool = True) -> CorollaryReport:
    """Every bounded, complemented, strongly modular model must satisfy the general premises."""
    _check_size(n_max)
    report = CorollaryReport(n_max)
    for n in range(1, n_max + 1):
        for p in enumerate_posets(n, up_to_iso):
            if not p.bounded or not is_strongly_modular(p).passed:
                continue
            for u in enumerate_unary_ops(p, Constraint.ZERO_ONE_SWAP):
                report.models_examined += 1
                unary = check_unary(p, u)
                if not (unary["complemented L(x,x')=0"] and unary["complemented U(x,x')=1"]):
                    continue
                report.qualifying_models += 1
                if not th1_premises(p, u).passed and len(report.failures) < MAX_STORED_FAILURES:
                    report.failures.append((p.up, u.image))
    return report

