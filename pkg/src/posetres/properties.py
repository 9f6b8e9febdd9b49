"""Structural predicates and premise bundles over finite posets.

Every check is exhaustive over all pairs or triples of elements. A failing
verdict carries the offending elements and, for identities, both evaluated
sides so the discrepancy can be re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Mapping

from posetres.poset import Poset, bit, members


@dataclass(frozen=True)
class UnaryOp:
    """A total map ``x -> x'`` on the carrier, stored by index."""

    image: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __len__(self) -> int:
        return len(self.image)

    @classmethod
    def from_labels(cls, p: Poset, mapping: Mapping[str, str]) -> UnaryOp:
        missing = [x for x in p.names if x not in mapping]
        if missing:
            raise ValueError(f"unary map is not total, missing {missing}")
        return cls(tuple(p.index(mapping[x]) for x in p.names))

    def as_labels(self, p: Poset) -> dict[str, str]:
        return {p.names[i]: p.names[j] for i, j in enumerate(self.image)}


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    witness: tuple[str, ...] | None = None
    lhs: tuple[str, ...] | None = None
    rhs: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if not self.passed:
            out["witness"] = list(self.witness or ())
            if self.lhs is not None:
                out["lhs"] = list(self.lhs)
                out["rhs"] = list(self.rhs)
        return out

    def describe(self) -> str:
        if self.passed:
            return f"pass  {self.name}"
        text = f"FAIL  {self.name}  at ({', '.join(self.witness or ())})"
        if self.lhs is not None:
            text += f": {{{','.join(self.lhs)}}} vs {{{','.join(self.rhs)}}}"
        return text


@dataclass(frozen=True)
class PropertyReport:
    """Named verdicts in evaluation order."""

    title: str
    verdicts: tuple[Verdict, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(v.name == name for v in self.verdicts)

    def names(self) -> list[str]:
        return [v.name for v in self.verdicts]

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def first_failure(self) -> Verdict | None:
        return next((v for v in self.verdicts if not v.passed), None)

    def merged(self, other: PropertyReport, title: str | None = None) -> PropertyReport:
        return PropertyReport(title or self.title, self.verdicts + other.verdicts)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }

    def describe(self) -> str:
        head = f"{self.title}: {'pass' if self.passed else 'FAIL'}"
        return "\n".join([head] + ["  " + v.describe() for v in self.verdicts])


# generic exhaustive checkers


def check_identity(
    p: Poset,
    name: str,
    arity: int,
    lhs: Callable[..., int],
    rhs: Callable[..., int],
    when: Callable[..., bool] | None = None,
) -> Verdict:
    """``lhs(*xs) == rhs(*xs)`` for every tuple of indices (restricted by ``when``)."""
    for xs in product(range(p.n), repeat=arity):
        if when is not None and not when(*xs):
            continue
        left, right = lhs(*xs), rhs(*xs)
        if left != right:
            return Verdict(name, False, tuple(p.names[i] for i in xs), p.labels(left), p.labels(right))
    return Verdict(name, True)


def check_inclusion(
    p: Poset,
    name: str,
    arity: int,
    small: Callable[..., int],
    big: Callable[..., int],
    when: Callable[..., bool] | None = None,
) -> Verdict:
    """``small(*xs) ⊆ big(*xs)`` for every admissible tuple of indices."""
    for xs in product(range(p.n), repeat=arity):
        if when is not None and not when(*xs):
            continue
        s, b = small(*xs), big(*xs)
        if s & ~b:
            return Verdict(name, False, tuple(p.names[i] for i in xs), p.labels(s), p.labels(b))
    return Verdict(name, True)


def check_all(p: Poset, name: str, arity: int, pred: Callable[..., bool]) -> Verdict:
    for xs in product(range(p.n), repeat=arity):
        if not pred(*xs):
            return Verdict(name, False, tuple(p.names[i] for i in xs))
    return Verdict(name, True)


def _cones(p: Poset):
    L, U = p.lower_cone, p.upper_cone
    B = [bit(i) for i in range(p.n)]
    return L, U, B


# unary operations


def check_unary(p: Poset, u: UnaryOp, complementation: bool = True) -> PropertyReport:
    """Involution, antitonicity, complementation and the 0/1 swap laws of ``u``.

    The last two need a bounded poset; pass ``complementation=False`` to skip
    them on unbounded input.
    """
    if len(u) != p.n:
        raise ValueError("unary operation does not match the carrier size")
    L, U, B = _cones(p)
    verdicts = [
        check_identity(p, "involution x''=x", 1, lambda x: B[u(u(x))], lambda x: B[x]),
        check_all(p, "antitone x<=y => y'<=x'", 2,
                  lambda x, y: not p.leq(x, y) or p.leq(u(y), u(x))),
    ]
    if complementation:
        zero, one = p.require_bounded()
        verdicts += [
            check_identity(p, "complemented L(x,x')=0", 1,
                           lambda x: L(B[x] | B[u(x)]), lambda x: B[zero]),
            check_identity(p, "complemented U(x,x')=1", 1,
                           lambda x: U(B[x] | B[u(x)]), lambda x: B[one]),
            Verdict("0'=1", u(zero) == one, None if u(zero) == one else (p.names[zero],)),
            Verdict("1'=0", u(one) == zero, None if u(one) == zero else (p.names[one],)),
        ]
    return PropertyReport("unary operation", tuple(verdicts))


def is_complemented(p: Poset, u: UnaryOp) -> PropertyReport:
    report = check_unary(p, u)
    keep = ("complemented L(x,x')=0", "complemented U(x,x')=1")
    return PropertyReport("complemented", tuple(report[k] for k in keep))


# distributivity and modularity

DIST_U = "U(L(x,y),z)=UL(U(x,z),U(y,z))"
DIST_L = "L(U(x,y),z)=LU(L(x,z),L(y,z))"


def is_distributive(p: Poset) -> PropertyReport:
    """Both distributive LU-identities, each over all triples.

    The two identities are equivalent, so a split verdict means a bug in the
    cone operators and raises ``AssertionError``.
    """
    L, U, B = _cones(p)
    upper = check_identity(p, DIST_U, 3,
                           lambda x, y, z: U(L(B[x] | B[y]) | B[z]),
                           lambda x, y, z: U(L(U(B[x] | B[z]) | U(B[y] | B[z]))))
    lower = check_identity(p, DIST_L, 3,
                           lambda x, y, z: L(U(B[x] | B[y]) | B[z]),
                           lambda x, y, z: L(U(L(B[x] | B[z]) | L(B[y] | B[z]))))
    if upper.passed != lower.passed:
        raise AssertionError("the two distributivity identities disagree")
    return PropertyReport("distributive", (upper, lower))


MODULAR = "x<=z => L(U(x,y),z)=LU(x,L(y,z))"
SMOD_1 = "L(U(x,y),U(x,z))=LU(x,L(y,U(x,z)))"
SMOD_2 = "L(U(L(x,z),y),z)=LU(L(x,z),L(y,z))"


def is_modular(p: Poset) -> PropertyReport:
    L, U, B = _cones(p)
    v = check_identity(p, MODULAR, 3,
                       lambda x, y, z: L(U(B[x] | B[y]) | B[z]),
                       lambda x, y, z: L(U(B[x] | L(B[y] | B[z]))),
                       when=lambda x, y, z: p.leq(x, z))
    return PropertyReport("modular", (v,))


def is_strongly_modular(p: Poset) -> PropertyReport:
    L, U, B = _cones(p)
    first = check_identity(p, SMOD_1, 3,
                           lambda x, y, z: L(U(B[x] | B[y]) | U(B[x] | B[z])),
                           lambda x, y, z: L(U(B[x] | L(B[y] | U(B[x] | B[z])))))
    second = check_identity(p, SMOD_2, 3,
                            lambda x, y, z: L(U(L(B[x] | B[z]) | B[y]) | B[z]),
                            lambda x, y, z: L(U(L(B[x] | B[z]) | L(B[y] | B[z]))))
    return PropertyReport("strongly modular", (first, second))


def is_boolean(p: Poset, u: UnaryOp) -> PropertyReport:
    p.require_bounded()
    return is_distributive(p).merged(is_complemented(p, u), "Boolean")


# premise bundles of the residuation theorems

TH1_ONE = "1'=0"
TH1_L = "L(U(L(x,y),y'),y)=L(x,y)"
TH1_U = "U(L(U(x,y'),y),y')=U(x,y')"


def th1_premises(p: Poset, u: UnaryOp) -> PropertyReport:
    zero, one = p.require_bounded()
    L, U, B = _cones(p)
    verdicts = (
        Verdict(TH1_ONE, u(one) == zero, None if u(one) == zero else (p.names[one],)),
        check_identity(p, TH1_L, 2,
                       lambda x, y: L(U(L(B[x] | B[y]) | B[u(y)]) | B[y]),
                       lambda x, y: L(B[x] | B[y])),
        check_identity(p, TH1_U, 2,
                       lambda x, y: U(L(U(B[x] | B[u(y)]) | B[y]) | B[u(y)]),
                       lambda x, y: U(B[x] | B[u(y)])),
    )
    return PropertyReport("premises of the general theorem", verdicts)


TH3_ZERO = "0'=1"
TH3_ONE = "1'=0"
TH3_NOT_ONE = "x'!=1 for x!=0"
TH3_L = "L(U(L(x,y),x'),x)=LU(L(x,y),L(x',x))"
TH3_U = "L(U(x',x),U(y,x'))=LU(x',L(x,U(y,x')))"
TH3_LOWER = "L(x,x')⊆L(y) for y!=0"
TH3_UPPER = "U(x,x')⊆U(y) for y!=1"


def th3_premises(p: Poset, u: UnaryOp) -> PropertyReport:
    zero, one = p.require_bounded()
    L, U, B = _cones(p)
    bad_one = [x for x in range(p.n) if x != zero and u(x) == one]
    verdicts = (
        Verdict(TH3_ZERO, u(zero) == one, None if u(zero) == one else (p.names[zero],)),
        Verdict(TH3_ONE, u(one) == zero, None if u(one) == zero else (p.names[one],)),
        Verdict(TH3_NOT_ONE, not bad_one, (p.names[bad_one[0]],) if bad_one else None),
        check_identity(p, TH3_L, 2,
                       lambda x, y: L(U(L(B[x] | B[y]) | B[u(x)]) | B[x]),
                       lambda x, y: L(U(L(B[x] | B[y]) | L(B[u(x)] | B[x])))),
        check_identity(p, TH3_U, 2,
                       lambda x, y: L(U(B[u(x)] | B[x]) | U(B[y] | B[u(x)])),
                       lambda x, y: L(U(B[u(x)] | L(B[x] | U(B[y] | B[u(x)]))))),
        check_inclusion(p, TH3_LOWER, 2,
                        lambda x, y: L(B[x] | B[u(x)]), lambda x, y: L(B[y]),
                        when=lambda x, y: y != zero),
        check_inclusion(p, TH3_UPPER, 2,
                        lambda x, y: U(B[x] | B[u(x)]), lambda x, y: U(B[y]),
                        when=lambda x, y: y != one),
    )
    return PropertyReport("premises of the piecewise theorem", verdicts)


# relative pseudocomplementation


def pseudocomplement_candidates(p: Poset, a: int, b: int) -> int:
    """Mask of all x with L(a,x) ⊆ L(b)."""
    lb = p.down[b]
    out = 0
    for x in range(p.n):
        if p.down[a] & p.down[x] & ~lb == 0:
            out |= bit(x)
    return out


def relative_pseudocomplement(p: Poset, a: int, b: int) -> int | None:
    """Index of the greatest x with L(a,x) ⊆ L(b), or ``None`` if there is none."""
    cand = pseudocomplement_candidates(p, a, b)
    for x in members(cand):
        if cand & ~p.down[x] == 0:
            return x
    return None


def is_relatively_pseudocomplemented(p: Poset) -> PropertyReport:
    for a, b in product(range(p.n), repeat=2):
        if relative_pseudocomplement(p, a, b) is None:
            v = Verdict("a*b exists for all a,b", False, (p.names[a], p.names[b]))
            break
    else:
        v = Verdict("a*b exists for all a,b", True)
    return PropertyReport("relatively pseudocomplemented", (v,))


# one-sided inclusions that hold in every poset

def general_inclusions(p: Poset, u: UnaryOp) -> PropertyReport:
    """The seven one-sided inclusions valid in any poset with any unary map."""
    L, U, B = _cones(p)
    v = [
        check_inclusion(p, "UL(U(x,z),U(y,z))⊆U(L(x,y),z)", 3,
                        lambda x, y, z: U(L(U(B[x] | B[z]) | U(B[y] | B[z]))),
                        lambda x, y, z: U(L(B[x] | B[y]) | B[z])),
        check_inclusion(p, "LU(L(x,z),L(y,z))⊆L(U(x,y),z)", 3,
                        lambda x, y, z: L(U(L(B[x] | B[z]) | L(B[y] | B[z]))),
                        lambda x, y, z: L(U(B[x] | B[y]) | B[z])),
        check_inclusion(p, "x<=z => LU(x,L(y,z))⊆L(U(x,y),z)", 3,
                        lambda x, y, z: L(U(B[x] | L(B[y] | B[z]))),
                        lambda x, y, z: L(U(B[x] | B[y]) | B[z]),
                        when=lambda x, y, z: p.leq(x, z)),
        check_inclusion(p, "L(x,y)⊆L(U(L(x,y),y'),y)", 2,
                        lambda x, y: L(B[x] | B[y]),
                        lambda x, y: L(U(L(B[x] | B[y]) | B[u(y)]) | B[y])),
        check_inclusion(p, "U(x,y')⊆U(L(U(x,y'),y),y')", 2,
                        lambda x, y: U(B[x] | B[u(y)]),
                        lambda x, y: U(L(U(B[x] | B[u(y)]) | B[y]) | B[u(y)])),
        check_inclusion(p, "LU(L(x,y),L(x',x))⊆L(U(L(x,y),x'),x)", 2,
                        lambda x, y: L(U(L(B[x] | B[y]) | L(B[u(x)] | B[x]))),
                        lambda x, y: L(U(L(B[x] | B[y]) | B[u(x)]) | B[x])),
        check_inclusion(p, "LU(x',L(x,U(y,x')))⊆L(U(x',x),U(y,x'))", 2,
                        lambda x, y: L(U(B[u(x)] | L(B[x] | U(B[y] | B[u(x)])))),
                        lambda x, y: L(U(B[u(x)] | B[x]) | U(B[y] | B[u(x)]))),
    ]
    return PropertyReport("one-sided inclusions", tuple(v))


def full_report(p: Poset, u: UnaryOp | None = None) -> list[PropertyReport]:
    """Every applicable report for ``p`` (and ``u`` when given)."""
    reports = [is_distributive(p), is_modular(p), is_strongly_modular(p),
               is_relatively_pseudocomplemented(p)]
    if u is not None:
        reports.insert(0, check_unary(p, u, complementation=p.bounded))
        if p.bounded:
            reports += [is_boolean(p, u), th1_premises(p, u), th3_premises(p, u)]
    return reports

