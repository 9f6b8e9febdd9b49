"""Finite posets, cone operators and extremal elements.

Subsets of the carrier are plain ``int`` bitmasks: bit ``i`` is set iff
element ``i`` is a member. Every operation here is a pure function of an
immutable :class:`Poset`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_ELEMENTS = 64

MAX = "max"
MIN = "min"


class PosetError(ValueError):
    """Base class for invalid poset input."""


class UnknownLabel(PosetError):
    pass


class DuplicateLabel(PosetError):
    pass


class CycleDetected(PosetError):
    """The reflexive-transitive closure is not antisymmetric."""


class NotBounded(PosetError):
    """An operation needs 0 and 1 but the poset lacks one of them."""


def bit(i: int) -> int:
    return 1 << i


def members(mask: int) -> Iterator[int]:
    """Indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Poset:
    """A finite partially ordered set.

    ``down[i]`` is the mask of all ``j`` with ``j <= i`` and ``up[i]`` the
    mask of all ``j`` with ``i <= j``. Use :func:`from_covers` or
    :meth:`from_relation` rather than calling the constructor directly.
    """

    names: tuple[str, ...]
    down: tuple[int, ...]
    up: tuple[int, ...]
    least: int | None = None
    greatest: int | None = None
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @classmethod
    def from_relation(cls, names: Sequence[str], leq: Sequence[Sequence[bool]]) -> Poset:
        """Build a poset from a full ``n x n`` relation matrix, validating the order axioms."""
        names = tuple(names)
        n = len(names)
        _check_labels(names)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise PosetError(f"relation matrix must be {n}x{n}")
        up = tuple(mask_of(j for j in range(n) if leq[i][j]) for i in range(n))
        down = tuple(mask_of(j for j in range(n) if leq[j][i]) for i in range(n))
        for i in range(n):
            if not up[i] >> i & 1:
                raise PosetError(f"relation is not reflexive at {names[i]!r}")
            for j in members(up[i] & down[i] & ~bit(i)):
                raise CycleDetected(f"{names[i]!r} and {names[j]!r} are mutually below each other")
            for j in members(up[i]):
                if up[j] & ~up[i]:
                    k = next(members(up[j] & ~up[i]))
                    raise PosetError(
                        f"relation is not transitive: {names[i]} <= {names[j]} <= {names[k]}"
                    )
        return cls._make(names, down, up)

    @classmethod
    def _make(cls, names: tuple[str, ...], down: tuple[int, ...], up: tuple[int, ...]) -> Poset:
        full = (1 << len(names)) - 1
        least = next((i for i in range(len(names)) if up[i] == full), None)
        greatest = next((i for i in range(len(names)) if down[i] == full), None)
        return cls(names, down, up, least, greatest)

    # basic accessors

    def __len__(self) -> int:
        return len(self.names)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def carrier(self) -> int:
        return (1 << len(self.names)) - 1

    @property
    def bounded(self) -> bool:
        return self.least is not None and self.greatest is not None

    def require_bounded(self) -> tuple[int, int]:
        if not self.bounded:
            raise NotBounded("poset has no least or no greatest element")
        return self.least, self.greatest

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def leq_matrix(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(self.n)] for i in range(self.n)]

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in members(mask))

    def mask(self, *labels: str) -> int:
        return mask_of(self.index(x) for x in labels)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
        out = []
        for i in range(self.n):
            strictly_above = self.up[i] & ~bit(i)
            for j in members(strictly_above):
                if not strictly_above & self.down[j] & ~bit(j):
                    out.append((i, j))
        return out

    # cones and extremal elements

    def lower_cone(self, a: int) -> int:
        """L(A): elements below every member of ``A``; the whole carrier for A = 0."""
        out = self.carrier
        for i in members(a):
            out &= self.down[i]
        return out

    def upper_cone(self, a: int) -> int:
        """U(A): elements above every member of ``A``; the whole carrier for A = 0."""
        out = self.carrier
        for i in members(a):
            out &= self.up[i]
        return out

    def maximal(self, a: int) -> int:
        return mask_of(i for i in members(a) if self.up[i] & a == bit(i))

    def minimal(self, a: int) -> int:
        return mask_of(i for i in members(a) if self.down[i] & a == bit(i))

    def extremal(self, a: int, side: str) -> int:
        if side == MAX:
            return self.maximal(a)
        if side == MIN:
            return self.minimal(a)
        raise ValueError(f"side must be {MAX!r} or {MIN!r}, got {side!r}")

    def set_leq(self, a: int, b: int) -> bool:
        """A <= B: every member of A is below every member of B (vacuous on empty sides)."""
        for i in members(a):
            if b & ~self.up[i]:
                return False
        return True

    def is_lattice(self) -> bool:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                both = bit(i) | bit(j)
                if _popcount(self.maximal(self.lower_cone(both))) != 1:
                    return False
                if _popcount(self.minimal(self.upper_cone(both))) != 1:
                    return False
        return True

    def relabel(self, names: Sequence[str]) -> Poset:
        names = tuple(names)
        if len(names) != self.n:
            raise PosetError("relabel needs one name per element")
        _check_labels(names)
        return Poset(names, self.down, self.up, self.least, self.greatest)


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _check_labels(names: Sequence[str]) -> None:
    if not names:
        raise PosetError("a poset needs at least one element")
    if len(names) > MAX_ELEMENTS:
        raise PosetError(f"at most {MAX_ELEMENTS} elements are supported, got {len(names)}")
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateLabel(f"duplicate element label {name!r}")
        seen.add(name)


def from_covers(names: Sequence[str], covers: Iterable[tuple[str, str]]) -> Poset:
    """Poset whose order is the reflexive-transitive closure of ``covers``.

    ``covers`` holds ``(lower, upper)`` label pairs. The pairs need not be
    exact covers; any generating relation works. Raises
    :class:`CycleDetected` instead of collapsing a cycle.
    """
    names = tuple(names)
    _check_labels(names)
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    up = [bit(i) for i in range(n)]
    for lo, hi in covers:
        for label in (lo, hi):
            if label not in index:
                raise UnknownLabel(f"cover references unknown element {label!r}")
        up[index[lo]] |= bit(index[hi])
    # Warshall closure on rows
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    for i in range(n):
        for j in members(up[i] & ~bit(i)):
            if up[j] >> i & 1:
                raise CycleDetected(f"{names[i]!r} and {names[j]!r} lie on a cycle")
    down = tuple(mask_of(j for j in range(n) if up[j] >> i & 1) for i in range(n))
    return Poset._make(names, down, tuple(up))
