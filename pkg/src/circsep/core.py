"""Ground-set model for selections on systems of circles.

A system of circles is a disjoint union of cycles with sizes ``n_1, ..., n_p``.
Positions on circle ``j`` are labelled ``1 .. n_j`` and wrap around, so the
distance between two positions is the length of the shorter arc.  A selection
is a duplicate-free set of (position, circle) pairs; it is s-separated when
every same-circle pair has at least ``s`` positions strictly between its two
elements along the shorter arc, i.e. circular distance at least ``s + 1``.
Pairs on different circles are never constrained.

Two circles can be spliced into one: ``flatten`` identifies circle 1 with the
positions ``1 .. n_1`` of a single circle of size ``n_1 + n_2`` and circle 2
with the positions ``n_1 + 1 .. n_1 + n_2``; ``unflatten`` inverts it.  The
splice preserves nothing about separation by itself - the repair procedures
live in :mod:`circsep.bijection`.

Textual syntax: an element is written ``POS@CIRCLE`` (``3@2`` is position 3 on
circle 2) and a selection is a comma-separated list of elements.  Selections
over a flattened single circle are written as bare integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class DomainError(ValueError):
    """A parameter lies outside the precondition of an exact operation."""


class InvariantViolation(RuntimeError):
    """An internal structural guarantee failed; indicates a genuine bug."""


@dataclass(frozen=True, slots=True)
class Element:
    """One selected object: position ``position`` on circle ``circle``."""

    position: int
    circle: int

    def __post_init__(self) -> None:
        if self.position < 1:
            raise ValueError(f"position must be >= 1, got {self.position}")
        if self.circle < 1:
            raise ValueError(f"circle must be >= 1, got {self.circle}")

    @property
    def key(self) -> tuple[int, int]:
        """Canonical sort key: circle first, then position."""
        return (self.circle, self.position)

    def __lt__(self, other: "Element") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return f"{self.position}@{self.circle}"


@dataclass(frozen=True, slots=True)
class CircleSystem:
    """A disjoint union of circles with the given positive sizes."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(n) for n in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes:
            raise ValueError("a circle system needs at least one circle")
        for n in sizes:
            if n < 1:
                raise ValueError(f"circle sizes must be >= 1, got {n}")

    @property
    def num_circles(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        """Number of objects across all circles."""
        return sum(self.sizes)

    def size_of(self, circle: int) -> int:
        if not 1 <= circle <= len(self.sizes):
            raise ValueError(f"no circle {circle} in a {len(self.sizes)}-circle system")
        return self.sizes[circle - 1]

    def __contains__(self, e: Element) -> bool:
        return 1 <= e.circle <= len(self.sizes) and e.position <= self.sizes[e.circle - 1]

    def check_element(self, e: Element) -> Element:
        if e not in self:
            raise ValueError(f"element {e} does not exist in system {list(self.sizes)}")
        return e

    def elements(self):
        """All elements of the ground set in canonical (circle, position) order."""
        for c, n in enumerate(self.sizes, 1):
            for p in range(1, n + 1):
                yield Element(p, c)


@dataclass(frozen=True, slots=True)
class SeparationParams:
    """Separation distance ``s`` (>= 0) and selection size ``k`` (>= 0)."""

    s: int
    k: int

    def __post_init__(self) -> None:
        if self.s < 0:
            raise ValueError(f"s must be >= 0, got {self.s}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")


@dataclass(frozen=True, slots=True, eq=True)
class SelectionSet:
    """An immutable duplicate-free set of elements in canonical order.

    Construction accepts the elements in any order; they are sorted by
    (circle, position) and deduplicated, so two selections with the same
    members always compare equal.
    """

    elements: tuple[Element, ...] = field(default=())

    def __post_init__(self) -> None:
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e: Element) -> bool:
        return e in self.elements

    @property
    def key(self) -> tuple[tuple[int, int], ...]:
        """Canonical serialization key; selections sort lexicographically by it."""
        return tuple(e.key for e in self.elements)

    def __lt__(self, other: "SelectionSet") -> bool:
        return self.key < other.key

    def positions_in(self, circle: int) -> tuple[int, ...]:
        """Sorted positions selected on one circle."""
        return tuple(e.position for e in self.elements if e.circle == circle)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.elements)


def circular_distance(a: Element, b: Element, system: CircleSystem) -> int | None:
    """Shorter-arc distance between two elements, or None across circles.

    Within a circle of size ``n`` the distance is ``min(|pa-pb|, n-|pa-pb|)``,
    which is symmetric and at most ``n // 2``.
    """
    system.check_element(a)
    system.check_element(b)
    if a.circle != b.circle:
        return None
    n = system.sizes[a.circle - 1]
    d = abs(a.position - b.position)
    return min(d, n - d)


def is_s_separated(selection: SelectionSet, system: CircleSystem, s: int) -> bool:
    """True when every same-circle pair sits at circular distance >= s + 1.

    With s = 0 every duplicate-free selection qualifies.  Cross-circle pairs
    are unconstrained.
    """
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    for e in selection:
        system.check_element(e)
    elems = selection.elements
    for i, a in enumerate(elems):
        n = system.sizes[a.circle - 1]
        for b in elems[i + 1:]:
            if b.circle != a.circle:
                break  # canonical order groups circles together
            d = abs(a.position - b.position)
            if min(d, n - d) < s + 1:
                return False
    return True


def _require_two_circles(system: CircleSystem, op: str) -> tuple[int, int]:
    if system.num_circles != 2:
        raise DomainError(
            f"{op} requires exactly two circles, got {system.num_circles}")
    return system.sizes[0], system.sizes[1]


def flatten(e: Element, system: CircleSystem) -> int:
    """Splice a two-circle system into one circle: (i,1) -> i, (i,2) -> n_1 + i."""
    n1, _ = _require_two_circles(system, "flatten")
    system.check_element(e)
    return e.position if e.circle == 1 else n1 + e.position


def unflatten(i: int, system: CircleSystem) -> Element:
    """Inverse splice: positions 1..n_1 land on circle 1, the rest on circle 2.

    Positions on circle 2 are renumbered to start at 1, so the round trip
    ``flatten(unflatten(i)) == i`` holds for every i in ``1 .. n_1 + n_2``.
    """
    n1, n2 = _require_two_circles(system, "unflatten")
    if not 1 <= i <= n1 + n2:
        raise DomainError(f"unflatten requires 1 <= i <= {n1 + n2}, got {i}")
    return Element(i, 1) if i <= n1 else Element(i - n1, 2)


def parse_element(text: str) -> Element:
    """Parse the ``POS@CIRCLE`` syntax, e.g. ``3@2``."""
    pos_part, sep, circle_part = text.strip().partition("@")
    if not sep:
        raise ValueError(f"expected POS@CIRCLE, got {text!r}")
    try:
        return Element(int(pos_part), int(circle_part))
    except ValueError as exc:
        raise ValueError(f"bad element {text!r}: {exc}") from None


def parse_selection(text: str) -> SelectionSet:
    """Parse a comma-separated list of elements; empty input is the empty set."""
    text = text.strip()
    if not text:
        return SelectionSet()
    return SelectionSet(tuple(parse_element(tok) for tok in text.split(",")))


def parse_flat_selection(text: str) -> tuple[int, ...]:
    """Parse a comma-separated list of bare positions on a flattened circle."""
    text = text.strip()
    if not text:
        return ()
    try:
        positions = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"expected bare comma-separated integers, got {text!r}") from None
    return tuple(sorted(set(positions)))


def format_flat_selection(positions) -> str:
    return ",".join(str(p) for p in sorted(positions))
