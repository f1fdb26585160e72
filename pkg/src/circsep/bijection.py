"""A size-preserving bijection between selections on two circles and on one.

Splicing two circles into one (``flatten`` in :mod:`circsep.core`) can break
s-separation in two ways: the tail of circle 2 becomes adjacent to the head of
circle 1, and the wrap-around of each original circle disappears.  The
``zig`` procedure repairs a two-circle selection *before* flattening, and
``zag`` repairs a freshly unflattened selection, each by a chain of switches.

A switch inspects a window of ``s`` positions directly below the previous
insertion point (on alternating circles; windows are plain intervals clipped
at position 1 and never wrap).  If the window is empty the chain stops.
Otherwise it contains exactly one selected element; that element is removed,
and a replacement is inserted on the opposite circle, the same distance below
the previous *removal* as the removed element sat below the previous
insertion.  The seeds for "previous removal/insertion" are phantom positions
one past the top of each circle, which is what makes the first window the top
``s`` positions of circle 2 for ``zig`` and of circle 1 for ``zag``.

For a selection ``A`` of size k anchored at element (1,1), with circle sizes
``n_1 >= s*k + 1`` and ``n_2 >= s*k``:

* ``forward(A) = flatten(zig(A))`` is s-separated on the combined circle and
  still contains position 1;
* ``backward(S) = zag(unflatten(S))`` inverts it exactly, running the same
  switch chain mirrored (same gaps, removals and insertions exchanged);
* both directions execute the same number of switches, at most k - 1.

Intermediate selections need not be s-separated on either side; only the
endpoint guarantees hold.  ``check_bijectivity`` verifies all of this
exhaustively for one parameter point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (CircleSystem, DomainError, Element, InvariantViolation,
                   SelectionSet, SeparationParams, _require_two_circles,
                   flatten, is_s_separated, unflatten)
from .counting import binomial
from .enumeration import EnumerationRequest, enumerate_gap


@dataclass(frozen=True, slots=True)
class SwitchStep:
    """One executed switch: the inspected window, what left, what entered.

    ``gap`` is the distance from the previous insertion point down to the
    removed element; the inserted position sits ``gap`` below the previous
    removal on the other circle.
    """

    index: int
    window_circle: int
    window_lo: int
    window_hi: int
    removed: int
    gap: int
    added: int

    def __post_init__(self) -> None:
        if self.gap < 1:
            raise InvariantViolation(f"switch gap must be >= 1, got {self.gap}")
        if not self.window_lo <= self.removed <= self.window_hi:
            raise InvariantViolation(
                f"removed position {self.removed} outside window "
                f"[{self.window_lo}, {self.window_hi}]")

    def as_dict(self) -> dict:
        return {
            "i": self.index,
            "window": {"circle": self.window_circle,
                       "lo": self.window_lo, "hi": self.window_hi},
            "removed": self.removed,
            "d": self.gap,
            "added": self.added,
        }


@dataclass(frozen=True, slots=True)
class ZigZagTrace:
    """The full switch chain of one zig or zag run."""

    direction: str  # "zig" | "zag"
    steps: tuple[SwitchStep, ...]

    @property
    def order(self) -> int:
        """Number of executed switches."""
        return len(self.steps)

    def as_dict(self) -> dict:
        return {
            "direction": self.direction,
            "order": self.order,
            "steps": [st.as_dict() for st in self.steps],
        }


def _flat_selection(positions) -> SelectionSet:
    return SelectionSet(tuple(Element(p, 1) for p in positions))


def _check_common(selection: SelectionSet, system: CircleSystem, s: int,
                  op: str) -> int:
    n1, n2 = _require_two_circles(system, op)
    if s < 0:
        raise DomainError(f"{op} requires s >= 0, got s={s}")
    k = len(selection)
    if k < 1:
        raise DomainError(f"{op} requires a nonempty selection")
    for e in selection:
        system.check_element(e)
    if Element(1, 1) not in selection:
        raise DomainError(f"{op} requires the selection to contain 1@1")
    if n1 < s * k + 1:
        raise DomainError(f"{op} requires n_1 >= s*k+1 (got n_1={n1}, s={s}, k={k})")
    if n2 < s * k:
        raise DomainError(f"{op} requires n_2 >= s*k (got n_2={n2}, s={s}, k={k})")
    return k


def _run_switches(selection: SelectionSet, system: CircleSystem, s: int,
                  direction: str) -> tuple[SelectionSet, ZigZagTrace]:
    """Shared switch loop.  ``zig`` opens its windows on circle 2 at even
    steps, ``zag`` on circle 1; everything else is identical."""
    n1, n2 = system.sizes
    even_window_circle = 2 if direction == "zig" else 1
    positions = {1: set(selection.positions_in(1)), 2: set(selection.positions_in(2))}
    original = {(e.position, e.circle) for e in selection}
    removed_pairs: set[tuple[int, int]] = set()
    # phantom seeds one past the top of each circle
    if direction == "zig":
        last_removed, last_added = n1 + 1, n2 + 1
    else:
        last_removed, last_added = n2 + 1, n1 + 1
    k = len(selection)
    steps: list[SwitchStep] = []
    while True:
        i = len(steps)
        window_circle = even_window_circle if i % 2 == 0 else 3 - even_window_circle
        other_circle = 3 - window_circle
        hi = last_added - 1
        lo = max(1, last_added - s)
        hits = [q for q in range(lo, hi + 1) if q in positions[window_circle]]
        if not hits:
            break
        if len(hits) > 1:
            raise InvariantViolation(
                f"{direction}: window {lo}..{hi} on circle {window_circle} "
                f"holds {len(hits)} selected elements, expected at most one")
        removed = hits[0]
        gap = last_added - removed
        added = last_removed - gap
        # structural guarantees of the switch chain; violations are bugs
        if gap > s:
            raise InvariantViolation(
                f"{direction}: switch gap {gap} exceeds s={s}")
        if (removed, window_circle) not in original:
            raise InvariantViolation(
                f"{direction}: removed {removed}@{window_circle} was not part "
                "of the input selection")
        if (removed, window_circle) in removed_pairs:
            raise InvariantViolation(
                f"{direction}: removed {removed}@{window_circle} twice")
        if (removed, window_circle) == (1, 1):
            raise InvariantViolation(f"{direction}: attempted to remove the anchor 1@1")
        if not 1 <= added <= system.sizes[other_circle - 1]:
            raise InvariantViolation(
                f"{direction}: insertion position {added} outside circle {other_circle}")
        if added in positions[other_circle]:
            raise InvariantViolation(
                f"{direction}: insertion {added}@{other_circle} collides with "
                "an existing element")
        positions[window_circle].remove(removed)
        positions[other_circle].add(added)
        removed_pairs.add((removed, window_circle))
        steps.append(SwitchStep(index=i, window_circle=window_circle,
                                window_lo=lo, window_hi=hi,
                                removed=removed, gap=gap, added=added))
        if len(steps) > k - 1:
            raise InvariantViolation(
                f"{direction}: executed {len(steps)} switches on a size-{k} "
                "selection, expected at most k-1")
        last_removed, last_added = removed, added
    result = SelectionSet(tuple(Element(p, c) for c in (1, 2) for p in positions[c]))
    return result, ZigZagTrace(direction, tuple(steps))


def zig(selection: SelectionSet, system: CircleSystem, s: int
        ) -> tuple[SelectionSet, ZigZagTrace]:
    """Repair a two-circle selection so that its flattening is s-separated.

    The input must itself be s-separated on the two circles, contain 1@1,
    and satisfy the size bounds; the output selection need not be
    s-separated on the two circles.
    """
    _check_common(selection, system, s, "zig")
    if not is_s_separated(selection, system, s):
        raise DomainError("zig requires an s-separated input selection")
    return _run_switches(selection, system, s, "zig")


def zag(selection: SelectionSet, system: CircleSystem, s: int
        ) -> tuple[SelectionSet, ZigZagTrace]:
    """Repair a freshly unflattened selection back into an s-separated one.

    The input must be the unflattening of an s-separated selection on the
    combined circle that contains position 1 (so the input contains 1@1 but
    need not be s-separated on the two circles).  The output is s-separated
    on the two circles.
    """
    _check_common(selection, system, s, "zag")
    n1, n2 = system.sizes
    flat = _flat_selection(flatten(e, system) for e in selection)
    if not is_s_separated(flat, CircleSystem((n1 + n2,)), s):
        raise DomainError(
            "zag requires a selection whose flattening is s-separated on the "
            "combined circle")
    return _run_switches(selection, system, s, "zag")


def forward(selection: SelectionSet, system: CircleSystem, s: int) -> tuple[int, ...]:
    """Map a two-circle selection to positions on the combined circle:
    run ``zig``, then flatten.  Returns sorted positions."""
    repaired, _ = zig(selection, system, s)
    return tuple(sorted(flatten(e, system) for e in repaired))


def backward(positions, system: CircleSystem, s: int) -> SelectionSet:
    """Map combined-circle positions back to a two-circle selection:
    unflatten, then run ``zag``.  Inverse of ``forward``."""
    n1, n2 = _require_two_circles(system, "backward")
    pos = sorted(set(int(p) for p in positions))
    for p in pos:
        if not 1 <= p <= n1 + n2:
            raise DomainError(
                f"backward requires positions in 1..{n1 + n2}, got {p}")
    selection = SelectionSet(tuple(unflatten(p, system) for p in pos))
    repaired, _ = zag(selection, system, s)
    return repaired


@dataclass(frozen=True, slots=True)
class BijectivityReport:
    """Outcome of exhaustively checking one (n_1, n_2, s, k) point."""

    system: CircleSystem
    s: int
    k: int
    domain_size: int
    codomain_size: int
    expected_size: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def check_bijectivity(system: CircleSystem, s: int, k: int) -> BijectivityReport:
    """Exhaustively verify the bijection at one parameter point.

    Enumerates every s-separated k-selection through 1@1 on the two circles
    (the domain) and every s-separated k-subset of the combined circle
    through position 1 (the codomain); checks that ``forward`` lands in the
    codomain, round-trips through ``backward``, executes the same number of
    switches in both directions with mirrored steps, and is a bijection onto
    the codomain; and compares both sizes against the closed form
    ``C(n_1 + n_2 - s*k - 1, k - 1)``.
    """
    n1, n2 = _require_two_circles(system, "check_bijectivity")
    if s < 0 or k < 1:
        raise DomainError(f"check_bijectivity requires s >= 0 and k >= 1, "
                          f"got s={s}, k={k}")
    if n1 < s * k + 1:
        raise DomainError(
            f"check_bijectivity requires n_1 >= s*k+1 (got n_1={n1}, s={s}, k={k})")
    if n2 < s * k:
        raise DomainError(
            f"check_bijectivity requires n_2 >= s*k (got n_2={n2}, s={s}, k={k})")
    failures: list[str] = []
    domain = list(enumerate_gap(EnumerationRequest(
        system, SeparationParams(s, k), Element(1, 1))))
    combined = CircleSystem((n1 + n2,))
    codomain = list(enumerate_gap(EnumerationRequest(
        combined, SeparationParams(s, k), Element(1, 1))))
    codomain_keys = {tuple(e.position for e in sel) for sel in codomain}
    expected = binomial(n1 + n2 - s * k - 1, k - 1)

    images = set()
    for sel in domain:
        try:
            zigged, ztrace = zig(sel, system, s)
        except (DomainError, InvariantViolation) as exc:
            failures.append(f"zig({sel}) raised: {exc}")
            continue
        image = tuple(sorted(flatten(e, system) for e in zigged))
        if image not in codomain_keys:
            failures.append(f"forward({sel}) = {image} is not in the codomain")
            continue
        images.add(image)
        unflat = SelectionSet(tuple(unflatten(p, system) for p in image))
        try:
            back, gtrace = zag(unflat, system, s)
        except (DomainError, InvariantViolation) as exc:
            failures.append(f"zag({unflat}) raised: {exc}")
            continue
        if back != sel:
            failures.append(f"backward(forward({sel})) = {back}, expected {sel}")
        if ztrace.order != gtrace.order:
            failures.append(
                f"switch counts differ on {sel}: zig {ztrace.order}, "
                f"zag {gtrace.order}")
        else:
            for zstep, gstep in zip(ztrace.steps, gtrace.steps):
                if (gstep.removed, gstep.gap, gstep.added) != (
                        zstep.added, zstep.gap, zstep.removed):
                    failures.append(
                        f"steps not mirrored on {sel} at switch {zstep.index}")
                    break
    if len(images) != len(domain):
        failures.append(
            f"forward is not injective: {len(domain)} inputs, "
            f"{len(images)} distinct images")
    missing = codomain_keys - images
    if missing:
        failures.append(
            f"forward is not surjective: {len(missing)} codomain sets missed, "
            f"e.g. {sorted(missing)[0]}")
    for sel in codomain:
        flat = tuple(e.position for e in sel)
        try:
            back = backward(flat, system, s)
            again = forward(back, system, s)
        except (DomainError, InvariantViolation) as exc:
            failures.append(f"round trip from {flat} raised: {exc}")
            continue
        if again != flat:
            failures.append(f"forward(backward({flat})) = {again}")
    if len(domain) != expected:
        failures.append(
            f"domain size {len(domain)} != closed form {expected}")
    if len(codomain) != expected:
        failures.append(
            f"codomain size {len(codomain)} != closed form {expected}")
    return BijectivityReport(system=system, s=s, k=k,
                             domain_size=len(domain),
                             codomain_size=len(codomain),
                             expected_size=expected,
                             failures=tuple(failures))
