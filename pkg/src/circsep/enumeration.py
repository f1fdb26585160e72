"""Exhaustive and pruned enumeration of s-separated selections.

Two generators produce the same family of sets.  ``enumerate_naive`` filters
every k-subset of the ground set and is deliberately simple: it is the oracle
everything else is measured against.  ``enumerate_gap`` builds selections
circle by circle, extending each circle's choice position by position and
pruning candidates that would land within distance ``s`` of an element already
chosen on the same circle (including the wrap-around gap back to the first
choice); the per-circle streams are combined over all ways of distributing
``k`` among the circles.  Both yield selections in lexicographic order of the
canonical (circle, position) serialization, so output is deterministic and
directly comparable.

``count_by_enumeration`` consumes the pruned stream without materializing it.
"""

from __future__ import annotations

import heapq
import itertools
import operator
from dataclasses import dataclass

from .core import CircleSystem, Element, SelectionSet, SeparationParams


@dataclass(frozen=True, slots=True)
class EnumerationRequest:
    """A system, separation parameters, and an optional required element."""

    system: CircleSystem
    params: SeparationParams
    fixed: Element | None = None

    def __post_init__(self) -> None:
        if self.fixed is not None:
            self.system.check_element(self.fixed)


def compositions(total: int, parts: int):
    """Yield all tuples of ``parts`` nonnegative integers summing to ``total``,
    in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def enumerate_naive(request: EnumerationRequest):
    """Filter all k-subsets of the ground set; the reference enumerator.

    Yields every s-separated k-subset (containing ``fixed`` when given) in
    lexicographic order of canonical serialization.
    """
    system, s, k = request.system, request.params.s, request.params.k
    fixed = request.fixed
    sizes = system.sizes
    ground = [(c, p) for c, n in enumerate(sizes, 1) for p in range(1, n + 1)]
    fixed_pair = (fixed.circle, fixed.position) if fixed is not None else None
    least = s + 1
    for combo in itertools.combinations(ground, k):
        if fixed_pair is not None and fixed_pair not in combo:
            continue
        ok = True
        for (c1, p1), (c2, p2) in itertools.combinations(combo, 2):
            if c1 != c2:
                continue
            n = sizes[c1 - 1]
            d = p1 - p2 if p1 > p2 else p2 - p1
            if d < least or n - d < least:
                ok = False
                break
        if ok:
            yield SelectionSet(tuple(Element(p, c) for c, p in combo))


def _circle_subsets(n: int, count: int, s: int, required: int | None = None):
    """Yield increasing position tuples on one circle of size ``n``, pairwise
    circular distance >= s + 1, optionally forced to contain ``required``.

    For increasing positions it is enough that consecutive choices differ by
    at least ``s + 1`` and that the wrap-around gap from the last choice back
    to the first is also at least ``s + 1``; every other pair is then farther
    apart on both arcs.
    """
    if count == 0:
        if required is None:
            yield ()
        return
    if count == 1:
        if required is not None:
            yield (required,)
        else:
            for q in range(1, n + 1):
                yield (q,)
        return
    gap = s + 1
    if n < count * gap:
        return  # the circle cannot hold that many choices at all

    def extend(chosen: list[int], have_required: bool):
        need = count - len(chosen)
        if need == 0:
            if required is None or have_required:
                yield tuple(chosen)
            return
        lo = chosen[-1] + gap
        # the last choice must leave a wrap-around gap back to the first
        hi = min(n, chosen[0] + n - gap - (need - 1) * gap)
        if required is not None and not have_required:
            if required < lo:
                return  # the required position can no longer be reached
            hi = min(hi, required)
            if need == 1:
                lo = required  # the one remaining slot must take it
        for q in range(lo, hi + 1):
            chosen.append(q)
            yield from extend(chosen, have_required or q == required)
            chosen.pop()

    first_hi = n - (count - 1) * gap  # room for the rest above the first pick
    if required is not None:
        first_hi = min(first_hi, required)
    for first in range(1, first_hi + 1):
        yield from extend([first], first == required)


def _composition_raw(system: CircleSystem, s: int, comp: tuple[int, ...],
                     fixed: Element | None):
    """Position tuples per circle for one way of distributing k, combined in
    lexicographic order without materializing per-circle pools."""
    sizes = system.sizes

    def rec(circle: int):
        if circle > len(sizes):
            yield ()
            return
        want = comp[circle - 1]
        req = fixed.position if fixed is not None and fixed.circle == circle else None
        for head in _circle_subsets(sizes[circle - 1], want, s, req):
            head_elems = tuple((p, circle) for p in head)
            for tail in rec(circle + 1):
                yield head_elems + tail

    return rec(1)


def _composition_stream(system: CircleSystem, s: int, comp: tuple[int, ...],
                        fixed: Element | None):
    for pairs in _composition_raw(system, s, comp, fixed):
        yield SelectionSet(tuple(Element(p, c) for p, c in pairs))


def enumerate_gap(request: EnumerationRequest):
    """Pruned enumerator; same sets and the same order as ``enumerate_naive``.

    Each way of distributing k among the circles produces one lazily merged
    stream, so memory stays bounded by the recursion depth times the number
    of distributions.
    """
    system, params, fixed = request.system, request.params, request.fixed
    streams = [
        _composition_stream(system, params.s, comp, fixed)
        for comp in compositions(params.k, system.num_circles)
    ]
    return heapq.merge(*streams, key=operator.attrgetter("key"))


def count_by_enumeration(request: EnumerationRequest) -> int:
    """Count by streaming the pruned enumerator; exact for any parameters."""
    system, params, fixed = request.system, request.params, request.fixed
    total = 0
    for comp in compositions(params.k, system.num_circles):
        total += sum(1 for _ in _composition_raw(system, params.s, comp, fixed))
    return total
