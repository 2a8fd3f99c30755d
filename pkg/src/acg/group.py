"""Permutation-group engine: Schreier-Sims, membership, enumeration, cosets.

The base-and-strong-generating-set certificate is built deterministically
(first-moved-point base selection, generators processed in order), so
orders, element enumerations and coset labellings are reproducible run to
run.  Groups are immutable after construction; the certificate is built
lazily exactly once behind a lock, and readers observe either no
certificate or a complete one.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import CapacityExceeded, DegreeMismatch, MembershipError
from .perm import Permutation, _identity, _inv, _is_identity, _mul

DEFAULT_ENUM_BOUND = 10**6


def enum_bound() -> int:
    """Current enumeration cap; ACG_ENUM_BOUND overrides the default."""
    raw = os.environ.get("ACG_ENUM_BOUND")
    if raw is None:
        return DEFAULT_ENUM_BOUND
    return int(raw)


class _BSGS:
    """Stabilizer chain with per-level generator lists and transversals.

    ``level_gens[i]`` holds every strong generator fixing ``base[:i]``;
    the transversal at level i maps each orbit point to a word with
    ``base[i] ** u == point``.
    """

    __slots__ = ("degree", "base", "level_gens", "transversals", "order")

    def __init__(self, degree: int, gens_raw: Sequence[tuple]):
        self.degree = degree
        self.base: list[int] = []
        self.level_gens: list[list[tuple]] = []
        self.transversals: list[Optional[dict]] = []
        idt = _identity(degree)
        for g in gens_raw:
            if g != idt:
                self._insert(g)
        self._complete()
        n = 1
        for i in range(len(self.base)):
            n *= len(self._orbit(i))
        self.order = n

    def _insert(self, g: tuple) -> int:
        """File g at every level it stabilizes into; extend the base if needed."""
        lev = None
        for i, b in enumerate(self.base):
            if g[b] != b:
                lev = i
                break
        if lev is None:
            b = min(i for i, x in enumerate(g) if x != i)
            self.base.append(b)
            self.level_gens.append([])
            self.transversals.append(None)
            lev = len(self.base) - 1
        for j in range(lev + 1):
            self.level_gens[j].append(g)
            self.transversals[j] = None
        return lev

    def _orbit(self, i: int) -> dict:
        t = self.transversals[i]
        if t is None:
            b = self.base[i]
            gens = self.level_gens[i]
            t = {b: _identity(self.degree)}
            frontier = [b]
            while frontier:
                nxt = []
                for pt in frontier:
                    u = t[pt]
                    for s in gens:
                        q = s[pt]
                        if q not in t:
                            t[q] = _mul(u, s)
                            nxt.append(q)
                frontier = nxt
            self.transversals[i] = t
        return t

    def sift(self, g: tuple, start: int = 0) -> tuple:
        """Strip g through the chain; identity result means membership."""
        for i in range(start, len(self.base)):
            t = self._orbit(i)
            u = t.get(g[self.base[i]])
            if u is None:
                return g
            g = _mul(g, _inv(u))
        return g

    def _complete(self):
        """Process Schreier generators until the chain is strongly generated."""
        i = len(self.base) - 1
        while i >= 0:
            t = self._orbit(i)
            clean = True
            for pt in sorted(t):
                u = t[pt]
                for s in self.level_gens[i]:
                    v = t[s[pt]]
                    sg = _mul(_mul(u, s), _inv(v))
                    if _is_identity(sg):
                        continue
                    residue = self.sift(sg, i + 1)
                    if not _is_identity(residue):
                        lev = self._insert(residue)
                        i = lev
                        clean = False
                        break
                if not clean:
                    break
            if clean:
                i -= 1

    def contains(self, g: tuple) -> bool:
        return _is_identity(self.sift(g))

    def elements_raw(self) -> list[tuple]:
        """All elements, deepest transversal first (unsorted)."""
        out = [_identity(self.degree)]
        for i in reversed(range(len(self.base))):
            t = self._orbit(i)
            us = [t[pt] for pt in sorted(t)]
            out = [_mul(h, u) for h in out for u in us]
        return out


class PermGroup:
    """Finite permutation group on {1..degree}, given by generators.

    Values are immutable; every derived quantity (certificate, element
    list, structure caches) is memoized on the instance.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (),
                 name: str | None = None):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator degree {g.degree} != group degree {degree}")
            if g.is_identity() or g._img in seen:
                continue
            seen.add(g._img)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._bsgs: Optional[_BSGS] = None
        self._build_lock = threading.Lock()
        self._cache: dict = {}

    # -- certificate ------------------------------------------------------

    @property
    def bsgs(self) -> _BSGS:
        b = self._bsgs
        if b is None:
            with self._build_lock:
                b = self._bsgs
                if b is None:
                    b = _BSGS(self.degree, [g._img for g in self.generators])
                    self._bsgs = b
        return b

    def order(self) -> int:
        return self.bsgs.order

    @property
    def cached_order(self) -> Optional[int]:
        return self._bsgs.order if self._bsgs is not None else None

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(
                f"element degree {p.degree} != group degree {self.degree}")
        return self.bsgs.contains(p._img)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order() == 1

    # -- elements ---------------------------------------------------------

    def elements(self, bound: int | None = None) -> tuple:
        """All elements exactly once, lexicographic by image table."""
        cached = self._cache.get("elements")
        if cached is None:
            n = self.order()
            cap = enum_bound() if bound is None else bound
            if n > cap:
                raise CapacityExceeded(n, cap)
            raw = sorted(self.bsgs.elements_raw())
            cached = tuple(Permutation._raw(t) for t in raw)
            self._cache["elements"] = cached
        elif bound is not None and len(cached) > bound:
            raise CapacityExceeded(len(cached), bound)
        return cached

    def element_set(self) -> frozenset:
        s = self._cache.get("element_set")
        if s is None:
            s = frozenset(self.elements())
            self._cache["element_set"] = s
        return s

    # -- derived groups ----------------------------------------------------

    def subgroup(self, gens: Iterable[Permutation], name: str | None = None,
                 check: bool = False) -> "PermGroup":
        gens = tuple(gens)
        if check:
            for g in gens:
                if g not in self:
                    raise MembershipError(f"{g.cycle_string()} is not in the group")
        return PermGroup(self.degree, gens, name=name)

    def conjugate(self, g: Permutation) -> "PermGroup":
        return PermGroup(self.degree, [x.conj(g) for x in self.generators])

    def contains_subgroup(self, other: "PermGroup") -> bool:
        if other.degree != self.degree:
            raise DegreeMismatch("degrees differ")
        return all(g in self for g in other.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree
                and self.order() == other.order()
                and self.contains_subgroup(other))

    def __repr__(self):
        label = self.name or f"degree-{self.degree} group"
        if self._bsgs is not None:
            return f"PermGroup({label}, order={self.order()})"
        return f"PermGroup({label}, {len(self.generators)} generators)"


def build_bsgs(G: PermGroup) -> PermGroup:
    """Force the certificate; returns the same group with cached order set."""
    G.bsgs
    return G


def membership_test(G: PermGroup, p: Permutation) -> bool:
    return p in G


def elements_enumerate(G: PermGroup, bound: int | None = None) -> tuple:
    return G.elements(bound=bound)


def group_from_elements(degree: int, elements: Iterable[Permutation],
                        name: str | None = None) -> PermGroup:
    """Group generated by ``elements`` with a reduced generating set.

    Scans in the given order and keeps only elements not already generated,
    so the output is deterministic for a deterministic input order.
    """
    kept: list[Permutation] = []
    chain = _BSGS(degree, [])
    for p in elements:
        if not chain.contains(p._img):
            kept.append(p)
            chain = _BSGS(degree, [g._img for g in kept])
    return PermGroup(degree, kept, name=name)


def subgroup_intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    """A ∩ B by filtering the smaller group's elements (enumeration-bounded)."""
    if A.degree != B.degree:
        raise DegreeMismatch("degrees differ")
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    members = [p for p in small.elements() if p in big]
    return group_from_elements(A.degree, members)


# ---------------------------------------------------------------------------
# G-sets and coset actions


@dataclass(frozen=True)
class GSet:
    """A finite set with a right PermGroup action.

    ``action(point, g)`` must respect composition and identity; orbits
    partition ``points``.  Points may be arbitrary hashables.
    """

    points: tuple
    action: Callable
    group: PermGroup
    name: str | None = None

    def orbit(self, point):
        return orbit_of(self, point)


def orbit_of(gset: GSet, point) -> set:
    """Closure of ``point`` under the acting group's generators."""
    if point not in set(gset.points):
        raise MembershipError(f"{point!r} is not a point of the G-set")
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for pt in frontier:
            for g in gset.group.generators:
                q = gset.action(pt, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def natural_gset(G: PermGroup) -> GSet:
    return GSet(points=tuple(range(1, G.degree + 1)),
                action=lambda pt, g: g(pt),
                group=G,
                name="natural")


def conjugation_gset(G: PermGroup, points: Iterable[Permutation],
                     name: str | None = None) -> GSet:
    """Conjugation action on a set of elements of G (closed under G)."""
    return GSet(points=tuple(points),
                action=lambda x, g: x.conj(g),
                group=G,
                name=name or "conjugation")


class CosetSpace:
    """Right cosets H\\G with the right-multiplication action of G.

    Each coset is represented by its lexicographically least element, and
    cosets are numbered 1..index in breadth-first discovery order from the
    trivial coset, so the labelling is canonical.  Also provides the induced
    homomorphism onto the permutation image on the cosets.
    """

    def __init__(self, G: PermGroup, H: PermGroup, *, check: bool = True):
        if G.degree != H.degree:
            raise DegreeMismatch("degrees differ")
        if check and not G.contains_subgroup(H):
            raise MembershipError("H is not a subgroup of G")
        self.group = G
        self.subgroup = H
        h_raw = sorted(p._img for p in H.elements())
        index_of: dict[tuple, int] = {}
        reps: list[tuple] = []

        def register(t: tuple) -> int:
            """New coset with some member t: canonical rep is min over H*t."""
            members = [_mul(h, t) for h in h_raw]
            rep = min(members)
            idx = len(reps)
            reps.append(rep)
            for m in members:
                index_of[m] = idx
            return idx

        register(_identity(G.degree))
        gens_raw = [g._img for g in G.generators]
        frontier = [0]
        while frontier:
            nxt = []
            for i in frontier:
                for s in gens_raw:
                    t = _mul(reps[i], s)
                    if t not in index_of:
                        nxt.append(register(t))
            frontier = nxt
        self.reps = reps
        self._index_of = index_of
        self.index = len(reps)

    def coset_of(self, g: Permutation) -> int:
        """1-based point of the coset Hg."""
        idx = self._index_of.get(g._img)
        if idx is None:
            raise MembershipError("element lies outside the acting group")
        return idx + 1

    def rep(self, point: int) -> Permutation:
        return Permutation._raw(self.reps[point - 1])

    def apply(self, point: int, g: Permutation) -> int:
        t = _mul(self.reps[point - 1], g._img)
        idx = self._index_of.get(t)
        if idx is None:
            raise MembershipError("element lies outside the acting group")
        return idx + 1

    def image_of(self, g: Permutation) -> Permutation:
        """Image of g in the induced permutation group on the cosets."""
        idx = self._index_of
        img = tuple(idx[_mul(rep, g._img)] for rep in self.reps)
        return Permutation._raw(img)

    @property
    def gset(self) -> GSet:
        return GSet(points=tuple(range(1, self.index + 1)),
                    action=self.apply,
                    group=self.group,
                    name=f"cosets[{self.index}]")

    def image(self, name: str | None = None) -> PermGroup:
        return PermGroup(self.index,
                         [self.image_of(g) for g in self.group.generators],
                         name=name)


def coset_action(G: PermGroup, H: PermGroup):
    """Action of G on the right cosets of H plus the induced image group."""
    cs = CosetSpace(G, H)
    return cs.gset, cs.image()
