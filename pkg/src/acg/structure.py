"""Subgroup-structure toolkit.

Centralizers, conjugacy classes, derived/central/chief series, Sylow
subgroups, quotients, supplements, and the exhaustive subgroup lattice.
Everything is a pure function of immutable groups; results are memoized on
the group instance, keyed so that repeated suite runs share the work.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .errors import (CapacityExceeded, MembershipError, NotNormal,
                     PreconditionError, UnsupportedGroup)
from .group import (CosetSpace, PermGroup, enum_bound, group_from_elements,
                    subgroup_intersection)
from .perm import Permutation, _comm, _conj, _inv, _is_identity, _mul, _pow

EXHAUSTIVE_CENTRALIZER_MAX = 10**4


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class; ``members`` is kept for enumeration-sized groups."""

    representative: Permutation
    size: int
    members: Optional[frozenset] = None


@dataclass
class SeriesReport:
    kind: str  # derived | lower_central | upper_central | chief
    terms: list  # list[PermGroup]; descending for derived/lower, ascending else
    is_solvable: bool
    is_nilpotent: bool
    nilpotency_class: Optional[int] = None
    factor_central: Optional[list] = None  # chief only, parallel to factors
    factor_orders: Optional[list] = None


# ---------------------------------------------------------------------------
# centralizers and classes


def centralizer(G: PermGroup, x: Permutation, method: str = "auto") -> PermGroup:
    """Subgroup of all g with gx = xg.

    The exhaustive path filters the element list; the orbit path runs
    orbit-stabilizer on the conjugation action and needs no enumeration.
    Both agree (tested); "auto" picks by group order.
    """
    if x not in G:
        raise MembershipError("element is not in the group")
    if method == "auto":
        method = "exhaustive" if G.order() <= EXHAUSTIVE_CENTRALIZER_MAX else "orbit"
    if method == "exhaustive":
        xr = x._img
        members = [p for p in G.elements() if _mul(p._img, xr) == _mul(xr, p._img)]
        return group_from_elements(G.degree, members)
    if method != "orbit":
        raise ValueError(f"unknown method {method!r}")
    _, stab_gens = _conjugation_orbit_stabilizer(G, x)
    return group_from_elements(G.degree, stab_gens)


def _conjugation_orbit_stabilizer(G: PermGroup, x: Permutation):
    """Orbit of x under conjugation plus Schreier generators of the stabilizer."""
    gens = [(g._img, _inv(g._img)) for g in G.generators]
    start = x._img
    trans = {start: tuple(range(G.degree))}
    frontier = [start]
    schreier: list[Permutation] = []
    from .group import _BSGS

    chain = _BSGS(G.degree, [])
    while frontier:
        nxt = []
        for pt in frontier:
            u = trans[pt]
            for g, gi in gens:
                q = _mul(gi, _mul(pt, g))
                if q not in trans:
                    trans[q] = _mul(u, g)
                    nxt.append(q)
                else:
                    sg = _mul(_mul(u, g), _inv(trans[q]))
                    if not _is_identity(sg) and not chain.contains(sg):
                        schreier.append(Permutation._raw(sg))
                        chain = _BSGS(G.degree, [p._img for p in schreier])
        frontier = nxt
    return trans, schreier


def class_size(G: PermGroup, x: Permutation) -> int:
    """|x^G| via the conjugation orbit; no enumeration needed."""
    gens = [(g._img, _inv(g._img)) for g in G.generators]
    seen = {x._img}
    frontier = [x._img]
    while frontier:
        nxt = []
        for pt in frontier:
            for g, gi in gens:
                q = _mul(gi, _mul(pt, g))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def conjugacy_classes(G: PermGroup) -> list:
    """Partition of G into classes, representatives lexicographically least,
    classes sorted by representative."""
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    gens = [(g._img, _inv(g._img)) for g in G.generators]
    assigned: dict[tuple, int] = {}
    classes: list[ConjClass] = []
    for p in G.elements():  # lex order, so the first unseen member is least
        if p._img in assigned:
            continue
        idx = len(classes)
        members = {p._img}
        frontier = [p._img]
        assigned[p._img] = idx
        while frontier:
            nxt = []
            for t in frontier:
                for g, gi in gens:
                    q = _mul(gi, _mul(t, g))
                    if q not in members:
                        members.add(q)
                        assigned[q] = idx
                        nxt.append(q)
            frontier = nxt
        classes.append(ConjClass(
            representative=p,
            size=len(members),
            members=frozenset(Permutation._raw(t) for t in members)))
    G._cache["classes"] = classes
    return classes


def class_index_map(G: PermGroup) -> dict:
    """Element -> index into conjugacy_classes(G)."""
    cached = G._cache.get("class_index")
    if cached is None:
        cached = {}
        for i, cls in enumerate(conjugacy_classes(G)):
            for m in cls.members:
                cached[m] = i
        G._cache["class_index"] = cached
    return cached


# ---------------------------------------------------------------------------
# normal structure


def normal_closure(G: PermGroup, S: Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing S."""
    from .group import _BSGS

    seeds = []
    for p in S:
        if p not in G:
            raise MembershipError("seed element lies outside the group")
        if not p.is_identity():
            seeds.append(p)
    gens = list(seeds)
    chain = _BSGS(G.degree, [p._img for p in gens])
    queue = list(seeds)
    conj_by = [g._img for g in G.generators]
    while queue:
        x = queue.pop()
        for g in conj_by:
            y = _conj(x._img, g)
            if not chain.contains(y):
                yp = Permutation._raw(y)
                gens.append(yp)
                queue.append(yp)
                chain = _BSGS(G.degree, [p._img for p in gens])
    return group_from_elements(G.degree, gens)


def commutator_group(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    """[A, B] for A, B <= G: normal closure in G of generator commutators."""
    comms = []
    for a in A.generators:
        for b in B.generators:
            c = Permutation._raw(_comm(a._img, b._img))
            if not c.is_identity():
                comms.append(c)
    return normal_closure(G, comms)


def derived_subgroup(G: PermGroup) -> PermGroup:
    cached = G._cache.get("derived")
    if cached is None:
        cached = commutator_group(G, G, G)
        cached.name = (G.name or "G") + "'"
        G._cache["derived"] = cached
    return cached


def center(G: PermGroup) -> PermGroup:
    cached = G._cache.get("center")
    if cached is None:
        gens = [g._img for g in G.generators]
        members = [p for p in G.elements()
                   if all(_mul(p._img, g) == _mul(g, p._img) for g in gens)]
        cached = group_from_elements(G.degree, members)
        G._cache["center"] = cached
    return cached


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """{g in G : H^g = H}, exhaustively over G (enumeration-bounded)."""
    if not G.contains_subgroup(H):
        raise MembershipError("H is not a subgroup of G")
    hset = {p._img for p in H.elements()}
    hgens = [h._img for h in H.generators]
    members = [g for g in G.elements()
               if all(_conj(h, g._img) in hset for h in hgens)]
    return group_from_elements(G.degree, members)


def quotient_group(G: PermGroup, N: PermGroup):
    """(G/N as a faithful permutation group on the cosets of N, projection).

    The coset action of G on N's right cosets is the regular realization of
    the quotient; its degree is the index.  N trivial short-circuits to G
    itself with the identity projection.
    """
    if not G.contains_subgroup(N):
        raise MembershipError("N is not a subgroup of G")
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    if N.order() == 1:
        return G, lambda p: p
    cs = CosetSpace(G, N, check=False)
    name = f"{G.name or 'G'}/{N.name or 'N'}"
    return cs.image(name=name), cs.image_of


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    ngens = [n._img for n in N.generators]
    for g in G.generators:
        for n in ngens:
            if not N.bsgs.contains(_conj(n, g._img)):
                return False
    return True


# ---------------------------------------------------------------------------
# Sylow subgroups


def _p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown inside iterated normalizers.

    Deterministic: the seed is the lexicographically first p-element, and
    each extension step takes the first p-element of the normalizer that
    lies outside the current subgroup.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise PreconditionError(f"{p} is not prime")
    cached = G._cache.get(("sylow", p))
    if cached is not None:
        return cached
    target = _p_part(G.order(), p)
    if target == 1:
        P = G.subgroup([], name=f"syl{p}")
        G._cache[("sylow", p)] = P
        return P
    seed = None
    for g in G.elements():
        o = g.order()
        if o % p == 0:
            seed = g ** (o // _p_part(o, p))
            break
    P = G.subgroup([seed], name=f"syl{p}")
    while P.order() < target:
        N = normalizer(G, P)
        ext = None
        for g in N.elements():
            o = g.order()
            if o % p == 0:
                q = g ** (o // _p_part(o, p))
                if q not in P:
                    ext = q
                    break
        if ext is None:  # cannot happen for p | |G| by Sylow theory
            raise PreconditionError("no p-element extends the subgroup")
        P = G.subgroup(list(P.generators) + [ext], name=f"syl{p}")
    G._cache[("sylow", p)] = P
    return P


def sylow_conjugates(G: PermGroup, P: PermGroup) -> list:
    """All G-conjugates of P, as PermGroups, in deterministic BFS order."""
    cache_key = ("sylow_conjugates", frozenset(p._img for p in P.generators))
    cached = G._cache.get(cache_key)
    if cached is not None:
        return cached
    start = frozenset(P.elements())
    seen = {start: P}
    frontier = [(start, P)]
    while frontier:
        nxt = []
        for _, Q in frontier:
            for g in G.generators:
                R = Q.conjugate(g)
                key = frozenset(R.elements())
                if key not in seen:
                    seen[key] = R
                    nxt.append((key, R))
        frontier = nxt
    out = [seen[k] for k in sorted(seen, key=lambda s: sorted(p._img for p in s))]
    G._cache[cache_key] = out
    return out


def primes_of(n: int) -> list:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# series


def _series_terms_derived(G: PermGroup) -> list:
    terms = [G]
    while True:
        nxt = derived_subgroup(terms[-1])
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
        if nxt.order() == 1:
            break
    return terms


def _series_terms_lower_central(G: PermGroup) -> list:
    terms = [G]
    while True:
        nxt = commutator_group(G, terms[-1], G)
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
        if nxt.order() == 1:
            break
    return terms


def _series_terms_upper_central(G: PermGroup) -> list:
    terms = [G.subgroup([])]
    gens = [g._img for g in G.generators]
    while True:
        cur = terms[-1]
        members = [p for p in G.elements()
                   if all(cur.bsgs.contains(_comm(p._img, g)) for g in gens)]
        nxt = group_from_elements(G.degree, members)
        if nxt.order() == cur.order():
            break
        terms.append(nxt)
    return terms


def is_solvable(G: PermGroup) -> bool:
    cached = G._cache.get("solvable")
    if cached is None:
        cached = _series_terms_derived(G)[-1].order() == 1
        G._cache["solvable"] = cached
    return cached


def is_nilpotent(G: PermGroup) -> bool:
    cached = G._cache.get("nilpotent")
    if cached is None:
        cached = _series_terms_lower_central(G)[-1].order() == 1
        G._cache["nilpotent"] = cached
    return cached


def nilpotency_class(G: PermGroup) -> Optional[int]:
    terms = _series_terms_lower_central(G)
    if terms[-1].order() != 1:
        return None
    return len(terms) - 1


def series_report(G: PermGroup, kind: str) -> SeriesReport:
    if kind == "derived":
        terms = _series_terms_derived(G)
    elif kind == "lower_central":
        terms = _series_terms_lower_central(G)
    elif kind == "upper_central":
        terms = _series_terms_upper_central(G)
    elif kind == "chief":
        return chief_series(G)
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    solvable = is_solvable(G)
    nilpotent = is_nilpotent(G)
    return SeriesReport(kind=kind, terms=terms,
                        is_solvable=solvable, is_nilpotent=nilpotent,
                        nilpotency_class=nilpotency_class(G) if nilpotent else None)


# ---------------------------------------------------------------------------
# chief series


def _minimal_normal_over(G: PermGroup, K: PermGroup,
                         within: Optional[PermGroup] = None) -> PermGroup:
    """Smallest normal subgroup of G strictly containing K (restricted to
    candidates inside ``within`` when given), ties broken by the
    lexicographically least prime-coset-order element achieving it.

    Every minimal-order closure over K is the closure of an element whose
    coset modulo K has prime order, so the scan is restricted to those; it
    stops early once the theoretical floor |K| * p_min is reached.
    """
    kset = K.element_set()
    ggens = [g._img for g in G.generators]
    pool = (within or G).elements()
    quotient_order = (within or G).order() // K.order()
    p_min = min(primes_of(quotient_order))
    floor = K.order() * p_min

    best: Optional[PermGroup] = None
    for g in pool:
        if g in kset:
            continue
        # order of the coset gK: least divisor d of |g| with g^d in K
        o = g.order()
        d = next(d for d in _divisors(o)
                 if d > 1 and Permutation._raw(_pow(g._img, d)) in kset)
        if primes_of(d) != [d]:
            continue  # coset order must be prime
        # cheap accept: g central modulo K generates K<g> of the floor order
        if d == p_min and all(K.bsgs.contains(_comm(g._img, s)) for s in ggens):
            return group_from_elements(
                G.degree, list(K.generators) + [g], name=None)
        closure = _closure_over(G, K, g, abort_above=best.order() if best else None)
        if closure is None:
            continue
        if best is None or closure.order() < best.order():
            best = closure
            if best.order() == floor:
                return best
    if best is None:
        raise PreconditionError("no proper extension exists (K = G?)")
    return best


def _divisors(n: int) -> list:
    out = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def _closure_over(G: PermGroup, K: PermGroup, g: Permutation,
                  abort_above: Optional[int]) -> Optional[PermGroup]:
    """Normal closure <K, g^G>, or None once it exceeds ``abort_above``."""
    from .group import _BSGS

    gens = list(K.generators) + [g]
    chain = _BSGS(G.degree, [p._img for p in gens])
    queue = [g]
    conj_by = [s._img for s in G.generators]
    while queue:
        x = queue.pop()
        for s in conj_by:
            y = _conj(x._img, s)
            if not chain.contains(y):
                yp = Permutation._raw(y)
                gens.append(yp)
                queue.append(yp)
                chain = _BSGS(G.degree, [p._img for p in gens])
                if abort_above is not None and chain.order >= abort_above:
                    return None
    return group_from_elements(G.degree, gens)


def chief_series(G: PermGroup) -> SeriesReport:
    """1 = N_0 < N_1 < ... < N_k = G with G-minimal factors, each tagged
    central or noncentral; requires G solvable.

    The series refines 1 <= G' <= G (candidates are scanned inside G'
    first), so factors split cleanly into those below and above the
    derived subgroup.
    """
    cached = G._cache.get("chief")
    if cached is not None:
        return cached
    if not is_solvable(G):
        raise UnsupportedGroup("chief series requires a solvable group")
    Gp = derived_subgroup(G)
    terms = [G.subgroup([], name="1")]
    while terms[-1].order() < Gp.order():
        terms.append(_minimal_normal_over(G, terms[-1], within=Gp))
    while terms[-1].order() < G.order():
        terms.append(_minimal_normal_over(G, terms[-1]))
    central = []
    orders = []
    for K, N in zip(terms, terms[1:]):
        flag = all(K.bsgs.contains(_comm(n._img, g._img))
                   for n in N.generators for g in G.generators)
        central.append(flag)
        orders.append(N.order() // K.order())
    report = SeriesReport(kind="chief", terms=terms,
                          is_solvable=True, is_nilpotent=is_nilpotent(G),
                          nilpotency_class=nilpotency_class(G) if is_nilpotent(G) else None,
                          factor_central=central, factor_orders=orders)
    G._cache["chief"] = report
    return report


def chief_quotient(G: PermGroup, K: PermGroup):
    """Memoized (G/K, projection) for chief-series terms."""
    key = ("chief_quotient", frozenset(p._img for p in K.generators), K.order())
    cached = G._cache.get(key)
    if cached is None:
        cached = quotient_group(G, K)
        G._cache[key] = cached
    return cached


# ---------------------------------------------------------------------------
# supplements


def is_supplement(G: PermGroup, H: PermGroup) -> bool:
    """Whether HG' = G, via |H| |G'| / |H ∩ G'| = |G|."""
    if not G.contains_subgroup(H):
        raise MembershipError("H is not a subgroup of G")
    Gp = derived_subgroup(G)
    inter = sum(1 for h in H.elements() if h in Gp)
    return H.order() * Gp.order() == G.order() * inter


# ---------------------------------------------------------------------------
# subgroup lattice (cyclic extension)


DEFAULT_LATTICE_MAX = 1000


@dataclass
class SubgroupRecord:
    elements: frozenset
    group: PermGroup

    def __len__(self):
        return len(self.elements)


def all_subgroups(G: PermGroup, cap: int = DEFAULT_LATTICE_MAX) -> list:
    """Every subgroup of a solvable group by cyclic extension, ordered by
    (order, sorted element key); cached per group.

    Layer n*q subgroups arise as <H, g> with H normal of prime index q and
    g a prime-power-order element of N_G(H) with g^q in H; for solvable G
    every subgroup has such a chain, so the enumeration is exhaustive.
    """
    cached = G._cache.get("lattice")
    if cached is not None:
        return cached
    n = G.order()
    if n > cap:
        raise CapacityExceeded(n, cap, what="subgroup lattice")
    if not is_solvable(G):
        raise UnsupportedGroup("subgroup lattice via cyclic extension needs a solvable group")

    elements = G.elements()
    idp = G.identity()
    # per-element data reused across the whole walk
    prime_power: dict[Permutation, Optional[tuple]] = {}
    for g in elements:
        o = g.order()
        ps = primes_of(o)
        prime_power[g] = (ps[0], g ** ps[0]) if len(ps) == 1 and o > 1 else None

    trivial = SubgroupRecord(frozenset([idp]), G.subgroup([], name="1"))
    found: dict[frozenset, SubgroupRecord] = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for rec in frontier:
            hset = rec.elements
            hgens = [h._img for h in rec.group.generators]
            covered: set[Permutation] = set()
            for g in elements:
                pp = prime_power.get(g)
                if pp is None or g in hset or g in covered:
                    continue
                q, gq = pp
                if gq not in hset:
                    continue
                if any(Permutation._raw(_conj(h, g._img)) not in hset for h in hgens):
                    continue
                # build U = H ∪ Hg ∪ ... ∪ Hg^(q-1) directly
                members = set(hset)
                coset = list(hset)
                for _ in range(q - 1):
                    coset = [x * g for x in coset]
                    members.update(coset)
                key = frozenset(members)
                covered.update(members)
                if key in found:
                    continue
                sub = G.subgroup(list(rec.group.generators) + [g])
                new = SubgroupRecord(key, sub)
                found[key] = new
                nxt.append(new)
        frontier = nxt
    out = sorted(found.values(),
                 key=lambda r: (len(r.elements), sorted(p._img for p in r.elements)))
    G._cache["lattice"] = out
    return out
