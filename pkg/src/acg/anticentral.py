"""Anticentral elements: detection, the Carter subgroup C^inf(a), invariant
Sylow/Hall structure, and one verification routine per structural claim.

An element a is anticentral when |C_G(a)| = |G:G'|; three more equivalent
characterizations (class = coset, commutator set = derived subgroup, all
nonlinear irreducible characters vanish at a) are evaluated independently
by ``equivalence_report`` and asserted to agree.  The default detector is
the centralizer-order test, which needs only an orbit computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (MembershipError, PreconditionError, TheoremViolation,
                     UnsupportedGroup)
from .group import (GSet, PermGroup, group_from_elements, orbit_of,
                    subgroup_intersection)
from .perm import Permutation, commutator
from .report import VerificationReport, describe_group, describe_perm
from .structure import (ConjClass, all_subgroups, center, centralizer,
                        chief_quotient, chief_series, class_index_map,
                        class_size, conjugacy_classes, derived_subgroup,
                        is_nilpotent, is_normal, is_solvable, is_supplement,
                        normalizer, primes_of, sylow_conjugates,
                        sylow_subgroup, _p_part)

LATTICE_EXHAUSTIVE_MAX = 500
ABNORMALITY_EXHAUSTIVE_MAX = 500
SAMPLE_SIZE = 48


@dataclass
class AnticentralCertificate:
    element: Permutation
    centralizer_order: int
    commutator_index: int  # |G:G'|
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: Optional[bool]  # None when the character path was skipped
    class_coset_witness: Optional[Permutation]  # in aG' \ a^G when they differ

    @property
    def anticentral(self) -> bool:
        return self.cond_i


@dataclass
class CChain:
    element: Permutation
    levels: list        # increasing element sets, levels[0] = {1}
    limit: PermGroup    # subgroup generated by the stabilized level
    closed: bool        # stabilized level already closed under the product


@dataclass
class HallSystem:
    owner: PermGroup
    subgroups: dict     # frozenset of primes -> PermGroup


@dataclass
class DecomposedElement:
    a: Permutation
    p_part: Permutation
    p_prime_part: Permutation


# ---------------------------------------------------------------------------
# detection


def commutator_index(G: PermGroup) -> int:
    return G.order() // derived_subgroup(G).order()


def is_anticentral(G: PermGroup, a: Permutation) -> bool:
    """|C_G(a)| == |G:G'|, via orbit-stabilizer; no enumeration, no table."""
    if a not in G:
        raise MembershipError("element is not in the group")
    return G.order() // class_size(G, a) == commutator_index(G)


def equivalence_report(G: PermGroup, a: Permutation,
                       include_characters: bool = True) -> AnticentralCertificate:
    """Evaluate the four characterizations independently and insist they agree.

    Disagreement raises TheoremViolation: it would mean either a bug or a
    counterexample to the equivalence, and must never pass silently.
    """
    if a not in G:
        raise MembershipError("element is not in the group")
    Gp = derived_subgroup(G)
    index = G.order() // Gp.order()

    cls_members = _class_members(G, a)
    cent_order = G.order() // len(cls_members)
    cond_i = cent_order == index

    coset = {a * g for g in Gp.elements()}
    cond_ii = cls_members == coset

    comm_set = {commutator(a, g) for g in G.elements()}
    cond_iii = comm_set == Gp.element_set()

    cond_iv = None
    if include_characters:
        from .chartab import character_table, is_zero_at

        table = character_table(G)
        k = table.class_of(a)
        cond_iv = all(is_zero_at(table, i, k)
                      for i, d in enumerate(table.degrees) if d > 1)

    evaluated = [cond_i, cond_ii, cond_iii] + ([cond_iv] if cond_iv is not None else [])
    if len(set(evaluated)) != 1:
        raise TheoremViolation(
            "equivalent anticentrality conditions disagree",
            witness={"element": describe_perm(a), "group": describe_group(G),
                     "conditions": evaluated})
    if cent_order < index:
        raise TheoremViolation(
            "centralizer order fell below |G:G'|",
            witness={"element": describe_perm(a), "orders": [cent_order, index]})

    witness = None
    if not cond_ii:
        witness = min(coset - cls_members)
    return AnticentralCertificate(
        element=a, centralizer_order=cent_order, commutator_index=index,
        cond_i=cond_i, cond_ii=cond_ii, cond_iii=cond_iii, cond_iv=cond_iv,
        class_coset_witness=witness)


def _class_members(G: PermGroup, a: Permutation) -> frozenset:
    classes = G._cache.get("classes")
    if classes is not None:
        return classes[class_index_map(G)[a]].members
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = x.conj(g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def find_anticentral_classes(G: PermGroup) -> list:
    """Conjugacy classes whose members are anticentral (possibly none)."""
    index = commutator_index(G)
    return [c for c in conjugacy_classes(G)
            if G.order() // c.size == index]


def anticentral_representatives(G: PermGroup) -> list:
    return [c.representative for c in find_anticentral_classes(G)]


# ---------------------------------------------------------------------------
# the chain C^i(a) and its limit


def c_chain(G: PermGroup, a: Permutation) -> CChain:
    """Levels C^0 = {1}, C^(i+1) = {x : [a, x] in C^i}, and their union."""
    if a not in G:
        raise MembershipError("element is not in the group")
    cached = G._cache.get(("cchain", a._img))
    if cached is not None:
        return cached
    elements = G.elements()
    comm = {x: commutator(a, x) for x in elements}
    level = frozenset([G.identity()])
    levels = [level]
    while True:
        nxt = frozenset(x for x in elements if comm[x] in level)
        if nxt == level:
            break
        levels.append(nxt)
        level = nxt
    limit = group_from_elements(G.degree, sorted(level), name="C^inf")
    chain = CChain(element=a, levels=levels, limit=limit,
                   closed=limit.order() == len(level))
    G._cache[("cchain", a._img)] = chain
    return chain


def carter_subgroup(G: PermGroup, a: Permutation) -> PermGroup:
    """C^inf(a) for anticentral a; by the structure theory this is the
    nilpotent self-normalizing supplement of G' containing a."""
    chain = c_chain(G, a)
    if not chain.closed and is_anticentral(G, a):
        raise TheoremViolation(
            "C^inf(a) failed to be closed for an anticentral element",
            witness={"element": describe_perm(a), "group": describe_group(G)})
    return chain.limit


# ---------------------------------------------------------------------------
# verification routines (one per structural claim)


def _new_report(G: PermGroup, suite: str) -> VerificationReport:
    return VerificationReport(group=G.name or f"degree-{G.degree}", suite=suite)


def _sample_elements(G: PermGroup, size: int = SAMPLE_SIZE) -> list:
    """Deterministic spread of elements: generators first, then an even
    slice of the sorted element list."""
    elems = G.elements()
    step = max(1, len(elems) // size)
    picked = list(G.generators) + list(elems[::step])
    seen, out = set(), []
    for p in picked:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _supplement_flags(G: PermGroup):
    """supplement/nilpotency flags per lattice record, cached on G."""
    flags = G._cache.get("lattice_flags")
    if flags is None:
        flags = {}
        G._cache["lattice_flags"] = flags
    return flags


def carter_verify(G: PermGroup, a: Permutation,
                  lattice_cap: int = LATTICE_EXHAUSTIVE_MAX) -> VerificationReport:
    """All five claims about D = C^inf(a) for anticentral a.

    Exhaustive against the subgroup lattice when |G| <= lattice_cap,
    otherwise against supplements generated from a plus sampled elements;
    the report records which regime ran.
    """
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    rep = _new_report(G, "carter")
    chain = c_chain(G, a)
    D = chain.limit
    rep.add("chain-closed", "the stabilized chain level is a subgroup",
            chain.closed,
            witness={"element": describe_perm(a)} if not chain.closed else None)

    nilp = is_nilpotent(D)
    selfnorm = normalizer(G, D).order() == D.order()
    rep.add("nilpotent-self-normalizing",
            "D is a nilpotent self-normalizing subgroup",
            nilp and selfnorm,
            witness=None if (nilp and selfnorm) else
            {"D": describe_group(D), "nilpotent": nilp, "self_normalizing": selfnorm},
            detail={"order": D.order(), "element": describe_perm(a)})

    rep.add("supplement", "D G' = G", is_supplement(G, D),
            witness=None if is_supplement(G, D) else {"D": describe_group(D)})

    exhaustive = G.order() <= lattice_cap
    if exhaustive:
        candidates = [(r.elements, r.group) for r in all_subgroups(G)]
    else:
        cands = {}
        for g in _sample_elements(G):
            for extra in ([], [g]):
                H = G.subgroup([a] + extra)
                key = frozenset(H.elements())
                cands.setdefault(key, H)
        for g in _sample_elements(G, SAMPLE_SIZE // 4):
            for h in _sample_elements(G, SAMPLE_SIZE // 8):
                H = G.subgroup([a, g, h])
                key = frozenset(H.elements())
                cands.setdefault(key, H)
        candidates = sorted(cands.items(), key=lambda kv: (len(kv[0]), sorted(p._img for p in kv[0])))
    rep.engine["carter_regime"] = "exhaustive" if exhaustive else "sampled"

    d_set = D.element_set()
    flags = _supplement_flags(G) if exhaustive else {}
    mins_ok, mins_wit = True, None
    maxs_ok, maxs_wit = True, None
    uniq_ok, uniq_wit = True, None
    for key, H in candidates:
        if a not in key:
            continue
        supp = flags.get((key, "supp"))
        if supp is None:
            supp = is_supplement(G, H)
            if exhaustive:
                flags[(key, "supp")] = supp
        if supp and not d_set <= key:
            mins_ok, mins_wit = False, {"H": describe_group(H)}
        contained = key <= d_set
        if not contained:
            nil = flags.get((key, "nilp"))
            if nil is None:
                nil = is_nilpotent(H)
                if exhaustive:
                    flags[(key, "nilp")] = nil
            if nil:
                maxs_ok, maxs_wit = False, {"H": describe_group(H)}
            if nil and supp and key != d_set:
                uniq_ok, uniq_wit = False, {"H": describe_group(H)}
    rep.add("supplements-contain-D",
            "every supplement of G' containing a contains D", mins_ok, mins_wit)
    rep.add("nilpotent-below-D",
            "every nilpotent subgroup containing a lies in D", maxs_ok, maxs_wit)
    rep.add("unique-nilpotent-supplement",
            "D is the only nilpotent supplement of G' containing a",
            uniq_ok, uniq_wit)
    return rep


def fixed_point_analysis(gset: GSet, G: PermGroup, a: Permutation):
    """The unique a-fixed point of a G-set on which G' acts transitively."""
    Gp = derived_subgroup(G)
    sub_action = GSet(points=gset.points, action=gset.action, group=Gp)
    if len(orbit_of(sub_action, gset.points[0])) != len(gset.points):
        raise PreconditionError("the derived subgroup is not transitive on the set")
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    fixed = [pt for pt in gset.points if gset.action(pt, a) == pt]
    if len(fixed) != 1:
        raise TheoremViolation(
            f"anticentral element fixes {len(fixed)} points instead of one",
            witness={"element": describe_perm(a), "fixed": [repr(p) for p in fixed]})
    return fixed[0]


def supplement_properties(G: PermGroup, H: PermGroup, a: Permutation,
                          abnormal_cap: int = ABNORMALITY_EXHAUSTIVE_MAX) -> VerificationReport:
    """Structure of a supplement H with a in H, a anticentral in G:
    commutator/derived/intersection coincidence, unique conjugate containing
    a, centralizer containment, self-normalization, abnormality."""
    if a not in H:
        raise PreconditionError("a does not lie in H")
    if not is_supplement(G, H):
        raise PreconditionError("H is not a supplement of the derived subgroup")
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    rep = _new_report(G, "supplements")
    rep.engine["H"] = describe_group(H)
    Gp_set = derived_subgroup(G).element_set()
    h_elems = H.elements()

    comm_set = frozenset(commutator(a, h) for h in h_elems)
    Hp_set = derived_subgroup(H).element_set()
    meet = frozenset(h for h in h_elems if h in Gp_set)
    ok = comm_set == Hp_set == meet
    rep.add("commutator-coincidence", "[a,H] = H' = H meet G'", ok,
            witness=None if ok else {
                "sizes": [len(comm_set), len(Hp_set), len(meet)],
                "element": describe_perm(a)})
    rep.add("anticentral-in-H", "a is anticentral in H",
            is_anticentral(H, a),
            witness=None if is_anticentral(H, a) else {"element": describe_perm(a)})

    h_set = H.element_set()
    locator = frozenset(x for x in G.elements()
                        if a.conj(x.inverse()) in h_set)
    ok = locator == h_set
    rep.add("unique-conjugate", "{x : a in H^x} = H", ok,
            witness=None if ok else {"difference": len(locator ^ h_set)})

    cent = centralizer(G, a)
    ok = all(c in h_set for c in cent.elements())
    rep.add("centralizer-inside", "C_G(a) <= H", ok,
            witness=None if ok else {"centralizer": describe_group(cent)})

    ok = normalizer(G, H).order() == H.order()
    rep.add("self-normalizing", "N_G(H) = H", ok,
            witness=None if ok else {"H": describe_group(H)})

    # the abnormality test is constant on cosets Hx and independent of a
    cache_key = ("abnormal", h_set)
    if cache_key in G._cache:
        bad, regime = G._cache[cache_key]
    elif H.order() == G.order():
        bad, regime = None, "trivial"
    else:
        exhaustive = G.order() <= abnormal_cap
        sample = G.elements() if exhaustive else _sample_elements(G)
        regime = "exhaustive" if exhaustive else "sampled"
        hgens = list(H.generators)
        h_elems = H.elements()
        bad = None
        covered = set(h_elems)
        for x in sample:
            if x in covered:
                continue
            covered.update(h * x for h in h_elems)
            L = G.subgroup(hgens + [h.conj(x) for h in hgens])
            if x not in L:
                bad = x
                break
        G._cache[cache_key] = (bad, regime)
    rep.engine["abnormality_regime"] = regime
    rep.add("abnormal", "x lies in <H, H^x> for every x", bad is None,
            witness=None if bad is None else {"x": describe_perm(bad)})
    return rep


def invariant_sylow(G: PermGroup, N: PermGroup, a: Permutation, p: int) -> PermGroup:
    """The unique Sylow p-subgroup of normal N fixed by the anticentral a;
    uniqueness is asserted by scanning every Sylow p-subgroup of N."""
    if not is_normal(G, N):
        raise PreconditionError("N is not normal in G")
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    P = sylow_subgroup(N, p)
    if P.order() == 1:
        return P
    fixed = []
    for Q in sylow_conjugates(N, P):
        if all(q.conj(a) in Q for q in Q.generators):
            fixed.append(Q)
    if len(fixed) != 1:
        raise TheoremViolation(
            f"{len(fixed)} Sylow {p}-subgroups fixed instead of one",
            witness={"element": describe_perm(a),
                     "fixed": [describe_group(Q) for Q in fixed]})
    return fixed[0]


def hall_system(G: PermGroup, N: PermGroup, a: Permutation) -> HallSystem:
    """The a-invariant Hall subgroups of a solvable normal N, one per prime
    set, assembled from the a-invariant Sylow basis; Hall-system axioms
    (orders, invariance, pairwise permutability, agreement with the
    complement basis) are verified on the way out."""
    if not is_solvable(N):
        raise UnsupportedGroup("Hall systems need a solvable group")
    primes = primes_of(N.order())
    basis = {p: invariant_sylow(G, N, a, p) for p in primes}

    subgroups: dict[frozenset, PermGroup] = {}
    for mask in range(1 << len(primes)):
        pi = frozenset(p for i, p in enumerate(primes) if mask >> i & 1)
        gens = [g for p in sorted(pi) for g in basis[p].generators]
        H = N.subgroup(gens, name=f"hall{sorted(pi)}")
        want = 1
        for p in pi:
            want *= _p_part(N.order(), p)
        if H.order() != want:
            raise TheoremViolation(
                "invariant Sylow subgroups fail to assemble into a Hall subgroup",
                witness={"primes": sorted(pi), "order": H.order(), "expected": want})
        if not all(h.conj(a) in H for h in H.generators):
            raise TheoremViolation(
                "assembled Hall subgroup is not a-invariant",
                witness={"primes": sorted(pi), "H": describe_group(H)})
        subgroups[pi] = H

    keys = sorted(subgroups, key=sorted)
    for i, k1 in enumerate(keys):
        for k2 in keys[i + 1:]:
            H, K = subgroups[k1], subgroups[k2]
            join = N.subgroup(list(H.generators) + list(K.generators))
            meet = subgroup_intersection(H, K)
            if join.order() * meet.order() != H.order() * K.order():
                raise TheoremViolation(
                    "Hall subgroups fail to permute",
                    witness={"pi1": sorted(k1), "pi2": sorted(k2),
                             "orders": [H.order(), K.order(),
                                        join.order(), meet.order()]})
    # complement-basis identity: H_pi = intersection of the p-complements, p outside pi
    full = frozenset(primes)
    for pi in keys:
        outside = sorted(full - pi)
        if not outside:
            continue
        inter = subgroups[full - frozenset([outside[0]])]
        for p in outside[1:]:
            inter = subgroup_intersection(inter, subgroups[full - frozenset([p])])
        if not inter.same_group(subgroups[pi]):
            raise TheoremViolation(
                "Hall system disagrees with its complement basis",
                witness={"pi": sorted(pi)})
    return HallSystem(owner=N, subgroups=subgroups)


def sylow_normalizer_identity(G: PermGroup, a: Permutation) -> VerificationReport:
    """C^inf(a) equals the intersection of the normalizers of the a-fixed
    Sylow subgroups, one per prime divisor."""
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    rep = _new_report(G, "sylow-hall")
    D = carter_subgroup(G, a)
    inter_set = G.element_set()
    for p in primes_of(G.order()):
        P = invariant_sylow(G, G, a, p)
        NP = normalizer(G, P)
        np_set = NP.element_set()
        rep.add(f"chain-normalizes-sylow-{p}",
                f"C^inf(a) normalizes the a-fixed Sylow {p}-subgroup",
                all(x.conj(d) in P for x in P.generators for d in D.generators),
                detail={"sylow_order": P.order()})
        inter_set &= np_set
    ok = inter_set == D.element_set()
    wit = None
    if not ok:
        diff = min(inter_set ^ D.element_set())
        wit = {"element": describe_perm(diff),
               "chain_order": D.order(), "intersection_order": len(inter_set)}
    rep.add("normalizer-intersection",
            "C^inf(a) = intersection of normalizers of a-fixed Sylow subgroups",
            ok, witness=wit)
    return rep


def cyclic_sylow_complement_check(G: PermGroup, a: Permutation, N: PermGroup,
                                  p: int) -> VerificationReport:
    """N normal, N <= G', Sylow p of N cyclic: the p'-elements of N must
    form a normal complement of index the p-part."""
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    if not is_normal(G, N):
        raise PreconditionError("N is not normal in G")
    Gp = derived_subgroup(G)
    if not Gp.contains_subgroup(N):
        raise PreconditionError("N does not lie inside the derived subgroup")
    P = sylow_subgroup(N, p)
    if not any(x.order() == P.order() for x in P.elements()):
        raise PreconditionError(f"the Sylow {p}-subgroup of N is not cyclic")

    rep = _new_report(G, "p-complement")
    rep.engine["N"] = describe_group(N)
    rep.engine["p"] = p
    targets = [x for x in N.elements() if gcd(x.order(), p) == 1]
    K = group_from_elements(G.degree, targets, name=f"{p}-complement")
    ok = (K.order() == len(targets)
          and K.order() * _p_part(N.order(), p) == N.order()
          and is_normal(N, K))
    rep.add("normal-p-complement",
            f"the {p}'-elements of N form a normal complement",
            ok,
            witness=None if ok else {"candidate": describe_group(K),
                                     "p_prime_elements": len(targets)},
            detail={"complement_order": K.order()})
    return rep


def decompose_p_part(a: Permutation, p: int) -> DecomposedElement:
    """a = x k = k x with x the p-part and k the p'-part, via the standard
    power split of the exponents."""
    o = a.order()
    pk = _p_part(o, p)
    m = o // pk
    x = a ** (m * pow(m, -1, pk)) if pk > 1 else Permutation.identity(a.degree)
    k = a ** (pk * pow(pk, -1, m)) if m > 1 else Permutation.identity(a.degree)
    assert x * k == a == k * x
    return DecomposedElement(a=a, p_part=x, p_prime_part=k)


def normal_sylow_criteria(G: PermGroup, a: Permutation, p: int,
                          K: PermGroup) -> VerificationReport:
    """With P the normal Sylow p-subgroup and K a complement containing the
    p'-part of a: the four local conditions hold together exactly when a is
    anticentral in G."""
    P = sylow_subgroup(G, p)
    if not is_normal(G, P):
        raise PreconditionError(f"the Sylow {p}-subgroup is not normal")
    if K.order() * P.order() != G.order() or subgroup_intersection(K, P).order() != 1:
        raise PreconditionError("K is not a complement of the Sylow subgroup")
    dec = decompose_p_part(a, p)
    x, k = dec.p_part, dec.p_prime_part
    if k not in K:
        raise PreconditionError("K does not contain the p'-part of a")

    rep = _new_report(G, "normal-sylow")
    rep.engine["p"] = p
    rep.engine["element"] = describe_perm(a)

    cond1 = is_anticentral(K, k)
    U = group_from_elements(
        G.degree, [y for y in P.elements() if y * k == k * y], name="C_P(k)")
    cond2 = is_anticentral(U, x)
    Pp = derived_subgroup(P)
    cond3 = subgroup_intersection(U, Pp).same_group(derived_subgroup(U))
    kgens = list(K.generators) or [K.identity()]
    CPK = group_from_elements(
        G.degree, [y for y in P.elements() if all(y * g == g * y for g in kgens)])
    cond4 = CPK.same_group(U)

    conj = cond1 and cond2 and cond3 and cond4
    truth = is_anticentral(G, a)
    for name, claim, val in [
            ("complement-part", "the p'-part is anticentral in the complement", cond1),
            ("p-part-local", "the p-part is anticentral in C_P(k)", cond2),
            ("derived-meet", "C_P(k) meet P' = C_P(k)'", cond3),
            ("centralizer-match", "C_P(K) = C_P(k)", cond4)]:
        rep.checks.append(_info_check(name, claim, val))
    rep.add("conjunction-equivalence",
            "the four conditions hold iff a is anticentral in G",
            conj == truth,
            witness=None if conj == truth else {
                "element": describe_perm(a),
                "conditions": [cond1, cond2, cond3, cond4],
                "anticentral": truth})
    return rep


def _info_check(name: str, claim: str, value: bool):
    from .report import Check

    return Check(check=name, claim=claim, status="pass",
                 detail={"holds": value})


def sylow_meet_supplement(G: PermGroup, H: PermGroup, a: Permutation,
                          p: int) -> VerificationReport:
    """P the a-fixed Sylow p of G, S the a-fixed Sylow p of the supplement
    H containing a: then P meet H = S."""
    if not is_supplement(G, H) or a not in H:
        raise PreconditionError("H must be a supplement of G' containing a")
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    rep = _new_report(G, "sylow-hall")
    P = invariant_sylow(G, G, a, p)
    S = invariant_sylow(H, H, a, p)
    meet = subgroup_intersection(P, H)
    ok = meet.same_group(S)
    rep.add(f"sylow-meet-{p}",
            "the a-fixed Sylow of G meets H in the a-fixed Sylow of H",
            ok,
            witness=None if ok else {"P": describe_group(P), "S": describe_group(S),
                                     "meet": describe_group(meet)},
            detail={"orders": [P.order(), S.order(), meet.order()]})
    return rep


def invariant_class_bijection(G: PermGroup, a: Permutation) -> VerificationReport:
    """x -> x^G maps Z(C^inf(a)) bijectively onto the G-invariant classes of
    G' (classes that are single G'-classes); each such class meets C_G(a)
    exactly once."""
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    rep = _new_report(G, "invcls")
    D = carter_subgroup(G, a)
    ZD = center(D).elements()
    Gp = derived_subgroup(G)
    idx = class_index_map(G)

    invariant = []
    for i, cls in enumerate(conjugacy_classes(G)):
        seen = {cls.representative}
        frontier = [cls.representative]
        while frontier:
            nxt = []
            for x in frontier:
                for g in Gp.generators:
                    y = x.conj(g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(seen) == cls.size:
            invariant.append(i)

    image = [idx[x] for x in ZD]
    ok = sorted(image) == sorted(set(image)) and set(image) == set(invariant)
    rep.add("bijection",
            "x -> class(x) is a bijection from Z(D) to the G-invariant G'-classes",
            ok,
            witness=None if ok else {
                "center_size": len(ZD), "invariant_classes": len(invariant),
                "image_classes": sorted(set(image))},
            detail={"size": len(invariant)})

    classes = conjugacy_classes(G)
    bad = None
    for i in invariant:
        hits = [x for x in classes[i].members if x * a == a * x]
        if len(hits) != 1:
            bad = {"class": describe_perm(classes[i].representative),
                   "hits": len(hits)}
            break
    rep.add("single-intersection",
            "every invariant class meets C_G(a) in exactly one element",
            bad is None, witness=bad)
    return rep


def chief_factor_criterion(G: PermGroup, a: Permutation) -> VerificationReport:
    """Fixed-point-freeness on noncentral chief factors plus strict
    centralizer growth across central factors inside G', jointly equivalent
    to anticentrality (solvable G)."""
    if a not in G:
        raise MembershipError("element is not in the group")
    series = chief_series(G)
    rep = _new_report(G, "charaz")
    rep.engine["element"] = describe_perm(a)
    Gp = derived_subgroup(G)

    all_hold = True
    for step, (K, N) in enumerate(zip(series.terms, series.terms[1:])):
        central = series.factor_central[step]
        QK, projK = chief_quotient(G, K)
        aK = projK(a)
        if not central:
            m_gens = [projK(n) for n in N.generators]
            M = QK.subgroup(m_gens)
            fixed = [m for m in M.elements() if m.conj(aK) == m]
            holds = len(fixed) == 1
            rep.checks.append(_info_check(
                f"factor-{step}-fpf",
                "a acts fixed-point-freely on a noncentral chief factor",
                holds))
        else:
            if not Gp.contains_subgroup(N):
                continue
            QN, projN = chief_quotient(G, N)
            aN = projN(a)
            ck = QK.order() // class_size(QK, aK) * K.order()
            cn = QN.order() // class_size(QN, aN) * N.order()
            holds = ck < cn
            rep.checks.append(_info_check(
                f"factor-{step}-growth",
                "centralizer grows strictly across a central factor inside G'",
                holds))
        all_hold = all_hold and holds

    truth = is_anticentral(G, a)
    rep.add("criterion-equivalence",
            "both chief-factor conditions hold iff a is anticentral",
            all_hold == truth,
            witness=None if all_hold == truth else {
                "element": describe_perm(a), "conditions": all_hold,
                "anticentral": truth})
    return rep


def solvability_contrapositive(G: PermGroup) -> VerificationReport:
    """Groups with anticentral elements are solvable; contrapositively a
    nonsolvable group must have an empty anticentral set."""
    rep = _new_report(G, "solvability")
    found = find_anticentral_classes(G)
    solvable = is_solvable(G)
    rep.engine["anticentral_classes"] = len(found)
    rep.engine["solvable"] = solvable
    ok = solvable or not found
    rep.add("solvable-when-anticentral",
            "a group with an anticentral element is solvable",
            ok,
            witness=None if ok else {
                "representatives": [describe_perm(c.representative) for c in found]})
    return rep


def hereditary_quotients(G: PermGroup, a: Permutation) -> VerificationReport:
    """Anticentrality passes to every quotient: checked along the chief
    series terms (solvable G)."""
    if not is_anticentral(G, a):
        raise PreconditionError("element is not anticentral")
    rep = _new_report(G, "hereditary")
    rep.engine["element"] = describe_perm(a)
    series = chief_series(G)
    for i, N in enumerate(series.terms[1:], start=1):
        Q, proj = chief_quotient(G, N)
        ok = is_anticentral(Q, proj(a))
        rep.add(f"quotient-{i}",
                f"the image of a stays anticentral modulo the order-{N.order()} term",
                ok,
                witness=None if ok else {"element": describe_perm(a),
                                         "term_order": N.order()})
    return rep


def product_equivalence(P: PermGroup, A: PermGroup, B: PermGroup,
                        embed) -> VerificationReport:
    """(a, b) anticentral in A x B iff both components are; verified over
    all pairs of class representatives."""
    rep = _new_report(P, "hereditary")
    bad = None
    for ca in conjugacy_classes(A):
        for cb in conjugacy_classes(B):
            lhs = is_anticentral(P, embed(ca.representative, cb.representative))
            rhs = (is_anticentral(A, ca.representative)
                   and is_anticentral(B, cb.representative))
            if lhs != rhs:
                bad = {"a": describe_perm(ca.representative),
                       "b": describe_perm(cb.representative),
                       "product": lhs, "components": rhs}
                break
        if bad:
            break
    rep.add("product-equivalence",
            "a pair is anticentral in the product iff both components are",
            bad is None, witness=bad)
    return rep
