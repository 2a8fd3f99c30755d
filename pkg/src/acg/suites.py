"""Named verification suites: each runs one family of structural checks
over a single group and returns a VerificationReport.

Groups whose order exceeds a suite's cap are filtered before the suite
runs (the caller records that); a capacity error *inside* a check becomes
a skipped-capacity row instead.  Conjugation-invariant properties are
checked once per conjugacy class representative.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from . import anticentral as ac
from .errors import CapacityExceeded, TheoremViolation, UnsupportedGroup
from .group import PermGroup, coset_action, enum_bound
from .report import VerificationReport, describe_group, describe_perm
from .structure import (all_subgroups, chief_series, conjugacy_classes,
                        derived_subgroup, is_solvable, is_supplement,
                        normalizer, primes_of, sylow_subgroup,
                        subgroup_intersection, _p_part)
from .zoo import BuiltGroup, GroupManifest, embed_pair

SUITE_IDS = (
    "equivalences", "supplements", "carter", "sylow-hall", "p-complement",
    "normal-sylow", "invcls", "charaz", "solvability", "hereditary", "chartab",
)


@dataclass(frozen=True)
class SuiteLimits:
    max_order: int = 2000        # structural suites
    char_max_order: int = 300    # anything needing a character table
    charaz_max_order: int = 1000
    lattice_cap: int = 500       # exhaustive subgroup-lattice regimes


def effective_cap(suite: str, limits: SuiteLimits) -> int:
    if suite == "chartab":
        return min(limits.max_order, limits.char_max_order)
    if suite == "charaz":
        return min(limits.max_order, limits.charaz_max_order)
    return limits.max_order


def wrap_group(G: PermGroup) -> BuiltGroup:
    return BuiltGroup(group=G,
                      manifest=GroupManifest(name=G.name or "unnamed",
                                             family="file", params={}))


def run_suite(suite: str, built: BuiltGroup,
              limits: SuiteLimits = SuiteLimits()) -> Optional[VerificationReport]:
    """Run one suite; None when the group is filtered by the order cap."""
    if suite not in SUITE_IDS:
        raise ValueError(f"unknown suite {suite!r}")
    G = built.group
    if G.order() > effective_cap(suite, limits):
        return None
    fn = _SUITES[suite]
    report = fn(built, limits)
    report.engine.setdefault("enum_bound", enum_bound())
    report.engine.setdefault("order", G.order())
    return report


def _reps(G: PermGroup) -> list:
    return [c.representative for c in conjugacy_classes(G)]


def _anticentral_reps(G: PermGroup) -> list:
    return ac.anticentral_representatives(G)


def _vacuous(rep: VerificationReport, G: PermGroup) -> bool:
    """Record the no-anticentral-element case; the claims are then empty."""
    if _anticentral_reps(G):
        return False
    rep.add("no-anticentral-elements",
            "group has no anticentral elements; nothing to verify", True,
            detail={"order": G.order()})
    return True


def _supplements_containing(G: PermGroup, a, limits: SuiteLimits) -> list:
    """Supplements of G' containing a: exhaustive under the lattice cap,
    deterministically sampled above it."""
    if G.order() <= limits.lattice_cap:
        out = []
        flags = ac._supplement_flags(G)
        for rec in all_subgroups(G):
            if a not in rec.elements:
                continue
            supp = flags.get((rec.elements, "supp"))
            if supp is None:
                supp = is_supplement(G, rec.group)
                flags[(rec.elements, "supp")] = supp
            if supp:
                out.append(rec.group)
        return out
    cands = {}
    for g in ac._sample_elements(G):
        H = G.subgroup([a, g])
        cands.setdefault(frozenset(H.elements()), H)
    return [H for _, H in sorted(cands.items(),
                                 key=lambda kv: (len(kv[0]), sorted(p._img for p in kv[0])))
            if is_supplement(G, H)]


# ---------------------------------------------------------------------------


def _suite_equivalences(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="equivalences")
    with_chars = G.order() <= limits.char_max_order
    rep.engine["character_path"] = with_chars
    agree = 0
    bound_ok = True
    outside_ok = True
    Gp = derived_subgroup(G)
    nonabelian = Gp.order() > 1
    try:
        for a in _reps(G):
            cert = ac.equivalence_report(G, a, include_characters=with_chars)
            agree += 1
            if cert.centralizer_order < cert.commutator_index:
                bound_ok = False
            if nonabelian and cert.anticentral and a in Gp:
                outside_ok = False
    except TheoremViolation as exc:
        rep.add("four-conditions", "all anticentrality conditions agree",
                False, witness=exc.witness)
        return rep
    rep.add("four-conditions",
            "all evaluated anticentrality conditions agree on every class",
            True, detail={"classes": agree, "characters": with_chars})
    rep.add("centralizer-lower-bound",
            "|C_G(a)| >= |G:G'| for every element", bound_ok,
            witness=None if bound_ok else {"group": describe_group(G)})
    rep.add("anticentral-outside-derived",
            "in a nonabelian group anticentral elements avoid G'", outside_ok,
            witness=None if outside_ok else {"group": describe_group(G)})
    return rep


def _suite_supplements(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="supplements")
    if _vacuous(rep, G):
        return rep
    checked = 0
    for a in _anticentral_reps(G):
        for H in _supplements_containing(G, a, limits):
            sub = ac.supplement_properties(G, H, a)
            for c in sub.checks:
                if c.status == "fail":
                    rep.checks.append(c)
            checked += 1
            if H.order() < G.order():
                gset, _ = coset_action(G, H)
                try:
                    ac.fixed_point_analysis(gset, G, a)
                except TheoremViolation as exc:
                    rep.add("unique-fixed-coset",
                            "a fixes exactly one coset of each supplement",
                            False, witness=exc.witness)
    rep.add("supplement-structure",
            "commutator/derived coincidence, unique conjugate, centralizer "
            "containment, self-normalization and abnormality hold for every "
            "supplement containing an anticentral representative",
            all(c.status != "fail" for c in rep.checks),
            detail={"pairs_checked": checked})
    return rep


def _suite_carter(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="carter")
    if _vacuous(rep, G):
        return rep
    regime = None
    for a in _anticentral_reps(G):
        sub = ac.carter_verify(G, a, lattice_cap=limits.lattice_cap)
        regime = sub.engine.get("carter_regime", regime)
        for c in sub.checks:
            if c.status == "fail":
                rep.checks.append(c)
    rep.engine["carter_regime"] = regime
    rep.add("carter-claims",
            "C^inf(a) is the unique nilpotent self-normalizing supplement "
            "containing a, minimal among supplements and maximal among "
            "nilpotent subgroups",
            all(c.status != "fail" for c in rep.checks),
            detail={"representatives": len(_anticentral_reps(G))})

    if G.order() <= limits.lattice_cap:
        a0 = _anticentral_reps(G)[0]
        D = ac.carter_subgroup(G, a0)
        orbit = {frozenset(D.elements())}
        frontier = [D]
        while frontier:
            nxt = []
            for H in frontier:
                for g in G.generators:
                    K = H.conjugate(g)
                    key = frozenset(K.elements())
                    if key not in orbit:
                        orbit.add(key)
                        nxt.append(K)
            frontier = nxt
        bad = None
        elements = G.elements()
        for rec in all_subgroups(G):
            if rec.elements in orbit:
                continue
            hgens = rec.group.generators
            hset = rec.elements
            self_normalizing = all(
                g in hset or any(h.conj(g) not in hset for h in hgens)
                for g in elements)
            if not self_normalizing:
                continue
            from .structure import is_nilpotent

            if is_nilpotent(rec.group):
                bad = rec.group
                break
        rep.add("carter-conjugacy",
                "every self-normalizing nilpotent subgroup is conjugate to C^inf(a)",
                bad is None,
                witness=None if bad is None else {"H": describe_group(bad)})
    return rep


def _suite_sylow_hall(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="sylow-hall")
    if _vacuous(rep, G):
        return rep
    primes = primes_of(G.order())
    solvable = is_solvable(G)
    for a in _anticentral_reps(G):
        try:
            for p in primes:
                ac.invariant_sylow(G, G, a, p)
            sub = ac.sylow_normalizer_identity(G, a)
            for c in sub.checks:
                if c.status == "fail":
                    rep.checks.append(c)
            if solvable:
                ac.hall_system(G, G, a)
                Gp = derived_subgroup(G)
                if Gp.order() > 1:
                    ac.hall_system(G, Gp, a)
            D = ac.carter_subgroup(G, a)
            for p in primes:
                for H in (D, G):
                    sub = ac.sylow_meet_supplement(G, H, a, p)
                    for c in sub.checks:
                        if c.status == "fail":
                            rep.checks.append(c)
        except TheoremViolation as exc:
            rep.add("sylow-hall-violation", str(exc), False, witness=exc.witness)
    rep.add("sylow-hall",
            "unique a-fixed Sylow subgroups, the normalizer-intersection "
            "identity, Hall-system axioms, and Sylow-meet-supplement hold",
            all(c.status != "fail" for c in rep.checks),
            detail={"primes": primes, "solvable": solvable})
    return rep


def _suite_p_complement(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="p-complement")
    if _vacuous(rep, G):
        return rep
    a = _anticentral_reps(G)[0]
    Gp = derived_subgroup(G)
    candidates = [Gp] if Gp.order() > 1 else []
    if is_solvable(G):
        for N in chief_series(G).terms[1:-1]:
            if Gp.contains_subgroup(N):
                candidates.append(N)
    ran = 0
    for N in candidates:
        for p in primes_of(N.order()):
            P = sylow_subgroup(N, p)
            if not any(x.order() == P.order() for x in P.elements()):
                continue  # Sylow not cyclic; hypothesis empty
            sub = ac.cyclic_sylow_complement_check(G, a, N, p)
            ran += 1
            for c in sub.checks:
                if c.status == "fail":
                    rep.checks.append(c)
    rep.add("normal-p-complements",
            "normal subgroups of G' with cyclic Sylow p-subgroups have "
            "normal p-complements",
            all(c.status != "fail" for c in rep.checks),
            detail={"instances": ran})
    return rep


def _suite_normal_sylow(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="normal-sylow")
    from .structure import is_normal

    ran = 0
    if G.order() > limits.lattice_cap:
        rep.skip("normal-sylow", "complement search needs the subgroup lattice",
                 detail={"order": G.order(), "cap": limits.lattice_cap})
        return rep
    for p in primes_of(G.order()):
        P = sylow_subgroup(G, p)
        if P.order() == G.order() or not is_normal(G, P):
            continue
        m = G.order() // P.order()
        complements = [rec.group for rec in all_subgroups(G)
                       if len(rec.elements) == m
                       and subgroup_intersection(rec.group, P).order() == 1]
        if not complements:
            rep.add("complement-exists",
                    f"a complement to the normal Sylow {p}-subgroup exists",
                    False, witness={"group": describe_group(G)})
            continue
        for a in _reps(G):
            k = ac.decompose_p_part(a, p).p_prime_part
            K = next((c for c in complements if k in c), None)
            if K is None:
                rep.add("complement-covering",
                        f"some complement contains the {p}'-part of every element",
                        False, witness={"element": describe_perm(a)})
                continue
            sub = ac.normal_sylow_criteria(G, a, p, K)
            ran += 1
            for c in sub.checks:
                if c.status == "fail":
                    rep.checks.append(c)
    rep.add("normal-sylow-criteria",
            "the four local conditions match anticentrality for every class "
            "representative at every normal Sylow subgroup",
            all(c.status != "fail" for c in rep.checks),
            detail={"instances": ran})
    return rep


def _suite_invcls(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="invcls")
    if _vacuous(rep, G):
        return rep
    for a in _anticentral_reps(G):
        sub = ac.invariant_class_bijection(G, a)
        for c in sub.checks:
            if c.status == "fail":
                rep.checks.append(c)
    rep.add("invariant-class-bijection",
            "Z(C^inf(a)) maps bijectively onto the G-invariant G'-classes, "
            "each meeting C_G(a) exactly once",
            all(c.status != "fail" for c in rep.checks),
            detail={"representatives": len(_anticentral_reps(G))})
    return rep


def _suite_charaz(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="charaz")
    if not is_solvable(G):
        rep.add("solvable-input", "chief-factor criterion needs a solvable group",
                True, detail={"solvable": False, "note": "suite vacuous"})
        return rep
    bad = None
    for a in _reps(G):
        sub = ac.chief_factor_criterion(G, a)
        if not sub.ok:
            bad = sub.failures()[0]
            break
    rep.add("chief-factor-criterion",
            "fixed-point-freeness plus centralizer growth matches "
            "anticentrality for every class representative",
            bad is None,
            witness=None if bad is None else bad.witness,
            detail={"classes": len(conjugacy_classes(G))})
    return rep


def _suite_solvability(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="solvability")
    sub = ac.solvability_contrapositive(G)
    rep.checks.extend(sub.checks)
    rep.engine.update(sub.engine)
    return rep


def _suite_hereditary(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="hereditary")
    reps = _anticentral_reps(G)
    if reps and is_solvable(G):
        for a in reps:
            sub = ac.hereditary_quotients(G, a)
            for c in sub.checks:
                if c.status == "fail":
                    rep.checks.append(c)
        rep.add("quotient-heredity",
                "anticentral elements stay anticentral in every chief quotient",
                all(c.status != "fail" for c in rep.checks),
                detail={"representatives": len(reps)})
    if built.parts is not None:
        left, right = built.parts
        sub = ac.product_equivalence(
            G, left.group, right.group,
            lambda a, b: embed_pair(left.group, right.group, a, b))
        rep.checks.extend(sub.checks)
    if not rep.checks:
        rep.add("no-anticentral-elements",
                "group has no anticentral elements; nothing to verify", True)
    return rep


def _suite_chartab(built: BuiltGroup, limits: SuiteLimits) -> VerificationReport:
    from .chartab import character_table, is_zero_at, restriction_norm

    G = built.group
    rep = VerificationReport(group=built.manifest.name, suite="chartab")
    table = character_table(G)
    rep.engine["dixon_prime"] = table.prime
    rep.engine["conductor"] = table.conductor
    n = G.order()

    rep.add("degree-squares", "character degrees satisfy sum d^2 = |G|",
            sum(d * d for d in table.degrees) == n)
    rep.add("degrees-divide", "every character degree divides |G|",
            all(n % d == 0 for d in table.degrees))

    bad = None
    for i, ci in enumerate(table.classes):
        cent = n // ci.size
        from .chartab import orthogonality_check

        for j in range(i, len(table.classes)):
            want = cent if i == j else 0
            got = orthogonality_check(table, i, j)
            if got != want:
                bad = {"classes": [i, j], "got": got, "want": want}
                break
        if bad:
            break
    rep.add("second-orthogonality",
            "column sums match centralizer orders exactly", bad is None,
            witness=bad)

    nonlinear = [i for i, d in enumerate(table.degrees) if d > 1]
    mismatch = None
    index = n // derived_subgroup(G).order()
    for k, cls in enumerate(table.classes):
        vanishes = all(is_zero_at(table, i, k) for i in nonlinear)
        anticentral = (n // cls.size) == index
        if vanishes != anticentral:
            mismatch = {"class": describe_perm(cls.representative),
                        "vanishes": vanishes, "anticentral": anticentral}
            break
    rep.add("vanishing-criterion",
            "all nonlinear characters vanish at a iff |C(a)| = |G:G'|",
            mismatch is None, witness=mismatch)

    if _anticentral_reps(G) and nonlinear:
        Gp = derived_subgroup(G)
        bad = None
        for i in nonlinear:
            norm = restriction_norm(table, G, Gp, i)
            if norm <= 1:
                bad = {"character": i, "norm": norm}
                break
        rep.add("restriction-reducible",
                "every nonlinear character restricts reducibly to G' when "
                "anticentral elements exist",
                bad is None, witness=bad)
    return rep


_SUITES = {
    "equivalences": _suite_equivalences,
    "supplements": _suite_supplements,
    "carter": _suite_carter,
    "sylow-hall": _suite_sylow_hall,
    "p-complement": _suite_p_complement,
    "normal-sylow": _suite_normal_sylow,
    "invcls": _suite_invcls,
    "charaz": _suite_charaz,
    "solvability": _suite_solvability,
    "hereditary": _suite_hereditary,
    "chartab": _suite_chartab,
}
