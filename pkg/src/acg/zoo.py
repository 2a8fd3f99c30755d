"""Deterministic constructors for the test-group menagerie.

Each family returns a permutation group plus a manifest of expected
properties (orders, indices, designated elements and their centralizer
sizes); every expected entry is re-verified at construction time and a
mismatch fails loudly.  Manifests are data: the verify suites consume them
uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Callable, Optional

from .errors import ConstructionError, PreconditionError
from .group import CosetSpace, PermGroup
from .perm import Permutation
from .structure import (center, class_index_map, conjugacy_classes,
                        derived_subgroup, is_solvable, nilpotency_class,
                        primes_of)


@dataclass
class GroupManifest:
    name: str
    family: str
    params: dict
    expected: dict = field(default_factory=dict)
    # label -> {"element": cycle string, <property>: expected value, ...}
    designated: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "family": self.family, "params": self.params,
                "expected": self.expected, "designated": self.designated}

    @classmethod
    def from_dict(cls, d: dict) -> "GroupManifest":
        return cls(name=d["name"], family=d["family"], params=d.get("params", {}),
                   expected=d.get("expected", {}), designated=d.get("designated", {}))


@dataclass
class BuiltGroup:
    group: PermGroup
    manifest: GroupManifest
    # direct-product components kept so heredity suites can split pairs
    parts: Optional[tuple] = None

    def designated_element(self, label: str = "a") -> Permutation:
        from .perm import parse_permutation

        return parse_permutation(self.manifest.designated[label]["element"],
                                 self.group.degree)


# ---------------------------------------------------------------------------
# small finite fields (for unitriangular groups over prime powers)


class GF:
    """GF(p^k) with elements encoded as integers 0..q-1 (base-p digit
    vectors of polynomial coefficients, least degree first)."""

    def __init__(self, q: int):
        ps = primes_of(q)
        if len(ps) != 1:
            raise PreconditionError(f"{q} is not a prime power")
        self.q = q
        self.p = p = ps[0]
        self.k = k = round(_log_int(q, p))
        if p**k != q:
            raise PreconditionError(f"{q} is not a prime power")
        self.modpoly = self._find_irreducible() if k > 1 else (0, 1)
        self._mul_table = None

    def _find_irreducible(self) -> tuple:
        """Lexicographically least monic irreducible of degree k over F_p."""
        p, k = self.p, self.k
        for code in range(p**k):
            coeffs = _digits(code, p, k) + [1]
            if self._is_irreducible(coeffs):
                return tuple(coeffs)
        raise ConstructionError("no irreducible polynomial found")

    def _is_irreducible(self, coeffs) -> bool:
        p, k = self.p, self.k
        if coeffs[0] == 0:
            return False
        # test for factors of every degree up to k // 2
        for dcode in range(p, p ** (k // 2 + 1)):
            den = _digits(dcode, p, k // 2 + 1)
            while den and den[-1] == 0:
                den.pop()
            if len(den) < 2:
                continue
            if self._poly_rem(coeffs, den) == []:
                return False
        return True

    def _poly_rem(self, num, den):
        num = list(num)
        inv_lead = pow(den[-1], -1, self.p)
        while len(num) >= len(den):
            c = num[-1] * inv_lead % self.p
            off = len(num) - len(den)
            for i, d in enumerate(den):
                num[off + i] = (num[off + i] - c * d) % self.p
            while num and num[-1] == 0:
                num.pop()
        return num

    def add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is None:
            self._mul_table = [[self._mul_slow(x, y) for y in range(self.q)]
                               for x in range(self.q)]
        return self._mul_table[a][b]

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = _digits(a, p, k), _digits(b, p, k)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                conv[i + j] = (conv[i + j] + x * y) % p
        rem = self._poly_rem(conv, list(self.modpoly)) if k > 1 else [conv[0] % p]
        rem += [0] * (k - len(rem))
        return sum(c * p**i for i, c in enumerate(rem[:k]))

    def basis(self) -> list:
        """1, x, x^2, ... as encoded elements."""
        return [self.p**i for i in range(self.k)]


def _digits(n: int, base: int, width: int) -> list:
    out = []
    for _ in range(width):
        out.append(n % base)
        n //= base
    return out


def _log_int(q: int, p: int) -> int:
    k = 0
    while q > 1:
        q //= p
        k += 1
    return k


# ---------------------------------------------------------------------------
# building blocks


def _perm_from_map(degree: int, fn: Callable) -> Permutation:
    """Permutation from a 0-based point map."""
    return Permutation._raw(tuple(fn(i) for i in range(degree)))


def _regular_realization(elements: list, mul: Callable, gens: list,
                         name: str | None = None) -> tuple:
    """Right regular action on an abstract element list; returns the group
    and the element -> Permutation embedding."""
    index = {e: i for i, e in enumerate(elements)}

    def to_perm(g):
        return Permutation._raw(tuple(index[mul(x, g)] for x in elements))

    G = PermGroup(len(elements), [to_perm(g) for g in gens], name=name)
    return G, to_perm


def abelian_group(invariant_factors: list, name: str | None = None) -> PermGroup:
    """Direct product of cycles on disjoint blocks; [] gives the trivial
    group of degree 1."""
    for c in invariant_factors:
        if c < 2:
            raise PreconditionError("invariant factors must be at least 2")
    if not invariant_factors:
        return PermGroup(1, [], name=name or "C1")
    degree = sum(invariant_factors)
    gens = []
    offset = 0
    for c in invariant_factors:
        gens.append(Permutation.from_cycles(
            [list(range(offset + 1, offset + c + 1))], degree))
        offset += c
    default = "C" + "xC".join(str(c) for c in invariant_factors)
    return PermGroup(degree, gens, name=name or default)


def dihedral(order: int) -> PermGroup:
    if order % 2 or order < 6:
        raise PreconditionError("dihedral order must be an even number >= 6")
    m = order // 2
    r = Permutation.from_cycles([list(range(1, m + 1))], m)
    s = _perm_from_map(m, lambda i: (m - i) % m)
    return PermGroup(m, [r, s], name=f"D{order}")


def quaternion(order: int) -> PermGroup:
    if order < 8 or order & (order - 1):
        raise PreconditionError("generalized quaternion order must be 2^k >= 8")
    m = order // 2

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        i = (i1 - i2) % m
        if j2 == 0:
            return (i, 1)
        return ((i + m // 2) % m, 0)

    elements = [(i, j) for j in (0, 1) for i in range(m)]
    G, _ = _regular_realization(elements, mul, [(1, 0), (0, 1)], name=f"Q{order}")
    return G


def semidihedral(order: int) -> PermGroup:
    if order < 16 or order & (order - 1):
        raise PreconditionError("semidihedral order must be 2^k >= 16")
    m = order // 2
    t = m // 2 - 1

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        if j1 == 0:
            return ((i1 + i2) % m, j2)
        return ((i1 + t * i2) % m, 1 - j2)

    elements = [(i, j) for j in (0, 1) for i in range(m)]
    G, _ = _regular_realization(elements, mul, [(1, 0), (0, 1)], name=f"SD{order}")
    return G


def two_generated_2group(kind: str, order: int) -> PermGroup:
    """Maximal-class 2-groups: dihedral on order/2 points, quaternion and
    semidihedral via the regular action."""
    if order < 8 or order & (order - 1):
        raise PreconditionError("order must be a power of two, at least 8")
    if kind == "dihedral":
        return dihedral(order)
    if kind == "quaternion":
        return quaternion(order)
    if kind == "semidihedral":
        return semidihedral(order)
    raise PreconditionError(f"unknown kind {kind!r}")


# extraspecial blocks: each returns (group, central generator z, designated
# noncentral element x with <x> meeting the center trivially)


def _heisenberg_block(p: int):
    deg = p * p

    def enc(x, y):
        return x * p + y

    a = _perm_from_map(deg, lambda i: enc((i // p + 1) % p, i % p))
    b = _perm_from_map(deg, lambda i: enc(i // p, (i % p + i // p) % p))
    z = _perm_from_map(deg, lambda i: enc(i // p, (i % p + 1) % p))
    G = PermGroup(deg, [a, b], name=f"heis{p**3}")
    return G, z, a


def _exponent_p2_block(p: int):
    deg = p * p
    a = _perm_from_map(deg, lambda v: (v + 1) % deg)
    b = _perm_from_map(deg, lambda v: v * (1 + p) % deg)
    z = _perm_from_map(deg, lambda v: (v + p) % deg)
    G = PermGroup(deg, [a, b], name=f"M{p**3}")
    return G, z, b


def _d8_block():
    G = dihedral(8)
    r, s = G.generators
    return G, r * r, s


def _q8_block():
    G = quaternion(8)
    a, b = G.generators
    return G, a * a, a


def direct_product(A: PermGroup, B: PermGroup, name: str | None = None) -> PermGroup:
    """Action on the disjoint union of the point sets."""
    gens = [embed_left(A, B, g) for g in A.generators]
    gens += [embed_right(A, B, g) for g in B.generators]
    label = name or f"{A.name or 'A'}x{B.name or 'B'}"
    return PermGroup(A.degree + B.degree, gens, name=label)


def embed_left(A: PermGroup, B: PermGroup, a: Permutation) -> Permutation:
    return Permutation._raw(a._img + tuple(range(A.degree, A.degree + B.degree)))


def embed_right(A: PermGroup, B: PermGroup, b: Permutation) -> Permutation:
    return Permutation._raw(tuple(range(A.degree)) + tuple(x + A.degree for x in b._img))


def embed_pair(A: PermGroup, B: PermGroup, a: Permutation, b: Permutation) -> Permutation:
    return Permutation._raw(a._img + tuple(x + A.degree for x in b._img))


def _central_product(blockA, blockB, *, reduce_degree: bool, name: str):
    """Glue two blocks along their centers: (A x B) / <(zA, zB^-1)>.

    Realized by the coset action of the direct product on a subgroup W with
    core exactly the glued relation; candidate W's are tried in a fixed
    order (two noncentral block elements, one, none) and the first faithful
    realization wins.  With no reduction the action is regular.
    """
    A, zA, xA = blockA
    B, zB, xB = blockB
    D = direct_product(A, B)
    rel = embed_pair(A, B, zA, zB.inverse())
    target = A.order() * B.order() // zA.order()

    extras = [[embed_left(A, B, xA), embed_right(A, B, xB)],
              [embed_left(A, B, xA)],
              [embed_right(A, B, xB)],
              []] if reduce_degree else [[]]
    for extra in extras:
        W = D.subgroup([rel] + extra)
        cs = CosetSpace(D, W, check=False)
        image = cs.image(name=name)
        if image.order() == target:
            return image, (lambda a, b, cs=cs: cs.image_of(embed_pair(A, B, a, b)))
    raise ConstructionError("no faithful central-product realization found")


def extraspecial(p: int, order: int, exponent_type: str) -> PermGroup:
    """Extraspecial groups of order p^3 and p^5.

    Odd p: exponent_type "p" or "p2" picks the exponent; order p^5 glues
    two p^3 blocks.  p = 2: "D8"/"Q8" pick the order-8 group, and for order
    32 the central products D8*D8 resp. D8*Q8.
    """
    if p == 2:
        blocks = {"D8": _d8_block, "Q8": _q8_block}
        if exponent_type not in blocks:
            raise PreconditionError("exponent_type must be D8 or Q8 for p = 2")
        if order == 8:
            return blocks[exponent_type]()[0]
        if order == 32:
            G, _ = _central_product(_d8_block(), blocks[exponent_type](),
                                    reduce_degree=True,
                                    name=f"es32{exponent_type}")
            return G
        raise PreconditionError("supported orders for p = 2 are 8 and 32")
    if exponent_type not in ("p", "p2"):
        raise PreconditionError("exponent_type must be p or p2 for odd p")
    block = _heisenberg_block if exponent_type == "p" else _exponent_p2_block
    if order == p**3:
        return block(p)[0]
    if order == p**5:
        G, _ = _central_product(_heisenberg_block(p), block(p),
                                reduce_degree=True,
                                name=f"es{order}e{exponent_type}")
        return G
    raise PreconditionError("supported orders are p^3 and p^5")


def unitriangular(n: int, q: int, degree_budget: int = 4096):
    """Upper unitriangular n x n matrices over GF(q), acting on the q^n row
    vectors; returns (group, a) with a the full-superdiagonal element."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    F = GF(q)
    deg = q**n
    if deg > degree_budget:
        raise PreconditionError(
            f"degree {deg} exceeds the budget {degree_budget}")

    def enc(v):
        out = 0
        for i in reversed(range(n)):
            out = out * q + v[i]
        return out

    def dec(code):
        v = []
        for _ in range(n):
            v.append(code % q)
            code //= q
        return v

    gens = []
    for i in range(n - 1):
        for c in F.basis():
            def fn(code, i=i, c=c):
                v = dec(code)
                v[i + 1] = F.add(v[i + 1], F.mul(v[i], c))
                return enc(v)
            gens.append(_perm_from_map(deg, fn))

    def super_fn(code):
        v = dec(code)
        w = list(v)
        for j in range(1, n):
            w[j] = F.add(v[j], v[j - 1])
        return enc(w)

    a = _perm_from_map(deg, super_fn)
    G = PermGroup(deg, gens, name=f"UT({n},{q})")
    return G, a


def central_product_sl23_e(e_kind: str):
    """Central product of SL(2,3) with D8 or Q8 over identified centers,
    realized by the regular action on 96 points; returns (group, a) with a
    a designated anticentral element (order-3 part times a noncentral part
    of E)."""
    sq = [[0, 2], [1, 0]]
    tq = [[1, 1], [0, 1]]
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    vec_index = {v: i for i, v in enumerate(vectors)}

    def mat_perm(M):
        def image(i):
            x, y = vectors[i]
            return vec_index[((x * M[0][0] + y * M[1][0]) % 3,
                              (x * M[0][1] + y * M[1][1]) % 3)]
        return Permutation._raw(tuple(image(i) for i in range(8)))

    s, t = mat_perm(sq), mat_perm(tq)
    SL = PermGroup(8, [s, t], name="SL(2,3)")
    minus_one = s * s

    if e_kind == "D8":
        E, zE, y = _d8_block()
    elif e_kind == "Q8":
        E, zE, y = _q8_block()
    else:
        raise PreconditionError("e_kind must be D8 or Q8")

    G, proj = _central_product((SL, minus_one, t), (E, zE, y),
                               reduce_degree=False,
                               name=f"sl23*{e_kind}")
    return G, proj(t, y)


def fpf_semidirect(invariant_factors: list):
    """<alpha> acting on an odd-order abelian group by inversion; returns
    (group, alpha).  Inversion is fixed-point-free exactly for odd order."""
    if not invariant_factors:
        raise PreconditionError("the abelian kernel must be nontrivial")
    if any(c % 2 == 0 for c in invariant_factors):
        raise PreconditionError("the abelian kernel must have odd order")
    K = abelian_group(invariant_factors)
    pieces = []
    offset = 0
    for c in invariant_factors:
        block = list(range(offset, offset + c))
        pieces.append((offset, c))
        offset += c

    def inv_map(i):
        for off, c in pieces:
            if off <= i < off + c:
                return off + (c - (i - off)) % c
        return i

    alpha = _perm_from_map(K.degree, inv_map)
    name = "inv:" + (K.name or "K")
    G = PermGroup(K.degree, list(K.generators) + [alpha], name=name)
    return G, alpha


def classical(kind: str, **params) -> PermGroup:
    if kind == "symmetric":
        n = params["n"]
        gens = [Permutation.from_cycles([[1, 2]], n),
                Permutation.from_cycles([list(range(1, n + 1))], n)]
        return PermGroup(n, gens, name=f"S{n}")
    if kind == "alternating":
        n = params["n"]
        gens = [Permutation.from_cycles([[i, i + 1, i + 2]], n)
                for i in range(1, n - 1)]
        return PermGroup(n, gens, name=f"A{n}")
    if kind == "frobenius":
        p, d = params["p"], params["d"]
        if (p - 1) % d:
            raise PreconditionError(f"{d} does not divide {p} - 1")
        r = next(g for g in range(2, p)
                 if all(pow(g, (p - 1) // f, p) != 1 for f in primes_of(p - 1)))
        t = pow(r, (p - 1) // d, p)
        trans = _perm_from_map(p, lambda x: (x + 1) % p)
        mult = _perm_from_map(p, lambda x: x * t % p)
        return PermGroup(p, [trans, mult], name=f"C{p}:C{d}")
    if kind == "wreath_pp":
        p = params["p"]
        deg = p * p
        b0 = _perm_from_map(deg, lambda i: i // p * p + (i + 1) % p if i < p else i)
        top = _perm_from_map(deg, lambda i: (i + p) % deg)
        return PermGroup(deg, [b0, top], name=f"C{p}wrC{p}")
    if kind == "psl27":
        u = Permutation.from_cycles([[1, 2, 3, 4, 5, 6, 7]], 8)
        w = Permutation.from_cycles([[1, 8], [2, 7], [3, 4], [5, 6]], 8)
        return PermGroup(8, [u, w], name="PSL(2,7)")
    raise PreconditionError(f"unknown classical kind {kind!r}")


# ---------------------------------------------------------------------------
# manifest verification


def _anticentral_union(G: PermGroup) -> frozenset:
    from .anticentral import find_anticentral_classes

    out = set()
    for cls in find_anticentral_classes(G):
        out |= cls.members
    return frozenset(out)


def verify_manifest(built: BuiltGroup):
    """Re-check every expected entry; raises ConstructionError on mismatch."""
    from .anticentral import is_anticentral

    G = built.group
    man = built.manifest

    def fail(key, want, got):
        raise ConstructionError(
            f"{man.name}: expected {key} = {want!r}, got {got!r}")

    for key, want in man.expected.items():
        if key == "order":
            got = G.order()
        elif key == "degree":
            got = G.degree
        elif key == "derived_order":
            got = derived_subgroup(G).order()
        elif key == "derived_index":
            got = G.order() // derived_subgroup(G).order()
        elif key == "center_order":
            got = center(G).order()
        elif key == "solvable":
            got = is_solvable(G)
        elif key == "nilpotency_class":
            got = nilpotency_class(G)
        elif key == "anticentral":
            union = _anticentral_union(G)
            if want == "all":
                got = "all" if len(union) == G.order() else "some"
            elif want == "outside-derived":
                expect = G.element_set() - derived_subgroup(G).element_set()
                got = "outside-derived" if union == expect else "other"
            elif want == "outside-center":
                expect = G.element_set() - center(G).element_set()
                got = "outside-center" if union == expect else "other"
            elif want == "none":
                got = "none" if not union else "some"
            elif want == "exists":
                got = "exists" if union else "none"
            else:
                raise ConstructionError(f"unknown anticentral expectation {want!r}")
        elif key == "anticentral_order_bound":
            union = _anticentral_union(G)
            worst = max((x.order() for x in union), default=0)
            got = worst if worst > want else want
        elif key == "derived_quaternion_like":
            Gp = derived_subgroup(G)
            elems = Gp.elements()
            got = (Gp.order() == 8
                   and max(x.order() for x in elems) == 4
                   and sum(1 for x in elems if x.order() == 2) == 1)
        elif key == "elementary_abelian_central_quotient":
            Z = center(G)
            p = primes_of(G.order())[0]
            got = all((g**p) in Z for g in G.elements())
        else:
            raise ConstructionError(f"unknown manifest key {key!r}")
        if got != want:
            fail(key, want, got)

    for label, props in man.designated.items():
        a = built.designated_element(label)
        for key, want in props.items():
            if key == "element":
                continue
            if key == "anticentral":
                got = is_anticentral(G, a)
            elif key == "centralizer_order":
                from .structure import class_size
                got = G.order() // class_size(G, a)
            elif key == "order":
                got = a.order()
            elif key == "not_anticentral_in_centralizer":
                from .structure import centralizer
                got = not is_anticentral(centralizer(G, a), a)
            else:
                raise ConstructionError(f"unknown designated key {key!r}")
            if got != want:
                fail(f"{label}.{key}", want, got)


# ---------------------------------------------------------------------------
# family registry and the builtin corpus


def build(family: str, **params) -> BuiltGroup:
    """Construct a family member plus its verified manifest."""
    designated: dict = {}
    expected: dict = {}
    parts = None

    if family == "abelian":
        factors = list(params["factors"])
        G = abelian_group(factors)
        expected = {"order": max(1, prod(factors)), "anticentral": "all",
                    "solvable": True}
    elif family == "two_generated_2group":
        kind, order = params["kind"], params["order"]
        G = two_generated_2group(kind, order)
        k = order.bit_length() - 1
        expected = {"order": order, "nilpotency_class": k - 1,
                    "anticentral": "exists", "anticentral_order_bound": 4}
        if order == 8:
            expected["anticentral"] = "outside-derived"
            del expected["anticentral_order_bound"]
    elif family == "extraspecial":
        p, order, et = params["p"], params["order"], params["exponent_type"]
        G = extraspecial(p, order, et)
        expected = {"order": order, "center_order": p, "derived_order": p,
                    "elementary_abelian_central_quotient": True,
                    "anticentral": "outside-derived" if order == p**3
                    else "outside-center"}
        if order == p**5:
            a = _first_noncentral(G)
            designated["a"] = {"element": a.cycle_string(),
                               "anticentral": True,
                               "not_anticentral_in_centralizer": True}
    elif family == "unitriangular":
        n, q = params["n"], params["q"]
        G, a = unitriangular(n, q)
        expected = {"order": q ** (n * (n - 1) // 2),
                    "derived_index": q ** (n - 1), "solvable": True}
        designated["a"] = {"element": a.cycle_string(), "anticentral": True,
                           "centralizer_order": q ** (n - 1),
                           "order": _least_p_power_at_least(primes_of(q)[0], n)}
    elif family == "central_product_sl23_e":
        G, a = central_product_sl23_e(params["e_kind"])
        expected = {"order": 96, "derived_order": 8, "derived_index": 12,
                    "derived_quaternion_like": True, "solvable": True}
        designated["a"] = {"element": a.cycle_string(), "anticentral": True,
                           "centralizer_order": 12}
    elif family == "fpf_semidirect":
        factors = list(params["factors"])
        G, alpha = fpf_semidirect(factors)
        expected = {"order": 2 * prod(factors), "anticentral": "exists"}
        designated["alpha"] = {"element": alpha.cycle_string(),
                               "anticentral": True, "centralizer_order": 2}
    elif family == "classical":
        kind = params["kind"]
        G = classical(**params)
        if kind == "symmetric":
            n = params["n"]
            expected = {"order": prod(range(1, n + 1)),
                        "anticentral": "exists" if n < 4 else "none"}
        elif kind == "alternating":
            n = params["n"]
            expected = {"order": prod(range(1, n + 1)) // 2,
                        "anticentral": "exists" if n == 4 else "none",
                        "solvable": n <= 4}
            if n == 4:
                designated["a"] = {"element": "(1 2 3)", "anticentral": True,
                                   "centralizer_order": 3}
        elif kind == "frobenius":
            p, d = params["p"], params["d"]
            expected = {"order": p * d, "anticentral": "exists", "solvable": True}
        elif kind == "wreath_pp":
            p = params["p"]
            expected = {"order": p ** (p + 1),
                        "nilpotency_class": p, "anticentral": "exists"}
        elif kind == "psl27":
            expected = {"order": 168, "anticentral": "none", "solvable": False}
    elif family == "direct_product":
        left = build(params["left"]["family"], **params["left"]["params"])
        right = build(params["right"]["family"], **params["right"]["params"])
        G = direct_product(left.group, right.group)
        parts = (left, right)
        expected = {"order": left.group.order() * right.group.order()}
        la = left.manifest.designated.get("a") or left.manifest.designated.get("alpha")
        ra = right.manifest.designated.get("a") or right.manifest.designated.get("alpha")
        if la and ra:
            pair = embed_pair(left.group, right.group,
                              left.designated_element(_label(left)),
                              right.designated_element(_label(right)))
            anticentral = la.get("anticentral") and ra.get("anticentral")
            designated["a"] = {"element": pair.cycle_string(),
                               "anticentral": bool(anticentral)}
    else:
        raise PreconditionError(f"unknown family {family!r}")

    name = params.pop("name", None) or G.name or family
    G.name = name
    built = BuiltGroup(group=G,
                       manifest=GroupManifest(name=name, family=family,
                                              params=params, expected=expected,
                                              designated=designated),
                       parts=parts)
    verify_manifest(built)
    return built


def _label(built: BuiltGroup) -> str:
    return "a" if "a" in built.manifest.designated else "alpha"


def _first_noncentral(G: PermGroup) -> Permutation:
    zset = center(G).element_set()
    return next(p for p in G.elements() if p not in zset)


def _least_p_power_at_least(p: int, n: int) -> int:
    m = 1
    while m < n:
        m *= p
    return m


BUILTIN_SPECS = [
    ("abelian", {"factors": [], "name": "C1"}),
    ("abelian", {"factors": [2]}),
    ("abelian", {"factors": [6]}),
    ("abelian", {"factors": [2, 2]}),
    ("abelian", {"factors": [4, 2]}),
    ("abelian", {"factors": [12]}),
    ("two_generated_2group", {"kind": "dihedral", "order": 8}),
    ("two_generated_2group", {"kind": "quaternion", "order": 8}),
    ("two_generated_2group", {"kind": "dihedral", "order": 16}),
    ("two_generated_2group", {"kind": "quaternion", "order": 16}),
    ("two_generated_2group", {"kind": "semidihedral", "order": 16}),
    ("two_generated_2group", {"kind": "dihedral", "order": 32}),
    ("extraspecial", {"p": 3, "order": 27, "exponent_type": "p"}),
    ("extraspecial", {"p": 3, "order": 27, "exponent_type": "p2"}),
    ("extraspecial", {"p": 2, "order": 32, "exponent_type": "D8"}),
    ("extraspecial", {"p": 2, "order": 32, "exponent_type": "Q8"}),
    ("extraspecial", {"p": 3, "order": 243, "exponent_type": "p"}),
    ("extraspecial", {"p": 3, "order": 243, "exponent_type": "p2"}),
    ("unitriangular", {"n": 3, "q": 2}),
    ("unitriangular", {"n": 3, "q": 3}),
    ("unitriangular", {"n": 4, "q": 2}),
    ("unitriangular", {"n": 4, "q": 3}),
    ("unitriangular", {"n": 5, "q": 2}),
    ("central_product_sl23_e", {"e_kind": "D8"}),
    ("central_product_sl23_e", {"e_kind": "Q8"}),
    ("fpf_semidirect", {"factors": [3]}),
    ("fpf_semidirect", {"factors": [5]}),
    ("fpf_semidirect", {"factors": [3, 3]}),
    ("classical", {"kind": "symmetric", "n": 4}),
    ("classical", {"kind": "symmetric", "n": 5}),
    ("classical", {"kind": "alternating", "n": 4}),
    ("classical", {"kind": "alternating", "n": 5}),
    ("classical", {"kind": "frobenius", "p": 7, "d": 3}),
    ("classical", {"kind": "frobenius", "p": 5, "d": 4}),
    ("classical", {"kind": "wreath_pp", "p": 3}),
    ("classical", {"kind": "psl27"}),
    ("direct_product", {
        "name": "S3xS3",
        "left": {"family": "fpf_semidirect", "params": {"factors": [3]}},
        "right": {"family": "fpf_semidirect", "params": {"factors": [3]}}}),
    ("direct_product", {
        "name": "S3xA4",
        "left": {"family": "fpf_semidirect", "params": {"factors": [3]}},
        "right": {"family": "classical", "params": {"kind": "alternating", "n": 4}}}),
]

_CORPUS_CACHE: Optional[list] = None


def builtin_corpus() -> list:
    """The builtin verification corpus, built once per process."""
    global _CORPUS_CACHE
    if _CORPUS_CACHE is None:
        _CORPUS_CACHE = [build(family, **dict(params))
                         for family, params in BUILTIN_SPECS]
    return _CORPUS_CACHE


def builtin_names() -> list:
    return [b.manifest.name for b in builtin_corpus()]
