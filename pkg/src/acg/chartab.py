"""Exact irreducible character tables by class-sum splitting over F_q.

The class-multiplication matrices are simultaneously diagonalized over a
prime field F_q with q = 1 mod exponent(G) and q > 2 sqrt(|G|) (least such
prime, recorded for reproducibility), then character values are lifted to
cyclotomic integers through the power maps by finite-field Fourier
inversion.  Degrees come from normalizing each eigenvector at the identity
class; a non-square there, or any orthogonality failure, is raised as a
hard error rather than repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

import numpy as np

from .cyclotomic import CyclotomicValue
from .errors import NotNormal, TableConsistencyError
from .group import PermGroup
from .perm import Permutation, _inv, _mul
from .structure import (class_index_map, conjugacy_classes, derived_subgroup,
                        is_normal, primes_of)


@dataclass
class CharacterTable:
    group: PermGroup
    classes: list            # ConjClass, identity class first
    irreducibles: tuple      # rows, each a tuple of CyclotomicValue
    degrees: tuple
    linear_count: int
    conductor: int           # = exponent(G), uniform for the whole table
    prime: int               # the splitting prime q

    def value(self, chi: int, cls: int) -> CyclotomicValue:
        return self.irreducibles[chi][cls]

    def class_of(self, p: Permutation) -> int:
        return class_index_map(self.group)[p]


# ---------------------------------------------------------------------------
# modular linear algebra (dense, numpy int64; q is a small prime)


def _rref_mod(A: np.ndarray, q: int):
    R = np.array(A % q, dtype=np.int64)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * pow(int(R[r, c]), q - 2, q)) % q
        col = R[:, c].copy()
        col[r] = 0
        R = (R - np.outer(col, R[r])) % q
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R[:r], pivots


def _nullspace_mod(A: np.ndarray, q: int) -> np.ndarray:
    """Basis of the right null space as columns, in echelon order."""
    R, pivots = _rref_mod(A, q)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = (-R[i, fc]) % q
    return basis


def _solve_square(B: np.ndarray, Y: np.ndarray, q: int) -> np.ndarray:
    """X with B X = Y for invertible B (via rref of the augmented matrix)."""
    d = B.shape[0]
    aug = np.concatenate([B % q, Y % q], axis=1)
    R, pivots = _rref_mod(aug, q)
    if pivots[:d] != list(range(d)):
        raise TableConsistencyError("singular restriction block")
    return R[:, d:]


# ---------------------------------------------------------------------------
# Dixon machinery


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime q = 1 (mod exponent) with q > 2 sqrt(order)."""
    q = 2
    while True:
        q += 1
        if q * q <= 4 * order or (q - 1) % exponent:
            continue
        if all(q % d for d in range(2, isqrt(q) + 1)):
            return q


def _primitive_root(q: int) -> int:
    fs = primes_of(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in fs):
            return g
    raise TableConsistencyError(f"no primitive root mod {q}")


def _class_matrices(G: PermGroup, classes) -> list:
    """M_i with (M_i)[j, k] = #{(x, y) in C_i x C_j : x y = rep_k}."""
    r = len(classes)
    idx = class_index_map(G)
    reps_raw = [c.representative._img for c in classes]
    mats = []
    for i in range(r):
        M = np.zeros((r, r), dtype=np.int64)
        for x in classes[i].members:
            xi = _inv(x._img)
            for k in range(r):
                y = _mul(xi, reps_raw[k])
                M[idx[Permutation._raw(y)], k] += 1
        mats.append(M)
    return mats


def group_exponent(G: PermGroup) -> int:
    from math import lcm

    e = 1
    for c in conjugacy_classes(G):
        e = lcm(e, c.representative.order())
    return e


def _split_common_eigenvectors(mats, q: int) -> list:
    """Vectors w (columns) with M w = lambda w for every class matrix."""
    r = mats[0].shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for M in mats[1:]:  # the identity-class matrix is I and splits nothing
        if all(S.shape[1] == 1 for S in spaces):
            break
        refined = []
        for S in spaces:
            d = S.shape[1]
            if d == 1:
                refined.append(S)
                continue
            MS = (M % q) @ S % q
            _, pivots = _rref_mod(S.T, q)
            B = S[pivots, :]
            A = _solve_square(B, MS[pivots, :], q)
            if not np.array_equal(MS % q, S @ A % q):
                raise TableConsistencyError("class matrix does not preserve subspace")
            got = 0
            for lam in range(q):
                N = _nullspace_mod((A - lam * np.eye(d, dtype=np.int64)) % q, q)
                if N.shape[1]:
                    refined.append((S @ N) % q)
                    got += N.shape[1]
                    if got == d:
                        break
            if got != d:
                raise TableConsistencyError("class matrix not diagonalizable mod q")
        spaces = refined
    if any(S.shape[1] != 1 for S in spaces):
        raise TableConsistencyError("common eigenspaces did not become one-dimensional")
    return [S[:, 0] % q for S in spaces]


def character_table(G: PermGroup) -> CharacterTable:
    """Exact character table; cached per group."""
    cached = G._cache.get("character_table")
    if cached is not None:
        return cached

    classes = conjugacy_classes(G)
    r = len(classes)
    n = G.order()
    e = group_exponent(G)
    q = dixon_prime(n, e)
    idx = class_index_map(G)

    mats = _class_matrices(G, classes)
    eigvecs = _split_common_eigenvectors(mats, q)
    if len(eigvecs) != r:
        raise TableConsistencyError("eigenvector count differs from class count")

    sizes = [c.size for c in classes]
    inv_class = [idx[c.representative.inverse()] for c in classes]
    # power map: class of rep_k^t for t mod e
    power_map = []
    for c in classes:
        row = []
        p = G.identity()
        for _ in range(e):
            row.append(idx[p])
            p = p * c.representative
        power_map.append(row)

    z = pow(_primitive_root(q), (q - 1) // e, q)  # order exactly e in F_q*
    zpow = [pow(z, j, q) for j in range(e)]
    e_inv = pow(e, q - 2, q)

    rows = []
    degrees = []
    for w in eigvecs:
        w = [int(x) % q for x in w]
        if w[0] == 0:
            raise TableConsistencyError("eigenvector vanishes at the identity class")
        w0inv = pow(w[0], q - 2, q)
        omega = [(x * w0inv) % q for x in w]
        s = 0
        for k in range(r):
            s = (s + omega[k] * omega[inv_class[k]] * pow(sizes[k], q - 2, q)) % q
        if s == 0:
            raise TableConsistencyError("degree normalization sum is singular")
        d2 = (n % q) * pow(s, q - 2, q) % q
        deg = None
        for cand in range(1, isqrt(n) + 1):
            if (cand * cand) % q == d2:
                deg = cand
                break
        if deg is None:
            raise TableConsistencyError("degree is not an integer square root")
        # theta_k = chi(rep_k) mod q
        theta = [(deg * omega[k] * pow(sizes[k], q - 2, q)) % q for k in range(r)]
        values = []
        for k in range(r):
            powers = []
            pmk = power_map[k]
            for i in range(e):
                acc = 0
                for t in range(e):
                    acc += theta[pmk[t]] * zpow[(-i * t) % e]
                a = (acc % q) * e_inv % q
                if a > deg:
                    raise TableConsistencyError("lifted multiplicity exceeds the degree")
                powers.append(a)
            values.append(CyclotomicValue.from_power_coeffs(e, powers))
        rows.append(tuple(values))
        degrees.append(deg)

    order = sorted(range(r), key=lambda i: (degrees[i],
                                            [v.coeffs for v in rows[i]]))
    rows = tuple(rows[i] for i in order)
    degrees = tuple(degrees[i] for i in order)

    table = CharacterTable(group=G, classes=classes, irreducibles=rows,
                           degrees=degrees,
                           linear_count=sum(1 for d in degrees if d == 1),
                           conductor=e, prime=q)
    _self_check(table)
    G._cache["character_table"] = table
    return table


def _self_check(table: CharacterTable):
    n = table.group.order()
    if sum(d * d for d in table.degrees) != n:
        raise TableConsistencyError("degree squares do not sum to the group order")
    index = n // derived_subgroup(table.group).order()
    if table.linear_count != index:
        raise TableConsistencyError("linear character count differs from |G:G'|")
    for row, deg in zip(table.irreducibles, table.degrees):
        if not row[0] == deg:
            raise TableConsistencyError("identity-class value is not the degree")
        norm = CyclotomicValue.zero(table.conductor)
        for cls, v in zip(table.classes, row):
            norm = norm + v.norm_squared() * cls.size
        if not norm == n:
            raise TableConsistencyError("a row fails first orthogonality")


def is_zero_at(table: CharacterTable, chi: int, cls: int) -> bool:
    """Exact zero test of one table entry."""
    return table.irreducibles[chi][cls].is_zero()


def orthogonality_check(table: CharacterTable, class_i: int, class_j: int) -> int:
    """Second orthogonality sum over the characters, as an exact integer.

    Equals |C_G(rep_i)| when the classes coincide, 0 otherwise.
    """
    total = CyclotomicValue.zero(table.conductor)
    for row in table.irreducibles:
        total = total + row[class_i] * row[class_j].conjugate()
    return total.as_int()


def restriction_norm(table: CharacterTable, G: PermGroup, N: PermGroup,
                     chi: int) -> int:
    """<chi_N, chi_N> = (1/|N|) sum over N of |chi(n)|^2, exactly.

    The restriction is irreducible iff the result is 1.
    """
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    idx = class_index_map(G)
    row = table.irreducibles[chi]
    total = CyclotomicValue.zero(table.conductor)
    for p in N.elements():
        total = total + row[idx[p]].norm_squared()
    val = total.as_int()
    if val % N.order():
        raise TableConsistencyError("restriction norm is not an integer")
    return val // N.order()
