"""Permutations of {1..n} with right-action composition.

Conventions, fixed once for the whole package:

* points are 1-based in every public interface;
* composition is a right action: ``p * q`` moves a point first by ``p``,
  then by ``q``, so ``w ** (p * q) == (w ** p) ** q`` for points ``w``;
* conjugation is ``x ** g == g**-1 * x * g`` (written ``x.conj(g)``);
* the commutator is ``[a, g] = a**-1 * g**-1 * a * g``, which satisfies
  ``a * commutator(a, g) == a.conj(g)``.

Internally images are stored 0-based as plain tuples; the raw helpers at
the bottom operate on those tuples and are what the hot loops use.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import CycleParseError, DegreeMismatch


class Permutation:
    """Immutable bijection of {1..degree}."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        """Build from the 1-based image sequence (images[i] is where i+1 goes)."""
        img = tuple(x - 1 for x in images)
        n = len(img)
        if sorted(img) != list(range(n)):
            raise ValueError("image sequence is not a bijection of {1..%d}" % n)
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        """Wrap an already-validated 0-based image tuple (internal)."""
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], degree: int) -> "Permutation":
        """Build from disjoint cycles of 1-based points; unmentioned points stay fixed."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = list(cyc)
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise CycleParseError(f"point {pt} out of range 1..{degree}")
                if pt in seen:
                    raise CycleParseError(f"repeated point {pt}")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """The 1-based image table."""
        return tuple(x + 1 for x in self._img)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        p, q = self._img, other._img
        if len(p) != len(q):
            raise DegreeMismatch(f"degrees {len(p)} and {len(q)} differ")
        return Permutation._raw(tuple(q[x] for x in p))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        if n == -1:
            return self.inverse()
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, g: "Permutation") -> "Permutation":
        """Conjugate self^g = g^-1 * self * g."""
        if len(self._img) != len(g._img):
            raise DegreeMismatch("degrees differ")
        return Permutation._raw(_conj(self._img, g._img))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = _lcm(n, len(cyc))
        return n

    def moved_points(self) -> list:
        return [i + 1 for i, x in enumerate(self._img) if x != i]

    def cycles(self, include_fixed: bool = False) -> list:
        """Disjoint cycles as 1-based point lists, each starting at its least
        point, sorted by least point."""
        seen = [False] * len(self._img)
        out = []
        for i in range(len(self._img)):
            if seen[i]:
                continue
            seen[i] = True
            if self._img[i] == i:
                if include_fixed:
                    out.append([i + 1])
                continue
            cyc = [i + 1]
            j = self._img[i]
            while j != i:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(cyc)
        return out

    def cycle_string(self) -> str:
        """Canonical cycle notation; the identity prints as ``()``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self._img < other._img

    def __le__(self, other):
        return self._img <= other._img

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse whitespace-separated disjoint cycles of 1-based points.

    The empty string is the identity.  Errors name the text offset of the
    offending character and the violated rule (repeated point, point out
    of range, malformed parenthesis).
    """
    cycles = []
    current = None  # points of the open cycle, else None
    open_at = 0
    num_start = None
    i = 0
    n = len(text)

    def flush_number(end):
        nonlocal num_start
        if num_start is None:
            return
        start, num_start = num_start, None
        value = int(text[start:end])
        if current is None:
            raise CycleParseError("point outside any cycle", start)
        if not 1 <= value <= degree:
            raise CycleParseError(f"point {value} out of range 1..{degree}", start)
        current.append(value)

    while i < n:
        ch = text[i]
        if ch == "(":
            flush_number(i)
            if current is not None:
                raise CycleParseError("nested '('", i)
            current = []
            open_at = i
        elif ch == ")":
            flush_number(i)
            if current is None:
                raise CycleParseError("unmatched ')'", i)
            cycles.append(current)
            current = None
        elif ch.isdigit():
            if num_start is None:
                num_start = i
        elif ch.isspace():
            flush_number(i)
        else:
            raise CycleParseError(f"unexpected character {ch!r}", i)
        i += 1
    flush_number(n)
    if current is not None:
        raise CycleParseError("unclosed '('", open_at)

    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if pt in seen:
                raise CycleParseError(f"repeated point {pt}")
            seen.add(pt)
    return Permutation.from_cycles(cycles, degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p then q (right action)."""
    return p * q


def commutator(a: Permutation, g: Permutation) -> Permutation:
    """[a, g] = a^-1 g^-1 a g, so that a * [a, g] == a.conj(g)."""
    if a.degree != g.degree:
        raise DegreeMismatch("degrees differ")
    return Permutation._raw(_comm(a._img, g._img))


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# raw 0-based image-tuple helpers (internal hot path)

def _mul(p: tuple, q: tuple) -> tuple:
    """p then q on raw tuples."""
    return tuple(q[x] for x in p)


def _inv(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _conj(x: tuple, g: tuple) -> tuple:
    """x^g = g^-1 x g on raw tuples."""
    gi = _inv(g)
    return tuple(g[x[y]] for y in gi)


def _comm(a: tuple, g: tuple) -> tuple:
    """[a, g] = a^-1 g^-1 a g on raw tuples."""
    return _mul(_inv(_mul(g, a)), _mul(a, g))


def _identity(degree: int) -> tuple:
    return tuple(range(degree))


def _is_identity(p: tuple) -> bool:
    return all(i == x for i, x in enumerate(p))


def _pow(p: tuple, n: int) -> tuple:
    if n < 0:
        p, n = _inv(p), -n
    result = tuple(range(len(p)))
    while n:
        if n & 1:
            result = _mul(result, p)
        p = _mul(p, p)
        n >>= 1
    return result
