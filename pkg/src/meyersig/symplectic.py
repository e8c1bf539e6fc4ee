"""Symplectic matrices over the integers, transvections, and SL(2,Z) words.

The alternating form is fixed once and for all as J = [[0, I], [-I, 0]] with
respect to a basis ordered (a_1..a_g, b_1..b_g). Every sign downstream is
derived from this convention; flipping the orientation convention flips the
sign of the signature cocycle globally.

A transvection here is x -> x + (x^t J v) v. For v = e_1 at genus 1 this is
[[1, -1], [0, 1]], the homology image of the *inverse* of a right-handed
Dehn twist; the twist itself is its inverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    GenusMismatch,
    MatrixFormatError,
    NotSymplectic,
    NotUnimodular,
    ZeroVector,
)
from .exactnum import RatMatrix


def standard_J(g: int) -> RatMatrix:
    """The 2g x 2g block matrix [[0, I_g], [-I_g, 0]]."""
    if g < 1:
        raise MatrixFormatError(f"genus must be >= 1, got {g}")
    n = 2 * g
    rows = []
    for i in range(n):
        row = [Fraction(0)] * n
        if i < g:
            row[g + i] = Fraction(1)
        else:
            row[i - g] = Fraction(-1)
        rows.append(row)
    return RatMatrix(rows, cols=n)


class SymplecticElement:
    """A 2g x 2g integer matrix A with A^t J A = J, validated on construction."""

    __slots__ = ("mat", "g")

    def __init__(self, mat: RatMatrix | Iterable[Iterable]):
        if not isinstance(mat, RatMatrix):
            mat = RatMatrix(mat)
        if mat.rows != mat.cols or mat.rows % 2 != 0 or mat.rows < 2:
            raise NotSymplectic(f"need an even square matrix of size >= 2, got {mat.shape}")
        if not mat.is_integral():
            raise NotSymplectic("entries must be integers")
        g = mat.rows // 2
        j = standard_J(g)
        if mat.transpose() * j * mat != j:
            raise NotSymplectic("matrix does not preserve the alternating form")
        if g == 1:
            a, b = mat.data[0]
            c, d = mat.data[1]
            if a * d - b * c != 1:
                raise NotSymplectic("2x2 symplectic matrix must have determinant 1")
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "g", g)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticElement is immutable")

    @classmethod
    def identity(cls, g: int) -> "SymplecticElement":
        return cls(RatMatrix.identity(2 * g))

    def __mul__(self, other: "SymplecticElement") -> "SymplecticElement":
        if not isinstance(other, SymplecticElement):
            return NotImplemented
        if self.g != other.g:
            raise GenusMismatch(f"genus {self.g} times genus {other.g}")
        return SymplecticElement(self.mat * other.mat)

    def inverse(self) -> "SymplecticElement":
        # A^{-1} = J^{-1} A^t J, and J^{-1} = -J
        j = standard_J(self.g)
        return SymplecticElement((-j) * self.mat.transpose() * j)

    def __pow__(self, e: int) -> "SymplecticElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = SymplecticElement.identity(self.g)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, SymplecticElement) and self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.mat)

    def __repr__(self) -> str:
        return f"SymplecticElement(g={self.g}, {self.mat!r})"


def transvection(v: Sequence[int]) -> SymplecticElement:
    """The symplectic map x -> x + (x^t J v) v as a matrix.

    For nonzero v of length 2g this is I + v (Jv)^t, always symplectic.
    """
    vv = tuple(Fraction(x) for x in v)
    if len(vv) % 2 != 0 or not vv:
        raise MatrixFormatError(f"vector length must be even and positive, got {len(vv)}")
    if all(x == 0 for x in vv):
        raise ZeroVector("transvection direction must be nonzero")
    if any(x.denominator != 1 for x in vv):
        raise MatrixFormatError("transvection direction must be integral")
    g = len(vv) // 2
    w = standard_J(g).mul_vec(vv)
    n = 2 * g
    rows = [
        [Fraction(int(i == j)) + vv[i] * w[j] for j in range(n)] for i in range(n)
    ]
    return SymplecticElement(RatMatrix(rows, cols=n))


def direct_sum(a: SymplecticElement, b: SymplecticElement) -> SymplecticElement:
    """Block sum respecting the (a-coordinates, b-coordinates) basis order.

    The coordinate blocks are interleaved, not naively stacked: the result
    acts on (a_1..a_{g1}, a'_1..a'_{g2}, b_1..b_{g1}, b'_1..b'_{g2}), which is
    exactly what keeps it symplectic for the standard J.
    """
    g1, g2 = a.g, b.g
    g = g1 + g2

    def source(i: int) -> tuple[int, int]:
        if i < g1:
            return 0, i
        if i < g:
            return 1, i - g1
        if i < g + g1:
            return 0, g1 + (i - g)
        return 1, g2 + (i - g - g1)

    mats = (a.mat, b.mat)
    n = 2 * g
    rows = []
    for i in range(n):
        ti, si = source(i)
        row = []
        for j in range(n):
            tj, sj = source(j)
            row.append(mats[ti].data[si][sj] if ti == tj else Fraction(0))
        rows.append(row)
    return SymplecticElement(RatMatrix(rows, cols=n))


_S = ((0, -1), (1, 0))
_T = ((1, 1), (0, 1))


def gen_S() -> SymplecticElement:
    """The order-4 generator [[0, -1], [1, 0]] of SL(2,Z)."""
    return SymplecticElement(_S)


def gen_T() -> SymplecticElement:
    """The parabolic generator [[1, 1], [0, 1]] of SL(2,Z)."""
    return SymplecticElement(_T)


@dataclass(frozen=True)
class SL2Word:
    """A word in the generators S, T as (generator, exponent) syllables.

    The product of the syllables, left to right, recovers the matrix the
    word was derived from. Rendered as a string, one letter per unit of
    exponent, lowercase marking inverses: S, s, T, t.
    """

    syllables: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for gen, e in self.syllables:
            if gen not in ("S", "T"):
                raise MatrixFormatError(f"unknown generator {gen!r}")
            if e == 0:
                raise MatrixFormatError("zero exponent syllable")

    def evaluate(self) -> SymplecticElement:
        result = SymplecticElement.identity(1)
        for gen, e in self.syllables:
            base = gen_S() if gen == "S" else gen_T()
            result = result * base**e
        return result

    def letters(self):
        for gen, e in self.syllables:
            char = gen if e > 0 else gen.lower()
            for _ in range(abs(e)):
                yield char

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __str__(self) -> str:
        return "".join(self.letters())

    @classmethod
    def from_letters(cls, text: str) -> "SL2Word":
        syllables: list[tuple[str, int]] = []
        for ch in text:
            if ch not in "SsTt":
                raise MatrixFormatError(f"unknown letter {ch!r}")
            gen = ch.upper()
            e = 1 if ch.isupper() else -1
            if syllables and syllables[-1][0] == gen:
                merged = syllables[-1][1] + e
                if merged == 0:
                    syllables.pop()
                else:
                    syllables[-1] = (gen, merged)
            else:
                syllables.append((gen, e))
        return cls(tuple(syllables))


def _normalize_syllables(raw: list[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out: list[tuple[str, int]] = []
    for gen, e in raw:
        if gen == "S":
            e %= 4  # S^4 = I
        if e == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + e
            if gen == "S":
                merged %= 4
            if merged == 0:
                out.pop()
                continue
            out[-1] = (gen, merged)
        else:
            out.append((gen, e))
    return tuple(out)


def sl2_word(a: SymplecticElement | RatMatrix | Iterable[Iterable]) -> SL2Word:
    """Decompose a 2x2 integer matrix of determinant 1 into S, T syllables.

    Euclidean reduction of the first column: the word length is bounded by
    the bit lengths of the entries, -I is normalized to S^2 and S-exponents
    are reduced mod 4.
    """
    if isinstance(a, SymplecticElement):
        mat = a.mat
    elif isinstance(a, RatMatrix):
        mat = a
    else:
        mat = RatMatrix(a)
    if mat.shape != (2, 2):
        raise NotUnimodular(f"need a 2x2 matrix, got {mat.shape}")
    if not mat.is_integral():
        raise NotUnimodular("entries must be integers")
    (af, bf), (cf, df) = mat.data
    aa, bb, cc, dd = int(af), int(bf), int(cf), int(df)
    if aa * dd - bb * cc != 1:
        raise NotUnimodular("determinant must be 1")

    raw: list[tuple[str, int]] = []
    # invariant: input = (product of raw) * [[aa, bb], [cc, dd]]
    while cc != 0:
        q = aa // cc
        if q != 0:
            raw.append(("T", q))
            aa, bb = aa - q * cc, bb - q * dd
        raw.append(("S", 1))
        # strip S^{-1} from the remainder: S^{-1} [[a,b],[c,d]] = [[c,d],[-a,-b]]
        aa, bb, cc, dd = cc, dd, -aa, -bb
    if aa == 1:
        if bb != 0:
            raw.append(("T", bb))
    else:  # aa == dd == -1, remainder is -T^{-bb} = S^2 T^{-bb}
        raw.append(("S", 2))
        if bb != 0:
            raw.append(("T", -bb))
    return SL2Word(_normalize_syllables(raw))


def random_transvection_product(
    rng: random.Random, g: int, length: int
) -> SymplecticElement:
    """Product of ``length`` transvections on random vectors with entries in [-3, 3].

    Intended for seeded property tests; the zero vector is resampled.
    """
    result = SymplecticElement.identity(g)
    produced = 0
    while produced < length:
        v = tuple(rng.randint(-3, 3) for _ in range(2 * g))
        if all(x == 0 for x in v):
            continue
        result = result * transvection(v)
        produced += 1
    return result
