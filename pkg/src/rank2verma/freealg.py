"""Graded slices of the free algebra on the two lowering generators.

Words are tuples over {1, 2}, compared lexicographically with 1 < 2, and a
grade (g1, g2) counts occurrences of each letter.  The ideal slice spanned
by framed Serre relators is row-reduced over exact rationals, so quotient
bases and reductions are deterministic and exact.  Slices grow like
binomial(g1+g2, g1); the grade cap keeps accidental blowups from hanging a
run and can be raised through the VERMA_GRADE_CAP environment variable.
"""

from __future__ import annotations

import itertools
import math
import os
from fractions import Fraction

from .cartan import CartanData

Word = tuple[int, ...]

DEFAULT_GRADE_CAP = 14


class GradeCapExceeded(RuntimeError):
    pass


def grade_cap() -> int:
    raw = os.environ.get("VERMA_GRADE_CAP")
    if raw is None:
        return DEFAULT_GRADE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"VERMA_GRADE_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError("VERMA_GRADE_CAP must be >= 1")
    return cap


def check_grade(g1: int, g2: int) -> None:
    if g1 < 0 or g2 < 0:
        raise ValueError("grades must be nonnegative")
    cap = grade_cap()
    if g1 + g2 > cap:
        raise GradeCapExceeded(
            f"grade ({g1}, {g2}) exceeds the cap {cap}; "
            "set VERMA_GRADE_CAP to raise it"
        )


def word_grade(word: Word) -> tuple[int, int]:
    g1 = sum(1 for i in word if i == 1)
    return (g1, len(word) - g1)


def words_of_grade(g1: int, g2: int) -> list[Word]:
    """All words with the given letter counts, in lexicographic order."""
    length = g1 + g2
    out = []
    for positions in itertools.combinations(range(length), g2):
        w = [1] * length
        for pos in positions:
            w[pos] = 2
        out.append(tuple(w))
    out.sort()
    return out


def word_str(word: Word) -> str:
    """Compressed display, e.g. (1,1,2) -> 'f1^2 f2'."""
    if not word:
        return "1"
    parts = []
    for letter, run in itertools.groupby(word):
        k = sum(1 for _ in run)
        parts.append(f"f{letter}" if k == 1 else f"f{letter}^{k}")
    return " ".join(parts)


class FreeElement:
    """Finitely supported rational combination of words of one grade."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Word, Fraction] | None = None):
        self.coeffs: dict[Word, Fraction] = {}
        if coeffs:
            for w, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[w] = c

    @classmethod
    def from_word(cls, word: Word, coeff: Fraction | int = 1) -> "FreeElement":
        return cls({word: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def grade(self) -> tuple[int, int] | None:
        grades = {word_grade(w) for w in self.coeffs}
        if len(grades) > 1:
            raise ValueError("element mixes grades")
        return grades.pop() if grades else None

    def items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self.coeffs.items())

    def __add__(self, other: "FreeElement") -> "FreeElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, Fraction(0)) + c
        return FreeElement(out)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-1) * other

    def __mul__(self, scalar) -> "FreeElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return FreeElement({w: c * scalar for w, c in self.coeffs.items()})

    __rmul__ = __mul__

    def framed(self, left: Word, right: Word) -> "FreeElement":
        """left * self * right with words acting by concatenation."""
        return FreeElement({left + w + right: c for w, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{word_str(w)}" for w, c in self.items())


def serre_element(which: int, cartan: CartanData) -> FreeElement:
    """(ad f_i)^{k+1} f_j expanded in the free algebra, with k = p for
    which = 1 and k = q for which = 2."""
    if which == 1:
        i, j, k = 1, 2, cartan.p
    elif which == 2:
        i, j, k = 2, 1, cartan.q
    else:
        raise ValueError("which must be 1 or 2")
    coeffs = {}
    for r in range(k + 2):
        w = (i,) * (k + 1 - r) + (j,) + (i,) * r
        coeffs[w] = Fraction((-1) ** r * math.comb(k + 1, r))
    return FreeElement(coeffs)


def serre_grade(which: int, cartan: CartanData) -> tuple[int, int]:
    if which == 1:
        return (cartan.p + 1, 1)
    if which == 2:
        return (1, cartan.q + 1)
    raise ValueError("which must be 1 or 2")


def rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fraction.  Returns (nonzero rows, pivot
    column indices); fully deterministic for a fixed row order."""
    mat = [list(row) for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def kernel_basis(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix, one vector per free column,
    each normalized with a 1 in its free coordinate."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            vec[pc] = -row[free]
        basis.append(vec)
    return basis


class GradedQuotient:
    """One grade of the free algebra modulo the framed Serre relators.

    `words` lists the full monomial basis, `basis_words` the surviving
    quotient basis (non-pivot columns of the reduced ideal slice).
    """

    def __init__(self, g1: int, g2: int, cartan: CartanData):
        check_grade(g1, g2)
        self.grade = (g1, g2)
        self.cartan = cartan
        self.words = words_of_grade(g1, g2)
        self.index = {w: k for k, w in enumerate(self.words)}
        rows = [self._vector(el) for el in self._ideal_elements(g1, g2, cartan)]
        self._rows, self._pivots = rref(rows, len(self.words))
        pivot_set = set(self._pivots)
        self.basis_words = [w for k, w in enumerate(self.words) if k not in pivot_set]

    @staticmethod
    def _ideal_elements(g1: int, g2: int, cartan: CartanData) -> list[FreeElement]:
        out = []
        for which in (1, 2):
            s1, s2 = serre_grade(which, cartan)
            if s1 > g1 or s2 > g2:
                continue
            rel = serre_element(which, cartan)
            for l1 in range(g1 - s1 + 1):
                for l2 in range(g2 - s2 + 1):
                    r1, r2 = g1 - s1 - l1, g2 - s2 - l2
                    for lw in words_of_grade(l1, l2):
                        for rw in words_of_grade(r1, r2):
                            out.append(rel.framed(lw, rw))
        return out

    def _vector(self, elem: FreeElement) -> list[Fraction]:
        vec = [Fraction(0)] * len(self.words)
        for w, c in elem.coeffs.items():
            vec[self.index[w]] += c
        return vec

    @property
    def dim(self) -> int:
        return len(self.basis_words)

    def reduce_vector(self, vec: list[Fraction]) -> list[Fraction]:
        """Eliminate pivot coordinates; the result is supported on basis words."""
        v = list(vec)
        for row, pc in zip(self._rows, self._pivots):
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def reduce(self, elem: FreeElement) -> dict[Word, Fraction]:
        """Coordinates of the element's image on the quotient basis."""
        v = self.reduce_vector(self._vector(elem))
        return {w: v[self.index[w]] for w in self.basis_words if v[self.index[w]]}

    def in_ideal(self, elem: FreeElement) -> bool:
        return not self.reduce(elem)


_QUOTIENT_CACHE: dict[tuple[int, int, int, int], GradedQuotient] = {}


def graded_quotient(g1: int, g2: int, cartan: CartanData) -> GradedQuotient:
    key = (cartan.p, cartan.q, g1, g2)
    if key not in _QUOTIENT_CACHE:
        _QUOTIENT_CACHE[key] = GradedQuotient(g1, g2, cartan)
    return _QUOTIENT_CACHE[key]
