import math
from fractions import Fraction

import pytest

from rank2verma.cartan import CartanData
from rank2verma.freealg import (
    DEFAULT_GRADE_CAP,
    FreeElement,
    GradeCapExceeded,
    GradedQuotient,
    check_grade,
    graded_quotient,
    kernel_basis,
    rref,
    serre_element,
    serre_grade,
    word_grade,
    word_str,
    words_of_grade,
)


def test_words_of_grade_counts_and_order():
    ws = words_of_grade(1, 2)
    assert ws == [(1, 2, 2), (2, 1, 2), (2, 2, 1)]
    for g1, g2 in ((2, 2), (3, 1), (0, 4), (4, 0)):
        ws = words_of_grade(g1, g2)
        assert len(ws) == math.comb(g1 + g2, g1)
        assert ws == sorted(ws)
        assert all(word_grade(w) == (g1, g2) for w in ws)
    assert words_of_grade(0, 0) == [()]


def test_word_str():
    assert word_str((1, 1, 2)) == "f1^2 f2"
    assert word_str((2, 1, 2, 2)) == "f2 f1 f2^2"
    assert word_str(()) == "1"


def test_free_element_algebra():
    a = FreeElement.from_word((1, 2), 2)
    b = FreeElement.from_word((2, 1), Fraction(1, 3))
    s = a + b
    assert s.coeffs == {(1, 2): Fraction(2), (2, 1): Fraction(1, 3)}
    assert (s - a) == b
    assert (3 * b).coeffs == {(2, 1): Fraction(1)}
    assert s.grade() == (1, 1)
    framed = a.framed((2,), (1,))
    assert framed.coeffs == {(2, 1, 2, 1): Fraction(2)}
    assert FreeElement().is_zero()
    mixed = a + FreeElement.from_word((1,))
    with pytest.raises(ValueError):
        mixed.grade()


def test_serre_element_frozen():
    cd = CartanData(2, 2)
    s1 = serre_element(1, cd)
    assert s1.coeffs == {
        (1, 1, 1, 2): Fraction(1),
        (1, 1, 2, 1): Fraction(-3),
        (1, 2, 1, 1): Fraction(3),
        (2, 1, 1, 1): Fraction(-1),
    }
    assert s1.grade() == serre_grade(1, cd) == (3, 1)
    assert serre_grade(2, cd) == (1, 3)
    s2 = serre_element(2, CartanData(2, 3))
    # alternating binomial row for (ad f2)^4 f1
    assert sorted(s2.coeffs.values()) == sorted(
        Fraction(c) for c in (1, -4, 6, -4, 1)
    )


def test_rref_and_kernel_frozen():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    red, pivots = rref(rows, 3)
    assert pivots == [0]
    assert red == [[Fraction(1), Fraction(2), Fraction(3)]]
    kern = kernel_basis(rows, 3)
    assert kern == [
        [Fraction(-2), Fraction(1), Fraction(0)],
        [Fraction(-3), Fraction(0), Fraction(1)],
    ]


def test_quotient_dims_frozen():
    cd = CartanData(2, 2)
    assert graded_quotient(1, 2, cd).dim == 3  # no relator fits
    assert graded_quotient(3, 1, cd).dim == 3  # one relator
    assert graded_quotient(1, 3, cd).dim == 3
    assert graded_quotient(4, 1, cd).dim == 3  # two framings, both independent
    q = graded_quotient(3, 2, cd)
    assert len(q.words) == 10
    assert q.dim == 8  # two framings of the f1-side relator, none of the f2 side


def test_quotient_reduce():
    cd = CartanData(2, 2)
    q = graded_quotient(3, 1, cd)
    s = serre_element(1, cd)
    assert q.reduce(s) == {}
    assert q.in_ideal(s)
    # a single word reduces to itself plus ideal corrections supported on basis words
    w = q.words[0]
    red = q.reduce(FreeElement.from_word(w))
    assert all(bw in q.basis_words for bw in red)


def test_quotient_cache():
    cd = CartanData(2, 3)
    assert graded_quotient(2, 1, cd) is graded_quotient(2, 1, cd)


def test_grade_cap(monkeypatch):
    assert DEFAULT_GRADE_CAP == 14
    with pytest.raises(GradeCapExceeded):
        check_grade(8, 7)
    monkeypatch.setenv("VERMA_GRADE_CAP", "5")
    with pytest.raises(GradeCapExceeded):
        check_grade(3, 3)
    check_grade(3, 2)
    monkeypatch.setenv("VERMA_GRADE_CAP", "16")
    check_grade(8, 7)
    monkeypatch.setenv("VERMA_GRADE_CAP", "junk")
    with pytest.raises(ValueError):
        check_grade(1, 1)
    monkeypatch.setenv("VERMA_GRADE_CAP", "0")
    with pytest.raises(ValueError):
        check_grade(1, 1)


def test_check_grade_negative():
    with pytest.raises(ValueError):
        check_grade(-1, 2)


def test_quotient_respects_cap(monkeypatch):
    monkeypatch.setenv("VERMA_GRADE_CAP", "3")
    cd = CartanData(2, 2)
    with pytest.raises(GradeCapExceeded):
        GradedQuotient(3, 1, cd)
