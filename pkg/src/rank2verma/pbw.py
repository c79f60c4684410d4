"""Two three-dimensional projection targets with exact PBW arithmetic.

Both targets are generated by f1, f2 with [f1, f2] = h.  In target "H" the
bracket h is central (Heisenberg); in target "L" it acts by [h, f1] = f1
and [h, f2] = -f2.  Elements are stored on the ordered monomial basis
f2^a f1^b h^c with rational coefficients, multiplied by closed forms; a
slow rewriting engine reduces the same products step by step and doubles
as an independent check.

The quadratic factors are X_u = f2 f1 + u*h in "H" and
X_u = f2 f1 + u*h - u(u-1)/2 in "L"; the identity suites at the bottom
exercise their shift and sandwich laws.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cartan import CartanData
from .freealg import FreeElement

Monomial = tuple[int, int, int]  # exponents of f2, f1, h

TARGETS = ("H", "L")


def _hpoly_mul(p1: dict[int, Fraction], p2: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for d1, c1 in p1.items():
        for d2, c2 in p2.items():
            out[d1 + d2] = out.get(d1 + d2, Fraction(0)) + c1 * c2
    return out


def _shifted_h_power(shift: int, k: int) -> dict[int, Fraction]:
    """(h + shift)^k as a degree -> coefficient map."""
    return {j: Fraction(math.comb(k, j) * shift ** (k - j)) for j in range(k + 1)}


_NF_CACHE: dict[tuple[int, int], dict[Monomial, Fraction]] = {}


def _nf_mul_f1(terms: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    """Right-multiply a normal form by f1 in target L: h^c f1 = f1 (h+1)^c."""
    out: dict[Monomial, Fraction] = {}
    for (a, b, c), coeff in terms.items():
        for j, pc in _shifted_h_power(1, c).items():
            key = (a, b + 1, j)
            out[key] = out.get(key, Fraction(0)) + coeff * pc
    return out


def _normal_form_L(m: int, n: int) -> dict[Monomial, Fraction]:
    """f1^m f2^n on the ordered basis of target L, via
    f1 f2^n = f2^n f1 + f2^{n-1} (n*h - binom(n,2))."""
    if (m, n) in _NF_CACHE:
        return _NF_CACHE[(m, n)]
    if m == 0:
        result = {(n, 0, 0): Fraction(1)}
    elif n == 0:
        result = {(0, m, 0): Fraction(1)}
    else:
        result = {}
        for key, coeff in _nf_mul_f1(_normal_form_L(m - 1, n)).items():
            result[key] = result.get(key, Fraction(0)) + coeff
        lower = _normal_form_L(m - 1, n - 1)
        const = -Fraction(math.comb(n, 2))
        for (a, b, c), coeff in lower.items():
            kh = (a, b, c + 1)
            result[kh] = result.get(kh, Fraction(0)) + coeff * n
            if const:
                result[(a, b, c)] = result.get((a, b, c), Fraction(0)) + coeff * const
        result = {k: v for k, v in result.items() if v}
    _NF_CACHE[(m, n)] = result
    return result


def _mono_mul_H(k1: Monomial, k2: Monomial) -> dict[Monomial, Fraction]:
    """Closed form for Heisenberg: moving f1^{b1} past f2^{a2} trades pairs
    for central h's with falling-factorial counts."""
    a1, b1, c1 = k1
    a2, b2, c2 = k2
    out = {}
    for k in range(min(b1, a2) + 1):
        coeff = Fraction(math.factorial(k) * math.comb(b1, k) * math.comb(a2, k))
        out[(a1 + a2 - k, b1 + b2 - k, c1 + c2 + k)] = coeff
    return out


def _mono_mul_L(k1: Monomial, k2: Monomial) -> dict[Monomial, Fraction]:
    a1, b1, c1 = k1
    a2, b2, c2 = k2
    out: dict[Monomial, Fraction] = {}
    for (alpha, beta, gamma), coeff in _normal_form_L(b1, a2).items():
        # remaining h-polynomial: (h+b2)^gamma (h+b2-a2)^{c1} h^{c2}
        poly = _shifted_h_power(b2, gamma)
        poly = _hpoly_mul(poly, _shifted_h_power(b2 - a2, c1))
        if c2:
            poly = _hpoly_mul(poly, {c2: Fraction(1)})
        for deg, pc in poly.items():
            key = (a1 + alpha, beta + b2, deg)
            out[key] = out.get(key, Fraction(0)) + coeff * pc
    return out


class PBWElement:
    """Rational combination of ordered monomials f2^a f1^b h^c in one target."""

    __slots__ = ("target", "coeffs")

    def __init__(self, target: str, coeffs: dict[Monomial, Fraction] | None = None):
        if target not in TARGETS:
            raise ValueError(f"target must be one of {TARGETS}")
        self.target = target
        self.coeffs: dict[Monomial, Fraction] = {}
        if coeffs:
            for k, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[k] = c

    @classmethod
    def one(cls, target: str) -> "PBWElement":
        return cls(target, {(0, 0, 0): Fraction(1)})

    @classmethod
    def generator(cls, letter: int, target: str, power: int = 1) -> "PBWElement":
        if power < 0:
            raise ValueError("power must be nonnegative")
        if letter == 1:
            return cls(target, {(0, power, 0): Fraction(1)})
        if letter == 2:
            return cls(target, {(power, 0, 0): Fraction(1)})
        raise ValueError("letter must be 1 or 2")

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.coeffs.items())

    def _check(self, other: "PBWElement") -> None:
        if self.target != other.target:
            raise ValueError("mixed targets")

    def __add__(self, other: "PBWElement") -> "PBWElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return PBWElement(self.target, out)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PBWElement(self.target, {k: c * other for k, c in self.coeffs.items()})
        if not isinstance(other, PBWElement):
            return NotImplemented
        self._check(other)
        mono_mul = _mono_mul_H if self.target == "H" else _mono_mul_L
        out: dict[Monomial, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                for k, c in mono_mul(k1, k2).items():
                    out[k] = out.get(k, Fraction(0)) + c1 * c2 * c
        return PBWElement(self.target, out)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self * scalar
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return self.target == other.target and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.target, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"PBWElement({self.target}, 0)"
        def mono(k):
            a, b, c = k
            parts = []
            if a:
                parts.append(f"f2^{a}" if a > 1 else "f2")
            if b:
                parts.append(f"f1^{b}" if b > 1 else "f1")
            if c:
                parts.append(f"h^{c}" if c > 1 else "h")
            return " ".join(parts) or "1"
        return " + ".join(f"({c})*{mono(k)}" for k, c in self.items())


# --- independent route: step-by-step rewriting -----------------------------

# symbols ordered f2 < f1 < h; a pair is reducible when out of order
_RANK = {2: 0, 1: 1, 3: 2}


def _rewrite_pair(u: int, v: int, target: str) -> dict[tuple[int, ...], Fraction]:
    if (u, v) == (1, 2):
        return {(2, 1): Fraction(1), (3,): Fraction(1)}
    if (u, v) == (3, 2):
        if target == "H":
            return {(2, 3): Fraction(1)}
        return {(2, 3): Fraction(1), (2,): Fraction(-1)}
    if (u, v) == (3, 1):
        if target == "H":
            return {(1, 3): Fraction(1)}
        return {(1, 3): Fraction(1), (1,): Fraction(1)}
    raise ValueError(f"pair {(u, v)} is not reducible")


def naive_normal_form(word: tuple[int, ...], target: str, strategy: str = "left") -> dict[Monomial, Fraction]:
    """Reduce a word over {f1=1, f2=2, h=3} to the ordered basis one adjacent
    swap at a time.  `strategy` picks the leftmost or rightmost reducible
    pair; both must agree, which is itself a useful confluence check."""
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}")
    if strategy not in ("left", "right"):
        raise ValueError("strategy must be 'left' or 'right'")
    pending: dict[tuple[int, ...], Fraction] = {tuple(word): Fraction(1)}
    done: dict[Monomial, Fraction] = {}
    while pending:
        w, coeff = pending.popitem()
        positions = [r for r in range(len(w) - 1) if _RANK[w[r]] > _RANK[w[r + 1]]]
        if not positions:
            key = (
                sum(1 for s in w if s == 2),
                sum(1 for s in w if s == 1),
                sum(1 for s in w if s == 3),
            )
            done[key] = done.get(key, Fraction(0)) + coeff
            continue
        r = positions[0] if strategy == "left" else positions[-1]
        for repl, c in _rewrite_pair(w[r], w[r + 1], target).items():
            nw = w[:r] + repl + w[r + 2 :]
            pending[nw] = pending.get(nw, Fraction(0)) + coeff * c
    return {k: v for k, v in done.items() if v}


def monomial_word(key: Monomial) -> tuple[int, ...]:
    a, b, c = key
    return (2,) * a + (1,) * b + (3,) * c


def naive_product(k1: Monomial, k2: Monomial, target: str, strategy: str = "left") -> dict[Monomial, Fraction]:
    return naive_normal_form(monomial_word(k1) + monomial_word(k2), target, strategy)


# --- projections ------------------------------------------------------------


def projection_defined(target: str, cartan: CartanData) -> bool:
    """Whether the Serre relators die in the target, so that the projection
    factors through the quotient.  In "H" the double bracket
    [f1, [f1, f2]] = [f1, h] already vanishes; in "L" it is -f1 resp. f2,
    and only the triple bracket vanishes, so both p and q must be >= 2."""
    if target == "H":
        return True
    return cartan.p >= 2 and cartan.q >= 2


def project_word(word: tuple[int, ...], target: str) -> PBWElement:
    out = PBWElement.one(target)
    for letter in word:
        out = out * PBWElement.generator(letter, target)
    return out


def project(elem: FreeElement, target: str) -> PBWElement:
    """Push a free-word combination into the target algebra."""
    out = PBWElement(target)
    for word, c in elem.coeffs.items():
        out = out + project_word(word, target) * c
    return out


# --- quadratic factors and their identity suites ----------------------------


def quadratic_factor(u: Fraction | int, target: str) -> PBWElement:
    """X_u = f2 f1 + u*h, with the extra constant -u(u-1)/2 in target L."""
    u = Fraction(u)
    coeffs = {(1, 1, 0): Fraction(1), (0, 0, 1): u}
    if target == "L":
        coeffs[(0, 0, 0)] = -u * (u - 1) / 2
    return PBWElement(target, coeffs)


def f_power(letter: int, k: int, target: str) -> PBWElement:
    return PBWElement.generator(letter, target, k)


def shift_left(u: Fraction | int, alpha: int, target: str) -> bool:
    """f2^alpha X_u == X_{u-alpha} f2^alpha."""
    u = Fraction(u)
    lhs = f_power(2, alpha, target) * quadratic_factor(u, target)
    rhs = quadratic_factor(u - alpha, target) * f_power(2, alpha, target)
    return lhs == rhs


def shift_right(u: Fraction | int, beta: int, target: str) -> bool:
    """f1^beta X_u == X_{u+beta} f1^beta."""
    u = Fraction(u)
    lhs = f_power(1, beta, target) * quadratic_factor(u, target)
    rhs = quadratic_factor(u + beta, target) * f_power(1, beta, target)
    return lhs == rhs


def sandwich_falling(alpha: int, n: int, target: str) -> bool:
    """f1^alpha f2^n f1^{n-alpha} == X_alpha X_{alpha-1} ... X_{alpha-n+1}
    for 0 <= alpha <= n."""
    if not 0 <= alpha <= n:
        raise ValueError("need 0 <= alpha <= n")
    lhs = f_power(1, alpha, target) * f_power(2, n, target) * f_power(1, n - alpha, target)
    rhs = PBWElement.one(target)
    for k in range(n):
        rhs = rhs * quadratic_factor(alpha - k, target)
    return lhs == rhs


def sandwich_rising(alpha: int, n: int, target: str) -> bool:
    """f2^alpha f1^n f2^{n-alpha} == X_{1-alpha} X_{2-alpha} ... X_{n-alpha}
    for 0 <= alpha <= n."""
    if not 0 <= alpha <= n:
        raise ValueError("need 0 <= alpha <= n")
    lhs = f_power(2, alpha, target) * f_power(1, n, target) * f_power(2, n - alpha, target)
    rhs = PBWElement.one(target)
    for k in range(1, n + 1):
        rhs = rhs * quadratic_factor(k - alpha, target)
    return lhs == rhs


def factors_commute(u: Fraction | int, v: Fraction | int, target: str) -> bool:
    a = quadratic_factor(u, target)
    b = quadratic_factor(v, target)
    return a * b == b * a


def full_ladder(n: int, target: str) -> bool:
    """f1^n f2^n == X_1 X_2 ... X_n."""
    return sandwich_rising(0, n, target)


def factor_shift_identities(alpha: int, beta: int, u: Fraction | int, n: int, target: str) -> dict[str, bool]:
    """Run all factor identities for one parameter tuple."""
    a = min(alpha, n)
    return {
        "shift_left": shift_left(u, alpha, target),
        "shift_right": shift_right(u, beta, target),
        "sandwich_falling": sandwich_falling(a, n, target),
        "sandwich_rising": sandwich_rising(a, n, target),
        "factors_commute": factors_commute(u, Fraction(u) + Fraction(beta, max(alpha, 1)), target),
        "full_ladder": full_ladder(n, target),
    }
