"""Exact Puiseux q-series and the order-3 orbifold dimension formula.

Everything here is a truncated formal series in q^(1/D) with exact
coefficients (rationals, or Q(w) values under coefficient twists).  The
genus-zero generator f = eta(t)^12 / eta(3t)^12 of the level-3 function
field, its powers expanded at the other cusp, and a Laurent fit of a
fixed-point character in f feed a fully symbolic re-derivation of the
weight-one dimension formula

    dim V_1 + dim V~_1 = 4 d0 - 36 d13 - 12 d23 + 24,

where d0 is the fixed weight-one dimension and d13, d23 are the summed
twisted dimensions at weights 1/3 and 2/3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import gcd, lcm
from typing import Dict, List, Tuple, Union

from .exactmath import Cyclo3, OMEGA

Coefficient = Union[Q, Cyclo3]


def _czero(template: Coefficient) -> Coefficient:
    return Cyclo3.of(0) if isinstance(template, Cyclo3) else Q(0)


@dataclass(frozen=True)
class PuiseuxSeries:
    """Truncated series sum_n c_n q^(n/denom), exact below exponent trunc."""

    denom: int
    coeffs: Dict[int, Coefficient]
    trunc: Q

    @staticmethod
    def make(denom: int, coeffs: Dict[int, Coefficient], trunc: Q) -> "PuiseuxSeries":
        kept = {
            n: c for n, c in coeffs.items() if c and Q(n, denom) < trunc
        }
        return PuiseuxSeries(denom, kept, Q(trunc))

    @staticmethod
    def one(trunc: Q | int) -> "PuiseuxSeries":
        return PuiseuxSeries.make(1, {0: Q(1)}, Q(trunc))

    @staticmethod
    def monomial(exp: Q, coeff: Coefficient, trunc: Q | int) -> "PuiseuxSeries":
        e = Q(exp)
        return PuiseuxSeries.make(e.denominator, {e.numerator: coeff}, Q(trunc))

    def rescaled(self, new_denom: int) -> "PuiseuxSeries":
        if new_denom % self.denom:
            raise ValueError("new denominator must refine the old one")
        f = new_denom // self.denom
        return PuiseuxSeries(new_denom, {n * f: c for n, c in self.coeffs.items()}, self.trunc)

    def normalized(self) -> "PuiseuxSeries":
        """Shrink the exponent denominator to the gcd actually used."""
        g = self.denom
        for n in self.coeffs:
            g = gcd(g, n)
        if g <= 1:
            return self
        return PuiseuxSeries(
            self.denom // g, {n // g: c for n, c in self.coeffs.items()}, self.trunc
        )

    def valuation(self) -> Q:
        if not self.coeffs:
            return self.trunc
        return Q(min(self.coeffs), self.denom)

    def coeff(self, exp: Q | int) -> Coefficient:
        e = Q(exp)
        if e >= self.trunc:
            raise ValueError(f"exponent {e} is beyond truncation {self.trunc}")
        n = e * self.denom
        if n.denominator != 1:
            return Q(0)
        return self.coeffs.get(int(n), Q(0))

    def terms(self) -> List[Tuple[Q, Coefficient]]:
        return [(Q(n, self.denom), c) for n, c in sorted(self.coeffs.items())]

    def __add__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        d = lcm(self.denom, other.denom)
        a, b = self.rescaled(d), other.rescaled(d)
        out = dict(a.coeffs)
        for n, c in b.coeffs.items():
            cur = out.get(n)
            out[n] = c if cur is None else cur + c
        return PuiseuxSeries.make(d, out, min(a.trunc, b.trunc))

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries(self.denom, {n: -c for n, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        return self + (-other)

    def scale(self, c: Coefficient) -> "PuiseuxSeries":
        return PuiseuxSeries.make(
            self.denom, {n: v * c for n, v in self.coeffs.items()}, self.trunc
        )

    def __mul__(self, other: "PuiseuxSeries") -> "PuiseuxSeries":
        d = lcm(self.denom, other.denom)
        a, b = self.rescaled(d), other.rescaled(d)
        # product exact below min(t_a + v_b, t_b + v_a)
        trunc = min(a.trunc + b.valuation(), b.trunc + a.valuation())
        bound = trunc * d
        out: Dict[int, Coefficient] = {}
        for n1, c1 in a.coeffs.items():
            for n2, c2 in b.coeffs.items():
                n = n1 + n2
                if n >= bound:
                    continue
                cur = out.get(n)
                prod = c1 * c2
                out[n] = prod if cur is None else cur + prod
        return PuiseuxSeries.make(d, out, trunc)

    def inverse(self) -> "PuiseuxSeries":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero series")
        v_num = min(self.coeffs)
        lead = self.coeffs[v_num]
        v = Q(v_num, self.denom)
        # self = lead q^v (1 + s) with s of positive valuation
        lead_inv = 1 / lead if isinstance(lead, Q) else lead.inverse()
        s = PuiseuxSeries.make(
            self.denom,
            {n - v_num: c * lead_inv for n, c in self.coeffs.items() if n != v_num},
            self.trunc - v,
        )
        trunc_u = self.trunc - v
        acc = PuiseuxSeries.one(trunc_u)
        term = PuiseuxSeries.one(trunc_u)
        sv = s.valuation()
        if sv <= 0:
            raise AssertionError("expected positive valuation remainder")
        k = 0
        while k * sv < trunc_u:
            term = term * s
            acc = acc + (-term if k % 2 == 0 else term)
            k += 1
        inv_shift = PuiseuxSeries.monomial(-v, lead_inv, trunc_u - v)
        return (acc * inv_shift).normalized()

    def __pow__(self, n: int) -> "PuiseuxSeries":
        if n == 0:
            return PuiseuxSeries.one(self.trunc - self.valuation())
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def substitute_scaled(self, s: Q) -> "PuiseuxSeries":
        """q -> q^s for positive rational s."""
        if s <= 0:
            raise ValueError("substitution exponent must be positive")
        d = self.denom * s.denominator
        return PuiseuxSeries.make(
            d,
            {int(n * s * d / self.denom): c for n, c in self.coeffs.items()},
            self.trunc * s,
        ).normalized()

    def omega_twist(self, power: int = 1) -> "PuiseuxSeries":
        """Coefficient twist q^(n/3) -> w^(n*power) q^(n/3).

        Exponents must lie in (1/3)Z; rational coefficients are promoted
        to Q(w) where the twist is nontrivial.
        """
        if 3 % self.denom and self.denom % 3:
            raise ValueError("series exponents must lie in thirds")
        out: Dict[int, Coefficient] = {}
        for n, c in self.coeffs.items():
            e3 = Q(3 * n, self.denom)
            assert e3.denominator == 1
            k = (int(e3) * power) % 3
            if k == 0:
                out[n] = c
            else:
                w = OMEGA if k == 1 else OMEGA * OMEGA
                out[n] = Cyclo3.of(c) * w
        return PuiseuxSeries(self.denom, out, self.trunc)

    def integral_part_traced(self) -> "PuiseuxSeries":
        """(1/3)(F + F_twist + F_twist^2): kills non-integral exponents."""
        total = self + self.omega_twist(1) + self.omega_twist(2)
        out: Dict[int, Coefficient] = {}
        for n, c in total.coeffs.items():
            cc = Cyclo3.of(c)
            assert cc.b == 0, "trace left a non-rational coefficient"
            if cc.a:
                out[n] = cc.a / 3
        return PuiseuxSeries.make(self.denom, out, self.trunc).normalized()

    def __repr__(self) -> str:
        parts = [f"{c}*q^({Q(n, self.denom)})" for n, c in sorted(self.coeffs.items())[:6]]
        return " + ".join(parts) + f" + O(q^{self.trunc})"


@lru_cache(maxsize=None)
def _product_one_minus_qn_power(m: int, terms: int) -> PuiseuxSeries:
    """prod_{n>=1} (1 - x^n)^m up to (and excluding) x^(terms+1)."""
    trunc = Q(terms + 1)
    acc = PuiseuxSeries.one(trunc)
    if m == 0:
        return acc
    if m < 0:
        return _product_one_minus_qn_power(-m, terms).inverse()
    half = m // 2
    if half:
        piece = _product_one_minus_qn_power(half, terms)
        acc = piece * piece
    if m % 2:
        base = PuiseuxSeries.one(trunc)
        for n in range(1, terms + 1):
            base = base * PuiseuxSeries.make(1, {0: Q(1), n: Q(-1)}, trunc)
        acc = acc * base
    return acc


@lru_cache(maxsize=None)
def eta_expansion(scale: Q, power: int, trunc: int) -> PuiseuxSeries:
    """Expansion of eta(scale*t)^power as an exact Puiseux series in q."""
    if trunc <= 0:
        raise ValueError("truncation must be positive")
    s = Q(scale)
    if s <= 0:
        raise ValueError("scale must be positive")
    prefix_exp = s * power / 24
    # need product terms k with prefix + s*k < trunc
    terms = max(0, int((Q(trunc) - prefix_exp) / s) + 1)
    prod = _product_one_minus_qn_power(power, terms)
    shifted = prod.substitute_scaled(s)
    pre = PuiseuxSeries.monomial(prefix_exp, Q(1), Q(trunc) - prefix_exp + shifted.trunc)
    return (shifted * pre).normalized()


def euler_pentagonal(terms: int) -> PuiseuxSeries:
    """Independent oracle: prod(1 - x^n) = sum_k (-1)^k x^(k(3k-1)/2)."""
    trunc = Q(terms + 1)
    out: Dict[int, Q] = {}
    k = 0
    while True:
        done = True
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e <= terms:
                out[e] = Q(-1) ** abs(kk)
                done = False
        if done:
            break
        k += 1
    return PuiseuxSeries.make(1, out, trunc)


@lru_cache(maxsize=None)
def hauptmodul_f(trunc: int = 12) -> PuiseuxSeries:
    """f = eta(t)^12 / eta(3t)^12 = q^-1 - 12 + 54q - 76q^2 - ..."""
    return (
        eta_expansion(Q(1), 12, trunc + 2) * eta_expansion(Q(3), -12, trunc + 2)
    ).normalized()


@lru_cache(maxsize=None)
def _cusp_base(margin: int) -> PuiseuxSeries:
    return (
        eta_expansion(Q(1), 12, margin) * eta_expansion(Q(1, 3), -12, margin)
    ).scale(Q(3**6))


@lru_cache(maxsize=None)
def f_power_at_S(n: int, trunc: int = 12) -> PuiseuxSeries:
    """Expansion of f^n at the other cusp: (3^6 eta(t)^12 / eta(t/3)^12)^n.

    Exponents lie in (1/3)Z.
    """
    # a margin independent of |n| <= 3 keeps the base shared
    margin = trunc + 2 + 2 * max(abs(n), 3)
    base = _cusp_base(margin)
    out = base**n
    out = PuiseuxSeries.make(
        out.denom, dict(out.coeffs), min(out.trunc, Q(trunc))
    ).normalized()
    if out.denom not in (1, 3):
        raise AssertionError("cusp expansion exponents should lie in thirds")
    return out


@dataclass(frozen=True)
class LaurentFit:
    """Coefficients of Z = f + c0 + c_-1/f + c_-2/f^2 + c_-3/f^3."""

    c1: Q
    c0: Q
    cm1: Q
    cm2: Q
    cm3: Q

    def __post_init__(self) -> None:
        if self.c1 != 1:
            raise ValueError("leading Laurent coefficient must be 1")


def fit_character(d0: int, d13: int, d23: int) -> LaurentFit:
    """Solve the Laurent coefficients from the cusp-expansion constraints.

    d0 is the fixed-point weight-one dimension; d13 and d23 are the summed
    twisted dimensions at weights 1/3 and 2/3.  The pole coefficient at the
    other cusp pins c_-3 = 3^17 whenever twisted weights are >= 1.
    """
    c0 = Q(d0 + 12)
    cm2 = Q(3**12) * (Q(d13, 3) + 12)
    cm1 = Q(3**6) * (Q(d23, 3) + 8 * cm2 / 3**11 - 6 * 33)
    return LaurentFit(Q(1), c0, cm1, cm2, Q(3**17))


def dim_tilde_v1(dim_v1: int, d0: int, d13: int, d23: int) -> int:
    """dim V~_1 = 4 d0 - 36 d13 - 12 d23 + 24 - dim V_1."""
    if min(dim_v1, d0, d13, d23) < 0:
        raise ValueError("dimensions must be non-negative")
    val = 4 * d0 - 36 * d13 - 12 * d23 + 24 - dim_v1
    if val < 0:
        raise ValueError(f"inconsistent inputs: negative dimension {val}")
    return val


# Symbolic affine expressions a*d0 + b*d13 + c*d23 + d with exact entries.
LinExpr = Tuple[Q, Q, Q, Q]


def _lin(a: Q = Q(0), b: Q = Q(0), c: Q = Q(0), d: Q = Q(0)) -> LinExpr:
    return (Q(a), Q(b), Q(c), Q(d))


def _lin_add(x: LinExpr, y: LinExpr) -> LinExpr:
    return tuple(p + q for p, q in zip(x, y))  # type: ignore[return-value]


def _lin_scale(x: LinExpr, c: Q) -> LinExpr:
    return tuple(c * p for p in x)  # type: ignore[return-value]


def derive_dimension_formula(trunc: int = 12) -> Tuple[Q, Q, Q, Q]:
    """Re-derive the dimension formula coefficients (4, -36, -12, 24).

    The Laurent coefficients are kept symbolic as affine functions of
    (d0, d13, d23); the fit is composed with the exact cusp expansions of
    f^n, the coefficient twist q^(1/3) -> w q^(1/3) is traced over the three
    shifts, and the constant term of the summed expansions is collected.
    """
    # symbolic Laurent coefficients, mirroring fit_character
    c0 = _lin(a=Q(1), d=Q(12))
    cm2 = _lin(b=Q(3**12) / 3, d=Q(12 * 3**12))
    cm1 = _lin_add(
        _lin(c=Q(3**6) / 3, d=Q(-198 * 3**6)),
        _lin_scale(cm2, Q(8 * 3**6, 3**11)),
    )
    coeffs: Dict[int, LinExpr] = {
        1: _lin(d=Q(1)),
        0: c0,
        -1: cm1,
        -2: cm2,
        -3: _lin(d=Q(3**17)),
    }
    # constant term of sum_i Z(S T^i t) = 3 * (integral part of Z(S t))
    total = _lin()
    for n, cn in coeffs.items():
        series = (
            PuiseuxSeries.one(Q(trunc))
            if n == 0
            else f_power_at_S(n, trunc)
        )
        gamma = series.integral_part_traced().coeff(0)
        assert isinstance(gamma, Q)
        total = _lin_add(total, _lin_scale(cn, 3 * gamma))
    # plus the constant term of Z(t) itself, which is c0 - 12
    total = _lin_add(total, _lin_add(c0, _lin(d=Q(-12))))
    return total
