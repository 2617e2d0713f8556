"""The group ring of the affine weight lattice and Demazure operators on it.

A CharPoly is a finitely supported integer combination of formal exponentials
e^mu.  The Demazure operator D_i is evaluated monomial by monomial through
the geometric-series form of (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i});
the test suite cross-checks this against literal polynomial division.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import (AffineWeight, CartanA, fundamental_weight, rotate,
                     simple_root, weight_from_json, weight_to_json)


class CharPoly:
    """Finitely supported map AffineWeight -> int; zero coefficients dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for mu, coef in (terms.items() if isinstance(terms, dict) else terms):
                if coef:
                    data[mu] = data.get(mu, 0) + coef
                    if not data[mu]:
                        del data[mu]
        self.terms = data

    @classmethod
    def monomial(cls, mu: AffineWeight, coef: int = 1) -> "CharPoly":
        return cls({mu: coef})

    @classmethod
    def zero(cls) -> "CharPoly":
        return cls()

    @classmethod
    def one(cls, c: CartanA) -> "CharPoly":
        return cls.monomial(AffineWeight((0,) * c.m))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, CharPoly) and self.terms == other.terms

    def __add__(self, other: "CharPoly") -> "CharPoly":
        out = dict(self.terms)
        for mu, coef in other.terms.items():
            out[mu] = out.get(mu, 0) + coef
            if not out[mu]:
                del out[mu]
        return CharPoly(out)

    def __sub__(self, other: "CharPoly") -> "CharPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, int):
            return CharPoly({mu: other * c for mu, c in self.terms.items()})
        out: dict[AffineWeight, int] = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                key = mu + nu
                out[key] = out.get(key, 0) + a * b
        return CharPoly(out)

    __rmul__ = __mul__

    def shifted(self, mu: AffineWeight) -> "CharPoly":
        """Multiply by e^mu."""
        return CharPoly({nu + mu: c for nu, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[AffineWeight, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def __repr__(self):
        inner = " + ".join(f"{c}*e^({mu.lam}; {mu.dlt})"
                           for mu, c in self.sorted_terms())
        return f"CharPoly({inner or '0'})"


def char_to_json(f: CharPoly) -> list[dict]:
    return [{**weight_to_json(mu), "coef": coef} for mu, coef in f.sorted_terms()]


def char_from_json(items) -> CharPoly:
    return CharPoly([(weight_from_json(obj), obj["coef"]) for obj in items])


def demazure_op(c: CartanA, i: int, f: CharPoly) -> CharPoly:
    """D_i, monomial by monomial.  With k = <alpha_i_check, mu>:
    k >= 0 gives the sum of e^{mu - t alpha_i} for t = 0..k;
    k = -1 kills the monomial;
    k <= -2 gives minus the sum of e^{mu + t alpha_i} for t = 1..-k-1."""
    c.check_node(i)
    alpha = simple_root(c, i)
    out: dict[AffineWeight, int] = {}

    def add(mu, coef):
        out[mu] = out.get(mu, 0) + coef

    for mu, coef in f.terms.items():
        k = mu.lam[i]
        if k >= 0:
            for t in range(k + 1):
                add(mu - t * alpha, coef)
        elif k <= -2:
            for t in range(1, -k):
                add(mu + t * alpha, -coef)
    return CharPoly(out)


def demazure_word(c: CartanA, word, f: CharPoly) -> CharPoly:
    """D along a letter sequence, rightmost letter applied first."""
    for i in reversed(tuple(word)):
        f = demazure_op(c, i, f)
    return f


def sigma_act(c: CartanA, k: int, f: CharPoly) -> CharPoly:
    """Ring automorphism rotating every exponent by the Dynkin rotation k."""
    return CharPoly({rotate(c, k, mu): coef for mu, coef in f.terms.items()})


def rhs_formula(c: CartanA, lam, words, taus) -> CharPoly:
    """Nested Demazure-operator character: with lam^j = lam_j - lam_{j+1},
    g_p = D_{w_p} tau_p(e^{lam^p Lambda_0}) and
    g_j = D_{w_j} tau_j(e^{lam^j Lambda_0} * g_{j+1}); returns g_1."""
    lam = tuple(int(v) for v in lam)
    words = tuple(tuple(w) for w in words)
    taus = tuple(int(t) for t in taus)
    p = len(lam)
    if len(words) != p or len(taus) != p:
        raise ValueError("lambda, words and taus must have equal length")
    if any(lam[j] < lam[j + 1] for j in range(p - 1)) or (p and lam[-1] < 0):
        raise ValueError("lambda must be weakly decreasing and nonnegative")
    lambda0 = fundamental_weight(c, 0)
    g = CharPoly.one(c)
    for j in range(p - 1, -1, -1):
        step = lam[j] - (lam[j + 1] if j + 1 < p else 0)
        g = demazure_word(c, words[j],
                          sigma_act(c, taus[j], g.shifted(step * lambda0)))
    return g


def fit_delta_shift(lhs: CharPoly, rhs: CharPoly):
    """Find the rational C with lhs * e^{C delta} = rhs, matching terms by
    Lambda coordinates.  Returns (ok, C); C is None on structural mismatch."""
    lt = lhs.sorted_terms()
    rt = rhs.sorted_terms()
    if len(lt) != len(rt):
        return False, None
    if not lt:
        return True, Fraction(0)
    if any(a[0].lam != b[0].lam or a[1] != b[1] for a, b in zip(lt, rt)):
        return False, None
    shift = rt[0][0].dlt - lt[0][0].dlt
    if any(b[0].dlt - a[0].dlt != shift for a, b in zip(lt, rt)):
        return False, None
    return True, shift
