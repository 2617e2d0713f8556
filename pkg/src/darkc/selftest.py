"""The acceptance grid, shared by `darkc selftest` and the test suite.

Each criterion function returns a short deterministic summary string and
raises CheckFailure on the first violation.  Nothing here depends on hash
ordering or wall time, so repeated runs print identical bytes.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .cartan import (AffineWeight, CartanA, cl_simple_root, reflect, rotate,
                     simple_root)
from .charring import CharPoly, demazure_op, sigma_act
from .crystal import TensorElt, demazure_closure, eps, phi
from .dark import DarkSpec, FactorWord, build, full_tensor, verify, \
    well_definedness_check
from .energy import comb_R, energy_table
from .kr import find_b_rs, generate, promotion, promotion_inverse, twist
from .weyl import bruhat_lower_interval, kr_translation_data, reduced_word

AXIOM_RANKS = (1, 2, 3)
GRID_RANKS = (1, 2)
PRODUCT_CAP = 600


class CheckFailure(AssertionError):
    pass


def _need(cond, msg, *args):
    """Failure messages %-format lazily; building reprs eagerly would dominate
    the exhaustive sweeps."""
    if not cond:
        raise CheckFailure(msg % args if args else msg)


def single_shapes(n: int) -> list[tuple[int, int]]:
    return [(r, s) for r in range(1, min(n, 2) + 1) for s in (1, 2, 3)]


def _axiom_families():
    """(cartan, element list) pairs: every grid B^{r,s} plus all tensor pairs
    and triples with at most PRODUCT_CAP elements."""
    for n in AXIOM_RANKS:
        c = CartanA(n)
        shapes = single_shapes(n)
        singles = {sh: generate(c, *sh) for sh in shapes}
        for sh in shapes:
            yield c, list(singles[sh])
        for combo in product(shapes, repeat=2):
            size = len(singles[combo[0]]) * len(singles[combo[1]])
            if size <= PRODUCT_CAP:
                yield c, [TensorElt(t) for t in
                          product(singles[combo[0]], singles[combo[1]])]
        for combo in product(shapes, repeat=3):
            size = 1
            for sh in combo:
                size *= len(singles[sh])
            if size <= PRODUCT_CAP:
                yield c, [TensorElt(t) for t in
                          product(*(singles[sh] for sh in combo))]


def criterion_axioms() -> str:
    """Crystal axioms for every node on every grid crystal and tensor."""
    families = 0
    elements = 0
    for c, elts in _axiom_families():
        families += 1
        for b in elts:
            elements += 1
            w = b.clweight()
            _need(w.level == 0, "nonzero level at %r", b)
            for i in c.nodes:
                up, down = b.e(i), b.f(i)
                _need(w.lam[i] == phi(b, i) - eps(b, i),
                      "weight pairing broken at %r, i=%d", b, i)
                if up is not None:
                    _need(up.f(i) == b, "f_i e_i != id at %r, i=%d", b, i)
                    _need(up.clweight() - w == cl_simple_root(c, i),
                          "wt(e_i b) != wt(b) + alpha_i at %r, i=%d", b, i)
                if down is not None:
                    _need(down.e(i) == b, "e_i f_i != id at %r, i=%d", b, i)
                    _need(w - down.clweight() == cl_simple_root(c, i),
                          "wt(f_i b) != wt(b) - alpha_i at %r, i=%d", b, i)
    return f"{families} crystals, {elements} elements"


def criterion_twists() -> str:
    """promotion^(n+1) = id and the twist equations, exhaustively."""
    checked = 0
    for n in AXIOM_RANKS:
        c = CartanA(n)
        for sh in single_shapes(n):
            for T in generate(c, *sh):
                checked += 1
                pk = T
                for _ in range(c.m):
                    pk = promotion(pk)
                _need(pk == T, "promotion order broken at %r", T)
                _need(promotion_inverse(promotion(T)) == T,
                      "promotion inverse broken at %r", T)
                for k in (1, 2):
                    zk, rk = T, k % c.m
                    for _ in range(rk):
                        zk = promotion(zk)
                    _need(zk.clweight() == rotate(c, k, T.clweight()),
                          "twist weight equation broken at %r, k=%d", T, k)
                for i in c.nodes:
                    fi = T.f(i)
                    _need((None if fi is None else promotion(fi))
                          == promotion(T).f((i + 1) % c.m),
                          "twist f equation broken at %r, i=%d", T, i)
                    ei = T.e(i)
                    _need((None if ei is None else promotion(ei))
                          == promotion(T).e((i + 1) % c.m),
                          "twist e equation broken at %r, i=%d", T, i)
    # tensor-level twist over the whole criterion-1 grid
    for c, elts in _axiom_families():
        if not elts or not isinstance(elts[0], TensorElt):
            continue
        for x in elts:
            z = twist(1, x)
            _need(z.clweight() == rotate(c, 1, x.clweight()),
                  "tensor twist weight broken at %r", x)
            for i in c.nodes:
                fi = x.f(i)
                _need((None if fi is None else twist(1, fi))
                      == z.f((i + 1) % c.m),
                      "tensor twist f equation broken at %r, i=%d", x, i)
                ei = x.e(i)
                _need((None if ei is None else twist(1, ei))
                      == z.e((i + 1) % c.m),
                      "tensor twist e equation broken at %r, i=%d", x, i)
            checked += 1
    return f"{checked} elements"


def criterion_brs_unique() -> str:
    """Exactly one element with eps_0 = s and classical eps zero."""
    scans = 0
    for n in AXIOM_RANKS:
        c = CartanA(n)
        for r, s in single_shapes(n):
            hits = [T for T in generate(c, r, s)
                    if eps(T, 0) == s
                    and all(eps(T, i) == 0 for i in c.classical_nodes)]
            _need(len(hits) == 1, f"b^{{{r},{s}}} scan found {len(hits)} at n={n}")
            _need(hits[0] == find_b_rs(c, r, s), "scan disagrees with find_b_rs")
            scans += 1
    return f"{scans} scans"


def criterion_full_closure() -> str:
    """Closing {b^{r,s}} along y_r fills B^{r,s}; tau_1 is rotation by one."""
    closures = 0
    for n in AXIOM_RANKS:
        c = CartanA(n)
        for r, s in single_shapes(n):
            y, tau = kr_translation_data(c, r)
            if r == 1:
                _need(tau == 1, f"tau for r=1 is rot+{tau}, not rot+1 at n={n}")
            seed = {TensorElt((find_b_rs(c, r, s),))}
            closed = demazure_closure(reduced_word(y), seed)
            want = {TensorElt((T,)) for T in generate(c, r, s)}
            _need(closed == want, f"closure along y_{r} missed B^{{{r},{s}}} at n={n}")
            closures += 1
    return f"{closures} closures"


def _lambda_grid(p: int) -> list[tuple[int, ...]]:
    if p == 1:
        return [(0,), (1,), (2,), (3,)]
    return [(a, b) for a in (1, 2, 3) for b in range(a + 1)]


def _prefixed_samples() -> list[DarkSpec]:
    mk = lambda n, lam, r, words: DarkSpec(
        CartanA(n), lam, r, tuple(FactorWord(*w) for w in words))
    return [
        mk(1, (2, 1), (1, 1), [((1,), ()), ((), (1,))]),
        mk(1, (3, 1), (1, 1), [((1,), (1,)), ((1,), ())]),
        mk(2, (2, 1), (1, 1), [((1, 2, 1), ()), ((), (2, 1))]),
        mk(2, (2, 2), (2, 1), [((2, 1, 2), (1, 2)), ((1,), (2, 1))]),
        mk(2, (3, 2), (1, 2), [((1, 2), (2, 1)), ((2,), (1, 2))]),
        mk(2, (3, 0), (2, 2), [((1, 2, 1), (1, 2)), ((), ())]),
    ]


def grid_specs() -> list[DarkSpec]:
    """Every spec of the verification grid, in a fixed order."""
    out = []
    for n in GRID_RANKS:
        c = CartanA(n)
        for p in (1, 2):
            for lam in _lambda_grid(p):
                for r in product(range(1, n + 1), repeat=p):
                    per_factor = []
                    for rj in r:
                        y, _ = kr_translation_data(c, rj)
                        words = sorted(reduced_word(w)
                                       for w in bruhat_lower_interval(y))
                        words.sort(key=len)
                        per_factor.append([FactorWord((), w) for w in words])
                    for combo in product(*per_factor):
                        out.append(DarkSpec(c, lam, r, combo))
    out.extend(_prefixed_samples())
    return out


def criterion_well_defined() -> str:
    """DARK sets agree across all reduced-word choices, grid wide."""
    specs = grid_specs()
    for spec in specs:
        _need(well_definedness_check(spec),
              "word choice changed the set for %r", spec)
    return f"{len(specs)} specs"


def _random_poly(rng: random.Random, c: CartanA, terms: int) -> CharPoly:
    data = {}
    for _ in range(terms):
        lam = tuple(rng.randint(-3, 3) for _ in range(c.m))
        mu = AffineWeight(lam, Fraction(rng.randint(-4, 4), 2 * c.m))
        data[mu] = data.get(mu, 0) + rng.randint(-3, 3)
    return CharPoly(data)


def demazure_by_division(c: CartanA, i: int, f: CharPoly) -> CharPoly:
    """Literal evaluation of (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i})
    by repeated leading-term elimination; the independent oracle for D_i."""
    alpha = simple_root(c, i)
    s_f = CharPoly({reflect(c, i, mu): coef for mu, coef in f.terms.items()})
    g = f - s_f.shifted(-alpha)
    quot: dict[AffineWeight, int] = {}
    guard = 0
    while g:
        guard += 1
        if guard > 100000:
            raise CheckFailure("division did not terminate")
        mu, coef = max(g.terms.items(),
                       key=lambda t: (t[0].lam[i],) + t[0].sort_key())
        quot[mu] = quot.get(mu, 0) + coef
        g = g - CharPoly({mu: coef, mu - alpha: -coef})
    return CharPoly(quot)


def criterion_demazure_algebra() -> str:
    """Idempotence, braid/commutation, the division oracle, Sigma action."""
    rng = random.Random(20240801)
    polys = 0
    for n in (1, 2, 3):
        c = CartanA(n)
        for _ in range(6):
            f = _random_poly(rng, c, rng.randint(1, 20))
            for i in c.nodes:
                df = demazure_op(c, i, f)
                _need(demazure_op(c, i, df) == df, f"D_{i} not idempotent, n={n}")
            for k in range(c.m):
                for i in c.nodes:
                    lhs = sigma_act(c, k, demazure_op(c, i, f))
                    rhs = demazure_op(c, (i + k) % c.m, sigma_act(c, k, f))
                    _need(lhs == rhs, f"Sigma equivariance broken, n={n}, i={i}, k={k}")
            polys += 1
        if n >= 2:
            for i in c.nodes:
                j = (i + 1) % c.m
                f = _random_poly(rng, c, 8)
                lhs = demazure_op(c, i, demazure_op(c, j, demazure_op(c, i, f)))
                rhs = demazure_op(c, j, demazure_op(c, i, demazure_op(c, j, f)))
                _need(lhs == rhs, f"braid relation broken at ({i},{j}), n={n}")
        if n >= 3:
            for i, j in ((0, 2), (1, 3)):
                f = _random_poly(rng, c, 8)
                lhs = demazure_op(c, i, demazure_op(c, j, f))
                rhs = demazure_op(c, j, demazure_op(c, i, f))
                _need(lhs == rhs, f"commutation broken at ({i},{j}), n={n}")
    # division cross-check on 50 random monomials
    for _ in range(50):
        n = rng.choice((1, 2, 3))
        c = CartanA(n)
        mono = _random_poly(rng, c, 1)
        i = rng.randrange(c.m)
        _need(demazure_op(c, i, mono) == demazure_by_division(c, i, mono),
              "division oracle disagrees, n=%d, i=%d, %r", n, i, mono)
    return f"{polys} polynomials, 50 division checks"


def criterion_identity() -> str:
    """The character identity across the grid, one C per (lambda, r)."""
    specs = grid_specs()
    groups: dict = {}
    for spec in specs:
        ok, shift = verify(spec)
        _need(ok, "character identity failed for %r", spec)
        key = (spec.cartan.n, spec.lam, spec.r)
        groups.setdefault(key, set()).add(shift)
    for key, shifts in sorted(groups.items()):
        _need(len(shifts) == 1, f"C not constant on {key}: {sorted(shifts)}")
    anchor = groups[(1, (1,), (1,))]
    _need(anchor == {Fraction(-1, 4)}, f"anchor C was {anchor}, not -1/4")
    return f"{len(specs)} specs, {len(groups)} (lambda, r) classes, anchor C=-1/4"


def criterion_energy() -> str:
    """R is an involution commuting with all operators; Yang-Baxter; the
    local-energy propagation is consistent on every grid pair."""
    pairs = 0
    for n in AXIOM_RANKS:
        c = CartanA(n)
        shapes = single_shapes(n)
        singles = {sh: generate(c, *sh) for sh in shapes}
        for sh1, sh2 in product(shapes, repeat=2):
            if len(singles[sh1]) * len(singles[sh2]) > PRODUCT_CAP:
                continue
            energy_table(c, sh1, sh2)  # raises on any BFS inconsistency
            pairs += 1
            for a in singles[sh1]:
                for b in singles[sh2]:
                    x = TensorElt((a, b))
                    rx = comb_R(x)
                    _need(comb_R(rx) == x, "R^2 != id at %r", x)
                    for i in c.nodes:
                        fi = x.f(i)
                        _need((None if fi is None else comb_R(fi)) == rx.f(i),
                              "R does not commute with f_%d at %r", i, x)
                        ei = x.e(i)
                        _need((None if ei is None else comb_R(ei)) == rx.e(i),
                              "R does not commute with e_%d at %r", i, x)
    yb = 0
    for n in (1, 2):
        c = CartanA(n)
        B11 = generate(c, 1, 1)
        B12 = generate(c, 1, 2)

        def r12(t):
            return comb_R(TensorElt(t[:2])).factors + (t[2],)

        def r23(t):
            return (t[0],) + comb_R(TensorElt(t[1:])).factors

        for t in product(B11, B11, B12):
            _need(r12(r23(r12(t))) == r23(r12(r23(t))), "Yang-Baxter failed at %r", t)
            yb += 1
    return f"{pairs} pairs, {yb} Yang-Baxter triples"


def criterion_full_tensor() -> str:
    """Maximal words give the whole tensor product, and the identity holds."""
    cases = 0
    for n in GRID_RANKS:
        c = CartanA(n)
        for p in (1, 2):
            for lam in _lambda_grid(p):
                for r in product(range(1, n + 1), repeat=p):
                    words = tuple(
                        FactorWord((), reduced_word(kr_translation_data(c, rj)[0]))
                        for rj in r)
                    spec = DarkSpec(c, lam, r, words)
                    _need(build(spec).elements == full_tensor(spec),
                          "maximal words missed the full tensor for %r", spec)
                    ok, _ = verify(spec)
                    _need(ok, "identity failed on full tensor %r", spec)
                    cases += 1
    return f"{cases} cases"


CRITERIA = (
    ("crystal-axioms", criterion_axioms),
    ("twists", criterion_twists),
    ("brs-uniqueness", criterion_brs_unique),
    ("full-crystal-closure", criterion_full_closure),
    ("well-definedness", criterion_well_defined),
    ("demazure-operator-algebra", criterion_demazure_algebra),
    ("character-identity", criterion_identity),
    ("energy-machinery", criterion_energy),
    ("maximal-words-full-tensor", criterion_full_tensor),
)


def run_all(write) -> bool:
    """Run every criterion, printing one deterministic line per criterion."""
    all_ok = True
    for idx, (name, fn) in enumerate(CRITERIA, start=1):
        try:
            detail = fn()
            write(f"criterion {idx} {name}: PASS ({detail})\n")
        except CheckFailure as exc:
            all_ok = False
            write(f"criterion {idx} {name}: FAIL ({exc})\n")
    write(f"selftest: {'PASS' if all_ok else 'FAIL'}\n")
    return all_ok
