"""Seeded property suites over the library, used by the verify subcommand.

Each check draws its own deterministic RNG from (seed, name), runs a
batch of randomized identities sized by the config, and either returns
the number of comparisons it made or raises PropertyFailure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from elemsym import esp, polyzero, symalg
from elemsym.scalar import DEFAULT_TOLERANCE, ExactComplex, FloatComplex

MAX_VERIFY_N = 12  # direct-oracle cost gate


@dataclass
class VerifyConfig:
    max_n: int = 6
    trials: int = 50
    seed: int = 1
    tolerance: float = DEFAULT_TOLERANCE


class PropertyFailure(AssertionError):
    def __init__(self, name, detail):
        super().__init__(f"{name}: {detail}")
        self.name = name
        self.detail = detail


def rand_gauss(rng, bound=9):
    return ExactComplex(rng.randint(-bound, bound), rng.randint(-bound, bound))


def rand_assignment(rng, n, bound=9):
    return esp.Assignment([rand_gauss(rng, bound) for _ in range(n)])


def rand_monomial(rng, n, max_degree):
    deg = rng.randint(0, max_degree)
    return tuple(sorted(rng.randint(1, n) for _ in range(deg)))


def rand_genpoly(rng, n, max_degree=3, max_terms=4, coeff_bound=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = rand_monomial(rng, n, max_degree)
        terms[mono] = terms.get(mono, ExactComplex(0)) + rand_gauss(rng, coeff_bound)
    return symalg.GenPoly(n, terms)


def check_table_oracle(rng, cfg):
    """Table row n against the direct subset-expansion oracle."""
    checks = 0
    for n in range(1, cfg.max_n + 1):
        for _ in range(cfg.trials):
            xs = rand_assignment(rng, n)
            row = esp.build_table(xs).last_row()
            for k in range(1, n + 1):
                if row[k - 1] != esp.direct_eps(xs, k):
                    raise PropertyFailure(
                        "eq-2.2-oracle", f"row mismatch at n={n}, k={k}, xs={xs!r}"
                    )
                checks += 1
    return checks


def check_recurrence_interior(rng, cfg):
    """Every interior entry satisfies e[i][k] = e[i-1][k] + e[i-1][k-1]*x_i."""
    checks = 0
    for _ in range(cfg.trials):
        n = rng.randint(2, max(2, cfg.max_n))
        xs = rand_assignment(rng, n)
        table = esp.build_table(xs)
        for i in range(2, n + 1):
            xi = xs.values[i - 1]
            for k in range(1, i + 1):
                expect = table.query(i - 1, k) + table.query(i - 1, k - 1) * xi
                if table.query(i, k) != expect:
                    raise PropertyFailure(
                        "recurrence-interior", f"entry ({i},{k}) of {xs!r}"
                    )
                checks += 1
    return checks


def check_omit_identity(rng, cfg):
    checks = 0
    for n in range(2, cfg.max_n + 1):
        for _ in range(max(1, cfg.trials // n)):
            xs = rand_assignment(rng, n)
            for i0 in range(1, n + 1):
                for k in range(1, n + 1):
                    lhs, rhs = esp.eps_omit_identity(xs, i0, k)
                    if lhs != rhs:
                        raise PropertyFailure(
                            "omit-identity", f"n={n}, i0={i0}, k={k}, xs={xs!r}"
                        )
                    checks += 1
    return checks


def check_permutation_invariance(rng, cfg):
    checks = 0
    for _ in range(cfg.trials):
        n = rng.randint(1, cfg.max_n)
        xs = rand_assignment(rng, n)
        row = esp.build_table(xs).last_row()
        values = list(xs.values)
        for _ in range(5):
            rng.shuffle(values)
            permuted = esp.build_table(esp.Assignment(values)).last_row()
            if permuted != row:
                raise PropertyFailure("permutation-invariance", f"xs={xs!r}")
            checks += 1
    return checks


def check_binomial_row(rng, cfg):
    checks = 0
    for n in range(1, 21):
        xs = esp.Assignment([ExactComplex(1)] * n)
        row = esp.build_table(xs).last_row()
        for k in range(1, n + 1):
            if row[k - 1] != ExactComplex(math.comb(n, k)):
                raise PropertyFailure("binomial-row", f"n={n}, k={k}")
            checks += 1
    return checks


def check_homogeneity(rng, cfg):
    """Scaling all inputs by c scales the k-th value by c^k."""
    checks = 0
    for _ in range(cfg.trials):
        n = rng.randint(1, cfg.max_n)
        xs = rand_assignment(rng, n)
        c = rand_gauss(rng, 5)
        scaled = esp.build_table(esp.Assignment([c * v for v in xs.values])).last_row()
        row = esp.build_table(xs).last_row()
        ck = ExactComplex(1)
        for k in range(1, n + 1):
            ck = ck * c
            if scaled[k - 1] != ck * row[k - 1]:
                raise PropertyFailure("homogeneity", f"n={n}, c={c!r}, k={k}")
            checks += 1
    return checks


def check_shift_monomials(rng, cfg):
    """Shift rules: generators step down, e_0 drops out, constants die."""
    n = min(cfg.max_n, 6)
    if symalg.shift_U(symalg.GenPoly.const(n, 7)) != symalg.GenPoly.zero(n):
        raise PropertyFailure("shift-monomials", "constant did not map to 0")
    if symalg.shift_U(symalg.GenPoly.gen(n, 1)) != symalg.GenPoly.const(n, 1):
        raise PropertyFailure("shift-monomials", "e1 did not map to 1")
    checks = 2
    for k in range(2, n + 1):
        if symalg.shift_U(symalg.GenPoly.gen(n, k)) != symalg.GenPoly.gen(n, k - 1):
            raise PropertyFailure("shift-monomials", f"e{k} did not step down")
        checks += 1
    for _ in range(cfg.trials):
        mono = rand_monomial(rng, n, 4)
        expect = tuple(sorted(j - 1 for j in mono if j > 1))
        got = symalg.shift_U(symalg.GenPoly.monomial(n, mono, 3))
        want = (
            symalg.GenPoly.monomial(n, expect, 3)
            if mono
            else symalg.GenPoly.zero(n)
        )
        if got != want:
            raise PropertyFailure("shift-monomials", f"monomial {mono}")
        checks += 1
    return checks


def check_alpha_embedding(rng, cfg):
    """alpha images evaluate to the symmetric values of the extended set."""
    checks = 0
    for n in range(1, cfg.max_n + 1):
        for _ in range(max(1, cfg.trials // n)):
            ext = rand_assignment(rng, n + 1)
            for k in range(1, n + 1):
                got = symalg.eval_extended(symalg.alpha_gen(k, n), ext)
                if got != esp.direct_eps(ext, k):
                    raise PropertyFailure("alpha-embedding", f"n={n}, k={k}")
                checks += 1
    return checks


def check_partition_complement(rng, cfg):
    checks = 0
    for n in range(1, cfg.max_n + 1):
        image, complement = symalg.generator_partition(n)
        for _ in range(max(1, cfg.trials // n)):
            ext = rand_assignment(rng, n + 1)
            for k, gp in enumerate(image, start=1):
                if symalg.eval_extended(gp, ext) != esp.direct_eps(ext, k):
                    raise PropertyFailure("partition-complement", f"image k={k}, n={n}")
                checks += 1
            if symalg.eval_extended(complement, ext) != esp.direct_eps(ext, n + 1):
                raise PropertyFailure("partition-complement", f"complement, n={n}")
            checks += 1
    return checks


def check_omit_repartition(rng, cfg):
    """Rebuilding around any omitted variable reproduces the same values."""
    checks = 0
    for n in range(1, min(cfg.max_n, 6) + 1):
        image, complement = symalg.generator_partition(n)
        for _ in range(max(1, cfg.trials // (n + 1))):
            full = rand_assignment(rng, n + 1)
            for j in range(1, n + 2):
                rest = full.omit(j)
                ext = esp.Assignment(rest + (full.values[j - 1],))
                for k, gp in enumerate(image, start=1):
                    if symalg.eval_extended(gp, ext) != esp.direct_eps(full, k):
                        raise PropertyFailure(
                            "omit-repartition", f"n={n}, omitted={j}, k={k}"
                        )
                    checks += 1
                if symalg.eval_extended(complement, ext) != esp.direct_eps(full, n + 1):
                    raise PropertyFailure("omit-repartition", f"n={n}, omitted={j}, top")
                checks += 1
    return checks


def check_phi_homomorphism(rng, cfg):
    checks = 0
    n = min(cfg.max_n, 4)
    for _ in range(cfg.trials):
        p = rand_genpoly(rng, n)
        q = rand_genpoly(rng, n)
        if symalg.phi(p + q) != symalg.phi(p) + symalg.phi(q):
            raise PropertyFailure("phi-homomorphism", f"additivity: p={p}, q={q}")
        if symalg.phi(p * q) != symalg.phi(p) * symalg.phi(q):
            raise PropertyFailure("phi-homomorphism", f"multiplicativity: p={p}, q={q}")
        checks += 2
    return checks


def check_phi_injective_monomials(rng, cfg):
    """Distinct monomials of degree <= 3 have distinct images."""
    checks = 0
    for n in range(1, min(cfg.max_n, 4) + 1):
        monos = [()]
        for d in range(1, 4):
            level = []

            def grow(prefix, lo):
                if len(prefix) == d:
                    level.append(tuple(prefix))
                    return
                for j in range(lo, n + 1):
                    grow(prefix + [j], j)

            grow([], 1)
            monos.extend(level)
        images = {}
        for mono in monos:
            img = symalg.phi(symalg.GenPoly.monomial(n, mono))
            key = (img.n, tuple(sorted(img.terms.items(), key=lambda t: t[0])))
            if key in images:
                raise PropertyFailure(
                    "phi-injective-monomials", f"{mono} collides with {images[key]}"
                )
            images[key] = mono
            checks += 1
    return checks


def check_split_soundness(rng, cfg):
    checks = 0
    n = min(cfg.max_n, 5) + 1
    for _ in range(cfg.trials):
        p = rand_genpoly(rng, n, max_degree=4, max_terms=6)
        p0, p1 = symalg.split_by_top_generator(p)
        if p0 + p1 != p:
            raise PropertyFailure("split-soundness", f"parts do not sum: {p}")
        if any(n in m for m in p0.terms) or any(n not in m for m in p1.terms):
            raise PropertyFailure("split-soundness", f"membership violated: {p}")
        checks += 1
    return checks


def check_mul_eval_compat(rng, cfg):
    """Symbolic product evaluates to the product of evaluations."""
    checks = 0
    for _ in range(cfg.trials):
        n = rng.randint(1, min(cfg.max_n, 5))
        p = rand_genpoly(rng, n)
        q = rand_genpoly(rng, n)
        xs = rand_assignment(rng, n, bound=4)
        lhs = symalg.eval_genpoly(p * q, xs)
        rhs = symalg.eval_genpoly(p, xs) * symalg.eval_genpoly(q, xs)
        if lhs != rhs:
            raise PropertyFailure("mul-eval-compat", f"p={p}, q={q}, xs={xs!r}")
        checks += 1
    return checks


def check_vieta_bridge(rng, cfg):
    """from_roots coefficients are the signed symmetric values of the roots."""
    checks = 0
    for _ in range(cfg.trials):
        size = rng.randint(0, min(cfg.max_n, 8))
        roots = [rand_gauss(rng) for _ in range(size)]
        p = polyzero.Poly1.from_roots(roots)
        sign = ExactComplex(1)
        for k in range(1, size + 1):
            sign = sign * ExactComplex(-1)
            expect = sign * esp.direct_eps(esp.Assignment(roots), k)
            if p.coeffs[k] != expect:
                raise PropertyFailure("vieta-bridge", f"k={k}, roots={roots!r}")
            checks += 1
        for r in roots:
            if not p.eval(r).is_zero:
                raise PropertyFailure("vieta-bridge", f"nonzero at root {r!r}")
            checks += 1
        inc = polyzero.Poly1.from_roots(roots[:-1]) if roots else None
        if inc is not None and inc.insert_zero(roots[-1]) != p:
            raise PropertyFailure("vieta-bridge", f"incremental != batch, {roots!r}")
        checks += 1
    return checks


def check_deflate_roundtrip(rng, cfg):
    checks = 0
    for _ in range(cfg.trials):
        deg = rng.randint(0, 8)
        p = polyzero.Poly1([rand_gauss(rng) for _ in range(deg + 1)])
        lam = rand_gauss(rng)
        q, rem = p.insert_zero(lam).deflate(lam)
        if q != p or not rem.is_zero:
            raise PropertyFailure("deflate-roundtrip", f"p={p!r}, lam={lam!r}")
        checks += 1
    return checks


def check_float_insert_sanity(rng, cfg):
    """Float-mode insertion leaves only rounding noise at the new zero."""
    checks = 0
    for _ in range(cfg.trials):
        deg = rng.randint(0, 6)
        coeffs = [
            FloatComplex(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(deg + 1)
        ]
        p = polyzero.Poly1(coeffs)
        lam = FloatComplex(rng.randint(-3, 3), rng.randint(-3, 3))
        q = p.insert_zero(lam)
        bound = cfg.tolerance * (1.0 + max(c.abs() for c in q.coeffs))
        if q.eval(lam).abs() > bound:
            raise PropertyFailure("float-insert-sanity", f"p={p!r}, lam={lam!r}")
        checks += 1
    return checks


CHECKS = [
    ("eq-2.2-oracle", check_table_oracle),
    ("recurrence-interior", check_recurrence_interior),
    ("omit-identity", check_omit_identity),
    ("permutation-invariance", check_permutation_invariance),
    ("binomial-row", check_binomial_row),
    ("homogeneity", check_homogeneity),
    ("shift-monomials", check_shift_monomials),
    ("alpha-embedding", check_alpha_embedding),
    ("partition-complement", check_partition_complement),
    ("omit-repartition", check_omit_repartition),
    ("phi-homomorphism", check_phi_homomorphism),
    ("phi-injective-monomials", check_phi_injective_monomials),
    ("split-soundness", check_split_soundness),
    ("mul-eval-compat", check_mul_eval_compat),
    ("vieta-bridge", check_vieta_bridge),
    ("deflate-roundtrip", check_deflate_roundtrip),
    ("float-insert-sanity", check_float_insert_sanity),
]


def run_all(cfg: VerifyConfig, emit=print) -> bool:
    """Run every check; emit one line per property; True if all passed."""
    if cfg.max_n > MAX_VERIFY_N:
        raise ValueError(f"max_n {cfg.max_n} exceeds the oracle cost gate {MAX_VERIFY_N}")
    failures = 0
    for name, fn in CHECKS:
        rng = random.Random(f"{cfg.seed}:{name}")
        try:
            count = fn(rng, cfg)
        except PropertyFailure as exc:
            emit(f"{name}: FAIL ({exc.detail})")
            failures += 1
        else:
            emit(f"{name}: ok ({count} checks)")
    emit(f"{len(CHECKS)} properties, {len(CHECKS) - failures} passed")
    return failures == 0
