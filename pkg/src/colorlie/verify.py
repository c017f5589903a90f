"""Self-check suites behind ``colorlie verify``.

Each suite stops at the first counterexample and reports it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .arith import divisors, mobius, mobius_p, one_p
from .gchar import op_EG, op_LG
from .lyndon import oracle_dim_restricted, oracle_dim_restricted_multidegree, oracle_dim_super
from .operators import compare_series, op_E, op_Ep, op_L, op_Lp, pbw_verify, pbw_verify_p
from .sampling import random_group_series, random_series, random_spec, z2_spec
from .series import GradingSpec, all_multidegrees
from .witt import dim_multidegree, dim_multidegree_p, dim_total_p


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def summary(self) -> str:
        if self.passed:
            return f"{self.name}: pass ({self.checks} checks)"
        return f"{self.name}: FAIL after {self.checks} checks: {self.counterexample}"


def small_specs(max_arity=3, max_count=2, max_degree=8, all_even=False):
    """Every spec with ``r <= max_arity``, ``s_i <= max_count`` and every parity mix."""
    for r in range(1, max_arity + 1):
        for counts in product(range(1, max_count + 1), repeat=r):
            parities = [(False,) * r] if all_even else product((False, True), repeat=r)
            for odd in parities:
                yield GradingSpec.from_counts(counts, odd, max_degree)


def _describe(spec: GradingSpec) -> str:
    cls = ", ".join(f"{c.count}{'o' if c.odd else 'e'}" for c in spec.classes)
    return f"[{cls}] N={spec.max_degree}"


def suite_pbw(seed=0, max_degree=10, samples=20) -> SuiteResult:
    res = SuiteResult("pbw")
    rng = random.Random(seed)
    specs = [random_spec(rng, max_degree=max_degree) for _ in range(samples)]
    for spec in specs:
        report = pbw_verify(spec)
        res.checks += 1
        if not report:
            res.counterexample = f"{_describe(spec)}: {report.describe()}"
            break
    return res


def suite_pbw_p(seed=0, max_degree=10, primes=(2, 3, 5)) -> SuiteResult:
    res = SuiteResult("pbw-p")
    for p in primes:
        for spec in small_specs(max_degree=max_degree, all_even=True):
            report = pbw_verify_p(spec, p)
            res.checks += 1
            if not report:
                res.counterexample = f"{_describe(spec)}: {report.describe()}"
                return res
    return res


def suite_oracle(seed=0, max_degree=8, restricted_degree=12, primes=(2, 3)) -> SuiteResult:
    """Closed forms against the Lyndon-word oracle."""
    res = SuiteResult("oracle")
    for spec in small_specs(max_degree=max_degree):
        for alpha in all_multidegrees(spec):
            res.checks += 1
            got, want = dim_multidegree(spec, alpha), oracle_dim_super(spec, alpha)
            if got != want:
                res.counterexample = f"{_describe(spec)} at {alpha}: closed form {got}, oracle {want}"
                return res
    for p in primes:
        for r in (1, 2, 3):
            for n in range(1, restricted_degree + 1):
                res.checks += 1
                got, want = dim_total_p(r, n, p), oracle_dim_restricted(r, n, p)
                if got != want:
                    res.counterexample = f"restricted r={r} n={n} p={p}: closed form {got}, oracle {want}"
                    return res
        for spec in small_specs(max_degree=min(max_degree, restricted_degree), all_even=True):
            for alpha in all_multidegrees(spec):
                res.checks += 1
                got = dim_multidegree_p(spec, alpha, p)
                want = oracle_dim_restricted_multidegree(spec, alpha, p)
                if got != want:
                    res.counterexample = f"{_describe(spec)} at {alpha}, p={p}: closed form {got}, oracle {want}"
                    return res
    return res


def suite_mobius(seed=0, max_degree=500, primes=(2, 3, 5, 7)) -> SuiteResult:
    res = SuiteResult("mobius")
    for n in range(2, max_degree + 1):
        res.checks += 1
        if sum(mobius(d) for d in divisors(n)):
            res.counterexample = f"sum of mu(d) over d | {n} is nonzero"
            return res
        for p in primes:
            res.checks += 1
            s = sum(one_p(n // a, p) * mobius_p(a, p) for a in divisors(n))
            if s:
                res.counterexample = f"sum 1_p(b) mu_p(a) over ab={n}, p={p} is {s}"
                return res
    return res


def suite_operators(seed=0, max_degree=8, samples=50) -> SuiteResult:
    """Round trips L(E(f)) = f, E(L(g)) = g, and their restricted and group versions."""
    res = SuiteResult("operators")
    rng = random.Random(seed)

    def check(label, expected, actual):
        res.checks += 1
        report = compare_series(label, expected, actual)
        if not report:
            res.counterexample = report.describe()
        return bool(report)

    for _ in range(samples):
        spec = random_spec(rng, max_arity=3, max_degree=max_degree)
        f = random_series(rng, spec)
        g = random_series(rng, spec, constant=1)
        if not check(f"L(E(f)) on {_describe(spec)}", f, op_L(op_E(f))):
            return res
        if not check(f"E(L(g)) on {_describe(spec)}", g, op_E(op_L(g))):
            return res
    for _ in range(samples):
        spec = random_spec(rng, max_arity=3, max_degree=max_degree, all_even=True)
        p = rng.choice((2, 3, 5))
        f = random_series(rng, spec)
        g = random_series(rng, spec, constant=1)
        if not check(f"Lp(Ep(f)) p={p} on {_describe(spec)}", f, op_Lp(op_Ep(f, p), p)):
            return res
        if not check(f"Ep(Lp(g)) p={p} on {_describe(spec)}", g, op_Ep(op_Lp(g, p), p)):
            return res
    for _ in range(samples):
        spec = z2_spec(rng, max_degree=max_degree)
        f = random_group_series(rng, spec)
        g = random_group_series(rng, spec, constant=1)
        if not check("LG(EG(f))", f, op_LG(op_EG(f))):
            return res
        if not check("EG(LG(g))", g, op_EG(op_LG(g))):
            return res
    return res


SUITES = {
    "pbw": suite_pbw,
    "pbw-p": suite_pbw_p,
    "oracle": suite_oracle,
    "mobius": suite_mobius,
    "operators": suite_operators,
}


def run_suite(name: str, seed: int = 0, max_degree: int | None = None) -> SuiteResult:
    fn = SUITES[name]
    if max_degree is None:
        return fn(seed=seed)
    return fn(seed=seed, max_degree=max_degree)
