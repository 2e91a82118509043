"""Acceptance gate: every criterion at its stated tolerance (exact equality).

Run with ``pytest tests/test_acceptance.py -v -s`` to get one pass/fail line
per criterion.  All expected values are exact; there are no tolerances to
tune.
"""

import json
import math
import subprocess
import sys
from fractions import Fraction
from random import Random

from polydiff.combinatorics import stirling2
from polydiff.components import (
    component_by_scaling,
    components_by_interpolation,
    components_by_stirling,
    degree_search,
    vandermonde_inverse,
)
from polydiff.diffcalc import (
    BlackBoxFn,
    mixed_diff_at,
    mixed_from_pure,
    newton_expand,
    pure_diff_at,
    symbolic_pure_diff,
)
from polydiff.errors import ExtensionHypothesisError
from polydiff.kantorovich import ConeFunction, kantorovich_extend
from polydiff.parser import format_poly, parse
from polydiff.poly import ScalarPoly, VectorPoly, variables
from polydiff.positivity import counterexample_cubic, counterexample_report, is_positive
from polydiff.sampling import (
    SamplerConfig,
    rand_homogeneous_poly,
    rand_vec,
    rand_vector_poly,
)
from polydiff.tensor import polarize_mo, polarize_signs, tensor_to_poly
from polydiff.vectors import basis_vec, vec_add, vec_scale, zero_vec


def announce(number: int, text: str) -> None:
    print(f"ACCEPTANCE {number:02d} PASS: {text}", flush=True)


def test_criterion_01_polarization_round_trip():
    rng = Random(20260809)
    cfg = SamplerConfig(numerator_bound=6, denominator_bound=3)
    for _ in range(200):
        n = rng.randint(1, 3)
        k = rng.randint(1, 4)
        p = rand_homogeneous_poly(rng, n, k, coeff_num_bound=9)
        tensor = polarize_signs(p)
        assert tensor_to_poly(tensor) == p
        for _ in range(5):
            base = rand_vec(rng, n, cfg)
            assert polarize_mo(p, base) == tensor
    announce(1, "200 homogeneous polynomials round-trip through both polarizations")


def test_criterion_02_mixed_from_pure_identity():
    rng = Random(2)
    cfg = SamplerConfig(numerator_bound=7, denominator_bound=4)
    for _ in range(100):
        n = rng.randint(1, 3)
        p = rand_vector_poly(rng, n, 4, codim=rng.randint(1, 2))
        f = BlackBoxFn.from_poly(p)
        r = rng.randint(1, 4)
        x = rand_vec(rng, n, cfg)
        hs = [rand_vec(rng, n, cfg) for _ in range(r)]
        assert mixed_from_pure(f, x, hs) == mixed_diff_at(f, x, hs)
    announce(2, "mixed differences equal their pure-difference expansion on 100 cases")


def test_criterion_03_newton_inversion():
    rng = Random(3)
    cfg = SamplerConfig(numerator_bound=7, denominator_bound=4)

    def absolute(v):
        return tuple(abs(c) for c in v)

    def floors(v):
        return tuple(Fraction(math.floor(c)) for c in v)

    def rational_kink(v):
        return (max(v[0], 2 * v[0]),)

    boxes = [
        BlackBoxFn(1, 1, absolute),
        BlackBoxFn(2, 2, absolute),
        BlackBoxFn(2, 2, floors),
        BlackBoxFn(1, 1, rational_kink),
    ]
    for trial in range(100):
        if trial % 2 == 0:
            n = rng.randint(1, 3)
            f = BlackBoxFn.from_poly(rand_vector_poly(rng, n, 4))
        else:
            f = boxes[rng.randrange(len(boxes))]
            n = f.nvars
        x = rand_vec(rng, n, cfg)
        h = rand_vec(rng, n, cfg)
        r = rng.randint(0, 6)
        assert newton_expand(f, x, h, r) == f(vec_add(x, vec_scale(r, h)))
    announce(3, "Newton expansion reproduces f(x + r h) for 100 trials incl. non-polynomials")


def test_criterion_04_component_extraction():
    rng = Random(4)
    cfg = SamplerConfig(numerator_bound=6, denominator_bound=3)
    for _ in range(100):
        n = rng.randint(1, 3)
        p = rand_vector_poly(rng, n, 5, codim=rng.randint(1, 2))
        m = p.degree() if p.degree() is not None else 0
        x = rand_vec(rng, n, cfg)
        split = p.homogeneous_split()
        expected_vals = [
            split[k].evaluate(x) if k < len(split) else zero_vec(p.codim) for k in range(m + 1)
        ]
        f = BlackBoxFn.from_poly(p)
        assert components_by_interpolation(f, m, x) == expected_vals
        assert components_by_stirling(f, m, x) == expected_vals
        for k in range(m + 1):
            part = split[k] if k < len(split) else VectorPoly.zero(n, p.codim)
            assert component_by_scaling(p, k) == part
    for m in range(9):
        alpha = vandermonde_inverse(m)  # raises if alpha V != I
        assert alpha.m == m
    announce(4, "three extraction methods equal the split oracle on 100 cases; alpha V = I up to m = 8")


def test_criterion_05_degree_criterion():
    rng = Random(5)
    for _ in range(100):
        n = rng.randint(1, 3)
        target = rng.randint(0, 4)
        p = rand_vector_poly(rng, n, target, exact_degree=bool(target))
        if p.degree() is None:
            p = p + VectorPoly.constant(n, [1] * p.codim)
        m = p.degree()
        assert symbolic_pure_diff(p, m + 1).is_zero
        least, report = degree_search(BlackBoxFn.from_poly(p), cap=8)
        assert least == m
        assert report.verdict == "pass"
    announce(5, "order-(deg+1) differences vanish symbolically; least-bound search returns deg exactly")


def test_criterion_06_stirling_closed_form():
    rng = Random(6)
    for k in range(6):
        for n_ord in range(k + 2):
            for n_vars in (1, 2):
                polys = [rand_homogeneous_poly(rng, n_vars, k) for _ in range(2)]
                dense = VectorPoly.from_scalar(
                    ScalarPoly(
                        n_vars,
                        {
                            exps: 1
                            for exps in _compositions(k, n_vars)
                        },
                    )
                )
                polys.append(dense)
                for p in polys:
                    if k == 0:
                        p = VectorPoly.constant(n_vars, [3])
                    sym = symbolic_pure_diff(p, n_ord)
                    gens = [ScalarPoly.variable(i, n_vars) for i in range(n_vars)]
                    zeros = [ScalarPoly.zero(n_vars) for _ in range(n_vars)]
                    at_origin = sym.compose(zeros + gens, nvars_out=n_vars)
                    scale = math.factorial(n_ord) * stirling2(k, n_ord)
                    assert at_origin == scale * p
    (t,) = variables(1)
    cube = BlackBoxFn.from_poly(t**3)
    h = (Fraction(5, 3),)
    assert pure_diff_at(cube, (0,), h, 2) == (6 * h[0] ** 3,)
    assert 6 == math.factorial(2) * stirling2(3, 2)
    announce(6, "pure differences at 0 equal n! S(k,n) P_k(h) symbolically for k <= 5, n <= k+1")


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def test_criterion_07_counterexample_suite():
    report = counterexample_report(SamplerConfig(seed=7, samples=10000), line_samples=32)
    assert report["ok"], {k: v for k, v in report["checks"].items() if not v["ok"]}
    checks = report["checks"]
    assert checks["coefficient_x1x2x3"]["actual"] == Fraction(-6)
    assert checks["is_positive"]["actual"] is False
    assert checks["tensor_witness_index"]["actual"] == (1, 2, 3)
    assert checks["tensor_witness_value"]["actual"] == (Fraction(-1),)
    assert checks["mixed_diff_origin_basis"]["actual"] == (Fraction(-6),)
    assert checks["value_at_1_1_1"]["actual"] == Fraction(15)
    assert checks["value_at_1_1_0"]["actual"] == Fraction(8)
    pure = report["pure_report"]
    assert pure.verdict == "probabilistic"
    assert not pure.witnesses
    # full grid for order 1 plus the same grid at orders 0,2,3 plus 10,000
    # random cone pairs evaluated at orders 0..3
    assert pure.samples_used >= 5**6 + 10000
    announce(7, "cubic: -6 coefficient, witnesses, 15/8 values, clean cone grid + 10k samples")


def test_criterion_08_kantorovich_round_trip():
    rng = Random(8)
    cfg = SamplerConfig(seed=88, samples=16)
    for _ in range(100):
        n = rng.randint(1, 3)
        q = rand_vector_poly(rng, n, 4, codim=rng.randint(1, 2), nonneg=True)
        result = kantorovich_extend(ConeFunction.from_poly(q), 4, cfg)
        assert result.poly == q
        assert is_positive(result.poly)[0]
    x1, x2 = variables(2)
    try:
        kantorovich_extend(ConeFunction.from_poly((x1 - x2) ** 2), 2, cfg)
        raise AssertionError("square of a difference must be rejected")
    except ExtensionHypothesisError as exc:
        assert exc.condition == "(ii)"
        assert exc.witness.value == (Fraction(-2),)
        assert exc.witness.points == (zero_vec(2), basis_vec(0, 2), basis_vec(1, 2))
    (t,) = variables(1)
    try:
        kantorovich_extend(ConeFunction.from_poly(t**3), 2, cfg)
        raise AssertionError("a cubic with bound 2 must be rejected")
    except ExtensionHypothesisError as exc:
        assert exc.condition == "(i)"
    announce(8, "100 nonneg-coefficient polynomials recovered exactly; both controls rejected")


def test_criterion_09_parser_round_trip():
    rng = Random(9)
    for _ in range(200):
        n = rng.randint(1, 3)
        p = rand_vector_poly(rng, n, 5, codim=rng.randint(1, 2))
        names = [f"x{i + 1}" for i in range(n)]
        assert parse(format_poly(p, names), var_names=names) == p
    cubic_text = (
        "x1^3 + x2^3 + x3^3 + 3*x1^2*(x2+x3) + 3*x2^2*(x1+x3) "
        "+ 3*x3^2*(x1+x2) - 6*x1*x2*x3"
    )
    assert parse(cubic_text) == counterexample_cubic()
    announce(9, "parse/format identity on 200 polynomials; displayed cubic parses exactly")


def test_criterion_10_json_determinism():
    commands = [
        ["counterexample", "--json", "--seed", "11", "--samples", "16"],
        ["degree", "--max", "2", "x^3", "--json", "--seed", "5"],
        ["positivity", "x1*x2 + x1", "--json", "--seed", "5", "--pure-check", "--order", "2"],
        ["extend", "x1*x2", "--degree", "2", "--json", "--seed", "13"],
        ["polarize", "x1^2*x2", "--json"],
    ]
    for argv in commands:
        runs = [
            subprocess.run(
                [sys.executable, "-m", "polydiff", *argv],
                capture_output=True,
                check=False,
            )
            for _ in range(2)
        ]
        assert runs[0].stdout == runs[1].stdout, argv
        assert runs[0].stdout  # some output exists
        json.loads(runs[0].stdout)  # and it is valid JSON
    announce(10, "JSON reports are byte-identical across independent runs with a fixed seed")
