"""Acceptance sweep: every closed form against its oracle, one line per criterion.

Grid: eta in {0, 2, 3}, q in {2, 3, 4, 5, 7}, dX in 0..4, dT in [-eta*dX, 6]
with delta >= 0.  Exhaustive weight searches cap at 2*10^6 codewords unless
a criterion states otherwise.
"""

import time

import numpy as np
import pytest

from hirzecode import (
    Bidegree,
    CoxPolynomial,
    LatticePoint,
    build_code,
    codeword_weight,
    dimension_closed_form,
    dimension_oracle,
    distance_bound,
    distance_closed_form,
    equivalent,
    evaluate_vector,
    evaluation_matrix,
    exhaustive_min_weight,
    field_from_order,
    monomial_basis,
    monomial_from_lattice,
    puncture_fiber,
    puncture_torus,
    rank_over_field,
    rational_points,
    special_kernel_element,
    special_regime,
    witness_polynomial,
)

BUDGET = 2_000_000
_FIELDS = {}


def field(q):
    if q not in _FIELDS:
        _FIELDS[q] = field_from_order(q)
    return _FIELDS[q]


def sweep(qs=(2, 3, 4, 5, 7)):
    for eta in (0, 2, 3):
        for q in qs:
            for dx in range(5):
                for dt in range(-eta * dx, 7):
                    b = Bidegree(eta, dt, dx)
                    if b.delta >= 0:
                        yield b, field(q)


def finish(capsys, label, started, limit):
    elapsed = time.time() - started
    line = f"{label}: {'PASS' if elapsed < limit else 'FAIL (too slow)'} [{elapsed:.1f}s / limit {limit:.0f}s]"
    with capsys.disabled():
        print(line)
    assert elapsed < limit, line


def test_criterion_01_dimension_regression(capsys):
    t0 = time.time()
    table = {
        (-2, 5): {11: 25, 7: 24, 4: 18, 2: 6},
        (1, 3): {3: 14, 2: 8},
        (5, 3): {13: 36, 7: 30, 4: 20},
    }
    for (dt, dx), byq in table.items():
        for q, want in byq.items():
            b = Bidegree(2, dt, dx)
            assert dimension_closed_form(b, field(q)) == want
            assert dimension_oracle(build_code(b, field(q))) == want
    finish(capsys, "criterion 1 (dimension regression)", t0, 10.0)


def test_criterion_02_dimension_oracle_sweep(capsys):
    t0 = time.time()
    checked = 0
    for b, fld in sweep():
        assert dimension_closed_form(b, fld) == dimension_oracle(build_code(b, fld)), (
            b, fld.q,
        )
        checked += 1
    assert checked == 775
    finish(capsys, f"criterion 2 (dimension sweep, {checked} instances)", t0, 180.0)


def test_criterion_03_equivalence_oracle(capsys):
    t0 = time.time()
    pairs = 0
    for b, fld in sweep(qs=(2, 3, 4)):
        pts = rational_points(fld)
        evs = monomial_basis(b)
        mat = evaluation_matrix(evs, pts, fld)
        sig = [row.tobytes() for row in mat]
        lat = [LatticePoint(ev.d2, ev.c2) for ev in evs]
        for i in range(len(evs)):
            for j in range(i, len(evs)):
                same_vec = sig[i] == sig[j]
                assert equivalent(b, fld, lat[i], lat[j]) == same_vec, (b, fld.q, i, j)
                pairs += 1
    finish(capsys, f"criterion 3 (equivalence oracle, {pairs} pairs)", t0, 180.0)


def test_criterion_04_distance_certification(capsys):
    t0 = time.time()
    exhausted = 0
    for b, fld in sweep():
        code = build_code(b, fld)
        d = distance_closed_form(b, fld)
        assert codeword_weight(witness_polynomial(b, fld), code.points) == d, (b, fld.q)
        assert distance_bound(b, fld).bound == d, (b, fld.q)
        true_d = exhaustive_min_weight(code, BUDGET)
        if true_d is not None:
            assert true_d == d, (b, fld.q)
            exhausted += 1
    finish(capsys, f"criterion 4 (distance, {exhausted} exhaustive)", t0, 300.0)


def test_criterion_05_punctured_table(capsys):
    t0 = time.time()
    table = {(-1, 1): (12, 2, 9), (-1, 3): (12, 10, 2), (-2, 2): (12, 4, 6), (-2, 3): (12, 8, 3)}
    for (dt, dx), want in table.items():
        punct = puncture_fiber(build_code(Bidegree(2, dt, dx), field(3)))
        got = (punct.n, rank_over_field(punct.matrix, field(3)), exhaustive_min_weight(punct, BUDGET))
        assert got == want, (dt, dx, got, want)
    finish(capsys, "criterion 5 (punctured table over F_3)", t0, 30.0)


def test_criterion_06_fiber_puncture_theorem(capsys):
    t0 = time.time()
    instances = []
    for q in (2, 3, 4):
        for eta in (1, 2, 3):
            for dx in (1, 2, 3):
                for dt in (-1, -2, -3):
                    b = Bidegree(eta, dt, dx)
                    if b.delta < 0:
                        continue
                    k = dimension_oracle(build_code(b, field(q)))
                    if q**k - 1 <= BUDGET:
                        instances.append((b, q))
    instances = instances[:20]
    assert len(instances) == 20
    for b, q in instances:
        code = build_code(b, field(q))
        k0 = rank_over_field(code.matrix, field(q))
        d0 = exhaustive_min_weight(code, BUDGET)
        punct = puncture_fiber(code)
        assert punct.n == q * (q + 1), (b, q)
        assert rank_over_field(punct.matrix, field(q)) == k0, (b, q)
        assert exhaustive_min_weight(punct, BUDGET) == d0, (b, q)
    finish(capsys, "criterion 6 (fiber puncture, 20 instances)", t0, 120.0)


def test_criterion_07_kernel_element_vanishes(capsys):
    t0 = time.time()
    hits = 0
    for b, fld in sweep():
        if not special_regime(b, fld):
            continue
        f0 = special_kernel_element(b, fld)
        assert len(f0.terms) == 4
        assert not np.any(evaluate_vector(f0, rational_points(fld))), (b, fld.q)
        hits += 1
    assert hits > 0
    finish(capsys, f"criterion 7 (kernel vanishing, {hits} instances)", t0, 60.0)


def test_criterion_08_surjectivity(capsys):
    t0 = time.time()
    for q in (2, 3):
        for eta in (0, 2, 3):
            for dt, dx in ((q, q), (q + 1, q), (q, q + 1), (q + 2, q + 1)):
                b = Bidegree(eta, dt, dx)
                assert dimension_closed_form(b, field(q)) == (q + 1) ** 2, (b, q)
                assert dimension_oracle(build_code(b, field(q))) == (q + 1) ** 2, (b, q)
    finish(capsys, "criterion 8 (surjectivity)", t0, 60.0)


def test_criterion_09_toric_puncture_comparison(capsys):
    t0 = time.time()
    instances = [(2, 1, 1, 5), (2, 1, 1, 7), (3, 1, 1, 7), (2, 2, 1, 7), (2, 1, 1, 8)]
    budget = 8_000_000  # 7^8 messages for the largest of the five
    for eta, dt, dx, q in instances:
        b = Bidegree(eta, dt, dx)
        assert dt > 0 and dx > 0 and b.delta < q - 1
        code = build_code(b, field(q))
        d = exhaustive_min_weight(code, budget)
        assert d == distance_closed_form(b, field(q))
        punct = puncture_torus(code)
        assert punct.n == code.n - 4 * q, (eta, dt, dx, q)
        assert rank_over_field(punct.matrix, field(q)) == code.k, (eta, dt, dx, q)
        dp = exhaustive_min_weight(punct, budget)
        assert dp == d - (3 * q - b.delta - 1), (eta, dt, dx, q, d, dp)
    finish(capsys, "criterion 9 (toric puncture, 5 instances)", t0, 120.0)


def test_criterion_10_reduced_rows_independent(capsys):
    t0 = time.time()
    for b, fld in sweep():
        code = build_code(b, fld)
        assert rank_over_field(code.matrix, fld) == code.k, (b, fld.q)
    finish(capsys, "criterion 10 (row independence)", t0, 120.0)
