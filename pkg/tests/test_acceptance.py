"""End-to-end acceptance checks.

Each criterion is a function returning ``(passed, detail)``. Under pytest
the results are collected in ``RESULTS`` and printed as one line per
criterion at the end of the session; ``python tests/test_acceptance.py``
runs them directly.
"""

import os
import sys
from math import cos, pi, sin

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import cluster, lsq_projection, projector, random_orthonormal, random_rotation, svd_cosines_squared, unit_rows  # noqa: E402
from subspace_angles import matcore  # noqa: E402
from subspace_angles.canonical import (  # noqa: E402
    build_canonical_matrix,
    canonical_bases,
    dual_permutation,
    frame_map,
    synthesize_pair,
)
from subspace_angles.errors import SingularMatrixError  # noqa: E402
from subspace_angles.inertia import inertia_split, positive_definite_by_split, split_frame  # noqa: E402
from subspace_angles.principal import dual_principal_values, principal_spectrum  # noqa: E402
from subspace_angles.subspace import (  # noqa: E402
    angle_between,
    cross_gram,
    gram_determinant,
    make_subspace,
    orthogonal_complement,
    project_gram,
)

RESULTS = {}


def _same_clusters(got, want, atol):
    return len(got) == len(want) and all(
        r1 == r2 and abs(v1 - v2) <= atol for (v1, r1), (v2, r2) in zip(got, want)
    )


def _spectrum_pairs(spec):
    return list(zip(spec.values, spec.multiplicities))


def golden_example():
    worst = 0.0
    for phi in (pi / 6, pi / 4, pi / 3):
        c, s = cos(phi), sin(phi)
        s1 = make_subspace(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
        s2 = make_subspace(4, [[c, 0, s, 0], [0, c, 0, s]])
        spec = principal_spectrum(s1, s2)
        if spec.multiplicities != (2,):
            return False, f"phi={phi}: multiplicities {spec.multiplicities}"
        worst = max(worst, abs(spec.values[0] - c * c), abs(angle_between(s1, s2).cos_phi - c * c))
    return worst <= 1e-10, f"max error {worst:.1e}"


def svd_oracle():
    rng = np.random.default_rng(101)
    failures = 0
    for trial in range(500):
        n = int(rng.integers(1, 9))
        p, q = (int(v) for v in rng.integers(1, n + 1, size=2))
        a = rng.standard_normal((p, n))
        b = rng.standard_normal((q, n))
        if trial % 3 == 0:
            # force shared directions so that the value 1 shows up
            k = int(rng.integers(1, min(p, q) + 1))
            b[:k] = rng.standard_normal((k, p)) @ a
        s1, s2 = make_subspace(n, a), make_subspace(n, b)
        small, large = (s1, s2) if s1.dim <= s2.dim else (s2, s1)
        want = cluster(svd_cosines_squared(small.ortho_basis, large.ortho_basis)[: small.dim])
        got = _spectrum_pairs(principal_spectrum(s1, s2))
        failures += not _same_clusters(got, want, 1e-8)
    return failures == 0, f"{failures} failures in 500 pairs"


def _second_rows(rng, p, q, n):
    # the inequality is stated for p <= q, with orthonormal b's when p < q;
    # unit rows keep every Gram determinant <= 1 so 1e-9 is an absolute scale
    if p == q:
        return unit_rows(rng.standard_normal((q, n)))
    return random_orthonormal(rng, q, n)


def gram_inequality():
    rng = np.random.default_rng(102)
    violations = equal_contained = equal_not_contained = 0
    for _ in range(300):
        n = int(rng.integers(1, 9))
        p, q = sorted(int(v) for v in rng.integers(1, n + 1, size=2))
        s1 = make_subspace(n, unit_rows(rng.standard_normal((p, n))))
        s2 = make_subspace(n, _second_rows(rng, p, q, n))
        m = cross_gram(s1, s2, use_raw=True)
        lhs = matcore.determinant(m @ m.T)
        rhs = gram_determinant(s1, use_raw=True) * gram_determinant(s2, use_raw=True)
        violations += lhs > rhs + 1e-9
    for _ in range(100):
        n = int(rng.integers(2, 9))
        q = int(rng.integers(1, n + 1))
        p = int(rng.integers(1, q + 1))
        b = _second_rows(rng, p, q, n)
        a = unit_rows(rng.standard_normal((p, q)) @ b)
        s1, s2 = make_subspace(n, a), make_subspace(n, b)
        m = cross_gram(s1, s2, use_raw=True)
        gap = gram_determinant(s1, use_raw=True) * gram_determinant(s2, use_raw=True) - matcore.determinant(m @ m.T)
        equal_contained += abs(gap) <= 1e-9
    for _ in range(100):
        n = int(rng.integers(2, 9))
        p = int(rng.integers(1, n // 2 + 1))
        q = int(rng.integers(p, n - p + 1))
        values = rng.uniform(0.0, 0.99, size=p)
        pair = synthesize_pair(n, p, q, values)
        rot = random_rotation(rng, n)
        a = unit_rows(rng.standard_normal((p, p)) @ pair.first.ortho_basis @ rot)
        b = pair.second.ortho_basis @ rot
        if p == q:
            b = unit_rows(rng.standard_normal((q, q)) @ b)
        s1, s2 = make_subspace(n, a), make_subspace(n, b)
        m = cross_gram(s1, s2, use_raw=True)
        gap = gram_determinant(s1, use_raw=True) * gram_determinant(s2, use_raw=True) - matcore.determinant(m @ m.T)
        equal_not_contained += abs(gap) <= 1e-9
    ok = violations == 0 and equal_contained == 100 and equal_not_contained == 0
    return ok, (
        f"violations {violations}/300, equality on containment {equal_contained}/100, "
        f"equality without containment {equal_not_contained}/100"
    )


def complement_duality():
    rng = np.random.default_rng(103)
    worst = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 9))
        p, q = (int(v) for v in rng.integers(1, n, size=2))
        s1 = make_subspace(n, rng.standard_normal((p, n)))
        s2 = make_subspace(n, rng.standard_normal((q, n)))
        lhs = angle_between(s1, s2).cos_phi
        rhs = angle_between(orthogonal_complement(s1), orthogonal_complement(s2)).cos_phi
        worst = max(worst, abs(lhs - rhs))
    return worst <= 1e-9, f"max |cos - cos*| {worst:.1e}"


def dual_bookkeeping():
    rng = np.random.default_rng(104)
    bad = 0
    for trial in range(200):
        n = int(rng.integers(2, 9))
        p, q = (int(v) for v in rng.integers(1, n, size=2))
        a = rng.standard_normal((p, n))
        b = rng.standard_normal((q, n))
        if trial % 4 == 0:
            k = int(rng.integers(1, min(p, q) + 1))
            b[:k] = rng.standard_normal((k, p)) @ a
        s1, s2 = make_subspace(n, a), make_subspace(n, b)
        pair = principal_spectrum(s1, s2)
        dual = principal_spectrum(orthogonal_complement(s1), orthogonal_complement(s2))
        inner_ok = _same_clusters(pair.interior(), dual.interior(), 1e-8)
        shift = n - p - q
        ones_pair, ones_dual = pair.multiplicity(1.0), dual.multiplicity(1.0)
        side_ok = (ones_dual - ones_pair == shift) if shift >= 0 else (ones_pair - ones_dual == -shift)
        count_ok = sum(r for _, r in pair.interior()) <= n / 2
        lib_ok = dual_principal_values(s1, s2).unit_mult_shift == shift
        bad += not (inner_ok and side_ok and count_ok and lib_ok)
    witnessed = 0
    for _ in range(50):
        n = 2 * int(rng.integers(1, 4)) + 1
        p = int(rng.integers(1, n))
        s1 = make_subspace(n, rng.standard_normal((p, n)))
        s2 = make_subspace(n, rng.standard_normal((p, n)))
        d = dual_principal_values(s1, s2)
        witnessed += d.pair_spectrum.multiplicity(1.0) > 0 or d.dual_spectrum.multiplicity(1.0) > 0
    return bad == 0 and witnessed == 50, f"{bad} bookkeeping failures in 200, odd-n witness {witnessed}/50"


def _random_values(rng, p):
    pool = np.concatenate([[0.0, 1.0], rng.uniform(0.05, 0.95, size=3)])
    return rng.choice(pool, size=p)


def synthesize_roundtrip():
    rng = np.random.default_rng(105)
    worst = 0.0
    unique_fail = 0
    for _ in range(100):
        # the synthesis hypothesis: p <= q <= n and n <= p + q
        n = int(rng.integers(2, 9))
        q = int(rng.integers((n + 1) // 2, n))
        p = int(rng.integers(n - q, q + 1))
        values = _random_values(rng, p)
        forced = p + q - n
        if forced > 0:
            values[:forced] = 1.0
        pair = synthesize_pair(n, p, q, values)
        got = principal_spectrum(pair.first, pair.second).expanded()
        worst = max(worst, float(np.max(np.abs(got - np.sort(values)[::-1]))))

        # a second pair with the same values, placed differently
        other = synthesize_pair(n, p, q, rng.permutation(values))
        rot = random_rotation(rng, n)
        t1 = make_subspace(n, rng.standard_normal((p, p)) @ other.first.ortho_basis @ rot)
        t2 = make_subspace(n, rng.standard_normal((q, q)) @ other.second.ortho_basis @ rot)
        phi = frame_map(canonical_bases(pair.first, pair.second), canonical_bases(t1, t2))
        err = max(
            np.max(np.abs(phi @ phi.T - np.eye(n))),
            np.max(np.abs(projector(pair.first.ortho_basis @ phi) - t1.projector)),
            np.max(np.abs(projector(pair.second.ortho_basis @ phi) - t2.projector)),
        )
        unique_fail += err > 1e-8
    return worst <= 1e-8 and unique_fail == 0, f"max value error {worst:.1e}, map failures {unique_fail}/100"


def canonical_matrix():
    rng = np.random.default_rng(106)
    orth = match = dual = 0.0
    for trial in range(100):
        n = int(rng.integers(2, 9))
        p, q = (int(v) for v in rng.integers(1, n, size=2))
        if trial % 2:
            a, b = rng.standard_normal((p, n)), rng.standard_normal((q, n))
        else:
            lo, hi = min(p, q), max(p, q)
            vals = _random_values(rng, lo)
            if lo + hi > n:
                vals[: lo + hi - n] = 1.0
            pair = synthesize_pair(n, lo, hi, vals)
            a, b = pair.first.ortho_basis, pair.second.ortho_basis
        cf = canonical_bases(make_subspace(n, a), make_subspace(n, b))
        P = build_canonical_matrix(cf.spec)
        orth = max(orth, np.max(np.abs(P @ P.T - np.eye(n))))
        match = max(match, np.max(np.abs(cf.inner_products() - P)))
        d = dual_permutation(cf)
        want = np.sort(1.0 - cf.spec.squared_values())[::-1]
        dual = max(dual, np.max(np.abs(d.spec.squared_values() - want)))
    ok = orth <= 1e-9 and match <= 1e-8 and dual <= 1e-10
    return ok, f"|PP^T - I| {orth:.1e}, basis match {match:.1e}, dual values {dual:.1e}"


def projection():
    rng = np.random.default_rng(107)
    err = perp = 0.0
    for _ in range(200):
        n = int(rng.integers(1, 9))
        k = int(rng.integers(1, n + 1))
        a = rng.standard_normal((k, n))
        x = rng.standard_normal(n)
        xp = project_gram(x, make_subspace(n, a))
        err = max(err, np.max(np.abs(xp - lsq_projection(x, a))))
        perp = max(perp, np.max(np.abs(a @ (x - xp))))
    return err <= 1e-9 and perp <= 1e-9, f"vs least squares {err:.1e}, orthogonality {perp:.1e}"


def inertia_additivity():
    rng = np.random.default_rng(108)
    trials = broken = unsound = weak_frame = accepted = 0
    while trials < 200:
        n = int(rng.integers(2, 9))
        x = rng.standard_normal((n, n))
        a = x @ x.T + 0.1 * np.eye(n) if trials % 3 == 0 else x + x.T
        k = int(rng.integers(1, n))
        l = make_subspace(n, random_orthonormal(rng, k, n))
        try:
            r = inertia_split(a, l)
            pd = positive_definite_by_split(a, l)
        except SingularMatrixError:
            continue
        trials += 1
        oracle = int(np.sum(np.linalg.eigvalsh(a) < 0))
        broken += not (r.additivity_holds and r.ind_full == oracle)
        tau = 1e-9 * np.max(np.abs(a))
        if pd:
            accepted += 1
            unsound += not np.min(np.linalg.eigvalsh(a)) > tau
        weak_frame += not abs(np.linalg.det(split_frame(a, l))) > tau
    ok = broken == 0 and unsound == 0 and weak_frame == 0
    return ok, (
        f"additivity failures {broken}/200, unsound positive answers {unsound}/{accepted}, "
        f"singular [AV|W] {weak_frame}"
    )


def shared_spectrum():
    rng = np.random.default_rng(109)
    bad = 0
    for trial in range(200):
        m, n = (int(v) for v in rng.integers(1, 9, size=2))
        if trial % 2:
            r = int(rng.integers(1, min(m, n) + 1))
            u = rng.standard_normal((m, r)) @ rng.standard_normal((r, n))
        else:
            u = rng.standard_normal((m, n))
        left = matcore.sym_eigen(u @ u.T).values
        right = matcore.sym_eigen(u.T @ u).values
        cut = 1e-9 * max(1.0, float(np.max(np.abs(left))))
        left, right = left[left > cut], right[right > cut]
        same = left.size == right.size and np.all(np.abs(left - right) <= 1e-9 * max(1.0, left.max(initial=1.0)))
        bad += not same
    return bad == 0, f"{bad} mismatches in 200"


CRITERIA = [
    (1, "golden example", golden_example),
    (2, "SVD oracle equivalence", svd_oracle),
    (3, "Gram determinant inequality", gram_inequality),
    (4, "complement duality of the angle", complement_duality),
    (5, "dual principal value bookkeeping", dual_bookkeeping),
    (6, "synthesis roundtrip and uniqueness", synthesize_roundtrip),
    (7, "canonical matrix", canonical_matrix),
    (8, "projection by bordered determinants", projection),
    (9, "inertia additivity and split test", inertia_additivity),
    (10, "shared nonzero spectrum of UU^T and U^TU", shared_spectrum),
]


def summary_lines():
    lines = []
    for num, name, _ in CRITERIA:
        if num in RESULTS:
            ok, detail = RESULTS[num]
            lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {name} ({detail})")
    return lines


@pytest.mark.parametrize("num,name,check", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, name, check):
    ok, detail = check()
    RESULTS[num] = (bool(ok), detail)
    assert ok, detail


if __name__ == "__main__":
    for num, _, check in CRITERIA:
        RESULTS[num] = check()
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
