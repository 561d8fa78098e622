"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest, where
the lines are repeated in the terminal summary.
"""

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import congruent, inertia_oracle, random_symmetric, random_unimodular  # noqa: E402
from twobridge.braidkit import ConwayNotation, conway_to_braid, exponent_sum  # noqa: E402
from twobridge.forkengine import run  # noqa: E402
from twobridge.goeritz import conway_closed_form_sign, signature  # noqa: E402
from twobridge.invariants import (  # noqa: E402
    braid_diagram,
    check_mirror,
    check_sum,
    closed_form_R,
    diagram_report,
    report,
    shift,
)
from twobridge.sweep import SweepSpec, enumerate_notations, load_catalog  # noqa: E402

RESULTS = []
SWEEP = SweepSpec(max_sum=10, max_len=5, signs="both")


def record(number, title, failures, detail=""):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    if failures:
        line += f"; first failure: {failures[0]}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def sweep_cases():
    return enumerate_notations(SWEEP)


def test_criterion_1_trefoil():
    start = time.perf_counter()
    rep = report(ConwayNotation((3,)))
    elapsed = time.perf_counter() - start
    failures = []
    for name, got, want in [
        ("generator_count", rep.generator_count, 3),
        ("R", rep.R, 1),
        ("det", rep.det, 3),
        ("lens_space", rep.lens_space, "L(3,1)"),
    ]:
        if got != want:
            failures.append(f"{name} = {got}, expected {want}")
    r = run(rep.conway)
    if len(r.histogram) != 1 or r.r_tilde + rep.s_R != 1:
        failures.append(f"levels {r.histogram!r} shifted by {rep.s_R} are not all at 1")
    if elapsed >= 1:
        failures.append(f"took {elapsed:.3f}s")
    record(1, "trefoil [3]: 3 generators at level 1, det 3, L(3,1)", failures, f"{elapsed * 1000:.1f} ms")


def test_criterion_2_sweep():
    start = time.perf_counter()
    cases = sweep_cases()
    failures = []
    for c in cases:
        braid = conway_to_braid(c)
        e = exponent_sum(braid)
        diag = diagram_report(braid_diagram(braid))
        automaton = run(c)
        from_automaton = automaton.r_tilde + shift(e, diag.w, braid.strand_pairs)
        closed = closed_form_R(c, e, diag.w)
        half_sigma = Fraction(diag.sigma, 2)
        p = abs(_numerator(c.entries))
        if not from_automaton == closed == half_sigma:
            failures.append(f"{c}: R automaton {from_automaton}, closed {closed}, sigma/2 {half_sigma}")
        if not automaton.generator_count == p == diag.det:
            failures.append(f"{c}: count {automaton.generator_count}, |p| {p}, |det G| {diag.det}")
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        failures.append(f"took {elapsed:.2f}s")
    if len(cases) < 200:
        failures.append(f"only {len(cases)} cases")
    record(2, "sweep R(automaton+shift) = R(closed) = sigma/2, count = |p| = |det G|", failures,
           f"{len(cases)} cases in {elapsed:.2f}s")


def test_criterion_3_identities():
    failures = []
    cases = sweep_cases()
    for c in cases:
        diag = diagram_report(braid_diagram(conway_to_braid(c)))
        if diag.w != diag.mu_II - diag.mu_I:
            failures.append(f"{c}: w {diag.w} != mu_II - mu_I {diag.mu_II - diag.mu_I}")
        if -(diag.mu_I + diag.mu_II) != sum(c.entries):
            failures.append(f"{c}: -(mu_I + mu_II) {-(diag.mu_I + diag.mu_II)} != sum {sum(c.entries)}")
        if diag.sign_G != conway_closed_form_sign(c):
            failures.append(f"{c}: sign G {diag.sign_G} != closed form {conway_closed_form_sign(c)}")
    record(3, "writhe, crossing-count and sign(G) identities", failures, f"{len(cases)} cases")


def test_criterion_4_mirror():
    failures = []
    cases = sweep_cases()
    for c in cases:
        v = check_mirror(c, strict=False)
        if not v.ok:
            failures.append(f"{c}: sigma {v.sigma}, r {v.r}, det {v.det}")
    record(4, "mirror law via the mirrored braid", failures, f"{len(cases)} cases")


def test_criterion_5_sum():
    catalog = load_catalog()
    pairs = list(itertools.combinations_with_replacement(catalog, 2))
    failures = []
    for a, b in pairs:
        v = check_sum(a.conway, b.conway, strict=False)
        if not v.ok:
            failures.append(f"{a.name} # {b.name}: sigma {v.sigma}, det {v.det}")
    if len(pairs) < 10:
        failures.append(f"only {len(pairs)} pairs")
    record(5, "connected-sum law on spliced catalog pairs", failures, f"{len(pairs)} pairs")


def test_criterion_6_linear_algebra():
    rng = random.Random(6)
    failures = []
    for trial in range(200):
        n = rng.randint(1, 6)
        m = random_symmetric(rng, n)
        base = signature(m)
        oracle = inertia_oracle(m, random.Random(trial))
        if (base.n_plus, base.n_minus, base.n_zero) != oracle:
            failures.append(f"trial {trial}: {base} vs oracle {oracle} on {m}")
        moved = congruent(m, random_unimodular(rng, n))
        if signature(moved) != base:
            failures.append(f"trial {trial}: congruence changed {base} to {signature(moved)}")
    record(6, "signature: unimodular congruence invariance and brute-force oracle", failures, "200 matrices")


def test_criterion_7_concentration():
    failures = []
    cases = sweep_cases()
    for c in cases:
        hist = run(c).histogram
        want = 0 if c.sign > 0 else 1
        if list(hist) != [want]:
            failures.append(f"{c}: histogram {hist!r}, expected level {want}")
    record(7, "grading histogram concentrated on one level", failures, f"{len(cases)} cases")


def _numerator(entries):
    """|p| from the convergent recurrence, independent of the package."""
    p_prev, p = 1, entries[0]
    for b in entries[1:]:
        p_prev, p = p, b * p + p_prev
    return p


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    bad = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            bad += 1
    sys.exit(1 if bad else 0)
