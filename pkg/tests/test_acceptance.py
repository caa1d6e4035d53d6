"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import itertools
import json
import math
import random
import time
from fractions import Fraction

from exckit.admissibility import check_split, codim2_odd_check, p1_specialization, theorem_sum
from exckit.charpoly import leading_coeff_I, leading_coeff_J
from exckit.cli import main
from exckit.graded import Geometry, TwistMultiset, graded_piece_J, symmetric_power, tensor
from exckit.lattice import DoublingPattern
from exckit.singularity import hilbert_value
from exckit.verify import VerifyOptions, run_suites


def test_ac1_paper_example_embedding_dimension(capsys, criterion):
    start = time.perf_counter()
    code = main(["hilbert", "--p", "2", "--a", "5,1", "--format", "json"])
    elapsed = time.perf_counter() - start
    data = json.loads(capsys.readouterr().out)
    ok = code == 0 and data["embedding_dimension"] == "24" and elapsed < 1.0
    criterion("AC 1", ok, f"embdim={data['embedding_dimension']} t={elapsed:.3f}s (<1s)")
    assert ok


def test_ac2_p1_recovery(criterion):
    start = time.perf_counter()
    cases = bad = 0
    vectors = itertools.chain(
        itertools.product(range(-5, 6), repeat=2), itertools.product(range(-3, 4), repeat=3)
    )
    for a in vectors:
        for h in range(len(a) + 1):
            cases += 1
            if theorem_sum(a, DoublingPattern.prefix(h), 1) != p1_specialization(a, h):
                bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 10
    criterion("AC 2", ok, f"{cases} cases, {bad} mismatches, t={elapsed:.2f}s (<10s)")
    assert ok


def test_ac3_leading_coefficient_identity(criterion):
    start = time.perf_counter()
    cases = bad = 0
    for p in (1, 2, 3):
        for codim in (2, 3):
            for a in itertools.product(range(-4, 5), repeat=codim):
                g = Geometry.from_degrees(p, a)
                cases += 1
                want = theorem_sum(a, DoublingPattern.prefix(0), p)
                if leading_coeff_I(g) * math.factorial(g.n) != want:
                    bad += 1
    elapsed = time.perf_counter() - start
    ok = cases >= 500 and bad == 0 and elapsed < 60
    criterion("AC 3", ok, f"{cases} geometries, {bad} mismatches, t={elapsed:.2f}s (<60s)")
    assert ok


def test_ac4_j_case_proportionality(criterion):
    rng = random.Random(4)
    groups = 0
    problems = []
    for p in (1, 2, 3):
        for codim in (2, 3):
            for h in range(1, codim):
                ratios = set()
                used = 0
                while used < 6:
                    a = tuple(rng.randint(-4, 4) for _ in range(codim))
                    s = theorem_sum(a, DoublingPattern.prefix(h), p)
                    if s == 0:
                        continue
                    ratios.add(leading_coeff_J(Geometry.from_degrees(p, a), h) / Fraction(s))
                    used += 1
                groups += 1
                if len(ratios) != 1 or min(ratios) <= 0:
                    problems.append((p, codim, h, sorted(ratios)))
    ok = not problems
    criterion("AC 4", ok, f"{groups} (p,codim,h) groups x 6 vectors, problems={problems}")
    assert ok


def test_ac5_identity_suites(criterion):
    start = time.perf_counter()
    results = run_suites(["finite-difference", "shifted-difference", "comb-lemma"], VerifyOptions())
    elapsed = time.perf_counter() - start
    failures = [f for r in results for f in r.failures]
    counts = {r.name: r.checked for r in results}
    ok = not failures and elapsed < 30
    criterion("AC 5", ok, f"{counts} failures={len(failures)} t={elapsed:.2f}s (<30s)")
    assert ok


def test_ac6_filtration_oracle(criterion):
    rng = random.Random(6)
    vectors = bad = checks = 0
    for _ in range(60):
        codim = rng.randint(2, 4)
        a = tuple(rng.randint(-7, 7) for _ in range(codim))
        g = Geometry.from_degrees(1, a)
        vectors += 1
        for h in range(1, codim):
            for r in range(6):
                odd, even = TwistMultiset(), TwistMultiset()
                for k in range(r + 1):
                    tail = symmetric_power(a[h:], r - k)
                    odd = odd + tensor(symmetric_power(a[:h], 2 * k + 1), tail)
                    even = even + tensor(symmetric_power(a[:h], 2 * k), tail)
                checks += 2
                bad += odd != graded_piece_J(g, h, r, "odd")
                bad += even != graded_piece_J(g, h, r, "even")
    ok = vectors >= 50 and bad == 0
    criterion("AC 6", ok, f"{vectors} vectors, {checks} multiset equalities, {bad} failures")
    assert ok


def test_ac7_conifold_oracle(criterion):
    got = [hilbert_value((1, 1), 1, r) for r in range(11)]
    want = [math.comb(r + 3, 3) - math.comb(r + 1, 3) for r in range(11)]
    ok = got == want and got[-1] == 121
    criterion("AC 7", ok, f"h(0..10)={got}")
    assert ok


def test_ac8_codim2_odd(criterion):
    passing = bad = 0
    for a1, a2 in itertools.product(range(-6, 7), repeat=2):
        out = codim2_odd_check(a1, a2, 3)
        if check_split(Geometry(5, 3, (a1, a2))).overall:
            passing += 1
        bad += not (out.factored_ok and out.implied)
    ok = bad == 0
    criterion("AC 8", ok, f"169 grid points, {passing} pass the split system, {bad} violations")
    assert ok


def test_ac9_flop_catalog(tmp_path, capsys, criterion):
    argv = ["enumerate", "--p", "1", "--codim", "2", "--bound", "3", "--system", "split",
            "--filter", "crepant"]
    outputs = []
    for fmt in ("json", "human"):
        for run in range(2):
            path = tmp_path / f"{fmt}{run}.out"
            assert main(argv + ["--format", fmt, "--out", str(path)]) == 0
            outputs.append(path.read_bytes())
    rows = {tuple(int(x) for x in v) for v in json.loads(outputs[0])["vectors"]}
    rows = {v for v in rows if min(v) >= -3}
    identical = outputs[0] == outputs[1] and outputs[2] == outputs[3]
    ok = rows == {(1, 1), (0, 2), (-1, 3)} and identical
    criterion("AC 9", ok, f"rows={sorted(rows)} byte-identical={identical}")
    assert ok


def test_ac10_proof_steps(criterion):
    names = ["p1-recovery", "leading-coeff", "filtration", "lemma-cross"]
    results = run_suites(names, VerifyOptions())
    ok = all(r.ok for r in results)
    criterion("AC 10", ok, "algebraic proof-step suites: "
              + ", ".join(f"{r.name}={r.checked}" for r in results))
    assert ok
