"""
Acceptance criteria, one test each.

Every test appends a single ``PASS``/``FAIL`` line to the acceptance
summary printed at the end of the pytest run, then asserts.
"""
import contextlib
import io
import json
import math
import time
import timeit

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, hermitian_samples
from genpow.cli import main
from genpow.gpower import gpow, norm_equality_check
from genpow.harness import GATING
from genpow.harness.generate import from_basis, random_pd, random_unitary
from genpow.linalg import fro, operator_norm
from genpow.matfile import parse, read
from genpow.matfun import exp_general, exp_spectral, log_series, log_spectral

THEOREM_SEED = "0xC0FFEE"


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def run_cli(argv):
    out = io.StringIO()
    start = time.perf_counter()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue(), time.perf_counter() - start


def test_1_golden_example():
    a = np.diag([1.0, 2.0])
    b = np.array([[0.0, 1.0], [0.0, 0.0]])
    ln2 = math.log(2.0)
    res = gpow(a, b)
    err_value = np.max(np.abs(res.value - np.array([[1.0, ln2], [0.0, 1.0]])))
    err_blog = np.max(np.abs(res.blogA - np.array([[0.0, ln2], [0.0, 0.0]])))
    runtime = min(timeit.repeat(lambda: gpow(a, b), number=50, repeat=5)) / 50
    ok = err_value <= 1e-12 and err_blog <= 1e-12 and runtime < 1e-3
    record(1, "golden example", ok,
           f"value err {err_value:.1e}, B log A err {err_blog:.1e}, {runtime * 1e3:.3f} ms")


def test_2_oracle_equivalence():
    r = np.random.default_rng(2002)
    worst_exp = 0.0
    for h in hermitian_samples(200, seed=2001):
        h = h * (r.uniform(0.1, 3.0) / operator_norm(h))
        ref = exp_spectral(h)
        worst_exp = max(worst_exp, fro(exp_general(h) - ref) / fro(ref))
    worst_log = 0.0
    for i in range(200):
        n = 2 + i % 7
        # spectrum within [0.1, 1.9] gives ||A - I|| <= 0.9
        a = random_pd(r, n, 0.1, 1.9)
        ref = log_spectral(a)
        worst_log = max(worst_log, fro(log_series(a) - ref) / max(1.0, fro(ref)))
    ok = worst_exp <= 1e-10 and worst_log <= 1e-8
    record(2, "oracle equivalence", ok, f"exp rel {worst_exp:.1e}, log err {worst_log:.1e}")


def test_3_inverse_pairs():
    r = np.random.default_rng(3003)
    worst_h = 0.0
    for h in hermitian_samples(200, seed=3001):
        h = h * (r.uniform(0.1, 3.0) / operator_norm(h))
        worst_h = max(worst_h, fro(log_spectral(exp_spectral(h)) - h) / max(1.0, fro(h)))
    worst_a = 0.0
    for i in range(200):
        a = random_pd(r, 2 + i % 7, 0.1, 10.0)
        worst_a = max(worst_a, fro(exp_general(log_spectral(a)) - a) / fro(a))
    ok = worst_h <= 1e-8 and worst_a <= 1e-8
    record(3, "inverse pairs", ok, f"log(e^H) rel {worst_h:.1e}, e^(log A) rel {worst_a:.1e}")


def test_4_norm_lemma():
    r = np.random.default_rng(4004)
    worst = 0.0
    for i in range(200):
        t = random_pd(r, 2 + i % 7, 0.0, 4.0)
        expected = math.exp(operator_norm(t))
        worst = max(worst, abs(operator_norm(exp_general(t)) - expected) / expected)
    record(4, "norm lemma", worst <= 1e-8, f"worst rel {worst:.1e} on 200 PSD T")


def test_5_norm_proposition():
    r = np.random.default_rng(5005)
    bound_failures = 0
    for i in range(500):
        n = 2 + i % 5
        a = random_pd(r, n, 0.1, 10.0)
        b = (r.standard_normal((n, n)) + 1j * r.standard_normal((n, n))) * r.uniform(0.1, 1.5)
        bound_failures += not norm_equality_check(a, b).bound_holds
    # equality needs B log A >= 0: commuting pairs, B >= 0 and A >= I
    worst = 0.0
    for i in range(200):
        n = 2 + i % 7
        v = random_unitary(r, n)
        res = norm_equality_check(from_basis(v, r.uniform(1.0, 10.0, n)), from_basis(v, r.uniform(0.0, 3.0, n)))
        worst = max(worst, abs(res.lhs - res.rhs) / res.rhs)
    ok = bound_failures == 0 and worst <= 1e-8
    record(5, "norm proposition", ok,
           f"bound failures {bound_failures}/500, equality worst rel {worst:.1e} on 200 (A >= I)")


@pytest.fixture(scope="module")
def theorem_runs():
    argv = ["verify", "all", "--trials", "200", "--seed", THEOREM_SEED, "--format", "json"]
    return [run_cli(argv) for _ in range(2)]


@pytest.fixture(scope="module")
def hunt_runs(tmp_path_factory):
    runs = []
    for k in range(2):
        wdir = tmp_path_factory.mktemp(f"witness{k}")
        argv = ["hunt", "exp-monotonicity", "--trials", "10000", "--seed", "1",
                "--save-witness", str(wdir), "--format", "json"]
        code, out, _ = run_cli(argv)
        runs.append((code, json.loads(out), wdir))
    return runs


def test_6_theorem_suite(theorem_runs):
    code, out, seconds = theorem_runs[0]
    doc = json.loads(out)
    gating = [r for r in doc["reports"] if r["theorem_id"] in GATING]
    failures = sum(r["failures"] for r in gating)
    worst_skip = max(r["skips"] / r["trials"] for r in gating)
    ok = code == 0 and failures == 0 and worst_skip <= 0.5 and seconds <= 60 and len(gating) == 7
    record(6, "theorem suite", ok,
           f"exit {code}, failures {failures}, max skip fraction {worst_skip:.2f}, {seconds:.1f} s")


def test_7_counterexample_hunt(hunt_runs, tmp_path):
    code, doc, wdir = hunt_runs[0]
    a, b = read(wdir / "A.mat"), read(wdir / "B.mat")
    # re-verify through the compute path, with an independent eigenvalue oracle
    ea, eb = tmp_path / "eA.mat", tmp_path / "eB.mat"
    c1, _, _ = run_cli(["compute", "exp", str(wdir / "A.mat"), "--out", str(ea)])
    c2, _, _ = run_cli(["compute", "exp", str(wdir / "B.mat"), "--out", str(eb)])
    d = parse(ea.read_text()) - parse(eb.read_text())
    gap = np.linalg.eigvalsh(0.5 * (d + d.conj().T))[0]
    order = np.linalg.eigvalsh(a - b)[0]
    ok = (
        code == 0 and doc["found"] and c1 == 0 and c2 == 0
        and a.shape == (2, 2)
        and np.allclose(a, a.conj().T) and np.allclose(b, b.conj().T)
        and order >= -1e-12
        and gap < -1e-6
        and abs(gap - doc["witness_eigenvalue"]) <= 1e-10
    )
    record(7, "counterexample hunt", ok,
           f"exit {code}, min eig(A-B) {order:.1e}, min eig(e^A-e^B) {gap:.4f} re-verified")


def test_8_determinism(theorem_runs, hunt_runs):
    (_, out1, _), (_, out2, _) = theorem_runs
    same_tallies = json.loads(out1) == json.loads(out2)
    (_, d1, w1), (_, d2, w2) = hunt_runs
    same_witness = (
        d1 == d2
        and (w1 / "A.mat").read_text() == (w2 / "A.mat").read_text()
        and (w1 / "B.mat").read_text() == (w2 / "B.mat").read_text()
    )
    record(8, "determinism", same_tallies and same_witness,
           f"theorem tallies identical {same_tallies}, witness identical {same_witness}")
