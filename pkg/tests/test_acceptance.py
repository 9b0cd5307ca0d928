"""Acceptance criteria, each run at exact equality against its time budget."""

from __future__ import annotations

import subprocess
import sys
import time

from thicksl2.checks import run_check
from thicksl2.config import SuiteConfig
from thicksl2.nh_relations import families
from thicksl2.runner import emit_report, run_suite

PAIRS = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3)]


def _criterion(number: int, title: str, budget_s: float, jobs: list[tuple[str, dict]]) -> None:
    start = time.perf_counter()
    failures = []
    for name, params in jobs:
        ok, witness = run_check(name, params)
        if not ok:
            failures.append((name, params, witness))
    elapsed = time.perf_counter() - start
    status = "PASS" if not failures and elapsed < budget_s else "FAIL"
    print(f"\n[{status}] criterion {number}: {title} ({len(jobs)} checks, {elapsed:.2f}s of {budget_s:.0f}s)")
    assert not failures, failures[:3]
    assert elapsed < budget_s


def test_c01_nilhecke_relations():
    _criterion(1, "nilHecke relation suite, ranks <= 4", 10, families(4))


def test_c02_pair_decomposition():
    jobs = [("nh.pair_decomposition", {"a": a, "b": b}) for a, b in PAIRS]
    _criterion(2, "e_a (x) e_b = sum sigma lambda and orthogonality", 60, jobs)


def test_c03_matrix_decomposition():
    jobs = [("nh.matrix_decomposition", {"a": a}) for a in (2, 3, 4)]
    jobs += [("nh.matrix_units", {"a": a}) for a in (2, 3)]
    _criterion(3, "matrix decomposition of NH_a", 120, jobs)


def test_c04_schur_engine():
    jobs = [("symfun.schur_triple", {"a": a, "box": 4}) for a in (2, 3, 4)]
    jobs += [("symfun.schur_Da", {"a": a, "box": 4}) for a in (2, 3, 4)]
    jobs.append(("symfun.eh_relation", {"m_max": 8, "a_max": 4}))
    _criterion(4, "Schur engine: three formulas, D_a action, e-h relation", 10, jobs)


def test_c05_lr_layer():
    jobs = [("symfun.lr_basic", {"weight_max": 4})]
    jobs += [("symfun.lr_rectangle", {"a": a, "b": b}) for a in (1, 2, 3) for b in (1, 2, 3)]
    jobs += [("symfun.skew_schur", {"i": i, "weight_max": 6}) for i in (1, 2, 3)]
    _criterion(5, "LR layer: positivity, rectangle rules, skew Schur", 30, jobs)


def test_c06_grassmannian():
    jobs = [("grass.series_inversion", {"n": n, "cutoff": 8}) for n in range(-2, 3)]
    jobs += [("grass.thick_bubble", {"a": a, "box": 4, "n": 0}) for a in (1, 2, 3)]
    jobs.append(("grass.higher_relation", {"weight_max": 5}))
    jobs += [("grass.bubble_slide", {"a": a}) for a in (1, 2, 3, 4)]
    _criterion(6, "Grassmannian suite", 30, jobs)


def test_c07_udot():
    jobs = [
        ("udot.relations", {"power_max": 3, "n_range": 6, "act_max": 10}),
        ("udot.positivity", {"power_max": 3, "n_range": 6}),
        ("udot.q_cardinality", {"box_max": 6}),
        ("udot.triple_canonical", {"power_max": 3, "n_range": 8}),
    ]
    _criterion(7, "U(sl2) relations, positivity, q-cardinality, triple lemma", 10, jobs)


def test_c08_decomposition_shadows():
    jobs = [
        ("udot.decomposition_EE", {"power_max": 3}),
        ("udot.decomposition_EF", {"power_max": 3, "n_range": 6}),
    ]
    _criterion(8, "decomposition shadows", 5, jobs)


def test_c09_hom_rank():
    jobs = [("udot.hom_rank", {"power_max": 3, "n": n, "degree": 20}) for n in range(-4, 5)]
    _criterion(9, "hom-rank double count to degree 20", 30, jobs)


def test_c10_full_verify():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "thicksl2.cli", "verify", "--suite", "all", "--no-timings", "--jobs", "4"],
        capture_output=True,
        timeout=300,
    )
    elapsed = time.perf_counter() - start
    cfg = SuiteConfig(suite="all", timings=False, jobs=1)
    again = emit_report(run_suite(cfg), "json", "all", 0)
    ok = proc.returncode == 0 and elapsed < 300 and proc.stdout == again
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion 10: verify --suite all ({elapsed:.1f}s, deterministic={proc.stdout == again})")
    assert proc.returncode == 0, proc.stderr.decode()[-2000:]
    assert elapsed < 300
    assert proc.stdout == again
