"""Acceptance criteria, one test per criterion.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` to get
one ``CRITERION n: PASS|FAIL ...`` line per criterion.  Criterion 10 reruns the
property suites in a subprocess.
"""
from __future__ import annotations

import os
import subprocess
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

from mvweyl import checks, lattice, localization, orbital, schurweyl, symgrp
from mvweyl.checks import PASSING

TESTS = Path(__file__).resolve().parent
RESULTS: dict = {}


def _timed(fn):
    t = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t


@lru_cache(maxsize=None)
def _decompositions():
    return {lam: orbital.decompose(lam) for d in range(1, 5) for lam in symgrp.partitions(d)}


def _composites(family):
    bad = 0
    cases = 0
    for d in (2, 3, 4):
        for u in symgrp.all_perms(d):
            for a in range(1, d):
                cases += 1
                if not localization.rank_one_composite(u, a, family).equals(localization.expected_composite(u, a, family)):
                    bad += 1
    return bad == 0, f"{cases} cases for d in 2..4, {bad} mismatches"


def criterion_1():
    return _composites("Z")


def criterion_2():
    return _composites("X")


def criterion_3():
    bad = []
    for d in (2, 3, 4):
        for a in range(1, d):
            Z = localization.weight_zero_T(localization.ginzburg_EF(a, "E", d, d), localization.ginzburg_EF(a, "F", d, d), d)
            X = localization.weight_zero_T(localization.bg_EF(a, "E", d, d), localization.bg_EF(a, "F", d, d), d)
            if not Z.equals(localization.right_multiplication(a, d, 1)):
                bad.append(f"Z d={d} a={a}")
            if not X.equals(localization.right_multiplication(a, d, -1)):
                bad.append(f"X d={d} a={a}")
    return not bad, "T_a = s_a (Z) and -s_a (X) for d in 2..4" if not bad else f"mismatches {bad}"


def criterion_4():
    notes = []
    ok = True
    for d in (2, 3):
        rep = checks.check_relations(d)
        ok &= rep["verdict"] == "PASS"
        notes.append(f"d={d} literal sign rule {'holds' if rep['literal_sign_rule_holds'] else 'fails'}")
    towers = 0
    for d in range(1, 5):
        for lam in symgrp.partitions(d):
            tower = schurweyl.build_tower(schurweyl.specht_model(lam), d)
            towers += 1
            ok &= not schurweyl.tower_relation_failures(tower)
            ok &= not schurweyl.tower_relation_failures(tower, dual=True)
    return ok, f"families at n=d in 2..3, {towers} Specht towers; " + ", ".join(notes)


def criterion_5():
    reps = [checks.check_schurweyl_match(d) for d in (2, 3)]
    blocks = sum(r["blocks"] for r in reps)
    return all(r["verdict"] == "PASS" for r in reps), f"{blocks} blocks agree across geometry, closed form and symmetrizers"


def criterion_6():
    decs = _decompositions()
    ok = all(len(dec.components) == symgrp.hook_length_count(lam) and dec.additivity and not dec.incomplete for lam, dec in decs.items())
    d4 = sum(len(decs[lam].components) for lam in symgrp.partitions(4))
    ok &= d4 == sum(symgrp.hook_length_count(lam) for lam in symgrp.partitions(4)) == 10
    return ok, f"counts match #SYT for all lambda of d <= 4, {d4} components at d = 4, additivity exact"


def criterion_7():
    decs = _decompositions()
    reps = {lam: orbital.hotta_check(lam, dec) for lam, dec in decs.items()}
    ok = all(r["verdict"] == "PASS" for r in reps.values())
    twists = {r["e_character"] for r in reps.values()}
    return ok, f"{len(reps)} partitions; e-basis character is {' / '.join(sorted(twists))}"


def criterion_8():
    decs = _decompositions()
    verdicts = {lam: orbital.conjecture_check(lam, dec)["verdict"] for lam, dec in decs.items()}
    t = time.perf_counter()
    checks.run(checks.RunConfig(d=4))
    full = time.perf_counter() - t
    off = {",".join(map(str, lam)): v for lam, v in verdicts.items() if v not in PASSING}
    detail = f"verify-all --d 4 took {full:.0f}s; "
    detail += "all PASS" if not off else "not PASS: " + ", ".join(f"({k}) {v}" for k, v in off.items())
    return not off and full < 900, detail


def criterion_9():
    t = time.perf_counter()
    reps = [lattice.mv_type_check(lam, samples=100, seed=0) for d in range(1, 5) for lam in symgrp.partitions(d)]
    took = time.perf_counter() - t
    fails = sum(r["failure_count"] for r in reps)
    return fails == 0 and took < 60, f"{len(reps)} partitions x 100 samples, {fails} failures, {took:.1f}s"


def criterion_10():
    env = dict(os.environ)
    env.setdefault("MVWEYL_TRIALS", "1000")
    cmd = [sys.executable, "-m", "pytest", "-q", "-m", "property", "-p", "no:cacheprovider", str(TESTS)]
    res = subprocess.run(cmd, cwd=TESTS.parent, env=env, capture_output=True, text=True)
    last = res.stdout.strip().splitlines()[-1] if res.stdout.strip() else res.stderr.strip()[-200:]
    return res.returncode == 0, f"{env['MVWEYL_TRIALS']} trials per property: {last.strip('= ')}"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


def evaluate(n: int) -> tuple:
    if n not in RESULTS:
        RESULTS[n] = _timed(CRITERIA[n])
    return RESULTS[n]


def line(n: int) -> str:
    ok, detail, took = evaluate(n)
    return f"CRITERION {n}: {'PASS' if ok else 'FAIL'} ({took:.1f}s) {detail}"


@pytest.mark.parametrize("n", list(CRITERIA))
def test_criterion(n):
    ok, detail, _ = evaluate(n)
    print(line(n))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n in CRITERIA:
        text = line(n)
        failed += text.split()[2] != "PASS"
        print(text, flush=True)
    sys.exit(1 if failed else 0)
