"""Exit criteria, one test per criterion; each prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the summary.
"""
import json
import subprocess
import sys
import time
from math import factorial

import pytest
import sympy

from perminv.certify import Conclusion, analyze, certify_non_cm_char2
from perminv.cli import GroupSpec, RunConfig, build_group
from perminv.molien import burnside_count, molien_series
from perminv.orbits import (
    AnOrbitClass,
    classify_an_orbit,
    compositions,
    elementary_symmetric,
    gobel_generators,
    orbit,
    orbit_count,
    orbit_sum,
    spans_degree,
)
from perminv.perm import cycle_type, is_pseudoreflection, rank_id_minus
from perminv.series import Poly, is_palindromic, series_coefficients

from conftest import census_group

CENSUS = ["trivial1", "trivial2", "S2", "C3", "S3", "C4", "V4", "D4", "A4", "S4", "C6"]


def report(criterion, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def family(name, n):
    return build_group(GroupSpec(family=name, n=n), RunConfig())


def test_1_bertin_numerator():
    t0 = time.perf_counter()
    res = molien_series(family("cyclic", 4))
    elapsed = time.perf_counter() - t0
    ok = (
        res.numerator == Poly([1, 0, 1, 1, 2, 1])
        and res.canonical.degrees == (1, 2, 3, 4)
        and elapsed < 1.0
    )
    report("1 Bertin numerator", ok, f"{res.numerator} over {res.canonical.degrees} in {elapsed:.3f}s")


def test_2_bertin_certificate():
    c4 = certify_non_cm_char2(family("cyclic", 4))
    s4 = certify_non_cm_char2(family("symmetric", 4))
    a4 = certify_non_cm_char2(family("alternating", 4))
    rules = [s.rule for s in c4.steps]
    ok = (
        c4.conclusion is Conclusion.NOT_CM_AT_P2
        and rules == [
            "hochster_eagon_cm",
            "lemma_pseudoreflection_transposition",
            "watanabe_converse",
            "stanley_palindromic",
            "hilbert_char_independent",
            "braun_theorem_b",
        ]
        and any(s.evidence.get("palindromic") is False for s in c4.steps)
        and s4.conclusion is Conclusion.INCONCLUSIVE
        and s4.reason.startswith("contains transposition")
        and a4.conclusion is Conclusion.INCONCLUSIVE
        and a4.reason == "contains no odd permutation"
    )
    report("2 Bertin certificate", ok, f"C4 {c4.conclusion.value}; S4: {s4.reason}; A4: {a4.reason}")


def test_3_oracle_triangle():
    t0 = time.perf_counter()
    bad = []
    for name in CENSUS:
        G = census_group(name)
        molien = series_coefficients(molien_series(G).canonical, 12)
        for d in range(13):
            triple = (molien[d], burnside_count(G, d), orbit_count(G, d))
            if len(set(triple)) != 1:
                bad.append((name, d, triple))
    elapsed = time.perf_counter() - t0
    report("3 oracle triangle", not bad and elapsed < 30, f"{len(CENSUS)} groups, d<=12, {elapsed:.2f}s, mismatches={bad}")


def test_4_palindromicity_laws():
    num = {name: molien_series(census_group(name)).numerator for name in CENSUS}
    ok = (
        all(is_palindromic(num[g]) for g in ("C3", "V4", "A4"))
        and not any(is_palindromic(num[g]) for g in ("C4", "C6"))
        and all(num[g] == Poly([1]) for g in ("S2", "S3", "S4"))
    )
    report("4 palindromicity laws", ok, ", ".join(f"{g}={num[g]}" for g in ("C3", "V4", "A4", "C4", "C6")))


def test_5_rank_pseudoreflection():
    S4 = census_group("S4")
    ok = len(S4.elements) == 24
    for p in S4.elements:
        P = sympy.zeros(4, 4)
        for i, j in enumerate(p.image):
            P[j, i] = 1
        ok &= rank_id_minus(p) == (sympy.eye(4) - P).rank()
    pseudo = [p for p in S4.elements if is_pseudoreflection(p)]
    ok &= len(pseudo) == 6 and all(cycle_type(p) == (2, 1, 1) for p in pseudo)
    report("5 rank/pseudoreflection over S4", ok, f"{len(pseudo)} pseudoreflections")


def test_6_gobel_spanning():
    ok = True
    details = []
    for name in ("trivial2", "S2", "C3", "S3"):
        G = census_group(name)
        orbs = gobel_generators(G)
        n = G.n
        ok &= all(o.degree <= max(n, n * (n - 1) // 2) for o in orbs)
        gens = [orbit_sum(G, o.representative) for o in orbs]
        spans = all(spans_degree(gens, G, d) for d in range(7))
        ok &= spans
        details.append(f"{name}:{len(orbs)} gens")
    report("6 Goebel spanning d<=6", ok, ", ".join(details))


def test_7_an_hypersurface():
    A3 = census_group("C3")
    gens = [elementary_symmetric(3, k) for k in (1, 2, 3)] + [orbit_sum(A3, (0, 1, 2))]
    ok = all(spans_degree(gens, A3, d) for d in range(7))
    for n, An, Sn in ((3, "C3", "S3"), (4, "A4", "S4")):
        An, Sn = census_group(An), census_group(Sn)
        for d in range(6):
            for A in compositions(n, d):
                a, s = orbit(An, A).size, orbit(Sn, A).size
                split = classify_an_orbit(A, n) is AnOrbitClass.SPLIT
                ok &= split == (2 * a == s) and (not split) == (a == s)
    report("7 A_n hypersurface (desk scale)", ok)


def test_8_rank_identity():
    rows = []
    ok = True
    for name in CENSUS:
        G = census_group(name)
        h1 = molien_series(G).numerator_at_one
        ok &= h1 * G.order == factorial(G.n)
        rows.append(f"{name}:{h1}*{G.order}")
    report("8 rank identity h(1)|G| = n!", ok, " ".join(rows))


def test_9_determinism():
    cmd = [sys.executable, "-m", "perminv", "certify", "--family", "cyclic:4", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = a == b and json.loads(a)["conclusion"] == "not_cm_at_p2"
    report("9 determinism", ok, f"{len(a)} bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q"]))
