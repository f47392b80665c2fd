"""The thirteen acceptance criteria, each at exact equality.

Every test prints one ACCEPTANCE line with its verdict, visible in ``pytest -v``.
"""
import pytest

from nekagt.characters import E_pair_closed, E_pair_hooks, Z12, w_weight
from nekagt.checks import CheckSpec, run_check
from nekagt.exactmath import LaurentPoly, random_point
from nekagt.fock import charge_decompose, gamma_element, kac_prediction
from nekagt.nekrasov import GaugeConfig, Z_direct
from nekagt.virasoro import VirParams, S_element, block, gram


@pytest.fixture
def verdict(capsys):
    """Call with (number, title, ok); prints the line and asserts."""
    def report(number, title, ok, detail=""):
        line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return report


def summary(report):
    return f"{report.comparisons} comparisons, {len(report.mismatches)} mismatches, {report.elapsed_ms} ms"


def test_01_character_example(verdict):
    expected = LaurentPoly(Z12, {(0, 0): 1, (-1, 1): 1, (1, -2): 1, (-1, 0): 1, (0, -1): 1})
    ok = E_pair_closed((1, 1), (2, 1)) == expected and E_pair_hooks((1, 1), (2, 1)) == expected
    verdict(1, "character E_[1,1],[2,1] by the closed form and the hook sum", ok)


def test_02_mass_polynomial(verdict):
    ok = True
    for seed in range(5):
        m = random_point(seed, ["m"])["m"]
        ok &= w_weight(((1, 1),), ((2, 1),), [0], [0], m) == (m + 3) * (m + 1) * m * (m - 1) * (m - 2)
    verdict(2, "mass polynomial w_[1,1],[2,1](m) at 5 points", ok)


def test_03_nekrasov_first_order(verdict):
    ok = True
    for seed in range(5):
        p = random_point(seed, ["t1", "t2", "a", "m"])
        t1, t2, a, m = p["t1"], p["t2"], p["a"], p["m"]
        cfg = GaugeConfig(r=2, a=[[a, -a]], m=[m], t1=t1, t2=t2, order=1)
        zex = ((m - 2 * a) * (m - t2) * (m - t1) * (m + 2 * a - t1 - t2) / (2 * a * t1 * t2 * (t1 + t2 - 2 * a))
               - (m + 2 * a) * (m - t2) * (m - t1) * (m - 2 * a - t1 - t2) / (2 * a * t1 * t2 * (t1 + t2 + 2 * a)))
        ok &= Z_direct(cfg).coefficient((1,)) == zex
    verdict(3, "first instanton coefficient at 5 points (t1, t2, a, m)", ok)


def test_04_shapovalov_level_two(verdict):
    ok = True
    for seed in range(5):
        p = random_point(seed, ["c", "h"])
        c, h = p["c"], p["h"]
        ok &= gram(2, VirParams(c, h)) == [[4 * h + c / 2, 6 * h], [6 * h, 8 * h * h + 4 * h]]
    verdict(4, "level two Shapovalov matrix at 5 points", ok)


def test_05_vertex_element(verdict):
    ok = True
    for seed in range(5):
        p = random_point(seed, ["k1", "h", "k2", "c"])
        k1, h, k2, c = p["k1"], p["h"], p["k2"], p["c"]
        expected = 2 * k2 + (k1 + h - k2 - 1) * (k2 + h - k1)
        ok &= all(S_element((1,), (1,), k1, h, k2, c, peel) == expected for peel in ("right", "left"))
    verdict(5, "S_[1],[1] at 5 points, both peel orders", ok)


def test_06_block_first_order(verdict):
    ok = True
    for seed in range(5):
        p = random_point(seed, ["c", "k", "h"])
        c, k, h = p["c"], p["k"], p["h"]
        ok &= block(c, [k], [h], 1).coefficient((1,)) == (h * h - h + 2 * k) / (2 * k)
    verdict(6, "one-point block first coefficient at 5 points", ok)


def test_07_vertex_operator_identity(verdict):
    report = run_check(CheckSpec("voprop", degree=5))
    m = random_point(0, ["m"])["m"]
    worked = gamma_element(m, (1, 1), (2, 1)) == m * (m - 1) * (m - 2) * (m + 3) * (m + 1) / 6
    verdict(7, "rank one W elements equal vertex operator elements, sizes <= 5, 3 masses",
            report.passed and len(report.seeds_used) == 3 and worked, summary(report))


def test_08_induced_commutator(verdict):
    report = run_check(CheckSpec("mainprop", degree=9, order=4))
    verdict(8, "[L_k, Gamma_p] blocks for |k| <= 2, |p| <= 4, window 9, 2 masses",
            report.passed and len(report.seeds_used) == 2, summary(report))


def test_09_blended_proportionality(verdict):
    report = run_check(CheckSpec("dpfprop", rank=2, degree=2))
    values = report.comparisons // 2
    verdict(9, "blended rank one elements proportional to rank two elements",
            report.passed and values >= 20, summary(report))


def test_10_even_odd_factorization(verdict):
    report = run_check(CheckSpec("mainthm", degree=3, charges=(0, 1)))
    verdict(10, "even/odd factorization and Verma-side match, k, l in {0, 1}, degrees <= 3",
            report.passed, summary(report))


def test_11_agt_end_to_end(verdict):
    reports = [run_check(CheckSpec("agt", points=1, charges=(k,), order=3)) for k in (0, 1, 2)]
    reports.append(run_check(CheckSpec("agt", points=2, charges=(0, 1), order=2)))
    reports += [run_check(CheckSpec("agt", mode="generic", order=2, seed=s)) for s in range(3)]
    ok = all(r.passed for r in reports)
    total = sum(r.comparisons for r in reports)
    verdict(11, "Z = Z' B: N=1 order 3 at k=0,1,2; N=2 order 2; generic N=1 order 2 at 3 seeds",
            ok, f"{total} comparisons over {len(reports)} runs")


def test_12_kac_counts(verdict):
    predicted = kac_prediction(4)
    found = {key: v for key, v in charge_decompose(10).items() if key[1] <= 4}
    verdict(12, "joint (h_0, d') multiplicities on the odd Fock space, d' <= 4",
            predicted == found, f"{len(predicted)} eigenvalue pairs")


def test_13_trace_identity(verdict):
    report = run_check(CheckSpec("tragt", order=3))
    verdict(13, "trace of W operators equals the direct sum, (r, N) in {(1,1), (2,1), (1,2)}, order 3",
            report.passed and len(report.seeds_used) >= 3, summary(report))
