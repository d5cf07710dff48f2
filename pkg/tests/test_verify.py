import itertools
import random
import warnings
from math import comb

import pytest

from pmdscodes import ArrayCode, CodeParams, ErasurePattern, field_new, ring_new
from pmdscodes.verify import (
    FIGURE1_SCENARIOS,
    check_lemma,
    enumerate_pmds_patterns,
    enumerate_sd_patterns,
    figure1_scenarios,
    lemma_tuple_count,
    pmds_pattern_count,
    sd_pattern_count,
    verify,
)


def test_sd_counts(sd_3_5_1, sd_3_5_2, gf16):
    assert sum(1 for _ in enumerate_sd_patterns(sd_3_5_1)) == 330 == sd_pattern_count(sd_3_5_1)
    assert sum(1 for _ in enumerate_sd_patterns(sd_3_5_2)) == 360 == sd_pattern_count(sd_3_5_2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        r1 = CodeParams(1, 5, 1, "sd", gf16)
    assert sum(1 for _ in enumerate_sd_patterns(r1)) == comb(5, 1) * comb(4, 2)


def test_sd_patterns_shape_and_uniqueness(sd_3_5_2):
    seen = set()
    for pat in enumerate_sd_patterns(sd_3_5_2):
        assert len(pat) == 2 * 3 + 2
        full = [c for c in range(5) if all((j, c) in pat.cells for j in range(3))]
        assert len(full) >= 2
        seen.add(pat.cells)
    assert len(seen) == 360


def test_pmds_counts(pmds_3_5_1):
    pats = list(enumerate_pmds_patterns(pmds_3_5_1))
    assert len(pats) == 2250 == pmds_pattern_count(pmds_3_5_1)
    t1 = [p for p in pats if max(p.row_counts(3)) == 3]
    t2 = [p for p in pats if max(p.row_counts(3)) == 2]
    assert len(t1) == 750 and len(t2) == 1500
    assert all(min(p.row_counts(3)) >= 1 and sum(p.row_counts(3)) == 5 for p in pats)
    assert len({p.cells for p in pats}) == 2250


@pytest.mark.parametrize("r,n,m", [(2, 4, 1), (3, 4, 2), (2, 5, 2), (4, 4, 1)])
def test_pmds_count_formula(r, n, m):
    params = CodeParams(r, n, m, "pmds", field_new(8))
    pats = list(enumerate_pmds_patterns(params))
    assert len(pats) == pmds_pattern_count(params) == len({p.cells for p in pats})


def test_verify_sd_theorem(sd_3_5_1, sd_3_5_2, sd_ring_3_5_1):
    for params, count in [(sd_3_5_1, 330), (sd_3_5_2, 360), (sd_ring_3_5_1, 330)]:
        rep = verify(params, "sd")
        assert rep.passed and rep.patterns_checked == count and rep.counterexample is None


def test_verify_pmds_theorem(pmds_3_5_1):
    rep = verify(pmds_3_5_1, "pmds")
    assert rep.passed and rep.patterns_checked == 2250


def test_plain_code_pmds_verdict_is_reported(sd_3_5_1):
    rep = verify(sd_3_5_1, "pmds")
    # per-instance truth; the report must be self-consistent either way
    assert rep.passed == (rep.counterexample is None)
    if not rep.passed:
        code = ArrayCode(sd_3_5_1)
        assert not code.is_decodable(rep.counterexample)
        # first failure in enumeration order
        first = next(p for p in enumerate_pmds_patterns(sd_3_5_1) if not code.is_decodable(p))
        assert first == rep.counterexample


def test_parallel_matches_serial(sd_3_5_1, pmds_3_5_1):
    for params, prop in [(sd_3_5_1, "pmds"), (pmds_3_5_1, "pmds")]:
        a = verify(params, prop)
        b = verify(params, prop, jobs=2, chunk_size=97)
        assert (a.passed, a.patterns_checked, a.counterexample) == (b.passed, b.patterns_checked, b.counterexample)


def test_order_bound_violation_yields_counterexample(monkeypatch):
    # alpha of order 5 cannot separate 15 coordinates; skip validation and sweep anyway
    from pmdscodes import construction

    monkeypatch.setattr(construction, "validate", lambda params: None)
    params = CodeParams(3, 5, 1, "sd", field_new(4, 0x1F))
    rep = verify(params, "sd")
    assert not rep.passed
    assert rep.patterns_checked < 330
    H = construction.build_H(params).matrix
    from pmdscodes.verify import pattern_tolerated

    assert not pattern_tolerated(H, 5, rep.counterexample)


def test_lemma_counts():
    assert lemma_tuple_count(1, 4, 2) == 36
    assert lemma_tuple_count(2, 5, 3) == 200
    rep = check_lemma(1, 4, 2, field_new(4))
    assert rep.passed and rep.patterns_checked == 36
    rep = check_lemma(2, 5, 3, field_new(4))
    assert rep.passed and rep.patterns_checked == 200
    rep = check_lemma(1, 5, 3, ring_new(17))
    assert rep.passed and rep.patterns_checked == lemma_tuple_count(1, 5, 3)


@pytest.mark.parametrize("fixture,prop", [("sd_3_5_1", "sd"), ("sd_3_5_2", "sd"), ("sd_ring_3_5_1", "sd"),
                                          ("pmds_3_5_1", "pmds"), ("sd_3_5_1", "pmds")])
def test_decoder_agrees_with_rank_verdict(fixture, prop, request):
    params = request.getfixturevalue(fixture)
    code = ArrayCode(params)
    rng = random.Random(0)
    enum = enumerate_sd_patterns if prop == "sd" else enumerate_pmds_patterns
    for pat in enum(params):
        arr = code.encode([rng.randrange(params.algebra.size) for _ in code.data_coords])
        out = code.decode(arr.erase(pat), pat)
        if code.is_decodable(pat):
            assert out == arr
        else:
            assert not out


@pytest.mark.parametrize("fixture,prop", [("sd_3_5_1", "sd"), ("sd_3_5_2", "sd"), ("pmds_3_5_1", "pmds")])
def test_monotone_sub_patterns(fixture, prop, request):
    params = request.getfixturevalue(fixture)
    code = ArrayCode(params)
    rng = random.Random(1)
    pats = list((enumerate_sd_patterns if prop == "sd" else enumerate_pmds_patterns)(params))
    for _ in range(100):
        pat = rng.choice(pats)
        cells = sorted(pat.cells)
        sub = ErasurePattern(rng.sample(cells, rng.randrange(len(cells) + 1)))
        assert code.is_decodable(sub)


def sampled_sd_params():
    out = []
    for r in range(2, 5):
        for n in range(4, 7):
            for m in range(1, n - 1):
                w = next(w for w in range(2, 9) if (1 << w) - 1 >= r * n)
                out.append(CodeParams(r, n, m, "sd", field_new(w)))
                for p in (17, 23):
                    if r * n <= p - 1:
                        out.append(CodeParams(r, n, m, "sd", ring_new(p)))
    return out


@pytest.mark.parametrize("params", sampled_sd_params(), ids=lambda p: p.describe())
def test_sd_sweep_desk_scale(params):
    rep = verify(params, "sd")
    assert rep.passed, rep.counterexample
    assert rep.patterns_checked == sd_pattern_count(params)


def test_pmds_sweep_small_instances():
    for r, n, m in [(2, 4, 1), (2, 5, 2), (3, 4, 1), (2, 5, 1)]:
        params = CodeParams(r, n, m, "pmds", field_new(5))
        rep = verify(params, "pmds")
        assert rep.passed, (params.describe(), rep.counterexample)


def test_figure1(gf32):
    sd = CodeParams(4, 5, 1, "sd", gf32)
    pmds = CodeParams(4, 5, 1, "pmds", gf32)
    rep = figure1_scenarios(sd, pmds)
    assert rep.passed
    assert len(rep.details) == 10
    assert all("decoded" in line for line in rep.details if line.startswith("PMDS"))
    for line in rep.details[:3]:
        assert line.endswith("decoded")


def test_figure1_scenarios_have_described_shape():
    counts = [sorted(ErasurePattern(c).row_counts(4)) for _, c, _ in FIGURE1_SCENARIOS]
    assert counts[0] == [1, 1, 1, 1]
    assert counts[1] == [1, 1, 2, 2]
    assert counts[2] == [1, 1, 1, 3]
    assert counts[3] == [1, 1, 1, 3]
    assert counts[4] == [1, 1, 2, 2]


def test_figure1_rejects_other_shapes(sd_3_5_1, pmds_3_5_1):
    with pytest.raises(ValueError):
        figure1_scenarios(sd_3_5_1, pmds_3_5_1)
