import random
from fractions import Fraction as F

import pytest

import oracles
from neutromaps import (BipartiteState, CompositionRule, DimensionMismatch, Domain, Dynamics, DynamicsKind,
                        ExpertPanel, ModelMatrix, PatternKind, Side, build_interval, frim_panel_run,
                        frm_hidden_pattern, vec_compose, vector)
from neutromaps.documents import load_document
from neutromaps.scalar import ONE
from neutromaps.scalar import parse_token as S

D5 = Dynamics(clamp_on={4})
SEED = BipartiteState(Side.DOMAIN, vector("0 0 0 0 1"))


def ts(name):
    return load_document(f"teacher_student/{name}.matrix").matrix


@pytest.fixture(scope="module")
def teacher():
    return build_interval(ExpertPanel(tuple(ts(n) for n in ("P1", "P2", "P3")), ("P1", "P2", "P3")))


def sweep_ok(e, bp, clamp):
    """One more sweep from the domain terminal reproduces both terminals."""
    y = vec_compose(bp.domain_terminal, e, CompositionRule.MAX_MIN)
    x = vec_compose(y, e.T, CompositionRule.MAX_MIN)
    x = tuple(ONE if i in clamp else v for i, v in enumerate(x))
    return y == bp.range_terminal and x == bp.domain_terminal


class TestFrm:
    def test_p1_pair(self):
        bp = frm_hidden_pattern(ts("P1"), SEED, D5)
        assert bp.kind is PatternKind.FIXED_POINT
        # the first range state is (0, 0.3, 0.5); the stable pair is derived
        assert bp.trajectory[1].values == vector("0 0.3 0.5")
        assert bp.range_terminal == vector("0 0.4 0.5")
        assert bp.domain_terminal == vector("0 0.4 0.3 0 1")
        assert sweep_ok(ts("P1"), bp, {4})

    def test_p1_matches_oracle(self):
        e = [[x.real for x in r] for r in ts("P1").entries]
        kind, hist, _ = oracles.frm_weighted([[(v, 0) for v in r] for r in e], [0, 0, 0, 0, 1], {4})
        bp = frm_hidden_pattern(ts("P1"), SEED, D5)
        assert kind == "fixed"
        got = [(tuple(a.values), tuple(b.values)) for a, b in zip(bp.trajectory[::2], bp.trajectory[1::2])]
        assert [(tuple(x.real for x in a), tuple(x.real for x in b)) for a, b in got] == hist

    def test_max_pair(self, teacher):
        bp = frm_hidden_pattern(teacher.b_max, SEED, D5)
        assert bp.range_terminal == vector("0.6 0.6 0.8")
        assert bp.domain_terminal == vector("0.6 0.5 0.6 0.6 1")

    def test_zero_map(self):
        zero = ModelMatrix.from_rows([[0] * 3] * 5)
        bp = frm_hidden_pattern(zero, SEED, D5)
        assert bp.kind is PatternKind.FIXED_POINT
        assert bp.range_terminal == vector("0 0 0")
        assert bp.domain_terminal == vector("0 0 0 0 1")

    def test_range_seed_duality(self):
        rng = random.Random(3)
        for _ in range(60):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            e = ModelMatrix.from_rows([[F(rng.randint(0, 10), 10) for _ in range(cols)]
                                       for _ in range(rows)])
            seed = tuple(F(rng.randint(0, 10), 10) for _ in range(cols))
            clamp = {0}
            a = frm_hidden_pattern(e, BipartiteState(Side.RANGE, seed), Dynamics(clamp_on=clamp))
            b = frm_hidden_pattern(e.T, BipartiteState(Side.DOMAIN, seed), Dynamics(clamp_on=clamp))
            assert a.kind is b.kind
            assert a.domain_terminal == b.range_terminal
            assert a.range_terminal == b.domain_terminal

    def test_clamp_held(self):
        bp = frm_hidden_pattern(ts("P2"), SEED, D5)
        for state in bp.trajectory[::2]:
            assert state.side is Side.DOMAIN and state.values[4] == 1

    def test_binary_relational(self):
        e = ModelMatrix.from_rows([[1, 0], [0, 1], [1, 1]])
        bp = frm_hidden_pattern(e, BipartiteState(Side.DOMAIN, vector("1 0 0")),
                                Dynamics(DynamicsKind.BINARY, clamp_on={0}))
        assert bp.range_terminal == vector("1 1")
        assert bp.domain_terminal == vector("1 1 1")

    def test_trinary_relational(self):
        e = ModelMatrix.from_rows([[S("I"), 0], [0, 1]], Domain.neutrosophic(1))
        bp = frm_hidden_pattern(e, BipartiteState(Side.DOMAIN, vector("1 0")),
                                Dynamics(DynamicsKind.TRINARY, clamp_on={0}))
        assert bp.range_terminal == vector("I 0")
        assert bp.domain_terminal == vector("1 0")

    def test_seed_length(self):
        with pytest.raises(DimensionMismatch):
            frm_hidden_pattern(ts("P1"), BipartiteState(Side.DOMAIN, vector("1 0 0")), D5)

    def test_sweeps_count(self):
        bp = frm_hidden_pattern(ts("P1"), SEED, D5)
        assert bp.sweeps == len(bp.trajectory) // 2 - 1


class TestFrim:
    def test_panel(self, teacher):
        runs = frim_panel_run(teacher, SEED, D5)
        assert list(runs) == ["P1", "P2", "P3", "min", "max", "opt", "avg"]
        assert runs["avg"].range_terminal == (F(11, 30), F(7, 15), F(19, 30))
        assert [round(float(x.real), 2) for x in runs["avg"].range_terminal] == [0.37, 0.47, 0.63]
        # the corrected maximal matrix makes the first coordinate 0.30 (printed 0.32)
        assert runs["opt"].range_terminal == vector("0.3 0.45 0.65")
        for key, e in teacher.keyed().items():
            assert sweep_ok(e, runs[key], {4}), key

    def test_bracketing(self, teacher):
        runs = frim_panel_run(teacher, SEED, D5)
        lo, hi = runs["min"].range_terminal, runs["max"].range_terminal
        for key in ("P1", "P2", "P3"):
            assert all(a.real <= x.real <= b.real for a, x, b in zip(lo, runs[key].range_terminal, hi))

    def test_singleton(self):
        iv = build_interval(ExpertPanel((ts("P2"),)))
        runs = frim_panel_run(iv, SEED, D5)
        first = runs["M1"]
        assert all(r == first for r in runs.values())
