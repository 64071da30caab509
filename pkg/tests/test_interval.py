from fractions import Fraction as F

import pytest

import oracles
from neutromaps import (Closedness, EmptyPanel, ExpertPanel, IncomparableEntry, InputError, ModelMatrix,
                        NonZeroDiagonal, OrderMode, ShapeMismatch, StackComponentError, build_interval,
                        build_stack, classify_closedness, contains, interval_from_bounds, medial)
from neutromaps.documents import load_document
from neutromaps.interval import SUMMARY_KEYS
from neutromaps.scalar import parse_token as S


def m(rows):
    return ModelMatrix.from_rows([[S(str(v)) for v in r] for r in rows])


def panel(prefix, names, kind=None):
    docs = [load_document(f"{prefix}/{n}.matrix") for n in names]
    return ExpertPanel(tuple(d.matrix for d in docs), tuple(d.member_id for d in docs),
                       kind=kind or docs[0].kind)


@pytest.fixture(scope="module")
def symptom():
    return build_interval(panel("symptom_disease", ["M1", "M2", "M3"]))


@pytest.fixture(scope="module")
def teacher():
    return build_interval(panel("teacher_student", ["P1", "P2", "P3"]))


EX_A = m([["0", "0.2", "0.6"], ["0.1", "0.4", "0.21"]])
EX_B = m([["0.6", "0.6", "1"], ["1", "0.8", "0.9"]])


class TestBuild:
    def test_opt_entry(self, symptom):
        assert symptom.o_opt.entries[0][3] == S("0.15")

    def test_keys(self, symptom):
        assert list(symptom.keyed()) == ["M1", "M2", "M3", *SUMMARY_KEYS]
        assert SUMMARY_KEYS == ("min", "max", "opt", "avg")

    def test_singleton(self):
        p = load_document("teacher_student/P2.matrix").matrix
        iv = build_interval(ExpertPanel((p,)))
        assert iv.a_min == p and iv.b_max == p and iv.o_opt == p and iv.m_avg == p

    def test_average_entry(self, teacher):
        x = teacher.m_avg.entries[4][2]
        assert x == F(19, 30)
        assert abs(float(x.real) - 0.63) <= 0.005

    def test_corrected_max_entry(self, teacher):
        # printed 0.63 at (3,1) of the maximal matrix; max(0, 0.6, 0.3) = 0.6
        assert teacher.b_max.entries[2][0] == S("0.6")
        assert teacher.o_opt.entries[2][0] == S("0.3")

    def test_matches_oracle(self, teacher):
        raw = [[[x.real for x in r] for r in mm.entries] for mm in teacher.panel.members]
        lo, hi = oracles.panel_min(raw), oracles.panel_max(raw)
        assert [[x.real for x in r] for r in teacher.a_min.entries] == lo
        assert [[x.real for x in r] for r in teacher.b_max.entries] == hi
        assert [[x.real for x in r] for r in teacher.o_opt.entries] == oracles.midpoint(lo, hi)
        assert [[x.real for x in r] for r in teacher.m_avg.entries] == oracles.panel_mean(raw)

    def test_fcm_diagonal_checked(self):
        bad = m([["0.1", "0"], ["0", "0"]])
        with pytest.raises(NonZeroDiagonal):
            build_interval(ExpertPanel((bad,), kind="fcm"))
        build_interval(ExpertPanel((bad,), kind="frm"))

    def test_empty(self):
        with pytest.raises(EmptyPanel):
            ExpertPanel(())

    def test_ids(self):
        p = m([["0.1"]])
        with pytest.raises(InputError):
            ExpertPanel((p, p), ("A", "A"))
        with pytest.raises(InputError):
            ExpertPanel((p,), ("min",))
        assert ExpertPanel((p, p)).member_ids == ("M1", "M2")

    def test_neutrosophic_usual_incomparable(self):
        p1, p2 = m([["17+20I"]]), m([["42+15I"]])
        with pytest.raises(IncomparableEntry):
            build_interval(ExpertPanel((p1, p2)))
        iv = build_interval(ExpertPanel((p1, p2)), OrderMode.PSEUDO_NEUTRO)
        assert iv.a_min.entries[0][0] == S("42+15I")


class TestContains:
    def test_fuzzy_member(self):
        iv = interval_from_bounds(EX_A, EX_B)
        assert contains(iv, m([["0.2", "0.4", "0.7"], ["0.6", "0.5", "0.8"]]))
        assert not contains(iv, m([["0.8", "1", "0"], ["0.1", "0.2", "0.8"]]))
        assert contains(iv, EX_A) and iv.contains(EX_B)

    def test_neutrosophic_member(self):
        a = m([["2+5I", "7+10I"], ["2+6I", "5+11I"]])
        b = m([["18+28I", "40+32I"], ["16+12I", "32+14I"]])
        iv = interval_from_bounds(a, b)
        assert not contains(iv, m([["50+3I", "18+42I"], ["2+7I", "5+11I"]]))
        assert contains(iv, m([["3+7I", "20+30I"], ["2+7I", "20+12I"]]))

    def test_shape(self):
        iv = interval_from_bounds(EX_A, EX_B)
        with pytest.raises(ShapeMismatch):
            contains(iv, m([["0.1"]]))

    def test_bounds_order(self):
        with pytest.raises(InputError):
            interval_from_bounds(EX_B, EX_A)


class TestMedial:
    def test_is_opt(self, symptom):
        assert medial(symptom) is symptom.o_opt

    def test_singleton(self):
        iv = build_interval(ExpertPanel((EX_A,)))
        assert medial(iv) == EX_A

    def test_teacher_entry(self, teacher):
        assert medial(teacher).entries[0][0] == S("0.7")

    def test_pseudo_rejected(self):
        iv = build_interval(ExpertPanel((EX_A,)), OrderMode.PSEUDO_REAL)
        with pytest.raises(InputError):
            medial(iv)


class TestClosedness:
    A3 = m([["0", "0", "0.2", "0.3"], ["0.1", "0", "0.3", "0.4"], ["0", "0.1", "0.6", "0.2"]])
    B3 = m([["0.7", "0.6", "0.6", "0.5"], ["0.3", "0", "0.7", "0.6"], ["0", "0.7", "0.6", "0.4"]])
    A4 = m([["0.2", "0.3", "0.2", "0.2"], ["0.4", "0.2", "0.3", "0.2"], ["0.3", "0.4", "0.2", "0.3"],
            ["0.2", "0.3", "0.4", "0.2"]])
    B4 = m([["0.3", "0.7", "0.6", "0.6"], ["0.6", "0.3", "0.5", "0.5"], ["0.6", "0.5", "0.3", "0.6"],
            ["0.6", "0.5", "0.7", "0.3"]])

    def test_closed(self):
        assert classify_closedness(interval_from_bounds(self.A3, self.B3), 0, F(7, 10)) is Closedness.CLOSED

    def test_open(self):
        iv = interval_from_bounds(self.A4, self.B4)
        assert classify_closedness(iv, 0.1, 0.8) is Closedness.OPEN
        assert classify_closedness(iv, 0.2, 0.7) is Closedness.CLOSED

    def test_half_open(self):
        iv = interval_from_bounds(self.A4, self.B4)
        assert classify_closedness(iv, 0.2, 0.8) is Closedness.OPEN_HIGH
        assert classify_closedness(iv, 0.1, 0.7) is Closedness.OPEN_LOW


class TestStack:
    A1 = m([["3+4I", "0", "2+I", "2", "7+4I"], ["5", "3", "0", "3", "5+2I"]])
    B1 = m([["20+4I", "17", "20+I", "3+20I", "7+8I"], ["12+7I", "45+24I", "14", "5", "8+6I"]])

    def test_shapes(self):
        def fcm_panel(k):
            return panel("fcibm", [f"M{k}"])
        stack = build_stack([(fcm_panel(1), OrderMode.USUAL), (fcm_panel(2), OrderMode.USUAL)])
        assert stack.shapes == ((4, 4), (5, 5))

    def test_singleton_stack(self, symptom):
        stack = build_stack([(symptom.panel, OrderMode.USUAL)])
        assert stack.components[0] == symptom
        assert stack.a_min == (symptom.a_min,)

    def test_mixed_membership(self):
        stack = build_stack([(ExpertPanel((self.A1, self.B1)), OrderMode.USUAL),
                             (ExpertPanel((EX_A, EX_B)), OrderMode.USUAL)])
        inside = m([["3+4I", "4", "4+I", "3", "7+5I"], ["10", "10+5I", "10", "4", "8+6I"]])
        fuzzy_in = m([["0.2", "0.4", "0.7"], ["0.6", "0.5", "0.8"]])
        fuzzy_out = m([["0.8", "1", "0"], ["0.1", "0.2", "0.8"]])
        outside = m([["I", "90", "45I", "0", "3+I"], ["70+29I", "1", "5I", "100", "2+90I"]])
        assert stack.contains((inside, fuzzy_in))
        assert not stack.contains((inside, fuzzy_out))
        assert not stack.contains((outside, fuzzy_in))
        assert stack.contains(stack.o_opt)
        with pytest.raises(ShapeMismatch):
            stack.contains((inside,))

    def test_component_error_indexed(self):
        with pytest.raises(StackComponentError) as err:
            build_stack([(ExpertPanel((EX_A,)), OrderMode.USUAL),
                         (ExpertPanel((m([["1+2I"]]), m([["2+I"]]))), OrderMode.USUAL)])
        assert err.value.index == 1
