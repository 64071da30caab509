from fractions import Fraction as F

import pytest

import oracles
from neutromaps import (CompositionRule, ConfigError, DimensionMismatch, Domain, DomainViolation,
                        EmptyPanel, IncomparableEntry, ModelMatrix, OrderMode, ShapeMismatch, TCoNorm,
                        TNorm, compose, identity, scale, tnorm_compose, transpose, vec_compose,
                        vector)
from neutromaps.matrix import add, average, elementwise_extrema
from neutromaps.scalar import parse_token as S

MAXMIN, MAXPROD, SUMPROD = (CompositionRule.MAX_MIN, CompositionRule.MAX_PRODUCT,
                            CompositionRule.SUM_PRODUCT)


def m(rows, domain=None):
    return ModelMatrix.from_rows(rows, domain)


class TestConstruction:
    def test_ragged_rows(self):
        with pytest.raises(ShapeMismatch):
            m([[1, 2], [3]])

    def test_domain_enforced(self):
        with pytest.raises(DomainViolation):
            m([[0.5, 1.2]], Domain.fuzzy_unit())
        with pytest.raises(DomainViolation):
            m([["I"]], Domain.bounded(5))

    def test_neutrosophic_bound(self):
        dom = Domain.neutrosophic(5)
        m([["5I", "-5"]], dom)
        with pytest.raises(DomainViolation):
            m([["6I"]], dom)

    def test_label_length(self):
        with pytest.raises(ShapeMismatch):
            ModelMatrix.from_rows([[1, 2]], None, row_labels=("a", "b"))

    @pytest.mark.parametrize("text", ["[0,1]", "[-1,1]", "[-5,5]", "<[-5,5]U[-5I,5I]>", "neutrosophic",
                                      "unbounded"])
    def test_domain_text_round_trip(self, text):
        assert str(Domain.parse(text)) == text

    def test_inferred_domain(self):
        assert m([[0, 0.5]]).domain == Domain.fuzzy_unit()
        assert m([[0, -0.5]]).domain == Domain.signed_fuzzy()
        assert m([["I"]]).domain.kind.value == "neutrosophic"


class TestCompose:
    def test_sum_product_entry(self, fixture_matrix):
        a, b = fixture_matrix("product/A.matrix"), fixture_matrix("product/B.matrix")
        assert compose(a, b, SUMPROD).entries[1][3] == S("12+2I")

    def test_maxmin_teacher_student(self, fixture_matrix):
        p1 = fixture_matrix("teacher_student/P1.matrix")
        assert vec_compose(vector("0 0 0 0 1"), p1, MAXMIN) == vector("0 0.3 0.5")

    def test_maxprod_passenger(self, fixture_matrix):
        p1, q1 = fixture_matrix("passenger/P1.matrix"), fixture_matrix("passenger/Q1.matrix")
        assert compose(p1, q1, MAXPROD).entries[0][0] == S("0.0096")

    def test_maxmin_identity(self):
        p = m([[0.2, 0.7, 0], [1, 0.4, 0.3]])
        assert compose(p, identity(3), MAXMIN).same_values(p)
        assert compose(identity(2), p, MAXMIN).same_values(p)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            compose(m([[1, 0]]), m([[1, 0]]))
        with pytest.raises(DimensionMismatch):
            vec_compose(vector("1 0 0"), m([[1], [0]]))

    def test_maxmin_rejects_negative(self):
        with pytest.raises(DomainViolation):
            compose(m([[-0.5, 0.2]], Domain.unbounded()), m([[1], [0]]), MAXMIN)

    def test_maxmin_rejects_i(self):
        with pytest.raises(DomainViolation):
            compose(m([["I", 0]]), m([[1], [0]]), MAXMIN)

    def test_maxmin_signed_operand(self):
        e = m([["-1", "0.5"]], Domain.signed_fuzzy())
        assert vec_compose(vector("1"), e, MAXMIN) == vector("-1 0.5")

    def test_unnormalized_only_sumprod(self):
        big = m([[2, 0], [0, 2]], Domain.unbounded())
        assert compose(big, big, SUMPROD).entries[0][0] == 4
        with pytest.raises(DomainViolation):
            compose(big, big, MAXMIN)

    def test_sumprod_real_matches_oracle(self):
        a = [[1, -2, 3], [0, 4, F(1, 2)]]
        b = [[2, 1], [-1, 0], [5, 7]]
        got = compose(m(a, Domain.unbounded()), m(b, Domain.unbounded()), SUMPROD)
        want = oracles.matmul(oracles.mat(a), oracles.mat(b))
        assert [[(x.real, x.indet) for x in row] for row in got.entries] == want

    def test_labels_carried(self, fixture_matrix):
        p1 = fixture_matrix("teacher_student/P1.matrix")
        out = compose(p1, transpose(p1), MAXMIN)
        assert out.row_labels == p1.row_labels and out.col_labels == p1.row_labels

    def test_rule_parse(self):
        assert CompositionRule.parse("max-product") is MAXPROD
        with pytest.raises(ConfigError):
            CompositionRule.parse("maxavg")


class TestTranspose:
    def test_mirror(self):
        t = transpose(m([[1, 2, 3], [4, 5, 6]]))
        assert t.shape == (3, 2)
        assert [[x.real for x in r] for r in t.entries] == [[1, 4], [2, 5], [3, 6]]

    def test_involution(self, fixture_matrix):
        p = fixture_matrix("teacher_student/P2.matrix")
        assert transpose(transpose(p)) == p

    def test_labels_swap(self, fixture_matrix):
        m1 = fixture_matrix("migration/M1.matrix")
        t = transpose(m1)
        assert t.col_labels == ("A1", "A2", "A3", "A4", "A5", "A6")
        assert t.row_labels == ("C1", "C2", "C3", "C4")
        assert t.T == m1


class TestPanels:
    def test_symptom_disease_extrema(self, fixture_matrix):
        panel = [fixture_matrix(f"symptom_disease/M{k}.matrix") for k in (1, 2, 3)]
        a, b = elementwise_extrema(panel)
        assert a.entries[0][2] == S("0.4")
        assert b.entries[0][4] == S("0.9")

    def test_singleton(self, fixture_matrix):
        p = fixture_matrix("teacher_student/P1.matrix")
        a, b = elementwise_extrema([p])
        assert a == p and b == p
        assert average([p]) == p

    def test_ibam_min(self, fixture_matrix):
        panel = [fixture_matrix(f"migration/M{k}.matrix") for k in (1, 2, 3, 4)]
        a, _ = elementwise_extrema(panel)
        assert a.entries[2][0] == -1
        assert [[x.real for x in r] for r in a.entries] == [
            [3, 2, 2, 1], [3, 3, 2, 0], [-1, -3, 2, -1], [-1, 2, 1, 0], [0, 1, 2, 0], [-1, 0, 2, -1]]

    def test_averages(self, fixture_matrix):
        panel = [fixture_matrix(f"symptom_disease/M{k}.matrix") for k in (1, 2, 3)]
        assert average(panel).entries[0][4] == S("0.7")
        mig = [fixture_matrix(f"migration/M{k}.matrix") for k in (1, 2, 3, 4)]
        avg = average(mig)
        assert avg.entries[0][3] == F(5, 2)
        # printed -2.5 and 3.5 are slips; the panel mean is -2.25 and 3.25
        assert avg.entries[2][1] == F(-9, 4) and avg.entries[2][2] == F(13, 4)

    def test_average_identical(self):
        p = m([["0.1", "0.3"]])
        assert average([p, p, p]) == p
        # float entries stay in float mode and compare within tolerance
        pf = m([[0.1, 0.3]])
        assert all(abs(x.real - y.real) < 1e-12 for x, y in zip(average([pf] * 3).flat(), pf.flat()))

    def test_empty_and_mismatch(self):
        with pytest.raises(EmptyPanel):
            elementwise_extrema([])
        with pytest.raises(EmptyPanel):
            average([])
        with pytest.raises(ShapeMismatch):
            average([m([[0.1]]), m([[0.1, 0.2]])])

    def test_incomparable_position(self):
        p1 = m([["17+20I", "1"]])
        p2 = m([["42+15I", "2"]])
        with pytest.raises(IncomparableEntry) as err:
            elementwise_extrema([p1, p2])
        assert err.value.position == (0, 0)
        assert "pseudo" in str(err.value)
        a, b = elementwise_extrema([p1, p2], OrderMode.PSEUDO_REAL)
        assert a.entries[0][0] == S("17+20I") and b.entries[0][0] == S("42+15I")

    def test_add_and_scale(self):
        p = m([["1+I", 2]])
        assert add(p, p).entries[0] == vector("2+2I 4")
        assert scale(p, 3).entries[0] == vector("3+3I 6")


class TestNorms:
    def test_standard_pair_is_maxmin(self, fixture_matrix):
        p = fixture_matrix("teacher_student/P3.matrix")
        q = transpose(p)
        assert tnorm_compose(p, q).same_values(compose(p, q, MAXMIN))

    def test_indeterminate_propagates(self):
        p = m([["I", "0.4"]], Domain.neutrosophic(1))
        q = m([["0.7"], ["0.2"]])
        out = tnorm_compose(p, q)
        # norm(I, 0.7) = I, and I dominates the max with 0.2
        assert out.entries[0][0] == S("I")

    def test_bounded_difference_sum(self):
        six = m([["0.6", "0.6"], ["0.6", "0.6"]])
        out = tnorm_compose(six, six, TNorm.BOUNDED_DIFFERENCE, TCoNorm.BOUNDED_SUM)
        assert all(x == S("0.4") for x in out.flat())

    def test_algebraic(self):
        a, b = S("0.5"), S("0.4")
        assert TNorm.ALGEBRAIC_PRODUCT(a, b) == S("0.2")
        assert TCoNorm.ALGEBRAIC_SUM(a, b) == S("0.7")

    def test_drastic(self):
        assert TNorm.DRASTIC(S("1"), S("0.3")) == S("0.3")
        assert TNorm.DRASTIC(S("0.9"), S("0.3")) == 0
        assert TNorm.DRASTIC(S("I"), S("I")) == S("I")
        assert TCoNorm.DRASTIC(S("0"), S("0.3")) == S("0.3")
        assert TCoNorm.DRASTIC(S("0.2"), S("0.3")) == 1

    def test_dimension(self):
        with pytest.raises(DimensionMismatch):
            tnorm_compose(m([[0.1, 0.2]]), m([[0.1, 0.2]]))


GRID = [F(k, 10) for k in range(11)]


@pytest.mark.parametrize("norm", list(TNorm))
def test_tnorm_skeleton(norm):
    """Boundary, commutativity and monotonicity on a 0.1 grid."""
    from neutromaps import NeutroScalar as N
    for a in GRID:
        assert norm(N(a), N(1)) == a
        for b in GRID:
            assert norm(N(a), N(b)) == norm(N(b), N(a))
            for b2 in GRID:
                if b <= b2:
                    assert norm(N(a), N(b)).real <= norm(N(a), N(b2)).real


@pytest.mark.parametrize("conorm", list(TCoNorm))
def test_conorm_skeleton(conorm):
    from neutromaps import NeutroScalar as N
    for a in GRID:
        assert conorm(N(a), N(0)) == a
        for b in GRID:
            assert conorm(N(a), N(b)) == conorm(N(b), N(a))
            for b2 in GRID:
                if b <= b2:
                    assert conorm(N(a), N(b)).real <= conorm(N(a), N(b2)).real
