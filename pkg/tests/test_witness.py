"""Witness search, verification, decisions, refutations, unit quotients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from goodrings.core import (
    NotPrimitiveError,
    PreconditionError,
    UnsupportedRingError,
)
from goodrings.rings import (
    Integers,
    IntegersMod,
    LocalizedRationalPoly,
    PrimeField,
    ProductRing,
    RationalPoly,
    parse_ring,
)
from goodrings.witness import (
    CycleWithoutUnit,
    Exhausted,
    GoodPointWitness,
    RatioCriterion,
    Refuted,
    Witness,
    check_good_ring_exhaustive,
    decide_good_point_rational_split,
    find_good_witness,
    refute_integer_poly_point,
    unit_quotient_group,
    verify_witness,
)

Z = Integers()
QT = RationalPoly()


def test_verify_witness_requires_positive_integer_exponent():
    w = GoodPointWitness(0, -1, -1, -1)
    assert not verify_witness(Z, 5, 2, w)
    w = GoodPointWitness(2, -1, -1, -1)
    assert verify_witness(Z, 5, 2, w)


def test_verify_witness_rejects_wrong_inverse():
    w = GoodPointWitness(2, -1, -1, 1)
    assert not verify_witness(Z, 5, 2, w)


def test_find_good_witness_examples():
    out = find_good_witness(Z, 5, 2)
    assert isinstance(out, Witness)
    assert (out.witness.N, out.witness.lam, out.witness.epsilon) == (2, -1, -1)
    out = find_good_witness(Z, 7, 3)
    assert (out.witness.N, out.witness.lam, out.witness.epsilon) == (3, -4, -1)
    out = find_good_witness(Z, 4, 3)
    assert (out.witness.N, out.witness.lam, out.witness.epsilon) == (1, -1, -1)


def test_find_good_witness_zero_first_entry():
    out = find_good_witness(Z, 0, -1)
    assert isinstance(out, Witness)
    assert out.witness.N == 1
    assert out.witness.lam == 0
    assert out.witness.epsilon == -1


def test_find_good_witness_rejects_non_primitive():
    with pytest.raises(NotPrimitiveError):
        find_good_witness(Z, 6, 4)


def test_witness_epsilon_prefers_plus_one():
    # modulo 2 the classes of 1 and -1 coincide; the tie goes to +1
    out = find_good_witness(Z, 2, 3)
    assert isinstance(out, Witness)
    assert out.witness.N == 1
    assert out.witness.epsilon == 1
    assert out.witness.lam == -1


@settings(max_examples=150, deadline=None, derandomize=True)
@given(st.integers(-60, 60), st.integers(-60, 60))
def test_integers_witnesses_always_verify(a, b):
    from math import gcd

    if gcd(a, b) != 1:
        return
    out = find_good_witness(Z, a, b)
    assert isinstance(out, Witness)
    assert verify_witness(Z, a, b, out.witness)


def test_exhausted_when_bound_too_small():
    out = find_good_witness(Z, 7, 3, bound=2)
    assert out == Exhausted(bound=2)


def test_qt_search_exhausts_instead_of_refuting():
    a = QT.parse_element("T^2-T")
    b = QT.parse_element("T-2")
    out = find_good_witness(QT, a, b, bound=40)
    assert isinstance(out, Exhausted)


class _CycleStub(Integers):
    """Integers with units deliberately hidden from the residue search.

    Drives the refutation branch: residues of b^N mod a cycle and the
    per-class unit search reports nothing. Mathematically this models an
    honest search on a ring without those units, which is what the cycle
    evidence is about; it exists only to pin the outcome logic.
    """

    def unit_residue_witness(self, a, r):
        return None


class _IncompleteCycleStub(_CycleStub):
    unit_residue_complete = False


def test_cycle_without_unit_refutation_shape():
    out = find_good_witness(_CycleStub(), 5, 2, bound=100)
    assert isinstance(out, Refuted)
    assert isinstance(out.evidence, CycleWithoutUnit)
    # powers of 2 mod 5: 2, 4, 3, 1, 2, ... so the cycle closes after 4 new
    assert out.evidence.period == 4
    assert out.evidence.residues_visited == 4


def test_incomplete_ring_downgrades_cycle_to_exhausted():
    out = find_good_witness(_IncompleteCycleStub(), 5, 2, bound=100)
    assert isinstance(out, Exhausted)
    assert out.bound < 100


# ---------------------------------------------------------------------------
# rational-split decision


def test_decide_qt_refutes_ratio():
    a = QT.parse_element("T^2-T")
    out = decide_good_point_rational_split(QT, a, QT.parse_element("T-2"))
    assert isinstance(out, Refuted)
    assert isinstance(out.evidence, RatioCriterion)
    assert out.evidence.ratio == Fraction(1, 2)
    assert out.evidence.roots == (Fraction(0), Fraction(1))


def test_decide_qt_witness_n2():
    a = QT.parse_element("T^2-T")
    out = decide_good_point_rational_split(QT, a, QT.parse_element("T-1/2"))
    assert isinstance(out, Witness)
    w = out.witness
    assert w.N == 2
    assert w.lam == (Fraction(-1),)
    assert w.epsilon == (Fraction(1, 4),)
    assert verify_witness(QT, a, QT.parse_element("T-1/2"), w)


def test_decide_qt_witness_n1():
    out = decide_good_point_rational_split(
        QT, QT.parse_element("T"), QT.parse_element("T-1")
    )
    assert isinstance(out, Witness)
    assert out.witness.N == 1
    assert out.witness.lam == (Fraction(-1),)


def test_decide_qt_unit_coefficient():
    out = decide_good_point_rational_split(
        QT, QT.parse_element("3"), QT.parse_element("T")
    )
    assert isinstance(out, Witness)
    assert verify_witness(QT, QT.parse_element("3"), QT.parse_element("T"), out.witness)


def test_decide_qt_requires_split_squarefree():
    with pytest.raises(PreconditionError):
        decide_good_point_rational_split(
            QT, QT.parse_element("T^2+1"), QT.parse_element("T")
        )
    with pytest.raises(PreconditionError):
        decide_good_point_rational_split(
            QT, QT.parse_element("T^2"), QT.parse_element("T-1")
        )


def test_decide_qt_wrong_ring():
    with pytest.raises(UnsupportedRingError):
        decide_good_point_rational_split(Z, 5, 2)


# ---------------------------------------------------------------------------
# integer-coefficient refutation


def test_refute_integer_poly_example():
    ev = refute_integer_poly_point(QT, QT.parse_element("1-2*T"), QT.parse_element("T"))
    assert ev is not None
    assert ev.root == Fraction(1, 2)
    assert ev.value == Fraction(1, 2)


def test_refute_integer_poly_inconclusive():
    ev = refute_integer_poly_point(
        QT, QT.parse_element("T-2"), QT.parse_element("T-1")
    )
    assert ev is None


def test_refute_integer_poly_requires_integer_coefficients():
    with pytest.raises(PreconditionError):
        refute_integer_poly_point(
            QT, QT.parse_element("T-1/2"), QT.parse_element("T")
        )


def test_refute_integer_poly_requires_joint_content_one():
    with pytest.raises(PreconditionError):
        refute_integer_poly_point(
            QT, QT.parse_element("2*T"), QT.parse_element("2*T-2")
        )


# ---------------------------------------------------------------------------
# unit quotients and exhaustive goodness


def test_unit_quotient_examples():
    assert unit_quotient_group(Z, 8).order == 2
    assert unit_quotient_group(Z, 7).order == 3
    assert unit_quotient_group(Z, 1).order == 1
    report = unit_quotient_group(Z, 0)
    assert report.order == 1
    assert report.carrier == 2


def test_unit_quotient_carrier_counts_unit_residues():
    report = unit_quotient_group(Z, 8)
    assert report.carrier == 4  # 1, 3, 5, 7


def test_unit_quotient_unknown_over_qt_nonunit():
    report = unit_quotient_group(QT, QT.parse_element("T"))
    assert report.status == "unknown"


def test_unit_quotient_limit():
    report = unit_quotient_group(Z, 10**6, limit=1000)
    assert report.status == "unknown"


def test_check_good_ring_counts_all_pairs():
    report = check_good_ring_exhaustive(IntegersMod(6))
    assert report.pairs_checked == 36
    assert report.all_good
    assert report.failures == ()


def test_check_good_ring_product():
    ring = ProductRing((IntegersMod(2), PrimeField(3)))
    report = check_good_ring_exhaustive(ring)
    assert report.all_good


def test_check_good_ring_rejects_infinite():
    from goodrings.core import InfiniteRingError

    with pytest.raises(InfiniteRingError):
        check_good_ring_exhaustive(Z)


def test_locq_witness_search():
    loc = LocalizedRationalPoly(2)
    a = loc.parse_element("T")
    b = loc.parse_element("T-1")
    out = find_good_witness(loc, a, b)
    assert isinstance(out, Witness)
    assert verify_witness(loc, a, b, out.witness)
