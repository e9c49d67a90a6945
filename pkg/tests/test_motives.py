import json

import pytest
from hypothesis import given, strategies as st

from kimura.motives import (
    FormalMotive,
    MotiveAtom,
    curve,
    custom,
    euler_char,
    kim,
    opaque,
    points,
    sdim_of_motive,
    sod_to_direct_sum,
    tate,
    tate_twist,
    unit,
)
from kimura.schur import SuperDim

atoms = st.one_of(
    st.builds(unit, st.integers(-3, 3)),
    st.builds(curve, st.integers(0, 5), st.integers(-3, 3)),
    st.builds(points, st.integers(1, 6), st.integers(-3, 3)),
    st.builds(lambda p, q, t: custom(SuperDim(p, q), t), st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)),
)
motives = st.lists(st.tuples(atoms, st.integers(1, 3)), max_size=5).map(lambda xs: FormalMotive(tuple(xs)))


def test_sdim_examples():
    assert sdim_of_motive(FormalMotive()) == SuperDim(0, 0)
    assert sdim_of_motive(FormalMotive.of(curve(0))) == SuperDim(2, 0)
    for g in range(6):
        s = sdim_of_motive(FormalMotive.of(curve(g)))
        assert s == SuperDim(2, 2 * g)
        assert s.even - s.odd == 2 - 2 * g


def test_p1_is_unit_plus_tate():
    p1 = FormalMotive.of(unit(), tate())
    assert sdim_of_motive(p1) == sdim_of_motive(FormalMotive.of(curve(0)))
    assert kim(p1).kim == 2


def test_kim_examples():
    assert kim(FormalMotive.of(unit())).kim == 1
    assert kim(FormalMotive.of(curve(1))).kim == 4
    for m in range(1, 10):
        assert kim(FormalMotive.of(points(m))).kim == m


def test_euler_examples():
    assert euler_char(FormalMotive.of(unit())) == 1
    assert euler_char(FormalMotive.of(curve(3))) == -4


def test_twist_examples():
    M = FormalMotive.of(curve(2), points(3))
    assert tate_twist(M, 0) == M
    assert tate_twist(tate_twist(M, 2), -5) == tate_twist(M, -3)
    assert kim(tate_twist(M, 5)) == kim(M)
    assert tate_twist(M, 1) != M


def test_normal_form():
    M = FormalMotive(((curve(1), 1), (points(2), 2), (curve(1), 2)))
    assert M.multiplicity(curve(1)) == 3
    assert len(M) == 5
    assert FormalMotive(((curve(1), 0),)) == FormalMotive()


def test_atom_validation():
    with pytest.raises(ValueError):
        MotiveAtom("curve", (-1,))
    with pytest.raises(ValueError):
        points(0)
    with pytest.raises(ValueError):
        MotiveAtom("surface", ())
    with pytest.raises(ValueError):
        opaque("perf(C;Cl0)").sdim


def test_json_roundtrip():
    M = FormalMotive.of(curve(2, -1), points(4), custom(SuperDim(1, 3)), opaque("x"), (unit(-2), 3))
    data = json.loads(M.dumps())
    assert data[0].keys() == {"kind", "params", "twist", "mult"}
    assert FormalMotive.from_json(M.dumps()) == M


def test_sod_examples():
    A = FormalMotive.of(curve(1))
    B = FormalMotive.of(points(2), unit())
    assert sod_to_direct_sum([A]) == A
    ab, ba = sod_to_direct_sum([A, B]), sod_to_direct_sum([B, A])
    assert ab == ba
    assert ab.provenance != ba.provenance
    C = FormalMotive.of(curve(0))
    quad = sod_to_direct_sum([FormalMotive.of(opaque("perf(C;Cl0)")), C, C])
    assert quad == FormalMotive(((opaque("perf(C;Cl0)"), 1), (curve(0), 2)))


@given(motives, motives)
def test_kim_and_euler_additive(M1, M2):
    assert kim(M1 + M2).kim == kim(M1).kim + kim(M2).kim
    assert euler_char(M1 + M2) == euler_char(M1) + euler_char(M2)


@given(motives, st.integers(-10, 10))
def test_twist_invariance(M, t):
    assert euler_char(tate_twist(M, t)) == euler_char(M)
    assert kim(tate_twist(M, t)) == kim(M)


@given(motives)
def test_kim_is_even_euler_minus_odd_euler(M):
    s = sdim_of_motive(M)
    k = kim(M)
    # chi(M+) = p, chi(M-) = -q
    assert k.kim == s.even - (-s.odd)
    assert k.kim_plus == s.even and k.kim_minus == s.odd


@given(st.lists(motives, min_size=1, max_size=4), st.randoms())
def test_sod_permutation_invariant(parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert sod_to_direct_sum(parts) == sod_to_direct_sum(shuffled)
