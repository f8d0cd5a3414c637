import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from placement_complex.algebra import Monomial, MonomialIdeal, Universe, minimal_generators, monomial, x, y
from placement_complex.complex import (
    SimplicialComplex,
    are_isomorphic,
    complex_from_dict,
    f_vector,
    facet_complex,
    facet_ideal,
    is_face,
    join,
    minimal_non_faces,
    sr_complex,
    sr_ideal,
)
from placement_complex.errors import DomainError, SizeLimitError

M = monomial


def mset(*texts):
    return {M(t).vars for t in texts}


def cx(vertices, *facets):
    return SimplicialComplex(vertices, [M(f).vars for f in facets])


X6 = [x(i) for i in range(1, 7)]
P3_VARS = [x(1), x(2), x(3), y(1), y(2), y(3)]
COL_P3 = cx(P3_VARS, "x1*y2*x3", "y1*x2*y3", "x1*y3", "y1*x3")
SNORT_C3 = cx(P3_VARS, "x1*x2*x3", "y1*y2*y3")
SAMPLE6 = cx(X6, "x1*x2", "x1*x6", "x2*x3*x4", "x3*x5", "x4*x5*x6")


def test_is_face():
    assert is_face(COL_P3, {x(1), y(2)})
    assert not is_face(COL_P3, {x(1), x(2)})
    assert is_face(COL_P3, set())
    with pytest.raises(DomainError):
        is_face(COL_P3, {x(4)})


def test_void_and_empty_are_distinct():
    void, empty = SimplicialComplex.void([x(1)]), SimplicialComplex.empty([x(1)])
    assert void != empty
    assert void.is_void and empty.is_empty
    assert f_vector(void) == () and f_vector(empty) == (1,)
    assert not is_face(void, set()) and is_face(empty, set())


def test_f_vectors_against_bruteforce():
    col_faces = oracles.faces_from_facets([frozenset(f) for f in COL_P3.facets])
    assert oracles.f_vector(col_faces) == (1, 6, 8, 2)
    assert f_vector(COL_P3) == (1, 6, 8, 2)
    snort_faces = oracles.faces_from_facets([frozenset(f) for f in SNORT_C3.facets])
    assert oracles.f_vector(snort_faces) == (1, 6, 6, 2)
    assert f_vector(SNORT_C3) == (1, 6, 6, 2)
    assert f_vector(SimplicialComplex.simplex([x(1), x(2), x(3)])) == (1, 3, 3, 1)


def test_minimal_non_faces():
    assert minimal_non_faces(COL_P3) == mset(
        "x1*x2", "x2*x3", "y1*y2", "y2*y3", "x1*y1", "x2*y2", "x3*y3"
    )
    assert minimal_non_faces(SimplicialComplex.simplex(X6)) == set()
    assert minimal_non_faces(SimplicialComplex.void([x(1)])) == {frozenset()}


def test_sample_complex_ideals():
    assert facet_ideal(SAMPLE6).generators == {M(t) for t in ["x1*x2", "x1*x6", "x2*x3*x4", "x3*x5", "x4*x5*x6"]}
    assert sr_ideal(SAMPLE6).generators == {
        M(t) for t in ["x1*x3", "x1*x4", "x1*x5", "x2*x5", "x2*x6", "x3*x4*x5", "x3*x6"]
    }


def test_single_facet_ideals():
    single = cx([x(1)], "x1")
    assert facet_ideal(single).generators == {M("x1")}
    assert sr_ideal(single).is_zero


I_EX = minimal_generators([M("x1*x3"), M("x2*x3*x4")], Universe(X6[:4]))


def test_facet_and_sr_complex_of_ideal():
    assert facet_complex(I_EX).facets == mset("x1*x3", "x2*x3*x4")
    assert sr_complex(I_EX).facets == mset("x1*x2*x4", "x2*x3", "x3*x4")
    assert minimal_non_faces(sr_complex(I_EX)) == mset("x1*x3", "x2*x3*x4")


def test_degenerate_ideals():
    uni = Universe([x(1), x(2)])
    zero = MonomialIdeal(frozenset(), uni)
    assert sr_complex(zero) == SimplicialComplex.simplex([x(1), x(2)])
    assert facet_complex(zero).is_void
    unit = MonomialIdeal(frozenset({Monomial()}), uni)
    assert sr_complex(unit).is_void
    assert facet_complex(unit).is_empty


def test_join_examples():
    j = join(cx([x(1)], "x1"), cx([x(1)], "x1"))
    assert j.facets == mset("x1*x2")
    assert join(COL_P3, SimplicialComplex.void()).is_void
    snort_p1 = cx([x(1), y(1)], "x1", "y1")
    j2 = join(snort_p1, snort_p1)
    assert len(j2.facets) == 4 and all(len(f) == 2 for f in j2.facets)
    assert j2.facets == mset("x1*x2", "x1*y2", "y1*x2", "y1*y2")


def test_isomorphism_examples():
    snort_p3 = cx(P3_VARS, "x1*x2*x3", "y1*y2*y3", "x1*y3", "y1*x3")
    res = are_isomorphic(COL_P3, snort_p3)
    assert res
    image = {frozenset(res.witness[v] for v in f) for f in COL_P3.facets}
    assert image == snort_p3.facets
    col_c3 = cx(P3_VARS, "x1*y2", "x1*y3", "x2*y3", "y1*x2", "y1*x3", "y2*x3")
    assert not are_isomorphic(col_c3, SNORT_C3)
    same = are_isomorphic(COL_P3, COL_P3)
    assert same.witness == {v: v for v in COL_P3.vertices}


def test_isomorphism_limit():
    big = SimplicialComplex.simplex([x(i) for i in range(1, 18)])
    with pytest.raises(SizeLimitError):
        are_isomorphic(big, big)


def test_json_and_dot_exports():
    d = COL_P3.to_dict()
    assert d["f_vector"] == [1, 6, 8, 2]
    assert d["facets"][0] == ["x1", "y2", "x3"]
    back = complex_from_dict(json.loads(COL_P3.to_json()))
    assert back == COL_P3
    dot = COL_P3.to_dot()
    assert dot.startswith("graph complex {")
    assert '"x1" -- "y2";' in dot and '"x1" -- "x2"' not in dot
    assert dot.count("--") == 8


def test_complex_from_dict_checks_fvector():
    d = COL_P3.to_dict()
    d["f_vector"] = [1, 6, 8, 3]
    with pytest.raises(DomainError):
        complex_from_dict(d)


# --- properties ---------------------------------------------------------

VERTS = [x(i) for i in range(1, 5)] + [y(i) for i in range(1, 5)]


@st.composite
def complexes(draw, max_vertices=8):
    k = draw(st.integers(0, max_vertices))
    verts = VERTS[:k]
    if verts:
        facets = draw(st.lists(st.frozensets(st.sampled_from(verts)), max_size=6))
    else:
        facets = draw(st.lists(st.just(frozenset()), max_size=1))
    return SimplicialComplex(verts, facets)


@settings(max_examples=120)
@given(complexes())
def test_operator_roundtrips(delta):
    assert facet_complex(facet_ideal(delta)) == delta
    assert sr_complex(sr_ideal(delta)) == delta
    assert facet_ideal(facet_complex(facet_ideal(delta))) == facet_ideal(delta)
    assert sr_ideal(sr_complex(sr_ideal(delta))) == sr_ideal(delta)


@settings(max_examples=120)
@given(complexes())
def test_fvector_counts_faces(delta):
    faces = oracles.faces_from_facets(delta.facets)
    assert f_vector(delta) == oracles.f_vector(faces)
    assert sum(f_vector(delta)) == len(delta.faces()) == len(faces)
    n_ideal = sr_ideal(delta)
    outside = [s for s in oracles.subsets(delta.vertices) if not n_ideal.contains(Monomial(s))]
    assert len(outside) == sum(f_vector(delta))


@settings(max_examples=120)
@given(complexes())
def test_minimal_non_faces_against_bruteforce(delta):
    faces = oracles.faces_from_facets(delta.facets)
    expected = oracles.minimal_non_members(faces, delta.vertices)
    got = minimal_non_faces(delta)
    assert got == expected
    for s in got:
        assert not is_face(delta, s)
        assert all(is_face(delta, s - {v}) for v in s)


@settings(max_examples=60)
@given(complexes(4), complexes(4))
def test_join_fvector_is_convolution(a, b):
    fa, fb, fj = f_vector(a), f_vector(b), f_vector(join(a, b))
    if not fa or not fb:
        assert fj == ()
        return
    conv = [0] * (len(fa) + len(fb) - 1)
    for i, p in enumerate(fa):
        for j, q in enumerate(fb):
            conv[i + j] += p * q
    assert fj == tuple(conv)


@settings(max_examples=60)
@given(complexes(), st.randoms())
def test_isomorphism_finds_relabelings(delta, rnd):
    perm = list(delta.vertices)
    rnd.shuffle(perm)
    relabel = dict(zip(delta.vertices, perm))
    other = SimplicialComplex(perm, [{relabel[v] for v in f} for f in delta.facets])
    res = are_isomorphic(delta, other)
    assert res
    assert {frozenset(res.witness[v] for v in f) for f in delta.facets} == other.facets
    assert are_isomorphic(other, delta)
    assert are_isomorphic(delta, delta)
