from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from pfhilbert.checks import REF_PATH, REF_FACE, REF_FACE_IMAGE
from pfhilbert.exact_arith import IntPolynomial, ParameterError, binomial
from pfhilbert.hilbert import numerator
from pfhilbert.params import RingParams, grid
from pfhilbert.paths import (
    FeasibilityError,
    LatticePath,
    catalan,
    endpoints,
    enumerate_families,
    enumerate_nonintersecting,
    f_vector,
    face_is_valid,
    fiber_counts,
    fiber_size_check,
    iter_faces,
    lgv_hankel,
    light_shadow,
    longest_chain,
    ne_turns,
    region_points,
    shifted_endpoints,
    turn_gf,
)

Z = IntPolynomial.z()


def test_ne_turns():
    assert ne_turns(REF_PATH) == 3
    assert REF_PATH.turn_points() == [(1, 1), (2, 3), (5, 4)]
    assert ne_turns(LatticePath((0, 0), "RRRR")) == 0
    assert ne_turns(LatticePath((0, 0), "RURU")) == 1
    with pytest.raises(ParameterError):
        LatticePath((0, 0), "RX")


def test_extend_moves_start_and_end():
    p = LatticePath((2, 0), "URU").extend(2, 3)
    assert p.start == (0, 0) and p.end == (3, 5)
    assert p.steps == "RRURUUUU"


def test_endpoints():
    A, E = zip(*endpoints(RingParams(12, 3)))
    assert A == ((3, 3), (4, 2), (5, 1))
    assert E == ((9, 9), (10, 8), (11, 7))
    assert endpoints(RingParams(4, 1)) == [((1, 1), (3, 3))]
    for r in range(1, 5):
        assert all(a == e for a, e in endpoints(RingParams(2 * r, r)))
    with pytest.raises(ParameterError):
        endpoints(RingParams(3, 2))


def test_family_counts():
    fams = list(enumerate_families(RingParams(4, 1)))
    assert sorted(f[0].steps for f in fams) == ["RRUU", "RURU"]
    assert sum(1 for _ in enumerate_families(RingParams(5, 1))) == 5
    assert sum(1 for _ in enumerate_families(RingParams(5, 2))) == 1


def test_turn_gf_examples():
    assert turn_gf(RingParams(4, 1)) == 1 + Z
    assert turn_gf(RingParams(5, 1)) == 1 + 3 * Z + Z ** 2
    assert turn_gf(RingParams(5, 2)) == 1
    assert turn_gf(RingParams(7, 2)) == IntPolynomial([1, 3, 6, 3, 1])


def _dyck_turn_distribution(k):
    # brute force over all U/R words of length 2k that stay weakly below the diagonal
    counts = {}
    for ups in combinations(range(2 * k), k):
        word = ["U" if i in ups else "R" for i in range(2 * k)]
        h, ok = 0, True
        for s in word:
            h += 1 if s == "R" else -1
            ok &= h >= 0
        if ok:
            t = sum(1 for a, b in zip(word, word[1:]) if a + b == "UR")
            counts[t] = counts.get(t, 0) + 1
    return counts


@pytest.mark.parametrize("n", range(3, 9))
def test_single_path_turns_are_narayana(n):
    # r = 1: one Dyck-type path of semilength n-2, turn counts are Narayana numbers
    k = n - 2
    dist = _dyck_turn_distribution(k)
    narayana = [binomial(k, t) * binomial(k, t + 1) // k for t in range(k)]
    gf = turn_gf(RingParams(n, 1))
    assert gf.coeffs == tuple(narayana) == tuple(dist.get(t, 0) for t in range(k))


@pytest.mark.parametrize("p", [p for p in grid(8) if p.r >= 1], ids=str)
def test_families_are_nonintersecting_and_below_diagonal(p):
    ends = endpoints(p)
    for fam in enumerate_families(p):
        seen = set()
        for path, (a, e) in zip(fam, ends):
            pts = path.points()
            assert pts[0] == a and pts[-1] == e
            assert all(y <= x for x, y in pts)
            assert not seen & set(pts)
            seen.update(pts)


@pytest.mark.parametrize("p", [p for p in grid(8) if p.r >= 1], ids=str)
def test_shifted_endpoints_preserve_count(p):
    count = sum(1 for _ in enumerate_families(p))
    for factor in (1, 2):
        starts, ends = shifted_endpoints(p, factor)
        assert sum(1 for _ in enumerate_nonintersecting(starts, ends)) == count


def test_diagonal_endpoints():
    starts, ends = shifted_endpoints(RingParams(9, 3), 2)
    assert starts == [(3, 3), (2, 2), (1, 1)]
    assert ends == [(6, 6), (7, 7), (8, 8)]


def test_catalan_and_hankel():
    assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    # ballot recurrence
    c = [1]
    for k in range(1, 15):
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    assert [catalan(k) for k in range(15)] == c
    assert lgv_hankel(RingParams(5, 1)) == 5
    assert lgv_hankel(RingParams(6, 2)) == 3
    assert all(lgv_hankel(RingParams(2 * r, r)) == 1 for r in range(1, 6))


@pytest.mark.parametrize("p", [p for p in grid(9) if p.r >= 1], ids=str)
def test_turn_gf_is_palindromic(p):
    assert turn_gf(p).is_palindromic()


def test_face_is_valid():
    assert face_is_valid(REF_FACE, RingParams(12, 3))
    assert not face_is_valid(REF_FACE, RingParams(12, 2))
    assert face_is_valid([], RingParams(4, 1))
    assert not face_is_valid([(1, 4), (2, 3)], RingParams(4, 1))
    with pytest.raises(ParameterError):
        face_is_valid([(2, 2)], RingParams(4, 1))


@given(st.sets(st.tuples(st.integers(1, 7), st.integers(1, 7)).filter(lambda p: p[0] < p[1]), max_size=10))
def test_longest_chain_brute_force(S):
    best = 0
    pts = sorted(S)
    for k in range(1, len(pts) + 1):
        for sub in combinations(pts, k):
            if all(a[0] < b[0] and a[1] > b[1] for a, b in zip(sub, sub[1:])):
                best = k
    assert longest_chain(S) == best


def test_f_vector_examples():
    assert f_vector(RingParams(3, 1)) == [3, 3, 1]
    assert f_vector(RingParams(2, 1)) == [1]
    assert f_vector(RingParams(4, 1)) == [6, 14, 16, 9, 2]


def test_f_vector_top_dimension():
    # facets have d points, so the f-vector has length d
    for p in grid(7):
        if p.r >= 1:
            assert len(f_vector(p)) == p.d


@pytest.mark.parametrize("p", [p for p in grid(6) if p.r >= 1] + [RingParams(7, 1)], ids=str)
def test_f_vector_dfs_matches_transfer(p):
    assert f_vector(p, "dfs") == f_vector(p, "transfer")


def test_face_caps():
    with pytest.raises(FeasibilityError):
        next(iter_faces(RingParams(9, 1)))
    with pytest.raises(FeasibilityError):
        f_vector(RingParams(15, 1))


def test_iter_faces_brute_force():
    p = RingParams(5, 1)
    pts = region_points(5)
    brute = {S for k in range(len(pts) + 1) for S in combinations(pts, k) if face_is_valid(S, p)}
    assert set(iter_faces(p)) == brute


def test_light_shadow_figure():
    fam = light_shadow(REF_FACE, RingParams(12, 3))
    assert tuple(q.steps for q in fam) == REF_FACE_IMAGE
    assert fam[0].start == (3, 3) and fam[0].end == (9, 9)


def test_light_shadow_empty_face_gives_lowest_family():
    p = RingParams(7, 2)
    fam = light_shadow([], p)
    assert sum(len(q.turn_points()) for q in fam) == 0
    assert [q.steps for q in fam] == ["RRRUUU", "RRRUUU"]


def test_light_shadow_rejects_invalid_face():
    with pytest.raises(ParameterError):
        light_shadow([(1, 4), (2, 3)], RingParams(4, 1))


@pytest.mark.parametrize("p", [RingParams(4, 1), RingParams(5, 1), RingParams(5, 2)], ids=str)
def test_fiber_size_examples(p):
    assert fiber_size_check(p)


def test_fiber_total_matches_f_vector():
    p = RingParams(5, 1)
    counts = fiber_counts(p)
    by_size = {}
    for (_, c), v in counts.items():
        by_size[c] = by_size.get(c, 0) + v
    assert [by_size[c] for c in range(1, p.d + 1)] == f_vector(p)


@pytest.mark.slow
def test_fiber_sizes_n7():
    for r in (1, 2, 3):
        assert fiber_size_check(RingParams(7, r))


@pytest.mark.parametrize("p", [p for p in grid(7) if p.r >= 1], ids=str)
def test_face_h_vector_is_numerator(p):
    # h(t) = sum_i f_{i-1} t^i (1-t)^{d-i} with f_{-1} = 1
    f = f_vector(p)
    d = len(f)
    h = (1 - Z) ** d
    for i, fi in enumerate(f, start=1):
        h = h + fi * Z ** i * (1 - Z) ** (d - i)
    assert h == numerator(p)
