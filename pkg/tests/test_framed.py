import random

import pytest

from greenseq import (
    CVector,
    FramedState,
    MutationSequence,
    NotCoframedError,
    Permutation,
    SignCoherenceError,
    frame,
    linear_quiver,
)

from conftest import random_quiver


def test_frame_initial_state(a2):
    s = frame(a2)
    assert s.principal == ((0, 1), (-1, 0))
    assert s.cmat == ((1, 0), (0, 1))
    assert len(s.history) == 0
    assert s.green_vertices() == (1, 2)
    assert not s.is_all_red


def test_frame_single_vertex():
    s = frame(linear_quiver(1))
    assert s.cmat == ((1,),)
    assert s.is_green(1)


def test_c_vector_initially_standard_basis(a3):
    s = frame(a3)
    for i in range(1, 4):
        cv = s.c_vector(i)
        assert cv.entries == tuple(1 if j == i else 0 for j in range(1, 4))
        assert cv.sign == 1


def test_after_mu2_vertex_one_points_at_both_frozen(a2):
    # arrows 1 -> 1' and 1 -> 2' after mutating at 2
    s = frame(a2).mutate(2)
    assert s.c_vector(1).entries == (1, 1)
    assert s.is_green(1)
    assert s.is_red(2)
    assert s.c_vector(2).entries == (0, -1)


def test_annotations_along_212(a2):
    s = frame(a2).mutate_sequence([2, 1, 2])
    assert [cv.entries for cv in s.history.annotations] == [(0, 1), (1, 1), (1, 0)]
    assert s.is_all_red


def test_c_vector_after_21(a2):
    s = frame(a2).mutate_sequence([2, 1])
    assert s.c_vector(2).entries == (1, 0)
    assert s.is_green(2)


def test_all_red_after_12(a2):
    s = frame(a2).mutate_sequence([1, 2])
    assert s.is_all_red
    assert s.c_vector(1).entries == (-1, 0)
    assert s.c_vector(2).entries == (0, -1)


def test_framed_mutation_is_involution(a3):
    s = frame(a3).mutate(2)
    back = s.mutate(2)
    assert back.principal == frame(a3).principal
    assert back.cmat == frame(a3).cmat
    assert len(back.history) == 2


def test_extract_permutation_identity(a2):
    s = frame(a2).mutate_sequence([1, 2])
    assert s.extract_permutation().image == (1, 2)


def test_extract_permutation_transposition(a2):
    s = frame(a2).mutate_sequence([2, 1, 2])
    sigma = s.extract_permutation()
    assert sigma.image == (2, 1)
    assert sigma(1) == 2 and sigma(2) == 1


def test_extract_permutation_rejects_initial_state(a2):
    with pytest.raises(NotCoframedError):
        frame(a2).extract_permutation()


def test_extract_permutation_needs_conjugated_principal(a2):
    # right cmat shape but a principal part that is not the permuted origin
    wrong = FramedState(((0, 2), (-2, 0)), ((-1, 0), (0, -1)), a2)
    with pytest.raises(NotCoframedError):
        wrong.extract_permutation()


def test_sign_coherence_along_random_sequences():
    """Every c-matrix row stays sign-coherent and nonzero; the state
    constructor re-checks this after every mutation."""
    rng = random.Random(31337)
    for _ in range(300):
        n = rng.randint(1, 6)
        q = random_quiver(rng, n, max_entry=3)
        s = frame(q)
        for _ in range(20):
            s = s.mutate(rng.randint(1, n))
        for i in range(1, n + 1):
            assert s.c_vector(i).sign in (-1, 1)


def _full_matrix_mutate(m, k0):
    n = len(m)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k0 or j == k0:
                out[i][j] = -m[i][j]
            else:
                s = (m[i][k0] > 0) - (m[i][k0] < 0)
                out[i][j] = m[i][j] + s * max(0, m[i][k0] * m[k0][j])
    return out


def test_framed_mutation_matches_doubled_matrix_mutation():
    """Oracle: mutating the 2n x 2n matrix [[B, I], [-I, 0]] of the framed
    quiver with the plain matrix rule must reproduce both tracked blocks."""
    rng = random.Random(12345)
    for _ in range(150):
        n = rng.randint(1, 5)
        q = random_quiver(rng, n, max_entry=2)
        state = frame(q)
        full = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                full[i][j] = q.b[i][j]
            full[i][n + i] = 1
            full[n + i][i] = -1
        for _ in range(rng.randint(1, 15)):
            k = rng.randint(1, n)
            state = state.mutate(k)
            full = _full_matrix_mutate(full, k - 1)
            for i in range(n):
                assert tuple(full[i][:n]) == state.principal[i]
                assert tuple(full[i][n:]) == state.cmat[i]


def test_cvector_rejects_mixed_and_zero():
    with pytest.raises(SignCoherenceError):
        CVector((1, -1))
    with pytest.raises(SignCoherenceError):
        CVector((0, 0))


def test_cvector_support():
    assert CVector((0, 2, 1)).support() == frozenset({2, 3})


def test_mutation_sequence_parse_and_str():
    seq = MutationSequence.parse("2,1,2")
    assert seq.vertices == (2, 1, 2)
    assert str(seq) == "2,1,2"
    assert MutationSequence.parse("").vertices == ()
    with pytest.raises(ValueError):
        MutationSequence.parse("1,x")
    with pytest.raises(ValueError):
        MutationSequence((0,))


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    assert Permutation((2, 3, 1)).inverse().image == (3, 1, 2)


def test_framed_out_of_range(a2):
    with pytest.raises(ValueError):
        frame(a2).mutate(3)
