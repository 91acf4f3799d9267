import pytest

from conftest import random_sp_element
from exospringer.bicomb import (Bipartition, bipartitions_of, n_invariant,
                                orbit_dim, partition_sum)
from exospringer.classify import (
    EnhancedPair, NotDoubledError, cyclic_dim, enhanced_type, exotic_labeler,
    exotic_type, parabolic_stabilizer_dim, sp_lie_basis, stabilizer_dim)
from exospringer.ffield import FpMatrix, nilpotent_jordan_type
from exospringer.symplectic import ExoticPair, SymplecticSpace, normal_form_pair


def test_enhanced_examples():
    p = 3
    j2 = FpMatrix([[1, 1], [0, 1]], p)
    assert enhanced_type(EnhancedPair(j2, (0, 1), unipotent=True)) == \
        Bipartition((2,), ())
    assert enhanced_type(EnhancedPair(j2, (1, 0), unipotent=True)) == \
        Bipartition((1,), (1,))
    assert enhanced_type(EnhancedPair(j2, (0, 0), unipotent=True)) == \
        Bipartition((), (2,))
    n = FpMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]], p)
    assert enhanced_type(EnhancedPair(n, (0, 0, 0))) == Bipartition((), (2, 1))


def test_enhanced_types_sum_to_jordan_type(rng):
    p = 3
    for _ in range(30):
        blocks = []
        total = 0
        while total < 4:
            size = rng.randrange(1, 5 - total)
            blocks.append(size)
            total += size
        m = sum(blocks)
        entries = [[0] * m for _ in range(m)]
        at = 0
        for b in blocks:
            for i in range(b - 1):
                entries[at + i][at + i + 1] = 1
            at += b
        n_mat = FpMatrix(entries, p)
        v = tuple(rng.randrange(p) for _ in range(m))
        label = enhanced_type(EnhancedPair(n_mat, v))
        assert partition_sum(label.first, label.second) == \
            nilpotent_jordan_type(n_mat)


def test_exotic_examples():
    sp = SymplecticSpace(1, 3)
    one = FpMatrix.identity(2, 3)
    assert exotic_type(ExoticPair(sp, one, (1, 0), "group")) == \
        Bipartition((1,), ())
    for n in (1, 2, 3):
        spn = SymplecticSpace(n, 3)
        eye = FpMatrix.identity(2 * n, 3)
        assert exotic_type(ExoticPair(spn, eye, (0,) * (2 * n), "group")) == \
            Bipartition((), (1,) * n)


def test_not_doubled_on_non_self_adjoint_input():
    # classification through the ambient group of a matrix that is not
    # self-adjoint produces an undoubled label and must fail loudly
    j2 = FpMatrix([[0, 1], [0, 0]], 3)
    labeler = exotic_labeler(j2)
    with pytest.raises(NotDoubledError):
        labeler((0, 1))


def test_roundtrip_all_labels():
    for p in (3, 5):
        for n in range(1, 5):
            sp = SymplecticSpace(n, p)
            for label in bipartitions_of(n):
                nf = normal_form_pair(label, sp)
                assert exotic_type(nf.pair) == label


def test_roundtrip_rank5():
    for p in (3, 5):
        sp = SymplecticSpace(5, p)
        for label in bipartitions_of(5):
            nf = normal_form_pair(label, sp)
            assert exotic_type(nf.pair) == label


def test_conjugation_invariance(rng):
    for n in (1, 2, 3):
        sp = SymplecticSpace(n, 3)
        for label in bipartitions_of(n):
            pair = normal_form_pair(label, sp).pair
            for _ in range(3):
                g = random_sp_element(rng, sp)
                moved = ExoticPair(sp, g * pair.x * g.inverse(),
                                   g.apply(pair.v), "group")
                assert exotic_type(moved) == label


def test_sp_lie_basis_size_and_closure():
    for n, p in ((1, 3), (2, 5), (3, 3)):
        sp = SymplecticSpace(n, p)
        basis = sp_lie_basis(sp)
        assert len(basis) == 2 * n * n + n
        # spot-check the bracket stays inside the algebra
        h1, h2 = basis[0], basis[-1]
        assert sp.membership(h1 * h2 - h2 * h1, "sp_lie")


def test_stabilizer_dim_examples():
    sp = SymplecticSpace(2, 3)
    one = FpMatrix.identity(4, 3)
    full = ExoticPair(sp, one, (0, 0, 0, 0), "group")
    assert stabilizer_dim(full, include_v=False) == 10     # dim sp_4
    pair = normal_form_pair(Bipartition((1,), (1,)), sp).pair
    assert stabilizer_dim(pair, include_v=True) == 10 - 6 == 4


def test_stabilizer_dim_without_v_matches_centralizer_formula():
    # x of type lambda u lambda: dim Z_H(x) = dim H - (2n^2 - 2n - 4 n(lambda))
    from exospringer.bicomb import partitions_of
    for n in (1, 2, 3):
        sp = SymplecticSpace(n, 3)
        dim_h = 2 * n * n + n
        for lam in partitions_of(n):
            pair = normal_form_pair(Bipartition((), lam), sp).pair
            expected = dim_h - (2 * n * n - 2 * n - 4 * n_invariant(lam))
            assert stabilizer_dim(pair, include_v=False) == expected
            assert stabilizer_dim(pair, include_v=False) % 2 == n % 2


def test_stabilizer_v_drop_is_twice_mu1():
    for n in range(1, 5):
        sp = SymplecticSpace(n, 3)
        for label in bipartitions_of(n):
            pair = normal_form_pair(label, sp).pair
            with_v = stabilizer_dim(pair, include_v=True)
            without = stabilizer_dim(pair, include_v=False)
            assert with_v == without - 2 * sum(label.first)


def test_stabilizer_dims_agree_across_primes():
    for n in (1, 2, 3):
        for label in bipartitions_of(n):
            dims = set()
            for p in (3, 5, 7):
                pair = normal_form_pair(label, SymplecticSpace(n, p)).pair
                dims.add(stabilizer_dim(pair, include_v=True))
            assert len(dims) == 1
            assert dims.pop() == (2 * n * n + n) - orbit_dim(label, n)


def test_cyclic_dim():
    sp = SymplecticSpace(2, 3)
    zero_pair = ExoticPair(sp, FpMatrix.identity(4, 3), (0, 0, 0, 0), "group")
    assert cyclic_dim(zero_pair) == 0
    for n in (1, 2, 3, 4):
        spn = SymplecticSpace(n, 3)
        open_pair = normal_form_pair(Bipartition((n,), ()), spn).pair
        assert cyclic_dim(open_pair) == n
    pair = normal_form_pair(Bipartition((1,), (1,)), sp).pair
    assert cyclic_dim(pair) == 1


def test_cyclic_dim_vs_first_part():
    for n in range(1, 5):
        sp = SymplecticSpace(n, 3)
        for label in bipartitions_of(n):
            pair = normal_form_pair(label, sp).pair
            mu1 = label.first
            first = mu1[0] if mu1 else 0
            cd = cyclic_dim(pair)
            assert cd == first
            assert cd <= sum(mu1)
            if mu1 and len(mu1) == 1:
                assert cd == sum(mu1)
            if len(mu1) > 1:
                assert cd < sum(mu1)


def test_parabolic_examples_rank2():
    sp = SymplecticSpace(2, 3)
    nf = normal_form_pair(Bipartition((1,), (1,)), sp)
    assert parabolic_stabilizer_dim(nf, 1, "i_node") == 4
    assert parabolic_stabilizer_dim(nf, 1, "ii_node") == 3


def test_parabolic_examples_rank3():
    for p in (3, 5):
        sp = SymplecticSpace(3, p)
        nf = normal_form_pair(Bipartition((2,), (1,)), sp)
        assert nf.nu == (3,)
        z = stabilizer_dim(nf.pair, include_v=True)
        assert parabolic_stabilizer_dim(nf, 1, "i_node") == z
        assert parabolic_stabilizer_dim(nf, 1, "ii_node") == z - 1


def test_parabolic_line_law_small():
    # dim drops by 2 q_i - 2 (node case i) or 2 q_i - 1 (case ii)
    for n in (2, 3):
        sp = SymplecticSpace(n, 3)
        for label in bipartitions_of(n):
            nf = normal_form_pair(label, sp)
            z = stabilizer_dim(nf.pair, include_v=True)
            ell = nf.num_blocks
            for i in range(1, ell + 1):
                q = nf.q_rows[i - 1]
                mu1_next = nf.mu1_values[i] if i < ell else 0
                if nf.mu1_values[i - 1] > mu1_next:
                    assert parabolic_stabilizer_dim(nf, i, "i_node") == \
                        z - 2 * q + 2
                if nf.nu_values[i - 1] > nf.mu1_values[i - 1]:
                    assert parabolic_stabilizer_dim(nf, i, "ii_node") == \
                        z - 2 * q + 1


def test_parabolic_case_i_needs_removable_node():
    # with no removable first-component node at the block end, the true
    # stabilizer-with-line dimension is one below the removal law; the
    # operation refuses such instances (brute-force group counts over
    # F_3 and F_5 back the refusal: (p-1)p^4 points, a 5-dim group,
    # where the law would say 6)
    sp = SymplecticSpace(3, 3)
    nf = normal_form_pair(Bipartition((1, 1), (1,)), sp)
    assert nf.mu1_values == (1, 1)
    with pytest.raises(IndexError):
        parabolic_stabilizer_dim(nf, 1, "i_node")
    # same geometry computed without the line shortcut: kernel with the
    # line condition has dim 8, not z - 2q + 2 = 9
    from exospringer.classify import _kernel_dim, _stabilizer_rows, sp_lie_basis
    basis = sp_lie_basis(sp)
    w = nf.jordan_basis[(1, 1)]
    rows = _stabilizer_rows(sp, basis, nf.pair.x, nf.pair.v, line=w)
    assert _kernel_dim(sp, rows, len(basis)) == 8
    assert stabilizer_dim(nf.pair, include_v=True) - 2 * 1 + 2 == 9


def test_parabolic_errors():
    sp = SymplecticSpace(2, 3)
    nf = normal_form_pair(Bipartition((1,), (1,)), sp)
    with pytest.raises(IndexError):
        parabolic_stabilizer_dim(nf, 2, "i_node")
    with pytest.raises(ValueError):
        parabolic_stabilizer_dim(nf, 1, "nonsense")
    nf_open = normal_form_pair(Bipartition((2,), ()), sp)
    with pytest.raises(IndexError):
        parabolic_stabilizer_dim(nf_open, 1, "ii_node")   # mu2 part is zero
