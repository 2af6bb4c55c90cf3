from dimer_residues.indices import normalize, pair_identity_13, pair_multisets, u_to_v


def test_normalize_examples():
    assert normalize(-2, 3).k == 2
    assert normalize(5, 3).k == 2
    assert normalize(7, 3).k == 0


def test_normalize_constant_on_orbits():
    for n in range(1, 51):
        m = 2 * n + 1
        for k in range(-10 * m, 10 * m + 1):
            c = normalize(k, n)
            assert 0 <= c.k <= n
            assert normalize(-k, n) == c == normalize(m - k, n)
            assert normalize(c.k, n) == c


def test_u_to_v_examples():
    sign, idx = u_to_v(2, 3)
    assert (sign, idx.k) == (1, 1)
    sign, idx = u_to_v(3, 3)
    assert (sign, idx.k) == (-1, 2)


def test_u_squares_are_v_squares():
    for n in range(1, 51):
        assert sorted(u_to_v(k, n)[1].k for k in range(1, n + 1)) == list(range(1, n + 1))


def test_u_to_v_numerically():
    import math

    for n in range(1, 12):
        for k in range(-30, 30):
            u = 2 * math.cos(k * math.pi / (2 * n + 1))
            sign, idx = u_to_v(k, n)
            v = 2 * math.cos(2 * idx.k * math.pi / (2 * n + 1))
            assert abs(u - sign * v) < 1e-12


def test_pair_identity_small_by_hand():
    shifted, plain = pair_multisets(2)
    assert shifted == plain and list(plain) == [(1, 2)]
    shifted, plain = pair_multisets(3)
    assert sum(shifted.values()) == 3 and shifted == plain


def test_pair_identity_range():
    for n in range(2, 51):
        assert pair_identity_13(n)


def test_shifted_pairs_never_hit_zero():
    for n in range(2, 51):
        shifted, _ = pair_multisets(n)
        assert all(0 not in pair for pair in shifted)
