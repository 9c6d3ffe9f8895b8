import numpy as np
import pytest
from hypothesis import given, strategies as st

from gersh import (
    INFTY,
    DataError,
    Disk,
    DiskComplement,
    HalfPlane,
    Intersection,
    Pencil,
    PointAtInfinity,
    WholePlane,
    contains_infinity,
    membership,
    membership_mask,
    row_stats,
)

A1 = [[2, 3], [3, 2]]
B1 = [[2, 1], [1, 2]]


class TestPencil:
    def test_accepts_square_pair(self):
        p = Pencil(A1, B1)
        assert p.n == 2
        assert p.a.dtype == complex

    def test_rejects_mismatched_shapes(self):
        with pytest.raises(DataError):
            Pencil(np.eye(2), np.eye(3))

    def test_rejects_nonsquare(self):
        with pytest.raises(DataError):
            Pencil(np.ones((2, 3)), np.ones((2, 3)))

    def test_rejects_nonfinite_entries(self):
        a = np.eye(2, dtype=complex)
        a[0, 1] = np.nan
        with pytest.raises(DataError):
            Pencil(a, np.eye(2))

    def test_arrays_frozen(self):
        p = Pencil(A1, B1)
        with pytest.raises(ValueError):
            p.a[0, 0] = 5.0


class TestRowStats:
    def test_worked_example_row(self):
        stats = row_stats(Pencil(A1, B1))
        s = stats[0]
        assert s.big_r == 3.0
        assert s.big_r_a == 1.0
        assert s.small_r == 0.5
        assert s.small_r_a == 1.5
        assert s.in_sb and not s.in_sa

    def test_diagonal_pencil(self):
        stats = row_stats(Pencil(np.diag([5.0, 7.0]), np.eye(2)))
        for s in stats:
            assert s.big_r == 0.0 and s.big_r_a == 0.0
            assert s.small_r == 0.0 and s.small_r_a == 0.0
            assert s.in_sb and s.in_sa

    def test_zero_diagonal_in_b(self):
        stats = row_stats(Pencil(np.eye(2), [[0, 0], [0, 1]]))
        assert not stats[0].in_sb  # |b_11| = 0 is not > 0
        assert stats[0].in_sa
        assert stats[0].small_r is None

    def test_tie_is_not_dominant(self):
        stats = row_stats(Pencil([[1, 1], [0, 1]], np.eye(2)))
        assert not stats[0].in_sa

    def test_row_scaling_by_complex_scalar(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        base = row_stats(Pencil(a, b))
        scalar = 0.75 - 2.5j
        a2, b2 = a.copy(), b.copy()
        a2[2] *= scalar
        b2[2] *= scalar
        scaled = row_stats(Pencil(a2, b2))
        s0, s1 = base[2], scaled[2]
        assert s1.in_sa == s0.in_sa and s1.in_sb == s0.in_sb
        assert s1.small_r == pytest.approx(s0.small_r, rel=1e-14)
        assert s1.small_r_a == pytest.approx(s0.small_r_a, rel=1e-14)
        assert s1.big_r == pytest.approx(abs(scalar) * s0.big_r, rel=1e-14)
        assert s1.big_r_a == pytest.approx(abs(scalar) * s0.big_r_a, rel=1e-14)
        for i in (0, 1, 3):
            assert scaled[i] == base[i]


class TestMembership:
    def test_disk_contains_eigenvalue(self):
        assert membership(Disk(1.0, 4.0), -1.0 + 0j)

    def test_disk_excludes_infinity(self):
        assert not membership(Disk(1.0, 4.0), INFTY)

    def test_half_plane_boundary_point(self):
        assert membership(HalfPlane(2.0), 1.0 + 0j)  # |1-2| = |1|

    def test_half_plane_contains_infinity(self):
        assert membership(HalfPlane(2.0), INFTY)

    def test_point_at_infinity(self):
        assert membership(PointAtInfinity(), INFTY)
        assert not membership(PointAtInfinity(), 0j)

    def test_intersection_requires_both(self):
        region = Intersection(Disk(0.0, 2.0), DiskComplement(0.0, 1.0))
        assert membership(region, 1.5 + 0j)
        assert not membership(region, 0j)
        assert not membership(region, 3.0 + 0j)

    def test_tolerance_loosens_boundaries(self):
        assert not membership(Disk(0.0, 1.0), 1.0 + 1e-12 + 0j)
        assert membership(Disk(0.0, 1.0), 1.0 + 1e-12 + 0j, tol=1e-9)
        assert membership(DiskComplement(0.0, 1.0), 1.0 - 1e-12 + 0j, tol=1e-9)

    def test_mask_matches_scalar_predicate(self):
        rng = np.random.default_rng(3)
        zs = rng.standard_normal(64) + 1j * rng.standard_normal(64)
        for region in (
            Disk(0.3 + 0.1j, 0.8),
            DiskComplement(-0.2j, 1.1),
            HalfPlane(1.0 + 1.0j),
            WholePlane(),
            PointAtInfinity(),
            Intersection(Disk(0.0, 1.5), HalfPlane(0.5)),
        ):
            mask = membership_mask(region, zs)
            expected = np.array([membership(region, z) for z in zs])
            assert np.array_equal(mask, expected)

    def test_intersection_must_not_nest(self):
        inner = Intersection(Disk(0, 1), Disk(1, 1))
        with pytest.raises(DataError):
            Intersection(inner, Disk(0, 1))

    def test_negative_radius_rejected(self):
        with pytest.raises(DataError):
            Disk(0.0, -1.0)


class TestContainsInfinity:
    @pytest.mark.parametrize(
        "region,expected",
        [
            (WholePlane(), True),
            (Disk(0, 1), False),
            (DiskComplement(0, 1), True),
            (HalfPlane(1.0), True),
            (PointAtInfinity(), True),
            (Intersection(DiskComplement(0, 1), HalfPlane(1.0)), True),
            (Intersection(Disk(0, 1), DiskComplement(0, 0.5)), False),
        ],
    )
    def test_table(self, region, expected):
        assert contains_infinity(region) is expected


finite_complex = st.complex_numbers(
    min_magnitude=0, max_magnitude=50, allow_nan=False, allow_infinity=False
)


@given(
    z=finite_complex,
    center=finite_complex,
    radius=st.floats(0, 20),
    theta=st.floats(0, 2 * np.pi),
)
def test_membership_rotation_invariance(z, center, radius, theta):
    rot = np.exp(1j * theta)
    for make in (Disk, DiskComplement):
        before = membership(make(center, radius), z, tol=1e-12)
        after = membership(make(rot * center, radius), rot * z, tol=1e-12)
        assert before == after


@given(z=finite_complex, alpha=finite_complex, theta=st.floats(0, 2 * np.pi))
def test_half_plane_rotation_invariance(z, alpha, theta):
    rot = np.exp(1j * theta)
    assert membership(HalfPlane(alpha), z, tol=1e-9) == membership(
        HalfPlane(rot * alpha), rot * z, tol=1e-9
    )


@given(z=finite_complex, center=finite_complex, radius=st.floats(0, 20))
def test_disk_and_complement_partition_plane(z, center, radius):
    boundary_gap = abs(abs(z - center) - radius)
    if boundary_gap < 1e-9:
        return  # shared boundary circle belongs to both
    inside = membership(Disk(center, radius), z)
    outside = membership(DiskComplement(center, radius), z)
    assert inside != outside
