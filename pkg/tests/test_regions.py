import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gersh import (
    INFTY,
    Disk,
    DiskComplement,
    HalfPlane,
    Intersection,
    Pencil,
    PointAtInfinity,
    WholePlane,
    contains_infinity,
    disk_from_b_dominance,
    eigenvalues_charpoly,
    family_union_mask,
    family_union_membership,
    in_kostic_region,
    inclusion_family,
    membership,
    membership_mask,
    region_from_a_dominance,
    row_stats,
    tight_disk_from_b_dominance,
    tight_region_from_a_dominance,
)
from gersh import testmat_pencil as make_testmat
from gersh.svg import auto_viewport

from conftest import dominant_pencil

A1B1 = Pencil([[2, 3], [3, 2]], [[2, 1], [1, 2]])


def grid_points(viewport, n=40):
    xmin, xmax, ymin, ymax = viewport
    xs = np.linspace(xmin, xmax, n)
    ys = np.linspace(ymin, ymax, n)
    return (xs[None, :] + 1j * ys[:, None]).ravel()


class TestBDominanceDisk:
    def test_worked_example(self):
        stats = row_stats(A1B1)
        region = disk_from_b_dominance(A1B1, stats, 0)
        assert region == Disk(1.0, 4.0)

    def test_diagonal_pencil_degenerate_disk(self):
        p = Pencil(np.diag([5.0, 7.0]), np.eye(2))
        stats = row_stats(p)
        assert disk_from_b_dominance(p, stats, 0) == Disk(5.0, 0.0)
        assert disk_from_b_dominance(p, stats, 1) == Disk(7.0, 0.0)

    def test_symmetric_four_one_pencil(self):
        # r = 1/4, R = 1: radius (4*(1/4) + 1)/(4*(3/4)) = 2/3
        p = Pencil([[4, 1], [1, 4]], [[4, 1], [1, 4]])
        stats = row_stats(p)
        region = disk_from_b_dominance(p, stats, 0)
        assert region.center == pytest.approx(1.0)
        assert region.radius == pytest.approx(2.0 / 3.0, rel=1e-15)

    def test_non_dominant_row_gives_whole_plane(self):
        p = Pencil(np.eye(2), [[1, 2], [0, 1]])
        assert disk_from_b_dominance(p, row_stats(p), 0) == WholePlane()


class TestADominanceRegion:
    def test_point_at_infinity_branch(self):
        p = Pencil(np.eye(2), [[0, 0], [0, 1]])
        assert region_from_a_dominance(p, row_stats(p), 0) == PointAtInfinity()

    def test_disk_complement_branch(self):
        # a_ii = 2, off-row of a zero, b_ii = 0, sum|b_ij| = 1 -> |z| >= 2
        p = Pencil([[2, 0], [0, 1]], [[0, 1], [0, 1]])
        region = region_from_a_dominance(p, row_stats(p), 0)
        assert region == DiskComplement(0j, 2.0)

    def test_apollonius_disk_branch(self):
        # alpha = 2, beta = 1/2 -> disk center 8/3, radius 4/3
        p = Pencil([[4, 0], [0, 1]], [[2, 1], [0, 1]])
        region = region_from_a_dominance(p, row_stats(p), 0)
        assert isinstance(region, Disk)
        assert region.center == pytest.approx(8.0 / 3.0, rel=1e-15)
        assert region.radius == pytest.approx(4.0 / 3.0, rel=1e-15)
        # boundary satisfies the defining ratio equation |z - 2| = |z|/2
        for angle in np.linspace(0, 2 * np.pi, 17):
            z = region.center + region.radius * np.exp(1j * angle)
            assert abs(z - 2.0) == pytest.approx(abs(z) / 2.0, rel=1e-12)

    def test_disk_complement_contains_infinity_when_ratio_large(self):
        # a row dominant, b row far from dominant -> beta > 1
        p = Pencil([[4, 0.5], [0, 1]], [[0.5, 3], [0, 1]])
        region = region_from_a_dominance(p, row_stats(p), 0)
        assert isinstance(region, DiskComplement)
        assert contains_infinity(region)

    def test_half_plane_at_unit_ratio(self):
        # beta = (|b_ii| r_a + R_a)/(|b_ii| (1 - r_a)) = 1 with r_a = 0, R_a = |b_ii|
        p = Pencil([[2, 0], [0, 1]], [[1, 1], [0, 1]])
        region = region_from_a_dominance(p, row_stats(p), 0)
        assert region == HalfPlane(2.0)

    def test_non_dominant_row_gives_whole_plane(self):
        assert region_from_a_dominance(A1B1, row_stats(A1B1), 0) == WholePlane()


class TestTightVariants:
    def test_worked_example_tilde_disk(self):
        stats = row_stats(A1B1)
        region = tight_disk_from_b_dominance(A1B1, stats, 0)
        assert region.center == pytest.approx(4.0 / 3.0, rel=1e-15)
        assert region.radius == pytest.approx(11.0 / 3.0, rel=1e-15)

    def test_diagonal_pencil(self):
        p = Pencil(np.diag([5.0, 7.0]), np.eye(2))
        assert tight_disk_from_b_dominance(p, row_stats(p), 0) == Disk(5.0, 0.0)
        assert tight_region_from_a_dominance(p, row_stats(p), 0) == Disk(5.0, 0.0)

    def test_symmetric_four_one_pencil(self):
        # center 1/(1 - 1/16) = 16/15, radius (9/4)/(15/4) = 3/5
        p = Pencil([[4, 1], [1, 4]], [[4, 1], [1, 4]])
        region = tight_disk_from_b_dominance(p, row_stats(p), 0)
        assert region.center == pytest.approx(16.0 / 15.0, rel=1e-15)
        assert region.radius == pytest.approx(3.0 / 5.0, rel=1e-15)

    def test_tilde_a_derived_circle(self):
        # r_a = 1/2, R_a = 1, |b_ii| = 4, a_ii/b_ii = 2:
        # alpha~ = 3/2, beta~ = 7/8, center 32/5, radius 28/5
        p = Pencil([[8, 2, 2], [0, 1, 0], [0, 0, 1]],
                   [[4, 0.5, 0.5], [0, 1, 0], [0, 0, 1]])
        stats = row_stats(p)
        assert stats[0].small_r_a == 0.5 and stats[0].big_r_a == 1.0
        region = tight_region_from_a_dominance(p, stats, 0)
        assert isinstance(region, Disk)
        assert region.center == pytest.approx(32.0 / 5.0, rel=1e-14)
        assert region.radius == pytest.approx(28.0 / 5.0, rel=1e-14)
        # the circle solves |z - alpha~| = beta~ |z|
        for angle in np.linspace(0, 2 * np.pi, 17):
            z = region.center + region.radius * np.exp(1j * angle)
            assert abs(z - 1.5) == pytest.approx(0.875 * abs(z), rel=1e-12)

    def test_delegates_when_b_diagonal_zero(self):
        p = Pencil([[2, 0], [0, 1]], [[0, 1], [0, 1]])
        stats = row_stats(p)
        assert tight_region_from_a_dominance(p, stats, 0) == region_from_a_dominance(p, stats, 0)

    def test_delegates_when_a_not_dominant(self):
        stats = row_stats(A1B1)
        assert tight_region_from_a_dominance(A1B1, stats, 0) == WholePlane()


class TestFamilies:
    def test_plain_flattens_whole_plane(self):
        fam = inclusion_family(A1B1)
        assert fam.rows[0].combined == Disk(1.0, 4.0)
        assert fam.rows[1].combined == Disk(1.0, 4.0)

    def test_diagonal_pencil_combined_is_point(self):
        p = Pencil(np.diag([5.0, 7.0]), np.eye(2))
        fam = inclusion_family(p)
        combined = fam.rows[0].combined
        assert isinstance(combined, Intersection)
        assert membership(combined, 5.0 + 0j)
        assert not membership(combined, 5.0 + 1e-9 + 0j)

    def test_infinite_point_row(self):
        p = Pencil(np.eye(2), [[0, 0], [0, 1]])
        fam = inclusion_family(p)
        assert fam.rows[0].combined == PointAtInfinity()

    def test_simplified_reduces_to_gerschgorin_disks(self):
        rng = np.random.default_rng(11)
        a = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
        p = Pencil(a, np.eye(5))
        fam = inclusion_family(p, "simplified")
        for i, row in enumerate(fam.rows):
            expected_radius = sum(abs(a[i, j]) for j in range(5) if j != i)
            assert isinstance(row.combined, Disk)
            assert row.combined.center == a[i, i]
            assert row.combined.radius == pytest.approx(expected_radius, rel=1e-15)

    def test_simplified_worked_example(self):
        fam = inclusion_family(A1B1, "simplified")
        assert fam.rows[0].combined == Disk(1.0, 4.0)

    def test_simplified_testmat_interior_row(self):
        # a = 2, b = 1, n = 3: middle row disk radius (4*(1/2) + 4)/(4*(1/2)) = 3
        p = make_testmat(3, 2.0, 1.0)
        fam = inclusion_family(p, "simplified")
        region = fam.rows[1].combined
        assert region.center == pytest.approx(1.0)
        assert region.radius == pytest.approx(3.0, rel=1e-15)

    def test_union_membership_worked_example(self):
        fam = inclusion_family(A1B1)
        assert family_union_membership(fam, 5.0 / 3.0 + 0j)
        assert not family_union_membership(fam, 10.0 + 0j)

    def test_whole_plane_row_makes_union_trivial(self):
        p = Pencil([[1, 2], [0, 1]], [[1, 2], [0, 1]])  # row 0 dominant in neither
        fam = inclusion_family(p)
        assert fam.rows[0].combined == WholePlane()
        assert family_union_membership(fam, 123.0 - 7j)
        assert family_union_membership(fam, INFTY)

    def test_unknown_variant_rejected(self):
        with pytest.raises(Exception):
            inclusion_family(A1B1, "fancy")


class TestFamilyProperties:
    def test_eigenvalue_containment_all_variants(self):
        rng = np.random.default_rng(2024)
        for _ in range(40):
            n = int(rng.integers(2, 9))
            p = dominant_pencil(rng, n)
            spectrum = eigenvalues_charpoly(p)
            for variant in ("plain", "tilde", "simplified"):
                fam = inclusion_family(p, variant)
                for z in spectrum.points():
                    tol = 0.0 if z is INFTY else 1e-8 * (1.0 + abs(z))
                    assert family_union_membership(fam, z, tol), (variant, z)

    def test_tilde_subset_of_plain_rowwise(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            n = int(rng.integers(2, 9))
            p = dominant_pencil(rng, n)
            plain = inclusion_family(p, "plain")
            tilde = inclusion_family(p, "tilde")
            regions = [r.combined for r in plain.rows] + [r.combined for r in tilde.rows]
            zs = grid_points(auto_viewport(regions), 30)
            for i in range(n):
                in_tilde = membership_mask(tilde.rows[i].combined, zs, tol=0.0)
                in_plain = membership_mask(plain.rows[i].combined, zs, tol=1e-10)
                assert not np.any(in_tilde & ~in_plain)
                # infinity point
                if membership(tilde.rows[i].combined, INFTY):
                    assert membership(plain.rows[i].combined, INFTY)

    def test_kostic_subset_of_plain_rowwise(self):
        rng = np.random.default_rng(6)
        for _ in range(25):
            n = int(rng.integers(2, 9))
            p = dominant_pencil(rng, n)
            plain = inclusion_family(p, "plain")
            regions = [r.combined for r in plain.rows]
            zs = grid_points(auto_viewport(regions), 30)
            for i in range(n):
                in_k = np.array([in_kostic_region(p, i, z) for z in zs])
                in_plain = membership_mask(plain.rows[i].combined, zs, tol=1e-10)
                assert not np.any(in_k & ~in_plain)
                if in_kostic_region(p, i, INFTY):
                    assert membership(plain.rows[i].combined, INFTY)

    def test_scaling_equivariance(self):
        rng = np.random.default_rng(8)
        p = dominant_pencil(rng, 5)
        s = 0.3 - 1.7j
        scaled = Pencil(s * p.a, s * p.b)
        for variant in ("plain", "tilde", "simplified"):
            fam = inclusion_family(p, variant)
            fam_scaled = inclusion_family(scaled, variant)
            for row, row_scaled in zip(fam.rows, fam_scaled.rows):
                assert _regions_close(row.combined, row_scaled.combined)


def _regions_close(r1, r2, tol=1e-12):
    if type(r1) is not type(r2):
        return False
    if isinstance(r1, (Disk, DiskComplement)):
        scale = 1.0 + abs(r1.center) + r1.radius
        return (
            abs(r1.center - r2.center) <= tol * scale
            and abs(r1.radius - r2.radius) <= tol * scale
        )
    if isinstance(r1, HalfPlane):
        return abs(r1.alpha - r2.alpha) <= tol * (1.0 + abs(r1.alpha))
    if isinstance(r1, Intersection):
        return _regions_close(r1.left, r2.left, tol) and _regions_close(r1.right, r2.right, tol)
    return True  # whole plane / point at infinity carry no parameters


@settings(max_examples=60)
@given(
    a_diag=st.floats(1.5, 10),
    b_diag=st.floats(1.5, 10),
    a_off=st.floats(0, 1),
    b_off=st.floats(0, 1),
)
def test_two_sided_rows_always_contain_the_eigenvalue(a_diag, b_diag, a_off, b_off):
    # 2x2 pencils with both rows dominant in both matrices: every finite
    # eigenvalue must be in the union of the combined regions of any variant.
    p = Pencil(
        [[a_diag, a_off], [a_off, a_diag]],
        [[b_diag, b_off], [b_off, b_diag]],
    )
    eigs = np.linalg.eigvals(np.linalg.solve(p.b, p.a))
    for variant in ("plain", "tilde", "simplified"):
        fam = inclusion_family(p, variant)
        for z in eigs:
            tol = 1e-9 * (1 + abs(z))
            assert family_union_membership(fam, complex(z), tol)


def test_family_union_mask_matches_pointwise():
    rng = np.random.default_rng(21)
    p = dominant_pencil(rng, 6)
    fam = inclusion_family(p)
    zs = rng.standard_normal(100) + 1j * rng.standard_normal(100)
    mask = family_union_mask(fam, zs, tol=1e-12)
    expected = np.array([family_union_membership(fam, z, tol=1e-12) for z in zs])
    assert np.array_equal(mask, expected)
