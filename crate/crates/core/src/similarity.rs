//! Scaling factors `λ = k + mτ` of the pattern and the self-similarities
//! `z ↦ λ(z - πy) + πy` they induce.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::Error;
use crate::generator::{generate_patch, CandidateBox, Patch};
use crate::golden::GoldenNumber;
use crate::projections::{
    grid_projector_internal, grid_projector_phys, projector_internal, projector_phys,
    projector_sym, GridMatrix, LatticePoint, SymCirculantMatrix,
};
use crate::vector::GoldenVector;
use crate::windows::{
    contraction_certificate, coset_windows, delta_lower_bound_squared, InternalPoint, Location,
    WindowPentagon,
};

/// `λ = k + mτ`, with conjugate `λ' = k + mτ'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ScalingFactor {
    pub k: i64,
    pub m: i64,
}

/// `(2m - k + 1) ≡ 0 (mod 5)` and `|k + mτ'| < 1/2`.
pub fn is_admissible(k: i64, m: i64) -> bool {
    if (2 * m - k + 1).rem_euclid(5) != 0 {
        return false;
    }
    let conj = ScalingFactor { k, m }.lambda_conj();
    (GoldenNumber::from_ratio(1, 0, 2) - conj.abs()).is_positive()
}

impl ScalingFactor {
    pub fn new(k: i64, m: i64) -> Self {
        ScalingFactor { k, m }
    }

    /// Checked constructor.
    pub fn admissible(k: i64, m: i64) -> Result<Self, Error> {
        if is_admissible(k, m) {
            Ok(ScalingFactor { k, m })
        } else {
            Err(Error::Inadmissible { k, m })
        }
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(self.k, self.m)
    }

    pub fn admissible_or_err(&self) -> Result<(), Error> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Inadmissible {
                k: self.k,
                m: self.m,
            })
        }
    }

    pub fn lambda(&self) -> GoldenNumber {
        GoldenNumber::from_integers(self.k, self.m)
    }

    pub fn lambda_conj(&self) -> GoldenNumber {
        self.lambda().conjugate()
    }

    /// Galois norm `k² + km - m²`.
    pub fn norm(&self) -> i64 {
        self.k * self.k + self.k * self.m - self.m * self.m
    }

    /// `(k₁ + m₁τ)(k₂ + m₂τ) = (k₁k₂ + m₁m₂) + (k₁m₂ + k₂m₁ + m₁m₂)τ`.
    pub fn compose(&self, other: &Self) -> Self {
        ScalingFactor {
            k: self.k * other.k + self.m * other.m,
            m: self.k * other.m + other.k * self.m + self.m * other.m,
        }
    }
}

/// All admissible `(k, m)` in the box, sorted by `|λ|`, then `k`, then `m`.
pub fn enumerate_factors(
    k_range: RangeInclusive<i64>,
    m_range: RangeInclusive<i64>,
) -> Vec<ScalingFactor> {
    let mut out: Vec<(GoldenNumber, ScalingFactor)> = k_range
        .flat_map(|k| m_range.clone().map(move |m| (k, m)))
        .filter(|&(k, m)| is_admissible(k, m))
        .map(|(k, m)| {
            let f = ScalingFactor::new(k, m);
            let l = f.lambda();
            (&l * &l, f)
        })
        .collect();
    out.sort_by(|(a, f), (b, g)| a.cmp(b).then(f.k.cmp(&g.k)).then(f.m.cmp(&g.m)));
    out.into_iter().map(|(_, f)| f).collect()
}

/// `S̃_λ = λπ + λ'π' + π''` assembled from the projectors, with no
/// admissibility check.
pub fn lift_from_projectors(
    lambda: &GoldenNumber,
    lambda_conj: &GoldenNumber,
) -> SymCirculantMatrix {
    projector_phys()
        .scale(lambda)
        .add(&projector_internal().scale(lambda_conj))
        .add(&projector_sym())
}

/// `S̃_λ = A(k + q, q, q - m)` with `q = (2m - k + 1)/5`, an integer matrix
/// for admissible factors.
pub fn lifted_scaling_matrix(f: &ScalingFactor) -> Result<SymCirculantMatrix, Error> {
    f.admissible_or_err()?;
    let q = (2 * f.m - f.k + 1) / 5;
    Ok(SymCirculantMatrix::new(
        GoldenNumber::from(f.k + q),
        GoldenNumber::from(q),
        GoldenNumber::from(q - f.m),
    ))
}

/// `S = λp + λ'p'` on grid coordinates.
pub fn grid_scaling_matrix(f: &ScalingFactor) -> Result<GridMatrix, Error> {
    f.admissible_or_err()?;
    Ok(grid_projector_phys()
        .scale(&f.lambda())
        .add(&grid_projector_internal().scale(&f.lambda_conj())))
}

/// Integer action of an admissible lift on a lattice point.
fn apply_integer_lift(params: [i64; 3], x: &LatticePoint) -> LatticePoint {
    let [a, b, c] = params;
    let x = x.coords();
    LatticePoint::new(core::array::from_fn(|i| {
        a * x[i] + b * (x[(i + 1) % 5] + x[(i + 4) % 5]) + c * (x[(i + 2) % 5] + x[(i + 3) % 5])
    }))
}

/// `z = S̃_λ(x - y) + y`.
pub fn image_point(
    f: &ScalingFactor,
    y: &LatticePoint,
    x: &LatticePoint,
) -> Result<LatticePoint, Error> {
    let params = lifted_scaling_matrix(f)?
        .integer_params()
        .expect("admissible lifts have integer entries");
    Ok(apply_integer_lift(params, &(*x - *y)) + *y)
}

/// A candidate inflation center `y ∈ L`; its physical position is `πy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InflationCenter {
    pub y: LatticePoint,
    /// `λ'(K_n - π'y) + π'y ⊂ K_n` for all `n`.
    pub certified: bool,
    /// `δ²` around the offset, when the strict contraction bound exists.
    pub delta_squared: Option<GoldenNumber>,
    /// `‖π'y - v‖² < δ²`, membership in the smaller ball-shaped center set.
    pub within_delta: bool,
}

impl InflationCenter {
    pub fn certify(f: &ScalingFactor, y: LatticePoint, v: &InternalPoint) -> Result<Self, Error> {
        if y.n() != 0 {
            return Err(Error::CenterNotInSublattice(y));
        }
        let conj = f.lambda_conj();
        let t = InternalPoint::of_lattice(&y);
        let delta_squared = delta_lower_bound_squared(&conj, v).ok();
        let within_delta = delta_squared
            .as_ref()
            .is_some_and(|d| &t.distance_squared(v) < d);
        Ok(InflationCenter {
            y,
            certified: contraction_certificate(&conj, &t, v),
            delta_squared,
            within_delta,
        })
    }
}

/// Float bound used to prune center candidates: a certified center `t` is the
/// fixed point of a contraction mapping each `K_n` into itself, so `t ∈ K_1`
/// and `‖t - v‖² ≤ 2/5`.
const CENTER_REACH_SQUARED: f64 = 0.4;

fn center_box(v: &InternalPoint, search_radius_squared: &GoldenNumber) -> CandidateBox {
    CandidateBox::new(
        search_radius_squared,
        &v.to_f64(),
        CENTER_REACH_SQUARED + 1e-7,
        0..=0,
    )
}

/// Slabs of the center search, for callers that split the work.
pub fn center_slabs(
    v: &InternalPoint,
    search_radius_squared: &GoldenNumber,
) -> RangeInclusive<i64> {
    center_box(v, search_radius_squared).slabs()
}

/// Certified centers in one slab of the search box, sorted.
pub fn find_centers_in_slab(
    f: &ScalingFactor,
    v: &InternalPoint,
    search_radius_squared: &GoldenNumber,
    x1: i64,
) -> Result<Vec<InflationCenter>, Error> {
    f.admissible_or_err()?;
    let cbox = center_box(v, search_radius_squared);
    let reach = GoldenNumber::from_ratio(2, 0, 5);
    let m = projector_internal().to_f64();
    let vf = v.to_f64();
    let mut ys = Vec::new();
    cbox.scan_slab(x1, |y| {
        let c = y.coords();
        let d: f64 = (0..5)
            .map(|i| {
                let t: f64 = (0..5).map(|j| m[i][j] * c[j] as f64).sum::<f64>() - vf[i];
                t * t
            })
            .sum();
        if d <= CENTER_REACH_SQUARED + 1e-7 {
            ys.push(y);
        }
    });
    let mut out = Vec::new();
    for y in ys {
        if InternalPoint::of_lattice(&y).distance_squared(v) > reach {
            continue;
        }
        let c = InflationCenter::certify(f, y, v)?;
        if c.certified {
            out.push(c);
        }
    }
    out.sort_by_key(|a| a.y);
    Ok(out)
}

/// All `y ∈ L` with `‖πy‖² ≤ R²` passing the contraction certificate.
pub fn find_centers(
    f: &ScalingFactor,
    v: &InternalPoint,
    search_radius_squared: &GoldenNumber,
) -> Result<Vec<InflationCenter>, Error> {
    let mut out = Vec::new();
    for x1 in center_slabs(v, search_radius_squared) {
        out.extend(find_centers_in_slab(f, v, search_radius_squared, x1)?);
    }
    out.sort_by_key(|a| a.y);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub factor: ScalingFactor,
    pub center: LatticePoint,
    pub points_tested: usize,
    /// Pattern points whose image is not a pattern point, sorted.
    pub failures: Vec<LatticePoint>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn window_for(windows: &[WindowPentagon; 4], n: i64) -> Option<&WindowPentagon> {
    (1..=4).contains(&n).then(|| &windows[(n - 1) as usize])
}

/// Checks that `S̃_λ(x - y) + y` stays in the pattern for every `x` in the
/// patch, using the integer lift. The patch must have been generated with
/// offset `v`.
pub fn verify_on_patch(
    f: &ScalingFactor,
    center: &InflationCenter,
    patch: &Patch,
) -> Result<VerificationReport, Error> {
    let v = patch.offset();
    let y = center.y;
    f.admissible_or_err()?;
    if y.n() != 0 {
        return Err(Error::CenterNotInSublattice(y));
    }
    if !contraction_certificate(&f.lambda_conj(), &InternalPoint::of_lattice(&y), v) {
        return Err(Error::NotCertified(y));
    }
    let params = lifted_scaling_matrix(f)?
        .integer_params()
        .expect("admissible lifts have integer entries");
    let windows = coset_windows(v);
    let mut failures = Vec::new();
    for x in patch.points() {
        let z = apply_integer_lift(params, &(*x - y)) + y;
        let ok = z.n() == x.n()
            && match window_for(&windows, z.n()) {
                Some(k) => match k.classify(&InternalPoint::of_lattice(&z)) {
                    Location::Inside => true,
                    Location::Boundary => return Err(Error::BoundaryHit(z)),
                    Location::Outside => false,
                },
                None => false,
            };
        if !ok {
            failures.push(*x);
        }
    }
    failures.sort_unstable();
    Ok(VerificationReport {
        factor: *f,
        center: y,
        points_tested: patch.len(),
        failures,
    })
}

/// Generates the pattern within `‖πx‖² ≤ R²` and verifies that every point
/// maps into the pattern.
pub fn verify_invariance(
    f: &ScalingFactor,
    center: &InflationCenter,
    v: &InternalPoint,
    inner_radius_squared: &GoldenNumber,
) -> Result<VerificationReport, Error> {
    f.admissible_or_err()?;
    let patch = generate_patch(v, inner_radius_squared)?;
    verify_on_patch(f, center, &patch)
}

/// Image test for an arbitrary lift `M`: is `M(x - y) + y` (not necessarily a
/// lattice point) in the same coset slice and strictly inside its window?
/// Returns the points that fail. No admissibility or certificate checks.
pub fn check_images(
    lift: &SymCirculantMatrix,
    y: &LatticePoint,
    v: &InternalPoint,
    points: &[LatticePoint],
) -> Result<Vec<LatticePoint>, Error> {
    let windows = coset_windows(v);
    let yv = y.to_golden();
    let mut failures = Vec::new();
    for x in points {
        let z: GoldenVector<5> = &lift.apply_int((*x - *y).coords()) + &yv;
        let ok = z.sum() == GoldenNumber::from(x.n())
            && match window_for(&windows, x.n()) {
                Some(k) => {
                    let internal = InternalPoint::new(projector_internal().apply(&z))?;
                    match k.classify(&internal) {
                        Location::Inside => true,
                        Location::Boundary => return Err(Error::BoundaryHit(*x)),
                        Location::Outside => false,
                    }
                }
                None => false,
            };
        if !ok {
            failures.push(*x);
        }
    }
    failures.sort_unstable();
    Ok(failures)
}

/// Cross-check by lookup: generates a patch large enough to contain every
/// image and tests set membership instead of windows.
pub fn verify_by_lookup(
    f: &ScalingFactor,
    center: &InflationCenter,
    v: &InternalPoint,
    inner_radius_squared: &GoldenNumber,
) -> Result<VerificationReport, Error> {
    f.admissible_or_err()?;
    let inner = generate_patch(v, inner_radius_squared)?;
    let y = center.y;
    // ‖πz‖ ≤ |λ|(R + ‖πy‖) + ‖πy‖; rounded up generously to an integer.
    let lam = f.lambda().to_f64().abs();
    let r = inner_radius_squared.to_f64().max(0.0);
    let py = y.physical_norm_squared_f64();
    let reach = lam * (isqrt_up(r) + isqrt_up(py)) + isqrt_up(py) + 1.0;
    let outer_r2 = GoldenNumber::from((reach * reach) as i64 + 1);
    let outer = generate_patch(v, &outer_r2)?;
    let mut failures = Vec::new();
    for x in inner.points() {
        if !outer.contains(&image_point(f, &y, x)?) {
            failures.push(*x);
        }
    }
    Ok(VerificationReport {
        factor: *f,
        center: y,
        points_tested: inner.len(),
        failures,
    })
}

/// Integer upper bound on `√x` for `x ≥ 0`.
fn isqrt_up(x: f64) -> f64 {
    let n = x as i64 + 1;
    (n.isqrt() + 1) as f64
}

/// The map `λ(z - πy) + πy` on physical vectors.
pub fn physical_similarity(
    f: &ScalingFactor,
    y: &LatticePoint,
    z: &GoldenVector<5>,
) -> GoldenVector<5> {
    let py = y.physical();
    let lam = f.lambda();
    &(z - &py).scale(&lam) + &py
}

/// `λ = 1`, the identity for [`ScalingFactor::compose`]; not admissible.
pub fn unit_factor() -> ScalingFactor {
    ScalingFactor::new(1, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(is_admissible(2, 3));
        assert!(!is_admissible(0, 1));
        assert!(!is_admissible(1, 0));
        assert!(is_admissible(-1, -1));
        assert!(is_admissible(6, 10));
        assert_eq!(ScalingFactor::new(6, 10).norm(), -4);
    }

    #[test]
    fn lifted_matrices() {
        let m = lifted_scaling_matrix(&ScalingFactor::new(2, 3)).unwrap();
        assert_eq!(m.integer_params(), Some([3, 1, -2]));
        let m = lifted_scaling_matrix(&ScalingFactor::new(-1, -1)).unwrap();
        assert_eq!(m.integer_params(), Some([-1, 0, 1]));
        let f = ScalingFactor::new(2, 3);
        let diff = LatticePoint::unit(1) - LatticePoint::unit(2);
        assert_eq!(
            image_point(&f, &LatticePoint::origin(), &diff).unwrap().n(),
            0
        );
        assert_eq!(
            lifted_scaling_matrix(&ScalingFactor::new(0, 1)),
            Err(Error::Inadmissible { k: 0, m: 1 })
        );
    }

    #[test]
    fn lift_agrees_with_projector_sum() {
        for f in enumerate_factors(-12..=12, -12..=12) {
            let closed = lifted_scaling_matrix(&f).unwrap();
            assert_eq!(closed, lift_from_projectors(&f.lambda(), &f.lambda_conj()));
        }
    }

    #[test]
    fn grid_scaling() {
        let f = ScalingFactor::new(2, 3);
        let s = grid_scaling_matrix(&f).unwrap();
        assert_eq!(s.integer_params(), Some([2, 5, 3]));
        let p2 = grid_projector_internal().expand();
        assert_eq!(p2.mul(&s.expand()), p2.scale(&f.lambda_conj()));
    }

    #[test]
    fn composition() {
        let f = ScalingFactor::new(2, 3);
        let g = ScalingFactor::new(-1, -1);
        let h = f.compose(&g);
        assert_eq!(h.lambda(), f.lambda() * g.lambda());
        assert!(h.is_admissible());
        assert_eq!(f.compose(&unit_factor()), f);
    }

    #[test]
    fn origin_is_a_center_for_tau_fourth() {
        let f = ScalingFactor::new(2, 3);
        let v = InternalPoint::default_offset();
        let c = InflationCenter::certify(&f, LatticePoint::origin(), &v).unwrap();
        assert!(c.certified);
        assert!(c.delta_squared.is_some());
        assert!(InflationCenter::certify(&f, LatticePoint::unit(1), &v).is_err());
    }

    #[test]
    fn small_verification_passes() {
        let f = ScalingFactor::new(2, 3);
        let v = InternalPoint::default_offset();
        let c = InflationCenter::certify(&f, LatticePoint::origin(), &v).unwrap();
        let report = verify_invariance(&f, &c, &v, &GoldenNumber::from(4)).unwrap();
        assert!(report.points_tested > 0);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(
            verify_invariance(&ScalingFactor::new(1, 0), &c, &v, &GoldenNumber::from(4)),
            Err(Error::Inadmissible { k: 1, m: 0 })
        );
    }

    #[test]
    fn grid_matrix_matches_lift_on_sum_zero_points() {
        let f = ScalingFactor::new(2, 3);
        let s = grid_scaling_matrix(&f).unwrap();
        for c in [[1, -1, 0, 0, 0], [2, 0, -3, 1, 0], [0, 4, -1, -1, -2]] {
            let x = LatticePoint::new(c);
            let z = image_point(&f, &LatticePoint::origin(), &x).unwrap();
            assert_eq!(
                s.apply(&x.to_grid_coords().to_golden()),
                z.to_grid_coords().to_golden()
            );
        }
    }

    #[test]
    fn wrong_congruence_is_not_integral() {
        for (k, m) in [(0, 1), (1, 1), (3, 0), (2, 2)] {
            let f = ScalingFactor::new(k, m);
            assert!(lift_from_projectors(&f.lambda(), &f.lambda_conj())
                .integer_params()
                .is_none());
        }
    }

    #[test]
    fn affine_map_identities() {
        let f = ScalingFactor::new(-1, -1);
        let y = LatticePoint::new([1, 0, -1, 2, -2]);
        let conj = f.lambda_conj();
        for c in [[1, 0, 0, 0, 0], [3, -2, 5, 0, 1], [-4, 1, 1, 1, 2]] {
            let x = LatticePoint::new(c);
            let z = image_point(&f, &y, &x).unwrap();
            assert_eq!(z.n(), x.n());
            assert_eq!(z.physical(), physical_similarity(&f, &y, &x.physical()));
            let lhs = (z - y).internal_norm_squared();
            assert_eq!(lhs, &(&conj * &conj) * &(x - y).internal_norm_squared());
        }
    }

    #[test]
    fn center_counts_grow() {
        let f = ScalingFactor::new(2, 3);
        let v = InternalPoint::default_offset();
        let small = find_centers(&f, &v, &GoldenNumber::from(25)).unwrap();
        let large = find_centers(&f, &v, &GoldenNumber::from(100)).unwrap();
        assert!(!small.is_empty());
        assert!(large.len() > small.len());
        assert!(small.iter().all(|c| large.contains(c)));
        assert!(small.iter().any(|c| c.y == LatticePoint::origin()));
        assert!(small.iter().all(|c| c.certified && c.y.n() == 0));
    }
}
