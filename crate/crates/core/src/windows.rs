//! Pentagonal acceptance windows in the internal space `E'`.
//!
//! Orientation tests run in the (non-orthonormal) chart spanned by
//! `π'ε₁, π'ε₂`; metric quantities use the ambient inner product.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Sub};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::feasibility::{is_feasible, HalfPlane};
use crate::golden::GoldenNumber;
use crate::projections::{projector_internal, projector_phys, Generator, LatticePoint};
use crate::vector::GoldenVector;

/// A point of `E'`: coordinate sum zero and fixed by `π'`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InternalPoint(GoldenVector<5>);

impl InternalPoint {
    pub fn new(coords: GoldenVector<5>) -> Result<Self, Error> {
        if projector_internal().apply(&coords) != coords {
            return Err(Error::NotInternal);
        }
        Ok(InternalPoint(coords))
    }

    pub fn origin() -> Self {
        InternalPoint(GoldenVector::zero())
    }

    /// `π'x` for a lattice point.
    pub fn of_lattice(x: &LatticePoint) -> Self {
        InternalPoint(x.internal())
    }

    /// `s·π'ε₁`, the family the default offset belongs to.
    pub fn along_first_axis(s: &GoldenNumber) -> Self {
        Self::of_lattice(&LatticePoint::unit(1)).scale(s)
    }

    /// The default generic offset `(1/4)π'ε₁`.
    pub fn default_offset() -> Self {
        Self::along_first_axis(&GoldenNumber::from_ratio(1, 0, 4))
    }

    pub fn coords(&self) -> &GoldenVector<5> {
        &self.0
    }

    pub fn scale(&self, s: &GoldenNumber) -> Self {
        InternalPoint(self.0.scale(s))
    }

    pub fn dot(&self, other: &Self) -> GoldenNumber {
        self.0.dot(&other.0)
    }

    pub fn norm_squared(&self) -> GoldenNumber {
        self.0.norm_squared()
    }

    pub fn distance_squared(&self, other: &Self) -> GoldenNumber {
        (self - other).norm_squared()
    }

    /// Linear D10 action (the internal space is invariant).
    pub fn act(&self, g: Generator) -> Self {
        InternalPoint(GoldenVector(g.apply(&self.0 .0)))
    }

    /// Coordinates in the chart `{π'ε₁, π'ε₂}`.
    ///
    /// The Gram system has matrix `[[2/5, -τ/5], [-τ/5, 2/5]]` and right-hand
    /// side `(z₁, z₂)`; its inverse determinant is `5(2 + τ)`.
    pub fn planar(&self) -> PlanarCoords {
        let two_plus_tau = GoldenNumber::from_integers(2, 1);
        let tau = GoldenNumber::tau();
        let (r1, r2) = (&self.0[0], &self.0[1]);
        let alpha = &two_plus_tau * (r1.scale_int(2) + &tau * r2);
        let beta = &two_plus_tau * (&tau * r1 + r2.scale_int(2));
        PlanarCoords { alpha, beta }
    }

    pub fn to_f64(&self) -> [f64; 5] {
        self.0.to_f64()
    }
}

impl Add for &InternalPoint {
    type Output = InternalPoint;
    fn add(self, rhs: Self) -> InternalPoint {
        InternalPoint(&self.0 + &rhs.0)
    }
}

impl Sub for &InternalPoint {
    type Output = InternalPoint;
    fn sub(self, rhs: Self) -> InternalPoint {
        InternalPoint(&self.0 - &rhs.0)
    }
}

/// Coordinates `(α, β)` of `α·π'ε₁ + β·π'ε₂`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PlanarCoords {
    pub alpha: GoldenNumber,
    pub beta: GoldenNumber,
}

impl PlanarCoords {
    pub fn new(alpha: GoldenNumber, beta: GoldenNumber) -> Self {
        PlanarCoords { alpha, beta }
    }

    pub fn to_internal(&self) -> InternalPoint {
        let b1 = InternalPoint::of_lattice(&LatticePoint::unit(1));
        let b2 = InternalPoint::of_lattice(&LatticePoint::unit(2));
        &b1.scale(&self.alpha) + &b2.scale(&self.beta)
    }
}

/// Sign of the turn `a → b → c` in the chart.
pub fn orientation(a: &PlanarCoords, b: &PlanarCoords, c: &PlanarCoords) -> i32 {
    let cross =
        (&b.alpha - &a.alpha) * (&c.beta - &a.beta) - (&b.beta - &a.beta) * (&c.alpha - &a.alpha);
    cross.signum()
}

/// Convex hull in counter-clockwise chart order, collinear points dropped.
pub fn convex_hull(points: &[PlanarCoords]) -> Vec<PlanarCoords> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<PlanarCoords> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: alloc::boxed::Box<dyn Iterator<Item = &PlanarCoords>> = if pass == 0 {
            alloc::boxed::Box::new(pts.iter())
        } else {
            alloc::boxed::Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && orientation(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p.clone());
        }
        hull.pop();
    }
    hull
}

/// `π'ε_j`, vertex `j` (1-based) of the unit pentagon `Ω`.
pub fn omega_vertex(j: usize) -> Result<InternalPoint, Error> {
    if !(1..=5).contains(&j) {
        return Err(Error::VertexIndex(j));
    }
    Ok(InternalPoint::of_lattice(&LatticePoint::unit(j)))
}

/// Scale of `Ω` in the window of coset `n`: `+1, -τ, +τ, -1` for `n = 1..4`.
pub fn coset_scale(n: i64) -> Result<GoldenNumber, Error> {
    match n {
        1 => Ok(GoldenNumber::one()),
        2 => Ok(-GoldenNumber::tau()),
        3 => Ok(GoldenNumber::tau()),
        4 => Ok(-GoldenNumber::one()),
        _ => Err(Error::EmptyCoset(n)),
    }
}

/// Boundary order of `Ω`'s vertices (zero-based): `π'ε_j` sits at angle
/// `-144°·(j-1)`, so walking `1, 3, 5, 2, 4` goes once around.
const CYCLE: [usize; 5] = [0, 2, 4, 1, 3];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// The closed pentagon `scale·Ω + center`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowPentagon {
    scale: GoldenNumber,
    center: InternalPoint,
    vertices: [InternalPoint; 5],
    cycle: [PlanarCoords; 5],
    turn: i32,
}

impl WindowPentagon {
    pub fn new(scale: GoldenNumber, center: InternalPoint) -> Result<Self, Error> {
        if scale.is_zero() {
            return Err(Error::DegenerateWindow);
        }
        let vertices: [InternalPoint; 5] = core::array::from_fn(|j| {
            &center + &InternalPoint::of_lattice(&LatticePoint::unit(j + 1)).scale(&scale)
        });
        let cycle = CYCLE.map(|j| vertices[j].planar());
        let turn = orientation(&cycle[0], &cycle[1], &cycle[2]);
        Ok(WindowPentagon {
            scale,
            center,
            vertices,
            cycle,
            turn,
        })
    }

    pub fn scale(&self) -> &GoldenNumber {
        &self.scale
    }

    pub fn center(&self) -> &InternalPoint {
        &self.center
    }

    /// Vertex `scale·π'ε_j + center`, indexed zero-based by `j - 1`.
    pub fn vertices(&self) -> &[InternalPoint; 5] {
        &self.vertices
    }

    /// Vertices in boundary order, in chart coordinates.
    pub fn boundary_cycle(&self) -> &[PlanarCoords; 5] {
        &self.cycle
    }

    /// Vertices in boundary order.
    pub fn boundary_vertices(&self) -> [&InternalPoint; 5] {
        CYCLE.map(|j| &self.vertices[j])
    }

    pub fn classify(&self, z: &InternalPoint) -> Location {
        self.classify_planar(&z.planar())
    }

    pub fn classify_planar(&self, z: &PlanarCoords) -> Location {
        classify_polygon(&self.cycle, self.turn, z)
    }

    pub fn contains(&self, z: &InternalPoint) -> bool {
        self.classify(z) != Location::Outside
    }

    /// Squared circumradius `scale²·2/5`.
    pub fn circumradius_squared(&self) -> GoldenNumber {
        &self.scale * &self.scale * GoldenNumber::from_ratio(2, 0, 5)
    }

    /// Squared distance from `z` to the nearest edge line. For points inside
    /// the pentagon this is the squared distance to its boundary.
    pub fn boundary_distance_squared(&self, z: &InternalPoint) -> GoldenNumber {
        let ring = self.boundary_vertices();
        (0..5)
            .map(|i| line_distance_squared(z, ring[i], ring[(i + 1) % 5]))
            .min()
            .expect("pentagon has edges")
    }
}

/// Classifies `z` against a convex polygon given in boundary order with
/// orientation sign `turn`.
pub fn classify_polygon(cycle: &[PlanarCoords], turn: i32, z: &PlanarCoords) -> Location {
    let mut on_edge = false;
    for i in 0..cycle.len() {
        let s = orientation(&cycle[i], &cycle[(i + 1) % cycle.len()], z) * turn;
        if s < 0 {
            return Location::Outside;
        }
        on_edge |= s == 0;
    }
    if on_edge {
        Location::Boundary
    } else {
        Location::Inside
    }
}

fn line_distance_squared(z: &InternalPoint, a: &InternalPoint, b: &InternalPoint) -> GoldenNumber {
    let d = b - a;
    let w = z - a;
    let proj = w.dot(&d);
    w.norm_squared() - &proj * &proj / d.norm_squared()
}

/// The window `K_n = v + σ_n Ω` of coset `n` in `1..=4`.
pub fn coset_window(n: i64, v: &InternalPoint) -> Result<WindowPentagon, Error> {
    WindowPentagon::new(coset_scale(n)?, v.clone())
}

/// All four coset windows for offset `v`, indexed by `n - 1`.
pub fn coset_windows(v: &InternalPoint) -> [WindowPentagon; 4] {
    core::array::from_fn(|i| coset_window(i as i64 + 1, v).expect("cosets 1..=4 carry windows"))
}

/// Builds the constraints `0 ≤ x_j - v_j - (πy)_j ≤ 1` with
/// `πy = s·πε₁ + t·πε₂` over the unknowns `(s, t)`.
fn strip_constraints(x: &LatticePoint, v: &InternalPoint, strict: bool) -> [HalfPlane; 10] {
    let pi = projector_phys();
    let one = GoldenNumber::one();
    core::array::from_fn(|row| {
        let j = row / 2;
        let a = pi.entry(j, 0).clone();
        let b = pi.entry(j, 1).clone();
        let shift = GoldenNumber::from(x.coords()[j]) - &v.coords()[j];
        if row % 2 == 0 {
            // (πy)_j ≤ x_j - v_j
            HalfPlane::new(a, b, shift, strict)
        } else {
            // -(πy)_j ≤ 1 - x_j + v_j
            HalfPlane::new(-a, -b, &one - &shift, strict)
        }
    })
}

/// Strip-projection membership: is there `y ∈ E` with `x - y ∈ v + [0, 1]⁵`?
pub fn strip_feasible(x: &LatticePoint, v: &InternalPoint) -> bool {
    is_feasible(&strip_constraints(x, v, false))
}

/// Like [`strip_feasible`] but separating interior points (strictly inside
/// the open strip) from points only reached on its boundary.
pub fn strip_classify(x: &LatticePoint, v: &InternalPoint) -> Location {
    if !strip_feasible(x, v) {
        Location::Outside
    } else if is_feasible(&strip_constraints(x, v, true)) {
        Location::Inside
    } else {
        Location::Boundary
    }
}

fn certificate_holds(
    lambda_conj: &GoldenNumber,
    t: &InternalPoint,
    v: &InternalPoint,
    strict: bool,
) -> bool {
    coset_windows(v).iter().all(|k| {
        k.vertices().iter().all(|u| {
            let image = &(u - t).scale(lambda_conj) + t;
            match k.classify(&image) {
                Location::Inside => true,
                Location::Boundary => !strict,
                Location::Outside => false,
            }
        })
    })
}

/// Does `λ'(K_n - t) + t ⊂ K_n` hold for every coset `n`? Convexity reduces
/// the inclusion to the five image vertices.
pub fn contraction_certificate(
    lambda_conj: &GoldenNumber,
    t: &InternalPoint,
    v: &InternalPoint,
) -> bool {
    certificate_holds(lambda_conj, t, v, false)
}

/// The certificate with every image vertex strictly inside.
pub fn strict_contraction_certificate(
    lambda_conj: &GoldenNumber,
    t: &InternalPoint,
    v: &InternalPoint,
) -> bool {
    certificate_holds(lambda_conj, t, v, true)
}

/// Squared radius `δ²` of a ball of centers around `v` that all pass the
/// certificate: `δ = s_min / |1 - λ'|`, `s_min` being the least distance from
/// an image vertex of `λ'(K_n - v) + v` to `∂K_n`.
pub fn delta_lower_bound_squared(
    lambda_conj: &GoldenNumber,
    v: &InternalPoint,
) -> Result<GoldenNumber, Error> {
    if lambda_conj.abs() >= GoldenNumber::one()
        || !strict_contraction_certificate(lambda_conj, v, v)
    {
        return Err(Error::NonPositiveSlack);
    }
    let slack = coset_windows(v)
        .iter()
        .flat_map(|k| {
            k.vertices().iter().map(move |u| {
                let image = &(u - v).scale(lambda_conj) + v;
                k.boundary_distance_squared(&image)
            })
        })
        .min()
        .expect("windows have vertices");
    let shrink = GoldenNumber::one() - lambda_conj;
    Ok(slack / (&shrink * &shrink))
}

impl PartialOrd for Location {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Location {
    fn cmp(&self, other: &Self) -> Ordering {
        let rank = |l: &Location| match l {
            Location::Inside => 0,
            Location::Boundary => 1,
            Location::Outside => 2,
        };
        rank(self).cmp(&rank(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fifth(a: i64, b: i64) -> GoldenNumber {
        GoldenNumber::from_ratio(a, b, 5)
    }

    #[test]
    fn first_omega_vertex() {
        let w = omega_vertex(1).unwrap();
        let expected = [
            fifth(2, 0),
            fifth(0, -1),
            fifth(-1, 1),
            fifth(-1, 1),
            fifth(0, -1),
        ];
        assert_eq!(w.coords().0, expected);
        assert_eq!(omega_vertex(0), Err(Error::VertexIndex(0)));
        assert_eq!(omega_vertex(6), Err(Error::VertexIndex(6)));
    }

    #[test]
    fn omega_is_centered_and_regular() {
        let sum = (1..=5).fold(InternalPoint::origin(), |acc, j| {
            &acc + &omega_vertex(j).unwrap()
        });
        assert_eq!(sum, InternalPoint::origin());
        for j in 1..=5 {
            assert_eq!(omega_vertex(j).unwrap().norm_squared(), fifth(2, 0));
        }
    }

    #[test]
    fn internal_point_rejects_physical_vectors() {
        let x = LatticePoint::unit(1);
        assert!(InternalPoint::new(x.physical()).is_err());
        assert!(InternalPoint::new(x.internal()).is_ok());
        assert!(InternalPoint::new(GoldenVector::from_integers([1; 5])).is_err());
    }

    #[test]
    fn coset_windows_scales() {
        let v = InternalPoint::default_offset();
        let k3 = coset_window(3, &v).unwrap();
        assert_eq!(k3.scale(), &GoldenNumber::tau());
        assert_eq!(k3.center(), &v);
        let k1 = coset_window(1, &v).unwrap();
        for j in 1..=5 {
            assert_eq!(k1.vertices()[j - 1], &v + &omega_vertex(j).unwrap());
        }
        assert_eq!(coset_window(2, &v).unwrap().scale(), &-GoldenNumber::tau());
        assert_eq!(coset_window(4, &v).unwrap().scale(), &-GoldenNumber::one());
        assert_eq!(coset_window(0, &v), Err(Error::EmptyCoset(0)));
        assert_eq!(coset_window(5, &v), Err(Error::EmptyCoset(5)));
        assert_eq!(
            WindowPentagon::new(GoldenNumber::zero(), v),
            Err(Error::DegenerateWindow)
        );
    }

    #[test]
    fn chart_basics() {
        let e1 = omega_vertex(1).unwrap().planar();
        assert_eq!(e1, PlanarCoords::new(1.into(), 0.into()));
        assert_eq!(
            omega_vertex(2).unwrap().planar(),
            PlanarCoords::new(0.into(), 1.into())
        );
        assert_eq!(
            InternalPoint::origin().planar(),
            PlanarCoords::new(0.into(), 0.into())
        );
        let z = InternalPoint::of_lattice(&LatticePoint::new([3, -1, 4, 1, -5]));
        assert_eq!(z.planar().to_internal(), z);
    }

    #[test]
    fn classification() {
        let v = InternalPoint::default_offset();
        for n in 1..=4 {
            let k = coset_window(n, &v).unwrap();
            assert_eq!(k.classify(&v), Location::Inside);
            for u in k.vertices() {
                assert_eq!(k.classify(u), Location::Boundary);
                let far = &(u - &v).scale(&2.into()) + &v;
                assert_eq!(k.classify(&far), Location::Outside);
                let mid = &(u - &v).scale(&GoldenNumber::from_ratio(1, 0, 2)) + &v;
                assert_eq!(k.classify(&mid), Location::Inside);
            }
            let ring = k.boundary_vertices();
            for i in 0..5 {
                let half = GoldenNumber::from_ratio(1, 0, 2);
                let edge_mid = (ring[i] + ring[(i + 1) % 5]).scale(&half);
                assert_eq!(k.classify(&edge_mid), Location::Boundary);
            }
        }
    }

    #[test]
    fn classification_ignores_cyclic_relabeling() {
        let v = InternalPoint::default_offset();
        let k = coset_window(2, &v).unwrap();
        let probes: Vec<InternalPoint> = [
            [1, 0, 0, 0, 0],
            [0, 1, 1, 0, 0],
            [2, -1, 0, 1, 0],
            [1, 1, 1, 0, 0],
        ]
        .iter()
        .map(|c| InternalPoint::of_lattice(&LatticePoint::new(*c)))
        .collect();
        let base = k.boundary_cycle().to_vec();
        for shift in 0..5 {
            let rotated: Vec<_> = (0..5).map(|i| base[(i + shift) % 5].clone()).collect();
            for z in &probes {
                assert_eq!(
                    classify_polygon(&rotated, k.turn, &z.planar()),
                    k.classify(z)
                );
            }
        }
    }

    #[test]
    fn strip_examples() {
        let v = InternalPoint::default_offset();
        assert!(!strip_feasible(&LatticePoint::origin(), &v));
        assert!(strip_feasible(&LatticePoint::unit(1), &v));
        assert!(!strip_feasible(&LatticePoint::new([2, 1, 1, 1, 1]), &v));
        assert_eq!(
            strip_classify(&LatticePoint::unit(1), &InternalPoint::origin()),
            Location::Boundary
        );
        // v = 0 puts the origin on the degenerate slice at sum 0
        assert_eq!(
            strip_classify(&LatticePoint::origin(), &InternalPoint::origin()),
            Location::Boundary
        );
    }

    #[test]
    fn certificate_examples() {
        let v = InternalPoint::default_offset();
        // λ' = 1 is the identity map, so only other values with |λ'| ≥ 1 fail.
        assert!(contraction_certificate(&GoldenNumber::one(), &v, &v));
        for big in [
            GoldenNumber::from(-1),
            GoldenNumber::tau(),
            -GoldenNumber::tau(),
            GoldenNumber::from(2),
        ] {
            assert!(!contraction_certificate(&big, &v, &v), "{big}");
        }
        let small = GoldenNumber::from_integers(2, 3).conjugate();
        assert!(contraction_certificate(&small, &v, &v));
        assert!(strict_contraction_certificate(&small, &v, &v));
        assert!(contraction_certificate(&GoldenNumber::zero(), &v, &v));
        let inside_all = &v
            + &omega_vertex(1)
                .unwrap()
                .scale(&GoldenNumber::from_ratio(1, 0, 10));
        assert!(contraction_certificate(
            &GoldenNumber::zero(),
            &inside_all,
            &v
        ));
        let outside = &v + &omega_vertex(1).unwrap().scale(&GoldenNumber::from(3));
        assert!(!contraction_certificate(
            &GoldenNumber::zero(),
            &outside,
            &v
        ));
    }

    #[test]
    fn delta_at_zero_contraction_is_inradius() {
        let v = InternalPoint::default_offset();
        let d2 = delta_lower_bound_squared(&GoldenNumber::zero(), &v).unwrap();
        assert_eq!(d2, GoldenNumber::from_ratio(1, 1, 10));
        let origin = InternalPoint::origin();
        assert_eq!(
            delta_lower_bound_squared(&GoldenNumber::zero(), &origin).unwrap(),
            GoldenNumber::from_ratio(1, 1, 10)
        );
        assert_eq!(
            delta_lower_bound_squared(&GoldenNumber::one(), &v),
            Err(Error::NonPositiveSlack)
        );
    }

    #[test]
    fn delta_grows_as_contraction_shrinks() {
        let v = InternalPoint::default_offset();
        let l = GoldenNumber::from_integers(2, 3).conjugate();
        let d_full = delta_lower_bound_squared(&l, &v).unwrap();
        let half = &l * GoldenNumber::from_ratio(1, 0, 2);
        assert!(delta_lower_bound_squared(&half, &v).unwrap() >= d_full);
        assert!(d_full.is_positive());
    }
}
