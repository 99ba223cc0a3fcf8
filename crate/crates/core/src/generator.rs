//! Finite patches of the vertex pattern, by both the model-set and the
//! strip-projection definitions.
//!
//! Candidates are lattice points `x` with coset index `n` in a small range,
//! physical norm `‖πx‖² ≤ R²`, and an internal projection close enough to the
//! offset to possibly be accepted. The last two tests first run in floating
//! point with a wide margin; anything not clearly decided there is settled
//! exactly, so every accept/reject/boundary outcome is exact.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::Error;
use crate::golden::{GoldenNumber, TAU_F64};
use crate::projections::{projector_internal, LatticePoint};
use crate::windows::{coset_windows, strip_classify, InternalPoint, Location, WindowPentagon};

/// Absolute slack for float pre-tests. Float error on the quantities
/// involved stays below 1e-12 for any box this crate enumerates.
const FILTER_MARGIN: f64 = 1e-7;

/// How membership of a candidate is decided.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Method {
    /// `x ∈ L_n` and `π'x ∈ K_n` for `n ∈ 1..=4`.
    ModelSet,
    /// `π⊥x ∈ π⊥(v + [0, 1]⁵)`, decided by two-variable feasibility.
    Strip,
}

/// Conservative integer ball of candidates around the (rounded) offset.
#[derive(Clone, Debug)]
pub struct CandidateBox {
    radius_squared: GoldenNumber,
    radius_f64: f64,
    cosets: RangeInclusive<i64>,
    center: [i64; 5],
    norm_bound: i64,
    coord_bound: i64,
}

fn round_f64(x: f64) -> i64 {
    if x >= 0.0 {
        (x + 0.5) as i64
    } else {
        -((0.5 - x) as i64)
    }
}

impl CandidateBox {
    /// For `v ∈ E'`, `‖x - v‖² = ‖πx‖² + ‖π'x - v‖² + n²/5`. Given a bound on
    /// `‖π'x - v‖²` (`reach_squared`) and on `|n|`, every candidate lies within
    /// `√(R² + reach² + n²/5) + ‖v - c‖` of the integer point `c` nearest `v`,
    /// and `‖v - c‖ ≤ √5/2 < 2`.
    pub fn new(
        radius_squared: &GoldenNumber,
        offset: &[f64; 5],
        reach_squared: f64,
        cosets: RangeInclusive<i64>,
    ) -> Self {
        let radius_f64 = radius_squared.to_f64();
        let n_max = cosets.start().abs().max(cosets.end().abs()) as f64;
        let total = radius_f64.max(0.0) + reach_squared.max(0.0) + n_max * n_max / 5.0;
        let root = (total as i64 + 1).isqrt() + 1;
        let norm_bound = (root + 2) * (root + 2);
        CandidateBox {
            radius_squared: radius_squared.clone(),
            radius_f64,
            cosets,
            center: offset.map(round_f64),
            norm_bound,
            coord_bound: norm_bound.isqrt(),
        }
    }

    pub fn radius_squared(&self) -> &GoldenNumber {
        &self.radius_squared
    }

    /// Range of the first coordinate; each value is an independent slab.
    pub fn slabs(&self) -> RangeInclusive<i64> {
        self.center[0] - self.coord_bound..=self.center[0] + self.coord_bound
    }

    fn in_ball(&self, x: &LatticePoint) -> bool {
        let approx = x.physical_norm_squared_f64();
        if approx > self.radius_f64 + FILTER_MARGIN {
            false
        } else if approx < self.radius_f64 - FILTER_MARGIN {
            true
        } else {
            x.physical_norm_squared() <= self.radius_squared
        }
    }

    /// Visits every candidate whose first coordinate is `x1`.
    pub fn scan_slab(&self, x1: i64, mut visit: impl FnMut(LatticePoint)) {
        let b = self.coord_bound;
        let nb = self.norm_bound;
        let c = self.center;
        let d1 = x1 - c[0];
        let q1 = d1 * d1;
        if q1 > nb {
            return;
        }
        let center_sum: i64 = c.iter().sum();
        for d2 in -b..=b {
            let q2 = q1 + d2 * d2;
            if q2 > nb {
                continue;
            }
            for d3 in -b..=b {
                let q3 = q2 + d3 * d3;
                if q3 > nb {
                    continue;
                }
                for d4 in -b..=b {
                    let q4 = q3 + d4 * d4;
                    if q4 > nb {
                        continue;
                    }
                    let partial = d1 + d2 + d3 + d4;
                    for n in self.cosets.clone() {
                        let d5 = n - center_sum - partial;
                        if q4 + d5 * d5 > nb {
                            continue;
                        }
                        let x = LatticePoint::new([x1, c[1] + d2, c[2] + d3, c[3] + d4, c[4] + d5]);
                        if self.in_ball(&x) {
                            visit(x);
                        }
                    }
                }
            }
        }
    }

    pub fn scan(&self, mut visit: impl FnMut(LatticePoint)) {
        for x1 in self.slabs() {
            self.scan_slab(x1, &mut visit);
        }
    }
}

fn internal_f64(m: &[[f64; 5]; 5], x: &LatticePoint) -> [f64; 5] {
    let c = x.coords();
    core::array::from_fn(|i| (0..5).map(|j| m[i][j] * c[j] as f64).sum())
}

fn dist2_f64(a: &[f64; 5], b: &[f64; 5]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum()
}

/// Largest `‖π'w‖²` over cube vertices `w ∈ {0,1}⁵` with exactly `n` ones,
/// i.e. over the vertices of the slice `[0,1]⁵ ∩ {Σ = n}`.
fn cube_slice_reach_squared(m: &[[f64; 5]; 5], n: i64) -> f64 {
    (0u32..32)
        .filter(|bits| i64::from(bits.count_ones()) == n)
        .map(|bits| {
            let w = LatticePoint::new(core::array::from_fn(|j| i64::from(bits >> j & 1)));
            internal_f64(m, &w).iter().map(|c| c * c).sum::<f64>()
        })
        .fold(0.0, f64::max)
}

/// Decides membership of lattice points for a fixed offset.
#[derive(Clone, Debug)]
pub struct Membership {
    method: Method,
    offset: InternalPoint,
    offset_f64: [f64; 5],
    internal_f64: [[f64; 5]; 5],
    windows: [WindowPentagon; 4],
    /// Float bound on `‖π'x - v‖²` per coset index `0..=5`.
    reach: [f64; 6],
}

impl Membership {
    pub fn new(method: Method, offset: &InternalPoint) -> Self {
        let pm = projector_internal().to_f64();
        let reach = match method {
            Method::ModelSet => {
                // circumradius² of σ_n Ω, with σ² ∈ {1, τ², τ², 1}
                let t2 = TAU_F64 * TAU_F64;
                [-1.0, 0.4, 0.4 * t2, 0.4 * t2, 0.4, -1.0]
            }
            Method::Strip => core::array::from_fn(|n| cube_slice_reach_squared(&pm, n as i64)),
        };
        Membership {
            method,
            offset: offset.clone(),
            offset_f64: offset.to_f64(),
            internal_f64: pm,
            windows: coset_windows(offset),
            reach,
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn offset(&self) -> &InternalPoint {
        &self.offset
    }

    pub fn windows(&self) -> &[WindowPentagon; 4] {
        &self.windows
    }

    /// Coset indices that can contain members.
    pub fn cosets(&self) -> RangeInclusive<i64> {
        match self.method {
            Method::ModelSet => 1..=4,
            Method::Strip => 0..=5,
        }
    }

    /// Float bound on `‖π'x - v‖²` over all possible members.
    pub fn reach_squared(&self) -> f64 {
        self.reach.iter().copied().fold(0.0, f64::max) + FILTER_MARGIN
    }

    pub fn candidate_box(&self, radius_squared: &GoldenNumber) -> CandidateBox {
        CandidateBox::new(
            radius_squared,
            &self.offset_f64,
            self.reach_squared(),
            self.cosets(),
        )
    }

    /// Exact location of `x` relative to the acceptance domain.
    pub fn locate(&self, x: &LatticePoint) -> Location {
        let n = x.n();
        if !(0..=5).contains(&n) {
            return Location::Outside;
        }
        let reach = self.reach[n as usize];
        if reach < 0.0
            || dist2_f64(&internal_f64(&self.internal_f64, x), &self.offset_f64)
                > reach + FILTER_MARGIN
        {
            return Location::Outside;
        }
        match self.method {
            Method::ModelSet => {
                self.windows[(n - 1) as usize].classify(&InternalPoint::of_lattice(x))
            }
            Method::Strip => strip_classify(x, &self.offset),
        }
    }
}

/// Result of scanning part of a candidate box.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanOutcome {
    pub checked: u64,
    pub accepted: Vec<LatticePoint>,
    pub boundary: Vec<LatticePoint>,
}

impl ScanOutcome {
    pub fn merge(mut self, other: ScanOutcome) -> Self {
        self.checked += other.checked;
        self.accepted.extend(other.accepted);
        self.boundary.extend(other.boundary);
        self
    }

    fn normalize(&mut self) {
        self.accepted.sort_unstable();
        self.accepted.dedup();
        self.boundary.sort_unstable();
        self.boundary.dedup();
    }
}

/// Scans a single slab of the candidate box.
pub fn scan_slab(membership: &Membership, cbox: &CandidateBox, x1: i64) -> ScanOutcome {
    let mut out = ScanOutcome::default();
    cbox.scan_slab(x1, |x| {
        out.checked += 1;
        match membership.locate(&x) {
            Location::Inside => out.accepted.push(x),
            Location::Boundary => out.boundary.push(x),
            Location::Outside => {}
        }
    });
    out
}

/// Scans every slab in order.
pub fn scan_all(membership: &Membership, cbox: &CandidateBox) -> ScanOutcome {
    cbox.slabs()
        .map(|x1| scan_slab(membership, cbox, x1))
        .fold(ScanOutcome::default(), ScanOutcome::merge)
}

/// Boundary audit for an offset and physical radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub points_checked: u64,
    pub boundary_hits: Vec<LatticePoint>,
}

impl AuditReport {
    pub fn is_generic(&self) -> bool {
        self.boundary_hits.is_empty()
    }
}

impl From<ScanOutcome> for AuditReport {
    fn from(mut o: ScanOutcome) -> Self {
        o.normalize();
        AuditReport {
            points_checked: o.checked,
            boundary_hits: o.boundary,
        }
    }
}

/// Thick rhombi come from directions 72° apart, thin ones from 144°.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum RhombKind {
    Thick,
    Thin,
}

impl RhombKind {
    pub fn from_directions(j: u8, k: u8) -> Self {
        match j.abs_diff(k) {
            1 | 4 => RhombKind::Thick,
            _ => RhombKind::Thin,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RhombKind::Thick => "thick",
            RhombKind::Thin => "thin",
        }
    }
}

/// Edge from `points[from]` to `points[from] + ε_direction`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub direction: u8,
}

/// Rhombus with corners `x, x+ε_j, x+ε_k, x+ε_j+ε_k`, `x = points[corner]`, `j < k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Face {
    pub corner: usize,
    pub j: u8,
    pub k: u8,
    pub kind: RhombKind,
}

/// A finite piece of the vertex pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    offset: InternalPoint,
    radius_squared: GoldenNumber,
    points: Vec<LatticePoint>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
}

impl Patch {
    /// Sorts and deduplicates `points`; edges and faces start empty.
    pub fn from_points(
        offset: InternalPoint,
        radius_squared: GoldenNumber,
        mut points: Vec<LatticePoint>,
    ) -> Self {
        points.sort_unstable();
        points.dedup();
        Patch {
            offset,
            radius_squared,
            points,
            edges: Vec::new(),
            faces: Vec::new(),
        }
    }

    /// Merges scan results, failing on the first boundary hit.
    pub fn assemble(
        offset: InternalPoint,
        radius_squared: GoldenNumber,
        mut outcome: ScanOutcome,
    ) -> Result<Self, Error> {
        outcome.normalize();
        if let Some(x) = outcome.boundary.first() {
            return Err(Error::BoundaryHit(*x));
        }
        Ok(Self::from_points(offset, radius_squared, outcome.accepted))
    }

    pub fn offset(&self) -> &InternalPoint {
        &self.offset
    }

    pub fn radius_squared(&self) -> &GoldenNumber {
        &self.radius_squared
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, x: &LatticePoint) -> Option<usize> {
        self.points.binary_search(x).ok()
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.index_of(x).is_some()
    }

    /// Populates edges: every pair `x, x + ε_j` with both ends present.
    pub fn derive_edges(mut self) -> Self {
        let mut edges = Vec::new();
        for (i, x) in self.points.iter().enumerate() {
            for j in 1..=5u8 {
                if self.contains(&x.step(j.into())) {
                    edges.push(Edge {
                        from: i,
                        direction: j,
                    });
                }
            }
        }
        self.edges = edges;
        self
    }

    /// Populates faces: every `x` with `x+ε_j`, `x+ε_k`, `x+ε_j+ε_k` present.
    pub fn derive_faces(mut self) -> Self {
        let mut faces = Vec::new();
        for (i, x) in self.points.iter().enumerate() {
            for j in 1..=5u8 {
                let xj = x.step(j.into());
                if !self.contains(&xj) {
                    continue;
                }
                for k in j + 1..=5 {
                    if self.contains(&x.step(k.into())) && self.contains(&xj.step(k.into())) {
                        faces.push(Face {
                            corner: i,
                            j,
                            k,
                            kind: RhombKind::from_directions(j, k),
                        });
                    }
                }
            }
        }
        self.faces = faces;
        self
    }

    pub fn with_tiles(self) -> Self {
        self.derive_edges().derive_faces()
    }

    /// Corner points of a face in boundary order.
    pub fn face_corners(&self, f: &Face) -> [LatticePoint; 4] {
        let x = self.points[f.corner];
        let xj = x.step(f.j.into());
        [x, xj, xj.step(f.k.into()), x.step(f.k.into())]
    }
}

/// Model-set patch: all `x` with `‖πx‖² ≤ R²`, `n ∈ 1..=4`, `π'x` inside `K_n`.
pub fn generate_patch(v: &InternalPoint, radius_squared: &GoldenNumber) -> Result<Patch, Error> {
    generate_with(Method::ModelSet, v, radius_squared)
}

/// Strip-projection patch over the same candidate ball.
pub fn generate_patch_strip(
    v: &InternalPoint,
    radius_squared: &GoldenNumber,
) -> Result<Patch, Error> {
    generate_with(Method::Strip, v, radius_squared)
}

pub fn generate_with(
    method: Method,
    v: &InternalPoint,
    radius_squared: &GoldenNumber,
) -> Result<Patch, Error> {
    let m = Membership::new(method, v);
    let outcome = scan_all(&m, &m.candidate_box(radius_squared));
    Patch::assemble(v.clone(), radius_squared.clone(), outcome)
}

/// Classifies every model-set candidate and reports the boundary hits.
pub fn audit_boundary(v: &InternalPoint, radius_squared: &GoldenNumber) -> AuditReport {
    let m = Membership::new(Method::ModelSet, v);
    scan_all(&m, &m.candidate_box(radius_squared)).into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2(n: i64) -> GoldenNumber {
        GoldenNumber::from(n)
    }

    #[test]
    fn zero_radius_patch_is_empty() {
        let v = InternalPoint::default_offset();
        let p = generate_patch(&v, &r2(0)).unwrap();
        assert!(p.is_empty());
        assert!(generate_patch_strip(&v, &r2(0)).unwrap().is_empty());
    }

    #[test]
    fn first_unit_vector_is_accepted() {
        let v = InternalPoint::default_offset();
        let p = generate_patch(&v, &GoldenNumber::from_ratio(2, 0, 5)).unwrap();
        assert!(p.contains(&LatticePoint::unit(1)));
        assert!(!p.contains(&LatticePoint::origin()));
    }

    #[test]
    fn deterministic() {
        let v = InternalPoint::default_offset();
        let a = generate_patch(&v, &r2(9)).unwrap().with_tiles();
        let b = generate_patch(&v, &r2(9)).unwrap().with_tiles();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_offset_is_not_generic() {
        let v = InternalPoint::origin();
        let audit = audit_boundary(&v, &r2(4));
        assert!(!audit.is_generic());
        assert!(audit.boundary_hits.contains(&LatticePoint::unit(1)));
        assert!(matches!(
            generate_patch(&v, &r2(4)),
            Err(Error::BoundaryHit(_))
        ));
        assert!(matches!(
            generate_patch_strip(&v, &r2(4)),
            Err(Error::BoundaryHit(_))
        ));
    }

    #[test]
    fn far_offset_is_a_translate() {
        // Shifting v by π'ℓ (ℓ ∈ L) shifts the accepted set by ℓ.
        let v = InternalPoint::default_offset();
        let shift = LatticePoint::new([300, -500, 200, 700, -700]);
        let far = &v + &InternalPoint::of_lattice(&shift);
        let model = generate_patch(&far, &r2(16)).unwrap();
        let strip = generate_patch_strip(&far, &r2(16)).unwrap();
        assert_eq!(model.points(), strip.points());
        assert!(!model.is_empty());
        let near = Membership::new(Method::ModelSet, &v);
        for x in model.points() {
            assert_eq!(near.locate(&(*x - shift)), Location::Inside);
        }
        // The unshifted neighbourhood of the origin is infeasible for the far offset.
        assert!(!crate::windows::strip_feasible(
            &LatticePoint::unit(1),
            &far
        ));
    }

    #[test]
    fn rhomb_kinds() {
        assert_eq!(RhombKind::from_directions(1, 2), RhombKind::Thick);
        assert_eq!(RhombKind::from_directions(1, 5), RhombKind::Thick);
        assert_eq!(RhombKind::from_directions(1, 3), RhombKind::Thin);
        assert_eq!(RhombKind::from_directions(2, 4), RhombKind::Thin);
    }

    #[test]
    fn edges_and_faces_are_consistent() {
        let v = InternalPoint::default_offset();
        let p = generate_patch(&v, &r2(16)).unwrap().with_tiles();
        assert!(!p.edges().is_empty());
        assert!(!p.faces().is_empty());
        for e in p.edges() {
            assert!(p.contains(&p.points()[e.from].step(e.direction.into())));
        }
        for f in p.faces() {
            for c in p.face_corners(f) {
                assert!(p.contains(&c));
            }
        }
    }

    #[test]
    fn candidate_box_covers_ball() {
        let cbox = CandidateBox::new(&r2(4), &[0.0; 5], 2.0, 1..=4);
        let mut seen = Vec::new();
        cbox.scan(|x| seen.push(x));
        for x in &seen {
            assert!(x.physical_norm_squared() <= r2(4));
            assert!((1..=4).contains(&x.n()));
        }
        assert!(seen.contains(&LatticePoint::unit(3)));
    }
}
