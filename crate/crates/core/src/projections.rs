//! The five-dimensional lattice, its invariant projectors and the D10 action.
//!
//! Lengths are measured in the unit-rescaled lattice `Z⁵`; the window cube is
//! `[0, 1]⁵`. Everything therefore stays inside `Q(τ)`.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::golden::{GoldenNumber, TAU_F64};
use crate::vector::{DenseMatrix, GoldenVector};

/// The symmetric circulant matrix `A(α, β, γ)`: row `i` is the cyclic shift of
/// `(α, β, γ, γ, β)` by `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymCirculantMatrix {
    pub alpha: GoldenNumber,
    pub beta: GoldenNumber,
    pub gamma: GoldenNumber,
}

impl SymCirculantMatrix {
    pub fn new(alpha: GoldenNumber, beta: GoldenNumber, gamma: GoldenNumber) -> Self {
        SymCirculantMatrix { alpha, beta, gamma }
    }

    pub fn identity() -> Self {
        Self::new(
            GoldenNumber::one(),
            GoldenNumber::zero(),
            GoldenNumber::zero(),
        )
    }

    pub fn zero() -> Self {
        Self::new(
            GoldenNumber::zero(),
            GoldenNumber::zero(),
            GoldenNumber::zero(),
        )
    }

    /// First row `(α, β, γ, γ, β)`.
    fn row(&self) -> [&GoldenNumber; 5] {
        [
            &self.alpha,
            &self.beta,
            &self.gamma,
            &self.gamma,
            &self.beta,
        ]
    }

    /// Entry at zero-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &GoldenNumber {
        self.row()[(j + 5 - i % 5) % 5]
    }

    pub fn expand(&self) -> DenseMatrix<5> {
        DenseMatrix::from_fn(|i, j| self.entry(i, j).clone())
    }

    pub fn trace(&self) -> GoldenNumber {
        self.alpha.scale_int(5)
    }

    /// Product within the family; circulants multiply by cyclic convolution
    /// of their first rows.
    pub fn mul(&self, rhs: &Self) -> Self {
        let r = self.row();
        let s = rhs.row();
        let conv = |j: usize| -> GoldenNumber { (0..5).map(|k| r[k] * s[(j + 5 - k) % 5]).sum() };
        Self::new(conv(0), conv(1), conv(2))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            &self.alpha + &rhs.alpha,
            &self.beta + &rhs.beta,
            &self.gamma + &rhs.gamma,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            &self.alpha - &rhs.alpha,
            &self.beta - &rhs.beta,
            &self.gamma - &rhs.gamma,
        )
    }

    pub fn scale(&self, k: &GoldenNumber) -> Self {
        Self::new(&self.alpha * k, &self.beta * k, &self.gamma * k)
    }

    pub fn apply(&self, v: &GoldenVector<5>) -> GoldenVector<5> {
        GoldenVector::from_fn(|i| (0..5).map(|j| self.entry(i, j) * &v[j]).sum())
    }

    /// Product with an integer vector, grouping by circulant distance.
    pub fn apply_int(&self, x: &[i64; 5]) -> GoldenVector<5> {
        GoldenVector::from_fn(|i| {
            let near = x[(i + 1) % 5] + x[(i + 4) % 5];
            let far = x[(i + 2) % 5] + x[(i + 3) % 5];
            self.alpha.scale_int(x[i]) + self.beta.scale_int(near) + self.gamma.scale_int(far)
        })
    }

    /// Integer entries as `(α, β, γ)` when all three are rational integers.
    pub fn integer_params(&self) -> Option<[i64; 3]> {
        let get = |x: &GoldenNumber| match x.to_integers() {
            Some((a, 0)) => Some(a),
            _ => None,
        };
        Some([get(&self.alpha)?, get(&self.beta)?, get(&self.gamma)?])
    }

    pub fn to_f64(&self) -> [[f64; 5]; 5] {
        let row = self.row().map(GoldenNumber::to_f64);
        core::array::from_fn(|i| core::array::from_fn(|j| row[(j + 5 - i) % 5]))
    }
}

/// `π = A(2/5, -τ'/5, -τ/5)`, projector onto physical space `E`.
pub fn projector_phys() -> SymCirculantMatrix {
    SymCirculantMatrix::new(
        GoldenNumber::from_ratio(2, 0, 5),
        GoldenNumber::from_ratio(-1, 1, 5),
        GoldenNumber::from_ratio(0, -1, 5),
    )
}

/// `π' = A(2/5, -τ/5, -τ'/5)`, projector onto internal space `E'`.
pub fn projector_internal() -> SymCirculantMatrix {
    SymCirculantMatrix::new(
        GoldenNumber::from_ratio(2, 0, 5),
        GoldenNumber::from_ratio(0, -1, 5),
        GoldenNumber::from_ratio(-1, 1, 5),
    )
}

/// `π'' = A(1/5, 1/5, 1/5)`, projector onto the diagonal `E''`.
pub fn projector_sym() -> SymCirculantMatrix {
    let fifth = GoldenNumber::from_ratio(1, 0, 5);
    SymCirculantMatrix::new(fifth.clone(), fifth.clone(), fifth)
}

/// `π⊥ = A(3/5, τ'/5, τ/5)`.
pub fn projector_perp() -> SymCirculantMatrix {
    SymCirculantMatrix::new(
        GoldenNumber::from_ratio(3, 0, 5),
        GoldenNumber::from_ratio(1, -1, 5),
        GoldenNumber::from_ratio(0, 1, 5),
    )
}

/// The 4×4 family `B(α, β, γ)` acting on coordinates in the basis `w₁..w₄`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridMatrix {
    pub alpha: GoldenNumber,
    pub beta: GoldenNumber,
    pub gamma: GoldenNumber,
}

impl GridMatrix {
    pub fn new(alpha: GoldenNumber, beta: GoldenNumber, gamma: GoldenNumber) -> Self {
        GridMatrix { alpha, beta, gamma }
    }

    pub fn expand(&self) -> DenseMatrix<4> {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        let z = GoldenNumber::zero();
        let nc = -c;
        DenseMatrix([
            [a.clone(), c.clone(), z.clone(), nc.clone()],
            [z.clone(), b.clone(), c.clone(), nc.clone()],
            [nc.clone(), c.clone(), b.clone(), z.clone()],
            [nc, z, c.clone(), a.clone()],
        ])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            &self.alpha + &rhs.alpha,
            &self.beta + &rhs.beta,
            &self.gamma + &rhs.gamma,
        )
    }

    pub fn scale(&self, k: &GoldenNumber) -> Self {
        Self::new(&self.alpha * k, &self.beta * k, &self.gamma * k)
    }

    pub fn apply(&self, c: &GoldenVector<4>) -> GoldenVector<4> {
        self.expand().apply(c)
    }

    pub fn integer_params(&self) -> Option<[i64; 3]> {
        let get = |x: &GoldenNumber| match x.to_integers() {
            Some((a, 0)) => Some(a),
            _ => None,
        };
        Some([get(&self.alpha)?, get(&self.beta)?, get(&self.gamma)?])
    }
}

/// `p = B((5-√5)/10, (5+√5)/10, √5/5)` written in the `{1, τ}` basis.
pub fn grid_projector_phys() -> GridMatrix {
    GridMatrix::new(
        GoldenNumber::from_ratio(3, -1, 5),
        GoldenNumber::from_ratio(2, 1, 5),
        GoldenNumber::from_ratio(-1, 2, 5),
    )
}

/// `p' = B((5+√5)/10, (5-√5)/10, -√5/5)`.
pub fn grid_projector_internal() -> GridMatrix {
    GridMatrix::new(
        GoldenNumber::from_ratio(2, 1, 5),
        GoldenNumber::from_ratio(3, -1, 5),
        GoldenNumber::from_ratio(1, -2, 5),
    )
}

/// A point of `Z⁵`, carrying its coset index `n` (the coordinate sum).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePoint {
    coords: [i64; 5],
    n: i64,
}

impl LatticePoint {
    pub fn new(coords: [i64; 5]) -> Self {
        LatticePoint {
            coords,
            n: coords.iter().sum(),
        }
    }

    pub fn origin() -> Self {
        Self::new([0; 5])
    }

    /// `ε_j` for `j` in `1..=5`.
    pub fn unit(j: usize) -> Self {
        assert!((1..=5).contains(&j), "lattice direction {j} outside 1..=5");
        let mut c = [0; 5];
        c[j - 1] = 1;
        Self::new(c)
    }

    /// `(1, 1, 1, 1, 1)`, the generator of `Z⁵ ∩ E''`.
    pub fn diagonal() -> Self {
        Self::new([1; 5])
    }

    pub fn coords(&self) -> &[i64; 5] {
        &self.coords
    }

    /// Coset index: the coordinate sum.
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn step(&self, j: usize) -> Self {
        *self + Self::unit(j)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coords.map(|c| c * k))
    }

    pub fn to_golden(&self) -> GoldenVector<5> {
        GoldenVector::from_integers(self.coords)
    }

    /// Coordinates in the basis `w₁..w₄` of `(π + π')(Z⁵)`.
    pub fn to_grid_coords(&self) -> GridCoords {
        let c = self.coords;
        GridCoords([c[0] - c[4], c[1] - c[4], c[2] - c[4], c[3] - c[4]])
    }

    /// Splits `x = n ε₁ + rem` with `rem` in the sum-zero sublattice `L`.
    pub fn coset_of(&self) -> (i64, LatticePoint) {
        let n = self.n;
        (n, *self - Self::unit(1).scale(n))
    }

    /// `πx`.
    pub fn physical(&self) -> GoldenVector<5> {
        projector_phys().apply_int(&self.coords)
    }

    /// `π'x`.
    pub fn internal(&self) -> GoldenVector<5> {
        projector_internal().apply_int(&self.coords)
    }

    /// Neighbour sums `(Σx², Σ x_j x_{j+1}, Σ x_j x_{j+2})`, indices cyclic.
    fn quadratic_sums(&self) -> (i64, i64, i64) {
        let x = &self.coords;
        let mut s = (0, 0, 0);
        for j in 0..5 {
            s.0 += x[j] * x[j];
            s.1 += x[j] * x[(j + 1) % 5];
            s.2 += x[j] * x[(j + 2) % 5];
        }
        s
    }

    /// `‖πx‖² = ((2S₀ - 2S₁) + (2S₁ - 2S₂)τ) / 5`.
    pub fn physical_norm_squared(&self) -> GoldenNumber {
        let (s0, s1, s2) = self.quadratic_sums();
        GoldenNumber::from_ratio(2 * s0 - 2 * s1, 2 * s1 - 2 * s2, 5)
    }

    /// `‖π'x‖² = ((2S₀ - 2S₂) + (2S₂ - 2S₁)τ) / 5`.
    pub fn internal_norm_squared(&self) -> GoldenNumber {
        let (s0, s1, s2) = self.quadratic_sums();
        GoldenNumber::from_ratio(2 * s0 - 2 * s2, 2 * s2 - 2 * s1, 5)
    }

    pub fn physical_norm_squared_f64(&self) -> f64 {
        let (s0, s1, s2) = self.quadratic_sums();
        ((2 * s0 - 2 * s1) as f64 + (2 * s1 - 2 * s2) as f64 * TAU_F64) / 5.0
    }

    /// Image under a D10 generator acting on `Z⁵`.
    pub fn act(&self, g: Generator) -> Self {
        Self::new(g.apply(&self.coords))
    }

    /// Image under a generator, shifted along the diagonal so the coset
    /// index stays in `1..=4`: `a` sends index `n` to `-n`, so the image is
    /// moved to `5 - n`. The shift does not change `πx` or `π'x`.
    pub fn pattern_image(&self, g: Generator) -> Self {
        match g {
            Generator::A => self.act(g) + Self::diagonal(),
            Generator::B => self.act(g),
        }
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: Self) -> Self {
        Self::new(core::array::from_fn(|i| self.coords[i] + rhs.coords[i]))
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: Self) -> Self {
        Self::new(core::array::from_fn(|i| self.coords[i] - rhs.coords[i]))
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> Self {
        Self::new(self.coords.map(|c| -c))
    }
}

impl From<[i64; 5]> for LatticePoint {
    fn from(c: [i64; 5]) -> Self {
        Self::new(c)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coords;
        write!(f, "({},{},{},{},{})", c[0], c[1], c[2], c[3], c[4])
    }
}

/// Integer coordinates in the basis `w₁..w₄`, `w_j = (π + π')ε_j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GridCoords(pub [i64; 4]);

impl GridCoords {
    /// `Σ c_j w_j` in ambient coordinates. Since `w_j = ε_j - (1/5)(1,1,1,1,1)`.
    pub fn to_ambient(&self) -> GoldenVector<5> {
        let c = self.0;
        let total: i64 = c.iter().sum();
        GoldenVector::from_fn(|i| {
            let own = if i < 4 { c[i] } else { 0 };
            GoldenNumber::from_ratio(5 * own - total, 0, 5)
        })
    }

    pub fn to_golden(&self) -> GoldenVector<4> {
        GoldenVector::from_integers(self.0)
    }
}

/// `w_j = (π + π')ε_j` for `j` in `1..=5`.
pub fn w_basis(j: usize) -> GoldenVector<5> {
    let p = projector_phys().add(&projector_internal());
    p.apply_int(LatticePoint::unit(j).coords())
}

/// Generators of D10 acting on five-tuples by signed permutations.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Generator {
    /// `(x₁..x₅) ↦ (-x₃, -x₄, -x₅, -x₁, -x₂)`
    A,
    /// `(x₁..x₅) ↦ (x₁, x₅, x₄, x₃, x₂)`
    B,
}

impl Generator {
    pub fn apply<T: Clone + Neg<Output = T>>(self, x: &[T; 5]) -> [T; 5] {
        match self {
            Generator::A => group_a(x),
            Generator::B => group_b(x),
        }
    }
}

pub fn group_a<T: Clone + Neg<Output = T>>(x: &[T; 5]) -> [T; 5] {
    [
        -x[2].clone(),
        -x[3].clone(),
        -x[4].clone(),
        -x[0].clone(),
        -x[1].clone(),
    ]
}

pub fn group_b<T: Clone>(x: &[T; 5]) -> [T; 5] {
    [
        x[0].clone(),
        x[4].clone(),
        x[3].clone(),
        x[2].clone(),
        x[1].clone(),
    ]
}

/// Applies a word in the generators, leftmost letter last (as in `ab = a∘b`).
pub fn apply_word<T: Clone + Neg<Output = T>>(word: &[Generator], x: &[T; 5]) -> [T; 5] {
    word.iter().rev().fold(x.clone(), |acc, g| g.apply(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn gr(a: i64, b: i64, d: i64) -> GoldenNumber {
        GoldenNumber::from_ratio(a, b, d)
    }

    #[test]
    fn circulant_pattern() {
        let m = SymCirculantMatrix::new(1.into(), 2.into(), 3.into());
        let e = m.expand();
        let rows: [[i64; 5]; 5] = [
            [1, 2, 3, 3, 2],
            [2, 1, 2, 3, 3],
            [3, 2, 1, 2, 3],
            [3, 3, 2, 1, 2],
            [2, 3, 3, 2, 1],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(e.entry(i, j), &GoldenNumber::from(rows[i][j]));
            }
        }
        assert_eq!(e, e.transpose());
    }

    #[test]
    fn grid_pattern() {
        let m = GridMatrix::new(1.into(), 2.into(), 3.into()).expand();
        let rows: [[i64; 4]; 4] = [[1, 3, 0, -3], [0, 2, 3, -3], [-3, 3, 2, 0], [-3, 0, 3, 1]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(i, j), &GoldenNumber::from(rows[i][j]));
            }
        }
    }

    #[test]
    fn circulant_product_matches_dense() {
        let a = SymCirculantMatrix::new(gr(1, 2, 3), gr(-1, 0, 7), gr(2, -5, 1));
        let b = projector_phys();
        assert_eq!(a.mul(&b).expand(), a.expand().mul(&b.expand()));
    }

    #[test]
    fn physical_projector() {
        let pi = projector_phys();
        assert_eq!(pi.entry(0, 0), &gr(2, 0, 5));
        assert_eq!(pi.mul(&pi), pi);
        assert_eq!(pi.trace(), GoldenNumber::from(2));
        // 2/5 + 2(τ-1)/5 - 2τ/5 = 0
        assert!(pi.apply_int(&[1; 5]).is_zero());
        let col: Vec<_> = (0..5).map(|i| pi.entry(i, 0).clone()).collect();
        assert_eq!(pi.apply_int(LatticePoint::unit(1).coords()).0.to_vec(), col);
    }

    #[test]
    fn internal_projector() {
        let pi = projector_phys();
        let pi2 = projector_internal();
        assert_eq!(pi2.entry(0, 1), &gr(0, -1, 5));
        assert_eq!(pi2.mul(&pi), SymCirculantMatrix::zero());
        assert_eq!(pi2.trace(), GoldenNumber::from(2));
    }

    #[test]
    fn symmetric_projector() {
        let s = projector_sym();
        let ones = GoldenVector::from_integers([1; 5]);
        assert_eq!(s.apply(&ones), ones);
        assert!(s.apply_int(&[3, -1, 0, 2, -4]).is_zero());
        let total = projector_phys().add(&projector_internal()).add(&s);
        assert_eq!(total, SymCirculantMatrix::identity());
        assert_eq!(total.expand(), DenseMatrix::identity());
    }

    #[test]
    fn perpendicular_projector() {
        let perp = projector_perp();
        assert_eq!(perp.entry(0, 0), &gr(3, 0, 5));
        assert_eq!(projector_phys().add(&perp), SymCirculantMatrix::identity());
        assert_eq!(perp, projector_internal().add(&projector_sym()));
    }

    #[test]
    fn identity_application() {
        let v = GoldenVector::from_fn(|i| gr(i as i64, 1 - i as i64, 3));
        assert_eq!(SymCirculantMatrix::identity().apply(&v), v);
    }

    #[test]
    fn group_relations() {
        let e1 = LatticePoint::unit(1);
        assert_eq!(e1.act(Generator::A), -LatticePoint::unit(4));
        let x = [1i64, -2, 3, 7, -5];
        let mut y = x;
        for _ in 0..10 {
            y = group_a(&y);
        }
        assert_eq!(y, x);
        let mut y = x;
        for _ in 0..5 {
            y = group_a(&y);
        }
        assert_ne!(y, x);
        assert_eq!(group_b(&group_b(&x)), x);
        let ab = apply_word(&[Generator::A, Generator::B], &x);
        assert_eq!(apply_word(&[Generator::A, Generator::B], &ab), x);
    }

    #[test]
    fn projectors_commute_with_group() {
        let x = [2i64, -1, 0, 4, 3];
        for m in [projector_phys(), projector_internal(), projector_sym()] {
            for g in [Generator::A, Generator::B] {
                let lhs = m.apply_int(&g.apply(&x));
                let rhs = GoldenVector(g.apply(&m.apply_int(&x).0));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn grid_projectors() {
        let p = grid_projector_phys();
        let q = grid_projector_internal();
        assert_eq!(p.add(&q), GridMatrix::new(1.into(), 1.into(), 0.into()));
        assert_eq!(p.add(&q).expand(), DenseMatrix::identity());
        assert_eq!(p.alpha, gr(3, -1, 5));
        let (pe, qe) = (p.expand(), q.expand());
        assert_eq!(pe.mul(&pe), pe);
        assert_eq!(qe.mul(&qe), qe);
        assert_eq!(pe.mul(&qe), DenseMatrix::zero());
        // α = (5-√5)/10 with √5 = 2τ-1
        let s5 = GoldenNumber::sqrt5();
        assert_eq!(
            p.alpha,
            (GoldenNumber::from(5) - &s5) / GoldenNumber::from(10)
        );
        assert_eq!(p.gamma, s5 / GoldenNumber::from(5));
    }

    #[test]
    fn grid_coordinates() {
        assert_eq!(
            LatticePoint::unit(1).to_grid_coords(),
            GridCoords([1, 0, 0, 0])
        );
        assert_eq!(
            LatticePoint::unit(5).to_grid_coords(),
            GridCoords([-1, -1, -1, -1])
        );
        assert_eq!(LatticePoint::origin().to_grid_coords(), GridCoords([0; 4]));
        let sum_w: GoldenVector<5> =
            (1..=5).fold(GoldenVector::zero(), |acc, j| &acc + &w_basis(j));
        assert!(sum_w.is_zero());
        for j in 1..=4 {
            assert_eq!(
                GridCoords(core::array::from_fn(|i| i64::from(i + 1 == j))).to_ambient(),
                w_basis(j)
            );
        }
    }

    #[test]
    fn grid_reconstruction() {
        let x = LatticePoint::new([3, -2, 5, 0, -1]);
        let direct = projector_phys()
            .add(&projector_internal())
            .apply_int(x.coords());
        assert_eq!(x.to_grid_coords().to_ambient(), direct);
    }

    #[test]
    fn cosets() {
        let e2 = LatticePoint::unit(2);
        assert_eq!(e2.coset_of(), (1, e2 - LatticePoint::unit(1)));
        assert_eq!(
            LatticePoint::new([1, 1, 0, 0, 0]).coset_of(),
            (2, LatticePoint::new([-1, 1, 0, 0, 0]))
        );
        let z = LatticePoint::new([2, -1, 0, 0, -1]);
        assert_eq!(z.coset_of(), (0, z));
    }

    #[test]
    fn norm_shortcuts_match_projection() {
        for c in [
            [1, 0, 0, 0, 0],
            [3, -2, 5, 0, -1],
            [1, 1, 1, 1, 1],
            [4, -7, 2, 2, 9],
        ] {
            let x = LatticePoint::new(c);
            assert_eq!(x.physical_norm_squared(), x.physical().norm_squared());
            assert_eq!(x.internal_norm_squared(), x.internal().norm_squared());
            assert!(
                (x.physical_norm_squared().to_f64() - x.physical_norm_squared_f64()).abs() < 1e-12
            );
        }
    }

    #[test]
    fn pattern_image_keeps_cosets_in_range() {
        let x = LatticePoint::new([1, 0, 1, 0, 0]);
        let y = x.pattern_image(Generator::A);
        assert_eq!(y.n(), 5 - x.n());
        assert_eq!(y.internal(), GoldenVector(group_a(&x.internal().0)));
    }
}
