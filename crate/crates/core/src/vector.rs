use core::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;

use crate::golden::GoldenNumber;

/// Fixed-length vector of golden numbers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GoldenVector<const N: usize>(pub [GoldenNumber; N]);

impl<const N: usize> GoldenVector<N> {
    pub fn zero() -> Self {
        GoldenVector(core::array::from_fn(|_| GoldenNumber::zero()))
    }

    pub fn from_fn(f: impl FnMut(usize) -> GoldenNumber) -> Self {
        GoldenVector(core::array::from_fn(f))
    }

    pub fn from_integers(v: [i64; N]) -> Self {
        GoldenVector(v.map(GoldenNumber::from))
    }

    /// The canonical basis vector with a one at `index` (zero-based).
    pub fn unit(index: usize) -> Self {
        Self::from_fn(|i| GoldenNumber::from(i64::from(i == index)))
    }

    pub fn iter(&self) -> core::slice::Iter<'_, GoldenNumber> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Self) -> GoldenNumber {
        self.0.iter().zip(other.0.iter()).map(|(x, y)| x * y).sum()
    }

    pub fn norm_squared(&self) -> GoldenNumber {
        self.dot(self)
    }

    pub fn scale(&self, k: &GoldenNumber) -> Self {
        Self::from_fn(|i| &self.0[i] * k)
    }

    pub fn sum(&self) -> GoldenNumber {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_f64(&self) -> [f64; N] {
        core::array::from_fn(|i| self.0[i].to_f64())
    }
}

impl<const N: usize> Index<usize> for GoldenVector<N> {
    type Output = GoldenNumber;
    fn index(&self, i: usize) -> &GoldenNumber {
        &self.0[i]
    }
}

impl<const N: usize> IndexMut<usize> for GoldenVector<N> {
    fn index_mut(&mut self, i: usize) -> &mut GoldenNumber {
        &mut self.0[i]
    }
}

impl<const N: usize> Add for &GoldenVector<N> {
    type Output = GoldenVector<N>;
    fn add(self, rhs: Self) -> GoldenVector<N> {
        GoldenVector::from_fn(|i| &self.0[i] + &rhs.0[i])
    }
}

impl<const N: usize> Sub for &GoldenVector<N> {
    type Output = GoldenVector<N>;
    fn sub(self, rhs: Self) -> GoldenVector<N> {
        GoldenVector::from_fn(|i| &self.0[i] - &rhs.0[i])
    }
}

impl<const N: usize> Add for GoldenVector<N> {
    type Output = GoldenVector<N>;
    fn add(self, rhs: Self) -> GoldenVector<N> {
        &self + &rhs
    }
}

impl<const N: usize> Sub for GoldenVector<N> {
    type Output = GoldenVector<N>;
    fn sub(self, rhs: Self) -> GoldenVector<N> {
        &self - &rhs
    }
}

impl<const N: usize> Neg for &GoldenVector<N> {
    type Output = GoldenVector<N>;
    fn neg(self) -> GoldenVector<N> {
        GoldenVector::from_fn(|i| -&self.0[i])
    }
}

/// Dense square matrix over the golden field, used for generic identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix<const N: usize>(pub [[GoldenNumber; N]; N]);

impl<const N: usize> DenseMatrix<N> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> GoldenNumber) -> Self {
        DenseMatrix(core::array::from_fn(|i| core::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| GoldenNumber::from(i64::from(i == j)))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| GoldenNumber::zero())
    }

    pub fn entry(&self, i: usize, j: usize) -> &GoldenNumber {
        &self.0[i][j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| &self.0[i][j] + &rhs.0[i][j])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| &self.0[i][j] - &rhs.0[i][j])
    }

    pub fn scale(&self, k: &GoldenNumber) -> Self {
        Self::from_fn(|i, j| &self.0[i][j] * k)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn apply(&self, v: &GoldenVector<N>) -> GoldenVector<N> {
        GoldenVector::from_fn(|i| (0..N).map(|k| &self.0[i][k] * &v.0[k]).sum())
    }

    pub fn trace(&self) -> GoldenNumber {
        (0..N).map(|i| self.0[i][i].clone()).sum()
    }

    /// True when every entry is a rational integer.
    pub fn has_integer_entries(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|x| x.is_rational() && x.is_integral())
    }
}
