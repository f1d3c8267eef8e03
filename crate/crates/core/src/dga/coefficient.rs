use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::DgaError;
use crate::rational::Q;

/// Number of stored components: `1, x1..x6, v1, v2`.
pub const NCOEF: usize = 9;

/// A symbol of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    One,
    /// `x_i = g(X, e_i)`, `1 <= i <= 6`.
    X(u8),
    /// `v_j = g(X, h_j)`, `1 <= j <= 3`.
    V(u8),
}

/// A rational linear combination of `1, x1..x6, v1, v2, v3` with
/// `v3 = -v1 - v2` eliminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coefficient([Q; NCOEF]);

impl Coefficient {
    pub const fn from_raw(raw: [Q; NCOEF]) -> Self {
        Self(raw)
    }

    pub fn raw(&self) -> &[Q; NCOEF] {
        &self.0
    }

    pub fn constant(c: Q) -> Self {
        let mut r = [Q::zero(); NCOEF];
        r[0] = c;
        Self(r)
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut r = [Q::zero(); NCOEF];
        match s {
            Symbol::One => r[0] = Q::one(),
            Symbol::X(i) => {
                assert!((1..=6).contains(&i), "x index out of range");
                r[usize::from(i)] = Q::one();
            }
            Symbol::V(1) => r[7] = Q::one(),
            Symbol::V(2) => r[8] = Q::one(),
            Symbol::V(3) => {
                r[7] = -Q::one();
                r[8] = -Q::one();
            }
            Symbol::V(_) => panic!("v index out of range"),
        }
        Self(r)
    }

    pub fn x(i: u8) -> Self {
        Self::symbol(Symbol::X(i))
    }

    pub fn v(j: u8) -> Self {
        Self::symbol(Symbol::V(j))
    }

    pub fn is_constant(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    pub fn constant_part(&self) -> Q {
        self.0[0]
    }

    pub fn x_part(&self, i: u8) -> Q {
        self.0[usize::from(i)]
    }

    pub fn v_parts(&self) -> (Q, Q) {
        (self.0[7], self.0[8])
    }

    pub fn scale(&self, c: Q) -> Self {
        Self(self.0.map(|a| a * c))
    }

    /// Product, defined when at least one factor is constant.
    pub fn try_mul(&self, other: &Self) -> Result<Self, DgaError> {
        if self.is_constant() {
            Ok(other.scale(self.0[0]))
        } else if other.is_constant() {
            Ok(self.scale(other.0[0]))
        } else {
            Err(DgaError::NonlinearCoefficient)
        }
    }

    /// Value under an assignment of the symbols `[1, x1..x6, v1, v2]`.
    pub fn evaluate(&self, values: &[Q; NCOEF]) -> Q {
        self.0.iter().zip(values).map(|(a, b)| a * b).sum()
    }
}

impl Zero for Coefficient {
    fn zero() -> Self {
        Self([Q::zero(); NCOEF])
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Add for Coefficient {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for Coefficient {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Coefficient {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for Coefficient {
    fn sub_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for Coefficient {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|a| -a))
    }
}

impl Mul<Q> for Coefficient {
    type Output = Self;
    fn mul(self, rhs: Q) -> Self {
        self.scale(rhs)
    }
}

impl From<Q> for Coefficient {
    fn from(c: Q) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::coefficient_to_string(self))
    }
}
