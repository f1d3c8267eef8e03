//! Small dense matrices over `Q[i]`, enough to build matrix Lie algebras and
//! read off structure constants and trace forms exactly.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::rational::{solve_columns, Q};

pub type Cq = Complex<Q>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMat {
    n: usize,
    data: Vec<Cq>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Cq::zero(); n * n],
        }
    }

    /// Matrix unit `E_ij` (0-based) scaled by `c`.
    pub fn unit(n: usize, i: usize, j: usize, c: Cq) -> Self {
        let mut m = Self::zeros(n);
        m[(i, j)] = c;
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Cq) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Cq {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn is_skew_hermitian(&self) -> bool {
        self.adjoint() == self.scale(-Cq::one())
    }

    /// Real coordinates `(re, im)` of all entries, row-major.
    pub fn realify(&self) -> Vec<Q> {
        self.data.iter().flat_map(|z| [z.re, z.im]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Cq;
    fn index(&self, (i, j): (usize, usize)) -> &Cq {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cq {
        &mut self.data[i * self.n + j]
    }
}

pub fn re(x: Q) -> Cq {
    Cq::new(x, Q::zero())
}

pub fn im(x: Q) -> Cq {
    Cq::new(Q::zero(), x)
}

/// A real matrix Lie algebra given by an explicit basis.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    basis: Vec<CMat>,
    columns: Vec<Vec<Q>>,
}

impl MatrixAlgebra {
    pub fn new(basis: Vec<CMat>) -> Self {
        let columns = basis.iter().map(CMat::realify).collect();
        Self { basis, columns }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CMat] {
        &self.basis
    }

    /// Real coordinates of `m` in the basis, if it lies in the span.
    pub fn coords(&self, m: &CMat) -> Option<Vec<Q>> {
        solve_columns(&self.columns, &m.realify())
    }

    /// `c[a][b][k]` with `[B_a, B_b] = sum_k c[a][b][k] B_k`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Q>>> {
        let n = self.dim();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let br = self.basis[a].commutator(&self.basis[b]);
                        self.coords(&br)
                            .expect("basis is not closed under the bracket")
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix of `ad_X` in the basis (columns are images of basis vectors).
    pub fn ad(&self, x: &CMat) -> Vec<Vec<Q>> {
        let n = self.dim();
        let cols: Vec<Vec<Q>> = self
            .basis
            .iter()
            .map(|b| {
                self.coords(&x.commutator(b))
                    .expect("not closed under the bracket")
            })
            .collect();
        (0..n)
            .map(|r| (0..n).map(|c| cols[c][r]).collect())
            .collect()
    }

    /// Killing form `tr(ad_X ad_Y)`.
    pub fn killing(&self, x: &CMat, y: &CMat) -> Q {
        let ax = self.ad(x);
        let ay = self.ad(y);
        let n = self.dim();
        let mut t = Q::zero();
        for i in 0..n {
            for k in 0..n {
                t += ax[i][k] * ay[k][i];
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    fn su2() -> MatrixAlgebra {
        let one = qi(1);
        MatrixAlgebra::new(vec![
            CMat::unit(2, 0, 0, im(one)).add(&CMat::unit(2, 1, 1, im(-one))),
            CMat::unit(2, 0, 1, re(one)).add(&CMat::unit(2, 1, 0, re(-one))),
            CMat::unit(2, 0, 1, im(one)).add(&CMat::unit(2, 1, 0, im(one))),
        ])
    }

    #[test]
    fn su2_killing_is_four_times_trace() {
        let g = su2();
        for x in g.basis() {
            for y in g.basis() {
                let tr = x.mul(y).trace();
                assert_eq!(tr.im, Q::zero());
                assert_eq!(g.killing(x, y), qi(4) * tr.re);
            }
        }
    }

    #[test]
    fn structure_constants_are_antisymmetric() {
        let c = su2().structure_constants();
        for a in 0..3 {
            for b in 0..3 {
                for k in 0..3 {
                    assert_eq!(c[a][b][k], -c[b][a][k]);
                }
            }
        }
    }
}
