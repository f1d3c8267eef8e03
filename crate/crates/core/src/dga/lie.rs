use std::sync::OnceLock;

use num_traits::Zero;

use super::coefficient::{Coefficient, NCOEF};
use super::form::{Form, Mono, NGEN};
use crate::matrix::{im, re, CMat, MatrixAlgebra};
use crate::rational::{q, qi, Q};

/// The basis `e_1..e_6, h_1..h_3` of `u3` and everything derived from its
/// bracket.
///
/// `h_j = i E_jj`, `e_1 = E12 - E21`, `e_2 = i(E12 + E21)`, and likewise
/// `(e_3, e_4)` on `(1,3)` and `(e_5, e_6)` on `(2,3)`. The metric is
/// `g = -1/2 Re tr(XY)`, so the `e_i` are orthonormal and `|h_j|^2 = 1/2`.
/// The frame is `F = (e_1..e_6, 2h_1, 2h_2, 2h_3)`; its dual coframe is
/// `(e^1..e^6, h_1^flat, h_2^flat, h_3^flat)`.
#[derive(Debug, Clone)]
pub struct LieBasis {
    algebra: MatrixAlgebra,
    /// `c[a][b][k]`: `[B_a, B_b] = sum_k c[a][b][k] B_k`.
    structure: Vec<Vec<Vec<Q>>>,
    /// `F_a = scale[a] B_a`.
    scale: [Q; NGEN],
    /// `d gamma^k`.
    dgen: Vec<Form>,
    /// `d gamma^I` for every monomial mask.
    dmono: Vec<Form>,
    /// `deriv[a][s]`: `F_a(c_s)` for the stored coefficient symbols `s`.
    deriv: Vec<[Coefficient; NCOEF]>,
}

fn coefficient_of_basis(k: usize) -> Coefficient {
    if k < 6 {
        Coefficient::x(k as u8 + 1)
    } else {
        Coefficient::v(k as u8 - 5)
    }
}

pub fn u3_matrices() -> Vec<CMat> {
    let one = qi(1);
    let mut basis = Vec::with_capacity(NGEN);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        basis.push(CMat::unit(3, i, j, re(one)).add(&CMat::unit(3, j, i, re(-one))));
        basis.push(CMat::unit(3, i, j, im(one)).add(&CMat::unit(3, j, i, im(one))));
    }
    for j in 0..3 {
        basis.push(CMat::unit(3, j, j, im(one)));
    }
    basis
}

/// `-1/2 Re tr(XY)`.
pub fn metric(x: &CMat, y: &CMat) -> Q {
    -q(1, 2) * x.mul(y).trace().re
}

impl LieBasis {
    pub fn new() -> Self {
        let algebra = MatrixAlgebra::new(u3_matrices());
        let structure = algebra.structure_constants();
        let mut scale = [qi(1); NGEN];
        for s in &mut scale[6..] {
            *s = qi(2);
        }
        let dgen: Vec<Form> = (0..NGEN)
            .map(|k| {
                let mut f = Form::zero();
                for a in 0..NGEN {
                    for b in a + 1..NGEN {
                        let c = structure[a][b][k] * scale[a] * scale[b] / scale[k];
                        if !c.is_zero() {
                            f = f + Form::generators(&[a, b]).scale(-c);
                        }
                    }
                }
                f
            })
            .collect();
        let mut dmono = vec![Form::zero(); 1 << NGEN];
        for mask in 1u16..(1 << NGEN) {
            let first = mask.trailing_zeros() as usize;
            let rest = Mono::from_mask(mask & !(1 << first));
            // d(g ∧ rest) = dg ∧ rest - g ∧ d(rest)
            let rest_form = Form::term(rest, Coefficient::one());
            let a = dgen[first].wedge(&rest_form).expect("constant");
            let b = Form::generators(&[first])
                .wedge(&dmono[rest.mask() as usize])
                .expect("constant");
            dmono[mask as usize] = a - b;
        }
        let deriv = (0..NGEN)
            .map(|a| {
                let mut row = [Coefficient::zero(); NCOEF];
                // stored symbols 1..=8 correspond to basis vectors 0..=7
                for (s, slot) in row.iter_mut().enumerate().skip(1) {
                    let z = s - 1;
                    let mut c = Coefficient::zero();
                    for k in 0..NGEN {
                        let s_k = structure[a][z][k] * scale[a];
                        if !s_k.is_zero() {
                            c += coefficient_of_basis(k).scale(s_k);
                        }
                    }
                    *slot = c;
                }
                row
            })
            .collect();
        Self {
            algebra,
            structure,
            scale,
            dgen,
            dmono,
            deriv,
        }
    }

    pub fn algebra(&self) -> &MatrixAlgebra {
        &self.algebra
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Q>>] {
        &self.structure
    }

    pub fn frame_scale(&self, a: usize) -> Q {
        self.scale[a]
    }

    /// `d` of the `k`-th coframe generator.
    pub fn d_generator(&self, k: usize) -> &Form {
        &self.dgen[k]
    }

    /// `F_a(c)`: the derivative of a coefficient along the `a`-th frame vector.
    pub fn frame_derivative(&self, a: usize, c: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (s, x) in c.raw().iter().enumerate().skip(1) {
            if !x.is_zero() {
                out += self.deriv[a][s].scale(*x);
            }
        }
        out
    }

    /// `dc = sum_a F_a(c) gamma^a`.
    pub fn d_coefficient(&self, c: &Coefficient) -> Form {
        let mut out = Form::zero();
        for a in 0..NGEN {
            out.add_term(Mono::from_mask(1 << a), self.frame_derivative(a, c));
        }
        out
    }

    pub fn d(&self, f: &Form) -> Form {
        let mut out = Form::zero();
        for (m, c) in f.terms() {
            let mono = Form::term(m, Coefficient::one());
            out = out
                + self
                    .d_coefficient(c)
                    .wedge(&mono)
                    .expect("constant monomial")
                + self.dmono[m.mask() as usize]
                    .mul_coefficient(c)
                    .expect("constant monomial");
        }
        out
    }

    /// Lie derivative along `F_a`, as the derivation with `F_a(c_Z) = c_{[F_a, Z]}`
    /// on coefficients and `L gamma^k = F_a ⌟ d gamma^k` on generators.
    pub fn lie_derivative(&self, a: usize, f: &Form) -> Form {
        let mut out = Form::zero();
        for (m, c) in f.terms() {
            out.add_term(m, self.frame_derivative(a, c));
            let idx: Vec<usize> = m.indices().collect();
            for (pos, &k) in idx.iter().enumerate() {
                let lk = self.dgen[k].interior_frame(a);
                let before = Form::generators(&idx[..pos]);
                let after = Form::generators(&idx[pos + 1..]);
                let piece = before
                    .wedge(&lk)
                    .and_then(|x| x.wedge(&after))
                    .and_then(|x| x.mul_coefficient(c))
                    .expect("constant generators");
                out = out + piece;
            }
        }
        out
    }

    /// `true` if the structure constants satisfy the Jacobi identity.
    pub fn jacobi_holds(&self) -> bool {
        let c = &self.structure;
        (0..NGEN).all(|a| {
            (0..NGEN).all(|b| {
                (0..NGEN).all(|e| {
                    (0..NGEN).all(|m| {
                        let mut s = Q::zero();
                        for k in 0..NGEN {
                            s += c[b][e][k] * c[a][k][m]
                                + c[e][a][k] * c[b][k][m]
                                + c[a][b][k] * c[e][k][m];
                        }
                        s.is_zero()
                    })
                })
            })
        })
    }
}

impl Default for LieBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// The shared `u3` basis.
pub fn lie_basis() -> &'static LieBasis {
    static BASIS: OnceLock<LieBasis> = OnceLock::new();
    BASIS.get_or_init(LieBasis::new)
}

/// Exterior derivative.
pub fn d(f: &Form) -> Form {
    lie_basis().d(f)
}

/// `true` iff `f` descends to the flag manifold: it is horizontal and every
/// vertical frame vector's Lie derivative kills it.
pub fn basic_check(f: &Form) -> bool {
    f.is_horizontal() && (6..NGEN).all(|a| lie_basis().lie_derivative(a, f).is_zero())
}
