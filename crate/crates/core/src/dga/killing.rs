use num_traits::Zero;

use super::coefficient::{Coefficient, NCOEF};
use super::form::Form;
use super::lie::{d, metric, u3_matrices};
use super::model::{apply_j, type_decompose};
use super::DgaError;
use crate::matrix::CMat;
use crate::rational::Q;

/// Values of the coefficient symbols at the identity for a fixed `xi` in
/// `su3`: `x_i = g(xi, e_i)`, `v_j = g(xi, h_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingData {
    /// `[1, x1..x6, v1, v2]`.
    pub values: [Q; NCOEF],
    pub v3: Q,
}

impl KillingData {
    pub fn new(xi: &CMat) -> Result<Self, DgaError> {
        if xi.size() != 3 || !xi.is_skew_hermitian() {
            return Err(DgaError::NotSkewHermitian);
        }
        if !xi.trace().im.is_zero() {
            return Err(DgaError::NotTraceless);
        }
        let basis = u3_matrices();
        let mut values = [Q::zero(); NCOEF];
        values[0] = Q::from_integer(1);
        for (k, b) in basis.iter().take(8).enumerate() {
            values[k + 1] = metric(xi, b);
        }
        Ok(Self {
            values,
            v3: metric(xi, &basis[8]),
        })
    }

    pub fn evaluate(&self, c: &Coefficient) -> Q {
        c.evaluate(&self.values)
    }

    /// The form with every coefficient evaluated at the identity.
    pub fn evaluate_form(&self, f: &Form) -> Form {
        f.map_coefficients(|c| Coefficient::constant(self.evaluate(c)))
    }
}

/// The forms attached to a Killing field `xi`, symbolic in `x`, `v`.
#[derive(Debug, Clone)]
pub struct SymbolicKilling {
    /// `xi^flat = sum_i x_i e^i`.
    pub xi: Form,
    pub j_xi: Form,
    /// `a_1 = x6 e5 - x5 e6`, `a_2 = x3 e4 - x4 e3`, `a_3 = x2 e1 - x1 e2`.
    pub a: [Form; 3],
    pub ja: [Form; 3],
    /// `v1 e56 - v2 e34 + v3 e12`.
    pub phi_v: Form,
    /// Primitive `(1,1)` part of `d xi^flat`.
    pub phi_k: Form,
}

fn lin(terms: &[(Coefficient, usize)]) -> Form {
    terms.iter().fold(Form::zero(), |acc, (c, i)| {
        acc + Form::e(&[*i])
            .mul_coefficient(c)
            .expect("constant generator")
    })
}

impl SymbolicKilling {
    pub fn new() -> Self {
        let x = Coefficient::x;
        let xi = lin(&(1..=6).map(|i| (x(i as u8), i)).collect::<Vec<_>>());
        let a = [
            lin(&[(x(6), 5), (-x(5), 6)]),
            lin(&[(x(3), 4), (-x(4), 3)]),
            lin(&[(x(2), 1), (-x(1), 2)]),
        ];
        let ja = a.clone().map(|f| apply_j(&f).expect("horizontal"));
        let v = Coefficient::v;
        let phi_v = Form::e(&[5, 6]).mul_coefficient(&v(1)).expect("linear")
            - Form::e(&[3, 4]).mul_coefficient(&v(2)).expect("linear")
            + Form::e(&[1, 2]).mul_coefficient(&v(3)).expect("linear");
        let phi_k = type_decompose(&d(&xi))
            .expect("d xi is horizontal")
            .primitive_11;
        Self {
            j_xi: apply_j(&xi).expect("horizontal"),
            xi,
            a,
            ja,
            phi_v,
            phi_k,
        }
    }
}

impl Default for SymbolicKilling {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{im, re};
    use crate::rational::qi;

    #[test]
    fn printed_shapes() {
        let k = SymbolicKilling::new();
        assert_eq!(k.a[2].to_string(), "x2 e1 - x1 e2");
        assert_eq!(k.ja[0].to_string(), "x5 e5 + x6 e6");
        assert_eq!(k.phi_v.to_string(), "v3 e12 - v2 e34 + v1 e56");
        assert_eq!(k.ja[0].clone() + k.ja[1].clone() + k.ja[2].clone(), k.xi);
    }

    #[test]
    fn killing_data_of_basis_elements() {
        let b = u3_matrices();
        let kd = KillingData::new(&b[0]).unwrap();
        assert_eq!(kd.values[1], qi(1));
        assert!(kd.values[2..].iter().all(Zero::is_zero));
        let h = b[6].sub(&b[7]);
        let kd = KillingData::new(&h).unwrap();
        assert_eq!(
            (kd.values[7], kd.values[8], kd.v3),
            (Q::new(1, 2), Q::new(-1, 2), Q::zero())
        );
    }

    #[test]
    fn rejects_bad_input() {
        let b = u3_matrices();
        assert_eq!(KillingData::new(&b[6]), Err(DgaError::NotTraceless));
        let herm = CMat::unit(3, 0, 1, re(qi(1))).add(&CMat::unit(3, 1, 0, re(qi(1))));
        assert_eq!(KillingData::new(&herm), Err(DgaError::NotSkewHermitian));
        assert!(KillingData::new(&CMat::unit(3, 0, 0, im(qi(1)))).is_err());
    }
}
