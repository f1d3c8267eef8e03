use std::sync::OnceLock;

use num_traits::Zero;

use super::coefficient::Coefficient;
use super::form::{Form, Mono};
use super::hodge::{inner, volume};
use super::DgaError;
use crate::rational::{q, qi};

/// The `SU3`-structure of the model: `omega`, `Psi^+`, `Psi^-`, the volume
/// form and `J` with `Je1 = e2, Je3 = -e4, Je5 = e6`.
#[derive(Debug, Clone)]
pub struct ModelConstants {
    pub omega: Form,
    pub psi_plus: Form,
    pub psi_minus: Form,
    pub volume: Form,
}

impl ModelConstants {
    pub fn new() -> Self {
        let e = Form::e;
        Self {
            omega: e(&[1, 2]) - e(&[3, 4]) + e(&[5, 6]),
            psi_plus: e(&[1, 3, 6]) + e(&[2, 4, 6]) + e(&[2, 3, 5]) - e(&[1, 4, 5]),
            psi_minus: e(&[2, 3, 6]) - e(&[1, 4, 6]) - e(&[1, 3, 5]) - e(&[2, 4, 5]),
            volume: volume(),
        }
    }
}

impl Default for ModelConstants {
    fn default() -> Self {
        Self::new()
    }
}

pub fn model() -> &'static ModelConstants {
    static MODEL: OnceLock<ModelConstants> = OnceLock::new();
    MODEL.get_or_init(ModelConstants::new)
}

/// Image of `e^{i+1}` under `J` as `(sign, index)`, 0-based.
const J_TABLE: [(i64, usize); 6] = [(1, 1), (-1, 0), (-1, 3), (1, 2), (1, 5), (-1, 4)];

/// `J` extended to horizontal forms as an algebra automorphism. On 1-forms
/// this is `theta -> (J theta^sharp)^flat`; on 2-forms it is
/// `alpha -> alpha(J., J.)`.
pub fn apply_j(a: &Form) -> Result<Form, DgaError> {
    a.require_horizontal()?;
    let mut out = Form::zero();
    for (m, c) in a.terms() {
        let mut img = Form::constant(qi(1));
        for i in m.indices() {
            let (s, j) = J_TABLE[i];
            img = img
                .wedge(&Form::generators(&[j]).scale(qi(s)))
                .expect("constant generators");
        }
        out = out + img.mul_coefficient(c)?;
    }
    Ok(out)
}

/// The metric adjoint of `X -> X ⌟ Psi^+`, returned as a 1-form:
/// `alpha(beta) = sum_i <beta, e_i ⌟ Psi^+> e^i`. It satisfies
/// `alpha(X ⌟ Psi^+) = 2X`.
pub fn alpha_adjoint(beta: &Form) -> Result<Form, DgaError> {
    require_degree(beta, 2)?;
    let mut out = Form::zero();
    for i in 0..6 {
        let c = inner(beta, &model().psi_plus.interior_frame(i))?;
        out.add_term(Mono::from_mask(1 << i), c);
    }
    Ok(out)
}

fn require_degree(a: &Form, p: usize) -> Result<(), DgaError> {
    a.require_horizontal()?;
    if a.has_degree(p) {
        Ok(())
    } else {
        Err(DgaError::WrongDegree {
            expected: p,
            found: a.degree(),
        })
    }
}

/// The splitting of a 2-form into primitive `(1,1)`, `(2,0)+(0,2)` and trace
/// parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecomposition {
    pub primitive_11: Form,
    pub part_20: Form,
    pub trace: Form,
    /// `Y = alpha(a)/2`, with `part_20 = Y ⌟ Psi^+`.
    pub y: Form,
}

impl TypeDecomposition {
    pub fn recompose(&self) -> Form {
        &(&self.primitive_11 + &self.part_20) + &self.trace
    }
}

pub fn type_decompose(a: &Form) -> Result<TypeDecomposition, DgaError> {
    require_degree(a, 2)?;
    let omega = &model().omega;
    let ja = apply_j(a)?;
    let half = q(1, 2);
    let p11 = (a + &ja).scale(half);
    let trace = omega.mul_coefficient(&inner(a, omega)?.scale(q(1, 3)))?;
    Ok(TypeDecomposition {
        primitive_11: p11 - trace.clone(),
        part_20: (a - &ja).scale(half),
        trace,
        y: alpha_adjoint(a)?.scale(half),
    })
}

/// `true` if `a` is a primitive `(1,1)`-form.
pub fn is_primitive_11(a: &Form) -> Result<bool, DgaError> {
    Ok(apply_j(a)? == *a && inner(a, &model().omega)?.is_zero())
}

/// `theta ⌟ Psi^+` for a horizontal 1-form `theta`.
pub fn hook_psi_plus(theta: &Form) -> Result<Form, DgaError> {
    Form::hook(theta, &model().psi_plus)
}

/// A 2-form's coefficient in front of `omega` in the trace part.
pub fn omega_component(a: &Form) -> Result<Coefficient, DgaError> {
    Ok(inner(a, &model().omega)?.scale(q(1, 3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dga::hodge::hodge_star;

    #[test]
    fn algebraic_relations() {
        let m = model();
        assert!(m.omega.wedge(&m.psi_plus).unwrap().is_zero());
        let w2 = m.omega.wedge(&m.omega).unwrap();
        let w3 = w2.wedge(&m.omega).unwrap();
        assert_eq!(w3, m.volume.scale(qi(6)));
        assert_eq!(m.psi_plus.wedge(&m.psi_minus).unwrap(), w3.scale(q(2, 3)));
    }

    #[test]
    fn j_fixes_omega_and_squares_to_minus_one() {
        let m = model();
        assert_eq!(apply_j(&m.omega).unwrap(), m.omega);
        for i in 1..=6 {
            let e = Form::e(&[i]);
            assert_eq!(apply_j(&apply_j(&e).unwrap()).unwrap(), -e);
        }
        assert_eq!(apply_j(&Form::e(&[3])).unwrap(), -Form::e(&[4]));
    }

    #[test]
    fn alpha_of_hook_is_twice() {
        for i in 1..=6 {
            let x = Form::e(&[i]);
            assert_eq!(
                alpha_adjoint(&hook_psi_plus(&x).unwrap()).unwrap(),
                x.scale(qi(2))
            );
        }
    }

    #[test]
    fn decomposition_examples() {
        let m = model();
        let t = type_decompose(&m.omega).unwrap();
        assert!(t.primitive_11.is_zero() && t.part_20.is_zero());
        assert_eq!(t.trace, m.omega);

        let t = type_decompose(&Form::e(&[1, 3])).unwrap();
        assert!(!t.primitive_11.is_zero() && !t.part_20.is_zero());
        assert_eq!(t.recompose(), Form::e(&[1, 3]));
        assert_eq!(hook_psi_plus(&t.y).unwrap(), t.part_20);
    }

    #[test]
    fn a7_on_sample() {
        let phi = Form::e(&[1, 2]) + Form::e(&[3, 4]);
        let s = hodge_star(&phi.wedge(&model().omega).unwrap()).unwrap();
        assert_eq!(s, -phi);
    }
}
