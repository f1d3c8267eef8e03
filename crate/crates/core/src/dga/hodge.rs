use num_traits::Zero;

use super::coefficient::Coefficient;
use super::form::{Form, Mono};
use super::lie::d;
use super::DgaError;
use crate::rational::Q;

const HORIZONTAL_ALL: u16 = 0b11_1111;

/// Pointwise inner product of horizontal forms; the `e^i` are orthonormal.
pub fn inner(a: &Form, b: &Form) -> Result<Coefficient, DgaError> {
    a.require_horizontal()?;
    b.require_horizontal()?;
    let mut s = Coefficient::zero();
    for (m, x) in a.terms() {
        let y = b.coefficient(m);
        if !y.is_zero() {
            s += x.try_mul(&y)?;
        }
    }
    Ok(s)
}

/// The volume form `-e^{123456}`.
pub fn volume() -> Form {
    -Form::e(&[1, 2, 3, 4, 5, 6])
}

/// Hodge star of a horizontal form, with `a ∧ *b = <a, b> vol`.
pub fn hodge_star(a: &Form) -> Result<Form, DgaError> {
    a.require_horizontal()?;
    let mut out = Form::zero();
    for (m, c) in a.terms() {
        let comp = Mono::from_mask(HORIZONTAL_ALL & !m.mask());
        let (sign, _) = m.wedge(comp).expect("disjoint");
        // e_I ∧ (s e_{I^c}) = s sign e^{123456} must equal -e^{123456}
        out.add_term(comp, c.scale(Q::from_integer((-sign).into())));
    }
    Ok(out)
}

/// `delta = -*d*`, the formal adjoint of `d` in every degree on a 6-manifold.
pub fn codifferential(a: &Form) -> Result<Form, DgaError> {
    Ok(-hodge_star(&d(&hodge_star(a)?))?)
}

/// `Delta = d delta + delta d`.
pub fn laplacian(a: &Form) -> Result<Form, DgaError> {
    Ok(d(&codifferential(a)?) + codifferential(&d(a))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn star_squares_to_sign() {
        for mask in 0u16..64 {
            let f = Form::term(Mono::from_mask(mask), Coefficient::one());
            let p = mask.count_ones() as i64;
            let twice = hodge_star(&hodge_star(&f).unwrap()).unwrap();
            assert_eq!(twice, f.scale(qi(if p % 2 == 0 { 1 } else { -1 })));
        }
    }

    #[test]
    fn star_of_one_is_volume() {
        assert_eq!(hodge_star(&Form::constant(qi(1))).unwrap(), volume());
    }

    #[test]
    fn norm_identity() {
        let a = Form::e(&[1, 3]).scale(qi(2)) - Form::e(&[2, 5]);
        let lhs = a.wedge(&hodge_star(&a).unwrap()).unwrap();
        assert_eq!(lhs, volume().scale(qi(5)));
    }

    #[test]
    fn vertical_rejected() {
        assert_eq!(hodge_star(&Form::h(1)), Err(DgaError::VerticalComponent));
    }

    #[test]
    fn laplacian_of_constant() {
        assert!(laplacian(&Form::constant(qi(7))).unwrap().is_zero());
    }
}
