use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::coefficient::Coefficient;
use super::DgaError;
use crate::rational::Q;

/// Total number of coframe generators: `e^1..e^6` then `h_1..h_3`.
pub const NGEN: usize = 9;
/// Mask of the vertical generators `h_1, h_2, h_3`.
pub const VERTICAL_MASK: u16 = 0b1_1100_0000;

/// A wedge monomial of coframe generators, stored as a bit set.
///
/// Bits `0..6` are `e^1..e^6`; bits `6..9` are the duals `h_1, h_2, h_3` of the
/// vertical frame vectors `2 h_j`. The generators occur in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono(u16);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn from_mask(mask: u16) -> Self {
        assert!(mask < 1 << NGEN, "mask has bits beyond the nine generators");
        Self(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..NGEN).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_horizontal(self) -> bool {
        self.0 & VERTICAL_MASK == 0
    }

    /// Sign and product of `self ∧ other`, `None` if they share a generator.
    pub fn wedge(self, other: Mono) -> Option<(i32, Mono)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for j in other.indices() {
            swaps += (self.0 >> (j + 1)).count_ones();
        }
        Some((if swaps % 2 == 0 { 1 } else { -1 }, Mono(self.0 | other.0)))
    }

    /// Sign and remainder of contracting the `a`-th frame vector into `self`.
    pub fn contract(self, a: usize) -> Option<(i32, Mono)> {
        if !self.contains(a) {
            return None;
        }
        let before = (self.0 & ((1 << a) - 1)).count_ones();
        Some((
            if before.is_multiple_of(2) { 1 } else { -1 },
            Mono(self.0 & !(1 << a)),
        ))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A left-invariant form with coefficients in the linear Killing-field
/// functions: a finite sum `sum_I c_I gamma^I`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Form {
    terms: BTreeMap<Mono, Coefficient>,
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: Q) -> Self {
        Self::term(Mono::ONE, Coefficient::constant(c))
    }

    pub fn function(c: Coefficient) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: Coefficient) -> Self {
        let mut f = Self::zero();
        f.add_term(m, c);
        f
    }

    /// `gamma^{i_1} ∧ ... ∧ gamma^{i_p}` for 0-based generator indices in any order.
    pub fn generators(idx: &[usize]) -> Self {
        idx.iter()
            .fold(Self::constant(Q::from_integer(1)), |acc, &i| {
                acc.wedge(&Self::term(Mono::from_mask(1 << i), Coefficient::one()))
                    .expect("constant coefficients")
            })
    }

    /// `e^{i_1} ∧ ... ` from 1-based horizontal indices, e.g. `e(&[1, 3, 6])`.
    pub fn e(idx: &[usize]) -> Self {
        assert!(
            idx.iter().all(|i| (1..=6).contains(i)),
            "e indices are 1..=6"
        );
        Self::generators(&idx.iter().map(|i| i - 1).collect::<Vec<_>>())
    }

    /// The vertical generator dual to `2 h_j`, 1-based.
    pub fn h(j: usize) -> Self {
        assert!((1..=3).contains(&j), "h indices are 1..=3");
        Self::generators(&[5 + j])
    }

    pub fn add_term(&mut self, m: Mono, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Coefficient::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono, &Coefficient)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, m: Mono) -> Coefficient {
        self.terms
            .get(&m)
            .copied()
            .unwrap_or_else(Coefficient::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed forms.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `true` for zero or forms of degree `p`.
    pub fn has_degree(&self, p: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == p)
    }

    pub fn is_horizontal(&self) -> bool {
        self.terms.keys().all(|m| m.is_horizontal())
    }

    pub fn require_horizontal(&self) -> Result<(), DgaError> {
        if self.is_horizontal() {
            Ok(())
        } else {
            Err(DgaError::VerticalComponent)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.values().all(Coefficient::is_constant)
    }

    pub fn scale(&self, c: Q) -> Self {
        self.map_coefficients(|x| x.scale(c))
    }

    pub fn map_coefficients(&self, f: impl Fn(&Coefficient) -> Coefficient) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_term(m, f(c));
        }
        out
    }

    pub fn mul_coefficient(&self, c: &Coefficient) -> Result<Self, DgaError> {
        let mut out = Self::zero();
        for (m, x) in self.terms() {
            out.add_term(m, x.try_mul(c)?);
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, DgaError> {
        let mut out = Self::zero();
        for (m, a) in self.terms() {
            for (n, b) in other.terms() {
                if let Some((sign, mn)) = m.wedge(n) {
                    out.add_term(mn, a.try_mul(b)?.scale(Q::from_integer(sign.into())));
                }
            }
        }
        Ok(out)
    }

    /// Contraction with the `a`-th frame vector (`e_1..e_6`, `2h_1..2h_3`).
    pub fn interior_frame(&self, a: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if let Some((sign, rest)) = m.contract(a) {
                out.add_term(rest, c.scale(Q::from_integer(sign.into())));
            }
        }
        out
    }

    /// Contraction with the vector `sum_a v[a] F_a`.
    pub fn interior(&self, v: &[Coefficient; NGEN]) -> Result<Self, DgaError> {
        let mut out = Self::zero();
        for (a, va) in v.iter().enumerate() {
            if !va.is_zero() {
                out = out + self.interior_frame(a).mul_coefficient(va)?;
            }
        }
        Ok(out)
    }

    /// Components of the metric dual of a horizontal 1-form in the frame.
    pub fn sharp(&self) -> Result<[Coefficient; NGEN], DgaError> {
        self.require_horizontal()?;
        if !self.has_degree(1) {
            return Err(DgaError::WrongDegree {
                expected: 1,
                found: self.degree(),
            });
        }
        let mut v = [Coefficient::zero(); NGEN];
        for (m, c) in self.terms() {
            v[m.indices().next().expect("degree one")] = *c;
        }
        Ok(v)
    }

    /// `theta^sharp ⌟ self` for a horizontal 1-form `theta`.
    pub fn hook(theta: &Self, alpha: &Self) -> Result<Self, DgaError> {
        alpha.interior(&theta.sharp()?)
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, rhs: Form) -> Form {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.clone() + rhs.clone()
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(mut self, rhs: Form) -> Form {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self.clone() - rhs.clone()
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.map_coefficients(|c| -*c)
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.map_coefficients(|c| -*c)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::mono_to_string(*self))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::form_to_string(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn antisymmetry() {
        assert_eq!(
            Form::e(&[1]).wedge(&Form::e(&[2])).unwrap(),
            Form::e(&[1, 2])
        );
        assert_eq!(Form::e(&[2, 1]), -Form::e(&[1, 2]));
        assert!(Form::e(&[3, 3]).is_zero());
    }

    #[test]
    fn contraction_signs() {
        // e_3 ⌟ e^{136} = -e^{16}
        assert_eq!(Form::e(&[1, 3, 6]).interior_frame(2), -Form::e(&[1, 6]));
        assert_eq!(Form::e(&[1, 3, 6]).interior_frame(0), Form::e(&[3, 6]));
        assert!(Form::e(&[1, 3]).interior_frame(4).is_zero());
    }

    #[test]
    fn monomial_order_is_degree_then_lexicographic() {
        let mut ms = [
            Form::e(&[3, 4]),
            Form::e(&[1, 2]),
            Form::e(&[2]),
            Form::e(&[5, 6]),
        ];
        ms.sort_by_key(|f| f.terms().next().unwrap().0);
        let s: Vec<String> = ms.iter().map(|f| f.to_string()).collect();
        assert_eq!(s, vec!["e2", "e12", "e34", "e56"]);
    }

    #[test]
    fn nonlinear_wedge_rejected() {
        let a = Form::e(&[1]).mul_coefficient(&Coefficient::x(1)).unwrap();
        let b = Form::e(&[2]).mul_coefficient(&Coefficient::v(1)).unwrap();
        assert_eq!(a.wedge(&b), Err(DgaError::NonlinearCoefficient));
        assert_eq!(a.wedge(&Form::e(&[2]).scale(qi(2))).unwrap().len(), 1);
    }
}
