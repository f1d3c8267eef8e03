//! Seed-pinned exact inputs shared by the acceptance binary and the
//! property tests.

#![allow(dead_code)]

use nk_core::dga::{d, hodge_star, Coefficient, Form, Mono, NCOEF, NGEN};
use nk_core::rational::{q, Q};
use nk_core::rootrep::{laplace_eigenvalue, Group, IrrepLabel};
use rand::Rng;

pub const SEED: u64 = 0x6e6b_5f73_7065_6374;

pub fn small_rational<R: Rng>(rng: &mut R) -> Q {
    q(rng.random_range(-6..=6), rng.random_range(1..=4))
}

pub fn coefficient<R: Rng>(rng: &mut R, linear: bool) -> Coefficient {
    let mut raw = [Q::from_integer(0); NCOEF];
    raw[0] = small_rational(rng);
    if linear {
        for r in raw.iter_mut().skip(1) {
            if rng.random_bool(0.3) {
                *r = small_rational(rng);
            }
        }
    }
    Coefficient::from_raw(raw)
}

/// A `p`-form with up to four terms over the first `ngen` generators.
pub fn form<R: Rng>(rng: &mut R, p: usize, ngen: usize, linear: bool) -> Form {
    let mut f = Form::zero();
    for _ in 0..rng.random_range(1..=4) {
        let mut idx: Vec<usize> = (0..ngen).collect();
        for i in (1..idx.len()).rev() {
            idx.swap(i, rng.random_range(0..=i));
        }
        let mask = idx[..p].iter().fold(0u16, |m, &i| m | (1 << i));
        f.add_term(Mono::from_mask(mask), coefficient(rng, linear));
    }
    f
}

/// `d(a ∧ b) - (da ∧ b + (-1)^p a ∧ db)` with `a` constant and `b` linear.
pub fn leibniz_residual(a: &Form, p: usize, b: &Form) -> Form {
    let lhs = d(&a.wedge(b).expect("constant factor"));
    let sign = if p.is_multiple_of(2) {
        Q::from_integer(1)
    } else {
        Q::from_integer(-1)
    };
    let rhs = d(a).wedge(b).expect("constant factor")
        + a.wedge(&d(b)).expect("constant factor").scale(sign);
    lhs - rhs
}

/// `** - (-1)^p` on a horizontal `p`-form.
pub fn star_squared_residual(a: &Form, p: usize) -> Form {
    let ss = hodge_star(&hodge_star(a).expect("horizontal")).expect("horizontal");
    let sign = if p.is_multiple_of(2) {
        Q::from_integer(1)
    } else {
        Q::from_integer(-1)
    };
    ss - a.scale(sign)
}

/// Every label of `group` with Laplace eigenvalue at most `cutoff`.
///
/// # Panics
///
/// If the fixed search box is too small for `cutoff`.
pub fn labels_up_to(group: Group, cutoff: Q) -> Vec<IrrepLabel> {
    const EDGE: u32 = 24;
    let n = group.label_len();
    let mut out = Vec::new();
    let mut c = vec![0u32; n];
    loop {
        if let Ok(l) = IrrepLabel::from_labels(group, &c) {
            let ev = laplace_eigenvalue(&l);
            let on_edge = c.iter().any(|&x| x + 1 == EDGE);
            assert!(!(on_edge && ev <= cutoff), "search box too small for {l}");
            if ev <= cutoff {
                out.push(l);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            c[i] += 1;
            if c[i] < EDGE {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub const ALL_GENERATORS: usize = NGEN;
