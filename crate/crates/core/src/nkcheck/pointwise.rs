use num_traits::Zero;

use super::VerificationReport;
use crate::dga::{
    apply_j, hodge_star, hook_psi_plus, inner, model, type_decompose, DgaError, Form,
};
use crate::rational::{q, qi, rank, Q};

/// A fixed non-basis vector used alongside the basis.
fn sample_vectors() -> Vec<Form> {
    let coords = [
        [qi(1), qi(-2), q(1, 2), qi(3), qi(0), qi(-1)],
        [q(-2, 3), qi(0), qi(5), q(1, 7), qi(2), qi(1)],
    ];
    coords
        .iter()
        .map(|c| {
            c.iter().enumerate().fold(Form::zero(), |acc, (i, x)| {
                acc + Form::e(&[i + 1]).scale(*x)
            })
        })
        .collect()
}

fn basis_vectors() -> Vec<Form> {
    (1..=6).map(|i| Form::e(&[i])).collect()
}

/// Matrix of `A_X = -Psi^+_{JX}`: column `c` holds `A_X e_c`, where the
/// endomorphism of a 2-form `b` is `Z -> (Z ⌟ b)^sharp`.
pub fn a_endomorphism(x: &Form) -> Result<Vec<Vec<Q>>, DgaError> {
    let b = -hook_psi_plus(&apply_j(x)?)?;
    let mut m = vec![vec![Q::zero(); 6]; 6];
    for c in 0..6 {
        let img = b.interior_frame(c);
        for (mono, coef) in img.terms() {
            let r = mono.indices().next().expect("1-form");
            m[r][c] = coef.constant_part();
        }
    }
    Ok(m)
}

fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn column_form(m: &[Vec<Q>], c: usize) -> Form {
    (0..6).fold(Form::zero(), |acc, r| {
        acc + Form::e(&[r + 1]).scale(m[r][c])
    })
}

/// Primitive `(1,1)` parts of all `e^{ij}`, and a spanning subset of size 8.
pub fn primitive_11_basis() -> Vec<Form> {
    let mut basis: Vec<Form> = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 1..=6 {
        for j in i + 1..=6 {
            let p = type_decompose(&Form::e(&[i, j]))
                .expect("2-form")
                .primitive_11;
            let row = flatten(&p);
            let mut trial = rows.clone();
            trial.push(row.clone());
            if rank(&trial) > rows.len() {
                rows = trial;
                basis.push(p);
            }
        }
    }
    basis
}

fn flatten(f: &Form) -> Vec<Q> {
    let mut v = vec![Q::zero(); 64];
    for (m, c) in f.terms() {
        v[usize::from(m.mask()) & 63] = c.constant_part();
    }
    v
}

pub fn verify_pointwise_identities() -> VerificationReport {
    let mut r = VerificationReport::new("pointwise");
    let m = model();
    let w2 = m.omega.wedge(&m.omega).expect("constant");
    let mut xs = basis_vectors();
    xs.extend(sample_vectors());

    for (n, x) in xs.iter().enumerate() {
        let jx = apply_j(x).expect("horizontal");
        let tag = |eq: &str| format!("{eq} X#{n}");
        let ax = hook_psi_plus(&jx);
        let norm_a = ax.and_then(|b| inner(&b, &b));
        let norm_x = inner(x, x).expect("horizontal");
        r.holds(
            tag("a0 |A_X|^2 = 2|X|^2"),
            norm_a.as_ref().is_ok_and(|c| *c == norm_x.scale(qi(2))),
            format!("{norm_a:?} vs {norm_x}"),
        );
        r.equal(
            tag("a3 X⌟Psi- = -JX⌟Psi+"),
            Form::hook(x, &m.psi_minus),
            hook_psi_plus(&jx).map(|f| -f),
        );
        r.equal(
            tag("a4 (X⌟Psi+)∧Psi+ = X∧ω²"),
            hook_psi_plus(x).and_then(|f| f.wedge(&m.psi_plus)),
            x.wedge(&w2),
        );
        r.equal(
            tag("a5 (JX⌟Psi+)∧ω = X∧Psi+"),
            hook_psi_plus(&jx).and_then(|f| f.wedge(&m.omega)),
            x.wedge(&m.psi_plus),
        );
        r.equal(
            tag("a6 *(X∧Psi+) = JX⌟Psi+"),
            x.wedge(&m.psi_plus).and_then(|f| hodge_star(&f)),
            hook_psi_plus(&jx),
        );
        r.equal(
            tag("a8 *(JX∧ω²) = -2X"),
            jx.wedge(&w2).and_then(|f| hodge_star(&f)),
            Ok(x.scale(qi(-2))),
        );
        let a10 = a_endomorphism(x).and_then(|a| {
            (0..6).try_fold(Form::zero(), |acc, i| {
                let t = column_form(&a, i).wedge(&m.psi_plus.interior_frame(i))?;
                Ok(acc + t)
            })
        });
        r.equal(
            tag("a10 A_X e_i ∧ e_i⌟Psi+ = -2X∧ω"),
            a10,
            x.wedge(&m.omega).map(|f| f.scale(qi(-2))),
        );
    }

    let mut sum = vec![vec![Q::zero(); 6]; 6];
    for e in basis_vectors() {
        let a = a_endomorphism(&e).expect("horizontal");
        let a2 = matmul(&a, &a);
        for i in 0..6 {
            for j in 0..6 {
                sum[i][j] += a2[i][j];
            }
        }
    }
    let minus_four =
        (0..6).all(|i| (0..6).all(|j| sum[i][j] == if i == j { qi(-4) } else { Q::zero() }));
    r.holds("a1 A_{e_i}A_{e_i} = -4 id", minus_four, format!("{sum:?}"));

    let prim = primitive_11_basis();
    r.holds(
        "primitive (1,1) space has dimension 8",
        prim.len() == 8,
        format!("{}", prim.len()),
    );
    for (n, phi) in prim.iter().enumerate() {
        r.equal(
            format!("a7 *(φ∧ω) = -φ φ#{n} = {phi}"),
            phi.wedge(&m.omega).and_then(|f| hodge_star(&f)),
            Ok(-phi.clone()),
        );
    }
    r.equal(
        "Psi- = *Psi+",
        hodge_star(&m.psi_plus),
        Ok(m.psi_minus.clone()),
    );
    let sample = Form::e(&[1, 2]) + Form::e(&[3, 4]);
    r.equal(
        "a7 on e12 + e34",
        sample.wedge(&m.omega).and_then(|f| hodge_star(&f)),
        Ok(-sample.clone()),
    );
    r.holds(
        "ω is J-invariant",
        apply_j(&m.omega).is_ok_and(|f| f == m.omega),
        "Jω != ω",
    );
    r
}
