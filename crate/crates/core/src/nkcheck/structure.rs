use num_traits::Zero;

use super::VerificationReport;
use crate::dga::{
    d, hook_psi_plus, model, parse_form, Coefficient, Form, SymbolicKilling, NCOEF, NGEN,
};
use crate::rational::{qi, Q};

fn expect(s: &str) -> Form {
    parse_form(s).expect("well-formed expected form")
}

/// Maurer-Cartan equations of the frame, the derived equations for
/// `e_{12}`, `v_j` and `Ja_j`, the nearly Kähler system, and `d^2 = 0`.
pub fn verify_structure_equations() -> VerificationReport {
    let mut r = VerificationReport::new("structure-equations");
    let de = [
        "-2 e2^h1 + 2 e2^h2 + e35 + e46",
        "2 e1^h1 - 2 e1^h2 + e45 - e36",
        "2 e4^h3 - 2 e4^h1 - e15 + e26",
        "-2 e3^h3 + 2 e3^h1 - e25 - e16",
        "-2 e6^h2 + 2 e6^h3 + e13 + e24",
        "2 e5^h2 - 2 e5^h3 + e14 - e23",
    ];
    for (i, rhs) in de.iter().enumerate() {
        r.equal(
            format!("de{}", i + 1),
            Ok(d(&Form::e(&[i + 1]))),
            Ok(expect(rhs)),
        );
    }

    let m = model();
    r.equal(
        "d(e12) = Psi+",
        Ok(d(&Form::e(&[1, 2]))),
        Ok(m.psi_plus.clone()),
    );
    r.equal(
        "d(e34) = -Psi+",
        Ok(d(&Form::e(&[3, 4]))),
        Ok(-m.psi_plus.clone()),
    );
    r.equal(
        "d(e56) = Psi+",
        Ok(d(&Form::e(&[5, 6]))),
        Ok(m.psi_plus.clone()),
    );

    let k = SymbolicKilling::new();
    let [a1, a2, a3] = &k.a;
    let v = |j: u8| Form::function(Coefficient::v(j));
    r.equal("dv1 = a2 - a3", Ok(d(&v(1))), Ok(a2 - a3));
    r.equal("dv2 = a3 - a1", Ok(d(&v(2))), Ok(a3 - a1));
    r.equal("dv3 = a1 - a2", Ok(d(&v(3))), Ok(a1 - a2));

    let four_v = |i: u8, j: u8, mono: &[usize]| {
        Form::e(mono)
            .mul_coefficient(&(Coefficient::v(i) - Coefficient::v(j)).scale(qi(4)))
            .expect("linear")
    };
    let signed = |s: [i64; 3]| -> Form {
        k.a.iter()
            .zip(s)
            .fold(Form::zero(), |acc, (a, c)| acc + a.scale(qi(c)))
    };
    r.equal(
        "d(Ja1) = (-a1 + a2 + a3)⌟Psi+ + 4(v2 - v3)e56",
        Ok(d(&k.ja[0])),
        hook_psi_plus(&signed([-1, 1, 1])).map(|f| f + four_v(2, 3, &[5, 6])),
    );
    r.equal(
        "d(Ja2) = (a1 - a2 + a3)⌟Psi+ + 4(v1 - v3)e34",
        Ok(d(&k.ja[1])),
        hook_psi_plus(&signed([1, -1, 1])).map(|f| f + four_v(1, 3, &[3, 4])),
    );
    r.equal(
        "d(Ja3) = (a1 + a2 - a3)⌟Psi+ + 4(v1 - v2)e12",
        Ok(d(&k.ja[2])),
        hook_psi_plus(&signed([1, 1, -1])).map(|f| f + four_v(1, 2, &[1, 2])),
    );

    r.equal("dω = 3Psi+", Ok(d(&m.omega)), Ok(m.psi_plus.scale(qi(3))));
    r.equal(
        "dPsi- = -2ω∧ω",
        Ok(d(&m.psi_minus)),
        m.omega.wedge(&m.omega).map(|f| f.scale(qi(-2))),
    );

    for g in 0..NGEN {
        r.zero(format!("d²γ{g}"), Ok(d(&d(&Form::generators(&[g])))));
    }
    for s in 1..NCOEF {
        let mut raw = [Q::zero(); NCOEF];
        raw[s] = qi(1);
        let c = Form::function(Coefficient::from_raw(raw));
        r.zero(format!("d²{c}"), Ok(d(&d(&c))));
    }
    r
}
