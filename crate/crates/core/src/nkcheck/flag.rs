use num_traits::Zero;

use super::VerificationReport;
use crate::branching::SpaceId;
use crate::dga::{
    alpha_adjoint, apply_j, basic_check, codifferential, d, hook_psi_plus, inner, is_primitive_11,
    laplacian, model, type_decompose, u3_matrices, Coefficient, DgaError, Form, KillingData,
    SymbolicKilling,
};
use crate::rational::{qi, rank, Q};
use crate::spectrum::moduli_upper_bound;

type R = Result<Form, DgaError>;

fn j(f: &Form) -> R {
    apply_j(f)
}

/// `(Delta - Delta-bar) phi = (J delta phi) ⌟ Psi^+` on primitive `(1,1)`-forms.
fn hermitian_laplacian_11(phi: &Form) -> R {
    let diff = hook_psi_plus(&j(&codifferential(phi)?)?)?;
    Ok(laplacian(phi)? - diff)
}

pub fn verify_killing_suite() -> VerificationReport {
    let mut r = VerificationReport::new("killing");
    let k = SymbolicKilling::new();
    let (xi, jxi, phi) = (&k.xi, &k.j_xi, &k.phi_k);
    r.holds("xi is basic", basic_check(xi), xi.to_string());
    r.holds("J xi is basic", basic_check(jxi), jxi.to_string());
    r.zero("δξ = 0", codifferential(xi));
    r.equal(
        "dJξ = -3 ξ⌟Psi+",
        Ok(d(jxi)),
        hook_psi_plus(xi).map(|f| f.scale(qi(-3))),
    );
    r.zero("δJξ = 0", codifferential(jxi));
    r.equal("Δξ = 10ξ", laplacian(xi), Ok(xi.scale(qi(10))));
    r.equal("ΔJξ = 18Jξ", laplacian(jxi), Ok(jxi.scale(qi(18))));
    r.equal(
        "(dξ)^(2,0) = -Jξ⌟Psi+",
        type_decompose(&d(xi)).map(|t| t.part_20),
        hook_psi_plus(jxi).map(|f| -f),
    );
    r.holds(
        "<dξ, ω> = 0",
        inner(&d(xi), &model().omega).is_ok_and(|c| c.is_zero()),
        "dξ has a trace part",
    );
    r.equal(
        "dξ = φ - Jξ⌟Psi+",
        Ok(d(xi)),
        hook_psi_plus(jxi).map(|f| phi - &f),
    );
    r.equal("δφ = 8ξ", codifferential(phi), Ok(xi.scale(qi(8))));
    r.equal(
        "Δφ = 12φ + 8Jξ⌟Psi+",
        laplacian(phi),
        hook_psi_plus(jxi).map(|f| phi.scale(qi(12)) + f.scale(qi(8))),
    );
    r.equal(
        "dφ = -4Jξ∧ω",
        Ok(d(phi)),
        jxi.wedge(&model().omega).map(|f| f.scale(qi(-4))),
    );
    r.equal(
        "Δ̄φ = 12φ",
        hermitian_laplacian_11(phi),
        Ok(phi.scale(qi(12))),
    );
    r
}

/// `alpha(d theta) = 4 J theta + J alpha(d J theta)`.
fn alpha_d_residual(theta: &Form) -> R {
    let lhs = alpha_adjoint(&d(theta))?;
    let rhs = j(theta)?.scale(qi(4)) + j(&alpha_adjoint(&d(&j(theta)?))?)?;
    Ok(lhs - rhs)
}

pub fn verify_eigenfunction_suite() -> VerificationReport {
    let mut r = VerificationReport::new("eigenfunction");
    let lambda = qi(12);
    let f = Form::function(Coefficient::v(1));
    let df = d(&f);
    r.equal("Δv1 = 12v1", laplacian(&f), Ok(f.scale(lambda)));
    let jdf = match j(&df) {
        Ok(x) => x,
        Err(e) => {
            r.holds("Jdf", false, e.to_string());
            return r;
        }
    };
    let djdf = d(&jdf);
    let by_formula = hook_psi_plus(&df).and_then(|p| {
        let fw = model()
            .omega
            .mul_coefficient(&Coefficient::v(1).scale(lambda / qi(3)))?;
        Ok(&djdf + &p.scale(qi(2)) + fw)
    });
    let by_projector = type_decompose(&djdf).map(|t| t.primitive_11);
    r.equal(
        "η by formula = (dJdf)^(1,1)_0",
        by_formula.clone(),
        by_projector.clone(),
    );
    let eta = by_projector.unwrap_or_default();
    r.holds(
        "η is primitive (1,1)",
        is_primitive_11(&eta).unwrap_or(false),
        eta.to_string(),
    );
    let coef = lambda * qi(2) / qi(3) - qi(4);
    r.equal(
        "δη = (2λ/3 - 4)Jdf = 4Jdf",
        codifferential(&eta),
        Ok(jdf.scale(coef)),
    );
    r.equal(
        "Δ̄η = 12η",
        hermitian_laplacian_11(&eta),
        Ok(eta.scale(lambda)),
    );
    r.equal(
        "ΔJdf = (λ + 4)Jdf",
        laplacian(&jdf),
        Ok(jdf.scale(lambda + qi(4))),
    );
    r.zero("α(dθ) = 4Jθ + Jα(dJθ), θ = df", alpha_d_residual(&df));
    let k = SymbolicKilling::new();
    r.zero("α(dθ) = 4Jθ + Jα(dJθ), θ = ξ", alpha_d_residual(&k.xi));
    r.equal(
        "α(dξ) = -2Jξ",
        alpha_adjoint(&d(&k.xi)),
        Ok(k.j_xi.scale(qi(-2))),
    );
    r
}

/// Rank of `xi -> (phi_v, d phi_v)` at the identity over a basis of `su3`.
pub fn moduli_generator_rank() -> usize {
    let k = SymbolicKilling::new();
    let dphi = d(&k.phi_v);
    let b = u3_matrices();
    let mut su3: Vec<_> = b[..6].to_vec();
    su3.push(b[6].sub(&b[7]));
    su3.push(b[7].sub(&b[8]));
    let rows: Vec<Vec<Q>> = su3
        .iter()
        .map(|x| {
            let data = KillingData::new(x).expect("su3 element");
            let mut row = Vec::new();
            for f in [&k.phi_v, &dphi] {
                let v = data.evaluate_form(f);
                let mut dense = vec![Q::zero(); 1 << 9];
                for (m, c) in v.terms() {
                    dense[usize::from(m.mask())] = c.constant_part();
                }
                row.extend(dense);
            }
            row
        })
        .collect();
    rank(&rows)
}

pub fn verify_moduli_generators() -> VerificationReport {
    let mut r = VerificationReport::new("moduli-generators");
    let k = SymbolicKilling::new();
    let phi = &k.phi_v;
    let m = model();
    r.holds("φ_v is basic", basic_check(phi), phi.to_string());
    r.equal("Jφ_v = φ_v", j(phi), Ok(phi.clone()));
    r.holds(
        "<φ_v, ω> = 0",
        inner(phi, &m.omega).is_ok_and(|c| c.is_zero()),
        "trace part present",
    );
    r.zero("dφ_v ∧ ω = 0", d(phi).wedge(&m.omega));
    r.zero("δφ_v = 0", codifferential(phi));
    r.equal("Δφ_v = 12φ_v", laplacian(phi), Ok(phi.scale(qi(12))));
    r.equal(
        "Δ̄φ_v = 12φ_v",
        hermitian_laplacian_11(phi),
        Ok(phi.scale(qi(12))),
    );
    let rank = moduli_generator_rank();
    r.holds(
        "generator map su3 -> Ω(1,1)_0(12) has rank 8",
        rank == 8,
        format!("rank {rank}"),
    );
    match moduli_upper_bound(SpaceId::Flag) {
        Ok(rep) => r.holds(
            "rank equals the spectral upper bound",
            rep.nk_upper_bound_raw == rank as i64,
            format!("bound {} vs rank {rank}", rep.nk_upper_bound_raw),
        ),
        Err(e) => r.holds("rank equals the spectral upper bound", false, e.to_string()),
    }
    r
}

pub fn verify_injectivity_argument() -> VerificationReport {
    let mut r = VerificationReport::new("injectivity");
    let k = SymbolicKilling::new();
    let f = Form::function(Coefficient::v(1));
    let df = d(&f);
    let jdf = j(&df).expect("horizontal");
    let eta = type_decompose(&d(&jdf))
        .map(|t| t.primitive_11)
        .unwrap_or_default();
    // phi_K is linear in x and eta in v, so their sum stays in the linear fragment
    let sum = &k.phi_k + &eta;
    let delta = codifferential(&sum);
    r.equal(
        "δ(φ_K + η) = 8ξ + 4Jdf",
        delta.clone(),
        Ok(k.xi.scale(qi(8)) + jdf.scale(qi(4))),
    );
    r.zero("δJξ = 0", codifferential(&k.j_xi));
    r.equal("δdf = 12f", codifferential(&df), Ok(f.scale(qi(12))));
    r.equal(
        "δJ(δ(φ_K + η)) = -48f",
        delta.and_then(|x| codifferential(&j(&x)?)),
        Ok(f.scale(qi(-48))),
    );
    r
}
