//! Verification suites: algebraic identities of an `SU3`-structure on the
//! model space, and the Killing-field and eigenfunction constructions on the
//! flag manifold. These are exact identities on the homogeneous model, not
//! proofs for general nearly Kähler manifolds.
//!
//! Eigenfunctions are taken from the `v` symbols, so the eigenfunction suite
//! runs at `lambda = 12` only.

mod flag;
mod pointwise;
mod structure;

use serde::{Deserialize, Serialize};

use crate::dga::{DgaError, Form};

pub use flag::{
    moduli_generator_rank, verify_eigenfunction_suite, verify_injectivity_argument,
    verify_killing_suite, verify_moduli_generators,
};
pub use pointwise::{a_endomorphism, primitive_11_basis, verify_pointwise_identities};
pub use structure::verify_structure_equations;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Printed residual; `"0"` for a passing check.
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, residual: String) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            residual,
        });
    }

    /// Records `lhs - rhs`, which must vanish identically.
    pub fn equal(
        &mut self,
        name: impl Into<String>,
        lhs: Result<Form, DgaError>,
        rhs: Result<Form, DgaError>,
    ) {
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let res = l - r;
                self.push(name, res.is_zero(), res.to_string());
            }
            (Err(e), _) | (_, Err(e)) => self.push(name, false, format!("error: {e}")),
        }
    }

    pub fn zero(&mut self, name: impl Into<String>, f: Result<Form, DgaError>) {
        self.equal(name, f, Ok(Form::zero()));
    }

    /// A non-form check; `detail` is reported when it fails.
    pub fn holds(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let residual = if ok { "0".to_string() } else { detail.into() };
        self.push(name, ok, residual);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Every suite, in a fixed order.
pub fn all_suites() -> Vec<VerificationReport> {
    vec![
        verify_pointwise_identities(),
        verify_structure_equations(),
        verify_killing_suite(),
        verify_eigenfunction_suite(),
        verify_moduli_generators(),
        verify_injectivity_argument(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for rep in all_suites() {
            let bad: Vec<String> = rep
                .failures()
                .map(|c| format!("{}: {}", c.name, c.residual))
                .collect();
            assert!(rep.passed, "{}:\n{}", rep.suite, bad.join("\n"));
        }
    }
}
