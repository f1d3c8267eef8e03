//! Exterior calculus of left-invariant forms on `U3` with coefficients in the
//! linear functions `x_i = g(X, e_i)`, `v_j = g(X, h_j)` of a Killing field.
//! Basic forms descend to the flag manifold `SU3/T^2`.
//!
//! `d` on coefficients uses all nine frame directions; the central direction
//! `h1 + h2 + h3` brackets trivially with everything, so the sum over the
//! eight `su3` directions gives the same result.

mod coefficient;
mod form;
mod hodge;
mod killing;
mod lie;
mod model;
mod text;

pub use coefficient::{Coefficient, Symbol, NCOEF};
pub use form::{Form, Mono, NGEN, VERTICAL_MASK};
pub use hodge::{codifferential, hodge_star, inner, laplacian, volume};
pub use killing::{KillingData, SymbolicKilling};
pub use lie::{basic_check, d, lie_basis, metric, u3_matrices, LieBasis};
pub use model::{
    alpha_adjoint, apply_j, hook_psi_plus, is_primitive_11, model, omega_component, type_decompose,
    ModelConstants, TypeDecomposition,
};
pub use text::{
    coefficient_to_string, form_to_string, mono_to_string, parse_coefficient, parse_form,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DgaError {
    #[error("product of two non-constant coefficients")]
    NonlinearCoefficient,
    #[error("form has a vertical component")]
    VerticalComponent,
    #[error("expected a form of degree {expected}, found {found:?}")]
    WrongDegree {
        expected: usize,
        found: Option<usize>,
    },
    #[error("matrix is not a skew-Hermitian 3x3 matrix")]
    NotSkewHermitian,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
