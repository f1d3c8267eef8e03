//! Spectra of the Hermitian Laplacian on functions and on primitive
//! `(1,1)`-forms, and the resulting bounds on infinitesimal deformations.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::branching::{
    hom_dimension, tangent_casimir, BranchingError, Bundle, HomogeneousSpace, SpaceId,
};
use crate::rational::{q, qi, Ratio, Q};
use crate::rootrep::{dimension, laplace_eigenvalue, Group, IrrepLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error("cutoff must be non-negative, got {0}")]
    NegativeCutoff(Ratio),
    #[error("eigenvalue is not strictly increasing from {from} to {to}")]
    NotMonotone { from: IrrepLabel, to: IrrepLabel },
    #[error(transparent)]
    Branching(#[from] BranchingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub irrep: IrrepLabel,
    pub eigenvalue: Ratio,
    pub hom_dim: u32,
    pub irrep_dim: u64,
    pub contribution: u64,
}

fn label(group: Group, coords: &[u32]) -> Option<IrrepLabel> {
    IrrepLabel::from_labels(group, coords).ok()
}

/// The smallest valid label whose `i`-th coordinate is `n`.
fn solo(group: Group, i: usize, n: u32) -> IrrepLabel {
    let mut c = vec![0; group.label_len()];
    c[i] = n;
    if group == Group::So5 {
        c[0] = c[0].max(c[1]);
    }
    label(group, &c).expect("solo labels are valid")
}

/// Per-coordinate exclusive search bounds: the first `n` whose solo
/// eigenvalue exceeds the cutoff.
fn search_bounds(group: Group, cutoff: Q) -> Vec<u32> {
    (0..group.label_len())
        .map(|i| {
            (0..)
                .find(|&n| laplace_eigenvalue(&solo(group, i, n)) > cutoff)
                .unwrap()
        })
        .collect()
}

/// Every label in the box, with its strict increase along each coordinate
/// asserted; this is what makes the box exhaustive.
fn box_labels(group: Group, bounds: &[u32]) -> Result<Vec<IrrepLabel>, SpectrumError> {
    let mut all: Vec<Vec<u32>> = vec![vec![]];
    for &b in bounds {
        all = all
            .into_iter()
            .flat_map(|p| (0..b).map(move |x| [p.clone(), vec![x]].concat()))
            .collect();
    }
    all.par_iter()
        .filter_map(|c| label(group, c).map(|l| (c, l)))
        .map(|(c, l)| {
            let here = laplace_eigenvalue(&l);
            for i in 0..c.len() {
                let mut up = c.clone();
                up[i] += 1;
                if let Some(next) = label(group, &up) {
                    if laplace_eigenvalue(&next) <= here {
                        return Err(SpectrumError::NotMonotone { from: l, to: next });
                    }
                }
            }
            Ok(l)
        })
        .collect()
}

/// All irreducibles with eigenvalue at most `cutoff` occurring in sections
/// of the bundle, sorted by `(eigenvalue, label)`.
pub fn enumerate_spectrum(
    space: SpaceId,
    bundle: Bundle,
    cutoff: Q,
) -> Result<Vec<SpectrumEntry>, SpectrumError> {
    if cutoff.is_negative() {
        return Err(SpectrumError::NegativeCutoff(Ratio(cutoff)));
    }
    let group = HomogeneousSpace::new(space).group;
    let labels = box_labels(group, &search_bounds(group, cutoff))?;
    let mut entries = labels
        .par_iter()
        .filter(|l| laplace_eigenvalue(l) <= cutoff)
        .map(|l| {
            let hom_dim = hom_dimension(space, l, bundle)?;
            let irrep_dim = dimension(l);
            Ok(SpectrumEntry {
                irrep: *l,
                eigenvalue: Ratio(laplace_eigenvalue(l)),
                hom_dim,
                irrep_dim,
                contribution: u64::from(hom_dim) * irrep_dim,
            })
        })
        .filter(|e: &Result<SpectrumEntry, SpectrumError>| {
            e.as_ref().map_or(true, |e| e.hom_dim > 0)
        })
        .collect::<Result<Vec<_>, _>>()?;
    entries.sort_by(|a, b| a.eigenvalue.cmp(&b.eigenvalue).then(a.irrep.cmp(&b.irrep)));
    Ok(entries)
}

/// Dimension of the eigenspace for `eigenvalue` on sections of the bundle.
pub fn eigenspace_multiplicity(
    space: SpaceId,
    bundle: Bundle,
    eigenvalue: Q,
) -> Result<u64, SpectrumError> {
    Ok(enumerate_spectrum(space, bundle, eigenvalue)?
        .iter()
        .filter(|e| e.eigenvalue.0 == eigenvalue)
        .map(|e| e.contribution)
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EinsteinCheck {
    pub space: SpaceId,
    pub multiplicity_2: u64,
    pub multiplicity_6: u64,
}

impl EinsteinCheck {
    pub fn passes(&self) -> bool {
        self.multiplicity_2 == 0 && self.multiplicity_6 == 0
    }
}

/// Multiplicities of the eigenvalues 2 and 6 on primitive `(1,1)`-forms.
pub fn einstein_deformation_check(space: SpaceId) -> Result<EinsteinCheck, SpectrumError> {
    Ok(EinsteinCheck {
        space,
        multiplicity_2: eigenspace_multiplicity(space, Bundle::Lambda11, qi(2))?,
        multiplicity_6: eigenspace_multiplicity(space, Bundle::Lambda11, qi(6))?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliReport {
    pub space: SpaceId,
    pub dim_omega11_12: u64,
    pub dim_isometry: u32,
    pub dim_omega0_12: u64,
    /// `dim_omega11_12 - dim_isometry - dim_omega0_12`, possibly negative.
    pub nk_upper_bound_raw: i64,
    pub nk_upper_bound: u64,
    pub einstein_extra: EinsteinCheck,
}

pub fn moduli_upper_bound(space: SpaceId) -> Result<ModuliReport, SpectrumError> {
    let twelve = qi(12);
    let dim_omega11_12 = eigenspace_multiplicity(space, Bundle::Lambda11, twelve)?;
    let dim_omega0_12 = eigenspace_multiplicity(space, Bundle::Functions, twelve)?;
    let dim_isometry = HomogeneousSpace::new(space).isometry_dim;
    let raw = dim_omega11_12 as i64 - i64::from(dim_isometry) - dim_omega0_12 as i64;
    Ok(ModuliReport {
        space,
        dim_omega11_12,
        dim_isometry,
        dim_omega0_12,
        nk_upper_bound_raw: raw,
        nk_upper_bound: raw.max(0) as u64,
        einstein_extra: einstein_deformation_check(space)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalReport {
    pub space: SpaceId,
    /// `K`-Casimir on the tangent representation, for `-B`.
    pub casimir_isotropy: Ratio,
    /// `3/2 - 3 Cas`, the scalar curvature of `-B`.
    pub scal_killing: Ratio,
    /// Scalar curvature of `-B/12`.
    pub scal_metric: Ratio,
    /// `q(Rbar)` on the tangent bundle for `-B/12`.
    pub q_rbar: Ratio,
}

impl ScalReport {
    pub fn passes(&self) -> bool {
        self.casimir_isotropy.0 == q(-1, 3)
            && self.scal_killing.0 == q(5, 2)
            && self.scal_metric.0 == qi(30)
            && self.q_rbar.0 == qi(4)
    }
}

/// Recomputes the scalar curvature normalization from the isotropy Casimir.
///
/// # Panics
///
/// If the summands of the tangent representation have different Casimirs.
pub fn scal_normalization_check(space: SpaceId) -> ScalReport {
    let cas = tangent_casimir(space).expect("tangent representation is Casimir-isotypic");
    let scal_killing = q(3, 2) - qi(3) * cas;
    ScalReport {
        space,
        casimir_isotropy: Ratio(cas),
        scal_killing: Ratio(scal_killing),
        scal_metric: Ratio(scal_killing * qi(12)),
        q_rbar: Ratio(-qi(12) * cas),
    }
}

/// `true` if the trivial representation is the only eigenvalue-0 entry.
pub fn constants_only(space: SpaceId) -> Result<bool, SpectrumError> {
    let zero = enumerate_spectrum(space, Bundle::Functions, Q::zero())?;
    Ok(zero.len() == 1 && zero[0].irrep.is_trivial() && zero[0].contribution == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(entries: &[SpectrumEntry], ev: i64) -> Vec<IrrepLabel> {
        entries
            .iter()
            .filter(|e| e.eigenvalue.0 == qi(ev))
            .map(|e| e.irrep)
            .collect()
    }

    #[test]
    fn s3xs3_lambda11_at_12() {
        let s = enumerate_spectrum(SpaceId::S3xS3, Bundle::Lambda11, qi(12)).unwrap();
        assert_eq!(
            at(&s, 12),
            vec![
                IrrepLabel::Su2Cubed(0, 0, 2),
                IrrepLabel::Su2Cubed(0, 2, 0),
                IrrepLabel::Su2Cubed(2, 0, 0)
            ]
        );
    }

    #[test]
    fn cp3_lambda11_at_12() {
        let s = enumerate_spectrum(SpaceId::Cp3, Bundle::Lambda11, qi(12)).unwrap();
        assert_eq!(at(&s, 12), vec![IrrepLabel::So5(1, 1)]);
    }

    #[test]
    fn multiplicities() {
        use Bundle::*;
        let cases = [
            (SpaceId::S3xS3, Lambda11, 9),
            (SpaceId::Cp3, Lambda11, 20),
            (SpaceId::Flag, Lambda11, 32),
            (SpaceId::Cp3, Functions, 10),
            (SpaceId::Flag, Functions, 16),
            (SpaceId::S3xS3, Functions, 0),
        ];
        for (s, b, m) in cases {
            assert_eq!(eigenspace_multiplicity(s, b, qi(12)).unwrap(), m, "{s} {b}");
        }
    }

    #[test]
    fn moduli_bounds() {
        let raw: Vec<i64> = SpaceId::ALL
            .iter()
            .map(|&s| moduli_upper_bound(s).unwrap().nk_upper_bound_raw)
            .collect();
        assert_eq!(raw, vec![0, 0, 8]);
    }

    #[test]
    fn einstein_checks() {
        for s in SpaceId::ALL {
            assert!(einstein_deformation_check(s).unwrap().passes(), "{s}");
        }
    }

    #[test]
    fn functions_at_zero_are_constants() {
        for s in SpaceId::ALL {
            assert!(constants_only(s).unwrap(), "{s}");
        }
    }

    #[test]
    fn cp3_functions_below_12() {
        // the vector representation of SO5 carries a U2-fixed vector
        let s = enumerate_spectrum(SpaceId::Cp3, Bundle::Functions, qi(11)).unwrap();
        let evs: Vec<Q> = s.iter().map(|e| e.eigenvalue.0).collect();
        assert_eq!(evs, vec![qi(0), qi(8)]);
        assert_eq!(s[1].irrep, IrrepLabel::So5(1, 0));
        assert_eq!(s[1].contribution, 5);
    }

    #[test]
    fn negative_cutoff_rejected() {
        assert!(matches!(
            enumerate_spectrum(SpaceId::Flag, Bundle::Functions, q(-1, 2)),
            Err(SpectrumError::NegativeCutoff(_))
        ));
    }

    #[test]
    fn scal_checks() {
        for s in SpaceId::ALL {
            assert!(scal_normalization_check(s).passes(), "{s}");
        }
    }

    #[test]
    fn flag_first_function_eigenvalue_is_12() {
        let s = enumerate_spectrum(SpaceId::Flag, Bundle::Functions, qi(12)).unwrap();
        let evs: Vec<Q> = s.iter().map(|e| e.eigenvalue.0).collect();
        assert_eq!(evs, vec![qi(0), qi(12)]);
    }
}
