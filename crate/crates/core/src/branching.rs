//! Isotropy modules of the three homogeneous nearly Kähler spaces and the
//! multiplicities `dim Hom_K(V, E)` entering the Peter-Weyl decomposition.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{q, qi, Q};
use crate::rootrep::{
    root_system, tensor_decompose_su2, weight_multiplicities, Group, IrrepLabel, RootRepError,
    WeightVec,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BranchingError {
    #[error(transparent)]
    Label(#[from] RootRepError),
    #[error("{irrep} is not a representation of the isometry group of {space}")]
    GroupMismatch { space: SpaceId, irrep: IrrepLabel },
    #[error("U2 label E_{{{a},{b}}} violates a = b mod 2")]
    U2Parity { a: u32, b: i64 },
    #[error("weight profile at charge {charge} does not split into SU2 strings")]
    NotAString { charge: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpaceId {
    #[serde(rename = "S3xS3")]
    S3xS3,
    #[serde(rename = "CP3")]
    Cp3,
    #[serde(rename = "FLAG")]
    Flag,
}

impl SpaceId {
    pub const ALL: [SpaceId; 3] = [SpaceId::S3xS3, SpaceId::Cp3, SpaceId::Flag];
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceId::S3xS3 => "S3xS3",
            SpaceId::Cp3 => "CP3",
            SpaceId::Flag => "FLAG",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Bundle {
    Functions,
    #[serde(rename = "LAMBDA11_0")]
    Lambda11,
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bundle::Functions => "functions",
            Bundle::Lambda11 => "lambda11_0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IsotropySubgroup {
    /// `SU2` embedded diagonally in `SU2^3`.
    DiagonalSu2,
    /// `U2` inside `SO5`, with torus the maximal torus of `SO5`.
    U2InSo5,
    /// The maximal torus `T^2` of `SU3`.
    TorusInSu3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousSpace {
    pub id: SpaceId,
    pub group: Group,
    pub isotropy: IsotropySubgroup,
    pub isometry_dim: u32,
}

impl HomogeneousSpace {
    pub fn new(id: SpaceId) -> Self {
        let (group, isotropy, isometry_dim) = match id {
            SpaceId::S3xS3 => (Group::Su2Cubed, IsotropySubgroup::DiagonalSu2, 9),
            SpaceId::Cp3 => (Group::So5, IsotropySubgroup::U2InSo5, 10),
            SpaceId::Flag => (Group::Su3, IsotropySubgroup::TorusInSu3, 8),
        };
        Self {
            id,
            group,
            isotropy,
            isometry_dim,
        }
    }
}

/// `E_{a,b} = Sym^a E (x) C_b`, requiring `a = b mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawU2Label")]
pub struct U2Label {
    a: u32,
    b: i64,
}

#[derive(Deserialize)]
struct RawU2Label {
    a: u32,
    b: i64,
}

impl TryFrom<RawU2Label> for U2Label {
    type Error = BranchingError;
    fn try_from(r: RawU2Label) -> Result<Self, Self::Error> {
        U2Label::new(r.a, r.b)
    }
}

impl U2Label {
    pub fn new(a: u32, b: i64) -> Result<Self, BranchingError> {
        if (i64::from(a) - b).rem_euclid(2) != 0 {
            return Err(BranchingError::U2Parity { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn dim(&self) -> u64 {
        u64::from(self.a) + 1
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
        }
    }

    /// Highest weight in `SO5` torus coordinates, inverting
    /// `(m, q) = (l1 - l2, l1 + l2)`.
    pub fn highest_weight(&self) -> WeightVec {
        let (a, b) = (i64::from(self.a), self.b);
        WeightVec::new(vec![q(a + b, 2), q(b - a, 2)])
    }
}

impl fmt::Display for U2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{{{},{}}}", self.a, self.b)
    }
}

/// A finite-dimensional `K`-representation, in the form natural for each `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KRep {
    /// Diagonal `SU2`: `Sym^j E` with multiplicity.
    Su2(BTreeMap<u32, u32>),
    /// `U2`: `E_{a,b}` with multiplicity.
    U2(BTreeMap<U2Label, u32>),
    /// `T^2`: weight multiset in sum-zero coordinates.
    Torus(BTreeMap<WeightVec, u32>),
}

impl KRep {
    pub fn dim(&self) -> u64 {
        match self {
            KRep::Su2(m) => m
                .iter()
                .map(|(j, n)| (u64::from(*j) + 1) * u64::from(*n))
                .sum(),
            KRep::U2(m) => m.iter().map(|(l, n)| l.dim() * u64::from(*n)).sum(),
            KRep::Torus(m) => m.values().map(|&n| u64::from(n)).sum(),
        }
    }

    fn trivial(space: SpaceId) -> Self {
        match space {
            SpaceId::S3xS3 => KRep::Su2(BTreeMap::from([(0, 1)])),
            SpaceId::Cp3 => KRep::U2(BTreeMap::from([(U2Label { a: 0, b: 0 }, 1)])),
            SpaceId::Flag => KRep::Torus(BTreeMap::from([(WeightVec::zero(3), 1)])),
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            KRep::Su2(m) => KRep::Su2(m.clone()),
            KRep::U2(m) => KRep::U2(m.iter().map(|(l, &n)| (l.conjugate(), n)).collect()),
            KRep::Torus(m) => KRep::Torus(m.iter().map(|(w, &n)| (w.neg(), n)).collect()),
        }
    }

    /// Tensor product in the representation ring.
    ///
    /// # Panics
    ///
    /// If the two representations belong to different subgroups.
    pub fn tensor(&self, other: &Self) -> Self {
        match (self, other) {
            (KRep::Su2(x), KRep::Su2(y)) => {
                let mut out = BTreeMap::new();
                for (&a, &m) in x {
                    for (&b, &n) in y {
                        for (j, k) in tensor_decompose_su2(a, b) {
                            *out.entry(j).or_insert(0) += m * n * k;
                        }
                    }
                }
                KRep::Su2(out)
            }
            (KRep::U2(x), KRep::U2(y)) => {
                let mut out = BTreeMap::new();
                for (l, &m) in x {
                    for (r, &n) in y {
                        for (j, k) in tensor_decompose_su2(l.a, r.a) {
                            let e = U2Label { a: j, b: l.b + r.b };
                            *out.entry(e).or_insert(0) += m * n * k;
                        }
                    }
                }
                KRep::U2(out)
            }
            (KRep::Torus(x), KRep::Torus(y)) => {
                let mut out = BTreeMap::new();
                for (v, &m) in x {
                    for (w, &n) in y {
                        *out.entry(v.add(w)).or_insert(0) += m * n;
                    }
                }
                KRep::Torus(out)
            }
            _ => panic!("tensor product of representations of different subgroups"),
        }
    }

    /// Removes one copy of the trivial summand; `None` if there is none.
    pub fn remove_trivial(&self) -> Option<Self> {
        fn dec<K: Ord + Clone>(m: &BTreeMap<K, u32>, key: &K) -> Option<BTreeMap<K, u32>> {
            let mut m = m.clone();
            let n = m.get_mut(key)?;
            *n -= 1;
            if *n == 0 {
                m.remove(key);
            }
            Some(m)
        }
        match self {
            KRep::Su2(m) => dec(m, &0).map(KRep::Su2),
            KRep::U2(m) => dec(m, &U2Label { a: 0, b: 0 }).map(KRep::U2),
            KRep::Torus(m) => dec(m, &WeightVec::zero(3)).map(KRep::Torus),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyModule {
    pub space: HomogeneousSpace,
    pub bundle: Bundle,
    pub content: KRep,
}

/// The fibre of the bundle as a `K`-representation.
///
/// The `Lambda11` answers are the tabulated ones; [`rederive_lambda11`]
/// recomputes them from `p^{1,0}` and the two must agree.
pub fn isotropy_module(space: SpaceId, bundle: Bundle) -> IsotropyModule {
    let content = match bundle {
        Bundle::Functions => KRep::trivial(space),
        Bundle::Lambda11 => tabulated_lambda11(space),
    };
    IsotropyModule {
        space: HomogeneousSpace::new(space),
        bundle,
        content,
    }
}

fn tabulated_lambda11(space: SpaceId) -> KRep {
    match space {
        SpaceId::S3xS3 => KRep::Su2(BTreeMap::from([(4, 1), (2, 1)])),
        SpaceId::Cp3 => KRep::U2(
            [(0, 0), (1, 3), (1, -3), (2, 0)]
                .into_iter()
                .map(|(a, b)| (U2Label { a, b }, 1))
                .collect(),
        ),
        SpaceId::Flag => {
            let mut m = BTreeMap::new();
            for i in 0..3 {
                let mut e = [0i64; 3];
                e[i] = 3;
                let w = WeightVec::from_ints(&e).sum_zero();
                m.insert(w.neg(), 1);
                m.insert(w, 1);
            }
            m.insert(WeightVec::zero(3), 2);
            KRep::Torus(m)
        }
    }
}

/// `p^{1,0}`, the holomorphic tangent space at the base point.
///
/// * `S3xS3`: the tangent space is two copies of the adjoint of the diagonal
///   `SU2`, and `p^{1,0} = Sym^2 E`.
/// * `CP3`: the `SO5` root spaces of `e1`, `e2` and `-e1 - e2`, grouped into
///   `U2`-modules by the same weight peeling as [`restrict_so5_to_u2`].
/// * `FLAG`: the root spaces of `a12`, `a31`, `a23`.
pub fn holomorphic_tangent(space: SpaceId) -> KRep {
    match space {
        SpaceId::S3xS3 => KRep::Su2(BTreeMap::from([(2, 1)])),
        SpaceId::Cp3 => {
            let roots = [[1, 0], [0, 1], [-1, -1]]
                .map(|w| (WeightVec::from_ints(&w), 1u32))
                .into_iter()
                .collect();
            KRep::U2(peel_u2(&roots).expect("root spaces form U2 strings"))
        }
        SpaceId::Flag => KRep::Torus(
            [[1, -1, 0], [-1, 0, 1], [0, 1, -1]]
                .map(|w| (WeightVec::from_ints(&w), 1u32))
                .into_iter()
                .collect(),
        ),
    }
}

/// `p^{1,0} (x) p^{0,1}` minus one trivial summand.
pub fn rederive_lambda11(space: SpaceId) -> KRep {
    let p10 = holomorphic_tangent(space);
    p10.tensor(&p10.conjugate())
        .remove_trivial()
        .expect("the Kähler form spans a trivial summand")
}

/// Groups `SO5` weights into `U2`-irreducibles via `(m, q) = (l1 - l2, l1 + l2)`,
/// peeling SU2 strings from the top at each fixed charge `q`.
fn peel_u2(weights: &BTreeMap<WeightVec, u32>) -> Result<BTreeMap<U2Label, u32>, BranchingError> {
    let mut by_charge: BTreeMap<i64, BTreeMap<i64, i64>> = BTreeMap::new();
    for (w, &n) in weights {
        let c = w.coords();
        let (m, qc) = (c[0] - c[1], c[0] + c[1]);
        assert!(
            m.is_integer() && qc.is_integer(),
            "non-integral SO5 weight {w}"
        );
        *by_charge
            .entry(qc.to_integer())
            .or_default()
            .entry(m.to_integer())
            .or_insert(0) += i64::from(n);
    }
    let mut out = BTreeMap::new();
    for (charge, mut profile) in by_charge {
        while let Some((&top, &n)) = profile.iter().next_back() {
            if top < 0 {
                return Err(BranchingError::NotAString { charge });
            }
            for m in (-top..=top).step_by(2) {
                let slot = profile.entry(m).or_insert(0);
                *slot -= n;
                if *slot < 0 {
                    return Err(BranchingError::NotAString { charge });
                }
                if *slot == 0 {
                    profile.remove(&m);
                }
            }
            let label = U2Label::new(top as u32, charge)?;
            *out.entry(label).or_insert(0) += n as u32;
        }
    }
    Ok(out)
}

/// Restriction of an `SO5` irreducible to `U2`, sorted by label.
pub fn restrict_so5_to_u2(irrep: &IrrepLabel) -> Result<Vec<(U2Label, u32)>, BranchingError> {
    let IrrepLabel::So5(..) = irrep else {
        return Err(BranchingError::GroupMismatch {
            space: SpaceId::Cp3,
            irrep: *irrep,
        });
    };
    let table = weight_multiplicities(irrep)?;
    Ok(peel_u2(&table.entries)?.into_iter().collect())
}

/// Restriction of `V_{a,b,c}` to the diagonal `SU2`, computed as
/// `(Sym^a (x) Sym^b) (x) Sym^c` left to right.
pub fn restrict_to_diagonal_su2(a: u32, b: u32, c: u32) -> BTreeMap<u32, u32> {
    let KRep::Su2(m) = KRep::Su2(BTreeMap::from([(a, 1)]))
        .tensor(&KRep::Su2(BTreeMap::from([(b, 1)])))
        .tensor(&KRep::Su2(BTreeMap::from([(c, 1)])))
    else {
        unreachable!()
    };
    m
}

/// The restriction of a `G`-irreducible to `K`, as a [`KRep`].
pub fn restrict_to_isotropy(space: SpaceId, irrep: &IrrepLabel) -> Result<KRep, BranchingError> {
    irrep.validate()?;
    match (space, *irrep) {
        (SpaceId::S3xS3, IrrepLabel::Su2Cubed(a, b, c)) => {
            Ok(KRep::Su2(restrict_to_diagonal_su2(a, b, c)))
        }
        (SpaceId::Cp3, IrrepLabel::So5(..)) => {
            Ok(KRep::U2(restrict_so5_to_u2(irrep)?.into_iter().collect()))
        }
        (SpaceId::Flag, IrrepLabel::Su3(..)) => {
            Ok(KRep::Torus(weight_multiplicities(irrep)?.entries))
        }
        _ => Err(BranchingError::GroupMismatch {
            space,
            irrep: *irrep,
        }),
    }
}

/// `dim Hom_K(V, E)`.
pub fn hom_dimension(
    space: SpaceId,
    irrep: &IrrepLabel,
    bundle: Bundle,
) -> Result<u32, BranchingError> {
    fn pair<K: Ord>(x: &BTreeMap<K, u32>, y: &BTreeMap<K, u32>) -> u32 {
        x.iter()
            .map(|(k, m)| m * y.get(k).copied().unwrap_or(0))
            .sum()
    }
    let restricted = restrict_to_isotropy(space, irrep)?;
    let module = isotropy_module(space, bundle).content;
    Ok(match (&restricted, &module) {
        (KRep::Su2(x), KRep::Su2(y)) => pair(x, y),
        (KRep::U2(x), KRep::U2(y)) => pair(x, y),
        (KRep::Torus(x), KRep::Torus(y)) => pair(x, y),
        _ => unreachable!("restriction and module live on the same subgroup"),
    })
}

/// Casimir eigenvalue of `K` on one of its irreducibles, for the scalar
/// product `-B_G` restricted to `k`.
///
/// * diagonal `SU2`: `B_G(h, h, h) = 3 B_su2(h)`, so the torus-dual scale is
///   `(-1/8)/3 = -1/24` on the `SU2` weight line.
/// * `U2 in SO5`: same torus as `SO5` (scale `-1/6`); the `SU2` root of `K` is
///   `e1 - e2`, so `rho_K = (1/2, -1/2)`.
/// * `T^2`: `Cas = -1/6 |mu|^2`.
pub fn isotropy_casimir(space: SpaceId, summand: IsotropySummand<'_>) -> Q {
    match (space, summand) {
        (SpaceId::S3xS3, IsotropySummand::Su2(j)) => {
            let iota = WeightVec::from_ints(&[1, 1, 1]);
            let scale = root_system(Group::Su2).killing_scale / iota.dot(&iota);
            let j = qi(i64::from(j));
            scale * j * (j + qi(2))
        }
        (SpaceId::Cp3, IsotropySummand::U2(l)) => {
            let mu = l.highest_weight();
            let rho_k = WeightVec::new(vec![q(1, 2), q(-1, 2)]);
            root_system(Group::So5).killing_scale * mu.dot(&mu.add(&rho_k.scale(qi(2))))
        }
        (SpaceId::Flag, IsotropySummand::Torus(mu)) => {
            root_system(Group::Su3).killing_scale * mu.dot(mu)
        }
        _ => panic!("summand does not belong to the isotropy group of {space}"),
    }
}

#[derive(Debug, Clone, Copy)]
pub enum IsotropySummand<'a> {
    Su2(u32),
    U2(&'a U2Label),
    Torus(&'a WeightVec),
}

/// The `K`-Casimir on every irreducible summand of `p^{1,0}`; `None` if they
/// differ.
pub fn tangent_casimir(space: SpaceId) -> Option<Q> {
    let values: Vec<Q> = match holomorphic_tangent(space) {
        KRep::Su2(m) => m
            .keys()
            .map(|&j| isotropy_casimir(space, IsotropySummand::Su2(j)))
            .collect(),
        KRep::U2(m) => m
            .keys()
            .map(|l| isotropy_casimir(space, IsotropySummand::U2(l)))
            .collect(),
        KRep::Torus(m) => m
            .keys()
            .map(|w| isotropy_casimir(space, IsotropySummand::Torus(w)))
            .collect(),
    };
    let first = *values.first()?;
    values.iter().all(|v| *v == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootrep::dimension;
    use num_traits::Zero;

    fn u2(a: u32, b: i64) -> U2Label {
        U2Label::new(a, b).unwrap()
    }

    #[test]
    fn isometry_dimensions() {
        let dims: Vec<u32> = SpaceId::ALL
            .iter()
            .map(|&s| HomogeneousSpace::new(s).isometry_dim)
            .collect();
        assert_eq!(dims, vec![9, 10, 8]);
    }

    #[test]
    fn lambda11_is_rederivable() {
        for s in SpaceId::ALL {
            assert_eq!(
                rederive_lambda11(s),
                isotropy_module(s, Bundle::Lambda11).content,
                "{s}"
            );
            assert_eq!(isotropy_module(s, Bundle::Lambda11).content.dim(), 8);
            assert_eq!(isotropy_module(s, Bundle::Functions).content.dim(), 1);
            assert_eq!(holomorphic_tangent(s).dim(), 3);
        }
    }

    #[test]
    fn cp3_tangent_space() {
        let KRep::U2(m) = holomorphic_tangent(SpaceId::Cp3) else {
            panic!()
        };
        assert_eq!(m, BTreeMap::from([(u2(0, -2), 1), (u2(1, 1), 1)]));
    }

    #[test]
    fn restriction_of_adjoint() {
        let r = restrict_so5_to_u2(&IrrepLabel::So5(1, 1)).unwrap();
        let expect: Vec<(U2Label, u32)> = [(0, -2), (0, 0), (0, 2), (1, -1), (1, 1), (2, 0)]
            .into_iter()
            .map(|(a, b)| (u2(a, b), 1))
            .collect();
        assert_eq!(r, expect);
    }

    #[test]
    fn restriction_of_vector_and_trivial() {
        let r = restrict_so5_to_u2(&IrrepLabel::So5(1, 0)).unwrap();
        assert_eq!(r, vec![(u2(0, 0), 1), (u2(1, -1), 1), (u2(1, 1), 1)]);
        assert_eq!(
            restrict_so5_to_u2(&IrrepLabel::So5(0, 0)).unwrap(),
            vec![(u2(0, 0), 1)]
        );
    }

    #[test]
    fn restriction_preserves_dimension() {
        for a in 0..6 {
            for b in 0..=a {
                let l = IrrepLabel::So5(a, b);
                let r = restrict_so5_to_u2(&l).unwrap();
                let d: u64 = r.iter().map(|(e, n)| e.dim() * u64::from(*n)).sum();
                assert_eq!(d, dimension(&l), "{l}");
                assert!(r.iter().all(|(e, _)| (i64::from(e.a()) - e.b()) % 2 == 0));
            }
        }
    }

    #[test]
    fn hom_dimension_examples() {
        use Bundle::*;
        assert_eq!(
            hom_dimension(SpaceId::S3xS3, &IrrepLabel::Su2Cubed(2, 0, 0), Lambda11).unwrap(),
            1
        );
        assert_eq!(
            hom_dimension(SpaceId::Cp3, &IrrepLabel::So5(1, 1), Lambda11).unwrap(),
            2
        );
        assert_eq!(
            hom_dimension(SpaceId::Flag, &IrrepLabel::Su3(1, 1), Lambda11).unwrap(),
            4
        );
        assert_eq!(
            hom_dimension(SpaceId::Flag, &IrrepLabel::Su3(1, 1), Functions).unwrap(),
            2
        );
        assert_eq!(
            hom_dimension(SpaceId::Cp3, &IrrepLabel::So5(1, 1), Functions).unwrap(),
            1
        );
        assert_eq!(
            hom_dimension(SpaceId::S3xS3, &IrrepLabel::Su2Cubed(2, 0, 0), Functions).unwrap(),
            0
        );
        for s in SpaceId::ALL {
            let g = HomogeneousSpace::new(s).group;
            assert_eq!(
                hom_dimension(s, &IrrepLabel::trivial(g), Functions).unwrap(),
                1
            );
        }
    }

    #[test]
    fn group_mismatch_is_an_error() {
        assert!(matches!(
            hom_dimension(SpaceId::Flag, &IrrepLabel::So5(1, 1), Bundle::Functions),
            Err(BranchingError::GroupMismatch { .. })
        ));
    }

    #[test]
    fn u2_parity() {
        assert!(U2Label::new(1, 2).is_err());
        assert!(U2Label::new(1, -3).is_ok());
        assert!(serde_json::from_str::<U2Label>(r#"{"a":0,"b":1}"#).is_err());
    }

    #[test]
    fn flag_weights_are_weyl_invariant() {
        let KRep::Torus(m) = isotropy_module(SpaceId::Flag, Bundle::Lambda11).content else {
            panic!()
        };
        let rs = root_system(Group::Su3);
        for (w, &n) in &m {
            assert_eq!(m.get(&w.neg()), Some(&n));
            for a in &rs.simple_roots {
                assert_eq!(m.get(&rs.reflect(w, a)), Some(&n));
            }
        }
        assert_eq!(m.get(&WeightVec::from_ints(&[2, -1, -1])), Some(&1));
    }

    #[test]
    fn tangent_casimir_is_minus_one_third() {
        for s in SpaceId::ALL {
            assert_eq!(tangent_casimir(s), Some(q(-1, 3)), "{s}");
        }
    }

    #[test]
    fn isotropy_casimir_vanishes_on_trivial() {
        assert!(isotropy_casimir(SpaceId::Cp3, IsotropySummand::U2(&u2(0, 0))).is_zero());
    }
}
