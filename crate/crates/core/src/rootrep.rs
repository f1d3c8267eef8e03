//! Root data, Casimir eigenvalues, Weyl dimensions and weight multiplicities
//! for the four compact groups that act on the homogeneous nearly Kähler
//! 6-manifolds: `SU2`, `SU2 x SU2 x SU2`, `SO5` and `SU3`.
//!
//! # Normalization of the Killing form
//!
//! Every root system stores `killing_scale`, the constant `c < 0` with
//! `<., .>_B = c * <., .>_euclid` on the dual of the maximal torus, in the
//! coordinates used for weights here. The values are re-derived from trace
//! forms by [`killing_scale_from_trace_form`]:
//!
//! * `su2`: `B(X, Y) = 4 tr(XY)`. With `H = diag(i, -i)` the weight of the
//!   defining representation is `1`, `B(H, H) = -8`, so `c = -1/8`. This gives
//!   `Cas(Sym^k E) = -k(k+2)/8`.
//! * `so5`: `B(X, Y) = 3 tr(XY)`. The torus `t1 J12 + t2 J34` has
//!   `B = -6 (t1^2 + t2^2)` and the weights `e_i` are `t -> t_i`, so `c = -1/6`.
//! * `su3`: `B(X, Y) = 6 tr(XY)`. On `i diag(t1, t2, t3)` with `sum t = 0`,
//!   `B = -6 |t|^2`; weights are stored with coordinate sum zero, so again
//!   `c = -1/6`.
//!
//! For `SU2^3` the Killing form is the orthogonal sum of three copies of the
//! `su2` one, so `c = -1/8` on each coordinate.
//!
//! # Casimir convention
//!
//! For a highest weight `g`, the Casimir operator with respect to the scalar
//! product `-kB` acts by `c * <g, g + 2 rho>_euclid / k`, which is `<= 0`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::matrix::{im, re, CMat, MatrixAlgebra};
use crate::rational::{q, qi, solve_columns, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootRepError {
    #[error("invalid {group} label {labels:?}: {reason}")]
    InvalidLabel {
        group: Group,
        labels: Vec<u32>,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Group {
    Su2,
    Su2Cubed,
    So5,
    Su3,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::Su2, Group::Su2Cubed, Group::So5, Group::Su3];

    /// Number of integer labels of an irreducible representation.
    pub fn label_len(self) -> usize {
        match self {
            Group::Su2 => 1,
            Group::Su2Cubed => 3,
            Group::So5 | Group::Su3 => 2,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Su2 => "SU2",
            Group::Su2Cubed => "SU2^3",
            Group::So5 => "SO5",
            Group::Su3 => "SU3",
        })
    }
}

/// A weight in the ambient coordinates of a group's torus dual.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec(Vec<Q>);

impl WeightVec {
    pub fn new(coords: Vec<Q>) -> Self {
        Self(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| qi(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![Q::zero(); dim])
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Q {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: Q) -> Self {
        Self(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-Q::one())
    }

    /// Projects onto the coordinate-sum-zero hyperplane (the canonical
    /// representative modulo `(1, ..., 1)`).
    pub fn sum_zero(&self) -> Self {
        let n = Q::from_integer(self.0.len() as i64);
        let mean = self.0.iter().sum::<Q>() / n;
        Self(self.0.iter().map(|a| a - mean).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub group: Group,
    pub ambient_dim: usize,
    pub positive_roots: Vec<WeightVec>,
    pub simple_roots: Vec<WeightVec>,
    pub rho: WeightVec,
    pub killing_scale: Q,
    /// Linear relation the ambient coordinates are taken modulo, if any.
    pub quotient_relation: Option<WeightVec>,
}

impl RootSystem {
    /// Brings an ambient vector to its canonical representative.
    pub fn canonical(&self, w: &WeightVec) -> WeightVec {
        match self.quotient_relation {
            Some(_) => w.sum_zero(),
            None => w.clone(),
        }
    }

    pub fn reflect(&self, w: &WeightVec, root: &WeightVec) -> WeightVec {
        let k = qi(2) * w.dot(root) / root.dot(root);
        w.sub(&root.scale(k))
    }

    pub fn is_dominant(&self, w: &WeightVec) -> bool {
        self.simple_roots.iter().all(|a| !w.dot(a).is_negative())
    }

    /// The Weyl group orbit of `w`, sorted.
    pub fn weyl_orbit(&self, w: &WeightVec) -> Vec<WeightVec> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([w.clone()]);
        seen.insert(w.clone());
        while let Some(x) = queue.pop_front() {
            for a in &self.simple_roots {
                let y = self.reflect(&x, a);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn dominant_conjugate(&self, w: &WeightVec) -> WeightVec {
        let mut x = w.clone();
        // each reflection in a simple root with negative pairing raises x
        'outer: loop {
            for a in &self.simple_roots {
                if x.dot(a).is_negative() {
                    x = self.reflect(&x, a);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// Coordinates of `v` in the simple roots, if `v` is in their span.
    pub fn simple_coordinates(&self, v: &WeightVec) -> Option<Vec<Q>> {
        let cols: Vec<Vec<Q>> = self.simple_roots.iter().map(|a| a.0.clone()).collect();
        solve_columns(&cols, &v.0)
    }

    /// `true` if `hi - lo` is a non-negative integer combination of simple roots.
    pub fn dominates(&self, hi: &WeightVec, lo: &WeightVec) -> bool {
        match self.simple_coordinates(&hi.sub(lo)) {
            Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
            None => false,
        }
    }
}

/// The hard-coded root datum of each supported group.
pub fn root_system(group: Group) -> RootSystem {
    let w = |c: &[i64]| WeightVec::from_ints(c);
    match group {
        Group::Su2 => RootSystem {
            group,
            ambient_dim: 1,
            positive_roots: vec![w(&[2])],
            simple_roots: vec![w(&[2])],
            rho: w(&[1]),
            killing_scale: q(-1, 8),
            quotient_relation: None,
        },
        Group::Su2Cubed => RootSystem {
            group,
            ambient_dim: 3,
            positive_roots: vec![w(&[2, 0, 0]), w(&[0, 2, 0]), w(&[0, 0, 2])],
            simple_roots: vec![w(&[2, 0, 0]), w(&[0, 2, 0]), w(&[0, 0, 2])],
            rho: w(&[1, 1, 1]),
            killing_scale: q(-1, 8),
            quotient_relation: None,
        },
        Group::So5 => RootSystem {
            group,
            ambient_dim: 2,
            positive_roots: vec![w(&[1, 0]), w(&[0, 1]), w(&[1, 1]), w(&[1, -1])],
            simple_roots: vec![w(&[1, -1]), w(&[0, 1])],
            rho: WeightVec::new(vec![q(3, 2), q(1, 2)]),
            killing_scale: q(-1, 6),
            quotient_relation: None,
        },
        Group::Su3 => RootSystem {
            group,
            ambient_dim: 3,
            positive_roots: vec![w(&[1, -1, 0]), w(&[1, 0, -1]), w(&[0, 1, -1])],
            simple_roots: vec![w(&[1, -1, 0]), w(&[0, 1, -1])],
            rho: w(&[1, 0, -1]),
            killing_scale: q(-1, 6),
            quotient_relation: Some(w(&[1, 1, 1])),
        },
    }
}

/// Highest-weight label of an irreducible representation.
///
/// * `Su2(k)`: `Sym^k E`
/// * `Su2Cubed(a, b, c)`: `Sym^a E (x) Sym^b E (x) Sym^c E`
/// * `So5(a, b)`, `a >= b`: highest weight `a e1 + b e2`
/// * `Su3(k, l)`: Cartan summand of `Sym^k E (x) Sym^l Ebar`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    Su2(u32),
    Su2Cubed(u32, u32, u32),
    So5(u32, u32),
    Su3(u32, u32),
}

impl IrrepLabel {
    pub fn group(&self) -> Group {
        match self {
            IrrepLabel::Su2(_) => Group::Su2,
            IrrepLabel::Su2Cubed(..) => Group::Su2Cubed,
            IrrepLabel::So5(..) => Group::So5,
            IrrepLabel::Su3(..) => Group::Su3,
        }
    }

    pub fn labels(&self) -> Vec<u32> {
        match *self {
            IrrepLabel::Su2(k) => vec![k],
            IrrepLabel::Su2Cubed(a, b, c) => vec![a, b, c],
            IrrepLabel::So5(a, b) | IrrepLabel::Su3(a, b) => vec![a, b],
        }
    }

    pub fn from_labels(group: Group, labels: &[u32]) -> Result<Self, RootRepError> {
        let bad = |reason| RootRepError::InvalidLabel {
            group,
            labels: labels.to_vec(),
            reason,
        };
        if labels.len() != group.label_len() {
            return Err(bad("wrong number of labels"));
        }
        let l = match group {
            Group::Su2 => IrrepLabel::Su2(labels[0]),
            Group::Su2Cubed => IrrepLabel::Su2Cubed(labels[0], labels[1], labels[2]),
            Group::So5 => IrrepLabel::So5(labels[0], labels[1]),
            Group::Su3 => IrrepLabel::Su3(labels[0], labels[1]),
        };
        l.validate()?;
        Ok(l)
    }

    pub fn trivial(group: Group) -> Self {
        match group {
            Group::Su2 => IrrepLabel::Su2(0),
            Group::Su2Cubed => IrrepLabel::Su2Cubed(0, 0, 0),
            Group::So5 => IrrepLabel::So5(0, 0),
            Group::Su3 => IrrepLabel::Su3(0, 0),
        }
    }

    /// The complexified adjoint representation (for `SU2^3`, the adjoint of
    /// the first factor).
    pub fn adjoint(group: Group) -> Self {
        match group {
            Group::Su2 => IrrepLabel::Su2(2),
            Group::Su2Cubed => IrrepLabel::Su2Cubed(2, 0, 0),
            Group::So5 => IrrepLabel::So5(1, 1),
            Group::Su3 => IrrepLabel::Su3(1, 1),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.labels().iter().all(|&x| x == 0)
    }

    pub fn validate(&self) -> Result<(), RootRepError> {
        match *self {
            IrrepLabel::So5(a, b) if a < b => Err(RootRepError::InvalidLabel {
                group: Group::So5,
                labels: vec![a, b],
                reason: "SO5 labels need a >= b",
            }),
            _ => Ok(()),
        }
    }

    /// Highest weight in the canonical ambient coordinates.
    pub fn highest_weight(&self) -> WeightVec {
        let i = |x: u32| i64::from(x);
        match *self {
            IrrepLabel::Su2(k) => WeightVec::from_ints(&[i(k)]),
            IrrepLabel::Su2Cubed(a, b, c) => WeightVec::from_ints(&[i(a), i(b), i(c)]),
            IrrepLabel::So5(a, b) => WeightVec::from_ints(&[i(a), i(b)]),
            IrrepLabel::Su3(k, l) => WeightVec::from_ints(&[i(k), 0, -i(l)]).sum_zero(),
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IrrepLabel::Su2(k) => write!(f, "Sym^{k}E"),
            IrrepLabel::Su2Cubed(a, b, c) => write!(f, "V_{{{a},{b},{c}}}"),
            IrrepLabel::So5(a, b) | IrrepLabel::Su3(a, b) => write!(f, "V_{{{a},{b}}}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LabelRepr {
    group: Group,
    labels: Vec<u32>,
}

impl Serialize for IrrepLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LabelRepr {
            group: self.group(),
            labels: self.labels(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IrrepLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = LabelRepr::deserialize(d)?;
        IrrepLabel::from_labels(r.group, &r.labels).map_err(serde::de::Error::custom)
    }
}

/// Casimir eigenvalue of the irrep with respect to the scalar product
/// `-metric_scale * B`.
///
/// # Panics
///
/// If `metric_scale` is not positive.
pub fn casimir_eigenvalue(irrep: &IrrepLabel, metric_scale: Q) -> Q {
    assert!(metric_scale.is_positive(), "metric scale must be positive");
    let rs = root_system(irrep.group());
    let g = irrep.highest_weight();
    let shifted = g.add(&rs.rho.scale(qi(2)));
    rs.killing_scale * g.dot(&shifted) / metric_scale
}

/// Eigenvalue of the Hermitian Laplacian on the `irrep`-isotypic part of a
/// homogeneous bundle, for the metric induced by `-B/12`.
pub fn laplace_eigenvalue(irrep: &IrrepLabel) -> Q {
    -casimir_eigenvalue(irrep, q(1, 12))
}

/// Weyl dimension formula.
pub fn dimension(irrep: &IrrepLabel) -> u64 {
    let rs = root_system(irrep.group());
    let lr = irrep.highest_weight().add(&rs.rho);
    let d: Q = rs
        .positive_roots
        .iter()
        .map(|a| lr.dot(a) / rs.rho.dot(a))
        .product();
    debug_assert!(d.is_integer() && d.is_positive());
    d.to_integer() as u64
}

/// Weight multiplicities of one irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    pub irrep: IrrepLabel,
    pub entries: BTreeMap<WeightVec, u32>,
}

impl WeightTable {
    pub fn multiplicity(&self, w: &WeightVec) -> u32 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|&m| u64::from(m)).sum()
    }

    pub fn is_weyl_invariant(&self) -> bool {
        let rs = root_system(self.irrep.group());
        self.entries.iter().all(|(w, &m)| {
            rs.simple_roots
                .iter()
                .all(|a| self.multiplicity(&rs.reflect(w, a)) == m)
        })
    }
}

/// Full weight table of `irrep`.
///
/// `SU2` and `SU2^3` use explicit weight strings, `SU3` the contraction kernel
/// `Sym^k E (x) Sym^l Ebar - Sym^(k-1) E (x) Sym^(l-1) Ebar`, and `SO5` the
/// Freudenthal recursion.
pub fn weight_multiplicities(irrep: &IrrepLabel) -> Result<WeightTable, RootRepError> {
    irrep.validate()?;
    let entries = match *irrep {
        IrrepLabel::Su2(k) => su2_string(k)
            .into_iter()
            .map(|w| (WeightVec::from_ints(&[w]), 1))
            .collect(),
        IrrepLabel::Su2Cubed(a, b, c) => {
            let mut m = BTreeMap::new();
            for x in su2_string(a) {
                for y in su2_string(b) {
                    for z in su2_string(c) {
                        m.insert(WeightVec::from_ints(&[x, y, z]), 1);
                    }
                }
            }
            m
        }
        IrrepLabel::So5(..) => freudenthal(&root_system(Group::So5), &irrep.highest_weight()),
        IrrepLabel::Su3(k, l) => su3_contraction_kernel(k, l),
    };
    Ok(WeightTable {
        irrep: *irrep,
        entries,
    })
}

fn su2_string(k: u32) -> Vec<i64> {
    let k = i64::from(k);
    (0..=k).map(|j| k - 2 * j).collect()
}

/// Exponent triples `(a, b, c)` with `a + b + c = k`.
fn compositions3(k: u32) -> impl Iterator<Item = [i64; 3]> {
    let k = i64::from(k);
    (0..=k).flat_map(move |a| (0..=k - a).map(move |b| [a, b, k - a - b]))
}

fn sym_tensor_weights(k: u32, l: u32) -> BTreeMap<WeightVec, i64> {
    let mut m = BTreeMap::new();
    for p in compositions3(k) {
        for r in compositions3(l) {
            let w = WeightVec::from_ints(&[p[0] - r[0], p[1] - r[1], p[2] - r[2]]).sum_zero();
            *m.entry(w).or_insert(0) += 1;
        }
    }
    m
}

fn su3_contraction_kernel(k: u32, l: u32) -> BTreeMap<WeightVec, u32> {
    let mut full = sym_tensor_weights(k, l);
    if k > 0 && l > 0 {
        for (w, m) in sym_tensor_weights(k - 1, l - 1) {
            *full.get_mut(&w).expect("contraction target weight missing") -= m;
        }
    }
    full.into_iter()
        .filter(|&(_, m)| m != 0)
        .map(|(w, m)| {
            assert!(m > 0, "negative multiplicity in contraction kernel");
            (w, m as u32)
        })
        .collect()
}

/// Weight multiplicities by Freudenthal's recursion
///
/// `(|l + rho|^2 - |m + rho|^2) mult(m) = 2 sum_{a > 0} sum_{j >= 1} mult(m + j a) <m + j a, a>`
///
/// using the Euclidean product (the Killing scale cancels).
pub fn freudenthal(rs: &RootSystem, highest: &WeightVec) -> BTreeMap<WeightVec, u32> {
    let highest = rs.canonical(highest);
    // dominant weights of the module: chains of positive-root subtractions
    let mut dominant = BTreeSet::new();
    let mut queue = VecDeque::from([highest.clone()]);
    dominant.insert(highest.clone());
    while let Some(x) = queue.pop_front() {
        for a in &rs.positive_roots {
            let y = rs.canonical(&x.sub(a));
            if rs.is_dominant(&y) && rs.dominates(&highest, &y) && dominant.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut weights: Vec<WeightVec> = dominant.iter().flat_map(|d| rs.weyl_orbit(d)).collect();
    // height <w, rho> decreases along every positive-root subtraction
    weights.sort_by(|a, b| b.dot(&rs.rho).cmp(&a.dot(&rs.rho)).then_with(|| a.cmp(b)));
    weights.dedup();

    let top = highest.add(&rs.rho);
    let top_norm = top.dot(&top);
    let mut mult: BTreeMap<WeightVec, u32> = BTreeMap::new();
    for w in weights {
        if w == highest {
            mult.insert(w, 1);
            continue;
        }
        let mut sum = Q::zero();
        for a in &rs.positive_roots {
            let mut j = 1;
            loop {
                let up = rs.canonical(&w.add(&a.scale(qi(j))));
                let Some(&m) = mult.get(&up) else { break };
                sum += qi(i64::from(m)) * up.dot(a);
                j += 1;
            }
        }
        let wr = w.add(&rs.rho);
        let denom = top_norm - wr.dot(&wr);
        assert!(
            denom.is_positive(),
            "Freudenthal denominator must be positive"
        );
        let m = qi(2) * sum / denom;
        assert!(m.is_integer(), "non-integral Freudenthal multiplicity {m}");
        if m.is_positive() {
            mult.insert(w, m.to_integer() as u32);
        }
    }
    mult
}

/// Clebsch-Gordan: `Sym^a E (x) Sym^b E = sum_j Sym^j E`, `j` from `a + b`
/// down to `|a - b|` in steps of two. Returns `(label, multiplicity)` pairs in
/// that order.
pub fn tensor_decompose_su2(a: u32, b: u32) -> Vec<(u32, u32)> {
    let lo = a.abs_diff(b);
    (lo..=a + b).rev().step_by(2).map(|j| (j, 1)).collect()
}

/// The Killing scale on the torus dual recomputed from `tr(ad X ad Y)` on an
/// explicit matrix model. Independent of the hard-coded value in
/// [`root_system`].
pub fn killing_scale_from_trace_form(group: Group) -> Q {
    let one = qi(1);
    match group {
        Group::Su2 | Group::Su2Cubed => {
            let h = CMat::unit(2, 0, 0, im(one)).add(&CMat::unit(2, 1, 1, im(-one)));
            let alg = MatrixAlgebra::new(vec![
                h.clone(),
                CMat::unit(2, 0, 1, re(one)).add(&CMat::unit(2, 1, 0, re(-one))),
                CMat::unit(2, 0, 1, im(one)).add(&CMat::unit(2, 1, 0, im(one))),
            ]);
            // the defining weight takes the value 1 on h
            one / alg.killing(&h, &h)
        }
        Group::So5 => {
            let mut basis = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    basis.push(CMat::unit(5, i, j, re(one)).add(&CMat::unit(5, j, i, re(-one))));
                }
            }
            let alg = MatrixAlgebra::new(basis);
            let h1 = &alg.basis()[0]; // J_12
            let h2 = &alg.basis()[alg.dim() - 3]; // J_34 (i=2, j=3)
            let gram = [
                [alg.killing(h1, h1), alg.killing(h1, h2)],
                [alg.killing(h2, h1), alg.killing(h2, h2)],
            ];
            assert!(gram[0][1].is_zero() && gram[0][0] == gram[1][1]);
            // e_i(t1 J12 + t2 J34) = i t_i; dual of a diagonal Gram matrix
            one / gram[0][0]
        }
        Group::Su3 => {
            let mut basis = vec![
                CMat::unit(3, 0, 0, im(one)).add(&CMat::unit(3, 1, 1, im(-one))),
                CMat::unit(3, 1, 1, im(one)).add(&CMat::unit(3, 2, 2, im(-one))),
            ];
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                basis.push(CMat::unit(3, i, j, re(one)).add(&CMat::unit(3, j, i, re(-one))));
                basis.push(CMat::unit(3, i, j, im(one)).add(&CMat::unit(3, j, i, im(one))));
            }
            let alg = MatrixAlgebra::new(basis);
            let (h1, h2) = (&alg.basis()[0], &alg.basis()[1]);
            let g = [
                [alg.killing(h1, h1), alg.killing(h1, h2)],
                [alg.killing(h2, h1), alg.killing(h2, h2)],
            ];
            let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
            let inv = [
                [g[1][1] / det, -g[0][1] / det],
                [-g[1][0] / det, g[0][0] / det],
            ];
            // values of e_1 on (h1, h2) are (1, 0); canonical e_1 has |.|^2 = 2/3
            let e1 = [one, Q::zero()];
            let norm: Q = (0..2)
                .map(|i| (0..2).map(|j| e1[i] * inv[i][j] * e1[j]).sum::<Q>())
                .sum();
            norm / q(2, 3)
        }
    }
}
