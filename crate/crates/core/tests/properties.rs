mod common;

use nk_core::branching::{restrict_to_isotropy, Bundle, HomogeneousSpace, SpaceId};
use nk_core::dga::{d, parse_form, u3_matrices, Form};
use nk_core::matrix::{im, re, CMat, MatrixAlgebra};
use nk_core::nkcheck::verify_structure_equations;
use nk_core::rational::{qi, solve_columns, Q};
use nk_core::rootrep::{
    casimir_eigenvalue, dimension, freudenthal, root_system, tensor_decompose_su2,
    weight_multiplicities, Group, IrrepLabel, WeightVec,
};
use nk_core::spectrum::enumerate_spectrum;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(common::SEED),
        ..ProptestConfig::default()
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `sum_ab G^ab X_a X_b` for the Gram matrix `G = -B`.
fn matrix_casimir(basis: Vec<CMat>) -> CMat {
    let alg = MatrixAlgebra::new(basis.clone());
    let n = basis.len();
    let gram: Vec<Vec<Q>> = (0..n)
        .map(|a| (0..n).map(|b| -alg.killing(&basis[a], &basis[b])).collect())
        .collect();
    let size = basis[0].size();
    let mut cas = CMat::zeros(size);
    for a in 0..n {
        let mut e = vec![qi(0); n];
        e[a] = qi(1);
        let col = solve_columns(&gram, &e).expect("Killing form is nondegenerate");
        for (b, g) in col.iter().enumerate() {
            cas = cas.add(&basis[a].mul(&basis[b]).scale(re(*g)));
        }
    }
    cas
}

fn scalar(m: &CMat) -> Q {
    let c = m[(0, 0)];
    for i in 0..m.size() {
        for j in 0..m.size() {
            let want = if i == j { c } else { re(qi(0)) };
            assert_eq!(m[(i, j)], want, "Casimir is not scalar");
        }
    }
    assert_eq!(c.im, qi(0));
    c.re
}

#[test]
fn matrix_casimir_oracle() {
    let one = qi(1);
    let su2 = vec![
        CMat::unit(2, 0, 0, im(one)).add(&CMat::unit(2, 1, 1, im(-one))),
        CMat::unit(2, 0, 1, re(one)).add(&CMat::unit(2, 1, 0, re(-one))),
        CMat::unit(2, 0, 1, im(one)).add(&CMat::unit(2, 1, 0, im(one))),
    ];
    assert_eq!(
        scalar(&matrix_casimir(su2)),
        casimir_eigenvalue(&IrrepLabel::Su2(1), one)
    );
    assert_eq!(casimir_eigenvalue(&IrrepLabel::Su2(1), one), qi(-3) / qi(8));

    let u3 = u3_matrices();
    let mut su3: Vec<CMat> = u3[..6].to_vec();
    su3.push(u3[6].sub(&u3[7]));
    su3.push(u3[7].sub(&u3[8]));
    assert_eq!(
        scalar(&matrix_casimir(su3)),
        casimir_eigenvalue(&IrrepLabel::Su3(1, 0), one)
    );
    assert_eq!(
        casimir_eigenvalue(&IrrepLabel::Su3(1, 0), one),
        qi(-4) / qi(9)
    );

    let mut so5 = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            so5.push(CMat::unit(5, i, j, re(one)).add(&CMat::unit(5, j, i, re(-one))));
        }
    }
    assert_eq!(dimension(&IrrepLabel::So5(1, 0)), 5);
    assert_eq!(
        scalar(&matrix_casimir(so5)),
        casimir_eigenvalue(&IrrepLabel::So5(1, 0), one)
    );
    assert_eq!(
        casimir_eigenvalue(&IrrepLabel::So5(1, 0), one),
        qi(-2) / qi(3)
    );
}

#[test]
fn weight_totals_match_weyl_dimension() {
    for g in Group::ALL {
        for l in common::labels_up_to(g, qi(60)) {
            let t = weight_multiplicities(&l).unwrap();
            assert_eq!(t.total(), dimension(&l), "{l}");
            assert!(t.is_weyl_invariant(), "{l}");
        }
    }
}

#[test]
fn adjoint_casimir_is_minus_one() {
    for g in Group::ALL {
        assert_eq!(
            casimir_eigenvalue(&IrrepLabel::adjoint(g), qi(1)),
            qi(-1),
            "{g:?}"
        );
    }
}

#[test]
fn structure_equations_hold() {
    assert!(verify_structure_equations().passed);
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn su3_tables_match_freudenthal(k in 0u32..7, l in 0u32..7) {
        let label = IrrepLabel::Su3(k, l);
        let table = weight_multiplicities(&label).unwrap();
        let rs = root_system(Group::Su3);
        let oracle = freudenthal(&rs, &label.highest_weight());
        prop_assert_eq!(&table.entries, &oracle);
        let zero = WeightVec::zero(label.highest_weight().dim());
        prop_assert_eq!(table.multiplicity(&zero) > 0, k % 3 == l % 3);
    }

    #[test]
    fn clebsch_gordan_is_associative(a in 0u32..8, b in 0u32..8, c in 0u32..8) {
        let expand = |pairs: Vec<(u32, u32)>, other: u32| {
            let mut out = std::collections::BTreeMap::new();
            for (j, m) in pairs {
                for (k, n) in tensor_decompose_su2(j, other) {
                    *out.entry(k).or_insert(0u32) += m * n;
                }
            }
            out
        };
        let left = expand(tensor_decompose_su2(a, b), c);
        let right = expand(tensor_decompose_su2(b, c), a);
        prop_assert_eq!(&left, &right);
        let dim: u32 = left.iter().map(|(k, m)| (k + 1) * m).sum();
        prop_assert_eq!(dim, (a + 1) * (b + 1) * (c + 1));
    }

    #[test]
    fn restriction_preserves_dimension(space_idx in 0usize..3, pick in any::<prop::sample::Index>()) {
        let space = SpaceId::ALL[space_idx];
        let labels = common::labels_up_to(HomogeneousSpace::new(space).group, qi(40));
        let l = labels[pick.index(labels.len())];
        prop_assert_eq!(restrict_to_isotropy(space, &l).unwrap().dim(), dimension(&l));
    }

    #[test]
    fn leibniz_and_d_squared(seed in any::<u64>(), p in 0usize..4, r in 0usize..4) {
        let mut g = rng(seed);
        let a = common::form(&mut g, p, common::ALL_GENERATORS, false);
        let b = common::form(&mut g, r, common::ALL_GENERATORS, true);
        prop_assert!(common::leibniz_residual(&a, p, &b).is_zero());
        prop_assert!(d(&d(&b)).is_zero());
    }

    #[test]
    fn star_squared_is_sign(seed in any::<u64>(), p in 0usize..7) {
        let f = common::form(&mut rng(seed), p, 6, true);
        prop_assert!(common::star_squared_residual(&f, p).is_zero());
    }

    #[test]
    fn printer_parser_round_trip(seed in any::<u64>(), p in 0usize..5) {
        let f = common::form(&mut rng(seed), p, common::ALL_GENERATORS, true);
        let back: Form = parse_form(&f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn spectrum_is_prefix_closed(space_idx in 0usize..3, lo in 0i64..20, extra in 1i64..16, forms in any::<bool>()) {
        let space = SpaceId::ALL[space_idx];
        let bundle = if forms { Bundle::Lambda11 } else { Bundle::Functions };
        let short = enumerate_spectrum(space, bundle, qi(lo)).unwrap();
        let long = enumerate_spectrum(space, bundle, qi(lo + extra)).unwrap();
        prop_assert!(long.starts_with(&short));
        prop_assert!(long.windows(2).all(|w| w[0].eigenvalue <= w[1].eigenvalue));
    }

    #[test]
    fn spectrum_json_round_trip(space_idx in 0usize..3, forms in any::<bool>()) {
        let space = SpaceId::ALL[space_idx];
        let bundle = if forms { Bundle::Lambda11 } else { Bundle::Functions };
        let s = enumerate_spectrum(space, bundle, qi(24)).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        let back: Vec<nk_core::spectrum::SpectrumEntry> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, s);
    }
}
