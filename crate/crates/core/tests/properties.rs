use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spectral_delta::fixtures::reisner_rp2;
use spectral_delta::format::{complex_to_json, parse_complex, render_complex};
use spectral_delta::homology::{smith_normal_form, verify_snf, IntegerMatrix};
use spectral_delta::stanley_reisner::complex_from_generators;
use spectral_delta::theorems::{enumerate_complexes, random_complex};
use spectral_delta::{
    delta_of_complex, nerve, reduced_homology, relative_homology, sr_generators, FieldSpec,
    SimplicialComplex,
};

const Q: FieldSpec = FieldSpec::Rationals;

fn up_to(n: usize) -> Vec<SimplicialComplex> {
    (1..=n).flat_map(|m| enumerate_complexes(m).unwrap()).collect()
}

#[test]
fn text_and_json_round_trip() {
    let mut all = up_to(5);
    all.push(reisner_rp2());
    all.push(SimplicialComplex::void(3));
    for k in &all {
        let text = parse_complex(&render_complex(k)).unwrap();
        assert_eq!(&text.value, k);
        assert!(text.notices.is_empty());
        let json = parse_complex(&complex_to_json(k).to_string()).unwrap();
        assert_eq!(&json.value, k);
    }
}

#[test]
fn alexander_dual_is_an_involution() {
    for k in up_to(4) {
        let d = k.alexander_dual();
        assert_eq!(d.complex.alexander_dual().complex, k, "{:?}", k.facets());
    }
}

#[test]
fn betti_numbers_recover_reduced_euler_characteristic() {
    for k in up_to(5) {
        for f in [Q, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
            assert_eq!(
                reduced_homology(&k, f).euler_characteristic(),
                k.reduced_euler_characteristic(),
                "{:?} over {f}",
                k.facets()
            );
        }
    }
}

#[test]
fn field_betti_numbers_bound_rational_ones() {
    for k in up_to(5) {
        let hq = reduced_homology(&k, Q);
        let hz = reduced_homology(&k, FieldSpec::Integers);
        for p in [2, 3, 5] {
            let hp = reduced_homology(&k, FieldSpec::PrimeField(p));
            for d in -1..=hp.max_degree() {
                assert!(hp.betti(d) >= hq.betti(d));
                assert_eq!(hz.group(d).free_rank, hq.betti(d));
            }
        }
    }
}

// Euler characteristics are additive along the long exact sequence of a
// pair: χ(K, L) = χ(K) − χ(L) for unreduced homology.
#[test]
fn pair_homology_is_additive_on_euler_characteristic() {
    for k in up_to(4) {
        if k.is_irrelevant() {
            continue;
        }
        for take in 0..=k.facets().len() {
            let l = SimplicialComplex::new(k.n(), k.facets()[..take].to_vec(), false).unwrap();
            let h = relative_homology(&k, &l, Q).unwrap();
            assert_eq!(
                h.euler_characteristic(),
                k.euler_characteristic() - l.euler_characteristic(),
                "{:?} rel first {take} facets",
                k.facets()
            );
        }
    }
}

#[test]
fn pair_homology_rejects_non_subcomplexes() {
    let k = SimplicialComplex::new(3, vec![vec![1, 2].into()], false).unwrap();
    let l = SimplicialComplex::new(3, vec![vec![3].into()], false).unwrap();
    assert!(relative_homology(&k, &l, Q).is_err());
    let other = SimplicialComplex::full_simplex(4);
    assert!(relative_homology(&k, &other, Q).is_err());
}

#[test]
fn generators_determine_the_complex() {
    for k in up_to(5) {
        let g = sr_generators(&k).unwrap();
        assert_eq!(complex_from_generators(&g), k, "{:?}", k.facets());
    }
}

fn random_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-50i64..=50, c), r)
    })
}

fn wide_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(any::<i64>(), c), r)
    })
}

proptest! {
    #[test]
    fn snf_certificates_hold(rows in random_matrix()) {
        let a = IntegerMatrix::from_rows(&rows);
        let snf = smith_normal_form(&a);
        prop_assert_eq!(verify_snf(&a, &snf), Ok(()));
    }

    // Entries near i64::MAX force the big-integer fallback.
    #[test]
    fn snf_survives_word_overflow(rows in wide_matrix()) {
        let a = IntegerMatrix::from_rows(&rows);
        let snf = smith_normal_form(&a);
        prop_assert_eq!(verify_snf(&a, &snf), Ok(()));
    }

    #[test]
    fn invariant_factors_multiply_to_the_determinant(rows in (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-20i64..=20, n), n)
    })) {
        let a = IntegerMatrix::from_rows(&rows);
        let det = a.determinant().abs();
        let factors = smith_normal_form(&a).invariant_factors();
        if det.is_zero() {
            prop_assert!(factors.len() < rows.len());
        } else {
            let product = factors.iter().fold(BigInt::from(1), |acc, f| acc * f);
            prop_assert_eq!(product, det);
        }
    }

    #[test]
    fn delta_matches_nerve_on_random_complexes(seed in any::<u64>(), n in 1usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(n, &mut rng);
        let delta = delta_of_complex(&k).unwrap();
        prop_assert_eq!(&delta, &nerve(k.facets()).unwrap());
        prop_assert!(reduced_homology(&k, FieldSpec::Integers)
            .same_groups(&reduced_homology(&delta, FieldSpec::Integers)));
    }

    #[test]
    fn random_round_trip(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_complex(n, &mut rng);
        prop_assert_eq!(parse_complex(&render_complex(&k)).unwrap().value, k);
    }
}
