use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use matchfield::coherence::coherence_witness;
use matchfield::field::{block_diagonal_matching_field, is_isomorphic};
use matchfield::ideal::{
    block_grading, block_grading_by_columns, fiber, markov_generators, phi, MarkovOptions, PlueckerMonomial,
};
use matchfield::polytope::{polytope_vertices, ApexRule, LatticePolytope};
use matchfield::random::{random_coherent_field, random_matching_field};
use matchfield::weights::{induced_matching_field, WeightMatrix};
use matchfield::{subsets, Composition, MatchingField, Permutation};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn monomial(field: &MatchingField, picks: &[usize]) -> PlueckerMonomial {
    let subs = field.subsets();
    PlueckerMonomial::new(picks.iter().map(|&i| subs[i % subs.len()].clone()).collect())
}

fn shuffled(k: usize, r: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=k).collect();
    images.shuffle(r);
    Permutation::new(images).unwrap()
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=3).prop_flat_map(|k| (Just(k), k + 1..=6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_multiplicative(
        (k, n) in shape(),
        seed in any::<u64>(),
        a in prop::collection::vec(0usize..1000, 1..4),
        b in prop::collection::vec(0usize..1000, 1..4),
    ) {
        let field = random_matching_field(k, n, &mut rng(seed)).unwrap();
        let (ma, mb) = (monomial(&field, &a), monomial(&field, &b));
        let joint = phi(&field, &ma.mul(&mb)).unwrap();
        prop_assert_eq!(joint, phi(&field, &ma).unwrap().mul(&phi(&field, &mb).unwrap()));
    }

    #[test]
    fn fibers_round_trip(
        (k, n) in shape(),
        seed in any::<u64>(),
        picks in prop::collection::vec(0usize..1000, 1..4),
    ) {
        let field = random_matching_field(k, n, &mut rng(seed)).unwrap();
        let m = monomial(&field, &picks);
        let image = phi(&field, &m).unwrap().exponents;
        let members = fiber(&field, &image).unwrap();
        prop_assert!(members.contains(&m));
        prop_assert!(members.windows(2).all(|w| w[0] < w[1]));
        for other in &members {
            prop_assert_eq!(other.degree(), m.degree());
            prop_assert_eq!(&phi(&field, other).unwrap().exponents, &image);
        }
    }

    #[test]
    fn block_grading_is_constant_on_fibers(
        n in 4usize..=8,
        cut in 1usize..7,
        picks in prop::collection::vec(0usize..1000, 2..4),
    ) {
        let first = 1 + (cut - 1) % (n - 1);
        let a = Composition::new(vec![first, n - first]).unwrap();
        let field = block_diagonal_matching_field(&a).unwrap();
        let m = monomial(&field, &picks);
        let members = fiber(&field, &phi(&field, &m).unwrap().exponents).unwrap();
        let grade = |p: &PlueckerMonomial| {
            let t = field.tableau(p.factors()).unwrap();
            let g = block_grading(&t, &a).unwrap();
            assert_eq!(g, block_grading_by_columns(&t, &a));
            g
        };
        let expected = grade(&m);
        for other in &members {
            prop_assert_eq!(grade(other), expected);
        }
    }

    #[test]
    fn coherent_fields_round_trip(seed in any::<u64>(), n in 4usize..=5) {
        let (field, _) = random_coherent_field(3, n, &mut rng(seed)).unwrap();
        let cert = coherence_witness(&field).unwrap();
        prop_assert!(cert.is_coherent());
        prop_assert_eq!(induced_matching_field(cert.witness.as_ref().unwrap()).unwrap(), field);
    }

    #[test]
    fn column_shifts_keep_the_induced_field(seed in any::<u64>(), col in 0usize..5, shift in -50i64..50) {
        let (field, m) = random_coherent_field(3, 5, &mut rng(seed)).unwrap();
        let rows: Vec<Vec<i64>> = m
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(j, x)| x.to_integer().try_into().unwrap_or(0i64) + if j == col { shift } else { 0 })
                    .collect()
            })
            .collect();
        prop_assert_eq!(induced_matching_field(&WeightMatrix::from_integers(&rows).unwrap()).unwrap(), field);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn polytopes_satisfy_euler_and_apex_independence((k, n) in shape(), seed in any::<u64>()) {
        let (field, _) = random_coherent_field(k, n.min(5), &mut rng(seed)).unwrap();
        let p = LatticePolytope::new(polytope_vertices(&field)).unwrap();
        prop_assert!(p.summary().satisfies_euler());
        let lo = p.volume(ApexRule::LexMin).unwrap();
        let hi = p.volume(ApexRule::LexMax).unwrap();
        prop_assert!(lo.is_consistent() && hi.is_consistent());
        prop_assert_eq!(lo.normalized, hi.normalized);
    }

    #[test]
    fn relabeling_preserves_reports(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (field, _) = random_coherent_field(3, 5, &mut r).unwrap();
        let image = field.act(&shuffled(3, &mut r), &shuffled(5, &mut r)).unwrap();
        prop_assert!(is_isomorphic(&field, &image).is_some());

        let (p, q) = (
            LatticePolytope::new(polytope_vertices(&field)).unwrap(),
            LatticePolytope::new(polytope_vertices(&image)).unwrap(),
        );
        prop_assert_eq!(p.faces.f_vector(), q.faces.f_vector());
        prop_assert_eq!(p.volume(ApexRule::LexMin).unwrap().normalized, q.volume(ApexRule::LexMin).unwrap().normalized);

        let opts = MarkovOptions::up_to(3);
        let (a, b) = (markov_generators(&field, &opts).unwrap(), markov_generators(&image, &opts).unwrap());
        prop_assert_eq!(a.count(2), b.count(2));
        prop_assert_eq!(a.count(3), b.count(3));
    }

    #[test]
    fn generators_ignore_processing_order(seed in any::<u64>(), shuffle in any::<u64>()) {
        let field = random_matching_field(3, 5, &mut rng(seed)).unwrap();
        let plain = markov_generators(&field, &MarkovOptions::up_to(3)).unwrap();
        let mixed = markov_generators(&field, &MarkovOptions { shuffle_seed: Some(shuffle), ..MarkovOptions::up_to(3) }).unwrap();
        prop_assert_eq!(plain, mixed);
    }
}

#[test]
fn every_subset_appears_once() {
    let field = random_matching_field(3, 7, &mut rng(3)).unwrap();
    assert_eq!(field.subsets(), subsets(3, 7).unwrap().as_slice());
}
