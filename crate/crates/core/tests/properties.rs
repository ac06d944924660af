//! Randomized invariants, each against a direct recomputation.

mod common;

use proptest::prelude::*;

use common::{ell, first_nonzero_binomial, inversions, nu, p_divides_gc_direct, place_action, rank_mod_p};
use hook_specht::arith::{ell_p, nu_p, p_divides_gc, EllP, Field, PrimeField, Rationals};
use hook_specht::combinatorics::{Partition, PermutationWord, QuiverParams, Residue};
use hook_specht::hook::relations::verify_relations;
use hook_specht::hook::{BasisKey, HookModule, HookShape};
use hook_specht::linalg::{kernel, rank, Matrix};
use hook_specht::shuffles::{minimal_shuffle, shuffle_reps, SegmentSpec};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 1..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn permutation(max: usize) -> impl Strategy<Value = PermutationWord> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|t| PermutationWord::new(t).unwrap())
}

/// A hook module with one of its basis keys.
fn hook_and_key(dmax: usize) -> impl Strategy<Value = (HookModule, BasisKey)> {
    (2..=dmax, 3usize..=5)
        .prop_flat_map(|(d, e)| (Just(d), 0..d, Just(e)))
        .prop_flat_map(|(d, k, e)| {
            let m = HookModule::new(HookShape::new(d, k).unwrap(), QuiverParams::new(e).unwrap());
            let keys = m.shape().keys();
            (Just(m), prop::sample::select(keys))
        })
}

proptest! {
    #[test]
    fn conjugation_preserves_size_and_inverts(mu in partition()) {
        let c = mu.conjugate();
        prop_assert_eq!(c.size(), mu.size());
        prop_assert_eq!(c.conjugate(), mu);
    }

    #[test]
    fn reduced_words_rebuild_the_permutation(w in permutation(9)) {
        let rebuilt = PermutationWord::from_word(w.degree(), w.reduced_word()).unwrap();
        prop_assert_eq!(&rebuilt, &w);
        prop_assert_eq!(w.length(), inversions(w.targets()));
        prop_assert!(w.compose(&w.inverse()).is_identity());
    }

    #[test]
    fn place_action_composes(a in permutation(8), seed in any::<u64>()) {
        let n = a.degree();
        let b = PermutationWord::new({
            let mut t: Vec<usize> = (1..=n).collect();
            t.rotate_left((seed as usize) % n);
            t
        }).unwrap();
        let seq: Vec<usize> = (0..n).map(|i| i * 7 % 5).collect();
        prop_assert_eq!(a.compose(&b).act_on(&seq), a.act_on(&b.act_on(&seq)));
        prop_assert_eq!(a.act_on(&seq), place_action(a.targets(), &seq));
    }

    #[test]
    fn valuations_match_direct_counts(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), n in 1u64..100_000) {
        prop_assert_eq!(nu_p(p, n).unwrap(), nu(p, n));
        let expected = ell(p, n).map_or(EllP::NegInfinity, EllP::Finite);
        prop_assert_eq!(ell_p(p, n).unwrap(), expected);
        prop_assert_eq!(ell_p(p, 0).unwrap(), EllP::NegInfinity);
    }

    #[test]
    fn divisibility_criterion_on_long_sequences(
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        mut a in prop::collection::vec(1u64..600, 1..7),
    ) {
        a.sort_unstable_by(|x, y| y.cmp(x));
        let table = first_nonzero_binomial(p, 600);
        prop_assert_eq!(p_divides_gc(p, &a).unwrap(), p_divides_gc_direct(&table, &a));
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..6)) {
        let f = PrimeField::new(7).unwrap();
        let mut m = Matrix::new(5);
        for r in &rows {
            m.push_row(r.iter().map(|&x| f.from_i64(x)).collect());
        }
        let basis = kernel(&f, &m);
        prop_assert_eq!(rank(&f, &m) + basis.len(), 5);
        prop_assert_eq!(rank(&f, &m), rank_mod_p(rows.clone(), 7));
        for v in &basis {
            for r in m.rows() {
                let dot = r.iter().zip(v).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
                prop_assert!(f.is_zero(&dot));
            }
        }
        // over Q the rank can only be at least the rank mod 7
        let mut mq = Matrix::new(5);
        for r in &rows {
            mq.push_row(r.iter().map(|&x| Rationals.from_i64(x)).collect());
        }
        prop_assert!(rank(&Rationals, &mq) >= rank(&f, &m));
    }

    #[test]
    fn hook_weights_are_tableau_residues((m, key) in hook_and_key(12)) {
        let q = m.quiver();
        prop_assert_eq!(m.weight(key), m.tableau(key).residue_sequence(&q));
        prop_assert_eq!(m.degree(key), m.tableau(key).degree(&q).unwrap());
        prop_assert!(m.tableau(key).is_standard());
    }

    #[test]
    fn psi_moves_weight_and_degree((m, key) in hook_and_key(12), r in 1usize..12) {
        let d = m.shape().d();
        prop_assume!(r < d);
        let q = m.quiver();
        let i = m.weight(key);
        if let Some((_, target)) = m.psi_on_basis(r, key) {
            let mut swapped = i.clone();
            swapped.swap(r - 1, r);
            prop_assert_eq!(m.weight(target), swapped);
            prop_assert_eq!(m.degree(target) - m.degree(key), -q.cartan(i[r - 1], i[r]));
        }
        if let Some((_, target)) = m.dot_on_basis(r, key) {
            prop_assert_eq!(m.weight(target), i.clone());
            prop_assert_eq!(m.degree(target) - m.degree(key), 2);
        }
    }

    #[test]
    fn minimal_shuffles_of_random_shuffles(
        a in 0usize..7, b in 0usize..7, e in 3usize..=5, s in 0i64..5, t in 0i64..5, pick in any::<prop::sample::Index>(),
    ) {
        let q = QuiverParams::new(e).unwrap();
        let plus = SegmentSpec::increasing(q.res(s), a);
        let minus = SegmentSpec::decreasing(q.res(t), b);
        let word: Vec<Residue> = [plus.residues(&q), minus.residues(&q)].concat();
        let reps = shuffle_reps(a, b);
        let sigma = &reps[pick.index(reps.len())];
        let target = sigma.act_on(&word);
        let w = minimal_shuffle(&target, plus, minus, &q).unwrap().expect("a shuffle of the two segments");
        prop_assert_eq!(w.minimal.act_on(&word), target);
        prop_assert!(w.minimal.length() <= sigma.length());
        prop_assert!(w.coset().contains(sigma));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn relations_hold_on_larger_hooks(d in 7usize..=8, k_frac in 0.0f64..1.0, e in 3usize..=5) {
        let k = ((d as f64) * k_frac) as usize;
        let m = HookModule::new(HookShape::new(d, k.min(d - 1)).unwrap(), QuiverParams::new(e).unwrap());
        let rep = verify_relations(&m, PrimeField::new(3).unwrap());
        prop_assert!(rep.passed(), "{}", rep);
    }
}
