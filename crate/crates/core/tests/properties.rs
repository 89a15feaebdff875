use proptest::prelude::*;

use molecules::beissinger::{p_cbs, p_cbs_inverse, p_rbs, p_rbs_inverse, psi_orbit};
use molecules::tableau::pq_rs;
use molecules::{Involution, Permutation, Tableau};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

// pair up the first 2k letters of a shuffle
fn involution(max: usize) -> impl Strategy<Value = Involution> {
    (permutation(max), any::<prop::sample::Index>()).prop_map(|(p, k)| {
        let n = p.n();
        let pairs = k.index(n / 2 + 1);
        let mut word: Vec<u32> = (1..=n as u32).collect();
        for c in p.word()[..2 * pairs].chunks(2) {
            word[c[0] as usize - 1] = c[1];
            word[c[1] as usize - 1] = c[0];
        }
        Involution::from_word(word).unwrap()
    })
}

proptest! {
    #[test]
    fn rs_inverse_swaps_tableaux(w in permutation(9)) {
        let (p, q) = pq_rs(&w);
        let (p2, q2) = pq_rs(&w.inverse());
        prop_assert_eq!(p, q2);
        prop_assert_eq!(q, p2);
    }

    #[test]
    fn uninsert_undoes_insert(w in permutation(9)) {
        let (p, _) = pq_rs(&w);
        let fresh = w.n() as u32 + 1;
        let (t, path) = p.rs_insert(fresh).unwrap();
        prop_assert_eq!(t.rs_uninsert(path.new_cell()).unwrap(), (p, fresh));
    }

    #[test]
    fn knuth_moves_fix_p_and_dual_moves_act_by_d(w in permutation(9), i in 2usize..9) {
        prop_assume!(i < w.n());
        let (p, q) = pq_rs(&w);
        let k = w.knuth_move(i, false).unwrap();
        prop_assert_eq!(&pq_rs(&k).0, &p);
        prop_assert_eq!(k.knuth_move(i, false).unwrap(), w.clone());
        let d = w.knuth_move(i, true).unwrap();
        let (dp, dq) = pq_rs(&d);
        prop_assert_eq!(dp, p.dual_equiv(i as u32).unwrap());
        prop_assert_eq!(dq, q);
    }

    #[test]
    fn dual_equivalence_is_an_involution(w in permutation(9), i in 2u32..9) {
        let (p, _) = pq_rs(&w);
        prop_assume!((i as usize) < w.n());
        let d = p.dual_equiv(i).unwrap();
        prop_assert_eq!(d.shape(), p.shape());
        prop_assert_eq!(d.dual_equiv(i).unwrap(), p);
    }

    #[test]
    fn beissinger_maps_invert(y in involution(10)) {
        let r: Tableau = p_rbs(&y);
        let c: Tableau = p_cbs(&y);
        prop_assert!(r.is_standard() && c.is_standard());
        prop_assert_eq!(p_rbs_inverse(&r).unwrap(), y.clone());
        prop_assert_eq!(p_cbs_inverse(&c).unwrap(), y);
    }

    #[test]
    fn psi_orbits_close(y in involution(8)) {
        let orbit = psi_orbit(&y);
        prop_assert_eq!(&orbit[0], &y);
        let distinct: std::collections::BTreeSet<_> = orbit.iter().collect();
        prop_assert_eq!(distinct.len(), orbit.len());
    }
}
