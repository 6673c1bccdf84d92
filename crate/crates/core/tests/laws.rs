use proptest::prelude::*;
use zbin_core::center::{from_mask, mask_box, to_mask, PairMask};
use zbin_core::text::{parse_mask, parse_table, render_mask, render_table};
use zbin_core::{box_product, Groupoid, LinearCoeffs};

fn groupoid(max_order: usize) -> impl Strategy<Value = Groupoid> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n * n).prop_map(move |e| Groupoid::new(n, &e).unwrap())
    })
}

fn triple(max_order: usize) -> impl Strategy<Value = (Groupoid, Groupoid, Groupoid)> {
    (1..=max_order).prop_flat_map(|n| {
        let t = || {
            proptest::collection::vec(0..n, n * n).prop_map(move |e| Groupoid::new(n, &e).unwrap())
        };
        (t(), t(), t())
    })
}

fn mask_pair(max_order: usize) -> impl Strategy<Value = (PairMask, PairMask)> {
    (2..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        let m = move || {
            proptest::collection::vec(any::<bool>(), pairs)
                .prop_map(move |f| PairMask::from_flags(n, &f).unwrap())
        };
        (m(), m())
    })
}

proptest! {
    #[test]
    fn box_is_associative((a, b, c) in triple(5)) {
        let ab = box_product(&a, &b).unwrap();
        let bc = box_product(&b, &c).unwrap();
        prop_assert_eq!(box_product(&ab, &c).unwrap(), box_product(&a, &bc).unwrap());
    }

    #[test]
    fn left_zero_is_identity(g in groupoid(6)) {
        let e = Groupoid::left_zero(g.order()).unwrap();
        prop_assert_eq!(&box_product(&e, &g).unwrap(), &g);
        prop_assert_eq!(&box_product(&g, &e).unwrap(), &g);
    }

    #[test]
    fn right_zero_transposes(g in groupoid(6)) {
        let rz = Groupoid::right_zero(g.order()).unwrap();
        let t = box_product(&g, &rz).unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                prop_assert_eq!(t.get(x, y), g.get(y, x));
            }
        }
        prop_assert_eq!(box_product(&rz, &rz).unwrap(), Groupoid::left_zero(g.order()).unwrap());
    }

    #[test]
    fn table_text_round_trip(g in groupoid(8)) {
        prop_assert_eq!(parse_table(&render_table(&g)).unwrap(), g);
    }

    #[test]
    fn mask_round_trips((m, _) in mask_pair(12)) {
        prop_assert_eq!(&parse_mask(&render_mask(&m)).unwrap(), &m);
        let g = from_mask(&m);
        prop_assert!(zbin_core::center::is_locally_zero(&g));
        prop_assert_eq!(&to_mask(&g).unwrap(), &m);
    }

    #[test]
    fn mask_box_is_homomorphism((m, k) in mask_pair(20)) {
        let lhs = to_mask(&box_product(&from_mask(&m), &from_mask(&k)).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &mask_box(&m, &k).unwrap());
        prop_assert_eq!(&mask_box(&m, &k).unwrap(), &mask_box(&k, &m).unwrap());
        prop_assert!(mask_box(&m, &m).unwrap().is_all_left());
    }

    #[test]
    fn relabelling_preserves_box((a, b, _) in triple(5), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let lhs = box_product(&a, &b).unwrap().relabel(&perm).unwrap();
        let rhs = box_product(&a.relabel(&perm).unwrap(), &b.relabel(&perm).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_compose_matches_tables(
        m in 1u32..12,
        p in any::<(u64, u64, u64)>(),
        q in any::<(u64, u64, u64)>(),
    ) {
        let p = LinearCoeffs::new(m, p.0, p.1, p.2).unwrap();
        let q = LinearCoeffs::new(m, q.0, q.1, q.2).unwrap();
        let composed = p.compose(&q).unwrap().to_table().unwrap();
        prop_assert_eq!(composed, box_product(&p.to_table().unwrap(), &q.to_table().unwrap()).unwrap());
    }
}
