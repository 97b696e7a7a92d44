use algebra::poly::rat_pow;
use algebra::{rat, Rational};
use proptest::prelude::*;
use quiver::casimir::{casimir_basis, is_casimir, transport};
use quiver::{fixture_quiver, Quiver, Seed};

fn arb_quiver(even_only: bool) -> impl Strategy<Value = Quiver> {
    (2usize..6).prop_flat_map(move |n| {
        let m = n * (n - 1) / 2;
        let weight = if even_only {
            (-3i64..=3).prop_map(|w| 2 * w).boxed()
        } else {
            (-6i64..=6).boxed()
        };
        (
            proptest::collection::vec(weight, m),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(ws, fr)| {
                let mut q =
                    Quiver::new((0..n).map(|i| (format!("v{i}"), i > 0 && fr[i]))).unwrap();
                let mut it = ws.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        q.set_weight2(i, j, it.next().unwrap());
                    }
                }
                q
            })
    })
}

proptest! {
    #[test]
    fn mutation_is_involutive(q in arb_quiver(true)) {
        for k in 0..q.len() {
            if q.is_frozen(k) {
                continue;
            }
            let twice = q.mutate_at(k).unwrap().mutate_at(k).unwrap();
            prop_assert_eq!(&twice, &q);
        }
    }

    #[test]
    fn mutation_preserves_kernel_dimension(q in arb_quiver(true)) {
        let dim = casimir_basis(&q).len();
        for k in 0..q.len() {
            if q.is_frozen(k) {
                continue;
            }
            let m = q.mutate_at(k).unwrap();
            prop_assert_eq!(casimir_basis(&m).len(), dim);
        }
    }

    #[test]
    fn text_form_round_trips(q in arb_quiver(false)) {
        prop_assert_eq!(Quiver::parse(&q.render()).unwrap(), q);
    }

    #[test]
    fn reordered_vertices_stay_equal_and_isomorphic(
        (q, perm) in arb_quiver(false).prop_flat_map(|q| {
            let n = q.len();
            (Just(q), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let p = q.permuted(&perm);
        prop_assert!(p.eq_by_labels(&q));
        prop_assert!(p.isomorphic_to(&q));
    }

    #[test]
    fn amalgamated_weights_are_member_sums(q in arb_quiver(false)) {
        prop_assume!(q.len() >= 4);
        let (a, b, c, d) = (q.label(0), q.label(1), q.label(2), q.label(3));
        let g = q.amalgamate(&[(a, b), (c, d)]).unwrap();
        for r in 4..q.len() {
            let gr = g.require(q.label(r)).unwrap();
            prop_assert_eq!(g.weight2(0, gr), q.weight2(0, r) + q.weight2(1, r));
            prop_assert_eq!(g.weight2(1, gr), q.weight2(2, r) + q.weight2(3, r));
        }
        let cross = q.weight2(0, 2) + q.weight2(0, 3) + q.weight2(1, 2) + q.weight2(1, 3);
        prop_assert_eq!(g.weight2(0, 1), cross);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn transport_preserves_casimir_values_on_the_hexagon(
        coeffs in proptest::collection::vec(-2i64..=2, 3),
        k in 0usize..15,
        nums in proptest::collection::vec(1i64..=6, 15),
        dens in proptest::collection::vec(1i64..=4, 15),
    ) {
        let q = fixture_quiver("n6_cluster.quiver");
        let basis = casimir_basis(&q);
        prop_assert_eq!(basis.len(), 3);
        let v: Vec<i64> = (0..q.len())
            .map(|i| (0..3).map(|b| coeffs[b] * basis[b][i]).sum())
            .collect();
        let label = q.label(k).to_string();
        let t = transport(&q, &label, &v).unwrap();
        let m = q.mutate(&label).unwrap();
        prop_assert!(is_casimir(&m, &t));
        prop_assert_eq!(transport(&m, &label, &t).unwrap(), v.clone());

        let xs: Vec<Rational> = (0..15).map(|i| rat(nums[i], dens[i])).collect();
        let seed = Seed::initial(q.clone());
        let mutated = seed.mutate(&label).unwrap();
        let value = |exprs: &[algebra::RationalFn], e: &[i64]| -> Rational {
            let mut acc = rat(1, 1);
            for (i, &p) in e.iter().enumerate() {
                let x = exprs[i].eval_values(&xs).unwrap();
                acc *= rat_pow(&x, p).unwrap();
            }
            acc
        };
        prop_assert_eq!(value(&mutated.exprs, &t), value(&seed.exprs, &v));
    }
}
