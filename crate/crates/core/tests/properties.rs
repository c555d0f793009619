use cosymplectic::betti::{betti_from_horizontal, check_divisibility, HorizontalBettiSequence};
use cosymplectic::contact::{Axis, ContactModel};
use cosymplectic::exterior::{Blade, Multivector};
use cosymplectic::rat;
use num_traits::Zero;
use proptest::prelude::*;

const DIM: usize = 7;

fn form() -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..(1 << DIM), -3i64..=3), 0..6).prop_map(|terms| {
        let mut m = Multivector::zero();
        for (mask, c) in terms {
            m.add_term(Blade::from_mask(mask), rat(c));
        }
        m
    })
}

fn homogeneous(k: usize) -> impl Strategy<Value = Multivector> {
    let blades = Blade::all_of_degree(DIM, k);
    prop::collection::vec((0..blades.len(), -3i64..=3), 1..5).prop_map(move |terms| {
        let mut m = Multivector::zero();
        for (i, c) in terms {
            m.add_term(blades[i], rat(c));
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn wedge_is_associative(a in form(), b in form(), c in form()) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn graded_commutativity(
        (j, a) in (0usize..4).prop_flat_map(|j| (Just(j), homogeneous(j))),
        (k, b) in (0usize..4).prop_flat_map(|k| (Just(k), homogeneous(k))),
    ) {
        let sign = if (j * k) % 2 == 0 { rat(1) } else { rat(-1) };
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scale(&sign));
    }

    #[test]
    fn one_forms_square_to_zero(a in homogeneous(1)) {
        prop_assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn interior_squares_to_zero(a in form(), i in 0usize..DIM) {
        prop_assert!(a.interior(i).interior(i).is_zero());
    }

    #[test]
    fn interior_anticommutes(a in form(), i in 0usize..DIM, j in 0usize..DIM) {
        prop_assert_eq!(a.interior(i).interior(j), -a.interior(j).interior(i));
    }

    #[test]
    fn interior_is_a_graded_derivation(
        (k, a) in (0usize..4).prop_flat_map(|k| (Just(k), homogeneous(k))),
        b in form(),
        i in 0usize..DIM,
    ) {
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        let lhs = a.wedge(&b).interior(i);
        let rhs = a.interior(i).wedge(&b) + a.wedge(&b.interior(i)).scale(&sign);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_star_is_an_involution(a in (0usize..=DIM).prop_flat_map(homogeneous)) {
        let dims = cosymplectic::exterior::ModelDims::new(1).unwrap();
        prop_assert_eq!(a.hodge_star(dims).unwrap().hodge_star(dims).unwrap(), a);
    }

    #[test]
    fn phi_star_squares_to_minus_one(c in prop::collection::vec(-4i64..=4, 4), axis in 1u8..=3) {
        let model = ContactModel::new(1).unwrap();
        let axis = Axis::new(axis).unwrap();
        let mut v = Multivector::zero();
        for (i, x) in c.iter().enumerate() {
            v.add_term(Blade::single(i), rat(*x));
        }
        let twice = model.phi_star(axis, &model.phi_star(axis, &v).unwrap()).unwrap();
        prop_assert_eq!(twice, -v);
    }

    #[test]
    fn betti_transform_totals(n in 0usize..4, seed in prop::collection::vec(0u64..50, 13)) {
        let bh: Vec<u64> = seed[..=4 * n].to_vec();
        let b = betti_from_horizontal(&HorizontalBettiSequence::new(n, bh.clone()).unwrap());
        prop_assert_eq!(b.total(), 8 * bh.iter().sum::<u64>());
        prop_assert_eq!(b.euler_characteristic(), 0);
        prop_assert_eq!(b.values().len(), 4 * n + 4);
    }

    #[test]
    fn horizontal_divisibility_implies_full(n in 0usize..4, seed in prop::collection::vec(0u64..50, 13)) {
        // b_(k-1) + b_k is b^h convolved with (1,4,6,4,1), which is (1,0,2,0,1) mod 4
        let bh: Vec<u64> = seed[..=4 * n]
            .iter()
            .enumerate()
            .map(|(k, v)| if k % 2 == 1 { 4 * v } else { *v })
            .collect();
        let b = betti_from_horizontal(&HorizontalBettiSequence::new(n, bh).unwrap());
        prop_assert!(check_divisibility(&b).passed());
    }

    #[test]
    fn pairing_of_zero_is_zero(i in 0usize..DIM, j in 0usize..DIM) {
        prop_assume!(i != j);
        let v = cosymplectic::exterior::KVector::basis(i).wedge(&cosymplectic::exterior::KVector::basis(j));
        prop_assert!(Multivector::zero().pairing(&v).unwrap_or_else(|_| rat(0)).is_zero());
    }
}
