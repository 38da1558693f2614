use itertools::Itertools;
use nuij_core::matrix::principal_minors_all_equal;
use nuij_core::nuij::{
    build_pencil, compose, monic_from_coeffs, verify_shift_identity, viete, HyperbolicPoly,
    NuijCandidate,
};
use nuij_core::poly::{
    bipoly_interpolate, is_hyperbolic, isolate_and_refine_roots, square_free_part,
    sturm_root_count, BiPoly, Bound, UniPoly,
};
use nuij_core::toeplitz::{
    detrep_bipoly, is_udr, recover_udr, toeplitz_det_closed, toeplitz_det_oracle,
    udr_sequence_rational, verify_udr, SpecialToeplitz,
};
use nuij_core::{QuadExt, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=8).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn rationals(lo: usize, hi: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), lo..=hi)
}

fn uni_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    rationals(0, max_deg + 1).prop_map(UniPoly::new)
}

fn candidate(max_d: usize) -> impl Strategy<Value = NuijCandidate> {
    rationals(1, max_d).prop_map(|a| NuijCandidate::new(a).unwrap())
}

fn bipoly(max_deg: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, rational()), 0..8).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for (dz, ds, c) in terms {
            p.add_term(dz, ds, &c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn rational_text_roundtrip(a in rational()) {
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn quad_zero_iff_components_zero(x in rational(), y in rational(), d in 2i64..50) {
        prop_assume!(Rational::from(d).sqrt_exact().is_none());
        let q = QuadExt::new(x.clone(), y.clone(), Rational::from(d)).unwrap();
        prop_assert_eq!(q.is_zero(), x.is_zero() && y.is_zero());
        let prod = q.try_mul(&q.conj()).unwrap();
        prop_assert!(prod.y().is_zero());
        prop_assert_eq!(prod.x(), &(&x * &x - Rational::from(d) * &y * &y));
    }

    #[test]
    fn leibniz_rule(p in uni_poly(6), q in uni_poly(6)) {
        let lhs = (&p * &q).derivative(1);
        let rhs = &(&p.derivative(1) * &q) + &(&p * &q.derivative(1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn real_rooted_products_are_hyperbolic(roots in rationals(1, 7), extra in 0usize..3) {
        let mut all = roots.clone();
        // repeat some roots
        all.extend(roots.iter().take(extra).cloned());
        let p = UniPoly::from_roots(&all);
        prop_assert!(is_hyperbolic(&p).unwrap());
        let distinct = all.iter().unique().count();
        let sqf = square_free_part(&p).unwrap();
        prop_assert_eq!(sturm_root_count(&sqf, &Bound::NegInf, &Bound::PosInf).unwrap(), distinct);

        let iso = isolate_and_refine_roots(&p, &Rational::new(1, 50).unwrap()).unwrap();
        prop_assert_eq!(iso.total_multiplicity(), all.len());
        for r in all.iter().unique() {
            let hits: Vec<_> = iso.intervals.iter().filter(|iv| iv.contains(r)).collect();
            prop_assert_eq!(hits.len(), 1);
            prop_assert_eq!(hits[0].multiplicity, all.iter().filter(|x| *x == r).count());
            if !hits[0].is_exact() {
                prop_assert_eq!(sqf.sign_at(&hits[0].lo) * sqf.sign_at(&hits[0].hi), -1);
            }
        }
    }

    #[test]
    fn planted_complex_pair_is_not_hyperbolic(
        b in rational(), slack in nonzero_rational(), roots in rationals(0, 5)
    ) {
        // c = b^2/4 + |slack| makes the discriminant negative
        let c = &b * &b / Rational::from(4) + slack.abs();
        let quad = UniPoly::new(vec![c, b, Rational::one()]);
        let p = &quad * &UniPoly::from_roots(&roots);
        prop_assert!(!is_hyperbolic(&p).unwrap());
        prop_assert!(isolate_and_refine_roots(&p, &Rational::one()).is_err());
    }

    #[test]
    fn interpolation_inverts_evaluation(f in bipoly(3)) {
        let nodes: Vec<Rational> = [-2i64, 0, 1, 3].iter().map(|&x| Rational::from(x)).collect();
        let values: Vec<Vec<Rational>> = nodes
            .iter()
            .map(|z| nodes.iter().map(|s| f.eval(z, s)).collect())
            .collect();
        prop_assert_eq!(bipoly_interpolate(&values, &nodes, &nodes, 3, 3).unwrap(), f);
    }

    #[test]
    fn d2_membership_regions(a1 in rational(), a2 in rational()) {
        let a = NuijCandidate::new(vec![a1.clone(), a2.clone()]).unwrap();
        let disc_n = &a1 * &a1 - Rational::from(2) * &a2;
        prop_assert_eq!(a.is_nuij(), !disc_n.is_negative());
        let h = UniPoly::new(vec![a2.clone(), a1.clone(), Rational::one()]);
        let disc_h = &a1 * &a1 - Rational::from(4) * &a2;
        prop_assert_eq!(is_hyperbolic(&h).unwrap(), !disc_h.is_negative());
    }

    #[test]
    fn viete_image_is_nuij(x in rationals(1, 7)) {
        let a = NuijCandidate::new(viete(&x)).unwrap();
        prop_assert!(a.is_nuij());
    }

    #[test]
    fn membership_via_bd_map(a in candidate(6)) {
        let h = monic_from_coeffs(&a.bd_map());
        prop_assert_eq!(a.is_nuij(), is_hyperbolic(&h).unwrap());
    }

    #[test]
    fn non_members_are_refuted_by_the_monomial(a in candidate(5)) {
        prop_assume!(!a.is_nuij());
        let zd = HyperbolicPoly::new(UniPoly::monomial(Rational::one(), a.d())).unwrap();
        let section = build_pencil(&zd, &a).unwrap().section(&Rational::one());
        prop_assert_eq!(&section, &a.q_poly());
        prop_assert!(!is_hyperbolic(&section).unwrap());
    }

    #[test]
    fn composition_is_commutative_and_associative(
        (a, b, c) in (1usize..6).prop_flat_map(|d| {
            let v = || rationals(d, d).prop_map(|a| NuijCandidate::new(a).unwrap());
            (v(), v(), v())
        })
    ) {
        prop_assert_eq!(compose(&a, &b).unwrap(), compose(&b, &a).unwrap());
        let left = compose(&compose(&a, &b).unwrap(), &c).unwrap();
        let right = compose(&a, &compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn scaling_law(a in candidate(6), s in nonzero_rational()) {
        let d = a.d() as u32;
        let lhs = a.scaled(&s).q_poly();
        let rhs = a.q_poly().scale_arg(&s.recip().unwrap()).scale(&s.pow(d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_identity_always_holds(a in candidate(6)) {
        prop_assert!(verify_shift_identity(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pencils_of_nuij_sequences_stay_hyperbolic(
        lambdas in rationals(1, 4), roots in rationals(4, 4), s0 in rational()
    ) {
        let d = lambdas.len();
        // any hyperbolic q_a pulls back to a Nuij sequence
        let c = viete(&roots[..d]);
        let a: Vec<Rational> = c
            .iter()
            .enumerate()
            .map(|(i, ck)| ck / &Rational::falling_factorial(d, i + 1))
            .collect();
        let a = NuijCandidate::new(a).unwrap();
        prop_assert!(a.is_nuij());
        let p = HyperbolicPoly::from_lambdas(&lambdas);
        let section = build_pencil(&p, &a).unwrap().section(&s0);
        prop_assert!(is_hyperbolic(&section).unwrap());
    }

    #[test]
    fn toeplitz_closed_form_matches_oracle(alpha in rational(), beta in rational(), k in 1usize..=8) {
        let t = SpecialToeplitz::rational(k, &alpha, &beta).unwrap();
        prop_assert_eq!(
            toeplitz_det_closed(t.alpha(), t.beta(), k).unwrap(),
            toeplitz_det_oracle(t.alpha(), t.beta(), k).unwrap()
        );
    }

    #[test]
    fn toeplitz_closed_form_matches_oracle_in_extension(
        x in rational(), y in rational(), u in rational(), v in rational(),
        radicand in 2i64..20, k in 1usize..=7
    ) {
        let d = Rational::from(radicand);
        let alpha = QuadExt::new(x, y, d.clone()).unwrap();
        let beta = QuadExt::new(u, v, d).unwrap();
        prop_assert_eq!(
            toeplitz_det_closed(&alpha, &beta, k).unwrap(),
            toeplitz_det_oracle(&alpha, &beta, k).unwrap()
        );
    }

    #[test]
    fn udr_roundtrip(alpha in rational(), beta in rational(), d in 1usize..=8) {
        let a = udr_sequence_rational(&alpha, &beta, d).unwrap();
        let w = recover_udr(&a).witness().cloned().unwrap();
        prop_assert_eq!(w.alpha.as_rational(), Some(&alpha));
        let betas: Vec<Rational> =
            w.beta_solutions.iter().map(|b| b.as_rational().cloned().unwrap()).collect();
        let expect = match d {
            1 => vec![Rational::zero()],
            2 if !beta.is_zero() => vec![beta.abs(), -beta.abs()],
            _ => vec![beta.clone()],
        };
        prop_assert_eq!(betas, expect);
    }

    #[test]
    fn udr_sequences_are_nuij(alpha in rational(), beta in rational(), d in 1usize..=7) {
        let a = udr_sequence_rational(&alpha, &beta, d).unwrap();
        prop_assert!(is_udr(&a));
        prop_assert!(a.is_nuij());
    }

    #[test]
    fn universal_representation(lambdas in rationals(1, 5), alpha in rational(), beta in rational()) {
        prop_assert!(verify_udr(&lambdas, &alpha, &beta).unwrap());
    }

    #[test]
    fn diagonal_order_is_irrelevant(lambdas in rationals(2, 4), alpha in rational(), beta in rational()) {
        let base = detrep_bipoly(&lambdas, &alpha, &beta);
        for perm in lambdas.iter().cloned().permutations(lambdas.len()) {
            prop_assert_eq!(&detrep_bipoly(&perm, &alpha, &beta), &base);
        }
    }

    #[test]
    fn toeplitz_principal_minors_equal(alpha in rational(), beta in rational(), d in 1usize..=6) {
        let m = SpecialToeplitz::rational(d, &alpha, &beta).unwrap().to_sym_matrix().unwrap();
        for j in 1..=d {
            prop_assert!(principal_minors_all_equal(&m, j).unwrap());
        }
    }
}
