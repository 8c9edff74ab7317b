use cuspfam::combinatorics::{bipartitions, dagger, lr_coefficient, partitions, partitions_in_box, Bipartition, Partition};
use cuspfam::cuspidal::{cuspidal_families, rigid_closed_form};
use cuspfam::exactalg::{parse_rational, rat, ratio, CherednikParameter, CoxeterGroup, Cyclotomic, CyclotomicField, Scalar};
use cuspfam::families::{cm_families, lusztig_families, tau_twist, Method};
use cuspfam::symbols::{symbol_of, BSymbol};
use cuspfam::IrrLabel;
use proptest::prelude::*;

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn bipartition_strategy(n: usize) -> impl Strategy<Value = Bipartition> {
    let all = bipartitions(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn cyclotomic_strategy(field: CyclotomicField) -> impl Strategy<Value = Cyclotomic> {
    let degree = field.degree();
    prop::collection::vec(-6i64..=6, degree).prop_map(move |c| field.reduce(c.into_iter().map(rat).collect()))
}

fn field_triples() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (5usize..=12).prop_flat_map(|m| {
        let f = CyclotomicField::new(m);
        (cyclotomic_strategy(f.clone()), cyclotomic_strategy(f.clone()), cyclotomic_strategy(f))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lam in partition_strategy(12)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn lr_coefficients_are_symmetric(lam in partition_strategy(4), mu in partition_strategy(4)) {
        for nu in partitions(lam.size() + mu.size()) {
            prop_assert_eq!(lr_coefficient(&lam, &mu, &nu), lr_coefficient(&mu, &lam, &nu));
        }
    }

    #[test]
    fn dagger_round_trips(k in 1u32..=4, m in -2i64..=3, pick in 0usize..1000) {
        prop_assume!(k as i64 + m >= 0);
        let boxed = partitions_in_box((k as i64 + m) as usize, k);
        let lam = &boxed[pick % boxed.len()];
        let d = dagger(lam, k, m).unwrap();
        prop_assert_eq!(d.size() + lam.size(), (k as i64 * (k as i64 + m)) as usize);
        prop_assert_eq!(&dagger(&d, (k as i64 + m) as u32, -m).unwrap(), lam);
    }

    #[test]
    fn rationals_round_trip_through_text(p in -1000i64..1000, q in 1i64..1000) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn cyclotomic_field_laws((x, y, z) in field_triples()) {
        prop_assert_eq!(x.mul_ref(&y), y.mul_ref(&x));
        prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
        match x.inv() {
            Some(inv) => prop_assert!(x.mul_ref(&inv).sub_ref(&x.one_like()).vanishes()),
            None => prop_assert!(x.vanishes()),
        }
    }

    #[test]
    fn symbols_decode_to_their_bipartition(n in 1usize..=6, pick in 0usize..1000, m in 0i64..=4) {
        let all = bipartitions(n);
        let bp = &all[pick % all.len()];
        let s = symbol_of(bp, n, &rat(m), &rat(1)).unwrap();
        prop_assert_eq!(&s.bipartition(), bp);
        prop_assert_eq!(s.shift(2).unshift(2).unwrap(), s.clone());
        prop_assert_eq!(s.shift(1).bipartition(), bp.clone());
    }

    #[test]
    fn bar_is_an_involution_and_twists_by_sign(n in 1usize..=6, pick in 0usize..1000) {
        let all = bipartitions(n);
        let bp = &all[pick % all.len()];
        let s = symbol_of(bp, n, &rat(0), &rat(1)).unwrap();
        let t = s.beta().iter().chain(s.gamma()).copied().max().unwrap_or(0) + 2;
        let bar = s.bar(Some(t)).unwrap();
        prop_assert_eq!(bar.bipartition(), bp.sign_twist());
        let back: BSymbol = bar.bar(Some(t)).unwrap();
        prop_assert_eq!(back.bipartition(), bp.clone());
    }

    #[test]
    fn family_partitions_cover_irr(n in 1usize..=6, c1 in -4i64..=4, kappa in 0i64..=3) {
        let g = CoxeterGroup::B(n);
        let p = CherednikParameter::B { c1: rat(c1), kappa: rat(kappa) };
        let cm = cm_families(&g, &p).unwrap();
        prop_assert!(cm.is_partition_of_irr());
        let neg = cm_families(&g, &CherednikParameter::B { c1: rat(-c1), kappa: rat(kappa) }).unwrap();
        prop_assert!(tau_twist(&cm).unwrap().same_blocks(&neg));
        if c1 >= 0 {
            prop_assert!(cm.same_blocks(&lusztig_families(&g, &p).unwrap()));
        }
        for alpha in [rat(2), ratio(1, 3), ratio(-5, 2)] {
            prop_assert!(cm.same_blocks(&cm_families(&g, &p.scaled(&alpha)).unwrap()));
        }
    }

    #[test]
    fn rigid_labels_sit_in_cuspidal_families(n in 1usize..=7, c1 in -6i64..=6, kappa in 0i64..=2) {
        let g = CoxeterGroup::B(n);
        let p = CherednikParameter::B { c1: rat(c1), kappa: rat(kappa) };
        let cusp = cuspidal_families(&g, &p, Method::CalogeroMoser).unwrap();
        prop_assert!(cusp.len() <= 1);
        for label in rigid_closed_form(&g, &p).unwrap() {
            prop_assert!(cusp.iter().any(|f| f.contains(&label)));
        }
    }

    #[test]
    fn sign_twist_is_an_involution(bp in (1usize..=6).prop_flat_map(bipartition_strategy)) {
        prop_assert_eq!(bp.sign_twist().sign_twist(), bp.clone());
        prop_assert_eq!(bp.sign_twist().size(), bp.size());
    }

    #[test]
    fn dihedral_families_are_partitions(m in 5usize..=14, a in 0i64..=3, b in 0i64..=3) {
        prop_assume!(a + b > 0 && (m % 2 == 0 || a == b));
        let g = CoxeterGroup::I2(m);
        let p = CherednikParameter::I2 { a: rat(a), b: rat(b) };
        let cm = cm_families(&g, &p).unwrap();
        prop_assert!(cm.is_partition_of_irr());
        prop_assert!(cm.same_blocks(&lusztig_families(&g, &p).unwrap()));
        let phi1 = IrrLabel::Dihedral(cuspfam::reps::DihedralChar::Phi(1));
        let cusp = cuspidal_families(&g, &p, Method::CalogeroMoser).unwrap();
        prop_assert!(cusp.len() == 1 && cusp[0].contains(&phi1));
    }
}
