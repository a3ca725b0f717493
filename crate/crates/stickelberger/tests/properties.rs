//! Randomized structural laws. Everything here is exact, so a single
//! counterexample is a real bug, never numerical noise.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use stickelberger::arith::{self, rat, rat_int, Rat};
use stickelberger::cyclotomic::CycloInt;
use stickelberger::groupring::{units_mod, AbelianGaloisGroup, GroupRingElement};
use stickelberger::kshadow::k_group;
use stickelberger::theta::{dr_congruence_check, theta, theta_product_check};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// A random rational group-ring element over `Q(mu_m)`.
fn element(m: u64) -> impl Strategy<Value = GroupRingElement> {
    let g = AbelianGaloisGroup::full(m).unwrap();
    let k = g.elements().len();
    proptest::collection::vec(small_rat(), k).prop_map(move |coeffs| {
        let mut x = GroupRingElement::zero(&g);
        for (&s, c) in g.elements().iter().zip(coeffs) {
            x.add_rat_term(s, c).unwrap();
        }
        x
    })
}

/// Same, with integer coefficients (needed wherever `l`-integrality is a
/// precondition).
fn int_element(m: u64) -> impl Strategy<Value = GroupRingElement> {
    let g = AbelianGaloisGroup::full(m).unwrap();
    let k = g.elements().len();
    proptest::collection::vec(-40i64..=40, k).prop_map(move |coeffs| {
        let mut x = GroupRingElement::zero(&g);
        for (&s, c) in g.elements().iter().zip(coeffs) {
            x.add_rat_term(s, rat_int(c)).unwrap();
        }
        x
    })
}

fn cyclo(m: u64) -> impl Strategy<Value = CycloInt> {
    let phi = stickelberger::cyclotomic::euler_phi(m) as usize;
    proptest::collection::vec(-20i64..=20, phi)
        .prop_map(move |cs| CycloInt::new(m, cs.into_iter().map(BigInt::from).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // --- exact arithmetic -------------------------------------------------

    #[test]
    fn bernoulli_recurrence(n in 2u64..40) {
        // sum_{k<n} C(n, k) B_k = 0 for n >= 2 (with B_1 = -1/2)
        let mut acc = Rat::zero();
        for k in 0..n {
            acc += Rat::from_integer(arith::binomial(n, k)) * arith::bernoulli(k);
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn bernoulli_poly_difference(n in 1u64..12, num in -30i64..30, den in 1i64..10) {
        // B_n(x + 1) - B_n(x) = n x^(n-1)
        let x = rat(num, den);
        let lhs = arith::bernoulli_poly(n, &(x.clone() + Rat::one()))
            - arith::bernoulli_poly(n, &x);
        let rhs = rat_int(n as i64) * x.pow(n as i32 - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn valuation_laws(a in small_rat(), b in small_rat(), l in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let v = |x: &Rat| arith::padic_val(x, l);
        if let (Some(va), Some(vb)) = (v(&a), v(&b)) {
            prop_assert_eq!(v(&(a.clone() * b.clone())), Some(va + vb));
            if let Some(vs) = v(&(a + b)) {
                prop_assert!(vs >= va.min(vb));
                if va != vb {
                    prop_assert_eq!(vs, va.min(vb));
                }
            }
        }
    }

    // --- group-ring laws --------------------------------------------------

    #[test]
    fn ring_laws(x in element(15), y in element(15), z in element(15)) {
        let xy = x.grmul(&y).unwrap();
        prop_assert_eq!(&xy, &y.grmul(&x).unwrap());
        prop_assert_eq!(
            xy.grmul(&z).unwrap(),
            x.grmul(&y.grmul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.grmul(&y.add(&z).unwrap()).unwrap(),
            x.grmul(&y).unwrap().add(&x.grmul(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn restriction_is_a_ring_map(x in element(15), y in element(15)) {
        let target = AbelianGaloisGroup::full(5).unwrap();
        let r = |e: &GroupRingElement| e.restrict(&target).unwrap();
        prop_assert_eq!(r(&x.grmul(&y).unwrap()), r(&x).grmul(&r(&y)).unwrap());
        prop_assert_eq!(r(&x.add(&y).unwrap()), r(&x).add(&r(&y)).unwrap());
    }

    #[test]
    fn twist_is_a_ring_automorphism(x in int_element(25), y in int_element(25), n in 1i64..5) {
        // over Q(mu_25) with l = 5: w_n(F)_5 = 25 for every n coprime to 5,
        // so the twist is defined at precision k = 2
        let l = 5u64;
        let k = 2u32;
        let t = |e: &GroupRingElement| e.reduce_mod(l, k).unwrap().twist_tn(n, l).unwrap();
        let xy = x.grmul(&y).unwrap();
        prop_assert_eq!(t(&xy), t(&x).grmul(&t(&y)).unwrap());
        // t_{-n} inverts t_n
        prop_assert_eq!(
            t(&x).twist_tn(-n, l).unwrap(),
            x.reduce_mod(l, k).unwrap()
        );
    }

    #[test]
    fn omega_value_is_multiplicative(x in int_element(7), y in int_element(7), i in 0i64..6) {
        let l = 7u64;
        let k = 2u32;
        let chi = |e: &GroupRingElement| e.omega_char_value(i, l, k).unwrap();
        prop_assert_eq!(
            chi(&x.grmul(&y).unwrap()),
            chi(&x).mul(&chi(&y)).unwrap()
        );
    }

    // --- cyclotomic integers ----------------------------------------------

    #[test]
    fn galois_and_norm_multiplicative(x in cyclo(7), y in cyclo(7), c in prop::sample::select(vec![2u64, 3, 4, 5, 6])) {
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(
            xy.galois(c).unwrap(),
            x.galois(c).unwrap().mul(&y.galois(c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            xy.norm().unwrap(),
            x.norm().unwrap() * y.norm().unwrap()
        );
    }

    // --- Stickelberger elements -------------------------------------------

    #[test]
    fn theta_sees_only_the_support(n in 0u64..4, b in prop::sample::select(vec![2u64, 4, 7, 8, 11])) {
        // f' enters through its radical alone
        let g = AbelianGaloisGroup::full(15).unwrap();
        if b % 3 == 0 || b % 5 == 0 { return Ok(()); }
        let t1 = theta(n, b, b, 15, &g).unwrap();
        let t2 = theta(n, b, b, 45, &g).unwrap();
        let t3 = theta(n, b, b, 225, &g).unwrap();
        prop_assert_eq!(&t1.element, &t2.element);
        prop_assert_eq!(&t1.element, &t3.element);
    }

    #[test]
    fn theta_product_rule(a in prop::sample::select(vec![2u64, 4, 7, 8, 11, 13]),
                          d in prop::sample::select(vec![2u64, 4, 7, 8, 11, 13])) {
        let g = AbelianGaloisGroup::full(5).unwrap();
        prop_assert!(theta_product_check((a, a), (d, d), 5, &g).unwrap());
    }

    #[test]
    fn deligne_ribet_congruence(fp in prop::sample::select(vec![5u64, 7, 9, 11]),
                                n in prop::sample::select(vec![1u64, 3, 5]),
                                l in prop::sample::select(vec![3u64, 5, 7])) {
        let g = AbelianGaloisGroup::full(fp).unwrap();
        let b = (2..).find(|b: &u64| num_integer::gcd(*b, l * fp) == 1).unwrap();
        prop_assert!(dr_congruence_check(b, fp, n, l, &g).unwrap().holds);
    }

    // --- finite K-groups ---------------------------------------------------

    #[test]
    fn k_group_is_the_l_part(q in prop::sample::select(vec![4u64, 5, 7, 9, 11, 13, 25]),
                             n in 1u64..6,
                             l in prop::sample::select(vec![2u64, 3, 5, 7])) {
        if q % l == 0 { return Ok(()); }
        // |K_{2n-1}(F_q)| = q^n - 1 with the stated l-part split off
        let grp = k_group(q, n, l).unwrap();
        let full: BigInt = BigInt::from(q).pow(n as u32) - 1;
        let lb = BigInt::from(l);
        let mut rest = full.clone();
        let mut lpart = BigInt::one();
        while (&rest % &lb).is_zero() {
            rest /= &lb;
            lpart *= &lb;
        }
        prop_assert_eq!(&grp.order, &full);
        prop_assert_eq!(BigInt::from(l).pow(grp.l_part_exponent), lpart);
    }
}
