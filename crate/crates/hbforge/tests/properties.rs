//! Randomized algebraic laws for the arithmetic kernel.

use std::sync::Arc;

use proptest::prelude::*;

use hbforge::groebner::{divide_track, Budget};
use hbforge::ideal::Ideal;
use hbforge::ring::{MonomialOrder, PolyRing};
use hbforge::{parse, CoeffField, Polynomial};

fn ring_gfp() -> Arc<PolyRing> {
    PolyRing::standard(
        &["x", "y", "z"],
        CoeffField::Prime(32003),
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

fn ring_q() -> Arc<PolyRing> {
    PolyRing::standard(&["x", "y", "z"], CoeffField::Rationals, MonomialOrder::Lex).unwrap()
}

fn poly_from(ring: &Arc<PolyRing>, raw: &[(u16, u16, u16, i64)]) -> Polynomial {
    let terms = raw
        .iter()
        .map(|&(a, b, c, k)| (vec![a, b, c], ring.field.from_i64(k)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn raw_terms() -> impl Strategy<Value = Vec<(u16, u16, u16, i64)>> {
    prop::collection::vec((0u16..4, 0u16..4, 0u16..4, -50i64..50), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(a in raw_terms(), b in raw_terms()) {
        for ring in [ring_gfp(), ring_q()] {
            let (p, q) = (poly_from(&ring, &a), poly_from(&ring, &b));
            prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        }
    }

    #[test]
    fn multiplication_commutes_and_associates(
        a in raw_terms(), b in raw_terms(), c in raw_terms()
    ) {
        for ring in [ring_gfp(), ring_q()] {
            let (p, q, r) = (
                poly_from(&ring, &a),
                poly_from(&ring, &b),
                poly_from(&ring, &c),
            );
            prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
            prop_assert_eq!(
                p.mul(&q).unwrap().mul(&r).unwrap(),
                p.mul(&q.mul(&r).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn multiplication_distributes(a in raw_terms(), b in raw_terms(), c in raw_terms()) {
        for ring in [ring_gfp(), ring_q()] {
            let (p, q, r) = (
                poly_from(&ring, &a),
                poly_from(&ring, &b),
                poly_from(&ring, &c),
            );
            prop_assert_eq!(
                p.mul(&q.add(&r).unwrap()).unwrap(),
                p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn subtraction_inverts_addition(a in raw_terms(), b in raw_terms()) {
        for ring in [ring_gfp(), ring_q()] {
            let (p, q) = (poly_from(&ring, &a), poly_from(&ring, &b));
            prop_assert_eq!(p.add(&q).unwrap().sub(&q).unwrap(), p);
        }
    }

    #[test]
    fn parse_round_trip(a in raw_terms()) {
        for ring in [ring_gfp(), ring_q()] {
            let p = poly_from(&ring, &a);
            if p.is_zero() {
                continue;
            }
            prop_assert_eq!(parse(&p.to_string(), &ring).unwrap(), p);
        }
    }

    #[test]
    fn division_identity(a in raw_terms(), b in raw_terms(), c in raw_terms()) {
        let ring = ring_gfp();
        let p = poly_from(&ring, &a);
        let divisors: Vec<Polynomial> = [&b, &c]
            .iter()
            .map(|raw| poly_from(&ring, raw))
            .filter(|d| !d.is_zero())
            .collect();
        if divisors.is_empty() {
            return Ok(());
        }
        let (q, rem) = divide_track(&p, &divisors).unwrap();
        let mut acc = rem.clone();
        for (qi, di) in q.iter().zip(&divisors) {
            acc = acc.add(&qi.mul(di).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, p);
        for (e, _) in &rem.terms {
            for d in &divisors {
                let lead = d.lead_monomial().unwrap();
                prop_assert!(!lead.iter().zip(e.iter()).all(|(l, t)| l <= t));
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_membership_exact(a in raw_terms(), b in raw_terms()) {
        let ring = ring_gfp();
        let (p, q) = (poly_from(&ring, &a), poly_from(&ring, &b));
        if p.is_zero() || q.is_zero() {
            return Ok(());
        }
        let ideal = Ideal::new(vec![p.clone(), q.clone()], Budget::default()).unwrap();
        let gb = ideal.gb().unwrap();
        // combinations of the generators always reduce to zero
        let member = p.mul(&q).unwrap().add(&q.mul(&p.add(&q).unwrap()).unwrap()).unwrap();
        prop_assert!(gb.contains(&member).unwrap());
        // reducing twice changes nothing
        let witness = poly_from(&ring, &[(2, 1, 0, 7), (0, 0, 3, -2)]);
        let nf = gb.normal_form(&witness).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        // and the residue of the reduction lies in the ideal
        prop_assert!(gb.contains(&witness.sub(&nf).unwrap()).unwrap());
    }
}
