//! Randomized laws for ideal-level operations: the containment lattice of
//! sum/product/intersection, quotient and saturation identities, and
//! soundness of elimination.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hbforge::groebner::{eliminate, Budget};
use hbforge::ideal::{monomials_of_degree, Ideal};
use hbforge::ring::{MonomialOrder, PolyRing};
use hbforge::{CoeffField, Polynomial};

fn ring3() -> Arc<PolyRing> {
    PolyRing::standard(
        &["x", "y", "z"],
        CoeffField::Prime(32003),
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

/// Random homogeneous form of the given degree with small support.
fn random_form(ring: &Arc<PolyRing>, deg: u16, rng: &mut ChaCha8Rng) -> Polynomial {
    let monos = monomials_of_degree(ring.nvars(), deg);
    let mut terms = Vec::new();
    for e in monos {
        if rng.random_range(0..3u8) != 0 {
            terms.push((e, ring.field.from_i64(rng.random_range(1..32003i64))));
        }
    }
    Polynomial::from_terms(ring, terms)
}

fn random_ideal(ring: &Arc<PolyRing>, rng: &mut ChaCha8Rng) -> Ideal {
    let k = rng.random_range(1..=3usize);
    let gens: Vec<Polynomial> = (0..k)
        .map(|_| {
            let d = rng.random_range(1..=3u16);
            random_form(ring, d, rng)
        })
        .filter(|p| !p.is_zero())
        .collect();
    if gens.is_empty() {
        return Ideal::from_strs(ring, &["x"]).unwrap();
    }
    Ideal::new(gens, Budget::default()).unwrap()
}

#[test]
fn containment_lattice() {
    let ring = ring3();
    let mut rng = ChaCha8Rng::seed_from_u64(90210);
    for _ in 0..25 {
        let a = random_ideal(&ring, &mut rng);
        let b = random_ideal(&ring, &mut rng);
        let sum = a.sum(&b).unwrap();
        let prod = a.product(&b).unwrap();
        let cap = a.intersect(&b).unwrap();
        // A·B ⊆ A ∩ B ⊆ A ⊆ A + B
        assert!(cap.contains_ideal(&prod).unwrap());
        assert!(a.contains_ideal(&cap).unwrap());
        assert!(b.contains_ideal(&cap).unwrap());
        assert!(sum.contains_ideal(&a).unwrap());
        assert!(sum.contains_ideal(&b).unwrap());
        // intersection is the largest ideal inside both: every generator of
        // anything inside both lies in the intersection
        let inner = prod.sum(&cap).unwrap();
        assert!(cap.eq_ideal(&inner).unwrap());
        // commutativity
        assert!(cap.eq_ideal(&b.intersect(&a).unwrap()).unwrap());
        assert!(prod.eq_ideal(&b.product(&a).unwrap()).unwrap());
    }
}

#[test]
fn quotient_and_saturation_identities() {
    let ring = ring3();
    let mut rng = ChaCha8Rng::seed_from_u64(1337);
    for _ in 0..15 {
        let a = random_ideal(&ring, &mut rng);
        let b = random_ideal(&ring, &mut rng);
        let q = a.quotient(&b).unwrap();
        // A ⊆ A : B and (A : B)·B ⊆ A
        assert!(q.contains_ideal(&a).unwrap());
        assert!(a.contains_ideal(&q.product(&b).unwrap()).unwrap());
        // saturation is a fixed point of the quotient and contains A
        let (sat, _) = a.saturate(&b).unwrap();
        assert!(sat.contains_ideal(&a).unwrap());
        assert!(sat.quotient(&b).unwrap().eq_ideal(&sat).unwrap());
        // quotient by the whole ring gives the ideal back
        let unit = Ideal::from_strs(&ring, &["1"]).unwrap();
        assert!(a.quotient(&unit).unwrap().eq_ideal(&a).unwrap());
    }
}

#[test]
fn quotient_of_contained_ideal_is_unit() {
    let ring = ring3();
    let a = Ideal::from_strs(&ring, &["x^2", "x*y"]).unwrap();
    let bigger = Ideal::from_strs(&ring, &["x"]).unwrap();
    // x·(x, y) ⊆ (x^2, xy) so (x^2, xy) : (x) = (x, y)
    let q = a.quotient(&bigger).unwrap();
    assert!(q
        .eq_ideal(&Ideal::from_strs(&ring, &["x", "y"]).unwrap())
        .unwrap());
    // and I : I is always the unit ideal
    assert!(a.quotient(&a).unwrap().is_unit().unwrap());
}

#[test]
fn elimination_is_sound_and_complete_for_graphs() {
    // eliminate t from (t - f): the result must be zero (f is a polynomial,
    // the graph projects onto the whole base); eliminate x from the graph of
    // a finite substitution and check the relation survives
    let ring = PolyRing::standard(
        &["t", "x", "y"],
        CoeffField::Prime(32003),
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let budget = Budget::default();
    let g = hbforge::parse("t - x^2 - y^3", &ring).unwrap();
    let (out, _) = eliminate(std::slice::from_ref(&g), &["t"], &budget).unwrap();
    assert!(out.is_empty());

    // the circle parametrization: x = (1-s^2)/(1+s^2), y = 2s/(1+s^2)
    // cleared of denominators; eliminating s recovers x^2 + y^2 - z^2 = 0
    let r = PolyRing::standard(
        &["s", "x", "y", "z"],
        CoeffField::Prime(32003),
        MonomialOrder::Grevlex,
    )
    .unwrap();
    let gens = [
        hbforge::parse("x*s^2 + x - 1 + s^2", &r).unwrap(),
        hbforge::parse("y*s^2 + y - 2*s", &r).unwrap(),
        hbforge::parse("z - 1", &r).unwrap(),
    ];
    let (out, sub) = eliminate(&gens, &["s"], &budget).unwrap();
    let circle = hbforge::parse("x^2 + y^2 - z^2", &sub).unwrap();
    let elim_ideal = Ideal::new(out, budget).unwrap();
    assert!(elim_ideal.contains(&circle).unwrap());
}

#[test]
fn eliminated_generators_vanish_on_membership() {
    // every elimination output must lie in the original ideal
    let ring = ring3();
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    for _ in 0..10 {
        let a = random_ideal(&ring, &mut rng);
        let (out, _) = eliminate(&a.gens, &["x"], &Budget::default()).unwrap();
        for p in &out {
            let back = p.map_to_ring(&ring).unwrap();
            assert!(a.contains(&back).unwrap(), "{p} escaped the ideal");
        }
    }
}

#[test]
fn power_grading_and_membership() {
    let ring = ring3();
    let m = Ideal::from_strs(&ring, &["x", "y", "z"]).unwrap();
    for e in 1..=4u32 {
        let p = m.power(e).unwrap();
        // every generator is homogeneous of degree e
        for g in &p.gens {
            assert_eq!(g.total_degree(), Some(e as i64));
        }
        // x^e is a member, x^{e-1} is not
        let xe = hbforge::parse(&format!("x^{e}"), &ring).unwrap();
        assert!(p.contains(&xe).unwrap());
        if e > 1 {
            let xe1 = hbforge::parse(&format!("x^{}", e - 1), &ring).unwrap();
            assert!(!p.contains(&xe1).unwrap());
        }
    }
}
