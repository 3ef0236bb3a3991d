//! Laws for Rees-algebra presentations: containment of the symmetric ideal,
//! linear type of regular sequences and of the maximal ideal, fiber data,
//! bidegree bookkeeping, and reduction certificates.

use std::sync::Arc;

use hbforge::groebner::Budget;
use hbforge::rees::{bigraded_min_gens, bidegree, is_reduction, rees_presentation};
use hbforge::ring::{MonomialOrder, PolyRing};
use hbforge::{parse, CoeffField, Ideal};

fn ring3() -> Arc<PolyRing> {
    PolyRing::standard(
        &["x", "y", "z"],
        CoeffField::Prime(32003),
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

fn gens(ring: &Arc<PolyRing>, texts: &[&str]) -> Vec<hbforge::Polynomial> {
    texts.iter().map(|t| parse(t, ring).unwrap()).collect()
}

#[test]
fn symmetric_ideal_sits_inside_the_rees_ideal() {
    let r = ring3();
    let budget = Budget::default();
    for g in [
        vec!["x^2", "x*y", "y^2"],
        vec!["x^2 + y*z", "x*y - z^2"],
        vec!["x", "y", "z"],
    ] {
        let rp = rees_presentation(&gens(&r, &g), &budget).unwrap();
        assert!(
            rp.rees.contains_ideal(&rp.sym).unwrap(),
            "sym not inside rees for {g:?}"
        );
    }
}

#[test]
fn regular_sequences_are_of_linear_type() {
    let r = ring3();
    let budget = Budget::default();
    for g in [
        vec!["x", "y"],
        vec!["x^2 - y*z", "y^2 - x*z"],
        vec!["x", "y", "z"],
        vec!["x^2", "y^2", "z^2"],
    ] {
        let rp = rees_presentation(&gens(&r, &g), &budget).unwrap();
        assert!(rp.is_linear_type().unwrap(), "{g:?} should be linear type");
        // linear type means every minimal bigenerator has fiber degree one
        for ((_, b), _) in bigraded_min_gens(&rp.rees).unwrap() {
            assert_eq!(b, 1, "{g:?}");
        }
    }
}

#[test]
fn maximal_ideal_fiber_is_the_whole_plane() {
    let r = ring3();
    let rp = rees_presentation(&gens(&r, &["x", "y", "z"]), &Budget::default()).unwrap();
    let (fiber, spread, mult) = rp.fiber_and_spread().unwrap();
    assert!(fiber.gens.iter().all(|p| p.is_zero()) || fiber.is_zero());
    assert_eq!(spread, 3);
    assert_eq!(mult, 1);
}

#[test]
fn square_of_maximal_ideal_has_a_veronese_fiber() {
    let r = ring3();
    let m2 = Ideal::from_strs(&r, &["x", "y", "z"])
        .unwrap()
        .power(2)
        .unwrap();
    let rp = rees_presentation(&m2.gens, &Budget::default()).unwrap();
    let (_, spread, mult) = rp.fiber_and_spread().unwrap();
    // the image is the Veronese surface: dimension 3, degree 4
    assert_eq!(spread, 3);
    assert_eq!(mult, 4);
}

#[test]
fn rees_generators_are_bihomogeneous_with_positive_fiber_degree() {
    let r = ring3();
    let rp = rees_presentation(&gens(&r, &["x^2", "x*y", "y^2", "x*z"]), &Budget::default())
        .unwrap();
    for g in rp.rees.gens.iter().filter(|g| !g.is_zero()) {
        let (_, b) = bidegree(g).unwrap();
        assert!(b >= 1, "{g} has fiber degree {b}");
    }
}

#[test]
fn reduction_certificates() {
    let r = ring3();
    // (x^2, y^2) is a reduction of (x^2, xy, y^2) with reduction number 1
    let i = Ideal::from_strs(&r, &["x^2", "x*y", "y^2"]).unwrap();
    let j = Ideal::from_strs(&r, &["x^2", "y^2"]).unwrap();
    let cert = is_reduction(&j, &i, 5).unwrap();
    assert!(cert.holds);
    assert_eq!(cert.r, 1);
    // an ideal is always a reduction of itself with reduction number 0
    let cert = is_reduction(&i, &i, 5).unwrap();
    assert!(cert.holds);
    assert_eq!(cert.r, 0);
    // (x^2, y^2) is not a reduction of the maximal ideal, and a candidate
    // not contained in the ideal is a precondition error
    let m = Ideal::from_strs(&r, &["x", "y", "z"]).unwrap();
    let cert = is_reduction(&j, &m, 4).unwrap();
    assert!(!cert.holds);
    assert!(is_reduction(&m, &j, 4).is_err());
}
