//! End-to-end acceptance gate: one PASS/FAIL line per criterion.
//! Every check is exact; a single mismatched fact fails the criterion.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hbforge::groebner::{divide_track, Budget};
use hbforge::ideal::{monomials_of_degree, Ideal};
use hbforge::matrix::PolyMatrix;
use hbforge::rees::rees_presentation;
use hbforge::resolution::resolve_quotient;
use hbforge::ring::{MonomialOrder, PolyRing};
use hbforge::verify::{
    main_reduction_facts, resofj_facts, run_example, sector2_survey, tight_betti_facts,
    zaq_conclusion, Fact,
};
use hbforge::{CoeffField, Polynomial};

fn criterion(name: &str, facts: &[Fact]) {
    let ok = !facts.is_empty() && facts.iter().all(|f| f.pass);
    if ok {
        println!("[PASS] {name}");
        return;
    }
    println!("[FAIL] {name}");
    for f in facts.iter().filter(|f| !f.pass) {
        println!(
            "       {}: computed {}, expected {}",
            f.name, f.computed, f.expected
        );
    }
    panic!("acceptance criterion failed: {name}");
}

fn report_facts(id: &str) -> Vec<Fact> {
    run_example(id).expect("registry entry errored").facts
}

fn r3() -> Arc<PolyRing> {
    PolyRing::standard(
        &["x", "y", "z"],
        CoeffField::Prime(32003),
        MonomialOrder::Grevlex,
    )
    .unwrap()
}

fn random_form(ring: &Arc<PolyRing>, deg: u16, rng: &mut ChaCha8Rng) -> Polynomial {
    let terms = monomials_of_degree(ring.vars.len(), deg)
        .into_iter()
        .map(|e| {
            (
                e,
                ring.field.from_i64(rng.random_range(0..32003u64) as i64),
            )
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

#[test]
fn c01_quartic_parametrization_suite() {
    criterion(
        "1: quartic shape: Rees bidegrees, Sylvester form, colon identity, non-CM, non-linear-type",
        &report_facts("deg4"),
    );
}

#[test]
fn c02_sextic_sylvester_suite() {
    criterion(
        "2: sextic shape: both Sylvester forms reproduced and inside the Rees ideal",
        &report_facts("degree6"),
    );
}

#[test]
fn c03_monoid_column_family() {
    criterion(
        "3: monoid-column shapes d = 3, 4: generator bidegree ladders and CM threshold",
        &report_facts("deJonq-d3"),
    );
}

#[test]
fn c04_content_pair_family() {
    let r = r3();
    let mut facts = Vec::new();
    // (m, n, eps, seed): include m > n and m = n instances
    for (m, n, eps, seed) in [
        (2u16, 1u16, 1i64, 11u64),
        (3, 2, 1, 5),
        (3, 1, 2, 13),
        (2, 2, 1, 7),
        (3, 3, 1, 3),
    ] {
        let label = format!("m={m} n={n} eps={eps} seed={seed}");
        zaq_conclusion(&mut facts, &label, &r, m, n, eps, seed).expect("instance errored");
    }
    criterion(
        "4: content-pair shapes: Rees = (f, g, h), h of bidegree (eps, 2), Rees CM (5 instances)",
        &facts,
    );
}

#[test]
fn c05_tight_betti_tables() {
    let mut facts = Vec::new();
    for (s, h) in [(3i64, 0i64), (3, 2), (4, 1), (4, 3), (5, 3)] {
        tight_betti_facts(&mut facts, s, h, 1).expect("tight search errored");
    }
    criterion(
        "5: tight configurations (s,h) in {(3,0),(3,2),(4,1),(4,3),(5,3)}: Betti tables and regularity",
        &facts,
    );
}

#[test]
fn c06_fixed_minor_resolutions() {
    let r = r3();
    let mut facts = Vec::new();
    for (n, a) in [(5usize, 3usize), (6, 3)] {
        for seed in 1..=5u64 {
            resofj_facts(&mut facts, &r, n, a, seed).expect("instance errored");
        }
    }
    criterion(
        "6: ten random linear shapes (n,a) in {(5,3),(6,3)}: R/J Betti numbers and acyclic complexes",
        &facts,
    );
}

#[test]
fn c07_reduction_and_linear_type() {
    let r = r3();
    let mut facts = Vec::new();
    for seed in [31u64, 32, 33] {
        main_reduction_facts(&mut facts, &r, seed).expect("instance errored");
    }
    criterion(
        "7: random linear shapes n=5, a=3: J reduces I with r <= 2; linear type iff G_3",
        &facts,
    );
}

#[test]
fn c08_arrangement_gradients() {
    criterion(
        "8: gradient ideals of generic arrangements (3,4) and (3,5) of linear type, 5 seeds each",
        &report_facts("arrangement-3-4"),
    );
}

#[test]
fn c09_non_uniform_configuration() {
    criterion(
        "9: pinned 18-point configuration: tight, dim R_1 I_5 = 9, 4 collinear, J saturated != I",
        &report_facts("non-uniform"),
    );
}

#[test]
fn c10_boundary_audit() {
    let mut facts = Vec::new();
    sector2_survey(&mut facts, 20).expect("survey errored");
    criterion(
        "10: s=5 boundary audit: all consequences asserted whenever the height condition holds (20 seeds)",
        &facts,
    );
}

#[test]
fn c11_oracle_suites() {
    let r = r3();
    let budget = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(424242);
    let mut facts = Vec::new();
    let mut push = |name: &str, ok: bool| {
        facts.push(Fact {
            name: name.into(),
            expected: "true".into(),
            computed: ok.to_string(),
            pass: ok,
        });
    };

    // Hilbert functions: series expansion of the lead-term numerator against
    // Macaulay-matrix ranks of the actual generators, degree by degree.
    let binom2 = |t: i64| if t < 0 { 0 } else { (t + 2) * (t + 1) / 2 };
    let mut hilbert_ok = true;
    for _ in 0..50 {
        let k = rng.random_range(2..=3usize);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let d = rng.random_range(2..=4u16);
                random_form(&r, d, &mut rng)
            })
            .collect();
        let ideal = Ideal::new(gens, budget).unwrap();
        let numerator = ideal.hilbert().unwrap().numerator;
        for t in 0..=8i64 {
            let from_series: i64 = numerator
                .iter()
                .enumerate()
                .map(|(k, c)| c * binom2(t - k as i64))
                .sum();
            let from_ranks = binom2(t) - ideal.graded_piece(t).unwrap().0 as i64;
            if from_series != from_ranks {
                hilbert_ok = false;
            }
        }
    }
    push("Groebner vs Macaulay-rank Hilbert functions on 50 random ideals", hilbert_ok);

    // Dual Rees routes: the presentation builder runs tag-variable elimination
    // and torsion saturation side by side and errors on any disagreement.
    let mut rees_ok = true;
    for _ in 0..8 {
        let entries: Vec<Vec<Polynomial>> = (0..3)
            .map(|_| {
                vec![
                    random_form(&r, 1, &mut rng),
                    random_form(&r, 2, &mut rng),
                ]
            })
            .collect();
        let phi = PolyMatrix::new(&r, entries).unwrap();
        let gens = hbforge::matrix::signed_maximal_minors(&phi).unwrap();
        if rees_presentation(&gens, &budget).is_err() {
            rees_ok = false;
        }
    }
    push("dual Rees algorithms agree on 8 random determinantal ideals", rees_ok);

    // Complex and numerator identities on every resolution produced here.
    let mut res_ok = true;
    for _ in 0..20 {
        let k = rng.random_range(2..=3usize);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| random_form(&r, rng.random_range(2..=3u16), &mut rng))
            .collect();
        let ideal = Ideal::new(gens, budget).unwrap();
        let (res, betti) = resolve_quotient(&ideal).unwrap();
        if !res.check_complex().unwrap() {
            res_ok = false;
        }
        // alternating Betti sum equals the independently computed numerator
        let mut from_res = res.hilbert_numerator();
        let mut from_gb = ideal.hilbert().unwrap().numerator;
        while from_res.last() == Some(&0) {
            from_res.pop();
        }
        while from_gb.last() == Some(&0) {
            from_gb.pop();
        }
        if from_res != from_gb {
            res_ok = false;
        }
        let from_betti: i64 = betti
            .entries
            .iter()
            .map(|((i, _), b)| if i % 2 == 0 { *b as i64 } else { -(*b as i64) })
            .sum();
        let total: i64 = from_gb.iter().sum();
        if from_betti != total {
            res_ok = false;
        }
    }
    push("d^2 = 0 and Betti/Hilbert alternating-sum identities on 20 resolutions", res_ok);

    criterion("11: oracle suites: Hilbert ranks, dual Rees routes, resolution identities", &facts);
}

#[test]
fn c12_kernel_property_tests() {
    let r = r3();
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut facts = Vec::new();
    let mut push = |name: &str, ok: bool| {
        facts.push(Fact {
            name: name.into(),
            expected: "true".into(),
            computed: ok.to_string(),
            pass: ok,
        });
    };

    // division identity p = sum q_i d_i + r with a fully reduced remainder
    let mut division_ok = true;
    for _ in 0..500 {
        let p = random_form(&r, rng.random_range(1..=5u16), &mut rng);
        let k = rng.random_range(1..=3usize);
        let divisors: Vec<Polynomial> = (0..k)
            .map(|_| random_form(&r, rng.random_range(1..=3u16), &mut rng))
            .collect();
        let (q, rem) = divide_track(&p, &divisors).unwrap();
        let mut acc = rem.clone();
        for (qi, di) in q.iter().zip(&divisors) {
            acc = acc.add(&qi.mul(di).unwrap()).unwrap();
        }
        if acc.sub(&p).unwrap() != Polynomial::zero(&r) {
            division_ok = false;
        }
        let leads: Vec<_> = divisors
            .iter()
            .filter_map(|d| d.lead_monomial().cloned())
            .collect();
        for (e, _) in &rem.terms {
            for lead in &leads {
                if lead.iter().zip(e.iter()).all(|(l, t)| l <= t) {
                    division_ok = false;
                }
            }
        }
    }
    push("division identity with reduced remainder on 500 instances", division_ok);

    // the reduced basis is independent of the order of the input generators
    let mut unique_ok = true;
    for _ in 0..30 {
        let k = rng.random_range(2..=4usize);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| random_form(&r, rng.random_range(1..=3u16), &mut rng))
            .collect();
        let mut permuted = gens.clone();
        permuted.reverse();
        permuted.rotate_left(1);
        let sorted_basis = |gs: &[Polynomial]| -> Vec<String> {
            let ideal = Ideal::new(gs.to_vec(), Budget::default()).unwrap();
            let gb = ideal.gb().unwrap();
            let mut out: Vec<String> = gb.basis.iter().map(|p| p.normalized().to_string()).collect();
            out.sort();
            out
        };
        if sorted_basis(&gens) != sorted_basis(&permuted) {
            unique_ok = false;
        }
    }
    push("reduced basis invariant under generator permutation on 30 ideals", unique_ok);

    // every S-pair of a finished basis reduces to zero
    let mut spair_ok = true;
    for _ in 0..50 {
        let k = rng.random_range(2..=3usize);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| random_form(&r, rng.random_range(1..=3u16), &mut rng))
            .collect();
        let ideal = Ideal::new(gens, Budget::default()).unwrap();
        if !ideal.gb().unwrap().check_spairs().unwrap() {
            spair_ok = false;
        }
    }
    push("S-pair post-check on 50 finished bases", spair_ok);

    criterion("12: kernel properties: division identity, basis uniqueness, S-pair closure", &facts);
}
