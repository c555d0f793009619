//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//!
//! Runs without the libtest harness so the lines always print.

use std::process::ExitCode;

use cosymplectic::betti::{
    betti_from_horizontal, check_bounds, check_divisibility, check_horizontal_constraints,
    s_k_report, series_product, BettiSequence, HorizontalBettiSequence, PoincareSeries,
};
use cosymplectic::binomial;
use cosymplectic::contact::{Axis, ContactModel, PhiStarTable};
use cosymplectic::cw::{
    build_complex, cross_check, homology_reports,
    invariant_cohomology_oracle, Cell, Coefficients, TwistMap,
};
use cosymplectic::exterior::ModelDims;
use cosymplectic::operators::OperatorAlgebra;
use cosymplectic::so41::verify_module;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const REQUIRED_IDENTITIES: &[&str] = &[
    "anticommutator_lambda_l",
    "anticommutators_vanish",
    "idempotents_e",
    "e_commutes_with_L_Lambda",
    "cube_isomorphisms",
    "lambda_via_hodge_star",
    "L_Lambda_H",
    "L_Lambda_K",
    "H_brackets",
    "so5_closure_table",
    "K_s_recursion",
    "quaternion_relations",
];

fn operator_identities() -> Outcome {
    for n in [1, 2] {
        let reports = OperatorAlgebra::new(n).map_err(|e| e.to_string())?.verify_identities();
        for name in REQUIRED_IDENTITIES {
            ensure(reports.iter().any(|r| r.name == *name), || format!("n = {n}: {name} missing"))?;
        }
        if let Some(r) = reports.iter().find(|r| !r.passed) {
            return Err(format!("n = {n}: {} failed at {:?}", r.name, r.witness));
        }
    }
    Ok(())
}

fn so41_module() -> Outcome {
    let check = verify_module(1).map_err(|e| e.to_string())?;
    ensure(check.passed(), || format!("{:?}", check.reports.iter().find(|r| !r.passed)))?;
    ensure(check.reports.iter().any(|r| r.name == "so41_bracket_table" && r.passed), || {
        "bracket table not checked".into()
    })?;
    ensure(check.summary.pairs.len() == 45, || format!("{} pairs", check.summary.pairs.len()))?;
    ensure(check.summary.pairs.iter().all(|p| p.passed), || "a pair failed".into())?;
    ensure(check.summary.image_rank == 10 && check.summary.span_rank == 10, || {
        format!("ranks {} / {}", check.summary.span_rank, check.summary.image_rank)
    })
}

fn fundamental_form_table() -> Outcome {
    for n in [1, 2] {
        let model = ContactModel::new(n).map_err(|e| e.to_string())?;
        for r in [model.fundamental_form_table_report(), model.building_block_report()] {
            ensure(r.passed, || format!("n = {n}: {} at {:?}", r.name, r.witness))?;
        }
    }
    Ok(())
}

fn s_k_ranks() -> Outcome {
    let (report, ranks) = s_k_report(3);
    ensure(report.passed, || format!("{:?}", report.witness))?;
    ensure(ranks.len() == 10, || format!("{} (n, k) pairs", ranks.len()))?;
    for r in &ranks {
        ensure(r.rank as u64 == binomial(r.k as u64 + 2, 2) && r.leading_blades_distinct, || {
            format!("n = {}, k = {}: rank {}", r.n, r.k, r.rank)
        })?;
    }
    Ok(())
}

fn constraints_hold(b: &BettiSequence, n: usize) -> bool {
    check_divisibility(b).passed() && check_bounds(b, n).passed()
}

fn betti_arithmetic() -> Outcome {
    let torus = betti_from_horizontal(&HorizontalBettiSequence::torus(1));
    let binomials: Vec<u64> = (0..=7).map(|p| binomial(7, p)).collect();
    ensure(torus.values() == binomials && torus.total() == 128, || format!("{:?}", torus.values()))?;

    let k3 = betti_from_horizontal(&HorizontalBettiSequence::new(1, vec![1, 0, 22, 0, 1]).unwrap());
    let expected = series_product(&PoincareSeries::new(vec![1, 0, 22, 0, 1]), &PoincareSeries::new(vec![1, 3, 3, 1]));
    ensure(k3.series() == expected && k3.get(2) == 25, || format!("{:?}", k3.values()))?;

    let valid = [
        (1, vec![1, 4, 6, 4, 1]),
        (1, vec![1, 0, 22, 0, 1]),
        (1, vec![1, 0, 4, 0, 1]),
        (2, HorizontalBettiSequence::torus(2).values().to_vec()),
        (3, HorizontalBettiSequence::torus(3).values().to_vec()),
    ];
    for (n, bh) in valid {
        let h = HorizontalBettiSequence::new(n, bh.clone()).unwrap();
        let b = betti_from_horizontal(&h);
        ensure(constraints_hold(&b, n) && check_horizontal_constraints(&h).passed(), || {
            format!("valid fixture {bh:?} rejected")
        })?;
    }
    // odd horizontal Betti numbers not divisible by 4; S_1 missing from b^h_2
    let controls = [(1, vec![1, 1, 4, 1, 1]), (1, vec![1, 0, 1, 0, 1])];
    for (n, bh) in controls {
        let h = HorizontalBettiSequence::new(n, bh.clone()).unwrap();
        let b = betti_from_horizontal(&h);
        ensure(!constraints_hold(&b, n) && !check_horizontal_constraints(&h).passed(), || {
            format!("negative control {bh:?} accepted")
        })?;
    }
    Ok(())
}

fn twisted_torus_homology() -> Outcome {
    let twist = TwistMap::standard();
    let complex = build_complex(&twist).map_err(|e| e.to_string())?;
    let deg = complex.degree(Cell::new(&[3, 5]).unwrap(), Cell::new(&[3]).unwrap());
    ensure(deg == 1, || format!("degree({{3,5}},{{3}}) = {deg}"))?;
    let q = complex.homology(Coefficients::Rationals).betti();
    let z = complex.homology(Coefficients::Integers).betti();
    ensure(q == z, || format!("{:?} vs {:?}", q.values(), z.values()))?;
    ensure(q.get(2) < 21 && q.get(2) != 25, || format!("b_2 = {}", q.get(2)))?;
    ensure(q.is_palindromic() && q.euler_characteristic() == 0, || format!("{:?}", q.values()))?;
    let oracle = betti_from_horizontal(&invariant_cohomology_oracle());
    ensure(z == oracle, || format!("{:?} vs oracle {:?}", z.values(), oracle.values()))?;
    ensure(z.values() == [1, 3, 7, 13, 13, 7, 3, 1], || format!("{:?}", z.values()))?;
    ensure(cross_check(&complex.homology(Coefficients::Integers)).passed(), || "cross check".into())?;
    let (reports, _) = homology_reports(&twist, Coefficients::Integers);
    match reports.iter().find(|r| !r.passed) {
        Some(r) => Err(format!("{}: {:?}", r.name, r.witness)),
        None => Ok(()),
    }
}

fn negative_controls() -> Outcome {
    let dims = ModelDims::new(1).unwrap();
    let standard = PhiStarTable::standard(dims);
    for axis in Axis::ALL {
        for index in 0..dims.dim() {
            if standard.image(axis, index).is_none() {
                continue;
            }
            let table = standard.clone().with_sign_flip(axis, index);
            let alg = OperatorAlgebra::with_model(ContactModel::with_table(table));
            let reports = alg.verify_identities();
            ensure(reports.iter().any(|r| !r.passed && r.witness.is_some()), || {
                format!("flip of phi*_{axis} at index {index} went unnoticed")
            })?;
        }
    }
    for label in 1..=4 {
        let twist = TwistMap::standard().with_sign_flip(label);
        let (reports, _) = homology_reports(&twist, Coefficients::Rationals);
        ensure(reports.iter().any(|r| !r.passed && r.witness.is_some()), || {
            format!("flip of twist label {label} went unnoticed")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 operator identities, n = 1, 2", operator_identities),
        ("2 so(4,1) module, 45 pairs, image rank 10", so41_module),
        ("3 fundamental form pairings, n = 1, 2", fundamental_form_table),
        ("4 S_k ranks = C(k+2,2), k <= n <= 3", s_k_ranks),
        ("5 Betti arithmetic and constraints", betti_arithmetic),
        ("6 M^7_f homology and oracle cross-check", twisted_torus_homology),
        ("7 negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} of 7 criteria pass", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
