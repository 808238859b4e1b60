//! Acceptance run: one PASS/FAIL line per criterion, then a determinism
//! check that reruns criteria 2 to 8 and compares their JSON reports.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use intdef::definitions::{
    check_hypotheses, classify, decide_integer_semantic, geometric_suite, is_integer_constant, definability_environment,
    pow_characterization_check, telescoping_suite, A_SET,
};
use intdef::divisibility::{compose, divide_exact, Side};
use intdef::enumerate::{coefficient_values, enumerate_fragment, CoefficientRange, FragmentSpec};
use intdef::formula::{cross_check_set, Verdict};
use intdef::numeric::GaussianRational;
use intdef::parse::{parse_element, parse_scalar};
use intdef::ring::{CoefficientDomain, QPlaneElement, Ring, RingElement};

const Q_VALUES: [&str; 4] = ["2", "1/3", "i", "-1"];

struct Outcome {
    pass: bool,
    detail: String,
    report: Value,
}

fn qplane(q: &str) -> Ring {
    Ring::quantum_plane(parse_scalar(q).unwrap()).unwrap()
}

fn el(ring: &Ring, s: &str) -> RingElement {
    parse_element(s, ring).unwrap()
}

/// ℤ[x], ℚ[x], ℚ(i)[x] and the quantum plane for each test value of q.
fn all_rings() -> Vec<Ring> {
    let mut rings = vec![Ring::int_poly(), Ring::rat_poly(), Ring::gauss_poly()];
    rings.extend(Q_VALUES.iter().map(|q| qplane(q)));
    rings
}

fn criterion_1() -> Outcome {
    let r = qplane("2");
    let (a, b) = (el(&r, "3+x"), el(&r, "2+y"));
    let ab = a.mul(&b).unwrap().to_string();
    let ba = b.mul(&a).unwrap().to_string();
    let pass = ab == "x*y + 2*x + 3*y + 6" && ba == "2*x*y + 2*x + 3*y + 6";
    Outcome { pass, detail: format!("(3+x)(2+y) = {ab}; (2+y)(3+x) = {ba}"), report: json!({"ab": ab, "ba": ba}) }
}

fn criterion_2() -> Outcome {
    let mut suites = Vec::new();
    let mut pass = true;
    for r in all_rings() {
        let out = geometric_suite(&r, 32).unwrap();
        pass &= out.holds() && out.checked == 32;
        suites.push(json!({"ring": r.to_string(), "outcome": out}));
    }
    Outcome { pass, detail: format!("n <= 32, both sides, {} rings", suites.len()), report: Value::Array(suites) }
}

fn criterion_3() -> Outcome {
    let mut suites = Vec::new();
    let mut pass = true;
    for (k, r) in all_rings().into_iter().enumerate() {
        let spec = if r.is_commutative() {
            FragmentSpec::degree(&r, 3, 3).unwrap()
        } else {
            FragmentSpec::bidegree(&r, 2, 2, 3).unwrap().with_range(CoefficientRange::GaussianIntegers)
        };
        let out = telescoping_suite(&spec, 16, 200, 0x7e1e + k as u64).unwrap();
        pass &= out.holds() && out.checked == 15 * 200;
        suites.push(json!({"ring": r.to_string(), "fragment": spec, "outcome": out}));
    }
    Outcome { pass, detail: format!("2 <= n <= 16, 200 sampled t, {} rings", suites.len()), report: Value::Array(suites) }
}

fn criterion_4() -> Outcome {
    let mut reports = Vec::new();
    let mut pass = true;
    let q2 = qplane("2");
    let specs = [
        FragmentSpec::degree(&Ring::int_poly(), 2, 2).unwrap(),
        FragmentSpec::degree(&Ring::rat_poly(), 2, 2).unwrap(),
        FragmentSpec::degree(&Ring::gauss_poly(), 2, 2).unwrap(),
        FragmentSpec::bidegree(&q2, 2, 2, 2).unwrap().with_range(CoefficientRange::Integers),
    ];
    for spec in &specs {
        let r = spec.ring();
        let env = definability_environment(r, &r.x()).unwrap();
        let rep = check_hypotheses(&env, &r.x(), A_SET, spec, 16).unwrap();
        pass &= rep.all_hold();
        reports.push(json!({"fragment": spec, "report": rep}));
    }
    let z = Ring::int_poly();
    let two = el(&z, "2");
    let env = definability_environment(&z, &two).unwrap();
    let degenerate = FragmentSpec::degree(&z, 0, 2).unwrap();
    let rep = check_hypotheses(&env, &two, A_SET, &degenerate, 16).unwrap();
    let violated = rep.a_annihilation.is_violated();
    pass &= violated;
    reports.push(json!({"fragment": degenerate, "p": "2", "report": rep}));
    Outcome {
        pass,
        detail: format!("all hold in 4 rings; degenerate p = 2 violates annihilation: {violated}"),
        report: Value::Array(reports),
    }
}

fn criterion_5() -> Outcome {
    let r = Ring::rat_poly();
    let spec = FragmentSpec::degree(&r, 2, 3).unwrap();
    let env = definability_environment(&r, &r.x()).unwrap();
    let (mut natural_bad, mut integer_bad, mut formula_bad, mut total) = (0u64, 0u64, 0u64, 0u64);
    let mut first_bad = Vec::new();
    let mut verdicts = [0u64; 3];
    for t in enumerate_fragment(&spec).unwrap().iter() {
        total += 1;
        let rec = classify(&env, &t, 8).unwrap();
        let value = t.integer_value();
        let in_range = |lo: i64| value.as_ref().map_or(false, |v| *v >= lo.into() && *v <= 8.into());
        let nat_bad = rec.natural.member != in_range(0);
        let int_bad = decide_integer_semantic(&t, 8).unwrap().member != in_range(-8);
        let f_bad = match &rec.formula {
            Verdict::ProvenTrue(_) => !rec.natural.member,
            Verdict::ProvenFalse(_) => rec.natural.member,
            Verdict::UnknownUpTo(_) => false,
        };
        verdicts[match rec.formula {
            Verdict::ProvenTrue(_) => 0,
            Verdict::ProvenFalse(_) => 1,
            Verdict::UnknownUpTo(_) => 2,
        }] += 1;
        natural_bad += nat_bad as u64;
        integer_bad += int_bad as u64;
        formula_bad += f_bad as u64;
        if (nat_bad || int_bad || f_bad) && first_bad.len() < 5 {
            first_bad.push(t.to_string());
        }
        debug_assert!(!is_integer_constant(&t) || value.is_some());
    }
    let pass = natural_bad + integer_bad + formula_bad == 0 && total == 15625;
    Outcome {
        pass,
        detail: format!(
            "{total} elements; disagreements natural {natural_bad}, integer {integer_bad}, formula {formula_bad}; formula true/false/unknown {}/{}/{}",
            verdicts[0], verdicts[1], verdicts[2]
        ),
        report: json!({
            "fragment": spec, "bound": 8, "elements": total,
            "natural_disagreements": natural_bad, "integer_disagreements": integer_bad,
            "formula_contradictions": formula_bad, "formula_verdicts": verdicts, "first_disagreements": first_bad,
        }),
    }
}

fn random_qplane(rng: &mut ChaCha8Rng, values: &[GaussianRational]) -> QPlaneElement {
    let (dx, dy) = (rng.gen_range(0..=3u32), rng.gen_range(0..=3u32));
    let mut terms = Vec::new();
    for a in 0..=dx {
        for b in 0..=dy {
            if rng.gen_bool(0.5) {
                terms.push((a, b, values[rng.gen_range(0..values.len())].clone()));
            }
        }
    }
    QPlaneElement::from_terms(terms)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let values = coefficient_values(CoefficientDomain::GaussianRational, CoefficientRange::Domain, 3);
    let rings: Vec<Ring> = Q_VALUES.iter().map(|q| qplane(q)).collect();
    let (mut pairs, mut failures, mut unit_divisors) = (0u64, Vec::new(), 0u64);
    while pairs < 500 {
        let r = &rings[pairs as usize % rings.len()];
        let q = r.q().unwrap().clone();
        let f = random_qplane(&mut rng, &values);
        if f.is_zero() {
            continue;
        }
        let h = random_qplane(&mut rng, &values);
        pairs += 1;
        let (fe, he) = (r.qplane_from_terms(f.terms().map(|((a, b), c)| (a, b, c.clone()))).unwrap(),
            r.qplane_from_terms(h.terms().map(|((a, b), c)| (a, b, c.clone()))).unwrap());
        let f_is_unit = fe.is_constant();
        unit_divisors += f_is_unit as u64;
        for side in [Side::Left, Side::Right] {
            let left = side == Side::Left;
            let g = compose(&fe, &he, side).unwrap();
            let got = divide_exact(&g, &fe, side).unwrap().quotient;
            if got.as_ref() != Some(&he) {
                failures.push(format!("{side:?}: f = {fe}, h = {he}, got {got:?}"));
            }
            let g1 = g.add(&r.one()).unwrap();
            let got1 = divide_exact(&g1, &fe, side).unwrap().quotient;
            let oracle = common::qplane_long_division(g1.as_qplane().unwrap(), &f, &q, left);
            let got1_terms = got1.as_ref().map(|e| e.as_qplane().unwrap().clone());
            if got1_terms != oracle || got1.is_some() != f_is_unit {
                failures.push(format!("{side:?}: f = {fe}, g+1 = {g1}, got {got1:?}"));
            }
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!("{pairs} pairs x 2 sides, {unit_divisors} constant divisors, {} failures", failures.len()),
        report: json!({"pairs": pairs, "constant_divisors": unit_divisors, "failures": failures}),
    }
}

fn criterion_7() -> Outcome {
    let r = Ring::int_poly();
    let spec = FragmentSpec::degree(&r, 3, 2).unwrap();
    let divisors = FragmentSpec::degree(&r, 4, 3).unwrap();
    let rep = pow_characterization_check(&spec, &divisors).unwrap();
    let pass = rep.sound() && rep.powers == 3 && rep.checked == 625;
    Outcome {
        pass,
        detail: format!(
            "{} elements, {} powers never refuted; ProvenFalse coverage on non-powers {}/{} = {:.3}; unknown {}",
            rep.checked,
            rep.powers,
            rep.proven_false_on_non_powers,
            rep.non_powers,
            rep.coverage(),
            rep.unknown_on_non_powers
        ),
        report: json!({"fragment": spec, "divisors": divisors, "report": rep}),
    }
}

fn criterion_8() -> Outcome {
    let specs = [
        FragmentSpec::degree(&Ring::rat_poly(), 2, 3).unwrap(),
        FragmentSpec::degree(&Ring::gauss_poly(), 2, 3).unwrap().with_range(CoefficientRange::GaussianIntegers),
        FragmentSpec::degree(&Ring::gauss_poly(), 1, 2).unwrap(),
    ];
    let mut pass = true;
    let mut reports = Vec::new();
    let mut total = 0;
    let mut disagreements = 0;
    for spec in &specs {
        let r = spec.ring();
        let env = definability_environment(r, &r.x()).unwrap();
        let cc = cross_check_set(&env, A_SET, spec).unwrap();
        pass &= cc.agrees();
        disagreements += usize::from(!cc.agrees());
        total += cc.checked;
        reports.push(json!({
            "fragment": spec, "checked": cc.checked,
            "disagreement": cc.disagreement.map(|(z, member, v)| json!({"element": z, "member": member, "verdict": v})),
        }));
    }
    Outcome { pass, detail: format!("{total} elements over Q[x] and Q(i)[x], fragments with a disagreement: {disagreements}"), report: Value::Array(reports) }
}

type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "quantum-plane worked products", Duration::from_millis(1), criterion_1),
        (2, "geometric identity", Duration::from_secs(5), criterion_2),
        (3, "telescoping identity", Duration::from_secs(30), criterion_3),
        (4, "hypotheses", Duration::from_secs(60), criterion_4),
        (5, "classification", Duration::from_secs(60), criterion_5),
        (6, "quantum-plane division round trip", Duration::from_secs(60), criterion_6),
        (7, "power-set formula soundness", Duration::from_secs(60), criterion_7),
        (8, "field-case constants formula", Duration::from_secs(10), criterion_8),
    ];
    let mut all_pass = true;
    let mut first_reports = Vec::new();
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed < budget;
        all_pass &= pass;
        println!(
            "criterion {n} ({name}): {} in {:.3?} (budget {budget:?}): {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            out.detail
        );
        if n >= 2 {
            first_reports.push(serde_json::to_string(&out.report).unwrap());
        }
    }

    let start = Instant::now();
    let mismatched: Vec<u32> = criteria[1..]
        .iter()
        .zip(&first_reports)
        .filter(|((_, _, _, run), first)| serde_json::to_string(&run().report).unwrap() != **first)
        .map(|((n, ..), _)| *n)
        .collect();
    let pass = mismatched.is_empty();
    all_pass &= pass;
    println!(
        "criterion 9 (determinism): {} in {:.3?}: reports of criteria 2-8 {}",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed(),
        if pass { "byte-identical on rerun".to_string() } else { format!("differ for {mismatched:?}") }
    );

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
