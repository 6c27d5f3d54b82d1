//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tangles::fourplat::UNKNOT;
use tangles::oracle::{fourplat_diagram, goeritz_determinant, jones, Jones, PlanarDiagram, TangleDiagram};
use tangles::rational::gcd;
use tangles::solver::{
    chirality_filter, evaluate_candidate, family_members_where, predict_product, solve_distributive, solve_processive,
    CandidateOutcome, ChiralityObservation, DistributiveSystem, FamilyParams, ProcessiveSolution, ProcessiveSystem,
    ProductConstraint, Rule,
};
use tangles::{
    cf_evaluate, cf_expand, closure_sum, equivalent, schubert_normalize, tangle_to_word, word_to_tangle, CompositeKnot,
    EquivalenceMode, Error, Execution, ExtendedRational, Handedness, RationalTangle, TwoBridgeLink,
};

const PROCESSIVE_BUDGET: Duration = Duration::from_secs(5);
const FAMILY_BUDGET: Duration = Duration::from_secs(5);
const ORACLE_BUDGET: Duration = Duration::from_secs(120);
const FAMILY_RANGE: i64 = 1_000_000;
const ORACLE_FRACTION_BOUND: i64 = 6;
const ORACLE_TWIST_BOUND: i64 = 4;
const ROUND_TRIP_BOUND: i64 = 50;
const AXIOM_P_BOUND: i64 = 30;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn b(p: i64, q: i64) -> TwoBridgeLink {
    TwoBridgeLink::new(p, q, EquivalenceMode::MirrorAgnostic).unwrap()
}

fn t(p: i64, q: i64) -> RationalTangle {
    RationalTangle::from_fraction(p, q).unwrap()
}

fn hin_processive() -> ProcessiveSystem {
    ProcessiveSystem::new(
        vec![
            ProductConstraint::Exact(UNKNOT),
            ProductConstraint::Exact(b(3, 1)),
            ProductConstraint::Exact(b(7, 3)),
            ProductConstraint::CrossingNumber(7),
        ],
        EquivalenceMode::MirrorAgnostic,
    )
    .unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = solve_processive(&hin_processive()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected = vec![
        ProcessiveSolution::new(t(1, 2), RationalTangle::integral(-2)),
        ProcessiveSolution::new(t(-1, 2), RationalTangle::integral(2)),
    ];
    check(report.solutions == expected, format!("solutions {:?}", report.solutions))?;
    let left = ChiralityObservation { round: 1, handedness: Handedness::Left };
    let filtered = chirality_filter(&report.solutions, &left, 4).map_err(|e| e.to_string())?;
    check(
        filtered == vec![ProcessiveSolution::new(t(-1, 2), RationalTangle::integral(2))],
        format!("left-handed filter gave {filtered:?}"),
    )?;
    check(elapsed < PROCESSIVE_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("2 solutions, left filter keeps O=T(-1/2) R=T(2), {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let k = predict_product(&t(-1, 2), &RationalTangle::integral(2), 3, EquivalenceMode::MirrorAgnostic)
        .map_err(|e| e.to_string())?;
    check(equivalent(&k, &b(11, 5), EquivalenceMode::MirrorAgnostic), format!("predicted {k}"))?;
    Ok(format!("N(O+3R) = {k}"))
}

fn rejected(o: RationalTangle, r: i64) -> Result<(usize, TwoBridgeLink), String> {
    match evaluate_candidate(&hin_processive(), &o, &RationalTangle::integral(r)).map_err(|e| e.to_string())? {
        CandidateOutcome::Rejected { round, product, verdict, .. } => {
            check(verdict.rule == Rule::ProductMismatch, format!("rule {}", verdict.rule))?;
            Ok((round, product))
        }
        CandidateOutcome::Accepted => Err(format!("O={o} R=T({r}) was accepted")),
    }
}

fn criterion_3() -> Outcome {
    let (round, product) = rejected(t(1, -4), 1)?;
    check(round == 3, format!("r=1 v=-4 rejected at round {round}"))?;
    check(equivalent(&product, &b(11, 3), EquivalenceMode::MirrorAgnostic), format!("product {product}"))?;
    check(equivalent(&product, &b(11, 4), EquivalenceMode::MirrorAgnostic), format!("product {product}"))?;
    check(product.crossing_number() == 6, "not a 6-crossing knot")?;
    let (round2, product2) = rejected(t(1, -1), 4)?;
    check(round2 == 2, format!("r=4 v=-1 rejected at round {round2}"))?;
    check(equivalent(&product2, &b(7, 1), EquivalenceMode::MirrorAgnostic), format!("product {product2}"))?;
    check(equivalent(&b(7, 8), &b(7, 1), EquivalenceMode::MirrorAgnostic), "b(7,8) vs b(7,1)")?;
    Ok(format!("(r=1,v=-4) fails at round 3 with {product}; (r=4,v=-1) fails at round 2 with {product2}"))
}

fn criterion_4() -> Outcome {
    let product = CompositeKnot::new(vec![b(3, 1), b(3, 1)]).unwrap();
    let sys = DistributiveSystem::new(
        b(3, 1),
        product,
        RationalTangle::ZERO,
        RationalTangle::integral(2),
        EquivalenceMode::MirrorAgnostic,
    )
    .map_err(|e| e.to_string())?;
    let set = solve_distributive(&sys).map_err(|e| e.to_string())?;
    check(set.rational.solutions.is_empty(), "rational bucket not empty")?;
    check(set.prime.montesinos.is_empty() && !set.prime.non_montesinos_unresolved, "prime bucket not empty")?;
    check(set.prime.verdict.rule == Rule::DistanceExclusion, format!("prime verdict {}", set.prime.verdict))?;
    check(set.locally_knotted.solutions.len() == 4, format!("{} locally knotted", set.locally_knotted.solutions.len()))?;
    let mut cores: Vec<RationalTangle> = set.locally_knotted.solutions.iter().map(|s| s.core).collect();
    cores.dedup();
    check(cores == vec![t(1, 1), t(-1, 2)], format!("cores {cores:?}"))?;
    Ok(format!("rational 0, prime 0 ({}), locally knotted 4 over cores 1/1, -1/2", set.prime.verdict.rule))
}

fn criterion_5() -> Outcome {
    let params = FamilyParams::new(3, 1, 3, 1).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let hits = family_members_where(
        params,
        -FAMILY_RANGE..=FAMILY_RANGE,
        EquivalenceMode::MirrorAgnostic,
        Execution::default(),
        |x| x.p == 3,
    )
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(hits.is_empty(), format!("p = 3 at m = {:?}", hits.iter().map(|x| x.m).collect::<Vec<_>>()))?;
    check(params.solve_signed(3).is_none(), "9m = -3 solved")?;
    check(elapsed < FAMILY_BUDGET, format!("took {elapsed:?}"))?;
    let trefoil = params.member(-1, EquivalenceMode::MirrorAgnostic).map_err(|e| e.to_string())?;
    Ok(format!(
        "no m in [-{FAMILY_RANGE}, {FAMILY_RANGE}] gives p = 3, {elapsed:.2?}; note m = -1 gives p = {} and {}",
        trefoil.p, trefoil.link
    ))
}

/// Minimal-crossing 4-plat diagram of `k`'s chiral class, found by brute force.
fn canonical_diagram(k: &TwoBridgeLink) -> PlanarDiagram {
    let p = k.p();
    if p <= 1 {
        return fourplat_diagram(p, 1);
    }
    let q = k.q().rem_euclid(p);
    let inv = (1..p).find(|x| x * q % p == 1).unwrap();
    let weight = |q: i64| {
        let (mut a, mut b, mut s) = (p, q.abs(), 0);
        while b != 0 {
            s += a / b;
            (a, b) = (b, a % b);
        }
        s
    };
    let best = [q, q - p, inv, inv - p].into_iter().min_by_key(|&x| (weight(x), x)).unwrap();
    fourplat_diagram(p, best)
}

fn jones_match(a: &Jones, b: &Jones, knot: bool) -> bool {
    if knot {
        return a == b;
    }
    // reversing one component of a 2-component link multiplies V by a power of t
    match (a.0.min_exp(), b.0.min_exp()) {
        (Some(x), Some(y)) => b.0.shift(1, x - y) == a.0,
        (None, None) => true,
        _ => false,
    }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for a in -ORACLE_FRACTION_BOUND..=ORACLE_FRACTION_BOUND {
        for den in 0..=ORACLE_FRACTION_BOUND {
            if gcd(a, den) != 1 || (den == 0 && a != 1) {
                continue;
            }
            for m in -ORACLE_TWIST_BOUND..=ORACLE_TWIST_BOUND {
                cases += 1;
                let diagram = TangleDiagram::rational(a, den).sum(&TangleDiagram::rational(m, 1)).numerator();
                let v = jones(&diagram).map_err(|e| e.to_string())?;
                let det = match goeritz_determinant(&diagram) {
                    Ok(d) => d,
                    Err(Error::DisconnectedDiagram) => 0,
                    Err(e) => return Err(e.to_string()),
                };
                for mode in [EquivalenceMode::Chiral, EquivalenceMode::MirrorAgnostic] {
                    let k = closure_sum(&t(a, den), &RationalTangle::integral(m), mode).map_err(|e| e.to_string())?;
                    let reference = jones(&canonical_diagram(&k)).map_err(|e| e.to_string())?;
                    let knot = k.is_knot();
                    let ok = match mode {
                        EquivalenceMode::Chiral => jones_match(&v, &reference, knot),
                        EquivalenceMode::MirrorAgnostic => {
                            jones_match(&v, &reference, knot)
                                || jones_match(&v, &Jones(reference.0.invert_variable()), knot)
                        }
                    };
                    if !ok {
                        mismatches.push(format!("N(T({a}/{den})+T({m})) vs {k} [{mode}]"));
                    }
                    if det != k.p() as u64 {
                        mismatches.push(format!("N(T({a}/{den})+T({m})): det {det} vs {k}"));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(mismatches.is_empty(), format!("{} mismatches, first: {}", mismatches.len(), mismatches[..].first().cloned().unwrap_or_default()))?;
    check(elapsed < ORACLE_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("{cases} sums, 0 mismatches in Jones or determinant, {elapsed:.2?}"))
}

fn criterion_7() -> Outcome {
    let mut round_trips = 0;
    for p in -ROUND_TRIP_BOUND..=ROUND_TRIP_BOUND {
        for q in -ROUND_TRIP_BOUND..=ROUND_TRIP_BOUND {
            if gcd(p, q) != 1 {
                continue;
            }
            let x = ExtendedRational::new(p, q).map_err(|e| e.to_string())?;
            check(cf_evaluate(&cf_expand(x)) == x, format!("cf round trip fails at {p}/{q}"))?;
            let tangle = RationalTangle::new(x);
            let back = word_to_tangle(&tangle_to_word(&tangle)).map_err(|e| e.to_string())?;
            check(back == tangle, format!("word round trip fails at {p}/{q}"))?;
            round_trips += 1;
        }
    }
    let mut pairs = 0;
    for mode in [EquivalenceMode::Chiral, EquivalenceMode::MirrorAgnostic] {
        for p in 0..=AXIOM_P_BOUND {
            let qs: Vec<i64> = (-p.max(1)..=p.max(1)).filter(|&q| gcd(p, q) == 1).collect();
            let defined = |q1: i64, q2: i64| {
                if p <= 1 {
                    return true;
                }
                let (a, c) = (q1.rem_euclid(p), q2.rem_euclid(p));
                let signs: &[i64] = if mode.is_mirror_agnostic() { &[1, -1] } else { &[1] };
                signs
                    .iter()
                    .any(|&s| (s * a - c).rem_euclid(p) == 0 || (s * a * c - 1).rem_euclid(p) == 0)
            };
            let links: Vec<TwoBridgeLink> = qs
                .iter()
                .map(|&q| TwoBridgeLink::new(p, q, mode))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for (i, x) in links.iter().enumerate() {
                let again = schubert_normalize(x.p(), x.q(), mode).map_err(|e| e.to_string())?;
                check(again == *x, format!("normalize not idempotent at {x}"))?;
                check(equivalent(x, x, mode), format!("{x} not reflexive"))?;
                for (j, y) in links.iter().enumerate() {
                    pairs += 1;
                    let e = equivalent(x, y, mode);
                    check(e == equivalent(y, x, mode), format!("symmetry fails at {x} {y}"))?;
                    check(e == defined(qs[i], qs[j]), format!("b({p},{}) ~ b({p},{}) disagrees [{mode}]", qs[i], qs[j]))?;
                    if e {
                        for z in &links {
                            if equivalent(y, z, mode) {
                                check(equivalent(x, z, mode), format!("transitivity fails at {x} {y} {z}"))?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{round_trips} round trips, {pairs} Schubert pairs checked in both modes"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("processive Hin system and chirality filter", criterion_1),
        ("prediction N(O+3R) ~ b(11,5)", criterion_2),
        ("rejection replay", criterion_3),
        ("distributive Hin system", criterion_4),
        ("Montesinos distance-one family avoids p = 3", criterion_5),
        ("oracle equivalence suite", criterion_6),
        ("Conway round trip and Schubert axioms", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
