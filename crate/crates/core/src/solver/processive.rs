//! Processive systems `N(O + i·R) = Kᵢ` for `i = 0..=m`, with `P = T(0)`.

use std::fmt;

use serde::Serialize;

use super::verdict::{Rule, Verdict};
use crate::error::{Error, Result};
use crate::exec::{flat_map_range, Execution};
use crate::fourplat::{closure_rational, equivalent, handed, EquivalenceMode, Handedness, TwoBridgeLink};
use crate::rational::gcd;
use crate::tangle::{repeated_add, RationalTangle};

/// What is known about one product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductConstraint {
    Exact(TwoBridgeLink),
    /// Only the crossing number of a 4-plat product is known.
    CrossingNumber(u64),
}

impl ProductConstraint {
    pub fn matches(&self, k: &TwoBridgeLink, mode: EquivalenceMode) -> bool {
        match self {
            ProductConstraint::Exact(expected) => equivalent(k, expected, mode),
            ProductConstraint::CrossingNumber(c) => k.crossing_number() == *c,
        }
    }

    fn crossing_number(&self) -> u64 {
        match self {
            ProductConstraint::Exact(k) => k.crossing_number(),
            ProductConstraint::CrossingNumber(c) => *c,
        }
    }
}

impl fmt::Display for ProductConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductConstraint::Exact(k) => write!(f, "{k}"),
            ProductConstraint::CrossingNumber(c) => write!(f, "{c}-crossing"),
        }
    }
}

/// Inclusive bounds on `|u|`, `|v|` for `O = T(u/v)` and on `|r|` for `R = T(r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub uv: i64,
    pub r: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { uv: 64, r: 32 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProcessiveSystem {
    products: Vec<ProductConstraint>,
    mode: EquivalenceMode,
    bounds: SearchBounds,
}

impl ProcessiveSystem {
    /// Products `K₀, …, K_m` with `m ≥ 2`. `K₀` must be the unknot and only
    /// the last product may be a bare crossing-number constraint.
    pub fn new(products: Vec<ProductConstraint>, mode: EquivalenceMode) -> Result<Self> {
        if products.is_empty() {
            return Err(Error::InvalidSystem("no products".into()));
        }
        if products.len() < 3 {
            return Err(Error::InvalidSystem(format!(
                "need at least three products K0..K2, got {}",
                products.len()
            )));
        }
        match products[0] {
            ProductConstraint::Exact(k) if k.is_unknot() => {}
            other => return Err(Error::InvalidSystem(format!("K0 must be the unknot b(1,1), got {other}"))),
        }
        if products[..products.len() - 1]
            .iter()
            .any(|c| matches!(c, ProductConstraint::CrossingNumber(_)))
        {
            return Err(Error::InvalidSystem("only the last product may be a crossing-number constraint".into()));
        }
        Ok(Self { products, mode, bounds: SearchBounds::default() })
    }

    pub fn with_bounds(mut self, bounds: SearchBounds) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn products(&self) -> &[ProductConstraint] {
        &self.products
    }

    pub fn mode(&self) -> EquivalenceMode {
        self.mode
    }

    pub fn bounds(&self) -> SearchBounds {
        self.bounds
    }

    fn exact_p(&self) -> Vec<i64> {
        self.products
            .iter()
            .map_while(|c| match c {
                ProductConstraint::Exact(k) => Some(k.p()),
                ProductConstraint::CrossingNumber(_) => None,
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProcessiveSolution {
    pub o: RationalTangle,
    pub r: RationalTangle,
    pub p: RationalTangle,
}

impl ProcessiveSolution {
    pub fn new(o: RationalTangle, r: RationalTangle) -> Self {
        Self { o, r, p: RationalTangle::ZERO }
    }

    pub fn mirror(&self) -> Self {
        Self { o: self.o.mirror(), r: self.r.mirror(), p: self.p.mirror() }
    }
}

impl fmt::Display for ProcessiveSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O={}, R={}, P={}", self.o, self.r, self.p)
    }
}

/// Solutions with the rules that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProcessiveReport {
    pub solutions: Vec<ProcessiveSolution>,
    /// `(u, k)` pairs with `k = r·v` left by the 4-plat reduction on the exact products.
    pub prefilter: Vec<(i64, i64)>,
    pub provenance: Vec<Verdict>,
    pub warnings: Vec<String>,
}

/// Why a single candidate fails, or that it passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum CandidateOutcome {
    Accepted,
    Rejected { round: usize, product: TwoBridgeLink, expected: String, verdict: Verdict },
}

/// `N(O + rounds·R)`.
pub fn predict_product(
    o: &RationalTangle,
    r: &RationalTangle,
    rounds: u32,
    mode: EquivalenceMode,
) -> Result<TwoBridgeLink> {
    if !r.is_integral() {
        return Err(Error::NotIntegral(r.fraction().to_string()));
    }
    Ok(closure_rational(&repeated_add(o, r, rounds)?, mode))
}

/// Replays every product of `sys` for one candidate.
pub fn evaluate_candidate(sys: &ProcessiveSystem, o: &RationalTangle, r: &RationalTangle) -> Result<CandidateOutcome> {
    for (i, expected) in sys.products.iter().enumerate() {
        let k = predict_product(o, r, i as u32, sys.mode)?;
        if !expected.matches(&k, sys.mode) {
            let detail = match expected {
                ProductConstraint::Exact(e) => format!("round {i}: N(O+{i}R) = {k}, not {e}"),
                ProductConstraint::CrossingNumber(c) => format!(
                    "round {i}: N(O+{i}R) = {k} has {} crossings, not {c}",
                    k.crossing_number()
                ),
            };
            return Ok(CandidateOutcome::Rejected {
                round: i,
                product: k,
                expected: expected.to_string(),
                verdict: Verdict::new(Rule::ProductMismatch, detail),
            });
        }
    }
    Ok(CandidateOutcome::Accepted)
}

/// `(u, k)` with `|u + i·k| = pᵢ` for every exact product.
pub fn prefilter_pairs(sys: &ProcessiveSystem) -> Vec<(i64, i64)> {
    let ps = sys.exact_p();
    let mut out = Vec::new();
    for u in [ps[0], -ps[0]] {
        if ps.len() < 2 {
            break;
        }
        for k in [ps[1] - u, -ps[1] - u] {
            let ok = ps.iter().enumerate().all(|(i, &p)| (u + i as i64 * k).abs() == p);
            if ok && !out.contains(&(u, k)) {
                out.push((u, k));
            }
        }
    }
    out.sort_by_key(|&(u, k)| (u.abs(), -u.signum(), k));
    out
}

/// Sorting key: `(|u|, v, |r|, sign u, sign r)` with `O = T(u/v)`, `v ≥ 0`.
fn solution_key(s: &ProcessiveSolution) -> (i64, i64, i64, i64, i64) {
    let (u, v) = (s.o.fraction().num(), s.o.fraction().den());
    let r = s.r.as_integer().unwrap_or(0);
    (u.abs(), v, r.abs(), -u.signum(), -r.signum())
}

pub fn solve_processive(sys: &ProcessiveSystem) -> Result<ProcessiveReport> {
    solve_processive_with(sys, true, Execution::default())
}

/// Enumerates `O = T(u/v)`, `R = T(r)` inside the bounds. With `prefilter`
/// the 4-plat reduction discards candidates before the closures are
/// replayed; without it every grid point is replayed.
pub fn solve_processive_with(sys: &ProcessiveSystem, prefilter: bool, exec: Execution) -> Result<ProcessiveReport> {
    let SearchBounds { uv, r: rb } = sys.bounds;
    let pairs = prefilter_pairs(sys);
    let ps = sys.exact_p();
    let grid = flat_map_range(exec, 0..uv + 1, |v| {
        let mut found = Vec::new();
        for u in -uv..=uv {
            if gcd(u, v) != 1 || (v == 0 && u != 1) {
                continue;
            }
            for r in -rb..=rb {
                if prefilter && !ps.iter().enumerate().all(|(i, &p)| (u + i as i64 * r * v).abs() == p) {
                    continue;
                }
                let o = RationalTangle::from_fraction(u, v).expect("coprime");
                let rt = RationalTangle::integral(r);
                if let Ok(CandidateOutcome::Accepted) = evaluate_candidate(sys, &o, &rt) {
                    found.push(ProcessiveSolution::new(o, rt));
                }
            }
        }
        found
    });
    let mut solutions = grid;
    solutions.sort_by_key(solution_key);

    let mut provenance = vec![Verdict::new(Rule::ParentalConvention, "P = T(0)")];
    let mut warnings = Vec::new();
    let max_crossings = sys.products.iter().map(ProductConstraint::crossing_number).max().unwrap_or(0);
    if max_crossings >= 7 {
        provenance.push(Verdict::new(
            Rule::RecombinantIntegrality,
            format!("a {max_crossings}-crossing 4-plat product is present, so R = T(r)"),
        ));
    } else {
        warnings.push("no product has 7 or more crossings; R was restricted to integral tangles without proof".into());
    }
    if prefilter {
        let list: Vec<String> = pairs.iter().map(|(u, k)| format!("({u},{k})")).collect();
        provenance.push(Verdict::new(
            Rule::FourPlatReduction,
            format!("|u + i*k| = p_i with k = r*v leaves (u,k) in {{{}}}", list.join(", ")),
        ));
    }
    provenance.push(Verdict::new(
        Rule::ProductMismatch,
        format!(
            "{} candidate(s) reproduce every product within |u|,|v| <= {uv}, |r| <= {rb}",
            solutions.len()
        ),
    ));
    Ok(ProcessiveReport { solutions, prefilter: pairs, provenance, warnings })
}

/// A handedness observed for one product, e.g. "round 1 is a left-handed trefoil".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChiralityObservation {
    pub round: usize,
    pub handedness: Handedness,
}

/// Keeps the solutions whose chiral closure at the observed round is the
/// observed signed class. `rounds` is the number of products in the system.
pub fn chirality_filter(
    solutions: &[ProcessiveSolution],
    observed: &ChiralityObservation,
    rounds: usize,
) -> Result<Vec<ProcessiveSolution>> {
    if observed.round >= rounds {
        return Err(Error::ObservationOutOfRange { round: observed.round, rounds });
    }
    let mut out = Vec::new();
    for s in solutions {
        let k = predict_product(&s.o, &s.r, observed.round as u32, EquivalenceMode::Chiral)?;
        let target = handed(&k, observed.handedness)?;
        if k == target {
            out.push(*s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourplat::UNKNOT;
    use EquivalenceMode::*;

    fn b(p: i64, q: i64) -> TwoBridgeLink {
        TwoBridgeLink::new(p, q, MirrorAgnostic).unwrap()
    }

    fn t(p: i64, q: i64) -> RationalTangle {
        RationalTangle::from_fraction(p, q).unwrap()
    }

    fn hin() -> ProcessiveSystem {
        ProcessiveSystem::new(
            vec![
                ProductConstraint::Exact(UNKNOT),
                ProductConstraint::Exact(b(3, 1)),
                ProductConstraint::Exact(b(7, 3)),
                ProductConstraint::CrossingNumber(7),
            ],
            MirrorAgnostic,
        )
        .unwrap()
    }

    #[test]
    fn hin_solutions() {
        let report = solve_processive(&hin()).unwrap();
        let expected = vec![
            ProcessiveSolution::new(t(1, 2), RationalTangle::integral(-2)),
            ProcessiveSolution::new(t(-1, 2), RationalTangle::integral(2)),
        ];
        assert_eq!(report.solutions, expected);
        assert_eq!(report.prefilter, vec![(1, -4), (-1, 4)]);
        assert!(report.provenance.iter().any(|v| v.rule == Rule::RecombinantIntegrality));
    }

    #[test]
    fn filtered_and_exhaustive_searches_agree() {
        let sys = hin().with_bounds(SearchBounds { uv: 12, r: 12 });
        let a = solve_processive_with(&sys, true, Execution::Parallel).unwrap();
        let b = solve_processive_with(&sys, false, Execution::Sequential).unwrap();
        assert_eq!(a.solutions, b.solutions);
    }

    #[test]
    fn rejections() {
        let sys = hin();
        match evaluate_candidate(&sys, &t(1, -4), &RationalTangle::integral(1)).unwrap() {
            CandidateOutcome::Rejected { round, product, .. } => {
                assert_eq!(round, 3);
                assert_eq!(product, b(11, 4));
                assert_eq!(product.crossing_number(), 6);
            }
            CandidateOutcome::Accepted => panic!("accepted"),
        }
        match evaluate_candidate(&sys, &t(1, -1), &RationalTangle::integral(4)).unwrap() {
            CandidateOutcome::Rejected { round, product, .. } => {
                assert_eq!(round, 2);
                assert_eq!(product, b(7, 1));
            }
            CandidateOutcome::Accepted => panic!("accepted"),
        }
    }

    #[test]
    fn prediction() {
        let o = t(-1, 2);
        let r = RationalTangle::integral(2);
        assert_eq!(predict_product(&o, &r, 3, MirrorAgnostic).unwrap(), b(11, 5));
        assert_eq!(predict_product(&o, &r, 1, MirrorAgnostic).unwrap(), b(3, 1));
        assert_eq!(predict_product(&o, &RationalTangle::ZERO, 1, Chiral).unwrap(), closure_rational(&o, Chiral));
        assert!(matches!(predict_product(&o, &o, 1, Chiral), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn chirality() {
        let sols = solve_processive(&hin()).unwrap().solutions;
        let left = ChiralityObservation { round: 1, handedness: Handedness::Left };
        let right = ChiralityObservation { round: 1, handedness: Handedness::Right };
        assert_eq!(
            chirality_filter(&sols, &left, 4).unwrap(),
            vec![ProcessiveSolution::new(t(-1, 2), RationalTangle::integral(2))]
        );
        assert_eq!(
            chirality_filter(&sols, &right, 4).unwrap(),
            vec![ProcessiveSolution::new(t(1, 2), RationalTangle::integral(-2))]
        );
        assert!(chirality_filter(&[], &left, 4).unwrap().is_empty());
        let far = ChiralityObservation { round: 4, handedness: Handedness::Left };
        assert!(matches!(chirality_filter(&sols, &far, 4), Err(Error::ObservationOutOfRange { .. })));
    }

    #[test]
    fn mirror_pairs() {
        let sols = solve_processive(&hin().with_bounds(SearchBounds { uv: 16, r: 8 })).unwrap().solutions;
        for s in &sols {
            assert!(sols.contains(&s.mirror()));
        }
    }

    #[test]
    fn system_validation() {
        assert!(ProcessiveSystem::new(vec![], MirrorAgnostic).is_err());
        assert!(ProcessiveSystem::new(vec![ProductConstraint::Exact(UNKNOT); 2], MirrorAgnostic).is_err());
        assert!(ProcessiveSystem::new(
            vec![
                ProductConstraint::Exact(b(3, 1)),
                ProductConstraint::Exact(b(3, 1)),
                ProductConstraint::Exact(b(3, 1))
            ],
            MirrorAgnostic
        )
        .is_err());
        assert!(ProcessiveSystem::new(
            vec![
                ProductConstraint::Exact(UNKNOT),
                ProductConstraint::CrossingNumber(3),
                ProductConstraint::Exact(b(3, 1))
            ],
            MirrorAgnostic
        )
        .is_err());
    }
}
