//! Command implementations. Each returns a [`Report`] that renders as text
//! or as a JSON envelope.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use tangles::oracle::{
    diagram_from_twist_word, equal_up_to_framing, fourplat_diagram, fourplat_svg, goeritz_determinant, jones,
    kauffman_bracket_with, Closure, LaurentPolynomial, PlanarDiagram, TangleDiagram,
};
use tangles::solver::{
    chirality_filter, solve_distributive, solve_processive_with, ChiralityObservation, DistributiveSystem, FamilyParams,
    ProcessiveSystem, ProductConstraint, SearchBounds, Verdict,
};
use tangles::{
    closure_denominator, distance, tangle_to_word, word_to_tangle, CompositeKnot, EquivalenceMode, Execution,
    Handedness, KnotValue, RationalTangle, Tangle, TwoBridgeLink,
};

use crate::args::{
    ClassifyArgs, ClosureArgs, Cli, Command, DistanceArgs, DistributiveArgs, EvalArgs, FamilyArgs, OracleArgs,
    ProcessiveArgs, RenderArgs,
};
use crate::error::CliError;
use crate::eval::{eval_knot, eval_rational, eval_tangle, numerator_closure, Env};
use crate::notation::{
    parse, parse_equation_file, parse_knot, parse_knot_list, parse_statement, parse_tangle, KnotAtom, Notation,
    Statement, TangleAtom, TangleExpr,
};

pub const HANDEDNESS_WARNING: &str =
    "handedness is a convention: right-handed b(p,1) = N(T(p)) has positive crossings, left-handed is b(p,-1)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProvenanceEntry {
    pub rule: &'static str,
    pub citation: &'static str,
    pub note: String,
}

impl From<&Verdict> for ProvenanceEntry {
    fn from(v: &Verdict) -> Self {
        Self { rule: v.rule.name(), citation: v.rule.citation(), note: v.note.clone() }
    }
}

/// The outcome of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub query: String,
    pub mode: EquivalenceMode,
    /// `"solutions"` for solvers, `"result"` otherwise.
    pub key: &'static str,
    pub body: Value,
    pub provenance: Vec<ProvenanceEntry>,
    pub warnings: Vec<String>,
    pub text: String,
}

impl Report {
    fn new(query: String, mode: EquivalenceMode, body: Value, text: String) -> Self {
        Self { query, mode, key: "result", body, provenance: Vec::new(), warnings: Vec::new(), text }
    }

    pub fn to_json(&self) -> String {
        let mut envelope = serde_json::Map::new();
        envelope.insert("query".into(), Value::String(self.query.clone()));
        envelope.insert("mode".into(), Value::String(self.mode.to_string()));
        envelope.insert(self.key.into(), self.body.clone());
        envelope.insert("provenance".into(), serde_json::to_value(&self.provenance).expect("serializable"));
        envelope.insert("warnings".into(), serde_json::to_value(&self.warnings).expect("serializable"));
        serde_json::to_string_pretty(&Value::Object(envelope)).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = self.text.clone();
        if !self.provenance.is_empty() {
            out.push_str("provenance:\n");
            for p in &self.provenance {
                let _ = writeln!(out, "  [{}] {} ({})", p.rule, p.note, p.citation);
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

fn tangle_expr(src: &str) -> Result<TangleExpr, CliError> {
    parse_tangle(src).map_err(|e| CliError::parse(e, src))
}

fn knot(src: &str, env: &Env, mode: EquivalenceMode) -> Result<KnotValue, CliError> {
    let expr = parse_knot(src).map_err(|e| CliError::parse(e, src))?;
    eval_knot(&expr, env, mode)
}

fn rational(src: &str, env: &Env) -> Result<RationalTangle, CliError> {
    eval_rational(&tangle_expr(src)?, env)
}

fn bindings(list: &[String]) -> Result<Env, CliError> {
    let mut env = Env::new();
    for b in list {
        match parse_statement(b).map_err(|e| CliError::parse(e, b))? {
            Statement::Binding(v, t) => {
                let value = eval_rational(&t, &env)?;
                env.insert(v, value);
            }
            Statement::Equation(_) => return Err(CliError::Usage(format!("'{b}' is not a binding VAR=TANGLE"))),
        }
    }
    Ok(env)
}

fn knot_json(k: &KnotValue) -> Value {
    match k {
        KnotValue::TwoBridge(b) => link_json(b),
        KnotValue::Composite(c) => json!({
            "knot": c.to_string(),
            "factors": c.factors().iter().map(link_json).collect::<Vec<_>>(),
            "determinant": c.determinant(),
        }),
    }
}

fn link_json(k: &TwoBridgeLink) -> Value {
    json!({
        "knot": k.to_string(),
        "name": k.name(),
        "description": k.description(),
        "determinant": k.determinant(),
        "crossing_number": k.crossing_number(),
        "components": k.components(),
    })
}

fn knot_text(k: &KnotValue) -> String {
    match k {
        KnotValue::TwoBridge(b) => match b.name() {
            Some(n) => format!("{b}  {n}, {}", b.description()),
            None => format!("{b}  {}", b.description()),
        },
        KnotValue::Composite(c) => format!("{c}  connected sum, determinant {}", c.determinant()),
    }
}

fn tangle_json(t: &Tangle) -> Value {
    match t {
        Tangle::Rational(r) => {
            let word = tangle_to_word(r);
            json!({
                "tangle": r.to_string(),
                "fraction": r.fraction().to_string(),
                "continued_fraction": tangles::cf_expand(r.fraction()).0,
                "twist_word": word.to_string(),
                "crossings": word.crossings(),
            })
        }
        Tangle::Montesinos(m) => json!({ "tangle": m.to_string() }),
    }
}

fn tangle_text(t: &Tangle) -> String {
    match t {
        Tangle::Rational(r) => {
            let word = tangle_to_word(r);
            let word_text = if word.0.is_empty() { "(empty word)".to_owned() } else { word.to_string() };
            format!("{r}\ntwist word: {word_text}\ncrossings: {}\n", word.crossings())
        }
        Tangle::Montesinos(m) => format!("{m}\n"),
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let mode = cli.equivalence_mode();
    match &cli.command {
        Command::Eval(a) => eval(a, mode),
        Command::Closure(a) => closure(a, mode),
        Command::Distance(a) => distance_cmd(a, mode),
        Command::Classify(a) => classify(a, mode),
        Command::SolveProcessive(a) => processive(a, mode),
        Command::SolveDistributive(a) => distributive(a, mode),
        Command::MontesinosFamily(a) => family(a, mode),
        Command::Oracle(a) => oracle(a, mode),
        Command::Render(a) => render(a, mode),
    }
}

fn eval(a: &EvalArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let env = bindings(&a.bindings)?;
    let ast = parse(&a.expr).map_err(|e| CliError::parse(e, &a.expr))?;
    let query = format!("eval {}", ast);
    Ok(match ast {
        Notation::Tangle(t) => {
            let v = eval_tangle(&t, &env)?;
            Report::new(query, mode, tangle_json(&v), tangle_text(&v))
        }
        Notation::Word(w) => {
            let v = Tangle::Rational(word_to_tangle(&w)?);
            Report::new(query, mode, tangle_json(&v), tangle_text(&v))
        }
        Notation::Knot(k) => {
            let v = eval_knot(&k, &env, mode)?;
            Report::new(query, mode, knot_json(&v), format!("{}\n", knot_text(&v)))
        }
        Notation::Equation(e) => {
            let lhs = numerator_closure(&eval_tangle(&e.lhs, &env)?, mode)?;
            let rhs = eval_knot(&e.rhs, &env, mode)?;
            let holds = lhs.equivalent(&rhs, mode);
            let body = json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string(), "holds": holds });
            Report::new(query, mode, body, format!("N({}) = {lhs}; {}\n", e.lhs, if holds { "holds" } else { "does not hold" }))
        }
    })
}

fn closure(a: &ClosureArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let env = bindings(&a.bindings)?;
    let expr = tangle_expr(&a.expr)?;
    let t = eval_tangle(&expr, &env)?;
    let (label, k) = if a.denominator {
        let r = t.as_rational().ok_or_else(|| CliError::Usage("denominator closure needs a rational tangle".into()))?;
        ("D", KnotValue::TwoBridge(closure_denominator(&r, mode)))
    } else {
        ("N", numerator_closure(&t, mode)?)
    };
    let query = format!("closure {label}({expr})");
    let mut report = Report::new(query, mode, knot_json(&k), format!("{label}({expr}) = {}\n", knot_text(&k)));
    if mode == EquivalenceMode::Chiral {
        report.warnings.push(HANDEDNESS_WARNING.into());
    }
    Ok(report)
}

fn distance_cmd(a: &DistanceArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let env = Env::new();
    let (x, y) = (rational(&a.first, &env)?, rational(&a.second, &env)?);
    let d = distance(&x, &y);
    Ok(Report::new(format!("distance {x} {y}"), mode, json!({ "distance": d }), format!("{d}\n")))
}

fn classify(a: &ClassifyArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let k = knot(&a.knot, &Env::new(), mode)?;
    let mut body = knot_json(&k);
    let mut text = format!("{}\n", knot_text(&k));
    if let KnotValue::TwoBridge(b) = &k {
        body["amphichiral"] = json!(b.is_amphichiral());
        body["mirror"] = json!(b.mirror().renormalize(mode).to_string());
        let _ = writeln!(text, "determinant: {}\ncrossing number: {}", b.determinant(), b.crossing_number());
        let _ = writeln!(text, "amphichiral: {}", b.is_amphichiral());
    }
    Ok(Report::new(format!("classify {}", a.knot.trim()), mode, body, text))
}

fn parse_chirality(src: &str, rounds: usize) -> Result<ChiralityObservation, CliError> {
    let bad = || CliError::Usage(format!("chirality must look like round1=left, got '{src}'"));
    let (lhs, rhs) = src.split_once('=').ok_or_else(bad)?;
    let round: usize = lhs.trim().strip_prefix("round").ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let handedness = match rhs.trim() {
        "left" => Handedness::Left,
        "right" => Handedness::Right,
        _ => return Err(bad()),
    };
    if round >= rounds {
        return Err(tangles::Error::ObservationOutOfRange { round, rounds }.into());
    }
    Ok(ChiralityObservation { round, handedness })
}

fn constraint(atom: &[KnotAtom], mode: EquivalenceMode) -> Result<ProductConstraint, CliError> {
    match atom {
        [KnotAtom::CrossingNumber(c)] => Ok(ProductConstraint::CrossingNumber(*c)),
        atoms => match eval_knot(&crate::notation::KnotExpr(atoms.to_vec()), &Env::new(), mode)? {
            KnotValue::TwoBridge(k) => Ok(ProductConstraint::Exact(k)),
            KnotValue::Composite(c) => Err(CliError::Usage(format!("processive products must be 4-plats, got {c}"))),
        },
    }
}

/// Reads `N(O + iR) = K_i` lines into the product list.
fn processive_file(src: &str, mode: EquivalenceMode) -> Result<Vec<ProductConstraint>, CliError> {
    let mut slots: Vec<Option<ProductConstraint>> = Vec::new();
    for line in parse_equation_file(src)? {
        let Statement::Equation(e) = line.statement else {
            continue;
        };
        let (mut o, mut r) = (0u32, 0u32);
        for term in &e.lhs.0 {
            match &term.atom {
                TangleAtom::Var(v) if v == "O" => o += term.coeff,
                TangleAtom::Var(v) if v == "R" => r += term.coeff,
                other => {
                    return Err(CliError::Usage(format!(
                        "line {}: processive equations use only O and R, found {other}",
                        line.number
                    )))
                }
            }
        }
        if o != 1 {
            return Err(CliError::Usage(format!("line {}: O must appear exactly once", line.number)));
        }
        let i = r as usize;
        if slots.len() <= i {
            slots.resize(i + 1, None);
        }
        if slots[i].is_some() {
            return Err(CliError::Usage(format!("line {}: a second equation for N(O+{i}R)", line.number)));
        }
        slots[i] = Some(constraint(&e.rhs.0, mode)?);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| CliError::Usage(format!("missing equation for N(O+{i}R)"))))
        .collect()
}

fn read(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn processive(a: &ProcessiveArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let products = match (&a.products, &a.file) {
        (Some(list), _) => parse_knot_list(list)
            .map_err(|e| CliError::parse(e, list))?
            .iter()
            .map(|k| constraint(&k.0, mode))
            .collect::<Result<Vec<_>, _>>()?,
        (None, Some(path)) => processive_file(&read(path)?, mode)?,
        (None, None) => return Err(CliError::Usage("give --products or --file".into())),
    };
    let rounds = products.len();
    let query = format!(
        "solve-processive {}",
        products.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    let sys = ProcessiveSystem::new(products, mode)?.with_bounds(SearchBounds { uv: a.bound_uv, r: a.bound_r });
    let exec = if a.sequential { Execution::Sequential } else { Execution::default() };
    let report = solve_processive_with(&sys, !a.no_prefilter, exec)?;
    let mut solutions = report.solutions.clone();
    let mut warnings = report.warnings.clone();
    let mut chirality = Value::Null;
    if let Some(obs) = &a.chirality {
        let observation = parse_chirality(obs, rounds)?;
        solutions = chirality_filter(&solutions, &observation, rounds)?;
        chirality = json!({ "round": observation.round, "handedness": observation.handedness });
        warnings.push(HANDEDNESS_WARNING.into());
    }
    let mut text = String::new();
    for s in &solutions {
        let _ = writeln!(text, "O = {}, R = {}  (P = {})", s.o, s.r, s.p);
    }
    if solutions.is_empty() {
        text.push_str("no solutions\n");
    }
    let pairs: Vec<Value> = report.prefilter.iter().map(|(u, k)| json!({ "u": u, "k": k })).collect();
    let body = json!({
        "solutions": solutions.iter().map(|s| json!({ "O": s.o, "R": s.r, "P": s.p })).collect::<Vec<_>>(),
        "prefilter": pairs,
        "chirality": chirality,
        "bounds": { "uv": a.bound_uv, "r": a.bound_r },
    });
    let mut out = Report::new(query, mode, body, text);
    out.key = "solutions";
    out.provenance = report.provenance.iter().map(Into::into).collect();
    out.warnings = warnings;
    Ok(out)
}

fn distributive_inputs(
    a: &DistributiveArgs,
    mode: EquivalenceMode,
) -> Result<(TwoBridgeLink, CompositeKnot, RationalTangle, RationalTangle), CliError> {
    let as_prime = |k: KnotValue| match k {
        KnotValue::TwoBridge(b) => Ok(b),
        KnotValue::Composite(c) => Err(CliError::Usage(format!("K1 must be a 4-plat, got {c}"))),
    };
    let as_composite = |k: KnotValue| match k {
        KnotValue::Composite(c) => Ok(c),
        KnotValue::TwoBridge(b) => Err(CliError::Usage(format!("the product must be a connected sum, got {b}"))),
    };
    if let Some(path) = &a.file {
        let mut env = Env::new();
        let mut equations = Vec::new();
        for line in parse_equation_file(&read(path)?)? {
            match line.statement {
                Statement::Binding(v, t) => {
                    let value = eval_rational(&t, &env)?;
                    env.insert(v, value);
                }
                Statement::Equation(e) => equations.push((line.number, e)),
            }
        }
        let find = |var: &str| -> Result<(usize, crate::notation::KnotExpr), CliError> {
            equations
                .iter()
                .find(|(_, e)| {
                    e.lhs.0.len() == 2
                        && e.lhs.0.iter().all(|t| t.coeff == 1)
                        && e.lhs.0[0].atom == TangleAtom::Var("Q".into())
                        && e.lhs.0[1].atom == TangleAtom::Var(var.into())
                })
                .map(|(n, e)| (*n, e.rhs.clone()))
                .ok_or_else(|| CliError::Usage(format!("missing equation N(Q+{var})=...")))
        };
        let (_, k1) = find("P")?;
        let (_, product) = find("R")?;
        let p = *env.get("P").ok_or_else(|| CliError::Usage("missing binding P=...".into()))?;
        let r = *env.get("R").ok_or_else(|| CliError::Usage("missing binding R=...".into()))?;
        let k1 = as_prime(eval_knot(&k1, &env, mode)?)?;
        let product = as_composite(eval_knot(&product, &env, mode)?)?;
        return Ok((k1, product, p, r));
    }
    let env = Env::new();
    let k1 = as_prime(knot(a.k1.as_deref().unwrap_or_default(), &env, mode)?)?;
    let product = as_composite(knot(a.product.as_deref().unwrap_or_default(), &env, mode)?)?;
    let p = rational(&a.p, &env)?;
    let r = rational(a.r.as_deref().unwrap_or_default(), &env)?;
    Ok((k1, product, p, r))
}

fn distributive(a: &DistributiveArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let (k1, product, p, r) = distributive_inputs(a, mode)?;
    let query = format!("solve-distributive N(Q+{p})={k1}, N(Q+{r})={product}");
    let sys = DistributiveSystem::new(k1, product, p, r, mode)?;
    let set = solve_distributive(&sys)?;
    let mut text = String::new();
    let _ = writeln!(text, "rational: {} ({})", set.rational.solutions.len(), set.rational.verdict.note);
    let _ = writeln!(text, "prime: {} ({})", set.prime.montesinos.len(), set.prime.verdict.note);
    for m in &set.prime.montesinos {
        let _ = writeln!(text, "  Q = {}  N(Q+P) = {}", m.tangle, m.k1);
    }
    let _ = writeln!(text, "locally knotted: {} ({})", set.locally_knotted.solutions.len(), set.locally_knotted.verdict.note);
    for s in &set.locally_knotted.solutions {
        let _ = writeln!(text, "  core {} with {} on arc {}", s.core, s.insert, s.placement);
    }
    let body = json!({
        "rational": { "solutions": set.rational.solutions, "verdict": set.rational.verdict.note },
        "prime": {
            "montesinos": set.prime.montesinos.iter().map(|m| json!({ "tangle": m.tangle, "k1": m.k1 })).collect::<Vec<_>>(),
            "non_montesinos_unresolved": set.prime.non_montesinos_unresolved,
            "verdict": set.prime.verdict.note,
        },
        "locally_knotted": {
            "solutions": set.locally_knotted.solutions.iter().map(|s| json!({
                "core": s.core,
                "insert": s.insert,
                "placement": s.placement.to_string(),
                "plausible": s.plausible,
            })).collect::<Vec<_>>(),
            "verdict": set.locally_knotted.verdict.note,
        },
    });
    let mut out = Report::new(query, mode, body, text);
    out.key = "solutions";
    out.provenance = set.provenance.iter().map(Into::into).collect();
    out.warnings = set.warnings.clone();
    Ok(out)
}

fn family(a: &FamilyArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let params = FamilyParams::new(a.r, a.s, a.t, a.u)?;
    let members = tangles::solver::family_members_where(params, a.m_min..=a.m_max, mode, Execution::default(), |x| {
        a.p_equals.is_none_or(|p| x.p == p)
    })?;
    let mut text = String::new();
    for m in &members {
        let _ = writeln!(text, "m = {:>4}  p = {:>5}  {}", m.m, m.p, m.link);
    }
    if members.is_empty() {
        text.push_str("no members\n");
    }
    let query = format!(
        "montesinos-family r={} s={} t={} u={} m in [{}, {}]{}",
        a.r,
        a.s,
        a.t,
        a.u,
        a.m_min,
        a.m_max,
        a.p_equals.map(|p| format!(" p={p}")).unwrap_or_default()
    );
    let body = json!(members.iter().map(|m| json!({ "m": m.m, "p": m.p, "link": m.link })).collect::<Vec<_>>());
    Ok(Report::new(query, mode, body, text))
}

/// The diagram the oracle is asked about and the engine's prediction for it.
fn oracle_inputs(a: &OracleArgs, mode: EquivalenceMode) -> Result<(PlanarDiagram, KnotValue), CliError> {
    let closure = if a.denominator { Closure::Denominator } else { Closure::Numerator };
    let ast = parse(&a.input).map_err(|e| CliError::parse(e, &a.input))?;
    match ast {
        Notation::Word(w) => {
            let d = diagram_from_twist_word(&w, closure, a.cap)?;
            let t = word_to_tangle(&w)?;
            let k = if a.denominator { closure_denominator(&t, mode) } else { tangles::closure_rational(&t, mode) };
            Ok((d, KnotValue::TwoBridge(k)))
        }
        Notation::Tangle(expr) => {
            let env = Env::new();
            let mut diagram: Option<TangleDiagram> = None;
            for term in &expr.0 {
                let fractions = match &term.atom {
                    TangleAtom::Rational(x) => vec![*x],
                    TangleAtom::Montesinos(xs) => xs.clone(),
                    TangleAtom::Var(v) => return Err(CliError::Usage(format!("unbound variable {v}"))),
                };
                for _ in 0..term.coeff {
                    for x in &fractions {
                        let piece = TangleDiagram::rational(x.num(), x.den());
                        diagram = Some(match diagram {
                            None => piece,
                            Some(d) => d.sum(&piece),
                        });
                    }
                }
            }
            let diagram = diagram.expect("at least one term");
            if diagram.crossing_count() > a.cap {
                return Err(tangles::Error::CrossingCapExceeded { crossings: diagram.crossing_count(), cap: a.cap }.into());
            }
            let t = eval_tangle(&expr, &env)?;
            if a.denominator {
                let r = t.as_rational().ok_or_else(|| CliError::Usage("denominator closure needs a rational tangle".into()))?;
                Ok((diagram.denominator(), KnotValue::TwoBridge(closure_denominator(&r, mode))))
            } else {
                Ok((diagram.numerator(), numerator_closure(&t, mode)?))
            }
        }
        Notation::Knot(k) => {
            if a.denominator {
                return Err(CliError::Usage("--denominator applies to tangles and twist words".into()));
            }
            match k.0.as_slice() {
                [KnotAtom::Schubert(p, q)] => Ok((fourplat_diagram(*p, *q), KnotValue::TwoBridge(TwoBridgeLink::new(*p, *q, mode)?))),
                _ => Err(CliError::Usage("the oracle takes a twist word, a tangle expression or b(p,q)".into())),
            }
        }
        Notation::Equation(_) => Err(CliError::Usage("the oracle takes a twist word, a tangle expression or b(p,q)".into())),
    }
}

fn reference_bracket(k: &KnotValue, cap: usize) -> Result<LaurentPolynomial, CliError> {
    let factors: Vec<TwoBridgeLink> = match k {
        KnotValue::TwoBridge(b) => vec![*b],
        KnotValue::Composite(c) => c.factors().to_vec(),
    };
    let mut acc = LaurentPolynomial::one();
    for f in factors {
        let d = fourplat_diagram(f.p(), f.q());
        acc = &acc * &kauffman_bracket_with(&d, Execution::default(), cap.max(d.crossing_count()))?;
    }
    Ok(acc)
}

fn oracle(a: &OracleArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let (d, predicted) = oracle_inputs(a, mode)?;
    let bracket = kauffman_bracket_with(&d, Execution::default(), a.cap)?;
    let v = jones(&d)?;
    let det = match goeritz_determinant(&d) {
        Ok(x) => Some(x),
        Err(tangles::Error::DisconnectedDiagram) => None,
        Err(e) => return Err(e.into()),
    };
    let reference = reference_bracket(&predicted, 64)?;
    let agrees_bracket = equal_up_to_framing(&bracket, &reference)
        || (mode.is_mirror_agnostic() && equal_up_to_framing(&bracket, &reference.invert_variable()));
    let agrees_det = det.unwrap_or(0) == predicted.determinant();
    let mut text = String::new();
    let _ = writeln!(text, "diagram: {} crossings, {} components, writhe {}", d.crossing_count(), d.components(), d.writhe());
    let _ = writeln!(text, "bracket: {bracket}");
    let _ = writeln!(text, "jones: {v}");
    match det {
        Some(x) => {
            let _ = writeln!(text, "determinant: {x}");
        }
        None => text.push_str("determinant: 0 (split diagram)\n"),
    }
    let _ = writeln!(text, "engine: {predicted}");
    let _ = writeln!(text, "agrees: {}", agrees_bracket && agrees_det);
    if a.edge_list {
        text.push_str(&d.to_edge_list());
    }
    let body = json!({
        "crossings": d.crossing_count(),
        "components": d.components(),
        "writhe": d.writhe(),
        "bracket": bracket.to_string(),
        "jones": v.to_string(),
        "determinant": det.unwrap_or(0),
        "engine": predicted.to_string(),
        "agrees": agrees_bracket && agrees_det,
        "edge_list": a.edge_list.then(|| d.to_edge_list()),
    });
    Ok(Report::new(format!("oracle {}", a.input.trim()), mode, body, text))
}

fn render(a: &RenderArgs, mode: EquivalenceMode) -> Result<Report, CliError> {
    let env = Env::new();
    let ast = parse(&a.input).map_err(|e| CliError::parse(e, &a.input))?;
    let (p, q) = match ast {
        Notation::Knot(k) => match eval_knot(&k, &env, EquivalenceMode::Chiral)? {
            KnotValue::TwoBridge(b) => (b.p(), b.q()),
            KnotValue::Composite(c) => return Err(CliError::Usage(format!("cannot draw the connected sum {c} as a 4-plat"))),
        },
        Notation::Tangle(t) => {
            let r = eval_rational(&t, &env)?;
            let k = tangles::closure_rational(&r, EquivalenceMode::Chiral);
            (k.p(), k.q())
        }
        Notation::Word(w) => {
            let k = tangles::closure_rational(&word_to_tangle(&w)?, EquivalenceMode::Chiral);
            (k.p(), k.q())
        }
        Notation::Equation(_) => return Err(CliError::Usage("render takes a knot or a rational tangle".into())),
    };
    let svg = fourplat_svg(p, q);
    let query = format!("render b({p},{q})");
    match &a.output {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            let body = json!({ "knot": format!("b({p},{q})"), "path": path.display().to_string() });
            Ok(Report::new(query, mode, body, format!("wrote {}\n", path.display())))
        }
        None => Ok(Report::new(query, mode, json!({ "knot": format!("b({p},{q})"), "svg": svg }), svg)),
    }
}
