//! Turns parsed notation into engine values.

use std::collections::BTreeMap;

use tangles::fourplat::UNKNOT;
use tangles::{
    add, closure_rational, closure_sum, infinity_closure_montesinos, CompositeKnot, EquivalenceMode, ExtendedRational,
    KnotValue, RationalTangle, Tangle, TwoBridgeLink,
};

use crate::error::CliError;
use crate::notation::{KnotAtom, KnotExpr, TangleAtom, TangleExpr};

/// Values bound to tangle variables.
pub type Env = BTreeMap<String, RationalTangle>;

fn summands(atom: &TangleAtom, env: &Env) -> Result<Vec<RationalTangle>, CliError> {
    Ok(match atom {
        TangleAtom::Rational(x) => vec![RationalTangle::new(*x)],
        TangleAtom::Montesinos(xs) => xs.iter().map(|x| RationalTangle::new(*x)).collect(),
        TangleAtom::Var(v) => {
            vec![*env.get(v).ok_or_else(|| CliError::Usage(format!("tangle variable {v} is not bound")))?]
        }
    })
}

/// Sums the expression left to right.
pub fn eval_tangle(expr: &TangleExpr, env: &Env) -> Result<Tangle, CliError> {
    let mut parts = Vec::new();
    for term in &expr.0 {
        let s = summands(&term.atom, env)?;
        for _ in 0..term.coeff {
            parts.extend_from_slice(&s);
        }
    }
    let (first, rest) = parts.split_first().expect("parser yields at least one term");
    let mut acc = Tangle::Rational(*first);
    for r in rest {
        acc = add(&acc, r)?;
    }
    Ok(acc)
}

/// `N(t)` for a rational or Montesinos tangle whose closure is a 4-plat or
/// a connected sum of 4-plats.
pub fn numerator_closure(t: &Tangle, mode: EquivalenceMode) -> Result<KnotValue, CliError> {
    match t {
        Tangle::Rational(r) => Ok(KnotValue::TwoBridge(closure_rational(r, mode))),
        Tangle::Montesinos(m) => {
            let s = m.summands();
            match s {
                [a, b] => Ok(KnotValue::TwoBridge(closure_sum(a, b, mode)?)),
                [.., last] if last.is_infinity() && s[..s.len() - 1].iter().all(|x| !x.is_infinity()) => {
                    let rest = tangles::MontesinosTangle::new(s[..s.len() - 1].to_vec())?;
                    let k = infinity_closure_montesinos(&rest, mode)?;
                    Ok(KnotValue::Composite(k))
                }
                _ => Err(CliError::Usage(format!(
                    "N({m}) is a Montesinos link with {} rational tangles, outside the 4-plat calculus",
                    s.len()
                ))),
            }
        }
    }
}

pub fn eval_knot_atom(atom: &KnotAtom, env: &Env, mode: EquivalenceMode) -> Result<KnotValue, CliError> {
    match atom {
        KnotAtom::Schubert(p, q) => Ok(KnotValue::TwoBridge(TwoBridgeLink::new(*p, *q, mode)?)),
        KnotAtom::Named(n) => {
            let k = TwoBridgeLink::from_name(n).ok_or_else(|| CliError::Usage(format!("unknown knot name {n}")))?;
            Ok(KnotValue::TwoBridge(k.renormalize(mode)))
        }
        KnotAtom::Closure(t) => numerator_closure(&eval_tangle(t, env)?, mode),
        KnotAtom::CrossingNumber(c) => Err(CliError::Usage(format!(
            "'{c}-crossing' only names a product constraint, not a knot"
        ))),
    }
}

pub fn eval_knot(expr: &KnotExpr, env: &Env, mode: EquivalenceMode) -> Result<KnotValue, CliError> {
    let values = expr.0.iter().map(|a| eval_knot_atom(a, env, mode)).collect::<Result<Vec<_>, _>>()?;
    if values.len() == 1 {
        return Ok(values.into_iter().next().expect("one value"));
    }
    let mut factors = Vec::new();
    for v in values {
        match v {
            KnotValue::TwoBridge(k) if k == UNKNOT => {}
            KnotValue::TwoBridge(k) => factors.push(k),
            KnotValue::Composite(c) => factors.extend_from_slice(c.factors()),
        }
    }
    match factors.len() {
        0 => Ok(KnotValue::TwoBridge(UNKNOT)),
        1 => Ok(KnotValue::TwoBridge(factors[0])),
        _ => Ok(KnotValue::Composite(CompositeKnot::new(factors)?)),
    }
}

/// A tangle expression that must evaluate to a rational tangle.
pub fn eval_rational(expr: &TangleExpr, env: &Env) -> Result<RationalTangle, CliError> {
    match eval_tangle(expr, env)? {
        Tangle::Rational(r) => Ok(r),
        other => Err(CliError::Usage(format!("{expr} = {other} is not rational"))),
    }
}

pub fn fraction_text(x: ExtendedRational) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_knot, parse_tangle};

    const MA: EquivalenceMode = EquivalenceMode::MirrorAgnostic;

    #[test]
    fn sums_and_closures() {
        let env = Env::from([("R".to_owned(), RationalTangle::integral(2))]);
        let t = eval_tangle(&parse_tangle("T(-1/2)+3R").unwrap(), &env).unwrap();
        assert_eq!(t.as_rational().unwrap(), RationalTangle::from_fraction(11, 2).unwrap());
        let k = eval_knot(&parse_knot("N(T(-1/2)+3R)").unwrap(), &env, MA).unwrap();
        assert_eq!(k.to_string(), "b(11,5)");
        let c = eval_knot(&parse_knot("N(M(1/3,1/3,inf))").unwrap(), &env, MA).unwrap();
        assert_eq!(c.to_string(), "b(3,1)#b(3,1)");
        assert!(eval_knot(&parse_knot("N(M(1/3,1/3,1/3))").unwrap(), &env, MA).is_err());
        assert!(eval_tangle(&parse_tangle("Q").unwrap(), &env).is_err());
    }

    #[test]
    fn connected_sums_drop_unknots() {
        let k = eval_knot(&parse_knot("trefoil#unknot#b(5,2)").unwrap(), &Env::new(), MA).unwrap();
        assert_eq!(k.to_string(), "b(3,1)#b(5,3)");
    }
}
