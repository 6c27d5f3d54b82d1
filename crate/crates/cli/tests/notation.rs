use proptest::prelude::*;
use tangles::rational::gcd;
use tangles::{ExtendedRational, Move, TwistWord};
use tangles_cli::notation::{
    parse, parse_knot, parse_statement, parse_tangle, parse_word, Equation, KnotAtom, KnotExpr, Notation, Statement,
    TangleAtom, TangleExpr, TangleTerm,
};

fn fraction() -> impl Strategy<Value = ExtendedRational> {
    (-40i64..=40, 0i64..=40).prop_filter_map("0/0", |(p, q)| ExtendedRational::new(p, q).ok())
}

fn atom() -> impl Strategy<Value = TangleAtom> {
    prop_oneof![
        fraction().prop_map(TangleAtom::Rational),
        prop::collection::vec(fraction(), 2..5).prop_map(TangleAtom::Montesinos),
        prop::sample::select(vec!["O", "P", "Q", "R"]).prop_map(|v| TangleAtom::Var(v.to_owned())),
    ]
}

fn tangle() -> impl Strategy<Value = TangleExpr> {
    prop::collection::vec((1u32..5, atom()).prop_map(|(coeff, atom)| TangleTerm { coeff, atom }), 1..4)
        .prop_map(TangleExpr)
}

fn knot_atom() -> impl Strategy<Value = KnotAtom> {
    prop_oneof![
        (1i64..60, -60i64..60)
            .prop_filter("coprime", |(p, q)| gcd(*p, *q) == 1)
            .prop_map(|(p, q)| KnotAtom::Schubert(p, q)),
        tangle().prop_map(KnotAtom::Closure),
        (3u64..12).prop_map(KnotAtom::CrossingNumber),
        prop::sample::select(vec!["trefoil", "figure-eight", "unknot"]).prop_map(|n| KnotAtom::Named(n.to_owned())),
    ]
}

fn knot() -> impl Strategy<Value = KnotExpr> {
    prop::collection::vec(knot_atom(), 1..4).prop_map(KnotExpr)
}

fn word() -> impl Strategy<Value = TwistWord> {
    prop::collection::vec(
        prop_oneof![
            (-9i64..=9).prop_filter("nonzero", |k| *k != 0).prop_map(Move::H),
            (-9i64..=9).prop_filter("nonzero", |k| *k != 0).prop_map(Move::V),
            Just(Move::R),
        ],
        1..8,
    )
    .prop_map(TwistWord)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn tangles_round_trip(t in tangle()) {
        prop_assert_eq!(parse_tangle(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn knots_round_trip(k in knot()) {
        prop_assert_eq!(parse_knot(&k.to_string()).unwrap(), k);
    }

    #[test]
    fn words_round_trip(w in word()) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn statements_round_trip(lhs in tangle(), rhs in knot(), var in prop::sample::select(vec!["P", "R", "X"])) {
        let eq = Statement::Equation(Equation { lhs: lhs.clone(), rhs });
        prop_assert_eq!(parse_statement(&eq.to_string()).unwrap(), eq);
        let binding = Statement::Binding(var.to_owned(), lhs);
        prop_assert_eq!(parse_statement(&binding.to_string()).unwrap(), binding);
    }

    #[test]
    fn dispatch_round_trip(n in prop_oneof![
        tangle().prop_map(Notation::Tangle),
        knot().prop_map(Notation::Knot),
        word().prop_map(Notation::Word),
        (tangle(), knot()).prop_map(|(lhs, rhs)| Notation::Equation(Equation { lhs, rhs })),
    ]) {
        prop_assert_eq!(parse(&n.to_string()).unwrap(), n);
    }

    #[test]
    fn garbage_never_panics(s in "\\PC{0,24}") {
        let _ = parse(&s);
        let _ = parse_statement(&s);
    }
}

#[test]
fn spec_forms() {
    assert!(matches!(parse("N(T(-1/2)+T(2))").unwrap(), Notation::Knot(KnotExpr(ref a)) if matches!(a[..], [KnotAtom::Closure(_)])));
    let k = parse("b(3,1)#b(3,1)").unwrap();
    assert_eq!(k, Notation::Knot(KnotExpr(vec![KnotAtom::Schubert(3, 1), KnotAtom::Schubert(3, 1)])));
    assert_eq!(parse("h^2 r h^3 r").unwrap(), Notation::Word(TwistWord(vec![Move::H(2), Move::R, Move::H(3), Move::R])));
    assert_eq!(parse("  T( -1 / 2 ) + 3 T(2) ").unwrap().to_string(), "T(-1/2)+3T(2)");
    assert_eq!(parse("M(1/3, -2/5, inf)").unwrap().to_string(), "M(1/3,-2/5,inf)");
}
