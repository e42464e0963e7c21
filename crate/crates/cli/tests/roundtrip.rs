use proptest::prelude::*;
use springer_cli::parse::parse_poly;
use springer_core::poly::rat;
use springer_core::{Ambient, Monomial, Polynomial};

fn any_poly() -> impl Strategy<Value = Polynomial> {
    let amb = Ambient::with_y(3, 2, 2);
    prop::collection::vec((prop::collection::vec(0u16..4, amb.len()), -9i64..=9, 1i64..=4), 0..6).prop_map(move |terms| {
        terms.into_iter().fold(Polynomial::zero(amb), |mut acc, (e, p, q)| {
            acc.add_term(Monomial::from_exponents(&e), rat(p) / rat(q));
            acc
        })
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(p in any_poly()) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text, p.ambient()).unwrap(), p.clone());
        let spaced = text.replace('*', " * ").replace('^', " ^ ").replace('/', " / ");
        prop_assert_eq!(parse_poly(&spaced, p.ambient()).unwrap(), p);
    }
}
