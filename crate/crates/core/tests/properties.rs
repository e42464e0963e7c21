use proptest::prelude::*;

use springer_core::poly::{lex_compare, rat};
use springer_core::{Ambient, Monomial, Permutation, Polynomial, Var};

fn poly_in(amb: Ambient) -> impl Strategy<Value = Polynomial> {
    let len = amb.len();
    prop::collection::vec((prop::collection::vec(0u16..3, len), -4i64..=4), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Polynomial::zero(amb), |mut acc, (e, c)| {
            acc.add_term(Monomial::from_exponents(&e), rat(c));
            acc
        })
    })
}

fn ambient_and_three() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    (1usize..=8, 0usize..=4).prop_flat_map(|(n, k)| {
        let amb = Ambient::new(n, k);
        (poly_in(amb), poly_in(amb), poly_in(amb))
    })
}

fn x_poly() -> impl Strategy<Value = (usize, Polynomial)> {
    (3usize..=6).prop_flat_map(|n| (Just(n), poly_in(Ambient::x_only(n))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in ambient_and_three()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(a.ambient()), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn divided_difference_relations((n, f) in x_poly()) {
        let d = |g: &Polynomial, i: usize| g.divided_difference(i).unwrap();
        for i in 1..n {
            prop_assert!(d(&d(&f, i), i).is_zero());
            if i + 1 < n {
                prop_assert_eq!(d(&d(&d(&f, i), i + 1), i), d(&d(&d(&f, i + 1), i), i + 1));
            }
            for j in i + 2..n {
                prop_assert_eq!(d(&d(&f, i), j), d(&d(&f, j), i));
            }
        }
    }

    #[test]
    fn symmetric_iff_annihilated((n, f) in x_poly(), i in 1usize..6) {
        let i = 1 + (i - 1) % (n - 1);
        let symmetric = f.swap_x(i).unwrap() == f;
        prop_assert_eq!(symmetric, f.divided_difference(i).unwrap().is_zero());
        let sym = &f + &f.swap_x(i).unwrap();
        prop_assert!(sym.divided_difference(i).unwrap().is_zero());
    }

    #[test]
    fn lex_matches_first_difference(a in prop::collection::vec(0u16..4, 0..7), b in prop::collection::vec(0u16..4, 0..7)) {
        let (ma, mb) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b));
        let len = a.len().max(b.len());
        let get = |v: &[u16], j: usize| v.get(j).copied().unwrap_or(0);
        let brute = (0..len)
            .find(|&j| get(&a, j) != get(&b, j))
            .map_or(std::cmp::Ordering::Equal, |j| get(&a, j).cmp(&get(&b, j)));
        prop_assert_eq!(lex_compare(&ma, &mb), brute);
    }

    #[test]
    fn permutation_round_trips(code in prop::collection::vec(0usize..6, 6)) {
        let code: Vec<usize> = code.iter().enumerate().map(|(i, &c)| c.min(5 - i)).collect();
        let w = Permutation::from_lehmer_code(&code).unwrap();
        prop_assert_eq!(w.lehmer_code(), code.clone());
        prop_assert_eq!(w.length(), code.iter().sum::<usize>());
        prop_assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(6));
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn substitution_is_a_homomorphism((a, b, _c) in ambient_and_three()) {
        let amb = a.ambient();
        let mut map = std::collections::BTreeMap::new();
        for i in 1..=amb.nx() {
            let target = if amb.nz() > 0 { Var::Z(1 + i % amb.nz()) } else { Var::X(1 + i % amb.nx()) };
            map.insert(Var::X(i), Polynomial::var(amb, target).unwrap());
        }
        let s = |p: &Polynomial| p.substitute(amb, &map).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }
}
