//! Property suites behind `springer verify`.
//!
//! Each suite exhausts (or samples, for the randomized ones) a family of
//! shapes up to `max_n` and records every violated property. Suites never
//! panic on a violation; they report it.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expand::grading_violation;
use crate::permutation::Permutation;
use crate::poly::{lex_compare, rat, Ambient, Monomial, Polynomial, Var};
use crate::schubert::{
    equivariant_schubert_expansion, lehmer_code, monk_check, positivity_scan, schubert_polynomial,
    schubert_transition_matrix, w_alpha_set,
};
use crate::springer::{localize, localize_at_permutation, p_polynomial, q_factor, springer_monomials, SpringerFiber};
use crate::tableaux::{enumerate, Composition, RowStrictTableau};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
    /// Random inputs per shape for the randomized suites.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 5, seed: 0x5eed, samples: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Informational lines (never failures).
    pub notes: Vec<String>,
}

const MAX_FAILURES: usize = 20;

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(msg());
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.name, self.checks)?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

pub const SUITES: &[&str] = &[
    "lex",
    "ring",
    "divided-differences",
    "counting",
    "order",
    "eta",
    "coset",
    "zero-parts",
    "springer-basis",
    "q-factor",
    "triangularity",
    "expansion-agreement",
    "grading",
    "support-bound",
    "lehmer",
    "monk",
    "betti",
    "transition",
    "truncation",
    "equivariant-compat",
    "positivity",
];

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let report = match name {
        "lex" => lex_suite(cfg),
        "ring" => ring_suite(cfg),
        "divided-differences" => divided_difference_suite(cfg),
        "counting" => counting_suite(cfg),
        "order" => order_suite(cfg),
        "eta" => eta_suite(cfg),
        "coset" => coset_suite(cfg),
        "zero-parts" => zero_parts_suite(cfg),
        "springer-basis" => springer_basis_suite(cfg),
        "q-factor" => q_factor_suite(cfg),
        "triangularity" => triangularity_suite(cfg),
        "expansion-agreement" => expansion_agreement_suite(cfg),
        "grading" => grading_suite(cfg),
        "support-bound" => support_bound_suite(cfg),
        "lehmer" => lehmer_suite(cfg),
        "monk" => monk_suite(cfg),
        "betti" => betti_suite(cfg),
        "transition" => transition_suite(cfg),
        "truncation" => truncation_suite(cfg),
        "equivariant-compat" => equivariant_compat_suite(cfg),
        "positivity" => positivity_suite(cfg),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }?;
    Ok(report)
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s, cfg)).collect()
}

fn shapes_up_to(max_n: usize) -> Vec<Composition> {
    (1..=max_n).flat_map(Composition::all_strong).collect()
}

/// Random homogeneous polynomial of the given degree with `terms` terms and
/// small nonzero integer coefficients.
pub fn random_homogeneous<R: Rng>(rng: &mut R, amb: Ambient, degree: usize, terms: usize) -> Polynomial {
    let mut out = Polynomial::zero(amb);
    for _ in 0..terms {
        let mut exps = vec![0u16; amb.len()];
        for _ in 0..degree {
            exps[rng.gen_range(0..amb.len())] += 1;
        }
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        out.add_term(Monomial::from_exponents(&exps), rat(c));
    }
    out
}

/// Random polynomial with terms of every degree up to `max_degree`.
pub fn random_polynomial<R: Rng>(rng: &mut R, amb: Ambient, max_degree: usize, terms: usize) -> Polynomial {
    let mut out = Polynomial::zero(amb);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        out = &out + &random_homogeneous(rng, amb, d, 1);
    }
    out
}

fn all_monomials(vars: usize, max_degree: usize) -> Vec<Vec<u16>> {
    fn go(i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, max_degree, &mut vec![0; vars], &mut out);
    out
}

fn lex_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("lex");
    for n in 1..=cfg.max_n.min(5) {
        let monos: Vec<Monomial> = all_monomials(n, 4).iter().map(|e| Monomial::from_exponents(e)).collect();
        for a in &monos {
            for b in &monos {
                let first = (0..n).find(|&j| a.get(j) != b.get(j));
                let brute = match first {
                    None => std::cmp::Ordering::Equal,
                    Some(j) => a.get(j).cmp(&b.get(j)),
                };
                r.check(lex_compare(a, b) == brute, || format!("lex {a:?} vs {b:?}"));
            }
        }
    }
    Ok(r)
}

fn ring_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("ring");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples.min(100) {
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(0..=4);
        let amb = Ambient::new(n, k);
        let a = random_polynomial(&mut rng, amb, 3, 4);
        let b = random_polynomial(&mut rng, amb, 3, 4);
        let c = random_polynomial(&mut rng, amb, 3, 4);
        r.check(&a + &b == &b + &a, || format!("a+b != b+a for {a}, {b}"));
        r.check(&a * &b == &b * &a, || format!("ab != ba for {a}, {b}"));
        r.check(&(&a + &b) + &c == &a + &(&b + &c), || "addition not associative".into());
        r.check(&(&a * &b) * &c == &a * &(&b * &c), || "multiplication not associative".into());
        r.check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "not distributive".into());
        if !b.is_zero() {
            r.check((&a * &b).exact_div(&b).as_ref() == Ok(&a), || format!("(ab)/b != a for {a}, {b}"));
        }
    }
    Ok(r)
}

fn divided_difference_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("divided-differences");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xd1ff);
    for _ in 0..cfg.samples.min(60) {
        let n = rng.gen_range(3..=6);
        let amb = Ambient::x_only(n);
        let f = random_polynomial(&mut rng, amb, 6, 5);
        let d = |g: &Polynomial, i: usize| g.divided_difference(i).expect("index in range");
        for i in 1..n {
            r.check(d(&d(&f, i), i).is_zero(), || format!("∂{i}∂{i} ≠ 0 on {f}"));
            let di = d(&f, i);
            r.check(di.swap_x(i).as_ref() == Ok(&di), || format!("∂{i} f not symmetric for {f}"));
            let num = &f - &f.swap_x(i).expect("index in range");
            let den = Polynomial::binomial(amb, Var::X(i), Var::X(i + 1)).expect("in range");
            r.check(num.exact_div(&den).as_ref() == Ok(&di), || format!("∂{i} disagrees with the quotient on {f}"));
            let sym = &f + &f.swap_x(i).expect("index in range");
            r.check(d(&sym, i).is_zero(), || format!("∂{i} of a symmetric polynomial is nonzero: {sym}"));
            r.check(f.swap_x(i).as_ref() != Ok(&f) || di.is_zero(), || "symmetry without vanishing".into());
            if i + 1 < n {
                let lhs = d(&d(&d(&f, i), i + 1), i);
                let rhs = d(&d(&d(&f, i + 1), i), i + 1);
                r.check(lhs == rhs, || format!("braid relation fails at {i} on {f}"));
            }
            for j in i + 2..n {
                r.check(d(&d(&f, i), j) == d(&d(&f, j), i), || format!("∂{i}, ∂{j} do not commute on {f}"));
            }
        }
    }
    Ok(r)
}

fn counting_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("counting");
    for alpha in shapes_up_to(cfg.max_n) {
        let n = alpha.size();
        let count = enumerate(&alpha, n)?.len() as u128;
        r.check(count == alpha.multinomial(), || format!("{alpha}: {count} tableaux, expected {}", alpha.multinomial()));
    }
    Ok(r)
}

fn order_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("order");
    for alpha in shapes_up_to(cfg.max_n.min(5)) {
        let fib = SpringerFiber::shared(&alpha)?;
        let ts = fib.tableaux();
        let inv: Vec<BTreeSet<(usize, usize)>> = ts.iter().map(RowStrictTableau::springer_inversions).collect();
        for i in 0..ts.len() {
            for j in 0..ts.len() {
                let by_cmp = ts[i].compare(&ts[j])?;
                let by_lex = fib.exponent(i).cmp(fib.exponent(j));
                r.check(by_cmp == i.cmp(&j) && by_lex == i.cmp(&j), || {
                    format!("{alpha}: order of {} and {} disagrees", ts[i], ts[j])
                });
                if i != j {
                    let m = ts[i].smallest_entry().expect("non-empty");
                    let (ri, rj) = (ts[i].row_of(m).expect("present"), ts[j].row_of(m).expect("present"));
                    let cases =
                        [inv[j].contains(&(m, ri)), inv[i].contains(&(m, rj)), ri == rj].iter().filter(|&&b| b).count();
                    r.check(cases == 1, || format!("{alpha}: trichotomy fails for {} and {}", ts[i], ts[j]));
                }
            }
        }
    }
    Ok(r)
}

fn eta_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("eta");
    for alpha in shapes_up_to(cfg.max_n) {
        let n = alpha.size();
        let ts = enumerate(&alpha, n)?;
        let mut total = 0;
        for row in 0..alpha.len() {
            let mut smaller = alpha.parts().to_vec();
            smaller[row] -= 1;
            let target = enumerate(&Composition::new(smaller)?, n)?;
            let images: Vec<RowStrictTableau> = ts
                .iter()
                .filter(|t| t.row_of(1) == Some(row + 1))
                .map(|t| t.eta())
                .collect::<Result<_>>()?;
            total += images.len();
            let distinct: BTreeSet<String> = images.iter().map(|t| t.to_string()).collect();
            let expected: BTreeSet<String> = target.iter().map(|t| t.to_string()).collect();
            r.check(distinct == expected && distinct.len() == images.len(), || {
                format!("{alpha}: η on row {} is not a bijection", row + 1)
            });
        }
        r.check(total == ts.len(), || format!("{alpha}: preimage counts do not add up"));
        for t in &ts {
            let mut cur = t.clone();
            for _ in 0..n {
                cur = cur.eta()?;
            }
            r.check(cur.is_empty(), || format!("{t}: not empty after {n} steps"));
        }
    }
    Ok(r)
}

fn coset_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("coset");
    for alpha in shapes_up_to(cfg.max_n.min(6)) {
        let fib = SpringerFiber::shared(&alpha)?;
        let amb = fib.ambient();
        let probe = (1..=fib.n()).fold(Polynomial::zero(amb), |acc, i| {
            let x = Polynomial::var(amb, Var::X(i)).expect("in range");
            let z = Polynomial::var(amb, Var::Z(1 + (i % fib.k()))).expect("in range");
            &acc + &(&x.pow(i as u32) * &(&x - &z))
        });
        let block = alpha.block_of_position();
        let mut seen = BTreeSet::new();
        for (j, t) in fib.tableaux().iter().enumerate() {
            let w = t.coset_rep()?;
            let minimal = (1..fib.n()).all(|p| block[p - 1] != block[p] || w.apply(p) < w.apply(p + 1));
            r.check(minimal, || format!("{t}: {w} is not increasing on blocks"));
            r.check(seen.insert(w.clone()), || format!("{alpha}: {w} repeats"));
            if j % 7 == 0 || fib.len() <= 60 {
                let a = localize(&probe, t)?;
                let b = localize_at_permutation(&probe, &w, &alpha)?;
                r.check(a == b, || format!("{t}: localization paths disagree"));
            }
        }
    }
    Ok(r)
}

fn zero_parts_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("zero-parts");
    for alpha in shapes_up_to(cfg.max_n.min(4)) {
        let n = alpha.size();
        for gap in 0..=alpha.len() {
            let mut parts = alpha.parts().to_vec();
            parts.insert(gap, 0);
            let weak = Composition::new(parts)?;
            // Extra room: content [2, n+1] inside ambient n + 1.
            for ambient in [n, n + 1] {
                let ts = enumerate(&weak, ambient)?;
                let strong = enumerate(&alpha, ambient)?;
                r.check(ts.len() == strong.len(), || format!("{weak} in n={ambient}: count differs"));
                for (t, s) in ts.iter().zip(strong.iter()) {
                    let up = t.upward_justified();
                    r.check(&up == s, || format!("{t}: justification breaks the order"));
                    r.check(t.inversion_vector() == up.inversion_vector(), || {
                        format!("{t}: inversion vector changes under justification")
                    });
                    r.check(p_polynomial(t).evaluate_z_at_zero().terms().map(|(m, _)| m.exponents()[..ambient].to_vec()).eq(
                        p_polynomial(&up).evaluate_z_at_zero().terms().map(|(m, _)| m.exponents()[..ambient].to_vec()),
                    ), || format!("{t}: ev(P) changes under justification"));
                }
            }
        }
    }
    Ok(r)
}

fn springer_basis_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("springer-basis");
    for n in 1..=cfg.max_n {
        for lambda in Composition::partitions(n) {
            let sp: BTreeSet<Vec<usize>> = springer_monomials(&lambda)?.into_iter().collect();
            let mut census = vec![0usize; n * n];
            for e in &sp {
                census[e.iter().sum::<usize>()] += 1;
            }
            for alpha in lambda.rearrangements() {
                let fib = SpringerFiber::shared(&alpha)?;
                r.check(fib.exponent_set() == sp, || format!("{alpha}: {{ev(P)}} differs from Sp{lambda}"));
                let mine = fib.degree_census();
                r.check(mine.iter().enumerate().all(|(d, &c)| census[d] == c), || {
                    format!("{alpha}: degree census {mine:?} differs")
                });
                if fib.len() <= 120 {
                    for i in 0..fib.len() {
                        let ev = fib.p_polynomial(i).evaluate_z_at_zero();
                        let e: Vec<u16> = fib.exponent(i).iter().map(|&x| x as u16).collect();
                        let mut full = e.clone();
                        full.resize(fib.ambient().len(), 0);
                        let expected =
                            Polynomial::term(fib.ambient(), Monomial::from_exponents(&full), rat(1));
                        r.check(ev == expected, || format!("{alpha}: ev(P_{}) is not x^γ", i + 1));
                    }
                }
            }
        }
    }
    Ok(r)
}

fn q_factor_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let shapes = shapes_up_to(cfg.max_n.min(6));
    let reports: Vec<SuiteReport> = shapes
        .par_iter()
        .map(|alpha| {
            let mut r = SuiteReport::new("q-factor");
            for t in enumerate(alpha, alpha.size())? {
                let lhs = &q_factor(&t)? * &p_polynomial(&t.eta()?);
                let rhs = p_polynomial(&t);
                // Compare in the ambient of t (η keeps the number of rows).
                r.check(lhs == rhs, || format!("{t}: P ≠ Q·P(η)"));
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut r = SuiteReport::new("q-factor");
    for x in reports {
        r.absorb(x);
    }
    Ok(r)
}

fn triangularity_for(alpha: &Composition) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("triangularity");
    let fib = SpringerFiber::shared(alpha)?;
    let rows: Vec<Vec<Polynomial>> = (0..fib.len())
        .into_par_iter()
        .map(|i| (0..fib.len()).map(|j| fib.localize(fib.p_polynomial(i), j)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for i in 0..fib.len() {
        for j in 0..fib.len() {
            let v = &rows[i][j];
            if j < i {
                r.check(v.is_zero(), || format!("{alpha}: φ_{}(P_{}) ≠ 0", j + 1, i + 1));
            } else if j == i {
                r.check(!v.is_zero(), || format!("{alpha}: φ_{}(P_{}) = 0", j + 1, i + 1));
            }
            r.check(*v == fib.localization_entry(i, j), || format!("{alpha}: factored entry ({}, {}) disagrees", i + 1, j + 1));
        }
    }
    Ok(r)
}

fn triangularity_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("triangularity");
    let mut shapes = shapes_up_to(cfg.max_n.min(5));
    if cfg.max_n >= 6 {
        shapes.push(Composition::strong(vec![2, 2, 2])?);
        shapes.push(Composition::strong(vec![3, 3])?);
    }
    for alpha in shapes {
        r.absorb(triangularity_for(&alpha)?);
    }
    Ok(r)
}

/// Determinant formula against back-substitution on random homogeneous
/// inputs; also checks reconstruction.
pub fn expansion_agreement_for(alpha: &Composition, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("expansion-agreement");
    let fib = SpringerFiber::shared(alpha)?;
    let max_degree = if fib.n() >= 5 { 2 } else { 3 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inputs: Vec<(usize, Polynomial)> = (0..samples)
        .map(|_| {
            let d = rng.gen_range(0..=max_degree);
            let terms = rng.gen_range(1..=3);
            (d, random_homogeneous(&mut rng, fib.ambient(), d, terms))
        })
        .collect();
    let outcomes: Vec<Result<(bool, bool, bool)>> = inputs
        .par_iter()
        .map(|(d, f)| {
            let back = fib.expand_back_substitution(f)?;
            let det = fib.expand_determinant(f)?;
            let rebuilt = fib.equal_in_quotient(&back.recombine(&fib), f)?;
            Ok((back == det, rebuilt, grading_violation(&fib, &back, *d).is_none()))
        })
        .collect();
    for ((_, f), out) in inputs.iter().zip(outcomes) {
        match out {
            Ok((agree, rebuilt, graded)) => {
                r.check(agree, || format!("{alpha}: methods disagree on {f}"));
                r.check(rebuilt, || format!("{alpha}: recombination differs from {f}"));
                r.check(graded, || format!("{alpha}: coefficients of {f} have the wrong degree"));
            }
            Err(e) => r.check(false, || format!("{alpha}: {f}: {e}")),
        }
    }
    Ok(r)
}

fn expansion_agreement_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("expansion-agreement");
    for (i, alpha) in shapes_up_to(cfg.max_n.min(5)).iter().enumerate() {
        r.absorb(expansion_agreement_for(alpha, cfg.samples, cfg.seed.wrapping_add(i as u64))?);
    }
    Ok(r)
}

fn grading_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("grading");
    for alpha in shapes_up_to(cfg.max_n.min(4)) {
        let fib = SpringerFiber::shared(&alpha)?;
        for e in all_monomials(fib.n(), 3) {
            let mut full = e.clone();
            full.resize(fib.ambient().len(), 0);
            let m: usize = e.iter().map(|&x| x as usize).sum();
            let f = Polynomial::term(fib.ambient(), Monomial::from_exponents(&full), rat(1));
            let exp = fib.expand_back_substitution(&f)?;
            r.check(grading_violation(&fib, &exp, m).is_none(), || format!("{alpha}: x^{e:?} violates the grading"));
        }
    }
    Ok(r)
}

fn support_bound_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let shapes = shapes_up_to(cfg.max_n.min(6));
    let reports: Vec<SuiteReport> = shapes
        .par_iter()
        .map(|alpha| {
            let mut r = SuiteReport::new("support-bound");
            let fib = SpringerFiber::shared(alpha)?;
            let n = fib.n();
            for e in all_monomials(n, 4) {
                let f = Polynomial::term(Ambient::x_only(n), Monomial::from_exponents(&e), rat(1));
                let proj = fib.project_polynomial(&f)?;
                let delta: Vec<usize> = e.iter().map(|&x| x as usize).collect();
                for (i, ex, _) in proj.terms() {
                    r.check(ex >= &delta, || format!("{alpha}: π₀(x^{delta:?}) hits x^{ex:?} (tableau {})", i + 1));
                }
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut r = SuiteReport::new("support-bound");
    for x in reports {
        r.absorb(x);
    }
    // Symbolic route on the smaller shapes.
    for alpha in shapes_up_to(cfg.max_n.min(4)) {
        let fib = SpringerFiber::shared(&alpha)?;
        let n = fib.n();
        for e in all_monomials(n - 1, 3) {
            let delta: Vec<usize> = e.iter().map(|&x| x as usize).collect();
            let Ok(sym) = fib.project_monomial(&delta) else {
                continue;
            };
            let mut full = e.clone();
            full.push(0);
            let f = Polynomial::term(Ambient::x_only(n), Monomial::from_exponents(&full), rat(1));
            r.check(fib.project_polynomial(&f)? == sym, || format!("{alpha}: π₀(x^{delta:?}) depends on the route"));
            let p = fib.build_p_delta(&delta)?;
            let mut padded = delta.clone();
            padded.resize(n, 0);
            let below = fib.exponents().partition_point(|x| x < &padded);
            for j in 0..below {
                r.check(fib.localize(&p, j)?.is_zero(), || format!("{alpha}: P_δ for {delta:?} survives at {}", j + 1));
            }
        }
    }
    Ok(r)
}

fn lehmer_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("lehmer");
    for n in 1..=cfg.max_n.min(6) {
        let perms = Permutation::all(n);
        let results: Vec<(Permutation, bool, bool)> = perms
            .par_iter()
            .map(|w| {
                let s = schubert_polynomial(w);
                let code = lehmer_code(w);
                let (m, c) = s.trailing_term().expect("Schubert polynomials are nonzero");
                let e: Vec<usize> = m.exponents().iter().map(|&x| x as usize).collect();
                let positive = s.terms().all(|(_, c)| *c > num_traits::Zero::zero());
                (w.clone(), e == code.entries() && *c == rat(1), positive && code.to_permutation() == *w)
            })
            .collect();
        for (w, minimal, positive) in results {
            r.check(minimal, || format!("{w}: lex-minimal monomial is not x^code"));
            r.check(positive, || format!("{w}: not monomial-positive or code round trip fails"));
        }
    }
    Ok(r)
}

fn monk_suite(_cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("monk");
    for u in Permutation::all(4) {
        for k in 1..=3 {
            r.check(monk_check(&u, k)?, || format!("Monk fails for {u}, k = {k}"));
        }
    }
    let u = Permutation::new(vec![1, 4, 3, 6, 2, 5])?;
    r.check(monk_check(&u, 2)?, || "Monk fails for [1,4,3,6,2,5], k = 2".into());
    Ok(r)
}

fn betti_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("betti");
    for alpha in shapes_up_to(cfg.max_n) {
        let fib = SpringerFiber::shared(&alpha)?;
        let perms = w_alpha_set(&alpha)?;
        let mut census = vec![0; fib.max_degree() + 1];
        for w in &perms {
            if w.length() < census.len() {
                census[w.length()] += 1;
            } else {
                census.push(usize::MAX);
            }
        }
        r.check(census == fib.degree_census(), || format!("{alpha}: length census {census:?}"));
        let distinct: BTreeSet<&Permutation> = perms.iter().collect();
        r.check(distinct.len() == perms.len(), || format!("{alpha}: W(α) has repeats"));
    }
    Ok(r)
}

fn transition_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("transition");
    for alpha in shapes_up_to(cfg.max_n.min(6)) {
        let outcome = schubert_transition_matrix(&alpha);
        r.check(outcome.is_ok(), || format!("{alpha}: {}", outcome.as_ref().err().map(ToString::to_string).unwrap_or_default()));
    }
    Ok(r)
}

fn truncation_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("truncation");
    for alpha in shapes_up_to(cfg.max_n.min(5)) {
        let fib = SpringerFiber::shared(&alpha)?;
        for w in Permutation::all(fib.n()).into_iter().filter(|w| w.length() > fib.max_degree()) {
            let img = fib.project_polynomial(&schubert_polynomial(&w))?;
            r.check(img.is_zero(), || format!("{alpha}: π₀(𝔖_{w}) ≠ 0 beyond the top degree"));
        }
    }
    Ok(r)
}

fn equivariant_compat_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let shapes = shapes_up_to(cfg.max_n.min(5));
    let reports: Vec<SuiteReport> = shapes
        .par_iter()
        .map(|alpha| {
            let mut r = SuiteReport::new("equivariant-compat");
            let fib = SpringerFiber::shared(alpha)?;
            for w in Permutation::all(fib.n()).into_iter().filter(|w| w.length() <= 3) {
                let eq = equivariant_schubert_expansion(&w, alpha)?;
                let ord = fib.project_polynomial(&schubert_polynomial(&w))?;
                r.check(eq.evaluate_at_zero(&fib) == ord, || format!("{alpha}: ev of the equivariant image of {w} differs"));
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut r = SuiteReport::new("equivariant-compat");
    for x in reports {
        r.absorb(x);
    }
    Ok(r)
}

/// Shapes where positivity is known: `(n)`, `(n−1, 1)` and `(1, …, 1)`.
pub fn positivity_known(alpha: &Composition) -> bool {
    let p = alpha.parts();
    let n = alpha.size();
    p.len() == 1 || p == [n - 1, 1] || p.iter().all(|&x| x == 1)
}

fn positivity_suite(cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("positivity");
    for alpha in shapes_up_to(cfg.max_n.min(5)) {
        let fib = SpringerFiber::shared(&alpha)?;
        let rep = positivity_scan(&alpha, fib.max_degree())?;
        if positivity_known(&alpha) {
            r.check(rep.is_empty(), || format!("{alpha}: negative coefficient in a known-positive case"));
        }
        r.notes.push(format!(
            "{alpha}: {} permutations, {} negative coefficients",
            rep.permutations_checked,
            rep.negatives.len()
        ));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(run_suite("nope", &VerifyConfig::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig { max_n: 3, seed: 1, samples: 5 };
        for name in SUITES {
            let rep = run_suite(name, &cfg).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}
