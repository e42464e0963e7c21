//! Schubert polynomials and their images in the cohomology of Springer fibers.
//!
//! `𝔖_{w₀} = x₁^{n−1}x₂^{n−2}⋯x_{n−1}` and `𝔖_w = ∂_i 𝔖_{w s_i}` whenever
//! `w(i) < w(i+1)`. Double Schubert polynomials start from
//! `∏_{i+j≤n} (x_i − y_j)` and use the same divided differences in `x`.
//! Both families are stable under `S_m ⊂ S_n`, so they are computed for the
//! trimmed permutation and embedded.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::expand::{EquivariantExpansion, OrdinaryExpansion};
use crate::permutation::Permutation;
use crate::poly::{Ambient, Monomial, Polynomial, Var};
use crate::springer::{ExponentVector, SpringerFiber};
use crate::tableaux::Composition;
use crate::Rational;

/// `γ_k = #{j > k : w(j) < w(k)}`, with `0 ≤ γ_k ≤ n − k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LehmerCode(Vec<usize>);

impl LehmerCode {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        for (k, &g) in entries.iter().enumerate() {
            if g > n - k - 1 {
                return Err(Error::InvalidLehmerCode(format!(
                    "entry {g} at position {} exceeds {}",
                    k + 1,
                    n - k - 1
                )));
            }
        }
        Ok(LehmerCode(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `w_1 w_2 ⋯ w_{n−1}` with `w_k = s_{k+γ_k−1} ⋯ s_{k+1} s_k`, as a list
    /// of simple reflection indices.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        for (k0, &g) in self.0.iter().enumerate() {
            let k = k0 + 1;
            word.extend((k..k + g).rev());
        }
        word
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut w = Permutation::identity(self.0.len());
        for a in self.reduced_word() {
            w = w.mul_simple_right(a).expect("index bounded by the code");
        }
        w
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

pub fn lehmer_code(w: &Permutation) -> LehmerCode {
    LehmerCode(w.lehmer_code())
}

pub fn permutation_from_code(gamma: &[usize]) -> Result<Permutation> {
    Ok(LehmerCode::new(gamma.to_vec())?.to_permutation())
}

/// Reduced word `s_{a_1} s_{a_2} ⋯` written as `s4s3s6s5s7` (`e` if empty).
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|a| format!("s{a}")).collect()
}

type Memo = Mutex<HashMap<Permutation, Polynomial>>;

fn single_memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

fn double_memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Runs the descending chain from `w₀` in `S_{w.size()}`, with memoization.
fn chain(w: &Permutation, memo: &Memo, seed: impl Fn(usize) -> Polynomial) -> Polynomial {
    let m = w.size();
    let longest = Permutation::longest(m);
    // Climb w → w s_i → … until a cached permutation or w₀.
    let mut steps: Vec<(Permutation, usize)> = Vec::new();
    let mut cur = w.clone();
    let mut top = loop {
        if let Some(p) = memo.lock().expect("memo poisoned").get(&cur) {
            break p.clone();
        }
        if cur == longest {
            let p = seed(m);
            memo.lock().expect("memo poisoned").insert(cur.clone(), p.clone());
            break p;
        }
        let i = (1..m).find(|&i| cur.apply(i) < cur.apply(i + 1)).expect("w ≠ w₀ has an ascent");
        let up = cur.mul_simple_right(i).expect("ascent index in range");
        steps.push((cur, i));
        cur = up;
    };
    let mut memo = memo.lock().expect("memo poisoned");
    for (perm, i) in steps.into_iter().rev() {
        top = top.divided_difference(i).expect("ascent index in range");
        memo.insert(perm, top.clone());
    }
    top
}

fn single_seed(m: usize) -> Polynomial {
    let amb = Ambient::x_only(m);
    let exps: Vec<u16> = (0..m).map(|i| (m - 1 - i) as u16).collect();
    Polynomial::term(amb, Monomial::from_exponents(&exps), Rational::one())
}

fn double_seed(m: usize) -> Polynomial {
    let amb = Ambient::with_y(m, m, 0);
    let mut out = Polynomial::one(amb);
    for i in 1..m {
        for j in 1..=m - i {
            out = &out * &Polynomial::binomial(amb, Var::X(i), Var::Y(j)).expect("in range");
        }
    }
    out
}

/// `𝔖_w(x)` in `x₁..xₙ`, `n = w.size()`.
pub fn schubert_polynomial(w: &Permutation) -> Polynomial {
    let t = w.trimmed();
    chain(&t, single_memo(), single_seed)
        .embed(Ambient::x_only(w.size()))
        .expect("embedding into a larger ambient")
}

/// `𝔖_w(y, x)` in the ambient with `n` x-variables and `n` y-variables.
pub fn double_schubert_polynomial(w: &Permutation) -> Polynomial {
    let t = w.trimmed();
    let n = w.size();
    chain(&t, double_memo(), double_seed)
        .embed(Ambient::with_y(n, n, 0))
        .expect("embedding into a larger ambient")
}

/// `i*`: `y_p ↦ z_j` where position `p` lies in the `j`-th block of `α`.
pub fn apply_istar(f: &Polynomial, alpha: &Composition) -> Result<Polynomial> {
    let n = alpha.size();
    let amb = f.ambient();
    let target = Ambient::new(n, alpha.len());
    if amb.nx() != n || (amb.ny() != 0 && amb.ny() != n) {
        return Err(Error::ShapeMismatch(format!("{amb}"), format!("{alpha}")));
    }
    if amb.ny() == 0 {
        return f.embed(target);
    }
    let block = alpha.block_of_position();
    f.rename(target, |v| match v {
        Var::Y(p) => Some(Var::Z(block[p - 1])),
        other => Some(other),
    })
}

/// `W(α) = {u_Υ}`: permutations whose Lehmer codes are the inversion vectors.
pub fn w_alpha_set(alpha: &Composition) -> Result<Vec<Permutation>> {
    let fib = SpringerFiber::shared(alpha)?;
    fib.exponents().iter().map(|e| permutation_from_code(e)).collect()
}

/// `π₀(f)` for `f` in `x` alone.
pub fn project_polynomial(f: &Polynomial, alpha: &Composition) -> Result<OrdinaryExpansion> {
    SpringerFiber::shared(alpha)?.project_polynomial(f)
}

/// `π₀(𝔖_w)`; `w` may lie in a smaller symmetric group.
pub fn project_schubert(w: &Permutation, alpha: &Composition) -> Result<OrdinaryExpansion> {
    let n = alpha.size();
    let w = w.embed(n)?;
    project_polynomial(&schubert_polynomial(&w), alpha)
}

/// Rows `π₀(𝔖_w)` for `w ∈ W(α)`, columns `Sp_λ`, both in total order.
/// Fails unless the matrix is unitriangular.
pub fn schubert_transition_matrix(alpha: &Composition) -> Result<Vec<Vec<Rational>>> {
    let fib = SpringerFiber::shared(alpha)?;
    let perms = w_alpha_set(alpha)?;
    let rows: Vec<Vec<Rational>> = perms
        .par_iter()
        .map(|w| fib.project_polynomial(&schubert_polynomial(w)).map(|e| e.coefficients().to_vec()))
        .collect::<Result<_>>()?;
    for (i, row) in rows.iter().enumerate() {
        if !row[i].is_one() {
            return Err(Error::TriangularityViolation { row: i + 1, col: i + 1 });
        }
        if let Some(j) = (0..i).find(|&j| !row[j].is_zero()) {
            return Err(Error::TriangularityViolation { row: i + 1, col: j + 1 });
        }
    }
    Ok(rows)
}

/// Expansion of `i*(𝔖_w(y, x))` in the basis `{P_Υ}`.
pub fn equivariant_schubert_expansion(w: &Permutation, alpha: &Composition) -> Result<EquivariantExpansion> {
    let n = alpha.size();
    let f = apply_istar(&double_schubert_polynomial(&w.embed(n)?), alpha)?;
    SpringerFiber::shared(alpha)?.expand_back_substitution(&f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeCoefficient {
    pub permutation: Permutation,
    pub tableau: usize,
    pub exponent: ExponentVector,
    pub coefficient: Rational,
}

/// Outcome of scanning `π₀(𝔖_w)` for negative coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub alpha: Composition,
    pub max_length: usize,
    pub permutations_checked: usize,
    pub negatives: Vec<NegativeCoefficient>,
}

impl PositivityReport {
    pub fn is_empty(&self) -> bool {
        self.negatives.is_empty()
    }
}

/// Expands `π₀(𝔖_w)` for every `w ∈ S_n` with `ℓ(w) ≤ max_length` and
/// lists each negative coefficient. Ordered by `w` (lex) then tableau.
pub fn positivity_scan(alpha: &Composition, max_length: usize) -> Result<PositivityReport> {
    let fib = SpringerFiber::shared(alpha)?;
    let perms: Vec<Permutation> =
        Permutation::all(fib.n()).into_iter().filter(|w| w.length() <= max_length).collect();
    let found: Vec<Vec<NegativeCoefficient>> = perms
        .par_iter()
        .map(|w| {
            let e = fib.project_polynomial(&schubert_polynomial(w))?;
            Ok(e.terms()
                .filter(|(_, _, c)| **c < Rational::zero())
                .map(|(i, ex, c)| NegativeCoefficient {
                    permutation: w.clone(),
                    tableau: i,
                    exponent: ex.clone(),
                    coefficient: c.clone(),
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(PositivityReport {
        alpha: alpha.clone(),
        max_length,
        permutations_checked: perms.len(),
        negatives: found.into_iter().flatten().collect(),
    })
}

/// The two sums of Monk's rule for `x_k 𝔖_u`, computed in `S_{n+1}`:
/// `(j > k covers u t_{kj}, j < k covers u t_{jk})`.
pub fn monk_terms(u: &Permutation, k: usize) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    let big = u.embed(u.size() + 1)?;
    let m = big.size();
    if k == 0 || k >= m {
        return Err(Error::IndexOutOfRange { index: k, n: u.size() });
    }
    let len = big.length();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for j in 1..=m {
        if j == k {
            continue;
        }
        let v = big.compose(&Permutation::transposition(m, k, j)?)?;
        if v.length() == len + 1 {
            if j > k {
                plus.push(v);
            } else {
                minus.push(v);
            }
        }
    }
    Ok((plus, minus))
}

/// Checks `x_k 𝔖_u = Σ_{j>k} 𝔖_{u t_{kj}} − Σ_{j<k} 𝔖_{u t_{jk}}`.
pub fn monk_check(u: &Permutation, k: usize) -> Result<bool> {
    let (plus, minus) = monk_terms(u, k)?;
    let m = u.size() + 1;
    let amb = Ambient::x_only(m);
    let lhs = &Polynomial::var(amb, Var::X(k))? * &schubert_polynomial(&u.embed(m)?);
    let mut rhs = Polynomial::zero(amb);
    for v in &plus {
        rhs = &rhs + &schubert_polynomial(v);
    }
    for v in &minus {
        rhs = &rhs - &schubert_polynomial(v);
    }
    Ok(lhs == rhs)
}

/// Linear relations among `π₀(𝔖_w)` for `ℓ(w) = degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    /// Permutations of the given length, ordered by Lehmer code.
    pub permutations: Vec<Permutation>,
    pub images: Vec<OrdinaryExpansion>,
    /// Kernel basis in reduced row echelon form; entry `i` pairs with
    /// `permutations[i]`.
    pub relations: Vec<Vec<Rational>>,
}

pub fn linear_relations(alpha: &Composition, degree: usize) -> Result<RelationReport> {
    let fib = SpringerFiber::shared(alpha)?;
    let mut perms: Vec<Permutation> =
        Permutation::all(fib.n()).into_iter().filter(|w| w.length() == degree).collect();
    perms.sort_by_key(Permutation::lehmer_code);
    let images: Vec<OrdinaryExpansion> = perms
        .par_iter()
        .map(|w| fib.project_polynomial(&schubert_polynomial(w)))
        .collect::<Result<_>>()?;
    // c·M = 0 with rows of M the images: the null space of Mᵀ.
    let cols = perms.len();
    let transpose: Vec<Vec<Rational>> =
        (0..fib.len()).map(|t| images.iter().map(|e| e.coefficients()[t].clone()).collect()).collect();
    let relations = null_space(transpose, cols);
    Ok(RelationReport { permutations: perms, images, relations })
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(m: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

/// Basis of `{c : A c = 0}`, itself in reduced row echelon form.
pub fn null_space(mut a: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    let pivots = rref(&mut a, cols);
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -a[row][free].clone();
        }
        basis.push(v);
    }
    rref(&mut basis, cols);
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn xpoly(n: usize, terms: &[&[u16]]) -> Polynomial {
        let amb = Ambient::x_only(n);
        terms
            .iter()
            .fold(Polynomial::zero(amb), |acc, e| &acc + &Polynomial::term(amb, Monomial::from_exponents(e), rat(1)))
    }

    #[test]
    fn lehmer_codes() {
        assert_eq!(lehmer_code(&p(&[1, 4, 3, 2])).entries(), &[0, 2, 1, 0]);
        assert_eq!(lehmer_code(&p(&[1, 5, 3, 6, 2, 4])).entries(), &[0, 3, 1, 2, 0, 0]);
        let code = LehmerCode::new(vec![0, 0, 2, 0, 2, 0, 1, 0]).unwrap();
        assert_eq!(word_string(&code.reduced_word()), "s4s3s6s5s7");
        assert_eq!(permutation_from_code(&[0, 0, 0]).unwrap(), Permutation::identity(3));
        for w in Permutation::all(5) {
            assert_eq!(lehmer_code(&w).to_permutation(), w);
        }
        assert!(permutation_from_code(&[0, 0, 1]).is_err());
    }

    #[test]
    fn schubert_examples() {
        let s = schubert_polynomial(&p(&[1, 4, 3, 2]));
        assert_eq!(s, xpoly(4, &[&[0, 2, 1, 0], &[2, 0, 1, 0], &[2, 1, 0, 0], &[1, 1, 1, 0], &[1, 2, 0, 0]]));
        assert_eq!(schubert_polynomial(&Permutation::identity(4)), Polynomial::one(Ambient::x_only(4)));
        let s3 = Permutation::simple(4, 3).unwrap();
        assert_eq!(schubert_polynomial(&s3), xpoly(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]));
    }

    #[test]
    fn double_schubert_examples() {
        let s3 = Permutation::simple(4, 3).unwrap();
        let d = double_schubert_polynomial(&s3);
        let amb = d.ambient();
        let v = |x: Var| Polynomial::var(amb, x).unwrap();
        let expected = [v(Var::X(1)), v(Var::X(2)), v(Var::X(3))]
            .iter()
            .fold(Polynomial::zero(amb), |a, b| &a + b);
        let expected = &(&(&expected - &v(Var::Y(1))) - &v(Var::Y(2))) - &v(Var::Y(3));
        assert_eq!(d, expected);
        for w in Permutation::all(4) {
            let at_zero = double_schubert_polynomial(&w).evaluate_y_at_zero();
            let single = schubert_polynomial(&w).embed(Ambient::with_y(4, 4, 0)).unwrap();
            assert_eq!(at_zero, single);
        }
        let alpha = comp(&[2, 2]);
        let img = apply_istar(&d, &alpha).unwrap();
        let a = img.ambient();
        let z = |i| Polynomial::var(a, Var::Z(i)).unwrap();
        let x = |i| Polynomial::var(a, Var::X(i)).unwrap();
        let f = &(&(&(&x(1) + &x(2)) + &x(3)) - &z(1).scale(&rat(2))) - &z(2);
        assert_eq!(img, f);
    }

    #[test]
    fn w_alpha_for_two_two() {
        let got: Vec<String> = w_alpha_set(&comp(&[2, 2]))
            .unwrap()
            .iter()
            .map(|w| word_string(&lehmer_code(w).reduced_word()))
            .collect();
        assert_eq!(got, ["e", "s3", "s2", "s1", "s1s3", "s1s2"]);
        assert_eq!(w_alpha_set(&comp(&[3])).unwrap(), vec![Permutation::identity(3)]);
    }

    #[test]
    fn monk_printed_instance() {
        let u = p(&[1, 4, 3, 6, 2, 5]);
        let (plus, minus) = monk_terms(&u, 2).unwrap();
        let plus: Vec<_> = plus.iter().map(|w| w.trimmed()).collect();
        let minus: Vec<_> = minus.iter().map(|w| w.trimmed()).collect();
        assert_eq!(plus, vec![p(&[1, 6, 3, 4, 2, 5]), p(&[1, 5, 3, 6, 2, 4])]);
        assert_eq!(minus, vec![p(&[4, 1, 3, 6, 2, 5])]);
        assert!(monk_check(&u, 2).unwrap());
        assert!(monk_check(&Permutation::identity(1), 1).unwrap());
    }

    #[test]
    fn relations_for_two_two() {
        let rep = linear_relations(&comp(&[2, 2]), 2).unwrap();
        let words: Vec<String> =
            rep.permutations.iter().map(|w| word_string(&lehmer_code(w).reduced_word())).collect();
        assert_eq!(words, ["s2s3", "s3s2", "s1s3", "s1s2", "s2s1"]);
        let r = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        assert_eq!(rep.relations, vec![r(&[1, 0, 0, 0, 0]), r(&[0, 1, 0, -1, 0]), r(&[0, 0, 0, 0, 1])]);
        assert!(linear_relations(&comp(&[1, 1, 1]), 2).unwrap().relations.is_empty());
        let high = linear_relations(&comp(&[2, 2]), 3).unwrap();
        assert_eq!(high.relations.len(), high.permutations.len());
    }
}
