//! Expansions in the basis of equivariant Springer monomials.
//!
//! Every `F ∈ ℚ[z, x]` can be written as `F ≡ Σ C_Υ P_Υ` modulo the ideal of
//! the fixed points, with `C_Υ ∈ ℚ[z]`. Writing `v_j = φ_{w_j}(F)` and
//! `P̄ = [φ_{w_j}(P_i)]`, the coefficients solve `c·P̄ = v`, and `P̄` is upper
//! triangular. Two independent solvers are provided:
//!
//! * back-substitution over `ℚ[z]`, using only exact divisions;
//! * the determinant formula `C_k = (−1)^{k−1} det[a(i, j+1)] / φ_{w_k}(P_k)`,
//!   evaluated over rational functions.
//!
//! Both work one homogeneous component at a time. If `F` is homogeneous of
//! degree `m`, then `C_Υ` is homogeneous of `z`-degree `m − deg Υ`, so only
//! tableaux of degree `≤ m` take part.
//!
//! The ordinary projection `π₀` only needs the coefficients at tableaux of
//! degree exactly `m`, which are constants; [`SpringerFiber::project_polynomial`]
//! computes them after specializing `z_r ↦ r − 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{determinant, Ambient, Monomial, Polynomial, RationalFunction, Var};
use crate::springer::{ExponentVector, SpringerFiber};
use crate::tableaux::Composition;
use crate::Rational;

/// `F ≡ Σ C_Υ P_Υ`, coefficients indexed by the total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantExpansion {
    alpha: Composition,
    coefficients: Vec<Polynomial>,
}

impl EquivariantExpansion {
    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &Polynomial {
        &self.coefficients[i]
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.coefficients[i].is_zero()).collect()
    }

    /// `Σ C_Υ P_Υ` as a polynomial.
    pub fn recombine(&self, fiber: &SpringerFiber) -> Polynomial {
        let mut out = Polynomial::zero(fiber.ambient());
        for i in self.support() {
            out = &out + &(&self.coefficients[i] * fiber.p_polynomial(i));
        }
        out
    }

    /// Applies `ev` (all `z ↦ 0`): `Σ ev(C_Υ) x^Υ`.
    pub fn evaluate_at_zero(&self, fiber: &SpringerFiber) -> OrdinaryExpansion {
        OrdinaryExpansion {
            alpha: self.alpha.clone(),
            exponents: fiber.exponents().to_vec(),
            coefficients: self.coefficients.iter().map(Polynomial::constant_term).collect(),
        }
    }
}

/// `Σ c_Υ x^Υ` in the Springer monomial basis, indexed by the total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryExpansion {
    alpha: Composition,
    exponents: Vec<ExponentVector>,
    coefficients: Vec<Rational>,
}

impl OrdinaryExpansion {
    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn lambda(&self) -> Composition {
        self.alpha.underlying_partition()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn exponents(&self) -> &[ExponentVector] {
        &self.exponents
    }

    /// Nonzero terms `(index, x^Υ, c_Υ)` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &ExponentVector, &Rational)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i, &self.exponents[i], c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// `Σ c_Υ x^Υ` as a polynomial in `x₁..xₙ`.
    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.alpha.size();
        let amb = Ambient::x_only(n);
        Polynomial::from_terms(
            amb,
            self.terms().map(|(_, e, c)| {
                let exps: Vec<u16> = e.iter().map(|&x| x as u16).collect();
                (Monomial::from_exponents(&exps), c.clone())
            }),
        )
    }
}

impl fmt::Display for OrdinaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Restriction of `P̄` to the tableaux of degree `≤ m`.
#[derive(Debug)]
pub(crate) struct SymbolicSystem {
    indices: Vec<usize>,
    /// `upper[a][b] = φ_{w_{s_b}}(P_{s_a})`, zero below the diagonal.
    upper: Vec<Vec<Polynomial>>,
    /// Linear factors `z_r − z_b` of the diagonal entries.
    diag: Vec<Vec<Polynomial>>,
}

/// Cofactors for the determinant formula on the tableaux of degree `≤ m`.
#[derive(Debug)]
pub(crate) struct DeterminantPlan {
    /// `minors[b][c]`: the minor of `A_{b+1}` without its first row and
    /// column `c`.
    minors: Vec<Vec<RationalFunction>>,
}

/// `P̄` specialized at `z_r = r − 1`.
#[derive(Debug)]
pub(crate) struct NumericLocalization {
    dense: Option<Vec<i128>>,
}

const DENSE_LIMIT: usize = 1024;

/// Determinant intermediates of a single expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantTrace {
    /// `v_j = φ_{w_j}(F)`.
    pub localizations: Vec<Polynomial>,
    /// `D_k`, the coefficients with respect to `Q_k = P_k / φ_{w_k}(P_k)`.
    pub d: Vec<Polynomial>,
    pub expansion: EquivariantExpansion,
}

fn specialization(r: usize) -> i128 {
    r as i128 - 1
}

impl SpringerFiber {
    fn zero_expansion(&self) -> EquivariantExpansion {
        EquivariantExpansion {
            alpha: self.alpha().clone(),
            coefficients: vec![Polynomial::zero(self.ambient()); self.len()],
        }
    }

    pub(crate) fn system(&self, m: usize) -> Arc<SymbolicSystem> {
        if let Some(s) = self.systems.lock().expect("cache poisoned").get(&m) {
            return Arc::clone(s);
        }
        let indices = self.indices_up_to_degree(m);
        let p = indices.len();
        let mut upper = vec![vec![Polynomial::zero(self.ambient()); p]; p];
        let mut diag = Vec::with_capacity(p);
        for a in 0..p {
            for b in a..p {
                upper[a][b] = self.localization_entry(indices[a], indices[b]);
            }
            let factors = self
                .localization_factors(indices[a], indices[a])
                .expect("diagonal entries never vanish");
            diag.push(factors.iter().map(|&(r, s)| self.z_diff(r, s)).collect());
        }
        let sys = Arc::new(SymbolicSystem { indices, upper, diag });
        let mut map = self.systems.lock().expect("cache poisoned");
        Arc::clone(map.entry(m).or_insert(sys))
    }

    pub(crate) fn plan(&self, m: usize) -> Result<Arc<DeterminantPlan>> {
        if let Some(s) = self.plans.lock().expect("cache poisoned").get(&m) {
            return Ok(Arc::clone(s));
        }
        let sys = self.system(m);
        let p = sys.indices.len();
        let amb = self.ambient();
        // a(i, j) = φ_{w_j}(P_i) / φ_{w_i}(P_i)
        let mut normalized = vec![vec![RationalFunction::zero(amb); p]; p];
        for a in 0..p {
            for b in 0..p {
                if !sys.upper[a][b].is_zero() {
                    normalized[a][b] = RationalFunction::with_factors(sys.upper[a][b].clone(), sys.diag[a].clone())?;
                }
            }
        }
        let mut minors = Vec::with_capacity(p);
        for b in 0..p {
            let mut row = Vec::with_capacity(b + 1);
            for c in 0..=b {
                let sub: Vec<Vec<RationalFunction>> = (0..b)
                    .map(|a| (0..=b).filter(|&col| col != c).map(|col| normalized[a][col].clone()).collect())
                    .collect();
                row.push(determinant(amb, &sub)?);
            }
            minors.push(row);
        }
        let plan = Arc::new(DeterminantPlan { minors });
        let mut map = self.plans.lock().expect("cache poisoned");
        Ok(Arc::clone(map.entry(m).or_insert(plan)))
    }

    /// `[φ_{w_1}(F), …, φ_{w_N}(F)]`.
    pub fn localization_vector(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let f = self.lift(f)?;
        (0..self.len()).map(|j| self.localize(&f, j)).collect()
    }

    /// Back-substitution on each homogeneous component.
    pub fn expand_back_substitution(&self, f: &Polynomial) -> Result<EquivariantExpansion> {
        let f = self.lift(f)?;
        let mut out = self.zero_expansion();
        for (m, fm) in f.homogeneous_components() {
            let sys = self.system(m);
            let p = sys.indices.len();
            let v: Vec<Polynomial> = sys.indices.iter().map(|&j| self.localize(&fm, j)).collect::<Result<_>>()?;
            let mut c: Vec<Polynomial> = Vec::with_capacity(p);
            for b in 0..p {
                let mut acc = v[b].clone();
                for a in 0..b {
                    if !c[a].is_zero() && !sys.upper[a][b].is_zero() {
                        acc = &acc - &(&c[a] * &sys.upper[a][b]);
                    }
                }
                for factor in &sys.diag[b] {
                    acc = acc.exact_div(factor)?;
                }
                c.push(acc);
            }
            for (b, cb) in c.into_iter().enumerate() {
                let i = sys.indices[b];
                out.coefficients[i] = &out.coefficients[i] + &cb;
            }
        }
        Ok(out)
    }

    /// The determinant formula, with its intermediates.
    pub fn expand_determinant_traced(&self, f: &Polynomial) -> Result<DeterminantTrace> {
        let f = self.lift(f)?;
        let amb = self.ambient();
        let mut expansion = self.zero_expansion();
        let mut d = vec![Polynomial::zero(amb); self.len()];
        for (m, fm) in f.homogeneous_components() {
            let sys = self.system(m);
            let plan = self.plan(m)?;
            let v: Vec<Polynomial> = sys.indices.iter().map(|&j| self.localize(&fm, j)).collect::<Result<_>>()?;
            for b in 0..sys.indices.len() {
                // Laplace expansion of det A_{b+1} along its first row (the v's).
                let mut det = RationalFunction::zero(amb);
                for c in 0..=b {
                    if v[c].is_zero() || plan.minors[b][c].is_zero() {
                        continue;
                    }
                    let term = plan.minors[b][c].mul_polynomial(&v[c])?;
                    det = if c % 2 == 0 { det.add(&term)? } else { det.sub(&term)? };
                }
                let dk = if b % 2 == 0 { det } else { det.neg() };
                let ck = RationalFunction::with_factors(dk.to_polynomial()?, sys.diag[b].clone())?;
                let i = sys.indices[b];
                d[i] = &d[i] + &dk.to_polynomial()?;
                expansion.coefficients[i] = &expansion.coefficients[i] + &ck.to_polynomial()?;
            }
        }
        Ok(DeterminantTrace { localizations: self.localization_vector(&f)?, d, expansion })
    }

    pub fn expand_determinant(&self, f: &Polynomial) -> Result<EquivariantExpansion> {
        Ok(self.expand_determinant_traced(f)?.expansion)
    }

    /// True iff `f − g` vanishes at every fixed point.
    pub fn equal_in_quotient(&self, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        let diff = self.lift(f)?.checked_sub(&self.lift(g)?)?;
        for j in 0..self.len() {
            if !self.localize(&diff, j)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff `π₀(f) = π₀(g)` for polynomials in `x` alone.
    pub fn equal_in_ordinary_quotient(&self, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        let diff = f.checked_sub(g)?;
        Ok(self.project_polynomial(&diff)?.is_zero())
    }

    /// `P_δ`: a lift of `x^δ` vanishing at every fixed point below `x^δ`.
    pub fn build_p_delta(&self, delta: &[usize]) -> Result<Polynomial> {
        let n = self.n();
        if delta.len() > n || (delta.len() == n && delta[n - 1] != 0) {
            return Err(Error::InvalidExponent(format!("{delta:?} must involve x1..x{} only", n - 1)));
        }
        let mut delta = delta.to_vec();
        delta.resize(n, 0);
        if let Some(i) = self.position_of_exponent(&delta) {
            return Ok(self.p_polynomial(i).clone());
        }
        // Exponents are sorted increasingly, so the last one below δ is maximal.
        let below = self.exponents().partition_point(|e| e < &delta);
        if below == 0 {
            return Err(Error::NoTableauBelow(format!("{delta:?}")));
        }
        let u = below - 1;
        let gamma = self.exponent(u);
        let k = (0..n).find(|&i| gamma[i] < delta[i]).expect("γ < δ in lex") + 1;
        let home = self.rows(u)[k - 1];
        let amb = self.ambient();
        let mut exps = vec![0u16; amb.len()];
        exps[k - 1] = (delta[k - 1] - gamma[k - 1] - 1) as u16;
        for i in k..n {
            exps[i] = delta[i] as u16;
        }
        let mut out = Polynomial::term(amb, Monomial::from_exponents(&exps), Rational::one());
        out = &out * &Polynomial::binomial(amb, Var::X(k), Var::Z(home))?;
        for &(i, j) in self.inversions(u) {
            if i <= k {
                out = &out * &Polynomial::binomial(amb, Var::X(i), Var::Z(j))?;
            }
        }
        Ok(out)
    }

    /// Equivariant expansion of `P_δ`.
    pub fn project_monomial_equivariant(&self, delta: &[usize]) -> Result<EquivariantExpansion> {
        self.expand_back_substitution(&self.build_p_delta(delta)?)
    }

    /// `π₀(x^δ) = Σ ev(C_Υ) x^Υ` where `P_δ = Σ C_Υ P_Υ`.
    pub fn project_monomial(&self, delta: &[usize]) -> Result<OrdinaryExpansion> {
        Ok(self.project_monomial_equivariant(delta)?.evaluate_at_zero(self))
    }

    fn numeric(&self) -> &NumericLocalization {
        self.numeric.get_or_init(|| {
            let n = self.len();
            let dense = (n <= DENSE_LIMIT).then(|| {
                let mut m = vec![0i128; n * n];
                for i in 0..n {
                    for j in i..n {
                        m[i * n + j] = self.numeric_entry_direct(i, j);
                    }
                }
                m
            });
            NumericLocalization { dense }
        })
    }

    fn numeric_entry_direct(&self, i: usize, j: usize) -> i128 {
        match self.localization_factors(i, j) {
            None => 0,
            Some(f) => f.iter().map(|&(a, b)| specialization(a) - specialization(b)).product(),
        }
    }

    fn numeric_entry(&self, i: usize, j: usize) -> i128 {
        match &self.numeric().dense {
            Some(m) => m[i * self.len() + j],
            None => self.numeric_entry_direct(i, j),
        }
    }

    /// `π₀(f)` for `f` in `x` alone.
    pub fn project_polynomial(&self, f: &Polynomial) -> Result<OrdinaryExpansion> {
        if !f.is_x_only() {
            return Err(Error::NotXOnly);
        }
        if f.ambient().nx() != self.n() {
            return Err(Error::AmbientMismatch(f.ambient(), Ambient::x_only(self.n())));
        }
        let mut coefficients = vec![Rational::zero(); self.len()];
        for (m, fm) in f.homogeneous_components() {
            if m > self.max_degree() {
                continue;
            }
            let indices = self.indices_up_to_degree(m);
            let (scale, terms) = fm.integer_terms();
            let solved = self
                .solve_numeric_i128(&indices, &terms)
                .map(|c| c.into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect::<Vec<_>>())
                .unwrap_or_else(|| self.solve_numeric_rational(&indices, &terms));
            let scale = Rational::from_integer(scale);
            for (b, &i) in indices.iter().enumerate() {
                if self.degree(i) == m {
                    coefficients[i] += &solved[b] / &scale;
                }
            }
        }
        Ok(OrdinaryExpansion { alpha: self.alpha().clone(), exponents: self.exponents().to_vec(), coefficients })
    }

    fn solve_numeric_i128(&self, indices: &[usize], terms: &[(Monomial, BigInt)]) -> Option<Vec<i128>> {
        let n = self.n();
        let terms: Vec<(&Monomial, i128)> =
            terms.iter().map(|(m, c)| c.to_i128().map(|c| (m, c))).collect::<Option<_>>()?;
        let mut c: Vec<i128> = Vec::with_capacity(indices.len());
        for (b, &j) in indices.iter().enumerate() {
            let rows = self.rows(j);
            let mut acc: i128 = 0;
            for (mono, coeff) in &terms {
                let mut t = *coeff;
                for i in 0..n {
                    let e = mono.get(i) as u32;
                    if e > 0 {
                        t = t.checked_mul(specialization(rows[i]).checked_pow(e)?)?;
                    }
                }
                acc = acc.checked_add(t)?;
            }
            for (a, &i) in indices[..b].iter().enumerate() {
                if c[a] != 0 {
                    let e = self.numeric_entry(i, j);
                    if e != 0 {
                        acc = acc.checked_sub(c[a].checked_mul(e)?)?;
                    }
                }
            }
            let d = self.numeric_entry(j, j);
            if acc % d != 0 {
                return None;
            }
            c.push(acc / d);
        }
        Some(c)
    }

    fn solve_numeric_rational(&self, indices: &[usize], terms: &[(Monomial, BigInt)]) -> Vec<Rational> {
        let n = self.n();
        let mut c: Vec<Rational> = Vec::with_capacity(indices.len());
        for (b, &j) in indices.iter().enumerate() {
            let rows = self.rows(j);
            let mut acc = Rational::zero();
            for (mono, coeff) in terms {
                let mut t = coeff.clone();
                for i in 0..n {
                    let e = mono.get(i) as usize;
                    if e > 0 {
                        t *= num_traits::pow(BigInt::from(specialization(rows[i])), e);
                    }
                }
                acc += Rational::from_integer(t);
            }
            for (a, &i) in indices[..b].iter().enumerate() {
                if !c[a].is_zero() {
                    let e = self.numeric_entry(i, j);
                    if e != 0 {
                        acc -= &c[a] * Rational::from_integer(BigInt::from(e));
                    }
                }
            }
            c.push(acc / Rational::from_integer(BigInt::from(self.numeric_entry(j, j))));
        }
        c
    }
}

/// `ev`: sets every `z` to zero.
pub fn evaluate_at_zero(f: &Polynomial) -> Polynomial {
    f.evaluate_z_at_zero()
}

pub fn expand_back_substitution(f: &Polynomial, alpha: &Composition) -> Result<EquivariantExpansion> {
    SpringerFiber::shared(alpha)?.expand_back_substitution(f)
}

pub fn expand_determinant(f: &Polynomial, alpha: &Composition) -> Result<EquivariantExpansion> {
    SpringerFiber::shared(alpha)?.expand_determinant(f)
}

pub fn build_p_delta(delta: &[usize], alpha: &Composition) -> Result<Polynomial> {
    SpringerFiber::shared(alpha)?.build_p_delta(delta)
}

pub fn project_monomial(delta: &[usize], alpha: &Composition) -> Result<OrdinaryExpansion> {
    SpringerFiber::shared(alpha)?.project_monomial(delta)
}

pub fn equal_in_quotient(f: &Polynomial, g: &Polynomial, alpha: &Composition) -> Result<bool> {
    SpringerFiber::shared(alpha)?.equal_in_quotient(f, g)
}

/// Grading check: `C_Υ` is homogeneous of `z`-degree `m − deg Υ` for a
/// homogeneous input of degree `m`. Returns the offending index, if any.
pub fn grading_violation(fiber: &SpringerFiber, e: &EquivariantExpansion, m: usize) -> Option<usize> {
    e.support().into_iter().find(|&i| {
        let c = e.coefficient(i);
        let deg = fiber.degree(i);
        deg > m || !c.is_homogeneous() || c.degree() != m - deg || !c.is_z_only()
    })
}

/// Polynomial with coefficients `coeffs` on the monomials `x^Υ`.
pub fn springer_combination(fiber: &SpringerFiber, coeffs: &BTreeMap<usize, Rational>) -> Polynomial {
    let amb = Ambient::x_only(fiber.n());
    Polynomial::from_terms(
        amb,
        coeffs.iter().map(|(&i, c)| {
            let e: Vec<u16> = fiber.exponent(i).iter().map(|&x| x as u16).collect();
            (Monomial::from_exponents(&e), c.clone())
        }),
    )
}

/// Rational `p/q` as a string, for sign-sensitive displays.
pub fn rational_string(c: &Rational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else if c.is_negative() {
        format!("-{}/{}", c.numer().abs(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn fiber(p: &[usize]) -> Arc<SpringerFiber> {
        SpringerFiber::shared(&comp(p)).unwrap()
    }

    #[test]
    fn worked_expansion() {
        let fib = fiber(&[2, 2]);
        let amb = fib.ambient();
        let x = |i| Polynomial::var(amb, Var::X(i)).unwrap();
        let z = |i| Polynomial::var(amb, Var::Z(i)).unwrap();
        let f = &(&(&(&x(1) + &x(2)) + &x(3)) - &z(1).scale(&rat(2))) - &z(2);
        let back = fib.expand_back_substitution(&f).unwrap();
        let one = Polynomial::one(amb);
        let zero = Polynomial::zero(amb);
        assert_eq!(back.coefficients(), &[zero.clone(), one.clone(), one.clone(), one.clone(), zero.clone(), zero.clone()]);
        let trace = fib.expand_determinant_traced(&f).unwrap();
        assert_eq!(trace.expansion, back);
        let d21 = &z(2) - &z(1);
        assert_eq!(trace.d, vec![zero.clone(), d21.clone(), -&d21, d21.clone(), zero.clone(), zero.clone()]);
        assert_eq!(trace.localizations, vec![zero.clone(), d21.clone(), zero.clone(), zero.clone(), d21.clone(), d21]);
        assert!(fib.equal_in_quotient(&back.recombine(&fib), &f).unwrap());
    }

    #[test]
    fn trivial_expansions() {
        let fib = fiber(&[2, 1]);
        let one = fib.expand_back_substitution(&Polynomial::one(fib.ambient())).unwrap();
        assert_eq!(one.support(), vec![0]);
        assert!(fib.expand_determinant(&Polynomial::zero(fib.ambient())).unwrap().support().is_empty());
        for i in 0..fib.len() {
            let e = fib.expand_determinant(fib.p_polynomial(i)).unwrap();
            assert_eq!(e.support(), vec![i]);
            assert_eq!(e.coefficient(i), &Polynomial::one(fib.ambient()));
        }
    }

    #[test]
    fn p_delta_examples() {
        let fib = fiber(&[3, 3]);
        let amb = fib.ambient();
        let b = |i, j| Polynomial::binomial(amb, Var::X(i), Var::Z(j)).unwrap();
        let p = fib.build_p_delta(&[0, 1, 1, 0, 1]).unwrap();
        assert_eq!(p, &(&b(5, 2) * &b(2, 2)) * &b(3, 2));

        let fib = fiber(&[2, 3, 1, 2]);
        let amb = fib.ambient();
        let b = |i, j| Polynomial::binomial(amb, Var::X(i), Var::Z(j)).unwrap();
        let x = |i| Polynomial::var(amb, Var::X(i)).unwrap();
        let p = fib.build_p_delta(&[0, 0, 2, 0, 4, 0, 1, 0]).unwrap();
        let expected = [x(5), x(7), b(5, 3), b(3, 2), b(3, 4), b(5, 2), b(5, 4)]
            .iter()
            .fold(Polynomial::one(amb), |acc, f| &acc * f);
        assert_eq!(p, expected);
        assert!(fib.build_p_delta(&[0, 0, 0, 0, 0, 0, 0, 1]).is_err());
    }

    #[test]
    fn projection_paths_agree() {
        let fib = fiber(&[3, 3]);
        let proj = fib.project_monomial(&[0, 1, 1, 0, 1]).unwrap();
        let xa = Ambient::x_only(6);
        let mono = Polynomial::term(xa, Monomial::from_exponents(&[0, 1, 1, 0, 1, 0]), rat(1));
        assert_eq!(fib.project_polynomial(&mono).unwrap(), proj);
        let expected = [[1, 0, 1, 0, 1, 0], [1, 1, 0, 0, 1, 0], [1, 1, 1, 0, 0, 0]]
            .iter()
            .fold(Polynomial::zero(xa), |acc, e| &acc - &Polynomial::term(xa, Monomial::from_exponents(e), rat(1)));
        assert_eq!(proj.to_polynomial(), expected);
    }

    #[test]
    fn ordinary_quotient_equality() {
        let fib = fiber(&[2, 2]);
        let xa = Ambient::x_only(4);
        let m = |e: [u16; 4]| Polynomial::term(xa, Monomial::from_exponents(&e), rat(1));
        let f = m([0, 1, 1, 0]);
        let g = -&(&m([1, 0, 1, 0]) + &m([1, 1, 0, 0]));
        assert!(fib.equal_in_ordinary_quotient(&f, &g).unwrap());
        // Equivariantly the two differ already at the first fixed point.
        assert!(!fib.equal_in_quotient(&f, &g).unwrap());
        assert!(!fib.equal_in_quotient(&Polynomial::one(xa), &Polynomial::zero(xa)).unwrap());
        assert!(fib.equal_in_quotient(&f, &f).unwrap());
    }
}
