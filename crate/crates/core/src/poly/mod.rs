//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables come in three blocks: `x₁..xₙ`, an optional `y₁..y_m` block
//! (used by double Schubert polynomials) and `z₁..z_k`. Monomials are stored
//! as one concatenated exponent vector, so the derived ordering on
//! [`Monomial`] is lex with `x₁ > … > xₙ > y₁ > … > z₁ > … > z_k`.
//!
//! No relations are imposed between the variables: the ring is free.

mod ratfun;

use std::collections::BTreeMap;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::Rational;

pub use ratfun::{determinant, RationalFunction};

pub type Exp = u16;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sizes of the three variable blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambient {
    nx: usize,
    ny: usize,
    nz: usize,
}

impl Ambient {
    /// `x₁..xₙ` and `z₁..z_k`.
    pub fn new(n: usize, k: usize) -> Self {
        Ambient { nx: n, ny: 0, nz: k }
    }

    pub fn with_y(n: usize, ny: usize, k: usize) -> Self {
        Ambient { nx: n, ny, nz: k }
    }

    pub fn x_only(n: usize) -> Self {
        Ambient { nx: n, ny: 0, nz: 0 }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn nz(&self) -> usize {
        self.nz
    }

    pub fn len(&self) -> usize {
        self.nx + self.ny + self.nz
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index_of(&self, var: Var) -> Option<usize> {
        match var {
            Var::X(i) if (1..=self.nx).contains(&i) => Some(i - 1),
            Var::Y(i) if (1..=self.ny).contains(&i) => Some(self.nx + i - 1),
            Var::Z(i) if (1..=self.nz).contains(&i) => Some(self.nx + self.ny + i - 1),
            _ => None,
        }
    }

    pub fn var_at(&self, idx: usize) -> Var {
        if idx < self.nx {
            Var::X(idx + 1)
        } else if idx < self.nx + self.ny {
            Var::Y(idx - self.nx + 1)
        } else {
            Var::Z(idx - self.nx - self.ny + 1)
        }
    }

    pub fn contains(&self, var: Var) -> bool {
        self.index_of(var).is_some()
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ny == 0 {
            write!(f, "(n={}, k={})", self.nx, self.nz)
        } else {
            write!(f, "(n={}, y={}, k={})", self.nx, self.ny, self.nz)
        }
    }
}

/// A variable, with 1-based index inside its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    Z(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Z(i) => write!(f, "z{i}"),
        }
    }
}

/// Exponent vector over the concatenated variable blocks of an ambient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exp; 16]>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(SmallVec::from_elem(0, len))
    }

    pub fn from_exponents(exps: &[Exp]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[Exp] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, idx: usize) -> Exp {
        self.0.get(idx).copied().unwrap_or(0)
    }

    pub fn set(&mut self, idx: usize, e: Exp) {
        self.0[idx] = e;
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect()))
    }

    /// Zero-padded or truncated copy of length `len`.
    pub fn resized(&self, len: usize) -> Monomial {
        let mut v: SmallVec<[Exp; 16]> = self.0.iter().copied().take(len).collect();
        v.resize(len, 0);
        Monomial(v)
    }
}

/// Lex comparison of exponent vectors; shorter vectors are zero-padded.
///
/// `x^a < x^b` iff `a_j < b_j` at the first index `j` where they differ.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    let len = a.len().max(b.len());
    for j in 0..len {
        match a.get(j).cmp(&b.get(j)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polynomial {
    ambient: Ambient,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ambient: Ambient) -> Self {
        Polynomial { ambient, terms: BTreeMap::new() }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::constant(ambient, Rational::one())
    }

    pub fn constant(ambient: Ambient, c: Rational) -> Self {
        Self::term(ambient, Monomial::one(ambient.len()), c)
    }

    pub fn term(ambient: Ambient, mono: Monomial, c: Rational) -> Self {
        assert_eq!(mono.len(), ambient.len(), "monomial length does not match ambient");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Polynomial { ambient, terms }
    }

    pub fn var(ambient: Ambient, var: Var) -> Result<Self> {
        let idx = ambient.index_of(var).ok_or(Error::UnknownVariable { var, ambient })?;
        let mut m = Monomial::one(ambient.len());
        m.set(idx, 1);
        Ok(Self::term(ambient, m, Rational::one()))
    }

    /// `a − b` for two variables; the building block of every `P_Υ`.
    pub fn binomial(ambient: Ambient, a: Var, b: Var) -> Result<Self> {
        Ok(Self::var(ambient, a)? - Self::var(ambient, b)?)
    }

    pub fn from_terms<I>(ambient: Ambient, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(ambient);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Terms in decreasing lex order (leading term first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.ambient.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Lex-smallest term.
    pub fn trailing_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn block_degree(&self, range: std::ops::Range<usize>) -> usize {
        self.terms
            .keys()
            .map(|m| range.clone().map(|i| m.get(i) as usize).sum::<usize>())
            .max()
            .unwrap_or(0)
    }

    pub fn x_degree(&self) -> usize {
        self.block_degree(0..self.ambient.nx)
    }

    pub fn y_degree(&self) -> usize {
        self.block_degree(self.ambient.nx..self.ambient.nx + self.ambient.ny)
    }

    pub fn z_degree(&self) -> usize {
        let start = self.ambient.nx + self.ambient.ny;
        self.block_degree(start..self.ambient.len())
    }

    /// True when no `y` or `z` variable occurs.
    pub fn is_x_only(&self) -> bool {
        let nx = self.ambient.nx;
        self.terms.keys().all(|m| m.exponents()[nx..].iter().all(|&e| e == 0))
    }

    /// True when no `x` or `y` variable occurs.
    pub fn is_z_only(&self) -> bool {
        let end = self.ambient.nx + self.ambient.ny;
        self.terms.keys().all(|m| m.exponents()[..end].iter().all(|&e| e == 0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous components keyed by total degree; zero components are omitted.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, Polynomial> {
        let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.ambient))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        debug_assert_eq!(mono.len(), self.ambient.len());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = Polynomial::zero(self.ambient);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ambient);
        }
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ambient);
        }
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.ambient);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Ring homomorphism into `target` sending each variable to its image in
    /// `assignment`; unassigned variables map to the same-named variable of
    /// `target`.
    pub fn substitute(&self, target: Ambient, assignment: &BTreeMap<Var, Polynomial>) -> Result<Polynomial> {
        for p in assignment.values() {
            if p.ambient != target {
                return Err(Error::AmbientMismatch(target, p.ambient));
            }
        }
        let mut images = Vec::with_capacity(self.ambient.len());
        for idx in 0..self.ambient.len() {
            let var = self.ambient.var_at(idx);
            let used = self.terms.keys().any(|m| m.get(idx) > 0);
            if !used {
                images.push(None);
                continue;
            }
            let img = match assignment.get(&var) {
                Some(p) => p.clone(),
                None => Polynomial::var(target, var)?,
            };
            images.push(Some(img));
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| match img {
                Some(p) => vec![Polynomial::one(target), p.clone()],
                None => vec![Polynomial::one(target)],
            })
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(target, c.clone());
            for (idx, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[idx].len() <= e {
                    let next = &powers[idx][powers[idx].len() - 1] * &powers[idx][1];
                    powers[idx].push(next);
                }
                acc = &acc * &powers[idx][e];
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Homomorphism sending every variable to a single variable of `target`
    /// (or to zero when `map` returns `None`). Much cheaper than
    /// [`Polynomial::substitute`].
    pub fn rename<F>(&self, target: Ambient, map: F) -> Result<Polynomial>
    where
        F: Fn(Var) -> Option<Var>,
    {
        let mut images: Vec<Option<usize>> = Vec::with_capacity(self.ambient.len());
        for idx in 0..self.ambient.len() {
            match map(self.ambient.var_at(idx)) {
                Some(v) => images.push(Some(
                    target.index_of(v).ok_or(Error::UnknownVariable { var: v, ambient: target })?,
                )),
                None => images.push(None),
            }
        }
        let mut out = Polynomial::zero(target);
        'terms: for (m, c) in &self.terms {
            let mut image = Monomial::one(target.len());
            for (idx, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match images[idx] {
                    Some(t) => image.0[t] += e,
                    None => continue 'terms,
                }
            }
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    /// Evaluates at a point given in ambient index order.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ambient.len());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (idx, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[idx].clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Sets every `z` variable to zero (the ambient is unchanged).
    pub fn evaluate_z_at_zero(&self) -> Polynomial {
        let start = self.ambient.nx + self.ambient.ny;
        Polynomial {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[start..].iter().all(|&e| e == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets every `y` variable to zero (the ambient is unchanged).
    pub fn evaluate_y_at_zero(&self) -> Polynomial {
        let (s, e) = (self.ambient.nx, self.ambient.nx + self.ambient.ny);
        Polynomial {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[s..e].iter().all(|&x| x == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-homes the polynomial in a larger ambient, padding each block.
    pub fn embed(&self, target: Ambient) -> Result<Polynomial> {
        let a = self.ambient;
        if target.nx < a.nx || target.ny < a.ny || target.nz < a.nz {
            // Still fine if the missing variables never occur.
            let fits = self.terms.keys().all(|m| {
                (0..a.len()).all(|idx| m.get(idx) == 0 || target.contains(a.var_at(idx)))
            });
            if !fits {
                return Err(Error::AmbientMismatch(a, target));
            }
        }
        if target == a {
            return Ok(self.clone());
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut image = Monomial::one(target.len());
            for (idx, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let t = target.index_of(a.var_at(idx)).expect("checked above");
                    image.0[t] = e;
                }
            }
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    /// `s_i(f)`: swaps `x_i` and `x_{i+1}`.
    pub fn swap_x(&self, i: usize) -> Result<Polynomial> {
        let n = self.ambient.nx;
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Polynomial {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.0.swap(i - 1, i);
                    (m, c.clone())
                })
                .collect(),
        })
    }

    /// Newton's divided difference `∂_i f = (f − s_i f)/(x_i − x_{i+1})`.
    ///
    /// The quotient is computed monomial by monomial; variables outside the
    /// `x` block behave as scalars.
    pub fn divided_difference(&self, i: usize) -> Result<Polynomial> {
        let n = self.ambient.nx;
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let (p, q) = (i - 1, i);
        let mut out = Polynomial::zero(self.ambient);
        for (m, c) in &self.terms {
            let (a, b) = (m.get(p), m.get(q));
            if a == b {
                continue;
            }
            let (hi, lo, coeff) = if a > b { (a, b, c.clone()) } else { (b, a, -c.clone()) };
            for t in 0..(hi - lo) {
                let mut mm = m.clone();
                mm.0[p] = hi - 1 - t;
                mm.0[q] = lo + t;
                if a < b {
                    mm.0.swap(p, q);
                }
                out.add_term(mm, coeff.clone());
            }
        }
        Ok(out)
    }

    /// Exact quotient `self / den`, failing with [`Error::InexactDivision`]
    /// when `den` does not divide `self`.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(den)?;
        let (lm, lc) = match den.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if den.len() == 1 {
            // Monomial divisor: one pass.
            let mut out = Polynomial::zero(self.ambient);
            for (m, c) in &self.terms {
                let q = lm.quotient_of(m).ok_or(Error::InexactDivision)?;
                out.terms.insert(q, c / &lc);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.ambient);
        while let Some((m, c)) = rem.leading_term() {
            let qm = lm.quotient_of(m).ok_or(Error::InexactDivision)?;
            let qc = c / &lc;
            for (dm, dc) in &den.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Coefficients scaled by [`Polynomial::common_denominator`], as integers.
    pub fn integer_terms(&self) -> (BigInt, Vec<(Monomial, BigInt)>) {
        let d = self.common_denominator();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let scaled = c * Rational::from_integer(d.clone());
                (m.clone(), scaled.to_integer())
            })
            .collect();
        (d, terms)
    }

    /// Canonical human-readable form, leading term first.
    fn fmt_term(&self, f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational, first: bool) -> fmt::Result {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut factors = Vec::new();
        for (idx, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = self.ambient.var_at(idx);
            if e == 1 {
                factors.push(v.to_string());
            } else {
                factors.push(format!("{v}^{e}"));
            }
        }
        if factors.is_empty() {
            write!(f, "{abs}")
        } else if abs.is_one() {
            write!(f, "{}", factors.join("*"))
        } else {
            write!(f, "{abs}*{}", factors.join("*"))
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            self.fmt_term(f, m, c, i == 0)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    /// Panics on ambient mismatch; use [`Polynomial::checked_add`] otherwise.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ambient mismatch in +")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ambient mismatch in -")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ambient mismatch in *")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb() -> Ambient {
        Ambient::new(4, 2)
    }

    fn x(i: usize) -> Polynomial {
        Polynomial::var(amb(), Var::X(i)).unwrap()
    }

    fn z(i: usize) -> Polynomial {
        Polynomial::var(amb(), Var::Z(i)).unwrap()
    }

    fn c(v: i64) -> Polynomial {
        Polynomial::constant(amb(), rat(v))
    }

    #[test]
    fn add_examples() {
        assert!((&x(1) + &(-x(1))).is_zero());
        let p2 = &x(2) - &z(2);
        let p3 = &x(3) - &z(1);
        let p4 = &x(1) - &z(1);
        let sum = &(&p2 + &p3) + &p4;
        let expected = &(&(&(&x(1) + &x(2)) + &x(3)) - &(&c(2) * &z(1))) - &z(2);
        assert_eq!(sum, expected);
        assert_eq!(&c(1) + &c(0), c(1));
    }

    #[test]
    fn mul_examples() {
        let p = &(&x(1) - &z(1)) * &(&x(2) - &z(1));
        let expected = &(&(&(&x(1) * &x(2)) - &(&z(1) * &x(1))) - &(&z(1) * &x(2))) + &(&z(1) * &z(1));
        assert_eq!(p, expected);
        assert_eq!(&p * &c(1), p);
        assert!((&p * &c(0)).is_zero());
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let other = Polynomial::one(Ambient::new(3, 2));
        assert!(matches!(x(1).checked_add(&other), Err(Error::AmbientMismatch(..))));
        assert!(matches!(x(1).checked_mul(&other), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn substitute_examples() {
        let mut a = BTreeMap::new();
        a.insert(Var::X(3), z(1));
        assert!((&x(3) - &z(1)).substitute(amb(), &a).unwrap().is_zero());

        let mut a = BTreeMap::new();
        a.insert(Var::X(2), z(1));
        assert_eq!((&x(2) - &z(2)).substitute(amb(), &a).unwrap(), &z(1) - &z(2));

        let mut a = BTreeMap::new();
        a.insert(Var::X(1), x(1));
        a.insert(Var::X(2), x(2));
        let p = &x(1) * &x(2);
        assert_eq!(p.substitute(amb(), &a).unwrap(), p);

        let mut bad = BTreeMap::new();
        bad.insert(Var::X(1), Polynomial::one(Ambient::new(2, 2)));
        assert!(p.substitute(amb(), &bad).is_err());
    }

    #[test]
    fn lex_examples() {
        let a = Monomial::from_exponents(&[0, 1, 1, 0, 0]);
        let b = Monomial::from_exponents(&[0, 2, 0, 0, 0]);
        assert_eq!(lex_compare(&a, &b), Ordering::Less);
        let d = Monomial::from_exponents(&[0, 1, 1, 0, 1]);
        assert_eq!(lex_compare(&a, &d), Ordering::Less);
        assert_eq!(lex_compare(&a, &a), Ordering::Equal);
        // Zero padding.
        assert_eq!(lex_compare(&Monomial::from_exponents(&[0, 2]), &a), Ordering::Greater);
        assert_eq!(lex_compare(&Monomial::from_exponents(&[0, 1]), &a), Ordering::Less);
    }

    #[test]
    fn divided_difference_examples() {
        let xa = Ambient::x_only(4);
        let xv = |i| Polynomial::var(xa, Var::X(i)).unwrap();
        // symmetric in x2, x3
        let sym = &(&xv(2) + &xv(3)) * &xv(1);
        assert!(sym.divided_difference(2).unwrap().is_zero());
        assert_eq!(xv(1).divided_difference(1).unwrap(), Polynomial::one(xa));

        let seed = Polynomial::term(xa, Monomial::from_exponents(&[3, 2, 1, 0]), rat(1));
        let s = seed
            .divided_difference(3)
            .unwrap()
            .divided_difference(2)
            .unwrap()
            .divided_difference(1)
            .unwrap();
        let m = |e: [Exp; 4]| Polynomial::term(xa, Monomial::from_exponents(&e), rat(1));
        let expected = [[0, 2, 1, 0], [2, 0, 1, 0], [2, 1, 0, 0], [1, 1, 1, 0], [1, 2, 0, 0]]
            .into_iter()
            .fold(Polynomial::zero(xa), |acc, e| &acc + &m(e));
        assert_eq!(s, expected);
        // The word s2 s3 s2 belongs to [4,1,2,3] and leaves only x1^3.
        let other = seed.divided_difference(2).unwrap().divided_difference(3).unwrap().divided_difference(2).unwrap();
        assert_eq!(other, m([3, 0, 0, 0]));

        assert!(matches!(xv(1).divided_difference(4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(xv(1).divided_difference(0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn divided_difference_matches_quotient() {
        let xa = Ambient::x_only(3);
        let xv = |i| Polynomial::var(xa, Var::X(i)).unwrap();
        let f = &(&xv(1).pow(3) * &xv(2)) - &(&xv(2).pow(2) * &xv(3));
        let num = &f - &f.swap_x(1).unwrap();
        let den = &xv(1) - &xv(2);
        assert_eq!(num.exact_div(&den).unwrap(), f.divided_difference(1).unwrap());
    }

    #[test]
    fn exact_division_examples() {
        let d = &z(2) - &z(1);
        assert_eq!((&d * &d).exact_div(&d).unwrap(), d);
        assert!(Polynomial::zero(amb()).exact_div(&d).unwrap().is_zero());
        let prod = &(&x(1) - &z(1)) * &(&x(2) - &z(1));
        assert_eq!(prod.exact_div(&(&x(1) - &z(1))).unwrap(), &x(2) - &z(1));
        assert_eq!(x(1).exact_div(&x(2)), Err(Error::InexactDivision));
        assert_eq!((&x(1) + &c(1)).exact_div(&(&x(1) - &c(1))), Err(Error::InexactDivision));
        assert_eq!(x(1).exact_div(&Polynomial::zero(amb())), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_is_lex_descending() {
        let p = &(&x(1) - &z(1)) * &(&x(2) - &z(1));
        assert_eq!(p.to_string(), "x1*x2 - x1*z1 - x2*z1 + z1^2");
        assert_eq!(Polynomial::zero(amb()).to_string(), "0");
        assert_eq!(c(1).scale(&Rational::new(BigInt::from(-3), BigInt::from(2))).to_string(), "-3/2");
    }

    #[test]
    fn homogeneous_components_split() {
        let p = &(&x(1) + &c(3)) * &(&x(2) + &z(1));
        let parts = p.homogeneous_components();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![1, 2]);
        let total = parts.values().fold(Polynomial::zero(amb()), |a, b| &a + b);
        assert_eq!(total, p);
        assert!(parts.values().all(Polynomial::is_homogeneous));
    }

    #[test]
    fn embed_and_rename() {
        let small = Polynomial::var(Ambient::x_only(2), Var::X(2)).unwrap();
        let big = small.embed(amb()).unwrap();
        assert_eq!(big, x(2));
        let r = big.rename(amb(), |v| match v {
            Var::X(2) => Some(Var::Z(1)),
            other => Some(other),
        });
        assert_eq!(r.unwrap(), z(1));
        assert!(x(4).embed(Ambient::x_only(2)).is_err());
    }
}
