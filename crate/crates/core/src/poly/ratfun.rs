//! Rational functions with a factored denominator.
//!
//! Denominators that show up in localization formulas are products of
//! linear forms `z_a − z_b`. Keeping them factored lets us cancel by trial
//! division instead of computing polynomial gcds.

use std::fmt;

use num_traits::Zero;

use super::{Ambient, Polynomial};
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    /// Non-constant factors with leading coefficient 1, pairwise distinct.
    den: Vec<(Polynomial, u32)>,
}

impl RationalFunction {
    pub fn zero(ambient: Ambient) -> Self {
        Self::from_polynomial(Polynomial::zero(ambient))
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::from_polynomial(Polynomial::one(ambient))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Vec::new() }
    }

    /// `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if num.ambient() != den.ambient() {
            return Err(Error::AmbientMismatch(num.ambient(), den.ambient()));
        }
        let mut out = Self::from_polynomial(num);
        out.divide_by_factor(den, 1)?;
        out.reduce();
        Ok(out)
    }

    /// `num / ∏ factors`.
    pub fn with_factors<I>(num: Polynomial, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Polynomial>,
    {
        let mut out = Self::from_polynomial(num);
        for f in factors {
            if f.ambient() != out.num.ambient() {
                return Err(Error::AmbientMismatch(out.num.ambient(), f.ambient()));
            }
            out.divide_by_factor(f, 1)?;
        }
        out.reduce();
        Ok(out)
    }

    pub fn ambient(&self) -> Ambient {
        self.num.ambient()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(Polynomial, u32)] {
        &self.den
    }

    /// The denominator multiplied out.
    pub fn denominator(&self) -> Polynomial {
        let mut out = Polynomial::one(self.ambient());
        for (f, e) in &self.den {
            out = &out * &f.pow(*e);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_empty() && self.num.is_constant()
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        if self.den.is_empty() {
            return Ok(self.num.clone());
        }
        self.num.exact_div(&self.denominator())
    }

    /// Rough size used for pivot selection.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.iter().map(|(f, e)| f.len() * *e as usize).sum::<usize>()
    }

    fn divide_by_factor(&mut self, f: Polynomial, e: u32) -> Result<()> {
        let lc = match f.leading_term() {
            Some((_, c)) => c.clone(),
            None => return Err(Error::DivisionByZero),
        };
        if f.is_constant() {
            let inv = num_traits::pow(lc.recip(), e as usize);
            self.num = self.num.scale(&inv);
            return Ok(());
        }
        let f = f.scale(&lc.recip());
        self.num = self.num.scale(&num_traits::pow(lc.recip(), e as usize));
        match self.den.iter_mut().find(|(g, _)| *g == f) {
            Some((_, k)) => *k += e,
            None => self.den.push((f, e)),
        }
        Ok(())
    }

    /// Cancels every denominator factor that divides the numerator.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.exact_div(f) {
                    Ok(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
    }

    fn check(&self, other: &RationalFunction) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch(self.ambient(), other.ambient()));
        }
        Ok(())
    }

    /// Product of the factors of `self.den` missing from `target`.
    fn cofactor(den: &[(Polynomial, u32)], target: &[(Polynomial, u32)], ambient: Ambient) -> Polynomial {
        let mut out = Polynomial::one(ambient);
        for (f, e) in target {
            let have = den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
            if *e > have {
                out = &out * &f.pow(e - have);
            }
        }
        out
    }

    fn lcm_den(a: &[(Polynomial, u32)], b: &[(Polynomial, u32)]) -> Vec<(Polynomial, u32)> {
        let mut out: Vec<(Polynomial, u32)> = a.to_vec();
        for (f, e) in b {
            match out.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k = (*k).max(*e),
                None => out.push((f.clone(), *e)),
            }
        }
        out
    }

    pub fn add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let den = Self::lcm_den(&self.den, &other.den);
        let amb = self.ambient();
        let a = &self.num * &Self::cofactor(&self.den, &den, amb);
        let b = &other.num * &Self::cofactor(&other.den, &den, amb);
        let mut out = RationalFunction { num: &a + &b, den };
        out.reduce();
        Ok(out)
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RationalFunction::zero(self.ambient()));
        }
        let mut den = self.den.clone();
        for (f, e) in &other.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k += e,
                None => den.push((f.clone(), *e)),
            }
        }
        let mut out = RationalFunction { num: &self.num * &other.num, den };
        out.reduce();
        Ok(out)
    }

    pub fn mul_polynomial(&self, p: &Polynomial) -> Result<RationalFunction> {
        self.mul(&RationalFunction::from_polynomial(p.clone()))
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero(self.ambient());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = self.num.clone();
        for (f, e) in &other.den {
            num = &num * &f.pow(*e);
        }
        let mut out = RationalFunction { num, den: self.den.clone() };
        out.divide_by_factor(other.num.clone(), 1)?;
        out.reduce();
        Ok(out)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.ambient() != other.ambient() {
            return false;
        }
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (i, (g, e)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "({g})")?;
            } else {
                write!(f, "({g})^{e}")?;
            }
        }
        write!(f, ")")
    }
}

/// Determinant of a square matrix of rational functions by Gaussian
/// elimination. Pivots prefer nonzero constants, then small entries.
pub fn determinant(ambient: Ambient, matrix: &[Vec<RationalFunction>]) -> Result<RationalFunction> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeMismatch(
            format!("{n} rows"),
            "rows of unequal length".to_string(),
        ));
    }
    let mut a: Vec<Vec<RationalFunction>> = matrix.to_vec();
    let mut det = RationalFunction::one(ambient);
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| (!a[r][col].is_constant(), a[r][col].weight(), r));
        let Some(pivot) = pivot else {
            return Ok(RationalFunction::zero(ambient));
        };
        if pivot != col {
            a.swap(pivot, col);
            det = det.neg();
        }
        let p = a[col][col].clone();
        det = det.mul(&p)?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].div(&p)?;
            for c in col + 1..n {
                if a[col][c].is_zero() {
                    continue;
                }
                let t = factor.mul(&a[col][c])?;
                a[r][c] = a[r][c].sub(&t)?;
            }
            a[r][col] = RationalFunction::zero(ambient);
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Var};

    fn amb() -> Ambient {
        Ambient::new(2, 3)
    }

    fn z(i: usize) -> Polynomial {
        Polynomial::var(amb(), Var::Z(i)).unwrap()
    }

    fn rf(p: Polynomial) -> RationalFunction {
        RationalFunction::from_polynomial(p)
    }

    #[test]
    fn cancels_common_factors() {
        let d = &z(2) - &z(1);
        let f = RationalFunction::new(&d * &z(3), d.clone()).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.to_polynomial().unwrap(), z(3));
        // Sign normalization of the factor.
        let g = RationalFunction::new(z(3), &z(1) - &z(2)).unwrap();
        assert_eq!(g.denominator_factors()[0].0, &z(1) - &z(2));
        let h = RationalFunction::new(-&z(3), &z(2) - &z(1)).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(z(1), &z(1) - &z(2)).unwrap();
        let b = RationalFunction::new(z(2), &z(2) - &z(1)).unwrap();
        // z1/(z1-z2) + z2/(z2-z1) = 1
        assert_eq!(a.add(&b).unwrap(), RationalFunction::one(amb()));
        assert!(a.add(&b).unwrap().is_polynomial());
        let q = a.div(&a).unwrap();
        assert_eq!(q.to_polynomial().unwrap(), Polynomial::one(amb()));
        assert!(a.div(&RationalFunction::zero(amb())).is_err());
        let p = a.mul(&rf(&z(1) - &z(2))).unwrap();
        assert_eq!(p.to_polynomial().unwrap(), z(1));
    }

    #[test]
    fn determinant_small() {
        let m = vec![
            vec![rf(z(1)), rf(z(2))],
            vec![rf(Polynomial::constant(amb(), rat(1))), rf(z(3))],
        ];
        let d = determinant(amb(), &m).unwrap();
        assert_eq!(d.to_polynomial().unwrap(), &(&z(1) * &z(3)) - &z(2));
        assert_eq!(determinant(amb(), &[]).unwrap(), RationalFunction::one(amb()));
        let singular = vec![vec![rf(z(1)), rf(z(1))], vec![rf(z(2)), rf(z(2))]];
        assert!(determinant(amb(), &singular).unwrap().is_zero());
    }
}
