//! Permutations of `{1..n}` in one-line notation.
//!
//! Products are composition of functions: `(uv)(i) = u(v(i))`. In
//! particular `w·s_i` swaps the entries in positions `i, i+1` and `s_i·w`
//! swaps the values `i, i+1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates a one-line word with values `1..=n`.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `w₀ = [n, n−1, …, 1]`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        Self::transposition(n, i, i + 1)
    }

    /// The transposition `t_{ij}` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::IndexOutOfRange { index: i.max(j), n });
        }
        let mut w = Self::identity(n);
        w.0.swap(i - 1, j - 1);
        Ok(w)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose permutations of sizes {} and {}",
                self.size(),
                other.size()
            )));
        }
        Ok(Permutation(other.0.iter().map(|&v| self.0[v - 1]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Position pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.0[i] > self.0[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.size();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count()).sum()
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `w·s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.size() {
            return Err(Error::IndexOutOfRange { index: i, n: self.size() });
        }
        let mut w = self.clone();
        w.0.swap(i - 1, i);
        Ok(w)
    }

    /// `s_i·w`.
    pub fn mul_simple_left(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.size() {
            return Err(Error::IndexOutOfRange { index: i, n: self.size() });
        }
        Ok(Permutation(
            self.0
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect(),
        ))
    }

    /// The image of `w` under `S_n ⊂ S_m`, fixing `n+1..m`.
    pub fn embed(&self, m: usize) -> Result<Permutation> {
        if m < self.size() {
            return Err(Error::InvalidPermutation(format!("cannot embed S_{} into S_{m}", self.size())));
        }
        let mut v = self.0.clone();
        v.extend(self.size() + 1..=m);
        Ok(Permutation(v))
    }

    /// Drops trailing fixed points, keeping at least one entry.
    pub fn trimmed(&self) -> Permutation {
        let mut m = self.size();
        while m > 1 && self.0[m - 1] == m {
            m -= 1;
        }
        Permutation(self.0[..m].to_vec())
    }

    /// `c_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.size();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.0[j] < self.0[i]).count()).collect()
    }

    /// Inverse of [`Permutation::lehmer_code`]; requires `c_i ≤ n − i`.
    pub fn from_lehmer_code(code: &[usize]) -> Result<Permutation> {
        let n = code.len();
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut out = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c > n - i - 1 {
                return Err(Error::InvalidLehmerCode(format!(
                    "entry {} at position {} exceeds {}",
                    c,
                    i + 1,
                    n - i - 1
                )));
            }
            out.push(remaining.remove(c));
        }
        Ok(Permutation(out))
    }

    /// All of `S_n` in lex order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Self::identity(n).0;
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `[1,4,3,2]`, `1 4 3 2`, `1,4,3,2` or, for `n ≤ 9`, `1432`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let parts: Vec<&str> = t.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        let values: Vec<usize> = if parts.len() == 1 && parts[0].len() > 1 {
            parts[0]
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::InvalidPermutation(s.to_string()))?
        } else {
            parts
                .iter()
                .map(|p| p.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPermutation(s.to_string()))?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn products_follow_function_composition() {
        let s = |i| Permutation::simple(4, i).unwrap();
        assert_eq!(s(3).compose(&s(2)).unwrap(), p(&[1, 4, 2, 3]));
        assert_eq!(s(2).compose(&s(3)).unwrap(), p(&[1, 3, 4, 2]));
        assert_eq!(s(1).compose(&s(3)).unwrap(), p(&[2, 1, 4, 3]));
        assert_eq!(s(1).compose(&s(2)).unwrap(), p(&[2, 3, 1, 4]));
        assert_eq!(s(2).compose(&s(1)).unwrap(), p(&[3, 1, 2, 4]));
        let w = p(&[2, 4, 1, 3]);
        assert_eq!(w.mul_simple_right(2).unwrap(), w.compose(&s(2)).unwrap());
        assert_eq!(w.mul_simple_left(2).unwrap(), s(2).compose(&w).unwrap());
    }

    #[test]
    fn lehmer_code_round_trip() {
        assert_eq!(Permutation::from_lehmer_code(&[0, 2, 1, 0]).unwrap(), p(&[1, 4, 3, 2]));
        for w in Permutation::all(5) {
            let c = w.lehmer_code();
            assert_eq!(c.iter().sum::<usize>(), w.length());
            assert_eq!(Permutation::from_lehmer_code(&c).unwrap(), w);
        }
        assert!(Permutation::from_lehmer_code(&[0, 3, 0, 0]).is_err());
    }

    #[test]
    fn validation_and_parsing() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert_eq!("[1,4,3,2]".parse::<Permutation>().unwrap(), p(&[1, 4, 3, 2]));
        assert_eq!("1432".parse::<Permutation>().unwrap(), p(&[1, 4, 3, 2]));
        assert_eq!("1 4 3 2".parse::<Permutation>().unwrap(), p(&[1, 4, 3, 2]));
        assert!("1x32".parse::<Permutation>().is_err());
        assert_eq!(p(&[1, 4, 3, 2]).to_string(), "[1,4,3,2]");
    }

    #[test]
    fn enumeration_and_trimming() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(p(&[2, 1, 3, 4]).trimmed(), p(&[2, 1]));
        assert_eq!(Permutation::identity(3).trimmed(), p(&[1]));
        assert_eq!(p(&[2, 1]).embed(4).unwrap(), p(&[2, 1, 3, 4]));
    }

    #[test]
    fn braid_relations() {
        let n = 5;
        let s = |i| Permutation::simple(n, i).unwrap();
        let e = Permutation::identity(n);
        for i in 1..n {
            assert_eq!(s(i).compose(&s(i)).unwrap(), e);
            for j in 1..n {
                if i.abs_diff(j) >= 2 {
                    assert_eq!(s(i).compose(&s(j)).unwrap(), s(j).compose(&s(i)).unwrap());
                }
            }
            if i + 1 < n {
                let a = s(i).compose(&s(i + 1)).unwrap().compose(&s(i)).unwrap();
                let b = s(i + 1).compose(&s(i)).unwrap().compose(&s(i + 1)).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
