//! Compositions and shifted row-strict composition tableaux.
//!
//! A tableau of shape `β` (a weak composition of `m ≤ n`) fills the rows of
//! `β` with the entries `n−m+1, …, n`, strictly decreasing along each row.
//! Rows are numbered `1..k` from the top and columns `1..` from the left.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    /// A weak composition; zero parts are allowed.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("a composition needs at least one part".into()));
        }
        Ok(Composition(parts))
    }

    /// A composition with all parts positive.
    pub fn strong(parts: Vec<usize>) -> Result<Self> {
        let c = Self::new(parts)?;
        if !c.is_strong() {
            return Err(Error::WeakShape(c.to_string()));
        }
        Ok(c)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts, zero parts included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_strong(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    pub fn is_partition(&self) -> bool {
        self.is_strong() && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Nonzero parts sorted weakly decreasing.
    pub fn underlying_partition(&self) -> Composition {
        let mut p: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        if p.is_empty() {
            p.push(0);
        }
        Composition(p)
    }

    /// Deletes zero parts.
    pub fn strengthened(&self) -> Composition {
        let p: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        if p.is_empty() {
            Composition(vec![0])
        } else {
            Composition(p)
        }
    }

    /// Blocks of positions `1..=n`: block `j` holds `α₁+…+α_{j−1}+1 ..= α₁+…+α_j`.
    pub fn block_of_position(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        for (j, &a) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat(j + 1).take(a));
        }
        out
    }

    /// `n!/(α₁!⋯α_k!)`.
    pub fn multinomial(&self) -> u128 {
        let mut out: u128 = 1;
        let mut total = 0u128;
        for &a in &self.0 {
            for i in 1..=a as u128 {
                total += 1;
                out = out * total / i;
            }
        }
        out
    }

    /// All strong compositions of `n`, in lex order of parts.
    pub fn all_strong(n: usize) -> Vec<Composition> {
        fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                go(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All partitions of `n`, in decreasing lex order.
    pub fn partitions(n: usize) -> Vec<Composition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Distinct rearrangements of the parts, in lex order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut cur = self.0.clone();
        cur.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(Composition(cur.clone()));
            let n = cur.len();
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

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `2,2`, `(2,2)` or `2 2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidComposition(s.to_string()))?;
        Composition::new(parts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowStrictTableau {
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl RowStrictTableau {
    /// Validates rows and content `[n−m+1, n]`.
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidTableau("a tableau needs at least one row".into()));
        }
        let m: usize = rows.iter().map(Vec::len).sum();
        if m > n {
            return Err(Error::InvalidTableau(format!("{m} boxes exceed n = {n}")));
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidTableau(format!("row {row:?} is not strictly decreasing")));
            }
        }
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v < n - m + 1 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "content must be exactly {}..={n}, found {v}",
                    n - m + 1
                )));
            }
            seen[v] = true;
        }
        Ok(RowStrictTableau { n, rows })
    }

    fn empty(n: usize, k: usize) -> Self {
        RowStrictTableau { n, rows: vec![Vec::new(); k] }
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Composition {
        Composition(self.rows.iter().map(Vec::len).collect())
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// The smallest entry `n − m + 1`, if any box exists.
    pub fn smallest_entry(&self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.n - self.size() + 1)
        }
    }

    /// `(row, column)` of entry `i`, both 1-based.
    pub fn position(&self, i: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&v| v == i).map(|c| (r + 1, c + 1))
        })
    }

    pub fn row_of(&self, i: usize) -> Option<usize> {
        self.position(i).map(|(r, _)| r)
    }

    /// `row_of(i)` for `i = 1..=n`, with `0` for absent entries.
    pub fn row_assignment(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v - 1] = r + 1;
            }
        }
        out
    }

    /// Springer inversions `(i, j)`: row `j` holds some `j' > i` either
    /// strictly above `i` in the same column, or in a column strictly to the
    /// right of `i`.
    pub fn springer_inversions(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &i) in row.iter().enumerate() {
                for (j, other) in self.rows.iter().enumerate() {
                    if j == r {
                        continue;
                    }
                    // Columns right of c: other[c..]; the row is decreasing so
                    // checking the first one suffices.
                    let right = other.get(c + 1).is_some_and(|&v| v > i);
                    let above = j < r && other.get(c).is_some_and(|&v| v > i);
                    if right || above {
                        out.insert((i, j + 1));
                    }
                }
            }
        }
        out
    }

    /// `γ_i` = number of Springer inversions with first coordinate `i`,
    /// for `i = 1..=n`.
    pub fn inversion_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, _) in self.springer_inversions() {
            out[i - 1] += 1;
        }
        out
    }

    /// Removes the box holding the smallest entry.
    pub fn eta(&self) -> Result<RowStrictTableau> {
        let m = self.smallest_entry().ok_or(Error::EmptyTableau)?;
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&m) {
                row.pop();
            }
        }
        Ok(RowStrictTableau { n: self.n, rows })
    }

    /// Total order on tableaux of a common shape: first by the row holding
    /// the smallest entry (as ranked by the Springer inversions of the other
    /// tableau), then recursively on `η`.
    pub fn compare(&self, other: &RowStrictTableau) -> Result<Ordering> {
        if self.n != other.n || self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(self.shape().to_string(), other.shape().to_string()));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while let Some(m) = a.smallest_entry() {
            let ra = a.row_of(m).expect("smallest entry present");
            let rb = b.row_of(m).expect("same shape");
            if ra != rb {
                let a_below = b.springer_inversions().contains(&(m, ra));
                let b_below = a.springer_inversions().contains(&(m, rb));
                debug_assert!(a_below != b_below, "trichotomy");
                return Ok(if a_below { Ordering::Less } else { Ordering::Greater });
            }
            a = a.eta()?;
            b = b.eta()?;
        }
        Ok(Ordering::Equal)
    }

    /// The minimal coset representative: in one-line notation, the entries of
    /// each row sorted increasingly, rows concatenated top to bottom.
    pub fn coset_rep(&self) -> Result<Permutation> {
        if !self.shape().is_strong() || self.size() != self.n {
            return Err(Error::WeakShape(self.shape().to_string()));
        }
        let mut word = Vec::with_capacity(self.n);
        for row in &self.rows {
            word.extend(row.iter().rev());
        }
        Permutation::new(word)
    }

    /// Deletes empty rows.
    pub fn upward_justified(&self) -> RowStrictTableau {
        let mut rows: Vec<Vec<usize>> = self.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        if rows.is_empty() {
            rows.push(Vec::new());
        }
        RowStrictTableau { n: self.n, rows }
    }
}

impl fmt::Display for RowStrictTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write!(f, "[")?;
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Rows holding a positive part, ranked by decreasing length, ties broken by
/// row index. The smallest entry placed in the `σ`-th ranked row contributes
/// `σ − 1` Springer inversions.
pub fn row_rank(shape: &[usize]) -> Vec<usize> {
    let mut rows: Vec<usize> = (0..shape.len()).filter(|&r| shape[r] > 0).collect();
    rows.sort_by_key(|&r| (std::cmp::Reverse(shape[r]), r));
    rows
}

/// All tableaux of `shape` with content `[n−m+1, n]`, in increasing total order.
pub fn enumerate(shape: &Composition, n: usize) -> Result<Vec<RowStrictTableau>> {
    if shape.size() > n {
        return Err(Error::InvalidComposition(format!("{shape} has more than {n} boxes")));
    }
    fn go(parts: &mut Vec<usize>, n: usize) -> Vec<RowStrictTableau> {
        let m: usize = parts.iter().sum();
        if m == 0 {
            return vec![RowStrictTableau::empty(n, parts.len())];
        }
        let smallest = n - m + 1;
        let mut out = Vec::new();
        for r in row_rank(parts) {
            parts[r] -= 1;
            for mut t in go(parts, n) {
                t.rows[r].push(smallest);
                out.push(t);
            }
            parts[r] += 1;
        }
        out
    }
    let mut parts = shape.parts().to_vec();
    Ok(go(&mut parts, n))
}

impl FromStr for RowStrictTableau {
    type Err = Error;

    /// Parses `[3,1][4,2]` (or `[3,1],[4,2]`); `n` is the largest entry.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut rest = s.trim();
        while let Some(start) = rest.find('[') {
            let end = rest[start..].find(']').ok_or_else(|| Error::InvalidTableau(s.to_string()))? + start;
            let row = rest[start + 1..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidTableau(s.to_string()))?;
            rows.push(row);
            rest = &rest[end + 1..];
        }
        let n = rows.iter().flatten().copied().max().unwrap_or(0);
        RowStrictTableau::new(n, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, rows: &[&[usize]]) -> RowStrictTableau {
        RowStrictTableau::new(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn order_for_two_two() {
        let got: Vec<String> = enumerate(&comp(&[2, 2]), 4).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["[3,1][4,2]", "[4,1][3,2]", "[2,1][4,3]", "[3,2][4,1]", "[4,2][3,1]", "[4,3][2,1]"]);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate(&comp(&[1]), 1).unwrap(), vec![t(1, &[&[1]])]);
        assert_eq!(enumerate(&comp(&[1, 2, 0, 1]), 5).unwrap().len(), 12);
        for n in 1..=6 {
            for a in Composition::all_strong(n) {
                assert_eq!(enumerate(&a, n).unwrap().len() as u128, a.multinomial(), "{a}");
            }
        }
        assert!(enumerate(&comp(&[3, 3]), 5).is_err());
    }

    #[test]
    fn inversions_follow_the_definition() {
        let u = t(9, &[&[6, 3], &[], &[8, 7, 4], &[5, 2], &[9]]);
        let inv: Vec<_> = u.springer_inversions().into_iter().collect();
        assert_eq!(inv, vec![(2, 1), (2, 3), (3, 3), (5, 1), (5, 3), (6, 3)]);
        assert_eq!(u.inversion_vector(), vec![0, 2, 1, 0, 2, 1, 0, 0, 0]);
        assert!(t(3, &[&[3, 2, 1]]).springer_inversions().is_empty());
        let v = t(6, &[&[3, 2, 1], &[6, 5, 4]]);
        assert_eq!(v.springer_inversions().into_iter().collect::<Vec<_>>(), vec![(2, 2), (3, 2)]);
    }

    #[test]
    fn eta_removes_smallest() {
        let u = t(7, &[&[7, 4], &[6, 1], &[5, 3, 2]]);
        assert_eq!(u.eta().unwrap(), t(7, &[&[7, 4], &[6], &[5, 3, 2]]));
        let one = t(1, &[&[1]]);
        assert!(one.eta().unwrap().is_empty());
        assert_eq!(one.eta().unwrap().eta(), Err(Error::EmptyTableau));
    }

    #[test]
    fn compare_matches_generation_order_and_lex() {
        for shape in [comp(&[2, 2]), comp(&[3, 3]), comp(&[1, 2, 1]), comp(&[2, 0, 1])] {
            let n = shape.size();
            let ts = enumerate(&shape, n).unwrap();
            for (i, a) in ts.iter().enumerate() {
                for (j, b) in ts.iter().enumerate() {
                    assert_eq!(a.compare(b).unwrap(), i.cmp(&j));
                    assert_eq!(a.inversion_vector().cmp(&b.inversion_vector()), i.cmp(&j));
                }
            }
        }
        let a = t(4, &[&[3, 1], &[4, 2]]);
        assert!(a.compare(&t(4, &[&[4, 3, 1], &[2]])).is_err());
    }

    #[test]
    fn coset_representatives() {
        let u = t(5, &[&[5, 1], &[2], &[4, 3]]);
        assert_eq!(u.coset_rep().unwrap().one_line(), &[1, 5, 2, 3, 4]);
        assert_eq!(t(4, &[&[3, 1], &[4, 2]]).coset_rep().unwrap().one_line(), &[1, 3, 2, 4]);
        assert_eq!(t(3, &[&[3, 2, 1]]).coset_rep().unwrap(), Permutation::identity(3));
        assert!(t(3, &[&[3], &[], &[2, 1]]).coset_rep().is_err());
    }

    #[test]
    fn parsing_and_display() {
        let u: RowStrictTableau = "[3,1],[4,2]".parse().unwrap();
        assert_eq!(u.to_string(), "[3,1][4,2]");
        assert!("[1,3][2]".parse::<RowStrictTableau>().is_err());
        assert_eq!("2,2".parse::<Composition>().unwrap(), comp(&[2, 2]));
        assert_eq!(comp(&[1, 3, 2]).underlying_partition(), comp(&[3, 2, 1]));
        assert_eq!(Composition::all_strong(6).len(), 32);
        assert_eq!(Composition::partitions(5).len(), 7);
        assert_eq!(comp(&[2, 1, 1]).rearrangements().len(), 3);
    }
}
