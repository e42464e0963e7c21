//! Springer monomials, equivariant Springer monomials `P_Υ` and localization.
//!
//! [`SpringerFiber`] bundles everything that depends only on a strong
//! composition `α`: the ordered tableau list, Springer inversions, inversion
//! vectors and lazily built caches used by the expansion routines. Contexts
//! are immutable once built and shared through [`SpringerFiber::shared`].

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::expand::{DeterminantPlan, NumericLocalization, SymbolicSystem};
use crate::permutation::Permutation;
use crate::poly::{Ambient, Polynomial, Var};
use crate::tableaux::{enumerate, row_rank, Composition, RowStrictTableau};

/// Exponent vector of a monomial in `x₁..xₙ`.
pub type ExponentVector = Vec<usize>;

/// The Springer monomial basis `Sp_λ`, as exponent vectors of length `n` in
/// increasing lex order.
///
/// Computed from `Sp'_λ = ⊔_i x_n^{i−1} Sp'_{λ[i]}` with `Sp'_{(1)} = {1}`,
/// where `λ[i]` lowers part `i` by one and re-sorts; the result is twisted by
/// `x_i ↦ x_{n−i+1}`.
pub fn springer_monomials(lambda: &Composition) -> Result<Vec<ExponentVector>> {
    if !lambda.is_partition() {
        return Err(Error::InvalidComposition(format!("{lambda} is not a partition")));
    }
    fn untwisted(parts: &[usize], out: &mut Vec<ExponentVector>, acc: &mut Vec<usize>) {
        let n: usize = parts.iter().sum();
        if n == 1 {
            out.push(acc.clone());
            return;
        }
        for i in 0..parts.len() {
            let mut next = parts.to_vec();
            next[i] -= 1;
            next.sort_unstable_by(|a, b| b.cmp(a));
            while next.last() == Some(&0) {
                next.pop();
            }
            acc[n - 1] = i;
            untwisted(&next, out, acc);
        }
        acc[n - 1] = 0;
    }
    let n = lambda.size();
    let mut out = Vec::new();
    untwisted(lambda.parts(), &mut out, &mut vec![0; n]);
    for e in out.iter_mut() {
        e.reverse();
    }
    out.sort();
    Ok(out)
}

/// The ambient `(n, k)` of tableau-level polynomials.
pub fn tableau_ambient(t: &RowStrictTableau) -> Ambient {
    Ambient::new(t.ambient_n(), t.rows().len())
}

/// `P_Υ = ∏_{(i,j) ∈ Inv(Υ)} (x_i − z_j)`.
pub fn p_polynomial(t: &RowStrictTableau) -> Polynomial {
    product_of_binomials(tableau_ambient(t), t.springer_inversions().into_iter())
}

fn product_of_binomials(amb: Ambient, pairs: impl Iterator<Item = (usize, usize)>) -> Polynomial {
    let mut out = Polynomial::one(amb);
    for (i, j) in pairs {
        let f = Polynomial::binomial(amb, Var::X(i), Var::Z(j)).expect("indices lie in the tableau ambient");
        out = &out * &f;
    }
    out
}

/// `Q_Υ = ∏ (x_m − z_j)` over rows `j` ranked before the row holding the
/// smallest entry `m`, so that `P_Υ = Q_Υ · P_{η(Υ)}`.
pub fn q_factor(t: &RowStrictTableau) -> Result<Polynomial> {
    let m = t.smallest_entry().ok_or(Error::EmptyTableau)?;
    let home = t.row_of(m).expect("smallest entry present") - 1;
    let shape = t.shape();
    let beta = shape.parts();
    let rows = (0..beta.len())
        .filter(|&j| beta[j] > beta[home] || (beta[j] == beta[home] && j < home))
        .map(|j| (m, j + 1));
    Ok(product_of_binomials(tableau_ambient(t), rows))
}

/// `φ_{w_Υ}(f)`: substitutes `x_i ↦ z_{row(i)}`.
pub fn localize(f: &Polynomial, t: &RowStrictTableau) -> Result<Polynomial> {
    if !t.shape().is_strong() || t.size() != t.ambient_n() {
        return Err(Error::WeakShape(t.shape().to_string()));
    }
    localize_rows(f, &t.row_assignment())
}

fn localize_rows(f: &Polynomial, rows: &[usize]) -> Result<Polynomial> {
    let amb = f.ambient();
    if amb.nx() != rows.len() {
        return Err(Error::ShapeMismatch(
            format!("{} x-variables", amb.nx()),
            format!("tableau with n = {}", rows.len()),
        ));
    }
    f.rename(amb, |v| match v {
        Var::X(i) => Some(Var::Z(rows[i - 1])),
        other => Some(other),
    })
}

/// `φ_w(f)` for a permutation `w`: `x_{w(p)} ↦ z_{block(p)}`, where blocks
/// are the consecutive position ranges of `α`.
pub fn localize_at_permutation(f: &Polynomial, w: &Permutation, alpha: &Composition) -> Result<Polynomial> {
    let n = alpha.size();
    if w.size() != n {
        return Err(Error::ShapeMismatch(alpha.to_string(), w.to_string()));
    }
    let block = alpha.block_of_position();
    let mut rows = vec![0; n];
    for p in 1..=n {
        rows[w.apply(p) - 1] = block[p - 1];
    }
    localize_rows(f, &rows)
}

/// Per-shape data for a strong composition `α` of `n`.
#[derive(Debug)]
pub struct SpringerFiber {
    alpha: Composition,
    ambient: Ambient,
    tableaux: Vec<RowStrictTableau>,
    inversions: Vec<Vec<(usize, usize)>>,
    rows: Vec<Vec<usize>>,
    exponents: Vec<ExponentVector>,
    degrees: Vec<usize>,
    position: HashMap<ExponentVector, usize>,
    p_polys: Vec<OnceLock<Polynomial>>,
    pub(crate) numeric: OnceLock<NumericLocalization>,
    pub(crate) systems: Mutex<HashMap<usize, Arc<SymbolicSystem>>>,
    pub(crate) plans: Mutex<HashMap<usize, Arc<DeterminantPlan>>>,
}

fn registry() -> &'static Mutex<HashMap<Composition, Arc<SpringerFiber>>> {
    static CACHE: OnceLock<Mutex<HashMap<Composition, Arc<SpringerFiber>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl SpringerFiber {
    pub fn new(alpha: &Composition) -> Result<Self> {
        if !alpha.is_strong() {
            return Err(Error::WeakShape(alpha.to_string()));
        }
        let n = alpha.size();
        let tableaux = enumerate(alpha, n)?;
        let inversions: Vec<Vec<(usize, usize)>> =
            tableaux.iter().map(|t| t.springer_inversions().into_iter().collect()).collect();
        let rows: Vec<Vec<usize>> = tableaux.iter().map(RowStrictTableau::row_assignment).collect();
        let exponents: Vec<ExponentVector> = inversions
            .iter()
            .map(|inv| {
                let mut e = vec![0; n];
                for &(i, _) in inv {
                    e[i - 1] += 1;
                }
                e
            })
            .collect();
        let degrees = inversions.iter().map(Vec::len).collect();
        let position = exponents.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let p_polys = (0..tableaux.len()).map(|_| OnceLock::new()).collect();
        Ok(SpringerFiber {
            alpha: alpha.clone(),
            ambient: Ambient::new(n, alpha.len()),
            tableaux,
            inversions,
            rows,
            exponents,
            degrees,
            position,
            p_polys,
            numeric: OnceLock::new(),
            systems: Mutex::new(HashMap::new()),
            plans: Mutex::new(HashMap::new()),
        })
    }

    /// Process-wide shared context for `α`.
    pub fn shared(alpha: &Composition) -> Result<Arc<Self>> {
        if let Some(f) = registry().lock().expect("registry poisoned").get(alpha) {
            return Ok(Arc::clone(f));
        }
        let fiber = Arc::new(Self::new(alpha)?);
        let mut map = registry().lock().expect("registry poisoned");
        Ok(Arc::clone(map.entry(alpha.clone()).or_insert(fiber)))
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.ambient.nx()
    }

    pub fn k(&self) -> usize {
        self.ambient.nz()
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// Number of tableaux (torus fixed points).
    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// Tableaux in increasing total order.
    pub fn tableaux(&self) -> &[RowStrictTableau] {
        &self.tableaux
    }

    pub fn inversions(&self, i: usize) -> &[(usize, usize)] {
        &self.inversions[i]
    }

    /// `row_of(entry)` for every entry of tableau `i`.
    pub fn rows(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    /// Inversion vector of tableau `i`, i.e. the exponent of `x^Υ = ev(P_Υ)`.
    pub fn exponent(&self, i: usize) -> &ExponentVector {
        &self.exponents[i]
    }

    pub fn exponents(&self) -> &[ExponentVector] {
        &self.exponents
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    /// Index of the tableau whose inversion vector is `e` (zero-padded).
    pub fn position_of_exponent(&self, e: &[usize]) -> Option<usize> {
        let mut v = e.to_vec();
        v.resize(self.n(), 0);
        if e.len() > self.n() && e[self.n()..].iter().any(|&x| x > 0) {
            return None;
        }
        self.position.get(&v).copied()
    }

    /// Indices of tableaux of degree at most `m`, in total order.
    pub fn indices_up_to_degree(&self, m: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degrees[i] <= m).collect()
    }

    pub fn p_polynomial(&self, i: usize) -> &Polynomial {
        self.p_polys[i].get_or_init(|| product_of_binomials(self.ambient, self.inversions[i].iter().copied()))
    }

    pub fn coset_rep(&self, i: usize) -> Permutation {
        self.tableaux[i].coset_rep().expect("strong shape")
    }

    /// Brings `f` into the ambient `(n, k)`; `f` may live in `x₁..xₙ` alone.
    pub fn lift(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ambient() == self.ambient {
            return Ok(f.clone());
        }
        if f.ambient().ny() > 0 && f.y_degree() > 0 {
            return Err(Error::AmbientMismatch(f.ambient(), self.ambient));
        }
        f.embed(self.ambient)
    }

    /// `φ_{w_j}(f)`.
    pub fn localize(&self, f: &Polynomial, j: usize) -> Result<Polynomial> {
        localize_rows(&self.lift(f)?, &self.rows[j])
    }

    /// `φ_{w_j}(P_i) = ∏_{(a,b) ∈ Inv_i} (z_{row_j(a)} − z_b)`, computed
    /// without expanding `P_i`. `None` when a factor vanishes.
    pub fn localization_factors(&self, i: usize, j: usize) -> Option<Vec<(usize, usize)>> {
        let rows = &self.rows[j];
        let mut out = Vec::with_capacity(self.inversions[i].len());
        for &(a, b) in &self.inversions[i] {
            let r = rows[a - 1];
            if r == b {
                return None;
            }
            out.push((r, b));
        }
        Some(out)
    }

    pub fn localization_entry(&self, i: usize, j: usize) -> Polynomial {
        match self.localization_factors(i, j) {
            None => Polynomial::zero(self.ambient),
            Some(f) => self.z_product(&f),
        }
    }

    /// `∏ (z_a − z_b)` over the given pairs.
    pub(crate) fn z_product(&self, pairs: &[(usize, usize)]) -> Polynomial {
        let mut out = Polynomial::one(self.ambient);
        for &(a, b) in pairs {
            out = &out * &self.z_diff(a, b);
        }
        out
    }

    pub(crate) fn z_diff(&self, a: usize, b: usize) -> Polynomial {
        Polynomial::binomial(self.ambient, Var::Z(a), Var::Z(b)).expect("row indices lie in 1..=k")
    }

    /// The full matrix `[φ_{w_j}(P_i)]`, rows `i` and columns `j` in total order.
    pub fn localization_matrix(&self) -> Vec<Vec<Polynomial>> {
        (0..self.len())
            .map(|i| (0..self.len()).map(|j| self.localization_entry(i, j)).collect())
            .collect()
    }

    /// `Sp_λ` read off the tableaux, sorted increasingly.
    pub fn springer_basis(&self) -> Vec<ExponentVector> {
        // Already sorted: the total order is lex order on inversion vectors.
        self.exponents.clone()
    }

    /// Number of tableaux of each degree.
    pub fn degree_census(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree() + 1];
        for &d in &self.degrees {
            out[d] += 1;
        }
        out
    }

    /// The set `{x^Υ}` as a set, for shape-independence checks.
    pub fn exponent_set(&self) -> BTreeSet<ExponentVector> {
        self.exponents.iter().cloned().collect()
    }

    /// Rank of each row in the placement order of the smallest entry.
    pub fn row_rank(&self) -> Vec<usize> {
        row_rank(self.alpha.parts())
    }
}
