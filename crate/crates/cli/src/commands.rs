use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use springer_core::expand::rational_string;
use springer_core::poly::rat;
use springer_core::schubert::{
    apply_istar, double_schubert_polynomial, equivariant_schubert_expansion, lehmer_code, linear_relations,
    positivity_scan, schubert_polynomial, w_alpha_set, word_string,
};
use springer_core::springer::p_polynomial;
use springer_core::tableaux::enumerate;
use springer_core::verify::{run_suite, VerifyConfig, SUITES};
use springer_core::{
    springer_monomials, Ambient, Composition, OrdinaryExpansion, Permutation, Polynomial, SpringerFiber, Var,
};
use thiserror::Error;

use crate::parse::{parse_poly, ParseError};
use crate::render;

#[derive(Debug, Parser)]
#[command(name = "springer", version, about = "Equivariant Springer monomials and Schubert class projections")]
pub struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Suppress warnings and timing on stderr.
    #[arg(short, long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    #[value(name = "back-sub")]
    BackSub,
    Det,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Row-strict tableaux of a shape in total order.
    Tableaux {
        #[arg(long)]
        alpha: Composition,
        /// Ambient size; content is [n-m+1, n].
        #[arg(long)]
        n: Option<usize>,
    },
    /// Springer monomials and the polynomials P for each tableau.
    Basis {
        #[arg(long)]
        alpha: Composition,
    },
    /// Localization matrix: row i, column j holds the value of P_i at w_j.
    Matrix {
        #[arg(long)]
        alpha: Composition,
    },
    /// Expansion of a polynomial in x and z in the equivariant basis.
    Expand {
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "back-sub")]
        method: Method,
    },
    /// Image of a polynomial in x, or of a Schubert class, in the Springer monomial basis.
    Project {
        #[arg(long)]
        alpha: Composition,
        #[arg(long, conflicts_with = "perm", required_unless_present = "perm")]
        poly: Option<String>,
        #[arg(long)]
        perm: Option<Permutation>,
        /// Expand the double Schubert polynomial equivariantly.
        #[arg(long, requires = "perm")]
        double: bool,
    },
    /// Permutations whose Lehmer codes are the tableau exponents.
    Walpha {
        #[arg(long)]
        alpha: Composition,
    },
    /// Schubert polynomial of a permutation.
    Schubert {
        #[arg(long)]
        perm: Permutation,
        #[arg(long)]
        double: bool,
    },
    /// Scan Schubert images for negative coefficients.
    Positivity {
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Linear relations among the images of Schubert classes of one length.
    Relations {
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        degree: usize,
    },
    /// Run property suites.
    Verify {
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Random inputs per shape.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] springer_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

pub struct Report {
    pub shape: Option<Composition>,
    pub result: Value,
    pub text: String,
    pub warnings: Vec<String>,
    /// Set when a verification suite fails.
    pub failed: bool,
}

impl Report {
    fn new(shape: Option<&Composition>, result: Value, text: String) -> Self {
        Report { shape: shape.cloned(), result, text, warnings: Vec::new(), failed: false }
    }

    pub fn to_json(&self, command: &str) -> Value {
        json!({
            "command": command,
            "shape": self.shape.as_ref().map(render::composition),
            "result": self.result,
            "warnings": self.warnings,
        })
    }
}

fn poly_arg(text: &str, ambient: Ambient) -> Result<Polynomial, CliError> {
    parse_poly(text, ambient).map_err(|e: ParseError| {
        let caret = " ".repeat(e.position());
        CliError::Usage(format!("{e}\n  {text}\n  {caret}^"))
    })
}

fn fiber(alpha: &Composition) -> Result<std::sync::Arc<SpringerFiber>, CliError> {
    if !alpha.is_strong() {
        return Err(CliError::Usage(format!("{alpha} has zero parts; this command needs a strong composition")));
    }
    Ok(SpringerFiber::shared(alpha)?)
}

const SP22_NOTE: &str =
    "known typo: listings of Sp(2,2) that include x2*x3 are wrong; Sp(2,2) = {1, x3, x2, x1, x1*x3, x1*x2} has 6 elements";
const SIGN_NOTE: &str = "known typo: x1+x2+x3-2*z1+z2 is a misprint of x1+x2+x3-2*z1-z2 = P2+P3+P4, the image of the double Schubert class of s3";
const P_DELTA_NOTE: &str = "known typo: for x2*x3*x5 and shape (3,3), P_delta = (x2-z2)*(x3-z2)*(x5-z2); a factor (x3-x2) in its place is wrong";

fn signed_sum(terms: Vec<(String, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (coeff, name)) in terms.into_iter().enumerate() {
        let (neg, body) = match coeff.strip_prefix('-') {
            Some(rest) if !rest.contains([' ', '+']) => (true, rest.to_string()),
            _ => (false, coeff),
        };
        let piece = match body.as_str() {
            "1" => name,
            b if b.contains([' ', '+', '-']) => format!("({b})*{name}"),
            b => format!("{b}*{name}"),
        };
        out += match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out += &piece;
    }
    out
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Tableaux { alpha, n } => tableaux(alpha, *n),
        Command::Basis { alpha } => basis(alpha),
        Command::Matrix { alpha } => matrix(alpha),
        Command::Expand { alpha, poly, method } => expand(alpha, poly, *method),
        Command::Project { alpha, poly, perm, double } => match (poly, perm) {
            (Some(p), _) => project_poly(alpha, p),
            (None, Some(w)) => project_perm(alpha, w, *double),
            (None, None) => Err(CliError::Usage("project needs --poly or --perm".into())),
        },
        Command::Walpha { alpha } => walpha(alpha),
        Command::Schubert { perm, double } => schubert(perm, *double),
        Command::Positivity { alpha, max_length } => positivity(alpha, *max_length),
        Command::Relations { alpha, degree } => relations(alpha, *degree),
        Command::Verify { all: _, suite, max_n, samples } => {
            verify(suite.as_deref(), &VerifyConfig { max_n: *max_n, seed: cli.seed, samples: *samples })
        }
    }
}

fn tuple(v: &[usize]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn tableaux(alpha: &Composition, n: Option<usize>) -> Result<Report, CliError> {
    let n = n.unwrap_or(alpha.size());
    if n < alpha.size() {
        return Err(CliError::Usage(format!("n = {n} is smaller than |alpha| = {}", alpha.size())));
    }
    let ts = enumerate(alpha, n)?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        let p = p_polynomial(t);
        let w = t.coset_rep().ok();
        let inv: Vec<(usize, usize)> = t.springer_inversions().into_iter().collect();
        let gamma = t.inversion_vector();
        let h = t.row_assignment();
        rows.push(vec![
            (i + 1).to_string(),
            t.to_string(),
            p.to_string(),
            w.as_ref().map_or("-".into(), ToString::to_string),
            tuple(&h),
            tuple(&gamma),
            format!("{{{}}}", inv.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(",")),
        ]);
        items.push(json!({
            "index": i + 1,
            "rows": render::tableau(t),
            "P": render::polynomial(&p),
            "w": w.as_ref().map(render::permutation),
            "h": h,
            "gamma": gamma,
            "inversions": inv,
        }));
    }
    let text = format!("alpha = {alpha}, n = {n}: {} tableaux\n", ts.len())
        + &render::table(&["#", "tableau", "P", "w", "h", "gamma", "inversions"], &rows);
    Ok(Report::new(Some(alpha), json!({"n": n, "tableaux": items}), text))
}

fn basis(alpha: &Composition) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let lambda = alpha.underlying_partition();
    let sp = springer_monomials(&lambda)?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for i in 0..fib.len() {
        let t = &fib.tableaux()[i];
        rows.push(vec![
            (i + 1).to_string(),
            t.to_string(),
            render::x_monomial(fib.exponent(i)),
            fib.p_polynomial(i).to_string(),
        ]);
        items.push(json!({
            "index": i + 1,
            "rows": render::tableau(t),
            "exponent": fib.exponent(i),
            "P": render::polynomial(fib.p_polynomial(i)),
        }));
    }
    let listed: Vec<String> = sp.iter().map(|e| render::x_monomial(e)).collect();
    let text = format!("Sp{lambda} = {{{}}} ({} elements)\n", listed.join(", "), sp.len())
        + &render::table(&["#", "tableau", "x^gamma", "P"], &rows);
    let mut report =
        Report::new(Some(alpha), json!({"lambda": render::composition(&lambda), "springer_monomials": sp, "basis": items}), text);
    if lambda.parts() == [2, 2] {
        report.warnings.push(SP22_NOTE.into());
    }
    Ok(report)
}

fn matrix(alpha: &Composition) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let m = fib.localization_matrix();
    let header: Vec<String> = std::iter::once(String::new()).chain((1..=fib.len()).map(|j| format!("w{j}"))).collect();
    let rows: Vec<Vec<String>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| std::iter::once(format!("P{}", i + 1)).chain(row.iter().map(ToString::to_string)).collect())
        .collect();
    let text = format!("alpha = {alpha}: localization matrix, {} x {}\n", fib.len(), fib.len())
        + &render::table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows);
    let tabs: Vec<Value> = fib.tableaux().iter().map(render::tableau).collect();
    Ok(Report::new(Some(alpha), json!({"tableaux": tabs, "matrix": render::matrix(&m)}), text))
}

fn is_sign_typo_input(alpha: &Composition, f: &Polynomial) -> bool {
    if alpha.parts() != [2, 2] {
        return false;
    }
    let amb = f.ambient();
    let v = |var| Polynomial::var(amb, var).expect("in range");
    let base = &(&(&v(Var::X(1)) + &v(Var::X(2))) + &v(Var::X(3))) - &v(Var::Z(1)).scale(&rat(2));
    *f == &base + &v(Var::Z(2)) || *f == &base - &v(Var::Z(2))
}

fn expand(alpha: &Composition, poly: &str, method: Method) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let f = poly_arg(poly, fib.ambient())?;
    let v = fib.localization_vector(&f)?;
    let (expansion, d) = match method {
        Method::BackSub => (fib.expand_back_substitution(&f)?, None),
        Method::Det => {
            let trace = fib.expand_determinant_traced(&f)?;
            (trace.expansion, Some(trace.d))
        }
    };
    let support: Vec<usize> = expansion.support();
    let combo = signed_sum(
        support.iter().map(|&i| (expansion.coefficient(i).to_string(), format!("P{}", i + 1))).collect(),
    );
    let mut rows = Vec::new();
    for i in 0..fib.len() {
        let mut row = vec![(i + 1).to_string(), fib.tableaux()[i].to_string(), v[i].to_string()];
        if let Some(d) = &d {
            row.push(d[i].to_string());
        }
        row.push(expansion.coefficient(i).to_string());
        rows.push(row);
    }
    let header: &[&str] = if d.is_some() { &["#", "tableau", "v", "d", "c"] } else { &["#", "tableau", "v", "c"] };
    let text = format!("f = {f}\nf = {combo}\n") + &render::table(header, &rows);
    let mut result = json!({
        "input": render::polynomial(&f),
        "method": if method == Method::Det { "det" } else { "back-sub" },
        "localizations": v.iter().map(render::polynomial).collect::<Vec<_>>(),
        "coefficients": expansion.coefficients().iter().map(render::polynomial).collect::<Vec<_>>(),
        "support": support.iter().map(|i| i + 1).collect::<Vec<_>>(),
    });
    if let Some(d) = &d {
        result["d"] = Value::Array(d.iter().map(render::polynomial).collect());
    }
    let mut report = Report::new(Some(alpha), result, text);
    if is_sign_typo_input(alpha, &f) {
        report.warnings.push(SIGN_NOTE.into());
    }
    Ok(report)
}

fn ordinary_rows(fib: &SpringerFiber, e: &OrdinaryExpansion) -> (Vec<Vec<String>>, Vec<Value>) {
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (i, ex, c) in e.terms() {
        rows.push(vec![
            (i + 1).to_string(),
            fib.tableaux()[i].to_string(),
            render::x_monomial(ex),
            rational_string(c),
        ]);
        items.push(json!({"index": i + 1, "exponent": ex, "coefficient": render::rational(c)}));
    }
    (rows, items)
}

fn single_monomial(f: &Polynomial) -> Option<Vec<usize>> {
    if f.len() != 1 {
        return None;
    }
    let (m, c) = f.leading_term()?;
    c.is_one().then(|| m.exponents().iter().map(|&e| e as usize).collect())
}

fn project_poly(alpha: &Composition, poly: &str) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let f = poly_arg(poly, Ambient::x_only(fib.n()))?;
    let e = fib.project_polynomial(&f)?;
    let (rows, items) = ordinary_rows(&fib, &e);
    let mut text = format!("pi0({f}) = {}\n", e.to_polynomial()) + &render::table(&["#", "tableau", "x^gamma", "coefficient"], &rows);
    let mut result = json!({"input": render::polynomial(&f), "projection": render::polynomial(&e.to_polynomial()), "terms": items});
    let mut warnings = Vec::new();
    if let Some(delta) = single_monomial(&f) {
        if let Ok(p) = fib.build_p_delta(&delta) {
            let eq = fib.expand_back_substitution(&p)?;
            let eq_rows: Vec<Vec<String>> = eq
                .support()
                .iter()
                .map(|&i| vec![(i + 1).to_string(), fib.tableaux()[i].to_string(), eq.coefficient(i).to_string()])
                .collect();
            text += &format!("\nP_delta = {p}\n");
            text += &render::table(&["#", "tableau", "C"], &eq_rows);
            result["P_delta"] = render::polynomial(&p);
            result["equivariant"] = Value::Array(
                eq.support()
                    .iter()
                    .map(|&i| json!({"index": i + 1, "rows": render::tableau(&fib.tableaux()[i]), "coefficient": render::polynomial(eq.coefficient(i))}))
                    .collect(),
            );
            if alpha.parts() == [3, 3] && delta == [0, 1, 1, 0, 1, 0] {
                warnings.push(P_DELTA_NOTE.to_string());
            }
        }
    }
    let mut report = Report::new(Some(alpha), result, text);
    report.warnings = warnings;
    Ok(report)
}

fn project_perm(alpha: &Composition, w: &Permutation, double: bool) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let w = w.embed(fib.n())?;
    if !double {
        let s = schubert_polynomial(&w);
        let e = fib.project_polynomial(&s)?;
        let (rows, items) = ordinary_rows(&fib, &e);
        let text = format!("pi0(S_{w}) = {}\n", e.to_polynomial()) + &render::table(&["#", "tableau", "x^gamma", "coefficient"], &rows);
        let result = json!({
            "permutation": render::permutation(&w),
            "schubert": render::polynomial(&s),
            "projection": render::polynomial(&e.to_polynomial()),
            "terms": items,
        });
        return Ok(Report::new(Some(alpha), result, text));
    }
    let f = apply_istar(&double_schubert_polynomial(&w), alpha)?;
    let eq = equivariant_schubert_expansion(&w, alpha)?;
    let at_zero = eq.evaluate_at_zero(&fib);
    let rows: Vec<Vec<String>> = eq
        .support()
        .iter()
        .map(|&i| vec![(i + 1).to_string(), fib.tableaux()[i].to_string(), eq.coefficient(i).to_string()])
        .collect();
    let combo = signed_sum(eq.support().iter().map(|&i| (eq.coefficient(i).to_string(), format!("P{}", i + 1))).collect());
    let text = format!("i*(S_{w}(y,x)) = {f}\n  = {combo}\nat z = 0: {}\n", at_zero.to_polynomial())
        + &render::table(&["#", "tableau", "C"], &rows);
    let result = json!({
        "permutation": render::permutation(&w),
        "image": render::polynomial(&f),
        "coefficients": eq.coefficients().iter().map(render::polynomial).collect::<Vec<_>>(),
        "support": eq.support().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "projection": render::polynomial(&at_zero.to_polynomial()),
    });
    Ok(Report::new(Some(alpha), result, text))
}

fn walpha(alpha: &Composition) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let perms = w_alpha_set(alpha)?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for (i, u) in perms.iter().enumerate() {
        let word = word_string(&lehmer_code(u).reduced_word());
        rows.push(vec![
            (i + 1).to_string(),
            fib.tableaux()[i].to_string(),
            tuple(fib.exponent(i)),
            u.to_string(),
            word.clone(),
            u.length().to_string(),
        ]);
        items.push(json!({"index": i + 1, "code": fib.exponent(i), "permutation": render::permutation(u), "word": word, "length": u.length()}));
    }
    let text = format!("W{alpha}: {} permutations\n", perms.len())
        + &render::table(&["#", "tableau", "code", "u", "word", "length"], &rows);
    Ok(Report::new(Some(alpha), json!({"permutations": items}), text))
}

fn schubert(w: &Permutation, double: bool) -> Result<Report, CliError> {
    let p = if double { double_schubert_polynomial(w) } else { schubert_polynomial(w) };
    let code = lehmer_code(w);
    let word = word_string(&code.reduced_word());
    let name = if double { "S_w(y,x)" } else { "S_w(x)" };
    let text = format!("w = {w}, code = {}, length = {}, word = {word}\n{name} = {p}\n", tuple(code.entries()), w.length());
    let result = json!({
        "permutation": render::permutation(w),
        "code": code.entries(),
        "length": w.length(),
        "word": word,
        "double": double,
        "polynomial": render::polynomial(&p),
    });
    Ok(Report::new(None, result, text))
}

fn positivity(alpha: &Composition, max_length: Option<usize>) -> Result<Report, CliError> {
    let fib = fiber(alpha)?;
    let max_length = max_length.unwrap_or(fib.max_degree());
    let rep = positivity_scan(alpha, max_length)?;
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for neg in &rep.negatives {
        rows.push(vec![
            neg.permutation.to_string(),
            (neg.tableau + 1).to_string(),
            fib.tableaux()[neg.tableau].to_string(),
            render::x_monomial(&neg.exponent),
            rational_string(&neg.coefficient),
        ]);
        items.push(json!({
            "permutation": render::permutation(&neg.permutation),
            "index": neg.tableau + 1,
            "rows": render::tableau(&fib.tableaux()[neg.tableau]),
            "exponent": neg.exponent,
            "coefficient": render::rational(&neg.coefficient),
        }));
    }
    let mut text = format!(
        "alpha = {alpha}: {} permutations of length <= {max_length} scanned, {} negative coefficients\n",
        rep.permutations_checked,
        rep.negatives.len()
    );
    if !rows.is_empty() {
        text += &render::table(&["w", "#", "tableau", "x^gamma", "coefficient"], &rows);
    }
    let result = json!({"max_length": max_length, "permutations_checked": rep.permutations_checked, "negatives": items});
    Ok(Report::new(Some(alpha), result, text))
}

fn relations(alpha: &Composition, degree: usize) -> Result<Report, CliError> {
    fiber(alpha)?;
    let rep = linear_relations(alpha, degree)?;
    let names: Vec<String> = rep.permutations.iter().map(|w| word_string(&lehmer_code(w).reduced_word())).collect();
    let mut text = format!("alpha = {alpha}, length {degree}: {} permutations\n", rep.permutations.len());
    let rows: Vec<Vec<String>> = rep
        .permutations
        .iter()
        .zip(&names)
        .zip(&rep.images)
        .map(|((w, name), img)| vec![w.to_string(), name.clone(), img.to_polynomial().to_string()])
        .collect();
    text += &render::table(&["w", "word", "pi0(S_w)"], &rows);
    text += &format!("{} relations\n", rep.relations.len());
    for rel in &rep.relations {
        let terms: Vec<(String, String)> = rel
            .iter()
            .zip(&names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| (rational_string(c), format!("pi0(S_{name})")))
            .collect();
        text += &format!("  {} = 0\n", signed_sum(terms));
    }
    let result = json!({
        "degree": degree,
        "permutations": rep.permutations.iter().map(render::permutation).collect::<Vec<_>>(),
        "words": names,
        "images": rep.images.iter().map(|e| render::polynomial(&e.to_polynomial())).collect::<Vec<_>>(),
        "relations": rep.relations.iter().map(|r| r.iter().map(render::rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Report::new(Some(alpha), result, text))
}

fn verify(suite: Option<&str>, cfg: &VerifyConfig) -> Result<Report, CliError> {
    let names: Vec<&str> = match suite {
        Some(s) if SUITES.contains(&s) => vec![s],
        Some(s) => return Err(CliError::Usage(format!("unknown suite `{s}`; available: {}", SUITES.join(", ")))),
        None => SUITES.to_vec(),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    let mut failed = false;
    for name in names {
        let rep = run_suite(name, cfg)?;
        text += &format!("{rep}\n");
        for note in &rep.notes {
            text += &format!("    {note}\n");
        }
        items.push(json!({
            "name": rep.name,
            "checks": rep.checks,
            "passed": rep.passed(),
            "failures": rep.failures,
            "notes": rep.notes,
        }));
        if !rep.passed() {
            failed = true;
            break;
        }
    }
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    counts.insert("max_n", cfg.max_n);
    counts.insert("samples", cfg.samples);
    let result = json!({"config": counts, "seed": cfg.seed, "suites": items, "passed": !failed});
    let mut report = Report::new(None, result, text);
    report.failed = failed;
    Ok(report)
}
