//! Structured (JSON) and plain-text renderings of library values.

use num_rational::BigRational;
use serde_json::{json, Value};
use springer_core::expand::rational_string;
use springer_core::{Ambient, Composition, Permutation, Polynomial, RowStrictTableau};

pub fn rational(c: &BigRational) -> Value {
    Value::String(rational_string(c))
}

/// Terms in descending lex order as `{coefficient, x, z}` objects, with a
/// `y` array when the ambient has y-variables.
pub fn polynomial(p: &Polynomial) -> Value {
    let amb: Ambient = p.ambient();
    let (nx, ny) = (amb.nx(), amb.ny());
    let terms = p
        .terms()
        .map(|(m, c)| {
            let e: Vec<u64> = (0..amb.len()).map(|i| u64::from(m.get(i))).collect();
            let mut obj = json!({
                "coefficient": rational(c),
                "x": e[..nx],
                "z": e[nx + ny..],
            });
            if ny > 0 {
                obj["y"] = json!(e[nx..nx + ny]);
            }
            obj
        })
        .collect();
    Value::Array(terms)
}

pub fn tableau(t: &RowStrictTableau) -> Value {
    json!(t.rows())
}

pub fn composition(a: &Composition) -> Value {
    json!(a.parts())
}

pub fn permutation(w: &Permutation) -> Value {
    json!(w.one_line())
}

pub fn matrix(m: &[Vec<Polynomial>]) -> Value {
    Value::Array(m.iter().map(|row| Value::Array(row.iter().map(polynomial).collect())).collect())
}

/// `x1^2*x3` for an exponent vector; `1` when all entries vanish.
pub fn x_monomial(e: &[usize]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Left-aligned columns separated by two spaces; `(none)` without rows.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return "(none)\n".into();
    }
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate() {
            s.push_str(cell);
            if i + 1 < cols {
                s.push_str(&" ".repeat(width[i] - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    out += &line(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use springer_core::Var;

    #[test]
    fn polynomial_objects() {
        let amb = Ambient::new(2, 1);
        let p = &Polynomial::var(amb, Var::X(2)).unwrap() - &Polynomial::var(amb, Var::Z(1)).unwrap();
        assert_eq!(
            polynomial(&p),
            json!([{"coefficient": "1", "x": [0, 1], "z": [0]}, {"coefficient": "-1", "x": [0, 0], "z": [1]}])
        );
        let half = Polynomial::constant(Ambient::with_y(1, 1, 0), BigRational::new(1.into(), 2.into()));
        assert_eq!(polynomial(&half), json!([{"coefficient": "1/2", "x": [0], "y": [0], "z": []}]));
    }

    #[test]
    fn monomials_and_tables() {
        assert_eq!(x_monomial(&[0, 2, 1]), "x2^2*x3");
        assert_eq!(x_monomial(&[0, 0]), "1");
        assert_eq!(table(&["a", "bb"], &[vec!["ccc".into(), "d".into()]]), "a    bb\n---  --\nccc  d\n");
    }
}
