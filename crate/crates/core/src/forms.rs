//! Bihomogeneous Hermitian polynomials stored as Hermitian coefficient
//! matrices over the Veronese basis.
//!
//! For a form of bidegree `(d,d)` with matrix `M` and `Z = Z_d(z)`,
//! `p(z, z̄) = Z* M Z = Σ M[j][k] z^{β_k} conj(z^{β_j})`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{sesquilinear, MatrixK};
use crate::poly::Poly;
use crate::scalar::FieldElement;
use crate::veronese::VeroneseBasis;

#[derive(Clone, PartialEq, Eq)]
pub struct HermitianForm {
    n: usize,
    d: u32,
    matrix: MatrixK,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// One term `sign * weight * v v*` of a rank-one decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneTerm {
    pub vector: Vec<FieldElement>,
    pub weight: FieldElement,
    pub sign: i8,
}

/// `Σ sign_j λ_j v_j v_j*`, with `λ_j > 0` real.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedDecomposition {
    pub terms: Vec<RankOneTerm>,
}

impl WeightedDecomposition {
    pub fn reconstruct(&self, size: usize) -> MatrixK {
        let mut m = MatrixK::zeros(size, size);
        for t in &self.terms {
            let s = if t.sign > 0 { t.weight.clone() } else { -&t.weight };
            for r in 0..size {
                if t.vector[r].is_zero() {
                    continue;
                }
                let a = &t.vector[r] * &s;
                for c in 0..size {
                    if !t.vector[c].is_zero() {
                        m[(r, c)] += &(&a * &t.vector[c].conj());
                    }
                }
            }
        }
        m
    }

    pub fn inertia(&self, size: usize) -> Inertia {
        let n_plus = self.terms.iter().filter(|t| t.sign > 0).count();
        let n_minus = self.terms.len() - n_plus;
        Inertia {
            n_plus,
            n_minus,
            n_zero: size - self.terms.len(),
        }
    }
}

/// Pick `x` with `x* M x != 0`, preferring a unit vector.
pub fn pivot_vector(m: &MatrixK) -> Option<Vec<FieldElement>> {
    let n = m.rows();
    let unit = |k: usize| {
        let mut v = vec![FieldElement::zero(); n];
        v[k] = FieldElement::one();
        v
    };
    if let Some(k) = (0..n).find(|&k| !m[(k, k)].is_zero()) {
        return Some(unit(k));
    }
    for j in 0..n {
        for k in j + 1..n {
            if !m[(j, k)].is_zero() {
                // x = e_j + conj(m_jk) e_k gives x* M x = 2 |m_jk|^2
                let mut v = unit(j);
                v[k] = m[(j, k)].conj();
                return Some(v);
            }
        }
    }
    None
}

/// Exact congruence elimination of a Hermitian matrix into rank-one terms.
pub fn hermitian_decomposition(m: &MatrixK) -> Result<WeightedDecomposition> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = m.rows();
    let mut rest = m.clone();
    let mut terms = Vec::new();
    while let Some(x) = pivot_vector(&rest) {
        let y = rest.mul_vec(&x);
        let p = crate::matrix::inner(&x, &y);
        let sign = p.sign()?;
        debug_assert!(sign != 0);
        let inv = p.inv().expect("nonzero pivot");
        for r in 0..n {
            if y[r].is_zero() {
                continue;
            }
            let a = &y[r] * &inv;
            for c in 0..n {
                if !y[c].is_zero() {
                    rest[(r, c)] -= &(&a * &y[c].conj());
                }
            }
        }
        let vector = y.iter().map(|v| v * &inv).collect();
        terms.push(RankOneTerm {
            vector,
            weight: if sign > 0 { p } else { -p },
            sign,
        });
    }
    Ok(WeightedDecomposition { terms })
}

/// Sylvester inertia of a Hermitian matrix.
pub fn matrix_inertia(m: &MatrixK) -> Result<Inertia> {
    Ok(hermitian_decomposition(m)?.inertia(m.rows()))
}

impl HermitianForm {
    pub fn new(n: usize, d: u32, matrix: MatrixK) -> Result<Self> {
        let size = VeroneseBasis::new(n, d).len();
        if matrix.rows() != size || matrix.cols() != size {
            return Err(Error::DimensionMismatch(format!(
                "form with n={n} d={d} needs a {size}x{size} matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(HermitianForm { n, d, matrix })
    }

    /// Degree-1 form `z* M z`.
    pub fn linear(matrix: MatrixK) -> Result<Self> {
        let n = matrix.rows().checked_sub(1).ok_or(Error::DimensionMismatch("empty matrix".into()))?;
        Self::new(n, 1, matrix)
    }

    pub fn constant(n: usize, c: FieldElement) -> Result<Self> {
        Self::new(n, 0, MatrixK::from_diag(&[c]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn matrix(&self) -> &MatrixK {
        &self.matrix
    }

    pub fn into_matrix(self) -> MatrixK {
        self.matrix
    }

    pub fn basis(&self) -> VeroneseBasis {
        VeroneseBasis::new(self.n, self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// The form as a polynomial in `z_0..z_n, w_0..w_n` with `w = z̄`.
    pub fn to_bipoly(&self) -> Poly {
        let basis = self.basis();
        let nv = self.n + 1;
        let mut p = Poly::zero(2 * nv);
        for j in 0..basis.len() {
            for k in 0..basis.len() {
                let c = &self.matrix[(j, k)];
                if c.is_zero() {
                    continue;
                }
                let mut e = basis.get(k).clone();
                e.extend(basis.get(j));
                p.add_term(e, c);
            }
        }
        p
    }

    pub fn from_bipoly(n: usize, d: u32, p: &Poly) -> Result<Self> {
        let basis = VeroneseBasis::new(n, d);
        let nv = n + 1;
        let mut m = MatrixK::zeros(basis.len(), basis.len());
        for (e, c) in p.terms() {
            let bad = || Error::DimensionMismatch("polynomial is not bihomogeneous of the given bidegree".into());
            let k = basis.position(&e[..nv]).ok_or_else(bad)?;
            let j = basis.position(&e[nv..]).ok_or_else(bad)?;
            m[(j, k)] = c.clone();
        }
        Self::new(n, d, m)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "forms in {} and {} variables",
                self.n + 1,
                other.n + 1
            )));
        }
        let p = self.to_bipoly().mul(&other.to_bipoly());
        Self::from_bipoly(self.n, self.d + other.d, &p)
    }

    /// The form `A` with `A * divisor = self`, or `NotDivisible`.
    pub fn divide(&self, divisor: &Self) -> Result<Self> {
        if self.n != divisor.n {
            return Err(Error::DimensionMismatch("forms in different variable counts".into()));
        }
        if divisor.is_zero() {
            return Err(Error::DimensionMismatch("division by the zero form".into()));
        }
        if divisor.d > self.d {
            return if self.is_zero() {
                Err(Error::DimensionMismatch("divisor degree exceeds dividend degree".into()))
            } else {
                Err(Error::NotDivisible)
            };
        }
        let q = self
            .to_bipoly()
            .div_exact(&divisor.to_bipoly())
            .ok_or(Error::NotDivisible)?;
        Self::from_bipoly(self.n, self.d - divisor.d, &q).map_err(|_| Error::NotDivisible)
    }

    pub fn inertia(&self) -> Inertia {
        matrix_inertia(&self.matrix).expect("forms are Hermitian")
    }

    pub fn decompose(&self) -> WeightedDecomposition {
        hermitian_decomposition(&self.matrix).expect("forms are Hermitian")
    }

    /// Value `Z* M Z` at a point of `K^{n+1}`.
    pub fn eval(&self, z: &[FieldElement]) -> FieldElement {
        let basis = self.basis();
        let zz: Vec<FieldElement> = basis
            .iter()
            .map(|e| {
                z.iter()
                    .zip(e)
                    .fold(FieldElement::one(), |acc, (x, &k)| &acc * &x.pow(k))
            })
            .collect();
        sesquilinear(&self.matrix, &zz, &zz)
    }

    /// Form with matrix `X^* M X^` where `X^` is induced by `x`.
    pub fn pullback(&self, x: &MatrixK) -> Self {
        let xh = crate::veronese::induced_matrix(x, self.d);
        HermitianForm {
            n: self.n,
            d: self.d,
            matrix: self.matrix.congruence(&xh),
        }
    }

    pub fn to_text(&self) -> String {
        let names: Vec<String> = (0..=self.n).map(|k| format!("z{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let basis = self.basis();
        let labels: Vec<String> = (0..basis.len()).map(|k| basis.label(k, &refs)).collect();
        format!(
            "form n={} d={}\n# basis: {}\n{}",
            self.n,
            self.d,
            labels.join(", "),
            self.matrix.to_text()
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input".into(),
        })?;
        let herr = |msg: &str| Error::Parse {
            line: hline,
            col: 1,
            msg: msg.into(),
        };
        let mut words = header.split_whitespace();
        if words.next() != Some("form") {
            return Err(herr("expected header 'form n=<n> d=<d>'"));
        }
        let mut n = None;
        let mut d = None;
        for w in words {
            if let Some(v) = w.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = w.strip_prefix("d=") {
                d = v.parse::<u32>().ok();
            } else {
                return Err(herr(&format!("unexpected header field '{w}'")));
            }
        }
        let (n, d) = match (n, d) {
            (Some(n), Some(d)) => (n, d),
            _ => return Err(herr("header needs n=<n> and d=<d>")),
        };
        let size = VeroneseBasis::new(n, d).len();
        let mut rows = Vec::new();
        let mut last_line = hline;
        for (ln, l) in lines {
            last_line = ln;
            let raw = text.lines().nth(ln - 1).unwrap_or("");
            let indent = raw.len() - raw.trim_start().len();
            let mut row = Vec::new();
            let mut offset = indent;
            for entry in l.split(',') {
                let lead = entry.len() - entry.trim_start().len();
                let v = crate::parse::parse_scalar_at(entry.trim(), ln).map_err(|e| match e {
                    Error::Parse { line, col, msg } => Error::Parse {
                        line,
                        col: col + offset + lead,
                        msg,
                    },
                    other => other,
                })?;
                row.push(v);
                offset += entry.len() + 1;
            }
            if row.len() != size {
                return Err(Error::Parse {
                    line: ln,
                    col: 1,
                    msg: format!("expected {size} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != size {
            return Err(Error::Parse {
                line: last_line,
                col: 1,
                msg: format!("expected {size} rows, found {}", rows.len()),
            });
        }
        Self::new(n, d, MatrixK::from_rows(rows))
    }
}

impl fmt::Debug for HermitianForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for HermitianForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Form of `F* V W F` for a map with coefficient matrix `F` (rows are
/// components over the Veronese basis), `V = diag(+1 x c, -1 x d_neg)` and
/// optional positive component weights `W`.
pub fn from_map(
    n: usize,
    deg: u32,
    f: &MatrixK,
    signature: (usize, usize),
    weights: Option<&[FieldElement]>,
) -> Result<HermitianForm> {
    let (c, dn) = signature;
    let size = VeroneseBasis::new(n, deg).len();
    if f.cols() != size {
        return Err(Error::DimensionMismatch(format!(
            "map matrix has {} columns, the degree-{deg} basis has {size}",
            f.cols()
        )));
    }
    if f.rows() != c + dn {
        return Err(Error::DimensionMismatch(format!(
            "map has {} components, signature needs {}",
            f.rows(),
            c + dn
        )));
    }
    let diag: Vec<FieldElement> = (0..f.rows())
        .map(|r| {
            let s = FieldElement::from_int(if r < c { 1 } else { -1 });
            match weights {
                Some(w) => &s * &w[r],
                None => s,
            }
        })
        .collect();
    let v = MatrixK::from_diag(&diag);
    HermitianForm::new(n, deg, v.congruence(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_quotient() {
        let j = HermitianForm::linear(MatrixK::from_int_diag(&[1, 1, -1])).unwrap();
        let a = HermitianForm::linear(MatrixK::identity(3)).unwrap();
        let b = a.multiply(&j).unwrap();
        assert_eq!(b.divide(&j).unwrap(), a);
        let one = HermitianForm::constant(2, FieldElement::one()).unwrap();
        assert_eq!(j.divide(&j).unwrap(), one);
        assert_eq!(j.multiply(&one).unwrap(), j);
    }

    #[test]
    fn disc_pair_decomposition() {
        let m = MatrixK::parse_rows(&[&["0", "0", "i"], &["0", "0", "0"], &["-i", "0", "0"]]);
        let dec = hermitian_decomposition(&m).unwrap();
        assert_eq!(dec.terms.len(), 2);
        assert_eq!(dec.reconstruct(3), m);
        assert_eq!(dec.inertia(3), Inertia { n_plus: 1, n_minus: 1, n_zero: 1 });
    }

    #[test]
    fn text_round_trip() {
        let m = MatrixK::parse_rows(&[&["1", "i", "0"], &["-i", "sqrt(2)", "0"], &["0", "0", "-1"]]);
        let f = HermitianForm::linear(m).unwrap();
        assert_eq!(HermitianForm::parse(&f.to_text()).unwrap(), f);
        let bad = "form n=1 d=1\n1, i\ni, 1\n";
        assert_eq!(HermitianForm::parse(bad), Err(Error::NotHermitian));
        match HermitianForm::parse("form n=1 d=1\n1, 0\n0, 1 +\n") {
            Err(Error::Parse { line: 3, col: 7, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
