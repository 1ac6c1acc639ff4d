//! Characteristic polynomials, exact root finding in `K` and Jordan data of
//! `H = J^{-1} A`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::MatrixK;
use crate::scalar::FieldElement;

/// Univariate polynomial, coefficients from low to high degree, no trailing
/// zeros.
pub type UPoly = Vec<FieldElement>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(FieldElement::is_zero) {
        p.pop();
    }
    p
}

pub fn udeg(p: &UPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn ueval(p: &UPoly, x: &FieldElement) -> FieldElement {
    let mut acc = FieldElement::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn umonic(p: &UPoly) -> UPoly {
    let lead = p.last().expect("nonzero").inv().expect("nonzero lead");
    p.iter().map(|c| c * &lead).collect()
}

/// Quotient and remainder.
pub fn udivrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let db = udeg(b).expect("division by zero polynomial");
    let inv = b[db].inv().expect("nonzero lead");
    let mut r = a.clone();
    let mut q = vec![FieldElement::zero(); a.len().saturating_sub(db).max(1)];
    while let Some(dr) = udeg(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &inv;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &(&c * bk);
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn ugcd(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        umonic(&x)
    }
}

fn uderiv(p: &UPoly) -> UPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &FieldElement::from_int(k as i64))
            .collect(),
    )
}

fn usub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let zero = FieldElement::zero();
    trim(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

/// Yun's squarefree decomposition: `p = Π f_k^k` (monic, `f_k` squarefree).
pub fn squarefree(p: &UPoly) -> Vec<(UPoly, usize)> {
    let p = umonic(p);
    let dp = uderiv(&p);
    let a = ugcd(&p, &dp);
    let mut b = udivrem(&p, &a).0;
    let c = udivrem(&dp, &a).0;
    let mut d = usub(&c, &uderiv(&b));
    let mut out = Vec::new();
    let mut k = 1;
    while udeg(&b).unwrap_or(0) > 0 {
        let g = ugcd(&b, &d);
        b = udivrem(&b, &g).0;
        let c = udivrem(&d, &g).0;
        d = usub(&c, &uderiv(&b));
        if udeg(&g).unwrap_or(0) > 0 {
            out.push((g, k));
        }
        k += 1;
    }
    out
}

/// Characteristic polynomial `det(x I - H)` by Faddeev-LeVerrier.
pub fn charpoly(h: &MatrixK) -> UPoly {
    let n = h.rows();
    let mut coeffs = vec![FieldElement::zero(); n + 1];
    coeffs[n] = FieldElement::one();
    let mut m = MatrixK::zeros(n, n);
    let id = MatrixK::identity(n);
    for k in 1..=n {
        m = h.mul(&m).add(&id.scale(&coeffs[n - k + 1]));
        let hm = h.mul(&m);
        let tr: FieldElement = hm.diag().into_iter().sum();
        coeffs[n - k] = -&(&tr * &FieldElement::from_ratio(1, k as i64));
    }
    coeffs
}

/// An eigenvalue in `K`, or a conjugate-free quadratic `x^2 + b x + c`
/// irreducible over `K` whose two roots are processed as a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eigenvalue {
    Value(FieldElement),
    Quadratic { b: FieldElement, c: FieldElement },
}

impl Eigenvalue {
    /// Whether the eigenvalue (both roots, for a quadratic) is real.
    pub fn is_real(&self) -> bool {
        match self {
            Eigenvalue::Value(v) => v.is_real(),
            Eigenvalue::Quadratic { b, c } => {
                b.is_real()
                    && c.is_real()
                    && (b * b - &(c * &FieldElement::from_int(4))).sign().is_ok_and(|s| s > 0)
            }
        }
    }

    pub fn value(&self) -> Option<&FieldElement> {
        match self {
            Eigenvalue::Value(v) => Some(v),
            Eigenvalue::Quadratic { .. } => None,
        }
    }
}

impl std::fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenvalue::Value(v) => write!(f, "{v}"),
            Eigenvalue::Quadratic { b, c } => write!(f, "root of x^2 + ({b})*x + ({c})"),
        }
    }
}

fn to_c(p: &UPoly) -> Vec<Complex64> {
    p.iter().map(FieldElement::to_complex64).collect()
}

fn ceval(p: &[Complex64], x: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
}

/// Durand-Kerner iteration on a squarefree polynomial.
fn numeric_roots(p: &UPoly) -> Vec<Complex64> {
    let pc = to_c(&umonic(p));
    let n = pc.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = ceval(&pc, z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Real values of the eight real basis elements of `K`.
fn real_basis() -> Vec<(FieldElement, f64)> {
    let mut out = Vec::new();
    for b in 0..2 {
        for a in 0..4 {
            let e = FieldElement::basis(a, b, 0, BigRational::one());
            let v = e.to_f64();
            out.push((e, v));
        }
    }
    out
}

/// Best rational approximation with bounded denominator, if close enough.
fn rationalize(x: f64) -> Option<BigRational> {
    if !x.is_finite() || x.abs() > 1e9 {
        return None;
    }
    let tol = 1e-8 * x.abs().max(1.0);
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > 100_000 {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if ((h1 as f64) / (k1 as f64) - x).abs() < tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a;
        if frac.abs() < 1e-14 {
            break;
        }
        r = 1.0 / frac;
    }
    None
}

/// Elements `q * b` (`b` a real basis element) close to `x`.
fn real_candidates(x: f64) -> Vec<FieldElement> {
    if x.abs() < 1e-9 {
        return vec![FieldElement::zero()];
    }
    real_basis()
        .into_iter()
        .filter_map(|(e, v)| rationalize(x / v).map(|q| e.scale(&q)))
        .collect()
}

fn complex_candidates(z: Complex64) -> Vec<FieldElement> {
    let re = real_candidates(z.re);
    let im = real_candidates(z.im);
    let i = FieldElement::i();
    let mut out = Vec::new();
    for a in &re {
        for b in &im {
            out.push(a + &(b * &i));
        }
    }
    out
}

fn linear_factor(r: &FieldElement) -> UPoly {
    vec![-r, FieldElement::one()]
}

/// Roots of a monic squarefree factor, as eigenvalues.
fn factor_roots(f: &UPoly) -> Result<Vec<Eigenvalue>> {
    let mut f = umonic(f);
    let mut out = Vec::new();
    loop {
        match udeg(&f) {
            Some(0) | None => return Ok(out),
            Some(1) => {
                out.push(Eigenvalue::Value(-&f[0]));
                return Ok(out);
            }
            Some(2) => {
                out.extend(quadratic_roots(&f[1], &f[0]));
                return Ok(out);
            }
            Some(_) => {}
        }
        let zs = numeric_roots(&f);
        let mut found = None;
        'outer: for z in &zs {
            for cand in complex_candidates(*z) {
                if ueval(&f, &cand).is_zero() {
                    found = Some(linear_factor(&cand));
                    out.push(Eigenvalue::Value(cand));
                    break 'outer;
                }
            }
        }
        if found.is_none() {
            'pairs: for i in 0..zs.len() {
                for j in i + 1..zs.len() {
                    let s = zs[i] + zs[j];
                    let p = zs[i] * zs[j];
                    for sc in complex_candidates(s) {
                        for pc in complex_candidates(p) {
                            let q = vec![pc.clone(), -&sc, FieldElement::one()];
                            let (_, r) = udivrem(&f, &q);
                            if r.is_empty() {
                                out.extend(quadratic_roots(&q[1], &q[0]));
                                found = Some(q);
                                break 'pairs;
                            }
                        }
                    }
                }
            }
        }
        match found {
            Some(g) => f = udivrem(&f, &g).0,
            None => {
                return Err(Error::UnsupportedSpectrum(format!(
                    "degree {} factor with roots outside the recognizable part of K",
                    udeg(&f).unwrap_or(0)
                )))
            }
        }
    }
}

/// Roots of `x^2 + b x + c`.
fn quadratic_roots(b: &FieldElement, c: &FieldElement) -> Vec<Eigenvalue> {
    let disc = b * b - &(c * &FieldElement::from_int(4));
    match disc.sqrt() {
        Some(s) => {
            let half = FieldElement::from_ratio(1, 2);
            vec![
                Eigenvalue::Value(&(&(-b) + &s) * &half),
                Eigenvalue::Value(&(&(-b) - &s) * &half),
            ]
        }
        None => vec![Eigenvalue::Quadratic { b: b.clone(), c: c.clone() }],
    }
}

/// Eigenvalue with algebraic multiplicity and Jordan block sizes
/// (descending). For a quadratic tag, sizes refer to each of its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData {
    pub eigenvalue: Eigenvalue,
    pub multiplicity: usize,
    pub jordan_sizes: Vec<usize>,
}

pub const MAX_PENCIL_SIZE: usize = 6;

/// Eigenvalues of `H` in `K` (or quadratic tags) with multiplicities.
pub fn eigenvalues(h: &MatrixK) -> Result<Vec<(Eigenvalue, usize)>> {
    let mut out = Vec::new();
    for (f, mult) in squarefree(&charpoly(h)) {
        for e in factor_roots(&f)? {
            out.push((e, mult));
        }
    }
    Ok(out)
}

fn jordan_sizes(n_op: &MatrixK, mult: usize, per_root: usize) -> Vec<usize> {
    let n = n_op.rows();
    let mut ranks = vec![n];
    let mut p = MatrixK::identity(n);
    for _ in 0..mult {
        p = p.mul(n_op);
        ranks.push(p.rank());
    }
    let at_least: Vec<usize> = (1..=mult).map(|k| (ranks[k - 1] - ranks[k]) / per_root).collect();
    let mut sizes = Vec::new();
    for k in (1..=mult).rev() {
        let bigger = if k < mult { at_least[k] } else { 0 };
        for _ in 0..at_least[k - 1] - bigger {
            sizes.push(k);
        }
    }
    sizes
}

/// Jordan structure of `H = J^{-1} A`.
pub fn eigenstructure(h: &MatrixK) -> Result<Vec<EigenData>> {
    if h.rows() > MAX_PENCIL_SIZE {
        return Err(Error::UnsupportedSpectrum(format!(
            "pencil of size {} exceeds the supported {MAX_PENCIL_SIZE}",
            h.rows()
        )));
    }
    let n = h.rows();
    let id = MatrixK::identity(n);
    eigenvalues(h)?
        .into_iter()
        .map(|(e, mult)| {
            let sizes = match &e {
                Eigenvalue::Value(v) => jordan_sizes(&h.sub(&id.scale(v)), mult, 1),
                Eigenvalue::Quadratic { b, c } => {
                    let q = h.mul(h).add(&h.scale(b)).add(&id.scale(c));
                    jordan_sizes(&q, mult, 2)
                }
            };
            Ok(EigenData {
                eigenvalue: e,
                multiplicity: mult,
                jordan_sizes: sizes,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn charpoly_of_diagonal() {
        let h = MatrixK::from_int_diag(&[2, 3, 5]);
        let p = charpoly(&h);
        assert_eq!(p, vec![k("-30"), k("31"), k("-10"), k("1")]);
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2)
        let p = vec![k("2"), k("-3"), k("0"), k("1")];
        let sf = squarefree(&p);
        assert_eq!(sf, vec![(vec![k("2"), k("1")], 1), (vec![k("-1"), k("1")], 2)]);
    }

    #[test]
    fn recognizes_field_roots() {
        // roots sqrt(2), -i, 3/2*root4(2), 1/3
        let roots = [k("sqrt(2)"), k("-i"), k("3/2*root4(2)"), k("1/3")];
        let mut p = vec![k("1")];
        for r in &roots {
            let mut q = vec![FieldElement::zero(); p.len() + 1];
            for (j, c) in p.iter().enumerate() {
                q[j + 1] += c;
                q[j] -= &(c * r);
            }
            p = q;
        }
        let found = factor_roots(&p).unwrap();
        assert_eq!(found.len(), 4);
        for r in &roots {
            assert!(found.contains(&Eigenvalue::Value(r.clone())), "{r}");
        }
    }

    #[test]
    fn jordan_structure() {
        let h = MatrixK::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let e = eigenstructure(&h).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].jordan_sizes, vec![3]);
        let h = MatrixK::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(eigenstructure(&h).unwrap()[0].jordan_sizes, vec![2, 1]);
        // x^2 - 5 has no roots in K
        let h = MatrixK::from_int_rows(&[&[0, 5], &[1, 0]]);
        let e = eigenstructure(&h).unwrap();
        assert!(matches!(e[0].eigenvalue, Eigenvalue::Quadratic { .. }));
        assert!(e[0].eigenvalue.is_real());
        assert_eq!(e[0].jordan_sizes, vec![1]);
    }
}
