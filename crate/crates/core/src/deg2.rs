//! Degree-two maps: the normal-form family of sphere maps, its classifier,
//! and the four classes of maps `S^3 -> Q(2,1)`.

use std::fmt;

use crate::congruence::{canonical_pair, pairs_congruent, Block, HermitianPair};
use crate::error::{Error, Result};
use crate::matrix::MatrixK;
use crate::maps::{Hyperquadric, RationalMap};
use crate::parse::field_sqrt;
use crate::poly::Poly;
use crate::scalar::FieldElement;

/// Sorted parameters `0 <= t_1 <= ... <= t_n <= 1`, not all equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deg2NormalForm {
    t: Vec<FieldElement>,
}

impl Deg2NormalForm {
    pub fn new(t: Vec<FieldElement>) -> Result<Self> {
        if t.len() < 2 {
            return Err(Error::InvalidParameters("need at least two parameters".into()));
        }
        let zero = FieldElement::zero();
        let one = FieldElement::one();
        for x in &t {
            if !x.is_real() {
                return Err(Error::InvalidParameters(format!("{x} is not real")));
            }
            if x.cmp_real(&zero)?.is_lt() || x.cmp_real(&one)?.is_gt() {
                return Err(Error::InvalidParameters(format!("{x} is outside [0, 1]")));
            }
        }
        if t.windows(2).any(|w| w[0].cmp_real(&w[1]).map_or(true, |o| o.is_gt())) {
            return Err(Error::InvalidParameters("parameters must be sorted".into()));
        }
        if t.iter().all(FieldElement::is_one) {
            return Err(Error::InvalidParameters("t = (1, ..., 1) is the identity".into()));
        }
        Ok(Deg2NormalForm { t })
    }

    /// Sorts before validating.
    pub fn from_unsorted(mut t: Vec<FieldElement>) -> Result<Self> {
        for x in &t {
            if !x.is_real() {
                return Err(Error::InvalidParameters(format!("{x} is not real")));
            }
        }
        t.sort_by(|a, b| a.cmp_real(b).expect("real"));
        Self::new(t)
    }

    pub fn parse(items: &[&str]) -> Result<Self> {
        let t = items.iter().map(|s| s.trim().parse()).collect::<Result<Vec<FieldElement>>>()?;
        Self::from_unsorted(t)
    }

    pub fn t(&self) -> &[FieldElement] {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }
}

impl fmt::Display for Deg2NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.t.iter().map(ToString::to_string).collect();
        write!(f, "t = ({})", items.join(", "))
    }
}

/// `sqrt(w) * p` as a component: the root is folded when it lies in `K`.
fn weighted_component(w: &FieldElement, p: Poly) -> (FieldElement, Poly) {
    match field_sqrt(w) {
        Ok(r) => (FieldElement::one(), p.scale(&r)),
        Err(_) => (w.clone(), p),
    }
}

/// The monomial sphere map with components `sqrt(t_i) z_i`, `sqrt(1 - t_i) z_i^2`
/// and `sqrt(2 - t_i - t_j) z_i z_j`, zero components dropped.
pub fn generate_deg2_map(t: &Deg2NormalForm) -> Result<RationalMap> {
    let n = t.n();
    let nv = n + 1;
    let h = Poly::var(nv, n);
    let one = FieldElement::one();
    let two = FieldElement::from_int(2);
    let mut comps = Vec::new();
    for (i, ti) in t.t.iter().enumerate() {
        if !ti.is_zero() {
            comps.push(weighted_component(ti, Poly::var(nv, i).mul(&h)));
        }
    }
    for i in 0..n {
        for j in i..n {
            let w = if i == j { &one - &t.t[i] } else { &(&two - &t.t[i]) - &t.t[j] };
            if !w.is_zero() {
                comps.push(weighted_component(&w, Poly::var(nv, i).mul(&Poly::var(nv, j))));
            }
        }
    }
    comps.push((one, h.pow(2)));
    let target = Hyperquadric::sphere(comps.len() - 1);
    let (weights, polys) = comps.into_iter().unzip();
    RationalMap::weighted(Hyperquadric::sphere(n), target, polys, weights)
}

fn check_sphere_map(f: &RationalMap) -> Result<()> {
    if f.degree() != 2 {
        return Err(Error::NotDegree2(format!("map has degree {}", f.degree())));
    }
    if f.source().b != 0 || f.target().b != 0 {
        return Err(Error::NotASphereMap(format!("{} -> {}", f.source(), f.target())));
    }
    if f.source().a < 2 {
        return Err(Error::NotASphereMap("source dimension must be at least 2".into()));
    }
    Ok(())
}

/// Normal-form parameters of a degree-two sphere map.
///
/// On the diagonal pair `J = diag(ε)`, `A = diag(ε λ)` the target form is
/// `Σ λ_k x_k^2 + Σ_{k<l} ε_k ε_l (λ_k + λ_l) x_k x_l` in `x_k = |z_k|^2`;
/// in the chart of the `J`-negative variable the linear coefficients are `t`.
pub fn classify_deg2_sphere_map(f: &RationalMap) -> Result<Deg2NormalForm> {
    check_sphere_map(f)?;
    let a = f.verify()?.into_matrix();
    let pair = HermitianPair::new(f.source().homogeneous_matrix(), a)?;
    let cf = canonical_pair(&pair)?;
    let mut diag = Vec::new();
    for b in &cf.pair.blocks {
        match b {
            Block::Real { sign, size: 1, eigenvalue } => diag.push((*sign, eigenvalue.clone())),
            _ => {
                return Err(Error::InternalInvariant(format!(
                    "pair is not simultaneously diagonalizable (block {b})"
                )))
            }
        }
    }
    let m = diag.len();
    let coeff = |k: usize, l: usize| -> FieldElement {
        let (ek, lk) = &diag[k];
        let (el, ll) = &diag[l];
        if k == l {
            lk.clone()
        } else {
            (lk + ll).scale(&num_rational::BigRational::from_integer(((*ek as i64) * (*el as i64)).into()))
        }
    };
    let mut negatives = Vec::new();
    for k in 0..m {
        for l in k..m {
            let c = coeff(k, l);
            if !c.is_zero() && c.sign()? < 0 {
                negatives.push((k, l));
            }
        }
    }
    let s = match negatives.as_slice() {
        [(k, l)] if k == l && diag[*k].0 < 0 => *k,
        _ => {
            return Err(Error::InternalInvariant(
                "target form of the diagonal pair lacks a pure negative denominator".into(),
            ))
        }
    };
    let den = -&coeff(s, s);
    let den_inv = den.inv().expect("nonzero");
    let others: Vec<usize> = (0..m).filter(|&k| k != s).collect();
    // dehomogenized squared norm P(x) with x_s = 1
    let p0 = FieldElement::zero();
    let lin: Vec<FieldElement> = others.iter().map(|&k| &coeff(k, s) * &den_inv).collect();
    let sq: Vec<FieldElement> = others.iter().map(|&k| &coeff(k, k) * &den_inv).collect();
    // origin normalization p -> (p - p(0)) / (1 - p(0))
    let norm = (&FieldElement::one() - &p0).inv().expect("p(0) != 1");
    let t: Vec<FieldElement> = lin.iter().map(|c| &(c - &p0) * &norm).collect();
    let one = FieldElement::one();
    let two = FieldElement::from_int(2);
    for (idx, &k) in others.iter().enumerate() {
        if &sq[idx] * &norm != &one - &t[idx] {
            return Err(Error::InternalInvariant("square coefficient mismatch".into()));
        }
        for (jdx, &l) in others.iter().enumerate().skip(idx + 1) {
            let mixed = &(&coeff(k, l) * &den_inv) * &norm;
            if mixed != &(&two - &t[idx]) - &t[jdx] {
                return Err(Error::InternalInvariant("mixed coefficient mismatch".into()));
            }
        }
    }
    Deg2NormalForm::from_unsorted(t)
}

pub fn equivalent_deg2(f: &RationalMap, g: &RationalMap) -> Result<bool> {
    Ok(classify_deg2_sphere_map(f)? == classify_deg2_sphere_map(g)?)
}

/// The four classes of degree-two maps `S^3 -> Q(2,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Q21Class {
    MonomialI,
    MonomialIi,
    NonDiagIii,
    NonDiagIv,
}

impl Q21Class {
    pub const ALL: [Q21Class; 4] = [Q21Class::MonomialI, Q21Class::MonomialIi, Q21Class::NonDiagIii, Q21Class::NonDiagIv];

    /// Representative pair `(J, A)` of the class.
    pub fn representative(self) -> HermitianPair {
        let (j, a) = match self {
            Q21Class::MonomialI => (MatrixK::from_int_diag(&[1, 1, -1]), MatrixK::from_int_diag(&[1, -1, 1])),
            Q21Class::MonomialIi => (MatrixK::from_int_diag(&[1, 1, -1]), MatrixK::from_int_diag(&[-1, 1, 0])),
            Q21Class::NonDiagIii => (
                MatrixK::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
                MatrixK::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
            ),
            Q21Class::NonDiagIv => (
                MatrixK::from_int_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
                MatrixK::parse_rows(&[&["0", "0", "0"], &["0", "0", "-i"], &["0", "i", "0"]]),
            ),
        };
        HermitianPair::new(j, a).expect("valid representative")
    }
}

impl fmt::Display for Q21Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Q21Class::MonomialI => "6.1(i)",
            Q21Class::MonomialIi => "6.1(ii)",
            Q21Class::NonDiagIii => "6.1(iii)",
            Q21Class::NonDiagIv => "6.1(iv)",
        };
        f.write_str(s)
    }
}

/// Class of a pair `(J, A)` on `C^3` with `J` of inertia `(2, 1)`.
pub fn classify_q21_pair(pair: &HermitianPair) -> Result<Q21Class> {
    for class in Q21Class::ALL {
        if pairs_congruent(pair, &class.representative(), true)? {
            return Ok(class);
        }
    }
    Err(Error::NotInAnyClass(format!("pair with canonical form {}", canonical_pair(pair)?.pair)))
}

pub fn classify_deg2_s3_to_q21(f: &RationalMap) -> Result<Q21Class> {
    if f.degree() != 2 {
        return Err(Error::NotDegree2(format!("map has degree {}", f.degree())));
    }
    if f.source() != Hyperquadric::sphere(2) || f.target() != Hyperquadric::new(2, 1)? {
        return Err(Error::InvalidMap(format!("expected Q(2,0) -> Q(2,1), got {} -> {}", f.source(), f.target())));
    }
    let a = f.verify()?.into_matrix();
    let inertia = f.target_form().inertia();
    if (inertia.n_plus, inertia.n_minus) != (2, 2) {
        return Err(Error::NotInAnyClass(format!("target form has inertia {inertia}")));
    }
    classify_q21_pair(&HermitianPair::new(f.source().homogeneous_matrix(), a)?)
}
