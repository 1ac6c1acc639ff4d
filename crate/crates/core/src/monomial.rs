//! Homogeneous fewnomials in `(x, y, t)` vanishing on `x + y + t = 0`, their
//! brute-force enumeration, and substitution back to monomial maps.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::automorphism::standardize_hermitian;
use crate::error::{Error, Result};
use crate::forms::HermitianForm;
use crate::maps::{map_from_decomposition, Hyperquadric, RationalMap};
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::scalar::FieldElement;

pub type Exp3 = [u32; 3];

const NAMES: [&str; 3] = ["x", "y", "t"];

/// Homogeneous real polynomial in `(x, y, t)`, terms in graded-lex
/// descending order with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fewnomial {
    degree: u32,
    terms: Vec<(Exp3, FieldElement)>,
}

impl Fewnomial {
    pub fn new(degree: u32, terms: impl IntoIterator<Item = (Exp3, FieldElement)>) -> Result<Self> {
        let mut map: BTreeMap<Exp3, FieldElement> = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::InvalidParameters(format!("term of degree other than {degree}")));
            }
            if !c.is_real() {
                return Err(Error::InvalidParameters(format!("coefficient {c} is not real")));
            }
            *map.entry(e).or_insert_with(FieldElement::zero) += &c;
        }
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Fewnomial { degree, terms })
    }

    pub fn from_poly(p: &Poly) -> Result<Self> {
        if p.nvars() != 3 {
            return Err(Error::DimensionMismatch("fewnomials are in three variables".into()));
        }
        if !p.is_homogeneous() {
            return Err(Error::InvalidParameters("polynomial is not homogeneous".into()));
        }
        let degree = p.degree().unwrap_or(0);
        Self::new(degree, p.terms().iter().map(|(e, c)| ([e[0], e[1], e[2]], c.clone())))
    }

    /// Parse a polynomial in `x`, `y`, `t`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_poly(&parse_poly(text, &NAMES)?)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &[(Exp3, FieldElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(N_+, N_-)`: counts of positive and negative coefficients.
    pub fn signature(&self) -> (usize, usize) {
        let pos = self.terms.iter().filter(|(_, c)| c.sign() == Ok(1)).count();
        (pos, self.terms.len() - pos)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(3, self.terms.iter().map(|(e, c)| (e.to_vec(), c.clone())))
    }

    /// Largest monomial dividing every term.
    pub fn content(&self) -> Exp3 {
        let mut m = [u32::MAX; 3];
        for (e, _) in &self.terms {
            for k in 0..3 {
                m[k] = m[k].min(e[k]);
            }
        }
        if self.terms.is_empty() {
            [0; 3]
        } else {
            m
        }
    }

    /// Divided by its monomial content.
    pub fn reduced(&self) -> Self {
        let m = self.content();
        let degree = self.degree - m.iter().sum::<u32>();
        let terms = self.terms.iter().map(|(e, c)| ([e[0] - m[0], e[1] - m[1], e[2] - m[2]], c.clone()));
        Self::new(degree, terms).expect("still homogeneous")
    }

    /// Variable `k` renamed to `perm[k]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut f = [0; 3];
            for k in 0..3 {
                f[perm[k]] = e[k];
            }
            (f, c.clone())
        });
        Self::new(self.degree, terms).expect("same degree")
    }

    /// Scaled so the leading coefficient is `1`.
    pub fn normalized(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lead)) => {
                let inv = lead.inv().expect("nonzero");
                Fewnomial {
                    degree: self.degree,
                    terms: self.terms.iter().map(|(e, c)| (*e, c * &inv)).collect(),
                }
            }
        }
    }

    /// Representative up to variable permutations, scaling and monomial
    /// factors: the lexicographically least normalized permutation.
    pub fn canonical(&self) -> Self {
        let r = self.reduced();
        PERMUTATIONS
            .iter()
            .map(|&p| r.permuted(p).normalized())
            .min_by(Self::total_cmp)
            .expect("nonempty")
    }

    fn total_cmp(a: &Self, b: &Self) -> Ordering {
        a.degree
            .cmp(&b.degree)
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
            .then_with(|| {
                for ((ea, ca), (eb, cb)) in a.terms.iter().zip(&b.terms) {
                    let o = eb.cmp(ea).then_with(|| ca.cmp_real(cb).expect("real"));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for Fewnomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly().fmt_with(&NAMES))
    }
}

pub const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Whether `p(x, y, -x-y)` vanishes identically.
pub fn check_vanishing(p: &Fewnomial) -> bool {
    let x = Poly::var(3, 0);
    let y = Poly::var(3, 1);
    p.to_poly().compose(&[x.clone(), y.clone(), x.add(&y).neg()]).is_zero()
}

/// `α (-1)^d (x + y)^d`, the unique `φ(x, y)` with `φ - α t^d` vanishing.
pub fn pure_power_complement(d: u32, alpha: &FieldElement) -> Fewnomial {
    let s = Poly::var(3, 0).add(&Poly::var(3, 1)).pow(d);
    let sign = if d % 2 == 0 { alpha.clone() } else { -alpha };
    let p = s.scale(&sign);
    Fewnomial::new(d, p.terms().iter().map(|(e, c)| ([e[0], e[1], e[2]], c.clone()))).expect("homogeneous")
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Nullspace of a rational matrix, one basis vector per free column.
fn rational_nullspace(mut m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for v in m[row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..cols {
                    let sub = &f * &m[row][k];
                    m[r][k] -= sub;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Basis of the polynomials supported on `support` (monomials of one
/// degree) that vanish on `x + y + t = 0`, each normalized.
pub fn vanishing_space(support: &[Exp3]) -> Vec<Fewnomial> {
    let Some(first) = support.first() else { return Vec::new() };
    let d: u32 = first.iter().sum();
    // column of x^i y^j t^k: coefficients of x^i y^j (-x-y)^k in x^a y^(d-a)
    let mut m = vec![vec![BigRational::zero(); support.len()]; d as usize + 1];
    for (col, e) in support.iter().enumerate() {
        let [i, _, k] = *e;
        for l in 0..=k {
            let mut c = binomial(k, l);
            if k % 2 == 1 {
                c = -c;
            }
            m[(i + l) as usize][col] += BigRational::from_integer(c);
        }
    }
    rational_nullspace(m, support.len())
        .into_iter()
        .map(|v| {
            let terms = support
                .iter()
                .zip(v)
                .map(|(e, c)| (*e, FieldElement::from_rational(c)));
            Fewnomial::new(d, terms).expect("homogeneous").normalized()
        })
        .collect()
}

/// Monomials of degree `d` in graded-lex descending order.
pub fn monomials(d: u32) -> Vec<Exp3> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// A solution found on one support before deduplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSolution {
    pub support: Vec<Exp3>,
    /// Dimension of the solution space on this support.
    pub dimension: usize,
    pub poly: Fewnomial,
}

/// Every support of at most `max_terms` monomials of degree `1..=max_degree`
/// carrying a vanishing polynomial that uses all of its monomials.
pub fn enumerate_raw(max_degree: u32, max_terms: usize) -> Vec<RawSolution> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let mons = monomials(d);
        for k in 1..=max_terms.min(mons.len()) {
            combinations(mons.len(), k, &mut |idx| {
                let support: Vec<Exp3> = idx.iter().map(|&i| mons[i]).collect();
                let space = vanishing_space(&support);
                let dimension = space.len();
                for poly in space {
                    if poly.len() == support.len() {
                        out.push(RawSolution {
                            support: support.clone(),
                            dimension,
                            poly,
                        });
                    }
                }
            });
        }
    }
    out
}

/// Vanishing fewnomials up to permutation, scaling and monomial factors.
pub fn enumerate_vanishing_fewnomials(max_degree: u32, max_terms: usize) -> Vec<Fewnomial> {
    dedup(enumerate_raw(max_degree, max_terms).iter().map(|r| &r.poly))
}

pub fn dedup<'a>(polys: impl IntoIterator<Item = &'a Fewnomial>) -> Vec<Fewnomial> {
    let mut out: Vec<Fewnomial> = Vec::new();
    for p in polys {
        let c = p.canonical();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort_by(Fewnomial::total_cmp);
    out
}

/// A polynomial `p(x, y)` with `p = 1` on `x + y = 1`, possibly a family in
/// a real parameter `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePolynomial {
    pub signature: (usize, usize),
    pub text: String,
    pub range: Option<String>,
}

impl fmt::Display for SpherePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {}", self.signature.0, self.signature.1, self.text)?;
        if let Some(r) = &self.range {
            write!(f, ", {r}")?;
        }
        Ok(())
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn rational_poly_2(p: &Poly) -> Vec<((u32, u32), BigRational)> {
    let mut v: Vec<_> = p
        .terms()
        .iter()
        .map(|(e, c)| ((e[0], e[1]), c.as_rational().expect("rational coefficients").clone()))
        .collect();
    v.sort_by(|a, b| (b.0 .0 + b.0 .1, b.0).cmp(&(a.0 .0 + a.0 .1, a.0)));
    v
}

fn fmt_monomial(e: (u32, u32)) -> String {
    let mut parts = Vec::new();
    for (name, k) in [("x", e.0), ("y", e.1)] {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

fn fmt_rational(r: &BigRational) -> String {
    FieldElement::from_rational(r.clone()).to_string()
}

/// `1 + a Q` with the parameter left symbolic.
fn fmt_family(terms: &[((u32, u32), BigRational)]) -> String {
    let mut out = String::new();
    let mut kappa = BigRational::zero();
    for (e, c) in terms {
        if *e == (0, 0) {
            kappa = c.clone();
            continue;
        }
        let mag = c.abs();
        let coef = if mag.is_one() { "a".to_string() } else { format!("{}*a", fmt_rational(&mag)) };
        let item = format!("{coef}*{}", fmt_monomial(*e));
        if out.is_empty() {
            out = if c.is_negative() { format!("-{item}") } else { item };
        } else {
            out += if c.is_negative() { " - " } else { " + " };
            out += &item;
        }
    }
    let mag = kappa.abs();
    let k = if mag.is_one() { "a".to_string() } else { format!("{}*a", fmt_rational(&mag)) };
    if kappa.is_zero() {
        out + " + 1"
    } else {
        format!("{out} + (1 {} {k})", if kappa.is_negative() { "-" } else { "+" })
    }
}

/// Polynomials `p(x, y)` with exactly `n_terms` monomials and `p = 1` on
/// `x + y = 1`, obtained from `p = 1 + a q(x, y, -1)` over the
/// permutations of each vanishing `q`, up to swapping `x` and `y`.
pub fn sphere_polynomials(reps: &[Fewnomial], n_terms: usize) -> Vec<SpherePolynomial> {
    let subs = [Poly::var(2, 0), Poly::var(2, 1), Poly::constant(2, FieldElement::from_int(-1))];
    let swap = [Poly::var(2, 1), Poly::var(2, 0)];
    let mut qs: BTreeSet<String> = BTreeSet::new();
    let mut bases = Vec::new();
    for r in reps {
        for perm in PERMUTATIONS {
            let base = r.permuted(perm).to_poly().compose(&subs);
            let candidates = [base.clone(), base.compose(&swap)].map(|b| {
                let lead = rational_poly_2(&b)[0].1.clone();
                b.scale(&FieldElement::from_rational(lead.recip()))
            });
            let best = candidates
                .into_iter()
                .min_by_key(|b| b.fmt_with(&["x", "y"]))
                .expect("two candidates");
            if qs.insert(best.fmt_with(&["x", "y"])) {
                bases.push(best);
            }
        }
    }
    let mut out = Vec::new();
    for b in &bases {
        let terms = rational_poly_2(b);
        let kappa = terms.iter().find(|(e, _)| *e == (0, 0)).map(|(_, c)| c.clone());
        // sample values of a, with the interval each stands for
        let mut samples: Vec<(BigRational, Option<String>)> = Vec::new();
        match &kappa {
            None => {
                samples.push((q(-1, 1), Some("a < 0".into())));
                samples.push((q(1, 1), Some("a > 0".into())));
            }
            Some(k) => {
                let r = -k.recip();
                let rs = fmt_rational(&r);
                if r.is_positive() {
                    samples.push((q(-1, 1), Some("a < 0".into())));
                    samples.push((&r / q(2, 1), Some(format!("0 < a < {rs}"))));
                    samples.push((r.clone(), None));
                    samples.push((&r * q(2, 1), Some(format!("a > {rs}"))));
                } else {
                    samples.push((&r * q(2, 1), Some(format!("a < {rs}"))));
                    samples.push((r.clone(), None));
                    samples.push((&r / q(2, 1), Some(format!("{rs} < a < 0"))));
                    samples.push((q(1, 1), Some("a > 0".into())));
                }
            }
        }
        for (a, range) in samples {
            let p = Poly::one(2).add(&b.scale(&FieldElement::from_rational(a)));
            if p.len() != n_terms {
                continue;
            }
            let pos = p.terms().values().filter(|c| c.sign() == Ok(1)).count();
            let text = match range {
                None => p.fmt_with(&["x", "y"]),
                Some(_) => fmt_family(&terms),
            };
            out.push(SpherePolynomial {
                signature: (pos, n_terms - pos),
                text,
                range,
            });
        }
    }
    out.sort_by(|a, b| b.signature.cmp(&a.signature).then(a.text.cmp(&b.text)));
    out
}

/// How the variables of a fewnomial were replaced by Hermitian monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substitution {
    /// Variable `k` becomes `signs[k] |z_k|^2`.
    Modulus { signs: [i8; 3] },
    /// Variables `pair` become `sign z_0 z̄_2` and `sign z_2 z̄_0`; the
    /// remaining one becomes `middle_sign |z_1|^2`.
    ZwBar { pair: (usize, usize), sign: i8, middle_sign: i8 },
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |e: i8| if e > 0 { '+' } else { '-' };
        match self {
            Substitution::Modulus { signs } => {
                let parts: Vec<String> = (0..3).map(|k| format!("{} -> {}|z{k}|^2", NAMES[k], s(signs[k]))).collect();
                f.write_str(&parts.join(", "))
            }
            Substitution::ZwBar { pair, sign, middle_sign } => {
                let mid = 3 - pair.0 - pair.1;
                write!(
                    f,
                    "{} -> {}z0*conj(z2), {} -> {}z2*conj(z0), {} -> {}|z1|^2",
                    NAMES[pair.0],
                    s(*sign),
                    NAMES[pair.1],
                    s(*sign),
                    NAMES[mid],
                    s(*middle_sign)
                )
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct FewnomialMap {
    pub map: RationalMap,
    pub substitution: Substitution,
}

fn bi_monomial(holo: [u32; 3], anti: [u32; 3], c: i8) -> Poly {
    let mut e = holo.to_vec();
    e.extend(anti);
    Poly::monomial(6, e, FieldElement::from_int(c as i64))
}

/// Maps obtained from the substitution `subs` (bipolynomials in
/// `z_0..z_2, z̄_0..z̄_2` replacing `x, y, t`).
fn maps_from_substitution(p: &Fewnomial, subs: &[Poly; 3]) -> Vec<RationalMap> {
    let Ok(b) = HermitianForm::from_bipoly(2, p.degree(), &p.to_poly().compose(subs)) else {
        return Vec::new();
    };
    let lin = subs[0].add(&subs[1]).add(&subs[2]);
    let Ok(j) = HermitianForm::from_bipoly(2, 1, &lin) else { return Vec::new() };
    let mut j = j.into_matrix();
    let Ok(inertia) = crate::forms::matrix_inertia(&j) else { return Vec::new() };
    if inertia.n_zero > 0 || inertia.n_plus == 0 || inertia.n_minus == 0 {
        return Vec::new();
    }
    if inertia.n_plus < inertia.n_minus {
        j = j.neg();
    }
    let Ok(x) = standardize_hermitian(&j) else { return Vec::new() };
    let source = Hyperquadric::sphere(2);
    let b = b.pullback(&x);
    let bi = b.inertia();
    let mut orientations = Vec::new();
    if bi.n_plus >= bi.n_minus {
        orientations.push(b.clone());
    }
    if bi.n_plus <= bi.n_minus {
        orientations.push(HermitianForm::new(2, b.d(), b.matrix().neg()).expect("Hermitian"));
    }
    orientations
        .iter()
        .filter_map(|form| map_from_decomposition(source, form.d(), &form.decompose()).ok())
        .filter(|m| m.verify().is_ok())
        .collect()
}

/// Monomial and `z w̄` substitutions of a vanishing fewnomial that yield
/// verified maps out of `Q(2,0)`, deduplicated.
pub fn fewnomial_to_maps(p: &Fewnomial) -> Vec<FewnomialMap> {
    let mut out: Vec<FewnomialMap> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut push = |maps: Vec<RationalMap>, s: Substitution| {
        for m in maps {
            if seen.insert(m.to_text()) {
                out.push(FewnomialMap { map: m, substitution: s.clone() });
            }
        }
    };
    for mask in 0..8u8 {
        let signs: [i8; 3] = [0, 1, 2].map(|k| if mask >> k & 1 == 1 { -1 } else { 1 });
        let subs = [0, 1, 2].map(|k| {
            let mut e = [0; 3];
            e[k] = 1;
            bi_monomial(e, e, signs[k])
        });
        push(maps_from_substitution(p, &subs), Substitution::Modulus { signs });
    }
    for pair in [(0, 1), (0, 2), (1, 2)] {
        let mid = 3 - pair.0 - pair.1;
        for sign in [1i8, -1] {
            for middle_sign in [1i8, -1] {
                let mut subs = [Poly::zero(6), Poly::zero(6), Poly::zero(6)];
                subs[pair.0] = bi_monomial([1, 0, 0], [0, 0, 1], sign);
                subs[pair.1] = bi_monomial([0, 0, 1], [1, 0, 0], sign);
                subs[mid] = bi_monomial([0, 1, 0], [0, 1, 0], middle_sign);
                push(
                    maps_from_substitution(p, &subs),
                    Substitution::ZwBar { pair, sign, middle_sign },
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fewnomial {
        Fewnomial::parse(s).unwrap()
    }

    #[test]
    fn vanishing_examples() {
        assert!(check_vanishing(&f("x + y + t")));
        assert!(check_vanishing(&f("x^3 + y^3 + t^3 - 3*x*y*t")));
        assert!(!check_vanishing(&f("x^2 + y^2 + t^2")));
    }

    #[test]
    fn complements() {
        let one = FieldElement::one();
        assert_eq!(pure_power_complement(1, &one), f("-x - y"));
        assert_eq!(pure_power_complement(2, &one), f("x^2 + 2*x*y + y^2"));
        assert_eq!(pure_power_complement(3, &-one), f("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    }

    #[test]
    fn small_enumerations() {
        let d1 = enumerate_vanishing_fewnomials(1, 4);
        assert_eq!(d1, vec![f("x + y + t").canonical()]);
        let d2 = enumerate_vanishing_fewnomials(2, 4);
        let want: Vec<Fewnomial> = ["x + y + t", "x^2 + y^2 + 2*x*y - t^2", "x^2 + x*y - y*t - t^2"]
            .iter()
            .map(|s| f(s).canonical())
            .collect();
        assert_eq!(d2.len(), 3);
        for w in &want {
            assert!(d2.contains(w), "{w}");
        }
    }
}
