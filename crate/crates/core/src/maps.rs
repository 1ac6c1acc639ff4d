//! Rational maps between hyperquadrics.
//!
//! A map `Q(a,b) -> Q(c,d)` in `n = a+b` variables is stored homogenized:
//! `n+1` variables with the homogenizing variable last, and `c+d+1`
//! homogeneous components of a common degree, the last being the
//! denominator. Component `k` carries a positive real weight `w_k`; the
//! actual component is `sqrt(w_k)` times the stored polynomial, which keeps
//! everything inside `K` when the root is not.

use std::fmt;

use crate::error::{Error, Result};
use crate::forms::{self, HermitianForm, WeightedDecomposition};
use crate::matrix::MatrixK;
use crate::parse::{field_sqrt, parse_weighted_poly_at};
use crate::poly::Poly;
use crate::scalar::FieldElement;
use crate::veronese::VeroneseBasis;

pub use crate::forms::hermitian_decomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Hyperquadric {
    pub a: usize,
    pub b: usize,
}

impl Hyperquadric {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a + b == 0 {
            return Err(Error::InvalidMap("Q(0,0) is not a hyperquadric".into()));
        }
        Ok(Hyperquadric { a, b })
    }

    pub fn sphere(n: usize) -> Self {
        Hyperquadric { a: n, b: 0 }
    }

    /// Number of nonhomogeneous coordinates.
    pub fn dim(&self) -> usize {
        self.a + self.b
    }

    /// Signature `(positive, negative)` of the homogeneous defining matrix.
    pub fn homogeneous_signature(&self) -> (usize, usize) {
        (self.a, self.b + 1)
    }

    /// `diag(+1 x a, -1 x (b+1))`.
    pub fn homogeneous_matrix(&self) -> MatrixK {
        let d: Vec<i64> = (0..self.dim() + 1).map(|k| if k < self.a { 1 } else { -1 }).collect();
        MatrixK::from_int_diag(&d)
    }

    pub fn form(&self) -> HermitianForm {
        HermitianForm::linear(self.homogeneous_matrix()).expect("diagonal matrices are Hermitian")
    }
}

impl fmt::Display for Hyperquadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({},{})", self.a, self.b)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMap {
    source: Hyperquadric,
    target: Hyperquadric,
    components: Vec<Poly>,
    weights: Vec<FieldElement>,
    degree: u32,
}

impl RationalMap {
    /// Build from homogeneous components (denominator last) with unit weights.
    pub fn homogeneous(source: Hyperquadric, target: Hyperquadric, components: Vec<Poly>) -> Result<Self> {
        let w = vec![FieldElement::one(); components.len()];
        Self::weighted(source, target, components, w)
    }

    pub fn weighted(
        source: Hyperquadric,
        target: Hyperquadric,
        components: Vec<Poly>,
        weights: Vec<FieldElement>,
    ) -> Result<Self> {
        let nv = source.dim() + 1;
        if components.len() != target.dim() + 1 {
            return Err(Error::InvalidMap(format!(
                "{target} needs {} components including the denominator, got {}",
                target.dim() + 1,
                components.len()
            )));
        }
        if weights.len() != components.len() {
            return Err(Error::InvalidMap("one weight per component required".into()));
        }
        for w in &weights {
            if !w.is_real() || w.sign()? <= 0 {
                return Err(Error::InvalidMap(format!("weight {w} is not a positive real")));
            }
        }
        if components.iter().any(|p| p.nvars() != nv) {
            return Err(Error::InvalidMap(format!("{source} maps need {nv} homogeneous variables")));
        }
        if components.last().is_some_and(Poly::is_zero) {
            return Err(Error::InvalidMap("denominator is zero".into()));
        }
        let mut degree = None;
        for p in &components {
            if !p.is_homogeneous() {
                return Err(Error::InvalidMap("components must be homogeneous".into()));
            }
            if let Some(d) = p.degree() {
                match degree {
                    None => degree = Some(d),
                    Some(d0) if d0 != d => {
                        return Err(Error::InvalidMap("components have different degrees".into()))
                    }
                    _ => {}
                }
            }
        }
        let map = RationalMap {
            source,
            target,
            components,
            weights,
            degree: degree.unwrap_or(0),
        };
        map.check_lowest_terms()?;
        Ok(map)
    }

    /// Build from nonhomogeneous numerators and a denominator in `n` variables.
    pub fn affine(source: Hyperquadric, target: Hyperquadric, numerators: Vec<Poly>, den: Poly) -> Result<Self> {
        let w = vec![FieldElement::one(); numerators.len() + 1];
        Self::affine_weighted(source, target, numerators, den, w)
    }

    pub fn affine_weighted(
        source: Hyperquadric,
        target: Hyperquadric,
        numerators: Vec<Poly>,
        den: Poly,
        weights: Vec<FieldElement>,
    ) -> Result<Self> {
        let n = source.dim();
        if numerators.iter().chain([&den]).any(|p| p.nvars() != n) {
            return Err(Error::InvalidMap(format!("{source} maps are written in {n} variables")));
        }
        let d = numerators.iter().chain([&den]).filter_map(Poly::degree).max().unwrap_or(0);
        let comps = numerators.iter().chain([&den]).map(|p| p.homogenize(d)).collect();
        Self::weighted(source, target, comps, weights)
    }

    pub fn source(&self) -> Hyperquadric {
        self.source
    }

    pub fn target(&self) -> Hyperquadric {
        self.target
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn weights(&self) -> &[FieldElement] {
        &self.weights
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(FieldElement::is_one)
    }

    pub fn nvars(&self) -> usize {
        self.source.dim() + 1
    }

    pub fn basis(&self) -> VeroneseBasis {
        VeroneseBasis::new(self.source.dim(), self.degree)
    }

    /// Coefficient matrix `F` (one row per component, columns over the
    /// Veronese basis) with `f = F Z`.
    pub fn coefficient_matrix(&self) -> MatrixK {
        let basis = self.basis();
        let rows = self
            .components
            .iter()
            .map(|p| basis.coefficients(p).expect("homogeneous components"))
            .collect();
        MatrixK::from_rows(rows)
    }

    /// The form `<V f, f>` of the target pulled back by the map.
    pub fn target_form(&self) -> HermitianForm {
        forms::from_map(
            self.source.dim(),
            self.degree,
            &self.coefficient_matrix(),
            self.target.homogeneous_signature(),
            Some(&self.weights),
        )
        .expect("shapes agree by construction")
    }

    /// The quotient `A` with `<V f, f> = A <J z, z>`, certifying that the map
    /// carries the source hyperquadric into the target.
    pub fn verify(&self) -> Result<HermitianForm> {
        let b = self.target_form();
        b.divide(&self.source.form()).map_err(|e| Error::MapInvalid(Box::new(e)))
    }

    /// Components with chart variable `chart` set to 1; the last entry is the
    /// denominator.
    pub fn dehomogenize(&self, chart: usize) -> Result<Vec<Poly>> {
        if chart >= self.nvars() {
            return Err(Error::InvalidMap(format!("chart {chart} out of range")));
        }
        Ok(self.components.iter().map(|p| p.dehomogenize(chart)).collect())
    }

    /// Precompose with the linear map `z -> X z` on homogeneous coordinates.
    pub fn precompose(&self, x: &MatrixK) -> Result<Self> {
        let nv = self.nvars();
        if x.rows() != nv || x.cols() != nv {
            return Err(Error::DimensionMismatch(format!("need a {nv}x{nv} matrix")));
        }
        let subs: Vec<Poly> = (0..nv)
            .map(|r| {
                let mut p = Poly::zero(nv);
                for c in 0..nv {
                    p.add_term(unit_exp(nv, c), &x[(r, c)]);
                }
                p
            })
            .collect();
        let comps = self.components.iter().map(|p| p.compose(&subs)).collect();
        Self::weighted(self.source, self.target, comps, self.weights.clone())
    }

    /// Postcompose with a linear map `C` on the target's homogeneous
    /// coordinates. Requires unit weights.
    pub fn postcompose(&self, c: &MatrixK) -> Result<Self> {
        let m = self.components.len();
        if c.rows() != m || c.cols() != m {
            return Err(Error::DimensionMismatch(format!("need a {m}x{m} matrix")));
        }
        if !self.has_unit_weights() {
            return Err(Error::InvalidMap("cannot mix weighted components".into()));
        }
        let nv = self.nvars();
        let comps = (0..m)
            .map(|r| {
                let mut p = Poly::zero(nv);
                for k in 0..m {
                    p = p.add(&self.components[k].scale(&c[(r, k)]));
                }
                p
            })
            .collect();
        Self::homogeneous(self.source, self.target, comps)
    }

    /// Same components with each root weight folded in when it lies in `K`.
    pub fn fold_weights(&self) -> Self {
        let mut out = self.clone();
        for (p, w) in out.components.iter_mut().zip(out.weights.iter_mut()) {
            if !w.is_one() {
                if let Ok(r) = field_sqrt(w) {
                    *p = p.scale(&r);
                    *w = FieldElement::one();
                }
            }
        }
        out
    }

    fn check_lowest_terms(&self) -> Result<()> {
        let nonzero: Vec<&Poly> = self.components.iter().filter(|p| !p.is_zero()).collect();
        let nv = self.nvars();
        let mut content = vec![u32::MAX; nv];
        for p in &nonzero {
            for (a, b) in content.iter_mut().zip(p.monomial_content()) {
                *a = (*a).min(b);
            }
        }
        if let Some(k) = content.iter().position(|&e| e > 0 && e != u32::MAX) {
            return Err(Error::NotLowestTerms(format!("every component is divisible by variable {k}")));
        }
        if (1..=3).contains(&self.degree) {
            if let Some(l) = common_linear_factor(&nonzero, nv) {
                let names: Vec<String> = (0..nv).map(|k| format!("x{k}")).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                return Err(Error::NotLowestTerms(format!("common factor {}", l.fmt_with(&refs))));
            }
        }
        Ok(())
    }

    pub fn variable_names(&self) -> Vec<String> {
        (1..=self.source.dim()).map(|k| format!("z{k}")).collect()
    }

    /// Text in the map file format, dehomogenized at the last variable.
    pub fn to_text(&self) -> String {
        let names = self.variable_names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut s = format!("map {} -> {}\n", self.source, self.target);
        let last = self.nvars() - 1;
        let m = self.components.len();
        for (k, (p, w)) in self.components.iter().zip(&self.weights).enumerate() {
            let body = p.dehomogenize(last).fmt_with(&refs);
            let body = if w.is_one() { body } else { format!("sqrt({w})*({body})") };
            if k + 1 == m {
                s.push_str(&format!("den = {body}\n"));
            } else {
                s.push_str(&format!("f{} = {body}\n", k + 1));
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hl, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input".into(),
        })?;
        let (source, target) = parse_header(header, hl)?;
        let n = source.dim();
        let names: Vec<String> = (1..=n).map(|k| format!("z{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let m = target.dim();
        let mut nums: Vec<Option<(FieldElement, Poly)>> = vec![None; m];
        let mut den: Option<(FieldElement, Poly)> = None;
        for (ln, line) in lines {
            let Some(eq) = line.find('=') else {
                return Err(Error::Parse {
                    line: ln,
                    col: 1,
                    msg: "expected '<name> = <polynomial>'".into(),
                });
            };
            let name = line[..eq].trim();
            let rhs = &line[eq + 1..];
            let shift = |e: Error| match e {
                Error::Parse { line, col, msg } => Error::Parse {
                    line,
                    col: col + eq + 1,
                    msg,
                },
                other => other,
            };
            let value = parse_weighted_poly_at(rhs, &refs, ln).map_err(shift)?;
            let col = line.len() - line.trim_start().len() + 1;
            let slot = if name == "den" {
                &mut den
            } else {
                let idx = name
                    .strip_prefix('f')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&k| k >= 1 && k <= m)
                    .ok_or(Error::Parse {
                        line: ln,
                        col,
                        msg: format!("expected f1..f{m} or den, found '{name}'"),
                    })?;
                &mut nums[idx - 1]
            };
            if slot.is_some() {
                return Err(Error::Parse {
                    line: ln,
                    col,
                    msg: format!("'{name}' given twice"),
                });
            }
            *slot = Some(value);
        }
        let mut weights = Vec::new();
        let mut numerators = Vec::new();
        for (k, v) in nums.into_iter().enumerate() {
            let (w, p) = v.ok_or(Error::Parse {
                line: hl,
                col: 1,
                msg: format!("component f{} missing", k + 1),
            })?;
            weights.push(w);
            numerators.push(p);
        }
        let (dw, dp) = den.unwrap_or((FieldElement::one(), Poly::one(n)));
        weights.push(dw);
        Self::affine_weighted(source, target, numerators, dp, weights)
    }
}

fn unit_exp(nv: usize, k: usize) -> Vec<u32> {
    let mut e = vec![0; nv];
    e[k] = 1;
    e
}

fn parse_header(header: &str, line: usize) -> Result<(Hyperquadric, Hyperquadric)> {
    let err = |msg: &str| Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    };
    let rest = header
        .trim()
        .strip_prefix("map")
        .ok_or_else(|| err("expected header 'map Q(a,b) -> Q(c,d)'"))?;
    let (s, t) = rest.split_once("->").ok_or_else(|| err("expected '->' in header"))?;
    let q = |text: &str| -> Result<Hyperquadric> {
        let inner = text
            .trim()
            .strip_prefix("Q(")
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| err("expected Q(a,b)"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| err("expected Q(a,b)"))?;
        let a = a.trim().parse().map_err(|_| err("bad hyperquadric index"))?;
        let b = b.trim().parse().map_err(|_| err("bad hyperquadric index"))?;
        Hyperquadric::new(a, b).map_err(|_| err("Q(0,0) is not a hyperquadric"))
    };
    Ok((q(s)?, q(t)?))
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Grid of small Gaussian integers used to probe common zeros.
fn probe_values(nv: usize) -> Vec<FieldElement> {
    let mut v: Vec<FieldElement> = [0, 1, -1].iter().map(|&x| FieldElement::from_int(x)).collect();
    v.push(FieldElement::i());
    v.push(-FieldElement::i());
    if nv <= 3 {
        v.push(FieldElement::from_int(2));
        v.push(FieldElement::from_int(-2));
    }
    v
}

/// A linear form dividing every polynomial, found among hyperplanes spanned
/// by common zeros on a small grid. Only a heuristic: it never reports a
/// factor that does not divide, but may miss factors with exotic zeros.
fn common_linear_factor(polys: &[&Poly], nv: usize) -> Option<Poly> {
    if polys.is_empty() || nv < 2 {
        return None;
    }
    let vals = probe_values(nv);
    let mut zeros: Vec<Vec<FieldElement>> = Vec::new();
    let total = vals.len().pow(nv as u32);
    for mut idx in 1..total {
        let mut pt = Vec::with_capacity(nv);
        for _ in 0..nv {
            pt.push(vals[idx % vals.len()].clone());
            idx /= vals.len();
        }
        // projective dedup: first nonzero coordinate normalized to 1
        let lead = pt.iter().find(|x| !x.is_zero()).cloned()?;
        if !lead.is_one() {
            continue;
        }
        if polys.iter().all(|p| p.eval(&pt).is_zero()) {
            zeros.push(pt);
        }
    }
    let need = nv - 1;
    let mut tried = 0usize;
    let mut combo: Vec<usize> = (0..need).collect();
    if zeros.len() < need {
        return None;
    }
    loop {
        tried += 1;
        if tried > 5000 {
            return None;
        }
        let pts: Vec<Vec<FieldElement>> = combo.iter().map(|&k| zeros[k].clone()).collect();
        let m = MatrixK::from_rows(pts);
        let ns = m.nullspace();
        if ns.len() == 1 {
            let l = Poly::from_terms(nv, ns[0].iter().enumerate().map(|(k, c)| (unit_exp(nv, k), c.clone())));
            if polys.iter().all(|p| p.div_exact(&l).is_some()) {
                return Some(l);
            }
        }
        // next combination
        let mut i = need;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if combo[i] < zeros.len() - need + i {
                combo[i] += 1;
                for j in i + 1..need {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Rank-one decomposition of a form's matrix (weights kept unrooted).
pub fn decompose_form(b: &HermitianForm) -> WeightedDecomposition {
    b.decompose()
}

/// The map whose components are `sqrt(λ_j) v_j* Z`, positive terms first.
/// The source is `source`; the target is `Q(n_plus, n_minus - 1)`. Common
/// monomial factors are divided out.
pub fn map_from_decomposition(
    source: Hyperquadric,
    d: u32,
    dec: &WeightedDecomposition,
) -> Result<RationalMap> {
    let basis = VeroneseBasis::new(source.dim(), d);
    let nv = source.dim() + 1;
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for t in &dec.terms {
        let p = Poly::from_terms(nv, basis.iter().zip(&t.vector).map(|(e, c)| (e.clone(), c.conj())));
        let (p, w) = match field_sqrt(&t.weight) {
            Ok(r) => (p.scale(&r), FieldElement::one()),
            Err(_) => (p, t.weight.clone()),
        };
        if t.sign > 0 {
            pos.push((p, w));
        } else {
            neg.push((p, w));
        }
    }
    if neg.is_empty() {
        return Err(Error::InvalidMap("form has no negative part to serve as denominator".into()));
    }
    let target = Hyperquadric::new(pos.len(), neg.len() - 1)?;
    let all: Vec<(Poly, FieldElement)> = pos.into_iter().chain(neg).collect();
    let mut content = vec![u32::MAX; nv];
    for (p, _) in &all {
        if !p.is_zero() {
            for (a, b) in content.iter_mut().zip(p.monomial_content()) {
                *a = (*a).min(b);
            }
        }
    }
    let content: Vec<u32> = content.into_iter().map(|e| if e == u32::MAX { 0 } else { e }).collect();
    let (comps, weights) = all.into_iter().map(|(p, w)| (p.div_monomial(&content), w)).unzip();
    RationalMap::weighted(source, target, comps, weights)
}

/// Given maps with the same pulled-back form, find `C` with
/// `C* V C = V` and `g = C f`.
pub fn recover_target_equivalence(f: &RationalMap, g: &RationalMap) -> Result<MatrixK> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::FormsDiffer);
    }
    if !f.has_unit_weights() || !g.has_unit_weights() {
        let (ff, gg) = (f.fold_weights(), g.fold_weights());
        if !ff.has_unit_weights() || !gg.has_unit_weights() {
            return Err(Error::InvalidMap("weighted components cannot be mixed linearly".into()));
        }
        return recover_target_equivalence(&ff, &gg);
    }
    if f.degree != g.degree || f.target_form() != g.target_form() {
        return Err(Error::FormsDiffer);
    }
    let ff = f.coefficient_matrix();
    let gg = g.coefficient_matrix();
    let (_, pivots) = ff.rref();
    if pivots.len() < ff.rows() {
        return Err(Error::DependentComponents);
    }
    let rows: Vec<usize> = (0..ff.rows()).collect();
    let f1 = ff.submatrix(&rows, &pivots);
    let g1 = gg.submatrix(&rows, &pivots);
    let c = g1.mul(&f1.inverse()?);
    let v = f.target.homogeneous_matrix();
    if c.mul(&ff) != gg || v.congruence(&c) != v {
        return Err(Error::InternalInvariant("recovered matrix fails the target check".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(n: usize) -> Hyperquadric {
        Hyperquadric::sphere(n)
    }

    fn map(text: &str) -> RationalMap {
        RationalMap::parse(text).unwrap()
    }

    #[test]
    fn whitney_quotient_is_identity() {
        let f = map("map Q(2,0) -> Q(3,0)\nf1 = z1^2\nf2 = sqrt(2)*z1*z2\nf3 = z2^2\n");
        let a = f.verify().unwrap();
        assert_eq!(a.matrix(), &MatrixK::identity(3));
        assert_eq!(f.source(), sphere(2));
    }

    #[test]
    fn constant_offset_is_invalid() {
        let f = map("map Q(2,0) -> Q(3,0)\nf1 = z1\nf2 = z2\nf3 = 1\n");
        assert!(matches!(f.verify(), Err(Error::MapInvalid(_))));
        let g = map("map Q(2,0) -> Q(2,1)\nf1 = z1\nf2 = z2\nf3 = z2\n");
        assert!(matches!(g.verify(), Err(Error::MapInvalid(_))));
        let h = map("map Q(2,0) -> Q(2,1)\nf1 = 1\nf2 = z2\nf3 = z2\n");
        assert!(h.verify().unwrap().is_zero());
    }

    #[test]
    fn lowest_terms() {
        let s = sphere(2);
        let t = Hyperquadric::new(2, 0).unwrap();
        let x = |k| Poly::var(3, k);
        let err = RationalMap::homogeneous(s, t, vec![x(0).mul(&x(1)), x(0).mul(&x(2)), x(0).mul(&x(0))]);
        assert!(matches!(err, Err(Error::NotLowestTerms(_))));
        let l = x(0).add(&x(1));
        let err = RationalMap::homogeneous(
            s,
            t,
            vec![l.mul(&x(0)), l.mul(&x(2)), l.mul(&x(1))],
        );
        assert!(matches!(err, Err(Error::NotLowestTerms(_))));
    }

    #[test]
    fn text_round_trip() {
        let f = map("map Q(2,0) -> Q(2,1)\nf1 = 2*z2^3\nf2 = z1^3 + 3*z1\nf3 = sqrt(3)*(z2*z1^2 - z2)\nden = 3*z1^2 + 1\n");
        assert_eq!(map(&f.to_text()), f);
        let g = map("map Q(1,0) -> Q(2,0)\nf1 = sqrt(5)*(z1)\nf2 = 0\n");
        assert_eq!(g.weights()[0], FieldElement::from_int(5));
        assert_eq!(map(&g.to_text()), g);
    }

    #[test]
    fn parse_errors_cite_position() {
        match RationalMap::parse("map Q(2,0) -> Q(3,0)\nf1 = z1 +\n") {
            Err(Error::Parse { line: 2, col: 10, .. }) => {}
            other => panic!("{other:?}"),
        }
        match RationalMap::parse("map Q(2,0) -> Q(3,0)\nf1 = z1\nf9 = z2\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn recover_hyperbolic_rotation() {
        let s = sphere(1);
        let t = sphere(1);
        let x = |k| Poly::var(2, k);
        let f = RationalMap::homogeneous(s, t, vec![x(0), x(1)]).unwrap();
        let c = MatrixK::parse_rows(&[&["5/4", "3/4"], &["3/4", "5/4"]]);
        let g = f.postcompose(&c).unwrap();
        assert_eq!(recover_target_equivalence(&f, &g).unwrap(), c);
        assert_eq!(recover_target_equivalence(&f, &f).unwrap(), MatrixK::identity(2));
    }
}
