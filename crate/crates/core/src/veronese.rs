//! Degree-`d` monomials in `n+1` variables and the induced action of linear
//! maps on them.
//!
//! Monomials are ordered graded-lexicographically with `z_0` heaviest, i.e.
//! exponent vectors in descending lexicographic order:
//! `z0^2, z0 z1, z0 z2, z1^2, z1 z2, z2^2`.

use std::collections::HashMap;

use crate::matrix::MatrixK;
use crate::poly::Poly;

pub type MultiIndex = Vec<u32>;

pub fn veronese_basis(n: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(vars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if vars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(vars - 1, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n + 1, d, &mut Vec::new(), &mut out);
    out
}

/// `veronese_basis` with a reverse lookup table.
#[derive(Debug, Clone)]
pub struct VeroneseBasis {
    pub n: usize,
    pub d: u32,
    list: Vec<MultiIndex>,
    index: HashMap<MultiIndex, usize>,
}

impl VeroneseBasis {
    pub fn new(n: usize, d: u32) -> Self {
        let list = veronese_basis(n, d);
        let index = list.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
        VeroneseBasis { n, d, list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, k: usize) -> &MultiIndex {
        &self.list[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultiIndex> {
        self.list.iter()
    }

    pub fn position(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Coefficient row vector of a homogeneous degree-`d` polynomial.
    pub fn coefficients(&self, p: &Poly) -> Option<Vec<crate::FieldElement>> {
        let mut row = vec![crate::FieldElement::zero(); self.len()];
        for (e, c) in p.terms() {
            row[self.position(e)?] = c.clone();
        }
        Some(row)
    }

    /// Human-readable monomial label, e.g. `z0^2` or `z0*z2`.
    pub fn label(&self, k: usize, names: &[&str]) -> String {
        let parts: Vec<String> = self.list[k]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { names[v].to_string() } else { format!("{}^{}", names[v], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// The matrix `X^` with `Z_d(X z) = X^ Z_d(z)`.
pub fn induced_matrix(x: &MatrixK, d: u32) -> MatrixK {
    assert!(x.is_square(), "induced_matrix needs a square matrix");
    let nv = x.rows();
    let basis = VeroneseBasis::new(nv - 1, d);
    let images: Vec<Poly> = (0..nv)
        .map(|r| {
            let mut p = Poly::zero(nv);
            for c in 0..nv {
                p = p.add(&Poly::var(nv, c).scale(&x[(r, c)]));
            }
            p
        })
        .collect();
    let mut out = MatrixK::zeros(basis.len(), basis.len());
    for (row, alpha) in basis.iter().enumerate() {
        let mut p = Poly::one(nv);
        for (k, &a) in alpha.iter().enumerate() {
            if a > 0 {
                p = p.mul(&images[k].pow(a));
            }
        }
        for (e, c) in p.terms() {
            let col = basis.position(e).expect("homogeneous of degree d");
            out[(row, col)] = c.clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FieldElement;

    #[test]
    fn basis_orders() {
        assert_eq!(veronese_basis(1, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(
            veronese_basis(2, 2),
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]
        );
        assert_eq!(veronese_basis(2, 1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(veronese_basis(3, 3).len(), 20);
        assert_eq!(veronese_basis(2, 0), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn induced_examples() {
        let id = MatrixK::identity(3);
        assert_eq!(induced_matrix(&id, 3), MatrixK::identity(10));
        let a = FieldElement::from_int(2);
        let b = FieldElement::sqrt3();
        let x = MatrixK::from_diag(&[a.clone(), b.clone()]);
        assert_eq!(induced_matrix(&x, 2), MatrixK::from_diag(&[&a * &a, &a * &b, &b * &b]));
        let y = MatrixK::parse_rows(&[&["1", "i"], &["2", "sqrt(2)"]]);
        assert_eq!(induced_matrix(&y, 1), y);
    }
}
