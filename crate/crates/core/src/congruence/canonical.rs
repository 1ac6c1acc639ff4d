//! Construction of the canonical block decomposition.
//!
//! Works one generalized eigenspace of `H = J^{-1} A` at a time. For a real
//! eigenvalue the `J`-Hermitian nilpotent part yields Jordan chains whose
//! Gram matrices are anti-diagonal after a Hankel correction of the chain
//! generator; for `μ` with positive imaginary part, chains of `G_μ` are
//! paired with dual chains in `G_μ̄`. Each step splits off a block and
//! recurses on the `J`-orthogonal complement.

use crate::error::{Error, Result};
use crate::forms::pivot_vector;
use crate::matrix::{inner, MatrixK};
use crate::parse::field_sqrt;
use crate::scalar::FieldElement;

use super::eigen::{eigenvalues, Eigenvalue, MAX_PENCIL_SIZE};
use super::{Block, CanonicalForm, CanonicalPair, HermitianPair};

/// Matrix of `op` on the invariant subspace spanned by the columns of `p`.
fn restrict(op: &MatrixK, p: &MatrixK) -> MatrixK {
    let pstar = p.conj_transpose();
    let gram_inv = pstar.mul(p).inverse().expect("independent columns");
    gram_inv.mul(&pstar).mul(op).mul(p)
}

fn nilpotency_index(r: &MatrixK) -> usize {
    let mut k = 0;
    let mut p = MatrixK::identity(r.rows());
    while !p.is_zero() {
        p = p.mul(r);
        k += 1;
    }
    k
}

fn columns_to_matrix(rows: usize, cols: &[Vec<FieldElement>]) -> MatrixK {
    if cols.is_empty() {
        MatrixK::zeros(rows, 0)
    } else {
        MatrixK::from_columns(cols)
    }
}

struct Piece {
    block: Block,
    columns: Vec<Vec<FieldElement>>,
    weight: FieldElement,
}

/// Blocks for a real eigenvalue `lambda` on the subspace with basis `p`.
fn real_blocks(pair: &HermitianPair, lambda: &FieldElement, mut p: MatrixK, out: &mut Vec<Piece>) -> Result<()> {
    let n = pair.size();
    let h = pair.pencil().sub(&MatrixK::identity(n).scale(lambda));
    while p.cols() > 0 {
        let js = pair.j().congruence(&p);
        let r = restrict(&h, &p);
        let k = nilpotency_index(&r);
        let rk1 = r.pow(k as u32 - 1);
        let phi = js.mul(&rk1);
        let x = pivot_vector(&phi).ok_or_else(|| Error::InternalInvariant("degenerate chain form".into()))?;
        let c = inner(&x, &phi.mul_vec(&x));
        // kill the lower Hankel moments of the chain generator
        let two_c_inv = (&c * &FieldElement::from_int(2)).inv().expect("c != 0");
        let mut xp = x.clone();
        for q in 1..k {
            let m = js.mul(&r.pow((k - 1 - q) as u32));
            let hq = inner(&xp, &m.mul_vec(&xp));
            if hq.is_zero() {
                continue;
            }
            let a = -&(&hq * &two_c_inv);
            let step = r.pow(q as u32).mul_vec(&x);
            for (xi, si) in xp.iter_mut().zip(&step) {
                *xi += &(&a * si);
            }
        }
        let sign = c.sign()?;
        let abs_c = if sign > 0 { c.clone() } else { -&c };
        let weight = match field_sqrt(&abs_c) {
            Ok(root) => {
                let inv = root.inv().expect("nonzero");
                xp = xp.iter().map(|v| v * &inv).collect();
                FieldElement::one()
            }
            Err(_) => abs_c,
        };
        let chain: Vec<Vec<FieldElement>> = (1..=k).map(|j| r.pow((k - j) as u32).mul_vec(&xp)).collect();
        let columns: Vec<Vec<FieldElement>> = chain.iter().map(|v| p.mul_vec(v)).collect();
        out.push(Piece {
            block: Block::Real {
                sign,
                size: k,
                eigenvalue: lambda.clone(),
            },
            columns,
            weight,
        });
        // J-orthogonal complement within the subspace
        let vs = columns_to_matrix(js.rows(), &chain);
        let constraint = vs.conj_transpose().mul(&js);
        let ns = constraint.nullspace();
        p = p.mul(&columns_to_matrix(p.cols(), &ns));
    }
    Ok(())
}

/// Blocks for `mu` (imaginary part positive) pairing `G_μ` (basis `p`) with
/// `G_μ̄` (basis `q`).
fn complex_blocks(
    pair: &HermitianPair,
    mu: &FieldElement,
    mut p: MatrixK,
    mut q: MatrixK,
    out: &mut Vec<Piece>,
) -> Result<()> {
    let n = pair.size();
    let id = MatrixK::identity(n);
    let hmu = pair.pencil().sub(&id.scale(mu));
    let hbar = pair.pencil().sub(&id.scale(&mu.conj()));
    let j = pair.j();
    while p.cols() > 0 {
        let r = restrict(&hmu, &p);
        let k = nilpotency_index(&r);
        let rk1 = r.pow(k as u32 - 1);
        let col = (0..rk1.cols())
            .find(|&c| rk1.column(c).iter().any(|v| !v.is_zero()))
            .ok_or_else(|| Error::InternalInvariant("empty chain".into()))?;
        let mut x = vec![FieldElement::zero(); p.cols()];
        x[col] = FieldElement::one();
        // rows (N^p x)* J Q, p = 0..k-1
        let mut rows = Vec::new();
        for pw in 0..k {
            let v = p.mul_vec(&r.pow(pw as u32).mul_vec(&x));
            let jv = j.mul_vec(&v);
            let row: Vec<FieldElement> = (0..q.cols()).map(|c| inner(&jv, &q.column(c))).collect();
            rows.push(row);
        }
        let mut rhs = vec![FieldElement::zero(); k];
        rhs[k - 1] = FieldElement::one();
        let y = MatrixK::from_rows(rows)
            .solve(&rhs)
            .ok_or_else(|| Error::InternalInvariant("dual chain system inconsistent".into()))?;
        let w1 = q.mul_vec(&y);
        let us: Vec<Vec<FieldElement>> = (1..=k).map(|jj| p.mul_vec(&r.pow((k - jj) as u32).mul_vec(&x))).collect();
        let mut ws = vec![w1];
        for _ in 1..k {
            let next = hbar.mul_vec(ws.last().expect("nonempty"));
            ws.push(next);
        }
        let umat = columns_to_matrix(n, &us);
        let wmat = columns_to_matrix(n, &ws);
        let mut columns = us;
        columns.extend(ws);
        out.push(Piece {
            block: Block::Complex {
                size: k,
                alpha: mu.re(),
                beta: mu.im(),
            },
            columns,
            weight: FieldElement::one(),
        });
        let cp = wmat.conj_transpose().mul(j).mul(&p).nullspace();
        let cq = umat.conj_transpose().mul(j).mul(&q).nullspace();
        p = p.mul(&columns_to_matrix(p.cols(), &cp));
        q = q.mul(&columns_to_matrix(q.cols(), &cq));
    }
    Ok(())
}

fn generalized_eigenspace(h: &MatrixK, lambda: &FieldElement, mult: usize) -> MatrixK {
    let n = h.rows();
    let m = h.sub(&MatrixK::identity(n).scale(lambda)).pow(mult as u32);
    columns_to_matrix(n, &m.nullspace())
}

/// Canonical form of `(J, A)` with a verified witness.
pub fn canonical_pair(pair: &HermitianPair) -> Result<CanonicalForm> {
    let n = pair.size();
    if n > MAX_PENCIL_SIZE {
        return Err(Error::UnsupportedSpectrum(format!(
            "pencil of size {n} exceeds the supported {MAX_PENCIL_SIZE}"
        )));
    }
    let h = pair.pencil();
    let eigs = eigenvalues(&h)?;
    let mut values = Vec::new();
    for (e, mult) in &eigs {
        match e {
            Eigenvalue::Value(v) => values.push((v.clone(), *mult)),
            Eigenvalue::Quadratic { .. } => {
                return Err(Error::UnsupportedSpectrum(format!("eigenvalue {e} outside K")))
            }
        }
    }
    let mut pieces = Vec::new();
    for (v, mult) in &values {
        if v.is_real() {
            real_blocks(pair, v, generalized_eigenspace(&h, v, *mult), &mut pieces)?;
        } else if v.im().sign()? > 0 {
            let vbar = v.conj();
            let mbar = values
                .iter()
                .find(|(w, _)| *w == vbar)
                .map(|(_, m)| *m)
                .ok_or_else(|| Error::InternalInvariant("nonreal eigenvalue without conjugate".into()))?;
            complex_blocks(
                pair,
                v,
                generalized_eigenspace(&h, v, *mult),
                generalized_eigenspace(&h, &vbar, mbar),
                &mut pieces,
            )?;
        }
    }
    pieces.sort_by(|a, b| a.block.total_cmp(&b.block));
    let columns: Vec<Vec<FieldElement>> = pieces.iter().flat_map(|p| p.columns.clone()).collect();
    let witness = columns_to_matrix(n, &columns);
    let cf = CanonicalForm {
        pair: CanonicalPair {
            blocks: pieces.iter().map(|p| p.block.clone()).collect(),
        },
        witness,
        weights: pieces.into_iter().map(|p| p.weight).collect(),
    };
    let (jw, aw) = cf.weighted_matrices();
    if cf.witness.cols() != n || pair.j().congruence(&cf.witness) != jw || pair.a().congruence(&cf.witness) != aw {
        return Err(Error::InternalInvariant("canonical witness failed reconstruction".into()));
    }
    Ok(cf)
}
