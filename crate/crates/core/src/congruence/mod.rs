//! Simultaneous *-congruence of Hermitian pairs `(J, A)` with `J`
//! invertible: pencil eigenstructure, canonical block decomposition with an
//! exact witness, simultaneous diagonalizability and pair equivalence up to
//! real scaling of `A`.

mod canonical;
pub mod eigen;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::forms::matrix_inertia;
use crate::matrix::MatrixK;
use crate::scalar::FieldElement;

pub use canonical::canonical_pair;
pub use eigen::{EigenData, Eigenvalue, MAX_PENCIL_SIZE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianPair {
    j: MatrixK,
    a: MatrixK,
}

impl HermitianPair {
    pub fn new(j: MatrixK, a: MatrixK) -> Result<Self> {
        if !j.is_square() || j.rows() != a.rows() || j.cols() != a.cols() {
            return Err(Error::DimensionMismatch("pair matrices must be square of equal size".into()));
        }
        if !j.is_hermitian() || !a.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        if j.rank() < j.rows() {
            return Err(Error::Singular);
        }
        Ok(HermitianPair { j, a })
    }

    pub fn j(&self) -> &MatrixK {
        &self.j
    }

    pub fn a(&self) -> &MatrixK {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.j.rows()
    }

    /// `H = J^{-1} A`.
    pub fn pencil(&self) -> MatrixK {
        self.j.inverse().expect("J is invertible").mul(&self.a)
    }

    /// `(X* J X, X* A X)`.
    pub fn congruence(&self, x: &MatrixK) -> Result<Self> {
        Self::new(self.j.congruence(x), self.a.congruence(x))
    }

    pub fn scale_a(&self, s: &FieldElement) -> Self {
        HermitianPair {
            j: self.j.clone(),
            a: self.a.scale(s),
        }
    }
}

/// A Horn-Sergeichuk block.
///
/// `Real` is `ε (Δ_n(1,0), Δ_n(λ,1))`; for `n = 1` it is the diagonal pair
/// `(ε, ε λ)`. `Complex` is `([[0,I],[I,0]], [[0,J_n(μ)*],[J_n(μ),0]])` with
/// `μ = α + iβ`, `β > 0`; the value `μ = i` is allowed, which absorbs the
/// `(M_n, i N_n)` block. Blocks of type `± (Δ_n(0,1), Δ_n(1,0))` need a
/// singular `J` and never occur here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Real {
        sign: i8,
        size: usize,
        eigenvalue: FieldElement,
    },
    Complex {
        size: usize,
        alpha: FieldElement,
        beta: FieldElement,
    },
}

impl Block {
    pub fn size(&self) -> usize {
        match self {
            Block::Real { size, .. } => *size,
            Block::Complex { size, .. } => 2 * size,
        }
    }

    /// The block's pair `(J_b, A_b)`.
    pub fn matrices(&self) -> (MatrixK, MatrixK) {
        match self {
            Block::Real { sign, size, eigenvalue } => {
                let n = *size;
                let s = FieldElement::from_int(*sign as i64);
                let mut j = MatrixK::zeros(n, n);
                let mut a = MatrixK::zeros(n, n);
                for r in 0..n {
                    j[(r, n - 1 - r)] = s.clone();
                    a[(r, n - 1 - r)] = &s * eigenvalue;
                    if r >= 1 {
                        a[(r, n - r)] = s.clone();
                    }
                }
                (j, a)
            }
            Block::Complex { size, alpha, beta } => {
                let n = *size;
                let mu = alpha + &(beta * &FieldElement::i());
                let mut j = MatrixK::zeros(2 * n, 2 * n);
                let mut a = MatrixK::zeros(2 * n, 2 * n);
                for r in 0..n {
                    j[(r, n + r)] = FieldElement::one();
                    j[(n + r, r)] = FieldElement::one();
                    // lower-left J_n(μ), upper-right its adjoint
                    a[(n + r, r)] = mu.clone();
                    a[(r, n + r)] = mu.conj();
                    if r + 1 < n {
                        a[(n + r, r + 1)] = FieldElement::one();
                        a[(r + 1, n + r)] = FieldElement::one();
                    }
                }
                (j, a)
            }
        }
    }

    fn kind(&self) -> u8 {
        match self {
            Block::Real { .. } => 0,
            Block::Complex { .. } => 1,
        }
    }

    /// Documented total order: real before complex, then size, then `+`
    /// before `-`, then parameters in increasing order.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        let by_kind = self.kind().cmp(&other.kind()).then(self.size().cmp(&other.size()));
        if by_kind != Ordering::Equal {
            return by_kind;
        }
        let real = |x: &FieldElement, y: &FieldElement| x.cmp_real(y).expect("real parameters");
        match (self, other) {
            (
                Block::Real { sign: s1, eigenvalue: e1, .. },
                Block::Real { sign: s2, eigenvalue: e2, .. },
            ) => s2.cmp(s1).then_with(|| real(e1, e2)),
            (
                Block::Complex { alpha: a1, beta: b1, .. },
                Block::Complex { alpha: a2, beta: b2, .. },
            ) => real(a1, a2).then_with(|| real(b1, b2)),
            _ => unreachable!(),
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::Real { sign, size: 1, eigenvalue } => {
                write!(f, "diag {}1 a={eigenvalue}", if *sign > 0 { '+' } else { '-' })
            }
            Block::Real { sign, size, eigenvalue } => {
                write!(f, "delta{size} {} alpha={eigenvalue}", if *sign > 0 { '+' } else { '-' })
            }
            Block::Complex { size, alpha, beta } => write!(f, "complex n={size} alpha={alpha} beta={beta}"),
        }
    }
}

/// Canonical block list, sorted by [`Block::total_cmp`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPair {
    pub blocks: Vec<Block>,
}

impl CanonicalPair {
    pub fn matrices(&self) -> (MatrixK, MatrixK) {
        let (js, as_): (Vec<_>, Vec<_>) = self.blocks.iter().map(Block::matrices).unzip();
        (MatrixK::block_diag(&js), MatrixK::block_diag(&as_))
    }

    pub fn is_diagonal(&self) -> bool {
        self.blocks.iter().all(|b| matches!(b, Block::Real { size: 1, .. }))
    }
}

impl fmt::Display for CanonicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Canonical form with its witness: `X* J X = ⊕ w_b J_b` and
/// `X* A X = ⊕ w_b A_b` with positive real block weights `w_b` (1 whenever
/// the needed square root lies in `K`).
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub pair: CanonicalPair,
    pub witness: MatrixK,
    pub weights: Vec<FieldElement>,
}

impl CanonicalForm {
    /// The weighted block sums the witness carries the pair to.
    pub fn weighted_matrices(&self) -> (MatrixK, MatrixK) {
        let (js, as_): (Vec<_>, Vec<_>) = self
            .pair
            .blocks
            .iter()
            .zip(&self.weights)
            .map(|(b, w)| {
                let (j, a) = b.matrices();
                (j.scale(w), a.scale(w))
            })
            .unzip();
        (MatrixK::block_diag(&js), MatrixK::block_diag(&as_))
    }
}

/// Eigenvalues of the pencil with Jordan sizes.
pub fn pencil_eigenstructure(p: &HermitianPair) -> Result<Vec<EigenData>> {
    eigen::eigenstructure(&p.pencil())
}

/// Whether `J` and `A` are simultaneously diagonalizable by *-congruence,
/// with a witness when all eigenvalues lie in `K`.
pub fn is_simultaneously_diagonalizable(p: &HermitianPair) -> Result<(bool, Option<MatrixK>)> {
    let data = pencil_eigenstructure(p)?;
    let ok = data
        .iter()
        .all(|d| d.eigenvalue.is_real() && d.jordan_sizes.iter().all(|&s| s == 1));
    if !ok {
        return Ok((false, None));
    }
    if data.iter().any(|d| d.eigenvalue.value().is_none()) {
        return Ok((true, None));
    }
    let cf = canonical_pair(p)?;
    let x = cf.witness;
    debug_assert!(p.j().congruence(&x).is_diagonal() && p.a().congruence(&x).is_diagonal());
    Ok((true, Some(x)))
}

/// Candidate scalings `λ` with `eig(λ H_p) = eig(H_q)` possible.
fn scaling_candidates(hp: &[Eigenvalue], hq: &[Eigenvalue]) -> Result<Vec<FieldElement>> {
    let mut out = vec![FieldElement::one(), -FieldElement::one()];
    for e in hp.iter().chain(hq) {
        if e.value().is_none() {
            return Err(Error::UnsupportedSpectrum(format!("eigenvalue {e} outside K")));
        }
    }
    for e in hp {
        let x = e.value().expect("checked");
        for f in hq {
            let y = f.value().expect("checked");
            let ratio = if x.is_real() && y.is_real() && !x.is_zero() && !y.is_zero() {
                Some(y / x)
            } else if !x.is_real() && !y.is_real() {
                Some(&y.im() / &x.im())
            } else {
                None
            };
            if let Some(r) = ratio {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

/// Whether `(J_q, A_q)` is *-congruent to `(J_p, λ A_p)` for some real
/// `λ > 0` (any real `λ != 0` with `allow_negation`).
pub fn pairs_congruent(p: &HermitianPair, q: &HermitianPair, allow_negation: bool) -> Result<bool> {
    if p.size() != q.size() {
        return Ok(false);
    }
    if matrix_inertia(p.j())? != matrix_inertia(q.j())? {
        return Ok(false);
    }
    let target = canonical_pair(q)?.pair;
    let ep: Vec<Eigenvalue> = eigen::eigenvalues(&p.pencil())?.into_iter().map(|(e, _)| e).collect();
    let eq: Vec<Eigenvalue> = eigen::eigenvalues(&q.pencil())?.into_iter().map(|(e, _)| e).collect();
    for lambda in scaling_candidates(&ep, &eq)? {
        if lambda.is_zero() || !lambda.is_real() {
            continue;
        }
        if !allow_negation && lambda.sign()? < 0 {
            continue;
        }
        if canonical_pair(&p.scale_a(&lambda))?.pair == target {
            return Ok(true);
        }
    }
    Ok(false)
}
