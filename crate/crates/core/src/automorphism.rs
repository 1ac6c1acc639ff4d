//! Linear automorphisms of hyperquadrics over `K` and standardization of
//! Hermitian matrices by congruence.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::forms::hermitian_decomposition;
use crate::matrix::MatrixK;
use crate::parse::field_sqrt;
use crate::scalar::FieldElement;

fn k(s: &str) -> FieldElement {
    s.parse().expect("valid constant")
}

/// A random `X` over `K` with `X* V X = V` for `V = diag(+1 x pos, -1 x neg)`,
/// built as a product of `steps` generators: permutations within a sign
/// class, unit phases, rational rotations and rational boosts.
pub fn random_automorphism<R: Rng + ?Sized>(pos: usize, neg: usize, steps: usize, rng: &mut R) -> MatrixK {
    let n = pos + neg;
    let mut x = MatrixK::identity(n);
    let phases = [k("i"), k("-1"), k("3/5+4/5*i"), k("-i"), k("5/13-12/13*i")];
    let rotations = [("3/5", "4/5"), ("5/13", "12/13"), ("8/17", "15/17")];
    let boosts = [("5/4", "3/4"), ("13/12", "5/12"), ("5/3", "-4/3"), ("17/15", "8/15")];
    for _ in 0..steps {
        let mut g = MatrixK::identity(n);
        match rng.gen_range(0..4) {
            0 => {
                let mut perm: Vec<usize> = (0..pos).collect();
                perm.shuffle(rng);
                let mut tail: Vec<usize> = (pos..n).collect();
                tail.shuffle(rng);
                perm.extend(tail);
                g = MatrixK::zeros(n, n);
                for (r, &c) in perm.iter().enumerate() {
                    g[(r, c)] = FieldElement::one();
                }
            }
            1 => {
                let c = rng.gen_range(0..n);
                g[(c, c)] = phases.choose(rng).expect("nonempty").clone();
            }
            2 => {
                let same: Vec<(usize, usize)> = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| (a < pos) == (b < pos))
                    .collect();
                if let Some(&(a, b)) = same.choose(rng) {
                    let (c, s) = rotations.choose(rng).expect("nonempty");
                    let (c, s) = (k(c), k(s));
                    g[(a, a)] = c.clone();
                    g[(a, b)] = -&s;
                    g[(b, a)] = s;
                    g[(b, b)] = c;
                }
            }
            _ => {
                if pos > 0 && neg > 0 {
                    let a = rng.gen_range(0..pos);
                    let b = rng.gen_range(pos..n);
                    let (c, s) = boosts.choose(rng).expect("nonempty");
                    let (c, s) = (k(c), k(s));
                    g[(a, a)] = c.clone();
                    g[(a, b)] = s.clone();
                    g[(b, a)] = s;
                    g[(b, b)] = c;
                }
            }
        }
        x = x.mul(&g);
    }
    debug_assert!({
        let v = MatrixK::from_int_diag(&(0..n).map(|c| if c < pos { 1 } else { -1 }).collect::<Vec<_>>());
        v.congruence(&x) == v
    });
    x
}

/// Invertible `X` with `X* M X = diag(+1,...,+1,-1,...,-1,0,...,0)`, if the
/// needed square roots lie in `K`.
pub fn standardize_hermitian(m: &MatrixK) -> Result<MatrixK> {
    let n = m.rows();
    let dec = hermitian_decomposition(m)?;
    let mut terms: Vec<_> = dec.terms.iter().collect();
    terms.sort_by_key(|t| -t.sign);
    // rows sqrt(w) u* of L with M = L* D L, completed to a basis
    let mut rows = Vec::new();
    for t in &terms {
        let r = field_sqrt(&t.weight)
            .map_err(|_| Error::NotInField(format!("square root of {}", t.weight)))?;
        rows.push(t.vector.iter().map(|v| &v.conj() * &r).collect::<Vec<_>>());
    }
    // complete with a basis of the kernel directions
    let mut l = MatrixK::from_rows(rows.clone());
    for c in 0..n {
        if l.rows() == n {
            break;
        }
        let mut e = vec![FieldElement::zero(); n];
        e[c] = FieldElement::one();
        let mut trial = rows.clone();
        trial.push(e);
        let cand = MatrixK::from_rows(trial.clone());
        if cand.rank() == trial.len() {
            rows = trial;
            l = cand;
        }
    }
    let x = l.inverse()?;
    let expect: Vec<i64> = (0..n)
        .map(|c| terms.get(c).map_or(0, |t| t.sign as i64))
        .collect();
    if m.congruence(&x) != MatrixK::from_int_diag(&expect) {
        return Err(Error::InternalInvariant("standardization failed".into()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn automorphisms_preserve_the_form() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..10 {
            let x = random_automorphism(2, 1, 5, &mut rng);
            let v = MatrixK::from_int_diag(&[1, 1, -1]);
            assert_eq!(v.congruence(&x), v);
        }
    }

    #[test]
    fn standardize_antidiagonal() {
        let j = MatrixK::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let x = standardize_hermitian(&j).unwrap();
        assert_eq!(j.congruence(&x), MatrixK::from_int_diag(&[1, 1, -1]));
    }
}
