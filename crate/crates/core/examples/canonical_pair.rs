// Canonical form of a Hermitian pair under simultaneous congruence.

use hqforms::congruence::{canonical_pair, is_simultaneously_diagonalizable, Block, CanonicalForm, HermitianPair};
use hqforms::{FieldElement, MatrixK};

pub fn run() -> Result<CanonicalForm, Box<dyn std::error::Error>> {
    let blocks = [
        Block::Real {
            sign: 1,
            size: 2,
            eigenvalue: FieldElement::from_int(1),
        },
        Block::Real {
            sign: -1,
            size: 1,
            eigenvalue: FieldElement::from_ratio(-1, 2),
        },
    ];
    let (js, as_): (Vec<_>, Vec<_>) = blocks.iter().map(Block::matrices).unzip();
    let x = MatrixK::from_int_rows(&[&[1, 2, 0], &[0, 1, -1], &[1, 0, 1]]);
    let pair = HermitianPair::new(MatrixK::block_diag(&js), MatrixK::block_diag(&as_))?.congruence(&x)?;
    print!("J =\n{}A =\n{}", pair.j().to_text(), pair.a().to_text());
    let cf = canonical_pair(&pair)?;
    print!("{}", cf.pair);
    println!("witness:");
    print!("{}", cf.witness.to_text());
    let (wj, wa) = cf.weighted_matrices();
    assert_eq!(pair.j().congruence(&cf.witness), wj);
    assert_eq!(pair.a().congruence(&cf.witness), wa);
    let (diag, _) = is_simultaneously_diagonalizable(&pair)?;
    println!("diagonalizable: {diag}");
    Ok(cf)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
