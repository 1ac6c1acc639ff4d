// Multiply the linear forms of a pair and read off the product's inertia.

use hqforms::{FieldElement, HermitianForm, MatrixK};

pub fn run() -> Result<HermitianForm, Box<dyn std::error::Error>> {
    let j = MatrixK::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    let a = MatrixK::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    let jf = HermitianForm::linear(j)?;
    let b = HermitianForm::linear(a)?.multiply(&jf)?;
    print!("{}", b.to_text());
    println!("inertia {}", b.inertia());
    let back = b.divide(&jf)?;
    print!("{}", back.to_text());
    let z = [FieldElement::one(), FieldElement::i(), FieldElement::from_int(2)];
    println!("value at (1, i, 2): {}", b.eval(&z));
    Ok(b)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
