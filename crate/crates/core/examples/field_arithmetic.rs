// Exact arithmetic in Q(i, 2^(1/4), sqrt 3) with exact sign determination.

use hqforms::FieldElement;

pub fn run() -> Result<FieldElement, Box<dyn std::error::Error>> {
    let r = FieldElement::root4_2();
    let s3 = FieldElement::sqrt3();
    println!("r^4 = {}", r.pow(4));
    let x = &(&r * &r) - &FieldElement::sqrt2();
    println!("r^2 - sqrt(2) = {x}");
    let y = &s3 - &FieldElement::parse("7/4")?;
    println!("sign(sqrt(3) - 7/4) = {}", y.sign()?);
    let z = FieldElement::parse("(1 + i)/sqrt(2)")?;
    let inv = z.inv().ok_or("zero")?;
    println!("1/z = {inv}, z * 1/z = {}", &z * &inv);
    let root = FieldElement::parse("3/4")?.sqrt_positive().ok_or("no root")?;
    println!("sqrt(3/4) = {root}");
    Ok(root)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
