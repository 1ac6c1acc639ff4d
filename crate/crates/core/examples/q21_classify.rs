// Classify the degree-two maps from the sphere in C^2 into Q(2,1).

use hqforms::deg2::{classify_deg2_s3_to_q21, Q21Class};
use hqforms::hqclass::lookup;

pub fn run() -> Result<Vec<Q21Class>, Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    for id in ["L6.1.i", "L6.1.ii", "L6.1.iii", "L6.1.iv"] {
        let map = lookup(id)?.map;
        let class = classify_deg2_s3_to_q21(&map)?;
        println!("{id}: {class}");
        out.push(class);
    }
    Ok(out)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()?;
    Ok(())
}
