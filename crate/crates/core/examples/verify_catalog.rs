// Verify every catalog map and print the report.

use hqforms::hqclass::verify_catalog;

pub fn run() -> Result<bool, Box<dyn std::error::Error>> {
    let report = verify_catalog();
    println!("{report}");
    Ok(report.all_passed())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if !run()? {
        std::process::exit(1);
    }
    Ok(())
}
