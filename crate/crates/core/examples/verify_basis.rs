//! Certifies the derangement basis for every labeled graph on a few
//! vertices. Pass the vertex count as the first argument (default 4).

use boolean_complex::homology::{verify_all_labeled, verify_basis, Verdict};
use boolean_complex::graph::{make_family, Family};

fn main() -> boolean_complex::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let reports = verify_all_labeled(n)?;
    let passed = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    println!("{} graphs on {n} vertices, {passed} PASS", reports.len());

    let report = verify_basis(&make_family(Family::E, 6)?)?;
    println!("{}", serde_json::to_string(&report).unwrap());
    Ok(())
}
