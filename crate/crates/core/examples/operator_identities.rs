//! Builds the operator algebra at a chosen rank and prints every identity check.
//!
//! `cargo run --release --example operator_identities -- 2`

use std::time::Instant;

use cosymplectic::operators::OperatorAlgebra;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let start = Instant::now();
    let alg = OperatorAlgebra::new(n)?;
    let reports = alg.verify_identities();
    for r in &reports {
        println!("{:<34} {}  {}", r.name, r.status_word(), r.statement);
        if let Some(w) = &r.witness {
            println!("    witness: {w}");
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("n = {n}: {} checks, {failed} failed, {:.2?}", reports.len(), start.elapsed());
    Ok(())
}
