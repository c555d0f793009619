//! Corrupts one sign and shows which checks notice.

use cosymplectic::contact::{Axis, ContactModel, PhiStarTable};
use cosymplectic::cw::{homology_reports, Coefficients, TwistMap};
use cosymplectic::exterior::ModelDims;
use cosymplectic::operators::{phi_zeta_index, OperatorAlgebra};
use cosymplectic::report::IdentityReport;

fn print_failures(title: &str, reports: &[IdentityReport]) {
    println!("{title}:");
    for r in reports.iter().filter(|r| !r.passed) {
        println!("  {} -> {}", r.name, r.witness.as_deref().unwrap_or("-"));
    }
}

fn main() -> cosymplectic::Result<()> {
    let dims = ModelDims::new(1)?;
    let axis = Axis::new(2)?;
    let table = PhiStarTable::standard(dims).with_sign_flip(axis, phi_zeta_index(dims, axis, 1)?);
    let alg = OperatorAlgebra::with_model(ContactModel::with_table(table));
    print_failures("phi* table with one flipped sign", &alg.verify_identities());

    let twist = TwistMap::standard().with_sign_flip(4);
    let (reports, _) = homology_reports(&twist, Coefficients::Rationals);
    print_failures("twist with one flipped sign", &reports);
    Ok(())
}
