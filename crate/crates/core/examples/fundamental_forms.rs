//! The forms Phi_a and Xi_a of the flat model, and their pairing checks.

use cosymplectic::contact::{blade_label, Axis, ContactModel};

fn main() -> cosymplectic::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let model = ContactModel::new(n)?;
    for axis in Axis::ALL {
        let phi = model.fundamental_form(axis);
        let terms: Vec<String> = phi
            .terms()
            .map(|(b, c)| format!("{c} {}", blade_label(model.dims(), *b)))
            .collect();
        println!("Phi_{axis} = {}", terms.join(" + "));
    }
    for r in [
        model.fundamental_form_table_report(),
        model.building_block_report(),
        model.dual_pairing_report(),
        model.xi_form_report(),
        model.table().composition_report(),
    ] {
        println!("{} {:<34} {}", r.status_word(), r.name, r.statement);
    }
    Ok(())
}
