//! Wedge, interior product, Hodge star and pairing on the rank-1 coframe.

use cosymplectic::contact::{blade_label, ContactModel, FrameLabel};
use cosymplectic::exterior::{KVector, Multivector};
use cosymplectic::rat;

fn show(model: &ContactModel, name: &str, form: &Multivector) {
    let dims = model.dims();
    let terms: Vec<String> = form
        .terms()
        .map(|(b, c)| format!("{c} {}", blade_label(dims, *b)))
        .collect();
    println!("{name:>12} = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
}

fn main() -> cosymplectic::Result<()> {
    let model = ContactModel::new(1)?;
    let dims = model.dims();
    let zeta = model.zeta(1)?;
    let eta1 = model.coframe(FrameLabel::Eta(cosymplectic::contact::Axis::new(1)?))?;

    let w = zeta.wedge(&eta1);
    show(&model, "zeta1^eta1", &w);
    show(&model, "eta1^zeta1", &eta1.wedge(&zeta));
    show(&model, "w^w", &w.wedge(&w));
    show(&model, "i_0 w", &w.interior(0));
    show(&model, "*w", &w.hodge_star(dims)?);
    show(&model, "**w", &w.hodge_star(dims)?.hodge_star(dims)?);

    let x = KVector::basis(0).wedge(&KVector::basis(dims.dim() - 3));
    println!("<w, X1^xi1> = {}", w.pairing(&x)?);
    let twice = w.scale(&rat(2));
    println!("<2w, X1^xi1> = {}", twice.pairing(&x)?);
    Ok(())
}
