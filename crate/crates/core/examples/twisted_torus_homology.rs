//! Integral and rational homology of M^7_f = (T^4 x R^3)/Z^3.

use cosymplectic::cw::{build_complex, cross_check, verdict, Cell, Coefficients, TwistMap};

fn main() -> cosymplectic::Result<()> {
    let twist = TwistMap::standard();
    let complex = build_complex(&twist)?;
    let c35 = Cell::new(&[3, 5])?;
    println!("cells per degree: {:?}", complex.cell_counts());
    println!("d{c35} = {:?}", cosymplectic::cw::boundary(c35, &twist));
    let z = complex.homology(Coefficients::Integers);
    for d in &z.degrees {
        let torsion: Vec<String> = d.torsion.iter().map(|t| format!("Z/{t}")).collect();
        println!("H_{} = Z^{} {}", d.degree, d.betti, torsion.join(" "));
    }
    let check = cross_check(&complex.homology(Coefficients::Rationals));
    println!("oracle b^h = {:?}, oracle b = {:?}", check.oracle_horizontal, check.oracle);
    println!("agree: {}, {}", check.passed(), verdict(&check));
    Ok(())
}
