//! Betti numbers of a 3-cosymplectic 7-manifold from its horizontal Betti numbers.
//!
//! `cargo run --example betti_constraints -- 1,0,22,0,1`

use cosymplectic::betti::{
    betti_from_horizontal, check_bounds, check_divisibility, check_horizontal_constraints,
    k3_product_series, torus_series, HorizontalBettiSequence,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let values: Vec<u64> = match std::env::args().nth(1) {
        Some(list) => list.split(',').map(str::parse).collect::<Result<_, _>>()?,
        None => vec![1, 0, 22, 0, 1],
    };
    let n = (values.len().saturating_sub(1)) / 4;
    let bh = HorizontalBettiSequence::new(n, values)?;
    let b = betti_from_horizontal(&bh);
    println!("b^h = {:?}", bh.values());
    println!("b   = {:?}", b.values());
    println!("P(t) = {}", b.series());
    println!("T^7:           {}", torus_series());
    println!("T^3 x K3:      {}", k3_product_series());
    println!("divisibility:  {}", check_divisibility(&b).passed());
    println!("bound margins: {:?}", check_bounds(&b, n).margins());
    let h = check_horizontal_constraints(&bh);
    println!("horizontal constraints: {}", h.passed());
    for w in h.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
