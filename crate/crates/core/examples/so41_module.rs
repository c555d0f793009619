//! The so(4,1) bracket table and the homomorphism from the operator algebra.

use cosymplectic::so41::{bracket, iso_map, verify_module, Generator};

fn main() -> cosymplectic::Result<()> {
    let gens = Generator::all();
    println!("brackets of the image matrices:");
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = bracket(&iso_map(*a), &iso_map(*b));
            if !c.matrix().is_zero() {
                let hit = gens.iter().find_map(|g| {
                    [1, -1, 2, -2, 4, -4].into_iter().find_map(|k| {
                        (iso_map(*g).scale(&cosymplectic::rat(k)) == c).then(|| format!("{k}*{g}"))
                    })
                });
                println!("  [{a}, {b}] = {}", hit.unwrap_or_else(|| "combination".into()));
            }
        }
    }
    let check = verify_module(1)?;
    for r in &check.reports {
        println!("{} {:<22} {}", r.status_word(), r.name, r.statement);
    }
    println!("span rank {}, image rank {}", check.summary.span_rank, check.summary.image_rank);
    Ok(())
}
