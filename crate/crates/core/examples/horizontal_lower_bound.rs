//! Ranks of the spaces S_k spanned by products of the Xi_a.

use cosymplectic::betti::s_k_rank;

fn main() -> cosymplectic::Result<()> {
    for n in 0..=3 {
        for k in 0..=n {
            let r = s_k_rank(n, k)?;
            println!(
                "n = {n}, k = {k}: rank {:>2}, C(k+2,2) = {:>2}, distinct leading blades: {}",
                r.rank,
                r.expected,
                r.leading_blades_distinct()
            );
        }
    }
    Ok(())
}
