//! Exact arithmetic in cyclotomic fields.

use multifan::arith::rat;
use multifan::cyclotomic::{cyclotomic_polynomial, root_of_unity, Cyclotomic};

fn main() -> multifan::Result<()> {
    for n in [5, 8, 12] {
        println!("Φ_{n} = {:?}", cyclotomic_polynomial(n));
    }

    // Σ_j ζ^j = 0 for every nontrivial cyclic group
    for d in 2..=6i64 {
        let total = (0..d)
            .try_fold(Cyclotomic::zero_in(d as u64), |acc, j| Ok::<_, multifan::Error>(&acc + &root_of_unity(&rat(j, d), d as u64)?))?;
        println!("d = {d}: sum of the d-th roots of unity = {total:?}");
    }

    // 1/(1 - ζ_5) and its trace down to Q
    let z = root_of_unity(&rat(1, 5), 5)?;
    let w = (&Cyclotomic::one_in(5) - &z).inverse()?;
    println!("1/(1-ζ_5) = {:?}, trace {}", w, w.trace());

    // a Gauss sum squared: (ζ_3 - ζ_3²)² = -3
    let z3 = root_of_unity(&rat(1, 3), 3)?;
    let g = &z3 - &(&z3 * &z3);
    let square = (&g * &g).to_rational().expect("rational");
    println!("(ζ_3 - ζ_3²)² = {square}");
    Ok(())
}
