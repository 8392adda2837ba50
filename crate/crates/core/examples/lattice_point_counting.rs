//! Lattice points of multi-polytopes by the character-sum formula and by
//! summing the Duistermaat-Heckman function over a box.

use multifan::arith::rat;
use multifan::equivariant::SupportClass;
use multifan::fixtures::*;
use multifan::polytope::{count_bruteforce, count_formula, dh_evaluate, volume, MultiPolytope};

fn main() -> multifan::Result<()> {
    for (name, f, d) in [
        ("square", square(), vec![1, 1, 1, 1]),
        ("p2", p2(), vec![1, 1, 1]),
        ("wp112", wp112(), vec![1, 1, 1]),
        ("wp112 (not Cartier)", wp112(), vec![1, 0, 0]),
        ("winding_square", winding_square(), vec![1; 8]),
        ("p3", p3(), vec![2, 1, 1, 1]),
    ] {
        let p = MultiPolytope::new(&f, SupportClass::from_ints(&d))?;
        println!("{name:<20} d = {d:?}: formula {}, brute force {}, volume {}", count_formula(&p)?, count_bruteforce(&p)?, volume(&p)?);
    }

    // the winding square covers the inside of its polygon twice
    let f = winding_square();
    let p = MultiPolytope::new(&f, SupportClass::ones(8))?;
    let v = [rat(3, 7), rat(1, 5)];
    for u in [[rat(1, 3), rat(1, 4)], [rat(5, 2), rat(0, 1)]] {
        println!("DH({}, {}) = {}", u[0], u[1], dh_evaluate(&p, &u, &v)?);
    }

    for face in [vec![0], vec![0, 1]] {
        let p = MultiPolytope::face_of(&p2(), SupportClass::from_ints(&[2, 2, 2]), &face)?;
        println!("p2 with d = 2, face {face:?}: {} points", count_formula(&p)?);
    }
    Ok(())
}
