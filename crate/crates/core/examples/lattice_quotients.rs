//! Finite groups `N_K / N_{K,V}` attached to faces, and Smith normal forms.

use multifan::fixtures::*;
use multifan::lattice::{quotient_group, smith_normal_form, IntMatrix};
use multifan::{Int, LatticeVector};

fn main() -> multifan::Result<()> {
    let a = IntMatrix::from_rows(vec![vec![Int::from(2), Int::from(4)], vec![Int::from(6), Int::from(8)]], 2);
    let snf = smith_normal_form(&a);
    println!("SNF of [[2,4],[6,8]]: diagonal {:?}", snf.diagonal());

    let g = quotient_group(&[LatticeVector::from_i64(&[2, 0]), LatticeVector::from_i64(&[1, 3])], 2)?;
    println!("Z^2 / <(2,0),(1,3)>: order {} invariants {:?}", g.order(), g.invariants());

    let f = wp112();
    for k in 0..=f.rank() {
        for face in f.faces(k) {
            let h = f.face_group(face)?;
            println!("P(1,1,2) face {:?}: |H| = {} invariants {:?}", face, h.order(), h.invariants());
        }
    }

    let doubled = p2().scale_multipliers(3)?;
    let h = doubled.face_group(&[0, 1])?;
    println!("p2 with edges 3·v_i, cone [0, 1]: |H| = {}", h.order());
    Ok(())
}
