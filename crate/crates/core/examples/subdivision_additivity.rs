//! Todd series of a cone equal the sum over a star subdivision.

use multifan::equivariant::generic_directions;
use multifan::todd::{td_t_cone, verify_additivity};
use multifan::{LatticeVector, MultiFan};

fn main() -> multifan::Result<()> {
    let lv = LatticeVector::from_i64;
    for (edges, ray) in [
        (vec![lv(&[1, 0]), lv(&[0, 1])], lv(&[1, 1])),
        (vec![lv(&[1, 0]), lv(&[0, 1])], lv(&[2, 1])),
        (vec![lv(&[1, 0]), lv(&[1, 3])], lv(&[1, 1])),
        (vec![lv(&[1, 0, 0]), lv(&[0, 1, 0]), lv(&[1, 1, 2])], lv(&[1, 1, 1])),
    ] {
        let n = edges.len() as i64;
        let sub = MultiFan::single_cone(&edges)?.star_subdivide(0, &ray)?;
        let v = &generic_directions(&sub, 1, 1)[0];
        let whole = td_t_cone(&edges, v, n)?;
        let residual = verify_additivity(&edges, &sub, v, n)?;
        let (power, lead) = whole.rational_coefficients()?.remove(0);
        println!("{} cones after subdivision; leading term {lead}·t^{power}; residual zero: {}", sub.top_cones().len(), residual.is_zero());
    }
    Ok(())
}
