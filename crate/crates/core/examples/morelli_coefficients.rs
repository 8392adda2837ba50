//! Morelli coefficients at random planes: the two evaluation paths, and the
//! face decomposition of push-forwards and of Ehrhart coefficients.

use multifan::equivariant::{EquivariantClass, SupportClass};
use multifan::fixtures::*;
use multifan::morelli::{decomposition_residual, mu, mu_k_todd, mu_paths, spanning_family, GenericPlane, Orientation};
use multifan::polytope::{volume, MultiPolytope};
use multifan::todd::ehrhart_coefficients;
use multifan::Rat;
use num_traits::{Signed, Zero};

fn main() -> multifan::Result<()> {
    let f = hirzebruch(1);
    let x = EquivariantClass::variable(&f, 0).mul(&EquivariantClass::variable(&f, 0), &f);
    let plane = &GenericPlane::sample_many(&f, 2, 1, 3)?[0];
    println!("plane basis {:?}, certificate {:?}", plane.basis, plane.certificate);
    for face in f.faces(2) {
        let (line, wedge) = mu_paths(&f, &x, face, plane, Orientation { flip_line: true, flip_omega: true })?;
        println!("μ(x_0², {face:?}) = {} (line {line}, wedge {wedge})", mu(&f, &x, face, plane)?);
    }

    let xi = SupportClass::from_ints(&[1, 2, 1, 3]);
    let mut worst = Rat::zero();
    for k in 1..=2 {
        for plane in GenericPlane::sample_many(&f, k, 5, 11)? {
            for (_, x) in spanning_family(&f, k) {
                let r = decomposition_residual(&f, &x, &xi, &plane)?;
                if r.abs() > worst {
                    worst = r.abs();
                }
            }
        }
    }
    println!("largest decomposition residual over 10 planes: {worst}");

    let f = p2();
    let xi = SupportClass::ones(3);
    let a = ehrhart_coefficients(&f, &xi)?;
    for k in 1..=2 {
        let plane = &GenericPlane::sample_many(&f, k, 1, 5)?[0];
        let mut total = Rat::zero();
        for face in f.faces(k) {
            let m = mu_k_todd(&f, face, Some(plane))?;
            total += &m * volume(&MultiPolytope::face_of(&f, xi.clone(), face)?)?;
            println!("p2 μ_{k}({face:?}) = {m}");
        }
        println!("Σ μ_{k} vol = {total}, a_{k} = {}", a[k]);
    }
    Ok(())
}
