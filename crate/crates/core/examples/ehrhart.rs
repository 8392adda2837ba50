//! Ehrhart coefficients from the Todd push-forward, checked against counts.

use multifan::arith::{rat, rat_int};
use multifan::equivariant::SupportClass;
use multifan::fixtures::*;
use multifan::polytope::{count_bruteforce, MultiPolytope};
use multifan::todd::{ehrhart_coefficients, ehrhart_value};

fn main() -> multifan::Result<()> {
    for (name, f) in [("square", square()), ("p2", p2()), ("wp112", wp112()), ("hirzebruch2", hirzebruch(2)), ("p3", p3())] {
        let xi = SupportClass::ones(f.ray_count());
        let a = ehrhart_coefficients(&f, &xi)?;
        let shown: Vec<String> = a.iter().map(ToString::to_string).collect();
        print!("{name:<12} a = ({})  ", shown.join(", "));
        for nu in 1..=4 {
            let counted = rat_int(&count_bruteforce(&MultiPolytope::new(&f, xi.scaled(&rat(nu, 1)))?)?);
            assert_eq!(counted, ehrhart_value(&a, nu));
            print!(" #P({nu}ξ) = {counted}");
        }
        println!();
    }
    Ok(())
}
