//! Degree and completeness of multi-fans.

use multifan::fan::random_complete_fan;
use multifan::fixtures::*;
use multifan::MultiFan;

fn report(name: &str, f: &MultiFan) {
    let c = f.completeness();
    let pre = &c.precompleteness;
    println!(
        "{name:<16} rank {} cones {:>2}  pre-complete {:<5} complete {:<5} degree {:?} (values seen {:?})",
        f.rank(),
        f.top_cones().len(),
        pre.is_precomplete(),
        c.is_complete(),
        pre.degree,
        pre.values
    );
}

fn main() {
    for (name, f) in [
        ("p1", p1()),
        ("double_p1", double_p1()),
        ("half_line", half_line()),
        ("p2", p2()),
        ("winding_square", winding_square()),
        ("double_p2", double_p2()),
        ("p3", p3()),
    ] {
        report(name, &f);
    }
    report("random rank 3", &random_complete_fan(7, 3, 5));
}
