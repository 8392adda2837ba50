//! The equivariant Todd push-forward has no t-dependence: its only term is
//! the degree of the multi-fan.

use multifan::equivariant::generic_directions;
use multifan::fan::random_complete_fan;
use multifan::fixtures::*;
use multifan::todd::td_t;
use multifan::MultiFan;

fn main() -> multifan::Result<()> {
    let mut fans: Vec<(String, MultiFan)> = vec![
        ("p1".into(), p1()),
        ("double_p1".into(), double_p1()),
        ("wp112".into(), wp112()),
        ("winding_square".into(), winding_square()),
    ];
    for seed in 0..3 {
        fans.push((format!("random rank 3 #{seed}"), random_complete_fan(seed, 3, 6)));
    }
    fans.push(("half_line".into(), half_line()));
    for (name, f) in &fans {
        let n = f.rank() as i64;
        let v = &generic_directions(f, 3, 1)[0];
        let series = td_t(f, v, n)?;
        let terms: Vec<String> = series.rational_coefficients()?.iter().map(|(k, q)| format!("{q}·t^{k}")).collect();
        println!("{name:<20} d_v = {:>2}   {}", f.degree(v)?, terms.join(" + "));
    }
    Ok(())
}
