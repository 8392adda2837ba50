//! Writes the bundled fixture fans as JSON documents and reads them back.
//!
//!     cargo run --example fan_documents -- crates/core/fans

use std::path::PathBuf;

use multifan::arith::rat;
use multifan::document::FanDocument;
use multifan::equivariant::SupportClass;
use multifan::fixtures::*;
use multifan::MultiFan;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fans".into()));
    std::fs::create_dir_all(&dir)?;
    let fans: Vec<(&str, MultiFan)> = vec![
        ("p1", p1()),
        ("double_p1", double_p1()),
        ("half_line", half_line()),
        ("p2", p2()),
        ("square", square()),
        ("wp112", wp112()),
        ("hirzebruch1", hirzebruch(1)),
        ("hirzebruch2", hirzebruch(2)),
        ("p3", p3()),
        ("double_p2", double_p2()),
        ("winding_square", winding_square()),
    ];
    for (name, fan) in fans {
        let m = fan.ray_count();
        let mut supports = vec![("sum".to_string(), SupportClass::ones(m))];
        if name == "wp112" {
            supports.push(("first".into(), SupportClass::from_ints(&[1, 0, 0])));
        }
        if fan.rank() == 2 && m >= 3 {
            let mut d = vec![rat(1, 1); m];
            d[0] = rat(1, 2);
            supports.push(("half".into(), SupportClass::new(d)));
        }
        let doc = FanDocument::from_fan(&fan, supports);
        let text = doc.to_json();
        assert_eq!(FanDocument::parse(&text)?, doc);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, text + "\n")?;
        println!("{:<16} rank {} rays {:>2} top cones {:>2} -> {}", name, fan.rank(), m, fan.top_cones().len(), path.display());
    }
    Ok(())
}
