//! CRT constituents of a binary QC code of index 3 and co-index 7, and the
//! reconstruction from them.
use qccd::{make_field, Poly, QcCode};

fn main() -> qccd::Result<()> {
    let f2 = make_field(2, 1)?;
    let p = |s: &str| Poly::parse(&f2, s);
    let c = QcCode::new(&f2, 7, 3, vec![vec![p("1")?, p("1,1")?, p("1,0,1,1")?]])?;
    let set = c.constituents()?;
    for info in set.info() {
        println!(
            "{:<5} factor {:<10} GF({}) dim {}  gen {:?}",
            info.label,
            info.factor.to_string(),
            info.field_order,
            info.dim,
            info.generator
        );
    }
    println!("sum of deg * dim = {}", set.base_dimension());
    println!("expanded code: [{}, {}]", c.len(), c.expand().k());
    let back = set.assemble()?;
    println!("reassembled code equal: {}", back.expand() == c.expand());
    let cert = c.is_qccd(true)?;
    println!(
        "QCCD: {} (expanded hull {:?})",
        cert.verdict, cert.oracle_hull_dim
    );
    Ok(())
}
