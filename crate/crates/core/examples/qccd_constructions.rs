//! QCCD codes from a reciprocal pair slot (m = 7) and a self-reciprocal slot (m = 3).
use qccd::qc::{build_pair_double, build_self_single};
use qccd::{factor_xm_minus_1, make_field, FieldElement, LinearCode};

fn main() -> qccd::Result<()> {
    let f2 = make_field(2, 1)?;

    let f8 = make_field(2, 3)?;
    let rep = LinearCode::from_rows(&f8, 3, vec![vec![FieldElement::ONE; 3]])?;
    let pair = build_pair_double(&factor_xm_minus_1(&f2, 7)?, 0, &rep)?;
    report("pair slot, m = 7", &pair)?;

    let f4 = make_field(2, 2)?;
    let c = LinearCode::from_rows(&f4, 2, vec![vec![f4.one(), f4.zero()]])?;
    let single = build_self_single(&factor_xm_minus_1(&f2, 3)?, 1, &c)?;
    report("self-reciprocal slot, m = 3", &single)?;
    Ok(())
}

fn report(name: &str, c: &qccd::QcCode) -> qccd::Result<()> {
    let cert = c.is_qccd(true)?;
    let e = c.expand();
    println!(
        "{name}: [{}, {}, {}] QCCD {} (oracle agrees: {:?}), Jensen bound {}",
        e.len(),
        e.k(),
        e.min_distance()?,
        cert.verdict,
        cert.oracle_agreement,
        c.jensen_bound()?.bound
    );
    Ok(())
}
