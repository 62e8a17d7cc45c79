//! Hermitian LCD and conjugate-reversible cyclic codes of length 5 over GF(4).
use qccd::cyclic::divisors_of_xl_minus_1;
use qccd::{make_field, CyclicCode, Form};

fn main() -> qccd::Result<()> {
    let f4 = make_field(2, 2)?;
    for g in divisors_of_xl_minus_1(&f4, 5)? {
        let c = CyclicCode::new(&f4, 5, &g)?;
        let v = c.verdict(Form::Hermitian)?;
        println!(
            "g = {:<28} dim {}  hermitian lcd {:<5}  conj-reversible {:?}",
            g.to_string(),
            c.dim(),
            v.lcd,
            v.conjugate_reversible
        );
    }
    Ok(())
}
