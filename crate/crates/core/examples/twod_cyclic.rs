//! LCD 2D cyclic codes of size 3 x 5 over GF(2) from cyclic constituents.
use qccd::cyclic::divisors_of_xl_minus_1;
use qccd::qc::twod_cyclic_lcd;
use qccd::{factor_xm_minus_1, make_field, CyclicCode};

fn main() -> qccd::Result<()> {
    let f2 = make_field(2, 1)?;
    let f4 = make_field(2, 2)?;
    let profile = factor_xm_minus_1(&f2, 3)?;
    for g1 in divisors_of_xl_minus_1(&f2, 5)? {
        for g2 in divisors_of_xl_minus_1(&f4, 5)? {
            let parts = [CyclicCode::new(&f2, 5, &g1)?, CyclicCode::new(&f4, 5, &g2)?];
            match twod_cyclic_lcd(&profile, &parts) {
                Ok((c, lcd)) => {
                    println!("G1 <{g1}>, G2 <{g2}>: [15, {}] LCD {lcd}", c.expand().k())
                }
                Err(e) => println!("G1 <{g1}>, G2 <{g2}>: {}", e.name()),
            }
        }
    }
    Ok(())
}
