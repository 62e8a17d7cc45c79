//! Self-reciprocal factors and reciprocal pairs of x^m - 1.
use qccd::factor_xm_minus_1;
use qccd::field::field_of_order;

fn main() -> qccd::Result<()> {
    for (q, m) in [(2, 7), (2, 15), (4, 15), (3, 8)] {
        let f = field_of_order(q)?;
        let p = factor_xm_minus_1(&f, m)?;
        println!("q = {q}, m = {m}: s = {}, t = {}", p.s(), p.t());
        for slot in p.slots() {
            println!(
                "  {:<5} {}  (root xi^{})",
                p.label(slot),
                p.factor(slot),
                p.exponent(slot)
            );
        }
    }
    Ok(())
}
