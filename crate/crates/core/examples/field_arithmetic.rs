//! Arithmetic in GF(9) and the trace down to GF(3).
use qccd::field::{field_of_order, make_field, trace};

fn main() -> qccd::Result<()> {
    let f9 = make_field(3, 2)?;
    let g = f9.primitive_element();
    println!("GF(9) modulus (constant first): {:?}", f9.modulus());
    println!("primitive element {g} has order {}", f9.element_order(g)?);
    for x in f9.elements() {
        let inv = if x.is_zero() {
            "-".to_string()
        } else {
            f9.inv(x)?.to_string()
        };
        println!(
            "x = {x}: x^2 = {}, x^-1 = {inv}, conj = {}",
            f9.mul(x, x),
            f9.conj(x)?
        );
    }
    let f3 = field_of_order(3)?;
    let t: Vec<String> = f9
        .elements()
        .map(|x| trace(&f9, x, &f3).map(|v| v.to_string()))
        .collect::<qccd::Result<_>>()?;
    println!("Tr_GF(9)/GF(3): {}", t.join(" "));
    Ok(())
}
