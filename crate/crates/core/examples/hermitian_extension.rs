//! [I:P:aP] over GF(9) turns any systematic code into a Hermitian LCD code.
use qccd::construct::{find_a, gram_is_identity, hermitian_lcd_extend};
use qccd::{make_field, Form, LinearCode};

fn main() -> qccd::Result<()> {
    let f9 = make_field(3, 2)?;
    let a = find_a(&f9)?;
    println!("a = {a}, a^4 = {}", f9.pow(a, 4));
    let e = |v: u64| f9.elem(v);
    let c = LinearCode::from_rows(
        &f9,
        5,
        vec![
            vec![e(1)?, e(0)?, e(2)?, e(5)?, e(7)?],
            vec![e(0)?, e(1)?, e(4)?, e(1)?, e(3)?],
        ],
    )?;
    let x = hermitian_lcd_extend(&c)?;
    println!("input  [{}, {}, {}]", c.len(), c.k(), c.min_distance()?);
    println!("output [{}, {}, {}]", x.len(), x.k(), x.min_distance()?);
    println!("Gram = I: {}", gram_is_identity(&x, 1));
    println!("hermitian hull: {}", x.hull_dim(Form::Hermitian)?);
    print!("{}", x.to_text());
    Ok(())
}
