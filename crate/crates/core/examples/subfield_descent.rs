//! The quaternary cyclic [15,11,3] code with g = f f~, f = x^2 + x + w,
//! and its binary image under a self-dual basis of GF(4).
use qccd::construct::{expand_subfield, self_dual_basis};
use qccd::{make_field, CyclicCode, Form, Poly};

fn main() -> qccd::Result<()> {
    let f4 = make_field(2, 2)?;
    let f = Poly::from_values(&f4, &[2, 1, 1])?;
    let g = f.mul(&f.monic_reciprocal()?)?;
    let c = CyclicCode::new(&f4, 15, &g)?.linear_code();
    println!("g = {g}");
    println!(
        "C: [{}, {}, {}] euclidean LCD {}",
        c.len(),
        c.k(),
        c.min_distance()?,
        c.is_lcd(Form::Euclidean)?
    );
    let b = self_dual_basis(2, 2)?;
    let basis: Vec<u32> = b.basis.iter().map(|x| x.value()).collect();
    println!("self-dual basis: {basis:?}");
    let phi = expand_subfield(&c, &b)?;
    println!(
        "phi(C): [{}, {}, {}] LCD {}",
        phi.len(),
        phi.k(),
        phi.min_distance()?,
        phi.is_lcd(Form::Euclidean)?
    );
    Ok(())
}
