//! Hull dimensions of a few small codes, Euclidean and Hermitian.
use qccd::{make_field, Form, LinearCode};

fn main() -> qccd::Result<()> {
    let f4 = make_field(2, 2)?;
    let w = f4.elem(2)?;
    let one = f4.one();
    let zero = f4.zero();
    let codes = [
        ("<(1,0)>", vec![vec![one, zero]]),
        ("<(1,1)>", vec![vec![one, one]]),
        ("<(1,w)>", vec![vec![one, w]]),
        ("<(1,w,w^2)>", vec![vec![one, w, f4.mul(w, w)]]),
    ];
    for (name, rows) in codes {
        let n = rows[0].len();
        let c = LinearCode::from_rows(&f4, n, rows)?;
        println!(
            "{name:<12} [{}, {}]  euclidean hull {}  hermitian hull {}",
            c.len(),
            c.k(),
            c.hull_dim(Form::Euclidean)?,
            c.hull_dim(Form::Hermitian)?
        );
    }
    Ok(())
}
