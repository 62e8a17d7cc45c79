//! Jensen's bound against the true distance on a few random ternary QC codes.
use qccd::{make_field, QcCode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qccd::Result<()> {
    let f3 = make_field(3, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..6 {
        let c = QcCode::random(&f3, 5, 3, 1, &mut rng);
        let j = c.jensen_bound()?;
        let e = c.expand();
        println!(
            "[{}, {}, {}]  bound {}  terms {:?}",
            e.len(),
            e.k(),
            e.min_distance()?,
            j.bound,
            j.terms
                .iter()
                .map(|t| (t.label.as_str(), t.outer_distance, t.inner_distance))
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
