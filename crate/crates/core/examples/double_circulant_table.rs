//! Best binary LCD double circulant codes <(1, a(x))> for odd m.
//!
//! `cargo run --release --example double_circulant_table -- 13`
use qccd::construct::{dc_search, SearchMode};
use qccd::make_field;

fn main() -> qccd::Result<()> {
    let m_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(11);
    let f2 = make_field(2, 1)?;
    for m in (3..=m_max).step_by(2) {
        let r = dc_search(&f2, m, SearchMode::Exhaustive)?;
        let best = r.best.expect("a = 0 is always LCD");
        println!(
            "m = {m:>2}: d = {}  a = {}  ({} of {} candidates LCD)",
            best.d, best.a, r.lcd_count, r.candidates
        );
    }
    Ok(())
}
