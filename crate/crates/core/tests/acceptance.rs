//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line.

mod common;

use std::process::Command;
use std::time::Instant;

use qccd::construct::{self, dc_search, SearchMode};
use qccd::cyclic::divisors_of_xl_minus_1;
use qccd::poly::cyclotomic_cosets;
use qccd::qc::{build_pair_double, build_self_single};
use qccd::{
    factor_xm_minus_1, make_field, CyclicCode, FieldElement, FieldRef, Form, LinearCode, Poly,
    QcCode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use common::{hull_dim, naive_min_distance, qc_grid, qc_rows, rank, same_space, Mat};

const C1_MAX_SECONDS: f64 = 1.0;
const C2_MAX_SECONDS: f64 = 600.0;
const GRID_SIZE: usize = 200;
const DUAL_SAMPLE: usize = 100;
const EXTENSION_SAMPLE: usize = 100;
const EXTENSION_MAX_LEN: usize = 24;
const NAIVE_DISTANCE_CAP: u64 = 1 << 14;

fn verdict(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

fn rows_of(code: &LinearCode) -> Mat {
    code.generator().to_vec()
}

#[test]
fn criterion_01_named_double_circulant() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/data/dc_m5.qc");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_qccd"))
        .args(["qc-check", "--in", file])
        .output()
        .unwrap();
    let secs = start.elapsed().as_secs_f64();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let p = &v["params"];
    let got = (
        p["n"].as_u64(),
        p["k"].as_u64(),
        p["d"].as_u64(),
        v["hull_dim"].as_u64(),
        v["dc_criterion"].as_bool(),
    );
    let want = (Some(10), Some(5), Some(3), Some(0), Some(true));
    verdict(
        1,
        got == want && out.status.code() == Some(0) && secs < C1_MAX_SECONDS,
        &format!(
            "(n, k, d, hull, dc) = {got:?}, expected {want:?}; exit {:?}; {secs:.3}s",
            out.status.code()
        ),
    );
}

fn dc_generator(m: usize, a: &Poly) -> Mat {
    (0..m)
        .map(|i| {
            let mut r = vec![FieldElement::ZERO; 2 * m];
            r[i] = FieldElement::ONE;
            for j in 0..m {
                r[m + j] = a.coeff((j + m - i) % m);
            }
            r
        })
        .collect()
}

#[test]
fn criterion_02_double_circulant_table() {
    let f2 = make_field(2, 1).unwrap();
    let expected = [(3, 1), (5, 3), (7, 4), (9, 3), (11, 6), (13, 7)];
    let start = Instant::now();
    let mut got = Vec::new();
    let mut checks = true;
    for &(m, _) in &expected {
        let best = dc_search(&f2, m, SearchMode::Exhaustive)
            .unwrap()
            .best
            .unwrap();
        let g = dc_generator(m, &best.a);
        checks &= hull_dim(&f2, &g, 0) == 0;
        if m <= 9 {
            checks &= naive_min_distance(&f2, &g) == Some(best.d);
        }
        got.push((m, best.d));
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        2,
        got == expected && checks && secs <= C2_MAX_SECONDS,
        &format!("(m, d) = {got:?}; best codes re-checked: {checks}; {secs:.1}s"),
    );
}

#[test]
#[ignore = "long run: m = 15 and 17"]
fn criterion_02_optional_m15_m17() {
    let f2 = make_field(2, 1).unwrap();
    let got: Vec<(usize, usize)> = [15, 17]
        .iter()
        .map(|&m| {
            let d = dc_search(&f2, m, SearchMode::Exhaustive)
                .unwrap()
                .best
                .unwrap()
                .d;
            (m, d)
        })
        .collect();
    verdict(
        2,
        got == vec![(15, 5), (17, 8)],
        &format!("optional rows {got:?}"),
    );
}

#[test]
fn criterion_03_double_circulant_criterion_sweep() {
    let f2 = make_field(2, 1).unwrap();
    let mut cases = 0;
    let mut mismatches = 0;
    for m in [3usize, 5, 7, 9] {
        for idx in 0..(1u64 << m) {
            let a = construct::candidate(&f2, m, idx);
            let oracle = hull_dim(&f2, &dc_generator(m, &a), 0) == 0;
            if construct::dc_is_lcd(&f2, m, &a).unwrap() != oracle {
                mismatches += 1;
            }
            cases += 1;
        }
    }
    verdict(
        3,
        mismatches == 0 && cases == 8 + 32 + 128 + 512,
        &format!("{mismatches} mismatches over {cases} polynomials"),
    );
}

#[test]
fn criterion_04_qccd_oracle_equivalence() {
    let grid = qc_grid(GRID_SIZE);
    let mut mismatches = 0;
    let mut lcd = 0;
    for c in &grid {
        let cert = c.is_qccd(false).unwrap();
        let oracle = hull_dim(c.base(), &qc_rows(c), 0) == 0;
        mismatches += (cert.verdict != oracle) as usize;
        lcd += oracle as usize;
    }
    verdict(
        4,
        mismatches == 0,
        &format!(
            "{mismatches} mismatches over {} codes ({lcd} QCCD)",
            grid.len()
        ),
    );
}

#[test]
fn criterion_05_crt_roundtrip_and_dimension() {
    let grid = qc_grid(GRID_SIZE);
    let mut failures = 0;
    for c in &grid {
        let set = c.constituents().unwrap();
        let rows = qc_rows(c);
        let dim = rank(c.base(), &rows);
        let back = set.assemble().unwrap();
        let roundtrip = same_space(c.base(), &qc_rows(&back), &rows)
            && back.constituents().unwrap().parts == set.parts;
        if !roundtrip || set.base_dimension() != dim {
            failures += 1;
        }
    }
    verdict(
        5,
        failures == 0,
        &format!("{failures} failures over {} codes", grid.len()),
    );
}

#[test]
fn criterion_06_dual_decomposition() {
    let grid = qc_grid(GRID_SIZE);
    let mut failures = 0;
    for c in grid.iter().take(DUAL_SAMPLE) {
        let from_dual = QcCode::from_linear(&c.expand().dual(), c.m())
            .unwrap()
            .constituents()
            .unwrap();
        let predicted = c.dual_constituents().unwrap();
        if from_dual.parts != predicted.parts {
            failures += 1;
        }
    }
    verdict(
        6,
        failures == 0,
        &format!("{failures} failures over {DUAL_SAMPLE} codes"),
    );
}

fn random_systematic(f: &FieldRef, rng: &mut ChaCha8Rng) -> LinearCode {
    let q = f.order() as u64;
    loop {
        let ell = rng.gen_range(2..=12);
        let k = rng.gen_range(1..=ell);
        if 2 * ell - k > EXTENSION_MAX_LEN || q.pow(k as u32) > 1 << 20 {
            continue;
        }
        let rows = (0..k)
            .map(|i| {
                (0..ell)
                    .map(|c| match c {
                        c if c < k && c == i => FieldElement::ONE,
                        c if c < k => FieldElement::ZERO,
                        _ => f.elem(rng.gen_range(0..q)).unwrap(),
                    })
                    .collect()
            })
            .collect();
        return LinearCode::from_rows(f, ell, rows).unwrap();
    }
}

#[test]
fn criterion_07_hermitian_extension() {
    let mut rng = ChaCha8Rng::seed_from_u64(common::GRID_SEED + 7);
    let mut failures = Vec::new();
    for (fi, f) in [make_field(2, 2).unwrap(), make_field(3, 2).unwrap()]
        .iter()
        .enumerate()
    {
        let conj = f.degree() / 2;
        for t in 0..EXTENSION_SAMPLE / 2 {
            let c = random_systematic(f, &mut rng);
            let x = construct::hermitian_lcd_extend(&c).unwrap();
            let g = common::gram(f, &rows_of(&x), conj);
            let identity = g.iter().enumerate().all(|(i, r)| {
                r.iter()
                    .enumerate()
                    .all(|(j, &v)| v.value() == (i == j) as u32)
            });
            let shape = (x.len(), x.k()) == (2 * c.len() - c.k(), c.k());
            let hull =
                x.hull_dim(Form::Hermitian).unwrap() == 0 && hull_dim(f, &rows_of(&x), conj) == 0;
            let dist = x.min_distance().unwrap() >= c.min_distance().unwrap();
            if !(identity && shape && hull && dist) {
                failures.push((fi, t));
            }
        }
    }
    verdict(
        7,
        failures.is_empty(),
        &format!(
            "{} failures over {EXTENSION_SAMPLE} codes: {failures:?}",
            failures.len()
        ),
    );
}

fn cyclic_sweep(f: &FieldRef, ell: usize, form: Form) -> (usize, usize) {
    let j = match form {
        Form::Euclidean => 0,
        Form::Hermitian => f.degree() / 2,
    };
    let mut mismatches = 0;
    let divisors = divisors_of_xl_minus_1(f, ell).unwrap();
    for g in &divisors {
        let c = CyclicCode::new(f, ell, g).unwrap();
        let crit = c.is_lcd(form).unwrap();
        let rev = match form {
            Form::Euclidean => c.is_reversible().unwrap(),
            Form::Hermitian => c.is_conjugate_reversible().unwrap(),
        };
        let oracle = hull_dim(f, &rows_of(&c.linear_code()), j) == 0;
        if !(crit == rev && rev == oracle) {
            mismatches += 1;
        }
    }
    (divisors.len(), mismatches)
}

#[test]
fn criterion_08_cyclic_sweeps() {
    let f2 = make_field(2, 1).unwrap();
    let f4 = make_field(2, 2).unwrap();
    let runs = [
        (&f4, 3, Form::Hermitian),
        (&f4, 5, Form::Hermitian),
        (&f4, 15, Form::Hermitian),
        (&f2, 7, Form::Euclidean),
        (&f2, 15, Form::Euclidean),
        (&f4, 7, Form::Euclidean),
        (&f4, 15, Form::Euclidean),
    ];
    let mut total = 0;
    let mut mismatches = 0;
    let mut counts_ok = true;
    let mut summary = Vec::new();
    for (f, ell, form) in runs {
        let (n, bad) = cyclic_sweep(f, ell, form);
        let cosets = cyclotomic_cosets(f.order() as u64, ell).unwrap().len();
        counts_ok &= n == 1 << cosets;
        total += n;
        mismatches += bad;
        summary.push(format!("GF({}) ell={ell} {form:?}: {n}", f.order()));
    }
    verdict(
        8,
        mismatches == 0 && counts_ok,
        &format!(
            "{mismatches} mismatches over {total} divisors [{}]",
            summary.join("; ")
        ),
    );
}

#[test]
fn criterion_09_subfield_pipeline() {
    let f4 = make_field(2, 2).unwrap();
    let f = Poly::from_values(&f4, &[2, 1, 1]).unwrap();
    // monic reciprocal, formed by hand: reverse the coefficients and rescale
    let mut rev: Vec<FieldElement> = f.coeffs().iter().rev().copied().collect();
    let lead = f4.inv(rev[rev.len() - 1]).unwrap();
    rev.iter_mut().for_each(|c| *c = f4.mul(*c, lead));
    let g = f.mul(&Poly::new(&f4, rev)).unwrap();
    let c = CyclicCode::new(&f4, 15, &g).unwrap().linear_code();
    let cp = (c.len(), c.k(), c.min_distance().unwrap());
    let c_lcd = c.is_lcd(Form::Euclidean).unwrap() && hull_dim(&f4, &rows_of(&c), 0) == 0;
    let basis = construct::self_dual_basis(2, 2).unwrap();
    let phi = construct::expand_subfield(&c, &basis).unwrap();
    let f2 = make_field(2, 1).unwrap();
    let pp = (phi.len(), phi.k(), phi.min_distance().unwrap());
    let phi_lcd = hull_dim(&f2, &rows_of(&phi), 0) == 0;
    verdict(
        9,
        cp == (15, 11, 3) && c_lcd && pp == (30, 22, 3) && phi_lcd,
        &format!("C = {cp:?} LCD {c_lcd}; phi(C) = {pp:?} LCD {phi_lcd}"),
    );
}

#[test]
fn criterion_10_jensen_and_constructions() {
    let grid = qc_grid(GRID_SIZE);
    let mut checked = 0;
    let mut violations = 0;
    for c in &grid {
        let e = c.expand();
        if e.is_zero_code() {
            continue;
        }
        let Ok(d) = e.min_distance() else { continue };
        if (c.base().order() as u64).pow(e.k() as u32) <= NAIVE_DISTANCE_CAP {
            assert_eq!(naive_min_distance(c.base(), &qc_rows(c)), Some(d));
        }
        checked += 1;
        if c.jensen_bound().unwrap().bound > d {
            violations += 1;
        }
    }

    let f2 = make_field(2, 1).unwrap();
    let f8 = make_field(2, 3).unwrap();
    let rep = LinearCode::from_rows(&f8, 3, vec![vec![FieldElement::ONE; 3]]).unwrap();
    let pair = build_pair_double(&factor_xm_minus_1(&f2, 7).unwrap(), 0, &rep).unwrap();
    let f4 = make_field(2, 2).unwrap();
    let single_code =
        LinearCode::from_rows(&f4, 2, vec![vec![FieldElement::ONE, FieldElement::ZERO]]).unwrap();
    let single = build_self_single(&factor_xm_minus_1(&f2, 3).unwrap(), 1, &single_code).unwrap();
    let certified =
        |c: &QcCode| c.is_qccd(false).unwrap().verdict && hull_dim(&f2, &qc_rows(c), 0) == 0;
    let shapes = (pair.expand().k(), single.expand().k());
    let ok = violations == 0 && certified(&pair) && certified(&single) && shapes == (6, 2);
    verdict(
        10,
        ok,
        &format!(
            "{violations} violations over {checked} codes; pair [21, {}] and single [6, {}] certified",
            shapes.0, shapes.1
        ),
    );
}
