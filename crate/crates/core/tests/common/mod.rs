//! Reference computations shared by the integration tests. These use only
//! field arithmetic from the library and their own elimination and
//! enumeration code.
#![allow(dead_code)]

use qccd::{FieldElement, FiniteField, QcCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Mat = Vec<Vec<FieldElement>>;

pub fn rank(f: &FiniteField, rows: &Mat) -> usize {
    let mut m = rows.clone();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]).unwrap();
        let pivot: Vec<FieldElement> = m[r].iter().map(|&x| f.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let t = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(t, y));
                }
            }
        }
        m[r] = pivot;
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Rows spanning the same space as `rows`, linearly independent.
pub fn basis(f: &FiniteField, rows: &Mat) -> Mat {
    let mut out: Mat = Vec::new();
    for r in rows {
        let mut trial = out.clone();
        trial.push(r.clone());
        if rank(f, &trial) > out.len() {
            out = trial;
        }
    }
    out
}

pub fn same_space(f: &FiniteField, a: &Mat, b: &Mat) -> bool {
    let ra = rank(f, a);
    let rb = rank(f, b);
    let mut both = a.clone();
    both.extend(b.iter().cloned());
    ra == rb && rank(f, &both) == ra
}

/// G * sigma(G)^T with sigma = x -> x^(p^j).
pub fn gram(f: &FiniteField, g: &Mat, j: u32) -> Mat {
    g.iter()
        .map(|x| {
            g.iter()
                .map(|y| {
                    x.iter().zip(y).fold(FieldElement::ZERO, |acc, (&a, &b)| {
                        f.add(acc, f.mul(a, f.frobenius(b, j)))
                    })
                })
                .collect()
        })
        .collect()
}

/// dim(C ∩ sigma(C)^⊥) for C spanned by the (possibly dependent) rows `g`.
pub fn hull_dim(f: &FiniteField, g: &Mat, j: u32) -> usize {
    let b = basis(f, g);
    if b.is_empty() {
        return 0;
    }
    b.len() - rank(f, &gram(f, &b, j))
}

/// Minimum nonzero weight of the F-span of `rows` by listing every combination.
pub fn naive_min_distance(f: &FiniteField, rows: &Mat) -> Option<usize> {
    let b = basis(f, rows);
    let q = f.order() as u64;
    let k = b.len() as u32;
    let n = b.first()?.len();
    let mut best = None;
    for idx in 1..q.pow(k) {
        let mut word = vec![FieldElement::ZERO; n];
        let mut rest = idx;
        for row in &b {
            let c = f.elem(rest % q).unwrap();
            rest /= q;
            if !c.is_zero() {
                for (w, &x) in word.iter_mut().zip(row) {
                    *w = f.add(*w, f.mul(c, x));
                }
            }
        }
        let wt = word.iter().filter(|x| !x.is_zero()).count();
        if best.is_none_or(|b| wt < b) {
            best = Some(wt);
        }
    }
    best
}

/// Generator rows of a QC code: every shift of every generator, blockwise.
pub fn qc_rows(c: &QcCode) -> Mat {
    let m = c.m();
    let mut rows = Vec::new();
    for g in c.gens() {
        for s in 0..m {
            let mut r = vec![FieldElement::ZERO; m * c.ell()];
            for (j, a) in g.iter().enumerate() {
                for i in 0..m {
                    r[j * m + (i + s) % m] = a.coeff(i);
                }
            }
            rows.push(r);
        }
    }
    rows
}

pub const GRID_SEED: u64 = 0x5eed_2024;

/// Seeded QC codes: q in {2, 3}, m in {3, 5, 7} coprime to q, ell in
/// {2, 3, 4}, one or two generators.
pub fn qc_grid(count: usize) -> Vec<QcCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(GRID_SEED);
    let f2 = qccd::make_field(2, 1).unwrap();
    let f3 = qccd::make_field(3, 1).unwrap();
    (0..count)
        .map(|_| {
            let (base, m) = if rng.gen_bool(0.5) {
                (f2.clone(), [3, 5, 7][rng.gen_range(0..3)])
            } else {
                (f3.clone(), [5, 7][rng.gen_range(0..2)])
            };
            let ell = rng.gen_range(2..=4);
            let r = rng.gen_range(1..=2);
            QcCode::random(&base, m, ell, r, &mut rng)
        })
        .collect()
}
