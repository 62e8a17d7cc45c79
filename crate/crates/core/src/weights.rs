//! Exhaustive codeword enumeration by Gray code over GF(p).
//!
//! A code over GF(p^k) is handled through an F_p-basis of its codewords, so
//! every step of the walk is a single vector addition. The p-ary walk is the
//! modular Gray code: step `i` adds row `v_p(i)` (the p-adic valuation of `i`).
//! The top rows are fixed per chunk so chunks run on the rayon pool; results
//! are merged in chunk order and do not depend on scheduling.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::field::{FieldElement, FiniteField};

pub(crate) trait Space: Sync {
    type V: Clone + Send;
    fn p(&self) -> u64;
    fn dim(&self) -> usize;
    fn zero(&self) -> Self::V;
    fn add_row(&self, v: &mut Self::V, row: usize);
    fn weight(&self, v: &Self::V) -> usize;
}

/// Binary fields: one bit plane per GF(2) digit, coordinates packed in u64 words.
pub(crate) struct BinarySpace {
    words: usize,
    rows: Vec<Vec<u64>>,
}

/// Odd characteristic: one byte per GF(p) digit.
pub(crate) struct OddSpace {
    p: u8,
    width: usize,
    rows: Vec<Vec<u8>>,
}

impl Space for BinarySpace {
    type V = Vec<u64>;
    fn p(&self) -> u64 {
        2
    }
    fn dim(&self) -> usize {
        self.rows.len()
    }
    fn zero(&self) -> Vec<u64> {
        vec![0; self.rows.first().map_or(0, |r| r.len())]
    }
    #[inline]
    fn add_row(&self, v: &mut Vec<u64>, row: usize) {
        for (x, y) in v.iter_mut().zip(&self.rows[row]) {
            *x ^= y;
        }
    }
    #[inline]
    fn weight(&self, v: &Vec<u64>) -> usize {
        let planes = v.len() / self.words.max(1);
        (0..self.words)
            .map(|w| {
                let mut acc = 0u64;
                for b in 0..planes {
                    acc |= v[b * self.words + w];
                }
                acc.count_ones() as usize
            })
            .sum()
    }
}

impl Space for OddSpace {
    type V = Vec<u8>;
    fn p(&self) -> u64 {
        self.p as u64
    }
    fn dim(&self) -> usize {
        self.rows.len()
    }
    fn zero(&self) -> Vec<u8> {
        vec![0; self.rows.first().map_or(0, |r| r.len())]
    }
    #[inline]
    fn add_row(&self, v: &mut Vec<u8>, row: usize) {
        let p = self.p;
        for (x, &y) in v.iter_mut().zip(&self.rows[row]) {
            let s = *x + y;
            *x = if s >= p { s - p } else { s };
        }
    }
    #[inline]
    fn weight(&self, v: &Vec<u8>) -> usize {
        v.chunks(self.width)
            .filter(|c| c.iter().any(|&d| d != 0))
            .count()
    }
}

/// F_p-basis of the subfield of degree `e` inside `f`.
pub(crate) fn subfield_basis(f: &FiniteField, e: u32) -> Vec<FieldElement> {
    let k = f.degree();
    let p = f.characteristic() as u64;
    if e == k {
        let mut out = Vec::new();
        let mut v = 1u64;
        for _ in 0..k {
            out.push(f.elem(v).expect("p^t below order"));
            v *= p;
        }
        return out;
    }
    let g = f.primitive_element();
    let beta = f.pow(g, (f.order() as u64 - 1) / (p.pow(e) - 1));
    let mut out = Vec::new();
    let mut cur = FieldElement::ONE;
    for _ in 0..e {
        out.push(cur);
        cur = f.mul(cur, beta);
    }
    out
}

/// F_p-spanning rows {beta * g : beta in basis, g in gen}.
fn prime_rows(f: &FiniteField, gen: &[Vec<FieldElement>], e: u32) -> Vec<Vec<FieldElement>> {
    let basis = subfield_basis(f, e);
    let mut out = Vec::with_capacity(gen.len() * basis.len());
    for row in gen {
        for &b in &basis {
            out.push(row.iter().map(|&x| f.mul(x, b)).collect());
        }
    }
    out
}

pub(crate) enum Packed {
    Binary(BinarySpace),
    Odd(OddSpace),
}

pub(crate) fn pack(f: &FiniteField, n: usize, gen: &[Vec<FieldElement>], e: u32) -> Packed {
    let rows = prime_rows(f, gen, e);
    let k = f.degree() as usize;
    if f.characteristic() == 2 {
        let words = n.div_ceil(64).max(1);
        let packed = rows
            .iter()
            .map(|row| {
                let mut v = vec![0u64; words * k];
                for (c, &x) in row.iter().enumerate() {
                    let bits = x.value();
                    for b in 0..k {
                        if bits >> b & 1 == 1 {
                            v[b * words + c / 64] |= 1 << (c % 64);
                        }
                    }
                }
                v
            })
            .collect();
        Packed::Binary(BinarySpace {
            words,
            rows: packed,
        })
    } else {
        let packed = rows
            .iter()
            .map(|row| {
                row.iter()
                    .flat_map(|&x| f.digits(x).into_iter().map(|d| d as u8))
                    .collect()
            })
            .collect();
        Packed::Odd(OddSpace {
            p: f.characteristic() as u8,
            width: k,
            rows: packed,
        })
    }
}

/// Visits every codeword weight once. `step` returns `false` to stop everything.
fn walk<S, R, I, F>(space: &S, init: I, step: F) -> Vec<R>
where
    S: Space,
    R: Send,
    I: Fn() -> R + Sync,
    F: Fn(&mut R, usize) -> bool + Sync,
{
    let p = space.p();
    let dim = space.dim();
    let mut top = 0;
    while top < dim && p.pow(top as u32) < 256 {
        top += 1;
    }
    let low = dim - top;
    let low_count = p.pow(low as u32);
    let stop = AtomicBool::new(false);
    (0..p.pow(top as u32))
        .into_par_iter()
        .map(|prefix| {
            let mut acc = init();
            if stop.load(Ordering::Relaxed) {
                return acc;
            }
            let mut cur = space.zero();
            let mut digits = prefix;
            for t in 0..top {
                for _ in 0..digits % p {
                    space.add_row(&mut cur, low + t);
                }
                digits /= p;
            }
            if !step(&mut acc, space.weight(&cur)) {
                stop.store(true, Ordering::Relaxed);
                return acc;
            }
            for i in 1..low_count {
                let idx = if p == 2 {
                    i.trailing_zeros() as usize
                } else {
                    let mut j = i;
                    let mut v = 0;
                    while j % p == 0 {
                        j /= p;
                        v += 1;
                    }
                    v
                };
                space.add_row(&mut cur, idx);
                if !step(&mut acc, space.weight(&cur)) {
                    stop.store(true, Ordering::Relaxed);
                    return acc;
                }
                if i & 0xfff == 0 && stop.load(Ordering::Relaxed) {
                    return acc;
                }
            }
            acc
        })
        .collect()
}

fn min_weight_in<S: Space>(space: &S) -> Option<usize> {
    walk(
        space,
        || usize::MAX,
        |best, w| {
            if w > 0 && w < *best {
                *best = w;
            }
            true
        },
    )
    .into_iter()
    .min()
    .filter(|&w| w != usize::MAX)
}

fn any_weight_at_most<S: Space>(space: &S, bound: usize) -> bool {
    walk(
        space,
        || false,
        |found, w| {
            if w > 0 && w <= bound {
                *found = true;
                return false;
            }
            true
        },
    )
    .into_iter()
    .any(|b| b)
}

fn distribution_in<S: Space>(space: &S, n: usize) -> Vec<u64> {
    walk(
        space,
        || vec![0u64; n + 1],
        |hist, w| {
            hist[w] += 1;
            true
        },
    )
    .into_iter()
    .fold(vec![0u64; n + 1], |mut acc, h| {
        for (a, b) in acc.iter_mut().zip(h) {
            *a += b;
        }
        acc
    })
}

impl Packed {
    pub fn min_weight(&self) -> Option<usize> {
        match self {
            Packed::Binary(s) => min_weight_in(s),
            Packed::Odd(s) => min_weight_in(s),
        }
    }

    pub fn any_weight_at_most(&self, bound: usize) -> bool {
        match self {
            Packed::Binary(s) => any_weight_at_most(s, bound),
            Packed::Odd(s) => any_weight_at_most(s, bound),
        }
    }

    pub fn distribution(&self, n: usize) -> Vec<u64> {
        match self {
            Packed::Binary(s) => distribution_in(s, n),
            Packed::Odd(s) => distribution_in(s, n),
        }
    }
}

/// MacWilliams transform: weight distribution of C from that of its dual.
/// Returns `None` on i128 overflow.
pub(crate) fn macwilliams(dual_dist: &[u64], q: u64, n: usize) -> Option<Vec<i128>> {
    use crate::util::binomial;
    let dual_size: i128 = dual_dist.iter().map(|&b| b as i128).sum();
    let q1 = q as i128 - 1;
    let mut out = Vec::with_capacity(n + 1);
    for w in 0..=n {
        let mut total: i128 = 0;
        for (j, &b) in dual_dist.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let mut kw: i128 = 0;
            for s in 0..=w {
                let pw = q1.checked_pow((w - s) as u32)?;
                let term = pw
                    .checked_mul(binomial(j as u32, s as u32))?
                    .checked_mul(binomial((n - j) as u32, (w - s) as u32))?;
                kw = if s % 2 == 0 {
                    kw.checked_add(term)?
                } else {
                    kw.checked_sub(term)?
                };
            }
            total = total.checked_add((b as i128).checked_mul(kw)?)?;
        }
        if total % dual_size != 0 {
            return None;
        }
        out.push(total / dual_size);
    }
    Some(out)
}
