//! Builders for LCD codes: Hermitian extension [I:P:P] / [I:P:aP], double
//! circulant codes and their search, and descent to a subfield through a
//! self-dual basis.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{field_of_order, make_field, Embedding, FieldElement, FieldRef};
use crate::linalg::Row;
use crate::lincode::{Form, LinearCode, ENUMERATION_CAP};
use crate::poly::Poly;
use crate::qc::QcCode;
use crate::util;

/// First a (in canonical element order) with a^(s+1) = -1 in GF(s^2), s odd.
pub fn find_a(field: &FieldRef) -> Result<FieldElement> {
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !field.is_square_order() {
        return Err(Error::NotSquareOrderField(field.order()));
    }
    let s = (field.characteristic() as u64).pow(field.degree() / 2);
    let minus_one = field.neg(FieldElement::ONE);
    field
        .elements()
        .find(|&a| field.pow(a, s + 1) == minus_one)
        .ok_or(Error::SearchExhausted)
}

/// The [2n - k, k] code generated by [I : P : P] (characteristic 2) or
/// [I : P : aP], from a code with generator [I : P]. Its Hermitian Gram
/// matrix is the identity.
pub fn hermitian_lcd_extend(code: &LinearCode) -> Result<LinearCode> {
    let f = code.field();
    if !f.is_square_order() {
        return Err(Error::NotSquareOrderField(f.order()));
    }
    if !code.is_systematic() {
        return Err(Error::NotSystematic);
    }
    let a = if f.characteristic() == 2 {
        FieldElement::ONE
    } else {
        find_a(f)?
    };
    let k = code.k();
    let rows: Vec<Row> = code
        .generator()
        .iter()
        .map(|r| {
            let mut out = r.clone();
            out.extend(r[k..].iter().map(|&x| f.mul(a, x)));
            out
        })
        .collect();
    let n = 2 * code.len() - k;
    let out = LinearCode::from_rows(f, n, rows)?;
    if !gram_is_identity(&out, f.degree() / 2) {
        return Err(Error::OracleDisagreement(
            "extended Gram matrix is not the identity".into(),
        ));
    }
    Ok(out)
}

/// Whether G sigma(G)^T = I_k with sigma = x -> x^(p^j).
pub fn gram_is_identity(code: &LinearCode, j: u32) -> bool {
    code.gram(j).iter().enumerate().all(|(i, r)| {
        r.iter().enumerate().all(|(c, &x)| {
            x == if i == c {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        })
    })
}

/// The double circulant code <(1, a(x))> of length 2m.
pub fn double_circulant(base: &FieldRef, m: usize, a: &Poly) -> Result<QcCode> {
    if let Some(degree) = a.degree() {
        if degree >= m {
            return Err(Error::DegreeTooLarge { degree, m });
        }
    }
    QcCode::new(base, m, 2, vec![vec![Poly::one(base), a.clone()]])
}

/// gcd(a(x) a(x^-1) + 1, x^m - 1) = 1.
pub fn dc_is_lcd(base: &FieldRef, m: usize, a: &Poly) -> Result<bool> {
    let p = base.characteristic() as u64;
    if m == 0 || util::gcd(m as u64, p) != 1 {
        return Err(Error::NotCoprime { a: m as u64, b: p });
    }
    let b = a
        .mul_mod(&a.reverse_mod(m), m)?
        .add(&Poly::one(base))?
        .mod_xm_minus_1(m);
    Ok(b.gcd(&Poly::x_pow_minus_one(base, m))?.degree() == Some(0))
}

/// Polynomial with coefficient digits of `index` in base q, constant term first.
pub fn candidate(base: &FieldRef, m: usize, index: u64) -> Poly {
    let q = base.order() as u64;
    let mut rest = index;
    let coeffs = (0..m)
        .map(|_| {
            let c = base.elem(rest % q).expect("digit below q");
            rest /= q;
            c
        })
        .collect();
    Poly::new(base, coeffs)
}

/// Inverse of [`candidate`].
pub fn candidate_index(a: &Poly) -> u64 {
    let q = a.field().order() as u64;
    a.coeffs()
        .iter()
        .rev()
        .fold(0, |acc, c| acc * q + c.value() as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64, trials: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DcBest {
    pub a: Poly,
    pub index: u64,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DcReport {
    pub q: u32,
    pub m: usize,
    pub mode: SearchMode,
    pub candidates: u64,
    pub lcd_count: u64,
    pub best: Option<DcBest>,
}

/// Best minimum distance among LCD double circulant codes <(1, a(x))>.
///
/// Candidates are indexed by the base-q value of their coefficient vector;
/// ties go to the smallest index. A candidate is skipped only when it has a
/// codeword lighter than the best distance found so far, so the report does
/// not depend on scheduling.
pub fn dc_search(base: &FieldRef, m: usize, mode: SearchMode) -> Result<DcReport> {
    let q = base.order() as u64;
    let total = q.checked_pow(m as u32).filter(|&t| t <= 1 << 62);
    let indices: Vec<u64> = match mode {
        SearchMode::Exhaustive => {
            let t = total
                .filter(|&t| t <= 1 << 20)
                .ok_or(Error::TooLargeToEnumerate(
                    (q as u128).saturating_pow(m as u32),
                ))?;
            (0..t).collect()
        }
        SearchMode::Random { seed, trials } => {
            let t = total.ok_or(Error::TooLargeToEnumerate(u128::MAX))?;
            (0..trials)
                .map(|trial| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(trial);
                    rng.gen_range(0..t)
                })
                .collect()
        }
    };
    let words = (q as u128).pow(m as u32);
    if words > ENUMERATION_CAP {
        return Err(Error::TooLargeToEnumerate(words));
    }
    let lcd: Vec<u64> = indices
        .par_iter()
        .map(|&i| dc_is_lcd(base, m, &candidate(base, m, i)).map(|ok| ok.then_some(i)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let best_d = AtomicUsize::new(0);
    let scored: Vec<(u64, usize)> = lcd
        .par_iter()
        .map(|&i| -> Result<Option<(u64, usize)>> {
            let code = double_circulant(base, m, &candidate(base, m, i))?.expand();
            let known = best_d.load(Ordering::Relaxed);
            if known > 1 && code.has_weight_at_most(known - 1)? {
                return Ok(None);
            }
            let d = code.min_distance()?;
            best_d.fetch_max(d, Ordering::Relaxed);
            Ok(Some((i, d)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let best = scored
        .iter()
        .copied()
        .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
        .map(|(index, d)| DcBest {
            a: candidate(base, m, index),
            index,
            d,
        });
    Ok(DcReport {
        q: base.order(),
        m,
        mode,
        candidates: indices.len() as u64,
        lcd_count: lcd.len() as u64,
        best,
    })
}

/// A basis of GF(q^ell) over GF(q) with Tr(b_i b_j) = [i = j].
#[derive(Clone, Debug)]
pub struct SelfDualBasis {
    pub big: FieldRef,
    pub sub: FieldRef,
    pub basis: Vec<FieldElement>,
    embedding: Embedding,
}

impl SelfDualBasis {
    /// Checks the full trace Gram matrix.
    pub fn new(big: &FieldRef, sub: &FieldRef, basis: Vec<FieldElement>) -> Result<SelfDualBasis> {
        let embedding = Embedding::new(sub, big)?;
        let b = SelfDualBasis {
            big: big.clone(),
            sub: sub.clone(),
            basis,
            embedding,
        };
        if b.basis.len() != b.embedding.relative_degree() as usize || !b.is_self_dual() {
            return Err(Error::PreconditionViolation(
                "trace Gram matrix is not the identity".into(),
            ));
        }
        Ok(b)
    }

    pub fn trace(&self, x: FieldElement) -> FieldElement {
        self.embedding.trace(x)
    }

    fn is_self_dual(&self) -> bool {
        let f = &self.big;
        self.basis.iter().enumerate().all(|(i, &x)| {
            self.basis.iter().enumerate().all(|(j, &y)| {
                let want = if i == j {
                    FieldElement::ONE
                } else {
                    FieldElement::ZERO
                };
                self.trace(f.mul(x, y)) == want
            })
        })
    }

    /// Coordinates x_i = Tr(x b_i), so that x = sum x_i b_i.
    pub fn coordinates(&self, x: FieldElement) -> Vec<FieldElement> {
        self.basis
            .iter()
            .map(|&b| self.trace(self.big.mul(x, b)))
            .collect()
    }

    /// Coordinatewise expansion of a vector, c_i occupying positions i*ell..(i+1)*ell.
    pub fn expand_vector(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        v.iter().flat_map(|&x| self.coordinates(x)).collect()
    }
}

/// Self-dual basis of GF(q^ell) over GF(q).
///
/// Normal bases {a^(q^i)} are tried first, in canonical element order;
/// otherwise a depth-first search picks elements with Tr(v^2) = 1 that are
/// trace-orthogonal to those already chosen.
pub fn self_dual_basis(q: u64, ell: usize) -> Result<SelfDualBasis> {
    let sub = field_of_order(q)?;
    if sub.characteristic() != 2 && ell.is_multiple_of(2) {
        return Err(Error::NoSelfDualBasisExists {
            q: sub.order(),
            ell,
        });
    }
    let p = sub.characteristic() as u64;
    let k = sub.degree();
    let big = make_field(p, k * ell as u32)?;
    let emb = Embedding::new(&sub, &big)?;
    let tr = |x: FieldElement| emb.trace(x);

    for a in big.elements() {
        let basis: Vec<FieldElement> = (0..ell).map(|i| big.frobenius(a, k * i as u32)).collect();
        if let Ok(b) = SelfDualBasis::new(&big, &sub, basis) {
            return Ok(b);
        }
    }

    let unit: Vec<FieldElement> = big
        .elements()
        .filter(|&v| tr(big.mul(v, v)) == FieldElement::ONE)
        .collect();
    fn extend(
        chosen: &mut Vec<FieldElement>,
        unit: &[FieldElement],
        start: usize,
        ell: usize,
        ortho: &dyn Fn(FieldElement, FieldElement) -> bool,
    ) -> bool {
        if chosen.len() == ell {
            return true;
        }
        for i in start..unit.len() {
            let v = unit[i];
            if chosen.iter().all(|&c| ortho(c, v)) {
                chosen.push(v);
                if extend(chosen, unit, i + 1, ell, ortho) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let ortho = |x: FieldElement, y: FieldElement| tr(big.mul(x, y)).is_zero();
    let mut chosen = Vec::with_capacity(ell);
    if extend(&mut chosen, &unit, 0, ell, &ortho) {
        return SelfDualBasis::new(&big, &sub, chosen);
    }
    Err(Error::SearchExhausted)
}

/// phi(C): the GF(q)-code spanned by the basis coordinates of {b_t * g} for
/// every generator row g and basis element b_t.
pub fn expand_subfield(code: &LinearCode, basis: &SelfDualBasis) -> Result<LinearCode> {
    if **code.field() != *basis.big {
        return Err(Error::BasisFieldMismatch);
    }
    let f = &basis.big;
    let rows = code
        .generator()
        .iter()
        .flat_map(|g| {
            basis.basis.iter().map(move |&b| {
                let scaled: Vec<FieldElement> = g.iter().map(|&x| f.mul(b, x)).collect();
                basis.expand_vector(&scaled)
            })
        })
        .collect();
    LinearCode::from_rows(&basis.sub, code.len() * basis.basis.len(), rows)
}

/// LCD status of C and of phi(C), each by its own hull computation.
pub fn descent_preserves_lcd(code: &LinearCode, basis: &SelfDualBasis) -> Result<(bool, bool)> {
    Ok((
        code.is_lcd(Form::Euclidean)?,
        expand_subfield(code, basis)?.is_lcd(Form::Euclidean)?,
    ))
}
