//! Linear codes given by a generator matrix in canonical reduced row-echelon form.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{field_of_order, FieldElement, FieldRef};
use crate::linalg::{self, Row};
use crate::weights;

/// Largest number of codewords enumerated by [`LinearCode::min_distance`].
pub const ENUMERATION_CAP: u128 = 1 << 24;

/// Inner product used for duals and hulls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Euclidean,
    Hermitian,
}

impl std::str::FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Form> {
        match s {
            "euclidean" => Ok(Form::Euclidean),
            "hermitian" => Ok(Form::Hermitian),
            _ => Err(Error::Parse(format!("unknown form '{s}'"))),
        }
    }
}

/// An [n, k] linear code. Two equal codes have identical generator matrices.
#[derive(Clone)]
pub struct LinearCode {
    field: FieldRef,
    n: usize,
    gen: Vec<Row>,
    pivots: Vec<usize>,
    dmin: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gen == other.gen && *self.field == *other.field
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] code over GF({})",
            self.n,
            self.k(),
            self.field.order()
        )?;
        for row in &self.gen {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "\n  {}", r.join(" "))?;
        }
        Ok(())
    }
}

/// Generator matrix [I_k : P] of a column-permuted code.
#[derive(Clone, Debug)]
pub struct Systematic {
    pub code: LinearCode,
    /// `perm[i]` is the original column moved to position `i`.
    pub perm: Vec<usize>,
}

impl Systematic {
    /// The k x (n-k) block P.
    pub fn parity_block(&self) -> Vec<Row> {
        let k = self.code.k();
        self.code.gen.iter().map(|r| r[k..].to_vec()).collect()
    }
}

impl LinearCode {
    /// Row space of `rows`, reduced to canonical form.
    pub fn from_rows(field: &FieldRef, n: usize, rows: Vec<Row>) -> Result<LinearCode> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        if let Some(&x) = rows.iter().flatten().find(|x| x.value() >= field.order()) {
            return Err(Error::InvalidElement(x.value() as u64));
        }
        let mut gen = rows;
        let pivots = linalg::rref(field, &mut gen, n);
        Ok(LinearCode {
            field: field.clone(),
            n,
            gen,
            pivots,
            dmin: OnceLock::new(),
        })
    }

    pub fn zero(field: &FieldRef, n: usize) -> LinearCode {
        LinearCode::from_rows(field, n, Vec::new()).expect("empty row set")
    }

    pub fn full(field: &FieldRef, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![FieldElement::ZERO; n];
                r[i] = FieldElement::ONE;
                r
            })
            .collect();
        LinearCode::from_rows(field, n, rows).expect("identity rows")
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn k(&self) -> usize {
        self.gen.len()
    }

    pub fn generator(&self) -> &[Row] {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero_code(&self) -> bool {
        self.gen.is_empty()
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        v.len() == self.n && linalg::in_row_space(&self.field, &self.gen, &self.pivots, v)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if *self.field != *other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        let rows = linalg::nullspace(&self.field, &self.gen, &self.pivots, self.n);
        LinearCode::from_rows(&self.field, self.n, rows).expect("rows have length n")
    }

    /// C1 + C2.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let rows = self.gen.iter().chain(&other.gen).cloned().collect();
        LinearCode::from_rows(&self.field, self.n, rows)
    }

    /// C1 ∩ C2 = dual(dual(C1) + dual(C2)).
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Entrywise x -> x^(p^j).
    pub fn frobenius_image(&self, j: u32) -> LinearCode {
        let f = &self.field;
        let rows = self
            .gen
            .iter()
            .map(|r| r.iter().map(|&x| f.frobenius(x, j)).collect())
            .collect();
        LinearCode::from_rows(f, self.n, rows).expect("same shape")
    }

    /// Entrywise conjugation x -> x^sqrt(Q).
    pub fn conjugate_code(&self) -> Result<LinearCode> {
        self.hermitian_power().map(|j| self.frobenius_image(j))
    }

    fn hermitian_power(&self) -> Result<u32> {
        if !self.field.is_square_order() {
            return Err(Error::NotSquareOrderField(self.field.order()));
        }
        Ok(self.field.degree() / 2)
    }

    /// G * sigma(G)^T with sigma = x -> x^(p^j).
    pub fn gram(&self, j: u32) -> Vec<Row> {
        let f = &self.field;
        let twisted: Vec<Row> = self
            .gen
            .iter()
            .map(|r| r.iter().map(|&x| f.frobenius(x, j)).collect())
            .collect();
        linalg::mul_transpose(f, &self.gen, &twisted)
    }

    /// k - rank(G sigma(G)^T): dimension of C ∩ sigma(C)^⊥.
    pub(crate) fn hull_dim_twisted(&self, j: u32) -> usize {
        let g = self.gram(j);
        self.k() - linalg::rank(&self.field, &g, self.k())
    }

    /// Dimension of C ∩ C^⊥ for the given form.
    pub fn hull_dim(&self, form: Form) -> Result<usize> {
        let j = match form {
            Form::Euclidean => 0,
            Form::Hermitian => self.hermitian_power()?,
        };
        Ok(self.hull_dim_twisted(j))
    }

    /// Hermitian dual (C-bar)^⊥.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        Ok(self.conjugate_code()?.dual())
    }

    /// LCD test by Gram rank; the Hermitian case is cross-checked against
    /// the intersection C ∩ dual(conj(C)).
    pub fn is_lcd(&self, form: Form) -> Result<bool> {
        let by_gram = self.hull_dim(form)? == 0;
        if form == Form::Hermitian {
            let by_intersection = self.intersect(&self.hermitian_dual()?)?.is_zero_code();
            if by_gram != by_intersection {
                return Err(Error::OracleDisagreement(
                    "Hermitian Gram rank vs intersection".into(),
                ));
            }
        }
        Ok(by_gram)
    }

    /// Column-permuted copy with generator [I_k : P]; pivots taken leftmost first.
    pub fn systematic_form(&self) -> Systematic {
        let mut perm = self.pivots.clone();
        perm.extend((0..self.n).filter(|c| !self.pivots.contains(c)));
        let code = self.permute_columns(&perm);
        Systematic { code, perm }
    }

    /// Code whose column `i` is column `perm[i]` of this one.
    pub fn permute_columns(&self, perm: &[usize]) -> LinearCode {
        let rows = self
            .gen
            .iter()
            .map(|r| perm.iter().map(|&c| r[c]).collect())
            .collect();
        LinearCode::from_rows(&self.field, self.n, rows).expect("same shape")
    }

    pub fn is_systematic(&self) -> bool {
        self.pivots.iter().enumerate().all(|(i, &c)| i == c)
    }

    /// Number of codewords p^(k e).
    fn size(&self, k: usize, e: u32) -> u128 {
        (self.field.characteristic() as u128)
            .checked_pow(k as u32 * e)
            .unwrap_or(u128::MAX)
    }

    /// Exact minimum Hamming weight of a nonzero codeword.
    ///
    /// Enumerates the message space when q^k <= q^(n-k); otherwise enumerates
    /// the dual and applies the MacWilliams transform.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.dmin.get() {
            return Ok(d);
        }
        let d = self.compute_min_distance()?;
        let _ = self.dmin.set(d);
        Ok(d)
    }

    fn compute_min_distance(&self) -> Result<usize> {
        let k = self.k();
        if k == 0 {
            return Err(Error::PreconditionViolation(
                "the zero code has no minimum distance".into(),
            ));
        }
        let e = self.field.degree();
        let direct = self.size(k, e);
        let via_dual = self.size(self.n - k, e);
        if direct <= via_dual || direct <= ENUMERATION_CAP.min(1 << 16) {
            if direct > ENUMERATION_CAP {
                return Err(Error::TooLargeToEnumerate(direct));
            }
            return self.min_distance_in_subfield(e);
        }
        if via_dual > ENUMERATION_CAP {
            return Err(Error::TooLargeToEnumerate(via_dual));
        }
        let dual = self.dual();
        let dist = weights::pack(&self.field, self.n, &dual.gen, e).distribution(self.n);
        match weights::macwilliams(&dist, self.field.order() as u64, self.n) {
            Some(a) => Ok((1..=self.n)
                .find(|&w| a[w] > 0)
                .expect("a nonzero code has a nonzero codeword")),
            None if direct <= ENUMERATION_CAP => self.min_distance_in_subfield(e),
            None => Err(Error::TooLargeToEnumerate(direct)),
        }
    }

    /// Minimum distance by direct enumeration, for a code whose generator
    /// entries all lie in the subfield of degree `e` over GF(p). The F_p-span
    /// of {beta * g} over a basis beta of that subfield is enumerated.
    pub(crate) fn min_distance_in_subfield(&self, e: u32) -> Result<usize> {
        let size = self.size(self.k(), e);
        if size > ENUMERATION_CAP {
            return Err(Error::TooLargeToEnumerate(size));
        }
        weights::pack(&self.field, self.n, &self.gen, e)
            .min_weight()
            .ok_or_else(|| {
                Error::PreconditionViolation("the zero code has no minimum distance".into())
            })
    }

    /// Whether some nonzero codeword has weight <= `bound`; may stop early.
    pub fn has_weight_at_most(&self, bound: usize) -> Result<bool> {
        let size = self.size(self.k(), self.field.degree());
        if size > ENUMERATION_CAP {
            return Err(Error::TooLargeToEnumerate(size));
        }
        Ok(
            weights::pack(&self.field, self.n, &self.gen, self.field.degree())
                .any_weight_at_most(bound),
        )
    }

    /// Serializes to the text code format: `q n k` then k rows of elements.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.field.order(), self.n, self.k());
        for r in &self.gen {
            let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            out.push_str(&v.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text code format. Rows are reduced, so `k` in the header is
    /// the number of rows read, not necessarily the final dimension.
    pub fn parse(text: &str) -> Result<LinearCode> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty code file".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header '{header}'")))
            })
            .collect::<Result<_>>()?;
        let [q, n, k] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be 'q n k', got '{header}'"
            )));
        };
        let field = field_of_order(q)?;
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad element '{t}'")))
                            .and_then(|v| field.elem(v))
                    })
                    .collect::<Result<Row>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != k as usize {
            return Err(Error::Parse(format!(
                "expected {k} rows, found {}",
                rows.len()
            )));
        }
        LinearCode::from_rows(&field, n as usize, rows)
    }
}
