//! Cyclic codes by generator polynomial, including repeated-root lengths.
//!
//! LCD tests use the gcd criterion: C = <g> is Euclidean LCD iff
//! gcd(g, h~) = 1 and Hermitian LCD iff gcd(g, (conj h)~) = 1, where
//! x^ell - 1 = g h and ~ is the monic reciprocal. The structural form of the
//! same statement (g fixed by the (conjugate) reciprocal map, and every
//! irreducible factor of g appearing with its full multiplicity in x^ell - 1)
//! is evaluated alongside and must agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldRef};
use crate::lincode::{Form, LinearCode};
use crate::poly::{factor_xm_minus_1, Poly};
use crate::util;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    field: FieldRef,
    ell: usize,
    g: Poly,
    h: Poly,
}

/// Splits ell as ell~ * p^e with p not dividing ell~.
pub fn split_length(ell: usize, p: u32) -> (usize, u32) {
    let mut rest = ell;
    let mut e = 0;
    while rest.is_multiple_of(p as usize) {
        rest /= p as usize;
        e += 1;
    }
    (rest, e)
}

/// Monic irreducible factors of x^ell - 1 with their common multiplicity p^e.
pub fn irreducible_factors(field: &FieldRef, ell: usize) -> Result<(Vec<Poly>, usize)> {
    let (base_len, e) = split_length(ell, field.characteristic());
    let profile = factor_xm_minus_1(field, base_len)?;
    let mut factors: Vec<Poly> = profile.self_recip.iter().map(|g| g.poly.clone()).collect();
    for pr in &profile.pairs {
        factors.push(pr.h.clone());
        factors.push(pr.h_star.clone());
    }
    Ok((factors, (field.characteristic() as usize).pow(e)))
}

/// All monic divisors of x^ell - 1, ordered by exponent vector
/// (factor order as in the factor profile, lexicographic).
pub fn divisors_of_xl_minus_1(field: &FieldRef, ell: usize) -> Result<Vec<Poly>> {
    let (factors, mult) = irreducible_factors(field, ell)?;
    let mut out = vec![Poly::one(field)];
    for f in factors.iter().rev() {
        let powers: Vec<Poly> = (0..=mult).map(|e| f.pow(e)).collect::<Result<_>>()?;
        let mut next = Vec::with_capacity(out.len() * powers.len());
        for fp in &powers {
            for d in &out {
                next.push(fp.mul(d)?);
            }
        }
        out = next;
    }
    Ok(out)
}

fn multiplicity(f: &Poly, g: &Poly) -> Result<usize> {
    let mut rest = g.clone();
    let mut count = 0;
    loop {
        let (q, r) = rest.divmod(f)?;
        if !r.is_zero() {
            return Ok(count);
        }
        rest = q;
        count += 1;
    }
}

/// (Frobenius-twisted) monic reciprocal: monic reciprocal of g with
/// coefficients raised to p^j.
pub(crate) fn twisted_reciprocal(g: &Poly, j: u32) -> Result<Poly> {
    g.frobenius(j).monic_reciprocal()
}

/// Outcome of the cyclic LCD checks for one form.
#[derive(Clone, Debug, Serialize)]
pub struct CyclicVerdict {
    pub lcd: bool,
    pub hull_dim: usize,
    pub reversible: bool,
    pub conjugate_reversible: Option<bool>,
    /// Whether the reversibility equivalence is claimed (gcd(ell, Q) = 1).
    pub equivalence_applicable: bool,
}

impl CyclicCode {
    /// The code <g> of length `ell`; `g` is normalized to be monic.
    pub fn new(field: &FieldRef, ell: usize, g: &Poly) -> Result<CyclicCode> {
        if g.is_zero() || ell == 0 {
            return Err(Error::NotADivisor(ell));
        }
        let g = g.monic();
        let xl = Poly::x_pow_minus_one(field, ell);
        let (h, r) = xl.divmod(&g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor(ell));
        }
        Ok(CyclicCode {
            field: field.clone(),
            ell,
            g,
            h,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.ell
    }

    pub fn is_empty(&self) -> bool {
        self.ell == 0
    }

    pub fn generator_poly(&self) -> &Poly {
        &self.g
    }

    pub fn check_poly(&self) -> &Poly {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.ell - self.g.degree().unwrap_or(0)
    }

    /// Rows x^i g(x), i < dim.
    pub fn linear_code(&self) -> LinearCode {
        let rows = (0..self.dim())
            .map(|i| {
                let mut r = vec![FieldElement::ZERO; self.ell];
                for (j, &c) in self.g.coeffs().iter().enumerate() {
                    r[i + j] = c;
                }
                r
            })
            .collect();
        LinearCode::from_rows(&self.field, self.ell, rows).expect("rows of length ell")
    }

    fn conjugation_power(&self, form: Form) -> Result<u32> {
        match form {
            Form::Euclidean => Ok(0),
            Form::Hermitian if self.field.is_square_order() => Ok(self.field.degree() / 2),
            Form::Hermitian => Err(Error::NotSquareOrderField(self.field.order())),
        }
    }

    /// gcd criterion, cross-checked with its structural restatement.
    pub fn is_lcd(&self, form: Form) -> Result<bool> {
        let j = self.conjugation_power(form)?;
        self.lcd_with_power(j)
    }

    pub(crate) fn lcd_with_power(&self, j: u32) -> Result<bool> {
        let h_twisted = twisted_reciprocal(&self.h, j)?;
        let by_gcd = self.g.gcd(&h_twisted)?.degree() == Some(0);

        let fixed = twisted_reciprocal(&self.g, j)? == self.g;
        let (factors, mult) = irreducible_factors(&self.field, self.ell)?;
        let mut full_multiplicity = true;
        for f in &factors {
            let m = multiplicity(f, &self.g)?;
            if m != 0 && m != mult {
                full_multiplicity = false;
            }
        }
        let structural = fixed && full_multiplicity;
        if by_gcd != structural {
            return Err(Error::OracleDisagreement(format!(
                "gcd criterion {by_gcd} vs structural form {structural} for g = {}",
                self.g
            )));
        }
        Ok(by_gcd)
    }

    /// g = g~; confirmed by reversing every generator row.
    pub fn is_reversible(&self) -> Result<bool> {
        self.reversible_with_power(0)
    }

    /// g = (conj g)~; confirmed by conjugate-reversing every generator row.
    pub fn is_conjugate_reversible(&self) -> Result<bool> {
        let j = self.conjugation_power(Form::Hermitian)?;
        self.reversible_with_power(j)
    }

    pub(crate) fn reversible_with_power(&self, j: u32) -> Result<bool> {
        let by_poly = twisted_reciprocal(&self.g, j)? == self.g;
        let code = self.linear_code();
        let f = &self.field;
        let by_rows = code.generator().iter().all(|r| {
            let rev: Vec<FieldElement> = r.iter().rev().map(|&x| f.frobenius(x, j)).collect();
            code.contains(&rev)
        });
        if by_poly != by_rows {
            return Err(Error::OracleDisagreement(format!(
                "reciprocal test {by_poly} vs row reversal {by_rows}"
            )));
        }
        Ok(by_poly)
    }

    /// Full report for one form, with the hull oracle.
    pub fn verdict(&self, form: Form) -> Result<CyclicVerdict> {
        let lcd = self.is_lcd(form)?;
        let hull_dim = self.linear_code().hull_dim(form)?;
        if lcd != (hull_dim == 0) {
            return Err(Error::OracleDisagreement(format!(
                "cyclic criterion {lcd} vs hull dimension {hull_dim}"
            )));
        }
        let conjugate_reversible = if self.field.is_square_order() {
            Some(self.is_conjugate_reversible()?)
        } else {
            None
        };
        Ok(CyclicVerdict {
            lcd,
            hull_dim,
            reversible: self.is_reversible()?,
            conjugate_reversible,
            equivalence_applicable: util::gcd(self.ell as u64, self.field.order() as u64) == 1,
        })
    }
}
