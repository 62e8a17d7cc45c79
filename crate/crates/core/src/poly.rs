//! Univariate polynomials over a finite field and the factorization of x^m - 1
//! into self-reciprocal factors and reciprocal pairs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{root_of_unity, Embedding, FieldElement, FieldRef, RootOfUnity};
use crate::util;

/// Dense polynomial, constant coefficient first, no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Poly[{}]({})",
            self.field.order(),
            self.to_coeff_string()
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coef = if *c == FieldElement::ONE && i > 0 {
                String::new()
            } else if i > 0 {
                format!("{c}*")
            } else {
                format!("{c}")
            };
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(format!("{coef}{mono}"));
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_coeff_string())
    }
}

fn same_field(a: &FieldRef, b: &FieldRef) -> Result<()> {
    if std::sync::Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// From packed element values, constant term first.
    pub fn from_values(field: &FieldRef, values: &[u32]) -> Result<Poly> {
        let coeffs = values
            .iter()
            .map(|&v| field.elem(v as u64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    /// Parses the comma-separated coefficient format, e.g. `1,1,0,1` = 1 + x + x^3.
    pub fn parse(field: &FieldRef, s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Poly::zero(field));
        }
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad coefficient '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::from_values(field, &values)
    }

    pub fn to_coeff_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }

    pub fn zero(field: &FieldRef) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &FieldRef) -> Poly {
        Poly::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &FieldRef, c: FieldElement) -> Poly {
        Poly::new(field, vec![c])
    }

    /// c * x^e.
    pub fn monomial(field: &FieldRef, c: FieldElement, e: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; e + 1];
        coeffs[e] = c;
        Poly::new(field, coeffs)
    }

    /// x^m - 1.
    pub fn x_pow_minus_one(field: &FieldRef, m: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; m + 1];
        coeffs[0] = field.neg(FieldElement::ONE);
        coeffs[m] = field.add(coeffs[m], FieldElement::ONE);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElement::ONE
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        same_field(&self.field, &other.field)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        same_field(&self.field, &other.field)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        same_field(&self.field, &divisor.field)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - db] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, d));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic multiple; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        Ok(self.xgcd(other)?.0)
    }

    /// Returns `(g, a, b)` with `a*self + b*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        same_field(&self.field, &other.field)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s2 = s0.sub(&q.mul(&s1)?)?;
            let t2 = t0.sub(&q.mul(&t1)?)?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = f.inv(r0.lead())?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Evaluation at a point of the coefficient field.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluation at a point of an extension, coefficients mapped through `emb`.
    pub fn eval_in(&self, emb: &Embedding, y: FieldElement) -> Result<FieldElement> {
        same_field(&self.field, emb.small())?;
        let big = emb.big();
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| {
                big.add(big.mul(acc, y), emb.embed(c))
            }))
    }

    /// Coefficientwise image under an embedding.
    pub fn embed(&self, emb: &Embedding) -> Result<Poly> {
        same_field(&self.field, emb.small())?;
        Ok(Poly::new(
            emb.big(),
            self.coeffs.iter().map(|&c| emb.embed(c)).collect(),
        ))
    }

    /// Pulls a polynomial over the extension back to the subfield, if possible.
    pub fn restrict(&self, emb: &Embedding) -> Option<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| emb.restrict(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(emb.small(), coeffs))
    }

    /// Reduction modulo x^m - 1 by folding exponents.
    pub fn mod_xm_minus_1(&self, m: usize) -> Poly {
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; m.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % m] = f.add(out[i % m], c);
        }
        Poly::new(f, out)
    }

    /// Product in F[x]/(x^m - 1).
    pub fn mul_mod(&self, other: &Poly, m: usize) -> Result<Poly> {
        Ok(self.mul(other)?.mod_xm_minus_1(m))
    }

    /// a(x^{-1}) = a(x^{m-1}) in F[x]/(x^m - 1).
    pub fn reverse_mod(&self, m: usize) -> Poly {
        let f = &self.field;
        let r = self.mod_xm_minus_1(m);
        let mut out = vec![FieldElement::ZERO; m];
        for (i, &c) in r.coeffs.iter().enumerate() {
            out[(m - i) % m] = c;
        }
        Poly::new(f, out)
    }

    /// Monic reciprocal f(0)^{-1} x^{deg f} f(1/x).
    pub fn monic_reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv(c0)?;
        let rev: Vec<FieldElement> = self.coeffs.iter().rev().copied().collect();
        Ok(Poly::new(&self.field, rev).scale(inv))
    }

    /// Coefficientwise conjugation x -> x^sqrt(Q).
    pub fn conjugate(&self) -> Result<Poly> {
        if !self.field.is_square_order() {
            return Err(Error::NotSquareOrderField(self.field.order()));
        }
        Ok(self.frobenius(self.field.degree() / 2))
    }

    /// Coefficientwise x -> x^(p^j).
    pub fn frobenius(&self, j: u32) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.frobenius(c, j)).collect())
    }

    /// Monic reciprocal of the conjugate.
    pub fn conjugate_reciprocal(&self) -> Result<Poly> {
        self.conjugate()?.monic_reciprocal()
    }

    pub fn pow(&self, e: usize) -> Result<Poly> {
        let mut acc = Poly::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

/// Partition of Z_m into q-cyclotomic cosets, each listed in orbit order
/// starting from its smallest member; cosets sorted by that leader.
pub fn cyclotomic_cosets(q: u64, m: usize) -> Result<Vec<Vec<usize>>> {
    if m == 0 || util::gcd(q, m as u64) != 1 {
        return Err(Error::NotCoprime { a: q, b: m as u64 });
    }
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = (i as u64 * q % m as u64) as usize;
        }
        out.push(coset);
    }
    Ok(out)
}

/// Self-reciprocal irreducible factor g_i with root xi^{u_i}.
#[derive(Clone, Debug, Serialize)]
pub struct SelfReciprocalFactor {
    pub poly: Poly,
    pub exponent: usize,
    pub coset: Vec<usize>,
}

impl SelfReciprocalFactor {
    pub fn degree(&self) -> usize {
        self.coset.len()
    }
}

/// Reciprocal pair (h_j, h_j*) with h_j(xi^{v_j}) = 0 and h_j*(xi^{-v_j}) = 0.
#[derive(Clone, Debug, Serialize)]
pub struct ReciprocalPair {
    pub h: Poly,
    pub h_star: Poly,
    pub exponent: usize,
    pub coset: Vec<usize>,
    pub star_coset: Vec<usize>,
}

impl ReciprocalPair {
    pub fn degree(&self) -> usize {
        self.coset.len()
    }
}

/// Factorization x^m - 1 = g_1...g_s h_1 h_1*...h_t h_t* over the base field.
#[derive(Clone, Debug)]
pub struct FactorProfile {
    pub m: usize,
    pub base: FieldRef,
    pub self_recip: Vec<SelfReciprocalFactor>,
    pub pairs: Vec<ReciprocalPair>,
    pub root: RootOfUnity,
}

/// Identifies one CRT component: a self-reciprocal factor, or one side of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    SelfRecip(usize),
    PairFirst(usize),
    PairSecond(usize),
}

/// Factors x^m - 1 over `base` via minimal polynomials of powers of the root of unity.
pub fn factor_xm_minus_1(base: &FieldRef, m: usize) -> Result<FactorProfile> {
    let q = base.order() as u64;
    if m == 0 || util::gcd(m as u64, base.characteristic() as u64) != 1 {
        return Err(Error::NotCoprime {
            a: m as u64,
            b: base.characteristic() as u64,
        });
    }
    let root = root_of_unity(base, m)?;
    let big = &root.splitting;
    let cosets = cyclotomic_cosets(q, m)?;
    let leader_of = |i: usize| -> usize {
        cosets
            .iter()
            .find(|c| c.contains(&i))
            .map(|c| c[0])
            .expect("cosets partition Z_m")
    };
    let min_poly = |coset: &[usize]| -> Result<Poly> {
        let mut acc = Poly::one(big);
        for &i in coset {
            let r = big.pow(root.xi, i as u64);
            acc = acc.mul(&Poly::new(big, vec![big.neg(r), FieldElement::ONE]))?;
        }
        acc.restrict(&root.embedding).ok_or_else(|| {
            Error::OracleDisagreement("minimal polynomial left the base field".into())
        })
    };
    let mut self_recip = Vec::new();
    let mut pairs = Vec::new();
    for coset in &cosets {
        let u = coset[0];
        let neg_leader = leader_of((m - u) % m);
        if neg_leader == u {
            self_recip.push(SelfReciprocalFactor {
                poly: min_poly(coset)?,
                exponent: u,
                coset: coset.clone(),
            });
        } else if u < neg_leader {
            let star = cosets.iter().find(|c| c[0] == neg_leader).unwrap();
            pairs.push(ReciprocalPair {
                h: min_poly(coset)?,
                h_star: min_poly(star)?,
                exponent: u,
                coset: coset.clone(),
                star_coset: star.clone(),
            });
        }
    }
    let profile = FactorProfile {
        m,
        base: base.clone(),
        self_recip,
        pairs,
        root,
    };
    if profile.product()? != Poly::x_pow_minus_one(base, m) {
        return Err(Error::OracleDisagreement(
            "factor product differs from x^m - 1".into(),
        ));
    }
    Ok(profile)
}

impl FactorProfile {
    pub fn splitting(&self) -> &FieldRef {
        &self.root.splitting
    }

    pub fn xi(&self) -> FieldElement {
        self.root.xi
    }

    pub fn s(&self) -> usize {
        self.self_recip.len()
    }

    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    /// Product of all factors; equals x^m - 1.
    pub fn product(&self) -> Result<Poly> {
        let mut acc = Poly::one(&self.base);
        for g in &self.self_recip {
            acc = acc.mul(&g.poly)?;
        }
        for pr in &self.pairs {
            acc = acc.mul(&pr.h)?.mul(&pr.h_star)?;
        }
        Ok(acc)
    }

    /// All slots in canonical order: self-reciprocal first, then each pair as (h, h*).
    pub fn slots(&self) -> Vec<Slot> {
        let mut out: Vec<Slot> = (0..self.s()).map(Slot::SelfRecip).collect();
        for j in 0..self.t() {
            out.push(Slot::PairFirst(j));
            out.push(Slot::PairSecond(j));
        }
        out
    }

    /// The irreducible factor attached to a slot.
    pub fn factor(&self, slot: Slot) -> &Poly {
        match slot {
            Slot::SelfRecip(i) => &self.self_recip[i].poly,
            Slot::PairFirst(j) => &self.pairs[j].h,
            Slot::PairSecond(j) => &self.pairs[j].h_star,
        }
    }

    /// Exponent e with factor(slot)(xi^e) = 0.
    pub fn exponent(&self, slot: Slot) -> usize {
        match slot {
            Slot::SelfRecip(i) => self.self_recip[i].exponent,
            Slot::PairFirst(j) => self.pairs[j].exponent,
            Slot::PairSecond(j) => (self.m - self.pairs[j].exponent) % self.m,
        }
    }

    /// Degree of the slot's factor over the base field.
    pub fn slot_degree(&self, slot: Slot) -> usize {
        self.factor(slot).degree().unwrap_or(0)
    }

    /// Degree over GF(p) of the slot's residue field, seen inside the splitting field.
    pub fn subfield_degree(&self, slot: Slot) -> u32 {
        self.base.degree() * self.slot_degree(slot) as u32
    }

    /// Evaluation point xi^e of the slot.
    pub fn point(&self, slot: Slot) -> FieldElement {
        self.splitting().pow(self.xi(), self.exponent(slot) as u64)
    }

    /// Frobenius power p^j realising the involution xi^{u_i} -> xi^{-u_i} on a
    /// self-reciprocal slot's field (identity for degree-one slots).
    pub fn conjugation_power(&self, i: usize) -> u32 {
        let d = self.self_recip[i].degree() as u32;
        if d.is_multiple_of(2) {
            self.base.degree() * d / 2
        } else {
            0
        }
    }

    pub fn label(&self, slot: Slot) -> String {
        match slot {
            Slot::SelfRecip(i) => format!("G{}", i + 1),
            Slot::PairFirst(j) => format!("H{}'", j + 1),
            Slot::PairSecond(j) => format!("H{}''", j + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_of_order, make_field};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(field: &FieldRef, v: &[u32]) -> Poly {
        Poly::from_values(field, v).unwrap()
    }

    fn random_poly(field: &FieldRef, rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| FieldElement::from_raw(rng.gen_range(0..field.order())))
            .collect();
        Poly::new(field, coeffs)
    }

    #[test]
    fn basic_arithmetic() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(
            p(&f2, &[1, 0, 1]).gcd(&p(&f2, &[1, 1])).unwrap(),
            p(&f2, &[1, 1])
        );
        assert_eq!(
            p(&f2, &[1, 1, 0, 1]).eval(FieldElement::ONE),
            FieldElement::ONE
        );
        assert_eq!(
            Poly::parse(&f2, "1,1,0,1").unwrap().to_string(),
            "x^3 + x + 1"
        );
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(p(&f2, &[1]).add(&p(&f4, &[1])), Err(Error::FieldMismatch));
        assert_eq!(
            p(&f2, &[1]).divmod(&Poly::zero(&f2)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn xgcd_bezout_identity_random_gf4() {
        let f4 = make_field(2, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let a = random_poly(&f4, &mut rng, 10);
            let b = random_poly(&f4, &mut rng, 10);
            let (g, s, t) = a.xgcd(&b).unwrap();
            assert_eq!(s.mul(&a).unwrap().add(&t.mul(&b).unwrap()).unwrap(), g);
            if !g.is_zero() {
                assert!(g.is_monic());
                assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
            }
        }
    }

    #[test]
    fn monic_reciprocal_examples() {
        let f4 = make_field(2, 2).unwrap();
        // x^2 + x + w, w = 2, w^2 = 3
        let f = p(&f4, &[2, 1, 1]);
        assert_eq!(f.monic_reciprocal().unwrap(), p(&f4, &[3, 3, 1]));
        let sr = p(&f4, &[1, 1, 1]);
        assert_eq!(sr.monic_reciprocal().unwrap(), sr);
        assert_eq!(
            p(&f4, &[0, 1]).monic_reciprocal().unwrap_err(),
            Error::ZeroConstantTerm
        );
        let f3 = make_field(3, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 500 {
            let g = random_poly(&f3, &mut rng, 8);
            if g.coeff(0).is_zero() {
                continue;
            }
            let g = g.monic();
            assert_eq!(g.monic_reciprocal().unwrap().monic_reciprocal().unwrap(), g);
            checked += 1;
        }
    }

    #[test]
    fn conjugation() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(p(&f4, &[1, 2, 1]).conjugate().unwrap(), p(&f4, &[1, 3, 1]));
        let xl = Poly::x_pow_minus_one(&f4, 6);
        assert_eq!(xl.conjugate().unwrap(), xl);
        assert_eq!(xl.monic_reciprocal().unwrap().neg(), xl.neg());
        let f9 = make_field(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let g = random_poly(&f9, &mut rng, 9);
            assert_eq!(g.conjugate().unwrap().conjugate().unwrap(), g);
        }
        let f8 = make_field(2, 3).unwrap();
        assert!(Poly::one(&f8).conjugate().is_err());
    }

    #[test]
    fn cosets() {
        assert_eq!(
            cyclotomic_cosets(2, 7).unwrap(),
            vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]
        );
        assert_eq!(cyclotomic_cosets(2, 3).unwrap(), vec![vec![0], vec![1, 2]]);
        assert_eq!(cyclotomic_cosets(5, 1).unwrap(), vec![vec![0]]);
        assert!(cyclotomic_cosets(2, 6).is_err());
    }

    #[test]
    fn factor_examples() {
        let f2 = make_field(2, 1).unwrap();
        let pr = factor_xm_minus_1(&f2, 3).unwrap();
        assert_eq!((pr.s(), pr.t()), (2, 0));
        assert_eq!(pr.self_recip[0].poly, p(&f2, &[1, 1]));
        assert_eq!(pr.self_recip[1].poly, p(&f2, &[1, 1, 1]));
        assert_eq!(pr.self_recip[1].exponent, 1);

        let pr = factor_xm_minus_1(&f2, 7).unwrap();
        assert_eq!((pr.s(), pr.t()), (1, 1));
        assert_eq!(pr.pairs[0].exponent, 1);
        let cubics = [pr.pairs[0].h.clone(), pr.pairs[0].h_star.clone()];
        assert!(cubics.contains(&p(&f2, &[1, 1, 0, 1])));
        assert!(cubics.contains(&p(&f2, &[1, 0, 1, 1])));

        let pr = factor_xm_minus_1(&f2, 5).unwrap();
        assert_eq!((pr.s(), pr.t()), (2, 0));
        assert_eq!(pr.self_recip[1].poly, p(&f2, &[1, 1, 1, 1, 1]));
        assert_eq!(factor_xm_minus_1(&f2, 6).unwrap_err().name(), "NotCoprime");
    }

    #[test]
    fn factor_grid_reconstruction_and_identities() {
        let mut built = 0;
        for q in [2u64, 3, 4] {
            let base = field_of_order(q).unwrap();
            for m in 2..=31usize {
                if util::gcd(q, m as u64) != 1 {
                    continue;
                }
                let pr = match factor_xm_minus_1(&base, m) {
                    Ok(pr) => pr,
                    Err(Error::FieldTooLarge(_)) => {
                        let s = util::mult_order(q, m as u64) as u32;
                        assert!((q as u128).pow(s) > 1 << 20, "q={q} m={m}");
                        continue;
                    }
                    Err(e) => panic!("q={q} m={m}: {e}"),
                };
                built += 1;
                assert_eq!(pr.product().unwrap(), Poly::x_pow_minus_one(&base, m));
                let big = pr.splitting();
                for g in &pr.self_recip {
                    assert_eq!(g.poly.monic_reciprocal().unwrap(), g.poly);
                    let u = g.exponent;
                    if m > 2 && u != 0 && 2 * u != m {
                        assert_eq!(g.degree() % 2, 0, "q={q} m={m} u={u}");
                    }
                    let r = big.pow(pr.xi(), u as u64);
                    assert!(g.poly.eval_in(&pr.root.embedding, r).unwrap().is_zero());
                }
                for h in &pr.pairs {
                    assert_eq!(h.h.monic_reciprocal().unwrap(), h.h_star);
                    assert_ne!(h.h, h.h_star);
                    let r = big.pow(pr.xi(), h.exponent as u64);
                    let rinv = big.inv(r).unwrap();
                    assert!(h.h.eval_in(&pr.root.embedding, r).unwrap().is_zero());
                    assert!(h
                        .h_star
                        .eval_in(&pr.root.embedding, rinv)
                        .unwrap()
                        .is_zero());
                }
            }
        }
        assert_eq!(built, 42);
    }

    proptest! {
        #[test]
        fn divmod_reconstructs(a in proptest::collection::vec(0u32..9, 0..12),
                               b in proptest::collection::vec(0u32..9, 1..6)) {
            let f9 = make_field(3, 2).unwrap();
            let a = p(&f9, &a);
            let b = p(&f9, &b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
