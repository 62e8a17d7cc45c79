//! Exact arithmetic in GF(p^k).
//!
//! Elements use the polynomial-basis representation: an element is a
//! coefficient vector of length `k` over GF(p), packed into an integer in
//! base `p` with the constant coefficient as the low digit. That integer is
//! also the serialized form and defines the canonical enumeration order.
//!
//! The defining modulus is the lexicographically smallest monic irreducible of
//! degree `k` (coefficients compared from the constant term upward), so every
//! field and every derived object is reproducible bit for bit.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::util;

/// Hard cap on the number of field elements.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Shared handle to a field context.
pub type FieldRef = Arc<FiniteField>;

/// A field element, packed base-`p`. Only meaningful together with its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[cfg(test)]
    pub(crate) fn from_raw(v: u32) -> FieldElement {
        FieldElement(v)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(p^k) context.
pub struct FiniteField {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    pow_p: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    primitive: OnceLock<FieldElement>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.order, self.descriptor())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

fn field_cache() -> &'static Mutex<HashMap<(u32, u32), FieldRef>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), FieldRef>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds GF(p^k) with the canonical modulus.
pub fn make_field(p: u64, k: u32) -> Result<FieldRef> {
    if !util::is_prime(p) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    if k == 0 {
        return Err(Error::FieldTooLarge(0));
    }
    let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if order > MAX_FIELD_ORDER as u128 {
        return Err(Error::FieldTooLarge(order));
    }
    let key = (p as u32, k);
    if let Some(f) = field_cache().lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let modulus = smallest_irreducible(p as u32, k);
    let field = Arc::new(FiniteField::build(p as u32, k, modulus));
    field_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(field.clone());
    Ok(field)
}

/// Builds the field of order `q`, which must be a prime power.
pub fn field_of_order(q: u64) -> Result<FieldRef> {
    match util::prime_power(q) {
        Some((p, k)) => make_field(p, k),
        None if q > 1 && q as u128 > MAX_FIELD_ORDER as u128 => {
            Err(Error::FieldTooLarge(q as u128))
        }
        None => Err(Error::NonPrimeCharacteristic(q)),
    }
}

impl FiniteField {
    /// Builds GF(p^k) with an explicit monic modulus (low coefficient first).
    pub fn with_modulus(p: u64, modulus: Vec<u32>) -> Result<FieldRef> {
        if !util::is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        let p = p as u32;
        let k = modulus.len().saturating_sub(1) as u32;
        if k == 0 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Parse("modulus must be monic of degree >= 1".into()));
        }
        let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(order));
        }
        if !fp::is_irreducible(p, &modulus) {
            return Err(Error::Parse("modulus is reducible".into()));
        }
        Ok(Arc::new(FiniteField::build(p, k, modulus)))
    }

    /// Parses the `p^k:c0,c1,...,ck` descriptor produced by [`FiniteField::descriptor`].
    pub fn from_descriptor(s: &str) -> Result<FieldRef> {
        let bad = || Error::Parse(format!("bad field descriptor '{s}'"));
        let (pk, coeffs) = s.split_once(':').ok_or_else(bad)?;
        let (p, _) = pk.split_once('^').ok_or_else(bad)?;
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let modulus = coeffs
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        FiniteField::with_modulus(p, modulus)
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> FiniteField {
        let mut pow_p = Vec::with_capacity(k as usize + 1);
        let mut acc = 1u32;
        for _ in 0..=k {
            pow_p.push(acc);
            acc = acc.saturating_mul(p);
        }
        let order = pow_p[k as usize];
        let mut field = FiniteField {
            p,
            k,
            order,
            modulus,
            pow_p,
            mul_table: None,
            primitive: OnceLock::new(),
        };
        if p != 2 && k > 1 && order <= 256 {
            let n = order as usize;
            let mut table = vec![0u32; n * n];
            for a in 0..order {
                for b in a..order {
                    let c = field.mul_slow(FieldElement(a), FieldElement(b)).0;
                    table[a as usize * n + b as usize] = c;
                    table[b as usize * n + a as usize] = c;
                }
            }
            field.mul_table = Some(table);
        }
        field
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Defining modulus, constant coefficient first, monic of degree `k`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Serialized form `p^k:modulus-coeffs`.
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        format!("{}^{}:{}", self.p, self.k, coeffs.join(","))
    }

    pub fn is_square_order(&self) -> bool {
        self.k.is_multiple_of(2)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The element with packed value `v`.
    pub fn elem(&self, v: u64) -> Result<FieldElement> {
        if v < self.order as u64 {
            Ok(FieldElement(v as u32))
        } else {
            Err(Error::InvalidElement(v))
        }
    }

    /// Image of the integer `c` under Z -> GF(p).
    pub fn from_int(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p as i64) as u32)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(FieldElement)
    }

    /// Coefficient vector over GF(p), constant term first.
    pub fn digits(&self, x: FieldElement) -> Vec<u32> {
        let mut v = x.0;
        (0..self.k)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElement {
        let mut v = 0u32;
        for (i, &d) in digits.iter().enumerate().take(self.k as usize) {
            v += (d % self.p) * self.pow_p[i];
        }
        FieldElement(v)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.k == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        for i in 0..self.k as usize {
            out += ((x % self.p + y % self.p) % self.p) * self.pow_p[i];
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0;
        for i in 0..self.k as usize {
            out += ((self.p - x % self.p) % self.p) * self.pow_p[i];
            x /= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        if self.k == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if let Some(t) = &self.mul_table {
            return FieldElement(t[a.0 as usize * self.order as usize + b.0 as usize]);
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let k = self.k as usize;
        if self.p == 2 {
            let mut prod: u64 = 0;
            let (x, mut y) = (a.0 as u64, b.0 as u64);
            let mut shift = 0;
            while y != 0 {
                if y & 1 == 1 {
                    prod ^= x << shift;
                }
                y >>= 1;
                shift += 1;
            }
            let mut red: u64 = 0;
            for (i, &c) in self.modulus.iter().enumerate() {
                red |= (c as u64) << i;
            }
            for i in (k..2 * k).rev() {
                if prod >> i & 1 == 1 {
                    prod ^= red << (i - k);
                }
            }
            return FieldElement(prod as u32);
        }
        let p = self.p as u64;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus.iter().enumerate().take(k) {
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m as u64) % p;
            }
            prod[i] = 0;
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&d| d as u32).collect();
        self.from_digits(&digits)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order as u64 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// x^(p^j).
    pub fn frobenius(&self, x: FieldElement, j: u32) -> FieldElement {
        let mut y = x;
        for _ in 0..(j % self.k) {
            y = self.pow(y, self.p as u64);
        }
        y
    }

    /// Conjugation x -> x^sqrt(Q) on a field of square order Q.
    pub fn conj(&self, x: FieldElement) -> Result<FieldElement> {
        if !self.is_square_order() {
            return Err(Error::NotSquareOrderField(self.order));
        }
        Ok(self.frobenius(x, self.k / 2))
    }

    /// Whether `x` lies in the subfield of degree `d` over GF(p).
    pub fn in_subfield(&self, x: FieldElement, d: u32) -> bool {
        d > 0 && self.k.is_multiple_of(d) && self.frobenius(x, d) == x
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut n = self.order as u64 - 1;
        for f in util::prime_factors(n) {
            while n.is_multiple_of(f) && self.pow(x, n / f) == FieldElement::ONE {
                n /= f;
            }
        }
        Ok(n)
    }

    /// First element of full multiplicative order in canonical order.
    pub fn primitive_element(&self) -> FieldElement {
        *self.primitive.get_or_init(|| {
            let n = self.order as u64 - 1;
            let factors = util::prime_factors(n);
            (1..self.order)
                .map(FieldElement)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&f| self.pow(g, n / f) != FieldElement::ONE)
                })
                .expect("a finite field has a primitive element")
        })
    }
}

/// Arithmetic on polynomials over GF(p) stored as plain coefficient vectors.
pub(crate) mod fp {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv(p, b[db]);
        while r.len() > db {
            let c = r[r.len() - 1] as u64 * lead_inv as u64 % p as u64;
            let shift = r.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                let t = (p as u64 - c * bj as u64 % p as u64) % p as u64;
                r[shift + j] = ((r[shift + j] as u64 + t) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn inv(p: u32, a: u32) -> u32 {
        let mut acc = 1u64;
        let mut base = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Trial division by every monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible(p: u32, f: &[u32]) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut v = idx;
                for _ in 0..d {
                    g.push((v % p as u64) as u32);
                    v /= p as u64;
                }
                g.push(1);
                if rem(p, f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for idx in 0..count {
        // c0 is the most significant digit so the scan is lexicographic from the constant term.
        let mut lower = vec![0u32; k as usize];
        let mut v = idx;
        for t in 0..k as usize {
            lower[k as usize - 1 - t] = (v % p as u64) as u32;
            v /= p as u64;
        }
        let mut f = lower;
        f.push(1);
        if fp::is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Embedding of a subfield into an extension, with the inverse on its image.
#[derive(Clone)]
pub struct Embedding {
    small: FieldRef,
    big: FieldRef,
    forward: Vec<FieldElement>,
    back: HashMap<FieldElement, FieldElement>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({:?} -> {:?})", self.small, self.big)
    }
}

impl Embedding {
    /// The generator of `small` is sent to the smallest root of its modulus in `big`.
    pub fn new(small: &FieldRef, big: &FieldRef) -> Result<Embedding> {
        if small.p != big.p || !big.k.is_multiple_of(small.k) {
            return Err(Error::NotASubfield {
                sub: small.order,
                big: big.order,
            });
        }
        let root = if small.k == 1 {
            FieldElement::ZERO
        } else {
            let g = big.primitive_element();
            let step = (big.order as u64 - 1) / (small.order as u64 - 1);
            let gamma = big.pow(g, step);
            let mut y = FieldElement::ONE;
            let mut best: Option<FieldElement> = None;
            for _ in 0..small.order - 1 {
                let mut acc = FieldElement::ZERO;
                for &c in small.modulus.iter().rev() {
                    acc = big.add(big.mul(acc, y), FieldElement(c));
                }
                if acc.is_zero() && best.is_none_or(|b| y < b) {
                    best = Some(y);
                }
                y = big.mul(y, gamma);
            }
            best.expect("modulus splits in the extension")
        };
        let mut forward = Vec::with_capacity(small.order as usize);
        let mut back = HashMap::with_capacity(small.order as usize);
        for x in small.elements() {
            let image = if small.k == 1 {
                x
            } else {
                let mut acc = FieldElement::ZERO;
                for &d in small.digits(x).iter().rev() {
                    acc = big.add(big.mul(acc, root), FieldElement(d));
                }
                acc
            };
            forward.push(image);
            back.insert(image, x);
        }
        Ok(Embedding {
            small: small.clone(),
            big: big.clone(),
            forward,
            back,
        })
    }

    pub fn small(&self) -> &FieldRef {
        &self.small
    }

    pub fn big(&self) -> &FieldRef {
        &self.big
    }

    /// Degree of `big` over `small`.
    pub fn relative_degree(&self) -> u32 {
        self.big.k / self.small.k
    }

    pub fn embed(&self, x: FieldElement) -> FieldElement {
        self.forward[x.0 as usize]
    }

    /// Preimage of an element of the image, if it lies there.
    pub fn restrict(&self, y: FieldElement) -> Option<FieldElement> {
        self.back.get(&y).copied()
    }

    /// Relative trace Tr_{big/small}, returned in `small`.
    pub fn trace(&self, y: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut cur = y;
        for _ in 0..self.relative_degree() {
            acc = self.big.add(acc, cur);
            cur = self.big.frobenius(cur, self.small.k);
        }
        self.restrict(acc).expect("trace lands in the subfield")
    }
}

/// Tr_{big/sub}(x) for `x` in `big`.
pub fn trace(big: &FieldRef, x: FieldElement, sub: &FieldRef) -> Result<FieldElement> {
    Ok(Embedding::new(sub, big)?.trace(x))
}

/// A primitive m-th root of unity over a base field, in the smallest extension containing it.
#[derive(Clone, Debug)]
pub struct RootOfUnity {
    pub splitting: FieldRef,
    pub xi: FieldElement,
    pub embedding: Embedding,
    /// Degree of the splitting field over the base field.
    pub degree: u32,
}

/// Splitting field of x^m - 1 over `base` and the canonical primitive m-th root of unity.
pub fn root_of_unity(base: &FieldRef, m: usize) -> Result<RootOfUnity> {
    let q = base.order as u64;
    if m == 0 || util::gcd(m as u64, base.p as u64) != 1 {
        return Err(Error::CharacteristicDividesM { p: base.p, m });
    }
    let s = util::mult_order(q, m as u64) as u32;
    let total = base
        .k
        .checked_mul(s)
        .ok_or(Error::FieldTooLarge(u128::MAX))?;
    let splitting = make_field(base.p as u64, total)?;
    let g = splitting.primitive_element();
    let xi = splitting.pow(g, (splitting.order as u64 - 1) / m as u64);
    let embedding = Embedding::new(base, &splitting)?;
    Ok(RootOfUnity {
        splitting,
        xi,
        embedding,
        degree: s,
    })
}
