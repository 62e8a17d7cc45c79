//! Quasi-cyclic codes as submodules of R^ell, R = F_q[x]/(x^m - 1).
//!
//! With gcd(m, q) = 1 the ring R splits by the CRT into fields, one per
//! irreducible factor of x^m - 1, and a QC code splits into constituent codes
//! of length ell over those fields. Constituents are stored in the splitting
//! field of x^m - 1; the entries of the constituent at the factor with root
//! xi^e lie in the subfield F_q(xi^e).

use rand::Rng;
use serde::Serialize;

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{field_of_order, Embedding, FieldElement, FieldRef};
use crate::linalg::Row;
use crate::lincode::{Form, LinearCode};
use crate::poly::{factor_xm_minus_1, FactorProfile, Poly, Slot};
use crate::util;

/// The R-submodule of R^ell spanned by `gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcCode {
    base: FieldRef,
    m: usize,
    ell: usize,
    gens: Vec<Vec<Poly>>,
}

impl QcCode {
    /// Entries are reduced modulo x^m - 1.
    pub fn new(base: &FieldRef, m: usize, ell: usize, gens: Vec<Vec<Poly>>) -> Result<QcCode> {
        if m == 0 || ell == 0 {
            return Err(Error::ShapeMismatch(format!("m = {m}, ell = {ell}")));
        }
        let mut reduced = Vec::with_capacity(gens.len());
        for g in gens {
            if g.len() != ell {
                return Err(Error::ShapeMismatch(format!(
                    "generator has {} entries, expected {ell}",
                    g.len()
                )));
            }
            let mut row = Vec::with_capacity(ell);
            for a in g {
                if **a.field() != **base {
                    return Err(Error::FieldMismatch);
                }
                row.push(a.mod_xm_minus_1(m));
            }
            reduced.push(row);
        }
        Ok(QcCode {
            base: base.clone(),
            m,
            ell,
            gens: reduced,
        })
    }

    /// Random code with `r` generators whose entries have degree < m.
    pub fn random<R: Rng>(base: &FieldRef, m: usize, ell: usize, r: usize, rng: &mut R) -> QcCode {
        let gens = (0..r)
            .map(|_| {
                (0..ell)
                    .map(|_| {
                        let c = (0..m)
                            .map(|_| {
                                base.elem(rng.gen_range(0..base.order()) as u64)
                                    .expect("in range")
                            })
                            .collect();
                        Poly::new(base, c)
                    })
                    .collect()
            })
            .collect();
        QcCode::new(base, m, ell, gens).expect("well-shaped")
    }

    /// Reads a QC code off a linear code of length m*ell in blockwise layout.
    /// Each generator row becomes one generator tuple.
    pub fn from_linear(code: &LinearCode, m: usize) -> Result<QcCode> {
        if m == 0 || !code.len().is_multiple_of(m) {
            return Err(Error::ShapeMismatch(format!(
                "length {} is not a multiple of m = {m}",
                code.len()
            )));
        }
        let ell = code.len() / m;
        let f = code.field();
        let gens = code
            .generator()
            .iter()
            .map(|r| r.chunks(m).map(|b| Poly::new(f, b.to_vec())).collect())
            .collect();
        QcCode::new(f, m, ell, gens)
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn gens(&self) -> &[Vec<Poly>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.m * self.ell
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The F_q-linear code of length m*ell: all m shifts of every generator,
    /// block j holding the coefficients of the j-th entry.
    pub fn expand(&self) -> LinearCode {
        let (m, n) = (self.m, self.len());
        let mut rows = Vec::with_capacity(self.gens.len() * m);
        for g in &self.gens {
            for s in 0..m {
                let mut r = vec![FieldElement::ZERO; n];
                for (j, a) in g.iter().enumerate() {
                    for (i, &c) in a.coeffs().iter().enumerate() {
                        r[j * m + (i + s) % m] = c;
                    }
                }
                rows.push(r);
            }
        }
        LinearCode::from_rows(&self.base, n, rows).expect("rows of length m*ell")
    }

    fn profile(&self) -> Result<FactorProfile> {
        factor_xm_minus_1(&self.base, self.m)
    }

    pub fn constituents(&self) -> Result<ConstituentSet> {
        self.constituents_in(&self.profile()?)
    }

    /// Constituents with respect to an already computed factor profile.
    pub fn constituents_in(&self, profile: &FactorProfile) -> Result<ConstituentSet> {
        if profile.m != self.m || *profile.base != *self.base {
            return Err(Error::ShapeMismatch(
                "profile does not match the code".into(),
            ));
        }
        let emb = &profile.root.embedding;
        let big = profile.splitting();
        let mut parts = Vec::new();
        for slot in profile.slots() {
            let pt = profile.point(slot);
            let rows = self
                .gens
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|a| a.eval_in(emb, pt))
                        .collect::<Result<Row>>()
                })
                .collect::<Result<Vec<_>>>()?;
            parts.push(LinearCode::from_rows(big, self.ell, rows)?);
        }
        let set = ConstituentSet::new(profile, parts)?;
        Ok(set)
    }

    /// Constituents of the Euclidean dual, read off the constituents of C.
    pub fn dual_constituents(&self) -> Result<ConstituentSet> {
        self.constituents()?.dual()
    }

    /// Slotwise QCCD test, optionally checked against the hull of the expanded code.
    pub fn is_qccd(&self, oracle: bool) -> Result<QccdCertificate> {
        let set = self.constituents()?;
        let slots = set.slot_reports()?;
        let verdict = slots.iter().all(|s| s.hull_dim == 0);
        let expanded = self.expand();
        let oracle_hull_dim = oracle.then(|| expanded.hull_dim_twisted(0));
        Ok(QccdCertificate {
            verdict,
            n: expanded.len(),
            k: expanded.k(),
            slots,
            oracle_hull_dim,
            oracle_agreement: oracle_hull_dim.map(|h| (h == 0) == verdict),
        })
    }

    /// Jensen's lower bound on the minimum distance.
    pub fn jensen_bound(&self) -> Result<JensenBound> {
        let set = self.constituents()?;
        let profile = &set.profile;
        let mut outer = Vec::new();
        for (slot, part) in profile.slots().into_iter().zip(&set.parts) {
            if part.is_zero_code() {
                continue;
            }
            let d = part.min_distance_in_subfield(profile.subfield_degree(slot))?;
            outer.push((slot, d));
        }
        outer.sort_by_key(|&(_, d)| d);
        let xm1 = Poly::x_pow_minus_one(&self.base, self.m);
        let mut check = Poly::one(&self.base);
        let mut terms = Vec::with_capacity(outer.len());
        for &(slot, d) in &outer {
            check = check.mul(profile.factor(slot))?;
            let (g, _) = xm1.divmod(&check)?;
            let inner = CyclicCode::new(&self.base, self.m, &g)?
                .linear_code()
                .min_distance()?;
            terms.push(JensenTerm {
                label: profile.label(slot),
                outer_distance: d,
                inner_distance: inner,
            });
        }
        let bound = terms
            .iter()
            .map(|t| t.outer_distance * t.inner_distance)
            .min()
            .unwrap_or(0);
        Ok(JensenBound { bound, terms })
    }

    /// Text format: `q m ell r`, then r lines of ell coefficient lists
    /// separated by `|`.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {} {}\n",
            self.base.order(),
            self.m,
            self.ell,
            self.gens.len()
        );
        for g in &self.gens {
            let entries: Vec<String> = g
                .iter()
                .map(|a| {
                    if a.is_zero() {
                        "0".to_string()
                    } else {
                        a.to_coeff_string()
                    }
                })
                .collect();
            out.push_str(&entries.join(" | "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<QcCode> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty QC file".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header '{header}'")))
            })
            .collect::<Result<_>>()?;
        let [q, m, ell, r] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be 'q m ell r', got '{header}'"
            )));
        };
        let base = field_of_order(q)?;
        let gens = lines
            .map(|l| {
                l.split('|')
                    .map(|e| Poly::parse(&base, e))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if gens.len() != r as usize {
            return Err(Error::Parse(format!(
                "expected {r} generators, found {}",
                gens.len()
            )));
        }
        QcCode::new(&base, m as usize, ell as usize, gens)
    }
}

/// Constituent codes in the slot order of the profile.
#[derive(Clone, Debug)]
pub struct ConstituentSet {
    pub profile: FactorProfile,
    pub parts: Vec<LinearCode>,
}

/// One line of a QCCD certificate. For a self-reciprocal slot `hull_dim` is
/// the Hermitian hull dimension of C_i; for the first (second) side of a pair
/// it is dim(C' ∩ C''^⊥) (dim(C'' ∩ C'^⊥)).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SlotReport {
    pub label: String,
    pub factor: Poly,
    pub dim: usize,
    pub hull_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct QccdCertificate {
    pub verdict: bool,
    pub n: usize,
    pub k: usize,
    pub slots: Vec<SlotReport>,
    pub oracle_hull_dim: Option<usize>,
    pub oracle_agreement: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JensenTerm {
    pub label: String,
    pub outer_distance: usize,
    /// Distance of the cyclic code summing the inner codes up to this term.
    pub inner_distance: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct JensenBound {
    pub bound: usize,
    pub terms: Vec<JensenTerm>,
}

/// Serializable view of one constituent.
#[derive(Clone, Debug, Serialize)]
pub struct ConstituentInfo {
    pub label: String,
    pub factor: Poly,
    pub exponent: usize,
    pub field_order: u64,
    pub dim: usize,
    pub generator: Vec<Vec<u32>>,
}

impl ConstituentSet {
    /// Checks shapes and subfield membership.
    pub fn new(profile: &FactorProfile, parts: Vec<LinearCode>) -> Result<ConstituentSet> {
        let slots = profile.slots();
        if parts.len() != slots.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} parts for {} slots",
                parts.len(),
                slots.len()
            )));
        }
        let big = profile.splitting();
        let ell = parts[0].len();
        for (slot, part) in slots.iter().zip(&parts) {
            if **part.field() != **big || part.len() != ell {
                return Err(Error::ShapeMismatch(format!(
                    "part {} must have length {ell} over GF({})",
                    profile.label(*slot),
                    big.order()
                )));
            }
            let d = profile.subfield_degree(*slot);
            if !part
                .generator()
                .iter()
                .flatten()
                .all(|&x| big.in_subfield(x, d))
            {
                return Err(Error::SubfieldViolation(profile.label(*slot)));
            }
        }
        Ok(ConstituentSet {
            profile: profile.clone(),
            parts,
        })
    }

    pub fn ell(&self) -> usize {
        self.parts[0].len()
    }

    pub fn part(&self, slot: Slot) -> &LinearCode {
        let i = self
            .profile
            .slots()
            .iter()
            .position(|&s| s == slot)
            .expect("slot of this profile");
        &self.parts[i]
    }

    /// Σ deg(factor) * dim over all slots.
    pub fn base_dimension(&self) -> usize {
        self.profile
            .slots()
            .into_iter()
            .zip(&self.parts)
            .map(|(s, p)| self.profile.slot_degree(s) * p.k())
            .sum()
    }

    /// Hermitian duals on self-reciprocal slots, crossed Euclidean duals on pairs.
    pub fn dual(&self) -> Result<ConstituentSet> {
        let profile = &self.profile;
        let parts = profile
            .slots()
            .into_iter()
            .map(|slot| match slot {
                Slot::SelfRecip(i) => self
                    .part(slot)
                    .frobenius_image(profile.conjugation_power(i))
                    .dual(),
                Slot::PairFirst(j) => self.part(Slot::PairSecond(j)).dual(),
                Slot::PairSecond(j) => self.part(Slot::PairFirst(j)).dual(),
            })
            .collect();
        ConstituentSet::new(profile, parts)
    }

    pub fn slot_reports(&self) -> Result<Vec<SlotReport>> {
        let profile = &self.profile;
        profile
            .slots()
            .into_iter()
            .map(|slot| {
                let part = self.part(slot);
                let hull_dim = match slot {
                    Slot::SelfRecip(i) => part.hull_dim_twisted(profile.conjugation_power(i)),
                    Slot::PairFirst(j) => {
                        part.intersect(&self.part(Slot::PairSecond(j)).dual())?.k()
                    }
                    Slot::PairSecond(j) => {
                        part.intersect(&self.part(Slot::PairFirst(j)).dual())?.k()
                    }
                };
                Ok(SlotReport {
                    label: profile.label(slot),
                    factor: profile.factor(slot).clone(),
                    dim: part.k(),
                    hull_dim,
                })
            })
            .collect()
    }

    pub fn info(&self) -> Vec<ConstituentInfo> {
        let p = self.profile.base.characteristic() as u64;
        self.profile
            .slots()
            .into_iter()
            .zip(&self.parts)
            .map(|(slot, part)| ConstituentInfo {
                label: self.profile.label(slot),
                factor: self.profile.factor(slot).clone(),
                exponent: self.profile.exponent(slot),
                field_order: p.pow(self.profile.subfield_degree(slot)),
                dim: part.k(),
                generator: part
                    .generator()
                    .iter()
                    .map(|r| r.iter().map(|x| x.value()).collect())
                    .collect(),
            })
            .collect()
    }

    /// Inverse CRT: one generator tuple per basis vector of every part.
    pub fn assemble(&self) -> Result<QcCode> {
        let profile = &self.profile;
        let base = &profile.base;
        let big = profile.splitting();
        let emb = &profile.root.embedding;
        let m = profile.m;
        let k = base.degree();
        let xm1 = Poly::x_pow_minus_one(base, m);
        let mut gens = Vec::new();
        for slot in profile.slots() {
            let part = self.part(slot);
            if part.is_zero_code() {
                continue;
            }
            let f = profile.factor(slot);
            let d = profile.slot_degree(slot);
            let (cofactor, _) = xm1.divmod(f)?;
            let (_, s, _) = cofactor.xgcd(f)?;
            let idempotent = s.mul_mod(&cofactor, m)?;
            let alpha = profile.point(slot);
            let roots: Vec<FieldElement> =
                (0..d).map(|j| big.frobenius(alpha, k * j as u32)).collect();
            let lagrange = lagrange_basis(big, &roots)?;
            for row in part.generator() {
                let mut tuple = Vec::with_capacity(row.len());
                for &z in row {
                    let mut c = Poly::zero(big);
                    for (j, l) in lagrange.iter().enumerate() {
                        c = c.add(&l.scale(big.frobenius(z, k * j as u32)))?;
                    }
                    let c = c
                        .restrict(emb)
                        .ok_or_else(|| Error::SubfieldViolation(profile.label(slot)))?;
                    tuple.push(c.mul_mod(&idempotent, m)?);
                }
                gens.push(tuple);
            }
        }
        QcCode::new(base, m, self.ell(), gens)
    }
}

fn lagrange_basis(f: &FieldRef, roots: &[FieldElement]) -> Result<Vec<Poly>> {
    roots
        .iter()
        .enumerate()
        .map(|(j, &rj)| {
            let mut l = Poly::one(f);
            let mut denom = FieldElement::ONE;
            for (i, &ri) in roots.iter().enumerate() {
                if i != j {
                    l = l.mul(&Poly::new(f, vec![f.neg(ri), FieldElement::ONE]))?;
                    denom = f.mul(denom, f.sub(rj, ri));
                }
            }
            Ok(l.scale(f.inv(denom)?))
        })
        .collect()
}

/// QC code whose constituents are `parts` (slot order of `profile`).
pub fn from_constituents(profile: &FactorProfile, parts: Vec<LinearCode>) -> Result<QcCode> {
    ConstituentSet::new(profile, parts)?.assemble()
}

/// Image of `code` in the subfield of the splitting field attached to `slot`.
fn embed_into_slot(profile: &FactorProfile, slot: Slot, code: &LinearCode) -> Result<LinearCode> {
    let want = (profile.base.order() as u64).pow(profile.slot_degree(slot) as u32);
    let f = code.field();
    if f.order() as u64 != want || f.characteristic() != profile.base.characteristic() {
        return Err(Error::ShapeMismatch(format!(
            "slot {} needs a code over GF({want}), got GF({})",
            profile.label(slot),
            f.order()
        )));
    }
    let emb = Embedding::new(f, profile.splitting())?;
    let rows = code
        .generator()
        .iter()
        .map(|r| r.iter().map(|&x| emb.embed(x)).collect())
        .collect();
    LinearCode::from_rows(profile.splitting(), code.len(), rows)
}

fn zero_parts(profile: &FactorProfile, ell: usize) -> Vec<LinearCode> {
    vec![LinearCode::zero(profile.splitting(), ell); profile.slots().len()]
}

/// `code` placed in both sides of pair `j`, zero elsewhere.
pub fn build_pair_double(profile: &FactorProfile, j: usize, code: &LinearCode) -> Result<QcCode> {
    if j >= profile.t() {
        return Err(Error::SlotNotAPair(j));
    }
    if !code.is_zero_code() && !code.is_lcd(Form::Euclidean)? {
        return Err(Error::NotLcd);
    }
    let image = embed_into_slot(profile, Slot::PairFirst(j), code)?;
    let slots = profile.slots();
    let mut parts = zero_parts(profile, code.len());
    for (i, s) in slots.iter().enumerate() {
        if *s == Slot::PairFirst(j) || *s == Slot::PairSecond(j) {
            parts[i] = image.clone();
        }
    }
    from_constituents(profile, parts)
}

/// `code` placed in self-reciprocal slot `i` of even degree, zero elsewhere.
pub fn build_self_single(profile: &FactorProfile, i: usize, code: &LinearCode) -> Result<QcCode> {
    if i >= profile.s() || !profile.self_recip[i].degree().is_multiple_of(2) {
        return Err(Error::SlotNotSelfReciprocal(i));
    }
    if !code.is_zero_code() && !code.is_lcd(Form::Hermitian)? {
        return Err(Error::NotLcd);
    }
    let image = embed_into_slot(profile, Slot::SelfRecip(i), code)?;
    let mut parts = zero_parts(profile, code.len());
    parts[i] = image;
    from_constituents(profile, parts)
}

/// Assembles a 2D cyclic code from cyclic constituents (slot order of
/// `profile`) and reports whether the expanded code is LCD.
pub fn twod_cyclic_lcd(profile: &FactorProfile, parts: &[CyclicCode]) -> Result<(QcCode, bool)> {
    let slots = profile.slots();
    if parts.len() != slots.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} parts for {} slots",
            parts.len(),
            slots.len()
        )));
    }
    let ell = parts[0].len();
    let p = profile.base.characteristic() as u64;
    if util::gcd(ell as u64, p) != 1 {
        return Err(Error::PreconditionViolation(format!(
            "ell = {ell} is divisible by the characteristic"
        )));
    }
    let mut codes = Vec::with_capacity(parts.len());
    for (slot, part) in slots.iter().zip(parts) {
        let label = profile.label(*slot);
        if part.len() != ell {
            return Err(Error::PreconditionViolation(format!(
                "{label} has length {}",
                part.len()
            )));
        }
        match *slot {
            Slot::SelfRecip(_) => {
                let f = part.field();
                let j = if profile.slot_degree(*slot).is_multiple_of(2) {
                    f.degree() / 2
                } else {
                    0
                };
                if !part.reversible_with_power(j)? {
                    return Err(Error::PreconditionViolation(format!(
                        "{label} is not conjugate-reversible"
                    )));
                }
            }
            Slot::PairFirst(j) => {
                let other = &parts[slots
                    .iter()
                    .position(|&s| s == Slot::PairSecond(j))
                    .unwrap()];
                if part.generator_poly() != other.generator_poly() {
                    return Err(Error::PreconditionViolation(format!(
                        "{label} and its partner differ"
                    )));
                }
                if !part.is_reversible()? {
                    return Err(Error::PreconditionViolation(format!(
                        "{label} is not reversible"
                    )));
                }
            }
            Slot::PairSecond(_) => {}
        }
        codes.push(embed_into_slot(profile, *slot, &part.linear_code())?);
    }
    let code = from_constituents(profile, codes)?;
    let lcd = code.expand().hull_dim_twisted(0) == 0;
    Ok((code, lcd))
}
