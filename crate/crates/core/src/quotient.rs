//! The semisimple quotient `Rep(Gl(m|1)) / N` and its equivalence with
//! `Rep(Gl(m-1) × Gl(1) × Gl(1)) ⊗ svec`.
//!
//! A non-negligible indecomposable `X` is determined by its block core and
//! by the pair of degrees `(D, S)` in which `DS(X)` and `DS_σ(X)` live.
//! `D ≡ S (mod 2)` and the equivalence sends `X` to the triple
//! `d = (D - S) / 2`, `b = (D + S) / 2`, `core = core(X) - b`,
//! `parity = parity(X) + D`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl_tensor::{bipartition_of, tensor_rational, Bipartition, RationalWeight};
use crate::indecomposables::{berezin_charge, superdimension, BlockId, IndecompLabel, Kind};
use crate::weights::Weight;

/// An indecomposable summand as produced by decomposing an explicit module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Summand {
    Atypical(IndecompLabel),
    /// A typical simple module (projective), possibly parity shifted.
    Typical { weight: Weight, parity: u8 },
}

impl Summand {
    pub fn is_negligible(&self) -> bool {
        match self {
            Summand::Atypical(x) => is_negligible(x),
            Summand::Typical { .. } => true,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Atypical(x) => write!(f, "{x}"),
            Summand::Typical { weight, parity } => {
                write!(f, "typical {weight}{}", if *parity == 1 { " Π" } else { "" })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FormalObject {
    pub summands: BTreeMap<Summand, u64>,
}

impl FormalObject {
    pub fn add(&mut self, s: Summand, mult: u64) {
        if mult > 0 {
            *self.summands.entry(s).or_insert(0) += mult;
        }
    }
}

/// A direct sum of simple objects of the quotient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuotientObject {
    pub summands: BTreeMap<IndecompLabel, u64>,
}

impl QuotientObject {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(x: IndecompLabel) -> Result<Self> {
        if is_negligible(&x) {
            return Err(Error::Negligible);
        }
        let mut q = Self::zero();
        q.summands.insert(x, 1);
        Ok(q)
    }

    pub fn unit(m: usize) -> Self {
        Self::simple(IndecompLabel::irr(&Weight::zero(m)).expect("trivial weight is atypical"))
            .expect("unit is not negligible")
    }

    pub fn add(&mut self, x: IndecompLabel, mult: u64) {
        if mult > 0 {
            *self.summands.entry(x).or_insert(0) += mult;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn m(&self) -> Option<usize> {
        self.summands.keys().next().map(|x| x.m())
    }

    pub fn superdimension(&self) -> BigInt {
        self.summands
            .iter()
            .map(|(x, &n)| superdimension(x) * BigInt::from(n))
            .sum()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.summands.values().sum()
    }
}

impl Serialize for QuotientObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(&IndecompLabel, u64)> = self.summands.iter().map(|(x, &n)| (x, n)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuotientObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<(IndecompLabel, u64)> = Vec::deserialize(d)?;
        let mut q = QuotientObject::zero();
        for (x, n) in rows {
            if is_negligible(&x) {
                return Err(serde::de::Error::custom(format!("{x} is negligible")));
            }
            q.add(x, n);
        }
        Ok(q)
    }
}

/// Irreducible of `Rep(Gl(m-1) × Gl(1) × Gl(1)) ⊗ svec`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub d: i64,
    pub b: i64,
    pub core: RationalWeight,
    pub parity: u8,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{} ⊗ t^{} ⊗ L{}{}", self.d, self.b, self.core, if self.parity == 1 { " Π" } else { "" })
    }
}

/// Image in the Sl(m|1) quotient, where the Berezinian becomes trivial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlTriple {
    pub d: i64,
    pub core: RationalWeight,
}

impl Triple {
    pub fn to_sl(&self) -> SlTriple {
        SlTriple {
            d: self.d,
            core: self.core.clone(),
        }
    }
}

pub fn is_negligible(x: &IndecompLabel) -> bool {
    superdimension(x) == BigInt::from(0)
}

pub fn omega(x: &FormalObject) -> QuotientObject {
    let mut q = QuotientObject::zero();
    for (s, &n) in &x.summands {
        if let Summand::Atypical(label) = s {
            if !is_negligible(label) {
                q.add(label.clone(), n);
            }
        }
    }
    q
}

/// Drops negligible labels from a multiset of labels.
pub fn omega_labels<'a, I: IntoIterator<Item = (&'a IndecompLabel, &'a u64)>>(it: I) -> QuotientObject {
    let mut q = QuotientObject::zero();
    for (x, &n) in it {
        if !is_negligible(x) {
            q.add(x.clone(), n);
        }
    }
    q
}

/// `L(w) ≅ Ber^{a_B} ⊗ R(bp)`.
pub fn mixed_tensor_data(w: &Weight) -> Result<(i64, Bipartition)> {
    let a_b = berezin_charge(w)?;
    let core = w.core()?.shift(-a_b);
    Ok((a_b, bipartition_of(&core).0))
}

/// Highest weight of `Ber^{a_b} ⊗ R(bp)` for Gl(m|1).
pub fn weight_of_mixed_data(m: usize, a_b: i64, bp: &Bipartition) -> Result<Weight> {
    let wt = crate::gl_tensor::wt_of_bipartition(m, bp)?;
    let block = BlockId::from_core(&wt.shift(a_b));
    Ok(block.weight_at(block.position_of(a_b)))
}

/// Degrees `(D, S)` of `DS(x)` and `DS_σ(x)` for a non-negligible label.
pub fn ds_degrees(x: &IndecompLabel) -> Result<(i64, i64)> {
    if is_negligible(x) {
        return Err(Error::Negligible);
    }
    let idx = |v| x.block.index_of(v);
    Ok(match x.kind {
        Kind::Irr(v) => (idx(v), idx(v)),
        Kind::Roof(lo, hi) => (idx(hi), idx(lo)),
        Kind::Bottom(lo, hi) => (idx(lo), idx(hi)),
        _ => unreachable!("non-negligible labels are odd zigzags"),
    })
}

/// The label with block core `core`, DS degree `big_d`, DS_σ degree `s`.
fn label_from_degrees(core: &RationalWeight, big_d: i64, s: i64, parity: u8) -> IndecompLabel {
    let block = BlockId::from_core(core);
    let lo = block.position_of(big_d.min(s));
    let hi = block.position_of(big_d.max(s));
    let kind = match big_d.cmp(&s) {
        std::cmp::Ordering::Equal => Kind::Irr(lo),
        std::cmp::Ordering::Greater => Kind::Roof(lo, hi),
        std::cmp::Ordering::Less => Kind::Bottom(lo, hi),
    };
    IndecompLabel::new(block, kind, parity).expect("positions are free")
}

pub fn rho(x: &IndecompLabel) -> Result<Triple> {
    let (big_d, s) = ds_degrees(x)?;
    let b = (big_d + s) / 2;
    Ok(Triple {
        d: (big_d - s) / 2,
        b,
        core: x.block.core().shift(-b),
        parity: (x.parity as i64 + big_d).rem_euclid(2) as u8,
    })
}

pub fn rho_inverse(t: &Triple) -> IndecompLabel {
    let big_d = t.b + t.d;
    let s = t.b - t.d;
    let parity = (t.parity as i64 - big_d).rem_euclid(2) as u8;
    label_from_degrees(&t.core.shift(t.b), big_d, s, parity)
}

/// Parity shift making the superdimension positive.
pub fn normalize_parity(x: &IndecompLabel) -> IndecompLabel {
    match rho(x) {
        Ok(t) if t.parity == 1 => x.with_parity(x.parity ^ 1),
        _ => x.clone(),
    }
}

fn check_ranks(x: &QuotientObject, y: &QuotientObject) -> Result<()> {
    match (x.m(), y.m()) {
        (Some(a), Some(b)) if a != b => Err(Error::RankMismatch(a, b)),
        _ => Ok(()),
    }
}

/// Tensor product computed in the target category and pulled back.
pub fn tensor_quotient(x: &QuotientObject, y: &QuotientObject) -> Result<QuotientObject> {
    check_ranks(x, y)?;
    let mut out = QuotientObject::zero();
    for (a, &na) in &x.summands {
        let ta = rho(a)?;
        for (b, &nb) in &y.summands {
            let tb = rho(b)?;
            for (nu, c) in tensor_rational(&ta.core, &tb.core)? {
                let t = Triple {
                    d: ta.d + tb.d,
                    b: ta.b + tb.b,
                    core: nu,
                    parity: ta.parity ^ tb.parity,
                };
                out.add(rho_inverse(&t), na * nb * c);
            }
        }
    }
    Ok(out)
}

/// Anchor, length and shape of an odd zigzag in the bottom/roof notation:
/// the anchor is the Berezin charge of the endpoint seen by `DS`.
fn zigzag_shape(x: &IndecompLabel) -> (i64, i64, bool) {
    let (lo, hi) = x.interval();
    let len = x.length() as i64;
    match x.kind {
        Kind::Roof(..) => (x.block.index_of(hi), len, true),
        _ => (x.block.index_of(lo), len, false),
    }
}

/// Tensor product by the explicit bottom/roof rules.
pub fn tensor_direct(x: &QuotientObject, y: &QuotientObject) -> Result<QuotientObject> {
    check_ranks(x, y)?;
    let mut out = QuotientObject::zero();
    for (a, &na) in &x.summands {
        for (c, &nc) in &y.summands {
            if is_negligible(a) || is_negligible(c) {
                return Err(Error::Negligible);
            }
            let (a1, s, roof_a) = zigzag_shape(a);
            let (c1, t, roof_c) = zigzag_shape(c);
            let anchor = a1 + c1;
            // (lo, hi) as Berezin charges
            let (lo, hi, roof) = match (roof_a, roof_c) {
                (false, false) => {
                    let delta = (s - 1) + (t - 1);
                    (anchor, anchor + delta, false)
                }
                (true, true) => {
                    let delta = (s - 1) + (t - 1);
                    (anchor - delta, anchor, true)
                }
                (false, true) | (true, false) => {
                    // bottom of length s against roof of length t
                    let (s, t) = if roof_a { (t, s) } else { (s, t) };
                    let delta = (s - 1) - (t - 1);
                    if delta >= 0 {
                        (anchor, anchor + delta, false)
                    } else {
                        (anchor + delta, anchor, true)
                    }
                }
            };
            let parity = a.parity ^ c.parity;
            for (nu, mult) in tensor_rational(&a.block.core(), &c.block.core())? {
                let block = BlockId::from_core(&nu);
                let (plo, phi) = (block.position_of(lo), block.position_of(hi));
                let kind = if roof { Kind::Roof(plo, phi) } else { Kind::Bottom(plo, phi) };
                out.add(IndecompLabel::new(block, kind, parity)?, na * nc * mult);
            }
        }
    }
    Ok(out)
}

/// Zigzag names of the simple objects for Sl(2|1): `Z^{2p+1}(j)` and
/// `Z̄^{2p+1}(j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sl21Zigzag {
    pub bar: bool,
    pub p: u32,
    pub j: i64,
}

impl Sl21Zigzag {
    pub fn z(p: u32, j: i64) -> Self {
        Sl21Zigzag { bar: false, p, j }
    }

    pub fn zbar(p: u32, j: i64) -> Self {
        Sl21Zigzag { bar: true, p, j }
    }

    /// `Z^1(j)` and `Z̄^1(j)` coincide; prefer the unbarred name.
    pub fn canonical(self) -> Self {
        if self.p == 0 {
            Sl21Zigzag { bar: false, ..self }
        } else {
            self
        }
    }

    /// Gl(1) × Gl(1) charges `(p, p - j)` resp. `(-p, -j)`.
    pub fn charges(self) -> (i64, i64) {
        let p = self.p as i64;
        if self.bar {
            (-p, -self.j)
        } else {
            (p, p - self.j)
        }
    }

    pub fn from_charges(d: i64, w: i64) -> Self {
        if d >= 0 {
            Sl21Zigzag::z(d as u32, d - w)
        } else {
            Sl21Zigzag::zbar((-d) as u32, -w)
        }
    }

    /// A Gl(2|1) module restricting to this Sl(2|1) zigzag, with positive
    /// superdimension and Berezin charge 0.
    pub fn representative(self) -> IndecompLabel {
        let (d, w) = self.charges();
        rho_inverse(&Triple {
            d,
            b: 0,
            core: RationalWeight { parts: vec![w] },
            parity: 0,
        })
    }

    pub fn of_label(x: &IndecompLabel) -> Result<Self> {
        if x.m() != 2 {
            return Err(Error::RankMismatch(x.m(), 2));
        }
        let t = rho(x)?;
        Ok(Self::from_charges(t.d, t.core.parts[0]))
    }
}

impl fmt::Display for Sl21Zigzag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.bar { "Zbar" } else { "Z" };
        write!(f, "{name}^{}({})", 2 * self.p + 1, self.j)
    }
}

/// The four published Sl(2|1) product rules.
pub fn sl21_rule(x: Sl21Zigzag, y: Sl21Zigzag) -> Sl21Zigzag {
    let (p1, p2) = (x.p as i64, y.p as i64);
    let out = match (x.bar, y.bar) {
        (false, false) => Sl21Zigzag::z((p1 + p2) as u32, x.j + y.j),
        (true, true) => Sl21Zigzag::zbar((p1 + p2) as u32, x.j + y.j),
        (false, true) | (true, false) => {
            let (z, zb) = if x.bar { (y, x) } else { (x, y) };
            let (p1, p2) = (z.p as i64, zb.p as i64);
            if p1 <= p2 {
                Sl21Zigzag::zbar((p2 - p1) as u32, z.j + zb.j - p1)
            } else {
                Sl21Zigzag::z((p1 - p2) as u32, z.j + zb.j - p2)
            }
        }
    };
    out.canonical()
}
