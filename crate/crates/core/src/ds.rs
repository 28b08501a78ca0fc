//! Symbolic Duflo–Serganova functors `DS` and `DS_σ` with their Z-grading.
//!
//! `DS` uses the odd element `E_{m,m+1}` and kills AntiKac-filtered modules;
//! `DS_σ` uses `E_{m+1,m}` and kills Kac-filtered modules. The degree of a
//! cohomology class is the eigenvalue exponent of the torus
//! `(1, ..., 1, t^{-1})`, i.e. minus the last weight coordinate. A simple
//! module `L(v)` lands in degree `a_B(v)` with parity `a_B(v)` mod 2.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl_tensor::{tensor_rational, weyl_dim, RationalWeight};
use crate::indecomposables::{IndecompLabel, Kind};

/// Key of a graded piece: degree, Gl(m-1) highest weight, parity.
pub type PieceKey = (i64, RationalWeight, u8);

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedGlObject {
    pub pieces: BTreeMap<PieceKey, u64>,
}

impl GradedGlObject {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(degree: i64, core: RationalWeight, parity: u8, mult: u64) -> Self {
        let mut g = Self::zero();
        g.add(degree, core, parity, mult);
        g
    }

    /// The unit object: trivial Gl(k)-module in degree 0.
    pub fn unit(k: usize) -> Self {
        Self::single(0, RationalWeight::zero(k), 0, 1)
    }

    pub fn add(&mut self, degree: i64, core: RationalWeight, parity: u8, mult: u64) {
        if mult > 0 {
            *self.pieces.entry((degree, core, parity & 1)).or_insert(0) += mult;
        }
    }

    pub fn merge(&mut self, other: &GradedGlObject) {
        for ((d, c, p), &n) in &other.pieces {
            self.add(*d, c.clone(), *p, n);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn scaled(&self, k: u64) -> Self {
        GradedGlObject {
            pieces: self
                .pieces
                .iter()
                .filter(|_| k > 0)
                .map(|(key, &n)| (key.clone(), n * k))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.pieces.keys().map(|(d, _, _)| *d).collect();
        ds.dedup();
        ds
    }

    /// `Σ (-1)^parity · mult · dim`.
    pub fn signed_dimension(&self) -> BigInt {
        self.pieces
            .iter()
            .map(|((_, c, p), &n)| {
                let d = BigInt::from(weyl_dim(c)) * BigInt::from(n);
                if *p == 1 {
                    -d
                } else {
                    d
                }
            })
            .sum()
    }
}

impl Serialize for GradedGlObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(i64, &RationalWeight, u8, u64)> =
            self.pieces.iter().map(|((d, c, p), &n)| (*d, c, *p, n)).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedGlObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<(i64, RationalWeight, u8, u64)> = Vec::deserialize(d)?;
        let mut g = GradedGlObject::zero();
        for (deg, c, p, n) in rows {
            g.add(deg, c, p, n);
        }
        Ok(g)
    }
}

fn piece_at(x: &IndecompLabel, v: i64) -> GradedGlObject {
    let idx = x.block.index_of(v);
    GradedGlObject::single(idx, x.block.core(), (idx + x.parity as i64).rem_euclid(2) as u8, 1)
}

fn ends(x: &IndecompLabel) -> GradedGlObject {
    let (lo, hi) = x.interval();
    let mut g = piece_at(x, lo);
    g.merge(&piece_at(x, hi));
    g
}

/// Whether an even-length zigzag is filtered by Kac modules (top at `hi`).
fn kac_type(kind: Kind) -> bool {
    matches!(kind, Kind::Kac(_) | Kind::Roof(..))
}

pub fn ds_of(x: &IndecompLabel) -> GradedGlObject {
    let (lo, hi) = x.interval();
    match x.kind {
        Kind::Irr(v) => piece_at(x, v),
        Kind::Proj(_) => GradedGlObject::zero(),
        _ if x.length() % 2 == 1 => match x.kind {
            Kind::Roof(..) => piece_at(x, hi),
            _ => piece_at(x, lo),
        },
        k if kac_type(k) => ends(x),
        _ => GradedGlObject::zero(),
    }
}

pub fn ds_sigma_of(x: &IndecompLabel) -> GradedGlObject {
    let (lo, hi) = x.interval();
    match x.kind {
        Kind::Irr(v) => piece_at(x, v),
        Kind::Proj(_) => GradedGlObject::zero(),
        _ if x.length() % 2 == 1 => match x.kind {
            Kind::Roof(..) => piece_at(x, lo),
            _ => piece_at(x, hi),
        },
        k if kac_type(k) => GradedGlObject::zero(),
        _ => ends(x),
    }
}

/// Künneth product: degrees and parities add, cores multiply.
pub fn graded_tensor(a: &GradedGlObject, b: &GradedGlObject) -> Result<GradedGlObject> {
    let mut out = GradedGlObject::zero();
    for ((d1, c1, p1), &n1) in &a.pieces {
        for ((d2, c2, p2), &n2) in &b.pieces {
            if c1.rank() != c2.rank() {
                return Err(Error::RankMismatch(c1.rank(), c2.rank()));
            }
            for (nu, c) in tensor_rational(c1, c2)? {
                out.add(d1 + d2, nu, p1 ^ p2, n1 * n2 * c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indecomposables::{superdimension, BlockId};
    use crate::weights::Weight;

    fn rw(p: &[i64]) -> RationalWeight {
        RationalWeight::new(p.to_vec()).unwrap()
    }

    fn label(cs: &[i64], kind: Kind) -> IndecompLabel {
        IndecompLabel::new(BlockId::new(cs.to_vec()).unwrap(), kind, 0).unwrap()
    }

    #[test]
    fn unit_and_berezin() {
        let one = IndecompLabel::irr(&Weight::zero(2)).unwrap();
        assert_eq!(ds_of(&one), GradedGlObject::unit(1));
        let ber = IndecompLabel::irr(&Weight::berezin(2)).unwrap();
        assert_eq!(ds_of(&ber), GradedGlObject::single(1, rw(&[1]), 1, 1));
        assert_eq!(ds_sigma_of(&ber), ds_of(&ber));
    }

    #[test]
    fn kernels() {
        let kac = label(&[0], Kind::Kac(-1));
        let anti = label(&[0], Kind::AntiKac(-1));
        assert!(ds_of(&anti).is_zero());
        assert!(ds_sigma_of(&kac).is_zero());
        assert_eq!(ds_of(&kac).pieces.len(), 2);
        assert_eq!(ds_of(&kac).signed_dimension(), BigInt::from(0));
        assert!(ds_of(&label(&[0], Kind::Proj(-1))).is_zero());
        assert!(ds_sigma_of(&label(&[0], Kind::Proj(-1))).is_zero());
    }

    #[test]
    fn roof_endpoints() {
        let r = label(&[0], Kind::Roof(-3, 2));
        assert_eq!(ds_of(&r), ds_of(&label(&[0], Kind::Irr(2))));
        assert_eq!(ds_sigma_of(&r), ds_sigma_of(&label(&[0], Kind::Irr(-3))));
        let b = label(&[0], Kind::Bottom(-3, 2));
        assert_eq!(ds_of(&b), ds_of(&label(&[0], Kind::Irr(-3))));
        assert_eq!(ds_sigma_of(&b), ds_sigma_of(&label(&[0], Kind::Irr(2))));
    }

    #[test]
    fn signed_dimension_matches_superdimension() {
        for cs in [vec![0], vec![-2, 3], vec![-1, 0, 4]] {
            for kind in [Kind::Irr(1), Kind::Roof(-4, 1), Kind::Bottom(-4, 2), Kind::Kac(2), Kind::Roof(-5, 2)] {
                let x = label(&cs, kind);
                for p in 0..2 {
                    let x = x.with_parity(p);
                    assert_eq!(ds_of(&x).signed_dimension(), superdimension(&x), "{x}");
                    assert_eq!(ds_sigma_of(&x).signed_dimension(), superdimension(&x), "{x}");
                }
            }
        }
    }

    #[test]
    fn tensor_bookkeeping() {
        let a = GradedGlObject::single(2, rw(&[1, 0]), 1, 1);
        assert_eq!(graded_tensor(&a, &GradedGlObject::unit(2)).unwrap(), a);
        let b = GradedGlObject::single(-5, rw(&[1, 0]), 1, 2);
        let ab = graded_tensor(&a, &b).unwrap();
        assert_eq!(ab.degrees(), vec![-3]);
        assert_eq!(ab.pieces.get(&(-3, rw(&[2, 0]), 0)), Some(&2));
        assert_eq!(ab.pieces.get(&(-3, rw(&[1, 1]), 0)), Some(&2));
    }

    #[test]
    fn json_form() {
        let g = GradedGlObject::single(1, rw(&[1]), 1, 1);
        assert_eq!(serde_json::to_string(&g).unwrap(), "[[1,[1],1,1]]");
    }
}
