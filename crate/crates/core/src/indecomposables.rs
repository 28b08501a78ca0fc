//! Atypical blocks of Gl(m|1) and their indecomposable modules.
//!
//! A block is fixed by its `m - 1` crosses; the simple modules of the block
//! are indexed by the free positions of the vee. Free positions are also
//! numbered consecutively by the Berezin charge `a_B(v) = v + 1 - #{x < v}`,
//! which increases by one per free step and vanishes on the unique mixed
//! tensor of the block.
//!
//! Module structure conventions (all oracle-checked at m = 2):
//! * `T^-` moves the vee one free position to the left, `T^+` to the right;
//!   `K(v)` has top `L(v)` and socle `L(T^- v)`, `K'(v)` has socle `L(T^+ v)`.
//! * `Roof(lo, hi)` is the zigzag whose top contains `L(hi)`; for odd
//!   length both endpoints are in the top. A length-two roof is `Kac(hi)`.
//! * `Bottom(lo, hi)` is the zigzag whose socle contains `L(hi)`; for odd
//!   length both endpoints are in the socle. A length-two bottom is
//!   `AntiKac(lo)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl_tensor::{weyl_dim, RationalWeight};
use crate::weights::{core_of_crosses, weight_from_diagram, Mark, Weight, WeightDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockId {
    pub crosses: Vec<i64>,
}

impl BlockId {
    pub fn new(mut crosses: Vec<i64>) -> Result<Self> {
        crosses.sort_unstable();
        if crosses.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidLabel(format!("repeated cross in {crosses:?}")));
        }
        Ok(BlockId { crosses })
    }

    /// The block whose crosses encode the Gl(m-1) weight `core`.
    pub fn from_core(core: &RationalWeight) -> Self {
        BlockId {
            crosses: crate::weights::crosses_of_core(core),
        }
    }

    /// `m` of the ambient Gl(m|1).
    pub fn m(&self) -> usize {
        self.crosses.len() + 1
    }

    pub fn core(&self) -> RationalWeight {
        core_of_crosses(&self.crosses)
    }

    pub fn is_free(&self, v: i64) -> bool {
        self.crosses.binary_search(&v).is_err()
    }

    /// Berezin charge of the simple module with vee at `v`.
    pub fn index_of(&self, v: i64) -> i64 {
        v + self.crosses.iter().filter(|&&x| x > v).count() as i64
    }

    /// Free position with the given Berezin charge.
    pub fn position_of(&self, index: i64) -> i64 {
        // index_of is increasing in v; start from the guess ignoring crosses
        let mut v = index - self.crosses.len() as i64;
        while self.index_of(v) < index || !self.is_free(v) {
            v += 1;
        }
        while self.index_of(v) > index {
            v -= 1;
            while !self.is_free(v) {
                v -= 1;
            }
        }
        debug_assert_eq!(self.index_of(v), index);
        v
    }

    /// Adjacent free position, `dir = -1` for `T^-` and `+1` for `T^+`.
    pub fn step(&self, v: i64, dir: i64) -> i64 {
        let mut u = v + dir.signum();
        while !self.is_free(u) {
            u += dir.signum();
        }
        u
    }

    /// Free positions in `[lo, hi]`, ascending.
    pub fn free_between(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&v| self.is_free(v)).collect()
    }

    pub fn weight_at(&self, v: i64) -> Weight {
        let mut d = WeightDiagram::default();
        for &x in &self.crosses {
            d.labels.insert(x, Mark::Cross);
        }
        d.labels.insert(v, Mark::Vee);
        weight_from_diagram(&d, self.m()).expect("vee at a free position")
    }

    pub fn shift(&self, k: i64) -> Self {
        BlockId {
            crosses: self.crosses.iter().map(|x| x + k).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Irr(i64),
    Roof(i64, i64),
    Bottom(i64, i64),
    Kac(i64),
    AntiKac(i64),
    Proj(i64),
}

impl Kind {
    pub fn name(&self) -> &'static str {
        match self {
            Kind::Irr(_) => "irr",
            Kind::Roof(..) => "roof",
            Kind::Bottom(..) => "bottom",
            Kind::Kac(_) => "kac",
            Kind::AntiKac(_) => "antikac",
            Kind::Proj(_) => "proj",
        }
    }
}

/// An indecomposable Gl(m|1)-module of an atypical block, up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndecompLabel {
    pub block: BlockId,
    pub kind: Kind,
    /// Parity shift applied to the module living in the ε-graded category.
    pub parity: u8,
}

impl IndecompLabel {
    /// Validates and normalizes (`Roof(v, v)` becomes `Irr(v)` and so on).
    pub fn new(block: BlockId, kind: Kind, parity: u8) -> Result<Self> {
        let check = |v: i64| {
            if block.is_free(v) {
                Ok(())
            } else {
                Err(Error::InvalidLabel(format!("vee position {v} is a cross of {:?}", block.crosses)))
            }
        };
        let kind = match kind {
            Kind::Irr(v) | Kind::Kac(v) | Kind::AntiKac(v) | Kind::Proj(v) => {
                check(v)?;
                kind
            }
            Kind::Roof(lo, hi) | Kind::Bottom(lo, hi) => {
                check(lo)?;
                check(hi)?;
                if lo > hi {
                    return Err(Error::InvalidLabel(format!("interval [{lo}, {hi}] is empty")));
                }
                let len = block.free_between(lo, hi).len();
                match (kind, len) {
                    (_, 1) => Kind::Irr(lo),
                    (Kind::Roof(..), 2) => Kind::Kac(hi),
                    (Kind::Bottom(..), 2) => Kind::AntiKac(lo),
                    _ => kind,
                }
            }
        };
        Ok(IndecompLabel {
            block,
            kind,
            parity: parity & 1,
        })
    }

    pub fn irr(w: &Weight) -> Result<Self> {
        let (block, v) = block_of(w)?;
        IndecompLabel::new(block, Kind::Irr(v), 0)
    }

    pub fn m(&self) -> usize {
        self.block.m()
    }

    pub fn with_parity(&self, parity: u8) -> Self {
        IndecompLabel {
            parity: parity & 1,
            ..self.clone()
        }
    }

    /// `(lo, hi)` of the free-position interval spanned by the label.
    pub fn interval(&self) -> (i64, i64) {
        let b = &self.block;
        match self.kind {
            Kind::Irr(v) | Kind::Proj(v) => (v, v),
            Kind::Roof(lo, hi) | Kind::Bottom(lo, hi) => (lo, hi),
            Kind::Kac(v) => (b.step(v, -1), v),
            Kind::AntiKac(v) => (v, b.step(v, 1)),
        }
    }

    /// Number of composition factors.
    pub fn length(&self) -> usize {
        match self.kind {
            Kind::Proj(_) => 4,
            _ => {
                let (lo, hi) = self.interval();
                self.block.free_between(lo, hi).len()
            }
        }
    }

    /// Berezin twist `Ber^k ⊗ self`.
    pub fn twist(&self, k: i64) -> Self {
        let kind = match self.kind {
            Kind::Irr(v) => Kind::Irr(v + k),
            Kind::Roof(a, b) => Kind::Roof(a + k, b + k),
            Kind::Bottom(a, b) => Kind::Bottom(a + k, b + k),
            Kind::Kac(v) => Kind::Kac(v + k),
            Kind::AntiKac(v) => Kind::AntiKac(v + k),
            Kind::Proj(v) => Kind::Proj(v + k),
        };
        IndecompLabel {
            block: self.block.shift(k),
            kind,
            parity: self.parity,
        }
    }
}

impl fmt::Display for IndecompLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match self.kind {
            Kind::Roof(lo, hi) | Kind::Bottom(lo, hi) => format!("{}@{lo}:{hi}", self.kind.name()),
            Kind::Irr(v) | Kind::Kac(v) | Kind::AntiKac(v) | Kind::Proj(v) => {
                format!("{}@{v}", self.kind.name())
            }
        };
        let cs: Vec<String> = self.block.crosses.iter().map(|x| x.to_string()).collect();
        let pi = if self.parity == 1 { " Π" } else { "" };
        write!(f, "{body} block={}{pi}", cs.join(","))
    }
}

/// `kind@v` or `kind@lo:hi`, then `block=c1,...` and an optional `odd`,
/// separated by `/` or whitespace.
impl std::str::FromStr for IndecompLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("label {s:?}: {why}"));
        let mut tokens = s.split(|c: char| c == '/' || c.is_whitespace()).filter(|t| !t.is_empty());
        let head = tokens.next().ok_or_else(|| bad("empty"))?;
        let (name, pos) = head.split_once('@').ok_or_else(|| bad("expected kind@position"))?;
        let int = |x: &str| x.trim().parse::<i64>().map_err(|_| bad("positions are integers"));
        let one = |pos: &str| -> Result<i64> {
            if pos.contains(':') {
                Err(bad("this kind takes a single position"))
            } else {
                int(pos)
            }
        };
        let two = |pos: &str| -> Result<(i64, i64)> {
            let (a, b) = pos.split_once(':').ok_or_else(|| bad("expected lo:hi"))?;
            Ok((int(a)?, int(b)?))
        };
        let kind = match name {
            "irr" => Kind::Irr(one(pos)?),
            "kac" => Kind::Kac(one(pos)?),
            "antikac" => Kind::AntiKac(one(pos)?),
            "proj" => Kind::Proj(one(pos)?),
            "roof" => {
                let (a, b) = two(pos)?;
                Kind::Roof(a, b)
            }
            "bottom" => {
                let (a, b) = two(pos)?;
                Kind::Bottom(a, b)
            }
            _ => return Err(bad("unknown kind")),
        };
        let mut block = None;
        let mut parity = 0;
        for t in tokens {
            if let Some(cs) = t.strip_prefix("block=") {
                let crosses = cs.split(',').map(int).collect::<Result<Vec<_>>>()?;
                block = Some(BlockId::new(crosses)?);
            } else if matches!(t, "odd" | "Π" | "pi") {
                parity = 1;
            } else if t != "even" {
                return Err(bad("unexpected token"));
            }
        }
        let block = block.ok_or_else(|| bad("missing block=c1,..."))?;
        IndecompLabel::new(block, kind, parity)
    }
}

#[derive(Serialize, Deserialize)]
struct LabelRepr {
    block: Vec<i64>,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lo: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hi: Option<i64>,
    parity: u8,
}

impl Serialize for IndecompLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (v, lo, hi) = match self.kind {
            Kind::Roof(a, b) | Kind::Bottom(a, b) => (None, Some(a), Some(b)),
            Kind::Irr(x) | Kind::Kac(x) | Kind::AntiKac(x) | Kind::Proj(x) => (Some(x), None, None),
        };
        LabelRepr {
            block: self.block.crosses.clone(),
            kind: self.kind.name().to_string(),
            v,
            lo,
            hi,
            parity: self.parity,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IndecompLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = LabelRepr::deserialize(d)?;
        let need = |x: Option<i64>, name: &str| x.ok_or_else(|| D::Error::custom(format!("missing field {name}")));
        let kind = match r.kind.as_str() {
            "irr" => Kind::Irr(need(r.v, "v")?),
            "kac" => Kind::Kac(need(r.v, "v")?),
            "antikac" => Kind::AntiKac(need(r.v, "v")?),
            "proj" => Kind::Proj(need(r.v, "v")?),
            "roof" => Kind::Roof(need(r.lo, "lo")?, need(r.hi, "hi")?),
            "bottom" => Kind::Bottom(need(r.lo, "lo")?, need(r.hi, "hi")?),
            other => return Err(D::Error::custom(format!("unknown kind {other:?}"))),
        };
        let block = BlockId::new(r.block).map_err(D::Error::custom)?;
        IndecompLabel::new(block, kind, r.parity).map_err(D::Error::custom)
    }
}

pub fn block_of(w: &Weight) -> Result<(BlockId, i64)> {
    let v = w.vee().ok_or(Error::Typical)?;
    Ok((BlockId { crosses: w.crosses() }, v))
}

/// Berezin charge `a_B` of an atypical weight.
pub fn berezin_charge(w: &Weight) -> Result<i64> {
    let (block, v) = block_of(w)?;
    Ok(block.index_of(v))
}

/// `T^+` (`dir = 1`) or `T^-` (`dir = -1`).
pub fn t_shift(w: &Weight, dir: i64) -> Result<Weight> {
    let (block, v) = block_of(w)?;
    Ok(block.weight_at(block.step(v, dir)))
}

pub fn ext1_dim(a: &Weight, b: &Weight) -> u8 {
    if !a.is_atypical() || !b.is_atypical() || a.m != b.m {
        return 0;
    }
    let up = t_shift(a, 1).expect("atypical");
    let down = t_shift(a, -1).expect("atypical");
    u8::from(*b == up || *b == down)
}

/// Vee positions of the composition factors, with multiplicity.
pub fn composition_factors(x: &IndecompLabel) -> Vec<i64> {
    let b = &x.block;
    match x.kind {
        Kind::Irr(v) => vec![v],
        Kind::Roof(lo, hi) | Kind::Bottom(lo, hi) => b.free_between(lo, hi),
        Kind::Kac(v) => vec![v, b.step(v, -1)],
        Kind::AntiKac(v) => vec![v, b.step(v, 1)],
        Kind::Proj(v) => vec![v, b.step(v, -1), b.step(v, 1), v],
    }
}

/// `a_B(w) mod 2`: the simple module has negative superdimension iff odd.
pub fn parity_class(w: &Weight) -> Result<u8> {
    Ok(berezin_charge(w)?.rem_euclid(2) as u8)
}

pub fn superdimension(x: &IndecompLabel) -> BigInt {
    let b = &x.block;
    let v = match x.kind {
        Kind::Irr(v) => v,
        Kind::Roof(lo, _) | Kind::Bottom(lo, _) if x.length() % 2 == 1 => lo,
        _ => return BigInt::from(0),
    };
    let dim = BigInt::from(weyl_dim(&b.core()));
    if (b.index_of(v) + x.parity as i64).rem_euclid(2) == 1 {
        -dim
    } else {
        dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(even: &[i64], odd: i64) -> Weight {
        Weight::new(even.to_vec(), odd).unwrap()
    }

    fn block(cs: &[i64]) -> BlockId {
        BlockId::new(cs.to_vec()).unwrap()
    }

    fn label(cs: &[i64], kind: Kind) -> IndecompLabel {
        IndecompLabel::new(block(cs), kind, 0).unwrap()
    }

    #[test]
    fn blocks_of_small_weights() {
        assert_eq!(block_of(&w(&[0, 0], 0)).unwrap(), (block(&[0]), -1));
        assert_eq!(block_of(&w(&[1, 1], -1)).unwrap(), (block(&[1]), 0));
        assert_eq!(block_of(&w(&[1, 0], 0)).unwrap(), (block(&[1]), -1));
        assert!(block_of(&w(&[1, 0], 5)).is_err());
    }

    #[test]
    fn index_and_position_are_inverse() {
        let b = block(&[-3, 0, 1, 5]);
        let free: Vec<i64> = (-10..12).filter(|&v| b.is_free(v)).collect();
        for pair in free.windows(2) {
            assert_eq!(b.index_of(pair[1]), b.index_of(pair[0]) + 1);
        }
        for &v in &free {
            assert_eq!(b.position_of(b.index_of(v)), v);
        }
    }

    #[test]
    fn t_shifts() {
        assert_eq!(t_shift(&w(&[0, 0], 0), -1).unwrap(), w(&[0, -1], 1));
        assert_eq!(t_shift(&w(&[1, 0], 0), 1).unwrap(), w(&[1, 1], -1));
        let x = w(&[3, 1, 1], -2);
        assert!(x.is_atypical());
        assert_eq!(t_shift(&t_shift(&x, -1).unwrap(), 1).unwrap(), x);
        assert_eq!(t_shift(&t_shift(&x, 1).unwrap(), -1).unwrap(), x);
    }

    #[test]
    fn ext_quiver() {
        let a = w(&[0, 0], 0);
        let b = w(&[0, -1], 1);
        assert_eq!(ext1_dim(&a, &b), 1);
        assert_eq!(ext1_dim(&b, &a), 1);
        assert_eq!(ext1_dim(&a, &a), 0);
        // different blocks
        assert_eq!(ext1_dim(&a, &w(&[1, 0], 0)), 0);
        assert_eq!(ext1_dim(&a, &w(&[1, 0], 5)), 0);
    }

    #[test]
    fn factors() {
        assert_eq!(composition_factors(&label(&[0], Kind::Irr(-1))), vec![-1]);
        assert_eq!(composition_factors(&label(&[0], Kind::Kac(-1))), vec![-1, -2]);
        assert_eq!(composition_factors(&label(&[0], Kind::Roof(-3, -1))), vec![-3, -2, -1]);
        assert_eq!(composition_factors(&label(&[0], Kind::Roof(-1, 2))), vec![-1, 1, 2]);
        assert_eq!(composition_factors(&label(&[0], Kind::Proj(1))), vec![1, -1, 2, 1]);
    }

    #[test]
    fn normalization() {
        assert_eq!(label(&[0], Kind::Roof(-2, -2)).kind, Kind::Irr(-2));
        assert_eq!(label(&[0], Kind::Roof(-1, 1)).kind, Kind::Kac(1));
        assert_eq!(label(&[0], Kind::Bottom(-1, 1)).kind, Kind::AntiKac(-1));
        assert!(IndecompLabel::new(block(&[0]), Kind::Irr(0), 0).is_err());
        assert!(IndecompLabel::new(block(&[0]), Kind::Roof(2, 1), 0).is_err());
    }

    #[test]
    fn superdimensions() {
        let one = |x: &IndecompLabel| superdimension(x);
        assert_eq!(one(&IndecompLabel::irr(&w(&[0, 0], 0)).unwrap()), BigInt::from(1));
        assert_eq!(one(&IndecompLabel::irr(&w(&[1, 1], -1)).unwrap()), BigInt::from(-1));
        // L(0,0|0) sits at the top of this roof
        assert_eq!(one(&label(&[0], Kind::Roof(-3, -1))), BigInt::from(1));
        assert_eq!(one(&label(&[0], Kind::Roof(-4, -1))), BigInt::from(0));
        assert_eq!(one(&label(&[0], Kind::Kac(-1))), BigInt::from(0));
        assert_eq!(one(&label(&[0], Kind::Proj(-1))), BigInt::from(0));
        let x = IndecompLabel::new(block(&[2, 5]), Kind::Irr(3), 0).unwrap();
        assert_eq!(one(&x).magnitude(), &num_bigint::BigUint::from(3u32));
        assert_eq!(one(&x.with_parity(1)), -one(&x));
    }

    #[test]
    fn parity_classes() {
        assert_eq!(parity_class(&w(&[0, 0], 0)).unwrap(), 0);
        assert_eq!(parity_class(&w(&[1, 1], -1)).unwrap(), 1);
        assert_eq!(parity_class(&w(&[0, 0], -1)).unwrap(), 0);
    }

    #[test]
    fn label_json() {
        let x = label(&[0], Kind::Roof(-3, -1));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"block":[0],"kind":"roof","lo":-3,"hi":-1,"parity":0}"#);
        assert_eq!(serde_json::from_str::<IndecompLabel>(&s).unwrap(), x);
        let bad = r#"{"block":[0],"kind":"irr","v":0,"parity":0}"#;
        assert!(serde_json::from_str::<IndecompLabel>(bad).is_err());
    }

    #[test]
    fn parse_labels() {
        let x: IndecompLabel = "roof@-3:1/block=0,2/odd".parse().unwrap();
        assert_eq!(x.kind, Kind::Roof(-3, 1));
        assert_eq!(x.block.crosses, vec![0, 2]);
        assert_eq!(x.parity, 1);
        assert_eq!(x.to_string().parse::<IndecompLabel>().unwrap(), x);
        let y: IndecompLabel = "bottom@-1:0 block=1".parse().unwrap();
        assert_eq!(y.kind, Kind::AntiKac(-1));
        for bad in ["irr@x/block=0", "roof@1/block=0", "irr@0", "foo@0/block=1", "irr@0/block=0"] {
            assert!(bad.parse::<IndecompLabel>().is_err(), "{bad}");
        }
    }
}
