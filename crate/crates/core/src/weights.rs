//! Dominant integral weights of gl(m|1) and their weight diagrams.
//!
//! A weight `(l_1, ..., l_m | l_{m+1})` is drawn on the integer line through
//! the two sets `{l_i - i + 1}` (crosses) and `{1 - m - l_{m+1}}` (circle).
//! A position in both sets carries a vee; the weight is then atypical.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gl_tensor::RationalWeight;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub m: usize,
    pub even: Vec<i64>,
    pub odd: i64,
}

impl Weight {
    pub fn new(even: Vec<i64>, odd: i64) -> Result<Self> {
        let w = Weight {
            m: even.len(),
            even,
            odd,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::UnsupportedRank(self.m));
        }
        if self.even.len() != self.m {
            return Err(Error::InvalidWeight(format!(
                "even part has length {} but m = {}",
                self.even.len(),
                self.m
            )));
        }
        if self.even.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidWeight(format!(
                "even part {:?} is not weakly decreasing",
                self.even
            )));
        }
        Ok(())
    }

    /// Trivial module `(0, ..., 0 | 0)`.
    pub fn zero(m: usize) -> Self {
        Weight {
            m,
            even: vec![0; m],
            odd: 0,
        }
    }

    /// Highest weight of the Berezinian `(1, ..., 1 | -1)`.
    pub fn berezin(m: usize) -> Self {
        Weight::zero(m).twist(1)
    }

    /// Highest weight of the standard representation `(1, 0, ..., 0 | 0)`.
    pub fn standard(m: usize) -> Self {
        let mut w = Weight::zero(m);
        w.even[0] = 1;
        w
    }

    /// Highest weight of the dual standard representation `(0, ..., 0 | -1)`.
    pub fn dual_standard(m: usize) -> Self {
        let mut w = Weight::zero(m);
        w.odd = -1;
        w
    }

    /// Berezin twist: the highest weight of `Ber^k ⊗ L(self)`.
    pub fn twist(&self, k: i64) -> Self {
        Weight {
            m: self.m,
            even: self.even.iter().map(|x| x + k).collect(),
            odd: self.odd - k,
        }
    }

    /// All `m + 1` coordinates.
    pub fn full(&self) -> Vec<i64> {
        let mut v = self.even.clone();
        v.push(self.odd);
        v
    }

    pub fn cross_set(&self) -> Vec<i64> {
        self.even
            .iter()
            .enumerate()
            .map(|(i, l)| l - i as i64)
            .collect()
    }

    pub fn circle_position(&self) -> i64 {
        1 - self.m as i64 - self.odd
    }

    pub fn diagram(&self) -> WeightDiagram {
        build_diagram(self)
    }

    pub fn atypicality(&self) -> u8 {
        atypicality(self)
    }

    pub fn is_atypical(&self) -> bool {
        self.atypicality() == 1
    }

    /// Position of the vee, if the weight is atypical.
    pub fn vee(&self) -> Option<i64> {
        let c = self.circle_position();
        self.cross_set().contains(&c).then_some(c)
    }

    /// Crosses of the diagram (the vee excluded), sorted ascending.
    pub fn crosses(&self) -> Vec<i64> {
        let c = self.circle_position();
        let mut xs: Vec<i64> = self.cross_set().into_iter().filter(|&x| x != c).collect();
        xs.sort_unstable();
        xs
    }

    pub fn core(&self) -> Result<RationalWeight> {
        core_weight(self)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even: Vec<String> = self.even.iter().map(|x| x.to_string()).collect();
        write!(f, "({}|{})", even.join(","), self.odd)
    }
}

/// `a1,...,am/b`, optionally wrapped as `(a1,...,am|b)`.
impl std::str::FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("weight {s:?}: expected a1,...,am/b"));
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (even, odd) = t.split_once(['/', '|']).ok_or_else(bad)?;
        let even = even
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let odd = odd.trim().parse::<i64>().map_err(|_| bad())?;
        Weight::new(even, odd)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Cross,
    Circle,
    Vee,
}

impl Mark {
    pub fn symbol(self) -> &'static str {
        match self {
            Mark::Cross => "x",
            Mark::Circle => "o",
            Mark::Vee => "v",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Mark> {
        match s {
            "x" => Some(Mark::Cross),
            "o" => Some(Mark::Circle),
            "v" => Some(Mark::Vee),
            _ => None,
        }
    }
}

impl Serialize for Mark {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl<'de> Deserialize<'de> for Mark {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Mark::from_symbol(&s).ok_or_else(|| serde::de::Error::custom(format!("bad mark {s:?}")))
    }
}

/// Labels of the integer line; unlisted positions are wedges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightDiagram {
    pub labels: BTreeMap<i64, Mark>,
}

impl WeightDiagram {
    pub fn count(&self, mark: Mark) -> usize {
        self.labels.values().filter(|&&m| m == mark).count()
    }

    pub fn positions(&self, mark: Mark) -> Vec<i64> {
        self.labels
            .iter()
            .filter(|(_, &m)| m == mark)
            .map(|(&p, _)| p)
            .collect()
    }

    pub fn shift(&self, k: i64) -> WeightDiagram {
        WeightDiagram {
            labels: self.labels.iter().map(|(&p, &m)| (p + k, m)).collect(),
        }
    }

    /// ASCII rendering of the window `[lo, hi]`, wedges drawn as `^`.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let mut marks = String::new();
        let mut axis = String::new();
        for p in lo..=hi {
            let s = self.labels.get(&p).map_or("^", |m| m.symbol());
            marks.push_str(&format!("{s:>4}"));
            axis.push_str(&format!("{p:>4}"));
        }
        format!("{marks}\n{axis}")
    }

    /// A window containing every labelled position with some margin.
    pub fn window(&self) -> (i64, i64) {
        let lo = self.labels.keys().next().copied().unwrap_or(0);
        let hi = self.labels.keys().next_back().copied().unwrap_or(0);
        (lo - 2, hi + 2)
    }
}

impl Serialize for WeightDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, Mark)> = self.labels.iter().map(|(&p, &m)| (p, m)).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, Mark)> = Vec::deserialize(d)?;
        let mut labels = BTreeMap::new();
        for (p, m) in pairs {
            if labels.insert(p, m).is_some() {
                return Err(serde::de::Error::custom(format!("position {p} labelled twice")));
            }
        }
        Ok(WeightDiagram { labels })
    }
}

pub fn build_diagram(w: &Weight) -> WeightDiagram {
    let circle = w.circle_position();
    let mut labels = BTreeMap::new();
    for x in w.cross_set() {
        let prev = labels.insert(x, if x == circle { Mark::Vee } else { Mark::Cross });
        assert!(prev.is_none(), "dominant weight produced a repeated cross");
    }
    labels.entry(circle).or_insert(Mark::Circle);
    WeightDiagram { labels }
}

pub fn atypicality(w: &Weight) -> u8 {
    u8::from(w.cross_set().contains(&w.circle_position()))
}

pub fn weight_from_diagram(d: &WeightDiagram, m: usize) -> Result<Weight> {
    if m < 2 {
        return Err(Error::UnsupportedRank(m));
    }
    let (crosses, circles, vees) = (d.count(Mark::Cross), d.count(Mark::Circle), d.count(Mark::Vee));
    let typical = crosses == m && circles == 1 && vees == 0;
    let atypical = crosses == m - 1 && circles == 0 && vees == 1;
    if !(typical || atypical) {
        return Err(Error::InvalidDiagram(format!(
            "{crosses} crosses, {circles} circles, {vees} vees for m = {m}"
        )));
    }
    let mut xs: Vec<i64> = d
        .labels
        .iter()
        .filter(|(_, &mk)| mk != Mark::Circle)
        .map(|(&p, _)| p)
        .collect();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    let even = xs.iter().enumerate().map(|(i, x)| x + i as i64).collect();
    let o = d
        .labels
        .iter()
        .find(|(_, &mk)| mk != Mark::Cross)
        .map(|(&p, _)| p)
        .expect("shape checked above");
    Weight::new(even, 1 - m as i64 - o)
}

/// Gl(m-1) weight obtained by turning the vee into a wedge.
pub fn core_weight(w: &Weight) -> Result<RationalWeight> {
    if !w.is_atypical() {
        return Err(Error::Typical);
    }
    Ok(core_of_crosses(&w.crosses()))
}

/// Gl(k) weight whose crosses are `crosses` (any order, distinct).
pub fn core_of_crosses(crosses: &[i64]) -> RationalWeight {
    let mut xs = crosses.to_vec();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    RationalWeight::new(xs.iter().enumerate().map(|(i, x)| x + i as i64).collect())
        .expect("distinct crosses give a dominant weight")
}

/// Inverse of [`core_of_crosses`]; ascending.
pub fn crosses_of_core(core: &RationalWeight) -> Vec<i64> {
    let mut xs: Vec<i64> = core
        .parts
        .iter()
        .enumerate()
        .map(|(i, c)| c - i as i64)
        .collect();
    xs.sort_unstable();
    xs
}

pub fn berezin_twist(w: &Weight, k: i64) -> Weight {
    w.twist(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(even: &[i64], odd: i64) -> Weight {
        Weight::new(even.to_vec(), odd).unwrap()
    }

    fn diag(pairs: &[(i64, Mark)]) -> WeightDiagram {
        WeightDiagram {
            labels: pairs.iter().copied().collect(),
        }
    }

    #[test]
    fn diagrams_of_small_weights() {
        use Mark::*;
        assert_eq!(build_diagram(&w(&[0, 0], 0)), diag(&[(-1, Vee), (0, Cross)]));
        assert_eq!(build_diagram(&w(&[1, 1], -1)), diag(&[(0, Vee), (1, Cross)]));
        assert_eq!(build_diagram(&w(&[1, 0], 0)), diag(&[(-1, Vee), (1, Cross)]));
    }

    #[test]
    fn atypicality_examples() {
        assert_eq!(atypicality(&w(&[0, 0], 0)), 1);
        assert_eq!(atypicality(&w(&[1, 0], 5)), 0);
        for m in 2..7 {
            assert_eq!(atypicality(&Weight::berezin(m)), 1);
        }
    }

    #[test]
    fn inverse_examples() {
        use Mark::*;
        assert_eq!(
            weight_from_diagram(&diag(&[(-1, Vee), (0, Cross)]), 2).unwrap(),
            w(&[0, 0], 0)
        );
        assert_eq!(
            weight_from_diagram(&diag(&[(-2, Vee), (0, Cross)]), 2).unwrap(),
            w(&[0, -1], 1)
        );
        assert_eq!(
            weight_from_diagram(&diag(&[(1, Cross), (0, Cross), (-6, Circle)]), 2).unwrap(),
            w(&[1, 1], 5)
        );
    }

    #[test]
    fn bad_shapes_rejected() {
        use Mark::*;
        assert!(weight_from_diagram(&diag(&[(0, Cross)]), 2).is_err());
        assert!(weight_from_diagram(&diag(&[(0, Vee), (1, Vee)]), 2).is_err());
        assert!(weight_from_diagram(&diag(&[(-1, Vee), (0, Cross)]), 1).is_err());
        assert!(Weight::new(vec![0, 1], 0).is_err());
        assert!(Weight::new(vec![0], 0).is_err());
    }

    #[test]
    fn core_examples() {
        assert_eq!(core_weight(&w(&[0, 0], 0)).unwrap().parts, vec![0]);
        assert_eq!(core_weight(&w(&[1, 1], -1)).unwrap().parts, vec![1]);
        assert_eq!(core_weight(&w(&[1, 0], 0)).unwrap().parts, vec![1]);
        assert_eq!(core_weight(&w(&[1, 0], 5)), Err(Error::Typical));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(berezin_twist(&w(&[0, 0], 0), 1), w(&[1, 1], -1));
        assert_eq!(berezin_twist(&w(&[1, 0], 0), -1), w(&[0, -1], 1));
    }

    #[test]
    fn serde_forms() {
        let x = w(&[1, 0], 0);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"m":2,"even":[1,0],"odd":0}"#);
        let d = build_diagram(&x);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"[[-1,"v"],[1,"x"]]"#);
        let back: WeightDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<WeightDiagram>(r#"[[0,"x"],[0,"v"]]"#).is_err());
    }

    #[test]
    fn parse_weights() {
        let w: Weight = "1,1/-1".parse().unwrap();
        assert_eq!(w, Weight::new(vec![1, 1], -1).unwrap());
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
        for bad in ["1,1", "a,1/0", "0,1/0", "1,1/"] {
            assert!(bad.parse::<Weight>().is_err(), "{bad}");
        }
    }
}
