//! Rational representations of Gl(k): Littlewood–Richardson coefficients,
//! tensor products and Weyl dimensions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::InvalidWeight(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// All partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn all(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn go(n: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if max_len == 0 {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                cur.push(p);
                go(n - p, max_len - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_len, max_part, &mut Vec::new(), &mut out);
        out
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Highest weight of an irreducible rational Gl(k)-representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalWeight {
    pub parts: Vec<i64>,
}

impl RationalWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidWeight(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(RationalWeight { parts })
    }

    pub fn zero(k: usize) -> Self {
        RationalWeight { parts: vec![0; k] }
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// Adds `c` to every entry (tensoring with `det^c`).
    pub fn shift(&self, c: i64) -> Self {
        RationalWeight {
            parts: self.parts.iter().map(|x| x + c).collect(),
        }
    }

    fn to_partition(&self) -> (Partition, i64) {
        let c = self.parts.last().copied().unwrap_or(0);
        let parts = self.parts.iter().map(|x| (x - c) as u32).collect();
        (Partition::new(parts).expect("shifted weight is a partition"), c)
    }

    fn from_partition(p: &Partition, k: usize, c: i64) -> Self {
        RationalWeight {
            parts: (0..k).map(|i| p.part(i) as i64 + c).collect(),
        }
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for RationalWeight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(d)?;
        RationalWeight::new(parts).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

/// Multiset of Gl(k) irreducibles, keyed by highest weight.
pub type GlDecomposition = BTreeMap<RationalWeight, u64>;

/// Littlewood–Richardson coefficient `c^nu_{alpha, beta}` by enumeration of
/// LR tableaux of shape `nu / alpha` and content `beta`.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, nu: &Partition) -> u64 {
    if nu.size() != alpha.size() + beta.size() || !nu.contains(alpha) {
        return 0;
    }
    if beta.is_empty() {
        return 1;
    }
    // cells of the skew shape, row by row, each row right to left (reading order)
    let rows: Vec<(usize, usize)> = (0..nu.len())
        .map(|r| (alpha.part(r) as usize, nu.part(r) as usize))
        .collect();
    let mut filling: Vec<Vec<u32>> = rows.iter().map(|&(_, e)| vec![0; e]).collect();
    let mut counts = vec![0u32; beta.len() + 1];
    let mut cells = Vec::new();
    for (r, &(s, e)) in rows.iter().enumerate() {
        for c in (s..e).rev() {
            cells.push((r, c));
        }
    }

    fn place(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &[(usize, usize)],
        filling: &mut [Vec<u32>],
        counts: &mut [u32],
        beta: &Partition,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let (_, end) = rows[r];
        // weakly increasing along the row
        let upper = if c + 1 < end { filling[r][c + 1] } else { beta.len() as u32 };
        // strictly increasing down the column
        let lower = if r > 0 && c >= rows[r - 1].0 && c < rows[r - 1].1 {
            filling[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lower..=upper {
            let vi = v as usize;
            if counts[vi] >= beta.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            filling[r][c] = v;
            total += place(idx + 1, cells, rows, filling, counts, beta);
            counts[vi] -= 1;
        }
        filling[r][c] = 0;
        total
    }

    place(0, &cells, &rows, &mut filling, &mut counts, beta)
}

/// Product of polynomial Gl(k) irreducibles, truncated to `l(nu) <= k`.
pub fn tensor_partitions(k: usize, a: &Partition, b: &Partition) -> BTreeMap<Partition, u64> {
    let n = a.size() + b.size();
    let max_part = a.part(0) + b.part(0);
    let mut out = BTreeMap::new();
    for nu in Partition::all(n, k, max_part) {
        let c = lr_coefficient(a, b, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// `L(a) ⊗ L(b)` for rational weights of equal rank.
pub fn tensor_rational(a: &RationalWeight, b: &RationalWeight) -> Result<GlDecomposition> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    let k = a.rank();
    let (pa, ca) = a.to_partition();
    let (pb, cb) = b.to_partition();
    Ok(tensor_partitions(k, &pa, &pb)
        .into_iter()
        .map(|(nu, c)| (RationalWeight::from_partition(&nu, k, ca + cb), c))
        .collect())
}

/// Weyl dimension formula for Gl(k).
pub fn weyl_dim(a: &RationalWeight) -> BigUint {
    let k = a.rank();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        for j in i + 1..k {
            num *= BigInt::from(a.parts[i] - a.parts[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let q = num / den;
    debug_assert!(!q.is_negative());
    q.to_biguint().expect("dominant weights have positive dimension")
}

/// `(l_1, ..., l_s, 0, ..., 0, -r_t, ..., -r_1)` of length `m - 1`.
pub fn wt_of_bipartition(m: usize, bp: &Bipartition) -> Result<RationalWeight> {
    let k = m - 1;
    let (s, t) = (bp.left.len(), bp.right.len());
    if s + t > k {
        return Err(Error::BipartitionTooLong(s + t, k));
    }
    let mut parts: Vec<i64> = bp.left.parts.iter().map(|&x| x as i64).collect();
    parts.resize(k - t, 0);
    parts.extend(bp.right.parts.iter().rev().map(|&x| -(x as i64)));
    Ok(RationalWeight { parts })
}

/// Splits a weight into its positive part and its negated negative part.
/// The flag is `true` when the bipartition cannot be placed back in the
/// same rank, which never happens for a weakly decreasing input.
pub fn bipartition_of(weight: &RationalWeight) -> (Bipartition, bool) {
    let left: Vec<u32> = weight.parts.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
    let right: Vec<u32> = weight
        .parts
        .iter()
        .rev()
        .filter(|&&x| x < 0)
        .map(|&x| (-x) as u32)
        .collect();
    let bp = Bipartition {
        left: Partition::new(left).expect("positive entries of a dominant weight"),
        right: Partition::new(right).expect("negative entries of a dominant weight"),
    };
    let defect = bp.left.len() + bp.right.len() > weight.rank();
    assert!(!defect);
    (bp, defect)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rw(parts: &[i64]) -> RationalWeight {
        RationalWeight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2])), 0);
        for a in Partition::all(5, 5, 5) {
            assert_eq!(lr_coefficient(&a, &Partition::empty(), &a), 1);
        }
        // the classic multiplicity-two coefficient
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn tensor_examples() {
        let out = tensor_rational(&rw(&[3]), &rw(&[-5])).unwrap();
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![(rw(&[-2]), 1)]);
        let out = tensor_rational(&rw(&[1, 0]), &rw(&[1, 0])).unwrap();
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![(rw(&[1, 1]), 1), (rw(&[2, 0]), 1)]);
        let a = rw(&[2, -1, -3]);
        let out = tensor_rational(&a, &RationalWeight::zero(3)).unwrap();
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![(a, 1)]);
        assert!(tensor_rational(&rw(&[1]), &rw(&[1, 0])).is_err());
    }

    #[test]
    fn adjoint_of_gl3() {
        // V ⊗ V* = adjoint ⊕ trivial
        let out = tensor_rational(&rw(&[1, 0, 0]), &rw(&[0, 0, -1])).unwrap();
        assert_eq!(
            out.into_iter().collect::<Vec<_>>(),
            vec![(rw(&[0, 0, 0]), 1), (rw(&[1, 0, -1]), 1)]
        );
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim(&rw(&[17])), BigUint::from(1u32));
        assert_eq!(weyl_dim(&rw(&[1, 0])), BigUint::from(2u32));
        assert_eq!(weyl_dim(&rw(&[2, 1, 0])), BigUint::from(8u32));
        assert_eq!(weyl_dim(&rw(&[1, 0, -1])), BigUint::from(8u32));
    }

    #[test]
    fn bipartitions() {
        let bp = |l: &[u32], r: &[u32]| Bipartition { left: p(l), right: p(r) };
        assert_eq!(wt_of_bipartition(3, &bp(&[1], &[])).unwrap(), rw(&[1, 0]));
        assert_eq!(wt_of_bipartition(3, &bp(&[], &[1])).unwrap(), rw(&[0, -1]));
        assert_eq!(wt_of_bipartition(2, &bp(&[], &[])).unwrap(), rw(&[0]));
        assert_eq!(wt_of_bipartition(4, &bp(&[3, 1], &[2])).unwrap(), rw(&[3, 1, -2]));
        assert!(wt_of_bipartition(2, &bp(&[1], &[1])).is_err());
        assert_eq!(bipartition_of(&rw(&[1, 0])).0, bp(&[1], &[]));
        assert_eq!(bipartition_of(&rw(&[2, -1])).0, bp(&[2], &[1]));
        assert_eq!(bipartition_of(&rw(&[0, 0])).0, bp(&[], &[]));
    }
}
