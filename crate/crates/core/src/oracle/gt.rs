//! Simple gl(n)-modules in a Gelfand–Tsetlin basis with rational matrix
//! coefficients.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::linalg::q;
use super::module::SparseMat;

/// Rows from the top: `rows[0]` has length n, `rows[n-1]` length 1.
pub type Pattern = Vec<Vec<i64>>;

pub fn patterns(top: &[i64]) -> Vec<Pattern> {
    let mut out = Vec::new();
    let mut cur = vec![top.to_vec()];
    fill(&mut cur, &mut out);
    out
}

fn fill(cur: &mut Vec<Vec<i64>>, out: &mut Vec<Pattern>) {
    let last = cur.last().expect("nonempty").clone();
    if last.len() == 1 {
        out.push(cur.clone());
        return;
    }
    let mut row = vec![0; last.len() - 1];
    rec_row(&last, 0, &mut row, cur, out);
}

fn rec_row(above: &[i64], i: usize, row: &mut Vec<i64>, cur: &mut Vec<Vec<i64>>, out: &mut Vec<Pattern>) {
    if i == row.len() {
        cur.push(row.clone());
        fill(cur, out);
        cur.pop();
        return;
    }
    for v in above[i + 1]..=above[i] {
        row[i] = v;
        rec_row(above, i + 1, row, cur, out);
    }
}

/// gl(n) weight of a pattern: `w_k = |row of length k| - |row of length k-1|`.
pub fn pattern_weight(p: &Pattern) -> Vec<i64> {
    let n = p.len();
    (1..=n)
        .map(|k| {
            let s: i64 = p[n - k].iter().sum();
            let t: i64 = if k > 1 { p[n - k + 1].iter().sum() } else { 0 };
            s - t
        })
        .collect()
}

pub fn character(top: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let mut ch = BTreeMap::new();
    for p in patterns(top) {
        *ch.entry(pattern_weight(&p)).or_insert(0) += 1;
    }
    ch
}

/// The simple gl(n)-module with highest weight `top`: basis vectors, their
/// weights and the matrices of `E_ab`, indexed `a * n + b`.
pub struct GlIrrep {
    pub n: usize,
    pub weights: Vec<Vec<i64>>,
    pub ops: Vec<SparseMat>,
}

pub fn gl_irrep(top: &[i64]) -> GlIrrep {
    let n = top.len();
    let pats = patterns(top);
    let index: HashMap<Pattern, usize> = pats.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = pats.len();
    // row of length k sits at position n - k
    let l = |p: &Pattern, k: usize, i: usize| p[n - k][i] - i as i64;
    let mut ops: Vec<SparseMat> = (0..n * n).map(|_| SparseMat::zero(dim, dim)).collect();
    for (col, p) in pats.iter().enumerate() {
        let w = pattern_weight(p);
        for k in 0..n {
            if w[k] != 0 {
                ops[k * n + k].push(col, col, q(w[k]));
            }
        }
        for k in 1..n {
            // E_{k,k+1} in 1-based terms: raising
            for i in 0..k {
                let mut num = q(-1);
                for j in 0..=k {
                    num *= q(l(p, k, i) - l(p, k + 1, j));
                }
                let mut den = q(1);
                for j in 0..k {
                    if j != i {
                        den *= q(l(p, k, i) - l(p, k, j));
                    }
                }
                let mut np = p.clone();
                np[n - k][i] += 1;
                if let Some(&row) = index.get(&np) {
                    let c = num / den;
                    if !c.is_zero() {
                        ops[(k - 1) * n + k].push(col, row, c);
                    }
                }
            }
            // E_{k+1,k}: lowering
            for i in 0..k {
                let mut num = q(1);
                for j in 0..k - 1 {
                    num *= q(l(p, k, i) - l(p, k - 1, j));
                }
                let mut den = q(1);
                for j in 0..k {
                    if j != i {
                        den *= q(l(p, k, i) - l(p, k, j));
                    }
                }
                let mut np = p.clone();
                np[n - k][i] -= 1;
                if let Some(&row) = index.get(&np) {
                    let c = num / den;
                    if !c.is_zero() {
                        ops[k * n + k - 1].push(col, row, c);
                    }
                }
            }
        }
    }
    // remaining root vectors by commutators
    for d in 2..n {
        for a in 0..n - d {
            let b = a + d;
            let up = ops[a * n + a + 1].commutator(&ops[(a + 1) * n + b]);
            ops[a * n + b] = up;
            let down = ops[b * n + b - 1].commutator(&ops[(b - 1) * n + a]);
            ops[b * n + a] = down;
        }
    }
    GlIrrep {
        n,
        weights: pats.iter().map(pattern_weight).collect(),
        ops,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_tensor::{weyl_dim, RationalWeight};

    #[test]
    fn dimensions() {
        for top in [vec![0, 0], vec![1, 0], vec![2, 1, 0], vec![3, 1, -2], vec![2, 2, 0, -1]] {
            let d = patterns(&top).len();
            let w = weyl_dim(&RationalWeight::new(top.clone()).unwrap());
            assert_eq!(w, d.into(), "{top:?}");
        }
    }

    #[test]
    fn relations_hold() {
        for top in [vec![1, 0], vec![2, 0, -1], vec![2, 1, 0], vec![1, 1, 0, 0]] {
            let g = gl_irrep(&top);
            let n = g.n;
            let e = |a: usize, b: usize| &g.ops[a * n + b];
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            let lhs = e(a, b).commutator(e(c, d));
                            let mut rhs = SparseMat::zero(lhs.rows, lhs.cols);
                            if b == c {
                                rhs = rhs.add(e(a, d), &q(1));
                            }
                            if d == a {
                                rhs = rhs.add(e(c, b), &q(-1));
                            }
                            assert_eq!(lhs.to_dense(), rhs.to_dense(), "{top:?} [{a}{b},{c}{d}]");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn highest_weight_first_character() {
        let ch = character(&[2, 0]);
        assert_eq!(ch.len(), 3);
        assert_eq!(ch.get(&vec![1, 1]), Some(&1));
    }
}
