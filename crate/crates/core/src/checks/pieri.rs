//! Schur products through Jacobi–Trudi and iterated Pieri steps, kept
//! apart from the tableau enumeration it is compared against.

use std::collections::{BTreeMap, HashMap};

/// Linear combination of Schur functions, keyed by partition.
pub type Schur = BTreeMap<Vec<u32>, i64>;

/// All `mu ⊇ lambda` with `mu / lambda` a horizontal strip of size `r`.
fn horizontal_strips(lambda: &[u32], r: u32) -> Vec<Vec<u32>> {
    fn go(lambda: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == lambda.len() + 1 {
            if left == 0 {
                let mut mu = cur.clone();
                while mu.last() == Some(&0) {
                    mu.pop();
                }
                out.push(mu);
            }
            return;
        }
        let base = lambda.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { base + left } else { lambda[i - 1].min(base + left) };
        for v in base..=cap {
            cur.push(v);
            go(lambda, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, r, &mut Vec::new(), &mut out);
    out
}

fn times_h(f: &Schur, r: u32) -> Schur {
    let mut out = Schur::new();
    for (lambda, &c) in f {
        for mu in horizontal_strips(lambda, r) {
            *out.entry(mu).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            // inserting the largest letter at k adds n - 1 - k inversions
            let sign = if (n - 1 - k).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// `s_alpha * s_beta` expanded in Schur functions.
pub fn pieri_product(alpha: &[u32], beta: &[u32]) -> Schur {
    let start: Schur = [(alpha.to_vec(), 1)].into_iter().collect();
    let l = beta.len();
    let mut cache: HashMap<Vec<u32>, Schur> = HashMap::new();
    let mut out = Schur::new();
    for (sigma, sign) in permutations(l) {
        let mut hs = Vec::with_capacity(l);
        let mut vanishes = false;
        for (i, &s) in sigma.iter().enumerate() {
            let k = beta[i] as i64 - i as i64 + s as i64;
            if k < 0 {
                vanishes = true;
                break;
            }
            if k > 0 {
                hs.push(k as u32);
            }
        }
        if vanishes {
            continue;
        }
        hs.sort_unstable();
        let term = cache.entry(hs.clone()).or_insert_with(|| hs.iter().fold(start.clone(), |f, &r| times_h(&f, r)));
        for (mu, &c) in term.iter() {
            *out.entry(mu.clone()).or_insert(0) += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let p = pieri_product(&[1], &[1]);
        assert_eq!(p, [(vec![2], 1), (vec![1, 1], 1)].into_iter().collect());
        let p = pieri_product(&[2, 1], &[2, 1]);
        assert_eq!(p[&vec![3, 2, 1]], 2);
        assert_eq!(p.values().sum::<i64>(), 8);
    }
}
