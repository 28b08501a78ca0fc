//! Independent reference computations for the integration tests.
#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use superq::quotient::Sl21Zigzag;

pub type Schur = BTreeMap<Vec<u32>, i64>;

pub fn conjugate(p: &[u32]) -> Vec<u32> {
    let n = p.first().copied().unwrap_or(0);
    (1..=n).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

/// Partitions `mu ⊇ lambda` with `mu / lambda` a vertical strip of size `r`.
fn vertical_strips(lambda: &[u32], r: u32) -> Vec<Vec<u32>> {
    // a vertical strip of lambda is a horizontal strip of the conjugate
    let c = conjugate(lambda);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(c: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == c.len() + 1 {
            if left == 0 {
                let mut mu = cur.clone();
                while mu.last() == Some(&0) {
                    mu.pop();
                }
                out.push(conjugate(&mu));
            }
            return;
        }
        let base = c.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { base + left } else { c[i - 1].min(base + left) };
        for v in base..=cap {
            cur.push(v);
            go(c, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    go(&c, 0, r, &mut cur, &mut out);
    out
}

fn times_e(f: &Schur, r: u32) -> Schur {
    let mut out = Schur::new();
    for (lambda, &c) in f {
        for mu in vertical_strips(lambda, r) {
            *out.entry(mu).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `s_alpha * s_beta` through the dual Jacobi–Trudi identity
/// `s_beta = det(e_{beta'_i - i + j})` and the Pieri rule for `e_r`.
pub fn schur_product(alpha: &[u32], beta: &[u32]) -> Schur {
    let bc = conjugate(beta);
    let l = bc.len();
    let mut out = Schur::new();
    let mut perm: Vec<usize> = (0..l).collect();
    let start: Schur = [(alpha.to_vec(), 1)].into_iter().collect();
    // Heap's algorithm; sign flips with every swap
    let mut c = vec![0usize; l];
    let mut sign = 1i64;
    let cache: RefCell<HashMap<Vec<u32>, Schur>> = RefCell::new(HashMap::new());
    let visit = |perm: &[usize], sign: i64, out: &mut Schur| {
        let mut es = Vec::with_capacity(l);
        for (i, &s) in perm.iter().enumerate() {
            let k = bc[i] as i64 - i as i64 + s as i64;
            if k < 0 {
                return;
            }
            if k > 0 {
                es.push(k as u32);
            }
        }
        es.sort_unstable();
        let mut cache = cache.borrow_mut();
        let f = cache
            .entry(es.clone())
            .or_insert_with(|| es.iter().fold(start.clone(), |f, &r| times_e(&f, r)));
        for (mu, &v) in f.iter() {
            *out.entry(mu.clone()).or_insert(0) += sign * v;
        }
    };
    visit(&perm, sign, &mut out);
    let mut i = 0;
    while i < l {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(&perm, sign, &mut out);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// The four sl(2|1) product rules, written out case by case.
pub fn sl21_table(x: Sl21Zigzag, y: Sl21Zigzag) -> Sl21Zigzag {
    let (p1, p2) = (x.p, y.p);
    let r = match (x.bar, y.bar) {
        (false, false) => Sl21Zigzag::z(p1 + p2, x.j + y.j),
        (true, true) => Sl21Zigzag::zbar(p1 + p2, x.j + y.j),
        (false, true) if p1 <= p2 => Sl21Zigzag::zbar(p2 - p1, x.j + y.j - p1 as i64),
        (false, true) => Sl21Zigzag::z(p1 - p2, x.j + y.j - p2 as i64),
        (true, false) => return sl21_table(y, x),
    };
    r.canonical()
}

/// All sl(2|1) zigzag names with `p <= pmax`, `|j| <= jmax`.
pub fn sl21_names(pmax: u32, jmax: i64) -> Vec<Sl21Zigzag> {
    let mut v = Vec::new();
    for p in 0..=pmax {
        for j in -jmax..=jmax {
            v.push(Sl21Zigzag::z(p, j));
            if p > 0 {
                v.push(Sl21Zigzag::zbar(p, j));
            }
        }
    }
    v
}

pub fn partitions_up_to(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in 0..=n {
        go(k, k, &mut Vec::new(), &mut out);
    }
    out
}

pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    partitions_up_to(n).into_iter().filter(|p| p.iter().sum::<u32>() == n).collect()
}
