//! Dense exact linear algebra over Q.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Fully reduced row echelon form, grown one vector at a time.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub ncols: usize,
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Q>>>(ncols: usize, rows: I) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` with respect to `rows`, if `v` lies in the span.
    pub fn coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Basis of `{x : row · x = 0 for all rows}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Q::zero(); self.ncols];
                x[f] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }

    /// Indices of the non-pivot columns, i.e. coordinates of the quotient space.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }
}

pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    Echelon::from_rows(ncols, rows.iter().cloned()).nullspace()
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    Echelon::from_rows(ncols, rows.iter().cloned()).rank()
}

pub fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![Q::zero(); cols];
            for k in 0..inner {
                if row[k].is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += &row[k] * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn matvec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    (0..ncols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn trace(a: &[Vec<Q>]) -> Q {
    a.iter().enumerate().map(|(i, r)| r[i].clone()).sum()
}

pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut e = Echelon::new(2 * n);
    for (i, row) in a.iter().enumerate() {
        let mut r = row.clone();
        r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
        e.insert(r);
    }
    if e.rank() < n || e.pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut out = vec![Vec::new(); n];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        out[p] = row[n..].to_vec();
    }
    Some(out)
}

/// Characteristic polynomial `det(x - A)`, coefficients from degree 0 up.
pub fn charpoly(a: &[Vec<Q>]) -> Vec<Q> {
    let n = a.len();
    let mut c = vec![Q::zero(); n + 1];
    c[n] = Q::one();
    let mut mk = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = matmul(a, &mk);
        c[n - k] = -trace(&am) / q(k as i64);
    }
    c
}

pub fn poly_eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x - r)`; assumes `r` is a root.
fn deflate(p: &[Q], r: &Q) -> Vec<Q> {
    let n = p.len() - 1;
    let mut out = vec![Q::zero(); n];
    let mut carry = Q::zero();
    for i in (0..n).rev() {
        carry = &p[i + 1] + &carry * r;
        out[i] = carry.clone();
    }
    out
}

fn convergents(x: f64, max_den: i64) -> Vec<Q> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::from(1), BigInt::from(x.floor() as i64));
    let (mut k0, mut k1) = (BigInt::from(0), BigInt::from(1));
    out.push(Q::new(h1.clone(), k1.clone()));
    let mut frac = x - x.floor();
    for _ in 0..40 {
        if frac.abs() < 1e-12 {
            break;
        }
        let y = 1.0 / frac;
        let a = BigInt::from(y.floor() as i64);
        frac = y - y.floor();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > BigInt::from(max_den) {
            break;
        }
        out.push(Q::new(h2.clone(), k2.clone()));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    out
}

/// Approximate complex roots by the Durand–Kerner iteration.
fn approx_roots(p: &[f64]) -> Vec<(f64, f64)> {
    let n = p.len() - 1;
    let lead = p[n];
    let c: Vec<f64> = p.iter().map(|x| x / lead).collect();
    let eval = |z: (f64, f64)| {
        let mut acc = (0.0, 0.0);
        for &a in c.iter().rev() {
            acc = (acc.0 * z.0 - acc.1 * z.1 + a, acc.0 * z.1 + acc.1 * z.0);
        }
        acc
    };
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut zs: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            (bound * 0.9 * t.cos(), bound * 0.9 * t.sin())
        })
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let num = eval(zs[i]);
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    let d = (zs[i].0 - zs[j].0, zs[i].1 - zs[j].1);
                    den = (den.0 * d.0 - den.1 * d.1, den.0 * d.1 + den.1 * d.0);
                }
            }
            let dn = den.0 * den.0 + den.1 * den.1;
            if dn == 0.0 {
                continue;
            }
            let step = ((num.0 * den.0 + num.1 * den.1) / dn, (num.1 * den.0 - num.0 * den.1) / dn);
            zs[i] = (zs[i].0 - step.0, zs[i].1 - step.1);
            delta = delta.max(step.0.abs() + step.1.abs());
        }
        if delta < 1e-14 * bound {
            break;
        }
    }
    zs
}

/// All roots of `p` with multiplicities, provided every root is rational.
pub fn rational_roots(p: &[Q]) -> Option<Vec<(Q, usize)>> {
    let mut p: Vec<Q> = p.to_vec();
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    let mut out: Vec<(Q, usize)> = Vec::new();
    // exact zero roots first
    let mut zeros = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zeros += 1;
    }
    if zeros > 0 {
        out.push((Q::zero(), zeros));
    }
    while p.len() > 1 {
        let pf: Vec<f64> = p.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
        if pf.iter().any(|x| !x.is_finite()) {
            return None;
        }
        let approx = approx_roots(&pf);
        let mut found = None;
        let mut cands: Vec<(f64, f64)> = approx;
        cands.sort_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap_or(std::cmp::Ordering::Equal));
        'outer: for (re, _) in cands {
            for r in convergents(re, 10_000_000) {
                if poly_eval(&p, &r).is_zero() {
                    found = Some(r);
                    break 'outer;
                }
            }
        }
        let r = found?;
        let mut mult = 0;
        while p.len() > 1 && poly_eval(&p, &r).is_zero() {
            p = deflate(&p, &r);
            mult += 1;
        }
        match out.iter_mut().find(|(x, _)| *x == r) {
            Some(e) => e.1 += mult,
            None => out.push((r, mult)),
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Some(out)
}

pub fn abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn nullspace_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a, 3), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&matvec(&a, &ns[0])));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(matmul(&a, &inv), identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn charpoly_and_roots() {
        let a = m(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, -3]]);
        let p = charpoly(&a);
        assert_eq!(p, vec![q(12), q(-8), q(-1), q(1)]);
        assert_eq!(rational_roots(&p).unwrap(), vec![(q(-3), 1), (q(2), 2)]);
        let half = vec![q(-1), q(2)];
        assert_eq!(rational_roots(&half).unwrap(), vec![(Q::new(1.into(), 2.into()), 1)]);
        assert!(rational_roots(&[q(-2), q(0), q(1)]).is_none());
    }

    #[test]
    fn coords_in_span() {
        let e = Echelon::from_rows(3, m(&[&[1, 1, 0], &[0, 1, 1]]));
        let v = vec![q(2), q(5), q(3)];
        let c = e.coords(&v).unwrap();
        let back: Vec<Q> = (0..3).map(|j| &c[0] * &e.rows[0][j] + &c[1] * &e.rows[1][j]).collect();
        assert_eq!(back, v);
        assert!(e.coords(&[q(1), q(0), q(0)]).is_none());
    }
}
