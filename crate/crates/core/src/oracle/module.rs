//! Finite-dimensional gl(m|1) weight modules given by explicit sparse
//! rational matrices.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};

use super::linalg::{is_zero_vec, Echelon, Q};
use crate::error::{Error, Result};

/// Column-major sparse matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<(usize, Q)>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            data: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut s = Self::zero(n, n);
        for i in 0..n {
            s.push(i, i, Q::one());
        }
        s
    }

    /// Adds `v` at `(row, col)`.
    pub fn push(&mut self, col: usize, row: usize, v: Q) {
        if v.is_zero() {
            return;
        }
        let c = &mut self.data[col];
        match c.iter_mut().find(|(r, _)| *r == row) {
            Some(e) => {
                e.1 += v;
                if e.1.is_zero() {
                    c.retain(|(r, _)| *r != row);
                }
            }
            None => c.push((row, v)),
        }
    }

    pub fn column(&self, col: usize) -> &[(usize, Q)] {
        &self.data[col]
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.data[j] {
                out[*i] += a * x;
            }
        }
        out
    }

    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        let mut out = SparseMat::zero(self.rows, other.cols);
        for j in 0..other.cols {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, b) in &other.data[j] {
                for (i, a) in &self.data[*k] {
                    *acc.entry(*i).or_insert_with(Q::zero) += a * b;
                }
            }
            out.data[j] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    /// `self + c * other`.
    pub fn add(&self, other: &SparseMat, c: &Q) -> SparseMat {
        let mut out = self.clone();
        for j in 0..other.cols {
            for (i, v) in &other.data[j] {
                out.push(j, *i, v * c);
            }
        }
        out
    }

    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).add(&other.mul(self), &-Q::one())
    }

    pub fn supercommutator(&self, other: &SparseMat, both_odd: bool) -> SparseMat {
        let sign = if both_odd { Q::one() } else { -Q::one() };
        self.mul(other).add(&other.mul(self), &sign)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.cols]; self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (i, v) in col {
                d[*i][j] = v.clone();
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }
}

pub fn is_odd(m: usize, a: usize, b: usize) -> bool {
    (a == m) != (b == m)
}

/// `(a, b)` pairs of the simple root vectors `E_{i,i+1}`, `E_{i+1,i}`.
pub fn simple_generators(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| [(i, i + 1), (i + 1, i)]).collect()
}

pub fn raising_simple(m: usize) -> Vec<(usize, usize)> {
    (0..m).map(|i| (i, i + 1)).collect()
}

/// Weight of `E_ab`.
pub fn root(m: usize, a: usize, b: usize) -> Vec<i64> {
    let mut r = vec![0; m + 1];
    r[a] += 1;
    r[b] -= 1;
    r
}

pub fn add_weights(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Per-weight subspace, in local coordinates of each weight space.
#[derive(Debug, Clone, Default)]
pub struct WeightSubspace {
    pub parts: BTreeMap<Vec<i64>, Echelon>,
}

impl WeightSubspace {
    pub fn dim(&self) -> usize {
        self.parts.values().map(Echelon::rank).sum()
    }
}

/// A gl(m|1)-module. The parity of a basis vector is the last weight
/// coordinate mod 2.
#[derive(Debug, Clone)]
pub struct SuperModule {
    pub m: usize,
    pub weights: Vec<Vec<i64>>,
    /// `E_ab` at index `a * (m + 1) + b`, zero-based.
    pub ops: Vec<SparseMat>,
    spaces: BTreeMap<Vec<i64>, Vec<usize>>,
    local: Vec<usize>,
}

impl SuperModule {
    pub fn new(m: usize, weights: Vec<Vec<i64>>, ops: Vec<SparseMat>) -> Self {
        let mut spaces: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        let mut local = vec![0; weights.len()];
        for (i, w) in weights.iter().enumerate() {
            let s = spaces.entry(w.clone()).or_default();
            local[i] = s.len();
            s.push(i);
        }
        SuperModule {
            m,
            weights,
            ops,
            spaces,
            local,
        }
    }

    pub fn n(&self) -> usize {
        self.m + 1
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn op(&self, a: usize, b: usize) -> &SparseMat {
        &self.ops[a * self.n() + b]
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.weights[i][self.m].rem_euclid(2) as u8
    }

    pub fn dim_even(&self) -> usize {
        (0..self.dim()).filter(|&i| self.parity(i) == 0).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn sdim(&self) -> i64 {
        self.dim_even() as i64 - self.dim_odd() as i64
    }

    pub fn spaces(&self) -> &BTreeMap<Vec<i64>, Vec<usize>> {
        &self.spaces
    }

    pub fn space_dim(&self, w: &[i64]) -> usize {
        self.spaces.get(w).map_or(0, Vec::len)
    }

    pub fn character(&self) -> BTreeMap<Vec<i64>, u64> {
        self.spaces.iter().map(|(w, v)| (w.clone(), v.len() as u64)).collect()
    }

    /// Lexicographically largest weight.
    pub fn top_weight(&self) -> Option<&Vec<i64>> {
        self.spaces.keys().next_back()
    }

    /// Embeds a local vector of weight space `w` into global coordinates.
    pub fn globalize(&self, w: &[i64], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (x, &i) in v.iter().zip(&self.spaces[w]) {
            out[i] = x.clone();
        }
        out
    }

    /// Applies `E_ab` to a local vector of weight `w`; returns the target
    /// weight and local vector, or `None` if the target space is empty.
    pub fn apply_local(&self, a: usize, b: usize, w: &[i64], v: &[Q]) -> Option<(Vec<i64>, Vec<Q>)> {
        let target = add_weights(w, &root(self.m, a, b));
        let tdim = self.space_dim(&target);
        if tdim == 0 {
            return None;
        }
        let op = self.op(a, b);
        let mut out = vec![Q::zero(); tdim];
        for (x, &j) in v.iter().zip(&self.spaces[w]) {
            if x.is_zero() {
                continue;
            }
            for (i, c) in op.column(j) {
                out[self.local[*i]] += c * x;
            }
        }
        Some((target, out))
    }

    /// Checks `[ρ(X), ρ(Y)] = ρ([X, Y])` on all basis pairs.
    pub fn check_brackets(&self) -> Result<()> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let p1 = is_odd(self.m, a, b);
                        let p2 = is_odd(self.m, c, d);
                        let lhs = self.op(a, b).supercommutator(self.op(c, d), p1 && p2);
                        let mut rhs = SparseMat::zero(self.dim(), self.dim());
                        if b == c {
                            rhs = rhs.add(self.op(a, d), &Q::one());
                        }
                        if d == a {
                            let s = if p1 && p2 { Q::one() } else { -Q::one() };
                            rhs = rhs.add(self.op(c, b), &s);
                        }
                        if lhs.to_dense() != rhs.to_dense() {
                            return Err(Error::Oracle(format!("bracket [E{a}{b}, E{c}{d}] fails")));
                        }
                    }
                }
            }
        }
        for (i, w) in self.weights.iter().enumerate() {
            for (k, &wk) in w.iter().enumerate().take(n) {
                let col = self.op(k, k).column(i);
                let ok = match col {
                    [] => wk == 0,
                    [(r, v)] => *r == i && *v == super::linalg::q(wk),
                    _ => false,
                };
                if !ok {
                    return Err(Error::Oracle(format!("vector {i} is not a weight vector")));
                }
            }
        }
        Ok(())
    }

    /// Submodule generated by weight vectors given in local coordinates.
    pub fn generate(&self, seeds: &[(Vec<i64>, Vec<Q>)]) -> WeightSubspace {
        let mut sub = WeightSubspace::default();
        let mut queue: VecDeque<(Vec<i64>, Vec<Q>)> = seeds.iter().cloned().collect();
        let gens = simple_generators(self.m);
        while let Some((w, v)) = queue.pop_front() {
            let e = sub
                .parts
                .entry(w.clone())
                .or_insert_with(|| Echelon::new(self.space_dim(&w)));
            if !e.insert(v.clone()) {
                continue;
            }
            for &(a, b) in &gens {
                if let Some((t, u)) = self.apply_local(a, b, &w, &v) {
                    if !is_zero_vec(&u) {
                        queue.push_back((t, u));
                    }
                }
            }
        }
        sub.parts.retain(|_, e| e.rank() > 0);
        sub
    }

    /// Largest submodule contained in `start`.
    pub fn largest_submodule_in(&self, start: WeightSubspace) -> WeightSubspace {
        let mut cur = start;
        let gens = simple_generators(self.m);
        loop {
            let mut changed = false;
            let mut next = WeightSubspace::default();
            for (w, e) in &cur.parts {
                // coefficient vectors c with every generator image of Σ c_i row_i in cur
                let mut constraints: Vec<Vec<Q>> = Vec::new();
                let mut images: Vec<Vec<Vec<Q>>> = vec![Vec::new(); e.rank()];
                for &(a, b) in &gens {
                    for (i, row) in e.rows.iter().enumerate() {
                        let img = match self.apply_local(a, b, w, row) {
                            Some((t, u)) => match cur.parts.get(&t) {
                                Some(te) => te.reduce(&u),
                                None => u,
                            },
                            None => Vec::new(),
                        };
                        images[i].push(img);
                    }
                }
                let blocks = gens.len();
                for g in 0..blocks {
                    let len = images.first().map_or(0, |x| x[g].len());
                    for k in 0..len {
                        constraints.push(images.iter().map(|x| x[g][k].clone()).collect());
                    }
                }
                let keep = super::linalg::nullspace(&constraints, e.rank());
                if keep.len() < e.rank() {
                    changed = true;
                }
                let mut ne = Echelon::new(e.ncols);
                for c in keep {
                    let mut v = vec![Q::zero(); e.ncols];
                    for (ci, row) in c.iter().zip(&e.rows) {
                        if ci.is_zero() {
                            continue;
                        }
                        for (x, y) in v.iter_mut().zip(row) {
                            *x += ci * y;
                        }
                    }
                    ne.insert(v);
                }
                if ne.rank() > 0 {
                    next.parts.insert(w.clone(), ne);
                }
            }
            cur = next;
            if !changed {
                return cur;
            }
        }
    }

    /// Maximal submodule of a module generated by its (one-dimensional)
    /// top weight space.
    pub fn radical_of_highest_weight(&self) -> WeightSubspace {
        let top = self.top_weight().cloned();
        let mut start = WeightSubspace::default();
        for (w, idx) in &self.spaces {
            if Some(w) == top.as_ref() {
                continue;
            }
            let d = idx.len();
            start.parts.insert(w.clone(), Echelon::from_rows(d, super::linalg::identity(d)));
        }
        self.largest_submodule_in(start)
    }

    pub fn quotient(&self, sub: &WeightSubspace) -> SuperModule {
        // new basis: free columns of each weight space
        let mut basis: Vec<(Vec<i64>, usize)> = Vec::new();
        let mut free_of: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (w, idx) in &self.spaces {
            let free = match sub.parts.get(w) {
                Some(e) => e.free_columns(),
                None => (0..idx.len()).collect(),
            };
            for &f in &free {
                basis.push((w.clone(), f));
            }
            free_of.insert(w.clone(), free);
        }
        let mut start_of: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        {
            let mut off = 0;
            for (w, free) in &free_of {
                start_of.insert(w.clone(), off);
                off += free.len();
            }
        }
        let dim = basis.len();
        let n = self.n();
        let mut ops = vec![SparseMat::zero(dim, dim); n * n];
        for (col, (w, f)) in basis.iter().enumerate() {
            let mut e = vec![Q::zero(); self.space_dim(w)];
            e[*f] = Q::one();
            for a in 0..n {
                for b in 0..n {
                    if let Some((t, u)) = self.apply_local(a, b, w, &e) {
                        let u = match sub.parts.get(&t) {
                            Some(te) => te.reduce(&u),
                            None => u,
                        };
                        for (k, &ff) in free_of[&t].iter().enumerate() {
                            if !u[ff].is_zero() {
                                ops[a * n + b].push(col, start_of[&t] + k, u[ff].clone());
                            }
                        }
                    }
                }
            }
        }
        SuperModule::new(self.m, basis.into_iter().map(|(w, _)| w).collect(), ops)
    }

    /// The submodule `sub` as a module in its own right.
    pub fn restrict(&self, sub: &WeightSubspace) -> SuperModule {
        let mut basis: Vec<(Vec<i64>, usize)> = Vec::new();
        let mut start_of: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (w, e) in &sub.parts {
            start_of.insert(w.clone(), basis.len());
            for r in 0..e.rank() {
                basis.push((w.clone(), r));
            }
        }
        let dim = basis.len();
        let n = self.n();
        let mut ops = vec![SparseMat::zero(dim, dim); n * n];
        for (col, (w, r)) in basis.iter().enumerate() {
            let v = &sub.parts[w].rows[*r];
            for a in 0..n {
                for b in 0..n {
                    if let Some((t, u)) = self.apply_local(a, b, w, v) {
                        if is_zero_vec(&u) {
                            continue;
                        }
                        let c = sub.parts[&t].coords(&u).expect("subspace is a submodule");
                        for (k, x) in c.into_iter().enumerate() {
                            ops[a * n + b].push(col, start_of[&t] + k, x);
                        }
                    }
                }
            }
        }
        SuperModule::new(self.m, basis.into_iter().map(|(w, _)| w).collect(), ops)
    }

    pub fn tensor(&self, other: &SuperModule) -> SuperModule {
        let (da, db) = (self.dim(), other.dim());
        let dim = da * db;
        let n = self.n();
        let mut weights = Vec::with_capacity(dim);
        for i in 0..da {
            for j in 0..db {
                weights.push(add_weights(&self.weights[i], &other.weights[j]));
            }
        }
        let mut ops = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let odd = is_odd(self.m, a, b);
                let (x, y) = (self.op(a, b), other.op(a, b));
                let mut s = SparseMat::zero(dim, dim);
                for i in 0..da {
                    let sign = if odd && self.parity(i) == 1 { -Q::one() } else { Q::one() };
                    for j in 0..db {
                        let col = i * db + j;
                        for (k, c) in x.column(i) {
                            s.push(col, k * db + j, c.clone());
                        }
                        for (l, c) in y.column(j) {
                            s.push(col, i * db + l, c * &sign);
                        }
                    }
                }
                ops.push(s);
            }
        }
        SuperModule::new(self.m, weights, ops)
    }

    pub fn direct_sum(&self, other: &SuperModule) -> SuperModule {
        let (da, db) = (self.dim(), other.dim());
        let n = self.n();
        let mut weights = self.weights.clone();
        weights.extend(other.weights.iter().cloned());
        let mut ops = Vec::with_capacity(n * n);
        for k in 0..n * n {
            let mut s = SparseMat::zero(da + db, da + db);
            for j in 0..da {
                for (i, c) in self.ops[k].column(j) {
                    s.push(j, *i, c.clone());
                }
            }
            for j in 0..db {
                for (i, c) in other.ops[k].column(j) {
                    s.push(da + j, da + *i, c.clone());
                }
            }
            ops.push(s);
        }
        SuperModule::new(self.m, weights, ops)
    }

    /// Local vectors of weight `w` killed by all simple raising operators.
    pub fn singular_vectors(&self, w: &[i64], within: Option<&Echelon>) -> Vec<Vec<Q>> {
        let d = self.space_dim(w);
        let basis: Vec<Vec<Q>> = match within {
            Some(e) => e.rows.clone(),
            None => super::linalg::identity(d),
        };
        let mut constraints: Vec<Vec<Q>> = Vec::new();
        for (a, b) in raising_simple(self.m) {
            let imgs: Vec<Vec<Q>> = basis
                .iter()
                .map(|v| self.apply_local(a, b, w, v).map_or_else(Vec::new, |(_, u)| u))
                .collect();
            let len = imgs.first().map_or(0, Vec::len);
            for k in 0..len {
                constraints.push(imgs.iter().map(|x| x[k].clone()).collect());
            }
        }
        super::linalg::nullspace(&constraints, basis.len())
            .into_iter()
            .map(|c| {
                let mut v = vec![Q::zero(); d];
                for (ci, row) in c.iter().zip(&basis) {
                    for (x, y) in v.iter_mut().zip(row) {
                        *x += ci * y;
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::linalg::q;

    /// The natural representation of gl(m|1).
    pub(crate) fn natural(m: usize) -> SuperModule {
        let n = m + 1;
        let weights = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
            .collect();
        let mut ops = vec![SparseMat::zero(n, n); n * n];
        for a in 0..n {
            for b in 0..n {
                ops[a * n + b].push(b, a, q(1));
            }
        }
        SuperModule::new(m, weights, ops)
    }

    #[test]
    fn natural_module_brackets() {
        for m in 2..4 {
            let v = natural(m);
            v.check_brackets().unwrap();
            assert_eq!(v.sdim(), m as i64 - 1);
        }
    }

    #[test]
    fn tensor_brackets_and_sdim() {
        let v = natural(2);
        let vv = v.tensor(&v);
        vv.check_brackets().unwrap();
        assert_eq!(vv.sdim(), 1);
        assert_eq!(vv.dim(), 9);
    }

    #[test]
    fn generated_submodule_is_everything_for_simple() {
        let v = natural(2);
        let w = v.weights[2].clone();
        let sub = v.generate(&[(w, vec![q(1)])]);
        assert_eq!(sub.dim(), 3);
        assert_eq!(v.radical_of_highest_weight().dim(), 0);
    }

    #[test]
    fn quotient_and_restriction() {
        let v = natural(2);
        let vv = v.tensor(&v);
        let top = vv.top_weight().unwrap().clone();
        let sub = vv.generate(&[(top, vec![q(1)])]);
        let s = vv.restrict(&sub);
        s.check_brackets().unwrap();
        let quo = vv.quotient(&sub);
        quo.check_brackets().unwrap();
        assert_eq!(s.dim() + quo.dim(), 9);
    }
}
