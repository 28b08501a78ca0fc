//! Kac and anti-Kac modules as `Λ(g_{∓1}) ⊗ L_0`, and simple modules as
//! their tops.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::gt::gl_irrep;
use super::linalg::{q, Q};
use super::module::{add_weights, is_odd, root, SparseMat, SuperModule};
use crate::error::{Error, Result};
use crate::weights::Weight;

/// `L_0(λ)` for `gl(m) ⊕ gl(1)`, placed in even degree of a gl(m|1)
/// module with zero odd action.
pub fn build_l0(m: usize, lam: &[i64]) -> Result<SuperModule> {
    if lam.len() != m + 1 || m < 1 {
        return Err(Error::InvalidWeight(format!("{lam:?} for m = {m}")));
    }
    if lam[..m].windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidWeight(format!("{lam:?} is not dominant")));
    }
    let g = gl_irrep(&lam[..m]);
    let dim = g.weights.len();
    let n = m + 1;
    let mut ops = vec![SparseMat::zero(dim, dim); n * n];
    for a in 0..m {
        for b in 0..m {
            ops[a * n + b] = g.ops[a * m + b].clone();
        }
    }
    for i in 0..dim {
        ops[m * n + m].push(i, i, q(lam[m]));
    }
    let weights = g
        .weights
        .into_iter()
        .map(|mut w| {
            w.push(lam[m]);
            w
        })
        .collect();
    Ok(SuperModule::new(m, weights, ops))
}

type Elt = Vec<((usize, usize), Q)>;

fn bracket(m: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> Elt {
    let mut out = Vec::new();
    if b == c {
        out.push(((a, d), Q::one()));
    }
    if d == a {
        let s = if is_odd(m, a, b) && is_odd(m, c, d) { Q::one() } else { -Q::one() };
        out.push(((c, b), s));
    }
    out
}

/// Sorts a word of anticommuting generators; `None` if a letter repeats.
fn normalize(word: &[usize]) -> Option<(bool, u32)> {
    let mut mask = 0u32;
    let mut neg = false;
    for (i, &x) in word.iter().enumerate() {
        if mask & (1 << x) != 0 {
            return None;
        }
        mask |= 1 << x;
        neg ^= word[i + 1..].iter().filter(|&&y| y < x).count() % 2 == 1;
    }
    Some((neg, mask))
}

fn word_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

type Combo = BTreeMap<(u32, usize), Q>;

fn add_to(c: &mut Combo, key: (u32, usize), v: Q) {
    if v.is_zero() {
        return;
    }
    let e = c.entry(key).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        c.remove(&key);
    }
}

struct Induced<'a> {
    m: usize,
    l0: &'a SuperModule,
    free: Vec<(usize, usize)>,
}

impl Induced<'_> {
    fn free_index(&self, e: (usize, usize)) -> usize {
        self.free.iter().position(|&f| f == e).expect("bracket stays in the free part")
    }

    /// Prepends free generator `k` to every term.
    fn prepend(&self, k: usize, c: &Combo) -> Combo {
        let mut out = Combo::new();
        for (&(mask, j), v) in c {
            let mut w = vec![k];
            w.extend(word_of(mask));
            if let Some((neg, nm)) = normalize(&w) {
                add_to(&mut out, (nm, j), if neg { -v.clone() } else { v.clone() });
            }
        }
        out
    }

    fn apply(&self, x: (usize, usize), word: &[usize], j: usize) -> Combo {
        let m = self.m;
        let mut out = Combo::new();
        if let Some(k) = self.free.iter().position(|&f| f == x) {
            let mut w = vec![k];
            w.extend_from_slice(word);
            if let Some((neg, mask)) = normalize(&w) {
                add_to(&mut out, (mask, j), if neg { -Q::one() } else { Q::one() });
            }
            return out;
        }
        if !is_odd(m, x.0, x.1) {
            for (pos, &f) in word.iter().enumerate() {
                for (e, c) in bracket(m, x, self.free[f]) {
                    let mut w = word.to_vec();
                    w[pos] = self.free_index(e);
                    if let Some((neg, mask)) = normalize(&w) {
                        add_to(&mut out, (mask, j), if neg { -c.clone() } else { c });
                    }
                }
            }
            let (mask, neg) = match normalize(word) {
                Some((neg, mask)) => (mask, neg),
                None => return out,
            };
            for (i, c) in self.l0.op(x.0, x.1).column(j) {
                add_to(&mut out, (mask, *i), if neg { -c.clone() } else { c.clone() });
            }
            return out;
        }
        // odd element that kills L_0
        let Some((&f0, rest)) = word.split_first() else {
            return out;
        };
        for (e, c) in bracket(m, x, self.free[f0]) {
            for (key, v) in self.apply(e, rest, j) {
                add_to(&mut out, key, v * &c);
            }
        }
        let inner = self.apply(x, rest, j);
        for (key, v) in self.prepend(f0, &inner) {
            add_to(&mut out, key, -v);
        }
        out
    }

    fn build(&self) -> SuperModule {
        let m = self.m;
        let n = m + 1;
        let d0 = self.l0.dim();
        let masks: Vec<u32> = (0..1u32 << m).collect();
        let index = |mask: u32, j: usize| mask as usize * d0 + j;
        let dim = masks.len() * d0;
        let mut weights = Vec::with_capacity(dim);
        for &mask in &masks {
            let shift = word_of(mask)
                .into_iter()
                .fold(vec![0; n], |acc, k| add_weights(&acc, &root(m, self.free[k].0, self.free[k].1)));
            for j in 0..d0 {
                weights.push(add_weights(&self.l0.weights[j], &shift));
            }
        }
        let mut ops = vec![SparseMat::zero(dim, dim); n * n];
        for a in 0..n {
            for b in 0..n {
                for &mask in &masks {
                    let word = word_of(mask);
                    for j in 0..d0 {
                        for ((nm, i), v) in self.apply((a, b), &word, j) {
                            ops[a * n + b].push(index(mask, j), index(nm, i), v);
                        }
                    }
                }
            }
        }
        SuperModule::new(m, weights, ops)
    }
}

fn check_rank(w: &Weight) -> Result<()> {
    if !(2..=3).contains(&w.m) {
        return Err(Error::UnsupportedRank(w.m));
    }
    Ok(())
}

/// `K(λ) = Λ(g_{-1}) ⊗ L_0(λ)`.
pub fn kac_module(w: &Weight) -> Result<SuperModule> {
    check_rank(w)?;
    let l0 = build_l0(w.m, &w.full())?;
    let m = w.m;
    Ok(Induced {
        m,
        l0: &l0,
        free: (0..m).map(|i| (m, i)).collect(),
    }
    .build())
}

/// `Λ(g_{+1}) ⊗ L_0(μ)` induced from `g_0 ⊕ g_{-1}`.
pub fn induced_from_below(m: usize, mu: &[i64]) -> Result<SuperModule> {
    let l0 = build_l0(m, mu)?;
    Ok(Induced {
        m,
        l0: &l0,
        free: (0..m).map(|i| (i, m)).collect(),
    }
    .build())
}

pub fn irreducible(w: &Weight) -> Result<SuperModule> {
    let k = kac_module(w)?;
    let rad = k.radical_of_highest_weight();
    Ok(k.quotient(&rad))
}

/// g_0-highest weight of the `g_{-1}`-invariants of a simple module.
pub fn bottom_component(l: &SuperModule) -> Option<Vec<i64>> {
    let m = l.m;
    let mut best = None;
    for w in l.spaces().keys() {
        let d = l.space_dim(w);
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for i in 0..m {
            let imgs: Vec<Vec<Q>> = super::linalg::identity(d)
                .iter()
                .map(|v| l.apply_local(m, i, w, v).map_or_else(Vec::new, |(_, u)| u))
                .collect();
            let len = imgs.first().map_or(0, Vec::len);
            for k in 0..len {
                rows.push(imgs.iter().map(|x| x[k].clone()).collect());
            }
        }
        if super::linalg::rank(&rows, d) < d {
            best = Some(w.clone());
        }
    }
    best
}

/// The anti-Kac module whose top is `L(w)`.
pub fn antikac_module(w: &Weight) -> Result<SuperModule> {
    let l = irreducible(w)?;
    let mu = bottom_component(&l).ok_or_else(|| Error::Oracle("no g_{-1}-invariants".into()))?;
    induced_from_below(w.m, &mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl_tensor::weyl_dim;

    fn w(even: &[i64], odd: i64) -> Weight {
        Weight::new(even.to_vec(), odd).unwrap()
    }

    #[test]
    fn l0_examples() {
        assert_eq!(build_l0(2, &[0, 0, 0]).unwrap().dim(), 1);
        assert_eq!(build_l0(2, &[1, 0, 0]).unwrap().dim(), 2);
        assert_eq!(build_l0(3, &[2, 1, 0, 0]).unwrap().dim(), 8);
        assert!(build_l0(2, &[0, 1, 0]).is_err());
    }

    #[test]
    fn kac_modules_are_modules() {
        for x in [w(&[0, 0], 0), w(&[2, 0], -1), w(&[1, 1], 3)] {
            let k = kac_module(&x).unwrap();
            k.check_brackets().unwrap();
            assert_eq!(k.sdim(), 0);
            assert_eq!(k.dim(), 4 * build_l0(2, &x.full()).unwrap().dim());
        }
        let k = kac_module(&w(&[1, 0, 0], 0)).unwrap();
        k.check_brackets().unwrap();
        assert_eq!(k.dim(), 24);
    }

    #[test]
    fn trivial_kac_module() {
        let k = kac_module(&w(&[0, 0], 0)).unwrap();
        let rad = k.radical_of_highest_weight();
        assert_eq!(rad.dim(), 3);
        let l = k.quotient(&rad);
        assert_eq!(l.dim(), 1);
        let r = k.restrict(&rad);
        assert_eq!(r.top_weight().unwrap(), &vec![0, -1, 1]);
    }

    #[test]
    fn typical_kac_is_simple() {
        let x = w(&[1, 0], 5);
        assert!(!x.is_atypical());
        assert_eq!(kac_module(&x).unwrap().radical_of_highest_weight().dim(), 0);
    }

    #[test]
    fn simple_sdim_matches_core() {
        for x in [w(&[0, 0], 0), w(&[1, 0], 0), w(&[2, 1], -1), w(&[1, 1], -1), w(&[0, 0, 0], 0), w(&[1, 1, 1], -1), w(&[2, 0, 0], -1), w(&[1, 1], -2)] {
            let l = irreducible(&x).unwrap();
            l.check_brackets().unwrap();
            let core = x.core().unwrap();
            let expect = weyl_dim(&core);
            assert_eq!(num_bigint::BigUint::from(l.sdim().unsigned_abs()), expect, "{x}");
            let a_b = crate::indecomposables::berezin_charge(&x).unwrap();
            assert_eq!(l.sdim().signum(), if a_b % 2 == 0 { 1 } else { -1 }, "{x}");
        }
    }

    #[test]
    fn antikac_has_requested_top() {
        let x = w(&[0, 0], 0);
        let k = antikac_module(&x).unwrap();
        k.check_brackets().unwrap();
        assert_eq!(k.sdim(), 0);
        assert_eq!(k.dim(), 4);
    }
}
