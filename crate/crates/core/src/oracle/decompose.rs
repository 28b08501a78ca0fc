//! Splitting an explicit module into isotypic blocks of indecomposables via
//! its endomorphism algebra, and naming each block.
//!
//! Module maps commute with `g_0`, so they are determined by their action on
//! the `g_0`-singular vectors. In a basis adapted to the `g_0`-decomposition
//! the commutant is a subalgebra of `⊕_μ Mat(k_μ)`, with `k_μ` the number of
//! copies of `L_0(μ)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::induced::irreducible;
use super::linalg::{charpoly, identity, inverse, matmul, matvec, q, rational_roots, trace, Echelon, Q};
use super::module::{is_odd, SuperModule};
use crate::error::{Error, Result};
use crate::indecomposables::{block_of, composition_factors, IndecompLabel, Kind};
use crate::quotient::{FormalObject, Summand};
use crate::weights::Weight;

/// Characters and dimensions of simple modules, built on demand.
#[derive(Default)]
pub struct SimpleCache {
    chars: HashMap<Vec<i64>, BTreeMap<Vec<i64>, u64>>,
}

impl SimpleCache {
    pub fn character(&mut self, w: &[i64]) -> Result<&BTreeMap<Vec<i64>, u64>> {
        if !self.chars.contains_key(w) {
            let l = irreducible(&to_weight(w)?)?;
            self.chars.insert(w.to_vec(), l.character());
        }
        Ok(&self.chars[w])
    }

    pub fn dim(&mut self, w: &[i64]) -> Result<u64> {
        Ok(self.character(w)?.values().sum())
    }
}

pub fn to_weight(w: &[i64]) -> Result<Weight> {
    let m = w.len() - 1;
    Weight::new(w[..m].to_vec(), w[m])
}

/// Composition factors of a module with the given character.
pub fn composition_factors_of(
    ch: &BTreeMap<Vec<i64>, u64>,
    cache: &mut SimpleCache,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let mut rest: BTreeMap<Vec<i64>, i64> = ch.iter().map(|(w, &n)| (w.clone(), n as i64)).collect();
    let mut out = BTreeMap::new();
    loop {
        rest.retain(|_, n| *n != 0);
        let Some((top, &mult)) = rest.iter().next_back() else {
            return Ok(out);
        };
        let top = top.clone();
        if mult < 0 {
            return Err(Error::Identification(format!("negative multiplicity at {top:?}")));
        }
        for (w, k) in cache.character(&top)? {
            *rest.entry(w.clone()).or_insert(0) -= mult * *k as i64;
        }
        out.insert(top, mult as u64);
    }
}

type Orbit = Vec<(Vec<i64>, Vec<Vec<Q>>)>;

struct Adapted {
    /// g_0-highest weights with their singular vectors (local coordinates).
    types: Vec<(Vec<i64>, Vec<Vec<Q>>)>,
    /// For each type: words as (weight, vectors u_w s_l for every copy l).
    orbits: Vec<Orbit>,
    /// Per weight: adapted basis labels (type, word, copy) and inverse change of basis.
    labels: BTreeMap<Vec<i64>, Vec<(usize, usize, usize)>>,
    inverses: BTreeMap<Vec<i64>, Vec<Vec<Q>>>,
}

fn singular_for(v: &SuperModule, w: &[i64], ops: &[(usize, usize)]) -> Vec<Vec<Q>> {
    let d = v.space_dim(w);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for &(a, b) in ops {
        let imgs: Vec<Vec<Q>> = identity(d)
            .iter()
            .map(|e| v.apply_local(a, b, w, e).map_or_else(Vec::new, |(_, u)| u))
            .collect();
        let len = imgs.first().map_or(0, Vec::len);
        for k in 0..len {
            rows.push(imgs.iter().map(|x| x[k].clone()).collect());
        }
    }
    super::linalg::nullspace(&rows, d)
}

fn adapted_basis(v: &SuperModule) -> Result<Adapted> {
    let m = v.m;
    let even_raise: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    let even_lower: Vec<(usize, usize)> = (0..m - 1).map(|i| (i + 1, i)).collect();
    let mut types = Vec::new();
    let mut orbits = Vec::new();
    for w in v.spaces().keys() {
        let s = singular_for(v, w, &even_raise);
        if s.is_empty() {
            continue;
        }
        // words from the first copy, replayed on the others
        let mut words: Vec<(Vec<i64>, Vec<Vec<Q>>)> = vec![(w.clone(), s.clone())];
        let mut spans: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
        spans.insert(w.clone(), Echelon::from_rows(v.space_dim(w), vec![s[0].clone()]));
        let mut i = 0;
        while i < words.len() {
            let (wt, vecs) = words[i].clone();
            for &(a, b) in &even_lower {
                let Some((t, u0)) = v.apply_local(a, b, &wt, &vecs[0]) else {
                    continue;
                };
                let e = spans.entry(t.clone()).or_insert_with(|| Echelon::new(v.space_dim(&t)));
                if e.insert(u0.clone()) {
                    let mut all = vec![u0];
                    for x in &vecs[1..] {
                        all.push(v.apply_local(a, b, &wt, x).expect("same weight space").1);
                    }
                    words.push((t, all));
                }
            }
            i += 1;
        }
        types.push((w.clone(), s));
        orbits.push(words);
    }
    let mut labels: BTreeMap<Vec<i64>, Vec<(usize, usize, usize)>> = BTreeMap::new();
    let mut columns: BTreeMap<Vec<i64>, Vec<Vec<Q>>> = BTreeMap::new();
    for (ti, words) in orbits.iter().enumerate() {
        for (wi, (wt, vecs)) in words.iter().enumerate() {
            for (l, x) in vecs.iter().enumerate() {
                labels.entry(wt.clone()).or_default().push((ti, wi, l));
                columns.entry(wt.clone()).or_default().push(x.clone());
            }
        }
    }
    let mut inverses = BTreeMap::new();
    for (wt, cols) in columns {
        let d = v.space_dim(&wt);
        if cols.len() != d {
            return Err(Error::Oracle(format!("g_0-adapted basis has wrong size at {wt:?}")));
        }
        // columns -> matrix with those columns
        let p: Vec<Vec<Q>> = (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let inv = inverse(&p).ok_or_else(|| Error::Oracle(format!("g_0-adapted basis singular at {wt:?}")))?;
        inverses.insert(wt, inv);
    }
    Ok(Adapted {
        types,
        orbits,
        labels,
        inverses,
    })
}

/// An endomorphism as one square matrix per g_0-type.
type Endo = Vec<Vec<Vec<Q>>>;

struct Commutant {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    basis: Vec<Endo>,
    free: Vec<usize>,
}

impl Commutant {
    fn flatten(&self, e: &Endo) -> Vec<Q> {
        e.iter().flat_map(|b| b.iter().flat_map(|r| r.iter().cloned())).collect()
    }

    fn unflatten(&self, x: &[Q]) -> Endo {
        self.sizes
            .iter()
            .zip(&self.offsets)
            .map(|(&k, &o)| (0..k).map(|i| x[o + i * k..o + (i + 1) * k].to_vec()).collect())
            .collect()
    }

    fn coords(&self, e: &Endo) -> Vec<Q> {
        let x = self.flatten(e);
        self.free.iter().map(|&f| x[f].clone()).collect()
    }

    fn combine(&self, c: &[Q]) -> Endo {
        let mut out: Endo = self.sizes.iter().map(|&k| vec![vec![Q::zero(); k]; k]).collect();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (ob, bb) in out.iter_mut().zip(b) {
                for (or, br) in ob.iter_mut().zip(bb) {
                    for (x, y) in or.iter_mut().zip(br) {
                        *x += ci * y;
                    }
                }
            }
        }
        out
    }
}

fn mul(a: &Endo, b: &Endo) -> Endo {
    a.iter().zip(b).map(|(x, y)| matmul(x, y)).collect()
}

fn tr(a: &Endo) -> Q {
    a.iter().map(|x| trace(x)).sum()
}

fn sub(a: &Endo, b: &Endo) -> Endo {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(r, s)| r.iter().zip(s).map(|(p, q)| p - q).collect()).collect())
        .collect()
}

fn commutant(v: &SuperModule, ad: &Adapted) -> Result<Commutant> {
    let m = v.m;
    let sizes: Vec<usize> = ad.types.iter().map(|(_, s)| s.len()).collect();
    let mut offsets = Vec::new();
    let mut total = 0;
    for &k in &sizes {
        offsets.push(total);
        total += k * k;
    }
    let var = |t: usize, l: usize, lp: usize| offsets[t] + l * sizes[t] + lp;
    let odd: Vec<(usize, usize)> = (0..m).flat_map(|i| [(i, m), (m, i)]).collect();
    let mut eqs = Echelon::new(total);
    for (t, (w, s)) in ad.types.iter().enumerate() {
        for &(a, b) in &odd {
            debug_assert!(is_odd(m, a, b));
            let images: Vec<(Vec<i64>, Vec<Q>)> = match s
                .iter()
                .map(|x| v.apply_local(a, b, w, x))
                .collect::<Option<Vec<_>>>()
            {
                Some(x) => x,
                None => continue,
            };
            let target = images[0].0.clone();
            let inv = &ad.inverses[&target];
            let labels = &ad.labels[&target];
            let coords: Vec<Vec<Q>> = images.iter().map(|(_, u)| matvec(inv, u)).collect();
            // position of (type, word, copy) among the labels at target
            let pos: HashMap<(usize, usize, usize), usize> =
                labels.iter().enumerate().map(|(i, &k)| (k, i)).collect();
            for j in 0..s.len() {
                for (row_idx, &(tp, wd, l)) in labels.iter().enumerate() {
                    let mut row = vec![Q::zero(); total];
                    // f(X s_j) at (tp, wd, l)
                    for lp in 0..sizes[tp] {
                        let a_coef = &coords[j][pos[&(tp, wd, lp)]];
                        if !a_coef.is_zero() {
                            row[var(tp, l, lp)] += a_coef;
                        }
                    }
                    // X f(s_j) at (tp, wd, l)
                    for (lpp, c) in coords.iter().enumerate() {
                        let b_coef = &c[row_idx];
                        if !b_coef.is_zero() {
                            row[var(t, lpp, j)] -= b_coef;
                        }
                    }
                    eqs.insert(row);
                }
            }
        }
    }
    let null = eqs.nullspace();
    let free = eqs.free_columns();
    let mut c = Commutant {
        sizes,
        offsets,
        basis: Vec::new(),
        free,
    };
    c.basis = null.iter().map(|x| c.unflatten(x)).collect();
    Ok(c)
}

/// One isotypic block: its copies' common label and multiplicity.
#[derive(Debug, Clone)]
pub struct Block {
    pub summand: Summand,
    pub copies: u64,
    pub character: BTreeMap<Vec<i64>, u64>,
}

pub fn decompose(v: &SuperModule, bound: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Block>> {
    if v.dim() > bound {
        return Err(Error::DimensionBound { dim: v.dim(), bound });
    }
    if v.dim() == 0 {
        return Ok(Vec::new());
    }
    let ad = adapted_basis(v)?;
    let comm = commutant(v, &ad)?;
    let r = comm.basis.len();
    // radical via the trace form
    let gram: Vec<Vec<Q>> = (0..r)
        .map(|i| (0..r).map(|j| tr(&mul(&comm.basis[i], &comm.basis[j]))).collect())
        .collect();
    let jac: Vec<Vec<Q>> = super::linalg::nullspace(&gram, r);
    let jac_span = Echelon::from_rows(r, jac.iter().cloned());
    // preimage of the center of E/J
    let mut conds = Echelon::new(r);
    for j in 0..r {
        let reduced: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                let c = sub(&mul(&comm.basis[i], &comm.basis[j]), &mul(&comm.basis[j], &comm.basis[i]));
                jac_span.reduce(&comm.coords(&c))
            })
            .collect();
        for k in 0..r {
            conds.insert(reduced.iter().map(|x| x[k].clone()).collect());
        }
    }
    let center = conds.nullspace();
    let s = center.len() - jac.len();
    let mut attempt = 0;
    let (eigs, spaces) = loop {
        attempt += 1;
        if attempt > 30 {
            return Err(Error::Oracle("could not separate isotypic blocks".into()));
        }
        let mut coeff = vec![Q::zero(); r];
        for z in &center {
            let k = q(rng.gen_range(-50..=50));
            for (x, y) in coeff.iter_mut().zip(z) {
                *x += &k * y;
            }
        }
        let z = comm.combine(&coeff);
        let mut eigs: Vec<Q> = Vec::new();
        let mut ok = true;
        for blk in &z {
            match rational_roots(&charpoly(blk)) {
                Some(rs) => {
                    for (x, _) in rs {
                        if !eigs.contains(&x) {
                            eigs.push(x);
                        }
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok || eigs.len() != s {
            continue;
        }
        eigs.sort();
        // generalized eigenspaces per type
        let spaces: Vec<Vec<Vec<Vec<Q>>>> = eigs
            .iter()
            .map(|c| {
                z.iter()
                    .map(|blk| {
                        let k = blk.len();
                        let mut shifted = blk.clone();
                        for (i, row) in shifted.iter_mut().enumerate() {
                            row[i] -= c;
                        }
                        let mut pow = identity(k);
                        for _ in 0..k {
                            pow = matmul(&pow, &shifted);
                        }
                        super::linalg::nullspace(&pow, k)
                    })
                    .collect()
            })
            .collect();
        break (eigs, spaces);
    };
    let _ = eigs;
    let mut cache = SimpleCache::default();
    let mut blocks = Vec::new();
    for (ci, sp) in spaces.iter().enumerate() {
        // projection onto this block along the others
        let idem: Endo = (0..comm.sizes.len())
            .map(|t| {
                let k = comm.sizes[t];
                let mut cols: Vec<Vec<Q>> = Vec::new();
                let mut mine: Vec<bool> = Vec::new();
                for (cj, other) in spaces.iter().enumerate() {
                    for x in &other[t] {
                        cols.push(x.clone());
                        mine.push(cj == ci);
                    }
                }
                if k == 0 {
                    return Vec::new();
                }
                let b: Vec<Vec<Q>> = (0..k).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
                let binv = inverse(&b).expect("generalized eigenspaces span");
                let d: Vec<Vec<Q>> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| if i == j && mine[i] { Q::one() } else { Q::zero() })
                            .collect()
                    })
                    .collect();
                matmul(&matmul(&b, &d), &binv)
            })
            .collect();
        let span_dim = |xs: &[Endo]| {
            let e = Echelon::from_rows(
                comm.offsets.last().map_or(0, |o| o + comm.sizes.last().map_or(0, |k| k * k)),
                xs.iter().map(|x| comm.flatten(&mul(&mul(&idem, x), &idem))),
            );
            e.rank()
        };
        let e_dim = span_dim(&comm.basis);
        let j_elems: Vec<Endo> = jac.iter().map(|c| comm.combine(c)).collect();
        let j_dim = span_dim(&j_elems);
        let n2 = e_dim - j_dim;
        let n = (n2 as f64).sqrt().round() as usize;
        if n * n != n2 || n == 0 {
            return Err(Error::Oracle(format!("block endomorphisms of dimension {n2} mod radical")));
        }
        // character of the block
        let mut ch: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (t, words) in ad.orbits.iter().enumerate() {
            let k = sp[t].len() as u64;
            if k == 0 {
                continue;
            }
            for (wt, _) in words {
                *ch.entry(wt.clone()).or_insert(0) += k;
            }
        }
        if ch.values().any(|x| x % n as u64 != 0) {
            return Err(Error::Oracle("block character not divisible by its multiplicity".into()));
        }
        let one: BTreeMap<Vec<i64>, u64> = ch.iter().map(|(w, x)| (w.clone(), x / n as u64)).collect();
        // block vectors in each weight space
        let mut block_space: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
        for (t, words) in ad.orbits.iter().enumerate() {
            for (wt, vecs) in words {
                let e = block_space
                    .entry(wt.clone())
                    .or_insert_with(|| Echelon::new(v.space_dim(wt)));
                for g in &sp[t] {
                    let mut x = vec![Q::zero(); v.space_dim(wt)];
                    for (gl, vl) in g.iter().zip(vecs) {
                        if gl.is_zero() {
                            continue;
                        }
                        for (xi, yi) in x.iter_mut().zip(vl) {
                            *xi += gl * yi;
                        }
                    }
                    e.insert(x);
                }
            }
        }
        let summand = identify(v, &one, &block_space, &mut cache)?;
        blocks.push(Block {
            summand,
            copies: n as u64,
            character: one,
        });
    }
    Ok(blocks)
}

/// Whether `L(t)` lies in the socle of the block spanned by `space`.
fn in_socle(
    v: &SuperModule,
    t: &[i64],
    space: &BTreeMap<Vec<i64>, Echelon>,
    cache: &mut SimpleCache,
) -> Result<bool> {
    let Some(e) = space.get(t) else {
        return Ok(false);
    };
    let sing = v.singular_vectors(t, Some(e));
    let Some(x) = sing.first() else {
        return Ok(false);
    };
    let generated = v.generate(&[(t.to_vec(), x.clone())]);
    Ok(generated.dim() as u64 == cache.dim(t)?)
}

fn identify(
    v: &SuperModule,
    ch: &BTreeMap<Vec<i64>, u64>,
    space: &BTreeMap<Vec<i64>, Echelon>,
    cache: &mut SimpleCache,
) -> Result<Summand> {
    let factors = composition_factors_of(ch, cache)?;
    let total: u64 = factors.values().sum();
    let first = to_weight(factors.keys().next().expect("nonzero block"))?;
    if !first.is_atypical() {
        if total == 1 {
            return Ok(Summand::Typical {
                weight: first,
                parity: 0,
            });
        }
        return Err(Error::Identification(format!("typical factor in a block of length {total}")));
    }
    let (block, _) = block_of(&first)?;
    let mut positions: BTreeMap<i64, u64> = BTreeMap::new();
    for (w, &k) in &factors {
        let (b, vee) = block_of(&to_weight(w)?)?;
        if b != block {
            return Err(Error::Identification("factors from different blocks".into()));
        }
        *positions.entry(vee).or_insert(0) += k;
    }
    let label = if positions.values().any(|&k| k > 1) {
        let (&v0, _) = positions.iter().find(|(_, &k)| k == 2).ok_or_else(|| {
            Error::Identification(format!("unexpected multiplicities {positions:?}"))
        })?;
        IndecompLabel::new(block.clone(), Kind::Proj(v0), 0)?
    } else {
        let ps: Vec<i64> = positions.keys().copied().collect();
        let (lo, hi) = (ps[0], ps[ps.len() - 1]);
        if ps.windows(2).any(|p| block.step(p[0], 1) != p[1]) {
            return Err(Error::Identification(format!("factors {ps:?} are not an interval")));
        }
        let len = ps.len();
        if len == 1 {
            IndecompLabel::new(block.clone(), Kind::Irr(lo), 0)?
        } else {
            let soc_lo = in_socle(v, &block.weight_at(lo).full(), space, cache)?;
            let roof = if len % 2 == 1 { !soc_lo } else { soc_lo };
            let kind = if roof { Kind::Roof(lo, hi) } else { Kind::Bottom(lo, hi) };
            let label = IndecompLabel::new(block.clone(), kind, 0)?;
            // every position must sit in the socle exactly when the label says so
            for (i, &p) in ps.iter().enumerate() {
                let expect = expected_socle(&label, i, len);
                let got = in_socle(v, &block.weight_at(p).full(), space, cache)?;
                if expect != got {
                    return Err(Error::Identification(format!("socle mismatch at {p} for {label}")));
                }
            }
            label
        }
    };
    let expect: BTreeMap<Vec<i64>, u64> =
        composition_factors(&label).iter().fold(BTreeMap::new(), |mut acc, &p| {
            *acc.entry(block.weight_at(p).full()).or_insert(0) += 1;
            acc
        });
    if expect != factors {
        return Err(Error::Identification(format!("{label} has different composition factors")));
    }
    Ok(Summand::Atypical(label))
}

/// Socle membership of the `i`-th free position of an interval label.
fn expected_socle(label: &IndecompLabel, i: usize, len: usize) -> bool {
    let bottom_like = match label.kind {
        Kind::Bottom(..) | Kind::AntiKac(_) => len % 2 == 1,
        Kind::Roof(..) | Kind::Kac(_) => len.is_multiple_of(2),
        _ => false,
    };
    i.is_multiple_of(2) == bottom_like
}

pub fn to_formal(blocks: &[Block]) -> FormalObject {
    let mut f = FormalObject::default();
    for b in blocks {
        f.add(b.summand.clone(), b.copies);
    }
    f
}

/// Tensor product of two explicit modules, decomposed.
pub fn decompose_tensor(
    a: &SuperModule,
    b: &SuperModule,
    bound: usize,
    rng: &mut ChaCha8Rng,
) -> Result<FormalObject> {
    if a.m != b.m {
        return Err(Error::RankMismatch(a.m, b.m));
    }
    let dim = a.dim() * b.dim();
    if dim > bound {
        return Err(Error::DimensionBound { dim, bound });
    }
    Ok(to_formal(&decompose(&a.tensor(b), bound, rng)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::induced::{antikac_module, kac_module};
    use rand::SeedableRng;

    fn w(even: &[i64], odd: i64) -> Weight {
        Weight::new(even.to_vec(), odd).unwrap()
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn simple_module_is_one_block() {
        let l = irreducible(&w(&[1, 0], 0)).unwrap();
        let blocks = decompose(&l, 4000, &mut rng()).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].copies, 1);
        assert_eq!(blocks[0].summand, Summand::Atypical(IndecompLabel::irr(&w(&[1, 0], 0)).unwrap()));
    }

    #[test]
    fn kac_and_antikac_identified() {
        let x = w(&[0, 0], 0);
        let (block, v) = block_of(&x).unwrap();
        let k = decompose(&kac_module(&x).unwrap(), 4000, &mut rng()).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].summand, Summand::Atypical(IndecompLabel::new(block.clone(), Kind::Kac(v), 0).unwrap()));
        let a = decompose(&antikac_module(&x).unwrap(), 4000, &mut rng()).unwrap();
        assert_eq!(a[0].summand, Summand::Atypical(IndecompLabel::new(block, Kind::AntiKac(v), 0).unwrap()));
    }

    #[test]
    fn direct_sum_multiplicity() {
        let l = irreducible(&w(&[1, 0], 0)).unwrap();
        let ll = l.direct_sum(&l);
        let blocks = decompose(&ll, 4000, &mut rng()).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].copies, 2);
    }

    #[test]
    fn standard_times_dual() {
        let v = irreducible(&Weight::standard(2)).unwrap();
        let d = irreducible(&Weight::dual_standard(2)).unwrap();
        let f = decompose_tensor(&v, &d, 4000, &mut rng()).unwrap();
        let sd: i64 = f
            .summands
            .iter()
            .map(|(s, &n)| match s {
                Summand::Atypical(x) => {
                    i64::try_from(crate::indecomposables::superdimension(x)).unwrap() * n as i64
                }
                Summand::Typical { .. } => 0,
            })
            .sum();
        assert_eq!(sd, v.sdim() * d.sdim());
        assert!(f.summands.values().sum::<u64>() >= 1);
    }
}
