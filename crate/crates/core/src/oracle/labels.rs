//! Explicit modules for indecomposable labels.
//!
//! Zigzags of length three are glued from a Kac and an anti-Kac module:
//! a roof is a pushout along the common socle, a bottom a pullback over the
//! common top.

use num_traits::Zero;

use super::induced::{antikac_module, irreducible, kac_module};
use super::linalg::Q;
use super::module::{SuperModule, WeightSubspace};
use crate::error::{Error, Result};
use crate::indecomposables::{IndecompLabel, Kind};

/// Local vector of the direct sum `a ⊕ b` at weight `w`.
fn pair(a: &SuperModule, b: &SuperModule, w: &[i64], x: Option<&[Q]>, y: Option<&[Q]>) -> Vec<Q> {
    let (da, db) = (a.space_dim(w), b.space_dim(w));
    let mut v = vec![Q::zero(); da + db];
    if let Some(x) = x {
        v[..da].clone_from_slice(x);
    }
    if let Some(y) = y {
        v[da..].clone_from_slice(y);
    }
    v
}

/// The simple submodule generated by a singular vector of weight `t`.
fn simple_sub(v: &SuperModule, t: &[i64]) -> Result<(Vec<Q>, WeightSubspace)> {
    let l = irreducible(&super::decompose::to_weight(t)?)?;
    for s in v.singular_vectors(t, None) {
        let sub = v.generate(&[(t.to_vec(), s.clone())]);
        if sub.dim() == l.dim() {
            return Ok((s, sub));
        }
    }
    Err(Error::Oracle(format!("no simple submodule of weight {t:?}")))
}

fn roof3(label: &IndecompLabel) -> Result<SuperModule> {
    let b = &label.block;
    let (lo, hi) = label.interval();
    let mid = b.step(lo, 1);
    let k = kac_module(&b.weight_at(hi))?;
    let a = antikac_module(&b.weight_at(lo))?;
    let t = b.weight_at(mid).full();
    let (s1, _) = simple_sub(&k, &t)?;
    let (s2, _) = simple_sub(&a, &t)?;
    let neg: Vec<Q> = s2.iter().map(|x| -x.clone()).collect();
    let d = k.direct_sum(&a);
    let glue = d.generate(&[(t.clone(), pair(&k, &a, &t, Some(&s1), Some(&neg)))]);
    Ok(d.quotient(&glue))
}

fn bottom3(label: &IndecompLabel) -> Result<SuperModule> {
    let b = &label.block;
    let (lo, _) = label.interval();
    let mid = b.step(lo, 1);
    let w = b.weight_at(mid);
    let k = kac_module(&w)?;
    let a = antikac_module(&w)?;
    let t = w.full();
    let rad_k = k.radical_of_highest_weight();
    let (_, rad_a) = simple_sub(&a, &b.weight_at(b.step(mid, 1)).full())?;
    let d = k.direct_sum(&a);
    let mut seeds = Vec::new();
    for (wt, e) in &rad_k.parts {
        for r in &e.rows {
            seeds.push((wt.clone(), pair(&k, &a, wt, Some(r), None)));
        }
    }
    for (wt, e) in &rad_a.parts {
        for r in &e.rows {
            seeds.push((wt.clone(), pair(&k, &a, wt, None, Some(r))));
        }
    }
    let h1 = k.singular_vectors(&t, None);
    let h1 = h1
        .iter()
        .find(|x| rad_k.parts.get(&t).is_none_or(|e| !e.contains(x)))
        .ok_or_else(|| Error::Oracle("Kac module has no top vector".into()))?;
    let h2 = (0..a.space_dim(&t))
        .map(|i| {
            let mut e = vec![Q::zero(); a.space_dim(&t)];
            e[i] = num_traits::One::one();
            e
        })
        .find(|x| rad_a.parts.get(&t).is_none_or(|e| !e.contains(x)))
        .ok_or_else(|| Error::Oracle("anti-Kac module has no top vector".into()))?;
    seeds.push((t.clone(), pair(&k, &a, &t, Some(h1), Some(&h2))));
    let p = d.generate(&seeds);
    Ok(d.restrict(&p))
}

/// An explicit module realizing `label`, for labels the oracle can build:
/// simple, Kac, anti-Kac and length-three zigzags, all without parity shift.
pub fn module_of_label(label: &IndecompLabel) -> Result<SuperModule> {
    if label.parity != 0 {
        return Err(Error::Unsupported("parity-shifted labels are not built explicitly".into()));
    }
    let b = &label.block;
    match label.kind {
        Kind::Irr(v) => irreducible(&b.weight_at(v)),
        Kind::Kac(v) => kac_module(&b.weight_at(v)),
        Kind::AntiKac(v) => antikac_module(&b.weight_at(v)),
        Kind::Roof(..) if label.length() == 3 => roof3(label),
        Kind::Bottom(..) if label.length() == 3 => bottom3(label),
        _ => Err(Error::Unsupported(format!("no explicit construction for {label}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indecomposables::BlockId;
    use crate::oracle::decompose::decompose;
    use crate::quotient::Summand;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn label(cs: &[i64], kind: Kind) -> IndecompLabel {
        IndecompLabel::new(BlockId::new(cs.to_vec()).unwrap(), kind, 0).unwrap()
    }

    #[test]
    fn zigzags_of_length_three_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for x in [
            label(&[0], Kind::Roof(-2, 1)),
            label(&[0], Kind::Bottom(-2, 1)),
            label(&[2], Kind::Roof(-1, 1)),
            label(&[-1, 1], Kind::Bottom(-3, 0)),
        ] {
            let v = module_of_label(&x).unwrap();
            v.check_brackets().unwrap();
            let blocks = decompose(&v, 4000, &mut rng).unwrap();
            assert_eq!(blocks.len(), 1, "{x}");
            assert_eq!(blocks[0].copies, 1);
            assert_eq!(blocks[0].summand, Summand::Atypical(x.clone()), "{x}");
        }
    }
}
