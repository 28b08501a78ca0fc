//! Suites backed by explicit matrix modules.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckConfig, PropertyReport, Tally};
use crate::ds::ds_of;
use crate::error::Result;
use crate::gl_tensor::weyl_dim;
use crate::indecomposables::{t_shift, BlockId, IndecompLabel, Kind};
use crate::oracle::decompose::{composition_factors_of, decompose, SimpleCache};
use crate::oracle::{decompose_tensor, ds_matrix, irreducible, kac_module, module_of_label};
use crate::quotient::{omega, tensor_quotient, QuotientObject, Summand};
use crate::weights::Weight;

fn w(even: &[i64], odd: i64) -> Weight {
    Weight::new(even.to_vec(), odd).expect("dominant")
}

/// Ten atypical and ten typical gl(2|1) weights with small even part.
fn sample_m2(rng: &mut ChaCha8Rng) -> Vec<Weight> {
    let (mut aty, mut typ) = (Vec::new(), Vec::new());
    while aty.len() < 10 || typ.len() < 10 {
        let a = rng.gen_range(-2..=2);
        let b = a - rng.gen_range(0..=2);
        let x = w(&[a, b], rng.gen_range(-4..=4));
        let bucket = if x.is_atypical() { &mut aty } else { &mut typ };
        if bucket.len() < 10 && !bucket.contains(&x) {
            bucket.push(x);
        }
    }
    aty.extend(typ);
    aty
}

fn spot_m3() -> Vec<Weight> {
    vec![w(&[0, 0, 0], 0), w(&[1, 0, 0], 0), w(&[1, 1, 1], -1), w(&[2, 0, 0], -1), w(&[1, 0, 0], 3)]
}

pub fn oracle_suite(cfg: &CheckConfig) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut weights = sample_m2(&mut rng);
    weights.extend(spot_m3());
    let mut simple_kac = Tally::new("(a) K irreducible iff typical");
    let mut length_two = Tally::new("(b) K has factors L, L(T^-)");
    let mut sdim_kac = Tally::new("(c) sdim K = 0");
    let mut ds_single = Tally::new("(d) DS of a simple module is one core piece");
    let mut sdim_simple = Tally::new("(e) |sdim L| = dim of the core");
    let mut cache = SimpleCache::default();
    for x in &weights {
        let r: Result<()> = (|| {
            let k = kac_module(x)?;
            let irreducible_kac = k.radical_of_highest_weight().dim() == 0;
            simple_kac.check(irreducible_kac != x.is_atypical(), || format!("{x}"));
            sdim_kac.check(k.sdim() == 0, || format!("{x}: sdim {}", k.sdim()));
            if !x.is_atypical() {
                return Ok(());
            }
            let factors = composition_factors_of(&k.character(), &mut cache)?;
            let want: BTreeMap<Vec<i64>, u64> = [(x.full(), 1), (t_shift(x, -1)?.full(), 1)].into_iter().collect();
            length_two.check(factors == want, || format!("{x}: {factors:?}"));
            let l = irreducible(x)?;
            let got = ds_matrix(&l)?;
            let label = IndecompLabel::irr(x)?;
            let one_piece = got.pieces.len() == 1 && got.pieces.values().all(|&n| n == 1);
            ds_single.check(one_piece && got == ds_of(&label), || format!("{x}: {got:?}"));
            let core = weyl_dim(&x.core()?);
            sdim_simple.check(BigUint::from(l.sdim().unsigned_abs()) == core, || {
                format!("{x}: sdim {} vs {core}", l.sdim())
            });
            Ok(())
        })();
        if let Err(e) = r {
            simple_kac.check(false, || format!("{x}: {e}"));
        }
    }

    let mut zigzags = Tally::new("explicit length-three zigzags are identified");
    let labels = [
        (vec![0], Kind::Roof(-2, 1)),
        (vec![0], Kind::Bottom(-2, 1)),
        (vec![1], Kind::Bottom(-1, 2)),
        (vec![-1, 1], Kind::Roof(-3, 0)),
    ];
    for (cs, kind) in labels {
        let x = IndecompLabel::new(BlockId::new(cs).expect("crosses"), kind, 0).expect("label");
        let r: Result<bool> = (|| {
            let v = module_of_label(&x)?;
            let blocks = decompose(&v, cfg.oracle_dim_bound, &mut rng)?;
            Ok(blocks.len() == 1 && blocks[0].copies == 1 && blocks[0].summand == Summand::Atypical(x.clone()))
        })();
        zigzags.check_result(r, || format!("{x}"));
    }
    vec![
        simple_kac.finish(),
        length_two.finish(),
        sdim_kac.finish(),
        ds_single.finish(),
        sdim_simple.finish(),
        zigzags.finish(),
    ]
}

/// Image of `L(x)` in the quotient: zero for typical weights.
fn omega_simple(x: &Weight) -> Result<QuotientObject> {
    if !x.is_atypical() {
        return Ok(QuotientObject::zero());
    }
    QuotientObject::simple(IndecompLabel::irr(x)?)
}

pub fn functoriality_pool() -> Vec<Weight> {
    vec![
        w(&[0, 0], 0),
        w(&[1, 0], 0),
        w(&[0, -1], 1),
        w(&[1, 1], -1),
        w(&[2, 0], 0),
        w(&[0, 0], -1),
        w(&[2, 1], -1),
        w(&[3, -1], 1),
        w(&[2, -1], 1),
        w(&[1, -1], 1),
        w(&[1, 0], 5),
        w(&[0, 0], 2),
    ]
}

pub fn functoriality(cfg: &CheckConfig) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pool = functoriality_pool();
    let mut pairs: Vec<(usize, usize)> = (0..pool.len()).flat_map(|i| (i..pool.len()).map(move |j| (i, j))).collect();
    pairs.shuffle(&mut rng);
    let mut t = Tally::new("omega(decompose(a ⊗ b)) = tensor_quotient");
    let mut count = Tally::new("at least 20 pairs within the bound");
    let mut done = 0;
    for (i, j) in pairs {
        if done == 24 {
            break;
        }
        let (x, y) = (&pool[i], &pool[j]);
        let r: Result<Option<bool>> = (|| {
            let (a, b) = (irreducible(x)?, irreducible(y)?);
            if a.dim() * b.dim() > cfg.oracle_dim_bound {
                return Ok(None);
            }
            let got = omega(&decompose_tensor(&a, &b, cfg.oracle_dim_bound, &mut rng)?);
            let want = tensor_quotient(&omega_simple(x)?, &omega_simple(y)?)?;
            Ok(Some(got == want))
        })();
        match r {
            Ok(None) => continue,
            Ok(Some(ok)) => t.check(ok, || format!("L{x} ⊗ L{y}")),
            Err(e) => t.check(false, || format!("L{x} ⊗ L{y}: {e}")),
        }
        done += 1;
    }
    count.check(done >= 20, || format!("only {done} pairs"));
    vec![t.finish(), count.finish()]
}
