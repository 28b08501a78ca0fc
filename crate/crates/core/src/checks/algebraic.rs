//! Suites that need no explicit modules.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::pieri::pieri_product;
use super::{random_blocks, random_odd_zigzag, PropertyReport, Tally};
use crate::ds::{ds_of, ds_sigma_of, graded_tensor, GradedGlObject};
use crate::error::Result;
use crate::gl_tensor::{lr_coefficient, Partition, RationalWeight};
use crate::indecomposables::{superdimension, BlockId, IndecompLabel, Kind};
use crate::quotient::{
    is_negligible, rho, rho_inverse, sl21_rule, tensor_direct, tensor_quotient, QuotientObject, Sl21Zigzag, Triple,
};

fn q(x: &IndecompLabel) -> QuotientObject {
    QuotientObject::simple(x.clone()).expect("odd zigzags are not negligible")
}

fn single(x: &QuotientObject) -> Option<&IndecompLabel> {
    match x.summands.iter().collect::<Vec<_>>()[..] {
        [(l, 1)] => Some(l),
        _ => None,
    }
}

pub fn sl21_rules() -> Vec<PropertyReport> {
    let mut names = Vec::new();
    for p in 0..=3 {
        for j in -3..=3 {
            names.push(Sl21Zigzag::z(p, j));
            if p > 0 {
                names.push(Sl21Zigzag::zbar(p, j));
            }
        }
    }
    let mut rules = Tally::new("four product rules");
    let mut chars = Tally::new("Gl(1) x Gl(1) character addition");
    let mut paths = Tally::new("direct = quotient");
    for &x in &names {
        for &y in &names {
            let (a, b) = (q(&x.representative()), q(&y.representative()));
            let direct = tensor_direct(&a, &b);
            let got = direct
                .as_ref()
                .ok()
                .and_then(single)
                .and_then(|l| Sl21Zigzag::of_label(l).ok())
                .map(Sl21Zigzag::canonical);
            let want = sl21_rule(x, y).canonical();
            rules.check(got == Some(want), || format!("{x} ⊗ {y}: got {got:?}, rule gives {want}"));
            let (d1, w1) = x.charges();
            let (d2, w2) = y.charges();
            chars.check(got.map(Sl21Zigzag::charges) == Some((d1 + d2, w1 + w2)), || {
                format!("{x} ⊗ {y}: charges of {got:?}")
            });
            let quotient = tensor_quotient(&a, &b);
            paths.check_result(
                direct.and_then(|d| Ok(d == quotient?)),
                || format!("{x} ⊗ {y}"),
            );
        }
    }
    vec![rules.finish(), chars.finish(), paths.finish()]
}

pub fn lr_oracle() -> Vec<PropertyReport> {
    let mut t = Tally::new("LR tableaux = iterated Pieri");
    let parts: Vec<Partition> = (0..=6u32).flat_map(|n| Partition::all(n, n as usize, n)).collect();
    for a in &parts {
        for b in &parts {
            let pieri = pieri_product(&a.parts, &b.parts);
            let n = a.size() + b.size();
            for nu in Partition::all(n, n as usize, n) {
                let want = pieri.get(&nu.parts).copied().unwrap_or(0);
                let got = lr_coefficient(a, b, &nu) as i64;
                t.check(got == want, || format!("c^{:?}_{:?},{:?}: {got} vs {want}", nu.parts, a.parts, b.parts));
            }
        }
    }
    vec![t.finish()]
}

pub fn path_agreement(seed: u64) -> Vec<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::new("tensor_direct = tensor_quotient");
    let mut cover = Tally::new("at least five blocks per rank");
    for m in 2..=4 {
        let blocks = random_blocks(&mut rng, m, 3, 6);
        let mut used = HashSet::new();
        for _ in 0..200 {
            let bx = &blocks[rng.gen_range(0..blocks.len())];
            let by = &blocks[rng.gen_range(0..blocks.len())];
            used.insert(bx.clone());
            used.insert(by.clone());
            let x = random_odd_zigzag(&mut rng, bx, 7);
            let y = random_odd_zigzag(&mut rng, by, 7);
            let r: Result<bool> = (|| Ok(tensor_direct(&q(&x), &q(&y))? == tensor_quotient(&q(&x), &q(&y))?))();
            t.check_result(r, || format!("{x} ⊗ {y}"));
        }
        cover.check(used.len() >= 5, || format!("m = {m}: {} blocks", used.len()));
    }
    vec![t.finish(), cover.finish()]
}

fn cores(k: usize, r: i64) -> Vec<RationalWeight> {
    if k == 0 {
        return vec![RationalWeight { parts: Vec::new() }];
    }
    let mut out = Vec::new();
    for c in cores(k - 1, r) {
        for x in -r..=c.parts.last().copied().unwrap_or(r) {
            let mut parts = c.parts.clone();
            parts.push(x);
            out.push(RationalWeight { parts });
        }
    }
    out
}

pub fn bijectivity() -> Vec<PropertyReport> {
    let mut fwd = Tally::new("rho(rho_inverse(t)) = t on the window");
    let mut inj = Tally::new("rho_inverse is injective on the window");
    let mut back = Tally::new("rho_inverse(rho(x)) = x on odd zigzags");
    for m in 2..=3 {
        let mut seen = HashSet::new();
        let mut count = 0;
        for core in cores(m - 1, 4) {
            for d in -4..=4 {
                for b in -4..=4 {
                    for parity in 0..=1 {
                        let t = Triple {
                            d,
                            b,
                            core: core.clone(),
                            parity,
                        };
                        let x = rho_inverse(&t);
                        count += 1;
                        seen.insert(x.clone());
                        let ok = !is_negligible(&x) && rho(&x).ok().as_ref() == Some(&t);
                        fwd.check(ok, || format!("{t} -> {x}"));
                    }
                }
            }
        }
        inj.check(seen.len() == count, || format!("m = {m}: {} labels for {count} triples", seen.len()));
        let pool: Vec<i64> = (-3..=3).collect();
        let blocks: Vec<BlockId> = if m == 2 {
            pool.iter().map(|&c| BlockId::new(vec![c]).unwrap()).collect()
        } else {
            pool.iter()
                .flat_map(|&a| pool.iter().filter(move |&&b| b > a).map(move |&b| BlockId::new(vec![a, b]).unwrap()))
                .collect()
        };
        for block in &blocks {
            for lo in block.free_between(-6, 6) {
                let mut hi = lo;
                for len in (1..=7).step_by(2) {
                    if len > 1 {
                        hi = block.step(block.step(hi, 1), 1);
                    }
                    for kind in [Kind::Roof(lo, hi), Kind::Bottom(lo, hi)] {
                        for parity in 0..=1 {
                            let x = IndecompLabel::new(block.clone(), kind, parity).unwrap();
                            let ok = rho(&x).map(|t| rho_inverse(&t) == x).unwrap_or(false);
                            back.check(ok, || format!("{x}"));
                        }
                    }
                }
            }
        }
    }
    vec![fwd.finish(), inj.finish(), back.finish()]
}

fn ds_sum(x: &QuotientObject, f: fn(&IndecompLabel) -> GradedGlObject) -> GradedGlObject {
    let mut g = GradedGlObject::zero();
    for (l, &n) in &x.summands {
        g.merge(&f(l).scaled(n));
    }
    g
}

/// A label close to `x`: same block, nearby interval, possibly other shape
/// or parity.
fn neighbour(rng: &mut ChaCha8Rng, x: &IndecompLabel) -> IndecompLabel {
    let b = &x.block;
    let (lo, hi) = x.interval();
    let lo = if rng.gen_bool(0.5) { lo } else { b.step(lo, if rng.gen_bool(0.5) { 1 } else { -1 }) };
    let hi = if rng.gen_bool(0.5) { hi } else { b.step(hi, if rng.gen_bool(0.5) { 1 } else { -1 }) };
    let (lo, hi) = (lo.min(hi), lo.max(hi));
    let mut hi2 = lo;
    while hi2 < hi {
        hi2 = b.step(b.step(hi2, 1), 1);
    }
    let kind = if rng.gen_bool(0.5) { Kind::Roof(lo, hi2) } else { Kind::Bottom(lo, hi2) };
    IndecompLabel::new(b.clone(), kind, rng.gen_range(0..=1)).expect("free endpoints")
}

pub fn invariants(seed: u64) -> Vec<PropertyReport> {
    const CASES: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let blocks: Vec<Vec<BlockId>> = (2..=3).map(|m| random_blocks(&mut rng, m, 3, 5)).collect();
    let draw = |rng: &mut ChaCha8Rng, m: usize| {
        let bs = &blocks[m - 2];
        let b = &bs[rng.gen_range(0..bs.len())];
        random_odd_zigzag(rng, b, 5)
    };

    let mut sdim = Tally::new("sdim multiplicativity");
    let mut comm = Tally::new("tensor_quotient commutativity");
    let mut assoc = Tally::new("tensor_quotient associativity");
    let mut twist = Tally::new("Berezin twist equivariance of rho");
    let mut kunneth = Tally::new("DS Kunneth on labels");
    let mut fibers = Tally::new("(DS, DS_sigma) separates labels");
    for i in 0..CASES {
        let m = 2 + i % 2;
        let (x, y, z) = (draw(&mut rng, m), draw(&mut rng, m), draw(&mut rng, m));
        let (qx, qy, qz) = (q(&x), q(&y), q(&z));

        let r: Result<bool> = (|| {
            let p = tensor_quotient(&qx, &qy)?;
            Ok(p.superdimension() == superdimension(&x) * superdimension(&y)
                && tensor_direct(&qx, &qy)?.superdimension() == p.superdimension())
        })();
        sdim.check_result(r, || format!("{x} ⊗ {y}"));

        let r: Result<bool> = (|| Ok(tensor_quotient(&qx, &qy)? == tensor_quotient(&qy, &qx)?))();
        comm.check_result(r, || format!("{x} ⊗ {y}"));

        let r: Result<bool> = (|| {
            let left = tensor_quotient(&tensor_quotient(&qx, &qy)?, &qz)?;
            let right = tensor_quotient(&qx, &tensor_quotient(&qy, &qz)?)?;
            Ok(left == right)
        })();
        assoc.check_result(r, || format!("({x} ⊗ {y}) ⊗ {z}"));

        let k = rng.gen_range(-4..=4);
        let r: Result<bool> = (|| {
            let t = rho(&x)?;
            let want = Triple {
                b: t.b + k,
                parity: ((t.parity as i64 + k).rem_euclid(2)) as u8,
                ..t
            };
            Ok(rho(&x.twist(k))? == want)
        })();
        twist.check_result(r, || format!("{x} twisted by {k}"));

        let r: Result<bool> = (|| {
            let p = tensor_quotient(&qx, &qy)?;
            Ok(ds_sum(&p, ds_of) == graded_tensor(&ds_of(&x), &ds_of(&y))?
                && ds_sum(&p, ds_sigma_of) == graded_tensor(&ds_sigma_of(&x), &ds_sigma_of(&y))?)
        })();
        kunneth.check_result(r, || format!("{x} ⊗ {y}"));

        let w = if rng.gen_bool(0.5) { neighbour(&mut rng, &x) } else { y.clone() };
        let same_data = ds_of(&x) == ds_of(&w) && ds_sigma_of(&x) == ds_sigma_of(&w);
        fibers.check(same_data == (x == w), || format!("{x} vs {w}"));
    }
    vec![sdim.finish(), comm.finish(), assoc.finish(), twist.finish(), kunneth.finish(), fibers.finish()]
}
