mod common;

use proptest::prelude::*;
use superq::ds::{ds_of, ds_sigma_of, graded_tensor, GradedGlObject};
use superq::gl_tensor::{lr_coefficient, tensor_rational, weyl_dim, Partition, RationalWeight};
use superq::indecomposables::{berezin_charge, superdimension};
use superq::quotient::{
    mixed_tensor_data, rho, rho_inverse, tensor_direct, tensor_quotient, weight_of_mixed_data, QuotientObject,
};
use superq::weights::{build_diagram, weight_from_diagram};
use superq::{BlockId, IndecompLabel, Kind, Weight};

fn weight(m: usize) -> impl Strategy<Value = Weight> {
    (prop::collection::vec(0i64..5, m), -6i64..6).prop_map(move |(steps, odd)| {
        // cumulative drops keep the even part dominant
        let mut even = Vec::with_capacity(m);
        let mut cur = 3;
        for s in steps {
            cur -= s;
            even.push(cur);
        }
        Weight::new(even, odd).unwrap()
    })
}

fn atypical(m: usize) -> impl Strategy<Value = Weight> {
    weight(m).prop_map(|w| {
        // move the circle onto the first cross
        let target = w.even[0];
        let odd = 1 - w.m as i64 - target;
        Weight::new(w.even, odd).unwrap()
    })
}

fn block(m: usize) -> impl Strategy<Value = BlockId> {
    prop::sample::subsequence((-4i64..=4).collect::<Vec<_>>(), m - 1).prop_map(|cs| BlockId::new(cs).unwrap())
}

fn odd_zigzag_in(b: BlockId) -> impl Strategy<Value = IndecompLabel> {
    (-5i64..=5, 0usize..4, any::<bool>(), 0u8..2).prop_map(move |(lo, k, roof, parity)| {
        let mut lo = lo;
        while !b.is_free(lo) {
            lo += 1;
        }
        let mut hi = lo;
        for _ in 0..2 * k {
            hi = b.step(hi, 1);
        }
        let kind = if roof { Kind::Roof(lo, hi) } else { Kind::Bottom(lo, hi) };
        IndecompLabel::new(b.clone(), kind, parity).unwrap()
    })
}

fn zigzag(m: usize) -> impl Strategy<Value = IndecompLabel> {
    block(m).prop_flat_map(odd_zigzag_in)
}

fn pair() -> impl Strategy<Value = (IndecompLabel, IndecompLabel)> {
    (2usize..=4).prop_flat_map(|m| (zigzag(m), zigzag(m)))
}

fn triple() -> impl Strategy<Value = (IndecompLabel, IndecompLabel, IndecompLabel)> {
    (2usize..=3).prop_flat_map(|m| (zigzag(m), zigzag(m), zigzag(m)))
}

fn q(x: &IndecompLabel) -> QuotientObject {
    QuotientObject::simple(x.clone()).unwrap()
}

fn ds_total(x: &QuotientObject, f: fn(&IndecompLabel) -> GradedGlObject) -> GradedGlObject {
    let mut g = GradedGlObject::zero();
    for (l, &n) in &x.summands {
        g.merge(&f(l).scaled(n));
    }
    g
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..4, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn diagram_shifts_with_berezin_twist(w in (2usize..=4).prop_flat_map(weight), k in -5i64..5) {
        prop_assert_eq!(build_diagram(&w.twist(k)), build_diagram(&w).shift(k));
    }

    #[test]
    fn diagram_round_trip(w in (2usize..=4).prop_flat_map(weight)) {
        prop_assert_eq!(weight_from_diagram(&build_diagram(&w), w.m).unwrap(), w);
    }

    #[test]
    fn mixed_tensor_reconstruction(w in (2usize..=4).prop_flat_map(atypical)) {
        let (a, bp) = mixed_tensor_data(&w).unwrap();
        prop_assert_eq!(weight_of_mixed_data(w.m, a, &bp).unwrap(), w.clone());
        prop_assert_eq!(berezin_charge(&w.twist(3)).unwrap(), a + 3);
    }

    #[test]
    fn rho_round_trip(x in (2usize..=4).prop_flat_map(zigzag)) {
        prop_assert_eq!(rho_inverse(&rho(&x).unwrap()), x);
    }

    #[test]
    fn paths_agree((x, y) in pair()) {
        prop_assert_eq!(tensor_direct(&q(&x), &q(&y)).unwrap(), tensor_quotient(&q(&x), &q(&y)).unwrap());
    }

    #[test]
    fn superdimension_is_multiplicative((x, y) in pair()) {
        let p = tensor_quotient(&q(&x), &q(&y)).unwrap();
        prop_assert_eq!(p.superdimension(), superdimension(&x) * superdimension(&y));
    }

    #[test]
    fn unit_and_symmetry((x, y) in pair()) {
        let one = QuotientObject::unit(x.m());
        prop_assert_eq!(tensor_direct(&q(&x), &one).unwrap(), q(&x));
        prop_assert_eq!(tensor_quotient(&q(&x), &q(&y)).unwrap(), tensor_quotient(&q(&y), &q(&x)).unwrap());
    }

    #[test]
    fn associativity((x, y, z) in triple()) {
        let l = tensor_quotient(&tensor_quotient(&q(&x), &q(&y)).unwrap(), &q(&z)).unwrap();
        let r = tensor_quotient(&q(&x), &tensor_quotient(&q(&y), &q(&z)).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn ds_kunneth((x, y) in pair()) {
        let p = tensor_direct(&q(&x), &q(&y)).unwrap();
        prop_assert_eq!(ds_total(&p, ds_of), graded_tensor(&ds_of(&x), &ds_of(&y)).unwrap());
        prop_assert_eq!(ds_total(&p, ds_sigma_of), graded_tensor(&ds_sigma_of(&x), &ds_sigma_of(&y)).unwrap());
    }

    #[test]
    fn ds_pair_separates((x, y) in (2usize..=3).prop_flat_map(|m| block(m).prop_flat_map(|b| (odd_zigzag_in(b.clone()), odd_zigzag_in(b)))))  {
        let same = ds_of(&x) == ds_of(&y) && ds_sigma_of(&x) == ds_sigma_of(&y);
        prop_assert_eq!(same, x == y);
    }

    #[test]
    fn lr_symmetric(a in partition(), b in partition()) {
        let n = a.size() + b.size();
        for nu in Partition::all(n, n as usize, n) {
            prop_assert_eq!(lr_coefficient(&a, &b, &nu), lr_coefficient(&b, &a, &nu));
        }
        let reference = common::schur_product(&a.parts, &b.parts);
        let total: i64 = reference.values().sum();
        let ours: u64 = Partition::all(n, n as usize, n).iter().map(|nu| lr_coefficient(&a, &b, nu)).sum();
        prop_assert_eq!(ours as i64, total);
    }

    #[test]
    fn gl_dimensions_multiply(a in prop::collection::vec(-3i64..4, 3), b in prop::collection::vec(-3i64..4, 3)) {
        let sort = |mut v: Vec<i64>| { v.sort_unstable_by(|x, y| y.cmp(x)); RationalWeight::new(v).unwrap() };
        let (a, b) = (sort(a), sort(b));
        let total: num_bigint::BigUint = tensor_rational(&a, &b)
            .unwrap()
            .iter()
            .map(|(nu, &c)| weyl_dim(nu) * c)
            .sum();
        prop_assert_eq!(total, weyl_dim(&a) * weyl_dim(&b));
    }
}
