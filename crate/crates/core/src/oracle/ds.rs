//! Explicit `V_x = ker ρ(x) / im ρ(x)` with its grading and gl(m-1)
//! decomposition.

use std::collections::BTreeMap;

use super::gt::character;
use super::linalg::{identity, rank, Q};
use super::module::{add_weights, root, SuperModule};
use crate::ds::GradedGlObject;
use crate::error::{Error, Result};
use crate::gl_tensor::RationalWeight;

/// Dimension of `ker x / im x` in each weight, for `x = E_ab` odd.
fn cohomology_character(v: &SuperModule, a: usize, b: usize) -> BTreeMap<Vec<i64>, u64> {
    let alpha = root(v.m, a, b);
    let neg: Vec<i64> = alpha.iter().map(|x| -x).collect();
    let matrix_rank = |w: &Vec<i64>| -> usize {
        let d = v.space_dim(w);
        let imgs: Vec<Vec<Q>> = identity(d)
            .iter()
            .map(|e| v.apply_local(a, b, w, e).map_or_else(Vec::new, |(_, u)| u))
            .collect();
        let len = imgs.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Q>> = (0..len).map(|k| imgs.iter().map(|x| x[k].clone()).collect()).collect();
        rank(&rows, d)
    };
    let mut out = BTreeMap::new();
    for w in v.spaces().keys() {
        let kernel = v.space_dim(w) - matrix_rank(w);
        let src = add_weights(w, &neg);
        let image = if v.space_dim(&src) > 0 { matrix_rank(&src) } else { 0 };
        if kernel > image {
            out.insert(w.clone(), (kernel - image) as u64);
        }
    }
    out
}

fn graded_pieces(m: usize, ch: BTreeMap<Vec<i64>, u64>) -> Result<GradedGlObject> {
    // degree -> gl(m-1) character
    let mut by_degree: BTreeMap<i64, BTreeMap<Vec<i64>, i64>> = BTreeMap::new();
    for (w, n) in ch {
        *by_degree
            .entry(-w[m])
            .or_default()
            .entry(w[..m - 1].to_vec())
            .or_insert(0) += n as i64;
    }
    let mut out = GradedGlObject::zero();
    for (deg, mut chr) in by_degree {
        loop {
            chr.retain(|_, n| *n != 0);
            let Some((top, &mult)) = chr.iter().next_back() else {
                break;
            };
            let top = top.clone();
            if mult < 0 || top.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::Oracle(format!("cohomology in degree {deg} is not a gl(m-1) character")));
            }
            for (w, k) in character(&top) {
                *chr.entry(w).or_insert(0) -= mult * k as i64;
            }
            let core = RationalWeight::new(top)?;
            out.add(deg, core, deg.rem_euclid(2) as u8, mult as u64);
        }
    }
    Ok(out)
}

/// `DS` with `x = E_{m,m+1}`.
pub fn ds_matrix(v: &SuperModule) -> Result<GradedGlObject> {
    graded_pieces(v.m, cohomology_character(v, v.m - 1, v.m))
}

/// `DS_σ` with `x = E_{m+1,m}`.
pub fn ds_sigma_matrix(v: &SuperModule) -> Result<GradedGlObject> {
    graded_pieces(v.m, cohomology_character(v, v.m, v.m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ds::{ds_of, ds_sigma_of};
    use crate::indecomposables::IndecompLabel;
    use crate::oracle::induced::{antikac_module, irreducible, kac_module};
    use crate::weights::Weight;

    fn w(even: &[i64], odd: i64) -> Weight {
        Weight::new(even.to_vec(), odd).unwrap()
    }

    #[test]
    fn unit_goes_to_unit() {
        let l = irreducible(&Weight::zero(2)).unwrap();
        assert_eq!(ds_matrix(&l).unwrap(), GradedGlObject::unit(1));
    }

    #[test]
    fn simple_modules_match_symbolic() {
        for x in [w(&[0, 0], 0), w(&[1, 1], -1), w(&[1, 0], 0), w(&[2, 1], -1), w(&[1, 1], -2), w(&[1, 0, 0], 0)] {
            let l = irreducible(&x).unwrap();
            let label = IndecompLabel::irr(&x).unwrap();
            assert_eq!(ds_matrix(&l).unwrap(), ds_of(&label), "{x}");
            assert_eq!(ds_sigma_matrix(&l).unwrap(), ds_sigma_of(&label), "{x}");
        }
    }

    #[test]
    fn kernels_of_kac_modules() {
        let x = w(&[0, 0], 0);
        assert!(!ds_matrix(&kac_module(&x).unwrap()).unwrap().is_zero());
        assert!(ds_sigma_matrix(&kac_module(&x).unwrap()).unwrap().is_zero());
        assert!(ds_matrix(&antikac_module(&x).unwrap()).unwrap().is_zero());
        assert!(!ds_sigma_matrix(&antikac_module(&x).unwrap()).unwrap().is_zero());
    }
}
