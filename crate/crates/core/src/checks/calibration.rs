//! Conventions fixed against explicit gl(2|1) modules.

use serde::{Deserialize, Serialize};

use super::{PropertyReport, Tally};
use crate::ds::ds_of;
use crate::error::{Error, Result};
use crate::indecomposables::{berezin_charge, t_shift, IndecompLabel};
use crate::oracle::{antikac_module, ds_matrix, ds_sigma_matrix, irreducible, kac_module};
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationReport {
    pub schema: u32,
    /// Direction in which `T^-` moves the vee.
    pub t_minus: String,
    /// Top weight of the radical of `K(0,0|0)`.
    pub kac_socle: Vec<i64>,
    /// `t_shift((0,0|0), -1)`.
    pub t_minus_of_trivial: Vec<i64>,
    pub delta_unit: i64,
    pub delta_ber: i64,
    /// Which of the two filtrations `DS` resp. `DS_σ` annihilates.
    pub ds_kills: String,
    pub ds_sigma_kills: String,
    /// Sign of `sdim L(λ)` is `(-1)^{a_B(λ)}` on the sampled weights.
    pub sdim_sign_is_berezin_charge: bool,
}

fn single_degree(g: &crate::ds::GradedGlObject) -> Result<i64> {
    match g.degrees()[..] {
        [d] => Ok(d),
        _ => Err(Error::Oracle(format!("expected one degree, got {:?}", g.degrees()))),
    }
}

pub fn calibrate() -> Result<CalibrationReport> {
    let one = Weight::zero(2);
    let k = kac_module(&one)?;
    let socle = k.restrict(&k.radical_of_highest_weight());
    let kac_socle = socle.top_weight().cloned().unwrap_or_default();
    let t_minus_of_trivial = t_shift(&one, -1)?.full();
    let t_minus = if kac_socle == t_minus_of_trivial {
        "toward -infinity"
    } else if kac_socle == t_shift(&one, 1)?.full() {
        "toward +infinity"
    } else {
        "undetermined"
    };
    let delta_unit = single_degree(&ds_matrix(&irreducible(&one)?)?)?;
    let delta_ber = single_degree(&ds_matrix(&irreducible(&Weight::berezin(2))?)?)?;
    let kills = |kac: bool, anti: bool| match (kac, anti) {
        (true, false) => "kac",
        (false, true) => "antikac",
        (true, true) => "both",
        (false, false) => "neither",
    };
    let anti = antikac_module(&one)?;
    let ds_kills = kills(ds_matrix(&k)?.is_zero(), ds_matrix(&anti)?.is_zero());
    let ds_sigma_kills = kills(ds_sigma_matrix(&k)?.is_zero(), ds_sigma_matrix(&anti)?.is_zero());
    let mut sign_ok = true;
    for x in [
        Weight::new(vec![0, 0], 0)?,
        Weight::new(vec![1, 0], 0)?,
        Weight::new(vec![1, 1], -1)?,
        Weight::new(vec![2, 1], -1)?,
        Weight::new(vec![1, 1], -2)?,
    ] {
        let s = irreducible(&x)?.sdim();
        let a = berezin_charge(&x)?;
        sign_ok &= s.signum() == if a.rem_euclid(2) == 0 { 1 } else { -1 };
    }
    Ok(CalibrationReport {
        schema: 1,
        t_minus: t_minus.to_string(),
        kac_socle,
        t_minus_of_trivial,
        delta_unit,
        delta_ber,
        ds_kills: ds_kills.to_string(),
        ds_sigma_kills: ds_sigma_kills.to_string(),
        sdim_sign_is_berezin_charge: sign_ok,
    })
}

/// The calibration must agree with the conventions built into the
/// symbolic layer.
pub fn calibration_suite() -> Vec<PropertyReport> {
    let mut t = Tally::new("oracle calibration matches the symbolic conventions");
    match calibrate() {
        Ok(c) => {
            let ber = IndecompLabel::irr(&Weight::berezin(2)).expect("atypical");
            let symbolic_ber = ds_of(&ber).degrees();
            t.check(c.t_minus == "toward -infinity", || format!("T^- moves {}", c.t_minus));
            t.check(c.delta_unit == 0, || format!("unit in degree {}", c.delta_unit));
            t.check(symbolic_ber == vec![c.delta_ber], || {
                format!("Ber in degree {} vs symbolic {symbolic_ber:?}", c.delta_ber)
            });
            t.check(c.ds_kills == "antikac", || format!("DS kills {}", c.ds_kills));
            t.check(c.ds_sigma_kills == "kac", || format!("DS_sigma kills {}", c.ds_sigma_kills));
            t.check(c.sdim_sign_is_berezin_charge, || "sdim sign".into());
        }
        Err(e) => t.check(false, || e.to_string()),
    }
    vec![t.finish()]
}
