//! Connectedness of `B(λ)` and the invariants separating its components.

pub mod connect;
pub mod explore;
pub mod qseq;
pub mod strata;

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, Weight};
use crate::orbit::{classify, OrbitKind};

pub use connect::{reach_pi_lambda, replay};
pub use explore::{explore, Check, ComponentReport, Exploration, ExploreConfig, Limits};
pub use qseq::{cmn_check, pi_n, QSequence};
pub use strata::{gap_seed, phi_projection, z_gap_class};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectedness {
    Connected,
    InfinitelyManyComponents,
    NotStar,
}

impl fmt::Display for Connectedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectedness::Connected => "Connected",
            Connectedness::InfinitelyManyComponents => "InfinitelyManyComponents",
            Connectedness::NotStar => "NotStar",
        })
    }
}

/// `Connected` iff the orbit of `λ` contains a weight with a coordinate of
/// absolute value `1`. The canonical representative `(p_{s+1}, -p_s)` holds
/// the smallest entry of the sequence, so looking there is enough.
pub fn decide_connectedness(cartan: CartanData, lambda: &Weight) -> Connectedness {
    let Ok(c) = classify(cartan, lambda) else {
        return Connectedness::NotStar;
    };
    if c.kind != OrbitKind::Star {
        return Connectedness::NotStar;
    }
    let can = c.canonical.expect("star orbits have a canonical weight");
    if can.c1.is_one() || (-can.c2).is_one() {
        Connectedness::Connected
    } else {
        Connectedness::InfinitelyManyComponents
    }
}
