//! Driving a path of a connected crystal back to `π_λ`.

use num_traits::One;

use crate::cartan::{cover_label, RootIndex};
use crate::error::{Error, Result};
use crate::lspath::{LSPath, Op};
use crate::orbit::StarOrbit;

pub const STEP_CAP: usize = 100_000;

/// Leftmost index with `|p_j| = 1`, if the orbit has one.
pub fn unit_index(orbit: &StarOrbit) -> Option<i64> {
    let s = orbit.canonical_index();
    let can = orbit.canonical();
    // canonical weight (p_{s+1}, -p_s)
    if (-&can.c2).is_one() {
        Some(s)
    } else if can.c1.is_one() {
        Some(s + 1)
    } else {
        None
    }
}

/// A list of `e_i^max` / `f_i^max` applications taking `path` to `π_λ`.
///
/// No junction of a path can straddle the unit index `j0`, so every path
/// has all directions `>= j0` or all `<= j0 - 1`. On the upper side the
/// leading direction is lowered by `e^max` until the path is straight at
/// `x_{j0} λ`; on the lower side the trailing direction is raised by `f^max`
/// until it is straight at `x_{j0-1} λ`. The straight path is then moved to
/// `x_0 λ`.
pub fn reach_pi_lambda(path: &LSPath) -> Result<Vec<(Op, RootIndex)>> {
    let j0 = unit_index(path.orbit()).ok_or_else(|| {
        Error::NotApplicableForm(format!(
            "the orbit of {} has no weight with a coordinate of absolute value 1",
            path.lambda()
        ))
    })?;
    let mut ops = Vec::new();
    let mut cur = path.clone();
    let target = if cur.iota() >= j0 { j0 } else { j0 - 1 };
    drive(&mut cur, target, &mut ops)?;
    drive(&mut cur, 0, &mut ops)?;
    Ok(ops)
}

fn drive(cur: &mut LSPath, target: i64, ops: &mut Vec<(Op, RootIndex)>) -> Result<()> {
    loop {
        if ops.len() >= STEP_CAP {
            return Err(Error::NonTermination(STEP_CAP));
        }
        let (op, i) = if cur.iota() > target {
            (Op::E, cover_label(cur.iota()))
        } else if cur.kappa() < target {
            (Op::F, cover_label(cur.kappa() + 1))
        } else {
            return Ok(());
        };
        let before = cur.clone();
        while let Some(next) = cur.try_apply(op, i)? {
            *cur = next;
        }
        if *cur == before {
            return Err(Error::InternalInvariant(format!(
                "{op:?}_{i}^max fixed {before:?} while driving toward {target}"
            )));
        }
        ops.push((op, i));
    }
}

/// Replay a list of maximal applications.
pub fn replay(path: &LSPath, ops: &[(Op, RootIndex)]) -> Result<LSPath> {
    let mut cur = path.clone();
    for &(op, i) in ops {
        while let Some(next) = cur.try_apply(op, i)? {
            cur = next;
        }
    }
    Ok(cur)
}
