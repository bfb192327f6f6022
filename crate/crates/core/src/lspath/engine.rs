//! Root operators on piecewise-linear paths given as lists of segments.
//!
//! A segment runs in direction `x_dir λ` for `len` units of time. The total
//! time is arbitrary, so the same code serves single paths (total 1) and
//! concatenations of `m` factors (total `m`, one unit per factor). Each
//! segment carries a tag naming the factor it belongs to.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cartan::{reflect_index, RootIndex};
use crate::error::{Error, Result};
use crate::orbit::StarOrbit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub dir: i64,
    pub len: BigRational,
    pub tag: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    E,
    F,
}

/// Corner data of `H_i(t) = ⟨π(t), α_i^∨⟩`.
#[derive(Clone, Debug)]
pub struct Profile {
    pub times: Vec<BigRational>,
    pub heights: Vec<BigRational>,
    pub slopes: Vec<BigInt>,
}

impl Profile {
    pub fn min(&self) -> &BigRational {
        self.heights.iter().min().expect("at least one corner")
    }

    pub fn end(&self) -> &BigRational {
        self.heights.last().expect("at least one corner")
    }
}

pub fn profile(orbit: &StarOrbit, segs: &[Segment], i: RootIndex) -> Profile {
    let mut times = Vec::with_capacity(segs.len() + 1);
    let mut heights = Vec::with_capacity(segs.len() + 1);
    let mut slopes = Vec::with_capacity(segs.len());
    let mut t = BigRational::zero();
    let mut h = BigRational::zero();
    times.push(t.clone());
    heights.push(h.clone());
    for s in segs {
        let slope = orbit.pairing(s.dir, i);
        h += &s.len * BigRational::from_integer(slope.clone());
        t += &s.len;
        times.push(t.clone());
        heights.push(h.clone());
        slopes.push(slope);
    }
    Profile { times, heights, slopes }
}

/// Integral minimum of the profile, or an invariant error.
pub fn integral_min(p: &Profile) -> Result<BigInt> {
    let m = p.min();
    if !m.is_integer() {
        return Err(Error::InternalInvariant(format!("minimum {m} of H is not an integer")));
    }
    Ok(m.to_integer())
}

/// The reflection window `[t0, t1]` of `e_i` or `f_i`, or `None` when the
/// operator gives `0`.
pub fn window(p: &Profile, op: Op) -> Result<Option<(BigRational, BigRational)>> {
    let min = BigRational::from_integer(integral_min(p)?);
    let target = &min + BigRational::from_integer(1.into());
    let h = &p.heights;
    match op {
        Op::E => {
            if min.is_zero() {
                return Ok(None);
            }
            let c1 = h.iter().position(|x| *x == min).expect("minimum attained");
            let c = (0..c1)
                .rev()
                .find(|&c| h[c] >= target)
                .expect("H(0) = 0 lies above the minimum");
            let slope = BigRational::from_integer(p.slopes[c].clone());
            if !slope.is_negative() {
                return Err(Error::InternalInvariant(
                    "e-window entered on a non-decreasing segment".into(),
                ));
            }
            let t0 = &p.times[c] + (&target - &h[c]) / slope;
            Ok(Some((t0, p.times[c1].clone())))
        }
        Op::F => {
            if (p.end() - &min).is_zero() {
                return Ok(None);
            }
            let c0 = h.iter().rposition(|x| *x == min).expect("minimum attained");
            let c = ((c0 + 1)..h.len())
                .find(|&c| h[c] >= target)
                .expect("H(end) lies above the minimum");
            let slope = BigRational::from_integer(p.slopes[c - 1].clone());
            if !slope.is_positive() {
                return Err(Error::InternalInvariant(
                    "f-window entered on a non-increasing segment".into(),
                ));
            }
            let t1 = &p.times[c - 1] + (&target - &h[c - 1]) / slope;
            Ok(Some((p.times[c0].clone(), t1)))
        }
    }
}

/// Apply `e_i` or `f_i`. The result is not merged; a segment straddling a
/// window end is split there.
pub fn apply(orbit: &StarOrbit, segs: &[Segment], i: RootIndex, op: Op) -> Result<Option<Vec<Segment>>> {
    let prof = profile(orbit, segs, i);
    let Some((t0, t1)) = window(&prof, op)? else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(segs.len() + 2);
    for (k, s) in segs.iter().enumerate() {
        let start = &prof.times[k];
        let end = &prof.times[k + 1];
        let mut cuts = vec![start.clone()];
        for t in [&t0, &t1] {
            if t > start && t < end {
                cuts.push(t.clone());
            }
        }
        cuts.push(end.clone());
        for w in cuts.windows(2) {
            let inside = w[0] >= t0 && w[1] <= t1;
            let dir = if inside { reflect_index(s.dir, i) } else { s.dir };
            out.push(Segment {
                dir,
                len: &w[1] - &w[0],
                tag: s.tag,
            });
        }
    }
    Ok(Some(out))
}

/// Merge consecutive segments with equal direction and tag, dropping empty ones.
pub fn merge(segs: Vec<Segment>) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::with_capacity(segs.len());
    for s in segs {
        if s.len.is_zero() {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.dir == s.dir && last.tag == s.tag => last.len += s.len,
            _ => out.push(s),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanData, Weight};
    use crate::numeric::rational;

    fn seg(dir: i64, len: BigRational) -> Segment {
        Segment { dir, len, tag: 0 }
    }

    #[test]
    fn straight_path_windows() {
        let o = StarOrbit::new(CartanData::new(2, 3).unwrap(), Weight::from_i64(1, -1)).unwrap();
        let segs = vec![seg(0, rational(1, 1))];
        let p2 = profile(&o, &segs, RootIndex::Two);
        assert_eq!(p2.heights, vec![rational(0, 1), rational(-1, 1)]);
        let (t0, t1) = window(&p2, Op::E).unwrap().unwrap();
        assert_eq!((t0, t1), (rational(0, 1), rational(1, 1)));
        assert!(window(&p2, Op::F).unwrap().is_none());
        let out = apply(&o, &segs, RootIndex::Two, Op::E).unwrap().unwrap();
        assert_eq!(out, vec![seg(-1, rational(1, 1))]);
        let out = apply(&o, &segs, RootIndex::One, Op::F).unwrap().unwrap();
        assert_eq!(out, vec![seg(1, rational(1, 1))]);
    }

    #[test]
    fn interior_cut() {
        // λ = 3Λ1 - 2Λ2 on a = 4, b = 3: H_2 on the straight path falls to -2,
        // so e_2 reflects only the last half.
        let o = StarOrbit::new(CartanData::new(4, 3).unwrap(), Weight::from_i64(3, -2)).unwrap();
        let segs = vec![seg(0, rational(1, 1))];
        let out = apply(&o, &segs, RootIndex::Two, Op::E).unwrap().unwrap();
        assert_eq!(out, vec![seg(0, rational(1, 2)), seg(-1, rational(1, 2))]);
    }

    #[test]
    fn merging() {
        let segs = vec![
            seg(2, rational(1, 4)),
            seg(2, rational(1, 4)),
            seg(1, rational(0, 1)),
            seg(0, rational(1, 2)),
        ];
        assert_eq!(merge(segs), vec![seg(2, rational(1, 2)), seg(0, rational(1, 2))]);
    }
}
