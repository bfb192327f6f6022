//! Concatenations `π_1 ∗ ⋯ ∗ π_m` of LS paths of a common shape `μ`, and the
//! embedding `B(mμ) → B(μ)^{∗m}`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::engine::{self, Op, Segment};
use super::{shape_orbit, LSPath};
use crate::cartan::{RationalWeight, RootIndex, Weight};
use crate::error::{Error, Result};
use crate::numeric;
use crate::orbit::StarOrbit;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConcatPath {
    factors: Vec<LSPath>,
}

pub fn concat(factors: Vec<LSPath>) -> Result<ConcatPath> {
    ConcatPath::new(factors)
}

impl ConcatPath {
    pub fn new(factors: Vec<LSPath>) -> Result<Self> {
        let first = factors.first().ok_or(Error::ShapeMismatch)?;
        if factors
            .iter()
            .any(|f| f.cartan() != first.cartan() || f.lambda() != first.lambda())
        {
            return Err(Error::ShapeMismatch);
        }
        Ok(ConcatPath { factors })
    }

    pub fn factors(&self) -> &[LSPath] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<LSPath> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn orbit(&self) -> &Arc<StarOrbit> {
        self.factors[0].orbit()
    }

    /// Segments on the time scale `[0, m]`, tagged by factor.
    pub fn segments(&self) -> Vec<Segment> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(k, f)| f.segments(k))
            .collect()
    }

    pub fn profile(&self, i: RootIndex) -> Result<engine::Profile> {
        let p = engine::profile(self.orbit(), &self.segments(), i);
        engine::integral_min(&p)?;
        Ok(p)
    }

    pub fn epsilon(&self, i: RootIndex) -> Result<BigInt> {
        let p = self.profile(i)?;
        Ok(-engine::integral_min(&p)?)
    }

    pub fn phi(&self, i: RootIndex) -> Result<BigInt> {
        let p = self.profile(i)?;
        Ok(p.end().to_integer() - engine::integral_min(&p)?)
    }

    /// Apply an operator on the joint profile. Exactly one factor changes.
    pub fn try_apply(&self, op: Op, i: RootIndex) -> Result<Option<ConcatPath>> {
        let Some(segs) = engine::apply(self.orbit(), &self.segments(), i, op)? else {
            return Ok(None);
        };
        let mut groups: Vec<Vec<Segment>> = vec![Vec::new(); self.factors.len()];
        for s in segs {
            groups[s.tag].push(s);
        }
        let orbit = self.orbit().clone();
        let factors = groups
            .into_iter()
            .map(|g| LSPath::from_segments(orbit.clone(), g))
            .collect::<Result<Vec<_>>>()?;
        let changed = factors.iter().zip(&self.factors).filter(|(a, b)| a != b).count();
        if changed != 1 {
            return Err(Error::InternalInvariant(format!(
                "concatenation operator changed {changed} factors"
            )));
        }
        Ok(Some(ConcatPath { factors }))
    }

    pub fn e(&self, i: RootIndex) -> Option<ConcatPath> {
        self.try_apply(Op::E, i)
            .unwrap_or_else(|err| panic!("e_{i} on concatenation: {err}"))
    }

    pub fn f(&self, i: RootIndex) -> Option<ConcatPath> {
        self.try_apply(Op::F, i)
            .unwrap_or_else(|err| panic!("f_{i} on concatenation: {err}"))
    }

    pub fn weight(&self) -> Result<Weight> {
        let mut acc = Weight::zero();
        for f in &self.factors {
            acc = &acc + &f.weight()?;
        }
        Ok(acc)
    }

    /// `π(t) = π_1(1) + ⋯ + π_{k-1}(1) + π_k(mt - k + 1)` on `[(k-1)/m, k/m]`.
    pub fn evaluate(&self, t: &BigRational) -> Result<RationalWeight> {
        if t.is_negative() || t > &BigRational::one() {
            return Err(Error::OutOfRange(numeric::format_fraction(t)));
        }
        let m = self.factors.len();
        let scaled = t * BigRational::from_integer(m.into());
        let k = scaled.floor().to_integer().to_usize().expect("small").min(m - 1);
        let mut acc = RationalWeight::zero();
        for f in &self.factors[..k] {
            acc = acc.add_scaled(&BigRational::one(), &f.weight()?);
        }
        let local = f_eval(&self.factors[k], &(scaled - BigRational::from_integer(k.into())))?;
        Ok(RationalWeight {
            c1: acc.c1 + local.c1,
            c2: acc.c2 + local.c2,
        })
    }

    /// Glue the factors into one path of shape `mμ`, if the result is an LS path.
    pub fn flatten(&self, big: Arc<StarOrbit>) -> Result<LSPath> {
        let m = BigInt::from(self.factors.len());
        let expected = self.orbit().lambda() * &m;
        if big.lambda() != &expected || big.cartan() != self.orbit().cartan() {
            return Err(Error::ShapeMismatch);
        }
        let mq = BigRational::from_integer(m);
        let segs = self
            .segments()
            .into_iter()
            .map(|s| Segment {
                dir: s.dir,
                len: s.len / &mq,
                tag: 0,
            })
            .collect();
        LSPath::from_segments(big, segs)
    }
}

fn f_eval(f: &LSPath, t: &BigRational) -> Result<RationalWeight> {
    f.evaluate(t)
}

/// Cut a path of shape `mμ` into `m` paths of shape `μ`:
/// `π_k` follows `π` on `[(k-1)/m, k/m]`, rescaled.
pub fn split(path: &LSPath, m: u64) -> Result<Vec<LSPath>> {
    if m == 0 {
        return Err(Error::NotDivisible(0));
    }
    if m == 1 {
        return Ok(vec![path.clone()]);
    }
    let mb = BigInt::from(m);
    let mu = path.lambda().div_exact(&mb).ok_or(Error::NotDivisible(m))?;
    let orbit = shape_orbit(path.cartan(), mu)?;
    split_into(path, m, orbit)
}

pub(crate) fn split_into(path: &LSPath, m: u64, orbit: Arc<StarOrbit>) -> Result<Vec<LSPath>> {
    let mq = BigRational::from_integer(m.into());
    let mut out = Vec::with_capacity(m as usize);
    for k in 0..m {
        let lo = BigRational::new(k.into(), m.into());
        let hi = BigRational::new((k + 1).into(), m.into());
        let mut segs = Vec::new();
        for (v, &dir) in path.dirs().iter().enumerate() {
            let s = path.sigmas()[v].clone().max(lo.clone());
            let e = path.sigmas()[v + 1].clone().min(hi.clone());
            if s < e {
                segs.push(Segment {
                    dir,
                    len: (e - s) * &mq,
                    tag: 0,
                });
            }
        }
        out.push(LSPath::from_segments(orbit.clone(), segs)?);
    }
    Ok(out)
}

/// Factor acted on by `e_i`/`f_i` under the signature rule: write
/// `-^{ε_k} +^{φ_k}` for each factor, cancel adjacent `+-` pairs; `f` acts on
/// the leftmost surviving `+`, `e` on the rightmost surviving `-`.
pub fn tensor_rule_factor(factors: &[LSPath], op: Op, i: RootIndex) -> Option<usize> {
    // stack of (factor, count) for unmatched '+'
    let mut plus: Vec<(usize, BigInt)> = Vec::new();
    let mut minus_last: Option<usize> = None;
    for (k, f) in factors.iter().enumerate() {
        let mut eps = f.epsilon(i);
        while eps.is_positive() {
            match plus.last_mut() {
                Some((_, c)) => {
                    let take = (&*c).min(&eps).clone();
                    *c -= &take;
                    eps -= &take;
                    if c.is_zero() {
                        plus.pop();
                    }
                }
                None => {
                    minus_last = Some(k);
                    break;
                }
            }
        }
        let phi = f.phi(i);
        if phi.is_positive() {
            plus.push((k, phi));
        }
    }
    match op {
        Op::F => plus.first().map(|(k, _)| *k),
        Op::E => minus_last,
    }
}

/// Two-factor form of the rule: `f` acts on the first factor iff
/// `φ(π_1) > ε(π_2)`, `e` iff `φ(π_1) >= ε(π_2)`.
pub fn tensor_pair_factor(p1: &LSPath, p2: &LSPath, op: Op, i: RootIndex) -> Option<usize> {
    let (phi1, eps2) = (p1.phi(i), p2.epsilon(i));
    match op {
        Op::F => {
            if phi1 > eps2 {
                Some(0)
            } else if p2.phi(i).is_positive() {
                Some(1)
            } else {
                None
            }
        }
        Op::E => {
            if phi1 >= eps2 {
                p1.epsilon(i).is_positive().then_some(0)
            } else {
                Some(1)
            }
        }
    }
}
