//! Lakshmibai–Seshadri paths on star orbits, root operators and
//! concatenation crystals.

pub mod concat;
pub mod engine;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cartan::{CartanData, RationalWeight, RootIndex, Weight};
use crate::error::{Error, Result};
use crate::numeric;
use crate::orbit::StarOrbit;

pub use concat::{concat, split, tensor_rule_factor, ConcatPath};
pub use engine::{Op, Segment};

/// Orbit data for LS paths of shape `λ`. The sequence of `λ` itself must be
/// positive so that `x_m λ > x_{m-1} λ`.
pub fn shape_orbit(cartan: CartanData, lambda: Weight) -> Result<Arc<StarOrbit>> {
    let orbit = StarOrbit::new(cartan, lambda)?;
    if !orbit.is_positive() {
        return Err(Error::NegativeOrbit);
    }
    Ok(Arc::new(orbit))
}

/// `(x_{m_1} λ, …, x_{m_u} λ; σ_0, …, σ_u)` with `m_1 > … > m_u` and
/// `0 = σ_0 < … < σ_u = 1`.
#[derive(Clone)]
pub struct LSPath {
    orbit: Arc<StarOrbit>,
    dirs: Vec<i64>,
    sigmas: Vec<BigRational>,
}

impl PartialEq for LSPath {
    fn eq(&self, other: &Self) -> bool {
        self.dirs == other.dirs
            && self.sigmas == other.sigmas
            && self.orbit.cartan() == other.orbit.cartan()
            && self.orbit.lambda() == other.orbit.lambda()
    }
}

impl Eq for LSPath {}

impl Hash for LSPath {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orbit.cartan().hash(state);
        self.orbit.lambda().hash(state);
        self.dirs.hash(state);
        self.sigmas.hash(state);
    }
}

impl fmt::Debug for LSPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LSPath[{}; {}]", self.orbit.lambda(), self.compact())
    }
}

impl fmt::Display for LSPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Corner values `h_v = H_i(σ_v)` of a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HProfile {
    pub i: RootIndex,
    pub corners: Vec<BigRational>,
    pub min_value: BigInt,
}

impl LSPath {
    /// Check and canonicalize raw data. Equal consecutive directions are merged.
    pub fn validate(orbit: Arc<StarOrbit>, dirs: Vec<i64>, sigmas: Vec<BigRational>) -> Result<Self> {
        if !orbit.is_positive() {
            return Err(Error::NegativeOrbit);
        }
        if dirs.is_empty() {
            return Err(Error::BadSigmas("a path needs at least one direction".into()));
        }
        if sigmas.len() != dirs.len() + 1 {
            return Err(Error::BadSigmas(format!(
                "{} directions need {} sigmas, got {}",
                dirs.len(),
                dirs.len() + 1,
                sigmas.len()
            )));
        }
        if !sigmas[0].is_zero() || !sigmas[sigmas.len() - 1].is_one() {
            return Err(Error::BadSigmas("sigmas must start at 0 and end at 1".into()));
        }
        if sigmas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadSigmas("sigmas must be strictly increasing".into()));
        }
        let mut d = Vec::with_capacity(dirs.len());
        let mut s = vec![sigmas[0].clone()];
        for (v, &m) in dirs.iter().enumerate() {
            if d.last() == Some(&m) {
                *s.last_mut().expect("nonempty") = sigmas[v + 1].clone();
            } else {
                d.push(m);
                s.push(sigmas[v + 1].clone());
            }
        }
        if d.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotDecreasing);
        }
        for v in 1..d.len() {
            if !orbit.sigma_chain_exists(d[v - 1], d[v], &s[v])? {
                return Err(Error::ChainViolation(v));
            }
        }
        orbit.check_bits()?;
        Ok(LSPath {
            orbit,
            dirs: d,
            sigmas: s,
        })
    }

    /// The straight path `t ↦ t·x_m λ`.
    pub fn straight(orbit: Arc<StarOrbit>, m: i64) -> Result<Self> {
        Self::validate(orbit, vec![m], vec![BigRational::zero(), BigRational::one()])
    }

    pub fn pi_lambda(orbit: Arc<StarOrbit>) -> Result<Self> {
        Self::straight(orbit, 0)
    }

    pub fn from_segments(orbit: Arc<StarOrbit>, segs: Vec<Segment>) -> Result<Self> {
        let segs = engine::merge(segs);
        let mut sigmas = vec![BigRational::zero()];
        let mut t = BigRational::zero();
        for s in &segs {
            t += &s.len;
            sigmas.push(t.clone());
        }
        Self::validate(orbit, segs.iter().map(|s| s.dir).collect(), sigmas)
    }

    pub fn segments(&self, tag: usize) -> Vec<Segment> {
        self.dirs
            .iter()
            .zip(self.sigmas.windows(2))
            .map(|(&dir, w)| Segment {
                dir,
                len: &w[1] - &w[0],
                tag,
            })
            .collect()
    }

    pub fn orbit(&self) -> &Arc<StarOrbit> {
        &self.orbit
    }

    pub fn cartan(&self) -> CartanData {
        self.orbit.cartan()
    }

    pub fn lambda(&self) -> &Weight {
        self.orbit.lambda()
    }

    pub fn dirs(&self) -> &[i64] {
        &self.dirs
    }

    pub fn sigmas(&self) -> &[BigRational] {
        &self.sigmas
    }

    /// Number of directions `u`.
    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iota(&self) -> i64 {
        self.dirs[0]
    }

    pub fn kappa(&self) -> i64 {
        self.dirs[self.dirs.len() - 1]
    }

    pub fn evaluate(&self, t: &BigRational) -> Result<RationalWeight> {
        if t.is_negative() || t > &BigRational::one() {
            return Err(Error::OutOfRange(numeric::format_fraction(t)));
        }
        let mut acc = RationalWeight::zero();
        for (v, &m) in self.dirs.iter().enumerate() {
            let (lo, hi) = (&self.sigmas[v], &self.sigmas[v + 1]);
            if t <= lo {
                break;
            }
            let step = if t < hi { t - lo } else { hi - lo };
            acc = acc.add_scaled(&step, &self.orbit.xm_lambda(m));
        }
        Ok(acc)
    }

    pub fn weight(&self) -> Result<Weight> {
        self.evaluate(&BigRational::one())?
            .to_integral()
            .ok_or(Error::InternalNonIntegral)
    }

    pub fn h_profile(&self, i: RootIndex) -> Result<HProfile> {
        let p = engine::profile(&self.orbit, &self.segments(0), i);
        let min_value = engine::integral_min(&p)?;
        Ok(HProfile {
            i,
            corners: p.heights,
            min_value,
        })
    }

    pub fn epsilon(&self, i: RootIndex) -> BigInt {
        -self.h_profile(i).expect("LS path minima are integral").min_value
    }

    pub fn phi(&self, i: RootIndex) -> BigInt {
        let h = self.h_profile(i).expect("LS path minima are integral");
        let end = h.corners.last().expect("nonempty").to_integer();
        end - h.min_value
    }

    pub fn try_apply(&self, op: Op, i: RootIndex) -> Result<Option<LSPath>> {
        match engine::apply(&self.orbit, &self.segments(0), i, op)? {
            None => Ok(None),
            Some(segs) => LSPath::from_segments(self.orbit.clone(), segs).map(Some),
        }
    }

    pub fn try_e(&self, i: RootIndex) -> Result<Option<LSPath>> {
        self.try_apply(Op::E, i)
    }

    pub fn try_f(&self, i: RootIndex) -> Result<Option<LSPath>> {
        self.try_apply(Op::F, i)
    }

    /// `e_i π`, or `None` for `0`. Panics only if a crystal invariant is breached.
    pub fn e(&self, i: RootIndex) -> Option<LSPath> {
        self.try_e(i).unwrap_or_else(|err| panic!("e_{i} on {self:?}: {err}"))
    }

    /// `f_i π`, or `None` for `0`. Panics only if a crystal invariant is breached.
    pub fn f(&self, i: RootIndex) -> Option<LSPath> {
        self.try_f(i).unwrap_or_else(|err| panic!("f_{i} on {self:?}: {err}"))
    }

    pub fn apply(&self, op: Op, i: RootIndex) -> Option<LSPath> {
        match op {
            Op::E => self.e(i),
            Op::F => self.f(i),
        }
    }

    pub fn e_max(&self, i: RootIndex) -> LSPath {
        let mut cur = self.clone();
        while let Some(next) = cur.e(i) {
            cur = next;
        }
        cur
    }

    pub fn f_max(&self, i: RootIndex) -> LSPath {
        let mut cur = self.clone();
        while let Some(next) = cur.f(i) {
            cur = next;
        }
        cur
    }

    /// Compact notation `(m_1,…,m_u | σ_1,…,σ_{u-1})`.
    pub fn compact(&self) -> String {
        let dirs: Vec<String> = self.dirs.iter().map(|m| m.to_string()).collect();
        let inner: Vec<String> = self.sigmas[1..self.sigmas.len() - 1]
            .iter()
            .map(numeric::format_fraction)
            .collect();
        format!("({} | {})", dirs.join(","), inner.join(","))
    }
}

pub fn validate(orbit: Arc<StarOrbit>, dirs: Vec<i64>, sigmas: Vec<BigRational>) -> Result<LSPath> {
    LSPath::validate(orbit, dirs, sigmas)
}

pub fn evaluate(path: &LSPath, t: &BigRational) -> Result<RationalWeight> {
    path.evaluate(t)
}

pub fn weight(path: &LSPath) -> Result<Weight> {
    path.weight()
}

pub fn h_profile(path: &LSPath, i: RootIndex) -> Result<HProfile> {
    path.h_profile(i)
}

pub fn e(path: &LSPath, i: RootIndex) -> Option<LSPath> {
    path.e(i)
}

pub fn f(path: &LSPath, i: RootIndex) -> Option<LSPath> {
    path.f(i)
}

pub fn epsilon(path: &LSPath, i: RootIndex) -> BigInt {
    path.epsilon(i)
}

pub fn phi(path: &LSPath, i: RootIndex) -> BigInt {
    path.phi(i)
}

pub fn e_max(path: &LSPath, i: RootIndex) -> LSPath {
    path.e_max(i)
}

pub fn f_max(path: &LSPath, i: RootIndex) -> LSPath {
    path.f_max(i)
}

pub fn iota(path: &LSPath) -> i64 {
    path.iota()
}

pub fn kappa(path: &LSPath) -> i64 {
    path.kappa()
}
