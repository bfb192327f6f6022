//! Rank-2 hyperbolic Cartan data, the weight lattice in the basis of
//! fundamental weights, simple reflections and the Weyl group elements `x_m`.
//!
//! Every weight is stored by its coordinates `(c1, c2)` with respect to
//! `Λ1, Λ2`, so that `⟨w, α_i^∨⟩ = c_i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric;

/// Index of a simple root, `1` or `2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootIndex {
    One,
    Two,
}

impl RootIndex {
    pub const ALL: [RootIndex; 2] = [RootIndex::One, RootIndex::Two];

    pub fn from_u8(i: u8) -> Option<Self> {
        match i {
            1 => Some(RootIndex::One),
            2 => Some(RootIndex::Two),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            RootIndex::One => 1,
            RootIndex::Two => 2,
        }
    }

    pub fn other(self) -> Self {
        match self {
            RootIndex::One => RootIndex::Two,
            RootIndex::Two => RootIndex::One,
        }
    }
}

impl fmt::Display for RootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// The generalized Cartan matrix `[[2, -a], [-b, 2]]` with `a, b >= 2`, `ab > 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanData {
    a: i64,
    b: i64,
}

impl CartanData {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 2 || b < 2 || a.checked_mul(b).is_none_or(|ab| ab <= 4) {
            return Err(Error::InvalidCartan { a, b });
        }
        Ok(CartanData { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The diagram automorphism swaps the two nodes, hence `a` and `b`.
    pub fn swapped(&self) -> Self {
        CartanData { a: self.b, b: self.a }
    }

    /// Matrix entry `A_{ij} = ⟨α_j, α_i^∨⟩`.
    pub fn entry(&self, i: RootIndex, j: RootIndex) -> i64 {
        match (i, j) {
            (RootIndex::One, RootIndex::One) | (RootIndex::Two, RootIndex::Two) => 2,
            (RootIndex::One, RootIndex::Two) => -self.a,
            (RootIndex::Two, RootIndex::One) => -self.b,
        }
    }

    /// `α1 = 2Λ1 - bΛ2`, `α2 = -aΛ1 + 2Λ2`.
    pub fn simple_root(&self, i: RootIndex) -> Weight {
        match i {
            RootIndex::One => Weight::from_i64(2, -self.b),
            RootIndex::Two => Weight::from_i64(-self.a, 2),
        }
    }

    /// `r_i w = w - ⟨w, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: RootIndex, w: &Weight) -> Weight {
        let c = w.pairing(i);
        w - &(&self.simple_root(i) * &c)
    }

    pub fn reflect_rational(&self, i: RootIndex, w: &RationalWeight) -> RationalWeight {
        let c = w.pairing(i);
        let root = self.simple_root(i).to_rational();
        RationalWeight {
            c1: &w.c1 - &c * &root.c1,
            c2: &w.c2 - &c * &root.c2,
        }
    }

    /// Independent route to `x_m λ`: fold the simple reflections of
    /// [`xm_word`] from the right.
    pub fn act_xm_oracle(&self, m: WeylIndex, lambda: &Weight) -> Weight {
        xm_word(m)
            .iter()
            .rev()
            .fold(lambda.clone(), |w, &i| self.reflect(i, &w))
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[2, -{}], [-{}, 2]]", self.a, self.b)
    }
}

/// Index `m` of the Weyl group element `x_m`; `x_0` is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylIndex(pub i64);

impl From<i64> for WeylIndex {
    fn from(m: i64) -> Self {
        WeylIndex(m)
    }
}

/// Reduced word of `x_m`, read left to right as a product of simple reflections.
///
/// `x_{2k} = (r2 r1)^k` and `x_{2k+1} = r1 (r2 r1)^k` for `k >= 0`;
/// `x_{2k} = (r1 r2)^{-k}` and `x_{2k-1} = r2 (r1 r2)^{-k}` for `k <= 0`.
pub fn xm_word(m: WeylIndex) -> Vec<RootIndex> {
    let m = m.0;
    let len = m.unsigned_abs() as usize;
    let first = match (m > 0, m.rem_euclid(2) == 0) {
        (true, true) => RootIndex::Two,
        (true, false) => RootIndex::One,
        (false, true) => RootIndex::One,
        (false, false) => RootIndex::Two,
    };
    let mut word = Vec::with_capacity(len);
    let mut cur = first;
    for _ in 0..len {
        word.push(cur);
        cur = cur.other();
    }
    word
}

/// Label of the Hasse edge `x_m λ ← x_{m-1} λ`: the simple root `i` with
/// `r_i x_m = x_{m-1}`. It is `2` for even `m` and `1` for odd `m`.
pub fn cover_label(m: i64) -> RootIndex {
    if m.rem_euclid(2) == 0 {
        RootIndex::Two
    } else {
        RootIndex::One
    }
}

/// Index of `r_i x_m`: `m - 1` when `i` is the cover label of `m`, else `m + 1`.
pub fn reflect_index(m: i64, i: RootIndex) -> i64 {
    if cover_label(m) == i {
        m - 1
    } else {
        m + 1
    }
}

/// Integral weight `c1 Λ1 + c2 Λ2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub c1: BigInt,
    pub c2: BigInt,
}

impl Weight {
    pub fn new(c1: BigInt, c2: BigInt) -> Self {
        Weight { c1, c2 }
    }

    pub fn from_i64(c1: i64, c2: i64) -> Self {
        Weight {
            c1: BigInt::from(c1),
            c2: BigInt::from(c2),
        }
    }

    pub fn zero() -> Self {
        Weight::from_i64(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// `⟨w, α_i^∨⟩`, the coefficient of `Λ_i`.
    pub fn pairing(&self, i: RootIndex) -> BigInt {
        match i {
            RootIndex::One => self.c1.clone(),
            RootIndex::Two => self.c2.clone(),
        }
    }

    pub fn to_rational(&self) -> RationalWeight {
        RationalWeight {
            c1: BigRational::from_integer(self.c1.clone()),
            c2: BigRational::from_integer(self.c2.clone()),
        }
    }

    /// Exact division by a positive integer, if it divides both coordinates.
    pub fn div_exact(&self, d: &BigInt) -> Option<Weight> {
        if d.is_zero() || !(&self.c1 % d).is_zero() || !(&self.c2 % d).is_zero() {
            return None;
        }
        Some(Weight::new(&self.c1 / d, &self.c2 / d))
    }

    /// Human-readable form such as `3Λ1-2Λ2`.
    pub fn fundamental_notation(&self) -> String {
        let sign = if self.c2.is_negative() { "-" } else { "+" };
        format!("{}Λ1{}{}Λ2", self.c1, sign, self.c2.abs())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(&self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight::new(&self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-&self.c1, -&self.c2)
    }
}

impl Mul<&BigInt> for &Weight {
    type Output = Weight;
    fn mul(self, rhs: &BigInt) -> Weight {
        Weight::new(&self.c1 * rhs, &self.c2 * rhs)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [numeric::to_json(&self.c1), numeric::to_json(&self.c2)].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [c1, c2] = <[serde_json::Number; 2]>::deserialize(deserializer)?;
        Ok(Weight::new(
            numeric::from_json(&c1).map_err(serde::de::Error::custom)?,
            numeric::from_json(&c2).map_err(serde::de::Error::custom)?,
        ))
    }
}

/// Point of `ℝ ⊗ P` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalWeight {
    pub c1: BigRational,
    pub c2: BigRational,
}

impl RationalWeight {
    pub fn zero() -> Self {
        RationalWeight {
            c1: BigRational::zero(),
            c2: BigRational::zero(),
        }
    }

    pub fn pairing(&self, i: RootIndex) -> BigRational {
        match i {
            RootIndex::One => self.c1.clone(),
            RootIndex::Two => self.c2.clone(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.c1.denom().is_one() && self.c2.denom().is_one()
    }

    pub fn to_integral(&self) -> Option<Weight> {
        self.is_integral()
            .then(|| Weight::new(self.c1.to_integer(), self.c2.to_integer()))
    }

    /// `self + s·w`.
    pub fn add_scaled(&self, s: &BigRational, w: &Weight) -> RationalWeight {
        RationalWeight {
            c1: &self.c1 + s * BigRational::from_integer(w.c1.clone()),
            c2: &self.c2 + s * BigRational::from_integer(w.c2.clone()),
        }
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// Pairing of a rational weight with a simple coroot.
pub fn pairing(w: &RationalWeight, i: RootIndex) -> BigRational {
    w.pairing(i)
}
