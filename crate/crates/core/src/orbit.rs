//! The two-sided sequence `p_m`, Weyl-orbit classification and the chain
//! structure of orbits that avoid `P⁺ ∪ -P⁺`.

use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::cartan::{cover_label, CartanData, RootIndex, Weight};
use crate::error::{Error, Result};
use crate::numeric;

#[derive(Default)]
struct Cache {
    // p_0, p_1, p_2, ...
    fwd: Vec<BigInt>,
    // p_{-1}, p_{-2}, ...
    bwd: Vec<BigInt>,
}

/// Memoized two-sided recurrence with `p_0 = l`, `p_1 = k` and
/// `p_{m+2} = c_m p_{m+1} - p_m`, where `c_m = b` for even `m` and `a` for odd `m`.
///
/// The cache is shared behind a lock so that one sequence can serve many
/// worker threads. Values whose bit length exceeds the configured cap raise a
/// sticky overflow flag; see [`PSequence::check_bits`].
pub struct PSequence {
    cartan: CartanData,
    k: BigInt,
    l: BigInt,
    cache: RwLock<Cache>,
    max_bits: u64,
    overflow: AtomicBool,
}

impl PSequence {
    pub fn new(cartan: CartanData, k: BigInt, l: BigInt) -> Self {
        let max_bits = numeric::max_bits().unwrap_or(numeric::DEFAULT_MAX_BITS);
        Self::with_max_bits(cartan, k, l, max_bits)
    }

    pub fn with_max_bits(cartan: CartanData, k: BigInt, l: BigInt, max_bits: u64) -> Self {
        let cache = Cache {
            fwd: vec![l.clone(), k.clone()],
            bwd: Vec::new(),
        };
        let seq = PSequence {
            cartan,
            k,
            l,
            cache: RwLock::new(cache),
            max_bits,
            overflow: AtomicBool::new(false),
        };
        seq.note_bits(&seq.k);
        seq.note_bits(&seq.l);
        seq
    }

    /// Sequence attached to `λ = c1 Λ1 + c2 Λ2`, i.e. `k = c1`, `l = -c2`.
    pub fn for_weight(cartan: CartanData, lambda: &Weight) -> Self {
        Self::new(cartan, lambda.c1.clone(), -&lambda.c2)
    }

    pub fn cartan(&self) -> CartanData {
        self.cartan
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn l(&self) -> &BigInt {
        &self.l
    }

    fn coef(&self, m: i64) -> BigInt {
        BigInt::from(if m.rem_euclid(2) == 0 {
            self.cartan.b()
        } else {
            self.cartan.a()
        })
    }

    fn note_bits(&self, v: &BigInt) {
        if v.bits() > self.max_bits {
            self.overflow.store(true, Ordering::Relaxed);
        }
    }

    pub fn overflowed(&self) -> bool {
        self.overflow.load(Ordering::Relaxed)
    }

    pub fn check_bits(&self) -> Result<()> {
        if self.overflowed() {
            Err(Error::BitLimit(self.max_bits))
        } else {
            Ok(())
        }
    }

    pub fn p(&self, m: i64) -> BigInt {
        {
            let cache = self.cache.read();
            if let Some(v) = lookup(&cache, m) {
                return v.clone();
            }
        }
        let mut cache = self.cache.write();
        if m >= 0 {
            while (cache.fwd.len() as i64) <= m {
                let j = cache.fwd.len() as i64;
                let v = self.coef(j - 2) * &cache.fwd[(j - 1) as usize] - &cache.fwd[(j - 2) as usize];
                self.note_bits(&v);
                cache.fwd.push(v);
            }
        } else {
            while (cache.bwd.len() as i64) < -m {
                let j = -(cache.bwd.len() as i64) - 1;
                let next = |cache: &Cache, idx: i64| lookup(cache, idx).cloned().expect("cached");
                let v = self.coef(j) * next(&cache, j + 1) - next(&cache, j + 2);
                self.note_bits(&v);
                cache.bwd.push(v);
            }
        }
        lookup(&cache, m).cloned().expect("extended above")
    }

    /// Closed form: `x_m λ = (p_{m+1}, -p_m)` for even `m` and
    /// `(-p_m, p_{m+1})` for odd `m`.
    pub fn xm_lambda(&self, m: i64) -> Weight {
        let pm = self.p(m);
        let pm1 = self.p(m + 1);
        if m.rem_euclid(2) == 0 {
            Weight::new(pm1, -pm)
        } else {
            Weight::new(-pm, pm1)
        }
    }

    /// `⟨x_m λ, α_i^∨⟩` without building the weight.
    pub fn pairing(&self, m: i64, i: RootIndex) -> BigInt {
        if cover_label(m) == i {
            -self.p(m)
        } else {
            self.p(m + 1)
        }
    }
}

fn lookup(cache: &Cache, m: i64) -> Option<&BigInt> {
    if m >= 0 {
        cache.fwd.get(m as usize)
    } else {
        cache.bwd.get((-m - 1) as usize)
    }
}

impl Clone for PSequence {
    fn clone(&self) -> Self {
        let c = self.cache.read();
        PSequence {
            cartan: self.cartan,
            k: self.k.clone(),
            l: self.l.clone(),
            cache: RwLock::new(Cache {
                fwd: c.fwd.clone(),
                bwd: c.bwd.clone(),
            }),
            max_bits: self.max_bits,
            overflow: AtomicBool::new(self.overflowed()),
        }
    }
}

impl fmt::Debug for PSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PSequence")
            .field("cartan", &self.cartan)
            .field("k", &self.k)
            .field("l", &self.l)
            .finish()
    }
}

pub fn p(seq: &PSequence, m: i64) -> BigInt {
    seq.p(m)
}

pub fn xm_lambda(seq: &PSequence, m: i64) -> Weight {
    seq.xm_lambda(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitKind {
    MeetsDominant,
    MeetsAntidominant,
    Star,
}

/// Normal form `kΛ1 - lΛ2` of an orbit satisfying the star condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Form {
    /// `l <= k < (a-1) l`
    #[serde(rename = "i")]
    I,
    /// `k < l <= (b-1) k`
    #[serde(rename = "ii")]
    II,
}

/// Refined normal forms: `i'` is `k = l`, `ii'` is `l = (b-1)k`,
/// `iii'` is `l < k < (a-1)l`, `iv'` is `k < l < (b-1)k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormTag {
    #[serde(rename = "i'")]
    IPrime,
    #[serde(rename = "ii'")]
    IIPrime,
    #[serde(rename = "iii'")]
    IIIPrime,
    #[serde(rename = "iv'")]
    IVPrime,
}

impl FormTag {
    pub fn form(self) -> Form {
        match self {
            FormTag::IPrime | FormTag::IIIPrime => Form::I,
            FormTag::IIPrime | FormTag::IVPrime => Form::II,
        }
    }
}

impl fmt::Display for FormTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormTag::IPrime => "i'",
            FormTag::IIPrime => "ii'",
            FormTag::IIIPrime => "iii'",
            FormTag::IVPrime => "iv'",
        })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::I => "i",
            Form::II => "ii",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitClassification {
    pub kind: OrbitKind,
    /// For `Star`: valley index of `|p|` (smallest `|n|`, ties to `n >= 0`).
    /// Otherwise the first `m` found with `x_m λ ∈ P⁺` (resp. `-P⁺`).
    pub witness_m: i64,
    /// Index `s` with `x_s λ` equal to the canonical representative, up to sign.
    pub canonical_index: Option<i64>,
    pub canonical: Option<Weight>,
    pub form: Option<Form>,
    pub form_tag: Option<FormTag>,
    /// All `p_m < 0` for this representative. The orbit then runs the other
    /// way in this indexing; the canonical data is obtained from `x_1 λ`,
    /// whose sequence `-p_{2-m}` is positive, and mapped back by `s ↦ 1 - s`.
    pub reversed: bool,
}

fn scan_cap(lambda: &Weight) -> i64 {
    let bits = lambda.c1.bits().max(lambda.c2.bits()) as i64;
    4 * bits + 8
}

pub fn classify(cartan: CartanData, lambda: &Weight) -> Result<OrbitClassification> {
    classify_with(&PSequence::for_weight(cartan, lambda), lambda)
}

pub(crate) fn classify_with(seq: &PSequence, lambda: &Weight) -> Result<OrbitClassification> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let cap = scan_cap(lambda);
    let mut right = None;
    let mut left = None;
    for t in 0..=cap {
        for m in [t, -t - 1] {
            let (pm, pm1) = (seq.p(m), seq.p(m + 1));
            let kind = if !pm.is_positive() && !pm1.is_negative() {
                Some(OrbitKind::MeetsDominant)
            } else if !pm.is_negative() && !pm1.is_positive() {
                Some(OrbitKind::MeetsAntidominant)
            } else {
                None
            };
            if let Some(kind) = kind {
                return Ok(OrbitClassification {
                    kind,
                    witness_m: m,
                    canonical_index: None,
                    canonical: None,
                    form: None,
                    form_tag: None,
                    reversed: false,
                });
            }
        }
        seq.check_bits()?;
        if right.is_none() && seq.p(t).abs() < seq.p(t + 1).abs() {
            right = Some(t);
        }
        if left.is_none() && seq.p(-t).abs() < seq.p(-t - 1).abs() {
            left = Some(-t);
        }
        if let (Some(lo), Some(hi)) = (left, right) {
            let mut class = star_classification(seq, lo, hi);
            if seq.p(0).is_negative() {
                let flipped = seq.xm_lambda(1);
                let plus = classify_with(
                    &PSequence::new(seq.cartan(), flipped.c1.clone(), -&flipped.c2),
                    &flipped,
                )?;
                class.canonical_index = plus.canonical_index.map(|s| 1 - s);
                class.canonical = plus.canonical;
                class.form = plus.form;
                class.form_tag = plus.form_tag;
                class.reversed = true;
            }
            return Ok(class);
        }
    }
    Err(Error::InternalBound(format!(
        "classification of {lambda} did not settle within {cap} steps"
    )))
}

fn star_classification(seq: &PSequence, lo: i64, hi: i64) -> OrbitClassification {
    let abs = |m: i64| seq.p(m).abs();
    let min = (lo..=hi).map(abs).min().expect("nonempty window");
    let v = (lo..=hi).find(|&m| abs(m) == min).expect("minimum attained");
    let witness = (lo..=hi)
        .filter(|&m| abs(m) == min)
        .min_by_key(|&m| (m.abs(), m < 0))
        .expect("minimum attained");
    let b = BigInt::from(seq.cartan().b());
    let (s, tag) = if v.rem_euclid(2) == 0 {
        let (k0, l0) = (abs(v + 1), abs(v));
        (v, if k0 == l0 { FormTag::IPrime } else { FormTag::IIIPrime })
    } else {
        let (k0, l0) = (abs(v), abs(v - 1));
        let tag = if l0 == (&b - 1) * &k0 {
            FormTag::IIPrime
        } else {
            FormTag::IVPrime
        };
        (v - 1, tag)
    };
    OrbitClassification {
        kind: OrbitKind::Star,
        witness_m: witness,
        canonical_index: Some(s),
        canonical: Some(Weight::new(abs(s + 1), -abs(s))),
        form: Some(tag.form()),
        form_tag: Some(tag),
        reversed: false,
    }
}

/// Orbit satisfying the star condition, with its sequence and classification.
#[derive(Clone, Debug)]
pub struct StarOrbit {
    cartan: CartanData,
    lambda: Weight,
    seq: PSequence,
    class: OrbitClassification,
}

impl StarOrbit {
    pub fn new(cartan: CartanData, lambda: Weight) -> Result<Self> {
        let seq = PSequence::for_weight(cartan, &lambda);
        let class = classify_with(&seq, &lambda)?;
        if class.kind != OrbitKind::Star {
            return Err(Error::NotStarOrbit(lambda.to_string()));
        }
        Ok(StarOrbit {
            cartan,
            lambda,
            seq,
            class,
        })
    }

    pub fn cartan(&self) -> CartanData {
        self.cartan
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn seq(&self) -> &PSequence {
        &self.seq
    }

    pub fn classification(&self) -> &OrbitClassification {
        &self.class
    }

    /// `true` when every `p_m` is positive, so that `x_m λ > x_{m-1} λ`.
    pub fn is_positive(&self) -> bool {
        !self.class.reversed
    }

    pub fn canonical_index(&self) -> i64 {
        self.class.canonical_index.expect("star orbits carry a canonical index")
    }

    pub fn canonical(&self) -> &Weight {
        self.class
            .canonical
            .as_ref()
            .expect("star orbits carry a canonical weight")
    }

    pub fn form_tag(&self) -> FormTag {
        self.class.form_tag.expect("star orbits carry a form tag")
    }

    pub fn p(&self, m: i64) -> BigInt {
        self.seq.p(m)
    }

    pub fn p_abs(&self, m: i64) -> BigInt {
        self.seq.p(m).abs()
    }

    pub fn xm_lambda(&self, m: i64) -> Weight {
        self.seq.xm_lambda(m)
    }

    pub fn pairing(&self, m: i64, i: RootIndex) -> BigInt {
        self.seq.pairing(m, i)
    }

    /// gcd of the coordinates of `λ`, constant along the orbit.
    pub fn content(&self) -> BigInt {
        self.lambda.c1.gcd(&self.lambda.c2)
    }

    pub fn check_bits(&self) -> Result<()> {
        self.seq.check_bits()
    }

    /// Lower cover of `x_m λ` in the chain: `x_m λ ←(α_label)− x_{m-1} λ`.
    pub fn hasse_cover(&self, m: i64) -> (i64, RootIndex) {
        (m - 1, cover_label(m))
    }

    pub fn dist(&self, m: i64, n: i64) -> Result<u64> {
        if m < n {
            return Err(Error::BadOrder { m, n });
        }
        Ok((m - n) as u64)
    }

    /// A `σ`-chain from `x_m λ` down to `x_n λ` exists iff `σ |p_j| ∈ ℤ` for
    /// all `n < j <= m`.
    pub fn sigma_chain_exists(&self, m: i64, n: i64, sigma: &BigRational) -> Result<bool> {
        if m < n {
            return Err(Error::BadOrder { m, n });
        }
        if !sigma.is_positive() || sigma >= &BigRational::one() {
            return Err(Error::BadSigmas(format!("σ = {sigma} is not in (0, 1)")));
        }
        let den = sigma.denom();
        Ok(((n + 1)..=m).all(|j| (self.p_abs(j) % den).is_zero()))
    }
}

pub fn hasse_cover(orbit: &StarOrbit, m: i64) -> (i64, RootIndex) {
    orbit.hasse_cover(m)
}

pub fn dist(orbit: &StarOrbit, m: i64, n: i64) -> Result<u64> {
    orbit.dist(m, n)
}

pub fn sigma_chain_exists(orbit: &StarOrbit, m: i64, n: i64, sigma: &BigRational) -> Result<bool> {
    orbit.sigma_chain_exists(m, n, sigma)
}
