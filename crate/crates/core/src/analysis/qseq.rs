//! The sequence `q_m`, the seed paths `π^(n)` and the condition `C(m, n)`.
//!
//! Everything is indexed like the orbit of the path's own `λ`. The canonical
//! representative sits at the even index `s`, and the sequence built for it is
//! shifted accordingly: `q(j) = q^c(j - s)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartan::RootIndex;
use crate::error::{Error, Result};
use crate::lspath::LSPath;
use crate::orbit::{PSequence, StarOrbit};

#[derive(Clone, Debug)]
pub struct QSequence {
    orbit: Arc<StarOrbit>,
    offset: i64,
    c: BigInt,
    mirrored: bool,
    det: BigInt,
    seq: PSequence,
}

impl QSequence {
    /// Build the sequence for a coprime orbit whose canonical form satisfies
    /// `1 < l < k < (a-1)l`, or the mirrored `1 < k < l < (b-1)k`.
    pub fn new(orbit: Arc<StarOrbit>) -> Result<Self> {
        let cartan = orbit.cartan();
        let can = orbit.canonical();
        let (k, l) = (can.c1.clone(), -can.c2.clone());
        if !k.gcd(&l).is_one() {
            return Err(Error::FormViolation(format!("gcd({k}, {l}) != 1")));
        }
        let a = BigInt::from(cartan.a());
        let b = BigInt::from(cartan.b());
        let one = BigInt::one();
        let (c, mirrored, q0, q1, det) = if one < l && l < k && k < (&a - 1) * &l {
            let c = &k / &l;
            let det = &k - &l * &c;
            (c, false, one.clone(), (&k / &l), det)
        } else if one < k && k < l && l < (&b - 1) * &k {
            // q_m = p_m - q'_{1-m}, where q' belongs to the swapped data
            // (b, a) with k' = l, l' = k, so that q'_0 = 1 and q'_1 = c'.
            let c = &l / &k;
            let det = &l - &k * &c;
            (c.clone(), true, &l - &c, &k - 1, det)
        } else {
            return Err(Error::FormViolation(format!(
                "canonical weight ({k}, {}) satisfies neither 1<l<k<(a-1)l nor 1<k<l<(b-1)k",
                -&l
            )));
        };
        let offset = orbit.canonical_index();
        Ok(QSequence {
            orbit,
            offset,
            c,
            mirrored,
            det,
            seq: PSequence::new(cartan, q1, q0),
        })
    }

    pub fn orbit(&self) -> &Arc<StarOrbit> {
        &self.orbit
    }

    /// Index `s` of the canonical representative.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn mirrored(&self) -> bool {
        self.mirrored
    }

    /// The constant `q_m p_{m+1} - q_{m+1} p_m`, equal to `k - lc`.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    pub fn q(&self, j: i64) -> BigInt {
        self.seq.p(j - self.offset)
    }

    pub fn p(&self, j: i64) -> BigInt {
        self.orbit.p(j)
    }

    pub fn ratio(&self, j: i64) -> BigRational {
        BigRational::new(self.q(j), self.p(j))
    }

    /// `π^(n)`: directions `x_{s+n} λ, …, x_{s-n} λ` with cut points
    /// `q_{s+n}/p_{s+n} < … < q_{s-n+1}/p_{s-n+1}`.
    pub fn pi_n(&self, n: u32) -> Result<LSPath> {
        let n = i64::from(n);
        let s = self.offset;
        let dirs: Vec<i64> = (-n..=n).rev().map(|j| s + j).collect();
        let mut sigmas = vec![BigRational::zero()];
        sigmas.extend((1..=2 * n).map(|v| self.ratio(s + n - v + 1)));
        sigmas.push(BigRational::one());
        LSPath::validate(self.orbit.clone(), dirs, sigmas)
    }

    fn same_shape(&self, path: &LSPath) -> Result<()> {
        if path.cartan() != self.orbit.cartan() || path.lambda() != self.orbit.lambda() {
            return Err(Error::ShapeMismatch);
        }
        Ok(())
    }

    /// All `(m, v)` such that the path satisfies `C(m, n)` at position `v`
    /// (1-based), with `m` in the path's own indexing.
    pub fn cmn_witnesses(&self, path: &LSPath, n: u32) -> Result<Vec<(i64, usize)>> {
        self.same_shape(path)?;
        let n = n as usize;
        let u = path.len();
        if n == 0 || u < 2 * n + 1 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for v in (n + 1)..=(u - n) {
            let m = path.dirs()[v - 1];
            let ok = (-(n as i64)..(n as i64)).all(|t| {
                let idx = (v as i64 + t) as usize;
                path.sigmas()[idx] == self.ratio(m - t)
            });
            if ok {
                out.push((m, v));
            }
        }
        Ok(out)
    }

    pub fn cmn_check(&self, path: &LSPath, m: i64, n: u32) -> Result<bool> {
        Ok(self.cmn_witnesses(path, n)?.iter().any(|&(mm, _)| mm == m))
    }

    /// Corner bracketing around a `C(m, n)` witness at position `v`: with
    /// `j` the cover label of `m`, `H_j(σ_r) = H_j(σ_v) ∈ ℤ` for `r ≡ v`
    /// and `H_j(σ_v) < H_j(σ_r) < H_j(σ_v) + 1` otherwise, for
    /// `v - n <= r <= v + n - 1`.
    pub fn bracket_holds(&self, path: &LSPath, m: i64, v: usize, n: u32) -> Result<bool> {
        let j: RootIndex = crate::cartan::cover_label(m);
        let h = path.h_profile(j)?.corners;
        let base = &h[v];
        if !base.is_integer() {
            return Ok(false);
        }
        let n = n as usize;
        let one = BigRational::one();
        Ok((v - n..=v + n - 1).all(|r| {
            if (r + v).is_multiple_of(2) {
                &h[r] == base
            } else {
                base < &h[r] && h[r] < base + &one
            }
        }))
    }
}

pub fn q(qs: &QSequence, m: i64) -> BigInt {
    qs.q(m)
}

pub fn pi_n(qs: &QSequence, n: u32) -> Result<LSPath> {
    qs.pi_n(n)
}

pub fn cmn_check(qs: &QSequence, path: &LSPath, m: i64, n: u32) -> Result<bool> {
    qs.cmn_check(path, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanData, Weight};
    use crate::lspath::shape_orbit;
    use crate::numeric::rational;
    use crate::oracle;
    use num_traits::Signed;

    fn qs(a: i64, b: i64, k: i64, l: i64) -> QSequence {
        QSequence::new(shape_orbit(CartanData::new(a, b).unwrap(), Weight::from_i64(k, l)).unwrap()).unwrap()
    }

    #[test]
    fn q_examples() {
        let s = qs(4, 3, 3, -2);
        assert_eq!(s.c(), &BigInt::from(1));
        assert_eq!(s.q(0), 1.into());
        assert_eq!(s.q(1), 1.into());
        assert_eq!(s.q(2), 2.into());
        assert_eq!(s.q(-1), 3.into());
        assert_eq!(s.p(-1), 5.into());
        assert_eq!(s.det(), &BigInt::from(1));
        assert_eq!(s.q(1) * s.p(2) - s.q(2) * s.p(1), BigInt::from(1));
    }

    #[test]
    fn mirrored_example() {
        // a = 3, b = 4, λ = 2Λ1 - 3Λ2: 1 < 2 < 3 < 6
        let s = qs(3, 4, 2, -3);
        assert!(s.mirrored());
        let p: Vec<BigInt> = (-1..=2).map(|m| s.p(m)).collect();
        let q: Vec<BigInt> = (-1..=2).map(|m| s.q(m)).collect();
        assert_eq!(p, [7, 3, 2, 5].map(BigInt::from));
        assert_eq!(q, [5, 2, 1, 2].map(BigInt::from));
        assert_eq!(s.det(), &BigInt::from(1));
    }

    #[test]
    fn mirror_matches_swapped_sequence() {
        let o = shape_orbit(CartanData::new(3, 5).unwrap(), Weight::from_i64(3, -7)).unwrap();
        let s = QSequence::new(o.clone()).unwrap();
        assert!(s.mirrored());
        let swapped = shape_orbit(o.cartan().swapped(), Weight::from_i64(7, -3)).unwrap();
        let qp = QSequence::new(swapped).unwrap();
        for m in -8..8 {
            assert_eq!(s.q(m), s.p(m) - qp.q(1 - m));
        }
    }

    #[test]
    fn pi_n_examples() {
        let s = qs(4, 3, 3, -2);
        let p1 = s.pi_n(1).unwrap();
        assert_eq!(p1.dirs(), &[1, 0, -1]);
        assert_eq!(
            p1.sigmas(),
            &[rational(0, 1), rational(1, 3), rational(1, 2), rational(1, 1)]
        );
        for n in 1..=4 {
            let pn = s.pi_n(n).unwrap();
            assert_eq!(pn.len(), 2 * n as usize + 1);
            assert!(pn.weight().is_ok());
            assert!(s.cmn_check(&pn, 0, n).unwrap());
            let (m, v) = s.cmn_witnesses(&pn, n).unwrap()[0];
            assert!(s.bracket_holds(&pn, m, v, n).unwrap());
        }
        let pi = LSPath::pi_lambda(s.orbit().clone()).unwrap();
        assert!(!s.cmn_check(&pi, 0, 1).unwrap());
    }

    #[test]
    fn pi_n_junctions_pass_brute_force() {
        for (a, b, k, l) in [(4, 3, 3, -2), (3, 4, 2, -3), (5, 3, 4, -3)] {
            let s = qs(a, b, k, l);
            let o = s.orbit().clone();
            let pn = s.pi_n(2).unwrap();
            for v in 1..pn.len() {
                let (m, n) = (pn.dirs()[v - 1], pn.dirs()[v]);
                assert!(oracle::sigma_chain_brute(o.cartan(), o.lambda(), m, n, &pn.sigmas()[v]));
            }
        }
    }

    #[test]
    fn non_canonical_representative() {
        let c = CartanData::new(4, 3).unwrap();
        let base = shape_orbit(c, Weight::from_i64(3, -2)).unwrap();
        let moved = shape_orbit(c, base.xm_lambda(4)).unwrap();
        let s = QSequence::new(moved).unwrap();
        assert_eq!(s.offset(), -4);
        let p1 = s.pi_n(1).unwrap();
        assert_eq!(p1.dirs(), &[-3, -4, -5]);
        assert_eq!(&p1.sigmas()[1..3], &[rational(1, 3), rational(1, 2)]);
        assert!(s.cmn_check(&p1, -4, 1).unwrap());
    }

    #[test]
    fn form_violations() {
        let c = CartanData::new(3, 3).unwrap();
        let o = shape_orbit(c, Weight::from_i64(2, -2)).unwrap();
        assert!(matches!(QSequence::new(o), Err(Error::FormViolation(_))));
        let o = shape_orbit(c, Weight::from_i64(1, -1)).unwrap();
        assert!(matches!(QSequence::new(o), Err(Error::FormViolation(_))));
    }

    #[test]
    fn q_identities_window() {
        for (a, b, k, l) in [
            (4, 3, 3, -2),
            (3, 4, 2, -3),
            (5, 3, 4, -3),
            (5, 5, 7, -3),
            (3, 7, 3, -5),
        ] {
            let s = qs(a, b, k, l);
            for m in -10..=10 {
                let (qm, pm) = (s.q(m), s.p(m));
                assert!(qm.is_positive() && qm < pm, "{a},{b},{k},{l} m={m}");
                assert_eq!(&(&qm * s.p(m + 1) - s.q(m + 1) * &pm), s.det());
                assert!(s.ratio(m + 1) < s.ratio(m));
            }
        }
    }
}
