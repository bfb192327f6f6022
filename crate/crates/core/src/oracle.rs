//! Brute-force reference computations that use nothing but explicit weights,
//! `reflect` and `pairing`. They back the test-suite and `verify`.

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::cartan::{CartanData, RootIndex, Weight, WeylIndex};
use crate::error::{Error, Result};

/// Orbit elements `x_j λ` for `j` in `[lo, hi]`, computed by word folding.
pub fn orbit_window(cartan: CartanData, lambda: &Weight, lo: i64, hi: i64) -> Vec<(i64, Weight)> {
    (lo..=hi)
        .map(|j| (j, cartan.act_xm_oracle(WeylIndex(j), lambda)))
        .collect()
}

/// Covers `μ -> r_i μ` inside the window that go strictly downward, i.e.
/// `⟨μ, α_i^∨⟩ < 0`.
fn down_covers<'a>(
    cartan: CartanData,
    window: &'a [(i64, Weight)],
    idx: usize,
) -> impl Iterator<Item = (usize, RootIndex)> + 'a {
    let mu = window[idx].1.clone();
    RootIndex::ALL.into_iter().filter_map(move |i| {
        if !mu.pairing(i).is_negative() {
            return None;
        }
        let target = cartan.reflect(i, &mu);
        window.iter().position(|(_, w)| *w == target).map(|pos| (pos, i))
    })
}

/// Every maximal chain `x_m λ = μ_0 > μ_1 > ... > μ_s = x_n λ` of simple
/// down-covers inside a window padded by `pad`, as lists of window positions.
type Chain = Vec<(usize, RootIndex)>;

fn chains(cartan: CartanData, lambda: &Weight, m: i64, n: i64, pad: i64) -> (Vec<(i64, Weight)>, Vec<Chain>) {
    let lo = n.min(m) - pad;
    let hi = n.max(m) + pad;
    let window = orbit_window(cartan, lambda, lo, hi);
    let start = (m - lo) as usize;
    let goal = (n - lo) as usize;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Chain)> = vec![(start, Vec::new())];
    let limit = (hi - lo + 1) as usize;
    while let Some((pos, path)) = stack.pop() {
        if pos == goal {
            out.push(path.clone());
        }
        if path.len() >= limit {
            continue;
        }
        for (next, i) in down_covers(cartan, &window, pos) {
            let mut p = path.clone();
            p.push((next, i));
            stack.push((next, p));
        }
    }
    (window, out)
}

/// Length of the longest chain of simple down-covers from `x_m λ` to `x_n λ`.
pub fn chain_dist(cartan: CartanData, lambda: &Weight, m: i64, n: i64, pad: i64) -> Result<u64> {
    let (_, found) = chains(cartan, lambda, m, n, pad);
    found
        .iter()
        .map(|c| c.len() as u64)
        .max()
        .ok_or(Error::BadOrder { m, n })
}

/// Direct test of the σ-chain definition: some chain of down-covers
/// `μ_{k-1} -> μ_k = r_{i_k} μ_{k-1}` from `x_m λ` to `x_n λ`, each step of
/// distance one, with `σ ⟨μ_{k-1}, α_{i_k}^∨⟩ ∈ ℤ_{<0}`.
pub fn sigma_chain_brute(cartan: CartanData, lambda: &Weight, m: i64, n: i64, sigma: &BigRational) -> bool {
    if m == n {
        return true;
    }
    let (window, found) = chains(cartan, lambda, m, n, 2);
    let start = found.iter().map(|c| c.len()).max().unwrap_or(0);
    found.iter().filter(|c| c.len() == start).any(|c| {
        let mut prev = (m - window[0].0) as usize;
        c.iter().all(|&(pos, i)| {
            let v = sigma * BigRational::from_integer(window[prev].1.pairing(i));
            prev = pos;
            v.denom().is_one() && v.is_negative()
        })
    })
}

/// [`sigma_chain_brute`] for many `σ` at once, enumerating chains only once.
pub fn sigma_chain_brute_many(
    cartan: CartanData,
    lambda: &Weight,
    m: i64,
    n: i64,
    sigmas: &[BigRational],
) -> Vec<bool> {
    if m == n {
        return vec![true; sigmas.len()];
    }
    let (window, found) = chains(cartan, lambda, m, n, 2);
    let start = found.iter().map(|c| c.len()).max().unwrap_or(0);
    let longest: Vec<_> = found.iter().filter(|c| c.len() == start).collect();
    sigmas
        .iter()
        .map(|sigma| {
            longest.iter().any(|c| {
                let mut prev = (m - window[0].0) as usize;
                c.iter().all(|&(pos, i)| {
                    let v = sigma * BigRational::from_integer(window[prev].1.pairing(i));
                    prev = pos;
                    v.denom().is_one() && v.is_negative()
                })
            })
        })
        .collect()
}

/// Whether some element of the orbit has a coordinate of absolute value one,
/// scanning `x_j λ` for `j` in `[-radius, radius]` by word folding.
pub fn has_unit_coordinate(cartan: CartanData, lambda: &Weight, radius: i64) -> bool {
    orbit_window(cartan, lambda, -radius, radius)
        .iter()
        .any(|(_, w)| w.c1.abs().is_one() || w.c2.abs().is_one())
}

/// Whether some element of the orbit in the window is dominant or antidominant.
pub fn meets_chamber(cartan: CartanData, lambda: &Weight, radius: i64) -> bool {
    orbit_window(cartan, lambda, -radius, radius).iter().any(|(_, w)| {
        let dom = !w.c1.is_negative() && !w.c2.is_negative();
        let anti = !w.c1.is_positive() && !w.c2.is_positive();
        dom || anti
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;

    #[test]
    fn brute_chain_examples() {
        let c = CartanData::new(3, 3).unwrap();
        let lam = Weight::from_i64(2, -2);
        assert!(sigma_chain_brute(c, &lam, 2, 0, &rational(1, 2)));
        assert!(!sigma_chain_brute(c, &lam, 2, 0, &rational(1, 3)));
        let c = CartanData::new(4, 3).unwrap();
        let lam = Weight::from_i64(3, -2);
        assert!(!sigma_chain_brute(c, &lam, 1, -1, &rational(1, 2)));
        assert!(sigma_chain_brute(c, &lam, 1, 0, &rational(1, 3)));
        assert_eq!(chain_dist(c, &lam, 3, -2, 4).unwrap(), 5);
    }

    #[test]
    fn unit_scan() {
        let c = CartanData::new(2, 3).unwrap();
        assert!(has_unit_coordinate(c, &Weight::from_i64(1, -1), 10));
        let c = CartanData::new(4, 3).unwrap();
        assert!(!has_unit_coordinate(c, &Weight::from_i64(3, -2), 10));
        assert!(meets_chamber(c, &Weight::from_i64(1, 1), 3));
    }
}
