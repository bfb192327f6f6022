//! Shapes `λ = 2λ'`: the gap class `r` and the projection `B(dλ') → B(2λ')`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lspath::{shape_orbit, split, ConcatPath, LSPath};

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Require `λ = 2λ'` with `λ'` coprime.
pub fn check_d2(path: &LSPath) -> Result<()> {
    if path.orbit().content() != BigInt::from(2) {
        return Err(Error::NotD2Shape);
    }
    Ok(())
}

/// Position (1-based junction index) and size of the unique gap `>= 2`.
pub fn big_gap(path: &LSPath) -> Result<Option<(usize, i64)>> {
    check_d2(path)?;
    let mut found = None;
    for (v, w) in path.dirs().windows(2).enumerate() {
        let g = w[0] - w[1];
        if g >= 2 {
            if found.is_some() {
                return Err(Error::MultipleGaps);
            }
            found = Some((v + 1, g));
        }
    }
    Ok(found)
}

/// `r` with the path in `B_r(λ)`: `0` when all gaps are `1`, else `⌊g/2⌋`.
pub fn z_gap_class(path: &LSPath) -> Result<u64> {
    Ok(match big_gap(path)? {
        None => 0,
        Some((_, g)) => (g / 2) as u64,
    })
}

/// The large gap, if any, sits at `σ = 1/2`, and `π(1/2)` is integral.
pub fn gap_position_ok(path: &LSPath) -> Result<bool> {
    let Some((v, _)) = big_gap(path)? else {
        return Ok(true);
    };
    if path.sigmas()[v] != half() {
        return Ok(false);
    }
    Ok(path.evaluate(&half())?.is_integral())
}

/// The seed of `B_r(λ)`: `π_λ` for `r = 0`, otherwise the two-step path
/// `(x_{s+r} λ, x_{s-r} λ; 0, 1/2, 1)` around the canonical index `s`.
pub fn gap_seed(path_shape: &LSPath, r: u64) -> Result<LSPath> {
    check_d2(path_shape)?;
    let orbit = path_shape.orbit().clone();
    let s = orbit.canonical_index();
    if r == 0 {
        return LSPath::straight(orbit, s);
    }
    let r = r as i64;
    LSPath::validate(
        orbit,
        vec![s + r, s - r],
        vec![BigRational::zero(), half(), BigRational::one()],
    )
}

/// `Φ`: cut a path of shape `dλ'` into `d` factors, keep the first two and
/// glue them into a path of shape `2λ'`.
pub fn phi_projection(path: &LSPath, d: u64) -> Result<LSPath> {
    if d < 2 {
        return Err(Error::NotDivisible(d));
    }
    if d == 2 {
        path.lambda()
            .div_exact(&BigInt::from(2))
            .ok_or(Error::NotDivisible(2))?;
        return Ok(path.clone());
    }
    let mut factors = split(path, d)?;
    factors.truncate(2);
    let two = &path
        .lambda()
        .div_exact(&BigInt::from(d))
        .expect("split checked divisibility")
        * &BigInt::from(2);
    let big = shape_orbit(path.cartan(), two)?;
    ConcatPath::new(factors)?.flatten(big)
}
