//! `Li2` and the Rogers dilogarithm on `[0, 1]`.
//!
//! `L(x) = Li2(x) + 1/2 log(x) log(1 - x)`, extended by `L(0) = 0` and
//! `L(1) = pi^2/6`. The power series is summed for `x <= 1/2`; larger
//! arguments go through the reflection `L(x) + L(1 - x) = L(1)`.

use core::f64::consts::PI;

use crate::{Error, Result};

/// `L(1) = Li2(1) = pi^2 / 6`.
pub const L1: f64 = PI * PI / 6.0;

fn check_domain(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(x))
    }
}

/// `sum_{k>=1} x^k / k^2` for `0 <= x <= 1/2`.
fn li2_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = x;
    let mut k = 1.0;
    loop {
        let term = power / (k * k);
        sum += term;
        if term <= sum * 1e-18 {
            return sum;
        }
        power *= x;
        k += 1.0;
    }
}

/// The dilogarithm `Li2(x)` for `x` in `[0, 1]`.
pub fn li2(x: f64) -> Result<f64> {
    check_domain(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(L1);
    }
    if x <= 0.5 {
        return Ok(li2_series(x));
    }
    let y = 1.0 - x;
    Ok(L1 - libm::log(x) * libm::log(y) - li2_series(y))
}

/// `L(x)` for `x <= 1/2`, away from the `x = 0` endpoint.
fn rogers_small(x: f64) -> f64 {
    li2_series(x) + 0.5 * libm::log(x) * libm::log1p(-x)
}

/// The Rogers dilogarithm `L(x)` for `x` in `[0, 1]`.
pub fn rogers_l(x: f64) -> Result<f64> {
    check_domain(x)?;
    if x < 1e-300 {
        return Ok(0.0);
    }
    if 1.0 - x < 1e-15 {
        return Ok(L1);
    }
    if x <= 0.5 {
        Ok(rogers_small(x))
    } else {
        Ok(L1 - rogers_small(1.0 - x))
    }
}
