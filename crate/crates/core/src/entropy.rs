//! Binary entropy, its inverse on (0, 1/2], and the constants
//! `gamma_t = (t * h^{-1}(1/t))^{-1}` used by the dimension bounds for
//! tuple hypergraphs. All logarithms are base 2.

use crate::error::{Error, Result};

/// A point on the binary entropy curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyValue {
    pub x: f64,
    pub h_of_x: f64,
}

impl EntropyValue {
    pub fn at(x: f64) -> Result<Self> {
        Ok(EntropyValue {
            x,
            h_of_x: entropy(x)?,
        })
    }

    /// The curve point with the given entropy, on the left branch (0, 1/2].
    pub fn with_entropy(y: f64) -> Result<Self> {
        let x = entropy_inverse(y)?;
        Ok(EntropyValue { x, h_of_x: y })
    }
}

/// h(x) = -x log2 x - (1-x) log2 (1-x) for x in (0,1).
pub fn entropy(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("entropy needs x in (0,1), got {x}")));
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// The unique x in (0, 1/2] with entropy(x) = y, for y in (0, 1].
///
/// Bisection: h is monotone increasing on (0, 1/2] and its derivative blows
/// up near 0, so 80 halvings of [0, 1/2] are run instead of Newton steps;
/// that pins the result well below 1e-12 absolute error.
pub fn entropy_inverse(y: f64) -> Result<f64> {
    if !(y > 0.0 && y <= 1.0) {
        return Err(Error::Domain(format!(
            "entropy_inverse needs y in (0,1], got {y}"
        )));
    }
    if y == 1.0 {
        return Ok(0.5);
    }
    let mut lo = 0.0f64;
    let mut hi = 0.5f64;
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let h = entropy(mid).expect("mid stays in (0, 1/2)");
        if h < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// gamma_t = 1 / (t * h^{-1}(1/t)), defined for t >= 2.
pub fn gamma(t: usize) -> Result<f64> {
    if t < 2 {
        return Err(Error::Domain(format!(
            "gamma is defined for t >= 2, got t={t}"
        )));
    }
    let x = entropy_inverse(1.0 / t as f64)?;
    Ok(1.0 / (t as f64 * x))
}
