use crate::error::{Error, Result};

fn nonpositive_integer(a: f64) -> Option<usize> {
    (a <= 0.0 && a.fract() == 0.0).then(|| (-a) as usize)
}

/// `₂F₁(a, b; c; x)` for parameter sets where the series terminates.
///
/// One of `a`, `b` must be a nonpositive integer `−m`; the result is the
/// exact sum of the first `m + 1` terms.
pub fn hyp2f1_terminating(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let m = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(p), Some(q)) => p.min(q),
        (Some(p), None) | (None, Some(p)) => p,
        (None, None) => {
            return Err(Error::domain(format!(
                "2F1({a}, {b}; {c}; x) does not terminate"
            )))
        }
    };
    if let Some(k) = nonpositive_integer(c) {
        if k < m {
            return Err(Error::domain(format!(
                "2F1 denominator (c)_k vanishes before termination (c = {c})"
            )));
        }
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..m {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
    }
    Ok(sum)
}
