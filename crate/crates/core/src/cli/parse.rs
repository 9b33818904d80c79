//! Literal formats accepted on the command line.

use num_complex::Complex64 as C64;

/// Parses `a+bi` / `a-bi`; both parts are required.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let body = t
        .strip_suffix('i')
        .ok_or_else(|| format!("'{s}' is not of the form a+bi"))?;
    // the separating sign is the last '+'/'-' not at the start and not part
    // of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(|| format!("'{s}' needs both a real and an imaginary part"))?;
    let re: f64 = body[..split]
        .parse()
        .map_err(|_| format!("bad real part in '{s}'"))?;
    let im: f64 = body[split..]
        .parse()
        .map_err(|_| format!("bad imaginary part in '{s}'"))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(C64::new(re, im))
}

/// A complex literal or a plain real number.
pub fn parse_scalar(s: &str) -> Result<C64, String> {
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(C64::new(x, 0.0)),
        Ok(_) => Err(format!("'{s}' is not finite")),
        Err(_) => parse_complex(s),
    }
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

/// `start:stop:count`, inclusive of both ends.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count).map(|k| self.start + step * k as f64).collect()
    }
}

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{s}' must be start:stop:count"));
    }
    let start = parse_real(parts[0])?;
    let stop = parse_real(parts[1])?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("grid count '{}' is not a positive integer", parts[2]))?;
    if count == 0 {
        return Err("grid count must be at least 1".into());
    }
    Ok(Grid { start, stop, count })
}
