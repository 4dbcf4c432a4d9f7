//! Argument value parsers.

use num_complex::Complex;

fn numbers<const N: usize>(s: &str, what: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {what}, got {s:?}"));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        let x: f64 = part.parse().map_err(|_| format!("{part:?} is not a number"))?;
        if !x.is_finite() {
            return Err(format!("{part:?} is not finite"));
        }
        *slot = x;
    }
    Ok(out)
}

/// `"re,im"`.
pub fn complex(s: &str) -> Result<Complex<f64>, String> {
    let [re, im] = numbers(s, "re,im")?;
    Ok(Complex::new(re, im))
}

/// `"a,b"`.
pub fn pair(s: &str) -> Result<(f64, f64), String> {
    let [a, b] = numbers(s, "a,b")?;
    Ok((a, b))
}

/// Axis-aligned rectangle in the τ-plane.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

/// `"re_min,re_max,im_min,im_max"`.
pub fn region(s: &str) -> Result<Region, String> {
    let [re_min, re_max, im_min, im_max] = numbers(s, "re_min,re_max,im_min,im_max")?;
    if re_min > re_max || im_min > im_max {
        return Err(format!("region {s:?} has reversed bounds"));
    }
    Ok(Region { re_min, re_max, im_min, im_max })
}

/// `"N"` or `"NxM"` (columns by rows).
pub fn resolution(s: &str) -> Result<(usize, usize), String> {
    let positive = |t: &str| match t.trim().parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("{t:?} is not a positive integer")),
    };
    match s.split_once(['x', 'X']) {
        Some((cols, rows)) => Ok((positive(cols)?, positive(rows)?)),
        None => positive(s).map(|n| (n, n)),
    }
}
