//! Finite-difference Wirtinger derivatives of functions of one complex variable.

use num_complex::Complex;

use crate::error::Result;

/// Five-point stencil for `∂²f/∂λ∂λ̄ = Δf / 4`.
pub fn dbar_d_stencil(f: &mut impl FnMut(Complex<f64>) -> Result<f64>, at: Complex<f64>, h: f64) -> Result<f64> {
    let center = f(at)?;
    dbar_d_with_center(f, at, h, center)
}

fn dbar_d_with_center(
    f: &mut impl FnMut(Complex<f64>) -> Result<f64>,
    at: Complex<f64>,
    h: f64,
    center: f64,
) -> Result<f64> {
    let (dx, dy) = (Complex::new(h, 0.0), Complex::new(0.0, h));
    let ring = f(at + dx)? + f(at - dx)? + f(at + dy)? + f(at - dy)?;
    Ok((ring - 4.0 * center) / (4.0 * h * h))
}

/// `∂²f/∂λ∂λ̄` with one Richardson step over `h` and `h/2`.
pub fn dbar_d(mut f: impl FnMut(Complex<f64>) -> Result<f64>, at: Complex<f64>, h: f64) -> Result<f64> {
    let center = f(at)?;
    let coarse = dbar_d_with_center(&mut f, at, h, center)?;
    let fine = dbar_d_with_center(&mut f, at, h / 2.0, center)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// `∂f/∂λ = (f_x - i f_y) / 2` by central differences with one Richardson step.
pub fn wirtinger(mut f: impl FnMut(Complex<f64>) -> Result<f64>, at: Complex<f64>, h: f64) -> Result<Complex<f64>> {
    let mut partial = |dir: Complex<f64>| -> Result<f64> {
        let mut central = |h: f64| -> Result<f64> { Ok((f(at + dir * h)? - f(at - dir * h)?) / (2.0 * h)) };
        let coarse = central(h)?;
        let fine = central(h / 2.0)?;
        Ok((4.0 * fine - coarse) / 3.0)
    };
    let fx = partial(Complex::new(1.0, 0.0))?;
    let fy = partial(Complex::new(0.0, 1.0))?;
    Ok(Complex::new(fx, -fy) * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn modulus_squared_has_unit_levi_form() {
        let v = dbar_d(|z| Ok(z.norm_sqr()), c(0.3, -0.2), 1e-3).unwrap();
        assert!((v - 1.0).abs() < 1e-8);
    }

    #[test]
    fn harmonic_functions_vanish() {
        for at in [c(0.0, 0.0), c(0.5, 0.5)] {
            assert!(dbar_d(|z| Ok(z.re), at, 1e-3).unwrap().abs() < 1e-8);
            assert!(dbar_d(|z| Ok((z * z * z).re), at, 1e-3).unwrap().abs() < 1e-8);
        }
    }

    #[test]
    fn richardson_improves_the_order() {
        // f = |λ|⁴ has ∂∂̄f = 4|λ|² and a nonzero fourth derivative
        let f = |z: Complex<f64>| Ok(z.norm_sqr().powi(2) + z.re.powi(6));
        let at = c(0.4, 0.1);
        let exact = 4.0 * at.norm_sqr() + 7.5 * at.re.powi(4);
        let err = |h: f64| (dbar_d_stencil(&mut { f }, at, h).unwrap() - exact).abs();
        let ratio = err(1e-2) / err(5e-3);
        assert!((ratio - 4.0).abs() < 0.1, "{ratio}");
        let rich = (dbar_d(f, at, 1e-2).unwrap() - exact).abs();
        assert!(rich < err(1e-2) / 100.0);
    }

    #[test]
    fn stencil_error_is_second_order() {
        let f = |z: Complex<f64>| Ok((z.re * 1.3).exp() * (z.im * 0.7).cos());
        let at = c(0.2, -0.4);
        let exact = (1.69 - 0.49) / 4.0 * (at.re * 1.3).exp() * (at.im * 0.7).cos();
        for h in [1e-2, 5e-3] {
            let err = (dbar_d_stencil(&mut { f }, at, h).unwrap() - exact).abs();
            assert!(err <= 10.0 * h * h, "h = {h}: {err}");
        }
    }

    #[test]
    fn wirtinger_of_holomorphic_and_antiholomorphic_parts() {
        // ∂ Re(λ²) = λ and ∂|λ|² = λ̄
        let at = c(0.3, 0.7);
        let d = wirtinger(|z| Ok((z * z).re + z.norm_sqr()), at, 1e-3).unwrap();
        assert!((d - (at + at.conj())).norm() < 1e-9, "{d}");
    }

    #[test]
    fn errors_propagate() {
        let r = dbar_d(|z| if z.re > 0.0 { Err(crate::Error::NonFinite("x")) } else { Ok(0.0) }, c(0.0, 0.0), 0.1);
        assert!(r.is_err());
    }
}
