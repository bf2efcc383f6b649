//! Least-squares polynomial fits.
//!
//! Abscissae are mapped affinely onto `[-1, 1]` before the Vandermonde system
//! is solved by Householder QR; the coefficients are then expanded back onto
//! the raw axis. Without the mapping an order-4 fit over `m ∈ [1, 49]` has a
//! design matrix with condition number around 1e7.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Coefficients, constant term first, of the degree-`order` polynomial
/// minimising the squared residual over `(xs, ys)`.
pub fn polyfit(xs: &[f64], ys: &[f64], order: usize) -> Result<Vec<f64>> {
    if xs.len() != ys.len() {
        return Err(Error::Mismatch(format!("{} abscissae but {} ordinates", xs.len(), ys.len())));
    }
    let needed = order + 1;
    if xs.len() < needed {
        return Err(Error::InsufficientPoints { needed, got: xs.len() });
    }
    let (lo, hi) = xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    if lo.is_nan() || hi.is_nan() || hi <= lo {
        return Err(Error::DegenerateFit);
    }
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let design = DMatrix::from_fn(xs.len(), needed, |i, k| ((xs[i] - centre) / half).powi(k as i32));
    let qr = design.qr();
    let r = qr.r();
    let scale = r.diagonal().amax();
    if r.diagonal().iter().any(|d| d.abs() <= scale * 1e-12) {
        return Err(Error::DegenerateFit);
    }
    let rhs = qr.q().transpose() * DVector::from_column_slice(ys);
    let scaled = r.solve_upper_triangular(&rhs).ok_or(Error::DegenerateFit)?;

    // p(x) = sum_k c_k ((x - centre) / half)^k, expanded binomially
    let mut coeffs = vec![0.0; needed];
    for (k, &c) in scaled.iter().enumerate() {
        let ck = c / half.powi(k as i32);
        let mut binom = 1.0;
        for (j, slot) in coeffs.iter_mut().enumerate().take(k + 1) {
            *slot += ck * binom * (-centre).powi((k - j) as i32);
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
    }
    Ok(coeffs)
}

/// Evaluates coefficients (constant term first) at `x` by Horner's rule.
pub fn polyval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::{stream, StreamId};
    use rand::Rng;

    fn residual_norm(xs: &[f64], ys: &[f64], coeffs: &[f64]) -> f64 {
        // direct power-sum evaluation, independent of polyval
        xs.iter()
            .zip(ys)
            .map(|(&x, &y)| {
                let fx: f64 = coeffs.iter().enumerate().map(|(k, c)| c * x.powi(k as i32)).sum();
                (fx - y).powi(2)
            })
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn zero_data_gives_zero_coefficients() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        for c in polyfit(&xs, &[0.0; 10], 4).unwrap() {
            assert!(c.abs() < 1e-14);
        }
    }

    #[test]
    fn exact_line() {
        let xs: Vec<f64> = (0..20).map(|i| f64::from(i) * 0.3 - 1.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x + 1.0).collect();
        let c = polyfit(&xs, &ys, 1).unwrap();
        assert!((c[0] - 1.0).abs() < 1e-10 && (c[1] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn quartic_on_p_grid() {
        let xs: Vec<f64> = (0..=100).map(|i| f64::from(i) / 100.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x.powi(4)).collect();
        let c = polyfit(&xs, &ys, 4).unwrap();
        for (got, want) in c.iter().zip([0.0, 0.0, 0.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-8, "{c:?}");
        }
        assert!(residual_norm(&xs, &ys, &c) < 1e-8);
    }

    #[test]
    fn quartic_on_m_grid() {
        let xs: Vec<f64> = (1..=49).map(f64::from).collect();
        let truth = [3.0, -0.5, 0.02, 1e-3, -2e-5];
        let ys: Vec<f64> = xs.iter().map(|&x| polyval(&truth, x)).collect();
        let c = polyfit(&xs, &ys, 4).unwrap();
        for (got, want) in c.iter().zip(truth) {
            assert!((got - want).abs() < 1e-8 * want.abs().max(1.0), "{c:?}");
        }
    }

    #[test]
    fn random_cubics_fit_exactly_at_order_four() {
        let mut rng = stream(21, StreamId::Evolution);
        for _ in 0..50 {
            let truth: Vec<f64> = (0..4).map(|_| rng.random_range(-3.0..3.0)).collect();
            let xs: Vec<f64> = (0..50).map(|_| rng.random_range(-1.0..1.0)).collect();
            let ys: Vec<f64> = xs.iter().map(|&x| polyval(&truth, x)).collect();
            let c = polyfit(&xs, &ys, 4).unwrap();
            assert!(residual_norm(&xs, &ys, &c) < 1e-8);
            assert!(c[4].abs() < 1e-8);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(polyfit(&[1.0; 6], &[0.0; 6], 4), Err(Error::DegenerateFit));
        assert_eq!(polyfit(&[0.0, 1.0], &[0.0, 1.0], 4), Err(Error::InsufficientPoints { needed: 5, got: 2 }));
        assert!(polyfit(&[0.0, 1.0, 2.0], &[0.0, 1.0], 1).is_err());
        // five points but only two distinct abscissae
        assert_eq!(polyfit(&[0.0, 0.0, 1.0, 1.0, 1.0], &[0.0; 5], 4), Err(Error::DegenerateFit));
    }
}
