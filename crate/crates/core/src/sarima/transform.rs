//! Map between unconstrained reals and the stationary (or invertible)
//! region via partial autocorrelations: `u -> tanh(u) -> Durbin-Levinson`.

/// Coefficients `a` of `1 - a_1 z - … - a_p z^p` from partial autocorrelations.
pub(crate) fn partials_to_coefs(partials: &[f64]) -> Vec<f64> {
    let mut a: Vec<f64> = Vec::with_capacity(partials.len());
    for (k, &r) in partials.iter().enumerate() {
        let prev = a.clone();
        for j in 0..k {
            a[j] = prev[j] - r * prev[k - 1 - j];
        }
        a.push(r);
    }
    a
}

/// Inverse of [`partials_to_coefs`]; `None` when the polynomial is not stationary.
pub(crate) fn coefs_to_partials(coefs: &[f64]) -> Option<Vec<f64>> {
    let p = coefs.len();
    let mut a = coefs.to_vec();
    let mut partials = vec![0.0; p];
    for k in (0..p).rev() {
        let r = a[k];
        if r.is_nan() || r.abs() >= 1.0 {
            return None;
        }
        partials[k] = r;
        let denom = 1.0 - r * r;
        let prev = a.clone();
        for j in 0..k {
            a[j] = (prev[j] + r * prev[k - 1 - j]) / denom;
        }
        a.truncate(k);
    }
    Some(partials)
}

pub(crate) fn is_stationary(phi: &[f64]) -> bool {
    coefs_to_partials(phi).is_some()
}

/// `1 + θ_1 z + …` is invertible iff `1 - (-θ_1) z - …` is stationary.
pub(crate) fn is_invertible(theta: &[f64]) -> bool {
    let neg: Vec<f64> = theta.iter().map(|t| -t).collect();
    is_stationary(&neg)
}

pub(crate) fn ar_from_unconstrained(u: &[f64]) -> Vec<f64> {
    let partials: Vec<f64> = u.iter().map(|v| v.tanh()).collect();
    partials_to_coefs(&partials)
}

pub(crate) fn ma_from_unconstrained(u: &[f64]) -> Vec<f64> {
    ar_from_unconstrained(u).into_iter().map(|v| -v).collect()
}

/// Unconstrained coordinates for AR coefficients, shrinking them toward zero
/// until they are stationary.
#[cfg(test)]
pub(crate) fn ar_to_unconstrained(phi: &[f64]) -> Vec<f64> {
    let mut scaled = phi.to_vec();
    loop {
        if let Some(partials) = coefs_to_partials(&scaled) {
            if partials.iter().all(|r| r.abs() < 0.99) {
                return partials.iter().map(|r| r.atanh()).collect();
            }
        }
        for (i, v) in scaled.iter_mut().enumerate() {
            *v *= 0.9f64.powi(i as i32 + 1);
        }
    }
}

#[cfg(test)]
pub(crate) fn ma_to_unconstrained(theta: &[f64]) -> Vec<f64> {
    let neg: Vec<f64> = theta.iter().map(|t| -t).collect();
    ar_to_unconstrained(&neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ar2_known_region() {
        // φ = (0.5, 0.3) is stationary; (0.5, 0.6) is not (φ1 + φ2 > 1).
        assert!(is_stationary(&[0.5, 0.3]));
        assert!(!is_stationary(&[0.5, 0.6]));
        assert!(!is_stationary(&[1.0]));
        assert!(is_invertible(&[-0.9]));
        assert!(!is_invertible(&[-1.0]));
    }

    #[test]
    fn ar1_is_tanh() {
        assert!((ar_from_unconstrained(&[0.3])[0] - 0.3f64.tanh()).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn round_trip(u in prop::collection::vec(-2.5f64..2.5, 1..6)) {
            let phi = ar_from_unconstrained(&u);
            prop_assert!(is_stationary(&phi));
            let back = ar_to_unconstrained(&phi);
            for (a, b) in back.iter().zip(&u) {
                prop_assert!((a - b).abs() < 1e-8);
            }
            let theta = ma_from_unconstrained(&u);
            prop_assert!(is_invertible(&theta));
        }
    }
}
