use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::arma::Arma;
use super::{SarimaParams, SarimaSpec};
use crate::error::{Error, Result};
use crate::series::{undifference, TimeSeries};

/// Draws `n` observations of the model, seeded and reproducible.
///
/// The ARMA recursion on the differenced scale starts from zero pre-sample
/// values and discards `max(200, 10·(p + q + period·(P + Q)))` steps of
/// burn-in before the result is integrated back to the original scale.
pub fn simulate(spec: &SarimaSpec, params: &SarimaParams, n: usize, seed: u64) -> Result<TimeSeries> {
    spec.validate()?;
    params.validate(spec)?;
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let arma = Arma::new(spec, params);
    let burn = 200.max(10 * (spec.p + spec.q + spec.period * (spec.seasonal_p + spec.seasonal_q)));
    let total = burn + n;
    let sd = params.sigma2.sqrt();
    let mu = params.differenced_mean(spec);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::with_capacity(total);
    let mut x = Vec::with_capacity(total);
    for t in 0..total {
        let shock: f64 = rng.sample::<f64, _>(StandardNormal) * sd;
        let mut v = shock;
        for (i, a) in arma.ar.iter().enumerate() {
            if t > i {
                v += a * x[t - 1 - i];
            }
        }
        for (j, b) in arma.ma.iter().enumerate() {
            if t > j {
                v += b * e[t - 1 - j];
            }
        }
        e.push(shock);
        x.push(v);
    }
    let diff = spec.difference_spec();
    let w: Vec<f64> = x.iter().map(|v| v + mu).collect();
    let integrated = undifference(&w, &diff, &vec![0.0; diff.lost()])?;
    let values = integrated[integrated.len() - n..].to_vec();
    TimeSeries::new(values, spec.period)
}
