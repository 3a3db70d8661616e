//! Derivative-free minimizers shared by the ARIMA fitter and the smoothing
//! baselines.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Nelder-Mead simplex settings.
#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    /// Converged when `f_max - f_min < tol * (1 + |f_min|)` over the simplex.
    pub tol: f64,
    /// Evaluation budget per run.
    pub max_evals: usize,
    /// Additional runs started from the best point so far.
    pub max_restarts: usize,
    /// Initial simplex edge length per coordinate.
    pub step: f64,
    /// Seed for jittered restarts after a run exhausts its budget.
    pub seed: u64,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self {
            tol: 1e-8,
            max_evals: 5000,
            max_restarts: 3,
            step: 0.1,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub f: f64,
    pub evals: usize,
    pub converged: bool,
}

impl NelderMead {
    /// Minimizes `f` from `x0`. Non-finite objective values are treated as +inf.
    pub fn minimize<F>(&self, mut f: F, x0: &[f64]) -> Minimum
    where
        F: FnMut(&[f64]) -> f64,
    {
        let mut eval = |x: &[f64]| {
            let v = f(x);
            if v.is_finite() {
                v
            } else {
                f64::INFINITY
            }
        };
        let f0 = eval(x0);
        let mut best = Minimum {
            x: x0.to_vec(),
            f: f0,
            evals: 1,
            converged: false,
        };
        if x0.is_empty() {
            best.converged = true;
            return best;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut start = x0.to_vec();
        for attempt in 0..=self.max_restarts {
            let run = self.run(&mut eval, &start);
            let run_converged = run.converged;
            let improved = run.f < best.f - self.tol * (1.0 + best.f.abs());
            let evals = best.evals + run.evals;
            if run.f <= best.f {
                best = Minimum { evals, ..run };
            } else {
                best.evals = evals;
                best.converged = best.converged || run_converged;
            }
            if attempt > 0 && best.converged && !improved {
                break;
            }
            start = best.x.clone();
            if !run_converged {
                for v in start.iter_mut() {
                    let z: f64 = rng.sample(StandardNormal);
                    *v += 0.1 * z;
                }
            }
        }
        best
    }

    fn run<F>(&self, f: &mut F, x0: &[f64]) -> Minimum
    where
        F: FnMut(&[f64]) -> f64,
    {
        let n = x0.len();
        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        simplex.push(x0.to_vec());
        for i in 0..n {
            let mut x = x0.to_vec();
            x[i] += self.step * (1.0 + 0.5 * x0[i].abs());
            simplex.push(x);
        }
        let mut values: Vec<f64> = simplex.iter().map(|x| f(x)).collect();
        let mut evals = n + 1;
        let mut converged = false;

        let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
        while evals < self.max_evals {
            let mut order: Vec<usize> = (0..=n).collect();
            order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
            simplex = order.iter().map(|&i| simplex[i].clone()).collect();
            values = order.iter().map(|&i| values[i]).collect();

            let spread = values[n] - values[0];
            if spread.is_finite() && spread < self.tol * (1.0 + values[0].abs()) {
                converged = true;
                break;
            }

            let mut centroid = vec![0.0; n];
            for x in &simplex[..n] {
                for (c, v) in centroid.iter_mut().zip(x) {
                    *c += v / n as f64;
                }
            }
            let toward = |t: f64, from: &[f64]| -> Vec<f64> {
                centroid.iter().zip(from).map(|(c, w)| c + t * (w - c)).collect()
            };

            let reflected = toward(-alpha, &simplex[n]);
            let fr = f(&reflected);
            evals += 1;
            if fr < values[0] {
                let expanded = toward(-gamma, &simplex[n]);
                let fe = f(&expanded);
                evals += 1;
                if fe < fr {
                    simplex[n] = expanded;
                    values[n] = fe;
                } else {
                    simplex[n] = reflected;
                    values[n] = fr;
                }
                continue;
            }
            if fr < values[n - 1] {
                simplex[n] = reflected;
                values[n] = fr;
                continue;
            }
            let (contracted, fc) = if fr < values[n] {
                let c = toward(-rho, &simplex[n]);
                let v = f(&c);
                (c, v)
            } else {
                let c = toward(rho, &simplex[n]);
                let v = f(&c);
                (c, v)
            };
            evals += 1;
            if fc < values[n].min(fr) {
                simplex[n] = contracted;
                values[n] = fc;
                continue;
            }
            let best = simplex[0].clone();
            for i in 1..=n {
                let shrunk: Vec<f64> = best.iter().zip(&simplex[i]).map(|(b, x)| b + sigma * (x - b)).collect();
                values[i] = f(&shrunk);
                simplex[i] = shrunk;
            }
            evals += n;
        }
        let (i_best, _) = values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("simplex is non-empty");
        Minimum {
            x: simplex[i_best].clone(),
            f: values[i_best],
            evals,
            converged,
        }
    }
}

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    // Endpoints are candidates too: the objective may be monotone on the interval.
    let mid = 0.5 * (a + b);
    [(lo, f(lo)), (mid, f(mid)), (hi, f(hi))]
        .into_iter()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap()
}
