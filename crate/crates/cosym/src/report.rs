//! Residual bookkeeping for identity checks.

use serde::Serialize;

/// Default tolerance for pointwise identity residuals.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Default tolerance for derivative-vs-finite-difference comparisons.
pub const DERIVATIVE_TOL: f64 = 1e-6;

/// Outcome of one identity checked over a seeded point sample.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub points: usize,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub pass: bool,
}

/// Accumulates one residual per sample point (the max over the identity
/// family at that point) and closes into a [`VerificationReport`].
pub struct Residuals {
    identity: String,
    tolerance: f64,
    seed: u64,
    per_point: Vec<f64>,
    current: Option<f64>,
}

impl Residuals {
    pub fn new(identity: impl Into<String>, tolerance: f64, seed: u64) -> Residuals {
        Residuals {
            identity: identity.into(),
            tolerance,
            seed,
            per_point: Vec::new(),
            current: None,
        }
    }

    /// Open a new point; the previous point's running max is committed.
    pub fn next_point(&mut self) {
        if let Some(c) = self.current.take() {
            self.per_point.push(c);
        }
        self.current = Some(0.0);
    }

    /// Record one residual for the current point.
    pub fn record(&mut self, residual: f64) {
        let c = self.current.get_or_insert(0.0);
        if residual > *c {
            *c = residual;
        }
    }

    pub fn finish(mut self) -> VerificationReport {
        if let Some(c) = self.current.take() {
            self.per_point.push(c);
        }
        let points = self.per_point.len();
        let max_residual = self.per_point.iter().copied().fold(0.0, f64::max);
        let mean_residual = if points == 0 {
            0.0
        } else {
            self.per_point.iter().sum::<f64>() / points as f64
        };
        VerificationReport {
            identity: self.identity,
            points,
            max_residual,
            mean_residual,
            tolerance: self.tolerance,
            seed: self.seed,
            pass: max_residual <= self.tolerance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_max_below_tolerance() {
        let mut r = Residuals::new("demo", 1e-8, 42);
        r.next_point();
        r.record(1e-10);
        r.record(5e-9);
        r.next_point();
        r.record(2e-9);
        let rep = r.finish();
        assert_eq!(rep.points, 2);
        assert!(rep.pass);
        assert_eq!(rep.max_residual, 5e-9);

        let mut r = Residuals::new("demo", 1e-8, 42);
        r.next_point();
        r.record(1e-3);
        assert!(!r.finish().pass);
    }
}
