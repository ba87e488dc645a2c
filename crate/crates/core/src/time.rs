//! Mapping from generation counter to problem time.

use crate::error::{Error, Result};

/// `t = floor(tau / tau_t) / n_t`: `tau_t` generations per environment,
/// `n_t` environments per unit of time.
pub fn time_of(tau: u64, tau_t: u64, n_t: u64) -> Result<f64> {
    if tau_t == 0 || n_t == 0 {
        return Err(Error::Parameter(format!(
            "change frequency and severity must be positive (tau_T={tau_t}, n_T={n_t})"
        )));
    }
    Ok((tau / tau_t) as f64 / n_t as f64)
}

/// Generation counter together with the change parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeContext {
    pub tau: u64,
    pub tau_t: u64,
    pub n_t: u64,
}

impl TimeContext {
    pub fn new(tau_t: u64, n_t: u64) -> Result<Self> {
        time_of(0, tau_t, n_t)?;
        Ok(Self { tau: 0, tau_t, n_t })
    }

    pub fn t(&self) -> f64 {
        (self.tau / self.tau_t) as f64 / self.n_t as f64
    }

    /// Index of the current environment, `floor(tau / tau_t)`.
    pub fn environment(&self) -> u64 {
        self.tau / self.tau_t
    }

    /// True on the last generation of an environment.
    pub fn is_last_of_environment(&self) -> bool {
        (self.tau + 1).is_multiple_of(self.tau_t)
    }

    pub fn advance(&mut self) {
        self.tau += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_values() {
        assert_eq!(time_of(0, 25, 10).unwrap(), 0.0);
        assert_eq!(time_of(49, 25, 10).unwrap(), 0.1);
        assert_eq!(time_of(250, 25, 10).unwrap(), 1.0);
    }

    #[test]
    fn rejects_zero_parameters() {
        assert!(time_of(3, 0, 10).is_err());
        assert!(time_of(3, 25, 0).is_err());
    }

    #[test]
    fn context_matches_free_function() {
        let mut ctx = TimeContext::new(10, 5).unwrap();
        for _ in 0..137 {
            assert_eq!(ctx.t(), time_of(ctx.tau, 10, 5).unwrap());
            ctx.advance();
        }
    }

    proptest! {
        #[test]
        fn nondecreasing_and_piecewise_constant(tau in 0u64..100_000, tau_t in 1u64..60, n_t in 1u64..20) {
            let a = time_of(tau, tau_t, n_t).unwrap();
            let b = time_of(tau + 1, tau_t, n_t).unwrap();
            prop_assert!(b >= a);
            let start = (tau / tau_t) * tau_t;
            prop_assert_eq!(time_of(start, tau_t, n_t).unwrap(), a);
            prop_assert_eq!(time_of(start + tau_t - 1, tau_t, n_t).unwrap(), a);
        }
    }
}
