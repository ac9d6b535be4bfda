/// Runtime constants for the constructive finders.
///
/// The structural results only assert the existence of suitable constants,
/// so every one of them is an explicit parameter here, with defaults chosen
/// to keep the size guards satisfiable at desk scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    /// Junk-part slope: the unstructured part of a decomposition has size
    /// at most `alpha * n - beta`.
    pub alpha: f64,
    /// Junk-part offset, see `alpha`.
    pub beta: f64,
    /// Required partner count per side of a pair-like component. The
    /// decomposition's pairs branch prunes to minimum degree `t + 1`.
    pub t: usize,
    /// Guard multiplier for the four-of-six-middle-regions finder: a
    /// witness is guaranteed once `|F| >= gupta_mult * n`.
    pub gupta_mult: usize,
    /// Multiplier applied per boosting step: each step raises the guard
    /// from `C * n^k` to `boost_mult * C * n^(k+1)`.
    pub boost_mult: usize,
    /// Guard coefficient for the six-inner-regions finder: `main_mult * n^2`.
    pub main_mult: usize,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            alpha: 40.0,
            beta: 400.0,
            t: 10,
            gupta_mult: 8,
            boost_mult: 1,
            main_mult: 2,
        }
    }
}

impl Thresholds {
    /// Junk-size budget at ground size `n`, clamped at zero.
    pub fn junk_budget(&self, n: usize) -> f64 {
        self.alpha * n as f64 - self.beta
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.t < 1 {
            return Err("partner count t must be at least 1".into());
        }
        if self.gupta_mult < 1 || self.boost_mult < 1 || self.main_mult < 1 {
            return Err("all multipliers must be at least 1".into());
        }
        if self.alpha < 0.0 || self.beta < 0.0 {
            return Err("alpha and beta must be non-negative".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        Thresholds::default().validate().unwrap();
    }

    #[test]
    fn zero_t_rejected() {
        let th = Thresholds {
            t: 0,
            ..Thresholds::default()
        };
        assert!(th.validate().is_err());
    }
}
