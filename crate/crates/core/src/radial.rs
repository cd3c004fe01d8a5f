//! Closed-form radial profiles `N s^ν (1−s)^λ ₂F₁(−n, n+2(ν+λ); 1+2ν; s)`,
//! `s = e^{−2αr}`, and the two-component spinors built from them.

use crate::error::{Error, Result};
use crate::model::Branch;
use crate::specfun::{hyp2f1_terminating, jacobi_prefactor, ln_gamma_pos};

/// A normalized solution of the Greene-Aldrich radial equation.
///
/// `ν` is the decay index and `λ` the edge exponent (`κ+1` for the spin
/// upper component, `κ` for the pseudospin lower one, `l+1` without spin).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProfile {
    alpha: f64,
    nu: f64,
    lambda: f64,
    n: u32,
    norm: f64,
}

impl RadialProfile {
    pub fn new(alpha: f64, nu: f64, lambda: f64, n: u32) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::UseCoulombLimit);
        }
        let nf = n as f64;
        if !(nu > 0.0) || lambda < 0.0 || !(nf + 2.0 * lambda > 0.0) {
            return Err(Error::NotNormalizable {
                n,
                exponent: lambda,
            });
        }
        let ln_norm_sq = (4.0 * alpha * nu).ln() + (nf + nu + lambda).ln() - (nf + lambda).ln()
            + ln_gamma_pos(nf + 2.0 * nu + 1.0)
            + ln_gamma_pos(nf + 2.0 * nu + 2.0 * lambda)
            - ln_gamma_pos(nf + 1.0)
            - ln_gamma_pos(nf + 2.0 * lambda)
            - 2.0 * ln_gamma_pos(2.0 * nu + 1.0);
        Ok(Self {
            alpha,
            nu,
            lambda,
            n,
            norm: (0.5 * ln_norm_sq).exp(),
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Constant multiplying the `₂F₁` form.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Constant multiplying `e^{−2ναr}(1−s)^λ P_n^(2ν, 2λ−1)(1−2s)`.
    pub fn jacobi_norm(&self) -> f64 {
        self.norm / jacobi_prefactor(self.n, 2.0 * self.nu)
    }

    fn series(&self, shift: u32, s: f64) -> f64 {
        let (n, nu, lambda) = (self.n - shift, self.nu, self.lambda);
        let shift = shift as f64;
        hyp2f1_terminating(
            n,
            self.n as f64 + 2.0 * (nu + lambda) + shift,
            1.0 + 2.0 * nu + shift,
            s,
        )
        .expect("c = 1 + 2ν > 0 has no poles")
    }

    pub fn value(&self, r: f64) -> f64 {
        let x = -2.0 * self.alpha * r;
        let (s, one_minus_s) = (x.exp(), -x.exp_m1());
        self.norm * (x * self.nu).exp() * one_minus_s.powf(self.lambda) * self.series(0, s)
    }

    /// `d/dr` of [`value`](Self::value).
    pub fn derivative(&self, r: f64) -> f64 {
        let a = self.alpha;
        let x = -2.0 * a * r;
        let (s, one_minus_s) = (x.exp(), -x.exp_m1());
        let envelope = self.norm * (x * self.nu).exp() * one_minus_s.powf(self.lambda);
        let local = 2.0 * a * (self.lambda * s / one_minus_s - self.nu);
        let mut d = envelope * local * self.series(0, s);
        if self.n > 0 {
            let n = self.n as f64;
            let b = n + 2.0 * (self.nu + self.lambda);
            d += envelope * 2.0 * a * n * b / (1.0 + 2.0 * self.nu) * s * self.series(1, s);
        }
        d
    }

    /// Radius beyond which `value²` has dropped by about `e^{−50}`.
    pub fn extent(&self) -> f64 {
        25.0 / (2.0 * self.alpha * self.nu)
    }
}

/// Two-component radial spinor. The profile carries the large component of
/// its branch; the other one follows from the first-order coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    branch: Branch,
    kappa: f64,
    profile: RadialProfile,
    denominator: f64,
}

impl Spinor {
    /// `denominator` is `M + E − C_s` (spin) or `M − E + C_ps` (pseudospin).
    pub(crate) fn new(
        branch: Branch,
        kappa: f64,
        profile: RadialProfile,
        denominator: f64,
    ) -> Result<Self> {
        if denominator == 0.0 {
            return Err(Error::SingularDenominator {
                what: match branch {
                    Branch::Spin => "M + E - C_s",
                    Branch::Pseudospin => "M - E + C_ps",
                },
                value: denominator,
            });
        }
        Ok(Self {
            branch,
            kappa,
            profile,
            denominator,
        })
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn profile(&self) -> &RadialProfile {
        &self.profile
    }

    /// Upper component `F(r)`.
    pub fn upper(&self, r: f64) -> f64 {
        match self.branch {
            Branch::Spin => self.profile.value(r),
            Branch::Pseudospin => self.coupled(r, -1.0),
        }
    }

    /// Lower component `G(r)`.
    pub fn lower(&self, r: f64) -> f64 {
        match self.branch {
            Branch::Spin => self.coupled(r, 1.0),
            Branch::Pseudospin => self.profile.value(r),
        }
    }

    fn coupled(&self, r: f64, sign: f64) -> f64 {
        (self.profile.derivative(r) + sign * self.kappa / r * self.profile.value(r))
            / self.denominator
    }

    pub fn extent(&self) -> f64 {
        self.profile.extent()
    }
}

/// Log-spaced radii from `r_min` to `r_max`, both included.
pub fn log_grid(r_min: f64, r_max: f64, points: usize) -> Vec<f64> {
    let (lo, hi) = (r_min.ln(), r_max.ln());
    let last = points.saturating_sub(1).max(1) as f64;
    (0..points)
        .map(|i| (lo + (hi - lo) * i as f64 / last).exp())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::square_norm;
    use crate::specfun::{jacobi_p, JacobiIndex};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn normalized() {
        for &(nu, lambda, n) in &[(0.7, 2.0, 0u32), (1.3, 0.0, 1), (2.2, 3.0, 3), (0.4, 1.0, 2)] {
            let p = RadialProfile::new(0.1, nu, lambda, n).unwrap();
            let norm = square_norm(|r| p.value(r), p.extent()).unwrap();
            assert_relative_eq!(norm, 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn jacobi_form_agrees() {
        let p = RadialProfile::new(0.1, 1.7, 2.0, 3).unwrap();
        let idx = JacobiIndex::new(3, 3.4, 3.0).unwrap();
        for r in [0.3, 2.0, 11.0] {
            let s = (-0.2f64 * r).exp();
            let want = p.jacobi_norm() * s.powf(1.7) * (1.0 - s).powi(2) * jacobi_p(idx, 1.0 - 2.0 * s);
            assert_relative_eq!(p.value(r), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let p = RadialProfile::new(0.1, 1.1, 1.0, 2).unwrap();
        let h = 1e-5;
        for i in 1..50 {
            let r = 0.4 * i as f64;
            let fd = (p.value(r + h) - p.value(r - h)) / (2.0 * h);
            assert!((fd - p.derivative(r)).abs() < 1e-8, "r = {r}");
        }
    }

    #[test]
    fn edge_exponent_zero_vanishes_at_origin() {
        for n in 1..5 {
            let p = RadialProfile::new(0.1, 0.9, 0.0, n).unwrap();
            assert!(p.value(1e-12).abs() < 1e-9);
        }
        assert!(RadialProfile::new(0.1, 0.9, 0.0, 0).is_err());
        assert!(RadialProfile::new(0.1, 0.9, -1.0, 3).is_err());
        assert!(RadialProfile::new(0.1, -0.2, 1.0, 0).is_err());
    }

    #[test]
    fn grid_endpoints() {
        let g = log_grid(1e-4, 25.0, 512);
        assert_eq!(g.len(), 512);
        assert_relative_eq!(g[0], 1e-4, max_relative = 1e-14);
        assert_relative_eq!(g[511], 25.0, max_relative = 1e-14);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #[test]
        fn always_normalized(nu in 0.2f64..3.0, lambda in 0.0f64..4.0, n in 1u32..4, alpha in 0.05f64..0.5) {
            let p = RadialProfile::new(alpha, nu, lambda, n).unwrap();
            let norm = square_norm(|r| p.value(r), p.extent()).unwrap();
            prop_assert!((norm - 1.0).abs() < 1e-8);
        }
    }
}
