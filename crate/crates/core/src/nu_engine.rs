//! Parametric Nikiforov-Uvarov method.
//!
//! An equation of the form
//!
//! ```text
//! ψ'' + (c1 − c2 x)/(x(1 − c3 x)) ψ' + (−ξ0 x² + ξ1 x − ξ2)/(x(1 − c3 x))² ψ = 0
//! ```
//!
//! is reduced to thirteen constants that fix its energy condition and its
//! polynomial solutions. Nothing here chooses energies.

use crate::error::{Error, Result};
use crate::specfun::{jacobi_p, JacobiIndex};

/// Coefficients `c1..c3` of `τ̃` and `σ`, and `ξ0..ξ2` of `σ̃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuSignature {
    pub c1: f64,
    pub c2: f64,
    c3: f64,
    pub xi0: f64,
    pub xi1: f64,
    pub xi2: f64,
}

impl NuSignature {
    pub fn new(c1: f64, c2: f64, c3: f64, xi0: f64, xi1: f64, xi2: f64) -> Result<Self> {
        crate::error::require(c3 != 0.0, "c3", c3, "must be nonzero")?;
        Ok(Self {
            c1,
            c2,
            c3,
            xi0,
            xi1,
            xi2,
        })
    }

    /// `c1 = c2 = c3 = 1` with the given `ξ` values.
    pub fn unit(xi0: f64, xi1: f64, xi2: f64) -> Self {
        Self {
            c1: 1.0,
            c2: 1.0,
            c3: 1.0,
            xi0,
            xi1,
            xi2,
        }
    }

    /// Signature of the upper-component equation at exact spin symmetry.
    pub fn spin(nu: f64, omega: f64, kappa: f64) -> Self {
        Self::unit(
            nu * nu,
            2.0 * nu * nu + omega - kappa * (kappa + 1.0),
            nu * nu + omega,
        )
    }

    /// Signature of the lower-component equation at exact pseudospin symmetry.
    pub fn pseudospin(nu: f64, omega: f64, kappa: f64) -> Self {
        Self::unit(
            nu * nu,
            2.0 * nu * nu + omega - kappa * (kappa - 1.0),
            nu * nu + omega,
        )
    }

    pub fn c3(&self) -> f64 {
        self.c3
    }
}

/// The derived constants `c4..c13`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuConstants {
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    pub c10: f64,
    pub c11: f64,
    pub c12: f64,
    pub c13: f64,
    signature: NuSignature,
}

impl NuConstants {
    pub fn signature(&self) -> NuSignature {
        self.signature
    }

    /// True when `c10, c11 > −1` and `c12, c13 > 0`.
    pub fn is_physical(&self) -> bool {
        self.violation().is_none()
    }

    fn violation(&self) -> Option<(&'static str, f64)> {
        if !(self.c10 > -1.0) {
            Some(("c10", self.c10))
        } else if !(self.c11 > -1.0) {
            Some(("c11", self.c11))
        } else if !(self.c12 > 0.0) {
            Some(("c12", self.c12))
        } else if !(self.c13 > 0.0) {
            Some(("c13", self.c13))
        } else {
            None
        }
    }

    /// `π(x) = c4 + c5 x − [(√c9 + c3√c8) x − √c8]`
    pub fn pi(&self, x: f64) -> f64 {
        let c3 = self.signature.c3;
        self.c4 + self.c5 * x - ((self.c9.sqrt() + c3 * self.c8.sqrt()) * x - self.c8.sqrt())
    }

    /// `k = −(c7 + 2 c3 c8) − 2√(c8 c9)`
    pub fn k(&self) -> f64 {
        -(self.c7 + 2.0 * self.signature.c3 * self.c8) - 2.0 * (self.c8 * self.c9).sqrt()
    }

    /// `τ(x) = c1 + 2c4 − (c2 − 2c5) x − 2[(√c9 + c3√c8) x − √c8]`
    pub fn tau(&self, x: f64) -> f64 {
        let s = &self.signature;
        s.c1 + 2.0 * self.c4 - (s.c2 - 2.0 * self.c5) * x
            - 2.0 * ((self.c9.sqrt() + s.c3 * self.c8.sqrt()) * x - self.c8.sqrt())
    }

    pub fn tau_prime(&self) -> f64 {
        let s = &self.signature;
        -s.c2 + 2.0 * self.c5 - 2.0 * (self.c9.sqrt() + s.c3 * self.c8.sqrt())
    }
}

pub fn derive_constants(sig: NuSignature) -> Result<NuConstants> {
    let NuSignature {
        c1,
        c2,
        c3,
        xi0,
        xi1,
        xi2,
    } = sig;
    let c4 = 0.5 * (1.0 - c1);
    let c5 = 0.5 * (c2 - 2.0 * c3);
    let c6 = c5 * c5 + xi2;
    let c7 = 2.0 * c4 * c5 - xi1;
    let c8 = c4 * c4 + xi0;
    let c9 = c3 * c7 + c3 * c3 * c8 + c6;
    if c8 < 0.0 {
        return Err(Error::NoRealSolution {
            constant: "c8",
            value: c8,
        });
    }
    if c9 < 0.0 {
        return Err(Error::NoRealSolution {
            constant: "c9",
            value: c9,
        });
    }
    let (r8, r9) = (c8.sqrt(), c9.sqrt());
    let consts = NuConstants {
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
        c10: c1 + 2.0 * c4 + 2.0 * r8 - 1.0,
        c11: 1.0 - c1 - 2.0 * c4 + 2.0 / c3 * r9,
        c12: c4 + r8,
        c13: -c4 + (r9 - c5) / c3,
        signature: sig,
    };
    if c3 == 1.0 && c2 == 1.0 {
        assert!(consts.tau_prime() < 0.0, "τ' must be negative");
    }
    Ok(consts)
}

/// Left side of the energy condition; zero on an eigen-solution of degree `n`.
pub fn energy_condition_residual(consts: &NuConstants, n: u32) -> f64 {
    let NuSignature { c2, c3, .. } = consts.signature;
    let n = n as f64;
    let (r8, r9) = (consts.c8.sqrt(), consts.c9.sqrt());
    c2 * n - (2.0 * n + 1.0) * consts.c5
        + (2.0 * n + 1.0) * (r9 + c3 * r8)
        + n * (n - 1.0) * c3
        + consts.c7
        + 2.0 * c3 * consts.c8
        + 2.0 * r8 * r9
}

/// Unnormalized `x^c12 (1 − c3 x)^c13 P_n^(c10,c11)(1 − 2 c3 x)`.
pub fn assemble_eigenfunction(consts: &NuConstants, n: u32, x: f64) -> Result<f64> {
    if let Some((constant, value)) = consts.violation() {
        return Err(Error::UnphysicalEigenfunction { constant, value });
    }
    let c3 = consts.signature.c3;
    let idx = JacobiIndex::new(n, consts.c10, consts.c11)?;
    Ok(x.powf(consts.c12) * (1.0 - c3 * x).powf(consts.c13) * jacobi_p(idx, 1.0 - 2.0 * c3 * x))
}
