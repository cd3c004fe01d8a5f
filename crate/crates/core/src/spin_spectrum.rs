//! Spin-symmetric Dirac-Yukawa states (`V − S = C_s`).

use crate::error::{Error, Result};
use crate::model::{
    classify_pair, BackSubstitution, Branch, EnergyPair, PhysicalParams, Quadratic, RootClass,
    StateIndex,
};
use crate::radial::{RadialProfile, Spinor};

/// Energy-dependent coefficients of the spin radial equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxCoefficients {
    pub nu_squared: f64,
    pub omega: f64,
    /// `N₁ = 2(n + κ + 1)`.
    pub shell: i64,
    /// `C_s − M`
    pub w: f64,
    /// `(C_s + α A) / 2`
    pub s: f64,
}

impl AuxCoefficients {
    /// `+√ν²`, or `None` when `ν²` is negative.
    pub fn nu(&self) -> Option<f64> {
        (self.nu_squared >= 0.0).then(|| self.nu_squared.sqrt())
    }
}

pub fn aux_coefficients(p: &PhysicalParams, s: StateIndex, energy: f64) -> Result<AuxCoefficients> {
    let alpha = p.require_screening()?;
    let (m, c) = (p.mass(), p.symmetry_constant());
    Ok(AuxCoefficients {
        nu_squared: (m - energy) * (m + energy - c) / (4.0 * alpha * alpha),
        omega: (energy + m - c) * p.coupling() / (2.0 * alpha),
        shell: 2 * s.spin_shell(),
        w: c - m,
        s: 0.5 * (c + alpha * p.coupling()),
    })
}

/// Raw spin quadratic for shell half-index `k`; the coupling may have either
/// sign so the pseudospin mapping can reuse it.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SpinProblem {
    pub mass: f64,
    pub coupling: f64,
    pub alpha: f64,
    pub c: f64,
    pub k: f64,
}

impl SpinProblem {
    pub fn new(p: &PhysicalParams, k: f64) -> Self {
        Self {
            mass: p.mass(),
            coupling: p.coupling(),
            alpha: p.screening(),
            c: p.symmetry_constant(),
            k,
        }
    }

    pub fn quadratic(&self) -> Quadratic {
        let Self {
            mass: m,
            coupling: a,
            alpha,
            c,
            k,
        } = *self;
        let n2 = 4.0 * k * k;
        let w = c - m;
        let s = 0.5 * (c + alpha * a);
        Quadratic {
            a: a * a + n2,
            b: a * a * w + s * n2,
            c: (a * w + 0.5 * alpha * n2).powi(2) + m * w * n2,
        }
    }

    pub fn test(&self, energy: f64) -> BackSubstitution {
        let f2 = self.mass + energy - self.c;
        BackSubstitution {
            f1: self.mass - energy,
            f2,
            alpha_k: self.alpha * self.k,
            rhs: f2 * self.coupling / (2.0 * self.k),
        }
    }

    pub fn pair(&self) -> EnergyPair {
        if self.k == 0.0 {
            return EnergyPair::uniform(RootClass::Undefined);
        }
        classify_pair(self.quadratic(), |e| self.test(e))
    }
}

/// Both roots of the spin energy quadratic, each classified.
pub fn spin_energy_pair(p: &PhysicalParams, s: StateIndex) -> Result<EnergyPair> {
    p.require_screening()?;
    Ok(SpinProblem::new(p, s.spin_shell() as f64).pair())
}

pub fn validate_energy(p: &PhysicalParams, s: StateIndex, energy: f64) -> RootClass {
    match s.spin_shell() {
        0 => RootClass::Undefined,
        k => SpinProblem::new(p, k as f64).test(energy).classify(),
    }
}

/// `√((M−E)(M+E−C_s)) + α(n+κ+1) − (M+E−C_s) A / (2(n+κ+1))`.
pub fn back_substitution_residual(p: &PhysicalParams, s: StateIndex, energy: f64) -> Option<f64> {
    match s.spin_shell() {
        0 => None,
        k => SpinProblem::new(p, k as f64).test(energy).residual(),
    }
}

/// `(n+κ+1)² + 2(n+κ+1)ν₁ − ω₁` with `ν₁ = +√ν₁²`.
pub fn eigenvalue_condition_residual(
    p: &PhysicalParams,
    s: StateIndex,
    energy: f64,
) -> Result<Option<f64>> {
    let aux = aux_coefficients(p, s, energy)?;
    let k = s.spin_shell() as f64;
    Ok(aux.nu().map(|nu| k * k + 2.0 * k * nu - aux.omega))
}

/// Normalized spinor for an admissible energy.
pub fn spin_wavefunction(p: &PhysicalParams, s: StateIndex, energy: f64) -> Result<Spinor> {
    let alpha = p.require_screening()?;
    let class = validate_energy(p, s, energy);
    if !class.admits_wavefunction() {
        return Err(Error::InadmissibleEnergy {
            energy,
            class: class.token(),
        });
    }
    let nu = aux_coefficients(p, s, energy)?
        .nu()
        .expect("admissible energies have real ν");
    let profile = RadialProfile::new(alpha, nu, s.kappa() as f64 + 1.0, s.n())?;
    Spinor::new(
        Branch::Spin,
        s.kappa() as f64,
        profile,
        p.mass() + energy - p.symmetry_constant(),
    )
}

pub fn upper_component(p: &PhysicalParams, s: StateIndex, energy: f64, r: f64) -> Result<f64> {
    Ok(spin_wavefunction(p, s, energy)?.upper(r))
}

pub fn lower_component(p: &PhysicalParams, s: StateIndex, energy: f64, r: f64) -> Result<f64> {
    Ok(spin_wavefunction(p, s, energy)?.lower(r))
}

/// Constant in front of the `₂F₁` form of the upper component.
pub fn normalization_constant(p: &PhysicalParams, s: StateIndex, energy: f64) -> Result<f64> {
    Ok(spin_wavefunction(p, s, energy)?.profile().norm())
}
