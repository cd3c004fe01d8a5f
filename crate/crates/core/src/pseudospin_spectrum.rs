//! Pseudospin-symmetric Dirac-Yukawa states (`V + S = C_ps`).
//!
//! The branch mirrors the spin one under `κ → κ−1`, `A → −A`, `E → −E`,
//! `C_s → −C_ps`; [`map_from_spin`] evaluates it that way as a cross-check.

use crate::error::{Error, Result};
use crate::model::{
    classify_pair, BackSubstitution, Branch, EnergyPair, PhysicalParams, Quadratic, Root,
    RootClass, StateIndex,
};
use crate::radial::{RadialProfile, Spinor};
use crate::spin_spectrum::SpinProblem;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoAuxCoefficients {
    pub nu_squared: f64,
    pub omega: f64,
    /// `N₂ = 2(n + κ)`.
    pub shell: i64,
    /// `C_ps + M`
    pub u: f64,
    /// `(C_ps + α A) / 2`
    pub t: f64,
}

impl PseudoAuxCoefficients {
    pub fn nu(&self) -> Option<f64> {
        (self.nu_squared >= 0.0).then(|| self.nu_squared.sqrt())
    }
}

pub fn pseudo_aux_coefficients(
    p: &PhysicalParams,
    s: StateIndex,
    energy: f64,
) -> Result<PseudoAuxCoefficients> {
    let alpha = p.require_screening()?;
    let (m, c) = (p.mass(), p.symmetry_constant());
    Ok(PseudoAuxCoefficients {
        nu_squared: (m + energy) * (m - energy + c) / (4.0 * alpha * alpha),
        omega: (energy - m - c) * p.coupling() / (2.0 * alpha),
        shell: 2 * s.pseudospin_shell(),
        u: c + m,
        t: 0.5 * (c + alpha * p.coupling()),
    })
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct PseudoProblem {
    pub mass: f64,
    pub coupling: f64,
    pub alpha: f64,
    pub c: f64,
    pub k: f64,
}

impl PseudoProblem {
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
        let u = c + m;
        let t = 0.5 * (c + alpha * a);
        Quadratic {
            a: a * a + n2,
            b: a * a * u + t * n2,
            c: (a * u + 0.5 * alpha * n2).powi(2) - m * u * n2,
        }
    }

    pub fn test(&self, energy: f64) -> BackSubstitution {
        let f2 = self.mass - energy + self.c;
        BackSubstitution {
            f1: self.mass + energy,
            f2,
            alpha_k: self.alpha * self.k,
            rhs: -f2 * self.coupling / (2.0 * self.k),
        }
    }

    pub fn pair(&self) -> EnergyPair {
        if self.k == 0.0 {
            return EnergyPair::uniform(RootClass::Undefined);
        }
        classify_pair(self.quadratic(), |e| self.test(e))
    }
}

pub fn pseudospin_energy_pair(p: &PhysicalParams, s: StateIndex) -> Result<EnergyPair> {
    p.require_screening()?;
    Ok(PseudoProblem::new(p, s.pseudospin_shell() as f64).pair())
}

pub fn validate_pseudo_energy(p: &PhysicalParams, s: StateIndex, energy: f64) -> RootClass {
    match s.pseudospin_shell() {
        0 => RootClass::Undefined,
        k => PseudoProblem::new(p, k as f64).test(energy).classify(),
    }
}

/// `√((M+E)(M−E+C_ps)) + α(n+κ) − (E−M−C_ps) A / (2(n+κ))`.
pub fn pseudo_back_substitution_residual(
    p: &PhysicalParams,
    s: StateIndex,
    energy: f64,
) -> Option<f64> {
    match s.pseudospin_shell() {
        0 => None,
        k => PseudoProblem::new(p, k as f64).test(energy).residual(),
    }
}

/// `(n+κ)² + 2(n+κ)ν₂ − ω₂` with `ν₂ = +√ν₂²`.
pub fn pseudo_eigenvalue_condition_residual(
    p: &PhysicalParams,
    s: StateIndex,
    energy: f64,
) -> Result<Option<f64>> {
    let aux = pseudo_aux_coefficients(p, s, energy)?;
    let k = s.pseudospin_shell() as f64;
    Ok(aux.nu().map(|nu| k * k + 2.0 * k * nu - aux.omega))
}

/// The pseudospin pair computed by the spin solver under the branch mapping.
pub fn map_from_spin(p: &PhysicalParams, s: StateIndex) -> EnergyPair {
    let spin = SpinProblem {
        mass: p.mass(),
        coupling: -p.coupling(),
        alpha: p.screening(),
        c: -p.symmetry_constant(),
        k: s.pseudospin_shell() as f64,
    }
    .pair();
    let flip = |r: Root| Root {
        energy: r.energy.map(|e| -e),
        class: r.class,
    };
    EnergyPair {
        plus: flip(spin.minus),
        minus: flip(spin.plus),
        ..spin
    }
}

/// Normalized spinor for an admissible energy; needs `κ ≥ 1`.
pub fn pseudospin_wavefunction(p: &PhysicalParams, s: StateIndex, energy: f64) -> Result<Spinor> {
    let alpha = p.require_screening()?;
    let class = validate_pseudo_energy(p, s, energy);
    if !class.admits_wavefunction() {
        return Err(Error::InadmissibleEnergy {
            energy,
            class: class.token(),
        });
    }
    let nu = pseudo_aux_coefficients(p, s, energy)?
        .nu()
        .expect("admissible energies have real ν");
    let profile = RadialProfile::new(alpha, nu, s.kappa() as f64, s.n())?;
    Spinor::new(
        Branch::Pseudospin,
        s.kappa() as f64,
        profile,
        p.mass() - energy + p.symmetry_constant(),
    )
}

pub fn lower_component_ps(p: &PhysicalParams, s: StateIndex, energy: f64, r: f64) -> Result<f64> {
    Ok(pseudospin_wavefunction(p, s, energy)?.lower(r))
}

pub fn upper_component_ps(p: &PhysicalParams, s: StateIndex, energy: f64, r: f64) -> Result<f64> {
    Ok(pseudospin_wavefunction(p, s, energy)?.upper(r))
}

pub fn normalization_constant_ps(p: &PhysicalParams, s: StateIndex, energy: f64) -> Result<f64> {
    Ok(pseudospin_wavefunction(p, s, energy)?.profile().norm())
}
