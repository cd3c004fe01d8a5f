//! Special cases: the Schrödinger-Yukawa problem, the Dirac-Coulomb limit
//! `α → 0`, exact spin and pseudospin symmetry (`C = 0`), and the Yukawa
//! potential with an added `D/r²` term.

use crate::error::{require, Error, Result};
use crate::model::{Branch, EnergyPair, PhysicalParams, Root, RootClass, StateIndex};
use crate::pseudospin_spectrum::PseudoProblem;
use crate::radial::{RadialProfile, Spinor};
use crate::spin_spectrum::SpinProblem;

/// Mass `m`, coupling `A`, screening `α`, radial number `n` and orbital `l`
/// of the nonrelativistic problem (`ℏ = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonRelParams {
    mass: f64,
    coupling: f64,
    screening: f64,
    n: u32,
    l: u32,
}

impl NonRelParams {
    pub fn new(mass: f64, coupling: f64, screening: f64, n: u32, l: u32) -> Result<Self> {
        require(mass > 0.0 && mass.is_finite(), "m", mass, "must be positive")?;
        require(coupling > 0.0 && coupling.is_finite(), "A", coupling, "must be positive")?;
        require(
            screening >= 0.0 && screening.is_finite(),
            "alpha",
            screening,
            "must be non-negative",
        )?;
        Ok(Self {
            mass,
            coupling,
            screening,
            n,
            l,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn screening(&self) -> f64 {
        self.screening
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    fn shell(&self) -> f64 {
        (self.n + self.l + 1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonRelLevel {
    pub energy: f64,
    /// `mA/(n+l+1) − (n+l+1)α`, the decay rate of `u(r)`.
    pub decay: f64,
    /// The decay rate is positive; otherwise the formula is past threshold.
    pub bound: bool,
}

pub fn nonrel_energy(p: &NonRelParams) -> NonRelLevel {
    let k = p.shell();
    let decay = p.mass * p.coupling / k - k * p.screening;
    NonRelLevel {
        energy: -decay * decay / (2.0 * p.mass),
        decay,
        bound: decay > 0.0,
    }
}

/// Normalized `u(r) = r R(r)` of the Greene-Aldrich Schrödinger problem.
pub fn nonrel_wavefunction(p: &NonRelParams) -> Result<RadialProfile> {
    if p.screening == 0.0 {
        return Err(Error::UseCoulombLimit);
    }
    let level = nonrel_energy(p);
    if !level.bound {
        return Err(Error::NotBound {
            decay: level.decay,
        });
    }
    RadialProfile::new(
        p.screening,
        level.decay / (2.0 * p.screening),
        p.l as f64 + 1.0,
        p.n,
    )
}

pub fn nonrel_wavefunction_at(p: &NonRelParams, r: f64) -> Result<f64> {
    Ok(nonrel_wavefunction(p)?.value(r))
}

/// Spin branch with `α = 0`; `α` in `p` is ignored.
pub fn dirac_coulomb_spin(p: &PhysicalParams, s: StateIndex) -> EnergyPair {
    SpinProblem {
        alpha: 0.0,
        ..SpinProblem::new(p, s.spin_shell() as f64)
    }
    .pair()
}

/// Pseudospin branch with `α = 0`; `α` in `p` is ignored.
pub fn dirac_coulomb_pseudospin(p: &PhysicalParams, s: StateIndex) -> EnergyPair {
    PseudoProblem {
        alpha: 0.0,
        ..PseudoProblem::new(p, s.pseudospin_shell() as f64)
    }
    .pair()
}

/// `M(4N² − A²)/(4N² + A²)` with `N = n + κ + 1`: Dirac-Coulomb, exact spin symmetry.
pub fn coulomb_spin_closed_form(mass: f64, coupling: f64, s: StateIndex) -> Option<f64> {
    let n = s.spin_shell() as f64;
    let (n2, a2) = (4.0 * n * n, coupling * coupling);
    (n != 0.0).then(|| mass * (n2 - a2) / (n2 + a2))
}

/// `M(A² − 4N²)/(A² + 4N²)` with `N = n + κ`: Dirac-Coulomb, exact pseudospin symmetry.
pub fn coulomb_pseudospin_closed_form(mass: f64, coupling: f64, s: StateIndex) -> Option<f64> {
    let n = s.pseudospin_shell() as f64;
    let (n2, a2) = (4.0 * n * n, coupling * coupling);
    (n != 0.0).then(|| mass * (a2 - n2) / (a2 + n2))
}

/// Both roots at `C_s = 0` or `C_ps = 0`; roots with `|E| ≥ M` are scattering.
pub fn exact_symmetry_energy(
    p: &PhysicalParams,
    s: StateIndex,
    branch: Branch,
) -> Result<EnergyPair> {
    require(
        p.symmetry_constant() == 0.0,
        "C",
        p.symmetry_constant(),
        "exact symmetry needs a zero symmetry constant",
    )?;
    let k = match branch {
        Branch::Spin => s.spin_shell(),
        Branch::Pseudospin => s.pseudospin_shell(),
    } as f64;
    if k == 0.0 {
        return Ok(EnergyPair::uniform(RootClass::Undefined));
    }
    let (m, a, alpha) = (p.mass(), p.coupling(), p.screening());
    let n2 = 4.0 * k * k;
    let beta = match branch {
        Branch::Spin => alpha * n2 - 2.0 * m * a,
        Branch::Pseudospin => alpha * n2 + 2.0 * m * a,
    };
    let disc = beta * beta * a * a - (a * a + n2) * (beta * beta - 4.0 * m * m * n2);
    if disc < 0.0 {
        return Ok(EnergyPair {
            discriminant: Some(disc),
            ..EnergyPair::uniform(RootClass::Scattering)
        });
    }
    let classify = |e: f64| {
        let class = if e.abs() >= m {
            RootClass::Scattering
        } else {
            match branch {
                Branch::Spin => SpinProblem::new(p, k).test(e).classify(),
                Branch::Pseudospin => PseudoProblem::new(p, k).test(e).classify(),
            }
        };
        Root {
            energy: Some(e),
            class,
        }
    };
    let denom = 2.0 * (a * a + n2);
    Ok(EnergyPair {
        plus: classify((beta * a + disc.sqrt()) / denom),
        minus: classify((beta * a - disc.sqrt()) / denom),
        discriminant: Some(disc),
        degenerate: disc == 0.0,
    })
}

/// `γ = √(M² − E²)/(2α)`, the decay index at exact symmetry.
pub fn exact_symmetry_decay(p: &PhysicalParams, energy: f64) -> Option<f64> {
    let g2 = p.mass() * p.mass() - energy * energy;
    (g2 >= 0.0 && p.screening() > 0.0).then(|| g2.sqrt() / (2.0 * p.screening()))
}

pub const FIXED_POINT_DAMPING: f64 = 0.5;
pub const FIXED_POINT_TOL: f64 = 1e-10;
pub const FIXED_POINT_MAX_ITER: u32 = 200;

/// Base parameters plus the strength `D` of an added `D/r²` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentrifugalAugmentedParams {
    base: PhysicalParams,
    strength: f64,
    branch: Branch,
}

impl CentrifugalAugmentedParams {
    pub fn new(base: PhysicalParams, strength: f64, branch: Branch) -> Result<Self> {
        require(
            strength >= 0.0 && strength.is_finite(),
            "D",
            strength,
            "must be non-negative",
        )?;
        Ok(Self {
            base,
            strength,
            branch,
        })
    }

    pub fn base(&self) -> &PhysicalParams {
        &self.base
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// Effective `κ′` (spin) or `κ″` (pseudospin) implied by an energy.
    pub fn effective_kappa(&self, kappa: i32, energy: f64) -> Result<f64> {
        let (m, c, d) = (self.base.mass(), self.base.symmetry_constant(), self.strength);
        let k = kappa as f64;
        let (shift, lead, radicand) = match self.branch {
            Branch::Spin => (-0.5, 2.0 * k + 1.0, 4.0 * d * (m + energy - c)),
            Branch::Pseudospin => (0.5, 2.0 * k - 1.0, 4.0 * d * (energy - m - c)),
        };
        let radicand = lead * lead + radicand;
        if radicand < 0.0 {
            return Err(Error::UnphysicalCentrifugal { radicand });
        }
        Ok(shift + lead.signum() * 0.5 * radicand.sqrt())
    }

    fn shell(&self, n: u32, kappa_eff: f64) -> f64 {
        match self.branch {
            Branch::Spin => n as f64 + kappa_eff + 1.0,
            Branch::Pseudospin => n as f64 + kappa_eff,
        }
    }

    fn pair_at(&self, n: u32, kappa_eff: f64) -> EnergyPair {
        let k = self.shell(n, kappa_eff);
        match self.branch {
            Branch::Spin => SpinProblem::new(&self.base, k).pair(),
            Branch::Pseudospin => PseudoProblem::new(&self.base, k).pair(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    pub energy: f64,
    pub kappa_eff: f64,
    pub class: RootClass,
    pub iterations: u32,
    pub converged: bool,
    /// `|κ′(E) − κ′|` at the returned iterate.
    pub kappa_residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RootOutcome {
    Solved(FixedPoint),
    /// The `D = 0` seed has no real root of this sign.
    Absent(RootClass),
    Failed(Error),
}

impl RootOutcome {
    pub fn solved(&self) -> Option<&FixedPoint> {
        match self {
            RootOutcome::Solved(fp) => Some(fp),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentrifugalSolution {
    pub plus: RootOutcome,
    pub minus: RootOutcome,
}

#[derive(Debug, Clone, Copy)]
enum Sign {
    Plus,
    Minus,
}

fn pick(pair: &EnergyPair, sign: Sign) -> Root {
    match sign {
        Sign::Plus => pair.plus,
        Sign::Minus => pair.minus,
    }
}

/// Self-consistent `(E, κ′)` for both roots by damped fixed-point iteration
/// seeded from the `D = 0` solution.
pub fn centrifugal_augmented_energy(
    p: &CentrifugalAugmentedParams,
    s: StateIndex,
) -> CentrifugalSolution {
    let solve = |sign| -> RootOutcome {
        let mut kappa_eff = s.kappa() as f64;
        let seed = pick(&p.pair_at(s.n(), kappa_eff), sign);
        let Some(mut energy) = seed.energy else {
            return RootOutcome::Absent(seed.class);
        };
        let mut converged = false;
        let mut iterations = 0;
        while iterations < FIXED_POINT_MAX_ITER {
            iterations += 1;
            let target = match p.effective_kappa(s.kappa(), energy) {
                Ok(t) => t,
                Err(e) => return RootOutcome::Failed(e),
            };
            let step = target - kappa_eff;
            kappa_eff += FIXED_POINT_DAMPING * step;
            let root = pick(&p.pair_at(s.n(), kappa_eff), sign);
            let Some(next) = root.energy else {
                return RootOutcome::Absent(root.class);
            };
            let de = next - energy;
            energy = next;
            if step.abs() <= FIXED_POINT_TOL && de.abs() <= FIXED_POINT_TOL {
                converged = true;
                break;
            }
        }
        let kappa_residual = match p.effective_kappa(s.kappa(), energy) {
            Ok(t) => (t - kappa_eff).abs(),
            Err(e) => return RootOutcome::Failed(e),
        };
        let k = p.shell(s.n(), kappa_eff);
        let class = match p.branch {
            Branch::Spin => SpinProblem::new(&p.base, k).test(energy).classify(),
            Branch::Pseudospin => PseudoProblem::new(&p.base, k).test(energy).classify(),
        };
        RootOutcome::Solved(FixedPoint {
            energy,
            kappa_eff,
            class,
            iterations,
            converged,
            kappa_residual,
        })
    };
    CentrifugalSolution {
        plus: solve(Sign::Plus),
        minus: solve(Sign::Minus),
    }
}

/// Back-substitution residual of a fixed point with `κ′` in place of `κ`.
pub fn centrifugal_residual(p: &CentrifugalAugmentedParams, n: u32, fp: &FixedPoint) -> Option<f64> {
    let k = p.shell(n, fp.kappa_eff);
    match p.branch {
        Branch::Spin => SpinProblem::new(&p.base, k).test(fp.energy).residual(),
        Branch::Pseudospin => PseudoProblem::new(&p.base, k).test(fp.energy).residual(),
    }
}

/// Spinor of a fixed point, with `κ′` replacing `κ` in the closed form.
pub fn centrifugal_wavefunction(
    p: &CentrifugalAugmentedParams,
    n: u32,
    fp: &FixedPoint,
) -> Result<Spinor> {
    if !fp.class.admits_wavefunction() {
        return Err(Error::InadmissibleEnergy {
            energy: fp.energy,
            class: fp.class.token(),
        });
    }
    let b = &p.base;
    let alpha = b.require_screening()?;
    let (m, c, e) = (b.mass(), b.symmetry_constant(), fp.energy);
    let (nu_sq, lambda, denom) = match p.branch {
        Branch::Spin => ((m - e) * (m + e - c), fp.kappa_eff + 1.0, m + e - c),
        Branch::Pseudospin => ((m + e) * (m - e + c), fp.kappa_eff, m - e + c),
    };
    let profile = RadialProfile::new(alpha, nu_sq.sqrt() / (2.0 * alpha), lambda, n)?;
    Spinor::new(p.branch, fp.kappa_eff, profile, denom)
}
