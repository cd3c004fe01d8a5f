//! Numerov shooting solver for the radial Schrödinger equation
//! `u″ = [2m(V − E) + L(r)] u`, independent of the closed forms.

use crate::error::{require, Error, Result};
use crate::quadrature::square_norm;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential {
    /// `−A e^{−αr}/r`.
    Yukawa { coupling: f64, screening: f64 },
    /// `−2αA e^{−2αr}/(1 − e^{−2αr})`, the Greene-Aldrich form of the Yukawa term.
    ApproxYukawa { coupling: f64, screening: f64 },
    /// `−A/r`.
    Coulomb { coupling: f64 },
}

impl Potential {
    fn coupling(&self) -> f64 {
        match *self {
            Potential::Yukawa { coupling, .. }
            | Potential::ApproxYukawa { coupling, .. }
            | Potential::Coulomb { coupling } => coupling,
        }
    }

    fn screening(&self) -> Option<f64> {
        match *self {
            Potential::Yukawa { screening, .. } | Potential::ApproxYukawa { screening, .. } => {
                Some(screening)
            }
            Potential::Coulomb { .. } => None,
        }
    }

    pub fn value(&self, r: f64) -> f64 {
        match *self {
            Potential::Yukawa {
                coupling,
                screening,
            } => -coupling * (-screening * r).exp() / r,
            Potential::ApproxYukawa {
                coupling,
                screening,
            } => -2.0 * screening * coupling / (2.0 * screening * r).exp_m1(),
            Potential::Coulomb { coupling } => -coupling / r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularTerm {
    /// `l(l+1)/r²`.
    Exact,
    /// `l(l+1) α²/sinh²(αr)`.
    GreeneAldrich,
}

pub const DEFAULT_R_MIN: f64 = 1e-6;
pub const DEFAULT_STEP: f64 = 1e-3;
pub const ENERGY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    mass: f64,
    l: u32,
    angular: AngularTerm,
    potential: Potential,
    r_min: f64,
    /// `None` picks the box size from the energy scale.
    r_max: Option<f64>,
    step: f64,
}

impl RadialProblem {
    /// Greene-Aldrich centrifugal term for `ApproxYukawa`, exact otherwise.
    pub fn new(mass: f64, l: u32, potential: Potential) -> Result<Self> {
        require(mass > 0.0 && mass.is_finite(), "m", mass, "must be positive")?;
        let a = potential.coupling();
        require(a > 0.0 && a.is_finite(), "A", a, "must be positive")?;
        if let Some(alpha) = potential.screening() {
            require(alpha > 0.0 && alpha.is_finite(), "alpha", alpha, "must be positive")?;
        }
        let angular = match potential {
            Potential::ApproxYukawa { .. } => AngularTerm::GreeneAldrich,
            _ => AngularTerm::Exact,
        };
        Ok(Self {
            mass,
            l,
            angular,
            potential,
            r_min: DEFAULT_R_MIN,
            r_max: None,
            step: DEFAULT_STEP,
        })
    }

    pub fn with_angular(mut self, angular: AngularTerm) -> Result<Self> {
        if angular == AngularTerm::GreeneAldrich && self.potential.screening().is_none() {
            return Err(Error::UseCoulombLimit);
        }
        self.angular = angular;
        Ok(self)
    }

    pub fn with_step(mut self, step: f64) -> Result<Self> {
        require(step > 0.0 && step.is_finite(), "h", step, "must be positive")?;
        self.step = step;
        Ok(self)
    }

    pub fn with_r_min(mut self, r_min: f64) -> Result<Self> {
        require(r_min > 0.0 && r_min.is_finite(), "r_min", r_min, "must be positive")?;
        self.r_min = r_min;
        Ok(self)
    }

    pub fn with_r_max(mut self, r_max: f64) -> Result<Self> {
        require(
            r_max > self.r_min + 10.0 * self.step,
            "r_max",
            r_max,
            "must exceed r_min by several steps",
        )?;
        self.r_max = Some(r_max);
        Ok(self)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn angular(&self) -> AngularTerm {
        self.angular
    }

    pub fn potential(&self) -> Potential {
        self.potential
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    fn centrifugal(&self, r: f64) -> f64 {
        let ll = (self.l * (self.l + 1)) as f64;
        match (self.angular, self.potential.screening()) {
            (AngularTerm::GreeneAldrich, Some(alpha)) => {
                let sh = (alpha * r).sinh();
                ll * alpha * alpha / (sh * sh)
            }
            _ => ll / (r * r),
        }
    }

    /// Lowest possible energy: the Coulomb ground state with the same `A`.
    fn energy_floor(&self) -> f64 {
        let a = self.potential.coupling();
        -1.01 * self.mass * a * a / 2.0
    }
}

/// `max(50, 40/√(2m|E|))`: about 40 decay lengths.
pub fn suggested_r_max(mass: f64, energy: f64) -> f64 {
    let k = (2.0 * mass * energy.abs()).sqrt();
    if k > 0.0 {
        (40.0 / k).max(50.0)
    } else {
        50.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult {
    pub energy: f64,
    pub node_count: usize,
    pub converged: bool,
    /// Normalized mismatch `sin θ` between inward and outward solutions.
    pub residual: f64,
    pub r_max: f64,
}

const RESCALE: f64 = 1e100;

struct Grid {
    r: Vec<f64>,
    /// `2mV + L` on the grid.
    q: Vec<f64>,
    h: f64,
    mass: f64,
    l: u32,
    mass_coupling: f64,
}

impl Grid {
    fn new(p: &RadialProblem, r_max: f64) -> Self {
        let h = p.step;
        let points = ((r_max - p.r_min) / h).ceil() as usize + 1;
        let r: Vec<f64> = (0..points).map(|i| p.r_min + i as f64 * h).collect();
        let q = r
            .iter()
            .map(|&x| 2.0 * p.mass * p.potential.value(x) + p.centrifugal(x))
            .collect();
        Grid {
            r,
            q,
            h,
            mass: p.mass,
            l: p.l,
            mass_coupling: p.mass * p.potential.coupling(),
        }
    }

    fn len(&self) -> usize {
        self.r.len()
    }

    fn weights(&self, energy: f64) -> Vec<f64> {
        let c = self.h * self.h / 12.0;
        self.q
            .iter()
            .map(|&q| 1.0 - c * (q - 2.0 * self.mass * energy))
            .collect()
    }

    /// `u ~ r^{l+1}(1 − mA r/(l+1))` near the origin.
    fn frobenius(&self, r: f64) -> f64 {
        let l1 = (self.l + 1) as f64;
        r.powf(l1) * (1.0 - self.mass_coupling * r / l1)
    }

    /// Outward solution on `[0, end]`, with the sign changes it passes.
    fn outward(&self, w: &[f64], end: usize) -> (Vec<f64>, usize) {
        let mut u = vec![0.0; end + 1];
        u[0] = self.frobenius(self.r[0]);
        u[1] = self.frobenius(self.r[1]);
        let mut nodes = 0;
        for i in 1..end {
            u[i + 1] = ((12.0 - 10.0 * w[i]) * u[i] - w[i - 1] * u[i - 1]) / w[i + 1];
            if u[i + 1] * u[i] < 0.0 || (u[i] == 0.0 && u[i + 1] * u[i - 1] < 0.0) {
                nodes += 1;
            }
            if u[i + 1].abs() > RESCALE {
                u[..=i + 1].iter_mut().for_each(|x| *x /= RESCALE);
            }
        }
        (u, nodes)
    }

    /// Inward solution on `[start, N−1]` with `u(r_max) = 0`, and its sign changes.
    fn inward(&self, w: &[f64], start: usize) -> (Vec<f64>, usize) {
        let last = self.len() - 1;
        let mut u = vec![0.0; self.len()];
        u[last] = 0.0;
        u[last - 1] = 1e-300_f64.max(f64::MIN_POSITIVE);
        let mut nodes = 0;
        for i in (start + 1..last).rev() {
            u[i - 1] = ((12.0 - 10.0 * w[i]) * u[i] - w[i + 1] * u[i + 1]) / w[i - 1];
            if u[i - 1] * u[i] < 0.0 {
                nodes += 1;
            }
            if u[i - 1].abs() > RESCALE {
                u[i - 1..].iter_mut().for_each(|x| *x /= RESCALE);
            }
        }
        (u, nodes)
    }

    fn node_count(&self, energy: f64) -> usize {
        let w = self.weights(energy);
        self.outward(&w, self.len() - 1).1
    }

    /// Outermost classical turning point `2m(V − E) + L = 0`.
    fn turning_index(&self, energy: f64) -> usize {
        let e2 = 2.0 * self.mass * energy;
        let lo = 2;
        let hi = self.len() - 3;
        (lo..=hi)
            .rev()
            .find(|&i| self.q[i] - e2 < 0.0)
            .unwrap_or(self.len() / 2)
            .clamp(lo, hi)
    }

    /// `sin θ` between the outward and inward `(u_m, u_{m+1})` vectors.
    fn mismatch(&self, energy: f64, m: usize) -> (f64, usize) {
        let w = self.weights(energy);
        let (out, n_out) = self.outward(&w, m + 1);
        let (inn, n_in) = self.inward(&w, m);
        let (a0, a1) = (out[m], out[m + 1]);
        let (b0, b1) = (inn[m], inn[m + 1]);
        let cross = a1 * b0 - a0 * b1;
        let norm = a0.hypot(a1) * b0.hypot(b1);
        // both halves see the (m, m+1) interval
        let n_out_inner = n_out - usize::from(a0 * a1 < 0.0);
        (cross / norm, n_out_inner + n_in)
    }
}

fn solve_in_box(p: &RadialProblem, n: u32, r_max: f64) -> Result<EigenResult> {
    let grid = Grid::new(p, r_max);
    let target = n as usize;
    let (mut lo, mut hi) = (p.energy_floor(), 0.0);
    let found = grid.node_count(hi) as u32;
    if found as usize <= target {
        return Err(Error::ShootingNoState { n, found });
    }
    if grid.node_count(lo) > target {
        return Err(Error::ShootingNoState { n, found: 0 });
    }
    // narrow to a bracket holding exactly the n-th level
    loop {
        let mid = 0.5 * (lo + hi);
        let k = grid.node_count(mid);
        if k <= target {
            lo = mid;
        } else {
            hi = mid;
        }
        if grid.node_count(lo) == target && grid.node_count(hi) == target + 1 {
            break;
        }
        if hi - lo < ENERGY_TOL {
            break;
        }
    }
    let m = grid.turning_index(0.5 * (lo + hi));
    let f = |e: f64| grid.mismatch(e, m).0;
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    let mut side = 0i8;
    let mut converged = fa * fb <= 0.0;
    if converged {
        converged = false;
        for _ in 0..200 {
            let c = (a * fb - b * fa) / (fb - fa);
            let fc = f(c);
            if fc * fb > 0.0 {
                b = c;
                fb = fc;
                if side == -1 {
                    fa *= 0.5;
                }
                side = -1;
            } else {
                a = c;
                fa = fc;
                if side == 1 {
                    fb *= 0.5;
                }
                side = 1;
            }
            if (b - a).abs() <= ENERGY_TOL || fc == 0.0 {
                converged = true;
                break;
            }
        }
    }
    let energy = if fa.abs() < fb.abs() { a } else { b };
    let (residual, node_count) = grid.mismatch(energy, m);
    Ok(EigenResult {
        energy,
        node_count,
        converged: converged && node_count == target,
        residual: residual.abs(),
        r_max,
    })
}

/// Eigenvalue of the state with `n` nodes.
///
/// Node-count bisection brackets the level, then Illinois regula falsi on
/// the inward/outward mismatch at the turning point refines it. When
/// the box size is automatic it is enlarged until it spans about 40 decay
/// lengths of the state found.
pub fn shoot_eigenvalue(p: &RadialProblem, n: u32) -> Result<EigenResult> {
    if let Some(r_max) = p.r_max {
        return solve_in_box(p, n, r_max);
    }
    let a = p.potential.coupling();
    let shell = (n + p.l + 1) as f64;
    let mut r_max = suggested_r_max(p.mass, p.mass * a * a / (2.0 * shell * shell));
    loop {
        let result = solve_in_box(p, n, r_max);
        let needed = match &result {
            Ok(res) => suggested_r_max(p.mass, res.energy),
            Err(_) => 4.0 * r_max,
        };
        if needed <= r_max * 1.0001 || r_max > 1e4 {
            return result;
        }
        r_max = needed.max(1.5 * r_max);
    }
}

/// `∫₀^{r_max} f² dr`; fails when `f²` has not decayed below `1e-14` of its peak.
pub fn quadrature_norm<F: Fn(f64) -> f64>(f: F, r_max: f64) -> Result<f64> {
    square_norm(f, r_max)
}
