//! Parameters, quantum numbers and classified energy roots shared by both branches.

use std::fmt;

use crate::error::{require, Error, Result};

/// Relative tolerance of the back-substitution test.
pub const BACK_SUBSTITUTION_TOL: f64 = 1e-9;

/// Mass `M`, coupling `A`, screening `α` (fm⁻¹) and the symmetry constant
/// (`C_s` on the spin branch, `C_ps` on the pseudospin branch).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    mass: f64,
    coupling: f64,
    screening: f64,
    symmetry_constant: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, coupling: f64, screening: f64, symmetry_constant: f64) -> Result<Self> {
        require(mass > 0.0 && mass.is_finite(), "M", mass, "must be positive")?;
        require(coupling > 0.0 && coupling.is_finite(), "A", coupling, "must be positive")?;
        require(
            screening >= 0.0 && screening.is_finite(),
            "alpha",
            screening,
            "must be non-negative",
        )?;
        require(
            symmetry_constant.is_finite(),
            "C",
            symmetry_constant,
            "must be finite",
        )?;
        Ok(Self {
            mass,
            coupling,
            screening,
            symmetry_constant,
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

    pub fn symmetry_constant(&self) -> f64 {
        self.symmetry_constant
    }

    pub fn with_screening(self, screening: f64) -> Result<Self> {
        Self::new(self.mass, self.coupling, screening, self.symmetry_constant)
    }

    pub fn with_coupling(self, coupling: f64) -> Result<Self> {
        Self::new(self.mass, coupling, self.screening, self.symmetry_constant)
    }

    pub fn with_symmetry_constant(self, c: f64) -> Result<Self> {
        Self::new(self.mass, self.coupling, self.screening, c)
    }

    pub(crate) fn require_screening(&self) -> Result<f64> {
        if self.screening > 0.0 {
            Ok(self.screening)
        } else {
            Err(Error::UseCoulombLimit)
        }
    }
}

/// Radial quantum number `n` and spin-orbit number `κ ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StateIndex {
    n: u32,
    kappa: i32,
}

impl StateIndex {
    pub fn new(n: u32, kappa: i32) -> Result<Self> {
        require(kappa != 0, "kappa", 0.0, "must be nonzero")?;
        Ok(Self { n, kappa })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    /// Orbital angular momentum, `κ(κ+1) = l(l+1)`.
    pub fn l(&self) -> u32 {
        if self.kappa > 0 {
            self.kappa as u32
        } else {
            (-self.kappa - 1) as u32
        }
    }

    /// Pseudo-orbital angular momentum, `κ(κ−1) = l̃(l̃+1)`.
    pub fn l_tilde(&self) -> u32 {
        if self.kappa > 0 {
            (self.kappa - 1) as u32
        } else {
            (-self.kappa) as u32
        }
    }

    /// Twice the total angular momentum.
    pub fn two_j(&self) -> u32 {
        2 * self.kappa.unsigned_abs() - 1
    }

    /// `n + κ + 1`, half the spin shell index.
    pub fn spin_shell(&self) -> i64 {
        self.n as i64 + self.kappa as i64 + 1
    }

    /// `n + κ`, half the pseudospin shell index.
    pub fn pseudospin_shell(&self) -> i64 {
        self.n as i64 + self.kappa as i64
    }

    /// Spectroscopic label such as `1p3/2`, built from `l`.
    pub fn label(&self) -> String {
        self.label_with(self.l())
    }

    pub(crate) fn label_with(&self, l: u32) -> String {
        const LETTERS: &[u8] = b"spdfghiklmnoqrtuvwxyz";
        let letter = LETTERS
            .get(l as usize)
            .map(|&c| (c as char).to_string())
            .unwrap_or_else(|| format!("[l={l}]"));
        format!("{}{}{}/2", self.n, letter, self.two_j())
    }
}

impl fmt::Display for StateIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, kappa={})", self.n, self.kappa)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Spin,
    Pseudospin,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Spin => "spin",
            Branch::Pseudospin => "pseudospin",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpuriousCause {
    /// One of the two positivity conditions on the energy fails.
    InequalityViolated,
    /// Solves the squared condition only: the decay index would be `−√ν²`.
    WrongBranch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    ValidBound,
    Spurious(SpuriousCause),
    /// Negative discriminant: no real root.
    Scattering,
    /// Real root with `ν² < 0`.
    Complex,
    /// Zero shell index.
    Undefined,
}

impl RootClass {
    pub fn token(&self) -> &'static str {
        match self {
            RootClass::ValidBound => "BOUND",
            RootClass::Spurious(_) => "SPURIOUS",
            RootClass::Scattering => "SCATTERING",
            RootClass::Complex => "COMPLEX",
            RootClass::Undefined => "UNDEFINED",
        }
    }

    pub fn is_valid(&self) -> bool {
        matches!(self, RootClass::ValidBound)
    }

    /// Real root, `ν > 0` and both positivity conditions satisfied.
    ///
    /// Wrong-branch roots qualify: their closed-form spinor is regular and
    /// decays, it just corresponds to the opposite sign of the square root in
    /// the back-substitution test.
    pub fn admits_wavefunction(&self) -> bool {
        matches!(
            self,
            RootClass::ValidBound | RootClass::Spurious(SpuriousCause::WrongBranch)
        )
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootClass::Spurious(SpuriousCause::InequalityViolated) => {
                f.write_str("SPURIOUS (inequality)")
            }
            RootClass::Spurious(SpuriousCause::WrongBranch) => f.write_str("SPURIOUS (branch)"),
            other => f.write_str(other.token()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub energy: Option<f64>,
    pub class: RootClass,
}

impl Root {
    pub(crate) fn absent(class: RootClass) -> Self {
        Self {
            energy: None,
            class,
        }
    }

    /// The energy when it is a valid bound state.
    pub fn bound(&self) -> Option<f64> {
        self.energy.filter(|_| self.class.is_valid())
    }
}

/// The two roots of an energy quadratic, `plus ≥ minus`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyPair {
    pub plus: Root,
    pub minus: Root,
    pub discriminant: Option<f64>,
    /// The discriminant is zero and both roots coincide.
    pub degenerate: bool,
}

impl EnergyPair {
    pub(crate) fn uniform(class: RootClass) -> Self {
        Self {
            plus: Root::absent(class),
            minus: Root::absent(class),
            discriminant: None,
            degenerate: false,
        }
    }

    pub fn roots(&self) -> [Root; 2] {
        [self.plus, self.minus]
    }
}

/// `a E² − 2 b E + c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Quadratic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Quadratic {
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - self.a * self.c
    }

    /// `(plus, minus)` or `None` for a negative discriminant.
    pub fn roots(&self) -> Option<(f64, f64)> {
        let d = self.discriminant();
        if d < 0.0 {
            return None;
        }
        // avoid cancellation in the smaller root
        let q = self.b + self.b.signum() * d.sqrt();
        if q == 0.0 {
            return Some((0.0, 0.0));
        }
        let (r1, r2) = (q / self.a, self.c / q);
        Some((r1.max(r2), r1.min(r2)))
    }
}

/// Inputs to the back-substitution test `√(f1 f2) + α K = rhs`, where the
/// energy must satisfy `f1 > 0` and `f2 > 0`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BackSubstitution {
    pub f1: f64,
    pub f2: f64,
    pub alpha_k: f64,
    pub rhs: f64,
}

impl BackSubstitution {
    pub fn residual(&self) -> Option<f64> {
        let prod = self.f1 * self.f2;
        (prod >= 0.0).then(|| prod.sqrt() + self.alpha_k - self.rhs)
    }

    pub fn classify(&self) -> RootClass {
        if self.f1 * self.f2 < 0.0 {
            return RootClass::Complex;
        }
        if !(self.f1 > 0.0 && self.f2 > 0.0) {
            return RootClass::Spurious(SpuriousCause::InequalityViolated);
        }
        let residual = self.residual().expect("product is positive");
        if residual.abs() <= BACK_SUBSTITUTION_TOL * self.rhs.abs().max(1.0) {
            RootClass::ValidBound
        } else {
            RootClass::Spurious(SpuriousCause::WrongBranch)
        }
    }
}

pub(crate) fn classify_pair(
    quadratic: Quadratic,
    test: impl Fn(f64) -> BackSubstitution,
) -> EnergyPair {
    let discriminant = quadratic.discriminant();
    match quadratic.roots() {
        None => EnergyPair {
            discriminant: Some(discriminant),
            ..EnergyPair::uniform(RootClass::Scattering)
        },
        Some((plus, minus)) => {
            let root = |e: f64| Root {
                energy: Some(e),
                class: test(e).classify(),
            };
            EnergyPair {
                plus: root(plus),
                minus: root(minus),
                discriminant: Some(discriminant),
                degenerate: discriminant == 0.0,
            }
        }
    }
}
