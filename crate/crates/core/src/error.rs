use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the solvers.
///
/// [`Error::InvalidParameter`] marks bad input; everything else is a
/// physics-domain failure for otherwise well-formed input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{function} is undefined at x = {x}")]
    Domain { function: &'static str, x: f64 },

    #[error("hypergeometric series hits a pole: c = {c}, n = {n}")]
    HypergeometricPole { c: f64, n: u32 },

    #[error("no real Nikiforov-Uvarov solution: {constant} = {value} < 0")]
    NoRealSolution { constant: &'static str, value: f64 },

    #[error("unphysical eigenfunction: {constant} = {value}")]
    UnphysicalEigenfunction { constant: &'static str, value: f64 },

    #[error("screening parameter is zero, use the Coulomb limit")]
    UseCoulombLimit,

    #[error("state n = {n}, kappa = {kappa} has no solution (zero shell index)")]
    UndefinedState { n: u32, kappa: i32 },

    #[error("energy {energy} is not an admissible bound-state energy ({class})")]
    InadmissibleEnergy { energy: f64, class: &'static str },

    #[error("n = {n} with edge exponent {exponent} gives a non-normalizable wave function")]
    NotNormalizable { n: u32, exponent: f64 },

    #[error("vanishing denominator {what} = {value}")]
    SingularDenominator { what: &'static str, value: f64 },

    #[error("unphysical centrifugal strength: radicand {radicand} < 0")]
    UnphysicalCentrifugal { radicand: f64 },

    #[error("no bound state: decay index {decay} <= 0")]
    NotBound { decay: f64 },

    #[error("integrand does not decay: tail/peak = {ratio:e}")]
    TailNotDecayed { ratio: f64 },

    #[error("quadrature did not converge: estimated error {error:e}")]
    QuadratureFailed { error: f64 },

    #[error("shooting found {found} bound states below zero, need more than {n}")]
    ShootingNoState { n: u32, found: u32 },
}

impl Error {
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::InvalidParameter { .. })
    }
}

pub(crate) fn require(
    ok: bool,
    name: &'static str,
    value: f64,
    reason: &'static str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value, reason })
    }
}
