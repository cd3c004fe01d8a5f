//! Log-gamma, the terminating Gauss series and Jacobi polynomials.

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "ln_gamma",
            x,
        });
    }
    Ok(ln_gamma_pos(x))
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        return ln_gamma_pos(x + 1.0) - x.ln();
    }
    // Γ(1) = Γ(2) = 1 exactly; the series loses relative accuracy near there
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    let z = x - 1.0;
    let series = LANCZOS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS[0], |acc, (i, &p)| acc + p / (z + (i + 1) as f64));
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

/// Double-double number `hi + lo`, used to keep the alternating series
/// accurate when its terms are much larger than its sum.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn new(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Self {
            hi: s,
            lo: lo - (s - hi),
        }
    }

    fn add(self, o: Dd) -> Dd {
        let s = self.hi + o.hi;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) + (o.hi - bb);
        Dd::renorm(s, err + self.lo + o.lo)
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let err = self.hi.mul_add(o.hi, -p);
        Dd::renorm(p, err + self.hi * o.lo + self.lo * o.hi)
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::new(-q1)));
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(Dd::new(-q2)));
        let q3 = r.hi / o.hi;
        Dd::renorm(q1, q2).add(Dd::new(q3))
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// `₂F₁(−n, b; c; x)` summed exactly over its `n + 1` terms.
///
/// Terms and the running sum are carried in double-double precision.
pub fn hyp2f1_terminating(n: u32, b: f64, c: f64, x: f64) -> Result<f64> {
    if (0..n).any(|j| c + j as f64 == 0.0) {
        return Err(Error::HypergeometricPole { c, n });
    }
    let (b, c, x) = (Dd::new(b), Dd::new(c), Dd::new(x));
    let mut term = Dd::new(1.0);
    let mut acc = term;
    for k in 0..n {
        let k = k as f64;
        let num = Dd::new(k - n as f64).mul(b.add(Dd::new(k))).mul(x);
        let den = c.add(Dd::new(k)).mul(Dd::new(k + 1.0));
        term = term.mul(num).div(den);
        acc = acc.add(term);
    }
    Ok(acc.value())
}

/// Degree and exponents of a Jacobi polynomial `P_n^(a,b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiIndex {
    n: u32,
    a: f64,
    b: f64,
}

impl JacobiIndex {
    pub fn new(n: u32, a: f64, b: f64) -> Result<Self> {
        crate::error::require(a > -1.0, "a", a, "Jacobi exponent must exceed -1")?;
        crate::error::require(b > -1.0, "b", b, "Jacobi exponent must exceed -1")?;
        Ok(Self { n, a, b })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// `(a + 1)_n / n!`
pub(crate) fn jacobi_prefactor(n: u32, a: f64) -> f64 {
    (1..=n).map(|k| (a + k as f64) / k as f64).product()
}

/// `P_n^(a,b)(x)` via `(a+1)_n/n! · ₂F₁(−n, n+a+b+1; a+1; (1−x)/2)`.
///
/// For `x < 0` the reflection `P_n^(a,b)(x) = (−1)^n P_n^(b,a)(−x)` keeps the
/// series argument below one half.
pub fn jacobi_p(idx: JacobiIndex, x: f64) -> f64 {
    let JacobiIndex { n, a, b } = idx;
    if x < 0.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return sign * jacobi_p(JacobiIndex { n, a: b, b: a }, -x);
    }
    // a > -1 keeps c = a + 1 positive, so the series has no pole
    let series = hyp2f1_terminating(n, n as f64 + a + b + 1.0, a + 1.0, 0.5 * (1.0 - x))
        .expect("a > -1 rules out poles");
    jacobi_prefactor(n, a) * series
}
