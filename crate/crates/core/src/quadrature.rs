//! Globally adaptive Gauss-Kronrod (7/15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639,
    0.949_107_912_342_758_525,
    0.864_864_423_359_769_073,
    0.741_531_185_599_394_440,
    0.586_087_235_467_691_130,
    0.405_845_151_377_397_167,
    0.207_784_955_007_898_468,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_553,
    0.104_790_010_322_250_184,
    0.140_653_259_715_525_919,
    0.169_004_726_639_267_903,
    0.190_350_578_064_785_410,
    0.204_432_940_075_298_892,
    0.209_482_141_084_727_828,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693,
    0.279_705_391_489_276_668,
    0.381_830_050_505_118_945,
    0.417_959_183_673_469_388,
];

const MAX_INTERVALS: usize = 4000;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    abs: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = h * XGK[j];
        let (f1, f2) = (f(c - dx), f(c + dx));
        kronrod += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let abs = abs * h.abs();
    let error = ((kronrod - gauss) * h).abs().max(50.0 * f64::EPSILON * abs);
    Panel {
        a,
        b,
        value: kronrod * h,
        abs,
        error,
    }
}

/// `∫_a^b f`, refined until the error estimate drops below `tol · ∫|f|`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let first = gk15(&f, a, b);
    let mut heap = BinaryHeap::from([first]);
    let (mut abs, mut error) = (first.abs, first.error);
    while error > tol.max(100.0 * f64::EPSILON) * abs {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureFailed { error });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (left, right) = (gk15(&f, worst.a, mid), gk15(&f, mid, worst.b));
        abs += left.abs + right.abs - worst.abs;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    Ok(heap.iter().map(|p| p.value).sum())
}

/// `∫_0^{r_max} f(r)² dr`, after checking that `f²` has decayed by `r_max`.
pub fn square_norm<F: Fn(f64) -> f64>(f: F, r_max: f64) -> Result<f64> {
    let samples = 400;
    let peak = (1..=samples)
        .map(|i| f(r_max * i as f64 / samples as f64).powi(2))
        .fold(0.0, f64::max);
    let tail = f(r_max).powi(2);
    if peak > 0.0 && tail > 1e-14 * peak {
        return Err(Error::TailNotDecayed { ratio: tail / peak });
    }
    integrate(|r| f(r).powi(2), 0.0, r_max, 1e-12)
}
