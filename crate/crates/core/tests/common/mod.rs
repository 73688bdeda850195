#![allow(dead_code)]

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Uniform samples in the open interval (0, 1).
pub struct Uniform(ChaCha8Rng);

impl Uniform {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next(&mut self) -> f64 {
        loop {
            let v = (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
            if v > 0.0 {
                return v;
            }
        }
    }
}

/// Unevaluated double-double `hi + lo`.
#[derive(Debug, Clone, Copy)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    pub fn from_f64(v: f64) -> Self {
        Self { hi: v, lo: 0.0 }
    }

    pub fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let p = self.hi * b;
        let e = self.hi.mul_add(b, -p);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Self { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let r = self.add(Self::from_f64(q1).mul_f64(-b));
        let q2 = r.hi / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// `Li2(x)` by direct summation of `x^k / k^2` in double-double.
///
/// For `x < 1` terms are added until the geometric tail bound
/// `term * x / (1 - x)` drops below `1e-32` relative. At `x = 1` the first
/// `K` terms are summed and the Euler–Maclaurin tail of `sum 1/k^2` is added.
pub fn li2_series_oracle(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x));
    if x == 0.0 {
        return 0.0;
    }
    let mut sum = DoubleDouble::ZERO;
    if x == 1.0 {
        let k_max = 2000u32;
        for k in 1..=k_max {
            let k = k as f64;
            sum = sum.add(DoubleDouble::from_f64(1.0).div_f64(k * k));
        }
        let k = k_max as f64;
        // sum_{j>K} 1/j^2 = 1/K - 1/(2K^2) + 1/(6K^3) - 1/(30K^5) + 1/(42K^7) - ...
        let tail = DoubleDouble::from_f64(1.0)
            .div_f64(k)
            .add(DoubleDouble::from_f64(-0.5).div_f64(k * k))
            .add(DoubleDouble::from_f64(1.0).div_f64(6.0 * k * k * k))
            .add(DoubleDouble::from_f64(-1.0).div_f64(30.0 * k.powi(5)));
        return sum.add(tail).to_f64();
    }
    let mut power = DoubleDouble::from_f64(x);
    let mut k = 1.0f64;
    loop {
        let term = power.div_f64(k * k);
        sum = sum.add(term);
        if term.hi * x / (1.0 - x) < 1e-32 * sum.hi {
            return sum.to_f64();
        }
        power = power.mul_f64(x);
        k += 1.0;
    }
}
