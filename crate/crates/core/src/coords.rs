//! Point configurations on `P^1(R)`, cross-ratios and dihedral coordinates.
//!
//! All arithmetic here is `f64`. Configurations are representatives of
//! points of the open standard cell: `z_1 < z_2 < ... < z_n < z_1` around
//! the real circle, with at most one point at infinity.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::chords::{enumerate_chords, wrap, Chord};
use crate::{Error, Result};

/// A point of the real projective line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProjPoint {
    Finite(f64),
    Infinity,
}

impl ProjPoint {
    fn finite(self) -> Option<f64> {
        match self {
            ProjPoint::Finite(v) => Some(v),
            ProjPoint::Infinity => None,
        }
    }

    /// Position on the circle read as an extended real, infinity last.
    fn circle_key(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }
}

impl From<f64> for ProjPoint {
    fn from(v: f64) -> Self {
        ProjPoint::Finite(v)
    }
}

/// `[a b | c d] = (a - c)(b - d) / ((a - d)(b - c))`.
///
/// When one point is at infinity the two factors containing it are cancelled
/// before dividing.
pub fn cross_ratio(a: ProjPoint, b: ProjPoint, c: ProjPoint, d: ProjPoint) -> Result<f64> {
    let pts = [a, b, c, d];
    let infinite = pts.iter().filter(|p| p.finite().is_none()).count();
    if infinite > 1 {
        return Err(Error::DegenerateConfig(
            "more than one point at infinity".to_string(),
        ));
    }
    for x in 0..4 {
        for y in (x + 1)..4 {
            if pts[x] == pts[y] {
                return Err(Error::DegenerateConfig("repeated point".to_string()));
            }
        }
    }
    use ProjPoint::*;
    Ok(match (a, b, c, d) {
        (Infinity, Finite(b), Finite(c), Finite(d)) => (b - d) / (b - c),
        (Finite(a), Infinity, Finite(c), Finite(d)) => (a - c) / (a - d),
        (Finite(a), Finite(b), Infinity, Finite(d)) => (b - d) / (a - d),
        (Finite(a), Finite(b), Finite(c), Infinity) => (a - c) / (b - c),
        (Finite(a), Finite(b), Finite(c), Finite(d)) => ((a - c) * (b - d)) / ((a - d) * (b - c)),
        _ => unreachable!("at most one point at infinity"),
    })
}

/// `n` cyclically ordered, pairwise distinct points of `P^1(R)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfig {
    z: Vec<ProjPoint>,
}

impl PointConfig {
    pub fn new(z: Vec<ProjPoint>) -> Result<Self> {
        let n = z.len();
        if n < 4 {
            return Err(Error::InvalidSize(n));
        }
        if z.iter().filter(|p| p.finite().is_none()).count() > 1 {
            return Err(Error::DegenerateConfig(
                "more than one point at infinity".to_string(),
            ));
        }
        if z.iter().any(|p| p.finite().is_some_and(|v| !v.is_finite())) {
            return Err(Error::DegenerateConfig("non-finite coordinate".to_string()));
        }
        // On the circle the sequence must increase except for exactly one
        // cyclic wrap-around, and never repeat.
        let mut descents = 0;
        for p in 0..n {
            let (cur, next) = (z[p].circle_key(), z[(p + 1) % n].circle_key());
            if cur == next {
                return Err(Error::DegenerateConfig(format!(
                    "points {} and {} coincide",
                    p + 1,
                    (p + 1) % n + 1
                )));
            }
            if next < cur {
                descents += 1;
            }
        }
        if descents != 1 {
            return Err(Error::DegenerateConfig(
                "points are not in the standard cyclic order".to_string(),
            ));
        }
        Ok(Self { z })
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// The point `z_k`, with `k` taken modulo `n` in `1..=n`.
    pub fn point(&self, k: usize) -> ProjPoint {
        self.z[wrap(self.n(), k as isize) - 1]
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.z
    }

    /// The configuration `w` with `w_p = z_{p + shift}`; its coordinate
    /// `u_{i,j}` equals `u_{i+shift, j+shift}` of `self`.
    pub fn rotated(&self, shift: isize) -> Self {
        let n = self.n();
        let z = (1..=n)
            .map(|p| self.z[wrap(n, p as isize + shift) - 1])
            .collect();
        Self { z }
    }

    /// Applies the real Möbius map `z -> (a z + b) / (c z + d)`.
    ///
    /// The determinant must be positive so that the cyclic order is kept.
    pub fn transformed(&self, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if a * d - b * c <= 0.0 {
            return Err(Error::InvalidArgument(
                "Möbius map must have positive determinant".to_string(),
            ));
        }
        let image = |p: ProjPoint| match p {
            ProjPoint::Infinity if c == 0.0 => ProjPoint::Infinity,
            ProjPoint::Infinity => ProjPoint::Finite(a / c),
            ProjPoint::Finite(x) if c * x + d == 0.0 => ProjPoint::Infinity,
            ProjPoint::Finite(x) => ProjPoint::Finite((a * x + b) / (c * x + d)),
        };
        Self::new(self.z.iter().copied().map(image).collect())
    }
}

/// Star coordinates `x_j = u_{1,j}` for `j = 3..=n-1`, each in `(0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StarCoords {
    x: Vec<f64>,
}

impl StarCoords {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::InvalidSize(x.len() + 3));
        }
        if let Some(&bad) = x.iter().find(|&&v| !(v > 0.0 && v < 1.0)) {
            return Err(Error::InvalidArgument(format!(
                "star coordinate {bad} is not in (0, 1)"
            )));
        }
        Ok(Self { x })
    }

    pub fn n(&self) -> usize {
        self.x.len() + 3
    }

    /// `u_{1,j}` for `3 <= j <= n-1`.
    pub fn get(&self, j: usize) -> f64 {
        self.x[j - 3]
    }

    pub fn values(&self) -> &[f64] {
        &self.x
    }

    /// Replaces `u_{1,j}` by `value`.
    pub fn with(&self, j: usize, value: f64) -> Result<Self> {
        if j < 3 || j >= self.n() {
            return Err(Error::InvalidArgument(format!(
                "{{1,{j}}} is not a star chord of the {}-gon",
                self.n()
            )));
        }
        let mut x = self.x.clone();
        x[j - 3] = value;
        Self::new(x)
    }
}

/// The value of every dihedral coordinate at a configuration, keyed by chord
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordMap {
    n: usize,
    chords: Vec<Chord>,
    values: Vec<f64>,
}

impl CoordMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: &Chord) -> f64 {
        let idx = self
            .chords
            .binary_search(c)
            .unwrap_or_else(|_| panic!("chord {c} is not a chord of the {}-gon", self.n));
        self.values[idx]
    }

    /// `u_{a,b}`, accepting the endpoints in either order.
    pub fn value(&self, a: usize, b: usize) -> Result<f64> {
        Ok(self.get(&Chord::new(self.n, a, b)?))
    }

    /// Product of the coordinates of `chords`.
    pub fn product(&self, chords: &[Chord]) -> f64 {
        chords.iter().map(|c| self.get(c)).product()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Chord, f64)> + '_ {
        self.chords.iter().copied().zip(self.values.iter().copied())
    }
}

fn chord_coord(cfg: &PointConfig, c: &Chord) -> Result<f64> {
    let (i, j) = c.endpoints();
    cross_ratio(
        cfg.point(i),
        cfg.point(i + 1),
        cfg.point(j + 1),
        cfg.point(j),
    )
}

/// `u_{a,b} = [a a+1 | b+1 b]`; the pair is normalized first so that `(a,b)`
/// and `(b,a)` give the same value.
pub fn dihedral_coord(cfg: &PointConfig, a: usize, b: usize) -> Result<f64> {
    chord_coord(cfg, &Chord::new(cfg.n(), a, b)?)
}

/// All dihedral coordinates of a configuration.
pub fn dihedral_coords(cfg: &PointConfig) -> Result<CoordMap> {
    let chords = enumerate_chords(cfg.n())?;
    let values = chords
        .iter()
        .map(|c| chord_coord(cfg, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoordMap {
        n: cfg.n(),
        chords,
        values,
    })
}

/// Realizes star coordinates in the gauge `z_1 = inf`, `z_2 = 0`, `z_n = 1`,
/// `z_j = x_j x_{j+1} ... x_{n-1}`.
pub fn config_from_star(s: &StarCoords) -> PointConfig {
    let n = s.n();
    let mut z = alloc::vec![ProjPoint::Finite(0.0); n];
    z[0] = ProjPoint::Infinity;
    z[n - 1] = ProjPoint::Finite(1.0);
    let mut acc = 1.0;
    for j in (3..n).rev() {
        acc *= s.get(j);
        z[j - 1] = ProjPoint::Finite(acc);
    }
    PointConfig { z }
}

fn check_margin(margin: f64) -> Result<()> {
    if margin > 0.0 && margin < 0.5 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "margin {margin} is not in (0, 1/2)"
        )))
    }
}

/// `n - 3` uniforms in `[margin, 1 - margin]` drawn from a ChaCha8 stream
/// seeded with `seed`.
pub fn sample_star(n: usize, seed: u64, margin: f64) -> Result<StarCoords> {
    if n < 4 {
        return Err(Error::InvalidSize(n));
    }
    check_margin(margin)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = (0..n - 3)
        .map(|_| {
            let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            margin + (1.0 - 2.0 * margin) * unit
        })
        .collect();
    StarCoords::new(x)
}

/// A deterministic pseudo-random point of the open standard cell.
pub fn sample_cell(n: usize, seed: u64, margin: f64) -> Result<PointConfig> {
    Ok(config_from_star(&sample_star(n, seed, margin)?))
}
