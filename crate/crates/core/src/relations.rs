//! Crossing relations between dihedral coordinates, the wedge cancellation
//! that makes `d(E_n)` vanish, and degeneration along a chord.

use alloc::format;
use alloc::vec::Vec;

use crate::chords::{crossing_set, enumerate_chords, is_strict_pair, wrap, Chord};
use crate::coords::{config_from_star, sample_star, CoordMap, PointConfig};
use crate::formal::FormalSum;
use crate::{Error, Result};

/// `u_c + prod_{c' crossing c} u_{c'} - 1`.
pub fn check_chord_relation(c: &Chord, m: &CoordMap) -> f64 {
    m.get(c) + m.product(&crossing_set(c)) - 1.0
}

/// Cyclic interval `from ..= to` of vertices.
fn cyclic_range(n: usize, from: usize, to: usize) -> impl Iterator<Item = usize> {
    let len = (to as isize - from as isize).rem_euclid(n as isize) as usize + 1;
    (0..len).map(move |t| wrap(n, (from + t) as isize))
}

fn rectangle(n: usize, rows: (usize, usize), cols: (usize, usize)) -> Result<Vec<Chord>> {
    let mut out = Vec::new();
    for i in cyclic_range(n, rows.0, rows.1) {
        for j in cyclic_range(n, cols.0, cols.1) {
            out.push(Chord::new(n, i, j)?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The two chord sets `{a..b-1} x {c..d-1}` and `{b..c-1} x {d..a-1}` whose
/// coordinate products sum to one.
pub fn block_relation_symbols(
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<(Vec<Chord>, Vec<Chord>)> {
    if n < 4 {
        return Err(Error::InvalidSize(n));
    }
    let pts = [a, b, c, d];
    if pts.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::InvalidArgument(format!(
            "({a},{b},{c},{d}) has a vertex outside 1..={n}"
        )));
    }
    // pairwise distinct and in cyclic order: the gaps add up to exactly n
    let gap = |x: usize, y: usize| (y as isize - x as isize).rem_euclid(n as isize) as usize;
    let gaps = [gap(a, b), gap(b, c), gap(c, d), gap(d, a)];
    if gaps.contains(&0) || gaps.iter().sum::<usize>() != n {
        return Err(Error::InvalidArgument(format!(
            "({a},{b},{c},{d}) are not distinct vertices in cyclic order"
        )));
    }
    let prev = |v: usize| wrap(n, v as isize - 1);
    let first = rectangle(n, (a, prev(b)), (c, prev(d)))?;
    let second = rectangle(n, (b, prev(c)), (d, prev(a)))?;
    Ok((first, second))
}

/// `prod_{a<=i<=b-1, c<=j<=d-1} u_{i,j} + prod_{b<=k<=c-1, d<=l<=a-1} u_{k,l} - 1`.
pub fn check_block_relation(a: usize, b: usize, c: usize, d: usize, m: &CoordMap) -> Result<f64> {
    let (first, second) = block_relation_symbols(m.n(), a, b, c, d)?;
    Ok(m.product(&first) + m.product(&second) - 1.0)
}

/// All rectangles `(a, b, c, d)` with `a < b < c < d`, one per 4-subset of
/// vertices (the cyclic rotations give the same relation).
pub fn block_rectangles(n: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            for c in (b + 1)..=n {
                for d in (c + 1)..=n {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Basis element `c ∧ c'` of the exterior square, stored with `c < c'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgePair(Chord, Chord);

impl WedgePair {
    /// Canonical form of `a ∧ b` and the sign it carries, or `None` when
    /// `a == b`.
    pub fn canonical(a: Chord, b: Chord) -> Option<(Self, i64)> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Some((WedgePair(a, b), 1)),
            core::cmp::Ordering::Greater => Some((WedgePair(b, a), -1)),
            core::cmp::Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &Chord {
        &self.0
    }

    pub fn second(&self) -> &Chord {
        &self.1
    }
}

/// `sum_{c} sum_{c' crossing c} c ∧ c'` in the exterior square of the free
/// abelian group on chords. This is `sum_c [u_c] ∧ [1 - u_c]` once `1 - u_c`
/// is expanded by the crossing relation; it is zero for every `n`.
pub fn wedge_sum(n: usize) -> Result<FormalSum<WedgePair>> {
    let mut sum = FormalSum::zero();
    for c in enumerate_chords(n)? {
        for d in crossing_set(&c) {
            if let Some((pair, sign)) = WedgePair::canonical(c, d) {
                sum.add_term(pair, sign);
            }
        }
    }
    Ok(sum)
}

/// One of the two polygons obtained by cutting along a chord.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonPiece {
    vertices: Vec<usize>,
}

impl PolygonPiece {
    /// Vertices of the piece in cyclic order of the original polygon.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// Chords of the original polygon that are chords of this piece.
    pub fn chords(&self, n: usize) -> Vec<Chord> {
        let k = self.vertices.len();
        let mut out = Vec::new();
        for x in 0..k {
            for y in (x + 2)..k {
                if x == 0 && y == k - 1 {
                    continue;
                }
                let (a, b) = (self.vertices[x], self.vertices[y]);
                if is_strict_pair(n, a, b) {
                    out.push(Chord::new(n, a, b).expect("strict pair"));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// A surviving crossing relation `u_chord + prod partners = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualRelation {
    pub chord: Chord,
    pub partners: Vec<Chord>,
}

impl ResidualRelation {
    /// `u_a + u_b = 1`, the relation of the reflection identity.
    pub fn is_reflection(&self) -> bool {
        self.partners.len() == 1
    }
}

/// What remains of the crossing relations after setting `u_c = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationResult {
    pub chord: Chord,
    /// Coordinates forced to 1: exactly the chords crossing `chord`.
    pub forced_one: Vec<Chord>,
    /// Sizes `n1`, `n2` with `n1 + n2 = n + 2`.
    pub split: [PolygonPiece; 2],
    /// Crossing relations of the two pieces, in chord order.
    pub residual_relations: Vec<ResidualRelation>,
}

impl DegenerationResult {
    pub fn sizes(&self) -> (usize, usize) {
        (self.split[0].size(), self.split[1].size())
    }
}

/// Specializes `u_c = 0`: the crossing chords are forced to 1 and the
/// polygon splits along `c` into two smaller polygons whose own crossing
/// relations survive.
pub fn degenerate(c: &Chord) -> DegenerationResult {
    let n = c.n();
    let (i, j) = c.endpoints();
    let first = PolygonPiece {
        vertices: cyclic_range(n, i, j).collect(),
    };
    let second = PolygonPiece {
        vertices: cyclic_range(n, j, i).collect(),
    };
    let forced_one = crossing_set(c);
    let mut residual_relations = Vec::new();
    for piece in [&first, &second] {
        let chords = piece.chords(n);
        for d in &chords {
            let partners: Vec<Chord> = crossing_set(d)
                .into_iter()
                .filter(|e| chords.binary_search(e).is_ok())
                .collect();
            residual_relations.push(ResidualRelation {
                chord: *d,
                partners,
            });
        }
    }
    residual_relations.sort_unstable_by_key(|r| r.chord);
    DegenerationResult {
        chord: *c,
        forced_one,
        split: [first, second],
        residual_relations,
    }
}

/// A cell configuration with `u_c = epsilon` and the other star coordinates
/// of the rotated chart drawn from the seeded sampler.
///
/// The chart is rotated so that `c = {a, b}` becomes the star chord
/// `{1, b - a + 1}`.
pub fn degeneration_config(c: &Chord, epsilon: f64, seed: u64, margin: f64) -> Result<PointConfig> {
    let n = c.n();
    let (a, b) = c.endpoints();
    let star = sample_star(n, seed, margin)?.with(b - a + 1, epsilon)?;
    Ok(config_from_star(&star).rotated(-(a as isize - 1)))
}
