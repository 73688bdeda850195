//! Combinatorics of the n-gon with vertices `1..=n` in the cyclic order
//! `1 < 2 < ... < n < 1`.
//!
//! Vertex `i` sits between the sides labelled by the marked points `z_i` and
//! `z_{i+1}`. A chord `{i, j}` indexes the dihedral coordinate `u_{i,j}`.
//! Forgetting marked points merges neighbouring vertices into blocks, which
//! gives the decorated polygons used by the pullback formula
//! `f_J^*(u_{I,J}) = prod_{i in I, j in J} u_{i,j}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Representative in `1..=n` of the integer `k` modulo `n`.
pub(crate) fn wrap(n: usize, k: isize) -> usize {
    let n = n as isize;
    ((k - 1).rem_euclid(n) + 1) as usize
}

/// Whether `a`, `a+1`, `b`, `b+1` are pairwise distinct modulo `n`.
pub fn is_strict_pair(n: usize, a: usize, b: usize) -> bool {
    if n < 4 || a == 0 || b == 0 || a > n || b > n {
        return false;
    }
    a != b && wrap(n, a as isize + 1) != b && wrap(n, b as isize + 1) != a
}

fn check_size(n: usize) -> Result<()> {
    if n < 4 {
        Err(Error::InvalidSize(n))
    } else {
        Ok(())
    }
}

/// A strict chord `{i, j}` of the n-gon, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    // field order gives the (n, i, j) lexicographic ordering
    n: usize,
    i: usize,
    j: usize,
}

impl Chord {
    /// Builds the chord `{a, b}`; the endpoints may be given in either order.
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        check_size(n)?;
        if !is_strict_pair(n, a, b) {
            return Err(Error::InvalidArgument(format!(
                "{{{a},{b}}} is not a strict chord of the {n}-gon"
            )));
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        Ok(Self { n, i, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Whether vertex `v` lies strictly inside the arc `i+1 ..= j-1`.
    fn inside(&self, v: usize) -> bool {
        self.i < v && v < self.j
    }

    /// Whether vertex `v` lies strictly inside the arc `j+1 ..= i-1`.
    fn outside(&self, v: usize) -> bool {
        v > self.j || v < self.i
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

/// All `n(n-3)/2` chords of the n-gon in lexicographic order.
pub fn enumerate_chords(n: usize) -> Result<Vec<Chord>> {
    check_size(n)?;
    let mut out = Vec::with_capacity(n * (n - 3) / 2);
    for i in 1..=n {
        for j in (i + 2)..=n {
            if is_strict_pair(n, i, j) {
                out.push(Chord { n, i, j });
            }
        }
    }
    Ok(out)
}

/// Whether two chords of the same polygon cross, i.e. their endpoints
/// interleave in the cyclic order.
pub fn crosses(c1: &Chord, c2: &Chord) -> Result<bool> {
    if c1.n != c2.n {
        return Err(Error::InvalidArgument(format!(
            "chords {c1} and {c2} belong to different polygons ({} and {})",
            c1.n, c2.n
        )));
    }
    let (k, l) = c2.endpoints();
    Ok((c1.inside(k) && c1.outside(l)) || (c1.inside(l) && c1.outside(k)))
}

/// The chords crossing `c`: `{k, l}` with `k` in `a+1 ..= c-1` and `l` in
/// `c+1 ..= a-1`, sorted lexicographically.
pub fn crossing_set(c: &Chord) -> Vec<Chord> {
    let (a, b) = c.endpoints();
    let n = c.n;
    let mut out: Vec<Chord> = Vec::with_capacity((b - a - 1) * (n - (b - a) - 1));
    for k in (a + 1)..b {
        for l in (b + 1..=n).chain(1..a) {
            let (i, j) = if k < l { (k, l) } else { (l, k) };
            out.push(Chord { n, i, j });
        }
    }
    out.sort_unstable();
    out
}

/// Consecutive vertices `(i, i+1, ..., i+k)` modulo `n` merged into one
/// vertex of a decorated polygon; `k` counts the forgotten marked points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexBlock {
    n: usize,
    indices: Vec<usize>,
}

impl VertexBlock {
    pub fn new(n: usize, start: usize, len: usize) -> Result<Self> {
        check_size(n)?;
        if start == 0 || start > n || len == 0 || len > n {
            return Err(Error::InvalidArgument(format!(
                "block of length {len} starting at {start} in the {n}-gon"
            )));
        }
        let indices = (0..len).map(|t| wrap(n, (start + t) as isize)).collect();
        Ok(Self { n, indices })
    }

    pub fn singleton(n: usize, i: usize) -> Result<Self> {
        Self::new(n, i, 1)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn start(&self) -> usize {
        self.indices[0]
    }

    /// Last vertex of the block.
    pub fn end(&self) -> usize {
        self.indices[self.indices.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn absorb(&mut self, other: VertexBlock) {
        self.indices.extend(other.indices);
    }
}

impl fmt::Display for VertexBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.len() == 1 {
            return write!(f, "{}", self.indices[0]);
        }
        write!(f, "(")?;
        for (t, v) in self.indices.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The polygon `Gamma_n^J`: the `(n - |J|)`-gon of the target of the map
/// forgetting the marked points in `J`, with vertices decorated by blocks of
/// original vertices.
///
/// Blocks are listed in cyclic order starting with the block whose first
/// vertex is the smallest retained index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecoratedPolygon {
    n: usize,
    forgotten: Vec<usize>,
    blocks: Vec<VertexBlock>,
}

/// Forgets the marked points indexed by `forgotten`.
///
/// Forgetting `z_s` merges vertex `s` into the block ending at `s - 1`, so the
/// block of a retained index `s` is `(s, s+1, ..., t-1)` where `t` is the
/// next retained index.
pub fn forget(n: usize, forgotten: &[usize]) -> Result<DecoratedPolygon> {
    check_size(n)?;
    let set: BTreeSet<usize> = forgotten.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s > n) {
        return Err(Error::InvalidArgument(format!(
            "marked point {bad} is not in 1..={n}"
        )));
    }
    if n - set.len() < 4 {
        return Err(Error::TargetTooSmall {
            n,
            forgotten: set.len(),
        });
    }
    let retained: Vec<usize> = (1..=n).filter(|s| !set.contains(s)).collect();
    let blocks = retained
        .iter()
        .enumerate()
        .map(|(p, &s)| {
            let next = retained[(p + 1) % retained.len()];
            let len = (next as isize - s as isize).rem_euclid(n as isize) as usize;
            VertexBlock::new(n, s, len)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecoratedPolygon {
        n,
        forgotten: set.into_iter().collect(),
        blocks,
    })
}

impl DecoratedPolygon {
    /// Size of the original polygon.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices `m = n - |J|`.
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn forgotten(&self) -> &[usize] {
        &self.forgotten
    }

    pub fn blocks(&self) -> &[VertexBlock] {
        &self.blocks
    }

    /// Retained marked points in label order: the `p`-th entry is the
    /// original index of the side labelled `p` in the `m`-gon.
    pub fn marked_points(&self) -> Vec<usize> {
        self.blocks.iter().map(VertexBlock::start).collect()
    }

    /// Forgets further marked points (original indices, disjoint from the
    /// already forgotten ones) by merging blocks one at a time.
    pub fn forget_more(&self, more: &[usize]) -> Result<DecoratedPolygon> {
        let extra: BTreeSet<usize> = more.iter().copied().collect();
        if self.size() < extra.len() + 4 {
            return Err(Error::TargetTooSmall {
                n: self.n,
                forgotten: self.forgotten.len() + extra.len(),
            });
        }
        let mut blocks = self.blocks.clone();
        for s in &extra {
            let p = blocks.iter().position(|b| b.start() == *s).ok_or_else(|| {
                Error::InvalidArgument(format!("marked point {s} is not retained"))
            })?;
            let merged = blocks.remove(p);
            let prev = (p + blocks.len() - 1) % blocks.len();
            blocks[prev].absorb(merged);
        }
        let first = blocks
            .iter()
            .enumerate()
            .min_by_key(|(_, b)| b.start())
            .map(|(p, _)| p)
            .unwrap_or(0);
        blocks.rotate_left(first);
        let mut forgotten: Vec<usize> = self.forgotten.iter().copied().chain(extra).collect();
        forgotten.sort_unstable();
        Ok(DecoratedPolygon {
            n: self.n,
            forgotten,
            blocks,
        })
    }
}

impl fmt::Display for DecoratedPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (p, b) in self.blocks.iter().enumerate() {
            if p > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

/// A strict chord of a decorated polygon, joining two non-adjacent blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockChord {
    a: VertexBlock,
    b: VertexBlock,
    positions: (usize, usize),
    host_size: usize,
}

impl BlockChord {
    pub fn a(&self) -> &VertexBlock {
        &self.a
    }

    pub fn b(&self) -> &VertexBlock {
        &self.b
    }

    /// Zero-based positions of the two blocks in the host polygon.
    pub fn positions(&self) -> (usize, usize) {
        self.positions
    }

    /// Number of vertices of the host polygon.
    pub fn host_size(&self) -> usize {
        self.host_size
    }

    /// Elementary chords whose coordinates multiply to the pullback of this
    /// block chord's coordinate, sorted. Depends only on the two blocks.
    pub fn pullback(&self) -> Vec<Chord> {
        pullback(self)
    }
}

impl fmt::Display for BlockChord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// All `m(m-3)/2` strict chords of the block polygon, ordered by block
/// positions.
pub fn block_chords(p: &DecoratedPolygon) -> Vec<BlockChord> {
    let m = p.size();
    let mut out = Vec::with_capacity(m * (m - 3) / 2);
    for x in 0..m {
        for y in (x + 2)..m {
            if x == 0 && y == m - 1 {
                continue;
            }
            out.push(BlockChord {
                a: p.blocks[x].clone(),
                b: p.blocks[y].clone(),
                positions: (x, y),
                host_size: m,
            });
        }
    }
    out
}

/// `{{i, j} : i in a, j in b}` for a block chord `(a, b)`.
pub fn pullback(bc: &BlockChord) -> Vec<Chord> {
    let n = bc.a.n;
    let mut out: Vec<Chord> =
        bc.a.indices
            .iter()
            .flat_map(|&i| {
                bc.b.indices.iter().map(move |&j| {
                    let (i, j) = if i < j { (i, j) } else { (j, i) };
                    Chord { n, i, j }
                })
            })
            .collect();
    out.sort_unstable();
    out
}
