//! Reduction of `Eq_n` to five-term and reflection instances.
//!
//! Every certificate is stored in the rearranged form
//! `E_n = sum_t sign_t * E_t`, where each `E_t` is the pullback of a smaller
//! `Eq_m` along a forgetful map (or, for `n = 6`, a reflection). Pulling a
//! block chord back gives a product of elementary coordinates, so the
//! expansion lives in the free abelian group on *product symbols*: sets of
//! elementary chords. Two pullbacks through different forget sets that give
//! the same chord set are the same symbol, which is what lets the
//! inclusion–exclusion over `J ⊆ {1..k}` cancel.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::chords::{block_chords, enumerate_chords, forget, BlockChord, Chord, DecoratedPolygon};
use crate::coords::{dihedral_coords, sample_cell, CoordMap};
use crate::dilog::{rogers_l, L1};
use crate::formal::FormalSum;
use crate::relations::check_chord_relation;
use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// `(m-3)(m-2)/2`, the multiple of `L(1)` on the right of `Eq_m`.
pub fn eq_constant(m: usize) -> Rational {
    let m = m as i64;
    Rational::new((m - 3) * (m - 2), 2)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `sum_{l=0}^{k} (-1)^l C(k,l) (n-l-3)(n-l-2)/2`: the constant column of
/// the inclusion–exclusion over `J ⊆ {1..k}`.
pub fn alternating_constant_sum(n: usize, k: usize) -> Rational {
    (0..=k)
        .map(|l| {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            eq_constant(n - l) * (sign * binomial(k as u64, l as u64) as i64)
        })
        .sum()
}

/// A set of elementary chords standing for the product of their
/// coordinates; singletons are the elementary coordinates themselves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductSymbol(Vec<Chord>);

impl ProductSymbol {
    pub fn new(mut chords: Vec<Chord>) -> Self {
        chords.sort_unstable();
        chords.dedup();
        Self(chords)
    }

    pub fn chords(&self) -> &[Chord] {
        &self.0
    }

    pub fn is_elementary(&self) -> bool {
        self.0.len() == 1
    }

    pub fn value(&self, m: &CoordMap) -> f64 {
        m.product(&self.0)
    }
}

impl fmt::Display for ProductSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, c) in self.0.iter().enumerate() {
            if t > 0 {
                write!(f, "*")?;
            }
            write!(f, "u{}", c)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InstanceKind {
    /// `Eq_n` itself on the n-gon.
    Base,
    /// `Eq_m` pulled back along the map forgetting `J`.
    Pullback,
    /// The reflection `L(a) + L(b) = L(1)` for a block relation `a + b = 1`,
    /// realized as `Eq_4` pulled back to the n-gon.
    Reflection,
}

impl InstanceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InstanceKind::Base => "base",
            InstanceKind::Pullback => "pullback",
            InstanceKind::Reflection => "reflection",
        }
    }
}

/// One block chord of the target polygon and its pulled-back symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub chord: BlockChord,
    pub symbol: ProductSymbol,
}

/// `sum_{block chords} L(f_J^* u) = constant * L(1)` on `M_{0,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationInstance {
    kind: InstanceKind,
    polygon: DecoratedPolygon,
    terms: Vec<Term>,
    constant: Rational,
}

impl EquationInstance {
    fn on_polygon(kind: InstanceKind, polygon: DecoratedPolygon) -> Self {
        let terms = block_chords(&polygon)
            .into_iter()
            .map(|chord| {
                let symbol = ProductSymbol::new(chord.pullback());
                Term { chord, symbol }
            })
            .collect();
        let constant = eq_constant(polygon.size());
        Self {
            kind,
            polygon,
            terms,
            constant,
        }
    }

    /// `Eq_n` on the undecorated n-gon.
    pub fn base(n: usize) -> Result<Self> {
        Ok(Self::on_polygon(InstanceKind::Base, forget(n, &[])?))
    }

    /// `Eq_{n-|J|}` pulled back along `f_J`.
    pub fn pullback(n: usize, forgotten: &[usize]) -> Result<Self> {
        Ok(Self::on_polygon(
            InstanceKind::Pullback,
            forget(n, forgotten)?,
        ))
    }

    /// A reflection instance: `J` must leave a square, whose two block chords
    /// give the pair of products summing to one.
    pub fn reflection(n: usize, forgotten: &[usize]) -> Result<Self> {
        let polygon = forget(n, forgotten)?;
        if polygon.size() != 4 {
            return Err(Error::InvalidArgument(format!(
                "a reflection needs a square, forgetting {forgotten:?} leaves a {}-gon",
                polygon.size()
            )));
        }
        Ok(Self::on_polygon(InstanceKind::Reflection, polygon))
    }

    fn with_kind(kind: InstanceKind, n: usize, forgotten: &[usize]) -> Result<Self> {
        match kind {
            InstanceKind::Base if forgotten.is_empty() => Self::base(n),
            InstanceKind::Base | InstanceKind::Pullback => Self::pullback(n, forgotten),
            InstanceKind::Reflection => Self::reflection(n, forgotten),
        }
    }

    pub fn kind(&self) -> InstanceKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.polygon.n()
    }

    pub fn forgotten(&self) -> &[usize] {
        self.polygon.forgotten()
    }

    pub fn polygon(&self) -> &DecoratedPolygon {
        &self.polygon
    }

    /// Size `m` of the polygon the equation lives on.
    pub fn target_size(&self) -> usize {
        self.polygon.size()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn constant(&self) -> Rational {
        self.constant
    }

    /// The left-hand side as a formal sum of product symbols.
    pub fn expand(&self) -> FormalSum<ProductSymbol> {
        self.terms.iter().map(|t| (t.symbol.clone(), 1)).collect()
    }

    /// `sum L(term)` evaluated at a configuration of the n-gon.
    pub fn l_sum(&self, m: &CoordMap) -> Result<f64> {
        self.terms.iter().map(|t| rogers_l(t.symbol.value(m))).sum()
    }

    /// `sum L(term) - constant * L(1)`.
    pub fn residual(&self, m: &CoordMap) -> Result<f64> {
        Ok(self.l_sum(m)? - rational_to_f64(self.constant) * L1)
    }
}

fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Expands an instance into product symbols.
pub fn expand_instance(e: &EquationInstance) -> FormalSum<ProductSymbol> {
    e.expand()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateCase {
    Even,
    Odd,
    Six,
}

impl CertificateCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertificateCase::Even => "even",
            CertificateCase::Odd => "odd",
            CertificateCase::Six => "six",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedInstance {
    pub sign: i64,
    pub instance: EquationInstance,
}

/// `E_n = sum sign * E_t` together with the exact expansion of the right side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    n: usize,
    case: CertificateCase,
    instances: Vec<SignedInstance>,
    expansion: FormalSum<ProductSymbol>,
}

impl Certificate {
    pub fn new(n: usize, case: CertificateCase, instances: Vec<SignedInstance>) -> Self {
        let mut expansion = FormalSum::zero();
        for s in &instances {
            expansion += s.instance.expand().scaled(s.sign);
        }
        Self {
            n,
            case,
            instances,
            expansion,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn case(&self) -> CertificateCase {
        self.case
    }

    pub fn instances(&self) -> &[SignedInstance] {
        &self.instances
    }

    /// Summed signed coefficient of every product symbol.
    pub fn expansion(&self) -> &FormalSum<ProductSymbol> {
        &self.expansion
    }

    pub fn constant_total(&self) -> Rational {
        self.instances
            .iter()
            .map(|s| s.instance.constant() * s.sign)
            .sum()
    }

    /// Largest polygon among the instances.
    pub fn max_target_size(&self) -> usize {
        self.instances
            .iter()
            .map(|s| s.instance.target_size())
            .max()
            .unwrap_or(0)
    }

    /// Exact check that the instances add up to `Eq_n`.
    pub fn structural_check(&self) -> Result<StructuralReport> {
        let target: FormalSum<ProductSymbol> = enumerate_chords(self.n)?
            .into_iter()
            .map(|c| (ProductSymbol::new(alloc::vec![c]), 1))
            .collect();
        let difference = self.expansion.clone() - target;
        let constant_total = self.constant_total();
        let trivial = self.n <= 5;
        let recursion_ok = self.instances.iter().all(|s| {
            let inst = &s.instance;
            let m = inst.target_size();
            inst.n() == self.n
                && s.sign.abs() == 1
                && match inst.kind() {
                    InstanceKind::Base => trivial,
                    InstanceKind::Pullback => (4..self.n).contains(&m),
                    InstanceKind::Reflection => m == 4,
                }
        });
        Ok(StructuralReport {
            expansion_ok: difference.is_zero(),
            constant_ok: constant_total == eq_constant(self.n),
            recursion_ok,
            discrepancies: difference.iter().map(|(s, c)| (s.clone(), c)).collect(),
            constant_total,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructuralReport {
    /// The expansion is exactly one copy of every elementary chord.
    pub expansion_ok: bool,
    /// The signed constants add up to `(n-3)(n-2)/2`.
    pub constant_ok: bool,
    /// Every instance lives on a strictly smaller polygon (or is an axiom).
    pub recursion_ok: bool,
    /// `expansion - Eq_n`, nonzero entries only.
    pub discrepancies: Vec<(ProductSymbol, i64)>,
    pub constant_total: Rational,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.expansion_ok && self.constant_ok && self.recursion_ok
    }
}

/// Subsets of `{1..k}` ordered by size, then lexicographically.
fn subsets_by_size(k: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u64..(1 << k))
        .map(|mask| (1..=k).filter(|j| mask & (1 << (j - 1)) != 0).collect())
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

fn doubled(j: &[usize]) -> Vec<usize> {
    j.iter().map(|&t| 2 * t).collect()
}

/// `E_n = -sum_{J != ∅} (-1)^|J| E_{2J}` over `J ⊆ {1..k}`.
fn inclusion_exclusion(n: usize, k: usize, case: CertificateCase) -> Result<Certificate> {
    let instances = subsets_by_size(k)
        .into_iter()
        .filter(|j| !j.is_empty())
        .map(|j| {
            let sign = if j.len() % 2 == 0 { -1 } else { 1 };
            Ok(SignedInstance {
                sign,
                instance: EquationInstance::pullback(n, &doubled(&j))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate::new(n, case, instances))
}

/// Certificate for `n = 2k`, `k >= 4`, forgetting `z_{2j}` for `j ∈ J`.
pub fn build_certificate_even(n: usize) -> Result<Certificate> {
    if !n.is_multiple_of(2) || n < 8 {
        return Err(Error::WrongCase {
            n,
            expected: "even (n >= 8)",
        });
    }
    inclusion_exclusion(n, n / 2, CertificateCase::Even)
}

/// Certificate for `n = 2k + 1`, `k >= 3`, with the same inclusion–exclusion.
pub fn build_certificate_odd(n: usize) -> Result<Certificate> {
    if n % 2 != 1 || n < 7 {
        return Err(Error::WrongCase {
            n,
            expected: "odd (n >= 7)",
        });
    }
    inclusion_exclusion(n, (n - 1) / 2, CertificateCase::Odd)
}

/// `E_6` from three pentagons (`J = {2}, {4}, {6}`) minus three reflections
/// for `u14 u24 + u35 u36 = 1`, `u36 u46 + u15 u25 = 1` and
/// `u14 u13 + u25 u26 = 1`.
pub fn build_certificate_six() -> Certificate {
    let pentagons = [[2], [4], [6]].into_iter().map(|j| SignedInstance {
        sign: 1,
        instance: EquationInstance::pullback(6, &j).expect("pentagon"),
    });
    let reflections = [[2, 6], [2, 4], [4, 6]]
        .into_iter()
        .map(|j| SignedInstance {
            sign: -1,
            instance: EquationInstance::reflection(6, &j).expect("square"),
        });
    Certificate::new(
        6,
        CertificateCase::Six,
        pentagons.chain(reflections).collect(),
    )
}

/// Dispatches on `n`: the base equation certifies itself for `n = 4, 5`.
pub fn certificate(n: usize) -> Result<Certificate> {
    match n {
        0..=3 => Err(Error::InvalidSize(n)),
        4 | 5 => {
            let case = if n == 4 {
                CertificateCase::Even
            } else {
                CertificateCase::Odd
            };
            Ok(Certificate::new(
                n,
                case,
                alloc::vec![SignedInstance {
                    sign: 1,
                    instance: EquationInstance::base(n)?,
                }],
            ))
        }
        6 => Ok(build_certificate_six()),
        _ if n.is_multiple_of(2) => build_certificate_even(n),
        _ => build_certificate_odd(n),
    }
}

fn accumulate(
    n: usize,
    sign: i64,
    kind: InstanceKind,
    forgotten: Vec<usize>,
    target: usize,
    acc: &mut BTreeMap<(InstanceKind, Vec<usize>), i64>,
) -> Result<()> {
    if target <= 5 || kind != InstanceKind::Pullback {
        *acc.entry((kind, forgotten)).or_insert(0) += sign;
        return Ok(());
    }
    let marked = forget(n, &forgotten)?.marked_points();
    for sub in certificate(target)?.instances {
        let mut composed: Vec<usize> = forgotten
            .iter()
            .copied()
            .chain(sub.instance.forgotten().iter().map(|&p| marked[p - 1]))
            .collect();
        composed.sort_unstable();
        accumulate(
            n,
            sign * sub.sign,
            sub.instance.kind(),
            composed,
            sub.instance.target_size(),
            acc,
        )?;
    }
    Ok(())
}

/// Recursively replaces every pullback of `Eq_m` with `m >= 6` by the
/// composition of its own certificate with the forgetful map, leaving only
/// five-term and reflection instances. Repeated instances are merged by
/// their net coefficient.
pub fn flatten(cert: &Certificate) -> Result<Certificate> {
    let mut acc = BTreeMap::new();
    for s in cert.instances() {
        let inst = &s.instance;
        accumulate(
            cert.n(),
            s.sign,
            inst.kind(),
            inst.forgotten().to_vec(),
            inst.target_size(),
            &mut acc,
        )?;
    }
    let mut instances = Vec::new();
    for ((kind, forgotten), coefficient) in acc {
        for _ in 0..coefficient.unsigned_abs() {
            instances.push(SignedInstance {
                sign: coefficient.signum(),
                instance: EquationInstance::with_kind(kind, cert.n(), &forgotten)?,
            });
        }
    }
    Ok(Certificate::new(cert.n(), cert.case(), instances))
}

/// For each product symbol arising in some `E_{2J}`, `J ⊆ {1..k}` (including
/// `J = ∅`), the number of `J` of each size `l` whose polygon has the symbol
/// as a chord. Index `l` of the vector is `|J|`.
pub fn inclusion_exclusion_columns(n: usize) -> Result<BTreeMap<ProductSymbol, Vec<u64>>> {
    if n < 7 {
        return Err(Error::WrongCase {
            n,
            expected: "inclusion–exclusion (n >= 7)",
        });
    }
    let k = n / 2;
    let mut columns: BTreeMap<ProductSymbol, Vec<u64>> = BTreeMap::new();
    for j in subsets_by_size(k) {
        let l = j.len();
        for term in EquationInstance::pullback(n, &doubled(&j))?.terms {
            columns
                .entry(term.symbol)
                .or_insert_with(|| alloc::vec![0; k + 1])[l] += 1;
        }
    }
    Ok(columns)
}

/// `sum_l (-1)^l counts[l]`.
pub fn alternating_sum(counts: &[u64]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(l, &c)| if l % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// Sampling and tolerance settings for the numeric checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericOptions {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub margin: f64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        Self {
            samples: 100,
            seed: 0,
            tol: 1e-10,
            margin: 1e-3,
        }
    }
}

/// `sum_{chords} L(u) - (n-3)(n-2)/2 L(1)`.
pub fn eqn_residual(m: &CoordMap) -> Result<f64> {
    let sum: f64 = m.iter().map(|(_, u)| rogers_l(u)).sum::<Result<f64>>()?;
    Ok(sum - rational_to_f64(eq_constant(m.n())) * L1)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EqnReport {
    pub n: usize,
    pub constant: Rational,
    pub max_residual: f64,
    /// Offset from the base seed of the sample with the largest residual.
    pub worst_sample: usize,
    pub max_chord_residual: f64,
    pub worst_chord_sample: usize,
}

impl EqnReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.max_residual <= tol && self.max_chord_residual <= tol
    }
}

fn sample_coords(n: usize, opts: &NumericOptions, offset: usize) -> Result<CoordMap> {
    dihedral_coords(&sample_cell(n, opts.seed + offset as u64, opts.margin)?)
}

/// Max over samples of `|sum L(u_{i,j}) - (n-3)(n-2)/2 L(1)|`, plus the
/// worst crossing-relation residual on the same samples.
pub fn verify_eqn(n: usize, opts: &NumericOptions) -> Result<EqnReport> {
    if n < 4 {
        return Err(Error::InvalidSize(n));
    }
    let chords = enumerate_chords(n)?;
    let mut report = EqnReport {
        n,
        constant: eq_constant(n),
        max_residual: 0.0,
        worst_sample: 0,
        max_chord_residual: 0.0,
        worst_chord_sample: 0,
    };
    for offset in 0..opts.samples {
        let m = sample_coords(n, opts, offset)?;
        let r = eqn_residual(&m)?.abs();
        if r > report.max_residual {
            report.max_residual = r;
            report.worst_sample = offset;
        }
        for c in &chords {
            let r = check_chord_relation(c, &m).abs();
            if r > report.max_chord_residual {
                report.max_chord_residual = r;
                report.worst_chord_sample = offset;
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub structural: StructuralReport,
    /// Worst `|sum L - constant L(1)|` over instances and samples.
    pub max_instance_residual: f64,
    pub worst_instance: usize,
    /// Worst `|sum_{chords} L(u) - sum sign * (sum L over the instance)|`.
    pub max_combination_residual: f64,
    pub worst_sample: usize,
    pub tol: f64,
}

impl CertificateReport {
    pub fn numeric_ok(&self) -> bool {
        self.max_instance_residual <= self.tol && self.max_combination_residual <= self.tol
    }

    pub fn passed(&self) -> bool {
        self.structural.passed() && self.numeric_ok()
    }
}

/// Exact structural check followed by a numeric re-check of every instance
/// on sampled cell points.
pub fn verify_certificate(cert: &Certificate, opts: &NumericOptions) -> Result<CertificateReport> {
    let mut report = CertificateReport {
        structural: cert.structural_check()?,
        max_instance_residual: 0.0,
        worst_instance: 0,
        max_combination_residual: 0.0,
        worst_sample: 0,
        tol: opts.tol,
    };
    for offset in 0..opts.samples {
        let m = sample_coords(cert.n(), opts, offset)?;
        let lhs: f64 = m.iter().map(|(_, u)| rogers_l(u)).sum::<Result<f64>>()?;
        let mut rhs = 0.0;
        for (t, s) in cert.instances().iter().enumerate() {
            let sum = s.instance.l_sum(&m)?;
            let r = (sum - rational_to_f64(s.instance.constant()) * L1).abs();
            if r > report.max_instance_residual {
                report.max_instance_residual = r;
                report.worst_instance = t;
            }
            rhs += s.sign as f64 * sum;
        }
        let r = (lhs - rhs).abs();
        if r > report.max_combination_residual {
            report.max_combination_residual = r;
            report.worst_sample = offset;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec;

    fn ch(n: usize, i: usize, j: usize) -> Chord {
        Chord::new(n, i, j).unwrap()
    }

    fn sym(n: usize, pairs: &[(usize, usize)]) -> ProductSymbol {
        ProductSymbol::new(pairs.iter().map(|&(i, j)| ch(n, i, j)).collect())
    }

    #[test]
    fn constants() {
        assert_eq!(eq_constant(4), Rational::from(1));
        assert_eq!(eq_constant(5), Rational::from(3));
        assert_eq!(eq_constant(6), Rational::from(6));
        assert_eq!(eq_constant(9), Rational::from(21));
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn hexagon_pullback_along_two() {
        let e = EquationInstance::pullback(6, &[2]).unwrap();
        assert_eq!(e.target_size(), 5);
        assert_eq!(e.constant(), Rational::from(3));
        let expected: FormalSum<ProductSymbol> = [
            sym(6, &[(3, 5)]),
            sym(6, &[(4, 6)]),
            sym(6, &[(1, 5), (2, 5)]),
            sym(6, &[(1, 4), (2, 4)]),
            sym(6, &[(3, 6)]),
        ]
        .into_iter()
        .map(|s| (s, 1))
        .collect();
        assert_eq!(expand_instance(&e), expected);
    }

    #[test]
    fn empty_forget_set_is_the_base() {
        for n in 4..9 {
            let base = EquationInstance::base(n).unwrap();
            assert_eq!(
                base.expand(),
                EquationInstance::pullback(n, &[]).unwrap().expand()
            );
            assert!(base.terms().iter().all(|t| t.symbol.is_elementary()));
        }
    }

    #[test]
    fn reflection_requires_a_square() {
        assert!(EquationInstance::reflection(6, &[2]).is_err());
        let r = EquationInstance::reflection(6, &[2, 6]).unwrap();
        let symbols: Vec<ProductSymbol> = r.terms().iter().map(|t| t.symbol.clone()).collect();
        assert_eq!(
            symbols,
            vec![sym(6, &[(1, 4), (2, 4)]), sym(6, &[(3, 5), (3, 6)])]
        );
    }

    #[test]
    fn six_point_certificate() {
        let cert = build_certificate_six();
        let pentagon_constants: Rational = cert
            .instances()
            .iter()
            .filter(|s| s.instance.kind() == InstanceKind::Pullback)
            .map(|s| s.instance.constant())
            .sum();
        assert_eq!(pentagon_constants, Rational::from(9));
        assert_eq!(cert.constant_total(), Rational::from(6));
        assert!(cert.structural_check().unwrap().passed());
    }

    #[test]
    fn wrong_cases() {
        assert!(matches!(
            build_certificate_even(7),
            Err(Error::WrongCase { .. })
        ));
        assert!(matches!(
            build_certificate_even(6),
            Err(Error::WrongCase { .. })
        ));
        assert!(matches!(
            build_certificate_odd(8),
            Err(Error::WrongCase { .. })
        ));
        assert!(matches!(
            build_certificate_odd(5),
            Err(Error::WrongCase { .. })
        ));
        assert!(certificate(3).is_err());
    }

    #[test]
    fn trivial_certificates() {
        for n in [4, 5] {
            let cert = certificate(n).unwrap();
            assert_eq!(cert.instances().len(), 1);
            assert!(cert.structural_check().unwrap().passed());
        }
    }

    #[test]
    fn tampered_certificate_names_a_symbol() {
        let cert = build_certificate_even(8).unwrap();
        let mut instances = cert.instances().to_vec();
        instances[0].sign = -instances[0].sign;
        let bad = Certificate::new(8, CertificateCase::Even, instances);
        let report = bad.structural_check().unwrap();
        assert!(!report.expansion_ok);
        assert!(!report.discrepancies.is_empty());
        assert!(!report.passed());
    }

    #[test]
    fn flattening_leaves_only_small_polygons() {
        for n in 6..=11 {
            let flat = flatten(&certificate(n).unwrap()).unwrap();
            assert!(flat.max_target_size() <= 5, "n={n}");
            assert!(flat.structural_check().unwrap().passed(), "n={n}");
        }
    }
}
