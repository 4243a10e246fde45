//! Exact minimum distance over `C(S) \ S` under the Hamming, effective and
//! blockwise metrics.
//!
//! Two engines are available:
//!
//! * **centralizer enumeration** walks all `2^(n+k)` elements of the
//!   centralizer in Gray-code order, using the stabilizer generators and the
//!   logical operators as a basis. An element lies in `S` exactly when its
//!   logical coefficients vanish, so no membership test is needed.
//! * **weight enumeration** visits every Pauli of metric weight `w = 1, 2, ...`
//!   by depth-first search over sites, tracking the syndrome incrementally, and
//!   stops at the first shell containing an undetectable element.
//!
//! Both engines return the smallest witness of minimum weight in the order of
//! the `Ord` impl on [`PauliString`], independent of thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{words_for, BitVec};
use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliString};
use crate::stabilizer::StabilizerCode;

/// Default threshold on `n + k` for full centralizer enumeration.
pub const DEFAULT_CENTRALIZER_CAP: usize = 26;

/// Default bound on the number of candidates the weight enumeration may visit
/// when no budget is given.
pub const DEFAULT_MAX_CANDIDATES: f64 = 2.0e9;

/// Widest block the weight enumeration accepts under the block metric.
pub const MAX_SHELL_BLOCK_WIDTH: usize = 6;

/// Contiguous block layout: block `j` covers `offset_j .. offset_j + widths[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    widths: Vec<usize>,
}

impl BlockLayout {
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        if widths.is_empty() || widths.contains(&0) {
            return Err(Error::BlockMismatch("block widths must be positive".into()));
        }
        Ok(BlockLayout { widths })
    }

    pub fn uniform(blocks: usize, width: usize) -> Result<Self> {
        BlockLayout::new(vec![width; blocks])
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn n(&self) -> usize {
        self.widths.iter().sum()
    }

    /// `(offset, width)` of every block.
    pub fn ranges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.widths.iter().scan(0, |off, &w| {
            let start = *off;
            *off += w;
            Some((start, w))
        })
    }

    /// Number of blocks on which `p` acts non-trivially.
    pub fn block_weight(&self, p: &PauliString) -> usize {
        self.ranges()
            .filter(|&(off, w)| (off..off + w).any(|i| p.get(i) != Letter::I))
            .count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Metric {
    Hamming,
    Effective,
    Block(BlockLayout),
}

impl Metric {
    pub fn kind(&self) -> MetricKind {
        match self {
            Metric::Hamming => MetricKind::Hamming,
            Metric::Effective => MetricKind::Effective,
            Metric::Block(_) => MetricKind::Block,
        }
    }

    pub fn weight(&self, p: &PauliString) -> usize {
        match self {
            Metric::Hamming => p.hamming_weight(),
            Metric::Effective => p.effective_weight(),
            Metric::Block(layout) => layout.block_weight(p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricKind {
    Hamming,
    Effective,
    Block,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    WeightEnumeration,
    CentralizerEnumeration,
}

impl std::fmt::Display for MetricKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MetricKind::Hamming => "hamming",
            MetricKind::Effective => "effective",
            MetricKind::Block => "block",
        })
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::WeightEnumeration => "weight enumeration",
            Method::CentralizerEnumeration => "centralizer enumeration",
        })
    }
}

/// A minimum-weight undetectable operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub metric: MetricKind,
    pub value: usize,
    pub witness: PauliString,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DistanceOutcome {
    Exact(DistanceReport),
    /// No undetectable operator has weight `<= budget`.
    GreaterThanBudget { metric: MetricKind, budget: usize, method: Method },
}

impl DistanceOutcome {
    pub fn exact(&self) -> Option<&DistanceReport> {
        match self {
            DistanceOutcome::Exact(r) => Some(r),
            DistanceOutcome::GreaterThanBudget { .. } => None,
        }
    }

    pub fn value(&self) -> Option<usize> {
        self.exact().map(|r| r.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub centralizer_cap: usize,
    pub max_candidates: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            centralizer_cap: DEFAULT_CENTRALIZER_CAP,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Centralizer,
    WeightShells,
}

/// Restricts the search to a Pauli type, e.g. for CSS X/Z distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Restriction {
    #[default]
    Any,
    XType,
    ZType,
}

impl Restriction {
    fn letters(self) -> &'static [Letter] {
        match self {
            Restriction::Any => &[Letter::X, Letter::Y, Letter::Z],
            Restriction::XType => &[Letter::X],
            Restriction::ZType => &[Letter::Z],
        }
    }

    fn admits_words(self, x: u64, z: u64) -> bool {
        match self {
            Restriction::Any => true,
            Restriction::XType => z == 0,
            Restriction::ZType => x == 0,
        }
    }
}

/// Minimum distance with automatic strategy selection.
pub fn min_distance(
    code: &StabilizerCode,
    metric: &Metric,
    budget: Option<usize>,
    config: &SearchConfig,
) -> Result<DistanceOutcome> {
    min_distance_with(code, metric, budget, config, Strategy::Auto, Restriction::Any)
}

pub fn min_distance_with(
    code: &StabilizerCode,
    metric: &Metric,
    budget: Option<usize>,
    config: &SearchConfig,
    strategy: Strategy,
    restriction: Restriction,
) -> Result<DistanceOutcome> {
    if code.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    if let Metric::Block(layout) = metric {
        if layout.n() != code.n() {
            return Err(Error::BlockMismatch(format!(
                "layout covers {} qubits, code has {}",
                layout.n(),
                code.n()
            )));
        }
    }
    let full_ok = code.n() <= 64 && code.n() + code.k() <= config.centralizer_cap;
    let use_full = match strategy {
        Strategy::Auto => full_ok,
        Strategy::Centralizer => {
            if code.n() > 64 {
                return Err(Error::SearchTooLarge(
                    "centralizer enumeration supports at most 64 qubits".into(),
                ));
            }
            true
        }
        Strategy::WeightShells => false,
    };
    let kind = metric.kind();
    if use_full {
        let method = Method::CentralizerEnumeration;
        let found = centralizer_scan(code, metric, restriction);
        let Some((value, witness)) = found else {
            return Err(Error::InvalidArgument("no logical operator of the requested type".into()));
        };
        if budget.is_some_and(|b| value > b) {
            return Ok(DistanceOutcome::GreaterThanBudget { metric: kind, budget: budget.unwrap(), method });
        }
        return Ok(DistanceOutcome::Exact(DistanceReport { metric: kind, value, witness, method }));
    }
    shell_search(code, metric, budget, config, restriction)
}

/// Minimum Hamming weights of X-type and Z-type logical operators.
pub fn css_logical_weights(code: &StabilizerCode, config: &SearchConfig) -> Result<(usize, usize)> {
    let get = |r| -> Result<usize> {
        min_distance_with(code, &Metric::Hamming, None, config, Strategy::Auto, r)?
            .value()
            .ok_or_else(|| Error::InvalidArgument("unbounded".into()))
    };
    Ok((get(Restriction::XType)?, get(Restriction::ZType)?))
}

fn word_key(x: u64, z: u64) -> u128 {
    ((x as u128) << 64) | z as u128
}

fn to_word(p: &PauliString) -> (u64, u64) {
    (p.x_bits().words().first().copied().unwrap_or(0), p.z_bits().words().first().copied().unwrap_or(0))
}

fn from_word(n: usize, x: u64, z: u64) -> PauliString {
    PauliString::from_bits(BitVec::from_words(n, vec![x]), BitVec::from_words(n, vec![z]))
        .expect("equal lengths")
}

/// Full Gray-code walk over the centralizer; requires `n <= 64`.
fn centralizer_scan(
    code: &StabilizerCode,
    metric: &Metric,
    restriction: Restriction,
) -> Option<(usize, PauliString)> {
    let n = code.n();
    let logicals = match code.logicals() {
        Some(l) => l.clone(),
        None => code.compute_logicals(),
    };
    // logical basis vectors occupy the low coefficient bits
    let basis: Vec<(u64, u64)> = logicals
        .iter()
        .map(to_word)
        .chain(code.generators().iter().map(to_word))
        .collect();
    let dim = basis.len();
    let logical_mask: u64 = (1u64 << (2 * logicals.len())) - 1;

    let block_masks: Vec<u64> = match metric {
        Metric::Block(layout) => layout
            .ranges()
            .map(|(off, w)| (((1u128 << w) - 1) << off) as u64)
            .collect(),
        _ => Vec::new(),
    };
    let weight = |x: u64, z: u64| -> usize {
        match metric {
            Metric::Hamming => (x | z).count_ones() as usize,
            Metric::Effective => (x.count_ones() + 2 * (z & !x).count_ones()) as usize,
            Metric::Block(_) => block_masks.iter().filter(|&&m| (x | z) & m != 0).count(),
        }
    };

    let hi_bits = dim.saturating_sub(12).min(10);
    let lo_bits = dim - hi_bits;
    let best = (0u64..1u64 << hi_bits)
        .into_par_iter()
        .filter_map(|task| {
            let start = task << lo_bits;
            let gray = start ^ (start >> 1);
            let (mut x, mut z) = (0u64, 0u64);
            for (j, &(bx, bz)) in basis.iter().enumerate() {
                if (gray >> j) & 1 == 1 {
                    x ^= bx;
                    z ^= bz;
                }
            }
            let mut best: Option<(usize, u128)> = None;
            for i in start..start + (1u64 << lo_bits) {
                if i != start {
                    let (bx, bz) = basis[i.trailing_zeros() as usize];
                    x ^= bx;
                    z ^= bz;
                }
                let g = i ^ (i >> 1);
                if g & logical_mask == 0 || !restriction.admits_words(x, z) {
                    continue;
                }
                let cand = (weight(x, z), word_key(x, z));
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
            best
        })
        .min()?;
    let (value, key) = best;
    let x = (key >> 64) as u64;
    let z = key as u64;
    Some((value, from_word(n, x, z)))
}

struct SiteOption {
    cost: usize,
    syndrome: Vec<u64>,
    ops: Vec<(usize, Letter)>,
}

struct ShellSearch<'a> {
    code: &'a StabilizerCode,
    sites: Vec<Vec<SiteOption>>,
    max_cost: usize,
    syndrome_words: usize,
}

impl<'a> ShellSearch<'a> {
    fn new(code: &'a StabilizerCode, metric: &Metric, restriction: Restriction) -> Result<Self> {
        let n = code.n();
        let gens = code.generators();
        let syndrome_words = words_for(gens.len()).max(1);
        let single = |q: usize, letter: Letter| -> Vec<u64> {
            let probe = PauliString::single(n, q, letter);
            let mut s = vec![0u64; syndrome_words];
            for (g, gen) in gens.iter().enumerate() {
                if !gen.commutes_with(&probe) {
                    s[g / 64] |= 1 << (g % 64);
                }
            }
            s
        };
        let letters = restriction.letters();
        let sites: Vec<Vec<SiteOption>> = match metric {
            Metric::Hamming | Metric::Effective => (0..n)
                .map(|q| {
                    letters
                        .iter()
                        .map(|&l| SiteOption {
                            cost: if l == Letter::Z && *metric == Metric::Effective { 2 } else { 1 },
                            syndrome: single(q, l),
                            ops: vec![(q, l)],
                        })
                        .collect()
                })
                .collect(),
            Metric::Block(layout) => {
                let mut sites = Vec::new();
                for (off, w) in layout.ranges() {
                    if w > MAX_SHELL_BLOCK_WIDTH {
                        return Err(Error::SearchTooLarge(format!(
                            "block width {w} exceeds {MAX_SHELL_BLOCK_WIDTH} for weight enumeration"
                        )));
                    }
                    let base = letters.len() + 1;
                    let mut opts = Vec::new();
                    for code_word in 1..base.pow(w as u32) {
                        let mut rest = code_word;
                        let mut ops = Vec::new();
                        let mut syndrome = vec![0u64; syndrome_words];
                        for q in off..off + w {
                            let digit = rest % base;
                            rest /= base;
                            if digit > 0 {
                                let l = letters[digit - 1];
                                for (a, b) in syndrome.iter_mut().zip(single(q, l)) {
                                    *a ^= b;
                                }
                                ops.push((q, l));
                            }
                        }
                        opts.push(SiteOption { cost: 1, syndrome, ops });
                    }
                    sites.push(opts);
                }
                sites
            }
        };
        let max_cost = sites
            .iter()
            .flat_map(|s| s.iter().map(|o| o.cost))
            .max()
            .unwrap_or(1);
        Ok(ShellSearch { code, sites, max_cost, syndrome_words })
    }

    /// Number of operators of exact metric weight `w`, for `w` up to `max_w`.
    fn shell_sizes(&self, max_w: usize) -> Vec<f64> {
        let mut poly = vec![0.0f64; max_w + 1];
        poly[0] = 1.0;
        for site in &self.sites {
            let mut next = poly.clone();
            for o in site {
                for w in 0..=max_w.saturating_sub(o.cost) {
                    next[w + o.cost] += poly[w];
                }
            }
            poly = next;
        }
        poly
    }

    fn max_weight(&self) -> usize {
        self.sites
            .iter()
            .map(|s| s.iter().map(|o| o.cost).max().unwrap_or(0))
            .sum()
    }

    /// Smallest undetectable operator of weight exactly `w`.
    fn shell(&self, w: usize) -> Option<PauliString> {
        let starts: Vec<(usize, usize)> = self
            .sites
            .iter()
            .enumerate()
            .flat_map(|(s, opts)| (0..opts.len()).map(move |o| (s, o)))
            .filter(|&(s, o)| self.sites[s][o].cost <= w)
            .collect();
        starts
            .into_par_iter()
            .filter_map(|(s, o)| {
                let opt = &self.sites[s][o];
                let mut syndrome = opt.syndrome.clone();
                let mut chosen = vec![(s, o)];
                let mut best = None;
                self.dfs(s + 1, w - opt.cost, &mut syndrome, &mut chosen, &mut best);
                best
            })
            .min()
    }

    fn dfs(
        &self,
        from: usize,
        remaining: usize,
        syndrome: &mut Vec<u64>,
        chosen: &mut Vec<(usize, usize)>,
        best: &mut Option<PauliString>,
    ) {
        if remaining == 0 {
            if syndrome.iter().all(|&w| w == 0) {
                let mut p = PauliString::identity(self.code.n());
                for &(s, o) in chosen.iter() {
                    for &(q, l) in &self.sites[s][o].ops {
                        p.set(q, l);
                    }
                }
                if !self.code.contains_symplectic(&p.to_symplectic())
                    && best.as_ref().is_none_or(|b| p < *b)
                {
                    *best = Some(p);
                }
            }
            return;
        }
        if (self.sites.len() - from) * self.max_cost < remaining {
            return;
        }
        for s in from..self.sites.len() {
            for (o, opt) in self.sites[s].iter().enumerate() {
                if opt.cost > remaining {
                    continue;
                }
                xor_into(syndrome, &opt.syndrome);
                chosen.push((s, o));
                self.dfs(s + 1, remaining - opt.cost, syndrome, chosen, best);
                chosen.pop();
                xor_into(syndrome, &opt.syndrome);
            }
        }
        debug_assert_eq!(syndrome.len(), self.syndrome_words);
    }
}

fn xor_into(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= *y;
    }
}

fn shell_search(
    code: &StabilizerCode,
    metric: &Metric,
    budget: Option<usize>,
    config: &SearchConfig,
    restriction: Restriction,
) -> Result<DistanceOutcome> {
    let search = ShellSearch::new(code, metric, restriction)?;
    let method = Method::WeightEnumeration;
    let kind = metric.kind();
    let top = search.max_weight();
    let limit = budget.map_or(top, |b| b.min(top));
    let sizes = search.shell_sizes(top);
    let mut visited = 0.0;
    for (w, size) in sizes.iter().enumerate().take(limit + 1).skip(1) {
        visited += size;
        if budget.is_none() && visited > config.max_candidates {
            return Err(Error::SearchTooLarge(format!(
                "weight-{w} shell brings the candidate count to {visited:.3e}, above the limit of {:.3e}; \
                 give a budget or raise the centralizer cap",
                config.max_candidates
            )));
        }
        if let Some(witness) = search.shell(w) {
            return Ok(DistanceOutcome::Exact(DistanceReport { metric: kind, value: w, witness, method }));
        }
    }
    match budget {
        Some(b) => Ok(DistanceOutcome::GreaterThanBudget { metric: kind, budget: b, method }),
        None => Err(Error::InvalidArgument("no logical operator of the requested type".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;

    fn code(n: usize, gens: &[&str]) -> StabilizerCode {
        StabilizerCode::new(n, gens.iter().map(|s| parse_pauli(s).unwrap()).collect()).unwrap()
    }

    fn both(c: &StabilizerCode, m: &Metric) -> (DistanceReport, DistanceReport) {
        let cfg = SearchConfig::default();
        let a = min_distance_with(c, m, None, &cfg, Strategy::Centralizer, Restriction::Any).unwrap();
        let b = min_distance_with(c, m, None, &cfg, Strategy::WeightShells, Restriction::Any).unwrap();
        (a.exact().unwrap().clone(), b.exact().unwrap().clone())
    }

    #[test]
    fn five_one_three_hamming() {
        let c = code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let (a, b) = both(&c, &Metric::Hamming);
        assert_eq!(a.value, 3);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.method, Method::CentralizerEnumeration);
        assert_eq!(b.method, Method::WeightEnumeration);
        assert!(c.in_centralizer(&a.witness).unwrap());
        assert!(!c.in_stabilizer(&a.witness).unwrap());
    }

    #[test]
    fn q3_effective_and_hamming() {
        let c = code(3, &["ZZZ"]);
        let (a, b) = both(&c, &Metric::Effective);
        assert_eq!(a.value, 2);
        assert_eq!(a, DistanceReport { method: Method::CentralizerEnumeration, ..b });
        let (h, _) = both(&c, &Metric::Hamming);
        assert_eq!(h.value, 1);
        assert_eq!(h.witness, parse_pauli("ZII").unwrap());
    }

    #[test]
    fn zero_k_is_an_error() {
        let c = code(1, &["Z"]);
        assert_eq!(
            min_distance(&c, &Metric::Hamming, None, &SearchConfig::default()),
            Err(Error::NoLogicalQubits)
        );
    }

    #[test]
    fn budget_reporting() {
        let c = code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let cfg = SearchConfig::default();
        for strategy in [Strategy::Centralizer, Strategy::WeightShells] {
            let o = min_distance_with(&c, &Metric::Hamming, Some(2), &cfg, strategy, Restriction::Any)
                .unwrap();
            assert!(matches!(o, DistanceOutcome::GreaterThanBudget { budget: 2, .. }));
            let o = min_distance_with(&c, &Metric::Hamming, Some(3), &cfg, strategy, Restriction::Any)
                .unwrap();
            assert_eq!(o.value(), Some(3));
        }
    }

    #[test]
    fn candidate_limit_without_budget() {
        let c = code(5, &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let cfg = SearchConfig { centralizer_cap: 0, max_candidates: 10.0 };
        assert!(matches!(
            min_distance(&c, &Metric::Hamming, None, &cfg),
            Err(Error::SearchTooLarge(_))
        ));
        assert!(min_distance(&c, &Metric::Hamming, Some(3), &cfg).is_ok());
    }

    #[test]
    fn block_metric_matches_hamming_for_unit_blocks() {
        let c = code(4, &["XXXX", "ZZZZ"]);
        let layout = BlockLayout::uniform(4, 1).unwrap();
        let (a, b) = both(&c, &Metric::Block(layout));
        assert_eq!(a.value, 2);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn block_metric_groups_qubits() {
        // Q_2 blocks of the two-block code: logical ZI ZI style operators touch one block
        let c = code(4, &["ZZII", "IIZZ", "XXXX"]);
        let layout = BlockLayout::uniform(2, 2).unwrap();
        let (a, b) = both(&c, &Metric::Block(layout.clone()));
        assert_eq!(a.value, b.value);
        assert_eq!(layout.block_weight(&a.witness), a.value);
    }

    #[test]
    fn css_restricted_weights() {
        let c = code(4, &["XXXX", "ZZZZ"]);
        assert_eq!(css_logical_weights(&c, &SearchConfig::default()).unwrap(), (2, 2));
    }

    #[test]
    fn layout_mismatch_rejected() {
        let c = code(4, &["XXXX", "ZZZZ"]);
        let layout = BlockLayout::uniform(3, 1).unwrap();
        assert!(matches!(
            min_distance(&c, &Metric::Block(layout), None, &SearchConfig::default()),
            Err(Error::BlockMismatch(_))
        ));
    }
}
