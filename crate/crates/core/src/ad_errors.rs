//! Amplitude-damping Pauli error sets and t-code certification.
//!
//! `A^{1}(n)` holds the identity, every single-qubit `X`, `Y`, `Z`, and every
//! operator with exactly two non-identity factors drawn from `{X, Y}` on
//! distinct qubits (both orderings, so four per pair). `A^{t}(n)` is the set
//! of products of `t` elements of `A^{1}(n)` modulo phase.

use std::collections::HashSet;
use std::ops::Deref;

use serde::Serialize;

use crate::distance::{min_distance, DistanceOutcome, Metric, SearchConfig};
use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliString};
use crate::stabilizer::{Detection, StabilizerCode};

/// A deduplicated set of `n`-qubit Paulis, kept sorted in symplectic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorSet {
    n: usize,
    elements: Vec<PauliString>,
    label: String,
}

impl ErrorSet {
    pub fn new(n: usize, elements: impl IntoIterator<Item = PauliString>, label: impl Into<String>) -> Result<Self> {
        let mut elements: Vec<PauliString> = elements.into_iter().collect();
        if let Some(bad) = elements.iter().find(|p| p.n() != n) {
            return Err(Error::LengthMismatch { expected: n, found: bad.n() });
        }
        elements.sort();
        elements.dedup();
        Ok(ErrorSet { n, elements, label: label.into() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> &[PauliString] {
        &self.elements
    }

    pub fn contains(&self, p: &PauliString) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn max_effective_weight(&self) -> usize {
        self.elements.iter().map(PauliString::effective_weight).max().unwrap_or(0)
    }
}

impl Deref for ErrorSet {
    type Target = [PauliString];

    fn deref(&self) -> &[PauliString] {
        &self.elements
    }
}

/// `|A^{1}(n)| = 1 + 3n + 4 C(n, 2)`.
pub fn a1_size(n: usize) -> usize {
    1 + 3 * n + 2 * n * n.saturating_sub(1)
}

pub fn gen_a1(n: usize) -> Result<ErrorSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("A^1 needs at least one qubit".into()));
    }
    let mut out = vec![PauliString::identity(n)];
    for i in 0..n {
        for l in [Letter::X, Letter::Y, Letter::Z] {
            out.push(PauliString::single(n, i, l));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for a in [Letter::X, Letter::Y] {
                for b in [Letter::X, Letter::Y] {
                    let mut p = PauliString::identity(n);
                    p.set(i, a);
                    p.set(j, b);
                    out.push(p);
                }
            }
        }
    }
    ErrorSet::new(n, out, format!("A^1({n})"))
}

/// Iterated set product `A^{1} * ... * A^{1}` (`t` factors) with deduplication.
pub fn gen_at(n: usize, t: usize) -> Result<ErrorSet> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    let a1 = gen_a1(n)?;
    let mut current: HashSet<PauliString> = a1.iter().cloned().collect();
    for _ in 1..t {
        let mut next = HashSet::with_capacity(current.len() * 4);
        for a in &current {
            for b in a1.iter() {
                next.insert(a.mul(b));
            }
        }
        current = next;
    }
    ErrorSet::new(n, current, format!("A^{t}({n})"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertifyMode {
    /// Materialize `A^{t}(n)` and test every element.
    Direct,
    /// Show that the effective distance exceeds `2t`.
    ByDistance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    Exhaustive { label: String, checked: usize },
    Distance(DistanceOutcome),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub mode: CertifyMode,
    pub t: usize,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub mode: CertifyMode,
    pub t: usize,
    pub witness: PauliString,
    pub effective_weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Certification {
    Certified(Certificate),
    Failed(Counterexample),
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified(_))
    }
}

/// Decides whether `code` detects `A^{t}` (direct) or has effective distance
/// at least `2t + 1` (by distance). The latter implies the former.
pub fn certify_t_code(
    code: &StabilizerCode,
    t: usize,
    mode: CertifyMode,
    config: &SearchConfig,
) -> Result<Certification> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    match mode {
        CertifyMode::Direct => {
            let errors = gen_at(code.n(), t)?;
            Ok(match code.detects_set(&errors)? {
                Detection::AllDetected { checked } => Certification::Certified(Certificate {
                    mode,
                    t,
                    evidence: Evidence::Exhaustive { label: errors.label().to_string(), checked },
                }),
                Detection::Undetected(witness) => Certification::Failed(Counterexample {
                    mode,
                    t,
                    effective_weight: witness.effective_weight(),
                    witness,
                }),
            })
        }
        CertifyMode::ByDistance => {
            let outcome = min_distance(code, &Metric::Effective, Some(2 * t), config)?;
            Ok(match outcome {
                DistanceOutcome::Exact(report) => Certification::Failed(Counterexample {
                    mode,
                    t,
                    effective_weight: report.value,
                    witness: report.witness,
                }),
                gt @ DistanceOutcome::GreaterThanBudget { .. } => {
                    Certification::Certified(Certificate { mode, t, evidence: Evidence::Distance(gt) })
                }
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{parse_pauli, render_pauli};

    /// Filters all 4^n Paulis by the defining description of A^1.
    fn a1_oracle(n: usize) -> Vec<String> {
        let mut out = Vec::new();
        for code in 0..4usize.pow(n as u32) {
            let s: String = (0..n).map(|i| ['I', 'X', 'Y', 'Z'][(code >> (2 * i)) & 3]).collect();
            let support: Vec<char> = s.chars().filter(|&c| c != 'I').collect();
            let ok = match support.len() {
                0 | 1 => true,
                2 => support.iter().all(|&c| c == 'X' || c == 'Y'),
                _ => false,
            };
            if ok {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn a1_small_sizes() {
        assert_eq!(gen_a1(1).unwrap().len(), 4);
        assert_eq!(gen_a1(2).unwrap().len(), 11);
        assert_eq!(gen_a1(5).unwrap().len(), 56);
        assert!(gen_a1(0).is_err());
    }

    #[test]
    fn a1_matches_enumeration_oracle() {
        for n in 1..=5 {
            let mut got: Vec<String> = gen_a1(n).unwrap().iter().map(render_pauli).collect();
            got.sort();
            assert_eq!(got, a1_oracle(n), "n={n}");
        }
    }

    #[test]
    fn at_basics() {
        assert_eq!(gen_at(4, 1).unwrap().elements(), gen_a1(4).unwrap().elements());
        let a2 = gen_at(4, 2).unwrap();
        assert!(a2.contains(&parse_pauli("XYIZ").unwrap()));
        assert!(a2.contains(&PauliString::identity(4)));
        assert!(gen_at(6, 3).unwrap().max_effective_weight() <= 6);
        assert!(gen_at(3, 0).is_err());
    }

    #[test]
    fn q2_is_not_a_one_code() {
        let q2 = StabilizerCode::new(2, vec![parse_pauli("ZZ").unwrap()]).unwrap();
        let c = certify_t_code(&q2, 1, CertifyMode::Direct, &SearchConfig::default()).unwrap();
        match c {
            Certification::Failed(ce) => assert_eq!(ce.witness, parse_pauli("ZI").unwrap()),
            other => panic!("unexpected {other:?}"),
        }
    }
}
