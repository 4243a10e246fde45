//! Concatenation of an asymmetric inner code with a block (qudit) outer code.
//!
//! The outer code is given in binary-expanded form: a qubit stabilizer code on
//! `n_blocks * block_size` qubits whose blocks stand for qudits of dimension
//! `2^block_size`, together with its blockwise distance `delta`. Each block is
//! re-encoded into the inner code by replacing its `X_j`/`Z_j` factors with
//! the inner logical operators; the inner stabilizer is then added on every
//! encoded block.

use serde::{Deserialize, Serialize};

use crate::distance::{min_distance, BlockLayout, Metric, SearchConfig};
use crate::error::{Error, Result};
use crate::params::{CodeParams, Provenance};
use crate::pauli::{Letter, PauliString};
use crate::stabilizer::{Logicals, StabilizerCode};

/// `Q_r = [[r, r-1]]`, stabilized by `Z^{⊗r}`, with logicals
/// `X̄_j = X_j X_r` and `Z̄_j = Z_j`.
pub fn make_qr(r: usize) -> Result<StabilizerCode> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("Q_r needs r >= 2, got {r}")));
    }
    let stab = {
        let mut p = PauliString::identity(r);
        for i in 0..r {
            p.set(i, Letter::Z);
        }
        p
    };
    let x = (0..r - 1)
        .map(|j| {
            let mut p = PauliString::single(r, j, Letter::X);
            p.set(r - 1, Letter::X);
            p
        })
        .collect();
    let z = (0..r - 1).map(|j| PauliString::single(r, j, Letter::Z)).collect();
    StabilizerCode::validate(r, vec![stab], Some(Logicals { x, z }))
}

/// Image of a `k1`-qubit block operator under the inner encoding,
/// `∏_j X̄_j^{x_j} Z̄_j^{z_j}`.
pub fn inner_image(inner: &StabilizerCode, block: &PauliString) -> Result<PauliString> {
    let logicals = inner.logicals().ok_or(Error::MissingLogicals)?;
    if block.n() != logicals.len() {
        return Err(Error::LengthMismatch { expected: logicals.len(), found: block.n() });
    }
    let mut out = PauliString::identity(inner.n());
    for j in 0..block.n() {
        let (x, z) = block.get(j).bits();
        if x {
            out.mul_assign(&logicals.x[j]);
        }
        if z {
            out.mul_assign(&logicals.z[j]);
        }
    }
    Ok(out)
}

/// An outer code in binary-expanded block form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCode {
    n_blocks: usize,
    block_size: usize,
    code: StabilizerCode,
    delta: usize,
}

impl BlockCode {
    pub fn new(code: StabilizerCode, n_blocks: usize, block_size: usize, delta: usize) -> Result<Self> {
        if n_blocks == 0 || block_size == 0 || delta == 0 {
            return Err(Error::BlockMismatch("blocks, block size and delta must be positive".into()));
        }
        if code.n() != n_blocks * block_size {
            return Err(Error::BlockMismatch(format!(
                "code length {} is not {n_blocks} blocks of {block_size}",
                code.n()
            )));
        }
        Ok(BlockCode { n_blocks, block_size, code, delta })
    }

    /// A qubit code viewed as a block code with single-qubit blocks.
    pub fn from_qubit_code(code: StabilizerCode, delta: usize) -> Result<Self> {
        let n = code.n();
        BlockCode::new(code, n, 1, delta)
    }

    pub fn n_blocks(&self) -> usize {
        self.n_blocks
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Logical qudits `k2`: binary-expanded logical qubits divided by block size.
    pub fn k_blocks(&self) -> usize {
        self.code.k() / self.block_size
    }

    pub fn layout(&self) -> BlockLayout {
        BlockLayout::uniform(self.n_blocks, self.block_size).expect("positive sizes")
    }

    /// Whether the code is small enough for its blockwise distance to be
    /// computed by centralizer enumeration.
    pub fn verifiable(&self, config: &SearchConfig) -> bool {
        self.code.k() > 0 && self.code.n() <= 64 && self.code.n() + self.code.k() <= config.centralizer_cap
    }

    /// The exact blockwise distance, when [`Self::verifiable`].
    pub fn blockwise_distance(&self, config: &SearchConfig) -> Result<Option<usize>> {
        if !self.verifiable(config) {
            return Ok(None);
        }
        let outcome = min_distance(&self.code, &Metric::Block(self.layout()), None, config)?;
        Ok(outcome.value())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Every block encoded in the inner code: `[[n1 n2, k1 k2]]`, `d_e >= d_e,inner * delta`.
    Full,
    /// First block carried by `k1` bare qubits: `[[n1 (n2-1) + k1, k1 k2]]`,
    /// `d_e >= d_e,inner (delta-1) + 1`.
    FirstTrivial,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "first-trivial" | "first_block_trivial" => Ok(Variant::FirstTrivial),
            other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::FirstTrivial => "first-trivial",
        })
    }
}

/// Validated inputs to [`concatenate`].
#[derive(Clone, Debug)]
pub struct ConcatSpec {
    inner: StabilizerCode,
    outer: BlockCode,
    variant: Variant,
}

impl ConcatSpec {
    pub fn new(inner: StabilizerCode, outer: BlockCode, variant: Variant) -> Result<Self> {
        let k1 = inner.logicals().ok_or(Error::MissingLogicals)?.len();
        if outer.block_size() != k1 {
            return Err(Error::BlockMismatch(format!(
                "outer block size {} differs from inner logical count {k1}",
                outer.block_size()
            )));
        }
        Ok(ConcatSpec { inner, outer, variant })
    }

    pub fn inner(&self) -> &StabilizerCode {
        &self.inner
    }

    pub fn outer(&self) -> &BlockCode {
        &self.outer
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Layout of the concatenated code, first block first.
    pub fn layout(&self) -> BlockLayout {
        let n1 = self.inner.n();
        let mut widths = vec![n1; self.outer.n_blocks()];
        if self.variant == Variant::FirstTrivial {
            widths[0] = self.inner.k();
        }
        BlockLayout::new(widths).expect("positive widths")
    }

    pub fn raw_params(&self, inner_effective_distance: usize) -> RawParams {
        RawParams {
            n1: self.inner.n(),
            k1: self.inner.k(),
            d_e: inner_effective_distance,
            n2: self.outer.n_blocks(),
            k2: self.outer.k_blocks(),
            delta: self.outer.delta(),
        }
    }
}

/// Ingredient parameters of a concatenation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawParams {
    pub n1: usize,
    pub k1: usize,
    pub d_e: usize,
    pub n2: usize,
    pub k2: usize,
    pub delta: usize,
}

impl RawParams {
    /// Ingredients when the inner code is `Q_r` (`d_e = 2`).
    pub fn for_qr(r: usize, n2: usize, k2: usize, delta: usize) -> Self {
        RawParams { n1: r, k1: r - 1, d_e: 2, n2, k2, delta }
    }
}

pub fn expected_params(raw: RawParams, variant: Variant, provenance: Provenance) -> Result<CodeParams> {
    let RawParams { n1, k1, d_e, n2, k2, delta } = raw;
    if [n1, k1, d_e, n2, delta].contains(&0) {
        return Err(Error::InvalidArgument(format!("non-positive ingredient in {raw:?}")));
    }
    match variant {
        Variant::Full => CodeParams::new(n1 * n2, k1 * k2, d_e * delta, provenance),
        Variant::FirstTrivial => {
            CodeParams::new(n1 * (n2 - 1) + k1, k1 * k2, d_e * (delta - 1) + 1, provenance)
        }
    }
}

/// Builds the concatenated code, with logical operators obtained by mapping the
/// outer logicals through the same block encoding.
pub fn concatenate(spec: &ConcatSpec) -> Result<StabilizerCode> {
    let inner = &spec.inner;
    let outer = spec.outer.code().clone().with_computed_logicals();
    let m = spec.outer.block_size();
    let layout = spec.layout();
    let n = layout.n();
    let ranges: Vec<(usize, usize)> = layout.ranges().collect();

    let encode = |p: &PauliString| -> Result<PauliString> {
        let mut out = PauliString::identity(n);
        for (j, &(offset, _)) in ranges.iter().enumerate() {
            let block = p.slice(j * m, m);
            let image = if j == 0 && spec.variant == Variant::FirstTrivial {
                block
            } else {
                inner_image(inner, &block)?
            };
            out.place(offset, &image);
        }
        Ok(out)
    };

    let mut generators = outer.generators().iter().map(&encode).collect::<Result<Vec<_>>>()?;
    for (j, &(offset, width)) in ranges.iter().enumerate() {
        if j == 0 && spec.variant == Variant::FirstTrivial {
            continue;
        }
        debug_assert_eq!(width, inner.n());
        for g in inner.generators() {
            let mut p = PauliString::identity(n);
            p.place(offset, g);
            generators.push(p);
        }
    }
    let ol = outer.logicals().expect("computed above");
    let logicals = Logicals {
        x: ol.x.iter().map(&encode).collect::<Result<_>>()?,
        z: ol.z.iter().map(&encode).collect::<Result<_>>()?,
    };
    StabilizerCode::validate(n, generators, Some(logicals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;

    fn p(s: &str) -> PauliString {
        parse_pauli(s).unwrap()
    }

    #[test]
    fn qr_structure() {
        let q2 = make_qr(2).unwrap();
        assert_eq!(q2.generators(), &[p("ZZ")]);
        let l = q2.logicals().unwrap();
        assert_eq!((l.x.clone(), l.z.clone()), (vec![p("XX")], vec![p("ZI")]));
        let q4 = make_qr(4).unwrap();
        assert_eq!(q4.k(), 3);
        assert_eq!(q4.logicals().unwrap().x[1], p("IXIX"));
        assert!(make_qr(1).is_err());
    }

    #[test]
    fn inner_images_for_q2() {
        let q2 = make_qr(2).unwrap();
        assert_eq!(inner_image(&q2, &p("X")).unwrap(), p("XX"));
        assert_eq!(inner_image(&q2, &p("Z")).unwrap(), p("ZI"));
        assert_eq!(inner_image(&q2, &p("Y")).unwrap(), p("YX"));
        assert_eq!(inner_image(&q2, &p("I")).unwrap(), p("II"));
        assert!(inner_image(&q2, &p("XX")).is_err());
        let bare = StabilizerCode::new(2, vec![p("ZZ")]).unwrap();
        assert_eq!(inner_image(&bare, &p("X")), Err(Error::MissingLogicals));
    }

    #[test]
    fn spec_rejects_block_mismatch() {
        let q3 = make_qr(3).unwrap();
        let outer = BlockCode::from_qubit_code(
            StabilizerCode::new(4, vec![p("XXXX"), p("ZZZZ")]).unwrap(),
            2,
        )
        .unwrap();
        assert!(matches!(ConcatSpec::new(q3, outer, Variant::Full), Err(Error::BlockMismatch(_))));
    }

    #[test]
    fn block_code_shape_checked() {
        let c = StabilizerCode::new(4, vec![p("XXXX"), p("ZZZZ")]).unwrap();
        assert!(BlockCode::new(c.clone(), 3, 1, 2).is_err());
        assert!(BlockCode::new(c.clone(), 2, 2, 0).is_err());
        let b = BlockCode::new(c, 2, 2, 1).unwrap();
        assert_eq!(b.k_blocks(), 1);
    }

    #[test]
    fn parameter_arithmetic() {
        let full = expected_params(
            RawParams { n1: 8, k1: 3, d_e: 4, n2: 10, k2: 2, delta: 5 },
            Variant::Full,
            Provenance::Arithmetic,
        )
        .unwrap();
        assert_eq!((full.n, full.k, full.d_e_bound, full.t), (80, 6, 20, 9));
        let short = expected_params(
            RawParams { n1: 8, k1: 3, d_e: 4, n2: 10, k2: 2, delta: 5 },
            Variant::FirstTrivial,
            Provenance::Arithmetic,
        )
        .unwrap();
        assert_eq!((short.n, short.k, short.d_e_bound, short.t), (75, 6, 17, 8));
        let qr = expected_params(RawParams::for_qr(3, 8, 2, 4), Variant::FirstTrivial, Provenance::Arithmetic)
            .unwrap();
        assert_eq!((qr.n, qr.k, qr.d_e_bound, qr.t), (23, 4, 7, 3));
    }

    #[test]
    fn variant_names() {
        assert_eq!("first-trivial".parse::<Variant>().unwrap(), Variant::FirstTrivial);
        assert_eq!("full".parse::<Variant>().unwrap().to_string(), "full");
        assert!("half".parse::<Variant>().is_err());
    }
}
