//! Built-in codes, QMDS parameter ranges and the reference parameter tables.

use serde::{Deserialize, Serialize};

use crate::concat::{expected_params, make_qr, BlockCode, RawParams, Variant};
use crate::error::{Error, Result};
use crate::params::{CodeParams, Provenance};
use crate::pauli::{parse_pauli, PauliString};
use crate::stabilizer::StabilizerCode;

pub const FIVE_ONE_THREE: [&str; 4] = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];

pub const EIGHT_THREE_CSS: [&str; 5] = [
    "ZZZZIIII", "ZZIIZZII", "ZIZIZIZI", "ZZZZZZZZ", "XXXXXXXX",
];

pub const FOUR_TWO_TWO: [&str; 2] = ["XXXX", "ZZZZ"];

/// The `[[9,1]]` code from `Q_2` and `[[5,1,3]]` with the first qubit bare,
/// written out generator by generator.
pub const NINE_ONE: [&str; 8] = [
    "XZIZIXXII",
    "IXXZIZIXX",
    "XIIXXZIZI",
    "ZXXIIXXZI",
    "IZZIIIIII",
    "IIIZZIIII",
    "IIIIIZZII",
    "IIIIIIIZZ",
];

pub const BUILTIN_NAMES: [&str; 5] = ["five_one_three", "eight_three_css", "four_two_two", "nine_one", "qr:<r>"];

/// A registry code together with the distances it is known to have.
#[derive(Clone, Debug)]
pub struct Builtin {
    pub name: String,
    pub code: StabilizerCode,
    pub distance: Option<usize>,
    pub effective_distance: Option<usize>,
}

impl Builtin {
    /// Single-qubit-block view for use as an outer code, with `delta` the
    /// Hamming distance.
    pub fn into_block_code(self) -> Result<BlockCode> {
        let delta = self.distance.ok_or_else(|| {
            Error::BlockMismatch(format!("built-in {} has no declared distance", self.name))
        })?;
        BlockCode::from_qubit_code(self.code, delta)
    }
}

fn from_list(n: usize, gens: &[&str]) -> StabilizerCode {
    let gens: Vec<PauliString> = gens.iter().map(|s| parse_pauli(s).expect("valid literal")).collect();
    StabilizerCode::new(n, gens).expect("built-in code is valid").with_computed_logicals()
}

pub fn builtin(name: &str) -> Result<Builtin> {
    let (code, distance, effective_distance) = match name {
        "five_one_three" => (from_list(5, &FIVE_ONE_THREE), Some(3), None),
        "eight_three_css" => (from_list(8, &EIGHT_THREE_CSS), Some(2), Some(4)),
        "four_two_two" => (from_list(4, &FOUR_TWO_TWO), Some(2), Some(2)),
        "nine_one" => (from_list(9, &NINE_ONE), None, Some(5)),
        other => {
            let r = other
                .strip_prefix("qr:")
                .and_then(|r| r.parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownBuiltin(other.to_string()))?;
            (make_qr(r)?, Some(1), Some(2))
        }
    };
    Ok(Builtin { name: name.to_string(), code, distance, effective_distance })
}

/// Outer-code parameters `[[n, k, delta]]_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterParams {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub q: u64,
}

impl std::fmt::Display for OuterParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},{}]]_{}", self.n, self.k, self.delta, self.q)
    }
}

/// Parameter ranges for QMDS codes `[[n, n+2-2d, d]]_q`, `q` a power of two.
///
/// Admitted: `d <= q+1` and `n <= q^2+1`, plus the length-`q^2+2` distance-4
/// family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QmdsFamily {
    q: u64,
}

impl QmdsFamily {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 || !q.is_power_of_two() {
            return Err(Error::InvalidArgument(format!("q={q} is not a power of 2")));
        }
        Ok(QmdsFamily { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn max_distance(&self) -> u64 {
        self.q + 1
    }

    pub fn max_length(&self) -> u64 {
        self.q * self.q + 1
    }

    /// `Ok(k)` when a QMDS `[[n, k, d]]_q` is admitted, else the violated bound.
    pub fn admits(&self, n: usize, d: usize) -> std::result::Result<usize, String> {
        let (n64, d64) = (n as u64, d as u64);
        if d == 0 || n + 2 < 2 * d {
            return Err(format!("k = n + 2 - 2d = {n} + 2 - {} < 0", 2 * d));
        }
        let k = n + 2 - 2 * d;
        if n64 == self.q * self.q + 2 && d == 4 {
            return Ok(k);
        }
        if d64 > self.max_distance() {
            return Err(format!("d = {d} > q+1 = {}", self.max_distance()));
        }
        if n64 > self.max_length() {
            return Err(format!("n = {n} > q^2+1 = {}", self.max_length()));
        }
        Ok(k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum QmdsOutcome {
    Admitted(OuterParams),
    Rejected { reason: String },
}

/// The QMDS outer code `[[n, n-2t, t+1]]_q` for a `t`-code, if admitted.
pub fn qmds_params(q: u64, t: usize, n: usize) -> Result<QmdsOutcome> {
    let family = QmdsFamily::new(q)?;
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".into()));
    }
    Ok(match family.admits(n, t + 1) {
        Ok(k) => QmdsOutcome::Admitted(OuterParams { n, k, delta: t + 1, q }),
        Err(reason) => QmdsOutcome::Rejected { reason },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableSource {
    /// Outer codes must be admitted QMDS codes.
    Qmds,
    /// Any user-supplied outer parameters.
    User,
}

/// `[[rn-1, (r-1)k, 2 delta - 1]]` rows from outer codes over `q = 2^(r-1)`
/// concatenated with `Q_r`, first block bare.
pub fn table_rows(outers: &[OuterParams], r: usize, source: TableSource) -> Result<Vec<CodeParams>> {
    if !(2..=64).contains(&r) {
        return Err(Error::InvalidArgument(format!("r must be in 2..=64, got {r}")));
    }
    let q = 1u64 << (r - 1);
    outers
        .iter()
        .map(|o| {
            if o.q != q {
                return Err(Error::QuditDimensionMismatch { r, expected: q, found: o.q });
            }
            if source == TableSource::Qmds {
                let k = QmdsFamily::new(q)?
                    .admits(o.n, o.delta)
                    .map_err(|e| Error::InvalidArgument(format!("{o} is not an admitted QMDS code: {e}")))?;
                if k != o.k {
                    return Err(Error::InvalidArgument(format!("{o} does not meet k + 2d = n + 2")));
                }
            }
            expected_params(RawParams::for_qr(r, o.n, o.k, o.delta), Variant::FirstTrivial, Provenance::Arithmetic)
        })
        .collect()
}

/// `r` such that `q = 2^(r-1)`.
pub fn r_for_q(q: u64) -> Result<usize> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Error::InvalidArgument(format!("q={q} is not a power of 2")));
    }
    Ok(q.trailing_zeros() as usize + 1)
}

/// One transcribed table row: `t n_outer k_outer delta q -> n k de dlb`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureRow {
    pub t: usize,
    pub outer: OuterParams,
    pub n: usize,
    pub k: usize,
    pub d_e: usize,
    /// Published lower bound for the best known stabilizer code; reference only.
    pub d_lb: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub row: FixtureRow,
    pub computed: CodeParams,
    pub matches: bool,
}

pub const FIXTURE_IDS: [&str; 3] = ["table1", "table2", "table3"];

pub fn fixture_text(id: &str) -> Result<&'static str> {
    match id {
        "table1" => Ok(include_str!("../fixtures/table1.txt")),
        "table2" => Ok(include_str!("../fixtures/table2.txt")),
        "table3" => Ok(include_str!("../fixtures/table3.txt")),
        other => Err(Error::InvalidArgument(format!(
            "unknown fixture {other:?}; expected one of {FIXTURE_IDS:?}"
        ))),
    }
}

pub fn fixture(id: &str) -> Result<Vec<FixtureRow>> {
    parse_fixture(fixture_text(id)?)
}

/// Which fixtures consist of QMDS outer codes.
pub fn fixture_source(id: &str) -> TableSource {
    if id == "table1" {
        TableSource::Qmds
    } else {
        TableSource::User
    }
}

fn ints(line_no: usize, text: &str, want: usize) -> Result<Vec<usize>> {
    let vals = text
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse { line: line_no, message: format!("not an integer: {t:?}") })
        })
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != want {
        return Err(Error::Parse {
            line: line_no,
            message: format!("expected {want} integers, found {}", vals.len()),
        });
    }
    Ok(vals)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_fixture(text: &str) -> Result<Vec<FixtureRow>> {
    content_lines(text)
        .map(|(no, line)| {
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse { line: no, message: "missing `->`".into() })?;
            let l = ints(no, lhs, 5)?;
            let r = ints(no, rhs, 4)?;
            Ok(FixtureRow {
                t: l[0],
                outer: OuterParams { n: l[1], k: l[2], delta: l[3], q: l[4] as u64 },
                n: r[0],
                k: r[1],
                d_e: r[2],
                d_lb: r[3],
            })
        })
        .collect()
}

/// Outer parameter list: lines `n k delta [q]`, or full fixture rows.
/// A missing `q` defaults to `default_q`.
pub fn parse_outer_params(text: &str, default_q: u64) -> Result<Vec<OuterParams>> {
    content_lines(text)
        .map(|(no, line)| {
            if line.contains("->") {
                return parse_fixture(line).map(|rows| rows[0].outer).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse { line: no, message },
                    other => other,
                });
            }
            let fields = line.split_whitespace().count();
            let v = ints(no, line, if fields == 4 { 4 } else { 3 })?;
            Ok(OuterParams { n: v[0], k: v[1], delta: v[2], q: v.get(3).map_or(default_q, |&q| q as u64) })
        })
        .collect()
}

/// Recomputes every row from its outer parameters.
pub fn reproduce(rows: &[FixtureRow], source: TableSource) -> Result<Vec<RowCheck>> {
    rows.iter()
        .map(|row| {
            let r = r_for_q(row.outer.q)?;
            let computed = table_rows(&[row.outer], r, source)?[0];
            let matches = computed.n == row.n
                && computed.k == row.k
                && computed.d_e_bound == row.d_e
                && computed.t == row.t;
            Ok(RowCheck { row: *row, computed, matches })
        })
        .collect()
}
