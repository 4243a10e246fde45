//! Text formats for codes and error sets.
//!
//! A code file looks like
//!
//! ```text
//! # comment
//! code n=5 k=1
//! XZZXI
//! IXZZX
//! XIXZZ
//! ZXIXZ
//! logicals
//! X: XXXXX
//! Z: ZZZZZ
//! ```
//!
//! Block codes add `blocks=<int> blocksize=<int> delta=<int>` to the header.
//! The `logicals` section is optional; its `X:`/`Z:` lines are taken in pair order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::ad_errors::ErrorSet;
use crate::concat::BlockCode;
use crate::error::{Error, Result};
use crate::pauli::{parse_pauli, PauliString};
use crate::stabilizer::{Logicals, StabilizerCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockHeader {
    pub blocks: usize,
    pub block_size: usize,
    pub delta: usize,
}

/// Contents of a parsed code file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub code: StabilizerCode,
    pub block: Option<BlockHeader>,
    pub comments: Vec<String>,
}

impl CodeFile {
    pub fn into_block_code(self) -> Result<BlockCode> {
        let h = self
            .block
            .ok_or_else(|| Error::BlockMismatch("code file has no block header".into()))?;
        BlockCode::new(self.code, h.blocks, h.block_size, h.delta)
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_header(line_no: usize, line: &str, keyword: &str) -> Result<BTreeMap<String, String>> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(perr(line_no, format!("expected `{keyword}` header")));
    }
    let mut fields = BTreeMap::new();
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| perr(line_no, format!("malformed header field {part:?}")))?;
        if fields.insert(k.to_string(), v.to_string()).is_some() {
            return Err(perr(line_no, format!("duplicate header field {k:?}")));
        }
    }
    Ok(fields)
}

fn int_field(line_no: usize, fields: &BTreeMap<String, String>, key: &str) -> Result<Option<usize>> {
    fields
        .get(key)
        .map(|v| v.parse().map_err(|_| perr(line_no, format!("field {key} must be an integer, got {v:?}"))))
        .transpose()
}

fn pauli_at(line_no: usize, text: &str, n: usize) -> Result<PauliString> {
    let p = parse_pauli(text).map_err(|e| perr(line_no, e.to_string()))?;
    if p.n() != n {
        return Err(perr(line_no, format!("operator has length {}, expected {n}", p.n())));
    }
    Ok(p)
}

/// Parses and validates a code file.
pub fn read_code(text: &str) -> Result<CodeFile> {
    let mut comments = Vec::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| {
            if let Some(c) = l.strip_prefix('#') {
                comments.push(c.trim().to_string());
                false
            } else {
                !l.is_empty()
            }
        })
        .collect::<Vec<_>>()
        .into_iter();

    let (hline, header) = lines.next().ok_or_else(|| perr(0, "missing `code` header"))?;
    let fields = parse_header(hline, header, "code")?;
    let n = int_field(hline, &fields, "n")?.ok_or_else(|| perr(hline, "header needs n"))?;
    let k = int_field(hline, &fields, "k")?.ok_or_else(|| perr(hline, "header needs k"))?;
    if k > n {
        return Err(perr(hline, format!("k={k} exceeds n={n}")));
    }
    let block_keys = ["blocks", "blocksize", "delta"];
    let block_vals = block_keys
        .iter()
        .map(|key| int_field(hline, &fields, key))
        .collect::<Result<Vec<_>>>()?;
    let block = match block_vals.as_slice() {
        [Some(blocks), Some(block_size), Some(delta)] => {
            Some(BlockHeader { blocks: *blocks, block_size: *block_size, delta: *delta })
        }
        [None, None, None] => None,
        _ => return Err(perr(hline, "block header needs all of blocks, blocksize, delta")),
    };
    if let Some(unknown) = fields.keys().find(|k| !["n", "k"].contains(&k.as_str()) && !block_keys.contains(&k.as_str())) {
        return Err(perr(hline, format!("unknown header field {unknown:?}")));
    }

    let mut generators = Vec::with_capacity(n - k);
    let mut lx = Vec::new();
    let mut lz = Vec::new();
    let mut in_logicals = false;
    let mut last_line = hline;
    for (line_no, line) in lines {
        last_line = line_no;
        if line == "logicals" {
            if in_logicals {
                return Err(perr(line_no, "duplicate logicals section"));
            }
            in_logicals = true;
            continue;
        }
        if in_logicals {
            let (tag, op) = line
                .split_once(':')
                .ok_or_else(|| perr(line_no, "expected `X: <pauli>` or `Z: <pauli>`"))?;
            let p = pauli_at(line_no, op.trim(), n)?;
            match tag.trim() {
                "X" => lx.push(p),
                "Z" => lz.push(p),
                other => return Err(perr(line_no, format!("unknown logical tag {other:?}"))),
            }
        } else {
            generators.push(pauli_at(line_no, line, n)?);
        }
    }
    if generators.len() != n - k {
        return Err(perr(
            last_line,
            format!("expected {} generators, found {}", n - k, generators.len()),
        ));
    }
    let logicals = in_logicals.then_some(Logicals { x: lx, z: lz });
    let code = StabilizerCode::validate(n, generators, logicals)?;
    Ok(CodeFile { code, block, comments })
}

/// Renders a code file; the output of [`read_code`] on it reproduces the code.
pub fn write_code(code: &StabilizerCode, block: Option<BlockHeader>, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = write!(out, "code n={} k={}", code.n(), code.k());
    if let Some(b) = block {
        let _ = write!(out, " blocks={} blocksize={} delta={}", b.blocks, b.block_size, b.delta);
    }
    out.push('\n');
    for g in code.generators() {
        let _ = writeln!(out, "{g}");
    }
    if let Some(l) = code.logicals() {
        out.push_str("logicals\n");
        for (x, z) in l.x.iter().zip(&l.z) {
            let _ = writeln!(out, "X: {x}");
            let _ = writeln!(out, "Z: {z}");
        }
    }
    out
}

pub fn write_block_code(block: &BlockCode, comments: &[String]) -> String {
    let header = BlockHeader {
        blocks: block.n_blocks(),
        block_size: block.block_size(),
        delta: block.delta(),
    };
    write_code(block.code(), Some(header), comments)
}

pub fn write_error_set(set: &ErrorSet) -> String {
    let mut out = format!("errorset n={} label={}\n", set.n(), set.label());
    for p in set.iter() {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn read_error_set(text: &str) -> Result<ErrorSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| perr(0, "missing `errorset` header"))?;
    let fields = parse_header(hline, header, "errorset")?;
    let n = int_field(hline, &fields, "n")?.ok_or_else(|| perr(hline, "header needs n"))?;
    let label = fields.get("label").cloned().unwrap_or_default();
    let elements = lines.map(|(no, l)| pauli_at(no, l, n)).collect::<Result<Vec<_>>>()?;
    ErrorSet::new(n, elements, label)
}
