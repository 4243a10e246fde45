//! Phaseless Pauli operators in symplectic form.
//!
//! A qubit position carries one of `I`, `X`, `Y`, `Z`, stored as an `(x, z)` bit
//! pair: `I = (0,0)`, `X = (1,0)`, `Y = (1,1)`, `Z = (0,1)`. Global phases are
//! never tracked, so the product of two operators is the XOR of their bits and
//! equality is equality of the bit pairs.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// An `n`-qubit Pauli operator modulo global phase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { x: BitVec::zeros(n), z: BitVec::zeros(n) }
    }

    pub fn from_bits(x: BitVec, z: BitVec) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch { expected: x.len(), found: z.len() });
        }
        Ok(PauliString { x, z })
    }

    /// Single-qubit operator `letter` on qubit `index` of an `n`-qubit register.
    pub fn single(n: usize, index: usize, letter: Letter) -> Self {
        let mut p = PauliString::identity(n);
        p.set(index, letter);
        p
    }

    /// Decodes the symplectic vector `(x_0..x_{n-1}, z_0..z_{n-1})`.
    pub fn from_symplectic(v: &BitVec) -> Self {
        assert!(v.len().is_multiple_of(2), "symplectic vector must have even length");
        let n = v.len() / 2;
        PauliString { x: v.slice(0, n), z: v.slice(n, n) }
    }

    pub fn to_symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn get(&self, i: usize) -> Letter {
        Letter::from_bits(self.x.get(i), self.z.get(i))
    }

    pub fn set(&mut self, i: usize, letter: Letter) {
        let (x, z) = letter.bits();
        self.x.set(i, x);
        self.z.set(i, z);
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of non-identity factors.
    pub fn hamming_weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    /// `X` and `Y` factors count 1, `Z` factors count 2.
    pub fn effective_weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(x, z)| (x.count_ones() + 2 * (z & !x).count_ones()) as usize)
            .sum()
    }

    /// True iff the operator has no `X` or `Y` factor.
    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// True iff the operator has no `Z` or `Y` factor.
    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    /// In-place product; panics if lengths differ.
    pub fn mul_assign(&mut self, other: &PauliString) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Phaseless product; panics if lengths differ. See [`multiply`] for the
    /// checked form.
    pub fn mul(&self, other: &PauliString) -> PauliString {
        let mut out = self.clone();
        out.mul_assign(other);
        out
    }

    /// Symplectic-form commutation test; panics if lengths differ. See
    /// [`commutes`] for the checked form.
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// The restriction to qubits `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> PauliString {
        PauliString { x: self.x.slice(start, len), z: self.z.slice(start, len) }
    }

    /// Writes `part` onto qubits `offset..offset + part.n()`.
    pub fn place(&mut self, offset: usize, part: &PauliString) {
        for i in 0..part.n() {
            self.set(offset + i, part.get(i));
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.n()).map(move |i| self.get(i))
    }
}

/// Parses a string over `{I, X, Y, Z}`.
pub fn parse_pauli(text: &str) -> Result<PauliString> {
    if text.is_empty() {
        return Err(Error::EmptyPauli);
    }
    let chars: Vec<char> = text.chars().collect();
    let mut p = PauliString::identity(chars.len());
    for (position, &c) in chars.iter().enumerate() {
        let letter = Letter::from_char(c).ok_or(Error::InvalidPauliChar { position, found: c })?;
        p.set(position, letter);
    }
    Ok(p)
}

pub fn render_pauli(p: &PauliString) -> String {
    p.letters().map(Letter::as_char).collect()
}

pub fn multiply(a: &PauliString, b: &PauliString) -> Result<PauliString> {
    check_len(a, b)?;
    Ok(a.mul(b))
}

pub fn commutes(a: &PauliString, b: &PauliString) -> Result<bool> {
    check_len(a, b)?;
    Ok(a.commutes_with(b))
}

fn check_len(a: &PauliString, b: &PauliString) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch { expected: a.n(), found: b.n() });
    }
    Ok(())
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli(s)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_pauli(self))
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

/// Packed-word order: the `x` bits compared as an integer (qubit `i` weighted
/// `2^i`), then the `z` bits likewise. Used for deterministic tie-breaking of
/// witnesses and counterexamples.
impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.x.int_cmp(&other.x))
            .then_with(|| self.z.int_cmp(&other.z))
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&render_pauli(self))
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_pauli(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        parse_pauli(s).unwrap()
    }

    #[test]
    fn parse_encoding_table() {
        let xyiz = p("XYIZ");
        assert_eq!(xyiz.x_bits(), &BitVec::from_bools(&[true, true, false, false]));
        assert_eq!(xyiz.z_bits(), &BitVec::from_bools(&[false, true, false, true]));
        assert!(p("IIII").is_identity());
        let zz = p("ZZ");
        assert!(zz.x_bits().is_zero());
        assert_eq!(zz.z_bits().count_ones(), 2);
    }

    #[test]
    fn parse_errors_name_position() {
        assert_eq!(parse_pauli(""), Err(Error::EmptyPauli));
        assert_eq!(
            parse_pauli("XIQZ"),
            Err(Error::InvalidPauliChar { position: 2, found: 'Q' })
        );
        assert!(parse_pauli("xz").is_err());
    }

    #[test]
    fn products() {
        assert_eq!(multiply(&p("XX"), &p("ZI")).unwrap(), p("YX"));
        assert_eq!(multiply(&p("XI"), &p("IX")).unwrap(), p("XX"));
        let y = p("XYZI");
        assert!(y.mul(&y).is_identity());
        assert!(multiply(&p("X"), &p("XX")).is_err());
    }

    #[test]
    fn commutation() {
        assert!(!commutes(&p("X"), &p("Z")).unwrap());
        assert!(commutes(&p("ZZ"), &p("XX")).unwrap());
        assert!(!commutes(&p("ZZ"), &p("XI")).unwrap());
        assert!(commutes(&p("Y"), &p("Y")).unwrap());
        assert!(commutes(&p("ZZ"), &p("X")).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(p("XYIZ").effective_weight(), 4);
        assert_eq!(p("XYIZ").hamming_weight(), 3);
        assert_eq!(p("IIII").effective_weight(), 0);
        assert_eq!(p("IIII").hamming_weight(), 0);
        assert_eq!(p("ZZ").effective_weight(), 4);
        assert_eq!(p("ZZ").hamming_weight(), 2);
    }

    #[test]
    fn symplectic_round_trip() {
        let a = p("XYIZZ");
        let v = a.to_symplectic();
        assert_eq!(format!("{v:?}"), "1100001011");
        assert_eq!(PauliString::from_symplectic(&v), a);
    }

    #[test]
    fn ordering_follows_symplectic_bits() {
        // x-part decides first, then z; qubit i has weight 2^i
        let mut v = vec![p("XI"), p("IX"), p("IZ"), p("ZI"), p("II"), p("XX")];
        v.sort();
        assert_eq!(v, vec![p("II"), p("ZI"), p("IZ"), p("XI"), p("IX"), p("XX")]);
    }

    #[test]
    fn serde_as_text() {
        let json = serde_json::to_string(&p("XZY")).unwrap();
        assert_eq!(json, "\"XZY\"");
        let back: PauliString = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("XZY"));
    }
}
