//! Brute-force oracles that share no code path with the library's search
//! engines: Paulis are handled as letter strings, commutation is decided by
//! counting clashing positions, and stabilizer membership by enumerating the
//! whole group.
#![allow(dead_code)]

use std::collections::HashSet;

use adcodes::{render_pauli, StabilizerCode};

pub const LETTERS: [char; 4] = ['I', 'X', 'Y', 'Z'];

/// All `4^n` Pauli strings on `n` qubits.
pub fn all_paulis(n: usize) -> impl Iterator<Item = String> {
    (0..4usize.pow(n as u32)).map(move |c| (0..n).map(|i| LETTERS[(c >> (2 * i)) & 3]).collect())
}

pub fn letter_product(a: char, b: char) -> char {
    match (a, b) {
        ('I', c) | (c, 'I') => c,
        (x, y) if x == y => 'I',
        ('X', 'Y') | ('Y', 'X') => 'Z',
        ('X', 'Z') | ('Z', 'X') => 'Y',
        ('Y', 'Z') | ('Z', 'Y') => 'X',
        _ => unreachable!(),
    }
}

pub fn string_product(a: &str, b: &str) -> String {
    a.chars().zip(b.chars()).map(|(x, y)| letter_product(x, y)).collect()
}

pub fn strings_commute(a: &str, b: &str) -> bool {
    a.chars().zip(b.chars()).filter(|&(x, y)| x != 'I' && y != 'I' && x != y).count() % 2 == 0
}

pub fn eff_weight(s: &str) -> usize {
    s.chars().map(|c| match c { 'I' => 0, 'Z' => 2, _ => 1 }).sum()
}

pub fn ham_weight(s: &str) -> usize {
    s.chars().filter(|&c| c != 'I').count()
}

/// Every element of the stabilizer group, phases dropped.
pub fn stabilizer_group(code: &StabilizerCode) -> HashSet<String> {
    let gens: Vec<String> = code.generators().iter().map(render_pauli).collect();
    let mut group = HashSet::new();
    group.insert("I".repeat(code.n()));
    for g in &gens {
        let current: Vec<String> = group.iter().cloned().collect();
        for h in current {
            group.insert(string_product(&h, g));
        }
    }
    group
}

/// Minimum of `weight` over `C(S) \ S` (optionally filtered) by scanning all
/// `4^n` Paulis.
pub fn brute_min(
    code: &StabilizerCode,
    weight: impl Fn(&str) -> usize,
    keep: impl Fn(&str) -> bool,
) -> Option<usize> {
    let gens: Vec<String> = code.generators().iter().map(render_pauli).collect();
    let group = stabilizer_group(code);
    all_paulis(code.n())
        .filter(|p| keep(p) && gens.iter().all(|g| strings_commute(g, p)) && !group.contains(p))
        .map(|p| weight(&p))
        .min()
}

pub fn brute_effective_distance(code: &StabilizerCode) -> usize {
    brute_min(code, eff_weight, |_| true).expect("k >= 1")
}

pub fn brute_hamming_distance(code: &StabilizerCode) -> usize {
    brute_min(code, ham_weight, |_| true).expect("k >= 1")
}

/// A^1 in its defining description: identity, single X/Y/Z, or two X/Y factors.
pub fn in_a1(s: &str) -> bool {
    let support: Vec<char> = s.chars().filter(|&c| c != 'I').collect();
    match support.len() {
        0 | 1 => true,
        2 => support.iter().all(|&c| c == 'X' || c == 'Y'),
        _ => false,
    }
}
