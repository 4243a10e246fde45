//! Stabilizer codes: validation, logical operators and error detection.

use rayon::prelude::*;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf2::{Echelon, Gf2Matrix};
use crate::pauli::PauliString;

/// Paired logical operators; `x[i]` and `z[i]` act on logical qubit `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Logicals {
    pub x: Vec<PauliString>,
    pub z: Vec<PauliString>,
}

impl Logicals {
    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &PauliString> {
        self.x.iter().chain(&self.z)
    }
}

/// A validated `[[n, k]]` qubit stabilizer code.
///
/// Construction always checks that the generators commute pairwise and are
/// independent, so every value of this type satisfies those invariants.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliString>,
    logicals: Option<Logicals>,
    span: Echelon,
}

impl PartialEq for StabilizerCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators == other.generators && self.logicals == other.logicals
    }
}

impl Eq for StabilizerCode {}

impl StabilizerCode {
    /// Validates `generators` as the stabilizer of an `n`-qubit code.
    pub fn new(n: usize, generators: Vec<PauliString>) -> Result<Self> {
        Self::validate(n, generators, None)
    }

    /// Full validation, including the pairing conditions on `logicals` when given.
    pub fn validate(
        n: usize,
        generators: Vec<PauliString>,
        logicals: Option<Logicals>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("code length must be positive".into()));
        }
        for g in &generators {
            if g.n() != n {
                return Err(Error::LengthMismatch { expected: n, found: g.n() });
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if !generators[i].commutes_with(&generators[j]) {
                    return Err(Error::NonCommuting { first: i, second: j });
                }
            }
        }
        let mut span = Echelon::new(2 * n);
        for (index, g) in generators.iter().enumerate() {
            if !span.insert(g.to_symplectic()) {
                return Err(Error::DependentGenerators { index });
            }
        }
        let code = StabilizerCode { n, generators, logicals: None, span };
        match logicals {
            Some(l) => code.with_logicals(l),
            None => Ok(code),
        }
    }

    /// Attaches logical operators after checking the pairing invariants.
    pub fn with_logicals(mut self, logicals: Logicals) -> Result<Self> {
        self.check_logicals(&logicals)?;
        self.logicals = Some(logicals);
        Ok(self)
    }

    fn check_logicals(&self, l: &Logicals) -> Result<()> {
        let k = self.k();
        if l.x.len() != k || l.z.len() != k {
            return Err(Error::MalformedLogicals(format!(
                "expected {k} pairs, got {} X and {} Z operators",
                l.x.len(),
                l.z.len()
            )));
        }
        if let Some(p) = l.iter().find(|p| p.n() != self.n) {
            return Err(Error::MalformedLogicals(format!(
                "operator {p} has length {}, expected {}",
                p.n(),
                self.n
            )));
        }
        for (name, ops) in [("X", &l.x), ("Z", &l.z)] {
            for (i, op) in ops.iter().enumerate() {
                if let Some(g) = self.generators.iter().position(|g| !g.commutes_with(op)) {
                    return Err(Error::MalformedLogicals(format!(
                        "logical {name}{i} anticommutes with generator {g}"
                    )));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let anti = !l.x[i].commutes_with(&l.z[j]);
                if anti != (i == j) {
                    return Err(Error::MalformedLogicals(format!(
                        "X{i} and Z{j} {} but should {}",
                        if anti { "anticommute" } else { "commute" },
                        if i == j { "anticommute" } else { "commute" }
                    )));
                }
                if i < j {
                    if !l.x[i].commutes_with(&l.x[j]) {
                        return Err(Error::MalformedLogicals(format!("X{i} and X{j} anticommute")));
                    }
                    if !l.z[i].commutes_with(&l.z[j]) {
                        return Err(Error::MalformedLogicals(format!("Z{i} and Z{j} anticommute")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn logicals(&self) -> Option<&Logicals> {
        self.logicals.as_ref()
    }

    /// Generators as rows of symplectic vectors `(x | z)`.
    pub fn generator_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::new(2 * self.n, self.generators.iter().map(PauliString::to_symplectic).collect())
            .expect("uniform generator length")
    }

    /// Canonical logical operators by symplectic completion.
    ///
    /// The centralizer basis comes from the null space of the swapped-halves
    /// generator matrix and the stabilizer span is taken in reduced form, so the
    /// result depends only on the stabilizer group, not on generator order.
    pub fn compute_logicals(&self) -> Logicals {
        let n = self.n;
        let swapped: Vec<BitVec> = self
            .generators
            .iter()
            .map(|g| g.z_bits().concat(g.x_bits()))
            .collect();
        let centralizer = Gf2Matrix::new(2 * n, swapped).expect("uniform").nullspace();

        let (reduced, rank) = self.generator_matrix().rref();
        let mut span = Echelon::from_rows(2 * n, &reduced.rows()[..rank]);
        let mut pool: Vec<BitVec> = centralizer
            .into_iter()
            .filter(|v| span.insert(v.clone()))
            .collect();
        debug_assert_eq!(pool.len(), 2 * self.k());

        let mut lx = Vec::new();
        let mut lz = Vec::new();
        while !pool.is_empty() {
            let v = pool.remove(0);
            let partner = pool
                .iter()
                .position(|w| symplectic_product(&v, w))
                .expect("symplectic form is nondegenerate on the centralizer quotient");
            let w = pool.remove(partner);
            for u in &mut pool {
                let uw = symplectic_product(u, &w);
                let uv = symplectic_product(u, &v);
                if uw {
                    u.xor_assign(&v);
                }
                if uv {
                    u.xor_assign(&w);
                }
            }
            lx.push(PauliString::from_symplectic(&v));
            lz.push(PauliString::from_symplectic(&w));
        }
        Logicals { x: lx, z: lz }
    }

    /// Returns the code with logical operators attached, computing them if absent.
    pub fn with_computed_logicals(self) -> Self {
        if self.logicals.is_some() {
            return self;
        }
        let l = self.compute_logicals();
        StabilizerCode { logicals: Some(l), ..self }
    }

    fn check_len(&self, p: &PauliString) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: p.n() });
        }
        Ok(())
    }

    /// Membership in the stabilizer group modulo phase.
    pub fn in_stabilizer(&self, p: &PauliString) -> Result<bool> {
        self.check_len(p)?;
        Ok(self.contains_symplectic(&p.to_symplectic()))
    }

    pub(crate) fn contains_symplectic(&self, v: &BitVec) -> bool {
        self.span.contains(v)
    }

    /// True iff `p` commutes with every generator.
    pub fn in_centralizer(&self, p: &PauliString) -> Result<bool> {
        self.check_len(p)?;
        Ok(self.generators.iter().all(|g| g.commutes_with(p)))
    }

    /// Detectable iff `p` anticommutes with some stabilizer or lies in the
    /// stabilizer; undetectable exactly on `C(S) \ S`.
    pub fn is_detectable(&self, p: &PauliString) -> Result<bool> {
        self.check_len(p)?;
        Ok(self.detectable_unchecked(p))
    }

    pub(crate) fn detectable_unchecked(&self, p: &PauliString) -> bool {
        !self.generators.iter().all(|g| g.commutes_with(p)) || self.contains_symplectic(&p.to_symplectic())
    }

    /// Checks every error; on failure returns the lexicographically smallest
    /// undetectable one.
    pub fn detects_set(&self, errors: &[PauliString]) -> Result<Detection> {
        if let Some(bad) = errors.iter().find(|e| e.n() != self.n) {
            return Err(Error::LengthMismatch { expected: self.n, found: bad.n() });
        }
        let worst = errors
            .par_iter()
            .filter(|e| !self.detectable_unchecked(e))
            .min()
            .cloned();
        Ok(match worst {
            Some(e) => Detection::Undetected(e),
            None => Detection::AllDetected { checked: errors.len() },
        })
    }
}

/// Outcome of [`StabilizerCode::detects_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Detection {
    AllDetected { checked: usize },
    Undetected(PauliString),
}

impl Detection {
    pub fn passed(&self) -> bool {
        matches!(self, Detection::AllDetected { .. })
    }
}

/// Symplectic form on vectors laid out as `(x | z)`.
pub(crate) fn symplectic_product(u: &BitVec, v: &BitVec) -> bool {
    let n = u.len() / 2;
    let (ux, uz) = (u.slice(0, n), u.slice(n, n));
    let (vx, vz) = (v.slice(0, n), v.slice(n, n));
    ux.dot(&vz) ^ uz.dot(&vx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_pauli;

    fn paulis(list: &[&str]) -> Vec<PauliString> {
        list.iter().map(|s| parse_pauli(s).unwrap()).collect()
    }

    fn five_one_three() -> StabilizerCode {
        StabilizerCode::new(5, paulis(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])).unwrap()
    }

    fn q2() -> StabilizerCode {
        StabilizerCode::new(2, paulis(&["ZZ"])).unwrap()
    }

    #[test]
    fn validate_five_one_three() {
        let c = five_one_three();
        assert_eq!(c.k(), 1);
        assert_eq!(c.generator_matrix().rank(), 4);
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            StabilizerCode::new(2, paulis(&["XX", "ZI"])),
            Err(Error::NonCommuting { first: 0, second: 1 })
        );
        assert_eq!(
            StabilizerCode::new(2, paulis(&["ZZ", "ZZ"])),
            Err(Error::DependentGenerators { index: 1 })
        );
        assert!(matches!(
            StabilizerCode::new(3, paulis(&["ZZ"])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn fixed_q2_logicals_pass_pairing() {
        let l = Logicals { x: paulis(&["XX"]), z: paulis(&["ZI"]) };
        assert!(q2().with_logicals(l).is_ok());
        let bad = Logicals { x: paulis(&["XI"]), z: paulis(&["ZI"]) };
        assert!(matches!(q2().with_logicals(bad), Err(Error::MalformedLogicals(_))));
        let wrong_count = Logicals { x: vec![], z: vec![] };
        assert!(q2().with_logicals(wrong_count).is_err());
    }

    #[test]
    fn computed_logicals_are_valid() {
        for code in [q2(), five_one_three()] {
            let l = code.compute_logicals();
            assert_eq!(l.len(), code.k());
            assert!(code.clone().with_logicals(l).is_ok());
        }
    }

    #[test]
    fn trivial_code_logicals_are_unit_paulis() {
        let c = StabilizerCode::new(3, vec![]).unwrap();
        let l = c.compute_logicals();
        assert_eq!(l.x, paulis(&["XII", "IXI", "IIX"]));
        assert_eq!(l.z, paulis(&["ZII", "IZI", "IIZ"]));
    }

    #[test]
    fn logicals_independent_of_generator_order() {
        let a = five_one_three();
        let mut gens = a.generators().to_vec();
        gens.reverse();
        gens[0] = gens[0].mul(&gens[1]);
        let b = StabilizerCode::new(5, gens).unwrap();
        assert_eq!(a.compute_logicals(), b.compute_logicals());
    }

    #[test]
    fn stabilizer_membership() {
        let q = q2();
        assert!(q.in_stabilizer(&parse_pauli("ZZ").unwrap()).unwrap());
        assert!(!q.in_stabilizer(&parse_pauli("ZI").unwrap()).unwrap());
        let c = five_one_three();
        let prod = c.generators()[0].mul(&c.generators()[2]);
        assert!(c.in_stabilizer(&prod).unwrap());
        assert!(c.in_stabilizer(&parse_pauli("ZZ").unwrap()).is_err());
    }

    #[test]
    fn detection() {
        let q = q2();
        assert!(q.is_detectable(&parse_pauli("XI").unwrap()).unwrap());
        assert!(!q.is_detectable(&parse_pauli("ZI").unwrap()).unwrap());
        assert!(q.is_detectable(&parse_pauli("ZZ").unwrap()).unwrap());
        assert_eq!(
            q.detects_set(&paulis(&["ZI"])).unwrap(),
            Detection::Undetected(parse_pauli("ZI").unwrap())
        );
        assert!(q.detects_set(&paulis(&["II"])).unwrap().passed());
        assert!(five_one_three().detects_set(&paulis(&["IIIII"])).unwrap().passed());
    }

    #[test]
    fn undetected_witness_is_smallest() {
        let q = q2();
        // ZI < IZ < XX in packed-word order; XI is detected
        let d = q.detects_set(&paulis(&["XX", "XI", "IZ", "ZI"])).unwrap();
        assert_eq!(d, Detection::Undetected(parse_pauli("ZI").unwrap()));
    }
}
