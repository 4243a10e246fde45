use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Derived from a built code whose ingredients were verified.
    Constructed,
    /// Pure parameter arithmetic from outer-code parameters.
    Arithmetic,
    /// Bound conditional on a declared, unverified blockwise distance.
    Declared,
}

/// `[[n, k]]` with an effective-distance lower bound and the number of AD
/// errors it corrects, `t = (d_e - 1) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d_e_bound: usize,
    pub t: usize,
    pub provenance: Provenance,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d_e_bound: usize, provenance: Provenance) -> Result<Self> {
        if d_e_bound == 0 || k > n {
            return Err(Error::InvalidArgument(format!(
                "invalid parameters [[{n},{k}]] with d_e >= {d_e_bound}"
            )));
        }
        Ok(CodeParams { n, k, d_e_bound, t: (d_e_bound - 1) / 2, provenance })
    }
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},d_e>={}]] t={}", self.n, self.k, self.d_e_bound, self.t)
    }
}
