//! Size limits guarding the exhaustive algorithms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest dimension accepted by vertex enumeration.
    pub vertex_dim: usize,
    /// Largest number of (square-free) variables accepted by the Betti
    /// number computation.
    pub homology_vars: usize,
    /// Largest number of candidate witnesses the v-number search may test.
    pub witness_budget: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            vertex_dim: 12,
            homology_vars: 16,
            witness_budget: 5_000_000,
        }
    }
}

impl Caps {
    /// Parses `key=value` pairs separated by commas, e.g.
    /// `vertex-dim=10,homology-vars=18`. Unknown keys are rejected.
    pub fn parse(s: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Domain(format!("cap `{part}` is not key=value")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Domain(format!("cap `{part}` has a non-integer value")))?;
            match k.trim() {
                "vertex-dim" => caps.vertex_dim = v as usize,
                "homology-vars" => caps.homology_vars = v as usize,
                "witness-budget" => caps.witness_budget = v,
                other => return Err(Error::Domain(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_caps() {
        let c = Caps::parse("vertex-dim=8, homology-vars=18").unwrap();
        assert_eq!(c.vertex_dim, 8);
        assert_eq!(c.homology_vars, 18);
        assert_eq!(c.witness_budget, Caps::default().witness_budget);
        assert_eq!(Caps::parse("").unwrap(), Caps::default());
        assert!(Caps::parse("speed=3").is_err());
        assert!(Caps::parse("vertex-dim").is_err());
    }
}
