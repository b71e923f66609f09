//! Quasi-linear fits `v_k = a k + b_{k mod d}` on the tail of a sequence.

use num_traits::Zero;
use serde::Serialize;

use crate::polyhedron::Rational;

/// Largest period tried.
pub const MAX_PERIOD: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fit {
    pub slope: Rational,
    pub period: u32,
    /// First `k` of the fitted tail.
    pub k_min: u32,
    /// `(r, b_r)` for each residue `r` of `k` modulo the period.
    pub intercepts: Vec<(u32, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitSummary {
    pub slope: String,
    pub period: u32,
    pub k_min: u32,
    pub intercepts: Vec<String>,
}

impl Fit {
    pub fn summary(&self) -> FitSummary {
        FitSummary {
            slope: self.slope.to_string(),
            period: self.period,
            k_min: self.k_min,
            intercepts: self
                .intercepts
                .iter()
                .map(|(r, b)| format!("{r}:{b}"))
                .collect(),
        }
    }

    pub fn predict(&self, k: u32) -> Rational {
        let r = k % self.period;
        let b = &self
            .intercepts
            .iter()
            .find(|(s, _)| *s == r)
            .expect("every residue has an intercept")
            .1;
        &self.slope * Rational::from_integer(k.into()) + b
    }
}

/// Fit `seq[k-1]` for `k ≥ k_min`, trying periods `1..=3` in order. Needs at
/// least `k_min + 4` terms and two points in each residue class.
pub fn fit_quasilinear(seq: &[u64], k_min: u32) -> Option<Fit> {
    if k_min == 0 || seq.len() < k_min as usize + 4 {
        return None;
    }
    let len = seq.len() as u32;
    let value = |k: u32| Rational::from_integer(seq[k as usize - 1].into());
    'period: for d in 1..=MAX_PERIOD {
        let mut slope: Option<Rational> = None;
        let mut intercepts = Vec::new();
        for start in k_min..k_min + d {
            let ks: Vec<u32> = (start..=len).step_by(d as usize).collect();
            if ks.len() < 2 {
                continue 'period;
            }
            let a = (value(ks[1]) - value(ks[0])) / Rational::from_integer(d.into());
            if slope.as_ref().is_some_and(|s| *s != a) {
                continue 'period;
            }
            let b = value(ks[0]) - &a * Rational::from_integer(ks[0].into());
            if ks
                .iter()
                .any(|&k| !(value(k) - &a * Rational::from_integer(k.into()) - &b).is_zero())
            {
                continue 'period;
            }
            slope = Some(a);
            intercepts.push((start % d, b));
        }
        intercepts.sort_by_key(|(r, _)| *r);
        return Some(Fit {
            slope: slope.expect("d ≥ 1"),
            period: d,
            k_min,
            intercepts,
        });
    }
    None
}

/// The first `k_min` from which a fit exists, with that fit.
pub fn first_fit(seq: &[u64]) -> Option<Fit> {
    (1..)
        .take_while(|&k| seq.len() >= k as usize + 4)
        .find_map(|k| fit_quasilinear(seq, k))
}
