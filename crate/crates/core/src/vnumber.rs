//! v-numbers of monomial ideals: global, local at each associated prime, and
//! along power filtrations.
//!
//! Witnesses are monomials. For a monomial prime `p` generated by the
//! variables in `P`, `I : f = p` holds exactly when `x_i f ∈ I` for every
//! `i ∈ P` and `f` lies outside the saturation of `I` by the variables not
//! in `P`. That saturation only sees the `P`-part `f_P` of `f`, so the search
//! runs over `P`-parts dividing the lcm and, for each, asks for the cheapest
//! `P`-free completion.

use std::collections::BTreeMap;
use std::fmt;

use crate::caps::Caps;
use crate::decomposition::{associated_primes, PrimeSupport};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::regularity::polarize;
use crate::symbolic::PowerKind;

/// Local v-number at one associated prime with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalV {
    pub v: u64,
    /// Among the monomials of degree `v` with `I : f = p`, the first in lex
    /// order with `x1 > x2 > ⋯` (the greatest exponent tuple).
    pub witness: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VReport {
    pub v: u64,
    pub local: BTreeMap<PrimeSupport, LocalV>,
}

impl VReport {
    /// The prime and witness realizing the global value, smallest prime first.
    pub fn global_witness(&self) -> (&PrimeSupport, &LocalV) {
        self.local
            .iter()
            .find(|(_, l)| l.v == self.v)
            .expect("the global value is attained at some prime")
    }
}

impl fmt::Display for VReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v = {}", self.v)?;
        for (p, l) in &self.local {
            write!(f, "; v_{p} = {} via {}", l.v, l.witness)?;
        }
        Ok(())
    }
}

fn require_proper_nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() || i.is_unit() {
        return Err(Error::Domain(
            "v-number needs a proper nonzero ideal".into(),
        ));
    }
    Ok(())
}

/// `true` iff `I : f` is exactly the prime generated by `p`.
pub fn is_witness(i: &MonomialIdeal, f: &Monomial, p: &PrimeSupport) -> bool {
    i.colon(f) == p.to_ideal(i.nvars())
}

/// Local v-number of `I` at `p`, or `None` if `p` is not associated.
pub fn local_v_number(i: &MonomialIdeal, p: &PrimeSupport, caps: &Caps) -> Result<Option<LocalV>> {
    require_proper_nonzero(i)?;
    let n = i.nvars();
    let sat = i.saturate(&p.complement_monomial(n));
    let colons: Vec<MonomialIdeal> = p
        .vars()
        .iter()
        .map(|&v| i.colon(&Monomial::var(v, n)))
        .collect();
    let target = MonomialIdeal::intersect_all(&colons)?;

    let lcm = i.lcm();
    let mut bound = vec![0; n];
    for &v in p.vars() {
        bound[v] = lcm.exponent(v);
    }
    let bound = Monomial::new(bound);
    if bound.divisor_count() > caps.witness_budget as u128 {
        return Err(Error::Resource(format!(
            "{} candidate witnesses exceed the budget of {}",
            bound.divisor_count(),
            caps.witness_budget
        )));
    }

    let mut best: Option<LocalV> = None;
    for fp in bound.divisors() {
        if sat.contains_monomial(&fp) {
            continue;
        }
        let rest = target.colon(&fp);
        let free: Vec<&Monomial> = rest
            .generators()
            .iter()
            .filter(|g| p.vars().iter().all(|&v| g.exponent(v) == 0))
            .collect();
        let Some(low) = free.iter().map(|g| g.degree()).min() else {
            continue;
        };
        let total = fp.degree() + low;
        if best.as_ref().is_some_and(|b| b.v < total) {
            continue;
        }
        let witness = free
            .iter()
            .filter(|g| g.degree() == low)
            .map(|g| fp.mul(g))
            .max()
            .expect("nonempty");
        best = Some(match best {
            Some(b) if b.v == total && b.witness >= witness => b,
            _ => LocalV { v: total, witness },
        });
    }
    Ok(best)
}

/// v-number with the default caps.
pub fn v_number(i: &MonomialIdeal) -> Result<VReport> {
    v_number_capped(i, &Caps::default())
}

pub fn v_number_capped(i: &MonomialIdeal, caps: &Caps) -> Result<VReport> {
    require_proper_nonzero(i)?;
    let mut local = BTreeMap::new();
    for p in associated_primes(i)? {
        let l = local_v_number(i, &p, caps)?.ok_or_else(|| {
            Error::Structural(format!("no witness found for associated prime {p}"))
        })?;
        local.insert(p, l);
    }
    let v = local.values().map(|l| l.v).min().expect("Ass is nonempty");
    Ok(VReport { v, local })
}

/// The defining search: every divisor of the lcm in increasing degree, with
/// `I : f` computed directly. Exponential; meant for cross-checking.
pub fn v_number_by_scan(i: &MonomialIdeal, caps: &Caps) -> Result<VReport> {
    require_proper_nonzero(i)?;
    let lcm = i.lcm();
    if lcm.divisor_count() > caps.witness_budget as u128 {
        return Err(Error::Resource(format!(
            "{} divisors exceed the witness budget",
            lcm.divisor_count()
        )));
    }
    let n = i.nvars();
    let mut divisors = lcm.divisors();
    divisors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    let mut local = BTreeMap::new();
    for f in divisors {
        let c = i.colon(&f);
        if c.is_zero() || c.is_unit() || c.generators().iter().any(|g| g.degree() != 1) {
            continue;
        }
        let p = PrimeSupport::new(c.generators().iter().map(|g| g.support()[0]).collect());
        debug_assert_eq!(p.to_ideal(n), c);
        local.entry(p).or_insert(LocalV {
            v: f.degree(),
            witness: f,
        });
    }
    let v = local
        .values()
        .map(|l| l.v)
        .min()
        .ok_or_else(|| Error::Structural("no witness found".into()))?;
    Ok(VReport { v, local })
}

/// `v(I^𝒫) = v(I)`.
pub fn v_polarization_check(i: &MonomialIdeal) -> Result<bool> {
    let p = polarize(i)?;
    Ok(v_number(i)?.v == v_number(&p.ideal)?.v)
}

/// `[v(I_1), …, v(I_K)]` along the chosen filtration.
pub fn v_sequence(i: &MonomialIdeal, max_k: u32, kind: PowerKind, caps: &Caps) -> Result<Vec<u64>> {
    if max_k < 1 {
        return Err(Error::Domain("sequence length must be at least 1".into()));
    }
    (1..=max_k)
        .map(|k| Ok(v_number_capped(&kind.nth(i, k)?, caps)?.v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{ideal, mono};

    fn c5_edges() -> MonomialIdeal {
        ideal(
            5,
            &[
                &[1, 1, 0, 0, 0],
                &[0, 1, 1, 0, 0],
                &[0, 0, 1, 1, 0],
                &[0, 0, 0, 1, 1],
                &[1, 0, 0, 0, 1],
            ],
        )
    }

    #[test]
    fn maximal_ideal_has_v_zero() {
        for n in 1..5 {
            let r = v_number(&MonomialIdeal::maximal(n)).unwrap();
            assert_eq!(r.v, 0);
            assert_eq!(r.global_witness().1.witness, Monomial::one(n));
        }
    }

    #[test]
    fn two_edge_path() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = v_number(&i).unwrap();
        assert_eq!(r.v, 1);
        let xz = PrimeSupport::new(vec![0, 2]);
        let y = PrimeSupport::new(vec![1]);
        assert_eq!(
            r.local[&xz],
            LocalV {
                v: 1,
                witness: mono(&[0, 1, 0])
            }
        );
        assert_eq!(
            r.local[&y],
            LocalV {
                v: 1,
                witness: mono(&[1, 0, 0])
            }
        );
    }

    #[test]
    fn pentagon() {
        let i = c5_edges();
        let r = v_number(&i).unwrap();
        assert_eq!(r.v, 2);
        let p = PrimeSupport::new(vec![1, 3, 4]);
        assert_eq!(r.local[&p].witness, mono(&[1, 0, 1, 0, 0]));
        assert!(is_witness(&i, &mono(&[1, 0, 1, 0, 0]), &p));
    }

    #[test]
    fn scan_agrees_on_small_cases() {
        let cases = [
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 2]]),
            ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3]]),
            c5_edges(),
            c5_edges().power(2),
        ];
        for i in &cases {
            assert_eq!(
                v_number(i).unwrap(),
                v_number_by_scan(i, &Caps::default()).unwrap(),
                "{i}"
            );
        }
    }

    #[test]
    fn polarization_examples() {
        assert!(v_polarization_check(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap());
        assert!(v_polarization_check(&ideal(2, &[&[3, 0], &[2, 1], &[0, 2]])).unwrap());
        assert!(v_polarization_check(&c5_edges()).unwrap());
    }

    #[test]
    fn polarization_can_lower_v() {
        // (y^3, x^2 y^2): every degree-2 colon is non-prime, while the
        // polarization has the minimal prime (y1) with witness y2 y3.
        let i = ideal(2, &[&[0, 3], &[2, 2]]);
        assert_eq!(v_number_by_scan(&i, &Caps::default()).unwrap().v, 3);
        let p = polarize(&i).unwrap().ideal;
        assert_eq!(v_number_by_scan(&p, &Caps::default()).unwrap().v, 2);
        assert!(!v_polarization_check(&i).unwrap());
    }

    #[test]
    fn sequences() {
        let caps = Caps::default();
        let m = MonomialIdeal::maximal(2);
        assert_eq!(
            v_sequence(&m, 4, PowerKind::Ordinary, &caps).unwrap(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(
            v_sequence(&m, 3, PowerKind::SYMBOLIC_MIN, &caps).unwrap(),
            vec![0, 1, 2]
        );
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let seq = v_sequence(&tri, 3, PowerKind::SYMBOLIC_MIN, &caps).unwrap();
        for (k, v) in seq.iter().enumerate() {
            let a = PowerKind::SYMBOLIC_MIN
                .nth(&tri, k as u32 + 1)
                .unwrap()
                .alpha()
                .unwrap();
            assert!(*v + 1 >= a);
        }
    }

    #[test]
    fn rejects_degenerate() {
        assert!(matches!(
            v_number(&MonomialIdeal::zero(2)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            v_number(&MonomialIdeal::unit(2)),
            Err(Error::Domain(_))
        ));
        let tight = Caps {
            witness_budget: 3,
            ..Caps::default()
        };
        assert!(matches!(
            v_number_by_scan(&c5_edges(), &tight),
            Err(Error::Resource(_))
        ));
    }
}
