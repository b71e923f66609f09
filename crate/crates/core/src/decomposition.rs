//! Irreducible decomposition of monomial ideals and the associated and
//! minimal primes derived from it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, Monomial, MonomialIdeal};

/// A monomial prime, identified by the (sorted) variables generating it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport(Vec<usize>);

impl PrimeSupport {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        PrimeSupport(vars)
    }

    pub fn vars(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &PrimeSupport) -> bool {
        self.0.iter().all(|v| other.contains_var(*v))
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::from_vars(self.0.iter().copied(), nvars)
    }

    /// Product of the variables *outside* the prime; saturating by it
    /// localizes at the prime.
    pub fn complement_monomial(&self, nvars: usize) -> Monomial {
        Monomial::from_support((0..nvars).filter(|i| !self.contains_var(*i)), nvars)
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1 << v))
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ support)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    entries: BTreeMap<usize, Exponent>,
}

impl IrreducibleComponent {
    pub fn new(entries: BTreeMap<usize, Exponent>) -> Self {
        debug_assert!(entries.values().all(|&e| e >= 1));
        IrreducibleComponent { entries }
    }

    pub fn entries(&self) -> &BTreeMap<usize, Exponent> {
        &self.entries
    }

    pub fn radical(&self) -> PrimeSupport {
        PrimeSupport::new(self.entries.keys().copied().collect())
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        let gens: Vec<Monomial> = self
            .entries
            .iter()
            .map(|(&i, &e)| Monomial::var(i, nvars).pow(e))
            .collect();
        MonomialIdeal::minimalize(nvars, gens).expect("component variables fit the ring")
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        other
            .entries
            .iter()
            .all(|(i, &b)| self.entries.get(i).is_some_and(|&a| a <= b))
    }
}

fn require_proper_nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::Domain("decomposition of the zero ideal".into()));
    }
    if i.is_unit() {
        return Err(Error::Domain("decomposition of the unit ideal".into()));
    }
    Ok(())
}

/// Irredundant irreducible decomposition, in canonical order.
///
/// Splits on the first minimal generator that is not a pure power, at its
/// first variable: `J + (x_i^a m) = (J + x_i^a) ∩ (J + m)`.
pub fn irreducible_decomposition(i: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    require_proper_nonzero(i)?;
    let mut memo = HashMap::new();
    let mut comps = split(i, &mut memo);
    comps.sort();
    Ok(comps)
}

fn split(
    i: &MonomialIdeal,
    memo: &mut HashMap<MonomialIdeal, Vec<IrreducibleComponent>>,
) -> Vec<IrreducibleComponent> {
    if let Some(c) = memo.get(i) {
        return c.clone();
    }
    let n = i.nvars();
    let pivot = i.generators().iter().find(|g| !g.is_pure_power());
    let result = match pivot {
        None => {
            let entries = i
                .generators()
                .iter()
                .map(|g| {
                    let v = g.support()[0];
                    (v, g.exponent(v))
                })
                .collect();
            vec![IrreducibleComponent::new(entries)]
        }
        Some(m) => {
            let v = m.support()[0];
            let a = m.exponent(v);
            let pure = Monomial::var(v, n).pow(a);
            let rest = m.with_exponent(v, 0);
            let mut left = i.generators().to_vec();
            left.push(pure);
            let mut right = i.generators().to_vec();
            right.push(rest);
            let mut comps = split(&MonomialIdeal::minimalize_unchecked(n, left), memo);
            comps.extend(split(&MonomialIdeal::minimalize_unchecked(n, right), memo));
            irredundant(comps)
        }
    };
    memo.insert(i.clone(), result.clone());
    result
}

/// Drops duplicates and every component containing another one.
fn irredundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(a, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(b, d)| a != b && c.contains(d))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect()
}

/// Associated primes: the radicals of the irredundant irreducible components.
pub fn associated_primes(i: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    let mut primes: Vec<PrimeSupport> = irreducible_decomposition(i)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Inclusion-minimal associated primes.
pub fn minimal_primes(i: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    Ok(minimal_elements(associated_primes(i)?))
}

pub(crate) fn minimal_elements(primes: Vec<PrimeSupport>) -> Vec<PrimeSupport> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

/// `max { α(p) : p ∈ Min(I) }`. Monomial primes are generated by variables,
/// so this is always 1; it is computed rather than assumed.
pub fn c_constant(i: &MonomialIdeal) -> Result<u64> {
    let n = i.nvars();
    minimal_primes(i)?
        .iter()
        .map(|p| p.to_ideal(n).alpha())
        .try_fold(0, |acc, a| a.map(|a| acc.max(a)))
}
