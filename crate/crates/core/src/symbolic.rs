//! Symbolic powers, persistence properties, and the symbolic polyhedron of
//! square-free monomial ideals with its two vertex statistics (Waldschmidt
//! constant and `δ`).

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::decomposition::{associated_primes, minimal_primes, PrimeSupport};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyhedron::{
    coordinate_sum, enumerate_vertices, lp_minimize, Constraint, Rational, RationalPolyhedron,
};

/// Which primes the localizations range over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolicPowerVariant {
    /// Minimal primes of `I`.
    Min,
    /// All associated primes of `I`.
    Ass,
}

/// The filtrations the crate knows how to walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PowerKind {
    Ordinary,
    Symbolic(SymbolicPowerVariant),
}

impl PowerKind {
    pub const SYMBOLIC_MIN: PowerKind = PowerKind::Symbolic(SymbolicPowerVariant::Min);
    pub const SYMBOLIC_ASS: PowerKind = PowerKind::Symbolic(SymbolicPowerVariant::Ass);

    /// The `k`-th member of the filtration (`k ≥ 1`).
    pub fn nth(self, i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
        match self {
            PowerKind::Ordinary => {
                if k < 1 {
                    return Err(Error::Domain("filtration index must be at least 1".into()));
                }
                Ok(i.power(k))
            }
            PowerKind::Symbolic(v) => symbolic_power(i, k, v),
        }
    }
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PowerKind::Ordinary => "ordinary",
            PowerKind::Symbolic(SymbolicPowerVariant::Min) => "symbolic-min",
            PowerKind::Symbolic(SymbolicPowerVariant::Ass) => "symbolic-ass",
        })
    }
}

impl FromStr for PowerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(PowerKind::Ordinary),
            "symbolic-min" => Ok(PowerKind::SYMBOLIC_MIN),
            "symbolic-ass" => Ok(PowerKind::SYMBOLIC_ASS),
            other => Err(Error::Domain(format!("unknown power type `{other}`"))),
        }
    }
}

fn primes_for(i: &MonomialIdeal, variant: SymbolicPowerVariant) -> Result<Vec<PrimeSupport>> {
    match variant {
        SymbolicPowerVariant::Min => minimal_primes(i),
        SymbolicPowerVariant::Ass => associated_primes(i),
    }
}

/// `I^(k) = ⋂_P (I^k R_P ∩ R)` over the minimal or associated primes.
///
/// For a monomial prime `P`, `I^k R_P ∩ R` is the saturation of `I^k` by
/// the product of the variables outside `P`.
pub fn symbolic_power(
    i: &MonomialIdeal,
    k: u32,
    variant: SymbolicPowerVariant,
) -> Result<MonomialIdeal> {
    if k < 1 {
        return Err(Error::Domain(
            "symbolic power index must be at least 1".into(),
        ));
    }
    let primes = primes_for(i, variant)?;
    let n = i.nvars();
    let ik = i.power(k);
    let locals: Vec<MonomialIdeal> = primes
        .iter()
        .map(|p| ik.saturate(&p.complement_monomial(n)))
        .collect();
    MonomialIdeal::intersect_all(&locals)
}

/// `⋂_{P ∈ Min(I)} P^k`. Agrees with [`symbolic_power`] only for
/// square-free `I`.
pub fn symbolic_power_by_prime_powers(i: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    if k < 1 {
        return Err(Error::Domain(
            "symbolic power index must be at least 1".into(),
        ));
    }
    let n = i.nvars();
    let powers: Vec<MonomialIdeal> = minimal_primes(i)?
        .iter()
        .map(|p| p.to_ideal(n).power(k))
        .collect();
    MonomialIdeal::intersect_all(&powers)
}

/// `(I^(k) : I^(1)) = I^(k-1)` for every `2 ≤ k ≤ max_k`.
pub fn has_symbolic_strong_persistence_upto(
    i: &MonomialIdeal,
    max_k: u32,
    variant: SymbolicPowerVariant,
) -> Result<bool> {
    if max_k < 2 {
        return Err(Error::Domain("persistence window needs K ≥ 2".into()));
    }
    let powers = (1..=max_k)
        .map(|k| symbolic_power(i, k, variant))
        .collect::<Result<Vec<_>>>()?;
    for k in 2..=max_k as usize {
        if powers[k - 1].colon_ideal(&powers[0])? != powers[k - 2] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(I^{k+1} : I) = I^k` for every `1 ≤ k < max_k`.
pub fn has_strong_persistence_upto(i: &MonomialIdeal, max_k: u32) -> Result<bool> {
    if max_k < 2 {
        return Err(Error::Domain("persistence window needs K ≥ 2".into()));
    }
    let mut prev = i.clone();
    for k in 1..max_k {
        let next = prev.product(i)?;
        if next.colon_ideal(i)? != prev {
            return Ok(false);
        }
        prev = next;
        let _ = k;
    }
    Ok(true)
}

fn require_squarefree(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() || i.is_unit() {
        return Err(Error::Domain(
            "symbolic polyhedron needs a proper nonzero ideal".into(),
        ));
    }
    if !i.is_squarefree() {
        return Err(Error::Unsupported(
            "symbolic polyhedra are only implemented for square-free ideals".into(),
        ));
    }
    Ok(())
}

/// `{ y ≥ 0 : Σ_{i ∈ P} y_i ≥ 1 for every P ∈ Min(I) }` for square-free `I`.
pub fn symbolic_polyhedron(i: &MonomialIdeal) -> Result<RationalPolyhedron> {
    require_squarefree(i)?;
    let n = i.nvars();
    let constraints = minimal_primes(i)?
        .iter()
        .map(|p| {
            let mut coeffs = vec![Rational::from_integer(0.into()); n];
            for &v in p.vars() {
                coeffs[v] = Rational::one();
            }
            Constraint {
                coeffs,
                rhs: Rational::one(),
            }
        })
        .collect();
    RationalPolyhedron::new(n, constraints)
}

/// Waldschmidt constant of a square-free ideal: the least coordinate sum on
/// its symbolic polyhedron.
pub fn waldschmidt_constant(i: &MonomialIdeal) -> Result<Rational> {
    let p = symbolic_polyhedron(i)?;
    Ok(lp_minimize(&p, &vec![Rational::one(); p.dim()])?.value)
}

/// Largest coordinate sum over the vertices of the symbolic polyhedron.
pub fn delta_invariant(i: &MonomialIdeal, vertex_dim_cap: usize) -> Result<Rational> {
    let p = symbolic_polyhedron(i)?;
    let verts = enumerate_vertices(&p, vertex_dim_cap)?;
    verts
        .iter()
        .map(|v| coordinate_sum(v))
        .max()
        .ok_or_else(|| Error::UndefinedInvariant("symbolic polyhedron without vertices".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{ideal, mono};
    use crate::polyhedron::{int, rat};

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn maximal_ideal_symbolic_equals_ordinary() {
        for n in 1..4 {
            let m = MonomialIdeal::maximal(n);
            for k in 1..4 {
                assert_eq!(
                    symbolic_power(&m, k, SymbolicPowerVariant::Min).unwrap(),
                    m.power(k)
                );
                assert_eq!(
                    symbolic_power(&m, k, SymbolicPowerVariant::Ass).unwrap(),
                    m.power(k)
                );
            }
        }
    }

    #[test]
    fn triangle_second_symbolic_power() {
        let i = triangle();
        let s2 = symbolic_power(&i, 2, SymbolicPowerVariant::Min).unwrap();
        assert!(s2.contains_monomial(&mono(&[1, 1, 1])));
        assert!(!i.power(2).contains_monomial(&mono(&[1, 1, 1])));
        assert_eq!(s2.alpha().unwrap(), 3);
        assert_eq!(i.power(2).alpha().unwrap(), 4);
        assert_eq!(s2, symbolic_power_by_prime_powers(&i, 2).unwrap());
    }

    #[test]
    fn symbolic_power_domain_errors() {
        assert!(matches!(
            symbolic_power(&triangle(), 0, SymbolicPowerVariant::Min),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            symbolic_power(&MonomialIdeal::zero(2), 1, SymbolicPowerVariant::Min),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn variants_differ_with_embedded_primes() {
        // (x^2, xy): Min = {(x)}, Ass adds (x, y).
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            symbolic_power(&i, 1, SymbolicPowerVariant::Min).unwrap(),
            ideal(2, &[&[1, 0]])
        );
        assert_eq!(symbolic_power(&i, 1, SymbolicPowerVariant::Ass).unwrap(), i);
    }

    #[test]
    fn persistence_examples() {
        assert!(
            has_symbolic_strong_persistence_upto(&triangle(), 4, SymbolicPowerVariant::Min)
                .unwrap()
        );
        assert!(has_symbolic_strong_persistence_upto(
            &MonomialIdeal::maximal(3),
            4,
            SymbolicPowerVariant::Min
        )
        .unwrap());
        assert!(has_strong_persistence_upto(&MonomialIdeal::maximal(2), 4).unwrap());
        assert!(has_strong_persistence_upto(&triangle(), 4).unwrap());
        assert!(matches!(
            has_strong_persistence_upto(&triangle(), 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn polyhedron_examples() {
        let p = symbolic_polyhedron(&MonomialIdeal::maximal(4)).unwrap();
        assert_eq!(p.constraints().len(), 1);
        assert_eq!(p.constraints()[0].coeffs, vec![int(1); 4]);
        assert_eq!(
            symbolic_polyhedron(&triangle())
                .unwrap()
                .constraints()
                .len(),
            3
        );
        let p = symbolic_polyhedron(&ideal(3, &[&[1, 0, 0], &[0, 1, 1]])).unwrap();
        let rows: Vec<_> = p.constraints().iter().map(|c| c.coeffs.clone()).collect();
        assert_eq!(
            rows,
            vec![vec![int(1), int(1), int(0)], vec![int(1), int(0), int(1)]]
        );
        assert!(matches!(
            symbolic_polyhedron(&ideal(2, &[&[2, 0]])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn waldschmidt_and_delta_examples() {
        assert_eq!(
            waldschmidt_constant(&MonomialIdeal::maximal(3)).unwrap(),
            int(1)
        );
        assert_eq!(waldschmidt_constant(&triangle()).unwrap(), rat(3, 2));
        assert_eq!(
            delta_invariant(&MonomialIdeal::maximal(3), 12).unwrap(),
            int(1)
        );
        assert_eq!(delta_invariant(&triangle(), 12).unwrap(), int(2));
        let xyz = ideal(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(waldschmidt_constant(&xyz).unwrap(), int(1));
        assert_eq!(delta_invariant(&xyz, 12).unwrap(), int(2));
        assert!(matches!(
            waldschmidt_constant(&ideal(2, &[&[2, 1]])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn power_kind_parse() {
        for s in ["ordinary", "symbolic-min", "symbolic-ass"] {
            assert_eq!(s.parse::<PowerKind>().unwrap().to_string(), s);
        }
        assert!("symbolic".parse::<PowerKind>().is_err());
    }
}
