//! Polarization, Stanley–Reisner complexes, graded Betti numbers of `R/I`,
//! Castelnuovo–Mumford regularity and the Cohen–Macaulay test.
//!
//! Betti numbers of square-free ideals come from Hochster's formula,
//! restricted to vertex sets that are unions of generator supports (every
//! other restriction is a cone). [`koszul_betti_numbers`] computes the same
//! table for arbitrary monomial ideals from upper Koszul simplicial
//! complexes and serves as an independent route.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::homology::{full_mask, reduced_homology_of_faces, SimplicialComplex};
use crate::monomial::{Exponent, Monomial, MonomialIdeal};

/// A polarized ideal together with the origin of each new variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `names[t] = (j, p)`: new variable `t` is the `p`-th copy (1-based)
    /// of original variable `j`.
    pub names: Vec<(usize, u32)>,
}

impl Polarization {
    pub fn index_of(&self, var: usize, copy: u32) -> Option<usize> {
        self.names.iter().position(|&n| n == (var, copy))
    }
}

/// Replaces each `x_j^a` by `x_{j,1} ⋯ x_{j,a}`. Every original variable
/// keeps at least one copy, so a square-free ideal is returned unchanged.
pub fn polarize(i: &MonomialIdeal) -> Result<Polarization> {
    if i.is_zero() {
        return Err(Error::Domain("polarization of the zero ideal".into()));
    }
    let n = i.nvars();
    let mut width = vec![1u32; n];
    for g in i.generators() {
        for (j, &e) in g.exponents().iter().enumerate() {
            width[j] = width[j].max(e);
        }
    }
    let mut offset = Vec::with_capacity(n);
    let mut names = Vec::new();
    for (j, &w) in width.iter().enumerate() {
        offset.push(names.len());
        names.extend((1..=w).map(|p| (j, p)));
    }
    let total = names.len();
    let gens = i.generators().iter().map(|g| {
        let mut exps = vec![0; total];
        for (j, &e) in g.exponents().iter().enumerate() {
            for p in 0..e as usize {
                exps[offset[j] + p] = 1;
            }
        }
        Monomial::new(exps)
    });
    Ok(Polarization {
        ideal: MonomialIdeal::minimalize(total, gens)?,
        names,
    })
}

fn require_squarefree(i: &MonomialIdeal) -> Result<()> {
    if !i.is_squarefree() {
        return Err(Error::Unsupported(
            "expected a square-free ideal; polarize first".into(),
        ));
    }
    if i.nvars() > 64 {
        return Err(Error::Resource(
            "simplicial complexes are limited to 64 vertices".into(),
        ));
    }
    Ok(())
}

fn generator_masks(i: &MonomialIdeal) -> Vec<u64> {
    i.generators().iter().map(Monomial::support_mask).collect()
}

/// All subsets of `w` containing no mask from `nonfaces`, grouped by size.
fn independent_faces(w: u64, nonfaces: &[u64]) -> Vec<Vec<u64>> {
    independent_faces_within(w, nonfaces, usize::MAX).expect("unbounded")
}

/// As [`independent_faces`], giving up once more than `limit` faces appear.
fn independent_faces_within(w: u64, nonfaces: &[u64], limit: usize) -> Option<Vec<Vec<u64>>> {
    let relevant: Vec<u64> = nonfaces.iter().copied().filter(|&g| g & w == g).collect();
    if relevant.contains(&0) {
        return Some(Vec::new());
    }
    let verts: Vec<u64> = (0..64)
        .filter(|b| w >> b & 1 == 1)
        .map(|b| 1u64 << b)
        .collect();
    let mut out: Vec<Vec<u64>> = vec![Vec::new(); verts.len() + 1];
    let mut count = 0usize;
    let mut stack = vec![(0u64, 0usize)];
    while let Some((face, next)) = stack.pop() {
        count += 1;
        if count > limit {
            return None;
        }
        out[face.count_ones() as usize].push(face);
        for (k, &v) in verts.iter().enumerate().skip(next) {
            let f = face | v;
            if !relevant.iter().any(|&g| g & f == g) {
                stack.push((f, k + 1));
            }
        }
    }
    while out.len() > 1 && out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    for level in &mut out {
        level.sort_unstable();
    }
    Some(out)
}

/// The complex whose faces are the square-free monomials outside `I`.
pub fn stanley_reisner_complex(i: &MonomialIdeal) -> Result<SimplicialComplex> {
    require_squarefree(i)?;
    let n = i.nvars();
    let faces: HashSet<u64> = independent_faces(full_mask(n), &generator_masks(i))
        .into_iter()
        .flatten()
        .collect();
    let maximal = faces
        .iter()
        .copied()
        .filter(|&f| (0..n).all(|v| f >> v & 1 == 1 || !faces.contains(&(f | 1 << v))));
    Ok(SimplicialComplex::from_facets(
        n,
        maximal.collect::<Vec<_>>(),
    ))
}

/// Graded Betti numbers `β_{i,j}(R/I)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    fn add(&mut self, i: usize, j: u64, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`; `None` for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `i,j,beta` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,beta\n");
        for ((i, j), b) in self.entries() {
            s.push_str(&format!("{i},{j},{b}\n"));
        }
        s
    }
}

/// Closure of the generator supports under union.
fn union_lattice(masks: &[u64]) -> BTreeSet<u64> {
    let mut lattice: BTreeSet<u64> = BTreeSet::new();
    for &g in masks {
        let grown: Vec<u64> = lattice.iter().map(|&s| s | g).collect();
        lattice.insert(g);
        lattice.extend(grown);
    }
    lattice
}

/// Hochster's formula: `β_{i,|W|}(R/I) = Σ_W dim H̃_{|W|-i-1}(Δ_W)`.
///
/// When the Alexander dual of `Δ_W` inside the simplex on `W`,
/// `K^W = { F ⊆ W : W \ F ∈ I }`, is the smaller complex, the same number is
/// read off as `dim H̃_{i-2}(K^W)`.
pub fn betti_numbers(i: &MonomialIdeal, caps: &Caps) -> Result<BettiTable> {
    require_squarefree(i)?;
    if i.nvars() > caps.homology_vars {
        return Err(Error::Resource(format!(
            "{} variables exceed the homology cap of {}",
            i.nvars(),
            caps.homology_vars
        )));
    }
    let mut table = BettiTable::default();
    if i.is_unit() {
        return Ok(table);
    }
    table.add(0, 0, 1);
    let n = i.nvars();
    let masks = generator_masks(i);
    for w in union_lattice(&masks) {
        let size = w.count_ones() as usize;
        let dual_facets: Vec<u64> = masks
            .iter()
            .filter(|&&g| g & w == g)
            .map(|&g| w & !g)
            .collect();
        let dual_bound = dual_facets
            .iter()
            .map(|f| 1usize.checked_shl(f.count_ones()).unwrap_or(usize::MAX))
            .fold(0usize, usize::saturating_add);
        match independent_faces_within(w, &masks, dual_bound) {
            Some(faces) => {
                for (s, &rank) in reduced_homology_of_faces(&faces).iter().enumerate() {
                    // s = d + 1 and i = |W| - d - 1 = |W| - s.
                    table.add(size - s, size as u64, rank);
                }
            }
            None => {
                let dual = SimplicialComplex::from_facets(n, dual_facets);
                for (s, &rank) in dual.reduced_homology().iter().enumerate() {
                    // s = (i - 2) + 1.
                    table.add(s + 1, size as u64, rank);
                }
            }
        }
    }
    Ok(table)
}

/// Hochster's formula evaluated on `Δ_W` alone, never switching to the dual.
pub fn betti_numbers_direct(i: &MonomialIdeal, caps: &Caps) -> Result<BettiTable> {
    require_squarefree(i)?;
    if i.nvars() > caps.homology_vars {
        return Err(Error::Resource(format!(
            "{} variables exceed the homology cap of {}",
            i.nvars(),
            caps.homology_vars
        )));
    }
    let mut table = BettiTable::default();
    if i.is_unit() {
        return Ok(table);
    }
    table.add(0, 0, 1);
    let masks = generator_masks(i);
    for w in union_lattice(&masks) {
        let size = w.count_ones() as usize;
        for (s, &rank) in reduced_homology_of_faces(&independent_faces(w, &masks))
            .iter()
            .enumerate()
        {
            table.add(size - s, size as u64, rank);
        }
    }
    Ok(table)
}

/// Betti numbers of `R/I` for any monomial ideal through the upper Koszul
/// complexes `K^b(I) = { F ⊆ supp b : x^{b - F} ∈ I }`, with `b` ranging
/// over the lcm lattice: `β_{i+1,b}(R/I) = dim H̃_{i-1}(K^b(I))`.
pub fn koszul_betti_numbers(i: &MonomialIdeal, caps: &Caps) -> Result<BettiTable> {
    let mut table = BettiTable::default();
    if i.is_unit() {
        return Ok(table);
    }
    table.add(0, 0, 1);
    if i.is_zero() {
        return Ok(table);
    }
    let n = i.nvars();
    let lattice = lcm_lattice(i, caps)?;
    for b in lattice {
        let supp: Vec<usize> = (0..n).filter(|&v| b.exponent(v) > 0).collect();
        let mut faces: Vec<Vec<u64>> = vec![Vec::new(); supp.len() + 1];
        for f in 0u64..1 << supp.len() {
            let mut exps: Vec<Exponent> = b.exponents().to_vec();
            for (t, &v) in supp.iter().enumerate() {
                if f >> t & 1 == 1 {
                    exps[v] -= 1;
                }
            }
            if i.contains_monomial(&Monomial::new(exps)) {
                faces[f.count_ones() as usize].push(f);
            }
        }
        while faces.len() > 1 && faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        let h = reduced_homology_of_faces(&faces);
        for (s, &rank) in h.iter().enumerate() {
            // s = (i - 1) + 1, so R/I sits in homological degree s + 1.
            table.add(s + 1, b.degree(), rank);
        }
    }
    Ok(table)
}

/// Elements of the lcm lattice of the minimal generators, found by scanning
/// divisors of the global lcm.
fn lcm_lattice(i: &MonomialIdeal, caps: &Caps) -> Result<Vec<Monomial>> {
    let lcm = i.lcm();
    let count = lcm.divisor_count();
    if count > caps.witness_budget as u128 {
        return Err(Error::Resource(format!(
            "{count} divisors of the lcm exceed the search budget"
        )));
    }
    let mut out = Vec::new();
    for d in lcm.divisors() {
        if d.is_one() {
            continue;
        }
        let below = i
            .generators()
            .iter()
            .filter(|g| g.divides(&d))
            .fold(None::<Monomial>, |acc, g| {
                Some(acc.map_or_else(|| g.clone(), |a| a.lcm(g)))
            });
        if below.as_ref() == Some(&d) {
            out.push(d);
        }
    }
    Ok(out)
}

/// `reg(R/I)` of a proper nonzero ideal, computed on its polarization.
pub fn regularity(i: &MonomialIdeal, caps: &Caps) -> Result<u64> {
    require_proper_nonzero(i)?;
    let p = polarize(i)?;
    let table = betti_numbers(&p.ideal, caps)?;
    Ok(table.regularity().expect("R/I is nonzero") as u64)
}

/// `reg(R/I)` from [`koszul_betti_numbers`], without polarizing.
pub fn regularity_koszul(i: &MonomialIdeal, caps: &Caps) -> Result<u64> {
    require_proper_nonzero(i)?;
    let table = koszul_betti_numbers(i, caps)?;
    Ok(table.regularity().expect("R/I is nonzero") as u64)
}

fn require_proper_nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() || i.is_unit() {
        return Err(Error::Domain(
            "regularity needs a proper nonzero ideal".into(),
        ));
    }
    Ok(())
}

/// Reisner's criterion on the Stanley–Reisner complex: every link has
/// vanishing reduced homology below its top dimension.
pub fn is_cohen_macaulay(i: &MonomialIdeal) -> Result<bool> {
    let delta = stanley_reisner_complex(i)?;
    if !delta.is_pure() {
        return Ok(false);
    }
    for face in delta.faces_by_size().into_iter().flatten() {
        let link = delta.link(face);
        let top = link.dim().unwrap_or(-1);
        let h = link.reduced_homology();
        if h.iter().take((top + 1).max(0) as usize).any(|&r| r > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal;

    fn caps() -> Caps {
        Caps::default()
    }

    fn c5_edges() -> MonomialIdeal {
        let mut gens = Vec::new();
        for k in 0..5 {
            let mut e = vec![0; 5];
            e[k] = 1;
            e[(k + 1) % 5] = 1;
            gens.push(Monomial::new(e));
        }
        MonomialIdeal::minimalize(5, gens).unwrap()
    }

    #[test]
    fn polarization_examples() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let p = polarize(&tri).unwrap();
        assert_eq!(p.ideal, tri);
        assert_eq!(p.names, vec![(0, 1), (1, 1), (2, 1)]);

        let p = polarize(&ideal(1, &[&[2]])).unwrap();
        assert_eq!(p.ideal, ideal(2, &[&[1, 1]]));

        // (x^2, xy) → (x1 x2, x1 y1) in variables x1, x2, y1.
        let p = polarize(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(p.names, vec![(0, 1), (0, 2), (1, 1)]);
        assert_eq!(p.ideal, ideal(3, &[&[1, 1, 0], &[1, 0, 1]]));
        assert_eq!(p.index_of(1, 1), Some(2));
    }

    #[test]
    fn stanley_reisner_examples() {
        let c = stanley_reisner_complex(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(c.facets(), &[0b01, 0b10]);
        let c = stanley_reisner_complex(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap();
        assert_eq!(c.facets(), &[0b001, 0b010, 0b100]);
        let c = stanley_reisner_complex(&c5_edges()).unwrap();
        assert_eq!(c.facets().len(), 5);
        assert!(c.facets().iter().all(|f| f.count_ones() == 2));
        assert!(matches!(
            stanley_reisner_complex(&ideal(1, &[&[2]])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn betti_examples() {
        let b = betti_numbers(&ideal(1, &[&[1]]), &caps()).unwrap();
        assert_eq!(
            b.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 1), 1)]
        );
        let b = betti_numbers(&ideal(2, &[&[1, 1]]), &caps()).unwrap();
        assert_eq!(
            b.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 1)]
        );
        let b = betti_numbers(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), &caps()).unwrap();
        assert_eq!(
            b.entries().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]
        );
        assert_eq!(b.to_csv(), "i,j,beta\n0,0,1\n1,2,2\n2,3,1\n");
    }

    #[test]
    fn betti_caps_and_domain() {
        let tight = Caps {
            homology_vars: 2,
            ..Caps::default()
        };
        assert!(matches!(
            betti_numbers(&ideal(3, &[&[1, 1, 1]]), &tight),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            betti_numbers(&ideal(1, &[&[2]]), &caps()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn regularity_examples() {
        for n in 1..5 {
            assert_eq!(regularity(&MonomialIdeal::maximal(n), &caps()).unwrap(), 0);
        }
        assert_eq!(regularity(&ideal(2, &[&[1, 1]]), &caps()).unwrap(), 1);
        assert_eq!(regularity(&c5_edges(), &caps()).unwrap(), 2);
        assert_eq!(regularity(&ideal(1, &[&[3]]), &caps()).unwrap(), 2);
        assert!(matches!(
            regularity(&MonomialIdeal::zero(2), &caps()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn koszul_route_agrees() {
        let cases = [
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
            c5_edges(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]),
            ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3]]),
            MonomialIdeal::maximal(3).power(3),
        ];
        for i in &cases {
            let p = polarize(i).unwrap();
            assert_eq!(
                koszul_betti_numbers(i, &caps()).unwrap(),
                betti_numbers(&p.ideal, &caps()).unwrap(),
                "{i}"
            );
            assert_eq!(
                regularity_koszul(i, &caps()).unwrap(),
                regularity(i, &caps()).unwrap()
            );
        }
    }

    #[test]
    fn dual_switch_agrees_with_direct_scan() {
        let cases = [
            c5_edges(),
            ideal(
                5,
                &[
                    &[1, 1, 1, 0, 0],
                    &[0, 0, 1, 1, 1],
                    &[1, 0, 0, 1, 1],
                    &[0, 1, 0, 1, 0],
                ],
            ),
            ideal(
                4,
                &[&[1, 1, 1, 0], &[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1]],
            ),
            ideal(3, &[&[1, 1, 1]]),
        ];
        for i in &cases {
            assert_eq!(
                betti_numbers(i, &caps()).unwrap(),
                betti_numbers_direct(i, &caps()).unwrap(),
                "{i}"
            );
        }
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(is_cohen_macaulay(&ideal(2, &[&[1, 1]])).unwrap());
        // C4: 1-2-3-4-1
        let c4 = ideal(
            4,
            &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]],
        );
        assert!(!is_cohen_macaulay(&c4).unwrap());
        // P4: a-b-c-d
        let p4 = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert!(is_cohen_macaulay(&p4).unwrap());
        assert!(is_cohen_macaulay(&c5_edges()).unwrap());
    }
}
