//! Finite simplicial complexes on at most 64 vertices and their reduced
//! homology over the rationals.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// A simplicial complex stored by its facets, each a vertex bitmask.
///
/// No facets at all is the void complex; the single facet `∅` is the
/// irrelevant complex `{∅}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from any generating family of faces; non-maximal
    /// members are dropped.
    pub fn from_facets(nverts: usize, facets: impl IntoIterator<Item = u64>) -> Self {
        assert!(
            nverts <= 64,
            "simplicial complexes are limited to 64 vertices"
        );
        let mut fs: Vec<u64> = facets.into_iter().collect();
        for f in &fs {
            assert!(
                nverts == 64 || f >> nverts == 0,
                "facet vertex out of range"
            );
        }
        fs.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
        let mut kept: Vec<u64> = Vec::new();
        for f in fs {
            if !kept.iter().any(|&g| f & g == f) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        SimplicialComplex {
            nverts,
            facets: kept,
        }
    }

    pub fn void(nverts: usize) -> Self {
        SimplicialComplex {
            nverts,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(nverts: usize) -> Self {
        SimplicialComplex {
            nverts,
            facets: vec![0],
        }
    }

    pub fn simplex(nverts: usize) -> Self {
        SimplicialComplex::from_facets(nverts, [full_mask(nverts)])
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    /// `Δ_W = { F ∈ Δ : F ⊆ W }`.
    pub fn induced(&self, w: u64) -> Self {
        SimplicialComplex::from_facets(self.nverts, self.facets.iter().map(|&f| f & w))
    }

    /// `lk F = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`; void when `F ∉ Δ`.
    pub fn link(&self, face: u64) -> Self {
        SimplicialComplex::from_facets(
            self.nverts,
            self.facets
                .iter()
                .filter(|&&f| f & face == face)
                .map(|&f| f & !face),
        )
    }

    /// Every face, grouped by size (index 0 holds `∅`).
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let mut all = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let top = self.facets.iter().map(|f| f.count_ones() as usize).max();
        let mut out = vec![Vec::new(); top.map_or(0, |t| t + 1)];
        for face in all {
            out[face.count_ones() as usize].push(face);
        }
        out
    }

    /// Rank of `H̃_d(Δ; Q)`; zero outside `-1 ≤ d ≤ dim Δ`.
    pub fn reduced_homology_rank(&self, d: i64) -> u64 {
        let h = self.reduced_homology();
        if d < -1 {
            return 0;
        }
        h.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Ranks of `H̃_d` for `d = -1, 0, …, dim Δ`; index `d + 1`.
    pub fn reduced_homology(&self) -> Vec<u64> {
        reduced_homology_of_faces(&self.faces_by_size())
    }

    /// `Σ_d (-1)^d f_d` over `d ≥ -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .map(|(s, fs)| {
                if s % 2 == 1 {
                    fs.len() as i64
                } else {
                    -(fs.len() as i64)
                }
            })
            .sum()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.facets.is_empty() {
            return write!(f, "void");
        }
        let list: Vec<String> = self
            .facets
            .iter()
            .map(|&m| {
                let vs: Vec<String> = (0..self.nverts)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "<{}>", list.join(" "))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reduced homology ranks from a face list grouped by size. An empty list
/// is the void complex.
pub(crate) fn reduced_homology_of_faces(faces: &[Vec<u64>]) -> Vec<u64> {
    if faces.is_empty() || faces[0].is_empty() {
        return Vec::new();
    }
    // boundary_rank[s]: rank of the map from faces of size s to size s - 1.
    let mut boundary_rank = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        boundary_rank[s] = boundary_matrix_rank(&faces[s], &faces[s - 1]);
    }
    (0..faces.len())
        .map(|s| (faces[s].len() - boundary_rank[s] - boundary_rank[s + 1]) as u64)
        .collect()
}

fn boundary_matrix_rank(upper: &[u64], lower: &[u64]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, u32> = lower
        .iter()
        .enumerate()
        .map(|(k, &f)| (f, k as u32))
        .collect();
    let rows: Vec<Vec<(u32, i64)>> = upper
        .iter()
        .map(|&f| {
            let mut row = Vec::with_capacity(f.count_ones() as usize);
            let mut rest = f;
            let mut t = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let sign = if t % 2 == 0 { 1 } else { -1 };
                row.push((index[&(f ^ bit)], sign));
                t += 1;
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    integer_rank(&rows)
}

/// Exact rank of a sparse integer matrix given by rows of `(column, value)`
/// pairs sorted by column.
pub fn integer_rank(rows: &[Vec<(u32, i64)>]) -> usize {
    let small: Vec<Vec<(u32, i128)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect())
        .collect();
    if let Some(r) = echelon_rank(small) {
        return r;
    }
    let big: Vec<Vec<(u32, BigInt)>> = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    echelon_rank(big).expect("big integers do not overflow")
}

trait Scalar: Clone + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a·x - b·y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().bits() == 1
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

/// Incremental fraction-free row echelon form. Each incoming row is reduced
/// against the stored pivots and, if anything survives, becomes a new pivot.
fn echelon_rank<T: Scalar>(rows: Vec<Vec<(u32, T)>>) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for mut row in rows {
        while let Some((lead, _)) = row.first() {
            match pivots.get(lead) {
                None => break,
                Some(p) => row = eliminate(&row, p)?,
            }
        }
        if let Some(&(lead, _)) = row.first() {
            pivots.insert(lead, row);
        }
    }
    Some(pivots.len())
}

/// `a·row - b·p` with `a/b = p₀/row₀` in lowest terms, then divided by the
/// content of the result. Both inputs share their leading column.
fn eliminate<T: Scalar>(row: &[(u32, T)], p: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let g = p[0].1.gcd(&row[0].1);
    let a = p[0].1.div_exact(&g);
    let b = row[0].1.div_exact(&g);
    let zero = T::zero();
    let mut out: Vec<(u32, T)> = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map_or(u32::MAX, |e| e.0);
        let cj = p.get(j).map_or(u32::MAX, |e| e.0);
        let (col, x, y) = if ci < cj {
            i += 1;
            (ci, &row[i - 1].1, &zero)
        } else if cj < ci {
            j += 1;
            (cj, &zero, &p[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (ci, &row[i - 1].1, &p[j - 1].1)
        };
        let v = T::cross(&a, x, &b, y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    if let Some(first) = out.first() {
        let mut content = first.1.clone();
        for e in &out[1..] {
            if content.is_unit() {
                break;
            }
            content = content.gcd(&e.1);
        }
        if !content.is_unit() {
            for e in &mut out {
                e.1 = e.1.div_exact(&content);
            }
        }
    }
    Some(out)
}
