//! Polyhedra `{ y ≥ 0 : A·y ≥ b }` over the rationals: exact simplex with
//! Bland's rule and vertex enumeration by basis scan.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// One inequality `coeffs · y ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

/// `{ y ∈ Q^dim : y ≥ 0, c · y ≥ b for every constraint }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolyhedron {
    dim: usize,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub point: Vec<Rational>,
}

impl RationalPolyhedron {
    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Result<Self> {
        if let Some(c) = constraints.iter().find(|c| c.coeffs.len() != dim) {
            return Err(Error::Structural(format!(
                "constraint has {} coefficients in dimension {dim}",
                c.coeffs.len()
            )));
        }
        Ok(RationalPolyhedron { dim, constraints })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn contains(&self, y: &[Rational]) -> bool {
        y.len() == self.dim
            && y.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| dot(&c.coeffs, y) >= c.rhs)
    }

    /// Explicit constraint list including the non-negativity facets
    /// `y_i ≥ 0`, which come last.
    fn all_constraints(&self) -> Vec<Constraint> {
        let mut all = self.constraints.clone();
        for i in 0..self.dim {
            let mut coeffs = vec![Rational::zero(); self.dim];
            coeffs[i] = Rational::one();
            all.push(Constraint {
                coeffs,
                rhs: Rational::zero(),
            });
        }
        all
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense simplex tableau in equality form `T x = rhs`, `x ≥ 0`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        self.rhs[r] = &self.rhs[r] / &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v = &*v - &f * pv;
                }
            }
            self.rhs[i] = &self.rhs[i] - &f * &prhs;
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..self.ncols)
            .map(|j| {
                let mut r = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        r -= &cost[b] * &self.rows[i][j];
                    }
                }
                r
            })
            .collect()
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(Rational::zero(), |acc, (&b, v)| acc + &cost[b] * v)
    }

    /// Minimizes `cost · x` from the current feasible basis. Only columns
    /// with `allowed[j]` may enter. Bland's rule: lowest-index improving
    /// column enters; ratio ties leave by lowest basic column index.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Result<()> {
        loop {
            let red = self.reduced_costs(cost);
            let Some(enter) = (0..self.ncols).find(|&j| allowed[j] && red[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let (r, _) = leave.ok_or(Error::Unbounded)?;
            self.pivot(r, enter);
        }
    }
}

/// Minimizes `objective · y` over the polyhedron with a two-phase exact
/// simplex. Returns the optimal value and an optimal vertex.
pub fn lp_minimize(p: &RationalPolyhedron, objective: &[Rational]) -> Result<LpSolution> {
    if objective.len() != p.dim {
        return Err(Error::Structural(format!(
            "objective has {} entries in dimension {}",
            objective.len(),
            p.dim
        )));
    }
    let n = p.dim;
    let m = p.constraints.len();
    if m == 0 {
        // Only y ≥ 0: the origin is optimal unless some cost is negative.
        if objective.iter().any(Signed::is_negative) {
            return Err(Error::Unbounded);
        }
        return Ok(LpSolution {
            value: Rational::zero(),
            point: vec![Rational::zero(); n],
        });
    }
    // Columns: y (n), surplus s (m), artificial a (m).
    let ncols = n + 2 * m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, c) in p.constraints.iter().enumerate() {
        let flip = c.rhs.is_negative();
        let sign = if flip {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut row = vec![Rational::zero(); ncols];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a * &sign;
        }
        row[n + i] = -sign.clone();
        row[n + m + i] = Rational::one();
        rows.push(row);
        rhs.push(&c.rhs * &sign);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n + m..n + 2 * m).collect(),
        ncols,
    };

    let mut phase1 = vec![Rational::zero(); ncols];
    for c in phase1.iter_mut().skip(n + m) {
        *c = Rational::one();
    }
    let all = vec![true; ncols];
    t.optimize(&phase1, &all)?;
    if t.objective(&phase1).is_positive() {
        return Err(Error::Infeasible);
    }

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n + m {
            match (0..n + m).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    let mut cost = vec![Rational::zero(); ncols];
    cost[..n].clone_from_slice(objective);
    let allowed: Vec<bool> = (0..ncols).map(|j| j < n + m).collect();
    t.optimize(&cost, &allowed)?;

    let mut point = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            point[b] = t.rhs[i].clone();
        }
    }
    Ok(LpSolution {
        value: dot(objective, &point),
        point,
    })
}

/// Solves a square system exactly; `None` if singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v = &*v / &p;
        }
        b[col] = &b[col] / &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let prow = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(&prow) {
                    *v = &*v - &f * pv;
                }
                let pb = b[col].clone();
                b[r] = &b[r] - &f * &pb;
            }
        }
    }
    Some(b)
}

/// Reduces `row` against an echelon basis; returns `None` if it is
/// dependent on the rows already chosen.
fn reduce_against(
    basis: &[(usize, Vec<Rational>)],
    mut row: Vec<Rational>,
) -> Option<(usize, Vec<Rational>)> {
    for (pc, prow) in basis {
        if !row[*pc].is_zero() {
            let f = &row[*pc] / &prow[*pc];
            for (v, pv) in row.iter_mut().zip(prow) {
                *v = &*v - &f * pv;
            }
        }
    }
    let pc = row.iter().position(|v| !v.is_zero())?;
    Some((pc, row))
}

/// All vertices of the polyhedron: the feasible unique solutions of every
/// `dim`-subset of tight constraints (non-negativity facets included).
/// Subsets are grown incrementally and pruned as soon as they become rank
/// deficient.
pub fn enumerate_vertices(p: &RationalPolyhedron, dim_cap: usize) -> Result<Vec<Vec<Rational>>> {
    if p.dim > dim_cap {
        return Err(Error::Resource(format!(
            "vertex enumeration in dimension {} exceeds the cap of {dim_cap}",
            p.dim
        )));
    }
    let all = p.all_constraints();
    let mut found = BTreeSet::new();
    let mut chosen = Vec::with_capacity(p.dim);
    let mut echelon = Vec::with_capacity(p.dim);
    scan(p, &all, 0, &mut chosen, &mut echelon, &mut found);
    Ok(found.into_iter().collect())
}

fn scan(
    p: &RationalPolyhedron,
    all: &[Constraint],
    start: usize,
    chosen: &mut Vec<usize>,
    echelon: &mut Vec<(usize, Vec<Rational>)>,
    found: &mut BTreeSet<Vec<Rational>>,
) {
    if chosen.len() == p.dim {
        let a = chosen.iter().map(|&i| all[i].coeffs.clone()).collect();
        let b = chosen.iter().map(|&i| all[i].rhs.clone()).collect();
        if let Some(y) = solve_square(a, b) {
            if p.contains(&y) {
                found.insert(y);
            }
        }
        return;
    }
    let remaining = p.dim - chosen.len();
    for i in start..=all.len().saturating_sub(remaining) {
        let Some(reduced) = reduce_against(echelon, all[i].coeffs.clone()) else {
            continue;
        };
        chosen.push(i);
        echelon.push(reduced);
        scan(p, all, i + 1, chosen, echelon, found);
        echelon.pop();
        chosen.pop();
    }
}

/// Sum of coordinates.
pub fn coordinate_sum(y: &[Rational]) -> Rational {
    y.iter().fold(Rational::zero(), |acc, v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> Vec<Rational> {
        vec![Rational::one(); n]
    }

    fn ge(coeffs: &[i64], rhs: i64) -> Constraint {
        Constraint {
            coeffs: coeffs.iter().map(|&c| int(c)).collect(),
            rhs: int(rhs),
        }
    }

    fn triangle_sp() -> RationalPolyhedron {
        RationalPolyhedron::new(
            3,
            vec![ge(&[1, 1, 0], 1), ge(&[0, 1, 1], 1), ge(&[1, 0, 1], 1)],
        )
        .unwrap()
    }

    fn x_yz_sp() -> RationalPolyhedron {
        RationalPolyhedron::new(3, vec![ge(&[1, 1, 0], 1), ge(&[1, 0, 1], 1)]).unwrap()
    }

    #[test]
    fn simplex_examples() {
        for n in 1..5 {
            let p = RationalPolyhedron::new(n, vec![ge(&vec![1; n], 1)]).unwrap();
            assert_eq!(lp_minimize(&p, &ones(n)).unwrap().value, int(1));
        }
        let s = lp_minimize(&triangle_sp(), &ones(3)).unwrap();
        assert_eq!(s.value, rat(3, 2));
        assert_eq!(s.point, vec![rat(1, 2); 3]);
        let s = lp_minimize(&x_yz_sp(), &ones(3)).unwrap();
        assert_eq!(s.value, int(1));
        assert_eq!(s.point, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn simplex_reports_infeasible_and_unbounded() {
        // y1 ≥ 2 and -y1 ≥ -1
        let p = RationalPolyhedron::new(1, vec![ge(&[1], 2), ge(&[-1], -1)]).unwrap();
        assert_eq!(lp_minimize(&p, &ones(1)), Err(Error::Infeasible));
        let q = RationalPolyhedron::new(2, vec![ge(&[1, 1], 1)]).unwrap();
        assert_eq!(lp_minimize(&q, &[int(-1), int(0)]), Err(Error::Unbounded));
        assert_eq!(
            lp_minimize(&RationalPolyhedron::new(1, vec![]).unwrap(), &[int(-1)]),
            Err(Error::Unbounded)
        );
    }

    #[test]
    fn simplex_handles_degenerate_and_redundant_rows() {
        // Duplicate rows and a degenerate vertex at the origin corner.
        let p = RationalPolyhedron::new(
            2,
            vec![
                ge(&[1, 1], 1),
                ge(&[1, 1], 1),
                ge(&[2, 2], 2),
                ge(&[1, 0], 0),
            ],
        )
        .unwrap();
        let s = lp_minimize(&p, &[int(1), int(2)]).unwrap();
        assert_eq!(s.value, int(1));
        assert!(p.contains(&s.point));
    }

    #[test]
    fn vertex_examples() {
        for n in 1..5 {
            let p = RationalPolyhedron::new(n, vec![ge(&vec![1; n], 1)]).unwrap();
            let v = enumerate_vertices(&p, 12).unwrap();
            assert_eq!(v.len(), n);
            for (i, pt) in v.iter().enumerate() {
                // lexicographic order puts e_n first
                let mut e = vec![int(0); n];
                e[n - 1 - i] = int(1);
                assert_eq!(pt, &e);
            }
        }
        let v = enumerate_vertices(&triangle_sp(), 12).unwrap();
        let expect: BTreeSet<Vec<Rational>> = [
            vec![rat(1, 2), rat(1, 2), rat(1, 2)],
            vec![int(1), int(1), int(0)],
            vec![int(1), int(0), int(1)],
            vec![int(0), int(1), int(1)],
        ]
        .into_iter()
        .collect();
        assert_eq!(v.into_iter().collect::<BTreeSet<_>>(), expect);
        let v = enumerate_vertices(&x_yz_sp(), 12).unwrap();
        assert_eq!(
            v,
            vec![vec![int(0), int(1), int(1)], vec![int(1), int(0), int(0)]]
        );
    }

    #[test]
    fn vertex_cap() {
        let p = RationalPolyhedron::new(13, vec![ge(&[1; 13], 1)]).unwrap();
        assert!(matches!(
            enumerate_vertices(&p, 12),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn constraint_length_checked() {
        assert!(matches!(
            RationalPolyhedron::new(2, vec![ge(&[1], 1)]),
            Err(Error::Structural(_))
        ));
    }
}
