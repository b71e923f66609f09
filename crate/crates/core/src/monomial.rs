//! Monomials and monomial ideals over a fixed, ordered set of variables.
//!
//! A [`MonomialIdeal`] is always stored by its minimal generating set, sorted
//! lexicographically on exponent tuples, so structural equality of two values
//! is ideal equality.

use std::fmt;

use crate::error::{Error, Result};

/// Exponents are machine integers with checked arithmetic: overflow panics
/// instead of wrapping.
pub type Exponent = u32;

fn add_exp(a: Exponent, b: Exponent) -> Exponent {
    a.checked_add(b).expect("monomial exponent overflow")
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent tuple.
///
/// The derived ordering is lexicographic on the exponent tuple; it is the
/// canonical order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[Exponent]>,
}

impl Monomial {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The variable `x_i` (0-based index).
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    /// The square-free monomial on the given variable indices.
    pub fn from_support(vars: impl IntoIterator<Item = usize>, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        for v in vars {
            e[v] = 1;
        }
        Monomial::new(e)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// True if the monomial involves at most one variable.
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() <= 1
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Bitmask of the support; requires at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.nvars() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| add_exp(a, b))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .map(|&a| a.checked_mul(k).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`: exponents `max(a_i - b_i, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// Exact quotient, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    pub fn with_exponent(&self, i: usize, e: Exponent) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[i] = e;
        Monomial::new(exps)
    }

    /// Number of monomial divisors, `∏ (a_i + 1)`, saturating.
    pub fn divisor_count(&self) -> u128 {
        self.exps
            .iter()
            .fold(1u128, |acc, &a| acc.saturating_mul(a as u128 + 1))
    }

    /// Every monomial dividing `self`, in increasing lexicographic order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out: Vec<Vec<Exponent>> = vec![Vec::new()];
        for &e in self.exps.iter() {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=e).map(move |a| {
                        let mut p = prefix.clone();
                        p.push(a);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Monomial::new).collect()
    }

    /// Parses `x1^2*x3` style text (1-based variable indices); `1` is the unit.
    pub fn parse(s: &str, nvars: usize) -> std::result::Result<Monomial, String> {
        let s = s.trim();
        let mut exps = vec![0; nvars];
        if s == "1" {
            return Ok(Monomial::new(exps));
        }
        for tok in s.split('*') {
            let tok = tok.trim();
            let body = tok
                .strip_prefix('x')
                .ok_or_else(|| format!("bad token `{tok}`"))?;
            let (idx, e) = match body.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.parse::<Exponent>()
                        .map_err(|_| format!("bad exponent in `{tok}`"))?,
                ),
                None => (body, 1),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| format!("bad variable in `{tok}`"))?;
            if idx == 0 || idx > nvars {
                return Err(format!("variable x{idx} outside ring of {nvars} variables"));
            }
            exps[idx - 1] = add_exp(exps[idx - 1], e);
        }
        Ok(Monomial::new(exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial ideal, stored by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Removes divisibility-redundant generators and sorts the rest.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut cands: Vec<Monomial> = Vec::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::Structural(format!(
                    "generator {g} has {} variables, expected {nvars}",
                    g.nvars()
                )));
            }
            cands.push(g);
        }
        Ok(Self::minimalize_unchecked(nvars, cands))
    }

    /// Like [`MonomialIdeal::minimalize`] but infers the ring from the
    /// generators; an empty list is a structural error since the ring is
    /// unknown.
    pub fn from_generators(gens: Vec<Monomial>) -> Result<Self> {
        let nvars = gens.first().map(Monomial::nvars).ok_or_else(|| {
            Error::Structural("cannot infer ring from empty generator list".into())
        })?;
        Self::minimalize(nvars, gens)
    }

    pub(crate) fn minimalize_unchecked(nvars: usize, mut cands: Vec<Monomial>) -> Self {
        cands.sort_by_cached_key(|m| (m.degree(), m.clone()));
        cands.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
        for m in cands {
            if !kept.iter().any(|g| g.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort();
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(nvars: usize) -> Self {
        Self::from_vars(0..nvars, nvars)
    }

    /// The prime ideal generated by the given variables.
    pub fn from_vars(vars: impl IntoIterator<Item = usize>, nvars: usize) -> Self {
        Self::minimalize_unchecked(
            nvars,
            vars.into_iter().map(|i| Monomial::var(i, nvars)).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn require_nonzero(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            Err(Error::UndefinedInvariant(format!(
                "{what} of the zero ideal"
            )))
        } else {
            Ok(())
        }
    }

    fn require_same_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::Structural(format!(
                "ideals live in rings with {} and {} variables",
                self.nvars, other.nvars
            )))
        } else {
            Ok(())
        }
    }

    /// Least degree of a nonzero element.
    pub fn alpha(&self) -> Result<u64> {
        self.require_nonzero("alpha")?;
        Ok(self.gens.iter().map(Monomial::degree).min().unwrap())
    }

    /// Largest degree of a minimal generator.
    pub fn max_gen_degree(&self) -> Result<u64> {
        self.require_nonzero("max generator degree")?;
        Ok(self.gens.iter().map(Monomial::degree).max().unwrap())
    }

    pub fn is_equigenerated(&self) -> Result<bool> {
        Ok(self.alpha()? == self.max_gen_degree()?)
    }

    /// `lcm` of the minimal generators.
    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    /// True if some generator divides `m`.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    /// `(I : f)`.
    pub fn colon(&self, f: &Monomial) -> Self {
        Self::minimalize_unchecked(self.nvars, self.gens.iter().map(|g| g.colon(f)).collect())
    }

    /// `(I : J)`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        self.require_same_ring(other)?;
        if other.is_zero() {
            return Ok(Self::unit(self.nvars));
        }
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let c = self.colon(g);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `(I : f^∞)`. Each variable dividing `f` is inverted, so its exponent
    /// in every generator drops to zero.
    pub fn saturate(&self, f: &Monomial) -> Self {
        let supp = f.support();
        if supp.is_empty() {
            return self.clone();
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                for &i in &supp {
                    e[i] = 0;
                }
                Monomial::new(e)
            })
            .collect();
        Self::minimalize_unchecked(self.nvars, gens)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.require_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                cands.push(g.lcm(h));
            }
        }
        Ok(Self::minimalize_unchecked(self.nvars, cands))
    }

    /// Intersection of a nonempty family of ideals in a common ring.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut it = ideals.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Domain("intersection of an empty family".into()))?;
        it.try_fold(first.clone(), |acc, j| acc.intersect(j))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.require_same_ring(other)?;
        Ok(Self::minimalize_unchecked(
            self.nvars,
            self.gens.iter().chain(other.gens.iter()).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.require_same_ring(other)?;
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                cands.push(g.mul(h));
            }
        }
        Ok(Self::minimalize_unchecked(self.nvars, cands))
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Text form: a `ring <n>` header followed by one generator per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("ring {}\n", self.nvars);
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses the text form produced by [`MonomialIdeal::to_text`]. Blank
    /// lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut nvars: Option<usize> = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse {
                line: lineno + 1,
                msg,
            };
            match nvars {
                None => {
                    let n = line
                        .strip_prefix("ring")
                        .map(str::trim)
                        .and_then(|n| n.parse::<usize>().ok())
                        .ok_or_else(|| {
                            err(format!("expected `ring <n>` header, found `{line}`"))
                        })?;
                    nvars = Some(n);
                }
                Some(n) => gens.push(Monomial::parse(line, n).map_err(err)?),
            }
        }
        let nvars = nvars.ok_or(Error::Parse {
            line: 0,
            msg: "missing `ring <n>` header".into(),
        })?;
        Self::minimalize(nvars, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shorthand used by tests and examples: `ideal(3, &[&[1,1,0], &[0,1,1]])`.
pub fn ideal(nvars: usize, gens: &[&[Exponent]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(nvars, gens.iter().map(|e| Monomial::new(e.to_vec())))
        .expect("generators match the ring")
}

pub fn mono(exps: &[Exponent]) -> Monomial {
    Monomial::new(exps.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(1, &[&[1], &[2]]), ideal(1, &[&[1]]));
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(i.generators(), &[mono(&[0, 1, 1]), mono(&[1, 1, 0])]);
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]).num_generators(), 3);
    }

    #[test]
    fn minimalize_rejects_mixed_rings() {
        let r = MonomialIdeal::minimalize(2, vec![mono(&[1, 0]), mono(&[1, 0, 0])]);
        assert!(matches!(r, Err(Error::Structural(_))));
    }

    #[test]
    fn alpha_and_max_degree() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1]]).alpha().unwrap(), 2);
        assert_eq!(MonomialIdeal::maximal(4).alpha().unwrap(), 1);
        assert_eq!(
            ideal(3, &[&[1, 0, 0], &[0, 1, 1]])
                .max_gen_degree()
                .unwrap(),
            2
        );
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
                .max_gen_degree()
                .unwrap(),
            2
        );
        assert!(matches!(
            MonomialIdeal::zero(3).alpha(),
            Err(Error::UndefinedInvariant(_))
        ));
        assert!(matches!(
            MonomialIdeal::zero(3).max_gen_degree(),
            Err(Error::UndefinedInvariant(_))
        ));
        assert!(matches!(
            MonomialIdeal::zero(3).is_equigenerated(),
            Err(Error::UndefinedInvariant(_))
        ));
    }

    #[test]
    fn equigenerated() {
        assert!(ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
            .is_equigenerated()
            .unwrap());
        assert!(!ideal(3, &[&[1, 0, 0], &[0, 1, 1]])
            .is_equigenerated()
            .unwrap());
        assert!(ideal(2, &[&[2, 0], &[1, 1]]).is_equigenerated().unwrap());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.colon(&mono(&[1, 0, 0])), ideal(3, &[&[0, 1, 0]]));
        assert_eq!(i.colon(&mono(&[1, 0, 1])), ideal(3, &[&[0, 1, 0]]));
        assert_eq!(i.colon(&Monomial::one(3)), i);
    }

    #[test]
    fn intersect_examples() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));
        let p = |a: usize, b: usize| MonomialIdeal::from_vars([a, b], 3);
        let tri = MonomialIdeal::intersect_all([&p(0, 1), &p(1, 2), &p(0, 2)]).unwrap();
        assert_eq!(tri, ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
        assert_eq!(tri.intersect(&tri).unwrap(), tri);
        assert!(matches!(
            x.intersect(&MonomialIdeal::maximal(3)),
            Err(Error::Structural(_))
        ));
    }

    #[test]
    fn power_examples() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.power(2), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert!(m.power(0).is_unit());
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.power(2).alpha().unwrap(), 4);
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(
            ideal(2, &[&[1, 1]]).saturate(&mono(&[0, 1])),
            ideal(2, &[&[1, 0]])
        );
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).saturate(&mono(&[0, 1])),
            ideal(2, &[&[1, 0]])
        );
        assert_eq!(
            ideal(2, &[&[1, 0]]).saturate(&mono(&[0, 1])),
            ideal(2, &[&[1, 0]])
        );
        let i = ideal(2, &[&[2, 3]]);
        assert_eq!(i.saturate(&Monomial::one(2)), i);
    }

    #[test]
    fn saturation_is_stabilized_colon() {
        let i = ideal(3, &[&[3, 0, 1], &[1, 4, 0], &[0, 2, 2]]);
        let f = mono(&[0, 1, 0]);
        let mut cur = i.clone();
        loop {
            let next = cur.colon(&f);
            if next == cur {
                break;
            }
            cur = next;
        }
        assert_eq!(i.saturate(&f), cur);
    }

    #[test]
    fn membership() {
        assert!(ideal(3, &[&[1, 1, 0]]).contains_monomial(&mono(&[1, 1, 1])));
        assert!(!ideal(1, &[&[2]]).contains_monomial(&mono(&[1])));
        let p = |a: usize, b: usize| MonomialIdeal::from_vars([a, b], 3).power(2);
        let j = MonomialIdeal::intersect_all([&p(0, 1), &p(1, 2), &p(0, 2)]).unwrap();
        assert!(j.contains_monomial(&mono(&[1, 1, 1])));
    }

    #[test]
    fn zero_and_unit_flags() {
        assert!(MonomialIdeal::zero(2).is_zero());
        assert!(MonomialIdeal::unit(2).is_unit());
        assert!(!MonomialIdeal::unit(2).is_proper());
        assert!(MonomialIdeal::zero(2).power(3).is_zero());
        assert_eq!(
            MonomialIdeal::zero(2).colon(&mono(&[1, 0])),
            MonomialIdeal::zero(2)
        );
    }

    #[test]
    fn text_round_trip() {
        let text = "# sample\nring 3\n\nx1^2*x3\nx2 # linear\n";
        let i = MonomialIdeal::parse(text).unwrap();
        assert_eq!(i, ideal(3, &[&[2, 0, 1], &[0, 1, 0]]));
        assert_eq!(MonomialIdeal::parse(&i.to_text()).unwrap(), i);
        assert_eq!(i.to_text(), "ring 3\nx2\nx1^2*x3\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            MonomialIdeal::parse("x1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("ring 2\nx3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("ring 2\nx1^a\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(MonomialIdeal::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_panics() {
        let m = mono(&[u32::MAX]);
        let _ = m.mul(&mono(&[1]));
    }
}
