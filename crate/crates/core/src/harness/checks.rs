//! Finite-window checks of the structural statements about v-numbers,
//! regularity and powers.

use std::fmt;

use serde::Serialize;

use super::fit::first_fit;
use crate::caps::Caps;
use crate::combinatorics::{
    cover_ideal, cover_polarization_check, graph_edge_ideal, is_bipartite, is_chordal,
    is_cm_very_well_covered, is_polymatroidal, is_very_well_covered, Graph, Hypergraph,
};
use crate::decomposition::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyhedron::{coordinate_sum, enumerate_vertices, lp_minimize, Rational};
use crate::regularity::{betti_numbers, koszul_betti_numbers, polarize, regularity};
use crate::symbolic::{
    delta_invariant, has_strong_persistence_upto, symbolic_polyhedron, symbolic_power,
    waldschmidt_constant, PowerKind, SymbolicPowerVariant,
};
use crate::vnumber::{v_number, v_number_by_scan, v_number_capped};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skip")]
    Skip,
    /// No violation in the window and a non-shrinking margin on its tail.
    #[serde(rename = "trend-pass")]
    TrendPass,
    /// The window cannot decide the statement.
    #[serde(rename = "inconclusive-at-K")]
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::TrendPass => "trend-pass",
            Status::Inconclusive => "inconclusive-at-K",
        })
    }
}

/// Both sides of a compared relation at one instance and `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.instance)?;
        if let Some(k) = self.k {
            write!(f, " at k = {k}")?;
        }
        write!(f, ": ({}) {} ({})", self.lhs, self.relation, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    fn new(name: &str, status: Status, witness: Option<Witness>, detail: Option<String>) -> Self {
        Verdict {
            name: name.to_string(),
            status,
            witness,
            detail,
        }
    }

    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Self::new(name, Status::Pass, None, Some(detail.into()))
    }

    pub fn fail(name: &str, witness: Witness) -> Self {
        Self::new(name, Status::Fail, Some(witness), None)
    }

    pub fn skip(name: &str, reason: impl Into<String>) -> Self {
        Self::new(name, Status::Skip, None, Some(reason.into()))
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

fn witness(
    instance: &str,
    k: Option<u32>,
    lhs: impl fmt::Display,
    relation: &str,
    rhs: impl fmt::Display,
) -> Witness {
    Witness {
        instance: instance.to_string(),
        k,
        lhs: lhs.to_string(),
        relation: relation.to_string(),
        rhs: rhs.to_string(),
    }
}

/// Runs a check body, turning cap and domain errors into skips and any other
/// error into a failure.
fn guarded(name: &str, instance: &str, body: impl FnOnce() -> Result<Verdict>) -> Verdict {
    match body() {
        Ok(v) => v,
        Err(
            e @ (Error::Resource(_)
            | Error::Domain(_)
            | Error::Unsupported(_)
            | Error::UndefinedInvariant(_)),
        ) => Verdict::skip(name, e.to_string()),
        Err(e) => Verdict::fail(name, witness(instance, None, "computation", "raised", e)),
    }
}

/// Lazily computed members of an ordinary or symbolic power filtration with
/// their invariants.
pub struct Filtration {
    base: MonomialIdeal,
    kind: PowerKind,
    caps: Caps,
    members: Vec<MonomialIdeal>,
    v: Vec<Option<u64>>,
    reg: Vec<Option<u64>>,
}

impl Filtration {
    pub fn new(base: &MonomialIdeal, kind: PowerKind, caps: &Caps) -> Self {
        Filtration {
            base: base.clone(),
            kind,
            caps: *caps,
            members: Vec::new(),
            v: Vec::new(),
            reg: Vec::new(),
        }
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn member(&mut self, k: u32) -> Result<&MonomialIdeal> {
        if k == 0 {
            return Err(Error::Domain("filtrations start at k = 1".into()));
        }
        while self.members.len() < k as usize {
            let next = match (self.kind, self.members.last()) {
                (PowerKind::Ordinary, None) => self.base.clone(),
                (PowerKind::Ordinary, Some(last)) => last.product(&self.base)?,
                (PowerKind::Symbolic(variant), _) => {
                    symbolic_power(&self.base, self.members.len() as u32 + 1, variant)?
                }
            };
            self.members.push(next);
            self.v.push(None);
            self.reg.push(None);
        }
        Ok(&self.members[k as usize - 1])
    }

    pub fn alpha(&mut self, k: u32) -> Result<u64> {
        self.member(k)?.alpha()
    }

    pub fn v(&mut self, k: u32) -> Result<u64> {
        let caps = self.caps;
        self.member(k)?;
        let idx = k as usize - 1;
        if let Some(v) = self.v[idx] {
            return Ok(v);
        }
        let v = v_number_capped(&self.members[idx], &caps)?.v;
        self.v[idx] = Some(v);
        Ok(v)
    }

    pub fn reg(&mut self, k: u32) -> Result<u64> {
        let caps = self.caps;
        self.member(k)?;
        let idx = k as usize - 1;
        if let Some(r) = self.reg[idx] {
            return Ok(r);
        }
        let r = regularity(&self.members[idx], &caps)?;
        self.reg[idx] = Some(r);
        Ok(r)
    }

    fn label(&self, k: u32) -> String {
        match self.kind {
            PowerKind::Ordinary => format!("I^{k}"),
            PowerKind::Symbolic(_) => format!("I^({k})"),
        }
    }
}

/// `v(I_k) ≤ reg(R/I_k)` at every `k` of the window, with the first
/// violation.
fn v_below_reg(f: &mut Filtration, instance: &str, max_k: u32) -> Result<Option<Witness>> {
    for k in 1..=max_k {
        let (v, r) = (f.v(k)?, f.reg(k)?);
        if v > r {
            let l = f.label(k);
            return Ok(Some(witness(
                instance,
                Some(k),
                format!("v({l}) = {v}"),
                "≤",
                format!("reg(R/{l}) = {r}"),
            )));
        }
    }
    Ok(None)
}

/// `v(J(G)^(k)) ≤ reg(R/J(G)^(k))` for `1 ≤ k ≤ K`.
pub fn check_cover_vs_reg(g: &Graph, max_k: u32, caps: &Caps) -> Verdict {
    const NAME: &str = "cover-vs-reg";
    let instance = format!("J({g:?})");
    guarded(NAME, &instance, || {
        if !g.isolated_vertices().is_empty() {
            return Ok(Verdict::skip(NAME, "graph has isolated vertices"));
        }
        let mut f = Filtration::new(&cover_ideal(g)?, PowerKind::SYMBOLIC_MIN, caps);
        Ok(match v_below_reg(&mut f, &instance, max_k)? {
            Some(w) => Verdict::fail(NAME, w),
            None => Verdict::pass(NAME, format!("k ≤ {max_k}")),
        })
    })
}

/// `v = reg = α - 1` along `J(G)^(k)` for all `k ≤ K` against `G` being
/// Cohen–Macaulay very well-covered. A chain that survives the window on a
/// graph outside the class is inconclusive, not a failure.
pub fn check_cmvwc_equivalence(g: &Graph, max_k: u32, caps: &Caps) -> Verdict {
    const NAME: &str = "cmvwc-equivalence";
    let instance = format!("J({g:?})");
    guarded(NAME, &instance, || {
        let cm = is_cm_very_well_covered(g)?;
        let mut f = Filtration::new(&cover_ideal(g)?, PowerKind::SYMBOLIC_MIN, caps);
        let mut broken = None;
        for k in 1..=max_k {
            let (v, r, a) = (f.v(k)?, f.reg(k)?, f.alpha(k)?);
            if !(v == r && r + 1 == a) {
                broken = Some(witness(
                    &instance,
                    Some(k),
                    format!("(v, reg) = ({v}, {r})"),
                    "vs",
                    format!("α - 1 = {}", a - 1),
                ));
                break;
            }
        }
        Ok(match (cm, broken) {
            (true, None) => Verdict::pass(
                NAME,
                format!("CM very well-covered; chain holds for k ≤ {max_k}"),
            ),
            (true, Some(w)) => Verdict::fail(NAME, w),
            (false, Some(w)) => {
                let k = w.k.expect("set above");
                Verdict::pass(
                    NAME,
                    format!("not CM very well-covered; chain breaks at k = {k}"),
                )
                .with_witness(w)
            }
            (false, None) => Verdict::new(
                NAME,
                Status::Inconclusive,
                None,
                Some(format!(
                    "not CM very well-covered yet the chain holds for k ≤ {max_k}"
                )),
            ),
        })
    })
}

/// Per-`k` sandwich `kα̂ - 1 ≤ α(I^(k)) - 1 ≤ v(I^(k)) ≤ (k-1)d + v(I)` and,
/// when the window admits a quasi-linear fit, slope `= α̂`.
pub fn check_slope_theorem(i: &MonomialIdeal, max_k: u32, caps: &Caps) -> Verdict {
    const NAME: &str = "slope";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        let ahat = waldschmidt_constant(i)?;
        let d = i.max_gen_degree()?;
        let mut f = Filtration::new(i, PowerKind::SYMBOLIC_MIN, caps);
        let v1 = f.v(1)?;
        let mut seq = Vec::new();
        for k in 1..=max_k {
            let (v, a) = (f.v(k)?, f.alpha(k)?);
            let floor = Rational::from_integer(k.into()) * &ahat - Rational::from_integer(1.into());
            if Rational::from_integer((a - 1).into()) < floor {
                return Ok(Verdict::fail(
                    NAME,
                    witness(
                        &instance,
                        Some(k),
                        format!("kα̂ - 1 = {floor}"),
                        "≤",
                        format!("α(I^({k})) - 1 = {}", a - 1),
                    ),
                ));
            }
            if v + 1 < a {
                return Ok(Verdict::fail(
                    NAME,
                    witness(
                        &instance,
                        Some(k),
                        format!("α(I^({k})) - 1 = {}", a - 1),
                        "≤",
                        format!("v(I^({k})) = {v}"),
                    ),
                ));
            }
            let cap = (k as u64 - 1) * d + v1;
            if v > cap {
                return Ok(Verdict::fail(
                    NAME,
                    witness(
                        &instance,
                        Some(k),
                        format!("v(I^({k})) = {v}"),
                        "≤",
                        format!("(k-1)d + v(I) = {cap}"),
                    ),
                ));
            }
            seq.push(v);
        }
        Ok(match first_fit(&seq) {
            None => Verdict::skip(
                NAME,
                format!("sandwich holds; no quasi-linear fit with period ≤ 3 for k ≤ {max_k}"),
            ),
            Some(fit) if fit.slope == ahat => Verdict::pass(
                NAME,
                format!(
                    "slope {} = α̂ with period {} from k = {}",
                    fit.slope, fit.period, fit.k_min
                ),
            ),
            Some(fit) => Verdict::new(
                NAME,
                Status::Inconclusive,
                Some(witness(
                    &instance,
                    None,
                    format!("fitted slope {}", fit.slope),
                    "=",
                    format!("α̂ = {ahat}"),
                )),
                Some(format!(
                    "sandwich holds; the window fit (period {} from k = {}) is not yet at slope α̂",
                    fit.period, fit.k_min
                )),
            ),
        })
    })
}

/// The upper bounds on `v` of symbolic and ordinary powers of a square-free
/// ideal of maximal generator degree `d`:
/// `v(I^(k)) ≤ (k-1)d + v(I)`; `v(I^(k)) ≤ kd - 1 ≤ reg(R/I^(k))` when
/// `v(I) ≤ d - 1`; `v(I^k) ≤ (k-1)d + v(I)` under strong persistence; and
/// for edge ideals of graphs `v ≤ 2(k-1) + v(I)` for both power types.
pub fn check_upper_bounds(i: &MonomialIdeal, max_k: u32, caps: &Caps) -> Verdict {
    const NAME: &str = "upper-bounds";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        if !i.is_squarefree() {
            return Ok(Verdict::skip(NAME, "not square-free"));
        }
        let d = i.max_gen_degree()?;
        let graph_like = d == 2 && i.is_equigenerated()?;
        let mut sym = Filtration::new(i, PowerKind::SYMBOLIC_MIN, caps);
        let mut ord = Filtration::new(i, PowerKind::Ordinary, caps);
        let v1 = sym.v(1)?;
        let persistent = max_k < 2 || has_strong_persistence_upto(i, max_k)?;
        let mut applied = vec!["(k-1)d + v(I)".to_string()];
        let mut reg_beyond = None;
        for k in 1..=max_k {
            let bound = (k as u64 - 1) * d + v1;
            let vs = sym.v(k)?;
            if vs > bound {
                return Ok(Verdict::fail(
                    NAME,
                    witness(
                        &instance,
                        Some(k),
                        format!("v(I^({k})) = {vs}"),
                        "≤",
                        format!("(k-1)d + v(I) = {bound}"),
                    ),
                ));
            }
            let reg = if v1 < d && reg_beyond.is_none() {
                match sym.reg(k) {
                    Ok(r) => Some(r),
                    Err(Error::Resource(_)) => {
                        reg_beyond = Some(k);
                        None
                    }
                    Err(e) => return Err(e),
                }
            } else {
                None
            };
            if let Some(r) = reg {
                let kd = k as u64 * d - 1;
                if vs > kd || kd > r {
                    return Ok(Verdict::fail(
                        NAME,
                        witness(
                            &instance,
                            Some(k),
                            format!("v(I^({k})) = {vs} ≤ kd - 1 = {kd}"),
                            "≤",
                            format!("reg(R/I^({k})) = {r}"),
                        ),
                    ));
                }
            }
            if persistent || graph_like {
                let vo = ord.v(k)?;
                if vo > bound {
                    return Ok(Verdict::fail(
                        NAME,
                        witness(
                            &instance,
                            Some(k),
                            format!("v(I^{k}) = {vo}"),
                            "≤",
                            format!("(k-1)d + v(I) = {bound}"),
                        ),
                    ));
                }
            }
        }
        if v1 < d {
            applied.push(match reg_beyond {
                None => "kd - 1 ≤ reg".to_string(),
                Some(k) => format!("kd - 1 ≤ reg for k < {k} (caps)"),
            });
        }
        if persistent || graph_like {
            applied.push("ordinary powers".to_string());
        }
        Ok(Verdict::pass(
            NAME,
            format!("{} for k ≤ {max_k}", applied.join(", ")),
        ))
    })
}

/// Margins `reg - v` over the window: trend-pass when none is negative and
/// the last three do not shrink.
fn trend(name: &str, instance: &str, f: &mut Filtration, max_k: u32) -> Result<Verdict> {
    let mut margins = Vec::new();
    for k in 1..=max_k {
        let (v, r) = (f.v(k)?, f.reg(k)?);
        let m = r as i64 - v as i64;
        if m < 0 {
            let l = f.label(k);
            return Ok(Verdict::new(
                name,
                Status::Inconclusive,
                Some(witness(
                    instance,
                    Some(k),
                    format!("v({l}) = {v}"),
                    "≤",
                    format!("reg(R/{l}) = {r}"),
                )),
                Some("violation inside the window of an eventual statement".into()),
            ));
        }
        margins.push(m);
    }
    let tail = &margins[margins.len().saturating_sub(3)..];
    if tail.windows(2).any(|w| w[1] < w[0]) {
        return Ok(Verdict::new(
            name,
            Status::Inconclusive,
            None,
            Some(format!("margins {margins:?} shrink on the tail")),
        ));
    }
    Ok(Verdict::new(
        name,
        Status::TrendPass,
        None,
        Some(format!("margins reg - v = {margins:?}")),
    ))
}

/// Every applicable sufficient criterion for `v ≤ reg` along powers of a
/// square-free ideal, each checked on `k ≤ K`. `graph` adds the
/// bipartite/chordal criterion for edge ideals.
pub fn check_criteria_suite(
    i: &MonomialIdeal,
    graph: Option<&Graph>,
    max_k: u32,
    caps: &Caps,
) -> Vec<Verdict> {
    let instance = i.to_string();
    let mut sym = Filtration::new(i, PowerKind::SYMBOLIC_MIN, caps);
    let mut ord = Filtration::new(i, PowerKind::Ordinary, caps);
    if !i.is_squarefree() {
        return vec![Verdict::skip("criteria", "not square-free")];
    }
    let mut out = Vec::new();

    out.push(guarded("alpha-delta", &instance, || {
        let (ahat, delta) = (
            waldschmidt_constant(i)?,
            delta_invariant(i, caps.vertex_dim)?,
        );
        if ahat >= delta {
            return Ok(Verdict::skip(
                "alpha-delta",
                format!("α̂ = {ahat} is not below δ = {delta}"),
            ));
        }
        trend("alpha-delta", &instance, &mut sym, max_k)
    }));

    out.push(guarded("nonequi", &instance, || {
        if i.is_equigenerated()? {
            return Ok(Verdict::skip("nonequi", "equigenerated"));
        }
        let (ahat, delta) = (
            waldschmidt_constant(i)?,
            delta_invariant(i, caps.vertex_dim)?,
        );
        if ahat >= delta {
            return Ok(Verdict::fail(
                "nonequi",
                witness(
                    &instance,
                    None,
                    format!("α̂ = {ahat}"),
                    "<",
                    format!("δ = {delta}"),
                ),
            ));
        }
        let mut v = trend("nonequi", &instance, &mut sym, max_k)?;
        v.detail = Some(format!(
            "α̂ = {ahat} < δ = {delta}; {}",
            v.detail.unwrap_or_default()
        ));
        Ok(v)
    }));

    out.push(guarded("induced-matching", &instance, || {
        let w = Hypergraph::from_ideal(i)?.best_induced_matching_weight()?;
        let v1 = sym.v(1)?;
        if v1 > w {
            return Ok(Verdict::skip(
                "induced-matching",
                format!("v(I) = {v1} exceeds the matching weight {w}"),
            ));
        }
        if let Some(wit) = v_below_reg(&mut sym, &instance, max_k)? {
            return Ok(Verdict::fail("induced-matching", wit));
        }
        let persistent = max_k >= 2 && has_strong_persistence_upto(i, max_k)?;
        if persistent {
            if let Some(wit) = v_below_reg(&mut ord, &instance, max_k)? {
                return Ok(Verdict::fail("induced-matching", wit));
            }
        }
        let scope = if persistent {
            "symbolic and ordinary powers"
        } else {
            "symbolic powers"
        };
        Ok(Verdict::pass(
            "induced-matching",
            format!("v(I) = {v1} ≤ {w}; {scope} for k ≤ {max_k}"),
        ))
    }));

    out.push(guarded("uniform-matching", &instance, || {
        if !i.is_equigenerated()? {
            return Ok(Verdict::skip("uniform-matching", "not equigenerated"));
        }
        let d = i.alpha()?;
        let im = Hypergraph::from_ideal(i)?.induced_matching_number()? as u64;
        let v1 = sym.v(1)?;
        if v1 > im * (d - 1) {
            return Ok(Verdict::skip(
                "uniform-matching",
                format!("v(I) = {v1} exceeds im·(d-1) = {}", im * (d - 1)),
            ));
        }
        Ok(match v_below_reg(&mut sym, &instance, max_k)? {
            Some(wit) => Verdict::fail("uniform-matching", wit),
            None => Verdict::pass(
                "uniform-matching",
                format!("v(I) = {v1} ≤ {}; k ≤ {max_k}", im * (d - 1)),
            ),
        })
    }));

    out.push(check_polymatroidal_chain_with(i, &mut sym, &mut ord, max_k));

    if let Some(g) = graph {
        out.push(guarded("bipartite-chordal", &instance, || {
            let vwc =
                g.isolated_vertices().is_empty() && g.num_edges() > 0 && is_very_well_covered(g)?;
            if !(is_bipartite(g) || is_chordal(g) || vwc) {
                return Ok(Verdict::skip(
                    "bipartite-chordal",
                    "neither bipartite, chordal nor very well-covered",
                ));
            }
            let im = g.to_hypergraph().induced_matching_number()? as u64;
            let v1 = sym.v(1)?;
            if v1 > im {
                return Ok(Verdict::fail(
                    "bipartite-chordal",
                    witness(
                        &instance,
                        Some(1),
                        format!("v(I(G)) = {v1}"),
                        "≤",
                        format!("im(G) = {im}"),
                    ),
                ));
            }
            for f in [&mut sym, &mut ord] {
                if let Some(wit) = v_below_reg(f, &instance, max_k)? {
                    return Ok(Verdict::fail("bipartite-chordal", wit));
                }
            }
            Ok(Verdict::pass(
                "bipartite-chordal",
                format!("v(I(G)) = {v1} ≤ im(G) = {im}; both powers for k ≤ {max_k}"),
            ))
        }));
    }
    out
}

/// For square-free polymatroidal `I` generated in degree `d`:
/// `v(I^(k)) ≤ v(I^k) = dk - 1 = reg(R/I^k) ≤ reg(R/I^(k))`.
pub fn check_polymatroidal_chain(i: &MonomialIdeal, max_k: u32, caps: &Caps) -> Verdict {
    let mut sym = Filtration::new(i, PowerKind::SYMBOLIC_MIN, caps);
    let mut ord = Filtration::new(i, PowerKind::Ordinary, caps);
    check_polymatroidal_chain_with(i, &mut sym, &mut ord, max_k)
}

fn check_polymatroidal_chain_with(
    i: &MonomialIdeal,
    sym: &mut Filtration,
    ord: &mut Filtration,
    max_k: u32,
) -> Verdict {
    const NAME: &str = "polymatroidal";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        if !i.is_squarefree() || !is_polymatroidal(i) {
            return Ok(Verdict::skip(NAME, "not square-free polymatroidal"));
        }
        let d = i.alpha()?;
        for k in 1..=max_k {
            let (vs, vo, ro, rs) = (sym.v(k)?, ord.v(k)?, ord.reg(k)?, sym.reg(k)?);
            let dk = d * k as u64 - 1;
            if !(vs <= vo && vo == dk && ro == dk && ro <= rs) {
                return Ok(Verdict::fail(
                    NAME,
                    witness(&instance, Some(k), format!("v(I^({k})) = {vs}, v(I^{k}) = {vo}, reg(R/I^{k}) = {ro}, reg(R/I^({k})) = {rs}"), "vs", format!("dk - 1 = {dk}")),
                ));
            }
        }
        Ok(Verdict::pass(NAME, format!("chain holds for k ≤ {max_k}")))
    })
}

/// `I_{rk} = (I_r)^k` for some `r`: trivially `r = 1` for ordinary powers,
/// searched over `r ≤ 3` with `kr ≤ 6` for symbolic ones.
pub fn check_there_exist(i: &MonomialIdeal, kind: PowerKind) -> Verdict {
    const NAME: &str = "there-exist";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        let PowerKind::Symbolic(variant) = kind else {
            return Ok(Verdict::pass(NAME, "r = 1"));
        };
        let powers = (1..=6)
            .map(|k| symbolic_power(i, k, variant))
            .collect::<Result<Vec<_>>>()?;
        for r in 1..=3u32 {
            let holds = (2..)
                .take_while(|k| k * r <= 6)
                .all(|k| powers[(k * r) as usize - 1] == powers[r as usize - 1].power(k));
            if holds {
                return Ok(Verdict::pass(NAME, format!("r = {r}")));
            }
        }
        Ok(Verdict::new(
            NAME,
            Status::Inconclusive,
            None,
            Some("not found in window".into()),
        ))
    })
}

/// `(I^(k) : I) = I^(k-1)` for `2 ≤ k ≤ K`; a theorem for square-free ideals.
pub fn check_symbolic_persistence(i: &MonomialIdeal, max_k: u32) -> Verdict {
    const NAME: &str = "symbolic-persistence";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        for k in 2..=max_k {
            let (hi, lo) = (
                symbolic_power(i, k, SymbolicPowerVariant::Min)?,
                symbolic_power(i, k - 1, SymbolicPowerVariant::Min)?,
            );
            let colon = hi.colon_ideal(&symbolic_power(i, 1, SymbolicPowerVariant::Min)?)?;
            if colon != lo {
                let w = witness(
                    &instance,
                    Some(k),
                    format!("(I^({k}) : I) = {colon}"),
                    "=",
                    format!("I^({}) = {lo}", k - 1),
                );
                return Ok(if i.is_squarefree() {
                    Verdict::fail(NAME, w)
                } else {
                    Verdict::new(
                        NAME,
                        Status::Inconclusive,
                        Some(w),
                        Some("not square-free".into()),
                    )
                });
            }
        }
        Ok(Verdict::pass(NAME, format!("k ≤ {max_k}")))
    })
}

/// `(I(G)^{k+1} : I(G)) = I(G)^k` for `k < K`.
pub fn check_edge_persistence(g: &Graph, max_k: u32) -> Verdict {
    const NAME: &str = "strong-persistence";
    let instance = format!("I({g:?})");
    guarded(NAME, &instance, || {
        let i = graph_edge_ideal(g)?;
        let mut prev = i.clone();
        for k in 1..max_k {
            let next = prev.product(&i)?;
            let colon = next.colon_ideal(&i)?;
            if colon != prev {
                return Ok(Verdict::fail(
                    NAME,
                    witness(
                        &instance,
                        Some(k),
                        format!("(I^{} : I) = {colon}", k + 1),
                        "=",
                        format!("I^{k} = {prev}"),
                    ),
                ));
            }
            prev = next;
        }
        Ok(Verdict::pass(NAME, format!("k < {max_k}")))
    })
}

/// `v(I^𝒫) = v(I)`.
pub fn check_polarization(i: &MonomialIdeal) -> Verdict {
    const NAME: &str = "polarization";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        let (v, vp) = (v_number(i)?.v, v_number(&polarize(i)?.ideal)?.v);
        Ok(if v == vp {
            Verdict::pass(NAME, format!("v = {v}"))
        } else {
            Verdict::fail(
                NAME,
                witness(
                    &instance,
                    None,
                    format!("v(I^P) = {vp}"),
                    "=",
                    format!("v(I) = {v}"),
                ),
            )
        })
    })
}

/// `(J(G)^(k))^𝒫 = J(G_k)` for `k ≤ K`.
pub fn check_cover_polarization(g: &Graph, max_k: u32) -> Verdict {
    const NAME: &str = "cover-polarization";
    let instance = format!("J({g:?})");
    guarded(NAME, &instance, || {
        for k in 1..=max_k {
            if !cover_polarization_check(g, k)? {
                return Ok(Verdict::fail(
                    NAME,
                    witness(&instance, Some(k), "(J^(k))^P", "=", "J(G_k)"),
                ));
            }
        }
        Ok(Verdict::pass(NAME, format!("k ≤ {max_k}")))
    })
}

/// The two symbolic power definitions agree on square-free input.
pub fn check_variant_agreement(i: &MonomialIdeal, max_k: u32) -> Verdict {
    const NAME: &str = "variant-agreement";
    let instance = i.to_string();
    guarded(NAME, &instance, || {
        if !i.is_squarefree() {
            return Ok(Verdict::skip(NAME, "not square-free"));
        }
        for k in 1..=max_k {
            let (a, b) = (
                symbolic_power(i, k, SymbolicPowerVariant::Min)?,
                symbolic_power(i, k, SymbolicPowerVariant::Ass)?,
            );
            if a != b {
                return Ok(Verdict::fail(
                    NAME,
                    witness(
                        &instance,
                        Some(k),
                        format!("MIN: {a}"),
                        "=",
                        format!("ASS: {b}"),
                    ),
                ));
            }
        }
        Ok(Verdict::pass(NAME, format!("k ≤ {max_k}")))
    })
}

/// Internal cross-checks: first Betti numbers count generators, irreducible
/// components re-intersect to the input, the LP optimum matches the vertex
/// scan, Hochster matches the Koszul route, and the v-number engine matches
/// the divisor scan.
pub fn check_oracles(i: &MonomialIdeal, caps: &Caps) -> Vec<Verdict> {
    let instance = i.to_string();
    let mut out = Vec::new();
    out.push(guarded("oracle-betti", &instance, || {
        let table = betti_numbers(&polarize(i)?.ideal, caps)?;
        let top = i.max_gen_degree()?;
        for j in 0..=top {
            let count = i.generators().iter().filter(|g| g.degree() == j).count() as u64;
            if table.get(1, j) != count {
                return Ok(Verdict::fail(
                    "oracle-betti",
                    witness(
                        &instance,
                        None,
                        format!("β_(1,{j})(R/I) = {}", table.get(1, j)),
                        "=",
                        format!("{count} generators of degree {j}"),
                    ),
                ));
            }
        }
        Ok(Verdict::pass(
            "oracle-betti",
            format!("{} generators", i.num_generators()),
        ))
    }));
    out.push(guarded("oracle-decomposition", &instance, || {
        let n = i.nvars();
        let comps: Vec<MonomialIdeal> = irreducible_decomposition(i)?
            .iter()
            .map(|c| c.to_ideal(n))
            .collect();
        let back = MonomialIdeal::intersect_all(&comps)?;
        Ok(if &back == i {
            Verdict::pass(
                "oracle-decomposition",
                format!("{} components", comps.len()),
            )
        } else {
            Verdict::fail(
                "oracle-decomposition",
                witness(&instance, None, format!("∩ components = {back}"), "=", "I"),
            )
        })
    }));
    out.push(guarded("oracle-lp", &instance, || {
        if !i.is_squarefree() {
            return Ok(Verdict::skip("oracle-lp", "not square-free"));
        }
        let p = symbolic_polyhedron(i)?;
        let lp = lp_minimize(&p, &vec![Rational::from_integer(1.into()); p.dim()])?.value;
        let scan = enumerate_vertices(&p, caps.vertex_dim)?
            .iter()
            .map(|y| coordinate_sum(y))
            .min()
            .ok_or_else(|| Error::Structural("polyhedron without vertices".into()))?;
        Ok(if lp == scan {
            Verdict::pass("oracle-lp", format!("α̂ = {lp}"))
        } else {
            Verdict::fail(
                "oracle-lp",
                witness(
                    &instance,
                    None,
                    format!("LP optimum {lp}"),
                    "=",
                    format!("vertex scan {scan}"),
                ),
            )
        })
    }));
    out.push(guarded("oracle-koszul", &instance, || {
        let (h, k) = (
            betti_numbers(&polarize(i)?.ideal, caps)?,
            koszul_betti_numbers(i, caps)?,
        );
        Ok(if h == k {
            Verdict::pass(
                "oracle-koszul",
                format!("reg = {}", h.regularity().unwrap_or(0)),
            )
        } else {
            Verdict::fail(
                "oracle-koszul",
                witness(
                    &instance,
                    None,
                    format!("Hochster {}", h.to_csv().trim().replace('\n', ";")),
                    "=",
                    format!("Koszul {}", k.to_csv().trim().replace('\n', ";")),
                ),
            )
        })
    }));
    out.push(guarded("oracle-v-scan", &instance, || {
        let (engine, scan) = (v_number_capped(i, caps)?, v_number_by_scan(i, caps)?);
        Ok(if engine == scan {
            Verdict::pass("oracle-v-scan", format!("v = {}", engine.v))
        } else {
            Verdict::fail(
                "oracle-v-scan",
                witness(
                    &instance,
                    None,
                    format!("engine {engine}"),
                    "=",
                    format!("scan {scan}"),
                ),
            )
        })
    }));
    out
}

/// Slope of `v(J(G)^(k))` fitted on `k ≤ K` against `|V(G)|/2`, recorded
/// for whiskered cycles rather than asserted.
pub fn record_whiskered_cycle_slope(g: &Graph, max_k: u32, caps: &Caps) -> Verdict {
    const NAME: &str = "whiskered-cycle-slope";
    let instance = format!("J({g:?})");
    guarded(NAME, &instance, || {
        let seq =
            crate::vnumber::v_sequence(&cover_ideal(g)?, max_k, PowerKind::SYMBOLIC_MIN, caps)?;
        let target = Rational::new((g.nverts() as i64).into(), 2.into());
        Ok(match first_fit(&seq) {
            Some(fit) => Verdict::new(
                NAME,
                if fit.slope == target {
                    Status::Pass
                } else {
                    Status::Inconclusive
                },
                None,
                Some(format!("fitted slope {} vs |V|/2 = {target}", fit.slope)),
            ),
            None => Verdict::skip(NAME, format!("no fit for k ≤ {max_k}")),
        })
    })
}
