//! Graphs and simple hypergraphs on at most 64 vertices, their edge and
//! cover ideals, and the combinatorial predicates used by the checks.
//!
//! Vertices are 0-based in memory and 1-based in text.

use std::collections::BTreeSet;
use std::fmt;

use crate::decomposition::PrimeSupport;
use crate::error::{Error, Result};
use crate::homology::full_mask;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::regularity::{is_cohen_macaulay, polarize};
use crate::symbolic::{symbolic_power, SymbolicPowerVariant};

/// A simple graph. Edges are stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > 64 {
            return Err(Error::Resource("graphs are limited to 64 vertices".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {}", u + 1)));
            }
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge {{{}, {}}} outside {n} vertices",
                    u + 1,
                    v + 1
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn nverts(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Neighborhood bitmask of every vertex.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let adj = self.adjacency();
        (0..self.n).filter(|&v| adj[v] == 0).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= adj[v];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(self.n)
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, self.edges.iter().map(|&(u, v)| 1 << u | 1 << v))
            .expect("graph edges form a simple hypergraph")
    }

    /// `C_n` for `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain("cycles need at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Attaches a new leaf `n + i` to every vertex `i`.
    pub fn whisker(&self) -> Result<Self> {
        let n = self.n;
        Graph::new(
            2 * n,
            self.edges.iter().copied().chain((0..n).map(|i| (i, n + i))),
        )
    }

    /// Header `graph <n>` followed by one 1-based edge `u v` per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: k + 1, msg };
            let mut toks = line.split_whitespace();
            match n {
                None => {
                    if toks.next() != Some("graph") {
                        return Err(perr("expected header `graph <n>`".into()));
                    }
                    let count = toks
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| perr("missing vertex count".into()))?;
                    if toks.next().is_some() {
                        return Err(perr("trailing tokens after header".into()));
                    }
                    n = Some(count);
                }
                Some(count) => {
                    let mut end = || {
                        toks.next()
                            .and_then(|t| t.parse::<usize>().ok())
                            .filter(|&v| v >= 1 && v <= count)
                            .ok_or_else(|| perr(format!("expected two vertices in 1..={count}")))
                    };
                    let (u, v) = (end()?, end()?);
                    if toks.next().is_some() {
                        return Err(perr("trailing tokens after edge".into()));
                    }
                    if u == v {
                        return Err(perr(format!("loop at vertex {u}")));
                    }
                    edges.push((u - 1, v - 1));
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "empty input".into(),
        })?;
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// The graph with vertices renamed by `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self
            .edges
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        write!(f, "G{}[{}]", self.n, es.join(" "))
    }
}

/// A simple hypergraph: no edge contains another.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<u64>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > 64 {
            return Err(Error::Resource(
                "hypergraphs are limited to 64 vertices".into(),
            ));
        }
        let mut es: Vec<u64> = edges.into_iter().collect();
        es.sort_unstable();
        es.dedup();
        for &e in &es {
            if e == 0 || e & !full_mask(n) != 0 {
                return Err(Error::Domain(
                    "hypergraph edges must be nonempty vertex subsets".into(),
                ));
            }
        }
        for &a in &es {
            if es.iter().any(|&b| a != b && a & b == a) {
                return Err(Error::Domain(
                    "hypergraph edges must be pairwise incomparable".into(),
                ));
            }
        }
        Ok(Hypergraph { n, edges: es })
    }

    /// The supports of the generators of a square-free ideal.
    pub fn from_ideal(i: &MonomialIdeal) -> Result<Self> {
        if !i.is_squarefree() || i.is_unit() {
            return Err(Error::Domain("expected a proper square-free ideal".into()));
        }
        Hypergraph::new(i.nvars(), i.generators().iter().map(Monomial::support_mask))
    }

    pub fn nverts(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::Domain("hypergraph has no edges".into()));
        }
        Ok(())
    }

    /// Inclusion-minimal transversals, as sorted vertex bitmasks.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<u64>> {
        self.require_edges()?;
        let mut found = BTreeSet::new();
        self.cover_search(0, &mut found);
        let mut covers: Vec<u64> = found
            .into_iter()
            .filter(|&c| self.is_minimal_cover(c))
            .collect();
        covers.sort_unstable();
        Ok(covers)
    }

    fn cover_search(&self, chosen: u64, found: &mut BTreeSet<u64>) {
        match self.edges.iter().find(|&&e| e & chosen == 0) {
            None => {
                found.insert(chosen);
            }
            Some(&e) => {
                for v in 0..self.n {
                    if e >> v & 1 == 1 {
                        self.cover_search(chosen | 1 << v, found);
                    }
                }
            }
        }
    }

    fn is_minimal_cover(&self, c: u64) -> bool {
        (0..self.n)
            .filter(|v| c >> v & 1 == 1)
            .all(|v| self.edges.iter().any(|&e| e & c == 1 << v))
    }

    /// Largest number of pairwise disjoint edges whose union induces exactly
    /// those edges.
    pub fn induced_matching_number(&self) -> Result<usize> {
        self.require_edges()?;
        let mut best = 0;
        self.matching_search(0, 0, &mut Vec::new(), &mut |m| best = best.max(m.len()));
        Ok(best)
    }

    /// `max Σ (|E_i| - 1)` over induced matchings containing an edge of
    /// maximum size; 0 when none qualifies.
    pub fn best_induced_matching_weight(&self) -> Result<u64> {
        self.require_edges()?;
        let top = self.edges.iter().map(|e| e.count_ones()).max().unwrap_or(0);
        let mut best = 0;
        self.matching_search(0, 0, &mut Vec::new(), &mut |m| {
            if m.iter().any(|e| e.count_ones() == top) {
                best = best.max(m.iter().map(|e| e.count_ones() as u64 - 1).sum());
            }
        });
        Ok(best)
    }

    fn is_induced(&self, used: u64, matching: &[u64]) -> bool {
        self.edges
            .iter()
            .all(|&e| e & used != e || matching.contains(&e))
    }

    fn matching_search(
        &self,
        start: usize,
        used: u64,
        matching: &mut Vec<u64>,
        visit: &mut impl FnMut(&[u64]),
    ) {
        visit(matching);
        for k in start..self.edges.len() {
            let e = self.edges[k];
            if e & used != 0 {
                continue;
            }
            matching.push(e);
            if self.is_induced(used | e, matching) {
                self.matching_search(k + 1, used | e, matching, visit);
            }
            matching.pop();
        }
    }
}

/// `I(H)`, generated by the products of the vertices of each edge.
pub fn edge_ideal(h: &Hypergraph) -> Result<MonomialIdeal> {
    h.require_edges()?;
    let n = h.nverts();
    MonomialIdeal::minimalize(n, h.edges().iter().map(|&e| mask_monomial(e, n)))
}

pub(crate) fn mask_monomial(mask: u64, n: usize) -> Monomial {
    Monomial::from_support((0..n).filter(|v| mask >> v & 1 == 1), n)
}

pub fn graph_edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    edge_ideal(&g.to_hypergraph())
}

pub fn minimal_vertex_covers(g: &Graph) -> Result<Vec<u64>> {
    g.to_hypergraph().minimal_vertex_covers()
}

/// `J(G)` from the minimal vertex covers.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let n = g.nverts();
    MonomialIdeal::minimalize(
        n,
        minimal_vertex_covers(g)?
            .into_iter()
            .map(|c| mask_monomial(c, n)),
    )
}

/// `J(G) = ⋂_{ij ∈ E} (x_i, x_j)`.
pub fn cover_ideal_by_intersection(g: &Graph) -> Result<MonomialIdeal> {
    if g.num_edges() == 0 {
        return Err(Error::Domain("graph has no edges".into()));
    }
    let n = g.nverts();
    let primes: Vec<MonomialIdeal> = g
        .edges()
        .map(|(u, v)| PrimeSupport::new(vec![u, v]).to_ideal(n))
        .collect();
    MonomialIdeal::intersect_all(&primes)
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    let iso = g.isolated_vertices();
    if !iso.is_empty() {
        return Err(Error::Domain(format!(
            "graph has isolated vertex {}",
            iso[0] + 1
        )));
    }
    if g.num_edges() == 0 {
        return Err(Error::Domain("graph has no edges".into()));
    }
    Ok(())
}

/// Even order, no isolated vertices, and every maximal independent set of
/// size `n/2` (equivalently every minimal cover).
pub fn is_very_well_covered(g: &Graph) -> Result<bool> {
    require_no_isolated(g)?;
    let n = g.nverts();
    if n % 2 == 1 {
        return Ok(false);
    }
    Ok(minimal_vertex_covers(g)?
        .iter()
        .all(|c| c.count_ones() as usize == n / 2))
}

pub fn is_cm_very_well_covered(g: &Graph) -> Result<bool> {
    Ok(is_very_well_covered(g)? && is_cohen_macaulay(&graph_edge_ideal(g)?)?)
}

/// The graph `G_k` together with the origin `(i, p)` of each vertex.
#[derive(Debug, Clone)]
pub struct FakhariGraph {
    pub graph: Graph,
    /// `names[i·k + p - 1] = (i, p)`.
    pub names: Vec<(usize, u32)>,
}

/// Vertices `x_{i,p}` for `p ≤ k`; `x_{i,p} x_{j,q}` is an edge when `ij` is
/// an edge of `G` and `p + q ≤ k + 1`.
pub fn fakhari_gk(g: &Graph, k: u32) -> Result<FakhariGraph> {
    if k < 1 {
        return Err(Error::Domain("G_k needs k ≥ 1".into()));
    }
    let n = g.nverts();
    let ku = k as usize;
    let idx = |i: usize, p: u32| i * ku + p as usize - 1;
    let mut edges = Vec::new();
    for (i, j) in g.edges() {
        for p in 1..=k {
            for q in 1..=k + 1 - p {
                edges.push((idx(i, p), idx(j, q)));
            }
        }
    }
    let names = (0..n).flat_map(|i| (1..=k).map(move |p| (i, p))).collect();
    Ok(FakhariGraph {
        graph: Graph::new(n * ku, edges)?,
        names,
    })
}

/// `(J(G)^{(k)})^𝒫 = J(G_k)` after matching copy `p` of `x_i` with `x_{i,p}`.
pub fn cover_polarization_check(g: &Graph, k: u32) -> Result<bool> {
    let gk = fakhari_gk(g, k)?;
    let target = cover_ideal(&gk.graph)?;
    let pol = polarize(&symbolic_power(
        &cover_ideal(g)?,
        k,
        SymbolicPowerVariant::Min,
    )?)?;
    let width = gk.graph.nverts();
    let mut mapped = Vec::new();
    for gen in pol.ideal.generators() {
        let mut exps = vec![0; width];
        for t in gen.support() {
            let (i, p) = pol.names[t];
            if p > k {
                return Ok(false);
            }
            exps[i * k as usize + p as usize - 1] = 1;
        }
        mapped.push(Monomial::new(exps));
    }
    Ok(MonomialIdeal::minimalize(width, mapped)? == target)
}

/// Vertex sets of the simple odd cycles.
pub fn odd_cycles(g: &Graph) -> Vec<u64> {
    let adj = g.adjacency();
    let mut found = BTreeSet::new();
    for s in 0..g.nverts() {
        // Cycles whose least vertex is `s`.
        let allowed = !(((1u64 << s) - 1) | (1 << s));
        let mut stack = vec![(s, 1u64 << s, 1usize)];
        while let Some((v, seen, len)) = stack.pop() {
            if len >= 3 && len % 2 == 1 && adj[v] >> s & 1 == 1 {
                found.insert(seen);
            }
            let mut next = adj[v] & allowed & !seen;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                stack.push((w, seen | 1 << w, len + 1));
            }
        }
    }
    found.into_iter().collect()
}

/// Every vertex has a neighbor on every odd cycle.
pub fn odd_cycle_condition(g: &Graph) -> bool {
    let adj = g.adjacency();
    odd_cycles(g)
        .iter()
        .all(|&c| adj.iter().all(|&nb| nb & c != 0))
}

/// Exchange property of an equigenerated ideal: for generators `u, v` and
/// `u_i > v_i` there is `j` with `u_j < v_j` and `x_j u / x_i ∈ I`.
pub fn is_polymatroidal(i: &MonomialIdeal) -> bool {
    if i.is_zero() || !i.is_equigenerated().unwrap_or(false) {
        return false;
    }
    let n = i.nvars();
    let gens = i.generators();
    gens.iter().all(|u| {
        gens.iter().all(|v| {
            (0..n).filter(|&a| u.exponent(a) > v.exponent(a)).all(|a| {
                (0..n).filter(|&b| u.exponent(b) < v.exponent(b)).any(|b| {
                    let w = u.with_exponent(a, u.exponent(a) - 1);
                    i.contains_monomial(&w.with_exponent(b, w.exponent(b) + 1))
                })
            })
        })
    })
}

pub fn is_bipartite(g: &Graph) -> bool {
    let adj = g.adjacency();
    let mut color = vec![None::<bool>; g.nverts()];
    for s in 0..g.nverts() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = vec![s];
        while let Some(v) = queue.pop() {
            let c = color[v].expect("colored");
            for w in (0..g.nverts()).filter(|w| adj[v] >> w & 1 == 1) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push(w);
                    }
                    Some(d) if d == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Repeatedly deletes simplicial vertices; chordal iff nothing is left.
pub fn is_chordal(g: &Graph) -> bool {
    let adj = g.adjacency();
    let mut alive = full_mask(g.nverts());
    while alive != 0 {
        let simplicial = (0..g.nverts()).filter(|v| alive >> v & 1 == 1).find(|&v| {
            let nb = adj[v] & alive;
            (0..g.nverts())
                .filter(|u| nb >> u & 1 == 1)
                .all(|u| nb & !(adj[u] | 1 << u) == 0)
        });
        match simplicial {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::ideal;

    fn g(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::new(n, es.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    fn k2() -> Graph {
        g(2, &[(1, 2)])
    }

    fn p4() -> Graph {
        Graph::path(4).unwrap()
    }

    fn c5() -> Graph {
        Graph::cycle(5).unwrap()
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(graph_edge_ideal(&k2()).unwrap(), ideal(2, &[&[1, 1]]));
        let tri = Graph::complete(3).unwrap();
        assert_eq!(
            graph_edge_ideal(&tri).unwrap(),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
        );
        let i = graph_edge_ideal(&c5()).unwrap();
        assert_eq!(i.num_generators(), 5);
        assert!(i.generators().iter().all(|m| m.degree() == 2));
        assert!(matches!(
            edge_ideal(&Hypergraph::new(3, []).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cover_ideal_examples() {
        assert_eq!(cover_ideal(&k2()).unwrap(), MonomialIdeal::maximal(2));
        let tri = Graph::complete(3).unwrap();
        assert_eq!(
            cover_ideal(&tri).unwrap(),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
        );
        let j = cover_ideal(&c5()).unwrap();
        assert_eq!(j.num_generators(), 5);
        assert!(j.generators().iter().all(|m| m.degree() == 3));
        assert_eq!(j, cover_ideal_by_intersection(&c5()).unwrap());
        assert!(matches!(
            cover_ideal(&Graph::new(3, []).unwrap()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cover_examples() {
        assert_eq!(minimal_vertex_covers(&k2()).unwrap(), vec![0b01, 0b10]);
        assert_eq!(
            minimal_vertex_covers(&Graph::path(3).unwrap()).unwrap(),
            vec![0b010, 0b101]
        );
        let covers = minimal_vertex_covers(&c5()).unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.count_ones() == 3));
    }

    #[test]
    fn very_well_covered_examples() {
        assert!(is_very_well_covered(&k2()).unwrap());
        assert!(!is_very_well_covered(&c5()).unwrap());
        assert!(is_very_well_covered(&Graph::cycle(4).unwrap()).unwrap());
        assert!(matches!(
            is_very_well_covered(&g(3, &[(1, 2)])),
            Err(Error::Domain(_))
        ));
        assert!(is_cm_very_well_covered(&k2()).unwrap());
        assert!(!is_cm_very_well_covered(&Graph::cycle(4).unwrap()).unwrap());
        assert!(is_cm_very_well_covered(&p4()).unwrap());
    }

    #[test]
    fn fakhari_examples() {
        let gk = fakhari_gk(&c5(), 1).unwrap();
        assert_eq!(gk.graph, c5());
        let gk = fakhari_gk(&k2(), 2).unwrap();
        // (1,1)=0, (1,2)=1, (2,1)=2, (2,2)=3
        assert_eq!(gk.graph, Graph::new(4, [(0, 2), (0, 3), (1, 2)]).unwrap());
        assert_eq!(gk.graph.nverts(), 4);
        assert_eq!(fakhari_gk(&c5(), 3).unwrap().graph.nverts(), 15);
        assert!(matches!(fakhari_gk(&k2(), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn cover_polarization_examples() {
        assert!(cover_polarization_check(&k2(), 2).unwrap());
        assert!(cover_polarization_check(&c5(), 1).unwrap());
        assert!(cover_polarization_check(&c5(), 2).unwrap());
        assert!(cover_polarization_check(&p4(), 3).unwrap());
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(k2().to_hypergraph().induced_matching_number().unwrap(), 1);
        assert_eq!(c5().to_hypergraph().induced_matching_number().unwrap(), 1);
        let two = g(4, &[(1, 2), (3, 4)]).to_hypergraph();
        assert_eq!(two.induced_matching_number().unwrap(), 2);
        assert_eq!(
            k2().to_hypergraph().best_induced_matching_weight().unwrap(),
            1
        );
        let h = Hypergraph::new(5, [0b00111, 0b11000]).unwrap();
        assert_eq!(h.best_induced_matching_weight().unwrap(), 3);
        let c6 = Graph::cycle(6).unwrap().to_hypergraph();
        assert_eq!(
            c6.best_induced_matching_weight().unwrap(),
            c6.induced_matching_number().unwrap() as u64
        );
    }

    #[test]
    fn odd_cycle_examples() {
        for n in 3..7 {
            assert!(odd_cycle_condition(&Graph::complete(n).unwrap()));
        }
        assert!(odd_cycle_condition(&c5()));
        assert!(odd_cycle_condition(&Graph::cycle(7).unwrap()));
        assert!(odd_cycle_condition(&Graph::cycle(4).unwrap()));
        assert!(odd_cycle_condition(&g(
            4,
            &[(1, 2), (2, 3), (1, 3), (3, 4)]
        )));
        // triangle with a pendant path of length 2: vertex 5 sees no triangle vertex
        assert!(!odd_cycle_condition(&g(
            5,
            &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]
        )));
        assert_eq!(odd_cycles(&Graph::complete(4).unwrap()).len(), 4);
    }

    #[test]
    fn polymatroidal_examples() {
        assert!(is_polymatroidal(&ideal(
            3,
            &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]
        )));
        assert!(!is_polymatroidal(&ideal(
            4,
            &[&[1, 1, 0, 0], &[0, 0, 1, 1]]
        )));
        assert!(is_polymatroidal(&MonomialIdeal::maximal(3)));
        assert!(!is_polymatroidal(&ideal(3, &[&[1, 0, 0], &[0, 1, 1]])));
    }

    #[test]
    fn bipartite_and_chordal() {
        assert!(is_bipartite(&Graph::cycle(4).unwrap()));
        assert!(!is_bipartite(&c5()));
        assert!(is_chordal(&Graph::complete(4).unwrap()));
        assert!(is_chordal(&p4()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
    }

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::parse("# pentagon\ngraph 5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
        assert_eq!(g, c5());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(
            Graph::parse("graph 3\n1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("graph 3\n2 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("edges 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn families() {
        assert_eq!(Graph::path(4).unwrap().num_edges(), 3);
        assert_eq!(Graph::complete(5).unwrap().num_edges(), 10);
        let w = Graph::path(2).unwrap().whisker().unwrap();
        assert_eq!(w.nverts(), 4);
        assert_eq!(w.num_edges(), 3);
        assert!(is_cm_very_well_covered(&w).unwrap());
        assert!(matches!(Graph::cycle(2), Err(Error::Domain(_))));
    }
}
