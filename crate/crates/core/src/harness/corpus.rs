//! Deterministic corpora of graphs and monomial ideals.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::Graph;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest vertex count for exhaustive graph enumeration.
pub const MAX_ALL_GRAPHS: usize = 6;
/// Largest vertex count for named families.
pub const MAX_FAMILY: usize = 8;
/// Largest variable count for exhaustive square-free enumeration.
pub const MAX_SQUAREFREE_VARS: usize = 5;

#[derive(Clone, PartialEq, Eq)]
pub enum Instance {
    Graph { name: String, graph: Graph },
    Ideal { name: String, ideal: MonomialIdeal },
}

impl Instance {
    pub fn graph(name: impl Into<String>, graph: Graph) -> Self {
        Instance::Graph {
            name: name.into(),
            graph,
        }
    }

    pub fn ideal(ideal: MonomialIdeal) -> Self {
        Instance::Ideal {
            name: ideal.to_string(),
            ideal,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Instance::Graph { name, .. } | Instance::Ideal { name, .. } => name,
        }
    }

    /// The text format accepted by the command line, preceded by a comment
    /// carrying the name.
    pub fn to_text(&self) -> String {
        match self {
            Instance::Graph { name, graph } => format!("# {name}\n{}", graph.to_text()),
            Instance::Ideal { name, ideal } => format!("# {name}\n{}", ideal.to_text()),
        }
    }
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which graphs to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFilter {
    /// At least one edge.
    AnyWithEdge,
    Connected,
    NoIsolated,
}

/// Short name listing the 1-based edges, e.g. `G4[1-2 2-3]`.
pub fn graph_name(g: &Graph) -> String {
    format!("{g:?}")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, chosen as the least edge mask in its class.
pub fn graphs_on(n: usize, filter: GraphFilter) -> Result<Vec<Graph>> {
    if n > MAX_ALL_GRAPHS {
        return Err(Error::Resource(format!(
            "exhaustive graph enumeration is capped at {MAX_ALL_GRAPHS} vertices"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = k;
        pair_index[v][u] = k;
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    for mask in 1u64..1 << pairs.len() {
        let canonical = perms.iter().all(|p| {
            let mut image = 0u64;
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << pair_index[p[u]][p[v]];
                }
            }
            image >= mask
        });
        if !canonical {
            continue;
        }
        let g = Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )?;
        let keep = match filter {
            GraphFilter::AnyWithEdge => true,
            GraphFilter::Connected => g.is_connected(),
            GraphFilter::NoIsolated => g.isolated_vertices().is_empty(),
        };
        if keep {
            out.push(g);
        }
    }
    Ok(out)
}

/// Graphs without isolated vertices on at most `n_max` vertices, one per
/// isomorphism class, smallest vertex count first.
pub fn graphs_without_isolated(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(graphs_on(n, GraphFilter::NoIsolated)?);
    }
    Ok(out)
}

/// Named families: `cycle`, `complete`, `path` give one graph on `n`
/// vertices; `whisker` whiskers every graph on `n` base vertices, edgeless
/// ones included.
pub fn family(name: &str, n: usize) -> Result<Vec<(String, Graph)>> {
    let check = |verts: usize| {
        if verts > MAX_FAMILY {
            Err(Error::Resource(format!(
                "families are capped at {MAX_FAMILY} vertices"
            )))
        } else {
            Ok(())
        }
    };
    match name {
        "cycle" => {
            check(n)?;
            Ok(vec![(format!("C{n}"), Graph::cycle(n)?)])
        }
        "complete" => {
            check(n)?;
            Ok(vec![(format!("K{n}"), Graph::complete(n)?)])
        }
        "path" => {
            check(n)?;
            Ok(vec![(format!("P{n}"), Graph::path(n)?)])
        }
        "whisker" => {
            check(2 * n)?;
            let mut bases = vec![Graph::new(n, [])?];
            if n <= MAX_ALL_GRAPHS {
                bases.extend(graphs_on(n, GraphFilter::AnyWithEdge)?);
            }
            bases
                .into_iter()
                .map(|b| Ok((format!("W({})", graph_name(&b)), b.whisker()?)))
                .collect()
        }
        other => Err(Error::Domain(format!("unknown family `{other}`"))),
    }
}

/// Whiskered graphs over every base graph on `1..=n` vertices.
pub fn whiskered_up_to(n: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for m in 1..=n {
        out.extend(family("whisker", m)?);
    }
    Ok(out)
}

fn canonical_antichain(sets: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    perms
        .iter()
        .map(|p| {
            let mut image: Vec<u64> = sets
                .iter()
                .map(|&s| {
                    (0..p.len())
                        .filter(|&v| s >> v & 1 == 1)
                        .fold(0u64, |m, v| m | 1 << p[v])
                })
                .collect();
            image.sort_unstable();
            image
        })
        .min()
        .expect("at least the identity")
}

/// Proper nonzero square-free ideals on at most `max_vars` variables with at
/// most `max_gens` generators, one per orbit under permuting variables. Each
/// ideal lives in the ring of exactly the variables it uses.
pub fn squarefree_ideals(max_vars: usize, max_gens: usize) -> Result<Vec<MonomialIdeal>> {
    if max_vars > MAX_SQUAREFREE_VARS {
        return Err(Error::Resource(format!(
            "square-free enumeration is capped at {MAX_SQUAREFREE_VARS} variables"
        )));
    }
    let n = max_vars;
    let subsets: Vec<u64> = (1u64..1 << n).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut stack: Vec<(Vec<u64>, usize)> = vec![(Vec::new(), 0)];
    while let Some((chosen, next)) = stack.pop() {
        if !chosen.is_empty() {
            seen.insert(canonical_antichain(&chosen, &perms));
        }
        if chosen.len() == max_gens {
            continue;
        }
        for (k, &s) in subsets.iter().enumerate().skip(next) {
            if chosen.iter().all(|&c| c & s != c && c & s != s) {
                let mut grown = chosen.clone();
                grown.push(s);
                stack.push((grown, k + 1));
            }
        }
    }
    let mut out: Vec<MonomialIdeal> = seen.into_iter().map(|sets| compress(&sets)).collect();
    out.sort_by(|a, b| (a.nvars(), a.num_generators(), a).cmp(&(b.nvars(), b.num_generators(), b)));
    out.dedup();
    Ok(out)
}

/// The ideal generated by the given supports, in the ring of the variables
/// they use, relabeled in increasing order.
fn compress(sets: &[u64]) -> MonomialIdeal {
    let used = sets.iter().fold(0u64, |m, &s| m | s);
    let vars: Vec<usize> = (0..64).filter(|v| used >> v & 1 == 1).collect();
    let n = vars.len();
    let gens = sets
        .iter()
        .map(|&s| Monomial::from_support((0..n).filter(|&t| s >> vars[t] & 1 == 1), n));
    MonomialIdeal::minimalize(n, gens).expect("consistent ring")
}

/// Every nonempty family of square-free degree-`d` monomials on `n`
/// variables, without identifying permuted copies.
pub fn squarefree_degree_families(n: usize, d: usize) -> Result<Vec<MonomialIdeal>> {
    let monos: Vec<Monomial> = (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == d)
        .map(|m| Monomial::from_support((0..n).filter(|v| m >> v & 1 == 1), n))
        .collect();
    if monos.len() > 20 {
        return Err(Error::Resource("too many candidate generator sets".into()));
    }
    (1u64..1 << monos.len())
        .map(|pick| {
            MonomialIdeal::minimalize(
                n,
                monos
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| pick >> k & 1 == 1)
                    .map(|(_, m)| m.clone()),
            )
        })
        .collect()
}

/// Seeded proper, nonzero, non-square-free ideals.
pub fn random_ideals(
    seed: u64,
    count: usize,
    nvars: usize,
    max_exp: u32,
    max_gens: usize,
) -> Result<Vec<MonomialIdeal>> {
    if nvars == 0 || max_exp < 2 || max_gens == 0 {
        return Err(Error::Domain(
            "random ideals need variables, exponents ≥ 2 and generators".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect()))
            .collect();
        let i = MonomialIdeal::minimalize(nvars, gens)?;
        if i.is_proper() && !i.is_zero() && !i.is_squarefree() {
            out.push(i);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graphs_on_three_vertices() {
        let gs = graphs_on(3, GraphFilter::Connected).unwrap();
        assert_eq!(gs.len(), 2);
        assert!(
            gs.contains(&Graph::path(3).unwrap().relabel(&[0, 1, 2]))
                || gs.iter().any(|g| g.num_edges() == 2)
        );
        assert!(gs.iter().any(|g| g.num_edges() == 3));
    }

    #[test]
    fn isomorphism_class_counts() {
        // Graphs with at least one edge: 1, 3, 10, 33 on 2..=5 vertices.
        let counts: Vec<usize> = (2..=5)
            .map(|n| graphs_on(n, GraphFilter::AnyWithEdge).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 10, 33]);
        let connected: Vec<usize> = (2..=6)
            .map(|n| graphs_on(n, GraphFilter::Connected).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 2, 6, 21, 112]);
        assert!(matches!(
            graphs_on(7, GraphFilter::Connected),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn families_and_whiskers() {
        let c5 = family("cycle", 5).unwrap();
        assert_eq!(c5[0].1, Graph::cycle(5).unwrap());
        assert_eq!(whiskered_up_to(3).unwrap().len(), 1 + 2 + 4);
        assert!(family("cycle", 9).is_err());
        assert!(family("petersen", 5).is_err());
    }

    #[test]
    fn squarefree_orbits() {
        // Antichains of a 2-set up to swapping, excluding {} and {∅}:
        // {x}, {xy}, {x, y}.
        assert_eq!(squarefree_ideals(2, 6).unwrap().len(), 3);
        // Monotone Boolean functions up to permuting inputs: 10 on 3 and 30
        // on 4 variables, two of them constant.
        assert_eq!(squarefree_ideals(3, 8).unwrap().len(), 8);
        assert_eq!(squarefree_ideals(4, 16).unwrap().len(), 28);
        assert_eq!(squarefree_degree_families(3, 2).unwrap().len(), 7);
    }

    #[test]
    fn random_ideals_are_deterministic() {
        let a = random_ideals(7, 20, 4, 3, 4).unwrap();
        let b = random_ideals(7, 20, 4, 3, 4).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|i| !i.is_squarefree() && i.is_proper()));
        assert_ne!(a, random_ideals(8, 20, 4, 3, 4).unwrap());
    }
}
