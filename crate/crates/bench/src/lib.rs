//! Fixed inputs shared by the benchmarks.

use vnumber_core::combinatorics::Graph;
use vnumber_core::monomial::MonomialIdeal;
use vnumber_core::symbolic::PowerKind;

/// Cover ideal of the cycle on `n` vertices.
pub fn cycle_cover(n: usize) -> MonomialIdeal {
    cover(&Graph::cycle(n).expect("n ≥ 3"))
}

/// Cover ideal of the whiskered path on `n` base vertices.
pub fn whiskered_path_cover(n: usize) -> MonomialIdeal {
    cover(&Graph::path(n).and_then(|g| g.whisker()).expect("n ≥ 2"))
}

/// `J(C_n)^(k)`.
pub fn symbolic_cycle_cover(n: usize, k: u32) -> MonomialIdeal {
    PowerKind::SYMBOLIC_MIN
        .nth(&cycle_cover(n), k)
        .expect("symbolic power of a cover ideal")
}

pub fn cover(g: &Graph) -> MonomialIdeal {
    vnumber_core::harness::report::graph_ideal(g, vnumber_core::harness::report::IdealKind::Cover)
        .expect("graph with an edge")
}
