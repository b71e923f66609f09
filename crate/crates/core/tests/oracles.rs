//! Fast engines against slow definitional oracles on random small inputs.

use proptest::prelude::*;

use vnumber_core::combinatorics::{cover_ideal, cover_ideal_by_intersection, Graph};
use vnumber_core::decomposition::{associated_primes, irreducible_decomposition, minimal_primes};
use vnumber_core::monomial::{Monomial, MonomialIdeal};
use vnumber_core::polyhedron::{coordinate_sum, enumerate_vertices};
use vnumber_core::regularity::{
    betti_numbers, koszul_betti_numbers, polarize, regularity, regularity_koszul,
};
use vnumber_core::symbolic::{
    symbolic_polyhedron, symbolic_power, symbolic_power_by_prime_powers, waldschmidt_constant,
    PowerKind, SymbolicPowerVariant,
};
use vnumber_core::vnumber::{is_witness, v_number, v_number_by_scan};
use vnumber_core::Caps;

fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::new)
}

/// Proper nonzero ideals on `nvars` variables.
fn ideal(nvars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(nvars, max_exp), 1..=max_gens)
        .prop_map(move |g| MonomialIdeal::minimalize(nvars, g).unwrap())
        .prop_filter("proper nonzero", |i| i.is_proper() && !i.is_zero())
}

fn squarefree(nvars: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal(nvars, 1, max_gens)
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::new(n, edges).unwrap()
        })
        .prop_filter("has an edge", |g| g.num_edges() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn colon_is_membership(i in ideal(3, 3, 4), f in monomial(3, 3), m in monomial(3, 3)) {
        prop_assert_eq!(i.colon(&f).contains_monomial(&m), i.contains_monomial(&m.mul(&f)));
    }

    #[test]
    fn intersection_is_membership(a in ideal(3, 3, 3), b in ideal(3, 3, 3), m in monomial(3, 4)) {
        let c = a.intersect(&b).unwrap();
        prop_assert_eq!(c.contains_monomial(&m), a.contains_monomial(&m) && b.contains_monomial(&m));
    }

    #[test]
    fn decomposition_reintersects(i in ideal(4, 3, 4)) {
        let parts: Vec<MonomialIdeal> = irreducible_decomposition(&i)
            .unwrap()
            .iter()
            .map(|c| c.to_ideal(i.nvars()))
            .collect();
        prop_assert_eq!(MonomialIdeal::intersect_all(&parts).unwrap(), i);
    }

    #[test]
    fn min_is_the_minimal_part_of_ass(i in ideal(4, 3, 4)) {
        let ass = associated_primes(&i).unwrap();
        let min = minimal_primes(&i).unwrap();
        for p in &min {
            prop_assert!(ass.contains(p));
        }
        for p in &ass {
            prop_assert!(min.iter().any(|q| q.is_subset(p)));
        }
        if i.is_squarefree() {
            prop_assert_eq!(ass, min);
        }
    }

    #[test]
    fn structural_v_matches_scan(i in ideal(3, 3, 4)) {
        let fast = v_number(&i).unwrap();
        let slow = v_number_by_scan(&i, &Caps::default()).unwrap();
        prop_assert_eq!(fast.v, slow.v);
        for (p, l) in &fast.local {
            prop_assert_eq!(l.v, slow.local[p].v);
            prop_assert!(is_witness(&i, &l.witness, p));
            prop_assert_eq!(l.witness.degree(), l.v);
        }
    }

    #[test]
    fn cover_ideal_by_covers_and_by_intersection(g in graph(6)) {
        prop_assert_eq!(cover_ideal(&g).unwrap(), cover_ideal_by_intersection(&g).unwrap());
    }

    #[test]
    fn lp_matches_vertex_scan(i in squarefree(5, 5)) {
        let p = symbolic_polyhedron(&i).unwrap();
        let scan = enumerate_vertices(&p, 12).unwrap().iter().map(|y| coordinate_sum(y)).min().unwrap();
        prop_assert_eq!(waldschmidt_constant(&i).unwrap(), scan);
    }

    #[test]
    fn hochster_matches_koszul(i in squarefree(5, 5)) {
        let caps = Caps::default();
        prop_assert_eq!(betti_numbers(&i, &caps).unwrap(), koszul_betti_numbers(&i, &caps).unwrap());
    }

    #[test]
    fn polarization_keeps_betti_numbers(i in ideal(3, 3, 3)) {
        let caps = Caps::default();
        let p = polarize(&i).unwrap();
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(koszul_betti_numbers(&i, &caps).unwrap(), betti_numbers(&p.ideal, &caps).unwrap());
        prop_assert_eq!(regularity_koszul(&i, &caps).unwrap(), regularity(&i, &caps).unwrap());
    }

    #[test]
    fn polarization_never_raises_v(i in ideal(3, 3, 3)) {
        let p = polarize(&i).unwrap();
        prop_assert!(v_number(&p.ideal).unwrap().v <= v_number(&i).unwrap().v);
    }

    #[test]
    fn squarefree_symbolic_powers_agree(i in squarefree(4, 5), k in 1u32..=3) {
        let by_saturation = symbolic_power(&i, k, SymbolicPowerVariant::Min).unwrap();
        prop_assert_eq!(&by_saturation, &symbolic_power_by_prime_powers(&i, k).unwrap());
        prop_assert_eq!(&by_saturation, &symbolic_power(&i, k, SymbolicPowerVariant::Ass).unwrap());
        prop_assert!(by_saturation.contains_ideal(&i.power(k)));
    }

    #[test]
    fn symbolic_powers_descend(i in ideal(3, 2, 3), k in 1u32..=3) {
        let a = PowerKind::SYMBOLIC_MIN.nth(&i, k).unwrap();
        let b = PowerKind::SYMBOLIC_MIN.nth(&i, k + 1).unwrap();
        prop_assert!(a.contains_ideal(&b));
    }

    #[test]
    fn sandwich(i in squarefree(4, 5), k in 1u32..=3) {
        let ik = PowerKind::SYMBOLIC_MIN.nth(&i, k).unwrap();
        let vk = v_number(&ik).unwrap().v;
        let bound = (k as u64 - 1) * i.max_gen_degree().unwrap() + v_number(&i).unwrap().v;
        prop_assert!(ik.alpha().unwrap() - 1 <= vk && vk <= bound);
    }

    #[test]
    fn text_round_trip(i in ideal(4, 3, 4)) {
        prop_assert_eq!(MonomialIdeal::parse(&i.to_text()).unwrap(), i);
    }
}
