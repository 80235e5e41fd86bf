mod common;

use bicenter_core::geometry::{candidate_values_edge_pair, candidate_values_graph, distance_function, feasible_intervals};
use bicenter_core::oracle::{oracle_solve, DEFAULT_ORACLE_CAP};
use bicenter_core::{EdgePoint, Instance, InstanceSpec};
use common::{arb_graph, frac, int, unit_path};
use proptest::prelude::*;
use proptest::sample::Index;

#[test]
fn one_pair_edge_candidates_hold_optimum() {
    let inst = Instance::build(&InstanceSpec {
        weights: vec![int(2), int(3), int(1)],
        edges: vec![(0, 1, int(4)), (1, 2, int(5))],
        pairs: vec![(0, 2)],
    })
    .unwrap()
    .normalize();
    let optimum = oracle_solve(&inst, DEFAULT_ORACLE_CAP).unwrap();
    assert!(candidate_values_edge_pair(&inst, 0, 1).contains(&optimum));
}

#[test]
fn unit_path_candidates() {
    let inst = unit_path([1, 1, 1, 1]);
    let values = candidate_values_graph(&inst);
    assert!(values.contains(&frac(1, 2)));
    assert_eq!(values[0], int(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn distance_function_matches_point_distance(inst in arb_graph(2, 9), v in any::<Index>(), e in any::<Index>(), num in 0i64..=16) {
        let (v, e) = (v.index(inst.vertex_count()), e.index(inst.edge_count()));
        let f = distance_function(&inst, v, e);
        let t = &inst.edge(e).length * &frac(num, 16);
        let p = EdgePoint { edge: e, t: t.clone() };
        prop_assert_eq!(f.value(&t), inst.weighted_distance(v, &p));
    }

    #[test]
    fn feasible_intervals_match_sampling(
        inst in arb_graph(2, 9), v in any::<Index>(), e in any::<Index>(), lam in 0i64..=60, lam_den in 1i64..=4
    ) {
        let (v, e) = (v.index(inst.vertex_count()), e.index(inst.edge_count()));
        let lambda = frac(lam, lam_den);
        let fi = feasible_intervals(&inst, v, e, &lambda);
        let bigger = feasible_intervals(&inst, v, e, &(&lambda + &int(1)));
        for num in 0..=48 {
            let t = &inst.edge(e).length * &frac(num, 48);
            let inside = inst.weighted_distance(v, &EdgePoint { edge: e, t: t.clone() }) <= lambda;
            prop_assert_eq!(fi.contains(&t), inside);
            if inside {
                prop_assert!(bigger.contains(&t));
            }
        }
        for i in fi.intervals() {
            prop_assert!(i.lo <= i.hi);
        }
    }

    #[test]
    fn optimum_is_a_graph_candidate(inst in arb_graph(2, 8)) {
        let inst = inst.normalize();
        let optimum = oracle_solve(&inst, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert!(candidate_values_graph(&inst).binary_search(&optimum).is_ok());
    }
}
