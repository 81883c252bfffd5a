use proptest::prelude::*;
use semitotal_core::approx::{
    algo_dom_set, approx_semitotal, build_semitotal_setcover, greedy_dominating_set, greedy_set_cover, CoverSet,
    SetCoverInstance,
};
use semitotal_core::domination::{exact_min, is_valid, DominationKind};
use semitotal_core::generators::gen_connected_graph;
use semitotal_core::VertexSet;

fn seeded(seed: u64) -> semitotal_core::Graph {
    let n = 2 + (seed % 11) as usize;
    gen_connected_graph(n, [0.15, 0.3, 0.5][(seed % 3) as usize], seed).unwrap()
}

#[test]
fn ratios_hold_on_seeded_graphs() {
    for seed in 0..200u64 {
        let g = seeded(seed);
        let ln = ((g.max_degree() + 1) as f64).ln();

        let d = greedy_dominating_set(&g);
        assert!(is_valid(&g, &d, DominationKind::Dominating));
        let gamma = exact_min(&g, DominationKind::Dominating).unwrap().len();
        assert!(d.len() as f64 <= (1.0 + ln) * gamma as f64, "seed {seed}");

        let st = approx_semitotal(&g).unwrap();
        assert!(is_valid(&g, &st, DominationKind::Semitotal), "seed {seed}");
        let opt = exact_min(&g, DominationKind::Semitotal).unwrap().len();
        assert!(st.len() as f64 <= (2.0 + 3.0 * ln) * opt as f64, "seed {seed}");
    }
}

#[test]
fn setcover_family_shape() {
    for seed in 0..200u64 {
        let g = seeded(seed);
        let d = greedy_dominating_set(&g);
        let inst = build_semitotal_setcover(&g, &d).unwrap();
        let delta = g.max_degree();
        assert!(inst.max_set_size <= delta * delta, "seed {seed}");
        for s in &inst.family {
            assert!(!s.members.is_empty());
            assert!(!d.contains(s.owner));
            let ball = g.neighborhood_within(s.owner, 2).unwrap();
            let expected: VertexSet = ball.iter().filter(|&v| inst.universe.contains(v)).collect();
            assert_eq!(s.members, expected);
        }
        // The family covers X on connected graphs.
        assert!(greedy_set_cover(&inst).is_ok());
    }
}

#[test]
fn algo_dom_set_is_dominating() {
    for seed in 0..100u64 {
        let n = 1 + (seed % 10) as usize;
        let g = gen_connected_graph(n, 0.25, seed).unwrap();
        let d = algo_dom_set(&g, 1).unwrap();
        assert!(is_valid(&g, &d, DominationKind::Dominating), "seed {seed}");
    }
}

fn min_cover(inst: &SetCoverInstance) -> usize {
    let sets = &inst.family;
    (0u32..1 << sets.len())
        .filter(|mask| {
            inst.universe
                .iter()
                .all(|x| (0..sets.len()).any(|i| mask & (1 << i) != 0 && sets[i].members.contains(x)))
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

fn arb_instance() -> impl Strategy<Value = SetCoverInstance> {
    (1usize..10, 1usize..=12).prop_flat_map(|(universe, sets)| {
        proptest::collection::vec(proptest::collection::btree_set(0..universe, 1..=universe), sets).prop_map(
            move |family| {
                let mut family: Vec<CoverSet> = family
                    .into_iter()
                    .enumerate()
                    .map(|(owner, s)| CoverSet { owner, members: s.into_iter().collect() })
                    .collect();
                // Make sure every element is coverable.
                family.push(CoverSet { owner: family.len(), members: (0..universe).collect() });
                SetCoverInstance::new((0..universe).collect(), family)
            },
        )
    })
}

proptest! {
    #[test]
    fn greedy_cover_is_within_log_factor(inst in arb_instance()) {
        let picked = greedy_set_cover(&inst).unwrap();
        let covered: VertexSet = inst
            .family
            .iter()
            .filter(|s| picked.contains(&s.owner))
            .flat_map(|s| s.members.iter())
            .collect();
        prop_assert_eq!(&covered, &inst.universe);
        let bound = 1.0 + (inst.max_set_size as f64).ln();
        prop_assert!(picked.len() as f64 <= bound * min_cover(&inst) as f64);
    }

    #[test]
    fn approximation_is_deterministic(seed in any::<u64>()) {
        let g = seeded(seed);
        prop_assert_eq!(approx_semitotal(&g).unwrap(), approx_semitotal(&g.clone()).unwrap());
    }
}
