use tourn_core::decomposition::{outside_partition, transitive_min_max, QBlock};
use tourn_core::*;

fn w5() -> Tournament {
    gen_critical(CriticalKind::W, 5).unwrap()
}

fn h7() -> Tournament {
    assemble_family(&FamilySpec::new(Family::H, vec![1, 1])).unwrap()
}

fn nonempty(p: &OutsidePartition) -> Vec<(QBlock, VertexSet)> {
    p.q_blocks().into_iter().filter(|(_, s)| !s.is_empty()).collect()
}

fn set<const N: usize>(v: [usize; N]) -> VertexSet {
    VertexSet::from(v)
}

#[test]
fn construction() {
    let c = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(c, c3());
    assert_eq!(Tournament::from_arcs(1, &[]).unwrap(), Tournament::single_vertex());
    assert_eq!(
        Tournament::from_arcs(2, &[(0, 1), (1, 0)]),
        Err(Error::ConflictingPair(0, 1))
    );
}

#[test]
fn subtournaments() {
    let w7 = gen_critical(CriticalKind::W, 7).unwrap();
    let (sub, map) = w7.subtournament(VertexSet::range(6)).unwrap();
    assert_eq!(sub, total_order(6));
    assert_eq!(map, (0..6).collect::<Vec<_>>());
    let t = gen_paley7();
    assert_eq!(t.subtournament(t.vertices()).unwrap().0, t);
    let (tri, map) = w5().subtournament(set([0, 1, 4])).unwrap();
    assert_eq!(map, vec![0, 1, 4]);
    assert!(tri.beats(0, 1) && tri.beats(1, 2) && tri.beats(2, 0));
    assert!(w5().subtournament(set([0, 5])).is_err());
}

#[test]
fn out_neighbours() {
    assert_eq!(w5().out_neighbors(4).unwrap(), set([0, 2]));
    assert_eq!(total_order(4).out_neighbors(0).unwrap(), set([1, 2, 3]));
    assert_eq!(c3().out_neighbors(2).unwrap(), set([0]));
    assert!(c3().out_neighbors(3).is_err());
}

#[test]
fn u7_is_not_w7() {
    let u7 = gen_critical(CriticalKind::U, 7).unwrap();
    let w7 = gen_critical(CriticalKind::W, 7).unwrap();
    assert!(!is_isomorphic(&u7, &w7));
}

#[test]
fn intervals() {
    let t = gen_paley7();
    assert!(is_interval(&t, VertexSet::EMPTY).unwrap());
    assert!(is_interval(&t, set([3])).unwrap());
    assert!(is_interval(&t, t.vertices()).unwrap());
    assert!(!is_interval(&c3(), set([0, 1])).unwrap());
    assert!(is_interval(&total_order(3), set([0, 1])).unwrap());
    assert!(is_interval(&c3(), set([0, 7])).is_err());
}

#[test]
fn indecomposability() {
    assert!(is_indecomposable(&w5()));
    for n in 3..10 {
        assert!(!is_indecomposable(&total_order(n)));
        assert!(nontrivial_intervals(&total_order(n)).contains(&set([0, 1])));
    }
    assert!(nontrivial_intervals(&w5()).is_empty());
}

#[test]
fn supports() {
    assert_eq!(support(&gen_critical(CriticalKind::T, 7).unwrap()), Ok(VertexSet::EMPTY));
    assert_eq!(support(&gen_paley7()), Ok(VertexSet::range(7)));
    assert_eq!(support(&h7()), Ok(set([0, 1])));
    assert_eq!(support(&total_order(5)), Err(Error::NotIndecomposable));
    assert_eq!(critical_vertices(&h7()), Ok(set([2, 3, 4, 5, 6])));
}

#[test]
fn outside_partitions() {
    let p = outside_partition(&w5(), set([0, 1, 4])).unwrap();
    assert_eq!(p.x_plus, set([2]));
    assert_eq!(p.block(QBlock::PlusOf(1)), set([3]));
    assert!(p.ext.is_empty() && p.x_minus.is_empty());
    assert_eq!(nonempty(&p).len(), 2);

    let all = outside_partition(&w5(), VertexSet::range(5)).unwrap();
    assert!(nonempty(&all).is_empty());

    let p = outside_partition(&h7(), set([0, 1, 2])).unwrap();
    assert!(p.ext.is_empty());
    let blocks = nonempty(&p);
    assert_eq!(blocks.len(), 4);
    assert!(blocks.iter().all(|(_, s)| s.len() == 1));
    for b in [QBlock::PlusOf(0), QBlock::Minus, QBlock::Plus, QBlock::MinusOf(1)] {
        assert_eq!(p.block(b).len(), 1, "{b}");
    }

    assert_eq!(
        outside_partition(&w5(), set([0, 1, 2])).map(|_| ()),
        Err(Error::CoreNotIndecomposable)
    );
    assert_eq!(
        outside_partition(&w5(), set([0, 1])).map(|_| ()),
        Err(Error::CoreTooSmall(2))
    );
}

#[test]
fn outside_graphs() {
    let g = outside_graph(&w5(), set([0, 1, 4])).unwrap();
    assert_eq!(g.edges(), vec![(2, 3)]);
    assert_eq!(g.connected_components(), vec![set([2, 3])]);
    let g = outside_graph(&w5(), VertexSet::range(5)).unwrap();
    assert_eq!(g.edge_count(), 0);
    assert!(g.connected_components().is_empty());
}

#[test]
fn partial_criticality() {
    assert_eq!(is_partially_critical(&w5(), set([0, 1, 4])), Ok(true));
    assert_eq!(is_partially_critical(&h7(), set([0, 1, 2])), Ok(true));
    let p7 = gen_paley7();
    for x in tourn_core::vertex_set::subsets_of_size(p7.vertices(), 3) {
        if !p7.is_transitive_on(x) {
            assert_eq!(is_partially_critical(&p7, x), Ok(false));
        }
    }
}

#[test]
fn sayar_reports() {
    let r = check_sayar(&h7(), set([0, 1, 2])).unwrap();
    assert!(r.ok && r.ext_empty && r.transitivity_ok);
    assert_eq!(r.components.len(), 2);
    assert!(r.components.iter().all(|c| c.half_size == 1 && c.ok()));

    // In U7 the 3-cycle {0, 3, 4} has a single component.
    let u7 = gen_critical(CriticalKind::U, 7).unwrap();
    let core = set([0, 3, 4]);
    assert!(!u7.is_transitive_on(core));
    let r = check_sayar(&u7, core).unwrap();
    assert!(r.ok);
    assert_eq!(r.components.len(), 1);
    assert_eq!(r.components[0].half_size, 2);
}

#[test]
fn transitive_extremes() {
    assert_eq!(transitive_min_max(&total_order(3)), Ok((0, 2)));
    assert_eq!(transitive_min_max(&total_order(3).dual()), Ok((2, 0)));
    assert_eq!(transitive_min_max(&c3()), Err(Error::NotTransitive));
}

#[test]
fn figure_three() {
    let t = gen_h_figure3(2, 3).unwrap();
    let p = outside_partition(&t, set([0, 1, 2])).unwrap();
    let blocks = nonempty(&p);
    assert_eq!(blocks.len(), 4);
    assert!(blocks.iter().all(|(_, s)| s.len() == 1));
    for (k, n) in [(2, 3), (2, 5), (3, 4), (3, 6), (4, 5), (5, 6)] {
        let t = gen_h_figure3(k, n).unwrap();
        let r = check_sayar(&t, set([0, 1, 2])).unwrap();
        assert!(r.ok, "k={k} n={n}");
        let halves: Vec<_> = r.components.iter().map(|c| c.halves.unwrap()).collect();
        let norm = |(a, b): (QBlock, QBlock)| if a < b { (a, b) } else { (b, a) };
        let mut got: Vec<_> = halves.into_iter().map(norm).collect();
        got.sort();
        let mut want: Vec<_> = Family::H.components().into_iter().map(norm).collect();
        want.sort();
        assert_eq!(got, want, "k={k} n={n}");
    }
}

#[test]
fn assembled_members() {
    assert_eq!(support(&h7()), Ok(set([0, 1])));
    let l9 = assemble_family(&FamilySpec::new(Family::L, vec![1, 1, 1])).unwrap();
    assert_eq!(l9.n(), 9);
    assert_eq!(outside_graph(&l9, set([0, 1, 2])).unwrap().connected_components().len(), 3);
    assert!(matches!(
        assemble_family(&FamilySpec::new(Family::I, vec![1])),
        Err(Error::BadParameters(_))
    ));
}

#[test]
fn critical_families_have_empty_support() {
    for kind in [CriticalKind::T, CriticalKind::U, CriticalKind::W] {
        for size in (5..=15).step_by(2) {
            let t = gen_critical(kind, size).unwrap();
            assert!(is_indecomposable(&t), "{kind}{size}");
            assert_eq!(support(&t), Ok(VertexSet::EMPTY), "{kind}{size}");
        }
    }
}

#[test]
fn w5_examples() {
    let h = h7();
    assert_eq!(w5_vertex_set(&h).w5_vertices, set([2, 3, 4, 5, 6]));
    assert!(is_family_t_member(&h));
    assert!(!is_family_t_member(&gen_critical(CriticalKind::U, 7).unwrap()));
    let w7 = gen_critical(CriticalKind::W, 7).unwrap();
    assert_eq!(w5_set(&w7), VertexSet::range(7));
    assert!(!is_family_t_member(&w7));
}

#[test]
fn c_invariant_examples() {
    for fam in Family::ALL {
        for n in [7, 9, 11] {
            for spec in tourn_core::generators::all_family_specs(n) {
                if spec.family != fam {
                    continue;
                }
                let t = assemble_family(&spec).unwrap();
                let want = if fam.base() == Family::L { 3 } else { 2 };
                assert_eq!(c_invariant(&t), Ok(want), "{spec}");
                assert_eq!(c_invariant(&t.dual()), Ok(want), "{spec}");
            }
        }
    }
    assert_eq!(c_invariant(&w5()), Err(Error::NotFamilyT));
}
