//! Naive reference computations checked against the library.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tourn_core::decomposition::{outside_partition, QBlock};
use tourn_core::vertex_set::subsets_of_size;
use tourn_core::*;

fn random(rng: &mut ChaCha8Rng, n: usize) -> Tournament {
    Tournament::from_fn(n, |_, _| rng.gen())
}

/// Tournaments built from a few indecomposable seeds plus random ones, so
/// that both decomposable and indecomposable inputs occur.
fn sample(rng: &mut ChaCha8Rng, n: usize) -> Tournament {
    if rng.gen_bool(0.5) {
        return random(rng, n);
    }
    // Perturb a critical tournament on n or n + 1 vertices.
    let size = if n % 2 == 1 { n } else { n + 1 };
    let kind = [CriticalKind::T, CriticalKind::U, CriticalKind::W][rng.gen_range(0..3)];
    let base = gen_critical(kind, size.max(5)).unwrap();
    let (mut t, _) = base.subtournament(VertexSet::range(n.min(base.n()))).unwrap();
    if rng.gen_bool(0.5) {
        let (x, y) = (rng.gen_range(0..t.n()), rng.gen_range(0..t.n()));
        if x != y {
            let arcs: Vec<(usize, usize)> = t
                .arcs()
                .into_iter()
                .map(|(a, b)| if (a, b) == (x, y) || (a, b) == (y, x) { (b, a) } else { (a, b) })
                .collect();
            t = Tournament::from_arcs(t.n(), &arcs).unwrap();
        }
    }
    t
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// The pair bitstring of `t` read in the order `order`.
fn bits(t: &Tournament, order: &[usize]) -> Vec<bool> {
    let mut v = Vec::new();
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            v.push(t.beats(order[i], order[j]));
        }
    }
    v
}

fn min_bits(t: &Tournament, perms: &[Vec<usize>]) -> Vec<bool> {
    perms.iter().map(|p| bits(t, p)).min().unwrap()
}

fn is_interval_def(t: &Tournament, s: &[usize]) -> bool {
    (0..t.n()).filter(|v| !s.contains(v)).all(|v| {
        let first = t.beats(v, s[0]);
        s.iter().all(|&x| t.beats(v, x) == first)
    })
}

/// Nontrivial intervals by testing every subset.
fn intervals_def(t: &Tournament) -> Vec<VertexSet> {
    let n = t.n();
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if s.len() >= 2 && s.len() < n && is_interval_def(t, &s) {
            out.push(VertexSet(mask));
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

fn indecomposable_def(t: &Tournament) -> bool {
    intervals_def(t).is_empty()
}

fn induced(t: &Tournament, s: VertexSet) -> Tournament {
    t.subtournament(s).unwrap().0
}

#[test]
fn canonical_code_is_minimum_over_all_relabelings() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=6 {
        let perms = permutations(n);
        for _ in 0..30 {
            let t = sample(&mut rng, n);
            let (code, order) = tourn_core::canon::canonical_labeling(&t);
            assert_eq!(bits(&t, &order), min_bits(&t, &perms), "{t:?}");
            assert_eq!(bits(&code.to_tournament(), &(0..n).collect::<Vec<_>>()), min_bits(&t, &perms));
        }
    }
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let perms = permutations(6);
    for _ in 0..60 {
        let a = sample(&mut rng, 6);
        let b = sample(&mut rng, 6);
        let brute = perms.iter().any(|p| a.permute(p) == b);
        assert_eq!(is_isomorphic(&a, &b), brute);
        if brute {
            let f = isomorphism(&a, &b).unwrap();
            assert_eq!(a.permute(&f), b);
        }
    }
}

#[test]
fn u7_and_w7_differ_under_every_relabeling() {
    let u7 = gen_critical(CriticalKind::U, 7).unwrap();
    let w7 = gen_critical(CriticalKind::W, 7).unwrap();
    assert!(permutations(7).iter().all(|p| u7.permute(p) != w7));
    assert!(!is_isomorphic(&u7, &w7));
}

#[test]
fn four_and_five_vertex_class_counts() {
    for (n, want, want_indec) in [(4, 4, 0), (5, 12, 3)] {
        let pairs = n * (n - 1) / 2;
        let mut classes: Vec<Tournament> = Vec::new();
        for mask in 0u64..1 << pairs {
            let mut k = 0;
            let t = Tournament::from_fn(n, |_, _| {
                k += 1;
                mask >> (k - 1) & 1 == 1
            });
            let perms = permutations(n);
            if !classes.iter().any(|c| perms.iter().any(|p| c.permute(p) == t)) {
                classes.push(t);
            }
        }
        assert_eq!(classes.len(), want);
        assert_eq!(classes.iter().filter(|t| indecomposable_def(t)).count(), want_indec);
        assert_eq!(enumerate_codes(n, &EnumOptions::default()).unwrap().len(), want);
    }
}

#[test]
fn intervals_match_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=9 {
        for _ in 0..25 {
            let t = sample(&mut rng, n);
            let want = intervals_def(&t);
            assert_eq!(nontrivial_intervals(&t), want, "{t:?}");
            assert_eq!(is_indecomposable(&t), want.is_empty());
            for s in &want {
                assert!(is_interval(&t, *s).unwrap());
            }
        }
    }
}

#[test]
fn support_matches_vertex_deletion() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for n in 3..=9 {
        for _ in 0..60 {
            let t = sample(&mut rng, n);
            if !indecomposable_def(&t) {
                assert_eq!(support(&t), Err(Error::NotIndecomposable));
                continue;
            }
            checked += 1;
            let want: VertexSet = (0..n)
                .filter(|&x| indecomposable_def(&t.remove(VertexSet::singleton(x)).unwrap().0))
                .collect();
            assert_eq!(support(&t).unwrap(), want, "{t:?}");
        }
    }
    assert!(checked > 50);
}

#[test]
fn outside_partition_matches_definitions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cores = 0;
    for n in 4..=8 {
        for _ in 0..40 {
            let t = sample(&mut rng, n);
            for k in [3, 5] {
                for x in subsets_of_size(t.vertices(), k) {
                    if !indecomposable_def(&induced(&t, x)) {
                        continue;
                    }
                    cores += 1;
                    let p = outside_partition(&t, x).unwrap();
                    let g = outside_graph(&t, x).unwrap();
                    for v in t.vertices().difference(x) {
                        let xv = x.with(v);
                        let sub = induced(&t, xv);
                        // Position of each original vertex inside sub.
                        let pos = |w: usize| xv.iter().position(|z| z == w).unwrap();
                        let core_pos: Vec<usize> = x.iter().map(pos).collect();
                        let want = if indecomposable_def(&sub) {
                            QBlock::Ext
                        } else if is_interval_def(&sub, &core_pos) {
                            if t.beats(v, x.min().unwrap()) { QBlock::Minus } else { QBlock::Plus }
                        } else {
                            let u = x
                                .iter()
                                .find(|&u| is_interval_def(&sub, &[pos(u), pos(v)]))
                                .expect("some block applies");
                            if t.beats(v, u) { QBlock::MinusOf(u) } else { QBlock::PlusOf(u) }
                        };
                        assert_eq!(p.block_of(v), Some(want), "v={v} X={x} {t:?}");
                    }
                    for pair in subsets_of_size(t.vertices().difference(x), 2) {
                        let (a, b) = (pair.min().unwrap(), pair.max().unwrap());
                        let want = indecomposable_def(&induced(&t, x.union(pair)));
                        assert_eq!(g.has_edge(a, b), want);
                    }
                }
            }
        }
    }
    assert!(cores > 100);
}

#[test]
fn embedding_matches_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let patterns = [c3(), gen_critical(CriticalKind::W, 5).unwrap(), gen_critical(CriticalKind::U, 5).unwrap(), total_order(4)];
    for _ in 0..40 {
        let n = rng.gen_range(4..=8);
        let t = sample(&mut rng, n);
        for p in &patterns {
            let brute = subsets_of_size(t.vertices(), p.n())
                .into_iter()
                .any(|z| is_isomorphic(&induced(&t, z), p));
            assert_eq!(embeds(p, &t), brute);
            if let Some(f) = find_embedding(p, &t) {
                for i in 0..p.n() {
                    for j in 0..p.n() {
                        if i != j {
                            assert_eq!(p.beats(i, j), t.beats(f[i], f[j]));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn w5_witnesses_are_least_subsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let w5 = gen_critical(CriticalKind::W, 5).unwrap();
    for _ in 0..40 {
        let n = rng.gen_range(5..=9);
        let t = sample(&mut rng, n);
        let report = w5_vertex_set(&t);
        let hits: Vec<VertexSet> = subsets_of_size(t.vertices(), 5)
            .into_iter()
            .filter(|&z| is_isomorphic(&induced(&t, z), &w5))
            .collect();
        let union = hits.iter().fold(VertexSet::EMPTY, |a, &z| a.union(z));
        assert_eq!(report.w5_vertices, union);
        assert_eq!(report.witness.len(), union.len());
        for (&v, &z) in &report.witness {
            assert!(z.contains(v));
            assert!(is_isomorphic(&induced(&t, z), &w5));
            assert_eq!(Some(&z), hits.iter().find(|h| h.contains(v)));
        }
    }
}

#[test]
fn minimal_pairs_match_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut seen = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=7);
        let t = sample(&mut rng, n);
        if !indecomposable_def(&t) {
            continue;
        }
        seen += 1;
        for x in 0..n {
            for y in x + 1..n {
                let mut minimal = true;
                for k in 3..n {
                    for s in subsets_of_size(t.vertices(), k) {
                        if s.contains(x) && s.contains(y) && indecomposable_def(&induced(&t, s)) {
                            minimal = false;
                        }
                    }
                }
                assert_eq!(is_minimal_for_pair(&t, x, y), Ok(minimal));
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn partial_criticality_matches_sayar_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..150 {
        let n = rng.gen_range(5..=9);
        let t = sample(&mut rng, n);
        if !is_indecomposable(&t) {
            continue;
        }
        for x in subsets_of_size(t.vertices(), 3) {
            if t.is_transitive_on(x) {
                continue;
            }
            let sigma = support(&t).unwrap();
            let by_def = sigma.is_subset(x);
            assert_eq!(is_partially_critical(&t, x), Ok(by_def));
            assert_eq!(check_sayar(&t, x).unwrap().ok, by_def, "X={x} {t:?}");
        }
    }
}
