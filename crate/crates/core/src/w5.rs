//! Embeddings, the set `W5(T)` and the invariants built on it.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_code;
use crate::decomposition::{
    indecomposable_masks, is_indecomposable, outside_graph_unchecked, support_unchecked,
};
use crate::error::{Error, Result};
use crate::generators::{gen_critical, CriticalKind};
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// An embedding of `p` into `t`: `f[i]` is the image of vertex `i` of `p`.
/// Vertices of `p` are placed in order and each candidate image must have at
/// least the out- and in-degree of the vertex it receives.
pub fn find_embedding(p: &Tournament, t: &Tournament) -> Option<Vec<usize>> {
    let k = p.n();
    if k > t.n() {
        return None;
    }
    let n = t.n();
    let need_out: Vec<usize> = (0..k).map(|i| p.out_degree(i)).collect();
    let candidates: Vec<u64> = (0..k)
        .map(|i| {
            (0..n)
                .filter(|&v| t.out_degree(v) >= need_out[i] && n - 1 - t.out_degree(v) >= k - 1 - need_out[i])
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();
    let mut f = Vec::with_capacity(k);
    if extend(p, t, &candidates, &mut f, 0) {
        Some(f)
    } else {
        None
    }
}

fn extend(p: &Tournament, t: &Tournament, cand: &[u64], f: &mut Vec<usize>, used: u64) -> bool {
    let i = f.len();
    if i == cand.len() {
        return true;
    }
    let mut c = cand[i] & !used;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        if f.iter().enumerate().all(|(j, &w)| p.beats(j, i) == t.beats(w, v)) {
            f.push(v);
            if extend(p, t, cand, f, used | 1 << v) {
                return true;
            }
            f.pop();
        }
    }
    false
}

/// Whether `p` is isomorphic to a subtournament of `t`.
pub fn embeds(p: &Tournament, t: &Tournament) -> bool {
    find_embedding(p, t).is_some()
}

/// `W5(T)` with, for every member, the lexicographically least 5-subset
/// inducing `W5` that contains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W5Report {
    pub w5_vertices: VertexSet,
    pub witness: BTreeMap<usize, VertexSet>,
}

/// Orientation patterns of the ten pairs of a 5-set, bit `k` set when the
/// `k`-th pair in lexicographic order points forward.
fn w5_patterns() -> &'static [u64; 16] {
    static TABLE: OnceLock<[u64; 16]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let target = canonical_code(&gen_critical(CriticalKind::W, 5).expect("W5"));
        let mut table = [0u64; 16];
        for pat in 0..1024usize {
            let mut k = 0;
            let t = Tournament::from_fn(5, |_, _| {
                let bit = pat >> k & 1 == 1;
                k += 1;
                bit
            });
            if canonical_code(&t) == target {
                table[pat / 64] |= 1 << (pat % 64);
            }
        }
        table
    })
}

fn pattern(out: &[u64], z: [usize; 5]) -> usize {
    let mut pat = 0;
    let mut k = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            pat |= ((out[z[i]] >> z[j] & 1) as usize) << k;
            k += 1;
        }
    }
    pat
}

/// Whether the 5-set `z`, listed in increasing order, induces `W5`.
pub(crate) fn induces_w5(out: &[u64], z: [usize; 5]) -> bool {
    let pat = pattern(out, z);
    w5_patterns()[pat / 64] >> (pat % 64) & 1 == 1
}

pub fn w5_vertex_set(t: &Tournament) -> W5Report {
    let n = t.n();
    let out = t.out_masks();
    let mut w5 = 0u64;
    let mut witness = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let z = [a, b, c, d, e];
                        if induces_w5(out, z) {
                            let zset = VertexSet::from(z);
                            for v in z {
                                if w5 >> v & 1 == 0 {
                                    witness.insert(v, zset);
                                }
                            }
                            w5 |= zset.bits();
                        }
                    }
                }
            }
        }
    }
    W5Report { w5_vertices: VertexSet(w5), witness }
}

/// `W5(T)` without witnesses; stops as soon as every vertex is covered.
pub fn w5_set(t: &Tournament) -> VertexSet {
    let n = t.n();
    let out = t.out_masks();
    let all = t.vertices().bits();
    let mut w5 = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let z = [a, b, c, d, e];
                        let zb = VertexSet::from(z).bits();
                        if zb & !w5 != 0 && induces_w5(out, z) {
                            w5 |= zb;
                            if w5 == all {
                                return VertexSet(w5);
                            }
                        }
                    }
                }
            }
        }
    }
    VertexSet(w5)
}

/// Indecomposable on at least 3 vertices with `|W5(T)| = |T| - 2`.
pub fn is_family_t_member(t: &Tournament) -> bool {
    t.n() >= 3 && is_indecomposable(t) && w5_set(t).len() + 2 == t.n()
}

/// The least number of outside-graph components over the 3-cycles
/// `σ(T) ∪ {x}` with `x ∈ W5(T)`.
pub fn c_invariant(t: &Tournament) -> Result<usize> {
    if !is_family_t_member(t) {
        return Err(Error::NotFamilyT);
    }
    let sigma = support_unchecked(t);
    let w5 = w5_set(t);
    w5.iter()
        .filter_map(|x| {
            let core = sigma.with(x);
            (core.len() == 3 && !t.is_transitive_on(core))
                .then(|| outside_graph_unchecked(t, core).connected_components().len())
        })
        .min()
        .ok_or(Error::NoEligibleVertex)
}

/// Whether no proper subset of at least 3 vertices containing `{x, y}`
/// induces an indecomposable subtournament.
pub fn is_minimal_for_pair(t: &Tournament, x: usize, y: usize) -> Result<bool> {
    t.check_vertex(x)?;
    t.check_vertex(y)?;
    if x == y {
        return Err(Error::BadParameters(format!("pair needs two vertices, got {x} twice")));
    }
    if t.n() < 3 || !is_indecomposable(t) {
        return Err(Error::NotIndecomposable);
    }
    Ok(minimal_for_pair_unchecked(t, x, y))
}

pub(crate) fn minimal_for_pair_unchecked(t: &Tournament, x: usize, y: usize) -> bool {
    let pair = 1u64 << x | 1 << y;
    let rest = t.vertices().bits() & !pair;
    let out = t.out_masks();
    // Every nonempty proper subset of the remaining vertices.
    let mut sub = rest;
    loop {
        sub = sub.wrapping_sub(1) & rest;
        if sub == 0 {
            return true;
        }
        if indecomposable_masks(out, sub | pair) {
            return false;
        }
    }
}

/// All pairs `{x, y}`, `x < y`, for which `t` is minimal.
pub fn minimal_pairs(t: &Tournament) -> Result<Vec<(usize, usize)>> {
    if t.n() < 3 || !is_indecomposable(t) {
        return Err(Error::NotIndecomposable);
    }
    let mut pairs = Vec::new();
    for x in 0..t.n() {
        for y in x + 1..t.n() {
            if minimal_for_pair_unchecked(t, x, y) {
                pairs.push((x, y));
            }
        }
    }
    Ok(pairs)
}
