//! Intervals, indecomposability, critical vertices and the structure of the
//! vertices outside an indecomposable core `X`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::tournament::Tournament;
use crate::vertex_set::VertexSet;

/// The vertices of `set \ interval` that are not uniform towards `interval`.
#[inline]
fn splitters(out: &[u64], set: u64, interval: u64) -> u64 {
    let mut s = 0u64;
    let mut rest = set & !interval;
    while rest != 0 {
        let z = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let o = out[z] & interval;
        if o != 0 && o != interval {
            s |= 1 << z;
        }
    }
    s
}

/// The least interval of `T[set]` containing `seed`.
pub fn interval_closure(t: &Tournament, set: VertexSet, seed: VertexSet) -> VertexSet {
    let set = set.bits();
    let mut iv = seed.bits() & set;
    loop {
        let s = splitters(t.out_masks(), set, iv);
        if s == 0 {
            return VertexSet(iv);
        }
        iv |= s;
    }
}

pub fn is_interval(t: &Tournament, interval: VertexSet) -> Result<bool> {
    t.check_set(interval)?;
    Ok(splitters(t.out_masks(), t.vertices().bits(), interval.bits()) == 0)
}

/// Indecomposability of `T[set]`: the least interval around every pair must
/// be all of `set`. Sets of at most two vertices are indecomposable.
pub fn is_indecomposable_on(t: &Tournament, set: VertexSet) -> bool {
    indecomposable_masks(t.out_masks(), set.bits())
}

/// Indecomposability of the sub-structure on `m` given raw out-masks. Only
/// arcs inside `m` are read.
pub(crate) fn indecomposable_masks(out: &[u64], m: u64) -> bool {
    if m.count_ones() <= 2 {
        return true;
    }
    let mut xs = m;
    while xs != 0 {
        let x = xs.trailing_zeros() as usize;
        xs &= xs - 1;
        let mut ys = xs;
        while ys != 0 {
            let y = ys.trailing_zeros() as usize;
            ys &= ys - 1;
            let mut iv = 1u64 << x | 1u64 << y;
            loop {
                let s = splitters(out, m, iv);
                if s == 0 {
                    break;
                }
                iv |= s;
            }
            if iv != m {
                return false;
            }
        }
    }
    true
}

pub fn is_indecomposable(t: &Tournament) -> bool {
    is_indecomposable_on(t, t.vertices())
}

/// Every interval other than `∅`, singletons and `V`, in lexicographic order.
///
/// Subsets are grown by adding vertices in increasing label order; a branch is
/// cut as soon as some smaller label outside the current set splits it, since
/// that vertex can no longer be added.
pub fn nontrivial_intervals(t: &Tournament) -> Vec<VertexSet> {
    let n = t.n();
    let all = t.vertices().bits();
    let mut found = Vec::new();
    let mut stack: Vec<(u64, usize)> = Vec::new();
    for v in (0..n).rev() {
        stack.push((1u64 << v, v + 1));
    }
    // Depth-first in lexicographic order.
    while let Some((set, next)) = stack.pop() {
        let size = set.count_ones() as usize;
        let split = splitters(t.out_masks(), all, set);
        let below = if next >= 64 { u64::MAX } else { (1u64 << next) - 1 };
        if split & below != 0 {
            continue;
        }
        if split == 0 && size >= 2 && size < n {
            found.push(VertexSet(set));
        }
        for v in (next..n).rev() {
            stack.push((set | 1u64 << v, v + 1));
        }
    }
    found
}

/// The non-critical vertices of an indecomposable tournament.
pub fn support(t: &Tournament) -> Result<VertexSet> {
    if t.n() < 3 || !is_indecomposable(t) {
        return Err(Error::NotIndecomposable);
    }
    Ok(support_unchecked(t))
}

pub(crate) fn support_unchecked(t: &Tournament) -> VertexSet {
    let all = t.vertices();
    all.iter()
        .filter(|&x| is_indecomposable_on(t, all.without(x)))
        .collect()
}

/// The vertices `x` with `T - x` decomposable.
pub fn critical_vertices(t: &Tournament) -> Result<VertexSet> {
    Ok(t.vertices().difference(support(t)?))
}

/// A block of `q^T_X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QBlock {
    /// `Ext(X)`
    Ext,
    /// `X^-`: vertices beating all of `X`.
    Minus,
    /// `X^+`: vertices beaten by all of `X`.
    Plus,
    /// `X^-(u)`
    MinusOf(usize),
    /// `X^+(u)`
    PlusOf(usize),
}

impl QBlock {
    /// The block with every arc reversed.
    pub fn dual(self) -> QBlock {
        match self {
            QBlock::Ext => QBlock::Ext,
            QBlock::Minus => QBlock::Plus,
            QBlock::Plus => QBlock::Minus,
            QBlock::MinusOf(u) => QBlock::PlusOf(u),
            QBlock::PlusOf(u) => QBlock::MinusOf(u),
        }
    }
}

impl fmt::Display for QBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QBlock::Ext => f.write_str("Ext"),
            QBlock::Minus => f.write_str("X-"),
            QBlock::Plus => f.write_str("X+"),
            QBlock::MinusOf(u) => write!(f, "X-({u})"),
            QBlock::PlusOf(u) => write!(f, "X+({u})"),
        }
    }
}

/// Classification of `V \ X` relative to an indecomposable core `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutsidePartition {
    pub core: VertexSet,
    pub ext: VertexSet,
    pub x_minus: VertexSet,
    pub x_plus: VertexSet,
    pub per_u_minus: BTreeMap<usize, VertexSet>,
    pub per_u_plus: BTreeMap<usize, VertexSet>,
}

impl OutsidePartition {
    /// `⟨X⟩`
    pub fn angle(&self) -> VertexSet {
        self.x_minus.union(self.x_plus)
    }

    /// `X(u)`
    pub fn of(&self, u: usize) -> VertexSet {
        self.per_u_minus[&u].union(self.per_u_plus[&u])
    }

    pub fn block(&self, b: QBlock) -> VertexSet {
        match b {
            QBlock::Ext => self.ext,
            QBlock::Minus => self.x_minus,
            QBlock::Plus => self.x_plus,
            QBlock::MinusOf(u) => self.per_u_minus.get(&u).copied().unwrap_or_default(),
            QBlock::PlusOf(u) => self.per_u_plus.get(&u).copied().unwrap_or_default(),
        }
    }

    /// Every block of `q^T_X`, empty ones included.
    pub fn q_blocks(&self) -> Vec<(QBlock, VertexSet)> {
        let mut v = vec![
            (QBlock::Ext, self.ext),
            (QBlock::Minus, self.x_minus),
            (QBlock::Plus, self.x_plus),
        ];
        for (&u, &s) in &self.per_u_minus {
            v.push((QBlock::MinusOf(u), s));
        }
        for (&u, &s) in &self.per_u_plus {
            v.push((QBlock::PlusOf(u), s));
        }
        v
    }

    /// The block holding `x`, if any.
    pub fn block_of(&self, x: usize) -> Option<QBlock> {
        self.q_blocks()
            .into_iter()
            .find(|(_, s)| s.contains(x))
            .map(|(b, _)| b)
    }
}

fn check_core(t: &Tournament, core: VertexSet) -> Result<()> {
    t.check_set(core)?;
    if core.len() < 3 {
        return Err(Error::CoreTooSmall(core.len()));
    }
    if !is_indecomposable_on(t, core) {
        return Err(Error::CoreNotIndecomposable);
    }
    Ok(())
}

/// Classifies every vertex outside `core` by testing each block definition
/// directly.
pub fn outside_partition(t: &Tournament, core: VertexSet) -> Result<OutsidePartition> {
    check_core(t, core)?;
    Ok(outside_partition_unchecked(t, core))
}

pub(crate) fn outside_partition_unchecked(t: &Tournament, core: VertexSet) -> OutsidePartition {
    let x = core.bits();
    let mut p = OutsidePartition {
        core,
        ext: VertexSet::EMPTY,
        x_minus: VertexSet::EMPTY,
        x_plus: VertexSet::EMPTY,
        per_u_minus: core.iter().map(|u| (u, VertexSet::EMPTY)).collect(),
        per_u_plus: core.iter().map(|u| (u, VertexSet::EMPTY)).collect(),
    };
    for v in t.vertices().difference(core) {
        let o = t.out_mask(v) & x;
        if o == x {
            p.x_minus.insert(v);
        }
        if o == 0 {
            p.x_plus.insert(v);
        }
        for u in core {
            let rest = x & !(1u64 << u);
            // {u, v} is an interval of T[X ∪ {v}]: every w in X - u treats
            // v as it treats u.
            let same = (t.out_mask(v) ^ t.out_mask(u)) & rest == 0;
            if same {
                if t.beats(v, u) {
                    p.per_u_minus.get_mut(&u).unwrap().insert(v);
                } else {
                    p.per_u_plus.get_mut(&u).unwrap().insert(v);
                }
            }
        }
        if is_indecomposable_on(t, core.with(v)) {
            p.ext.insert(v);
        }
    }
    p
}

/// `G^T_X`: vertices `V \ X`, with `{x, y}` an edge when `T[X ∪ {x, y}]` is
/// indecomposable.
pub fn outside_graph(t: &Tournament, core: VertexSet) -> Result<UndirectedGraph> {
    check_core(t, core)?;
    Ok(outside_graph_unchecked(t, core))
}

pub(crate) fn outside_graph_unchecked(t: &Tournament, core: VertexSet) -> UndirectedGraph {
    let outside = t.vertices().difference(core);
    let mut g = UndirectedGraph::new(outside);
    let vs = outside.to_vec();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if is_indecomposable_on(t, core.with(a).with(b)) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

pub fn connected_components(g: &UndirectedGraph) -> Vec<VertexSet> {
    g.connected_components()
}

/// `T` is `T[X]`-critical: `T[X]` is indecomposable and `σ(T) ⊆ X`.
pub fn is_partially_critical(t: &Tournament, core: VertexSet) -> Result<bool> {
    t.check_set(core)?;
    if core.len() < 3 {
        return Err(Error::CoreTooSmall(core.len()));
    }
    let sigma = support(t)?;
    Ok(is_indecomposable_on(t, core) && sigma.is_subset(core))
}

/// Outcome of the per-component test of the third Sayar condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: VertexSet,
    /// The blocks of `q^T_X` matched to the halves `f(N_m)` and
    /// `f(N_2m \ N_m)`.
    pub halves: Option<(QBlock, QBlock)>,
    /// `m`, where the component should be `G_2m`.
    pub half_size: usize,
    /// `embedding[i]` is the vertex matched to vertex `i` of `G_2m`.
    pub embedding: Option<Vec<usize>>,
    pub degree_formula_ok: bool,
}

impl ComponentReport {
    pub fn ok(&self) -> bool {
        self.halves.is_some() && self.embedding.is_some() && self.degree_formula_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SayarReport {
    pub ok: bool,
    pub ext_empty: bool,
    pub transitivity_ok: bool,
    pub partition: OutsidePartition,
    pub components: Vec<ComponentReport>,
}

/// Evaluates the three conditions characterising `T[X]`-critical tournaments.
pub fn check_sayar(t: &Tournament, core: VertexSet) -> Result<SayarReport> {
    check_core(t, core)?;
    let part = outside_partition_unchecked(t, core);
    let ext_empty = part.ext.is_empty();
    let angle = part.angle();
    let transitivity_ok = core.iter().all(|u| {
        t.is_transitive_on(part.of(u).with(u)) && t.is_transitive_on(angle.with(u))
    });
    let g = outside_graph_unchecked(t, core);
    let components: Vec<ComponentReport> = g
        .connected_components()
        .into_iter()
        .map(|q| check_component(t, &part, &g, q))
        .collect();
    let ok = ext_empty && transitivity_ok && components.iter().all(ComponentReport::ok);
    Ok(SayarReport { ok, ext_empty, transitivity_ok, partition: part, components })
}

fn check_component(
    t: &Tournament,
    part: &OutsidePartition,
    g: &UndirectedGraph,
    q: VertexSet,
) -> ComponentReport {
    let mut report = ComponentReport {
        vertices: q,
        halves: None,
        half_size: q.len() / 2,
        embedding: None,
        degree_formula_ok: false,
    };
    if q.len() % 2 == 1 {
        return report;
    }
    let m = q.len() / 2;
    let touched: Vec<(QBlock, VertexSet)> = part
        .q_blocks()
        .into_iter()
        .filter(|(_, s)| !s.is_disjoint(q))
        .collect();
    if touched.len() != 2 || touched.iter().any(|(_, s)| *s != s.intersection(q) || s.len() != m) {
        return report;
    }
    // Either block may play the role of the first half; accept any assignment
    // satisfying both the isomorphism and the degree formula.
    let mut fallback = None;
    for (first, second) in [(touched[0], touched[1]), (touched[1], touched[0])] {
        let Some(embedding) = match_half_graph(g, first.1, second.1, m) else {
            continue;
        };
        let degree_ok = [first, second]
            .iter()
            .all(|&(b, s)| degree_formula_holds(t, g, b, s, m));
        if degree_ok {
            report.halves = Some((first.0, second.0));
            report.embedding = Some(embedding);
            report.degree_formula_ok = true;
            return report;
        }
        fallback.get_or_insert(((first.0, second.0), embedding));
    }
    if let Some((halves, embedding)) = fallback {
        report.halves = Some(halves);
        report.embedding = Some(embedding);
    }
    report
}

/// An isomorphism from `G_2m` onto `G[first ∪ second]` sending `N_m` onto
/// `first`. In `G_2m`, vertex `i < m` has degree `m - i` and vertex `m + i`
/// has degree `i + 1`, so degrees fix the map.
fn match_half_graph(
    g: &UndirectedGraph,
    first: VertexSet,
    second: VertexSet,
    m: usize,
) -> Option<Vec<usize>> {
    let mut f = vec![usize::MAX; 2 * m];
    for x in first {
        let d = g.degree(x);
        if d == 0 || d > m || f[m - d] != usize::MAX {
            return None;
        }
        f[m - d] = x;
    }
    for y in second {
        let d = g.degree(y);
        if d == 0 || d > m || f[m - 1 + d] != usize::MAX {
            return None;
        }
        f[m - 1 + d] = y;
    }
    for i in 0..2 * m {
        for j in i + 1..2 * m {
            if g.has_edge(f[i], f[j]) != (j - i >= m) {
                return None;
            }
        }
    }
    Some(f)
}

/// `|N_G(x)| = |N^+_{T[Q_i]}(x)| + 1` on `X^+` and `X^-(u)`, and
/// `m - |N^+_{T[Q_i]}(x)|` on `X^-` and `X^+(u)`.
fn degree_formula_holds(
    t: &Tournament,
    g: &UndirectedGraph,
    block: QBlock,
    members: VertexSet,
    m: usize,
) -> bool {
    members.iter().all(|x| {
        let inner = (t.out_mask(x) & members.bits()).count_ones() as usize;
        let want = match block {
            QBlock::Plus | QBlock::MinusOf(_) => inner + 1,
            QBlock::Minus | QBlock::PlusOf(_) => m - inner.min(m),
            QBlock::Ext => return false,
        };
        g.degree(x) == want
    })
}

/// Source and sink of a transitive tournament.
pub fn transitive_min_max(t: &Tournament) -> Result<(usize, usize)> {
    if t.n() == 0 {
        return Err(Error::BadSize(0));
    }
    if !t.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = t.n();
    let min = (0..n).find(|&x| t.out_degree(x) == n - 1).expect("transitive has a source");
    let max = (0..n).find(|&x| t.out_degree(x) == 0).expect("transitive has a sink");
    Ok((min, max))
}
