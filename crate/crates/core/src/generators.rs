//! Constructions of the named tournaments and of members of the families
//! `H`, `I`, `J`, `K`, `L` and their duals.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, CanonicalCode};
use crate::decomposition::{check_sayar, indecomposable_masks, QBlock};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::tournament::{Tournament, MAX_VERTICES};
use crate::vertex_set::VertexSet;

/// The 3-cycle `0 -> 1 -> 2 -> 0`.
pub fn c3() -> Tournament {
    Tournament::from_fn(3, |i, j| !(i == 0 && j == 2))
}

/// The usual total order on `0..n`: `i -> j` for `i < j`.
pub fn total_order(n: usize) -> Tournament {
    Tournament::from_fn(n, |_, _| true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CriticalKind {
    T,
    U,
    W,
}

impl FromStr for CriticalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" | "t" => Ok(CriticalKind::T),
            "U" | "u" => Ok(CriticalKind::U),
            "W" | "w" => Ok(CriticalKind::W),
            _ => Err(Error::BadParameters(format!("unknown critical family {s:?}"))),
        }
    }
}

impl fmt::Display for CriticalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `T_{2n+1}`, `U_{2n+1}` or `W_{2n+1}` on `0..size`, `size = 2n + 1 >= 5`.
pub fn gen_critical(kind: CriticalKind, size: usize) -> Result<Tournament> {
    if size < 5 || size % 2 == 0 || size > MAX_VERTICES {
        return Err(Error::BadSize(size));
    }
    let n = (size - 1) / 2;
    let circulant = move |i: usize, j: usize| (j + size - i) % size <= n;
    Ok(match kind {
        CriticalKind::T => Tournament::from_fn(size, circulant),
        // Reverse exactly the arcs of T inside {n+1, ..., 2n}.
        CriticalKind::U => {
            Tournament::from_fn(size, |i, j| circulant(i, j) ^ (i > n && j > n))
        }
        // Total order on 0..2n, and 2n beats exactly the even vertices.
        CriticalKind::W => Tournament::from_fn(size, |i, j| {
            if j == 2 * n {
                i % 2 == 1
            } else {
                true
            }
        }),
    })
}

/// The Paley tournament: `i -> j` iff `j - i ∈ {1, 2, 4}` mod 7.
pub fn gen_paley7() -> Tournament {
    Tournament::from_fn(7, |i, j| matches!((j + 7 - i) % 7, 1 | 2 | 4))
}

/// `P_7 - 6`.
pub fn gen_b6() -> Tournament {
    gen_paley7().induced(VertexSet::range(6)).0
}

/// `G_2m` on `0..2m`: `{x, y}` is an edge iff `|y - x| >= m`.
pub fn gen_g2n(m: usize) -> Result<UndirectedGraph> {
    if m == 0 || 2 * m > MAX_VERTICES {
        return Err(Error::BadSize(m));
    }
    let mut g = UndirectedGraph::new(VertexSet::range(2 * m));
    for x in 0..2 * m {
        for y in x + m..2 * m {
            g.add_edge(x, y);
        }
    }
    Ok(g)
}

/// The explicitly drawn member of `H` on `2n + 1` vertices.
///
/// Blocks: `N3^+(0) = {3..=k+1}`, `N3^- = {k+2..=2k}`, `N3^+ = {2k+1..=n+k}`,
/// `N3^-(1) = {n+k+1..=2n}`. The chains on `N3^-` and `N3^+` are increasing,
/// the other two decreasing; the first component sends every arc to the
/// second.
pub fn gen_h_figure3(k: usize, n: usize) -> Result<Tournament> {
    if k < 2 || n < k + 1 || 2 * n + 1 > MAX_VERTICES {
        return Err(Error::BadParameters(format!("need k >= 2 and n >= k + 1, got k = {k}, n = {n}")));
    }
    let a = 3..=k + 1; // N3^+(0)
    let b = k + 2..=2 * k; // N3^-
    let c = 2 * k + 1..=n + k; // N3^+
    let d = n + k + 1..=2 * n; // N3^-(1)
    let core = c3();
    let first = |v: usize| v <= 2 * k;
    Ok(Tournament::from_fn(2 * n + 1, |i, j| {
        // i < j throughout.
        if j <= 2 {
            return core.beats(i, j);
        }
        if i <= 2 {
            let u = i;
            return if a.contains(&j) {
                // 0 -> x, and x copies 0 towards 1 and 2.
                u == 0 || core.beats(u, 0)
            } else if b.contains(&j) {
                false
            } else if c.contains(&j) {
                true
            } else {
                // x -> 1, and x copies 1 towards 0 and 2.
                u != 1 && core.beats(u, 1)
            };
        }
        if first(i) != first(j) {
            return first(i);
        }
        let same = |r: &std::ops::RangeInclusive<usize>| r.contains(&i) && r.contains(&j);
        if same(&a) || same(&d) {
            return false;
        }
        if same(&b) || same(&c) {
            return true;
        }
        if first(i) {
            j - i >= k - 1
        } else {
            j - i >= n - k
        }
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    H,
    I,
    J,
    JDual,
    K,
    KDual,
    L,
    LDual,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::H,
        Family::I,
        Family::J,
        Family::JDual,
        Family::K,
        Family::KDual,
        Family::L,
        Family::LDual,
    ];

    pub fn is_dual(self) -> bool {
        matches!(self, Family::JDual | Family::KDual | Family::LDual)
    }

    /// The family whose members are dualised to obtain this one.
    pub fn base(self) -> Family {
        match self {
            Family::JDual => Family::J,
            Family::KDual => Family::K,
            Family::LDual => Family::L,
            f => f,
        }
    }

    pub fn component_count(self) -> usize {
        if self.base() == Family::L {
            3
        } else {
            2
        }
    }

    /// The block pairs making up the components of `G^T_{N3}` for the base
    /// family, in listed order.
    pub fn base_components(self) -> Vec<(QBlock, QBlock)> {
        use QBlock::*;
        match self.base() {
            Family::H => vec![(PlusOf(0), Minus), (Plus, MinusOf(1))],
            Family::I => vec![(PlusOf(0), PlusOf(2)), (PlusOf(1), MinusOf(0))],
            Family::J => vec![(PlusOf(1), Minus), (MinusOf(1), MinusOf(0))],
            Family::K => vec![(PlusOf(1), Minus), (PlusOf(0), MinusOf(2))],
            Family::L => vec![
                (PlusOf(1), Minus),
                (PlusOf(0), MinusOf(2)),
                (Plus, MinusOf(0)),
            ],
            _ => unreachable!(),
        }
    }

    /// Component block pairs as they appear in the member itself; for dual
    /// families every block is dualised.
    pub fn components(self) -> Vec<(QBlock, QBlock)> {
        let base = self.base_components();
        if self.is_dual() {
            base.into_iter().map(|(a, b)| (a.dual(), b.dual())).collect()
        } else {
            base
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::H => "H",
            Family::I => "I",
            Family::J => "J",
            Family::JDual => "J*",
            Family::K => "K",
            Family::KDual => "K*",
            Family::L => "L",
            Family::LDual => "L*",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "H" => Family::H,
            "I" => Family::I,
            "J" => Family::J,
            "J*" | "Jdual" | "JDual" => Family::JDual,
            "K" => Family::K,
            "K*" | "Kdual" | "KDual" => Family::KDual,
            "L" => Family::L,
            "L*" | "Ldual" | "LDual" => Family::LDual,
            _ => return Err(Error::BadParameters(format!("unknown family {s:?}"))),
        })
    }
}

/// A member of one of the families, described by the half-size `m` of each
/// outside component (`G_2m`) and optionally by the chain order inside each
/// block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub component_sizes: Vec<usize>,
    /// One entry per block, blocks listed component by component. Each entry
    /// lists block-local indices from the source of the chain to its sink.
    /// `None` means increasing label order in every block.
    pub chain_orders: Option<Vec<Vec<usize>>>,
}

impl FamilySpec {
    pub fn new(family: Family, component_sizes: Vec<usize>) -> Self {
        FamilySpec { family, component_sizes, chain_orders: None }
    }

    pub fn vertex_count(&self) -> usize {
        3 + 2 * self.component_sizes.iter().sum::<usize>()
    }

    fn validate(&self) -> Result<()> {
        let fam = self.family;
        if self.component_sizes.len() != fam.component_count() {
            return Err(Error::BadParameters(format!(
                "family {fam} has {} components, got {}",
                fam.component_count(),
                self.component_sizes.len()
            )));
        }
        if self.component_sizes.contains(&0) {
            return Err(Error::BadParameters("component half-sizes must be >= 1".into()));
        }
        if self.vertex_count() > MAX_VERTICES {
            return Err(Error::TooLarge(self.vertex_count()));
        }
        if let Some(orders) = &self.chain_orders {
            let sizes: Vec<usize> =
                self.component_sizes.iter().flat_map(|&m| [m, m]).collect();
            if orders.len() != sizes.len() {
                return Err(Error::BadParameters(format!(
                    "expected {} chain orders, got {}",
                    sizes.len(),
                    orders.len()
                )));
            }
            for (o, &m) in orders.iter().zip(&sizes) {
                let mut seen = vec![false; m];
                if o.len() != m || o.iter().any(|&i| i >= m || std::mem::replace(&mut seen[i], true)) {
                    return Err(Error::BadParameters(format!(
                        "chain order {o:?} is not a permutation of 0..{m}"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.family)?;
        for (i, m) in self.component_sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// Every default-chain spec on `total` vertices, family by family.
pub fn all_family_specs(total: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if total < 7 || total % 2 == 0 {
        return out;
    }
    let half = (total - 3) / 2;
    for fam in Family::ALL {
        for sizes in compositions(half, fam.component_count()) {
            out.push(FamilySpec::new(fam, sizes));
        }
    }
    out
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return if total >= 1 { vec![vec![total]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One outside component of an assembled member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssembledComponent {
    pub halves: (QBlock, QBlock),
    pub first: VertexSet,
    pub second: VertexSet,
}

impl AssembledComponent {
    pub fn vertices(&self) -> VertexSet {
        self.first.union(self.second)
    }
}

#[derive(Clone, Debug)]
pub struct Assembly {
    pub tournament: Tournament,
    pub components: Vec<AssembledComponent>,
    /// Complete orientations accepted by the search.
    pub solutions: usize,
    /// Distinct isomorphism classes among them.
    pub distinct_classes: usize,
}

pub fn assemble_family(spec: &FamilySpec) -> Result<Tournament> {
    Ok(assemble_family_detailed(spec)?.tournament)
}

/// Builds the `C3`-critical member described by `spec`.
///
/// Arcs between the core and each block follow from the block's definition;
/// arcs inside a block follow its chain. The arcs between different blocks
/// are searched: each pair `{x, y}` may only take an orientation for which
/// `T[X ∪ {x, y}]` is indecomposable exactly when `{x, y}` is an edge of the
/// target outside graph, for which the forced-interval laws hold when it is
/// decomposable, and which closes no 3-cycle inside a set that must be
/// transitive. Every complete orientation is then checked against all three
/// partial-criticality conditions and the target component structure.
pub fn assemble_family_detailed(spec: &FamilySpec) -> Result<Assembly> {
    spec.validate()?;
    let mut asm = Assembler::new(spec);
    asm.search(0);
    if asm.solutions.is_empty() {
        return Err(Error::InfeasibleSpec(spec.to_string()));
    }
    let codes: BTreeSet<CanonicalCode> = asm.solutions.iter().map(canonical_code).collect();
    if codes.len() > 1 {
        return Err(Error::AmbiguousSpec(format!("{spec}: {} classes", codes.len())));
    }
    let base = asm.solutions.swap_remove(0);
    let solutions = asm.leaves;
    let (tournament, components) = if spec.family.is_dual() {
        let comps = asm
            .components
            .into_iter()
            .map(|c| AssembledComponent { halves: (c.halves.0.dual(), c.halves.1.dual()), ..c })
            .collect();
        (base.dual(), comps)
    } else {
        (base, asm.components)
    };
    Ok(Assembly { tournament, components, solutions, distinct_classes: codes.len() })
}

const CORE: u64 = 0b111;
const MAX_SOLUTIONS: usize = 64;

struct Assembler {
    out: Vec<u64>,
    block: Vec<Option<QBlock>>,
    /// Required degree in the outside graph, from the chain position.
    degree: Vec<usize>,
    /// Component index and half (0 or 1) of each outside vertex.
    place: Vec<(usize, usize)>,
    half_size: Vec<usize>,
    components: Vec<AssembledComponent>,
    pairs: Vec<(usize, usize)>,
    decided: Vec<u64>,
    angle: u64,
    of_u: [u64; 3],
    solutions: Vec<Tournament>,
    leaves: usize,
}

impl Assembler {
    fn new(spec: &FamilySpec) -> Self {
        let n = spec.vertex_count();
        let core = c3();
        let mut a = Assembler {
            out: vec![0; n],
            block: vec![None; n],
            degree: vec![0; n],
            place: vec![(usize::MAX, 0); n],
            half_size: spec.component_sizes.clone(),
            components: Vec::new(),
            pairs: Vec::new(),
            decided: vec![0; n],
            angle: 0,
            of_u: [0; 3],
            solutions: Vec::new(),
            leaves: 0,
        };
        for i in 0..3 {
            for j in 0..3 {
                if i != j && core.beats(i, j) {
                    a.set_arc(i, j);
                }
            }
        }
        let mut next = 3;
        let mut block_idx = 0;
        for (ci, (&m, halves)) in spec
            .component_sizes
            .iter()
            .zip(spec.family.base_components())
            .enumerate()
        {
            let mut sets = [VertexSet::EMPTY; 2];
            for (h, b) in [halves.0, halves.1].into_iter().enumerate() {
                let members: Vec<usize> = (next..next + m).collect();
                next += m;
                let order: Vec<usize> = match &spec.chain_orders {
                    Some(o) => o[block_idx].clone(),
                    None => (0..m).collect(),
                };
                block_idx += 1;
                let mut rank = vec![0; m];
                for (pos, &local) in order.iter().enumerate() {
                    rank[local] = pos;
                }
                for (li, &v) in members.iter().enumerate() {
                    a.block[v] = Some(b);
                    a.place[v] = (ci, h);
                    sets[h].insert(v);
                    match b {
                        QBlock::Minus | QBlock::Plus => a.angle |= 1 << v,
                        QBlock::MinusOf(u) | QBlock::PlusOf(u) => a.of_u[u] |= 1 << v,
                        QBlock::Ext => unreachable!(),
                    }
                    a.attach_to_core(v, b, &core);
                    let inner = m - 1 - rank[li];
                    a.degree[v] = match b {
                        QBlock::Plus | QBlock::MinusOf(_) => inner + 1,
                        _ => m - inner,
                    };
                    for (lj, &w) in members.iter().enumerate().take(li) {
                        if rank[lj] < rank[li] {
                            a.set_arc(w, v);
                        } else {
                            a.set_arc(v, w);
                        }
                    }
                }
            }
            a.components.push(AssembledComponent { halves, first: sets[0], second: sets[1] });
        }
        for x in 3..n {
            for y in x + 1..n {
                if a.block[x] != a.block[y] {
                    a.pairs.push((x, y));
                }
            }
        }
        a
    }

    fn set_arc(&mut self, x: usize, y: usize) {
        self.out[x] |= 1 << y;
        self.out[y] &= !(1 << x);
        self.decided[x] |= 1 << y;
        self.decided[y] |= 1 << x;
    }

    fn clear_pair(&mut self, x: usize, y: usize) {
        self.out[x] &= !(1 << y);
        self.out[y] &= !(1 << x);
        self.decided[x] &= !(1 << y);
        self.decided[y] &= !(1 << x);
    }

    fn beats(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }

    fn attach_to_core(&mut self, v: usize, b: QBlock, core: &Tournament) {
        for w in 0..3 {
            let v_beats_w = match b {
                QBlock::Minus => true,
                QBlock::Plus => false,
                QBlock::MinusOf(u) if w == u => true,
                QBlock::PlusOf(u) if w == u => false,
                QBlock::MinusOf(u) | QBlock::PlusOf(u) => core.beats(u, w),
                QBlock::Ext => unreachable!(),
            };
            if v_beats_w {
                self.set_arc(v, w);
            } else {
                self.set_arc(w, v);
            }
        }
    }

    fn target_edge(&self, x: usize, y: usize) -> bool {
        let (cx, hx) = self.place[x];
        let (cy, hy) = self.place[y];
        cx == cy && hx != hy && self.degree[x] + self.degree[y] > self.half_size[cx]
    }

    fn feasible(&self, x: usize, y: usize) -> bool {
        let s = CORE | 1 << x | 1 << y;
        let indec = indecomposable_masks(&self.out, s);
        if indec != self.target_edge(x, y) {
            return false;
        }
        if !indec && !(self.interval_law(x, y) && self.interval_law(y, x)) {
            return false;
        }
        self.no_forbidden_cycle(x, y)
    }

    /// Forced intervals of a decomposable `T[X ∪ {x, y}]`, seen from `x`.
    fn interval_law(&self, x: usize, y: usize) -> bool {
        match self.block[x] {
            Some(QBlock::MinusOf(u) | QBlock::PlusOf(u)) if self.of_u[u] >> y & 1 == 0 => {
                // {u, x} is an interval: y treats x as it treats u.
                self.beats(y, x) == self.beats(y, u)
            }
            Some(QBlock::Minus | QBlock::Plus) if self.angle >> y & 1 == 0 => {
                // X ∪ {y} is an interval: x treats y as it treats X.
                self.beats(x, y) == (self.block[x] == Some(QBlock::Minus))
            }
            _ => true,
        }
    }

    /// `T[X(u) ∪ {u}]` and `T[⟨X⟩ ∪ {u}]` must stay transitive.
    fn no_forbidden_cycle(&self, x: usize, y: usize) -> bool {
        let groups = [self.angle | CORE, self.of_u[0] | 1, self.of_u[1] | 2, self.of_u[2] | 4];
        for &g in &groups {
            let both = g >> x & 1 == 1 && g >> y & 1 == 1;
            if !both {
                continue;
            }
            // x and y lie outside X, so no triple inside X is ever examined.
            let mut zs = g & self.decided[x] & self.decided[y] & !(1 << x | 1 << y);
            while zs != 0 {
                let z = zs.trailing_zeros() as usize;
                zs &= zs - 1;
                let a = self.beats(x, y);
                let b = self.beats(y, z);
                let c = self.beats(z, x);
                if a == b && b == c {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, idx: usize) {
        if self.solutions.len() >= MAX_SOLUTIONS {
            return;
        }
        if idx == self.pairs.len() {
            self.leaves += 1;
            let t = Tournament::from_out_masks_unchecked(self.out.clone());
            if self.accepts(&t) {
                self.solutions.push(t);
            }
            return;
        }
        let (x, y) = self.pairs[idx];
        for x_beats_y in [true, false] {
            if x_beats_y {
                self.set_arc(x, y);
            } else {
                self.set_arc(y, x);
            }
            if self.feasible(x, y) {
                self.search(idx + 1);
            }
            self.clear_pair(x, y);
        }
    }

    fn accepts(&self, t: &Tournament) -> bool {
        let Ok(report) = check_sayar(t, VertexSet(CORE)) else {
            return false;
        };
        if !report.ok || report.components.len() != self.components.len() {
            return false;
        }
        self.components.iter().zip(&report.components).all(|(want, got)| {
            got.vertices == want.vertices()
                && got.halves.is_some_and(|(a, b)| {
                    (a, b) == want.halves || (b, a) == want.halves
                })
        })
    }
}
