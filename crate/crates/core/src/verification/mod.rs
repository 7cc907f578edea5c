//! Exhaustive checks of the structural results over small censuses.

mod enumerate;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use enumerate::{
    enumerate_codes, enumerate_levels, enumerate_tournaments, EnumOptions, DEFAULT_MAX_N,
    FORCE_MAX_N,
};
use enumerate::{check_budget, in_pool};

use crate::canon::{canonical_code, is_isomorphic, CanonicalCode};
use crate::decomposition::{
    check_sayar, indecomposable_masks, is_indecomposable, is_partially_critical,
    outside_graph_unchecked, support_unchecked, QBlock,
};
use crate::error::{Error, Result};
use crate::generators::{
    all_family_specs, assemble_family, assemble_family_detailed, c3, gen_b6, gen_critical,
    gen_paley7, CriticalKind, Family, FamilySpec,
};
use crate::tournament::Tournament;
use crate::vertex_set::{subsets_of_size, VertexSet};
use crate::w5::{c_invariant, embeds, induces_w5, minimal_pairs, w5_set};

/// The flags of one isomorphism class, computed on its canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub canonical: CanonicalCode,
    pub n: usize,
    pub indecomposable: bool,
    pub omits_w5: bool,
    pub family_t: bool,
    /// `σ(T)` of the representative, when it is indecomposable.
    pub support: Option<VertexSet>,
    pub w5: VertexSet,
}

impl CensusEntry {
    pub fn analyze(code: &CanonicalCode) -> Self {
        let t = code.to_tournament();
        let n = t.n();
        let indecomposable = n >= 3 && is_indecomposable(&t);
        let w5 = w5_set(&t);
        let support = indecomposable.then(|| support_unchecked(&t));
        CensusEntry {
            canonical: code.clone(),
            n,
            indecomposable,
            omits_w5: w5.is_empty(),
            family_t: indecomposable && w5.len() + 2 == n,
            support,
            w5,
        }
    }

    pub fn support_size(&self) -> Option<usize> {
        self.support.map(VertexSet::len)
    }

    pub fn w5_size(&self) -> usize {
        self.w5.len()
    }

    pub fn tournament(&self) -> Tournament {
        self.canonical.to_tournament()
    }
}

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub theorem: String,
    pub n_min: usize,
    pub n_max: usize,
    pub pass: bool,
    /// Classes contradicting the statement; nonempty whenever `pass` is false.
    pub counterexamples: Vec<CanonicalCode>,
    /// Classes the statement is about, where it names a finite list.
    pub classes: Vec<CanonicalCode>,
    pub counts: BTreeMap<String, usize>,
    pub details: Vec<VerdictReport>,
}

impl VerdictReport {
    fn new(theorem: &str, n_min: usize, n_max: usize) -> Self {
        VerdictReport {
            theorem: theorem.to_string(),
            n_min,
            n_max,
            pass: true,
            counterexamples: Vec::new(),
            classes: Vec::new(),
            counts: BTreeMap::new(),
            details: Vec::new(),
        }
    }

    fn count(&mut self, key: &str, by: usize) {
        *self.counts.entry(key.to_string()).or_insert(0) += by;
    }

    fn fail(&mut self, code: CanonicalCode) {
        self.pass = false;
        if !self.counterexamples.contains(&code) {
            self.counterexamples.push(code);
        }
    }

    fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self
    }
}

/// Every class on `1..=max_n` vertices, with lazily computed flags.
pub struct Census {
    opts: EnumOptions,
    levels: Vec<Vec<CanonicalCode>>,
    entries: Vec<OnceLock<Vec<CensusEntry>>>,
}

impl Census {
    pub fn build(max_n: usize, opts: &EnumOptions) -> Result<Self> {
        let levels = enumerate_levels(max_n, opts)?;
        let entries = (0..levels.len()).map(|_| OnceLock::new()).collect();
        Ok(Census { opts: *opts, levels, entries })
    }

    pub fn max_n(&self) -> usize {
        self.levels.len() - 1
    }

    fn require(&self, n: usize) -> Result<()> {
        if n > self.max_n() {
            return Err(Error::BudgetExceeded { n, cap: self.max_n() });
        }
        Ok(())
    }

    /// Canonical codes of the classes on `n` vertices, sorted.
    pub fn codes(&self, n: usize) -> &[CanonicalCode] {
        self.levels.get(n).map_or(&[], Vec::as_slice)
    }

    /// Flags for every class on `n` vertices, in code order.
    pub fn entries(&self, n: usize) -> &[CensusEntry] {
        if n > self.max_n() {
            return &[];
        }
        self.entries[n].get_or_init(|| {
            let codes = &self.levels[n];
            in_pool(self.opts.jobs, || codes.par_iter().map(CensusEntry::analyze).collect())
        })
    }

    fn indecomposable(&self, n: usize) -> impl Iterator<Item = &CensusEntry> {
        self.entries(n).iter().filter(|e| e.indecomposable)
    }

    /// Indecomposable classes on `n` vertices omitting `W5` against the list
    /// of `B6`, `P7`, `T_n`, `U_n` members of that order.
    pub fn verify_latka(&self, n: usize) -> Result<VerdictReport> {
        if n < 5 {
            return Err(Error::BadSize(n));
        }
        self.require(n)?;
        let mut r = VerdictReport::new("latka", n, n);
        let found: BTreeSet<CanonicalCode> = self
            .indecomposable(n)
            .filter(|e| e.omits_w5)
            .map(|e| e.canonical.clone())
            .collect();
        let expected: BTreeSet<CanonicalCode> =
            latka_list(n).iter().map(canonical_code).collect();
        for code in found.symmetric_difference(&expected) {
            r.fail(code.clone());
        }
        r.count("indecomposable", self.indecomposable(n).count());
        r.count("omitting_w5", found.len());
        r.count("expected", expected.len());
        r.classes = found.into_iter().collect();
        Ok(r.finish())
    }

    /// `|W5(T)| >= |T| - 2`, and `>= |T| - 1` for even `|T|`, over every
    /// indecomposable class embedding `W5` with `5 <= |T| <= max_n`.
    pub fn verify_hik(&self, max_n: usize) -> Result<VerdictReport> {
        self.require(max_n)?;
        let mut r = VerdictReport::new("hik", 5, max_n);
        for n in 5..=max_n {
            let bound = if n % 2 == 0 { n - 1 } else { n - 2 };
            for e in self.indecomposable(n).filter(|e| !e.omits_w5) {
                r.count(&format!("checked_n{n}"), 1);
                if e.w5_size() < bound {
                    r.fail(e.canonical.clone());
                }
            }
        }
        Ok(r.finish())
    }

    /// The family-T classes on `n` vertices are exactly the members of the
    /// eight families of that order, and every generated member has
    /// `V \ W5(T) = σ(T) = {0, 1}`.
    pub fn verify_main(&self, n: usize) -> Result<VerdictReport> {
        if n < 7 || n % 2 == 0 {
            return Err(Error::BadSize(n));
        }
        self.require(n)?;
        let mut r = VerdictReport::new("main", n, n);
        let enumerated: BTreeSet<CanonicalCode> = self
            .entries(n)
            .iter()
            .filter(|e| e.family_t)
            .map(|e| e.canonical.clone())
            .collect();
        for e in self.entries(n).iter().filter(|e| e.family_t) {
            if e.support_size() != Some(2) {
                r.fail(e.canonical.clone());
            }
        }
        let pair = VertexSet::from([0, 1]);
        let mut generated = BTreeSet::new();
        for spec in all_family_specs(n) {
            let t = assemble_family(&spec)?;
            let code = canonical_code(&t);
            let non_w5 = t.vertices().difference(w5_set(&t));
            if non_w5 != pair || support_unchecked(&t) != pair {
                r.fail(code.clone());
            }
            r.count("generated_specs", 1);
            generated.insert(code);
        }
        for code in enumerated.symmetric_difference(&generated) {
            r.fail(code.clone());
        }
        r.count("enumerated_family_t", enumerated.len());
        r.count("generated_classes", generated.len());
        r.classes = enumerated.into_iter().collect();
        Ok(r.finish())
    }

    /// `check_sayar` agrees with the definition of partial criticality for
    /// every indecomposable class on at most `max_n` vertices and every
    /// indecomposable core of size 3 or 5.
    pub fn verify_sayar(&self, max_n: usize) -> Result<VerdictReport> {
        self.require(max_n)?;
        let mut r = VerdictReport::new("sayar", 3, max_n);
        for n in 3..=max_n {
            let entries: Vec<&CensusEntry> = self.indecomposable(n).collect();
            let results: Vec<(usize, usize, bool)> = in_pool(self.opts.jobs, || {
                entries
                    .par_iter()
                    .map(|e| {
                        let t = e.tournament();
                        let (mut cores, mut critical, mut agree) = (0, 0, true);
                        for k in [3, 5] {
                            for x in subsets_of_size(t.vertices(), k) {
                                if !indecomposable_masks(t.out_masks(), x.bits()) {
                                    continue;
                                }
                                cores += 1;
                                let by_def = is_partially_critical(&t, x).expect("valid core");
                                let report = check_sayar(&t, x).expect("valid core");
                                critical += by_def as usize;
                                agree &= report.ok == by_def;
                            }
                        }
                        (cores, critical, agree)
                    })
                    .collect()
            });
            for (e, (cores, critical, agree)) in entries.iter().zip(results) {
                r.count("cores", cores);
                r.count("partially_critical", critical);
                if !agree {
                    r.fail(e.canonical.clone());
                }
            }
        }
        Ok(r.finish())
    }

    /// The configuration lemmas and the facts about minimal tournaments,
    /// duality and `c(T)`. Census-based checks run up to `budget_n`;
    /// checks on generated members run up to 13 vertices.
    pub fn verify_lemma_suite(&self, budget_n: usize) -> Result<VerdictReport> {
        self.require(budget_n)?;
        let mut r = VerdictReport::new("lemmas", 3, budget_n);
        if budget_n >= 7 {
            r.details.push(self.lemma_b6());
            r.details.push(self.lemma_u5_labels());
        }
        r.details.push(self.lemma_connected(budget_n));
        r.details.push(self.lemma_all_t5(budget_n));
        r.details.push(self.lemma_all_u7(budget_n));
        r.details.push(lemma_edge_deletion(GENERATED_MAX)?);
        r.details.push(self.fact_minimal(budget_n));
        r.details.push(duality_closure(GENERATED_MAX)?);
        r.details.push(self.c_values(budget_n)?);
        r.details.push(self.w5_vertices_critical(budget_n)?);
        for d in &r.details {
            if !d.pass {
                r.pass = false;
                for c in &d.counterexamples {
                    if !r.counterexamples.contains(c) {
                        r.counterexamples.push(c.clone());
                    }
                }
            }
        }
        Ok(r.finish())
    }

    /// If `B6` embeds into an indecomposable 7-vertex `T` and `T` is not
    /// `P7`, then `|W5(T)| = 7`.
    fn lemma_b6(&self) -> VerdictReport {
        let mut r = VerdictReport::new("b6-embedding", 7, 7);
        let (b6, p7) = (gen_b6(), gen_paley7());
        for e in self.indecomposable(7) {
            let t = e.tournament();
            if embeds(&b6, &t) && !is_isomorphic(&t, &p7) {
                r.count("instances", 1);
                if e.w5_size() != 7 {
                    r.fail(e.canonical.clone());
                }
            }
        }
        r.finish()
    }

    /// For a 7-vertex `T` with `T[{0..4}] = U5` and `T` being
    /// `U5`-critical, either `T ≅ U7` or `W5(T)` meets `{3, 4}`. Every
    /// labelling of every `U5` subtournament is tried.
    fn lemma_u5_labels(&self) -> VerdictReport {
        let mut r = VerdictReport::new("u5-critical-7", 7, 7);
        let (u5, u7) = (gen_critical(CriticalKind::U, 5).expect("U5"), gen_critical(CriticalKind::U, 7).expect("U7"));
        for e in self.indecomposable(7) {
            let t = e.tournament();
            let sigma = e.support.expect("indecomposable");
            let is_u7 = is_isomorphic(&t, &u7);
            for x in subsets_of_size(t.vertices(), 5) {
                if !sigma.is_subset(x) || !is_isomorphic(&t.induced(x).0, &u5) {
                    continue;
                }
                for f in isomorphisms_onto(&u5, &t, x) {
                    r.count("labelled_instances", 1);
                    if !is_u7 && !e.w5.contains(f[3]) && !e.w5.contains(f[4]) {
                        r.fail(e.canonical.clone());
                    }
                }
            }
        }
        r.finish()
    }

    /// A `C3`-critical `T` on at least 5 vertices with a connected outside
    /// graph is critical, of the kind fixed by the two blocks forming the
    /// component.
    fn lemma_connected(&self, budget_n: usize) -> VerdictReport {
        let mut r = VerdictReport::new("connected-outside-graph", 5, budget_n);
        for n in 5..=budget_n {
            for (code, t, x) in self.c3_critical(n) {
                r.count("c3_critical_instances", 1);
                let Ok(report) = check_sayar(&t, x) else {
                    r.fail(code);
                    continue;
                };
                if !report.ok {
                    r.fail(code);
                    continue;
                }
                if report.components.len() != 1 {
                    continue;
                }
                r.count("connected", 1);
                let kind = report.components[0]
                    .halves
                    .and_then(|(a, b)| configuration_kind(&t, x, a, b));
                let ok = kind.is_some_and(|k| {
                    support_unchecked(&t).is_empty()
                        && is_isomorphic(&t, &gen_critical(k, n).expect("odd size"))
                });
                if !ok {
                    r.fail(code);
                }
            }
        }
        r.finish()
    }

    /// A `C3`-critical `T` with `T[X ∪ e] ≅ T5` for every outside edge `e` is
    /// isomorphic to `T_n`.
    fn lemma_all_t5(&self, budget_n: usize) -> VerdictReport {
        let mut r = VerdictReport::new("all-edges-t5", 5, budget_n);
        let t5 = gen_critical(CriticalKind::T, 5).expect("T5");
        for n in 5..=budget_n {
            for (code, t, x) in self.c3_critical(n) {
                let g = outside_graph_unchecked(&t, x);
                let edges = g.edges();
                let all_t5 = !edges.is_empty()
                    && edges.iter().all(|&(a, b)| {
                        is_isomorphic(&t.induced(x.with(a).with(b)).0, &t5)
                    });
                if all_t5 {
                    r.count("instances", 1);
                    if !is_isomorphic(&t, &gen_critical(CriticalKind::T, n).expect("odd size")) {
                        r.fail(code);
                    }
                }
            }
        }
        r.finish()
    }

    /// A `U5`-critical `T` with `T[X ∪ e] ≅ U7` for every outside edge `e` is
    /// isomorphic to `U_n`.
    fn lemma_all_u7(&self, budget_n: usize) -> VerdictReport {
        let mut r = VerdictReport::new("all-edges-u7", 7, budget_n);
        let u5 = gen_critical(CriticalKind::U, 5).expect("U5");
        let u7 = gen_critical(CriticalKind::U, 7).expect("U7");
        for n in 7..=budget_n {
            for e in self.indecomposable(n) {
                let sigma = e.support.expect("indecomposable");
                if sigma.len() > 5 {
                    continue;
                }
                let t = e.tournament();
                for x in subsets_of_size(t.vertices(), 5) {
                    if !sigma.is_subset(x) || !is_isomorphic(&t.induced(x).0, &u5) {
                        continue;
                    }
                    let edges = outside_graph_unchecked(&t, x).edges();
                    let all_u7 = !edges.is_empty()
                        && edges.iter().all(|&(a, b)| {
                            is_isomorphic(&t.induced(x.with(a).with(b)).0, &u7)
                        });
                    if all_u7 {
                        r.count("instances", 1);
                        if !is_isomorphic(&t, &gen_critical(CriticalKind::U, n).expect("odd size")) {
                            r.fail(e.canonical.clone());
                        }
                    }
                }
            }
        }
        r.finish()
    }

    /// Among indecomposable classes with `|W5(T)| <= |T| - 2`, the ones
    /// minimal for some pair are `C3` and `U5`, and `U5` is minimal for
    /// `{3, 4}` only.
    fn fact_minimal(&self, budget_n: usize) -> VerdictReport {
        let mut r = VerdictReport::new("minimal-for-pair", 3, budget_n);
        let u5 = gen_critical(CriticalKind::U, 5).expect("U5");
        let expected: BTreeSet<CanonicalCode> = [canonical_code(&c3()), canonical_code(&u5)].into();
        let mut found = BTreeSet::new();
        for n in 3..=budget_n {
            for e in self.indecomposable(n).filter(|e| e.w5_size() + 2 <= n) {
                r.count("candidates", 1);
                let pairs = minimal_pairs(&e.tournament()).expect("indecomposable");
                if !pairs.is_empty() {
                    found.insert(e.canonical.clone());
                }
            }
        }
        for code in found.symmetric_difference(&expected) {
            r.fail(code.clone());
        }
        if minimal_pairs(&u5).expect("indecomposable") != vec![(3, 4)] {
            r.fail(canonical_code(&u5));
        }
        r.classes = found.into_iter().collect();
        r.finish()
    }

    /// `c(T) ∈ {2, 3}` on enumerated family-T classes, `c(T) = c(T*)`, and on
    /// generated members `c = 3` exactly for `L` and `L*`.
    fn c_values(&self, budget_n: usize) -> Result<VerdictReport> {
        let mut r = VerdictReport::new("c-invariant", 7, GENERATED_MAX.max(budget_n));
        for n in 7..=budget_n {
            for e in self.entries(n).iter().filter(|e| e.family_t) {
                let t = e.tournament();
                let c = c_invariant(&t);
                r.count(&format!("enumerated_c{}", c.as_ref().map_or(0, |c| *c)), 1);
                if !matches!(c, Ok(2 | 3)) || c_invariant(&t.dual()) != c {
                    r.fail(e.canonical.clone());
                }
            }
        }
        for (spec, t) in generated_members(GENERATED_MAX)? {
            let want = if spec.family.base() == Family::L { 3 } else { 2 };
            let c = c_invariant(&t);
            r.count(&format!("generated_c{}", c.as_ref().map_or(0, |c| *c)), 1);
            if c != Ok(want) || c_invariant(&t.dual()) != Ok(want) {
                r.fail(canonical_code(&t));
            }
        }
        Ok(r.finish())
    }

    /// Every vertex of `W5(T)` is critical, for family-T classes and for
    /// generated members.
    fn w5_vertices_critical(&self, budget_n: usize) -> Result<VerdictReport> {
        let mut r = VerdictReport::new("w5-vertices-critical", 7, GENERATED_MAX.max(budget_n));
        for n in 7..=budget_n {
            for e in self.entries(n).iter().filter(|e| e.family_t) {
                r.count("enumerated", 1);
                if !e.support.expect("indecomposable").is_disjoint(e.w5) {
                    r.fail(e.canonical.clone());
                }
            }
        }
        for (_, t) in generated_members(GENERATED_MAX)? {
            r.count("generated", 1);
            if !support_unchecked(&t).is_disjoint(w5_set(&t)) {
                r.fail(canonical_code(&t));
            }
        }
        Ok(r.finish())
    }

    /// Each class on `n` vertices with every 3-cycle core `X ⊇ σ(T)`.
    fn c3_critical(&self, n: usize) -> Vec<(CanonicalCode, Tournament, VertexSet)> {
        let mut out = Vec::new();
        for e in self.indecomposable(n) {
            let sigma = e.support.expect("indecomposable");
            if sigma.len() > 3 {
                continue;
            }
            let t = e.tournament();
            for x in subsets_of_size(t.vertices(), 3) {
                if sigma.is_subset(x) && !t.is_transitive_on(x) {
                    out.push((e.canonical.clone(), t.clone(), x));
                }
            }
        }
        out
    }
}

/// Largest order of generated members used by the checks.
pub const GENERATED_MAX: usize = 13;

/// `B6`, `P7`, `T_n` and `U_n` of order `n`.
pub fn latka_list(n: usize) -> Vec<Tournament> {
    match n {
        6 => vec![gen_b6()],
        7 => vec![
            gen_paley7(),
            gen_critical(CriticalKind::T, 7).expect("T7"),
            gen_critical(CriticalKind::U, 7).expect("U7"),
        ],
        n if n >= 5 && n % 2 == 1 => vec![
            gen_critical(CriticalKind::T, n).expect("odd size"),
            gen_critical(CriticalKind::U, n).expect("odd size"),
        ],
        _ => Vec::new(),
    }
}

/// Every default-chain member of every family with at most `max_n` vertices.
pub fn generated_members(max_n: usize) -> Result<Vec<(FamilySpec, Tournament)>> {
    let mut out = Vec::new();
    for n in (7..=max_n).step_by(2) {
        for spec in all_family_specs(n) {
            let t = assemble_family(&spec)?;
            out.push((spec, t));
        }
    }
    Ok(out)
}

/// The kind of critical tournament produced by a connected outside graph
/// whose halves are the blocks `a` and `b` of the 3-cycle `x`.
pub fn configuration_kind(t: &Tournament, x: VertexSet, a: QBlock, b: QBlock) -> Option<CriticalKind> {
    use QBlock::*;
    // The core vertex beaten by u.
    let succ = |u: usize| x.iter().find(|&w| w != u && t.beats(u, w));
    let kind = |a: QBlock, b: QBlock| match (a, b) {
        (Minus, PlusOf(_)) | (Plus, MinusOf(_)) => Some(CriticalKind::U),
        (PlusOf(u), PlusOf(v)) | (MinusOf(u), MinusOf(v)) if u != v => Some(CriticalKind::U),
        (Minus, MinusOf(_)) | (Plus, PlusOf(_)) => Some(CriticalKind::W),
        (PlusOf(u), MinusOf(v)) if succ(u) == Some(v) => Some(CriticalKind::W),
        (MinusOf(u), PlusOf(v)) if succ(u) == Some(v) => Some(CriticalKind::T),
        _ => None,
    };
    kind(a, b).or_else(|| kind(b, a))
}

/// All maps `f` from `p` onto `t[x]` preserving arcs, with `f[i]` the image
/// of vertex `i`.
fn isomorphisms_onto(p: &Tournament, t: &Tournament, x: VertexSet) -> Vec<Vec<usize>> {
    let targets = x.to_vec();
    let mut out = Vec::new();
    let mut f = Vec::new();
    fn go(p: &Tournament, t: &Tournament, targets: &[usize], used: u64, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = f.len();
        if i == targets.len() {
            out.push(f.clone());
            return;
        }
        for &v in targets {
            if used >> v & 1 == 0 && f.iter().enumerate().all(|(j, &w)| p.beats(j, i) == t.beats(w, v)) {
                f.push(v);
                go(p, t, targets, used | 1 << v, f, out);
                f.pop();
            }
        }
    }
    go(p, t, &targets, 0, &mut f, &mut out);
    out
}

/// Deleting an edge `{f(i), f(i + m)}` of a `G_2m` component with `m >= 2`
/// keeps partial criticality, and every `W5` subset meeting
/// `V \ (Q ∪ W5(T - e))` contains the component `Q`.
pub fn lemma_edge_deletion(max_n: usize) -> Result<VerdictReport> {
    let mut r = VerdictReport::new("edge-deletion", 7, max_n);
    let core = VertexSet::range(3);
    for (_, t) in generated_members(max_n)? {
        let code = canonical_code(&t);
        let report = check_sayar(&t, core)?;
        for comp in &report.components {
            let Some(f) = comp.embedding.as_ref() else {
                r.fail(code.clone());
                continue;
            };
            let m = comp.half_size;
            if m < 2 {
                continue;
            }
            for i in 0..m {
                r.count("deletions", 1);
                let e = VertexSet::from([f[i], f[i + m]]);
                let (small, map) = t.remove(e)?;
                // Vertices 0, 1, 2 keep their labels since e lies outside.
                let still = is_partially_critical(&small, core)? && check_sayar(&small, core)?.ok;
                let w5_small: VertexSet = w5_set(&small).iter().map(|v| map[v]).collect();
                let outside = t.vertices().difference(comp.vertices.union(w5_small));
                let mut contains_q = true;
                for z in subsets_of_size(t.vertices(), 5) {
                    let zs: [usize; 5] = z.to_vec().try_into().expect("five");
                    if induces_w5(t.out_masks(), zs) && !z.is_disjoint(outside) && !comp.vertices.is_subset(z) {
                        contains_q = false;
                    }
                }
                if !still || !contains_q {
                    r.fail(code.clone());
                }
            }
        }
    }
    Ok(r.finish())
}

/// The dual of every `H` (resp. `I`) member is isomorphic to an `H`
/// (resp. `I`) member of the same order.
pub fn duality_closure(max_n: usize) -> Result<VerdictReport> {
    let mut r = VerdictReport::new("self-dual-families", 7, max_n);
    for fam in [Family::H, Family::I] {
        for n in (7..=max_n).step_by(2) {
            let specs: Vec<FamilySpec> =
                all_family_specs(n).into_iter().filter(|s| s.family == fam).collect();
            let members: Vec<Tournament> =
                specs.iter().map(assemble_family).collect::<Result<_>>()?;
            let codes: BTreeSet<CanonicalCode> = members.iter().map(canonical_code).collect();
            for t in &members {
                r.count("members", 1);
                if !codes.contains(&canonical_code(&t.dual())) {
                    r.fail(canonical_code(t));
                }
            }
        }
    }
    Ok(r.finish())
}

/// Every spec of order at most `max_n` resolves to a single class, also
/// under the given alternative chain orders.
pub fn assembler_uniqueness(max_n: usize) -> Result<VerdictReport> {
    let mut r = VerdictReport::new("assembler-uniqueness", 7, max_n);
    for n in (7..=max_n).step_by(2) {
        for spec in all_family_specs(n) {
            r.count("specs", 1);
            match assemble_family_detailed(&spec) {
                Ok(a) => {
                    r.count("solutions", a.solutions);
                    if a.distinct_classes != 1 {
                        r.fail(canonical_code(&a.tournament));
                    }
                }
                Err(Error::AmbiguousSpec(_)) | Err(Error::InfeasibleSpec(_)) => {
                    r.pass = false;
                    r.count("failed_specs", 1);
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(r.finish())
}

pub fn verify_latka(n: usize, opts: &EnumOptions) -> Result<VerdictReport> {
    check_budget(n, opts)?;
    Census::build(n, opts)?.verify_latka(n)
}

pub fn verify_hik(max_n: usize, opts: &EnumOptions) -> Result<VerdictReport> {
    check_budget(max_n, opts)?;
    Census::build(max_n, opts)?.verify_hik(max_n)
}

pub fn verify_main(n: usize, opts: &EnumOptions) -> Result<VerdictReport> {
    check_budget(n, opts)?;
    Census::build(n, opts)?.verify_main(n)
}

pub fn verify_sayar(max_n: usize, opts: &EnumOptions) -> Result<VerdictReport> {
    check_budget(max_n, opts)?;
    Census::build(max_n, opts)?.verify_sayar(max_n)
}

pub fn verify_lemma_suite(budget_n: usize, opts: &EnumOptions) -> Result<VerdictReport> {
    check_budget(budget_n, opts)?;
    Census::build(budget_n, opts)?.verify_lemma_suite(budget_n)
}
