use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 64;

/// A tournament on the vertices `0..n`.
///
/// Each vertex stores its out-neighbourhood as a bitmask. Construction goes
/// through [`Tournament::from_arcs`] or [`Tournament::from_fn`], both of which
/// fill every pair exactly once, so totality and antisymmetry hold for every
/// value of this type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament from an explicit arc list. Every unordered pair of
    /// distinct vertices must appear exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut out = vec![0u64; n];
        for &(a, b) in arcs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfArc(a));
            }
            let seen = (out[a] >> b & 1) | (out[b] >> a & 1);
            if seen != 0 {
                return Err(Error::ConflictingPair(a.min(b), a.max(b)));
            }
            out[a] |= 1 << b;
        }
        for i in 0..n {
            for j in i + 1..n {
                if (out[i] >> j | out[j] >> i) & 1 == 0 {
                    return Err(Error::MissingPair(i, j));
                }
            }
        }
        Ok(Tournament { n, out })
    }

    /// Builds a tournament from an orientation predicate queried once per pair
    /// `i < j`: `beats(i, j)` true means the arc is `i -> j`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        assert!(n <= MAX_VERTICES, "tournament on {n} > 64 vertices");
        let mut out = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Tournament { n, out }
    }

    /// Wraps raw out-neighbourhood masks. Panics if they do not describe a
    /// tournament.
    pub fn from_out_masks(out: Vec<u64>) -> Self {
        let t = Tournament { n: out.len(), out };
        assert!(t.validate(), "out-masks are not a tournament");
        t
    }

    pub(crate) fn from_out_masks_unchecked(out: Vec<u64>) -> Self {
        debug_assert!(out.len() <= MAX_VERTICES);
        let t = Tournament { n: out.len(), out };
        debug_assert!(t.validate());
        t
    }

    pub fn single_vertex() -> Self {
        Tournament { n: 1, out: vec![0] }
    }

    /// Independent check of totality and antisymmetry over every pair.
    pub fn validate(&self) -> bool {
        if self.n > MAX_VERTICES {
            return false;
        }
        let all = VertexSet::range(self.n).bits();
        for i in 0..self.n {
            if self.out[i] & !all != 0 || self.out[i] >> i & 1 == 1 {
                return false;
            }
            for j in i + 1..self.n {
                if (self.out[i] >> j & 1) == (self.out[j] >> i & 1) {
                    return false;
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    /// `x -> y`.
    #[inline]
    pub fn beats(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }

    #[inline]
    pub fn out_mask(&self, x: usize) -> u64 {
        self.out[x]
    }

    pub fn out_masks(&self) -> &[u64] {
        &self.out
    }

    pub fn out_neighbors(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(VertexSet(self.out[x]))
    }

    pub fn in_neighbors(&self, x: usize) -> Result<VertexSet> {
        self.check_vertex(x)?;
        Ok(VertexSet(!self.out[x] & VertexSet::range(self.n).bits()).without(x))
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.out[x].count_ones() as usize
    }

    pub fn score_sequence(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.n).map(|x| self.out_degree(x)).collect();
        s.sort_unstable();
        s
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 0..self.n {
            for j in VertexSet(self.out[i]) {
                arcs.push((i, j));
            }
        }
        arcs
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertices()).min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
        }
    }

    /// `T[X]`, relabelled `0..|X|` in increasing label order. The returned map
    /// sends each new label to the original one.
    pub fn subtournament(&self, set: VertexSet) -> Result<(Tournament, Vec<usize>)> {
        self.check_set(set)?;
        Ok(self.induced(set))
    }

    pub(crate) fn induced(&self, set: VertexSet) -> (Tournament, Vec<usize>) {
        let map = set.to_vec();
        let out = map
            .iter()
            .map(|&x| compress(self.out[x], set.bits()))
            .collect();
        (Tournament { n: map.len(), out }, map)
    }

    /// `T - X`.
    pub fn remove(&self, set: VertexSet) -> Result<(Tournament, Vec<usize>)> {
        self.check_set(set)?;
        Ok(self.induced(self.vertices().difference(set)))
    }

    /// Every arc reversed.
    pub fn dual(&self) -> Tournament {
        let all = VertexSet::range(self.n).bits();
        let out = (0..self.n)
            .map(|x| !self.out[x] & all & !(1u64 << x))
            .collect();
        Tournament { n: self.n, out }
    }

    /// Relabels so that vertex `x` of `self` becomes `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> Tournament {
        assert_eq!(perm.len(), self.n);
        let mut out = vec![0u64; self.n];
        for x in 0..self.n {
            let mut m = 0u64;
            for y in VertexSet(self.out[x]) {
                m |= 1 << perm[y];
            }
            out[perm[x]] = m;
        }
        Tournament { n: self.n, out }
    }

    /// True when no 3-cycle is present.
    pub fn is_transitive(&self) -> bool {
        self.is_transitive_on(self.vertices())
    }

    /// Triple scan restricted to `set`.
    pub fn is_transitive_on(&self, set: VertexSet) -> bool {
        let s = set.bits();
        for a in set {
            let ins = s & !self.out[a] & !(1u64 << a);
            // a -> b -> c -> a
            for b in VertexSet(self.out[a] & s) {
                if self.out[b] & ins != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Packs the bits of `word` selected by `mask` into the low bits.
#[inline]
pub(crate) fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    let mut k = 0;
    while m != 0 {
        let b = m.trailing_zeros();
        out |= (word >> b & 1) << k;
        k += 1;
        m &= m - 1;
    }
    out
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({})", crate::record::to_record(self))
    }
}
