//! Canonical forms for tournaments.
//!
//! The code of a tournament is the lexicographically least orientation
//! bitstring over all relabellings, where the bitstring lists the pairs
//! `(i, j)`, `i < j`, in row-major order and a set bit means `i -> j`.
//!
//! The search fixes the new labelling one position at a time. Once positions
//! `0..k` are fixed, the least possible row `k` forces the remaining vertices
//! into an ordered partition: inside every cell, the in-neighbours of the
//! vertex at position `k` come before its out-neighbours. Row `k` is then
//! determined by the per-cell out-degree counts of that vertex, so candidates
//! are compared by those counts and only the minimal ones survive to the next
//! level. Row 0 in particular forces position 0 onto a vertex of least
//! out-degree. All surviving partial labellings share identical rows and hence
//! identical cell sizes, so the comparison is well defined across them.

use std::cmp::Ordering;
use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::record;
use crate::tournament::Tournament;

/// Order-invariant fingerprint: the vertex count followed by the minimal
/// orientation bitstring packed MSB-first. Serialized as the record of the
/// canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_record())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let line = String::deserialize(d)?;
        let t = record::parse_record(&line).map_err(de::Error::custom)?;
        Ok(canonical_code(&t))
    }
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative this code describes.
    pub fn to_tournament(&self) -> Tournament {
        let n = self.n();
        let bits = &self.0[1..];
        let mut k = 0usize;
        Tournament::from_fn(n, |_, _| {
            let bit = bits[k / 8] >> (7 - k % 8) & 1 == 1;
            k += 1;
            bit
        })
    }

    /// The canonical representative in record form.
    pub fn to_record(&self) -> String {
        record::to_record(&self.to_tournament())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_record())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_record())
    }
}

pub fn canonical_code(t: &Tournament) -> CanonicalCode {
    canonical_labeling(t).0
}

pub fn is_isomorphic(a: &Tournament, b: &Tournament) -> bool {
    a.n() == b.n() && a.score_sequence() == b.score_sequence() && canonical_code(a) == canonical_code(b)
}

/// An isomorphism from `a` onto `b` as a vertex map `f[x]`, if one exists.
pub fn isomorphism(a: &Tournament, b: &Tournament) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let (ca, oa) = canonical_labeling(a);
    let (cb, ob) = canonical_labeling(b);
    if ca != cb {
        return None;
    }
    let mut f = vec![0; a.n()];
    for (pa, pb) in oa.iter().zip(&ob) {
        f[*pa] = *pb;
    }
    Some(f)
}

/// The canonical code together with one optimal labelling: `order[p]` is the
/// vertex placed at position `p`.
pub fn canonical_labeling(t: &Tournament) -> (CanonicalCode, Vec<usize>) {
    let order = canonical_order(t);
    (encode(t, &order), order)
}

/// `t` relabelled into its canonical form.
pub fn canonical_form(t: &Tournament) -> Tournament {
    canonical_code(t).to_tournament()
}

fn encode(t: &Tournament, order: &[usize]) -> CanonicalCode {
    let n = order.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bytes = vec![0u8; 1 + nbits.div_ceil(8)];
    bytes[0] = n as u8;
    let mut k = 0usize;
    for i in 0..n {
        let row = t.out_mask(order[i]);
        for &vj in &order[i + 1..] {
            if row >> vj & 1 == 1 {
                bytes[1 + k / 8] |= 0x80 >> (k % 8);
            }
            k += 1;
        }
    }
    CanonicalCode(bytes)
}

/// Flat storage for the surviving partial labellings of one level. Every
/// state has `depth` fixed vertices and `ncells` cells.
struct Level {
    depth: usize,
    ncells: usize,
    orders: Vec<u8>,
    cells: Vec<u64>,
}

impl Level {
    fn states(&self) -> usize {
        self.orders.len() / self.depth.max(1)
    }
}

fn canonical_order(t: &Tournament) -> Vec<usize> {
    let n = t.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let out = t.out_masks();
    let mut cur = Level {
        depth: 0,
        ncells: 1,
        orders: Vec::new(),
        cells: vec![t.vertices().bits()],
    };
    let mut nstates = 1usize;
    let mut best = vec![0u8; n];
    let mut next_orders: Vec<u8> = Vec::new();
    let mut next_cells: Vec<u64> = Vec::new();

    for depth in 0..n {
        next_orders.clear();
        next_cells.clear();
        let mut have_best = false;
        let mut next_ncells = 0usize;

        for s in 0..nstates {
            let cells = &cur.cells[s * cur.ncells..(s + 1) * cur.ncells];
            let prefix = &cur.orders[s * depth..(s + 1) * depth];
            let mut cand = cells[0];
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let ov = out[v];

                // Row key: out-degree of v into each remaining cell.
                let mut ord = if have_best { Ordering::Equal } else { Ordering::Less };
                if have_best {
                    for (ci, &c) in cells.iter().enumerate() {
                        let c = if ci == 0 { c & !(1u64 << v) } else { c };
                        let cnt = (ov & c).count_ones() as u8;
                        match cnt.cmp(&best[ci]) {
                            Ordering::Equal => continue,
                            o => {
                                ord = o;
                                break;
                            }
                        }
                    }
                }
                if ord == Ordering::Greater {
                    continue;
                }
                if ord == Ordering::Less {
                    next_orders.clear();
                    next_cells.clear();
                    for (ci, &c) in cells.iter().enumerate() {
                        let c = if ci == 0 { c & !(1u64 << v) } else { c };
                        best[ci] = (ov & c).count_ones() as u8;
                    }
                    have_best = true;
                }
                next_orders.extend_from_slice(prefix);
                next_orders.push(v as u8);
                let before = next_cells.len();
                for (ci, &c) in cells.iter().enumerate() {
                    let c = if ci == 0 { c & !(1u64 << v) } else { c };
                    let lo = c & !ov;
                    let hi = c & ov;
                    if lo != 0 {
                        next_cells.push(lo);
                    }
                    if hi != 0 {
                        next_cells.push(hi);
                    }
                }
                next_ncells = next_cells.len() - before;
            }
        }

        std::mem::swap(&mut cur.orders, &mut next_orders);
        std::mem::swap(&mut cur.cells, &mut next_cells);
        cur.depth = depth + 1;
        cur.ncells = next_ncells;
        nstates = cur.states();

        // A single survivor whose cells are all singletons has a forced tail.
        if nstates == 1 && cur.ncells == n - cur.depth {
            let mut order: Vec<usize> = cur.orders.iter().map(|&v| v as usize).collect();
            order.extend(cur.cells.iter().map(|c| c.trailing_zeros() as usize));
            return order;
        }
    }
    cur.orders[..n].iter().map(|&v| v as usize).collect()
}
