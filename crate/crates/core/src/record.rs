//! One-line text records.
//!
//! A record is the decimal vertex count, one space, and an uppercase hex
//! string. The hex string holds one bit per pair `(i, j)`, `i < j`, in
//! lexicographic pair order, most significant bit first, zero-padded on the
//! right to a whole number of nibbles. Bit 1 means `i -> j`. Tournaments on
//! fewer than two vertices have an empty hex string, so their record is the
//! count followed by a single space.

use crate::error::{Error, Result};
use crate::tournament::{Tournament, MAX_VERTICES};

const HEX: &[u8; 16] = b"0123456789ABCDEF";

pub fn to_record(t: &Tournament) -> String {
    let n = t.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut nibbles = vec![0u8; nbits.div_ceil(4)];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if t.beats(i, j) {
                nibbles[k / 4] |= 8 >> (k % 4);
            }
            k += 1;
        }
    }
    let mut s = format!("{n} ");
    s.extend(nibbles.iter().map(|&d| HEX[d as usize] as char));
    s
}

pub fn parse_record(line: &str) -> Result<Tournament> {
    let (count, hex) = line
        .split_once(' ')
        .ok_or_else(|| Error::Parse(format!("expected `<n> <hex>`, got {line:?}")))?;
    let n: usize = count
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count {count:?}")))?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if hex.len() != nbits.div_ceil(4) {
        return Err(Error::Parse(format!(
            "expected {} hex digits for n = {n}, got {}",
            nbits.div_ceil(4),
            hex.len()
        )));
    }
    let mut nibbles = Vec::with_capacity(hex.len());
    for c in hex.bytes() {
        let d = match c {
            b'0'..=b'9' => c - b'0',
            b'A'..=b'F' => c - b'A' + 10,
            _ => return Err(Error::Parse(format!("bad hex digit {:?}", c as char))),
        };
        nibbles.push(d);
    }
    let pad = nibbles.len() * 4 - nbits;
    if pad > 0 && nibbles[nibbles.len() - 1] & ((1u8 << pad) - 1) != 0 {
        return Err(Error::Parse("nonzero padding bits".into()));
    }
    let mut k = 0;
    Ok(Tournament::from_fn(n, |_, _| {
        let bit = nibbles[k / 4] & (8 >> (k % 4)) != 0;
        k += 1;
        bit
    }))
}

/// Parses a record stream, skipping blank lines and `#` comments. Errors carry
/// the 1-based line number.
pub fn parse_records(text: &str) -> std::result::Result<Vec<Tournament>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_record(line).map_err(|e| (i + 1, e))?);
    }
    Ok(out)
}
