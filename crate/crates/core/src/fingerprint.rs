//! Fingerprint vectors over `{0, 1, N}` and their resolutions.
//!
//! Both [`Fingerprint`] and [`ResolvedVector`] are bit-packed into `u64`
//! words, most significant bit first: position `i` lives in word `i / 64` at
//! bit `63 - i % 64`. With that layout, comparing word slices is the same as
//! comparing the vectors lexicographically with `0 < 1`. Bits past the
//! declared length are always zero, and a fingerprint's value bit is zero
//! wherever its missing bit is set, so equal vectors have equal words.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[inline]
fn locate(pos: usize) -> (usize, u64) {
    (pos / WORD_BITS, 1u64 << (WORD_BITS - 1 - pos % WORD_BITS))
}

fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

/// A single position of a fingerprint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Missing,
}

impl Symbol {
    pub fn from_char(c: char) -> Option<Symbol> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            'N' => Some(Symbol::Missing),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Missing => 'N',
        }
    }
}

/// A binary vector: a candidate cluster representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResolvedVector {
    len: usize,
    bits: Vec<u64>,
}

impl ResolvedVector {
    pub fn zeros(len: usize) -> Self {
        ResolvedVector {
            len,
            bits: vec![0; word_count(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut r = ResolvedVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            r.set(i, b);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn get(&self, pos: usize) -> bool {
        assert!(pos < self.len, "position {pos} out of range {}", self.len);
        let (w, m) = locate(pos);
        self.bits[w] & m != 0
    }

    pub fn set(&mut self, pos: usize, value: bool) {
        assert!(pos < self.len, "position {pos} out of range {}", self.len);
        let (w, m) = locate(pos);
        if value {
            self.bits[w] |= m;
        } else {
            self.bits[w] &= !m;
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.iter().map(|w| w.count_ones()).sum()
    }

    /// Number of positions where the two vectors differ.
    pub fn hamming(&self, other: &ResolvedVector) -> Result<u32> {
        check_len(self.len, other.len)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum())
    }

    /// The same vector viewed as a fingerprint without missing symbols.
    pub fn to_fingerprint(&self) -> Fingerprint {
        Fingerprint {
            len: self.len,
            values: self.bits.clone(),
            missing: vec![0; self.bits.len()],
        }
    }
}

impl fmt::Display for ResolvedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for ResolvedVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        column: i + 1,
                        message: format!("illegal character {other:?} in resolved vector"),
                    })
                }
            }
        }
        Ok(ResolvedVector::from_bools(&bits))
    }
}

/// A vector over `{0, 1, N}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    len: usize,
    values: Vec<u64>,
    missing: Vec<u64>,
}

impl Fingerprint {
    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let n = word_count(symbols.len());
        let mut fp = Fingerprint {
            len: symbols.len(),
            values: vec![0; n],
            missing: vec![0; n],
        };
        for (i, &s) in symbols.iter().enumerate() {
            fp.set(i, s);
        }
        fp
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value_words(&self) -> &[u64] {
        &self.values
    }

    pub fn missing_words(&self) -> &[u64] {
        &self.missing
    }

    pub fn get(&self, pos: usize) -> Symbol {
        assert!(pos < self.len, "position {pos} out of range {}", self.len);
        let (w, m) = locate(pos);
        if self.missing[w] & m != 0 {
            Symbol::Missing
        } else if self.values[w] & m != 0 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn set(&mut self, pos: usize, symbol: Symbol) {
        assert!(pos < self.len, "position {pos} out of range {}", self.len);
        let (w, m) = locate(pos);
        match symbol {
            Symbol::Zero => {
                self.values[w] &= !m;
                self.missing[w] &= !m;
            }
            Symbol::One => {
                self.values[w] |= m;
                self.missing[w] &= !m;
            }
            Symbol::Missing => {
                self.values[w] &= !m;
                self.missing[w] |= m;
            }
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Number of `N` symbols.
    pub fn missing_count(&self) -> usize {
        self.missing.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions holding `N`, ascending.
    pub fn missing_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.missing_count());
        for (wi, &word) in self.missing.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let lead = w.leading_zeros() as usize;
                out.push(wi * WORD_BITS + lead);
                w &= !(1u64 << (WORD_BITS - 1 - lead));
            }
        }
        out
    }

    /// Word-level compatibility test; lengths must already agree.
    #[inline]
    pub(crate) fn compatible_unchecked(&self, other: &Fingerprint) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .zip(self.missing.iter().zip(&other.missing))
            .all(|((va, vb), (ma, mb))| (va ^ vb) & !ma & !mb == 0)
    }

    /// Word-level resolution test; lengths must already agree.
    #[inline]
    pub(crate) fn resolved_by_unchecked(&self, r: &ResolvedVector) -> bool {
        self.values
            .iter()
            .zip(&self.missing)
            .zip(&r.bits)
            .all(|((v, m), rb)| (v ^ rb) & !m == 0)
    }

    /// All resolutions in lexicographic order.
    ///
    /// # Panics
    ///
    /// If the fingerprint has 64 or more missing positions.
    pub fn resolutions(&self) -> Resolutions {
        let positions = self.missing_positions();
        assert!(
            positions.len() < 64,
            "cannot enumerate 2^{} resolutions",
            positions.len()
        );
        Resolutions {
            base: ResolvedVector {
                len: self.len,
                bits: self.values.clone(),
            },
            total: 1u64 << positions.len(),
            positions,
            next: 0,
        }
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols().map(Symbol::as_char).collect();
        f.write_str(&s)
    }
}

impl FromStr for Fingerprint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut symbols = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match Symbol::from_char(c) {
                Some(sym) => symbols.push(sym),
                None => {
                    return Err(Error::Parse {
                        line: 1,
                        column: i + 1,
                        message: format!("illegal character {c:?}"),
                    })
                }
            }
        }
        Ok(Fingerprint::from_symbols(&symbols))
    }
}

/// Iterator returned by [`Fingerprint::resolutions`].
pub struct Resolutions {
    base: ResolvedVector,
    positions: Vec<usize>,
    total: u64,
    next: u64,
}

impl Iterator for Resolutions {
    type Item = ResolvedVector;

    fn next(&mut self) -> Option<ResolvedVector> {
        if self.next >= self.total {
            return None;
        }
        let code = self.next;
        self.next += 1;
        let k = self.positions.len();
        let mut r = self.base.clone();
        // Earliest missing position takes the most significant counter bit.
        for (j, &pos) in self.positions.iter().enumerate() {
            if (code >> (k - 1 - j)) & 1 == 1 {
                let (w, m) = locate(pos);
                r.bits[w] |= m;
            }
        }
        Some(r)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Resolutions {}

/// True iff `a` and `b` agree wherever both are known.
pub fn compatible(a: &Fingerprint, b: &Fingerprint) -> Result<bool> {
    check_len(a.len, b.len)?;
    Ok(a.compatible_unchecked(b))
}

/// True iff `r` agrees with `v` at every known position of `v`.
pub fn is_resolution(r: &ResolvedVector, v: &Fingerprint) -> Result<bool> {
    check_len(r.len, v.len)?;
    Ok(v.resolved_by_unchecked(r))
}

pub fn enumerate_resolutions(v: &Fingerprint) -> Vec<ResolvedVector> {
    v.resolutions().collect()
}

/// Canonical common resolution of a pairwise-compatible cluster: every known
/// symbol is kept and positions that are `N` in all members become `0`.
///
/// On an incompatible pair the error carries the two list positions.
pub fn merge_resolution(cluster: &[Fingerprint]) -> Result<ResolvedVector> {
    let first = cluster.first().ok_or(Error::EmptyCluster)?;
    for f in cluster {
        check_len(first.len, f.len)?;
    }
    for (i, a) in cluster.iter().enumerate() {
        for (j, b) in cluster.iter().enumerate().skip(i + 1) {
            if !a.compatible_unchecked(b) {
                return Err(Error::Incompatible { a: i, b: j });
            }
        }
    }
    let mut out = ResolvedVector::zeros(first.len);
    for f in cluster {
        for (o, v) in out.bits.iter_mut().zip(&f.values) {
            *o |= v;
        }
    }
    Ok(out)
}

/// An ordered multiset of equal-length fingerprints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    fingerprints: Vec<Fingerprint>,
    len: usize,
    p: usize,
    name: Option<String>,
}

impl Instance {
    pub fn new(fingerprints: Vec<Fingerprint>) -> Result<Self> {
        let len = fingerprints.first().map_or(0, Fingerprint::len);
        for f in &fingerprints {
            check_len(len, f.len())?;
        }
        let p = fingerprints
            .iter()
            .map(Fingerprint::missing_count)
            .max()
            .unwrap_or(0);
        Ok(Instance {
            fingerprints,
            len,
            p,
            name: None,
        })
    }

    pub fn empty() -> Self {
        Instance {
            fingerprints: Vec::new(),
            len: 0,
            p: 0,
            name: None,
        }
    }

    /// Parses one fingerprint per string; convenient for fixtures.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let fps = rows
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Fingerprint>>>()?;
        Instance::new(fps)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn fingerprints(&self) -> &[Fingerprint] {
        &self.fingerprints
    }

    pub fn get(&self, index: usize) -> Option<&Fingerprint> {
        self.fingerprints.get(index)
    }

    /// Number of fingerprints.
    pub fn size(&self) -> usize {
        self.fingerprints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fingerprints.is_empty()
    }

    /// Common fingerprint length.
    pub fn length(&self) -> usize {
        self.len
    }

    /// Maximum number of `N` symbols in a member.
    pub fn p(&self) -> usize {
        self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(s: &str) -> Fingerprint {
        s.parse().unwrap()
    }

    fn rv(s: &str) -> ResolvedVector {
        s.parse().unwrap()
    }

    #[test]
    fn compatibility_examples() {
        assert!(compatible(&fp("00NN"), &fp("0N00")).unwrap());
        assert!(!compatible(&fp("001N"), &fp("0N00")).unwrap());
        for s in ["0", "N1N0", "111", "NNNN"] {
            assert!(compatible(&fp(s), &fp(s)).unwrap());
        }
        assert!(matches!(
            compatible(&fp("00"), &fp("000")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn resolution_examples() {
        assert!(is_resolution(&rv("1000"), &fp("1N0N")).unwrap());
        assert!(is_resolution(&rv("1100"), &fp("1N0N")).unwrap());
        assert!(!is_resolution(&rv("1010"), &fp("1N0N")).unwrap());
        assert!(is_resolution(&rv("101"), &fp("101")).unwrap());
        assert!(is_resolution(&rv("10"), &fp("101")).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let got: Vec<String> = enumerate_resolutions(&fp("1N0N"))
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(got, ["1000", "1001", "1100", "1101"]);
        let got: Vec<String> = enumerate_resolutions(&fp("101"))
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(got, ["101"]);
        let got: Vec<String> = enumerate_resolutions(&fp("NN"))
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(got, ["00", "01", "10", "11"]);
    }

    #[test]
    fn merge_examples() {
        let m = |rows: &[&str]| {
            let v: Vec<Fingerprint> = rows.iter().map(|s| fp(s)).collect();
            merge_resolution(&v)
        };
        assert_eq!(m(&["00NN", "0N00"]).unwrap().to_string(), "0000");
        assert_eq!(m(&["1N0N"]).unwrap().to_string(), "1000");
        assert_eq!(m(&["001N", "00NN"]).unwrap().to_string(), "0010");
        assert!(matches!(
            m(&["00NN", "001N", "0N00"]),
            Err(Error::Incompatible { a: 1, b: 2 })
        ));
        assert!(matches!(m(&[]), Err(Error::EmptyCluster)));
    }

    #[test]
    fn canonical_form_after_overwrite() {
        let mut a = fp("1111");
        a.set(1, Symbol::Missing);
        assert_eq!(a, fp("1N11"));
        assert_eq!(a.value_words()[0] & (1 << 62), 0);
    }

    #[test]
    fn multiword_lengths() {
        let s: String = (0..130)
            .map(|i| match i % 5 {
                0 => 'N',
                1 | 3 => '1',
                _ => '0',
            })
            .collect();
        let f = fp(&s);
        assert_eq!(f.to_string(), s);
        assert_eq!(f.missing_count(), 26);
        assert_eq!(f.missing_positions()[..3], [0, 5, 10]);
        assert_eq!(f.value_words().len(), 3);
        assert_eq!(f.value_words()[2] & ((1u64 << 62) - 1), 0);
        assert_eq!(f.missing_words()[2] & ((1u64 << 62) - 1), 0);
    }

    #[test]
    fn lexicographic_order_matches_words() {
        assert!(rv("0111") < rv("1000"));
        assert!(rv("0010") < rv("0100"));
        let long_a: ResolvedVector = format!("{}0{}", "1".repeat(64), "1".repeat(10)).parse().unwrap();
        let long_b: ResolvedVector = format!("{}1{}", "1".repeat(64), "0".repeat(10)).parse().unwrap();
        assert!(long_a < long_b);
    }

    #[test]
    fn ragged_instance_rejected() {
        assert!(Instance::from_strs(&["00", "000"]).is_err());
        let inst = Instance::from_strs(&["0N", "NN", "10"]).unwrap();
        assert_eq!((inst.size(), inst.length(), inst.p()), (3, 2, 2));
    }
}
