//! Binary words: the vertices of the rooted binary tree.
//!
//! A word is a finite sequence over `{0,1}`; the empty word is the root.
//! Words of length `n` form level `n` of the tree, enumerated in
//! lexicographic order everywhere in this crate. Bit indices are 1-based:
//! the "nth bit" is the nth term of the sequence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, DEFAULT_DEPTH_CAP};

/// Longest representable word. Bits are packed into a `u64`, most
/// significant first, so all operations are O(1) on machine words.
pub const MAX_WORD_LEN: usize = 63;

/// A vertex of the rooted binary tree: a finite word over `{0,1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: u64,
    len: u8,
}

impl BinaryWord {
    /// The empty word, i.e. the root of the tree.
    pub const ROOT: BinaryWord = BinaryWord { bits: 0, len: 0 };

    /// Builds a word of length `len` from the low `len` bits of `bits`,
    /// most significant bit first. `bits` doubles as the lexicographic
    /// index of the word within its level.
    pub fn from_level_index(bits: u64, len: usize) -> BinaryWord {
        assert!(len <= MAX_WORD_LEN, "word length {len} exceeds {MAX_WORD_LEN}");
        debug_assert!(len == MAX_WORD_LEN || bits < (1u64 << len));
        BinaryWord { bits, len: len as u8 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Lexicographic index of this word within level `len()`.
    pub fn level_index(&self) -> u64 {
        self.bits
    }

    /// The nth bit, 1-based. Only makes sense when the word has at least
    /// `n` terms; otherwise `IndexOutOfRange`.
    pub fn bit(&self, n: usize) -> Result<u8> {
        if n == 0 || n > self.len() {
            return Err(Error::IndexOutOfRange { index: n, len: self.len() });
        }
        Ok(self.bit_unchecked(n))
    }

    #[inline]
    pub(crate) fn bit_unchecked(&self, n: usize) -> u8 {
        ((self.bits >> (self.len() - n)) & 1) as u8
    }

    /// Returns the word with bit `n` (1-based) flipped.
    pub fn flip_bit(&self, n: usize) -> Result<BinaryWord> {
        if n == 0 || n > self.len() {
            return Err(Error::IndexOutOfRange { index: n, len: self.len() });
        }
        Ok(BinaryWord {
            bits: self.bits ^ (1u64 << (self.len() - n)),
            len: self.len,
        })
    }

    /// First bit, or `None` for the empty word.
    pub fn first_bit(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.bit_unchecked(1))
    }

    /// Everything after the first bit.
    pub fn tail(&self) -> BinaryWord {
        assert!(!self.is_empty(), "tail of the empty word");
        BinaryWord {
            bits: self.bits & !(1u64 << (self.len() - 1)),
            len: self.len - 1,
        }
    }

    /// The child `w·b` of this word.
    pub fn child(&self, b: u8) -> BinaryWord {
        assert!(self.len() < MAX_WORD_LEN, "word length limit reached");
        debug_assert!(b <= 1);
        BinaryWord {
            bits: (self.bits << 1) | u64::from(b),
            len: self.len + 1,
        }
    }

    /// Appends a bit in place (builder-style helper for loops).
    pub(crate) fn push(&mut self, b: u8) {
        *self = self.child(b);
    }

    /// The prefix of length `k ≤ len`.
    pub fn prefix(&self, k: usize) -> BinaryWord {
        assert!(k <= self.len());
        BinaryWord {
            bits: self.bits >> (self.len() - k),
            len: k as u8,
        }
    }

    /// Number of leading `1` bits.
    pub fn leading_ones(&self) -> usize {
        let mut k = 0;
        while k < self.len() && self.bit_unchecked(k + 1) == 1 {
            k += 1;
        }
        k
    }

    /// True if `self` is `other` or an ancestor of it.
    pub fn is_prefix_of(&self, other: &BinaryWord) -> bool {
        self.len() <= other.len() && other.prefix(self.len()) == *self
    }
}

/// Lexicographic order with the convention that a proper prefix precedes
/// its extensions ("" < "0" < "00" < "01" < "1"). This matches ordinary
/// string order on the serialized form and is the canonical order for all
/// serialized output.
impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let k = self.len().min(other.len());
        let a = if self.len() == k { self.bits } else { self.bits >> (self.len() - k) };
        let b = if other.len() == k { other.bits } else { other.bits >> (other.len() - k) };
        a.cmp(&b).then(self.len().cmp(&other.len()))
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 1..=self.len() {
            write!(f, "{}", self.bit_unchecked(n))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    /// Parses a string of '0'/'1'; the empty string gives the root.
    fn from_str(text: &str) -> Result<BinaryWord> {
        let mut w = BinaryWord::ROOT;
        for ch in text.chars() {
            match ch {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => {
                    return Err(Error::InvalidCharacter { found: ch, expected: "01" });
                }
            }
        }
        Ok(w)
    }
}

/// All binary words of one length, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSet {
    n: usize,
    words: Vec<BinaryWord>,
}

impl LevelSet {
    pub fn depth(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false // 2^n ≥ 1
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BinaryWord> {
        self.words.iter()
    }
}

/// All `2^n` words of length `n`, lexicographically, under the default
/// depth cap.
pub fn level(n: usize) -> Result<LevelSet> {
    level_with_cap(n, DEFAULT_DEPTH_CAP)
}

/// As [`level`], with an explicit cap.
pub fn level_with_cap(n: usize, cap: usize) -> Result<LevelSet> {
    if n > cap || n > MAX_WORD_LEN {
        return Err(Error::ResourceLimit { what: "level", requested: n, cap: cap.min(MAX_WORD_LEN) });
    }
    let words = (0..1u64 << n).map(|i| BinaryWord::from_level_index(i, n)).collect();
    Ok(LevelSet { n, words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!("".parse::<BinaryWord>().unwrap(), BinaryWord::ROOT);
        let w = "011".parse::<BinaryWord>().unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!((w.bit(1).unwrap(), w.bit(2).unwrap(), w.bit(3).unwrap()), (0, 1, 1));
        assert_eq!(
            "0a1".parse::<BinaryWord>(),
            Err(Error::InvalidCharacter { found: 'a', expected: "01" })
        );
    }

    #[test]
    fn flip_examples() {
        let w = "011".parse::<BinaryWord>().unwrap();
        assert_eq!(w.flip_bit(1).unwrap().to_string(), "111");
        let w = "10".parse::<BinaryWord>().unwrap();
        assert_eq!(w.flip_bit(2).unwrap().to_string(), "11");
        let w = "0".parse::<BinaryWord>().unwrap();
        assert_eq!(w.flip_bit(2), Err(Error::IndexOutOfRange { index: 2, len: 1 }));
    }

    #[test]
    fn level_examples() {
        assert_eq!(level(0).unwrap().words(), &[BinaryWord::ROOT]);
        let strs: Vec<String> = level(1).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(strs, ["0", "1"]);
        let strs: Vec<String> = level(2).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(strs, ["00", "01", "10", "11"]);
        assert!(matches!(level(25), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn levels_nest() {
        // every word at level n+1 has its length-n prefix at level n
        for n in 0..6 {
            let cur: std::collections::HashSet<_> = level(n).unwrap().words().iter().copied().collect();
            for w in level(n + 1).unwrap().iter() {
                assert!(cur.contains(&w.prefix(n)));
            }
            assert_eq!(cur.len(), 1 << n);
        }
    }

    #[test]
    fn order_is_string_order() {
        let mut all: Vec<BinaryWord> = Vec::new();
        for n in 0..=4 {
            all.extend(level(n).unwrap().words().iter().copied());
        }
        let mut by_word = all.clone();
        by_word.sort();
        let mut by_string = all;
        by_string.sort_by_key(|w| w.to_string());
        assert_eq!(by_word, by_string);
    }

    proptest! {
        #[test]
        fn flip_is_involution(bits in 0u64..1024, len in 1usize..=10, i in 1usize..=10) {
            let w = BinaryWord::from_level_index(bits % (1 << len), len);
            if i <= len {
                prop_assert_eq!(w.flip_bit(i).unwrap().flip_bit(i).unwrap(), w);
            } else {
                prop_assert!(w.flip_bit(i).is_err());
            }
        }

        #[test]
        fn display_parse_roundtrip(bits in 0u64..4096, len in 0usize..=12) {
            let w = BinaryWord::from_level_index(bits % (1u64 << len), len);
            prop_assert_eq!(w.to_string().parse::<BinaryWord>().unwrap(), w);
        }
    }
}
