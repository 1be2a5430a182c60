//! Finite-depth portraits of tree automorphisms.
//!
//! A portrait of depth `d` records, for every vertex of depth `< d`,
//! whether the automorphism exchanges the two subtrees hanging below it.
//! That data determines the action on every word of length ≤ `d`.

use crate::group::{Gen, GenWord};
use crate::words::BinaryWord;
use crate::{Error, Result, DEFAULT_DEPTH_CAP};

/// Depth-`d` truncation of a tree automorphism: one swap bit per vertex
/// of depth `< d`, stored in heap order (vertex `v` at `2^|v|-1 + index`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Portrait {
    depth: usize,
    bits: Vec<bool>,
}

impl Portrait {
    /// The identity portrait: no swaps anywhere.
    pub fn identity(depth: usize) -> Portrait {
        Portrait { depth, bits: vec![false; (1usize << depth) - 1] }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn slot(&self, v: &BinaryWord) -> usize {
        debug_assert!(v.len() < self.depth);
        (1usize << v.len()) - 1 + v.level_index() as usize
    }

    /// Swap bit at a vertex of depth `< depth`.
    pub fn swaps_at(&self, v: &BinaryWord) -> bool {
        self.bits[self.slot(v)]
    }

    pub(crate) fn set(&mut self, v: &BinaryWord, value: bool) {
        let slot = self.slot(v);
        self.bits[slot] = value;
    }

    /// True when no vertex swaps.
    pub fn is_trivial(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    /// All swap vertices, in lexicographic order.
    pub fn swap_vertices(&self) -> Vec<BinaryWord> {
        let mut out = Vec::new();
        for k in 0..self.depth {
            for i in 0..1u64 << k {
                let v = BinaryWord::from_level_index(i, k);
                if self.swaps_at(&v) {
                    out.push(v);
                }
            }
        }
        out.sort();
        out
    }

    /// Image of a word of length ≤ `depth` under the truncated
    /// automorphism: walk the source path, flipping each step's bit when
    /// the prefix above it is a swap vertex.
    pub fn apply(&self, w: BinaryWord) -> BinaryWord {
        assert!(w.len() <= self.depth, "word of length {} under portrait of depth {}", w.len(), self.depth);
        let mut out = BinaryWord::ROOT;
        for n in 1..=w.len() {
            let swap = self.swaps_at(&w.prefix(n - 1));
            out.push(w.bit_unchecked(n) ^ u8::from(swap));
        }
        out
    }

    /// Preimage of a word of length ≤ `depth`; the source path is
    /// recovered bit by bit.
    pub fn apply_inverse(&self, w: BinaryWord) -> BinaryWord {
        assert!(w.len() <= self.depth);
        let mut src = BinaryWord::ROOT;
        for n in 1..=w.len() {
            let swap = self.swaps_at(&src);
            src.push(w.bit_unchecked(n) ^ u8::from(swap));
        }
        src
    }

    /// Composite portrait `self ∘ other` (`other` acts first). The swap
    /// bit of the composite at `v` is `other`'s bit at `v` xor `self`'s
    /// bit at `other(v)`.
    pub fn compose(&self, other: &Portrait) -> Portrait {
        assert_eq!(self.depth, other.depth, "portrait depths must match");
        let mut out = Portrait::identity(self.depth);
        for k in 0..self.depth {
            for i in 0..1u64 << k {
                let v = BinaryWord::from_level_index(i, k);
                let bit = other.swaps_at(&v) ^ self.swaps_at(&other.apply(v));
                out.set(&v, bit);
            }
        }
        out
    }
}

/// Portrait of a generator word to the given depth, computed by recursive
/// sections: the root bit comes from the wreath recursion, and each
/// reduced section fills the subtree below its child.
pub fn portrait(gw: &GenWord, depth: usize) -> Result<Portrait> {
    portrait_with_cap(gw, depth, DEFAULT_DEPTH_CAP)
}

/// As [`portrait`] with an explicit depth cap.
pub fn portrait_with_cap(gw: &GenWord, depth: usize, cap: usize) -> Result<Portrait> {
    if depth > cap || depth > crate::words::MAX_WORD_LEN {
        return Err(Error::ResourceLimit { what: "portrait depth", requested: depth, cap });
    }
    let mut out = Portrait::identity(depth);
    fill(&gw.reduce().into(), BinaryWord::ROOT, depth, &mut out);
    Ok(out)
}

fn fill(word: &GenWord, v: BinaryWord, depth: usize, out: &mut Portrait) {
    if v.len() >= depth {
        return;
    }
    let s = word.sections();
    out.set(&v, s.root_swap);
    fill(&s.left.reduce().into(), v.child(0), depth, out);
    fill(&s.right.reduce().into(), v.child(1), depth, out);
}

/// Closed-form enumeration of the swap vertices of one generator, up to
/// depth `d` (vertices of depth `< d`), in lexicographic order: `∅` for
/// `a`, and for `b`, `c`, `d` the words `1…10` whose count of leading 1s
/// is 0 or 1, 0 or 2, 1 or 2 mod 3 respectively.
pub fn swap_vertices(g: Gen, depth: usize) -> Vec<BinaryWord> {
    let mut out = Vec::new();
    if g == Gen::A {
        if depth > 0 {
            out.push(BinaryWord::ROOT);
        }
        return out;
    }
    for ones in 0.. {
        if ones + 1 >= depth {
            break;
        }
        let mut v = BinaryWord::ROOT;
        for _ in 0..ones {
            v.push(1);
        }
        v.push(0);
        if g.is_swap_vertex(&v) {
            out.push(v);
        }
    }
    out
}
