//! Grigorchuk's group `G`: generator actions, wreath-recursion sections,
//! word reduction, the word problem, and element orders.
//!
//! The four generators act on binary words by the Mealy transitions
//!
//! ```text
//! a(0w) = 1w      b(0w) = 0·a(w)     c(0w) = 0·a(w)     d(0w) = 0·w
//! a(1w) = 0w      b(1w) = 1·c(w)     c(1w) = 1·d(w)     d(1w) = 1·b(w)
//! ```
//!
//! The d-row is sometimes mistyped as `d(1w) = 0·b(w)`; that map is not
//! injective (it collides with `d(0w) = 0w`), so the `1·b(w)` form is the
//! one implemented here. `grig verify` reports this correction.
//!
//! Every generator is an involution and `{1,b,c,d}` is a Klein four-group;
//! both facts are consequences the test suite re-verifies by acting on
//! words rather than axioms the code assumes blindly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::words::BinaryWord;
use crate::{words, Error, Result, DEFAULT_RECURSION_BUDGET};

/// One of the four generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn from_char(ch: char) -> Result<Gen> {
        match ch {
            'a' => Ok(Gen::A),
            'b' => Ok(Gen::B),
            'c' => Ok(Gen::C),
            'd' => Ok(Gen::D),
            _ => Err(Error::InvalidCharacter { found: ch, expected: "abcd" }),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
        }
    }

    /// Product of two distinct elements of `{b,c,d}` in the Klein
    /// four-group `{1,b,c,d}`: always the third one.
    fn klein_product(x: Gen, y: Gen) -> Gen {
        debug_assert!(x != y && x != Gen::A && y != Gen::A);
        match (x, y) {
            (Gen::B, Gen::C) | (Gen::C, Gen::B) => Gen::D,
            (Gen::B, Gen::D) | (Gen::D, Gen::B) => Gen::C,
            _ => Gen::B,
        }
    }

    /// Mealy transition: on input bit `e`, emit the output bit and the
    /// generator continuing in that subtree (`None` = identity).
    #[inline]
    fn step(self, e: u8) -> (u8, Option<Gen>) {
        match (self, e) {
            (Gen::A, e) => (e ^ 1, None),
            (Gen::B, 0) => (0, Some(Gen::A)),
            (Gen::B, _) => (1, Some(Gen::C)),
            (Gen::C, 0) => (0, Some(Gen::A)),
            (Gen::C, _) => (1, Some(Gen::D)),
            (Gen::D, 0) => (0, None),
            (Gen::D, _) => (1, Some(Gen::B)),
        }
    }

    /// Wreath recursion of this generator: (left section, right section,
    /// root swap). `a = (1,1)·swap`, `b = (a,c)`, `c = (a,d)`, `d = (1,b)`.
    pub fn sections(self) -> (Option<Gen>, Option<Gen>, bool) {
        match self {
            Gen::A => (None, None, true),
            Gen::B => (Some(Gen::A), Some(Gen::C), false),
            Gen::C => (Some(Gen::A), Some(Gen::D), false),
            Gen::D => (None, Some(Gen::B), false),
        }
    }

    /// Image of `w` under this generator, by the recursive definition.
    /// Fixes the empty word and preserves length.
    pub fn apply(self, w: BinaryWord) -> BinaryWord {
        let mut out = BinaryWord::ROOT;
        let mut state = Some(self);
        for n in 1..=w.len() {
            let e = w.bit_unchecked(n);
            match state {
                None => out.push(e),
                Some(g) => {
                    let (bit, next) = g.step(e);
                    out.push(bit);
                    state = next;
                }
            }
        }
        out
    }

    /// Image of `w` under this generator, computed without recursion:
    /// `a` flips the first bit; `b`, `c`, `d` flip the bit after the first
    /// `0`, just if the number of initial `1`s is respectively 0 or 1,
    /// 0 or 2, 1 or 2 mod 3 (fixing `w` when there is no such bit).
    pub fn apply_closed(self, w: BinaryWord) -> BinaryWord {
        if w.is_empty() {
            return w;
        }
        if self == Gen::A {
            return w.flip_bit(1).expect("nonempty");
        }
        let ones = w.leading_ones();
        let active = match self {
            Gen::A => unreachable!(),
            Gen::B => ones % 3 == 0 || ones % 3 == 1,
            Gen::C => ones % 3 == 0 || ones % 3 == 2,
            Gen::D => ones % 3 == 1 || ones % 3 == 2,
        };
        // The first 0 sits at position ones+1; the bit after it must exist.
        if !active || ones + 2 > w.len() {
            return w;
        }
        w.flip_bit(ones + 2).expect("in range")
    }

    /// True when `v` is a swap vertex of this generator: a vertex it fixes
    /// whose two children it exchanges. These are `∅` for `a` and the
    /// words `1…10` for `b`, `c`, `d`, filtered by the count of 1s mod 3.
    pub fn is_swap_vertex(self, v: &BinaryWord) -> bool {
        if self == Gen::A {
            return v.is_empty();
        }
        let ones = v.leading_ones();
        if ones + 1 != v.len() {
            return false; // must be all 1s followed by a single 0
        }
        match self {
            Gen::A => unreachable!(),
            Gen::B => ones % 3 == 0 || ones % 3 == 1,
            Gen::C => ones % 3 == 0 || ones % 3 == 2,
            Gen::D => ones % 3 == 1 || ones % 3 == 2,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word over the generators; possibly unreduced, the empty word denotes
/// the identity. The rightmost letter acts first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GenWord {
    letters: Vec<Gen>,
}

impl GenWord {
    pub fn identity() -> GenWord {
        GenWord { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Gen>) -> GenWord {
        GenWord { letters }
    }

    pub fn single(g: Gen) -> GenWord {
        GenWord { letters: vec![g] }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation: `self · other` (so `other` acts first).
    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord { letters }
    }

    /// The inverse word. Every generator is an involution, so the inverse
    /// of a word is its reversal.
    pub fn inverse(&self) -> GenWord {
        GenWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// `self^k` by repetition.
    pub fn repeat(&self, k: usize) -> GenWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        GenWord { letters }
    }

    /// Composite action on a word; the rightmost letter acts first.
    pub fn apply(&self, w: BinaryWord) -> BinaryWord {
        let mut w = w;
        for g in self.letters.iter().rev() {
            w = g.apply(w);
        }
        w
    }

    /// As [`apply`](Self::apply), but each letter acts through its
    /// closed-form description.
    pub fn apply_closed(&self, w: BinaryWord) -> BinaryWord {
        let mut w = w;
        for g in self.letters.iter().rev() {
            w = g.apply_closed(w);
        }
        w
    }

    /// Normal form: repeatedly cancel squares (`g² = 1`) and merge
    /// adjacent `{b,c,d}` pairs through the Klein four-group, greedily
    /// left to right until no rule applies. The result alternates between
    /// `a` and `{b,c,d}` and never got longer at any step.
    pub fn reduce(&self) -> ReducedWord {
        let mut stack: Vec<Gen> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            let mut cur = Some(g);
            while let Some(x) = cur {
                match stack.last().copied() {
                    Some(top) if top == x => {
                        stack.pop();
                        cur = None;
                    }
                    Some(top) if top != Gen::A && x != Gen::A => {
                        stack.pop();
                        cur = Some(Gen::klein_product(top, x));
                    }
                    _ => {
                        stack.push(x);
                        cur = None;
                    }
                }
            }
        }
        ReducedWord { letters: stack }
    }

    /// Wreath-recursion sections of the whole word: `self` acts on `0w` as
    /// `0·left(w)` and on `1w` as `1·right(w)` when the root swap is 0,
    /// with the two subtrees exchanged first when it is 1. Sections are
    /// returned unreduced, one contributed letter per letter of `self`.
    pub fn sections(&self) -> Sections {
        // Fold right to left; the accumulated suffix acts first. If the
        // suffix has root swap s, a later letter's ε-section lands on the
        // (ε⊕s)-section of that letter.
        let mut left_rev: Vec<Gen> = Vec::new();
        let mut right_rev: Vec<Gen> = Vec::new();
        let mut swap = false;
        for &g in self.letters.iter().rev() {
            let (l, r, s) = g.sections();
            let (to_left, to_right) = if swap { (r, l) } else { (l, r) };
            if let Some(x) = to_left {
                left_rev.push(x);
            }
            if let Some(x) = to_right {
                right_rev.push(x);
            }
            swap ^= s;
        }
        left_rev.reverse();
        right_rev.reverse();
        Sections {
            left: GenWord { letters: left_rev },
            right: GenWord { letters: right_rev },
            root_swap: swap,
        }
    }

    /// Whether this word acts as the identity on every level of the tree,
    /// decided by the contraction algorithm: reduce, then recurse on both
    /// sections, which are strictly shorter for reduced length ≥ 3.
    pub fn is_trivial(&self) -> Result<bool> {
        self.is_trivial_with_budget(DEFAULT_RECURSION_BUDGET)
    }

    /// As [`is_trivial`](Self::is_trivial) with an explicit recursion
    /// budget. Exhausting the budget signals an implementation bug, since
    /// the asserted section shrinkage guarantees termination.
    pub fn is_trivial_with_budget(&self, budget: u64) -> Result<bool> {
        let mut remaining = budget;
        let mut memo: HashMap<Box<[u8]>, bool> = HashMap::new();
        trivial_rec(self.reduce(), budget, &mut remaining, &mut memo)
    }

    /// Whether two words represent the same element of G. Valid because
    /// the inverse of a word is its reversal.
    pub fn equal(&self, other: &GenWord) -> Result<bool> {
        self.concat(&other.inverse()).is_trivial()
    }

    /// The order of this element: the least `k` with `self^k` trivial,
    /// found by repeated squaring. In a torsion 2-group every order is a
    /// power of two, so squaring visits exactly the candidate orders; the
    /// element reached at each stage is verified nontrivial before the
    /// next squaring, so the returned power is least.
    pub fn order(&self, cap_exp: u32) -> Result<u64> {
        if self.is_trivial()? {
            return Ok(1);
        }
        let mut power: GenWord = self.reduce().into();
        for k in 1..=cap_exp {
            power = power.concat(&power).reduce().into();
            if power.is_trivial()? {
                return Ok(1u64 << k);
            }
        }
        Err(Error::CapExceeded { cap_exp })
    }

    /// Least level `n ≤ max_level` on which this word moves some vertex,
    /// or `None` if it fixes every level up to `max_level` pointwise.
    pub fn minimal_nontrivial_level(&self, max_level: usize) -> Result<Option<usize>> {
        for n in 0..=max_level {
            for w in words::level_with_cap(n, max_level.max(crate::DEFAULT_DEPTH_CAP))?.iter() {
                if self.apply(*w) != *w {
                    return Ok(Some(n));
                }
            }
        }
        Ok(None)
    }
}

fn trivial_rec(
    rw: ReducedWord,
    budget: u64,
    remaining: &mut u64,
    memo: &mut HashMap<Box<[u8]>, bool>,
) -> Result<bool> {
    if *remaining == 0 {
        return Err(Error::RecursionBudgetExceeded { budget });
    }
    *remaining -= 1;

    let n = rw.len();
    if n == 0 {
        return Ok(true);
    }
    if n == 1 {
        return Ok(false);
    }
    let key: Box<[u8]> = rw.letters.iter().map(|g| *g as u8).collect();
    if let Some(&hit) = memo.get(&key) {
        return Ok(hit);
    }

    let word: GenWord = rw.into();
    let sections = word.sections();
    let answer = if sections.root_swap {
        false
    } else {
        let left = sections.left.reduce();
        let right = sections.right.reduce();
        // Contraction: reduced sections of a reduced word of length n ≥ 2
        // have length ≤ ⌈(n+1)/2⌉, hence < n for n ≥ 3. Fail loudly if
        // that ever breaks; termination depends on it.
        let bound = (n + 2) / 2;
        assert!(
            left.len() <= bound && right.len() <= bound,
            "contraction violated: |w|={n} but sections have lengths {} and {}",
            left.len(),
            right.len(),
        );
        trivial_rec(left, budget, remaining, memo)? && trivial_rec(right, budget, remaining, memo)?
    };
    memo.insert(key, answer);
    Ok(answer)
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.letters {
            write!(f, "{}", g.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for GenWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<GenWord> {
        let letters = text.chars().map(Gen::from_char).collect::<Result<Vec<_>>>()?;
        Ok(GenWord { letters })
    }
}

impl From<Gen> for GenWord {
    fn from(g: Gen) -> GenWord {
        GenWord::single(g)
    }
}

/// A word in normal form: no two consecutive equal letters and no two
/// consecutive letters from `{b,c,d}`, so letters strictly alternate
/// between `a` and `{b,c,d}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedWord {
    letters: Vec<Gen>,
}

impl ReducedWord {
    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl From<ReducedWord> for GenWord {
    fn from(rw: ReducedWord) -> GenWord {
        GenWord { letters: rw.letters }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.letters {
            write!(f, "{}", g.as_char())?;
        }
        Ok(())
    }
}

/// Wreath-recursion decomposition of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sections {
    pub left: GenWord,
    pub right: GenWord,
    pub root_swap: bool,
}

/// All reduced words of exactly length `n`, in no particular order.
/// Handy for exhaustive sweeps; counts grow like `2·3^(n/2)`.
pub fn reduced_words_of_length(n: usize) -> Vec<ReducedWord> {
    if n == 0 {
        return vec![ReducedWord { letters: Vec::new() }];
    }
    let mut out = Vec::new();
    // Alternating words are determined by whether position 0 holds `a`
    // and by the choice in {b,c,d} at the other parity.
    for starts_with_a in [true, false] {
        let free_slots = if starts_with_a { n / 2 } else { n.div_ceil(2) };
        for code in 0..3usize.pow(free_slots as u32) {
            let mut code = code;
            let mut letters = Vec::with_capacity(n);
            for i in 0..n {
                if (i % 2 == 0) == starts_with_a {
                    letters.push(Gen::A);
                } else {
                    letters.push([Gen::B, Gen::C, Gen::D][code % 3]);
                    code /= 3;
                }
            }
            out.push(ReducedWord { letters });
        }
    }
    out
}
