//! Finite-depth model of the lifted group acting on the pants-tree surface.
//!
//! An element is a portrait together with an integer Dehn-twist count per
//! annulus. Annuli are indexed by binary words: the coordinate at `w` is
//! the waist annulus of the pair of pants at `w`, and the coordinates one
//! level below the deepest pants are their cuff annuli.
//!
//! Twists are created only by the cocycle: when two successive factors
//! both exchange the cuffs of the same pair of pants, the composite
//! acquires a left-handed twist around that waist and right-handed twists
//! around both cuffs. Sign convention: left-handed = −1, right-handed = +1.
//!
//! A depth-`n` element is the restriction of the untruncated object to a
//! coordinate window: twist coordinates on words of depth ≤ `n+1` and
//! swap data through depth `n+1` (one level past the nominal portrait, so
//! that cocycle events at the window edge still register on their waist
//! coordinate; their cuff increments fall outside the window and are
//! dropped). Restriction commutes with multiplication and with deepening,
//! which is what makes truncation of a deeper lift agree exactly with the
//! shallower lift.

use std::collections::BTreeMap;
use std::ops::Mul;

use crate::group::{Gen, GenWord};
use crate::portrait::{self, Portrait};
use crate::words::BinaryWord;
use crate::{Error, Result};

/// The local mapping class of a single pair of pants: a cuff-exchange bit
/// and signed twist counts around (waist, left cuff, right cuff).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PantsClass {
    pub swap: bool,
    pub twists: [i64; 3],
}

impl PantsClass {
    pub const IDENTITY: PantsClass = PantsClass { swap: false, twists: [0, 0, 0] };

    /// The half-swap: exchanges the cuffs, twists nothing. Its square is
    /// the twist triple (−1, +1, +1).
    pub const SIGMA: PantsClass = PantsClass { swap: true, twists: [0, 0, 0] };

    pub fn twist_only(waist: i64, left: i64, right: i64) -> PantsClass {
        PantsClass { swap: false, twists: [waist, left, right] }
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(self, k: u32) -> PantsClass {
        let mut acc = PantsClass::IDENTITY;
        for _ in 0..k {
            acc = acc * self;
        }
        acc
    }
}

/// Cocycle product on pants classes:
/// `(v₁,s₁)·(v₂,s₂) = (v₁ + s₁▷v₂ + κ(s₁,s₂), s₁⊕s₂)`, where `s▷v`
/// exchanges the two cuff coordinates when `s` is set and
/// `κ(1,1) = (−1,+1,+1)`, zero otherwise.
pub fn pants_mul(p: PantsClass, q: PantsClass) -> PantsClass {
    let transported = if p.swap { [q.twists[0], q.twists[2], q.twists[1]] } else { q.twists };
    let kappa: [i64; 3] = if p.swap && q.swap { [-1, 1, 1] } else { [0, 0, 0] };
    PantsClass {
        swap: p.swap ^ q.swap,
        twists: [
            p.twists[0] + transported[0] + kappa[0],
            p.twists[1] + transported[1] + kappa[1],
            p.twists[2] + transported[2] + kappa[2],
        ],
    }
}

impl Mul for PantsClass {
    type Output = PantsClass;

    fn mul(self, rhs: PantsClass) -> PantsClass {
        pants_mul(self, rhs)
    }
}

/// A depth-`n` element of the lifted group: swap bits on every vertex of
/// depth ≤ `n+1` and twist counts on every annulus of depth ≤ `n+1`,
/// zero entries stored implicitly. The quotient portrait exposed to
/// callers reads the swap bits of depth ≤ `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiftedElement {
    depth: usize,
    swaps: Portrait,
    twists: BTreeMap<BinaryWord, i64>,
}

impl LiftedElement {
    pub fn identity(depth: usize) -> LiftedElement {
        LiftedElement { depth, swaps: Portrait::identity(depth + 2), twists: BTreeMap::new() }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Swap bit at a vertex of depth ≤ `depth+1`.
    pub fn swaps_at(&self, v: &BinaryWord) -> bool {
        self.swaps.swaps_at(v)
    }

    /// Swap vertices of the quotient portrait (depth ≤ `depth`),
    /// lexicographically.
    pub fn swap_vertices(&self) -> Vec<BinaryWord> {
        self.swaps.swap_vertices().into_iter().filter(|v| v.len() <= self.depth).collect()
    }

    pub fn has_trivial_portrait(&self) -> bool {
        self.swaps.is_trivial()
    }

    /// Twist count at an annulus (zero when absent).
    pub fn twist_at(&self, w: &BinaryWord) -> i64 {
        self.twists.get(w).copied().unwrap_or(0)
    }

    /// The nonzero twist coordinates, keyed by annulus.
    pub fn twists(&self) -> &BTreeMap<BinaryWord, i64> {
        &self.twists
    }

    /// Image of a word of length ≤ `depth+1` under the underlying tree
    /// automorphism.
    pub fn apply(&self, w: BinaryWord) -> BinaryWord {
        self.swaps.apply(w)
    }

    /// Restriction to a shallower truncation: keep swap bits and twist
    /// coordinates of depth ≤ `m+1`, discard everything deeper.
    pub fn truncate(&self, m: usize) -> Result<LiftedElement> {
        if m > self.depth {
            return Err(Error::DepthMismatch { left: self.depth, right: m });
        }
        let mut out = LiftedElement::identity(m);
        for k in 0..=m + 1 {
            for i in 0..1u64 << k {
                let v = BinaryWord::from_level_index(i, k);
                out.swaps.set(&v, self.swaps.swaps_at(&v));
            }
        }
        for (w, &t) in &self.twists {
            if w.len() <= m + 1 && t != 0 {
                out.twists.insert(*w, t);
            }
        }
        Ok(out)
    }
}

/// Product `h1 · h2` (`h2` acts first). Portraits compose; the twist at
/// annulus `w` receives `h2`'s twist at `w` plus `h1`'s twist at `h2(w)`;
/// and at every vertex `v` where `h2` exchanges the cuffs and `h1`
/// exchanges the cuffs of the image pants `h2(v)`, the cocycle adds −1 at
/// `v` and +1 at each child of `v`. Cocycle events fire at every vertex
/// whose waist coordinate lies in the window (depth ≤ `n+1`); child
/// increments past the window edge are dropped, exactly as restriction of
/// the untruncated product would drop them.
pub fn lifted_mul(h1: &LiftedElement, h2: &LiftedElement) -> Result<LiftedElement> {
    if h1.depth != h2.depth {
        return Err(Error::DepthMismatch { left: h1.depth, right: h2.depth });
    }
    let n = h1.depth;
    let mut out = LiftedElement::identity(n);
    out.swaps = h1.swaps.compose(&h2.swaps);

    let mut twists: BTreeMap<BinaryWord, i64> = h2.twists.clone();
    for (u, &t) in &h1.twists {
        // h1's twist at u lands at the annulus h2 carries onto u.
        let w = h2.swaps.apply_inverse(*u);
        *twists.entry(w).or_insert(0) += t;
    }
    for k in 0..=n + 1 {
        for i in 0..1u64 << k {
            let v = BinaryWord::from_level_index(i, k);
            if h2.swaps.swaps_at(&v) && h1.swaps.swaps_at(&h2.swaps.apply(v)) {
                *twists.entry(v).or_insert(0) -= 1;
                if v.len() < n + 1 {
                    *twists.entry(v.child(0)).or_insert(0) += 1;
                    *twists.entry(v.child(1)).or_insert(0) += 1;
                }
            }
        }
    }
    twists.retain(|_, t| *t != 0);
    out.twists = twists;
    Ok(out)
}

/// Lift of a single generator: its swap bits, no twists. Twisting arises
/// only under composition, through the cocycle.
pub fn lift_gen(g: Gen, depth: usize) -> Result<LiftedElement> {
    let swaps = portrait::portrait_with_cap(&GenWord::single(g), depth + 2, crate::DEFAULT_DEPTH_CAP)?;
    Ok(LiftedElement { depth, swaps, twists: BTreeMap::new() })
}

/// Lift of a generator word: fold of [`lifted_mul`] over the letter
/// lifts, rightmost acting first (the same convention as the word action
/// on the tree).
pub fn lift_word(gw: &GenWord, depth: usize) -> Result<LiftedElement> {
    let mut acc = LiftedElement::identity(depth);
    for &g in gw.letters().iter().rev() {
        acc = lifted_mul(&lift_gen(g, depth)?, &acc)?;
    }
    Ok(acc)
}

/// Twist vector of a relator: the lift of a word that is trivial in G.
/// Such lifts have trivial portraits, so the twist map is the whole
/// element; nontrivial words are rejected.
pub fn kernel_vector(gw: &GenWord, depth: usize) -> Result<BTreeMap<BinaryWord, i64>> {
    if !gw.is_trivial()? {
        return Err(Error::NotARelator { word: gw.to_string() });
    }
    let lift = lift_word(gw, depth)?;
    assert!(lift.has_trivial_portrait(), "relator lifted to a nontrivial portrait");
    Ok(lift.twists)
}

/// Outcome of one commutation check between two lifted relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPair {
    pub left: String,
    pub right: String,
    pub commute: bool,
}

/// Report of [`check_kernel_abelian`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub depth: usize,
    pub pairs: Vec<KernelPair>,
    pub all_commute: bool,
}

/// Lifts each relator and checks pairwise commutation under the cocycle
/// product. Twist vectors add, so kernel elements commute; this verifies
/// it instead of assuming it.
pub fn check_kernel_abelian(relators: &[GenWord], depth: usize) -> Result<KernelReport> {
    let mut lifts = Vec::with_capacity(relators.len());
    for r in relators {
        if !r.is_trivial()? {
            return Err(Error::NotARelator { word: r.to_string() });
        }
        let lift = lift_word(r, depth)?;
        assert!(lift.has_trivial_portrait(), "relator lifted to a nontrivial portrait");
        lifts.push(lift);
    }
    let mut pairs = Vec::new();
    let mut all = true;
    for i in 0..lifts.len() {
        for j in i + 1..lifts.len() {
            let commute = lifted_mul(&lifts[i], &lifts[j])? == lifted_mul(&lifts[j], &lifts[i])?;
            all &= commute;
            pairs.push(KernelPair {
                left: relators[i].to_string(),
                right: relators[j].to_string(),
                commute,
            });
        }
    }
    Ok(KernelReport { depth, pairs, all_commute: all })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gw(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn twist_map(pairs: &[(&str, i64)]) -> BTreeMap<BinaryWord, i64> {
        pairs.iter().map(|(k, v)| (w(k), *v)).collect()
    }

    #[test]
    fn sigma_squared_is_the_twist_triple() {
        assert_eq!(PantsClass::SIGMA * PantsClass::SIGMA, PantsClass::twist_only(-1, 1, 1));
        assert_eq!(PantsClass::SIGMA.pow(4), PantsClass::twist_only(-2, 2, 2));
    }

    #[test]
    fn pants_identity_and_twist_addition() {
        let p = PantsClass { swap: true, twists: [2, 0, -1] };
        assert_eq!(PantsClass::IDENTITY * p, p);
        assert_eq!(p * PantsClass::IDENTITY, p);
        assert_eq!(
            PantsClass::twist_only(1, 0, 0) * PantsClass::twist_only(0, 1, 0),
            PantsClass::twist_only(1, 1, 0)
        );
    }

    #[test]
    fn pants_mul_is_associative_on_small_range() {
        // Spot range here; the acceptance suite sweeps the full cube.
        let mut elems = Vec::new();
        for swap in [false, true] {
            for a in -1..=1 {
                for b in -1..=1 {
                    for c in -1..=1 {
                        elems.push(PantsClass { swap, twists: [a, b, c] });
                    }
                }
            }
        }
        for &p in &elems {
            for &q in &elems {
                for &r in &elems {
                    assert_eq!((p * q) * r, p * (q * r));
                }
            }
        }
    }

    #[test]
    fn generator_lifts_have_zero_twists() {
        let lift = lift_gen(Gen::A, 2).unwrap();
        assert_eq!(lift.swap_vertices(), vec![BinaryWord::ROOT]);
        assert!(lift.twists().is_empty());

        let lift = lift_gen(Gen::D, 3).unwrap();
        let names: Vec<String> = lift.swap_vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["10", "110"]);
        assert!(lift.twists().is_empty());

        let lift = lift_gen(Gen::B, 0).unwrap();
        assert!(lift.twists().is_empty());
        assert_eq!(lift.depth(), 0);
        // the quotient portrait at depth 0 has no swap vertex to show
        assert!(lift.swap_vertices().is_empty());
    }

    #[test]
    fn a_squared_acquires_the_waist_twist() {
        let a2 = lifted_mul(&lift_gen(Gen::A, 2).unwrap(), &lift_gen(Gen::A, 2).unwrap()).unwrap();
        assert!(a2.has_trivial_portrait());
        assert_eq!(*a2.twists(), twist_map(&[("", -1), ("0", 1), ("1", 1)]));
        // and the same triple at every tested depth
        for depth in 1..=8 {
            let lift = lift_word(&gw("aa"), depth).unwrap();
            assert!(lift.has_trivial_portrait());
            assert_eq!(*lift.twists(), twist_map(&[("", -1), ("0", 1), ("1", 1)]), "depth={depth}");
        }
    }

    #[test]
    fn dd_twists_at_both_swap_vertices() {
        let lift = lift_word(&gw("dd"), 3).unwrap();
        assert!(lift.has_trivial_portrait());
        assert_eq!(
            *lift.twists(),
            twist_map(&[("10", -1), ("100", 1), ("101", 1), ("110", -1), ("1100", 1), ("1101", 1)])
        );
    }

    #[test]
    fn bb_twists_include_the_window_edge() {
        // Cocycle events at all four cuff-exchanging vertices of b that fit
        // in the window; the deepest one registers on its waist coordinate
        // only, its cuff increments falling outside.
        let lift = lift_word(&gw("bb"), 4).unwrap();
        assert!(lift.has_trivial_portrait());
        assert_eq!(
            *lift.twists(),
            twist_map(&[
                ("0", -1),
                ("00", 1),
                ("01", 1),
                ("10", -1),
                ("100", 1),
                ("101", 1),
                ("1110", -1),
                ("11100", 1),
                ("11101", 1),
                ("11110", -1),
            ])
        );
    }

    #[test]
    fn truncation_commutes_with_lifting() {
        use crate::group::reduced_words_of_length;
        for len in 0..=7 {
            for rw in reduced_words_of_length(len) {
                let word: GenWord = rw.into();
                for lower in [3usize, 4] {
                    let deep = lift_word(&word, lower + 1).unwrap();
                    let shallow = lift_word(&word, lower).unwrap();
                    assert_eq!(deep.truncate(lower).unwrap(), shallow, "word={word} lower={lower}");
                }
            }
        }
    }

    #[test]
    fn ad_lift_twists_nothing() {
        let lift = lift_word(&gw("ad"), 4).unwrap();
        assert!(lift.twists().is_empty());
        let expected = portrait::portrait(&gw("ad"), 5).unwrap();
        for n in 0..=5 {
            for v in crate::words::level(n).unwrap().iter() {
                assert_eq!(lift.apply(*v), expected.apply(*v));
            }
        }
    }

    #[test]
    fn relator_lift_is_twists_only() {
        // (ad)^4 is trivial in G; its lift is a pure twist vector. The
        // exact coordinates are frozen as a regression value.
        let lift = lift_word(&gw("adadadad"), 4).unwrap();
        assert!(lift.has_trivial_portrait());
        assert_eq!(
            *lift.twists(),
            twist_map(&[
                ("", -2),
                ("0", 2),
                ("00", -1),
                ("000", 1),
                ("001", 1),
                ("010", -1),
                ("0100", 1),
                ("0101", 1),
                ("01110", -1),
                ("1", 2),
                ("10", -1),
                ("100", 1),
                ("101", 1),
                ("110", -1),
                ("1100", 1),
                ("1101", 1),
                ("11110", -1),
            ])
        );
    }

    #[test]
    fn kernel_vector_examples() {
        assert_eq!(kernel_vector(&gw("aa"), 2).unwrap(), twist_map(&[("", -1), ("0", 1), ("1", 1)]));
        assert_eq!(
            kernel_vector(&gw("ab"), 3),
            Err(Error::NotARelator { word: "ab".into() })
        );
    }

    #[test]
    fn forgetting_twists_is_a_homomorphism() {
        let words = ["ab", "da", "cabad", "bacada"];
        for x in words {
            for y in words {
                let hx = lift_word(&gw(x), 5).unwrap();
                let hy = lift_word(&gw(y), 5).unwrap();
                let prod = lifted_mul(&hx, &hy).unwrap();
                for n in 0..=6 {
                    for v in crate::words::level(n).unwrap().iter() {
                        assert_eq!(prod.apply(*v), hx.apply(hy.apply(*v)));
                    }
                }
            }
        }
    }

    #[test]
    fn depth_mismatch_is_rejected() {
        let h1 = lift_gen(Gen::A, 3).unwrap();
        let h2 = lift_gen(Gen::B, 4).unwrap();
        assert_eq!(lifted_mul(&h1, &h2), Err(Error::DepthMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn kernel_pairs_commute() {
        let relators = vec![gw("aa"), gw("bb"), gw("adadadad")];
        let report = check_kernel_abelian(&relators, 3).unwrap();
        assert!(report.all_commute);
        assert_eq!(report.pairs.len(), 3);
        assert_eq!(
            check_kernel_abelian(&[gw("ab")], 3),
            Err(Error::NotARelator { word: "ab".into() })
        );
    }

    #[test]
    fn associativity_of_lifted_mul_on_words() {
        // (x·y)·z = x·(y·z) for lifts, exercising transport and cocycle.
        let words = ["a", "b", "ab", "dac", "adab"];
        for x in words {
            for y in words {
                for z in words {
                    let hx = lift_word(&gw(x), 4).unwrap();
                    let hy = lift_word(&gw(y), 4).unwrap();
                    let hz = lift_word(&gw(z), 4).unwrap();
                    let l = lifted_mul(&lifted_mul(&hx, &hy).unwrap(), &hz).unwrap();
                    let r = lifted_mul(&hx, &lifted_mul(&hy, &hz).unwrap()).unwrap();
                    assert_eq!(l, r, "({x}·{y})·{z}");
                }
            }
        }
    }
}
