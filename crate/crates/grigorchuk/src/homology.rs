//! The permutation action on shoes and on truncated first homology.
//!
//! The infinite-genus construction glues a genus-1 "shoe" onto each cuff
//! at the bottom of every finite pants tree, so shoes are indexed by the
//! nonempty binary words. The lifted generators permute the shoes exactly
//! as the tree generators permute words, and act by the identity on any
//! shoe they preserve, so the whole homology action is the permutation of
//! the 2-dimensional shoe summands.

use std::collections::BTreeMap;

use crate::group::GenWord;
use crate::words::{self, BinaryWord};
use crate::{Error, Result, DEFAULT_DEPTH_CAP};

/// Level-preserving bijection of all shoes `S_w`, `1 ≤ |w| ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShoePermutation {
    max_depth: usize,
    // images[k-1][i] = image index of the i-th word of level k
    images: Vec<Vec<u32>>,
}

impl ShoePermutation {
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    /// Image of one shoe index.
    pub fn image(&self, w: &BinaryWord) -> Result<BinaryWord> {
        if w.is_empty() || w.len() > self.max_depth {
            return Err(Error::IndexOutOfRange { index: w.len(), len: self.max_depth });
        }
        let i = self.images[w.len() - 1][w.level_index() as usize];
        Ok(BinaryWord::from_level_index(u64::from(i), w.len()))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().all(|lvl| lvl.iter().enumerate().all(|(i, &img)| i as u32 == img))
    }

    /// The non-fixed shoes as a sorted map, the serialized form.
    pub fn moved(&self) -> BTreeMap<BinaryWord, BinaryWord> {
        let mut out = BTreeMap::new();
        for (k, lvl) in self.images.iter().enumerate() {
            for (i, &img) in lvl.iter().enumerate() {
                if i as u32 != img {
                    out.insert(
                        BinaryWord::from_level_index(i as u64, k + 1),
                        BinaryWord::from_level_index(u64::from(img), k + 1),
                    );
                }
            }
        }
        out
    }

    /// Composition `self ∘ other` (`other` first).
    pub fn compose(&self, other: &ShoePermutation) -> Result<ShoePermutation> {
        if self.max_depth != other.max_depth {
            return Err(Error::DepthMismatch { left: self.max_depth, right: other.max_depth });
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(mine, theirs)| theirs.iter().map(|&j| mine[j as usize]).collect())
            .collect();
        Ok(ShoePermutation { max_depth: self.max_depth, images })
    }
}

/// How a generator word permutes the shoes of depth ≤ `N`: exactly as it
/// permutes the corresponding tree vertices.
pub fn shoe_perm(gw: &GenWord, max_depth: usize) -> Result<ShoePermutation> {
    if max_depth == 0 || max_depth > DEFAULT_DEPTH_CAP {
        return Err(Error::ResourceLimit {
            what: "shoe depth",
            requested: max_depth,
            cap: DEFAULT_DEPTH_CAP,
        });
    }
    let mut images = Vec::with_capacity(max_depth);
    for k in 1..=max_depth {
        let lvl = words::level_with_cap(k, DEFAULT_DEPTH_CAP)?;
        images.push(lvl.iter().map(|w| gw.apply(*w).level_index() as u32).collect());
    }
    Ok(ShoePermutation { max_depth, images })
}

/// The end-space action of the punctures variant. The ends of the union
/// of the truncated surfaces are indexed by the tree vertices, so this is
/// the same permutation data as [`shoe_perm`], re-exported under the name
/// that matches that construction.
pub fn end_action(gw: &GenWord, max_depth: usize) -> Result<ShoePermutation> {
    shoe_perm(gw, max_depth)
}

/// Rank of the truncated first homology: two classes per shoe,
/// `2·(2^(N+1) − 2)` in total.
pub fn h1_dimension(max_depth: usize) -> u64 {
    2 * ((1u64 << (max_depth + 1)) - 2)
}

/// A basis class of the truncated homology: one of the two classes
/// carried by a shoe.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct H1Basis {
    pub shoe: BinaryWord,
    pub coord: u8,
}

/// Sparse vector over the shoe basis.
pub type H1Vector = BTreeMap<H1Basis, i64>;

/// Action of a word on a sparse homology vector: the pair of basis
/// vectors of `S_w` moves, in order, to the pair of `S_{g(w)}`. Nothing
/// ever mixes the two coordinates of one shoe.
pub fn h1_apply(gw: &GenWord, max_depth: usize, v: &H1Vector) -> Result<H1Vector> {
    let mut out = H1Vector::new();
    for (basis, &coeff) in v {
        if basis.shoe.is_empty() || basis.shoe.len() > max_depth || basis.coord > 1 {
            return Err(Error::IndexOutOfRange { index: basis.shoe.len(), len: max_depth });
        }
        let image = H1Basis { shoe: gw.apply(basis.shoe), coord: basis.coord };
        *out.entry(image).or_insert(0) += coeff;
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Truncated-homology triviality criterion: an element acts trivially on
/// the truncated homology exactly when it fixes every shoe.
pub fn h1_kernel_check(gw: &GenWord, max_depth: usize) -> Result<bool> {
    Ok(shoe_perm(gw, max_depth)?.is_identity())
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

    #[test]
    fn a_swaps_the_two_subtrees() {
        let p = shoe_perm(&gw("a"), 2).unwrap();
        assert_eq!(p.image(&w("0")).unwrap(), w("1"));
        assert_eq!(p.image(&w("1")).unwrap(), w("0"));
        assert_eq!(p.image(&w("00")).unwrap(), w("10"));
        assert_eq!(p.image(&w("01")).unwrap(), w("11"));
        assert_eq!(p.image(&w("10")).unwrap(), w("00"));
        assert_eq!(p.image(&w("11")).unwrap(), w("01"));
    }

    #[test]
    fn identity_and_relators_fix_everything() {
        assert!(shoe_perm(&GenWord::identity(), 4).unwrap().is_identity());
        assert!(shoe_perm(&gw("adadadad"), 5).unwrap().is_identity());
    }

    #[test]
    fn perms_preserve_levels_and_are_bijections() {
        for s in ["a", "b", "abac", "dcab"] {
            let p = shoe_perm(&gw(s), 6).unwrap();
            for k in 1..=6 {
                let mut seen = std::collections::HashSet::new();
                for v in words::level(k).unwrap().iter() {
                    let img = p.image(v).unwrap();
                    assert_eq!(img.len(), v.len());
                    assert!(seen.insert(img));
                }
            }
        }
    }

    #[test]
    fn shoe_perm_is_a_homomorphism() {
        for (x, y) in [("ab", "cd"), ("a", "dacab"), ("bac", "ad")] {
            let px = shoe_perm(&gw(x), 6).unwrap();
            let py = shoe_perm(&gw(y), 6).unwrap();
            let pxy = shoe_perm(&gw(x).concat(&gw(y)), 6).unwrap();
            assert_eq!(pxy, px.compose(&py).unwrap());
        }
    }

    #[test]
    fn h1_dimension_formula() {
        assert_eq!(h1_dimension(1), 4);
        assert_eq!(h1_dimension(2), 12);
        assert_eq!(h1_dimension(3), 28);
    }

    #[test]
    fn h1_action_moves_blocks_without_mixing() {
        let e = |s: &str, coord: u8| H1Basis { shoe: w(s), coord };
        let mut v = H1Vector::new();
        v.insert(e("0", 1), 1);
        let image = h1_apply(&gw("a"), 1, &v).unwrap();
        assert_eq!(image, H1Vector::from([(e("1", 1), 1)]));

        // identity on everything: bcd is trivial in G by the Klein relations
        let mut v = H1Vector::new();
        v.insert(e("00", 0), 2);
        v.insert(e("101", 1), -3);
        assert_eq!(h1_apply(&GenWord::identity(), 3, &v).unwrap(), v);
        assert_eq!(h1_apply(&gw("bcd"), 3, &v).unwrap(), v);

        // coordinates never mix: each basis vector lands on one basis vector
        for s in ["b", "ad", "caba"] {
            for k in 1..=4 {
                for shoe in words::level(k).unwrap().iter() {
                    for coord in [0u8, 1] {
                        let v = H1Vector::from([(H1Basis { shoe: *shoe, coord }, 1)]);
                        let image = h1_apply(&gw(s), 4, &v).unwrap();
                        assert_eq!(image.len(), 1);
                        let (basis, coeff) = image.iter().next().unwrap();
                        assert_eq!(*coeff, 1);
                        assert_eq!(basis.coord, coord);
                    }
                }
            }
        }
    }

    #[test]
    fn h1_rejects_bad_indices() {
        let v = H1Vector::from([(H1Basis { shoe: BinaryWord::ROOT, coord: 0 }, 1)]);
        assert!(h1_apply(&gw("a"), 3, &v).is_err());
        let v = H1Vector::from([(H1Basis { shoe: w("0000"), coord: 0 }, 1)]);
        assert!(h1_apply(&gw("a"), 3, &v).is_err());
    }

    #[test]
    fn kernel_check_examples() {
        assert!(h1_kernel_check(&gw("aa"), 5).unwrap());
        assert!(h1_kernel_check(&gw("d"), 2).unwrap());
        assert!(!h1_kernel_check(&gw("d"), 3).unwrap());
        assert!(!h1_kernel_check(&gw("ab"), 8).unwrap());
    }

    #[test]
    fn end_action_is_the_shoe_permutation() {
        assert_eq!(end_action(&gw("a"), 2).unwrap(), shoe_perm(&gw("a"), 2).unwrap());
        assert!(end_action(&GenWord::identity(), 3).unwrap().is_identity());
        // b moves exactly the words strictly below its swap vertices
        let p = end_action(&gw("b"), 4).unwrap();
        let below = |v: &BinaryWord, pre: &BinaryWord| pre.is_prefix_of(v) && v.len() > pre.len();
        for k in 1..=4 {
            for v in words::level(k).unwrap().iter() {
                let expect_moved = below(v, &w("0")) || below(v, &w("10"));
                assert_eq!(p.image(v).unwrap() != *v, expect_moved, "v={v}");
            }
        }
    }
}
