//! Schreier graphs of the level action: one vertex per word of length `n`,
//! one labeled edge per vertex per generator.

use crate::group::Gen;
use crate::words::{self, BinaryWord};
use crate::{Error, Result, DEFAULT_DEPTH_CAP};

/// The labeled action graph of the four generators on one level.
/// Out-degree is 4 at every vertex and every label class is an involutive
/// permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierGraph {
    level: usize,
    // images[g][i] = image of the i-th word (lexicographic) under generator g
    images: [Vec<u32>; 4],
}

impl SchreierGraph {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.level
    }

    pub fn vertex(&self, i: usize) -> BinaryWord {
        BinaryWord::from_level_index(i as u64, self.level)
    }

    /// Image index of vertex `i` under generator `g`.
    pub fn image(&self, g: Gen, i: usize) -> usize {
        self.images[g as usize][i] as usize
    }

    /// Edges in canonical order: vertices lexicographically, generators
    /// `a`, `b`, `c`, `d` within each vertex.
    pub fn edges(&self) -> impl Iterator<Item = (BinaryWord, Gen, BinaryWord)> + '_ {
        (0..self.vertex_count()).flat_map(move |i| {
            Gen::ALL.into_iter().map(move |g| (self.vertex(i), g, self.vertex(self.image(g, i))))
        })
    }

    /// Whether the graph is connected (evidence of level transitivity).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for g in Gen::ALL {
                let j = self.image(g, i);
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    }
}

/// Builds the Schreier graph of level `n` under the default depth cap.
pub fn schreier(n: usize) -> Result<SchreierGraph> {
    schreier_with_cap(n, DEFAULT_DEPTH_CAP)
}

/// As [`schreier`] with an explicit cap.
pub fn schreier_with_cap(n: usize, cap: usize) -> Result<SchreierGraph> {
    if n > cap || n > words::MAX_WORD_LEN {
        return Err(Error::ResourceLimit { what: "schreier level", requested: n, cap });
    }
    let level = words::level_with_cap(n, cap)?;
    let images = Gen::ALL.map(|g| {
        level.iter().map(|w| g.apply(*w).level_index() as u32).collect::<Vec<u32>>()
    });
    Ok(SchreierGraph { level: n, images })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_zero_is_four_loops() {
        let g = schreier(0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        for (from, _, to) in g.edges() {
            assert_eq!(from, to);
        }
        assert!(g.is_connected());
    }

    #[test]
    fn level_one_edges() {
        let g = schreier(1).unwrap();
        // a exchanges "0" and "1"; b, c, d fix both
        assert_eq!(g.image(Gen::A, 0), 1);
        assert_eq!(g.image(Gen::A, 1), 0);
        for gen in [Gen::B, Gen::C, Gen::D] {
            assert_eq!(g.image(gen, 0), 0);
            assert_eq!(g.image(gen, 1), 1);
        }
    }

    #[test]
    fn labels_are_involutive_permutations() {
        for n in 0..=8 {
            let g = schreier(n).unwrap();
            for gen in Gen::ALL {
                for i in 0..g.vertex_count() {
                    assert_eq!(g.image(gen, g.image(gen, i)), i);
                }
            }
        }
    }

    #[test]
    fn level_ten_is_connected() {
        let g = schreier(10).unwrap();
        assert_eq!(g.vertex_count(), 1024);
        assert!(g.is_connected());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(schreier_with_cap(9, 8), Err(Error::ResourceLimit { .. })));
    }
}
