//! Deterministic JSON and DOT serialization of the structured outputs.
//!
//! Key order is fixed by struct declaration order, map keys sort as
//! strings, vertices appear lexicographically; identical arguments always
//! produce identical bytes. The root vertex is written `^` in DOT labels,
//! where an empty label would be illegible.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::homology::ShoePermutation;
use crate::pants::LiftedElement;
use crate::portrait::Portrait;
use crate::schreier::SchreierGraph;
use crate::words::BinaryWord;

/// Serialized form of a portrait.
#[derive(Serialize)]
pub struct PortraitJson {
    pub depth: usize,
    pub swaps: Vec<String>,
}

impl From<&Portrait> for PortraitJson {
    fn from(p: &Portrait) -> Self {
        PortraitJson {
            depth: p.depth(),
            swaps: p.swap_vertices().iter().map(BinaryWord::to_string).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SchreierEdgeJson {
    pub from: String,
    pub gen: char,
    pub to: String,
}

/// Serialized form of a Schreier graph.
#[derive(Serialize)]
pub struct SchreierJson {
    pub level: usize,
    pub edges: Vec<SchreierEdgeJson>,
}

impl From<&SchreierGraph> for SchreierJson {
    fn from(g: &SchreierGraph) -> Self {
        SchreierJson {
            level: g.level(),
            edges: g
                .edges()
                .map(|(from, gen, to)| SchreierEdgeJson {
                    from: from.to_string(),
                    gen: gen.as_char(),
                    to: to.to_string(),
                })
                .collect(),
        }
    }
}

/// Serialized form of a lifted element; zero twists are omitted.
#[derive(Serialize)]
pub struct LiftJson {
    pub depth: usize,
    pub portrait: Vec<String>,
    pub twists: BTreeMap<String, i64>,
}

impl From<&LiftedElement> for LiftJson {
    fn from(h: &LiftedElement) -> Self {
        LiftJson {
            depth: h.depth(),
            portrait: h.swap_vertices().iter().map(BinaryWord::to_string).collect(),
            twists: twists_json(h.twists()),
        }
    }
}

/// Serialized form of a kernel twist vector.
#[derive(Serialize)]
pub struct KernelJson {
    pub twists: BTreeMap<String, i64>,
}

pub fn twists_json(twists: &BTreeMap<BinaryWord, i64>) -> BTreeMap<String, i64> {
    twists.iter().map(|(w, t)| (w.to_string(), *t)).collect()
}

/// Serialized form of a shoe permutation: only the moved shoes.
#[derive(Serialize)]
pub struct ShoePermJson {
    #[serde(rename = "N")]
    pub max_depth: usize,
    pub moved: BTreeMap<String, String>,
}

impl From<&ShoePermutation> for ShoePermJson {
    fn from(p: &ShoePermutation) -> Self {
        ShoePermJson {
            max_depth: p.max_depth(),
            moved: p.moved().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        }
    }
}

fn dot_label(w: &BinaryWord) -> String {
    if w.is_empty() {
        "^".to_string()
    } else {
        w.to_string()
    }
}

/// Renders a portrait as a binary tree, with the edges to both children
/// doubled at every swap vertex.
pub fn portrait_dot(p: &Portrait) -> String {
    let mut out = String::new();
    out.push_str("digraph portrait {\n  node [shape=circle];\n");
    let mut vertices: Vec<BinaryWord> = Vec::new();
    for k in 0..=p.depth() {
        for i in 0..1u64 << k {
            vertices.push(BinaryWord::from_level_index(i, k));
        }
    }
    vertices.sort();
    for v in &vertices {
        let _ = writeln!(out, "  \"{}\";", dot_label(v));
    }
    for v in &vertices {
        if v.len() >= p.depth() {
            continue;
        }
        let copies = if p.swaps_at(v) { 2 } else { 1 };
        for child in [v.child(0), v.child(1)] {
            for _ in 0..copies {
                let _ = writeln!(out, "  \"{}\" -> \"{}\";", dot_label(v), dot_label(&child));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Renders a Schreier graph as an undirected labeled graph; each
/// involution edge appears once, loops included.
pub fn schreier_dot(g: &SchreierGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph schreier_{} {{", g.level());
    for (from, gen, to) in g.edges() {
        if from <= to {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                dot_label(&from),
                dot_label(&to),
                gen.as_char()
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Compact JSON for any of the serializable outputs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GenWord;
    use crate::{pants, portrait, schreier};

    #[test]
    fn kernel_json_matches_pinned_shape() {
        let word: GenWord = "aa".parse().unwrap();
        let twists = pants::kernel_vector(&word, 2).unwrap();
        let json = to_json(&KernelJson { twists: twists_json(&twists) });
        assert_eq!(json, r#"{"twists":{"":-1,"0":1,"1":1}}"#);
    }

    #[test]
    fn portrait_json_shape() {
        let word: GenWord = "b".parse().unwrap();
        let p = portrait::portrait(&word, 4).unwrap();
        assert_eq!(to_json(&PortraitJson::from(&p)), r#"{"depth":4,"swaps":["0","10"]}"#);
    }

    #[test]
    fn schreier_json_shape() {
        let g = schreier::schreier(1).unwrap();
        let json = to_json(&SchreierJson::from(&g));
        assert!(json.starts_with(r#"{"level":1,"edges":[{"from":"0","gen":"a","to":"1"}"#));
    }

    #[test]
    fn dot_output_is_deterministic() {
        let word: GenWord = "a".parse().unwrap();
        let p = portrait::portrait(&word, 2).unwrap();
        let first = portrait_dot(&p);
        assert_eq!(first, portrait_dot(&p));
        // the root swaps, so both root edges are doubled
        assert_eq!(first.matches("\"^\" -> \"0\";").count(), 2);
        assert_eq!(first.matches("\"^\" -> \"1\";").count(), 2);
        let s = schreier::schreier(1).unwrap();
        assert!(schreier_dot(&s).contains("\"0\" -- \"1\" [label=\"a\"];"));
    }
}
