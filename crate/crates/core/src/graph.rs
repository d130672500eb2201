//! Mutation graphs: vertices joined by arrows `s_i` (left mutation at the
//! `i`-th summand), path-word evaluation and DOT export.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::fingerprint::IsoFingerprint;
use crate::error::{Error, Result};

/// Sign of a letter `s_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Left,
    Right,
}

/// A word `s_{i_m}^{ε_m} … s_{i_1}^{ε_1}`, stored in written order and
/// applied right to left. Indices are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MutationWord {
    pub letters: Vec<(usize, Direction)>,
}

impl MutationWord {
    pub fn empty() -> Self {
        MutationWord::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in application order (rightmost first).
    pub fn application_order(&self) -> impl Iterator<Item = &(usize, Direction)> {
        self.letters.iter().rev()
    }

    /// `letter · self`: the new letter is applied after the existing ones.
    pub fn then(&self, index: usize, dir: Direction) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push((index, dir));
        letters.extend_from_slice(&self.letters);
        MutationWord { letters }
    }

    /// Word composition `self · other` (apply `other` first).
    pub fn compose(&self, other: &MutationWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MutationWord { letters }
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|(i, _)| *i).max().unwrap_or(0)
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .letters
            .iter()
            .map(|(i, d)| match d {
                Direction::Left => format!("s{i}"),
                Direction::Right => format!("s{i}^-1"),
            })
            .join(" ");
        f.write_str(&s)
    }
}

impl FromStr for MutationWord {
    type Err = Error;

    /// Accepts `s1 s2^-1`, `s1s2^-1` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadWord(s.to_string());
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] != 's' {
                return Err(bad());
            }
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(bad());
            }
            let idx: usize = chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?;
            if idx == 0 {
                return Err(bad());
            }
            let dir = if chars[i..].starts_with(&['^', '-', '1']) {
                i += 3;
                Direction::Right
            } else {
                Direction::Left
            };
            letters.push((idx, dir));
        }
        Ok(MutationWord { letters })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVertex {
    pub label: String,
    /// Short class name shown in pictures (e.g. the algebra a vertex carries).
    pub tag: Option<String>,
    pub fingerprint: Option<IsoFingerprint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// 1-based summand index.
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationGraph {
    pub arity: usize,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<Edge>,
}

impl MutationGraph {
    pub fn new(arity: usize) -> Self {
        MutationGraph { arity, vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.vertices.push(GraphVertex { label: label.into(), tag: None, fingerprint: None });
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, index: usize) {
        self.edges.push(Edge { from, to, index });
    }

    /// Adds `from -s_i-> to` and `to -s_i-> from`.
    pub fn add_mutual(&mut self, a: usize, b: usize, index: usize) {
        self.add_edge(a, b, index);
        self.add_edge(b, a, index);
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn out_edge(&self, v: usize, index: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.from == v && e.index == index).map(|e| e.to)
    }

    pub fn in_edge(&self, v: usize, index: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.to == v && e.index == index).map(|e| e.from)
    }

    /// Endpoint of a path: letters are applied right to left; `s_i` follows
    /// the outgoing `s_i` edge and `s_i^-1` walks back along the incoming one.
    pub fn eval_path(&self, start: usize, word: &MutationWord) -> Result<usize> {
        let mut v = start;
        for &(i, dir) in word.application_order() {
            let next = match dir {
                Direction::Left => self.out_edge(v, i),
                Direction::Right => self.in_edge(v, i),
            };
            v = next.ok_or_else(|| Error::NoSuchEdge {
                vertex: self.vertices[v].label.clone(),
                letter: match dir {
                    Direction::Left => format!("s{i}"),
                    Direction::Right => format!("s{i}^-1"),
                },
            })?;
        }
        Ok(v)
    }

    /// Exactly one outgoing and one incoming edge per vertex and index.
    pub fn is_regular(&self) -> bool {
        let mut outs = BTreeMap::new();
        let mut ins = BTreeMap::new();
        for e in &self.edges {
            if e.index == 0 || e.index > self.arity {
                return false;
            }
            *outs.entry((e.from, e.index)).or_insert(0) += 1;
            *ins.entry((e.to, e.index)).or_insert(0) += 1;
        }
        (0..self.vertices.len())
            .all(|v| (1..=self.arity).all(|i| outs.get(&(v, i)) == Some(&1) && ins.get(&(v, i)) == Some(&1)))
    }

    /// Undirected neighbours of `v`, without repetition.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| {
                if e.from == v {
                    Some(e.to)
                } else if e.to == v {
                    Some(e.from)
                } else {
                    None
                }
            })
            .filter(|&w| w != v)
            .sorted()
            .dedup()
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mutation_graph {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let label = match &v.tag {
                Some(t) => format!("{}\\n{}", escape(&v.label), escape(t)),
                None => escape(&v.label),
            };
            let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
        }
        for e in self.edges.iter().sorted() {
            let _ = writeln!(out, "  n{} -> n{} [label=\"s{}\"];", e.from, e.to, e.index);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serialises")
    }

    /// A vertex bijection `φ` and index permutation `π` with
    /// `v -s_i-> w` iff `φ(v) -s_{π(i)}-> φ(w)` and matching tags, if one
    /// exists. Assumes `self` is connected and has at most one outgoing
    /// edge per vertex and index; `allow_index_perm = false` forces `π = id`.
    pub fn find_isomorphism(&self, other: &MutationGraph, allow_index_perm: bool) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.vertices.len();
        if n != other.vertices.len() || self.arity != other.arity || self.edges.len() != other.edges.len() {
            return None;
        }
        if n == 0 {
            return Some((Vec::new(), (1..=self.arity).collect()));
        }
        let perms: Vec<Vec<usize>> = if allow_index_perm {
            (1..=self.arity).permutations(self.arity).collect()
        } else {
            vec![(1..=self.arity).collect()]
        };
        for perm in &perms {
            for target in 0..n {
                if let Some(map) = self.propagate(other, perm, target) {
                    return Some((map, perm.clone()));
                }
            }
        }
        None
    }

    fn propagate(&self, other: &MutationGraph, perm: &[usize], target: usize) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = target;
        used[target] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let fv = map[v];
            for i in 1..=self.arity {
                let pi = perm[i - 1];
                let pairs =
                    [(self.out_edge(v, i), other.out_edge(fv, pi)), (self.in_edge(v, i), other.in_edge(fv, pi))];
                for pair in pairs {
                    match pair {
                        (None, None) => {}
                        (Some(w), Some(fw)) => {
                            if map[w] == usize::MAX {
                                if used[fw] {
                                    return None;
                                }
                                map[w] = fw;
                                used[fw] = true;
                                queue.push_back(w);
                            } else if map[w] != fw {
                                return None;
                            }
                        }
                        _ => return None,
                    }
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        let tags_match = (0..n).all(|v| self.vertices[v].tag == other.vertices[map[v]].tag);
        let edges_match = self
            .edges
            .iter()
            .all(|e| other.edges.contains(&Edge { from: map[e.from], to: map[e.to], index: perm[e.index - 1] }));
        (tags_match && edges_match).then_some(map)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Vertex labels and `s_i` edges of the two bundled pictures.
pub fn preset(name: &str) -> Result<MutationGraph> {
    match name.to_ascii_lowercase().as_str() {
        "hexagon" => Ok(hexagon()),
        "octagon" => Ok(octagon()),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// The six maximal rigid objects of a cA₂ singularity, tagged with the
/// contraction algebra each carries.
fn hexagon() -> MutationGraph {
    let cycle = [
        ("M_id", "A_con"),
        ("M_(12)", "C_con"),
        ("M_(123)", "B_con"),
        ("M_(13)", "A_con"),
        ("M_(132)", "C_con"),
        ("M_(23)", "B_con"),
    ];
    let mut g = MutationGraph::new(2);
    for (label, tag) in cycle {
        let v = g.add_vertex(label);
        g.vertices[v].tag = Some(tag.to_string());
    }
    // Around the cycle the labels alternate s1, s2, starting M_id -s1- M_(12).
    for i in 0..6 {
        g.add_mutual(i, (i + 1) % 6, if i % 2 == 0 { 1 } else { 2 });
    }
    g
}

fn octagon() -> MutationGraph {
    let cycle = ["M", "M_1", "M_21", "M_121", "M_2121", "M_212", "M_12", "M_2"];
    let mut g = MutationGraph::new(2);
    for label in cycle {
        g.add_vertex(label);
    }
    for i in 0..8 {
        g.add_mutual(i, (i + 1) % 8, if i % 2 == 0 { 1 } else { 2 });
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MutationWord {
        s.parse().unwrap()
    }

    #[test]
    fn word_parsing() {
        assert!(w("").is_empty());
        assert_eq!(w("s1 s2^-1").letters, vec![(1, Direction::Left), (2, Direction::Right)]);
        assert_eq!(w("s1s1s2s1^-1").to_string(), "s1 s1 s2 s1^-1");
        assert!("t1".parse::<MutationWord>().is_err());
        assert!("s".parse::<MutationWord>().is_err());
        assert!("s0".parse::<MutationWord>().is_err());
    }

    #[test]
    fn octagon_example() {
        let g = preset("octagon").unwrap();
        let m1 = g.vertex_by_label("M_1").unwrap();
        let end = g.eval_path(m1, &w("s1 s1 s2 s1^-1")).unwrap();
        assert_eq!(g.vertices[end].label, "M_2");
    }

    #[test]
    fn hexagon_shape() {
        let g = preset("hexagon").unwrap();
        assert!(g.is_regular());
        assert_eq!(g.edges.len(), 12);
        let id = g.vertex_by_label("M_id").unwrap();
        assert_eq!(g.eval_path(id, &w("s1 s1")).unwrap(), id);
        let (a, b) = (g.vertex_by_label("M_(23)").unwrap(), g.vertex_by_label("M_(132)").unwrap());
        assert_eq!(g.out_edge(a, 1), Some(b));
        assert_eq!(g.out_edge(id, 2), Some(a));
    }

    #[test]
    fn missing_edge() {
        let mut g = MutationGraph::new(1);
        g.add_vertex("only");
        assert!(matches!(g.eval_path(0, &w("s1")), Err(Error::NoSuchEdge { .. })));
        let dot = g.to_dot();
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("label=").count(), 1);
    }

    #[test]
    fn isomorphism_up_to_index_swap() {
        let mut g = MutationGraph::new(2);
        for l in ["a", "b", "c"] {
            g.add_vertex(l);
        }
        g.vertices[0].tag = Some("end".into());
        g.add_mutual(0, 1, 1);
        g.add_mutual(1, 2, 2);
        let mut h = g.clone();
        for e in h.edges.iter_mut() {
            e.index = 3 - e.index;
        }
        assert!(g.find_isomorphism(&h, false).is_none());
        let (map, perm) = g.find_isomorphism(&h, true).unwrap();
        assert_eq!(perm, vec![2, 1]);
        assert_eq!(map, vec![0, 1, 2]);
        let hex = preset("hexagon").unwrap();
        assert!(hex.find_isomorphism(&hex, false).is_some());
    }

    proptest::proptest! {
        #[test]
        fn inverse_letters_cancel(start in 0usize..8, i in 1usize..=2) {
            let g = preset("octagon").unwrap();
            let a = MutationWord { letters: vec![(i, Direction::Right), (i, Direction::Left)] };
            let b = MutationWord { letters: vec![(i, Direction::Left), (i, Direction::Right)] };
            proptest::prop_assert_eq!(g.eval_path(start, &a).unwrap(), start);
            proptest::prop_assert_eq!(g.eval_path(start, &b).unwrap(), start);
        }

        #[test]
        fn composition_is_sequential(
            xs in proptest::collection::vec((1usize..=2, proptest::bool::ANY), 0..6),
            ys in proptest::collection::vec((1usize..=2, proptest::bool::ANY), 0..6),
        ) {
            let g = preset("hexagon").unwrap();
            let mk = |v: &Vec<(usize, bool)>| MutationWord {
                letters: v.iter().map(|&(i, r)| (i, if r { Direction::Right } else { Direction::Left })).collect(),
            };
            let (a, b) = (mk(&xs), mk(&ys));
            let mid = g.eval_path(0, &b).unwrap();
            proptest::prop_assert_eq!(g.eval_path(0, &a.compose(&b)).unwrap(), g.eval_path(mid, &a).unwrap());
        }
    }
}
