//! The permutation model for maximal rigid objects of a cA_{n-1}
//! singularity `uv = f_1 ⋯ f_n`, and the three contraction-algebra
//! presentations of the cA₂ example.

use std::fmt;

use itertools::Itertools;

use crate::algebra::{parse_presentation, AlgebraPresentation};
use crate::error::{Error, Result};
use crate::graph::{MutationGraph, MutationWord};

/// Labels of the irreducible factors `f_1, …, f_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CAFactorData {
    labels: Vec<String>,
}

impl CAFactorData {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        if let Some(dup) = labels.iter().duplicates().next() {
            return Err(Error::DuplicateId(dup.clone()));
        }
        Ok(CAFactorData { labels })
    }

    /// Factors `f1, …, fn`.
    pub fn generic(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("f{i}")).collect())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// `M_σ`, with `σ` in one-line notation on `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RigidVertex {
    sigma: Vec<usize>,
}

impl RigidVertex {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        for &s in &sigma {
            if s == 0 || s > n || seen[s] {
                return Err(Error::IndexOutOfRange { index: s, max: n });
            }
            seen[s] = true;
        }
        Ok(RigidVertex { sigma })
    }

    pub fn identity(n: usize) -> Self {
        RigidVertex { sigma: (1..=n).collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.sigma
    }

    /// Cycle notation with each cycle starting at its smallest element,
    /// fixed points omitted, `id` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.sigma.len();
        let mut seen = vec![false; n + 1];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start] || self.sigma[start - 1] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.sigma[start - 1];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.sigma[x - 1];
            }
            out.push_str(&format!("({})", cycle.iter().join("")));
        }
        if out.is_empty() {
            "id".into()
        } else {
            out
        }
    }

    /// Swaps positions `i` and `i + 1` (1-based).
    pub fn swap(&self, i: usize) -> RigidVertex {
        let mut sigma = self.sigma.clone();
        sigma.swap(i - 1, i);
        RigidVertex { sigma }
    }
}

impl fmt::Display for RigidVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}", self.cycle_notation())
    }
}

/// All `n!` objects `M_σ` (identity first, then lexicographic), with `s_i`
/// joining `σ` and `σ` with one-line positions `i, i+1` swapped.
pub fn ca_mutation_graph(data: &CAFactorData) -> MutationGraph {
    let n = data.n();
    let perms: Vec<RigidVertex> = (1..=n).permutations(n).map(|sigma| RigidVertex { sigma }).collect();
    let mut g = MutationGraph::new(n - 1);
    for p in &perms {
        g.add_vertex(p.to_string());
    }
    for (v, p) in perms.iter().enumerate() {
        for i in 1..n {
            let q = p.swap(i);
            let w = perms.binary_search(&q).expect("swap stays in S_n");
            g.add_edge(v, w, i);
        }
    }
    g
}

/// Endpoint of a flop sequence. Signs are ignored: left and right mutation
/// agree for maximal rigid objects.
pub fn flop_word(data: &CAFactorData, start: &RigidVertex, word: &MutationWord) -> Result<RigidVertex> {
    let n = data.n();
    if start.sigma.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: start.sigma.len() });
    }
    let mut v = start.clone();
    for &(i, _) in word.application_order() {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        v = v.swap(i);
    }
    Ok(v)
}

pub const A_CON: &str = "\
vertices: 1 2
arrows: a: 2 -> 1, c: 1 -> 2, l: 2 -> 2
relation: c*l
relation: l*a
relation: l*l + a*c*a*c*a*c
";

pub const B_CON: &str = "\
vertices: 1 2
arrows: a: 2 -> 1, c: 1 -> 2, l: 2 -> 2, m: 1 -> 1
relation: l*a
relation: c*l
relation: l*l - a*c
relation: a*m
relation: m*c
relation: m*m*m - c*a
";

/// Written left to right; the loop `m` sits at vertex 1.
pub const C_CON: &str = "\
vertices: 1 2
arrows: a: 2 -> 1, c: 1 -> 2, m: 1 -> 1
relation: m*c
relation: a*m
relation: m*m*m + c*a*c*a
";

pub const CONTRACTION_PRESETS: [&str; 3] = ["A_con", "B_con", "C_con"];

pub fn contraction_source(name: &str) -> Result<&'static str> {
    match name.to_ascii_lowercase().as_str() {
        "a_con" => Ok(A_CON),
        "b_con" => Ok(B_CON),
        "c_con" => Ok(C_CON),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

pub fn contraction_preset(name: &str) -> Result<AlgebraPresentation> {
    parse_presentation(contraction_source(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::preset;

    #[test]
    fn cycle_labels() {
        assert_eq!(RigidVertex::identity(3).to_string(), "M_id");
        assert_eq!(RigidVertex::new(vec![2, 3, 1]).unwrap().to_string(), "M_(123)");
        assert_eq!(RigidVertex::new(vec![3, 1, 2]).unwrap().to_string(), "M_(132)");
        assert_eq!(RigidVertex::new(vec![3, 2, 1]).unwrap().to_string(), "M_(13)");
        assert!(RigidVertex::new(vec![1, 1, 2]).is_err());
    }

    #[test]
    fn single_factor() {
        let g = ca_mutation_graph(&CAFactorData::generic(1).unwrap());
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
        assert_eq!(g.vertices[0].label, "M_id");
    }

    #[test]
    fn three_factors_match_hexagon_labels() {
        let g = ca_mutation_graph(&CAFactorData::generic(3).unwrap());
        let hex = preset("hexagon").unwrap();
        for e in &hex.edges {
            let from = g.vertex_by_label(&hex.vertices[e.from].label).unwrap();
            let to = g.vertex_by_label(&hex.vertices[e.to].label).unwrap();
            assert_eq!(g.out_edge(from, e.index), Some(to));
        }
        assert_eq!(g.edges.len(), hex.edges.len());
    }

    #[test]
    fn flops() {
        let d = CAFactorData::generic(3).unwrap();
        let id = RigidVertex::identity(3);
        let w = |s: &str| s.parse::<MutationWord>().unwrap();
        assert_eq!(flop_word(&d, &id, &w("")).unwrap(), id);
        assert_eq!(flop_word(&d, &id, &w("s1 s1")).unwrap(), id);
        assert_eq!(flop_word(&d, &id, &w("s2 s1")).unwrap().one_line(), [2, 3, 1]);
        assert_eq!(flop_word(&d, &id, &w("s1 s2")).unwrap().one_line(), [3, 1, 2]);
        assert!(matches!(flop_word(&d, &id, &w("s3")), Err(Error::IndexOutOfRange { index: 3, max: 2 })));
    }

    #[test]
    fn presets_parse() {
        assert_eq!(contraction_preset("A_con").unwrap().relations.len(), 3);
        assert_eq!(contraction_preset("B_con").unwrap().relations.len(), 6);
        assert_eq!(contraction_preset("c_con").unwrap().relations.len(), 3);
        assert!(matches!(contraction_preset("D_con"), Err(Error::UnknownPreset(_))));
    }
}
