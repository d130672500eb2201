//! Two-term silting objects by breadth-first mutation, the derived class of
//! their endomorphism algebras, and the exchange graph.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{fingerprint, FdAlgebra, IsoFingerprint};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Direction, MutationGraph, MutationWord};
use crate::homotopy::decompose::same_summands;
use crate::homotopy::ProjComplex;

use super::approx::{end_algebra, mutate_seeded};
use super::object::{silting_leq, SiltingObject};

pub const DEFAULT_CAP: usize = 256;

/// A single mutation `from → to` that stays two-term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Move {
    pub from: usize,
    pub to: usize,
    /// 1-based index in `from`'s summand order.
    pub index: usize,
    pub direction: Direction,
}

#[derive(Clone, Debug)]
pub struct TwoSiltPoset<K: Field> {
    /// Discovery order; index 0 is `Λ`.
    pub objects: Vec<SiltingObject<K>>,
    pub moves: Vec<Move>,
}

impl<K: Field> TwoSiltPoset<K> {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// `objects[a] ≥ objects[b]`.
    pub fn geq(&self, a: usize, b: usize) -> Result<bool> {
        silting_leq(&self.objects[a], &self.objects[b])
    }

    /// Indices of the maximum and minimum elements, if they exist.
    pub fn top_and_bottom(&self) -> Result<(Option<usize>, Option<usize>)> {
        let n = self.len();
        let mut top = None;
        let mut bottom = None;
        for a in 0..n {
            let mut is_top = true;
            let mut is_bottom = true;
            for b in 0..n {
                is_top &= self.geq(a, b)?;
                is_bottom &= self.geq(b, a)?;
            }
            if is_top {
                top = Some(a);
            }
            if is_bottom {
                bottom = Some(a);
            }
        }
        Ok((top, bottom))
    }

    /// Whether two objects are joined by a recorded mutation.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.moves.iter().any(|m| (m.from == a && m.to == b) || (m.from == b && m.to == a))
    }
}

type Signatures = Vec<(i64, Vec<Vec<usize>>)>;
type Mutations<K> = Vec<(usize, Direction, SiltingObject<K>)>;

fn summand_signatures<K: Field>(p: &SiltingObject<K>) -> Signatures {
    let mut s: Vec<_> = p.summands.iter().map(ProjComplex::signature).collect();
    s.sort();
    s
}

/// Position of an object isomorphic to `q`, comparing summand multisets
/// after a cheap term-signature screen.
fn find_existing<K: Field>(
    found: &[SiltingObject<K>],
    sigs: &[Signatures],
    q: &SiltingObject<K>,
) -> Result<Option<usize>> {
    let sq = summand_signatures(q);
    for (idx, p) in found.iter().enumerate() {
        if sigs[idx] == sq && same_summands(&p.summands, &q.summands)? {
            return Ok(Some(idx));
        }
    }
    Ok(None)
}

fn mutations_of<K: Field>(p: &SiltingObject<K>, seed: u64) -> Result<Mutations<K>> {
    let mut out = Vec::new();
    for i in 1..=p.len() {
        for dir in [Direction::Left, Direction::Right] {
            let q = mutate_seeded(p, i, dir, seed)?;
            if q.is_two_term() {
                out.push((i, dir, q));
            }
        }
    }
    Ok(out)
}

/// Breadth-first closure of `Λ` under mutations that stay two-term.
/// `threads > 1` evaluates each frontier in parallel; the result does not
/// depend on it. `seed` feeds the randomised idempotent searches.
pub fn two_silt_enumerate<K: Field>(
    alg: Arc<FdAlgebra<K>>,
    cap: usize,
    threads: usize,
    seed: u64,
) -> Result<TwoSiltPoset<K>> {
    let start = SiltingObject::regular(alg);
    let mut objects = vec![start];
    let mut sigs = vec![summand_signatures(&objects[0])];
    let mut moves = Vec::new();
    let mut frontier = vec![0usize];
    let pool = if threads > 1 {
        Some(rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| Error::Internal(e.to_string()))?)
    } else {
        None
    };
    while !frontier.is_empty() {
        let results: Vec<Result<Mutations<K>>> = match &pool {
            Some(pool) => pool.install(|| frontier.par_iter().map(|&v| mutations_of(&objects[v], seed)).collect()),
            None => frontier.iter().map(|&v| mutations_of(&objects[v], seed)).collect(),
        };
        let mut next = Vec::new();
        for (&from, res) in frontier.iter().zip(results) {
            for (index, direction, q) in res? {
                let to = match find_existing(&objects, &sigs, &q)? {
                    Some(t) => t,
                    None => {
                        if objects.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        sigs.push(summand_signatures(&q));
                        objects.push(q);
                        next.push(objects.len() - 1);
                        objects.len() - 1
                    }
                };
                moves.push(Move { from, to, index, direction });
            }
        }
        frontier = next;
    }
    Ok(TwoSiltPoset { objects, moves })
}

/// Fingerprints of `End(T)` over all two-term silting `T`.
pub fn derived_class<K: Field>(
    alg: Arc<FdAlgebra<K>>,
    cap: usize,
    threads: usize,
    seed: u64,
) -> Result<BTreeSet<IsoFingerprint>> {
    let poset = two_silt_enumerate(alg, cap, threads, seed)?;
    poset.objects.iter().map(|t| fingerprint(&end_algebra(t)?)).collect()
}

/// `μ_α(Λ)`, applying the letters right to left.
pub fn mutate_word<K: Field>(alg: Arc<FdAlgebra<K>>, word: &MutationWord) -> Result<SiltingObject<K>> {
    mutate_word_seeded(alg, word, 0)
}

pub fn mutate_word_seeded<K: Field>(
    alg: Arc<FdAlgebra<K>>,
    word: &MutationWord,
    seed: u64,
) -> Result<SiltingObject<K>> {
    let n = alg.num_vertices();
    if word.max_index() > n {
        return Err(Error::IndexOutOfRange { index: word.max_index(), max: n });
    }
    let mut p = SiltingObject::regular(alg);
    for &(i, dir) in word.application_order() {
        p = mutate_seeded(&p, i, dir, seed)?;
    }
    Ok(p)
}

/// Vertex label for an object: its mutation word, or `Lambda` for the
/// empty word.
pub fn vertex_label(word: &MutationWord) -> String {
    if word.is_empty() {
        "Lambda".into()
    } else {
        format!("mu[{word}]")
    }
}

/// The exchange graph of two-term silting objects, each vertex annotated
/// with the fingerprint of its endomorphism algebra. Every recorded
/// mutation becomes an edge labelled by the index in its source's order.
pub fn build_from_silting<K: Field>(
    alg: Arc<FdAlgebra<K>>,
    cap: usize,
    threads: usize,
    seed: u64,
) -> Result<MutationGraph> {
    let n = alg.num_vertices();
    let poset = two_silt_enumerate(alg, cap, threads, seed)?;
    graph_from_poset(&poset, n)
}

pub fn graph_from_poset<K: Field>(poset: &TwoSiltPoset<K>, arity: usize) -> Result<MutationGraph> {
    let mut g = MutationGraph::new(arity);
    for t in &poset.objects {
        let v = g.add_vertex(vertex_label(&t.provenance));
        g.vertices[v].fingerprint = Some(fingerprint(&end_algebra(t)?)?);
    }
    for m in &poset.moves {
        if g.out_edge(m.from, m.index).is_none() {
            g.add_edge(m.from, m.to, m.index);
        }
    }
    Ok(g)
}
