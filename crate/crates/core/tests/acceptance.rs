//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use silt_core::algebra::{build_algebra, fingerprint, is_symmetric, parse_presentation, FdAlgebra, IsoFingerprint};
use silt_core::cdv::{ca_mutation_graph, contraction_preset, CAFactorData, CONTRACTION_PRESETS};
use silt_core::graph::{preset, Direction, MutationGraph, MutationWord};
use silt_core::homotopy::{hom_dimension, iso_in_homotopy, ProjComplex};
use silt_core::silting::{
    derived_class, end_algebra, graph_from_poset, is_tilting, mutate, mutate_word, mutate_word_seeded,
    two_silt_enumerate, SiltingObject, TwoSiltPoset, DEFAULT_CAP,
};
use silt_core::PrimeField;

use common::{degreewise_dimension, det_mod_p, preset_algebra, P};

type Alg = Arc<FdAlgebra<PrimeField>>;
type Outcome = Result<String, String>;
type Presets = Vec<(String, Alg, IsoFingerprint)>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: silt_core::Error) -> String {
    e.to_string()
}

fn word(s: &str) -> MutationWord {
    s.parse().expect("valid word")
}

/// Everything later criteria share: the algebras, the enumerated objects
/// and the built exchange graph.
struct Fixture {
    a_con: Alg,
    presets: Presets,
    poset: TwoSiltPoset<PrimeField>,
    graph: MutationGraph,
    /// Every complex produced by the mutation-based criteria.
    produced: Vec<ProjComplex<PrimeField>>,
}

impl Fixture {
    fn preset_fingerprint(&self, name: &str) -> &IsoFingerprint {
        &self.presets.iter().find(|(n, _, _)| n == name).expect("preset").2
    }

    fn tag_of(&self, fp: &IsoFingerprint) -> Option<String> {
        self.presets.iter().find(|(_, _, f)| f == fp).map(|(n, _, _)| n.clone())
    }
}

fn criterion_1() -> Result<(String, Presets), String> {
    let start = Instant::now();
    let mut presets = Vec::new();
    let mut dims = Vec::new();
    for name in CONTRACTION_PRESETS {
        let pres = contraction_preset(name).map_err(err)?;
        let alg = Arc::new(build_algebra(&PrimeField::default(), &pres, 64).map_err(err)?);
        let oracle = degreewise_dimension(&pres, 10);
        ensure(oracle == degreewise_dimension(&pres, 12), format!("{name}: oracle not stable in the truncation"))?;
        ensure(alg.dim() == oracle, format!("{name}: dim {} but oracle {oracle}", alg.dim()))?;
        ensure(alg.is_associative(), format!("{name}: structure constants not associative"))?;
        dims.push(format!("{name}={}", alg.dim()));
        let fp = fingerprint(&*alg).map_err(err)?;
        presets.push((name.to_string(), alg, fp));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    Ok((format!("{} in {elapsed:.2?}", dims.join(" ")), presets))
}

/// Checks a witness `λ` directly from the structure constants.
fn witness_is_valid(alg: &FdAlgebra<PrimeField>, lambda: &[u64]) -> bool {
    let n = alg.dim();
    let lam = |i: usize, j: usize| -> u64 {
        alg.basis_product(i, j).iter().fold(0, |acc, (b, c)| (acc + c * lambda[*b]) % P)
    };
    let gram: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| lam(i, j)).collect()).collect();
    let symmetric = (0..n).all(|i| (0..n).all(|j| gram[i][j] == gram[j][i]));
    symmetric && det_mod_p(gram) != 0
}

fn criterion_2(presets: &[(String, Alg, IsoFingerprint)]) -> Outcome {
    for (name, alg, _) in presets {
        let v = is_symmetric(&**alg);
        ensure(v.symmetric, format!("{name} reported not symmetric"))?;
        let w = v.witness.ok_or(format!("{name}: no witness"))?;
        ensure(witness_is_valid(alg, &w), format!("{name}: witness fails the direct check"))?;
    }
    let a2 = parse_presentation("vertices: 1 2\narrows: a: 1 -> 2\n").map_err(err)?;
    let a2 = build_algebra(&PrimeField::default(), &a2, 64).map_err(err)?;
    let v = is_symmetric(&a2);
    ensure(!v.symmetric && v.certified, "A2 path algebra not certified non-symmetric")?;
    Ok("three presets symmetric with checked witnesses, A2 path algebra not".into())
}

fn criterion_3(a_con: &Alg) -> Result<(String, TwoSiltPoset<PrimeField>), String> {
    let start = Instant::now();
    let poset = two_silt_enumerate(a_con.clone(), DEFAULT_CAP, 1, 0).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(poset.len() == 6, format!("{} objects", poset.len()))?;
    let (top, bottom) = poset.top_and_bottom().map_err(err)?;
    let top = top.ok_or("no maximum")?;
    let bottom = bottom.ok_or("no minimum")?;
    let lambda = SiltingObject::regular(a_con.clone());
    ensure(iso_in_homotopy(&poset.objects[top].complex, &lambda.complex).map_err(err)?, "top is not Lambda")?;
    ensure(
        iso_in_homotopy(&poset.objects[bottom].complex, &lambda.shift(1).complex).map_err(err)?,
        "bottom is not Lambda[1]",
    )?;
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok((format!("6 objects, top Lambda, bottom Lambda[1], {elapsed:.2?}"), poset))
}

fn criterion_4(fx: &Fixture) -> Outcome {
    let mut classes = Vec::new();
    for (name, alg, _) in &fx.presets {
        classes.push((name, derived_class(alg.clone(), DEFAULT_CAP, 1, 0).map_err(err)?));
    }
    let first = &classes[0].1;
    ensure(first.len() == 3, format!("A_con class has {} fingerprints", first.len()))?;
    let expected: BTreeSet<IsoFingerprint> = fx.presets.iter().map(|(_, _, f)| f.clone()).collect();
    ensure(*first == expected, "class differs from the three preset fingerprints")?;
    for (name, c) in &classes[1..] {
        ensure(c == first, format!("{name} gives a different class"))?;
    }
    Ok("3 fingerprints, identical from A_con, B_con, C_con".into())
}

fn criterion_5(fx: &Fixture) -> Outcome {
    let mut g = fx.graph.clone();
    for v in &mut g.vertices {
        v.tag = v.fingerprint.as_ref().and_then(|f| fx.tag_of(f));
    }
    ensure(g.vertices.iter().all(|v| v.tag.is_some()), "a vertex carries an unknown fingerprint")?;
    let hex = preset("hexagon").map_err(err)?;
    let (_, perm) = g.find_isomorphism(&hex, true).ok_or("not isomorphic to the hexagon")?;
    for v in 0..g.vertices.len() {
        let anti = g.eval_path(v, &word("s1 s2 s1")).map_err(err)?;
        ensure(anti == g.eval_path(v, &word("s2 s1 s2")).map_err(err)?, "antipode not well defined")?;
        ensure(g.vertices[v].fingerprint == g.vertices[anti].fingerprint, format!("antipodes {v}, {anti} differ"))?;
    }
    let mut around: Vec<String> = g.neighbours(0).iter().map(|&w| g.vertices[w].tag.clone().unwrap()).collect();
    around.sort();
    ensure(around == ["B_con", "C_con"], format!("neighbours of Lambda: {around:?}"))?;
    Ok(format!("label-preserving isomorphism with index permutation {perm:?}"))
}

fn criterion_6(fx: &Fixture, produced: &mut Vec<ProjComplex<PrimeField>>) -> Outcome {
    let mut checks = 0;
    for p in &fx.poset.objects {
        for i in 1..=p.len() {
            for (first, second) in [(Direction::Left, Direction::Right), (Direction::Right, Direction::Left)] {
                let q = mutate(p, i, first).map_err(err)?;
                let back = mutate(&q, i, second).map_err(err)?;
                ensure(
                    iso_in_homotopy(&back.complex, &p.complex).map_err(err)?,
                    format!("[{}] index {i} {first:?} then {second:?} is not the identity", p.provenance),
                )?;
                produced.push(q.complex);
                produced.push(back.complex);
                checks += 1;
            }
        }
    }
    ensure(checks == 24, format!("{checks} checks"))?;
    Ok("24 of 24 round trips are the identity".into())
}

fn summands_shared(a: &SiltingObject<PrimeField>, b: &SiltingObject<PrimeField>) -> Result<usize, String> {
    let mut shared = 0;
    for x in &a.summands {
        let mut hit = false;
        for y in &b.summands {
            hit |= iso_in_homotopy(x, y).map_err(err)?;
        }
        shared += usize::from(hit);
    }
    Ok(shared)
}

fn criterion_7(fx: &Fixture) -> Outcome {
    let objs = &fx.poset.objects;
    let mut pairs = 0;
    let mut adjacent = 0;
    for a in 0..objs.len() {
        for b in (a + 1)..objs.len() {
            let one_apart = summands_shared(&objs[a], &objs[b])? == objs[a].len() - 1;
            ensure(
                fx.poset.adjacent(a, b) == one_apart,
                format!("pair ({a}, {b}): mutation {} vs one summand apart {one_apart}", fx.poset.adjacent(a, b)),
            )?;
            pairs += 1;
            adjacent += usize::from(one_apart);
        }
    }
    ensure(pairs == 15, format!("{pairs} pairs"))?;
    Ok(format!("15 pairs agree, {adjacent} related by one mutation"))
}

/// Twenty words of length 1 to 6 over `s1, s2` with random signs.
fn sample_words(seed: u64) -> Vec<MutationWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..20)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            let letters = (0..len)
                .map(|_| {
                    let dir = if rng.gen_bool(0.5) { Direction::Left } else { Direction::Right };
                    (rng.gen_range(1..=2), dir)
                })
                .collect();
            MutationWord { letters }
        })
        .collect()
}

fn criterion_8(fx: &Fixture, produced: &mut Vec<ProjComplex<PrimeField>>) -> Outcome {
    let mut g = fx.graph.clone();
    for v in &mut g.vertices {
        v.tag = v.fingerprint.as_ref().and_then(|f| fx.tag_of(f));
    }
    let hex = preset("hexagon").map_err(err)?;
    let (map, perm) = g.find_isomorphism(&hex, true).ok_or("not isomorphic to the hexagon")?;
    let words = sample_words(8);
    let mixed = words.iter().filter(|w| {
        w.letters.iter().any(|l| l.1 == Direction::Left) && w.letters.iter().any(|l| l.1 == Direction::Right)
    });
    ensure(mixed.count() > 0, "no word mixes signs")?;
    for w in &words {
        let t = mutate_word(fx.a_con.clone(), w).map_err(err)?;
        let fp = fingerprint(&end_algebra(&t).map_err(err)?).map_err(err)?;
        let image = MutationWord { letters: w.letters.iter().map(|&(i, d)| (perm[i - 1], d)).collect() };
        let end = hex.eval_path(map[0], &image).map_err(err)?;
        let tag = hex.vertices[end].tag.clone().ok_or("untagged hexagon vertex")?;
        ensure(
            &fp == fx.preset_fingerprint(&tag),
            format!("[{w}] ends at {} ({tag}) but End has {fp}", hex.vertices[end].label),
        )?;
        produced.push(t.complex);
    }
    let twice = mutate_word(fx.a_con.clone(), &word("s1 s1")).map_err(err)?;
    ensure(!iso_in_homotopy(&twice.complex, &fx.poset.objects[0].complex).map_err(err)?, "mu1 mu1 A_con is A_con")?;
    let fp = fingerprint(&end_algebra(&twice).map_err(err)?).map_err(err)?;
    ensure(&fp == fx.preset_fingerprint("A_con"), "mu1 mu1 A_con has a different End fingerprint")?;
    produced.push(twice.complex);
    Ok("20 words agree with the hexagon; mu1 mu1 A_con differs from A_con with equal End".into())
}

fn criterion_9(produced: &[ProjComplex<PrimeField>]) -> Outcome {
    for (n, x) in produced.iter().enumerate() {
        ensure(is_tilting(x).map_err(err)?, format!("complex {n} is not tilting"))?;
        let (lo, hi) = x.support().ok_or("empty complex")?;
        for i in (lo - hi)..=(hi - lo) {
            if i != 0 {
                ensure(hom_dimension(x, x, i).map_err(err)? == 0, format!("complex {n}: Hom(T, T[{i}]) != 0"))?;
            }
        }
    }
    Ok(format!("{} complexes tilting", produced.len()))
}

fn criterion_10() -> Outcome {
    let g = preset("octagon").map_err(err)?;
    let m1 = g.vertex_by_label("M_1").ok_or("no M_1")?;
    let end = g.eval_path(m1, &word("s1 s1 s2 s1^-1")).map_err(err)?;
    ensure(g.vertices[end].label == "M_2", format!("ends at {}", g.vertices[end].label))?;
    Ok("M_1 -> M_2".into())
}

fn criterion_11() -> Outcome {
    let g3 = ca_mutation_graph(&CAFactorData::generic(3).map_err(err)?);
    let hex = preset("hexagon").map_err(err)?;
    let labelled = |g: &MutationGraph| -> BTreeSet<(String, String, usize)> {
        g.edges.iter().map(|e| (g.vertices[e.from].label.clone(), g.vertices[e.to].label.clone(), e.index)).collect()
    };
    ensure(labelled(&g3) == labelled(&hex), "cA_3 model differs from the hexagon")?;
    ensure(g3.edges.len() == hex.edges.len(), "edge multiplicities differ")?;

    let g4 = ca_mutation_graph(&CAFactorData::generic(4).map_err(err)?);
    ensure(g4.vertices.len() == 24, format!("{} vertices", g4.vertices.len()))?;
    // Oracle: one-line permutations differing by one adjacent transposition.
    let perms = permutations(4);
    let oracle_nbrs = |p: &[usize]| -> usize {
        perms
            .iter()
            .filter(|q| {
                let diff: Vec<usize> = (0..4).filter(|&k| p[k] != q[k]).collect();
                diff.len() == 2 && diff[1] == diff[0] + 1
            })
            .count()
    };
    for v in 0..24 {
        ensure(g4.neighbours(v).len() == 3, format!("vertex {v} has {} neighbours", g4.neighbours(v).len()))?;
    }
    ensure(perms.iter().all(|p| oracle_nbrs(p) == 3), "oracle disagrees")?;
    ensure(g4.edges.len() == 24 * 3, format!("{} directed edges", g4.edges.len()))?;
    Ok("n=3 equals the hexagon, n=4 is 24 vertices of degree 3".into())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// The JSON the suite produces, for the determinism check.
fn suite_json(seed: u64) -> Result<String, String> {
    let mut out = Vec::<Value>::new();
    for name in CONTRACTION_PRESETS {
        let alg = preset_algebra(name);
        let poset = two_silt_enumerate(alg.clone(), DEFAULT_CAP, 1, seed).map_err(err)?;
        let objs: Vec<Value> = poset.objects.iter().map(SiltingObject::to_json).collect();
        let g = graph_from_poset(&poset, alg.num_vertices()).map_err(err)?;
        let class = derived_class(alg, DEFAULT_CAP, 1, seed).map_err(err)?;
        out.push(json!({ "preset": name, "objects": objs, "graph": g.to_json(), "class": class }));
    }
    let a_con = preset_algebra("A_con");
    for w in sample_words(seed) {
        let t = mutate_word_seeded(a_con.clone(), &w, seed).map_err(err)?;
        let fp = fingerprint(&end_algebra(&t).map_err(err)?).map_err(err)?;
        out.push(json!({ "word": w.to_string(), "object": t.to_json(), "end": fp }));
    }
    Ok(serde_json::to_string(&out).expect("json serialises"))
}

fn criterion_12(suite_start: Instant) -> Outcome {
    let first = suite_json(8)?;
    let second = suite_json(8)?;
    ensure(first == second, "two runs differ")?;
    let elapsed = suite_start.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("suite took {elapsed:?}"))?;
    Ok(format!("{} identical bytes, suite {elapsed:.2?}", first.len()))
}

fn main() -> ExitCode {
    let suite_start = Instant::now();
    let mut failed = 0usize;
    let mut line = |n: usize, name: &str, outcome: Outcome| match outcome {
        Ok(detail) => println!("PASS {n:>2} {name}: {detail}"),
        Err(why) => {
            failed += 1;
            println!("FAIL {n:>2} {name}: {why}")
        }
    };

    let presets = match criterion_1() {
        Ok((detail, presets)) => {
            line(1, "preset build", Ok(detail));
            presets
        }
        Err(why) => {
            line(1, "preset build", Err(why));
            CONTRACTION_PRESETS
                .iter()
                .map(|n| {
                    let a = preset_algebra(n);
                    let f = fingerprint(&*a).expect("fingerprint");
                    (n.to_string(), a, f)
                })
                .collect()
        }
    };
    line(2, "symmetry", criterion_2(&presets));

    let a_con = presets[0].1.clone();
    let poset = match criterion_3(&a_con) {
        Ok((detail, poset)) => {
            line(3, "two-term count", Ok(detail));
            poset
        }
        Err(why) => {
            line(3, "two-term count", Err(why));
            two_silt_enumerate(a_con.clone(), DEFAULT_CAP, 1, 0).expect("enumeration")
        }
    };
    let graph = graph_from_poset(&poset, a_con.num_vertices()).expect("graph");
    let produced = poset.objects.iter().map(|t| t.complex.clone()).collect();
    let mut fx = Fixture { a_con, presets, poset, graph, produced };

    line(4, "derived class", criterion_4(&fx));
    line(5, "hexagon placement", criterion_5(&fx));
    let mut produced = std::mem::take(&mut fx.produced);
    line(6, "mutation inverse", criterion_6(&fx, &mut produced));
    line(7, "one-summand exchange", criterion_7(&fx));
    line(8, "path endpoints", criterion_8(&fx, &mut produced));
    line(9, "tilting", criterion_9(&produced));
    line(10, "octagon path", criterion_10());
    line(11, "cA model", criterion_11());
    line(12, "determinism", criterion_12(suite_start));

    if failed == 0 {
        println!("acceptance: 12 of 12 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 12 criteria fail");
        ExitCode::FAILURE
    }
}
