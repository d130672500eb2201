use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use silt_core::algebra::fingerprint::{radical_basis, radical_layers};
use silt_core::algebra::{
    build_algebra, fingerprint, is_symmetric_seeded, parse_presentation, AlgebraPresentation, FdAlgebra,
};
use silt_core::cdv::{ca_mutation_graph, contraction_preset, CAFactorData};
use silt_core::dump::algebra_json;
use silt_core::graph::{preset, MutationGraph, MutationWord};
use silt_core::silting::{derived_class, end_algebra, graph_from_poset, mutate_word_seeded, two_silt_enumerate};
use silt_core::{Error, Field, FieldDescriptor, PrimeField, RationalField, Result};

use crate::{Cli, Command, Format};

/// Reads a presentation from a file, falling back to a bundled preset name.
fn load(input: &str) -> Result<AlgebraPresentation> {
    let path = Path::new(input);
    if path.is_file() {
        let src = std::fs::read_to_string(path).map_err(|e| Error::Internal(format!("{input}: {e}")))?;
        return parse_presentation(&src);
    }
    contraction_preset(input)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Internal(e.to_string())
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("json serialises")).map_err(io_err)
}

fn emit_pretty(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json serialises")).map_err(io_err)
}

fn emit_graph(out: &mut dyn Write, g: &MutationGraph, format: Format) -> Result<()> {
    match format {
        Format::Dot => write!(out, "{}", g.to_dot()).map_err(io_err),
        Format::Json => emit_pretty(out, &g.to_json()),
        Format::Text => {
            for (v, vert) in g.vertices.iter().enumerate() {
                let nbrs: Vec<String> = (1..=g.arity)
                    .filter_map(|i| g.out_edge(v, i).map(|w| format!("s{i}->{}", g.vertices[w].label)))
                    .collect();
                writeln!(out, "{} {}", vert.label, nbrs.join(" ")).map_err(io_err)?;
            }
            Ok(())
        }
    }
}

pub fn run(cli: &Cli, descriptor: &FieldDescriptor, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Graph { input, dot } if preset(input).is_ok() => {
            let format = if *dot { Format::Dot } else { cli.format };
            emit_graph(out, &preset(input)?, format)
        }
        Command::CaModel { n, labels } => {
            let data = match labels {
                Some(l) => CAFactorData::new(l.split(',').map(|s| s.trim().to_string()).collect())?,
                None => CAFactorData::generic(*n)?,
            };
            if data.n() != *n {
                return Err(Error::BadArgument(format!("{} labels for n = {n}", data.n())));
            }
            emit_graph(out, &ca_mutation_graph(&data), cli.format)
        }
        _ => match descriptor {
            FieldDescriptor::Prime(p) => run_algebra(cli, PrimeField::new(*p)?, out),
            FieldDescriptor::Rational => run_algebra(cli, RationalField, out),
        },
    }
}

fn algebra<K: Field>(cli: &Cli, k: &K, input: &str) -> Result<Arc<FdAlgebra<K>>> {
    Ok(Arc::new(build_algebra(k, &load(input)?, cli.max_path_len)?))
}

fn run_algebra<K: Field>(cli: &Cli, k: K, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Basis { input } => {
            let alg = algebra(cli, &k, input)?;
            let fp = fingerprint(&*alg)?;
            let layers = radical_layers(&alg, &radical_basis(&*alg)?);
            let sym = is_symmetric_seeded(&*alg, cli.seed);
            let mut v = algebra_json(&alg, Some(&fp));
            v["radical_layers"] = json!(layers);
            v["symmetric"] = json!(sym.symmetric);
            v["symmetric_certified"] = json!(sym.certified);
            match cli.format {
                Format::Text => {
                    writeln!(out, "dimension {}", alg.dim()).map_err(io_err)?;
                    writeln!(out, "basis {}", alg.labels().join(" ")).map_err(io_err)?;
                    writeln!(out, "cartan {:?}", alg.cartan()).map_err(io_err)?;
                    writeln!(out, "symmetric {}", sym.symmetric).map_err(io_err)?;
                    writeln!(out, "fingerprint {fp}").map_err(io_err)
                }
                _ => emit_pretty(out, &v),
            }
        }
        Command::Mutate { input, word } => {
            let alg = algebra(cli, &k, input)?;
            let w: MutationWord = word.parse()?;
            let p = mutate_word_seeded(alg, &w, cli.seed)?;
            let fp = fingerprint(&end_algebra(&p)?)?;
            let mut v = p.to_json();
            v["end_fingerprint"] = serde_json::to_value(&fp).expect("fingerprint serialises");
            match cli.format {
                Format::Text => {
                    writeln!(out, "word {}", p.provenance).map_err(io_err)?;
                    let (lo, hi) = p.complex.support().unwrap_or((0, 0));
                    writeln!(out, "degrees {lo}..{hi}").map_err(io_err)?;
                    writeln!(out, "end {fp}").map_err(io_err)
                }
                _ => emit_pretty(out, &v),
            }
        }
        Command::TwoSilt { input } => {
            let alg = algebra(cli, &k, input)?;
            let poset = two_silt_enumerate(alg, cli.cap, cli.threads, cli.seed)?;
            for (idx, t) in poset.objects.iter().enumerate() {
                let fp = fingerprint(&end_algebra(t)?)?;
                let neighbours: Vec<Value> = poset
                    .moves
                    .iter()
                    .filter(|m| m.from == idx)
                    .map(|m| json!({ "index": m.index, "direction": m.direction, "to": m.to }))
                    .collect();
                let mut v = t.to_json();
                v["id"] = json!(idx);
                v["end_fingerprint"] = serde_json::to_value(&fp).expect("fingerprint serialises");
                v["mutations"] = json!(neighbours);
                match cli.format {
                    Format::Text => writeln!(out, "{idx} [{}] {fp}", t.provenance).map_err(io_err)?,
                    _ => emit(out, &v)?,
                }
            }
            Ok(())
        }
        Command::DerivedClass { input } => {
            let alg = algebra(cli, &k, input)?;
            for fp in derived_class(alg, cli.cap, cli.threads, cli.seed)? {
                match cli.format {
                    Format::Text => writeln!(out, "{fp}").map_err(io_err)?,
                    _ => emit(out, &serde_json::to_value(&fp).expect("fingerprint serialises"))?,
                }
            }
            Ok(())
        }
        Command::Graph { input, dot } => {
            let alg = algebra(cli, &k, input)?;
            let n = alg.num_vertices();
            let poset = two_silt_enumerate(alg, cli.cap, cli.threads, cli.seed)?;
            let g = graph_from_poset(&poset, n)?;
            emit_graph(out, &g, if *dot { Format::Dot } else { cli.format })
        }
        Command::CaModel { .. } => unreachable!("handled without an algebra"),
    }
}
