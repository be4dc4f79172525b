#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use jsonschema::{Retrieve, Uri, Validator};
use serde_json::Value;
use spectradim::Graph;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }
}

pub fn spectradim(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_spectradim"))
        .args(args)
        .env_remove("SPECTRADIM_SEED")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn path_arg(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

pub fn write_graph(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, g.to_edge_list()).unwrap();
    path
}

pub fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src/schemas")
}

/// Resolves `$ref`s between the shipped schemas by file name.
struct SchemaFiles;

impl Retrieve for SchemaFiles {
    fn retrieve(
        &self,
        uri: &Uri<String>,
    ) -> Result<Value, Box<dyn std::error::Error + Send + Sync>> {
        let name = uri.as_str().rsplit('/').next().unwrap_or_default();
        let text = fs::read_to_string(schema_dir().join(name))?;
        Ok(serde_json::from_str(&text)?)
    }
}

pub fn validator(name: &str) -> Validator {
    let text = fs::read_to_string(schema_dir().join(name)).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::options()
        .with_retriever(SchemaFiles)
        .build(&schema)
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn assert_valid(schema: &str, instance: &Value) {
    let v = validator(schema);
    let errors: Vec<String> = v.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}\n{instance}");
}

use rand::Rng;
use spectradim::GraphBuilder;

/// Erdős–Rényi edges with mean degree `mean_degree` over a random spanning
/// path, so the graph is connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, mean_degree: f64) -> Graph {
    let mut b = GraphBuilder::new(n);
    add_random_connected(&mut b, rng, 0, n, mean_degree);
    b.build()
}

/// Adds a connected random graph on vertices `offset..offset + n`.
pub fn add_random_connected<R: Rng>(
    b: &mut GraphBuilder,
    rng: &mut R,
    offset: usize,
    n: usize,
    mean_degree: f64,
) {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    for w in order.windows(2) {
        b.add_edge(offset + w[0], offset + w[1], 1.0).unwrap();
    }
    let extra = (mean_degree * n as f64 / 2.0) as usize;
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            b.add_edge(offset + u, offset + v, 1.0).unwrap();
        }
    }
}

/// A `w × h` grid with `shortcuts` random extra edges: connected, with a
/// low spectrum much denser than an Erdős–Rényi graph of the same size.
pub fn random_grid<R: Rng>(rng: &mut R, w: usize, h: usize, shortcuts: usize) -> Graph {
    let n = w * h;
    let mut b = GraphBuilder::new(n);
    for i in 0..h {
        for j in 0..w {
            let v = i * w + j;
            if j + 1 < w {
                b.add_edge(v, v + 1, 1.0).unwrap();
            }
            if i + 1 < h {
                b.add_edge(v, v + w, 1.0).unwrap();
            }
        }
    }
    for _ in 0..shortcuts {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            b.add_edge(u, v, 1.0).unwrap();
        }
    }
    b.build()
}
