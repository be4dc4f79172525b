use std::collections::HashSet;
use std::io::BufRead;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// How vertex identifiers in an edge list are based.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum IndexBase {
    /// Use the smallest identifier seen.
    #[default]
    Auto,
    Zero,
    One,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub index_base: IndexBase,
    /// Read the third column (edge-list) or entry values (Matrix Market)
    /// as edge weights.
    pub weighted: bool,
}

/// What the parser had to clean up on the way to a canonical graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseDiagnostics {
    pub lines: usize,
    pub entries: usize,
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
    pub index_base: u64,
}

#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Graph,
    pub diagnostics: ParseDiagnostics,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_weight(token: &str, line: usize) -> Result<f64> {
    let w: f64 = token
        .parse()
        .map_err(|_| parse_error(line, format!("non-numeric weight {token:?}")))?;
    if !(w.is_finite() && w > 0.0) {
        return Err(parse_error(line, format!("non-positive weight {token}")));
    }
    Ok(w)
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("non-numeric vertex id {token:?}")))
}

fn is_comment(line: &str) -> bool {
    line.starts_with('#') || line.starts_with('%')
}

/// Parses whitespace-separated `u v [w]` lines.
///
/// Vertex identifiers are compacted to `0..n` in ascending identifier order;
/// the original identifiers are kept as labels unless they already were
/// `0..n`. Direction is ignored, self-loops are dropped and repeated edges
/// merged with summed weights.
pub fn parse_edge_list<R: BufRead>(reader: R, options: ParseOptions) -> Result<Parsed> {
    let mut raw = Vec::new();
    let mut lines = 0;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        lines = lineno;
        let trimmed = line.trim();
        if trimmed.is_empty() || is_comment(trimmed) {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(u), Some(v)) = (fields.next(), fields.next()) else {
            return Err(parse_error(lineno, "expected at least two fields"));
        };
        let u = parse_id(u, lineno)?;
        let v = parse_id(v, lineno)?;
        let w = match (options.weighted, fields.next()) {
            (true, Some(token)) => parse_weight(token, lineno)?,
            _ => 1.0,
        };
        raw.push((u, v, w, lineno));
    }
    if raw.is_empty() {
        return Err(Error::EmptyGraph);
    }

    let mut ids: Vec<u64> = raw.iter().flat_map(|&(u, v, _, _)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let base = match options.index_base {
        IndexBase::Auto => ids[0],
        IndexBase::Zero => 0,
        IndexBase::One => 1,
    };
    if ids[0] < base {
        let line = raw
            .iter()
            .find(|&&(u, v, _, _)| u < base || v < base)
            .map_or(0, |r| r.3);
        return Err(parse_error(
            line,
            format!("vertex id {} below index base {base}", ids[0]),
        ));
    }

    let index = |id: u64| ids.binary_search(&id).expect("id collected above");
    let mut builder = GraphBuilder::new(ids.len()).weighted(options.weighted);
    for &(u, v, w, _) in &raw {
        builder.add_edge(index(u), index(v), w)?;
    }
    let stats = builder.stats();
    let identity = ids.iter().enumerate().all(|(i, &id)| id == i as u64);
    let labels = (!identity).then_some(ids);
    Ok(Parsed {
        graph: builder.build().with_labels(labels),
        diagnostics: ParseDiagnostics {
            lines,
            entries: raw.len(),
            self_loops_dropped: stats.self_loops_dropped,
            duplicates_merged: stats.duplicates_merged,
            index_base: base,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MmField {
    Pattern,
    Real,
}

/// Parses a Matrix Market coordinate file as a graph adjacency matrix.
///
/// The vertex count is the declared matrix order, so isolated vertices are
/// kept. `general` matrices are symmetrized. Entry values of `real` and
/// `integer` matrices must be positive; they become weights only when
/// `options.weighted` is set.
pub fn parse_matrix_market<R: BufRead>(reader: R, options: ParseOptions) -> Result<Parsed> {
    let mut lines = reader.lines().enumerate();
    let header = match lines.next() {
        Some((_, line)) => line?,
        None => return Err(Error::EmptyGraph),
    };
    let tokens: Vec<String> = header
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(parse_error(1, "missing %%MatrixMarket header"));
    }
    if tokens[1] != "matrix" {
        return Err(Error::UnsupportedFormat(format!("object {}", tokens[1])));
    }
    if tokens[2] != "coordinate" {
        return Err(Error::UnsupportedFormat(format!("{} storage", tokens[2])));
    }
    let field = match tokens[3].as_str() {
        "pattern" => MmField::Pattern,
        "real" | "integer" => MmField::Real,
        other => return Err(Error::UnsupportedFormat(format!("{other} field"))),
    };
    match tokens[4].as_str() {
        "symmetric" | "general" => {}
        other => return Err(Error::UnsupportedFormat(format!("{other} symmetry"))),
    }

    let mut size: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let general = tokens[4] == "general";
    let mut directed_seen = HashSet::new();
    let mut directed_duplicates = 0;
    let mut entries = 0;
    let mut last_line = 1;
    for (idx, line) in lines {
        let line = line?;
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let Some((n, nnz)) = size else {
            if fields.len() != 3 {
                return Err(parse_error(lineno, "expected size line `rows cols entries`"));
            }
            let dims: Vec<usize> = fields
                .iter()
                .map(|t| {
                    t.parse()
                        .map_err(|_| parse_error(lineno, format!("non-numeric size {t:?}")))
                })
                .collect::<Result<_>>()?;
            if dims[0] != dims[1] {
                return Err(parse_error(
                    lineno,
                    format!("adjacency matrix must be square, got {}x{}", dims[0], dims[1]),
                ));
            }
            size = Some((dims[0], dims[2]));
            builder = Some(GraphBuilder::new(dims[0]).weighted(options.weighted));
            continue;
        };
        let expected = if field == MmField::Pattern { 2 } else { 3 };
        if fields.len() < expected {
            return Err(parse_error(
                lineno,
                format!("expected {expected} fields, got {}", fields.len()),
            ));
        }
        entries += 1;
        if entries > nnz {
            return Err(parse_error(
                lineno,
                format!("more entries than the {nnz} declared"),
            ));
        }
        let i = parse_id(fields[0], lineno)?;
        let j = parse_id(fields[1], lineno)?;
        if i == 0 || j == 0 || i > n as u64 || j > n as u64 {
            return Err(parse_error(
                lineno,
                format!("entry ({i}, {j}) outside 1..={n}"),
            ));
        }
        let w = match field {
            MmField::Pattern => 1.0,
            MmField::Real => parse_weight(fields[2], lineno)?,
        };
        let w = if options.weighted { w } else { 1.0 };
        if general && !directed_seen.insert((i, j)) {
            directed_duplicates += 1;
        }
        builder
            .as_mut()
            .expect("builder exists once size is known")
            .add_edge(i as usize - 1, j as usize - 1, w)?;
    }
    let (Some((n, nnz)), Some(builder)) = (size, builder) else {
        return Err(Error::EmptyGraph);
    };
    if entries != nnz {
        return Err(parse_error(
            last_line,
            format!("size line declares {nnz} entries, found {entries}"),
        ));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let stats = builder.stats();
    let labels = (1..=n as u64).collect();
    Ok(Parsed {
        graph: builder.build().with_labels(Some(labels)),
        diagnostics: ParseDiagnostics {
            lines: last_line,
            entries,
            self_loops_dropped: stats.self_loops_dropped,
            // `general` files may list both directions of an edge; only a
            // repeated (i, j) entry counts as a duplicate there.
            duplicates_merged: if general {
                directed_duplicates
            } else {
                stats.duplicates_merged
            },
            index_base: 1,
        },
    })
}
