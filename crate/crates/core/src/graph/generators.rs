use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

/// Grid graph over `dims[0] × dims[1] × …`, vertex index in row-major order
/// (last axis fastest). With `periodic` every axis wraps around, giving a
/// torus that is `2·dims.len()`-regular.
pub fn generate_lattice(dims: &[usize], periodic: bool) -> Result<Graph> {
    if dims.is_empty() || dims.len() > 4 {
        return Err(Error::InvalidArgument(format!(
            "lattice needs 1 to 4 axes, got {}",
            dims.len()
        )));
    }
    if dims.contains(&0) {
        return Err(Error::InvalidArgument("lattice axes must be positive".into()));
    }
    if periodic && dims.iter().any(|&d| d < 3) {
        return Err(Error::InvalidArgument(
            "periodic axes need length at least 3".into(),
        ));
    }
    let n: usize = dims.iter().product();
    // strides[a] is the index step along axis a.
    let mut strides = vec![1usize; dims.len()];
    for a in (0..dims.len() - 1).rev() {
        strides[a] = strides[a + 1] * dims[a + 1];
    }
    let mut builder = GraphBuilder::new(n);
    for v in 0..n {
        for (&len, &stride) in dims.iter().zip(&strides) {
            let coord = (v / stride) % len;
            if coord + 1 < len {
                builder.add_edge(v, v + stride, 1.0)?;
            } else if periodic {
                builder.add_edge(v, v - coord * stride, 1.0)?;
            }
        }
    }
    Ok(builder.build())
}

/// Cycle graph `C_n`, the one-dimensional periodic lattice.
pub fn generate_cycle(n: usize) -> Result<Graph> {
    generate_lattice(&[n], true)
}

/// Complete graph `K_n`.
pub fn generate_complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    let mut builder = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            builder.add_edge(u, v, 1.0)?;
        }
    }
    Ok(builder.build())
}

/// Renames vertex `i` to `perm[i]`. Labels follow their vertices.
pub fn permute_vertices(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.n();
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has length {}, graph has {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument(
                "permutation is not a bijection".into(),
            ));
        }
    }
    let mut builder = GraphBuilder::new(n).weighted(g.is_weighted());
    for (u, v, w) in g.edges() {
        builder.add_edge(perm[u], perm[v], w)?;
    }
    let labels = g.labels().map(|old| {
        let mut labels = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = old[i];
        }
        labels
    });
    Ok(builder.build().with_labels(labels))
}
