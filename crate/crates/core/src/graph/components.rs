use super::{Graph, GraphBuilder};

/// Per-vertex component membership.
///
/// Components are numbered in order of their smallest vertex index, so
/// vertex 0 always belongs to component 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub component_id: Vec<usize>,
    pub sizes: Vec<usize>,
    /// Index of the largest component; ties go to the lowest index.
    pub largest: usize,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }
}

pub fn connected_components(g: &Graph) -> ComponentDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut component_id = vec![UNSEEN; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if component_id[root] != UNSEEN {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        component_id[root] = id;
        stack.push(root);
        while let Some(v) = stack.pop() {
            size += 1;
            for (u, _) in g.neighbors(v) {
                if component_id[u] == UNSEEN {
                    component_id[u] = id;
                    stack.push(u);
                }
            }
        }
        sizes.push(size);
    }
    let largest = sizes
        .iter()
        .enumerate()
        .fold(0, |best, (i, &s)| if s > sizes[best] { i } else { best });
    ComponentDecomposition {
        component_id,
        sizes,
        largest,
    }
}

/// Induced subgraph on the largest connected component.
///
/// Vertices keep their relative order and carry their original labels.
/// A connected graph is returned unchanged.
pub fn largest_connected_component(g: &Graph) -> Graph {
    let comps = connected_components(g);
    if comps.count() <= 1 {
        return g.clone();
    }
    let keep = comps.largest;
    let mut new_index = vec![usize::MAX; g.n()];
    let mut labels = Vec::with_capacity(comps.sizes[keep]);
    for v in (0..g.n()).filter(|&v| comps.component_id[v] == keep) {
        new_index[v] = labels.len();
        labels.push(g.label(v));
    }
    let mut builder = GraphBuilder::new(labels.len()).weighted(g.is_weighted());
    for (u, v, w) in g.edges() {
        if comps.component_id[u] == keep {
            builder
                .add_edge(new_index[u], new_index[v], w)
                .expect("edges of a canonical graph are valid");
        }
    }
    builder.build().with_labels(Some(labels))
}
