//! Simple undirected graphs, colorings, an exact chromatic-number oracle and
//! DIMACS `.col` I/O.

mod chromatic;
mod dimacs;

use rand::Rng;

pub use chromatic::{chromatic_number, ChromaticOutcome};
pub use dimacs::{emit_dimacs, parse_dimacs};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is outside 0..{num_vertices}")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("color {color} is outside 1..={num_colors}")]
    ColorOutOfRange { color: usize, num_colors: usize },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(min, max)` pairs in sorted order; that order is the
/// canonical edge order used by every reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Duplicate edges (in either orientation) collapse.
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if num_vertices == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= num_vertices {
                    return Err(GraphError::VertexOutOfRange {
                        vertex,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self {
            num_vertices,
            edges: list,
        })
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The cycle `C_n`; needs `n ≥ 3`, smaller `n` give the path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Self::new(n, edges)
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        Self::new(n, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Indices of the edges incident to `v`, in canonical order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
    }
}

/// A `K`-labeling `Φ: V → [1, K]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, num_colors: usize) -> Result<Self, GraphError> {
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > num_colors) {
            return Err(GraphError::ColorOutOfRange { color, num_colors });
        }
        Ok(Self { colors, num_colors })
    }

    /// Uses the largest color present as `K`.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self, GraphError> {
        let k = colors.iter().copied().max().unwrap_or(1).max(1);
        Self::new(colors, k)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// The declared `K`.
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Number of distinct colors actually used.
    pub fn num_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Same labeling with a larger declared `K`.
    pub fn with_num_colors(&self, num_colors: usize) -> Result<Self, GraphError> {
        Self::new(self.colors.clone(), num_colors)
    }
}

/// True iff no edge is monochromatic.
pub fn is_proper_coloring(graph: &Graph, coloring: &Coloring) -> Result<bool, GraphError> {
    if coloring.colors.len() != graph.num_vertices {
        return Err(GraphError::ColoringLength {
            expected: graph.num_vertices,
            got: coloring.colors.len(),
        });
    }
    Ok(graph
        .edges
        .iter()
        .all(|&(u, v)| coloring.colors[u] != coloring.colors[v]))
}

/// The graph drawn in the reference example: five vertices, six edges,
/// chromatic number three.
pub fn example_graph() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4)]).expect("valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes_edges() {
        let g = Graph::new(3, [(2, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(g.edge_index(2, 0), Some(1));
        assert_eq!(Graph::new(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert_eq!(Graph::new(0, []), Err(GraphError::NoVertices));
    }

    #[test]
    fn families() {
        assert_eq!(Graph::complete(4).unwrap().num_edges(), 6);
        assert_eq!(Graph::cycle(5).unwrap().num_edges(), 5);
        assert_eq!(Graph::path(4).unwrap().num_edges(), 3);
        assert_eq!(Graph::empty(3).unwrap().num_edges(), 0);
    }

    #[test]
    fn example_coloring_is_proper() {
        let g = example_graph();
        let c = Coloring::new(vec![1, 2, 3, 1, 1], 3).unwrap();
        assert!(is_proper_coloring(&g, &c).unwrap());
        assert_eq!(c.num_used(), 3);
    }

    #[test]
    fn monochromatic_edge_is_improper() {
        let g = Graph::path(2).unwrap();
        let c = Coloring::new(vec![1, 1], 1).unwrap();
        assert!(!is_proper_coloring(&g, &c).unwrap());
    }

    #[test]
    fn edgeless_graph_accepts_any_labeling() {
        let g = Graph::empty(4).unwrap();
        let c = Coloring::new(vec![1, 1, 2, 1], 2).unwrap();
        assert!(is_proper_coloring(&g, &c).unwrap());
    }

    #[test]
    fn coloring_validation() {
        assert!(matches!(
            Coloring::new(vec![0, 1], 2),
            Err(GraphError::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            Coloring::new(vec![3], 2),
            Err(GraphError::ColorOutOfRange { .. })
        ));
        let g = Graph::path(3).unwrap();
        let c = Coloring::new(vec![1, 2], 2).unwrap();
        assert!(matches!(
            is_proper_coloring(&g, &c),
            Err(GraphError::ColoringLength { .. })
        ));
    }
}
