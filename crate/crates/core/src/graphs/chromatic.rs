use super::{Coloring, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Exact { k_star: usize, witness: Coloring },
    /// The chromatic number is larger than the requested bound.
    ExceedsBound { bound: usize },
}

impl ChromaticOutcome {
    pub fn k_star(&self) -> Option<usize> {
        match self {
            Self::Exact { k_star, .. } => Some(*k_star),
            Self::ExceedsBound { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Coloring> {
        match self {
            Self::Exact { witness, .. } => Some(witness),
            Self::ExceedsBound { .. } => None,
        }
    }
}

struct Search<'a> {
    order: &'a [usize],
    adj: &'a [Vec<usize>],
    colors: Vec<usize>,
    /// Exclusive bound on the number of colors still worth exploring.
    cap: usize,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, max_used: usize) {
        if max_used >= self.cap {
            return;
        }
        if idx == self.order.len() {
            self.cap = max_used;
            self.best = Some(self.colors.clone());
            return;
        }
        let v = self.order[idx];
        // a fresh color is only ever max_used + 1
        let top = (max_used + 1).min(self.cap - 1);
        for c in 1..=top {
            if self.adj[v].iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.run(idx + 1, max_used.max(c));
            self.colors[v] = 0;
            if max_used >= self.cap {
                return;
            }
        }
    }
}

/// Exact chromatic number by branch and bound.
///
/// Vertices are explored by decreasing degree; the first vertex gets color 1
/// and a new color is only introduced as the current maximum plus one. A
/// greedy coloring in the same order seeds the bound. With `upper_bound`,
/// the search stops as soon as it can show `χ > upper_bound`.
pub fn chromatic_number(graph: &Graph, upper_bound: Option<usize>) -> ChromaticOutcome {
    let n = graph.num_vertices();
    let adj = graph.adjacency();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));

    let mut greedy = vec![0usize; n];
    for &v in &order {
        greedy[v] = (1..)
            .find(|c| adj[v].iter().all(|&u| greedy[u] != *c))
            .expect("some color is always free");
    }
    let greedy_k = greedy.iter().copied().max().unwrap_or(1);

    let (cap, best) = match upper_bound {
        Some(b) if b < greedy_k => (b + 1, None),
        _ => (greedy_k, Some(greedy)),
    };
    let mut search = Search {
        order: &order,
        adj: &adj,
        colors: vec![0; n],
        cap,
        best,
    };
    search.run(0, 0);

    match search.best {
        Some(colors) => {
            let k_star = colors.iter().copied().max().unwrap_or(1);
            ChromaticOutcome::Exact {
                k_star,
                witness: Coloring::new(colors, k_star).expect("colors lie in 1..=k_star"),
            }
        }
        None => ChromaticOutcome::ExceedsBound {
            bound: upper_bound.unwrap_or(0),
        },
    }
}
