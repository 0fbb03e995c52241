use thiserror::Error;

use crate::bits::Bits;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("generator needs {needed} vertices or more, got {got}")]
    TooSmall { needed: usize, got: usize },
}

/// Simple undirected graph on vertices `0..n`, adjacency lists kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Bitmask of `{v} ∪ N(v)`.
    pub(crate) fn closed_neighborhood(&self, v: usize) -> Bits {
        let mut b = Bits::new(self.n);
        b.set(v);
        for &u in &self.adj[v] {
            b.set(u);
        }
        b
    }

    /// Drops isolated vertices, densely relabeling the rest in order.
    /// Returns the reduced graph and the kept original labels.
    pub fn strip_isolated(&self) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(kept.len());
        for (u, v) in self.edges() {
            g.add_edge(index[u], index[v]).expect("relabeled edge is valid");
        }
        (g, kept)
    }

    // ===== generators =====

    /// Cycle `C_n`, `n >= 3`, edges `i - (i+1 mod n)`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall { needed: 3, got: n });
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n)?;
        }
        Ok(g)
    }

    /// Path `P_n` on `n >= 1` vertices, edges `i - (i+1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooSmall { needed: 1, got: n });
        }
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i)?;
        }
        Ok(g)
    }

    /// Star `K_{1,m}`, `m >= 1`, center `0`.
    pub fn star(m: usize) -> Result<Self, GraphError> {
        if m < 1 {
            return Err(GraphError::TooSmall { needed: 1, got: m });
        }
        let mut g = Graph::empty(m + 1);
        for leaf in 1..=m {
            g.add_edge(0, leaf)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete graph edges are valid");
            }
        }
        g
    }

    /// Perfect matching `t K_2` on `2t` vertices, edges `2i - (2i+1)`.
    pub fn matching(t: usize) -> Result<Self, GraphError> {
        if t < 1 {
            return Err(GraphError::TooSmall { needed: 1, got: t });
        }
        let mut g = Graph::empty(2 * t);
        for i in 0..t {
            g.add_edge(2 * i, 2 * i + 1)?;
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("left edges valid");
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).expect("right edges valid");
        }
        g
    }
}
