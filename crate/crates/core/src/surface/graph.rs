use std::collections::VecDeque;

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self { adjacency: vec![Vec::new(); vertex_count] }
    }

    /// Builds a graph from an edge list. Loops and repeated edges are ignored.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.has_edge(u, v) {
            return;
        }
        insert_sorted(&mut self.adjacency[u], v);
        insert_sorted(&mut self.adjacency[v], u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// The subgraph induced by `vertices`; vertex `k` of the result is
    /// `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            local[v] = k;
        }
        let mut g = Graph::new(vertices.len());
        for (k, &v) in vertices.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if local[w] != usize::MAX && k < local[w] {
                    g.add_edge(k, local[w]);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// A simple path, possibly a single vertex. The empty graph is not a path.
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || !self.is_connected() || self.max_degree() > 2 {
            return false;
        }
        n <= 2 || self.adjacency.iter().filter(|ns| ns.len() <= 1).count() == 2
    }

    /// For a tree with a single branch vertex: that vertex and its sorted arm
    /// lengths (number of vertices on each arm).
    pub fn arm_lengths(&self) -> Option<(usize, Vec<usize>)> {
        if !self.is_tree() {
            return None;
        }
        let mut branch = (0..self.vertex_count()).filter(|&v| self.degree(v) >= 3);
        let center = branch.next()?;
        if branch.next().is_some() {
            return None;
        }
        let mut arms: Vec<usize> = self.adjacency[center]
            .iter()
            .map(|&first| {
                let (mut prev, mut cur, mut len) = (center, first, 1);
                while let Some(&next) = self.adjacency[cur].iter().find(|&&w| w != prev) {
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        arms.sort_unstable();
        Some((center, arms))
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    let at = list.binary_search(&v).unwrap_or_else(|i| i);
    list.insert(at, v);
}
