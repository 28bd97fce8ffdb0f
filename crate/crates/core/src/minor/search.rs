//! Induced subgraph search by backtracking.

use crate::surface::Graph;

/// Largest target the search accepts.
pub const MAX_TARGET_VERTICES: usize = 16;

/// Finds an induced embedding of `target` into `host`.
///
/// Returns `map` with `map[t]` the host vertex assigned to target vertex `t`,
/// such that `t ~ u` in the target exactly when `map[t] ~ map[u]` in the
/// host. The result is deterministic: target vertices are placed in a fixed
/// order (most constrained first) and host candidates are tried in ascending
/// order, so the first match found is always the same.
pub fn find_induced_subgraph(host: &Graph, target: &Graph) -> Option<Vec<usize>> {
    assert!(
        target.vertex_count() <= MAX_TARGET_VERTICES,
        "target has more than {MAX_TARGET_VERTICES} vertices"
    );
    let k = target.vertex_count();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > host.vertex_count() || target.max_degree() > host.max_degree() {
        return None;
    }
    let order = placement_order(target);
    // anchor[d]: an earlier-placed neighbour of order[d], if any
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(d, &t)| order[..d].iter().copied().find(|&s| target.has_edge(s, t)))
        .collect();

    let mut search = Search {
        host,
        target,
        order: &order,
        anchor: &anchor,
        map: vec![usize::MAX; k],
        used: vec![false; host.vertex_count()],
    };
    search.place(0).then_some(search.map)
}

/// Greedy order: start from a vertex of maximum degree, then repeatedly take
/// the vertex with the most already-placed neighbours (ties: higher degree,
/// then lower index).
fn placement_order(target: &Graph) -> Vec<usize> {
    let k = target.vertex_count();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], target.degree(a))
                    .cmp(&(links[b], target.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        for &w in target.neighbors(next) {
            links[w] += 1;
        }
        order.push(next);
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    target: &'a Graph,
    order: &'a [usize],
    anchor: &'a [Option<usize>],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let t = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some(s) => self.host.neighbors(self.map[s]).to_vec(),
            None => (0..self.host.vertex_count()).collect(),
        };
        for h in candidates {
            if self.used[h] || self.host.degree(h) < self.target.degree(t) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&s| {
                self.target.has_edge(s, t) == self.host.has_edge(self.map[s], h)
            });
            if !consistent {
                continue;
            }
            self.map[t] = h;
            self.used[h] = true;
            if self.place(depth + 1) {
                return true;
            }
            self.used[h] = false;
            self.map[t] = usize::MAX;
        }
        false
    }
}

/// Checks that `map` is an injective induced embedding of `target` in `host`.
pub fn is_induced_embedding(host: &Graph, target: &Graph, map: &[usize]) -> bool {
    let k = target.vertex_count();
    if map.len() != k || map.iter().any(|&h| h >= host.vertex_count()) {
        return false;
    }
    (0..k).all(|a| {
        (a + 1..k).all(|b| map[a] != map[b] && target.has_edge(a, b) == host.has_edge(map[a], map[b]))
    })
}
