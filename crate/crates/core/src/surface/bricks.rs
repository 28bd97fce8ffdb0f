use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use crate::braid::BraidWord;

/// A rectangle of the brick diagram, spanned by two consecutive occurrences
/// of the generator σ_column at 1-based word positions `top < bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Brick {
    pub id: usize,
    pub column: usize,
    pub top: usize,
    pub bottom: usize,
}

impl Brick {
    /// `self` (column i) and `right` (column i+1) overlap with `right`
    /// starting inside `self`.
    pub fn right_begins_inside(&self, right: &Brick) -> bool {
        self.top < right.top && right.top < self.bottom && self.bottom < right.bottom
    }

    /// `self` (column i) and `right` (column i+1) overlap with `right`
    /// ending inside `self`.
    pub fn right_ends_inside(&self, right: &Brick) -> bool {
        right.top < self.top && self.top < right.bottom && right.bottom < self.bottom
    }

    /// Whether the two bricks link: consecutive in one column, or strictly
    /// interleaved spans in adjacent columns.
    pub fn links(&self, other: &Brick) -> bool {
        if self.column == other.column {
            self.bottom == other.top || other.bottom == self.top
        } else if self.column + 1 == other.column {
            self.right_begins_inside(other) || self.right_ends_inside(other)
        } else if other.column + 1 == self.column {
            other.links(self)
        } else {
            false
        }
    }
}

/// The brick diagram of the canonical Seifert surface of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrickDiagram {
    word: BraidWord,
    /// Sorted by `(column, top)`; `bricks[k].id == k`.
    bricks: Vec<Brick>,
}

impl BrickDiagram {
    pub fn new(word: &BraidWord) -> Self {
        let mut last_seen = vec![None; word.strands()];
        let mut spans = Vec::new();
        for (k, &i) in word.letters().iter().enumerate() {
            let pos = k + 1;
            if let Some(prev) = last_seen[i] {
                spans.push((i, prev, pos));
            }
            last_seen[i] = Some(pos);
        }
        spans.sort_unstable();
        let bricks = spans
            .into_iter()
            .enumerate()
            .map(|(id, (column, top, bottom))| Brick { id, column, top, bottom })
            .collect();
        Self { word: word.clone(), bricks }
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn bricks(&self) -> &[Brick] {
        &self.bricks
    }

    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    /// Bricks of one column, top to bottom.
    pub fn column(&self, column: usize) -> &[Brick] {
        let start = self.bricks.partition_point(|b| b.column < column);
        let end = self.bricks.partition_point(|b| b.column <= column);
        &self.bricks[start..end]
    }

    pub fn linking_pattern(&self) -> LinkingPattern {
        LinkingPattern::from_bricks(self.word.clone(), self.bricks.clone())
    }
}

/// The linking pattern: one vertex per brick, edges between linking bricks.
///
/// Vertex `k` is `bricks()[k]`; brick ids refer to the diagram the pattern
/// was built from, so they survive restriction by [`induced`](Self::induced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingPattern {
    word: BraidWord,
    bricks: Vec<Brick>,
    graph: Graph,
}

/// JSON shape `{vertices: [{id, column, top, bottom}], edges: [[id, id]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternExport {
    pub vertices: Vec<Brick>,
    pub edges: Vec<[usize; 2]>,
}

impl LinkingPattern {
    pub fn new(word: &BraidWord) -> Self {
        BrickDiagram::new(word).linking_pattern()
    }

    fn from_bricks(word: BraidWord, bricks: Vec<Brick>) -> Self {
        let mut graph = Graph::new(bricks.len());
        for (u, a) in bricks.iter().enumerate() {
            for (v, b) in bricks.iter().enumerate().skip(u + 1) {
                if b.column > a.column + 1 {
                    break;
                }
                if a.links(b) {
                    graph.add_edge(u, v);
                }
            }
        }
        Self { word, bricks, graph }
    }

    /// The word the underlying brick diagram was built from.
    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn bricks(&self) -> &[Brick] {
        &self.bricks
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.graph.is_path()
    }

    /// Restriction to the bricks whose column lies in `columns`.
    pub fn induced(&self, columns: &BTreeSet<usize>) -> LinkingPattern {
        let keep: Vec<usize> =
            (0..self.bricks.len()).filter(|&k| columns.contains(&self.bricks[k].column)).collect();
        Self {
            word: self.word.clone(),
            bricks: keep.iter().map(|&k| self.bricks[k]).collect(),
            graph: self.graph.induced(&keep),
        }
    }

    /// Local vertex indices of one column, top to bottom.
    pub fn column_vertices(&self, column: usize) -> Vec<usize> {
        (0..self.bricks.len()).filter(|&k| self.bricks[k].column == column).collect()
    }

    /// Vertex index of the brick with the given diagram id.
    pub fn vertex_of(&self, brick_id: usize) -> Option<usize> {
        self.bricks.iter().position(|b| b.id == brick_id)
    }

    /// Position-independent description: each vertex becomes `(column, rank
    /// in column)`, and the edge set is expressed in those terms.
    pub fn shape(&self) -> (Vec<(usize, usize)>, BTreeSet<((usize, usize), (usize, usize))>) {
        let mut rank = vec![0; self.bricks.len()];
        let mut labels = Vec::with_capacity(self.bricks.len());
        for k in 0..self.bricks.len() {
            let c = self.bricks[k].column;
            rank[k] = (0..k).filter(|&j| self.bricks[j].column == c).count();
            labels.push((c, rank[k]));
        }
        let edges = self.graph.edges().into_iter().map(|(u, v)| (labels[u], labels[v])).collect();
        (labels, edges)
    }

    pub fn export(&self) -> PatternExport {
        PatternExport {
            vertices: self.bricks.clone(),
            edges: self
                .graph
                .edges()
                .into_iter()
                .map(|(u, v)| [self.bricks[u].id, self.bricks[v].id])
                .collect(),
        }
    }
}
