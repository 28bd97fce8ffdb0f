//! Induced paths that sweep across columns of a brick diagram.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::LinkingPattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn step(self, column: usize) -> Option<usize> {
        match self {
            Side::Left => column.checked_sub(1),
            Side::Right => Some(column + 1),
        }
    }
}

/// Walks from brick `start` across `columns` columns towards `side`, returning
/// the brick ids of an induced path that ends in the column `columns` away.
///
/// The walk alternates two steps. If the current brick links a brick in the
/// next column, it crosses over to the linked brick that lies closest (in
/// column order) to a brick which itself links onward; otherwise it moves one
/// brick up or down its column, towards the nearest brick that links onward.
/// Ties go to the brick with the smaller top position. Choosing the crossing
/// brick closest to an onward link keeps the in-column moves from touching
/// the previous column, so the result is induced.
///
/// Fails with [`Error::PreconditionFailed`] when a required column is missing
/// or empty, or when some column has no link onward (a disconnected
/// restriction, impossible for prime words).
pub fn extend_induced_path(
    pattern: &LinkingPattern,
    start: usize,
    side: Side,
    columns: usize,
) -> Result<Vec<usize>> {
    let fail = |msg: String| Error::PreconditionFailed(msg);
    let start_vertex =
        pattern.vertex_of(start).ok_or_else(|| fail(format!("no brick with id {start}")))?;
    let bricks = pattern.bricks();
    let graph = pattern.graph();
    let first_column = bricks[start_vertex].column;
    let generators = pattern.word().generator_count();
    let last_column = match side {
        Side::Left => first_column.checked_sub(columns).filter(|&c| c >= 1),
        Side::Right => Some(first_column + columns).filter(|&c| c <= generators),
    }
    .ok_or_else(|| fail(format!("{columns} columns {side:?} of column {first_column} leave the braid")))?;

    // Vertices of each column (top to bottom), indexed by column number.
    let mut by_column = vec![Vec::new(); generators + 2];
    for (v, b) in bricks.iter().enumerate() {
        by_column[b.column].push(v);
    }
    let rank_of = |v: usize| by_column[bricks[v].column].iter().position(|&u| u == v).unwrap();
    let links_into = |v: usize, column: usize| graph.neighbors(v).iter().any(|&w| bricks[w].column == column);
    // ranks of the bricks in `column` that link into the column after it
    let onward_ranks = |column: usize| -> Vec<usize> {
        match side.step(column) {
            Some(next) if next < by_column.len() => by_column[column]
                .iter()
                .enumerate()
                .filter(|&(_, &v)| links_into(v, next))
                .map(|(r, _)| r)
                .collect(),
            _ => Vec::new(),
        }
    };
    let distance = |rank: usize, targets: &[usize]| targets.iter().map(|&t| rank.abs_diff(t)).min();

    let mut path = vec![start_vertex];
    let mut current = start_vertex;
    let mut column = first_column;
    while column != last_column {
        let next = side.step(column).expect("inside the braid");
        if by_column[next].is_empty() {
            return Err(fail(format!("column {next} has no bricks")));
        }
        let linked: Vec<usize> = graph.neighbors(current).iter().copied().filter(|&w| bricks[w].column == next).collect();
        if !linked.is_empty() {
            // cross over
            let chosen = if next == last_column {
                linked[0]
            } else {
                let onward = onward_ranks(next);
                if onward.is_empty() {
                    return Err(fail(format!("column {next} does not link onward")));
                }
                *linked
                    .iter()
                    .min_by_key(|&&w| (distance(rank_of(w), &onward).unwrap(), bricks[w].top))
                    .unwrap()
            };
            path.push(chosen);
            current = chosen;
            column = next;
        } else {
            // move within the column
            let onward = onward_ranks(column);
            let here = rank_of(current);
            let target = onward
                .iter()
                .copied()
                .min_by_key(|&r| (r.abs_diff(here), r))
                .ok_or_else(|| fail(format!("column {column} does not link into column {next}")))?;
            let step = if target < here { here - 1 } else { here + 1 };
            let w = by_column[column][step];
            path.push(w);
            current = w;
        }
    }

    if !is_induced_path(pattern, &path) {
        return Err(fail("walk did not produce an induced path".into()));
    }
    Ok(path.into_iter().map(|v| bricks[v].id).collect())
}

/// Consecutive vertices adjacent, all other pairs non-adjacent, no repeats.
pub fn is_induced_path(pattern: &LinkingPattern, vertices: &[usize]) -> bool {
    let g = pattern.graph();
    (0..vertices.len()).all(|a| {
        (a + 1..vertices.len()).all(|b| {
            vertices[a] != vertices[b] && g.has_edge(vertices[a], vertices[b]) == (b == a + 1)
        })
    })
}
