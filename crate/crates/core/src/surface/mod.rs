//! Brick diagrams of canonical Seifert surfaces and their linking patterns.

mod bricks;
mod graph;
mod svg;

use serde::{Deserialize, Serialize};

pub use bricks::{Brick, BrickDiagram, LinkingPattern, PatternExport};
pub use graph::Graph;
pub use svg::render_svg;

use crate::braid::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Primality {
    /// Some generator never occurs.
    Split,
    /// Some generator occurs exactly once, or the linking pattern is
    /// disconnected: the closure is a connected sum (or destabilizes).
    Reducible,
    Prime,
}

impl Primality {
    pub fn as_str(self) -> &'static str {
        match self {
            Primality::Split => "split",
            Primality::Reducible => "reducible",
            Primality::Prime => "prime",
        }
    }
}

/// Primality of the closure, via connectivity of the linking pattern.
pub fn primality_report(word: &BraidWord) -> Primality {
    let counts = word.occurrences();
    let counts = &counts[1..];
    if counts.contains(&0) {
        Primality::Split
    } else if counts.contains(&1) || !LinkingPattern::new(word).is_connected() {
        Primality::Reducible
    } else {
        Primality::Prime
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn primality() {
        assert_eq!(primality_report(&word(4, &[1, 1, 2, 2, 1, 3, 2, 2, 3])), Primality::Prime);
        assert_eq!(primality_report(&word(4, &[1, 1, 1, 3, 3, 3])), Primality::Split);
        assert_eq!(primality_report(&word(4, &[1, 1, 1, 2, 3, 3, 3])), Primality::Reducible);
        // every generator at least twice, but the two columns never interleave
        assert_eq!(primality_report(&word(3, &[1, 1, 2, 2])), Primality::Reducible);
        assert_eq!(primality_report(&word(2, &[1, 1, 1])), Primality::Prime);
    }
}
