use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::{Error, Result};

/// Components of the braid closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSummary {
    pub component_count: usize,
    /// Cycles of the closure permutation on strands `1..=strands`, each
    /// starting at its smallest strand, ordered by that strand.
    pub cycles: Vec<Vec<usize>>,
    pub is_knot: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusSummary {
    /// First Betti number of the canonical surface (the brick count).
    pub betti: usize,
    pub components: usize,
    /// `None` for split words.
    pub genus: Option<usize>,
    pub nonsplit: bool,
}

impl BraidWord {
    /// The permutation of strand positions induced by the word, as a table
    /// `perm[start] = end` on 0-based strands.
    pub fn closure_permutation(&self) -> Vec<usize> {
        // position -> strand currently there
        let mut at: Vec<usize> = (0..self.strands()).collect();
        for &i in self.letters() {
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands()];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn closure_components(&self) -> ClosureSummary {
        let perm = self.closure_permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = perm[k];
            }
            cycles.push(cycle);
        }
        ClosureSummary { component_count: cycles.len(), is_knot: cycles.len() == 1, cycles }
    }

    /// Betti number, components and genus of the canonical Seifert surface.
    ///
    /// The surface has one disc per strand and one band per letter, so for a
    /// non-split word `b1 = length - (strands - 1)` and
    /// `g = (b1 - components + 1) / 2`. For split words the Betti number is
    /// still the brick count but no genus is reported.
    pub fn genus_summary(&self) -> GenusSummary {
        let closure = self.closure_components();
        let occurring = self.occurrences().iter().skip(1).filter(|&&c| c > 0).count();
        let betti = self.len() - occurring;
        let nonsplit = occurring == self.generator_count();
        let genus = nonsplit.then(|| {
            let twice = betti + 1 - closure.component_count;
            debug_assert_eq!(twice % 2, 0, "odd Euler characteristic");
            twice / 2
        });
        GenusSummary { betti, components: closure.component_count, genus, nonsplit }
    }

    /// Like [`genus_summary`](Self::genus_summary) but rejects split words.
    pub fn genus(&self) -> Result<usize> {
        if let Some(&missing) = self.missing_generators().first() {
            return Err(Error::SplitWord { missing });
        }
        Ok(self.genus_summary().genus.expect("nonsplit word has a genus"))
    }
}
