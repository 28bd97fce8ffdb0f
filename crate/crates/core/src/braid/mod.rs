//! Positive braid words and invariants of their closures.

mod closure;
mod moves;
mod word;

pub use closure::{ClosureSummary, GenusSummary};
pub use moves::Direction;
pub use word::BraidWord;

/// β_k = (σ_1 … σ_k σ_k … σ_1)^2 on k + 1 strands.
pub fn beta_k(k: usize) -> BraidWord {
    let mut half: Vec<usize> = (1..=k).collect();
    half.extend((1..=k).rev());
    let letters = [half.as_slice(), half.as_slice()].concat();
    BraidWord::new(k + 1, letters).expect("indices in range")
}
