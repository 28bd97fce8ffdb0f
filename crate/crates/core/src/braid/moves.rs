//! Braid relations on positive words and the window normalization loop.
//!
//! Positions are 1-based throughout, matching the letter numbering used for
//! bricks.

use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::{Error, Result};

/// Which way a braid relation `i j i -> j i j` moves the middle letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// `i, i+1, i` becomes `i+1, i, i+1`.
    Up,
    /// `i, i-1, i` becomes `i-1, i, i-1`.
    Down,
}

impl BraidWord {
    /// Swaps the letters at `pos` and `pos + 1`, which must be far apart.
    pub fn apply_commutation(&self, pos: usize) -> Result<Self> {
        if pos == 0 || pos >= self.len() {
            return Err(not_applicable(pos, "position out of range"));
        }
        let (a, b) = (self.letters()[pos - 1], self.letters()[pos]);
        if a.abs_diff(b) < 2 {
            return Err(not_applicable(pos, "generators are equal or adjacent"));
        }
        let mut letters = self.letters().to_vec();
        letters.swap(pos - 1, pos);
        BraidWord::new(self.strands(), letters)
    }

    /// Rewrites the three letters starting at `pos` with the braid relation.
    pub fn apply_braid_relation(&self, pos: usize, direction: Direction) -> Result<Self> {
        if pos == 0 || pos + 2 > self.len() {
            return Err(not_applicable(pos, "window runs past the end of the word"));
        }
        let w = &self.letters()[pos - 1..pos + 2];
        let (outer, middle) = (w[0], w[1]);
        let matches = w[2] == outer
            && match direction {
                Direction::Up => middle == outer + 1,
                Direction::Down => middle + 1 == outer,
            };
        if !matches {
            return Err(not_applicable(pos, "window is not of the form i, i±1, i"));
        }
        let mut letters = self.letters().to_vec();
        letters[pos - 1..pos + 2].copy_from_slice(&[middle, outer, middle]);
        BraidWord::new(self.strands(), letters)
    }

    /// Applies the four window moves
    ///
    /// ```text
    /// (i-1)(i-2)(i-1) -> (i-2)(i-1)(i-2)
    /// (i)(i-1)(i)     -> (i-1)(i)(i-1)
    /// (i)(i+1)(i)     -> (i+1)(i)(i+1)
    /// (i+1)(i+2)(i+1) -> (i+2)(i+1)(i+2)
    /// ```
    ///
    /// to cyclic rotations of the word until none applies. Moves with an
    /// index outside `1..strands` are skipped.
    ///
    /// Each round picks the first match over cyclic start positions in
    /// ascending order (this is the order in which a scan over rotations
    /// `0, 1, …` and then positions finds them), with ties broken by the move
    /// order above. The move is applied in place on the cyclic word, so the
    /// returned word is in the frame of the input (rotation offset 0).
    ///
    /// Termination: moves 1 and 4 lower `#σ_{i-1} + #σ_i + #σ_{i+1}`, moves
    /// 2 and 3 keep it and lower `#σ_i`.
    pub fn normalize_window(&self, i: usize) -> (Self, usize) {
        let patterns = window_moves(i, self.strands());
        let mut letters = self.letters().to_vec();
        let n = letters.len();
        let mut moves = 0;
        if n < 3 {
            return (self.clone(), 0);
        }
        'outer: loop {
            for start in 0..n {
                let idx = [start, (start + 1) % n, (start + 2) % n];
                let triple = idx.map(|k| letters[k]);
                for &(outer, middle) in &patterns {
                    if triple == [outer, middle, outer] {
                        for (k, value) in idx.into_iter().zip([middle, outer, middle]) {
                            letters[k] = value;
                        }
                        moves += 1;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        let word = BraidWord::new(self.strands(), letters).expect("moves keep indices in range");
        (word, moves)
    }

    /// True if one of the four window moves matches some cyclic rotation.
    pub fn admits_window_move(&self, i: usize) -> bool {
        let n = self.len();
        if n < 3 {
            return false;
        }
        let patterns = window_moves(i, self.strands());
        let l = self.letters();
        (0..n).any(|s| {
            let t = [l[s], l[(s + 1) % n], l[(s + 2) % n]];
            patterns.iter().any(|&(o, m)| t == [o, m, o])
        })
    }
}

/// `(outer, middle)` pairs of the four window moves, in scan order.
fn window_moves(i: usize, strands: usize) -> Vec<(usize, usize)> {
    let i = i as isize;
    [(i - 1, i - 2), (i, i - 1), (i, i + 1), (i + 1, i + 2)]
        .into_iter()
        .filter(|&(o, m)| o >= 1 && m >= 1 && (o as usize) < strands && (m as usize) < strands)
        .map(|(o, m)| (o as usize, m as usize))
        .collect()
}

fn not_applicable(pos: usize, reason: &str) -> Error {
    Error::NotApplicable { pos, reason: reason.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, letters: &[usize]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn commutation() {
        assert_eq!(word(4, &[1, 3, 2]).apply_commutation(1).unwrap().letters(), &[3, 1, 2]);
        assert_eq!(word(5, &[2, 4, 4, 2]).apply_commutation(3).unwrap().letters(), &[2, 4, 2, 4]);
        assert!(matches!(word(3, &[1, 2, 1]).apply_commutation(1), Err(Error::NotApplicable { .. })));
        assert!(matches!(word(3, &[1, 1]).apply_commutation(1), Err(Error::NotApplicable { .. })));
        assert!(matches!(word(4, &[1, 3]).apply_commutation(2), Err(Error::NotApplicable { .. })));
    }

    #[test]
    fn braid_relation() {
        let w = word(3, &[2, 1, 2]).apply_braid_relation(1, Direction::Down).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1]);
        let w = word(3, &[1, 2, 1]).apply_braid_relation(1, Direction::Up).unwrap();
        assert_eq!(w.letters(), &[2, 1, 2]);
        assert!(word(3, &[1, 1, 2]).apply_braid_relation(1, Direction::Up).is_err());
        assert!(word(3, &[1, 1, 2]).apply_braid_relation(1, Direction::Down).is_err());
        assert!(word(3, &[1, 2, 1]).apply_braid_relation(1, Direction::Down).is_err());
        assert!(word(3, &[1, 2]).apply_braid_relation(1, Direction::Up).is_err());
    }

    #[test]
    fn normalize_single_move() {
        let (w, moves) = word(4, &[2, 1, 2]).normalize_window(2);
        assert_eq!(w.letters(), &[1, 2, 1]);
        assert_eq!(moves, 1);
    }

    #[test]
    fn normalize_fixed_point() {
        let w = word(3, &[1, 1, 2, 2]);
        assert_eq!(w.normalize_window(2), (w.clone(), 0));
    }

    #[test]
    fn normalize_only_rewrites_the_listed_moves() {
        // 3 2 3 is the inverse of move 3 for i = 2, so nothing applies.
        let w = word(5, &[3, 2, 3, 1]);
        assert_eq!(w.normalize_window(2), (w.clone(), 0));
        // For i = 3 it is move 2; the result 2 3 2 1 then admits move 1
        // (2 1 2 across the wrap-around), giving 1 2 1 3 read cyclically.
        let (out, moves) = w.normalize_window(3);
        assert_eq!(moves, 2);
        assert_eq!(out.letters(), &[1, 3, 1, 2]);
        assert!(!out.admits_window_move(3));
    }

    #[test]
    fn normalize_uses_wraparound_windows() {
        // The only match (2 1 2) straddles the end of the word.
        let (out, moves) = word(3, &[1, 2, 2]).normalize_window(2);
        assert_eq!(moves, 1);
        assert_eq!(out.letters(), &[2, 1, 1]);
    }
}
