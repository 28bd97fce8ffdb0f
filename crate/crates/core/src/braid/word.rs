use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A positive braid word: a strand count together with a sequence of
/// generator indices.
///
/// Letter `i` stands for the positive crossing σ_i between strands `i` and
/// `i + 1`, so every letter lies in `1..=strands - 1`. Words are plain letter
/// sequences; two words related by braid relations are different values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&index) = letters.iter().find(|&&i| i == 0 || i >= strands) {
            return Err(Error::IndexOutOfRange { index, strands });
        }
        Ok(Self { strands, letters })
    }

    /// Builds a word on `max index + 1` strands (one strand for the empty word).
    pub fn from_letters(letters: Vec<usize>) -> Result<Self> {
        let strands = letters.iter().copied().max().unwrap_or(0) + 1;
        Self::new(strands, letters)
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of generators σ_1, …, σ_{strands-1}.
    pub fn generator_count(&self) -> usize {
        self.strands - 1
    }

    /// Occurrence count of every generator; index 0 is unused.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands];
        for &i in &self.letters {
            counts[i] += 1;
        }
        counts
    }

    /// The generators that never occur in the word.
    pub fn missing_generators(&self) -> Vec<usize> {
        let counts = self.occurrences();
        (1..self.strands).filter(|&i| counts[i] == 0).collect()
    }

    pub fn is_nonsplit(&self) -> bool {
        self.missing_generators().is_empty()
    }

    /// Same word with a larger strand count.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }

    /// Letters rotated left by `k` (modulo the length).
    pub fn cyclic_permute(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self { strands: self.strands, letters }
    }

    pub fn reverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { strands: self.strands, letters }
    }

    /// Deletes every letter whose generator is not in `keep`. Indices are not
    /// renumbered and the strand count is unchanged.
    pub fn induced_subword(&self, keep: &BTreeSet<usize>) -> Self {
        let letters = self.letters.iter().copied().filter(|i| keep.contains(i)).collect();
        Self { strands: self.strands, letters }
    }

    /// The lexicographically smallest cyclic rotation.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.len().max(1))
            .map(|k| self.cyclic_permute(k))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    /// Parses the whitespace-separated token grammar `('s')? INT ('^' INT)?`.
    ///
    /// Without a hint the strand count is `max index + 1`.
    pub fn parse(text: &str, strands_hint: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (index, power) = parse_token(token)?;
            letters.extend(std::iter::repeat(index).take(power));
        }
        match strands_hint {
            Some(strands) => Self::new(strands, letters),
            None => Self::from_letters(letters),
        }
    }
}

fn parse_token(token: &str) -> Result<(usize, usize)> {
    let malformed = |reason: &str| Error::MalformedToken {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let body = token.strip_prefix('s').unwrap_or(token);
    let (base, power) = match body.split_once('^') {
        Some((base, power)) => (base, Some(power)),
        None => (body, None),
    };
    let number = |s: &str, what: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed(&format!("expected a positive integer {what}")));
        }
        let value: usize = s.parse().map_err(|_| malformed(&format!("{what} too large")))?;
        if value == 0 {
            return Err(malformed(&format!("{what} must be at least 1")));
        }
        Ok(value)
    };
    let index = number(base, "generator index")?;
    let power = match power {
        Some(p) => number(p, "exponent")?,
        None => 1,
    };
    Ok((index, power))
}

impl fmt::Display for BraidWord {
    /// Run-length caret notation, e.g. `s1^2 s2^2 s1 s3 s2^2 s3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut rest = self.letters.as_slice();
        while let Some(&head) = rest.first() {
            let run = rest.iter().take_while(|&&i| i == head).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "s{head}")?;
            } else {
                write!(f, "s{head}^{run}")?;
            }
            rest = &rest[run..];
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[usize]) -> BraidWord {
        BraidWord::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn parses_caret_notation() {
        let w = BraidWord::parse("s1^2 s2^2 s1 s3 s2^2 s3", None).unwrap();
        assert_eq!(w.letters(), &[1, 1, 2, 2, 1, 3, 2, 2, 3]);
        assert_eq!(w.strands(), 4);
    }

    #[test]
    fn parses_bare_integers_and_empty() {
        let w = BraidWord::parse("1 1 1", None).unwrap();
        assert_eq!(w.letters(), &[1, 1, 1]);
        assert_eq!(w.strands(), 2);

        let e = BraidWord::parse("", Some(2)).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.strands(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BraidWord::parse("s0", None), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("x1", None), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("s1^", None), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("s1^0", None), Err(Error::MalformedToken { .. })));
        assert!(matches!(BraidWord::parse("s-1", None), Err(Error::MalformedToken { .. })));
        assert_eq!(
            BraidWord::parse("s3", Some(3)),
            Err(Error::IndexOutOfRange { index: 3, strands: 3 })
        );
        assert_eq!(BraidWord::parse("", Some(0)), Err(Error::NoStrands));
    }

    #[test]
    fn formats_runs() {
        assert_eq!(word(&[1, 1, 1]).to_string(), "s1^3");
        assert_eq!(word(&[1, 1, 2, 2, 1, 3, 2, 2, 3]).to_string(), "s1^2 s2^2 s1 s3 s2^2 s3");
        assert_eq!(BraidWord::empty(3).unwrap().to_string(), "");
    }

    #[test]
    fn rotations_and_reversal() {
        assert_eq!(word(&[1, 2, 1]).cyclic_permute(1).letters(), &[2, 1, 1]);
        assert_eq!(word(&[1, 1, 2]).cyclic_permute(2).letters(), &[2, 1, 1]);
        let w = word(&[1, 3, 2, 2]);
        assert_eq!(w.cyclic_permute(0), w);
        assert_eq!(w.cyclic_permute(4), w);
        assert_eq!(word(&[1, 2, 3]).reverse().letters(), &[3, 2, 1]);
        assert_eq!(word(&[1, 2, 1]).reverse().letters(), &[1, 2, 1]);
        let e = BraidWord::empty(2).unwrap();
        assert_eq!(e.reverse(), e);
        assert_eq!(e.cyclic_permute(5), e);
    }

    #[test]
    fn induced_subwords() {
        let x = word(&[1, 1, 2, 2, 1, 3, 2, 2, 3]);
        let s: BTreeSet<_> = [2, 3].into();
        let sub = x.induced_subword(&s);
        assert_eq!(sub.letters(), &[2, 2, 3, 2, 2, 3]);
        assert_eq!(sub.strands(), 4);
        let all: BTreeSet<_> = (1..4).collect();
        assert_eq!(x.induced_subword(&all), x);
        let y = word(&[1, 1, 2, 1, 2, 2]);
        assert_eq!(y.induced_subword(&[1].into()).letters(), &[1, 1, 1]);
    }

    #[test]
    fn canonical_rotation_is_minimal() {
        assert_eq!(word(&[2, 1, 1]).canonical_rotation().letters(), &[1, 1, 2]);
        assert_eq!(word(&[2, 1, 2, 1]).canonical_rotation().letters(), &[1, 2, 1, 2]);
    }
}
