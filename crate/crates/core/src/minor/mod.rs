//! Obstruction surfaces T̃, Ẽ, X̃ in canonical Seifert surfaces.
//!
//! If the linking pattern of a word contains Γ_T̃, Γ_Ẽ or Γ_X̃ as an induced
//! subgraph, the canonical surface contains the corresponding surface as a
//! minor, and each such minor on a separate block of generator indices adds
//! one to the genus defect `g - g4_top` of the closure.

mod path;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use path::{extend_induced_path, is_induced_path, Side};
pub use search::{find_induced_subgraph, is_induced_embedding, MAX_TARGET_VERTICES};

use crate::braid::BraidWord;
use crate::surface::{primality_report, LinkingPattern, Primality};

/// Default window width for defect bounds.
pub const DEFAULT_WIDTH: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MinorKind {
    Ttilde,
    Etilde,
    Xtilde,
    /// Diagnostic only; never counted towards a defect bound.
    D5,
}

impl MinorKind {
    /// The kinds that certify genus defect.
    pub const DEFECT: [MinorKind; 3] = [MinorKind::Ttilde, MinorKind::Etilde, MinorKind::Xtilde];
    pub const ALL: [MinorKind; 4] =
        [MinorKind::Ttilde, MinorKind::Etilde, MinorKind::Xtilde, MinorKind::D5];

    pub fn defining_text(self) -> &'static str {
        match self {
            MinorKind::Ttilde => "s1^5 s2 s1^4 s2",
            MinorKind::Etilde => "s1^7 s2 s1^3 s2",
            MinorKind::Xtilde => "s1^2 s2^2 s1 s3 s2^2 s3",
            MinorKind::D5 => "s1^3 s2 s1^2 s2",
        }
    }

    /// `(vertex count, branch degree, sorted arm lengths)` of the target tree.
    pub fn expected_shape(self) -> (usize, usize, &'static [usize]) {
        match self {
            MinorKind::Ttilde => (9, 3, &[1, 3, 4]),
            MinorKind::Etilde => (10, 3, &[1, 2, 6]),
            MinorKind::Xtilde => (6, 4, &[1, 1, 1, 2]),
            MinorKind::D5 => (5, 3, &[1, 1, 2]),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            MinorKind::Ttilde => "T",
            MinorKind::Etilde => "E",
            MinorKind::Xtilde => "X",
            MinorKind::D5 => "D5",
        }
    }
}

impl fmt::Display for MinorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetMinor {
    pub kind: MinorKind,
    pub defining_word: BraidWord,
    pub graph: LinkingPattern,
}

impl TargetMinor {
    /// Builds the target from its defining word and checks its shape.
    pub fn build(kind: MinorKind) -> Result<Self, String> {
        let defining_word = BraidWord::parse(kind.defining_text(), None).map_err(|e| e.to_string())?;
        let graph = LinkingPattern::new(&defining_word);
        let (vertices, degree, arms) = kind.expected_shape();
        let g = graph.graph();
        if g.vertex_count() != vertices {
            return Err(format!("{kind}: {} vertices, expected {vertices}", g.vertex_count()));
        }
        match g.arm_lengths() {
            Some((center, found)) if g.degree(center) == degree && found == arms => {}
            other => return Err(format!("{kind}: branch structure {other:?}, expected arms {arms:?}")),
        }
        Ok(Self { kind, defining_word, graph })
    }
}

/// All four targets, built once and validated.
///
/// # Panics
/// If a defining word does not produce the expected tree.
pub fn target_patterns() -> &'static [TargetMinor] {
    static TARGETS: OnceLock<Vec<TargetMinor>> = OnceLock::new();
    TARGETS.get_or_init(|| {
        MinorKind::ALL
            .iter()
            .map(|&k| TargetMinor::build(k).unwrap_or_else(|e| panic!("target self-test failed: {e}")))
            .collect()
    })
}

pub fn target(kind: MinorKind) -> &'static TargetMinor {
    target_patterns().iter().find(|t| t.kind == kind).expect("every kind has a target")
}

/// An induced embedding of a target graph into a linking pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    pub kind: MinorKind,
    /// `embedding[t]` is the host brick id for target vertex `t`.
    pub embedding: Vec<usize>,
    /// Smallest and largest generator index used by the embedded bricks.
    pub columns: (usize, usize),
}

impl MinorCertificate {
    /// Re-checks the certificate against the pattern of `word`.
    pub fn verify(&self, word: &BraidWord) -> bool {
        let host = LinkingPattern::new(word);
        let map: Option<Vec<usize>> = self.embedding.iter().map(|&id| host.vertex_of(id)).collect();
        let Some(map) = map else { return false };
        let columns: Vec<usize> = map.iter().map(|&v| host.bricks()[v].column).collect();
        let span = (columns.iter().copied().min(), columns.iter().copied().max());
        is_induced_embedding(host.graph(), target(self.kind).graph.graph(), &map)
            && span == (Some(self.columns.0), Some(self.columns.1))
    }
}

/// Searches one target in `host`, returning a certificate on success.
pub fn find_minor(host: &LinkingPattern, kind: MinorKind) -> Option<MinorCertificate> {
    let tgt = target(kind);
    let map = find_induced_subgraph(host.graph(), tgt.graph.graph())?;
    debug_assert!(is_induced_embedding(host.graph(), tgt.graph.graph(), &map));
    let bricks = host.bricks();
    let lo = map.iter().map(|&v| bricks[v].column).min()?;
    let hi = map.iter().map(|&v| bricks[v].column).max()?;
    Some(MinorCertificate { kind, embedding: map.iter().map(|&v| bricks[v].id).collect(), columns: (lo, hi) })
}

/// Searches Γ_T̃, Γ_Ẽ and Γ_X̃ in the pattern restricted to `window`; at most
/// one certificate per kind, in that order.
pub fn detect_minor_in_window(pattern: &LinkingPattern, window: RangeInclusive<usize>) -> Vec<MinorCertificate> {
    detect_kinds(pattern, window, &MinorKind::DEFECT)
}

pub fn detect_kinds(
    pattern: &LinkingPattern,
    window: RangeInclusive<usize>,
    kinds: &[MinorKind],
) -> Vec<MinorCertificate> {
    let columns: BTreeSet<usize> = window.collect();
    let host = pattern.induced(&columns);
    kinds.iter().filter_map(|&k| find_minor(&host, k)).collect()
}

/// Generator indices `i` for which the pattern restricted to `{i, i+1}` is a
/// nonempty path. A nonempty answer shows the word does not realise the
/// positive braid index of a prime closure.
pub fn non_minimality_check(word: &BraidWord) -> Vec<usize> {
    if word.strands() < 3 {
        return Vec::new();
    }
    let pattern = LinkingPattern::new(word);
    (1..=word.strands() - 2)
        .filter(|&i| pattern.induced(&[i, i + 1].into()).is_path())
        .collect()
}

/// ⌊b/16⌋ for a word of minimal positive braid index `b` with prime knot
/// closure.
pub fn theorem1_floor(b: usize) -> usize {
    b / 16
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Windows `{1+(w+1)j, …, w+(w+1)j}`, one certificate per window.
    FixedWindows,
    /// Maximum set of gap-separated minimal hit intervals of width at most `w`.
    IntervalScheduling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub strategy: Strategy,
    pub width: usize,
    /// Column intervals pairwise separated by at least one unused index.
    pub certificates: Vec<MinorCertificate>,
    /// Certified: `g - g4_top >= lower_bound`.
    pub lower_bound: usize,
    /// ⌊strands/16⌋, reported only for prime knot closures with no
    /// non-minimality witness; never merged into `lower_bound`.
    pub theorem1_floor: Option<usize>,
    /// Set whenever `theorem1_floor` is present: that value assumes minimal
    /// positive braid index, which is not verified.
    pub advisory: bool,
}

impl DefectReport {
    /// Certificates are valid and pairwise gap-separated.
    pub fn is_consistent(&self, word: &BraidWord) -> bool {
        let mut spans: Vec<_> = self.certificates.iter().map(|c| c.columns).collect();
        spans.sort_unstable();
        self.lower_bound == self.certificates.len()
            && self.certificates.iter().all(|c| MinorKind::DEFECT.contains(&c.kind) && c.verify(word))
            && spans.windows(2).all(|w| w[1].0 >= w[0].1 + 2)
    }
}

pub fn defect_lower_bound(word: &BraidWord, strategy: Strategy, width: usize) -> DefectReport {
    let width = width.max(1);
    let pattern = LinkingPattern::new(word);
    let generators = word.generator_count();
    let certificates = match strategy {
        Strategy::FixedWindows => fixed_windows(&pattern, generators, width),
        Strategy::IntervalScheduling => interval_scheduling(&pattern, generators, width),
    };
    let eligible = word.closure_components().is_knot
        && primality_report(word) == Primality::Prime
        && non_minimality_check(word).is_empty();
    let theorem1_floor = eligible.then(|| theorem1_floor(word.strands()));
    DefectReport {
        strategy,
        width,
        lower_bound: certificates.len(),
        certificates,
        theorem1_floor,
        advisory: theorem1_floor.is_some(),
    }
}

fn fixed_windows(pattern: &LinkingPattern, generators: usize, width: usize) -> Vec<MinorCertificate> {
    let windows: Vec<RangeInclusive<usize>> = (0..)
        .map(|j| 1 + (width + 1) * j)
        .take_while(|&lo| lo <= generators)
        .map(|lo| lo..=(lo + width - 1).min(generators))
        .collect();
    windows
        .into_par_iter()
        .map(|w| detect_minor_in_window(pattern, w).into_iter().next())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn interval_scheduling(pattern: &LinkingPattern, generators: usize, width: usize) -> Vec<MinorCertificate> {
    // shortest hit interval starting at each left end; nondecreasing in `lo`
    let shortest: Vec<Option<(usize, MinorCertificate)>> = (1..=generators)
        .into_par_iter()
        .map(|lo| {
            let max_hi = (lo + width - 1).min(generators);
            (lo..=max_hi).find_map(|hi| {
                detect_minor_in_window(pattern, lo..=hi).into_iter().next().map(|c| (hi, c))
            })
        })
        .collect();
    let mut hits: Vec<(usize, usize, MinorCertificate)> = shortest
        .into_iter()
        .enumerate()
        .filter_map(|(k, hit)| hit.map(|(hi, c)| (k + 1, hi, c)))
        .collect();
    // keep minimal intervals: drop [lo, hi] when [lo+1, hi] also hits
    let his: Vec<(usize, usize)> = hits.iter().map(|h| (h.0, h.1)).collect();
    hits.retain(|h| !his.iter().any(|&(lo, hi)| lo > h.0 && hi <= h.1));
    hits.sort_by_key(|h| (h.1, h.0));

    let mut chosen = Vec::new();
    let mut last_hi: Option<usize> = None;
    for (lo, hi, cert) in hits {
        if last_hi.map_or(true, |prev| lo >= prev + 2) {
            debug_assert!(cert.columns.0 >= lo && cert.columns.1 <= hi);
            chosen.push(cert);
            last_hi = Some(hi);
        }
    }
    chosen
}
