//! Reports shared by the command-line tool: word summaries, the β_k check
//! and exhaustive enumeration of small words.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{beta_k, BraidWord};
use crate::form::{certificate_from, KtCertificate, SymmetrizedSeifertForm};
use crate::minor::{defect_lower_bound, detect_kinds, MinorKind, Strategy, DEFAULT_WIDTH};
use crate::surface::{primality_report, LinkingPattern, Primality};

/// Closure and surface invariants of one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub word: String,
    pub strands: usize,
    pub length: usize,
    pub components: usize,
    pub cycles: Vec<Vec<usize>>,
    pub b1: usize,
    pub genus: Option<usize>,
    pub nonsplit: bool,
    pub primality: Primality,
    pub dimension: usize,
    pub signature: i64,
    pub nullity: usize,
    pub rank: usize,
    /// `None` for split words.
    pub kt_certificate: Option<KtCertificate>,
}

pub fn info(word: &BraidWord) -> InfoReport {
    let closure = word.closure_components();
    let genus = word.genus_summary();
    let form = SymmetrizedSeifertForm::of_word(word);
    let inertia = form.inertia();
    InfoReport {
        word: word.to_string(),
        strands: word.strands(),
        length: word.len(),
        components: closure.component_count,
        cycles: closure.cycles,
        b1: genus.betti,
        genus: genus.genus,
        nonsplit: genus.nonsplit,
        primality: primality_report(word),
        dimension: form.dimension(),
        signature: inertia.signature,
        nullity: inertia.nullity,
        rank: inertia.rank,
        kt_certificate: genus.nonsplit.then(|| certificate_from(&inertia, form.dimension())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Self { name: name.to_string(), pass: expected == computed, expected, computed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetakReport {
    pub k: usize,
    pub word: String,
    pub checks: Vec<Check>,
}

impl BetakReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verifies the β_k family: k+1 components, b1 = 3k, |σ| = 2k+1,
/// nullity k−1, and a Kauffman–Taylor certificate.
pub fn betak_report(k: usize) -> BetakReport {
    assert!(k >= 1, "k must be at least 1");
    let word = beta_k(k);
    let r = info(&word);
    let kt = r.kt_certificate.map_or("split", KtCertificate::as_str);
    BetakReport {
        k,
        word: r.word.clone(),
        checks: vec![
            Check::new("components", k + 1, r.components),
            Check::new("b1", 3 * k, r.b1),
            Check::new("|signature|", 2 * k + 1, r.signature.unsigned_abs()),
            Check::new("nullity", k - 1, r.nullity),
            Check::new("kt_certificate", KtCertificate::CertifiedMaximal.as_str(), kt),
        ],
    }
}

/// One row of the enumeration table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    /// Lexicographically smallest cyclic rotation, in caret notation.
    pub word: String,
    pub strands: usize,
    pub length: usize,
    pub components: usize,
    pub b1: usize,
    pub genus: Option<usize>,
    pub signature: i64,
    pub nullity: usize,
    pub primality: Primality,
    pub kt: Option<KtCertificate>,
    pub minors: Vec<MinorKind>,
    pub defect_lb: usize,
}

pub fn record(word: &BraidWord) -> EnumerationRecord {
    let canonical = word.canonical_rotation();
    let r = info(&canonical);
    let pattern = LinkingPattern::new(&canonical);
    let minors = if canonical.generator_count() == 0 {
        Vec::new()
    } else {
        detect_kinds(&pattern, 1..=canonical.generator_count(), &MinorKind::DEFECT)
            .into_iter()
            .map(|c| c.kind)
            .collect()
    };
    let defect_lb = if minors.is_empty() {
        0
    } else {
        defect_lower_bound(&canonical, Strategy::IntervalScheduling, DEFAULT_WIDTH).lower_bound
    };
    EnumerationRecord {
        word: r.word,
        strands: r.strands,
        length: r.length,
        components: r.components,
        b1: r.b1,
        genus: r.genus,
        signature: r.signature,
        nullity: r.nullity,
        primality: r.primality,
        kt: r.kt_certificate,
        minors,
        defect_lb,
    }
}

/// Necklace representatives of length `n` over generators `1..=k`, in
/// lexicographic order (each is its own smallest rotation).
pub fn necklaces(n: usize, k: usize) -> Vec<Vec<usize>> {
    // Fredricksen–Kessler–Maiorana over 0-based digits; a[0] is a sentinel.
    fn extend(t: usize, p: usize, n: usize, k: usize, a: &mut [usize], out: &mut Vec<Vec<usize>>) {
        if t > n {
            if n % p == 0 {
                out.push(a[1..=n].iter().map(|&d| d + 1).collect());
            }
            return;
        }
        a[t] = a[t - p];
        extend(t + 1, p, n, k, a, out);
        for digit in a[t - p] + 1..k {
            a[t] = digit;
            extend(t + 1, t, n, k, a, out);
        }
    }
    let mut out = Vec::new();
    if n > 0 && k > 0 {
        extend(1, 1, n, k, &mut vec![0; n + 1], &mut out);
    }
    out
}

/// All words on `strands` strands of length `1..=max_length`, up to cyclic
/// rotation, sorted by `(length, word)`. The result does not depend on
/// `workers`.
pub fn enumerate(strands: usize, max_length: usize, workers: usize) -> Vec<EnumerationRecord> {
    let words: Vec<BraidWord> = (1..=max_length)
        .flat_map(|n| necklaces(n, strands.saturating_sub(1)))
        .map(|letters| BraidWord::new(strands, letters).expect("letters in range"))
        .collect();
    let run = || words.par_iter().map(record).collect::<Vec<_>>();
    match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}
