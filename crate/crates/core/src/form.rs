//! The symmetrized Seifert form of the canonical surface and its inertia.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::surface::BrickDiagram;

/// Symmetric integer matrix on the brick basis of the first homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedSeifertForm {
    entries: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaResult {
    pub signature: i64,
    pub nullity: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KtCertificate {
    /// `|σ| + nullity = b1`, so the topological 4-genus equals the genus.
    CertifiedMaximal,
    /// The signature bound is not sharp; nothing is concluded.
    NotMaximalByKt,
}

impl KtCertificate {
    pub fn as_str(self) -> &'static str {
        match self {
            KtCertificate::CertifiedMaximal => "certified_maximal",
            KtCertificate::NotMaximalByKt => "not_maximal_by_KT",
        }
    }
}

impl SymmetrizedSeifertForm {
    /// Entries on the brick basis:
    ///
    /// * `-2` on the diagonal;
    /// * `+1` for consecutive bricks of one column;
    /// * for `u` in column i and `v` in column i+1 with interleaved spans,
    ///   `+1` if `v` begins inside `u` and `-1` if `v` ends inside `u`;
    /// * `0` otherwise.
    pub fn new(diagram: &BrickDiagram) -> Self {
        let bricks = diagram.bricks();
        let n = bricks.len();
        let mut entries = vec![vec![0i64; n]; n];
        for (u, a) in bricks.iter().enumerate() {
            entries[u][u] = -2;
            for (v, b) in bricks.iter().enumerate().skip(u + 1) {
                let value = if a.column == b.column {
                    i64::from(a.bottom == b.top || b.bottom == a.top)
                } else if a.column + 1 == b.column {
                    if a.right_begins_inside(b) {
                        1
                    } else if a.right_ends_inside(b) {
                        -1
                    } else {
                        0
                    }
                } else {
                    break;
                };
                entries[u][v] = value;
                entries[v][u] = value;
            }
        }
        Self { entries }
    }

    pub fn of_word(word: &BraidWord) -> Self {
        Self::new(&BrickDiagram::new(word))
    }

    /// Wraps a symmetric matrix. Returns `None` if it is not square and
    /// symmetric.
    pub fn from_matrix(entries: Vec<Vec<i64>>) -> Option<Self> {
        let n = entries.len();
        let ok = entries.iter().all(|row| row.len() == n)
            && (0..n).all(|i| (0..i).all(|j| entries[i][j] == entries[j][i]));
        ok.then_some(Self { entries })
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Exact signature, nullity and rank by symmetric congruence reduction
    /// over the rationals.
    pub fn inertia(&self) -> InertiaResult {
        inertia(&self.entries)
    }
}

/// Signature and nullity of a symmetric integer matrix.
///
/// Nonzero diagonal pivots are eliminated symmetrically and counted by sign.
/// When the remaining diagonal is zero but an off-diagonal entry `a` is not,
/// the block `[[0, a], [a, 0]]` is split off as a hyperbolic pair, counting
/// one positive and one negative direction. What is left once everything is
/// zero is the radical.
pub fn inertia(entries: &[Vec<i64>]) -> InertiaResult {
    let n = entries.len();
    let mut m: Vec<Vec<BigRational>> = entries
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let (mut positive, mut negative) = (0usize, 0usize);

    loop {
        if let Some(slot) = alive.iter().position(|&k| !m[k][k].is_zero()) {
            let k = alive.swap_remove(slot);
            let pivot = m[k][k].clone();
            if pivot.is_positive() {
                positive += 1;
            } else {
                negative += 1;
            }
            let col: Vec<BigRational> = alive.iter().map(|&i| m[i][k].clone()).collect();
            for (a, &i) in alive.iter().enumerate() {
                if col[a].is_zero() {
                    continue;
                }
                let factor = &col[a] / &pivot;
                for (b, &j) in alive.iter().enumerate() {
                    if !col[b].is_zero() {
                        let delta = &factor * &col[b];
                        m[i][j] -= delta;
                    }
                }
            }
            continue;
        }
        let pair = alive.iter().enumerate().find_map(|(a, &i)| {
            alive[a + 1..].iter().position(|&j| !m[i][j].is_zero()).map(|b| (a, a + 1 + b))
        });
        let Some((a, b)) = pair else { break };
        let (p, q) = (alive[a], alive[b]);
        positive += 1;
        negative += 1;
        // Schur complement of [[0, x], [x, 0]]:
        // M[i][j] -= (M[i][p] M[q][j] + M[i][q] M[p][j]) / x
        let x = m[p][q].clone();
        alive.retain(|&k| k != p && k != q);
        let cp: Vec<BigRational> = alive.iter().map(|&i| m[i][p].clone()).collect();
        let cq: Vec<BigRational> = alive.iter().map(|&i| m[i][q].clone()).collect();
        for (s, &i) in alive.iter().enumerate() {
            for (t, &j) in alive.iter().enumerate() {
                if cp[s].is_zero() && cq[s].is_zero() {
                    break;
                }
                let delta = (&cp[s] * &cq[t] + &cq[s] * &cp[t]) / &x;
                if !delta.is_zero() {
                    m[i][j] -= delta;
                }
            }
        }
    }

    let rank = positive + negative;
    InertiaResult { signature: positive as i64 - negative as i64, nullity: n - rank, rank }
}

/// Kauffman–Taylor test: the closure has maximal topological 4-genus when
/// `|σ| + nullity` reaches the first Betti number of the canonical surface.
pub fn kt_maximality_certificate(word: &BraidWord) -> Result<KtCertificate> {
    if let Some(&missing) = word.missing_generators().first() {
        return Err(Error::SplitWord { missing });
    }
    let form = SymmetrizedSeifertForm::of_word(word);
    Ok(certificate_from(&form.inertia(), form.dimension()))
}

pub(crate) fn certificate_from(inertia: &InertiaResult, betti: usize) -> KtCertificate {
    if inertia.signature.unsigned_abs() as usize + inertia.nullity == betti {
        KtCertificate::CertifiedMaximal
    } else {
        KtCertificate::NotMaximalByKt
    }
}
