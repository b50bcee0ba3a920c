//! Macaulay bounds and the M-, level- and Gorenstein-sequence tests.

use std::fmt;

use serde::Serialize;

/// Which condition a sequence failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `a_0 = 1`
    LeadingOne,
    /// `a_{i+1} ≤ a_i^⟨i⟩`
    Macaulay,
    /// `ℓ_i ≤ ℓ_j ℓ_{i+j}`
    Product,
    /// the reversal is a sum of M-sequences
    ReversalSum,
    /// `ℓ_s = 1` forces `ℓ_i = ℓ_{s-i}`
    Symmetry,
    /// `(1, g_{ũ-1}, …, g_1, 1)` is an M-sequence
    ReversedTruncation,
    /// the socle vanishes below the top degree tested
    Socle,
}

/// One failed condition, with the indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub condition: Condition,
    /// Index `i` for single-index conditions; `(i, j)` for products and symmetry.
    pub witness: Vec<usize>,
    pub detail: String,
}

/// Outcome of a sequence test. `holds` iff `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceVerdict {
    pub holds: bool,
    pub failures: Vec<Failure>,
}

impl SequenceVerdict {
    fn from_failures(failures: Vec<Failure>) -> Self {
        SequenceVerdict {
            holds: failures.is_empty(),
            failures,
        }
    }

    /// First failure of the given kind, if any.
    pub fn failure(&self, condition: Condition) -> Option<&Failure> {
        self.failures.iter().find(|f| f.condition == condition)
    }
}

impl fmt::Display for SequenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return write!(f, "holds");
        }
        let parts: Vec<&str> = self.failures.iter().map(|x| x.detail.as_str()).collect();
        write!(f, "fails: {}", parts.join("; "))
    }
}

fn binom_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k as u128 {
        acc = match acc.checked_mul(n as u128 - j) {
            Some(x) => x / (j + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The `i`-th Macaulay representation `a = C(n_i, i) + … + C(n_j, j)` with
/// `n_i > … > n_j ≥ j ≥ 1`, as the list `[(n_i, i), …]`.
pub fn macaulay_expansion(a: u64, i: usize) -> Vec<(u64, u64)> {
    let mut rest = a as u128;
    let mut out = Vec::new();
    let mut j = i as u64;
    while rest > 0 && j >= 1 {
        // largest n with C(n, j) ≤ rest
        let mut n = j;
        while binom_u128(n + 1, j) <= rest {
            n += 1;
        }
        rest -= binom_u128(n, j);
        out.push((n, j));
        j -= 1;
    }
    out
}

/// `a^⟨i⟩`, saturating at `u64::MAX`. `0^⟨0⟩ = 0`; for `i = 0` and `a > 0`
/// the bound is unrestricted and `u64::MAX` is returned.
pub fn macaulay_upper(a: u64, i: usize) -> u64 {
    if a == 0 {
        return 0;
    }
    if i == 0 {
        return u64::MAX;
    }
    let total = macaulay_expansion(a, i)
        .into_iter()
        .fold(0u128, |acc, (n, j)| {
            acc.saturating_add(binom_u128(n + 1, j + 1))
        });
    u64::try_from(total).unwrap_or(u64::MAX)
}

fn m_failures(seq: &[u64], offset: usize, failures: &mut Vec<Failure>) {
    if seq.first() != Some(&1) {
        failures.push(Failure {
            condition: Condition::LeadingOne,
            witness: vec![offset],
            detail: format!("entry {offset} is {:?}, expected 1", seq.first()),
        });
    }
    for i in 1..seq.len().saturating_sub(1) {
        let bound = macaulay_upper(seq[i], i);
        if seq[i + 1] > bound {
            failures.push(Failure {
                condition: Condition::Macaulay,
                witness: vec![i + 1],
                detail: format!("a_{} = {} exceeds a_{i}^<{i}> = {bound}", i + 1, seq[i + 1]),
            });
        }
    }
}

/// `a_0 = 1` and `a_{i+1} ≤ a_i^⟨i⟩` for all `i ≥ 1`.
pub fn is_m_sequence(seq: &[u64]) -> SequenceVerdict {
    let mut failures = Vec::new();
    m_failures(seq, 0, &mut failures);
    SequenceVerdict::from_failures(failures)
}

/// All zero, or `ℓ_0 ≥ 1` and `(1, ℓ_1, …, ℓ_s)` an M-sequence.
pub fn is_sum_of_m_sequences(seq: &[u64]) -> SequenceVerdict {
    if seq.iter().all(|&x| x == 0) {
        return SequenceVerdict::from_failures(Vec::new());
    }
    let mut failures = Vec::new();
    if seq[0] == 0 {
        failures.push(Failure {
            condition: Condition::LeadingOne,
            witness: vec![0],
            detail: "nonzero sequence with l_0 = 0".into(),
        });
    }
    let mut unit = seq.to_vec();
    unit[0] = 1;
    m_failures(&unit, 0, &mut failures);
    SequenceVerdict::from_failures(failures)
}

/// Necessary conditions for a level sequence: M-sequence, the product
/// inequalities, the reversal being a sum of M-sequences, and symmetry when
/// the last entry is 1.
pub fn level_necessary_conditions(seq: &[u64]) -> SequenceVerdict {
    let mut failures = Vec::new();
    m_failures(seq, 0, &mut failures);
    if seq.is_empty() {
        return SequenceVerdict::from_failures(failures);
    }
    product_failures(seq, &mut failures);
    let rev: Vec<u64> = seq.iter().rev().copied().collect();
    for mut f in is_sum_of_m_sequences(&rev).failures {
        f.condition = Condition::ReversalSum;
        f.detail = format!("reversal {rev:?}: {}", f.detail);
        failures.push(f);
    }
    let s = seq.len() - 1;
    if seq[s] == 1 {
        if let Some(i) = (0..=s / 2).find(|&i| seq[i] != seq[s - i]) {
            failures.push(Failure {
                condition: Condition::Symmetry,
                witness: vec![i, s - i],
                detail: format!(
                    "last entry is 1 but l_{i} = {} != l_{} = {}",
                    seq[i],
                    s - i,
                    seq[s - i]
                ),
            });
        }
    }
    SequenceVerdict::from_failures(failures)
}

fn product_failures(seq: &[u64], failures: &mut Vec<Failure>) {
    let s = seq.len() - 1;
    for i in 1..=s {
        for j in 1..=s - i {
            let rhs = seq[j].saturating_mul(seq[i + j]);
            if seq[i] > rhs {
                failures.push(Failure {
                    condition: Condition::Product,
                    witness: vec![i, j],
                    detail: format!("l_{i} = {} > l_{j} * l_{} = {rhs}", seq[i], i + j),
                });
            }
        }
    }
}

/// The level-sequence consequences for a g-vector truncated at `ũ`:
/// M-sequence, `g_i ≤ g_j g_{i+j}` for `i + j ≤ ũ`, and
/// `(1, g_{ũ-1}, …, g_1, 1)` an M-sequence.
pub fn corollary_level_g_check(g: &[u64], u_tilde: usize) -> SequenceVerdict {
    let t = &g[..=u_tilde.min(g.len().saturating_sub(1))];
    let mut failures = Vec::new();
    m_failures(t, 0, &mut failures);
    if !t.is_empty() {
        product_failures(t, &mut failures);
    }
    let mut rev = vec![1u64];
    if u_tilde >= 1 {
        rev.extend(t[..t.len() - 1].iter().rev());
    }
    for mut f in is_m_sequence(&rev).failures {
        f.condition = Condition::ReversedTruncation;
        f.detail = format!("{rev:?}: {}", f.detail);
        failures.push(f);
    }
    SequenceVerdict::from_failures(failures)
}
