//! Young permutation modules M^λ over F_p: canonical tabloid bases and the
//! symmetric-group action by adjacent transpositions.

use std::collections::HashMap;

use crate::error::YoungError;
use crate::partition::Partition;

/// A λ-tabloid encoded as its row word: entry k−1 is the row (0-based) that
/// the symbol k occupies. Row words with content λ correspond bijectively to
/// ordered set partitions of {1..r} with block sizes λ.
pub type RowWord = Vec<u8>;

/// dim M^λ = r!/Π λ_i!, None on overflow of u128 → u64 narrowing.
pub fn multinomial_dim(lambda: &Partition) -> Option<u64> {
    let mut acc: u128 = 1;
    let mut seen: u64 = 0;
    for &part in lambda.parts() {
        for k in 1..=part as u64 {
            seen += 1;
            acc = acc.checked_mul(seen as u128)?;
            acc /= k as u128;
            if acc > u64::MAX as u128 {
                return None;
            }
        }
    }
    u64::try_from(acc).ok()
}

/// M^λ over F_p with its canonical basis: all row words with content λ in
/// lexicographic order, and the permutation action of the Coxeter generators
/// s_k = (k, k+1).
pub struct PermutationModule {
    pub lambda: Partition,
    pub p: u32,
    pub dim: usize,
    basis: Vec<RowWord>,
    index: HashMap<RowWord, usize>,
    /// generators[k][t] = index of s_{k+1}·(basis tabloid t)
    generators: Vec<Vec<u32>>,
}

impl PermutationModule {
    pub fn new(lambda: &Partition, p: u32, max_tabloids: u64) -> Result<Self, YoungError> {
        let dim = multinomial_dim(lambda).ok_or_else(|| {
            YoungError::BudgetExceeded(format!("dim M^{lambda} overflows"))
        })?;
        if dim > max_tabloids {
            return Err(YoungError::BudgetExceeded(format!(
                "dim M^{lambda} = {dim} exceeds the tabloid budget {max_tabloids}"
            )));
        }
        let r = lambda.degree() as usize;
        let rows = lambda.len().max(1);
        let mut basis = Vec::with_capacity(dim as usize);
        // lexicographic enumeration of words with content λ
        let mut remaining: Vec<u32> = if lambda.is_empty() {
            vec![0]
        } else {
            lambda.parts().to_vec()
        };
        let mut word = Vec::with_capacity(r);
        enumerate_words(r, rows, &mut remaining, &mut word, &mut basis);
        debug_assert_eq!(basis.len() as u64, dim.max(1));
        let index: HashMap<RowWord, usize> =
            basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut generators = Vec::new();
        for k in 0..r.saturating_sub(1) {
            let perm: Vec<u32> = basis
                .iter()
                .map(|w| {
                    let mut sw = w.clone();
                    sw.swap(k, k + 1);
                    index[&sw] as u32
                })
                .collect();
            generators.push(perm);
        }
        Ok(PermutationModule { lambda: lambda.clone(), p, dim: basis.len(), basis, index, generators })
    }

    pub fn basis(&self) -> &[RowWord] {
        &self.basis
    }

    pub fn index_of(&self, w: &RowWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Image of basis tabloid t under s_{k+1} = (k+1, k+2).
    pub fn apply_generator(&self, k: usize, t: usize) -> usize {
        self.generators[k][t] as usize
    }
}

fn enumerate_words(
    r: usize,
    rows: usize,
    remaining: &mut Vec<u32>,
    word: &mut Vec<u8>,
    out: &mut Vec<RowWord>,
) {
    if word.len() == r {
        out.push(word.clone());
        return;
    }
    for row in 0..rows {
        if remaining[row] == 0 {
            continue;
        }
        remaining[row] -= 1;
        word.push(row as u8);
        enumerate_words(r, rows, remaining, word, out);
        word.pop();
        remaining[row] += 1;
    }
}
