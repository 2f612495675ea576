//! Ordinary character combinatorics: Kostka numbers by semistandard tableau
//! enumeration, Littlewood-Richardson products by lattice-word counting,
//! permutation characters, and p-block distribution via p-cores.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;

use crate::error::YoungError;
use crate::partition::{dominates, hook_dimension, p_core, partitions_of, BlockLabel, Partition};

/// A non-negative integral combination of irreducible ordinary characters
/// χ^μ, all of one degree r. Absent keys have multiplicity zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    degree: u64,
    entries: BTreeMap<Partition, u64>,
}

impl CharacterVector {
    pub fn zero(degree: u64) -> Self {
        CharacterVector { degree, entries: BTreeMap::new() }
    }

    pub fn irreducible(mu: Partition) -> Self {
        let degree = mu.degree();
        let mut entries = BTreeMap::new();
        entries.insert(mu, 1);
        CharacterVector { degree, entries }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// ⟨v, χ^μ⟩: the stored multiplicity of μ.
    pub fn multiplicity(&self, mu: &Partition) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, mu: Partition, mult: u64) {
        if mult == 0 {
            return;
        }
        debug_assert_eq!(mu.degree(), self.degree);
        *self.entries.entry(mu).or_insert(0) += mult;
    }

    /// Support iterated in descending lexicographic order, which refines
    /// dominance-descending.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().rev().map(|(k, &v)| (k, v))
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Σ mult(μ)·f^μ, the dimension of the represented character.
    pub fn dimension(&self) -> BigUint {
        let mut total = BigUint::from(0u32);
        for (mu, mult) in &self.entries {
            total += hook_dimension(mu) * BigUint::from(*mult);
        }
        total
    }

    /// Serializes as a list of {"partition": [...], "mult": n} records in
    /// descending lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let records: Vec<serde_json::Value> = self
            .iter_desc()
            .map(|(mu, mult)| {
                serde_json::json!({ "partition": mu.parts(), "mult": mult })
            })
            .collect();
        serde_json::Value::Array(records)
    }
}

static KOSTKA_CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, Vec<u32>), u64>>> = OnceLock::new();
static LR_CACHE: OnceLock<Mutex<HashMap<(Vec<u32>, Vec<u32>, Vec<u32>), u64>>> = OnceLock::new();

/// K_{μλ}: the number of semistandard μ-tableaux of type λ, counted by
/// peeling horizontal strips for the letters in decreasing order.
pub fn kostka_number(shape: &Partition, content: &Partition) -> Result<u64, YoungError> {
    if shape.degree() != content.degree() {
        return Err(YoungError::DegreeMismatch {
            left: shape.degree(),
            right: content.degree(),
        });
    }
    Ok(kostka_inner(shape, content.parts()))
}

fn kostka_inner(shape: &Partition, content: &[u32]) -> u64 {
    if content.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let key = (shape.parts().to_vec(), content.to_vec());
    let cache = KOSTKA_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let last = content[content.len() - 1];
    let rest = &content[..content.len() - 1];
    let mut total = 0u64;
    for inner in horizontal_strip_removals(shape, last) {
        total += kostka_inner(&inner, rest);
    }
    cache.lock().unwrap().insert(key, total);
    total
}

/// All ν ⊆ μ with μ/ν a horizontal strip of the given size, i.e.
/// μ_i ≥ ν_i ≥ μ_{i+1} and Σ(μ_i − ν_i) = size.
fn horizontal_strip_removals(mu: &Partition, size: u32) -> Vec<Partition> {
    let l = mu.len();
    let mut out = Vec::new();
    let mut parts = vec![0u32; l];
    fn rec(
        mu: &Partition,
        row: usize,
        remaining: u32,
        parts: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == mu.len() {
            if remaining == 0 {
                out.push(Partition::new(parts.clone()).expect("strip removal is decreasing"));
            }
            return;
        }
        let lo = mu.part(row + 1);
        let hi = mu.part(row);
        // removal from this row is hi - v for v in [lo, hi]
        for v in lo..=hi {
            let removed = hi - v;
            if removed > remaining {
                continue;
            }
            // rows below can remove at most their full span; cheap bound
            parts[row] = v;
            rec(mu, row + 1, remaining - removed, parts, out);
        }
        parts[row] = 0;
    }
    rec(mu, 0, size, &mut parts, &mut out);
    out
}

/// ξ^λ = Σ_μ K_{μλ}·χ^μ (Young's rule).
pub fn permutation_character(lambda: &Partition) -> CharacterVector {
    let r = lambda.degree();
    let mut v = CharacterVector::zero(r);
    for mu in partitions_of(r as u32) {
        // K_{μλ} ≠ 0 requires μ ⊵ λ
        if !dominates(&mu, lambda).expect("equal degrees") {
            continue;
        }
        let k = kostka_number(&mu, lambda).expect("equal degrees");
        v.add_term(mu, k);
    }
    v
}

/// ξ^{(r−d,d)} = Σ_{i=0}^{d} χ^{(r−i,i)}, valid for d ≤ r/2.
pub fn two_part_character(r: u64, d: u64) -> Result<CharacterVector, YoungError> {
    if 2 * d > r {
        return Err(YoungError::Constraint(format!(
            "two_part_character requires d <= r/2, got r={r}, d={d}"
        )));
    }
    let mut v = CharacterVector::zero(r);
    for i in 0..=d {
        let mu = Partition::new(vec![(r - i) as u32, i as u32]).expect("r-i >= i");
        v.add_term(mu, 1);
    }
    Ok(v)
}

/// c^ν_{μρ}: the number of Littlewood-Richardson skew tableaux of shape ν/μ
/// and content ρ (semistandard, reverse reading word a lattice word).
pub fn lr_coefficient(nu: &Partition, mu: &Partition, rho: &Partition) -> u64 {
    if nu.degree() != mu.degree() + rho.degree() {
        return 0;
    }
    // μ ⊆ ν required
    for i in 0..mu.len() {
        if mu.part(i) > nu.part(i) {
            return 0;
        }
    }
    let key = (nu.parts().to_vec(), mu.parts().to_vec(), rho.parts().to_vec());
    let cache = LR_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let count = count_lr_tableaux(nu, mu, rho);
    cache.lock().unwrap().insert(key, count);
    count
}

fn count_lr_tableaux(nu: &Partition, mu: &Partition, rho: &Partition) -> u64 {
    let rows = nu.len();
    let max_val = rho.len();
    if max_val == 0 {
        return 1; // shape equals μ exactly (degrees matched above)
    }
    // cells in reading order: each row right-to-left, rows top to bottom
    let mut cells = Vec::new();
    for i in 0..rows {
        let lo = mu.part(i);
        let hi = nu.part(i);
        for j in (lo..hi).rev() {
            cells.push((i, j));
        }
    }
    // fill[(i,j)] lookup via grid
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u8; width]; rows]; // 0 = unfilled/outside
    let mut counts = vec![0u32; max_val + 1];
    fn rec(
        cells: &[(usize, u32)],
        pos: usize,
        nu: &Partition,
        mu: &Partition,
        rho: &Partition,
        grid: &mut Vec<Vec<u8>>,
        counts: &mut Vec<u32>,
        max_val: usize,
    ) -> u64 {
        if pos == cells.len() {
            return 1;
        }
        let (i, j) = cells[pos];
        let mut total = 0u64;
        for v in 1..=max_val {
            if counts[v] >= rho.part(v - 1) {
                continue; // content budget
            }
            // lattice: after placing v, prefix counts stay weakly decreasing
            if v > 1 && counts[v - 1] < counts[v] + 1 {
                continue;
            }
            // row weakly increasing: right neighbour already filled
            if j + 1 < nu.part(i) && j + 1 >= mu.part(i) {
                let right = grid[i][(j + 1) as usize];
                if right != 0 && (v as u8) > right {
                    continue;
                }
            }
            // column strictly increasing: cell above, if in the skew shape
            if i > 0 && j >= mu.part(i - 1) && j < nu.part(i - 1) {
                let above = grid[i - 1][j as usize];
                if above != 0 && (v as u8) <= above {
                    continue;
                }
            }
            grid[i][j as usize] = v as u8;
            counts[v] += 1;
            total += rec(cells, pos + 1, nu, mu, rho, grid, counts, max_val);
            counts[v] -= 1;
            grid[i][j as usize] = 0;
        }
        total
    }
    rec(&cells, 0, nu, mu, rho, &mut grid, &mut counts, max_val)
}

/// Induction product of character vectors: the bilinear extension of
/// χ^μ·χ^ρ = Σ_ν c^ν_{μρ} χ^ν. Commutative and associative.
pub fn lr_product(u: &CharacterVector, v: &CharacterVector) -> CharacterVector {
    let degree = u.degree() + v.degree();
    let mut out = CharacterVector::zero(degree);
    for (mu, a) in u.iter_desc() {
        for (rho, b) in v.iter_desc() {
            for nu in partitions_of(degree as u32) {
                let c = lr_coefficient(&nu, mu, rho);
                if c != 0 {
                    out.add_term(nu, a * b * c);
                }
            }
        }
    }
    out
}

/// Splits a character vector by p-block: support partitions are grouped by
/// their p-core. The union of the pieces reconstructs the input.
pub fn block_split(v: &CharacterVector, p: u32) -> BTreeMap<BlockLabel, CharacterVector> {
    let mut out: BTreeMap<BlockLabel, CharacterVector> = BTreeMap::new();
    for (mu, mult) in v.iter_desc() {
        let label = p_core(mu, p);
        out.entry(label)
            .or_insert_with(|| CharacterVector::zero(v.degree()))
            .add_term(mu.clone(), mult);
    }
    out
}

/// Whether the ordinary character of M^λ has constituents in at least two
/// different p-blocks.
pub fn spans_multiple_blocks(lambda: &Partition, p: u32) -> bool {
    block_split(&permutation_character(lambda), p).len() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chi(parts: &[u32]) -> CharacterVector {
        CharacterVector::irreducible(pt(parts))
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&pt(&[2, 1]), &pt(&[1, 1, 1])).unwrap(), 2);
        for r in 1..=8u32 {
            for lambda in partitions_of(r) {
                assert_eq!(kostka_number(&lambda, &lambda).unwrap(), 1, "λ={lambda}");
                assert_eq!(kostka_number(&pt(&[r]), &lambda).unwrap(), 1);
            }
        }
        assert!(kostka_number(&pt(&[2]), &pt(&[1])).is_err());
    }

    #[test]
    fn kostka_by_direct_ssyt_enumeration() {
        // independent oracle: enumerate SSYT cell by cell
        fn ssyt_count(shape: &Partition, content: &Partition) -> u64 {
            let rows = shape.len();
            let width = shape.part(0) as usize;
            let mut grid = vec![vec![0u8; width]; rows.max(1)];
            let maxv = content.len();
            let mut counts = vec![0u32; maxv + 1];
            fn rec(
                shape: &Partition,
                content: &Partition,
                i: usize,
                j: u32,
                grid: &mut Vec<Vec<u8>>,
                counts: &mut Vec<u32>,
                maxv: usize,
            ) -> u64 {
                if i == shape.len() {
                    return 1;
                }
                if j == shape.part(i) {
                    return rec(shape, content, i + 1, 0, grid, counts, maxv);
                }
                let mut total = 0;
                for v in 1..=maxv {
                    if counts[v] >= content.part(v - 1) {
                        continue;
                    }
                    if j > 0 && (v as u8) < grid[i][(j - 1) as usize] {
                        continue;
                    }
                    if i > 0 && (v as u8) <= grid[i - 1][j as usize] {
                        continue;
                    }
                    grid[i][j as usize] = v as u8;
                    counts[v] += 1;
                    total += rec(shape, content, i, j + 1, grid, counts, maxv);
                    counts[v] -= 1;
                    grid[i][j as usize] = 0;
                }
                total
            }
            if shape.degree() != content.degree() {
                return 0;
            }
            if shape.is_empty() {
                return 1;
            }
            rec(shape, content, 0, 0, &mut grid, &mut counts, maxv)
        }
        for r in 0..=7u32 {
            for shape in partitions_of(r) {
                for content in partitions_of(r) {
                    assert_eq!(
                        kostka_number(&shape, &content).unwrap(),
                        ssyt_count(&shape, &content),
                        "shape={shape} content={content}"
                    );
                }
            }
        }
    }

    #[test]
    fn youngs_rule_unitriangularity() {
        for r in 0..=10u32 {
            for lambda in partitions_of(r) {
                let xi = permutation_character(&lambda);
                assert_eq!(xi.multiplicity(&lambda), 1);
                for (mu, mult) in xi.iter_desc() {
                    if mult != 0 {
                        assert!(dominates(mu, &lambda).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_identity() {
        use num_bigint::BigUint;
        for r in 0..=10u64 {
            for lambda in partitions_of(r as u32) {
                let xi = permutation_character(&lambda);
                // r! / Π λ_i!
                let mut expected = BigUint::from(1u32);
                for k in 1..=r {
                    expected *= BigUint::from(k);
                }
                for &part in lambda.parts() {
                    for k in 1..=part as u64 {
                        expected /= BigUint::from(k);
                    }
                }
                assert_eq!(xi.dimension(), expected, "λ={lambda}");
            }
        }
    }

    #[test]
    fn trivial_constituent_once() {
        for r in 1..=10u32 {
            let top = pt(&[r]);
            for lambda in partitions_of(r) {
                assert_eq!(permutation_character(&lambda).multiplicity(&top), 1);
            }
        }
    }

    #[test]
    fn permutation_character_examples() {
        let xi = permutation_character(&pt(&[2, 1]));
        assert_eq!(xi.multiplicity(&pt(&[3])), 1);
        assert_eq!(xi.multiplicity(&pt(&[2, 1])), 1);
        assert_eq!(xi.support_len(), 2);

        for r in 4..=12u64 {
            for d in 0..=r / 2 {
                let lambda = Partition::new(vec![(r - d) as u32, d as u32]).unwrap();
                assert_eq!(
                    two_part_character(r, d).unwrap(),
                    permutation_character(&lambda),
                    "r={r} d={d}"
                );
            }
        }
        assert!(two_part_character(5, 3).is_err());
    }

    #[test]
    fn lr_pieri_examples() {
        let p11 = lr_product(&chi(&[1]), &chi(&[1]));
        assert_eq!(p11.multiplicity(&pt(&[2])), 1);
        assert_eq!(p11.multiplicity(&pt(&[1, 1])), 1);
        assert_eq!(p11.support_len(), 2);

        let p21 = lr_product(&chi(&[2]), &chi(&[1]));
        assert_eq!(p21.multiplicity(&pt(&[3])), 1);
        assert_eq!(p21.multiplicity(&pt(&[2, 1])), 1);
        assert_eq!(p21.support_len(), 2);
    }

    #[test]
    fn lr_commutative_and_associative() {
        let a = chi(&[2, 1]);
        let b = chi(&[2]);
        let c = chi(&[1, 1]);
        assert_eq!(lr_product(&a, &b), lr_product(&b, &a));
        assert_eq!(
            lr_product(&lr_product(&a, &b), &c),
            lr_product(&a, &lr_product(&b, &c))
        );
    }

    #[test]
    fn signed_identity_from_lemma_chi() {
        // (ξ^{(r-3,1)} − ξ^{(r-2)})·ξ^{(2)} = ξ^{(r-3,2,1)} − ξ^{(r-2,2)},
        // checked by comparing multiplicities of the two positive sides:
        // ξ^{(r-3,1)}·ξ^{(2)} + ξ^{(r-2,2)} = ξ^{(r-3,2,1)} + ξ^{(r-2)}·ξ^{(2)},
        // and χ^{(r-3,2,1)} appears exactly once in the difference.
        for r in 5..=9u32 {
            let xi2 = permutation_character(&pt(&[2]));
            let lhs = {
                let mut v = lr_product(&permutation_character(&pt(&[r - 3, 1])), &xi2);
                for (mu, m) in permutation_character(&pt(&[r - 2, 2])).iter_desc() {
                    v.add_term(mu.clone(), m);
                }
                v
            };
            let rhs = {
                let mut v = lr_product(&permutation_character(&pt(&[r - 2])), &xi2);
                for (mu, m) in permutation_character(&pt(&[r - 3, 2, 1])).iter_desc() {
                    v.add_term(mu.clone(), m);
                }
                v
            };
            assert_eq!(lhs, rhs, "r={r}");
            let target = pt(&[r - 3, 2, 1]);
            let diff = permutation_character(&pt(&[r - 3, 2, 1])).multiplicity(&target)
                - permutation_character(&pt(&[r - 2, 2])).multiplicity(&target);
            assert_eq!(diff, 1, "r={r}");
        }
    }

    #[test]
    fn lemma_chi_properties() {
        for r in 5..=10u32 {
            for lambda in partitions_of(r) {
                let xi = permutation_character(&lambda);
                if lambda.len() >= 2 {
                    assert!(xi.multiplicity(&pt(&[r - 1, 1])) > 0, "λ={lambda}");
                    if lambda != pt(&[r - 1, 1]) {
                        assert!(xi.multiplicity(&pt(&[r - 2, 2])) > 0, "λ={lambda}");
                    }
                }
                if lambda.len() >= 3 && lambda != pt(&[r - 2, 1, 1]) {
                    assert!(xi.multiplicity(&pt(&[r - 3, 2, 1])) > 0, "λ={lambda}");
                }
            }
        }
    }

    #[test]
    fn principal_block_membership_odd_p() {
        // χ^{(r-1,1)} principal iff p | r; χ^{(r-2,2)} principal iff p | r-1
        for p in [3u32, 5] {
            for r in 4..=30u32 {
                let principal = p_core(&pt(&[r]), p).core;
                let a = p_core(&pt(&[r - 1, 1]), p).core == principal;
                assert_eq!(a, r % p == 0, "p={p} r={r}");
                let b = p_core(&pt(&[r - 2, 2]), p).core == principal;
                assert_eq!(b, (r - 1) % p == 0, "p={p} r={r}");
            }
        }
    }

    #[test]
    fn concatenation_induction_compatibility() {
        // ξ^λ = ξ^γ ·_LR ξ^δ whenever λ = sort(γ•δ)
        for r in 2..=9u32 {
            for lambda in partitions_of(r) {
                if lambda.len() < 2 {
                    continue;
                }
                // split at each point
                for cut in 1..lambda.len() {
                    let gamma = Partition::new(lambda.parts()[..cut].to_vec()).unwrap();
                    let delta = Partition::new(lambda.parts()[cut..].to_vec()).unwrap();
                    let prod = lr_product(
                        &permutation_character(&gamma),
                        &permutation_character(&delta),
                    );
                    assert_eq!(prod, permutation_character(&lambda), "λ={lambda} cut={cut}");
                }
            }
        }
    }

    #[test]
    fn block_split_examples() {
        let xi = permutation_character(&pt(&[5, 1]));
        assert_eq!(block_split(&xi, 2).len(), 1);

        let xi = permutation_character(&pt(&[3, 2, 1]));
        let blocks = block_split(&xi, 2);
        assert!(blocks.len() >= 2);
        let single = CharacterVector::irreducible(pt(&[6]));
        assert_eq!(block_split(&single, 2).len(), 1);
        // union reconstructs
        let mut total = 0;
        for v in blocks.values() {
            total += v.support_len();
        }
        assert_eq!(total, xi.support_len());
    }

    #[test]
    fn spans_multiple_blocks_examples() {
        assert!(!spans_multiple_blocks(&pt(&[7]), 2));
        assert!(spans_multiple_blocks(&pt(&[3, 2, 1]), 2));
        assert!(!spans_multiple_blocks(&pt(&[4, 1, 1]), 2));
    }
}
