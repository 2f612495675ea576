//! Partition and composition combinatorics: dominance order, conjugation,
//! p-adic digit machinery, p-adic partition expansions, Young vertices,
//! p-cores and hook-length dimensions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::YoungError;

/// A partition: weakly decreasing sequence of positive integers.
///
/// The normal form strips trailing zeros, so `(5,1,0)` and `(5,1)` are the
/// same value. The empty sequence is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// A composition: finite sequence of non-negative integers, order significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

/// The p-adic expansion of a partition: λ = Σ λ(i)·p^i with every λ(i)
/// p-restricted. The expansion is unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAdicExpansion {
    pub p: u32,
    pub digits: Vec<Partition>,
}

/// A p-block label: the p-core together with the weight w, so that
/// |core| + p·w recovers the degree of the labelled partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockLabel {
    pub core: Partition,
    pub weight: u32,
}

impl Partition {
    /// Builds a partition from an already weakly decreasing sequence.
    /// Trailing zeros are stripped; interior zeros are rejected along with
    /// any increase.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, YoungError> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotDecreasing(format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary parts decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part at `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree r = Σ parts.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// λ'_j = #{i : λ_i ≥ j}. An involution.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        let mut j = 1;
        loop {
            let count = self.0.iter().filter(|&&x| x >= j).count() as u32;
            if count == 0 {
                break;
            }
            out.push(count);
            j += 1;
        }
        Partition(out)
    }

    /// Part-wise sum; a partition again since both inputs are decreasing.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.0.len().max(other.0.len());
        let parts: Vec<u32> = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Partition(parts)
    }

    /// Scalar multiple a·λ.
    pub fn scale(&self, a: u32) -> Partition {
        if a == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|&x| x * a).collect())
    }

    /// λ/a when every part is divisible by a.
    pub fn try_divide(&self, a: u32) -> Option<Partition> {
        if a == 0 || self.0.iter().any(|&x| x % a != 0) {
            return None;
        }
        Some(Partition(self.0.iter().map(|&x| x / a).collect()))
    }

    /// Concatenation λ•μ as a composition.
    pub fn concatenate(&self, other: &Partition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// Whether every successive difference and the last part are < p.
    pub fn is_p_restricted(&self, p: u32) -> bool {
        for i in 0..self.0.len() {
            if self.part(i) - self.part(i + 1) >= p {
                return false;
            }
        }
        true
    }

    /// Whether every part is divisible by a.
    pub fn is_divisible_by(&self, a: u32) -> bool {
        a != 0 && self.0.iter().all(|&x| x % a == 0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = YoungError;

    /// Parses comma-separated decreasing integers. "0", "-" and the empty
    /// string all denote the empty partition. Non-decreasing input is
    /// rejected rather than silently sorted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| YoungError::BadPartitionToken(s.to_string()))?;
        Partition::new(parts).map_err(|_| YoungError::NotDecreasing(s.to_string()))
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// Number of non-zero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&x| x != 0).count()
    }

    /// Sorts parts decreasingly and drops zeros. M^γ ≅ M^{sorted γ}, so this
    /// is the normal form for permutation-module labels.
    pub fn sort_to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    pub fn concatenate(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

/// Dominance order: μ ⊵ λ iff every partial sum of μ weakly exceeds the
/// corresponding partial sum of λ. Only defined for equal degrees.
pub fn dominates(mu: &Partition, lambda: &Partition) -> Result<bool, YoungError> {
    if mu.degree() != lambda.degree() {
        return Err(YoungError::DegreeMismatch {
            left: mu.degree(),
            right: lambda.degree(),
        });
    }
    let n = mu.len().max(lambda.len());
    let mut su = 0u64;
    let mut sl = 0u64;
    for i in 0..n {
        su += mu.part(i) as u64;
        sl += lambda.part(i) as u64;
        if su < sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Base-p digits of m, little-endian. Empty for m = 0.
pub fn p_digits(mut m: u64, p: u32) -> Vec<u32> {
    let mut digits = Vec::new();
    let p = p as u64;
    while m > 0 {
        digits.push((m % p) as u32);
        m /= p;
    }
    digits
}

/// ν(m): the exponent of the highest power of p dividing m. Requires m ≥ 1.
pub fn p_valuation(m: u64, p: u32) -> Result<u32, YoungError> {
    if m == 0 {
        return Err(YoungError::ValuationOfZero);
    }
    let p = p as u64;
    let mut m = m;
    let mut v = 0;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    Ok(v)
}

/// Digit of m at p-power level i.
pub fn p_digit(m: u64, p: u32, i: u32) -> u32 {
    let q = (p as u64).pow(i);
    ((m / q) % p as u64) as u32
}

/// The unique p-adic expansion λ = Σ λ(i)·p^i with every λ(i) p-restricted.
///
/// Computed from base-p digits of the successive differences
/// d_j = λ_j − λ_{j+1}: the level-i digit partition has j-th part
/// Σ_{m ≥ j} d_m(i), which reconstructs λ part-wise by telescoping.
pub fn p_adic_expansion(lambda: &Partition, p: u32) -> PAdicExpansion {
    assert!(p >= 2, "p must be at least 2");
    let l = lambda.len();
    if l == 0 {
        return PAdicExpansion { p, digits: Vec::new() };
    }
    // digit_rows[j] = base-p digits of d_j
    let digit_rows: Vec<Vec<u32>> = (0..l)
        .map(|j| p_digits((lambda.part(j) - lambda.part(j + 1)) as u64, p))
        .collect();
    let levels = digit_rows.iter().map(|d| d.len()).max().unwrap_or(0);
    let mut digits = Vec::with_capacity(levels);
    for i in 0..levels {
        // suffix sums of the level-i digits over rows
        let mut parts = vec![0u32; l];
        let mut acc = 0u32;
        for j in (0..l).rev() {
            acc += digit_rows[j].get(i).copied().unwrap_or(0);
            parts[j] = acc;
        }
        digits.push(Partition::new(parts).expect("suffix sums are decreasing"));
    }
    while digits.last().map_or(false, |d| d.is_empty()) {
        digits.pop();
    }
    PAdicExpansion { p, digits }
}

impl PAdicExpansion {
    /// Σ λ(i)·p^i, for checking reconstruction.
    pub fn reconstruct(&self) -> Partition {
        let mut acc = Partition::empty();
        for (i, d) in self.digits.iter().enumerate() {
            acc = acc.add(&d.scale(self.p.pow(i as u32)));
        }
        acc
    }

    /// Degrees r_i = |λ(i)| per level.
    pub fn level_degrees(&self) -> Vec<u64> {
        self.digits.iter().map(|d| d.degree()).collect()
    }

    /// Index of the top non-empty level, or None for the empty expansion.
    pub fn top_level(&self) -> Option<usize> {
        if self.digits.is_empty() {
            None
        } else {
            Some(self.digits.len() - 1)
        }
    }
}

/// The Young vertex partition ρ of Y^λ: |λ(i)| parts equal to p^i for each
/// level i of the p-adic expansion, sorted decreasingly.
pub fn young_vertex(lambda: &Partition, p: u32) -> Partition {
    let exp = p_adic_expansion(lambda, p);
    let mut parts = Vec::new();
    for (i, d) in exp.digits.iter().enumerate().rev() {
        let q = p.pow(i as u32);
        for _ in 0..d.degree() {
            parts.push(q);
        }
    }
    Partition(parts)
}

/// The p-core and weight of λ, via the abacus: beta-numbers are distributed
/// over p runners and every bead slides as far up its runner as possible.
/// The result is independent of any stripping order of rim p-hooks.
pub fn p_core(lambda: &Partition, p: u32) -> BlockLabel {
    assert!(p >= 2, "p must be at least 2");
    let l = lambda.len();
    // bead count: smallest positive multiple of p that is >= l
    let beads = ((l / p as usize) + 1) * p as usize;
    let betas: Vec<u64> = (0..beads)
        .map(|i| lambda.part(i) as u64 + (beads - 1 - i) as u64)
        .collect();
    let mut runners: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
    for &b in &betas {
        runners[(b % p as u64) as usize].push(b / p as u64);
    }
    let mut weight = 0u64;
    let mut new_betas = Vec::with_capacity(beads);
    for (c, positions) in runners.iter_mut().enumerate() {
        positions.sort_unstable();
        for (k, &pos) in positions.iter().enumerate() {
            weight += pos - k as u64;
            new_betas.push(c as u64 + p as u64 * k as u64);
        }
    }
    new_betas.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<u32> = new_betas
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (beads - 1 - i) as u64) as u32)
        .collect();
    BlockLabel {
        core: Partition::new(parts).expect("abacus read-off is decreasing"),
        weight: weight as u32,
    }
}

/// f^λ = r! / Π hook lengths, exactly.
pub fn hook_dimension(lambda: &Partition) -> BigUint {
    let r = lambda.degree();
    let conj = lambda.conjugate();
    let mut numerator = BigUint::from(1u32);
    for k in 1..=r {
        numerator *= BigUint::from(k);
    }
    let mut hooks = BigUint::from(1u32);
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) as usize {
            let arm = lambda.part(i) as u64 - j as u64 - 1;
            let leg = conj.part(j) as u64 - i as u64 - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    debug_assert_eq!(&numerator % &hooks, BigUint::from(0u32));
    numerator / hooks
}

/// All partitions of r, each exactly once, in descending lexicographic
/// order. This order refines dominance-descending.
pub fn partitions_of(r: u32) -> PartitionIter {
    PartitionIter {
        current: if r == 0 { Some(Vec::new()) } else { Some(vec![r]) },
        started: false,
    }
}

pub struct PartitionIter {
    current: Option<Vec<u32>>,
    started: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if !self.started {
            self.started = true;
            return self.current.clone().map(Partition);
        }
        let cur = self.current.as_mut()?;
        // last index holding a part >= 2
        let k = match cur.iter().rposition(|&x| x >= 2) {
            Some(k) => k,
            None => {
                self.current = None;
                return None;
            }
        };
        let rem: u32 = cur[k..].iter().sum();
        let v = cur[k] - 1;
        cur.truncate(k);
        let mut left = rem;
        while left > 0 {
            let part = left.min(v);
            cur.push(part);
            left -= part;
        }
        Some(Partition(cur.clone()))
    }
}
