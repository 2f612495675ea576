//! Closed-form classification of the indecomposable Young permutation
//! modules M^λ over F_p, the explicit two-part parity machinery for p = 2,
//! and detection of direct summands outside the principal block.

use serde::Serialize;

use crate::error::{check_prime, YoungError};
use crate::partition::Partition;

/// The outcome of an indecomposability query: the verdict, the deciding
/// rule, and — when available — a Young label μ ≠ λ certified to appear in
/// M^λ as a witness of decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndecomposabilityVerdict {
    pub indecomposable: bool,
    pub rule: &'static str,
    pub witness: Option<Partition>,
}

impl IndecomposabilityVerdict {
    fn indec(rule: &'static str) -> Self {
        IndecomposabilityVerdict { indecomposable: true, rule, witness: None }
    }

    fn dec(rule: &'static str, witness: Option<Partition>) -> Self {
        IndecomposabilityVerdict { indecomposable: false, rule, witness }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdict serializes")
    }
}

/// 2-adic valuation.
fn nu2(x: u64) -> u32 {
    debug_assert!(x != 0);
    x.trailing_zeros()
}

/// Classifies M^λ over F_p.
pub fn is_indecomposable(
    lambda: &Partition,
    p: u32,
) -> Result<IndecomposabilityVerdict, YoungError> {
    check_prime(p)?;
    let r = lambda.degree();
    if lambda.len() <= 1 {
        // M^{(r)} is the trivial module
        return Ok(IndecomposabilityVerdict::indec("one-row"));
    }
    if p != 2 {
        // odd p: only (r), and (r−1,1) when p | r
        if r % p as u64 == 0 && lambda.parts() == [r as u32 - 1, 1] {
            return Ok(IndecomposabilityVerdict::indec("odd-p"));
        }
        return Ok(IndecomposabilityVerdict::dec("odd-p", None));
    }
    if r % 2 == 1 {
        // p = 2, odd degree: only the trivial module; a two-part λ still
        // gets a parity witness
        let witness = if lambda.len() == 2 {
            two_part_witness(r, lambda.part(1) as u64)
        } else {
            None
        };
        return Ok(IndecomposabilityVerdict::dec("p2-r-odd", witness));
    }
    if lambda.len() == 2 {
        return two_part_verdict(r, lambda.part(1) as u64);
    }
    // p = 2, even degree, three or more rows: always decomposable; for
    // λ = (r−2,1,1) the summand Y^{(r-1,1)} is an explicit witness
    let is_r211 = lambda.len() == 3
        && lambda.part(0) as u64 == r - 2
        && lambda.part(1) == 1
        && lambda.part(2) == 1;
    let witness = if is_r211 {
        Some(Partition::new(vec![r as u32 - 1, 1]).expect("valid witness"))
    } else {
        None
    };
    // degree 4 is special: S_4 has a single 2-block, but both long λ still
    // decompose — (2,1,1) with summand Y^{(3,1)}, and the regular (1^4)
    let rule = if r == 4 { "r4-special" } else { "p2-long" };
    Ok(IndecomposabilityVerdict::dec(rule, witness))
}

/// The p = 2, even-degree two-part criterion: M^{(r−j,j)} is indecomposable
/// exactly when 2^{n_j} divides r − 2j, with n_j = min{α : j < 2^α}; in the
/// decomposable case the Young label (r−j+2^ν, j−2^ν), ν = ν₂(r−2j), occurs
/// with multiplicity one and is returned as witness.
pub fn two_part_verdict(r: u64, j: u64) -> Result<IndecomposabilityVerdict, YoungError> {
    if r % 2 != 0 || j == 0 || 2 * j > r {
        return Err(YoungError::Constraint(format!(
            "two-part verdict needs even r and 0 < 2j ≤ r, got r={r}, j={j}"
        )));
    }
    let nj = n_of(j);
    if r == 2 * j || (r - 2 * j) % (1u64 << nj) == 0 {
        return Ok(IndecomposabilityVerdict::indec("p2-two-part"));
    }
    Ok(IndecomposabilityVerdict::dec("p2-two-part", two_part_witness(r, j)))
}

/// min{α : j < 2^α}.
fn n_of(j: u64) -> u32 {
    let mut a = 0u32;
    while j >= (1u64 << a) {
        a += 1;
    }
    a
}

/// Witness label for a decomposable two-part M^{(r−j,j)} at p = 2 (any
/// parity of r): (r−j+2^ν, j−2^ν) with ν = ν₂(r−2j).
fn two_part_witness(r: u64, j: u64) -> Option<Partition> {
    if j == 0 || r == 2 * j {
        return None;
    }
    let v = 1u64 << nu2(r - 2 * j);
    if v > j {
        return None;
    }
    Partition::new(vec![(r - j + v) as u32, (j - v) as u32].into_iter().filter(|&x| x > 0).collect::<Vec<_>>())
        .ok()
}

/// The complete list of partitions of r with M^λ indecomposable over F_p, in
/// descending lexicographic order.
pub fn indecomposable_partitions(r: u64, p: u32) -> Result<Vec<Partition>, YoungError> {
    check_prime(p)?;
    if r == 0 {
        return Ok(vec![Partition::empty()]);
    }
    let row = Partition::new(vec![r as u32]).expect("single row");
    let mut out = vec![row];
    if p != 2 {
        if r % p as u64 == 0 && r >= 2 {
            out.push(Partition::new(vec![r as u32 - 1, 1]).expect("valid"));
        }
        return Ok(out);
    }
    if r % 2 == 1 {
        return Ok(out);
    }
    // even degree at p = 2: k_i = 2^{i−1} + (t mod 2^{i−1}) for i = 1..n,
    // where 2^n ≤ r < 2^{n+1} and t = (r − 2^n)/2
    let n = 63 - r.leading_zeros() as u64;
    let t = (r - (1u64 << n)) / 2;
    for i in 1..=n {
        let block = 1u64 << (i - 1);
        let k = block + (t % block);
        out.push(Partition::new(vec![(r - k) as u32, k as u32]).expect("valid"));
    }
    Ok(out)
}

/// Whether M^λ has a direct summand outside the principal p-block: for odd p,
/// and for p = 2 with odd degree, this happens exactly when M^λ is
/// decomposable; for p = 2 with even degree exactly when λ has at least
/// three rows, r ≥ 6, and λ ≠ (r−2,1,1). Always equals the character-level
/// test [`crate::character::spans_multiple_blocks`].
pub fn has_nonprincipal_summand(lambda: &Partition, p: u32) -> Result<bool, YoungError> {
    check_prime(p)?;
    let r = lambda.degree();
    if p != 2 || r % 2 == 1 {
        // sole exception: the regular module of S_3 at p = 3 decomposes into
        // projectives that all lie in the (unique) principal block
        if p == 3 && lambda.parts() == [1, 1, 1] {
            return Ok(false);
        }
        return Ok(!is_indecomposable(lambda, p)?.indecomposable);
    }
    let is_r211 = lambda.len() == 3
        && r >= 4
        && lambda.part(0) as u64 == r - 2
        && lambda.part(1) == 1
        && lambda.part(2) == 1;
    Ok(lambda.len() >= 3 && r >= 6 && !is_r211)
}
