//! The reduction calculus for p-Kostka numbers [M^λ : Y^μ]: Lucas binomials,
//! the closed two-part formula, the divide-by-p and vanishing rules,
//! first-row stripping, refinement enumeration, and the level-product
//! recursion over Brauer-quotient orbit data, with a pluggable exact base
//! oracle for the projective (p-restricted) targets.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{check_prime, YoungError};
use crate::oracle::linalg::inv_mod;
use crate::oracle::{Oracle, OracleConfig};
use crate::partition::{dominates, p_adic_expansion, Composition, Partition};

/// How a computed multiplicity is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResultKind {
    Exact,
    LowerBound,
    Unresolved,
}

/// One applied reduction, with the (λ, μ) pair before and (when the rule
/// rewrites the pair) after.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub rule: &'static str,
    pub from: (Vec<u32>, Vec<u32>),
    pub to: Option<(Vec<u32>, Vec<u32>)>,
}

/// The outcome of a p-Kostka query: an exact value, a certified lower bound,
/// or an explicit refusal — never a guess.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PKostkaResult {
    pub kind: ResultKind,
    pub value: Option<u64>,
    pub trace: Vec<ReductionStep>,
}

impl PKostkaResult {
    fn exact(value: u64, trace: Vec<ReductionStep>) -> Self {
        PKostkaResult { kind: ResultKind::Exact, value: Some(value), trace }
    }

    fn unresolved(trace: Vec<ReductionStep>) -> Self {
        PKostkaResult { kind: ResultKind::Unresolved, value: None, trace }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("result serializes")
    }
}

/// C(n, k) mod p by Lucas' theorem: the product of digit binomials.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u32) -> u32 {
    if k > n {
        return 0;
    }
    let p64 = p as u64;
    let mut out = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p64, k % p64);
        if kd > nd {
            return 0;
        }
        out = out * binom_below_p(nd as u32, kd as u32, p) as u64 % p64;
        n /= p64;
        k /= p64;
    }
    out as u32
}

/// C(n, k) mod p for n, k < p, via modular inverses.
fn binom_below_p(n: u32, k: u32, p: u32) -> u32 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k as u64 {
        num = num * ((n as u64 - i) % p as u64) % p as u64;
        den = den * ((i + 1) % p as u64) % p as u64;
    }
    (num * inv_mod(den as u32, p) as u64 % p as u64) as u32
}

/// The closed two-part formula: [M^{(r-j,j)} : Y^{(r-s,s)}] is 1 exactly when
/// C(r−2s, j−s) is non-zero mod p, and 0 otherwise.
pub fn two_part_pkostka(r: u64, j: u64, s: u64, p: u32) -> Result<u64, YoungError> {
    check_prime(p)?;
    if s > j || 2 * j > r {
        return Err(YoungError::Constraint(format!(
            "two-part query needs s ≤ j ≤ r/2, got r={r}, j={j}, s={s}"
        )));
    }
    Ok(u64::from(binomial_mod_p(r - 2 * s, j - s, p) != 0))
}

/// When both partitions are divisible by p, the query [M^λ:Y^μ] equals
/// [M^{λ/p} : Y^{μ/p}]; returns the divided pair, or None when inapplicable.
pub fn divide_by_p_reduction(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
) -> Result<Option<(Partition, Partition)>, YoungError> {
    check_prime(p)?;
    check_degrees(lambda, mu)?;
    match (lambda.try_divide(p), mu.try_divide(p)) {
        (Some(l), Some(m)) => Ok(Some((l, m))),
        _ => Ok(None),
    }
}

/// When p divides the degree, μ is divisible by p but λ is not, the
/// multiplicity vanishes (Y^μ then lives in a block no constituent of M^λ
/// touches). Returns Some(0) exactly in that case.
pub fn vanishing_rule(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
) -> Result<Option<u64>, YoungError> {
    check_prime(p)?;
    check_degrees(lambda, mu)?;
    let r = lambda.degree();
    if r > 0 && r % p as u64 == 0 && mu.is_divisible_by(p) && !lambda.is_divisible_by(p) {
        return Ok(Some(0));
    }
    Ok(None)
}

/// Strips c = a·p^n from the first rows of both partitions when the
/// stripped-row theorem applies: with reduced pair (λ, μ), s the top p-adic
/// level of μ, the conditions p^n > p^s and p^n > λ_2 guarantee
/// [M^Λ:Y^Μ] = [M^λ:Y^μ]. Among admissible (n, a) the largest stripped amount
/// c is chosen, ties broken toward larger n. Single-row Λ is left alone: the
/// reduced first row must stay positive and at least λ_2.
pub fn first_row_reduction(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
) -> Result<Option<(Partition, Partition, u32, u32)>, YoungError> {
    check_prime(p)?;
    check_degrees(lambda, mu)?;
    if lambda.len() <= 1 {
        return Ok(None);
    }
    let l1 = lambda.part(0) as u64;
    let l2 = lambda.part(1) as u64;
    let m1 = mu.part(0) as u64;
    let m2 = mu.part(1) as u64;
    let cmax = (l1 - l2).min(m1.saturating_sub(m2));
    if cmax == 0 {
        return Ok(None);
    }
    let mut best: Option<(u64, u32, u32)> = None; // (c, n, a)
    let mut pn = 1u64;
    let mut n = 0u32;
    loop {
        if pn > l2 {
            // p^n > λ_2 holds; scan stripped amounts a·p^n ≤ cmax
            for a in (1..=cmax / pn).rev() {
                let c = a * pn;
                let reduced_mu = strip_first_row(mu, c as u32);
                let s = p_adic_expansion(&reduced_mu, p).top_level().unwrap_or(0);
                if n as usize > s || reduced_mu.is_empty() {
                    let better = match best {
                        None => true,
                        Some((bc, bn, _)) => c > bc || (c == bc && n > bn),
                    };
                    if better {
                        best = Some((c, n, a as u32));
                    }
                    break; // larger a within this n already visited
                }
            }
        }
        match pn.checked_mul(p as u64) {
            Some(next) if next <= cmax => {
                pn = next;
                n += 1;
            }
            _ => break,
        }
    }
    Ok(best.map(|(c, n, a)| {
        (strip_first_row(lambda, c as u32), strip_first_row(mu, c as u32), n, a)
    }))
}

fn strip_first_row(q: &Partition, c: u32) -> Partition {
    let mut parts = q.parts().to_vec();
    parts[0] -= c;
    Partition::from_unsorted(parts)
}

fn check_degrees(lambda: &Partition, mu: &Partition) -> Result<(), YoungError> {
    if lambda.degree() != mu.degree() {
        return Err(YoungError::DegreeMismatch { left: lambda.degree(), right: mu.degree() });
    }
    Ok(())
}

/// A level refinement of λ: row i holds the composition γ^(i), so that
/// Σ_i γ^(i)_j · p^i = λ_j column-wise and Σ_j γ^(i)_j = r_i row-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementMatrix {
    pub p: u32,
    /// rows[i][j] = γ^(i)_j
    pub rows: Vec<Vec<u32>>,
}

impl RefinementMatrix {
    /// The level-i block as a composition.
    pub fn level(&self, i: usize) -> Composition {
        Composition::new(self.rows[i].clone())
    }

    pub fn reconstructs(&self, lambda: &Partition) -> bool {
        let cols = self.rows.first().map_or(0, |r| r.len());
        (0..cols).all(|j| {
            let total: u64 = self
                .rows
                .iter()
                .enumerate()
                .map(|(i, row)| row[j] as u64 * (self.p as u64).pow(i as u32))
                .sum();
            total == lambda.part(j) as u64
        }) && cols == lambda.len()
    }

    pub fn level_degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().map(|&x| x as u64).sum()).collect()
    }
}

/// All refinement matrices for λ with prescribed level degrees r_0..r_s, in
/// row-major lexicographic order, each exactly once.
pub fn enumerate_refinements(
    lambda: &Partition,
    levels: &[u64],
    p: u32,
) -> Result<Vec<RefinementMatrix>, YoungError> {
    check_prime(p)?;
    let weighted: u64 = levels
        .iter()
        .enumerate()
        .map(|(i, &ri)| ri * (p as u64).pow(i as u32))
        .sum();
    if weighted != lambda.degree() {
        return Err(YoungError::DegreeMismatch { left: weighted, right: lambda.degree() });
    }
    let s1 = levels.len();
    let cols = lambda.len();
    let mut remaining = levels.to_vec();
    // columns filled left to right; each column is a digit vector with
    // Σ v_i p^i = λ_j and v_i within the remaining row budgets
    let mut matrices = Vec::new();
    let mut current: Vec<Vec<u32>> = vec![vec![0; cols]; s1];
    fill_column(lambda, p, 0, cols, &mut remaining, &mut current, &mut matrices);
    matrices.sort_by(|a, b| a.rows.cmp(&b.rows));
    Ok(matrices)
}

fn fill_column(
    lambda: &Partition,
    p: u32,
    j: usize,
    cols: usize,
    remaining: &mut Vec<u64>,
    current: &mut Vec<Vec<u32>>,
    out: &mut Vec<RefinementMatrix>,
) {
    if j == cols {
        if remaining.iter().all(|&x| x == 0) {
            out.push(RefinementMatrix { p, rows: current.clone() });
        }
        return;
    }
    let target = lambda.part(j) as u64;
    let s1 = remaining.len();
    // enumerate digit vectors for this column from the top level down
    fn digits(
        lambda: &Partition,
        p: u32,
        j: usize,
        cols: usize,
        level: usize,
        left: u64,
        remaining: &mut Vec<u64>,
        current: &mut Vec<Vec<u32>>,
        out: &mut Vec<RefinementMatrix>,
    ) {
        if level == 0 {
            if left <= remaining[0] {
                current[0][j] = left as u32;
                remaining[0] -= left;
                fill_column(lambda, p, j + 1, cols, remaining, current, out);
                remaining[0] += left;
                current[0][j] = 0;
            }
            return;
        }
        let pw = (p as u64).pow(level as u32);
        let top = (left / pw).min(remaining[level]);
        for v in 0..=top {
            current[level][j] = v as u32;
            remaining[level] -= v;
            digits(lambda, p, j, cols, level - 1, left - v * pw, remaining, current, out);
            remaining[level] += v;
            current[level][j] = 0;
        }
    }
    digits(lambda, p, j, cols, s1 - 1, target, remaining, current, out);
}

/// A supplier of exact p-Kostka values for the recursion's base cases
/// (p-restricted, i.e. projective, targets).
pub trait PKostkaBase: Sync {
    fn pkostka_base(&self, lambda: &Partition, mu: &Partition, p: u32) -> Result<u64, YoungError>;
}

impl PKostkaBase for Oracle {
    fn pkostka_base(&self, lambda: &Partition, mu: &Partition, p: u32) -> Result<u64, YoungError> {
        self.pkostka(lambda, mu, p)
    }
}

/// The reduction engine: owns a memo of exact values and drives the rules in
/// a fixed order, recording each applied step.
pub struct Engine<'a, B: PKostkaBase + ?Sized> {
    base: &'a B,
    memo: Mutex<HashMap<(Partition, Partition, u32), u64>>,
}

impl<'a, B: PKostkaBase + ?Sized> Engine<'a, B> {
    pub fn new(base: &'a B) -> Self {
        Engine { base, memo: Mutex::new(HashMap::new()) }
    }

    /// Exact value or an explicit error; used for recursive factors.
    pub fn exact(&self, lambda: &Partition, mu: &Partition, p: u32) -> Result<u64, YoungError> {
        let key = (lambda.clone(), mu.clone(), p);
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return Ok(v);
        }
        let res = self.pkostka(lambda, mu, p)?;
        match (res.kind, res.value) {
            (ResultKind::Exact, Some(v)) => {
                self.memo.lock().unwrap().insert(key, v);
                Ok(v)
            }
            _ => Err(YoungError::Unresolved(format!(
                "no exact value for [M^{lambda} : Y^{mu}] at p={p}"
            ))),
        }
    }

    /// The level-product recursion: sums over all refinements of λ matching
    /// the level degrees of μ's p-adic expansion, multiplying the factors
    /// [M^{sort(γ^(i))} : Y^{μ(i)}]. Each factor has strictly smaller degree,
    /// and p-restricted targets delegate to the base oracle.
    pub fn klyachko_pkostka(
        &self,
        lambda: &Partition,
        mu: &Partition,
        p: u32,
    ) -> Result<u64, YoungError> {
        check_prime(p)?;
        check_degrees(lambda, mu)?;
        let expansion = p_adic_expansion(mu, p);
        if mu.is_p_restricted(p) {
            return self.base.pkostka_base(lambda, mu, p);
        }
        let levels = expansion.level_degrees();
        let mut total = 0u64;
        for matrix in enumerate_refinements(lambda, &levels, p)? {
            let mut product = 1u64;
            for (i, digit) in expansion.digits.iter().enumerate() {
                let gamma = matrix.level(i).sort_to_partition();
                let factor = self.exact(&gamma, digit, p)?;
                product *= factor;
                if product == 0 {
                    break;
                }
            }
            total += product;
        }
        Ok(total)
    }

    /// The split bound: [M^{λ+p^nα} : Y^{μ+p^nδ}] ≥ [M^λ:Y^μ]·[M^α:Y^δ] for
    /// n above the top p-adic level of μ, exact when p^n > λ_1.
    pub fn split_bound(
        &self,
        lambda: &Partition,
        alpha: &Partition,
        mu: &Partition,
        delta: &Partition,
        n: u32,
        p: u32,
    ) -> Result<PKostkaResult, YoungError> {
        check_prime(p)?;
        check_degrees(lambda, mu)?;
        check_degrees(alpha, delta)?;
        let s = p_adic_expansion(mu, p).top_level().unwrap_or(0);
        if !mu.is_empty() && n as usize <= s {
            return Err(YoungError::Constraint(format!(
                "split bound needs n > {s} (the top p-adic level of {mu}), got n={n}"
            )));
        }
        let left = self.exact(lambda, mu, p);
        let right = self.exact(alpha, delta, p);
        let (f1, f2) = match (left, right) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Ok(PKostkaResult::unresolved(Vec::new())),
        };
        let certified = (p as u64).checked_pow(n).is_some_and(|pn| pn > lambda.part(0) as u64);
        Ok(PKostkaResult {
            kind: if certified { ResultKind::Exact } else { ResultKind::LowerBound },
            value: Some(f1 * f2),
            trace: Vec::new(),
        })
    }

    /// The orchestrator: dominance, identity, two-part, vanishing,
    /// divide-by-p, and first-row stripping, in that order and repeatedly,
    /// then the level recursion (or the base oracle for p-restricted
    /// targets). Budget refusals surface as kind = Unresolved, never as a
    /// number.
    pub fn pkostka(
        &self,
        lambda: &Partition,
        mu: &Partition,
        p: u32,
    ) -> Result<PKostkaResult, YoungError> {
        check_prime(p)?;
        check_degrees(lambda, mu)?;
        let mut lam = lambda.clone();
        let mut m = mu.clone();
        let mut trace = Vec::new();
        let pair = |a: &Partition, b: &Partition| (a.parts().to_vec(), b.parts().to_vec());
        loop {
            if !dominates(&m, &lam)? {
                trace.push(ReductionStep { rule: "dominance", from: pair(&lam, &m), to: None });
                return Ok(PKostkaResult::exact(0, trace));
            }
            if lam == m {
                trace.push(ReductionStep { rule: "identity", from: pair(&lam, &m), to: None });
                return Ok(PKostkaResult::exact(1, trace));
            }
            if lam.len() <= 2 && m.len() <= 2 {
                let value = two_part_pkostka(
                    lam.degree(),
                    lam.part(1) as u64,
                    m.part(1) as u64,
                    p,
                )?;
                trace.push(ReductionStep { rule: "two-part", from: pair(&lam, &m), to: None });
                return Ok(PKostkaResult::exact(value, trace));
            }
            if let Some(zero) = vanishing_rule(&lam, &m, p)? {
                trace.push(ReductionStep { rule: "vanishing", from: pair(&lam, &m), to: None });
                return Ok(PKostkaResult::exact(zero, trace));
            }
            if let Some((l2, m2)) = divide_by_p_reduction(&lam, &m, p)? {
                trace.push(ReductionStep {
                    rule: "divide-by-p",
                    from: pair(&lam, &m),
                    to: Some(pair(&l2, &m2)),
                });
                lam = l2;
                m = m2;
                continue;
            }
            if let Some((l2, m2, _, _)) = first_row_reduction(&lam, &m, p)? {
                trace.push(ReductionStep {
                    rule: "strip-first-row",
                    from: pair(&lam, &m),
                    to: Some(pair(&l2, &m2)),
                });
                lam = l2;
                m = m2;
                continue;
            }
            break;
        }
        let outcome = if m.is_p_restricted(p) {
            trace.push(ReductionStep { rule: "oracle", from: pair(&lam, &m), to: None });
            self.base.pkostka_base(&lam, &m, p)
        } else {
            trace.push(ReductionStep { rule: "klyachko", from: pair(&lam, &m), to: None });
            self.klyachko_pkostka(&lam, &m, p)
        };
        match outcome {
            Ok(v) => Ok(PKostkaResult::exact(v, trace)),
            Err(YoungError::BudgetExceeded(_)) | Err(YoungError::Unresolved(_)) => {
                Ok(PKostkaResult::unresolved(trace))
            }
            Err(e) => Err(e),
        }
    }
}

/// One-shot convenience entry point: a fresh oracle capped at `budget` basis
/// tabloids per module serves as the base.
pub fn pkostka(
    lambda: &Partition,
    mu: &Partition,
    p: u32,
    budget: u64,
) -> Result<PKostkaResult, YoungError> {
    let oracle = Oracle::new(OracleConfig { max_tabloids: budget, ..OracleConfig::desk_scale() });
    Engine::new(&oracle).pkostka(lambda, mu, p)
}
