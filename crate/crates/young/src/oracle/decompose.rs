//! Direct-sum decomposition of M^λ by splitting idempotents in End(M^λ):
//! Fitting splittings from swept and random corner elements for large
//! corners, and exact local/non-local certification through the corner
//! algebra's radical and semisimple quotient for small ones.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::YoungError;
use crate::oracle::algebra::{
    lift_idempotent, semisimple_is_field, semisimple_proper_idempotent, StructureAlgebra,
};
use crate::oracle::homspace::EndAlgebra;
use crate::oracle::linalg::{ColumnSolver, FpMatrix, SpanBasis};
use crate::oracle::OracleConfig;

/// An indecomposable direct summand of a permutation module: the primitive
/// idempotent cutting it out, its dimension, and a spanning set (columns).
pub struct Summand {
    pub idempotent: Vec<u8>,
    pub dim: usize,
    pub basis: FpMatrix,
}

/// All corner elements e·θ_a·e in one batched pass: a linearly independent
/// subset, in deterministic (contingency-index) order, as algebra
/// coordinates.
fn corner_elements(
    end: &EndAlgebra,
    e: &[u8],
    e_mat: &FpMatrix,
) -> Result<Vec<Vec<u8>>, YoungError> {
    let p = end.p();
    let n = end.module_dim;
    let d = end.dim();
    let w = end.vector_of(e);
    // row a of wm is the vector θ_a·w
    let mut wm = FpMatrix::zero(d, n, p);
    for s in 0..n {
        for t in 0..n {
            let a = end.hom.class_of(s, t);
            if w[t] != 0 {
                let cur = wm.get(a, s);
                wm.set(a, s, cur + w[t] as u32);
            }
        }
    }
    // row a of r is (e·θ_a·e)(t₀) = e_mat · (θ_a·w)
    let r = wm.mul(&e_mat.transpose());
    let mut span = SpanBasis::new(d, p);
    let mut out = Vec::new();
    for a in 0..d {
        let coords = end.coords_of_vector(r.row(a)).ok_or_else(|| {
            YoungError::Internal("corner element is not an endomorphism".into())
        })?;
        if coords.iter().all(|&x| x == 0) {
            continue;
        }
        if span.absorb(&coords, a) {
            out.push(coords);
        }
    }
    Ok(out)
}

/// Exact analysis of the corner algebra e·End·e on an explicit basis:
/// certifies locality (None) or produces a proper sub-idempotent f ≤ e.
fn exact_corner_split(
    end: &EndAlgebra,
    e: &[u8],
    corner: &[Vec<u8>],
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vec<u8>>, YoungError> {
    let p = end.p();
    let m = corner.len();
    let solver = ColumnSolver::new(corner, end.dim(), p)
        .ok_or_else(|| YoungError::Internal("corner basis is not independent".into()))?;
    let mut table = Vec::with_capacity(m * m);
    for x in corner {
        for y in corner {
            let prod = end.mul(x, y);
            table.push(solver.solve(&prod));
        }
    }
    let one = solver.solve(e);
    let alg = StructureAlgebra::new(p, m, table, one);
    let rad = alg.radical();
    let (quot, qmap) = alg.quotient(&rad);
    // documented guarantee: the quotient must be semisimple
    if !quot.radical().is_empty() {
        return Err(YoungError::Internal("radical of the semisimple quotient is non-zero".into()));
    }
    if semisimple_is_field(&quot) {
        return Ok(None);
    }
    let eq = semisimple_proper_idempotent(&quot, rng, 4 * m + 400).ok_or_else(|| {
        YoungError::Internal("no splitting element found in a non-local semisimple quotient".into())
    })?;
    let f_corner = lift_idempotent(&alg, &qmap.lift(&eq))?;
    // back to algebra coordinates
    let mut f = vec![0u32; end.dim()];
    for (i, &c) in f_corner.iter().enumerate() {
        for k in 0..end.dim() {
            f[k] = (f[k] + c as u32 * corner[i][k] as u32) % p;
        }
    }
    let f: Vec<u8> = f.into_iter().map(|x| x as u8).collect();
    if end.mul(&f, &f) != f || f.iter().all(|&x| x == 0) || f == *e {
        return Err(YoungError::Internal("lifted corner idempotent failed verification".into()));
    }
    if end.mul(&f, e) != f || end.mul(e, &f) != f {
        return Err(YoungError::Internal("lifted idempotent escapes the corner".into()));
    }
    Ok(Some(f))
}

/// Fitting splitting along x = e·z·e: if a rank-stabilized power of x has
/// rank strictly between 0 and rank(e), the projection onto its image along
/// its kernel is a proper sub-idempotent of e.
fn fitting_split(end: &EndAlgebra, e: &[u8], e_rank: usize, x: &[u8]) -> Option<Vec<u8>> {
    let p = end.p();
    let n = end.module_dim;
    let mut b = end.matrix_of(x);
    let mut rank = b.rank();
    if rank == 0 || rank >= e_rank {
        return None;
    }
    loop {
        let b2 = b.mul(&b);
        let r2 = b2.rank();
        if r2 == rank {
            break;
        }
        b = b2;
        rank = r2;
        if rank == 0 {
            return None;
        }
    }
    // stable: module = im(b) ⊕ ker(b)
    let u = b.column_space();
    let kernel = b.nullspace();
    debug_assert_eq!(u.cols + kernel.len(), n);
    let mut pm = FpMatrix::zero(n, n, p);
    for j in 0..u.cols {
        for i in 0..n {
            pm.set(i, j, u.get(i, j));
        }
    }
    for (j, k) in kernel.iter().enumerate() {
        for i in 0..n {
            pm.set(i, u.cols + j, k[i] as u32);
        }
    }
    let pinv = pm.inverse()?;
    let top: Vec<usize> = (0..u.cols).collect();
    let f_mat = u.mul(&pinv.select_rows(&top));
    let f = end.coords_of_matrix(&f_mat)?;
    if end.mul(&f, &f) != f || f.iter().all(|&v| v == 0) || f == *e {
        return None;
    }
    if end.mul(&f, e) != f || end.mul(e, &f) != f {
        return None;
    }
    Some(f)
}

/// Decomposes the identity of End(M^λ) into primitive orthogonal
/// idempotents and returns the corresponding indecomposable summands,
/// sorted by decreasing dimension then by idempotent coordinates.
pub fn decompose_end(
    end: &EndAlgebra,
    cfg: &OracleConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Summand>, YoungError> {
    let mut leaves: Vec<Summand> = Vec::new();
    let mut stack = vec![end.identity_coords()];
    while let Some(e) = stack.pop() {
        let e_mat = end.matrix_of(&e);
        let e_rank = e_mat.rank();
        if e_rank == 0 {
            return Err(YoungError::Internal("zero idempotent reached the splitting stack".into()));
        }
        if e_rank == 1 {
            leaves.push(Summand { idempotent: e, dim: 1, basis: e_mat.column_space() });
            continue;
        }
        let corner = corner_elements(end, &e, &e_mat)?;
        let m = corner.len();
        let mut split: Option<Vec<u8>> = None;
        let mut certified_local = m == 1;
        if !certified_local && m <= cfg.corner_exact_threshold {
            split = exact_corner_split(end, &e, &corner, rng)?;
            certified_local = split.is_none();
        } else if !certified_local {
            // deterministic sweep over corner elements, then random trials
            for x in corner.iter().take(cfg.fitting_trials) {
                split = fitting_split(end, &e, e_rank, x);
                if split.is_some() {
                    break;
                }
            }
            if split.is_none() {
                for _ in 0..cfg.fitting_trials {
                    let z: Vec<u8> =
                        (0..end.dim()).map(|_| rng.gen_range(0..end.p()) as u8).collect();
                    let x = end.mul(&end.mul(&e, &z), &e);
                    split = fitting_split(end, &e, e_rank, &x);
                    if split.is_some() {
                        break;
                    }
                }
            }
            if split.is_none() {
                // escalate: exact certification regardless of corner size
                split = exact_corner_split(end, &e, &corner, rng)?;
                certified_local = split.is_none();
            }
        }
        match split {
            Some(f) => {
                let g = end.sub(&e, &f);
                stack.push(f);
                stack.push(g);
            }
            None => {
                debug_assert!(certified_local);
                leaves.push(Summand {
                    idempotent: e,
                    dim: e_rank,
                    basis: e_mat.column_space(),
                });
            }
        }
    }
    // verification: orthogonal idempotents summing to 1, dimensions adding up
    let total: usize = leaves.iter().map(|s| s.dim).sum();
    if total != end.module_dim {
        return Err(YoungError::Internal(format!(
            "summand dimensions add to {total}, expected {}",
            end.module_dim
        )));
    }
    let mut sum = vec![0u8; end.dim()];
    for s in &leaves {
        sum = end.add(&sum, &s.idempotent);
    }
    if sum != end.identity_coords() {
        return Err(YoungError::Internal("idempotents do not sum to the identity".into()));
    }
    for (i, a) in leaves.iter().enumerate() {
        for (j, b) in leaves.iter().enumerate() {
            if i != j
                && !end
                    .mul(&a.idempotent, &b.idempotent)
                    .iter()
                    .all(|&x| x == 0)
            {
                return Err(YoungError::Internal("summand idempotents are not orthogonal".into()));
            }
        }
    }
    leaves.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.idempotent.cmp(&b.idempotent)));
    Ok(leaves)
}
