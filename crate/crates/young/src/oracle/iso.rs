//! Exact isomorphism testing between indecomposable summands of (possibly
//! different) Young permutation modules, through restricted intertwiner
//! spaces: Hom(U, V) = f ∘ Hom(M^λ, M^μ) ∘ e for summands U = im(e),
//! V = im(f).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::YoungError;
use crate::oracle::decompose::Summand;
use crate::oracle::homspace::{EndAlgebra, HomSpace};
use crate::oracle::linalg::{ColumnSolver, FpMatrix, SpanBasis};
use crate::oracle::tabloids::PermutationModule;
use crate::oracle::OracleConfig;

/// The restriction data turning an intertwiner M^λ → M^μ into a d×d matrix
/// U → V in the chosen summand bases: θ ↦ L·θ·B.
struct Restriction<'a> {
    hom: &'a HomSpace,
    /// basis of U as columns, src_dim × d
    b: &'a FpMatrix,
    /// coordinates-of-V reader, d × tgt_dim, with L·(basis of V) = I
    l: FpMatrix,
    d: usize,
}

impl<'a> Restriction<'a> {
    fn new(
        hom: &'a HomSpace,
        b_u: &'a FpMatrix,
        v_basis: &FpMatrix,
        f_mat: &FpMatrix,
    ) -> Result<Self, YoungError> {
        let d = b_u.cols;
        let cols: Vec<Vec<u8>> = (0..v_basis.cols)
            .map(|j| (0..v_basis.rows).map(|i| v_basis.get(i, j) as u8).collect())
            .collect();
        let solver = ColumnSolver::new(&cols, v_basis.rows, hom.p)
            .ok_or_else(|| YoungError::Internal("summand basis is not independent".into()))?;
        // L = V[R,:]^{-1} applied to f's rows: columns of f lie in im V, so
        // L·f reads off V-coordinates of f(x); f acts as identity on V
        let mut l = FpMatrix::zero(d, f_mat.rows, hom.p);
        for t in 0..f_mat.cols {
            let col: Vec<u8> = (0..f_mat.rows).map(|i| f_mat.get(i, t) as u8).collect();
            let coords = solver.solve(&col);
            for i in 0..d {
                l.set(i, t, coords[i] as u32);
            }
        }
        Ok(Restriction { hom, b: b_u, l, d })
    }

    /// L·(Σ coeffs_a θ_a)·B for an arbitrary coefficient vector.
    fn restrict_combination(&self, coeffs: &[u8]) -> FpMatrix {
        let theta = self.hom.combination_matrix(coeffs);
        self.l.mul(&theta.mul(self.b))
    }

    /// All restricted basis maps L·θ_a·B, visited in index order, computed
    /// in chunked batched passes over the class matrix.
    fn for_each_restricted(&self, mut visit: impl FnMut(usize, &FpMatrix)) {
        let p = self.hom.p;
        let d = self.d;
        let n_src = self.hom.src_dim;
        let n_tgt = self.hom.tgt_dim;
        let per = (50_000_000usize / (n_tgt * d).max(1)).clamp(1, self.hom.dim);
        let mut start = 0usize;
        while start < self.hom.dim {
            let len = per.min(self.hom.dim - start);
            // g[c][s][j] accumulates (θ_{start+c}·B)[s][j]
            let mut g = vec![0u8; len * n_tgt * d];
            for s in 0..n_tgt {
                for t in 0..n_src {
                    let c = self.hom.class_of(s, t);
                    if c < start || c >= start + len {
                        continue;
                    }
                    let base = (c - start) * n_tgt * d + s * d;
                    for j in 0..d {
                        let add = self.b.get(t, j);
                        if add != 0 {
                            let cur = g[base + j] as u32;
                            g[base + j] = ((cur + add) % p) as u8;
                        }
                    }
                }
            }
            for c in 0..len {
                let mut gm = FpMatrix::zero(n_tgt, d, p);
                for s in 0..n_tgt {
                    for j in 0..d {
                        gm.set(s, j, g[c * n_tgt * d + s * d + j] as u32);
                    }
                }
                let y = self.l.mul(&gm);
                visit(start + c, &y);
            }
            start += len;
        }
    }

    /// Dimension of the restricted intertwiner space, plus a basis of it as
    /// d×d matrices.
    fn span(&self) -> (usize, Vec<FpMatrix>) {
        let mut sb = SpanBasis::new(self.d * self.d, self.hom.p);
        let mut basis = Vec::new();
        self.for_each_restricted(|a, y| {
            let flat: Vec<u8> = (0..self.d)
                .flat_map(|i| (0..self.d).map(move |j| y.get(i, j) as u8))
                .collect();
            if sb.absorb(&flat, a) {
                basis.push(y.clone());
            }
        });
        (basis.len(), basis)
    }
}

fn flatten_dim(hom: &HomSpace, b: &FpMatrix, v: &FpMatrix, f: &FpMatrix) -> Result<usize, YoungError> {
    Ok(Restriction::new(hom, b, v, f)?.span().0)
}

/// Exact isomorphism test for summands U of M^λ and V of M^μ over the same
/// prime: never returns a wrong boolean. When randomized and swept searches
/// fail and the restricted hom space is too big to exhaust, an explicit
/// Unresolved error is raised instead of guessing.
#[allow(clippy::too_many_arguments)]
pub fn modules_isomorphic(
    mod_a: &PermutationModule,
    end_a: &EndAlgebra,
    sum_a: &Summand,
    mod_b: &PermutationModule,
    end_b: &EndAlgebra,
    sum_b: &Summand,
    cfg: &OracleConfig,
    seed: u64,
) -> Result<bool, YoungError> {
    if mod_a.p != mod_b.p {
        return Err(YoungError::Constraint("summands over different primes".into()));
    }
    if mod_a.lambda.degree() != mod_b.lambda.degree() {
        return Err(YoungError::DegreeMismatch {
            left: mod_a.lambda.degree(),
            right: mod_b.lambda.degree(),
        });
    }
    if sum_a.dim != sum_b.dim {
        return Ok(false);
    }
    let d = sum_a.dim;
    if d == 0 {
        return Ok(true);
    }
    let hom = HomSpace::new(mod_a, mod_b)?;
    if hom.dim == 0 {
        return Ok(false);
    }
    let f_mat = end_b.matrix_of(&sum_b.idempotent);
    let restriction = Restriction::new(&hom, &sum_a.basis, &sum_b.basis, &f_mat)?;
    let is_iso = |y: &FpMatrix| y.rank() == d;
    // deterministic sweep over single basis intertwiners
    let sweep = cfg.iso_random_trials.min(hom.dim);
    for a in 0..sweep {
        let mut coeffs = vec![0u8; hom.dim];
        coeffs[a] = 1;
        if is_iso(&restriction.restrict_combination(&coeffs)) {
            return Ok(true);
        }
    }
    // seeded random combinations
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cfg.iso_random_trials {
        let coeffs: Vec<u8> = (0..hom.dim).map(|_| rng.gen_range(0..hom.p) as u8).collect();
        if is_iso(&restriction.restrict_combination(&coeffs)) {
            return Ok(true);
        }
    }
    // exact regime: compare dim Hom(U,V) with dim End(U) and dim End(V);
    // an isomorphism U ≅ V forces all three to coincide
    let (huv, basis) = restriction.span();
    if huv == 0 {
        return Ok(false);
    }
    let e_mat = end_a.matrix_of(&sum_a.idempotent);
    let end_u = flatten_dim(&end_a.hom, &sum_a.basis, &sum_a.basis, &e_mat)?;
    let end_v = flatten_dim(&end_b.hom, &sum_b.basis, &sum_b.basis, &f_mat)?;
    if huv != end_u || huv != end_v {
        return Ok(false);
    }
    if huv <= 4 {
        // exhaustive search over the restricted hom space
        let p = hom.p;
        let total = (p as u64).pow(huv as u32);
        for code in 1..total {
            let mut c = code;
            let mut y = FpMatrix::zero(d, d, p);
            for b in &basis {
                let coef = (c % p as u64) as u32;
                c /= p as u64;
                if coef != 0 {
                    y = y.add(&b.scale(coef));
                }
            }
            if is_iso(&y) {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    Err(YoungError::Unresolved(format!(
        "isomorphism search exhausted on summands of M^{} and M^{} (restricted hom dimension {huv})",
        mod_a.lambda, mod_b.lambda
    )))
}
