//! Intertwiner spaces between Young permutation modules via the double-coset
//! (contingency-matrix) basis, and the endomorphism algebra of M^λ in a
//! compact class-matrix representation.

use std::collections::HashMap;

use crate::error::YoungError;
use crate::oracle::algebra::StructureAlgebra;
use crate::oracle::linalg::FpMatrix;
use crate::oracle::tabloids::PermutationModule;
use crate::partition::Partition;

/// All non-negative integer matrices with the given row and column sums, in
/// row-major lexicographic order.
pub fn contingency_matrices(rows: &[u32], cols: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let rsum: u64 = rows.iter().map(|&x| x as u64).sum();
    let csum: u64 = cols.iter().map(|&x| x as u64).sum();
    if rsum != csum {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut remaining: Vec<u32> = cols.to_vec();
    let mut acc: Vec<Vec<u32>> = Vec::new();
    fill_rows(rows, 0, &mut remaining, &mut acc, &mut out);
    out
}

fn fill_rows(
    rows: &[u32],
    i: usize,
    remaining: &mut Vec<u32>,
    acc: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if i == rows.len() {
        if remaining.iter().all(|&x| x == 0) {
            out.push(acc.clone());
        }
        return;
    }
    let mut row = vec![0u32; remaining.len()];
    fill_row(rows[i], 0, remaining, &mut row, &mut |row, remaining| {
        acc.push(row.to_vec());
        fill_rows(rows, i + 1, remaining, acc, out);
        acc.pop();
    });
}

fn fill_row(
    left: u32,
    j: usize,
    remaining: &mut Vec<u32>,
    row: &mut Vec<u32>,
    done: &mut impl FnMut(&[u32], &mut Vec<u32>),
) {
    if j == remaining.len() {
        if left == 0 {
            done(row, remaining);
        }
        return;
    }
    if j + 1 == remaining.len() {
        // last column: forced value
        if left <= remaining[j] {
            row[j] = left;
            remaining[j] -= left;
            done(row, remaining);
            remaining[j] += left;
            row[j] = 0;
        }
        return;
    }
    // descending values give... ascending lexicographic order needs 0 first;
    // row-major lex order over matrices: iterate smallest entry first
    let hi = left.min(remaining[j]);
    for v in 0..=hi {
        row[j] = v;
        remaining[j] -= v;
        fill_row(left - v, j + 1, remaining, row, done);
        remaining[j] += v;
        row[j] = 0;
    }
}

/// The profile of a pair of tabloids: entry (i, j) counts symbols lying in
/// row i of the source tabloid and row j of the target tabloid.
pub fn profile(src_word: &[u8], tgt_word: &[u8], src_rows: usize, tgt_rows: usize) -> Vec<Vec<u32>> {
    let mut a = vec![vec![0u32; tgt_rows]; src_rows];
    for (s, t) in src_word.iter().zip(tgt_word) {
        a[*s as usize][*t as usize] += 1;
    }
    a
}

/// Hom_{FS_r}(M^λ, M^μ) in the class-matrix representation: entry (s, t) of
/// `class` is the index of the contingency matrix profile(basis_λ[t],
/// basis_μ[s]). The basis map θ_a sends a λ-tabloid t to the sum of all
/// μ-tabloids s with class (s, t) equal to a.
pub struct HomSpace {
    pub source: Partition,
    pub target: Partition,
    pub p: u32,
    /// number of contingency classes = dim of the hom space
    pub dim: usize,
    pub src_dim: usize,
    pub tgt_dim: usize,
    class: Vec<u16>,
}

impl HomSpace {
    pub fn new(
        src: &PermutationModule,
        tgt: &PermutationModule,
    ) -> Result<Self, YoungError> {
        if src.p != tgt.p {
            return Err(YoungError::Constraint("mixed primes in hom space".into()));
        }
        if src.lambda.degree() != tgt.lambda.degree() {
            return Err(YoungError::DegreeMismatch {
                left: src.lambda.degree(),
                right: tgt.lambda.degree(),
            });
        }
        let src_rows = src.lambda.len().max(1);
        let tgt_rows = tgt.lambda.len().max(1);
        let src_margin = if src.lambda.is_empty() { vec![0] } else { src.lambda.parts().to_vec() };
        let tgt_margin = if tgt.lambda.is_empty() { vec![0] } else { tgt.lambda.parts().to_vec() };
        let matrices = contingency_matrices(&src_margin, &tgt_margin);
        if matrices.len() > u16::MAX as usize {
            return Err(YoungError::BudgetExceeded(format!(
                "hom space dimension {} exceeds the class-index range",
                matrices.len()
            )));
        }
        let index: HashMap<Vec<Vec<u32>>, u16> = matrices
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u16))
            .collect();
        let mut class = vec![0u16; tgt.dim * src.dim];
        for (t, tw) in src.basis().iter().enumerate() {
            for (s, sw) in tgt.basis().iter().enumerate() {
                let a = profile(tw, sw, src_rows, tgt_rows);
                class[s * src.dim + t] = *index.get(&a).ok_or_else(|| {
                    YoungError::Internal("profile outside the contingency enumeration".into())
                })?;
            }
        }
        let hs = HomSpace {
            source: src.lambda.clone(),
            target: tgt.lambda.clone(),
            p: src.p,
            dim: matrices.len(),
            src_dim: src.dim,
            tgt_dim: tgt.dim,
            class,
        };
        hs.verify_generators_commute(src, tgt)?;
        Ok(hs)
    }

    #[inline]
    pub fn class_of(&self, s: usize, t: usize) -> usize {
        self.class[s * self.src_dim + t] as usize
    }

    /// Intertwining check: every basis map commutes with every Coxeter
    /// generator, which in the class representation says the class of a pair
    /// of tabloids is invariant under the simultaneous action.
    fn verify_generators_commute(
        &self,
        src: &PermutationModule,
        tgt: &PermutationModule,
    ) -> Result<(), YoungError> {
        for k in 0..src.generator_count() {
            for s in 0..self.tgt_dim {
                let gs = tgt.apply_generator(k, s);
                for t in 0..self.src_dim {
                    let gt = src.apply_generator(k, t);
                    if self.class_of(s, t) != self.class_of(gs, gt) {
                        return Err(YoungError::Internal(
                            "contingency class not generator-invariant".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Dense matrix of the basis map θ_a.
    pub fn basis_map_matrix(&self, a: usize) -> FpMatrix {
        let mut m = FpMatrix::zero(self.tgt_dim, self.src_dim, self.p);
        for s in 0..self.tgt_dim {
            for t in 0..self.src_dim {
                if self.class_of(s, t) == a {
                    m.set(s, t, 1);
                }
            }
        }
        m
    }

    /// Dense matrix of Σ coeffs[a]·θ_a.
    pub fn combination_matrix(&self, coeffs: &[u8]) -> FpMatrix {
        assert_eq!(coeffs.len(), self.dim);
        let mut m = FpMatrix::zero(self.tgt_dim, self.src_dim, self.p);
        for s in 0..self.tgt_dim {
            for t in 0..self.src_dim {
                m.set(s, t, coeffs[self.class_of(s, t)] as u32);
            }
        }
        m
    }
}

pub fn hom_dim(lambda: &Partition, mu: &Partition) -> Result<usize, YoungError> {
    if lambda.degree() != mu.degree() {
        return Err(YoungError::DegreeMismatch { left: lambda.degree(), right: mu.degree() });
    }
    let l = if lambda.is_empty() { vec![0] } else { lambda.parts().to_vec() };
    let m = if mu.is_empty() { vec![0] } else { mu.parts().to_vec() };
    Ok(contingency_matrices(&l, &m).len())
}

/// End_{FS_r}(M^λ): a HomSpace from M^λ to itself plus the extra data that
/// lets elements be multiplied cheaply. Any endomorphism x is determined by
/// its value on the first basis tabloid t₀ (a cyclic generator), and the
/// basis maps θ_a have pairwise disjoint supports on column t₀, so reading
/// coordinates back off a vector x(t₀) is a table lookup.
pub struct EndAlgebra {
    pub hom: HomSpace,
    pub module_dim: usize,
    /// class of (s, t₀) for each s
    t0_class: Vec<u16>,
    /// for each class a, the least s with class (s, t₀) = a
    class_rep: Vec<u32>,
    /// basis index of the identity map
    pub identity_index: usize,
}

impl EndAlgebra {
    pub fn new(module: &PermutationModule, max_end_dim: usize) -> Result<Self, YoungError> {
        let hom = HomSpace::new(module, module)?;
        if hom.dim > max_end_dim {
            return Err(YoungError::BudgetExceeded(format!(
                "End(M^{}) has dimension {} exceeding the budget {max_end_dim}",
                module.lambda, hom.dim
            )));
        }
        let n = module.dim;
        let t0_class: Vec<u16> = (0..n).map(|s| hom.class_of(s, 0) as u16).collect();
        let mut class_rep = vec![u32::MAX; hom.dim];
        for (s, &a) in t0_class.iter().enumerate() {
            if class_rep[a as usize] == u32::MAX {
                class_rep[a as usize] = s as u32;
            }
        }
        if class_rep.iter().any(|&x| x == u32::MAX) {
            return Err(YoungError::Internal(
                "some contingency class missing from the cyclic column".into(),
            ));
        }
        let identity_index = hom.class_of(0, 0);
        let alg = EndAlgebra { hom, module_dim: n, t0_class, class_rep, identity_index };
        // the identity class must be the diagonal profile
        debug_assert!({
            let m = alg.hom.basis_map_matrix(alg.identity_index);
            m == FpMatrix::identity(n, alg.hom.p)
        });
        Ok(alg)
    }

    pub fn p(&self) -> u32 {
        self.hom.p
    }

    pub fn dim(&self) -> usize {
        self.hom.dim
    }

    pub fn identity_coords(&self) -> Vec<u8> {
        let mut e = vec![0u8; self.dim()];
        e[self.identity_index] = 1;
        e
    }

    /// x(t₀) as a dense vector.
    pub fn vector_of(&self, coords: &[u8]) -> Vec<u8> {
        (0..self.module_dim)
            .map(|s| coords[self.t0_class[s] as usize])
            .collect()
    }

    /// Reads coordinates off a vector of the form x(t₀); None if the vector
    /// is not constant on classes (i.e. not an endomorphism image of t₀).
    pub fn coords_of_vector(&self, v: &[u8]) -> Option<Vec<u8>> {
        let coords: Vec<u8> = self.class_rep.iter().map(|&s| v[s as usize]).collect();
        for (s, &val) in v.iter().enumerate() {
            if coords[self.t0_class[s] as usize] != val {
                return None;
            }
        }
        Some(coords)
    }

    /// Applies x (by coordinates) to a dense vector.
    pub fn apply(&self, coords: &[u8], v: &[u8]) -> Vec<u8> {
        let p = self.hom.p as u64;
        let n = self.module_dim;
        (0..n)
            .map(|s| {
                let row = &self.hom.class[s * n..(s + 1) * n];
                let mut acc = 0u64;
                for t in 0..n {
                    acc += coords[row[t] as usize] as u64 * v[t] as u64;
                }
                (acc % p) as u8
            })
            .collect()
    }

    /// Dense matrix of x.
    pub fn matrix_of(&self, coords: &[u8]) -> FpMatrix {
        self.hom.combination_matrix(coords)
    }

    /// Reads an endomorphism's coordinates off its dense matrix; None if the
    /// matrix is not in the algebra (verified entry-by-entry).
    pub fn coords_of_matrix(&self, m: &FpMatrix) -> Option<Vec<u8>> {
        let coords: Vec<u8> = self
            .class_rep
            .iter()
            .map(|&s| m.get(s as usize, 0) as u8)
            .collect();
        let n = self.module_dim;
        for s in 0..n {
            for t in 0..n {
                if m.get(s, t) as u8 != coords[self.hom.class_of(s, t)] {
                    return None;
                }
            }
        }
        Some(coords)
    }

    /// Product x·y (composition: first y, then x), in coordinates.
    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let w = self.vector_of(y);
        let u = self.apply(x, &w);
        let coords: Vec<u8> = self.class_rep.iter().map(|&s| u[s as usize]).collect();
        debug_assert!(self.coords_of_vector(&u).is_some());
        coords
    }

    pub fn add(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let p = self.hom.p;
        x.iter().zip(y).map(|(&a, &b)| ((a as u32 + b as u32) % p) as u8).collect()
    }

    pub fn sub(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let p = self.hom.p;
        x.iter()
            .zip(y)
            .map(|(&a, &b)| ((a as u32 + p - b as u32) % p) as u8)
            .collect()
    }

    /// Structure constants on the full contingency basis, for use with the
    /// generic algebra machinery. Quadratic in the algebra dimension times
    /// the module dimension squared; intended for modest dimensions.
    pub fn structure_algebra(&self, max_dim: usize) -> Result<StructureAlgebra, YoungError> {
        let d = self.dim();
        if d > max_dim {
            return Err(YoungError::BudgetExceeded(format!(
                "structure constants for dimension {d} exceed the cap {max_dim}"
            )));
        }
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            let mut ei = vec![0u8; d];
            ei[i] = 1;
            for j in 0..d {
                let mut ej = vec![0u8; d];
                ej[j] = 1;
                table.push(self.mul(&ei, &ej));
            }
        }
        Ok(StructureAlgebra::new(self.p(), d, table, self.identity_coords()))
    }
}
