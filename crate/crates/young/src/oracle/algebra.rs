//! Finite-dimensional unital algebras over F_p by structure constants:
//! Jacobson radical in characteristic p, semisimple quotients, minimal
//! polynomials, splitting idempotents, and idempotent lifting.

use rand::Rng;

use crate::error::YoungError;
use crate::oracle::linalg::{inv_mod, FpMatrix, SpanBasis};

// ---- polynomial helpers over F_p (dense, little-endian, normalized) ----

pub fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn poly_deg(a: &[u32]) -> usize {
    a.len().saturating_sub(1)
}

pub fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += (x as u64) * (y as u64);
        }
    }
    poly_trim(out.into_iter().map(|v| (v % p as u64) as u32).collect())
}

/// Remainder of a modulo f (f non-zero, any leading coefficient).
pub fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let f = poly_trim(f.to_vec());
    assert!(!f.is_empty());
    let mut r: Vec<u32> = poly_trim(a.to_vec());
    let df = f.len() - 1;
    let lead_inv = inv_mod(*f.last().unwrap(), p);
    while r.len() > df {
        let coef = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - df;
        for (k, &fk) in f.iter().enumerate() {
            let idx = shift + k;
            r[idx] = (r[idx] + (p - coef * fk % p)) % p;
        }
        r = poly_trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

pub fn poly_monic(a: &[u32], p: u32) -> Vec<u32> {
    let a = poly_trim(a.to_vec());
    if a.is_empty() {
        return a;
    }
    let inv = inv_mod(*a.last().unwrap(), p);
    a.into_iter().map(|c| c * inv % p).collect()
}

pub fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = poly_trim(a.to_vec());
    let mut b = poly_trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    poly_monic(&a, p)
}

pub fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    poly_trim(out)
}

/// Quotient of a by b (b non-zero).
pub fn poly_div(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = poly_trim(b.to_vec());
    assert!(!b.is_empty());
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() <= db {
        return Vec::new();
    }
    let mut q = vec![0u32; r.len() - db];
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() > db {
        let coef = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - db;
        q[shift] = coef;
        for (k, &bk) in b.iter().enumerate() {
            r[shift + k] = (r[shift + k] + (p - coef * bk % p)) % p;
        }
        r = poly_trim(r);
        if r.is_empty() {
            break;
        }
    }
    poly_trim(q)
}

/// Extended gcd: returns (g, u, v) monic with u·a + v·b = g.
pub fn poly_ext_gcd(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>, Vec<u32>) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let (mut s0, mut s1) = (vec![1u32], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u32]);
    while !r1.is_empty() {
        let q = poly_div(&r0, &r1, p);
        let r2 = poly_sub(&r0, &poly_mul(&q, &r1, p), p);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if r0.is_empty() {
        return (r0, s0, t0);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    let scale = |v: Vec<u32>| v.into_iter().map(|c| c * inv % p).collect::<Vec<u32>>();
    (scale(r0), scale(s0), scale(t0))
}

/// Derivative of a polynomial.
pub fn poly_derivative(a: &[u32], p: u32) -> Vec<u32> {
    if a.len() <= 1 {
        return Vec::new();
    }
    poly_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u32 % p) * c % p)
            .collect(),
    )
}

/// x^p mod f.
fn poly_pth_power_mod(x: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut base = poly_rem(x, f, p);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(&poly_mul(&result, &base, p), f, p);
        }
        base = poly_rem(&poly_mul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}

/// Splits f into a coprime product A·B with both factors non-constant, if
/// possible (i.e. iff f has at least two distinct irreducible factors).
/// Berlekamp: a Frobenius-fixed element v of F_p[T]/(f) outside the constants
/// has a constant residue c_i modulo each primary component g_i^{e_i}, and
/// not all c_i agree, so gcd(f, v − c) carves out full primary components.
pub fn poly_coprime_split(f: &[u32], p: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    let f = poly_monic(f, p);
    let d = poly_deg(&f);
    if d < 2 {
        return None;
    }
    // matrix of Frobenius − identity on the power basis of F_p[T]/(f)
    let tp = poly_pth_power_mod(&[0, 1], &f, p);
    let mut q = FpMatrix::zero(d, d, p);
    let mut col = vec![1u32];
    for j in 0..d {
        for r in 0..d {
            let c = col.get(r).copied().unwrap_or(0);
            let sub = u32::from(r == j);
            q.set(r, j, (c + p - sub) % p);
        }
        col = poly_rem(&poly_mul(&col, &tp, p), &f, p);
    }
    let fixed = q.nullspace();
    // any fixed element outside the span of 1 separates primary components
    let v = fixed.iter().find(|v| v.iter().skip(1).any(|&c| c != 0))?;
    let vpoly = poly_trim(v.iter().map(|&c| c as u32).collect());
    let mut a: Option<Vec<u32>> = None;
    for c in 0..p {
        let g = poly_gcd(&f, &poly_sub(&vpoly, &[c], p), p);
        if poly_deg(&g) >= 1 && poly_deg(&g) < d && g.len() >= 2 {
            a = Some(g);
            break;
        }
    }
    let a = a?;
    let b = poly_div(&f, &a, p);
    debug_assert_eq!(poly_deg(&poly_gcd(&a, &b, p)), 0);
    Some((poly_monic(&a, p), poly_monic(&b, p)))
}

// ---- structure-constant algebras ----

/// n×n matrix product with entries reduced modulo m (not necessarily prime).
fn mat_mul_mod(a: &[u64], b: &[u64], n: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
        for j in 0..n {
            out[i * n + j] %= m;
        }
    }
    out
}

fn mat_pow_mod(mut base: Vec<u64>, mut e: u64, n: usize, m: u64) -> Vec<u64> {
    let mut acc: Vec<u64> = (0..n * n).map(|i| u64::from(i % (n + 1) == 0)).collect();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul_mod(&acc, &base, n, m);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_mod(&base, &base, n, m);
        }
    }
    acc
}

/// A unital associative F_p-algebra given by structure constants on a basis.
#[derive(Clone)]
pub struct StructureAlgebra {
    pub p: u32,
    pub dim: usize,
    /// table[i·dim + j] = coordinates of b_i · b_j
    table: Vec<Vec<u8>>,
    pub one: Vec<u8>,
}

impl StructureAlgebra {
    pub fn new(p: u32, dim: usize, table: Vec<Vec<u8>>, one: Vec<u8>) -> Self {
        assert_eq!(table.len(), dim * dim);
        assert_eq!(one.len(), dim);
        StructureAlgebra { p, dim, table, one }
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u8] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let p = self.p as u64;
        let mut acc = vec![0u64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = (xi as u64) * (yj as u64) % p;
                let prod = self.basis_product(i, j);
                for (k, &t) in prod.iter().enumerate() {
                    acc[k] += c * t as u64;
                }
            }
        }
        acc.into_iter().map(|v| (v % p) as u8).collect()
    }

    pub fn is_zero(x: &[u8]) -> bool {
        x.iter().all(|&v| v == 0)
    }

    pub fn add(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| ((a as u32 + b as u32) % self.p) as u8)
            .collect()
    }

    pub fn sub(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| ((a as u32 + self.p - b as u32) % self.p) as u8)
            .collect()
    }

    /// Matrix of left multiplication by x on the algebra itself.
    pub fn left_regular(&self, x: &[u8]) -> FpMatrix {
        let mut m = FpMatrix::zero(self.dim, self.dim, self.p);
        for j in 0..self.dim {
            let mut ej = vec![0u8; self.dim];
            ej[j] = 1;
            let col = self.mul(x, &ej);
            for k in 0..self.dim {
                m.set(k, j, col[k] as u32);
            }
        }
        m
    }

    pub fn pow(&self, x: &[u8], mut e: u64) -> Vec<u8> {
        let mut result = self.one.clone();
        let mut base = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Associativity spot check on basis triples (exhaustive for small dim,
    /// a strided sample otherwise).
    pub fn associativity_holds(&self, max_checks: usize) -> bool {
        let n = self.dim;
        let mut checked = 0usize;
        let stride = ((n * n * n) / max_checks.max(1)).max(1);
        let mut counter = 0usize;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    counter += 1;
                    if counter % stride != 0 && checked > 0 {
                        continue;
                    }
                    let mut ei = vec![0u8; n];
                    ei[i] = 1;
                    let mut ej = vec![0u8; n];
                    ej[j] = 1;
                    let mut ek = vec![0u8; n];
                    ek[k] = 1;
                    let left = self.mul(&self.mul(&ei, &ej), &ek);
                    let right = self.mul(&ei, &self.mul(&ej, &ek));
                    if left != right {
                        return false;
                    }
                    checked += 1;
                    if checked >= max_checks {
                        return true;
                    }
                }
            }
        }
        true
    }

    /// Minimal polynomial of x, monic, via linear dependence of its powers.
    pub fn min_poly(&self, x: &[u8]) -> Vec<u32> {
        let mut span = SpanBasis::new(self.dim, self.p);
        let mut powers: Vec<Vec<u8>> = Vec::new();
        let mut cur = self.one.clone();
        loop {
            if !span.absorb(&cur, powers.len()) {
                // cur is a combination of the stored powers: solve for it
                let mut mat = FpMatrix::zero(self.dim, powers.len(), self.p);
                for (c, pw) in powers.iter().enumerate() {
                    for r in 0..self.dim {
                        mat.set(r, c, pw[r] as u32);
                    }
                }
                let sol = mat.solve(&cur).expect("dependence certified by span");
                // min poly = T^d − Σ sol_i T^i
                let d = powers.len();
                let mut f = vec![0u32; d + 1];
                f[d] = 1;
                for (i, &c) in sol.iter().enumerate() {
                    f[i] = (self.p - c as u32) % self.p;
                }
                return f;
            }
            powers.push(cur.clone());
            cur = self.mul(&cur, x);
        }
    }

    /// Evaluates a polynomial at x.
    pub fn eval_poly(&self, f: &[u32], x: &[u8]) -> Vec<u8> {
        let mut acc = vec![0u8; self.dim];
        for &c in f.iter().rev() {
            acc = self.mul(&acc, x);
            for (k, o) in self.one.iter().enumerate() {
                acc[k] = ((acc[k] as u32 + c * *o as u32) % self.p) as u8;
            }
        }
        acc
    }

    /// Jacobson radical over F_p by the iterated trace-form chain: with
    /// integer lifts of the regular representation, the maps
    /// x ↦ tr((L_x L_y)^{p^k}) / p^k mod p (for k = 0, 1, …, ⌊log_p dim⌋,
    /// traces taken mod p^{k+1}) are F_p-linear on the previous kernel, and
    /// the final kernel is the radical. The naive mod-p trace form alone is
    /// degenerate in characteristic p.
    pub fn radical(&self) -> Vec<Vec<u8>> {
        let p = self.p;
        let p64 = p as u64;
        let n = self.dim;
        // current subspace basis, as algebra coordinates
        let mut cur: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut e = vec![0u8; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut pk: u64 = 1;
        while pk <= n as u64 && !cur.is_empty() {
            let modulus = pk * p64;
            // canonical integer lifts of the left-regular matrices
            let regs: Vec<Vec<u64>> = cur
                .iter()
                .map(|v| {
                    let l = self.left_regular(v);
                    (0..n * n).map(|i| l.get(i / n, i % n) as u64).collect()
                })
                .collect();
            let m = cur.len();
            // constraint matrix over the current basis coordinates
            let mut cm = FpMatrix::zero(m, m, p);
            for (yi, ly) in regs.iter().enumerate() {
                for (xi, lx) in regs.iter().enumerate() {
                    let prod = mat_mul_mod(lx, ly, n, modulus);
                    let pw = mat_pow_mod(prod, pk, n, modulus);
                    let mut tr = 0u64;
                    for d in 0..n {
                        tr += pw[d * n + d];
                    }
                    tr %= modulus;
                    assert_eq!(tr % pk, 0, "trace chain divisibility must hold");
                    cm.set(yi, xi, ((tr / pk) % p64) as u32);
                }
            }
            let kernel = cm.nullspace();
            let next: Vec<Vec<u8>> = kernel
                .iter()
                .map(|coef| {
                    let mut v = vec![0u32; n];
                    for (bi, &c) in coef.iter().enumerate() {
                        for k in 0..n {
                            v[k] = (v[k] + c as u32 * cur[bi][k] as u32) % p;
                        }
                    }
                    v.into_iter().map(|x| x as u8).collect()
                })
                .collect();
            cur = next;
            pk *= p as u64;
        }
        cur
    }

    /// Builds the quotient by a two-sided nilpotent ideal (the radical).
    /// Returns the quotient algebra and the change-of-basis data.
    pub fn quotient(&self, radical: &[Vec<u8>]) -> (StructureAlgebra, QuotientMap) {
        let p = self.p;
        let n = self.dim;
        let mut span = SpanBasis::new(n, p);
        for (i, v) in radical.iter().enumerate() {
            let fresh = span.absorb(v, i);
            assert!(fresh, "radical basis must be independent");
        }
        let rad_dim = radical.len();
        let mut complement: Vec<Vec<u8>> = Vec::new();
        for i in 0..n {
            let mut e = vec![0u8; n];
            e[i] = 1;
            if span.absorb(&e, rad_dim + i) {
                complement.push(e);
            }
        }
        let q = complement.len();
        assert_eq!(q + rad_dim, n);
        // basis matrix: columns are complement then radical
        let mut bm = FpMatrix::zero(n, n, p);
        for (c, v) in complement.iter().chain(radical.iter()).enumerate() {
            for r in 0..n {
                bm.set(r, c, v[r] as u32);
            }
        }
        let inv = bm.inverse().expect("complement plus radical spans");
        let qm = QuotientMap { p, full_dim: n, quot_dim: q, complement: complement.clone(), inverse: inv };
        // quotient structure constants
        let mut table = Vec::with_capacity(q * q);
        for i in 0..q {
            for j in 0..q {
                let prod = self.mul(&complement[i], &complement[j]);
                table.push(qm.project(&prod));
            }
        }
        let one = qm.project(&self.one);
        (StructureAlgebra::new(p, q, table, one), qm)
    }
}

/// Projection A → A/rad and section back, in fixed bases.
pub struct QuotientMap {
    p: u32,
    full_dim: usize,
    quot_dim: usize,
    complement: Vec<Vec<u8>>,
    inverse: FpMatrix,
}

impl QuotientMap {
    /// Coordinates of x + rad in the quotient basis.
    pub fn project(&self, x: &[u8]) -> Vec<u8> {
        let y = self.inverse.mul_vec(x);
        y[..self.quot_dim].to_vec()
    }

    /// A representative in A of a quotient element.
    pub fn lift(&self, xq: &[u8]) -> Vec<u8> {
        let mut v = vec![0u32; self.full_dim];
        for (i, &c) in xq.iter().enumerate() {
            for k in 0..self.full_dim {
                v[k] = (v[k] + c as u32 * self.complement[i][k] as u32) % self.p;
            }
        }
        v.into_iter().map(|x| x as u8).collect()
    }
}

/// Whether a semisimple algebra over F_p is a division algebra, i.e. a
/// finite field: commutative with a 1-dimensional Frobenius-fixed subalgebra.
pub fn semisimple_is_field(s: &StructureAlgebra) -> bool {
    if s.dim == 0 {
        return false;
    }
    if !s.is_commutative() {
        // Wedderburn: a finite division ring is commutative
        return false;
    }
    // x ↦ x^p − x is F_p-linear on a commutative algebra in characteristic p
    let mut frob = FpMatrix::zero(s.dim, s.dim, s.p);
    for j in 0..s.dim {
        let mut e = vec![0u8; s.dim];
        e[j] = 1;
        let fp = s.pow(&e, s.p as u64);
        for k in 0..s.dim {
            let v = (fp[k] as u32 + s.p - e[k] as u32) % s.p;
            frob.set(k, j, v);
        }
    }
    let fixed = s.dim - frob.rank();
    fixed == 1
}

/// Finds a proper idempotent (≠ 0, ≠ 1) in a semisimple non-division algebra
/// by sweeping elements whose minimal polynomial admits a coprime split, then
/// seeded random combinations. Returns None only if the attempt cap is hit.
pub fn semisimple_proper_idempotent(
    s: &StructureAlgebra,
    rng: &mut impl Rng,
    max_attempts: usize,
) -> Option<Vec<u8>> {
    let try_element = |x: &[u8]| -> Option<Vec<u8>> {
        let f = s.min_poly(x);
        let (a, b) = poly_coprime_split(&f, s.p)?;
        let (g, u, _v) = poly_ext_gcd(&a, &b, s.p);
        debug_assert_eq!(g, vec![1u32]);
        // e ≡ 0 mod a, e ≡ 1 mod b
        let e_poly = poly_rem(&poly_mul(&u, &a, s.p), &f, s.p);
        let e = s.eval_poly(&e_poly, x);
        if StructureAlgebra::is_zero(&e) || e == s.one {
            return None;
        }
        debug_assert_eq!(s.mul(&e, &e), e);
        Some(e)
    };
    let mut attempts = 0usize;
    // deterministic sweep: basis elements, then adjacent sums
    for i in 0..s.dim {
        let mut e = vec![0u8; s.dim];
        e[i] = 1;
        if let Some(r) = try_element(&e) {
            return Some(r);
        }
        attempts += 1;
        if attempts >= max_attempts {
            return None;
        }
    }
    for i in 0..s.dim {
        for j in i + 1..s.dim {
            let mut e = vec![0u8; s.dim];
            e[i] = 1;
            e[j] = 1;
            if let Some(r) = try_element(&e) {
                return Some(r);
            }
            attempts += 1;
            if attempts >= max_attempts {
                return None;
            }
        }
    }
    while attempts < max_attempts {
        let x: Vec<u8> = (0..s.dim).map(|_| rng.gen_range(0..s.p) as u8).collect();
        if let Some(r) = try_element(&x) {
            return Some(r);
        }
        attempts += 1;
    }
    None
}

/// Lifts an idempotent of A/rad to one of A by iterated p-th powers of a
/// representative: in F_p[a] the defect a²−a is raised to the p-th power at
/// each step, so it dies once p^k exceeds the radical's nilpotency index.
pub fn lift_idempotent(
    a: &StructureAlgebra,
    representative: &[u8],
) -> Result<Vec<u8>, YoungError> {
    let mut x = representative.to_vec();
    // nilpotency index of the radical is at most dim
    let mut bound = a.dim as u64 + 1;
    let mut iterations = 0usize;
    loop {
        let sq = a.mul(&x, &x);
        if sq == x {
            return Ok(x);
        }
        if bound == 0 {
            return Err(YoungError::Internal(
                "idempotent lifting did not converge within the nilpotency bound".into(),
            ));
        }
        x = a.pow(&x, a.p as u64);
        bound /= a.p as u64;
        iterations += 1;
        if iterations > 64 {
            return Err(YoungError::Internal("idempotent lifting iteration cap hit".into()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Group algebra F_p[C_n] as a structure algebra.
    fn cyclic_group_algebra(n: usize, p: u32) -> StructureAlgebra {
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut v = vec![0u8; n];
                v[(i + j) % n] = 1;
                table.push(v);
            }
        }
        let mut one = vec![0u8; n];
        one[0] = 1;
        StructureAlgebra::new(p, n, table, one)
    }

    /// Full matrix algebra M_k(F_p).
    fn matrix_algebra(k: usize, p: u32) -> StructureAlgebra {
        let n = k * k;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            let (i1, j1) = (a / k, a % k);
            for b in 0..n {
                let (i2, j2) = (b / k, b % k);
                let mut v = vec![0u8; n];
                if j1 == i2 {
                    v[i1 * k + j2] = 1;
                }
                table.push(v);
            }
        }
        let mut one = vec![0u8; n];
        for i in 0..k {
            one[i * k + i] = 1;
        }
        StructureAlgebra::new(p, n, table, one)
    }

    #[test]
    fn poly_arithmetic() {
        let p = 5;
        // (T+1)(T+2) = T² + 3T + 2
        assert_eq!(poly_mul(&[1, 1], &[2, 1], p), vec![2, 3, 1]);
        assert_eq!(poly_rem(&[2, 3, 1], &[1, 1], p), Vec::<u32>::new());
        assert_eq!(poly_gcd(&[2, 3, 1], &[1, 1], p), vec![1, 1]);
        let (g, u, v) = poly_ext_gcd(&[1, 1], &[2, 1], p);
        assert_eq!(g, vec![1]);
        let lhs = poly_trim(
            poly_sub(
                &poly_mul(&u, &[1, 1], p),
                &poly_sub(&[1], &poly_mul(&v, &[2, 1], p), p),
                p,
            ),
        );
        assert!(lhs.is_empty());
    }

    #[test]
    fn coprime_split_examples() {
        // T² − T = T(T−1) over F_2
        let split = poly_coprime_split(&[0, 1, 1], 2).unwrap();
        let prod = poly_mul(&split.0, &split.1, 2);
        assert_eq!(poly_monic(&prod, 2), vec![0, 1, 1]);
        assert_eq!(poly_gcd(&split.0, &split.1, 2), vec![1]);
        // irreducible T² + T + 1 over F_2 has no split
        assert!(poly_coprime_split(&[1, 1, 1], 2).is_none());
        // (T−2)² over F_3 has no coprime split
        assert!(poly_coprime_split(&[1, 2, 1], 3).is_none());
    }

    #[test]
    fn radical_of_modular_group_algebra() {
        // F_2[C_2]: radical is spanned by 1 + g
        let a = cyclic_group_algebra(2, 2);
        assert!(a.associativity_holds(1000));
        let rad = a.radical();
        assert_eq!(rad.len(), 1);
        let x = &rad[0];
        assert!(StructureAlgebra::is_zero(&a.mul(x, x)));
        // quotient is semisimple with zero radical
        let (q, _) = a.quotient(&rad);
        assert!(q.radical().is_empty());
        assert!(semisimple_is_field(&q));

        // F_3[C_3]: radical dimension 2
        let a = cyclic_group_algebra(3, 3);
        assert_eq!(a.radical().len(), 2);

        // F_2[C_3]: semisimple (3 invertible mod 2): F_2 × F_4
        let a = cyclic_group_algebra(3, 2);
        assert!(a.radical().is_empty());
        assert!(!semisimple_is_field(&a));

        // F_5[C_4]: semisimple, splits as F_5^4
        let a = cyclic_group_algebra(4, 5);
        assert!(a.radical().is_empty());

        // F_2[C_4]: radical dimension 3 (local)
        let a = cyclic_group_algebra(4, 2);
        assert_eq!(a.radical().len(), 3);
        let (q, _) = a.quotient(&a.radical());
        assert!(semisimple_is_field(&q));
    }

    #[test]
    fn matrix_algebra_is_semisimple_not_field() {
        for p in [2u32, 3] {
            let a = matrix_algebra(2, p);
            assert!(a.associativity_holds(10_000));
            assert!(a.radical().is_empty());
            assert!(!a.is_commutative());
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let e = semisimple_proper_idempotent(&a, &mut rng, 500).unwrap();
            assert_eq!(a.mul(&e, &e), e);
            assert_ne!(e, a.one);
            assert!(!StructureAlgebra::is_zero(&e));
        }
    }

    #[test]
    fn min_poly_examples() {
        let a = matrix_algebra(2, 3);
        // e_11 has min poly T² − T
        let mut e11 = vec![0u8; 4];
        e11[0] = 1;
        assert_eq!(a.min_poly(&e11), vec![0, 2, 1]);
        assert_eq!(a.min_poly(&a.one), vec![2, 1]);
    }

    #[test]
    fn idempotent_splitting_in_product_algebra() {
        // F_2 × F_2 as diagonal matrices inside the cyclic construction:
        // F_2[C_3]/... use F_2[C_3] ≅ F_2 × F_4 directly
        let a = cyclic_group_algebra(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = semisimple_proper_idempotent(&a, &mut rng, 500).unwrap();
        assert_eq!(a.mul(&e, &e), e);
        let complement = a.sub(&a.one, &e);
        assert!(StructureAlgebra::is_zero(&a.mul(&e, &complement)));
    }

    #[test]
    fn lifting_recovers_idempotents() {
        // In F_2[C_2] the quotient is F_2; lifting the unit of the quotient
        // through any representative must give the algebra unit.
        let a = cyclic_group_algebra(2, 2);
        let rad = a.radical();
        let (_, qm) = a.quotient(&rad);
        let rep = qm.lift(&[1]);
        let e = lift_idempotent(&a, &rep).unwrap();
        assert_eq!(a.mul(&e, &e), e);
        assert_eq!(e, a.one);

        // F_3[C_3] is local: lifting a representative of 1 gives 1
        let a = cyclic_group_algebra(3, 3);
        let rad = a.radical();
        let (_, qm) = a.quotient(&rad);
        // perturb the representative by a radical element
        let mut rep = qm.lift(&[1]);
        for k in 0..a.dim {
            rep[k] = ((rep[k] as u32 + rad[0][k] as u32) % 3) as u8;
        }
        let e = lift_idempotent(&a, &rep).unwrap();
        assert_eq!(a.mul(&e, &e), e);
        assert_eq!(e, a.one);
    }
}
