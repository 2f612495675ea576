//! Dense exact linear algebra over the prime field F_p (p < 256).


/// a^{-1} mod p for 0 < a < p.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    // extended Euclid
    let (mut old_r, mut r) = (a as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        let tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        let tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    old_s.rem_euclid(p as i64) as u32
}

/// A dense matrix over F_p with byte entries in [0, p).
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub rows: usize,
    pub cols: usize,
    pub p: u32,
    data: Vec<u8>,
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows.min(12) {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zero(rows: usize, cols: usize, p: u32) -> Self {
        assert!(p >= 2 && p < 256);
        FpMatrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = FpMatrix::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, p: u32, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = FpMatrix::zero(rows, cols, p);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j) % p);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j] as u32
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = (v % self.p) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zero(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = FpMatrix::zero(self.rows, self.cols, self.p);
        for k in 0..self.data.len() {
            out.data[k] = ((self.data[k] as u32 + other.data[k] as u32) % self.p) as u8;
        }
        out
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = FpMatrix::zero(self.rows, self.cols, self.p);
        for k in 0..self.data.len() {
            out.data[k] =
                ((self.data[k] as u32 + self.p - other.data[k] as u32) % self.p) as u8;
        }
        out
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let c = c % self.p;
        let mut out = FpMatrix::zero(self.rows, self.cols, self.p);
        for k in 0..self.data.len() {
            out.data[k] = ((self.data[k] as u32 * c) % self.p) as u8;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Matrix product, accumulating in u32 (safe for dims up to ~60000 at
    /// p < 256).
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = FpMatrix::zero(self.rows, other.cols, p);
        let n = other.cols;
        let mut acc = vec![0u32; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let arow = self.row(i);
            for (k, &aik) in arow.iter().enumerate() {
                if aik == 0 {
                    continue;
                }
                let a = aik as u32;
                let brow = other.row(k);
                for j in 0..n {
                    acc[j] += a * brow[j] as u32;
                }
            }
            let orow = &mut out.data[i * n..(i + 1) * n];
            for j in 0..n {
                orow[j] = (acc[j] % p) as u8;
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                let row = self.row(i);
                for k in 0..self.cols {
                    acc += row[k] as u64 * v[k] as u64;
                }
                (acc % p as u64) as u8
            })
            .collect()
    }

    /// In-place row reduction to reduced row echelon form; returns pivot
    /// column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find pivot
            let mut pr = None;
            for i in r..self.rows {
                if self.get(i, c) != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let pr = match pr {
                Some(i) => i,
                None => continue,
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            for j in c..self.cols {
                let v = self.get(r, j) * inv % p;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = (self.get(i, j) + (p - f) * self.get(r, j)) % p;
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one column vector per basis element.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![0u8; self.cols];
            vec[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let v = m.get(r, free);
                if v != 0 {
                    vec[pc] = ((p - v) % p) as u8;
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Basis of the column space: the columns of `self` at the pivot
    /// positions of its row reduction, returned as columns of a matrix.
    pub fn column_space(&self) -> FpMatrix {
        let pivots = {
            let mut m = self.clone();
            m.rref()
        };
        let mut out = FpMatrix::zero(self.rows, pivots.len(), self.p);
        for (k, &c) in pivots.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, k, self.get(i, c));
            }
        }
        out
    }

    /// The submatrix made of the given rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zero(rows.len(), self.cols, self.p);
        for (k, &r) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(k, j, self.get(r, j));
            }
        }
        out
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<u8>], height: usize, p: u32) -> FpMatrix {
        let mut out = FpMatrix::zero(height, cols.len(), p);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), height);
            for i in 0..height {
                out.set(i, j, c[i] as u32);
            }
        }
        out
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let p = self.p;
        let mut aug = FpMatrix::zero(n, 2 * n, p);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut inv = FpMatrix::zero(n, n, p);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Solves self · x = b for one solution, if consistent.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(self.rows, b.len());
        let p = self.p;
        let mut aug = FpMatrix::zero(self.rows, self.cols + 1, p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i] as u32);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols) as u8;
        }
        Some(x)
    }
}

/// Expresses vectors in terms of a fixed full-column-rank spanning set by
/// inverting an invertible row-selection once.
pub struct ColumnSolver {
    rows: Vec<usize>,
    inv: FpMatrix,
}

impl ColumnSolver {
    /// `cols` must be linearly independent vectors of equal length.
    pub fn new(cols: &[Vec<u8>], height: usize, p: u32) -> Option<Self> {
        let m = FpMatrix::from_columns(cols, height, p);
        let mut t = m.transpose();
        let rows = t.rref();
        if rows.len() != cols.len() {
            return None;
        }
        let inv = m.select_rows(&rows).inverse()?;
        Some(ColumnSolver { rows, inv })
    }

    /// Coefficients c with Σ c_i·cols_i = v, assuming v is in the span.
    pub fn solve(&self, v: &[u8]) -> Vec<u8> {
        let sel: Vec<u8> = self.rows.iter().map(|&r| v[r]).collect();
        self.inv.mul_vec(&sel)
    }
}

/// Row-reduced span tracker: incrementally absorbs vectors and reports the
/// dimension of their span; can express new vectors in terms of the absorbed
/// pivots.
pub struct SpanBasis {
    p: u32,
    width: usize,
    rows: Vec<Vec<u8>>,      // reduced rows
    pivots: Vec<usize>,      // pivot column of each row
    member_ids: Vec<usize>,  // caller-supplied id of the vector that created each row
}

impl SpanBasis {
    pub fn new(width: usize, p: u32) -> Self {
        SpanBasis { p, width, rows: Vec::new(), pivots: Vec::new(), member_ids: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn member_ids(&self) -> &[usize] {
        &self.member_ids
    }

    /// Reduces v against the basis; if a nonzero remainder is left it is
    /// absorbed (tagged with `id`) and true is returned.
    pub fn absorb(&mut self, v: &[u8], id: usize) -> bool {
        assert_eq!(v.len(), self.width);
        let p = self.p;
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let f = v[piv] as u32;
            if f != 0 {
                for j in piv..self.width {
                    v[j] = ((v[j] as u32 + (p - f) * row[j] as u32) % p) as u8;
                }
            }
        }
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            let inv = inv_mod(v[piv] as u32, p);
            for j in piv..self.width {
                v[j] = (v[j] as u32 * inv % p) as u8;
            }
            // keep rows ordered by pivot for determinism
            let at = self.pivots.iter().position(|&q| q > piv).unwrap_or(self.rows.len());
            self.rows.insert(at, v);
            self.pivots.insert(at, piv);
            self.member_ids.insert(at, id);
            true
        } else {
            false
        }
    }

    /// Whether v lies in the current span.
    pub fn contains(&self, v: &[u8]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let f = v[piv] as u32;
            if f != 0 {
                for j in piv..self.width {
                    v[j] = ((v[j] as u32 + (p - f) * row[j] as u32) % p) as u8;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}
