//! Sparse exact matrices and the elimination kernel.
//!
//! Matrices are stored in canonical sparse form (no explicit zeros) keyed by
//! `(row, col)`, so structural equality is exact equality of linear maps.
//! Rank, kernel and solve go through fraction-free Bareiss elimination over
//! the rationals (rows are first scaled to integers) and plain Gaussian
//! elimination over prime fields. The pivot rule is deterministic: for each
//! column, left to right, pick the smallest remaining row index.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldKind,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for ((r, c), v) in &self.entries {
            writeln!(f, "  ({r},{c}) = {v}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zero(field: FieldKind, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: FieldKind, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one(field));
        }
        m
    }

    /// Single-entry builder used all over operator assembly.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        assert!(v.kind() == self.field, "mixed field contexts in matrix");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// Add `v` into entry `(r, c)`, keeping canonical sparse form.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        assert!(r < self.rows && c < self.cols, "matrix index out of bounds");
        let cur = self.get(r, c);
        self.set(r, c, &cur + v);
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|((r, c), v)| (*r, *c, v))
    }

    /// Entries of one row, ascending by column.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries
            .range((r, 0)..(r + 1, 0))
            .map(|((_, c), v)| (*c, v))
    }

    /// One column as a sparse list (full scan; use on small matrices).
    pub fn column(&self, c: usize) -> Vec<(usize, Scalar)> {
        self.entries
            .iter()
            .filter(|((_, cc), _)| *cc == c)
            .map(|((r, _), v)| (*r, v.clone()))
            .collect()
    }

    /// Column `c` as an `rows x 1` matrix.
    pub fn column_vector(&self, c: usize) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, 1);
        for (r, v) in self.column(c) {
            out.set(r, 0, v);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for ((r, c), v) in &self.entries {
            out.entries.insert((*c, *r), v.clone());
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for ((r, c), v) in &other.entries {
            out.add_to(*r, *c, v);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, self.cols);
        for ((r, c), v) in &self.entries {
            out.entries.insert((*r, *c), -v);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, self.cols);
        if s.is_zero() {
            return out;
        }
        for ((r, c), v) in &self.entries {
            out.entries.insert((*r, *c), v * s);
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        assert!(self.field == rhs.field, "mixed field contexts in product");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for ((r, k), v) in &self.entries {
            for (c, w) in rhs.row(*k) {
                out.add_to(*r, c, &(v * w));
            }
        }
        out
    }

    /// Kronecker product: entry `((i*rb + k), (j*cb + l)) = a[i,j] * b[k,l]`.
    pub fn kron(&self, b: &Matrix) -> Matrix {
        assert!(self.field == b.field, "mixed field contexts in kron");
        let mut out = Matrix::zero(self.field, self.rows * b.rows, self.cols * b.cols);
        for ((i, j), v) in &self.entries {
            for ((k, l), w) in &b.entries {
                out.entries
                    .insert((i * b.rows + k, j * b.cols + l), v * w);
            }
        }
        out
    }

    /// Horizontal concatenation of column blocks.
    pub fn hcat(field: FieldKind, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zero(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for ((r, c), v) in &b.entries {
                out.entries.insert((*r, c + off), v.clone());
            }
            off += b.cols;
        }
        out
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(field: FieldKind, perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zero(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Scalar::one(field));
        }
        m
    }

    /// Column rank, computed exactly.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Dimension of the solution space of `M x = 0`, i.e. `cols - rank`.
    pub fn solve_dim_hom(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `ker M` as `cols x 1` vectors. Each basis vector carries a `1`
    /// in "its" free coordinate and `0` in the other free coordinates, so the
    /// stacked basis contains an identity block on the free rows.
    pub fn kernel_basis(&self) -> Vec<Matrix> {
        let ech = self.echelon();
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !is_pivot[*c]).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[f] = Scalar::one(self.field);
            // Back-substitute pivot coordinates bottom-up.
            for &(pr, pc) in ech.pivots.iter().rev() {
                let mut acc = Scalar::zero(self.field);
                for (c, w) in &ech.rows[pr] {
                    if *c > pc {
                        acc = &acc + &(w * &v[*c]);
                    }
                }
                let piv = ech.rows[pr].get(&pc).expect("pivot entry");
                v[pc] = -&(&acc * &piv.inv().expect("pivot nonzero"));
            }
            let mut col = Matrix::zero(self.field, self.cols, 1);
            for (i, s) in v.into_iter().enumerate() {
                if !s.is_zero() {
                    col.set(i, 0, s);
                }
            }
            basis.push(col);
        }
        basis
    }

    /// Free (non-pivot) columns of the echelon form, in ascending order.
    /// These index the kernel basis returned by [`Matrix::kernel_basis`].
    pub fn kernel_free_columns(&self) -> Vec<usize> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &(_, c) in &ech.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols).filter(|c| !is_pivot[*c]).collect()
    }

    /// One solution of `self * x = rhs` (free variables set to zero), or
    /// `None` if the system is inconsistent. `rhs` must be `rows x 1`.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(rhs.rows, self.rows);
        assert_eq!(rhs.cols, 1);
        let aug = Matrix::hcat(self.field, self.rows, &[self, rhs]);
        let ech = aug.echelon();
        // A pivot in the augmented column means inconsistency.
        if ech.pivots.iter().any(|&(_, c)| c == self.cols) {
            return None;
        }
        let mut v = vec![Scalar::zero(self.field); self.cols];
        for &(pr, pc) in ech.pivots.iter().rev() {
            let mut acc = ech.rows[pr]
                .get(&self.cols)
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.field));
            for (c, w) in &ech.rows[pr] {
                if *c > pc && *c < self.cols {
                    acc = &acc - &(w * &v[*c]);
                }
            }
            let piv = ech.rows[pr].get(&pc).expect("pivot entry");
            v[pc] = &acc * &piv.inv().expect("pivot nonzero");
        }
        let mut col = Matrix::zero(self.field, self.cols, 1);
        for (i, s) in v.into_iter().enumerate() {
            if !s.is_zero() {
                col.set(i, 0, s);
            }
        }
        Some(col)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Structure("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut out = Matrix::zero(self.field, n, n);
        for c in 0..n {
            let mut e = Matrix::zero(self.field, n, 1);
            e.set(c, 0, Scalar::one(self.field));
            let x = self
                .solve(&e)
                .ok_or_else(|| Error::Structure("matrix is singular".into()))?;
            for (r, _, v) in x.entries() {
                out.set(r, c, v.clone());
            }
        }
        // A consistent solve for every unit vector only guarantees a right
        // inverse when the rank is full; confirm it.
        if self.rank() != n {
            return Err(Error::Structure("matrix is singular".into()));
        }
        Ok(out)
    }

    /// Row echelon form with recorded pivots, shared by rank/kernel/solve.
    fn echelon(&self) -> Echelon {
        match self.field {
            FieldKind::Q => self.echelon_q(),
            FieldKind::Fp(p) => self.echelon_fp(p),
        }
    }

    /// Fraction-free (Bareiss) elimination: rows are scaled to integers, and
    /// each update `(p*row - a*pivot_row)/prev` divides exactly, which keeps
    /// intermediate entries at minor-determinant size.
    fn echelon_q(&self) -> Echelon {
        let mut rat_rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); self.rows];
        for ((r, c), v) in &self.entries {
            let Scalar::Q(q) = v else { unreachable!() };
            rat_rows[*r].insert(*c, q.clone());
        }
        // Scale each row by the lcm of its denominators.
        let mut rows: Vec<BTreeMap<usize, BigInt>> = rat_rows
            .into_iter()
            .map(|row| {
                let mut l = BigInt::one();
                for q in row.values() {
                    l = l.lcm(q.denom());
                }
                row.into_iter()
                    .map(|(c, q)| {
                        let s = q * BigRational::from_integer(l.clone());
                        debug_assert!(s.denom().is_one());
                        (c, s.numer().clone())
                    })
                    .collect()
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut prev = BigInt::one();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (next_row..self.rows).find(|&r| {
                rows[r].get(&col).map(|v| !v.is_zero()).unwrap_or(false)
            }) else {
                continue;
            };
            rows.swap(next_row, pr);
            let pivot_row = rows[next_row].clone();
            let pivot = pivot_row.get(&col).unwrap().clone();
            for r in next_row + 1..self.rows {
                let a = match rows[r].get(&col) {
                    Some(a) if !a.is_zero() => a.clone(),
                    _ => {
                        // Still must rescale by pivot/prev for Bareiss exactness.
                        let mut updated = BTreeMap::new();
                        for (c, v) in &rows[r] {
                            if *c < col {
                                updated.insert(*c, v.clone());
                                continue;
                            }
                            let num = v * &pivot;
                            let (q, rem) = num.div_rem(&prev);
                            debug_assert!(rem.is_zero(), "Bareiss exact division");
                            if !q.is_zero() {
                                updated.insert(*c, q);
                            }
                        }
                        rows[r] = updated;
                        continue;
                    }
                };
                let mut updated: BTreeMap<usize, BigInt> = BTreeMap::new();
                let mut cols_union: Vec<usize> = rows[r].keys().cloned().collect();
                for c in pivot_row.keys() {
                    if !rows[r].contains_key(c) {
                        cols_union.push(*c);
                    }
                }
                cols_union.sort_unstable();
                for c in cols_union {
                    if c < col {
                        if let Some(v) = rows[r].get(&c) {
                            updated.insert(c, v.clone());
                        }
                        continue;
                    }
                    let x = rows[r].get(&c).cloned().unwrap_or_else(BigInt::zero);
                    let y = pivot_row.get(&c).cloned().unwrap_or_else(BigInt::zero);
                    let num = &x * &pivot - &a * &y;
                    if num.is_zero() {
                        continue;
                    }
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss exact division");
                    updated.insert(c, q);
                }
                updated.remove(&col);
                rows[r] = updated;
            }
            pivots.push((next_row, col));
            prev = pivot;
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        let rows = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|(c, v)| (c, Scalar::Q(BigRational::from_integer(v))))
                    .collect()
            })
            .collect();
        Echelon { rows, pivots }
    }

    fn echelon_fp(&self, _p: u64) -> Echelon {
        let mut rows: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); self.rows];
        for ((r, c), v) in &self.entries {
            rows[*r].insert(*c, v.clone());
        }
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (next_row..self.rows).find(|&r| rows[r].contains_key(&col)) else {
                continue;
            };
            rows.swap(next_row, pr);
            let pivot_row = rows[next_row].clone();
            let pivot_inv = pivot_row.get(&col).unwrap().inv().expect("pivot nonzero");
            for r in next_row + 1..self.rows {
                let Some(a) = rows[r].get(&col).cloned() else {
                    continue;
                };
                let factor = &a * &pivot_inv;
                let mut updated = rows[r].clone();
                for (c, y) in &pivot_row {
                    let x = updated.get(c).cloned().unwrap_or_else(|| Scalar::zero(self.field));
                    let v = &x - &(&factor * y);
                    if v.is_zero() {
                        updated.remove(c);
                    } else {
                        updated.insert(*c, v);
                    }
                }
                updated.remove(&col);
                rows[r] = updated;
            }
            pivots.push((next_row, col));
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        Echelon { rows, pivots }
    }
}

struct Echelon {
    rows: Vec<BTreeMap<usize, Scalar>>,
    pivots: Vec<(usize, usize)>,
}

/// A subspace of an ambient coordinate space with an explicit basis, plus
/// fast exact coordinates for vectors known to lie in it.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    field: FieldKind,
    amb_dim: usize,
    /// Ambient-by-dim matrix whose columns are the basis vectors.
    mat: Matrix,
    /// Rows on which the basis restricts to an invertible matrix, plus that
    /// inverse. For kernel bases the rows carry an identity block and the
    /// inverse is the identity.
    probe_rows: Vec<usize>,
    probe_inv: Matrix,
}

impl SubspaceBasis {
    /// Kernel of `m` as a subspace of `k^{cols}`.
    pub fn kernel_of(m: &Matrix) -> SubspaceBasis {
        let vectors = m.kernel_basis();
        let free = m.kernel_free_columns();
        let k = vectors.len();
        let refs: Vec<&Matrix> = vectors.iter().collect();
        let mat = Matrix::hcat(m.field(), m.cols(), &refs);
        SubspaceBasis {
            field: m.field(),
            amb_dim: m.cols(),
            mat,
            probe_rows: free,
            probe_inv: Matrix::identity(m.field(), k),
        }
    }

    /// Subspace spanned by explicit independent columns.
    pub fn from_columns(field: FieldKind, amb_dim: usize, vectors: &[Matrix]) -> Result<SubspaceBasis> {
        let refs: Vec<&Matrix> = vectors.iter().collect();
        let mat = Matrix::hcat(field, amb_dim, &refs);
        let k = vectors.len();
        if k == 0 {
            return Ok(SubspaceBasis {
                field,
                amb_dim,
                mat,
                probe_rows: Vec::new(),
                probe_inv: Matrix::zero(field, 0, 0),
            });
        }
        // Pivot rows of the transpose give a row set on which the basis is
        // invertible.
        let ech = mat.transpose().echelon();
        if ech.pivots.len() != k {
            return Err(Error::Structure("basis columns are dependent".into()));
        }
        let probe_rows: Vec<usize> = {
            let mut r: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
            r.sort_unstable();
            r
        };
        let mut probe = Matrix::zero(field, k, k);
        for (i, &row) in probe_rows.iter().enumerate() {
            for c in 0..k {
                let v = mat.get(row, c);
                if !v.is_zero() {
                    probe.set(i, c, v);
                }
            }
        }
        let probe_inv = probe.inverse()?;
        Ok(SubspaceBasis {
            field,
            amb_dim,
            mat,
            probe_rows,
            probe_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.mat.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.amb_dim
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn basis_vector(&self, i: usize) -> Matrix {
        self.mat.column_vector(i)
    }

    /// Coordinates of `v` in this basis; errors if `v` is not in the span.
    pub fn coords(&self, v: &Matrix) -> Result<Matrix> {
        assert_eq!(v.rows(), self.amb_dim);
        assert_eq!(v.cols(), 1);
        let k = self.dim();
        let mut probe_v = Matrix::zero(self.field, k, 1);
        for (i, &row) in self.probe_rows.iter().enumerate() {
            let s = v.get(row, 0);
            if !s.is_zero() {
                probe_v.set(i, 0, s);
            }
        }
        let x = self.probe_inv.mul(&probe_v);
        if self.mat.mul(&x) != *v {
            return Err(Error::NotInSpan(
                "vector does not lie in the computed subspace".into(),
            ));
        }
        Ok(x)
    }

    /// Restrict an ambient operator `op : source_ambient -> self_ambient`
    /// to a `self.dim() x source.dim()` matrix in the two bases. Errors if
    /// the operator does not map the source subspace into this one.
    pub fn restrict(&self, op: &Matrix, source: &SubspaceBasis) -> Result<Matrix> {
        assert_eq!(op.cols(), source.amb_dim);
        assert_eq!(op.rows(), self.amb_dim);
        let image = op.mul(&source.mat);
        let mut out = Matrix::zero(self.field, self.dim(), source.dim());
        for j in 0..source.dim() {
            let col = image.column_vector(j);
            let x = self.coords(&col)?;
            for (r, _, v) in x.entries() {
                out.set(r, j, v.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: usize, cols: usize, data: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zero(FieldKind::Q, rows, cols);
        for (r, row) in data.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, Scalar::from_int(FieldKind::Q, *v));
            }
        }
        m
    }

    /// Independent oracle: dense textbook row reduction.
    fn dense_rank(m: &Matrix) -> usize {
        let mut a: Vec<Vec<Scalar>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(pr) = (rank..m.rows()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pr);
            let inv = a[rank][col].inv().unwrap();
            for c in 0..m.cols() {
                a[rank][c] = &a[rank][c] * &inv;
            }
            for r in 0..m.rows() {
                if r != rank && !a[r][col].is_zero() {
                    let f0 = a[r][col].clone();
                    for c in 0..m.cols() {
                        a[r][c] = &a[r][c] - &(&f0 * &a[rank][c]);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(Matrix::identity(FieldKind::Q, 3).rank(), 3);
        assert_eq!(Matrix::zero(FieldKind::Q, 2, 4).rank(), 0);
        assert_eq!(Matrix::zero(FieldKind::Q, 2, 4).solve_dim_hom(), 4);
    }

    #[test]
    fn rank_random_f7_matches_dense_oracle() {
        let k = FieldKind::prime_field(7).unwrap();
        // Fixed pseudo-random 5x5 instance.
        let vals: [i64; 25] = [
            3, 0, 5, 1, 2, 6, 6, 0, 4, 1, 2, 3, 5, 0, 0, 1, 1, 1, 1, 1, 4, 0, 3, 2, 6,
        ];
        let mut m = Matrix::zero(k, 5, 5);
        for (i, v) in vals.iter().enumerate() {
            m.set(i / 5, i % 5, Scalar::from_int(k, *v));
        }
        assert_eq!(m.rank(), dense_rank(&m));
    }

    #[test]
    fn kernel_identity_zero_and_rank_one() {
        assert!(Matrix::identity(FieldKind::Q, 2).kernel_basis().is_empty());
        assert_eq!(Matrix::zero(FieldKind::Q, 1, 3).kernel_basis().len(), 3);

        // [[1,1],[1,1]] has kernel spanned by (1,-1).
        let m = qm(2, 2, &[&[1, 1], &[1, 1]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert!((&v.get(0, 0) + &v.get(1, 0)).is_zero());
        assert!(!v.get(0, 0).is_zero());
        assert!(m.mul(v).is_zero());
    }

    #[test]
    fn kron_identities() {
        let i2 = Matrix::identity(FieldKind::Q, 2);
        let i3 = Matrix::identity(FieldKind::Q, 3);
        assert_eq!(i2.kron(&i3), Matrix::identity(FieldKind::Q, 6));
        let z = Matrix::zero(FieldKind::Q, 2, 2);
        assert!(i2.kron(&z).is_zero());
    }

    #[test]
    fn kron_respects_composition() {
        let a = qm(2, 2, &[&[1, 2], &[3, -1]]);
        let b = qm(2, 2, &[&[0, 1], &[5, 2]]);
        let c = qm(2, 2, &[&[2, 2], &[-1, 4]]);
        let d = qm(2, 2, &[&[1, 0], &[7, 3]]);
        let lhs = a.mul(&b).kron(&c.mul(&d));
        let rhs = a.kron(&c).mul(&b.kron(&d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_and_inverse() {
        let m = qm(2, 2, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(FieldKind::Q, 2));
        let mut b = Matrix::zero(FieldKind::Q, 2, 1);
        b.set(0, 0, Scalar::from_int(FieldKind::Q, 3));
        b.set(1, 0, Scalar::from_int(FieldKind::Q, 2));
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul(&x), b);
        // Inconsistent system.
        let s = qm(2, 1, &[&[1], &[1]]);
        let mut rhs = Matrix::zero(FieldKind::Q, 2, 1);
        rhs.set(0, 0, Scalar::one(FieldKind::Q));
        rhs.set(1, 0, Scalar::from_int(FieldKind::Q, 2));
        assert!(s.solve(&rhs).is_none());
    }

    #[test]
    fn subspace_coords_and_restrict() {
        // Kernel of [1, 1, 0] in Q^3, with the shift operator restricted.
        let m = qm(1, 3, &[&[1, 1, 0]]);
        let basis = SubspaceBasis::kernel_of(&m);
        assert_eq!(basis.dim(), 2);
        let v = basis.basis_vector(0);
        let x = basis.coords(&v).unwrap();
        assert!(x.get(0, 0).is_one());
        assert!(x.get(1, 0).is_zero());

        let outside = qm(3, 1, &[&[1], &[0], &[0]]);
        assert!(basis.coords(&outside).is_err());
    }

    #[test]
    fn bareiss_agrees_with_dense_on_rationals() {
        let m = qm(
            3,
            4,
            &[&[2, 4, 1, 3], &[1, 2, 0, 1], &[0, 0, 1, 1]],
        );
        assert_eq!(m.rank(), dense_rank(&m));
        for v in m.kernel_basis() {
            assert!(m.mul(&v).is_zero());
        }
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }
}
