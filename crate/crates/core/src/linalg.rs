//! Dense exact matrices and the subspace bookkeeping built on row reduction.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

pub type Vector = Vec<FieldElement>;

pub fn zero_vector(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[FieldElement]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[FieldElement], b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &FieldElement, a: &[FieldElement]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn vec_axpy(acc: &mut [FieldElement], c: &FieldElement, v: &[FieldElement]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

pub fn dot(a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Result of row reduction.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vector>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows, "column length");
            for (i, x) in v.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Matrix {
        let vs = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, vs).expect("rectangular")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * out.cols;
                for (j, b) in orow.iter().enumerate() {
                    out.data[base + j].add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data: vec_add(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data: vec_scale(c, &self.data) }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &FieldElement, other: &Matrix) {
        vec_axpy(&mut self.data, c, &other.data);
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(&self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> FieldElement {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc.add_assign(&self[(i, i)]);
        }
        acc
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            let pivot_row: Vector = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = -&m[(i, c)];
                let base = i * m.cols + c;
                for (k, x) in pivot_row.iter().enumerate() {
                    m.data[base + k].add_mul(&f, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> Matrix {
        let red = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(&self.field, self.cols, free.len());
        for (t, &f) in free.iter().enumerate() {
            k[(f, t)] = self.field.one();
            for (r, &p) in red.pivots.iter().enumerate() {
                k[(p, t)] = -&red.matrix[(r, f)];
            }
        }
        k
    }

    /// One solution of `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {} but the matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let red = aug.rref();
        if red.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(&self.field, self.cols);
        for (r, &p) in red.pivots.iter().enumerate() {
            x[p] = red.matrix[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let red = aug.rref();
        if red.rank < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red.matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Matrix with the given rows selected, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let data = rows.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        Matrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Completes `subspace` (columns, in an ambient space of dimension `space_dim`)
/// to a basis and returns `(coset_basis, projection)`: the coset basis consists
/// of standard basis vectors, and `projection` maps any ambient vector to its
/// coordinates in the quotient.
pub fn quotient_representatives(field: &Field, space_dim: usize, subspace: &Matrix) -> (Matrix, Matrix) {
    assert!(subspace.cols() == 0 || subspace.rows() == space_dim, "subspace lives in the ambient space");
    let red = if subspace.cols() == 0 {
        Rref { matrix: Matrix::zeros(field, 0, space_dim), pivots: vec![], rank: 0 }
    } else {
        subspace.transpose().rref()
    };
    let free: Vec<usize> = (0..space_dim).filter(|c| !red.pivots.contains(c)).collect();
    let mut coset = Matrix::zeros(field, space_dim, free.len());
    let mut proj = Matrix::zeros(field, free.len(), space_dim);
    for (t, &j) in free.iter().enumerate() {
        coset[(j, t)] = field.one();
        // coordinate j of v - Σ_r v[pivot_r] * row_r
        proj[(t, j)] = field.one();
        for (r, &p) in red.pivots.iter().enumerate() {
            proj[(t, p)] = -&red.matrix[(r, j)];
        }
    }
    (coset, proj)
}

/// Reduced basis (rref rows) of the span of the given vectors.
pub fn span_basis(field: &Field, dim: usize, vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return vec![];
    }
    let m = Matrix::from_rows(field, vectors.to_vec()).expect("equal lengths");
    debug_assert_eq!(m.cols(), dim);
    let red = m.rref();
    (0..red.rank).map(|r| red.matrix.row(r).to_vec()).collect()
}

/// Indices of a maximal linearly independent prefix-greedy subset.
pub fn independent_subset(field: &Field, dim: usize, vectors: &[Vector]) -> Vec<usize> {
    if vectors.is_empty() {
        return vec![];
    }
    Matrix::from_columns(field, dim, vectors).rref().pivots
}

/// A left inverse of a matrix with full column rank.
pub fn left_inverse(m: &Matrix) -> Option<Matrix> {
    let q = m.cols();
    if q == 0 {
        return Some(Matrix::zeros(m.field(), 0, m.rows()));
    }
    let red = m.transpose().rref();
    if red.rank < q {
        return None;
    }
    let square = m.select_rows(&red.pivots);
    let inv = square.inverse()?;
    let mut out = Matrix::zeros(m.field(), q, m.rows());
    for (k, &r) in red.pivots.iter().enumerate() {
        for i in 0..q {
            out[(i, r)] = inv[(i, k)].clone();
        }
    }
    Some(out)
}

/// Incremental echelon basis used for span membership and closure computations.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    dim: usize,
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn new(field: &Field, dim: usize) -> EchelonBasis {
        EchelonBasis { field: field.clone(), dim, rows: vec![] }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, v: &[FieldElement]) -> Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                vec_axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = r[p].inv().expect("nonzero");
        let r = vec_scale(&inv, &r);
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                vec_axpy(row, &c, &r);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.rows.iter().map(|(_, v)| v.clone()).collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}

/// Coordinates on a subquotient `V / W` of a coordinate space, with `W ⊆ V`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Representatives in V of a basis of V / W.
    pub reps: Vec<Vector>,
    coord: Matrix,
}

impl Subquotient {
    pub fn new(field: &Field, ambient: usize, big: &[Vector], small: &[Vector]) -> Subquotient {
        let w = Matrix::from_columns(field, ambient, small);
        let (_, proj) = quotient_representatives(field, ambient, &w);
        let images: Vec<Vector> = big.iter().map(|v| proj.mul_vec(v)).collect();
        let chosen = independent_subset(field, proj.rows(), &images);
        let reps: Vec<Vector> = chosen.iter().map(|&i| big[i].clone()).collect();
        let img = Matrix::from_columns(field, proj.rows(), &chosen.iter().map(|&i| images[i].clone()).collect::<Vec<_>>());
        let linv = left_inverse(&img).expect("independent images");
        Subquotient { reps, coord: linv.mul(&proj) }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of the class of `v` (which must lie in V).
    pub fn coords(&self, v: &[FieldElement]) -> Vector {
        self.coord.mul_vec(v)
    }

    pub fn coordinate_matrix(&self) -> &Matrix {
        &self.coord
    }
}

/// Univariate polynomials over a field, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::new(vec![c])
    }

    /// t - c
    pub fn linear(c: &FieldElement) -> Poly {
        Poly::new(vec![-c, c.field().one()])
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = x.field().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(vec![]);
        }
        let f = self.coeffs[0].field();
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = self.coeffs.first().or(other.coeffs.first()).map(|c| c.field());
        let Some(f) = f else { return Poly::new(vec![]) };
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
        Poly::new((0..n).map(|i| &get(self, i) - &get(other, i)).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("nonzero divisor");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        let Some(f) = d.coeffs.first().map(|c| c.field()) else { unreachable!() };
        if r.len() <= dd {
            return (Poly::new(vec![]), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    let t = &c * dj;
                    r[k + j] = &r[k + j] - &t;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        let lead = self.coeffs.last().expect("nonzero").inv().expect("nonzero");
        Poly::new(self.coeffs.iter().map(|c| c * &lead).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![]);
        }
        let f = self.coeffs[0].field();
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| &f.from_u64(k as u64) * c).collect())
    }

    /// Extended gcd: returns (g, u, v) with u·a + v·b = g, g monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let f = a.coeffs.first().or(b.coeffs.first()).expect("nonzero input").field();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::constant(f.one()), Poly::new(vec![]));
        let (mut t0, mut t1) = (Poly::new(vec![]), Poly::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lead = r0.coeffs.last().expect("gcd nonzero").inv().expect("nonzero");
        let sc = |p: &Poly| Poly::new(p.coeffs.iter().map(|c| c * &lead).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(&q(), 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);

        let m = Matrix::from_i64(&q(), &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);

        let f2 = Field::prime(2);
        let m = Matrix::from_i64(&f2, &[&[1, 1], &[1, 1]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&f2, &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(&q(), 3).kernel_basis().cols(), 0);
        let k = Matrix::from_i64(&q(), &[&[1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![q().from_i64(-1), q().from_i64(1)]);

        let f2 = Field::prime(2);
        let m = Matrix::from_i64(&f2, &[&[1, 1], &[1, 1]]);
        let k = m.kernel_basis();
        // enumerate F2^2: exactly 0 and (1,1) are killed
        let mut killed = vec![];
        for a in 0..2 {
            for b in 0..2 {
                let v = vec![f2.from_i64(a), f2.from_i64(b)];
                if is_zero_vector(&m.mul_vec(&v)) {
                    killed.push((a, b));
                }
            }
        }
        assert_eq!(killed, vec![(0, 0), (1, 1)]);
        assert_eq!(k.column(0), vec![f2.one(), f2.one()]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q().from_i64(3), q().from_i64(-4)];
        assert_eq!(Matrix::identity(&q(), 2).solve(&b).unwrap(), Some(b.clone()));
        let two = Matrix::from_i64(&q(), &[&[2]]);
        let half = q().parse_element("1/2").unwrap();
        assert_eq!(two.solve(&[q().one()]).unwrap(), Some(vec![half]));
        let m = Matrix::from_i64(&q(), &[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[q().one(), q().zero()]).unwrap(), None);
        assert!(m.solve(&[q().one()]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let full = Matrix::identity(&q(), 3);
        let (c, p) = quotient_representatives(&q(), 3, &full);
        assert_eq!((c.cols(), p.rows()), (0, 0));

        let zero = Matrix::zeros(&q(), 3, 0);
        let (c, p) = quotient_representatives(&q(), 3, &zero);
        assert_eq!(c.cols(), 3);
        assert!(p.is_identity());

        let s = Matrix::from_i64(&q(), &[&[1], &[1]]);
        let (c, p) = quotient_representatives(&q(), 2, &s);
        assert_eq!(c.cols(), 1);
        assert!(is_zero_vector(&p.mul_vec(&[q().one(), q().one()])));
        assert!(!is_zero_vector(&p.mul_vec(&[q().one(), q().zero()])));
    }

    #[test]
    fn inverse_and_left_inverse() {
        let m = Matrix::from_i64(&q(), &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64(&q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
        let tall = Matrix::from_i64(&q(), &[&[1, 0], &[1, 1], &[0, 3]]);
        let l = left_inverse(&tall).unwrap();
        assert!(l.mul(&tall).is_identity());
    }

    #[test]
    fn subquotient_coordinates() {
        let f = q();
        let e = |i| unit_vector(&f, 3, i);
        // V = span(e0, e1), W = span(e0 + e1)
        let sq = Subquotient::new(&f, 3, &[e(0), e(1)], &[vec_add(&e(0), &e(1))]);
        assert_eq!(sq.dim(), 1);
        let a = sq.coords(&e(0));
        let b = sq.coords(&e(1));
        assert_eq!(a, vec_scale(&f.from_i64(-1), &b));
    }

    #[test]
    fn polynomial_gcd() {
        let f = q();
        let c = |v: &[i64]| Poly::new(v.iter().map(|&x| f.from_i64(x)).collect());
        // (t-1)^2 (t+2) and (t-1)(t-3)
        let a = c(&[1, -2, 1]).mul(&c(&[2, 1]));
        let b = c(&[-1, 1]).mul(&c(&[-3, 1]));
        let (g, u, v) = Poly::ext_gcd(&a, &b);
        assert_eq!(g, c(&[-1, 1]));
        assert_eq!(u.mul(&a).sub(&v.mul(&b).mul(&c(&[-1]))), g);
    }
}
