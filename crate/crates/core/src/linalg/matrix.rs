//! Dense exact matrices with row reduction, kernels and characteristic polynomials.

use std::fmt;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Vector helpers; vectors are plain `Vec<Scalar>` over one field.
pub mod vector {
    use super::*;

    pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    /// `acc += c * v`
    pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a = &*a + &(c * x);
            }
        }
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(|x| c * x).collect()
    }

    pub fn neg(v: &[Scalar]) -> Vec<Scalar> {
        v.iter().map(|x| -x).collect()
    }

    pub fn format(v: &[Scalar]) -> String {
        let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(", "))
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                assert_eq!(v.field(), field, "scalar field mismatch");
                data.push(v);
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have `cols` entries in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::FieldMismatch(v.field(), field));
                }
                data.push(v);
            }
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows.len(), cols, |r, c| field.from_i64(rows[r][c]))
    }

    pub fn diagonal(field: Field, diag: &[Scalar]) -> Self {
        let n = diag.len();
        Matrix::from_fn(field, n, n, |r, c| if r == c { diag[r].clone() } else { field.zero() })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        self.same_field(rhs)?;
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vector::zeros(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        Ok(Matrix::from_fn(self.field, self.rows, self.cols, |r, c| self.get(r, c) + rhs.get(r, c)))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        Ok(Matrix::from_fn(self.field, self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |r, c| s * self.get(r, c))
    }

    /// Rows `rows` and columns `cols`, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        self.same_field(rhs)?;
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        }))
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        self.same_field(rhs)?;
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix { field: self.field, rows: self.rows + rhs.rows, cols: self.cols, data })
    }

    /// Unique reduced row-echelon form and its pivot columns. `self` is untouched.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..a.cols {
            if prow == a.rows {
                break;
            }
            let Some(found) = (prow..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(found, prow);
            let inv = a.get(prow, col).inv().expect("nonzero pivot");
            for c in col..a.cols {
                let idx = prow * a.cols + c;
                a.data[idx] = &a.data[idx] * &inv;
            }
            for r in 0..a.rows {
                if r == prow {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..a.cols {
                    let p = a.get(prow, c).clone();
                    if !p.is_zero() {
                        let idx = r * a.cols + c;
                        a.data[idx] = &a.data[idx] - &(&factor * &p);
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vector::zeros(self.field, self.cols);
            v[free] = self.field.one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, &basis).expect("kernel vectors have ambient length")
    }

    /// One solution of `self * x = b`, with free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("rhs of length {} for {} rows", b.len(), self.rows)));
        }
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]))?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vector::zeros(self.field, self.cols);
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.iter().take_while(|&&p| p < n).count() < n {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.select(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from constant term upward.
    ///
    /// Reduces to upper Hessenberg form by elementary similarities, then expands with
    /// the standard Hessenberg recurrence; valid over any field.
    pub fn charpoly(&self) -> Result<Vec<Scalar>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("charpoly of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let t = h.get(m, m - 1).inv().expect("nonzero");
            for i in m + 1..n {
                let u = h.get(i, m - 1) * &t;
                if u.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let v = h.get(i, c) - &(&u * h.get(m, c));
                    h.set(i, c, v);
                }
                for r in 0..n {
                    let v = h.get(r, m) + &(&u * h.get(r, i));
                    h.set(r, m, v);
                }
            }
        }
        // polys[k] = charpoly of the leading k x k block
        let mut polys: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for m in 0..n {
            let prev = &polys[m];
            // (x - h_mm) * prev
            let mut p = vector::zeros(f, m + 2);
            for (k, c) in prev.iter().enumerate() {
                p[k + 1] = &p[k + 1] + c;
                p[k] = &p[k] - &(h.get(m, m) * c);
            }
            let mut t = f.one();
            for i in 1..=m {
                t = &t * h.get(m - i + 1, m - i);
                let coeff = &t * h.get(m - i, m);
                if coeff.is_zero() {
                    continue;
                }
                for (k, c) in polys[m - i].iter().enumerate() {
                    p[k] = &p[k] - &(&coeff * c);
                }
            }
            polys.push(p);
        }
        Ok(polys.pop().expect("nonempty"))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn same_field(&self, rhs: &Matrix) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        Ok(())
    }

    fn same_shape(&self, rhs: &Matrix) -> Result<()> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        Ok(())
    }

    /// Entries as strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|r| self.row(r).iter().map(ToString::to_string).collect()).collect()
    }

    /// Parses a dense matrix of scalar strings with the given shape.
    pub fn parse(field: Field, rows: usize, cols: usize, entries: &[Vec<String>]) -> Result<Matrix> {
        if entries.len() != rows {
            return Err(Error::Format(format!("expected {rows} rows, found {}", entries.len())));
        }
        let parsed = entries
            .iter()
            .map(|row| row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, cols, parsed).map_err(|e| Error::Format(e.to_string()))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", vector::format(self.row(r)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(Q, 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));

        let m = Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        // input untouched
        assert_eq!(m, Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]));

        let f3 = Field::Prime(3);
        let m = Matrix::from_i64(f3, &[&[1, 1], &[1, 2]]);
        assert_eq!(m.rref(), (Matrix::identity(f3, 2), vec![0, 1]));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::zeros(Q, 2, 2).nullspace().dim(), 2);
        assert_eq!(Matrix::identity(Q, 2).nullspace().dim(), 0);
        let k = Matrix::from_i64(Q, &[&[1, 2]]).nullspace();
        assert_eq!(k.dim(), 1);
        // span{(-2, 1)} in RREF is (1, -1/2)
        assert_eq!(k.basis().row(0), &[Q.one(), Q.parse("-1/2").unwrap()]);
        assert!(k.contains_vector(&[Q.from_i64(-2), Q.one()]));
    }

    #[test]
    fn solve_examples() {
        let b = vec![Q.from_i64(3), Q.from_i64(-5)];
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b));
        let m = Matrix::from_i64(Q, &[&[1, 1]]);
        assert_eq!(m.solve(&[Q.from_i64(2)]).unwrap(), Some(vec![Q.from_i64(2), Q.zero()]));
        let m = Matrix::from_i64(Q, &[&[1], &[1]]);
        assert_eq!(m.solve(&[Q.one(), Q.from_i64(2)]).unwrap(), None);
        assert!(m.solve(&[Q.one()]).is_err());
    }

    #[test]
    fn inverse_and_empty() {
        let m = Matrix::from_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let empty = Matrix::zeros(Q, 0, 0);
        assert_eq!(empty.inverse(), Some(empty.clone()));
        assert_eq!(empty.charpoly().unwrap(), vec![Q.one()]);
    }

    /// Leibniz expansion of det(xI - A) at a point; independent of the Hessenberg route.
    fn det_at(a: &Matrix, x: &Scalar) -> Scalar {
        let n = a.rows();
        let f = a.field();
        let m = Matrix::from_fn(f, n, n, |r, c| {
            let d = if r == c { x.clone() } else { f.zero() };
            &d - a.get(r, c)
        });
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = f.zero();
        permute(&mut perm, 0, &mut |p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = Scalar::sign(f, inversions % 2 == 1);
            for (i, &pi) in p.iter().enumerate() {
                term = &term * m.get(i, pi);
            }
            total = &total + &term;
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            visit(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, visit);
            p.swap(k, i);
        }
    }

    fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
        poly.iter().rev().fold(x.field().zero(), |acc, c| &(&acc * x) + c)
    }

    #[test]
    fn charpoly_known_values() {
        let m = Matrix::from_i64(Q, &[&[4, 0], &[0, 2]]);
        let p = m.charpoly().unwrap();
        assert_eq!(p, vec![Q.from_i64(8), Q.from_i64(-6), Q.one()]);
    }

    fn small_matrix(field: Field, n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, n * n..=n * n)
            .prop_map(move |v| Matrix::from_fn(field, n, n, |r, c| field.from_i64(v[r * n + c])))
    }

    fn rect_matrix(field: Field) -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..4, r * c..=r * c)
                .prop_map(move |v| Matrix::from_fn(field, r, c, |i, j| field.from_i64(v[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in rect_matrix(Q)) {
            let (r, p) = m.rref();
            prop_assert_eq!(r.rref(), (r.clone(), p));
        }

        #[test]
        fn rank_nullity(m in rect_matrix(Q), m3 in rect_matrix(Field::Prime(3))) {
            prop_assert_eq!(m.rank() + m.nullspace().dim(), m.cols());
            prop_assert_eq!(m3.rank() + m3.nullspace().dim(), m3.cols());
            for v in m.nullspace().basis().row_vectors() {
                prop_assert!(vector::is_zero(&m.mul_vec(&v).unwrap()));
            }
        }

        #[test]
        fn solve_is_exact(m in rect_matrix(Q), seed in proptest::collection::vec(-3i64..4, 4)) {
            let b: Vec<Scalar> = (0..m.rows()).map(|i| Q.from_i64(seed[i % seed.len()])).collect();
            if let Some(x) = m.solve(&b).unwrap() {
                prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
            }
            // a consistent right-hand side always has a solution
            let x0: Vec<Scalar> = (0..m.cols()).map(|i| Q.from_i64(seed[i % seed.len()])).collect();
            let b0 = m.mul_vec(&x0).unwrap();
            prop_assert!(m.solve(&b0).unwrap().is_some());
        }

        #[test]
        fn charpoly_matches_leibniz(m in (1usize..5).prop_flat_map(|n| small_matrix(Q, n)),
                                    m7 in (1usize..5).prop_flat_map(|n| small_matrix(Field::Prime(7), n))) {
            for a in [m, m7] {
                let p = a.charpoly().unwrap();
                prop_assert_eq!(p.len(), a.rows() + 1);
                for x in -2..3 {
                    let x = a.field().from_i64(x);
                    prop_assert_eq!(eval(&p, &x), det_at(&a, &x));
                }
            }
        }
    }
}
