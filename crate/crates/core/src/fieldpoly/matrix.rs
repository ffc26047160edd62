use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::field::{Coeff, FieldSpec};
use super::poly::{Polynomial, Ring};
use super::PolyError;

/// Dense row-major matrix over a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl FieldMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = FieldMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged matrix");
                row.iter().map(|&v| field.from_i64(v))
            })
            .collect();
        FieldMatrix { field, rows: r, cols: c, data }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Coeff) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        FieldMatrix { field, rows, cols, data }
    }

    /// Matrix unit `E_{ij}` (0-based).
    pub fn unit(field: FieldSpec, n: usize, i: usize, j: usize) -> Self {
        let mut m = FieldMatrix::zeros(field, n, n);
        m.set(i, j, field.one());
        m
    }

    pub fn field(&self) -> FieldSpec {
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Coeff] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| self.field.is_zero(c))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == FieldMatrix::identity(self.field, self.rows)
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = FieldMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.add(a, b)).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.field.sub(a, b)).collect();
        self.with_data(data)
    }

    pub fn scale(&self, c: &Coeff) -> FieldMatrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Coeff>) -> FieldMatrix {
        FieldMatrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> FieldMatrix {
        FieldMatrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn pow(&self, e: u32) -> FieldMatrix {
        assert!(self.is_square());
        let mut acc = FieldMatrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FieldMatrix {
        FieldMatrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.rows, other.rows);
        FieldMatrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = f.inv(m.get(row, col));
            for j in col..m.cols {
                let v = f.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect()
    }

    /// Some `X` with `self * X = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &FieldMatrix) -> Option<FieldMatrix> {
        assert_eq!(self.rows, rhs.rows);
        let f = self.field;
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = FieldMatrix::zeros(f, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FieldMatrix> {
        assert!(self.is_square());
        if self.rank() < self.rows {
            return None;
        }
        self.solve(&FieldMatrix::identity(self.field, self.rows))
    }

    /// Coefficients `[1, c_1, ..., c_n]` of `det(lambda - self)`.
    pub fn char_poly_coeffs(&self) -> Vec<Coeff> {
        let ring = Ring::new(Vec::<String>::new(), self.field);
        PolyMatrix::from_field(&ring, self).char_poly_coeffs().iter().map(Polynomial::constant_term).collect()
    }

    pub fn det(&self) -> Coeff {
        let ring = Ring::new(Vec::<String>::new(), self.field);
        PolyMatrix::from_field(&ring, self).det().constant_term()
    }

    /// True iff the characteristic polynomial is `lambda^n`.
    pub fn has_nilpotent_char_poly(&self) -> bool {
        self.char_poly_coeffs().iter().skip(1).all(|c| self.field.is_zero(c))
    }

    pub fn random<R: Rng + ?Sized>(field: FieldSpec, rows: usize, cols: usize, rng: &mut R) -> FieldMatrix {
        let data = (0..rows * cols).map(|_| field.random(rng, 3)).collect();
        FieldMatrix { field, rows, cols, data }
    }

    pub fn random_invertible<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
        loop {
            let m = FieldMatrix::random(field, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.field.format(self.get(i, j)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Dense matrix with polynomial entries from a common ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, data: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_fn(ring: &Arc<Ring>, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        PolyMatrix { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_field(ring: &Arc<Ring>, m: &FieldMatrix) -> Self {
        assert_eq!(ring.field(), m.field(), "field mismatch");
        PolyMatrix::from_fn(ring, m.rows, m.cols, |i, j| Polynomial::constant(ring, m.get(i, j).clone()))
    }

    /// Matrix whose entries are the ring variables `prefix_i_j` (1-based),
    /// which must exist in `ring`.
    pub fn of_variables(ring: &Arc<Ring>, prefix: &str, rows: usize, cols: usize) -> Result<Self, PolyError> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(Polynomial::var_named(ring, &format!("{prefix}_{i}_{j}"))?);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, data })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMatrix {
        let data = self.data.iter().map(|a| a * c).collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn pow(&self, e: u32) -> PolyMatrix {
        assert!(self.is_square());
        let mut acc = PolyMatrix::identity(&self.ring, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Apply a ring map entrywise.
    pub fn map(&self, target: &Arc<Ring>, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        let data = self.data.iter().map(f).collect();
        PolyMatrix { ring: target.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Evaluate every entry at a field point.
    pub fn eval(&self, point: &[Coeff]) -> FieldMatrix {
        let f = self.ring.field();
        FieldMatrix::from_fn(f, self.rows, self.cols, |i, j| self.get(i, j).eval(point))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Polynomial {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut m = self.clone();
        let mut prev = Polynomial::one(&self.ring);
        let mut negate = false;
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m.get(r, k).is_zero()) else {
                    return Polynomial::zero(&self.ring);
                };
                for j in 0..n {
                    m.data.swap(p * n + j, k * n + j);
                }
                negate = !negate;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                    let v = num.exact_div(&prev).expect("Bareiss division is exact");
                    m.set(i, j, v);
                }
                m.set(i, k, Polynomial::zero(&self.ring));
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// Coefficients `[1, c_1, ..., c_n]` of `det(lambda*I - self)` by the
    /// division-free Berkowitz recursion.
    pub fn char_poly_coeffs(&self) -> Vec<Polynomial> {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let ring = &self.ring;
        if n == 0 {
            return vec![Polynomial::one(ring)];
        }
        // Start from the trailing 1x1 block and grow toward the full matrix.
        let last = n - 1;
        let mut vec = vec![Polynomial::one(ring), -self.get(last, last)];
        for start in (0..last).rev() {
            let size = n - start;
            let a = self.get(start, start);
            let idx: Vec<usize> = (start + 1..n).collect();
            let r: Vec<&Polynomial> = idx.iter().map(|&j| self.get(start, j)).collect();
            let mut c: Vec<Polynomial> = idx.iter().map(|&i| self.get(i, start).clone()).collect();
            // diag[k] = -R A^k C
            let mut diags = vec![Polynomial::one(ring), -a];
            for step in 0..size - 1 {
                let dot = r.iter().zip(&c).fold(Polynomial::zero(ring), |acc, (x, y)| &acc + &(*x * y));
                diags.push(-&dot);
                if step + 1 < size - 1 {
                    c = idx
                        .iter()
                        .map(|&i| {
                            idx.iter().zip(&c).fold(Polynomial::zero(ring), |acc, (&j, y)| &acc + &(self.get(i, j) * y))
                        })
                        .collect();
                }
            }
            // Toeplitz (size+1) x size times vec (length size).
            let next: Vec<Polynomial> = (0..=size)
                .map(|i| {
                    (0..size.min(i + 1)).fold(Polynomial::zero(ring), |acc, j| {
                        let d = &diags[i - j];
                        if d.is_zero() || vec[j].is_zero() {
                            acc
                        } else {
                            &acc + &(d * &vec[j])
                        }
                    })
                })
                .collect();
            vec = next;
        }
        vec
    }
}

/// `det(lambda*I - m)` as a polynomial in the ring of `m` extended by the
/// fresh variable `lambda` (appended last).
pub fn char_poly(m: &PolyMatrix, lambda: &str) -> Result<Polynomial, PolyError> {
    if !m.is_square() {
        return Err(PolyError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.ring().var_index(lambda).is_some() {
        return Err(PolyError::RingMismatch(format!("variable {lambda} is not fresh")));
    }
    let base = m.ring();
    let mut vars = base.vars().to_vec();
    vars.push(lambda.to_string());
    let ext = Ring::with_order(vars, base.field(), base.order().clone());
    let lam = Polynomial::var(&ext, base.nvars());
    let n = m.rows();
    let coeffs = m.char_poly_coeffs();
    let mut acc = Polynomial::zero(&ext);
    for (k, c) in coeffs.iter().enumerate() {
        let c = c.to_ring(&ext)?;
        acc = &acc + &(&c * &lam.pow((n - k) as u32));
    }
    Ok(acc)
}
