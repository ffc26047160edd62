//! Matrix polynomials in `s = t^-1`: the big cell, the subfunctors `Z_p`
//! and `X`, the big-cell involution, companion models and the lattice
//! operators `T_{a,b}`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fieldpoly::{Coeff, FieldMatrix, FieldSpec, PolyMatrix, Polynomial, Ring};
use crate::orbits::{jordan_type, Partition};
use crate::schemes::JordanOperator;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LaurentError {
    #[error("constant coefficient is not the identity")]
    NotBigCell,
    #[error("characteristic polynomial is not λ^{0}")]
    NotNilpotentCharPoly(usize),
    #[error("matrix polynomial is not in Z_{0}")]
    NotInZ(usize),
    #[error("coefficient shapes disagree: {0}")]
    Shape(String),
    #[error("truncation order {got} is below the required {needed}")]
    TruncationTooLow { needed: usize, got: usize },
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse matrix polynomial: {0}")]
    Parse(String),
}

/// `A_0 + A_1 t^-1 + ... + A_D t^-D` with `n x n` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPolynomial {
    field: FieldSpec,
    n: usize,
    coeffs: Vec<FieldMatrix>,
}

impl MatrixPolynomial {
    pub fn new(coeffs: Vec<FieldMatrix>) -> Result<Self, LaurentError> {
        let first = coeffs.first().ok_or_else(|| LaurentError::Shape("no coefficients".into()))?;
        let (field, n) = (first.field(), first.rows());
        if coeffs.iter().any(|c| c.rows() != n || c.cols() != n || c.field() != field) {
            return Err(LaurentError::Shape("all coefficients must be n x n over one field".into()));
        }
        Ok(MatrixPolynomial { field, n, coeffs }.trimmed())
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        MatrixPolynomial { field, n, coeffs: vec![FieldMatrix::identity(field, n)] }
    }

    /// `1 + c t^-1`.
    pub fn linear(c: &FieldMatrix) -> Self {
        MatrixPolynomial {
            field: c.field(),
            n: c.rows(),
            coeffs: vec![FieldMatrix::identity(c.field(), c.rows()), c.clone()],
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(FieldMatrix::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Highest power of `t^-1` with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[FieldMatrix] {
        &self.coeffs
    }

    /// Coefficient of `t^-i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldMatrix {
        self.coeffs.get(i).cloned().unwrap_or_else(|| FieldMatrix::zeros(self.field, self.n, self.n))
    }

    pub fn is_big_cell(&self) -> bool {
        self.coeffs[0].is_identity()
    }

    pub fn mul(&self, other: &MatrixPolynomial) -> MatrixPolynomial {
        let mut out = vec![FieldMatrix::zeros(self.field, self.n, self.n); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        MatrixPolynomial { field: self.field, n: self.n, coeffs: out }.trimmed()
    }

    /// Drop every power of `t^-1` above `order`.
    pub fn truncated(&self, order: usize) -> MatrixPolynomial {
        let coeffs = self.coeffs.iter().take(order + 1).cloned().collect();
        MatrixPolynomial { field: self.field, n: self.n, coeffs }.trimmed()
    }

    /// `A(c t^-1)`.
    pub fn rescaled(&self, c: &Coeff) -> MatrixPolynomial {
        let f = self.field;
        let coeffs = self.coeffs.iter().enumerate().map(|(i, m)| m.scale(&f.pow(c, i as u64))).collect();
        MatrixPolynomial { field: f, n: self.n, coeffs }.trimmed()
    }

    pub fn transpose(&self) -> MatrixPolynomial {
        MatrixPolynomial {
            field: self.field,
            n: self.n,
            coeffs: self.coeffs.iter().map(FieldMatrix::transpose).collect(),
        }
    }

    /// Same polynomial as a matrix over `k[var]`.
    pub fn to_poly_matrix(&self, var: &str) -> PolyMatrix {
        let ring = Ring::new([var], self.field);
        let s = Polynomial::var(&ring, 0);
        let mut acc = PolyMatrix::zeros(&ring, self.n, self.n);
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&PolyMatrix::from_field(&ring, c).scale(&s.pow(i as u32)));
        }
        acc
    }

    /// Coefficients of `det A` as a polynomial in `t^-1`, constant first.
    pub fn det_coeffs(&self) -> Vec<Coeff> {
        let det = self.to_poly_matrix("s").det();
        let top = self.degree() * self.n;
        let mut out = vec![self.field.zero(); top + 1];
        for (m, c) in det.terms() {
            out[m.exponent(0) as usize] = c.clone();
        }
        out
    }

    /// Power series inverse of a big-cell element up to `t^-order`.
    pub fn inverse_series(&self, order: usize) -> Result<MatrixPolynomial, LaurentError> {
        if !self.is_big_cell() {
            return Err(LaurentError::NotBigCell);
        }
        // B_0 = 1, B_m = -sum_{i=1}^{m} A_i B_{m-i}
        let mut b: Vec<FieldMatrix> = vec![FieldMatrix::identity(self.field, self.n)];
        for m in 1..=order {
            let mut acc = FieldMatrix::zeros(self.field, self.n, self.n);
            for i in 1..=m.min(self.degree()) {
                acc = acc.add(&self.coeffs[i].mul(&b[m - i]));
            }
            b.push(acc.scale(&self.field.from_i64(-1)));
        }
        Ok(MatrixPolynomial { field: self.field, n: self.n, coeffs: b }.trimmed())
    }

    /// Parse the text form printed by `Display`, e.g.
    /// `1 + [[0,1],[0,0]]*t^-1`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<MatrixPolynomial, LaurentError> {
        let mut terms: Vec<(usize, Option<FieldMatrix>)> = Vec::new();
        for raw in split_top_level(text) {
            let term = raw.trim();
            let (body, power) = match term.rsplit_once("t^-") {
                Some((head, exp)) => {
                    let k = exp.trim().parse::<usize>().map_err(|_| LaurentError::Parse(term.into()))?;
                    (head.trim().trim_end_matches('*').trim(), k)
                }
                None => (term, 0),
            };
            let m = match body {
                "" | "1" => None,
                _ => Some(parse_matrix(body, field)?),
            };
            terms.push((power, m));
        }
        let n = terms
            .iter()
            .find_map(|(_, m)| m.as_ref().map(FieldMatrix::rows))
            .ok_or_else(|| LaurentError::Parse("size cannot be inferred without a matrix literal".into()))?;
        let top = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let mut coeffs = vec![FieldMatrix::zeros(field, n, n); top + 1];
        for (k, m) in terms {
            let m = m.unwrap_or_else(|| FieldMatrix::identity(field, n));
            if m.rows() != n || m.cols() != n {
                return Err(LaurentError::Shape("coefficient sizes differ".into()));
            }
            coeffs[k] = coeffs[k].add(&m);
        }
        MatrixPolynomial::new(coeffs)
    }
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn parse_matrix(text: &str, field: FieldSpec) -> Result<FieldMatrix, LaurentError> {
    let err = || LaurentError::Parse(text.to_string());
    let inner = text.strip_prefix("[[").and_then(|t| t.strip_suffix("]]")).ok_or_else(err)?;
    let rows: Vec<Vec<Coeff>> = inner
        .split("],[")
        .map(|row| {
            row.split(',')
                .map(|e| {
                    let e = e.trim();
                    let (num, den) = e.split_once('/').unwrap_or((e, "1"));
                    let num: BigInt = num.trim().parse().map_err(|_| err())?;
                    let den: BigInt = den.trim().parse().map_err(|_| err())?;
                    field.from_fraction(&num, &den).map_err(|_| err())
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(err());
    }
    Ok(FieldMatrix::from_fn(field, n, rows[0].len(), |i, j| rows[i][j].clone()))
}

impl fmt::Display for MatrixPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if c.is_identity() { None } else { Some(c.to_string()) };
            parts.push(match (i, body) {
                (0, None) => "1".to_string(),
                (0, Some(b)) => b,
                (i, None) => format!("t^-{i}"),
                (i, Some(b)) => format!("{b}*t^-{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `deg A <= p` and `det A = 1`.
pub fn z_membership(a: &MatrixPolynomial, p: usize) -> bool {
    if !a.is_big_cell() || a.degree() > p {
        return false;
    }
    let det = a.det_coeffs();
    a.field.is_one(&det[0]) && det[1..].iter().all(|c| a.field.is_zero(c))
}

/// `deg A <= n - 1`, `A_i = A_1^i` and `det(λ - A_1) = λ^n`.
pub fn x_membership(a: &MatrixPolynomial) -> bool {
    let n = a.n;
    if !a.is_big_cell() || a.degree() > n.saturating_sub(1).max(1) {
        return false;
    }
    let c = a.coeff(1);
    if !c.has_nilpotent_char_poly() {
        return false;
    }
    let mut power = c.clone();
    for i in 2..=a.degree().max(n - 1) {
        power = power.mul(&c);
        if a.coeff(i) != power {
            return false;
        }
    }
    true
}

/// `(1 - C t^-1)^-1 = 1 + C t^-1 + ... + C^{n-1} t^{-(n-1)}` for `C` with
/// characteristic polynomial `λ^n`.
pub fn ch_inverse(c: &FieldMatrix) -> Result<MatrixPolynomial, LaurentError> {
    if !c.is_square() {
        return Err(LaurentError::Shape("matrix is not square".into()));
    }
    let n = c.rows();
    if !c.has_nilpotent_char_poly() {
        return Err(LaurentError::NotNilpotentCharPoly(n));
    }
    let mut coeffs = vec![FieldMatrix::identity(c.field(), n)];
    for i in 1..n {
        coeffs.push(coeffs[i - 1].mul(c));
    }
    let out = MatrixPolynomial::new(coeffs)?;
    let minus = MatrixPolynomial::linear(&c.scale(&c.field().from_i64(-1)));
    if minus.mul(&out) != MatrixPolynomial::identity(c.field(), n) {
        return Err(LaurentError::Postcondition("(1 - C t^-1) times the inverse is not 1".into()));
    }
    Ok(out)
}

/// Antidiagonal matrix with entry `(-1)^j` in column `j`, row `n + 1 - j`.
pub fn antidiagonal(field: FieldSpec, n: usize) -> FieldMatrix {
    FieldMatrix::from_fn(field, n, n, |i, j| {
        if i + j == n - 1 {
            field.from_i64(if (j + 1) % 2 == 0 { 1 } else { -1 })
        } else {
            field.zero()
        }
    })
}

/// `J A((-1)^n t^-1)^{-T} J^-1` as a series truncated at `t^-order`.
pub fn omega(a: &MatrixPolynomial, order: usize) -> Result<MatrixPolynomial, LaurentError> {
    if !a.is_big_cell() {
        return Err(LaurentError::NotBigCell);
    }
    let f = a.field;
    let n = a.n;
    let sign = f.from_i64(if n.is_multiple_of(2) { 1 } else { -1 });
    let inv = a.rescaled(&sign).inverse_series(order)?.transpose();
    let j = antidiagonal(f, n);
    let jinv = j.inverse().expect("antidiagonal matrix is invertible");
    let coeffs = inv.coeffs.iter().map(|c| j.mul(c).mul(&jinv)).collect();
    Ok(MatrixPolynomial { field: f, n, coeffs }.trimmed())
}

/// Exact image of a determinant-one polynomial: the inverse is the adjugate,
/// of degree at most `(n-1) deg A`, so the default truncation
/// `n deg A + 1` certifies that the series terminates.
pub fn omega_exact(a: &MatrixPolynomial) -> Result<MatrixPolynomial, LaurentError> {
    if !z_membership(a, a.degree()) {
        return Err(LaurentError::NotInZ(a.degree()));
    }
    let order = a.size() * a.degree() + 1;
    let out = omega(a, order)?;
    let bound = (a.size() - 1) * a.degree();
    if out.degree() > bound {
        return Err(LaurentError::TruncationTooLow { needed: out.degree(), got: bound });
    }
    Ok(out)
}

/// Block companion matrix `[[-A_1 .. -A_p], [1, 0, ..], ..]` of a matrix
/// polynomial in `Z_p`, with its characteristic polynomial in `λ`, checked
/// against `λ^{pn} det A(λ^-1)`.
pub fn companion_model(a: &MatrixPolynomial, p: usize) -> Result<(FieldMatrix, Polynomial), LaurentError> {
    if p == 0 || !z_membership(a, p) {
        return Err(LaurentError::NotInZ(p));
    }
    let (f, n) = (a.field, a.n);
    let size = p * n;
    let mut comp = FieldMatrix::zeros(f, size, size);
    for blk in 0..p {
        let c = a.coeff(blk + 1);
        for i in 0..n {
            for j in 0..n {
                comp.set(i, blk * n + j, f.neg(c.get(i, j)));
            }
        }
    }
    for blk in 1..p {
        for i in 0..n {
            comp.set(blk * n + i, (blk - 1) * n + i, f.one());
        }
    }
    let ring = Ring::new(["lambda"], f);
    let lambda = Polynomial::var(&ring, 0);
    let coeffs = PolyMatrix::from_field(&ring, &comp).char_poly_coeffs();
    let chi = coeffs
        .iter()
        .enumerate()
        .fold(Polynomial::zero(&ring), |acc, (k, c)| &acc + &(c * &lambda.pow((size - k) as u32)));

    // λ^{pn} det A(λ^-1) = det(λ^p + λ^{p-1} A_1 + ... + A_p)
    let mut pencil = PolyMatrix::zeros(&ring, n, n);
    for k in 0..=p {
        pencil = pencil.add(&PolyMatrix::from_field(&ring, &a.coeff(k)).scale(&lambda.pow((p - k) as u32)));
    }
    if pencil.det() != chi {
        return Err(LaurentError::Postcondition(format!("companion characteristic polynomial {chi} differs")));
    }
    Ok((comp, chi))
}

/// Multiplication by `t` on `t^-b L_0 / t^a L_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeOperatorSpec {
    pub n: usize,
    pub a: usize,
    pub b: usize,
}

impl LatticeOperatorSpec {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self, LaurentError> {
        if n == 0 || a + b == 0 {
            return Err(LaurentError::InvalidParameters(format!(
                "need n >= 1 and a + b >= 1, got n={n}, a={a}, b={b}"
            )));
        }
        Ok(LatticeOperatorSpec { n, a, b })
    }

    /// Basis labels `(i, k)` for `t^k ε_i`: `i` ascending, then `k` from
    /// `a - 1` down to `-b`.
    pub fn basis(&self) -> Vec<(usize, i64)> {
        let (a, b) = (self.a as i64, self.b as i64);
        (1..=self.n).flat_map(|i| (-b..a).rev().map(move |k| (i, k))).collect()
    }
}

/// The operator `T_{a,b}` in the monomial basis; type `((a+b)^n)`.
pub fn lattice_nilpotent(spec: LatticeOperatorSpec, field: FieldSpec) -> Result<JordanOperator, LaurentError> {
    let basis = spec.basis();
    let dim = basis.len();
    let mut m = FieldMatrix::zeros(field, dim, dim);
    for (col, &(i, k)) in basis.iter().enumerate() {
        if k + 1 < spec.a as i64 {
            let row = basis.iter().position(|&x| x == (i, k + 1)).expect("basis is closed under t");
            m.set(row, col, field.one());
        }
    }
    let sigma = jordan_type(&m).map_err(|e| LaurentError::Postcondition(e.to_string()))?;
    let op = JordanOperator::new(sigma.clone(), field);
    if sigma != Partition::rectangle(spec.a + spec.b, spec.n) || op.matrix() != &m {
        return Err(LaurentError::Postcondition(format!("T_(a,b) has type {sigma}")));
    }
    Ok(op)
}
