//! Ideal constructors for nilpotent matrix schemes, Grassmannian chart
//! ideals of invariant subspaces, the intertwining scheme and tangent
//! space dimensions.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exterior::{shuffle_linear_forms, ExteriorError, IndexSet};
use crate::fieldpoly::{Coeff, FieldMatrix, FieldSpec, PolyError, PolyMatrix, Polynomial, Ring};
use crate::groebner::{matrix_variable_names, GroebnerError, Ideal};
use crate::orbits::{jordan_matrix, Partition};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchemeError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("column span is not invariant under the operator")]
    NotInvariant,
    #[error("point is not on the scheme: generator {0} does not vanish")]
    NotOnScheme(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// `n x n` matrices with `A^e = 0` and characteristic polynomial `λ^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentSchemeSpec {
    pub n: usize,
    pub e: usize,
}

impl NilpotentSchemeSpec {
    pub fn new(n: usize, e: usize) -> Result<Self, SchemeError> {
        if e == 0 || e > n {
            return Err(SchemeError::InvalidParameters(format!("need 1 <= e <= n, got n={n}, e={e}")));
        }
        Ok(NilpotentSchemeSpec { n, e })
    }
}

/// A nilpotent operator in standard Jordan form.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanOperator {
    partition: Partition,
    matrix: FieldMatrix,
}

impl JordanOperator {
    pub fn new(partition: Partition, field: FieldSpec) -> Self {
        let matrix = jordan_matrix(&partition, field);
        JordanOperator { partition, matrix }
    }

    /// Type `(e^blocks)`.
    pub fn rectangular(e: usize, blocks: usize, field: FieldSpec) -> Self {
        JordanOperator::new(Partition::rectangle(e, blocks), field)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.partition.size()
    }

    pub fn blocks(&self) -> usize {
        self.partition.len()
    }

    pub fn nilpotency_order(&self) -> usize {
        self.partition.largest()
    }
}

/// Affine chart of `Gr(n, k^ambient)` where the rows `pivots` of a basis
/// matrix form the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    ambient: usize,
    pivots: IndexSet,
}

impl Chart {
    pub fn new(ambient: usize, pivots: IndexSet) -> Result<Self, SchemeError> {
        if pivots.is_empty() || pivots.indices().iter().any(|&i| i > ambient) {
            return Err(SchemeError::InvalidParameters(format!("pivots {pivots} do not fit in dimension {ambient}")));
        }
        Ok(Chart { ambient, pivots })
    }

    /// Every chart of `Gr(n, k^ambient)`.
    pub fn all(ambient: usize, n: usize) -> Vec<Chart> {
        IndexSet::all(ambient, n).into_iter().map(|pivots| Chart { ambient, pivots }).collect()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &IndexSet {
        &self.pivots
    }

    fn free_rows(&self) -> Vec<usize> {
        (1..=self.ambient).filter(|&i| !self.pivots.contains(i)).collect()
    }

    /// Chart coordinates `x_i_j` for rows `i` outside the pivots, row-major.
    pub fn variable_names(&self) -> Vec<String> {
        self.free_rows().into_iter().flat_map(|i| (1..=self.dim()).map(move |j| format!("x_{i}_{j}"))).collect()
    }

    pub fn ring(&self, field: FieldSpec) -> Arc<Ring> {
        Ring::new(self.variable_names(), field)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{}) chart {}", self.dim(), self.ambient, self.pivots)
    }
}

/// `n x n` matrix of variables `a_i_j`.
pub fn matrix_ring(prefix: &str, n: usize, field: FieldSpec) -> Arc<Ring> {
    Ring::new(matrix_variable_names(prefix, n, n), field)
}

/// Entries of `A^e` and the non-leading coefficients of `det(λ - A)`, in
/// the variables `a_i_j`.
pub fn nilpotent_scheme_ideal(spec: NilpotentSchemeSpec, field: FieldSpec) -> Result<Ideal, SchemeError> {
    let ring = matrix_ring("a", spec.n, field);
    Ok(Ideal::new(&ring, nilpotent_generators(&ring, spec)?)?)
}

fn nilpotent_generators(ring: &Arc<Ring>, spec: NilpotentSchemeSpec) -> Result<Vec<Polynomial>, SchemeError> {
    let a = PolyMatrix::of_variables(ring, "a", spec.n, spec.n)?;
    let mut gens: Vec<Polynomial> = a.pow(spec.e as u32).entries().to_vec();
    gens.extend(a.char_poly_coeffs().into_iter().skip(1));
    Ok(gens)
}

/// Basis matrix of the universal plane on a chart: identity on the pivot
/// rows, chart variables elsewhere.
pub fn chart_matrix(chart: &Chart, ring: &Arc<Ring>) -> Result<PolyMatrix, SchemeError> {
    let n = chart.dim();
    let mut m = PolyMatrix::zeros(ring, chart.ambient, n);
    for (j, &p) in chart.pivots.indices().iter().enumerate() {
        m.set(p - 1, j, Polynomial::one(ring));
    }
    for i in chart.free_rows() {
        for j in 1..=n {
            m.set(i - 1, j - 1, Polynomial::var_named(ring, &format!("x_{i}_{j}"))?);
        }
    }
    Ok(m)
}

fn check_chart(t: &JordanOperator, chart: &Chart) -> Result<(), SchemeError> {
    if t.ambient_dim() != chart.ambient {
        return Err(SchemeError::InvalidParameters(format!(
            "operator acts on dimension {}, chart lives in dimension {}",
            t.ambient_dim(),
            chart.ambient
        )));
    }
    Ok(())
}

/// `(T M, B)` with `B = (T M)` restricted to the pivot rows.
fn restricted_operator(
    t: &JordanOperator,
    chart: &Chart,
    ring: &Arc<Ring>,
) -> Result<(PolyMatrix, PolyMatrix, PolyMatrix), SchemeError> {
    let m = chart_matrix(chart, ring)?;
    let tm = PolyMatrix::from_field(ring, t.matrix()).mul(&m);
    let cols: Vec<usize> = (0..chart.dim()).collect();
    let b = tm.submatrix(&chart.pivots.zero_based(), &cols);
    Ok((m, tm, b))
}

/// Invariance equations alone: entries of `T M - M B` off the pivot rows.
pub fn invariance_chart_ideal(t: &JordanOperator, chart: &Chart) -> Result<Ideal, SchemeError> {
    check_chart(t, chart)?;
    let ring = chart.ring(t.field());
    let (m, tm, b) = restricted_operator(t, chart, &ring)?;
    let diff = tm.sub(&m.mul(&b));
    let gens = chart
        .free_rows()
        .into_iter()
        .flat_map(|i| (0..chart.dim()).map(move |j| (i - 1, j)))
        .map(|(i, j)| diff.get(i, j).clone())
        .collect();
    Ok(Ideal::new(&ring, gens)?)
}

/// Invariant planes on which `T` restricts with characteristic polynomial
/// `λ^n`: invariance equations plus the non-leading coefficients of
/// `det(λ - B)`.
pub fn invariant_chart_ideal(t: &JordanOperator, chart: &Chart) -> Result<Ideal, SchemeError> {
    let inv = invariance_chart_ideal(t, chart)?;
    let ring = inv.ring().clone();
    let (_, _, b) = restricted_operator(t, chart, &ring)?;
    let mut gens = inv.generators().to_vec();
    gens.extend(b.char_poly_coeffs().into_iter().skip(1));
    Ok(Ideal::new(&ring, gens)?)
}

/// Shuffle linear forms with each `p_J` replaced by the `J`-minor of the
/// chart matrix.
pub fn shuffle_chart_ideal(t: &JordanOperator, chart: &Chart) -> Result<Ideal, SchemeError> {
    check_chart(t, chart)?;
    let ring = chart.ring(t.field());
    let m = chart_matrix(chart, &ring)?;
    let cols: Vec<usize> = (0..chart.dim()).collect();
    let minors: Vec<Polynomial> =
        IndexSet::all(chart.ambient, chart.dim()).iter().map(|j| m.submatrix(&j.zero_based(), &cols).det()).collect();
    let (_, forms) = shuffle_linear_forms(t.matrix(), chart.dim())?;
    let gens = forms.iter().map(|f| f.substitute(&minors, &ring)).collect();
    Ok(Ideal::new(&ring, gens)?)
}

/// Variables `a_i_j` (`n x n`) followed by `psi_i_j` (`N x n`).
pub fn vee_ring(spec: NilpotentSchemeSpec, ambient: usize, field: FieldSpec) -> Arc<Ring> {
    let mut vars = matrix_variable_names("a", spec.n, spec.n);
    vars.extend(matrix_variable_names("psi", ambient, spec.n));
    Ring::new(vars, field)
}

/// The nilpotent scheme equations in `A` together with the entries of
/// `T Ψ - Ψ A`, for `T` of type `(e^blocks)`.
pub fn vee_scheme_ideal(spec: NilpotentSchemeSpec, t: &JordanOperator) -> Result<Ideal, SchemeError> {
    let p = t.partition();
    if p.parts().iter().any(|&x| x != spec.e) {
        return Err(SchemeError::InvalidParameters(format!("operator type {p} is not a power of ({})", spec.e)));
    }
    let ring = vee_ring(spec, t.ambient_dim(), t.field());
    let mut gens = nilpotent_generators(&ring, spec)?;
    let a = PolyMatrix::of_variables(&ring, "a", spec.n, spec.n)?;
    let psi = PolyMatrix::of_variables(&ring, "psi", t.ambient_dim(), spec.n)?;
    let tm = PolyMatrix::from_field(&ring, t.matrix());
    gens.extend(tm.mul(&psi).sub(&psi.mul(&a)).entries().iter().cloned());
    Ok(Ideal::new(&ring, gens)?)
}

/// The matrix `B` with `Ψ B = T Ψ`: the restriction of `T` to the column
/// span of `Ψ`, in the basis given by the columns.
pub fn phi(t: &FieldMatrix, psi: &FieldMatrix) -> Result<FieldMatrix, SchemeError> {
    if psi.rows() != t.rows() || !t.is_square() {
        return Err(SchemeError::InvalidParameters("shape mismatch between operator and basis".into()));
    }
    let rank = psi.rank();
    if rank != psi.cols() {
        return Err(SchemeError::RankDeficient { rank, expected: psi.cols() });
    }
    let b = psi.solve(&t.mul(psi)).ok_or(SchemeError::NotInvariant)?;
    debug_assert!(b.has_nilpotent_char_poly() || !t.pow(t.rows() as u32).is_zero());
    Ok(b)
}

/// Matrix of `Ψ ↦ T Ψ - Ψ A` on `N x n` matrices, flattened row-major.
pub fn intertwiner_system(t: &FieldMatrix, a: &FieldMatrix) -> FieldMatrix {
    let f = t.field();
    let (big, n) = (t.rows(), a.rows());
    let mut m = FieldMatrix::zeros(f, big * n, big * n);
    for i in 0..big {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..big {
                let v = f.add(m.get(row, k * n + j), t.get(i, k));
                m.set(row, k * n + j, v);
            }
            for k in 0..n {
                let v = f.sub(m.get(row, i * n + k), a.get(k, j));
                m.set(row, i * n + k, v);
            }
        }
    }
    m
}

/// Jacobian of an ideal's generators, reusable across points.
#[derive(Debug, Clone)]
pub struct Jacobian {
    generators: Vec<Polynomial>,
    partials: Vec<Vec<Polynomial>>,
    nvars: usize,
}

impl Jacobian {
    pub fn new(ideal: &Ideal) -> Self {
        let nvars = ideal.ring().nvars();
        let generators = ideal.generators().to_vec();
        let partials = generators.iter().map(|g| (0..nvars).map(|v| g.derivative(v)).collect()).collect();
        Jacobian { generators, partials, nvars }
    }

    /// Nullity of the Jacobian at `point`, after checking that the point
    /// lies on the scheme.
    pub fn tangent_dim(&self, point: &[Coeff]) -> Result<usize, SchemeError> {
        if point.len() != self.nvars {
            return Err(SchemeError::InvalidParameters(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let Some(field) = self.generators.first().map(Polynomial::field) else {
            return Ok(self.nvars);
        };
        for g in &self.generators {
            if !field.is_zero(&g.eval(point)) {
                return Err(SchemeError::NotOnScheme(g.to_string()));
            }
        }
        let jac =
            FieldMatrix::from_fn(field, self.generators.len(), self.nvars, |r, c| self.partials[r][c].eval(point));
        Ok(jac.nullity())
    }
}

/// Dimension of the Zariski tangent space of `ideal` at `point`.
pub fn tangent_dim(ideal: &Ideal, point: &[Coeff]) -> Result<usize, SchemeError> {
    Jacobian::new(ideal).tangent_dim(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldpoly::parse_poly;
    use crate::groebner::{dimension, ideal_contains, ideal_equal, GroebnerConfig};
    use crate::orbits::{jordan_type, surjectivity_witness};

    fn cfg() -> GroebnerConfig {
        GroebnerConfig::with_timeout(120)
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ideal_of(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|g| parse_poly(g, ring).unwrap()).collect()).unwrap()
    }

    #[test]
    fn nilpotent_scheme_examples() {
        let q = FieldSpec::Rationals;
        let i = nilpotent_scheme_ideal(NilpotentSchemeSpec::new(1, 1).unwrap(), q).unwrap();
        assert!(ideal_equal(&i, &ideal_of(i.ring(), &["a_1_1"]), &cfg()).unwrap());

        let i = nilpotent_scheme_ideal(NilpotentSchemeSpec::new(2, 2).unwrap(), q).unwrap();
        assert_eq!(i.generators().len(), 6);
        let expected = ideal_of(i.ring(), &["a_1_1 + a_2_2", "a_1_1*a_2_2 - a_1_2*a_2_1"]);
        assert!(ideal_equal(&i, &expected, &cfg()).unwrap());
        assert_eq!(dimension(&i, &cfg()).unwrap(), Some(2));

        // with e = n the matrix power is implied by Cayley–Hamilton
        let spec = NilpotentSchemeSpec::new(3, 3).unwrap();
        let full = nilpotent_scheme_ideal(spec, q).unwrap();
        let ring = full.ring().clone();
        let a = PolyMatrix::of_variables(&ring, "a", 3, 3).unwrap();
        let coeffs = Ideal::new(&ring, a.char_poly_coeffs().into_iter().skip(1).collect()).unwrap();
        assert!(ideal_equal(&full, &coeffs, &cfg()).unwrap());

        assert!(NilpotentSchemeSpec::new(2, 3).is_err());
    }

    #[test]
    fn chart_matrix_shapes() {
        let q = FieldSpec::Rationals;
        let c = Chart::new(2, IndexSet::new(vec![1]).unwrap()).unwrap();
        let ring = c.ring(q);
        let m = chart_matrix(&c, &ring).unwrap();
        assert_eq!(m.get(0, 0).to_string(), "1");
        assert_eq!(m.get(1, 0).to_string(), "x_2_1");

        let c = Chart::new(4, IndexSet::new(vec![1, 3]).unwrap()).unwrap();
        let ring = c.ring(q);
        assert_eq!(ring.vars(), &["x_2_1", "x_2_2", "x_4_1", "x_4_2"]);
        let m = chart_matrix(&c, &ring).unwrap();
        assert!(m.submatrix(&[0, 2], &[0, 1]).det().is_constant());
        assert_eq!(m.submatrix(&[0, 2], &[0, 1]).det(), Polynomial::one(&ring));
        assert_eq!(m.get(3, 1).to_string(), "x_4_2");
        assert_eq!(Chart::all(4, 2).len(), 6);
    }

    #[test]
    fn line_in_plane_contrast() {
        let q = FieldSpec::Rationals;
        let t = JordanOperator::new(part(&[2]), q);
        let c = Chart::new(2, IndexSet::new(vec![1]).unwrap()).unwrap();
        let ring = c.ring(q);
        let only = invariance_chart_ideal(&t, &c).unwrap();
        let full = invariant_chart_ideal(&t, &c).unwrap();
        let shuffle = shuffle_chart_ideal(&t, &c).unwrap();
        let x = ideal_of(&ring, &["x_2_1"]);
        let x2 = ideal_of(&ring, &["x_2_1^2"]);
        assert!(ideal_equal(&only, &x2, &cfg()).unwrap());
        assert!(!ideal_equal(&only, &x, &cfg()).unwrap());
        assert!(ideal_equal(&full, &x, &cfg()).unwrap());
        assert!(ideal_equal(&shuffle, &x, &cfg()).unwrap());
    }

    #[test]
    fn zero_operator_gives_zero_ideal() {
        let q = FieldSpec::Rationals;
        let t = JordanOperator::new(part(&[1, 1, 1]), q);
        for c in Chart::all(3, 2) {
            assert!(invariant_chart_ideal(&t, &c).unwrap().generators().is_empty());
            assert!(shuffle_chart_ideal(&t, &c).unwrap().generators().is_empty());
        }
    }

    #[test]
    fn stable_coordinate_plane_is_on_the_scheme() {
        // span(e1, e3) is invariant for type (2,2)
        let q = FieldSpec::Rationals;
        let t = JordanOperator::new(part(&[2, 2]), q);
        let c = Chart::new(4, IndexSet::new(vec![1, 3]).unwrap()).unwrap();
        let origin = vec![q.zero(); 4];
        for i in [invariant_chart_ideal(&t, &c).unwrap(), shuffle_chart_ideal(&t, &c).unwrap()] {
            for g in i.generators() {
                assert!(q.is_zero(&g.eval(&origin)), "{g}");
            }
        }
    }

    #[test]
    fn shuffle_and_invariant_charts_agree_on_two_planes() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
            for sigma in [part(&[2, 2]), part(&[3, 1])] {
                let t = JordanOperator::new(sigma.clone(), field);
                for c in Chart::all(4, 2) {
                    let a = invariant_chart_ideal(&t, &c).unwrap();
                    let b = shuffle_chart_ideal(&t, &c).unwrap();
                    assert!(ideal_equal(&a, &b, &cfg()).unwrap(), "{sigma} {c} over {field}");
                }
            }
        }
    }

    #[test]
    fn restricted_power_vanishes_on_chart() {
        // entries of B^e lie in the chart ideal, for T of type (2,2)
        let q = FieldSpec::Rationals;
        let t = JordanOperator::new(part(&[2, 2]), q);
        for c in Chart::all(4, 2) {
            let i = invariant_chart_ideal(&t, &c).unwrap();
            let (_, _, b) = restricted_operator(&t, &c, i.ring()).unwrap();
            let sq = Ideal::new(i.ring(), b.pow(2).entries().to_vec()).unwrap();
            assert!(ideal_contains(&i, &sq, &cfg()).unwrap(), "{c}");
        }
    }

    #[test]
    fn vee_examples() {
        let q = FieldSpec::Rationals;
        let spec = NilpotentSchemeSpec::new(1, 1).unwrap();
        assert!(vee_scheme_ideal(spec, &JordanOperator::rectangular(2, 1, q)).is_err());

        let spec = NilpotentSchemeSpec::new(2, 2).unwrap();
        let t = JordanOperator::rectangular(2, 2, q);
        let i = vee_scheme_ideal(spec, &t).unwrap();
        assert_eq!(i.ring().nvars(), 4 + 8);
        let a = jordan_matrix(&part(&[2]), q);
        let psi = surjectivity_witness(2, 2, &part(&[2]), q).unwrap();
        let mut point: Vec<Coeff> = a.entries().to_vec();
        point.extend(psi.entries().iter().cloned());
        for g in i.generators() {
            assert!(q.is_zero(&g.eval(&point)), "{g}");
        }
        // at A = 0 the intertwining part reads T Ψ = 0
        let mut zero_a = vec![q.zero(); 4];
        zero_a.extend(FieldMatrix::zeros(q, 4, 2).entries().iter().cloned());
        let jac = Jacobian::new(&i);
        assert!(jac.tangent_dim(&zero_a).is_ok());
    }

    #[test]
    fn phi_examples() {
        let q = FieldSpec::Rationals;
        let t = jordan_matrix(&part(&[2, 2]), q);
        let chain = FieldMatrix::from_i64(q, &[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]);
        assert_eq!(phi(&t, &chain).unwrap(), jordan_matrix(&part(&[2]), q));
        let kernel = FieldMatrix::from_i64(q, &[vec![1], vec![0], vec![0], vec![0]]);
        assert_eq!(phi(&t, &kernel).unwrap(), FieldMatrix::zeros(q, 1, 1));
        let bad = FieldMatrix::from_i64(q, &[vec![0], vec![1], vec![0], vec![0]]);
        assert_eq!(phi(&t, &bad), Err(SchemeError::NotInvariant));
        let flat = FieldMatrix::from_i64(q, &[vec![1, 1], vec![0, 0], vec![0, 0], vec![0, 0]]);
        assert!(matches!(phi(&t, &flat), Err(SchemeError::RankDeficient { rank: 1, expected: 2 })));

        let big = jordan_matrix(&Partition::rectangle(2, 5), q);
        let psi = surjectivity_witness(5, 2, &part(&[2, 2, 1]), q).unwrap();
        assert_eq!(jordan_type(&phi(&big, &psi).unwrap()).unwrap(), part(&[2, 2, 1]));
    }

    #[test]
    fn phi_is_conjugation_equivariant() {
        use rand::SeedableRng;
        let f = FieldSpec::Prime(5);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let t = jordan_matrix(&Partition::rectangle(3, 3), f);
        let psi = surjectivity_witness(3, 3, &part(&[2, 1]), f).unwrap();
        let b = phi(&t, &psi).unwrap();
        for _ in 0..10 {
            let g = FieldMatrix::random_invertible(f, 3, &mut rng);
            let lhs = phi(&t, &psi.mul(&g)).unwrap();
            assert_eq!(lhs, g.inverse().unwrap().mul(&b).mul(&g));
        }
    }

    #[test]
    fn tangent_examples() {
        let q = FieldSpec::Rationals;
        let i = nilpotent_scheme_ideal(NilpotentSchemeSpec::new(2, 2).unwrap(), q).unwrap();
        let j2 = jordan_matrix(&part(&[2]), q);
        assert_eq!(tangent_dim(&i, j2.entries()).unwrap(), 2);
        assert_eq!(tangent_dim(&i, &vec![q.zero(); 4]).unwrap(), 3);
        let ident = FieldMatrix::identity(q, 2);
        assert!(matches!(tangent_dim(&i, ident.entries()), Err(SchemeError::NotOnScheme(_))));
        let empty = Ideal::zero(&Ring::new(["u", "v", "w"], q));
        assert_eq!(tangent_dim(&empty, &[q.one(), q.zero(), q.one()]).unwrap(), 3);
    }

    #[test]
    fn intertwiner_nullity_matches_fiber() {
        let f = FieldSpec::Prime(5);
        let t = jordan_matrix(&Partition::rectangle(2, 2), f);
        for sigma in [part(&[2]), part(&[1, 1])] {
            let a = jordan_matrix(&sigma, f);
            assert_eq!(intertwiner_system(&t, &a).nullity(), 4);
        }
    }
}
