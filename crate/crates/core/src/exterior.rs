//! Wedge powers, shuffle operators and Plücker coordinates.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::fieldpoly::{Coeff, FieldMatrix, FieldSpec, PolyMatrix, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("wedge degree {n} out of range 1..={ambient}")]
    DegreeOutOfRange { n: usize, ambient: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operator is not nilpotent")]
    NotNilpotent,
    #[error("invalid index set {0:?}")]
    InvalidIndexSet(Vec<usize>),
}

/// Strictly increasing 1-based indices; labels `e_J` and `p_J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self, ExteriorError> {
        if indices.first() == Some(&0) || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ExteriorError::InvalidIndexSet(indices));
        }
        Ok(IndexSet(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// 0-based positions, for indexing matrices.
    pub fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i - 1).collect()
    }

    /// Rank in the combinatorial number system: `sum_k C(j_k - 1, k)`.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().map(|(k, &j)| binomial(j - 1, k + 1)).sum()
    }

    /// Inverse of [`IndexSet::rank`] for sets of size `n`.
    pub fn unrank(mut rank: usize, n: usize) -> IndexSet {
        let mut out = vec![0; n];
        for k in (1..=n).rev() {
            let mut c = k - 1;
            while binomial(c + 1, k) <= rank {
                c += 1;
            }
            rank -= binomial(c, k);
            out[k - 1] = c + 1;
        }
        IndexSet(out)
    }

    /// All `n`-subsets of `{1..ambient}`, ordered by rank.
    pub fn all(ambient: usize, n: usize) -> Vec<IndexSet> {
        (0..binomial(ambient, n)).map(|r| IndexSet::unrank(r, n)).collect()
    }

    /// Plücker variable name: `p_13`, or `p_1_10` once indices exceed 9.
    pub fn plucker_name(&self, ambient: usize) -> String {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        if ambient > 9 {
            format!("p_{}", parts.join("_"))
        } else {
            format!("p_{}", parts.concat())
        }
    }

    /// Sort an arbitrary index list; `None` on a repeated index, otherwise
    /// the set and the sign of the sorting permutation.
    pub fn sorted_with_sign(indices: &[usize]) -> Option<(IndexSet, i64)> {
        let mut v = indices.to_vec();
        let mut sign = 1;
        for i in 1..v.len() {
            let mut k = i;
            while k > 0 && v[k - 1] > v[k] {
                v.swap(k - 1, k);
                sign = -sign;
                k -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) || v.first() == Some(&0) {
            return None;
        }
        Some((IndexSet(v), sign))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Matrix of `∧^n M` in the basis `e_J`, rows and columns ordered by rank.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeMatrix {
    degree: usize,
    basis: Vec<IndexSet>,
    matrix: PolyMatrix,
}

impl WedgeMatrix {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> &[IndexSet] {
        &self.basis
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn entry(&self, row: &IndexSet, col: &IndexSet) -> &Polynomial {
        self.matrix.get(row.rank(), col.rank())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Entries as field constants; only meaningful over a variable-free ring
    /// or after evaluation.
    pub fn to_field(&self) -> FieldMatrix {
        let ring = self.matrix.ring();
        self.matrix.eval(&vec![ring.field().zero(); ring.nvars()])
    }
}

fn check_degree(ambient: usize, n: usize) -> Result<(), ExteriorError> {
    if n == 0 || n > ambient {
        return Err(ExteriorError::DegreeOutOfRange { n, ambient });
    }
    Ok(())
}

/// Compound matrix of `n`-minors.
pub fn wedge_matrix(m: &PolyMatrix, n: usize) -> Result<WedgeMatrix, ExteriorError> {
    if !m.is_square() {
        return Err(ExteriorError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    check_degree(m.rows(), n)?;
    let basis = IndexSet::all(m.rows(), n);
    let idx: Vec<Vec<usize>> = basis.iter().map(IndexSet::zero_based).collect();
    let size = basis.len();
    let matrix = PolyMatrix::from_fn(m.ring(), size, size, |r, c| m.submatrix(&idx[r], &idx[c]).det());
    Ok(WedgeMatrix { degree: n, basis, matrix })
}

/// `∧^n` of a field matrix, over the variable-free ring.
pub fn wedge_field_matrix(m: &FieldMatrix, n: usize) -> Result<FieldMatrix, ExteriorError> {
    let ring = Ring::new(Vec::<String>::new(), m.field());
    Ok(wedge_matrix(&PolyMatrix::from_field(&ring, m), n)?.to_field())
}

fn check_nilpotent(t: &FieldMatrix) -> Result<(), ExteriorError> {
    if !t.is_square() {
        return Err(ExteriorError::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    if !t.pow(t.rows() as u32).is_zero() {
        return Err(ExteriorError::NotNilpotent);
    }
    Ok(())
}

/// `∧^n(I + zT)` over `k[z]`.
pub fn wedge_of_unipotent(t: &FieldMatrix, n: usize) -> Result<WedgeMatrix, ExteriorError> {
    if !t.is_square() {
        return Err(ExteriorError::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    let ring = Ring::new(["z"], t.field());
    let z = Polynomial::var(&ring, 0);
    let m = PolyMatrix::identity(&ring, t.rows()).add(&PolyMatrix::from_field(&ring, t).scale(&z));
    wedge_matrix(&m, n)
}

fn z_coefficient(w: &WedgeMatrix, d: usize) -> WedgeMatrix {
    let constants = Ring::new(Vec::<String>::new(), w.matrix.ring().field());
    let size = w.basis.len();
    let matrix = PolyMatrix::from_fn(&constants, size, size, |r, c| {
        let coeff =
            w.matrix.get(r, c).terms().iter().find(|(m, _)| m.exponent(0) as usize == d).map(|(_, c)| c.clone());
        match coeff {
            Some(c) => Polynomial::constant(&constants, c),
            None => Polynomial::zero(&constants),
        }
    });
    WedgeMatrix { degree: w.degree, basis: w.basis.clone(), matrix }
}

/// Coefficient of `z^d` in `∧^n(I + zT)`; zero for `d > n`.
pub fn shuffle_operator(t: &FieldMatrix, n: usize, d: usize) -> Result<WedgeMatrix, ExteriorError> {
    check_nilpotent(t)?;
    check_degree(t.rows(), n)?;
    Ok(z_coefficient(&wedge_of_unipotent(t, n)?, d))
}

/// `sh_1, ..., sh_n` from a single wedge computation.
pub fn shuffle_operators(t: &FieldMatrix, n: usize) -> Result<Vec<WedgeMatrix>, ExteriorError> {
    check_nilpotent(t)?;
    check_degree(t.rows(), n)?;
    let w = wedge_of_unipotent(t, n)?;
    Ok((1..=n).map(|d| z_coefficient(&w, d)).collect())
}

/// `sh_d` computed without determinants: for each `e_K`, apply `T` to `d`
/// of the wedge factors, expand every factor in the standard basis and
/// sort each resulting wedge with its sign.
pub fn shuffle_by_expansion(t: &FieldMatrix, n: usize, d: usize) -> Result<FieldMatrix, ExteriorError> {
    check_nilpotent(t)?;
    check_degree(t.rows(), n)?;
    let f = t.field();
    let basis = IndexSet::all(t.rows(), n);
    let mut out = FieldMatrix::zeros(f, basis.len(), basis.len());
    for (c, k) in basis.iter().enumerate() {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != d {
                continue;
            }
            // factor choices: list of (index, coefficient) per position
            let choices: Vec<Vec<(usize, Coeff)>> = k
                .indices()
                .iter()
                .enumerate()
                .map(|(pos, &kk)| {
                    if mask & (1 << pos) != 0 {
                        (0..t.rows())
                            .filter(|&i| !f.is_zero(t.get(i, kk - 1)))
                            .map(|i| (i + 1, t.get(i, kk - 1).clone()))
                            .collect()
                    } else {
                        vec![(kk, f.one())]
                    }
                })
                .collect();
            let mut stack = vec![(Vec::new(), f.one())];
            for opts in &choices {
                let mut next = Vec::new();
                for (idx, coeff) in &stack {
                    for (i, a) in opts {
                        let mut v: Vec<usize> = idx.clone();
                        v.push(*i);
                        next.push((v, f.mul(coeff, a)));
                    }
                }
                stack = next;
            }
            for (idx, coeff) in stack {
                if let Some((j, sign)) = IndexSet::sorted_with_sign(&idx) {
                    let r = j.rank();
                    let val = f.add(out.get(r, c), &f.mul(&coeff, &f.from_i64(sign)));
                    out.set(r, c, val);
                }
            }
        }
    }
    Ok(out)
}

/// Polynomial ring in the Plücker coordinates `p_J` of `Gr(n, k^ambient)`,
/// variables ordered by rank.
pub fn plucker_ring(ambient: usize, n: usize, field: FieldSpec) -> Arc<Ring> {
    Ring::new(IndexSet::all(ambient, n).iter().map(|j| j.plucker_name(ambient)), field)
}

/// Linear forms `sum_K sh_d(J, K) p_K` over all `d >= 1` and rows `J`,
/// nonzero and without repeats, in the ring of [`plucker_ring`].
pub fn shuffle_linear_forms(t: &FieldMatrix, n: usize) -> Result<(Arc<Ring>, Vec<Polynomial>), ExteriorError> {
    let ops = shuffle_operators(t, n)?;
    let ring = plucker_ring(t.rows(), n, t.field());
    let mut seen = BTreeSet::new();
    let mut forms = Vec::new();
    for sh in &ops {
        let m = sh.to_field();
        for r in 0..m.rows() {
            let form = (0..m.cols())
                .fold(Polynomial::zero(&ring), |acc, c| &acc + &Polynomial::var(&ring, c).scale(m.get(r, c)));
            if !form.is_zero() && seen.insert(form.to_string()) {
                forms.push(form);
            }
        }
    }
    Ok((ring, forms))
}

/// Grassmann–Plücker exchange relations
/// `sum_k (-1)^k p_{I ∪ j_k} p_{J \ j_k}` for `|I| = n-1`, `|J| = n+1`,
/// made monic and deduplicated.
pub fn plucker_relations(
    ambient: usize,
    n: usize,
    field: FieldSpec,
) -> Result<(Arc<Ring>, Vec<Polynomial>), ExteriorError> {
    check_degree(ambient, n)?;
    let ring = plucker_ring(ambient, n, field);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if n == ambient {
        return Ok((ring, out));
    }
    let coord = |indices: &[usize]| -> Polynomial {
        match IndexSet::sorted_with_sign(indices) {
            Some((set, sign)) => Polynomial::var(&ring, set.rank()).scale(&field.from_i64(sign)),
            None => Polynomial::zero(&ring),
        }
    };
    let smaller = if n == 1 { vec![IndexSet(Vec::new())] } else { IndexSet::all(ambient, n - 1) };
    for i in &smaller {
        for j in IndexSet::all(ambient, n + 1) {
            let mut rel = Polynomial::zero(&ring);
            for (k, &jk) in j.indices().iter().enumerate() {
                let mut left = i.indices().to_vec();
                left.push(jk);
                let right: Vec<usize> = j.indices().iter().copied().filter(|&x| x != jk).collect();
                let term = &coord(&left) * &coord(&right);
                rel = if k % 2 == 0 { &rel + &term } else { &rel - &term };
            }
            if !rel.is_zero() {
                let rel = rel.monic();
                if seen.insert(rel.to_string()) {
                    out.push(rel);
                }
            }
        }
    }
    Ok((ring, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{jordan_matrix, partitions, Partition};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ranking_round_trips() {
        for ambient in 1..=7 {
            for n in 1..=ambient {
                let all = IndexSet::all(ambient, n);
                assert_eq!(all.len(), binomial(ambient, n));
                for (r, s) in all.iter().enumerate() {
                    assert_eq!(s.rank(), r);
                    assert!(s.indices().iter().all(|&i| (1..=ambient).contains(&i)));
                }
            }
        }
        assert_eq!(set(&[1, 3]).plucker_name(4), "p_13");
        assert_eq!(set(&[1, 10]).plucker_name(10), "p_1_10");
        assert!(IndexSet::new(vec![2, 1]).is_err());
        assert_eq!(IndexSet::sorted_with_sign(&[3, 1]), Some((set(&[1, 3]), -1)));
        assert_eq!(IndexSet::sorted_with_sign(&[2, 2]), None);
    }

    #[test]
    fn wedge_extremes() {
        let f = FieldSpec::Rationals;
        let ring = Ring::new(crate::groebner::matrix_variable_names("m", 3, 3), f);
        let m = PolyMatrix::of_variables(&ring, "m", 3, 3).unwrap();
        assert_eq!(wedge_matrix(&m, 1).unwrap().matrix(), &m);
        let top = wedge_matrix(&m, 3).unwrap();
        assert_eq!(top.matrix().rows(), 1);
        assert_eq!(top.matrix().get(0, 0), &m.det());
        assert!(wedge_matrix(&m, 4).is_err());
        assert!(wedge_matrix(&m, 0).is_err());
    }

    #[test]
    fn wedge_is_multiplicative_over_f5() {
        let f = FieldSpec::Prime(5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let a = FieldMatrix::random(f, 4, 4, &mut rng);
            let b = FieldMatrix::random(f, 4, 4, &mut rng);
            let lhs = wedge_field_matrix(&a.mul(&b), 2).unwrap();
            let rhs = wedge_field_matrix(&a, 2).unwrap().mul(&wedge_field_matrix(&b, 2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shuffle_examples() {
        let f = FieldSpec::Rationals;
        let t = jordan_matrix(&Partition::new(vec![2, 2]).unwrap(), f);
        assert_eq!(shuffle_operator(&t, 1, 1).unwrap().to_field(), t);

        let sh1 = shuffle_operator(&t, 2, 1).unwrap().to_field();
        let sh2 = shuffle_operator(&t, 2, 2).unwrap().to_field();
        let col = set(&[2, 4]).rank();
        for j in IndexSet::all(4, 2) {
            let want1 = if j == set(&[1, 4]) || j == set(&[2, 3]) { 1 } else { 0 };
            let want2 = if j == set(&[1, 3]) { 1 } else { 0 };
            assert_eq!(sh1.get(j.rank(), col), &f.from_i64(want1), "sh1 at {j}");
            assert_eq!(sh2.get(j.rank(), col), &f.from_i64(want2), "sh2 at {j}");
        }
        assert!(shuffle_operator(&t, 2, 3).unwrap().is_zero());

        let j2 = jordan_matrix(&Partition::new(vec![2]).unwrap(), f);
        for d in 1..=3 {
            assert!(shuffle_operator(&j2, 2, d).unwrap().is_zero());
        }
        assert_eq!(shuffle_operator(&FieldMatrix::identity(f, 2), 1, 1), Err(ExteriorError::NotNilpotent));
    }

    #[test]
    fn shuffle_matches_multilinear_expansion() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
            for ambient in 1..=5 {
                for sigma in partitions(ambient) {
                    let t = jordan_matrix(&sigma, field);
                    for n in 1..=ambient {
                        let ops = shuffle_operators(&t, n).unwrap();
                        for (d, sh) in ops.iter().enumerate() {
                            assert_eq!(
                                sh.to_field(),
                                shuffle_by_expansion(&t, n, d + 1).unwrap(),
                                "{sigma} n={n} d={}",
                                d + 1
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linear_form_examples() {
        let f = FieldSpec::Rationals;
        let j2 = jordan_matrix(&Partition::new(vec![2]).unwrap(), f);
        let (_, forms) = shuffle_linear_forms(&j2, 1).unwrap();
        assert_eq!(forms.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["p_2"]);

        let (_, forms) = shuffle_linear_forms(&FieldMatrix::zeros(f, 3, 3), 2).unwrap();
        assert!(forms.is_empty());

        let t = jordan_matrix(&Partition::new(vec![2, 2]).unwrap(), f);
        let (ring, forms) = shuffle_linear_forms(&t, 2).unwrap();
        // sh_1 sends e_24 to e_14 + e_23 and e_14, e_23 to e_13; sh_2 sends e_24 to e_13
        let expected: Vec<Polynomial> =
            ["p_14 + p_23", "p_24"].iter().map(|s| crate::fieldpoly::parse_poly(s, &ring).unwrap()).collect();
        assert_eq!(forms, expected);
    }

    #[test]
    fn plucker_examples() {
        let f = FieldSpec::Rationals;
        let (ring, rels) = plucker_relations(4, 2, f).unwrap();
        assert_eq!(rels.len(), 1);
        let expected = crate::fieldpoly::parse_poly("p_12*p_34 - p_13*p_24 + p_14*p_23", &ring).unwrap();
        assert!(rels[0] == expected || rels[0] == -&expected);
        assert!(plucker_relations(5, 1, f).unwrap().1.is_empty());
    }

    #[test]
    fn plucker_relations_vanish_on_minors() {
        let f = FieldSpec::Prime(7);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (ambient, n) in [(4, 2), (5, 2), (5, 3), (6, 3)] {
            let (ring, rels) = plucker_relations(ambient, n, f).unwrap();
            let m = FieldMatrix::random(f, ambient, n, &mut rng);
            let cols: Vec<usize> = (0..n).collect();
            let point: Vec<Coeff> =
                IndexSet::all(ambient, n).iter().map(|j| m.submatrix(&j.zero_based(), &cols).det()).collect();
            assert_eq!(point.len(), ring.nvars());
            for r in &rels {
                assert!(f.is_zero(&r.eval(&point)), "{r}");
            }
        }
    }

    fn permutation_matrix(field: FieldSpec, perm: &[usize]) -> FieldMatrix {
        FieldMatrix::from_fn(
            field,
            perm.len(),
            perm.len(),
            |i, j| if perm[j] == i { field.one() } else { field.zero() },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn shuffle_equivariance(perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), which in 0usize..7, n in 1usize..=5) {
            let f = FieldSpec::Prime(3);
            let sigma = &partitions(5)[which];
            let t = jordan_matrix(sigma, f);
            let p = permutation_matrix(f, &perm);
            let pinv = p.inverse().unwrap();
            let conj = p.mul(&t).mul(&pinv);
            let wp = wedge_field_matrix(&p, n).unwrap();
            let wpinv = wedge_field_matrix(&pinv, n).unwrap();
            let a = shuffle_operators(&conj, n).unwrap();
            let b = shuffle_operators(&t, n).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert_eq!(x.to_field(), wp.mul(&y.to_field()).mul(&wpinv));
            }
        }

        #[test]
        fn unipotent_wedge_reassembles(which in 0usize..11, n in 1usize..=6, p in prop_oneof![Just(0u64), Just(3u64)]) {
            let f = if p == 0 { FieldSpec::Rationals } else { FieldSpec::Prime(p) };
            let sigma = &partitions(6)[which];
            let t = jordan_matrix(sigma, f);
            let w = wedge_of_unipotent(&t, n).unwrap();
            let ring = w.matrix().ring().clone();
            let z = Polynomial::var(&ring, 0);
            let mut sum = PolyMatrix::identity(&ring, w.basis().len());
            for (d, sh) in shuffle_operators(&t, n).unwrap().iter().enumerate() {
                let term = PolyMatrix::from_field(&ring, &sh.to_field()).scale(&z.pow(d as u32 + 1));
                sum = sum.add(&term);
            }
            prop_assert_eq!(&sum, w.matrix());
            for d in n + 1..=n + 2 {
                prop_assert!(shuffle_operator(&t, n, d).unwrap().is_zero());
            }
        }
    }
}
