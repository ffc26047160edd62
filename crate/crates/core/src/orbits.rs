//! Partitions, dominance order and nilpotent orbit data.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fieldpoly::{FieldMatrix, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions of different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("no witness: largest part {part} exceeds nilpotency bound {e}")]
    PartTooLarge { part: usize, e: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, OrbitError> {
        if parts.contains(&0) {
            return Err(OrbitError::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(OrbitError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// `(part^count)`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        assert!(part > 0);
        Partition(vec![part; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let m = self.largest();
        Partition((1..=m).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = OrbitError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = OrbitError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| OrbitError::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `(e^c, f)` with `n = c*e + f`, `0 <= f < e`; the largest Jordan type
/// allowed by `A^e = 0`.
pub fn max_partition(n: usize, e: usize) -> Result<Partition, OrbitError> {
    if e == 0 || e > n {
        return Err(OrbitError::InvalidParameters(format!("need 1 <= e <= n, got n={n}, e={e}")));
    }
    let (c, f) = (n / e, n % e);
    let mut parts = vec![e; c];
    if f > 0 {
        parts.push(f);
    }
    Ok(Partition(parts))
}

/// Dominance order: every partial sum of `a` is at most that of `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool, OrbitError> {
    if a.size() != b.size() {
        return Err(OrbitError::SizeMismatch(a.size(), b.size()));
    }
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for k in 0..len {
        sa += a.0.get(k).copied().unwrap_or(0);
        sb += b.0.get(k).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Block-diagonal upper Jordan matrix of type `sigma`: within each block,
/// `e_{k+1} -> e_k` and the first basis vector of the block is killed.
pub fn jordan_matrix(sigma: &Partition, field: FieldSpec) -> FieldMatrix {
    let n = sigma.size();
    let mut m = FieldMatrix::zeros(field, n, n);
    let mut start = 0;
    for &p in sigma.parts() {
        for k in 0..p - 1 {
            m.set(start + k, start + k + 1, field.one());
        }
        start += p;
    }
    m
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
pub fn jordan_type(a: &FieldMatrix) -> Result<Partition, OrbitError> {
    if !a.is_square() {
        return Err(OrbitError::InvalidParameters("matrix is not square".into()));
    }
    let n = a.rows();
    let mut ranks = vec![n];
    let mut power = FieldMatrix::identity(a.field(), n);
    for _ in 0..n {
        power = power.mul(a);
        ranks.push(power.rank());
        if *ranks.last().unwrap() == 0 {
            break;
        }
    }
    if *ranks.last().unwrap() != 0 {
        return Err(OrbitError::NotNilpotent);
    }
    let dual: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).filter(|&d| d > 0).collect();
    Ok(Partition(dual).conjugate())
}

/// Dimension of the nilpotent orbit of type `sigma`: `n^2 - sum_j (sigma'_j)^2`.
pub fn orbit_dim(sigma: &Partition) -> usize {
    let n = sigma.size();
    n * n - sigma.conjugate().parts().iter().map(|c| c * c).sum::<usize>()
}

/// Ψ of size `(n*e) x n` with `T Ψ = Ψ J_sigma` for `T = J_(e^n)`: block `i`
/// of `T` contributes the chain `f_1, ..., f_{sigma_i}` of its basis.
pub fn surjectivity_witness(
    n: usize,
    e: usize,
    sigma: &Partition,
    field: FieldSpec,
) -> Result<FieldMatrix, OrbitError> {
    if sigma.size() != n {
        return Err(OrbitError::SizeMismatch(sigma.size(), n));
    }
    if e == 0 {
        return Err(OrbitError::InvalidParameters("e must be positive".into()));
    }
    if sigma.largest() > e {
        return Err(OrbitError::PartTooLarge { part: sigma.largest(), e });
    }
    let mut psi = FieldMatrix::zeros(field, n * e, n);
    let mut col = 0;
    for (block, &part) in sigma.parts().iter().enumerate() {
        for k in 0..part {
            psi.set(block * e + k, col + k, field.one());
        }
        col += part;
    }
    Ok(psi)
}

/// `g J_sigma g^-1` for a uniformly chosen `sigma ⊢ n` with largest part at
/// most `max_part` and a random invertible `g`.
pub fn random_nilpotent<R: rand::Rng + ?Sized>(
    field: FieldSpec,
    n: usize,
    max_part: usize,
    rng: &mut R,
) -> (Partition, FieldMatrix) {
    let choices: Vec<Partition> = partitions(n).into_iter().filter(|p| p.largest() <= max_part).collect();
    let sigma = choices[rng.gen_range(0..choices.len())].clone();
    let g = FieldMatrix::random_invertible(field, n, rng);
    let a = g.mul(&jordan_matrix(&sigma, field)).mul(&g.inverse().expect("invertible"));
    (sigma, a)
}

/// Partial order helper: compare by dominance, `None` when incomparable.
pub fn dominance_cmp(a: &Partition, b: &Partition) -> Result<Option<Ordering>, OrbitError> {
    let le = dominance_leq(a, b)?;
    let ge = dominance_leq(b, a)?;
    Ok(match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn max_partition_examples() {
        assert_eq!(max_partition(7, 3).unwrap(), p(&[3, 3, 1]));
        assert_eq!(max_partition(4, 2).unwrap(), p(&[2, 2]));
        assert_eq!(max_partition(5, 5).unwrap(), p(&[5]));
        assert!(max_partition(3, 4).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2, 1]), &p(&[3, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 1]), &p(&[2, 1])).unwrap());
        assert!(dominance_leq(&p(&[2]), &p(&[1, 1, 1])).is_err());
        assert_eq!(dominance_cmp(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap(), None);
    }

    #[test]
    fn partition_validation_and_text() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 3, 1]).to_string(), "[3,3,1]");
        assert_eq!("[3,3,1]".parse::<Partition>().unwrap(), p(&[3, 3, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(4)[0], p(&[4]));
        assert_eq!(partitions(4)[4], p(&[1, 1, 1, 1]));
    }

    #[test]
    fn jordan_type_examples() {
        let f = FieldSpec::Rationals;
        assert_eq!(jordan_type(&jordan_matrix(&p(&[2, 1]), f)).unwrap(), p(&[2, 1]));
        assert_eq!(jordan_type(&FieldMatrix::zeros(f, 3, 3)).unwrap(), p(&[1, 1, 1]));
        assert_eq!(jordan_type(&FieldMatrix::identity(f, 2)), Err(OrbitError::NotNilpotent));
        let fp = FieldSpec::Prime(7);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for sigma in partitions(5) {
            let g = FieldMatrix::random_invertible(fp, 5, &mut rng);
            let a = g.mul(&jordan_matrix(&sigma, fp)).mul(&g.inverse().unwrap());
            assert_eq!(jordan_type(&a).unwrap(), sigma);
        }
    }

    #[test]
    fn orbit_dim_examples() {
        assert_eq!(orbit_dim(&p(&[1, 1, 1])), 0);
        assert_eq!(orbit_dim(&p(&[2, 1])), 4);
        assert_eq!(orbit_dim(&p(&[4])), 12);
    }

    #[test]
    fn witness_examples() {
        let f = FieldSpec::Rationals;
        let psi = surjectivity_witness(2, 2, &p(&[2]), f).unwrap();
        assert_eq!(psi, FieldMatrix::from_i64(f, &[vec![1, 0], vec![0, 1], vec![0, 0], vec![0, 0]]));
        let psi = surjectivity_witness(2, 2, &p(&[1, 1]), f).unwrap();
        assert_eq!(psi, FieldMatrix::from_i64(f, &[vec![1, 0], vec![0, 0], vec![0, 1], vec![0, 0]]));
        assert!(matches!(surjectivity_witness(3, 2, &p(&[3]), f), Err(OrbitError::PartTooLarge { part: 3, e: 2 })));
    }
}
