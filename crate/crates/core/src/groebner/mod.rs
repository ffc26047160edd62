//! Gröbner bases and the ideal operations built on them: membership,
//! equality, elimination, saturation, Krull dimension and a
//! zero-dimensional radical test.

mod buchberger;

use std::fmt;
use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fieldpoly::{
    format_ideal_file, parse_ideal_file, squarefree_part, FieldSpec, Monomial, MonomialOrder, PolyError, PolyMatrix,
    Polynomial, Ring, Squarefree,
};
use crate::orbits::{jordan_matrix, Partition};

use buchberger::{Buchberger, Deadline};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("Gröbner computation timed out after {elapsed_ms} ms")]
    Timeout { elapsed_ms: u64 },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl GroebnerError {
    pub fn is_timeout(&self) -> bool {
        matches!(self, GroebnerError::Timeout { .. })
    }
}

/// Per-call limits for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub timeout: Option<Duration>,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { timeout: Some(Duration::from_secs(600)) }
    }
}

impl GroebnerConfig {
    pub fn with_timeout(secs: u64) -> Self {
        GroebnerConfig { timeout: Some(Duration::from_secs(secs)) }
    }

    pub fn unlimited() -> Self {
        GroebnerConfig { timeout: None }
    }
}

/// A finite generating set of an ideal. Zero generators are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring().vars() != ring.vars() || g.field() != ring.field() {
                return Err(GroebnerError::RingMismatch(format!("generator {g} is not in the ideal's ring")));
            }
            if !g.is_zero() {
                gens.push(g.to_ring(ring)?);
            }
        }
        Ok(Ideal { ring: ring.clone(), generators: gens })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    /// Sum of two ideals in the same ring.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Same generators in a ring with the same number of variables, matched by position.
    pub fn relabel(&self, ring: &Arc<Ring>) -> Ideal {
        Ideal { ring: ring.clone(), generators: self.generators.iter().map(|g| g.relabel(ring)).collect() }
    }

    /// Move to a larger ring, matching variables by name.
    pub fn extend_to(&self, ring: &Arc<Ring>) -> Result<Ideal, GroebnerError> {
        let gens = self.generators.iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal { ring: ring.clone(), generators: gens })
    }

    pub fn parse(text: &str) -> Result<Ideal, GroebnerError> {
        let (ring, gens) = parse_ideal_file(text)?;
        Ideal::new(&ring, gens)
    }

    /// Render in the ideal file format.
    pub fn to_file_string(&self) -> String {
        format_ideal_file(&self.ring, &self.generators)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// A reduced Gröbner basis: monic, sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    /// Remainder of `p` on division by the basis (unique for a Gröbner basis).
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, GroebnerError> {
        let mut cur = p.to_ring(&self.ring)?;
        let field = self.ring.field();
        let mut rem = Vec::new();
        while let Some((m, c)) = cur.leading_term().cloned() {
            match self.basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m))) {
                Some(g) => {
                    let (lm, lc) = g.leading_term().expect("nonzero");
                    cur = cur.sub_term_multiple(&field.div(&c, lc), &lm.quotient_of(&m), g);
                }
                None => {
                    rem.push((m, c));
                    cur = cur.tail();
                }
            }
        }
        Ok(Polynomial::from_terms(&self.ring, rem))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Re-check the Buchberger criterion: every S-polynomial of the basis
    /// reduces to zero.
    pub fn verify_certificate(&self) -> Result<bool, GroebnerError> {
        let one = self.ring.field().one();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let (a, b) = (&self.basis[i], &self.basis[j]);
                let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
                let l = la.lcm(lb);
                let s = a.mul_term(&la.quotient_of(&l), &one).sub_term_multiple(&one, &lb.quotient_of(&l), b);
                if !self.normal_form(&s)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { ring: self.ring.clone(), generators: self.basis.clone() }
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_ideal(), f)
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn groebner_basis(
    ideal: &Ideal,
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let deadline = Deadline::new(config);
    groebner_with_deadline(ideal, order, &deadline)
}

fn groebner_with_deadline(
    ideal: &Ideal,
    order: &MonomialOrder,
    deadline: &Deadline,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = if ideal.ring.order() == order { ideal.ring.clone() } else { ideal.ring.reordered(order.clone()) };
    let gens: Vec<Polynomial> = ideal.generators.iter().map(|g| g.relabel(&ring)).collect();
    let basis = Buchberger::new(&ring, deadline).run(&gens)?;
    Ok(GroebnerBasis { ring, basis })
}

fn check_same_ring(a: &Ideal, b: &Ideal) -> Result<(), GroebnerError> {
    if a.ring.vars() != b.ring.vars() || a.ring.field() != b.ring.field() {
        return Err(GroebnerError::RingMismatch("ideals live in different rings".into()));
    }
    Ok(())
}

/// True iff the two ideals have the same reduced grevlex basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal, config: &GroebnerConfig) -> Result<bool, GroebnerError> {
    check_same_ring(a, b)?;
    let deadline = Deadline::new(config);
    let ga = groebner_with_deadline(a, &MonomialOrder::Grevlex, &deadline)?;
    let gb = groebner_with_deadline(b, &MonomialOrder::Grevlex, &deadline)?;
    Ok(ga.basis == gb.basis)
}

/// True iff every generator of `sub` lies in `sup`.
pub fn ideal_contains(sup: &Ideal, sub: &Ideal, config: &GroebnerConfig) -> Result<bool, GroebnerError> {
    check_same_ring(sup, sub)?;
    let gb = groebner_basis(sup, &MonomialOrder::Grevlex, config)?;
    for g in &sub.generators {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ideal ∩ k[remaining variables]` via a block elimination order. The
/// result lives in the ring of the remaining variables (grevlex) and its
/// generators form a reduced Gröbner basis there.
pub fn eliminate(ideal: &Ideal, drop_vars: &[&str], config: &GroebnerConfig) -> Result<Ideal, GroebnerError> {
    let ring = &ideal.ring;
    for v in drop_vars {
        if ring.var_index(v).is_none() {
            return Err(GroebnerError::Precondition(format!("{v} is not a ring variable")));
        }
    }
    let keep: Vec<String> = ring.vars().iter().filter(|v| !drop_vars.contains(&v.as_str())).cloned().collect();
    let mut vars: Vec<String> = drop_vars.iter().map(|s| s.to_string()).collect();
    vars.extend(keep.iter().cloned());
    let k = drop_vars.len();
    let elim_ring = Ring::with_order(vars, ring.field(), MonomialOrder::elimination(k));
    let gens = ideal.generators.iter().map(|g| g.to_ring(&elim_ring)).collect::<Result<Vec<_>, _>>()?;
    let gb = groebner_basis(&Ideal { ring: elim_ring.clone(), generators: gens }, elim_ring.order(), config)?;
    let out_ring = Ring::new(keep, ring.field());
    let mut out = Vec::new();
    for g in gb.basis {
        if g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)) {
            out.push(g.to_ring(&out_ring)?);
        }
    }
    Ok(Ideal { ring: out_ring, generators: out })
}

/// Saturation `ideal : h^∞`, by adjoining `y*h - 1` and eliminating `y`.
pub fn saturate(ideal: &Ideal, h: &Polynomial, config: &GroebnerConfig) -> Result<Ideal, GroebnerError> {
    let ring = &ideal.ring;
    let mut name = String::from("_sat");
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    let mut vars = ring.vars().to_vec();
    vars.push(name.clone());
    let ext = Ring::new(vars, ring.field());
    let y = Polynomial::var(&ext, ring.nvars());
    let mut gens = ideal.generators.iter().map(|g| g.to_ring(&ext)).collect::<Result<Vec<_>, _>>()?;
    gens.push(&(&y * &h.to_ring(&ext)?) - &Polynomial::one(&ext));
    let out = eliminate(&Ideal { ring: ext, generators: gens }, &[name.as_str()], config)?;
    Ok(out.relabel(&Ring::new(ring.vars().to_vec(), ring.field())))
}

/// Variable names `prefix_i_j`, 1-based, row-major.
pub fn matrix_variable_names(prefix: &str, rows: usize, cols: usize) -> Vec<String> {
    (1..=rows).flat_map(|i| (1..=cols).map(move |j| format!("{prefix}_{i}_{j}"))).collect()
}

/// Prime ideal of the closure of the conjugation orbit of `J_sigma`, in
/// variables `x_i_j`: the elimination of `g` and `y` from
/// `{X*g - g*J_sigma, y*det(g) - 1}`.
pub fn orbit_closure_ideal(
    sigma: &Partition,
    field: FieldSpec,
    config: &GroebnerConfig,
) -> Result<Ideal, GroebnerError> {
    let n = sigma.size();
    let g_names = matrix_variable_names("g", n, n);
    let x_names = matrix_variable_names("x", n, n);
    let mut vars = g_names.clone();
    vars.push("y".to_string());
    vars.extend(x_names);
    let ring = Ring::new(vars, field);
    let x = PolyMatrix::of_variables(&ring, "x", n, n)?;
    let g = PolyMatrix::of_variables(&ring, "g", n, n)?;
    let j = PolyMatrix::from_field(&ring, &jordan_matrix(sigma, field));
    let y = Polynomial::var(&ring, n * n);
    let mut gens: Vec<Polynomial> = x.mul(&g).sub(&g.mul(&j)).entries().to_vec();
    gens.push(&(&y * &g.det()) - &Polynomial::one(&ring));
    let mut drop: Vec<&str> = g_names.iter().map(String::as_str).collect();
    drop.push("y");
    eliminate(&Ideal::new(&ring, gens)?, &drop, config)
}

/// Krull dimension from the leading-term ideal: the size of a largest set
/// of variables containing the support of no leading monomial. `None` for
/// the unit ideal.
pub fn dimension(ideal: &Ideal, config: &GroebnerConfig) -> Result<Option<usize>, GroebnerError> {
    let gb = groebner_basis(ideal, &MonomialOrder::Grevlex, config)?;
    if gb.is_unit() {
        return Ok(None);
    }
    let supports: Vec<u128> =
        gb.leading_monomials().iter().map(|m| m.support().fold(0u128, |acc, v| acc | 1 << v)).collect();
    let n = ideal.ring.nvars();
    if n > 128 {
        return Err(GroebnerError::Precondition("dimension supports at most 128 variables".into()));
    }
    Ok(Some(max_independent(&supports, n)))
}

fn max_independent(supports: &[u128], n: usize) -> usize {
    fn go(var: usize, n: usize, chosen: u128, size: usize, supports: &[u128], best: &mut usize) {
        if size + (n - var) <= *best {
            return;
        }
        if var == n {
            *best = size;
            return;
        }
        let with = chosen | 1 << var;
        if supports.iter().all(|&s| s & !with != 0) {
            go(var + 1, n, with, size + 1, supports, best);
        }
        go(var + 1, n, chosen, size, supports, best);
    }
    let mut best = 0;
    go(0, n, 0, 0, supports, &mut best);
    best
}

/// Outcome of the zero-dimensional radical test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalVerdict {
    Radical,
    NotRadical,
    Inconclusive,
}

/// Seidenberg's criterion: a zero-dimensional ideal is radical iff the
/// monic generator of each `I ∩ k[x_i]` is squarefree.
pub fn zero_dim_radical_test(ideal: &Ideal, config: &GroebnerConfig) -> Result<RadicalVerdict, GroebnerError> {
    match dimension(ideal, config)? {
        Some(0) => {}
        Some(d) => return Err(GroebnerError::Precondition(format!("ideal has dimension {d}, not 0"))),
        None => return Err(GroebnerError::Precondition("unit ideal".into())),
    }
    let vars = ideal.ring.vars().to_vec();
    let mut verdict = RadicalVerdict::Radical;
    for v in &vars {
        let others: Vec<&str> = vars.iter().filter(|w| *w != v).map(String::as_str).collect();
        let elim = eliminate(ideal, &others, config)?;
        let f = match elim.generators() {
            [f] => f.clone(),
            _ => {
                return Err(GroebnerError::Precondition(format!(
                    "eliminant in {v} is not principal (dimension must be 0)"
                )))
            }
        };
        match squarefree_part(&f)? {
            Squarefree::Part(q) if q == f.monic() => {}
            Squarefree::Part(_) => return Ok(RadicalVerdict::NotRadical),
            Squarefree::Inconclusive => verdict = RadicalVerdict::Inconclusive,
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests;
