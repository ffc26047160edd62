use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Coeff, FieldSpec};
use super::monomial::{Monomial, MonomialOrder};
use super::PolyError;

/// Variable names, coefficient field and active monomial order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

impl Ring {
    /// Polynomial ring over `field` with the grevlex order.
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: FieldSpec) -> Arc<Ring> {
        Ring::with_order(vars, field, MonomialOrder::Grevlex)
    }

    pub fn with_order<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        field: FieldSpec,
        order: MonomialOrder,
    ) -> Arc<Ring> {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect(), field, order })
    }

    /// Same variables and field under another order.
    pub fn reordered(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring { vars: self.vars.clone(), field: self.field, order })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A sparse polynomial. Terms are kept sorted by decreasing monomial under
/// the ring's order, with no zero coefficients; the zero polynomial has no terms.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Polynomial::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Self {
        Polynomial::constant(ring, ring.field.from_i64(c))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        let terms = if ring.field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::variable(ring.nvars(), i), ring.field.one())
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        let i = ring.var_index(name).ok_or_else(|| PolyError::UnknownIdentifier(name.to_string()))?;
        Ok(Polynomial::var(ring, i))
    }

    /// Build from arbitrary (possibly repeated, unsorted, zero) terms.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wrap terms already sorted by decreasing monomial with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Remove the leading term in place.
    pub(crate) fn drop_leading(&mut self) {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Polynomial {
        let terms = self.terms.iter().skip(1).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant term value (zero if absent).
    pub fn constant_term(&self) -> Coeff {
        self.terms.last().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Degree in a single variable, `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max()
    }

    /// Sorted indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                used[v] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    pub fn is_homogeneous_linear(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        debug_assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    /// Merge two sorted term lists, `self + c * other`.
    fn merge_scaled(&self, other: &Polynomial, scale: Option<&Coeff>, shift: Option<&Monomial>) -> Polynomial {
        self.assert_same_ring(other);
        let field = self.ring.field;
        let order = &self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, c)| {
            let m = match shift {
                Some(s) => m.mul(s),
                None => m.clone(),
            };
            let c = match scale {
                Some(s) => field.mul(c, s),
                None => c.clone(),
            };
            (m, c)
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b.as_ref()) {
                (None, None) => break,
                (Some(_), None) => {
                    out.extend(a.by_ref().cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    out.extend(b.by_ref());
                    break;
                }
                (Some((ma, ca)), Some((mb, cb))) => match order.cmp(ma, mb) {
                    Ordering::Greater => {
                        out.push(a.next().unwrap().clone());
                    }
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let c = field.add(ca, cb);
                        if !field.is_zero(&c) {
                            out.push((ma.clone(), c));
                        }
                        a.next();
                        next_b = b.next();
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// `self - c * m * g`, the elementary reduction step.
    pub fn sub_term_multiple(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        let neg = self.ring.field.neg(c);
        self.merge_scaled(g, Some(&neg), Some(m))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.ring.field.is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.ring.field.inv(lc)),
        }
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let field = self.ring.field;
        let inv = field.inv(lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = field.mul(c, &inv);
            rem = rem.sub_term_multiple(&qc, &qm, divisor);
            quot.push((qm, qc));
        }
        // quotient terms are produced in decreasing order
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field;
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                let mut exps = m.exponents().to_vec();
                exps[var] -= 1;
                debug_assert_eq!(exps.len(), n);
                (Monomial::from_exponents(&exps), field.mul(c, &field.from_i64(e as i64)))
            })
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        // Lowering one exponent preserves relative order for lex/grevlex but not
        // necessarily for block orders, so re-canonicalize.
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Evaluate at a point of the coefficient field.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension mismatch");
        let field = self.ring.field;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.support() {
                t = field.mul(&t, &field.pow(&point[v], m.exponent(v) as u64));
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Ring homomorphism `x_i -> images[i]` into the ring of the images.
    pub fn substitute(&self, images: &[Polynomial], target: &Arc<Ring>) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars(), "substitution arity mismatch");
        let mut acc = Polynomial::zero(target);
        let mut power_cache: HashMap<(usize, u16), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for v in m.support() {
                let e = m.exponent(v);
                let p = power_cache.entry((v, e)).or_insert_with(|| images[v].pow(e as u32));
                t = &t * p;
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Move into another ring, matching variables by name.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        if Arc::ptr_eq(&self.ring, target) || *self.ring == **target {
            return Ok(self.clone());
        }
        if self.ring.field != target.field {
            return Err(PolyError::RingMismatch("fields differ".into()));
        }
        let used = self.variables();
        let mut positions = vec![usize::MAX; self.ring.nvars()];
        for v in used {
            let name = &self.ring.vars[v];
            positions[v] = target.var_index(name).ok_or_else(|| PolyError::UnknownIdentifier(name.clone()))?;
        }
        Ok(self.remap_positions(&positions, target))
    }

    /// Move into a ring with the same number of variables, matching by position.
    pub fn relabel(&self, target: &Arc<Ring>) -> Polynomial {
        assert_eq!(self.ring.nvars(), target.nvars(), "relabel needs equal variable counts");
        let positions: Vec<usize> = (0..self.ring.nvars()).collect();
        self.remap_positions(&positions, target)
    }

    fn remap_positions(&self, positions: &[usize], target: &Arc<Ring>) -> Polynomial {
        let n = target.nvars();
        let terms: Vec<_> = self.terms.iter().map(|(m, c)| (m.remap(positions, n), c.clone())).collect();
        let mut p = Polynomial { ring: target.clone(), terms };
        p.terms.sort_by(|a, b| target.order.cmp(&b.0, &a.0));
        p
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        m.support()
            .map(|v| {
                let e = m.exponent(v);
                if e == 1 {
                    self.ring.vars[v].clone()
                } else {
                    format!("{}^{}", self.ring.vars[v], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let cs = field.format(&abs);
            if m.is_one() {
                write!(f, "{cs}")?;
            } else if field.is_one(&abs) {
                write!(f, "{}", self.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", cs, self.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge_scaled(rhs, None, None)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let m1 = self.ring.field.from_i64(-1);
        self.merge_scaled(rhs, Some(&m1), None)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.ring.field;
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        let field = self.ring.field;
        let mut products = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                products.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Polynomial::from_terms(&self.ring, products)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::new(["x", "y", "z"], FieldSpec::Rationals)
    }

    #[test]
    fn zero_is_empty() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let z = &x - &x;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn display_canonical() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x - &y).pow(2) - &Polynomial::from_i64(&r, 3);
        assert_eq!(p.to_string(), "x^2 - 2*x*y + y^2 - 3");
    }

    #[test]
    fn substitution_and_eval() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = &(&x * &y) + &x;
        let f = r.field();
        let v = p.eval(&[f.from_i64(2), f.from_i64(3), f.from_i64(0)]);
        assert_eq!(v, f.from_i64(8));
        let q = p.substitute(&[y.clone(), x.clone(), Polynomial::zero(&r)], &r);
        assert_eq!(q, &(&x * &y) + &y);
    }

    #[test]
    fn derivative_in_char_p() {
        let r = Ring::new(["x"], FieldSpec::Prime(3));
        let x = Polynomial::var(&r, 0);
        assert!(x.pow(3).derivative(0).is_zero());
        assert_eq!(x.pow(2).derivative(0), x.scale(&r.field().from_i64(2)));
    }
}
