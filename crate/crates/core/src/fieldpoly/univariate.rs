use std::sync::Arc;

use super::field::{Coeff, FieldSpec};
use super::monomial::Monomial;
use super::poly::{Polynomial, Ring};
use super::PolyError;

/// Dense univariate polynomial, coefficients stored from degree 0 upward
/// with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> UniPoly {
        let f = self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        UniPoly::new(f, coeffs)
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                UniPoly::new(self.field, self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect())
            }
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let f = self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lc = f.inv(&divisor.coeffs[dd]);
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (UniPoly::new(f, vec![]), UniPoly::new(f, vec![]));
        };
        if nd < dd {
            return (UniPoly::new(f, vec![]), self.clone());
        }
        let mut quot = vec![f.zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = f.mul(&rem[k + dd], &inv_lc);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(f, quot), UniPoly::new(f, rem))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Convert from a polynomial involving at most the variable `var`.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> Result<UniPoly, PolyError> {
        let field = p.field();
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![field.zero(); deg + 1];
        for (m, c) in p.terms() {
            if m.support().any(|v| v != var) {
                return Err(PolyError::NotUnivariate(p.to_string()));
            }
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Ok(UniPoly::new(field, coeffs))
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring>, var: usize) -> Polynomial {
        let n = ring.nvars();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut e = vec![0u16; n];
                e[var] = i as u16;
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }
}

/// Result of a squarefree-part computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Squarefree {
    Part(Polynomial),
    /// The derivative vanishes identically (only possible in characteristic p).
    Inconclusive,
}

/// `f / gcd(f, f')` for a nonzero univariate `f`; constants are their own part.
pub fn squarefree_part(f: &Polynomial) -> Result<Squarefree, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = f.variables();
    if vars.len() > 1 {
        return Err(PolyError::NotUnivariate(f.to_string()));
    }
    let Some(&var) = vars.first() else {
        return Ok(Squarefree::Part(f.monic()));
    };
    let u = UniPoly::from_polynomial(f, var)?;
    let du = u.derivative();
    if du.is_zero() {
        return Ok(Squarefree::Inconclusive);
    }
    let g = u.gcd(&du);
    let (q, r) = u.div_rem(&g);
    debug_assert!(r.is_zero());
    Ok(Squarefree::Part(q.monic().to_polynomial(f.ring(), var)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldpoly::parse_poly;

    #[test]
    fn squarefree_examples() {
        let r = Ring::new(["x"], FieldSpec::Rationals);
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(squarefree_part(&p("x^2")).unwrap(), Squarefree::Part(p("x")));
        assert_eq!(squarefree_part(&p("x*(x-1)")).unwrap(), Squarefree::Part(p("x^2 - x")));
        assert_eq!(squarefree_part(&p("(x-1)^3*(x+2)")).unwrap(), Squarefree::Part(p("(x-1)*(x+2)")));
        assert!(matches!(squarefree_part(&p("0")), Err(PolyError::ZeroPolynomial)));
    }

    #[test]
    fn squarefree_char_p() {
        let r = Ring::new(["x"], FieldSpec::Prime(5));
        let x5 = parse_poly("x^5", &r).unwrap();
        assert_eq!(squarefree_part(&x5).unwrap(), Squarefree::Inconclusive);
    }

    #[test]
    fn rejects_multivariate() {
        let r = Ring::new(["x", "y"], FieldSpec::Rationals);
        assert!(squarefree_part(&parse_poly("x*y", &r).unwrap()).is_err());
    }
}
