use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// The coefficient field of a computation: the rationals or a prime field `F_p`.
/// Serialized as its display form, `Q` or `Fp:<p>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator, residues in `0..p`, so structural equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Residue(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub const Q: FieldSpec = FieldSpec::Rationals;

    /// Validated prime field `F_p` with `2 <= p < 2^31`.
    pub fn prime(p: u64) -> Result<FieldSpec, PolyError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(PolyError::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Coeff::Residue(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Coeff::Residue(v.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match self {
            FieldSpec::Rationals => Coeff::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coeff::Residue(r.to_u64().expect("residue fits in u64"))
            }
        }
    }

    /// `num / den`, failing when `den` vanishes in this field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Coeff, PolyError> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(PolyError::NotInvertible(format!("{den} in {self}")));
        }
        Ok(self.div(&self.from_bigint(num), &d))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Residue(r) => *r == 0,
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Residue(r) => *r == 1,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (FieldSpec::Prime(p), Coeff::Residue(x), Coeff::Residue(y)) => {
                let s = x + y;
                Coeff::Residue(if s >= *p { s - p } else { s })
            }
            _ => mismatch(self, a, b),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x - y),
            (FieldSpec::Prime(p), Coeff::Residue(x), Coeff::Residue(y)) => {
                Coeff::Residue(if x >= y { x - y } else { x + p - y })
            }
            _ => mismatch(self, a, b),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rational(x)) => Coeff::Rational(-x),
            (FieldSpec::Prime(p), Coeff::Residue(x)) => Coeff::Residue(if *x == 0 { 0 } else { p - x }),
            _ => mismatch(self, a, a),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (FieldSpec::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (FieldSpec::Prime(p), Coeff::Residue(x), Coeff::Residue(y)) => Coeff::Residue(x * y % p),
            _ => mismatch(self, a, b),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (FieldSpec::Rationals, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            (FieldSpec::Prime(p), Coeff::Residue(x)) => Coeff::Residue(pow_mod(*x, p - 2, *p)),
            _ => mismatch(self, a, a),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Every element of a finite field, in residue order.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..*p).map(Coeff::Residue).collect()),
        }
    }

    /// Uniform element of a prime field, or a small integer in `-bound..=bound` over Q.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Coeff {
        match self {
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-bound..=bound)),
            FieldSpec::Prime(p) => Coeff::Residue(rng.gen_range(0..*p)),
        }
    }

    /// Render a coefficient as text accepted by the polynomial parser.
    pub fn format(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rational(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Residue(x) => x.to_string(),
        }
    }

    /// True when the coefficient prints with a leading minus sign.
    pub fn is_negative(&self, a: &Coeff) -> bool {
        matches!(a, Coeff::Rational(r) if r.is_negative())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cold]
fn mismatch(field: &FieldSpec, a: &Coeff, b: &Coeff) -> ! {
    panic!("coefficient {a:?} / {b:?} does not belong to {field}")
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| PolyError::InvalidField(s.to_string()))?;
        let p: u64 = rest.parse().map_err(|_| PolyError::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = PolyError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}
