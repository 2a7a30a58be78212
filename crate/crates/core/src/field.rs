//! Exact coefficient rings: ℚ, prime fields F_p, and dual numbers k[ε]/(ε²).
//!
//! Dual numbers form a ring, not a field: division is permitted only by
//! elements whose constant part is invertible. Everything is immutable and
//! kept in canonical form (rationals in lowest terms with positive
//! denominator, residues reduced into `[0, p)`).

use crate::arith::{self, inv_mod, pow_mod, reduce_i64};
use crate::error::Error;
use crate::Result;
use alloc::string::{String, ToString};
use core::fmt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Descriptor of a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldKind {
    /// Arbitrary-precision rationals.
    Rational,
    /// Prime field `F_p`.
    Fp(u64),
    /// Dual numbers `F_p[ε]/(ε²)`.
    DualFp(u64),
}

impl FieldKind {
    /// Prime field descriptor; validates primality.
    pub fn fp(p: u64) -> Result<Self> {
        if !arith::is_prime(p) || p > arith::MAX_MODULUS {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldKind::Fp(p))
    }

    /// Dual numbers over `F_p`; validates primality.
    pub fn dual_fp(p: u64) -> Result<Self> {
        if !arith::is_prime(p) || p > arith::MAX_MODULUS {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldKind::DualFp(p))
    }

    /// Characteristic of the ring (0 for ℚ).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Rational => 0,
            FieldKind::Fp(p) | FieldKind::DualFp(p) => *p,
        }
    }

    /// True for ℚ and F_p; false for dual numbers.
    pub fn is_field(&self) -> bool {
        !matches!(self, FieldKind::DualFp(_))
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_int(self, 0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::from_int(self, 1)
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Fp(p) => write!(f, "fp:{p}"),
            FieldKind::DualFp(p) => write!(f, "dual:fp:{p}"),
        }
    }
}

/// An element of one of the supported coefficient rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Fp { val: u64, p: u64 },
    /// `a + b·ε` with `ε² = 0`.
    Dual { a: u64, b: u64, p: u64 },
}

impl FieldElement {
    pub fn from_int(kind: &FieldKind, v: i64) -> Self {
        match kind {
            FieldKind::Rational => FieldElement::Rational(BigRational::from_integer(v.into())),
            FieldKind::Fp(p) => FieldElement::Fp {
                val: reduce_i64(v, *p),
                p: *p,
            },
            FieldKind::DualFp(p) => FieldElement::Dual {
                a: reduce_i64(v, *p),
                b: 0,
                p: *p,
            },
        }
    }

    pub fn rational(num: i64, den: i64) -> Self {
        FieldElement::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn fp(val: i64, p: u64) -> Self {
        FieldElement::Fp {
            val: reduce_i64(val, p),
            p,
        }
    }

    /// `a + b·ε` over `F_p`.
    pub fn dual(a: i64, b: i64, p: u64) -> Self {
        FieldElement::Dual {
            a: reduce_i64(a, p),
            b: reduce_i64(b, p),
            p,
        }
    }

    /// The nilpotent generator ε.
    pub fn eps(p: u64) -> Self {
        FieldElement::Dual { a: 0, b: 1, p }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElement::Rational(_) => FieldKind::Rational,
            FieldElement::Fp { p, .. } => FieldKind::Fp(*p),
            FieldElement::Dual { p, .. } => FieldKind::DualFp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Fp { val, .. } => *val == 0,
            FieldElement::Dual { a, b, .. } => *a == 0 && *b == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Fp { val, p } => *val == 1 % *p,
            FieldElement::Dual { a, b, p } => *a == 1 % *p && *b == 0,
        }
    }

    fn binop(
        &self,
        rhs: &FieldElement,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        fp: impl Fn(u64, u64, u64) -> u64,
        dual: impl Fn(u64, u64, u64, u64, u64) -> (u64, u64),
    ) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(rat(x, y))
            }
            (FieldElement::Fp { val: x, p }, FieldElement::Fp { val: y, p: p2 }) if p == p2 => {
                FieldElement::Fp {
                    val: fp(*x, *y, *p),
                    p: *p,
                }
            }
            (
                FieldElement::Dual { a, b, p },
                FieldElement::Dual {
                    a: c,
                    b: d,
                    p: p2,
                },
            ) if p == p2 => {
                let (a2, b2) = dual(*a, *b, *c, *d, *p);
                FieldElement::Dual {
                    a: a2,
                    b: b2,
                    p: *p,
                }
            }
            _ => panic!("coefficient kind mismatch: {} vs {}", self.kind(), rhs.kind()),
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> FieldElement {
        self.binop(
            rhs,
            |x, y| x + y,
            |x, y, p| (x + y) % p,
            |a, b, c, d, p| ((a + c) % p, (b + d) % p),
        )
    }

    pub fn sub(&self, rhs: &FieldElement) -> FieldElement {
        self.binop(
            rhs,
            |x, y| x - y,
            |x, y, p| (x + p - y) % p,
            |a, b, c, d, p| ((a + p - c) % p, (b + p - d) % p),
        )
    }

    pub fn mul(&self, rhs: &FieldElement) -> FieldElement {
        self.binop(
            rhs,
            |x, y| x * y,
            |x, y, p| x * y % p,
            // (a + bε)(c + dε) = ac + (ad + bc)ε, using ε² = 0
            |a, b, c, d, p| (a * c % p, (a * d + b * c) % p),
        )
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Fp { val, p } => FieldElement::Fp {
                val: (p - val) % p,
                p: *p,
            },
            FieldElement::Dual { a, b, p } => FieldElement::Dual {
                a: (p - a) % p,
                b: (p - b) % p,
                p: *p,
            },
        }
    }

    /// Multiplicative inverse. Dual numbers are invertible only when the
    /// constant part is nonzero: `(a + bε)⁻¹ = a⁻¹ − a⁻²·b·ε`.
    pub fn inv(&self) -> Result<FieldElement> {
        match self {
            FieldElement::Rational(r) => {
                if r.is_zero() {
                    Err(Error::NotInvertible)
                } else {
                    Ok(FieldElement::Rational(r.recip()))
                }
            }
            FieldElement::Fp { val, p } => inv_mod(*val, *p)
                .map(|v| FieldElement::Fp { val: v, p: *p })
                .ok_or(Error::NotInvertible),
            FieldElement::Dual { a, b, p } => {
                let ia = inv_mod(*a, *p).ok_or(Error::NotInvertible)?;
                let b2 = (*p - ia * ia % *p * *b % *p) % *p;
                Ok(FieldElement::Dual {
                    a: ia,
                    b: b2,
                    p: *p,
                })
            }
        }
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: usize) -> FieldElement {
        // fast paths keep residues cheap; rationals fall back to doubling
        match self {
            FieldElement::Fp { val, p } => FieldElement::Fp {
                val: pow_mod(*val, e as u64, *p),
                p: *p,
            },
            _ => {
                let mut acc = self.kind().one();
                let mut base = self.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc.mul(&base);
                    }
                    base = base.mul(&base);
                    e >>= 1;
                }
                acc
            }
        }
    }

    /// Canonical wire form: `num/den` for ℚ, decimal for F_p, `a+b*eps`
    /// for dual numbers.
    pub fn wire_string(&self) -> String {
        match self {
            FieldElement::Rational(r) => {
                let mut s = r.numer().to_string();
                s.push('/');
                s.push_str(&r.denom().to_string());
                s
            }
            FieldElement::Fp { val, .. } => val.to_string(),
            FieldElement::Dual { a, b, .. } => {
                let mut s = a.to_string();
                s.push('+');
                s.push_str(&b.to_string());
                s.push_str("*eps");
                s
            }
        }
    }

    /// Sign information for pretty-printing: `(is_negative, magnitude string)`.
    /// Residues are never treated as negative (they are canonical in `[0,p)`).
    pub(crate) fn display_parts(&self) -> (bool, String) {
        match self {
            FieldElement::Rational(r) => {
                let mag = r.abs();
                let s = if mag.denom().is_one() {
                    mag.numer().to_string()
                } else {
                    let mut s = mag.numer().to_string();
                    s.push('/');
                    s.push_str(&mag.denom().to_string());
                    s
                };
                (r.is_negative(), s)
            }
            FieldElement::Fp { val, .. } => (false, val.to_string()),
            FieldElement::Dual { a, b, .. } => {
                let s = match (a, b) {
                    (_, 0) => a.to_string(),
                    (0, 1) => String::from("eps"),
                    (0, _) => {
                        let mut s = b.to_string();
                        s.push_str("*eps");
                        s
                    }
                    (_, _) => {
                        let mut s = String::from("(");
                        s.push_str(&a.to_string());
                        s.push('+');
                        s.push_str(&b.to_string());
                        s.push_str("*eps)");
                        s
                    }
                };
                (false, s)
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, mag) = self.display_parts();
        if neg {
            write!(f, "-{mag}")
        } else {
            write!(f, "{mag}")
        }
    }
}
