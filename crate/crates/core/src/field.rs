//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! Every computation in this crate runs over a fixed [`FieldKind`] chosen at
//! construction time. Mixing scalars from different field contexts is a
//! programming error and panics; user-facing constructors check the context
//! once and then rely on it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Ground field descriptor: the rationals `Q` or a prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldKind {
    Q,
    Fp(u64),
}

impl FieldKind {
    /// Prime field constructor; rejects non-prime moduli.
    pub fn prime_field(p: u64) -> Result<FieldKind> {
        if !is_prime(p) {
            return Err(Error::Scalar(format!("modulus {p} is not prime")));
        }
        Ok(FieldKind::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldKind::Q => 0,
            FieldKind::Fp(p) => *p,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Q => write!(f, "Q"),
            FieldKind::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Arithmetic never rounds; `a + (-a) = 0` and
/// `a * a^{-1} = 1` hold on the nose.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, r: u64 },
}

impl Scalar {
    pub fn zero(kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Q => Scalar::Q(BigRational::zero()),
            FieldKind::Fp(p) => Scalar::Fp { p, r: 0 },
        }
    }

    pub fn one(kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Q => Scalar::Q(BigRational::one()),
            FieldKind::Fp(p) => Scalar::Fp { p, r: 1 },
        }
    }

    pub fn from_int(kind: FieldKind, n: i64) -> Scalar {
        match kind {
            FieldKind::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, r }
            }
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Q,
            Scalar::Fp { p, .. } => FieldKind::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { r, .. } => *r == 1,
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Q(q) => {
                if q.is_zero() {
                    return Err(Error::Scalar("division by zero".into()));
                }
                Ok(Scalar::Q(q.recip()))
            }
            Scalar::Fp { p, r } => {
                if *r == 0 {
                    return Err(Error::Scalar("division by zero".into()));
                }
                Ok(Scalar::Fp {
                    p: *p,
                    r: pow_mod(*r, *p - 2, *p),
                })
            }
        }
    }

    /// Parse a literal: over `Q` either `"n"` or `"n/d"`; over `F_p` a decimal
    /// integer (optionally signed) reduced modulo `p`.
    pub fn parse(kind: FieldKind, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match kind {
            FieldKind::Q => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (text, None),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| Error::Scalar(format!("bad rational literal {text:?}")))?;
                let d: BigInt = match den {
                    Some(d) => d
                        .parse()
                        .map_err(|_| Error::Scalar(format!("bad rational literal {text:?}")))?,
                    None => BigInt::one(),
                };
                if d.is_zero() {
                    return Err(Error::Scalar(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Q(BigRational::new(n, d)))
            }
            FieldKind::Fp(p) => {
                let n: i128 = text
                    .parse()
                    .map_err(|_| Error::Scalar(format!("bad F_{p} literal {text:?}")))?;
                let r = n.rem_euclid(p as i128) as u64;
                Ok(Scalar::Fp { p, r })
            }
        }
    }

    /// Canonical literal form, inverse of [`Scalar::parse`].
    pub fn literal(&self) -> String {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { r, .. } => r.to_string(),
        }
    }

    fn same_context(&self, other: &Scalar) -> bool {
        self.kind() == other.kind()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.literal())
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}

macro_rules! check_ctx {
    ($a:expr, $b:expr, $op:literal) => {
        if !$a.same_context($b) {
            panic!(
                "mixed field contexts in {}: {} vs {}",
                $op,
                $a.kind(),
                $b.kind()
            );
        }
    };
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_ctx!(self, rhs, "add");
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                p: *p,
                r: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        check_ctx!(self, rhs, "sub");
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                p: *p,
                r: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_ctx!(self, rhs, "mul");
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, r: a }, Scalar::Fp { r: b, .. }) => Scalar::Fp {
                p: *p,
                r: (*a as u128 * *b as u128 % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, r } => Scalar::Fp {
                p: *p,
                r: if *r == 0 { 0 } else { *p - *r },
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
