//! Exact field scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Every coefficient in the library is a [`Scalar`]. There is no floating
//! point anywhere; equality of scalars (and hence of linear maps) is exact.
//! Rationals keep a machine-word fast path and promote to arbitrary
//! precision on overflow, so equality stays canonical either way.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// The ground field: exact rationals, or integers modulo a prime `p >= 5`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Validates the field description (primality and `p >= 5` for prime fields).
    pub fn validate(self) -> Result<Self, Error> {
        match self {
            Field::Rational => Ok(self),
            Field::Prime(p) => {
                if p < 5 || !is_prime(p) {
                    Err(Error::BadField(format!("modulus {p} is not a prime >= 5")))
                } else {
                    Ok(self)
                }
            }
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rat::Small(0, 1)),
            Field::Prime(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rat::Small(1, 1)),
            Field::Prime(p) => Scalar::Fp { p, v: 1 },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rat::Small(n, 1)),
            Field::Prime(p) => Scalar::Fp {
                p,
                v: n.rem_euclid(p as i64) as u64,
            },
        }
    }

    /// Builds the fraction `num/den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, Error> {
        if den == 0 {
            return Err(Error::BadScalar("zero denominator".into()));
        }
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Parses a coefficient string: an integer `n` or a fraction `n/d`.
    pub fn parse(self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| Error::BadScalar(format!("bad numerator in {s:?}")))?;
        let den: BigInt = den_s
            .parse()
            .map_err(|_| Error::BadScalar(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::BadScalar(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(Rat::from_big(BigRational::new(num, den)))),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let n: u64 = (((num % &pm) + &pm) % &pm).try_into().unwrap();
                let d: u64 = (((den % &pm) + &pm) % &pm).try_into().unwrap();
                Scalar::Fp { p, v: n }.div(&Scalar::Fp { p, v: d })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p/{p}"),
        }
    }
}

/// An exact rational in canonical form: reduced, positive denominator, and
/// stored in machine words whenever it fits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Rat {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// Canonicalizes a quotient of 128-bit intermediates.
    fn from_i128(mut num: i128, mut den: i128) -> Rat {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(BigRational::new(BigInt::from(num), BigInt::from(den))),
        }
    }

    /// Demotes an arbitrary-precision value back to machine words if it fits.
    fn from_big(q: BigRational) -> Rat {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(q),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(q) => q.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    fn is_one(&self) -> bool {
        matches!(self, Rat::Small(1, 1))
    }
}

/// An element of the ground field, in canonical form.
///
/// Rationals are reduced with positive denominator; residues live in
/// `[0, p)`. Mixing scalars from different fields is a programming error and
/// panics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Q(Rat),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::BadScalar("division by zero".into()));
        }
        Ok(match self {
            Scalar::Q(Rat::Small(n, d)) => {
                Scalar::Q(Rat::from_i128(*d as i128, *n as i128))
            }
            Scalar::Q(Rat::Big(q)) => Scalar::Q(Rat::from_big(q.recip())),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: mod_pow(*v, *p - 2, *p),
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &other.inv()?)
    }

    /// Canonical string form, the one accepted back by [`Field::parse`].
    pub fn render(&self) -> String {
        match self {
            Scalar::Q(Rat::Small(n, 1)) => n.to_string(),
            Scalar::Q(Rat::Small(n, d)) => format!("{n}/{d}"),
            Scalar::Q(Rat::Big(q)) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                if a.is_one() {
                    return Scalar::Q(b.clone());
                }
                if b.is_one() {
                    return Scalar::Q(a.clone());
                }
                match (a, b) {
                    (Rat::Small(an, ad), Rat::Small(bn, bd)) => Scalar::Q(Rat::from_i128(
                        *an as i128 * *bn as i128,
                        *ad as i128 * *bd as i128,
                    )),
                    _ => Scalar::Q(Rat::from_big(a.to_big() * b.to_big())),
                }
            }
            (Scalar::Fp { p: pa, v: a }, Scalar::Fp { p: pb, v: b }) => {
                assert_eq!(pa, pb, "scalars from different prime fields");
                Scalar::Fp {
                    p: *pa,
                    v: ((*a as u128 * *b as u128) % *pa as u128) as u64,
                }
            }
            _ => panic!("mixed rational/prime-field scalars"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => {
                if a.is_zero() {
                    return Scalar::Q(b.clone());
                }
                if b.is_zero() {
                    return Scalar::Q(a.clone());
                }
                match (a, b) {
                    (Rat::Small(an, ad), Rat::Small(bn, bd)) => Scalar::Q(Rat::from_i128(
                        *an as i128 * *bd as i128 + *bn as i128 * *ad as i128,
                        *ad as i128 * *bd as i128,
                    )),
                    _ => Scalar::Q(Rat::from_big(a.to_big() + b.to_big())),
                }
            }
            (Scalar::Fp { p: pa, v: a }, Scalar::Fp { p: pb, v: b }) => {
                assert_eq!(pa, pb, "scalars from different prime fields");
                Scalar::Fp {
                    p: *pa,
                    v: ((*a as u128 + *b as u128) % *pa as u128) as u64,
                }
            }
            _ => panic!("mixed rational/prime-field scalars"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(Rat::Small(n, d)) => Scalar::Q(Rat::from_i128(-(*n as i128), *d as i128)),
            Scalar::Q(Rat::Big(q)) => Scalar::Q(Rat::from_big(-q.clone())),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Sign helper used by the loop constructions: `(-1)^k`.
pub fn sign_pow(field: Field, k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        field.one()
    } else {
        -&field.one()
    }
}
