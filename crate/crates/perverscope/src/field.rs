//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Everything downstream (matrices, quiver algebras, sheaf computations) is generic
//! over [`Scalar`]. The two implementations are [`Rat`] (reduced fractions of
//! big integers) and [`Fp`] (integers mod a prime chosen at runtime). There is
//! deliberately no floating-point instantiation: every result in this crate is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Runtime description of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// The rational numbers.
    Rationals,
    /// The field with `p` elements, `p` prime.
    Prime(u32),
}

impl FieldSpec {
    /// Validates a prime-field request. `p` must be a prime with `1 < p < 2^31`.
    pub fn prime(p: i64) -> Result<FieldSpec, Error> {
        if p < 2 {
            return Err(Error::input(format!("field order {p} is not a prime >= 2")));
        }
        if p >= (1 << 31) {
            return Err(Error::input(format!("field order {p} exceeds 2^31 - 1")));
        }
        let p = p as u32;
        if !is_prime(p) {
            return Err(Error::input(format!("field order {p} is composite")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Parses a CLI field name: `q` for the rationals, `f<p>` for a prime field.
    pub fn parse_name(s: &str) -> Result<FieldSpec, Error> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix('f') {
            let p: i64 = rest
                .parse()
                .map_err(|_| Error::input(format!("unrecognized field '{s}'")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::input(format!(
            "unrecognized field '{s}' (expected 'q' or 'f<p>')"
        )))
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("f{p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. `Zero` and `One` (from num-traits) provide the
/// constants; inverses make it a field.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + 'static
{
    /// Embeds an integer, bound to the given field.
    fn from_int(n: i64, field: &FieldSpec) -> Self;

    /// Parses the serialized form: `a` or `a/b` (lowest terms, `b > 0`) over the
    /// rationals, a residue `0 <= r < p` over a prime field.
    fn parse(s: &str, field: &FieldSpec) -> Result<Self, Error>;

    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Canonical serialized form (see [`Scalar::parse`]).
    fn render(&self) -> String;

    /// Rescales a row vector to a canonical primitive representative of its line.
    /// Rational rows become integer vectors with content 1 and positive leading
    /// entry, which keeps Gaussian elimination fraction-free between steps.
    /// Prime fields need no rescaling.
    fn reduce_row(_row: &mut [Self]) {}

    /// The field this element belongs to, when the element itself knows.
    fn field(&self) -> Option<FieldSpec>;
}

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar for BigRational {
    fn from_int(n: i64, _field: &FieldSpec) -> Self {
        rat_int(n)
    }

    fn parse(s: &str, _field: &FieldSpec) -> Result<Self, Error> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::input(format!("invalid rational '{s}'")))?;
        let den: BigInt = match den {
            Some(b) => b
                .parse()
                .map_err(|_| Error::input(format!("invalid rational '{s}'")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::input(format!("zero denominator in '{s}'")));
        }
        Ok(BigRational::new(num, den))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn render(&self) -> String {
        self.to_string()
    }

    fn reduce_row(row: &mut [Self]) {
        // Clear denominators, divide by the numerator gcd, make the first
        // nonzero entry positive.
        let mut lcm = BigInt::one();
        for x in row.iter() {
            lcm = lcm.lcm(x.denom());
        }
        let mut gcd = BigInt::zero();
        for x in row.iter() {
            let scaled = x.numer() * (&lcm / x.denom());
            gcd = gcd.gcd(&scaled);
        }
        if gcd.is_zero() {
            return;
        }
        let mut scale = BigRational::new(lcm, gcd);
        if let Some(first) = row.iter().find(|x| !x.is_zero()) {
            if (first.numer().sign() == num_bigint::Sign::Minus) != scale.is_negative() {
                scale = -scale;
            }
        }
        for x in row.iter_mut() {
            *x = &*x * &scale;
        }
    }

    fn field(&self) -> Option<FieldSpec> {
        Some(FieldSpec::Rationals)
    }
}

/// Prime-field scalar with its modulus carried alongside the residue.
///
/// Constants produced by `Zero::zero()`/`One::one()` cannot know the modulus, so
/// they carry `p = 0` ("unbound") and adopt the modulus of the first bound
/// operand they meet. Mixing two distinct bound moduli is a programming error
/// and panics.
#[derive(Debug, Clone, Copy)]
pub struct Fp {
    v: i64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u32) -> Fp {
        let p = p as u64;
        Fp {
            v: v.rem_euclid(p as i64),
            p,
        }
    }

    pub fn value(&self) -> i64 {
        self.v
    }

    fn unify(a: Fp, b: Fp) -> (i64, i64, u64) {
        let p = match (a.p, b.p) {
            (0, q) => q,
            (q, 0) => q,
            (q, r) if q == r => q,
            (q, r) => panic!("mixed prime-field moduli {q} and {r}"),
        };
        if p == 0 {
            (a.v, b.v, 0)
        } else {
            (a.v.rem_euclid(p as i64), b.v.rem_euclid(p as i64), p)
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Fp::unify(*self, *other);
        a == b
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        let v = a.checked_add(b).expect("prime-field overflow");
        Fp {
            v: if p == 0 { v } else { v.rem_euclid(p as i64) },
            p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            v: if self.p == 0 {
                -self.v
            } else {
                (-self.v).rem_euclid(self.p as i64)
            },
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::unify(self, rhs);
        let prod = (a as i128) * (b as i128);
        let v = if p == 0 {
            i64::try_from(prod).expect("prime-field overflow")
        } else {
            (prod.rem_euclid(p as i128)) as i64
        };
        Fp { v, p }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn is_zero(&self) -> bool {
        if self.p == 0 {
            self.v == 0
        } else {
            self.v.rem_euclid(self.p as i64) == 0
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
    fn is_one(&self) -> bool {
        if self.p == 0 {
            self.v == 1
        } else {
            self.v.rem_euclid(self.p as i64) == 1
        }
    }
}

impl Scalar for Fp {
    fn from_int(n: i64, field: &FieldSpec) -> Self {
        match field {
            FieldSpec::Prime(p) => Fp::new(n, *p),
            FieldSpec::Rationals => panic!("prime-field element requested over the rationals"),
        }
    }

    fn parse(s: &str, field: &FieldSpec) -> Result<Self, Error> {
        let p = match field {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => {
                return Err(Error::input("prime-field literal over the rationals"))
            }
        };
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("invalid residue '{s}'")))?;
        Ok(Fp::new(v, p))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.p == 0 {
            // Unbound constants are only ever 0 or +-1.
            return match self.v {
                1 => Some(*self),
                -1 => Some(*self),
                _ => panic!("inverse of unbound prime-field constant {}", self.v),
            };
        }
        // Extended Euclid on (v, p).
        let (mut r0, mut r1) = (self.p as i64, self.v.rem_euclid(self.p as i64));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        Some(Fp {
            v: t0.rem_euclid(self.p as i64),
            p: self.p,
        })
    }

    fn render(&self) -> String {
        if self.p == 0 {
            // Canonical residues for the only unbound values that can occur.
            debug_assert!((-1..=1).contains(&self.v));
            self.v.to_string()
        } else {
            self.v.rem_euclid(self.p as i64).to_string()
        }
    }

    fn field(&self) -> Option<FieldSpec> {
        if self.p == 0 {
            None
        } else {
            Some(FieldSpec::Prime(self.p as u32))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(7919).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(0).is_err());
        assert!(FieldSpec::prime(-5).is_err());
        assert!(FieldSpec::prime(91).is_err()); // 7 * 13
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime((1 << 31) - 1).is_ok()); // Mersenne prime
    }

    #[test]
    fn field_names() {
        assert_eq!(FieldSpec::parse_name("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse_name("f2").unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::parse_name("f101").unwrap(), FieldSpec::Prime(101));
        assert!(FieldSpec::parse_name("f6").is_err());
        assert!(FieldSpec::parse_name("r64").is_err());
    }

    #[test]
    fn rational_roundtrip() {
        let f = FieldSpec::Rationals;
        for s in ["0", "1", "-1", "2/3", "-7/2", "10"] {
            let x = <Rat as Scalar>::parse(s, &f).unwrap();
            assert_eq!(x.render(), s);
        }
        // Non-canonical input renders canonically.
        let x = <Rat as Scalar>::parse("4/6", &f).unwrap();
        assert_eq!(x.render(), "2/3");
        let x = <Rat as Scalar>::parse("3/-6", &f).unwrap();
        assert_eq!(x.render(), "-1/2");
        assert!(<Rat as Scalar>::parse("1/0", &f).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::Prime(7);
        let a = Fp::from_int(5, &f);
        let b = Fp::from_int(4, &f);
        assert_eq!((a + b).render(), "2");
        assert_eq!((a * b).render(), "6");
        assert_eq!((a - b).render(), "1");
        assert_eq!((-a).render(), "2");
        assert_eq!(a.inverse().unwrap().render(), "3"); // 5 * 3 = 15 = 1 mod 7
        assert!(Fp::from_int(0, &f).inverse().is_none());
    }

    #[test]
    fn fp_unbound_constants_adopt_modulus() {
        let f = FieldSpec::Prime(5);
        let a = Fp::from_int(3, &f);
        let one = <Fp as One>::one();
        assert_eq!((a + one).render(), "4");
        assert_eq!((one + one + one + one + one + a).render(), "3");
        assert!((Fp::from_int(5, &f)).is_zero());
    }

    #[test]
    fn rational_row_reduction_is_primitive() {
        let f = FieldSpec::Rationals;
        let mut row = vec![
            <Rat as Scalar>::parse("-2/3", &f).unwrap(),
            <Rat as Scalar>::parse("4", &f).unwrap(),
            <Rat as Scalar>::parse("-1/6", &f).unwrap(),
        ];
        <Rat as Scalar>::reduce_row(&mut row);
        let rendered: Vec<String> = row.iter().map(|x| x.render()).collect();
        assert_eq!(rendered, vec!["4", "-24", "1"]);
    }
}
