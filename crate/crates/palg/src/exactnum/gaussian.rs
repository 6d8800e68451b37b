//! Exact scalars from the field Q(i): Gaussian rationals a + b·i with
//! arbitrary-precision rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactNumError;

/// An element of Q(i), stored in lowest terms. Equality is structural,
/// which coincides with field equality because both parts are canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit, satisfying i² = −1.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        GaussianRational {
            re: BigRational::new(BigInt::from(numer), BigInt::from(denom)),
            im: BigRational::zero(),
        }
    }

    /// a + b·i from integer parts.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |a + bi|² = a² + b², a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactNumError> {
        rhs.recip()
            .map(|inv| self * &inv)
            .ok_or(ExactNumError::DivisionByZero)
    }

    /// Exact square root in Q(i), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.im.is_zero() {
            // sqrt of a rational: of |a| first, then attach i when a < 0.
            let r = rational_sqrt(&self.re.abs())?;
            return if self.re.is_negative() {
                Some(GaussianRational {
                    re: BigRational::zero(),
                    im: r,
                })
            } else {
                Some(GaussianRational {
                    re: r,
                    im: BigRational::zero(),
                })
            };
        }
        // (x + yi)² = a + bi  ⟺  x² − y² = a, 2xy = b.
        // With m = sqrt(a² + b²): x² = (a + m)/2, y = b / (2x).
        let m = rational_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let x2 = (&self.re + &m) / &two;
        let x = rational_sqrt(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&two * &x);
        Some(GaussianRational { re: x, im: y })
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_uint_sqrt(r.numer().magnitude())?;
    let d = exact_uint_sqrt(r.denom().magnitude())?;
    Some(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn exact_uint_sqrt(n: &BigUint) -> Option<BigUint> {
    let s = num_integer::Roots::sqrt(n);
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // (a + bi)(c + di) = (ac − bd) + (ad + bc)i
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero in Q(i)")
    }
}
forward_binop!(Div, div);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self) * rhs;
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let write_im = |f: &mut fmt::Formatter<'_>, im: &BigRational, lead_sign: bool| {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if lead_sign {
                "+"
            } else {
                ""
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        if self.re.is_zero() {
            write_im(f, &self.im, false)
        } else {
            write!(f, "{}", self.re)?;
            write_im(f, &self.im, true)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = ExactNumError;

    /// Parses strings like `1`, `-1/2`, `i`, `-i`, `2i`, `3/4-2i`, `1+i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ExactNumError::BadScalar(s.to_string()));
        }
        let bad = || ExactNumError::BadScalar(s.to_string());
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut val = GaussianRational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        while pos < bytes.len() {
            let mut negative = false;
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    negative = true;
                    pos += 1;
                }
                _ => {
                    if pos != 0 {
                        return Err(bad());
                    }
                }
            }
            let (term, next) = parse_term(s, pos).ok_or_else(bad)?;
            pos = next;
            let term = if negative { -term } else { term };
            if term.im.is_zero() {
                if seen_re {
                    return Err(bad());
                }
                seen_re = true;
            } else {
                if seen_im {
                    return Err(bad());
                }
                seen_im = true;
            }
            val += &term;
        }
        if !seen_re && !seen_im {
            return Err(bad());
        }
        Ok(val)
    }
}

/// One unsigned term: `digits[/digits][i]` or a bare `i`.
fn parse_term(s: &str, pos: usize) -> Option<(GaussianRational, usize)> {
    let bytes = s.as_bytes();
    if pos >= bytes.len() {
        return None;
    }
    if bytes[pos] == b'i' {
        return Some((GaussianRational::i(), pos + 1));
    }
    let start = pos;
    let mut end = pos;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return None;
    }
    let numer = BigInt::parse_bytes(&bytes[start..end], 10)?;
    let mut denom = BigInt::one();
    if end < bytes.len() && bytes[end] == b'/' {
        let dstart = end + 1;
        let mut dend = dstart;
        while dend < bytes.len() && bytes[dend].is_ascii_digit() {
            dend += 1;
        }
        if dend == dstart {
            return None;
        }
        denom = BigInt::parse_bytes(&bytes[dstart..dend], 10)?;
        if denom.is_zero() {
            return None;
        }
        end = dend;
    }
    let q = BigRational::new(numer, denom);
    if end < bytes.len() && bytes[end] == b'i' {
        Some((
            GaussianRational::new(BigRational::zero(), q),
            end + 1,
        ))
    } else {
        Some((
            GaussianRational::new(q, BigRational::zero()),
            end,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, im)
    }

    #[test]
    fn product_of_conjugates_is_norm() {
        // (1+i)(1−i) = 2
        assert_eq!(g(1, 1) * g(1, -1), g(2, 0));
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(GaussianRational::i() * GaussianRational::i(), g(-1, 0));
    }

    #[test]
    fn conjugate_sum_drops_imaginary_part() {
        let a = GaussianRational::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        );
        assert_eq!(&a + &a.conjugate(), g(1, 0));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            g(1, 0).checked_div(&GaussianRational::zero()),
            Err(ExactNumError::DivisionByZero)
        ));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = g(3, -2);
        let b = g(-1, 7);
        assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
    }

    #[test]
    fn parse_display_round_trip() {
        for text in ["0", "1", "-1", "i", "-i", "2i", "-3/4", "3/4-2i", "1+i", "1/2+1/3i"] {
            let v: GaussianRational = text.parse().unwrap();
            let again: GaussianRational = v.to_string().parse().unwrap();
            assert_eq!(v, again, "round trip failed for {text}");
        }
        assert_eq!("3/4-2i".parse::<GaussianRational>().unwrap(), {
            GaussianRational::new(
                BigRational::new(3.into(), 4.into()),
                BigRational::from_integer((-2).into()),
            )
        });
    }

    #[test]
    fn parse_rejects_garbage() {
        for text in ["", "x", "1+2", "i+i", "1/0", "--1", "1i2"] {
            assert!(text.parse::<GaussianRational>().is_err(), "accepted {text}");
        }
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(g(-1, 0).sqrt().unwrap(), GaussianRational::i());
        assert_eq!(g(0, 2).sqrt().unwrap(), g(1, 1)); // (1+i)² = 2i
        assert_eq!(
            GaussianRational::from_ratio(9, 4).sqrt().unwrap(),
            GaussianRational::from_ratio(3, 2)
        );
        assert!(g(2, 0).sqrt().is_none());
        let v = g(3, -5);
        assert_eq!((&v * &v).sqrt().map(|r| (&r * &r)), Some(&v * &v));
    }
}
