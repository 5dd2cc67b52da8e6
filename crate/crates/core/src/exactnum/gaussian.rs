use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::Rational;
use crate::error::Error;

/// An element `re + im*i` of the field `Q(i)`.
///
/// The derived ordering is lexicographic on `(re, im)`. It only fixes a
/// canonical display order and is not a field ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from(Rational::from_integer(n))
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> crate::Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        let c = self.conj();
        Ok(GaussianRational::new(
            c.re.checked_div(&n)?,
            c.im.checked_div(&n)?,
        ))
    }

    pub fn checked_div(&self, rhs: &Self) -> crate::Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GaussianRational::new(&self.re * k, &self.im * k)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussianRational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_integer(n)
    }
}

/// Canonical literal: `3/2`, `-1i`, `2+1i`, `-2/3-5i`, `0`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts
///
/// ```text
/// gauss := rat | [rat] sign rat 'i' | rat 'i' | ['-'] 'i'
/// ```
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from(s.parse::<Rational>()?));
        };
        match body {
            "" => return Ok(GaussianRational::i()),
            "-" => return Ok(-GaussianRational::i()),
            _ => {}
        }
        if let Ok(im) = body.parse::<Rational>() {
            return Ok(GaussianRational::new(Rational::zero(), im));
        }
        for (pos, c) in body.char_indices() {
            if c != '+' && c != '-' {
                continue;
            }
            let (head, tail) = (&body[..pos], &body[pos + 1..]);
            let re = if head.is_empty() {
                Rational::zero()
            } else {
                match head.parse::<Rational>() {
                    Ok(r) => r,
                    Err(_) => continue,
                }
            };
            if let Ok(im) = tail.parse::<Rational>() {
                let im = if c == '-' { -im } else { im };
                return Ok(GaussianRational::new(re, im));
            }
        }
        Err(Error::Literal {
            literal: s.to_string(),
            message: "not a Gaussian rational literal".to_string(),
        })
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                $trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}
