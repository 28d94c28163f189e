use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::gcd::gcd;
use super::mpoly::MPoly;
use crate::error::{Error, Result};

/// A reduced rational function `num / den`.
///
/// The denominator has coprime integer coefficients and a positive leading
/// coefficient, so structural equality is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MFrac {
    num: MPoly,
    den: MPoly,
}

impl MFrac {
    pub fn new(num: MPoly, den: MPoly) -> Result<MFrac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(MFrac::zero());
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let (f, den) = den.integer_primitive();
        let num = num.scale(&f.recip());
        Ok(MFrac { num, den })
    }

    pub fn zero() -> MFrac {
        MFrac {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> MFrac {
        MFrac::from(MPoly::one())
    }

    pub fn constant(c: BigRational) -> MFrac {
        MFrac::from(MPoly::constant(c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator is a constant.
    pub fn to_poly(&self) -> Option<MPoly> {
        let c = self.den.constant_value()?;
        Some(self.num.scale(&c.recip()))
    }

    pub fn recip(&self) -> Result<MFrac> {
        MFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &BigRational) -> MFrac {
        MFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> MFrac {
        // powers of a reduced fraction stay reduced
        let (f, den) = self.den.pow(k).integer_primitive();
        MFrac {
            num: self.num.pow(k).scale(&f.recip()),
            den,
        }
    }
}

impl From<MPoly> for MFrac {
    fn from(p: MPoly) -> Self {
        MFrac {
            num: p,
            den: MPoly::one(),
        }
    }
}

impl Add for &MFrac {
    type Output = MFrac;
    fn add(self, rhs: &MFrac) -> MFrac {
        if self.den == rhs.den {
            return MFrac::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        if rhs.den.constant_value().is_some_and(|c| c.is_one()) {
            return MFrac::new(&self.num + &(&rhs.num * &self.den), self.den.clone()).unwrap();
        }
        if self.den.constant_value().is_some_and(|c| c.is_one()) {
            return MFrac::new(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone()).unwrap();
        }
        let g = gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        MFrac::new(num, &a * &rhs.den).unwrap()
    }
}

impl Neg for &MFrac {
    type Output = MFrac;
    fn neg(self) -> MFrac {
        MFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &MFrac {
    type Output = MFrac;
    fn sub(self, rhs: &MFrac) -> MFrac {
        self + &(-rhs)
    }
}

impl Mul for &MFrac {
    type Output = MFrac;
    fn mul(self, rhs: &MFrac) -> MFrac {
        if self.is_zero() || rhs.is_zero() {
            return MFrac::zero();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let (f, den) = (&d1 * &d2).integer_primitive();
        MFrac {
            num: (&n1 * &n2).scale(&f.recip()),
            den,
        }
    }
}

impl Div for &MFrac {
    type Output = Result<MFrac>;
    fn div(self, rhs: &MFrac) -> Result<MFrac> {
        Ok(self * &rhs.recip()?)
    }
}

impl Add for MFrac {
    type Output = MFrac;
    fn add(self, rhs: MFrac) -> MFrac {
        &self + &rhs
    }
}

impl Sub for MFrac {
    type Output = MFrac;
    fn sub(self, rhs: MFrac) -> MFrac {
        &self - &rhs
    }
}

impl Mul for MFrac {
    type Output = MFrac;
    fn mul(self, rhs: MFrac) -> MFrac {
        &self * &rhs
    }
}

impl fmt::Display for MFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl fmt::Debug for MFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
