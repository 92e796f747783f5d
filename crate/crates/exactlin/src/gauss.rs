//! Gaussian rationals `a + b·i` with `a, b ∈ Q`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::rat::{ParseRatError, Rat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::default()
    }

    pub fn one() -> Self {
        GaussRational::from_int(1)
    }

    pub fn i() -> Self {
        GaussRational::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(Rat::from_int(n), Rat::zero())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRational::new(Rat::from_int(re), Rat::from_int(im))
    }

    pub fn from_rat(r: Rat) -> Self {
        GaussRational::new(r, Rat::zero())
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        GaussRational::from_rat(Rat::new(n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), self.im.neg())
    }

    /// `|z|² = re² + im²`.
    pub fn norm(&self) -> Rat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        if self.im.is_zero() {
            return GaussRational::from_rat(self.re.inv());
        }
        let n = self.norm().inv();
        GaussRational::new(self.re.mul(&n), self.im.neg().mul(&n))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRational::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn mul_i(&self) -> Self {
        GaussRational::new(self.im.neg(), self.re.clone())
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(self.re.add(&o.re), self.im.add(&o.im))
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational::from_rat(self.re.mul(&o.re));
        }
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        GaussRational::new(re, im)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn div(self, o: &GaussRational) -> GaussRational {
        self * &o.inv()
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(self.re.neg(), self.im.neg())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, o: GaussRational) -> GaussRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, o: &GaussRational) -> GaussRational {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -&self
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, o: &GaussRational) {
        *self = &*self + o;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, o: &GaussRational) {
        *self = &*self - o;
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl From<Rat> for GaussRational {
    fn from(r: Rat) -> Self {
        GaussRational::from_rat(r)
    }
}

impl fmt::Display for GaussRational {
    /// Prints `a`, `bi`, `a+bi` or `a-bi`; unit imaginary parts print as `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_str = |im: &Rat| -> String {
            if im.is_one() {
                "i".to_string()
            } else if *im == Rat::from_int(-1) {
                "-i".to_string()
            } else {
                format!("{im}i")
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", im_str(&self.im))
        } else if self.im.signum() > 0 {
            write!(f, "{}+{}", self.re, im_str(&self.im))
        } else {
            write!(f, "{}{}", self.re, im_str(&self.im))
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRational {
    type Err = ParseRatError;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, `a+i`, with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussRational::from_rat(t.parse().map_err(|_| err())?));
        };
        // split the imaginary term off at the last sign not in leading position
        let split = body.char_indices().filter(|&(k, c)| k > 0 && (c == '+' || c == '-')).map(|(k, _)| k).next_back();
        let (re_s, im_s) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im = match im_s {
            "" | "+" => Rat::one(),
            "-" => Rat::from_int(-1),
            other => other.trim_start_matches('+').parse().map_err(|_| err())?,
        };
        let re = if re_s.is_empty() { Rat::zero() } else { re_s.parse().map_err(|_| err())? };
        Ok(GaussRational::new(re, im))
    }
}
