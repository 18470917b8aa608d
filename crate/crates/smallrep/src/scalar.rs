//! Exact scalar arithmetic.
//!
//! Everything in this crate computes over exact fields: arbitrary-precision
//! rationals, or rational functions in one formal parameter `k` for runs
//! where the multiplicity parameter is left symbolic. Linear algebra and
//! polynomial code is generic over [`Scalar`] so both modes share one
//! implementation. There is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (guaranteed by `num-rational`).
pub type Rat = BigRational;

/// `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical `p/q` rendering. The denominator is always printed, so `3`
/// serializes as `"3/1"`; parsing accepts both forms.
pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` or a plain integer `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| format!("bad rational `{s}`"))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| format!("bad rational `{s}`"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rat::new(p, q))
}

/// An exact field the algebra runs over. Implemented by [`Rat`] and by
/// [`KRat`] (rational functions in the symbol `k`).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&rint(n))
    }

    /// Multiplicative inverse. Panics on zero, like division.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Univariate polynomial over `Rat`, coefficients ascending, no trailing
/// zeros. Only used as the building block of [`KRat`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(vec![])
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The variable `k`.
    pub fn var() -> Self {
        UPoly(vec![rint(0), rint(1)])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    fn leading(&self) -> &Rat {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = other.0.get(i).cloned().unwrap_or_else(Rat::zero);
            out.push(a + b);
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.0.len().saturating_sub(div.0.len() - 1)];
        while !rem.is_zero() && rem.0.len() >= div.0.len() {
            let shift = rem.0.len() - div.0.len();
            let c = rem.leading() / div.leading();
            quo[shift] = c.clone();
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(div.0.iter().map(|d| d * &c));
            rem = rem.sub(&UPoly::new(sub));
        }
        (Self::new(quo), rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.scale(&a.leading().recip())
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => {
                    if !unit_coeff {
                        write!(f, "*")?;
                    }
                    write!(f, "k")?;
                }
                _ => {
                    if !unit_coeff {
                        write!(f, "*")?;
                    }
                    write!(f, "k^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Rational function in the formal parameter `k`: a reduced fraction of
/// univariate polynomials with monic denominator.
#[derive(Clone, PartialEq, Debug)]
pub struct KRat {
    num: UPoly,
    den: UPoly,
}

impl KRat {
    fn reduced(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return KRat {
                num,
                den: UPoly::constant(rint(1)),
            };
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).0;
        let den = den.divrem(&g).0;
        let lead = den.leading().recip();
        KRat {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    /// The symbol `k` itself.
    pub fn k() -> Self {
        KRat {
            num: UPoly::var(),
            den: UPoly::constant(rint(1)),
        }
    }

    pub fn constant(c: Rat) -> Self {
        KRat {
            num: UPoly::constant(c),
            den: UPoly::constant(rint(1)),
        }
    }

    /// Specialize the symbol to a rational value. Errors (None) if the
    /// denominator vanishes there.
    pub fn eval(&self, k: &Rat) -> Option<Rat> {
        let d = self.den.eval(k);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(k) / d)
        }
    }

    pub fn numer(&self) -> &UPoly {
        &self.num
    }

    pub fn denom(&self) -> &UPoly {
        &self.den
    }
}

impl fmt::Display for KRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den_is_one = self.den == UPoly::constant(rint(1));
        if den_is_one {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for KRat {
    type Output = KRat;
    fn add(self, rhs: Self) -> Self {
        KRat::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for KRat {
    type Output = KRat;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for KRat {
    type Output = KRat;
    fn mul(self, rhs: Self) -> Self {
        KRat::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for KRat {
    type Output = KRat;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        KRat::reduced(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for KRat {
    type Output = KRat;
    fn neg(self) -> Self {
        KRat {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Zero for KRat {
    fn zero() -> Self {
        KRat::constant(rint(0))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for KRat {
    fn one() -> Self {
        KRat::constant(rint(1))
    }
}

impl Scalar for KRat {
    fn from_rat(r: &Rat) -> Self {
        KRat::constant(r.clone())
    }
}
