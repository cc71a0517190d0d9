use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

/// Binary fixed-point real: the value is `mant * 2^-prec`.
///
/// All arithmetic rounds to nearest. Operands must share the same precision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fx {
    mant: BigInt,
    prec: u32,
}

fn round_shr(x: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        return x.clone();
    }
    let half = BigInt::from(1) << (bits - 1);
    if x.is_negative() {
        -((-x + &half) >> bits)
    } else {
        (x + &half) >> bits
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    if (r.abs() << 1) >= d.abs() {
        if (n.sign() == Sign::Minus) != (d.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl Fx {
    pub fn zero(prec: u32) -> Self {
        Self { mant: BigInt::zero(), prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Self { mant: BigInt::from(n) << prec, prec }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Self { mant: round_div(&(r.numer() << prec), r.denom()), prec }
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        Self::from_rational(&Rational::from_float(x).unwrap_or_default(), prec)
    }

    pub fn from_mantissa(mant: BigInt, prec: u32) -> Self {
        Self { mant, prec }
    }

    /// `2^e` (e may be negative).
    pub fn pow2(e: i64, prec: u32) -> Self {
        let shift = e + i64::from(prec);
        if shift < 0 {
            return Self::zero(prec);
        }
        Self { mant: BigInt::from(1) << shift as u64, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self { mant: &self.mant << (prec - self.prec), prec },
            Ordering::Less => Self { mant: round_shr(&self.mant, self.prec - prec), prec },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Self { mant: &self.mant + &o.mant, prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Self { mant: &self.mant - &o.mant, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Self { mant: -&self.mant, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), prec: self.prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Self { mant: round_shr(&(&self.mant * &o.mant), self.prec), prec: self.prec }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self { mant: &self.mant * k, prec: self.prec }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        Self { mant: round_div(&(&self.mant * r.numer()), r.denom()), prec: self.prec }
    }

    /// Division; `None` when the divisor rounds to zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        debug_assert_eq!(self.prec, o.prec);
        if o.mant.is_zero() {
            return None;
        }
        Some(Self { mant: round_div(&(&self.mant << self.prec), &o.mant), prec: self.prec })
    }

    /// Floor of the square root of a non-negative value.
    pub fn sqrt(&self) -> Self {
        assert!(!self.mant.is_negative(), "square root of a negative value");
        Self { mant: (&self.mant << self.prec).sqrt(), prec: self.prec }
    }

    /// Nearest integer.
    pub fn round(&self) -> BigInt {
        round_shr(&self.mant, self.prec)
    }

    /// Approximate base-2 logarithm of the magnitude; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.mant.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits();
        let keep = 60u64.min(bits);
        let top = (self.mant.abs() >> (bits - keep)).to_f64().unwrap_or(1.0);
        top.log2() + (bits - keep) as f64 - f64::from(self.prec)
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let l = self.log2_abs();
        let s = if self.mant.is_negative() { -1.0 } else { 1.0 };
        s * l.exp2()
    }

    /// The exact rational value of this approximation.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::from(1) << self.prec)
    }
}

impl PartialOrd for Fx {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fx {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.prec, other.prec);
        self.mant.cmp(&other.mant)
    }
}

impl fmt::Display for Fx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.20e}", self.to_f64())
    }
}

/// Complex fixed-point number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cx {
    pub re: Fx,
    pub im: Fx,
}

impl Cx {
    pub fn new(re: Fx, im: Fx) -> Self {
        debug_assert_eq!(re.prec, im.prec);
        Self { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Self { re: Fx::zero(prec), im: Fx::zero(prec) }
    }

    pub fn real(re: Fx) -> Self {
        let p = re.prec;
        Self { re, im: Fx::zero(p) }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        Self::real(Fx::from_rational(r, prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Self { re: Fx::from_f64(re, prec), im: Fx::from_f64(im, prec) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        Self { re: self.re.with_prec(prec), im: self.im.with_prec(prec) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> Self {
        Self { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec();
        let rr = &self.re.mant * &o.re.mant - &self.im.mant * &o.im.mant;
        let ii = &self.re.mant * &o.im.mant + &self.im.mant * &o.re.mant;
        Self { re: Fx { mant: round_shr(&rr, p), prec: p }, im: Fx { mant: round_shr(&ii, p), prec: p } }
    }

    pub fn scale(&self, s: &Fx) -> Self {
        Self { re: self.re.mul(s), im: self.im.mul(s) }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self { re: self.re.mul_int(k), im: self.im.mul_int(k) }
    }

    /// `|z|^2`
    pub fn norm_sq(&self) -> Fx {
        let p = self.prec();
        Fx { mant: round_shr(&(&self.re.mant * &self.re.mant + &self.im.mant * &self.im.mant), p), prec: p }
    }

    pub fn abs(&self) -> Fx {
        self.norm_sq().sqrt()
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        let p = self.prec();
        let den = &o.re.mant * &o.re.mant + &o.im.mant * &o.im.mant;
        if den.is_zero() {
            return None;
        }
        let rr = &self.re.mant * &o.re.mant + &self.im.mant * &o.im.mant;
        let ii = &self.im.mant * &o.re.mant - &self.re.mant * &o.im.mant;
        Some(Self {
            re: Fx { mant: round_div(&(rr << p), &den), prec: p },
            im: Fx { mant: round_div(&(ii << p), &den), prec: p },
        })
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `log2 |z|`, `-inf` at zero.
    pub fn log2_abs(&self) -> f64 {
        let n = self.norm_sq();
        if n.is_zero() {
            // below resolution of the square; fall back to the components
            return self.re.log2_abs().max(self.im.log2_abs());
        }
        n.log2_abs() / 2.0
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64();
        if im == 0.0 {
            write!(f, "{re:.12}")
        } else if im < 0.0 {
            write!(f, "{re:.12} - {:.12}i", -im)
        } else {
            write!(f, "{re:.12} + {im:.12}i")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::qf;

    #[test]
    fn arithmetic_is_close() {
        let p = 128;
        let a = Fx::from_rational(&qf(1, 3), p);
        let b = Fx::from_int(3, p);
        let prod = a.mul(&b);
        assert!(prod.sub(&Fx::from_int(1, p)).abs() <= Fx::pow2(-126, p));
        let two = Fx::from_int(2, p);
        let r = two.sqrt();
        assert!(r.mul(&r).sub(&two).abs() <= Fx::pow2(-120, p));
    }

    #[test]
    fn complex_division_inverts_multiplication() {
        let p = 96;
        let z = Cx::from_f64(1.5, -2.25, p);
        let w = Cx::from_f64(-0.5, 3.0, p);
        let back = z.mul(&w).div(&w).unwrap();
        assert!(back.sub(&z).abs() <= Fx::pow2(-80, p));
    }

    #[test]
    fn log2_of_powers() {
        let x = Fx::pow2(-40, 200);
        assert!((x.log2_abs() + 40.0).abs() < 1e-9);
    }
}
