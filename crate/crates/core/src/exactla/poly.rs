use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_rational, q, LinalgError, Rational};

/// Univariate polynomial over Q, coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![Rational::one()] }
    }

    /// `t - r`
    pub fn linear(root: &Rational) -> Self {
        Self::from_coeffs(vec![-root.clone(), Rational::one()])
    }

    pub fn monomial(deg: usize) -> Self {
        let mut c = vec![Rational::zero(); deg + 1];
        c[deg] = Rational::one();
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::zero();
        Self::from_coeffs(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.divrem(self).1.is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients. Sign
    /// patterns are preserved, which is what Sturm chains need.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let den_lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Self::from_coeffs(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    /// Yun's algorithm: returns `(a_k, k)` with `self = lc * prod a_k^k`, every
    /// `a_k` monic, square-free and pairwise coprime. Constant factors are skipped.
    pub fn square_free_decomposition(&self) -> Result<Vec<(PolyQ, usize)>, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.divrem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        Ok(out)
    }

    pub fn square_free_part(&self) -> Result<PolyQ, LinalgError> {
        Ok(self
            .square_free_decomposition()?
            .into_iter()
            .fold(PolyQ::one(), |acc, (a, _)| acc.mul(&a)))
    }

    /// Number of distinct real roots, by a Sturm chain on the square-free part.
    pub fn sturm_count(&self) -> Result<usize, LinalgError> {
        let p = self.square_free_part()?;
        let Some(deg) = p.degree() else { return Err(LinalgError::ZeroPolynomial) };
        if deg == 0 {
            return Ok(0);
        }
        let mut chain = vec![p.primitive(), p.derivative().primitive()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].divrem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&q(-1)).primitive());
        }
        let sign_changes = |signs: Vec<i8>| signs.windows(2).filter(|w| w[0] != w[1]).count();
        let at_pos: Vec<i8> = chain.iter().map(|c| sign_of(c.leading().unwrap())).collect();
        let at_neg: Vec<i8> = chain
            .iter()
            .map(|c| {
                let s = sign_of(c.leading().unwrap());
                if c.degree().unwrap() % 2 == 1 { -s } else { s }
            })
            .collect();
        Ok(sign_changes(at_neg) - sign_changes(at_pos))
    }

    /// Largest `k` with `t^k | self`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Rational `D > 0` such that `D^deg * p(t / D)` is an integer polynomial when
    /// `p` is monic. Roots of `p` scaled by `D` are then algebraic integers.
    pub fn integrality_scale(&self) -> BigInt {
        self.monic().coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&abs))?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_examples() {
        assert_eq!(PolyQ::from_i64(&[-2, 0, 1]).sturm_count().unwrap(), 2);
        assert_eq!(PolyQ::from_i64(&[1, 0, 1]).sturm_count().unwrap(), 0);
        assert_eq!(PolyQ::from_i64(&[0, -4, 0, 1]).sturm_count().unwrap(), 3);
        // (t-1)^3 (t^2+1): one distinct real root
        let p = PolyQ::from_i64(&[-1, 1]).pow(3).mul(&PolyQ::from_i64(&[1, 0, 1]));
        assert_eq!(p.sturm_count().unwrap(), 1);
        assert_eq!(PolyQ::zero().sturm_count(), Err(LinalgError::ZeroPolynomial));
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let a = PolyQ::from_i64(&[-1, 1]);
        let b = PolyQ::from_i64(&[2, 0, 1]);
        let p = a.pow(3).mul(&b).scale(&q(5));
        let dec = p.square_free_decomposition().unwrap();
        assert_eq!(dec, vec![(b, 1), (a, 3)]);
    }

    #[test]
    fn divrem_reconstructs() {
        let a = PolyQ::from_i64(&[3, -1, 4, 1, -5]);
        let d = PolyQ::from_i64(&[1, 2, 7]);
        let (qq, r) = a.divrem(&d);
        assert_eq!(qq.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn display() {
        assert_eq!(PolyQ::from_i64(&[0, -4, 0, 1]).to_string(), "t^3 - 4t");
        assert_eq!(PolyQ::from_i64(&[1, -2, 1]).to_string(), "t^2 - 2t + 1");
    }
}
