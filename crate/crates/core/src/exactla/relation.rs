//! Rank of the additive group generated by finitely many complex numbers.
//!
//! The group is torsion-free, so its rank is the dimension of the Q-span of the
//! generators. For rational inputs this is decided exactly. Otherwise integer
//! relations are searched with LLL on the lattice spanned by
//! `(e_i, N Re x_i, N Im x_i)`; a reduced vector whose numeric tail vanishes to
//! working precision and whose integer head stays under the height bound is
//! accepted as a relation. Absence of a relation is never a proof.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{Cx, LinalgError, Rational};

/// A generator: exact rational, or a complex approximation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanValue {
    Rational(Rational),
    Approx(Cx),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certainty {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRank {
    pub rank: usize,
    /// Independent integer relations, each indexed like the input.
    pub relations: Vec<Vec<BigInt>>,
    pub certainty: Certainty,
}

/// Bits of slack between the accepted residual and the working precision.
fn relation_threshold_log2(precision: u32) -> f64 {
    -f64::from(precision) / 2.0
}

pub fn q_linear_rank(values: &[SpanValue], precision: u32, height_bound: u64) -> Result<QRank, LinalgError> {
    let k = values.len();
    if values.iter().all(|v| matches!(v, SpanValue::Rational(_))) {
        return Ok(exact_rank(values));
    }
    let wp = precision.max(64);
    let approx: Vec<Cx> = values
        .iter()
        .map(|v| match v {
            SpanValue::Rational(r) => Cx::from_rational(r, wp),
            SpanValue::Approx(z) => z.with_prec(wp),
        })
        .collect();
    let zero_tol = relation_threshold_log2(wp);
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let unit = |i: usize, j: Option<(usize, i64)>| {
        let mut r = vec![BigInt::zero(); k];
        r[i] = BigInt::one();
        if let Some((j, c)) = j {
            r[j] = BigInt::from(c);
        }
        r
    };

    // zeros, duplicates and negations are settled before the lattice search
    let mut kept: Vec<usize> = Vec::new();
    'outer: for i in 0..k {
        if approx[i].log2_abs() < zero_tol {
            relations.push(unit(i, None));
            continue;
        }
        for &j in &kept {
            if approx[i].sub(&approx[j]).log2_abs() < zero_tol {
                relations.push(unit(i, Some((j, -1))));
                continue 'outer;
            }
            if approx[i].add(&approx[j]).log2_abs() < zero_tol {
                relations.push(unit(i, Some((j, 1))));
                continue 'outer;
            }
        }
        kept.push(i);
    }

    let m = kept.len();
    if m >= 2 {
        let real_only = kept.iter().all(|&i| approx[i].im.is_zero());
        let tail = if real_only { 1 } else { 2 };
        let log_h = (height_bound.max(2) as f64).log2();
        let needed = (m as f64 * (log_h + 8.0) / tail as f64).ceil() as u32 + 16;
        if wp < needed {
            return Err(LinalgError::PrecisionTooLow { precision: wp, height_bound, count: m, needed });
        }
        let scale_bits = wp - 8;
        let mut basis: Vec<Vec<BigInt>> = kept
            .iter()
            .enumerate()
            .map(|(row, &i)| {
                let mut v = vec![BigInt::zero(); m + tail];
                v[row] = BigInt::one();
                v[m] = approx[i].re.with_prec(wp).mantissa() >> (wp - scale_bits);
                if tail == 2 {
                    v[m + 1] = approx[i].im.with_prec(wp).mantissa() >> (wp - scale_bits);
                }
                v
            })
            .collect();
        lll_reduce(&mut basis, 99, 100);

        let accept = relation_threshold_log2(wp);
        let ambiguous = -f64::from(wp) / 4.0;
        let bound = BigInt::from(height_bound);
        for v in &basis {
            let coeffs = &v[..m];
            if coeffs.iter().all(Zero::is_zero) {
                continue;
            }
            let height = coeffs.iter().map(|c| c.abs()).max().unwrap();
            if height > bound {
                continue;
            }
            let mut resid = Cx::zero(wp);
            let mut l1 = 0.0;
            for (c, &i) in coeffs.iter().zip(&kept) {
                if c.is_zero() {
                    continue;
                }
                let ci = c.to_i64().expect("height bound fits in i64");
                resid = resid.add(&approx[i].mul_int(ci));
                l1 += (ci as f64).abs();
            }
            let r = resid.log2_abs();
            if r < accept + l1.log2() {
                let mut rel = vec![BigInt::zero(); k];
                for (c, &i) in coeffs.iter().zip(&kept) {
                    rel[i] = c.clone();
                }
                relations.push(rel);
            } else if r < ambiguous {
                return Err(LinalgError::PrecisionTooLow { precision: wp, height_bound, count: m, needed: 2 * wp });
            }
        }
    }
    let rank = k - relations.len();
    Ok(QRank { rank, relations, certainty: Certainty::Heuristic })
}

fn exact_rank(values: &[SpanValue]) -> QRank {
    let k = values.len();
    let rats: Vec<&Rational> = values
        .iter()
        .map(|v| match v {
            SpanValue::Rational(r) => r,
            SpanValue::Approx(_) => unreachable!(),
        })
        .collect();
    let mut relations = Vec::new();
    let first = rats.iter().position(|r| !r.is_zero());
    for (i, r) in rats.iter().enumerate() {
        let mut rel = vec![BigInt::zero(); k];
        match first {
            Some(f) if i == f => continue,
            Some(f) if !r.is_zero() => {
                let ratio = *r / rats[f];
                rel[f] = ratio.numer().clone();
                rel[i] = -ratio.denom().clone();
            }
            _ => rel[i] = BigInt::one(),
        }
        relations.push(rel);
    }
    QRank { rank: usize::from(first.is_some()), relations, certainty: Certainty::Exact }
}

/// Integral LLL reduction (all Gram–Schmidt data kept as integers), with
/// Lovász constant `delta_num / delta_den`. The rows must be linearly independent.
#[allow(clippy::needless_range_loop)]
pub(crate) fn lll_reduce(b: &mut [Vec<BigInt>], delta_num: i64, delta_den: i64) {
    let n = b.len();
    if n < 2 {
        return;
    }
    let dot = |x: &[BigInt], y: &[BigInt]| x.iter().zip(y).fold(BigInt::zero(), |acc, (a, c)| acc + a * c);
    // d[0] = 1, d[i+1] = det of Gram matrix of first i+1 vectors
    let mut d: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut lam: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    d[0] = BigInt::one();
    d[1] = dot(&b[0], &b[0]);
    let mut k = 1usize;
    let mut kmax = 0usize;

    let red = |b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize| {
        let two_lam: BigInt = &lam[k][l] * 2;
        if two_lam.abs() > d[l + 1] {
            // nearest integer to lam / d
            let num = &two_lam + &d[l + 1];
            let den: BigInt = &d[l + 1] * 2;
            let q = num_integer::Integer::div_floor(&num, &den);
            let (head, tail) = b.split_at_mut(k);
            for (x, y) in tail[0].iter_mut().zip(&head[l]) {
                *x -= &q * y;
            }
            lam[k][l] -= &q * &d[l + 1];
            for i in 0..l {
                let t = &q * &lam[l][i];
                lam[k][i] -= t;
            }
        }
    };

    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    d[k + 1] = u;
                    assert!(!d[k + 1].is_zero(), "LLL input rows are linearly dependent");
                }
            }
        }
        red(b, &mut lam, &d, k, k - 1);
        // Lovász: delta d_{k-1}^2 <= d_k d_{k-2} + lam^2   (1-based d)
        let lhs = BigInt::from(delta_num) * &d[k] * &d[k];
        let rhs = BigInt::from(delta_den) * (&d[k + 1] * &d[k - 1] + &lam[k][k - 1] * &lam[k][k - 1]);
        if lhs > rhs {
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = lam[k - 1][j].clone();
                lam[k - 1][j] = t;
            }
            let l = lam[k][k - 1].clone();
            let bb = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
                lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k + 1];
            }
            d[k] = bb;
            if k > 1 {
                k -= 1;
            }
        } else {
            for l in (0..k - 1).rev() {
                red(b, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, Fx};

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rational_inputs_have_rank_one() {
        let vals: Vec<SpanValue> = [1, 2, 3].iter().map(|&x| SpanValue::Rational(q(x))).collect();
        let r = q_linear_rank(&vals, 256, 1_000_000).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.relations, vec![b(&[2, -1, 0]), b(&[3, 0, -1])]);
        assert_eq!(r.certainty, Certainty::Exact);
    }

    #[test]
    fn empty_input_has_rank_zero() {
        let r = q_linear_rank(&[], 256, 1_000_000).unwrap();
        assert_eq!(r.rank, 0);
        assert!(r.relations.is_empty());
    }

    #[test]
    fn one_and_sqrt_two_are_independent() {
        let p = 256;
        let sqrt2 = Fx::from_int(2, p).sqrt();
        let vals = vec![SpanValue::Rational(q(1)), SpanValue::Approx(Cx::real(sqrt2))];
        let r = q_linear_rank(&vals, p, 1_000_000).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.relations.is_empty());
        assert_eq!(r.certainty, Certainty::Heuristic);
    }

    #[test]
    fn finds_hidden_relation() {
        let p = 256;
        let s2 = Fx::from_int(2, p).sqrt();
        let s3 = Fx::from_int(3, p).sqrt();
        // x3 = 5 x1 - 7 x2 with x1 = sqrt2, x2 = sqrt3
        let x3 = s2.mul_int(5).sub(&s3.mul_int(7));
        let vals = vec![SpanValue::Approx(Cx::real(s2)), SpanValue::Approx(Cx::real(s3)), SpanValue::Approx(Cx::real(x3))];
        let r = q_linear_rank(&vals, p, 1_000_000).unwrap();
        assert_eq!(r.rank, 2);
        assert_eq!(r.relations.len(), 1);
        let rel = &r.relations[0];
        let sign = if rel[2].is_positive() { 1 } else { -1 };
        assert_eq!(rel.iter().map(|c| c * sign).collect::<Vec<_>>(), b(&[-5, 7, 1]));
    }

    #[test]
    fn conjugate_pair_of_imaginary_values() {
        let p = 256;
        let two_i = Cx::new(Fx::zero(p), Fx::from_int(2, p));
        let vals = vec![SpanValue::Approx(two_i.clone()), SpanValue::Approx(two_i.conj())];
        assert_eq!(q_linear_rank(&vals, p, 1_000_000).unwrap().rank, 1);
    }

    #[test]
    fn low_precision_is_reported() {
        let p = 64;
        let vals: Vec<SpanValue> =
            (2..12).map(|n| SpanValue::Approx(Cx::real(Fx::from_int(n, p).sqrt()))).collect();
        assert!(matches!(q_linear_rank(&vals, p, 1_000_000), Err(LinalgError::PrecisionTooLow { .. })));
    }

    #[test]
    fn lll_reduces_a_textbook_basis() {
        let mut basis = vec![b(&[1, 1, 1]), b(&[-1, 0, 2]), b(&[3, 5, 6])];
        lll_reduce(&mut basis, 3, 4);
        let norms: Vec<i64> = basis.iter().map(|v| v.iter().map(|x| (x * x).to_i64().unwrap()).sum()).collect();
        assert!(norms[0] <= 3);
    }
}
