use serde::Serialize;

use super::{SpectralConfig, SpectralError, SpectralRank};
use crate::exactla::{clustered_roots, q_linear_rank, Certainty, Cx, Fx, LinalgError, PolyQ, Rational, SpanValue};
use crate::liecore::LieAlgebra;

/// The direction `X = sum_k c_k a^(k+1) e_k`, where `a > 1` is the real root
/// of `t^degree - t - 1`. That polynomial is irreducible, so with
/// `degree > dim` the coordinates are linearly independent over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraicDirection {
    pub coeffs: Vec<i64>,
    pub degree: usize,
}

impl AlgebraicDirection {
    pub fn minimal_polynomial(&self) -> PolyQ {
        let mut c = vec![0i64; self.degree + 1];
        c[0] = -1;
        c[1] = -1;
        c[self.degree] = 1;
        PolyQ::from_i64(&c)
    }

    pub fn describe(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        format!("x_k = c_k a^k with a^{} = a + 1, a > 1, c = [{}]", self.degree, cs.join(", "))
    }

    /// Coordinates to `wp` bits.
    pub fn numeric(&self, wp: u32) -> Vec<Fx> {
        let a = selmer_root(self.degree, wp);
        let mut pow = a.clone();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(pow.mul_int(c));
            pow = pow.mul(&a);
        }
        out
    }
}

/// Real root `> 1` of `t^d - t - 1` by bisection in `f64` and Newton in fixed point.
fn selmer_root(d: usize, wp: u32) -> Fx {
    let f = |t: f64| t.powi(d as i32) - t - 1.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut t = Fx::from_f64(0.5 * (lo + hi), wp);
    let one = Fx::from_int(1, wp);
    let iterations = 2 + (f64::from(wp) / 50.0).log2().max(0.0).ceil() as usize + 2;
    for _ in 0..iterations {
        let mut p = one.clone();
        for _ in 0..d - 1 {
            p = p.mul(&t);
        }
        // p = t^(d-1)
        let val = p.mul(&t).sub(&t).sub(&one);
        let der = p.mul_int(d as i64).sub(&one);
        t = t.sub(&val.div(&der).expect("derivative is positive near the root"));
    }
    t
}

/// Characteristic polynomial (monic, low degree first) by Faddeev–LeVerrier.
fn charpoly_fl(a: &[Vec<Fx>], wp: u32) -> Vec<Fx> {
    let n = a.len();
    let mut c = vec![Fx::zero(wp); n + 1];
    c[n] = Fx::from_int(1, wp);
    let mut m: Vec<Vec<Fx>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Fx::from_int(1, wp) } else { Fx::zero(wp) }).collect())
        .collect();
    for k in 1..=n {
        let am: Vec<Vec<Fx>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Fx::zero(wp), |acc, l| if a[i][l].is_zero() { acc } else { acc.add(&a[i][l].mul(&m[l][j])) }))
                    .collect()
            })
            .collect();
        let tr = (0..n).fold(Fx::zero(wp), |acc, i| acc.add(&am[i][i]));
        let ck = tr.neg().mul_rational(&Rational::new(1.into(), (k as i64).into()));
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = row[i].add(&ck);
        }
        c[n - k] = ck;
    }
    c
}

/// Nonzero eigenvalues of `ad X` at an algebraic direction, as cluster means
/// with their realness decided to working precision.
fn eigenvalues(l: &LieAlgebra, dir: &AlgebraicDirection, prec: u32) -> Result<Vec<Cx>, SpectralError> {
    let n = l.dim();
    let wp = 2 * prec + 64 + 8 * n as u32;
    let x = dir.numeric(wp);
    let mut a = vec![vec![Fx::zero(wp); n]; n];
    for (i, xi) in x.iter().enumerate() {
        for col in 0..n {
            for (k, c) in l.basis_bracket(i, col) {
                let row = &mut a[*k];
                row[col] = row[col].add(&xi.mul_rational(c));
            }
        }
    }
    let cp = charpoly_fl(&a, wp);
    // an exact zero eigenvalue of multiplicity k shows up as k vanishing low coefficients
    let tiny = -f64::from(wp) / 2.0;
    let zeros = cp.iter().take_while(|c| c.log2_abs() < tiny).count();
    let rest: Vec<Cx> = cp[zeros..].iter().map(|c| Cx::real(c.clone())).collect();
    if rest.len() <= 1 {
        return Ok(Vec::new());
    }
    let clusters = clustered_roots(&rest, wp, -f64::from(wp) / 8.0)
        .ok_or(SpectralError::Linalg(LinalgError::IsolationFailed { precision: wp }))?;
    let real_tol = -f64::from(wp) / 4.0;
    Ok(clusters
        .into_iter()
        .map(|(z, _, _)| if z.im.log2_abs() < real_tol { Cx::real(z.re) } else { z })
        .collect())
}

/// Spectral ranks of `ad X` at an algebraic direction. Always heuristic.
pub fn numeric_spectral_rank(
    l: &LieAlgebra,
    dir: &AlgebraicDirection,
    cfg: &SpectralConfig,
) -> Result<SpectralRank, SpectralError> {
    let mut prec = cfg.precision.max(64);
    loop {
        let eig = eigenvalues(l, dir, prec)?;
        let all: Vec<SpanValue> = eig.iter().map(|z| SpanValue::Approx(z.clone())).collect();
        let nonreal: Vec<SpanValue> =
            eig.iter().filter(|z| !z.im.is_zero()).map(|z| SpanValue::Approx(z.clone())).collect();
        let res = q_linear_rank(&all, prec, cfg.height_bound)
            .and_then(|r| Ok((r, q_linear_rank(&nonreal, prec, cfg.height_bound)?)));
        match res {
            Ok((r, nr)) => return Ok(SpectralRank { r: r.rank, r_nr: nr.rank, certainty: Certainty::Heuristic }),
            Err(LinalgError::PrecisionTooLow { .. }) if prec * 2 <= cfg.max_precision.max(cfg.precision) => {
                prec *= 2
            }
            Err(e) => return Err(e.into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, parse_expression};

    #[test]
    fn selmer_root_satisfies_its_equation() {
        let wp = 300;
        let a = selmer_root(5, wp);
        let a5 = a.mul(&a).mul(&a).mul(&a).mul(&a);
        assert!(a5.sub(&a).sub(&Fx::from_int(1, wp)).log2_abs() < -250.0);
    }

    #[test]
    fn fl_charpoly_matches_exact() {
        let l = build(&parse_expression("sl(2,R)").unwrap()).unwrap();
        let wp = 200;
        // X = e - f
        let ad = l.ad_matrix(&[crate::exactla::q(0), crate::exactla::q(1), crate::exactla::q(-1)]);
        let a: Vec<Vec<Fx>> =
            (0..3).map(|i| (0..3).map(|j| Fx::from_rational(ad.get(i, j), wp)).collect()).collect();
        let cp = charpoly_fl(&a, wp);
        let exact = ad.charpoly().unwrap();
        for (x, y) in cp.iter().zip(exact.coeffs()) {
            assert!(x.sub(&Fx::from_rational(y, wp)).log2_abs() < -190.0);
        }
    }

    #[test]
    fn generic_diagonal_in_st4_has_rank_three() {
        let l = build(&parse_expression("st(4,R)").unwrap()).unwrap();
        let dir = AlgebraicDirection { coeffs: vec![1; l.dim()], degree: l.dim() + 1 };
        let r = numeric_spectral_rank(&l, &dir, &SpectralConfig::default()).unwrap();
        assert_eq!((r.r, r.r_nr), (3, 0));
    }
}
