//! Complex root isolation for rational polynomials.
//!
//! Each square-free factor from Yun's decomposition is solved by Aberth
//! iteration, first in `f64` for a starting configuration and then in binary
//! fixed point. Inclusion disks come from the Weierstrass correction bound: if
//! the disks `D(z_i, d |W_i|)` are pairwise disjoint, each holds exactly one
//! root. Disjointness is checked across all factors, so distinct roots are
//! separated globally.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Cx, Fx, LinalgError, PolyQ, Rational};

/// Default cap for precision doubling during isolation.
pub const DEFAULT_MAX_PRECISION: u32 = 1024;

const GUARD_BITS: u32 = 32;

/// One isolated root: the disk `|z - value| <= radius` contains exactly one
/// root of the polynomial, counted `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxRoot {
    pub value: Cx,
    pub radius: Fx,
    pub multiplicity: usize,
    /// Set when the root is rational; `value` then equals it to working precision and `radius` is zero.
    pub exact: Option<Rational>,
}

impl ApproxRoot {
    pub fn is_real(&self) -> bool {
        self.value.im.is_zero()
    }
}

/// Number of distinct real roots (Sturm count on the square-free part).
pub fn real_root_count(p: &PolyQ) -> Result<usize, LinalgError> {
    p.sturm_count()
}

pub fn complex_roots_default(p: &PolyQ, precision: u32) -> Result<Vec<ApproxRoot>, LinalgError> {
    complex_roots(p, precision, DEFAULT_MAX_PRECISION)
}

/// Isolates every complex root of `p` in a disk of radius at most
/// `2^(-precision/2)`, doubling the working precision up to `max_precision` when
/// the disks are not yet small or disjoint.
pub fn complex_roots(p: &PolyQ, precision: u32, max_precision: u32) -> Result<Vec<ApproxRoot>, LinalgError> {
    if p.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let precision = precision.max(64);
    let factors = p.square_free_decomposition()?;
    let mut wp = precision + GUARD_BITS;
    loop {
        match isolate_all(&factors, precision, wp) {
            Some(mut roots) => {
                roots.sort_by(|a, b| a.value.re.cmp(&b.value.re).then(a.value.im.cmp(&b.value.im)));
                // report at the requested precision plus guard bits
                return Ok(roots);
            }
            None if wp >= max_precision.max(precision) + GUARD_BITS => {
                return Err(LinalgError::IsolationFailed { precision: wp - GUARD_BITS });
            }
            None => wp = (2 * (wp - GUARD_BITS)).min(max_precision.max(precision)) + GUARD_BITS,
        }
    }
}

fn isolate_all(factors: &[(PolyQ, usize)], precision: u32, wp: u32) -> Option<Vec<ApproxRoot>> {
    let target = Fx::pow2(-i64::from(precision / 2), wp);
    let mut out: Vec<ApproxRoot> = Vec::new();
    for (factor, mult) in factors {
        let roots = isolate_factor(factor, *mult, wp)?;
        if roots.iter().any(|r| r.radius > target) {
            return None;
        }
        out.extend(roots);
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let gap = out[i].value.sub(&out[j].value).abs();
            if gap <= out[i].radius.add(&out[j].radius) {
                return None;
            }
        }
    }
    Some(out)
}

/// Roots of a monic square-free factor.
fn isolate_factor(f: &PolyQ, mult: usize, wp: u32) -> Option<Vec<ApproxRoot>> {
    let d = f.degree()?;
    if d == 1 {
        let r = -f.coeffs()[0].clone() / f.coeffs()[1].clone();
        return Some(vec![ApproxRoot {
            value: Cx::from_rational(&r, wp),
            radius: Fx::zero(wp),
            multiplicity: mult,
            exact: Some(r),
        }]);
    }
    let coeffs: Vec<Cx> = f.coeffs().iter().map(|c| Cx::from_rational(c, wp)).collect();
    let approx = aberth(&coeffs, wp, 60 + 8 * d)?;
    let radii = weierstrass_radii(&coeffs, &approx, wp)?;
    let real_count = f.sturm_count().ok()?;

    let mut idx: Vec<usize> = (0..d).collect();
    idx.sort_by(|&a, &b| approx[a].im.abs().cmp(&approx[b].im.abs()));
    let scale = f.integrality_scale();
    let mut roots = Vec::with_capacity(d);
    for &i in &idx[..real_count] {
        if approx[i].im.abs() > radii[i] {
            return None;
        }
        let re = approx[i].re.clone();
        let exact = rational_candidate(&re, &scale)
            .filter(|c| Fx::from_rational(c, wp).sub(&re).abs() <= radii[i] && f.eval(c).is_zero());
        let (value, radius) = match &exact {
            Some(c) => (Cx::from_rational(c, wp), Fx::zero(wp)),
            None => (Cx::real(re), radii[i].clone()),
        };
        roots.push(ApproxRoot { value, radius, multiplicity: mult, exact });
    }
    let nonreal: Vec<usize> = idx[real_count..].to_vec();
    let upper: Vec<usize> = nonreal.iter().copied().filter(|&i| !approx[i].im.is_negative()).collect();
    let lower: Vec<usize> = nonreal.iter().copied().filter(|&i| approx[i].im.is_negative()).collect();
    if upper.len() != lower.len() || upper.iter().any(|&i| approx[i].im.abs() <= radii[i]) {
        return None;
    }
    let mut used = vec![false; lower.len()];
    for &u in &upper {
        let target = approx[u].conj();
        let (best, _) = lower
            .iter()
            .enumerate()
            .filter(|(k, _)| !used[*k])
            .map(|(k, &l)| (k, approx[l].sub(&target).norm_sq()))
            .min_by(|a, b| a.1.cmp(&b.1))?;
        used[best] = true;
        let l = lower[best];
        let radius = radii[u].clone().max(radii[l].clone()).add(&approx[l].sub(&target).abs());
        roots.push(ApproxRoot { value: approx[u].clone(), radius: radius.clone(), multiplicity: mult, exact: None });
        roots.push(ApproxRoot { value: target, radius, multiplicity: mult, exact: None });
    }
    Some(roots)
}

/// Rational `round(D x) / D`; roots of a monic rational polynomial scaled by its
/// integrality scale `D` are algebraic integers, so any rational root has this form.
fn rational_candidate(x: &Fx, scale: &BigInt) -> Option<Rational> {
    let scaled = x.mul(&Fx::from_rational(&Rational::from_integer(scale.clone()), x.prec()));
    Some(Rational::new(scaled.round(), scale.clone()))
}

fn horner(coeffs: &[Cx], z: &Cx) -> (Cx, Cx) {
    let p = z.prec();
    let mut val = Cx::zero(p);
    let mut der = Cx::zero(p);
    for c in coeffs.iter().rev() {
        der = der.mul(z).add(&val);
        val = val.mul(z).add(c);
    }
    (val, der)
}

fn weierstrass_radii(coeffs: &[Cx], z: &[Cx], wp: u32) -> Option<Vec<Fx>> {
    let d = z.len();
    let lc = coeffs.last()?.clone();
    let slack = Fx::pow2(-i64::from(wp) + 24, wp);
    (0..d)
        .map(|i| {
            let (val, _) = horner(coeffs, &z[i]);
            let mut den = lc.clone();
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    den = den.mul(&z[i].sub(zj));
                }
            }
            let w = val.div(&den)?;
            Some(w.abs().mul_int(d as i64).add(&slack))
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn add(self, o: Self) -> Self {
        Self { re: self.re + o.re, im: self.im + o.im }
    }
    fn sub(self, o: Self) -> Self {
        Self { re: self.re - o.re, im: self.im - o.im }
    }
    fn mul(self, o: Self) -> Self {
        Self { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn div(self, o: Self) -> Self {
        let d = o.re * o.re + o.im * o.im;
        Self { re: (self.re * o.re + self.im * o.im) / d, im: (self.im * o.re - self.re * o.im) / d }
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    fn finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Starting points from an `f64` Aberth run; falls back to a circle of radius
/// given by the Cauchy bound when `f64` overflows.
fn f64_start(coeffs: &[Cx]) -> Vec<C64> {
    let d = coeffs.len() - 1;
    let c: Vec<C64> = coeffs.iter().map(|z| C64 { re: z.re.to_f64(), im: z.im.to_f64() }).collect();
    let lc = c[d].abs();
    let bound = 1.0 + c[..d].iter().map(|x| x.abs() / lc).fold(0.0, f64::max);
    let geo = (c[0].abs() / lc).powf(1.0 / d as f64);
    let r0 = if geo.is_finite() && geo > 0.0 { geo.min(bound) } else { bound.min(1e6) };
    let mut z: Vec<C64> = (0..d)
        .map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
            C64 { re: r0 * a.cos(), im: r0 * a.sin() }
        })
        .collect();
    for _ in 0..400 {
        let mut max_step: f64 = 0.0;
        let snapshot = z.clone();
        for i in 0..d {
            let (mut v, mut dv) = (C64 { re: 0.0, im: 0.0 }, C64 { re: 0.0, im: 0.0 });
            for co in c.iter().rev() {
                dv = dv.mul(snapshot[i]).add(v);
                v = v.mul(snapshot[i]).add(*co);
            }
            if v.abs() == 0.0 {
                continue;
            }
            let n = v.div(dv);
            let mut s = C64 { re: 0.0, im: 0.0 };
            for j in 0..d {
                if j != i {
                    s = s.add(C64 { re: 1.0, im: 0.0 }.div(snapshot[i].sub(snapshot[j])));
                }
            }
            let w = n.div(C64 { re: 1.0, im: 0.0 }.sub(n.mul(s)));
            if !w.finite() {
                continue;
            }
            z[i] = snapshot[i].sub(w);
            max_step = max_step.max(w.abs() / (1.0 + z[i].abs()));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    if z.iter().all(|x| x.finite()) {
        z
    } else {
        (0..d)
            .map(|k| {
                let a = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
                C64 { re: a.cos(), im: a.sin() }
            })
            .collect()
    }
}

/// Aberth iteration in fixed point. Returns `None` if the iteration produced a
/// coincident pair (a division by zero).
pub(crate) fn aberth(coeffs: &[Cx], wp: u32, max_iter: usize) -> Option<Vec<Cx>> {
    let d = coeffs.len() - 1;
    let start = f64_start(coeffs);
    let mut z: Vec<Cx> = start.iter().map(|s| Cx::from_f64(s.re, s.im, wp)).collect();
    let one = Cx::real(Fx::from_int(1, wp));
    let tol = Fx::pow2(-i64::from(wp) + 16, wp);
    for _ in 0..max_iter {
        let snapshot = z.clone();
        let mut max_step = Fx::zero(wp);
        for i in 0..d {
            let (val, der) = horner(coeffs, &snapshot[i]);
            if val.is_zero() {
                continue;
            }
            let Some(n) = val.div(&der) else { continue };
            let mut s = Cx::zero(wp);
            for j in 0..d {
                if j != i {
                    s = s.add(&one.div(&snapshot[i].sub(&snapshot[j]))?);
                }
            }
            let w = n.div(&one.sub(&n.mul(&s)))?;
            let step = w.abs();
            if step > max_step {
                max_step = step;
            }
            z[i] = snapshot[i].sub(&w);
        }
        if max_step <= tol {
            break;
        }
    }
    Some(z)
}

/// Roots of a polynomial given by approximate complex coefficients, grouped
/// into clusters of nearby approximations. Used where the polynomial is only
/// known numerically; multiplicities are inferred from cluster sizes and are
/// heuristic.
pub(crate) fn clustered_roots(coeffs: &[Cx], wp: u32, cluster_log2: f64) -> Option<Vec<(Cx, usize, Fx)>> {
    let d = coeffs.len().checked_sub(1)?;
    if d == 0 {
        return Some(Vec::new());
    }
    let z = aberth(coeffs, wp, 120 + 12 * d)?;
    let mut assigned = vec![usize::MAX; d];
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for i in 0..d {
        if assigned[i] != usize::MAX {
            continue;
        }
        let id = clusters.len();
        let mut members = vec![i];
        assigned[i] = id;
        let mut k = 0;
        while k < members.len() {
            let m = members[k];
            for j in 0..d {
                if assigned[j] == usize::MAX && z[m].sub(&z[j]).log2_abs() < cluster_log2 {
                    assigned[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        clusters.push(members);
    }
    Some(
        clusters
            .into_iter()
            .map(|members| {
                let k = members.len();
                let mut sum = Cx::zero(wp);
                for &m in &members {
                    sum = sum.add(&z[m]);
                }
                let kq = Fx::from_int(k as i64, wp);
                let mean = Cx::new(sum.re.div(&kq).unwrap(), sum.im.div(&kq).unwrap());
                let spread = members.iter().map(|&m| z[m].sub(&mean).abs()).max().unwrap_or_else(|| Fx::zero(wp));
                (mean, k, spread)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn close(z: &Cx, re: f64, im: f64) -> bool {
        let (a, b) = z.to_f64();
        (a - re).abs() < 1e-12 && (b - im).abs() < 1e-12
    }

    #[test]
    fn imaginary_unit_pair() {
        let roots = complex_roots_default(&PolyQ::from_i64(&[1, 0, 1]), 128).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(close(&roots[0].value, 0.0, -1.0));
        assert!(close(&roots[1].value, 0.0, 1.0));
        assert!(roots.iter().all(|r| r.multiplicity == 1 && r.exact.is_none()));
        assert_eq!(roots[0].value, roots[1].value.conj());
    }

    #[test]
    fn triple_root_at_one() {
        let p = PolyQ::from_i64(&[-1, 1]).pow(3);
        let roots = complex_roots_default(&p, 64).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 3);
        assert_eq!(roots[0].exact, Some(q(1)));
    }

    #[test]
    fn irrational_root_is_not_snapped_to_a_rational_neighbour() {
        // (t^2 - 1)(t^2 - 2): sqrt 2 rounds to the rational root 1
        let roots = complex_roots_default(&PolyQ::from_i64(&[2, 0, -3, 0, 1]), 128).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.exact.is_some()).count(), 2);
    }

    #[test]
    fn three_rational_roots() {
        let roots = complex_roots_default(&PolyQ::from_i64(&[0, -4, 0, 1]), 64).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.exact.clone().unwrap()).collect();
        assert_eq!(exact, vec![q(-2), q(0), q(2)]);
    }

    #[test]
    fn radii_meet_target() {
        // t^5 - t - 1 is irreducible with one real root
        let p = PolyQ::from_i64(&[-1, -1, 0, 0, 0, 1]);
        let prec = 200;
        let roots = complex_roots_default(&p, prec).unwrap();
        assert_eq!(roots.len(), 5);
        let target = Fx::pow2(-100, roots[0].radius.prec());
        assert!(roots.iter().all(|r| r.radius <= target));
        assert_eq!(roots.iter().filter(|r| r.is_real()).count(), 1);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(complex_roots_default(&PolyQ::zero(), 64), Err(LinalgError::ZeroPolynomial));
    }
}

