//! Exact feasibility for `A x = b, x >= 0` (phase one of the simplex method, Bland's rule).

use num_traits::{One, Signed, Zero};

use super::Rational;

/// A point of `{x : A x = b, x >= 0}`, or `None` if the polyhedron is empty.
pub fn find_nonnegative_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // tableau columns: x (n), artificials (m), rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r = vec![Rational::zero(); width];
        for (j, v) in row.iter().enumerate() {
            r[j] = if flip { -v.clone() } else { v.clone() };
        }
        r[n + i] = Rational::one();
        r[width - 1] = if flip { -rhs.clone() } else { rhs.clone() };
        t.push(r);
    }
    // objective row: minimize the sum of artificials, written as reduced costs
    let mut obj = vec![Rational::zero(); width];
    for r in &t {
        for j in 0..n {
            obj[j] -= &r[j];
        }
        obj[width - 1] -= &r[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in t.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width - 1] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (li, _) = leave?;
        let piv = t[li][enter].clone();
        for v in t[li].iter_mut() {
            *v /= &piv;
        }
        let prow = t[li].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != li && !r[enter].is_zero() {
                let c = r[enter].clone();
                for (x, p) in r.iter_mut().zip(&prow) {
                    *x -= &c * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let c = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&prow) {
                *x -= &c * p;
            }
        }
        basis[li] = enter;
    }
    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn feasible_system() {
        let a = rows(&[&[1, 1, -1], &[1, -1, 0]]);
        let b = vec![q(2), q(0)];
        let x = find_nonnegative_point(&a, &b).unwrap();
        assert!(x.iter().all(|v| !v.is_negative()));
        for (r, rhs) in a.iter().zip(&b) {
            let s: Rational = r.iter().zip(&x).map(|(p, y)| p * y).sum();
            assert_eq!(&s, rhs);
        }
    }

    #[test]
    fn infeasible_system() {
        // x1 + x2 = -1 has no nonnegative solution
        assert!(find_nonnegative_point(&rows(&[&[1, 1]]), &[q(-1)]).is_none());
        // x1 - x2 = 1 and x2 - x1 = 1
        assert!(find_nonnegative_point(&rows(&[&[1, -1], &[-1, 1]]), &[q(1), q(1)]).is_none());
    }
}
