use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` or `p`, the form used by `.lie` files and JSON reports.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p` or `p/q`. Returns `None` unless the text is already in lowest
/// terms with a positive denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if !den.is_positive() || den.is_zero() {
        return None;
    }
    let r = Rational::new(num.clone(), den.clone());
    if r.numer() != &num || r.denom() != &den {
        return None;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_requires_lowest_terms() {
        assert_eq!(parse_rational("3/4"), Some(qf(3, 4)));
        assert_eq!(parse_rational("-7"), Some(q(-7)));
        assert_eq!(parse_rational("2/4"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn format_round_trips() {
        for r in [qf(-5, 3), q(0), q(12)] {
            assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }
    }
}
