//! Exact real-root counting by Sturm sequences.

use std::cmp::Ordering;

use num_traits::{FromPrimitive, Signed};

use super::{Polynomial, Scalar};
use crate::{Error, Result};

/// Coefficient field for root counting. Exact only for exact fields such as
/// `BigRational`.
pub trait OrderedField: Scalar + Signed + FromPrimitive + PartialOrd {}

impl<T> OrderedField for T where T: Scalar + Signed + FromPrimitive + PartialOrd {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCount {
    pub degree: usize,
    /// Distinct real roots.
    pub distinct: usize,
    /// Real roots counted with multiplicity.
    pub with_multiplicity: usize,
}

impl RootCount {
    /// All complex roots are real. Nonzero constants qualify vacuously.
    pub fn is_real_rooted(&self) -> bool {
        self.with_multiplicity == self.degree
    }
}

impl<T: OrderedField> Polynomial<T> {
    /// Remainder and quotient of Euclidean division.
    ///
    /// # Panics
    ///
    /// If `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// `p, p', -rem(p, p'), ...` down to a nonzero constant.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d);
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }

    /// Number of distinct real roots, via sign variations of the Sturm
    /// sequence of the square-free part at `-∞` and `+∞`.
    pub fn distinct_real_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let seq = self.square_free_part().sturm_sequence();
        let at_pos = seq.iter().map(|q| sign_at_infinity(q, false));
        let at_neg = seq.iter().map(|q| sign_at_infinity(q, true));
        Ok(sign_variations(at_neg) - sign_variations(at_pos))
    }

    /// Counts real roots exactly.
    ///
    /// Distinct roots come from the Sturm sequence of the square-free part.
    /// Multiplicities come from the chain `g_0 = p`, `g_{j+1} = gcd(g_j, g_j')`:
    /// the roots of `g_j` are the roots of `p` of multiplicity greater than
    /// `j`, so summing distinct real root counts along the chain counts each
    /// real root with multiplicity.
    pub fn real_roots_in_field(&self) -> Result<RootCount> {
        let degree = self.degree().ok_or(Error::ZeroPolynomial)?;
        let distinct = self.distinct_real_roots()?;
        let mut with_multiplicity = distinct;
        let mut g = self.clone();
        loop {
            g = g.gcd(&g.derivative());
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            with_multiplicity += g.distinct_real_roots()?;
        }
        Ok(RootCount {
            degree,
            distinct,
            with_multiplicity,
        })
    }
}

fn sign_at_infinity<T: OrderedField>(q: &Polynomial<T>, negative: bool) -> Ordering {
    let lead = q
        .leading_coeff()
        .expect("Sturm sequence entries are nonzero");
    let s = if lead.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    };
    if negative && q.degree().unwrap() % 2 == 1 {
        s.reverse()
    } else {
        s
    }
}

fn sign_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut count = 0;
    let mut prev = None;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if prev.is_some_and(|p| p != s) {
            count += 1;
        }
        prev = Some(s);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = Polynomial<BigInt>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        let c = P::from_i64s(&[0, 3, 3]).real_roots().unwrap();
        assert_eq!((c.distinct, c.with_multiplicity), (2, 2));
        assert!(c.is_real_rooted());

        let c = P::from_i64s(&[1, 1, 1]).real_roots().unwrap();
        assert_eq!(c.distinct, 0);
        assert!(!c.is_real_rooted());

        let c = P::from_i64s(&[0, 0, 5, 5]).real_roots().unwrap();
        assert_eq!((c.distinct, c.with_multiplicity, c.degree), (2, 3, 3));
        assert!(c.is_real_rooted());
    }

    #[test]
    fn zero_is_rejected_but_real_rooted() {
        assert_eq!(P::zero().real_roots(), Err(Error::ZeroPolynomial));
        assert!(P::zero().is_real_rooted());
        assert!(!P::from_i64s(&[1, 1, 1]).is_real_rooted());
    }

    #[test]
    fn constants_are_vacuously_real_rooted() {
        let c = P::from_i64s(&[7]).real_roots().unwrap();
        assert_eq!(c.distinct, 0);
        assert!(c.is_real_rooted());
    }

    #[test]
    fn division_identity() {
        let a = P::from_i64s(&[3, -1, 4, 1, 5]).to_rational();
        let b = P::from_i64s(&[2, 0, 7]).to_rational();
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    /// Independent oracle: all roots of the test polynomials are rationals
    /// `a/b` with `b ∈ {1, 2, 3}` inside `[-6, 6]`, so exact evaluation on the
    /// grid `k/6` finds every distinct real root.
    fn grid_zero_count(p: &P) -> usize {
        let q = p.to_rational();
        (-36..=36)
            .filter(|&k| num_traits::Zero::is_zero(&q.eval(&rat(k, 6))))
            .count()
    }

    fn factor() -> impl Strategy<Value = (i64, i64)> {
        (1i64..=3, -5i64..=5)
    }

    proptest! {
        #[test]
        fn agrees_with_grid_oracle(
            linear in prop::collection::vec(factor(), 1..7),
            quadratics in prop::collection::vec(1i64..5, 0..2),
        ) {
            // product of (b x - a) and of positive-definite x^2 + c
            let mut p = P::one();
            for &(b, a) in &linear {
                p = &p * &P::from_i64s(&[-a, b]);
            }
            for &c in &quadratics {
                p = &p * &P::from_i64s(&[c, 0, 1]);
            }
            let count = p.real_roots().unwrap();
            prop_assert_eq!(count.distinct, grid_zero_count(&p));
            prop_assert_eq!(count.with_multiplicity, linear.len());
            prop_assert_eq!(count.is_real_rooted(), quadratics.is_empty());
        }
    }
}
