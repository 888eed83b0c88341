use super::{Polynomial, Scalar};
use crate::{Error, Result};

/// A formal power series known through `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Coefficients of `x^0 ..= x^M`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Self::from_fn(order, |i| p.coeff(i))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Cauchy product, valid through the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |k| {
            (0..=k).fold(T::zero(), |acc, j| {
                acc + self.coeffs[j].clone() * other.coeffs[k - j].clone()
            })
        })
    }

    /// Multiplicative inverse. Needs the constant term to be a unit of the
    /// coefficient ring; over the integers that means `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() || !(T::one() % a0.clone()).is_zero() {
            return Err(Error::NotInvertible);
        }
        let a0_inv = T::one() / a0;
        let mut inv: Vec<T> = Vec::with_capacity(self.coeffs.len());
        inv.push(a0_inv.clone());
        for k in 1..self.coeffs.len() {
            let s = (1..=k).fold(T::zero(), |acc, j| {
                acc + self.coeffs[j].clone() * inv[k - j].clone()
            });
            inv.push(-(s * a0_inv.clone()));
        }
        Ok(Self { coeffs: inv })
    }

    /// `self / p`, with `p` read as a series of the same order.
    pub fn div_polynomial(&self, p: &Polynomial<T>) -> Result<Self> {
        let d = Self::from_polynomial(p, self.order()).inverse()?;
        Ok(self.mul(&d))
    }

    /// Coefficientwise equality through the common order.
    pub fn compare(&self, other: &Self) -> Result<bool> {
        if self.order() != other.order() {
            return Err(Error::SeriesOrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self.coeffs == other.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = TruncatedSeries<BigInt>;
    type P = Polynomial<BigInt>;

    fn s(v: &[i64]) -> S {
        S::new(v.iter().map(|&c| c.into()).collect())
    }

    #[test]
    fn compare_examples() {
        assert!(s(&[1, 2]).compare(&s(&[1, 2])).unwrap());
        let one = s(&[1, 0, 0, 0]);
        let geometric_sq = one.div_polynomial(&P::from_i64s(&[1, -2, 1])).unwrap();
        assert!(geometric_sq.compare(&s(&[1, 2, 3, 4])).unwrap());
        assert!(!s(&[1, 2]).compare(&s(&[1, 3])).unwrap());
    }

    #[test]
    fn mismatched_orders_rejected() {
        assert_eq!(
            s(&[1, 2]).compare(&s(&[1, 2, 3])),
            Err(Error::SeriesOrderMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn inverse_needs_unit_constant() {
        assert_eq!(s(&[2, 1]).inverse(), Err(Error::NotInvertible));
        assert_eq!(s(&[0, 1]).inverse(), Err(Error::NotInvertible));
        assert_eq!(s(&[-1, 1, 0]).inverse().unwrap(), s(&[-1, -1, -1]));
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let p = s(&[1, 1, 1, 1]).mul(&s(&[1, -1]));
        assert_eq!(p, s(&[1, 0]));
    }
}
