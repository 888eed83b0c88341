use super::{Polynomial, Scalar};
use crate::{Error, Result};

/// Coefficients of a palindromic polynomial in the basis
/// `x^i (1+x)^{n-2i}`, `0 <= i <= n/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector<T> {
    pub n: usize,
    pub xi: Vec<T>,
}

/// `x^i (1+x)^{n-2i}`
pub(crate) fn gamma_basis<T: Scalar>(n: usize, i: usize) -> Polynomial<T> {
    let one_plus_x = Polynomial::new(vec![T::one(), T::one()]);
    one_plus_x.pow((n - 2 * i) as u32).shift(i)
}

impl<T: Scalar> GammaVector<T> {
    /// `Σ ξ_i x^i (1+x)^{n-2i}`
    pub fn expand(&self) -> Polynomial<T> {
        self.xi
            .iter()
            .enumerate()
            .map(|(i, c)| gamma_basis::<T>(self.n, i).scale(c))
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool
    where
        T: PartialOrd,
    {
        self.xi.iter().all(|c| *c >= T::zero())
    }
}

impl<T: Scalar> Polynomial<T> {
    /// Expands a palindromic polynomial of degree at most `n` in the gamma
    /// basis.
    ///
    /// The basis is triangular with respect to the lowest-degree term, so the
    /// coefficients are peeled off greedily: `ξ_i` is the coefficient of `x^i`
    /// after subtracting the contributions of `ξ_0, ..., ξ_{i-1}`.
    pub fn gamma_expand(&self, n: usize) -> Result<GammaVector<T>> {
        if let Some(d) = self.degree() {
            if d > n {
                return Err(Error::DegreeExceeds { degree: d, n });
            }
        }
        if !self.is_palindromic(n) {
            return Err(Error::NotPalindromic { n });
        }
        let mut rest = self.clone();
        let mut xi = Vec::with_capacity(n / 2 + 1);
        for i in 0..=n / 2 {
            let c = rest.coeff(i);
            if !c.is_zero() {
                rest = &rest - &gamma_basis::<T>(n, i).scale(&c);
            }
            xi.push(c);
        }
        if !rest.is_zero() {
            return Err(Error::Invariant(format!(
                "gamma expansion left remainder {rest:?}"
            )));
        }
        Ok(GammaVector { n, xi })
    }
}
