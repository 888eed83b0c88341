//! JSON forms: a polynomial is an array of decimal strings in ascending
//! degree; a gamma vector is `{"n": .., "xi": [..]}` with decimal strings.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GammaVector, Polynomial, Scalar};

#[derive(Deserialize)]
#[serde(untagged)]
enum DecimalRepr {
    Str(String),
    Int(i64),
}

fn parse_decimals<'de, T, D>(d: D) -> Result<Vec<T>, D::Error>
where
    T: FromStr,
    D: Deserializer<'de>,
{
    Vec::<DecimalRepr>::deserialize(d)?
        .into_iter()
        .map(|r| match r {
            DecimalRepr::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("not a decimal coefficient: {s:?}"))),
            DecimalRepr::Int(i) => i
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom("coefficient out of range")),
        })
        .collect()
}

fn decimals<T: Display>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl<T: Display> Serialize for Polynomial<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        decimals(&self.coeffs).serialize(s)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for Polynomial<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Polynomial::new(parse_decimals(d)?))
    }
}

#[derive(Serialize)]
struct GammaOut {
    n: usize,
    xi: Vec<String>,
}

#[derive(Deserialize)]
struct GammaIn<T: FromStr> {
    n: usize,
    #[serde(deserialize_with = "parse_decimals")]
    xi: Vec<T>,
}

impl<T: Display> Serialize for GammaVector<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GammaOut {
            n: self.n,
            xi: decimals(&self.xi),
        }
        .serialize(s)
    }
}

impl<'de, T: FromStr> Deserialize<'de> for GammaVector<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let g = GammaIn::<T>::deserialize(d)?;
        if g.xi.len() != g.n / 2 + 1 {
            return Err(D::Error::custom(format!(
                "gamma vector for n = {} needs {} coefficients, got {}",
                g.n,
                g.n / 2 + 1,
                g.xi.len()
            )));
        }
        Ok(GammaVector { n: g.n, xi: g.xi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn polynomial_format() {
        let p = Polynomial::<BigInt>::from_i64s(&[1, 12, 3]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["1","12","3"]"#);
        let zero: Polynomial<BigInt> = serde_json::from_str("[]").unwrap();
        assert!(zero.is_zero());
        let q: Polynomial<BigInt> = serde_json::from_str(r#"["0", 3, "3", "0"]"#).unwrap();
        assert_eq!(q, Polynomial::from_i64s(&[0, 3, 3]));
        assert!(serde_json::from_str::<Polynomial<BigInt>>(r#"["1.5"]"#).is_err());
    }

    #[test]
    fn gamma_format() {
        let g = GammaVector::<BigInt> {
            n: 3,
            xi: vec![0.into(), 3.into()],
        };
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"xi":["0","3"]}"#);
        assert_eq!(serde_json::from_str::<GammaVector<BigInt>>(&s).unwrap(), g);
        assert!(serde_json::from_str::<GammaVector<BigInt>>(r#"{"n":4,"xi":["1"]}"#).is_err());
    }

    proptest! {
        #[test]
        fn big_coefficients_survive_json(digits in "-?[1-9][0-9]{0,40}", k in 0usize..5) {
            let c: BigInt = digits.parse().unwrap();
            let p = Polynomial::monomial(c, k);
            let back: Polynomial<BigInt> = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
