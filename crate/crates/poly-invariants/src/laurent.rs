//! Laurent polynomials with exact arbitrary-precision coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial `sum c_e * x^e` over the integers.
///
/// No zero coefficients are stored; the empty term map is the zero
/// polynomial. All arithmetic is exact.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// A single term `coeff * x^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut poly = Self::zero();
        poly.add_term(exp, coeff.into());
        poly
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut poly = Self::zero();
        for (exp, coeff) in pairs {
            poly.add_term(exp, coeff.into());
        }
        poly
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `x^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&exp, coeff) in &other.terms {
            out.add_term(exp, coeff.clone());
        }
        out
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&exp, coeff) in &other.terms {
            out.add_term(exp, -coeff.clone());
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (&exp, coeff) in &self.terms {
            out.terms.insert(exp, -coeff.clone());
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by the monomial `coeff * x^exp`.
    pub fn mul_monomial(&self, exp: i64, coeff: &BigInt) -> Self {
        let mut out = Self::zero();
        if coeff.is_zero() {
            return out;
        }
        for (&e, c) in &self.terms {
            out.terms.insert(e + exp, c * coeff);
        }
        out
    }

    /// Substitution `x -> x^-1`.
    pub fn invert_variable(&self) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.terms.insert(-e, c.clone());
        }
        out
    }

    /// Divides every exponent exactly by `divisor`; `None` if any exponent
    /// is not a multiple. Used for variable changes like `t = A^-4`.
    pub fn rescale_exponents(&self, divisor: i64) -> Option<Self> {
        assert!(divisor != 0);
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            if e % divisor != 0 {
                return None;
            }
            out.terms.insert(e / divisor, c.clone());
        }
        Some(out)
    }

    /// Exact division; `None` when `self` is not a multiple of `divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division from the top; an exact quotient has exponents no
        // lower than min(self) - min(divisor), which bounds the loop.
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let div_top = divisor.max_exp().unwrap();
        let div_lead = divisor.coeff(div_top);
        let lowest_quotient_exp =
            self.min_exp().unwrap() - divisor.min_exp().unwrap();
        while !rem.is_zero() {
            let rem_top = rem.max_exp().unwrap();
            let lead = rem.coeff(rem_top);
            if (&lead % &div_lead) != BigInt::zero() {
                return None;
            }
            let q = &lead / &div_lead;
            let exp = rem_top - div_top;
            if exp < lowest_quotient_exp {
                return None;
            }
            quotient.add_term(exp, q.clone());
            rem = rem.sub(&divisor.mul_monomial(exp, &q));
        }
        Some(quotient)
    }

    /// Value at `x = 1`.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc + c)
    }

    /// Value at `x = -1`.
    pub fn evaluate_at_minus_one(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (&e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        total
    }

    /// True when the coefficient of `x^e` equals that of `x^-e` for all `e`.
    pub fn is_palindromic(&self) -> bool {
        self.terms.iter().all(|(&e, c)| self.coeff(-e) == *c)
    }

    /// Text form with the given variable: ascending `coeff*var^exp` terms
    /// joined by " + "; "0" for the zero polynomial.
    pub fn text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{c}*{var}^{e}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text("t"))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::hash::Hash for LaurentPolynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let key = e.to_string();
            // Keep coefficients as JSON numbers when they fit.
            if let Ok(small) = i64::try_from(c.clone()) {
                map.serialize_entry(&key, &small)?;
            } else {
                map.serialize_entry(&key, &c.to_string())?;
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TermVisitor;

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }

        impl<'de> Visitor<'de> for TermVisitor {
            type Value = LaurentPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from exponent strings to coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> Result<Self::Value, A::Error> {
                let mut poly = LaurentPolynomial::zero();
                while let Some((key, value)) =
                    access.next_entry::<String, Coeff>()?
                {
                    let exp: i64 = key.parse().map_err(|_| {
                        serde::de::Error::custom(format!(
                            "invalid exponent key {key:?}"
                        ))
                    })?;
                    let coeff = match value {
                        Coeff::Small(v) => BigInt::from(v),
                        Coeff::Big(text) => {
                            text.parse::<BigInt>().map_err(|_| {
                                serde::de::Error::custom(format!(
                                    "invalid coefficient {text:?}"
                                ))
                            })?
                        }
                    };
                    poly.add_term(exp, coeff);
                }
                Ok(poly)
            }
        }

        deserializer.deserialize_map(TermVisitor)
    }
}

/// `-A^2 - A^-2`, the loop value of the Kauffman bracket.
pub(crate) fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2i64, -1i64), (-2, -1)])
}

pub(crate) fn is_odd(value: &BigInt) -> bool {
    value.abs() % 2 == BigInt::one()
}
