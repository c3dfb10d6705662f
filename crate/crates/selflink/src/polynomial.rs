//! Exact sparse Laurent polynomial arithmetic in one and two variables,
//! plus canonical reduced ratios of Laurent polynomials.
//!
//! All coefficients are arbitrary-precision integers. Values are immutable
//! after construction and all operations are pure, so they can be shared
//! and combined across threads freely.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("evaluation point must be nonzero")]
    EvalAtZero,
}

/// A sparse Laurent polynomial in the variable `A` with integer
/// coefficients. No stored coefficient is zero; equality is exact
/// term-by-term equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The single term `c * A^e`; the zero polynomial when `c == 0`.
    pub fn monomial(exponent: i64, coefficient: impl Into<BigInt>) -> Self {
        let c = coefficient.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by the monomial `A^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// Substitute `A -> A^{-1}`: every exponent is negated.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational, PolyError> {
        if at.is_zero() {
            return Err(PolyError::EvalAtZero);
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let mut power = BigRational::one();
            let base = if e >= 0 { at.clone() } else { at.recip() };
            for _ in 0..e.unsigned_abs() {
                power *= &base;
            }
            acc += BigRational::from(c.clone()) * power;
        }
        Ok(acc)
    }

    /// Gcd of all coefficient magnitudes; zero for the zero polynomial.
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    fn div_exact(&self, d: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(&k, c)| (k, c / d)).collect(),
        }
    }

    /// JSON rendering: ascending `[exponent, coefficient]` pairs, the
    /// coefficient as a decimal string so arbitrary precision survives.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&e, c)| json!([e, c.to_string()]))
                .collect(),
        )
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "A^{e}")?;
            } else {
                write!(f, "{mag}*A^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial in the commuting variables `A` and `B` with integer
/// coefficients and integer (possibly negative) exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `c * A^a B^b`.
    pub fn monomial(a: i64, b: i64, coefficient: impl Into<BigInt>) -> Self {
        let c = coefficient.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    fn add_term(&mut self, key: (i64, i64), coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms ordered by (A exponent, B exponent).
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Substitute `B -> A^{-1}`, collapsing to a one-variable polynomial.
    pub fn subst_b_inverse_a(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(&(a, b), c)| (a - b, c.clone())))
    }

    /// Swap the roles of `A` and `B`.
    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(a, b), c)| json!([a, b, c.to_string()]))
                .collect(),
        )
    }
}

impl Add<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Add for BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: BiLaurent) -> BiLaurent {
        &self + &rhs
    }
}

impl Mul<&BiLaurent> for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut vars = String::new();
            if a != 0 {
                vars.push_str(&format!("A^{a}"));
            }
            if b != 0 {
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&format!("B^{b}"));
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}*{vars}")?;
            }
        }
        Ok(())
    }
}

/// A ratio of two Laurent polynomials, kept in a canonical reduced form:
/// the common monomial factor `A^m` is divided out so the minimum exponent
/// present across both parts is 0, the common integer content is divided
/// out, and the denominator's lowest-degree coefficient is positive.
/// Identical numerator and denominator reduce to `1/1`.
///
/// Equality is decided by cross-multiplication, so ratios that share a
/// non-monomial polynomial factor still compare equal.
#[derive(Debug, Clone)]
pub struct RationalExpr {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalExpr {
    /// Reduce `num / den` to canonical form. The canonicalization divides
    /// only by common monomial factors and the integer content; no
    /// polynomial gcd is taken.
    pub fn reduce(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, PolyError> {
        if denominator.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if numerator == denominator {
            return Ok(Self {
                numerator: LaurentPoly::one(),
                denominator: LaurentPoly::one(),
            });
        }
        let min_exp = match (numerator.min_exponent(), denominator.min_exponent()) {
            (Some(a), Some(b)) => a.min(b),
            (None, Some(b)) => b,
            _ => unreachable!("denominator is nonzero"),
        };
        let mut num = numerator.shift(-min_exp);
        let mut den = denominator.shift(-min_exp);
        let content = num.content().gcd(&den.content());
        if !content.is_zero() && !content.is_one() {
            num = num.div_exact(&content);
            den = den.div_exact(&content);
        }
        let lowest = den
            .min_exponent()
            .map(|e| den.coefficient(e))
            .expect("denominator is nonzero");
        if lowest.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::reduce(p, LaurentPoly::one()).expect("denominator 1 is nonzero")
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }

    /// Substitute `A -> A^{-1}` in both parts.
    pub fn invert_variable(&self) -> Self {
        Self::reduce(
            self.numerator.invert_variable(),
            self.denominator.invert_variable(),
        )
        .expect("inverted denominator stays nonzero")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "num": self.numerator.to_json(),
            "den": self.denominator.to_json(),
        })
    }
}

impl PartialEq for RationalExpr {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for RationalExpr {}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == LaurentPoly::one() {
            return write!(f, "{}", self.numerator);
        }
        let num = self.numerator.to_string();
        let den = self.denominator.to_string();
        let wrap = |s: &str| {
            if s.contains('+') || (s.len() > 1 && s[1..].contains('-')) {
                format!("({s})")
            } else {
                s.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn add_identity_and_cancellation() {
        let p = lp(&[(3, 2)]);
        assert_eq!(&p + &LaurentPoly::zero(), p);
        assert_eq!(&lp(&[(1, 1)]) + &lp(&[(1, -1)]), LaurentPoly::zero());
        assert_eq!(&lp(&[(-1, 1), (3, 1)]) + &lp(&[(-1, 1)]), lp(&[(-1, 2), (3, 1)]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&lp(&[(-3, 1)]) * &lp(&[(3, 2)]), lp(&[(0, 2)]));
        assert_eq!(
            &lp(&[(1, 1), (-1, 1)]) * &lp(&[(1, 1), (-1, -1)]),
            lp(&[(2, 1), (-2, -1)])
        );
        let p = lp(&[(0, 7), (5, -3)]);
        assert_eq!(&p * &LaurentPoly::one(), p);
    }

    #[test]
    fn invert_variable_examples() {
        assert_eq!(lp(&[(-4, 2)]).invert_variable(), lp(&[(4, 2)]));
        let palindrome = lp(&[(0, 2), (4, 1), (-4, 1)]);
        assert_eq!(palindrome.invert_variable(), palindrome);
        assert_eq!(LaurentPoly::zero().invert_variable(), LaurentPoly::zero());
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::from(BigInt::from(1));
        let minus_one = BigRational::from(BigInt::from(-1));
        assert_eq!(lp(&[(-2, 2)]).eval(&one).unwrap(), BigRational::from(BigInt::from(2)));
        assert_eq!(
            lp(&[(3, 2)]).eval(&minus_one).unwrap(),
            BigRational::from(BigInt::from(-2))
        );
        assert_eq!(LaurentPoly::zero().eval(&one).unwrap(), BigRational::zero());
        assert_eq!(
            lp(&[(1, 1)]).eval(&BigRational::zero()),
            Err(PolyError::EvalAtZero)
        );
    }

    #[test]
    fn ratio_reduce_canonical_form() {
        // (2A^-1 + 2A^3) / (4A^-1): the cross-multiplication oracle gives
        // (1 + A^4)/2, since (2A^-1 + 2A^3)*2 = (1 + A^4)*(4A^-1).
        let num = lp(&[(-1, 2), (3, 2)]);
        let den = lp(&[(-1, 4)]);
        let r = RationalExpr::reduce(num.clone(), den.clone()).unwrap();
        assert_eq!(r.numerator(), &lp(&[(0, 1), (4, 1)]));
        assert_eq!(r.denominator(), &lp(&[(0, 2)]));
        let cross_lhs = &num * &lp(&[(0, 2)]);
        let cross_rhs = &lp(&[(0, 1), (4, 1)]) * &den;
        assert_eq!(cross_lhs, cross_rhs);
    }

    #[test]
    fn ratio_identical_parts_is_one() {
        let p = lp(&[(7, 2)]);
        let r = RationalExpr::reduce(p.clone(), p).unwrap();
        assert!(r.is_one());
        assert_eq!(r.to_string(), "1");
    }

    #[test]
    fn ratio_zero_numerator() {
        let r = RationalExpr::reduce(LaurentPoly::zero(), lp(&[(2, 2), (-2, 2)])).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.numerator(), &LaurentPoly::zero());
        assert_eq!(r.denominator(), &LaurentPoly::one());
    }

    #[test]
    fn ratio_zero_denominator_rejected() {
        assert_eq!(
            RationalExpr::reduce(LaurentPoly::one(), LaurentPoly::zero()),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn display_format_is_pinned() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(0, 2)]).to_string(), "2");
        assert_eq!(lp(&[(-2, 2)]).to_string(), "2*A^-2");
        assert_eq!(lp(&[(-4, 1), (0, 2), (4, 1)]).to_string(), "A^-4+2+A^4");
        assert_eq!(lp(&[(-1, -1), (3, 1)]).to_string(), "-A^-1+A^3");
        let r = RationalExpr::reduce(lp(&[(-1, 2), (3, 2)]), lp(&[(-1, 4)])).unwrap();
        assert_eq!(r.to_string(), "(1+A^4)/2");
    }

    #[test]
    fn json_rendering() {
        let p = lp(&[(4, 1), (-2, 2)]);
        assert_eq!(p.to_json().to_string(), r#"[[-2,"2"],[4,"1"]]"#);
    }

    #[test]
    fn bilaurent_basics() {
        let m = BiLaurent::monomial(2, 1, 3);
        let n = BiLaurent::monomial(0, 1, 1);
        let sum = &m + &n;
        assert_eq!(sum.subst_b_inverse_a(), lp(&[(1, 3), (-1, 1)]));
        assert_eq!(m.swap_variables(), BiLaurent::monomial(1, 2, 3));
        assert_eq!((&m * &n), BiLaurent::monomial(2, 2, 3));
        assert_eq!(sum.to_string(), "B^1+3*A^2*B^1");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-6i64..=6), (-9i64..=9)), 0..6)
            .prop_map(|terms| LaurentPoly::from_terms(terms))
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn invert_variable_is_ring_morphism_involution(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(p.invert_variable().invert_variable(), p.clone());
            prop_assert_eq!(
                (&p * &q).invert_variable(),
                &p.invert_variable() * &q.invert_variable()
            );
            prop_assert_eq!(
                (&p + &q).invert_variable(),
                &p.invert_variable() + &q.invert_variable()
            );
        }

        #[test]
        fn ratio_cancellation_invariance(
            n in arb_poly(),
            d in arb_poly().prop_filter("nonzero", |p| !p.is_zero()),
            a in arb_poly().prop_filter("nonzero", |p| !p.is_zero()),
        ) {
            let plain = RationalExpr::reduce(n.clone(), d.clone()).unwrap();
            let scaled = RationalExpr::reduce(&a * &n, &a * &d).unwrap();
            prop_assert_eq!(plain, scaled);
        }
    }
}
