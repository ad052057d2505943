//! Exact Laurent polynomials with integer coefficients.
//!
//! Arithmetic is checked: any overflow of the `i128` coefficients is reported
//! as [`Error::Overflow`] instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Name of the polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    /// The Kauffman bracket variable `A`.
    A,
    /// `t^(1/2)`; an exponent `p` stands for `t^(p/2)`.
    SqrtT,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i32, i128>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn monomial(var: Variable, exp: i32, coeff: i128) -> Self {
        let mut p = Self::zero(var);
        if coeff != 0 {
            p.terms.insert(exp, coeff);
        }
        p
    }

    pub fn from_terms(var: Variable, terms: impl IntoIterator<Item = (i32, i128)>) -> Result<Self> {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: i128) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let c = self.coeff(exp).checked_add(coeff).ok_or(Error::Overflow)?;
        if c == 0 {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, c);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.var, other.var);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.var, other.var);
        let mut out = Self::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow)?;
                out.add_term(e, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_scale(&self, k: i128) -> Result<Self> {
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.add_term(e, c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one(self.var);
        for _ in 0..n {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Result<Self> {
        let mut out = Self::zero(self.var);
        for (e, c) in self.terms() {
            out.terms
                .insert(e.checked_add(k).ok_or(Error::Overflow)?, c);
        }
        Ok(out)
    }

    /// Substitutes `x -> x^k` and renames the variable.
    pub fn substitute(&self, k: i32, var: Variable) -> Result<Self> {
        let mut out = Self::zero(var);
        for (e, c) in self.terms() {
            out.add_term(e.checked_mul(k).ok_or(Error::Overflow)?, c)?;
        }
        Ok(out)
    }

    /// `x -> x^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms().map(|(e, c)| (-e, c)).collect(),
        }
    }

    /// Canonical text: ascending comma-separated terms, `0` for the zero
    /// polynomial. `t^(1/2)` polynomials print as `c*t^(p/2)`, bracket
    /// polynomials as `c*A^p`.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(e, c)| match self.var {
                Variable::SqrtT => format!("{c}*t^({e}/2)"),
                Variable::A => format!("{c}*A^{e}"),
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_canonical(text: &str, var: Variable) -> Result<Self> {
        let bad = || Error::Malformed {
            token: text.to_string(),
            reason: "expected comma-separated `c*t^(p/2)` terms".into(),
        };
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(var));
        }
        let mut p = Self::zero(var);
        let mut last = None;
        for term in text.split(',') {
            let (c, rest) = term.trim().split_once('*').ok_or_else(bad)?;
            let e = match var {
                Variable::SqrtT => rest
                    .strip_prefix("t^(")
                    .and_then(|r| r.strip_suffix("/2)"))
                    .ok_or_else(bad)?,
                Variable::A => rest.strip_prefix("A^").ok_or_else(bad)?,
            };
            let c = i128::from_str(c).map_err(|_| bad())?;
            let e = i32::from_str(e).map_err(|_| bad())?;
            if c == 0 || last.is_some_and(|l| l >= e) {
                return Err(bad());
            }
            last = Some(e);
            p.add_term(e, c)?;
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i32, i128)]) -> LaurentPoly {
        LaurentPoly::from_terms(Variable::A, terms.iter().copied()).unwrap()
    }

    #[test]
    fn arithmetic() {
        let delta = poly(&[(2, -1), (-2, -1)]);
        let sq = delta.checked_pow(2).unwrap();
        assert_eq!(sq, poly(&[(-4, 1), (0, 2), (4, 1)]));
        assert_eq!(
            delta
                .checked_add(&delta.checked_scale(-1).unwrap())
                .unwrap(),
            poly(&[])
        );
        assert_eq!(delta.shift(3).unwrap(), poly(&[(5, -1), (1, -1)]));
        assert_eq!(
            poly(&[(1, 2)]).checked_pow(0).unwrap(),
            LaurentPoly::one(Variable::A)
        );
    }

    #[test]
    fn overflow_is_an_error() {
        let big = poly(&[(0, i128::MAX / 2 + 1)]);
        assert_eq!(big.checked_add(&big), Err(Error::Overflow));
        assert_eq!(big.checked_scale(3), Err(Error::Overflow));
    }

    #[test]
    fn canonical_text() {
        let p = LaurentPoly::from_terms(Variable::SqrtT, [(8, -1), (2, 1), (6, 1)]).unwrap();
        assert_eq!(p.to_canonical(), "1*t^(2/2),1*t^(6/2),-1*t^(8/2)");
        assert_eq!(
            LaurentPoly::parse_canonical(&p.to_canonical(), Variable::SqrtT).unwrap(),
            p
        );
        assert_eq!(LaurentPoly::zero(Variable::SqrtT).to_canonical(), "0");
        assert!(LaurentPoly::parse_canonical("1*t^(2/2),1*t^(0/2)", Variable::SqrtT).is_err());
        assert!(LaurentPoly::parse_canonical("1*t^2", Variable::SqrtT).is_err());
    }

    proptest! {
        #[test]
        fn canonical_roundtrip(terms in proptest::collection::btree_map(-40i32..40, -1000i128..1000, 0..8)) {
            let p = LaurentPoly::from_terms(Variable::SqrtT, terms).unwrap();
            let q = LaurentPoly::parse_canonical(&p.to_canonical(), Variable::SqrtT).unwrap();
            prop_assert_eq!(p, q);
        }

        #[test]
        fn multiplication_commutes_and_distributes(
            a in proptest::collection::btree_map(-10i32..10, -50i128..50, 0..5),
            b in proptest::collection::btree_map(-10i32..10, -50i128..50, 0..5),
            c in proptest::collection::btree_map(-10i32..10, -50i128..50, 0..5),
        ) {
            let (a, b, c) = (
                LaurentPoly::from_terms(Variable::A, a).unwrap(),
                LaurentPoly::from_terms(Variable::A, b).unwrap(),
                LaurentPoly::from_terms(Variable::A, c).unwrap(),
            );
            prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
            let lhs = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let rhs = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
