//! Kauffman bracket, Jones polynomial and the extreme-coefficient checks.
//!
//! The bracket is the full state sum
//! `<D> = sum_s A^(#A - #B) (-A^2 - A^-2)^(circles - 1)`
//! and the Jones polynomial is `(-A)^(-3w) <D>` with `A = t^(-1/4)`, stored
//! over `t^(1/2)`. The all-`A` state controls the lowest `t`-degree end.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::fiber;
use crate::poly::{LaurentPoly, Variable};
use crate::state::{self, KauffmanState, Resolution};

fn check_cap(d: &LinkDiagram, cap: usize) -> Result<()> {
    let n = d.crossing_count();
    if n > cap || n >= 63 {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    Ok(())
}

pub fn kauffman_bracket(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    check_cap(d, cap)?;
    let n = d.crossing_count();
    // (A-exponent, circle count) -> number of states
    let mut classes: BTreeMap<(i32, usize), u64> = BTreeMap::new();
    for mask in 0..1u64 << n {
        let b = mask.count_ones() as i32;
        let circles = state::circle_count_of_mask(d, mask);
        *classes.entry((n as i32 - 2 * b, circles)).or_default() += 1;
    }

    let delta = LaurentPoly::from_terms(Variable::A, [(2, -1), (-2, -1)])?;
    let top = classes.keys().map(|&(_, s)| s).max().unwrap_or(1);
    let mut delta_pow = vec![LaurentPoly::one(Variable::A)];
    for k in 1..top {
        delta_pow.push(delta_pow[k - 1].checked_mul(&delta)?);
    }

    let mut bracket = LaurentPoly::zero(Variable::A);
    for ((exp, circles), count) in classes {
        let term = delta_pow[circles - 1]
            .shift(exp)?
            .checked_scale(i128::from(count))?;
        bracket = bracket.checked_add(&term)?;
    }
    Ok(bracket)
}

/// Normalizes a bracket by the writhe and rewrites it over `t^(1/2)`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i32) -> Result<LaurentPoly> {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * writhe)?.checked_scale(sign)?;
    let mut out = LaurentPoly::zero(Variable::SqrtT);
    for (e, c) in normalized.terms() {
        // A^e = t^(-e/4) = (t^(1/2))^(-e/2)
        debug_assert!(e % 2 == 0, "odd A-exponent {e} in a normalized bracket");
        out.add_term(-e / 2, c)?;
    }
    Ok(out)
}

pub fn jones_polynomial(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly> {
    let w = d.writhe()?;
    jones_from_bracket(&kauffman_bracket(d, cap)?, w)
}

/// Extreme coefficients of a Jones polynomial
/// `alpha t^k + beta t^(k-1) + ... + beta' t^(m+1) + alpha' t^m`.
///
/// Degrees are kept doubled (`k_half = 2k`) so link polynomials stay integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JonesReport {
    pub polynomial: LaurentPoly,
    pub k_half: i32,
    pub m_half: i32,
    pub alpha: i128,
    pub beta: i128,
    pub beta_prime: i128,
    pub alpha_prime: i128,
}

impl Serialize for JonesReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("JonesReport", 7)?;
        st.serialize_field("polynomial", &self.polynomial.to_canonical())?;
        st.serialize_field("k_half", &self.k_half)?;
        st.serialize_field("m_half", &self.m_half)?;
        st.serialize_field("alpha", &self.alpha.to_string())?;
        st.serialize_field("beta", &self.beta.to_string())?;
        st.serialize_field("beta_prime", &self.beta_prime.to_string())?;
        st.serialize_field("alpha_prime", &self.alpha_prime.to_string())?;
        st.end()
    }
}

pub fn extract_coefficients(j: &LaurentPoly) -> Result<JonesReport> {
    let (Some(k), Some(m)) = (j.max_exp(), j.min_exp()) else {
        return Err(Error::ZeroPolynomial);
    };
    Ok(JonesReport {
        polynomial: j.clone(),
        k_half: k,
        m_half: m,
        alpha: j.coeff(k),
        beta: j.coeff(k - 2),
        beta_prime: j.coeff(m + 2),
        alpha_prime: j.coeff(m),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollarySide {
    pub state: Resolution,
    /// `beta'` for the all-`A` side, `beta` for the all-`B` side.
    #[serde(serialize_with = "as_string")]
    pub coefficient: i128,
    pub reduced_chi: i64,
    pub reduced_is_tree: bool,
    pub fiber: bool,
    /// `|coefficient| = 1 - chi(G')`.
    pub abs_relation_holds: bool,
    /// `coefficient = 0` iff `G'` is a tree iff the surface is a fiber.
    pub zero_equivalence_holds: bool,
}

impl CorollarySide {
    pub fn consistent(&self) -> bool {
        self.abs_relation_holds && self.zero_equivalence_holds
    }
}

fn as_string<S: Serializer>(v: &i128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub jones: JonesReport,
    /// Present when the diagram is `A`-adequate.
    pub a_side: Option<CorollarySide>,
    /// Present when the diagram is `B`-adequate.
    pub b_side: Option<CorollarySide>,
}

impl CorollaryReport {
    pub fn consistent(&self) -> bool {
        self.a_side
            .iter()
            .chain(&self.b_side)
            .all(CorollarySide::consistent)
    }
}

/// Cross-checks the fiber verdicts of the all-`A` and all-`B` states against
/// the next-to-last and second Jones coefficients.
pub fn check_corollary(d: &LinkDiagram, cap: usize) -> Result<CorollaryReport> {
    if !d.is_connected() {
        return Err(Error::Preconditions(
            "corollary inapplicable: split diagram".into(),
        ));
    }
    let side = |r: Resolution, coefficient: i128| -> Result<Option<CorollarySide>> {
        let sigma = KauffmanState::constant(d.crossing_count(), r);
        let g = state::state_graph(d, &sigma)?;
        if g.has_loop() {
            return Ok(None);
        }
        let reduced = g.reduce();
        let chi = reduced.euler_characteristic();
        let tree = fiber::is_tree(&reduced);
        let is_fiber = fiber::detect_fiber(d, &sigma)?.is_fiber();
        Ok(Some(CorollarySide {
            state: r,
            coefficient,
            reduced_chi: chi,
            reduced_is_tree: tree,
            fiber: is_fiber,
            abs_relation_holds: coefficient.unsigned_abs() as i128 == 1 - i128::from(chi),
            zero_equivalence_holds: (coefficient == 0) == tree && tree == is_fiber,
        }))
    };
    let adequate_a = state::is_adequate(d, &KauffmanState::all_a(d))?;
    let adequate_b = state::is_adequate(d, &KauffmanState::all_b(d))?;
    if !adequate_a && !adequate_b {
        return Err(Error::Preconditions(
            "corollary inapplicable: diagram is neither A- nor B-adequate".into(),
        ));
    }
    let jones = extract_coefficients(&jones_polynomial(d, cap)?)?;
    Ok(CorollaryReport {
        a_side: side(Resolution::A, jones.beta_prime)?,
        b_side: side(Resolution::B, jones.beta)?,
        jones,
    })
}
