//! Exact sparse multivariate Laurent polynomials over the integers.
//!
//! Exponents live on the quarter-integer grid and are stored scaled by 4,
//! so all arithmetic stays in `i64`/`BigInt` with no rounding anywhere.
//! Coefficients are arbitrary-precision integers since state sums over
//! 2^n subsets can exceed any fixed width.

mod text;

pub use text::parse;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// A variable carrying a negative or fractional exponent was mapped to
    /// something that is not an invertible single term.
    #[error("variable {var} appears with a negative or fractional power but its image is not a unit monomial")]
    NonInvertibleSubstitution { var: String },
    /// A fractional power of a substitution image would leave the
    /// quarter-integer exponent grid.
    #[error("substituting {var} produces an exponent outside the quarter-integer grid")]
    ExponentNotRepresentable { var: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A polynomial variable. Families are ordered `a < c < A < B < d < t < q <
/// X < Y < Z < x < y < b < alpha < K < named`; equality and ordering take the
/// index into account.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `a` — component-count variable of dichromatic sums.
    SmallA,
    /// `c` — boundary-count variable.
    SmallC,
    /// `A` — bracket smoothing variable.
    CapA,
    /// `B`
    CapB,
    /// `d` — loop value.
    SmallD,
    /// `t` — Jones variable (quarter powers).
    SmallT,
    /// `q`
    SmallQ,
    /// `X`, `Y`, `Z` — rank/nullity/genus variables.
    CapX,
    CapY,
    CapZ,
    /// `x[e]`, `y[e]` — per-edge weight pair.
    XEdge(String),
    YEdge(String),
    /// `b[e]` — per-edge dichromatic weight.
    BEdge(String),
    /// `alpha[e]` — per-edge variable of the signed substitution.
    AlphaEdge(String),
    /// `K[i]` with `i` a positive half-integer stored doubled, so `K(1)` is
    /// the half-index variable and `K(2)` the index-one variable. Index 0 is
    /// the constant 1 and is never stored.
    K(u64),
    /// A free named variable such as Tutte's `x` and `y`.
    Named(String),
}

impl Var {
    pub fn b(edge: impl Into<String>) -> Self {
        Var::BEdge(edge.into())
    }
    pub fn x(edge: impl Into<String>) -> Self {
        Var::XEdge(edge.into())
    }
    pub fn y(edge: impl Into<String>) -> Self {
        Var::YEdge(edge.into())
    }
    pub fn alpha(edge: impl Into<String>) -> Self {
        Var::AlphaEdge(edge.into())
    }
    /// K variable for a reduced arrow count (twice the half-integer index).
    pub fn k_doubled(doubled: u64) -> Self {
        assert!(doubled > 0, "K[0] is the constant 1 and is never stored");
        Var::K(doubled)
    }
    pub fn named(name: impl Into<String>) -> Self {
        Var::Named(name.into())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::SmallA => write!(f, "a"),
            Var::SmallC => write!(f, "c"),
            Var::CapA => write!(f, "A"),
            Var::CapB => write!(f, "B"),
            Var::SmallD => write!(f, "d"),
            Var::SmallT => write!(f, "t"),
            Var::SmallQ => write!(f, "q"),
            Var::CapX => write!(f, "X"),
            Var::CapY => write!(f, "Y"),
            Var::CapZ => write!(f, "Z"),
            Var::XEdge(e) => write!(f, "x[{e}]"),
            Var::YEdge(e) => write!(f, "y[{e}]"),
            Var::BEdge(e) => write!(f, "b[{e}]"),
            Var::AlphaEdge(e) => write!(f, "alpha[{e}]"),
            Var::K(d) => {
                if d % 2 == 0 {
                    write!(f, "K[{}]", d / 2)
                } else {
                    write!(f, "K[{d}/2]")
                }
            }
            Var::Named(s) => write!(f, "{s}"),
        }
    }
}

/// Product of variable powers with exponents in quarter units; zero exponents
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `v^1`.
    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, 4)
    }

    /// `v^(quarters/4)`.
    pub fn var_pow(v: Var, quarters: i64) -> Self {
        let mut exps = BTreeMap::new();
        if quarters != 0 {
            exps.insert(v, quarters);
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `v` in quarter units.
    pub fn exponent(&self, v: &Var) -> i64 {
        self.exps.get(v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &Var> {
        self.exps.keys()
    }

    pub fn total_degree_quarters(&self) -> i64 {
        self.exps.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let entry = exps.entry(v.clone()).or_insert(0);
            *entry += e;
            if *entry == 0 {
                exps.remove(v);
            }
        }
        Monomial { exps }
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (v.clone(), -e)).collect(),
        }
    }

    /// Raise to an integer power.
    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (v.clone(), e * k)).collect(),
        }
    }

    /// Raise to `quarters/4`; every resulting exponent must stay on the grid.
    pub fn pow_quarters(&self, quarters: i64) -> Option<Monomial> {
        let mut exps = BTreeMap::new();
        for (v, e) in &self.exps {
            let num = e * quarters;
            if num % 4 != 0 {
                return None;
            }
            if num != 0 {
                exps.insert(v.clone(), num / 4);
            }
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    /// Graded-lexicographic: compare total degree, then the exponent vectors
    /// along the global variable order (missing entries are zero).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self
            .total_degree_quarters()
            .cmp(&other.total_degree_quarters())
        {
            Ordering::Equal => {}
            ord => return ord,
        }
        let vars: BTreeSet<&Var> = self.exps.keys().chain(other.exps.keys()).collect();
        for v in vars {
            match self.exponent(v).cmp(&other.exponent(v)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial: a finite map monomial -> nonzero coefficient.
/// Values are immutable in spirit; all operations return fresh polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::from_monomial(Monomial::var(v), 1)
    }

    pub fn var_pow(v: Var, quarters: i64) -> Self {
        LaurentPoly::from_monomial(Monomial::var_pow(v, quarters), 1)
    }

    pub fn from_monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The set of variables occurring in the polynomial.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().cloned())
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u64) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// If the polynomial is a single term, return it.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Ring-homomorphic substitution extending `sigma`; unmapped variables
    /// are fixed. Variables occurring with negative or fractional exponents
    /// must be mapped to unit monomials (single term, invertible
    /// coefficient), otherwise `NonInvertibleSubstitution` is raised.
    pub fn substitute(
        &self,
        sigma: &BTreeMap<Var, LaurentPoly>,
    ) -> Result<LaurentPoly, PolyError> {
        let mut out = LaurentPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut term = LaurentPoly::constant(coeff.clone());
            let mut fixed = Monomial::one();
            for (v, &q) in &mono.exps {
                match sigma.get(v) {
                    None => fixed = fixed.mul(&Monomial::var_pow(v.clone(), q)),
                    Some(img) => {
                        if q > 0 && q % 4 == 0 {
                            term = &term * &img.pow((q / 4) as u64);
                        } else {
                            // Negative or fractional power: the image must be
                            // a single invertible term.
                            let (im, ic) = img.as_single_term().ok_or_else(|| {
                                PolyError::NonInvertibleSubstitution { var: v.to_string() }
                            })?;
                            if q % 4 == 0 {
                                if !(ic.is_one() || (-ic).is_one()) {
                                    return Err(PolyError::NonInvertibleSubstitution {
                                        var: v.to_string(),
                                    });
                                }
                                let k = q / 4;
                                let sign = if ic.is_negative() && k % 2 != 0 {
                                    BigInt::from(-1)
                                } else {
                                    BigInt::one()
                                };
                                term = term.mul_monomial(&im.pow(k), &sign);
                            } else {
                                // Fractional power: coefficient must be +1 and
                                // the exponents must stay on the grid.
                                if !ic.is_one() {
                                    return Err(PolyError::NonInvertibleSubstitution {
                                        var: v.to_string(),
                                    });
                                }
                                let m = im.pow_quarters(q).ok_or_else(|| {
                                    PolyError::ExponentNotRepresentable { var: v.to_string() }
                                })?;
                                term = term.mul_monomial(&m, &BigInt::one());
                            }
                        }
                    }
                }
            }
            term = term.mul_monomial(&fixed, &BigInt::one());
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitute every `K[..]` variable by 1.
    pub fn forget_k(&self) -> LaurentPoly {
        let sigma: BTreeMap<Var, LaurentPoly> = self
            .vars()
            .into_iter()
            .filter(|v| matches!(v, Var::K(_)))
            .map(|v| (v, LaurentPoly::one()))
            .collect();
        self.substitute(&sigma).expect("constant images are units")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&text::format(self), f)
    }
}

#[cfg(test)]
mod tests;
