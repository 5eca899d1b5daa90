//! Exact sparse multivariate polynomials over big integers and rationals,
//! with divided differences, isobaric divided differences, degree
//! decomposition, sign flips, homogenization, normalization, and exact
//! division.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different variable spaces")]
    MismatchedSpaces,
    #[error("degree of the zero polynomial is undefined")]
    DegreeOfZero,
    #[error("polynomial is not divisible by the divisor")]
    NotDivisible,
    #[error("term of degree {0} lies outside the homogenization range [{1}, {2}]")]
    DegreeOutOfRange(u32, u32, u32),
}

/// Coefficient ring abstraction; exact integers or exact rationals.
pub trait Coeff: Clone + Eq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Exact quotient; None when the division leaves a remainder.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn to_rational(&self) -> BigRational;
    /// Decimal rendering used in JSON output ("-2", "1/6", ...).
    fn render(&self) -> String;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

/// Variable space: x-block, optional y-block, optional single z variable.
/// Total variable count is fixed at construction and never auto-extends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VarSpace {
    pub x: usize,
    pub y: usize,
    pub z: bool,
}

impl VarSpace {
    pub fn x_only(n: usize) -> Self {
        Self { x: n, y: 0, z: false }
    }

    pub fn xy(n: usize) -> Self {
        Self { x: n, y: n, z: false }
    }

    pub fn len(&self) -> usize {
        self.x + self.y + usize::from(self.z)
    }

    /// 0-based slot of x_i (1-based i).
    pub fn x_index(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.x, "x{i} out of range");
        i - 1
    }

    /// 0-based slot of y_j (1-based j).
    pub fn y_index(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.y, "y{j} out of range");
        self.x + j - 1
    }

    pub fn z_index(&self) -> usize {
        assert!(self.z, "no z variable in this space");
        self.x + self.y
    }

    pub fn var_name(&self, idx: usize) -> String {
        if idx < self.x {
            format!("x{}", idx + 1)
        } else if idx < self.x + self.y {
            format!("y{}", idx - self.x + 1)
        } else {
            "z".to_string()
        }
    }

    fn latex_name(&self, idx: usize) -> String {
        if idx < self.x {
            format!("x_{{{}}}", idx + 1)
        } else if idx < self.x + self.y {
            format!("y_{{{}}}", idx - self.x + 1)
        } else {
            "z".to_string()
        }
    }
}

/// Exponent vector with the canonical total order: ascending total degree,
/// then ascending alphabetically as monomial words (x1*x2 before x1*x3
/// before x2*x3), i.e. descending lexicographic on the exponent entries.
/// This is a monomial order (compatible with addition), which exact
/// division relies on. The coefficient-domination partial order lives in
/// `dominated_by`, not in `Ord`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(m: usize) -> Self {
        Self(vec![0; m])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Entry-wise partial order: self ≤ other.
    pub fn dominated_by(&self, other: &ExponentVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if other.dominated_by(self) {
            Some(ExponentVector(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial<C: Coeff> {
    space: VarSpace,
    terms: BTreeMap<ExponentVector, C>,
}

pub type IntPolynomial = SparsePolynomial<BigInt>;
pub type RatPolynomial = SparsePolynomial<BigRational>;

impl<C: Coeff> SparsePolynomial<C> {
    pub fn zero(space: VarSpace) -> Self {
        Self {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: VarSpace, c: C) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zeros(space.len()), c);
        }
        p
    }

    pub fn one(space: VarSpace) -> Self {
        Self::constant(space, C::one())
    }

    pub fn monomial(space: VarSpace, exps: ExponentVector, c: C) -> Self {
        assert_eq!(exps.len(), space.len(), "exponent vector length mismatch");
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable at 0-based slot idx.
    pub fn var(space: VarSpace, idx: usize) -> Self {
        let mut e = ExponentVector::zeros(space.len());
        e.0[idx] = 1;
        Self::monomial(space, e, C::one())
    }

    pub fn x_var(space: VarSpace, i: usize) -> Self {
        Self::var(space, space.x_index(i))
    }

    pub fn y_var(space: VarSpace, j: usize) -> Self {
        Self::var(space, space.y_index(j))
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn degree(&self) -> Result<u32, PolyError> {
        self.terms
            .keys()
            .next_back()
            .map(|e| e.total())
            .ok_or(PolyError::DegreeOfZero)
    }

    pub fn min_degree(&self) -> Result<u32, PolyError> {
        self.terms
            .keys()
            .next()
            .map(|e| e.total())
            .ok_or(PolyError::DegreeOfZero)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.degree()) {
            (Ok(a), Ok(b)) => a == b,
            _ => true,
        }
    }

    fn insert_add(&mut self, e: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.space, other.space, "variable space mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.space, other.space, "variable space mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.space, other.space, "variable space mismatch");
        let mut out = Self::zero(self.space);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_add(e1.add(e2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.space);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k.mul(c));
        }
        out
    }

    /// Swap the exponents of x_i and x_{i+1} in every term.
    pub fn swap_x(&self, i: usize) -> Self {
        let a = self.space.x_index(i);
        let b = self.space.x_index(i + 1);
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.0.swap(a, b);
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// ∂_i f = (f − s_i f)/(x_i − x_{i+1}), computed term by term: each
    /// monomial pairs with its swap and the quotient is the geometric sum
    /// (x^a y^b − x^b y^a)/(x − y) = ±x^m y^m Σ x^t y^{d−1−t}.
    pub fn divided_difference(&self, i: usize) -> Self {
        let ia = self.space.x_index(i);
        let ib = self.space.x_index(i + 1);
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            let a = e.0[ia];
            let b = e.0[ib];
            if a == b {
                continue;
            }
            let m = a.min(b);
            let d = a.max(b) - m;
            let coeff = if a > b { c.clone() } else { c.neg() };
            for t in 0..d {
                let mut e2 = e.clone();
                e2.0[ia] = m + t;
                e2.0[ib] = m + (d - 1 - t);
                out.insert_add(e2, coeff.clone());
            }
        }
        out
    }

    /// π_i f = ∂_i((1 − x_{i+1}) f).
    pub fn isobaric_divided_difference(&self, i: usize) -> Self {
        let xi1 = Self::x_var(self.space, i + 1);
        let g = self.sub(&xi1.mul(self));
        g.divided_difference(i)
    }

    /// Partial derivative with respect to the variable at flat index `v`.
    pub fn partial_derivative(&self, v: usize) -> Self {
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            if e.0[v] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.0[v] -= 1;
            out.insert_add(e2, c.mul(&C::from_i64(e.0[v] as i64)));
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            if e.total() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Multiply each degree-(base+k) component by (−1)^k. Involution at
    /// fixed base; requires base ≤ minimal degree.
    pub fn sign_flip_by_degree(&self, base: u32) -> Self {
        if let Ok(min) = self.min_degree() {
            assert!(base <= min, "sign flip base exceeds minimal degree");
        }
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            let k = e.total() - base;
            let c2 = if k % 2 == 0 { c.clone() } else { c.neg() };
            out.terms.insert(e.clone(), c2);
        }
        out
    }

    /// Attach z^{top − deg} to every term; errors on terms outside
    /// [base, top]. Sign conventions are composed separately.
    pub fn homogenize(&self, base: u32, top: u32) -> Result<Self, PolyError> {
        let zi = self.space.z_index();
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            let d = e.total();
            if d < base || d > top {
                return Err(PolyError::DegreeOutOfRange(d, base, top));
            }
            let mut e2 = e.clone();
            e2.0[zi] += top - d;
            out.terms.insert(e2, c.clone());
        }
        Ok(out)
    }

    /// N: divide the coefficient of x^α by α₁!·α₂!⋯α_m!.
    pub fn normalize(&self) -> RatPolynomial {
        let mut out = RatPolynomial::zero(self.space);
        for (e, c) in &self.terms {
            let mut denom: BigInt = One::one();
            for &x in &e.0 {
                for f in 2..=x {
                    denom *= BigInt::from(f);
                }
            }
            out.terms
                .insert(e.clone(), c.to_rational() / BigRational::from_integer(denom));
        }
        out
    }

    /// Exact quotient q with q·g = f, by leading-term reduction in the
    /// canonical monomial order.
    pub fn exact_divide(&self, g: &Self) -> Result<Self, PolyError> {
        assert_eq!(self.space, g.space, "variable space mismatch");
        if g.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        let (lg_e, lg_c) = g.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = Self::zero(self.space);
        while let Some((lr_e, lr_c)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let e_quot = lr_e.checked_sub(&lg_e).ok_or(PolyError::NotDivisible)?;
            let c_quot = lr_c.div_exact(&lg_c).ok_or(PolyError::NotDivisible)?;
            let t = Self::monomial(self.space, e_quot, c_quot);
            r = r.sub(&t.mul(g));
            q = q.add(&t);
        }
        Ok(q)
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.space.len(), "point length mismatch");
        let mut total: BigRational = Zero::zero();
        for (e, c) in &self.terms {
            let mut v = c.to_rational();
            for (x, &p) in point.iter().zip(&e.0) {
                for _ in 0..p {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Replace every coefficient by its absolute value.
    pub fn abs_coeffs(&self) -> Self {
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.abs());
        }
        out
    }

    /// Set every y-variable to zero, keeping the same space.
    pub fn set_y_zero(&self) -> Self {
        let mut out = Self::zero(self.space);
        for (e, c) in &self.terms {
            if e.0[self.space.x..self.space.x + self.space.y]
                .iter()
                .all(|&v| v == 0)
            {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Project an (x,y) polynomial with all y-exponents zero into the plain
    /// x-only space.
    pub fn restrict_to_x(&self) -> Self {
        let target = VarSpace::x_only(self.space.x);
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            assert!(
                e.0[self.space.x..].iter().all(|&v| v == 0),
                "term uses non-x variables"
            );
            out.terms
                .insert(ExponentVector(e.0[..self.space.x].to_vec()), c.clone());
        }
        out
    }

    /// Indices of variables that occur with nonzero exponent somewhere.
    pub fn used_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.space.len()];
        for e in self.terms.keys() {
            for (i, &v) in e.0.iter().enumerate() {
                if v > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    fn render_with(&self, name: impl Fn(usize) -> String, explicit_mul: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &p) in e.0.iter().enumerate() {
                if p == 1 {
                    factors.push(name(i));
                } else if p > 1 {
                    factors.push(format!("{}^{}", name(i), p));
                }
            }
            let coeff_str = mag.render();
            if factors.is_empty() {
                out.push_str(&coeff_str);
            } else {
                let body = factors.join(if explicit_mul { "*" } else { " " });
                if coeff_str == "1" {
                    out.push_str(&body);
                } else if explicit_mul {
                    out.push_str(&format!("{coeff_str}*{body}"));
                } else {
                    out.push_str(&format!("{coeff_str}{body}"));
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let space = self.space;
        self.render_with(|i| space.var_name(i), true)
    }

    pub fn to_latex(&self) -> String {
        let space = self.space;
        self.render_with(|i| space.latex_name(i), false)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!([e.0, c.render()]))
            .collect();
        serde_json::json!({
            "vars": self.space.len(),
            "blocks": {"x": self.space.x, "y": self.space.y, "z": self.space.z},
            "terms": terms,
        })
    }
}

impl IntPolynomial {
    pub fn to_rational_poly(&self) -> RatPolynomial {
        let mut out = RatPolynomial::zero(self.space);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.to_rational());
        }
        out
    }
}

impl<C: Coeff> fmt::Display for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize) -> VarSpace {
        VarSpace::x_only(n)
    }

    fn x(space: VarSpace, i: usize) -> IntPolynomial {
        IntPolynomial::x_var(space, i)
    }

    #[test]
    fn ring_basics() {
        let s = sp(3);
        let x1 = x(s, 1);
        assert!(x1.add(&x1.neg()).is_zero());
        let x2 = x(s, 2);
        let prod = x1.add(&x2).mul(&x1.sub(&x2));
        assert_eq!(prod.to_text(), "x1^2 - x2^2");
        let one = IntPolynomial::one(s);
        let x3 = x(s, 3);
        let p = one.sub(&x2).mul(&x1.mul(&x3));
        assert_eq!(p.to_text(), "x1*x3 - x1*x2*x3");
    }

    #[test]
    fn divided_difference_examples() {
        let s = sp(2);
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        assert_eq!(x1.divided_difference(1), IntPolynomial::one(s));
        assert_eq!(x2.divided_difference(1), IntPolynomial::one(s).neg());
        let f = x1.mul(&x1).mul(&x2);
        assert_eq!(f.divided_difference(1), x1.mul(&x2));
    }

    #[test]
    fn isobaric_examples() {
        let s = sp(2);
        let one = IntPolynomial::one(s);
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        assert_eq!(one.isobaric_divided_difference(1), one);
        assert_eq!(x1.isobaric_divided_difference(1), one);
        let expected = x1.add(&x2).sub(&x1.mul(&x2));
        assert_eq!(x1.mul(&x1).isobaric_divided_difference(1), expected);
    }

    #[test]
    fn homogeneous_components() {
        let s = sp(2);
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        let f = x1.add(&x1.mul(&x2));
        assert_eq!(f.homogeneous_component(1), x1);
        assert_eq!(f.homogeneous_component(2), x1.mul(&x2));
        assert!(f.homogeneous_component(3).is_zero());
    }

    #[test]
    fn sign_flip_and_involution() {
        let s = sp(3);
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        let x3 = x(s, 3);
        let deg2 = x1.mul(&x2).add(&x1.mul(&x3)).add(&x2.mul(&x3));
        let two = IntPolynomial::constant(s, BigInt::from(2));
        let f = deg2.sub(&two.mul(&x1).mul(&x2).mul(&x3));
        let flipped = f.sign_flip_by_degree(2);
        assert_eq!(flipped, deg2.add(&two.mul(&x1).mul(&x2).mul(&x3)));
        assert_eq!(flipped.sign_flip_by_degree(2), f);
        assert_eq!(x1.sign_flip_by_degree(1), x1);
    }

    #[test]
    fn homogenize_examples() {
        let s = VarSpace { x: 2, y: 0, z: true };
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        let z = IntPolynomial::var(s, s.z_index());
        let f = x1.add(&x1.mul(&x2));
        let h = f.homogenize(1, 2).unwrap();
        assert_eq!(h, x1.mul(&z).add(&x1.mul(&x2)));
        let g = x1.mul(&x2);
        assert_eq!(g.homogenize(2, 2).unwrap(), g);
        assert!(matches!(
            f.homogenize(2, 2),
            Err(PolyError::DegreeOutOfRange(1, 2, 2))
        ));
    }

    #[test]
    fn normalize_examples() {
        let s = sp(2);
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        let f = x1.mul(&x2);
        assert_eq!(f.normalize(), f.to_rational_poly());
        let g = x1.mul(&x1);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(g.normalize(), g.to_rational_poly().scale(&half));
        let h = x1.mul(&x1).mul(&x1).mul(&x2).scale(&BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(
            h.normalize(),
            x1.mul(&x1).mul(&x1).mul(&x2).to_rational_poly().scale(&third)
        );
    }

    #[test]
    fn exact_divide_examples() {
        let s = sp(3);
        let x1 = x(s, 1);
        let x2 = x(s, 2);
        let x3 = x(s, 3);
        let f = x1.mul(&x1).sub(&x2.mul(&x2));
        let g = x1.sub(&x2);
        assert_eq!(f.exact_divide(&g).unwrap(), x1.add(&x2));
        assert_eq!(
            x1.mul(&x2).exact_divide(&x3),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn evaluate_examples() {
        let s = sp(2);
        let f = x(s, 1).add(&x(s, 2));
        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(
            f.evaluate(&[one.clone(), one]),
            BigRational::from_integer(BigInt::from(2))
        );
    }

    #[test]
    fn degree_of_zero_errors() {
        let z = IntPolynomial::zero(sp(2));
        assert_eq!(z.degree(), Err(PolyError::DegreeOfZero));
        assert_eq!(z.min_degree(), Err(PolyError::DegreeOfZero));
    }

    #[test]
    fn canonical_text_order() {
        let s = sp(3);
        let f = x(s, 1)
            .mul(&x(s, 1))
            .mul(&x(s, 2))
            .sub(&x(s, 1).mul(&x(s, 2)).mul(&x(s, 3)).scale(&BigInt::from(2)))
            .add(&x(s, 2));
        assert_eq!(f.to_text(), "x2 + x1^2*x2 - 2*x1*x2*x3");
        assert_eq!(f.to_latex(), "x_{2} + x_{1}^2 x_{2} - 2x_{1} x_{2} x_{3}");
    }
}
