//! M-convexity of supports, exact Lorentzian checking via rational
//! characteristic polynomials, and the three support/coefficient
//! conjecture verifiers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::groth::s_tilde_double;
use crate::permcore::Permutation;
use crate::polyring::{ExponentVector, IntPolynomial, RatPolynomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("the zero polynomial has no Lorentzian verdict")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {0} is below 2; no quadratic form exists to test")]
    DegreeBelowTwo(u32),
    #[error("{0} does not have a zero-one Grothendieck polynomial")]
    NotZeroOne(String),
}

/// A violation of the exchange axiom: alpha_i > beta_i but no j with
/// alpha_j < beta_j puts alpha - e_i + e_j back in the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub alpha: ExponentVector,
    pub beta: ExponentVector,
    pub i: usize,
}

/// None when the set satisfies the exchange axiom for M-convexity.
pub fn m_convex_violation(set: &BTreeSet<ExponentVector>) -> Option<ExchangeViolation> {
    for alpha in set {
        for beta in set {
            for i in 0..alpha.len() {
                if alpha.0[i] <= beta.0[i] {
                    continue;
                }
                let ok = (0..alpha.len()).any(|j| {
                    if alpha.0[j] >= beta.0[j] {
                        return false;
                    }
                    let mut moved = alpha.clone();
                    moved.0[i] -= 1;
                    moved.0[j] += 1;
                    set.contains(&moved)
                });
                if !ok {
                    return Some(ExchangeViolation {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        i: i + 1,
                    });
                }
            }
        }
    }
    None
}

pub fn is_m_convex(set: &BTreeSet<ExponentVector>) -> bool {
    m_convex_violation(set).is_none()
}

/// Dense symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricRationalMatrix {
    m: usize,
    entries: Vec<Vec<BigRational>>,
}

impl SymmetricRationalMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Self {
        let m = entries.len();
        for row in &entries {
            assert_eq!(row.len(), m, "matrix must be square");
        }
        for i in 0..m {
            for j in 0..i {
                assert_eq!(entries[i][j], entries[j][i], "matrix must be symmetric");
            }
        }
        Self { m, entries }
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    /// Coefficients [c_0 .. c_m] of the characteristic polynomial
    /// det(lambda I - A) = c_m lambda^m + ... + c_0, computed exactly by
    /// the Faddeev-LeVerrier recurrence.
    pub fn characteristic_polynomial(&self) -> Vec<BigRational> {
        let m = self.m;
        let zero = BigRational::zero();
        let one = BigRational::from_integer(BigInt::from(1));
        // coeffs indexed by power: p(l) = l^m + c[1] l^{m-1} + ... + c[m]
        let mut c = vec![zero.clone(); m + 1];
        c[0] = one.clone();
        // M starts as A; at step k, c_k = -tr(M)/k, then M <- A (M + c_k I)
        let mut mat = self.entries.clone();
        for k in 1..=m {
            let trace: BigRational = (0..m).map(|i| mat[i][i].clone()).sum();
            let ck = -trace / BigRational::from_integer(BigInt::from(k as i64));
            c[k] = ck.clone();
            if k == m {
                break;
            }
            let mut shifted = mat.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += &ck;
            }
            let mut next = vec![vec![zero.clone(); m]; m];
            for i in 0..m {
                for j in 0..m {
                    let mut s = zero.clone();
                    for (t, srow) in shifted.iter().enumerate() {
                        s += &self.entries[i][t] * &srow[j];
                    }
                    next[i][j] = s;
                }
            }
            mat = next;
        }
        // reorder to ascending powers: coefficient of lambda^t is c[m - t]
        (0..=m).map(|t| c[m - t].clone()).collect()
    }

    /// Exact count of positive eigenvalues. Symmetric matrices have real
    /// spectra, so Descartes' rule on the characteristic polynomial is an
    /// equality, not a bound.
    pub fn count_positive_eigenvalues(&self) -> usize {
        let p = self.characteristic_polynomial();
        sign_changes(p.iter())
    }

    pub fn count_negative_eigenvalues(&self) -> usize {
        let p = self.characteristic_polynomial();
        // p(-lambda): flip the sign of every odd-power coefficient
        let flipped: Vec<BigRational> = p
            .iter()
            .enumerate()
            .map(|(t, c)| if t % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        sign_changes(flipped.iter())
    }

    /// Multiplicity of the eigenvalue zero: the power of lambda dividing
    /// the characteristic polynomial.
    pub fn nullity(&self) -> usize {
        let p = self.characteristic_polynomial();
        p.iter().take_while(|c| c.is_zero()).count()
    }
}

fn sign_changes<'a>(coeffs: impl Iterator<Item = &'a BigRational>) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let pos = c.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Why a polynomial failed the Lorentzian test; conditions are checked in
/// this order and the first failure is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LorentzianFailure {
    NegativeCoefficient(ExponentVector),
    SupportNotMConvex(ExchangeViolation),
    /// The iterated derivative along these variable indices has a
    /// quadratic form with more than one positive eigenvalue.
    TooManyPositiveEigenvalues(Vec<usize>),
}

pub type LorentzianVerdict = Result<(), LorentzianFailure>;

/// Full Lorentzian check: homogeneous of degree >= 2, nonnegative
/// coefficients, M-convex support, and every (d-2)-fold partial derivative
/// has a quadratic form with at most one positive eigenvalue.
pub fn is_lorentzian(f: &RatPolynomial) -> Result<LorentzianVerdict, AnalysisError> {
    if f.is_zero() {
        return Err(AnalysisError::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(AnalysisError::NotHomogeneous);
    }
    let d = f.degree().expect("nonzero");
    if d < 2 {
        return Err(AnalysisError::DegreeBelowTwo(d));
    }
    for (e, c) in f.terms() {
        if c.is_negative() {
            return Ok(Err(LorentzianFailure::NegativeCoefficient(e.clone())));
        }
    }
    let support: BTreeSet<ExponentVector> = f.support().cloned().collect();
    if let Some(v) = m_convex_violation(&support) {
        return Ok(Err(LorentzianFailure::SupportNotMConvex(v)));
    }
    let m = f.space().len();
    let mut multiset = Vec::new();
    if let Some(bad) = derivative_scan(f, m, d as usize - 2, 0, &mut multiset) {
        return Ok(Err(LorentzianFailure::TooManyPositiveEigenvalues(bad)));
    }
    Ok(Ok(()))
}

/// Walk nondecreasing index multisets in canonical order, differentiating
/// as we descend; at depth 0 test the quadratic form.
fn derivative_scan(
    f: &RatPolynomial,
    m: usize,
    depth: usize,
    from: usize,
    multiset: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if f.is_zero() {
        return None;
    }
    if depth == 0 {
        let q = quadratic_form(f, m);
        if q.count_positive_eigenvalues() > 1 {
            return Some(multiset.iter().map(|v| v + 1).collect());
        }
        return None;
    }
    for v in from..m {
        let g = f.partial_derivative(v);
        multiset.push(v);
        let bad = derivative_scan(&g, m, depth - 1, v, multiset);
        multiset.pop();
        if bad.is_some() {
            return bad;
        }
    }
    None
}

/// Quadratic form of a homogeneous quadratic: Q_ii = coeff of x_i^2,
/// Q_ij = coeff of x_i x_j / 2, so that f = x^T Q x.
fn quadratic_form(f: &RatPolynomial, m: usize) -> SymmetricRationalMatrix {
    let zero = BigRational::zero();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut entries = vec![vec![zero; m]; m];
    for (e, c) in f.terms() {
        let vars: Vec<usize> = (0..m).filter(|&v| e.0[v] > 0).collect();
        match vars.as_slice() {
            [i] => entries[*i][*i] = c.clone(),
            [i, j] => {
                let half = c / &two;
                entries[*i][*j] = half.clone();
                entries[*j][*i] = half;
            }
            _ => unreachable!("quadratic term with more than two variables"),
        }
    }
    SymmetricRationalMatrix::new(entries)
}

/// Normalize-then-test for the double Schubert positivization. Degrees 0
/// and 1 have no quadratic form and count as trivially Lorentzian.
pub fn check_lorentzian_theorem(w: &Permutation) -> Result<bool, AnalysisError> {
    if !w.avoids_zero_one_patterns() {
        return Err(AnalysisError::NotZeroOne(w.to_string()));
    }
    let f = s_tilde_double(w).normalize();
    match is_lorentzian(&f) {
        Ok(verdict) => Ok(verdict.is_ok()),
        Err(AnalysisError::DegreeBelowTwo(_)) => Ok(true),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureVerdict {
    pub pass: bool,
    pub counterexample: Option<ExponentVector>,
}

impl ConjectureVerdict {
    fn pass() -> Self {
        Self {
            pass: true,
            counterexample: None,
        }
    }

    fn fail(e: ExponentVector) -> Self {
        Self {
            pass: false,
            counterexample: Some(e),
        }
    }

    pub fn to_json(&self, check: &str) -> serde_json::Value {
        serde_json::json!({
            "check": check,
            "pass": self.pass,
            "counterexample": self.counterexample.as_ref().map(|e| e.0.clone()),
        })
    }
}

/// Every exponent below top degree is dominated by another support point.
pub fn check_conjecture_1_1(f: &IntPolynomial) -> ConjectureVerdict {
    dominance_check(f, false)
}

/// As 1.1, but the dominating point must sit exactly one degree higher.
pub fn check_conjecture_1_2(f: &IntPolynomial) -> ConjectureVerdict {
    dominance_check(f, true)
}

fn dominance_check(f: &IntPolynomial, next_degree_only: bool) -> ConjectureVerdict {
    let d = match f.degree() {
        Ok(d) => d,
        Err(_) => return ConjectureVerdict::pass(),
    };
    for alpha in f.support() {
        if alpha.total() >= d {
            continue;
        }
        let found = f.support().any(|beta| {
            alpha != beta
                && alpha.dominated_by(beta)
                && (!next_degree_only || beta.total() == alpha.total() + 1)
        });
        if !found {
            return ConjectureVerdict::fail(alpha.clone());
        }
    }
    ConjectureVerdict::pass()
}

/// For each top-degree exponent beta, the coefficients over all support
/// points alpha <= beta sum to exactly 1.
pub fn check_conjecture_1_6(f: &IntPolynomial) -> ConjectureVerdict {
    let d = match f.degree() {
        Ok(d) => d,
        Err(_) => return ConjectureVerdict::pass(),
    };
    for beta in f.support() {
        if beta.total() != d {
            continue;
        }
        let sum: BigInt = f
            .terms()
            .filter(|(alpha, _)| alpha.dominated_by(beta))
            .map(|(_, c)| c.clone())
            .sum();
        if sum != BigInt::from(1) {
            return ConjectureVerdict::fail(beta.clone());
        }
    }
    ConjectureVerdict::pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groth::{grothendieck_dd, schubert_dd, Variant};
    use crate::permcore::enumerate_sn;
    use crate::polyring::{SparsePolynomial, VarSpace};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn m_convex_examples() {
        let a: BTreeSet<_> = [ev(&[1, 0]), ev(&[0, 1])].into_iter().collect();
        assert!(is_m_convex(&a));
        let b: BTreeSet<_> = [ev(&[2, 0]), ev(&[0, 2])].into_iter().collect();
        let v = m_convex_violation(&b).unwrap();
        assert_eq!((v.alpha, v.beta, v.i), (ev(&[2, 0]), ev(&[0, 2]), 1));
        let s = schubert_dd(&p("21543"), Variant::Single);
        let supp: BTreeSet<_> = s.support().cloned().collect();
        assert!(is_m_convex(&supp));
    }

    #[test]
    fn schubert_supports_m_convex_s5() {
        for n in 1..=5 {
            for w in enumerate_sn(n) {
                let s = schubert_dd(&w, Variant::Single);
                let supp: BTreeSet<_> = s.support().cloned().collect();
                assert!(is_m_convex(&supp), "{w}");
            }
        }
    }

    #[test]
    fn eigenvalue_counts() {
        let m = SymmetricRationalMatrix::new(vec![
            vec![rat(0, 1), rat(1, 2)],
            vec![rat(1, 2), rat(0, 1)],
        ]);
        assert_eq!(
            m.characteristic_polynomial(),
            vec![rat(-1, 4), rat(0, 1), rat(1, 1)]
        );
        assert_eq!(m.count_positive_eigenvalues(), 1);
        assert_eq!(m.count_negative_eigenvalues(), 1);
        assert_eq!(m.nullity(), 0);

        let id = SymmetricRationalMatrix::new(vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
        ]);
        assert_eq!(id.count_positive_eigenvalues(), 2);

        let q = SymmetricRationalMatrix::new(vec![
            vec![rat(1, 2), rat(1, 1)],
            vec![rat(1, 1), rat(1, 2)],
        ]);
        // char poly lambda^2 - lambda - 3/4
        assert_eq!(
            q.characteristic_polynomial(),
            vec![rat(-3, 4), rat(-1, 1), rat(1, 1)]
        );
        assert_eq!(q.count_positive_eigenvalues(), 1);
    }

    #[test]
    fn eigenvalue_counts_sum_to_dimension() {
        // random-ish fixed symmetric matrices, including singular ones
        let mats = vec![
            vec![
                vec![rat(1, 1), rat(2, 1), rat(0, 1)],
                vec![rat(2, 1), rat(4, 1), rat(0, 1)],
                vec![rat(0, 1), rat(0, 1), rat(-3, 1)],
            ],
            vec![
                vec![rat(0, 1), rat(0, 1), rat(0, 1)],
                vec![rat(0, 1), rat(5, 2), rat(1, 3)],
                vec![rat(0, 1), rat(1, 3), rat(-1, 7)],
            ],
        ];
        for entries in mats {
            let m = SymmetricRationalMatrix::new(entries);
            assert_eq!(
                m.count_positive_eigenvalues() + m.count_negative_eigenvalues() + m.nullity(),
                m.dimension()
            );
        }
    }

    #[test]
    fn lorentzian_examples() {
        let s = VarSpace::x_only(2);
        let x1 = SparsePolynomial::<BigRational>::x_var(s, 1);
        let x2 = SparsePolynomial::<BigRational>::x_var(s, 2);
        assert_eq!(is_lorentzian(&x1.mul(&x2)), Ok(Ok(())));
        match is_lorentzian(&x1.mul(&x1).add(&x2.mul(&x2))) {
            Ok(Err(LorentzianFailure::SupportNotMConvex(_))) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // N(x1^2 + 2 x1 x2 + x2^2) = x1^2/2 + 2 x1 x2 + x2^2/2
        let f = IntPolynomial::x_var(s, 1)
            .add(&IntPolynomial::x_var(s, 2))
            .mul(&IntPolynomial::x_var(s, 1).add(&IntPolynomial::x_var(s, 2)))
            .normalize();
        assert_eq!(is_lorentzian(&f), Ok(Ok(())));
        // degree guards
        assert_eq!(
            is_lorentzian(&x1),
            Err(AnalysisError::DegreeBelowTwo(1))
        );
        assert_eq!(
            is_lorentzian(&x1.add(&x1.mul(&x2))),
            Err(AnalysisError::NotHomogeneous)
        );
        assert_eq!(
            is_lorentzian(&SparsePolynomial::<BigRational>::zero(s)),
            Err(AnalysisError::ZeroPolynomial)
        );
    }

    #[test]
    fn lorentzian_theorem_examples() {
        assert_eq!(check_lorentzian_theorem(&p("21")), Ok(true));
        assert_eq!(check_lorentzian_theorem(&p("132")), Ok(true));
        assert_eq!(check_lorentzian_theorem(&p("321")), Ok(true));
        assert_eq!(
            check_lorentzian_theorem(&p("1342")),
            Err(AnalysisError::NotZeroOne("1342".into()))
        );
    }

    #[test]
    fn lorentzian_theorem_s3_sweep() {
        for w in enumerate_sn(3) {
            assert_eq!(check_lorentzian_theorem(&w), Ok(true), "{w}");
        }
    }

    #[test]
    fn conjecture_examples() {
        let g = grothendieck_dd(&p("1342"), Variant::Single);
        assert!(check_conjecture_1_1(&g).pass);
        assert!(check_conjecture_1_2(&g).pass);
        assert!(check_conjecture_1_6(&g).pass);

        let g = grothendieck_dd(&p("21"), Variant::Single);
        assert!(check_conjecture_1_1(&g).pass);
        assert!(check_conjecture_1_6(&g).pass);

        // synthetic failure: x1 + x2^2
        let s = VarSpace::x_only(2);
        let f = IntPolynomial::x_var(s, 1).add(&IntPolynomial::x_var(s, 2).mul(&IntPolynomial::x_var(s, 2)));
        let v = check_conjecture_1_2(&f);
        assert!(!v.pass);
        assert_eq!(v.counterexample, Some(ev(&[1, 0])));
    }

    #[test]
    fn conjectures_hold_for_zero_one_s5() {
        for n in 1..=5 {
            for w in enumerate_sn(n) {
                if !w.avoids_zero_one_patterns() {
                    continue;
                }
                let g = grothendieck_dd(&w, Variant::Single);
                assert!(check_conjecture_1_1(&g).pass, "{w} 1.1");
                assert!(check_conjecture_1_2(&g).pass, "{w} 1.2");
                assert!(check_conjecture_1_6(&g).pass, "{w} 1.6");
            }
        }
    }
}
