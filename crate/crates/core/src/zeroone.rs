//! Zero-one classification of Grothendieck and Schubert polynomials
//! (pattern criterion vs. direct coefficient inspection), local structures
//! on Rothe diagrams, factor construction, and verified factorizations of
//! G-tilde(x) and S-tilde(x;y).

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::bpd::rothe_bpd;
use crate::groth::{g_tilde, grothendieck_dd, s_tilde_double, schubert_dd, Variant};
use crate::permcore::Permutation;
use crate::polyring::{ExponentVector, IntPolynomial, VarSpace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZeroOneError {
    #[error("{0} does not have a zero-one Grothendieck polynomial")]
    NotZeroOne(String),
    #[error("factorization of {0} did not reproduce the polynomial")]
    FactorizationMismatch(String),
}

/// A witness that a polynomial is not zero-one: an exponent vector whose
/// coefficient lies outside the allowed set.
pub type Witness = (ExponentVector, BigInt);

/// None when every coefficient is in {-1, 0, 1}; otherwise a witness.
pub fn non_zero_one_witness(f: &IntPolynomial) -> Option<Witness> {
    f.terms()
        .find(|(_, c)| Signed::abs(*c) > BigInt::from(1))
        .map(|(e, c)| (e.clone(), c.clone()))
}

/// None when every coefficient is in {0, 1}; otherwise a witness.
pub fn non_01_witness(f: &IntPolynomial) -> Option<Witness> {
    f.terms()
        .find(|(_, c)| **c != BigInt::from(1))
        .map(|(e, c)| (e.clone(), c.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyVerdict {
    pub pattern_zero_one: bool,
    pub coefficient_zero_one: bool,
    pub witness: Option<Witness>,
}

impl ClassifyVerdict {
    /// True when the pattern criterion and the coefficient check disagree.
    /// This must never happen; a firing here is a bug or a refuted theorem.
    pub fn theorem_violation(&self) -> bool {
        self.pattern_zero_one != self.coefficient_zero_one
    }
}

/// Six-pattern verdict vs. {-1,0,1}-coefficient verdict on G_w(x).
pub fn classify_groth(w: &Permutation) -> ClassifyVerdict {
    let witness = non_zero_one_witness(&grothendieck_dd(w, Variant::Single));
    ClassifyVerdict {
        pattern_zero_one: w.avoids_zero_one_patterns(),
        coefficient_zero_one: witness.is_none(),
        witness,
    }
}

/// Twelve-pattern verdict vs. {0,1}-coefficient verdict on S_w(x).
pub fn classify_schubert(w: &Permutation) -> ClassifyVerdict {
    let witness = non_01_witness(&schubert_dd(w, Variant::Single));
    ClassifyVerdict {
        pattern_zero_one: w.avoids_schubert_zero_one_patterns(),
        coefficient_zero_one: witness.is_none(),
        witness,
    }
}

/// The two kinds of local structure on the Rothe diagram of a zero-one
/// permutation. An A-structure is a run of k >= 2 empty boxes right below a
/// dot at (p, w(p)); a B-structure is a single droopable box with l pipes
/// passing to its northwest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalStructure {
    A { k: usize, p: usize },
    B { l: usize, cell: (usize, usize), r: usize },
}

impl LocalStructure {
    /// Indices of the x variables the factor of this structure uses.
    pub fn x_window(&self) -> Vec<usize> {
        match *self {
            LocalStructure::A { p, .. } => vec![p, p + 1],
            LocalStructure::B { l, r, .. } => (r..=r + l).collect(),
        }
    }
}

/// F-tilde (unsigned) or F (signed):
/// sum_{t=0..k} x_p^t x_{p+1}^{k-t}  +/-  sum_{s=1..k} x_p^s x_{p+1}^{k+1-s}.
pub fn factor_f(space: VarSpace, k: usize, p: usize, signed: bool) -> IntPolynomial {
    assert!(k >= 1, "structure A needs at least one box");
    let xp = IntPolynomial::x_var(space, p);
    let xq = IntPolynomial::x_var(space, p + 1);
    let mut f = IntPolynomial::zero(space);
    for t in 0..=k {
        f = f.add(&pow(&xp, t).mul(&pow(&xq, k - t)));
    }
    for s in 1..=k {
        let term = pow(&xp, s).mul(&pow(&xq, k + 1 - s));
        f = if signed { f.sub(&term) } else { f.add(&term) };
    }
    f
}

/// G-tilde (unsigned) or G (signed): sum_{s=1..l+1} (+/-) e_s(x_r..x_{r+l}).
pub fn factor_g(space: VarSpace, l: usize, r: usize, signed: bool) -> IntPolynomial {
    assert!(l >= 1, "structure B needs at least one pipe");
    // prod (1 + x_r)...(1 + x_{r+l}) - 1 collects all e_s at once; the
    // signed variant flips every second s, i.e. 1 - prod (1 - x_i).
    let one = IntPolynomial::one(space);
    let mut prod = one.clone();
    for i in r..=r + l {
        let x = IntPolynomial::x_var(space, i);
        prod = prod.mul(&if signed { one.sub(&x) } else { one.add(&x) });
    }
    if signed {
        one.sub(&prod)
    } else {
        prod.sub(&one)
    }
}

/// Double F-tilde: sum_{t=0..k} h_{k-t}(x_p, x_{p+1}) e_t(y_i..y_{i+k}).
pub fn factor_f_double(space: VarSpace, k: usize, p: usize, i: usize) -> IntPolynomial {
    assert!(k >= 1, "structure A needs at least one box");
    let mut f = IntPolynomial::zero(space);
    for t in 0..=k {
        f = f.add(&h_two(space, k - t, p).mul(&e_y(space, t, i, i + k)));
    }
    f
}

/// Double G-tilde: x_r + ... + x_{r+l} + y_j + ... + y_{j+l}.
pub fn factor_g_double(space: VarSpace, l: usize, r: usize, j: usize) -> IntPolynomial {
    assert!(l >= 1, "structure B needs at least one pipe");
    let mut f = IntPolynomial::zero(space);
    for i in r..=r + l {
        f = f.add(&IntPolynomial::x_var(space, i));
    }
    for q in j..=j + l {
        f = f.add(&IntPolynomial::y_var(space, q));
    }
    f
}

fn pow(x: &IntPolynomial, e: usize) -> IntPolynomial {
    let mut f = IntPolynomial::one(x.space());
    for _ in 0..e {
        f = f.mul(x);
    }
    f
}

/// Complete homogeneous h_m in the two variables x_p, x_{p+1}.
fn h_two(space: VarSpace, m: usize, p: usize) -> IntPolynomial {
    let xp = IntPolynomial::x_var(space, p);
    let xq = IntPolynomial::x_var(space, p + 1);
    let mut f = IntPolynomial::zero(space);
    for a in 0..=m {
        f = f.add(&pow(&xp, a).mul(&pow(&xq, m - a)));
    }
    f
}

/// Elementary e_t in the y variables y_lo..y_hi.
fn e_y(space: VarSpace, t: usize, lo: usize, hi: usize) -> IntPolynomial {
    fn rec(space: VarSpace, t: usize, from: usize, hi: usize) -> IntPolynomial {
        if t == 0 {
            return IntPolynomial::one(space);
        }
        let mut f = IntPolynomial::zero(space);
        for j in from..=hi + 1 - t {
            f = f.add(&IntPolynomial::y_var(space, j).mul(&rec(space, t - 1, j + 1, hi)));
        }
        f
    }
    rec(space, t, lo, hi)
}

/// Decomposition of the Rothe diagram of a zero-one permutation into local
/// structures plus the leftover cells that admit no droop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub structures: Vec<LocalStructure>,
    /// D(w) cells assigned to neither structure; these form the monomial
    /// x^lambda geometrically.
    pub lambda_cells: Vec<(usize, usize)>,
}

/// Split D(w) into A-structures, B-structures, and non-droopable cells.
pub fn local_structures(w: &Permutation) -> Result<Decomposition, ZeroOneError> {
    if !w.avoids_zero_one_patterns() {
        return Err(ZeroOneError::NotZeroOne(w.to_string()));
    }
    let n = w.n();
    let diagram = w.rothe_diagram();
    let inv = w.inverse();
    // Cells of D(w) that are the target of at least one permissible droop.
    let mut droopable = std::collections::BTreeSet::new();
    for d in rothe_bpd(w).droops() {
        let before: std::collections::BTreeSet<_> = diagram.cells().iter().copied().collect();
        for cell in d.nw_elbow_cells() {
            if before.contains(&cell) {
                droopable.insert(cell);
            }
        }
    }
    let mut used = std::collections::BTreeSet::new();
    let mut structures = Vec::new();
    // A-structures: k >= 2 consecutive diagram cells in row p+1 directly
    // southeast of the dot (p, w(p)).
    for p in 1..n {
        let c = w.at(p);
        let mut k = 0;
        while c + 1 + k <= n && diagram.contains(p + 1, c + 1 + k) {
            k += 1;
        }
        if k >= 2 {
            for t in 1..=k {
                used.insert((p + 1, c + t));
            }
            structures.push(LocalStructure::A { k, p });
        }
    }
    // B-structures: each remaining droopable cell, with l = the number of
    // pipes passing strictly northwest of it through an otherwise empty
    // rectangle.
    let mut lambda_cells = Vec::new();
    for &(p, q) in diagram.cells() {
        if used.contains(&(p, q)) {
            continue;
        }
        if !droopable.contains(&(p, q)) {
            lambda_cells.push((p, q));
            continue;
        }
        let mut l = 0;
        for i in 1..q {
            let wi = inv.at(i);
            if wi >= p {
                continue;
            }
            let clean = diagram
                .cells()
                .iter()
                .filter(|&&(r, c)| r > wi && r <= p && c > i && c <= q)
                .all(|&cell| cell == (p, q));
            if clean {
                l += 1;
            }
        }
        structures.push(LocalStructure::B {
            l,
            cell: (p, q),
            r: p - l,
        });
    }
    Ok(Decomposition {
        structures,
        lambda_cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    /// Exponent vector of the monomial x^lambda, from exact division.
    pub lambda: ExponentVector,
    /// The non-droopable diagram cells; row counts reproduce lambda.
    pub lambda_cells: Vec<(usize, usize)>,
    pub factors: Vec<(LocalStructure, IntPolynomial)>,
    pub product_verified: bool,
    /// The factor variable windows are pairwise disjoint.
    pub disjoint_windows: bool,
}

impl FactorizationReport {
    pub fn to_json(&self, w: &Permutation) -> serde_json::Value {
        let factors: Vec<serde_json::Value> = self
            .factors
            .iter()
            .map(|(s, poly)| match *s {
                LocalStructure::A { k, p } => serde_json::json!({
                    "kind": "A", "k": k, "p": p, "poly": poly.to_json(),
                }),
                LocalStructure::B { l, r, cell } => serde_json::json!({
                    "kind": "B", "l": l, "r": r, "cell": [cell.0, cell.1],
                    "poly": poly.to_json(),
                }),
            })
            .collect();
        serde_json::json!({
            "perm": w.to_string(),
            "lambda": self.lambda.0,
            "factors": factors,
            "verified": self.product_verified,
        })
    }
}

/// G-tilde(x) = x^lambda * prod of structure factors, verified by exact
/// division: the quotient of G-tilde by the factor product must be a single
/// monomial with coefficient 1.
pub fn factorize(w: &Permutation) -> Result<FactorizationReport, ZeroOneError> {
    let deco = local_structures(w)?;
    let space = VarSpace::x_only(w.n());
    let mut product = IntPolynomial::one(space);
    let mut factors = Vec::new();
    for s in &deco.structures {
        let poly = match *s {
            LocalStructure::A { k, p } => factor_f(space, k, p, false),
            LocalStructure::B { l, r, .. } => factor_g(space, l, r, false),
        };
        product = product.mul(&poly);
        factors.push((*s, poly));
    }
    let gt = g_tilde(w);
    let quotient = gt
        .exact_divide(&product)
        .map_err(|_| ZeroOneError::FactorizationMismatch(w.to_string()))?;
    if quotient.num_terms() != 1 {
        return Err(ZeroOneError::FactorizationMismatch(w.to_string()));
    }
    let (lambda, coeff) = quotient.terms().next().map(|(e, c)| (e.clone(), c.clone())).unwrap();
    if coeff != BigInt::from(1) {
        return Err(ZeroOneError::FactorizationMismatch(w.to_string()));
    }
    Ok(FactorizationReport {
        lambda,
        lambda_cells: deco.lambda_cells,
        factors,
        product_verified: true,
        disjoint_windows: windows_disjoint(&deco.structures),
    })
}

/// S-tilde(x;y) = prod over lambda cells (i,j) of (x_i + y_j), times the
/// double factors of the structures; verified by direct expansion.
pub fn factorize_double_schubert(w: &Permutation) -> Result<FactorizationReport, ZeroOneError> {
    let deco = local_structures(w)?;
    let space = VarSpace::xy(w.n());
    let mut product = IntPolynomial::one(space);
    for &(i, j) in &deco.lambda_cells {
        let bin = IntPolynomial::x_var(space, i).add(&IntPolynomial::y_var(space, j));
        product = product.mul(&bin);
    }
    let mut factors = Vec::new();
    for s in &deco.structures {
        let poly = match *s {
            LocalStructure::A { k, p } => factor_f_double(space, k, p, w.at(p)),
            LocalStructure::B { l, r, cell } => factor_g_double(space, l, r, cell.1 - l),
        };
        product = product.mul(&poly);
        factors.push((*s, poly));
    }
    let st = s_tilde_double(w);
    if st != product {
        return Err(ZeroOneError::FactorizationMismatch(w.to_string()));
    }
    let mut lambda = ExponentVector::zeros(w.n());
    for &(i, _) in &deco.lambda_cells {
        lambda.0[i - 1] += 1;
    }
    Ok(FactorizationReport {
        lambda,
        lambda_cells: deco.lambda_cells,
        factors,
        product_verified: true,
        disjoint_windows: windows_disjoint(&deco.structures),
    })
}

fn windows_disjoint(structures: &[LocalStructure]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    for s in structures {
        for v in s.x_window() {
            if !seen.insert(v) {
                return false;
            }
        }
    }
    true
}
