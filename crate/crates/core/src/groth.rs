//! The two polynomial engines: divided-difference recursion from the
//! longest element, and bumpless-pipe-dream summation, for Schubert and
//! Grothendieck polynomials in single and double variables, plus the
//! derived forms G-tilde, S-tilde, and the homogenization G-hat.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use thiserror::Error;

use crate::bpd::{enumerate_bpds, enumerate_reduced_bpds};
use crate::permcore::Permutation;
use crate::polyring::{Coeff, IntPolynomial, VarSpace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrothError {
    #[error("grid size {0} exceeds the BPD engine bound {1}")]
    BoundExceeded(usize, usize),
}

/// Default grid-size cap for the BPD summation engine.
pub const BPD_ENGINE_BOUND: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Schubert,
    Grothendieck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Single,
    Double,
}

/// Which ascent to peel off when walking up to the longest element. The
/// result is independent of the choice; two strategies exist so that
/// independence is testable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentStrategy {
    SmallestAscent,
    LargestAscent,
}

/// Memoized divided-difference engine. A full S_n sweep computes each
/// polynomial exactly once, top-down from the longest element.
pub struct Engine {
    strategy: DescentStrategy,
    memo: DashMap<(Kind, Variant, Permutation), Arc<IntPolynomial>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::with_strategy(DescentStrategy::SmallestAscent)
    }

    pub fn with_strategy(strategy: DescentStrategy) -> Self {
        Self {
            strategy,
            memo: DashMap::new(),
        }
    }

    pub fn compute(&self, w: &Permutation, kind: Kind, variant: Variant) -> IntPolynomial {
        self.compute_arc(w, kind, variant).as_ref().clone()
    }

    fn compute_arc(&self, w: &Permutation, kind: Kind, variant: Variant) -> Arc<IntPolynomial> {
        let key = (kind, variant, w.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let ascent = match self.strategy {
            DescentStrategy::SmallestAscent => w.first_ascent(),
            DescentStrategy::LargestAscent => w.last_ascent(),
        };
        let value = match ascent {
            None => Arc::new(base_polynomial(w.n(), kind, variant)),
            Some(i) => {
                let parent = self.compute_arc(&w.swap_positions(i), kind, variant);
                let next = match kind {
                    Kind::Schubert => parent.divided_difference(i),
                    Kind::Grothendieck => parent.isobaric_divided_difference(i),
                };
                Arc::new(next)
            }
        };
        self.memo.entry(key).or_insert(value).clone()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

/// Longest-element base cases: x^delta for single variants; the full
/// products over i+j <= n for double variants.
fn base_polynomial(n: usize, kind: Kind, variant: Variant) -> IntPolynomial {
    match variant {
        Variant::Single => {
            let space = VarSpace::x_only(n);
            let mut f = IntPolynomial::one(space);
            for i in 1..n {
                let x = IntPolynomial::x_var(space, i);
                for _ in 0..n - i {
                    f = f.mul(&x);
                }
            }
            f
        }
        Variant::Double => {
            let space = VarSpace::xy(n);
            let one = IntPolynomial::one(space);
            let mut f = one.clone();
            for i in 1..=n {
                for j in 1..=n {
                    if i + j > n {
                        continue;
                    }
                    let x = IntPolynomial::x_var(space, i);
                    let y = IntPolynomial::y_var(space, j);
                    let factor = match kind {
                        Kind::Schubert => x.sub(&y),
                        Kind::Grothendieck => x.add(&y).sub(&x.mul(&y)),
                    };
                    f = f.mul(&factor);
                }
            }
            f
        }
    }
}

fn shared_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

/// G_w by the divided-difference recursion (memoized, shared).
pub fn grothendieck_dd(w: &Permutation, variant: Variant) -> IntPolynomial {
    shared_engine().compute(w, Kind::Grothendieck, variant)
}

/// S_w by the divided-difference recursion (memoized, shared).
pub fn schubert_dd(w: &Permutation, variant: Variant) -> IntPolynomial {
    shared_engine().compute(w, Kind::Schubert, variant)
}

/// G_w as a sum of tile weights over BPD(w). Independent of the recursion.
pub fn grothendieck_bpd(w: &Permutation, variant: Variant) -> Result<IntPolynomial, GrothError> {
    if w.n() > BPD_ENGINE_BOUND {
        return Err(GrothError::BoundExceeded(w.n(), BPD_ENGINE_BOUND));
    }
    let space = match variant {
        Variant::Single => VarSpace::x_only(w.n()),
        Variant::Double => VarSpace::xy(w.n()),
    };
    let mut sum = IntPolynomial::zero(space);
    for p in enumerate_bpds(w) {
        let weight = match variant {
            Variant::Single => p.weight_single(),
            Variant::Double => p.weight_double(),
        };
        // Each excess empty box beyond ell(w) records one K-theoretic
        // droop and carries a sign, as in the beta = -1 specialization;
        // without it the sum fails sign alternation by degree.
        let excess = p.empty_cells().len() - w.length();
        if excess % 2 == 0 {
            sum = sum.add(&weight);
        } else {
            sum = sum.sub(&weight);
        }
    }
    Ok(sum)
}

/// G-tilde: flip the sign of each degree component of G_w(x) above ell(w).
/// The result must be coefficient-wise nonnegative; that contract is
/// asserted here rather than assumed.
pub fn g_tilde(w: &Permutation) -> IntPolynomial {
    let g = grothendieck_dd(w, Variant::Single);
    let flipped = g.sign_flip_by_degree(w.length() as u32);
    for (e, c) in flipped.terms() {
        assert!(
            !c.is_negative(),
            "sign alternation of G_{w} fails at {:?}",
            e
        );
    }
    flipped
}

/// S-tilde(x;y): all coefficients of S_w(x;y) made positive. Computed as
/// the sum of prod (x_i + y_j) over the reduced elements of BPD(w), which
/// stays feasible where expanding S_{w_0}(x;y) from the full product would
/// not; equality with |coefficients of S_w(x;y)| is cross-checked in tests.
pub fn s_tilde_double(w: &Permutation) -> IntPolynomial {
    let space = VarSpace::xy(w.n());
    let mut sum = IntPolynomial::zero(space);
    for p in enumerate_reduced_bpds(w) {
        let mut weight = IntPolynomial::one(space);
        for (i, j) in p.empty_cells() {
            let x = IntPolynomial::x_var(space, i);
            let y = IntPolynomial::y_var(space, j);
            weight = weight.mul(&x.add(&y));
        }
        sum = sum.add(&weight);
    }
    sum
}

/// Schubert polynomial summed over reduced bumpless pipe dreams, with
/// empty-cell weight x_i - y_j (or x_i in the single variant). Independent
/// of the divided-difference route.
pub fn schubert_bpd(w: &Permutation, variant: Variant) -> Result<IntPolynomial, GrothError> {
    if w.n() > BPD_ENGINE_BOUND {
        return Err(GrothError::BoundExceeded(w.n(), BPD_ENGINE_BOUND));
    }
    let space = match variant {
        Variant::Single => VarSpace::x_only(w.n()),
        Variant::Double => VarSpace::xy(w.n()),
    };
    let mut sum = IntPolynomial::zero(space);
    for p in enumerate_reduced_bpds(w) {
        let mut weight = IntPolynomial::one(space);
        for (i, j) in p.empty_cells() {
            let x = IntPolynomial::x_var(space, i);
            let cell = match variant {
                Variant::Single => x,
                Variant::Double => x.sub(&IntPolynomial::y_var(space, j)),
            };
            weight = weight.mul(&cell);
        }
        sum = sum.add(&weight);
    }
    Ok(sum)
}

/// The homogenized polynomial G-hat: z^(d(w)-deg) attached to each signed
/// component of G-tilde, homogeneous of total degree d(w).
pub fn g_hat(w: &Permutation) -> IntPolynomial {
    let gt = g_tilde(w);
    let space = VarSpace {
        x: w.n(),
        y: 0,
        z: true,
    };
    let mut lifted = IntPolynomial::zero(space);
    for (e, c) in gt.terms() {
        let mut exps = e.0.clone();
        exps.push(0);
        lifted = lifted.add(&IntPolynomial::monomial(
            space,
            crate::polyring::ExponentVector(exps),
            c.clone(),
        ));
    }
    let base = w.length() as u32;
    let top = degree_d(w);
    lifted
        .homogenize(base, top)
        .expect("G-tilde degrees lie in [ell(w), d(w)]")
}

/// Total degree d(w) of the single Grothendieck polynomial.
pub fn degree_d(w: &Permutation) -> u32 {
    grothendieck_dd(w, Variant::Single)
        .degree()
        .expect("G_w is never zero")
}

#[allow(unused_imports)]
#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::enumerate_sn;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn x(space: VarSpace, i: usize) -> IntPolynomial {
        IntPolynomial::x_var(space, i)
    }

    fn y(space: VarSpace, j: usize) -> IntPolynomial {
        IntPolynomial::y_var(space, j)
    }

    #[test]
    fn small_singles() {
        let s2 = VarSpace::x_only(2);
        assert_eq!(grothendieck_dd(&p("21"), Variant::Single), x(s2, 1));
        assert_eq!(schubert_dd(&p("21"), Variant::Single), x(s2, 1));
        let s3 = VarSpace::x_only(3);
        let expected = x(s3, 1).add(&x(s3, 2)).sub(&x(s3, 1).mul(&x(s3, 2)));
        assert_eq!(grothendieck_dd(&p("132"), Variant::Single), expected);
        assert_eq!(
            schubert_dd(&p("132"), Variant::Single),
            x(s3, 1).add(&x(s3, 2))
        );
    }

    #[test]
    fn schubert_132_double() {
        let s = VarSpace::xy(3);
        let expected = x(s, 1).add(&x(s, 2)).sub(&y(s, 1)).sub(&y(s, 2));
        assert_eq!(schubert_dd(&p("132"), Variant::Double), expected);
    }

    #[test]
    fn paper_display_1342_double() {
        let s = VarSpace::xy(4);
        let one = IntPolynomial::one(s);
        let f = |i: usize, j: usize| x(s, i).add(&y(s, j)).sub(&x(s, i).mul(&y(s, j)));
        let g = |i: usize, j: usize| one.sub(&f(i, j));
        let expected = f(2, 2)
            .mul(&f(3, 2))
            .add(&f(1, 1).mul(&g(2, 2)).mul(&f(3, 2)))
            .add(&f(1, 1).mul(&f(2, 1)).mul(&g(3, 2)));
        assert_eq!(grothendieck_dd(&p("1342"), Variant::Double), expected);
        assert_eq!(
            grothendieck_bpd(&p("1342"), Variant::Double).unwrap(),
            expected
        );
    }

    #[test]
    fn groth_1342_single() {
        let s = VarSpace::x_only(4);
        let deg2 = x(s, 1)
            .mul(&x(s, 2))
            .add(&x(s, 1).mul(&x(s, 3)))
            .add(&x(s, 2).mul(&x(s, 3)));
        let cube = x(s, 1).mul(&x(s, 2)).mul(&x(s, 3));
        let expected = deg2.sub(&cube).sub(&cube);
        assert_eq!(grothendieck_dd(&p("1342"), Variant::Single), expected);
        assert_eq!(grothendieck_bpd(&p("1342"), Variant::Single).unwrap(), expected);
        assert_eq!(degree_d(&p("1342")), 3);
        assert_eq!(g_tilde(&p("1342")), deg2.add(&cube).add(&cube));
    }

    #[test]
    fn schubert_bpd_matches_dd() {
        for n in 1..=4 {
            for w in enumerate_sn(n) {
                for variant in [Variant::Single, Variant::Double] {
                    assert_eq!(
                        schubert_bpd(&w, variant).unwrap(),
                        schubert_dd(&w, variant),
                        "schubert engine mismatch for {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn engines_agree_small() {
        for n in 1..=4 {
            for w in enumerate_sn(n) {
                for variant in [Variant::Single, Variant::Double] {
                    assert_eq!(
                        grothendieck_bpd(&w, variant).unwrap(),
                        grothendieck_dd(&w, variant),
                        "engine mismatch for {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn lowest_component_is_schubert() {
        for n in 1..=5 {
            for w in enumerate_sn(n) {
                let g = grothendieck_dd(&w, Variant::Single);
                assert_eq!(
                    g.homogeneous_component(w.length() as u32),
                    schubert_dd(&w, Variant::Single),
                    "lowest component mismatch for {w}"
                );
            }
        }
    }

    #[test]
    fn double_specializes_to_single() {
        for n in 1..=4 {
            for w in enumerate_sn(n) {
                for kind in [Kind::Schubert, Kind::Grothendieck] {
                    let engine = shared_engine();
                    let double = engine.compute(&w, kind, Variant::Double);
                    let single = engine.compute(&w, kind, Variant::Single);
                    assert_eq!(double.set_y_zero().restrict_to_x(), single);
                }
            }
        }
    }

    #[test]
    fn path_independence() {
        let alt = Engine::with_strategy(DescentStrategy::LargestAscent);
        for w in enumerate_sn(4) {
            for kind in [Kind::Schubert, Kind::Grothendieck] {
                for variant in [Variant::Single, Variant::Double] {
                    assert_eq!(
                        alt.compute(&w, kind, variant),
                        shared_engine().compute(&w, kind, variant)
                    );
                }
            }
        }
    }

    #[test]
    fn s_tilde_double_matches_abs_dd() {
        for n in 1..=4 {
            for w in enumerate_sn(n) {
                assert_eq!(
                    s_tilde_double(&w),
                    schubert_dd(&w, Variant::Double).abs_coeffs(),
                    "S-tilde mismatch for {w}"
                );
            }
        }
    }

    #[test]
    fn s_tilde_21() {
        let s = VarSpace::xy(2);
        assert_eq!(s_tilde_double(&p("21")), x(s, 1).add(&y(s, 1)));
    }

    #[test]
    fn g_hat_132() {
        let space = VarSpace {
            x: 3,
            y: 0,
            z: true,
        };
        let h = g_hat(&p("132"));
        let z = IntPolynomial::var(space, space.z_index());
        let expected = x(space, 1)
            .mul(&z)
            .add(&x(space, 2).mul(&z))
            .add(&x(space, 1).mul(&x(space, 2)));
        assert_eq!(h, expected);
        assert!(h.is_homogeneous());
    }

    #[test]
    fn identity_is_one() {
        for n in 1..=4 {
            let id = Permutation::identity(n);
            assert_eq!(
                grothendieck_dd(&id, Variant::Single),
                IntPolynomial::one(VarSpace::x_only(n))
            );
            assert_eq!(degree_d(&id), 0);
        }
    }

    #[test]
    fn bpd_engine_bound() {
        let w = Permutation::identity(7);
        assert_eq!(
            grothendieck_bpd(&w, Variant::Single),
            Err(GrothError::BoundExceeded(7, 6))
        );
    }
}
