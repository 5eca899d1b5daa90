//! The acceptance suite: eleven independently checkable criteria covering
//! engine agreement, enumeration, classification, factorization, the
//! Lorentzian theorem, the support conjectures, and operator algebra.
//! Shared between the `verify` subcommand and the integration tests.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    check_conjecture_1_1, check_conjecture_1_2, check_conjecture_1_6, check_lorentzian_theorem,
};
use crate::bpd::{enumerate_bpds, enumerate_bpds_bruteforce};
use crate::groth::{grothendieck_bpd, grothendieck_dd, schubert_dd, Variant};
use crate::permcore::{enumerate_sn, Permutation};
use crate::polyring::{ExponentVector, IntPolynomial, VarSpace};
use crate::zeroone::{
    classify_groth, classify_schubert, factor_f, factor_g, factorize, factorize_double_schubert,
};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub index: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2}: {:<42} {} ({:.2}s{})",
            self.index,
            self.name,
            if self.pass { "pass" } else { "FAIL" },
            self.seconds,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!("; {}", self.detail)
            }
        )
    }
}

/// Run all eleven criteria. `quick` trims every sweep to n <= 4 (or less
/// where the full run already stops lower) while still exercising each
/// category.
pub fn run_acceptance(quick: bool) -> Vec<CriterionResult> {
    let checks: Vec<(&'static str, fn(bool) -> (bool, String))> = vec![
        ("paper display reproduction (1342 double)", c1_paper_display),
        ("BPD enumeration vs brute force", c2_bpd_enumeration),
        ("six-pattern theorem sweep", c3_groth_patterns),
        ("twelve-pattern Schubert sweep", c4_schubert_patterns),
        ("factorization worked example (58326147)", c5_factorization_example),
        ("factorization theorem sweep", c6_factorization_sweep),
        ("engine cross-validation", c7_engines),
        ("Lorentzian theorem sweep", c8_lorentzian),
        ("support conjectures sweep", c9_conjectures),
        ("closed-form factor identities", c10_factor_identities),
        ("operator algebra properties", c11_operator_algebra),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let start = Instant::now();
            let (pass, detail) = f(quick);
            CriterionResult {
                index: i + 1,
                name,
                pass,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn c1_paper_display(_quick: bool) -> (bool, String) {
    let w = perm("1342");
    let s = VarSpace::xy(4);
    let one = IntPolynomial::one(s);
    let x = |i| IntPolynomial::x_var(s, i);
    let y = |j| IntPolynomial::y_var(s, j);
    let f = |i: usize, j: usize| x(i).add(&y(j)).sub(&x(i).mul(&y(j)));
    let g = |i: usize, j: usize| one.sub(&f(i, j));
    let expected = f(2, 2)
        .mul(&f(3, 2))
        .add(&f(1, 1).mul(&g(2, 2)).mul(&f(3, 2)))
        .add(&f(1, 1).mul(&f(2, 1)).mul(&g(3, 2)));
    let dd = grothendieck_dd(&w, Variant::Double);
    let bpd = match grothendieck_bpd(&w, Variant::Double) {
        Ok(p) => p,
        Err(e) => return (false, e.to_string()),
    };
    (dd == expected && bpd == expected, String::new())
}

fn c2_bpd_enumeration(quick: bool) -> (bool, String) {
    if enumerate_bpds(&perm("1342")).len() != 3 {
        return (false, "|BPD(1342)| != 3".into());
    }
    let mut sweep: Vec<Permutation> = enumerate_sn(4).collect();
    if !quick {
        // every sixth permutation of S5 in lexicographic order: 20 samples
        sweep.extend(enumerate_sn(5).step_by(6));
    }
    let count = sweep.len();
    for w in sweep {
        let closure = enumerate_bpds(&w);
        let brute = match enumerate_bpds_bruteforce(&w) {
            Ok(b) => b,
            Err(e) => return (false, e.to_string()),
        };
        if closure != brute {
            return (false, format!("closure != brute force for {w}"));
        }
    }
    (true, format!("{count} permutations"))
}

fn c3_groth_patterns(quick: bool) -> (bool, String) {
    let top = if quick { 4 } else { 6 };
    let mut total = 0;
    for n in 1..=top {
        for w in enumerate_sn(n) {
            total += 1;
            if classify_groth(&w).theorem_violation() {
                return (false, format!("disagreement at {w}"));
            }
        }
    }
    (true, format!("{total} permutations"))
}

fn c4_schubert_patterns(quick: bool) -> (bool, String) {
    let top = if quick { 4 } else { 6 };
    let mut total = 0;
    for n in 1..=top {
        for w in enumerate_sn(n) {
            total += 1;
            if classify_schubert(&w).theorem_violation() {
                return (false, format!("disagreement at {w}"));
            }
        }
    }
    (true, format!("{total} permutations"))
}

fn c5_factorization_example(_quick: bool) -> (bool, String) {
    let r = match factorize(&perm("58326147")) {
        Ok(r) => r,
        Err(e) => return (false, e.to_string()),
    };
    if r.lambda.0 != vec![4, 4, 2, 1, 1, 0, 0, 0] {
        return (false, format!("lambda = {:?}", r.lambda.0));
    }
    let s = VarSpace::x_only(8);
    let mut expected = vec![factor_f(s, 2, 1, false), factor_g(s, 2, 3, false)];
    for (_, poly) in &r.factors {
        match expected.iter().position(|e| e == poly) {
            Some(i) => {
                expected.remove(i);
            }
            None => return (false, "unexpected factor".into()),
        }
    }
    (expected.is_empty() && r.product_verified, String::new())
}

fn c6_factorization_sweep(quick: bool) -> (bool, String) {
    let (single_top, double_top) = if quick { (4, 4) } else { (6, 5) };
    let mut singles = 0;
    let mut doubles = 0;
    for n in 1..=single_top {
        for w in enumerate_sn(n) {
            if !w.avoids_zero_one_patterns() {
                continue;
            }
            singles += 1;
            match factorize(&w) {
                Ok(r) if r.product_verified && r.disjoint_windows => {}
                Ok(_) => return (false, format!("windows overlap for {w}")),
                Err(e) => return (false, format!("{w}: {e}")),
            }
            if n <= double_top {
                doubles += 1;
                if let Err(e) = factorize_double_schubert(&w) {
                    return (false, format!("{w} double: {e}"));
                }
            }
        }
    }
    (true, format!("{singles} single, {doubles} double"))
}

fn c7_engines(quick: bool) -> (bool, String) {
    let (engine_top, component_top) = if quick { (4, 4) } else { (5, 6) };
    for n in 1..=engine_top {
        for w in enumerate_sn(n) {
            for variant in [Variant::Single, Variant::Double] {
                let bpd = match grothendieck_bpd(&w, variant) {
                    Ok(p) => p,
                    Err(e) => return (false, e.to_string()),
                };
                if bpd != grothendieck_dd(&w, variant) {
                    return (false, format!("engines disagree for {w}"));
                }
            }
        }
    }
    for n in 1..=component_top {
        for w in enumerate_sn(n) {
            let g = grothendieck_dd(&w, Variant::Single);
            let low = g.homogeneous_component(w.length() as u32);
            if low != schubert_dd(&w, Variant::Single) {
                return (false, format!("lowest component mismatch for {w}"));
            }
        }
    }
    (true, String::new())
}

fn c8_lorentzian(quick: bool) -> (bool, String) {
    let top = if quick { 3 } else { 4 };
    let mut total = 0;
    for n in 1..=top {
        for w in enumerate_sn(n) {
            if !w.avoids_zero_one_patterns() {
                continue;
            }
            total += 1;
            match check_lorentzian_theorem(&w) {
                Ok(true) => {}
                Ok(false) => return (false, format!("not Lorentzian for {w}")),
                Err(e) => return (false, format!("{w}: {e}")),
            }
        }
    }
    (true, format!("{total} permutations"))
}

fn c9_conjectures(quick: bool) -> (bool, String) {
    let (assert_top, report_top) = if quick { (4, 4) } else { (6, 5) };
    let mut reported = Vec::new();
    for n in 1..=assert_top.max(report_top) {
        for w in enumerate_sn(n) {
            let zero_one = w.avoids_zero_one_patterns();
            if !zero_one && n > report_top {
                continue;
            }
            let g = grothendieck_dd(&w, Variant::Single);
            let ok = check_conjecture_1_1(&g).pass
                && check_conjecture_1_2(&g).pass
                && check_conjecture_1_6(&g).pass;
            if ok {
                continue;
            }
            if zero_one && n <= assert_top {
                return (false, format!("conjecture failed for zero-one {w}"));
            }
            // non-zero-one failures are logged, not asserted
            reported.push(w.to_string());
        }
    }
    let detail = if reported.is_empty() {
        String::new()
    } else {
        format!("report-mode failures: {}", reported.join(","))
    };
    (true, detail)
}

fn c10_factor_identities(_quick: bool) -> (bool, String) {
    for k in 1..=10usize {
        let s = VarSpace::x_only(k + 2);
        let ones: Vec<BigRational> = (0..s.len())
            .map(|_| BigRational::from_integer(1.into()))
            .collect();
        let f = factor_f(s, k, 1, false).evaluate(&ones);
        if f != BigRational::from_integer(BigInt::from(2 * k as i64 + 1)) {
            return (false, format!("F at ones, k={k}"));
        }
        let g = factor_g(s, k, 1, false).evaluate(&ones);
        if g != BigRational::from_integer((BigInt::from(1) << (k + 1)) - 1) {
            return (false, format!("G at ones, l={k}"));
        }
    }
    (true, String::new())
}

fn c11_operator_algebra(_quick: bool) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let s = VarSpace::x_only(4);
    for trial in 0..120 {
        let f = random_poly(&mut rng, s);
        for i in 1..=3usize {
            let d = f.divided_difference(i);
            if !d.divided_difference(i).is_zero() {
                return (false, format!("d_{i}^2 != 0, trial {trial}"));
            }
            let p = f.isobaric_divided_difference(i);
            if p.isobaric_divided_difference(i) != p {
                return (false, format!("pi_{i} not idempotent, trial {trial}"));
            }
        }
        for i in 1..=2usize {
            let lhs = f
                .divided_difference(i)
                .divided_difference(i + 1)
                .divided_difference(i);
            let rhs = f
                .divided_difference(i + 1)
                .divided_difference(i)
                .divided_difference(i + 1);
            if lhs != rhs {
                return (false, format!("braid d_{i}, trial {trial}"));
            }
            let lhs = f
                .isobaric_divided_difference(i)
                .isobaric_divided_difference(i + 1)
                .isobaric_divided_difference(i);
            let rhs = f
                .isobaric_divided_difference(i + 1)
                .isobaric_divided_difference(i)
                .isobaric_divided_difference(i + 1);
            if lhs != rhs {
                return (false, format!("braid pi_{i}, trial {trial}"));
            }
        }
        let lhs = f.divided_difference(1).divided_difference(3);
        let rhs = f.divided_difference(3).divided_difference(1);
        if lhs != rhs {
            return (false, format!("commutation, trial {trial}"));
        }
    }
    (true, "120 random polynomials".into())
}

fn random_poly(rng: &mut ChaCha8Rng, s: VarSpace) -> IntPolynomial {
    let mut f = IntPolynomial::zero(s);
    for _ in 0..rng.gen_range(1..=6) {
        let exps: Vec<u32> = (0..s.len()).map(|_| rng.gen_range(0..=3)).collect();
        let c: i64 = rng.gen_range(-5..=5);
        let term = IntPolynomial::monomial(s, ExponentVector(exps), BigInt::from(c));
        f = f.add(&term);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let results = run_acceptance(true);
        assert_eq!(results.len(), 11);
        for r in &results {
            assert!(r.pass, "{}", r.line());
        }
    }
}
