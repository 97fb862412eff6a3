//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`; a failed criterion
//! fails its test).

use goldenbase::bignum::{
    agree_digits, arctan_any, eval_expansion, oracle_value, pi4_enclosure, planned_blocks,
    with_guard_retry, Enclosure, PrecisionSpec,
};
use goldenbase::catalog::{
    arctan_double, arctan_inv_fib, arctan_inv_lucas, build_via_li1, entry_for_name,
    family12_expansion, list_zero_relations, log_fib, log_lucas, paper_vectors as pv,
    Catalog, Li1Target,
};
use goldenbase::exactfield::{alpha_pow, beta_pow, fib_lucas, Q5, Rational};
use goldenbase::pseries::{combine, common_form, is_scalar_multiple, PExpansion, TagKind};
use num::bigint::BigInt;
use num::Zero;

fn report(criterion: u32, description: &str, pass: bool) {
    println!(
        "criterion {}: {} — {}",
        criterion,
        if pass { "pass" } else { "FAIL" },
        description
    );
    assert!(pass, "criterion {} failed: {}", criterion, description);
}

fn evaluate(e: &PExpansion, digits: u32) -> Enclosure {
    with_guard_retry(digits, |sp| eval_expansion(e, sp)).expect("evaluation")
}

#[test]
fn criterion_1_golden_vectors() {
    let mut pass = true;
    let mut check = |ok: bool, what: &str| {
        if !ok {
            eprintln!("  golden-vector mismatch: {}", what);
            pass = false;
        }
    };
    check(log_fib(3).unwrap() == pv::log_fib_3(), "logF 3");
    check(log_fib(4).unwrap() == pv::log_fib_4(), "logF 4");
    check(log_fib(5).unwrap() == pv::log_fib_5(), "logF 5");
    check(log_fib(8).unwrap() == pv::log_fib_8(), "logF 8");
    check(log_fib(12).unwrap() == pv::log_fib_12(), "logF 12");
    check(log_lucas(2).unwrap() == pv::log_lucas_2(), "logL 2");
    check(log_lucas(3).unwrap() == pv::log_lucas_3(), "logL 3");
    check(log_lucas(4).unwrap() == pv::log_lucas_4(), "logL 4");
    check(log_lucas(6).unwrap() == pv::log_lucas_6(), "logL 6");
    check(arctan_inv_fib(2).unwrap() == pv::arctan_inv_fib_2(), "atanF 2");
    check(arctan_inv_fib(3).unwrap() == pv::arctan_inv_fib_3(), "atanF 3");
    check(arctan_inv_fib(4).unwrap() == pv::arctan_inv_fib_4(), "atanF 4");
    check(arctan_inv_fib(5).unwrap() == pv::arctan_inv_fib_5(), "atanF 5");
    check(arctan_inv_fib(7).unwrap() == pv::arctan_inv_fib_7(), "atanF 7");
    check(arctan_inv_lucas(2).unwrap() == pv::arctan_inv_lucas_2(), "atanL 2");
    check(arctan_inv_lucas(4).unwrap() == pv::arctan_inv_lucas_4(), "atanL 4");
    let neg = |e: PExpansion| e.scale(&Q5::from_int(-1));
    check(neg(family12_expansion(1)) == pv::pi4_family12(), "π/4 family12");
    // the worked family-12 examples carry the theorem base α^(12r)
    check(
        family12_expansion(2) == pv::arctan_inv_sqrt5_family12(),
        "family12 r=2",
    );
    check(
        neg(family12_expansion(3)) == pv::arctan_quarter_family12(),
        "family12 r=3",
    );
    check(
        family12_expansion(4) == pv::arctan_inv_3sqrt5_family12(),
        "family12 r=4",
    );
    check(
        neg(arctan_double(3).unwrap().expansion) == pv::arctan_half_double(),
        "doubling r=3",
    );
    check(
        arctan_double(2).unwrap().expansion == pv::arctan_2_sqrt5_double(),
        "doubling r=2",
    );
    check(
        build_via_li1(Li1Target::LogAlphaV1).unwrap() == pv::log_alpha_v1(),
        "log α v1",
    );
    check(
        build_via_li1(Li1Target::LogAlphaV2).unwrap() == pv::log_alpha_v2(),
        "log α v2",
    );
    check(build_via_li1(Li1Target::Log2Alt).unwrap() == pv::log2_alt(), "log 2 alt");
    check(build_via_li1(Li1Target::Log5Alt).unwrap() == pv::log5_alt(), "log 5 alt");
    report(1, "paper-literal vectors equal generator output", pass);
}

#[test]
fn criterion_2_identity_verification() {
    let digits = 60;
    let mut pass = true;
    let catalog = Catalog::standard();
    for entry in catalog.entries() {
        if entry.is_zero_relation() {
            continue;
        }
        let eval = evaluate(&entry.expansion, digits);
        let oracle =
            with_guard_retry(digits, |sp| oracle_value(&entry.tag, sp)).expect("oracle");
        let agree = agree_digits(&eval, &oracle, digits);
        if agree < 55 {
            eprintln!("  {}: only {} agreeing digits", entry.name, agree);
            pass = false;
        }
    }
    // multi-route constants must agree with each other
    let route = |name: &str| evaluate(&entry_for_name(name).unwrap().expansion, digits);
    let pairs = [
        ("logF/3", "log2/alt", "ln 2"),
        ("logL/2", "logF/4", "ln 3"),
        ("logF/5", "log5/alt", "ln 5"),
    ];
    for (a, b, what) in pairs {
        let agree = agree_digits(&route(a), &route(b), digits);
        if agree < 55 {
            eprintln!("  {} routes disagree: {} digits", what, agree);
            pass = false;
        }
    }
    // π/4 three ways: series, negated family-12, Machin oracle
    let pi_series = route("atanF/2");
    let pi_family = route("atan12/1").neg();
    let machin = pi4_enclosure(PrecisionSpec::new(digits));
    for (a, b) in [(&pi_series, &pi_family), (&pi_series, &machin), (&pi_family, &machin)]
    {
        if agree_digits(a, b, digits) < 55 {
            eprintln!("  π/4 routes disagree");
            pass = false;
        }
    }
    report(2, "60-digit series vs oracle for all r ≤ 10 entries", pass);
}

#[test]
fn criterion_3_zero_relations() {
    let digits = 100;
    let mut pass = true;
    let threshold = Rational::new(BigInt::from(1), BigInt::from(10).pow(95));
    for relation in list_zero_relations() {
        let enc = evaluate(&relation.literal.expansion, digits);
        let mid = enc.midpoint();
        let abs = if mid < Rational::zero() { -mid } else { mid };
        if !enc.contains_zero() || abs > threshold {
            eprintln!("  {} does not vanish", relation.literal.name);
            pass = false;
        }
        if let Some(derived) = &relation.derived {
            match is_scalar_multiple(&relation.literal.expansion, &derived.expansion) {
                Ok(Some(_)) => {}
                _ => {
                    eprintln!("  {} not proportional to its derivation", relation.literal.name);
                    pass = false;
                }
            }
        } else if !matches!(relation.literal.tag.kind, TagKind::Zero(ref n) if n == "len5") {
            eprintln!("  unexpected underived relation {}", relation.literal.name);
            pass = false;
        }
    }
    report(3, "all nine zero relations vanish at 100 digits", pass);
}

#[test]
fn criterion_4_exact_symbolic() {
    let mut pass = true;
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    for r in 1..=500u64 {
        let pair = fib_lucas(r);
        let f = Q5::from_rational(Rational::from_integer(pair.f.clone()));
        let l = Q5::from_rational(Rational::from_integer(pair.l.clone()));
        let s5 = Q5::sqrt5();
        let fs5 = &f * &s5;
        let ar = alpha_pow(r as i64);
        let br = beta_pow(r as i64);
        // Binet: α^r = (L_r + F_r√5)/2, β^r = (L_r − F_r√5)/2
        let binet_a = (&l + &fs5).scale(&half);
        let binet_b = (&l - &fs5).scale(&half);
        // α^r ∓ α^(−r) split by parity
        let ainv = alpha_pow(-(r as i64));
        let (diff_expect, sum_expect) = if r % 2 == 0 {
            (fs5.clone(), l.clone())
        } else {
            (l.clone(), fs5.clone())
        };
        // α^(2r) ∓ 1 = α^r·(L_r or F_r√5), and the β counterparts
        let a2r = alpha_pow(2 * r as i64);
        let b2r = beta_pow(2 * r as i64);
        let one = Q5::one();
        let (m1_a, m1_b, p1_a, p1_b) = if r % 2 == 1 {
            (&ar * &l, &br * &l, &ar * &fs5, -&(&br * &fs5))
        } else {
            (&ar * &fs5, -&(&br * &fs5), &ar * &l, &br * &l)
        };
        let ok = binet_a == ar
            && binet_b == br
            && (&ar - &ainv) == diff_expect
            && (&ar + &ainv) == sum_expect
            && (&a2r - &one) == m1_a
            && (&b2r - &one) == m1_b
            && (&a2r + &one) == p1_a
            && (&b2r + &one) == p1_b;
        if !ok {
            eprintln!("  exact identity failed at r = {}", r);
            pass = false;
            break;
        }
    }
    // Li₁ composition vs closed forms, compared in their common form
    for r in 1..=30u32 {
        for (via, closed, what) in [
            (build_via_li1(Li1Target::LogFib(r)).unwrap(), log_fib(r).unwrap(), "logF"),
            (build_via_li1(Li1Target::LogLucas(r)).unwrap(), log_lucas(r).unwrap(), "logL"),
        ] {
            let (a, b) = common_form(&via, &closed).unwrap();
            if a != b {
                eprintln!("  Li₁ composition mismatch: {} r = {}", what, r);
                pass = false;
            }
        }
    }
    report(4, "exact Q(√5) identities to r = 500 and Li₁ composition to r = 30", pass);
}

#[test]
fn criterion_5_arctan_addition_numerics() {
    let spec = PrecisionSpec::new(50);
    let mut pass = true;
    let q5_over = |n: BigInt, d: BigInt| Q5::from_rational(Rational::new(n, d));
    let q5_sqrt5_over = |n: BigInt, d: BigInt| {
        &q5_over(n, d) * &Q5::sqrt5()
    };
    for r in 1..=8i64 {
        for m in 1..=8i64 {
            let fm = fib_lucas(m as u64);
            let fr = fib_lucas(r as u64);
            let lhs_a = arctan_any(&alpha_pow(m - r), spec);
            let lhs_b = arctan_any(&alpha_pow(-(m + r)), spec);
            // difference identity; 1/√5 denominators become √5/5
            let rhs_diff = match (m % 2 == 1, r % 2 == 1) {
                (true, true) => q5_sqrt5_over(fm.l.clone(), 5 * &fr.f),
                (true, false) => q5_over(fm.l.clone(), fr.l.clone()),
                (false, true) => q5_over(fm.f.clone(), fr.f.clone()),
                (false, false) => q5_sqrt5_over(fm.f.clone(), fr.l.clone()),
            };
            let diff = lhs_a.sub(&lhs_b);
            if !diff.intersects(&arctan_any(&rhs_diff, spec)) {
                eprintln!("  difference identity failed at m={}, r={}", m, r);
                pass = false;
            }
            // sum identity
            let rhs_sum = match (m % 2 == 1, r % 2 == 1) {
                (true, true) => q5_sqrt5_over(fm.f.clone(), fr.l.clone()),
                (true, false) => q5_over(fm.f.clone(), fr.f.clone()),
                (false, true) => q5_over(fm.l.clone(), fr.l.clone()),
                (false, false) => q5_sqrt5_over(fm.l.clone(), 5 * &fr.f),
            };
            let sum = lhs_a.add(&lhs_b);
            if !sum.intersects(&arctan_any(&rhs_sum, spec)) {
                eprintln!("  sum identity failed at m={}, r={}", m, r);
                pass = false;
            }
        }
    }
    report(5, "arctan addition identities as 50-digit enclosures, m,r ≤ 8", pass);
}

#[test]
fn criterion_6_precision_scaling() {
    let digits = 1000;
    let start = std::time::Instant::now();
    let entry = entry_for_name("logF/3").unwrap();
    let blocks = planned_blocks(&entry.expansion, PrecisionSpec::new(digits)).unwrap();
    let eval = evaluate(&entry.expansion, digits);
    let oracle =
        with_guard_retry(digits, |sp| oracle_value(&entry.tag, sp)).expect("oracle");
    let agree = agree_digits(&eval, &oracle, digits);
    let elapsed = start.elapsed();
    let pass = (397..=401).contains(&blocks) && agree >= 995 && elapsed.as_secs() < 30;
    if !pass {
        eprintln!(
            "  blocks = {}, agree = {}, elapsed = {:?}",
            blocks, agree, elapsed
        );
    }
    report(6, "1000-digit verify of logF/3 with K ≈ 399 blocks", pass);
}

#[test]
fn criterion_7_refinement_containment() {
    let names = [
        "logF/7", "logL/6", "atanF/5", "atanL/4", "atan12/3", "atan2L/8", "logAlpha/v2",
        "log5/alt", "logSqrt5", "zero/thm4.4",
    ];
    let mut pass = true;
    for name in names {
        let entry = entry_for_name(name).unwrap();
        let coarse = evaluate(&entry.expansion, 50);
        let fine = evaluate(&entry.expansion, 100);
        if !coarse.contains(&fine) {
            eprintln!("  refinement violated for {}", name);
            pass = false;
        }
    }
    report(7, "50-digit enclosures contain the 100-digit enclosures", pass);
}

#[test]
fn criterion_8_mutation_sensitivity() {
    let digits = 60;
    let entry = entry_for_name("logF/3").unwrap();
    let oracle =
        with_guard_retry(digits, |sp| oracle_value(&entry.tag, sp)).expect("oracle");
    let mut pass = true;
    for (idx, coeff) in entry.expansion.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let mut coeffs = entry.expansion.coeffs().to_vec();
        coeffs[idx] = -coeff;
        let mutated = PExpansion::degree1(entry.expansion.base_exp(), coeffs).unwrap();
        let agree = agree_digits(&evaluate(&mutated, digits), &oracle, digits);
        if agree >= 55 {
            eprintln!("  sign flip at index {} went undetected", idx);
            pass = false;
        }
    }
    report(8, "any single sign flip in logF/3 breaks verification", pass);
}
