//! Rigorous arbitrary-precision evaluation of expansions.
//!
//! All numerics use fixed-point dyadic arithmetic: a value is a big
//! integer mantissa scaled by 2^(−scale_bits), and every exported
//! result is an [`Enclosure`] — an interval [lo, hi] guaranteed to
//! contain the true real value. Rounding is always directed outward.
//!
//! Independent oracles (`oracle_ln`, `oracle_arctan`, Machin π) verify
//! the series without relying on any golden-ratio identity under test.

use crate::exactfield::{alpha_pow, fib_lucas, Q5, Rational};
use crate::pseries::{ConstantTag, PExpansion, TagKind};
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BignumError {
    #[error("only degree-1 expansions can be evaluated")]
    DegreeUnsupported,
    #[error("logarithm of a nonpositive rational")]
    NonpositiveLog,
    #[error("arctan argument out of range (|x| < 1.5 required)")]
    ArctanOutOfRange,
    #[error("no oracle for tag {0:?}")]
    UnsupportedTag(String),
    #[error("nonnegative value required")]
    NegativeValue,
    #[error("undecidable digit at index {index}: enclosure straddles a boundary")]
    UndecidableDigit { index: usize },
    #[error("enclosure too wide for the requested digits")]
    EnclosureTooWide,
}

// ---------------------------------------------------------------------------
// Precision bookkeeping
// ---------------------------------------------------------------------------

/// Requested output precision. The working scale is derived: enough
/// bits for the decimal digits plus guard bits for rounding slack.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionSpec {
    pub decimal_digits: u32,
    pub guard_bits: u32,
}

impl PrecisionSpec {
    pub fn new(decimal_digits: u32) -> Self {
        PrecisionSpec { decimal_digits, guard_bits: 64 }
    }

    pub fn with_guard(decimal_digits: u32, guard_bits: u32) -> Self {
        PrecisionSpec { decimal_digits, guard_bits }
    }

    /// Bits needed to resolve 10^(−decimal_digits).
    pub fn decimal_bits(&self) -> u64 {
        (self.decimal_digits as f64 * std::f64::consts::LOG2_10).ceil() as u64
    }

    pub fn scale_bits(&self) -> u64 {
        self.decimal_bits() + self.guard_bits as u64
    }
}

// ---------------------------------------------------------------------------
// Fixed-point values and intervals
// ---------------------------------------------------------------------------

/// An exact dyadic real: mantissa · 2^(−scale_bits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedReal {
    pub mantissa: BigInt,
    pub scale_bits: u64,
}

impl FixedReal {
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.scale_bits as usize)
    }
}

fn shr_floor(x: &BigInt, bits: u64) -> BigInt {
    // BigInt shifts are arithmetic: they round toward −∞
    x >> bits as usize
}

fn shr_ceil(x: &BigInt, bits: u64) -> BigInt {
    -(&(-x) >> bits as usize)
}

fn div_floor_big(a: &BigInt, b: &BigInt) -> BigInt {
    Integer::div_floor(a, b)
}

fn div_ceil_big(a: &BigInt, b: &BigInt) -> BigInt {
    -Integer::div_floor(&-a, b)
}

/// A rigorous interval [lo, hi]·2^(−scale) containing a real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigInt,
    hi: BigInt,
    scale: u64,
}

impl Enclosure {
    fn make(lo: BigInt, hi: BigInt, scale: u64) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi, scale }
    }

    pub fn lo(&self) -> FixedReal {
        FixedReal { mantissa: self.lo.clone(), scale_bits: self.scale }
    }

    pub fn hi(&self) -> FixedReal {
        FixedReal { mantissa: self.hi.clone(), scale_bits: self.scale }
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn exact_zero(scale: u64) -> Self {
        Enclosure::make(BigInt::zero(), BigInt::zero(), scale)
    }

    pub fn from_int(n: i64, scale: u64) -> Self {
        let m = BigInt::from(n) << scale as usize;
        Enclosure::make(m.clone(), m, scale)
    }

    /// Tightest dyadic bracket of an exact rational.
    pub fn from_rational(q: &Rational, scale: u64) -> Self {
        let num = q.numer() << scale as usize;
        let lo = div_floor_big(&num, q.denom());
        let hi = div_ceil_big(&num, q.denom());
        Enclosure::make(lo, hi, scale)
    }

    /// Embedding of an exact Q(√5) number. The √5 bracket is taken at
    /// a working precision boosted by the magnitude of the irrational
    /// component, so near-cancelling values like α^(−p) = (L_p −
    /// F_p√5)/2 still embed to a tight interval at the target scale.
    pub fn from_q5(x: &Q5, scale: u64) -> Self {
        if x.b.is_zero() {
            return Enclosure::from_rational(&x.a, scale);
        }
        let b_bits = x.b.numer().bits().saturating_sub(x.b.denom().bits()) + 1;
        let inner = scale + b_bits + 16;
        let root_lo = (BigInt::from(5) << (2 * inner) as usize).sqrt();
        let denom = BigInt::one() << inner as usize;
        let lo5 = Rational::new(root_lo.clone(), denom.clone());
        let hi5 = Rational::new(root_lo + 1, denom);
        let (b_lo5, b_hi5) = if x.b.is_negative() { (hi5, lo5) } else { (lo5, hi5) };
        let lo_rat = &x.a + &x.b * b_lo5;
        let hi_rat = &x.a + &x.b * b_hi5;
        let shifted_lo = lo_rat.numer() << scale as usize;
        let shifted_hi = hi_rat.numer() << scale as usize;
        Enclosure::make(
            div_floor_big(&shifted_lo, lo_rat.denom()),
            div_ceil_big(&shifted_hi, hi_rat.denom()),
            scale,
        )
    }

    fn assert_scale(&self, other: &Enclosure) {
        assert_eq!(self.scale, other.scale, "mixed enclosure scales");
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        self.assert_scale(other);
        Enclosure::make(&self.lo + &other.lo, &self.hi + &other.hi, self.scale)
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        self.assert_scale(other);
        Enclosure::make(&self.lo - &other.hi, &self.hi - &other.lo, self.scale)
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure::make(-&self.hi, -&self.lo, self.scale)
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        self.assert_scale(other);
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        Enclosure::make(shr_floor(lo, self.scale), shr_ceil(hi, self.scale), self.scale)
    }

    pub fn mul_int(&self, n: i64) -> Enclosure {
        let n = BigInt::from(n);
        let (a, b) = (&self.lo * &n, &self.hi * &n);
        if n.is_negative() {
            Enclosure::make(b, a, self.scale)
        } else {
            Enclosure::make(a, b, self.scale)
        }
    }

    /// Division by an exact positive integer.
    pub fn div_uint(&self, n: &BigInt) -> Enclosure {
        assert!(n.is_positive());
        Enclosure::make(
            div_floor_big(&self.lo, n),
            div_ceil_big(&self.hi, n),
            self.scale,
        )
    }

    /// Interval division; the divisor must not contain zero.
    pub fn div(&self, other: &Enclosure) -> Enclosure {
        self.assert_scale(other);
        assert!(
            other.lo.is_positive() || other.hi.is_negative(),
            "division by an interval containing zero"
        );
        let shifted_lo = &self.lo << self.scale as usize;
        let shifted_hi = &self.hi << self.scale as usize;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&shifted_lo, &shifted_hi] {
            for b in [&other.lo, &other.hi] {
                let f = div_floor_big(a, b);
                let c = div_ceil_big(a, b);
                lo = Some(lo.map_or(f.clone(), |x| x.min(f)));
                hi = Some(hi.map_or(c.clone(), |x| x.max(c)));
            }
        }
        Enclosure::make(lo.unwrap(), hi.unwrap(), self.scale)
    }

    /// Square root of a nonnegative interval via integer square roots.
    pub fn sqrt(&self) -> Enclosure {
        assert!(!self.lo.is_negative(), "sqrt of an interval below zero");
        let lo = (&self.lo << self.scale as usize).sqrt();
        let hi = (&self.hi << self.scale as usize).sqrt() + 1;
        Enclosure::make(lo, hi, self.scale)
    }

    /// Widens both endpoints outward by `margin` ulps.
    fn widen(&self, margin: &BigInt) -> Enclosure {
        Enclosure::make(&self.lo - margin, &self.hi + margin, self.scale)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// True when `other` ⊆ `self`; scales may differ.
    pub fn contains(&self, other: &Enclosure) -> bool {
        self.lo().to_rational() <= other.lo().to_rational()
            && other.hi().to_rational() <= self.hi().to_rational()
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo().to_rational() <= other.hi().to_rational()
            && other.lo().to_rational() <= self.hi().to_rational()
    }

    pub fn midpoint(&self) -> Rational {
        Rational::new(
            &self.lo + &self.hi,
            BigInt::one() << (self.scale + 1) as usize,
        )
    }

    pub fn width(&self) -> Rational {
        Rational::new(&self.hi - &self.lo, BigInt::one() << self.scale as usize)
    }

    /// True when the interval width is at most 10^(−digits).
    pub fn resolves_digits(&self, digits: u32) -> bool {
        (&self.hi - &self.lo) * BigInt::from(10).pow(digits)
            <= BigInt::one() << self.scale as usize
    }

    /// Midpoint as a decimal string with the given fractional digits
    /// (truncated toward zero).
    pub fn decimal_midpoint(&self, digits: u32) -> String {
        rational_to_decimal(&self.midpoint(), digits)
    }

    /// Both endpoints as decimal strings "lo…/hi…", rounded outward.
    pub fn decimal_range(&self, digits: u32) -> String {
        let pow = BigInt::from(10).pow(digits);
        let lo = shr_floor(&(&self.lo * &pow), self.scale);
        let hi = shr_ceil(&(&self.hi * &pow), self.scale);
        format!(
            "{}/{}",
            scaled_int_to_decimal(&lo, digits),
            scaled_int_to_decimal(&hi, digits)
        )
    }
}

/// Formats a rational as a fixed-point decimal (truncated toward zero).
pub fn rational_to_decimal(q: &Rational, digits: u32) -> String {
    let pow = BigInt::from(10).pow(digits);
    let scaled = (q.numer() * &pow) / q.denom();
    scaled_int_to_decimal(&scaled, digits)
}

fn scaled_int_to_decimal(scaled: &BigInt, digits: u32) -> String {
    let sign = if scaled.is_negative() { "-" } else { "" };
    let mag = scaled.abs();
    let pow = BigInt::from(10).pow(digits);
    let (int_part, frac_part) = mag.div_rem(&pow);
    if digits == 0 {
        return format!("{}{}", sign, int_part);
    }
    format!(
        "{}{}.{:0>width$}",
        sign,
        int_part,
        frac_part.to_string(),
        width = digits as usize
    )
}

/// Decimal digits to which the midpoints of two enclosures agree
/// (capped at `digits`).
pub fn agree_digits(a: &Enclosure, b: &Enclosure, digits: u32) -> u32 {
    let diff = (a.midpoint() - b.midpoint()).abs();
    let scaled = (diff.numer() * BigInt::from(10).pow(digits)) / diff.denom();
    if scaled.is_zero() {
        return digits;
    }
    let mismatch = scaled.to_string().len() as u32;
    digits.saturating_sub(mismatch)
}

// ---------------------------------------------------------------------------
// √5 and embedded constants
// ---------------------------------------------------------------------------

fn sqrt5_enclosure_at(scale: u64) -> Enclosure {
    let lo = (BigInt::from(5) << (2 * scale) as usize).sqrt();
    let hi = &lo + 1;
    Enclosure::make(lo, hi, scale)
}

/// Encloses √5 with width ≤ 2^(−scale_bits+1), via the integer square
/// root of 5·2^(2·scale_bits).
pub fn sqrt5_enclosure(spec: PrecisionSpec) -> Enclosure {
    sqrt5_enclosure_at(spec.scale_bits())
}

// ---------------------------------------------------------------------------
// Series evaluation
// ---------------------------------------------------------------------------

fn log2_alpha() -> f64 {
    ((1.0 + 5f64.sqrt()) / 2.0).log2()
}

/// Picks the smallest block count K whose tail bound
/// M·(n/(nK+1))·α^(−pK)/(1−α^(−p)) clears `target_bits` of accuracy.
fn choose_blocks(log2_coeff_max: f64, n: u64, p: u32, target_bits: f64) -> u64 {
    let per_block = p as f64 * log2_alpha();
    let log2_one_minus_rho = (1.0 - 2f64.powf(-per_block)).log2();
    let nf = n as f64;
    let ok = |k: f64| {
        log2_coeff_max + nf.log2() - (nf * k + 1.0).log2() - k * per_block
            - log2_one_minus_rho
            <= -target_bits
    };
    let mut k = ((target_bits + log2_coeff_max + nf.log2() - log2_one_minus_rho)
        / per_block)
        .ceil()
        .max(1.0);
    while k > 1.0 && ok(k - 1.0) {
        k -= 1.0;
    }
    while !ok(k) {
        k += 1.0;
    }
    k as u64
}

struct EvalPlan {
    coeffs: Vec<Enclosure>,
    rho: Enclosure,
    blocks: u64,
    /// Upper bound on max |a_j| as a mantissa at the working scale.
    coeff_max: BigInt,
}

fn plan_eval(e: &PExpansion, spec: PrecisionSpec) -> Result<EvalPlan, BignumError> {
    if e.degree() != 1 {
        return Err(BignumError::DegreeUnsupported);
    }
    let scale = spec.scale_bits();
    let coeffs: Vec<Enclosure> = e
        .coeffs()
        .iter()
        .map(|c| Enclosure::from_q5(c, scale))
        .collect();
    let coeff_max = coeffs
        .iter()
        .map(|c| c.lo.abs().max(c.hi.abs()))
        .max()
        .expect("nonempty coefficient vector");
    let n = e.length() as u64;
    let p = e.base_exp();
    let blocks = if coeff_max.is_zero() {
        1
    } else {
        // log₂ M from the mantissa bit length (upper bound)
        let log2_m = coeff_max.bits() as f64 - scale as f64;
        choose_blocks(log2_m, n, p, spec.decimal_bits() as f64 + 2.0)
    };
    let rho = Enclosure::from_q5(&alpha_pow(-(p as i64)), scale);
    Ok(EvalPlan { coeffs, rho, blocks, coeff_max })
}

/// The a-priori truncation index K the evaluator will use.
pub fn planned_blocks(e: &PExpansion, spec: PrecisionSpec) -> Result<u64, BignumError> {
    plan_eval(e, spec).map(|p| p.blocks)
}

/// Encloses Σ_{k≥0} α^(−pk) Σ_j a_j/(nk+j). The truncation index is
/// chosen a priori from the tail bound; the partial sum is accumulated
/// with directed rounding and the exact tail bound is added back as an
/// outward margin.
pub fn eval_expansion(e: &PExpansion, spec: PrecisionSpec) -> Result<Enclosure, BignumError> {
    let plan = plan_eval(e, spec)?;
    let scale = spec.scale_bits();
    let n = e.length() as u64;
    let nonzero: Vec<(usize, &Enclosure)> = plan
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !(c.lo.is_zero() && c.hi.is_zero()))
        .collect();
    let mut sum = Enclosure::exact_zero(scale);
    let mut power = Enclosure::from_int(1, scale);
    for k in 0..plan.blocks {
        let mut block = Enclosure::exact_zero(scale);
        for &(idx, coeff) in &nonzero {
            let denom = BigInt::from(n * k + idx as u64 + 1);
            block = block.add(&coeff.div_uint(&denom));
        }
        sum = sum.add(&power.mul(&block));
        power = power.mul(&plan.rho);
    }
    // exact tail margin: M·n·ρ^K / ((nK+1)·(1−ρ)), rounded up
    let tail = if plan.coeff_max.is_zero() {
        BigInt::zero()
    } else {
        let one_minus_rho_lo = (BigInt::one() << scale as usize) - &plan.rho.hi;
        let numer = &plan.coeff_max * BigInt::from(n) * power.hi.max(BigInt::zero());
        let denom = BigInt::from(n * plan.blocks + 1) * one_minus_rho_lo;
        div_ceil_big(&numer, &denom)
    };
    Ok(sum.widen(&tail))
}

/// Runs an enclosure computation, doubling the guard bits (up to three
/// retries) until the result resolves the requested decimal digits.
pub fn with_guard_retry<F>(digits: u32, mut f: F) -> Result<Enclosure, BignumError>
where
    F: FnMut(PrecisionSpec) -> Result<Enclosure, BignumError>,
{
    let mut guard = 64u32;
    for _ in 0..4 {
        let enc = f(PrecisionSpec::with_guard(digits, guard))?;
        if enc.resolves_digits(digits) {
            return Ok(enc);
        }
        guard *= 2;
    }
    Err(BignumError::EnclosureTooWide)
}

// ---------------------------------------------------------------------------
// Oracles: atanh / ln, arctan / π
// ---------------------------------------------------------------------------

fn f64_log2_of_abs_hi(x: &Enclosure) -> f64 {
    use num::ToPrimitive;
    let m = x.lo.abs().max(x.hi.abs());
    if m.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = m.bits();
    // take the top 53 bits for a tight estimate; pad slightly upward
    let (top, shift) = if bits > 53 {
        ((&m >> (bits - 53) as usize).to_f64().unwrap(), bits - 53)
    } else {
        (m.to_f64().unwrap(), 0)
    };
    top.log2() + shift as f64 - x.scale as f64 + 1e-9
}

/// Taylor series Σ x^(2k+1)/(2k+1) for atanh on |x| ≤ 1/2.
fn atanh_taylor(x: &Enclosure, scale: u64) -> Enclosure {
    let log2_x = f64_log2_of_abs_hi(x);
    debug_assert!(log2_x <= -0.9, "atanh argument too large");
    let terms = series_terms(log2_x, scale);
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut sum = x.clone();
    for k in 1..terms {
        term = term.mul(&x2);
        sum = sum.add(&term.div_uint(&BigInt::from(2 * k + 1)));
    }
    // remainder ≤ |x|^(2N+1)/((2N+1)(1−x²)) ≤ (4/3)·|x|^(2N+1)/(2N+1)
    let next = term.mul(&x2);
    let next_abs = next.lo.abs().max(next.hi.abs());
    let rem = div_ceil_big(
        &(next_abs * BigInt::from(4)),
        &(BigInt::from(3) * BigInt::from(2 * terms + 1)),
    );
    sum.widen(&rem)
}

/// Alternating Taylor series for arctan on |x| < 1; the remainder is
/// bounded by the first omitted term.
fn arctan_taylor(x: &Enclosure, scale: u64) -> Enclosure {
    let log2_x = f64_log2_of_abs_hi(x);
    debug_assert!(log2_x < -0.05, "arctan Taylor argument too large");
    let terms = series_terms(log2_x, scale);
    let x2 = x.mul(x);
    let mut term = x.clone();
    let mut sum = x.clone();
    for k in 1..terms {
        term = term.mul(&x2);
        let contribution = term.div_uint(&BigInt::from(2 * k + 1));
        sum = if k % 2 == 1 {
            sum.sub(&contribution)
        } else {
            sum.add(&contribution)
        };
    }
    let next = term.mul(&x2);
    let next_abs = next.lo.abs().max(next.hi.abs());
    let rem = div_ceil_big(&next_abs, &BigInt::from(2 * terms + 1));
    sum.widen(&rem)
}

/// Terms needed so |x|^(2N+1)/(2N+1) ≤ 2^(−scale).
fn series_terms(log2_x: f64, scale: u64) -> u64 {
    if log2_x == f64::NEG_INFINITY {
        return 1;
    }
    let per_term = -2.0 * log2_x;
    let mut n = (scale as f64 / per_term).ceil().max(1.0);
    while (2.0 * n + 1.0) * log2_x + (2.0 * n + 1.0).log2() > -(scale as f64) {
        n += 1.0;
    }
    n as u64
}

/// Encloses ln 2 = 2·atanh(1/3).
pub fn ln2_enclosure(spec: PrecisionSpec) -> Enclosure {
    let scale = spec.scale_bits();
    let third = Enclosure::from_rational(&Rational::new(1.into(), 3.into()), scale);
    atanh_taylor(&third, scale).mul_int(2)
}

/// Encloses ln q for a positive rational q: argument reduction
/// q = 2^e·q' with q' ∈ [2/3, 4/3], then 2·atanh((q'−1)/(q'+1)).
pub fn oracle_ln(q: &Rational, spec: PrecisionSpec) -> Result<Enclosure, BignumError> {
    if !q.is_positive() {
        return Err(BignumError::NonpositiveLog);
    }
    let scale = spec.scale_bits();
    let two = Rational::from_integer(2.into());
    let upper = Rational::new(4.into(), 3.into());
    let lower = Rational::new(2.into(), 3.into());
    let mut exp2: i64 = 0;
    let mut q = q.clone();
    while q > upper {
        q /= &two;
        exp2 += 1;
    }
    while q < lower {
        q *= &two;
        exp2 -= 1;
    }
    let one = Rational::one();
    let u = (&q - &one) / (&q + &one);
    let series = atanh_taylor(&Enclosure::from_rational(&u, scale), scale).mul_int(2);
    let result = if exp2 == 0 {
        series
    } else {
        series.add(&ln2_enclosure(spec).mul_int(exp2))
    };
    Ok(result)
}

/// Encloses ln α by applying the monotone ln oracle to the rational
/// endpoints of a tight α enclosure.
pub fn ln_alpha_enclosure(spec: PrecisionSpec) -> Enclosure {
    let scale = spec.scale_bits();
    let alpha = Enclosure::from_q5(&Q5::alpha(), scale);
    let lo = oracle_ln(&alpha.lo().to_rational(), spec).expect("α > 0");
    let hi = oracle_ln(&alpha.hi().to_rational(), spec).expect("α > 0");
    Enclosure::make(lo.lo, hi.hi, scale)
}

/// Encloses π/4 = 4·arctan(1/5) − arctan(1/239) (Machin).
pub fn pi4_enclosure(spec: PrecisionSpec) -> Enclosure {
    let scale = spec.scale_bits();
    let fifth = Enclosure::from_rational(&Rational::new(1.into(), 5.into()), scale);
    let inv239 = Enclosure::from_rational(&Rational::new(1.into(), 239.into()), scale);
    arctan_taylor(&fifth, scale)
        .mul_int(4)
        .sub(&arctan_taylor(&inv239, scale))
}

/// |x| as an exact Q5 value together with the sign of x.
fn q5_abs(x: &Q5) -> (Q5, i32) {
    let s = x.signum();
    if s < 0 {
        (-x, s)
    } else {
        (x.clone(), s)
    }
}

/// Compares |x| against the rational threshold t (sign of |x| − t).
fn abs_cmp(x_abs: &Q5, t: &Rational) -> i32 {
    (x_abs - &Q5::from_rational(t.clone())).signum()
}

fn arctan_core(x: &Q5, spec: PrecisionSpec, reduce: bool) -> Enclosure {
    let scale = spec.scale_bits();
    let xe = Enclosure::from_q5(x, scale);
    if !reduce {
        return arctan_taylor(&xe, scale);
    }
    // one half-angle step: arctan x = 2·arctan(x/(1+√(1+x²)))
    let one = Enclosure::from_int(1, scale);
    let root = one.add(&xe.mul(&xe)).sqrt();
    let y = xe.div(&one.add(&root));
    arctan_taylor(&y, scale).mul_int(2)
}

/// Encloses arctan(x) for exact x ∈ Q(√5) with |x| < 1.5: one
/// half-angle reduction when |x| > 1/2, then the alternating Taylor
/// series with first-omitted-term remainder.
pub fn oracle_arctan(x: &Q5, spec: PrecisionSpec) -> Result<Enclosure, BignumError> {
    let (x_abs, _) = q5_abs(x);
    if abs_cmp(&x_abs, &Rational::new(3.into(), 2.into())) >= 0 {
        return Err(BignumError::ArctanOutOfRange);
    }
    let reduce = abs_cmp(&x_abs, &Rational::new(1.into(), 2.into())) > 0;
    Ok(arctan_core(x, spec, reduce))
}

/// Encloses arctan(x) for any exact x ∈ Q(√5), using
/// arctan x = sign(x)·(π/2 − arctan(1/|x|)) outside the oracle's range.
pub fn arctan_any(x: &Q5, spec: PrecisionSpec) -> Enclosure {
    let (x_abs, sign) = q5_abs(x);
    if sign == 0 {
        return Enclosure::exact_zero(spec.scale_bits());
    }
    if abs_cmp(&x_abs, &Rational::new(3.into(), 2.into())) < 0 {
        return oracle_arctan(x, spec).expect("in range");
    }
    let inv = x_abs.inv().expect("nonzero");
    let half_pi = pi4_enclosure(spec).mul_int(2);
    let r = half_pi.sub(&oracle_arctan(&inv, spec).expect("|1/x| < 1"));
    if sign < 0 {
        r.neg()
    } else {
        r
    }
}

/// Encloses the constant named by a tag, dispatching to the ln, arctan
/// and π oracles; the tag sign is applied last.
pub fn oracle_value(tag: &ConstantTag, spec: PrecisionSpec) -> Result<Enclosure, BignumError> {
    let rat = |n: BigInt, d: BigInt| Rational::new(n, d);
    let enc = match &tag.kind {
        TagKind::LogAlpha => ln_alpha_enclosure(spec),
        TagKind::LogSqrt5 => oracle_ln(&rat(5.into(), 1.into()), spec)?
            .div_uint(&BigInt::from(2)),
        TagKind::Log2 => oracle_ln(&rat(2.into(), 1.into()), spec)?,
        TagKind::Log5 => oracle_ln(&rat(5.into(), 1.into()), spec)?,
        TagKind::LogFib(r) => {
            let f = fib_lucas(*r as u64).f;
            oracle_ln(&Rational::from_integer(f), spec)?
        }
        TagKind::LogLucas(r) => {
            let l = fib_lucas(*r as u64).l;
            oracle_ln(&Rational::from_integer(l), spec)?
        }
        TagKind::ArctanInvFib(r) => {
            let f = fib_lucas(*r as u64).f;
            arctan_any(&Q5::from_rational(rat(1.into(), f)), spec)
        }
        TagKind::ArctanInvLucas(r) => {
            let l = fib_lucas(*r as u64).l;
            arctan_any(&Q5::from_rational(rat(1.into(), l)), spec)
        }
        TagKind::ArctanInvFibSqrt5(r) => {
            // 1/(F_r√5) = (√5)/(5F_r)
            let f = fib_lucas(*r as u64).f;
            arctan_any(&Q5::new(Rational::zero(), rat(1.into(), 5 * f)), spec)
        }
        TagKind::Arctan2OverLucas(r) => {
            let l = fib_lucas(*r as u64).l;
            arctan_any(&Q5::from_rational(rat(2.into(), l)), spec)
        }
        TagKind::Arctan2OverFibSqrt5(r) => {
            let f = fib_lucas(*r as u64).f;
            arctan_any(&Q5::new(Rational::zero(), rat(2.into(), 5 * f)), spec)
        }
        TagKind::Pi4 => pi4_enclosure(spec),
        TagKind::Zero(_) => Enclosure::exact_zero(spec.scale_bits()),
        TagKind::Custom(text) => {
            return Err(BignumError::UnsupportedTag(text.clone()))
        }
    };
    Ok(if tag.sign < 0 { enc.neg() } else { enc })
}

// ---------------------------------------------------------------------------
// Base-φ digits
// ---------------------------------------------------------------------------

/// Greedy base-φ digits of a nonnegative enclosed value. Produces
/// `count` digit positions starting at the leading place value φ^e;
/// trailing fractional zeros are stripped. The canonical greedy output
/// never contains two adjacent 1s, and the emitted digits reconstruct
/// the midpoint to within φ^(e−count+1).
pub fn phi_digits(x: &Enclosure, count: usize) -> Result<String, BignumError> {
    assert!(count >= 1);
    let mid = x.midpoint();
    if mid.is_negative() {
        return Err(BignumError::NegativeValue);
    }
    if mid.is_zero() {
        return Ok("0".to_string());
    }
    let width = x.width();
    let value = Q5::from_rational(mid);

    // leading exponent e: largest e with φ^e ≤ x
    let mut e: i64 = 0;
    if (&value - &Q5::one()).signum() >= 0 {
        while (&value - &alpha_pow(e + 1)).signum() >= 0 {
            e += 1;
        }
    } else {
        loop {
            e -= 1;
            if (&value - &alpha_pow(e)).signum() >= 0 {
                break;
            }
            if e < -(count as i64) - 64 {
                // indistinguishable from zero at this width
                return if width.is_zero() {
                    Ok("0".to_string())
                } else {
                    Err(BignumError::UndecidableDigit { index: 0 })
                };
            }
        }
    }

    let width_q5 = Q5::from_rational(width.clone());
    let decidable = |d: &Q5| -> bool {
        if width.is_zero() {
            return true;
        }
        let abs = if d.signum() < 0 { -d } else { d.clone() };
        (&abs - &width_q5).signum() > 0
    };
    // the leading-place choice is itself a digit decision
    if !decidable(&(&value - &alpha_pow(e + 1))) {
        return Err(BignumError::UndecidableDigit { index: 0 });
    }

    let mut rem = value;
    let mut digits = Vec::with_capacity(count);
    for idx in 0..count {
        let place = alpha_pow(e - idx as i64);
        let d = &rem - &place;
        if !decidable(&d) {
            return Err(BignumError::UndecidableDigit { index: idx });
        }
        if d.signum() >= 0 {
            digits.push('1');
            rem = d;
        } else {
            digits.push('0');
        }
    }

    // render with the radix point between exponents 0 and −1
    let mut int_part = String::new();
    let mut frac_part = String::new();
    if e < 0 {
        int_part.push('0');
        for _ in 0..(-e - 1) {
            frac_part.push('0');
        }
        frac_part.extend(&digits);
    } else {
        for (idx, d) in digits.iter().enumerate() {
            if e - (idx as i64) >= 0 {
                int_part.push(*d);
            } else {
                frac_part.push(*d);
            }
        }
    }
    while frac_part.ends_with('0') {
        frac_part.pop();
    }
    Ok(if frac_part.is_empty() {
        int_part
    } else {
        format!("{}.{}", int_part, frac_part)
    })
}
