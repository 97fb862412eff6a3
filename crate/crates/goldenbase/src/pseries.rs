//! The P-expansion data type and its algebra.
//!
//! A `PExpansion` is the series `P(s, α^p, n, A)`:
//!
//! ```text
//! sum_{k>=0} alpha^{-pk} sum_{j=1}^{n} a_j / (nk + j)^s
//! ```
//!
//! with degree `s` fixed to 1 throughout this crate. Rebasing,
//! stretching, scaling and linear combination are exact coefficient
//! manipulations that preserve the represented real number.

use crate::exactfield::{alpha_pow, Q5, Rational};
use num::bigint::BigInt;
use num::integer::lcm;
use num::traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("only degree-1 expansions are supported (got degree {0})")]
    DegreeUnsupported(u32),
    #[error("terms of a combination must all have degree 1")]
    MixedDegrees,
    #[error("combination requires at least one term")]
    EmptyCombination,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid expansion: {0}")]
    InvalidStructure(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// A base-α^p, length-n, degree-s expansion with Q(√5) coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct PExpansion {
    degree: u32,
    base_exp: u32,
    coeffs: Vec<Q5>,
}

impl PExpansion {
    pub fn new(degree: u32, base_exp: u32, coeffs: Vec<Q5>) -> Result<Self, SeriesError> {
        if degree < 1 {
            return Err(SeriesError::InvalidStructure("degree must be ≥ 1".into()));
        }
        if base_exp < 1 {
            return Err(SeriesError::InvalidStructure("base_exp must be ≥ 1".into()));
        }
        if coeffs.is_empty() {
            return Err(SeriesError::InvalidStructure("length must be ≥ 1".into()));
        }
        Ok(PExpansion {
            degree,
            base_exp,
            coeffs,
        })
    }

    /// Degree-1 expansion; the only degree used by the catalog.
    pub fn degree1(base_exp: u32, coeffs: Vec<Q5>) -> Result<Self, SeriesError> {
        PExpansion::new(1, base_exp, coeffs)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The exponent p of the base α^p.
    pub fn base_exp(&self) -> u32 {
        self.base_exp
    }

    pub fn length(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Q5] {
        &self.coeffs
    }

    pub fn is_zero_vector(&self) -> bool {
        self.coeffs.iter().all(Q5::is_zero)
    }

    /// Rewrites the series in base α^{pm}: block-grouping of the outer
    /// index into `m` consecutive residues. The value is unchanged; the
    /// new coefficient at slot `n·i + j` is `a_j · α^{−p·i}`.
    pub fn rebase(&self, m: u32) -> PExpansion {
        assert!(m >= 1, "rebase factor must be ≥ 1");
        if m == 1 {
            return self.clone();
        }
        let n = self.length();
        let mut coeffs = Vec::with_capacity(n * m as usize);
        for i in 0..m as i64 {
            let shift = alpha_pow(-(self.base_exp as i64) * i);
            for a in &self.coeffs {
                coeffs.push(a * &shift);
            }
        }
        PExpansion {
            degree: self.degree,
            base_exp: self.base_exp * m,
            coeffs,
        }
    }

    /// Length dilation at the same base, via 1/(nk+j) = c/(cnk+cj).
    /// Only valid for degree 1.
    pub fn stretch(&self, c: u32) -> Result<PExpansion, SeriesError> {
        if self.degree != 1 {
            return Err(SeriesError::DegreeUnsupported(self.degree));
        }
        assert!(c >= 1, "stretch factor must be ≥ 1");
        if c == 1 {
            return Ok(self.clone());
        }
        let n = self.length();
        let factor = Rational::from_integer(BigInt::from(c));
        let mut coeffs = vec![Q5::zero(); n * c as usize];
        for (j, a) in self.coeffs.iter().enumerate() {
            // old slot j+1 moves to slot c·(j+1), scaled by c
            coeffs[c as usize * (j + 1) - 1] = a.scale(&factor);
        }
        Ok(PExpansion {
            degree: self.degree,
            base_exp: self.base_exp,
            coeffs,
        })
    }

    /// Multiplies every coefficient (and hence the value) by `c`.
    pub fn scale(&self, c: &Q5) -> PExpansion {
        PExpansion {
            degree: self.degree,
            base_exp: self.base_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Brings two expansions to a common base and length.
pub fn common_form(e1: &PExpansion, e2: &PExpansion) -> Result<(PExpansion, PExpansion), SeriesError> {
    if e1.degree != 1 || e2.degree != 1 {
        return Err(SeriesError::MixedDegrees);
    }
    let p = lcm(e1.base_exp, e2.base_exp);
    let r1 = e1.rebase(p / e1.base_exp);
    let r2 = e2.rebase(p / e2.base_exp);
    let n = lcm(r1.length(), r2.length());
    let s1 = r1.stretch((n / r1.length()) as u32)?;
    let s2 = r2.stretch((n / r2.length()) as u32)?;
    Ok((s1, s2))
}

/// Exact linear combination: all terms are rebased to the lcm of the
/// base exponents, stretched to the lcm of the resulting lengths, and
/// the coefficient vectors are added with the given Q(√5) weights.
pub fn combine(terms: &[(Q5, PExpansion)]) -> Result<PExpansion, SeriesError> {
    if terms.is_empty() {
        return Err(SeriesError::EmptyCombination);
    }
    if terms.iter().any(|(_, e)| e.degree != 1) {
        return Err(SeriesError::MixedDegrees);
    }
    let p = terms
        .iter()
        .fold(1u32, |acc, (_, e)| lcm(acc, e.base_exp));
    let rebased: Vec<PExpansion> = terms
        .iter()
        .map(|(_, e)| e.rebase(p / e.base_exp))
        .collect();
    let n = rebased.iter().fold(1usize, |acc, r| lcm(acc, r.length()));
    let mut coeffs = vec![Q5::zero(); n];
    for (r, (c, _)) in rebased.iter().zip(terms.iter()) {
        let s = r.stretch((n / r.length()) as u32)?;
        for (slot, a) in coeffs.iter_mut().zip(s.coeffs.iter()) {
            *slot = &*slot + &(a * c);
        }
    }
    Ok(PExpansion {
        degree: 1,
        base_exp: p,
        coeffs,
    })
}

/// If `e1 = scale(e2, c)` for some Q(√5) scalar c, returns that c.
/// Requires matching degree, base exponent and length.
pub fn is_scalar_multiple(e1: &PExpansion, e2: &PExpansion) -> Result<Option<Q5>, SeriesError> {
    if e1.degree != e2.degree || e1.base_exp != e2.base_exp || e1.length() != e2.length() {
        return Err(SeriesError::DimensionMismatch(format!(
            "P({},α^{},{}) vs P({},α^{},{})",
            e1.degree,
            e1.base_exp,
            e1.length(),
            e2.degree,
            e2.base_exp,
            e2.length()
        )));
    }
    // candidate ratio from the first slot where e2 is nonzero
    let mut candidate: Option<Q5> = None;
    for (x, y) in e1.coeffs.iter().zip(e2.coeffs.iter()) {
        if !y.is_zero() {
            let c = x * &y.inv().expect("nonzero");
            candidate = Some(c);
            break;
        }
    }
    let c = match candidate {
        Some(c) => c,
        // e2 is the zero vector: e1 must be too, and any scalar works
        None => {
            return Ok(if e1.is_zero_vector() {
                Some(Q5::one())
            } else {
                None
            })
        }
    };
    for (x, y) in e1.coeffs.iter().zip(e2.coeffs.iter()) {
        if y.is_zero() {
            if !x.is_zero() {
                return Ok(None);
            }
        } else if *x != &c * y {
            return Ok(None);
        }
    }
    Ok(Some(c))
}

/// Detects whether `x` is exactly a rational multiple of a β power,
/// returning the smallest such exponent. Searches k = 0..=limit.
fn as_beta_multiple(x: &Q5, limit: u32) -> Option<(Rational, u32)> {
    if x.is_zero() {
        return None;
    }
    // x·(−α)^k rational  ⇔  x = q·β^k
    let minus_alpha = -&Q5::alpha();
    let mut y = x.clone();
    for k in 0..=limit {
        if y.is_rational() {
            return Some((y.a.clone(), k));
        }
        y = &y * &minus_alpha;
    }
    None
}

fn render_coeff(x: &Q5, limit: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    match as_beta_multiple(x, limit) {
        Some((q, 0)) => format!("{}", q),
        Some((q, k)) => {
            let beta = if k == 1 {
                "β".to_string()
            } else {
                format!("β^{}", k)
            };
            if q.is_one() {
                beta
            } else if (-q.clone()).is_one() {
                format!("-{}", beta)
            } else if q.denom().is_one() {
                format!("{}{}", q, beta)
            } else {
                format!("({}){}", q, beta)
            }
        }
        None => format!("{}", x),
    }
}

/// Renders the compact P-notation, e.g.
/// `P(1, α^12, 6, (β^2, 3β^4, 4β^6, 3β^8, β^10, 0))`.
pub fn render_pnotation(e: &PExpansion) -> String {
    let limit = 8 * (e.base_exp + e.length() as u32) + 64;
    let base = if e.base_exp == 1 {
        "α".to_string()
    } else {
        format!("α^{}", e.base_exp)
    };
    let coeffs: Vec<String> = e.coeffs.iter().map(|a| render_coeff(a, limit)).collect();
    format!(
        "P({}, {}, {}, ({}))",
        e.degree,
        base,
        e.length(),
        coeffs.join(", ")
    )
}

impl fmt::Display for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_pnotation(self))
    }
}

impl fmt::Debug for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_pnotation(self))
    }
}

// ---------------------------------------------------------------------------
// Constant tags
// ---------------------------------------------------------------------------

/// The symbolic identity of a target constant, used to select oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TagKind {
    LogAlpha,
    LogSqrt5,
    LogFib(u32),
    LogLucas(u32),
    Log2,
    Log5,
    ArctanInvFib(u32),
    ArctanInvLucas(u32),
    ArctanInvFibSqrt5(u32),
    Arctan2OverLucas(u32),
    Arctan2OverFibSqrt5(u32),
    Pi4,
    Zero(String),
    Custom(String),
}

/// A tag with an explicit sign: the expansion's value is `sign · constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTag {
    pub kind: TagKind,
    pub sign: i8,
}

impl ConstantTag {
    pub fn plus(kind: TagKind) -> Self {
        ConstantTag { kind, sign: 1 }
    }

    pub fn minus(kind: TagKind) -> Self {
        ConstantTag { kind, sign: -1 }
    }

    pub fn negated(&self) -> Self {
        ConstantTag {
            kind: self.kind.clone(),
            sign: -self.sign,
        }
    }
}

impl fmt::Display for ConstantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        match &self.kind {
            TagKind::LogAlpha => write!(f, "log α"),
            TagKind::LogSqrt5 => write!(f, "log √5"),
            TagKind::LogFib(r) => write!(f, "log F_{}", r),
            TagKind::LogLucas(r) => write!(f, "log L_{}", r),
            TagKind::Log2 => write!(f, "log 2"),
            TagKind::Log5 => write!(f, "log 5"),
            TagKind::ArctanInvFib(r) => write!(f, "arctan(1/F_{})", r),
            TagKind::ArctanInvLucas(r) => write!(f, "arctan(1/L_{})", r),
            TagKind::ArctanInvFibSqrt5(r) => write!(f, "arctan(1/(F_{}√5))", r),
            TagKind::Arctan2OverLucas(r) => write!(f, "arctan(2/L_{})", r),
            TagKind::Arctan2OverFibSqrt5(r) => write!(f, "arctan(2/(F_{}√5))", r),
            TagKind::Pi4 => write!(f, "π/4"),
            TagKind::Zero(name) => write!(f, "0 [{}]", name),
            TagKind::Custom(text) => write!(f, "{}", text),
        }
    }
}

// ---------------------------------------------------------------------------
// Serialization (canonical, versioned)
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CoeffDoc {
    a: String,
    b: String,
}

#[derive(Serialize, Deserialize)]
struct TagDoc {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    text: Option<String>,
    sign: i8,
}

#[derive(Serialize, Deserialize)]
struct ExpansionDoc {
    version: u32,
    degree: u32,
    base_exp: u32,
    length: u32,
    tag: TagDoc,
    coeffs: Vec<CoeffDoc>,
}

fn rational_to_doc(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn rational_from_doc(s: &str) -> Result<Rational, String> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| format!("expected \"num/den\", got {:?}", s))?;
    let num: BigInt = num
        .parse()
        .map_err(|e| format!("bad numerator {:?}: {}", num, e))?;
    let den: BigInt = den
        .parse()
        .map_err(|e| format!("bad denominator {:?}: {}", den, e))?;
    if den.is_zero() {
        return Err("denominator must be nonzero".to_string());
    }
    if den.is_negative() {
        return Err("denominator must be positive".to_string());
    }
    Ok(Rational::new(num, den))
}

fn tag_to_doc(tag: &ConstantTag) -> TagDoc {
    let (kind, r, name, text) = match &tag.kind {
        TagKind::LogAlpha => ("LogAlpha", None, None, None),
        TagKind::LogSqrt5 => ("LogSqrt5", None, None, None),
        TagKind::LogFib(r) => ("LogFib", Some(*r), None, None),
        TagKind::LogLucas(r) => ("LogLucas", Some(*r), None, None),
        TagKind::Log2 => ("Log2", None, None, None),
        TagKind::Log5 => ("Log5", None, None, None),
        TagKind::ArctanInvFib(r) => ("ArctanInvFib", Some(*r), None, None),
        TagKind::ArctanInvLucas(r) => ("ArctanInvLucas", Some(*r), None, None),
        TagKind::ArctanInvFibSqrt5(r) => ("ArctanInvFibSqrt5", Some(*r), None, None),
        TagKind::Arctan2OverLucas(r) => ("Arctan2OverLucas", Some(*r), None, None),
        TagKind::Arctan2OverFibSqrt5(r) => ("Arctan2OverFibSqrt5", Some(*r), None, None),
        TagKind::Pi4 => ("Pi4", None, None, None),
        TagKind::Zero(n) => ("Zero", None, Some(n.clone()), None),
        TagKind::Custom(t) => ("Custom", None, None, Some(t.clone())),
    };
    TagDoc {
        kind: kind.to_string(),
        r,
        name,
        text,
        sign: tag.sign,
    }
}

fn tag_from_doc(doc: &TagDoc) -> Result<ConstantTag, String> {
    let need_r = || doc.r.ok_or_else(|| format!("tag {:?} requires \"r\"", doc.kind));
    let kind = match doc.kind.as_str() {
        "LogAlpha" => TagKind::LogAlpha,
        "LogSqrt5" => TagKind::LogSqrt5,
        "LogFib" => TagKind::LogFib(need_r()?),
        "LogLucas" => TagKind::LogLucas(need_r()?),
        "Log2" => TagKind::Log2,
        "Log5" => TagKind::Log5,
        "ArctanInvFib" => TagKind::ArctanInvFib(need_r()?),
        "ArctanInvLucas" => TagKind::ArctanInvLucas(need_r()?),
        "ArctanInvFibSqrt5" => TagKind::ArctanInvFibSqrt5(need_r()?),
        "Arctan2OverLucas" => TagKind::Arctan2OverLucas(need_r()?),
        "Arctan2OverFibSqrt5" => TagKind::Arctan2OverFibSqrt5(need_r()?),
        "Pi4" => TagKind::Pi4,
        "Zero" => TagKind::Zero(
            doc.name
                .clone()
                .ok_or_else(|| "Zero tag requires \"name\"".to_string())?,
        ),
        "Custom" => TagKind::Custom(
            doc.text
                .clone()
                .ok_or_else(|| "Custom tag requires \"text\"".to_string())?,
        ),
        other => return Err(format!("unknown tag kind {:?}", other)),
    };
    if doc.sign != 1 && doc.sign != -1 {
        return Err(format!("sign must be 1 or -1, got {}", doc.sign));
    }
    Ok(ConstantTag {
        kind,
        sign: doc.sign,
    })
}

/// Serializes an expansion with its tag into the canonical versioned
/// JSON document. Field order is fixed so documents are byte-comparable.
pub fn serialize(e: &PExpansion, tag: &ConstantTag) -> String {
    let doc = ExpansionDoc {
        version: 1,
        degree: e.degree,
        base_exp: e.base_exp,
        length: e.length() as u32,
        tag: tag_to_doc(tag),
        coeffs: e
            .coeffs
            .iter()
            .map(|c| CoeffDoc {
                a: rational_to_doc(&c.a),
                b: rational_to_doc(&c.b),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serialization cannot fail")
}

/// Parses the canonical document back into an expansion and tag.
pub fn deserialize(text: &str) -> Result<(PExpansion, ConstantTag), SeriesError> {
    let doc: ExpansionDoc = serde_json::from_str(text).map_err(|e| SeriesError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let validation = |message: String| SeriesError::Parse {
        line: 0,
        column: 0,
        message,
    };
    if doc.version != 1 {
        return Err(validation(format!("unsupported version {}", doc.version)));
    }
    if doc.coeffs.len() != doc.length as usize {
        return Err(validation(format!(
            "length field is {} but {} coefficients are present",
            doc.length,
            doc.coeffs.len()
        )));
    }
    let tag = tag_from_doc(&doc.tag).map_err(validation)?;
    let mut coeffs = Vec::with_capacity(doc.coeffs.len());
    for c in &doc.coeffs {
        coeffs.push(Q5::new(
            rational_from_doc(&c.a).map_err(&validation)?,
            rational_from_doc(&c.b).map_err(&validation)?,
        ));
    }
    let e = PExpansion::new(doc.degree, doc.base_exp, coeffs)
        .map_err(|err| validation(err.to_string()))?;
    Ok((e, tag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::beta_pow;
    use proptest::prelude::*;

    fn beta_vec(entries: &[(i64, i64)]) -> Vec<Q5> {
        // (multiplier, beta exponent); multiplier 0 means a zero slot
        entries
            .iter()
            .map(|&(m, k)| {
                if m == 0 {
                    Q5::zero()
                } else {
                    beta_pow(k).scale(&Rational::from_integer(BigInt::from(m)))
                }
            })
            .collect()
    }

    fn log_lucas3() -> PExpansion {
        PExpansion::degree1(6, beta_vec(&[(3, 2), (3, 4), (0, 0)])).unwrap()
    }

    #[test]
    fn rebase_log_lucas3() {
        let rebased = log_lucas3().rebase(2);
        let expected = PExpansion::degree1(
            12,
            beta_vec(&[(3, 2), (3, 4), (0, 0), (3, 8), (3, 10), (0, 0)]),
        )
        .unwrap();
        assert_eq!(rebased, expected);
    }

    #[test]
    fn rebase_identity() {
        let e = log_lucas3();
        assert_eq!(e.rebase(1), e);
    }

    #[test]
    fn rebase_composes() {
        let e = log_lucas3();
        assert_eq!(e.rebase(2).rebase(3), e.rebase(6));
    }

    #[test]
    fn stretch_examples() {
        let e = PExpansion::degree1(4, beta_vec(&[(4, 2), (0, 0)])).unwrap();
        let expected =
            PExpansion::degree1(4, beta_vec(&[(0, 0), (8, 2), (0, 0), (0, 0)])).unwrap();
        assert_eq!(e.stretch(2).unwrap(), expected);
        assert_eq!(e.stretch(1).unwrap(), e);

        // log α from Li₁(1/α²)
        let one_term = PExpansion::degree1(2, beta_vec(&[(1, 2)])).unwrap();
        let expected = PExpansion::degree1(2, beta_vec(&[(0, 0), (2, 2)])).unwrap();
        assert_eq!(one_term.stretch(2).unwrap(), expected);
    }

    #[test]
    fn stretch_rejects_higher_degree() {
        let e = PExpansion::new(2, 4, beta_vec(&[(1, 2)])).unwrap();
        assert_eq!(e.stretch(2), Err(SeriesError::DegreeUnsupported(2)));
    }

    #[test]
    fn stretch_and_rebase_commute() {
        let e = log_lucas3();
        assert_eq!(
            e.rebase(3).stretch(2).unwrap(),
            e.stretch(2).unwrap().rebase(3)
        );
    }

    #[test]
    fn scale_examples() {
        let e = log_lucas3();
        assert_eq!(e.scale(&Q5::one()), e);
        assert!(e.scale(&Q5::zero()).is_zero_vector());
    }

    #[test]
    fn combine_single_term_is_identity() {
        let e = log_lucas3();
        let combined = combine(&[(Q5::one(), e.clone())]).unwrap();
        assert_eq!(combined, e);
    }

    #[test]
    fn combine_rejects_empty() {
        assert_eq!(combine(&[]), Err(SeriesError::EmptyCombination));
    }

    #[test]
    fn scalar_multiple_roundtrip() {
        let e = log_lucas3();
        assert_eq!(is_scalar_multiple(&e, &e).unwrap(), Some(Q5::one()));
        let c = beta_pow(3);
        let scaled = e.scale(&c);
        assert_eq!(is_scalar_multiple(&scaled, &e).unwrap(), Some(c.clone()));
        assert_eq!(
            is_scalar_multiple(&e, &scaled).unwrap(),
            Some(c.inv().unwrap())
        );
    }

    #[test]
    fn scalar_multiple_dimension_mismatch() {
        let e = log_lucas3();
        let other = e.rebase(2);
        assert!(matches!(
            is_scalar_multiple(&e, &other),
            Err(SeriesError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn scalar_multiple_zero_position_disagreement() {
        let e = log_lucas3();
        let mut coeffs = e.coeffs().to_vec();
        coeffs[2] = Q5::one(); // e has zero there
        let other = PExpansion::degree1(6, coeffs).unwrap();
        assert_eq!(is_scalar_multiple(&other, &e).unwrap(), None);
    }

    #[test]
    fn render_log_lucas2() {
        let e = PExpansion::degree1(8, beta_vec(&[(2, 2), (4, 4), (2, 6), (0, 0)])).unwrap();
        assert_eq!(
            render_pnotation(&e),
            "P(1, α^8, 4, (2β^2, 4β^4, 2β^6, 0))"
        );
    }

    #[test]
    fn render_all_zero() {
        let e = PExpansion::degree1(4, vec![Q5::zero(), Q5::zero()]).unwrap();
        assert_eq!(render_pnotation(&e), "P(1, α^4, 2, (0, 0))");
    }

    #[test]
    fn render_base_exponent_one() {
        let e = PExpansion::degree1(1, beta_vec(&[(0, 0), (-1, 1)])).unwrap();
        assert_eq!(render_pnotation(&e), "P(1, α, 2, (0, -β))");
    }

    #[test]
    fn serialize_roundtrip() {
        let e = log_lucas3();
        let tag = ConstantTag::plus(TagKind::LogLucas(3));
        let text = serialize(&e, &tag);
        let (e2, tag2) = deserialize(&text).unwrap();
        assert_eq!(e, e2);
        assert_eq!(tag, tag2);
        // canonical: re-encoding is byte-identical
        assert_eq!(serialize(&e2, &tag2), text);
    }

    #[test]
    fn deserialize_truncated_errors() {
        let e = log_lucas3();
        let tag = ConstantTag::plus(TagKind::LogLucas(3));
        let text = serialize(&e, &tag);
        let truncated = &text[..text.len() / 2];
        assert!(matches!(
            deserialize(truncated),
            Err(SeriesError::Parse { .. })
        ));
    }

    #[test]
    fn deserialize_zero_denominator_errors() {
        let text = r#"{"version":1,"degree":1,"base_exp":2,"length":1,"tag":{"kind":"Pi4","sign":1},"coeffs":[{"a":"1/0","b":"0/1"}]}"#;
        assert!(matches!(deserialize(text), Err(SeriesError::Parse { .. })));
    }

    fn arb_expansion() -> impl Strategy<Value = PExpansion> {
        (
            1u32..6,
            proptest::collection::vec((-4i64..5, 0i64..8), 1..6),
        )
            .prop_map(|(p, entries)| PExpansion::degree1(p, beta_vec(&entries)).unwrap())
    }

    proptest! {
        #[test]
        fn rebase_compose_prop(e in arb_expansion(), m1 in 1u32..4, m2 in 1u32..4) {
            prop_assert_eq!(e.rebase(m1).rebase(m2), e.rebase(m1 * m2));
        }

        #[test]
        fn stretch_rebase_commute_prop(e in arb_expansion(), m in 1u32..4, c in 1u32..4) {
            prop_assert_eq!(
                e.rebase(m).stretch(c).unwrap(),
                e.stretch(c).unwrap().rebase(m)
            );
        }

        #[test]
        fn scalar_multiple_detects_scale(e in arb_expansion(), k in -5i64..6) {
            prop_assume!(!e.is_zero_vector());
            let c = beta_pow(k);
            prop_assert_eq!(
                is_scalar_multiple(&e.scale(&c), &e).unwrap(),
                Some(c)
            );
        }

        #[test]
        fn serde_roundtrip_prop(e in arb_expansion()) {
            let tag = ConstantTag::plus(TagKind::Custom("x".into()));
            let (e2, _) = deserialize(&serialize(&e, &tag)).unwrap();
            prop_assert_eq!(e, e2);
        }
    }
}
