//! Generators for the cataloged expansions, the paper-literal vectors
//! they are checked against, and the registry of named zero relations.
//!
//! Every generator builds its coefficient vector exactly in Q(√5) from
//! the theorem parameterization. The sparse inverse-tangent families
//! are produced by accumulating each coefficient family into a zero
//! vector, so overlapping positions add; the merged closed forms are
//! asserted in tests rather than hard-coded.

use crate::exactfield::{alpha_pow, beta_pow, Q5};
use crate::pseries::{combine, ConstantTag, PExpansion, SeriesError, TagKind};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("{0}")]
    Domain(String),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// How a catalog entry was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Built from a theorem's closed-form coefficient rule.
    TheoremFormula,
    /// Transcribed verbatim from a worked example.
    PaperLiteralVector,
    /// Produced by an exact linear combination of other entries.
    DerivedCombination,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub tag: ConstantTag,
    pub expansion: PExpansion,
    pub provenance: Provenance,
}

impl CatalogEntry {
    /// The family parameter r, when the tag has one.
    pub fn r(&self) -> Option<u32> {
        match self.tag.kind {
            TagKind::LogFib(r)
            | TagKind::LogLucas(r)
            | TagKind::ArctanInvFib(r)
            | TagKind::ArctanInvLucas(r)
            | TagKind::ArctanInvFibSqrt5(r)
            | TagKind::Arctan2OverLucas(r)
            | TagKind::Arctan2OverFibSqrt5(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero_relation(&self) -> bool {
        matches!(self.tag.kind, TagKind::Zero(_))
    }
}

// ---------------------------------------------------------------------------
// Small construction helpers
// ---------------------------------------------------------------------------

fn int_q5(n: i64) -> Q5 {
    Q5::from_int(n)
}

/// n·β^k as a Q5 coefficient.
fn nbeta(n: i64, k: i64) -> Q5 {
    if n == 0 {
        Q5::zero()
    } else {
        &int_q5(n) * &beta_pow(k)
    }
}

/// Dense coefficient vector from (multiplier, β exponent) pairs.
fn dense(entries: &[(i64, i64)]) -> Vec<Q5> {
    entries.iter().map(|&(n, k)| nbeta(n, k)).collect()
}

/// Sparse vector of the given length from (1-based position,
/// multiplier, β exponent) triples; unnamed positions are zero.
fn sparse(len: usize, entries: &[(usize, i64, i64)]) -> Vec<Q5> {
    let mut v = vec![Q5::zero(); len];
    for &(pos, n, k) in entries {
        v[pos - 1] = nbeta(n, k);
    }
    v
}

fn expansion(base_exp: u32, coeffs: Vec<Q5>) -> PExpansion {
    PExpansion::degree1(base_exp, coeffs).expect("valid construction")
}

// ---------------------------------------------------------------------------
// Li₁ building blocks
// ---------------------------------------------------------------------------

/// Expansion of Li₁(1/αᵗ) (negated = false) or Li₁(−1/αᵗ)
/// (negated = true), block-grouped with parameter m.
///
/// Plain: base α^{tm}, length m, a_j = α^{−tj}.
/// Negated: base α^{2tm}, length 2m, a_j = (−1)^j α^{−tj}; the even
/// length absorbs the alternating sign so the base stays a positive
/// power of α.
pub fn li1_expansion(t: u32, m: u32, negated: bool) -> PExpansion {
    assert!(t >= 1 && m >= 1);
    let t = t as i64;
    if !negated {
        let coeffs = (1..=m as i64).map(|j| alpha_pow(-t * j)).collect();
        expansion((t * m as i64) as u32, coeffs)
    } else {
        let coeffs = (1..=2 * m as i64)
            .map(|j| {
                let a = alpha_pow(-t * j);
                if j % 2 == 1 {
                    -a
                } else {
                    a
                }
            })
            .collect();
        expansion((2 * t * m as i64) as u32, coeffs)
    }
}

/// Expansion of arctan(1/αᵗ): P(1, α^{4t}, 4, (α^{−t}, 0, −α^{−3t}, 0)).
pub fn arctan_inv_alpha_pow(t: u32) -> PExpansion {
    assert!(t >= 1);
    let t = t as i64;
    expansion(
        4 * t as u32,
        vec![
            alpha_pow(-t),
            Q5::zero(),
            -alpha_pow(-3 * t),
            Q5::zero(),
        ],
    )
}

// ---------------------------------------------------------------------------
// Logarithm generators
// ---------------------------------------------------------------------------

/// Expansion of log F_r: base α^{4r}, length 2r.
pub fn log_fib(r: u32) -> Result<PExpansion, CatalogError> {
    if r == 0 {
        return Err(CatalogError::Domain("r ≠ 0 required".into()));
    }
    let ri = r as i64;
    let mut coeffs = Vec::with_capacity(2 * r as usize);
    if r % 2 == 1 {
        for j in 1..=ri {
            // a_{2j−1} = β^{4j−2}(r − 2 + r·δ_{j,(r+1)/2})
            let mult = ri - 2 + if j == (ri + 1) / 2 { ri } else { 0 };
            coeffs.push(nbeta(mult, 4 * j - 2));
            // a_{2j} = β^{4j}·r·(1 − δ_{j,r})
            coeffs.push(nbeta(if j == ri { 0 } else { ri }, 4 * j));
        }
    } else {
        for j in 1..=ri {
            coeffs.push(nbeta(ri - 2, 4 * j - 2));
            let mult = if j == ri / 2 || j == ri { 0 } else { ri };
            coeffs.push(nbeta(mult, 4 * j));
        }
    }
    Ok(expansion(4 * r, coeffs))
}

/// Expansion of log L_r: base α^{2r} length r (odd r) or base α^{4r}
/// length 2r (even r).
pub fn log_lucas(r: u32) -> Result<PExpansion, CatalogError> {
    if r == 0 {
        return Err(CatalogError::Domain("r ≠ 0 required".into()));
    }
    let ri = r as i64;
    if r % 2 == 1 {
        let coeffs = (1..=ri)
            .map(|j| nbeta(if j == ri { 0 } else { ri }, 2 * j))
            .collect();
        Ok(expansion(2 * r, coeffs))
    } else {
        let coeffs = (1..=2 * ri)
            .map(|j| {
                let mult = if j == 2 * ri {
                    0
                } else if j == ri {
                    2 * ri
                } else {
                    ri
                };
                nbeta(mult, 2 * j)
            })
            .collect();
        Ok(expansion(4 * r, coeffs))
    }
}

/// Targets that can be assembled from Li₁ terms by exact combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Li1Target {
    LogFib(u32),
    LogLucas(u32),
    LogSqrt5,
    Log2Alt,
    Log5Alt,
    LogAlphaV1,
    LogAlphaV2,
}

/// Builds a constant from Li₁ expansions via `combine`, following the
/// proofs rather than the closed-form coefficient rules.
pub fn build_via_li1(target: Li1Target) -> Result<PExpansion, CatalogError> {
    let li = li1_expansion;
    let e = match target {
        Li1Target::LogFib(r) => {
            if r == 0 {
                return Err(CatalogError::Domain("r ≠ 0 required".into()));
            }
            // log F_r = (r−2)·Li₁(1/α²) + Li₁(1/α⁴) − Li₁((−1)^r/α^{2r})
            let last = li(2 * r, 1, r % 2 == 1);
            combine(&[
                (int_q5(r as i64 - 2), li(2, 1, false)),
                (Q5::one(), li(4, 1, false)),
                (int_q5(-1), last),
            ])?
        }
        Li1Target::LogLucas(r) => {
            if r == 0 {
                return Err(CatalogError::Domain("r ≠ 0 required".into()));
            }
            // log L_r = r·Li₁(1/α²) − Li₁((−1)^{r+1}/α^{2r})
            let last = li(2 * r, 1, r % 2 == 0);
            combine(&[(int_q5(r as i64), li(2, 1, false)), (int_q5(-1), last)])?
        }
        Li1Target::LogSqrt5 => combine(&[
            (int_q5(2), li(2, 1, false)),
            (int_q5(-1), li(4, 1, false)),
        ])?,
        Li1Target::Log2Alt => combine(&[
            (Q5::one(), li(1, 1, false)),
            (int_q5(-1), li(3, 1, false)),
        ])?,
        Li1Target::Log5Alt => combine(&[
            (int_q5(2), li(2, 1, false)),
            (int_q5(-2), li(2, 1, true)),
        ])?,
        Li1Target::LogAlphaV1 => {
            // log α = ½·Li₁(1/α), stretched to land on even slots
            let half = Q5::from_rational(num::rational::BigRational::new(
                num::bigint::BigInt::from(1),
                num::bigint::BigInt::from(2),
            ));
            li(1, 1, false).stretch(2)?.scale(&half)
        }
        Li1Target::LogAlphaV2 => li(2, 1, false).stretch(2)?,
    };
    Ok(e)
}

// ---------------------------------------------------------------------------
// Inverse tangent generators
// ---------------------------------------------------------------------------

struct Family {
    stride: i64,
    count: i64,
    sign_4jm3: i64, // multiplier sign for positions stride·(4j−3)
    sign_4jm1: i64, // multiplier sign for positions stride·(4j−1)
}

fn accumulate_families(len: usize, families: &[Family]) -> Vec<Q5> {
    let mut coeffs = vec![Q5::zero(); len];
    for fam in families {
        for j in 1..=fam.count {
            for (idx, sign) in [(4 * j - 3, fam.sign_4jm3), (4 * j - 1, fam.sign_4jm1)] {
                let pos = fam.stride * idx;
                let slot = &mut coeffs[(pos - 1) as usize];
                *slot = &*slot + &nbeta(sign * fam.stride, pos);
            }
        }
    }
    coeffs
}

/// Expansion of arctan(1/F_r) for r ≥ 2 (any even r, odd r ≥ 3).
pub fn arctan_inv_fib(r: u32) -> Result<PExpansion, CatalogError> {
    if r == 0 {
        return Err(CatalogError::Domain("r ≠ 0 required".into()));
    }
    if r == 1 {
        return Err(CatalogError::Domain(
            "r ≥ 2 required (F₁ = F₂, use r = 2)".into(),
        ));
    }
    let ri = r as i64;
    if r % 2 == 1 {
        let len = 4 * (ri * ri - 4);
        let coeffs = accumulate_families(
            len as usize,
            &[
                Family { stride: ri - 2, count: ri + 2, sign_4jm3: -1, sign_4jm1: 1 },
                Family { stride: ri + 2, count: ri - 2, sign_4jm3: 1, sign_4jm1: -1 },
            ],
        );
        Ok(expansion(len as u32, coeffs))
    } else {
        let len = 4 * (ri * ri - 1);
        let coeffs = accumulate_families(
            len as usize,
            &[
                Family { stride: ri - 1, count: ri + 1, sign_4jm3: -1, sign_4jm1: 1 },
                Family { stride: ri + 1, count: ri - 1, sign_4jm3: -1, sign_4jm1: 1 },
            ],
        );
        Ok(expansion(len as u32, coeffs))
    }
}

/// Expansion of arctan(1/L_r) for r ≥ 1. Even r uses the sparse-family
/// theorem; odd r is the negated length-12 family.
pub fn arctan_inv_lucas(r: u32) -> Result<PExpansion, CatalogError> {
    if r == 0 {
        return Err(CatalogError::Domain("r ≠ 0 required".into()));
    }
    let ri = r as i64;
    if r % 2 == 0 {
        let len = 4 * (ri * ri - 1);
        let coeffs = accumulate_families(
            len as usize,
            &[
                Family { stride: ri - 1, count: ri + 1, sign_4jm3: -1, sign_4jm1: 1 },
                Family { stride: ri + 1, count: ri - 1, sign_4jm3: 1, sign_4jm1: -1 },
            ],
        );
        Ok(expansion(len as u32, coeffs))
    } else {
        Ok(family12_expansion(r).scale(&int_q5(-1)))
    }
}

/// The length-12 family: P(1, α^{12r}, 12, (β^r, 0, 2β^{3r}, 0, β^{5r},
/// 0, −β^{7r}, 0, −2β^{9r}, 0, −β^{11r}, 0)).
pub fn family12_expansion(r: u32) -> PExpansion {
    assert!(r >= 1);
    let ri = r as i64;
    expansion(
        12 * r,
        sparse(
            12,
            &[
                (1, 1, ri),
                (3, 2, 3 * ri),
                (5, 1, 5 * ri),
                (7, -1, 7 * ri),
                (9, -2, 9 * ri),
                (11, -1, 11 * ri),
            ],
        ),
    )
}

/// Length-12 family entry: value −arctan(1/L_r) for odd r,
/// arctan(1/(F_r√5)) for even r.
pub fn arctan_family12(r: u32) -> Result<CatalogEntry, CatalogError> {
    if r == 0 {
        return Err(CatalogError::Domain("r ≠ 0 required".into()));
    }
    let tag = if r % 2 == 1 {
        ConstantTag::minus(TagKind::ArctanInvLucas(r))
    } else {
        ConstantTag::plus(TagKind::ArctanInvFibSqrt5(r))
    };
    Ok(CatalogEntry {
        name: format!("atan12/{}", r),
        tag,
        expansion: family12_expansion(r),
        provenance: Provenance::TheoremFormula,
    })
}

/// Doubling family entry: P(1, α^{4r}, 4, (2β^r, 0, −2β^{3r}, 0)) with
/// value −arctan(2/L_r) for odd r, arctan(2/(F_r√5)) for even r.
pub fn arctan_double(r: u32) -> Result<CatalogEntry, CatalogError> {
    if r == 0 {
        return Err(CatalogError::Domain("r ≠ 0 required".into()));
    }
    let ri = r as i64;
    let e = expansion(
        4 * r,
        sparse(4, &[(1, 2, ri), (3, -2, 3 * ri)]),
    );
    let tag = if r % 2 == 1 {
        ConstantTag::minus(TagKind::Arctan2OverLucas(r))
    } else {
        ConstantTag::plus(TagKind::Arctan2OverFibSqrt5(r))
    };
    Ok(CatalogEntry {
        name: format!("atan2L/{}", r),
        tag,
        expansion: e,
        provenance: Provenance::TheoremFormula,
    })
}

// ---------------------------------------------------------------------------
// Paper-literal vectors (worked examples, transcribed verbatim)
// ---------------------------------------------------------------------------

pub mod paper_vectors {
    //! The worked-example vectors, stored exactly as printed. These are
    //! the golden references the generators are tested against.

    use super::{dense, expansion, sparse};
    use crate::pseries::PExpansion;

    pub fn log_fib_3() -> PExpansion {
        expansion(12, dense(&[(1, 2), (3, 4), (4, 6), (3, 8), (1, 10), (0, 0)]))
    }

    pub fn log_fib_4() -> PExpansion {
        expansion(
            16,
            dense(&[
                (2, 2), (4, 4), (2, 6), (0, 0), (2, 10), (4, 12), (2, 14), (0, 0),
            ]),
        )
    }

    pub fn log_fib_5() -> PExpansion {
        expansion(
            20,
            dense(&[
                (3, 2), (5, 4), (3, 6), (5, 8), (8, 10),
                (5, 12), (3, 14), (5, 16), (3, 18), (0, 0),
            ]),
        )
    }

    pub fn log_fib_8() -> PExpansion {
        expansion(
            32,
            dense(&[
                (6, 2), (8, 4), (6, 6), (8, 8), (6, 10), (8, 12), (6, 14), (0, 0),
                (6, 18), (8, 20), (6, 22), (8, 24), (6, 26), (8, 28), (6, 30), (0, 0),
            ]),
        )
    }

    pub fn log_fib_12() -> PExpansion {
        expansion(
            48,
            dense(&[
                (10, 2), (12, 4), (10, 6), (12, 8), (10, 10), (12, 12),
                (10, 14), (12, 16), (10, 18), (12, 20), (10, 22), (0, 0),
                (10, 26), (12, 28), (10, 30), (12, 32), (10, 34), (12, 36),
                (10, 38), (12, 40), (10, 42), (12, 44), (10, 46), (0, 0),
            ]),
        )
    }

    pub fn log_lucas_2() -> PExpansion {
        expansion(8, dense(&[(2, 2), (4, 4), (2, 6), (0, 0)]))
    }

    pub fn log_lucas_3() -> PExpansion {
        expansion(6, dense(&[(3, 2), (3, 4), (0, 0)]))
    }

    /// The base α¹², length-6 rewriting of log L₃ used by the zero
    /// relation proofs.
    pub fn log_lucas_3_rebased() -> PExpansion {
        expansion(12, dense(&[(3, 2), (3, 4), (0, 0), (3, 8), (3, 10), (0, 0)]))
    }

    pub fn log_lucas_4() -> PExpansion {
        // printed as 4β²·P(1, α^16, 8, (1, β², β⁴, 2β⁶, β⁸, β^10, β^12, 0))
        expansion(
            16,
            dense(&[
                (4, 2), (4, 4), (4, 6), (8, 8), (4, 10), (4, 12), (4, 14), (0, 0),
            ]),
        )
    }

    pub fn log_lucas_6() -> PExpansion {
        expansion(
            24,
            dense(&[
                (6, 2), (6, 4), (6, 6), (6, 8), (6, 10), (12, 12),
                (6, 14), (6, 16), (6, 18), (6, 20), (6, 22), (0, 0),
            ]),
        )
    }

    /// arctan(1/F₂) = π/4.
    pub fn arctan_inv_fib_2() -> PExpansion {
        expansion(
            12,
            sparse(
                12,
                &[(1, -1, 1), (3, -2, 3), (5, -1, 5), (7, 1, 7), (9, 2, 9), (11, 1, 11)],
            ),
        )
    }

    /// arctan(1/F₃) = arctan(1/2).
    pub fn arctan_inv_fib_3() -> PExpansion {
        expansion(
            20,
            sparse(
                20,
                &[
                    (1, -1, 1), (3, 1, 3), (5, 4, 5), (7, 1, 7), (9, -1, 9),
                    (11, 1, 11), (13, -1, 13), (15, -4, 15), (17, -1, 17), (19, 1, 19),
                ],
            ),
        )
    }

    /// arctan(1/F₄) = arctan(1/3).
    pub fn arctan_inv_fib_4() -> PExpansion {
        expansion(
            60,
            sparse(
                60,
                &[
                    (3, -3, 3), (5, -5, 5), (9, 3, 9), (15, 2, 15), (21, 3, 21),
                    (25, -5, 25), (27, -3, 27), (33, 3, 33), (35, 5, 35), (39, -3, 39),
                    (45, -2, 45), (51, -3, 51), (55, 5, 55), (57, 3, 57),
                ],
            ),
        )
    }

    /// arctan(1/F₅) = arctan(1/5).
    pub fn arctan_inv_fib_5() -> PExpansion {
        expansion(
            84,
            sparse(
                84,
                &[
                    (3, -3, 3), (7, 7, 7), (9, 3, 9), (15, -3, 15), (21, -4, 21),
                    (27, -3, 27), (33, 3, 33), (35, 7, 35), (39, -3, 39), (45, 3, 45),
                    (49, -7, 49), (51, -3, 51), (57, 3, 57), (63, 4, 63), (69, 3, 69),
                    (75, -3, 75), (77, -7, 77), (81, 3, 81),
                ],
            ),
        )
    }

    /// arctan(1/F₇) = arctan(1/13).
    pub fn arctan_inv_fib_7() -> PExpansion {
        expansion(
            180,
            sparse(
                180,
                &[
                    (5, -5, 5), (9, 9, 9), (15, 5, 15), (25, -5, 25), (27, -9, 27),
                    (35, 5, 35), (45, 4, 45), (55, 5, 55), (63, -9, 63), (65, -5, 65),
                    (75, 5, 75), (81, 9, 81), (85, -5, 85), (95, 5, 95), (99, -9, 99),
                    (105, -5, 105), (115, 5, 115), (117, 9, 117), (125, -5, 125),
                    (135, -4, 135), (145, -5, 145), (153, 9, 153), (155, 5, 155),
                    (165, -5, 165), (171, -9, 171), (175, 5, 175),
                ],
            ),
        )
    }

    /// arctan(1/L₂) = arctan(1/3).
    pub fn arctan_inv_lucas_2() -> PExpansion {
        expansion(
            12,
            sparse(
                12,
                &[(1, -1, 1), (3, 4, 3), (5, -1, 5), (7, 1, 7), (9, -4, 9), (11, 1, 11)],
            ),
        )
    }

    /// arctan(1/L₄) = arctan(1/7).
    pub fn arctan_inv_lucas_4() -> PExpansion {
        expansion(
            60,
            sparse(
                60,
                &[
                    (3, -3, 3), (5, 5, 5), (9, 3, 9), (15, -8, 15), (21, 3, 21),
                    (25, 5, 25), (27, -3, 27), (33, 3, 33), (35, -5, 35), (39, -3, 39),
                    (45, 8, 45), (51, -3, 51), (55, -5, 55), (57, 3, 57),
                ],
            ),
        )
    }

    /// π/4 from the length-12 family at r = 1 (the printed, negated form).
    pub fn pi4_family12() -> PExpansion {
        expansion(
            12,
            sparse(
                12,
                &[(1, -1, 1), (3, -2, 3), (5, -1, 5), (7, 1, 7), (9, 2, 9), (11, 1, 11)],
            ),
        )
    }

    /// arctan(1/√5): coefficients of the r = 2 length-12 family. The
    /// worked example prints base α¹²; the theorem's base α^{24} is the
    /// numerically correct one and is what is stored here.
    pub fn arctan_inv_sqrt5_family12() -> PExpansion {
        expansion(
            24,
            sparse(
                12,
                &[(1, 1, 2), (3, 2, 6), (5, 1, 10), (7, -1, 14), (9, -2, 18), (11, -1, 22)],
            ),
        )
    }

    /// arctan(1/4) = arctan(1/L₃): negated r = 3 family coefficients,
    /// at the theorem base α^{36} (printed as α¹² in the example).
    pub fn arctan_quarter_family12() -> PExpansion {
        expansion(
            36,
            sparse(
                12,
                &[(1, -1, 3), (3, -2, 9), (5, -1, 15), (7, 1, 21), (9, 2, 27), (11, 1, 33)],
            ),
        )
    }

    /// arctan(1/(3√5)) = arctan(1/(F₄√5)): r = 4 family coefficients at
    /// the theorem base α^{48} (printed as α¹²).
    pub fn arctan_inv_3sqrt5_family12() -> PExpansion {
        expansion(
            48,
            sparse(
                12,
                &[(1, 1, 4), (3, 2, 12), (5, 1, 20), (7, -1, 28), (9, -2, 36), (11, -1, 44)],
            ),
        )
    }

    /// arctan(2/L₃) = arctan(1/2).
    pub fn arctan_half_double() -> PExpansion {
        expansion(12, sparse(4, &[(1, -2, 3), (3, 2, 9)]))
    }

    /// arctan(2/(F₂√5)) = arctan(2/√5).
    pub fn arctan_2_sqrt5_double() -> PExpansion {
        expansion(8, sparse(4, &[(1, 2, 2), (3, -2, 6)]))
    }

    pub fn log_alpha_v1() -> PExpansion {
        expansion(1, sparse(2, &[(2, -1, 1)]))
    }

    pub fn log_alpha_v2() -> PExpansion {
        expansion(2, sparse(2, &[(2, 2, 2)]))
    }

    pub fn log2_alt() -> PExpansion {
        expansion(3, dense(&[(-1, 1), (1, 2), (2, 3)]))
    }

    pub fn log5_alt() -> PExpansion {
        expansion(4, dense(&[(4, 2), (0, 0)]))
    }

    // -- zero-relation vectors ------------------------------------------------

    pub fn zero_thm4_1() -> PExpansion {
        expansion(
            12,
            dense(&[(1, 0), (-3, 2), (-8, 4), (-3, 6), (1, 8), (0, 0)]),
        )
    }

    pub fn zero_thm4_2() -> PExpansion {
        let pattern: [i64; 12] = [1, -5, -2, 3, 1, 4, 1, 3, -2, -5, 1, 0];
        let entries: Vec<(i64, i64)> = (0..24)
            .map(|i| (pattern[(i % 12) as usize], 2 * i))
            .collect();
        expansion(48, dense(&entries))
    }

    pub fn zero_thm4_3() -> PExpansion {
        let pattern: [i64; 12] = [1, -4, -5, 0, 1, 2, 1, 0, -5, -4, 1, 0];
        let entries: Vec<(i64, i64)> = (0..24)
            .map(|i| (pattern[(i % 12) as usize], 2 * i))
            .collect();
        expansion(48, dense(&entries))
    }

    pub fn zero_thm4_4() -> PExpansion {
        let mults: [i64; 30] = [
            1, -7, -4, -1, 7, -1, 1, -2, 1, -1, 7, -1, -4, -7, 1,
            -1, 7, 4, 1, -7, 1, -1, 2, -1, 1, -7, 1, 4, 7, -1,
        ];
        let entries: Vec<(usize, i64, i64)> = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (2 * i + 1, m, 2 * i as i64))
            .collect();
        expansion(60, sparse(60, &entries))
    }

    pub fn zero_thm4_5() -> PExpansion {
        let mults: [i64; 24] = [
            1, 4, 2, 0, 1, 2, -1, 0, -2, 4, -1, 0,
            1, -4, 2, 0, 1, -2, -1, 0, -2, -4, -1, 0,
        ];
        let entries: Vec<(i64, i64)> = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as i64))
            .collect();
        expansion(24, dense(&entries))
    }

    pub fn zero_len2() -> PExpansion {
        expansion(2, dense(&[(1, 0), (3, 1)]))
    }

    pub fn zero_len12() -> PExpansion {
        let mults: [i64; 12] = [1, 1, -2, 5, 1, 10, 1, 5, -2, 1, 1, 2];
        let entries: Vec<(i64, i64)> = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as i64))
            .collect();
        expansion(12, dense(&entries))
    }

    pub fn zero_len10() -> PExpansion {
        let mults: [i64; 10] = [1, -5, 1, -5, -4, -5, 1, -5, 1, 0];
        let entries: Vec<(i64, i64)> = mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, 2 * i as i64))
            .collect();
        expansion(20, dense(&entries))
    }

    pub fn zero_len5() -> PExpansion {
        expansion(5, dense(&[(1, 1), (1, 0), (-1, 1), (-1, 4), (-2, 4)]))
    }
}

// ---------------------------------------------------------------------------
// Zero relations
// ---------------------------------------------------------------------------

/// A named zero relation: the paper-literal vector plus, when the
/// relation is derived from other catalog entries, the exact
/// combination reproducing it (up to a Q(√5) scalar).
#[derive(Clone, Debug)]
pub struct ZeroRelation {
    pub literal: CatalogEntry,
    pub derived: Option<CatalogEntry>,
}

pub const ZERO_RELATION_NAMES: [&str; 9] = [
    "thm4.1", "thm4.2", "thm4.3", "thm4.4", "thm4.5", "len2", "len12", "len10", "len5",
];

/// Looks up a zero relation from the fixed registry.
pub fn zero_relation(name: &str) -> Result<ZeroRelation, CatalogError> {
    use paper_vectors as pv;
    let (literal, derived): (PExpansion, Option<PExpansion>) = match name {
        "thm4.1" => (
            pv::zero_thm4_1(),
            // 2 log F₃ − log L₃ = 0
            Some(combine(&[
                (int_q5(2), log_fib(3)?),
                (int_q5(-1), log_lucas(3)?),
            ])?),
        ),
        "thm4.2" => (
            pv::zero_thm4_2(),
            // log L₆ − 2 log F₄ − log F₃ = 0
            Some(combine(&[
                (Q5::one(), log_lucas(6)?),
                (int_q5(-2), log_fib(4)?),
                (int_q5(-1), log_fib(3)?),
            ])?),
        ),
        "thm4.3" => (
            pv::zero_thm4_3(),
            // log F₁₂ − 4 log F₃ − 2 log L₂ = 0
            Some(combine(&[
                (Q5::one(), log_fib(12)?),
                (int_q5(-4), log_fib(3)?),
                (int_q5(-2), log_lucas(2)?),
            ])?),
        ),
        "thm4.4" => (
            pv::zero_thm4_4(),
            // 2 arctan(2/L₃) + arctan(2/L₅) − arctan(2/L₁) = 0; the
            // doubling expansions carry value −arctan(2/L_r) for odd r
            Some(combine(&[
                (Q5::one(), arctan_double(1)?.expansion),
                (int_q5(-2), arctan_double(3)?.expansion),
                (int_q5(-1), arctan_double(5)?.expansion),
            ])?),
        ),
        "thm4.5" => (
            pv::zero_thm4_5(),
            // 2 arctan(1/L₁) − 2 arctan(2/(F₂√5)) − arctan(2/(F₆√5)) = 0
            Some(combine(&[
                (int_q5(-2), family12_expansion(1)),
                (int_q5(-2), arctan_double(2)?.expansion),
                (int_q5(-1), arctan_double(6)?.expansion),
            ])?),
        ),
        "len2" => (
            pv::zero_len2(),
            // Li₁(1/α²) + Li₁(−1/α) = 0
            Some(combine(&[
                (Q5::one(), li1_expansion(2, 1, false)),
                (Q5::one(), li1_expansion(1, 1, true)),
            ])?),
        ),
        "len12" => (
            pv::zero_len12(),
            // the two log 2 expansions cancel
            Some(combine(&[
                (Q5::one(), log_fib(3)?),
                (int_q5(-1), build_via_li1(Li1Target::Log2Alt)?),
            ])?),
        ),
        "len10" => (
            pv::zero_len10(),
            // the two log 5 expansions cancel
            Some(combine(&[
                (Q5::one(), log_fib(5)?),
                (int_q5(-1), build_via_li1(Li1Target::Log5Alt)?),
            ])?),
        ),
        // its derivation is the cosine series, which is out of scope
        "len5" => (pv::zero_len5(), None),
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    let tag = ConstantTag::plus(TagKind::Zero(name.to_string()));
    Ok(ZeroRelation {
        literal: CatalogEntry {
            name: format!("zero/{}", name),
            tag: tag.clone(),
            expansion: literal,
            provenance: Provenance::PaperLiteralVector,
        },
        derived: derived.map(|e| CatalogEntry {
            name: format!("zero/{}:derived", name),
            tag,
            expansion: e,
            provenance: Provenance::DerivedCombination,
        }),
    })
}

/// All nine registry zero relations.
pub fn list_zero_relations() -> Vec<ZeroRelation> {
    ZERO_RELATION_NAMES
        .iter()
        .map(|n| zero_relation(n).expect("registry names are valid"))
        .collect()
}

// ---------------------------------------------------------------------------
// Named entry resolution and the standard catalog
// ---------------------------------------------------------------------------

/// Resolves a registry name of the form `family/r` (or a fixed name
/// like `logAlpha/v1`, `logSqrt5`, `zero/thm4.1`) to a catalog entry.
pub fn entry_for_name(name: &str) -> Result<CatalogEntry, CatalogError> {
    let entry = |tag: ConstantTag, e: PExpansion, prov: Provenance| CatalogEntry {
        name: name.to_string(),
        tag,
        expansion: e,
        provenance: prov,
    };
    let parse_r = |s: &str| -> Result<u32, CatalogError> {
        s.parse::<u32>()
            .map_err(|_| CatalogError::UnknownName(name.to_string()))
    };
    if let Some((family, param)) = name.split_once('/') {
        return match family {
            "logF" => {
                let r = parse_r(param)?;
                Ok(entry(
                    ConstantTag::plus(TagKind::LogFib(r)),
                    log_fib(r)?,
                    Provenance::TheoremFormula,
                ))
            }
            "logL" => {
                let r = parse_r(param)?;
                Ok(entry(
                    ConstantTag::plus(TagKind::LogLucas(r)),
                    log_lucas(r)?,
                    Provenance::TheoremFormula,
                ))
            }
            "atanF" => {
                let r = parse_r(param)?;
                Ok(entry(
                    ConstantTag::plus(TagKind::ArctanInvFib(r)),
                    arctan_inv_fib(r)?,
                    Provenance::TheoremFormula,
                ))
            }
            "atanL" => {
                let r = parse_r(param)?;
                Ok(entry(
                    ConstantTag::plus(TagKind::ArctanInvLucas(r)),
                    arctan_inv_lucas(r)?,
                    Provenance::TheoremFormula,
                ))
            }
            "atan12" => {
                let r = parse_r(param)?;
                let mut e = arctan_family12(r)?;
                e.name = name.to_string();
                Ok(e)
            }
            "atan2L" => {
                let r = parse_r(param)?;
                let mut e = arctan_double(r)?;
                e.name = name.to_string();
                Ok(e)
            }
            "logAlpha" => match param {
                "v1" => Ok(entry(
                    ConstantTag::plus(TagKind::LogAlpha),
                    build_via_li1(Li1Target::LogAlphaV1)?,
                    Provenance::TheoremFormula,
                )),
                "v2" => Ok(entry(
                    ConstantTag::plus(TagKind::LogAlpha),
                    build_via_li1(Li1Target::LogAlphaV2)?,
                    Provenance::TheoremFormula,
                )),
                _ => Err(CatalogError::UnknownName(name.to_string())),
            },
            "log2" if param == "alt" => Ok(entry(
                ConstantTag::plus(TagKind::Log2),
                build_via_li1(Li1Target::Log2Alt)?,
                Provenance::TheoremFormula,
            )),
            "log5" if param == "alt" => Ok(entry(
                ConstantTag::plus(TagKind::Log5),
                build_via_li1(Li1Target::Log5Alt)?,
                Provenance::TheoremFormula,
            )),
            "zero" => Ok(zero_relation(param)?.literal),
            _ => Err(CatalogError::UnknownName(name.to_string())),
        };
    }
    match name {
        "logSqrt5" => Ok(entry(
            ConstantTag::plus(TagKind::LogSqrt5),
            build_via_li1(Li1Target::LogSqrt5)?,
            Provenance::TheoremFormula,
        )),
        _ => Err(CatalogError::UnknownName(name.to_string())),
    }
}

/// The built catalog: all generator families up to a maximum r, the
/// fixed single-constant entries, and the zero-relation literals.
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The standard catalog (r ≤ 10 in every family).
    pub fn standard() -> Self {
        Self::with_rmax(10)
    }

    pub fn with_rmax(rmax: u32) -> Self {
        let mut entries = Vec::new();
        for r in 1..=rmax {
            entries.push(entry_for_name(&format!("logF/{}", r)).unwrap());
            entries.push(entry_for_name(&format!("logL/{}", r)).unwrap());
            if r >= 2 {
                entries.push(entry_for_name(&format!("atanF/{}", r)).unwrap());
            }
            entries.push(entry_for_name(&format!("atanL/{}", r)).unwrap());
            entries.push(entry_for_name(&format!("atan12/{}", r)).unwrap());
            entries.push(entry_for_name(&format!("atan2L/{}", r)).unwrap());
        }
        for name in ["logAlpha/v1", "logAlpha/v2", "log2/alt", "log5/alt", "logSqrt5"] {
            entries.push(entry_for_name(name).unwrap());
        }
        for name in ZERO_RELATION_NAMES {
            entries.push(entry_for_name(&format!("zero/{}", name)).unwrap());
        }
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}
