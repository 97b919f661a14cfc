//! Closed-form higher weight distribution of the linearized Reed-Solomon
//! code: the value set of attainable weights, the exact count of
//! r-dimensional subspaces per weight, and the weight hierarchy. Needs no
//! field realization, so it scales to parameters far beyond enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jsonnum;
use crate::params::CodeParams;
use crate::qbinom::{gauss_binomial, mobius_coefficient};

/// Parameter block echoed in every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub p: u64,
    pub m: u32,
    pub d: u32,
    pub e: u32,
    pub k: u32,
    #[serde(with = "jsonnum::int")]
    pub n: BigInt,
}

impl From<&CodeParams> for ReportParams {
    fn from(p: &CodeParams) -> Self {
        ReportParams {
            p: p.p(),
            m: p.m(),
            d: p.d(),
            e: p.e(),
            k: p.k(),
            n: p.code_length(),
        }
    }
}

/// One distribution row: the count of r-dimensional subspaces of weight
/// `p^m - p^(e i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistRow {
    pub r: u32,
    pub i: u32,
    #[serde(with = "jsonnum::int")]
    pub weight: BigInt,
    #[serde(with = "jsonnum::count")]
    pub count: BigInt,
}

/// The full closed-form higher weight distribution: rows for every
/// `1 <= r <= k`, `0 <= i <= k - r`, ascending in `(r, i)`, plus the weight
/// hierarchy `d_1..d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionReport {
    pub params: ReportParams,
    #[serde(with = "jsonnum::int_seq")]
    pub hierarchy: Vec<BigInt>,
    pub rows: Vec<DistRow>,
}

/// The set of weights an r-dimensional subspace can attain:
/// `{p^m - p^(e i) : 0 <= i <= k - r}`, exactly `k - r + 1` values.
pub fn weight_value_set(params: &CodeParams, r: u32) -> Result<BTreeSet<BigInt>> {
    let k = params.k();
    if r == 0 || r > k {
        return Err(Error::BadR { r, k });
    }
    let q = params.field_order();
    let pe = params.subfield_order();
    let set: BTreeSet<BigInt> = (0..=k - r).map(|i| &q - pe.pow(i)).collect();
    debug_assert_eq!(set.len() as u32, k - r + 1);
    Ok(set)
}

/// The number of r-dimensional subspaces of weight `p^m - p^(e i)`:
///
/// `binom(m/e, i)_{p^e} * sum_{j=0}^{k-r-i} (-1)^j p^(e C(j,2))
///  binom(k-j-i, r)_{p^m} binom(m/e - i, j)_{p^e}`.
pub fn higher_weight_count(params: &CodeParams, r: u32, i: u32) -> Result<BigInt> {
    let k = params.k();
    if r == 0 || r > k || i > k - r {
        return Err(Error::BadIndex { r, i, k });
    }
    let me = params.m_over_e() as usize;
    let q_m = params.field_order();
    let q_e = params.subfield_order();
    let (r, i) = (r as usize, i as usize);

    let mut sum = BigInt::from(0u32);
    for j in 0..=(k as usize - r - i) {
        sum += mobius_coefficient(j, &q_e)
            * gauss_binomial(k as usize - j - i, r, &q_m)
            * gauss_binomial(me - i, j, &q_e);
    }
    let count = gauss_binomial(me, i, &q_e) * sum;
    // The alternating sum counts subspaces; a negative value can only mean
    // the formula was transcribed wrong.
    assert!(
        !count.is_negative(),
        "internal inconsistency: negative count"
    );
    Ok(count)
}

/// The weight hierarchy `d_r = p^m - p^(e(k-r))` for `r = 1..=k`.
pub fn weight_hierarchy(params: &CodeParams) -> Vec<BigInt> {
    let q = params.field_order();
    let pe = params.subfield_order();
    let k = params.k();
    (1..=k).map(|r| &q - pe.pow(k - r)).collect()
}

/// Assembles the whole distribution, rows ascending in `(r, i)`.
pub fn full_distribution(params: &CodeParams) -> DistributionReport {
    let q = params.field_order();
    let pe = params.subfield_order();
    let k = params.k();
    let mut rows = Vec::new();
    for r in 1..=k {
        for i in 0..=k - r {
            rows.push(DistRow {
                r,
                i,
                weight: &q - pe.pow(i),
                count: higher_weight_count(params, r, i).expect("in-range indices"),
            });
        }
    }
    DistributionReport {
        params: params.into(),
        hierarchy: weight_hierarchy(params),
        rows,
    }
}

impl DistributionReport {
    /// Rows for one fixed r.
    pub fn rows_for(&self, r: u32) -> impl Iterator<Item = &DistRow> {
        self.rows.iter().filter(move |row| row.r == r)
    }
}
