//! The linearized Reed-Solomon code: evaluation of linearized polynomials,
//! encoding at all nonzero field elements in primitive-power order, codeword
//! weights, null spaces, and linearized Vandermonde matrices.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{endomorphism_matrix, FFMatrix, Scope};

/// Message `a = (a_0, ..., a_{k-1})`, the coefficient vector of the
/// linearized polynomial `x -> sum_j a_j x^(p^(jd))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MessageVector(pub Vec<FieldElement>);

/// A codeword of length `n = p^m - 1`; coordinate t is the evaluation at
/// `pi^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword(pub Vec<FieldElement>);

/// Evaluates the linearized polynomial of `a` at `x`:
/// `sum_j a_j x^(p^(jd))`.
pub fn linearized_eval(ctx: &FieldCtx, a: &MessageVector, x: FieldElement) -> FieldElement {
    let d = ctx.params().d() as u64;
    a.0.iter()
        .enumerate()
        .fold(FieldElement::ZERO, |acc, (j, &aj)| {
            ctx.add(acc, ctx.mul(aj, ctx.frobenius_power(x, d * j as u64)))
        })
}

/// Evaluation points beyond this length are encoded through the
/// endomorphism-matrix route; results are bit-identical either way.
const DIRECT_ENCODE_MAX_LEN: u64 = 4096;

/// Encodes `a` as `(f_a(1), f_a(pi), ..., f_a(pi^(n-1)))`.
pub fn encode(ctx: &FieldCtx, a: &MessageVector) -> Codeword {
    assert_eq!(
        a.0.len(),
        ctx.params().k() as usize,
        "message length must be k"
    );
    if ctx.unit_order() > DIRECT_ENCODE_MAX_LEN {
        encode_via_matrix(ctx, a)
    } else {
        encode_direct(ctx, a)
    }
}

pub(crate) fn encode_direct(ctx: &FieldCtx, a: &MessageVector) -> Codeword {
    Codeword(
        (0..ctx.unit_order())
            .map(|t| linearized_eval(ctx, a, ctx.antilog(t)))
            .collect(),
    )
}

/// One endomorphism-matrix build plus one subfield matrix-vector product per
/// coordinate, instead of k Frobenius powerings per coordinate.
pub(crate) fn encode_via_matrix(ctx: &FieldCtx, a: &MessageVector) -> Codeword {
    let mat = message_endomorphism(ctx, a);
    Codeword(
        (0..ctx.unit_order())
            .map(|t| {
                let coords = ctx.coords_over_subfield(ctx.antilog(t));
                ctx.from_subfield_coords(&mat.mat_vec(ctx, &coords))
            })
            .collect(),
    )
}

/// The matrix over F_{p^e} of the F_{p^e}-linear map `x -> f_a(x)`.
pub(crate) fn message_endomorphism(ctx: &FieldCtx, a: &MessageVector) -> FFMatrix {
    let images: Vec<FieldElement> = ctx
        .subfield_basis()
        .iter()
        .map(|&b| linearized_eval(ctx, a, b))
        .collect();
    endomorphism_matrix(ctx, &images)
}

/// Number of nonzero symbols.
pub fn codeword_weight(c: &Codeword) -> u64 {
    c.0.iter().filter(|x| !x.is_zero()).count() as u64
}

/// Dimension over F_{p^e} of the zero set of `f_a` in F_{p^m}, computed as
/// `m/e - rank` of the endomorphism matrix. At most `k - 1` for nonzero `a`;
/// `m/e` for `a = 0`.
pub fn null_space_dim(ctx: &FieldCtx, a: &MessageVector) -> u32 {
    let me = ctx.params().m_over_e();
    me - message_endomorphism(ctx, a).rank(ctx) as u32
}

/// The i x k matrix with entries `xs[s]^(p^(jd))`.
pub fn lin_vandermonde(ctx: &FieldCtx, xs: &[FieldElement]) -> Result<FFMatrix> {
    let k = ctx.params().k();
    if xs.len() > k as usize {
        return Err(Error::TooManyRows { rows: xs.len(), k });
    }
    let d = ctx.params().d() as u64;
    let mut m = FFMatrix::zeros(xs.len(), k as usize, Scope::Field);
    for (s, &x) in xs.iter().enumerate() {
        for j in 0..k as usize {
            m[(s, j)] = ctx.frobenius_power(x, d * j as u64);
        }
    }
    Ok(m)
}

/// True iff the linearized Vandermonde matrix of `xs` has rank `xs.len()`.
/// Guaranteed whenever the points are F_{p^e}-linearly independent.
pub fn vandermonde_full_rank(ctx: &FieldCtx, xs: &[FieldElement]) -> Result<bool> {
    let m = lin_vandermonde(ctx, xs)?;
    Ok(m.rank(ctx) == xs.len())
}
