//! Exact q-analog combinatorics: Gaussian binomial coefficients and the
//! dimension-indexed q-binomial Moebius inversion over the subspace lattice.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The Gaussian binomial coefficient: the number of i-dimensional
/// F_q-subspaces of F_q^n, computed as
/// `prod_{t=0}^{i-1} (q^{n-t} - 1) / (q^{t+1} - 1)`.
///
/// Multiplies a numerator factor and then divides by the matching
/// denominator factor at every step; each partial product is itself a
/// Gaussian binomial, so every division is exact and intermediates stay
/// small.
pub fn gauss_binomial(n: usize, i: usize, q: &BigInt) -> BigInt {
    assert!(*q >= BigInt::from(2), "q must be at least 2");
    if i > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..i {
        let num = q.pow((n - t) as u32) - 1;
        let den = q.pow((t + 1) as u32) - 1;
        acc *= num;
        let (quot, rem) = num_integer_div_rem(acc, den);
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    acc
}

fn num_integer_div_rem(a: BigInt, b: BigInt) -> (BigInt, BigInt) {
    let quot = &a / &b;
    let rem = a - &quot * b;
    (quot, rem)
}

/// Moebius kernel of the subspace lattice in dimension-indexed form:
/// `(-1)^j * q^(j(j-1)/2)`.
pub fn mobius_coefficient(j: usize, q: &BigInt) -> BigInt {
    let mag = q.pow((j * (j.saturating_sub(1)) / 2) as u32);
    if j % 2 == 0 {
        mag
    } else {
        -mag
    }
}

/// Forward subspace-sum transform: given `s(i)`, the count attached to one
/// subspace of dimension i, returns `g(i) = sum_j binom(ambient-i, j)_q *
/// s(i+j)`, the sum of `s` over all superspaces of a fixed i-dimensional
/// subspace.
pub fn subspace_sum(s: &[BigInt], ambient_dim: usize, q: &BigInt) -> Result<Vec<BigInt>> {
    if s.len() != ambient_dim + 1 {
        return Err(Error::LengthMismatch {
            expected: ambient_dim + 1,
            got: s.len(),
        });
    }
    Ok((0..=ambient_dim)
        .map(|i| {
            (0..=ambient_dim - i)
                .map(|j| gauss_binomial(ambient_dim - i, j, q) * &s[i + j])
                .sum()
        })
        .collect())
}

/// Dimension-indexed q-binomial Moebius inversion, the inverse of
/// [`subspace_sum`]: `s(i) = sum_j (-1)^j q^C(j,2) binom(ambient-i, j)_q
/// g(i+j)`.
///
/// Valid when `g(i)` depends on the subspace only through its dimension,
/// which is how it is used here.
pub fn mobius_invert(g: &[BigInt], ambient_dim: usize, q: &BigInt) -> Result<Vec<BigInt>> {
    if g.len() != ambient_dim + 1 {
        return Err(Error::LengthMismatch {
            expected: ambient_dim + 1,
            got: g.len(),
        });
    }
    Ok((0..=ambient_dim)
        .map(|i| {
            (0..=ambient_dim - i)
                .map(|j| {
                    mobius_coefficient(j, q) * gauss_binomial(ambient_dim - i, j, q) * &g[i + j]
                })
                .sum()
        })
        .collect())
}
