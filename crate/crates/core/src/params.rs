use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Code parameters `(p, m, d, k)` together with the derived values
/// `e = gcd(m, d)` and `n = p^m - 1`.
///
/// Construction enforces the standing assumptions: `p` prime, `m, d, k >= 1`
/// and `k <= m/e`. A `CodeParams` value that exists is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    p: u64,
    m: u32,
    d: u32,
    k: u32,
    e: u32,
}

impl CodeParams {
    pub fn new(p: u64, m: u32, d: u32, k: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroParam { name: "m" });
        }
        if d == 0 {
            return Err(Error::ZeroParam { name: "d" });
        }
        if k == 0 {
            return Err(Error::ZeroParam { name: "k" });
        }
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        let e = gcd(m as u64, d as u64) as u32;
        let max_k = m / e;
        if k > max_k {
            return Err(Error::KTooLarge { k, max: max_k });
        }
        Ok(CodeParams { p, m, d, k, e })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `e = gcd(m, d)`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// Dimension of F_{p^m} over the subfield F_{p^e}.
    pub fn m_over_e(&self) -> u32 {
        self.m / self.e
    }

    /// `p^m` as an exact big integer.
    pub fn field_order(&self) -> BigInt {
        BigInt::from(self.p).pow(self.m)
    }

    /// `p^m` if it fits in a `u64` (the table-backed regime).
    pub fn field_order_u64(&self) -> Option<u64> {
        checked_pow(self.p, self.m)
    }

    /// `p^e`, the subfield order, as an exact big integer.
    pub fn subfield_order(&self) -> BigInt {
        BigInt::from(self.p).pow(self.e)
    }

    pub fn subfield_order_u64(&self) -> Option<u64> {
        checked_pow(self.p, self.e)
    }

    /// Code length `n = p^m - 1`.
    pub fn code_length(&self) -> BigInt {
        self.field_order() - 1
    }

    pub fn code_length_u64(&self) -> Option<u64> {
        self.field_order_u64().map(|q| q - 1)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Deterministic trial-division primality test.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3u64;
    while f.saturating_mul(f) <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_params() {
        let p = CodeParams::new(2, 4, 2, 2).unwrap();
        assert_eq!(p.e(), 2);
        assert_eq!(p.m_over_e(), 2);
        assert_eq!(p.field_order_u64(), Some(16));
        assert_eq!(p.code_length_u64(), Some(15));
    }

    #[test]
    fn rejects_nonprime_p() {
        assert_eq!(
            CodeParams::new(4, 2, 1, 2).unwrap_err(),
            Error::NonPrimeP(4)
        );
        assert_eq!(
            CodeParams::new(1, 2, 1, 2).unwrap_err(),
            Error::NonPrimeP(1)
        );
    }

    #[test]
    fn rejects_k_beyond_m_over_e() {
        assert_eq!(
            CodeParams::new(2, 2, 1, 3).unwrap_err(),
            Error::KTooLarge { k: 3, max: 2 }
        );
        // e = gcd(6, 4) = 2, so m/e = 3.
        assert!(CodeParams::new(2, 6, 4, 3).is_ok());
        assert!(CodeParams::new(2, 6, 4, 4).is_err());
    }

    #[test]
    fn rejects_zero_params() {
        assert!(matches!(
            CodeParams::new(2, 0, 1, 1),
            Err(Error::ZeroParam { name: "m" })
        ));
        assert!(matches!(
            CodeParams::new(2, 1, 0, 1),
            Err(Error::ZeroParam { name: "d" })
        ));
        assert!(matches!(
            CodeParams::new(2, 1, 1, 0),
            Err(Error::ZeroParam { name: "k" })
        ));
    }

    #[test]
    fn degenerate_m_equals_one() {
        let p = CodeParams::new(2, 1, 1, 1).unwrap();
        assert_eq!(p.e(), 1);
        assert_eq!(p.code_length_u64(), Some(1));
    }

    #[test]
    fn big_field_orders_do_not_overflow() {
        let p = CodeParams::new(47, 48, 4, 12).unwrap();
        assert_eq!(p.e(), 4);
        assert_eq!(p.m_over_e(), 12);
        assert_eq!(p.field_order_u64(), None);
        assert_eq!(p.field_order(), BigInt::from(47).pow(48));
    }

    #[test]
    fn primality_spot_checks() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }
}
