//! Construction of F_{p^m}: deterministic modulus and primitive element,
//! log/antilog tables, Frobenius maps, and the subfield F_{p^e} with an
//! explicit basis of F_{p^m} over it.
//!
//! Elements are indices in `[0, p^m)` encoding the coefficient vector of the
//! residue polynomial in base p; index 0 is the zero element. Multiplication
//! runs on the tables, addition digit-wise mod p.

use crate::error::{Error, Result};
use crate::params::{checked_pow, CodeParams};

/// Default cap on `p^m` for table-backed fields.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 20;

/// An element of F_{p^m}, identified by its index in `[0, p^m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u64 {
        self.0 as u64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A fully materialized realization of F_{p^m}.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    params: CodeParams,
    order: u64,
    /// Monic irreducible modulus, coefficients `c_0..c_m` with `c_m = 1`.
    modulus: Vec<u64>,
    pi: FieldElement,
    /// `antilog[t]` is the index of `pi^t`, for `t` in `[0, p^m - 1)`.
    antilog: Vec<u32>,
    /// Inverse of `antilog`; `log[0]` is a sentinel.
    log: Vec<u32>,
    /// All `p^e` elements of F_{p^e}, ascending by index.
    subfield: Vec<FieldElement>,
    /// An F_p-basis of F_{p^e} (`e` elements).
    subfield_fp_basis: Vec<FieldElement>,
    /// An F_{p^e}-basis of F_{p^m} (`m/e` elements).
    subfield_basis: Vec<FieldElement>,
    /// Inverse of the m x m matrix over F_p whose columns are the products
    /// `subfield_basis[j] * subfield_fp_basis[i]`; used to read coordinates.
    coords_inv: Vec<u64>,
}

/// Builds F_{p^m} with the default table cap.
pub fn build_field(params: CodeParams) -> Result<FieldCtx> {
    build_field_with_cap(params, DEFAULT_TABLE_CAP)
}

/// Builds F_{p^m}, rejecting fields with more than `cap` elements.
pub fn build_field_with_cap(params: CodeParams, cap: u64) -> Result<FieldCtx> {
    build(params, cap, 0)
}

/// Builds F_{p^m} around the `rank`-th primitive element (in index order)
/// instead of the smallest one. Rank 0 is the default construction.
pub fn build_field_with_primitive_rank(params: CodeParams, rank: usize) -> Result<FieldCtx> {
    build(params, DEFAULT_TABLE_CAP, rank)
}

fn build(params: CodeParams, cap: u64, primitive_rank: usize) -> Result<FieldCtx> {
    let cap = cap.min(u32::MAX as u64);
    let q = match params.field_order_u64() {
        Some(q) if q <= cap => q,
        _ => {
            return Err(Error::FieldTooLargeForTables {
                size: params.field_order(),
                cap,
            })
        }
    };
    let p = params.p();
    let m = params.m() as usize;

    let modulus = smallest_irreducible(p, m);
    let pi_poly = find_primitive(p, m, q, &modulus, primitive_rank);
    let pi = FieldElement(poly_to_index(&pi_poly, p) as u32);

    // Antilog/log tables by repeated multiplication with pi.
    let mut antilog = vec![0u32; (q - 1) as usize];
    let mut log = vec![u32::MAX; q as usize];
    let mut cur = one_poly(m);
    for t in 0..(q - 1) as usize {
        let idx = poly_to_index(&cur, p) as u32;
        antilog[t] = idx;
        debug_assert_eq!(log[idx as usize], u32::MAX, "pi is not primitive");
        log[idx as usize] = t as u32;
        cur = poly_mul_mod(&cur, &pi_poly, &modulus, p);
    }
    debug_assert_eq!(poly_to_index(&cur, p), 1);

    let mut ctx = FieldCtx {
        params,
        order: q,
        modulus,
        pi,
        antilog,
        log,
        subfield: Vec::new(),
        subfield_fp_basis: Vec::new(),
        subfield_basis: Vec::new(),
        coords_inv: Vec::new(),
    };

    // F_{p^e} is the fixed field of the e-th Frobenius power.
    let e = params.e();
    ctx.subfield = (0..q)
        .map(|i| FieldElement(i as u32))
        .filter(|&x| ctx.frobenius_power(x, e as u64) == x)
        .collect();
    assert_eq!(
        ctx.subfield.len() as u64,
        params.subfield_order_u64().unwrap()
    );

    ctx.subfield_fp_basis = fp_basis_of_subfield(&ctx);
    ctx.subfield_basis = subfield_basis(&ctx);
    ctx.coords_inv = coords_inverse_matrix(&ctx);

    Ok(ctx)
}

impl FieldCtx {
    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    /// `p^m`, the number of field elements.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `n = p^m - 1`, the code length and the order of the unit group.
    pub fn unit_order(&self) -> u64 {
        self.order - 1
    }

    /// Coefficients `c_0..c_m` of the monic irreducible modulus.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The chosen primitive element pi.
    pub fn primitive(&self) -> FieldElement {
        self.pi
    }

    pub fn element(&self, index: u64) -> Option<FieldElement> {
        (index < self.order).then_some(FieldElement(index as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(|i| FieldElement(i as u32))
    }

    /// `pi^t`, with `t` reduced mod `p^m - 1`.
    pub fn antilog(&self, t: u64) -> FieldElement {
        FieldElement(self.antilog[(t % self.unit_order()) as usize])
    }

    /// Discrete log base pi; `None` for the zero element.
    pub fn log(&self, x: FieldElement) -> Option<u64> {
        (!x.is_zero()).then(|| self.log[x.0 as usize] as u64)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.params.p() == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let p = self.params.p();
        let mut acc = 0u64;
        let mut scale = 1u64;
        let (mut ia, mut ib) = (a.index(), b.index());
        for _ in 0..self.params.m() {
            acc += (ia % p + ib % p) % p * scale;
            ia /= p;
            ib /= p;
            scale *= p;
        }
        FieldElement(acc as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.params.p() == 2 {
            return a;
        }
        let p = self.params.p();
        let mut acc = 0u64;
        let mut scale = 1u64;
        let mut ia = a.index();
        for _ in 0..self.params.m() {
            acc += (p - ia % p) % p * scale;
            ia /= p;
            scale *= p;
        }
        FieldElement(acc as u32)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.unit_order();
        let t = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % n;
        FieldElement(self.antilog[t as usize])
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero");
        let n = self.unit_order();
        let t = (n - self.log[a.0 as usize] as u64) % n;
        FieldElement(self.antilog[t as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    /// `x^t` with the convention `x^0 = 1`.
    pub fn pow(&self, x: FieldElement, t: u64) -> FieldElement {
        if t == 0 {
            return FieldElement::ONE;
        }
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.unit_order();
        let exp = (self.log[x.0 as usize] as u128 * (t % n) as u128 % n as u128) as u64;
        FieldElement(self.antilog[exp as usize])
    }

    /// `x^(p^t)`, the t-th power of the p-Frobenius.
    pub fn frobenius_power(&self, x: FieldElement, t: u64) -> FieldElement {
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.unit_order();
        // p^m acts trivially on exponents mod p^m - 1.
        let pexp = checked_pow(self.params.p(), (t % self.params.m() as u64) as u32)
            .expect("p^(t mod m) fits: it divides the table-capped p^m");
        let exp = (self.log[x.0 as usize] as u128 * pexp as u128 % n as u128) as u64;
        FieldElement(self.antilog[exp as usize])
    }

    /// All `p^e` elements of the subfield F_{p^e}, ascending by index.
    pub fn subfield_elements(&self) -> &[FieldElement] {
        &self.subfield
    }

    pub fn is_in_subfield(&self, x: FieldElement) -> bool {
        self.frobenius_power(x, self.params.e() as u64) == x
    }

    /// The fixed F_{p^e}-basis of F_{p^m} (`m/e` elements).
    pub fn subfield_basis(&self) -> &[FieldElement] {
        &self.subfield_basis
    }

    /// Coordinates of `x` in `subfield_basis`, as `m/e` subfield elements.
    pub fn coords_over_subfield(&self, x: FieldElement) -> Vec<FieldElement> {
        let p = self.params.p();
        let m = self.params.m() as usize;
        let e = self.params.e() as usize;
        let dig = index_to_poly(x.index(), p, m);
        // w = coords_inv . digits(x), over F_p.
        let mut w = vec![0u64; m];
        for (row, wr) in w.iter_mut().enumerate() {
            let mut acc = 0u64;
            for col in 0..m {
                acc = (acc + self.coords_inv[row * m + col] * dig[col]) % p;
            }
            *wr = acc;
        }
        // Regroup blocks of e prime-field scalars into subfield elements.
        (0..m / e)
            .map(|j| {
                let mut c = FieldElement::ZERO;
                for i in 0..e {
                    let scalar = FieldElement(w[j * e + i] as u32);
                    c = self.add(c, self.mul(scalar, self.subfield_fp_basis[i]));
                }
                c
            })
            .collect()
    }

    /// Inverse of `coords_over_subfield`.
    pub fn from_subfield_coords(&self, coords: &[FieldElement]) -> FieldElement {
        assert_eq!(coords.len(), self.subfield_basis.len());
        let mut acc = FieldElement::ZERO;
        for (c, b) in coords.iter().zip(&self.subfield_basis) {
            acc = self.add(acc, self.mul(*c, *b));
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over F_p, used only during construction.
// ---------------------------------------------------------------------------

fn one_poly(m: usize) -> Vec<u64> {
    let mut v = vec![0u64; m.max(1)];
    v[0] = 1;
    v
}

fn x_poly(m: usize) -> Vec<u64> {
    let mut v = vec![0u64; m.max(2)];
    v[1] = 1;
    v
}

pub(crate) fn index_to_poly(index: u64, p: u64, m: usize) -> Vec<u64> {
    let mut v = vec![0u64; m];
    let mut i = index;
    for c in v.iter_mut() {
        *c = i % p;
        i /= p;
    }
    debug_assert_eq!(i, 0);
    v
}

pub(crate) fn poly_to_index(poly: &[u64], p: u64) -> u64 {
    poly.iter().rev().fold(0u64, |acc, &c| acc * p + c)
}

/// Product of two residues mod the monic `modulus` of degree m.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut buf = vec![0u64; 2 * m.max(1)];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                buf[i + j] = (buf[i + j] + ai * bj) % p;
            }
        }
    }
    // x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
    for deg in (m..2 * m.max(1)).rev() {
        let c = buf[deg];
        if c == 0 {
            continue;
        }
        buf[deg] = 0;
        for i in 0..m {
            buf[deg - m + i] = (buf[deg - m + i] + (p - modulus[i]) * c) % p;
        }
    }
    buf.truncate(m.max(1));
    buf
}

fn poly_pow_mod(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut acc = one_poly(m);
    let mut sq = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &sq, modulus, p);
        }
        sq = poly_mul_mod(&sq, &sq, modulus, p);
        exp >>= 1;
    }
    acc
}

fn poly_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut acc = 1u64;
    let mut sq = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * sq % p;
        }
        sq = sq * sq % p;
        e >>= 1;
    }
    acc
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead_inv = mod_inv(b[db], p);
    let mut r = a.to_vec();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let f = r[dr] * lead_inv % p;
        for i in 0..=db {
            r[dr - db + i] = (r[dr - db + i] + (p - b[i] % p) * f) % p;
        }
    }
    r
}

fn poly_gcd_is_constant(a: &[u64], b: &[u64], p: u64) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    loop {
        match poly_degree(&b) {
            None => return matches!(poly_degree(&a), Some(0)),
            Some(0) => return true,
            Some(_) => {
                let r = poly_rem(&a, &b, p);
                a = b;
                b = r;
            }
        }
    }
}

/// Rabin's irreducibility test for a monic polynomial of degree m over F_p.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    if m == 1 {
        return true;
    }
    let mut prime_divs = Vec::new();
    let mut mm = m;
    let mut t = 2;
    while t * t <= mm {
        if mm % t == 0 {
            prime_divs.push(t);
            while mm % t == 0 {
                mm /= t;
            }
        }
        t += 1;
    }
    if mm > 1 {
        prime_divs.push(mm);
    }

    let x = x_poly(m);
    let mut frob = x.clone(); // x^(p^s) mod f, s = 0
    for s in 1..=m {
        frob = poly_pow_mod(&frob, p, f, p);
        if s < m && prime_divs.iter().any(|&t| s == m / t) {
            let mut diff = frob.clone();
            diff[1] = (diff[1] + p - 1) % p;
            if !poly_gcd_is_constant(&diff, f, p) {
                return false;
            }
        }
    }
    // x^(p^m) must equal x.
    frob == x[..m]
}

/// The lexicographically smallest monic irreducible of degree m over F_p,
/// comparing coefficient tuples from the constant term up.
fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let total = checked_pow(p, m as u32).expect("table cap keeps p^m in range");
    for t in 0..total {
        // Big-endian digit extraction so that t ascending is lexicographic
        // ascending on (c_0, ..., c_{m-1}).
        let mut coeffs = vec![0u64; m + 1];
        let mut rem = t;
        for i in (0..m).rev() {
            let step = checked_pow(p, i as u32).unwrap();
            coeffs[m - 1 - i] = rem / step;
            rem %= step;
        }
        coeffs[m] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// The `rank`-th element (by index) of multiplicative order p^m - 1.
fn find_primitive(p: u64, m: usize, q: u64, modulus: &[u64], rank: usize) -> Vec<u64> {
    let n = q - 1;
    let mut prime_divs = Vec::new();
    let mut nn = n;
    let mut t = 2u64;
    while t * t <= nn {
        if nn % t == 0 {
            prime_divs.push(t);
            while nn % t == 0 {
                nn /= t;
            }
        }
        t += 1;
    }
    if nn > 1 {
        prime_divs.push(nn);
    }

    let one = one_poly(m);
    let mut seen = 0usize;
    for idx in 1..q {
        let el = index_to_poly(idx, p, m);
        let primitive = prime_divs
            .iter()
            .all(|&f| poly_pow_mod(&el, n / f, modulus, p) != one);
        if primitive {
            if seen == rank {
                return el;
            }
            seen += 1;
        }
    }
    panic!(
        "fewer than {} primitive elements in a field of order {}",
        rank + 1,
        q
    )
}

// ---------------------------------------------------------------------------
// Subfield bases and coordinates.
// ---------------------------------------------------------------------------

/// Incremental Gaussian elimination over F_p, for independence tests.
struct FpSpan {
    p: u64,
    rows: Vec<Vec<u64>>,
}

impl FpSpan {
    fn new(p: u64) -> Self {
        FpSpan {
            p,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for row in &self.rows {
            let pos = poly_degree(row).unwrap();
            if v[pos] != 0 {
                let f = v[pos];
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = (*vi + (self.p - ri) * f) % self.p;
                }
            }
        }
        v
    }

    fn contains(&self, v: Vec<u64>) -> bool {
        poly_degree(&self.reduce(v)).is_none()
    }

    /// Adds `v` to the span; returns false if it was already contained.
    fn absorb(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        match poly_degree(&v) {
            None => false,
            Some(pos) => {
                let inv = mod_inv(v[pos], self.p);
                let norm: Vec<u64> = v.iter().map(|&c| c * inv % self.p).collect();
                self.rows.push(norm);
                true
            }
        }
    }
}

fn digits_of(ctx: &FieldCtx, x: FieldElement) -> Vec<u64> {
    index_to_poly(x.index(), ctx.params.p(), ctx.params.m() as usize)
}

/// First `e` subfield elements, in index order, that are F_p-independent.
fn fp_basis_of_subfield(ctx: &FieldCtx) -> Vec<FieldElement> {
    let e = ctx.params.e() as usize;
    let mut span = FpSpan::new(ctx.params.p());
    let mut basis = Vec::with_capacity(e);
    for &x in &ctx.subfield {
        if basis.len() == e {
            break;
        }
        if span.absorb(digits_of(ctx, x)) {
            basis.push(x);
        }
    }
    assert_eq!(basis.len(), e);
    basis
}

/// First `m/e` terms of `1, pi, pi^2, ...` that are F_{p^e}-independent,
/// falling back to a scan of all elements in index order.
fn subfield_basis(ctx: &FieldCtx) -> Vec<FieldElement> {
    let me = ctx.params.m_over_e() as usize;
    let mut span = FpSpan::new(ctx.params.p());
    let mut basis = Vec::with_capacity(me);
    let try_candidate = |span: &mut FpSpan, basis: &mut Vec<FieldElement>, x: FieldElement| {
        if x.is_zero() || span.contains(digits_of(ctx, x)) {
            return;
        }
        // Accepting x adds the whole line x*F_{p^e} to the span: absorb x*s
        // for every prime-field basis vector s of the subfield.
        basis.push(x);
        for &s in &ctx.subfield_fp_basis {
            let absorbed = span.absorb(digits_of(ctx, ctx.mul(x, s)));
            assert!(absorbed);
        }
    };
    for t in 0..ctx.unit_order() {
        if basis.len() == me {
            break;
        }
        try_candidate(&mut span, &mut basis, ctx.antilog(t));
    }
    for idx in 1..ctx.order() {
        if basis.len() == me {
            break;
        }
        try_candidate(&mut span, &mut basis, FieldElement(idx as u32));
    }
    assert_eq!(basis.len(), me);
    basis
}

/// Inverse of the change-of-basis matrix sending F_p-coordinates in the
/// product basis `{b_j * s_i}` to plain polynomial coefficients.
fn coords_inverse_matrix(ctx: &FieldCtx) -> Vec<u64> {
    let p = ctx.params.p();
    let m = ctx.params.m() as usize;
    let e = ctx.params.e() as usize;
    // aug = [M | I], column j*e + i of M = digits(b_j * s_i).
    let mut aug = vec![vec![0u64; 2 * m]; m];
    for (j, &b) in ctx.subfield_basis.iter().enumerate() {
        for (i, &s) in ctx.subfield_fp_basis.iter().enumerate() {
            let col = j * e + i;
            for (row, &digit) in digits_of(ctx, ctx.mul(b, s)).iter().enumerate() {
                aug[row][col] = digit;
            }
        }
    }
    for (row, r) in aug.iter_mut().enumerate() {
        r[m + row] = 1;
    }
    // Gauss-Jordan over F_p.
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| aug[r][col] != 0)
            .expect("product basis spans F_{p^m} over F_p");
        aug.swap(col, pivot);
        let inv = mod_inv(aug[col][col], p);
        for c in 0..2 * m {
            aug[col][c] = aug[col][c] * inv % p;
        }
        for r in 0..m {
            if r != col && aug[r][col] != 0 {
                let f = aug[r][col];
                for c in 0..2 * m {
                    aug[r][c] = (aug[r][c] + (p - aug[col][c]) * f) % p;
                }
            }
        }
    }
    let mut inv = vec![0u64; m * m];
    for (row, r) in aug.iter().enumerate() {
        inv[row * m..(row + 1) * m].copy_from_slice(&r[m..]);
    }
    inv
}

/// Multiplicative order of `x`, by direct repeated multiplication.
/// Test-friendly oracle; linear in the order.
pub fn multiplicative_order(ctx: &FieldCtx, x: FieldElement) -> Option<u64> {
    if x.is_zero() {
        return None;
    }
    let mut acc = x;
    let mut t = 1u64;
    while acc != FieldElement::ONE {
        acc = ctx.mul(acc, x);
        t += 1;
    }
    Some(t)
}
