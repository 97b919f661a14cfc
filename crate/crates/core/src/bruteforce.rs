//! Exhaustive ground truth: enumerate every r-dimensional subspace of the
//! message space F_{p^m}^k as its unique RREF basis (one Schubert cell per
//! pivot-column set), weigh each subspace two independent ways, and tally
//! the empirical higher weight distribution.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::code::{encode, lin_vandermonde, message_endomorphism, MessageVector};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::linalg::{FFMatrix, Scope};
use crate::qbinom::gauss_binomial;

/// Canonical RREF basis of an r-dimensional subspace of the message space.
/// Two values are equal iff they span the same subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub mat: FFMatrix,
}

impl SubspaceBasis {
    /// Canonicalizes an arbitrary spanning set: reduces to RREF and drops
    /// zero rows.
    pub fn canonicalize(ctx: &FieldCtx, mat: &FFMatrix) -> SubspaceBasis {
        let red = mat.rref(ctx);
        let mut entries = Vec::with_capacity(red.rank * mat.cols());
        for r in 0..red.rank {
            entries.extend_from_slice(red.matrix.row(r));
        }
        SubspaceBasis {
            mat: FFMatrix::new(red.rank, mat.cols(), Scope::Field, entries),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    /// Basis row s as a message vector.
    pub fn row_message(&self, s: usize) -> MessageVector {
        MessageVector(self.mat.row(s).to_vec())
    }
}

/// Empirical higher weight distribution: `r -> (weight -> count)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub by_r: BTreeMap<u32, BTreeMap<u64, BigInt>>,
}

impl WeightDistribution {
    /// Tallies `brute_distribution` for every r in `1..=k`.
    pub fn brute(ctx: &FieldCtx, cap: u64) -> Result<WeightDistribution> {
        let mut by_r = BTreeMap::new();
        for r in 1..=ctx.params().k() {
            by_r.insert(r, brute_distribution(ctx, r, cap)?);
        }
        Ok(WeightDistribution { by_r })
    }
}

enum Alphabet<'a> {
    /// All elements of the field, in index order.
    Whole(u64),
    /// An explicit value list, e.g. the subfield elements.
    List(&'a [FieldElement]),
}

impl Alphabet<'_> {
    fn len(&self) -> usize {
        match self {
            Alphabet::Whole(q) => *q as usize,
            Alphabet::List(l) => l.len(),
        }
    }

    fn value(&self, i: usize) -> FieldElement {
        match self {
            Alphabet::Whole(_) => FieldElement(i as u32),
            Alphabet::List(l) => l[i],
        }
    }
}

/// All r-subsets of `0..k`, in lexicographic order.
fn pivot_sets(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that can still move.
        let Some(pos) = (0..r).rev().find(|&i| cur[i] < k - r + i) else {
            return out;
        };
        cur[pos] += 1;
        for i in pos + 1..r {
            cur[i] = cur[i - 1] + 1;
        }
    }
}

/// Streams the RREF matrices of one Schubert cell: pivot columns fixed,
/// free entries running over the alphabet in odometer order.
struct CellIter<'a> {
    alphabet: Alphabet<'a>,
    scope: Scope,
    pivots: Vec<usize>,
    cols: usize,
    /// Row-major positions of the free entries.
    cells: Vec<(usize, usize)>,
    counters: Vec<usize>,
    done: bool,
}

impl<'a> CellIter<'a> {
    fn new(alphabet: Alphabet<'a>, scope: Scope, pivots: Vec<usize>, cols: usize) -> Self {
        let mut cells = Vec::new();
        for (s, &js) in pivots.iter().enumerate() {
            for c in js + 1..cols {
                if !pivots.contains(&c) {
                    cells.push((s, c));
                }
            }
        }
        let counters = vec![0usize; cells.len()];
        CellIter {
            alphabet,
            scope,
            pivots,
            cols,
            cells,
            counters,
            done: false,
        }
    }
}

impl Iterator for CellIter<'_> {
    type Item = FFMatrix;

    fn next(&mut self) -> Option<FFMatrix> {
        if self.done {
            return None;
        }
        let rows = self.pivots.len();
        let mut m = FFMatrix::zeros(rows, self.cols, self.scope);
        for (s, &js) in self.pivots.iter().enumerate() {
            m[(s, js)] = FieldElement::ONE;
        }
        for (idx, &(s, c)) in self.cells.iter().enumerate() {
            m[(s, c)] = self.alphabet.value(self.counters[idx]);
        }
        // Odometer increment, last cell fastest.
        self.done = true;
        for i in (0..self.counters.len()).rev() {
            self.counters[i] += 1;
            if self.counters[i] < self.alphabet.len() {
                self.done = false;
                break;
            }
            self.counters[i] = 0;
        }
        if self.counters.is_empty() {
            self.done = true;
        }
        Some(m)
    }
}

fn check_enumeration_cap(count: BigInt, cap: u64) -> Result<()> {
    if count > BigInt::from(cap) {
        return Err(Error::EnumerationTooLarge { count, cap });
    }
    Ok(())
}

/// Yields every r-dimensional subspace of F_{p^m}^k exactly once, as its
/// unique RREF basis. Refuses to start when the subspace count exceeds
/// `cap`.
pub fn enumerate_subspaces(
    ctx: &FieldCtx,
    k: u32,
    r: u32,
    cap: u64,
) -> Result<impl Iterator<Item = SubspaceBasis> + '_> {
    if r == 0 || r > k {
        return Err(Error::BadR { r, k });
    }
    let q = BigInt::from(ctx.order());
    check_enumeration_cap(gauss_binomial(k as usize, r as usize, &q), cap)?;
    let iter = pivot_sets(k as usize, r as usize)
        .into_iter()
        .flat_map(move |piv| {
            CellIter::new(Alphabet::Whole(ctx.order()), Scope::Field, piv, k as usize)
                .map(|mat| SubspaceBasis { mat })
        });
    Ok(iter)
}

/// Yields a basis (a vector of `dim` F_{p^e}-independent field elements) for
/// every `dim`-dimensional F_{p^e}-subspace of F_{p^m}, exactly once. The
/// trivial subspace is the empty basis.
pub fn enumerate_subfield_subspaces(
    ctx: &FieldCtx,
    dim: u32,
    cap: u64,
) -> Result<Vec<Vec<FieldElement>>> {
    let me = ctx.params().m_over_e();
    if dim > me {
        return Err(Error::BadR { r: dim, k: me });
    }
    let qe = ctx.params().subfield_order();
    check_enumeration_cap(gauss_binomial(me as usize, dim as usize, &qe), cap)?;
    let mut out = Vec::new();
    for piv in pivot_sets(me as usize, dim as usize) {
        for mat in CellIter::new(
            Alphabet::List(ctx.subfield_elements()),
            Scope::Subfield,
            piv,
            me as usize,
        ) {
            out.push(
                (0..mat.rows())
                    .map(|s| ctx.from_subfield_coords(mat.row(s)))
                    .collect(),
            );
        }
    }
    Ok(out)
}

/// Dimension over F_{p^e} of `Z(H)`, the common zero set of every
/// linearized polynomial in the subspace: `m/e` minus the rank of the
/// stacked endomorphism matrices of the basis rows. At most `k - r`.
pub fn zero_locus_dim(ctx: &FieldCtx, subspace: &SubspaceBasis) -> u32 {
    let me = ctx.params().m_over_e();
    let mut stacked: Option<FFMatrix> = None;
    for s in 0..subspace.dim() {
        let endo = message_endomorphism(ctx, &subspace.row_message(s));
        stacked = Some(match stacked {
            None => endo,
            Some(prev) => prev.stack_rows(&endo),
        });
    }
    let stacked = stacked.expect("subspace dimension is at least 1");
    me - stacked.rank(ctx) as u32
}

/// Support weight through the zero-locus identity:
/// `wt(H) = p^m - p^(e dim Z(H))`. Cost independent of the code length.
pub fn subspace_weight(ctx: &FieldCtx, subspace: &SubspaceBasis) -> u64 {
    let pe = ctx
        .params()
        .subfield_order_u64()
        .expect("table-backed field");
    ctx.order() - pe.pow(zero_locus_dim(ctx, subspace))
}

/// Support weight by definition: encodes each basis row and counts the
/// coordinates where at least one basis codeword is nonzero. Kept as the
/// second, definition-level oracle; costs O(r n) per subspace.
pub fn subspace_weight_direct(ctx: &FieldCtx, subspace: &SubspaceBasis) -> u64 {
    let mut support = vec![false; ctx.unit_order() as usize];
    for s in 0..subspace.dim() {
        let cw = encode(ctx, &subspace.row_message(s));
        for (slot, sym) in support.iter_mut().zip(&cw.0) {
            *slot |= !sym.is_zero();
        }
    }
    support.iter().filter(|&&b| b).count() as u64
}

/// Tallies `subspace_weight` over all r-dimensional subspaces. The Schubert
/// cells are disjoint, so workers tally pivot sets independently and the
/// merge is a plain sum.
pub fn brute_distribution(ctx: &FieldCtx, r: u32, cap: u64) -> Result<BTreeMap<u64, BigInt>> {
    let k = ctx.params().k();
    if r == 0 || r > k {
        return Err(Error::BadR { r, k });
    }
    let q = BigInt::from(ctx.order());
    check_enumeration_cap(gauss_binomial(k as usize, r as usize, &q), cap)?;
    let tallies: Vec<BTreeMap<u64, u64>> = pivot_sets(k as usize, r as usize)
        .into_par_iter()
        .map(|piv| {
            let mut tally: BTreeMap<u64, u64> = BTreeMap::new();
            for mat in CellIter::new(Alphabet::Whole(ctx.order()), Scope::Field, piv, k as usize) {
                let w = subspace_weight(ctx, &SubspaceBasis { mat });
                *tally.entry(w).or_insert(0) += 1;
            }
            tally
        })
        .collect();
    let mut merged: BTreeMap<u64, BigInt> = BTreeMap::new();
    for tally in tallies {
        for (w, c) in tally {
            *merged.entry(w).or_default() += c;
        }
    }
    Ok(merged)
}

/// `|C_{r,U}|`: the number of r-dimensional subspaces whose zero locus
/// contains the span of `u_basis`. The annihilator of U is the kernel of
/// the linearized Vandermonde matrix of the basis, of dimension `k - i`;
/// the count is the Gaussian binomial of subspaces inside it.
pub fn count_c_r_u(ctx: &FieldCtx, u_basis: &[FieldElement], r: u32) -> Result<BigInt> {
    let k = ctx.params().k();
    if r == 0 || r > k {
        return Err(Error::BadR { r, k });
    }
    let i = u_basis.len();
    // Independence over F_{p^e}, checked via subfield coordinates.
    let me = ctx.params().m_over_e() as usize;
    let coords: Vec<FieldElement> = u_basis
        .iter()
        .flat_map(|&u| ctx.coords_over_subfield(u))
        .collect();
    let coord_mat = FFMatrix::new(i, me, Scope::Subfield, coords);
    if coord_mat.rank(ctx) != i {
        return Err(Error::DependentU);
    }
    if i as u32 > k - r {
        return Ok(BigInt::from(0u32));
    }
    let vand = lin_vandermonde(ctx, u_basis)?;
    let annihilator_dim = vand.kernel_basis(ctx).len();
    assert_eq!(annihilator_dim, (k as usize) - i);
    Ok(gauss_binomial(
        annihilator_dim,
        r as usize,
        &BigInt::from(ctx.order()),
    ))
}
