//! Exact linear algebra over F_{p^m} and over the subfield F_{p^e}: reduced
//! row echelon form, rank, right kernels, and the matrix of an
//! F_{p^e}-linear endomorphism of F_{p^m}.

use crate::field::{FieldCtx, FieldElement};

/// Which field the entries of a matrix live in. Subfield matrices reuse the
/// ambient element representation; mixing scopes in one operation is a bug
/// and is rejected at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Entries range over all of F_{p^m}.
    Field,
    /// Entries are confined to F_{p^e}.
    Subfield,
}

/// A dense row-major matrix with entries in a fixed field scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFMatrix {
    rows: usize,
    cols: usize,
    scope: Scope,
    entries: Vec<FieldElement>,
}

/// Result of a reduction to reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FFMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl FFMatrix {
    pub fn new(rows: usize, cols: usize, scope: Scope, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        FFMatrix {
            rows,
            cols,
            scope,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize, scope: Scope) -> Self {
        FFMatrix {
            rows,
            cols,
            scope,
            entries: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize, scope: Scope) -> Self {
        let mut m = FFMatrix::zeros(n, n, scope);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn scope(&self) -> Scope {
        self.scope
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// True when every entry lies in the field the scope claims.
    pub fn scope_is_consistent(&self, ctx: &FieldCtx) -> bool {
        match self.scope {
            Scope::Field => true,
            Scope::Subfield => self.entries.iter().all(|&x| ctx.is_in_subfield(x)),
        }
    }

    pub fn transpose(&self) -> FFMatrix {
        let mut t = FFMatrix::zeros(self.cols, self.rows, self.scope);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn stack_rows(&self, other: &FFMatrix) -> FFMatrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.scope, other.scope, "mixed-field operation");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        FFMatrix::new(self.rows + other.rows, self.cols, self.scope, entries)
    }

    pub fn matmul(&self, ctx: &FieldCtx, other: &FFMatrix) -> FFMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.scope, other.scope, "mixed-field operation");
        let mut out = FFMatrix::zeros(self.rows, other.cols, self.scope);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = FieldElement::ZERO;
                for t in 0..self.cols {
                    acc = ctx.add(acc, ctx.mul(self[(r, t)], other[(t, c)]));
                }
                out[(r, c)] = acc;
            }
        }
        out
    }

    pub fn mat_vec(&self, ctx: &FieldCtx, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| {
                        ctx.add(acc, ctx.mul(a, b))
                    })
            })
            .collect()
    }

    /// The unique reduced row echelon form, with rank and pivot columns.
    /// Pivots are the first nonzero entry scanning top to bottom; exact
    /// arithmetic needs no magnitude pivoting.
    pub fn rref(&self, ctx: &FieldCtx) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = ctx.inv(m[(row, col)]);
            for c in col..m.cols {
                m[(row, c)] = ctx.mul(inv, m[(row, c)]);
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)];
                    for c in col..m.cols {
                        let sub = ctx.mul(f, m[(row, c)]);
                        m[(r, c)] = ctx.sub(m[(r, c)], sub);
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Rref {
            matrix: m,
            rank: row,
            pivot_cols,
        }
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        self.rref(ctx).rank
    }

    /// A basis of the right kernel: `cols - rank` vectors `v` with `M v = 0`.
    /// Empty iff the matrix has full column rank.
    pub fn kernel_basis(&self, ctx: &FieldCtx) -> Vec<Vec<FieldElement>> {
        let red = self.rref(ctx);
        let mut basis = Vec::with_capacity(self.cols - red.rank);
        for free_col in 0..self.cols {
            if red.pivot_cols.contains(&free_col) {
                continue;
            }
            let mut v = vec![FieldElement::ZERO; self.cols];
            v[free_col] = FieldElement::ONE;
            for (pr, &pc) in red.pivot_cols.iter().enumerate() {
                v[pc] = ctx.neg(red.matrix[(pr, free_col)]);
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FFMatrix {
    type Output = FieldElement;
    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FFMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

/// Matrix over F_{p^e} of the F_{p^e}-linear map sending `subfield_basis[j]`
/// to `images[j]`; column j holds the subfield coordinates of `images[j]`.
/// Applying it to `coords(x)` yields `coords(map(x))`.
pub fn endomorphism_matrix(ctx: &FieldCtx, images: &[FieldElement]) -> FFMatrix {
    let me = ctx.params().m_over_e() as usize;
    assert_eq!(images.len(), me);
    let mut m = FFMatrix::zeros(me, me, Scope::Subfield);
    for (j, &img) in images.iter().enumerate() {
        for (i, c) in ctx.coords_over_subfield(img).into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;
    use crate::params::CodeParams;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn f4() -> FieldCtx {
        build_field(CodeParams::new(2, 2, 1, 2).unwrap()).unwrap()
    }

    fn random_matrix(ctx: &FieldCtx, rng: &mut StdRng, rows: usize, cols: usize) -> FFMatrix {
        let entries = (0..rows * cols)
            .map(|_| ctx.element(rng.gen_range(0..ctx.order())).unwrap())
            .collect();
        FFMatrix::new(rows, cols, Scope::Field, entries)
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let ctx = f4();
        let id = FFMatrix::identity(3, Scope::Field);
        let red = id.rref(&ctx);
        assert_eq!(red.matrix, id);
        assert_eq!(red.rank, 3);
        assert_eq!(red.pivot_cols, vec![0, 1, 2]);

        let z = FFMatrix::zeros(2, 3, Scope::Field);
        let red = z.rref(&ctx);
        assert_eq!(red.matrix, z);
        assert_eq!(red.rank, 0);
        assert!(red.pivot_cols.is_empty());
    }

    #[test]
    fn rank_two_example_over_f4() {
        let ctx = f4();
        let pi = ctx.primitive();
        let pi2 = ctx.mul(pi, pi);
        let m = FFMatrix::new(
            2,
            2,
            Scope::Field,
            vec![FieldElement::ONE, FieldElement::ONE, pi, pi2],
        );
        // Hand-expanded determinant: 1*pi^2 - 1*pi = pi^2 + pi = 1 != 0.
        let det = ctx.sub(
            ctx.mul(FieldElement::ONE, pi2),
            ctx.mul(FieldElement::ONE, pi),
        );
        assert_eq!(det, FieldElement::ONE);
        assert_eq!(m.rank(&ctx), 2);
    }

    #[test]
    fn rref_is_idempotent_on_random_matrices() {
        let ctx = build_field(CodeParams::new(3, 2, 1, 2).unwrap()).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let (rows, cols) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let m = random_matrix(&ctx, &mut rng, rows, cols);
            let r1 = m.rref(&ctx);
            let r2 = r1.matrix.rref(&ctx);
            assert_eq!(r1.matrix, r2.matrix);
            assert_eq!(r1.rank, r2.rank);
            assert_eq!(r1.pivot_cols, r2.pivot_cols);
        }
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let ctx = f4();
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..200 {
            let (rows, cols) = (rng.gen_range(1..6), rng.gen_range(1..6));
            let m = random_matrix(&ctx, &mut rng, rows, cols);
            assert_eq!(m.rank(&ctx), m.transpose().rank(&ctx));
        }
    }

    #[test]
    fn kernel_basis_examples() {
        let ctx = f4();
        assert!(FFMatrix::identity(3, Scope::Field)
            .kernel_basis(&ctx)
            .is_empty());

        let z = FFMatrix::zeros(1, 2, Scope::Field);
        assert_eq!(z.kernel_basis(&ctx).len(), 2);

        let ones = FFMatrix::new(
            1,
            2,
            Scope::Field,
            vec![FieldElement::ONE, FieldElement::ONE],
        );
        let ker = ones.kernel_basis(&ctx);
        assert_eq!(ker, vec![vec![FieldElement::ONE, FieldElement::ONE]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let ctx = build_field(CodeParams::new(3, 2, 1, 2).unwrap()).unwrap();
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..200 {
            let (rows, cols) = (rng.gen_range(1..5), rng.gen_range(1..6));
            let m = random_matrix(&ctx, &mut rng, rows, cols);
            let ker = m.kernel_basis(&ctx);
            assert_eq!(ker.len(), m.cols() - m.rank(&ctx));
            for v in ker {
                let prod = m.mat_vec(&ctx, &v);
                assert!(prod.iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn endomorphism_matrix_of_identity_and_zero() {
        let ctx = build_field(CodeParams::new(2, 4, 2, 2).unwrap()).unwrap();
        let me = ctx.params().m_over_e() as usize;
        let id = endomorphism_matrix(&ctx, ctx.subfield_basis());
        assert_eq!(id, FFMatrix::identity(me, Scope::Subfield));
        let zero = endomorphism_matrix(&ctx, &vec![FieldElement::ZERO; me]);
        assert_eq!(zero, FFMatrix::zeros(me, me, Scope::Subfield));
    }

    #[test]
    fn endomorphism_matrix_of_squaring_on_f4() {
        let ctx = f4();
        let images: Vec<FieldElement> = ctx
            .subfield_basis()
            .iter()
            .map(|&b| ctx.mul(b, b))
            .collect();
        let m = endomorphism_matrix(&ctx, &images);
        let expect = FFMatrix::new(
            2,
            2,
            Scope::Subfield,
            vec![
                FieldElement::ONE,
                FieldElement::ONE,
                FieldElement::ZERO,
                FieldElement::ONE,
            ],
        );
        assert_eq!(m, expect);
    }

    // A random F_{p^e}-linear map, as a linearized polynomial with
    // exponents p^(e*j).
    fn random_linear_map(ctx: &FieldCtx, rng: &mut StdRng) -> Vec<FieldElement> {
        (0..ctx.params().m_over_e())
            .map(|_| ctx.element(rng.gen_range(0..ctx.order())).unwrap())
            .collect()
    }

    fn apply_linear_map(ctx: &FieldCtx, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
        let e = ctx.params().e() as u64;
        coeffs
            .iter()
            .enumerate()
            .fold(FieldElement::ZERO, |acc, (j, &a)| {
                ctx.add(acc, ctx.mul(a, ctx.frobenius_power(x, e * j as u64)))
            })
    }

    #[test]
    fn endomorphism_matrix_applies_and_composes() {
        let ctx = build_field(CodeParams::new(2, 6, 2, 3).unwrap()).unwrap();
        let mut rng = StdRng::seed_from_u64(10);
        for _ in 0..20 {
            let fc = random_linear_map(&ctx, &mut rng);
            let gc = random_linear_map(&ctx, &mut rng);
            let images_of = |map: &dyn Fn(FieldElement) -> FieldElement| {
                ctx.subfield_basis()
                    .iter()
                    .map(|&b| map(b))
                    .collect::<Vec<_>>()
            };
            let mf = endomorphism_matrix(&ctx, &images_of(&|x| apply_linear_map(&ctx, &fc, x)));
            let mg = endomorphism_matrix(&ctx, &images_of(&|x| apply_linear_map(&ctx, &gc, x)));
            let mfg = endomorphism_matrix(
                &ctx,
                &images_of(&|x| apply_linear_map(&ctx, &fc, apply_linear_map(&ctx, &gc, x))),
            );
            assert_eq!(mfg, mf.matmul(&ctx, &mg));

            // Applying the matrix to coordinates agrees with the map.
            for _ in 0..50 {
                let x = ctx.element(rng.gen_range(0..ctx.order())).unwrap();
                let lhs = mf.mat_vec(&ctx, &ctx.coords_over_subfield(x));
                assert_eq!(
                    lhs,
                    ctx.coords_over_subfield(apply_linear_map(&ctx, &fc, x))
                );
            }
        }
    }

    #[test]
    fn subfield_scope_is_preserved_by_rref() {
        let ctx = build_field(CodeParams::new(2, 4, 2, 2).unwrap()).unwrap();
        let sub = ctx.subfield_elements();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let entries: Vec<FieldElement> =
                (0..6).map(|_| sub[rng.gen_range(0..sub.len())]).collect();
            let m = FFMatrix::new(2, 3, Scope::Subfield, entries);
            assert!(m.scope_is_consistent(&ctx));
            let red = m.rref(&ctx);
            assert!(red.matrix.scope_is_consistent(&ctx));
        }
    }

    #[test]
    #[should_panic(expected = "mixed-field operation")]
    fn mixed_scopes_are_rejected() {
        let ctx = f4();
        let a = FFMatrix::identity(2, Scope::Field);
        let b = FFMatrix::identity(2, Scope::Subfield);
        let _ = a.matmul(&ctx, &b);
    }
}
