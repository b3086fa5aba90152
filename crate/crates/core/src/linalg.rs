//! Exact rational linear algebra: ranks, reduced echelon bases, kernels, and
//! row-space membership.
//!
//! All computations run over arbitrary-precision rationals. Elimination is
//! fraction-free (Bareiss), working on denominator-cleared integer rows so
//! that intermediate entries are minors of the input rather than exploding
//! fractions; reduced bases are then recovered by rational back-substitution.
//!
//! Column order is never chosen internally: callers supply matrices with a
//! fixed column order (a monomial order, in practice) and pivoting scans
//! columns left to right, so echelon bases are canonical and reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact scalar type for every computation in the crate: an always-reduced
/// arbitrary-precision fraction with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed rational literal `{0}`")]
    MalformedRational(String),
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"` with optional sign into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let bad = || LinalgError::MalformedRational(s.to_string());
    let t = s.trim();
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let num: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den_str.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Render a rational as `"p"` when integral, `"p/q"` otherwise.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense matrix over rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Self::new(n, cols, data)
    }

    /// Build from integer entries, row-major per row.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }
}

/// Result of a reduced-echelon computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rank: usize,
    /// Reduced row-echelon basis of the row space (`rank` rows, pivots are 1,
    /// pivot columns are otherwise zero).
    pub basis: RationalMatrix,
    pub pivot_cols: Vec<usize>,
}

/// Clear denominators and content of one row, returning primitive integers
/// plus the (positive) rational scale `s` with `int_row = s * row`.
fn primitive_int_row(row: &[Rational]) -> (Vec<BigInt>, Rational) {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for v in &mut ints {
            *v = &*v / &gcd;
        }
    }
    let scale = if gcd.is_zero() {
        Rational::one()
    } else {
        Rational::new(lcm, gcd)
    };
    (ints, scale)
}

/// Fraction-free forward elimination. Pivots are searched only in the first
/// `pivot_cols` columns; row operations apply to the full width, so augmented
/// columns ride along. Returns (pivot columns, integer echelon rows).
fn bareiss_forward(mut m: Vec<Vec<BigInt>>, pivot_cols: usize) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let nrows = m.len();
    let width = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                // Still rescale so the Bareiss minor invariant holds.
                for j in (c + 1)..width {
                    let t = &pivot_row[c] * &row[j];
                    let (q, rem) = t.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                    row[j] = q;
                }
                continue;
            }
            for j in (c + 1)..width {
                let t = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                let (q, rem) = t.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, m)
}

/// Rank by fraction-free elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let int_rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| primitive_int_row(m.row(i)).0)
        .collect();
    bareiss_forward(int_rows, m.cols()).0.len()
}

fn echelon_impl(m: &RationalMatrix, with_transform: bool) -> (Echelon, Option<RationalMatrix>) {
    let (nrows, ncols) = (m.rows(), m.cols());
    if nrows == 0 || ncols == 0 {
        let ech = Echelon {
            rank: 0,
            basis: RationalMatrix::zeros(0, ncols),
            pivot_cols: Vec::new(),
        };
        let t = with_transform.then(|| RationalMatrix::zeros(0, nrows));
        return (ech, t);
    }
    let width = if with_transform { ncols + nrows } else { ncols };
    let mut int_rows = Vec::with_capacity(nrows);
    for i in 0..nrows {
        let (mut ints, scale) = primitive_int_row(m.row(i));
        if with_transform {
            // Seed the augmented block with the row scale so the recovered
            // transform maps the *original* rows to the echelon basis.
            ints.resize(ncols + nrows, BigInt::zero());
            // scale is integral only when the row had denominators 1 and
            // content 1; in general it is rational, so carry it separately.
            // Store 1 here and fold the scale in after back-substitution.
            ints[ncols + i] = BigInt::one();
        }
        int_rows.push((ints, scale));
    }
    let scales: Vec<Rational> = int_rows.iter().map(|(_, s)| s.clone()).collect();
    let rows_only: Vec<Vec<BigInt>> = int_rows.into_iter().map(|(r, _)| r).collect();
    let (pivot_cols, reduced) = bareiss_forward(rows_only, ncols);
    let rank = pivot_cols.len();

    // Rational back-substitution on the pivot rows.
    let mut rat_rows: Vec<Vec<Rational>> = reduced[..rank]
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    for i in (0..rank).rev() {
        let p = pivot_cols[i];
        let inv = rat_rows[i][p].clone();
        for x in rat_rows[i].iter_mut() {
            *x /= inv.clone();
        }
        for k in 0..i {
            let factor = rat_rows[k][p].clone();
            if factor.is_zero() {
                continue;
            }
            let (lower, upper) = rat_rows.split_at_mut(i);
            let (row_k, row_i) = (&mut lower[k], &upper[0]);
            for j in 0..width {
                let delta = &factor * &row_i[j];
                row_k[j] -= delta;
            }
        }
    }

    let basis = RationalMatrix::from_rows(
        ncols,
        rat_rows.iter().map(|r| r[..ncols].to_vec()).collect(),
    );
    let transform = with_transform.then(|| {
        RationalMatrix::from_rows(
            nrows,
            rat_rows
                .iter()
                .map(|r| {
                    r[ncols..]
                        .iter()
                        .zip(&scales)
                        .map(|(x, s)| x * s)
                        .collect()
                })
                .collect(),
        )
    });
    (
        Echelon {
            rank,
            basis,
            pivot_cols,
        },
        transform,
    )
}

/// Reduced row-echelon basis of the row space, with pivot columns.
///
/// Deterministic given the matrix's column order: pivoting scans columns left
/// to right and picks the first nonzero row.
pub fn reduced_echelon(m: &RationalMatrix) -> Echelon {
    echelon_impl(m, false).0
}

/// Like [`reduced_echelon`], also returning a `rank × rows` transform `T`
/// with `T · M = basis`, expressing each echelon row as a combination of the
/// input rows.
pub fn reduced_echelon_with_transform(m: &RationalMatrix) -> (Echelon, RationalMatrix) {
    let (e, t) = echelon_impl(m, true);
    (e, t.expect("transform requested"))
}

/// Basis of the right null space `{v : M v = 0}`, one vector per row.
///
/// Rows are indexed by the free (non-pivot) columns in ascending order; the
/// free coordinate of each vector is 1, making the basis canonical.
pub fn kernel_basis(m: &RationalMatrix) -> RationalMatrix {
    let ech = reduced_echelon(m);
    kernel_from_echelon(&ech, m.cols())
}

/// Kernel basis recovered from an already-computed echelon form.
pub fn kernel_from_echelon(ech: &Echelon, cols: usize) -> RationalMatrix {
    let pivot_set: std::collections::HashSet<usize> = ech.pivot_cols.iter().copied().collect();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut rows = Vec::with_capacity(free_cols.len());
    for &f in &free_cols {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (i, &p) in ech.pivot_cols.iter().enumerate() {
            v[p] = -ech.basis.at(i, f).clone();
        }
        rows.push(v);
    }
    RationalMatrix::from_rows(cols, rows)
}

/// Is `v` a rational combination of the rows of `basis`?
///
/// `basis` must be in reduced echelon form (e.g. the output of
/// [`reduced_echelon`]); membership is decided by reduction against pivots.
pub fn in_row_space(v: &[Rational], basis: &RationalMatrix) -> Result<bool, LinalgError> {
    if v.len() != basis.cols() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.cols(),
            got: v.len(),
        });
    }
    let mut w = v.to_vec();
    for i in 0..basis.rows() {
        let Some(p) = (0..basis.cols()).find(|&j| !basis.at(i, j).is_zero()) else {
            continue;
        };
        let factor = w[p].clone();
        if factor.is_zero() {
            continue;
        }
        for j in 0..basis.cols() {
            let delta = &factor * basis.at(i, j);
            w[j] -= delta;
        }
    }
    Ok(w.iter().all(Rational::is_zero))
}

/// Incremental row-space accumulator: feed vectors one at a time, learn which
/// ones enlarge the span. Reduction order follows insertion, so the result is
/// deterministic for a fixed input sequence.
#[derive(Debug, Clone, Default)]
pub struct RowSpan {
    // (pivot column, row normalized to leading 1), kept sorted by pivot.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let factor = w[*p].clone();
            if factor.is_zero() {
                continue;
            }
            for (wj, rj) in w.iter_mut().zip(row) {
                *wj -= &factor * rj;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    /// Insert `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = w[p].clone();
        for x in &mut w {
            *x /= lead.clone();
        }
        let idx = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(idx, (p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_int_rows(rows)
    }

    /// Brute-force determinant by cofactor expansion; test-only oracle.
    fn det(mat: &RationalMatrix) -> Rational {
        assert_eq!(mat.rows(), mat.cols());
        let n = mat.rows();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return mat.at(0, 0).clone();
        }
        let mut total = Rational::zero();
        for j in 0..n {
            if mat.at(0, j).is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<Rational>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&k| k != j)
                        .map(|k| mat.at(i, k).clone())
                        .collect()
                })
                .collect();
            let minor = RationalMatrix::from_rows(n - 1, minor_rows);
            let sign = if j % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            total += sign * mat.at(0, j) * det(&minor);
        }
        total
    }

    #[test]
    fn rank_of_dependent_rows() {
        let ech = reduced_echelon(&m(&[vec![1, 2], vec![2, 4]]));
        assert_eq!(ech.rank, 1);
        assert_eq!(ech.basis.row(0), &[rat_int(1), rat_int(2)]);
        assert_eq!(ech.pivot_cols, vec![0]);
    }

    #[test]
    fn rank_of_identity() {
        let id = m(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rank(&id), 3);
    }

    #[test]
    fn evaluation_matrix_of_four_points_has_rank_4() {
        // Monomials 1, x, y, x^2, xy, y^2 evaluated at (0,0),(1,1),(2,1),(1,2).
        let pts = [(0i64, 0i64), (1, 1), (2, 1), (1, 2)];
        let rows: Vec<Vec<i64>> = pts
            .iter()
            .map(|&(x, y)| vec![1, x, y, x * x, x * y, y * y])
            .collect();
        let mat = m(&rows);
        assert_eq!(rank(&mat), 4);
        // Oracle: some 4x4 minor has nonzero determinant.
        let mut found = false;
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    for d in c + 1..6 {
                        let sel = [a, b, c, d];
                        let minor_rows: Vec<Vec<Rational>> = (0..4)
                            .map(|i| sel.iter().map(|&j| mat.at(i, j).clone()).collect())
                            .collect();
                        if !det(&RationalMatrix::from_rows(4, minor_rows)).is_zero() {
                            found = true;
                        }
                    }
                }
            }
        }
        assert!(found, "no invertible 4x4 minor found");
    }

    #[test]
    fn kernel_of_single_row() {
        let k = kernel_basis(&m(&[vec![1, 1]]));
        assert_eq!(k.rows(), 1);
        // (1,-1) up to scale.
        let v = k.row(0);
        assert!(!v[0].is_zero());
        assert_eq!(v[1], -v[0].clone());
    }

    #[test]
    fn kernel_of_full_rank_square_is_empty() {
        let k = kernel_basis(&m(&[vec![2, 1], vec![1, 1]]));
        assert_eq!(k.rows(), 0);
    }

    #[test]
    fn vandermonde_kernel_is_x_squared_minus_x() {
        // Points {0,1}, monomials 1, x, x^2.
        let k = kernel_basis(&m(&[vec![1, 0, 0], vec![1, 1, 1]]));
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[rat_int(0), rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn row_space_membership() {
        let ech = reduced_echelon(&m(&[vec![1, 0, 0], vec![0, 1, 0]]));
        assert_eq!(
            in_row_space(&[rat_int(1), rat_int(0), rat_int(0)], &ech.basis),
            Ok(true)
        );
        assert_eq!(
            in_row_space(&[rat_int(0), rat_int(0), rat_int(0)], &ech.basis),
            Ok(true)
        );
        assert_eq!(
            in_row_space(&[rat_int(1), rat_int(1), rat_int(1)], &ech.basis),
            Ok(false)
        );
        assert!(in_row_space(&[rat_int(1)], &ech.basis).is_err());
    }

    #[test]
    fn transform_reproduces_basis() {
        let mat = RationalMatrix::from_rows(
            3,
            vec![
                vec![rat(1, 2), rat_int(1), rat_int(0)],
                vec![rat_int(1), rat_int(2), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat(3, 5)],
            ],
        );
        let (ech, t) = reduced_echelon_with_transform(&mat);
        assert_eq!(ech.rank, 2);
        for i in 0..ech.rank {
            let combo: Vec<Rational> = (0..mat.cols())
                .map(|j| {
                    (0..mat.rows()).fold(Rational::zero(), |acc, r| {
                        acc + t.at(i, r) * mat.at(r, j)
                    })
                })
                .collect();
            assert_eq!(combo.as_slice(), ech.basis.row(i));
        }
    }

    #[test]
    fn row_span_accumulates() {
        let mut span = RowSpan::new();
        assert!(span.insert(&[rat_int(1), rat_int(1)]));
        assert!(!span.insert(&[rat_int(2), rat_int(2)]));
        assert!(span.insert(&[rat_int(0), rat_int(1)]));
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&[rat_int(7), rat_int(3)]));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), rat_int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("2/15").unwrap(), rat(2, 15));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rat(-3, 2)), "-3/2");
        assert_eq!(rational_to_string(&rat(4, 2)), "2");
        assert_eq!(rational_to_string(&rat_int(0)), "0");
    }

    proptest::proptest! {
        #[test]
        fn rank_equals_transpose_rank(rows in 1usize..5, cols in 1usize..5, seed in 0u64..1000) {
            let mat = random_matrix(rows, cols, seed);
            proptest::prop_assert_eq!(rank(&mat), rank(&mat.transpose()));
        }

        #[test]
        fn rank_nullity(rows in 1usize..5, cols in 1usize..5, seed in 0u64..1000) {
            let mat = random_matrix(rows, cols, seed);
            let k = kernel_basis(&mat);
            proptest::prop_assert_eq!(rank(&mat) + k.rows(), cols);
        }

        #[test]
        fn echelon_is_idempotent(rows in 1usize..5, cols in 1usize..5, seed in 0u64..1000) {
            let mat = random_matrix(rows, cols, seed);
            let e1 = reduced_echelon(&mat);
            let e2 = reduced_echelon(&e1.basis);
            proptest::prop_assert_eq!(e1.basis, e2.basis);
        }

        #[test]
        fn kernel_vectors_multiply_to_zero(rows in 1usize..5, cols in 1usize..5, seed in 0u64..1000) {
            let mat = random_matrix(rows, cols, seed);
            let k = kernel_basis(&mat);
            for i in 0..k.rows() {
                let out = mat.mul_vec(k.row(i));
                proptest::prop_assert!(out.iter().all(Rational::is_zero));
            }
        }
    }

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> RationalMatrix {
        // Small deterministic LCG; entries in [-9, 9].
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 19) as i64 - 9
        };
        let data: Vec<Rational> = (0..rows * cols).map(|_| rat_int(next())).collect();
        RationalMatrix::new(rows, cols, data)
    }
}
