//! Sparse exact matrices over `Q` or `F_p`, with the rank/kernel/solve
//! routines every degreewise homology computation reduces to.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::field::{FieldElem, FieldSpec};

/// Sparse matrix in triplet form; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize), FieldElem>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>], field: FieldSpec) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, field.from_int(*v));
            }
        }
        m
    }

    pub fn set(&mut self, row: usize, col: usize, value: FieldElem) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElem {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &FieldElem) {
        let cur = self.get(row, col);
        self.set(row, col, self.field.add(&cur, value));
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows, self.field);
        for (&(i, j), v) in &self.entries {
            t.set(j, i, v.clone());
        }
        t
    }

    pub fn matmul(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::NotComposable {
                in_rows: other.rows,
                in_cols: other.cols,
                out_rows: self.rows,
                out_cols: self.cols,
            });
        }
        let f = self.field;
        let mut out = ExactMatrix::zero(self.rows, other.cols, f);
        for (&(i, k), a) in &self.entries {
            for j in 0..other.cols {
                if let Some(b) = other.entries.get(&(k, j)) {
                    out.add_to(i, j, &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] = f.add(&out[i], &f.mul(a, &v[j]));
            }
        }
        out
    }

    /// Stack column vectors into a matrix.
    pub fn from_columns(rows: usize, cols: &[Vec<FieldElem>], field: FieldSpec) -> Self {
        let mut m = Self::zero(rows, cols.len(), field);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    fn to_sparse_rows(&self) -> Vec<BTreeMap<usize, FieldElem>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            rows[i].insert(j, v.clone());
        }
        rows
    }

    /// Row echelon form; returns (reduced rows, pivot column per eliminated row).
    fn echelon(&self) -> (Vec<BTreeMap<usize, FieldElem>>, Vec<(usize, usize)>) {
        echelon_limited(self, self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElem>> {
        let f = self.field;
        let (rows, pivots) = self.echelon();
        let pivot_cols: BTreeMap<usize, usize> =
            pivots.iter().map(|&(r, c)| (c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains_key(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (&c, &r) in &pivot_cols {
                // pivot rows are normalized, so the entry in the free column
                // is the full coefficient
                if let Some(a) = rows[r].get(&free) {
                    v[c] = f.neg(a);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self * x = rhs`, using the least-indexed
    /// pivot in each column and zeros for the free variables.
    pub fn solve(&self, rhs: &[FieldElem]) -> Option<Vec<FieldElem>> {
        assert_eq!(rhs.len(), self.rows);
        let f = self.field;
        // eliminate on the augmented matrix
        let mut aug = ExactMatrix::zero(self.rows, self.cols + 1, f);
        for (&(i, j), v) in &self.entries {
            aug.set(i, j, v.clone());
        }
        for (i, v) in rhs.iter().enumerate() {
            aug.set(i, self.cols, v.clone());
        }
        // eliminate only on the coefficient columns, carrying the rhs along
        let (rows, pivots) = echelon_limited(&aug, self.cols);
        // inconsistent if some row is zero on coefficients but not on rhs
        let pivot_rows: Vec<usize> = pivots.iter().map(|&(r, _)| r).collect();
        for (r, row) in rows.iter().enumerate() {
            if !pivot_rows.contains(&r) {
                if row.keys().any(|&j| j == self.cols) {
                    return None;
                }
            }
        }
        let mut x = vec![f.zero(); self.cols];
        for &(r, c) in &pivots {
            x[c] = rows[r].get(&self.cols).cloned().unwrap_or_else(|| f.zero());
        }
        Some(x)
    }
}

fn echelon_limited(
    m: &ExactMatrix,
    max_col: usize,
) -> (Vec<BTreeMap<usize, FieldElem>>, Vec<(usize, usize)>) {
    let f = m.field;
    let mut rows = m.to_sparse_rows();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; m.rows];
    for col in 0..max_col {
        let Some(pr) = (0..m.rows).find(|&r| !used[r] && rows[r].contains_key(&col)) else {
            continue;
        };
        used[pr] = true;
        pivots.push((pr, col));
        let pinv = f.inv(&rows[pr][&col]);
        let prow: Vec<(usize, FieldElem)> = rows[pr]
            .iter()
            .map(|(j, v)| (*j, f.mul(v, &pinv)))
            .collect();
        rows[pr] = prow.iter().cloned().collect();
        for r in 0..m.rows {
            if r == pr || !rows[r].contains_key(&col) {
                continue;
            }
            let factor = rows[r][&col].clone();
            for (j, pv) in &prow {
                let delta = f.neg(&f.mul(&factor, pv));
                let cur = rows[r].get(j).cloned().unwrap_or_else(|| f.zero());
                let new = f.add(&cur, &delta);
                if new.is_zero() {
                    rows[r].remove(j);
                } else {
                    rows[r].insert(*j, new);
                }
            }
        }
    }
    (rows, pivots)
}

/// Middle homology dimension of `d_in` followed by `d_out`.
pub fn homology_dim(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<usize, Error> {
    if d_in.rows != d_out.cols {
        return Err(Error::NotComposable {
            in_rows: d_in.rows,
            in_cols: d_in.cols,
            out_rows: d_out.rows,
            out_cols: d_out.cols,
        });
    }
    let composite = d_out.matmul(d_in)?;
    if !composite.is_zero() {
        return Err(Error::CompositionNotZero { degree: vec![] });
    }
    Ok(d_out.nullity() - d_in.rank())
}

/// Incrementally maintained reduced spanning set, for greedy selection of
/// independent vectors without re-eliminating from scratch.
pub struct Spanner {
    field: FieldSpec,
    dim: usize,
    /// reduced vectors keyed by pivot position, pivot entry normalized to 1
    rows: BTreeMap<usize, Vec<FieldElem>>,
}

impl Spanner {
    pub fn new(dim: usize, field: FieldSpec) -> Self {
        Spanner {
            field,
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        let f = self.field;
        let mut v = v.to_vec();
        for (&p, row) in &self.rows {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&c, r));
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.reduce(v).iter().all(FieldElem::is_zero)
    }

    /// Insert `v` if independent of the current span; true when added.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[p]);
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // back-reduce existing rows against the new pivot
        for row in self.rows.values_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        self.rows.insert(p, r);
        true
    }
}

/// Coordinates on a subquotient `ker / im`: a basis of cycles completing the
/// boundaries, with a solver expressing any cycle in those coordinates.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    field: FieldSpec,
    ambient: usize,
    /// independent boundary columns followed by the homology complement
    frame: ExactMatrix,
    n_boundaries: usize,
    pub dim: usize,
}

impl QuotientSpace {
    /// `cycles` spans ker, `boundaries` spans im (neither need be independent).
    pub fn new(
        ambient: usize,
        cycles: &[Vec<FieldElem>],
        boundaries: &[Vec<FieldElem>],
        field: FieldSpec,
    ) -> Self {
        // greedily select independent columns: boundaries first, then cycles
        let mut selected: Vec<Vec<FieldElem>> = Vec::new();
        let mut n_boundaries = 0;
        for (phase, cols) in [boundaries, cycles].iter().enumerate() {
            for col in cols.iter() {
                let mut candidate = selected.clone();
                candidate.push(col.clone());
                let m = ExactMatrix::from_columns(ambient, &candidate, field);
                if m.rank() == candidate.len() {
                    selected = candidate;
                    if phase == 0 {
                        n_boundaries += 1;
                    }
                }
            }
        }
        let dim = selected.len() - n_boundaries;
        QuotientSpace {
            field,
            ambient,
            frame: ExactMatrix::from_columns(ambient, &selected, field),
            n_boundaries,
            dim,
        }
    }

    /// Coordinates of a cycle in the homology basis.
    pub fn coords(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.ambient);
        let x = self
            .frame
            .solve(v)
            .expect("vector is not in the span of cycles");
        x[self.n_boundaries..].to_vec()
    }

    /// Representative cycles for the homology basis.
    pub fn representatives(&self) -> Vec<Vec<FieldElem>> {
        (self.n_boundaries..self.frame.cols)
            .map(|j| self.frame.column(j))
            .collect()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

/// Matrix of the map induced on homology by a chain map `f` (middle term).
///
/// `source`/`target` are the quotient coordinates at each end; `f` maps the
/// source ambient space to the target ambient space and must commute with
/// the differentials.
pub fn induced_homology_map(
    source: &QuotientSpace,
    target: &QuotientSpace,
    f: &ExactMatrix,
) -> ExactMatrix {
    let mut out = ExactMatrix::zero(target.dim, source.dim, f.field);
    for (j, rep) in source.representatives().iter().enumerate() {
        let image = f.apply(rep);
        let coords = target.coords(&image);
        for (i, v) in coords.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}

/// True when the induced map is an isomorphism.
pub fn is_isomorphism(m: &ExactMatrix) -> bool {
    m.rows == m.cols && m.rank() == m.rows
}
