//! Cohomologically indexed complexes of graded summands, and the degree
//! tables their cohomology is reported in.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::Error;
use crate::field::FieldSpec;
use crate::graded::{dim_of_degree, euler_characteristic, map_matrix, DegreeBox, PolyMatrix, Summand};
use crate::matrix::{ExactMatrix, QuotientSpace};

/// A finite complex `C^min .. C^max` with degree-preserving differentials.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub field: FieldSpec,
    /// Cohomological index of `modules[0]`.
    pub min_index: i64,
    pub modules: Vec<Vec<Summand>>,
    /// `diffs[i]` maps `modules[i]` to `modules[i+1]`.
    pub diffs: Vec<PolyMatrix>,
}

impl GradedComplex {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn max_index(&self) -> i64 {
        self.min_index + self.modules.len() as i64 - 1
    }

    pub fn dims_at(&self, a: &[i64]) -> Vec<usize> {
        self.modules.iter().map(|m| dim_of_degree(m, a)).collect()
    }

    /// The differential matrices in one fine degree.
    pub fn matrices_at(&self, a: &[i64]) -> Result<Vec<ExactMatrix>, Error> {
        self.diffs
            .iter()
            .enumerate()
            .map(|(i, d)| map_matrix(&self.modules[i], &self.modules[i + 1], d, a, self.field))
            .collect()
    }

    /// Verify d.d = 0 in this degree.
    pub fn check_composition_at(&self, a: &[i64]) -> Result<(), Error> {
        let mats = self.matrices_at(a)?;
        for w in mats.windows(2) {
            if !w[1].matmul(&w[0])?.is_zero() {
                return Err(Error::CompositionNotZero {
                    degree: a.to_vec(),
                });
            }
        }
        Ok(())
    }

    /// Cohomology dimensions per index in one fine degree.
    pub fn cohomology_at(&self, a: &[i64]) -> Result<Vec<usize>, Error> {
        self.check_composition_at(a)?;
        let dims = self.dims_at(a);
        let mats = self.matrices_at(a)?;
        let mut out = Vec::with_capacity(dims.len());
        for i in 0..dims.len() {
            let ker = if i < mats.len() {
                mats[i].nullity()
            } else {
                dims[i]
            };
            let im = if i > 0 { mats[i - 1].rank() } else { 0 };
            out.push(ker - im);
        }
        Ok(out)
    }

    /// Euler characteristic of the modules in one degree; equal to the
    /// alternating sum of cohomology by rank-nullity.
    pub fn euler_at(&self, a: &[i64]) -> i64 {
        euler_characteristic(&self.dims_at(a))
    }

    /// Cohomology of one fine degree as coordinatized quotient spaces, for
    /// computing maps induced on cohomology.
    pub fn quotient_spaces_at(&self, a: &[i64]) -> Result<Vec<QuotientSpace>, Error> {
        self.check_composition_at(a)?;
        let dims = self.dims_at(a);
        let mats = self.matrices_at(a)?;
        let mut out = Vec::with_capacity(dims.len());
        for i in 0..dims.len() {
            let cycles = if i < mats.len() {
                mats[i].kernel_basis()
            } else {
                // last term: every vector is a cycle
                (0..dims[i])
                    .map(|j| {
                        let mut v = vec![self.field.zero(); dims[i]];
                        v[j] = self.field.one();
                        v
                    })
                    .collect()
            };
            let boundaries: Vec<Vec<_>> = if i > 0 {
                (0..mats[i - 1].cols).map(|j| mats[i - 1].column(j)).collect()
            } else {
                vec![]
            };
            out.push(QuotientSpace::new(dims[i], &cycles, &boundaries, self.field));
        }
        Ok(out)
    }
}

/// Dimensions of a cohomology theory over a window: `(index, multidegree)
/// -> dim`, zeros not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable {
    pub window: DegreeBox,
    entries: BTreeMap<(i64, Vec<i64>), usize>,
}

impl DegreeTable {
    pub fn new(window: DegreeBox) -> Self {
        DegreeTable {
            window,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, index: i64, degree: Vec<i64>, dim: usize) {
        debug_assert!(self.window.contains(&degree));
        if dim > 0 {
            self.entries.insert((index, degree), dim);
        } else {
            self.entries.remove(&(index, degree));
        }
    }

    /// A reported 0 means "zero within the window".
    pub fn get(&self, index: i64, degree: &[i64]) -> usize {
        self.entries
            .get(&(index, degree.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, Vec<i64>), &usize)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Indices with a nonzero entry somewhere in the window.
    pub fn nonzero_indices(&self) -> Vec<i64> {
        let mut idx: Vec<i64> = self.entries.keys().map(|(i, _)| *i).collect();
        idx.sort();
        idx.dedup();
        idx
    }

    /// Total dimension at a fixed index over the window.
    pub fn total_at_index(&self, index: i64) -> usize {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == index)
            .map(|(_, d)| *d)
            .sum()
    }

    /// First cell where the tables differ, if any.
    pub fn first_difference(&self, other: &DegreeTable) -> Option<(i64, Vec<i64>)> {
        let keys: std::collections::BTreeSet<_> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .cloned()
            .collect();
        keys.into_iter()
            .find(|(i, a)| self.get(*i, a) != other.get(*i, a))
    }

    /// JSON form `{"box": ..., "table": {"i": {"[a1,..,an]": dim}}}`.
    pub fn to_json(&self) -> Value {
        let mut by_index: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
        for ((i, a), d) in &self.entries {
            let key = format!(
                "[{}]",
                a.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            by_index.entry(i.to_string()).or_default().insert(key, *d);
        }
        json!({
            "box": {"lo": self.window.lo, "hi": self.window.hi},
            "table": by_index,
        })
    }

    /// CSV with columns (i, a, dim), nonzero cells only.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,a,dim\n");
        for ((i, a), d) in &self.entries {
            let deg = a
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!("{i},{deg},{d}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_table_zero_is_implicit() {
        let mut t = DegreeTable::new(DegreeBox::cube(1, -2, 2));
        t.set(1, vec![-1], 1);
        t.set(0, vec![0], 0);
        assert_eq!(t.get(1, &[-1]), 1);
        assert_eq!(t.get(0, &[0]), 0);
        assert_eq!(t.nonzero_indices(), vec![1]);
    }

    #[test]
    fn first_difference_reports_witness() {
        let w = DegreeBox::cube(1, -2, 2);
        let mut a = DegreeTable::new(w.clone());
        let b = DegreeTable::new(w);
        a.set(2, vec![-1], 1);
        assert_eq!(a.first_difference(&b), Some((2, vec![-1])));
        assert_eq!(b.first_difference(&b), None);
    }

    #[test]
    fn json_shape() {
        let mut t = DegreeTable::new(DegreeBox::cube(2, -1, 1));
        t.set(2, vec![-1, -1], 1);
        let v = t.to_json();
        assert_eq!(v["table"]["2"]["[-1,-1]"], 1);
        assert_eq!(v["box"]["lo"][0], -1);
    }
}
