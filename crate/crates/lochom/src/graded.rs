//! Degreewise basis enumeration for free, quotient and localized-quotient
//! modules in the fine `Z^n` grading, and the finite matrices of graded maps.
//!
//! Every summand here has a 0- or 1-dimensional piece in each multidegree,
//! which is what makes the whole pipeline finite.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;
use crate::monomial::{Monomial, MonomialIdeal, RingSpec};

/// A finite observation window of multidegrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl DegreeBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self, Error> {
        if lo.len() != hi.len() || lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::Invalid(format!(
                "malformed degree box: lo={lo:?} hi={hi:?}"
            )));
        }
        Ok(DegreeBox { lo, hi })
    }

    pub fn cube(n: usize, lo: i64, hi: i64) -> Self {
        DegreeBox::new(vec![lo; n], vec![hi; n]).unwrap()
    }

    pub fn contains(&self, a: &[i64]) -> bool {
        a.len() == self.lo.len()
            && a.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (l, h))| l <= x && x <= h)
    }

    /// All lattice points of the box, lexicographically.
    pub fn degrees(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            let mut next = Vec::new();
            for prefix in &out {
                for v in *l..=*h {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }
}

/// One direct summand: a shifted copy of `R/J`, optionally localized at a
/// monomial. The graded piece in any fine degree is 0- or 1-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    /// Degree of the module generator.
    pub shift: Vec<i64>,
    /// `Some(alpha)` for `(R/J)[1/alpha]`.
    pub inverted: Option<Monomial>,
    /// The effective quotient ideal (ring relations plus module relations).
    pub quotient: MonomialIdeal,
}

impl Summand {
    pub fn free(shift: Vec<i64>, quotient: MonomialIdeal) -> Self {
        Summand {
            shift,
            inverted: None,
            quotient,
        }
    }

    pub fn localized(inverted: Monomial, quotient: MonomialIdeal) -> Self {
        let n = inverted.len();
        Summand {
            shift: vec![0; n],
            inverted: Some(inverted),
            quotient,
        }
    }

    /// Is the graded piece in degree `a` nonzero?
    pub fn alive(&self, a: &[i64]) -> bool {
        let b: Vec<i64> = a.iter().zip(&self.shift).map(|(x, s)| x - s).collect();
        match &self.inverted {
            None => {
                b.iter().all(|&e| e >= 0) && !self.quotient.contains(&Monomial(b))
            }
            Some(alpha) => {
                // nonnegative outside the inverted support, and the class
                // must survive multiplication by alpha forever
                let outside_ok = b
                    .iter()
                    .zip(&alpha.0)
                    .all(|(&e, &ae)| ae > 0 || e >= 0);
                outside_ok && self.alive_at_cutoff(&b, self.stable_cutoff(&b))
            }
        }
    }

    /// Smallest `t` guaranteed past every divisibility threshold: the maximum
    /// generator exponent of `J` plus one, padded by how negative `b` is.
    pub fn stable_cutoff(&self, b: &[i64]) -> i64 {
        let max_exp = self
            .quotient
            .generators()
            .iter()
            .flat_map(|g| g.0.iter().copied())
            .max()
            .unwrap_or(0);
        let deficit = b.iter().map(|&e| (-e).max(0)).max().unwrap_or(0);
        max_exp + 1 + deficit
    }

    /// Test the survival rule at an explicit cutoff `t`: is `x^(b + t*alpha)`
    /// outside the quotient ideal (with nonnegative exponents)?
    pub fn alive_at_cutoff(&self, b: &[i64], t: i64) -> bool {
        let alpha = self.inverted.as_ref().expect("cutoff only for localized");
        let shifted: Vec<i64> = b
            .iter()
            .zip(&alpha.0)
            .map(|(&e, &ae)| e + t * ae)
            .collect();
        shifted.iter().all(|&e| e >= 0) && !self.quotient.contains(&Monomial(shifted))
    }
}

/// Spec-level module descriptor over a ring: a shifted free module over
/// `R/J`, or a localized quotient `(R/J)[1/alpha]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Free { shifts: Vec<Vec<i64>> },
    LocalizedQuotient { inverted: Monomial },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDescriptor {
    pub ring: RingSpec,
    pub kind: ModuleKind,
}

/// A basis label: which summand, and the exponent vector of the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub component: usize,
    pub monomial: Monomial,
}

impl ModuleDescriptor {
    pub fn rank_one_free(ring: RingSpec) -> Self {
        let n = ring.variables;
        ModuleDescriptor {
            ring,
            kind: ModuleKind::Free {
                shifts: vec![vec![0; n]],
            },
        }
    }

    pub fn localized(ring: RingSpec, inverted: Monomial) -> Self {
        ModuleDescriptor {
            ring,
            kind: ModuleKind::LocalizedQuotient { inverted },
        }
    }

    pub fn summands(&self) -> Vec<Summand> {
        match &self.kind {
            ModuleKind::Free { shifts } => shifts
                .iter()
                .map(|s| Summand::free(s.clone(), self.ring.quotient.clone()))
                .collect(),
            ModuleKind::LocalizedQuotient { inverted } => {
                vec![Summand::localized(inverted.clone(), self.ring.quotient.clone())]
            }
        }
    }

    pub fn basis_of_degree(&self, a: &[i64]) -> Vec<BasisLabel> {
        basis_of_degree(&self.summands(), a)
    }
}

pub fn basis_of_degree(summands: &[Summand], a: &[i64]) -> Vec<BasisLabel> {
    summands
        .iter()
        .enumerate()
        .filter(|(_, s)| s.alive(a))
        .map(|(component, s)| BasisLabel {
            component,
            monomial: Monomial(a.iter().zip(&s.shift).map(|(x, sh)| x - sh).collect()),
        })
        .collect()
}

pub fn dim_of_degree(summands: &[Summand], a: &[i64]) -> usize {
    summands.iter().filter(|s| s.alive(a)).count()
}

/// A matrix of polynomial entries between direct sums of summands. Each
/// entry is a `Z`-linear combination of monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), Vec<(i64, Monomial)>>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, row: usize, col: usize, entry: Vec<(i64, Monomial)>) {
        assert!(row < self.rows && col < self.cols);
        if entry.is_empty() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), entry);
        }
    }

    pub fn set_monomial(&mut self, row: usize, col: usize, coeff: i64, m: Monomial) {
        if coeff != 0 {
            self.set(row, col, vec![(coeff, m)]);
        }
    }
}

/// Matrix of a graded map in degree `a`, between the degreewise bases of
/// the source and target summand lists.
///
/// Homogeneity: entry (r, c) must have monomial degree equal to
/// `shift(source c) - shift(target r)`; anything else is rejected.
pub fn map_matrix(
    source: &[Summand],
    target: &[Summand],
    map: &PolyMatrix,
    a: &[i64],
    field: FieldSpec,
) -> Result<ExactMatrix, Error> {
    assert_eq!(map.cols, source.len(), "map has wrong source arity");
    assert_eq!(map.rows, target.len(), "map has wrong target arity");
    let src_alive: Vec<usize> = (0..source.len())
        .filter(|&j| source[j].alive(a))
        .collect();
    let tgt_alive: Vec<usize> = (0..target.len())
        .filter(|&i| target[i].alive(a))
        .collect();
    let tgt_pos: BTreeMap<usize, usize> = tgt_alive
        .iter()
        .enumerate()
        .map(|(pos, &i)| (i, pos))
        .collect();
    let src_pos: BTreeMap<usize, usize> = src_alive
        .iter()
        .enumerate()
        .map(|(pos, &j)| (j, pos))
        .collect();
    let mut out = ExactMatrix::zero(tgt_alive.len(), src_alive.len(), field);
    for (&(i, j), entry) in &map.entries {
        let forced: Vec<i64> = source[j]
            .shift
            .iter()
            .zip(&target[i].shift)
            .map(|(s, t)| s - t)
            .collect();
        let mut coeff = 0i64;
        for (c, m) in entry {
            if m.0 != forced {
                return Err(Error::InhomogeneousEntry { row: i, col: j });
            }
            coeff += c;
        }
        if coeff == 0 {
            continue;
        }
        if let (Some(&ipos), Some(&jpos)) = (tgt_pos.get(&i), src_pos.get(&j)) {
            out.add_to(ipos, jpos, &field.from_int(coeff));
        }
    }
    Ok(out)
}

/// Alternating sum of a complex's degreewise dimensions.
pub fn euler_characteristic(dims: &[usize]) -> i64 {
    dims.iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring1() -> RingSpec {
        RingSpec::polynomial(FieldSpec::Rationals, 1)
    }

    fn ring2() -> RingSpec {
        RingSpec::polynomial(FieldSpec::Rationals, 2)
    }

    #[test]
    fn localized_negative_degree() {
        // k[x], invert x, degree -3: one basis element
        let m = ModuleDescriptor::localized(ring1(), Monomial(vec![1]));
        assert_eq!(m.basis_of_degree(&[-3]).len(), 1);
    }

    #[test]
    fn localized_mixed_degree() {
        // k[x,y], invert x, degree (-1, 2): one element
        let m = ModuleDescriptor::localized(ring2(), Monomial(vec![1, 0]));
        assert_eq!(m.basis_of_degree(&[-1, 2]).len(), 1);
        // but (-1, -2) dies: y-exponent negative and y is not inverted
        assert_eq!(m.basis_of_degree(&[-1, -2]).len(), 0);
    }

    #[test]
    fn localized_quotient_killed_class() {
        // k[x,y]/(y^2), invert x, degree (-1, 3): y^3 is in J for every t
        let j = MonomialIdeal::new(vec![Monomial(vec![0, 2])]).unwrap();
        let ring = RingSpec::quotient_ring(FieldSpec::Rationals, 2, j);
        let m = ModuleDescriptor::localized(ring, Monomial(vec![1, 0]));
        assert_eq!(m.basis_of_degree(&[-1, 3]).len(), 0);
        assert_eq!(m.basis_of_degree(&[-1, 1]).len(), 1);
    }

    #[test]
    fn free_quotient_basis() {
        let j = MonomialIdeal::new(vec![Monomial(vec![2])]).unwrap();
        let ring = RingSpec::quotient_ring(FieldSpec::Rationals, 1, j);
        let m = ModuleDescriptor::rank_one_free(ring);
        assert_eq!(m.basis_of_degree(&[0]).len(), 1);
        assert_eq!(m.basis_of_degree(&[1]).len(), 1);
        assert_eq!(m.basis_of_degree(&[2]).len(), 0);
        assert_eq!(m.basis_of_degree(&[-1]).len(), 0);
    }

    #[test]
    fn multiplication_by_x_matrix() {
        // x: R -> R with target shift chosen so the map preserves degree;
        // in degree 2 this is a 1x1 identity
        let r = ring1();
        let src = vec![Summand::free(vec![0], MonomialIdeal::zero())];
        let tgt = vec![Summand::free(vec![-1], MonomialIdeal::zero())];
        let mut map = PolyMatrix::zero(1, 1);
        map.set_monomial(0, 0, 1, Monomial(vec![1]));
        let m = map_matrix(&src, &tgt, &map, &[2], r.field).unwrap();
        assert_eq!((m.rows, m.cols), (1, 1));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn zero_map_has_correct_shape() {
        let src = vec![Summand::free(vec![0], MonomialIdeal::zero())];
        let tgt = vec![Summand::free(vec![0], MonomialIdeal::zero())];
        let map = PolyMatrix::zero(1, 1);
        let m = map_matrix(&src, &tgt, &map, &[3], FieldSpec::Rationals).unwrap();
        assert_eq!((m.rows, m.cols), (1, 1));
        assert!(m.is_zero());
    }

    #[test]
    fn localization_map_in_negative_degree() {
        // R -> R[1/x] over k[x] in degree -1: source empty, target 1-dim
        let src = vec![Summand::free(vec![0], MonomialIdeal::zero())];
        let tgt = vec![Summand::localized(Monomial(vec![1]), MonomialIdeal::zero())];
        let mut map = PolyMatrix::zero(1, 1);
        map.set_monomial(0, 0, 1, Monomial(vec![0]));
        let m = map_matrix(&src, &tgt, &map, &[-1], FieldSpec::Rationals).unwrap();
        assert_eq!((m.rows, m.cols), (1, 0));
    }

    #[test]
    fn inhomogeneous_entry_rejected() {
        let src = vec![Summand::free(vec![0], MonomialIdeal::zero())];
        let tgt = vec![Summand::free(vec![0], MonomialIdeal::zero())];
        let mut map = PolyMatrix::zero(1, 1);
        map.set_monomial(0, 0, 1, Monomial(vec![1]));
        assert!(matches!(
            map_matrix(&src, &tgt, &map, &[2], FieldSpec::Rationals),
            Err(Error::InhomogeneousEntry { .. })
        ));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_characteristic(&[0, 0]), 0);
        assert_eq!(euler_characteristic(&[1, 2, 1]), 0);
        assert_eq!(euler_characteristic(&[0, 1]), -1);
    }

    proptest! {
        // enlarging the survival cutoff never changes the answer
        #[test]
        fn localized_survival_is_stable(
            a in prop::collection::vec(-4i64..5, 2),
            gens in prop::collection::vec(prop::collection::vec(0i64..4, 2), 0..3),
            alpha_x in 0i64..3, alpha_y in 0i64..3,
        ) {
            prop_assume!(alpha_x + alpha_y > 0);
            let j = MonomialIdeal::new(gens.into_iter().map(Monomial).collect()).unwrap();
            let s = Summand::localized(Monomial(vec![alpha_x, alpha_y]), j);
            let alpha = s.inverted.clone().unwrap();
            let outside_ok = a.iter().zip(&alpha.0).all(|(&e, &ae)| ae > 0 || e >= 0);
            prop_assume!(outside_ok);
            let t0 = s.stable_cutoff(&a);
            prop_assert_eq!(s.alive_at_cutoff(&a, t0), s.alive_at_cutoff(&a, t0 + 3));
        }

        // free pieces match direct monomial enumeration
        #[test]
        fn free_dim_matches_enumeration(
            a in prop::collection::vec(-2i64..5, 2),
            gens in prop::collection::vec(prop::collection::vec(0i64..4, 2), 0..3),
        ) {
            let j = MonomialIdeal::new(gens.into_iter().map(Monomial).collect()).unwrap();
            let s = Summand::free(vec![0, 0], j.clone());
            let expected = if a.iter().all(|&e| e >= 0) && !j.contains(&Monomial(a.clone())) {
                1
            } else {
                0
            };
            prop_assert_eq!(dim_of_degree(&[s], &a), expected);
        }
    }
}
