//! Taylor resolutions of monomial quotients and the derived-functor oracle:
//! local cohomology as the colimit of Ext out of the power quotients, with
//! transition maps obtained by honest chain-map lifting.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::{DegreeTable, GradedComplex};
use crate::error::Error;
use crate::field::{FieldElem, FieldSpec};
use crate::graded::{DegreeBox, PolyMatrix, Summand};
use crate::matrix::{induced_homology_map, is_isomorphism, ExactMatrix, QuotientSpace};
use crate::monomial::{Monomial, MonomialIdeal, RingSpec};

pub const MAX_TAYLOR_GENERATORS: usize = 12;

/// The Taylor complex of a monomial generating list: free terms indexed by
/// subsets with generator degree `deg lcm(subset)`, differentials with
/// lcm-ratio entries and alternating subset signs.
#[derive(Clone, Debug)]
pub struct TaylorResolution {
    pub gens: Vec<Monomial>,
    pub vars: usize,
    /// subsets[k]: size-k subsets as bitmasks, sorted
    subsets: Vec<Vec<u32>>,
}

fn removal_sign(s: u32, g: usize) -> i64 {
    let below = (s & ((1u32 << g) - 1)).count_ones();
    if below % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn taylor_resolution(ring: &RingSpec, ideal: &MonomialIdeal) -> Result<TaylorResolution, Error> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let gens = ideal.generators().to_vec();
    if gens.len() > MAX_TAYLOR_GENERATORS {
        return Err(Error::TooManyGenerators(gens.len()));
    }
    for g in &gens {
        if g.len() != ring.variables {
            return Err(Error::VariableCountMismatch {
                expected: ring.variables,
                got: g.len(),
            });
        }
    }
    let m = gens.len();
    let subsets = (0..=m)
        .map(|k| {
            (0u32..(1 << m))
                .filter(|s| s.count_ones() as usize == k)
                .collect()
        })
        .collect();
    Ok(TaylorResolution {
        gens,
        vars: ring.variables,
        subsets,
    })
}

impl TaylorResolution {
    /// Homological length = number of generators.
    pub fn length(&self) -> usize {
        self.gens.len()
    }

    pub fn subsets(&self, k: usize) -> &[u32] {
        &self.subsets[k]
    }

    pub fn lcm(&self, mask: u32) -> Monomial {
        let mut e = vec![0i64; self.vars];
        for (g, gen) in self.gens.iter().enumerate() {
            if mask & (1 << g) != 0 {
                for (ei, x) in e.iter_mut().zip(&gen.0) {
                    *ei = (*ei).max(*x);
                }
            }
        }
        Monomial(e)
    }

    /// The resolution terms as summands over R; generator of `e_S` sits in
    /// degree `deg lcm(S)` so the differentials preserve degree.
    pub fn terms(&self, ring: &RingSpec) -> Vec<Vec<Summand>> {
        self.subsets
            .iter()
            .map(|subs| {
                subs.iter()
                    .map(|&s| Summand::free(self.lcm(s).0, ring.quotient.clone()))
                    .collect()
            })
            .collect()
    }

    /// Differential `T_k -> T_{k-1}` as a polynomial matrix.
    pub fn differential(&self, k: usize) -> PolyMatrix {
        let src = &self.subsets[k];
        let tgt = &self.subsets[k - 1];
        let tgt_pos: BTreeMap<u32, usize> =
            tgt.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut d = PolyMatrix::zero(tgt.len(), src.len());
        for (col, &s) in src.iter().enumerate() {
            let lcm_s = self.lcm(s);
            for g in 0..self.gens.len() {
                if s & (1 << g) == 0 {
                    continue;
                }
                let t = s & !(1u32 << g);
                let entry = lcm_s.quotient(&self.lcm(t));
                d.set_monomial(tgt_pos[&t], col, removal_sign(s, g), entry);
            }
        }
        d
    }

    /// Homology dims `H_0..H_m` of the resolution in one fine degree; used
    /// to spot-check exactness (`H_j = 0` for `j >= 1`, `H_0 = (R/I)_a`).
    pub fn homology_dims_at(&self, ring: &RingSpec, a: &[i64]) -> Result<Vec<usize>, Error> {
        let terms = self.terms(ring);
        let m = self.length();
        let mats: Vec<ExactMatrix> = (1..=m)
            .map(|k| {
                crate::graded::map_matrix(
                    &terms[k],
                    &terms[k - 1],
                    &self.differential(k),
                    a,
                    ring.field,
                )
            })
            .collect::<Result<_, _>>()?;
        let dims: Vec<usize> = terms
            .iter()
            .map(|t| crate::graded::dim_of_degree(t, a))
            .collect();
        let mut out = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let ker = if j == 0 {
                dims[0]
            } else {
                mats[j - 1].nullity()
            };
            let im = if j < m { mats[j].rank() } else { 0 };
            out.push(ker - im);
        }
        Ok(out)
    }

    /// `Hom(T_•, R/rel)` as a cochain complex of graded summands: the
    /// `Hom` piece out of a generator in degree `s` has shift `-s`, and the
    /// differentials are the transposed lcm-ratio matrices.
    pub fn hom_complex(&self, ring: &RingSpec, module_rel: &MonomialIdeal) -> GradedComplex {
        let quotient = ring.quotient.sum(module_rel);
        let m = self.length();
        let modules: Vec<Vec<Summand>> = self
            .subsets
            .iter()
            .map(|subs| {
                subs.iter()
                    .map(|&s| {
                        let shift: Vec<i64> = self.lcm(s).0.iter().map(|e| -e).collect();
                        Summand::free(shift, quotient.clone())
                    })
                    .collect()
            })
            .collect();
        let mut diffs = Vec::with_capacity(m);
        for k in 0..m {
            let d = self.differential(k + 1);
            // transpose: Hom(T_k) -> Hom(T_{k+1})
            let mut h = PolyMatrix::zero(self.subsets[k + 1].len(), self.subsets[k].len());
            for ((row, col), entry) in d.entries.iter() {
                for (c, mono) in entry {
                    h.set_monomial(*col, *row, *c, mono.clone());
                }
            }
            diffs.push(h);
        }
        GradedComplex {
            field: ring.field,
            min_index: 0,
            modules,
            diffs,
        }
    }
}

/// A chain map `T(next) -> T(prev)` over the surjection
/// `R/next_ideal -> R/prev_ideal`, stored per homological index as
/// `(prev_subset, next_subset) -> (coefficient, monomial)`.
#[derive(Clone, Debug)]
pub struct ChainLift {
    pub maps: Vec<BTreeMap<(usize, usize), (FieldElem, Monomial)>>,
}

/// Lift the identity of R through two Taylor resolutions where
/// `next_ideal ⊆ prev_ideal` (e.g. `I^{r+1} ⊆ I^r`), solving the chain
/// conditions index by index with least-indexed-pivot solves.
pub fn chain_lift(
    field: FieldSpec,
    prev: &TaylorResolution,
    next: &TaylorResolution,
) -> Result<ChainLift, Error> {
    let kmax = prev.length().min(next.length());
    let mut maps: Vec<BTreeMap<(usize, usize), (FieldElem, Monomial)>> = Vec::new();
    let mut phi0 = BTreeMap::new();
    phi0.insert((0usize, 0usize), (field.one(), Monomial::one(prev.vars)));
    maps.push(phi0);

    for k in 1..=kmax {
        let next_k = next.subsets(k);
        let prev_k = prev.subsets(k);
        let prev_km1 = prev.subsets(k - 1);
        let prev_pos_k: BTreeMap<u32, usize> =
            prev_k.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let next_pos_km1: BTreeMap<u32, usize> = next
            .subsets(k - 1)
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i))
            .collect();

        // unknowns: (next S, prev S') with lcm_prev(S') | lcm_next(S)
        let mut unknowns: Vec<(usize, usize)> = Vec::new();
        let mut col_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (si, &s) in next_k.iter().enumerate() {
            let lcm_s = next.lcm(s);
            for (pi, &sp) in prev_k.iter().enumerate() {
                if prev.lcm(sp).divides(&lcm_s) {
                    col_of.insert((si, pi), unknowns.len());
                    unknowns.push((si, pi));
                }
            }
        }

        // equations: one per (next S of size k, prev U of size k-1)
        let mut rows: Vec<BTreeMap<usize, FieldElem>> = Vec::new();
        let mut rhs: Vec<FieldElem> = Vec::new();
        for (si, &s) in next_k.iter().enumerate() {
            let lcm_s = next.lcm(s);
            for (ui, &u) in prev_km1.iter().enumerate() {
                if !prev.lcm(u).divides(&lcm_s) {
                    continue;
                }
                let mut row: BTreeMap<usize, FieldElem> = BTreeMap::new();
                // d_prev . phi_k restricted to e_U
                for g in 0..prev.length() {
                    if u & (1 << g) != 0 {
                        continue;
                    }
                    let sp = u | (1 << g);
                    if let Some(&pi) = prev_pos_k.get(&sp) {
                        if let Some(&c) = col_of.get(&(si, pi)) {
                            let sign = field.from_int(removal_sign(sp, g));
                            let cur = row.remove(&c).unwrap_or_else(|| field.zero());
                            row.insert(c, field.add(&cur, &sign));
                        }
                    }
                }
                // phi_{k-1} . d_next: known, moves to the right-hand side
                let mut b = field.zero();
                for g in 0..next.length() {
                    if s & (1 << g) == 0 {
                        continue;
                    }
                    let t = s & !(1u32 << g);
                    let ti = next_pos_km1[&t];
                    if let Some((c, _)) = maps[k - 1].get(&(ui, ti)) {
                        let sign = field.from_int(removal_sign(s, g));
                        b = field.add(&b, &field.mul(&sign, c));
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if row.is_empty() && b.is_zero() {
                    continue;
                }
                rows.push(row);
                rhs.push(b);
            }
        }

        let mut a = ExactMatrix::zero(rows.len(), unknowns.len(), field);
        for (i, row) in rows.iter().enumerate() {
            for (&j, v) in row {
                a.set(i, j, v.clone());
            }
        }
        let sol = a.solve(&rhs).ok_or(Error::LiftFailed(k))?;
        let mut phi = BTreeMap::new();
        for (c, (si, pi)) in unknowns.iter().enumerate() {
            if sol[c].is_zero() {
                continue;
            }
            let mono = next.lcm(next_k[*si]).quotient(&prev.lcm(prev_k[*pi]));
            phi.insert((*pi, *si), (sol[c].clone(), mono));
        }
        maps.push(phi);
    }
    Ok(ChainLift { maps })
}

/// Matrix, in one fine degree, of `Hom(phi_k, M): Hom(T_prev_k, M)_a ->
/// Hom(T_next_k, M)_a` — the transpose of the lift filtered to alive basis
/// classes.
fn hom_induced_matrix(
    prev_mods: &[Summand],
    next_mods: &[Summand],
    phi_k: &BTreeMap<(usize, usize), (FieldElem, Monomial)>,
    a: &[i64],
    field: FieldSpec,
) -> ExactMatrix {
    let alive_pos = |mods: &[Summand]| -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        let mut next_idx = 0;
        for (i, s) in mods.iter().enumerate() {
            if s.alive(a) {
                out.insert(i, next_idx);
                next_idx += 1;
            }
        }
        out
    };
    let src = alive_pos(prev_mods);
    let tgt = alive_pos(next_mods);
    let mut out = ExactMatrix::zero(tgt.len(), src.len(), field);
    for ((pi, si), (c, _mono)) in phi_k {
        if let (Some(&col), Some(&row)) = (src.get(pi), tgt.get(si)) {
            out.add_to(row, col, c);
        }
    }
    out
}

/// `Ext^i(R/I^r, M)` dims over the window via `Hom(T_•(I^r), M)`.
pub fn ext_dims(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    i: usize,
    r: u32,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<DegreeTable, Error> {
    assert!(r >= 1);
    let power = ideal.power(r);
    let tr = taylor_resolution(ring, &power)?;
    let hom = tr.hom_complex(ring, module_rel);
    let cells: Result<Vec<_>, Error> = window
        .degrees()
        .into_par_iter()
        .map(|a| {
            let dim = if i <= tr.length() {
                hom.cohomology_at(&a)?[i]
            } else {
                0
            };
            Ok((a, dim))
        })
        .collect();
    let mut table = DegreeTable::new(window.clone());
    for (a, d) in cells? {
        table.set(i as i64, a, d);
    }
    Ok(table)
}

/// The transition matrices `Ext^i(R/I^r, M) -> Ext^i(R/I^{r+1}, M)` per
/// fine degree, induced by the quotient surjection.
pub fn colimit_maps(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    r: u32,
    i: usize,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<Vec<(Vec<i64>, ExactMatrix)>, Error> {
    assert!(r >= 1);
    let prev = taylor_resolution(ring, &ideal.power(r))?;
    let next = taylor_resolution(ring, &ideal.power(r + 1))?;
    let lift = chain_lift(ring.field, &prev, &next)?;
    let hom_prev = prev.hom_complex(ring, module_rel);
    let hom_next = next.hom_complex(ring, module_rel);
    window
        .degrees()
        .into_par_iter()
        .map(|a| {
            let sp = hom_prev.quotient_spaces_at(&a)?;
            let sn = hom_next.quotient_spaces_at(&a)?;
            let empty = BTreeMap::new();
            let phi_k = lift.maps.get(i).unwrap_or(&empty);
            let zero_q = |field| QuotientSpace::new(0, &[], &[], field);
            let s_prev = sp.get(i).cloned().unwrap_or_else(|| zero_q(ring.field));
            let s_next = sn.get(i).cloned().unwrap_or_else(|| zero_q(ring.field));
            let f = hom_induced_matrix(
                hom_prev.modules.get(i).map_or(&[][..], |m| m),
                hom_next.modules.get(i).map_or(&[][..], |m| m),
                phi_k,
                &a,
                ring.field,
            );
            Ok((a, induced_homology_map(&s_prev, &s_next, &f)))
        })
        .collect()
}

/// Per-degree bookkeeping while powers accumulate.
struct DegreeState {
    degree: Vec<i64>,
    /// quotient spaces per r seen so far
    spaces: Vec<Vec<QuotientSpace>>,
    /// iso flags for transitions r -> r+1 seen so far
    iso: Vec<bool>,
    stable: Option<Vec<usize>>,
}

fn transition_is_iso(
    hom_prev: &GradedComplex,
    hom_next: &GradedComplex,
    lift: &ChainLift,
    sp: &[QuotientSpace],
    sn: &[QuotientSpace],
    a: &[i64],
    field: FieldSpec,
) -> bool {
    let kmax = sp.len().max(sn.len());
    for k in 0..kmax {
        let dp = sp.get(k).map_or(0, |q| q.dim);
        let dn = sn.get(k).map_or(0, |q| q.dim);
        if dp == 0 && dn == 0 {
            continue;
        }
        if k >= sp.len() || k >= sn.len() {
            return false;
        }
        let empty = BTreeMap::new();
        let phi_k = lift.maps.get(k).unwrap_or(&empty);
        let f = hom_induced_matrix(
            &hom_prev.modules[k],
            &hom_next.modules[k],
            phi_k,
            a,
            field,
        );
        let induced = induced_homology_map(&sp[k], &sn[k], &f);
        if !is_isomorphism(&induced) {
            return false;
        }
    }
    true
}

/// Stable Ext table across all cohomological indices: raises powers until
/// two consecutive transition maps are isomorphisms in every degree of the
/// window, or `r_max` is exhausted.
pub fn stable_ext_table(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
    r_max: u32,
) -> Result<DegreeTable, Error> {
    assert!(r_max >= 3, "r_max must be at least 3");
    if ideal.is_zero() {
        return crate::koszul::local_cohomology(ring, ideal, module_rel, window);
    }
    let mut taylors: Vec<TaylorResolution> = Vec::new();
    let mut homs: Vec<GradedComplex> = Vec::new();
    let mut lifts: Vec<ChainLift> = Vec::new();

    let push_power = |taylors: &mut Vec<TaylorResolution>,
                      homs: &mut Vec<GradedComplex>,
                      lifts: &mut Vec<ChainLift>,
                      r: u32|
     -> Result<(), Error> {
        let tr = taylor_resolution(ring, &ideal.power(r))?;
        let hom = tr.hom_complex(ring, module_rel);
        if let Some(prev) = taylors.last() {
            lifts.push(chain_lift(ring.field, prev, &tr)?);
        }
        taylors.push(tr);
        homs.push(hom);
        Ok(())
    };

    push_power(&mut taylors, &mut homs, &mut lifts, 1)?;
    let mut states: Vec<DegreeState> = window
        .degrees()
        .into_par_iter()
        .map(|a| {
            let spaces = homs[0].quotient_spaces_at(&a)?;
            Ok(DegreeState {
                degree: a,
                spaces: vec![spaces],
                iso: vec![],
                stable: None,
            })
        })
        .collect::<Result<_, Error>>()?;

    for r in 2..=r_max {
        push_power(&mut taylors, &mut homs, &mut lifts, r)?;
        let idx = (r - 1) as usize; // position of the new power
        states
            .par_iter_mut()
            .map(|st| {
                let a = st.degree.clone();
                st.spaces.push(homs[idx].quotient_spaces_at(&a)?);
                let t = idx - 1;
                st.iso.push(transition_is_iso(
                    &homs[t],
                    &homs[t + 1],
                    &lifts[t],
                    &st.spaces[t],
                    &st.spaces[t + 1],
                    &a,
                    ring.field,
                ));
                Ok(())
            })
            .collect::<Result<Vec<_>, Error>>()?;
    }
    // stable only when the two transitions at the truncation bound are both
    // isomorphisms: earlier windows can be vacuous (zero-to-zero) before the
    // Ext groups first appear
    for st in states.iter_mut() {
        let n = st.iso.len();
        if n >= 2 && st.iso[n - 1] && st.iso[n - 2] {
            let base = &st.spaces[st.spaces.len() - 3];
            st.stable = Some(base.iter().map(|q| q.dim).collect());
        }
    }

    let mut table = DegreeTable::new(window.clone());
    let mut unstable = Vec::new();
    for st in states {
        match st.stable {
            Some(dims) => {
                for (k, d) in dims.into_iter().enumerate() {
                    table.set(k as i64, st.degree.clone(), d);
                }
            }
            None => unstable.push(st.degree),
        }
    }
    if !unstable.is_empty() {
        return Err(Error::NotStabilized(unstable));
    }
    Ok(table)
}

/// Stable Ext at one cohomological index.
pub fn stable_ext(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    i: usize,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
    r_max: u32,
) -> Result<DegreeTable, Error> {
    let full = stable_ext_table(ring, ideal, module_rel, window, r_max)?;
    let mut table = DegreeTable::new(window.clone());
    for ((k, a), d) in full.iter() {
        if *k == i as i64 {
            table.set(*k, a.clone(), *d);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::koszul::local_cohomology;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn m(e: &[i64]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn ideal(gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn principal_taylor_shape() {
        let ring = RingSpec::polynomial(q(), 1);
        let t = taylor_resolution(&ring, &ideal(&[&[1]])).unwrap();
        assert_eq!(t.length(), 1);
        assert_eq!(t.lcm(0b1), m(&[1]));
    }

    #[test]
    fn taylor_lcm_shifts() {
        let ring = RingSpec::polynomial(q(), 2);
        let t = taylor_resolution(&ring, &ideal(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(t.lcm(0b11), m(&[1, 1]));
        let t2 = taylor_resolution(&ring, &ideal(&[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(t2.lcm(0b11), m(&[2, 1]));
    }

    #[test]
    fn too_many_generators_rejected() {
        let ring = RingSpec::polynomial(q(), 13);
        let gens: Vec<Monomial> = (0..13).map(|i| Monomial::var(i, 13)).collect();
        let i = MonomialIdeal::new(gens).unwrap();
        assert!(matches!(
            taylor_resolution(&ring, &i),
            Err(Error::TooManyGenerators { .. })
        ));
    }

    #[test]
    fn taylor_is_exact_degreewise() {
        let ring = RingSpec::polynomial(q(), 2);
        let i = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        let t = taylor_resolution(&ring, &i).unwrap();
        for a in DegreeBox::cube(2, 0, 4).degrees() {
            let h = t.homology_dims_at(&ring, &a).unwrap();
            for (j, &dim) in h.iter().enumerate().skip(1) {
                assert_eq!(dim, 0, "H_{j} at {a:?}");
            }
            let quot = usize::from(!i.contains(&Monomial(a.clone())));
            assert_eq!(h[0], quot, "H_0 at {a:?}");
        }
    }

    #[test]
    fn ext_one_of_power_quotient() {
        // Ext^1(R/x^2, R) is one-dimensional exactly in degrees -2 and -1
        let ring = RingSpec::polynomial(q(), 1);
        let window = DegreeBox::cube(1, -4, 2);
        let t = ext_dims(&ring, &ideal(&[&[1]]), 1, 2, &MonomialIdeal::zero(), &window)
            .unwrap();
        for a in window.degrees() {
            let expected = usize::from(a[0] == -1 || a[0] == -2);
            assert_eq!(t.get(1, &a), expected, "at {a:?}");
        }
    }

    #[test]
    fn ext_zero_of_torsion_free_target() {
        let ring = RingSpec::polynomial(q(), 2);
        let window = DegreeBox::cube(2, -3, 3);
        let t = ext_dims(
            &ring,
            &ideal(&[&[1, 0], &[0, 1]]),
            0,
            2,
            &MonomialIdeal::zero(),
            &window,
        )
        .unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn ext_above_resolution_length_vanishes() {
        let ring = RingSpec::polynomial(q(), 1);
        let window = DegreeBox::cube(1, -3, 3);
        let t = ext_dims(&ring, &ideal(&[&[1]]), 2, 3, &MonomialIdeal::zero(), &window)
            .unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn colimit_maps_principal_are_isos_in_socle_degree() {
        let ring = RingSpec::polynomial(q(), 1);
        let window = DegreeBox::cube(1, -1, -1);
        for r in 1..=3 {
            let maps = colimit_maps(&ring, &ideal(&[&[1]]), r, 1, &MonomialIdeal::zero(), &window)
                .unwrap();
            assert_eq!(maps.len(), 1);
            assert!(is_isomorphism(&maps[0].1), "r = {r}");
        }
    }

    #[test]
    fn colimit_maps_plane_corner() {
        let ring = RingSpec::polynomial(q(), 2);
        let window = DegreeBox::new(vec![-1, -1], vec![-1, -1]).unwrap();
        for r in 1..=3 {
            let maps = colimit_maps(
                &ring,
                &ideal(&[&[1, 0], &[0, 1]]),
                r,
                2,
                &MonomialIdeal::zero(),
                &window,
            )
            .unwrap();
            assert!(is_isomorphism(&maps[0].1), "r = {r}");
        }
    }

    #[test]
    fn colimit_monotone_after_stabilization() {
        // once two consecutive maps are iso in a degree, later maps stay iso
        let ring = RingSpec::polynomial(q(), 2);
        let window = DegreeBox::new(vec![-2, -2], vec![-1, -1]).unwrap();
        let i = ideal(&[&[1, 0], &[0, 1]]);
        let mut iso_from: Option<u32> = None;
        for r in 1..=5u32 {
            let maps = colimit_maps(&ring, &i, r, 2, &MonomialIdeal::zero(), &window).unwrap();
            let all = maps.iter().all(|(_, f)| is_isomorphism(f));
            if let Some(s) = iso_from {
                if r >= s + 2 {
                    assert!(all, "map at r = {r} regressed after stabilization");
                }
            } else if all {
                iso_from = Some(r);
            }
        }
        assert!(iso_from.is_some());
    }

    #[test]
    fn stable_ext_matches_local_cohomology_principal() {
        let ring = RingSpec::polynomial(q(), 1);
        let window = DegreeBox::cube(1, -3, 3);
        let zero = MonomialIdeal::zero();
        let i = ideal(&[&[1]]);
        let stable = stable_ext_table(&ring, &i, &zero, &window, 6).unwrap();
        let local = local_cohomology(&ring, &i, &zero, &window).unwrap();
        assert_eq!(stable.first_difference(&local), None);
    }

    #[test]
    fn stable_ext_of_torsion_module_is_the_module() {
        let ring = RingSpec::polynomial(q(), 1);
        let window = DegreeBox::cube(1, -2, 4);
        let i = ideal(&[&[1]]);
        let t = stable_ext_table(&ring, &i, &i, &window, 6).unwrap();
        for a in window.degrees() {
            assert_eq!(t.get(0, &a), usize::from(a[0] == 0), "H^0 at {a:?}");
            assert_eq!(t.get(1, &a), 0, "H^1 at {a:?}");
        }
    }

    #[test]
    fn stable_ext_unit_ideal_vanishes() {
        let ring = RingSpec::polynomial(q(), 1);
        let window = DegreeBox::cube(1, -2, 2);
        let t = stable_ext_table(&ring, &ideal(&[&[0]]), &MonomialIdeal::zero(), &window, 6)
            .unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn stable_ext_matches_local_cohomology_plane() {
        let ring = RingSpec::polynomial(q(), 2);
        let window = DegreeBox::cube(2, -2, 2);
        let zero = MonomialIdeal::zero();
        let i = ideal(&[&[1, 0], &[0, 1]]);
        let stable = stable_ext_table(&ring, &i, &zero, &window, 6).unwrap();
        let local = local_cohomology(&ring, &i, &zero, &window).unwrap();
        assert_eq!(stable.first_difference(&local), None);
    }
}
