//! Stable/unstable Koszul complexes, the Čech complex, and the local
//! cohomology tables computed from them, together with the long-exact-
//! sequence, radical-invariance and vanishing harnesses.

use rayon::prelude::*;

use crate::complex::{DegreeTable, GradedComplex};
use crate::error::Error;
use crate::graded::{dim_of_degree, map_matrix, DegreeBox, PolyMatrix, Summand};
use crate::matrix::{induced_homology_map, is_isomorphism, QuotientSpace};
use crate::monomial::{krull_dim_of, Monomial, MonomialIdeal, RingSpec};

fn validate_gens(ring: &RingSpec, gens: &[Monomial]) -> Result<(), Error> {
    if gens.is_empty() {
        return Err(Error::Invalid("generator list is empty".into()));
    }
    for g in gens {
        if g.len() != ring.variables {
            return Err(Error::VariableCountMismatch {
                expected: ring.variables,
                got: g.len(),
            });
        }
        if !g.is_nonnegative() {
            return Err(Error::NegativeExponent(g.0.clone()));
        }
    }
    Ok(())
}

/// Subsets of `{0..m}` of fixed cardinality, ordered by bitmask.
fn subsets_of_size(m: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << m))
        .filter(|s| s.count_ones() as usize == k)
        .collect()
}

/// Koszul/Čech sign for inserting generator `g` into subset `s`.
fn insertion_sign(s: u32, g: usize) -> i64 {
    let below = (s & ((1u32 << g) - 1)).count_ones();
    if below % 2 == 0 {
        1
    } else {
        -1
    }
}

fn subset_degree(gens: &[Monomial], s: u32) -> Vec<i64> {
    let n = gens[0].len();
    let mut d = vec![0i64; n];
    for (g, gen) in gens.iter().enumerate() {
        if s & (1 << g) != 0 {
            for (di, e) in d.iter_mut().zip(&gen.0) {
                *di += e;
            }
        }
    }
    d
}

fn subset_product(gens: &[Monomial], s: u32) -> Monomial {
    Monomial(subset_degree(gens, s))
}

/// The s-th unstable Koszul complex on `gens`, tensored with `R/extra`:
/// the tensor product of the two-term complexes `alpha_i^s : R -> R`,
/// with every differential degree-preserving via internal twists.
pub fn build_unstable_koszul_with(
    ring: &RingSpec,
    gens: &[Monomial],
    s: u32,
    extra: &MonomialIdeal,
) -> Result<GradedComplex, Error> {
    validate_gens(ring, gens)?;
    assert!(s >= 1, "unstable Koszul needs s >= 1");
    let m = gens.len();
    let quotient = ring.quotient.sum(extra);
    let mut modules = Vec::with_capacity(m + 1);
    let mut index_of = std::collections::BTreeMap::new();
    for k in 0..=m {
        let subs = subsets_of_size(m, k);
        for (pos, &sub) in subs.iter().enumerate() {
            index_of.insert(sub, pos);
        }
        modules.push(
            subs.iter()
                .map(|&sub| {
                    let shift: Vec<i64> = subset_degree(gens, sub)
                        .into_iter()
                        .map(|d| -(s as i64) * d)
                        .collect();
                    Summand::free(shift, quotient.clone())
                })
                .collect::<Vec<_>>(),
        );
    }
    let mut diffs = Vec::with_capacity(m);
    for k in 0..m {
        let src = subsets_of_size(m, k);
        let tgt = subsets_of_size(m, k + 1);
        let tgt_pos: std::collections::BTreeMap<u32, usize> =
            tgt.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut d = PolyMatrix::zero(tgt.len(), src.len());
        for (col, &sub) in src.iter().enumerate() {
            for g in 0..m {
                if sub & (1 << g) != 0 {
                    continue;
                }
                let t = sub | (1 << g);
                d.set_monomial(
                    tgt_pos[&t],
                    col,
                    insertion_sign(sub, g),
                    gens[g].pow(s),
                );
            }
        }
        diffs.push(d);
    }
    Ok(GradedComplex {
        field: ring.field,
        min_index: 0,
        modules,
        diffs,
    })
}

pub fn build_unstable_koszul(
    ring: &RingSpec,
    gens: &[Monomial],
    s: u32,
) -> Result<GradedComplex, Error> {
    build_unstable_koszul_with(ring, gens, s, &MonomialIdeal::zero())
}

/// The Čech complex on `gens`, tensored with `R/extra`: cohomological
/// degrees `0..#gens-1`, with `(R/J)[1/alpha_S]` over nonempty subsets and
/// alternating-sign inclusion differentials.
pub fn build_cech_with(
    ring: &RingSpec,
    gens: &[Monomial],
    extra: &MonomialIdeal,
) -> Result<GradedComplex, Error> {
    validate_gens(ring, gens)?;
    let m = gens.len();
    let quotient = ring.quotient.sum(extra);
    let mut modules = Vec::with_capacity(m);
    for k in 1..=m {
        modules.push(
            subsets_of_size(m, k)
                .iter()
                .map(|&sub| Summand::localized(subset_product(gens, sub), quotient.clone()))
                .collect::<Vec<_>>(),
        );
    }
    let mut diffs = Vec::with_capacity(m.saturating_sub(1));
    for k in 1..m {
        let src = subsets_of_size(m, k);
        let tgt = subsets_of_size(m, k + 1);
        let tgt_pos: std::collections::BTreeMap<u32, usize> =
            tgt.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut d = PolyMatrix::zero(tgt.len(), src.len());
        let one = Monomial::one(ring.variables);
        for (col, &sub) in src.iter().enumerate() {
            for g in 0..m {
                if sub & (1 << g) != 0 {
                    continue;
                }
                let t = sub | (1 << g);
                d.set_monomial(tgt_pos[&t], col, insertion_sign(sub, g), one.clone());
            }
        }
        diffs.push(d);
    }
    Ok(GradedComplex {
        field: ring.field,
        min_index: 0,
        modules,
        diffs,
    })
}

pub fn build_cech(ring: &RingSpec, gens: &[Monomial]) -> Result<GradedComplex, Error> {
    build_cech_with(ring, gens, &MonomialIdeal::zero())
}

/// The coefficient module `M = R/rel` as a single summand, and the
/// augmentation `M -> Cech^0` (diagonal of localization maps).
fn augmentation(
    ring: &RingSpec,
    gens: &[Monomial],
    rel: &MonomialIdeal,
) -> (Vec<Summand>, PolyMatrix) {
    let quotient = ring.quotient.sum(rel);
    let m_summands = vec![Summand::free(vec![0; ring.variables], quotient)];
    let mut aug = PolyMatrix::zero(gens.len(), 1);
    let one = Monomial::one(ring.variables);
    for row in 0..gens.len() {
        aug.set_monomial(row, 0, 1, one.clone());
    }
    (m_summands, aug)
}

/// Local cohomology dims per fine degree in one window: `H^0` as the kernel
/// of the augmentation, `H^1` from the four-term exact sequence, and
/// `H^i = CechH^{i-1}` for `i >= 2`.
pub fn local_cohomology(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<DegreeTable, Error> {
    if ideal.is_zero() {
        // Gamma_0 is the identity: H^0 = M, higher vanish
        let quotient = ring.quotient.sum(module_rel);
        let m = Summand::free(vec![0; ring.variables], quotient);
        let mut table = DegreeTable::new(window.clone());
        for a in window.degrees() {
            let d = dim_of_degree(std::slice::from_ref(&m), &a);
            table.set(0, a, d);
        }
        return Ok(table);
    }
    let gens = ideal.generators().to_vec();
    let cech = build_cech_with(ring, &gens, module_rel)?;
    let (m_summands, aug) = augmentation(ring, &gens, module_rel);
    let cells: Result<Vec<_>, Error> = window
        .degrees()
        .into_par_iter()
        .map(|a| {
            let m_dim = dim_of_degree(&m_summands, &a);
            let aug_mat = map_matrix(&m_summands, &cech.modules[0], &aug, &a, ring.field)?;
            let aug_rank = aug_mat.rank();
            let ch = cech.cohomology_at(&a)?;
            let mut dims = vec![m_dim - aug_rank, ch[0] - aug_rank];
            for i in 1..ch.len() {
                dims.push(ch[i]);
            }
            Ok((a, dims))
        })
        .collect();
    let mut table = DegreeTable::new(window.clone());
    for (a, dims) in cells? {
        for (i, d) in dims.into_iter().enumerate() {
            table.set(i as i64, a.clone(), d);
        }
    }
    Ok(table)
}

/// Cohomology of the Čech complex itself over the window.
pub fn cech_cohomology(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<DegreeTable, Error> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let gens = ideal.generators().to_vec();
    let cech = build_cech_with(ring, &gens, module_rel)?;
    let cells: Result<Vec<_>, Error> = window
        .degrees()
        .into_par_iter()
        .map(|a| Ok((a.clone(), cech.cohomology_at(&a)?)))
        .collect();
    let mut table = DegreeTable::new(window.clone());
    for (a, dims) in cells? {
        for (i, d) in dims.into_iter().enumerate() {
            table.set(i as i64, a.clone(), d);
        }
    }
    Ok(table)
}

/// Local cohomology via the colimit of unstable Koszul complexes: computes
/// `H^*(K_s ⊗ M)` for `s = 1..s_max` with the multiplication transition
/// maps, and reports the value once two consecutive transitions are
/// isomorphisms in a degree.
pub fn koszul_colimit_cohomology(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
    s_max: u32,
) -> Result<DegreeTable, Error> {
    assert!(s_max >= 2, "s_max must be at least 2");
    if ideal.is_zero() {
        return local_cohomology(ring, ideal, module_rel, window);
    }
    let gens = ideal.generators().to_vec();
    let complexes: Vec<GradedComplex> = (1..=s_max)
        .map(|s| build_unstable_koszul_with(ring, &gens, s, module_rel))
        .collect::<Result<_, _>>()?;
    // transition K_s -> K_{s+1}: multiply the subset component by prod alpha_i
    let m = gens.len();
    let transitions: Vec<Vec<PolyMatrix>> = (0..s_max as usize - 1)
        .map(|_| {
            (0..=m)
                .map(|k| {
                    let subs = subsets_of_size(m, k);
                    let mut t = PolyMatrix::zero(subs.len(), subs.len());
                    for (pos, &sub) in subs.iter().enumerate() {
                        t.set_monomial(pos, pos, 1, subset_product(&gens, sub));
                    }
                    t
                })
                .collect()
        })
        .collect();

    let cells: Result<Vec<_>, Error> = window
        .degrees()
        .into_par_iter()
        .map(|a| {
            let result = stabilized_dims_at(&complexes, &transitions, ring, &a)?;
            Ok((a, result))
        })
        .collect();
    let mut table = DegreeTable::new(window.clone());
    let mut unstable = Vec::new();
    for (a, dims) in cells? {
        match dims {
            Some(dims) => {
                for (i, d) in dims.into_iter().enumerate() {
                    table.set(i as i64, a.clone(), d);
                }
            }
            None => unstable.push(a),
        }
    }
    if !unstable.is_empty() {
        return Err(Error::NotStabilized(unstable));
    }
    Ok(table)
}

fn stabilized_dims_at(
    complexes: &[GradedComplex],
    transitions: &[Vec<PolyMatrix>],
    ring: &RingSpec,
    a: &[i64],
) -> Result<Option<Vec<usize>>, Error> {
    let spaces: Vec<Vec<QuotientSpace>> = complexes
        .iter()
        .map(|c| c.quotient_spaces_at(a))
        .collect::<Result<_, _>>()?;
    // iso[t] = is the induced map H(K_{t+1}) -> H(K_{t+2}) an iso in every index
    let mut iso = Vec::with_capacity(transitions.len());
    for (t, tmaps) in transitions.iter().enumerate() {
        let mut all_iso = true;
        for (k, tmap) in tmaps.iter().enumerate() {
            let f = map_matrix(
                &complexes[t].modules[k],
                &complexes[t + 1].modules[k],
                tmap,
                a,
                ring.field,
            )?;
            let induced = induced_homology_map(&spaces[t][k], &spaces[t + 1][k], &f);
            if !is_isomorphism(&induced) {
                all_iso = false;
                break;
            }
        }
        iso.push(all_iso);
    }
    // stable only when the two transitions at the truncation bound are both
    // isomorphisms: earlier windows can be vacuous (zero-to-zero) before the
    // cohomology first appears
    let n = iso.len();
    if n >= 2 && iso[n - 1] && iso[n - 2] {
        let dims = spaces[n - 2].iter().map(|q| q.dim).collect();
        return Ok(Some(dims));
    }
    Ok(None)
}

/// Report of the four-term exact sequence and the `H^i = CechH^{i-1}`
/// isomorphisms, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub pass: bool,
    /// first degree where a check failed
    pub witness: Option<Vec<i64>>,
}

/// Verify, in every degree of the window, alternating-sum consistency of
/// `0 -> H^0 -> M -> CechH^0 -> H^1 -> 0` and the isomorphisms for i >= 2.
pub fn les_check(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<LesReport, Error> {
    let local = local_cohomology(ring, ideal, module_rel, window)?;
    if ideal.is_zero() {
        return Ok(LesReport {
            pass: true,
            witness: None,
        });
    }
    let cech = cech_cohomology(ring, ideal, module_rel, window)?;
    let quotient = ring.quotient.sum(module_rel);
    let m_summand = Summand::free(vec![0; ring.variables], quotient);
    let max_i = ideal.generators().len() as i64;
    for a in window.degrees() {
        let m_dim = dim_of_degree(std::slice::from_ref(&m_summand), &a) as i64;
        let h0 = local.get(0, &a) as i64;
        let h1 = local.get(1, &a) as i64;
        let ch0 = cech.get(0, &a) as i64;
        if h0 - m_dim + ch0 - h1 != 0 {
            return Ok(LesReport {
                pass: false,
                witness: Some(a),
            });
        }
        for i in 2..=max_i {
            if local.get(i, &a) != cech.get(i - 1, &a) {
                return Ok(LesReport {
                    pass: false,
                    witness: Some(a),
                });
            }
        }
    }
    Ok(LesReport {
        pass: true,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub pass: bool,
    pub witness: Option<(i64, Vec<i64>)>,
}

/// Assert that two generator sets with equal radicals produce identical
/// local cohomology tables.
pub fn radical_invariance_check(
    ring: &RingSpec,
    gens1: &[Monomial],
    gens2: &[Monomial],
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<RadicalReport, Error> {
    let i1 = MonomialIdeal::new(gens1.to_vec())?;
    let i2 = MonomialIdeal::new(gens2.to_vec())?;
    if i1.radical() != i2.radical() {
        return Err(Error::RadicalsDiffer);
    }
    let t1 = local_cohomology(ring, &i1, module_rel, window)?;
    let t2 = local_cohomology(ring, &i2, module_rel, window)?;
    let witness = t1.first_difference(&t2);
    Ok(RadicalReport {
        pass: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    /// least index with nonzero local cohomology in the window
    pub computed_depth: Option<i64>,
    /// Krull dimension of the module `R/(J + rel)`
    pub krull_dim: usize,
    /// no nonzero H^i with i > krull_dim
    pub upper_bound_ok: bool,
    /// a nonvanishing witness exists and sits at index <= krull_dim
    pub lower_witnessed: bool,
    pub witness: Option<(i64, Vec<i64>)>,
}

/// Check Grothendieck's bounds: vanishing above the Krull dimension, and a
/// nonvanishing H^i at the operational depth.
pub fn vanishing_report(
    ring: &RingSpec,
    ideal: &MonomialIdeal,
    module_rel: &MonomialIdeal,
    window: &DegreeBox,
) -> Result<VanishingReport, Error> {
    let table = local_cohomology(ring, ideal, module_rel, window)?;
    let quotient = ring.quotient.sum(module_rel);
    let krull = krull_dim_of(ring.variables, &quotient);
    let indices = table.nonzero_indices();
    let computed_depth = indices.first().copied();
    let upper_bound_ok = indices.iter().all(|&i| i <= krull as i64);
    let witness = computed_depth.and_then(|i| {
        table
            .iter()
            .find(|((j, _), _)| *j == i)
            .map(|((j, a), _)| (*j, a.clone()))
    });
    let lower_witnessed =
        computed_depth.is_some_and(|d| d >= 0 && d <= krull as i64);
    Ok(VanishingReport {
        computed_depth,
        krull_dim: krull,
        upper_bound_ok,
        lower_witnessed,
        witness,
    })
}

/// Euler-characteristic conservation over a window: the alternating sum of
/// module dimensions must match the alternating sum of cohomology.
pub fn euler_conservation_check(
    complex: &GradedComplex,
    window: &DegreeBox,
) -> Result<Option<Vec<i64>>, Error> {
    for a in window.degrees() {
        let chi_modules = complex.euler_at(&a);
        let coh = complex.cohomology_at(&a)?;
        let chi_coh = crate::graded::euler_characteristic(&coh);
        if chi_modules != chi_coh {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
