//! Finite-dimensional graded augmented algebras: minimal resolutions of the
//! residue field, Ext dimensions and Yoneda products, socle and Frobenius
//! form computations, and Hilbert-symmetry (Matlis self-duality) checks.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::field::{FieldElem, FieldSpec};
use crate::matrix::{ExactMatrix, Spanner};
use crate::monomial::{krull_dim_of, Monomial, MonomialIdeal};

/// A finite-dimensional associative unital graded algebra with a chosen
/// basis, structure constants, and an augmentation onto the base field.
#[derive(Clone, Debug)]
pub struct FinDimAlgebra {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    /// mult[i][j] = coordinates of e_i * e_j
    pub mult: Vec<Vec<Vec<FieldElem>>>,
    /// coordinates of the identity
    pub one: Vec<FieldElem>,
    /// augmentation functional, an algebra map onto k
    pub augmentation: Vec<FieldElem>,
    /// basis index of the identity, when the identity is a basis element
    /// (set for group algebras; selects the default Frobenius functional)
    pub identity_index: Option<usize>,
}

impl FinDimAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        degrees: Vec<i64>,
        mult: Vec<Vec<Vec<FieldElem>>>,
        one: Vec<FieldElem>,
        augmentation: Vec<FieldElem>,
        identity_index: Option<usize>,
    ) -> Result<Self, Error> {
        let a = FinDimAlgebra {
            field,
            labels,
            degrees,
            mult,
            one,
            augmentation,
            identity_index,
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.dim();
        let f = self.field;
        if self.degrees.len() != n
            || self.mult.len() != n
            || self.one.len() != n
            || self.augmentation.len() != n
        {
            return Err(Error::InvalidAlgebra("inconsistent dimensions".into()));
        }
        for row in &self.mult {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::InvalidAlgebra("bad structure constants".into()));
            }
        }
        // unit laws
        for i in 0..n {
            let mut e = vec![f.zero(); n];
            e[i] = f.one();
            if self.mul(&self.one, &e) != e || self.mul(&e, &self.one) != e {
                return Err(Error::InvalidAlgebra(format!(
                    "unit law fails on basis element {i}"
                )));
            }
        }
        // associativity on all basis triples
        for i in 0..n {
            for j in 0..n {
                let ij = self.mult[i][j].clone();
                for l in 0..n {
                    let mut el = vec![f.zero(); n];
                    el[l] = f.one();
                    let left = self.mul(&ij, &el);
                    let mut ei = vec![f.zero(); n];
                    ei[i] = f.one();
                    let right = self.mul(&ei, &self.mult[j][l]);
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on ({i}, {j}, {l})"
                        )));
                    }
                }
            }
        }
        // grading: e_i e_j supported in degree deg_i + deg_j
        for i in 0..n {
            for j in 0..n {
                let d = self.degrees[i] + self.degrees[j];
                for (l, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() && self.degrees[l] != d {
                        return Err(Error::InvalidAlgebra(format!(
                            "product e_{i} e_{j} is not homogeneous"
                        )));
                    }
                }
            }
        }
        // augmentation is an algebra map
        let eps = |v: &[FieldElem]| -> FieldElem {
            let mut s = f.zero();
            for (c, a) in v.iter().zip(&self.augmentation) {
                s = f.add(&s, &f.mul(c, a));
            }
            s
        };
        if eps(&self.one) != f.one() {
            return Err(Error::InvalidAlgebra("augmentation of 1 is not 1".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = eps(&self.mult[i][j]);
                let rhs = f.mul(&self.augmentation[i], &self.augmentation[j]);
                if lhs != rhs {
                    return Err(Error::InvalidAlgebra(format!(
                        "augmentation is not multiplicative on ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        let n = self.dim();
        let f = self.field;
        let mut out = vec![f.zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (o, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    *o = f.add(o, &f.mul(&c, m));
                }
            }
        }
        out
    }

    pub fn eps(&self, v: &[FieldElem]) -> FieldElem {
        let f = self.field;
        let mut s = f.zero();
        for (c, a) in v.iter().zip(&self.augmentation) {
            s = f.add(&s, &f.mul(c, a));
        }
        s
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Basis of the augmentation ideal J = ker eps.
    pub fn aug_ideal_basis(&self) -> Vec<Vec<FieldElem>> {
        let mut m = ExactMatrix::zero(1, self.dim(), self.field);
        for (j, a) in self.augmentation.iter().enumerate() {
            m.set(0, j, a.clone());
        }
        m.kernel_basis()
    }

    /// Whether the augmentation ideal is nilpotent (e.g. p-group algebras
    /// in characteristic p, graded connected algebras).
    pub fn aug_ideal_nilpotent(&self) -> bool {
        let f = self.field;
        let jbasis = self.aug_ideal_basis();
        let mut current = jbasis.clone();
        for _ in 0..=self.dim() {
            if current.is_empty() {
                return true;
            }
            let mut span = Spanner::new(self.dim(), f);
            let mut next = Vec::new();
            for j in &jbasis {
                for w in &current {
                    let prod = self.mul(j, w);
                    if span.insert(&prod) {
                        next.push(prod);
                    }
                }
            }
            current = next;
        }
        false
    }
}

// --- constructions ----------------------------------------------------------

/// kG from a multiplication table `table[i][j] = index of g_i g_j`.
pub fn group_algebra(table: &[Vec<usize>], field: FieldSpec) -> Result<FinDimAlgebra, Error> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for row in table {
        if row.len() != n || row.iter().any(|&x| x >= n) {
            return Err(Error::NotAGroup("table is not closed".into()));
        }
    }
    // identity
    let id = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    // inverses
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == id && table[j][i] == id) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    // associativity
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if table[table[i][j]][l] != table[i][table[j][l]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails on ({i}, {j}, {l})"
                    )));
                }
            }
        }
    }
    let f = field;
    let mut mult = vec![vec![vec![f.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j][table[i][j]] = f.one();
        }
    }
    let mut one = vec![f.zero(); n];
    one[id] = f.one();
    FinDimAlgebra::new(
        field,
        (0..n).map(|i| format!("g{i}")).collect(),
        vec![0; n],
        mult,
        one,
        vec![f.one(); n],
        Some(id),
    )
}

/// The 2-dimensional exterior algebra on one generator.
pub fn exterior_algebra(field: FieldSpec, generator_degree: i64) -> FinDimAlgebra {
    let f = field;
    let z = f.zero();
    let o = f.one();
    let mult = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
    ];
    FinDimAlgebra::new(
        field,
        vec!["1".into(), "t".into()],
        vec![0, generator_degree],
        mult,
        vec![o.clone(), z.clone()],
        vec![o, z],
        Some(0),
    )
    .expect("exterior algebra data is valid")
}

/// Artinian monomial quotient `k[x_1..x_n]/I` with its monomial basis,
/// graded by total degree.
pub fn monomial_algebra(
    field: FieldSpec,
    vars: usize,
    ideal: &MonomialIdeal,
) -> Result<FinDimAlgebra, Error> {
    if krull_dim_of(vars, ideal) != 0 {
        return Err(Error::InvalidAlgebra(
            "monomial quotient is not finite dimensional".into(),
        ));
    }
    let bound: i64 = ideal
        .generators()
        .iter()
        .flat_map(|g| g.0.iter().copied())
        .max()
        .unwrap_or(1);
    // enumerate basis monomials below the exponent bound
    let mut basis: Vec<Monomial> = vec![Monomial::one(vars)];
    for v in 0..vars {
        let prior = basis.clone();
        for e in 1..=bound {
            for m in &prior {
                let mut exps = m.0.clone();
                exps[v] = e;
                let cand = Monomial(exps);
                if !ideal.contains(&cand) {
                    basis.push(cand);
                }
            }
        }
    }
    basis.sort_by_key(|m| (m.total_degree(), m.0.clone()));
    let index: BTreeMap<Vec<i64>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.0.clone(), i))
        .collect();
    let n = basis.len();
    let f = field;
    let mut mult = vec![vec![vec![f.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let prod = basis[i].mul(&basis[j]);
            if !ideal.contains(&prod) {
                let l = index[&prod.0];
                mult[i][j][l] = f.one();
            }
        }
    }
    let mut one = vec![f.zero(); n];
    one[0] = f.one();
    let mut aug = vec![f.zero(); n];
    aug[0] = f.one();
    FinDimAlgebra::new(
        field,
        basis
            .iter()
            .map(|m| {
                if m.is_one() {
                    "1".to_string()
                } else {
                    format!("x^{:?}", m.0)
                }
            })
            .collect(),
        basis.iter().map(Monomial::total_degree).collect(),
        mult,
        one,
        aug,
        Some(0),
    )
}

// --- group tables -----------------------------------------------------------

pub fn cyclic_group(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

pub fn product_group(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (na, nb) = (a.len(), b.len());
    let idx = |x: usize, y: usize| x * nb + y;
    let mut t = vec![vec![0; na * nb]; na * nb];
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                for y2 in 0..nb {
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a[x1][x2], b[y1][y2]);
                }
            }
        }
    }
    t
}

/// Dihedral group of order 2n: elements r^i s^e, index = e*n + i.
pub fn dihedral_group(n: usize) -> Vec<Vec<usize>> {
    let idx = |e: usize, i: usize| e * n + i;
    let mut t = vec![vec![0; 2 * n]; 2 * n];
    for e1 in 0..2 {
        for i1 in 0..n {
            for e2 in 0..2 {
                for i2 in 0..n {
                    // (r^i1 s^e1)(r^i2 s^e2) = r^(i1 + i2 or i1 - i2) s^(e1+e2)
                    let i = if e1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                    t[idx(e1, i1)][idx(e2, i2)] = idx((e1 + e2) % 2, i);
                }
            }
        }
    }
    t
}

/// The quaternion group {±1, ±i, ±j, ±k}; index = sign*4 + axis.
pub fn quaternion_group() -> Vec<Vec<usize>> {
    // axes 0=1, 1=i, 2=j, 3=k; table of (axis, sign) products
    let unit_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) | (2, 2) | (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mut t = vec![vec![0; 8]; 8];
    for s1 in 0..2 {
        for a1 in 0..4 {
            for s2 in 0..2 {
                for a2 in 0..4 {
                    let (a, neg) = unit_mul(a1, a2);
                    let s = (s1 + s2 + usize::from(neg)) % 2;
                    t[s1 * 4 + a1][s2 * 4 + a2] = s * 4 + a;
                }
            }
        }
    }
    t
}

// --- resolutions ------------------------------------------------------------

/// A free resolution of k over A, through homological degree N, stored by
/// the images in `F_{i-1}` of the chosen generators of `F_i`.
#[derive(Clone, Debug)]
pub struct ResolutionSlice {
    pub betti: Vec<usize>,
    /// gens[i-1][j] = image of generator j of F_i, a vector in F_{i-1}
    pub gens: Vec<Vec<Vec<FieldElem>>>,
    /// true when generators were selected by graded Nakayama (entries in
    /// the augmentation ideal)
    pub minimal: bool,
}

/// Left-multiply each free component of `v` in `A^rank` by algebra elt `a`.
fn module_mul(alg: &FinDimAlgebra, a: &[FieldElem], v: &[FieldElem], rank: usize) -> Vec<FieldElem> {
    let n = alg.dim();
    let mut out = Vec::with_capacity(rank * n);
    for r in 0..rank {
        out.extend(alg.mul(a, &v[r * n..(r + 1) * n]));
    }
    out
}

/// k-linear matrix of the A-linear map sending generator j to gens[j].
fn differential_matrix(
    alg: &FinDimAlgebra,
    gens: &[Vec<FieldElem>],
    rank_prev: usize,
) -> ExactMatrix {
    let n = alg.dim();
    let mut m = ExactMatrix::zero(rank_prev * n, gens.len() * n, alg.field);
    for (j, g) in gens.iter().enumerate() {
        for t in 0..n {
            let mut et = vec![alg.field.zero(); n];
            et[t] = alg.field.one();
            let col = module_mul(alg, &et, g, rank_prev);
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j * n + t, v.clone());
                }
            }
        }
    }
    m
}

/// Select module generators of the span of `kernel` inside `A^rank`: by
/// graded Nakayama (basis modulo J*kernel) when J is nilpotent, greedy
/// A-span otherwise.
fn select_generators(
    alg: &FinDimAlgebra,
    kernel: &[Vec<FieldElem>],
    rank: usize,
    nakayama: bool,
) -> Vec<Vec<FieldElem>> {
    let n = alg.dim();
    let f = alg.field;
    if nakayama {
        let jbasis = alg.aug_ideal_basis();
        let mut span = Spanner::new(rank * n, f);
        for j in &jbasis {
            for v in kernel {
                span.insert(&module_mul(alg, j, v, rank));
            }
        }
        let mut chosen = Vec::new();
        for v in kernel {
            if span.insert(v) {
                chosen.push(v.clone());
            }
        }
        chosen
    } else {
        let mut span = Spanner::new(rank * n, f);
        let mut chosen = Vec::new();
        for v in kernel {
            if span.contains(v) {
                continue;
            }
            chosen.push(v.clone());
            for t in 0..n {
                let mut et = vec![f.zero(); n];
                et[t] = f.one();
                span.insert(&module_mul(alg, &et, v, rank));
            }
        }
        chosen
    }
}

/// Free resolution of k to homological degree N; minimal whenever the
/// augmentation ideal is nilpotent.
pub fn minimal_resolution(alg: &FinDimAlgebra, n_steps: usize) -> Result<ResolutionSlice, Error> {
    assert!(n_steps <= 20, "resolution truncation capped at 20");
    let nakayama = alg.aug_ideal_nilpotent();
    let mut betti = vec![1usize];
    let mut gens: Vec<Vec<Vec<FieldElem>>> = Vec::new();
    // kernel of the augmentation F_0 = A -> k
    let mut kernel = alg.aug_ideal_basis();
    for _ in 1..=n_steps {
        let rank_prev = *betti.last().unwrap();
        let chosen = select_generators(alg, &kernel, rank_prev, nakayama);
        betti.push(chosen.len());
        if chosen.is_empty() {
            gens.push(chosen);
            kernel = Vec::new();
            continue;
        }
        let d = differential_matrix(alg, &chosen, rank_prev);
        kernel = d.kernel_basis();
        gens.push(chosen);
    }
    Ok(ResolutionSlice {
        betti,
        gens,
        minimal: nakayama,
    })
}

impl ResolutionSlice {
    /// Verify d.d = 0 and (when minimal) that all differential entries lie
    /// in the augmentation ideal.
    pub fn certify(&self, alg: &FinDimAlgebra) -> Result<(), Error> {
        let n = alg.dim();
        for i in 1..self.gens.len() {
            // apply d_{i} then d_{i-1} to each generator of F_{i+1}
            for g in &self.gens[i] {
                // g lives in F_i; push through d_i
                let mut image = vec![alg.field.zero(); self.betti[i - 1] * n];
                for (r, chunk) in g.chunks(n).enumerate() {
                    let contrib = module_mul(alg, chunk, &self.gens[i - 1][r], self.betti[i - 1]);
                    for (x, y) in image.iter_mut().zip(&contrib) {
                        *x = alg.field.add(x, y);
                    }
                }
                if image.iter().any(|x| !x.is_zero()) {
                    return Err(Error::CompositionNotZero { degree: vec![i as i64] });
                }
            }
        }
        if self.minimal {
            for level in &self.gens {
                for g in level {
                    for chunk in g.chunks(n) {
                        if !alg.eps(chunk).is_zero() {
                            return Err(Error::InvalidAlgebra(
                                "differential entry escapes the augmentation ideal".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dims of Ext^i(k, A) for i = 0..N, from Hom(F_., A).
pub fn ext_k_a(alg: &FinDimAlgebra, n_steps: usize) -> Result<Vec<usize>, Error> {
    // resolve one step past the last requested index so Ext^N sees its
    // outgoing differential
    let res = minimal_resolution(alg, n_steps + 1)?;
    let n = alg.dim();
    let f = alg.field;
    // hom_maps[i]: Hom(F_i, A) -> Hom(F_{i+1}, A), phi -> phi . d_{i+1}
    let mut hom_maps: Vec<ExactMatrix> = Vec::new();
    for i in 0..=n_steps {
        let b_cur = res.betti[i];
        let b_next = res.betti[i + 1];
        let mut m = ExactMatrix::zero(b_next * n, b_cur * n, f);
        for (j, g) in res.gens[i].iter().enumerate() {
            // row block j: x -> sum_r g_r * x_r (left multiplication)
            for r in 0..b_cur {
                let coef = &g[r * n..(r + 1) * n];
                for t in 0..n {
                    let mut et = vec![f.zero(); n];
                    et[t] = f.one();
                    let prod = alg.mul(coef, &et);
                    for (l, v) in prod.iter().enumerate() {
                        if !v.is_zero() {
                            m.add_to(j * n + l, r * n + t, v);
                        }
                    }
                }
            }
        }
        hom_maps.push(m);
    }
    let mut dims = Vec::with_capacity(n_steps + 1);
    for i in 0..=n_steps {
        let ker = hom_maps[i].nullity();
        let im = if i > 0 { hom_maps[i - 1].rank() } else { 0 };
        dims.push(ker - im);
    }
    Ok(dims)
}

/// Basis of the two-sided socle: the annihilator of the augmentation ideal.
pub fn socle_basis(alg: &FinDimAlgebra) -> Vec<Vec<FieldElem>> {
    let n = alg.dim();
    let f = alg.field;
    let jbasis = alg.aug_ideal_basis();
    let mut rows = Vec::new();
    for j in &jbasis {
        // left: j * x = 0 and right: x * j = 0
        let mut left = vec![vec![f.zero(); n]; n];
        let mut right = vec![vec![f.zero(); n]; n];
        for t in 0..n {
            let mut et = vec![f.zero(); n];
            et[t] = f.one();
            let l = alg.mul(j, &et);
            let r = alg.mul(&et, j);
            for i in 0..n {
                left[i][t] = l[i].clone();
                right[i][t] = r[i].clone();
            }
        }
        rows.extend(left);
        rows.extend(right);
    }
    let mut m = ExactMatrix::zero(rows.len().max(1), n, f);
    for (i, row) in rows.iter().enumerate() {
        for (t, v) in row.iter().enumerate() {
            if !v.is_zero() {
                m.set(i, t, v.clone());
            }
        }
    }
    m.kernel_basis()
}

pub fn socle_dim(alg: &FinDimAlgebra) -> usize {
    socle_basis(alg).len()
}

#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    pub frobenius: bool,
    /// a nonzero radical vector of the bilinear form, when degenerate
    pub witness: Option<Vec<FieldElem>>,
}

/// Nondegeneracy of (a, b) -> lambda(a b). The default functional is
/// coefficient-of-identity, available when the identity is a basis element.
pub fn frobenius_check(
    alg: &FinDimAlgebra,
    functional: Option<&[FieldElem]>,
) -> Result<FrobeniusReport, Error> {
    let n = alg.dim();
    let f = alg.field;
    let lam: Vec<FieldElem> = match functional {
        Some(l) => {
            assert_eq!(l.len(), n);
            l.to_vec()
        }
        None => match alg.identity_index {
            Some(id) => {
                let mut l = vec![f.zero(); n];
                l[id] = f.one();
                l
            }
            None => return Err(Error::NoFunctionalSupplied),
        },
    };
    let apply = |v: &[FieldElem]| -> FieldElem {
        let mut s = f.zero();
        for (c, l) in v.iter().zip(&lam) {
            s = f.add(&s, &f.mul(c, l));
        }
        s
    };
    let mut gram = ExactMatrix::zero(n, n, f);
    for i in 0..n {
        for j in 0..n {
            let v = apply(&alg.mult[i][j]);
            if !v.is_zero() {
                gram.set(i, j, v);
            }
        }
    }
    if gram.rank() == n {
        Ok(FrobeniusReport {
            frobenius: true,
            witness: None,
        })
    } else {
        let witness = gram.kernel_basis().into_iter().next();
        Ok(FrobeniusReport {
            frobenius: false,
            witness,
        })
    }
}

/// Dimensions and Yoneda products of Ext^*_A(k, k) through degree N, on the
/// dual basis of a minimal resolution's generators.
#[derive(Clone, Debug)]
pub struct ExtAlgebra {
    pub dims: Vec<usize>,
    /// (m, u, n, v) -> coordinates of class_u^(m) . class_v^(n) in Ext^(m+n)
    pub products: BTreeMap<(usize, usize, usize, usize), Vec<FieldElem>>,
}

/// Apply a chain-map level (known on generators) to a vector of F_{m}.
fn apply_on_gens(
    alg: &FinDimAlgebra,
    images: &[Vec<FieldElem>],
    v: &[FieldElem],
    out_rank: usize,
) -> Vec<FieldElem> {
    let n = alg.dim();
    let f = alg.field;
    let mut out = vec![f.zero(); out_rank * n];
    for (r, chunk) in v.chunks(n).enumerate() {
        let contrib = module_mul(alg, chunk, &images[r], out_rank);
        for (x, y) in out.iter_mut().zip(&contrib) {
            *x = f.add(x, y);
        }
    }
    out
}

pub fn ext_algebra(alg: &FinDimAlgebra, n_max: usize) -> Result<ExtAlgebra, Error> {
    assert!(n_max <= 12, "Ext-algebra truncation capped at 12");
    if !alg.aug_ideal_nilpotent() {
        return Err(Error::InvalidAlgebra(
            "Yoneda products need a minimal resolution (nilpotent augmentation ideal)".into(),
        ));
    }
    let res = minimal_resolution(alg, n_max)?;
    res.certify(alg)?;
    let n = alg.dim();
    let f = alg.field;
    let diffs: Vec<ExactMatrix> = (1..=n_max)
        .map(|i| differential_matrix(alg, &res.gens[i - 1], res.betti[i - 1]))
        .collect();
    let mut products = BTreeMap::new();
    for m in 1..n_max {
        for u in 0..res.betti[m] {
            // lift the dual class of generator u of F_m to a chain map
            // phi_s: F_{m+s} -> F_s; phi_0 sends generator u to 1
            let mut phi: Vec<Vec<Vec<FieldElem>>> = Vec::new();
            let mut phi0 = vec![vec![f.zero(); n]; res.betti[m]];
            phi0[u] = alg.one.clone();
            phi.push(phi0);
            for s in 1..=(n_max - m) {
                let mut level = Vec::with_capacity(res.betti[m + s]);
                for g in &res.gens[m + s - 1] {
                    let rhs = apply_on_gens(alg, &phi[s - 1], g, res.betti[s - 1]);
                    let x = diffs[s - 1]
                        .solve(&rhs)
                        .ok_or(Error::LiftFailed(s))?;
                    level.push(x);
                }
                phi.push(level);
            }
            for nn in 1..=(n_max - m) {
                for v in 0..res.betti[nn] {
                    let mut coords = vec![f.zero(); res.betti[m + nn]];
                    for (w, x) in phi[nn].iter().enumerate() {
                        coords[w] = alg.eps(&x[v * n..(v + 1) * n]);
                    }
                    products.insert((m, u, nn, v), coords);
                }
            }
        }
    }
    Ok(ExtAlgebra {
        dims: res.betti.clone(),
        products,
    })
}

#[derive(Clone, Debug)]
pub struct HilbertReport {
    pub socle_dim: usize,
    pub socle_degree: Option<i64>,
    /// Some(b) when socle_dim = 1: whether dim A_i = dim A_{s-i}; None when
    /// the algebra is exempt (socle_dim > 1)
    pub symmetric: Option<bool>,
    pub dims_by_degree: BTreeMap<i64, usize>,
}

/// Matlis self-duality surrogate for graded Artinian algebras: simple socle
/// forces a symmetric Hilbert function about the socle degree.
pub fn hilbert_symmetry_check(alg: &FinDimAlgebra) -> HilbertReport {
    let socle = socle_basis(alg);
    let mut dims_by_degree: BTreeMap<i64, usize> = BTreeMap::new();
    for d in &alg.degrees {
        *dims_by_degree.entry(*d).or_insert(0) += 1;
    }
    if socle.len() != 1 {
        return HilbertReport {
            socle_dim: socle.len(),
            socle_degree: None,
            symmetric: None,
            dims_by_degree,
        };
    }
    let v = &socle[0];
    let degs: Vec<i64> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| alg.degrees[i])
        .collect();
    let s = degs[0];
    let homogeneous = degs.iter().all(|&d| d == s);
    let symmetric = homogeneous
        && dims_by_degree.iter().all(|(&d, &dim)| {
            dims_by_degree.get(&(s - d)).copied().unwrap_or(0) == dim
        });
    HilbertReport {
        socle_dim: 1,
        socle_degree: Some(s),
        symmetric: Some(symmetric),
        dims_by_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn m(e: &[i64]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn ideal(gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::new(gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    #[test]
    fn group_algebra_c2() {
        let a = group_algebra(&cyclic_group(2), f2()).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert!(a.aug_ideal_nilpotent());
    }

    #[test]
    fn group_algebra_rejects_non_groups() {
        // constant table: no identity
        assert!(matches!(
            group_algebra(&vec![vec![0, 0], vec![0, 0]], f2()),
            Err(Error::NotAGroup(_))
        ));
        // flipped associativity: left-shift table
        let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(group_algebra(&bad, f2()).is_err());
    }

    #[test]
    fn quaternion_is_a_group_of_order_8() {
        let a = group_algebra(&quaternion_group(), f2()).unwrap();
        assert_eq!(a.dim(), 8);
        assert!(!a.is_commutative());
    }

    #[test]
    fn dihedral_is_a_group() {
        let a = group_algebra(&dihedral_group(4), f2()).unwrap();
        assert_eq!(a.dim(), 8);
        assert!(!a.is_commutative());
    }

    #[test]
    fn betti_of_dual_numbers() {
        // k[t]/(t^2): periodic resolution, betti all 1
        let a = exterior_algebra(f2(), 1);
        let res = minimal_resolution(&a, 8).unwrap();
        assert_eq!(res.betti, vec![1; 9]);
        assert!(res.minimal);
        res.certify(&a).unwrap();
    }

    #[test]
    fn betti_of_klein_four() {
        let v4 = product_group(&cyclic_group(2), &cyclic_group(2));
        let a = group_algebra(&v4, f2()).unwrap();
        let res = minimal_resolution(&a, 8).unwrap();
        let expected: Vec<usize> = (0..=8).map(|i| i + 1).collect();
        assert_eq!(res.betti, expected);
        res.certify(&a).unwrap();
    }

    #[test]
    fn betti_of_the_field_itself() {
        let one = monomial_algebra(f2(), 1, &ideal(&[&[1]])).unwrap();
        assert_eq!(one.dim(), 1);
        let res = minimal_resolution(&one, 5).unwrap();
        assert_eq!(res.betti, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn betti_invariant_under_basis_permutation() {
        let v4 = product_group(&cyclic_group(2), &cyclic_group(2));
        let a = group_algebra(&v4, f2()).unwrap();
        // permute the non-identity basis elements: relabel group elements
        let perm = [0usize, 2, 3, 1];
        let table: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| {
                let inv = |x: usize| perm.iter().position(|&p| p == x).unwrap();
                perm[v4[inv(i)][inv(j)]]
            }).collect())
            .collect();
        let b = group_algebra(&table, f2()).unwrap();
        let ra = minimal_resolution(&a, 6).unwrap();
        let rb = minimal_resolution(&b, 6).unwrap();
        assert_eq!(ra.betti, rb.betti);
    }

    #[test]
    fn ext_k_a_self_injective_group_algebra() {
        let a = group_algebra(&cyclic_group(2), f2()).unwrap();
        let dims = ext_k_a(&a, 8).unwrap();
        assert_eq!(dims[0], 1);
        assert!(dims[1..].iter().all(|&d| d == 0), "{dims:?}");
    }

    #[test]
    fn ext_k_a_non_gorenstein() {
        // k[x,y]/(x^2, xy, y^2): socle is 2-dimensional
        let a = monomial_algebra(f2(), 2, &ideal(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        let dims = ext_k_a(&a, 4).unwrap();
        assert_eq!(dims[0], 2);
    }

    #[test]
    fn ext_k_a_of_the_field() {
        let one = monomial_algebra(f2(), 1, &ideal(&[&[1]])).unwrap();
        let dims = ext_k_a(&one, 4).unwrap();
        assert_eq!(dims, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn socle_examples() {
        let a = monomial_algebra(f2(), 1, &ideal(&[&[3]])).unwrap();
        assert_eq!(socle_dim(&a), 1);
        let b = monomial_algebra(f2(), 2, &ideal(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(socle_dim(&b), 2);
        let c = monomial_algebra(f2(), 2, &ideal(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(socle_dim(&c), 1);
    }

    #[test]
    fn frobenius_group_algebras() {
        let a = group_algebra(&cyclic_group(2), f2()).unwrap();
        assert!(frobenius_check(&a, None).unwrap().frobenius);
        let q8 = group_algebra(&quaternion_group(), f2()).unwrap();
        assert!(frobenius_check(&q8, None).unwrap().frobenius);
    }

    #[test]
    fn frobenius_fails_for_fat_socle() {
        let a = monomial_algebra(f2(), 2, &ideal(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        // top-degree-coefficient functional: weight on the two degree-1 classes
        let f = f2();
        let lam: Vec<FieldElem> = a
            .degrees
            .iter()
            .map(|&d| if d == 1 { f.one() } else { f.zero() })
            .collect();
        let rep = frobenius_check(&a, Some(&lam)).unwrap();
        assert!(!rep.frobenius);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn frobenius_needs_a_functional() {
        let mut a = monomial_algebra(f2(), 1, &ideal(&[&[2]])).unwrap();
        a.identity_index = None;
        assert!(matches!(
            frobenius_check(&a, None),
            Err(Error::NoFunctionalSupplied)
        ));
    }

    #[test]
    fn ext_algebra_of_exterior_is_polynomial() {
        let a = exterior_algebra(f2(), 1);
        let ext = ext_algebra(&a, 10).unwrap();
        assert_eq!(ext.dims, vec![1; 11]);
        // products x^m . x^n are nonzero and commutative through degree 10
        for m in 1..10 {
            for n in 1..=(10 - m) {
                let p = &ext.products[&(m, 0, n, 0)];
                assert_eq!(p.len(), 1);
                assert!(!p[0].is_zero(), "x^{m} . x^{n} vanished");
                assert_eq!(p, &ext.products[&(n, 0, m, 0)]);
            }
        }
    }

    #[test]
    fn ext_algebra_kc2_polynomial_on_degree_one() {
        let a = group_algebra(&cyclic_group(2), f2()).unwrap();
        let ext = ext_algebra(&a, 6).unwrap();
        assert_eq!(ext.dims, vec![1; 7]);
        for m in 1..6 {
            assert!(!ext.products[&(m, 0, 1, 0)][0].is_zero());
        }
    }

    #[test]
    fn hilbert_symmetry_examples() {
        let a = monomial_algebra(f2(), 2, &ideal(&[&[2, 0], &[0, 2]])).unwrap();
        let r = hilbert_symmetry_check(&a);
        assert_eq!(r.socle_dim, 1);
        assert_eq!(r.socle_degree, Some(2));
        assert_eq!(r.symmetric, Some(true));

        let b = monomial_algebra(f2(), 1, &ideal(&[&[4]])).unwrap();
        let r = hilbert_symmetry_check(&b);
        assert_eq!(r.symmetric, Some(true));

        let c = monomial_algebra(f2(), 2, &ideal(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        let r = hilbert_symmetry_check(&c);
        assert_eq!(r.socle_dim, 2);
        assert_eq!(r.symmetric, None);
    }

    #[test]
    fn semisimple_group_algebra_still_computes_ext() {
        // kC_3 over F_2: augmentation ideal not nilpotent, greedy resolution
        let a = group_algebra(&cyclic_group(3), f2()).unwrap();
        assert!(!a.aug_ideal_nilpotent());
        let dims = ext_k_a(&a, 5).unwrap();
        assert_eq!(dims[0], 1);
        assert!(dims[1..].iter().all(|&d| d == 0), "{dims:?}");
    }
}
