//! Laurent monomials over `Z^n` exponents and monomial ideals with minimal
//! generation, powers, radicals and Krull dimension of monomial quotients.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::FieldSpec;

/// A monomial, stored as its exponent vector. Negative exponents are legal
/// only inside localized contexts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k as i64).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// x^(self - other); requires other | self in callers that care.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Exponents clipped to 0/1.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| i64::from(e > 0)).collect())
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// A monomial ideal, stored by its unique minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal { generators: vec![] }
    }

    /// Minimal generating set of the ideal generated by `gens`.
    pub fn new(gens: Vec<Monomial>) -> Result<Self, Error> {
        for g in &gens {
            if !g.is_nonnegative() {
                return Err(Error::NegativeExponent(g.0.clone()));
            }
        }
        Ok(Self::minimize(gens))
    }

    fn minimize(mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let minimal = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        MonomialIdeal { generators: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert!(m.is_nonnegative());
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Minimal generators of I^k.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        assert!(k >= 1, "ideal power requires k >= 1");
        if self.generators.is_empty() {
            return MonomialIdeal::zero();
        }
        let mut result = Self::minimize(self.generators.clone());
        for _ in 1..k {
            let mut next = std::collections::BTreeSet::new();
            for p in result.generators() {
                for g in &self.generators {
                    next.insert(p.mul(g));
                }
            }
            result = Self::minimize(next.into_iter().collect());
        }
        result
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::minimize(
            self.generators
                .iter()
                .map(Monomial::squarefree_part)
                .collect(),
        )
    }

    /// Sum of ideals (union of generators, minimized).
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Self::minimize(gens)
    }
}

/// A graded ring `k[x_1..x_n]/J` with `J` a monomial ideal, carrying the
/// fine `Z^n` multigrading by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub field: FieldSpec,
    pub variables: usize,
    pub quotient: MonomialIdeal,
}

impl RingSpec {
    pub fn polynomial(field: FieldSpec, variables: usize) -> Self {
        assert!(variables >= 1);
        RingSpec {
            field,
            variables,
            quotient: MonomialIdeal::zero(),
        }
    }

    pub fn quotient_ring(field: FieldSpec, variables: usize, quotient: MonomialIdeal) -> Self {
        assert!(variables >= 1);
        RingSpec {
            field,
            variables,
            quotient,
        }
    }

    /// Krull dimension of `k[x]/J`: the largest number of variables no
    /// generator support is confined to.
    pub fn krull_dim(&self) -> usize {
        krull_dim_of(self.variables, &self.quotient)
    }
}

/// dim k[x_1..x_n]/J = max |S| over variable subsets S such that no minimal
/// generator of J has support inside S.
pub fn krull_dim_of(n: usize, quotient: &MonomialIdeal) -> usize {
    assert!(n <= 20, "subset enumeration limited to 20 variables");
    if quotient.is_unit() {
        // the zero ring; its dimension is reported as 0 by convention
        return 0;
    }
    let supports: Vec<u32> = quotient
        .generators()
        .iter()
        .map(|g| {
            g.support()
                .into_iter()
                .fold(0u32, |acc, i| acc | (1 << i))
        })
        .collect();
    let mut best = 0;
    for s in 0u32..(1 << n) {
        if supports.iter().any(|&sup| sup & !s == 0) {
            continue;
        }
        best = best.max(s.count_ones() as usize);
    }
    best
}
