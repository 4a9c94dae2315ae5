//! Formal-character arithmetic over semisimple (product) algebras: weight
//! multisets, tensor/symmetric/exterior squares, highest-weight extraction,
//! and cocharacter pushforwards.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::rational::{rat_int, Rational};
use crate::Error;

use super::simple::{SimpleAlgebra, Series};

/// A semisimple algebra: an ordered list of simple factors. Weights are flat
/// integer vectors over the concatenated fundamental-weight bases.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraType {
    pub factors: Vec<SimpleAlgebra>,
}

impl AlgebraType {
    pub fn simple(series: Series, rank: usize) -> Result<Self, Error> {
        Ok(AlgebraType {
            factors: vec![SimpleAlgebra::new(series, rank)?],
        })
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Split a flat weight vector into per-factor slices.
    pub fn split<'a>(&self, w: &'a [i64]) -> Vec<&'a [i64]> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut off = 0;
        for f in &self.factors {
            out.push(&w[off..off + f.rank]);
            off += f.rank;
        }
        out
    }

    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<u128, Error> {
        if lambda.len() != self.rank() {
            return Err(Error::Input("weight length does not match rank".into()));
        }
        let mut dim: u128 = 1;
        for (f, part) in self.factors.iter().zip(self.split(lambda)) {
            dim = dim
                .checked_mul(f.weyl_dim(part)?)
                .ok_or_else(|| Error::Structural("dimension overflow".into()))?;
        }
        Ok(dim)
    }

    pub fn dual_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let mut out = Vec::with_capacity(lambda.len());
        for (f, part) in self.factors.iter().zip(self.split(lambda)) {
            out.extend(f.dual_weight(part));
        }
        out
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.len() == self.rank() && w.iter().all(|&x| x >= 0)
    }

    /// (u, v) summed over factors, each in its own fundamental Gram form.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (f, (pu, pv)) in self
            .factors
            .iter()
            .zip(self.split(u).into_iter().zip(self.split(v)))
        {
            let gram = f.gram();
            acc += SimpleAlgebra::inner(&gram, pu, pv);
        }
        acc
    }

    /// Simple-reflection images of a weight, one per simple root of every
    /// factor (used for Weyl-invariance checks).
    pub fn simple_reflections(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut off = 0;
        for f in &self.factors {
            let a = f.cartan();
            for i in 0..f.rank {
                let c = w[off + i];
                if c == 0 {
                    continue;
                }
                let mut r = w.to_vec();
                for (row, coeffs) in a.iter().enumerate() {
                    r[off + row] -= c * coeffs[i];
                }
                out.push(r);
            }
            off += f.rank;
        }
        out
    }
}

/// Weight-multiplicity map of a (virtual) representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalCharacter {
    pub algebra: AlgebraType,
    pub weights: BTreeMap<Vec<i64>, u64>,
}

impl FormalCharacter {
    pub fn mass(&self) -> u64 {
        self.weights.values().sum()
    }

    /// Expand into a flat list with multiplicities repeated.
    fn expanded(&self) -> Vec<&Vec<i64>> {
        let mut out = Vec::new();
        for (w, &m) in &self.weights {
            for _ in 0..m {
                out.push(w);
            }
        }
        out
    }

    pub fn is_weyl_invariant(&self) -> bool {
        self.weights.iter().all(|(w, &m)| {
            self.algebra
                .simple_reflections(w)
                .iter()
                .all(|r| self.weights.get(r).copied().unwrap_or(0) == m)
        })
    }
}

/// Working cap on representation dimensions for full weight-system expansion.
pub const DIM_CAP: u128 = 400;

/// Full weight system of the irreducible with highest weight λ over a
/// product algebra (product of factor characters).
pub fn weight_system(algebra: &AlgebraType, lambda: &[i64]) -> Result<FormalCharacter, Error> {
    let dim = algebra.weyl_dim(lambda)?;
    if dim > DIM_CAP {
        return Err(Error::Input(format!(
            "dimension {dim} exceeds the working cap {DIM_CAP}"
        )));
    }
    let mut combined: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for (f, part) in algebra.factors.iter().zip(algebra.split(lambda)) {
        let ws = f.weight_system(part)?;
        let mut next = Vec::with_capacity(combined.len() * ws.len());
        for (prefix, m) in &combined {
            for (w, &mw) in &ws {
                let mut full = prefix.clone();
                full.extend(w);
                next.push((full, m * mw));
            }
        }
        combined = next;
    }
    let mut weights = BTreeMap::new();
    for (w, m) in combined {
        *weights.entry(w).or_insert(0) += m;
    }
    let ch = FormalCharacter {
        algebra: algebra.clone(),
        weights,
    };
    debug_assert_eq!(ch.mass() as u128, dim);
    Ok(ch)
}

/// Pointwise product of characters: the character of the tensor product.
pub fn tensor_character(a: &FormalCharacter, b: &FormalCharacter) -> Result<FormalCharacter, Error> {
    if a.algebra != b.algebra {
        return Err(Error::Structural("tensor over mismatched algebras".into()));
    }
    let mut weights = BTreeMap::new();
    for (u, &mu) in &a.weights {
        for (v, &mv) in &b.weights {
            let w: Vec<i64> = u.iter().zip(v).map(|(x, y)| x + y).collect();
            *weights.entry(w).or_insert(0) += mu * mv;
        }
    }
    Ok(FormalCharacter {
        algebra: a.algebra.clone(),
        weights,
    })
}

/// Character of S²: sums over unordered pairs with repetition.
pub fn sym2_character(ch: &FormalCharacter) -> FormalCharacter {
    pair_character(ch, true)
}

/// Character of Λ²: sums over unordered pairs without repetition.
pub fn wedge2_character(ch: &FormalCharacter) -> FormalCharacter {
    pair_character(ch, false)
}

fn pair_character(ch: &FormalCharacter, with_diagonal: bool) -> FormalCharacter {
    let list = ch.expanded();
    let n = list.len();
    let mut weights = BTreeMap::new();
    for i in 0..n {
        let start = if with_diagonal { i } else { i + 1 };
        for j in start..n {
            let w: Vec<i64> = list[i].iter().zip(list[j]).map(|(x, y)| x + y).collect();
            *weights.entry(w).or_insert(0) += 1;
        }
    }
    FormalCharacter {
        algebra: ch.algebra.clone(),
        weights,
    }
}

/// One irreducible summand with multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    pub highest_weight: Vec<i64>,
    pub multiplicity: u64,
    pub dimension: u128,
}

/// Iterated highest-weight extraction: repeatedly take the dominant weight
/// maximal in the root order (largest (μ, ρ), ties broken lexicographically),
/// subtract its full irreducible character, and record it.
pub fn decompose_character(ch: &FormalCharacter) -> Result<Vec<Component>, Error> {
    let algebra = ch.algebra.clone();
    let rho = vec![1i64; algebra.rank()];
    let mut remaining: BTreeMap<Vec<i64>, i64> = ch
        .weights
        .iter()
        .map(|(w, &m)| (w.clone(), m as i64))
        .collect();
    let mut cache: HashMap<Vec<i64>, FormalCharacter> = HashMap::new();
    let mut out: Vec<Component> = Vec::new();
    loop {
        remaining.retain(|_, m| *m != 0);
        // maximal dominant weight with nonzero multiplicity
        let mut best: Option<(&Vec<i64>, Rational)> = None;
        for w in remaining.keys() {
            if !algebra.is_dominant(w) {
                continue;
            }
            let h = algebra.inner(w, &rho);
            match &best {
                None => best = Some((w, h)),
                Some((bw, bh)) => {
                    if h > *bh || (h == *bh && w > *bw) {
                        best = Some((w, h));
                    }
                }
            }
        }
        let Some((mu, _)) = best else {
            if remaining.is_empty() {
                break;
            }
            return Err(Error::Contract(
                "leftover non-dominant weights: input was not a character".into(),
            ));
        };
        let mu = mu.clone();
        let mult = remaining[&mu];
        if mult < 0 {
            return Err(Error::Contract(
                "negative multiplicity during extraction: input was not a character".into(),
            ));
        }
        let system = match cache.get(&mu) {
            Some(s) => s.clone(),
            None => {
                let s = weight_system(&algebra, &mu)?;
                cache.insert(mu.clone(), s.clone());
                s
            }
        };
        for (w, &m) in &system.weights {
            *remaining.entry(w.clone()).or_insert(0) -= mult * m as i64;
        }
        out.push(Component {
            dimension: algebra.weyl_dim(&mu)?,
            highest_weight: mu,
            multiplicity: mult as u64,
        });
    }
    // deterministic order: by descending dimension, then weight
    out.sort_by(|a, b| {
        b.dimension
            .cmp(&a.dimension)
            .then_with(|| a.highest_weight.cmp(&b.highest_weight))
    });
    Ok(out)
}

/// Pushforward of weight multiplicities along an integral linear functional
/// given by its values on the fundamental weights (flat across factors).
pub fn cocharacter_weights(
    ch: &FormalCharacter,
    functional: &[Rational],
) -> Result<BTreeMap<i64, u64>, Error> {
    if functional.len() != ch.algebra.rank() {
        return Err(Error::Contract(
            "functional length does not match rank".into(),
        ));
    }
    let mut out = BTreeMap::new();
    for (w, &m) in &ch.weights {
        let mut v = Rational::zero();
        for (x, c) in w.iter().zip(functional) {
            v += c * rat_int(*x);
        }
        if !v.denom().eq(&1.into()) {
            return Err(Error::Contract(format!(
                "non-integer cocharacter value {v} on weight {w:?}"
            )));
        }
        let key = i64::try_from(v.numer().clone())
            .map_err(|_| Error::Structural("cocharacter value overflow".into()))?;
        *out.entry(key).or_insert(0) += m;
    }
    Ok(out)
}

/// The standard-grading cocharacter used for A₅ in the reference analysis:
/// values (1,2,3,2,1) on the fundamental weights (z on e₁..e₃, z⁻¹ on
/// e₄..e₆ of the standard basis).
pub fn a5_center_functional() -> Vec<Rational> {
    [1, 2, 3, 2, 1].iter().map(|&x| rat_int(x)).collect()
}

/// Grading functional for the D₅ standard representation analysis:
/// values (2,2,2,1,1) on the fundamental weights.
pub fn d5_grading_functional() -> Vec<Rational> {
    [2, 2, 2, 1, 1].iter().map(|&x| rat_int(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(series: Series, rank: usize) -> AlgebraType {
        AlgebraType::simple(series, rank).unwrap()
    }

    #[test]
    fn clebsch_gordan_sl2() {
        let a1 = a(Series::A, 1);
        let std = weight_system(&a1, &[1]).unwrap();
        let prod = tensor_character(&std, &std).unwrap();
        let comps = decompose_character(&prod).unwrap();
        let summary: Vec<(Vec<i64>, u64)> = comps
            .iter()
            .map(|c| (c.highest_weight.clone(), c.multiplicity))
            .collect();
        assert_eq!(summary, vec![(vec![2], 1), (vec![0], 1)]);
    }

    #[test]
    fn decompose_is_idempotent_on_irreducibles() {
        let c2 = a(Series::C, 2);
        let ch = weight_system(&c2, &[3, 0]).unwrap();
        let comps = decompose_character(&ch).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].highest_weight, vec![3, 0]);
        assert_eq!(comps[0].multiplicity, 1);
        assert!(ch.is_weyl_invariant());
    }

    #[test]
    fn sym_and_wedge_masses() {
        let a5 = a(Series::A, 5);
        let w = weight_system(&a5, &[0, 0, 1, 0, 0]).unwrap();
        let s2 = sym2_character(&w);
        let w2 = wedge2_character(&w);
        assert_eq!(s2.mass(), 210);
        assert_eq!(w2.mass(), 190);
        assert_eq!(s2.mass() + w2.mass(), 400);
    }

    #[test]
    fn reference_sym_wedge_decompositions() {
        // S²(Λ³ of the 6-dim standard) = Γ(1,0,0,0,1) ⊕ Γ(0,0,2,0,0)
        let a5 = a(Series::A, 5);
        let w = weight_system(&a5, &[0, 0, 1, 0, 0]).unwrap();
        let s2 = decompose_character(&sym2_character(&w)).unwrap();
        let s2_weights: Vec<Vec<i64>> =
            s2.iter().map(|c| c.highest_weight.clone()).collect();
        assert_eq!(
            s2_weights,
            vec![vec![0, 0, 2, 0, 0], vec![1, 0, 0, 0, 1]]
        );
        assert_eq!(
            s2.iter().map(|c| c.dimension).collect::<Vec<_>>(),
            vec![175, 35]
        );
        // Λ² = trivial ⊕ Γ(0,1,0,1,0)
        let w2 = decompose_character(&wedge2_character(&w)).unwrap();
        let dims: Vec<u128> = w2.iter().map(|c| c.dimension).collect();
        assert_eq!(dims, vec![189, 1]);
        assert!(w2.iter().any(|c| c.highest_weight == vec![0; 5]));
    }

    #[test]
    fn product_algebra_tensor() {
        // A1 ⊗ A1 std⊗std: 4-dimensional, decomposes as [1]⊗[1] irreducible
        let prod = AlgebraType {
            factors: vec![
                SimpleAlgebra::new(Series::A, 1).unwrap(),
                SimpleAlgebra::new(Series::A, 1).unwrap(),
            ],
        };
        let ch = weight_system(&prod, &[1, 1]).unwrap();
        assert_eq!(ch.mass(), 4);
        let comps = decompose_character(&ch).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].highest_weight, vec![1, 1]);
    }

    #[test]
    fn center_characters_of_reference_reps() {
        let a5 = a(Series::A, 5);
        let f = a5_center_functional();
        let adj = weight_system(&a5, &[1, 0, 0, 0, 1]).unwrap();
        let g = cocharacter_weights(&adj, &f).unwrap();
        assert_eq!(
            g,
            BTreeMap::from([(2, 9), (0, 17), (-2, 9)])
        );
        let w = weight_system(&a5, &[0, 0, 1, 0, 0]).unwrap();
        let gw = cocharacter_weights(&w, &f).unwrap();
        assert_eq!(
            gw,
            BTreeMap::from([(3, 1), (1, 9), (-1, 9), (-3, 1)])
        );
        let big = weight_system(&a5, &[0, 0, 2, 0, 0]).unwrap();
        let gb = cocharacter_weights(&big, &f).unwrap();
        assert_eq!(
            gb,
            BTreeMap::from([(6, 1), (4, 9), (2, 45), (0, 65), (-2, 45), (-4, 9), (-6, 1)])
        );
    }

    #[test]
    fn cap_is_enforced() {
        let a5 = a(Series::A, 5);
        assert!(weight_system(&a5, &[2, 0, 0, 0, 2]).is_err());
    }
}
