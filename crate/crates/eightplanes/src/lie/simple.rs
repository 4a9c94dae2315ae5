//! Root data for the simple series A–D, G2, F4, E6, E7: Cartan matrices,
//! positive roots, the weight-lattice Gram form, Weyl dimension formula,
//! duality, and Freudenthal weight systems.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::matrix::RationalMatrix;
use crate::rational::{rat_int, Rational};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
}

impl Series {
    pub fn letter(&self) -> &'static str {
        match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::G2 => "G",
            Series::F4 => "F",
            Series::E6 | Series::E7 => "E",
        }
    }
}

/// One simple factor. Rank conventions avoid duplicate isomorphism classes:
/// A_n (n ≥ 1), B_n (n ≥ 3), C_n (n ≥ 2), D_n (n ≥ 4), plus G2, F4, E6, E7.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleAlgebra {
    pub series: Series,
    pub rank: usize,
}

impl SimpleAlgebra {
    pub fn new(series: Series, rank: usize) -> Result<Self, Error> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 3,
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::G2 => rank == 2,
            Series::F4 => rank == 4,
            Series::E6 => rank == 6,
            Series::E7 => rank == 7,
        };
        if ok {
            Ok(SimpleAlgebra { series, rank })
        } else {
            Err(Error::Input(format!(
                "invalid rank {rank} for series {:?}",
                series
            )))
        }
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    /// Dimension of the smallest nontrivial irreducible.
    pub fn min_irrep_dim(&self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            Series::B => 2 * self.rank + 1,
            Series::C | Series::D => 2 * self.rank,
            Series::G2 => 7,
            Series::F4 => 26,
            Series::E6 => 27,
            Series::E7 => 56,
        }
    }

    /// Symmetrized root data: half square lengths dᵢ = (αᵢ,αᵢ)/2 and the
    /// pairwise products (αᵢ,αⱼ). The Cartan matrix a_{ij} = (αᵢ,αⱼ)/dᵢ
    /// follows; symmetry of the input makes DA consistency automatic.
    fn root_products(&self) -> (Vec<Rational>, Vec<Vec<Rational>>) {
        let n = self.rank;
        let half = Rational::new(1.into(), 2.into());
        let mut d = vec![Rational::one(); n];
        let mut b = vec![vec![Rational::zero(); n]; n];
        let chain_edge = |b: &mut Vec<Vec<Rational>>, i: usize, j: usize, v: Rational| {
            b[i][j] = v.clone();
            b[j][i] = v;
        };
        match self.series {
            Series::A => {
                for i in 0..n - 1 {
                    chain_edge(&mut b, i, i + 1, -Rational::one());
                }
            }
            Series::B => {
                // last root short
                d[n - 1] = half.clone();
                for i in 0..n - 1 {
                    chain_edge(&mut b, i, i + 1, -Rational::one());
                }
                b[n - 2][n - 1] = -Rational::one();
                b[n - 1][n - 2] = -Rational::one();
            }
            Series::C => {
                // last root long
                d[n - 1] = rat_int(2);
                for i in 0..n.saturating_sub(2) {
                    chain_edge(&mut b, i, i + 1, -Rational::one());
                }
                chain_edge(&mut b, n - 2, n - 1, rat_int(-2));
            }
            Series::D => {
                for i in 0..n - 2 {
                    chain_edge(&mut b, i, i + 1, -Rational::one());
                }
                // both tail nodes attach to node n-3 (0-based n-3 = rank-3)
                b[n - 3][n - 1] = -Rational::one();
                b[n - 1][n - 3] = -Rational::one();
                // undo the chain edge (n-2, n-1): D branches instead
                b[n - 2][n - 1] = Rational::zero();
                b[n - 1][n - 2] = Rational::zero();
                chain_edge(&mut b, n - 3, n - 2, -Rational::one());
            }
            Series::G2 => {
                // node 0 short, node 1 long
                d[1] = rat_int(3);
                chain_edge(&mut b, 0, 1, rat_int(-3));
            }
            Series::F4 => {
                // nodes 0,1 long; nodes 2,3 short
                d[2] = half.clone();
                d[3] = half.clone();
                chain_edge(&mut b, 0, 1, -Rational::one());
                chain_edge(&mut b, 1, 2, -Rational::one());
                chain_edge(&mut b, 2, 3, -half.clone());
            }
            Series::E6 => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
                    chain_edge(&mut b, i, j, -Rational::one());
                }
            }
            Series::E7 => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)] {
                    chain_edge(&mut b, i, j, -Rational::one());
                }
            }
        }
        for i in 0..n {
            b[i][i] = &d[i] * rat_int(2);
        }
        (d, b)
    }

    /// Cartan matrix entries a_{ij} = ⟨αⱼ, αᵢ^∨⟩ as integers.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let (d, b) = self.root_products();
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = &b[i][j] / &d[i];
                debug_assert!(v.denom().is_one());
                a[i][j] = i64::try_from(v.numer().clone()).expect("small Cartan entry");
            }
        }
        a
    }

    /// Gram matrix of the fundamental weights: (ωᵢ,ωⱼ) = (A⁻¹)ᵢⱼ dᵢ.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let (d, _) = self.root_products();
        let a = self.cartan();
        let n = self.rank;
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, rat_int(a[i][j]));
            }
        }
        let mut g = vec![vec![Rational::zero(); n]; n];
        for j in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            let col = m.solve(&e).expect("Cartan matrix invertible");
            for i in 0..n {
                g[i][j] = &col[i] * &d[i];
            }
        }
        // symmetry is a structural invariant of the root data
        for i in 0..n {
            for j in 0..i {
                debug_assert_eq!(g[i][j], g[j][i]);
            }
        }
        g
    }

    /// Positive roots in fundamental-weight coordinates, by height-ordered
    /// string closure: β + αᵢ is a root iff p − ⟨β, αᵢ^∨⟩ > 0 with p the
    /// length of the descending αᵢ-string through β.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let a = self.cartan();
        let n = self.rank;
        // α_j has fundamental coordinates (a_{ij})_i
        let simples: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
        let mut roots: Vec<Vec<i64>> = simples.clone();
        let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for (i, alpha) in simples.iter().enumerate() {
                    // p = max k with β − kα_i still a root
                    let mut p = 0i64;
                    let mut probe: Vec<i64> =
                        beta.iter().zip(alpha).map(|(x, y)| x - y).collect();
                    while seen.contains(&probe) {
                        p += 1;
                        probe = probe.iter().zip(alpha).map(|(x, y)| x - y).collect();
                    }
                    if p - beta[i] > 0 {
                        let cand: Vec<i64> =
                            beta.iter().zip(alpha).map(|(x, y)| x + y).collect();
                        if seen.insert(cand.clone()) {
                            roots.push(cand.clone());
                            next.push(cand);
                        }
                    }
                }
            }
            frontier = next;
        }
        roots
    }

    /// Inner product of two weight vectors in fundamental coordinates.
    pub fn inner(gram: &[Vec<Rational>], u: &[i64], v: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &x) in u.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in v.iter().enumerate() {
                if y != 0 {
                    acc += &gram[i][j] * rat_int(x * y);
                }
            }
        }
        acc
    }

    /// Weyl dimension formula: Π_{α>0} (λ+ρ, α) / (ρ, α).
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<u128, Error> {
        if lambda.len() != self.rank {
            return Err(Error::Input(format!(
                "weight length {} does not match rank {}",
                lambda.len(),
                self.rank
            )));
        }
        if lambda.iter().any(|&x| x < 0) {
            return Err(Error::Input("weight is not dominant".into()));
        }
        let gram = self.gram();
        let rho = vec![1i64; self.rank];
        let lam_rho: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let mut acc = Rational::one();
        for alpha in self.positive_roots() {
            let num = Self::inner(&gram, &lam_rho, &alpha);
            let den = Self::inner(&gram, &rho, &alpha);
            acc *= num / den;
        }
        debug_assert!(acc.denom().is_one() && acc.numer().is_positive());
        u128::try_from(acc.numer().clone())
            .map_err(|_| Error::Structural("dimension overflow".into()))
    }

    /// Highest weight of the dual representation, −w₀λ, via the diagram
    /// automorphism: reversal for A_n, spinor swap for D_odd, the (1 6)(3 5)
    /// involution for E6, identity otherwise.
    pub fn dual_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let mut out = lambda.to_vec();
        match self.series {
            Series::A => out.reverse(),
            Series::D if self.rank % 2 == 1 => out.swap(self.rank - 2, self.rank - 1),
            Series::E6 => {
                out.swap(0, 5);
                out.swap(2, 4);
            }
            _ => {}
        }
        out
    }

    /// Full weight multiplicity map of the irreducible with highest weight
    /// λ, by Freudenthal's recursion over a breadth-first sweep of the root
    /// lattice cone below λ.
    pub fn weight_system(&self, lambda: &[i64]) -> Result<HashMap<Vec<i64>, u64>, Error> {
        if lambda.len() != self.rank || lambda.iter().any(|&x| x < 0) {
            return Err(Error::Input("invalid dominant weight".into()));
        }
        let gram = self.gram();
        let positives = self.positive_roots();
        let rho = vec![1i64; self.rank];
        let lam_rho: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let top_norm = Self::inner(&gram, &lam_rho, &lam_rho);
        let a = self.cartan();
        let simples: Vec<Vec<i64>> = (0..self.rank)
            .map(|j| (0..self.rank).map(|i| a[i][j]).collect())
            .collect();

        let mut mults: HashMap<Vec<i64>, u64> = HashMap::new();
        mults.insert(lambda.to_vec(), 1);
        let mut frontier: Vec<Vec<i64>> = vec![lambda.to_vec()];
        while !frontier.is_empty() {
            let mut candidates: std::collections::HashSet<Vec<i64>> =
                std::collections::HashSet::new();
            for w in &frontier {
                for alpha in &simples {
                    let cand: Vec<i64> = w.iter().zip(alpha).map(|(x, y)| x - y).collect();
                    if !mults.contains_key(&cand) {
                        candidates.insert(cand);
                    }
                }
            }
            let mut next = Vec::new();
            for mu in candidates {
                let mu_rho: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
                let denom = &top_norm - Self::inner(&gram, &mu_rho, &mu_rho);
                if denom.is_zero() {
                    continue; // only λ itself sits on the shell
                }
                let mut num = Rational::zero();
                for alpha in &positives {
                    let mut k = 1i64;
                    loop {
                        let shifted: Vec<i64> = mu
                            .iter()
                            .zip(alpha)
                            .map(|(x, y)| x + k * y)
                            .collect();
                        match mults.get(&shifted) {
                            Some(&m) if m > 0 => {
                                num += Self::inner(&gram, &shifted, alpha)
                                    * rat_int(m as i64);
                            }
                            _ => {
                                // outside the computed region: weights above μ
                                // are all known, so a miss means multiplicity 0
                                if !in_cone(&shifted, lambda, &a) {
                                    break;
                                }
                            }
                        }
                        k += 1;
                    }
                }
                let m = (num * rat_int(2)) / denom;
                debug_assert!(m.denom().is_one() && !m.numer().is_negative());
                let m = u64::try_from(m.numer().clone()).expect("small multiplicity");
                if m > 0 {
                    mults.insert(mu.clone(), m);
                    next.push(mu);
                }
            }
            frontier = next;
        }
        Ok(mults)
    }
}

/// Whether λ − μ is a nonnegative combination of simple roots (i.e. μ is in
/// the cone where weights of V(λ) can live).
fn in_cone(mu: &[i64], lambda: &[i64], cartan: &[Vec<i64>]) -> bool {
    // solve λ − μ = Σ c_j α_j for the coefficient vector c; in fundamental
    // coordinates this is the linear system A c = λ − μ
    let n = lambda.len();
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, rat_int(cartan[i][j]));
        }
    }
    let rhs: Vec<Rational> = lambda
        .iter()
        .zip(mu)
        .map(|(a, b)| rat_int(a - b))
        .collect();
    match m.solve(&rhs) {
        None => false,
        Some(c) => c.iter().all(|x| !x.numer().is_negative()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(series: Series, rank: usize) -> SimpleAlgebra {
        SimpleAlgebra::new(series, rank).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        // n(n+1)/2 for A_n, n² for B/C, n(n−1) for D, 6 for G2, 24 for F4,
        // 36 for E6, 63 for E7
        assert_eq!(alg(Series::A, 5).positive_roots().len(), 15);
        assert_eq!(alg(Series::B, 3).positive_roots().len(), 9);
        assert_eq!(alg(Series::C, 2).positive_roots().len(), 4);
        assert_eq!(alg(Series::D, 5).positive_roots().len(), 20);
        assert_eq!(alg(Series::G2, 2).positive_roots().len(), 6);
        assert_eq!(alg(Series::F4, 4).positive_roots().len(), 24);
        assert_eq!(alg(Series::E6, 6).positive_roots().len(), 36);
        assert_eq!(alg(Series::E7, 7).positive_roots().len(), 63);
    }

    #[test]
    fn weyl_dims_classical_anchors() {
        let a5 = alg(Series::A, 5);
        assert_eq!(a5.weyl_dim(&[0, 0, 1, 0, 0]).unwrap(), 20);
        assert_eq!(a5.weyl_dim(&[1, 0, 0, 0, 1]).unwrap(), 35);
        assert_eq!(a5.weyl_dim(&[0, 1, 0, 1, 0]).unwrap(), 189);
        assert_eq!(a5.weyl_dim(&[0, 0, 2, 0, 0]).unwrap(), 175);
        assert_eq!(a5.weyl_dim(&[0; 5]).unwrap(), 1);

        let c2 = alg(Series::C, 2);
        assert_eq!(c2.weyl_dim(&[3, 0]).unwrap(), 20);
        assert_eq!(c2.weyl_dim(&[2, 0]).unwrap(), 10);
        assert_eq!(c2.weyl_dim(&[2, 1]).unwrap(), 35);
        assert_eq!(c2.weyl_dim(&[2, 2]).unwrap(), 81);
        assert_eq!(c2.weyl_dim(&[6, 0]).unwrap(), 84);
        assert_eq!(c2.weyl_dim(&[0, 1]).unwrap(), 5);

        assert_eq!(alg(Series::A, 1).weyl_dim(&[19]).unwrap(), 20);
        assert_eq!(alg(Series::D, 5).weyl_dim(&[1, 0, 0, 0, 0]).unwrap(), 10);
        assert_eq!(alg(Series::D, 10).weyl_dim(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap(), 20);
        assert_eq!(alg(Series::B, 3).weyl_dim(&[1, 0, 0]).unwrap(), 7);
        assert_eq!(alg(Series::B, 3).weyl_dim(&[0, 0, 1]).unwrap(), 8);
    }

    #[test]
    fn weyl_dims_exceptional_anchors() {
        let g2 = alg(Series::G2, 2);
        assert_eq!(g2.weyl_dim(&[1, 0]).unwrap(), 7);
        assert_eq!(g2.weyl_dim(&[0, 1]).unwrap(), 14);
        let f4 = alg(Series::F4, 4);
        assert_eq!(f4.weyl_dim(&[0, 0, 0, 1]).unwrap(), 26);
        assert_eq!(f4.weyl_dim(&[1, 0, 0, 0]).unwrap(), 52);
        let e6 = alg(Series::E6, 6);
        assert_eq!(e6.weyl_dim(&[1, 0, 0, 0, 0, 0]).unwrap(), 27);
        assert_eq!(e6.weyl_dim(&[0, 1, 0, 0, 0, 0]).unwrap(), 78);
        let e7 = alg(Series::E7, 7);
        assert_eq!(e7.weyl_dim(&[0, 0, 0, 0, 0, 0, 1]).unwrap(), 56);
        assert_eq!(e7.weyl_dim(&[1, 0, 0, 0, 0, 0, 0]).unwrap(), 133);
    }

    #[test]
    fn duality_involutions() {
        let a5 = alg(Series::A, 5);
        assert_eq!(a5.dual_weight(&[1, 0, 0, 0, 0]), vec![0, 0, 0, 0, 1]);
        assert_eq!(a5.dual_weight(&[0, 0, 1, 0, 0]), vec![0, 0, 1, 0, 0]);
        let d5 = alg(Series::D, 5);
        assert_eq!(d5.dual_weight(&[0, 0, 0, 1, 0]), vec![0, 0, 0, 0, 1]);
        let d4 = alg(Series::D, 4);
        assert_eq!(d4.dual_weight(&[0, 0, 1, 0]), vec![0, 0, 1, 0]);
        let e6 = alg(Series::E6, 6);
        assert_eq!(e6.dual_weight(&[1, 0, 0, 0, 0, 0]), vec![0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn sl2_string_and_adjoint_octet() {
        let a1 = alg(Series::A, 1);
        let ws = a1.weight_system(&[19]).unwrap();
        assert_eq!(ws.len(), 20);
        for k in 0..20i64 {
            assert_eq!(ws[&vec![19 - 2 * k]], 1);
        }
        // sl3 adjoint: zero weight has multiplicity 2
        let a2 = alg(Series::A, 2);
        let octet = a2.weight_system(&[1, 1]).unwrap();
        assert_eq!(octet.values().sum::<u64>(), 8);
        assert_eq!(octet[&vec![0, 0]], 2);
    }

    #[test]
    fn mass_equals_weyl_dim() {
        for (alg, lam) in [
            (alg(Series::C, 2), vec![3, 0]),
            (alg(Series::A, 5), vec![0, 0, 1, 0, 0]),
            (alg(Series::G2, 2), vec![1, 0]),
            (alg(Series::D, 5), vec![1, 0, 0, 0, 0]),
        ] {
            let dim = alg.weyl_dim(&lam).unwrap() as u64;
            let mass: u64 = alg.weight_system(&lam).unwrap().values().sum();
            assert_eq!(mass, dim, "{} {:?}", alg.name(), lam);
        }
    }
}
