//! Dual multiplication ideals 𝔞₁ (nine quadrics) and 𝔞₂ (one cubic) in the
//! coordinate ring of ℙ(R₁*), plus dimension/genus of their zero loci and
//! the Segre comparison variety.

use num_traits::{One, Zero};

use crate::arrangement::ArrangementData;
use crate::ideal::{buchberger, hilbert_data, HilbertData, Ideal};
use crate::poly::{Exponent, MonomialOrder, Polynomial};
use crate::rational::{rat_int, Rational};
use crate::Error;

pub const NZ: usize = 9;

/// Ideal of the k-th characteristic subvariety fiber, in z₁..z₉.
#[derive(Clone, Debug)]
pub struct CharIdeal {
    pub k: usize,
    pub generators: Vec<Polynomial>,
}

fn z_monomial(idx: &[usize]) -> Exponent {
    let mut e = vec![0u32; NZ];
    for &i in idx {
        e[i] += 1;
    }
    Exponent::new(e)
}

/// Build 𝔞₁ (k = 1: nine quadrics via the transposed, off-diagonal-doubled
/// multiplication matrix) or 𝔞₂ (k = 2: the single cubic with multinomial
/// weights 1/3/6).
pub fn characteristic_ideal(data: &ArrangementData, k: usize) -> Result<CharIdeal, Error> {
    match k {
        1 => {
            let c = data.sym_square_matrix()?; // 45×9
            let n = data.basis(1).len();
            let mut gens = vec![Polynomial::zero(NZ); c.ncols()];
            for i in 0..n {
                for j in i..n {
                    let row = ArrangementData::pair_index(i + 1, j + 1, n) - 1;
                    let weight = if i == j { rat_int(1) } else { rat_int(2) };
                    for (l, g) in gens.iter_mut().enumerate() {
                        let coeff = c.get(row, l) * &weight;
                        if !coeff.is_zero() {
                            g.add_term(z_monomial(&[i, j]), coeff);
                        }
                    }
                }
            }
            if gens.iter().any(|g| g.is_zero()) {
                return Err(Error::Contract(
                    "a dual quadric vanished identically".into(),
                ));
            }
            Ok(CharIdeal { k, generators: gens })
        }
        2 => {
            let r1 = data.basis(1).monomials.clone();
            let n = r1.len();
            let mut cubic = Polynomial::zero(NZ);
            for i in 0..n {
                for j in i..n {
                    for l in j..n {
                        let prod = Polynomial::monomial(
                            r1[i].mul(&r1[j]).mul(&r1[l]),
                            Rational::one(),
                        );
                        let coord = data.nf_coordinates(&prod, 3)?[0].clone();
                        if coord.is_zero() {
                            continue;
                        }
                        // multinomial weight of z_i z_j z_l
                        let weight = if i == j && j == l {
                            rat_int(1)
                        } else if i == j || j == l {
                            rat_int(3)
                        } else {
                            rat_int(6)
                        };
                        cubic.add_term(z_monomial(&[i, j, l]), coord * weight);
                    }
                }
            }
            if cubic.is_zero() {
                return Err(Error::Contract("the dual cubic vanished".into()));
            }
            Ok(CharIdeal {
                k,
                generators: vec![cubic],
            })
        }
        _ => Err(Error::Input(format!("characteristic level must be 1 or 2, got {k}"))),
    }
}

/// Dimension and arithmetic genus of Proj of the quotient by the ideal,
/// via Gröbner basis and Hilbert polynomial in the z-ring.
pub fn characteristic_invariants(ci: &CharIdeal) -> Result<HilbertData, Error> {
    hilbert_of(&ci.generators)
}

fn hilbert_of(gens: &[Polynomial]) -> Result<HilbertData, Error> {
    let ideal = Ideal::new(NZ, gens.to_vec())?;
    // Hilbert invariants are independent of the global order; graded revlex
    // keeps the Buchberger run tractable.
    let order = MonomialOrder::graded_revlex(NZ);
    let gb = buchberger(&ideal, &order)?;
    hilbert_data(&gb)
}

/// The 2×2 minors of the generic 3×3 matrix (z_{3i+j+1}): the ideal of the
/// Segre variety ℙ²×ℙ² ⊂ ℙ⁸, the modular-case comparison fiber.
pub fn segre_ideal() -> Vec<Polynomial> {
    let at = |i: usize, j: usize| 3 * i + j; // 0-based entry index
    let mut gens = Vec::new();
    for r0 in 0..3 {
        for r1 in r0 + 1..3 {
            for c0 in 0..3 {
                for c1 in c0 + 1..3 {
                    let mut g = Polynomial::zero(NZ);
                    g.add_term(z_monomial(&[at(r0, c0), at(r1, c1)]), rat_int(1));
                    g.add_term(z_monomial(&[at(r0, c1), at(r1, c0)]), rat_int(-1));
                    gens.push(g);
                }
            }
        }
    }
    gens
}

/// Hilbert data of the Segre comparison variety.
pub fn segre_invariants() -> Result<HilbertData, Error> {
    hilbert_of(&segre_ideal())
}

/// Evaluate a z-ring polynomial at a rational point.
pub fn evaluate(f: &Polynomial, point: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in f.terms() {
        let mut term = c.clone();
        for (i, &x) in e.as_slice().iter().enumerate() {
            for _ in 0..x {
                term *= &point[i];
            }
        }
        acc += term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segre_has_nine_minors_dim_four_genus_zero() {
        let gens = segre_ideal();
        assert_eq!(gens.len(), 9);
        assert!(gens.iter().all(|g| g.is_homogeneous()));
        let h = segre_invariants().unwrap();
        assert_eq!(h.dimension, 4);
        assert_eq!(h.arithmetic_genus, 0.into());
    }

    #[test]
    fn rank_one_points_lie_on_segre() {
        // z = outer product a·bᵀ must kill every 2×2 minor
        let a = [rat_int(2), rat_int(-3), rat_int(5)];
        let b = [rat_int(1), rat_int(7), rat_int(-2)];
        let mut z = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                z.push(&a[i] * &b[j]);
            }
        }
        for g in segre_ideal() {
            assert!(evaluate(&g, &z).is_zero());
        }
    }
}
