//! Symmetric-square Higgs action: the induced derivations S²(μ_{w_k}) on
//! S²(R), the iterated-image dimension chain, and the Hodge-vector
//! factorization search used in the case analysis.

use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::arrangement::{ArrangementData, LEVEL_DIMS};
use crate::matrix::RationalMatrix;
use crate::rational::{format_rational, rat_int, Rational};
use crate::{par_map, Error};

/// Dimension of R^{N₁} = ⊕ R_p^{N₁}.
pub const DIM_R: usize = 20;
/// Dimension of S²(R): 20·21/2.
pub const DIM_S2: usize = 210;

/// Level of the m-th concatenated basis vector v_{m+1} (0-based m).
pub fn level_of(m: usize) -> usize {
    let mut acc = 0;
    for (p, &d) in LEVEL_DIMS.iter().enumerate() {
        acc += d;
        if m < acc {
            return p;
        }
    }
    panic!("basis index {m} out of range");
}

/// 0-based position of the unordered pair {i ≤ j} (0-based) in the row-major
/// enumeration of pairs, n = 20.
pub fn pair_pos(i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < DIM_R);
    ArrangementData::pair_index(i + 1, j + 1, DIM_R) - 1
}

/// The derivation S²(μ_{w_k}) on S²(R) in the basis u_{φ(i,j)} = vᵢvⱼ.
#[derive(Clone, Debug)]
pub struct Sym2Operator {
    pub k: usize,
    pub matrix: RationalMatrix,
}

/// Build S²(μ) from the 20×20 operator C (column convention: C e_j is the
/// coordinate vector of μ(v_j)): u_{ij} ↦ Σ_ℓ C_{ℓi} v_j v_ℓ + Σ_ℓ C_{ℓj} v_i v_ℓ.
pub fn sym2_operator(k: usize, c: &RationalMatrix) -> Result<Sym2Operator, Error> {
    if c.nrows() != DIM_R || c.ncols() != DIM_R {
        return Err(Error::Structural(format!(
            "expected a 20x20 operator, got {}x{}",
            c.nrows(),
            c.ncols()
        )));
    }
    let mut m = RationalMatrix::zeros(DIM_S2, DIM_S2);
    for i in 0..DIM_R {
        for j in i..DIM_R {
            let col = pair_pos(i, j);
            for l in 0..DIM_R {
                // first summand: v_j v_l with weight C_{l i}
                let a = c.get(l, i);
                if !a.is_zero() {
                    let row = pair_pos(j.min(l), j.max(l));
                    let cur = m.get(row, col).clone();
                    m.set(row, col, cur + a);
                }
                // second summand: v_i v_l with weight C_{l j}
                let b = c.get(l, j);
                if !b.is_zero() {
                    let row = pair_pos(i.min(l), i.max(l));
                    let cur = m.get(row, col).clone();
                    m.set(row, col, cur + b);
                }
            }
        }
    }
    Ok(Sym2Operator { k, matrix: m })
}

/// Total level of the pair basis vector u_{φ(i,j)}: level(vᵢ) + level(vⱼ),
/// ranging over 0..=6.
pub fn pair_level(i: usize, j: usize) -> usize {
    level_of(i) + level_of(j)
}

/// Total level of the flat pair index m = φ(i,j) − 1.
pub fn level_of_pair_index(m: usize) -> usize {
    debug_assert!(m < DIM_S2);
    let mut i = 0;
    let mut base = 0;
    // row i (0-based) holds the DIM_R − i pairs {i, i..}
    while base + (DIM_R - i) <= m {
        base += DIM_R - i;
        i += 1;
    }
    pair_level(i, i + (m - base))
}

/// Sizes of the level blocks of S²(R) (levels 0..6), computed from the
/// basis partition.
pub fn block_sizes() -> [usize; 7] {
    let mut out = [0usize; 7];
    for i in 0..DIM_R {
        for j in i..DIM_R {
            out[pair_level(i, j)] += 1;
        }
    }
    out
}

/// All nine S² operators of an arrangement, built concurrently.
pub fn sym2_operators(data: &ArrangementData) -> Result<Vec<Sym2Operator>, Error> {
    let cs = data.mult_operators()?;
    par_map(cs.into_iter().enumerate().collect(), |(idx, c)| {
        sym2_operator(idx + 1, &c)
    })
    .into_iter()
    .collect()
}

/// Result of the iterated-image computation: the dimension chain starting
/// from the level-0 generator v₁², plus a replayable fingerprint of the
/// final image's reduced echelon basis.
#[derive(Clone, Debug)]
pub struct ImageChain {
    pub dims: [usize; 4],
    pub final_fingerprint: String,
}

/// d₀ = 1; d_{m+1} = rank of the span of all nine operator images of the
/// m-th space. Exact rational rank via row reduction.
pub fn iterated_image_dims(ops: &[Sym2Operator]) -> Result<ImageChain, Error> {
    if ops.len() != 9 {
        return Err(Error::Structural(format!(
            "expected 9 operators, got {}",
            ops.len()
        )));
    }
    // current space as rows of a reduced echelon matrix
    let mut span = RationalMatrix::zeros(1, DIM_S2);
    span.set(0, pair_pos(0, 0), rat_int(1)); // v1 v1
    let mut dims = [0usize; 4];
    dims[0] = 1;
    let mut fingerprint = String::new();
    for step in 1..4 {
        let images = par_map(ops.iter().collect(), |op| {
            let mut rows = Vec::new();
            for r in 0..span.nrows() {
                let mut img = vec![Rational::zero(); DIM_S2];
                for c in 0..DIM_S2 {
                    let x = span.get(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    for t in 0..DIM_S2 {
                        let a = op.matrix.get(t, c);
                        if !a.is_zero() {
                            img[t] += a * x;
                        }
                    }
                }
                rows.push(img);
            }
            rows
        });
        let all_rows: Vec<Vec<Rational>> = images.into_iter().flatten().collect();
        let stacked = RationalMatrix::from_rows(all_rows)?;
        let (rref, pivots) = stacked.rref();
        let rank = pivots.len();
        let mut reduced = RationalMatrix::zeros(rank, DIM_S2);
        for r in 0..rank {
            for c in 0..DIM_S2 {
                reduced.set(r, c, rref.get(r, c).clone());
            }
        }
        dims[step] = rank;
        span = reduced;
        if step == 3 {
            fingerprint = span.fingerprint();
        }
    }
    Ok(ImageChain {
        dims,
        final_fingerprint: fingerprint,
    })
}

// ---------------------------------------------------------------------------
// Hodge vectors

/// Graded dimension vector encoded as coefficients of a polynomial in q,
/// constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeVector(pub Vec<u64>);

impl HodgeVector {
    pub fn display(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// All ordered pairs (h₁, h₂) of nonnegative-integer polynomials with
/// constant term 1, both of positive degree, with h₁·h₂ = h.
pub fn hodge_vector_factorizations(h: &HodgeVector) -> Result<Vec<(HodgeVector, HodgeVector)>, Error> {
    let coeffs = &h.0;
    if coeffs.first() != Some(&1) {
        return Err(Error::Contract(
            "factorization search requires constant term 1".into(),
        ));
    }
    let deg = coeffs.len() - 1;
    let maxc = *coeffs.iter().max().unwrap();
    let mut out = Vec::new();
    for d1 in 1..deg {
        // enumerate candidate h1 of degree d1 with coefficients in 0..=maxc
        let mut cand = vec![0u64; d1 + 1];
        cand[0] = 1;
        enumerate(&mut cand, 1, maxc, &mut |h1| {
            if h1[d1] == 0 {
                return;
            }
            if let Some(h2) = exact_divide(coeffs, h1) {
                if h2.len() >= 2 {
                    out.push((HodgeVector(h1.to_vec()), HodgeVector(h2)));
                }
            }
        });
    }
    Ok(out)
}

fn enumerate(cand: &mut Vec<u64>, pos: usize, maxc: u64, f: &mut impl FnMut(&[u64])) {
    if pos == cand.len() {
        f(cand);
        return;
    }
    for v in 0..=maxc {
        cand[pos] = v;
        enumerate(cand, pos + 1, maxc, f);
    }
    cand[pos] = 0;
}

/// h / h1 over the integers, requiring nonnegative coefficients; `None` when
/// the division fails.
fn exact_divide(h: &[u64], h1: &[u64]) -> Option<Vec<u64>> {
    let d1 = h1.len() - 1;
    if h.len() < h1.len() {
        return None;
    }
    let d2 = h.len() - 1 - d1;
    let mut q = vec![0i128; d2 + 1];
    let mut rem: Vec<i128> = h.iter().map(|&x| x as i128).collect();
    for i in 0..=d2 {
        let c = rem[i]; // h1[0] = 1
        if c < 0 {
            return None;
        }
        q[i] = c;
        for (j, &a) in h1.iter().enumerate() {
            rem[i + j] -= c * a as i128;
        }
    }
    if rem.iter().any(|&x| x != 0) {
        return None;
    }
    Some(q.into_iter().map(|x| x as u64).collect())
}

/// Hash of a dimension chain plus fingerprint, for certificate replay.
pub fn chain_digest(chain: &ImageChain) -> String {
    let mut h = Sha256::new();
    h.update(format!("{:?}:{}", chain.dims, chain.final_fingerprint));
    format!("{:x}", h.finalize())
}

#[allow(dead_code)]
fn _unused(r: &Rational) -> String {
    format_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_partition() {
        let b = block_sizes();
        assert_eq!(b.iter().sum::<usize>(), DIM_S2);
        // symmetric square of a 1,9,9,1-graded space
        assert_eq!(b, [1, 9, 54, 82, 54, 9, 1]);
    }

    #[test]
    fn pair_indexing_round_trip() {
        let mut seen = vec![false; DIM_S2];
        for i in 0..DIM_R {
            for j in i..DIM_R {
                let p = pair_pos(i, j);
                assert!(!seen[p]);
                seen[p] = true;
            }
        }
        assert!(seen.iter().all(|&x| x));
        assert_eq!(pair_pos(0, 0), 0);
        assert_eq!(pair_pos(19, 19), 209);
    }

    #[test]
    fn factorization_of_reference_hodge_vector() {
        let h = HodgeVector(vec![1, 9, 9, 1]);
        let fs = hodge_vector_factorizations(&h).unwrap();
        assert!(fs
            .iter()
            .any(|(a, b)| a.0 == vec![1, 1] && b.0 == vec![1, 8, 1]));
        assert!(fs
            .iter()
            .any(|(a, b)| a.0 == vec![1, 8, 1] && b.0 == vec![1, 1]));
        // every factorization multiplies back
        for (a, b) in &fs {
            let mut prod = vec![0u64; a.0.len() + b.0.len() - 1];
            for (i, x) in a.0.iter().enumerate() {
                for (j, y) in b.0.iter().enumerate() {
                    prod[i + j] += x * y;
                }
            }
            assert_eq!(prod, h.0);
        }
    }

    #[test]
    fn degree_one_has_no_nontrivial_factorization() {
        let h = HodgeVector(vec![1, 1]);
        assert!(hodge_vector_factorizations(&h).unwrap().is_empty());
    }
}
