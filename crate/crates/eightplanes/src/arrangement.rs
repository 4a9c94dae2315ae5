//! The eight-plane arrangement: coefficient matrix, Jacobian ideal of the
//! master polynomial F = Σ yᵢfᵢ, the sign-group action, invariant graded
//! bases, and the multiplication matrices realizing the Higgs field.

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::ideal::{monomials_of_degree, BigradedReducer, Ideal};
use crate::matrix::RationalMatrix;
use crate::poly::{var_names, Bidegree, Exponent, MonomialOrder, Polynomial};
use crate::rational::{parse_rational, rat_int, Rational};
use crate::{par_map, Error};

pub const NX: usize = 8;
pub const NY: usize = 4;
pub const NV: usize = NX + NY;

/// Expected invariant-basis cardinalities for levels 0..3.
pub const LEVEL_DIMS: [usize; 4] = [1, 9, 9, 1];

/// Default monomial order of the Jacobian ring: graded lex with precedence
/// x8 > x1 > ... > x7 > y1 > ... > y4. This is the precedence under which
/// the invariant bases at the reference arrangement come out in their
/// canonical published form.
pub fn default_order() -> MonomialOrder {
    MonomialOrder::with_precedence(vec![7, 0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 11])
        .expect("static permutation")
}

// ---------------------------------------------------------------------------
// Arrangement matrix

/// 4×8 coefficient matrix of the arrangement, kept in general position:
/// all 70 maximal minors nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementMatrix {
    a: RationalMatrix,
}

/// Witness of a general-position failure: the four offending column indices
/// (1-based) whose minor vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateWitness(pub [usize; 4]);

impl ArrangementMatrix {
    pub fn new(a: RationalMatrix) -> Result<Self, Error> {
        if a.nrows() != NY || a.ncols() != NX {
            return Err(Error::Input(format!(
                "arrangement matrix must be 4x8, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        match general_position_check(&a) {
            None => Ok(ArrangementMatrix { a }),
            Some(w) => Err(Error::Input(format!(
                "arrangement not in general position: columns {:?} have zero minor",
                w.0
            ))),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.a.get(i, j)
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.a
    }

    /// Whether this is the reference Vandermonde arrangement on λ = 1..8.
    pub fn is_reference(&self) -> bool {
        (0..NY).all(|i| {
            (0..NX).all(|j| {
                self.a.get(i, j) == &rat_int(((j + 1) as i64).pow(i as u32 + 1))
            })
        })
    }
}

/// `None` when all 70 maximal minors are nonzero, otherwise the first
/// offending column quadruple (1-based).
pub fn general_position_check(a: &RationalMatrix) -> Option<DegenerateWitness> {
    let mut quads = Vec::new();
    for c0 in 0..NX {
        for c1 in c0 + 1..NX {
            for c2 in c1 + 1..NX {
                for c3 in c2 + 1..NX {
                    quads.push([c0, c1, c2, c3]);
                }
            }
        }
    }
    let results = par_map(quads, |cols| {
        let mut m = RationalMatrix::zeros(4, 4);
        for (jj, &c) in cols.iter().enumerate() {
            for i in 0..4 {
                m.set(i, jj, a.get(i, c).clone());
            }
        }
        (cols, m.det().expect("square").is_zero())
    });
    results
        .into_iter()
        .find(|(_, z)| *z)
        .map(|(c, _)| DegenerateWitness([c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1]))
}

/// Vandermonde arrangement a_{ij} = λⱼ^i for i = 1..4.
pub fn vandermonde_arrangement(lambda: &[Rational]) -> Result<ArrangementMatrix, Error> {
    if lambda.len() != NX {
        return Err(Error::Input(format!(
            "need 8 parameters, got {}",
            lambda.len()
        )));
    }
    for j in 0..NX {
        if lambda[j].is_zero() {
            return Err(Error::Input(format!("lambda_{} is zero", j + 1)));
        }
        for k in j + 1..NX {
            if lambda[j] == lambda[k] {
                return Err(Error::Input(format!(
                    "repeated parameter lambda_{} = lambda_{}",
                    j + 1,
                    k + 1
                )));
            }
        }
    }
    let mut m = RationalMatrix::zeros(NY, NX);
    for (j, l) in lambda.iter().enumerate() {
        let mut p = Rational::one();
        for i in 0..NY {
            p *= l;
            m.set(i, j, p.clone());
        }
    }
    ArrangementMatrix::new(m)
}

/// Reference arrangement: λ = (1, 2, ..., 8).
pub fn reference_arrangement() -> ArrangementMatrix {
    let lambda: Vec<Rational> = (1..=8).map(rat_int).collect();
    vandermonde_arrangement(&lambda).expect("reference parameters are distinct")
}

// ---------------------------------------------------------------------------
// JSON input

#[derive(Deserialize)]
struct ArrangementFile {
    #[serde(default)]
    vandermonde: Option<Vec<String>>,
    #[serde(default)]
    matrix: Option<Vec<Vec<String>>>,
}

/// Parse the arrangement input format: `{"vandermonde": [8 rationals]}` or
/// `{"matrix": [[8 rationals] x 4]}`, rationals as `p/q` or integer strings.
pub fn arrangement_from_json(text: &str) -> Result<ArrangementMatrix, Error> {
    let file: ArrangementFile =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))?;
    match (file.vandermonde, file.matrix) {
        (Some(v), None) => {
            let lambda: Result<Vec<Rational>, Error> = v
                .iter()
                .map(|s| parse_rational(s).map_err(Error::Input))
                .collect();
            vandermonde_arrangement(&lambda?)
        }
        (None, Some(rows)) => {
            let parsed: Result<Vec<Vec<Rational>>, Error> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| parse_rational(s).map_err(Error::Input))
                        .collect()
                })
                .collect();
            let m = RationalMatrix::from_rows(parsed?)
                .map_err(|e| Error::Input(e.to_string()))?;
            ArrangementMatrix::new(m)
        }
        _ => Err(Error::Input(
            "expected exactly one of \"vandermonde\" or \"matrix\"".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Group action

/// Sign-change element a ∈ (ℤ/2)⁸ acting by xᵢ ↦ (−1)^{aᵢ} xᵢ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupElement(pub u8);

impl GroupElement {
    /// Generating set of N₁: consecutive pair flips plus the wrap-around.
    pub fn n1_generators() -> Vec<GroupElement> {
        let mut b: Vec<GroupElement> = (0..7)
            .map(|i| GroupElement((1 << i) | (1 << (i + 1))))
            .collect();
        b.push(GroupElement(0b1000_0001));
        b
    }

    pub fn in_n1(&self) -> bool {
        self.0.count_ones() % 2 == 0
    }

    /// Sign of the action on a monomial: (−1)^⟨a, x-exponent mod 2⟩.
    pub fn sign(&self, e: &Exponent) -> i8 {
        let mut s = 0u32;
        for i in 0..NX {
            if self.0 >> i & 1 == 1 {
                s += e.get(i);
            }
        }
        if s % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn fixes(&self, e: &Exponent) -> bool {
        self.sign(e) == 1
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            f.nvars(),
            f.terms().map(|(e, c)| {
                let c = if self.sign(e) == 1 { c.clone() } else { -c.clone() };
                (e.clone(), c)
            }),
        )
    }
}

// ---------------------------------------------------------------------------
// Jacobian ideal

/// Generators ∂F/∂xⱼ = 2xⱼ·Σᵢ a_{ij}yᵢ (bidegree (1,1)) and
/// ∂F/∂yᵢ = fᵢ = Σⱼ a_{ij}xⱼ² (bidegree (2,0)).
pub fn jacobian_ideal(a: &ArrangementMatrix) -> Ideal {
    let mut gens = Vec::with_capacity(NV);
    for j in 0..NX {
        let mut g = Polynomial::zero(NV);
        for i in 0..NY {
            let mut e = vec![0u32; NV];
            e[j] = 1;
            e[NX + i] = 1;
            g.add_term(Exponent::new(e), a.entry(i, j) * rat_int(2));
        }
        gens.push(g);
    }
    for i in 0..NY {
        let mut g = Polynomial::zero(NV);
        for j in 0..NX {
            let mut e = vec![0u32; NV];
            e[j] = 2;
            g.add_term(Exponent::new(e), a.entry(i, j).clone());
        }
        gens.push(g);
    }
    Ideal::new(NV, gens)
        .expect("generators nonzero")
        .with_bigrading(NX)
        .expect("generators bihomogeneous")
}

/// Primitive middle Hodge numbers of a smooth double octic-type cover:
/// [C(n,p)² for p = 0..n].
pub fn primitive_hodge_numbers(n: u32) -> Vec<u64> {
    (0..=n)
        .map(|p| {
            let b = binomial(n, p);
            b * b
        })
        .collect()
}

fn binomial(n: u32, k: u32) -> u64 {
    let mut r = 1u64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

// ---------------------------------------------------------------------------
// Invariant graded bases and multiplication matrices

/// Ordered monomial basis of R_p^{N₁}, descending under the ring order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub p: usize,
    pub monomials: Vec<Exponent>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn display(&self) -> Vec<String> {
        let names = var_names(NV);
        self.monomials
            .iter()
            .map(|e| Polynomial::monomial(e.clone(), Rational::one()).display(&names))
            .collect()
    }
}

/// Everything derived from one arrangement: the bigraded reducer for its
/// Jacobian ideal, the four invariant bases, and the multiplication data.
/// Immutable after construction; safe to share across threads.
pub struct ArrangementData {
    matrix: ArrangementMatrix,
    order: MonomialOrder,
    reducer: BigradedReducer,
    bases: Vec<GradedBasis>,
}

impl ArrangementData {
    pub fn new(matrix: ArrangementMatrix) -> Result<Self, Error> {
        Self::with_order(matrix, default_order())
    }

    pub fn with_order(matrix: ArrangementMatrix, order: MonomialOrder) -> Result<Self, Error> {
        if order.nvars() != NV {
            return Err(Error::Structural(
                "arrangement order must cover 12 variables".into(),
            ));
        }
        let ideal = jacobian_ideal(&matrix);
        let reducer = BigradedReducer::new(ideal, &order)?;
        let data = ArrangementData {
            matrix,
            order,
            reducer,
            bases: Vec::new(),
        };
        let bases = par_map((0..4).collect(), |p| data.compute_basis(p));
        let mut data = data;
        for b in bases {
            data.bases.push(b?);
        }
        Ok(data)
    }

    pub fn matrix(&self) -> &ArrangementMatrix {
        &self.matrix
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn reducer(&self) -> &BigradedReducer {
        &self.reducer
    }

    pub fn basis(&self, p: usize) -> &GradedBasis {
        &self.bases[p]
    }

    /// Enumerate bidegree-(2p, p) monomials, keep those fixed by every N₁
    /// generator and equal to their own normal form, check the expected
    /// cardinality.
    fn compute_basis(&self, p: usize) -> Result<GradedBasis, Error> {
        let d = Bidegree::new(2 * p as u32, p as u32);
        let gens = GroupElement::n1_generators();
        let mut monomials = Vec::new();
        for xm in monomials_of_degree(NX, d.deg_x) {
            for ym in monomials_of_degree(NY, d.deg_y) {
                let mut e = xm.clone();
                e.extend_from_slice(&ym);
                let e = Exponent::new(e);
                if !gens.iter().all(|g| g.fixes(&e)) {
                    continue;
                }
                let m = Polynomial::monomial(e.clone(), Rational::one());
                if self.reducer.graded_normal_form(&m, d)? == m {
                    monomials.push(e);
                }
            }
        }
        monomials.sort_by(|a, b| self.order.cmp_unchecked(b, a));
        if monomials.len() != LEVEL_DIMS[p] {
            return Err(Error::Contract(format!(
                "invariant basis at level {p} has {} elements, expected {}",
                monomials.len(),
                LEVEL_DIMS[p]
            )));
        }
        Ok(GradedBasis { p, monomials })
    }

    /// Coordinates of the normal form of `f` (bihomogeneous of level-`p`
    /// bidegree) in the level-p invariant basis. Errors if the normal form
    /// leaves the invariant span.
    pub fn nf_coordinates(&self, f: &Polynomial, p: usize) -> Result<Vec<Rational>, Error> {
        let d = Bidegree::new(2 * p as u32, p as u32);
        let nf = self.reducer.graded_normal_form(f, d)?;
        let basis = &self.bases[p].monomials;
        let mut coords = vec![Rational::zero(); basis.len()];
        for (e, c) in nf.terms() {
            match basis.iter().position(|b| b == e) {
                Some(i) => coords[i] = c.clone(),
                None => {
                    return Err(Error::Contract(format!(
                        "normal form leaves the invariant basis span at level {p}"
                    )))
                }
            }
        }
        Ok(coords)
    }

    /// Matrix of multiplication by the k-th level-1 basis element (1-based),
    /// mapping level p to level p+1; columns indexed by the source basis.
    pub fn level_mult_matrix(&self, k: usize, p: usize) -> Result<RationalMatrix, Error> {
        let wk = &self.bases[1].monomials[k - 1];
        let src = &self.bases[p].monomials;
        let tgt_len = self.bases[p + 1].len();
        let mut m = RationalMatrix::zeros(tgt_len, src.len());
        for (col, v) in src.iter().enumerate() {
            let prod = Polynomial::monomial(v.mul(wk), Rational::one());
            let coords = self.nf_coordinates(&prod, p + 1)?;
            for (row, c) in coords.into_iter().enumerate() {
                m.set(row, col, c);
            }
        }
        Ok(m)
    }

    /// The 45×9 matrix C of S²R₁ → R₂: row φ(i,j) holds the coordinates of
    /// NF(vᵢvⱼ) in the level-2 basis, with φ the row-major pair bijection.
    pub fn sym_square_matrix(&self) -> Result<RationalMatrix, Error> {
        let r1 = &self.bases[1].monomials;
        let n = r1.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i..n {
                pairs.push((i, j));
            }
        }
        let rows = par_map(pairs, |(i, j)| {
            let prod = Polynomial::monomial(r1[i].mul(&r1[j]), Rational::one());
            self.nf_coordinates(&prod, 2)
        });
        let mut m = RationalMatrix::zeros(n * (n + 1) / 2, self.bases[2].len());
        for (row, coords) in rows.into_iter().enumerate() {
            for (col, c) in coords?.into_iter().enumerate() {
                m.set(row, col, c);
            }
        }
        Ok(m)
    }

    /// Row-major pair bijection on {(i,j) : 1 ≤ i ≤ j ≤ n}, 1-based:
    /// φ(i,j) = (i−1)(2n−i)/2 + j.
    pub fn pair_index(i: usize, j: usize, n: usize) -> usize {
        debug_assert!(1 <= i && i <= j && j <= n);
        (i - 1) * (2 * n - i) / 2 + j
    }

    /// 9×9 pairing matrix R₁ × R₂ → R₃ ≅ ℚ: entry (i,j) is the R₃
    /// coordinate of NF(wᵢ · w⁽²⁾ⱼ).
    pub fn pairing_matrix(&self) -> Result<RationalMatrix, Error> {
        let r1 = &self.bases[1].monomials;
        let r2 = &self.bases[2].monomials;
        let mut m = RationalMatrix::zeros(r1.len(), r2.len());
        for (i, a) in r1.iter().enumerate() {
            for (j, b) in r2.iter().enumerate() {
                let prod = Polynomial::monomial(a.mul(b), Rational::one());
                let coords = self.nf_coordinates(&prod, 3)?;
                m.set(i, j, coords[0].clone());
            }
        }
        Ok(m)
    }

    /// Concatenated basis v₁..v₂₀ of R^{N₁} = ⊕ R_p^{N₁}.
    pub fn full_basis(&self) -> Vec<Exponent> {
        self.bases
            .iter()
            .flat_map(|b| b.monomials.iter().cloned())
            .collect()
    }

    /// 20×20 matrix C_k of μ_{w_k} on the concatenated basis; entry (i,j) is
    /// the vᵢ-coordinate of NF(vⱼ · w_k). Acting on coordinate columns, so
    /// C_k e₁ is the coordinate vector of w_k itself.
    pub fn mult_operator(&self, k: usize) -> Result<RationalMatrix, Error> {
        let full = self.full_basis();
        let offsets: Vec<usize> = {
            let mut o = vec![0];
            for b in &self.bases {
                o.push(o.last().unwrap() + b.len());
            }
            o
        };
        let mut m = RationalMatrix::zeros(full.len(), full.len());
        for p in 0..3 {
            let block = self.level_mult_matrix(k, p)?;
            for col in 0..block.ncols() {
                for row in 0..block.nrows() {
                    m.set(
                        offsets[p + 1] + row,
                        offsets[p] + col,
                        block.get(row, col).clone(),
                    );
                }
            }
        }
        // level-3 columns map to zero: multiplication exceeds the top level
        Ok(m)
    }

    /// All nine operators C₁..C₉, computed concurrently.
    pub fn mult_operators(&self) -> Result<Vec<RationalMatrix>, Error> {
        par_map((1..=9).collect(), |k| self.mult_operator(k))
            .into_iter()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vandermonde_reference_and_rejections() {
        let a = reference_arrangement();
        assert!(a.is_reference());
        assert_eq!(a.entry(0, 1), &rat_int(2)); // a_{12} = 2^1
        assert_eq!(a.entry(3, 7), &rat_int(4096)); // a_{48} = 8^4

        let mut l: Vec<Rational> = (1..=8).map(rat_int).collect();
        l[1] = rat_int(1);
        assert!(matches!(
            vandermonde_arrangement(&l),
            Err(Error::Input(msg)) if msg.contains("lambda_1 = lambda_2")
        ));

        let alt: Vec<Rational> = [1, -1, 2, -2, 3, -3, 4, -4]
            .iter()
            .map(|&x| rat_int(x))
            .collect();
        assert!(!vandermonde_arrangement(&alt).unwrap().is_reference());
    }

    #[test]
    fn general_position_witnesses() {
        // two equal columns
        let mut m = reference_arrangement().matrix().clone();
        for i in 0..4 {
            let v = m.get(i, 0).clone();
            m.set(i, 1, v);
        }
        let w = general_position_check(&m).unwrap();
        assert!(w.0.contains(&1) && w.0.contains(&2));
        // zero column
        let mut z = reference_arrangement().matrix().clone();
        for i in 0..4 {
            z.set(i, 3, Rational::zero());
        }
        assert!(general_position_check(&z).is_some());
        // the reference is fine
        assert!(general_position_check(reference_arrangement().matrix()).is_none());
    }

    #[test]
    fn jacobian_generators() {
        let ideal = jacobian_ideal(&reference_arrangement());
        assert_eq!(ideal.generators().len(), 12);
        let names = var_names(NV);
        // dF/dx1 = 2 x1 (y1 + y2 + y3 + y4)
        assert_eq!(
            ideal.generators()[0].display(&names),
            "2*x1*y1 + 2*x1*y2 + 2*x1*y3 + 2*x1*y4"
        );
        // dF/dy1 = sum_j j x_j^2
        let f1 = &ideal.generators()[8];
        let mut e = vec![0u32; NV];
        e[4] = 2;
        assert_eq!(f1.coefficient(&Exponent::new(e)), rat_int(5));
        assert_eq!(f1.num_terms(), 8);
        // bidegrees as stated
        for j in 0..8 {
            assert_eq!(
                ideal.generators()[j].bidegree(NX),
                Some(Bidegree::new(1, 1))
            );
        }
        for i in 8..12 {
            assert_eq!(
                ideal.generators()[i].bidegree(NX),
                Some(Bidegree::new(2, 0))
            );
        }
    }

    #[test]
    fn hodge_numbers() {
        assert_eq!(primitive_hodge_numbers(3), vec![1, 9, 9, 1]);
        assert_eq!(primitive_hodge_numbers(1), vec![1, 1]);
        assert_eq!(primitive_hodge_numbers(4), vec![1, 16, 36, 16, 1]);
    }

    #[test]
    fn group_action_signs() {
        let e = Exponent::new(vec![1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(GroupElement(0b11).fixes(&e)); // flips x1, x2: sign (+)
        assert!(!GroupElement(0b01).fixes(&e));
        assert!(GroupElement(0).in_n1());
        assert!(!GroupElement(0b111).in_n1());
        assert_eq!(GroupElement::n1_generators().len(), 8);
        assert!(GroupElement::n1_generators().iter().all(|g| g.in_n1()));
    }
}
