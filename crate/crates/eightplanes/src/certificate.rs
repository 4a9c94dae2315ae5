//! Certificate assembly: one deterministic JSON document per run, separating
//! computed values from the versioned expected-value fixture, plus the
//! comparison logic driving the exit code.

use serde::{Deserialize, Serialize};

use crate::arrangement::{primitive_hodge_numbers, ArrangementData, NV};
use crate::charvar::{characteristic_ideal, characteristic_invariants, segre_invariants};
use crate::lie::{
    a5_center_functional, classify_symplectic, cocharacter_weights, decompose_character,
    sym2_character, wedge2_character, weight_system, AlgebraType, Series,
};
use crate::plethysm::{
    block_sizes, hodge_vector_factorizations, iterated_image_dims, sym2_operators, HodgeVector,
};
use crate::poly::var_names;
use crate::rational::format_rational;
use crate::Error;

pub const CERTIFICATE_VERSION: u32 = 1;

/// Expected values at the reference arrangement, shipped as a versioned
/// fixture so "computed" and "expected" stay cleanly separated.
pub const REFERENCE_FIXTURE: &str = include_str!("../fixtures/reference_expected.json");

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Certificate {
    pub version: u32,
    pub arrangement: ArrangementEcho,
    pub order_precedence: Vec<String>,
    pub primitive_hodge_numbers: Vec<u64>,
    pub bases: Vec<BasisEcho>,
    pub multiplication: MultiplicationEcho,
    pub char_variety: Vec<CharVarietyEcho>,
    pub segre_control: InvariantsEcho,
    pub plethysm: PlethysmEcho,
    pub lie: LieEcho,
    pub verdicts: Verdicts,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ArrangementEcho {
    pub matrix: Vec<Vec<String>>,
    pub is_reference: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BasisEcho {
    pub p: usize,
    pub cardinality: usize,
    pub monomials: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MultiplicationEcho {
    pub sym_square_shape: [usize; 2],
    pub sym_square_fingerprint: String,
    pub operators_commute: bool,
    pub pairing_determinant: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CharVarietyEcho {
    pub k: usize,
    pub generators: Vec<String>,
    pub hilbert_polynomial: Vec<String>,
    pub dimension: i64,
    pub arithmetic_genus: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct InvariantsEcho {
    pub dimension: i64,
    pub arithmetic_genus: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PlethysmEcho {
    pub block_sizes: Vec<usize>,
    pub chain: Vec<usize>,
    pub cumulative: usize,
    pub final_image_fingerprint: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct LieEcho {
    pub w_dimension: u128,
    pub sym2_w_components: Vec<String>,
    pub sym2_w_dims: Vec<u128>,
    pub wedge2_w_components: Vec<String>,
    pub wedge2_w_dims: Vec<u128>,
    pub center_adjoint: Vec<(i64, u64)>,
    pub center_w: Vec<(i64, u64)>,
    pub center_sym2_gamma: Vec<(i64, u64)>,
    pub sym2_c2_component_dims: Vec<u128>,
    pub classification_dim20_symplectic: Vec<String>,
    pub hodge_vector: Vec<u64>,
    pub hodge_factorizations: Vec<(Vec<u64>, Vec<u64>)>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct Verdicts {
    pub general_position: bool,
    pub basis_cardinalities: Vec<usize>,
    pub char_dimension_differs_from_segre: bool,
    pub char_genus_differs_from_segre: bool,
    pub chain_exceeds_modular_bound_65: bool,
    pub cumulative_exceeds_84: bool,
    pub chain_within_block_bounds: bool,
}

/// Run the full pipeline over one arrangement.
pub fn build_certificate(data: &ArrangementData) -> Result<Certificate, Error> {
    let names = var_names(NV);
    let arrangement = ArrangementEcho {
        matrix: (0..4)
            .map(|i| {
                (0..8)
                    .map(|j| format_rational(data.matrix().entry(i, j)))
                    .collect()
            })
            .collect(),
        is_reference: data.matrix().is_reference(),
    };
    let order_precedence = data
        .order()
        .precedence()
        .iter()
        .map(|&i| names[i].clone())
        .collect();

    let bases: Vec<BasisEcho> = (0..4)
        .map(|p| BasisEcho {
            p,
            cardinality: data.basis(p).len(),
            monomials: data.basis(p).display(),
        })
        .collect();

    let c45 = data.sym_square_matrix()?;
    let ops = data.mult_operators()?;
    let mut commute = true;
    'outer: for a in 0..ops.len() {
        for b in a + 1..ops.len() {
            let ab = ops[a].mul(&ops[b])?;
            let ba = ops[b].mul(&ops[a])?;
            if ab != ba {
                commute = false;
                break 'outer;
            }
        }
    }
    let pairing = data.pairing_matrix()?;
    let multiplication = MultiplicationEcho {
        sym_square_shape: [c45.nrows(), c45.ncols()],
        sym_square_fingerprint: c45.fingerprint(),
        operators_commute: commute,
        pairing_determinant: format_rational(&pairing.det()?),
    };

    let mut char_variety = Vec::new();
    for k in [1usize, 2] {
        let ci = characteristic_ideal(data, k)?;
        let h = characteristic_invariants(&ci)?;
        let znames = var_names(crate::charvar::NZ);
        char_variety.push(CharVarietyEcho {
            k,
            generators: ci.generators.iter().map(|g| g.display(&znames)).collect(),
            hilbert_polynomial: h.polynomial.iter().map(format_rational).collect(),
            dimension: h.dimension,
            arithmetic_genus: h.arithmetic_genus.to_string(),
        });
    }
    let segre = segre_invariants()?;
    let segre_control = InvariantsEcho {
        dimension: segre.dimension,
        arithmetic_genus: segre.arithmetic_genus.to_string(),
    };

    let s2ops = sym2_operators(data)?;
    let chain = iterated_image_dims(&s2ops)?;
    let blocks = block_sizes();
    let plethysm = PlethysmEcho {
        block_sizes: blocks.to_vec(),
        chain: chain.dims.to_vec(),
        cumulative: chain.dims.iter().sum(),
        final_image_fingerprint: chain.final_fingerprint.clone(),
    };

    let lie = lie_suite()?;

    let verdicts = Verdicts {
        general_position: true, // construction enforces it
        basis_cardinalities: bases.iter().map(|b| b.cardinality).collect(),
        char_dimension_differs_from_segre: char_variety[0].dimension != segre_control.dimension,
        char_genus_differs_from_segre: char_variety[0].arithmetic_genus
            != segre_control.arithmetic_genus,
        chain_exceeds_modular_bound_65: chain.dims[3] > 65,
        cumulative_exceeds_84: chain.dims.iter().sum::<usize>() > 84,
        chain_within_block_bounds: {
            // the m-th image lives inside the level-m block of S²(R)
            chain.dims[1] <= blocks[1] && chain.dims[2] <= blocks[2] && chain.dims[3] <= blocks[3]
        },
    };

    Ok(Certificate {
        version: CERTIFICATE_VERSION,
        arrangement,
        order_precedence,
        primitive_hodge_numbers: primitive_hodge_numbers(3),
        bases,
        multiplication,
        char_variety,
        segre_control,
        plethysm,
        lie,
        verdicts,
    })
}

/// The arrangement-independent representation-theoretic suite.
pub fn lie_suite() -> Result<LieEcho, Error> {
    let a5 = AlgebraType::simple(Series::A, 5)?;
    let w = weight_system(&a5, &[0, 0, 1, 0, 0])?;
    let s2 = decompose_character(&sym2_character(&w))?;
    let w2 = decompose_character(&wedge2_character(&w))?;
    let f = a5_center_functional();
    let adjoint = weight_system(&a5, &[1, 0, 0, 0, 1])?;
    let gamma = weight_system(&a5, &[0, 0, 2, 0, 0])?;
    let c2 = AlgebraType::simple(Series::C, 2)?;
    let c2rep = weight_system(&c2, &[3, 0])?;
    let c2s2 = decompose_character(&sym2_character(&c2rep))?;
    let classification = classify_symplectic(20)?;
    let hv = HodgeVector(vec![1, 9, 9, 1]);
    let factorizations = hodge_vector_factorizations(&hv)?
        .into_iter()
        .map(|(a, b)| (a.0, b.0))
        .collect();

    let disp = |cs: &[crate::lie::Component]| -> (Vec<String>, Vec<u128>) {
        let names = cs
            .iter()
            .map(|c| {
                let ws: Vec<String> = c.highest_weight.iter().map(|x| x.to_string()).collect();
                format!("[{}]", ws.join(","))
            })
            .collect();
        let dims = cs.iter().map(|c| c.dimension).collect();
        (names, dims)
    };
    let (s2_names, s2_dims) = disp(&s2);
    let (w2_names, w2_dims) = disp(&w2);
    let (_, c2_dims) = disp(&c2s2);

    Ok(LieEcho {
        w_dimension: a5.weyl_dim(&[0, 0, 1, 0, 0])?,
        sym2_w_components: s2_names,
        sym2_w_dims: s2_dims,
        wedge2_w_components: w2_names,
        wedge2_w_dims: w2_dims,
        center_adjoint: cocharacter_weights(&adjoint, &f)?.into_iter().collect(),
        center_w: cocharacter_weights(&w, &f)?.into_iter().collect(),
        center_sym2_gamma: cocharacter_weights(&gamma, &f)?.into_iter().collect(),
        sym2_c2_component_dims: {
            let mut d = c2_dims;
            d.sort();
            d
        },
        classification_dim20_symplectic: classification.iter().map(|c| c.display()).collect(),
        hodge_vector: hv.0,
        hodge_factorizations: factorizations,
    })
}

/// Deterministic serialization: struct field order, canonical rationals.
pub fn to_json(cert: &Certificate) -> String {
    serde_json::to_string_pretty(cert).expect("serializable")
}

// ---------------------------------------------------------------------------
// Reference comparison

#[derive(Deserialize)]
struct ReferenceExpected {
    basis_tables: Vec<Vec<String>>,
    characteristic_dimension: i64,
    characteristic_genus: String,
    segre_dimension: i64,
    segre_genus: String,
    chain: Vec<usize>,
    sym2_w_components: Vec<String>,
    wedge2_w_components: Vec<String>,
    center_adjoint: Vec<(i64, u64)>,
    center_sym2_gamma: Vec<(i64, u64)>,
    sym2_c2_component_dims: Vec<u128>,
    classification_dim20_symplectic: Vec<String>,
}

/// One named check against the fixture.
#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub computed: String,
}

fn check<T: PartialEq + std::fmt::Debug>(name: &str, expected: &T, computed: &T) -> Check {
    Check {
        name: name.into(),
        pass: expected == computed,
        expected: format!("{expected:?}"),
        computed: format!("{computed:?}"),
    }
}

/// Compare a certificate computed at the reference arrangement against the
/// expected-value fixture. Arrangement-independent checks always included.
pub fn reference_checks(cert: &Certificate) -> Result<Vec<Check>, Error> {
    let exp: ReferenceExpected = serde_json::from_str(REFERENCE_FIXTURE)
        .map_err(|e| Error::Structural(format!("fixture is invalid: {e}")))?;
    let mut out = vec![
        check(
            "basis cardinalities",
            &vec![1usize, 9, 9, 1],
            &cert.verdicts.basis_cardinalities,
        ),
        check("operators commute", &true, &cert.multiplication.operators_commute),
        check(
            "chain within block bounds",
            &true,
            &cert.verdicts.chain_within_block_bounds,
        ),
        check(
            "sym2 components of W",
            &exp.sym2_w_components,
            &cert.lie.sym2_w_components,
        ),
        check(
            "wedge2 components of W",
            &exp.wedge2_w_components,
            &cert.lie.wedge2_w_components,
        ),
        check("center on adjoint", &exp.center_adjoint, &cert.lie.center_adjoint),
        check(
            "center on sym2 Gamma",
            &exp.center_sym2_gamma,
            &cert.lie.center_sym2_gamma,
        ),
        check(
            "sym2 C2 component dims",
            &exp.sym2_c2_component_dims,
            &cert.lie.sym2_c2_component_dims,
        ),
        check(
            "classification (dim 20, symplectic)",
            &exp.classification_dim20_symplectic,
            &cert.lie.classification_dim20_symplectic,
        ),
    ];
    if cert.arrangement.is_reference {
        let tables: Vec<Vec<String>> = cert.bases.iter().map(|b| b.monomials.clone()).collect();
        out.push(check("basis tables", &exp.basis_tables, &tables));
        out.push(check(
            "characteristic dimension",
            &exp.characteristic_dimension,
            &cert.char_variety[0].dimension,
        ));
        out.push(check(
            "characteristic genus",
            &exp.characteristic_genus,
            &cert.char_variety[0].arithmetic_genus,
        ));
        out.push(check("chain", &exp.chain, &cert.plethysm.chain));
        out.push(check(
            "pairing nondegenerate",
            &true,
            &(cert.multiplication.pairing_determinant != "0"),
        ));
    }
    out.push(check(
        "segre dimension",
        &exp.segre_dimension,
        &cert.segre_control.dimension,
    ));
    out.push(check(
        "segre genus",
        &exp.segre_genus,
        &cert.segre_control.arithmetic_genus,
    ));
    Ok(out)
}
