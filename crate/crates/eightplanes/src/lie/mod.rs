//! Representation theory of semisimple Lie algebras over exact arithmetic:
//! root systems, Weyl dimensions, Freudenthal weight systems, character
//! decomposition, duality types, and bounded classification.

pub mod character;
pub mod classify;
pub mod simple;

pub use character::{
    a5_center_functional, cocharacter_weights, d5_grading_functional, decompose_character,
    sym2_character, tensor_character, wedge2_character, weight_system, AlgebraType, Component,
    FormalCharacter, DIM_CAP,
};
pub use classify::{classify_symplectic, duality_type, ClassifiedRep, DualityType};
pub use simple::{Series, SimpleAlgebra};

use crate::Error;

/// Parse `A5:[0,0,1,0,0]` or a product joined with `+`, e.g.
/// `A1:[1]+C2:[2,0]`. Returns the algebra and the flat weight vector.
pub fn parse_weight_spec(text: &str) -> Result<(AlgebraType, Vec<i64>), Error> {
    let mut factors = Vec::new();
    let mut weight = Vec::new();
    for part in text.split('+') {
        let part = part.trim();
        let (name, wtext) = part
            .split_once(':')
            .ok_or_else(|| Error::Input(format!("expected NAME:[w,..] in {part:?}")))?;
        let name = name.trim();
        let (series, rank) = parse_algebra_name(name)?;
        let alg = SimpleAlgebra::new(series, rank)?;
        let wtext = wtext.trim();
        let inner = wtext
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Input(format!("weight must be bracketed in {part:?}")))?;
        let coords: Result<Vec<i64>, Error> = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Input(format!("invalid weight entry {c:?}")))
            })
            .collect();
        let coords = coords?;
        if coords.len() != rank {
            return Err(Error::Input(format!(
                "weight length {} does not match rank of {name}",
                coords.len()
            )));
        }
        if coords.iter().any(|&x| x < 0) {
            return Err(Error::Input(format!("weight not dominant in {part:?}")));
        }
        factors.push(alg);
        weight.extend(coords);
    }
    if factors.is_empty() {
        return Err(Error::Input("empty weight specification".into()));
    }
    Ok((AlgebraType { factors }, weight))
}

fn parse_algebra_name(name: &str) -> Result<(Series, usize), Error> {
    let (letter, digits) = name.split_at(1);
    let rank: usize = digits
        .parse()
        .map_err(|_| Error::Input(format!("invalid rank in {name:?}")))?;
    let series = match (letter, rank) {
        ("A", _) => Series::A,
        ("B", _) => Series::B,
        ("C", _) => Series::C,
        ("D", _) => Series::D,
        ("G", 2) => Series::G2,
        ("F", 4) => Series::F4,
        ("E", 6) => Series::E6,
        ("E", 7) => Series::E7,
        _ => return Err(Error::Input(format!("unknown algebra {name:?}"))),
    };
    Ok((series, rank))
}
