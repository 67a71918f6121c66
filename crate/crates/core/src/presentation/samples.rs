//! Presentations shipped with the library. The JSON sources live in
//! `data/presentations` and are compiled in.

use super::{Presentation, PresentationError};
use crate::io::parse_presentation;

const SOURCES: &[(&str, &str)] = &[
    (
        "free-f2",
        include_str!("../../data/presentations/free-f2.json"),
    ),
    (
        "trivial",
        include_str!("../../data/presentations/trivial.json"),
    ),
    ("z2", include_str!("../../data/presentations/z2.json")),
    (
        "z2-star-z",
        include_str!("../../data/presentations/z2-star-z.json"),
    ),
    ("s3", include_str!("../../data/presentations/s3.json")),
    (
        "standin-5x12",
        include_str!("../../data/presentations/standin-5x12.json"),
    ),
];

const ALIASES: &[(&str, &str)] = &[("free-f2-diagonal", "free-f2")];

/// Names of the shipped presentations.
pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// Raw JSON of a shipped presentation.
pub fn source(name: &str) -> Option<&'static str> {
    let name = ALIASES
        .iter()
        .find(|(a, _)| *a == name)
        .map_or(name, |(_, n)| n);
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn sample(name: &str) -> Result<Presentation, PresentationError> {
    let json = source(name).ok_or_else(|| PresentationError::UnknownSample(name.to_string()))?;
    Ok(parse_presentation(json).expect("shipped samples are valid"))
}

/// The five groups with decidable word problems used for cross-checks:
/// free, trivial, free abelian, `Z/2 * Z` and `S_3`.
pub fn decidable() -> Vec<Presentation> {
    ["free-f2", "trivial", "z2", "z2-star-z", "s3"]
        .iter()
        .map(|n| sample(n).expect("shipped"))
        .collect()
}
