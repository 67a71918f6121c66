use super::IoError;
use crate::free::FreeWord;
use crate::presentation::{Permutation, Presentation, WordOracle};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub name: String,
    pub generators: usize,
    pub relators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OracleFile {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faithful: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<u64>>,
}

impl OracleFile {
    fn bare(kind: &str) -> Self {
        OracleFile {
            kind: kind.into(),
            images: None,
            faithful: None,
            orders: None,
        }
    }
}

pub fn presentation_to_file(p: &Presentation) -> PresentationFile {
    let oracle = p.oracle().map(|o| match o {
        WordOracle::FiniteImages { images, faithful } => OracleFile {
            images: Some(images.iter().map(|p| p.images().to_vec()).collect()),
            faithful: Some(*faithful),
            ..OracleFile::bare(o.kind())
        },
        WordOracle::CyclicFreeProduct { orders } => OracleFile {
            orders: Some(orders.clone()),
            ..OracleFile::bare(o.kind())
        },
        _ => OracleFile::bare(o.kind()),
    });
    PresentationFile {
        name: p.name().to_string(),
        generators: p.generators(),
        relators: p.relators().iter().map(FreeWord::to_x_string).collect(),
        oracle,
    }
}

pub fn presentation_from_file(f: &PresentationFile) -> Result<Presentation, IoError> {
    let relators = f
        .relators
        .iter()
        .map(|r| FreeWord::parse(f.generators, r))
        .collect::<Result<Vec<_>, _>>()?;
    let oracle = match &f.oracle {
        None => None,
        Some(o) => Some(match o.kind.as_str() {
            "free" => WordOracle::Free,
            "free-abelian" => WordOracle::FreeAbelian,
            "trivial-group" => WordOracle::Trivial,
            "finite-via-images" => {
                let images = o
                    .images
                    .as_ref()
                    .ok_or_else(|| IoError::Schema("finite-via-images needs images".into()))?
                    .iter()
                    .map(|img| Permutation::new(img.clone()))
                    .collect::<Result<Vec<_>, _>>()?;
                WordOracle::FiniteImages {
                    images,
                    faithful: o.faithful.unwrap_or(false),
                }
            }
            "cyclic-free-product" => WordOracle::CyclicFreeProduct {
                orders: o
                    .orders
                    .clone()
                    .ok_or_else(|| IoError::Schema("cyclic-free-product needs orders".into()))?,
            },
            other => return Err(IoError::Schema(format!("unknown oracle kind {other:?}"))),
        }),
    };
    Ok(Presentation::new(
        f.name.clone(),
        f.generators,
        relators,
        oracle,
    )?)
}

pub fn parse_presentation(json: &str) -> Result<Presentation, IoError> {
    let f: PresentationFile = serde_json::from_str(json)?;
    presentation_from_file(&f)
}

pub fn presentation_to_json(p: &Presentation) -> String {
    serde_json::to_string_pretty(&presentation_to_file(p)).expect("plain data serializes")
}
