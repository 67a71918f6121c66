use super::IoError;
use crate::arith::{Integer, Matrix, QuadExt, Rational, Ring};
use crate::reductions::{
    CornerInstance, ExternalInstance, InternalBlock, InternalInstance, ProblemInstance, Provenance,
    StabilizerInstance,
};
use crate::search::{
    bfs_search, Certificate, GenWord, Outcome, Predicate, SearchError, SearchInstance,
};
use serde::{Deserialize, Serialize};

pub type MatrixRows = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceFile {
    pub presentation: Option<String>,
    pub query: String,
    pub pair: [MatrixRows; 2],
}

/// On-disk form of a [`ProblemInstance`]. Corner instances carry `corner`
/// and `basis_change` instead of `vector` and `form`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: String,
    pub n: usize,
    pub generators: Vec<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_change: Option<MatrixRows>,
    pub provenance: ProvenanceFile,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub word: Option<String>,
    pub matrix: Option<MatrixRows>,
    pub elements_visited: u64,
    pub depth_searched: usize,
    pub outcome: String,
}

pub fn matrix_to_rows<S: Ring>(m: &Matrix<S>) -> MatrixRows {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

pub fn matrix_from_rows<S: Ring>(rows: &MatrixRows) -> Result<Matrix<S>, IoError> {
    let parsed = rows
        .iter()
        .map(|r| scalars(r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed)?)
}

fn strings<S: Ring>(v: &[S]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn scalars<S: Ring>(v: &[String]) -> Result<Vec<S>, IoError> {
    Ok(v.iter()
        .map(|s| S::parse_scalar(s))
        .collect::<Result<Vec<_>, _>>()?)
}

fn provenance_to_file(p: &Provenance) -> ProvenanceFile {
    ProvenanceFile {
        presentation: p.presentation.clone(),
        query: p.query.clone(),
        pair: [matrix_to_rows(&p.pair[0]), matrix_to_rows(&p.pair[1])],
    }
}

fn provenance_from_file(p: &ProvenanceFile) -> Result<Provenance, IoError> {
    Ok(Provenance {
        presentation: p.presentation.clone(),
        query: p.query.clone(),
        pair: [matrix_from_rows(&p.pair[0])?, matrix_from_rows(&p.pair[1])?],
    })
}

fn file<S: Ring>(
    kind: &str,
    n: usize,
    gens: &[Matrix<S>],
    provenance: &Provenance,
) -> InstanceFile {
    InstanceFile {
        kind: kind.to_string(),
        n,
        generators: gens.iter().map(matrix_to_rows).collect(),
        vector: None,
        form: None,
        corner: None,
        basis_change: None,
        provenance: provenance_to_file(provenance),
    }
}

fn corner_file<S: crate::arith::Invertible + crate::arith::Field>(
    c: &CornerInstance<S>,
) -> InstanceFile {
    InstanceFile {
        corner: Some([c.corner().0, c.corner().1]),
        basis_change: Some(matrix_to_rows(c.basis_change())),
        ..file(c.kind(), c.dimension(), c.generators(), c.provenance())
    }
}

pub fn instance_to_file(inst: &ProblemInstance) -> InstanceFile {
    match inst {
        ProblemInstance::External(i) => InstanceFile {
            vector: Some(strings(i.vector())),
            form: Some(strings(i.form())),
            ..file(i.kind(), i.dimension(), i.generators(), i.provenance())
        },
        ProblemInstance::Internal(i) => InstanceFile {
            vector: Some(strings(&i.vector())),
            form: Some(strings(&i.form())),
            ..file(i.kind(), i.dimension(), i.generators(), i.provenance())
        },
        ProblemInstance::Stabilizer(i) => InstanceFile {
            vector: Some(strings(i.vector())),
            ..file(i.kind(), i.vector().len(), i.generators(), i.provenance())
        },
        ProblemInstance::RationalCorner(c) => corner_file(c),
        ProblemInstance::CompositumCorner(c) => corner_file(c),
    }
}

fn required<'a, T>(field: &'a Option<T>, kind: &str, name: &str) -> Result<&'a T, IoError> {
    field
        .as_ref()
        .ok_or_else(|| IoError::Schema(format!("{kind} instance needs {name:?}")))
}

fn forbid<T>(field: &Option<T>, kind: &str, name: &str) -> Result<(), IoError> {
    match field {
        Some(_) => Err(IoError::Schema(format!("{kind} instance has no {name:?}"))),
        None => Ok(()),
    }
}

pub fn instance_from_file(f: &InstanceFile) -> Result<ProblemInstance, IoError> {
    let kind = f.kind.as_str();
    let provenance = provenance_from_file(&f.provenance)?;
    let int_gens = || -> Result<Vec<Matrix<Integer>>, IoError> {
        f.generators.iter().map(matrix_from_rows).collect()
    };
    let inst = match kind {
        "external-hyperplane" => {
            forbid(&f.corner, kind, "corner")?;
            forbid(&f.basis_change, kind, "basis_change")?;
            let vector = scalars::<Integer>(required(&f.vector, kind, "vector")?)?;
            let form = scalars::<Rational>(required(&f.form, kind, "form")?)?;
            ProblemInstance::External(
                ExternalInstance::new(int_gens()?, vector, form, provenance).map_err(schema)?,
            )
        }
        "internal-hyperplane" => {
            forbid(&f.corner, kind, "corner")?;
            forbid(&f.basis_change, kind, "basis_change")?;
            let vector = scalars::<QuadExt>(required(&f.vector, kind, "vector")?)?;
            let form = scalars::<QuadExt>(required(&f.form, kind, "form")?)?;
            if vector.len() != form.len() || vector.len() % 3 != 0 {
                return Err(IoError::Schema(
                    "vector and form must have equal length divisible by 3".into(),
                ));
            }
            let blocks = vector
                .chunks(3)
                .zip(form.chunks(3))
                .map(|(b, f)| InternalBlock {
                    base: b.to_vec(),
                    form: f.to_vec(),
                })
                .collect();
            ProblemInstance::Internal(
                InternalInstance::new(int_gens()?, blocks, provenance).map_err(schema)?,
            )
        }
        "stabilizer" => {
            forbid(&f.form, kind, "form")?;
            forbid(&f.corner, kind, "corner")?;
            forbid(&f.basis_change, kind, "basis_change")?;
            let vector = scalars::<Integer>(required(&f.vector, kind, "vector")?)?;
            ProblemInstance::Stabilizer(
                StabilizerInstance::new(int_gens()?, vector, provenance).map_err(schema)?,
            )
        }
        "corner" => {
            forbid(&f.vector, kind, "vector")?;
            forbid(&f.form, kind, "form")?;
            let [r, c] = *required(&f.corner, kind, "corner")?;
            let t = required(&f.basis_change, kind, "basis_change")?;
            if (r, c) == (1, 1) {
                let gens = f
                    .generators
                    .iter()
                    .map(matrix_from_rows)
                    .collect::<Result<_, _>>()?;
                let corner = CornerInstance::new(gens, (r, c), matrix_from_rows(t)?, provenance)
                    .map_err(schema)?;
                ProblemInstance::RationalCorner(corner)
            } else {
                let gens = f
                    .generators
                    .iter()
                    .map(matrix_from_rows)
                    .collect::<Result<_, _>>()?;
                let corner = CornerInstance::new(gens, (r, c), matrix_from_rows(t)?, provenance)
                    .map_err(schema)?;
                ProblemInstance::CompositumCorner(corner)
            }
        }
        other => return Err(IoError::Schema(format!("unknown instance kind {other:?}"))),
    };
    if inst.dimension() != f.n {
        return Err(IoError::Schema(format!(
            "n = {} but the instance is {}-dimensional",
            f.n,
            inst.dimension()
        )));
    }
    Ok(inst)
}

fn schema(e: crate::reductions::ReductionError) -> IoError {
    IoError::Schema(e.to_string())
}

pub fn instance_to_json(inst: &ProblemInstance) -> String {
    serde_json::to_string_pretty(&instance_to_file(inst)).expect("plain data serializes")
}

pub fn parse_instance(text: &str) -> Result<ProblemInstance, IoError> {
    instance_from_file(&serde_json::from_str(text)?)
}

pub fn certificate_to_file<S: Ring>(c: &Certificate<S>) -> CertificateFile {
    CertificateFile {
        word: c.word.as_ref().map(ToString::to_string),
        matrix: c.matrix.as_ref().map(matrix_to_rows),
        elements_visited: c.elements_visited,
        depth_searched: c.depth_searched,
        outcome: c.outcome.as_str().to_string(),
    }
}

pub fn certificate_from_file<S: Ring>(f: &CertificateFile) -> Result<Certificate<S>, IoError> {
    let word = match &f.word {
        Some(w) => Some(
            w.parse::<GenWord>()
                .map_err(|e| IoError::Schema(e.to_string()))?,
        ),
        None => None,
    };
    let outcome: Outcome = f.outcome.parse().map_err(IoError::Schema)?;
    let matrix = f.matrix.as_ref().map(matrix_from_rows).transpose()?;
    Ok(Certificate {
        word,
        matrix,
        elements_visited: f.elements_visited,
        depth_searched: f.depth_searched,
        outcome,
    })
}

/// Predicate searched when none is given.
pub fn default_predicate(inst: &ProblemInstance) -> Predicate {
    match inst {
        ProblemInstance::External(i) => i.default_predicate(),
        ProblemInstance::Internal(i) => i.default_predicate(),
        ProblemInstance::Stabilizer(i) => i.default_predicate(),
        ProblemInstance::RationalCorner(i) => i.default_predicate(),
        ProblemInstance::CompositumCorner(i) => i.default_predicate(),
    }
}

/// Runs [`bfs_search`] on any instance kind and returns the certificate in
/// file form.
pub fn search_instance(
    inst: &ProblemInstance,
    predicate: Option<Predicate>,
    depth: usize,
    budget: u64,
) -> Result<CertificateFile, SearchError> {
    let p = predicate.unwrap_or_else(|| default_predicate(inst));
    Ok(match inst {
        ProblemInstance::External(i) => certificate_to_file(&bfs_search(i, p, depth, budget)?),
        ProblemInstance::Internal(i) => certificate_to_file(&bfs_search(i, p, depth, budget)?),
        ProblemInstance::Stabilizer(i) => certificate_to_file(&bfs_search(i, p, depth, budget)?),
        ProblemInstance::RationalCorner(i) => {
            certificate_to_file(&bfs_search(i, p, depth, budget)?)
        }
        ProblemInstance::CompositumCorner(i) => {
            certificate_to_file(&bfs_search(i, p, depth, budget)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{FreeWord, TupleWord};
    use crate::presentation::samples::sample;
    use crate::reductions::{build_stabilizer, build_ulcp, build_urcp};
    use crate::schottky::SchottkyPair;
    use crate::search::{bfs_search, Predicate, DEFAULT_BUDGET};

    fn round_trip(inst: ProblemInstance) {
        let json = instance_to_json(&inst);
        let back = parse_instance(&json).unwrap();
        assert_eq!(back, inst);
        assert_eq!(instance_to_json(&back), json);
    }

    #[test]
    fn instances_round_trip() {
        let pair = SchottkyPair::canonical();
        let t2 = |s: &str| TupleWord::parse(2, s).unwrap();
        let ext = build_ulcp(&[t2("(a,a)"), t2("(b,b)")], &t2("(ab,ab)"), &pair).unwrap();
        let p = sample("z2-star-z").unwrap();
        let int = build_urcp(&p, &t2("(a,b,b)"), &pair).unwrap();
        let stab = build_stabilizer(&p, &FreeWord::parse(2, "b").unwrap(), &pair).unwrap();
        let ext = ProblemInstance::External(ext);
        let int = ProblemInstance::Internal(int);
        round_trip(ext.to_corner().unwrap());
        round_trip(int.to_corner().unwrap());
        round_trip(ext);
        round_trip(int);
        round_trip(ProblemInstance::Stabilizer(stab));
    }

    #[test]
    fn file_shape() {
        let pair = SchottkyPair::canonical();
        let p = sample("z2-star-z").unwrap();
        let stab = build_stabilizer(&p, &FreeWord::parse(2, "b").unwrap(), &pair).unwrap();
        let f = instance_to_file(&ProblemInstance::Stabilizer(stab.clone()));
        assert_eq!(f.kind, "stabilizer");
        assert_eq!(f.n, 9);
        assert_eq!(f.provenance.query, "b");
        assert_eq!(f.provenance.pair[0], vec![vec!["3", "2"], vec!["1", "1"]]);
        let cert = bfs_search(&stab, Predicate::NonidentityFixesV, 2, DEFAULT_BUDGET).unwrap();
        let cf = certificate_to_file(&cert);
        assert_eq!(cf.word.as_deref(), Some("g3"));
        assert_eq!(cf.outcome, "found");
        let json = serde_json::to_string(&cf).unwrap();
        let back: Certificate<Integer> =
            certificate_from_file(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_instance("{}").is_err());
        let pair = SchottkyPair::canonical();
        let p = sample("z2-star-z").unwrap();
        let stab = build_stabilizer(&p, &FreeWord::parse(2, "b").unwrap(), &pair).unwrap();
        let mut f = instance_to_file(&ProblemInstance::Stabilizer(stab));
        f.n = 6;
        assert!(instance_from_file(&f).is_err());
        f.n = 9;
        f.kind = "corner".into();
        assert!(instance_from_file(&f).is_err());
        f.kind = "stabilizer".into();
        f.generators[0][0][0] = "x".into();
        assert!(instance_from_file(&f).is_err());
    }

    #[test]
    fn dispatch_matches_direct_search() {
        let pair = SchottkyPair::canonical();
        let z = sample("z2-star-z").unwrap();
        let stab = build_stabilizer(&z, &FreeWord::parse(2, "b").unwrap(), &pair).unwrap();
        let direct = bfs_search(&stab, Predicate::NonidentityFixesV, 3, DEFAULT_BUDGET).unwrap();
        let inst = ProblemInstance::Stabilizer(stab);
        assert_eq!(default_predicate(&inst), Predicate::NonidentityFixesV);
        assert_eq!(
            search_instance(&inst, None, 3, DEFAULT_BUDGET).unwrap(),
            certificate_to_file(&direct)
        );
        assert!(search_instance(&inst, Some(Predicate::CornerZero), 3, DEFAULT_BUDGET).is_err());
    }
}
