//! JSON reading and writing of complexes, coordinates and stress bases.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::catalog::NamedSphere;
use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::stress::{Embedding, EmbeddingKind, StressBasis};

/// On-disk form of a complex. Rationals are `"p/q"` or `"p"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub name: String,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<BTreeMap<String, Vec<String>>>,
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

pub fn format_rational(x: &BigRational) -> String {
    x.to_string()
}

/// Parse a complex file. Coordinates, when present, become a natural
/// embedding.
pub fn load(json: &str) -> Result<NamedSphere> {
    let file: ComplexFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let complex = SimplicialComplex::from_facets(file.facets)?;
    let natural_coords = match file.coordinates {
        None => None,
        Some(map) => {
            let mut coords = BTreeMap::new();
            for (k, v) in map {
                let vertex: Vertex = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex key {k:?}")))?;
                let p = v
                    .iter()
                    .map(|x| parse_rational(x))
                    .collect::<Result<Vec<_>>>()?;
                coords.insert(vertex, p);
            }
            Some(Embedding::natural(&complex, coords)?)
        }
    };
    Ok(NamedSphere {
        name: file.name,
        complex,
        natural_coords,
        expected: None,
    })
}

pub fn to_file(s: &NamedSphere) -> ComplexFile {
    ComplexFile {
        name: s.name.clone(),
        facets: s.complex.facets(),
        coordinates: s.natural_coords.as_ref().map(|e| {
            e.coords
                .iter()
                .map(|(v, p)| (v.to_string(), p.iter().map(format_rational).collect()))
                .collect()
        }),
    }
}

pub fn to_json(s: &NamedSphere) -> String {
    serde_json::to_string_pretty(&to_file(s)).expect("complex files always serialize")
}

/// A stress basis keyed by dense exponent vectors over `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StressBasisFile {
    pub degree: usize,
    pub embedding: EmbeddingKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub vertices: Vec<Vertex>,
    pub basis: Vec<BTreeMap<String, String>>,
}

pub fn stress_basis_file(b: &StressBasis) -> StressBasisFile {
    let vertices = b.complex.vertices().to_vec();
    let basis = b
        .basis
        .iter()
        .map(|w| {
            w.terms
                .iter()
                .map(|(m, c)| {
                    let key: Vec<String> =
                        m.dense(&vertices).iter().map(|e| e.to_string()).collect();
                    (key.join(","), format_rational(c))
                })
                .collect()
        })
        .collect();
    StressBasisFile {
        degree: b.degree,
        embedding: b.embedding.kind,
        seed: b.embedding.seed,
        vertices,
        basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::stress;

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("3/6").unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            parse_rational("-4").unwrap(),
            BigRational::from_integer((-4).into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(
            format_rational(&BigRational::new(2.into(), (-4).into())),
            "-1/2"
        );
    }

    #[test]
    fn round_trip() {
        let s = catalog::counterexample_polytope(1).unwrap();
        let back = load(&to_json(&s)).unwrap();
        assert_eq!(back.name, s.name);
        assert_eq!(back.complex, s.complex);
        assert_eq!(back.natural_coords, s.natural_coords);
        let plain = load(r#"{"name": "tri", "facets": [[1,2],[2,3],[1,3]]}"#).unwrap();
        assert_eq!(plain.complex, SimplicialComplex::cycle(3).unwrap());
        assert!(plain.natural_coords.is_none());
    }

    #[test]
    fn malformed() {
        assert!(matches!(load("{"), Err(Error::Parse(_))));
        assert!(matches!(
            load(r#"{"name": "x", "facets": [[1,1]]}"#),
            Err(Error::DuplicateVertex { .. })
        ));
        assert!(load(r#"{"name": "x", "facets": [[1,2]], "coordinates": {"1": ["1"]}}"#).is_err());
        assert!(matches!(
            load(r#"{"name": "x", "facets": [[1,2]], "extra": 1}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn basis_export() {
        let s = catalog::cycle(4).unwrap();
        let e = s.natural_coords.as_ref().unwrap();
        let b = stress::stress_space(&s.complex, e, 1).unwrap();
        let f = stress_basis_file(&b);
        assert_eq!(f.basis.len(), 1);
        assert!(f.basis[0].keys().all(|k| k.split(',').count() == 4));
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"natural\""));
    }
}
