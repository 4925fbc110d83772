//! JSON payloads: ring and code specs in, reports out.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::eisenstein::EisensteinCodeSpec;
use crate::error::{Error, Result};
use crate::galois::GaloisCodeSpec;
use crate::ring::{ChainRing, Elem, RingParams};

/// A code spec tagged by family, e.g. `{"family":"galois","ring":{..},"N":3,"e":[[0,2],[1,3]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CodeSpec {
    Galois(GaloisCodeSpec),
    Eisenstein(EisensteinCodeSpec),
}

impl CodeSpec {
    pub fn ring(&self) -> &RingParams {
        match self {
            CodeSpec::Galois(s) => &s.ring,
            CodeSpec::Eisenstein(s) => &s.ring,
        }
    }

    pub fn length(&self) -> u64 {
        match self {
            CodeSpec::Galois(s) => s.n,
            CodeSpec::Eisenstein(s) => s.n,
        }
    }
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::ParameterInvalid(format!("malformed JSON: {e}")))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::ParameterInvalid(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

pub fn elem_json(ring: &ChainRing, a: &Elem) -> Vec<Vec<u64>> {
    ring.grid(a)
}

pub fn vector_json(ring: &ChainRing, v: &[Elem]) -> Vec<Vec<Vec<u64>>> {
    v.iter().map(|a| ring.grid(a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_spec_round_trips() {
        let text = r#"{"family":"galois","ring":{"p":2,"n":2,"r":2,"k":2,"t":1,"g_tail":[1,0],"f":[1,1,1]},"N":3,"e":[[0,2],[1,3]]}"#;
        let spec: CodeSpec = parse_json(text).unwrap();
        assert_eq!(spec.length(), 3);
        let again: CodeSpec = parse_json(&to_pretty(&spec)).unwrap();
        assert_eq!(spec, again);
        let eis = r#"{"family":"eisenstein","ring":{"p":2,"n":2,"r":1,"k":2,"t":1,"g_tail":[1,0]},"N":3,"a":[[1,1,0],[0,1,0]]}"#;
        assert!(matches!(parse_json::<CodeSpec>(eis).unwrap(), CodeSpec::Eisenstein(_)));
        assert!(matches!(parse_json::<CodeSpec>("{\"family\":\"x\"}"), Err(Error::ParameterInvalid(_))));
    }
}
