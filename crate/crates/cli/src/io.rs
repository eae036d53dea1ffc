//! Text and JSON encodings used on the command line.
//!
//! Permutations, partitions and compositions are JSON integer arrays
//! (`[4,3,2,1,6,5,7]`), tableaux are arrays of rows (`[[1,5,7],[2,6],[3],[4]]`)
//! and polynomials are coefficient arrays, lowest degree first. On the
//! command line a comma-separated list is accepted wherever an array is.

use rs_cells_core::{Partition, Permutation, StandardTableau};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.starts_with('[') {
        return Ok(serde_json::from_str(s)?);
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Config(format!("not an integer: {t:?}")))
        })
        .collect()
}

/// `4,3,2,1` or `[4,3,2,1]`.
pub fn parse_permutation(s: &str) -> Result<Permutation> {
    Ok(Permutation::from_values(&parse_list(s)?)?)
}

/// `3,2,1,1` or `[3,2,1,1]`.
pub fn parse_partition(s: &str) -> Result<Partition> {
    Ok(Partition::new(parse_list(s)?)?)
}

pub fn parse_tableau(s: &str) -> Result<StandardTableau> {
    Ok(serde_json::from_str(s.trim())?)
}

/// The `{"P": ..., "Q": ...}` document exchanged by `rs` and `unrs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPair {
    #[serde(rename = "P")]
    pub p: StandardTableau,
    #[serde(rename = "Q")]
    pub q: StandardTableau,
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_inputs() {
        let w = parse_permutation("4,3,2,1,6,5,7").unwrap();
        assert_eq!(w, parse_permutation("[4, 3, 2, 1, 6, 5, 7]").unwrap());
        assert_eq!(to_json(&w).unwrap(), "[4,3,2,1,6,5,7]");
        assert_eq!(parse_permutation("").unwrap().n(), 0);
        let err = parse_permutation("1,1,2").unwrap_err();
        assert!(err.to_string().contains("not a permutation"), "{err}");
        assert!(parse_permutation("1,x").is_err());
        assert!(parse_permutation("[1,2").is_err());
    }

    #[test]
    fn tableau_json() {
        let t = parse_tableau("[[1,5,7],[2,6],[3],[4]]").unwrap();
        assert_eq!(to_json(&t).unwrap(), "[[1,5,7],[2,6],[3],[4]]");
        assert!(parse_tableau("[[1,2],[4]]").is_err());
        let pair: TableauPair = serde_json::from_str(r#"{"P":[[1,3],[2]],"Q":[[1,2],[3]]}"#).unwrap();
        assert_eq!(to_json(&pair).unwrap(), r#"{"P":[[1,3],[2]],"Q":[[1,2],[3]]}"#);
    }

    #[test]
    fn partition_input() {
        assert_eq!(parse_partition("3,2,1,1").unwrap().parts(), &[3, 2, 1, 1]);
        assert!(parse_partition("1,2").is_err());
    }
}
