use std::path::Path;

use corkcalc_core::knots::{alexander_from_seifert, torus_2q, twist, LaurentPoly, SeifertMatrix};
use corkcalc_core::IntMatrix;

use crate::ScenarioError;

/// A named knot, resolved to its Alexander polynomial.
#[derive(Clone, Debug)]
pub struct NamedKnot {
    pub label: String,
    pub alexander: LaurentPoly,
}

/// Parse a `--knots` argument: `torus:k1,k2,…`, `twist:k1,k2,…`, or
/// `seifert:FILE` with a JSON integer matrix in the file.
pub fn parse_knots(spec: &str) -> Result<Vec<NamedKnot>, ScenarioError> {
    let (family, rest) = spec
        .split_once(':')
        .ok_or_else(|| ScenarioError::KnotSpec(format!("expected FAMILY:ARGS, got {spec:?}")))?;
    match family {
        "torus" => parse_params(rest)?
            .into_iter()
            .map(|k| {
                Ok(NamedKnot { label: format!("T(2,{})", 2 * k + 1), alexander: torus_2q(k)? })
            })
            .collect(),
        "twist" => parse_params(rest)?
            .into_iter()
            .map(|k| Ok(NamedKnot { label: format!("twist({k})"), alexander: twist(k)? }))
            .collect(),
        "seifert" => {
            let knot = seifert_from_file(Path::new(rest))?;
            Ok(vec![knot])
        }
        other => Err(ScenarioError::KnotSpec(format!(
            "unknown family {other:?} (use torus|twist|seifert)"
        ))),
    }
}

fn parse_params(rest: &str) -> Result<Vec<i64>, ScenarioError> {
    if rest.is_empty() {
        return Err(ScenarioError::KnotSpec("empty parameter list".into()));
    }
    rest.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| ScenarioError::KnotSpec(format!("bad parameter {s:?}")))
        })
        .collect()
}

fn seifert_from_file(path: &Path) -> Result<NamedKnot, ScenarioError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|source| ScenarioError::Io { path: path.display().to_string(), source })?;
    let rows: Vec<Vec<i64>> = serde_json::from_str(&raw)
        .map_err(|e| ScenarioError::KnotSpec(format!("{}: {e}", path.display())))?;
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let matrix = SeifertMatrix::new(IntMatrix::from_i64_rows(&refs))?;
    let stem = path
        .file_stem()
        .map_or_else(|| "seifert".to_string(), |s| s.to_string_lossy().into_owned());
    Ok(NamedKnot { label: format!("seifert({stem})"), alexander: alexander_from_seifert(&matrix) })
}
