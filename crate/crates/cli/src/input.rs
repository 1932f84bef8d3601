//! Parsing of diagram and π-system arguments.

use std::sync::Arc;

use pisys_core::gcm::{named_diagram, GcmJson};
use pisys_core::{check_pi_system, Gcm, PiSystem, RootSystem};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// Inline text, or the contents of `path` for `@path`.
fn read_arg(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))
}

/// A diagram from a JSON value: a name, a bare matrix, or
/// `{"matrix": [[...]], ...}`.
fn diagram_from_value(v: Value) -> Result<Gcm, CliError> {
    match v {
        Value::String(name) => Ok(named_diagram(&name)?),
        Value::Array(_) => {
            let m: Vec<Vec<i64>> =
                serde_json::from_value(v).map_err(|e| CliError::Usage(format!("matrix: {e}")))?;
            Ok(Gcm::new(m)?)
        }
        Value::Object(_) => {
            let raw: GcmJson = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("diagram: {e}")))?;
            Ok(Gcm::try_from(raw)?)
        }
        _ => Err(CliError::Usage("expected a diagram name, matrix, or object".into())),
    }
}

/// A diagram argument: a catalog name or `@file.json`.
pub fn diagram(arg: &str) -> Result<Gcm, CliError> {
    if arg.starts_with('@') {
        diagram_from_value(parse_json(&read_arg(arg)?)?)
    } else if arg.trim_start().starts_with(['[', '{']) {
        diagram_from_value(parse_json(arg)?)
    } else {
        Ok(named_diagram(arg)?)
    }
}

#[derive(Deserialize)]
struct PiJson {
    ambient: Option<Value>,
    roots: Vec<Vec<i64>>,
}

/// A π-system argument: `{"ambient": <name|gcm>, "roots": [...]}`, or a bare
/// list of roots together with `--ambient`. Either form may come from
/// `@file.json`.
pub fn pi_system(arg: &str, ambient: Option<&str>) -> Result<PiSystem, CliError> {
    let v = parse_json(&read_arg(arg)?)?;
    let (amb, roots) = match v {
        Value::Array(_) => {
            let roots = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("roots: {e}")))?;
            let a = ambient.ok_or_else(|| CliError::Usage("a bare root list needs --ambient".into()))?;
            (diagram(a)?, roots)
        }
        Value::Object(_) => {
            let p: PiJson = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("pi-system: {e}")))?;
            let amb = match (ambient, p.ambient) {
                (Some(a), _) => diagram(a)?,
                (None, Some(v)) => diagram_from_value(v)?,
                (None, None) => return Err(CliError::Usage("pi-system has no ambient".into())),
            };
            (amb, p.roots)
        }
        _ => return Err(CliError::Usage("expected a pi-system object or a list of roots".into())),
    };
    let rs = Arc::new(RootSystem::new(amb)?);
    Ok(check_pi_system(roots, &rs)?)
}
