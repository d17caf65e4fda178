//! Algebra files and newline-delimited JSON reports.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteAlgebra, OperationTable};
use crate::error::{Error, Result};
use crate::fixtures::BUNDLED;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    size: usize,
    #[serde(default)]
    operations: Vec<OperationTable>,
}

/// Parses the JSON algebra format; `origin` names the source in messages.
pub fn parse_algebra_str(src: &str, origin: &str) -> Result<FiniteAlgebra> {
    let raw: AlgebraFile = serde_json::from_str(src).map_err(|e| {
        Error::Parse(format!("{origin}: line {} column {}: {e}", e.line(), e.column()))
    })?;
    FiniteAlgebra::new(raw.name, raw.size, raw.operations).map_err(|e| match e {
        Error::Validation(m) => Error::Validation(format!("{origin}: {m}")),
        other => other,
    })
}

pub fn parse_algebra(path: &Path) -> Result<FiniteAlgebra> {
    let src = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra_str(&src, &path.display().to_string())
}

/// An algebra input: a file, a directory of `*.alg` files, or the name of a
/// bundled fixture such as `z2s2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Bundled(&'static str),
}

impl Source {
    pub fn label(&self) -> String {
        match self {
            Source::File(p) => p.display().to_string(),
            Source::Bundled(name) => (*name).to_string(),
        }
    }

    pub fn load(&self) -> Result<FiniteAlgebra> {
        match self {
            Source::File(p) => parse_algebra(p),
            Source::Bundled(name) => {
                let text = BUNDLED
                    .iter()
                    .find(|(f, _)| f == name)
                    .map(|(_, t)| *t)
                    .ok_or_else(|| Error::Io(format!("no bundled fixture {name}")))?;
                parse_algebra_str(text, name)
            }
        }
    }
}

/// Expands an input argument into algebra sources, sorted by path.
pub fn resolve_input(input: &str, fixture_dir: Option<&Path>) -> Result<Vec<Source>> {
    let mut candidates = vec![PathBuf::from(input)];
    if let Some(dir) = fixture_dir {
        candidates.push(dir.join(input));
        candidates.push(dir.join(format!("{input}.alg")));
    }
    for c in &candidates {
        if c.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(c)
                .map_err(|e| Error::Io(format!("{}: {e}", c.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "alg"))
                .collect();
            files.sort();
            return Ok(files.into_iter().map(Source::File).collect());
        }
        if c.is_file() {
            return Ok(vec![Source::File(c.clone())]);
        }
    }
    let file = if input.ends_with(".alg") { input.to_string() } else { format!("{input}.alg") };
    BUNDLED
        .iter()
        .find(|(f, _)| *f == file)
        .map(|(f, _)| vec![Source::Bundled(f)])
        .ok_or_else(|| Error::Io(format!("{input}: no such file, directory or bundled fixture")))
}

/// One machine-readable output record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub seed: u64,
    pub status: Status,
    pub data: serde_json::Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Fails,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fails => 2,
            Status::Error => 1,
        }
    }
}

pub fn emit_ndjson(reports: &[Report]) -> Result<String> {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?);
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_ndjson(src: &str) -> Result<Vec<Report>> {
    src.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse(format!("record {}: {e}", i + 1))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bundled_fixtures_parse() {
        assert_eq!(Source::Bundled("z2s2.alg").load().unwrap(), fixtures::z2s2());
        assert_eq!(resolve_input("z4", None).unwrap(), vec![Source::Bundled("z4.alg")]);
    }

    #[test]
    fn empty_operations_are_valid() {
        let a = parse_algebra_str(r#"{"name": "bare", "size": 3, "operations": []}"#, "t").unwrap();
        assert_eq!(a.op_count(), 0);
    }

    #[test]
    fn errors_are_classified() {
        let e = parse_algebra_str("{\"name\": \"x\",\n \"size\": }", "t").unwrap_err();
        assert!(matches!(e, Error::Parse(m) if m.contains("line 2")));
        let e = parse_algebra_str(r#"{"name":"x","size":2,"operations":[{"name":"f","arity":1,"table":[0,2]}]}"#, "t");
        assert!(matches!(e, Err(Error::Validation(_))));
        let e = parse_algebra_str(r#"{"name":"x","size":2,"operations":[{"name":"f","arity":1,"table":[0]}]}"#, "t");
        assert!(matches!(e, Err(Error::Validation(_))));
    }

    #[test]
    fn reports_round_trip() {
        let r = vec![Report {
            command: "con".into(),
            input: "z2s2.alg".into(),
            seed: 7,
            status: Status::Ok,
            data: serde_json::json!({"congruences": ["0|1|2|3", "0,1,2,3"]}),
        }];
        assert_eq!(parse_ndjson(&emit_ndjson(&r).unwrap()).unwrap(), r);
    }
}
