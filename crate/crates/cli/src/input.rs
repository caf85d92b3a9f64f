use std::fs;
use std::path::Path;

use recur_artin::LabeledGraph;
use recur_complex::{validate_complex, Complex, RawComplex, Violation};
use recur_diagrams::{Alphabet, PlanarDiagram, Presentation, RawDiagram, Word};

use crate::CliError;

pub struct Loaded<T> {
    pub value: T,
    pub bytes: Vec<u8>,
}

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })
}

pub fn write(path: &Path, text: &str) -> Result<String, CliError> {
    fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    Ok(path.display().to_string())
}

fn json_error(path: &Path, e: serde_json::Error) -> CliError {
    CliError::Malformed { path: path.display().to_string(), line: e.line(), column: e.column(), msg: e.to_string() }
}

pub fn raw_complex(path: &Path) -> Result<Loaded<RawComplex>, CliError> {
    let text = read(path)?;
    let value = serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
    Ok(Loaded { value, bytes: text.into_bytes() })
}

/// Parsed and validated; violations are input errors here.
pub fn complex(path: &Path) -> Result<Loaded<Complex>, CliError> {
    let raw = raw_complex(path)?;
    let value = checked(path, &raw.value)?;
    Ok(Loaded { value, bytes: raw.bytes })
}

pub fn checked(path: &Path, raw: &RawComplex) -> Result<Complex, CliError> {
    validate_complex(raw).map_err(|vs| CliError::Invalid { path: path.display().to_string(), violations: describe(&vs) })
}

pub fn describe(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

pub fn max_bits(c: &Complex) -> u64 {
    let edges = c.edges.iter().map(|e| e.length.max_bits());
    let scales = c.faces.iter().filter_map(|f| f.shape.as_ref()).map(|s| s.scale.max_bits());
    edges.chain(scales).max().unwrap_or(0)
}

pub fn diagram(path: &Path) -> Result<Loaded<PlanarDiagram>, CliError> {
    let text = read(path)?;
    let raw: RawDiagram = serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
    let value = PlanarDiagram::from_raw(&raw).map_err(|e| CliError::At { path: path.display().to_string(), msg: e.to_string() })?;
    Ok(Loaded { value, bytes: text.into_bytes() })
}

/// A presentation given inline (`<a, b | abAB>`) or as a file path.
pub fn presentation(arg: &str) -> Result<Loaded<Presentation>, CliError> {
    let t = arg.trim_start();
    let (text, origin) = if t.starts_with('<') { (arg.to_string(), "presentation".to_string()) } else { (read(Path::new(arg))?, arg.to_string()) };
    let value = Presentation::parse(&text).map_err(|e| CliError::At { path: origin, msg: e.to_string() })?;
    Ok(Loaded { value, bytes: text.into_bytes() })
}

pub fn graph(path: &Path) -> Result<Loaded<LabeledGraph>, CliError> {
    let text = read(path)?;
    let value = LabeledGraph::parse(&text).map_err(|e| CliError::At { path: path.display().to_string(), msg: e.to_string() })?;
    Ok(Loaded { value, bytes: text.into_bytes() })
}

pub fn word(alphabet: &Alphabet, s: &str) -> Result<Word, CliError> {
    alphabet.parse(s).map_err(|e| CliError::At { path: "word".into(), msg: e.to_string() })
}
