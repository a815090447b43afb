//! JSON input files: fuzzy-set definitions over a finite universe, and
//! piecewise polynomial membership functions over a real interval.
//!
//! All numeric fields are weight strings — decimal ("0.8") or rational
//! ("4/5") literals — so the files round-trip exactly.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use cfl_core::{
    define_fuzzy_set, make_universe, parse_rational, pw_from_segments, FuzzySet, PiecewiseFn,
    PolySegment, PwError, Rational, Weight,
};

use crate::{fail, pw_failure, set_failure, Failure, EXIT_FAILED, EXIT_PARSE};

/// `{ "universe": ["x1", …], "sets": { "C1": { "x2": "1", "x5": "0.4" }, … } }`
///
/// Elements a set omits get weight 0.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetsFile {
    universe: Vec<String>,
    sets: BTreeMap<String, BTreeMap<String, String>>,
}

/// `{ "domain": ["0", "10"], "functions": { "C1": [ { "lo": "0", "hi": "5",
/// "coeffs": ["0", "0.2"] }, … ] } }`
///
/// `coeffs` is constant term first; `lo_closed` defaults to true
/// (left-closed segments).
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PwFile {
    domain: [String; 2],
    functions: BTreeMap<String, Vec<SegmentDef>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SegmentDef {
    lo: String,
    hi: String,
    coeffs: Vec<String>,
    #[serde(default = "default_lo_closed")]
    lo_closed: bool,
}

fn default_lo_closed() -> bool {
    true
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| fail(EXIT_FAILED, format!("cannot read {}: {e}", path.display())))
}

fn weight_field(context: &str, text: &str) -> Result<Weight, Failure> {
    Weight::parse(text).map_err(|e| fail(EXIT_PARSE, format!("{context}: {e}")))
}

fn rational_field(context: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| fail(EXIT_PARSE, format!("{context}: {e}")))
}

/// Loads and validates a set-definition file; every set shares the declared
/// universe, in the declared element order.
pub fn load_sets(path: &Path) -> Result<BTreeMap<String, FuzzySet>, Failure> {
    let text = read(path)?;
    let file: SetsFile = serde_json::from_str(&text)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let universe = make_universe(file.universe).map_err(set_failure)?;

    let mut sets = BTreeMap::new();
    for (name, members) in file.sets {
        let mut weights = Vec::with_capacity(members.len());
        for (element, literal) in &members {
            let w = weight_field(&format!("set '{name}', element '{element}'"), literal)?;
            weights.push((element.clone(), w));
        }
        let set = define_fuzzy_set(&universe, &name, weights).map_err(set_failure)?;
        sets.insert(name, set);
    }
    Ok(sets)
}

/// Loads and validates a membership-function file; every function shares the
/// declared domain and is range-checked on construction.
/// Prefixes a segment-construction error with the function it came from.
fn in_function(name: &str, e: PwError) -> Failure {
    let mut failure = pw_failure(e);
    failure.message = format!("function '{name}': {}", failure.message);
    failure
}

pub fn load_pw(path: &Path) -> Result<BTreeMap<String, PiecewiseFn>, Failure> {
    let text = read(path)?;
    let file: PwFile = serde_json::from_str(&text)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let lo = rational_field("domain start", &file.domain[0])?;
    let hi = rational_field("domain end", &file.domain[1])?;

    let mut functions = BTreeMap::new();
    for (name, defs) in file.functions {
        let mut segments = Vec::with_capacity(defs.len());
        for (i, def) in defs.iter().enumerate() {
            let context = format!("function '{name}', segment {i}");
            let seg_lo = rational_field(&format!("{context}, lo"), &def.lo)?;
            let seg_hi = rational_field(&format!("{context}, hi"), &def.hi)?;
            let mut coeffs = Vec::with_capacity(def.coeffs.len());
            for (k, c) in def.coeffs.iter().enumerate() {
                coeffs.push(rational_field(&format!("{context}, coefficient {k}"), c)?);
            }
            segments.push(
                PolySegment::new(seg_lo, seg_hi, def.lo_closed, coeffs)
                    .map_err(|e| in_function(&name, e))?,
            );
        }
        let f = pw_from_segments((lo.clone(), hi.clone()), &name, segments)
            .map_err(|e| in_function(&name, e))?;
        functions.insert(name, f);
    }
    Ok(functions)
}
