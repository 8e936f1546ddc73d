//! Browser bindings: plot, certify and analyze a signomial typed into a
//! text box. Every entry point takes polynomial text and returns a string
//! (SVG or JSON), or an error message.

use wasm_bindgen::prelude::*;

use desc_regions::analysis;
use desc_regions::certify::CertifyConfig;
use desc_regions::oracle::GridSpec;
use desc_regions::polytope::DEFAULT_FACET_BUDGET;
use desc_regions::rational;
use desc_regions::svg::{self, Overlay};
use desc_regions::trace::TraceDocument;
use desc_regions::{fixtures, parse_signomial, Signomial};

/// Largest grid the page will sample, per axis.
pub const MAX_RESOLUTION: usize = 600;

fn parse(text: &str) -> Result<Signomial, String> {
    parse_signomial(text).map_err(|e| e.to_string())
}

fn overlays(spec: &str) -> Result<Vec<Overlay>, String> {
    spec.split([';', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|line| {
            let mut nums = line
                .split(',')
                .map(|t| rational::parse(t.trim()).ok_or_else(|| format!("not a rational number: {t:?}")))
                .collect::<Result<Vec<_>, _>>()?;
            if nums.len() != 3 {
                return Err(format!("line {line:?} must be \"v1,v2,a\""));
            }
            let offset = nums.pop().expect("three entries");
            Ok(Overlay { normal: nums, offset })
        })
        .collect()
}

/// SVG of the negative region on [-half_width, half_width]² in log
/// coordinates next to the signed support. `lines` holds "v1,v2,a" entries
/// separated by ';' or newlines.
#[wasm_bindgen]
pub fn plot(text: &str, half_width: f64, resolution: usize, lines: &str) -> Result<String, String> {
    let f = parse(text)?;
    if !(half_width > 0.0) || !half_width.is_finite() {
        return Err("half width must be a positive number".into());
    }
    let grid = GridSpec::cube(f.dimension(), -half_width, half_width, resolution.clamp(2, MAX_RESOLUTION));
    svg::render(&f, &grid, &overlays(lines)?).map_err(|e| e.to_string())
}

/// Certificate trace as pretty JSON.
#[wasm_bindgen]
pub fn certify(text: &str, enable_box: bool, enable_simplex_search: bool) -> Result<String, String> {
    let f = parse(text)?;
    if f.is_empty() {
        return Err("polynomial has empty support".into());
    }
    let config = CertifyConfig {
        enable_box,
        enable_simplex_search,
        enable_enclosing_search: true,
        ..CertifyConfig::default()
    };
    Ok(TraceDocument::certify(&f, &config).to_json())
}

/// Support and Newton polytope statistics as pretty JSON.
#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, String> {
    let f = parse(text)?;
    serde_json::to_string_pretty(&analysis::analyze(&f, DEFAULT_FACET_BUDGET)).map_err(|e| e.to_string())
}

/// Bundled examples as a JSON object from file name to polynomial text.
#[wasm_bindgen]
pub fn examples() -> String {
    let map: serde_json::Map<String, serde_json::Value> = fixtures::ALL
        .iter()
        .map(|(name, text)| (name.to_string(), serde_json::Value::String(text.trim().to_string())))
        .collect();
    serde_json::Value::Object(map).to_string()
}
