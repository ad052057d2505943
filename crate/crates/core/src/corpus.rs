//! Bundled fixture diagrams with expected analysis results.
//!
//! Each line of a corpus file reads `name | pd | key=value#tag ...`, where
//! the tag records where the value came from. Lines starting with `#` and
//! blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::fiber;
use crate::jones;
use crate::state::{self, KauffmanState};

const BUNDLED: &str = include_str!("../data/corpus.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Computed by an independent brute-force oracle and frozen.
    Derived,
    /// Follows from a definition or counting argument.
    Trivial,
    /// A published result.
    Paper,
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "derived" => Ok(Provenance::Derived),
            "trivial" => Ok(Provenance::Trivial),
            "paper" => Ok(Provenance::Paper),
            _ => Err(format!("unknown provenance tag `{s}`")),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
            Provenance::Paper => "paper",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub key: String,
    pub value: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub pd: String,
    pub diagram: LinkDiagram,
    pub expectations: Vec<Expectation>,
}

impl Fixture {
    pub fn expected(&self, key: &str) -> Option<&str> {
        self.expectations
            .iter()
            .find(|e| e.key == key)
            .map(|e| e.value.as_str())
    }
}

/// The fixtures shipped with the crate.
pub fn load_corpus() -> Result<Vec<Fixture>> {
    load_corpus_from_str(BUNDLED)
}

pub fn load_corpus_from_str(text: &str) -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_line(line).map_err(|reason| Error::Corpus {
            line: i + 1,
            reason,
        })?);
    }
    Ok(out)
}

fn parse_line(line: &str) -> std::result::Result<Fixture, String> {
    let mut fields = line.splitn(3, '|').map(str::trim);
    let (Some(name), Some(pd), Some(rest)) = (fields.next(), fields.next(), fields.next()) else {
        return Err("expected `name | pd | expectations`".into());
    };
    if name.is_empty() {
        return Err("empty fixture name".into());
    }
    let diagram = LinkDiagram::parse_any(pd).map_err(|e| e.to_string())?;
    let mut expectations = Vec::new();
    for item in rest.split_whitespace() {
        let (kv, tag) = item
            .rsplit_once('#')
            .ok_or_else(|| format!("`{item}` has no provenance tag"))?;
        let (key, value) = kv
            .split_once('=')
            .ok_or_else(|| format!("`{item}` is not key=value"))?;
        expectations.push(Expectation {
            key: key.to_string(),
            value: value.to_string(),
            provenance: tag.parse()?,
        });
    }
    Ok(Fixture {
        name: name.to_string(),
        pd: pd.to_string(),
        diagram,
        expectations,
    })
}

/// Every quantity the sweep knows how to check, computed for one diagram.
/// Quantities that do not apply (such as regions of a split diagram) are
/// absent; those that fail are reported as `error: ...`.
pub fn observe(d: &LinkDiagram, cap: usize) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut put = |k: &str, v: Result<String>| {
        out.insert(k.to_string(), v.unwrap_or_else(|e| format!("error: {e}")));
    };
    let connected = d.is_connected();
    put("crossings", Ok(d.crossing_count().to_string()));
    put("components", Ok(d.link_components().to_string()));
    put("writhe", d.writhe().map(|w| w.to_string()));
    put("connected", Ok(connected.to_string()));
    put("alternating", Ok(d.is_alternating().to_string()));
    if connected && d.crossing_count() > 0 {
        put("prime", d.is_prime().map(|p| p.to_string()));
        put("faces", Ok(d.faces().len().to_string()));
    }

    let states = [
        ("a", Ok(KauffmanState::all_a(d))),
        ("b", Ok(KauffmanState::all_b(d))),
        ("seifert", KauffmanState::seifert(d)),
    ];
    for (tag, sigma) in states {
        let sigma = match sigma {
            Ok(s) => s,
            Err(e) => {
                put(&format!("circles_{tag}"), Err(e));
                continue;
            }
        };
        let g = state::state_graph(d, &sigma);
        let reduced = g.as_ref().map(|g| g.reduce()).map_err(Clone::clone);
        put(
            &format!("circles_{tag}"),
            g.as_ref()
                .map(|g| g.vertex_count.to_string())
                .map_err(Clone::clone),
        );
        put(
            &format!("adequate_{tag}"),
            state::is_adequate(d, &sigma).map(|b| b.to_string()),
        );
        if connected {
            put(
                &format!("homogeneous_{tag}"),
                state::is_homogeneous(d, &sigma).map(|b| b.to_string()),
            );
        }
        put(
            &format!("tree_{tag}"),
            reduced
                .as_ref()
                .map(|r| fiber::is_tree(r).to_string())
                .map_err(Clone::clone),
        );
        put(
            &format!("chi_{tag}"),
            reduced
                .as_ref()
                .map(|r| r.euler_characteristic().to_string())
                .map_err(Clone::clone),
        );
        put(
            &format!("fiber_{tag}"),
            fiber::detect_fiber(d, &sigma).map(|v| v.kind().as_str().to_string()),
        );
    }

    match jones::jones_polynomial(d, cap).and_then(|j| jones::extract_coefficients(&j)) {
        Ok(r) => {
            put("jones", Ok(r.polynomial.to_canonical()));
            put("alpha", Ok(r.alpha.to_string()));
            put("beta", Ok(r.beta.to_string()));
            put("beta_prime", Ok(r.beta_prime.to_string()));
            put("alpha_prime", Ok(r.alpha_prime.to_string()));
        }
        Err(e) => put("jones", Err(e)),
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub fixture: String,
    pub key: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub fixtures: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes every expectation and lists those that differ.
pub fn run_sweep(fixtures: &[Fixture], cap: usize) -> SweepReport {
    let mut report = SweepReport {
        fixtures: fixtures.len(),
        ..SweepReport::default()
    };
    for f in fixtures {
        let seen = observe(&f.diagram, cap);
        for e in &f.expectations {
            report.checked += 1;
            let actual = seen
                .get(&e.key)
                .cloned()
                .unwrap_or_else(|| "<not computed>".into());
            if actual != e.value {
                report.mismatches.push(Mismatch {
                    fixture: f.name.clone(),
                    key: e.key.clone(),
                    expected: e.value.clone(),
                    actual,
                });
            }
        }
    }
    report
}
