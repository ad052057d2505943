//! Full analysis of one state of one diagram, as deterministic JSON or a
//! human-readable table.

use std::fmt::Write;

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::Result;
use crate::fiber::{self, FiberVerdict, MurasugiDecomposition};
use crate::jones::{self, CorollaryReport, JonesReport};
use crate::state::{self, KauffmanState, ReducedStateGraph, StateGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramSummary {
    pub pd: String,
    pub crossings: usize,
    pub components: usize,
    pub connected: bool,
    pub alternating: bool,
    /// Absent for split or crossingless diagrams.
    pub prime: Option<bool>,
    /// Absent when the orientation cannot be recovered.
    pub writhe: Option<i32>,
}

impl DiagramSummary {
    pub fn of(d: &LinkDiagram) -> Self {
        DiagramSummary {
            pd: d.to_string(),
            crossings: d.crossing_count(),
            components: d.link_components(),
            connected: d.is_connected(),
            alternating: d.is_alternating(),
            prime: d.is_prime().ok(),
            writhe: d.writhe().ok(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateSummary {
    pub label: String,
    pub circles: usize,
    pub adequate: bool,
    /// Absent for split diagrams.
    pub homogeneous: Option<bool>,
    pub surface_chi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub diagram: DiagramSummary,
    pub state: StateSummary,
    pub graph: StateGraph,
    pub reduced: ReducedStateGraph,
    pub reduced_chi: i64,
    pub verdict: FiberVerdict,
    pub decomposition: MurasugiDecomposition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones: Option<JonesReport>,
}

/// Runs the whole pipeline on `sigma`. The Jones section is filled in when
/// `jones_cap` is given.
pub fn analyze(
    d: &LinkDiagram,
    sigma: &KauffmanState,
    jones_cap: Option<usize>,
) -> Result<AnalysisReport> {
    sigma.check(d)?;
    let graph = state::state_graph(d, sigma)?;
    let reduced = graph.reduce();
    let homogeneous = if d.is_connected() {
        Some(state::is_homogeneous(d, sigma)?)
    } else {
        None
    };
    let jones = match jones_cap {
        Some(cap) => Some(jones::extract_coefficients(&jones::jones_polynomial(
            d, cap,
        )?)?),
        None => None,
    };
    Ok(AnalysisReport {
        diagram: DiagramSummary::of(d),
        state: StateSummary {
            label: sigma.to_string(),
            circles: graph.vertex_count,
            adequate: !graph.has_loop(),
            homogeneous,
            surface_chi: state::euler_characteristic_of_surface(d, sigma)?,
        },
        reduced_chi: reduced.euler_characteristic(),
        verdict: fiber::detect_fiber(d, sigma)?,
        decomposition: fiber::murasugi_decompose(d, sigma)?,
        graph,
        reduced,
        jones,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".into(), |v| v.to_string())
}

fn opt_bool(v: Option<bool>) -> String {
    opt(v.map(yes_no))
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_pretty(&self) -> String {
        let d = &self.diagram;
        let s = &self.state;
        let mut out = String::new();
        let mut row = |k: &str, v: String| writeln!(out, "{k:<16}{v}").unwrap();
        row("diagram", d.pd.clone());
        row("crossings", d.crossings.to_string());
        row("components", d.components.to_string());
        row("connected", yes_no(d.connected).into());
        row("alternating", yes_no(d.alternating).into());
        row("prime", opt_bool(d.prime));
        row("writhe", opt(d.writhe));
        row(
            "state",
            if s.label.is_empty() {
                "(empty)".into()
            } else {
                s.label.clone()
            },
        );
        row("circles", s.circles.to_string());
        row("adequate", yes_no(s.adequate).into());
        row("homogeneous", opt_bool(s.homogeneous));
        row("chi(surface)", s.surface_chi.to_string());
        row(
            "G",
            format!(
                "{} vertices, {} edges",
                self.graph.vertex_count,
                self.graph.edges.len()
            ),
        );
        row(
            "G'",
            format!(
                "{} vertices, {} edges, chi {}",
                self.reduced.vertex_count,
                self.reduced.edges.len(),
                self.reduced_chi
            ),
        );
        row(
            "blocks",
            format!(
                "{} (cut vertices {:?})",
                self.decomposition.blocks.len(),
                self.decomposition.cut_vertices
            ),
        );
        row("verdict", verdict_text(&self.verdict));
        if let Some(j) = &self.jones {
            row("jones", j.polynomial.to_canonical());
            row("beta", j.beta.to_string());
            row("beta'", j.beta_prime.to_string());
        }
        out
    }
}

pub fn verdict_text(v: &FiberVerdict) -> String {
    match v.witness() {
        None => v.kind().as_str().to_string(),
        Some(w) => format!(
            "{} ({})",
            v.kind().as_str(),
            serde_json::to_string(w).expect("witness serializes")
        ),
    }
}

/// Output of the Jones command: the coefficients, and the corollary check
/// when one was requested and applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JonesOutput {
    pub jones: JonesReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary: Option<CorollaryReport>,
}

impl JonesOutput {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_pretty(&self) -> String {
        let j = &self.jones;
        let mut out = String::new();
        let mut row = |k: &str, v: String| writeln!(out, "{k:<16}{v}").unwrap();
        row("jones", j.polynomial.to_canonical());
        row(
            "degrees",
            format!("t^({}/2) .. t^({}/2)", j.m_half, j.k_half),
        );
        row("alpha", j.alpha.to_string());
        row("beta", j.beta.to_string());
        row("beta'", j.beta_prime.to_string());
        row("alpha'", j.alpha_prime.to_string());
        if let Some(c) = &self.corollary {
            for (name, side) in [("A side", &c.a_side), ("B side", &c.b_side)] {
                let text = match side {
                    None => "not adequate".to_string(),
                    Some(s) => format!(
                        "coefficient {}, chi(G') {}, tree {}, fiber {}, {}",
                        s.coefficient,
                        s.reduced_chi,
                        yes_no(s.reduced_is_tree),
                        yes_no(s.fiber),
                        if s.consistent() {
                            "consistent"
                        } else {
                            "INCONSISTENT"
                        }
                    ),
                };
                row(name, text);
            }
        }
        out
    }
}
