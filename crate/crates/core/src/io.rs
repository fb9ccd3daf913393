//! Versioned file formats and exporters: embedding documents, measurement
//! reports, CSV/DOT edge lists, and CSV histograms.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::embedding::{Construction, Embedding};
use crate::error::{Error, Result};
use crate::routing::HostPath;
use crate::topology::{GraphKind, Vertex};
use crate::verify::EmbedReport;

/// Format version written by this library; readers reject other majors.
pub const FORMAT_VERSION: &str = "1.0";

fn check_version(found: &str) -> Result<()> {
    let major = found
        .split('.')
        .next()
        .and_then(|m| m.parse::<u32>().ok())
        .ok_or_else(|| Error::FormatVersion {
            found: found.to_string(),
            supported: 1,
        })?;
    if major != 1 {
        return Err(Error::FormatVersion {
            found: found.to_string(),
            supported: 1,
        });
    }
    Ok(())
}

/// One serialized route: the guest edge and the host vertex texts.
pub type RouteEntry = ((String, String), Vec<String>);

#[derive(Serialize, Deserialize)]
pub struct EmbeddingDoc {
    pub format_version: String,
    pub guest: String,
    pub host: String,
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub declared_dilation: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub declared_congestion: Option<u32>,
    pub map: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes: Option<Vec<RouteEntry>>,
}

pub fn embedding_to_doc(e: &Embedding) -> EmbeddingDoc {
    EmbeddingDoc {
        format_version: FORMAT_VERSION.to_string(),
        guest: e.guest().to_string(),
        host: e.host().to_string(),
        construction: e.construction().name(),
        declared_dilation: e.declared_dilation(),
        declared_congestion: e.declared_congestion(),
        map: e
            .map()
            .iter()
            .map(|(v, q)| (v.to_string(), q.to_string()))
            .collect(),
        routes: e.routes().map(|routes| {
            routes
                .iter()
                .map(|((u, v), path)| {
                    (
                        (u.to_string(), v.to_string()),
                        path.vertices().iter().map(|q| q.to_string()).collect(),
                    )
                })
                .collect()
        }),
    }
}

fn construction_from_name(name: &str) -> Construction {
    match name {
        "ring-cycle" => Construction::RingCycle,
        "line-path" => Construction::LinePath,
        "grid-nfact" => Construction::GridNFact,
        "mixed-grid" => Construction::MixedGridPancake,
        "ghc-rule-r" => Construction::GhcPancake,
        "hypercube-mixed-grid" => Construction::HypercubeMixedGrid,
        "hypercube-ghc" => Construction::HypercubeGhc,
        other => {
            if let Some(p) = other
                .strip_prefix("grid-family(p=")
                .and_then(|t| t.strip_suffix(')'))
                .and_then(|t| t.parse::<usize>().ok())
            {
                Construction::GridFamily { p }
            } else {
                Construction::External
            }
        }
    }
}

pub fn doc_to_embedding(doc: &EmbeddingDoc) -> Result<Embedding> {
    check_version(&doc.format_version)?;
    let guest: GraphKind = doc.guest.parse()?;
    let host: GraphKind = doc.host.parse()?;
    if !host.is_host() {
        return Err(Error::MalformedDocument(format!(
            "host {} is not a pancake or star network",
            doc.host
        )));
    }
    let mut map = Vec::with_capacity(doc.map.len());
    for (vt, qt) in &doc.map {
        let v = guest.parse_vertex(vt)?;
        let q = match host.parse_vertex(qt)? {
            Vertex::Perm(q) => q,
            _ => unreachable!("host vertices are permutations"),
        };
        map.push((v, q));
    }
    let routes = match &doc.routes {
        None => None,
        Some(entries) => {
            let mut out = Vec::with_capacity(entries.len());
            for ((ut, vt), path_texts) in entries {
                let u = guest.parse_vertex(ut)?;
                let v = guest.parse_vertex(vt)?;
                let mut vertices = Vec::with_capacity(path_texts.len());
                for t in path_texts {
                    match host.parse_vertex(t)? {
                        Vertex::Perm(q) => vertices.push(q),
                        _ => unreachable!(),
                    }
                }
                out.push(((u, v), HostPath::from_vertices(&host, vertices)?));
            }
            Some(out)
        }
    };
    let mut construction = construction_from_name(&doc.construction);
    if matches!(host, GraphKind::Star { .. }) {
        construction = match construction {
            Construction::MixedGridPancake => Construction::MixedGridStar,
            Construction::GhcPancake => Construction::GhcStar,
            other => other,
        };
    }
    let e = Embedding::from_parts(
        guest,
        host,
        construction,
        map,
        routes,
        doc.declared_dilation,
        doc.declared_congestion,
    )?;
    e.validate()?;
    Ok(e)
}

pub fn write_embedding<W: Write>(w: W, e: &Embedding) -> Result<()> {
    serde_json::to_writer_pretty(w, &embedding_to_doc(e))?;
    Ok(())
}

pub fn read_embedding<R: Read>(r: R) -> Result<Embedding> {
    let doc: EmbeddingDoc = serde_json::from_reader(r)?;
    doc_to_embedding(&doc)
}

#[derive(Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub numerator: u64,
    pub denominator: u64,
}

#[derive(Serialize, Deserialize)]
pub struct ViolationDoc {
    pub edge: (String, String),
    pub distance: u32,
}

#[derive(Serialize, Deserialize)]
pub struct ReportDoc {
    pub format_version: String,
    pub guest: String,
    pub host: String,
    pub dilation: u32,
    pub congestion: Option<u64>,
    pub congestion_source: Option<String>,
    pub expansion: ExpansionDoc,
    pub histogram: BTreeMap<u32, u64>,
    pub violations: Vec<ViolationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ViolationDoc>,
}

pub fn report_to_doc(e: &Embedding, report: &EmbedReport) -> ReportDoc {
    ReportDoc {
        format_version: FORMAT_VERSION.to_string(),
        guest: e.guest().to_string(),
        host: e.host().to_string(),
        dilation: report.dilation,
        congestion: report.congestion,
        congestion_source: report.congestion_source.map(|s| s.label().to_string()),
        expansion: ExpansionDoc {
            numerator: report.expansion.0,
            denominator: report.expansion.1,
        },
        histogram: report.histogram.clone(),
        violations: report
            .violations
            .iter()
            .map(|((u, v), d)| ViolationDoc {
                edge: (u.to_string(), v.to_string()),
                distance: *d,
            })
            .collect(),
        witness: report.witness.as_ref().map(|((u, v), d)| ViolationDoc {
            edge: (u.to_string(), v.to_string()),
            distance: *d,
        }),
    }
}

pub fn write_report<W: Write>(w: W, e: &Embedding, report: &EmbedReport) -> Result<()> {
    serde_json::to_writer_pretty(w, &report_to_doc(e, report))?;
    Ok(())
}

pub fn read_report<R: Read>(r: R) -> Result<ReportDoc> {
    let doc: ReportDoc = serde_json::from_reader(r)?;
    check_version(&doc.format_version)?;
    Ok(doc)
}

/// Quotes a CSV field when it contains a comma, quote or newline.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Edge list as CSV with header `u,v`.
pub fn write_edges_csv<W: Write>(mut w: W, kind: &GraphKind) -> Result<()> {
    writeln!(w, "u,v")?;
    for (u, v) in kind.edges()? {
        writeln!(
            w,
            "{},{}",
            csv_field(&u.to_string()),
            csv_field(&v.to_string())
        )?;
    }
    Ok(())
}

/// Edge list as an undirected DOT graph named after the kind.
pub fn write_edges_dot<W: Write>(mut w: W, kind: &GraphKind) -> Result<()> {
    writeln!(w, "graph \"{kind}\" {{")?;
    for v in kind.vertices()? {
        writeln!(w, "  \"{v}\";")?;
    }
    for (u, v) in kind.edges()? {
        writeln!(w, "  \"{u}\" -- \"{v}\";")?;
    }
    writeln!(w, "}}")?;
    Ok(())
}

/// Distance histogram as CSV with header `distance,edges`.
pub fn write_histogram_csv<W: Write>(mut w: W, report: &EmbedReport) -> Result<()> {
    writeln!(w, "distance,edges")?;
    for (d, count) in &report.histogram {
        writeln!(w, "{d},{count}")?;
    }
    Ok(())
}
