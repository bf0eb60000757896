use std::time::{Duration, Instant};

use clawcolor::corpus::expanded_prism;
use clawcolor::{exact_chi_s_upto, ChiOutcome, Graph, SolverConfig};
use serde::Serialize;

use crate::input::read_graph;
use crate::{exit, Format, Io};

/// Edge limit used for the expanded-prism survey (45 edges at k = 5).
pub const SURVEY_MAX_EDGES: usize = 64;
/// Default per-instance wall clock for the survey.
pub const SURVEY_TIME_LIMIT: Duration = Duration::from_secs(600);

pub struct Options {
    pub kmax: Option<usize>,
    pub budget: Option<u64>,
    pub time_limit: Option<f64>,
    pub max_edges: Option<usize>,
    pub json: bool,
}

impl Options {
    fn solver(&self, base: SolverConfig) -> Result<SolverConfig, String> {
        let mut cfg = base;
        if let Some(b) = self.budget {
            cfg.node_budget = b;
        }
        if let Some(t) = self.time_limit {
            let d = Duration::try_from_secs_f64(t).map_err(|e| format!("--time-limit: {e}"))?;
            cfg.time_budget = Some(d);
        }
        if let Some(m) = self.max_edges {
            cfg.max_edges = m;
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub k: usize,
    pub graph: Graph,
    pub outcome: ChiOutcome,
    pub elapsed: Duration,
}

/// Exact strong chromatic index of the triangle expansion of each k-prism.
pub fn survey_rows(ks: &[usize], cfg: &SolverConfig) -> Result<Vec<SurveyRow>, String> {
    ks.iter()
        .map(|&k| {
            let graph = expanded_prism(k).map_err(|e| e.to_string())?;
            let t = Instant::now();
            let outcome = exact_chi_s_upto(&graph, usize::MAX, cfg).map_err(|e| format!("k = {k}: {e}"))?;
            Ok(SurveyRow {
                k,
                graph,
                outcome,
                elapsed: t.elapsed(),
            })
        })
        .collect()
}

#[derive(Serialize)]
struct Doc {
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    n: usize,
    m: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<usize>,
    seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Vec<(usize, usize, u8)>>,
}

fn doc(k: Option<usize>, g: &Graph, out: &ChiOutcome, elapsed: Duration) -> Doc {
    let mut d = Doc {
        k,
        n: g.n(),
        m: g.m(),
        status: "",
        chi_s: None,
        lower: None,
        seconds: elapsed.as_secs_f64(),
        certificate: None,
    };
    match out {
        ChiOutcome::Exact { chi, certificate } => {
            d.status = "exact";
            d.chi_s = Some(*chi);
            d.certificate = Some(
                g.edges()
                    .iter()
                    .enumerate()
                    .map(|(e, &(u, v))| (u, v, certificate.get(e).unwrap_or(0)))
                    .collect(),
            );
        }
        ChiOutcome::Indeterminate { lower } => {
            d.status = "indeterminate";
            d.lower = Some(*lower);
        }
        ChiOutcome::Above { kmax } => {
            d.status = "above";
            d.lower = Some(kmax + 1);
        }
    }
    d
}

fn summary(d: &Doc) -> String {
    match d.status {
        "exact" => format!("chi_s = {}", d.chi_s.unwrap_or(0)),
        "indeterminate" => format!("indeterminate, chi_s >= {}", d.lower.unwrap_or(0)),
        _ => format!("chi_s >= {}", d.lower.unwrap_or(0)),
    }
}

fn write_certificate(d: &Doc, io: &mut Io) -> std::io::Result<()> {
    for &(u, v, c) in d.certificate.iter().flatten() {
        writeln!(io.out, "{u} {v} {c}")?;
    }
    Ok(())
}

pub fn run(path: &str, format: Format, opts: &Options, io: &mut Io) -> Result<i32, String> {
    let g = read_graph(path, format, io)?;
    let cfg = opts.solver(SolverConfig::default())?;
    let t = Instant::now();
    let out = exact_chi_s_upto(&g, opts.kmax.unwrap_or(usize::MAX), &cfg).map_err(|e| e.to_string())?;
    let d = doc(None, &g, &out, t.elapsed());
    let io_err = |e: std::io::Error| e.to_string();
    if opts.json {
        serde_json::to_writer_pretty(&mut *io.out, &d).map_err(|e| e.to_string())?;
        writeln!(io.out).map_err(io_err)?;
    } else {
        writeln!(io.out, "{}", summary(&d)).map_err(io_err)?;
        write_certificate(&d, io).map_err(io_err)?;
    }
    Ok(exit::OK)
}

pub fn survey(ks: &[usize], opts: &Options, io: &mut Io) -> Result<i32, String> {
    let base = SolverConfig {
        max_edges: SURVEY_MAX_EDGES,
        time_budget: Some(SURVEY_TIME_LIMIT),
        ..SolverConfig::default()
    };
    let cfg = opts.solver(base)?;
    let rows = survey_rows(ks, &cfg)?;
    let docs: Vec<Doc> = rows
        .iter()
        .map(|r| doc(Some(r.k), &r.graph, &r.outcome, r.elapsed))
        .collect();
    let io_err = |e: std::io::Error| e.to_string();
    if opts.json {
        serde_json::to_writer_pretty(&mut *io.out, &docs).map_err(|e| e.to_string())?;
        writeln!(io.out).map_err(io_err)?;
        return Ok(exit::OK);
    }
    writeln!(io.out, "k\tn\tm\tresult\tseconds").map_err(io_err)?;
    for d in &docs {
        writeln!(
            io.out,
            "{}\t{}\t{}\t{}\t{:.3}",
            d.k.unwrap_or(0),
            d.n,
            d.m,
            summary(d),
            d.seconds
        )
        .map_err(io_err)?;
    }
    for d in &docs {
        if d.certificate.is_some() {
            writeln!(io.out, "\n# certificate k = {}", d.k.unwrap_or(0)).map_err(io_err)?;
            write_certificate(d, io).map_err(io_err)?;
        }
    }
    Ok(exit::OK)
}
