use std::time::Instant;

use clawcolor::corpus::parse_graph6;
use clawcolor::{strong_color, verify_strong, EngineError};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::read_text;
use crate::{exit, Io};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "message", rename_all = "snake_case")]
pub enum Status {
    Verified,
    /// Verified with 9 colors on a triangular prism component.
    Exceptional,
    /// Not claw-free or not subcubic.
    Rejected(String),
    ParseError(String),
    /// Engine error or a coloring that failed verification.
    Failed(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchRecord {
    /// 1-based line number in the input.
    pub line: usize,
    pub n: usize,
    pub m: usize,
    pub cases: Vec<String>,
    pub colors_used: usize,
    pub exceptional: bool,
    #[serde(flatten)]
    pub status: Status,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub verified: usize,
    pub exceptional: usize,
    pub rejected: usize,
    pub parse_errors: usize,
    pub failed: usize,
    pub max_colors: usize,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub records: Vec<BatchRecord>,
    pub summary: Summary,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            exit::INTERNAL
        } else if self.summary.parse_errors > 0 {
            exit::INPUT
        } else {
            exit::OK
        }
    }
}

fn process(line: usize, text: &str) -> BatchRecord {
    let t = Instant::now();
    let mut rec = BatchRecord {
        line,
        n: 0,
        m: 0,
        cases: Vec::new(),
        colors_used: 0,
        exceptional: false,
        status: Status::Verified,
        seconds: 0.0,
    };
    rec.status = match parse_graph6(text) {
        Err(e) => Status::ParseError(e.to_string()),
        Ok(g) => {
            rec.n = g.n();
            rec.m = g.m();
            match strong_color(&g) {
                Err(e @ (EngineError::NotClawFree(_) | EngineError::NotSubcubic { .. })) => {
                    Status::Rejected(e.to_string())
                }
                Err(e) => Status::Failed(e.to_string()),
                Ok(sc) => {
                    rec.cases = sc.trace().map(|(_, r)| r.case.to_string()).collect();
                    rec.colors_used = sc.colors_used;
                    rec.exceptional = sc.exceptional;
                    let bad = verify_strong(&g, &sc.coloring, true);
                    let limit = if sc.exceptional { 9 } else { 7 };
                    if let Some(v) = bad.first() {
                        Status::Failed(format!("{} violations, first: {v}", bad.len()))
                    } else if sc.colors_used > limit {
                        Status::Failed(format!("{} colors", sc.colors_used))
                    } else if sc.exceptional {
                        Status::Exceptional
                    } else {
                        Status::Verified
                    }
                }
            }
        }
    };
    rec.seconds = t.elapsed().as_secs_f64();
    rec
}

/// Colors and verifies every non-blank graph6 line of `text`. Records come
/// back in input order whether or not `parallel` is set.
pub fn batch_report(text: &str, parallel: bool) -> RunReport {
    let start = Instant::now();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let records: Vec<BatchRecord> = if parallel {
        lines.par_iter().map(|&(i, l)| process(i, l)).collect()
    } else {
        lines.iter().map(|&(i, l)| process(i, l)).collect()
    };
    let mut s = Summary {
        graphs: records.len(),
        ..Summary::default()
    };
    for r in &records {
        match r.status {
            Status::Verified => s.verified += 1,
            Status::Exceptional => s.exceptional += 1,
            Status::Rejected(_) => s.rejected += 1,
            Status::ParseError(_) => s.parse_errors += 1,
            Status::Failed(_) => s.failed += 1,
        }
        s.max_colors = s.max_colors.max(r.colors_used);
    }
    s.seconds = start.elapsed().as_secs_f64();
    RunReport { records, summary: s }
}

pub fn run(path: &str, parallel: bool, json: bool, io: &mut Io) -> Result<i32, String> {
    let text = read_text(path, io)?;
    let report = batch_report(&text, parallel);
    let io_err = |e: std::io::Error| e.to_string();
    if json {
        serde_json::to_writer_pretty(&mut *io.out, &report).map_err(|e| e.to_string())?;
        writeln!(io.out).map_err(io_err)?;
    } else {
        for r in &report.records {
            let status = match &r.status {
                Status::Verified => "verified".to_string(),
                Status::Exceptional => "exceptional".to_string(),
                Status::Rejected(m) => format!("rejected: {m}"),
                Status::ParseError(m) => format!("parse error: {m}"),
                Status::Failed(m) => format!("FAILED: {m}"),
            };
            writeln!(
                io.out,
                "{}\tn={}\tm={}\tcolors={}\t{}\t{}",
                r.line,
                r.n,
                r.m,
                r.colors_used,
                r.cases.join(","),
                status
            )
            .map_err(io_err)?;
        }
        let s = &report.summary;
        writeln!(
            io.out,
            "# {} graphs: {} verified, {} exceptional, {} rejected, {} parse errors, {} failed; max colors {}; {:.3}s",
            s.graphs, s.verified, s.exceptional, s.rejected, s.parse_errors, s.failed, s.max_colors, s.seconds
        )
        .map_err(io_err)?;
    }
    Ok(report.exit_code())
}
