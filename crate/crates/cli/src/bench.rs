use std::time::{Duration, Instant};

use clap::ValueEnum;
use clawcolor::corpus::{expanded_prism, random_claw_free_subcubic};
use clawcolor::{strong_color, Graph};
use serde::Serialize;

use crate::{exit, Io};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Triangle expansion of the k-prism, 9k edges; sizes are edge counts.
    ExpandedPrism,
    /// Seeded random claw-free subcubic graphs; sizes are vertex counts.
    Random,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub family: Family,
    pub size: usize,
    pub n: usize,
    pub m: usize,
    /// Median seconds per coloring over the repeats.
    pub median_s: f64,
    pub edges_per_s: f64,
    /// Median time over the previous row's median time.
    pub ratio: Option<f64>,
    /// Edge count over the previous row's edge count.
    pub size_ratio: Option<f64>,
}

/// Shortest sample; small graphs are colored repeatedly until a sample
/// lasts this long.
const MIN_SAMPLE: Duration = Duration::from_millis(50);

pub fn family_graph(family: Family, size: usize, seed: u64) -> Result<Graph, String> {
    match family {
        Family::ExpandedPrism => {
            let k = ((size as f64 / 9.0).round() as usize).max(3);
            expanded_prism(k).map_err(|e| e.to_string())
        }
        Family::Random => Ok(random_claw_free_subcubic(size, seed)),
    }
}

fn sample(g: &Graph, iters: u32) -> Result<f64, String> {
    let t = Instant::now();
    for _ in 0..iters {
        let sc = strong_color(g).map_err(|e| e.to_string())?;
        std::hint::black_box(sc);
    }
    Ok(t.elapsed().as_secs_f64() / iters as f64)
}

/// Times the coloring at each size; sizes should ascend. Repeats run
/// round-robin over the sizes so slow spells hit every size alike.
pub fn bench_rows(family: Family, sizes: &[usize], repeats: usize, seed: u64) -> Result<Vec<BenchRow>, String> {
    let graphs: Vec<Graph> = sizes
        .iter()
        .map(|&s| family_graph(family, s, seed))
        .collect::<Result<_, _>>()?;
    let iters: Vec<u32> = graphs
        .iter()
        .map(|g| {
            let first = sample(g, 1)?;
            Ok((MIN_SAMPLE.as_secs_f64() / first.max(1e-9)).ceil().max(1.0) as u32)
        })
        .collect::<Result<_, String>>()?;
    let mut times: Vec<Vec<f64>> = vec![Vec::new(); graphs.len()];
    for _ in 0..repeats.max(1) {
        for (i, g) in graphs.iter().enumerate() {
            times[i].push(sample(g, iters[i])?);
        }
    }
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for ((&size, g), mut t) in sizes.iter().zip(&graphs).zip(times) {
        t.sort_by(f64::total_cmp);
        let median = t[t.len() / 2];
        let prev = rows.last();
        rows.push(BenchRow {
            family,
            size,
            n: g.n(),
            m: g.m(),
            median_s: median,
            edges_per_s: g.m() as f64 / median,
            ratio: prev.map(|p| median / p.median_s),
            size_ratio: prev.map(|p| g.m() as f64 / p.m as f64),
        });
    }
    Ok(rows)
}

pub fn run(family: Family, sizes: &[usize], repeats: usize, seed: u64, json: bool, io: &mut Io) -> Result<i32, String> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err("--sizes must ascend".into());
    }
    let rows = bench_rows(family, sizes, repeats, seed)?;
    let io_err = |e: std::io::Error| e.to_string();
    if json {
        serde_json::to_writer_pretty(&mut *io.out, &rows).map_err(|e| e.to_string())?;
        writeln!(io.out).map_err(io_err)?;
        return Ok(exit::OK);
    }
    writeln!(io.out, "size\tn\tm\tmedian_s\tedges_per_s\tratio\tsize_ratio").map_err(io_err)?;
    let opt = |x: Option<f64>| x.map_or("-".to_string(), |r| format!("{r:.3}"));
    for r in &rows {
        writeln!(
            io.out,
            "{}\t{}\t{}\t{:.6e}\t{:.0}\t{}\t{}",
            r.size,
            r.n,
            r.m,
            r.median_s,
            r.edges_per_s,
            opt(r.ratio),
            opt(r.size_ratio)
        )
        .map_err(io_err)?;
    }
    Ok(exit::OK)
}
