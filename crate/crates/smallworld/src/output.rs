//! Deterministic CSV renderers.
//!
//! Every renderer produces the full file contents as a `String` with `\n`
//! line endings and fixed decimal formatting, so identical inputs yield
//! byte-identical files.

use crate::experiments::SweepSeries;
use crate::geometry::NodeSet;
use crate::metrics::MetricsReport;
use crate::topology::CompoundTopology;

/// `id,x_m,y_m` with coordinates at micro-meter precision.
pub fn render_nodes_csv(nodes: &NodeSet) -> String {
    let mut out = String::from("id,x_m,y_m\n");
    for (id, p) in nodes.positions().iter().enumerate() {
        out.push_str(&format!("{id},{:.6},{:.6}\n", p.x, p.y));
    }
    out
}

/// `channel_index,node_a,node_b,range_m,weight`, channel 0 first, edges in
/// construction order.
pub fn render_edges_csv(topology: &CompoundTopology) -> String {
    let mut out = String::from("channel_index,node_a,node_b,range_m,weight\n");
    for (ch, edges) in topology.channels().iter().enumerate() {
        for e in edges {
            out.push_str(&format!(
                "{ch},{},{},{:.6},{:.6}\n",
                e.a, e.b, e.range, e.weight
            ));
        }
    }
    out
}

fn fmt3(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => format!("{x:.3}"),
        _ => "nan".to_string(),
    }
}

fn fmt4(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => format!("{x:.4}"),
        _ => "nan".to_string(),
    }
}

fn mean_of(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        None
    } else {
        Some(values.iter().sum::<f64>() / values.len() as f64)
    }
}

/// Per-seed metric rows plus a final `mean` row.
///
/// Header: `scenario,seed,k,radii_ratio,alpha,C,H,M,L,m,connected_pairs,`
/// `E0,..,E{k},sc_ratio`. Undefined path statistics (no connected pair)
/// render as `nan` and are skipped by the mean row, which averages only the
/// seeds where a column is defined.
pub fn render_metrics_csv(
    scenario: &str,
    k: usize,
    radii_ratio: f64,
    alpha: f64,
    entries: &[(u64, MetricsReport)],
) -> String {
    let mut out = String::from("scenario,seed,k,radii_ratio,alpha,C,H,M,L,m,connected_pairs");
    for i in 0..=k {
        out.push_str(&format!(",E{i}"));
    }
    out.push_str(",sc_ratio\n");

    let prefix = |seed: &str| format!("{scenario},{seed},{k},{radii_ratio},{alpha}");

    for (seed, report) in entries {
        out.push_str(&prefix(&seed.to_string()));
        out.push(',');
        out.push_str(&fmt3(Some(report.clustering)));
        out.push(',');
        out.push_str(&fmt3(report.char_hop()));
        out.push(',');
        match report.max_hop() {
            Some(m) => out.push_str(&m.to_string()),
            None => out.push_str("nan"),
        }
        out.push(',');
        out.push_str(&fmt3(report.char_len()));
        out.push(',');
        out.push_str(&fmt3(report.max_len()));
        out.push_str(&format!(",{}", report.connected_pairs));
        for i in 0..=k {
            let e = report.per_channel_edges.get(i).copied().unwrap_or(0);
            out.push_str(&format!(",{e}"));
        }
        out.push(',');
        out.push_str(&fmt4(Some(report.cumulative_sc_ratio)));
        out.push('\n');
    }

    // Mean row over the defined entries of each column.
    let collect = |f: &dyn Fn(&MetricsReport) -> Option<f64>| -> Vec<f64> {
        entries.iter().filter_map(|(_, r)| f(r)).collect()
    };
    let c = collect(&|r| Some(r.clustering).filter(|v| v.is_finite()));
    let h = collect(&|r| r.char_hop());
    let mx = collect(&|r| r.max_hop().map(f64::from));
    let l = collect(&|r| r.char_len());
    let m = collect(&|r| r.max_len());
    let pairs = collect(&|r| Some(r.connected_pairs as f64));
    let sc = collect(&|r| Some(r.cumulative_sc_ratio).filter(|v| v.is_finite()));

    out.push_str(&prefix("mean"));
    out.push(',');
    out.push_str(&fmt3(mean_of(&c)));
    out.push(',');
    out.push_str(&fmt3(mean_of(&h)));
    out.push(',');
    out.push_str(&fmt3(mean_of(&mx)));
    out.push(',');
    out.push_str(&fmt3(mean_of(&l)));
    out.push(',');
    out.push_str(&fmt3(mean_of(&m)));
    out.push(',');
    match mean_of(&pairs) {
        Some(p) => out.push_str(&format!("{p:.1}")),
        None => out.push_str("nan"),
    }
    for i in 0..=k {
        let col: Vec<f64> = entries
            .iter()
            .map(|(_, r)| r.per_channel_edges.get(i).copied().unwrap_or(0) as f64)
            .collect();
        out.push_str(&format!(",{:.1}", mean_of(&col).unwrap_or(f64::NAN)));
    }
    out.push(',');
    out.push_str(&fmt4(mean_of(&sc)));
    out.push('\n');
    out
}

/// `axis_value,metric_name,mean,stddev,n_seeds` — six metric rows per sweep
/// point, points in axis order.
pub fn render_sweep_csv(series: &SweepSeries) -> String {
    let mut out = String::from("axis_value,metric_name,mean,stddev,n_seeds\n");
    for point in &series.points {
        for (name, stat) in point.summary.rows() {
            let mean = if stat.mean.is_finite() {
                format!("{:.6}", stat.mean)
            } else {
                "nan".to_string()
            };
            let stddev = if stat.stddev.is_finite() {
                format!("{:.6}", stat.stddev)
            } else {
                "nan".to_string()
            };
            out.push_str(&format!(
                "{},{name},{mean},{stddev},{}\n",
                point.axis_value, stat.n_samples
            ));
        }
    }
    out
}
