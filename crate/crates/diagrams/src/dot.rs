use std::fmt::Write;

use crate::diagram::Side;
use crate::strips::StripReport;

/// Dual graph of the spike-free core: one node per region plus the outer face.
pub fn dual_dot(report: &StripReport) -> String {
    let d = &report.core;
    let mut s = String::from("graph dual {\n  outer [shape=box];\n");
    for (r, region) in d.regions.iter().enumerate() {
        let mut tags = Vec::new();
        if report.singletons.contains(&r) {
            tags.push("singleton".to_string());
        }
        for (k, c) in report.compounds.iter().enumerate() {
            if c.contains(&r) {
                tags.push(format!("compound{k}"));
            }
        }
        let style = if tags.is_empty() { "" } else { ", style=filled, fillcolor=lightgrey" };
        let _ = writeln!(
            s,
            "  \"{}\" [label=\"{}\\ni={}{}{}\"{style}];",
            region.id,
            region.id,
            report.interior_degree[r],
            if tags.is_empty() { "" } else { "\\n" },
            tags.join(" ")
        );
    }
    for (r, runs) in report.runs.iter().enumerate() {
        for run in runs {
            let label = run.darts.iter().map(|x| d.edges[x.edge].id.as_str()).collect::<Vec<_>>().join(",");
            match run.other {
                Side::Region(o) if o > r => {
                    let _ = writeln!(s, "  \"{}\" -- \"{}\" [label=\"{label}\"];", d.regions[r].id, d.regions[o].id);
                }
                Side::Outer => {
                    let _ = writeln!(s, "  \"{}\" -- outer [style=dashed, label=\"{label}\"];", d.regions[r].id);
                }
                _ => {}
            }
        }
    }
    s.push_str("}\n");
    s
}
