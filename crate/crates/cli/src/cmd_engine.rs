use std::path::Path;

use num_traits::One;
use recur_certify::{build_dumbbell, verify_certificate, CertifyError, DumbbellCertificate};
use recur_complex::Complex;
use recur_engine::{build_markov, check_recurrence, check_stationary_uniform, digraph_dot, digraph_text, Stationarity, TransitionDigraph, VVerdict};

use crate::input::{self, write};
use crate::{CliError, Out, RunReport};

fn path_labels(c: &Complex, d: &TransitionDigraph, p: &[usize]) -> String {
    p.iter().map(|&a| d.set.label(c, a)).collect::<Vec<_>>().join(" -> ")
}

pub fn recurrence(file: &Path, assert_sc: bool, dot: Option<&Path>) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let mut r = RunReport::new("recurrence");
    r.digest(&[&c.bytes]);
    let c = c.value;
    r.max_coefficient_bits = Some(input::max_bits(&c));
    let rep = check_recurrence(&c, assert_sc)?;
    let d = &rep.digraph;
    r.line(format!("|A| = {}, arcs {}, b1 = {}", d.len(), d.arc_count(), rep.b1));
    let counts: Vec<String> = rep.per_face.iter().map(|n| n.to_string()).collect();
    r.verdict("(i) finitely many directions per face", true, counts.join(" "));
    let ii = rep.h_missing.first().map(|&(a, f, p)| format!("{} has no continuation in {} side {p}", d.set.label(&c, a), c.faces[f].id));
    r.verdict("(ii) H closed in A", rep.ii(), ii.unwrap_or_default());
    let iii = rep.i_failures.first().map(|(a, e)| format!("{}: {e:?}", d.set.label(&c, *a)));
    r.verdict("(iii) I defined in A", rep.iii(), iii.unwrap_or_default());
    let iv: Vec<&str> = rep.iv_failures.iter().map(|&e| c.edges[e].id.as_str()).collect();
    r.verdict("(iv) perpendicular direction on every thick edge", rep.iv(), iv.join(" "));
    if rep.iv_depends_on_ii {
        r.line("note: (iv) was decided while (ii) failed");
    }
    r.line(format!("digraph acyclic: {}", rep.reach.acyclic));
    if let Some(cyc) = &rep.reach.cycle {
        r.line(format!("cycle: {}", path_labels(&c, d, cyc)));
    }
    if let Some(p) = &rep.reach.return_path {
        r.line(format!("path to I(a): {}", path_labels(&c, d, p)));
    }
    match &rep.v {
        VVerdict::NotEvaluated => r.line("(v) not evaluated: pass --assert-simply-connected to decide it"),
        VVerdict::Contradicted { b1 } => {
            r.verdict("(v) no return to I(a)", false, format!("asserted simply connected but b1 = {b1}"))
        }
        VVerdict::Pass => r.verdict("(v) no return to I(a)", true, "digraph acyclic, no a ~> I(a)"),
        VVerdict::Fail => r.verdict("(v) no return to I(a)", false, "digraph has a cycle or a path a ~> I(a)"),
    }
    if let Some(p) = dot {
        r.artifact(write(p, &digraph_dot(&c, d))?);
    }
    Ok(r)
}

pub fn markov(file: &Path, dot: Option<&Path>, text: Option<&Path>) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let mut r = RunReport::new("markov");
    r.digest(&[&c.bytes]);
    let c = c.value;
    let d = build_markov(&c)?;
    r.line(format!("|A| = {}, arcs {}", d.len(), d.arc_count()));
    if !d.dead_ends.is_empty() {
        r.line(format!("dead ends: {}", d.dead_ends.len()));
    }
    if !d.broken.is_empty() {
        r.line(format!("tokens without I: {}", d.broken.len()));
    }
    let bad_row = (0..d.len()).find(|&a| !d.succ[a].is_empty() && !d.row_sum(a).is_one());
    let rows_ok = d.dead_ends.is_empty() && d.broken.is_empty() && bad_row.is_none();
    let row_detail = match bad_row {
        Some(a) => format!("row {} sums to {}", d.set.label(&c, a), d.row_sum(a)),
        None if !rows_ok => "some tokens have no successors".into(),
        None => String::new(),
    };
    r.verdict("row sums 1", rows_ok, row_detail);
    match check_stationary_uniform(&d) {
        Stationarity::Uniform => r.verdict("uniform measure stationary", true, ""),
        Stationarity::Violated { token, column_sum } => r.verdict(
            "uniform measure stationary",
            false,
            format!("column {} sums to {column_sum}", d.set.label(&c, token)),
        ),
    }
    if let Some(p) = dot {
        r.artifact(write(p, &digraph_dot(&c, &d))?);
    }
    if let Some(p) = text {
        r.artifact(write(p, &digraph_text(&c, &d))?);
    }
    Ok(r)
}

pub fn certify_free(file: &Path, out: &Out) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let mut r = RunReport::new("certify-free");
    r.digest(&[&c.bytes]);
    let c = c.value;
    match build_dumbbell(&c) {
        Ok(cert) => {
            let json = cert.to_json();
            r.line(format!("base edge {} at t = {}", cert.edge, cert.x));
            for p in &cert.paths {
                r.line(format!("path {}: {} directions, length {}", p.name, p.tokens.len(), p.length));
            }
            r.verdict("certificate built", true, "");
            match &out.output {
                Some(p) => r.artifact(write(p, &json)?),
                None => r.line(json),
            }
        }
        Err(CertifyError::Engine(e)) if !matches!(e, recur_engine::EngineError::NotRecurrent { .. }) => {
            return Err(e.into())
        }
        Err(e @ CertifyError::Parse(_)) => return Err(CliError::Usage(e.to_string())),
        Err(e) => r.verdict("certificate built", false, e.to_string()),
    }
    Ok(r)
}

pub fn verify_cert(file: &Path, cert: &Path) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let text = input::read(cert)?;
    let parsed = DumbbellCertificate::from_json(&text).map_err(|e| match e {
        CertifyError::Parse(j) => CliError::Malformed { path: cert.display().to_string(), line: j.line(), column: j.column(), msg: j.to_string() },
        other => CliError::Usage(other.to_string()),
    })?;
    let mut r = RunReport::new("verify-cert");
    r.digest(&[&c.bytes, text.as_bytes()]);
    let clauses = verify_certificate(&c.value, &parsed).map_err(|e| match e {
        CertifyError::Engine(e) => CliError::Engine(e),
        other => CliError::Usage(other.to_string()),
    })?;
    for cl in &clauses {
        r.line(format!("violated: {cl}"));
    }
    let detail = clauses.first().map(|c| c.to_string()).unwrap_or_default();
    r.verdict("certificate verified", clauses.is_empty(), detail);
    Ok(r)
}
