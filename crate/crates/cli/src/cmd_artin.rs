use std::path::Path;

use recur_artin::{
    all_hypergraphs, block_factorization, build_cayley_ball_capped, classify_graph, dihedral_word_problem, example_a2_report,
    hypergraph_dot, probe_all, standard_presentation, tits_coxeter_word_problem, CayleyBall, Hypergraph, LabeledGraph, Target,
};
use recur_complex::Complex;
use recur_diagrams::word::gen_of;

use crate::input::{self, write};
use crate::{ArtinCmd, CliError, GraphArg, RunReport};

fn target(coxeter: bool) -> Target {
    if coxeter {
        Target::Coxeter
    } else {
        Target::Artin
    }
}

fn labels(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("bad label {x:?}")))).collect()
}

/// Inline `edge:M`, `path:M`, `triangle:A,B,C`, otherwise a graph file.
pub fn graph(spec: &str) -> Result<(LabeledGraph, Vec<u8>), CliError> {
    let inline = match spec.split_once(':') {
        Some(("edge" | "dihedral", m)) => Some(LabeledGraph::dihedral(labels(m)?[0])),
        Some(("path", m)) => Some(LabeledGraph::path(labels(m)?[0])),
        Some(("triangle", ms)) => match labels(ms)?.as_slice() {
            &[a, b, c] => Some(LabeledGraph::triangle(a, b, c)),
            _ => return Err(CliError::Usage(format!("triangle needs three labels: {spec:?}"))),
        },
        _ => None,
    };
    match inline {
        Some(g) => Ok((g, spec.as_bytes().to_vec())),
        None => {
            let l = input::graph(Path::new(spec))?;
            Ok((l.value, l.bytes))
        }
    }
}

fn ball(g: &GraphArg, coxeter: bool, radius: usize, cap: usize) -> Result<(CayleyBall, Vec<u8>), CliError> {
    let (gr, bytes) = graph(&g.graph)?;
    Ok((build_cayley_ball_capped(&gr, target(coxeter), radius, cap)?, bytes))
}

fn ball_line(b: &CayleyBall) -> String {
    let c = &b.complex;
    format!(
        "{} ball of radius {}: V={} E={} F={}",
        if b.target == Target::Coxeter { "coxeter" } else { "artin" },
        b.radius,
        c.vertices.len(),
        c.edges.len(),
        c.faces.len()
    )
}

fn tree_verdicts(r: &mut RunReport, c: &Complex, hs: &[Hypergraph]) {
    r.line(format!("hypergraph components {}", hs.len()));
    let bad = hs.iter().find(|h| !h.is_forest);
    let detail = bad
        .and_then(|h| h.cycle.as_ref())
        .map(|cyc| {
            let fs: Vec<&str> = cyc.iter().map(|e| c.faces[e.face].id.as_str()).collect();
            format!("cycle of length {} through {}", cyc.len(), fs.join(" "))
        })
        .unwrap_or_default();
    r.verdict("every hypergraph is a tree", bad.is_none(), detail);
    r.line("note: only the finite complex is examined; tree-ness beyond it is not certified");
}

pub fn run(cmd: &ArtinCmd) -> Result<RunReport, CliError> {
    match cmd {
        ArtinCmd::Present { g, coxeter } => {
            let (gr, bytes) = graph(&g.graph)?;
            let mut r = RunReport::new("artin present");
            r.digest(&[&bytes]);
            let p = standard_presentation(&gr, target(*coxeter));
            let rels: Vec<String> = p.relators.iter().map(|w| p.show(w)).collect();
            r.line(format!("< {} | {} >", p.alphabet.0.join(", "), rels.join(", ")));
            Ok(r)
        }
        ArtinCmd::Classify { g } => {
            let (gr, bytes) = graph(&g.graph)?;
            let mut r = RunReport::new("artin classify");
            r.digest(&[&bytes]);
            let f = classify_graph(&gr);
            r.line(format!("graph {gr}"));
            r.line(format!("extra-large: {}", f.extra_large));
            r.line(format!("triangle with a 2: {}", f.triangle_with_two));
            r.line(format!("2-dimensional: {}", f.two_dimensional));
            r.line(format!("square with three 2s: {}", f.square_with_three_twos));
            Ok(r)
        }
        ArtinCmd::Word { g, word, coxeter } => {
            let (gr, bytes) = graph(&g.graph)?;
            let alphabet = gr.alphabet();
            let w = input::word(&alphabet, word)?;
            let mut r = RunReport::new("artin word");
            r.digest(&[&bytes, word.as_bytes()]);
            if let [(s, t, m)] = gr.edges[..] {
                // Rename the edge's generators to 0 and 1.
                let local: Vec<i32> = w
                    .iter()
                    .map(|&l| {
                        let k = gen_of(l);
                        let x = if k == s { 1 } else if k == t { 2 } else { 3 };
                        if l < 0 { -x } else { x }
                    })
                    .collect();
                let v = dihedral_word_problem(&local, m, target(*coxeter))?;
                let sub = recur_diagrams::Alphabet::new(&[gr.vertices[s].as_str(), gr.vertices[t].as_str()]);
                r.line(format!("normal form {}", v.show(&sub)));
                r.verdict("trivial", v.trivial, "");
            } else if *coxeter {
                r.verdict("trivial", tits_coxeter_word_problem(&w, &gr), "");
            } else {
                return Err(CliError::Usage("the Artin word problem is implemented for a single edge only".into()));
            }
            Ok(r)
        }
        ArtinCmd::Ball { g, radius, cap, coxeter, out } => {
            let (b, bytes) = ball(g, *coxeter, *radius, *cap)?;
            let mut r = RunReport::new("artin ball");
            r.digest(&[&bytes]);
            r.line(ball_line(&b));
            r.line(format!("chi {}", b.complex.euler_characteristic()));
            if let Some(p) = &out.output {
                r.artifact(write(p, &b.complex.to_json())?);
            }
            Ok(r)
        }
        ArtinCmd::Hypergraph { graph: spec, complex, radius, cap, coxeter, dot } => {
            let mut r = RunReport::new("artin hypergraph");
            let c = match (spec, complex) {
                (_, Some(path)) => {
                    let l = input::complex(path)?;
                    r.digest(&[&l.bytes]);
                    l.value
                }
                (Some(s), None) => {
                    let (b, bytes) = ball(&GraphArg { graph: s.clone() }, *coxeter, *radius, *cap)?;
                    r.digest(&[&bytes]);
                    r.line(ball_line(&b));
                    b.complex
                }
                (None, None) => return Err(CliError::Usage("give a graph or --complex FILE".into())),
            };
            let hs = all_hypergraphs(&c)?;
            let embedded = hs.iter().filter(|h| h.embedded()).count();
            r.line(format!("embedded components {embedded}"));
            tree_verdicts(&mut r, &c, &hs);
            if let Some(p) = dot {
                r.artifact(write(p, &hypergraph_dot(&c, &hs))?);
            }
            Ok(r)
        }
        ArtinCmd::ExampleA2 { m, trace, dot, out } => {
            let rep = example_a2_report(*m)?;
            let mut r = RunReport::new("artin example-a2");
            r.digest(&[m.to_string().as_bytes()]);
            r.line(format!("12-region example over the triangle (2, {m}, {m})"));
            r.line(format!("regions: {}", rep.regions()));
            r.line(format!("central labels: {}", rep.central_labels.join(" ")));
            r.verdict("valid", rep.verdict.valid(), "");
            r.verdict("reduced", rep.verdict.reduced(), "");
            if *trace {
                let c = rep.diagram.to_complex()?;
                match &rep.cycle {
                    Some(cyc) => r.line(format!("hypergraph cycle of length {}: {}", cyc.len(), cyc.join(" "))),
                    None => r.line("hypergraph cycle: none"),
                }
                r.line(format!("cycle through the central squares: {}", rep.cycle_through_squares));
                tree_verdicts(&mut r, &c, &rep.hypergraphs);
                if let Some(p) = dot {
                    r.artifact(write(p, &hypergraph_dot(&c, &rep.hypergraphs))?);
                }
            }
            if let Some(p) = &out.output {
                r.artifact(write(p, &rep.diagram.to_json())?);
            }
            Ok(r)
        }
        ArtinCmd::Blocks { g, word } => {
            let (gr, bytes) = graph(&g.graph)?;
            let alphabet = gr.alphabet();
            let w = input::word(&alphabet, word)?;
            let mut r = RunReport::new("artin blocks");
            r.digest(&[&bytes, word.as_bytes()]);
            for b in block_factorization(&w, &gr)? {
                let gens: Vec<&str> = b.gens.iter().map(|&k| gr.vertices[k].as_str()).collect();
                let mut s = format!("{:>3} {} over {{{}}}", b.start, alphabet.show(&b.word), gens.join(","));
                if let Some(m) = b.label {
                    s += &format!(" m={m}");
                }
                if b.no_block {
                    s += " no block";
                }
                if let Some(f) = b.form {
                    s += &format!(" form {f}");
                }
                if let Some(e) = b.coxeter {
                    s += &format!(" image {e}");
                }
                r.line(s);
            }
            Ok(r)
        }
        ArtinCmd::WallProbe { g, radius, cap, show } => {
            let (b, bytes) = ball(g, true, *radius, *cap)?;
            let mut r = RunReport::new("artin wall-probe");
            r.digest(&[&bytes]);
            r.line(ball_line(&b));
            let flags = classify_graph(&b.graph);
            if flags.triangle_with_two {
                r.line("graph has a triangle with an edge labelled 2");
            }
            let s = probe_all(&b)?;
            r.line(format!(
                "adjacent pairs {} trials {} preferred wall verified {}",
                s.adjacent_pairs, s.trials, s.preferred_ok
            ));
            for f in s.failures.iter().take(*show) {
                r.line(f.report(&b.complex).trim_end().to_string());
            }
            r.verdict("disjoint or equal wall through tau", s.passed(), format!("{} failure(s)", s.failures.len()));
            Ok(r)
        }
    }
}
