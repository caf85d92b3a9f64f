use std::collections::BTreeSet;
use std::fmt::Write;

use recur_complex::Complex;

use crate::ball::CayleyBall;
use crate::hypergraph::{all_hypergraphs, trace_hypergraph, Hypergraph, Meeting};
use crate::ArtinError;

pub const TRUNCATION_CAVEAT: &str =
    "walls are traced inside a finite ball; a meeting or a missing wall here may change in a larger ball";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    /// Boundary position in tau of the edge the wall was traced from.
    pub pos: usize,
    pub wall: Hypergraph,
    pub equal: bool,
    pub meeting: Option<Meeting>,
}

impl Candidate {
    pub fn verified(&self) -> bool {
        self.equal || self.meeting.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeOutcome {
    pub sigma: usize,
    pub tau: usize,
    pub shared: usize,
    /// The selection rule that picked the preferred wall.
    pub rule: &'static str,
    pub preferred: usize,
    /// Index into `candidates` of the returned wall.
    pub chosen: Option<usize>,
    pub candidates: Vec<Candidate>,
    pub caveat: Option<&'static str>,
}

impl ProbeOutcome {
    pub fn success(&self) -> bool {
        self.chosen.is_some()
    }

    pub fn report(&self, c: &Complex) -> String {
        let mut s = format!(
            "sigma {} tau {} shared edge {}: rule {}\n",
            c.faces[self.sigma].id, c.faces[self.tau].id, c.edges[self.shared].id, self.rule
        );
        for (i, cand) in self.candidates.iter().enumerate() {
            let edge = &c.edges[c.faces[self.tau].boundary[cand.pos].edge].id;
            let status = match (cand.equal, cand.meeting) {
                (true, _) => "equal".to_string(),
                (false, None) => "disjoint".to_string(),
                (false, Some(Meeting::Edge(e))) => format!("meets at edge {}", c.edges[e].id),
                (false, Some(Meeting::Face(f))) => format!("meets in face {}", c.faces[f].id),
            };
            let mark = if Some(i) == self.chosen { " <- chosen" } else { "" };
            let _ = writeln!(s, "  wall through {edge}: {status}{mark}");
        }
        if let Some(cv) = self.caveat {
            let _ = writeln!(s, "  caveat: {cv}");
        }
        s
    }
}

fn shares_vertex(c: &Complex, e: usize, f: usize) -> Option<usize> {
    let (a, b) = (c.edges[e].ends, c.edges[f].ends);
    a.iter().copied().find(|v| b.contains(v))
}

/// Looks for a wall through `tau` that is disjoint from or equal to `wall_sigma`.
pub fn coxeter_wall_probe(
    ball: &CayleyBall,
    sigma: usize,
    tau: usize,
    wall_sigma: &Hypergraph,
) -> Result<ProbeOutcome, ArtinError> {
    let c = &ball.complex;
    let (sb, tb) = (&c.faces[sigma].boundary, &c.faces[tau].boundary);
    let shared = sb
        .iter()
        .map(|d| d.edge)
        .find(|e| tb.iter().any(|d| d.edge == *e) && sigma != tau)
        .ok_or_else(|| ArtinError::NotAdjacent(c.faces[sigma].id.clone(), c.faces[tau].id.clone()))?;
    if !sb.iter().any(|d| wall_sigma.contains_edge(d.edge)) {
        return Err(ArtinError::WallMissesSigma(c.faces[sigma].id.clone()));
    }
    let k = tb.len();
    let epos = tb.iter().position(|d| d.edge == shared).unwrap();
    let mut candidates = Vec::new();
    let mut seen = BTreeSet::new();
    for (pos, d) in tb.iter().enumerate().take(k / 2) {
        let wall = trace_hypergraph(c, d.edge)?;
        if !seen.insert(wall.vertices.clone()) {
            continue;
        }
        let equal = wall.vertices == wall_sigma.vertices;
        let meeting = if equal { None } else { wall.meets(wall_sigma) };
        candidates.push(Candidate { pos, wall, equal, meeting });
    }
    let through = |e: usize| candidates.iter().position(|cd| cd.wall.contains_edge(e)).unwrap();
    let (rule, preferred) = if wall_sigma.contains_edge(shared) {
        ("the wall through the shared edge", through(shared))
    } else if k == 4 {
        ("square: the wall through tau missing the shared edge", through(tb[(epos + 1) % 4].edge))
    } else {
        let spos = sb.iter().position(|d| d.edge == shared).unwrap();
        let n = sb.len();
        let nbrs = [sb[(spos + n - 1) % n].edge, sb[(spos + 1) % n].edge];
        let f = nbrs.iter().copied().find(|&f| wall_sigma.contains_edge(f)).unwrap_or(nbrs[0]);
        let v = shares_vertex(c, shared, f).unwrap_or(c.edges[shared].ends[0]);
        let g = [tb[(epos + k - 1) % k].edge, tb[(epos + 1) % k].edge]
            .into_iter()
            .find(|&g| shares_vertex(c, shared, g).is_some_and(|u| u != v))
            .unwrap_or(tb[(epos + 1) % k].edge);
        ("the wall through the edge g of tau at the far end of the shared edge", through(g))
    };
    let chosen = if candidates[preferred].verified() {
        Some(preferred)
    } else {
        candidates.iter().position(Candidate::verified)
    };
    Ok(ProbeOutcome {
        sigma,
        tau,
        shared,
        rule,
        preferred,
        chosen,
        candidates,
        caveat: chosen.is_none().then_some(TRUNCATION_CAVEAT),
    })
}

#[derive(Debug, Clone, Default)]
pub struct ProbeSummary {
    pub adjacent_pairs: usize,
    pub trials: usize,
    /// Trials where the preferred wall itself verified.
    pub preferred_ok: usize,
    pub failures: Vec<ProbeOutcome>,
}

impl ProbeSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every ordered pair of faces sharing an edge, with every wall through the first.
pub fn probe_all(ball: &CayleyBall) -> Result<ProbeSummary, ArtinError> {
    let c = &ball.complex;
    let walls = all_hypergraphs(c)?;
    let wall_of = |e: usize| walls.iter().find(|w| w.contains_edge(e)).unwrap();
    let per_sigma = recur_par::map_range(c.faces.len(), |sigma| -> Result<ProbeSummary, ArtinError> {
        let mut out = ProbeSummary::default();
        let se: BTreeSet<usize> = c.faces[sigma].boundary.iter().map(|d| d.edge).collect();
        for tau in (0..c.faces.len()).filter(|&t| t != sigma) {
            if !c.faces[tau].boundary.iter().any(|d| se.contains(&d.edge)) {
                continue;
            }
            out.adjacent_pairs += 1;
            let mut done = BTreeSet::new();
            for d in &c.faces[sigma].boundary {
                let w = wall_of(d.edge);
                if !done.insert(w.vertices.clone()) {
                    continue;
                }
                let o = coxeter_wall_probe(ball, sigma, tau, w)?;
                out.trials += 1;
                if o.chosen == Some(o.preferred) {
                    out.preferred_ok += 1;
                }
                if !o.success() {
                    out.failures.push(o);
                }
            }
        }
        Ok(out)
    });
    let mut total = ProbeSummary::default();
    for part in per_sigma {
        let part = part?;
        total.adjacent_pairs += part.adjacent_pairs;
        total.trials += part.trials;
        total.preferred_ok += part.preferred_ok;
        total.failures.extend(part.failures);
    }
    Ok(total)
}
