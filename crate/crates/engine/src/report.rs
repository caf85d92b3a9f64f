use recur_complex::Complex;

use crate::digraph::TransitionDigraph;
use crate::tokens::{DirectionSet, IFailure};
use crate::EngineError;

/// Verdict for condition (v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VVerdict {
    /// No simple-connectivity assertion was given.
    NotEvaluated,
    /// Asserted simply connected, but the rational first Betti number is positive.
    Contradicted { b1: usize },
    Pass,
    Fail,
}

/// Digraph facts behind (v): cycles and returns to I(a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    pub acyclic: bool,
    /// A shortest directed cycle through the least token on any cycle.
    pub cycle: Option<Vec<usize>>,
    /// A path a ~> I(a) of at least one arc.
    pub return_path: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct RecurrenceReport {
    /// (i): token count per face.
    pub per_face: Vec<usize>,
    /// (ii): (token, face, position) where a continuation is missing.
    pub h_missing: Vec<(usize, usize, usize)>,
    /// (iii): tokens where I is undefined or leaves A.
    pub i_failures: Vec<(usize, IFailure)>,
    /// (iv): edges of degree >= 3 with no perpendicular token.
    pub iv_failures: Vec<usize>,
    /// (iv) was decided while (ii) failed, so "some face" and "every face" may differ.
    pub iv_depends_on_ii: bool,
    pub reach: Reachability,
    pub v: VVerdict,
    pub b1: usize,
    pub digraph: TransitionDigraph,
}

impl RecurrenceReport {
    pub fn ii(&self) -> bool {
        self.h_missing.is_empty()
    }
    pub fn iii(&self) -> bool {
        self.i_failures.is_empty()
    }
    pub fn iv(&self) -> bool {
        self.iv_failures.is_empty()
    }
    /// (i) to (iv) all hold.
    pub fn local_conditions(&self) -> bool {
        self.ii() && self.iii() && self.iv()
    }
}

/// Runs (i) to (iv) and gathers the digraph facts; (v) only under a simple-connectivity assertion.
pub fn check_recurrence(c: &Complex, assume_simply_connected: bool) -> Result<RecurrenceReport, EngineError> {
    let set = DirectionSet::instantiate(c)?;
    let mut per_face = vec![0; c.faces.len()];
    for t in &set.tokens {
        per_face[t.face] += 1;
    }
    let i_failures: Vec<_> =
        set.i_map.iter().enumerate().filter_map(|(a, r)| r.as_ref().err().map(|e| (a, e.clone()))).collect();
    let h_missing = set.h_missing.clone();
    let mut iv_failures = Vec::new();
    for (e, trav) in set.traversals.iter().enumerate() {
        if trav.len() >= 3 && !set.tokens.iter().any(|t| t.edge == e && t.is_perpendicular()) {
            iv_failures.push(e);
        }
    }
    let iv_depends_on_ii = !h_missing.is_empty();
    let digraph = TransitionDigraph::from_set(set);
    let reach = reachability(&digraph);
    let b1 = c.betti().b1;
    let v = if !assume_simply_connected {
        VVerdict::NotEvaluated
    } else if b1 > 0 {
        VVerdict::Contradicted { b1 }
    } else if reach.acyclic && reach.return_path.is_none() {
        VVerdict::Pass
    } else {
        VVerdict::Fail
    };
    Ok(RecurrenceReport { per_face, h_missing, i_failures, iv_failures, iv_depends_on_ii, reach, v, b1, digraph })
}

pub(crate) fn reachability(d: &TransitionDigraph) -> Reachability {
    let n = d.len();
    let rows = recur_par::map_range(n, |a| {
        let seen = d.reachable_from(a);
        let on_cycle = seen[a];
        let returns = d.set.i_map[a].as_ref().ok().copied().filter(|&ia| seen[ia]);
        (on_cycle, returns)
    });
    let cyc = rows.iter().position(|r| r.0);
    let ret = rows.iter().enumerate().find_map(|(a, r)| r.1.map(|ia| (a, ia)));
    Reachability {
        acyclic: cyc.is_none(),
        cycle: cyc.and_then(|a| d.shortest_path(a, a)),
        return_path: ret.and_then(|(a, ia)| d.shortest_path(a, ia)),
    }
}
