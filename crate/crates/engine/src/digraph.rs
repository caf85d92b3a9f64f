use std::collections::VecDeque;

use num_rational::BigRational;
use num_traits::{One, Zero};
use recur_complex::Complex;

use crate::tokens::DirectionSet;
use crate::EngineError;

/// Arcs a -> b for b in H(I(a)), weighted 1/(deg x - 1).
#[derive(Debug, Clone)]
pub struct TransitionDigraph {
    pub set: DirectionSet,
    /// Successors with exact probabilities, ascending by target.
    pub succ: Vec<Vec<(usize, BigRational)>>,
    /// Tokens whose chord ends on a degree-1 edge.
    pub dead_ends: Vec<usize>,
    /// Tokens where I is undefined.
    pub broken: Vec<usize>,
}

pub fn build_markov(c: &Complex) -> Result<TransitionDigraph, EngineError> {
    let set = DirectionSet::instantiate(c)?;
    Ok(TransitionDigraph::from_set(set))
}

impl TransitionDigraph {
    pub fn from_set(set: DirectionSet) -> Self {
        let mut succ = Vec::with_capacity(set.len());
        let mut dead_ends = Vec::new();
        let mut broken = Vec::new();
        for a in 0..set.len() {
            let Ok(ia) = set.i_map[a] else {
                broken.push(a);
                succ.push(Vec::new());
                continue;
            };
            let deg = set.traversals[set.tokens[ia].edge].len();
            if deg < 2 {
                dead_ends.push(a);
                succ.push(Vec::new());
                continue;
            }
            let p = BigRational::new(1.into(), ((deg - 1) as i64).into());
            let mut row: Vec<(usize, BigRational)> = set.h_of(ia).iter().map(|&b| (b, p.clone())).collect();
            row.sort_by_key(|x| x.0);
            succ.push(row);
        }
        TransitionDigraph { set, succ, dead_ends, broken }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.succ[a].iter().any(|x| x.0 == b)
    }

    pub fn remove_arc(&mut self, a: usize, b: usize) -> bool {
        let before = self.succ[a].len();
        self.succ[a].retain(|x| x.0 != b);
        before != self.succ[a].len()
    }

    pub fn row_sum(&self, a: usize) -> BigRational {
        self.succ[a].iter().fold(BigRational::zero(), |s, x| s + &x.1)
    }

    pub fn column_sums(&self) -> Vec<BigRational> {
        let mut cols = vec![BigRational::zero(); self.len()];
        for row in &self.succ {
            for (b, p) in row {
                cols[*b] += p;
            }
        }
        cols
    }

    /// Predecessor lists.
    pub fn pred(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.len()];
        for (a, row) in self.succ.iter().enumerate() {
            for (b, _) in row {
                pred[*b].push(a);
            }
        }
        pred
    }

    /// Every node reachable from `a` by a path of at least one arc.
    pub fn reachable_from(&self, a: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for (b, _) in &self.succ[a] {
            if !seen[*b] {
                seen[*b] = true;
                queue.push_back(*b);
            }
        }
        while let Some(x) = queue.pop_front() {
            for (y, _) in &self.succ[x] {
                if !seen[*y] {
                    seen[*y] = true;
                    queue.push_back(*y);
                }
            }
        }
        seen
    }

    /// Shortest path from `from` to `to` with at least one arc, lexicographically least among shortest.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        // Distances to `to`, via reverse BFS.
        let pred = self.pred();
        let mut dist = vec![usize::MAX; self.len()];
        dist[to] = 0;
        let mut queue = VecDeque::from([to]);
        while let Some(x) = queue.pop_front() {
            for &y in &pred[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        // First step must leave `from` even when from == to.
        let first = self.succ[from].iter().map(|x| x.0).filter(|&b| dist[b] != usize::MAX).min_by_key(|&b| (dist[b], b))?;
        let mut path = vec![from, first];
        let mut cur = first;
        while cur != to {
            let next = self.succ[cur].iter().map(|x| x.0).filter(|&b| dist[b] + 1 == dist[cur]).min().expect("distance decreases");
            path.push(next);
            cur = next;
        }
        Some(path)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stationarity {
    Uniform,
    /// A column whose exact sum differs from 1.
    Violated { token: usize, column_sum: BigRational },
}

pub fn check_stationary_uniform(d: &TransitionDigraph) -> Stationarity {
    for (b, s) in d.column_sums().into_iter().enumerate() {
        if !s.is_one() {
            return Stationarity::Violated { token: b, column_sum: s };
        }
    }
    Stationarity::Uniform
}

/// The cycle I(a), b, ..., I(a) through the arc I(a) -> b, for b in H(a).
pub fn find_recurrent_cycle(d: &TransitionDigraph, a: usize, b: usize) -> Result<Vec<usize>, EngineError> {
    let n = d.len();
    if a >= n {
        return Err(EngineError::UnknownToken(a.to_string()));
    }
    if b >= n || !d.set.h_of(a).contains(&b) {
        return Err(EngineError::NotContinuation { a: a.to_string(), b: b.to_string() });
    }
    let ia = d.set.i_of(a)?;
    let not_rec = || EngineError::NotRecurrent { from: ia.to_string(), to: b.to_string() };
    if !d.has_arc(ia, b) {
        return Err(not_rec());
    }
    let tail = d.shortest_path_to(b, ia).ok_or_else(not_rec)?;
    let mut cycle = vec![ia];
    cycle.extend(tail);
    Ok(cycle)
}

impl TransitionDigraph {
    /// Shortest path allowing zero arcs when `from == to`.
    fn shortest_path_to(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from == to {
            return Some(vec![from]);
        }
        self.shortest_path(from, to)
    }
}
