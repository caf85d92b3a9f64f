use std::collections::{BTreeSet, HashMap, VecDeque};

use recur_diagrams::word::gen_of;
use recur_diagrams::Letter;

use crate::graph::LabeledGraph;

/// Coxeter words are sequences of generator indices.
pub type CoxWord = Vec<usize>;

pub fn unsigned(w: &[Letter]) -> CoxWord {
    w.iter().map(|&l| gen_of(l)).collect()
}

fn alternating(s: usize, t: usize, m: u32) -> Vec<usize> {
    (0..m as usize).map(|i| if i % 2 == 0 { s } else { t }).collect()
}

/// All words reachable from `w` by braid moves.
pub fn braid_class(w: &[usize], g: &LabeledGraph) -> BTreeSet<CoxWord> {
    let mut moves: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &(s, t, m) in &g.edges {
        moves.push((alternating(s, t, m), alternating(t, s, m)));
        moves.push((alternating(t, s, m), alternating(s, t, m)));
    }
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for (from, to) in &moves {
            let n = from.len();
            if n > u.len() {
                continue;
            }
            for i in 0..=u.len() - n {
                if u[i..i + n] == from[..] {
                    let mut v = u.clone();
                    v[i..i + n].copy_from_slice(to);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    seen
}

/// A reduced word for the element, by saturating braid moves and deleting squares.
pub fn tits_reduce(w: &[usize], g: &LabeledGraph) -> CoxWord {
    let mut cur = w.to_vec();
    'outer: loop {
        for u in braid_class(&cur, g) {
            if let Some(i) = u.windows(2).position(|p| p[0] == p[1]) {
                cur = [&u[..i], &u[i + 2..]].concat();
                continue 'outer;
            }
        }
        return cur;
    }
}

pub fn tits_coxeter_word_problem(w: &[Letter], g: &LabeledGraph) -> bool {
    tits_reduce(&unsigned(w), g).is_empty()
}

/// Normal forms (lexicographically least reduced words) with cached braid classes.
pub struct CoxeterOracle<'g> {
    g: &'g LabeledGraph,
    classes: HashMap<CoxWord, BTreeSet<CoxWord>>,
}

impl<'g> CoxeterOracle<'g> {
    pub fn new(g: &'g LabeledGraph) -> Self {
        CoxeterOracle { g, classes: HashMap::new() }
    }

    fn class(&mut self, reduced: CoxWord) -> (CoxWord, &BTreeSet<CoxWord>) {
        let g = self.g;
        let cls = braid_class(&reduced, g);
        let nf = cls.iter().next().cloned().unwrap_or_default();
        let entry = self.classes.entry(nf.clone()).or_insert(cls);
        (nf, entry)
    }

    pub fn normal_form(&mut self, w: &[usize]) -> CoxWord {
        let r = tits_reduce(w, self.g);
        self.class(r).0
    }

    /// Normal form of `nf · s`, where `nf` is already a normal form.
    pub fn times(&mut self, nf: &[usize], s: usize) -> CoxWord {
        if !self.classes.contains_key(nf) {
            self.class(nf.to_vec());
        }
        let shorter = self.classes[nf].iter().find(|u| u.last() == Some(&s)).map(|u| u[..u.len() - 1].to_vec());
        match shorter {
            Some(u) => self.class(u).0,
            None => {
                let mut u = nf.to_vec();
                u.push(s);
                self.class(u).0
            }
        }
    }
}
