use std::collections::HashMap;

use recur_complex::{Complex, Dart};

use crate::diagram::{rev, DEdge, PlanarDiagram, Region};
use crate::presentation::Presentation;
use crate::word::{letter, min_rotation, reduce_cyclic_with, Alphabet, Letter, Word};

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub diagram: PlanarDiagram,
    pub area: usize,
}

/// Partial diagram: filled regions plus the cycle bounding the unfilled part.
#[derive(Debug, Clone)]
struct Build {
    edges: Vec<(usize, usize, Letter)>,
    regions: Vec<Vec<Dart>>,
    vparent: Vec<usize>,
    /// Edge merged into another: `dart(e, x) == dart(target, x ^ flip)`.
    emap: Vec<Option<(usize, bool)>>,
    polygon: Vec<Dart>,
}

struct Bubble;

type Item = (Letter, Dart);

impl Build {
    fn vroot(&self, mut v: usize) -> usize {
        while self.vparent[v] != v {
            v = self.vparent[v];
        }
        v
    }

    fn resolve(&self, mut d: Dart) -> Dart {
        while let Some((e, flip)) = self.emap[d.edge] {
            d = Dart::new(e, d.forward ^ flip);
        }
        d
    }

    fn start(&self, d: Dart) -> usize {
        let d = self.resolve(d);
        let (a, b, _) = self.edges[d.edge];
        self.vroot(if d.forward { a } else { b })
    }

    fn end(&self, d: Dart) -> usize {
        self.start(rev(d))
    }

    fn new_vertex(&mut self) -> usize {
        self.vparent.push(self.vparent.len());
        self.vparent.len() - 1
    }

    fn new_edge(&mut self, a: usize, b: usize, l: Letter) -> Dart {
        self.emap.push(None);
        if l > 0 {
            self.edges.push((a, b, l));
            Dart::new(self.edges.len() - 1, true)
        } else {
            self.edges.push((b, a, -l));
            Dart::new(self.edges.len() - 1, false)
        }
    }

    /// Zips `d2` onto the reverse of `d1`; the two are consecutive on the unfilled cycle.
    fn fold(&mut self, d1: Dart, d2: Dart, remaining: usize) -> Result<(), Bubble> {
        let (p, q) = (self.start(d1), self.end(d2));
        if p == q && remaining > 0 {
            return Err(Bubble);
        }
        let (r1, r2) = (self.resolve(d1), self.resolve(d2));
        if r1.edge != r2.edge {
            self.emap[r2.edge] = Some((r1.edge, r1.forward == r2.forward));
        }
        if p != q {
            self.vparent[q] = p;
        }
        Ok(())
    }

    fn reduce(&mut self, items: Vec<Item>) -> Result<Vec<Item>, Bubble> {
        reduce_cyclic_with(items, |a: &Item, b: &Item| a.0 == -b.0, |a, b, rem| self.fold(a.1, b.1, rem))
    }

    /// Glues a region labelled `r` along `items[i..i + k]` (cyclically).
    fn attach(&mut self, items: &[Item], i: usize, r: &[Letter], k: usize) -> Result<Vec<Item>, Bubble> {
        let n = items.len();
        let rot: Vec<Item> = (0..n).map(|j| items[(i + j) % n]).collect();
        let s: Vec<Dart> = rot[..k].iter().map(|x| x.1).collect();
        let a = self.start(s[0]);
        let t = self.end(s[k - 1]);
        let mut boundary = s;
        let mut rest: Vec<Item> = Vec::new();
        if k < r.len() {
            let tail = &r[k..];
            let mut prev = t;
            let mut q = Vec::new();
            for (j, &l) in tail.iter().enumerate() {
                let next = if j + 1 == tail.len() { a } else { self.new_vertex() };
                q.push(self.new_edge(prev, next, l));
                prev = next;
            }
            rest.extend(q.iter().zip(tail).rev().map(|(&d, &l)| (-l, rev(d))));
            boundary.extend(q);
        } else if a != t {
            self.vparent[t] = a;
        }
        self.regions.push(boundary);
        rest.extend_from_slice(&rot[k..]);
        self.reduce(rest)
    }

    fn finish(&self, alphabet: &Alphabet) -> PlanarDiagram {
        let mut vid = HashMap::new();
        for v in 0..self.vparent.len() {
            let r = self.vroot(v);
            let next = vid.len();
            vid.entry(r).or_insert(next);
        }
        let mut eid = HashMap::new();
        let mut edges = Vec::new();
        for (e, &(a, b, l)) in self.edges.iter().enumerate() {
            if self.emap[e].is_none() {
                eid.insert(e, edges.len());
                edges.push(DEdge { id: format!("e{}", edges.len()), from: vid[&self.vroot(a)], to: vid[&self.vroot(b)], label: l });
            }
        }
        let map = |d: Dart| {
            let d = self.resolve(d);
            Dart::new(eid[&d.edge], d.forward)
        };
        let mut vertices = vec![String::new(); vid.len()];
        for &k in vid.values() {
            vertices[k] = format!("v{k}");
        }
        PlanarDiagram {
            alphabet: alphabet.clone(),
            vertices,
            edges,
            regions: self
                .regions
                .iter()
                .enumerate()
                .map(|(i, b)| Region { id: format!("R{}", i + 1), boundary: b.iter().map(|&d| map(d)).collect() })
                .collect(),
            outer: self.polygon.iter().rev().map(|&d| rev(map(d))).collect(),
        }
    }
}

fn start(u: &[Letter]) -> Result<(Build, Vec<Item>), Bubble> {
    let n = u.len();
    let mut b = Build {
        edges: Vec::new(),
        regions: Vec::new(),
        vparent: (0..n.max(1)).collect(),
        emap: Vec::new(),
        polygon: Vec::new(),
    };
    let mut items = Vec::new();
    for (j, &l) in u.iter().enumerate() {
        let d = b.new_edge(j, (j + 1) % n, l);
        b.polygon.push(d);
        items.push((l, d));
    }
    let items = b.reduce(items)?;
    Ok((b, items))
}

/// Moves available from a boundary: position, symmetrized relator index, matched prefix length.
fn moves(items: &[Item], sym: &[Word]) -> Vec<(usize, usize, usize)> {
    let n = items.len();
    let mut out = Vec::new();
    for i in 0..n {
        for (ri, r) in sym.iter().enumerate() {
            let mut k = 0;
            while k < r.len() && k < n && items[(i + k) % n].0 == r[k] {
                k += 1;
            }
            for kk in (1..=k).rev() {
                out.push((i, ri, kk));
            }
        }
    }
    out
}

struct Solver<'a> {
    sym: &'a [Word],
    /// Largest budget known to be insufficient for a cyclic word.
    fails: HashMap<Word, usize>,
}

impl Solver<'_> {
    /// Returns the completed build and whether any branch hit a non-planar fold.
    fn solve(&mut self, b: &Build, items: &[Item], budget: usize) -> (Option<Build>, bool) {
        if items.is_empty() {
            return (Some(b.clone()), false);
        }
        if budget == 0 {
            return (None, false);
        }
        let key = min_rotation(&items.iter().map(|x| x.0).collect::<Word>());
        if self.fails.get(&key).is_some_and(|&f| f >= budget) {
            return (None, false);
        }
        let mut tainted = false;
        for (i, ri, k) in moves(items, self.sym) {
            let mut nb = b.clone();
            match nb.attach(items, i, &self.sym[ri], k) {
                Err(Bubble) => tainted = true,
                Ok(next) => {
                    let (found, t) = self.solve(&nb, &next, budget - 1);
                    if found.is_some() {
                        return (found, false);
                    }
                    tainted |= t;
                }
            }
        }
        if !tainted {
            let f = self.fails.entry(key).or_insert(0);
            *f = (*f).max(budget);
        }
        (None, tainted)
    }
}

/// Least-area disc diagram with boundary word `u`, if one exists within `max_area`.
///
/// The boundary need not be reduced: cancelling letters become tree edges.
pub fn search_disc_diagram(p: &Presentation, u: &[Letter], max_area: usize) -> Option<SearchOutcome> {
    let sym = p.symmetrized();
    let (b0, items0) = start(u).ok()?;
    if items0.is_empty() {
        return Some(SearchOutcome { diagram: b0.finish(&p.alphabet), area: 0 });
    }
    let first = moves(&items0, &sym);
    for area in 1..=max_area {
        let hit = recur_par::find_first(first.len(), |m| {
            let (i, ri, k) = first[m];
            let mut b = b0.clone();
            let next = b.attach(&items0, i, &sym[ri], k).ok()?;
            let mut solver = Solver { sym: &sym, fails: HashMap::new() };
            solver.solve(&b, &next, area - 1).0
        });
        if let Some((_, b)) = hit {
            let diagram = b.finish(&p.alphabet);
            return Some(SearchOutcome { area: diagram.regions.len(), diagram });
        }
    }
    None
}

/// Presentation of the fundamental group of a 2-complex's edge graph modulo its faces:
/// one generator per edge, one relator per face boundary.
pub fn complex_presentation(c: &Complex) -> Presentation {
    let alphabet = Alphabet::new(&c.edges.iter().map(|e| e.id.clone()).collect::<Vec<_>>());
    let relators = c.faces.iter().map(|f| path_word(&f.boundary)).collect();
    Presentation::new(alphabet, relators)
}

pub fn path_word(path: &[Dart]) -> Word {
    path.iter().map(|d| letter(d.edge, !d.forward)).collect()
}

/// Disc diagram in a complex for a closed edge path; labels are the complex's edge ids.
pub fn search_complex(c: &Complex, path: &[Dart], max_area: usize) -> Option<SearchOutcome> {
    search_disc_diagram(&complex_presentation(c), &path_word(path), max_area)
}
