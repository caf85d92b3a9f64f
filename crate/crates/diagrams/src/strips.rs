use std::collections::{BTreeSet, HashMap};
use std::fmt;

use recur_complex::Dart;

use crate::diagram::{find, rev, PlanarDiagram, Side};

/// A maximal boundary path of a region between vertices of valence other than 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub darts: Vec<Dart>,
    pub other: Side,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trichotomy {
    NotApplicable(String),
    TwoSingletons { singletons: [String; 2] },
    SingletonAndTwoCompounds { singleton: String, compounds: [Vec<String>; 2] },
    FourCompounds { compounds: [Vec<String>; 4] },
    /// None of the three cases; reported rather than hidden.
    NoCase,
}

impl Trichotomy {
    pub fn case(&self) -> Option<&'static str> {
        match self {
            Trichotomy::TwoSingletons { .. } => Some("i"),
            Trichotomy::SingletonAndTwoCompounds { .. } => Some("ii"),
            Trichotomy::FourCompounds { .. } => Some("iii"),
            _ => None,
        }
    }
}

impl fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trichotomy::NotApplicable(why) => write!(f, "not applicable: {why}"),
            Trichotomy::TwoSingletons { singletons } => {
                write!(f, "case (i): singleton strips {} and {}", singletons[0], singletons[1])
            }
            Trichotomy::SingletonAndTwoCompounds { singleton, compounds } => write!(
                f,
                "case (ii): singleton strip {singleton}, compound strips [{}] and [{}]",
                compounds[0].join(" "),
                compounds[1].join(" ")
            ),
            Trichotomy::FourCompounds { compounds } => {
                let cs: Vec<String> = compounds.iter().map(|c| format!("[{}]", c.join(" "))).collect();
                write!(f, "case (iii): compound strips {}", cs.join(", "))
            }
            Trichotomy::NoCase => write!(f, "no case holds"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct StripReport {
    /// Vertices removed as spikes, in removal order.
    pub spikes: Vec<String>,
    /// The spike-free core everything below refers to.
    pub core: PlanarDiagram,
    pub runs: Vec<Vec<Run>>,
    pub interior_degree: Vec<usize>,
    pub on_boundary: Vec<bool>,
    pub simple: Vec<bool>,
    pub singletons: Vec<usize>,
    pub compounds: Vec<Vec<usize>>,
    pub c4: bool,
    pub t4: bool,
    pub trichotomy: Trichotomy,
}

impl StripReport {
    pub fn region_id(&self, r: usize) -> &str {
        &self.core.regions[r].id
    }

    pub fn names(&self, rs: &[usize]) -> Vec<String> {
        rs.iter().map(|&r| self.region_id(r).to_string()).collect()
    }

    /// Edges of the core after valence-2 suppression that have regions on both sides.
    pub fn interior_suppressed_edges(&self) -> usize {
        self.runs.iter().flatten().filter(|r| matches!(r.other, Side::Region(_))).count() / 2
    }
}

/// Removes valence-1 boundary vertices repeatedly.
pub fn remove_spikes(d: &PlanarDiagram) -> (PlanarDiagram, Vec<String>) {
    let mut alive_e = vec![true; d.edges.len()];
    let mut alive_v = vec![true; d.vertices.len()];
    let mut spikes = Vec::new();
    loop {
        let mut val = vec![0usize; d.vertices.len()];
        for (_, e) in d.edges.iter().enumerate().filter(|(i, _)| alive_e[*i]) {
            val[e.from] += 1;
            val[e.to] += 1;
        }
        let live_v = alive_v.iter().filter(|&&a| a).count();
        let Some(v) = (0..d.vertices.len()).find(|&v| alive_v[v] && val[v] == 1 && live_v > 1) else {
            break;
        };
        let e = (0..d.edges.len()).find(|&i| alive_e[i] && (d.edges[i].from == v || d.edges[i].to == v)).unwrap();
        alive_e[e] = false;
        alive_v[v] = false;
        spikes.push(d.vertices[v].clone());
    }
    if spikes.is_empty() {
        return (d.clone(), spikes);
    }
    let vmap: Vec<Option<usize>> = {
        let mut k = 0;
        alive_v.iter().map(|&a| a.then(|| (k, k += 1).0)).collect()
    };
    let emap: Vec<Option<usize>> = {
        let mut k = 0;
        alive_e.iter().map(|&a| a.then(|| (k, k += 1).0)).collect()
    };
    let remap = |c: &[Dart]| -> Vec<Dart> { c.iter().filter_map(|x| emap[x.edge].map(|e| Dart::new(e, x.forward))).collect() };
    let mut core = d.clone();
    core.vertices = d.vertices.iter().zip(&alive_v).filter(|(_, &a)| a).map(|(v, _)| v.clone()).collect();
    core.edges = d
        .edges
        .iter()
        .zip(&alive_e)
        .filter(|(_, &a)| a)
        .map(|(e, _)| {
            let mut e = e.clone();
            e.from = vmap[e.from].unwrap();
            e.to = vmap[e.to].unwrap();
            e
        })
        .collect();
    for r in &mut core.regions {
        r.boundary = remap(&r.boundary);
    }
    core.outer = remap(&d.outer);
    (core, spikes)
}

fn runs_of(d: &PlanarDiagram, sides: &HashMap<Dart, (Side, usize)>, val: &[usize], c: &[Dart]) -> Vec<Run> {
    let n = c.len();
    let branch: Vec<usize> = (0..n).filter(|&k| val[d.dart_start(c[k])] != 2).collect();
    let other = |darts: &[Dart]| {
        if darts.iter().all(|&x| matches!(sides[&rev(x)].0, Side::Region(_))) {
            sides[&rev(darts[0])].0
        } else {
            Side::Outer
        }
    };
    if branch.is_empty() {
        return vec![Run { darts: c.to_vec(), other: other(c) }];
    }
    let mut out = Vec::new();
    for (i, &s) in branch.iter().enumerate() {
        let e = branch[(i + 1) % branch.len()];
        let len = if e > s { e - s } else { e + n - s };
        let darts: Vec<Dart> = (0..len).map(|k| c[(s + k) % n]).collect();
        let o = other(&darts);
        out.push(Run { darts, other: o });
    }
    out
}

/// Whether removing the closures of `rs` leaves the rest of the diagram connected.
fn complement_connected(d: &PlanarDiagram, rs: &BTreeSet<usize>) -> bool {
    let (nr, ne) = (d.regions.len(), d.edges.len());
    let mut gone_e = vec![false; ne];
    let mut gone_v = vec![false; d.vertices.len()];
    for &r in rs {
        for x in &d.regions[r].boundary {
            gone_e[x.edge] = true;
            gone_v[d.edges[x.edge].from] = true;
            gone_v[d.edges[x.edge].to] = true;
        }
    }
    let cell_e = |e: usize| nr + e;
    let cell_v = |v: usize| nr + ne + v;
    let mut uf: Vec<usize> = (0..nr + ne + d.vertices.len()).collect();
    let join = |uf: &mut Vec<usize>, a: usize, b: usize| {
        let (a, b) = (find(uf, a), find(uf, b));
        uf[a] = b;
    };
    for r in (0..nr).filter(|r| !rs.contains(r)) {
        for x in &d.regions[r].boundary {
            if !gone_e[x.edge] {
                join(&mut uf, r, cell_e(x.edge));
            }
            let v = d.dart_start(*x);
            if !gone_v[v] {
                join(&mut uf, r, cell_v(v));
            }
        }
    }
    for (e, ed) in d.edges.iter().enumerate().filter(|(e, _)| !gone_e[*e]) {
        for v in [ed.from, ed.to] {
            if !gone_v[v] {
                join(&mut uf, cell_e(e), cell_v(v));
            }
        }
    }
    let alive: Vec<usize> = (0..nr)
        .filter(|r| !rs.contains(r))
        .chain((0..ne).filter(|&e| !gone_e[e]).map(cell_e))
        .chain((0..d.vertices.len()).filter(|&v| !gone_v[v]).map(cell_v))
        .collect();
    let roots: BTreeSet<usize> = alive.iter().map(|&c| find(&mut uf, c)).collect();
    roots.len() <= 1
}

fn run_vertices(d: &PlanarDiagram, run: &Run) -> BTreeSet<usize> {
    run.darts.iter().flat_map(|&x| [d.dart_start(x), d.dart_end(x)]).collect()
}

fn region_vertices(d: &PlanarDiagram, r: usize) -> BTreeSet<usize> {
    d.regions[r].boundary.iter().map(|&x| d.dart_start(x)).collect()
}

pub fn find_strips(d: &PlanarDiagram) -> StripReport {
    let (core, spikes) = remove_spikes(d);
    let sides = core.sides();
    let val: Vec<usize> = (0..core.vertices.len()).map(|v| core.valence(v)).collect();
    let nr = core.regions.len();
    let runs: Vec<Vec<Run>> = (0..nr).map(|r| runs_of(&core, &sides, &val, &core.regions[r].boundary)).collect();
    let interior_degree: Vec<usize> =
        runs.iter().map(|rs| rs.iter().filter(|r| matches!(r.other, Side::Region(_))).count()).collect();
    let on_boundary: Vec<bool> = (0..nr)
        .map(|r| core.regions[r].boundary.iter().any(|&x| sides[&rev(x)].0 == Side::Outer))
        .collect();
    let simple: Vec<bool> =
        (0..nr).map(|r| on_boundary[r] && complement_connected(&core, &BTreeSet::from([r]))).collect();
    let singletons: Vec<usize> = (0..nr).filter(|&r| simple[r] && interior_degree[r] <= 1).collect();

    // Consecutive regions of a compound strip meet in exactly one suppressed edge.
    let single_join = |a: usize, b: usize| -> bool {
        let shared: Vec<&Run> = runs[a].iter().filter(|r| r.other == Side::Region(b)).collect();
        shared.len() == 1 && {
            let common: BTreeSet<usize> =
                region_vertices(&core, a).intersection(&region_vertices(&core, b)).copied().collect();
            common == run_vertices(&core, shared[0])
        }
    };
    let mut compounds: Vec<Vec<usize>> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = (0..nr).filter(|&r| interior_degree[r] == 2).map(|r| vec![r]).collect();
    stack.reverse();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        let nbrs: BTreeSet<usize> = runs[last]
            .iter()
            .filter_map(|r| match r.other {
                Side::Region(x) => Some(x),
                Side::Outer => None,
            })
            .collect();
        let mut next = Vec::new();
        for &x in &nbrs {
            if chain.contains(&x) || !single_join(last, x) {
                continue;
            }
            let mut c = chain.clone();
            c.push(x);
            if interior_degree[x] == 2 {
                let key: Vec<usize> = c.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
                if !seen.contains(&key) && complement_connected(&core, &key.iter().copied().collect()) {
                    seen.insert(key);
                    compounds.push(c);
                }
            } else if interior_degree[x] == 3 {
                next.push(c);
            }
        }
        next.reverse();
        stack.extend(next);
    }

    let c4 = (0..nr).all(|r| on_boundary[r] || interior_degree[r] >= 4);
    let on_outer: BTreeSet<usize> = core.outer.iter().map(|&x| core.dart_start(x)).collect();
    let t4 = (0..core.vertices.len()).all(|v| on_outer.contains(&v) || val[v] == 2 || val[v] >= 4);

    let name = |r: usize| core.regions[r].id.clone();
    let names = |c: &Vec<usize>| c.iter().map(|&r| name(r)).collect::<Vec<_>>();
    let trichotomy = if nr <= 1 {
        Trichotomy::NotApplicable("more than one region required".into())
    } else if !c4 {
        Trichotomy::NotApplicable("C(4) fails on an interior region".into())
    } else if !t4 {
        Trichotomy::NotApplicable("T(4) fails at an interior vertex".into())
    } else if singletons.len() >= 2 {
        Trichotomy::TwoSingletons { singletons: [name(singletons[0]), name(singletons[1])] }
    } else if singletons.len() == 1 && compounds.len() >= 2 {
        Trichotomy::SingletonAndTwoCompounds {
            singleton: name(singletons[0]),
            compounds: [names(&compounds[0]), names(&compounds[1])],
        }
    } else if compounds.len() >= 4 {
        Trichotomy::FourCompounds {
            compounds: [names(&compounds[0]), names(&compounds[1]), names(&compounds[2]), names(&compounds[3])],
        }
    } else {
        Trichotomy::NoCase
    };
    StripReport {
        spikes,
        core,
        runs,
        interior_degree,
        on_boundary,
        simple,
        singletons,
        compounds,
        c4,
        t4,
        trichotomy,
    }
}
