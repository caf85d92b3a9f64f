use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use recur_complex::{Complex, RawComplex, RawEdge, RawFace};
use recur_diagrams::word::letter;
use recur_diagrams::{Letter, Word};

use crate::dihedral::GarsideForm;
use crate::graph::{artin_relator, LabeledGraph, Target};
use crate::tits::{CoxWord, CoxeterOracle};
use crate::ArtinError;

pub const DEFAULT_CAP: usize = 20_000;

/// A word-metric ball in the Cayley complex of a dihedral Artin group or a Coxeter group.
#[derive(Debug, Clone)]
pub struct CayleyBall {
    pub graph: LabeledGraph,
    pub target: Target,
    pub radius: usize,
    pub complex: Complex,
    pub root: usize,
    /// Normal form of each vertex, rendered over the generator names.
    pub names: Vec<String>,
    /// A word (over signed letters) reaching each vertex from the root.
    pub words: Vec<Word>,
    /// Directed generator edges: `(vertex, generator) -> edge`. For Coxeter balls both
    /// endpoints map to the same undirected edge.
    pub gen_edges: HashMap<(usize, usize), usize>,
}

impl CayleyBall {
    pub fn vertex_count(&self) -> usize {
        self.complex.vertices.len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let gens = self.graph.vertices.len();
        (0..gens).flat_map(|s| [(u, s), (v, s)]).find_map(|key| {
            let e = *self.gen_edges.get(&key)?;
            let ends = self.complex.edges[e].ends;
            (ends == [u, v] || ends == [v, u]).then_some(e)
        })
    }

    pub fn to_json(&self) -> String {
        self.complex.to_json()
    }
}

struct Layer<K> {
    index: HashMap<K, usize>,
    keys: Vec<K>,
    words: Vec<Word>,
}

fn bfs<K: Clone + Eq + Hash>(
    root: K,
    gens: usize,
    radius: usize,
    cap: usize,
    signed: bool,
    mut step: impl FnMut(&K, Letter) -> K,
) -> Result<Layer<K>, ArtinError> {
    let mut layer = Layer { index: HashMap::from([(root.clone(), 0)]), keys: vec![root], words: vec![Vec::new()] };
    let mut frontier = vec![0];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &v in &frontier {
            for s in 0..gens {
                for inv in [false, true] {
                    if inv && !signed {
                        continue;
                    }
                    let l = letter(s, inv);
                    let k = step(&layer.keys[v], l);
                    if layer.index.contains_key(&k) {
                        continue;
                    }
                    if layer.keys.len() == cap {
                        return Err(ArtinError::CapExceeded(cap));
                    }
                    let mut w = layer.words[v].clone();
                    w.push(l);
                    layer.index.insert(k.clone(), layer.keys.len());
                    layer.keys.push(k);
                    layer.words.push(w);
                    next.push(layer.keys.len() - 1);
                }
            }
        }
        frontier = next;
    }
    Ok(layer)
}

fn gon_tag(k: usize) -> Option<String> {
    matches!(k, 4 | 6 | 12).then(|| format!("Gon({k})"))
}

fn assemble(
    vertex_count: usize,
    edges: &[(usize, usize)],
    faces: &[Vec<(usize, bool)>],
) -> Result<Complex, ArtinError> {
    let vname = |v: usize| format!("v{v}");
    let raw = RawComplex {
        vertices: (0..vertex_count).map(vname).collect(),
        edges: edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| RawEdge { id: format!("e{i}"), ends: [vname(u), vname(v)], length: "1".into() })
            .collect(),
        faces: faces
            .iter()
            .enumerate()
            .map(|(i, b)| RawFace {
                id: format!("f{i}"),
                boundary: b.iter().map(|&(e, fwd)| (format!("e{e}"), if fwd { "+" } else { "-" }.to_string())).collect(),
                shape: gon_tag(b.len()),
                scale: None,
                sides: None,
            })
            .collect(),
    };
    Ok(Complex::from_raw(&raw)?)
}

pub fn build_cayley_ball(g: &LabeledGraph, target: Target, radius: usize) -> Result<CayleyBall, ArtinError> {
    build_cayley_ball_capped(g, target, radius, DEFAULT_CAP)
}

pub fn build_cayley_ball_capped(
    g: &LabeledGraph,
    target: Target,
    radius: usize,
    cap: usize,
) -> Result<CayleyBall, ArtinError> {
    match target {
        Target::Artin => artin_ball(g, radius, cap),
        Target::Coxeter => coxeter_ball(g, radius, cap),
    }
}

fn artin_ball(g: &LabeledGraph, radius: usize, cap: usize) -> Result<CayleyBall, ArtinError> {
    if g.vertices.len() != 2 || g.edges.len() != 1 {
        return Err(ArtinError::BadGraph("dihedral Artin balls need a single edge".into()));
    }
    let m = g.edges[0].2;
    let step = |k: &GarsideForm, l: Letter| {
        let mut k = k.clone();
        k.push(l);
        k
    };
    let layer = bfs(GarsideForm::identity(m), 2, radius, cap, true, step)?;
    let n = layer.keys.len();
    let mut edges = Vec::new();
    let mut gen_edges = HashMap::new();
    for v in 0..n {
        for s in 0..2 {
            if let Some(&w) = layer.index.get(&step(&layer.keys[v], letter(s, false))) {
                gen_edges.insert((v, s), edges.len());
                edges.push((v, w));
            }
        }
    }
    let rel = artin_relator(0, 1, m);
    let mut faces = Vec::new();
    'v: for v in 0..n {
        let mut cur = v;
        let mut darts = Vec::new();
        for &l in &rel {
            let s = recur_diagrams::word::gen_of(l);
            if l > 0 {
                let Some(&e) = gen_edges.get(&(cur, s)) else { continue 'v };
                darts.push((e, true));
                cur = edges[e].1;
            } else {
                let Some(&prev) = layer.index.get(&step(&layer.keys[cur], l)) else { continue 'v };
                let Some(&e) = gen_edges.get(&(prev, s)) else { continue 'v };
                darts.push((e, false));
                cur = prev;
            }
        }
        faces.push(darts);
    }
    let alphabet = g.alphabet();
    Ok(CayleyBall {
        graph: g.clone(),
        target: Target::Artin,
        radius,
        complex: assemble(n, &edges, &faces)?,
        root: 0,
        names: layer.keys.iter().map(|k| k.show(&alphabet)).collect(),
        words: layer.words,
        gen_edges,
    })
}

fn coxeter_ball(g: &LabeledGraph, radius: usize, cap: usize) -> Result<CayleyBall, ArtinError> {
    let mut oracle = CoxeterOracle::new(g);
    let gens = g.vertices.len();
    let mut step = |k: &CoxWord, l: Letter| oracle.times(k, recur_diagrams::word::gen_of(l));
    let layer = bfs(CoxWord::new(), gens, radius, cap, false, &mut step)?;
    let n = layer.keys.len();
    let mut edges = Vec::new();
    let mut gen_edges = HashMap::new();
    let mut nbr = HashMap::new();
    for v in 0..n {
        for s in 0..gens {
            let Some(&w) = layer.index.get(&step(&layer.keys[v], letter(s, false))) else { continue };
            nbr.insert((v, s), w);
            if v < w {
                gen_edges.insert((v, s), edges.len());
                gen_edges.insert((w, s), edges.len());
                edges.push((v, w));
            }
        }
    }
    let mut faces = Vec::new();
    let mut seen = BTreeSet::new();
    for &(s, t, m) in &g.edges {
        'v: for v in 0..n {
            let mut cur = v;
            let mut darts = Vec::new();
            let mut verts = BTreeSet::new();
            for i in 0..2 * m as usize {
                let x = if i % 2 == 0 { s } else { t };
                let Some(&w) = nbr.get(&(cur, x)) else { continue 'v };
                let e = gen_edges[&(cur, x)];
                darts.push((e, edges[e].0 == cur));
                verts.insert(cur);
                cur = w;
            }
            if seen.insert(verts) {
                faces.push(darts);
            }
        }
    }
    let names = layer
        .keys
        .iter()
        .map(|k| if k.is_empty() { "1".to_string() } else { k.iter().map(|&x| g.vertices[x].as_str()).collect() })
        .collect();
    Ok(CayleyBall {
        graph: g.clone(),
        target: Target::Coxeter,
        radius,
        complex: assemble(n, &edges, &faces)?,
        root: 0,
        names,
        words: layer.words,
        gen_edges,
    })
}

/// Maps each vertex of a dihedral Artin ball to the vertex of a Coxeter ball for the same
/// graph representing its image.
pub fn project_vertices(artin: &CayleyBall, coxeter: &CayleyBall) -> Vec<Option<usize>> {
    let mut oracle = CoxeterOracle::new(&coxeter.graph);
    let mut index = HashMap::new();
    for (v, w) in coxeter.words.iter().enumerate() {
        index.insert(oracle.normal_form(&crate::tits::unsigned(w)), v);
    }
    artin
        .words
        .iter()
        .map(|w| index.get(&oracle.normal_form(&crate::tits::unsigned(w))).copied())
        .collect()
}

/// The image of each Artin edge in the Coxeter ball, when both ends project inside it.
pub fn project_edges(artin: &CayleyBall, coxeter: &CayleyBall) -> Vec<Option<usize>> {
    let vmap = project_vertices(artin, coxeter);
    artin
        .complex
        .edges
        .iter()
        .map(|e| coxeter.edge_between(vmap[e.ends[0]]?, vmap[e.ends[1]]?))
        .collect()
}
