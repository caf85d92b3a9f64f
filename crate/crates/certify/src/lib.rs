//! Dumbbell certificates: three billiard paths glued at perpendicular directions on a thick edge.

use std::fmt;

use recur_complex::{Classification, Complex};
use recur_engine::{build_markov, find_recurrent_cycle, DirectionSet, EngineError, Token, TransitionDigraph};
use recur_shapes::{chord, Pt, Quad};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("no thick base: complex is not thick")]
    NoThickBase,
    #[error("condition (iv) violated: no edge of degree >= 3 has a perpendicular point in three faces")]
    ConditionIv,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("malformed certificate: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Base data: a thick edge, a point on it, and three perpendicular tokens in distinct traversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThickBase {
    pub edge: usize,
    pub t: Quad,
    pub v: [usize; 3],
}

/// The lexicographically least edge (by id) of degree >= 3 with a usable perpendicular point.
pub fn find_thick_base(c: &Complex, set: &DirectionSet) -> Result<Option<ThickBase>, CertifyError> {
    let deg = c.degrees();
    let mut order: Vec<usize> = (0..c.edges.len()).filter(|&e| deg[e] >= 3).collect();
    if order.is_empty() {
        return Ok(None);
    }
    order.sort_by(|&a, &b| c.edges[a].id.cmp(&c.edges[b].id));
    for e in order {
        let mut perp: Vec<usize> = (0..set.len()).filter(|&a| set.tokens[a].edge == e && set.tokens[a].is_perpendicular()).collect();
        perp.sort_by(|&a, &b| {
            let (x, y) = (&set.tokens[a], &set.tokens[b]);
            x.t.cmp(&y.t).then_with(|| c.faces[x.face].id.cmp(&c.faces[y.face].id)).then(x.pos.cmp(&y.pos))
        });
        let mut i = 0;
        while i < perp.len() {
            let t = set.tokens[perp[i]].t.clone();
            let group: Vec<usize> = perp[i..].iter().copied().take_while(|&a| set.tokens[a].t == t).collect();
            i += group.len();
            if group.len() >= 3 {
                return Ok(Some(ThickBase { edge: e, t, v: [group[0], group[1], group[2]] }));
            }
        }
    }
    Err(CertifyError::ConditionIv)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenRecord {
    pub face: String,
    pub pos: usize,
    pub edge: String,
    pub t: String,
    pub along: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordRecord {
    pub face: String,
    pub from: [String; 2],
    pub to: [String; 2],
    pub length: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub name: String,
    /// Tokens a_1, ..., a_n; the path leaves each along its chord and ends in direction I(a_n).
    pub tokens: Vec<TokenRecord>,
    pub chords: Vec<ChordRecord>,
    pub length: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumbbellCertificate {
    pub edge: String,
    pub x: String,
    pub v1: TokenRecord,
    pub v2: TokenRecord,
    pub v3: TokenRecord,
    /// C runs v2 to v1, C'' runs v3 to v1, C' runs v3 to v2.
    pub paths: [PathRecord; 3],
}

impl DumbbellCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CertifyError> {
        Ok(serde_json::from_str(s)?)
    }
}

fn record(c: &Complex, t: &Token) -> TokenRecord {
    TokenRecord {
        face: c.faces[t.face].id.clone(),
        pos: t.pos,
        edge: c.edges[t.edge].id.clone(),
        t: t.t.to_string(),
        along: t.along.to_string(),
    }
}

fn pt_strings(p: &Pt) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

/// Chord of a token in its face, scaled to the face's metric.
fn chord_record(c: &Complex, set: &DirectionSet, a: usize) -> Option<(ChordRecord, Quad)> {
    let tk = &set.tokens[a];
    let tpl = set.template(a);
    let seg = chord(tpl, set.model_anchor(a)).ok()?;
    let s = &c.faces[tk.face].shape.as_ref()?.scale;
    let length = s * &seg.length;
    Some((
        ChordRecord {
            face: c.faces[tk.face].id.clone(),
            from: pt_strings(&seg.from.scale(s)),
            to: pt_strings(&seg.to.scale(s)),
            length: length.to_string(),
        },
        length,
    ))
}

fn path_record(c: &Complex, set: &DirectionSet, name: &str, tokens: &[usize]) -> PathRecord {
    let mut chords = Vec::new();
    let mut total = Quad::zero();
    for &a in tokens {
        let (r, l) = chord_record(c, set, a).expect("tokens on a recurrent path have chords");
        total = &total + &l;
        chords.push(r);
    }
    PathRecord {
        name: name.into(),
        tokens: tokens.iter().map(|&a| record(c, &set.tokens[a])).collect(),
        chords,
        length: total.to_string(),
    }
}

/// Runs the recurrence search three times: (v1, v2), (v1, v3), (v2, v3).
pub fn build_dumbbell(c: &Complex) -> Result<DumbbellCertificate, CertifyError> {
    if c.classify() != Classification::Thick {
        return Err(CertifyError::NoThickBase);
    }
    let d: TransitionDigraph = build_markov(c)?;
    let base = find_thick_base(c, &d.set)?.ok_or(CertifyError::NoThickBase)?;
    let [v1, v2, v3] = base.v;
    // The cycle is I(a), b, ..., I(a); the path is b, ..., I(a).
    let path = |a: usize, b: usize| -> Result<Vec<usize>, CertifyError> {
        let cyc = find_recurrent_cycle(&d, a, b)?;
        Ok(cyc[1..].to_vec())
    };
    let pc = path(v1, v2)?;
    let pcc = path(v1, v3)?;
    let pcp = path(v2, v3)?;
    let set = &d.set;
    Ok(DumbbellCertificate {
        edge: c.edges[base.edge].id.clone(),
        x: base.t.to_string(),
        v1: record(c, &set.tokens[v1]),
        v2: record(c, &set.tokens[v2]),
        v3: record(c, &set.tokens[v3]),
        paths: [path_record(c, set, "C", &pc), path_record(c, set, "C''", &pcc), path_record(c, set, "C'", &pcp)],
    })
}

/// A violated certificate clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clause {
    UnknownToken { path: String, index: usize },
    BaseNotPerpendicular(String),
    BaseNotShared,
    BaseTraversalsRepeat,
    StartClass { path: String },
    JunctionNotGeodesic { path: String, index: usize },
    TerminalDirection { path: String },
    ChordHitsVertex { path: String, index: usize },
    ChordMismatch { path: String, index: usize },
    LengthMismatch { path: String },
    EmptyPath { path: String },
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::UnknownToken { path, index } => write!(f, "{path}[{index}]: token not in A"),
            Clause::BaseNotPerpendicular(v) => write!(f, "base direction {v} not perpendicular"),
            Clause::BaseNotShared => write!(f, "base directions are not at one point of one edge"),
            Clause::BaseTraversalsRepeat => write!(f, "base directions share a face traversal"),
            Clause::StartClass { path } => write!(f, "{path}: start direction"),
            Clause::JunctionNotGeodesic { path, index } => write!(f, "{path}[{index}]: junction not geodesic"),
            Clause::TerminalDirection { path } => write!(f, "{path}: terminal direction"),
            Clause::ChordHitsVertex { path, index } => write!(f, "{path}[{index}]: chord hits a vertex"),
            Clause::ChordMismatch { path, index } => write!(f, "{path}[{index}]: stored chord differs"),
            Clause::LengthMismatch { path } => write!(f, "{path}: stored length differs"),
            Clause::EmptyPath { path } => write!(f, "{path}: empty"),
        }
    }
}

fn resolve(c: &Complex, set: &DirectionSet, r: &TokenRecord) -> Option<usize> {
    let face = c.face_index(&r.face)?;
    let t: Quad = r.t.parse().ok()?;
    let along: Quad = r.along.parse().ok()?;
    let a = set.lookup(face, r.pos, &t, &along)?;
    (c.edges[set.tokens[a].edge].id == r.edge).then_some(a)
}

/// Re-checks a certificate against the complex alone; an empty list means valid.
pub fn verify_certificate(c: &Complex, cert: &DumbbellCertificate) -> Result<Vec<Clause>, CertifyError> {
    let set = DirectionSet::instantiate(c)?;
    let mut bad = Vec::new();
    let base: Vec<Option<usize>> = [&cert.v1, &cert.v2, &cert.v3].iter().map(|r| resolve(c, &set, r)).collect();
    for (k, v) in base.iter().enumerate() {
        match v {
            None => bad.push(Clause::UnknownToken { path: "base".into(), index: k }),
            Some(a) if !set.tokens[*a].is_perpendicular() => bad.push(Clause::BaseNotPerpendicular(format!("v{}", k + 1))),
            _ => {}
        }
    }
    let resolved: Vec<usize> = base.iter().flatten().copied().collect();
    if resolved.len() == 3 {
        let tk: Vec<&Token> = resolved.iter().map(|&a| &set.tokens[a]).collect();
        let x: Option<Quad> = cert.x.parse().ok();
        if !(tk[0].edge == tk[1].edge && tk[1].edge == tk[2].edge && tk.iter().all(|t| Some(&t.t) == x.as_ref()))
            || c.edges[tk[0].edge].id != cert.edge
        {
            bad.push(Clause::BaseNotShared);
        }
        let trav: std::collections::BTreeSet<(usize, usize)> = tk.iter().map(|t| (t.face, t.pos)).collect();
        if trav.len() != 3 {
            bad.push(Clause::BaseTraversalsRepeat);
        }
    }
    // (start, end) classes per path: C v2 -> v1, C'' v3 -> v1, C' v3 -> v2.
    let ends = [(1usize, 0usize), (2, 0), (2, 1)];
    for (p, &(s, e)) in cert.paths.iter().zip(&ends) {
        let name = p.name.clone();
        if p.tokens.is_empty() {
            bad.push(Clause::EmptyPath { path: name });
            continue;
        }
        let ids: Vec<Option<usize>> = p.tokens.iter().map(|r| resolve(c, &set, r)).collect();
        for (i, a) in ids.iter().enumerate() {
            if a.is_none() {
                bad.push(Clause::UnknownToken { path: name.clone(), index: i });
            }
        }
        if ids[0].is_none() || ids[0] != base[s] {
            bad.push(Clause::StartClass { path: name.clone() });
        }
        for i in 0..ids.len() - 1 {
            let ok = match (ids[i], ids[i + 1]) {
                (Some(a), Some(b)) => junction(c, &set, a, b),
                _ => false,
            };
            if !ok {
                bad.push(Clause::JunctionNotGeodesic { path: name.clone(), index: i });
            }
        }
        let last = ids.last().copied().flatten();
        let terminal = last.and_then(|a| set.i_of(a).ok());
        if terminal.is_none() || terminal != base[e] || !set.tokens[terminal.unwrap()].is_perpendicular() {
            bad.push(Clause::TerminalDirection { path: name.clone() });
        }
        let mut total = Quad::zero();
        for (i, a) in ids.iter().enumerate() {
            let Some(a) = *a else { continue };
            let seg = chord(set.template(a), set.model_anchor(a));
            match seg {
                Err(_) => bad.push(Clause::ChordHitsVertex { path: name.clone(), index: i }),
                Ok(seg) => {
                    if !seg.end.t.is_positive() || seg.end.t >= Quad::one() {
                        bad.push(Clause::ChordHitsVertex { path: name.clone(), index: i });
                    }
                    match chord_record(c, &set, a) {
                        Some((r, l)) if Some(&r) == p.chords.get(i) => total = &total + &l,
                        _ => bad.push(Clause::ChordMismatch { path: name.clone(), index: i }),
                    }
                }
            }
        }
        if p.chords.len() != ids.len() || p.length.parse::<Quad>().ok() != Some(total) {
            bad.push(Clause::LengthMismatch { path: name.clone() });
        }
    }
    Ok(bad)
}

/// b in H(I(a)), from exact coordinates rather than the precomputed maps.
fn junction(c: &Complex, set: &DirectionSet, a: usize, b: usize) -> bool {
    let Ok(seg) = chord(set.template(a), set.model_anchor(a)) else { return false };
    let ta = &set.tokens[a];
    let f = &c.faces[ta.face];
    let pos = f.sides.position_of(seg.end.side);
    let d = f.boundary[pos];
    let same = d.forward == f.sides.forward();
    let along = set.template(a).along(&seg.end);
    let (t, along) = if same { (seg.end.t.clone(), along) } else { (&Quad::one() - &seg.end.t, -&along) };
    let tb = &set.tokens[b];
    tb.edge == d.edge && (tb.face, tb.pos) != (ta.face, pos) && tb.t == t && tb.along == -&along
}
