use std::collections::BTreeSet;
use std::fmt;

use crate::presentation::Presentation;
use crate::word::{gen_of, inverse, rotate, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PieceMode {
    /// Common prefixes of distinct occurrences.
    #[default]
    Standard,
    /// As standard, but no piece runs past the end of a syllable.
    Syllable,
}

/// One cyclic reading of a relator or its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub relator: usize,
    pub inverted: bool,
    pub shift: usize,
    pub word: Word,
}

#[derive(Debug, Clone)]
pub struct PieceTable {
    pub mode: PieceMode,
    pub occurrences: Vec<Occurrence>,
    /// Longest piece starting at each occurrence's first letter.
    pub piece_len: Vec<usize>,
    /// All maximal pieces, as words.
    pub pieces: BTreeSet<Word>,
}

fn lcp(a: &[i32], b: &[i32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn leading_syllable(w: &[i32]) -> usize {
    w.iter().take_while(|&&l| gen_of(l) == gen_of(w[0])).count()
}

pub fn compute_pieces(p: &Presentation, mode: PieceMode) -> PieceTable {
    let mut occurrences = Vec::new();
    for (ri, r) in p.relators.iter().enumerate() {
        for inverted in [false, true] {
            let w = if inverted { inverse(r) } else { r.clone() };
            for shift in 0..w.len() {
                occurrences.push(Occurrence { relator: ri, inverted, shift, word: rotate(&w, shift) });
            }
        }
    }
    let piece_len: Vec<usize> = recur_par::map_range(occurrences.len(), |i| {
        let o = &occurrences[i];
        let best = occurrences
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| lcp(&o.word, &q.word))
            .max()
            .unwrap_or(0);
        let mut len = best.min(o.word.len() - 1);
        if mode == PieceMode::Syllable {
            len = len.min(leading_syllable(&o.word));
        }
        len
    });
    let pieces = occurrences
        .iter()
        .zip(&piece_len)
        .filter(|(_, &l)| l > 0)
        .map(|(o, &l)| o.word[..l].to_vec())
        .collect();
    PieceTable { mode, occurrences, piece_len, pieces }
}

impl PieceTable {
    pub fn max_piece(&self) -> usize {
        self.piece_len.iter().copied().max().unwrap_or(0)
    }

    /// Every piece, not only maximal ones (pieces are closed under prefixes).
    pub fn all_pieces(&self) -> BTreeSet<Word> {
        self.pieces.iter().flat_map(|p| (1..=p.len()).map(move |k| p[..k].to_vec())).collect()
    }

    /// Piece lengths along the cyclic word of occurrence `o`, position by position.
    pub fn profile(&self, o: usize) -> Vec<usize> {
        let oc = &self.occurrences[o];
        let n = oc.word.len();
        (0..n)
            .map(|k| {
                let j = self
                    .occurrences
                    .iter()
                    .position(|q| q.relator == oc.relator && q.inverted == oc.inverted && q.shift == (oc.shift + k) % n)
                    .expect("every shift is an occurrence");
                self.piece_len[j]
            })
            .collect()
    }
}

/// Which small-cancellation condition to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    C(usize),
    T(usize),
    B6,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::C(n) => write!(f, "C({n})"),
            Condition::T(n) => write!(f, "T({n})"),
            Condition::B6 => write!(f, "B(6)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A relator reading split into pieces.
    Pieces { word: Word, pieces: Vec<Word> },
    /// Relators r_1..r_h with every product r_i r_{i+1} (cyclically) cancelling.
    Walk(Vec<Word>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScVerdict {
    pub condition: Condition,
    pub mode: PieceMode,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Breadth-first search over cut points: a piece at cut `c` may end anywhere in `c+1..=c+p(c)`.
/// Returns `dist` and `parent` for every position `0..=n`.
fn cuts(profile: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = profile.len();
    let mut dist = vec![usize::MAX; n + 1];
    let mut parent = vec![usize::MAX; n + 1];
    dist[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        if c == n {
            continue;
        }
        for e in c + 1..=(c + profile[c]).min(n) {
            if dist[e] == usize::MAX {
                dist[e] = dist[c] + 1;
                parent[e] = c;
                queue.push_back(e);
            }
        }
    }
    (dist, parent)
}

fn pieces_to(w: &[i32], parent: &[usize], mut end: usize) -> Vec<Word> {
    let mut out = Vec::new();
    while end > 0 {
        let s = parent[end];
        out.push(w[s..end].to_vec());
        end = s;
    }
    out.reverse();
    out
}

pub fn check_small_cancellation(p: &Presentation, which: Condition, mode: PieceMode) -> ScVerdict {
    let verdict = |holds: bool, witness| ScVerdict { condition: which, mode, holds, witness };
    match which {
        Condition::C(n) => {
            let table = compute_pieces(p, mode);
            for o in 0..table.occurrences.len() {
                let prof = table.profile(o);
                let w = &table.occurrences[o].word;
                let (dist, parent) = cuts(&prof);
                if dist[w.len()] < n {
                    let pieces = pieces_to(w, &parent, w.len());
                    return verdict(false, Some(Witness::Pieces { word: w.clone(), pieces }));
                }
            }
            verdict(true, None)
        }
        Condition::B6 => {
            let table = compute_pieces(p, mode);
            for o in 0..table.occurrences.len() {
                let prof = table.profile(o);
                let w = &table.occurrences[o].word;
                let (dist, parent) = cuts(&prof);
                let r = (0..=w.len()).filter(|&e| dist[e] <= 3).max().unwrap_or(0);
                if 2 * r > w.len() {
                    let pieces = pieces_to(w, &parent, r);
                    return verdict(false, Some(Witness::Pieces { word: w.clone(), pieces }));
                }
            }
            verdict(true, None)
        }
        Condition::T(q) => match cancelling_walk(p, q) {
            Some(walk) => verdict(false, Some(Witness::Walk(walk))),
            None => verdict(true, None),
        },
    }
}

/// A closed walk of length 3 <= h < q in the cancellation digraph of the symmetrized set.
fn cancelling_walk(p: &Presentation, q: usize) -> Option<Vec<Word>> {
    let sym = p.symmetrized();
    let n = sym.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let r = &sym[i];
            let rinv = inverse(r);
            (0..n).filter(|&j| sym[j] != rinv && *r.last().unwrap() == -sym[j][0]).collect()
        })
        .collect();
    for h in 3..q {
        for s in 0..n {
            // parent[k][v]: predecessor of v at step k on some walk from s.
            let mut layers: Vec<Vec<Option<usize>>> = vec![vec![None; n]; h + 1];
            let mut cur = vec![s];
            layers[0][s] = Some(s);
            for layer in layers.iter_mut().skip(1) {
                let mut next = Vec::new();
                for &u in &cur {
                    for &v in &succ[u] {
                        if layer[v].is_none() {
                            layer[v] = Some(u);
                            next.push(v);
                        }
                    }
                }
                cur = next;
            }
            if layers[h][s].is_some() {
                let mut walk = vec![s];
                let mut v = s;
                for k in (1..=h).rev() {
                    v = layers[k][v].unwrap();
                    walk.push(v);
                }
                walk.pop();
                walk.reverse();
                return Some(walk.into_iter().map(|i| sym[i].clone()).collect());
            }
        }
    }
    None
}
