use std::collections::BTreeSet;

use crate::diagram::{rev, PlanarDiagram, Side};
use crate::presentation::Presentation;
use crate::search::search_disc_diagram;
use crate::word::{inverse, letter, rotate, syllable_index, Alphabet, Letter, Word};
use crate::DiagramError;

/// Alternating word x y x ... of length m.
pub fn p_m(x: Letter, y: Letter, m: usize) -> Word {
    (0..m).map(|i| if i % 2 == 0 { x } else { y }).collect()
}

/// The one-relator presentation with relator p_m(a,b) p_m(b,a)^-1.
pub fn dihedral_presentation(m: usize) -> Presentation {
    let (a, b) = (letter(0, false), letter(1, false));
    let mut r = p_m(a, b, m);
    r.extend(inverse(&p_m(b, a, m)));
    Presentation::new(Alphabet::new(&["a", "b"]), vec![r])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// Index in the region boundary where the p_m(x,y) half starts; the other half starts m later.
    pub shift: usize,
    pub vertices: (usize, usize),
    pub exposed: bool,
}

/// Splits a region label into its two length-m halves, using the least shift that works.
pub fn separating_vertices(d: &PlanarDiagram, region: usize, m: usize) -> Result<Separation, DiagramError> {
    let w = d.region_word(region);
    let (a, b) = (letter(0, false), letter(1, false));
    let forms: Vec<Word> = [(a, b), (b, a)]
        .iter()
        .map(|&(x, y)| {
            let mut f = p_m(x, y, m);
            f.extend(inverse(&p_m(y, x, m)));
            f
        })
        .collect();
    let shift = (0..w.len()).find(|&s| w.len() == 2 * m && forms.contains(&rotate(&w, s))).ok_or_else(|| {
        DiagramError::NotDihedral { region: d.regions[region].id.clone(), label: d.alphabet.show(&w) }
    })?;
    let bd = &d.regions[region].boundary;
    let v1 = d.dart_start(bd[shift]);
    let v2 = d.dart_start(bd[(shift + m) % bd.len()]);
    let on_outer: BTreeSet<usize> = d.outer.iter().map(|&x| d.dart_start(x)).collect();
    Ok(Separation { shift, vertices: (v1, v2), exposed: on_outer.contains(&v1) && on_outer.contains(&v2) })
}

/// A subword of the boundary word: start position and letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subword {
    pub pos: usize,
    pub word: Word,
    pub region: String,
}

#[derive(Debug, Clone)]
pub struct CornerSubwords {
    pub w1: Subword,
    pub w2: Subword,
    pub area: usize,
    pub diagram: PlanarDiagram,
}

/// Two region halves lying on the boundary of a least-area diagram for `u`,
/// in syllables of `u` that do not overlap.
///
/// `Err(BoundExhausted)` means no diagram exists within `max_area`; `Ok(None)`
/// means a diagram was found but no such pair of halves.
pub fn corner_subwords(u: &[Letter], m: usize, max_area: usize) -> Result<Option<CornerSubwords>, DiagramError> {
    let p = dihedral_presentation(m);
    let found = search_disc_diagram(&p, u, max_area).ok_or(DiagramError::BoundExhausted(max_area))?;
    let d = &found.diagram;
    let n = u.len();
    // Boundary dart reading u[i], with the disc on its left.
    let along: Vec<_> = (0..n).map(|i| rev(d.outer[n - 1 - i])).collect();
    let sides = d.sides();
    let syl = syllable_index(u);
    let mut cands: Vec<(Subword, BTreeSet<usize>)> = Vec::new();
    for r in 0..d.regions.len() {
        let sep = separating_vertices(d, r, m)?;
        let bd = &d.regions[r].boundary;
        for h in [sep.shift, sep.shift + m] {
            let darts: Vec<_> = (0..m).map(|k| bd[(h + k) % bd.len()]).collect();
            if !darts.iter().all(|&x| sides[&rev(x)].0 == Side::Outer) {
                continue;
            }
            let Some(pos) = along.iter().position(|&x| x == darts[0]) else { continue };
            if (0..m).any(|k| along[(pos + k) % n] != darts[k]) {
                continue;
            }
            let word: Word = (0..m).map(|k| u[(pos + k) % n]).collect();
            let syls = (0..m).map(|k| syl[(pos + k) % n]).collect();
            cands.push((Subword { pos, word, region: d.regions[r].id.clone() }, syls));
        }
    }
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if cands[i].1.is_disjoint(&cands[j].1) {
                return Ok(Some(CornerSubwords {
                    w1: cands[i].0.clone(),
                    w2: cands[j].0.clone(),
                    area: found.area,
                    diagram: found.diagram.clone(),
                }));
            }
        }
    }
    Ok(None)
}
