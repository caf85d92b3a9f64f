use std::fmt;

use recur_diagrams::word::{gen_of, letter};
use recur_diagrams::{Letter, Word};

use crate::dihedral::CoxeterElement;
use crate::graph::LabeledGraph;
use crate::ArtinError;

/// A factor of shape x^k y^(+-1) x^l or x^k y^l, with k, l nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Sandwich { x: usize, y: usize, k: i64, mid: i64, l: i64 },
    TwoPowers { x: usize, y: usize, k: i64, l: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockRun {
    pub start: usize,
    pub word: Word,
    pub gens: Vec<usize>,
    /// Label of the edge of the graph the run lives on, when it uses two generators.
    pub label: Option<u32>,
    /// Two generators that span no edge, so no block carries the run.
    pub no_block: bool,
    pub form: Option<Form>,
    /// Image in the dihedral Coxeter group of the block.
    pub coxeter: Option<CoxeterElement>,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Form::Sandwich { k, mid, l, .. } => write!(f, "x^{k} y^{mid} x^{l}"),
            Form::TwoPowers { k, l, .. } => write!(f, "x^{k} y^{l}"),
        }
    }
}

fn exponents(w: &[Letter]) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = Vec::new();
    for &l in w {
        let e = if l > 0 { 1 } else { -1 };
        match out.last_mut() {
            Some((g, x)) if *g == gen_of(l) => *x += e,
            _ => out.push((gen_of(l), e)),
        }
    }
    out
}

fn form(w: &[Letter]) -> Option<Form> {
    let ex = exponents(w);
    if ex.iter().any(|&(_, e)| e == 0) {
        return None;
    }
    match *ex.as_slice() {
        [(x, k), (y, mid), (x2, l)] if x == x2 && mid.abs() == 1 => Some(Form::Sandwich { x, y, k, mid, l }),
        [(x, k), (y, l)] => Some(Form::TwoPowers { x, y, k, l }),
        _ => None,
    }
}

/// Splits `w` into maximal runs over at most two generators, extending the current run
/// while letters stay in its alphabet.
pub fn block_factorization(w: &[Letter], g: &LabeledGraph) -> Result<Vec<BlockRun>, ArtinError> {
    if let Some(&l) = w.iter().find(|&&l| gen_of(l) >= g.vertices.len()) {
        return Err(ArtinError::UnknownGenerator(format!("letter {l}")));
    }
    let mut runs: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, &l) in w.iter().enumerate() {
        let x = gen_of(l);
        match runs.last_mut() {
            Some((_, gens)) if gens.contains(&x) => {}
            Some((_, gens)) if gens.len() < 2 => gens.push(x),
            _ => runs.push((i, vec![x])),
        }
    }
    let mut out = Vec::new();
    for (r, (start, mut gens)) in runs.iter().cloned().enumerate() {
        let end = runs.get(r + 1).map_or(w.len(), |n| n.0);
        let word = w[start..end].to_vec();
        gens.sort_unstable();
        let label = (gens.len() == 2).then(|| g.label(gens[0], gens[1])).flatten();
        let coxeter = label.map(|m| {
            let local: Word = word.iter().map(|&l| letter(usize::from(gen_of(l) == gens[1]), l < 0)).collect();
            CoxeterElement::of_word(&local, m)
        });
        out.push(BlockRun {
            start,
            form: form(&word),
            no_block: gens.len() == 2 && label.is_none(),
            label,
            coxeter,
            gens,
            word,
        });
    }
    Ok(out)
}
