use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::word::{cyclic_reduce, inverse, rotate, Alphabet, Word};
use crate::DiagramError;

/// A finite presentation with cyclically reduced relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relators: Vec<Word>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawPresentation {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<String>,
}

impl Presentation {
    /// Relators are cyclically reduced; those reducing to the empty word are dropped.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
        Presentation { alphabet, relators }
    }

    pub fn from_strings<S: AsRef<str>>(gens: &[S], relators: &[S]) -> Result<Self, DiagramError> {
        let alphabet = Alphabet::new(gens);
        let rels = relators.iter().map(|r| alphabet.parse(r.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation::new(alphabet, rels))
    }

    /// Accepts `< a, b | abAB, ... >` or the JSON form with `generators` and `relators`.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let t = text.trim();
        if t.starts_with('{') {
            let raw: RawPresentation = serde_json::from_str(t)?;
            return Presentation::from_strings(&raw.generators, &raw.relators);
        }
        let inner = t.trim_start_matches('<').trim_end_matches('>');
        let (gens, rels) = inner.split_once('|').unwrap_or((inner, ""));
        let gens: Vec<&str> = gens.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        let rels: Vec<&str> = rels.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Presentation::from_strings(&gens, &rels)
    }

    pub fn to_raw(&self) -> RawPresentation {
        RawPresentation {
            generators: self.alphabet.0.clone(),
            relators: self.relators.iter().map(|r| self.alphabet.show(r)).collect(),
        }
    }

    /// All cyclic shifts of relators and their inverses, sorted and deduplicated.
    pub fn symmetrized(&self) -> Vec<Word> {
        let mut set = BTreeSet::new();
        for r in &self.relators {
            for w in [r.clone(), inverse(r)] {
                for k in 0..w.len() {
                    set.insert(rotate(&w, k));
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn show(&self, w: &[i32]) -> String {
        self.alphabet.show(w)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.alphabet.show(r)).collect();
        write!(f, "< {} | {} >", self.alphabet.0.join(", "), rels.join(", "))
    }
}
