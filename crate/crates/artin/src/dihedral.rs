use std::fmt;

use recur_diagrams::word::{gen_of, letter};
use recur_diagrams::{Alphabet, Letter, Word};

use crate::graph::Target;
use crate::ArtinError;

/// An element r^k or r^k s of the dihedral group of order 2m, with r = ab and s = a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterElement {
    Rotation(u32),
    Reflection(u32),
}

impl CoxeterElement {
    pub fn is_identity(self) -> bool {
        self == CoxeterElement::Rotation(0)
    }

    fn parts(self) -> (u32, bool) {
        match self {
            CoxeterElement::Rotation(k) => (k, false),
            CoxeterElement::Reflection(k) => (k, true),
        }
    }

    fn from_parts(k: u32, refl: bool) -> Self {
        if refl {
            CoxeterElement::Reflection(k)
        } else {
            CoxeterElement::Rotation(k)
        }
    }

    pub fn mul(self, other: Self, m: u32) -> Self {
        let (k1, f1) = self.parts();
        let (k2, f2) = other.parts();
        let k = if f1 { k1 + m - k2 } else { k1 + k2 } % m;
        Self::from_parts(k, f1 ^ f2)
    }

    /// Image of a generator; `a = s`, `b = s r`.
    pub fn generator(g: usize, m: u32) -> Self {
        if g == 0 {
            CoxeterElement::Reflection(0)
        } else {
            CoxeterElement::Reflection(m - 1)
        }
    }

    pub fn of_word(w: &[Letter], m: u32) -> Self {
        w.iter().fold(CoxeterElement::Rotation(0), |acc, &l| acc.mul(Self::generator(gen_of(l), m), m))
    }

    /// A shortest word over {a, b} for the element.
    pub fn word(self, m: u32) -> Word {
        let (k, f) = self.parts();
        // r^k = (ab)^k; r^k s = (ab)^k a; pick the shorter side of the circle.
        let (a, b) = (letter(0, false), letter(1, false));
        let mut out = Vec::new();
        if !f {
            let (x, y, n) = if k <= m - k { (a, b, k) } else { (b, a, m - k) };
            for _ in 0..n {
                out.extend([x, y]);
            }
        } else if 2 * k < m {
            for _ in 0..k {
                out.extend([a, b]);
            }
            out.push(a);
        } else {
            // r^k s = (ba)^(m-k) a = b (ab)^(m-k-1)
            out.push(b);
            for _ in 0..(m - k - 1) {
                out.extend([a, b]);
            }
        }
        out
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterElement::Rotation(k) => write!(f, "rotation {k}"),
            CoxeterElement::Reflection(k) => write!(f, "reflection {k}"),
        }
    }
}

/// Left greedy normal form Δ^power · s_1 ⋯ s_r of a dihedral Artin element.
///
/// Each factor `(x, k)` is the alternating word of length `1 <= k < m` starting with
/// generator `x`; consecutive factors satisfy last(s_i) = first(s_{i+1}).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideForm {
    pub m: u32,
    pub power: i64,
    pub factors: Vec<(usize, u32)>,
}

fn last_gen(x: usize, k: u32) -> usize {
    if k % 2 == 1 {
        x
    } else {
        1 - x
    }
}

fn tau(x: usize, m: u32) -> usize {
    if m % 2 == 1 {
        1 - x
    } else {
        x
    }
}

impl GarsideForm {
    pub fn identity(m: u32) -> Self {
        GarsideForm { m, power: 0, factors: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0 && self.factors.is_empty()
    }

    pub fn of_word(w: &[Letter], m: u32) -> Self {
        let mut nf = GarsideForm::identity(m);
        for &l in w {
            nf.push(l);
        }
        nf
    }

    pub fn push(&mut self, l: Letter) {
        let g = gen_of(l);
        if l > 0 {
            self.push_positive(g);
            return;
        }
        // g^-1 = Δ^-1 (Δ g^-1), where Δ g^-1 is Δ written to end in g, minus that letter.
        self.power -= 1;
        for f in &mut self.factors {
            f.0 = tau(f.0, self.m);
        }
        let m = self.m;
        let start = if last_gen(0, m) == g { 0 } else { 1 };
        for i in 0..m - 1 {
            self.push_positive(if i % 2 == 0 { start } else { 1 - start });
        }
    }

    fn push_positive(&mut self, g: usize) {
        self.factors.push((g, 1));
        self.normalize();
    }

    fn normalize(&mut self) {
        let m = self.m;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < self.factors.len() {
                let (x, k) = self.factors[i];
                let (y, j) = self.factors[i + 1];
                if last_gen(x, k) == y {
                    i += 1;
                    continue;
                }
                changed = true;
                self.factors[i] = (x, k + 1);
                if j == 1 {
                    self.factors.remove(i + 1);
                } else {
                    self.factors[i + 1] = (1 - y, j - 1);
                }
                if k + 1 == m {
                    self.factors.remove(i);
                    for f in &mut self.factors[..i] {
                        f.0 = tau(f.0, m);
                    }
                    self.power += 1;
                }
                break;
            }
            if !changed {
                break;
            }
        }
        // a lone factor can also reach Δ only through the pair rule, so nothing else to do
    }

    pub fn word(&self) -> Word {
        let m = self.m;
        let mut out = Vec::new();
        let delta: Word = (0..m).map(|i| letter((i % 2) as usize, false)).collect();
        for _ in 0..self.power.max(0) {
            out.extend(&delta);
        }
        for _ in 0..(-self.power).max(0) {
            out.extend(delta.iter().rev().map(|l| -l));
        }
        for &(x, k) in &self.factors {
            out.extend((0..k).map(|i| letter(if i % 2 == 0 { x } else { 1 - x }, false)));
        }
        out
    }

    pub fn show(&self, alphabet: &Alphabet) -> String {
        let mut parts = Vec::new();
        if self.power != 0 {
            parts.push(format!("D^{}", self.power));
        }
        for &(x, k) in &self.factors {
            let w: Word = (0..k).map(|i| letter(if i % 2 == 0 { x } else { 1 - x }, false)).collect();
            parts.push(alphabet.show(&w));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(".")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForm {
    Artin(GarsideForm),
    Coxeter(CoxeterElement),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordVerdict {
    pub trivial: bool,
    pub normal_form: NormalForm,
}

impl WordVerdict {
    pub fn show(&self, alphabet: &Alphabet) -> String {
        match &self.normal_form {
            NormalForm::Artin(g) => g.show(alphabet),
            NormalForm::Coxeter(c) => c.to_string(),
        }
    }
}

pub fn dihedral_word_problem(w: &[Letter], m: u32, target: Target) -> Result<WordVerdict, ArtinError> {
    if m < 2 {
        return Err(ArtinError::BadLabel(m));
    }
    if let Some(&l) = w.iter().find(|&&l| gen_of(l) > 1) {
        return Err(ArtinError::UnknownGenerator(format!("letter {l}")));
    }
    Ok(match target {
        Target::Coxeter => {
            let e = CoxeterElement::of_word(w, m);
            WordVerdict { trivial: e.is_identity(), normal_form: NormalForm::Coxeter(e) }
        }
        Target::Artin => {
            let g = GarsideForm::of_word(w, m);
            WordVerdict { trivial: g.is_identity(), normal_form: NormalForm::Artin(g) }
        }
    })
}
