use std::fmt::Write;

use crate::DiagramError;

/// A generator index plus one, negated for inverses.
pub type Letter = i32;
pub type Word = Vec<Letter>;

pub fn gen_of(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

pub fn letter(gen: usize, inverse: bool) -> Letter {
    let l = gen as Letter + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

pub fn rotate(w: &[Letter], k: usize) -> Word {
    if w.is_empty() {
        return Vec::new();
    }
    let k = k % w.len();
    w[k..].iter().chain(&w[..k]).copied().collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Reduces a sequence cyclically, reporting each cancelling pair `(earlier, later)`.
///
/// `remaining` counts the items left besides the pair; the same routine drives both
/// the abstract word search and its geometric replay so positions agree.
pub fn reduce_cyclic_with<T: Clone, E>(
    items: Vec<T>,
    cancels: impl Fn(&T, &T) -> bool,
    mut on_cancel: impl FnMut(&T, &T, usize) -> Result<(), E>,
) -> Result<Vec<T>, E> {
    let n = items.len();
    let mut stack: Vec<T> = Vec::with_capacity(n);
    for (i, x) in items.into_iter().enumerate() {
        if let Some(top) = stack.pop_if(|t| cancels(t, &x)) {
            on_cancel(&top, &x, stack.len() + (n - i - 1))?;
            continue;
        }
        stack.push(x);
    }
    while stack.len() >= 2 && cancels(stack.last().unwrap(), &stack[0]) {
        let last = stack.pop().unwrap();
        let first = stack.remove(0);
        on_cancel(&last, &first, stack.len())?;
    }
    Ok(stack)
}

pub fn cyclic_reduce(w: &[Letter]) -> Word {
    reduce_cyclic_with::<Letter, ()>(w.to_vec(), |a, b| *a == -*b, |_, _, _| Ok(())).unwrap()
}

pub fn is_cyclically_reduced(w: &[Letter]) -> bool {
    cyclic_reduce(w).len() == w.len()
}

/// Least rotation, used as a canonical key for cyclic words.
pub fn min_rotation(w: &[Letter]) -> Word {
    (0..w.len().max(1)).map(|k| rotate(w, k)).min().unwrap_or_default()
}

/// Maximal runs of one generator, as (start, length) on the cyclic word.
pub fn syllables(w: &[Letter]) -> Vec<(usize, usize)> {
    let n = w.len();
    if n == 0 {
        return vec![];
    }
    let same = |i: usize, j: usize| gen_of(w[i % n]) == gen_of(w[j % n]);
    if (0..n).all(|i| same(i, 0)) {
        return vec![(0, n)];
    }
    let start = (0..n).find(|&i| !same(i + n - 1, i)).unwrap();
    let mut out = Vec::new();
    let mut i = start;
    while i < start + n {
        let mut j = i + 1;
        while j < start + n && same(j, i) {
            j += 1;
        }
        out.push((i % n, j - i));
        i = j;
    }
    out
}

/// Syllable index of every position of a cyclic word.
pub fn syllable_index(w: &[Letter]) -> Vec<usize> {
    let mut idx = vec![0; w.len()];
    for (s, (start, len)) in syllables(w).into_iter().enumerate() {
        for k in 0..len {
            idx[(start + k) % w.len()] = s;
        }
    }
    idx
}

/// Generator names; single-letter lowercase alphabets print compactly with uppercase inverses.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alphabet(pub Vec<String>);

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Alphabet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn compact(&self) -> bool {
        self.0.iter().all(|n| n.len() == 1 && n.chars().all(|c| c.is_ascii_lowercase()))
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn show_letter(&self, l: Letter) -> String {
        let name = &self.0[gen_of(l)];
        if self.compact() {
            if l < 0 {
                name.to_ascii_uppercase()
            } else {
                name.clone()
            }
        } else if l < 0 {
            format!("{name}^-1")
        } else {
            name.clone()
        }
    }

    pub fn show(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        if self.compact() {
            return w.iter().map(|&l| self.show_letter(l)).collect();
        }
        let mut s = String::new();
        for (i, &l) in w.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}", self.show_letter(l));
        }
        s
    }

    /// Parses `abAB`, `a^2 b^-1`, `e0 e1^-1`, or `1` for the empty word.
    pub fn parse(&self, s: &str) -> Result<Word, DiagramError> {
        let bad = |pos: usize, why: &str| DiagramError::BadWord { word: s.to_string(), pos, reason: why.to_string() };
        let chars: Vec<char> = s.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        if s.trim() == "1" {
            return Ok(out);
        }
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() || c == '*' || c == '.' || c == '·' {
                i += 1;
                continue;
            }
            // Longest generator name at i.
            let rest: String = chars[i..].iter().collect();
            let mut best: Option<(usize, usize)> = None;
            for (g, name) in self.0.iter().enumerate() {
                if rest.starts_with(name.as_str()) && best.is_none_or(|(_, l)| name.chars().count() > l) {
                    best = Some((g, name.chars().count()));
                }
            }
            let (gen, len, mut inv) = match best {
                Some((g, l)) => (g, l, false),
                None => {
                    let lower = c.to_ascii_lowercase().to_string();
                    match (c.is_ascii_uppercase(), self.index(&lower)) {
                        (true, Some(g)) => (g, 1, true),
                        _ => return Err(bad(i, "unknown generator")),
                    }
                }
            };
            i += len;
            let mut power: i64 = 1;
            if i < chars.len() && chars[i] == '^' {
                let mut j = i + 1;
                let neg = j < chars.len() && chars[j] == '-';
                if neg {
                    j += 1;
                }
                let start = j;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if start == j {
                    return Err(bad(i, "exponent expected"));
                }
                let digits: String = chars[start..j].iter().collect();
                power = digits.parse().map_err(|_| bad(start, "exponent too large"))?;
                if neg {
                    inv = !inv;
                }
                i = j;
            }
            for _ in 0..power {
                out.push(letter(gen, inv));
            }
        }
        Ok(out)
    }
}
