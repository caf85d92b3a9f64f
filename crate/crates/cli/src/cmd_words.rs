use recur_diagrams::dot::dual_dot;
use recur_diagrams::{
    check_small_cancellation, compute_pieces, corner_subwords, find_strips, search_disc_diagram, validate_diagram, Alphabet,
    Condition, DiagramError, PieceMode, Presentation, Witness,
};

use crate::input::{self, write};
use crate::{CliError, DiagramCmd, RunReport};

fn mode(syllable: bool) -> PieceMode {
    if syllable {
        PieceMode::Syllable
    } else {
        PieceMode::Standard
    }
}

pub fn parse_condition(s: &str) -> Result<Condition, CliError> {
    let t = s.trim().to_ascii_uppercase();
    let t = t.replace(['(', ')'], "");
    if t == "B6" {
        return Ok(Condition::B6);
    }
    let bad = || CliError::Usage(format!("unknown condition {s:?}; expected C<n>, T<n> or B6"));
    let n: usize = t.get(1..).and_then(|n| n.parse().ok()).ok_or_else(bad)?;
    match t.chars().next() {
        Some('C') => Ok(Condition::C(n)),
        Some('T') => Ok(Condition::T(n)),
        _ => Err(bad()),
    }
}

fn show_witness(p: &Presentation, w: &Witness) -> String {
    match w {
        Witness::Pieces { word, pieces } => {
            let ps: Vec<String> = pieces.iter().map(|x| p.show(x)).collect();
            format!("{} = {}", p.show(word), ps.join(" | "))
        }
        Witness::Walk(rs) => rs.iter().map(|x| p.show(x)).collect::<Vec<_>>().join(" ~ "),
    }
}

pub fn pieces(pres: &str, syllable: bool) -> Result<RunReport, CliError> {
    let p = input::presentation(pres)?;
    let mut r = RunReport::new("pieces");
    r.digest(&[&p.bytes]);
    let p = p.value;
    let t = compute_pieces(&p, mode(syllable));
    r.line(format!("relators {} readings {} maximal pieces {}", p.relators.len(), t.occurrences.len(), t.pieces.len()));
    r.line(format!("longest piece {}", t.max_piece()));
    for w in &t.pieces {
        r.line(format!("  {}", p.show(w)));
    }
    for (i, rel) in p.relators.iter().enumerate() {
        let prof: Vec<String> = t.profile(i).iter().map(|n| n.to_string()).collect();
        r.line(format!("{}: {}", p.show(rel), prof.join(" ")));
    }
    Ok(r)
}

pub fn sc_check(pres: &str, cond: &str, syllable: bool) -> Result<RunReport, CliError> {
    let which = parse_condition(cond)?;
    let p = input::presentation(pres)?;
    let mut r = RunReport::new("sc-check");
    r.digest(&[&p.bytes]);
    let p = p.value;
    let v = check_small_cancellation(&p, which, mode(syllable));
    let detail = v.witness.as_ref().map(|w| show_witness(&p, w)).unwrap_or_default();
    r.verdict(which.to_string(), v.holds, detail);
    Ok(r)
}

pub fn diagram(cmd: &DiagramCmd) -> Result<RunReport, CliError> {
    match cmd {
        DiagramCmd::Validate { file, presentation } => {
            let d = input::diagram(file)?;
            let p = input::presentation(presentation)?;
            let mut r = RunReport::new("diagram validate");
            r.digest(&[&d.bytes, &p.bytes]);
            let (d, p) = (d.value, p.value);
            let v = validate_diagram(&d, &p);
            r.line(format!("regions {} boundary {}", d.area(), d.alphabet.show(&d.boundary_word())));
            for s in &v.problems {
                r.line(format!("problem: {s}"));
            }
            r.verdict("valid", v.valid(), v.unlabeled.first().map(|x| format!("region {x} has no relator label")).unwrap_or_default());
            let mirror = v
                .mirror_pairs
                .first()
                .map(|m| format!("regions {} and {} mirror across edge {}", m.regions.0, m.regions.1, m.edge))
                .unwrap_or_default();
            r.verdict("reduced", v.reduced(), mirror);
            Ok(r)
        }
        DiagramCmd::Strips { file, dot } => {
            let d = input::diagram(file)?;
            let mut r = RunReport::new("diagram strips");
            r.digest(&[&d.bytes]);
            let s = find_strips(&d.value);
            if !s.spikes.is_empty() {
                r.line(format!("spikes removed: {}", s.spikes.join(" ")));
            }
            r.line(format!("C(4) {} T(4) {}", s.c4, s.t4));
            r.line(format!("singleton strips: {}", s.names(&s.singletons).join(" ")));
            for c in &s.compounds {
                r.line(format!("compound strip: {}", s.names(c).join(" ")));
            }
            r.verdict("trichotomy", s.trichotomy.case().is_some(), s.trichotomy.to_string());
            if let Some(p) = dot {
                r.artifact(write(p, &dual_dot(&s))?);
            }
            Ok(r)
        }
        DiagramCmd::Search { word, presentation, max_area, out } => {
            let p = input::presentation(presentation)?;
            let mut r = RunReport::new("diagram search");
            r.digest(&[&p.bytes, word.as_bytes()]);
            let p = p.value;
            let u = input::word(&p.alphabet, word)?;
            match search_disc_diagram(&p, &u, *max_area) {
                Some(found) => {
                    r.verdict("diagram found", true, format!("area {}", found.area));
                    if let Some(path) = &out.output {
                        r.artifact(write(path, &found.diagram.to_json())?);
                    }
                }
                None => r.verdict("diagram found", false, format!("none within area {max_area}")),
            }
            Ok(r)
        }
    }
}

pub fn corner(word: &str, m: usize, max_area: usize) -> Result<RunReport, CliError> {
    if m < 2 {
        return Err(CliError::Usage(format!("m = {m}: need m >= 2")));
    }
    let ab = Alphabet::new(&["a", "b"]);
    let u = input::word(&ab, word)?;
    let mut r = RunReport::new("corner-subwords");
    r.digest(&[word.as_bytes()]);
    match corner_subwords(&u, m, max_area) {
        Ok(Some(cs)) => {
            r.line(format!("area {}", cs.area));
            for (name, w) in [("w1", &cs.w1), ("w2", &cs.w2)] {
                r.line(format!("{name} = {} at {} (region {})", ab.show(&w.word), w.pos, w.region));
            }
            r.verdict("two subwords", true, "");
        }
        Ok(None) => r.verdict("two subwords", false, "diagram found but no two exposed halves in distinct syllables"),
        Err(DiagramError::BoundExhausted(a)) => r.verdict("two subwords", false, format!("no diagram within area {a}")),
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}
