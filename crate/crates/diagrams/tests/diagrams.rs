use std::collections::{BTreeSet, HashMap};

use recur_complex::Dart;
use recur_diagrams::diagram::Side;
use recur_diagrams::word::{inverse, rotate};
use recur_diagrams::*;

fn pres(s: &str) -> Presentation {
    Presentation::parse(s).unwrap()
}

/// Every cyclic reading of every relator and its inverse, one entry per occurrence.
fn occurrences(p: &Presentation) -> Vec<Word> {
    let mut out = Vec::new();
    for r in &p.relators {
        for w in [r.clone(), inverse(r)] {
            for k in 0..w.len() {
                out.push(rotate(&w, k));
            }
        }
    }
    out
}

/// A piece is a proper prefix shared by two distinct occurrences.
fn brute_pieces(p: &Presentation) -> BTreeSet<Word> {
    let occ = occurrences(p);
    let mut out = BTreeSet::new();
    for (i, x) in occ.iter().enumerate() {
        for (j, y) in occ.iter().enumerate() {
            if i == j {
                continue;
            }
            for k in 1..x.len().min(y.len()).min(x.len()) {
                if x[..k] == y[..k] {
                    out.insert(x[..k].to_vec());
                }
            }
        }
    }
    out
}

/// Longest prefix of some reading covered by at most three pieces, scanning all splits.
fn brute_b6_ok(p: &Presentation) -> bool {
    let pieces = brute_pieces(p);
    occurrences(p).iter().all(|w| {
        let n = w.len();
        let is_piece = |a: usize, b: usize| a == b || pieces.contains(&w[a..b]);
        (0..=n).all(|s| {
            let covered = (0..=s).any(|i| (i..=s).any(|j| is_piece(0, i) && is_piece(i, j) && is_piece(j, s)));
            !covered || 2 * s <= n
        })
    })
}

#[test]
fn pieces_of_a_fourth_power() {
    let p = pres("<a | aaaa>");
    let t = compute_pieces(&p, PieceMode::Standard);
    let a = &p.alphabet;
    let expect: BTreeSet<Word> = ["a", "aa", "aaa", "A", "AA", "AAA"].iter().map(|s| a.parse(s).unwrap()).collect();
    assert_eq!(t.all_pieces(), expect);
    assert_eq!(t.all_pieces(), brute_pieces(&p));
}

#[test]
fn piece_tables_match_brute_force() {
    for s in ["<a, b | ababABAB>", "<a, b | abaBAB>", "<a, b | abAB>", "<a, b | abab, baba>", "<a, b, c | aab, ccb>"] {
        let p = pres(s);
        let t = compute_pieces(&p, PieceMode::Standard);
        assert_eq!(t.all_pieces(), brute_pieces(&p), "{s}");
        let longest = brute_pieces(&p).iter().map(Vec::len).max().unwrap_or(0);
        assert_eq!(t.max_piece(), longest, "{s}");
    }
    assert_eq!(compute_pieces(&dihedral_presentation(4), PieceMode::Standard).max_piece(), 3);
}

#[test]
fn disjoint_alphabets_have_no_cross_pieces() {
    let p = pres("<a, b, c, d | aab, ccd>");
    let t = compute_pieces(&p, PieceMode::Standard);
    for piece in t.all_pieces() {
        let gens: BTreeSet<usize> = piece.iter().map(|&l| word::gen_of(l)).collect();
        assert!(gens.is_subset(&BTreeSet::from([0, 1])) || gens.is_subset(&BTreeSet::from([2, 3])), "{piece:?}");
    }
}

#[test]
fn pieces_symmetric_under_inversion_and_shift() {
    let p = dihedral_presentation(5);
    let all = compute_pieces(&p, PieceMode::Standard).all_pieces();
    for piece in &all {
        assert!(all.contains(&inverse(piece)));
    }
    let shifted = Presentation::new(p.alphabet.clone(), vec![rotate(&p.relators[0], 3)]);
    assert_eq!(compute_pieces(&shifted, PieceMode::Standard).all_pieces(), all);
}

#[test]
fn extra_large_dihedral_is_c6_in_syllables() {
    for m in [4, 5, 6] {
        let p = dihedral_presentation(m);
        let v = check_small_cancellation(&p, Condition::C(6), PieceMode::Syllable);
        assert!(v.holds, "m = {m}");
        assert!(check_small_cancellation(&p, Condition::B6, PieceMode::Syllable).holds);
        // Letter-level pieces are longer; the plain reading only gets C(4).
        assert!(check_small_cancellation(&p, Condition::C(4), PieceMode::Standard).holds);
        assert!(!check_small_cancellation(&p, Condition::C(6), PieceMode::Standard).holds);
    }
}

#[test]
fn b6_fails_for_abab_with_baba() {
    let p = pres("<a, b | abab, baba>");
    let v = check_small_cancellation(&p, Condition::B6, PieceMode::Standard);
    assert!(!v.holds);
    let Some(Witness::Pieces { word, pieces }) = v.witness else { panic!("no witness") };
    let joined: Word = pieces.concat();
    assert!(pieces.len() <= 3);
    assert_eq!(word[..joined.len()], joined[..]);
    assert!(2 * joined.len() > word.len());
    assert!(brute_b6_ok(&p) == v.holds);
}

#[test]
fn b6_agrees_with_split_scan() {
    for s in ["<a, b | ababABAB>", "<a, b | abAB>", "<a, b | aabbAB>", "<a, b, c | abc, aCb>", "<a | aaaaaaa>"] {
        let p = pres(s);
        assert_eq!(check_small_cancellation(&p, Condition::B6, PieceMode::Standard).holds, brute_b6_ok(&p), "{s}");
    }
}

#[test]
fn free_presentation_is_vacuous() {
    let p = pres("<a, b | >");
    for c in [Condition::C(6), Condition::T(4), Condition::B6] {
        assert!(check_small_cancellation(&p, c, PieceMode::Standard).holds);
    }
}

/// Closed cancelling triples r1 r2 r3 from the symmetrized set.
fn brute_t4_ok(p: &Presentation) -> bool {
    let sym = p.symmetrized();
    let arc = |r: &Word, s: &Word| *s != inverse(r) && *r.last().unwrap() == -s[0];
    !sym.iter().any(|x| sym.iter().any(|y| sym.iter().any(|z| arc(x, y) && arc(y, z) && arc(z, x))))
}

#[test]
fn t4_on_presentations() {
    for s in ["<a, b | abAB>", "<a, b, c | ab, Bc, CA>", "<a, b, c | abc>", "<a, b | aabbAB>"] {
        let p = pres(s);
        let v = check_small_cancellation(&p, Condition::T(4), PieceMode::Standard);
        assert_eq!(v.holds, brute_t4_ok(&p), "{s}");
    }
    let v = check_small_cancellation(&pres("<a, b, c | ab, Bc, CA>"), Condition::T(4), PieceMode::Standard);
    let Some(Witness::Walk(w)) = v.witness else { panic!("expected a walk") };
    assert_eq!(w.len(), 3);
}

#[test]
fn single_square_is_valid_and_reduced() {
    let p = pres("<a, b | abAB>");
    let v = validate_diagram(&fixtures::square(), &p);
    assert!(v.valid() && v.reduced(), "{v:?}");
}

/// Reading both regions from the shared edge: mirror when one is the other reversed.
fn brute_mirrors(d: &PlanarDiagram) -> BTreeSet<String> {
    let sides = d.sides();
    let mut out = BTreeSet::new();
    for (ei, e) in d.edges.iter().enumerate() {
        let (s1, i) = sides[&Dart::new(ei, true)];
        let (s2, j) = sides[&Dart::new(ei, false)];
        if let (Side::Region(r1), Side::Region(r2)) = (s1, s2) {
            let w1 = rotate(&d.region_word(r1), i);
            let w2 = rotate(&d.region_word(r2), j);
            if r1 != r2 && w1 == inverse(&rotate(&w2, 1)) {
                out.insert(e.id.clone());
            }
        }
    }
    out
}

#[test]
fn mirror_squares_are_not_reduced() {
    let p = pres("<a, b | abAB>");
    let d = fixtures::mirror_pair();
    let v = validate_diagram(&d, &p);
    assert!(v.valid(), "{v:?}");
    assert!(!v.reduced());
    assert_eq!(v.mirror_pairs.len(), 1);
    assert_eq!(v.mirror_pairs[0].edge, "u1");
    for d in [fixtures::mirror_pair(), fixtures::grid(3, 3), fixtures::l_tromino()] {
        let fast: BTreeSet<String> = d.mirror_pairs().into_iter().map(|m| m.edge).collect();
        assert_eq!(fast, brute_mirrors(&d));
    }
}

#[test]
fn grid_fixtures_are_planar_discs() {
    let p = pres("<a, b | abAB>");
    for d in [fixtures::grid(2, 2), fixtures::grid(3, 3), fixtures::ladder(4), fixtures::l_tromino(), fixtures::grid(2, 3)] {
        let v = validate_diagram(&d, &p);
        assert!(v.valid() && v.reduced(), "{v:?}");
        let back = PlanarDiagram::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }
}

#[test]
fn broken_diagrams_are_reported() {
    let p = pres("<a, b | abAB>");
    let mut d = fixtures::grid(1, 2);
    d.outer.pop();
    assert!(!validate_diagram(&d, &p).valid());
    let mut d = fixtures::square();
    d.edges[0].label = 2;
    assert_eq!(validate_diagram(&d, &p).unlabeled, vec!["R0_0".to_string()]);
}

/// Interior edges after valence-2 suppression, counted by merging edges through valence-2 vertices.
fn suppressed_interior_edges(d: &PlanarDiagram) -> usize {
    let sides = d.sides();
    let interior: Vec<usize> = (0..d.edges.len())
        .filter(|&e| {
            matches!(sides[&Dart::new(e, true)].0, Side::Region(_)) && matches!(sides[&Dart::new(e, false)].0, Side::Region(_))
        })
        .collect();
    let mut comp: HashMap<usize, usize> = interior.iter().map(|&e| (e, e)).collect();
    fn root(c: &mut HashMap<usize, usize>, mut x: usize) -> usize {
        while c[&x] != x {
            x = c[&x];
        }
        x
    }
    for v in 0..d.vertices.len() {
        if d.valence(v) != 2 {
            continue;
        }
        let at: Vec<usize> =
            interior.iter().copied().filter(|&e| d.edges[e].from == v || d.edges[e].to == v).collect();
        if let [x, y] = at[..] {
            let (rx, ry) = (root(&mut comp, x), root(&mut comp, y));
            comp.insert(rx, ry);
        }
    }
    interior.iter().map(|&e| root(&mut comp, e)).collect::<BTreeSet<_>>().len()
}

fn check_witnesses(r: &StripReport) {
    for &s in &r.singletons {
        assert!(r.simple[s] && r.interior_degree[s] <= 1);
    }
    for c in &r.compounds {
        assert!(c.len() >= 2);
        assert_eq!(r.interior_degree[c[0]], 2);
        assert_eq!(r.interior_degree[*c.last().unwrap()], 2);
        for &x in &c[1..c.len() - 1] {
            assert_eq!(r.interior_degree[x], 3);
        }
    }
}

#[test]
fn strips_on_grids() {
    let cases = [
        (fixtures::grid(2, 2), Some("iii")),
        (fixtures::ladder(2), Some("i")),
        (fixtures::ladder(3), Some("i")),
        (fixtures::ladder(6), Some("i")),
        (fixtures::grid(3, 3), Some("iii")),
        (fixtures::l_tromino(), Some("i")),
        (fixtures::grid(2, 3), Some("iii")),
        (fixtures::square(), None),
    ];
    for (d, case) in cases {
        let r = find_strips(&d);
        assert_eq!(r.trichotomy.case(), case, "{}", r.trichotomy);
        assert_eq!(r.interior_degree.iter().sum::<usize>(), 2 * suppressed_interior_edges(&r.core));
        assert_eq!(r.interior_suppressed_edges(), suppressed_interior_edges(&r.core));
        check_witnesses(&r);
    }
    let r = find_strips(&fixtures::ladder(5));
    assert_eq!(r.names(&r.singletons), vec!["R0_0", "R0_4"]);
    let r = find_strips(&fixtures::square());
    assert_eq!(r.trichotomy, Trichotomy::NotApplicable("more than one region required".into()));
    let r = find_strips(&fixtures::grid(2, 2));
    assert!(r.singletons.is_empty());
    assert_eq!(r.compounds.len(), 4);
}

#[test]
fn spikes_are_trimmed_before_the_trichotomy() {
    let mut d = fixtures::ladder(2);
    let corner = d.vertices.iter().position(|v| v == "p0_0").unwrap();
    d.vertices.push("tip".into());
    d.edges.push(DEdge { id: "s".into(), from: corner, to: d.vertices.len() - 1, label: 1 });
    let s = d.edges.len() - 1;
    let at = d.outer.iter().position(|&x| d.dart_start(x) == corner).unwrap();
    d.outer.insert(at, Dart::new(s, false));
    d.outer.insert(at, Dart::new(s, true));
    assert!(d.structure_problems().is_empty(), "{:?}", d.structure_problems());
    let r = find_strips(&d);
    assert_eq!(r.spikes, vec!["tip".to_string()]);
    assert_eq!(r.trichotomy.case(), Some("i"));
}

#[test]
fn dual_graph_dot_mentions_strips() {
    let dot = dot::dual_dot(&find_strips(&fixtures::ladder(3)));
    assert!(dot.starts_with("graph dual {"));
    assert!(dot.contains("singleton"));
    assert!(dot.contains("\"R0_0\" -- \"R0_1\""));
}

#[test]
fn commutator_boundary_has_area_one() {
    let p = pres("<a, b | abAB>");
    let u = p.alphabet.parse("abAB").unwrap();
    let r = search_disc_diagram(&p, &u, 3).unwrap();
    assert_eq!(r.area, 1);
    assert_eq!(r.diagram.boundary_word(), u);
}

#[test]
fn square_of_squares_needs_area_four() {
    let p = pres("<a, b | abAB>");
    let u = p.alphabet.parse("aabbAABB").unwrap();
    let r = search_disc_diagram(&p, &u, 6).unwrap();
    assert_eq!(r.area, 4);
    assert!(search_disc_diagram(&p, &u, 3).is_none());
    let v = validate_diagram(&r.diagram, &p);
    assert!(v.valid() && v.reduced(), "{v:?}");
    assert_eq!(r.diagram.boundary_word(), u);
}

#[test]
fn search_results_are_least_area() {
    let p = pres("<a, b | abAB>");
    for (u, area) in [("abAB", 1), ("aabAAB", 2), ("abABabAB", 2), ("abbABB", 2), ("aA", 0), ("abABbaBA", 0)] {
        let w = p.alphabet.parse(u).unwrap();
        let r = search_disc_diagram(&p, &w, 4).unwrap();
        assert_eq!(r.area, area, "{u}");
        if area > 0 {
            assert!(search_disc_diagram(&p, &w, area - 1).is_none(), "{u}");
        }
        let v = validate_diagram(&r.diagram, &p);
        assert!(v.valid() && v.reduced(), "{u}: {v:?}");
        assert_eq!(r.diagram.boundary_word(), w);
    }
}

#[test]
fn unsatisfiable_boundary_within_bound() {
    let p = pres("<a, b | abAB>");
    assert!(search_disc_diagram(&p, &p.alphabet.parse("ab").unwrap(), 4).is_none());
    assert!(search_disc_diagram(&p, &p.alphabet.parse("aab").unwrap(), 3).is_none());
}

#[test]
fn search_is_the_same_sequentially() {
    let p = dihedral_presentation(4);
    let u = p.alphabet.parse("aababAABAB").unwrap();
    let par = search_disc_diagram(&p, &u, 3).unwrap();
    recur_par::force_sequential(true);
    let seq = search_disc_diagram(&p, &u, 3).unwrap();
    recur_par::force_sequential(false);
    assert_eq!(par.diagram, seq.diagram);
}

#[test]
fn search_in_a_complex() {
    let c = recur_complex::fixtures::pillow();
    let f = &c.faces[0];
    let r = search_complex(&c, &f.boundary, 2).unwrap();
    assert_eq!(r.area, 1);
    let d = r.diagram.to_complex().unwrap();
    assert_eq!(d.faces.len(), 1);
}

#[test]
fn separating_vertices_of_dihedral_regions() {
    let d = fixtures::dihedral_polygon(4);
    let s = separating_vertices(&d, 0, 4).unwrap();
    assert!(s.exposed);
    assert_eq!((d.vertices[s.vertices.0].as_str(), d.vertices[s.vertices.1].as_str()), ("q0", "q4"));

    let mut rotated = d.clone();
    rotated.regions[0].boundary.rotate_left(3);
    let t = separating_vertices(&rotated, 0, 4).unwrap();
    assert_eq!(BTreeSet::from([t.vertices.0, t.vertices.1]), BTreeSet::from([s.vertices.0, s.vertices.1]));
    assert_eq!(rotated.dart_start(rotated.regions[0].boundary[t.shift]), t.vertices.0);

    let b = fixtures::buried_dihedral();
    assert!(b.structure_problems().is_empty(), "{:?}", b.structure_problems());
    let s = separating_vertices(&b, 0, 4).unwrap();
    assert!(!s.exposed);

    let sq = fixtures::square();
    assert!(separating_vertices(&sq, 0, 4).is_err());
}

fn syllable_disjoint(u: &[Letter], c: &CornerSubwords, m: usize) -> bool {
    let syl = word::syllable_index(u);
    let span = |p: usize| (0..m).map(|k| syl[(p + k) % u.len()]).collect::<BTreeSet<_>>();
    span(c.w1.pos).is_disjoint(&span(c.w2.pos))
}

fn is_corner_form(w: &[Letter], m: usize) -> bool {
    let (a, b) = (1, 2);
    [p_m(a, b, m), p_m(b, a, m)].iter().any(|x| *x == w || inverse(x) == w)
}

#[test]
fn corner_subwords_of_the_relator() {
    let p = dihedral_presentation(4);
    let u = p.relators[0].clone();
    let c = corner_subwords(&u, 4, 1).unwrap().unwrap();
    assert_eq!((c.w1.pos, c.w2.pos), (0, 4));
    assert_eq!(c.w1.word, p_m(1, 2, 4));
    assert_eq!(c.w2.word, inverse(&p_m(2, 1, 4)));
    for s in 1..u.len() {
        let v = rotate(&u, s);
        let c = corner_subwords(&v, 4, 1).unwrap().unwrap();
        let got = BTreeSet::from([(c.w1.pos + s) % 8, (c.w2.pos + s) % 8]);
        assert_eq!(got, BTreeSet::from([0, 4]), "shift {s}");
    }
}

#[test]
fn corner_subwords_at_area_two() {
    let p = dihedral_presentation(4);
    for u in ["aababAABAB", "BababbABAB"] {
        let w = p.alphabet.parse(u).unwrap();
        assert!(matches!(corner_subwords(&w, 4, 1), Err(DiagramError::BoundExhausted(1))), "{u}");
        for s in 0..w.len() {
            let v = rotate(&w, s);
            let c = corner_subwords(&v, 4, 2).unwrap().unwrap();
            assert_eq!(c.area, 2);
            for x in [&c.w1, &c.w2] {
                assert!(is_corner_form(&x.word, 4));
                assert_eq!(rotate(&v, x.pos)[..4], x.word[..]);
            }
            assert!(syllable_disjoint(&v, &c, 4));
        }
    }
}
