use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use recur_artin::dihedral::GarsideForm;
use recur_artin::*;
use recur_diagrams::word::{gen_of, letter};
use recur_diagrams::{Alphabet, Letter, Word};

fn words(alphabet: &[Letter], len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|w| alphabet.iter().map(move |&l| [w.clone(), vec![l]].concat())).collect();
    }
    out
}

fn upto(alphabet: &[Letter], len: usize) -> Vec<Word> {
    (0..=len).flat_map(|n| words(alphabet, n)).collect()
}

const AB: [Letter; 4] = [1, 2, -1, -2];

// Permutations of 0..n as vectors; composition applies `p` first.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    (0..p.len()).map(|i| q[p[i]]).collect()
}

fn perm_of(word: &[Letter], gens: &[Vec<usize>]) -> Vec<usize> {
    let n = gens[0].len();
    word.iter().fold((0..n).collect(), |acc, &l| compose(&acc, &gens[gen_of(l)]))
}

/// Reflections acting on (vertex, orientation) pairs of the regular m-gon, encoded as
/// `i + m * flipped`; faithful for every m >= 2, and ab rotates by one.
fn dihedral_perms(m: usize) -> Vec<Vec<usize>> {
    let refl = |shift: usize| (0..2 * m).map(|x| (shift + m - x % m) % m + m * (1 - x / m)).collect();
    vec![refl(0), refl(1)]
}

/// Positive word equivalence class under p_m(a,b) = p_m(b,a).
fn positive_class(w: &[usize], m: usize) -> BTreeSet<Vec<usize>> {
    let alt = |x: usize| (0..m).map(|i| if i % 2 == 0 { x } else { 1 - x }).collect::<Vec<_>>();
    let (pa, pb) = (alt(0), alt(1));
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for i in 0..(u.len() + 1).saturating_sub(m) {
            for (from, to) in [(&pa, &pb), (&pb, &pa)] {
                if u[i..i + m] == from[..] {
                    let mut v = u.clone();
                    v[i..i + m].copy_from_slice(to);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    seen
}

/// Writes w = Δ^-k P with P positive, by moving each Δ^-1 to the front.
fn delta_split(w: &[Letter], m: usize) -> (usize, Vec<usize>) {
    let tau = |x: usize| if m % 2 == 1 { 1 - x } else { x };
    let mut p: Vec<usize> = Vec::new();
    let mut k = 0;
    for &l in w {
        let g = gen_of(l);
        if l > 0 {
            p.push(g);
        } else {
            k += 1;
            p = p.into_iter().map(tau).collect();
            let start = if m % 2 == 1 { g } else { 1 - g };
            p.extend((0..m - 1).map(|i| if i % 2 == 0 { start } else { 1 - start }));
        }
    }
    (k, p)
}

fn delta(m: usize, k: usize) -> Vec<usize> {
    (0..m * k).map(|i| i % 2).collect()
}

/// Triviality in the dihedral Artin group through the positive monoid.
fn artin_trivial_oracle(w: &[Letter], m: usize) -> bool {
    let sum: i32 = w.iter().map(|l| l.signum()).sum();
    if sum != 0 {
        return false;
    }
    let (k, p) = delta_split(w, m);
    positive_class(&p, m).contains(&delta(m, k))
}

/// A canonical key: the least positive word for Δ^r g.
fn artin_key(w: &[Letter], m: usize, r: usize) -> Vec<usize> {
    let (k, p) = delta_split(w, m);
    // Δ^r Δ^-k P = Δ^(r-k) P
    let full = [delta(m, r - k), p].concat();
    positive_class(&full, m).into_iter().next().unwrap()
}

#[test]
fn presentations_from_graphs() {
    let p = standard_presentation(&LabeledGraph::dihedral(4), Target::Artin);
    assert_eq!(p.relators.len(), 1);
    assert_eq!(p.alphabet.show(&p.relators[0]), "ababABAB");
    let t = LabeledGraph::triangle(3, 3, 3);
    assert_eq!(standard_presentation(&t, Target::Artin).relators.len(), 3);
    let cox = standard_presentation(&t, Target::Coxeter);
    assert_eq!(cox.relators.len(), 6);
    for (&(_, _, m), r) in t.edges.iter().zip(&standard_presentation(&t, Target::Artin).relators) {
        assert_eq!(r.len(), 2 * m as usize);
    }
    let free = LabeledGraph::new(&["a", "b"], &[]).unwrap();
    assert!(standard_presentation(&free, Target::Artin).relators.is_empty());
}

#[test]
fn graph_files_parse_and_reject() {
    let g = LabeledGraph::parse("vertices a b c\na b 2\nb c 3 # comment\nc a 3\n").unwrap();
    assert_eq!(g, LabeledGraph::triangle(2, 3, 3));
    assert_eq!(LabeledGraph::parse(&g.to_json()).unwrap(), g);
    assert!(LabeledGraph::parse("vertices a b\na b 1").is_err());
    assert!(LabeledGraph::parse("vertices a b\na a 3").is_err());
    assert!(LabeledGraph::parse("vertices a b\na z 3").is_err());
    assert!(LabeledGraph::parse("vertices a b\na b 3\nb a 4").is_err());
}

fn angle_sum_at_most_one(x: u64, y: u64, z: u64) -> bool {
    let l = x * y * z;
    l / x + l / y + l / z <= l
}

#[test]
fn graph_classification() {
    let f = classify_graph(&LabeledGraph::triangle(4, 4, 4));
    assert!(f.extra_large && f.two_dimensional && !f.triangle_with_two);
    assert!(classify_graph(&LabeledGraph::triangle(2, 3, 5)).triangle_with_two);
    assert!(!classify_graph(&LabeledGraph::triangle(2, 2, 2)).two_dimensional);
    for x in 2..8 {
        for y in 2..8 {
            for z in 2..8 {
                let f = classify_graph(&LabeledGraph::triangle(x, y, z));
                assert_eq!(f.two_dimensional, angle_sum_at_most_one(x as u64, y as u64, z as u64));
                assert_eq!(f.extra_large, x >= 4 && y >= 4 && z >= 4);
                assert_eq!(f.triangle_with_two, [x, y, z].contains(&2));
            }
        }
    }
    let sq = LabeledGraph::new(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 5)])
        .unwrap();
    assert!(classify_graph(&sq).square_with_three_twos);
    let sq2 = LabeledGraph::new(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 3), ("d", "a", 5)])
        .unwrap();
    assert!(!classify_graph(&sq2).square_with_three_twos);
}

#[test]
fn coxeter_dihedral_matches_permutations() {
    let plain = [1, 2];
    for m in 2..=6u32 {
        let perms = dihedral_perms(m as usize);
        let id: Vec<usize> = (0..2 * m as usize).collect();
        let mut ws = upto(&AB, 5);
        ws.extend(words(&plain, 6));
        ws.extend(words(&plain, 7));
        ws.extend(words(&plain, 8));
        for w in ws {
            let v = dihedral_word_problem(&w, m, Target::Coxeter).unwrap();
            let p = perm_of(&w, &perms);
            assert_eq!(v.trivial, p == id, "m={m} w={w:?}");
            let NormalForm::Coxeter(e) = v.normal_form else { panic!() };
            assert_eq!(perm_of(&e.word(m), &perms), p, "m={m} w={w:?} e={e}");
        }
    }
    let ab = [1, 2];
    let v = dihedral_word_problem(&ab, 3, Target::Coxeter).unwrap();
    assert!(!v.trivial);
    assert!(matches!(v.normal_form, NormalForm::Coxeter(CoxeterElement::Rotation(_))));
    assert!(dihedral_word_problem(&ab, 1, Target::Artin).is_err());
}

#[test]
fn artin_dihedral_matches_positive_monoid() {
    for m in [3usize, 4, 5] {
        for w in upto(&AB, 6) {
            let v = dihedral_word_problem(&w, m as u32, Target::Artin).unwrap();
            assert_eq!(v.trivial, artin_trivial_oracle(&w, m), "m={m} w={w:?}");
            let NormalForm::Artin(g) = &v.normal_form else { panic!() };
            assert_eq!(&GarsideForm::of_word(&g.word(), m as u32), g);
        }
    }
    let rel: Word = [1, 2, 1, 2, -1, -2, -1, -2].to_vec();
    assert!(dihedral_word_problem(&rel, 4, Target::Artin).unwrap().trivial);
    let w: Word = [1, 2, 1, -2, -1, -2].to_vec();
    assert!(!dihedral_word_problem(&w, 4, Target::Artin).unwrap().trivial);
    assert!(!artin_trivial_oracle(&w, 4));
}

#[test]
fn tits_solution_matches_permutations() {
    let e2 = LabeledGraph::dihedral(2);
    let e3 = LabeledGraph::dihedral(3);
    assert!(tits_coxeter_word_problem(&[1, 2, 1, 2], &e2));
    assert!(tits_coxeter_word_problem(&[1, 2, 1, 2, 1, 2], &e3));
    assert!(!tits_coxeter_word_problem(&[1, 2, 1, 2], &e3));
    // S4 with a = (01), b = (23), c = (12): labels ab 2, bc 3, ca 3.
    let g = LabeledGraph::triangle(2, 3, 3);
    let gens = vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]];
    let id = vec![0, 1, 2, 3];
    for w in upto(&[1, 2, 3], 7) {
        assert_eq!(tits_coxeter_word_problem(&w, &g), perm_of(&w, &gens) == id, "{w:?}");
    }
}

fn perm_ball(gens: &[Vec<usize>], radius: usize) -> usize {
    let n = gens[0].len();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([(0..n).collect()]);
    let mut frontier: Vec<Vec<usize>> = seen.iter().cloned().collect();
    for _ in 0..radius {
        let mut next = Vec::new();
        for p in &frontier {
            for s in gens {
                let q = compose(p, s);
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

#[test]
fn coxeter_balls_match_enumeration() {
    let b = build_cayley_ball(&LabeledGraph::dihedral(2), Target::Coxeter, 2).unwrap();
    assert_eq!((b.complex.vertices.len(), b.complex.edges.len(), b.complex.faces.len()), (4, 4, 1));
    let b = build_cayley_ball(&LabeledGraph::dihedral(4), Target::Coxeter, 4).unwrap();
    assert_eq!((b.complex.vertices.len(), b.complex.edges.len(), b.complex.faces.len()), (8, 8, 1));
    assert_eq!(b.complex.faces[0].boundary.len(), 8);
    assert!(b.complex.faces[0].shape.is_none());
    let gens = vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]];
    for r in 0..=7 {
        let b = build_cayley_ball(&LabeledGraph::triangle(2, 3, 3), Target::Coxeter, r).unwrap();
        assert_eq!(b.vertex_count(), perm_ball(&gens, r), "radius {r}");
    }
    let b = build_cayley_ball(&LabeledGraph::triangle(2, 3, 3), Target::Coxeter, 6).unwrap();
    // whole of S4: cosets of the three dihedral subgroups
    assert_eq!(b.complex.faces.len(), 24 / 4 + 24 / 6 + 24 / 6);
    assert_eq!(b.complex.euler_characteristic(), 2);
    let tags: BTreeSet<Option<String>> =
        b.complex.faces.iter().map(|f| f.shape.as_ref().map(|s| format!("{:?}", s.kind))).collect();
    assert!(tags.iter().all(Option::is_some));
    assert!(matches!(
        build_cayley_ball_capped(&LabeledGraph::path(3), Target::Coxeter, 10, 50),
        Err(ArtinError::CapExceeded(50))
    ));
}

#[test]
fn artin_balls_match_positive_monoid_keys() {
    for (m, r) in [(4usize, 2usize), (4, 3), (3, 3), (5, 2)] {
        let b = build_cayley_ball(&LabeledGraph::dihedral(m as u32), Target::Artin, r).unwrap();
        let keys: HashSet<Vec<usize>> = upto(&AB, r).iter().map(|w| artin_key(w, m, r)).collect();
        assert_eq!(b.vertex_count(), keys.len(), "m={m} r={r}");
        for (i, w) in b.words.iter().enumerate() {
            assert!(w.len() <= r);
            let key = artin_key(w, m, r);
            for (j, u) in b.words.iter().enumerate().skip(i + 1) {
                assert_ne!(key, artin_key(u, m, r), "{i} {j}");
            }
        }
    }
    assert!(build_cayley_ball(&LabeledGraph::triangle(4, 4, 4), Target::Artin, 2).is_err());
}

#[test]
fn artin_ball_faces_read_the_relator() {
    let b = build_cayley_ball(&LabeledGraph::dihedral(4), Target::Artin, 5).unwrap();
    assert!(!b.complex.faces.is_empty());
    // Face boundaries read ababABAB from their base vertex, along generator edges.
    let gen_of_edge: HashMap<usize, usize> = b.gen_edges.iter().map(|(&(_, s), &e)| (e, s)).collect();
    for f in &b.complex.faces {
        let w: Vec<Letter> =
            f.boundary.iter().map(|d| letter(gen_of_edge[&d.edge], !d.forward)).collect();
        assert_eq!(Alphabet::new(&["a", "b"]).show(&w), "ababABAB");
        assert_eq!(f.boundary.len(), 8);
    }
}

#[test]
fn hypergraph_of_a_square() {
    let c = recur_complex::fixtures::square();
    let hs = all_hypergraphs(&c).unwrap();
    assert_eq!(hs.len(), 2);
    for h in &hs {
        assert_eq!(h.vertices.len(), 2);
        assert_eq!(h.edges.len(), 1);
        assert!(h.is_forest && h.embedded());
        assert_eq!(h.complement_components, 2);
    }
    let dot = hypergraph_dot(&c, &hs);
    assert!(dot.starts_with("graph hypergraph {"));
    assert_eq!(dot.matches(" -- ").count(), 2);
}

#[test]
fn hypergraph_degrees_match_face_counts() {
    for c in [
        build_cayley_ball(&LabeledGraph::dihedral(4), Target::Artin, 5).unwrap().complex,
        build_cayley_ball(&LabeledGraph::triangle(3, 3, 3), Target::Coxeter, 4).unwrap().complex,
        example_a2_diagram(3).unwrap().to_complex().unwrap(),
    ] {
        let mut occurrences = vec![0usize; c.edges.len()];
        for f in &c.faces {
            for d in &f.boundary {
                occurrences[d.edge] += 1;
            }
        }
        let hs = all_hypergraphs(&c).unwrap();
        let mut degree = vec![0usize; c.edges.len()];
        for h in &hs {
            for he in &h.edges {
                degree[he.ends.0] += 1;
                degree[he.ends.1] += 1;
                let b = &c.faces[he.face].boundary;
                assert_eq!(b[he.pos].edge, he.ends.0);
                assert_eq!(b[(he.pos + b.len() / 2) % b.len()].edge, he.ends.1);
            }
        }
        assert_eq!(degree, occurrences);
        let covered: usize = hs.iter().map(|h| h.vertices.len()).sum();
        assert_eq!(covered, c.edges.len());
    }
    let odd = recur_complex::fixtures::lone_triangle();
    assert!(matches!(trace_hypergraph(&odd, 0), Err(ArtinError::OddFace(_))));
}

/// Cycle detection by edge and vertex counts of each component.
fn has_cycle_by_counts(h: &Hypergraph) -> bool {
    h.edges.len() + 1 != h.vertices.len()
}

#[test]
fn artin_walls_are_trees_and_project_to_embedded_walls() {
    let cox = build_cayley_ball(&LabeledGraph::dihedral(4), Target::Coxeter, 4).unwrap();
    let cox_walls = all_hypergraphs(&cox.complex).unwrap();
    for r in [3, 4, 5] {
        let art = build_cayley_ball(&LabeledGraph::dihedral(4), Target::Artin, r).unwrap();
        let walls = all_hypergraphs(&art.complex).unwrap();
        for h in &walls {
            assert!(h.is_forest && h.embedded());
            assert!(!has_cycle_by_counts(h));
        }
        let emap = project_edges(&art, &cox);
        assert!(emap.iter().all(Option::is_some));
        for h in walls.iter().filter(|h| !h.edges.is_empty()) {
            let images: BTreeSet<usize> = h.vertices.iter().map(|&e| emap[e].unwrap()).collect();
            let owners: BTreeSet<usize> =
                images.iter().map(|&e| cox_walls.iter().position(|w| w.contains_edge(e)).unwrap()).collect();
            assert_eq!(owners.len(), 1);
            let w = &cox_walls[*owners.iter().next().unwrap()];
            assert!(w.embedded());
            assert_eq!(images.len(), w.vertices.len());
        }
    }
}

#[test]
fn example_a2_is_reduced_with_a_cycle() {
    for m in [3, 4] {
        let r = example_a2_report(m).unwrap();
        assert_eq!(r.regions(), 12);
        assert_eq!(r.central_labels, vec!["abAB"; 4]);
        assert!(r.verdict.valid() && r.verdict.reduced());
        assert!(!r.tree());
        let cyc = r.cycle.as_ref().unwrap();
        assert_eq!(cyc.len(), 8);
        assert!(!r.cycle_through_squares);
        let d = &r.diagram;
        let two = |a: usize, b: usize| {
            (4..12).filter(|&i| {
                let gens: BTreeSet<usize> = d.region_word(i).iter().map(|&l| gen_of(l)).collect();
                gens == BTreeSet::from([a, b])
            })
            .count()
        };
        assert_eq!(two(0, 2), 4);
        assert_eq!(two(1, 2), 4);
        let c = d.to_complex().unwrap();
        assert_eq!(c.euler_characteristic(), 1);
        assert!(has_cycle_by_counts(r.hypergraphs.iter().find(|h| !h.is_forest).unwrap()));
    }
    let d = example_a2_diagram(3).unwrap();
    assert_eq!((d.vertices.len(), d.edges.len()), (29, 40));
    assert!(example_a2_diagram(2).is_err());
}

#[test]
fn example_a2_report_is_golden() {
    let text = example_a2_report(3).unwrap().render();
    assert_eq!(text, include_str!("golden/example_a2_m3.txt"));
}

#[test]
fn block_runs() {
    let e = LabeledGraph::dihedral(4);
    let runs = block_factorization(&[1, 1, 1, 2, -1], &e).unwrap();
    assert_eq!(runs.len(), 1);
    assert_eq!(runs[0].form, Some(Form::Sandwich { x: 0, y: 1, k: 3, mid: 1, l: -1 }));
    let runs = block_factorization(&[1, 1, 2, 2, 2], &e).unwrap();
    assert_eq!(runs[0].form, Some(Form::TwoPowers { x: 0, y: 1, k: 2, l: 3 }));
    let t = LabeledGraph::triangle(3, 3, 3);
    let runs = block_factorization(&[1, 2, 3], &t).unwrap();
    assert_eq!(runs.iter().map(|r| r.word.clone()).collect::<Vec<_>>(), vec![vec![1, 2], vec![3]]);
    let p = LabeledGraph::path(4);
    let runs = block_factorization(&[1, 3, 1], &p).unwrap();
    assert!(runs[0].no_block);
    assert!(block_factorization(&[4], &p).is_err());
    // p_4(a,b) projects to the longest element, a reflection; abAB is a rotation.
    let runs = block_factorization(&[1, 2, 1, 2], &e).unwrap();
    assert_eq!(runs[0].coxeter, Some(CoxeterElement::of_word(&[1, 2, 1, 2], 4)));
    assert!(!runs[0].coxeter.unwrap().is_identity());
    let runs = block_factorization(&[1, 2, 1, 2, -1, -2, -1, -2], &e).unwrap();
    assert!(runs[0].coxeter.unwrap().is_identity());
}

#[test]
fn block_runs_match_greedy_oracle() {
    let t = LabeledGraph::path(3);
    for w in upto(&[1, 2, 3, -1, -2, -3], 5) {
        let runs = block_factorization(&w, &t).unwrap();
        let joined: Word = runs.iter().flat_map(|r| r.word.clone()).collect();
        assert_eq!(joined, w);
        for pair in runs.windows(2) {
            let gens: BTreeSet<usize> = pair[0].word.iter().map(|&l| gen_of(l)).collect();
            assert_eq!(gens.len(), 2);
            assert!(!gens.contains(&gen_of(pair[1].word[0])));
        }
        for r in &runs {
            let gens: BTreeSet<usize> = r.word.iter().map(|&l| gen_of(l)).collect();
            assert!(gens.len() <= 2);
            assert_eq!(r.no_block, gens.len() == 2 && gens == BTreeSet::from([0, 2]));
        }
    }
}

#[test]
fn wall_probe_holds_without_triangles_with_a_two() {
    for g in [LabeledGraph::dihedral(2), LabeledGraph::dihedral(3)] {
        let b = build_cayley_ball(&g, Target::Coxeter, 4).unwrap();
        let s = probe_all(&b).unwrap();
        assert_eq!(s.adjacent_pairs, 0);
        assert!(s.passed());
    }
    for (g, r) in [(LabeledGraph::path(2), 5), (LabeledGraph::path(3), 5), (LabeledGraph::triangle(3, 3, 3), 5)] {
        let b = build_cayley_ball(&g, Target::Coxeter, r).unwrap();
        let s = probe_all(&b).unwrap();
        assert!(s.adjacent_pairs > 0 && s.trials > 0);
        assert!(s.passed(), "{g}");
        assert_eq!(s.preferred_ok, s.trials, "{g}");
    }
}

#[test]
fn wall_probe_reports_failures_with_a_two_label() {
    let b = build_cayley_ball(&LabeledGraph::triangle(2, 3, 3), Target::Coxeter, 6).unwrap();
    let s = probe_all(&b).unwrap();
    assert!(!s.failures.is_empty());
    for f in &s.failures {
        assert!(f.caveat.is_some());
        assert!(f.candidates.iter().all(|c| c.meeting.is_some() && !c.equal));
        assert!(f.report(&b.complex).contains("meets"));
    }
}

#[test]
fn wall_probe_errors() {
    let b = build_cayley_ball(&LabeledGraph::triangle(3, 3, 3), Target::Coxeter, 4).unwrap();
    let c = &b.complex;
    let faces_of = |e: usize| (0..c.faces.len()).filter(move |&f| c.faces[f].boundary.iter().any(|d| d.edge == e));
    let (s, t) = (0..c.edges.len())
        .find_map(|e| {
            let fs: Vec<usize> = faces_of(e).collect();
            (fs.len() == 2).then(|| (fs[0], fs[1]))
        })
        .unwrap();
    let far = (0..c.faces.len())
        .find(|&f| {
            let es: BTreeSet<usize> = c.faces[f].boundary.iter().map(|d| d.edge).collect();
            f != s && !c.faces[s].boundary.iter().any(|d| es.contains(&d.edge))
        })
        .unwrap();
    let w = trace_hypergraph(c, c.faces[s].boundary[0].edge).unwrap();
    assert!(matches!(coxeter_wall_probe(&b, s, far, &w), Err(ArtinError::NotAdjacent(..))));
    let stray = all_hypergraphs(c)
        .unwrap()
        .into_iter()
        .find(|h| !c.faces[s].boundary.iter().any(|d| h.contains_edge(d.edge)))
        .unwrap();
    assert!(matches!(coxeter_wall_probe(&b, s, t, &stray), Err(ArtinError::WallMissesSigma(_))));
    assert!(coxeter_wall_probe(&b, s, t, &w).unwrap().success());
}
