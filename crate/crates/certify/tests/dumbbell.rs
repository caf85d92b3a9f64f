use recur_certify::*;
use recur_complex::fixtures::*;
use recur_engine::DirectionSet;
use recur_shapes::Quad;

#[test]
fn base_on_closed_three_page() {
    let c = theta();
    let set = DirectionSet::instantiate(&c).unwrap();
    let base = find_thick_base(&c, &set).unwrap().unwrap();
    // Every edge has degree 3; "e0" is least by id.
    assert_eq!(c.edges[base.edge].id, "e0");
    let faces: Vec<&str> = base.v.iter().map(|&a| c.faces[set.tokens[a].face].id.as_str()).collect();
    assert_eq!(faces, ["P0", "P1", "P2"]);
    for &a in &base.v {
        assert!(set.tokens[a].is_perpendicular());
        assert_eq!(set.tokens[a].t, base.t);
    }
    // Least perpendicular point on the hypotenuse.
    assert_eq!(base.t, Quad::ratio(1, 4));
}

#[test]
fn base_on_pillow_is_none() {
    let c = pillow();
    let set = DirectionSet::instantiate(&c).unwrap();
    assert!(find_thick_base(&c, &set).unwrap().is_none());
}

#[test]
fn base_on_four_pages_uses_face_order() {
    let c = closed_book(4);
    let set = DirectionSet::instantiate(&c).unwrap();
    let base = find_thick_base(&c, &set).unwrap().unwrap();
    let faces: Vec<&str> = base.v.iter().map(|&a| c.faces[set.tokens[a].face].id.as_str()).collect();
    assert_eq!(faces, ["P0", "P1", "P2"]);
}

#[test]
fn base_without_perpendiculars_fails_iv() {
    let c = equilateral_theta();
    let set = DirectionSet::instantiate(&c).unwrap();
    assert!(matches!(find_thick_base(&c, &set), Err(CertifyError::ConditionIv)));
}

#[test]
fn build_then_verify() {
    let c = theta();
    let cert = build_dumbbell(&c).unwrap();
    for p in &cert.paths {
        assert!(!p.tokens.is_empty());
        assert_eq!(p.tokens.len(), p.chords.len());
    }
    assert_eq!(cert.paths[0].tokens[0], cert.v2);
    assert_eq!(cert.paths[1].tokens[0], cert.v3);
    assert_eq!(cert.paths[2].tokens[0], cert.v3);
    assert!(verify_certificate(&c, &cert).unwrap().is_empty());

    let again = build_dumbbell(&c).unwrap();
    assert_eq!(cert.to_json(), again.to_json());
    let back = DumbbellCertificate::from_json(&cert.to_json()).unwrap();
    assert!(verify_certificate(&c, &back).unwrap().is_empty());
}

#[test]
fn four_pages_and_subdivisions_certify() {
    for c in [closed_book(4), theta().subdivide(recur_complex::SubdivisionMode::Altitude).unwrap()] {
        let cert = build_dumbbell(&c).unwrap();
        assert!(verify_certificate(&c, &cert).unwrap().is_empty());
    }
}

#[test]
fn non_thick_input() {
    assert!(matches!(build_dumbbell(&pillow()), Err(CertifyError::NoThickBase)));
    assert!(matches!(build_dumbbell(&open_book()), Err(CertifyError::NoThickBase)));
}

#[test]
fn two_thick_components_use_least_id() {
    let c = disjoint(&theta(), &theta());
    let cert = build_dumbbell(&c).unwrap();
    assert_eq!(cert.edge, "a.e0");
    for p in &cert.paths {
        assert!(p.tokens.iter().all(|t| t.face.starts_with("a.")));
    }
    assert!(verify_certificate(&c, &cert).unwrap().is_empty());
}

#[test]
fn perturbed_junction() {
    let c = theta();
    let mut cert = build_dumbbell(&c).unwrap();
    let p = cert.paths.iter_mut().find(|p| p.tokens.len() >= 2).expect("some path has a junction");
    // Swap in a different anchor of the same face at the junction.
    let set = DirectionSet::instantiate(&c).unwrap();
    let fi = c.face_index(&p.tokens[1].face).unwrap();
    let alt = set
        .tokens
        .iter()
        .find(|t| t.face == fi && (t.t.to_string() != p.tokens[1].t || t.along.to_string() != p.tokens[1].along))
        .unwrap();
    p.tokens[1].pos = alt.pos;
    p.tokens[1].edge = c.edges[alt.edge].id.clone();
    p.tokens[1].t = alt.t.to_string();
    p.tokens[1].along = alt.along.to_string();
    let bad = verify_certificate(&c, &cert).unwrap();
    assert!(bad.iter().any(|b| b.to_string().contains("junction not geodesic")), "{bad:?}");
}

#[test]
fn perturbed_terminal() {
    let c = theta();
    let mut cert = build_dumbbell(&c).unwrap();
    let set = DirectionSet::instantiate(&c).unwrap();
    let p = &mut cert.paths[0];
    let last = p.tokens.last_mut().unwrap();
    let fi = c.face_index(&last.face).unwrap();
    // A token whose I is not perpendicular.
    let tk = set
        .tokens
        .iter()
        .enumerate()
        .find(|(a, t)| t.face == fi && !set.tokens[set.i_of(*a).unwrap()].is_perpendicular())
        .unwrap()
        .1;
    last.pos = tk.pos;
    last.edge = c.edges[tk.edge].id.clone();
    last.t = tk.t.to_string();
    last.along = tk.along.to_string();
    let bad = verify_certificate(&c, &cert).unwrap();
    assert!(bad.iter().any(|b| b.to_string().contains("terminal direction")), "{bad:?}");
}

#[test]
fn tampered_coordinates() {
    let c = theta();
    let mut cert = build_dumbbell(&c).unwrap();
    cert.paths[1].chords[0].to[0] = "7".into();
    let bad = verify_certificate(&c, &cert).unwrap();
    assert!(bad.contains(&Clause::ChordMismatch { path: "C''".into(), index: 0 }));
}

#[test]
fn golden_three_page() {
    let cert = build_dumbbell(&theta()).unwrap();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/theta.json");
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(path, cert.to_json()).unwrap();
    }
    assert_eq!(cert.to_json(), std::fs::read_to_string(path).unwrap());
}
