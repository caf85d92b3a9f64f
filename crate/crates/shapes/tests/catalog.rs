use std::collections::BTreeSet;

use recur_shapes::{billiard_trace, chord, shape_catalog, Anchor, Pt, Quad, ShapeError, ShapeKind};

fn q(s: &str) -> Quad {
    s.parse().unwrap()
}

fn anchor(side: usize, t: &str, x: &str, y: &str) -> Anchor {
    Anchor::new(side, q(t), Pt::new(q(x), q(y)))
}

/// Keys (point, direction) computed from plain coordinates, independent of
/// the template's side bookkeeping.
fn coordinate_set(kind: ShapeKind) -> BTreeSet<(Pt, Pt)> {
    let s = shape_catalog(kind).unwrap();
    s.anchors.iter().map(|a| (s.anchor_point(a), a.dir.clone())).collect()
}

#[test]
fn triq244_matches_the_four_bullets() {
    let s = shape_catalog(ShapeKind::TriQ244).unwrap();
    assert_eq!(s.anchors.len(), 10);
    // hypotenuse V0 -> V1 is side 0; legs are sides 1 and 2
    assert_eq!(s.lengths, vec![q("sqrt2"), q("1"), q("1")]);
    let hyp_ts: BTreeSet<Quad> = s.anchors.iter().filter(|a| a.side == 0).map(|a| a.t.clone()).collect();
    assert_eq!(hyp_ts, [q("1/4"), q("1/2"), q("3/4")].into_iter().collect());
    for a in &s.anchors {
        let along = s.along(a);
        match (a.side, a.t.to_string().as_str()) {
            (0, "1/4") | (0, "3/4") => assert!(along.is_zero()),
            (0, "1/2") => assert_eq!(along.abs(), q("sqrt2/2")),
            (_, "1/2") => assert!(along.is_zero() || along.abs() == q("sqrt2/2")),
            _ => panic!("unexpected anchor {a:?}"),
        }
    }
    for leg in [1, 2] {
        let alongs: BTreeSet<Quad> = s.anchors.iter().filter(|a| a.side == leg).map(|a| s.along(a)).collect();
        assert_eq!(alongs, [q("0"), q("sqrt2/2"), q("-sqrt2/2")].into_iter().collect());
    }
}

#[test]
fn triq244_leg_swap_is_a_symmetry() {
    let set = coordinate_set(ShapeKind::TriQ244);
    let swapped: BTreeSet<(Pt, Pt)> = set
        .iter()
        .map(|(p, d)| (Pt::new(p.y.clone(), p.x.clone()), Pt::new(d.y.clone(), d.x.clone())))
        .collect();
    assert_eq!(set, swapped);
    assert!(shape_catalog(ShapeKind::TriQ244).unwrap().symmetric());
}

#[test]
fn triq244_trajectories_close() {
    let s = shape_catalog(ShapeKind::TriQ244).unwrap();
    let m = "-sqrt2/2";
    let t1 = billiard_trace(&s, &anchor(0, "1/4", m, m), 20).unwrap();
    assert_eq!(t1.period, Some(6));
    assert!(t1.retracing);
    assert_eq!(t1.distinct_segments(), Some(3));
    let visited: Vec<(usize, Quad)> = t1.anchors.iter().take(4).map(|a| (a.side, a.t.clone())).collect();
    assert_eq!(visited, vec![(0, q("1/4")), (2, q("1/2")), (1, q("1/2")), (0, q("3/4"))]);

    let t2 = billiard_trace(&s, &anchor(0, "1/2", "-1", "0"), 20).unwrap();
    assert_eq!(t2.period, Some(4));
    let sides: Vec<usize> = t2.anchors.iter().map(|a| a.side).collect();
    assert_eq!(sides, vec![0, 1, 0, 2]);
    assert!(t2.anchors.iter().filter(|a| a.side != 0).all(|a| s.is_perpendicular(a)));
}

#[test]
fn triq244_chord_from_quarter_point() {
    let s = shape_catalog(ShapeKind::TriQ244).unwrap();
    let c = chord(&s, &anchor(0, "1/4", "-sqrt2/2", "-sqrt2/2")).unwrap();
    assert_eq!(c.to, Pt::new(q("1/2"), q("0")));
    assert_eq!(c.end.side, 2);
    assert_eq!(s.along(&c.end).abs(), q("sqrt2/2"));
    assert_eq!(c.length, q("sqrt2/4"));
}

#[test]
fn bisector_into_the_right_angle_hits_a_vertex() {
    let s = shape_catalog(ShapeKind::TriQ244).unwrap();
    let e = chord(&s, &anchor(0, "1/2", "-sqrt2/2", "-sqrt2/2")).unwrap_err();
    assert_eq!(e, ShapeError::VertexHit { side: 0 });
}

#[test]
fn square_chords_and_period() {
    let s = shape_catalog("UnitSquare".parse().unwrap()).unwrap();
    assert_eq!(s.anchors.len(), 8);
    assert!(s.anchors.iter().all(|a| s.is_perpendicular(a)));
    let a = anchor(0, "1/4", "0", "1");
    let c = chord(&s, &a).unwrap();
    assert_eq!((c.end.side, c.end.t.clone()), (2, q("3/4")));
    assert_eq!(billiard_trace(&s, &a, 10).unwrap().period, Some(2));
}

/// Derive the TriH236 anchor set from two closed billiards and compare with
/// the frozen catalog entry.
#[test]
fn trih236_derived_from_two_billiards() {
    let s = shape_catalog(ShapeKind::TriH236).unwrap();
    assert_eq!(s.lengths, vec![q("1"), q("2"), q("sqrt3")]);
    // perpendicular through the midpoint of the short leg
    let seed1 = anchor(0, "1/2", "0", "1");
    // perpendicular to the long leg at its 3:1 point
    let seed2 = anchor(2, "3/4", "1", "0");
    let mut derived = BTreeSet::new();
    for seed in [&seed1, &seed2] {
        let tr = billiard_trace(&s, seed, 50).unwrap();
        assert!(tr.closed() && tr.retracing);
        for a in &tr.anchors {
            derived.insert(s.key(a));
            let c = chord(&s, a).unwrap();
            derived.insert(s.key(&c.end));
        }
    }
    let t1 = billiard_trace(&s, &seed1, 50).unwrap();
    let t2 = billiard_trace(&s, &seed2, 50).unwrap();
    assert_eq!(t1.distinct_segments(), Some(3));
    assert_eq!(t2.distinct_segments(), Some(5));
    let frozen: BTreeSet<_> = s.anchors.iter().map(|a| s.key(a)).collect();
    assert_eq!(derived, frozen);
    assert_eq!(frozen.len(), 16);
}

#[test]
fn catalog_closure_and_perpendicular_coverage() {
    for name in ["TriQ244", "TriH236", "Gon(4)", "Gon(6)", "Gon(8)", "Gon(12)"] {
        let s = shape_catalog(name.parse().unwrap()).unwrap();
        assert!(s.is_convex(), "{name}");
        assert!(s.symmetric(), "{name}");
        let keys: BTreeSet<_> = s.anchors.iter().map(|a| s.key(a)).collect();
        for a in &s.anchors {
            let c = chord(&s, a).unwrap();
            assert!(keys.contains(&s.key(&c.end)), "{name}: {a:?} leaves the set");
            let back = chord(&s, &c.end).unwrap();
            assert_eq!(&back.end, a, "{name}: involution");
        }
        for side in 0..s.n_sides() {
            assert!(s.anchors.iter().any(|a| a.side == side && s.is_perpendicular(a)), "{name} side {side}");
        }
    }
}

#[test]
fn gon_quarter_points_land_at_three_quarters() {
    for k in [4, 6, 8, 12] {
        let s = shape_catalog(ShapeKind::Gon(k)).unwrap();
        for a in s.anchors.iter().filter(|a| a.t == q("1/4")) {
            let c = chord(&s, a).unwrap();
            assert_eq!(c.end.side, (a.side + k as usize / 2) % k as usize);
            assert_eq!(c.end.t, q("3/4"));
        }
    }
}

#[test]
fn catalog_rejections() {
    assert!("Gon(10)".parse::<ShapeKind>().is_err());
    assert!("Gon(2)".parse::<ShapeKind>().is_err());
    assert!("Pentagon".parse::<ShapeKind>().is_err());
    assert!(shape_catalog(ShapeKind::Equilateral).unwrap().anchors.is_empty());
}
