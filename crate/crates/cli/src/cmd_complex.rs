use std::path::Path;

use recur_complex::{validate_complex, Complex, GalleryClass, SubdivisionMode};

use crate::input::{self, write};
use crate::{CliError, Out, RunReport};

fn header(r: &mut RunReport, c: &Complex) {
    r.line(format!(
        "V={} E={} F={} chi={}",
        c.vertices.len(),
        c.edges.len(),
        c.faces.len(),
        c.euler_characteristic()
    ));
}

fn ids(c: &Complex, faces: &[usize]) -> String {
    faces.iter().map(|&f| c.faces[f].id.as_str()).collect::<Vec<_>>().join(" ")
}

pub fn validate(file: &Path) -> Result<RunReport, CliError> {
    let raw = input::raw_complex(file)?;
    let mut r = RunReport::new("validate");
    r.digest(&[&raw.bytes]);
    match validate_complex(&raw.value) {
        Ok(c) => {
            r.max_coefficient_bits = Some(input::max_bits(&c));
            header(&mut r, &c);
            r.line(c.classify().to_string());
            r.verdict("valid", true, "");
        }
        Err(vs) => {
            for v in &vs {
                r.line(v.to_string());
            }
            r.verdict("valid", false, format!("{} violation(s)", vs.len()));
        }
    }
    Ok(r)
}

pub fn analyze(file: &Path) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let mut r = RunReport::new("analyze");
    r.digest(&[&c.bytes]);
    let c = c.value;
    r.max_coefficient_bits = Some(input::max_bits(&c));
    header(&mut r, &c);
    let deg = c.degrees();
    let mut hist = std::collections::BTreeMap::new();
    for &d in &deg {
        *hist.entry(d).or_insert(0usize) += 1;
    }
    let hist: Vec<String> = hist.iter().map(|(d, n)| format!("{d}:{n}")).collect();
    r.line(format!("edge degrees {}", hist.join(" ")));
    r.line(format!("classification {}", c.classify()));
    let b = c.betti();
    r.line(format!("betti {} {} {}", b.b0, b.b1, b.b2));
    let comps = c.gallery_components();
    r.line(format!("gallery components {}", comps.len()));
    for (i, g) in comps.iter().enumerate() {
        r.line(format!("  [{i}] {} chi={} faces: {}", g.class, g.euler, ids(&c, &g.faces)));
    }
    let spheres = comps.iter().filter(|g| g.class == GalleryClass::Sphere).count();
    r.line(format!("spheres {spheres}"));
    Ok(r)
}

pub fn collapse(file: &Path, cone: bool, out: &Out) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let mut r = RunReport::new("collapse");
    r.digest(&[&c.bytes]);
    let c = c.value;
    let chi0 = c.euler_characteristic();
    let (mut res, rep) = c.collapse_free_edges();
    r.line(format!("removed faces: {}", rep.removed_faces.join(" ")));
    r.line(format!("removed edges: {}", rep.removed_edges.join(" ")));
    // Each step removes one face and one edge.
    r.verdict("euler characteristic preserved", res.euler_characteristic() == chi0, format!("{chi0} -> {}", res.euler_characteristic()));
    r.verdict("confluent", rep.confluent, "");
    if cone {
        let spheres: Vec<i64> =
            res.gallery_components().iter().filter(|g| g.class == GalleryClass::Sphere).map(|g| g.euler).collect();
        let before = res.euler_characteristic();
        res = res.cone_off_spheres()?;
        // A sphere (chi 2) becomes a contractible cone (chi 1).
        let want = before - spheres.len() as i64;
        r.line(format!("coned {} sphere(s)", spheres.len()));
        r.verdict("cone euler characteristic", res.euler_characteristic() == want, format!("{before} -> {}", res.euler_characteristic()));
    }
    header(&mut r, &res);
    if let Some(p) = &out.output {
        r.artifact(write(p, &res.to_json())?);
    }
    Ok(r)
}

pub fn subdivide(file: &Path, mode: &str, out: &Out) -> Result<RunReport, CliError> {
    let mode: SubdivisionMode = mode.parse().map_err(CliError::Usage)?;
    let c = input::complex(file)?;
    let mut r = RunReport::new("subdivide");
    r.digest(&[&c.bytes]);
    let c = c.value;
    let s = c.subdivide(mode)?;
    header(&mut r, &s);
    r.verdict(
        "euler characteristic preserved",
        s.euler_characteristic() == c.euler_characteristic(),
        format!("{} -> {}", c.euler_characteristic(), s.euler_characteristic()),
    );
    if let Some(p) = &out.output {
        r.artifact(write(p, &s.to_json())?);
    }
    Ok(r)
}

pub fn wise(file: &Path, dot: Option<&Path>) -> Result<RunReport, CliError> {
    let c = input::complex(file)?;
    let mut r = RunReport::new("wise");
    r.digest(&[&c.bytes]);
    let c = c.value;
    let n = c.wise_complex();
    r.line(format!("cells {} edges {} triangles {}", n.cells.len(), n.edges.len(), n.triangles.len()));
    r.line(format!("faces {}", c.faces.len()));
    if let Some(p) = dot {
        let mut s = String::from("graph wise {\n");
        for (i, cell) in n.cells.iter().enumerate() {
            s.push_str(&format!("  c{i} [label=\"{cell}\"];\n"));
        }
        for (a, b) in &n.edges {
            s.push_str(&format!("  c{a} -- c{b};\n"));
        }
        s.push_str("}\n");
        r.artifact(write(p, &s)?);
    }
    Ok(r)
}
