//! The complex `Δ(𝔄)` with Stanley–Reisner ideal `L(𝔄)^∨`, and its
//! classification as a simplicial sphere or ball.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::hom::{AlphabetMap, PosetIdeal};
use crate::homology::{face_of, faces_by_size, reduced_homology, Face};
use crate::letterplace::ideal_of;
use crate::linalg::Field;
use crate::monomial::Monomial;
use crate::resolution::build_resolution;

/// A simplicial complex on labelled vertices, kept by its facets.
///
/// A complex with no facets is the void complex; the facet list `[0]` is the
/// complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Face>,
}

fn members(f: Face) -> impl Iterator<Item = usize> {
    (0..128usize).filter(move |v| f >> v & 1 == 1)
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal faces of `faces`.
    pub fn new(vertices: Vec<String>, faces: Vec<Face>, guards: &Guards) -> Result<SimplicialComplex> {
        guards.check("simplex-vertices", vertices.len())?;
        let bound = if vertices.len() == 128 {
            u128::MAX
        } else {
            (1u128 << vertices.len()) - 1
        };
        if faces.iter().any(|f| f & !bound != 0) {
            return Err(Error::invalid("face uses a vertex outside the vertex list"));
        }
        let mut sorted = faces;
        sorted.sort_by_key(|f| (std::cmp::Reverse(f.count_ones()), *f));
        sorted.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(sorted.len());
        for f in sorted {
            if !facets.iter().any(|&g| f & g == f) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { vertices, facets })
    }

    /// From facets given as vertex index lists.
    pub fn from_lists(vertices: Vec<String>, facets: &[Vec<usize>], guards: &Guards) -> Result<SimplicialComplex> {
        if facets.iter().flatten().any(|&v| v >= vertices.len() || v >= 128) {
            return Err(Error::invalid("facet vertex out of range"));
        }
        let faces = facets.iter().map(|f| face_of(f.iter().copied())).collect();
        Self::new(vertices, faces, guards)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Facets as sorted vertex-label lists.
    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|&f| members(f).map(|v| self.vertices[v].as_str()).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `-1` for `{∅}`; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// Vertices lying in some facet.
    pub fn used_vertices(&self) -> Face {
        self.facets.iter().fold(0, |a, f| a | f)
    }

    pub fn faces(&self, guards: &Guards) -> Result<Vec<Face>> {
        Ok(faces_by_size(&self.facets, guards)?.into_iter().flatten().collect())
    }

    /// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`; void when `F` is not a face.
    pub fn link(&self, face: Face) -> SimplicialComplex {
        let mut facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|&&f| face & f == face)
            .map(|&f| f & !face)
            .collect();
        facets.sort_unstable();
        facets.dedup();
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets,
        }
    }

    /// The subcomplex generated by the codimension-one faces lying in exactly one facet.
    pub fn boundary(&self) -> Result<SimplicialComplex> {
        if !self.is_pure() {
            return Err(Error::invalid("boundary needs a pure complex"));
        }
        let mut count: HashMap<Face, usize> = HashMap::new();
        for &f in &self.facets {
            for v in members(f) {
                *count.entry(f & !(1u128 << v)).or_insert(0) += 1;
            }
        }
        let mut facets: Vec<Face> = count.into_iter().filter(|&(_, c)| c == 1).map(|(f, _)| f).collect();
        facets.sort_unstable();
        Ok(SimplicialComplex {
            vertices: self.vertices.clone(),
            facets,
        })
    }

    /// `Δ * Γ` on the disjoint union of the vertex sets.
    pub fn join(&self, other: &SimplicialComplex, guards: &Guards) -> Result<SimplicialComplex> {
        if let Some(v) = self.vertices.iter().find(|v| other.vertices.contains(v)) {
            return Err(Error::invalid(format!(
                "join needs disjoint vertex sets; {v} is shared"
            )));
        }
        let shift = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        guards.check("simplex-vertices", vertices.len())?;
        let faces = self
            .facets
            .iter()
            .flat_map(|&f| other.facets.iter().map(move |&g| f | g << shift))
            .collect();
        Self::new(vertices, faces, guards)
    }

    /// `dim H̃_d` at index `d + 1`.
    pub fn reduced_homology(&self, field: Field, guards: &Guards) -> Result<Vec<usize>> {
        reduced_homology(&self.facets, field, guards)
    }

    /// Codimension-one faces together with the number of facets containing each.
    pub fn ridge_degrees(&self) -> Vec<(Face, usize)> {
        let mut count: HashMap<Face, usize> = HashMap::new();
        let top = self.dim().unwrap_or(-1);
        for f in self.facets.iter().filter(|f| f.count_ones() as isize - 1 == top) {
            for v in members(*f) {
                *count.entry(f & !(1u128 << v)).or_insert(0) += 1;
            }
        }
        let mut out: Vec<_> = count.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// One facet per line, vertex labels separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for f in self.facet_labels() {
            s.push_str(&f.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "dim": self.dim(),
            "facets": self.facet_labels(),
        })
    }
}

fn is_sphere_homology(h: &[usize], dim: isize) -> bool {
    let top = (dim + 1) as usize;
    h.len() == top + 1 && h.iter().enumerate().all(|(i, &x)| x == usize::from(i == top))
}

fn is_acyclic(h: &[usize]) -> bool {
    h.iter().all(|&x| x == 0)
}

/// `Δ(𝔄)` on the achieved vertices, with bookkeeping about the vertices left out.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaComplex {
    pub complex: SimplicialComplex,
    /// `B_i`, the letters taken at `p_i` by some member.
    pub b_sets: Vec<Vec<u32>>,
    /// `(p_i, a)` with `a in A_i \ B_i`: every facet over the full vertex set contains them.
    pub discarded: Vec<String>,
    /// Vertices of `V'` contained in no facet, i.e. achieved by every member.
    pub ghosts: Vec<String>,
}

/// Builds `Δ(𝔄)` with facets `V' \ Γf`, and checks them against the Alexander
/// dual of `L(𝔄)` over the full vertex set.
pub fn delta_of(ideal: &PosetIdeal, guards: &Guards) -> Result<DeltaComplex> {
    let b_sets = ideal.achieved_letters();
    let poset = ideal.poset();
    let label = |i: usize, a: u32| format!("({},{a})", poset.id(i));
    let mut vertices = Vec::new();
    let mut index: HashMap<(usize, u32), usize> = HashMap::new();
    for (i, b) in b_sets.iter().enumerate() {
        for &a in b {
            index.insert((i, a), vertices.len());
            vertices.push(label(i, a));
        }
    }
    guards.check("simplex-vertices", vertices.len())?;
    let all: Face = if vertices.len() == 128 {
        u128::MAX
    } else {
        (1u128 << vertices.len()) - 1
    };
    let faces: Vec<Face> = ideal
        .members()
        .iter()
        .map(|f| all & !face_of(f.values().iter().enumerate().map(|(i, &a)| index[&(i, a)])))
        .collect();
    let complex = SimplicialComplex::new(vertices.clone(), faces, guards)?;
    if complex.facets.len() != ideal.len() {
        return Err(Error::verification("facets of Δ(𝔄) are not in bijection with 𝔄"));
    }
    check_stanley_reisner(ideal, &b_sets, &complex)?;
    let used = complex.used_vertices();
    let ghosts = (0..vertices.len())
        .filter(|v| used >> v & 1 == 0)
        .map(|v| vertices[v].clone())
        .collect();
    let mut discarded = Vec::new();
    for i in 0..ideal.m() {
        for &a in ideal.alphabet().set(i) {
            if !index.contains_key(&(i, a)) {
                discarded.push(label(i, a));
            }
        }
    }
    Ok(DeltaComplex {
        complex,
        b_sets,
        discarded,
        ghosts,
    })
}

/// The minimal non-faces of `Δ(𝔄)` over the full vertex set `V` must be the
/// generators of `L(𝔄)^∨`.
fn check_stanley_reisner(ideal: &PosetIdeal, b_sets: &[Vec<u32>], delta: &SimplicialComplex) -> Result<()> {
    let (ring, l) = ideal_of(ideal);
    let nv = ring.nvars();
    if nv > 128 {
        return Ok(());
    }
    let dual = l.alexander_dual(&(0..nv).collect::<Vec<_>>())?;
    // facets over V: V' facets plus every discarded vertex
    let mut to_full = Vec::new();
    let mut extra: Face = 0;
    for (i, b) in b_sets.iter().enumerate() {
        for &a in ideal.alphabet().set(i) {
            let v = ring.var(i, a).expect("alphabet letter");
            if b.contains(&a) {
                to_full.push(v);
            } else {
                extra |= 1u128 << v;
            }
        }
    }
    let facets: Vec<Face> = delta
        .facets
        .iter()
        .map(|&f| members(f).fold(extra, |acc, v| acc | 1u128 << to_full[v]))
        .collect();
    let in_delta = |s: Face| facets.iter().any(|&f| s & f == s);
    let as_face = |m: &Monomial| face_of(m.support());
    let full: Face = if nv == 128 { u128::MAX } else { (1u128 << nv) - 1 };
    for g in dual.gens() {
        let s = as_face(g);
        if in_delta(s) || members(s).any(|v| !in_delta(s & !(1u128 << v))) {
            return Err(Error::verification(
                "a generator of the Alexander dual is not a minimal non-face",
            ));
        }
    }
    let hits = |s: Face| dual.gens().iter().any(|g| as_face(g) & s == as_face(g));
    for &f in &facets {
        if hits(f) || members(full & !f).any(|v| !hits(f | 1u128 << v)) {
            return Err(Error::verification("facets disagree with the Stanley–Reisner ideal"));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Sphere,
    Ball,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub b_sets: Vec<Vec<u32>>,
    pub verdict: Shape,
    /// `𝔄 = Hom(P, B)` and `max B_i <= min B_j` whenever `p_i < p_j`.
    pub combinatorial_sphere: bool,
    /// `pd L(𝔄) = sum |B_i| - m`.
    pub pd_sphere: bool,
    pub pd: usize,
    pub pd_bound: usize,
    pub dim: isize,
    pub boundary_facets: Vec<Vec<String>>,
    pub discarded: Vec<String>,
    pub ghosts: Vec<String>,
}

/// Sphere or ball by the combinatorial rule and by projective dimension,
/// asserting that the two rules agree.
pub fn classify(ideal: &PosetIdeal, guards: &Guards) -> Result<ClassificationReport> {
    let delta = delta_of(ideal, guards)?;
    let b = &delta.b_sets;
    let sub = ideal
        .space()
        .with_alphabet(AlphabetMap::new(ideal.alphabet().n(), b.clone())?)?;
    let is_hom = sub.enumerate(guards)? == ideal.members();
    let poset = ideal.poset();
    let m = ideal.m();
    let ordered = (0..m)
        .all(|i| (0..m).all(|j| !poset.lt(i, j) || b[i].last().expect("nonempty") <= b[j].first().expect("nonempty")));
    let combinatorial = is_hom && ordered;
    let pd = build_resolution(ideal, guards)?
        .projective_dimension()
        .expect("nonzero ideal");
    let bound = b.iter().map(Vec::len).sum::<usize>() - m;
    if pd > bound {
        return Err(Error::verification(format!("pd {pd} exceeds sum |B_i| - m = {bound}")));
    }
    let pd_sphere = pd == bound;
    if combinatorial != pd_sphere {
        return Err(Error::verification(format!(
            "combinatorial rule says sphere = {combinatorial}, projective dimension says {pd_sphere}"
        )));
    }
    let boundary = delta.complex.boundary()?;
    let boundary_facets = boundary
        .facet_labels()
        .into_iter()
        .map(|f| f.into_iter().map(str::to_string).collect())
        .collect();
    Ok(ClassificationReport {
        b_sets: b.clone(),
        verdict: if combinatorial { Shape::Sphere } else { Shape::Ball },
        combinatorial_sphere: combinatorial,
        pd_sphere,
        pd,
        pd_bound: bound,
        dim: delta.complex.dim().expect("𝔄 is nonempty"),
        boundary_facets,
        discarded: delta.discarded,
        ghosts: delta.ghosts,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HomologyType {
    Sphere,
    Ball,
    Neither,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyCertificate {
    pub field: Field,
    pub kind: HomologyType,
    pub dim: isize,
    pub faces_checked: usize,
    /// Reduced homology of the whole complex, `H̃_d` at index `d + 1`.
    pub homology: Vec<usize>,
    pub boundary_facets: usize,
}

fn homology_sphere(delta: &SimplicialComplex, field: Field, guards: &Guards) -> Result<(bool, usize)> {
    let Some(d) = delta.dim() else { return Ok((false, 0)) };
    if !delta.is_pure() {
        return Ok((false, 0));
    }
    let faces = delta.faces(guards)?;
    let ok: Vec<Result<bool>> = faces
        .par_iter()
        .map(|&f| {
            let h = delta.link(f).reduced_homology(field, guards)?;
            Ok(is_sphere_homology(&h, d - f.count_ones() as isize))
        })
        .collect();
    let ok = ok.into_iter().collect::<Result<Vec<_>>>()?;
    Ok((ok.iter().all(|&x| x), faces.len()))
}

/// Checks every link against the definitions of homology spheres and balls.
pub fn certify_homology_type(delta: &SimplicialComplex, field: Field, guards: &Guards) -> Result<HomologyCertificate> {
    let homology = delta.reduced_homology(field, guards)?;
    let dim = delta.dim().unwrap_or(-2);
    let (sphere, faces_checked) = homology_sphere(delta, field, guards)?;
    let mut cert = HomologyCertificate {
        field,
        kind: HomologyType::Neither,
        dim,
        faces_checked,
        homology,
        boundary_facets: 0,
    };
    if sphere {
        cert.kind = HomologyType::Sphere;
        return Ok(cert);
    }
    if delta.is_void() || !delta.is_pure() {
        return Ok(cert);
    }
    let sigma = delta.boundary()?;
    cert.boundary_facets = sigma.facets.len();
    let (sigma_sphere, _) = homology_sphere(&sigma, field, guards)?;
    if !sigma_sphere || sigma.dim() != Some(dim - 1) {
        return Ok(cert);
    }
    let faces = delta.faces(guards)?;
    let ok: Vec<Result<bool>> = faces
        .par_iter()
        .map(|&f| {
            let h = delta.link(f).reduced_homology(field, guards)?;
            Ok(if sigma.contains(f) {
                is_acyclic(&h)
            } else {
                is_sphere_homology(&h, dim - f.count_ones() as isize)
            })
        })
        .collect();
    if ok.into_iter().collect::<Result<Vec<_>>>()?.iter().all(|&x| x) {
        cert.kind = HomologyType::Ball;
    }
    Ok(cert)
}
