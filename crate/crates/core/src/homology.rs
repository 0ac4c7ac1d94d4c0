//! Reduced simplicial homology of complexes given by facets over at most 128 vertices.

use std::collections::{HashMap, HashSet};

use crate::error::Result;
use crate::guards::Guards;
use crate::linalg::{Field, SparseMatrix};

/// A face as a vertex bitmask.
pub type Face = u128;

/// All faces of the complex generated by `facets`, grouped by size
/// (`out[s]` holds the faces with `s` vertices, sorted). A void complex
/// (no facets) yields an empty list.
pub fn faces_by_size(facets: &[Face], guards: &Guards) -> Result<Vec<Vec<Face>>> {
    let limit = guards.limit("faces");
    let mut seen: HashSet<Face> = HashSet::new();
    for &f in facets {
        if seen.contains(&f) {
            continue;
        }
        let mut sub = f;
        loop {
            if seen.insert(sub) && seen.len() > limit {
                guards.check("faces", seen.len())?;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
    }
    let top = seen.iter().map(|f| f.count_ones() as usize).max();
    let mut out = vec![Vec::new(); top.map_or(0, |t| t + 1)];
    for f in seen {
        out[f.count_ones() as usize].push(f);
    }
    for v in &mut out {
        v.sort_unstable();
    }
    Ok(out)
}

fn vertices(f: Face) -> impl Iterator<Item = u32> {
    (0..128u32).filter(move |v| f >> v & 1 == 1)
}

/// Boundary map from faces of size `s` to faces of size `s - 1`, with sign
/// `(-1)^j` for removing the `j`-th smallest vertex.
pub fn boundary_matrix(upper: &[Face], lower: &[Face]) -> SparseMatrix {
    let index: HashMap<Face, usize> = lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut m = SparseMatrix::new(lower.len(), upper.len());
    for (c, &f) in upper.iter().enumerate() {
        for (j, v) in vertices(f).enumerate() {
            let r = index[&(f & !(1u128 << v))];
            m.add(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// `dim H̃_d` for `d = -1, 0, ..., dim Δ`, stored at index `d + 1`.
/// The void complex has no homology and yields an empty vector.
pub fn reduced_homology(facets: &[Face], field: Field, guards: &Guards) -> Result<Vec<usize>> {
    let faces = faces_by_size(facets, guards)?;
    if faces.is_empty() {
        return Ok(Vec::new());
    }
    // ranks[s] = rank of the boundary from size s to size s - 1
    let mut ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        ranks[s] = boundary_matrix(&faces[s], &faces[s - 1]).rank(field);
    }
    Ok((0..faces.len())
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect())
}

pub fn face_of(vertices: impl IntoIterator<Item = usize>) -> Face {
    vertices.into_iter().fold(0, |acc, v| acc | 1u128 << v)
}
