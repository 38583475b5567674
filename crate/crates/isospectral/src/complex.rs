//! The sign-glued polyhedral complex over an isospectral set: sign-labeled
//! copies of the permutahedron glued by blockwise sign flips, with exact
//! Euler characteristics, closed-surface diagnostics for three points, and
//! the Petrie walk.

use std::collections::HashMap;

use crate::combin::{factorial, stirling2, tanh_series_times_factorial};
use crate::error::{Error, Result};
use crate::partition::{ordered_partitions, OrderedPartition};
use crate::subset::Subset;

/// Full enumeration guard for the glued complex.
pub const MAX_COMPLEX_D: usize = 6;

/// Consecutive index runs with the block sizes of a partition: the gluing
/// relation acts on matrix indices, and a matrix interior to the face of a
/// partition is block diagonal along these runs.
pub fn sign_runs(partition: &OrderedPartition) -> Vec<Subset> {
    let mut runs = Vec::with_capacity(partition.block_count());
    let mut offset = 0usize;
    for block in partition.blocks() {
        let size = block.cardinality();
        runs.push(Subset::from_indices(
            &(offset..offset + size).collect::<Vec<_>>(),
        ));
        offset += size;
    }
    runs
}

/// A sign class: an equivalence class of sign vectors under independent
/// flips on each run of the owning partition, stored by its canonical
/// representative. Bit `k` set means the sign at index `k` is negative; the
/// canonical form has a positive sign at the first index of every run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignClass {
    mask: u32,
}

impl SignClass {
    /// Canonicalizes an arbitrary sign vector relative to the runs.
    pub fn canonical(runs: &[Subset], mask: u32) -> SignClass {
        let mut m = mask;
        for run in runs {
            let first = run.min_index().expect("runs are nonempty");
            if m >> first & 1 == 1 {
                m ^= run.mask();
            }
        }
        SignClass { mask: m }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    /// The representative as signs, `+1` / `-1` per index.
    pub fn signs(self, d: usize) -> Vec<i8> {
        (0..d)
            .map(|k| if self.mask >> k & 1 == 1 { -1 } else { 1 })
            .collect()
    }

    /// All `2^q` members of the class.
    pub fn members(self, runs: &[Subset]) -> Vec<u32> {
        let mut out = vec![self.mask];
        for run in runs {
            let flipped: Vec<u32> = out.iter().map(|m| m ^ run.mask()).collect();
            out.extend(flipped);
        }
        out.sort_unstable();
        out
    }
}

/// A face of the glued complex: an ordered partition naming a permutahedron
/// face, together with a sign class over that partition's runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexFace {
    pub partition: OrderedPartition,
    pub signs: SignClass,
}

impl ComplexFace {
    pub fn dimension(&self) -> usize {
        self.partition.face_dimension()
    }
}

/// The glued complex with its full face list and covering incidences.
#[derive(Debug, Clone)]
pub struct IsospectralComplex {
    d: usize,
    faces: Vec<ComplexFace>,
    index: HashMap<ComplexFace, usize>,
    /// Face ids grouped by dimension.
    by_dimension: Vec<Vec<usize>>,
    /// (parent, child) pairs with the parent one dimension higher.
    covers: Vec<(usize, usize)>,
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
}

impl IsospectralComplex {
    /// Enumerates all faces and covering incidences for the given spectrum
    /// size: every ordered partition paired with each of its `2^(d - q)`
    /// canonical sign classes, and the unique subface for every adjacent
    /// refinement.
    pub fn build(d: usize) -> Result<IsospectralComplex> {
        if d == 0 || d > MAX_COMPLEX_D {
            return Err(Error::DimensionOutOfRange {
                what: "complex enumeration",
                min: 1,
                max: MAX_COMPLEX_D,
                got: d,
            });
        }
        let mut faces = Vec::new();
        for partition in ordered_partitions(d)? {
            let runs = sign_runs(&partition);
            // Free sign positions: everything except each run's first index.
            let mut free = Vec::new();
            for run in &runs {
                let first = run.min_index().unwrap();
                free.extend(run.iter().filter(|&i| i != first));
            }
            for bits in 0..(1u32 << free.len()) {
                let mut mask = 0u32;
                for (pos, &idx) in free.iter().enumerate() {
                    if bits >> pos & 1 == 1 {
                        mask |= 1 << idx;
                    }
                }
                faces.push(ComplexFace {
                    partition: partition.clone(),
                    signs: SignClass { mask },
                });
            }
        }
        // Deterministic face ids: dimension, then partition block list,
        // then sign representative.
        faces.sort_by(|a, b| {
            a.dimension()
                .cmp(&b.dimension())
                .then_with(|| a.partition.blocks().cmp(b.partition.blocks()))
                .then_with(|| a.signs.cmp(&b.signs))
        });
        let index: HashMap<ComplexFace, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();

        let mut by_dimension = vec![Vec::new(); d];
        for (i, f) in faces.iter().enumerate() {
            by_dimension[f.dimension()].push(i);
        }

        let mut covers = Vec::new();
        let mut children = vec![Vec::new(); faces.len()];
        let mut parents = vec![Vec::new(); faces.len()];
        for (parent_id, face) in faces.iter().enumerate() {
            for refinement in face.partition.adjacent_refinements() {
                let runs = sign_runs(&refinement);
                let child = ComplexFace {
                    signs: SignClass::canonical(&runs, face.signs.mask()),
                    partition: refinement,
                };
                let child_id = index[&child];
                covers.push((parent_id, child_id));
                children[parent_id].push(child_id);
                parents[child_id].push(parent_id);
            }
        }

        Ok(IsospectralComplex {
            d,
            faces,
            index,
            by_dimension,
            covers,
            children,
            parents,
        })
    }

    pub fn spectrum_size(&self) -> usize {
        self.d
    }

    pub fn faces(&self) -> &[ComplexFace] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &ComplexFace {
        &self.faces[id]
    }

    pub fn face_id(&self, face: &ComplexFace) -> Option<usize> {
        self.index.get(face).copied()
    }

    pub fn ids_of_dimension(&self, n: usize) -> &[usize] {
        &self.by_dimension[n]
    }

    /// (parent, child) covering pairs, parent one dimension higher.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn children_of(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    pub fn parents_of(&self, id: usize) -> &[usize] {
        &self.parents[id]
    }

    /// Containment in the face order: reflexive-transitive closure of the
    /// covering relation, decided combinatorially. A face contains another
    /// when the partitions refine and the coarser sign class sits inside
    /// the finer one.
    pub fn contains(&self, big: usize, small: usize) -> bool {
        let a = &self.faces[big];
        let b = &self.faces[small];
        if !b.partition.refines(&a.partition) {
            return false;
        }
        let runs = sign_runs(&b.partition);
        SignClass::canonical(&runs, a.signs.mask()) == b.signs
    }

    /// Number of faces in each dimension, `0..d`.
    pub fn face_vector(&self) -> Vec<usize> {
        self.by_dimension.iter().map(Vec::len).collect()
    }

    /// Alternating sum of the face vector.
    pub fn euler_characteristic(&self) -> i128 {
        self.face_vector()
            .iter()
            .enumerate()
            .map(|(n, &c)| {
                let signed = c as i128;
                if n % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }
}

/// Number of `n`-dimensional faces of the glued complex over `d` points:
/// `2^n (d - n)! S(d, d - n)`.
pub fn complex_face_count(d: usize, n: usize) -> Result<u128> {
    if d == 0 || n >= d {
        return Err(Error::DimensionOutOfRange {
            what: "face dimension",
            min: 0,
            max: d.saturating_sub(1),
            got: n,
        });
    }
    Ok((1u128 << n) * factorial(d - n) * stirling2(d, d - n))
}

/// The Euler characteristic by the closed-form alternating sum
/// `sum over q of (-2)^(d-q) q! S(d, q)`.
pub fn euler_characteristic_formula(d: usize) -> i128 {
    (1..=d)
        .map(|q| {
            let base: i128 = -2;
            base.pow((d - q) as u32) * factorial(q) as i128 * stirling2(d, q) as i128
        })
        .sum()
}

/// The Euler characteristic through the hyperbolic tangent series,
/// `d! [x^d] tanh x`, computed in exact integers from the tangent numbers.
pub fn euler_characteristic_tanh(d: usize) -> i128 {
    tanh_series_times_factorial(d)
}

/// Closed-surface diagnostics for the glued complex.
#[derive(Debug, Clone)]
pub struct SurfaceReport {
    pub face_vector: Vec<usize>,
    pub euler_characteristic: i128,
    pub connected: bool,
    /// Every edge lies in exactly two 2-faces (d = 3) or every vertex lies
    /// in exactly two edges (d = 2).
    pub edges_regular: bool,
    /// Every vertex link is a single cycle (d = 3 only; vacuous below).
    pub vertex_links_are_cycles: bool,
    /// Common vertex degree when uniform.
    pub vertex_degree: Option<usize>,
    /// Genus from `chi = 2 - 2g` when the closed-surface checks pass.
    pub genus: Option<i128>,
    pub failures: Vec<String>,
}

impl SurfaceReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the closed-surface checks. For `d = 3` this verifies the
/// edge-in-two-faces condition, single-cycle vertex links, connectivity,
/// and the Euler characteristic; the genus is then read off `chi = 2 - 2g`.
/// For `d = 2` it checks the circle conditions, and `d = 1` is a point.
pub fn surface_report(complex: &IsospectralComplex) -> SurfaceReport {
    let d = complex.spectrum_size();
    let face_vector = complex.face_vector();
    let chi = complex.euler_characteristic();
    let mut failures = Vec::new();

    let connected = is_connected(complex);
    if !connected {
        failures.push("complex is not connected".to_string());
    }

    let mut edges_regular = true;
    let mut links_are_cycles = true;
    let mut vertex_degree = None;

    match d {
        1 => {}
        2 => {
            for &v in complex.ids_of_dimension(0) {
                let degree = complex.parents_of(v).len();
                if degree != 2 {
                    edges_regular = false;
                    failures.push(format!("vertex {v} lies in {degree} edges, expected 2"));
                }
            }
            vertex_degree = Some(2);
        }
        3 => {
            for &e in complex.ids_of_dimension(1) {
                let count = complex.parents_of(e).len();
                if count != 2 {
                    edges_regular = false;
                    failures.push(format!("edge {e} lies in {count} 2-faces, expected 2"));
                }
            }
            let mut degrees = Vec::new();
            for &v in complex.ids_of_dimension(0) {
                let link = vertex_link_cycle(complex, v);
                match link {
                    Some(len) => degrees.push(len),
                    None => {
                        links_are_cycles = false;
                        failures.push(format!("vertex {v} link is not a single cycle"));
                    }
                }
            }
            if links_are_cycles && !degrees.is_empty() && degrees.iter().all(|&x| x == degrees[0]) {
                vertex_degree = Some(degrees[0]);
            }
        }
        _ => {
            failures.push(format!("surface checks are defined for d <= 3, got {d}"));
        }
    }

    let genus = if d == 3 && failures.is_empty() {
        // chi = 2 - 2g for a closed orientable surface.
        Some((2 - chi) / 2)
    } else {
        None
    };

    SurfaceReport {
        face_vector,
        euler_characteristic: chi,
        connected,
        edges_regular,
        vertex_links_are_cycles: links_are_cycles,
        vertex_degree,
        genus,
        failures,
    }
}

fn is_connected(complex: &IsospectralComplex) -> bool {
    let vertices = complex.ids_of_dimension(0);
    if vertices.is_empty() {
        return false;
    }
    if complex.spectrum_size() == 1 {
        return vertices.len() == 1;
    }
    let mut seen: HashMap<usize, bool> = HashMap::new();
    let mut stack = vec![vertices[0]];
    seen.insert(vertices[0], true);
    while let Some(v) = stack.pop() {
        for &edge in complex.parents_of(v) {
            if complex.face(edge).dimension() != 1 {
                continue;
            }
            for &w in complex.children_of(edge) {
                if seen.insert(w, true).is_none() {
                    stack.push(w);
                }
            }
        }
    }
    vertices.iter().all(|v| seen.contains_key(v))
}

/// Checks that the link of a vertex is one cycle: the graph on the vertex's
/// edges, adjacent when a common 2-face holds both, must be connected and
/// 2-regular. Returns the cycle length (the vertex degree).
fn vertex_link_cycle(complex: &IsospectralComplex, vertex: usize) -> Option<usize> {
    let edges: Vec<usize> = complex.parents_of(vertex).to_vec();
    if edges.is_empty() {
        return None;
    }
    let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
    for (a_pos, &a) in edges.iter().enumerate() {
        for &b in edges.iter().skip(a_pos + 1) {
            let common = complex
                .parents_of(a)
                .iter()
                .filter(|f| complex.parents_of(b).contains(f))
                .count();
            for _ in 0..common {
                adjacency.entry(a).or_default().push(b);
                adjacency.entry(b).or_default().push(a);
            }
        }
    }
    if edges
        .iter()
        .any(|e| adjacency.get(e).map(Vec::len) != Some(2))
    {
        return None;
    }
    // Walk the cycle and require it to close over every edge.
    let start = edges[0];
    let mut previous = start;
    let mut current = adjacency[&start][0];
    let mut length = 1;
    while current != start {
        let next = *adjacency[&current]
            .iter()
            .find(|&&n| n != previous)
            .expect("2-regular");
        previous = current;
        current = next;
        length += 1;
        if length > edges.len() {
            return None;
        }
    }
    if length == edges.len() {
        Some(length)
    } else {
        None
    }
}

/// A flag of the complex: mutually incident vertex, edge, and 2-face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flag {
    pub vertex: usize,
    pub edge: usize,
    pub face: usize,
}

/// The closed Petrie walk: a cyclic edge sequence in which every two
/// consecutive edges share a 2-face but no three consecutive do.
#[derive(Debug, Clone)]
pub struct PetrieWalk {
    pub start: Flag,
    pub edges: Vec<usize>,
    /// Distinct edges covered by the walk.
    pub covered_edges: usize,
    pub covers_all_edges: bool,
}

impl PetrieWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// The first flag in id order, as a deterministic starting point.
pub fn first_flag(complex: &IsospectralComplex) -> Result<Flag> {
    let &vertex = complex
        .ids_of_dimension(0)
        .first()
        .ok_or_else(|| Error::InvalidInput("complex has no vertices".into()))?;
    let &edge = complex
        .parents_of(vertex)
        .iter()
        .min()
        .ok_or_else(|| Error::InvalidInput("vertex has no edges".into()))?;
    let &face = complex
        .parents_of(edge)
        .iter()
        .min()
        .ok_or_else(|| Error::InvalidInput("edge has no 2-faces".into()))?;
    Ok(Flag { vertex, edge, face })
}

/// Walks the Petrie rule from a starting flag until that flag recurs,
/// collecting the traversed edges. Requires the closed-surface conditions
/// (every edge in exactly two 2-faces, polygonal faces); fails otherwise.
pub fn petrie_polygon(complex: &IsospectralComplex, start: Flag) -> Result<PetrieWalk> {
    if complex.spectrum_size() != 3 {
        return Err(Error::DimensionOutOfRange {
            what: "Petrie walk",
            min: 3,
            max: 3,
            got: complex.spectrum_size(),
        });
    }
    let report = surface_report(complex);
    if !report.all_passed() {
        return Err(Error::InvalidInput(format!(
            "complex is not a closed surface: {}",
            report.failures.join("; ")
        )));
    }
    validate_flag(complex, start)?;

    let other_vertex = |edge: usize, vertex: usize| -> usize {
        *complex
            .children_of(edge)
            .iter()
            .find(|&&v| v != vertex)
            .expect("edges have two distinct vertices")
    };
    let other_edge_in_face = |face: usize, vertex: usize, edge: usize| -> usize {
        *complex
            .children_of(face)
            .iter()
            .find(|&&e| e != edge && complex.children_of(e).contains(&vertex))
            .expect("a polygon has two edges at each of its vertices")
    };
    let other_face = |edge: usize, face: usize| -> usize {
        *complex
            .parents_of(edge)
            .iter()
            .find(|&&f| f != face)
            .expect("each edge lies in exactly two 2-faces")
    };

    let mut edges = Vec::new();
    let mut state = start;
    let limit = 8 * complex.ids_of_dimension(1).len().max(1);
    loop {
        let next_edge = other_edge_in_face(state.face, state.vertex, state.edge);
        let next_vertex = other_vertex(next_edge, state.vertex);
        let next_face = other_face(next_edge, state.face);
        state = Flag {
            vertex: next_vertex,
            edge: next_edge,
            face: next_face,
        };
        edges.push(next_edge);
        if state == start {
            break;
        }
        if edges.len() > limit {
            return Err(Error::Numeric(
                "Petrie walk failed to close; the flag orbit exceeded its bound".into(),
            ));
        }
    }

    // Defining property of the walk: consecutive edges share exactly one
    // 2-face, and no three consecutive edges share any.
    let shared_faces = |a: usize, b: usize| -> Vec<usize> {
        complex
            .parents_of(a)
            .iter()
            .filter(|f| complex.parents_of(b).contains(f))
            .copied()
            .collect()
    };
    let wrapped = |i: usize| edges[i % edges.len()];
    for i in 0..edges.len() {
        let pair = shared_faces(wrapped(i), wrapped(i + 1));
        if pair.len() != 1 {
            return Err(Error::Numeric(format!(
                "consecutive walk edges share {} 2-faces",
                pair.len()
            )));
        }
        let triple: Vec<usize> = pair
            .into_iter()
            .filter(|f| complex.parents_of(wrapped(i + 2)).contains(f))
            .collect();
        if !triple.is_empty() {
            return Err(Error::Numeric(
                "three consecutive walk edges share a 2-face".into(),
            ));
        }
    }

    let mut distinct: Vec<usize> = edges.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let total = complex.ids_of_dimension(1).len();
    Ok(PetrieWalk {
        start,
        covered_edges: distinct.len(),
        covers_all_edges: distinct.len() == total,
        edges,
    })
}

fn validate_flag(complex: &IsospectralComplex, flag: Flag) -> Result<()> {
    let ok = complex.face(flag.vertex).dimension() == 0
        && complex.face(flag.edge).dimension() == 1
        && complex.face(flag.face).dimension() == 2
        && complex.children_of(flag.edge).contains(&flag.vertex)
        && complex.children_of(flag.face).contains(&flag.edge);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidInput(
            "start flag is not a mutually incident (vertex, edge, face) triple".into(),
        ))
    }
}

/// The boundary cycle of a 2-face: its vertices in cyclic order.
pub fn face_boundary_cycle(complex: &IsospectralComplex, face: usize) -> Result<Vec<usize>> {
    let edges = complex.children_of(face);
    let mut at_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in edges {
        for &v in complex.children_of(e) {
            at_vertex.entry(v).or_default().push(e);
        }
    }
    if at_vertex.values().any(|es| es.len() != 2) {
        return Err(Error::InvalidInput(format!(
            "face {face} boundary is not a polygon"
        )));
    }
    let first_edge = edges[0];
    let start = complex.children_of(first_edge)[0];
    let mut cycle = vec![start];
    let mut previous_edge = first_edge;
    let mut current = *complex
        .children_of(first_edge)
        .iter()
        .find(|&&v| v != start)
        .expect("two endpoints");
    while current != start {
        cycle.push(current);
        let next_edge = *at_vertex[&current]
            .iter()
            .find(|&&e| e != previous_edge)
            .expect("two edges per vertex");
        previous_edge = next_edge;
        current = *complex
            .children_of(next_edge)
            .iter()
            .find(|&&v| v != current)
            .expect("two endpoints");
    }
    Ok(cycle)
}

/// OFF document for the `d = 3` surface: the six permutahedron vertices with
/// their lattice coordinates, and the four hexagons as vertex cycles.
pub fn off_document(complex: &IsospectralComplex) -> Result<String> {
    if complex.spectrum_size() != 3 {
        return Err(Error::DimensionOutOfRange {
            what: "OFF export",
            min: 3,
            max: 3,
            got: complex.spectrum_size(),
        });
    }
    let vertices = complex.ids_of_dimension(0);
    let edges = complex.ids_of_dimension(1);
    let faces2 = complex.ids_of_dimension(2);

    let position_of =
        |id: usize| -> usize { vertices.iter().position(|&v| v == id).expect("vertex id") };
    let mut out = String::from("OFF\n");
    out.push_str(&format!(
        "{} {} {}\n",
        vertices.len(),
        faces2.len(),
        edges.len()
    ));
    for &v in vertices {
        // Coordinate i of the vertex is the 1-based position of the block
        // holding index i, recovering the permutahedron embedding.
        let partition = &complex.face(v).partition;
        let coords: Vec<String> = (0..3)
            .map(|i| format!("{}", partition.block_of(i) + 1))
            .collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    for &f in faces2 {
        let cycle = face_boundary_cycle(complex, f)?;
        let mut line = format!("{}", cycle.len());
        for v in cycle {
            line.push_str(&format!(" {}", position_of(v)));
        }
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}
