//! The permutahedron: vertices, the face lattice via ordered partitions,
//! and exact face counts.

use crate::combin::{factorial, stirling2};
use crate::error::{Error, Result};
use crate::partition::{ordered_partitions, OrderedPartition};

/// Factorial guard for vertex enumeration.
pub const MAX_VERTEX_D: usize = 9;

/// Guard for full face enumeration (ordered Bell growth).
pub const MAX_FACE_D: usize = 8;

/// A permutation as its value list: `perm[i]` is the (1-based) value at
/// (0-based) position `i`.
pub type Permutation = Vec<usize>;

/// The `d!` vertices `(sigma(1), .., sigma(d))` of the permutahedron, in
/// lexicographic order. They all lie on the hyperplane where the
/// coordinates sum to `d (d + 1) / 2`.
pub fn vertices(d: usize) -> Result<Vec<Permutation>> {
    if d == 0 || d > MAX_VERTEX_D {
        return Err(Error::DimensionOutOfRange {
            what: "permutahedron vertices",
            min: 1,
            max: MAX_VERTEX_D,
            got: d,
        });
    }
    let mut out = Vec::with_capacity(factorial(d) as usize);
    let mut current: Permutation = Vec::with_capacity(d);
    let mut used = vec![false; d + 1];
    fill(d, &mut current, &mut used, &mut out);
    Ok(out)
}

fn fill(d: usize, current: &mut Permutation, used: &mut [bool], out: &mut Vec<Permutation>) {
    if current.len() == d {
        out.push(current.clone());
        return;
    }
    for v in 1..=d {
        if !used[v] {
            used[v] = true;
            current.push(v);
            fill(d, current, used, out);
            current.pop();
            used[v] = false;
        }
    }
}

/// A face of the permutahedron, named by its ordered partition. The naming
/// is a lattice isomorphism onto the refinement order, so containment of
/// faces is refinement of partitions; the geometric vertex set is derived
/// on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutahedronFace {
    partition: OrderedPartition,
}

impl PermutahedronFace {
    pub fn new(partition: OrderedPartition) -> Self {
        PermutahedronFace { partition }
    }

    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    pub fn dimension(&self) -> usize {
        self.partition.face_dimension()
    }

    /// The vertex set of the face: exactly the permutations that send the
    /// j-th block onto the j-th consecutive run of values. For a partition
    /// with blocks `(T_1, .., T_r)`, a vertex `sigma` qualifies when
    /// `sigma(T_1)` is the first `|T_1|` values, `sigma(T_2)` the next
    /// `|T_2|`, and so on.
    pub fn vertex_set(&self) -> Vec<Permutation> {
        let d = self.partition.ground_size();
        let mut out: Vec<Permutation> = vec![vec![0; d]];
        let mut offset = 1usize;
        for block in self.partition.blocks() {
            let positions = block.indices();
            let values: Vec<usize> = (offset..offset + positions.len()).collect();
            offset += positions.len();
            let mut extended = Vec::new();
            for base in &out {
                for assignment in value_assignments(&values) {
                    let mut next = base.clone();
                    for (pos, val) in positions.iter().zip(&assignment) {
                        next[*pos] = *val;
                    }
                    extended.push(next);
                }
            }
            out = extended;
        }
        out.sort();
        out
    }

    /// Vertex-set containment, the geometric face order.
    pub fn contains(&self, other: &PermutahedronFace) -> bool {
        let big = self.vertex_set();
        other
            .vertex_set()
            .iter()
            .all(|v| big.binary_search(v).is_ok())
    }
}

/// All orderings of a value list.
fn value_assignments(values: &[usize]) -> Vec<Vec<usize>> {
    if values.len() == 1 {
        return vec![values.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &v) in values.iter().enumerate() {
        let mut rest = values.to_vec();
        rest.remove(k);
        for mut tail in value_assignments(&rest) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

/// Every face of the permutahedron, one per ordered partition.
pub fn faces(d: usize) -> Result<Vec<PermutahedronFace>> {
    if d == 0 || d > MAX_FACE_D {
        return Err(Error::DimensionOutOfRange {
            what: "permutahedron faces",
            min: 1,
            max: MAX_FACE_D,
            got: d,
        });
    }
    Ok(ordered_partitions(d)?.map(PermutahedronFace::new).collect())
}

/// Number of `n`-dimensional faces: `(d - n)! S(d, d - n)`.
pub fn face_count(d: usize, n: usize) -> Result<u128> {
    if d == 0 || n >= d {
        return Err(Error::DimensionOutOfRange {
            what: "face dimension",
            min: 0,
            max: d.saturating_sub(1),
            got: n,
        });
    }
    Ok(factorial(d - n) * stirling2(d, d - n))
}

/// The partition naming the vertex face of a permutation: the singletons of
/// its inverse, in value order.
pub fn vertex_partition(sigma: &Permutation) -> OrderedPartition {
    let d = sigma.len();
    let mut position_of_value = vec![0usize; d + 1];
    for (pos, &v) in sigma.iter().enumerate() {
        position_of_value[v] = pos;
    }
    OrderedPartition::from_index_blocks(
        d,
        &(1..=d)
            .map(|v| vec![position_of_value[v]])
            .collect::<Vec<_>>(),
    )
    .expect("singletons partition the ground set")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ordered_partitions_vec;

    #[test]
    fn vertex_counts_and_hyperplane() {
        assert_eq!(vertices(1).unwrap(), vec![vec![1]]);
        assert_eq!(vertices(2).unwrap(), vec![vec![1, 2], vec![2, 1]]);
        let v3 = vertices(3).unwrap();
        assert_eq!(v3.len(), 6);
        for v in &v3 {
            assert_eq!(v.iter().sum::<usize>(), 6);
        }
        assert!(vertices(0).is_err());
        assert!(vertices(MAX_VERTEX_D + 1).is_err());
    }

    #[test]
    fn face_counts_match_formula() {
        assert_eq!(face_count(3, 0).unwrap(), 6);
        assert_eq!(face_count(3, 1).unwrap(), 6);
        assert_eq!(face_count(3, 2).unwrap(), 1);
        assert_eq!(face_count(4, 1).unwrap(), 36);
        for d in 1..=6 {
            assert_eq!(face_count(d, d - 1).unwrap(), 1);
        }
        assert!(face_count(3, 3).is_err());
    }

    #[test]
    fn enumerated_faces_match_formula_counts() {
        for d in 1..=6 {
            let all = faces(d).unwrap();
            for n in 0..d {
                let count = all.iter().filter(|f| f.dimension() == n).count() as u128;
                assert_eq!(count, face_count(d, n).unwrap(), "d={d} n={n}");
            }
            assert_eq!(all.len() as u128, crate::combin::ordered_bell(d));
        }
    }

    #[test]
    fn vertex_faces_name_inverse_permutations() {
        for sigma in vertices(3).unwrap() {
            let p = vertex_partition(&sigma);
            let face = PermutahedronFace::new(p);
            assert_eq!(face.vertex_set(), vec![sigma]);
        }
    }

    #[test]
    fn top_face_holds_every_vertex() {
        let top = PermutahedronFace::new(OrderedPartition::trivial(3));
        assert_eq!(top.vertex_set(), vertices(3).unwrap());
    }

    #[test]
    fn edge_vertex_sets() {
        // The edge ({1,3},{2}) of the hexagon: sigma maps {1,3} onto {1,2}
        // and 2 onto 3, so its endpoints are (1,3,2) and (2,3,1).
        let p = OrderedPartition::from_index_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        let face = PermutahedronFace::new(p);
        assert_eq!(face.vertex_set(), vec![vec![1, 3, 2], vec![2, 3, 1]]);
    }

    #[test]
    fn lattice_isomorphism_small() {
        // Vertex-set containment agrees with partition refinement on every
        // pair, exhaustively through d = 4.
        for d in 1..=4 {
            let all = ordered_partitions_vec(d).unwrap();
            let faces: Vec<PermutahedronFace> =
                all.iter().cloned().map(PermutahedronFace::new).collect();
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    assert_eq!(
                        faces[j].contains(&faces[i]),
                        p.refines(q),
                        "d={d} p={p} q={q}"
                    );
                }
            }
        }
    }
}
