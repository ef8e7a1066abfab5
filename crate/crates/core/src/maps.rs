//! Bicolored polygon collections, perfect-matching gluings into non-oriented
//! maps, orientability detection, and the map-summation form of the spin
//! Stanley formula.
//!
//! Each polygon with face value m contributes 2m edge slots in cyclic order;
//! the corner before slot 0 is the root white vertex and corner colors
//! alternate. A perfect matching on the slots glues edges white-end to
//! white-end (the bicoloration makes the gluing unique), and the resulting
//! incidence structure is read off a union–find over corners.

use num::{BigInt, BigRational, Zero};

use crate::combinat::{Partition, Permutation, StrictPartition, UnionFind};
use crate::error::{Error, Result};
use crate::stanley::{coloring_count_graph, BicoloredGraph};

/// A labelled collection of bicolored polygons with a given face-type.
#[derive(Clone, Debug)]
pub struct PolygonCollection {
    face_sizes: Vec<usize>,
    offsets: Vec<usize>, // offsets[i] = first slot of polygon i; +sentinel
}

impl PolygonCollection {
    /// Canonical collection for a face-type π: one 2π_i-gon per part, slots
    /// numbered consecutively.
    pub fn new(pi: &Partition) -> Self {
        Self::from_sizes(pi.parts().to_vec())
    }

    fn from_sizes(face_sizes: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(face_sizes.len() + 1);
        let mut acc = 0;
        for &m in &face_sizes {
            offsets.push(acc);
            acc += 2 * m;
        }
        offsets.push(acc);
        PolygonCollection {
            face_sizes,
            offsets,
        }
    }

    pub fn face_type(&self) -> Partition {
        Partition::new(self.face_sizes.clone())
    }

    pub fn polygon_count(&self) -> usize {
        self.face_sizes.len()
    }

    /// Total number of edge slots, 2|π|.
    pub fn total_slots(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn polygon_of(&self, slot: usize) -> usize {
        match self.offsets.binary_search(&slot) {
            Ok(i) => i.min(self.polygon_count() - 1),
            Err(i) => i - 1,
        }
    }

    pub fn slots_of(&self, polygon: usize) -> std::ops::Range<usize> {
        self.offsets[polygon]..self.offsets[polygon + 1]
    }

    /// True iff the polygon traverses the slot from its white corner to its
    /// black corner in the default rotation direction.
    fn slot_parity_even(&self, slot: usize) -> bool {
        (slot - self.offsets[self.polygon_of(slot)]).is_multiple_of(2)
    }

    /// The white-corner and black-corner indices of a slot. Corner j of a
    /// polygon precedes slot j; even corners are white.
    fn corners_of(&self, slot: usize) -> (usize, usize) {
        let p = self.polygon_of(slot);
        let base = self.offsets[p];
        let len = self.offsets[p + 1] - base;
        let local = slot - base;
        let next = base + (local + 1) % len;
        if local.is_multiple_of(2) {
            (slot, next) // (white, black)
        } else {
            (next, slot)
        }
    }

    /// Streams all (2|π| − 1)!! gluings, smallest-unmatched-slot-first.
    pub fn gluings(&self) -> Gluings<'_> {
        Gluings::new(self)
    }

    /// Builds the glued map of one explicit matching, given as a list of
    /// slot pairs that covers every slot exactly once.
    pub fn glue(&self, pairs: &[(usize, usize)]) -> Result<GluedMap> {
        let total = self.total_slots();
        let mut partner = vec![usize::MAX; total];
        for &(a, b) in pairs {
            if a >= total || b >= total || a == b {
                return Err(Error::InvalidConfig(format!("bad pair ({a},{b})")));
            }
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidConfig(format!("slot reused in ({a},{b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidConfig("matching is not perfect".into()));
        }
        Ok(GluedMap::build(self, partner))
    }
}

/// A map obtained by gluing a polygon collection along a perfect matching,
/// with its derived incidence statistics.
#[derive(Clone, Debug)]
pub struct GluedMap {
    pub face_type: Partition,
    /// maps each slot to the slot it is glued to
    pub matching: Vec<usize>,
    /// connected components of the glued surface
    pub components: usize,
    pub white_vertices: usize,
    pub black_vertices: usize,
    pub orientable: bool,
    /// V − E + F per component, in polygon-index order of discovery
    pub euler_per_component: Vec<i64>,
    graph: BicoloredGraph,
}

impl GluedMap {
    fn build(pc: &PolygonCollection, partner: Vec<usize>) -> GluedMap {
        let total = pc.total_slots();
        let n_poly = pc.polygon_count();

        // vertex orbits: glue white corners to white corners, black to black
        let mut corners = UnionFind::new(total);
        for (a, &b) in partner.iter().enumerate() {
            if b < a {
                continue;
            }
            let (wa, ba) = pc.corners_of(a);
            let (wb, bb) = pc.corners_of(b);
            corners.union(wa, wb);
            corners.union(ba, bb);
        }

        // every orbit must be monochromatic; corner colors alternate
        let mut white_root = std::collections::HashMap::new();
        let mut black_root = std::collections::HashMap::new();
        for c in 0..total {
            let root = corners.find(c);
            let base = pc.offsets[pc.polygon_of(c)];
            if (c - base).is_multiple_of(2) {
                let id = white_root.len();
                white_root.entry(root).or_insert(id);
            } else {
                let id = black_root.len();
                black_root.entry(root).or_insert(id);
            }
        }
        debug_assert!(white_root.keys().all(|r| !black_root.contains_key(r)));

        // surface components via polygon adjacency
        let mut polys = UnionFind::new(n_poly.max(1));
        for (a, &b) in partner.iter().enumerate() {
            polys.union(pc.polygon_of(a), pc.polygon_of(b));
        }
        let components = if n_poly == 0 { 0 } else { polys.count() };

        // Euler characteristic per component
        let mut comp_index = std::collections::HashMap::new();
        let mut comp_faces = Vec::new();
        let mut comp_edges = Vec::new();
        let mut comp_vertices = Vec::new();
        for p in 0..n_poly {
            let root = polys.find(p);
            let next = comp_index.len();
            let idx = *comp_index.entry(root).or_insert(next);
            if idx == comp_faces.len() {
                comp_faces.push(0i64);
                comp_edges.push(0i64);
                comp_vertices.push(std::collections::HashSet::new());
            }
            comp_faces[idx] += 1;
        }
        for (a, &b) in partner.iter().enumerate() {
            let idx = comp_index[&polys.find(pc.polygon_of(a))];
            if b > a {
                comp_edges[idx] += 1;
            }
            comp_vertices[idx].insert(corners.find(a));
        }
        let euler_per_component: Vec<i64> = (0..comp_faces.len())
            .map(|i| comp_vertices[i].len() as i64 - comp_edges[i] + comp_faces[i])
            .collect();

        // orientability: some choice of rotation direction per polygon makes
        // every glued pair traversed in opposite directions by its two faces
        let orientable = (0..1u64 << n_poly).any(|mask| {
            (0..total).all(|a| {
                let b = partner[a];
                if b < a {
                    return true;
                }
                let pa = pc.polygon_of(a);
                let pb = pc.polygon_of(b);
                let sa = (mask >> pa) & 1 == 1;
                let sb = (mask >> pb) & 1 == 1;
                let dir_a = pc.slot_parity_even(a) ^ sa;
                let dir_b = pc.slot_parity_even(b) ^ sb;
                dir_a != dir_b
            })
        });

        // underlying bicolored graph: one edge per glued pair
        let mut edges = Vec::with_capacity(total / 2);
        for (a, &partner_slot) in partner.iter().enumerate() {
            if partner_slot > a {
                let (w, b) = pc.corners_of(a);
                edges.push((white_root[&corners.find(w)], black_root[&corners.find(b)]));
            }
        }
        let graph = BicoloredGraph::new(white_root.len(), black_root.len(), edges)
            .expect("orbit indices are in range");

        GluedMap {
            face_type: pc.face_type(),
            matching: partner,
            components,
            white_vertices: white_root.len(),
            black_vertices: black_root.len(),
            orientable,
            euler_per_component,
            graph,
        }
    }

    pub fn underlying_graph(&self) -> &BicoloredGraph {
        &self.graph
    }

    /// N_M(λ): coloring count of the underlying bicolored graph.
    pub fn coloring_count(&self, lambda: &Partition) -> BigInt {
        coloring_count_graph(&self.graph, lambda)
    }
}

/// Lazy stream over all perfect matchings of the slot set, encoded as a
/// mixed-radix counter: at each step the smallest unmatched slot picks its
/// partner among the remaining slots.
pub struct Gluings<'a> {
    pc: &'a PolygonCollection,
    choices: Vec<usize>,
    radix: Vec<usize>,
    done: bool,
}

impl<'a> Gluings<'a> {
    fn new(pc: &'a PolygonCollection) -> Self {
        let pairs = pc.total_slots() / 2;
        let radix: Vec<usize> = (0..pairs).map(|t| 2 * (pairs - t) - 1).collect();
        Gluings {
            pc,
            choices: vec![0; pairs],
            radix,
            done: false,
        }
    }

    fn matching_from_choices(&self) -> Vec<usize> {
        let total = self.pc.total_slots();
        let mut partner = vec![usize::MAX; total];
        let mut free: Vec<usize> = (0..total).collect();
        for &c in &self.choices {
            let a = free[0];
            let b = free[c + 1];
            partner[a] = b;
            partner[b] = a;
            free.retain(|&x| x != a && x != b);
        }
        partner
    }
}

impl Iterator for Gluings<'_> {
    type Item = GluedMap;

    fn next(&mut self) -> Option<GluedMap> {
        if self.done {
            return None;
        }
        if self.pc.total_slots() == 0 {
            self.done = true;
            return Some(GluedMap::build(self.pc, Vec::new()));
        }
        let partner = self.matching_from_choices();
        // advance the counter
        let mut level = self.choices.len();
        loop {
            if level == 0 {
                self.done = true;
                break;
            }
            level -= 1;
            if self.choices[level] + 1 < self.radix[level] {
                self.choices[level] += 1;
                for c in self.choices[level + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
        }
        Some(GluedMap::build(self.pc, partner))
    }
}

/// The oriented map encoded by a factorization pair (σ1, σ2): faces are the
/// cycles of π = σ1σ2, the labelled edge of x glues to the unlabelled edge
/// that precedes the label σ1(x) around its face. White vertex orbits then
/// realize the cycles of σ1 and black orbits the cycles of σ2.
pub fn oriented_map(s1: &Permutation, s2: &Permutation) -> Result<GluedMap> {
    if s1.size() != s2.size() {
        return Err(Error::SizeMismatch(format!(
            "|σ1| = {} vs |σ2| = {}",
            s1.size(),
            s2.size()
        )));
    }
    let pi = s1.compose(s2);
    let cycles = pi.cycles();
    let pc = PolygonCollection::from_sizes(cycles.iter().map(|c| c.len()).collect());
    // label x sits at even local position t within its face; the unlabelled
    // slot after it is the odd slot following
    let k = s1.size();
    let mut label_slot = vec![0usize; k];
    let mut unlabeled_slot = vec![0usize; k];
    for (p, cyc) in cycles.iter().enumerate() {
        let base = pc.offsets[p];
        for (t, &x) in cyc.iter().enumerate() {
            label_slot[x] = base + 2 * t;
            unlabeled_slot[x] = base + 2 * t + 1;
        }
    }
    let s2_inv = s2.inverse();
    let pairs: Vec<(usize, usize)> = (0..k)
        .map(|x| (label_slot[x], unlabeled_slot[s2_inv.apply(x)]))
        .collect();
    pc.glue(&pairs)
}

/// The map-sum form of the spin character:
/// Ch^spin_π(ξ) = 2^{−ℓ(π)} Σ_M (−1)^{|π|−|V_∘(M)|} N_M(D(ξ)),
/// summed over orientable gluings of the face-type-π polygon collection.
pub fn spin_stanley_via_maps(pi: &Partition, xi: &StrictPartition) -> Result<BigRational> {
    if !pi.is_odd() {
        return Err(Error::NotOdd(pi.to_string()));
    }
    let pc = PolygonCollection::new(pi);
    let double = xi.double();
    let k = pi.size();
    let mut total = BigInt::zero();
    for map in pc.gluings() {
        if !map.orientable {
            continue;
        }
        let n = map.coloring_count(&double);
        if (k - map.white_vertices).is_multiple_of(2) {
            total += n;
        } else {
            total -= n;
        }
    }
    Ok(BigRational::new(
        total,
        num::pow::pow(BigInt::from(2), pi.len()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters;
    use crate::combinat::{
        odd_double_factorial, odd_partitions_of, permutations_of, strict_partitions_of,
    };
    use num::One;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn strict(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn polygon_slot_counts() {
        let pc = PolygonCollection::new(&part(&[5, 2]));
        assert_eq!(pc.total_slots(), 14);
        assert_eq!(pc.slots_of(0), 0..10);
        assert_eq!(pc.slots_of(1), 10..14);
        let pc = PolygonCollection::new(&part(&[1]));
        assert_eq!(pc.total_slots(), 2);
        for n in 0..=6 {
            for pi in odd_partitions_of(n) {
                assert_eq!(PolygonCollection::new(&pi).total_slots(), 2 * n);
            }
        }
    }

    #[test]
    fn gluing_counts_are_double_factorials() {
        for pi in [part(&[1]), part(&[2]), part(&[1, 1]), part(&[2, 1]), part(&[3, 1])] {
            let pc = PolygonCollection::new(&pi);
            let count = pc.gluings().count();
            let want = odd_double_factorial(2 * pi.size() as i64 - 1);
            assert_eq!(BigInt::from(count), want, "π = {pi}");
        }
        // face-type (5,2): 13!! = 135135 matchings
        let pc = PolygonCollection::new(&part(&[5, 2]));
        assert_eq!(pc.gluings().count(), 135135);
    }

    #[test]
    fn self_glued_digon_is_a_sphere() {
        let pc = PolygonCollection::new(&part(&[1]));
        let maps: Vec<GluedMap> = pc.gluings().collect();
        assert_eq!(maps.len(), 1);
        let m = &maps[0];
        assert!(m.orientable);
        assert_eq!(m.white_vertices, 1);
        assert_eq!(m.black_vertices, 1);
        assert_eq!(m.components, 1);
        assert_eq!(m.euler_per_component, vec![2]);
        assert_eq!(m.coloring_count(&part(&[3, 1])), BigInt::from(4));
    }

    #[test]
    fn projective_plane_gluing_is_non_orientable() {
        // face-type (5,2); the decagon carries labels 1–10 on slots 0–9 and
        // the square labels A–D on slots 10–13. Pairs {1,3}, {2,10}, {4,9},
        // {5,D}, {6,C}, {7,B}, {8,A}.
        let pc = PolygonCollection::new(&part(&[5, 2]));
        let map = pc
            .glue(&[(0, 2), (1, 9), (3, 8), (4, 13), (5, 12), (6, 11), (7, 10)])
            .unwrap();
        assert!(!map.orientable);
        assert_eq!(map.components, 1);
        // χ = 1 for the projective plane
        assert_eq!(map.euler_per_component, vec![1]);
    }

    #[test]
    fn euler_parity_and_monochromatic_orbits() {
        for pi in [part(&[2]), part(&[2, 1]), part(&[3])] {
            let pc = PolygonCollection::new(&pi);
            for map in pc.gluings() {
                assert_eq!(
                    map.underlying_graph().edges().len(),
                    pi.size(),
                    "edge count"
                );
                for &chi in &map.euler_per_component {
                    assert!(chi <= 2);
                    if map.orientable {
                        assert_eq!(chi.rem_euclid(2), 0, "orientable components have even χ");
                    }
                }
            }
        }
    }

    #[test]
    fn orientability_invariant_under_polygon_relabeling() {
        // swapping the two digons of face-type (1,1) relabels slots 0↔2, 1↔3
        let pc = PolygonCollection::new(&part(&[1, 1]));
        let swap = |s: usize| (s + 2) % 4;
        for map in pc.gluings() {
            let mut pairs = Vec::new();
            for a in 0..4 {
                let b = map.matching[a];
                if b > a {
                    pairs.push((swap(a), swap(b)));
                }
            }
            let relabeled = pc.glue(&pairs).unwrap();
            assert_eq!(relabeled.orientable, map.orientable);
            assert_eq!(relabeled.white_vertices, map.white_vertices);
        }
    }

    #[test]
    fn oriented_map_matches_cycle_counts() {
        // the torus example: σ1 = (1,6)(2)(3)(4,7,5), σ2 = (1,2,3,5)(4,7,6)
        let s1 = Permutation::from_cycles(7, &[vec![1, 6], vec![4, 7, 5]]).unwrap();
        let s2 = Permutation::from_cycles(7, &[vec![1, 2, 3, 5], vec![4, 7, 6]]).unwrap();
        assert_eq!(s1.compose(&s2).cycle_type(), part(&[7]));
        let map = oriented_map(&s1, &s2).unwrap();
        assert!(map.orientable);
        assert_eq!(map.white_vertices, 4);
        assert_eq!(map.black_vertices, 2);
        assert_eq!(map.components, 1);
        // genus-1 surface
        assert_eq!(map.euler_per_component, vec![0]);

        // exhaustive for k ≤ 4: white/black orbit counts match cycle counts
        for k in 1..=4 {
            let pi_perm = Permutation::from_cycle_type(&part(&[k]));
            for s1 in permutations_of(k) {
                let s2 = s1.inverse().compose(&pi_perm);
                let map = oriented_map(&s1, &s2).unwrap();
                assert!(map.orientable, "oriented construction must be orientable");
                assert_eq!(map.white_vertices, s1.cycle_count());
                assert_eq!(map.black_vertices, s2.cycle_count());
            }
        }
    }

    #[test]
    fn oriented_map_coloring_matches_cycle_formula() {
        let s1 = Permutation::from_cycles(5, &[vec![1, 5, 4, 2], vec![3]]).unwrap();
        let s2 = Permutation::from_cycles(5, &[vec![2, 3, 5], vec![1, 4]]).unwrap();
        let map = oriented_map(&s1, &s2).unwrap();
        assert_eq!(map.coloring_count(&part(&[3, 1])), BigInt::from(14));
    }

    #[test]
    fn disconnected_maps_multiply() {
        // two self-glued digons: counts multiply over components
        let pc = PolygonCollection::new(&part(&[1, 1]));
        let map = pc.glue(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(map.components, 2);
        let lam = part(&[3, 1]);
        assert_eq!(map.coloring_count(&lam), BigInt::from(16));
    }

    #[test]
    fn spin_via_maps_examples() {
        assert_eq!(
            spin_stanley_via_maps(&Partition::empty(), &StrictPartition::empty()).unwrap(),
            BigRational::one()
        );
        assert_eq!(
            spin_stanley_via_maps(&part(&[1]), &strict(&[1])).unwrap(),
            BigRational::one()
        );
        assert_eq!(
            spin_stanley_via_maps(&part(&[3]), &strict(&[3])).unwrap(),
            characters::ch_spin_normalized(&part(&[3]), &strict(&[3])).unwrap()
        );
        // Ch^spin_{(1,1)}(ξ) = n(n−1)
        for n in 0..=4 {
            for xi in strict_partitions_of(n) {
                assert_eq!(
                    spin_stanley_via_maps(&part(&[1, 1]), &xi).unwrap(),
                    BigRational::from(BigInt::from(n * n.saturating_sub(1))),
                    "ξ = {xi}"
                );
            }
        }
        assert!(spin_stanley_via_maps(&part(&[2]), &strict(&[2])).is_err());
    }

    #[test]
    fn spin_via_maps_matches_characters() {
        for k in 1..=4 {
            for pi in odd_partitions_of(k) {
                for n in 0..=4 {
                    for xi in strict_partitions_of(n) {
                        assert_eq!(
                            spin_stanley_via_maps(&pi, &xi).unwrap(),
                            characters::ch_spin_normalized(&pi, &xi).unwrap(),
                            "π = {pi}, ξ = {xi}"
                        );
                    }
                }
            }
        }
    }
}
