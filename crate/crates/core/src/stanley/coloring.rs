//! Coloring counts N_{σ1,σ2}(λ) and N_G(λ) for bicolored graphs.
//!
//! The production path assigns rows of λ to the black side and multiplies,
//! for every white vertex, the number of admissible columns (the minimum row
//! length over its neighbours). Rows with equal lengths are grouped so the
//! enumeration runs over distinct row values with multiplicity weights, and
//! the count factors over connected components. Each component is counted
//! in whichever orientation (rows of λ vs rows of λ') gives the smaller
//! search space.

use num::{BigInt, One, Zero};

use crate::combinat::{Partition, Permutation, UnionFind};
use crate::error::{Error, Result};

/// A bipartite graph with `white` and `black` vertex classes; edges connect
/// opposite classes only, which the constructor enforces by index range.
#[derive(Clone, Debug)]
pub struct BicoloredGraph {
    white: usize,
    black: usize,
    edges: Vec<(usize, usize)>,
}

impl BicoloredGraph {
    pub fn new(white: usize, black: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(w, b) in &edges {
            if w >= white || b >= black {
                return Err(Error::InvalidGraph(format!(
                    "edge ({w},{b}) outside {white}×{black}"
                )));
            }
        }
        Ok(BicoloredGraph {
            white,
            black,
            edges,
        })
    }

    pub fn white_count(&self) -> usize {
        self.white
    }

    pub fn black_count(&self) -> usize {
        self.black
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Deduplicated white-side adjacency lists.
    fn adjacency(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut white_nbrs = vec![Vec::new(); self.white];
        let mut black_nbrs = vec![Vec::new(); self.black];
        for &(w, b) in &self.edges {
            white_nbrs[w].push(b);
            black_nbrs[b].push(w);
        }
        for list in white_nbrs.iter_mut().chain(black_nbrs.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        (white_nbrs, black_nbrs)
    }
}

/// The bipartite cycle-intersection graph of a pair of permutations: white
/// vertices are cycles of σ1, black vertices cycles of σ2, with an edge for
/// every point they share.
pub fn intersection_graph(s1: &Permutation, s2: &Permutation) -> Result<BicoloredGraph> {
    if s1.size() != s2.size() {
        return Err(Error::SizeMismatch(format!(
            "|σ1| = {} vs |σ2| = {}",
            s1.size(),
            s2.size()
        )));
    }
    let k = s1.size();
    let c1 = s1.cycles();
    let c2 = s2.cycles();
    let mut white_of = vec![0usize; k];
    for (i, cyc) in c1.iter().enumerate() {
        for &x in cyc {
            white_of[x] = i;
        }
    }
    let mut black_of = vec![0usize; k];
    for (j, cyc) in c2.iter().enumerate() {
        for &x in cyc {
            black_of[x] = j;
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..k).map(|x| (white_of[x], black_of[x])).collect();
    edges.sort_unstable();
    edges.dedup();
    BicoloredGraph::new(c1.len(), c2.len(), edges)
}

/// N_{σ1,σ2}(λ): the number of colorings of the cycles of (σ1, σ2) by
/// columns and rows of λ such that intersecting cycles meet inside λ.
pub fn coloring_count(s1: &Permutation, s2: &Permutation, lambda: &Partition) -> Result<BigInt> {
    let graph = intersection_graph(s1, s2)?;
    Ok(coloring_count_graph(&graph, lambda))
}

/// N_G(λ) for a bicolored graph: colorings f1 of white vertices by columns
/// and f2 of black vertices by rows with every edge landing in a box of λ.
/// Isolated white vertices range over the λ_1 columns, isolated black over
/// the ℓ(λ) rows.
pub fn coloring_count_graph(graph: &BicoloredGraph, lambda: &Partition) -> BigInt {
    let (white_nbrs, black_nbrs) = graph.adjacency();
    let rows = lambda.len();
    let cols = lambda.part(1);

    let mut total = BigInt::one();
    // isolated vertices contribute independent factors
    for nbrs in &white_nbrs {
        if nbrs.is_empty() {
            total *= BigInt::from(cols);
        }
    }
    for nbrs in &black_nbrs {
        if nbrs.is_empty() {
            total *= BigInt::from(rows);
        }
    }
    if total.is_zero() {
        return total;
    }

    // connected components over white ∪ black (black offset by white count)
    let mut uf = UnionFind::new(graph.white + graph.black);
    for &(w, b) in &graph.edges {
        uf.union(w, graph.white + b);
    }
    let mut comp_whites: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    let mut comp_blacks: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for (w, nbrs) in white_nbrs.iter().enumerate() {
        if !nbrs.is_empty() {
            comp_whites.entry(uf.find(w)).or_default().push(w);
        }
    }
    for (b, nbrs) in black_nbrs.iter().enumerate() {
        if !nbrs.is_empty() {
            comp_blacks.entry(uf.find(graph.white + b)).or_default().push(b);
        }
    }

    let conj = lambda.conjugate();
    let row_groups = grouped_parts(lambda);
    let col_groups = grouped_parts(&conj);

    let mut roots: Vec<usize> = comp_whites.keys().copied().collect();
    for b_root in comp_blacks.keys() {
        if !comp_whites.contains_key(b_root) {
            roots.push(*b_root);
        }
    }
    roots.sort_unstable();

    for root in roots {
        let whites = comp_whites.get(&root).cloned().unwrap_or_default();
        let blacks = comp_blacks.get(&root).cloned().unwrap_or_default();
        // choose the orientation with the smaller enumeration space
        let cost_rows = (row_groups.len() as f64).powi(blacks.len() as i32);
        let cost_cols = (col_groups.len() as f64).powi(whites.len() as i32);
        let comp = if cost_rows <= cost_cols {
            component_count(&whites, &blacks, &white_nbrs, &row_groups)
        } else {
            component_count(&blacks, &whites, &black_nbrs, &col_groups)
        };
        if comp.is_zero() {
            return BigInt::zero();
        }
        total *= comp;
    }
    total
}

/// Distinct part values of λ with multiplicities, largest first.
fn grouped_parts(lambda: &Partition) -> Vec<(usize, usize)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &p in lambda.parts() {
        match groups.last_mut() {
            Some((value, mult)) if *value == p => *mult += 1,
            _ => groups.push((p, 1)),
        }
    }
    groups
}

/// Counts colorings of one connected component: assigns a row value to each
/// vertex of the enumerated (`black`) side and multiplies, per vertex of the
/// product (`white`) side, the minimum row value over its neighbours.
fn component_count(
    whites: &[usize],
    blacks: &[usize],
    white_nbrs: &[Vec<usize>],
    groups: &[(usize, usize)],
) -> BigInt {
    if groups.is_empty() {
        // empty λ admits no assignment unless the component is empty
        return if blacks.is_empty() && whites.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let black_pos: std::collections::HashMap<usize, usize> =
        blacks.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    // per white vertex: local neighbour list and unassigned-degree counter
    let locals: Vec<Vec<usize>> = whites
        .iter()
        .map(|&w| white_nbrs[w].iter().map(|b| black_pos[b]).collect())
        .collect();
    let mut remaining: Vec<usize> = locals.iter().map(|l| l.len()).collect();
    let mut current_min: Vec<usize> = vec![usize::MAX; whites.len()];
    // whites indexed by the black that completes them, in assignment order
    let mut completed_by_level: Vec<Vec<usize>> = vec![Vec::new(); blacks.len()];
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); blacks.len()];
    for (wi, local) in locals.iter().enumerate() {
        for &bj in local {
            watchers[bj].push(wi);
        }
    }

    let mut assigned_value: Vec<usize> = vec![0; blacks.len()];
    let mut total = BigInt::zero();
    enumerate(
        0,
        groups,
        &mut assigned_value,
        &watchers,
        &mut remaining,
        &mut current_min,
        &mut completed_by_level,
        &mut total,
    );
    total
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    level: usize,
    groups: &[(usize, usize)],
    assigned_value: &mut Vec<usize>,
    watchers: &[Vec<usize>],
    remaining: &mut Vec<usize>,
    current_min: &mut Vec<usize>,
    completed_by_level: &mut Vec<Vec<usize>>,
    total: &mut BigInt,
) {
    if level == assigned_value.len() {
        // leaf: multiply the weights of the chosen row groups and the
        // admissible-column minima of every completed white vertex
        let mut product = BigInt::one();
        for &v in assigned_value.iter() {
            product *= BigInt::from(groups[v].1);
        }
        for lvl in completed_by_level.iter() {
            for &wi in lvl {
                product *= BigInt::from(current_min[wi]);
            }
        }
        *total += product;
        return;
    }
    for (gi, &(value, _)) in groups.iter().enumerate() {
        assigned_value[level] = gi;
        let mut saved: Vec<(usize, usize)> = Vec::new();
        for &wi in &watchers[level] {
            saved.push((wi, current_min[wi]));
            current_min[wi] = current_min[wi].min(value);
            remaining[wi] -= 1;
            if remaining[wi] == 0 {
                completed_by_level[level].push(wi);
            }
        }
        enumerate(
            level + 1,
            groups,
            assigned_value,
            watchers,
            remaining,
            current_min,
            completed_by_level,
            total,
        );
        completed_by_level[level].clear();
        for &(wi, old) in saved.iter().rev() {
            current_min[wi] = old;
            remaining[wi] += 1;
        }
    }
}
