//! Grid-graph representation, partitions, vertex orderings, and the
//! cut/balance/perimeter metrics shared by every solver.
//!
//! Vertices are identified by `(row, col)` externally and by row-major
//! integer index internally. Hexagonal grids use the "odd-q" vertical
//! offset layout: odd columns are shifted down half a cell, so every
//! interior vertex has exactly six neighbors.

use crate::{Error, Result};

/// Cell shape of the grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellKind {
    Square,
    Hex,
}

/// A rectangular arrangement of square or hexagonal cells.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GridTopology {
    pub kind: CellKind,
    pub rows: usize,
    pub cols: usize,
}

/// Neighbor offsets for odd-q hex layout, as (drow, dcol), indexed by
/// column parity. Both tables are ordered so that the produced neighbor
/// list is already sorted row-major.
const HEX_EVEN_COL: [(isize, isize); 6] = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, 0)];
const HEX_ODD_COL: [(isize, isize); 6] = [(-1, 0), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)];
const SQUARE: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];

impl GridTopology {
    pub fn new(kind: CellKind, rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::pre("grid must have at least one row and column"));
        }
        Ok(GridTopology { kind, rows, cols })
    }

    pub fn square(rows: usize, cols: usize) -> Result<Self> {
        Self::new(CellKind::Square, rows, cols)
    }

    pub fn hex(rows: usize, cols: usize) -> Result<Self> {
        Self::new(CellKind::Hex, rows, cols)
    }

    pub fn vertex_count(&self) -> usize {
        self.rows * self.cols
    }

    /// Row-major index of `(row, col)`.
    pub fn index(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.cols, v % self.cols)
    }

    fn in_range(&self, row: isize, col: isize) -> bool {
        row >= 0 && col >= 0 && (row as usize) < self.rows && (col as usize) < self.cols
    }

    /// Neighbors of `(row, col)`, sorted row-major.
    pub fn neighbors_at(&self, row: usize, col: usize) -> Result<Vec<usize>> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::VertexOutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let offsets: &[(isize, isize)] = match self.kind {
            CellKind::Square => &SQUARE,
            CellKind::Hex => {
                if col % 2 == 0 {
                    &HEX_EVEN_COL
                } else {
                    &HEX_ODD_COL
                }
            }
        };
        let mut out = Vec::with_capacity(offsets.len());
        for &(dr, dc) in offsets {
            let (r, c) = (row as isize + dr, col as isize + dc);
            if self.in_range(r, c) {
                out.push(self.index(r as usize, c as usize));
            }
        }
        Ok(out)
    }

    /// Maximum vertex degree: 4 for square grids, 6 for hexagonal.
    pub fn max_degree(&self) -> usize {
        match self.kind {
            CellKind::Square => 4,
            CellKind::Hex => 6,
        }
    }
}

/// A grid graph with nonnegative vertex weights. Every edge has cost 1.
#[derive(Clone, Debug)]
pub struct GridGraph {
    topology: GridTopology,
    weights: Vec<f64>,
    adjacency: Vec<Vec<usize>>,
}

impl GridGraph {
    /// Grid with unit weights.
    pub fn unit(topology: GridTopology) -> Self {
        Self::with_weights(topology, vec![1.0; topology.vertex_count()]).unwrap()
    }

    pub fn with_weights(topology: GridTopology, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != topology.vertex_count() {
            return Err(Error::pre(format!(
                "expected {} weights, got {}",
                topology.vertex_count(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::pre(format!("weight {w} is not finite and nonnegative")));
        }
        let adjacency = (0..topology.vertex_count())
            .map(|v| {
                let (r, c) = topology.coords(v);
                topology.neighbors_at(r, c).unwrap()
            })
            .collect();
        Ok(GridGraph {
            topology,
            weights,
            adjacency,
        })
    }

    pub fn topology(&self) -> GridTopology {
        self.topology
    }

    pub fn vertex_count(&self) -> usize {
        self.topology.vertex_count()
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Adjacency list of `v` (sorted row-major). Panics if out of range;
    /// use [`GridTopology::neighbors_at`] for a checked lookup by coords.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in deterministic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Total length of the outer boundary: each cell contributes its
    /// missing neighbors. For a square m x n grid this is 2(m+n).
    pub fn boundary_length(&self) -> usize {
        let d = self.topology.max_degree();
        (0..self.vertex_count()).map(|v| d - self.degree(v)).sum()
    }
}

/// An assignment of every vertex to one of `k` parts, with cached part
/// weights and cut count kept in sync by [`Partition::move_vertex`].
///
/// Part ids are `0..k` internally; the file format of the CLI is 1-based.
#[derive(Clone, Debug)]
pub struct Partition {
    k: usize,
    assignment: Vec<usize>,
    part_weights: Vec<f64>,
    part_sizes: Vec<usize>,
    cut_edges: usize,
}

impl Partition {
    /// Builds a partition from a full assignment, validating that every
    /// part id is in range and every part is nonempty.
    pub fn from_assignment(g: &GridGraph, assignment: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::pre("k must be positive"));
        }
        if assignment.len() != g.vertex_count() {
            return Err(Error::pre(format!(
                "assignment covers {} vertices, grid has {}",
                assignment.len(),
                g.vertex_count()
            )));
        }
        if let Some(&p) = assignment.iter().find(|&&p| p >= k) {
            return Err(Error::pre(format!("part id {p} out of range for k={k}")));
        }
        let mut part_weights = vec![0.0; k];
        let mut part_sizes = vec![0usize; k];
        for (v, &p) in assignment.iter().enumerate() {
            part_weights[p] += g.weight(v);
            part_sizes[p] += 1;
        }
        if let Some(empty) = part_sizes.iter().position(|&s| s == 0) {
            return Err(Error::EmptyPart(empty));
        }
        let cut_edges = count_cut_edges(g, &assignment);
        Ok(Partition {
            k,
            assignment,
            part_weights,
            part_sizes,
            cut_edges,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Cached part weights; matches a from-scratch recomputation.
    pub fn part_weights(&self) -> &[f64] {
        &self.part_weights
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    /// Cached number of cut edges; matches a from-scratch recomputation.
    pub fn cut_edges(&self) -> usize {
        self.cut_edges
    }

    /// Vertices of part `i`.
    pub fn members_of(&self, i: usize) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == i)
            .map(|(v, _)| v)
            .collect()
    }

    /// Moves `v` to `to`, updating the weight and cut caches incrementally.
    /// Refuses to empty the donor part.
    pub fn move_vertex(&mut self, g: &GridGraph, v: usize, to: usize) -> Result<()> {
        let from = self.assignment[v];
        if from == to {
            return Ok(());
        }
        if to >= self.k {
            return Err(Error::pre(format!("part id {to} out of range")));
        }
        if self.part_sizes[from] == 1 {
            return Err(Error::EmptyPart(from));
        }
        for &u in g.neighbors(v) {
            let p = self.assignment[u];
            if p == from {
                self.cut_edges += 1;
            } else if p == to {
                self.cut_edges -= 1;
            }
        }
        let w = g.weight(v);
        self.part_weights[from] -= w;
        self.part_weights[to] += w;
        self.part_sizes[from] -= 1;
        self.part_sizes[to] += 1;
        self.assignment[v] = to;
        Ok(())
    }

    /// Recomputes every cached metric from scratch and checks it against
    /// the cache. Used by tests and by the CLI's evaluate command.
    pub fn verify_caches(&self, g: &GridGraph) -> Result<()> {
        let fresh = Partition::from_assignment(g, self.assignment.clone(), self.k)?;
        if fresh.cut_edges != self.cut_edges {
            return Err(Error::Degenerate(format!(
                "cached cut {} != recomputed {}",
                self.cut_edges, fresh.cut_edges
            )));
        }
        for (i, (a, b)) in self
            .part_weights
            .iter()
            .zip(fresh.part_weights.iter())
            .enumerate()
        {
            if (a - b).abs() > 1e-6 * (1.0 + b.abs()) {
                return Err(Error::Degenerate(format!(
                    "cached weight of part {i} {a} != recomputed {b}"
                )));
            }
        }
        Ok(())
    }
}

fn count_cut_edges(g: &GridGraph, assignment: &[usize]) -> usize {
    g.edges()
        .filter(|&(u, v)| assignment[u] != assignment[v])
        .count()
}

/// Number of edges with endpoints in different parts, recomputed by an
/// exhaustive edge scan.
pub fn cut_count(g: &GridGraph, p: &Partition) -> usize {
    count_cut_edges(g, p.assignment())
}

/// Cut edges incident to part `i` plus its share of the grid boundary.
/// For a square cell the boundary contribution is `4 - degree(v)`; for a
/// hex cell it is `6 - degree(v)`.
pub fn perimeter_of_part(g: &GridGraph, p: &Partition, i: usize) -> Result<usize> {
    if i >= p.k() || p.part_sizes()[i] == 0 {
        return Err(Error::EmptyPart(i));
    }
    let d = g.topology().max_degree();
    let mut perim = 0;
    for (v, &part) in p.assignment().iter().enumerate() {
        if part != i {
            continue;
        }
        perim += d - g.degree(v);
        perim += g
            .neighbors(v)
            .iter()
            .filter(|&&u| p.assignment()[u] != i)
            .count();
    }
    Ok(perim)
}

/// Per-part connectivity of the induced subgraphs, by BFS.
/// An empty part is an error, never `true`.
pub fn is_contiguous(g: &GridGraph, p: &Partition) -> Result<Vec<bool>> {
    if let Some(empty) = p.part_sizes().iter().position(|&s| s == 0) {
        return Err(Error::EmptyPart(empty));
    }
    let mut result = vec![false; p.k()];
    let mut seen = vec![false; g.vertex_count()];
    let mut reached = vec![0usize; p.k()];
    let mut queue = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        let part = p.part_of(start);
        if reached[part] > 0 {
            // Second component of this part; leave its flag false.
            continue;
        }
        seen[start] = true;
        queue.push(start);
        let mut size = 0;
        while let Some(v) = queue.pop() {
            size += 1;
            for &u in g.neighbors(v) {
                if !seen[u] && p.part_of(u) == part {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        reached[part] = size;
        result[part] = size == p.part_sizes()[part];
    }
    Ok(result)
}

/// Checks whether the subgraph induced by part `from` stays connected when
/// the vertices in `removed` leave it. `removed` must be a subset of the
/// part; the part must not be emptied.
pub fn connected_without(g: &GridGraph, p: &Partition, from: usize, removed: &[usize]) -> bool {
    let remaining = p.part_sizes()[from] - removed.len();
    if remaining == 0 {
        return false;
    }
    let is_removed = |v: usize| removed.contains(&v);
    let start = match p
        .assignment()
        .iter()
        .enumerate()
        .find(|(v, &part)| part == from && !is_removed(*v))
    {
        Some((v, _)) => v,
        None => return false,
    };
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = vec![start];
    seen[start] = true;
    let mut size = 0;
    while let Some(v) = queue.pop() {
        size += 1;
        for &u in g.neighbors(v) {
            if !seen[u] && p.part_of(u) == from && !is_removed(u) {
                seen[u] = true;
                queue.push(u);
            }
        }
    }
    size == remaining
}

/// Balance metrics of a partition at tolerance `eps`.
#[derive(Clone, Copy, Debug)]
pub struct BalanceReport {
    /// Average part weight A = (total weight) / k.
    pub average: f64,
    /// max_i |W_i - A| / A.
    pub max_dev: f64,
    /// Whether `max_dev <= eps`.
    pub within: bool,
}

pub fn balance_report(g: &GridGraph, p: &Partition, eps: f64) -> Result<BalanceReport> {
    if eps < 0.0 {
        return Err(Error::pre("eps must be nonnegative"));
    }
    let average = g.total_weight() / p.k() as f64;
    if average == 0.0 {
        return Err(Error::Degenerate("zero total weight".into()));
    }
    let max_dev = p
        .part_weights()
        .iter()
        .map(|w| (w - average).abs() / average)
        .fold(0.0, f64::max);
    Ok(BalanceReport {
        average,
        max_dev,
        within: max_dev <= eps,
    })
}

/// A permutation of the vertices, usually built by snake striping.
#[derive(Clone, Debug)]
pub struct VertexOrdering {
    order: Vec<usize>,
    /// Stripe height used to build a snake ordering; `None` for
    /// caller-supplied permutations.
    stripe_height: Option<usize>,
}

impl VertexOrdering {
    /// Wraps a caller-supplied permutation, validating bijectivity.
    pub fn from_permutation(g: &GridGraph, order: Vec<usize>) -> Result<Self> {
        let n = g.vertex_count();
        if order.len() != n {
            return Err(Error::pre(format!(
                "ordering covers {} vertices, grid has {n}",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(Error::pre("ordering is not a permutation of the vertices"));
            }
            seen[v] = true;
        }
        Ok(VertexOrdering {
            order,
            stripe_height: None,
        })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn stripe_height(&self) -> Option<usize> {
        self.stripe_height
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Snake ordering with stripes of height `s`: within each stripe columns
/// are traversed top-to-bottom, sweeping left-to-right; the next stripe is
/// entered by continuing down the final column and sweeping back
/// right-to-left. The final, possibly shorter stripe follows the same rule
/// with its actual height.
///
/// For `s = 1` this is a boustrophedon Hamiltonian path. For `s >= 2` the
/// column-major order inside a stripe is not a path, but every interval of
/// at least `s + 1` consecutive vertices induces a connected subgraph,
/// which is the property the dynamic program relies on.
pub fn snake_ordering(g: &GridGraph, s: usize) -> Result<VertexOrdering> {
    let t = g.topology();
    let (m, n) = (t.rows, t.cols);
    if s == 0 || s > m {
        return Err(Error::pre(format!("stripe height {s} out of range 1..={m}")));
    }
    let mut order = Vec::with_capacity(m * n);
    let mut stripe = 0;
    let mut row0 = 0;
    while row0 < m {
        let row1 = (row0 + s).min(m);
        let cols: Vec<usize> = if stripe % 2 == 0 {
            (0..n).collect()
        } else {
            (0..n).rev().collect()
        };
        for c in cols {
            for r in row0..row1 {
                order.push(t.index(r, c));
            }
        }
        row0 = row1;
        stripe += 1;
    }
    Ok(VertexOrdering {
        order,
        stripe_height: Some(s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(m: usize, n: usize) -> GridGraph {
        GridGraph::unit(GridTopology::square(m, n).unwrap())
    }

    fn hex(m: usize, n: usize) -> GridGraph {
        GridGraph::unit(GridTopology::hex(m, n).unwrap())
    }

    #[test]
    fn square_center_has_four_neighbors() {
        let t = GridTopology::square(3, 3).unwrap();
        let nbrs = t.neighbors_at(1, 1).unwrap();
        assert_eq!(nbrs, vec![t.index(0, 1), t.index(1, 0), t.index(1, 2), t.index(2, 1)]);
    }

    #[test]
    fn hex_interior_has_six_neighbors() {
        let t = GridTopology::hex(5, 5).unwrap();
        for (r, c) in [(2, 2), (2, 3), (1, 2), (3, 2)] {
            assert_eq!(t.neighbors_at(r, c).unwrap().len(), 6, "({r},{c})");
        }
    }

    #[test]
    fn single_cell_has_no_neighbors() {
        let t = GridTopology::square(1, 1).unwrap();
        assert!(t.neighbors_at(0, 0).unwrap().is_empty());
    }

    #[test]
    fn out_of_range_vertex_is_an_error() {
        let t = GridTopology::square(2, 2).unwrap();
        assert!(t.neighbors_at(2, 0).is_err());
        assert!(t.neighbors_at(0, 7).is_err());
    }

    #[test]
    fn neighbors_are_symmetric() {
        for g in [square(4, 7), hex(5, 6), hex(6, 5)] {
            for v in 0..g.vertex_count() {
                for &u in g.neighbors(v) {
                    assert!(g.neighbors(u).contains(&v), "{u} <-> {v}");
                }
            }
        }
    }

    #[test]
    fn hex_grid_contains_all_square_edges() {
        let sq = square(6, 7);
        let hx = hex(6, 7);
        for (u, v) in sq.edges() {
            assert!(hx.neighbors(u).contains(&v));
        }
    }

    #[test]
    fn single_part_has_no_cut() {
        let g = square(3, 4);
        let p = Partition::from_assignment(&g, vec![0; 12], 1).unwrap();
        assert_eq!(p.cut_edges(), 0);
        assert_eq!(cut_count(&g, &p), 0);
    }

    #[test]
    fn two_by_two_column_split_cuts_two_edges() {
        let g = square(2, 2);
        let t = g.topology();
        let mut assignment = vec![0; 4];
        assignment[t.index(0, 1)] = 1;
        assignment[t.index(1, 1)] = 1;
        let p = Partition::from_assignment(&g, assignment, 2).unwrap();
        assert_eq!(p.cut_edges(), 2);
    }

    #[test]
    fn one_cell_grid_has_perimeter_four() {
        let g = square(1, 1);
        let p = Partition::from_assignment(&g, vec![0], 1).unwrap();
        assert_eq!(perimeter_of_part(&g, &p, 0).unwrap(), 4);
    }

    #[test]
    fn interior_three_by_five_rectangle_has_perimeter_sixteen() {
        // 3x5 block embedded in the interior of a 7x9 grid: its perimeter
        // is pure cut edges, no grid boundary.
        let g = square(7, 9);
        let t = g.topology();
        let mut assignment = vec![1; g.vertex_count()];
        for r in 2..5 {
            for c in 2..7 {
                assignment[t.index(r, c)] = 0;
            }
        }
        let p = Partition::from_assignment(&g, assignment, 2).unwrap();
        assert_eq!(perimeter_of_part(&g, &p, 0).unwrap(), 16);
    }

    #[test]
    fn diagonal_cells_are_not_contiguous() {
        let g = square(2, 2);
        let t = g.topology();
        let mut assignment = vec![1; 4];
        assignment[t.index(0, 0)] = 0;
        assignment[t.index(1, 1)] = 0;
        let p = Partition::from_assignment(&g, assignment, 2).unwrap();
        let flags = is_contiguous(&g, &p).unwrap();
        assert!(!flags[0]);
        assert!(!flags[1]); // the other diagonal pair is disconnected too
    }

    #[test]
    fn single_cell_parts_are_contiguous() {
        let g = square(1, 3);
        let p = Partition::from_assignment(&g, vec![0, 1, 2], 3).unwrap();
        assert_eq!(is_contiguous(&g, &p).unwrap(), vec![true, true, true]);
    }

    #[test]
    fn balance_report_uniform_split() {
        let g = square(2, 2);
        let t = g.topology();
        let mut assignment = vec![0; 4];
        assignment[t.index(0, 1)] = 1;
        assignment[t.index(1, 1)] = 1;
        let p = Partition::from_assignment(&g, assignment, 2).unwrap();
        let rep = balance_report(&g, &p, 0.0).unwrap();
        assert_eq!(rep.max_dev, 0.0);
        assert!(rep.within);
    }

    #[test]
    fn balance_report_hand_built_split() {
        // weights {1,1,1,3} on a path, parts {1,1} and {1,3}: A = 3,
        // max_dev = 1/3.
        let t = GridTopology::square(1, 4).unwrap();
        let g = GridGraph::with_weights(t, vec![1.0, 1.0, 1.0, 3.0]).unwrap();
        let p = Partition::from_assignment(&g, vec![0, 0, 1, 1], 2).unwrap();
        let rep = balance_report(&g, &p, 0.5).unwrap();
        assert_eq!(rep.average, 3.0);
        assert!((rep.max_dev - 1.0 / 3.0).abs() < 1e-12);
        assert!(rep.within);
    }

    #[test]
    fn balance_report_zero_weight_is_degenerate() {
        let t = GridTopology::square(1, 2).unwrap();
        let g = GridGraph::with_weights(t, vec![0.0, 0.0]).unwrap();
        let p = Partition::from_assignment(&g, vec![0, 1], 2).unwrap();
        assert!(matches!(balance_report(&g, &p, 0.1), Err(Error::Degenerate(_))));
    }

    #[test]
    fn snake_ordering_row_grid_is_row_order() {
        let g = square(1, 5);
        let ord = snake_ordering(&g, 1).unwrap();
        assert_eq!(ord.order(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn snake_ordering_two_by_two_is_column_major() {
        let g = square(2, 2);
        let t = g.topology();
        let ord = snake_ordering(&g, 2).unwrap();
        assert_eq!(
            ord.order(),
            &[t.index(0, 0), t.index(1, 0), t.index(0, 1), t.index(1, 1)]
        );
    }

    #[test]
    fn snake_ordering_six_by_six_alternates_stripes() {
        let g = square(6, 6);
        let t = g.topology();
        let ord = snake_ordering(&g, 3).unwrap();
        let o = ord.order();
        // First stripe: columns left to right, each top to bottom.
        assert_eq!(o[0], t.index(0, 0));
        assert_eq!(o[1], t.index(1, 0));
        assert_eq!(o[2], t.index(2, 0));
        assert_eq!(o[3], t.index(0, 1));
        // Entry into the second stripe continues down the last column.
        assert_eq!(o[17], t.index(2, 5));
        assert_eq!(o[18], t.index(3, 5));
        assert_eq!(o[19], t.index(4, 5));
        assert_eq!(o[20], t.index(5, 5));
        // Second stripe sweeps right to left.
        assert_eq!(o[21], t.index(3, 4));
    }

    #[test]
    fn snake_ordering_height_one_is_hamiltonian_path() {
        for (m, n) in [(1, 7), (4, 5), (5, 4), (3, 3)] {
            let g = square(m, n);
            let ord = snake_ordering(&g, 1).unwrap();
            for w in ord.order().windows(2) {
                assert!(g.neighbors(w[0]).contains(&w[1]), "{m}x{n}: {w:?}");
            }
        }
    }

    #[test]
    fn snake_ordering_intervals_are_connected() {
        // Every interval of length >= s+1 induces a connected subgraph;
        // this is the relaxed path property the DP needs.
        for (m, n, s) in [(6, 6, 3), (5, 9, 2), (7, 4, 3), (4, 4, 4), (5, 5, 1)] {
            let g = square(m, n);
            let ord = snake_ordering(&g, s).unwrap();
            let o = ord.order();
            let len = s + 1;
            for start in 0..=(o.len() - len) {
                let window = &o[start..start + len];
                assert!(subset_connected(&g, window), "{m}x{n} s={s} at {start}");
            }
        }
    }

    fn subset_connected(g: &GridGraph, cells: &[usize]) -> bool {
        let inside = |v: usize| cells.contains(&v);
        let mut seen = vec![cells[0]];
        let mut queue = vec![cells[0]];
        while let Some(v) = queue.pop() {
            for &u in g.neighbors(v) {
                if inside(u) && !seen.contains(&u) {
                    seen.push(u);
                    queue.push(u);
                }
            }
        }
        seen.len() == cells.len()
    }

    #[test]
    fn snake_ordering_rejects_bad_stripe_height() {
        let g = square(3, 3);
        assert!(snake_ordering(&g, 0).is_err());
        assert!(snake_ordering(&g, 4).is_err());
    }

    #[test]
    fn move_vertex_keeps_caches_in_sync() {
        let t = GridTopology::square(3, 3).unwrap();
        let g = GridGraph::with_weights(t, (0..9).map(|i| i as f64 + 0.5).collect()).unwrap();
        let mut p = Partition::from_assignment(&g, vec![0, 0, 0, 1, 1, 1, 2, 2, 2], 3).unwrap();
        p.move_vertex(&g, 4, 0).unwrap();
        p.move_vertex(&g, 8, 1).unwrap();
        p.verify_caches(&g).unwrap();
    }

    #[test]
    fn move_vertex_refuses_to_empty_a_part() {
        let g = square(1, 3);
        let mut p = Partition::from_assignment(&g, vec![0, 1, 1], 2).unwrap();
        assert!(matches!(p.move_vertex(&g, 0, 1), Err(Error::EmptyPart(0))));
    }

    #[test]
    fn perimeter_identity_square_and_hex() {
        // sum of part perimeters = 2 * cut + boundary length.
        for g in [square(4, 6), hex(4, 6)] {
            let t = g.topology();
            let assignment: Vec<usize> =
                (0..g.vertex_count()).map(|v| t.coords(v).1 / 2).collect();
            let k = (t.cols + 1) / 2;
            let p = Partition::from_assignment(&g, assignment, k).unwrap();
            let total: usize = (0..k)
                .map(|i| perimeter_of_part(&g, &p, i).unwrap())
                .sum();
            assert_eq!(total, 2 * p.cut_edges() + g.boundary_length());
        }
        let sq = square(5, 8);
        assert_eq!(sq.boundary_length(), 2 * (5 + 8));
    }
}
