//! Cautious striping for unweighted rectangular grids, plus the
//! closed-form perimeter and cut lower bounds used as test oracles.
//!
//! The striping solver divides the rows into horizontal strips of height
//! close to `a = floor(sqrt(A))` (`A = floor(mn/k)` is the smaller part
//! cardinality), fills most of each strip with column-major parts, stops
//! each strip while a golden-ratio-sized band of columns is still free,
//! and then partitions the leftover right-hand region `R` row by row and
//! the optional bottom strip `S2` column by column. Stopping each strip
//! inside the band `[floor(a/phi), ceil(phi*a)]` is what keeps every part
//! contiguous while staying near the minimum-perimeter square shape.

use crate::grid::{is_contiguous, GridGraph, GridTopology, Partition};
use crate::{Error, Result};

/// Golden ratio (1 + sqrt(5)) / 2, evaluated in double precision.
pub const PHI: f64 = 1.618033988749895;

/// Strip layout chosen by the first step of the striping solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripePlan {
    /// Smaller part cardinality `A = floor(mn / k)`.
    pub part_size: usize,
    /// Number of parts of cardinality `A + 1`, i.e. `mn mod k`.
    pub extra_parts: usize,
    /// `a = floor(sqrt(A))`.
    pub side: usize,
    /// `d` with `m = d*a + r`, `0 <= r <= a-1`.
    pub full_strips: usize,
    /// `r` with `m = d*a + r`.
    pub remainder: usize,
    /// Heights of the strips forming S1, top to bottom.
    pub strip_heights: Vec<usize>,
    /// Height of the bottom strip S2 (0 when S2 is empty).
    pub s2_height: usize,
}

fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.saturating_mul(x) > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Smallest integer `t` with `t^2 >= v`, i.e. `ceil(sqrt(v))`.
fn ceil_sqrt(v: u64) -> u64 {
    let r = isqrt(v);
    if r * r == v {
        r
    } else {
        r + 1
    }
}

/// `ceil(2*sqrt(A))`, computed exactly as `ceil(sqrt(4A))`.
fn ceil_two_sqrt(a: u64) -> u64 {
    ceil_sqrt(4 * a)
}

/// Minimum perimeter of a polyomino with `a` cells: `2*ceil(2*sqrt(A))`.
pub fn min_perimeter_square(a: u64) -> Result<u64> {
    if a < 1 {
        return Err(Error::pre("polyomino size must be at least 1"));
    }
    Ok(2 * ceil_two_sqrt(a))
}

/// Minimum perimeter of a polyhex with `a` cells: `2*ceil(sqrt(12A - 3))`.
pub fn min_perimeter_hex(a: u64) -> Result<u64> {
    if a < 1 {
        return Err(Error::pre("polyhex size must be at least 1"));
    }
    Ok(2 * ceil_sqrt(12 * a - 3))
}

/// Lower bound on the interior cut edges of any balanced contiguous
/// partition of an `m x n` grid into `k` parts:
/// `max(0, k*ceil(2*sqrt(A)) - 2(m+n))` with `A = floor(mn/k)`.
pub fn cut_lower_bound(m: usize, n: usize, k: usize) -> usize {
    let cells = (m * n) as u64;
    let a = cells / k as u64;
    if a == 0 {
        return 0;
    }
    let bound = k as u64 * ceil_two_sqrt(a);
    bound.saturating_sub(2 * (m + n) as u64) as usize
}

/// Checks `A/h + h <= ceil(2*sqrt(A))` for `h` in `{a, a+1}`. The
/// inequality holds for every non-square `A`; it is exercised purely as a
/// test oracle. Evaluated exactly as `A + h^2 <= h * ceil(2*sqrt(A))`.
pub fn lemma_uniform_check(a_cells: u64, h: u64) -> Result<bool> {
    let a = isqrt(a_cells);
    if a * a == a_cells {
        return Err(Error::pre(format!("{a_cells} is a perfect square")));
    }
    if h != a && h != a + 1 {
        return Err(Error::pre(format!("h = {h} is not in {{{a}, {}}}", a + 1)));
    }
    Ok(a_cells + h * h <= h * ceil_two_sqrt(a_cells))
}

/// Number of columns a strip must keep free before moving on to R:
/// the strip stops once at most `ceil(phi * a)` complete columns remain.
fn stop_threshold(side: usize) -> usize {
    (PHI * side as f64).ceil() as usize
}

/// Lower end of the stopping band, `floor(a / phi)`.
pub fn stop_band_low(side: usize) -> usize {
    (side as f64 / PHI).floor() as usize
}

fn plan_preconditions(m: usize, n: usize, k: usize) -> Result<(usize, usize, usize)> {
    if k == 0 {
        return Err(Error::pre("k must be positive"));
    }
    if n < m {
        return Err(Error::pre("stripe_plan expects n >= m (transpose first)"));
    }
    let part_size = (m * n) / k;
    if part_size < 1 {
        return Err(Error::pre(format!("k = {k} exceeds the vertex count {}", m * n)));
    }
    let side = isqrt(part_size as u64) as usize;
    if m < side {
        return Err(Error::pre(format!(
            "m = {m} is smaller than a = floor(sqrt(A)) = {side}"
        )));
    }
    Ok((part_size, side, (m * n) % k))
}

/// Divides the `m` rows into horizontal strips. When `r <= d` there are
/// `r` strips of height `a+1` and `d-r` of height `a` and S2 is empty;
/// when `r > floor(a/phi)` (and `r > d`) there are `d` strips of height
/// `a` plus an S2 of height `r`; otherwise `d-1` strips of height `a`
/// plus an S2 of height `a+r`.
pub fn stripe_plan(m: usize, n: usize, k: usize) -> Result<StripePlan> {
    let (part_size, side, extra_parts) = plan_preconditions(m, n, k)?;
    let d = m / side;
    let r = m % side;
    let (strip_heights, s2_height) = if r <= d {
        let mut heights = vec![side + 1; r];
        heights.extend(std::iter::repeat(side).take(d - r));
        (heights, 0)
    } else if r > stop_band_low(side) {
        (vec![side; d], r)
    } else {
        (vec![side; d - 1], side + r)
    };
    debug_assert_eq!(strip_heights.iter().sum::<usize>() + s2_height, m);
    Ok(StripePlan {
        part_size,
        extra_parts,
        side,
        full_strips: d,
        remainder: r,
        strip_heights,
        s2_height,
    })
}

/// Result of the striping solver, with the plan it used and whether the
/// degenerate-case snake route was taken.
#[derive(Clone, Debug)]
pub struct StripingOutcome {
    pub partition: Partition,
    pub plan: StripePlan,
    /// True when the partition was produced by cutting a boustrophedon
    /// Hamiltonian path into runs instead of the strip construction. Used
    /// for `a <= 2`, where parts are too small for the strip geometry.
    pub snake_route: bool,
}

/// Hands out part target sizes: the first `extra` parts get `A + 1`.
struct SizeSequence {
    part_size: usize,
    extras_left: usize,
    issued: usize,
    k: usize,
}

impl SizeSequence {
    fn new(plan: &StripePlan, k: usize) -> Self {
        SizeSequence {
            part_size: plan.part_size,
            extras_left: plan.extra_parts,
            issued: 0,
            k,
        }
    }

    fn peek(&self) -> usize {
        if self.extras_left > 0 {
            self.part_size + 1
        } else {
            self.part_size
        }
    }

    fn next_size(&mut self) -> usize {
        debug_assert!(self.issued < self.k);
        self.issued += 1;
        if self.extras_left > 0 {
            self.extras_left -= 1;
            self.part_size + 1
        } else {
            self.part_size
        }
    }
}

/// Partitions the grid into `k` contiguous parts of cardinality `A` or
/// `A+1` (exactly `mn mod k` of the larger size). Inputs with `m > n` are
/// transposed internally and the result transposed back.
pub fn phi_cautious_striping(m: usize, n: usize, k: usize) -> Result<Partition> {
    Ok(striping_detail(m, n, k)?.partition)
}

/// Like [`phi_cautious_striping`], also returning the plan and whether the
/// snake route was taken.
pub fn striping_detail(m: usize, n: usize, k: usize) -> Result<StripingOutcome> {
    if m > n {
        let transposed = striping_detail(n, m, k)?;
        let topo = GridTopology::square(m, n)?;
        let g = GridGraph::unit(topo);
        let mut assignment = vec![0usize; m * n];
        for r in 0..m {
            for c in 0..n {
                // (r, c) in the m x n grid is (c, r) in the n x m grid.
                assignment[topo.index(r, c)] = transposed.partition.assignment()[c * m + r];
            }
        }
        let partition = Partition::from_assignment(&g, assignment, k)?;
        return Ok(StripingOutcome {
            partition,
            plan: transposed.plan,
            snake_route: transposed.snake_route,
        });
    }

    let plan = stripe_plan(m, n, k)?;
    let g = GridGraph::unit(GridTopology::square(m, n)?);

    if plan.side <= 2 {
        let partition = snake_run_partition(&g, &plan, k)?;
        return Ok(StripingOutcome {
            partition,
            plan,
            snake_route: true,
        });
    }

    match stripe_construction(&g, &plan, k) {
        Some(partition) => Ok(StripingOutcome {
            partition,
            plan,
            snake_route: false,
        }),
        // The strip geometry can fail to keep a part connected on
        // degenerate ragged leftovers; the snake route always satisfies
        // the cardinality and contiguity contract.
        None => Ok(StripingOutcome {
            partition: snake_run_partition(&g, &plan, k)?,
            plan,
            snake_route: true,
        }),
    }
}

/// Cuts a snake ordering with stripe height `a` into consecutive runs of
/// the target sizes. Every run has at least `A >= a^2 >= a + 1` cells (for
/// `a >= 2`; for `a = 1` the ordering is a Hamiltonian path), which is
/// enough for intervals of the snake order to induce connected subgraphs,
/// and the runs are near-square, so perimeters stay close to the optimum.
fn snake_run_partition(g: &GridGraph, plan: &StripePlan, k: usize) -> Result<Partition> {
    let ord = crate::grid::snake_ordering(g, plan.side.max(1))?;
    let mut sizes = SizeSequence::new(plan, k);
    let mut assignment = vec![0usize; g.vertex_count()];
    let mut pos = 0;
    for part in 0..k {
        for _ in 0..sizes.next_size() {
            assignment[ord.order()[pos]] = part;
            pos += 1;
        }
    }
    debug_assert_eq!(pos, g.vertex_count());
    Partition::from_assignment(g, assignment, k)
}

/// The strip construction proper. Returns `None` if the built partition
/// fails its own contiguity or cardinality check.
fn stripe_construction(g: &GridGraph, plan: &StripePlan, k: usize) -> Option<Partition> {
    let topo = g.topology();
    let (m, n) = (topo.rows, topo.cols);
    let mut sizes = SizeSequence::new(plan, k);
    let mut assignment = vec![usize::MAX; m * n];
    let mut next_part = 0usize;
    let threshold = stop_threshold(plan.side);

    // Step 2: column-major striping inside each S1 strip, stopping while
    // a band of complete columns is still unpartitioned. A strip also
    // stops early when another part would leave its top leftover row
    // starting right of the previous strip's bottom leftover row; that
    // keeps the left edge of R non-increasing downwards, which the
    // row-major striping of R needs for contiguity.
    let mut row0 = 0;
    let mut prev_bottom_edge: Option<usize> = None;
    for &h in &plan.strip_heights {
        let mut consumed = 0usize; // cells assigned in this strip
        loop {
            if next_part == k {
                break;
            }
            let top_edge = (consumed + h - 1) / h; // first column with a free top cell
            if n - top_edge <= threshold {
                break;
            }
            let after = consumed + sizes.peek();
            if after > n * h {
                break;
            }
            let top_edge_after = (after + h - 1) / h;
            if prev_bottom_edge.is_some_and(|prev| top_edge_after > prev) {
                break;
            }
            let target = sizes.next_size();
            for i in consumed..consumed + target {
                assignment[topo.index(row0 + i % h, i / h)] = next_part;
            }
            consumed = after;
            next_part += 1;
        }
        prev_bottom_edge = Some(consumed / h);
        row0 += h;
    }

    // Step 3: the unpartitioned region R on the right of S1, striped row
    // by row, top to bottom, each row right to left. Step 4: S2, striped
    // column by column, right to left, each column top to bottom; a part
    // left deficient by R is completed first by the same sweep.
    let s1_rows = m - plan.s2_height;
    let mut tail = Vec::new();
    for r in 0..s1_rows {
        for c in (0..n).rev() {
            if assignment[topo.index(r, c)] == usize::MAX {
                tail.push(topo.index(r, c));
            }
        }
    }
    for c in (0..n).rev() {
        for r in s1_rows..m {
            tail.push(topo.index(r, c));
        }
    }

    let mut pos = 0;
    while next_part < k {
        let target = sizes.next_size();
        for _ in 0..target {
            assignment[tail[pos]] = next_part;
            pos += 1;
        }
        next_part += 1;
    }
    if pos != tail.len() {
        return None;
    }

    let partition = Partition::from_assignment(g, assignment, k).ok()?;
    let sizes_ok = partition
        .part_sizes()
        .iter()
        .all(|&s| s == plan.part_size || s == plan.part_size + 1);
    let extras = partition
        .part_sizes()
        .iter()
        .filter(|&&s| s == plan.part_size + 1)
        .count();
    if !sizes_ok || extras != plan.extra_parts {
        return None;
    }
    let contiguous = is_contiguous(g, &partition).ok()?;
    if contiguous.iter().all(|&c| c) {
        Some(partition)
    } else {
        None
    }
}
