//! Partitions, skew shapes and their cell geometry.
//!
//! Coordinates are matrix style: `row` grows downwards, `col` grows to the
//! right, both 1-indexed. The content of a cell is `col - row`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedShape {
                literal: join(&parts),
                reason: "parts must be positive and weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (1-indexed), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

fn join(parts: &[usize]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Content `col - row` of a cell.
pub fn content(cell: Cell) -> i64 {
    cell.content()
}

fn edge_adjacent(a: Cell, b: Cell) -> bool {
    (a.row == b.row && a.col.abs_diff(b.col) == 1) || (a.col == b.col && a.row.abs_diff(b.row) == 1)
}

/// A skew shape `lambda / mu`. `mu` is stored zero-padded to `lambda.len()` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    lambda: Partition,
    mu: Vec<usize>,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if !lambda.contains(&mu) {
            return Err(Error::NotContained {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        let mu = (1..=lambda.len()).map(|i| mu.part(i)).collect();
        Ok(SkewShape { lambda, mu })
    }

    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        SkewShape::new(Partition::new(lambda.to_vec())?, Partition::new(mu.to_vec())?)
    }

    /// Straight shape `lambda / ()`.
    pub fn straight(lambda: Partition) -> Self {
        let mu = vec![0; lambda.len()];
        SkewShape { lambda, mu }
    }

    pub fn empty() -> Self {
        SkewShape {
            lambda: Partition::empty(),
            mu: Vec::new(),
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> Partition {
        Partition::new(self.mu.clone()).expect("stored mu is a partition")
    }

    pub fn mu_padded(&self) -> &[usize] {
        &self.mu
    }

    /// `ℓ(λ)`, the number of rows of the bounding box.
    pub fn num_rows(&self) -> usize {
        self.lambda.len()
    }

    /// `λ_1`, the number of columns of the bounding box.
    pub fn width(&self) -> usize {
        self.lambda.part(1)
    }

    pub fn lambda_part(&self, row: usize) -> usize {
        self.lambda.part(row)
    }

    pub fn mu_part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.mu.get(row - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.lambda.weight() - self.mu.iter().sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.num_rows()
            && cell.col > self.mu_part(cell.row)
            && cell.col <= self.lambda_part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for row in 1..=self.num_rows() {
            for col in self.mu_part(row) + 1..=self.lambda_part(row) {
                out.push(Cell::new(row, col));
            }
        }
        out
    }

    pub fn diagonals(&self) -> BTreeMap<i64, Vec<Cell>> {
        let mut map: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
        for cell in self.cells() {
            map.entry(cell.content()).or_default().push(cell);
        }
        map
    }

    /// Smallest content of a cell, `None` for the empty shape.
    pub fn min_content(&self) -> Option<i64> {
        (1..=self.num_rows())
            .filter(|&r| self.lambda_part(r) > self.mu_part(r))
            .map(|r| (self.mu_part(r) + 1) as i64 - r as i64)
            .min()
    }

    /// Edge-connected components, each sorted row-major; components are
    /// ordered by their first cell.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        components_of(&self.cells())
    }

    /// Edgewise connectivity. The empty shape counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected and free of 2×2 blocks.
    pub fn is_border_strip(&self) -> bool {
        if self.is_empty() || !self.is_connected() {
            return false;
        }
        // A 2×2 block at rows r, r+1 exists iff the two rows overlap in two columns.
        (1..self.num_rows()).all(|r| {
            let lo = self.mu_part(r) + 1;
            let hi = self.lambda_part(r + 1);
            hi < lo + 1
        })
    }

    /// Re-anchors an arbitrary cell set in its tight bounding box. Returns
    /// `None` unless the set is the cell set of a skew shape with no empty
    /// rows.
    pub fn from_cells(cells: &[Cell]) -> Option<SkewShape> {
        if cells.is_empty() {
            return Some(SkewShape::empty());
        }
        let r0 = cells.iter().map(|c| c.row).min()?;
        let r1 = cells.iter().map(|c| c.row).max()?;
        let c0 = cells.iter().map(|c| c.col).min()?;
        let mut rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r1 - r0 + 1];
        for c in cells {
            rows[c.row - r0].insert(c.col - c0 + 1);
        }
        let mut lambda = Vec::with_capacity(rows.len());
        let mut mu = Vec::with_capacity(rows.len());
        for row in &rows {
            let lo = *row.iter().next()?;
            let hi = *row.iter().next_back()?;
            if hi - lo + 1 != row.len() {
                return None;
            }
            lambda.push(hi);
            mu.push(lo - 1);
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) || mu.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        SkewShape::from_parts(&lambda, &mu).ok()
    }
}

/// Edge-connected components of a cell set.
pub fn components_of(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &set {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(c) = queue.pop_front() {
            comp.push(c);
            let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                nbrs.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nbrs.push(Cell::new(c.row, c.col - 1));
            }
            for n in nbrs {
                if set.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// Operational border-strip test for a bare block of cells: one cell per
/// content, contiguous contents, and consecutive-content cells edge-adjacent.
pub fn is_border_strip_cells(cells: &[Cell]) -> bool {
    if cells.is_empty() {
        return false;
    }
    let mut sorted = cells.to_vec();
    sorted.sort_by_key(|c| c.content());
    sorted
        .windows(2)
        .all(|w| w[1].content() == w[0].content() + 1 && edge_adjacent(w[0], w[1]))
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        let mu = self.mu();
        if !mu.is_empty() {
            write!(f, "/{mu}")?;
        }
        Ok(())
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn parse_parts(literal: &str, text: &str) -> Result<Partition> {
    let bad = |reason: &str| Error::MalformedShape {
        literal: literal.to_string(),
        reason: reason.to_string(),
    };
    if text.is_empty() {
        return Err(bad("empty part list"));
    }
    let mut parts = Vec::new();
    for tok in text.split(',') {
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("parts must be base-10 positive integers"));
        }
        let v: usize = tok.parse().map_err(|_| bad("part out of range"))?;
        if v == 0 {
            return Err(bad("parts must be positive"));
        }
        parts.push(v);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(bad("parts must be weakly decreasing"));
    }
    Ok(Partition { parts })
}

/// Parses `parts ("/" parts)?` where `parts ::= int ("," int)*`.
pub fn parse_shape(text: &str) -> Result<SkewShape> {
    let mut halves = text.split('/');
    let lambda = parse_parts(text, halves.next().unwrap_or(""))?;
    let mu = match halves.next() {
        Some(m) => parse_parts(text, m)?,
        None => Partition::empty(),
    };
    if halves.next().is_some() {
        return Err(Error::MalformedShape {
            literal: text.to_string(),
            reason: "more than one '/'".into(),
        });
    }
    SkewShape::new(lambda, mu)
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_shape(s)
    }
}

/// All canonical skew shapes with `1..=max_cells` cells.
///
/// Canonical: every row and every column of the `ℓ(λ) × λ_1` bounding box
/// contains a cell. Any skew shape is a canonical one with empty rows and
/// columns inserted between components, so nothing that depends only on
/// the components is lost.
pub fn enumerate_shapes(max_cells: usize) -> ShapeIter {
    enumerate_shapes_in_box(max_cells, max_cells, max_cells)
}

/// As [`enumerate_shapes`], restricted to `λ_1 <= max_width` and
/// `ℓ(λ) <= max_height`.
pub fn enumerate_shapes_in_box(max_cells: usize, max_width: usize, max_height: usize) -> ShapeIter {
    ShapeIter {
        max_cells,
        max_width,
        max_height,
        rows: Vec::new(),
        cells: Vec::new(),
        started: false,
        done: max_cells == 0 || max_width == 0 || max_height == 0,
    }
}

/// Depth-first stream over `(λ_i, μ_i)` rows, emitting a shape whenever the
/// last row has `μ_i = 0`.
#[derive(Debug, Clone)]
pub struct ShapeIter {
    max_cells: usize,
    max_width: usize,
    max_height: usize,
    rows: Vec<(usize, usize)>,
    // running cell count after each row
    cells: Vec<usize>,
    started: bool,
    done: bool,
}

impl ShapeIter {
    fn cells_before(&self, depth: usize) -> usize {
        if depth == 0 {
            0
        } else {
            self.cells[depth - 1]
        }
    }

    fn valid(&self, depth: usize, l: usize, m: usize) -> bool {
        let (pl, pm) = if depth == 0 {
            (self.max_width, usize::MAX)
        } else {
            self.rows[depth - 1]
        };
        if l == 0 || l > pl || m >= l || m > pm {
            return false;
        }
        if depth > 0 && l < pm {
            return false;
        }
        // every later row removes at least (μ_i - μ_{i+1}) further cells
        if self.cells_before(depth) + l > self.max_cells {
            return false;
        }
        m == 0 || depth + 1 < self.max_height
    }

    /// First valid `(l, m)` at `depth` strictly after `after` in
    /// lexicographic order.
    fn next_candidate(&self, depth: usize, after: Option<(usize, usize)>) -> Option<(usize, usize)> {
        let pl = if depth == 0 {
            self.max_width
        } else {
            self.rows[depth - 1].0
        };
        let (mut l, mut m) = match after {
            None => (1, 0),
            Some((l, m)) => (l, m + 1),
        };
        while l <= pl {
            while m < l {
                if self.valid(depth, l, m) {
                    return Some((l, m));
                }
                m += 1;
            }
            l += 1;
            m = 0;
        }
        None
    }

    fn push(&mut self, row: (usize, usize)) {
        let depth = self.rows.len();
        let total = self.cells_before(depth) + row.0 - row.1;
        self.rows.push(row);
        self.cells.push(total);
    }

    fn current(&self) -> SkewShape {
        let lambda: Vec<usize> = self.rows.iter().map(|r| r.0).collect();
        let mu: Vec<usize> = self.rows.iter().map(|r| r.1).collect();
        SkewShape {
            lambda: Partition { parts: lambda },
            mu,
        }
    }
}

impl Iterator for ShapeIter {
    type Item = SkewShape;

    fn next(&mut self) -> Option<SkewShape> {
        loop {
            if self.done {
                return None;
            }
            let depth = self.rows.len();
            let child = if !self.started {
                self.started = true;
                self.next_candidate(0, None)
            } else if depth < self.max_height {
                self.next_candidate(depth, None)
            } else {
                None
            };
            match child {
                Some(c) => self.push(c),
                None => loop {
                    let Some(last) = self.rows.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.cells.pop();
                    if let Some(s) = self.next_candidate(self.rows.len(), Some(last)) {
                        self.push(s);
                        break;
                    }
                },
            }
            if self.rows.last().map(|r| r.1) == Some(0) {
                return Some(self.current());
            }
        }
    }
}
