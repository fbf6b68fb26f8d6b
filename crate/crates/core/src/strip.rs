//! Border strip decompositions: greedy and row decompositions, the
//! brute-force enumerator, endpoint contents, heights, outside
//! decompositions and cutting strips.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::code::reduced_code;
use crate::error::{Error, Result};
use crate::shape::{components_of, is_border_strip_cells, Cell, SkewShape};

/// Cells ordered by increasing content.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderStrip {
    cells: Vec<Cell>,
}

impl BorderStrip {
    pub fn new(mut cells: Vec<Cell>) -> Result<Self> {
        if !is_border_strip_cells(&cells) {
            return Err(Error::NotBorderStrip);
        }
        cells.sort_by_key(|c| c.content());
        Ok(BorderStrip { cells })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Lower-left cell.
    pub fn init(&self) -> Cell {
        self.cells[0]
    }

    /// Upper-right cell.
    pub fn fin(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    pub fn init_content(&self) -> i64 {
        self.init().content()
    }

    pub fn fin_content(&self) -> i64 {
        self.fin().content()
    }

    /// Number of rows minus one.
    pub fn height(&self) -> usize {
        self.init().row - self.fin().row
    }

    /// The strip as a skew shape in its own bounding box.
    pub fn to_shape(&self) -> SkewShape {
        SkewShape::from_cells(&self.cells).expect("a border strip is a skew shape")
    }
}

impl Serialize for BorderStrip {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cells: Vec<[usize; 2]> = self.cells.iter().map(|c| [c.row, c.col]).collect();
        let mut st = s.serialize_struct("BorderStrip", 4)?;
        st.serialize_field("cells", &cells)?;
        st.serialize_field("height", &self.height())?;
        st.serialize_field("init_content", &self.init_content())?;
        st.serialize_field("fin_content", &self.fin_content())?;
        st.end()
    }
}

/// Strips in canonical order: increasing init content, then init row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Decomposition {
    strips: Vec<BorderStrip>,
}

impl Decomposition {
    pub fn new(mut strips: Vec<BorderStrip>) -> Self {
        strips.sort_by_key(|b| (b.init_content(), b.init().row));
        Decomposition { strips }
    }

    pub fn from_blocks(blocks: &[Vec<Cell>]) -> Result<Self> {
        let strips = blocks
            .iter()
            .map(|b| BorderStrip::new(b.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition::new(strips))
    }

    pub fn strips(&self) -> &[BorderStrip] {
        &self.strips
    }

    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }

    pub fn blocks(&self) -> Vec<Vec<Cell>> {
        self.strips.iter().map(|b| b.cells.clone()).collect()
    }

    pub fn total_height(&self) -> usize {
        self.strips.iter().map(BorderStrip::height).sum()
    }
}

/// Repeatedly peels the outer rim `{(i,j) : (i+1,j+1) ∉ shape}`; each
/// connected piece of a rim is one strip.
pub fn greedy_decomposition(shape: &SkewShape) -> Decomposition {
    let mut current: BTreeSet<Cell> = shape.cells().into_iter().collect();
    let mut strips = Vec::new();
    while !current.is_empty() {
        let rim: Vec<Cell> = current
            .iter()
            .copied()
            .filter(|c| !current.contains(&Cell::new(c.row + 1, c.col + 1)))
            .collect();
        for piece in components_of(&rim) {
            strips.push(BorderStrip::new(piece).expect("rim pieces are border strips"));
        }
        for c in &rim {
            current.remove(c);
        }
    }
    Decomposition::new(strips)
}

/// One strip per nonempty row.
pub fn row_decomposition(shape: &SkewShape) -> Decomposition {
    let strips = (1..=shape.num_rows())
        .filter(|&i| shape.lambda_part(i) > shape.mu_part(i))
        .map(|i| {
            let cells = (shape.mu_part(i) + 1..=shape.lambda_part(i))
                .map(|j| Cell::new(i, j))
                .collect();
            BorderStrip::new(cells).expect("a row is a border strip")
        })
        .collect();
    Decomposition::new(strips)
}

/// Disjoint blocks covering the shape, each a border strip.
pub fn validate_decomposition(shape: &SkewShape, blocks: &[Vec<Cell>]) -> bool {
    let mut seen = HashSet::new();
    for block in blocks {
        if !is_border_strip_cells(block) {
            return false;
        }
        for &c in block {
            if !shape.contains(c) || !seen.insert(c) {
                return false;
            }
        }
    }
    seen.len() == shape.size()
}

pub const DEFAULT_DECOMPOSITION_CELLS: usize = 10;

struct Enumerator<'a> {
    shape: &'a SkewShape,
    free: BTreeSet<(i64, usize, usize)>,
    current: Vec<Vec<Cell>>,
    max_strips: usize,
    out: Vec<Decomposition>,
}

impl Enumerator<'_> {
    fn key(c: Cell) -> (i64, usize, usize) {
        (c.content(), c.row, c.col)
    }

    fn run(&mut self) {
        let Some(&(_, row, col)) = self.free.iter().next() else {
            let d = Decomposition::from_blocks(&self.current).expect("blocks are strips");
            self.out.push(d);
            return;
        };
        if self.current.len() == self.max_strips {
            return;
        }
        let start = Cell::new(row, col);
        self.free.remove(&Self::key(start));
        let mut path = vec![start];
        self.grow(&mut path);
        self.free.insert(Self::key(start));
    }

    /// Decides the strip through `path[0]`: stop here, or step right or up.
    fn grow(&mut self, path: &mut Vec<Cell>) {
        self.current.push(path.clone());
        self.run();
        self.current.pop();
        let last = *path.last().unwrap();
        let mut next = vec![Cell::new(last.row, last.col + 1)];
        if last.row > 1 {
            next.push(Cell::new(last.row - 1, last.col));
        }
        for n in next {
            if self.shape.contains(n) && self.free.remove(&Self::key(n)) {
                path.push(n);
                self.grow(path);
                path.pop();
                self.free.insert(Self::key(n));
            }
        }
    }
}

fn enumerate_with_limit(shape: &SkewShape, bound: usize, max_strips: usize) -> Result<Vec<Decomposition>> {
    if shape.size() > bound {
        return Err(Error::BoundExceeded {
            what: "decomposition cells",
            actual: shape.size(),
            limit: bound,
        });
    }
    let mut e = Enumerator {
        shape,
        free: shape.cells().into_iter().map(Enumerator::key).collect(),
        current: Vec::new(),
        max_strips,
        out: Vec::new(),
    };
    e.run();
    Ok(e.out)
}

/// Every border strip decomposition, each exactly once. The strip of the
/// unassigned cell with least content is always decided first; that cell
/// must be the strip's initial cell.
pub fn enumerate_decompositions(shape: &SkewShape, bound: usize) -> Result<Vec<Decomposition>> {
    enumerate_with_limit(shape, bound, usize::MAX)
}

/// Decompositions with exactly `rank` strips, pruning longer branches.
pub fn minimal_decompositions(shape: &SkewShape, bound: usize) -> Result<Vec<Decomposition>> {
    let r = reduced_code(shape).rank();
    enumerate_with_limit(shape, bound, r)
}

/// `(P_D, Q_D)`: sorted init and fin contents.
pub fn endpoint_content_sets(d: &Decomposition) -> (Vec<i64>, Vec<i64>) {
    let mut p: Vec<i64> = d.strips.iter().map(BorderStrip::init_content).collect();
    let mut q: Vec<i64> = d.strips.iter().map(BorderStrip::fin_content).collect();
    p.sort_unstable();
    q.sort_unstable();
    (p, q)
}

/// `{ε + w_i - 1}` and `{ε + y_i - 2}` with `ε = 1 - ℓ(λ)` the least content
/// of the bounding box.
pub fn predicted_endpoint_sets(shape: &SkewShape) -> (Vec<i64>, Vec<i64>) {
    let eps = 1 - shape.num_rows() as i64;
    let (w, y) = reduced_code(shape).column_sets();
    (
        w.iter().map(|&x| eps + x as i64 - 1).collect(),
        y.iter().map(|&x| eps + x as i64 - 2).collect(),
    )
}

/// Sum of strip heights of the greedy decomposition.
pub fn z_statistic(shape: &SkewShape) -> usize {
    greedy_decomposition(shape).total_height()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Right,
}

/// Direction from `a` to the next cell `b` of a strip.
fn step(a: Cell, b: Cell) -> Direction {
    if b.row == a.row {
        Direction::Right
    } else {
        Direction::Up
    }
}

fn on_left_or_bottom(shape: &SkewShape, c: Cell) -> bool {
    c.col == 1 || !shape.contains(Cell::new(c.row, c.col - 1)) || !shape.contains(Cell::new(c.row + 1, c.col))
}

fn on_right_or_top(shape: &SkewShape, c: Cell) -> bool {
    c.row == 1 || !shape.contains(Cell::new(c.row, c.col + 1)) || !shape.contains(Cell::new(c.row - 1, c.col))
}

/// Directions leaving each cell: the step to the next cell for non-terminal
/// cells, and for a terminal cell the only way out of the shape when one
/// of its right and upper neighbours is a shape cell.
fn diagonal_constraints(shape: &SkewShape, d: &Decomposition) -> BTreeMap<i64, Vec<(Direction, bool)>> {
    let mut out: BTreeMap<i64, Vec<(Direction, bool)>> = BTreeMap::new();
    for b in &d.strips {
        for w in b.cells.windows(2) {
            out.entry(w[0].content()).or_default().push((step(w[0], w[1]), false));
        }
        let f = b.fin();
        let right = shape.contains(Cell::new(f.row, f.col + 1));
        let up = f.row > 1 && shape.contains(Cell::new(f.row - 1, f.col));
        let forced = match (right, up) {
            (true, false) => Some(Direction::Up),
            (false, true) => Some(Direction::Right),
            _ => None,
        };
        if let Some(dir) = forced {
            out.entry(f.content()).or_default().push((dir, true));
        }
    }
    out
}

/// Every init on the left or bottom perimeter, every fin on the right or
/// top perimeter, and non-terminal cells of one diagonal all turning the
/// same way.
pub fn is_outside_decomposition(shape: &SkewShape, d: &Decomposition) -> bool {
    if !validate_decomposition(shape, &d.blocks()) {
        return false;
    }
    if !d
        .strips
        .iter()
        .all(|b| on_left_or_bottom(shape, b.init()) && on_right_or_top(shape, b.fin()))
    {
        return false;
    }
    diagonal_constraints(shape, d).values().all(|dirs| {
        let mut inner = dirs.iter().filter(|(_, terminal)| !terminal).map(|(d, _)| d);
        match inner.next() {
            Some(first) => inner.all(|d| d == first),
            None => true,
        }
    })
}

/// The ribbon that records one direction per diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuttingStrip {
    first_content: i64,
    directions: Vec<Direction>,
    cells: Vec<Cell>,
}

/// Result of cutting a segment `[p, q]` out of a cutting strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segment {
    Strip(BorderStrip),
    Empty,
    Undefined,
}

impl CuttingStrip {
    pub fn first_content(&self) -> i64 {
        self.first_content
    }

    pub fn last_content(&self) -> i64 {
        self.first_content + self.cells.len() as i64 - 1
    }

    /// Direction leaving the cell of each content, lowest content first.
    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Cell of the strip with the given content.
    pub fn cell_at(&self, content: i64) -> Result<Cell> {
        if content < self.first_content || content > self.last_content() {
            return Err(Error::ContentOutOfRange(content));
        }
        Ok(self.cells[(content - self.first_content) as usize])
    }

    fn from_directions(first_content: i64, directions: Vec<Direction>) -> Self {
        let n = directions.len();
        let ups = directions[..n.saturating_sub(1)]
            .iter()
            .filter(|&&d| d == Direction::Up)
            .count();
        let mut cur = Cell::new(ups + 1, 1);
        let mut cells = Vec::with_capacity(n);
        for (i, d) in directions.iter().enumerate() {
            cells.push(cur);
            if i + 1 < n {
                cur = match d {
                    Direction::Up => Cell::new(cur.row - 1, cur.col),
                    Direction::Right => Cell::new(cur.row, cur.col + 1),
                };
            }
        }
        CuttingStrip {
            first_content,
            directions,
            cells,
        }
    }
}

/// Builds the cutting strip of an outside decomposition of a connected
/// shape. Diagonals without constraints go right.
pub fn cutting_strip(shape: &SkewShape, d: &Decomposition) -> Result<CuttingStrip> {
    if !shape.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_outside_decomposition(shape, d) {
        return Err(Error::InvalidDecomposition("not an outside decomposition".into()));
    }
    let Some(lo) = shape.min_content() else {
        return Ok(CuttingStrip {
            first_content: 0,
            directions: Vec::new(),
            cells: Vec::new(),
        });
    };
    let hi = shape.cells().iter().map(|c| c.content()).max().unwrap();
    let constraints = diagonal_constraints(shape, d);
    let mut directions = Vec::with_capacity((hi - lo + 1) as usize);
    for c in lo..=hi {
        let mut chosen: Option<Direction> = None;
        for &(dir, _) in constraints.get(&c).map(Vec::as_slice).unwrap_or(&[]) {
            match chosen {
                None => chosen = Some(dir),
                Some(prev) if prev != dir => {
                    return Err(Error::InvalidDecomposition(format!(
                        "diagonal {c} has conflicting directions"
                    )))
                }
                _ => {}
            }
        }
        directions.push(chosen.unwrap_or(Direction::Right));
    }
    Ok(CuttingStrip::from_directions(lo, directions))
}

/// The segment of `phi` from content `p` to content `q`.
pub fn strip_segment(phi: &CuttingStrip, p: i64, q: i64) -> Result<Segment> {
    if p == q + 1 {
        return Ok(Segment::Empty);
    }
    if p > q + 1 {
        return Ok(Segment::Undefined);
    }
    phi.cell_at(p)?;
    phi.cell_at(q)?;
    let start = (p - phi.first_content) as usize;
    let end = (q - phi.first_content) as usize;
    let cells = phi.cells[start..=end].to_vec();
    Ok(Segment::Strip(BorderStrip::new(cells)?))
}

/// Splits a decomposition of a possibly disconnected shape into one
/// `(component, decomposition)` pair per component, each translated into
/// its own bounding box.
pub fn split_by_component(shape: &SkewShape, d: &Decomposition) -> Result<Vec<(SkewShape, Decomposition)>> {
    let mut out = Vec::new();
    for comp in shape.components() {
        let r0 = comp.iter().map(|c| c.row).min().unwrap();
        let c0 = comp.iter().map(|c| c.col).min().unwrap();
        let shift = |c: &Cell| Cell::new(c.row - r0 + 1, c.col - c0 + 1);
        let members: HashSet<Cell> = comp.iter().copied().collect();
        let sub_shape = SkewShape::from_cells(&comp)
            .ok_or_else(|| Error::InvalidDecomposition("component is not a skew shape".into()))?;
        let mut strips = Vec::new();
        for b in &d.strips {
            let inside = b.cells.iter().filter(|c| members.contains(c)).count();
            if inside == 0 {
                continue;
            }
            if inside != b.len() {
                return Err(Error::InvalidDecomposition("strip spans two components".into()));
            }
            strips.push(BorderStrip::new(b.cells.iter().map(shift).collect())?);
        }
        out.push((sub_shape, Decomposition::new(strips)));
    }
    Ok(out)
}
