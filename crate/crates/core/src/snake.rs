//! Snakes attached to the boundary edges of `λ`, snake sequences, interval
//! sets, crossing numbers and interval permutations.

use std::fmt;

use crate::code::reduced_code;
use crate::error::{Error, Result};
use crate::shape::{Cell, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SnakeSymbol {
    L(usize),
    R(usize),
    O,
}

impl fmt::Display for SnakeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SnakeSymbol::L(m) => write!(f, "L{m}"),
            SnakeSymbol::R(m) => write!(f, "R{m}"),
            SnakeSymbol::O => f.write_str("O"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeSequence {
    symbols: Vec<SnakeSymbol>,
    raw: Vec<Vec<Cell>>,
}

impl SnakeSequence {
    pub fn symbols(&self) -> &[SnakeSymbol] {
        &self.symbols
    }

    /// The snake of each boundary edge, in edge order.
    pub fn raw(&self) -> &[Vec<Cell>] {
        &self.raw
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// 1-indexed positions of the `L` symbols.
    pub fn left_positions(&self) -> Vec<usize> {
        self.positions(|s| matches!(s, SnakeSymbol::L(_)))
    }

    /// 1-indexed positions of the `R` symbols.
    pub fn right_positions(&self) -> Vec<usize> {
        self.positions(|s| matches!(s, SnakeSymbol::R(_)))
    }

    fn positions(&self, pred: impl Fn(&SnakeSymbol) -> bool) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| pred(s))
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for SnakeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Longest initial run of the staircase starting at `start` that stays in
/// the shape. `first_left` picks whether the first step goes left or up.
fn staircase(shape: &SkewShape, start: (i64, i64), first_left: bool) -> Vec<Cell> {
    let (mut i, mut j) = start;
    let mut out = Vec::new();
    let mut left = first_left;
    loop {
        if i < 1 || j < 1 {
            break;
        }
        let cell = Cell::new(i as usize, j as usize);
        if !shape.contains(cell) {
            break;
        }
        out.push(cell);
        if left {
            j -= 1;
        } else {
            i -= 1;
        }
        left = !left;
    }
    out
}

fn classify(cells: &[Cell], horizontal: bool) -> SnakeSymbol {
    // length of a snake is one less than its number of cells
    if cells.len().is_multiple_of(2) {
        return SnakeSymbol::O;
    }
    let m = (cells.len() - 1) / 2;
    if horizontal {
        SnakeSymbol::L(m)
    } else {
        SnakeSymbol::R(m)
    }
}

/// Walks the `k` edges of the lower-right boundary of `λ` from the
/// bottom-left corner to the top-right corner and records each edge's snake.
pub fn snake_sequence(shape: &SkewShape) -> SnakeSequence {
    let lambda = shape.lambda();
    let rows = lambda.len();
    let mut symbols = Vec::with_capacity(shape.width() + rows);
    let mut raw = Vec::with_capacity(shape.width() + rows);
    for i in (1..=rows).rev() {
        let below = lambda.part(i + 1);
        for j in below + 1..=lambda.part(i) {
            let cells = staircase(shape, (i as i64, j as i64), true);
            symbols.push(classify(&cells, true));
            raw.push(cells);
        }
        let cells = staircase(shape, (i as i64, lambda.part(i) as i64), false);
        symbols.push(classify(&cells, false));
        raw.push(cells);
    }
    SnakeSequence { symbols, raw }
}

/// `r` pairs `(u, v)` matching `L` positions to later `R` positions, kept
/// sorted by `u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    pairs: Vec<(usize, usize)>,
}

impl IntervalSet {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        for &(u, v) in &pairs {
            if u >= v {
                return Err(Error::InvalidCode(format!("interval ({u},{v}) is not increasing")));
            }
        }
        let mut ends: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCode("interval endpoints repeat".into()));
        }
        Ok(IntervalSet { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `∏ (v_i - u_i)`.
    pub fn length_product(&self) -> u128 {
        self.pairs.iter().map(|&(u, v)| (v - u) as u128).product()
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(u, v)| format!("({u},{v})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The unique interval set without crossings, by stack matching.
pub fn noncrossing_interval_set(seq: &SnakeSequence) -> Result<IntervalSet> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (idx, s) in seq.symbols.iter().enumerate() {
        match s {
            SnakeSymbol::L(_) => stack.push(idx + 1),
            SnakeSymbol::R(_) => {
                let u = stack
                    .pop()
                    .ok_or_else(|| Error::UnbalancedSnakes(format!("R at {} has no L", idx + 1)))?;
                pairs.push((u, idx + 1));
            }
            SnakeSymbol::O => {}
        }
    }
    if !stack.is_empty() {
        return Err(Error::UnbalancedSnakes(format!("{} unmatched L", stack.len())));
    }
    IntervalSet::new(pairs)
}

/// Lazily yields every interval set of a snake sequence, lexicographic in
/// the vector of chosen `R` indices.
pub struct IntervalSetIter {
    ls: Vec<usize>,
    rs: Vec<usize>,
    choice: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl IntervalSetIter {
    fn new(ls: Vec<usize>, rs: Vec<usize>) -> Self {
        let done = ls.len() != rs.len();
        let used = vec![false; rs.len()];
        IntervalSetIter {
            ls,
            rs,
            choice: Vec::new(),
            used,
            started: false,
            done,
        }
    }

    /// Smallest admissible `R` index `≥ from` for the next level.
    fn next_free(&self, level: usize, from: usize) -> Option<usize> {
        let u = self.ls[level];
        (from..self.rs.len()).find(|&j| !self.used[j] && self.rs[j] > u)
    }

    /// Extends the current partial choice to a full one, backtracking as
    /// needed; `resume` is the index to try next at the current top level.
    fn advance(&mut self, mut resume: Option<usize>) -> bool {
        let r = self.ls.len();
        loop {
            let level = self.choice.len();
            if resume.is_none() && level == r {
                return true;
            }
            let from = resume.take().unwrap_or(0);
            match self.next_free(level, from) {
                Some(j) => {
                    self.used[j] = true;
                    self.choice.push(j);
                }
                None => {
                    let Some(prev) = self.choice.pop() else {
                        return false;
                    };
                    self.used[prev] = false;
                    resume = Some(prev + 1);
                }
            }
        }
    }
}

impl Iterator for IntervalSetIter {
    type Item = IntervalSet;

    fn next(&mut self) -> Option<IntervalSet> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.advance(None)
        } else {
            match self.choice.pop() {
                Some(last) => {
                    self.used[last] = false;
                    self.advance(Some(last + 1))
                }
                None => false,
            }
        };
        if !ok {
            self.done = true;
            return None;
        }
        let pairs = self
            .choice
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.ls[i], self.rs[j]))
            .collect();
        Some(IntervalSet { pairs })
    }
}

pub fn enumerate_interval_sets(seq: &SnakeSequence) -> IntervalSetIter {
    IntervalSetIter::new(seq.left_positions(), seq.right_positions())
}

/// Pairs `i, j` with `u_i < u_j < v_i < v_j`.
pub fn crossings(set: &IntervalSet) -> usize {
    let p = &set.pairs;
    let mut count = 0;
    for a in 0..p.len() {
        for b in 0..p.len() {
            let (ui, vi) = p[a];
            let (uj, vj) = p[b];
            if ui < uj && uj < vi && vi < vj {
                count += 1;
            }
        }
    }
    count
}

/// `σ` (1-indexed) with `v_i = y_{σ_i}` where `I_0 = {(w_j, y_j)}`, and
/// its inversion count.
pub fn interval_permutation(set: &IntervalSet, base: &IntervalSet) -> Result<(Vec<usize>, usize)> {
    let mut us: Vec<usize> = set.pairs.iter().map(|p| p.0).collect();
    let mut ws: Vec<usize> = base.pairs.iter().map(|p| p.0).collect();
    let mut vs: Vec<usize> = set.pairs.iter().map(|p| p.1).collect();
    let mut ys: Vec<usize> = base.pairs.iter().map(|p| p.1).collect();
    us.sort_unstable();
    ws.sort_unstable();
    vs.sort_unstable();
    ys.sort_unstable();
    if us != ws || vs != ys {
        return Err(Error::MismatchedSupport);
    }
    let sigma: Vec<usize> = set
        .pairs
        .iter()
        .map(|&(_, v)| base.pairs.iter().position(|&(_, y)| y == v).unwrap() + 1)
        .collect();
    Ok((sigma.clone(), inversions(&sigma)))
}

pub fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

/// `I_0` of a shape together with the `(w, y)` read off its code, which the
/// snake positions must reproduce.
pub fn shape_interval_data(shape: &SkewShape) -> Result<(SnakeSequence, IntervalSet)> {
    let seq = snake_sequence(shape);
    let base = noncrossing_interval_set(&seq)?;
    debug_assert_eq!(
        (seq.left_positions(), seq.right_positions()),
        reduced_code(shape).column_sets()
    );
    Ok((seq, base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::reduced_code;
    use crate::shape::{enumerate_shapes, enumerate_shapes_in_box};

    fn seq(text: &str) -> SnakeSequence {
        snake_sequence(&text.parse().unwrap())
    }

    fn set(pairs: &[(usize, usize)]) -> IntervalSet {
        IntervalSet::new(pairs.to_vec()).unwrap()
    }

    #[test]
    fn known_sequences() {
        assert_eq!(seq("7,6,6,3/3,1").to_string(), "L0 L1 O O O O L2 R2 R1 O R0");
        assert_eq!(seq("8,8,7,4/4,1,1").to_string(), "L0 O L1 L2 R2 O O L2 R2 O R1 R0");
        assert_eq!(seq("1").to_string(), "L0 R0");
        assert_eq!(seq("3,2/3,2").to_string(), "O O O O O");
    }

    #[test]
    fn snake_cells() {
        let s = seq("7,6,6,3/3,1");
        // third symbol L2 at position 7 is a five cell staircase
        assert_eq!(s.raw()[6].len(), 5);
        assert_eq!(s.raw()[0], vec![Cell::new(4, 1)]);
    }

    #[test]
    fn stack_matching() {
        assert_eq!(
            noncrossing_interval_set(&seq("8,8,7,4/4,1,1")).unwrap(),
            set(&[(1, 12), (3, 11), (4, 5), (8, 9)])
        );
        assert_eq!(
            noncrossing_interval_set(&seq("7,6,6,3/3,1")).unwrap().to_string(),
            "{(1,11),(2,9),(7,8)}"
        );
        assert_eq!(noncrossing_interval_set(&seq("2,2")).unwrap(), set(&[(1, 4), (2, 3)]));
    }

    #[test]
    fn unbalanced_sequences_are_rejected() {
        let bad = SnakeSequence {
            symbols: vec![SnakeSymbol::R(0), SnakeSymbol::L(0)],
            raw: vec![vec![], vec![]],
        };
        assert!(matches!(
            noncrossing_interval_set(&bad),
            Err(Error::UnbalancedSnakes(_))
        ));
        let open = SnakeSequence {
            symbols: vec![SnakeSymbol::L(0)],
            raw: vec![vec![]],
        };
        assert!(noncrossing_interval_set(&open).is_err());
    }

    #[test]
    fn enumeration_small() {
        let all: Vec<_> = enumerate_interval_sets(&seq("2,2")).collect();
        assert_eq!(all, vec![set(&[(1, 3), (2, 4)]), set(&[(1, 4), (2, 3)])]);
        let all: Vec<_> = enumerate_interval_sets(&seq("1")).collect();
        assert_eq!(all, vec![set(&[(1, 2)])]);
        let empty: Vec<_> = enumerate_interval_sets(&snake_sequence(&SkewShape::empty())).collect();
        assert_eq!(empty, vec![set(&[])]);
    }

    #[test]
    fn crossing_and_permutation() {
        let i = set(&[(1, 9), (3, 12), (4, 5), (8, 11)]);
        assert_eq!(crossings(&i), 2);
        let base = noncrossing_interval_set(&seq("8,8,7,4/4,1,1")).unwrap();
        assert_eq!(interval_permutation(&i, &base).unwrap(), (vec![4, 1, 3, 2], 4));
        assert_eq!(interval_permutation(&base, &base).unwrap(), (vec![1, 2, 3, 4], 0));
        assert_eq!(crossings(&set(&[(1, 3), (2, 4)])), 1);
        let sq = noncrossing_interval_set(&seq("2,2")).unwrap();
        assert_eq!(
            interval_permutation(&set(&[(1, 3), (2, 4)]), &sq).unwrap(),
            (vec![2, 1], 1)
        );
        assert_eq!(
            interval_permutation(&set(&[(1, 5)]), &set(&[(1, 2)])),
            Err(Error::MismatchedSupport)
        );
    }

    #[test]
    fn interval_set_validation() {
        assert!(IntervalSet::new(vec![(3, 2)]).is_err());
        assert!(IntervalSet::new(vec![(1, 3), (3, 4)]).is_err());
        assert_eq!(set(&[(4, 5), (1, 9)]).pairs(), &[(1, 9), (4, 5)]);
    }

    /// Independent count of matchings: permanent of the 0/1 admissibility
    /// matrix by inclusion over subsets.
    fn matching_count(ls: &[usize], rs: &[usize]) -> usize {
        let r = ls.len();
        let mut dp = vec![0usize; 1 << r];
        dp[0] = 1;
        for mask in 0..(1usize << r) {
            let level = mask.count_ones() as usize;
            if level == r {
                continue;
            }
            for j in 0..r {
                if mask & (1 << j) == 0 && rs[j] > ls[level] {
                    dp[mask | (1 << j)] += dp[mask];
                }
            }
        }
        dp[(1 << r) - 1]
    }

    #[test]
    fn positions_match_code_and_enumeration_is_complete() {
        for shape in enumerate_shapes(8) {
            let s = snake_sequence(&shape);
            assert_eq!(s.len(), shape.width() + shape.num_rows());
            let (w, y) = reduced_code(&shape).column_sets();
            assert_eq!(s.left_positions(), w, "{shape}");
            assert_eq!(s.right_positions(), y, "{shape}");
            let all: Vec<_> = enumerate_interval_sets(&s).collect();
            assert_eq!(all.len(), matching_count(&w, &y), "{shape}");
            let mut seen = all.clone();
            seen.sort_by(|a, b| a.pairs().cmp(b.pairs()));
            seen.dedup();
            assert_eq!(seen.len(), all.len());
            let base = noncrossing_interval_set(&s).unwrap();
            let zero: Vec<_> = all.iter().filter(|i| crossings(i) == 0).collect();
            assert_eq!(zero, vec![&base]);
        }
    }

    #[test]
    fn parity_on_small_box() {
        for shape in enumerate_shapes_in_box(9, 5, 5) {
            let s = snake_sequence(&shape);
            let base = noncrossing_interval_set(&s).unwrap();
            for i in enumerate_interval_sets(&s) {
                let (_, inv) = interval_permutation(&i, &base).unwrap();
                assert_eq!(crossings(&i) % 2, inv % 2, "{shape} {i}");
            }
        }
    }
}
