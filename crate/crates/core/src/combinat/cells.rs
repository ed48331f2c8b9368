//! Boxes of a Young diagram and the diagonal relations between them.

/// A box at `(row, col)`, both 1-based; row 0 is allowed in strip analysis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Shares at least one vertex with `other`.
    pub fn touches(&self, other: &Cell) -> bool {
        self.row.abs_diff(other.row) <= 1 && self.col.abs_diff(other.col) <= 1
    }
}

/// Which diagonal relation to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Flavor {
    /// `|c − k − 1| + r`
    K,
    /// `|c − k − 1/2| + r`, compared on doubled integers.
    KPrime,
}

/// The quantity compared by the relation (doubled for `KPrime`).
pub fn relation_value(b: Cell, k: usize, flavor: Flavor) -> i64 {
    let (r, c, k) = (b.row as i64, b.col as i64, k as i64);
    match flavor {
        Flavor::K => (c - k - 1).abs() + r,
        Flavor::KPrime => (2 * c - 2 * k - 1).abs() + 2 * r,
    }
}

pub fn box_related(b1: Cell, b2: Cell, k: usize, flavor: Flavor) -> bool {
    relation_value(b1, k, flavor) == relation_value(b2, k, flavor)
}

/// Number of connected components under vertex adjacency.
pub fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut seen = vec![false; cells.len()];
    let mut out = Vec::new();
    for start in 0..cells.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![cells[start]];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..cells.len() {
                if !seen[j] && cells[i].touches(&cells[j]) {
                    seen[j] = true;
                    comp.push(cells[j]);
                    stack.push(j);
                }
            }
        }
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        for k in 0..4 {
            assert!(box_related(Cell::new(3, k + 1), Cell::new(3, k + 1), k, Flavor::K));
        }
        for k in 1..4 {
            assert!(box_related(Cell::new(1, k), Cell::new(2, k + 1), k, Flavor::K));
            assert!(box_related(Cell::new(1, k), Cell::new(1, k + 1), k, Flavor::KPrime));
            assert!(!box_related(Cell::new(1, k), Cell::new(1, k + 1), k, Flavor::K));
        }
    }

    #[test]
    fn diagonal_adjacency() {
        let cs = [Cell::new(1, 3), Cell::new(2, 2), Cell::new(1, 5)];
        assert_eq!(components(&cs).len(), 2);
    }
}
