use std::collections::{BTreeMap, HashMap};

use super::{Dim, MAX_DIM};

type Coord = [u32; MAX_DIM as usize];

enum Step {
    Grow,
    Open { previous: Coord },
}

/// Streaming decoder that grows a partition one letter at a time.
///
/// Cells are created in reverse-lexicographic coordinate order, so every
/// cell above the cursor in the product order is created later. Checking the
/// immediate predecessors of the touched cell is therefore enough to keep the
/// array a partition after every step.
pub(crate) struct CellBuilder {
    dim: usize,
    cells: HashMap<Coord, u32>,
    cursor: Coord,
    history: Vec<Step>,
}

impl CellBuilder {
    pub(crate) fn new(dim: Dim) -> Self {
        let dim = dim.get() as usize;
        let mut origin = [0; MAX_DIM as usize];
        origin[..dim].fill(1);
        let mut cells = HashMap::new();
        cells.insert(origin, 1);
        CellBuilder {
            dim,
            cells,
            cursor: origin,
            history: Vec::new(),
        }
    }

    /// Appends a letter; returns `false` (leaving the state untouched) when
    /// the extended word is not a partition word.
    pub(crate) fn push(&mut self, letter: u8) -> bool {
        let letter = letter as usize;
        if letter == self.dim {
            let value = self.cells[&self.cursor] + 1;
            if !self.supported(&self.cursor, value) {
                return false;
            }
            self.cells.insert(self.cursor, value);
            self.history.push(Step::Grow);
        } else {
            let axis = self.dim - 1 - letter;
            let mut next = self.cursor;
            next[axis] += 1;
            next[..axis].fill(1);
            if !self.supported(&next, 1) {
                return false;
            }
            self.cells.insert(next, 1);
            self.history.push(Step::Open { previous: self.cursor });
            self.cursor = next;
        }
        true
    }

    pub(crate) fn pop(&mut self) {
        match self.history.pop() {
            Some(Step::Grow) => {
                *self.cells.get_mut(&self.cursor).expect("cursor cell") -= 1;
            }
            Some(Step::Open { previous }) => {
                self.cells.remove(&self.cursor);
                self.cursor = previous;
            }
            None => panic!("pop on an empty builder"),
        }
    }

    fn supported(&self, cell: &Coord, value: u32) -> bool {
        (0..self.dim).all(|axis| {
            if cell[axis] <= 1 {
                return true;
            }
            let mut below = *cell;
            below[axis] -= 1;
            self.cells.get(&below).is_some_and(|&v| v >= value)
        })
    }

    pub(crate) fn into_parts(self) -> BTreeMap<Vec<u32>, u32> {
        let dim = self.dim;
        self.cells
            .into_iter()
            .map(|(coord, v)| (coord[..dim].to_vec(), v))
            .collect()
    }
}
