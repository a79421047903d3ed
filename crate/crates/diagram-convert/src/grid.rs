//! Grid diagrams and the petal-to-grid conversion route.

use serde::{Deserialize, Serialize};
use std::fmt;

use petal_core::PetalSequence;

use crate::assemble::{Role, Walk};
use crate::{ConvertError, PlanarDiagram};

/// A grid (arc-presentation) diagram: an `n x n` board with one O marker and
/// one X marker in every row and every column.
///
/// Each column's vertical segment joins its two markers, oriented O to X;
/// each row's horizontal segment joins its two markers, oriented X to O.
/// Vertical segments always cross over horizontal segments.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GridJson", into = "GridJson")]
pub struct GridDiagram {
    size: usize,
    /// Row (1-based) of the O marker in each column; index 0 is column 1.
    o_row: Vec<usize>,
    /// Row (1-based) of the X marker in each column; index 0 is column 1.
    x_row: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    size: usize,
    o: Vec<usize>,
    x: Vec<usize>,
}

impl TryFrom<GridJson> for GridDiagram {
    type Error = ConvertError;
    fn try_from(json: GridJson) -> Result<Self, Self::Error> {
        GridDiagram::new(json.size, json.o, json.x)
    }
}

impl From<GridDiagram> for GridJson {
    fn from(g: GridDiagram) -> Self {
        GridJson {
            size: g.size,
            o: g.o_row,
            x: g.x_row,
        }
    }
}

impl GridDiagram {
    /// Builds a grid diagram, checking that `o_row` and `x_row` are
    /// permutations of `1..=size` and disagree in every column.
    pub fn new(
        size: usize,
        o_row: Vec<usize>,
        x_row: Vec<usize>,
    ) -> Result<Self, ConvertError> {
        if size == 0 {
            return Err(ConvertError::MalformedGrid(
                "grid size must be at least 1".into(),
            ));
        }
        for (name, rows) in [("o", &o_row), ("x", &x_row)] {
            if rows.len() != size {
                return Err(ConvertError::MalformedGrid(format!(
                    "{name} array has {} entries for a size-{size} grid",
                    rows.len()
                )));
            }
            let mut seen = vec![false; size];
            for &r in rows {
                if r == 0 || r > size {
                    return Err(ConvertError::MalformedGrid(format!(
                        "{name} row {r} outside 1..={size}"
                    )));
                }
                if seen[r - 1] {
                    return Err(ConvertError::MalformedGrid(format!(
                        "{name} rows are not a permutation: row {r} repeats"
                    )));
                }
                seen[r - 1] = true;
            }
        }
        for c in 0..size {
            if o_row[c] == x_row[c] {
                return Err(ConvertError::MalformedGrid(format!(
                    "column {} has O and X in the same row {}",
                    c + 1,
                    o_row[c]
                )));
            }
        }
        Ok(GridDiagram { size, o_row, x_row })
    }

    /// Side length of the grid.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Row (1-based) of the O marker in each column, indexed by column - 1.
    pub fn o_rows(&self) -> &[usize] {
        &self.o_row
    }

    /// Row (1-based) of the X marker in each column, indexed by column - 1.
    pub fn x_rows(&self) -> &[usize] {
        &self.x_row
    }

    /// Column (1-based) of the O marker in each row, indexed by row - 1.
    pub fn o_cols(&self) -> Vec<usize> {
        invert(&self.o_row)
    }

    /// Column (1-based) of the X marker in each row, indexed by row - 1.
    pub fn x_cols(&self) -> Vec<usize> {
        invert(&self.x_row)
    }
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (idx, &value) in perm.iter().enumerate() {
        inv[value - 1] = idx + 1;
    }
    inv
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grid(size={}, o={:?}, x={:?})", self.size, self.o_row, self.x_row)
    }
}

impl fmt::Debug for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Lays a petal sequence out as a grid diagram of size `p`.
///
/// Traversal step `j` (1-based) occupies angular column
/// `c_j = 1 + ((j-1) * k mod p)` with stride `k = (p+1)/2`; that column
/// carries its O marker at row `a_j` and its X marker at row `a_{j+1}`
/// (cyclically). Rows are the petal levels. For `p <= 3`, where the stride
/// construction degenerates, the result is a crossing-free unknot staircase
/// of size `max(p, 2)`.
pub fn petal_to_grid(s: &PetalSequence) -> GridDiagram {
    let p = s.petals();
    if p <= 3 {
        // Staircase: O on the diagonal, X one row up (cyclically). Every
        // horizontal segment has length one, so nothing interleaves.
        let n = p.max(2);
        let o_row: Vec<usize> = (1..=n).collect();
        let x_row: Vec<usize> = (1..=n).map(|r| r % n + 1).collect();
        return GridDiagram::new(n, o_row, x_row)
            .expect("staircase grid is always well-formed");
    }

    let levels = s.levels();
    let k = (p + 1) / 2;
    let mut o_row = vec![0; p];
    let mut x_row = vec![0; p];
    for j in 0..p {
        let column = (j * k) % p; // zero-based column of step j+1
        o_row[column] = levels[j] as usize;
        x_row[column] = levels[(j + 1) % p] as usize;
    }
    GridDiagram::new(p, o_row, x_row)
        .expect("stride construction yields a well-formed grid")
}

/// Reads a planar diagram off a grid diagram.
///
/// Horizontal and vertical segments are drawn straight between their
/// markers; a crossing occurs wherever a vertical strictly spans a
/// horizontal's row and the horizontal strictly spans the vertical's column.
/// The vertical is the over-strand at every crossing. Arcs are labeled by
/// traversing the knot (O to X along verticals, X to O along horizontals)
/// starting at the vertical of the column whose O marker sits in row 1.
///
/// Fails with [`ConvertError::MalformedGrid`] if the segments trace more
/// than one closed component.
pub fn grid_to_pd(g: &GridDiagram) -> Result<PlanarDiagram, ConvertError> {
    let n = g.size();
    let o_col = g.o_cols();
    let x_col = g.x_cols();
    let o_row = g.o_rows();
    let x_row = g.x_rows();

    // Crossing ids in a dense column-major table; usize::MAX marks "none".
    let mut crossing_at = vec![usize::MAX; n * n];
    let mut crossing_count = 0usize;
    for c in 1..=n {
        let (vlo, vhi) = ordered(o_row[c - 1], x_row[c - 1]);
        for r in vlo + 1..vhi {
            let (hlo, hhi) = ordered(o_col[r - 1], x_col[r - 1]);
            if hlo < c && c < hhi {
                crossing_at[(c - 1) * n + (r - 1)] = crossing_count;
                crossing_count += 1;
            }
        }
    }

    let start_col = o_row
        .iter()
        .position(|&r| r == 1)
        .expect("o rows form a permutation")
        + 1;
    let mut passages = Vec::with_capacity(2 * crossing_count);
    let mut over_in_ccw = vec![false; crossing_count];
    let mut column = start_col;
    let mut verticals_walked = 0usize;
    loop {
        // Vertical segment of `column`, walked O to X: every crossing on it
        // is an over-passage.
        let (from_row, to_row) = (o_row[column - 1], x_row[column - 1]);
        for r in steps_between(from_row, to_row) {
            let id = crossing_at[(column - 1) * n + (r - 1)];
            if id != usize::MAX {
                passages.push((id, Role::Over));
            }
        }
        verticals_walked += 1;

        // Horizontal segment of the row we landed in, walked X to O.
        let row = to_row;
        let (from_col, to_col) = (x_col[row - 1], o_col[row - 1]);
        debug_assert_eq!(from_col, column);
        let dx: i64 = if to_col > from_col { 1 } else { -1 };
        for c in steps_between(from_col, to_col) {
            let id = crossing_at[(c - 1) * n + (row - 1)];
            if id != usize::MAX {
                passages.push((id, Role::Under));
                // Under-strand direction (dx, 0), over-strand direction
                // (0, dy) with rows growing upward: cross(u, v) = dx * dy.
                let dy: i64 =
                    if x_row[c - 1] > o_row[c - 1] { 1 } else { -1 };
                over_in_ccw[id] = dx * dy > 0;
            }
        }
        column = to_col;

        if column == start_col {
            break;
        }
        if verticals_walked > n {
            unreachable!("grid walk failed to close");
        }
    }

    if verticals_walked != n {
        return Err(ConvertError::MalformedGrid(format!(
            "grid traces more than one component ({verticals_walked} of {n} \
             columns reached from the starting column)"
        )));
    }

    Walk {
        crossing_count,
        passages,
        over_in_ccw,
    }
    .assemble()
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The interior lattice points strictly between `from` and `to`, in walk
/// order.
fn steps_between(from: usize, to: usize) -> Box<dyn Iterator<Item = usize>> {
    if from < to {
        Box::new(from + 1..to)
    } else {
        Box::new((to + 1..from).rev())
    }
}
