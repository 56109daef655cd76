use std::fmt;

use super::partition::Partition;

/// A Young tableau in English notation: `rows[i][j]` is the entry in row
/// `i`, column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("tableau rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    fn is_shape(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_column_strict(&self) -> bool {
        self.is_shape()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    /// Entries `1..=k` each once, rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        self.is_column_strict()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && all.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Row index holding `v`, if present.
    pub fn row_of(&self, v: u32) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&v))
    }

    /// For a standard tableau: sum of the entries `i` such that `i + 1` sits
    /// in a strictly lower row.
    pub fn maj(&self) -> usize {
        let k = self.size() as u32;
        (1..k)
            .filter(|&i| self.row_of(i + 1) > self.row_of(i))
            .map(|i| i as usize)
            .sum()
    }

    /// Sum of `entry - 1` over all cells: the exponent of `u` under the
    /// principal specialization of `x^P`.
    pub fn weight(&self) -> usize {
        self.rows.iter().flatten().map(|&v| v as usize - 1).sum()
    }

    /// Multiplicity of each value `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &v in self.rows.iter().flatten() {
            c[v as usize - 1] += 1;
        }
        c
    }
}

/// Row per line, entries separated by spaces.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// All column-strict tableaux of shape `shape` with entries in `1..=n`.
pub fn column_strict_tableaux(shape: &Partition, n: u32) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fn fill(k: usize, cells: &[(usize, usize)], rows: &mut Vec<Vec<u32>>, n: u32, out: &mut Vec<Tableau>) {
        if k == cells.len() {
            out.push(Tableau::new(rows.clone()));
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { rows[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            rows[i][j] = v;
            fill(k + 1, cells, rows, n, out);
        }
        rows[i][j] = 0;
    }
    fill(0, &cells, &mut rows, n, &mut out);
    out
}

/// All standard Young tableaux of shape `shape`.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let k = shape.size() as u32;
    let target = shape.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    fn place(v: u32, k: u32, target: &[usize], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if v > k {
            out.push(Tableau::new(rows.clone()));
            return;
        }
        for i in 0..target.len() {
            let len = rows[i].len();
            if len < target[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(v);
                place(v + 1, k, target, rows, out);
                rows[i].pop();
            }
        }
    }
    place(1, k, &target, &mut rows, &mut out);
    out
}
