//! Robinson-Schensted-Knuth row insertion for words.

use super::tableau::Tableau;

/// Inserts `x` into `p` by row bumping; returns the row where the final
/// entry landed.
fn row_insert(p: &mut Tableau, mut x: u32) -> usize {
    let rows = p.rows_mut();
    for (i, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(j) => x = std::mem::replace(&mut row[j], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// RSK for a word: `P` is column-strict with the word's content, `Q` is
/// standard of the same shape and records where each step ended.
pub fn rsk(word: &[u32]) -> (Tableau, Tableau) {
    let mut p = Tableau::new(Vec::new());
    let mut q = Tableau::new(Vec::new());
    for (step, &x) in word.iter().enumerate() {
        let row = row_insert(&mut p, x);
        let qrows = q.rows_mut();
        if row == qrows.len() {
            qrows.push(Vec::new());
        }
        qrows[row].push(step as u32 + 1);
    }
    (p, q)
}
