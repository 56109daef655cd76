use std::fmt;
use std::str::FromStr;

use super::SymError;

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, col)`, both 0-indexed.
pub type Cell = (usize, usize);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::BadPartition(parts));
        }
        let p = Partition { parts };
        debug_assert!(p.identities_hold());
        Ok(p)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
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

    /// `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// Cells in row-reading order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
            .collect()
    }

    pub fn hook(&self, (i, j): Cell) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    pub fn content((i, j): Cell) -> i64 {
        j as i64 - i as i64
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.cells().into_iter().map(|c| self.hook(c)).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cells().into_iter().map(Self::content).collect()
    }

    /// `b(lambda) = sum_i (i - 1) lambda_i`.
    pub fn b(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// `b(lambda)` computed from the conjugate: `sum_j binom(lambda'_j, 2)`.
    pub fn b_from_conjugate(&self) -> usize {
        self.conjugate().parts.iter().map(|&c| c * c.saturating_sub(1) / 2).sum()
    }

    /// The partition facts that the reciprocity identity relies on.
    pub fn identities_hold(&self) -> bool {
        let conj = self.conjugate();
        let mut h1 = self.hooks();
        let mut h2 = conj.hooks();
        h1.sort_unstable();
        h2.sort_unstable();
        let content_sum: i64 = self.contents().iter().sum();
        let hook_sum: usize = self.hooks().iter().sum();
        let cells_match = self
            .cells()
            .into_iter()
            .all(|(i, j)| Self::content((i, j)) == -Self::content((j, i)) && self.hook((i, j)) == conj.hook((j, i)));
        self.b() == self.b_from_conjugate()
            && h1 == h2
            && cells_match
            && conj.b() as i64 - self.b() as i64 == content_sum
            && conj.b() + self.b() + self.size() == hook_sum
    }
}

/// All partitions of `n`, in decreasing lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Comma-separated parts, e.g. `3,1,1`; the empty partition is the empty
/// string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| SymError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let p4: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn hooks_and_contents() {
        let p: Partition = "3,1".parse().unwrap();
        assert_eq!(p.hooks(), vec![4, 2, 1, 1]);
        assert_eq!(p.contents(), vec![0, 1, 2, -1]);
        assert_eq!(p.b(), 1);
        assert_eq!(p.conjugate().to_string(), "2,1,1");
    }

    #[test]
    fn identities_for_all_small_partitions() {
        for n in 0..=10 {
            for p in partitions_of(n) {
                assert!(p.identities_hold(), "{p}");
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }
}
