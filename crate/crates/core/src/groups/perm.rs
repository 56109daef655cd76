//! Permutations of `{0, .., n-1}`, with 1-indexed text forms.

use std::fmt;

use num_integer::Integer;

use super::GroupError;

/// A permutation stored by images: `self.images()[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotBijection);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the permutation of `0..n` from 0-indexed cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a >= n {
                    return Err(GroupError::PermParse(format!("point {} exceeds degree {}", a + 1, n)));
                }
                if touched[a] {
                    return Err(GroupError::PermParse(format!("point {} repeated", a + 1)));
                }
                touched[a] = true;
                images[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The full cycle `(1, 2, ..., n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n.max(1)).collect() }
    }

    /// Parses cycle notation such as `(1,2,3)(4)` or `()`, or one-line image
    /// notation such as `[2,3,1]` / `2 3 1`. Points are 1-indexed. For cycle
    /// notation the degree is `degree`, or the largest point if `None`.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Self, GroupError> {
        let s = s.trim();
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            let mut rest = s;
            while !rest.is_empty() {
                let close = rest
                    .find(')')
                    .ok_or_else(|| GroupError::PermParse(format!("unclosed cycle in {s:?}")))?;
                if !rest.starts_with('(') {
                    return Err(GroupError::PermParse(format!("expected '(' in {s:?}")));
                }
                let body = &rest[1..close];
                let cyc = parse_points(body)?;
                cycles.push(cyc);
                rest = rest[close + 1..].trim_start();
            }
            let max = cycles.iter().flatten().map(|&a| a + 1).max().unwrap_or(0);
            let n = degree.unwrap_or(max);
            if max > n {
                return Err(GroupError::PermParse(format!("point {max} exceeds degree {n}")));
            }
            Permutation::from_cycles(n, &cycles)
        } else {
            let body = s.trim_start_matches('[').trim_end_matches(']');
            let images = parse_points(body)?;
            if let Some(d) = degree {
                if d != images.len() {
                    return Err(GroupError::PermParse(format!(
                        "one-line permutation has {} entries, expected {d}",
                        images.len()
                    )));
                }
            }
            Permutation::from_images(images).map_err(|_| {
                GroupError::PermParse(format!("{s:?} is not a permutation in one-line notation"))
            })
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` after `other`: `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles (0-indexed), including fixed points, each starting at
    /// its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.images[j];
            }
            out.push(cyc);
        }
        out
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }
}

fn parse_points(body: &str) -> Result<Vec<usize>, GroupError> {
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let k: usize = t
                .parse()
                .map_err(|_| GroupError::PermParse(format!("bad point {t:?}")))?;
            if k == 0 {
                return Err(GroupError::PermParse("points are 1-indexed".into()));
            }
            Ok(k - 1)
        })
        .collect()
}

/// Cycle notation, omitting fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            any = true;
            let pts: Vec<String> = c.iter().map(|a| (a + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_one_line_notation_agree() {
        let a = Permutation::parse("(1,2,3)(4)", None).unwrap();
        let b = Permutation::parse("[2,3,1,4]", None).unwrap();
        let c = Permutation::parse("2 3 1 4", Some(4)).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_string(), "(1,2,3)");
        assert_eq!(Permutation::parse("(1,2,3)", Some(5)).unwrap().degree(), 5);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Permutation::parse("(1,2", None).is_err());
        assert!(Permutation::parse("(1,2)(2,3)", None).is_err());
        assert!(Permutation::parse("(0,1)", None).is_err());
        assert!(Permutation::parse("[1,1,2]", None).is_err());
        assert!(Permutation::parse("(1,5)", Some(3)).is_err());
        assert!(Permutation::parse("[2,1]", Some(3)).is_err());
    }

    #[test]
    fn order_and_cycle_type() {
        let p = Permutation::parse("(1,2)(3,4,5)", None).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(5));
        assert_eq!(Permutation::parse("()", Some(3)).unwrap(), Permutation::identity(3));
    }
}
