use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// Ordered by size first, then lexicographically by parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Partition {
        Partition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// Compact label: `21` for (2,1), `0` for the empty partition,
    /// comma separated when some part exceeds 9.
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "0".to_string();
        }
        if self.0.iter().any(|&p| p > 9) {
            self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        } else {
            self.0.iter().map(u32::to_string).collect()
        }
    }

    /// Partitions of `d` with at most `max_len` parts, each at most `max_part`.
    pub fn all_of(d: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(d, max_len, max_part.min(d), &mut cur, &mut out);
        out
    }

    /// Display order: size ascending, then reverse lexicographic (`s2` before `s11`).
    pub fn display_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

fn fill(rest: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, max_len, p, cur, out);
        cur.pop();
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Partition {
        Partition::new(parts.to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Partition::new(vec![1, 0, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::from([2, 1]).conjugate(), Partition::from([2, 1]));
        assert_eq!(Partition::from([3, 1]).conjugate(), Partition::from([2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Partition::all_of(4, 10, 10).len(), 5);
        assert_eq!(Partition::all_of(4, 2, 10).len(), 3);
        assert_eq!(Partition::all_of(0, 0, 0), vec![Partition::empty()]);
        assert_eq!(Partition::all_of(6, 3, 3).len(), 3);
    }

    #[test]
    fn labels() {
        assert_eq!(Partition::from([2, 1, 1]).label(), "211");
        assert_eq!(Partition::empty().label(), "0");
        assert_eq!(Partition::from([10, 2]).label(), "10,2");
    }
}
