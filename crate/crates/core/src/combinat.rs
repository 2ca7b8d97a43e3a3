//! Small combinatorial helpers shared by the localization sums.

use itertools::Itertools;

/// `true` when the permutation (given as images `perm[i]`) is odd.
pub fn is_odd(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// The order-preserving shuffle sending `0..k` onto the complement of `subset`
/// and `k..n` onto `subset` (which must be sorted).
pub fn shuffle(n: usize, subset: &[usize]) -> Vec<usize> {
    let complement: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
    complement.into_iter().chain(subset.iter().copied()).collect()
}

/// All `r`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(r).collect()
}

/// All perfect matchings of `0..k` (k even), each as a list of pairs `(i, j)`
/// with `i < j`, blocks sorted by their first element.
pub fn perfect_matchings(k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &[usize], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(cur.clone());
            return;
        };
        for (idx, &partner) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, &v)| v)
                .collect();
            cur.push((first, partner));
            go(&remaining, cur, out);
            cur.pop();
        }
    }
    assert!(k.is_multiple_of(2), "perfect matchings need an even number of points");
    let mut out = Vec::new();
    go(&(0..k).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffles() {
        assert_eq!(shuffle(4, &[1, 3]), vec![0, 2, 1, 3]);
        assert!(is_odd(&shuffle(4, &[1, 3])));
        assert!(!is_odd(&shuffle(4, &[2, 3])));
    }

    #[test]
    fn matching_counts() {
        assert_eq!(perfect_matchings(0).len(), 1);
        assert_eq!(perfect_matchings(2).len(), 1);
        assert_eq!(perfect_matchings(4).len(), 3);
        assert_eq!(perfect_matchings(6).len(), 15);
    }
}
