//! Small helpers shared by the exhaustive oracles.

/// Advance `items` to the next lexicographic permutation in place.
///
/// Returns `false` once the sequence has wrapped around to sorted order,
/// which makes it convenient as a `while` condition when enumerating all
/// permutations of an index vector.
pub(crate) fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::next_permutation;

    #[test]
    fn visits_every_permutation_once() {
        let mut v = vec![0u8, 1, 2, 3];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 24);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 24);
        // Wrapped back to the identity.
        assert_eq!(v, vec![0, 1, 2, 3]);
    }

    #[test]
    fn handles_duplicates() {
        let mut v = vec![1u8, 1, 2];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn short_slices_have_no_successor() {
        let mut empty: [u8; 0] = [];
        assert!(!next_permutation(&mut empty));
        let mut one = [7u8];
        assert!(!next_permutation(&mut one));
    }
}
