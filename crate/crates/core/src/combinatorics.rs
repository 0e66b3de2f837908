//! Index-subset enumeration in lexicographic order.

/// All k-element subsets of {0, …, n−1}, lexicographically.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    'outer: loop {
        out.push(idx.clone());
        for i in (0..k).rev() {
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                continue 'outer;
            }
        }
        return out;
    }
}

/// All nonempty subsets of {0, …, n−1} as bitmasks, in increasing order.
pub fn nonempty_masks(n: usize) -> impl Iterator<Item = u32> {
    1..(1u32 << n)
}

pub fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_enumerate_all_subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(4, 2)[5], vec![2, 3]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(6, 3).len(), 20);
    }

    #[test]
    fn masks() {
        assert_eq!(nonempty_masks(3).count(), 7);
        assert_eq!(mask_members(0b101), vec![0, 2]);
    }
}
