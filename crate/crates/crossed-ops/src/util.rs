//! Small combinatorial helpers shared by the verification loops.

/// All tuples picking one element from each list, cloning entries.
///
/// Unlike `itertools::multi_cartesian_product`, an empty family yields the
/// single empty tuple, matching the nullary case of operad compositions.
pub fn product_lists<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for partial in &out {
            for item in list {
                let mut tuple = partial.clone();
                tuple.push(item.clone());
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

/// Calls `f` on every mixed-radix index tuple with the given sizes, without
/// materializing the product. An empty `sizes` yields one empty tuple; a zero
/// size yields nothing.
pub fn for_each_index_tuple(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    if sizes.iter().any(|&s| s == 0) {
        return;
    }
    let mut tuple = vec![0usize; sizes.len()];
    loop {
        f(&tuple);
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < sizes[pos] {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// All weak compositions: tuples of `parts` non-negative integers, each at
/// most `max`, in lexicographic order.
pub fn bounded_tuples(parts: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..parts {
        let mut next = Vec::new();
        for partial in &out {
            for v in 0..=max {
                let mut tuple = partial.clone();
                tuple.push(v);
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_nothing_is_one_empty_tuple() {
        let lists: Vec<Vec<u8>> = vec![];
        assert_eq!(product_lists(&lists), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn product_sizes() {
        let lists = vec![vec![1, 2], vec![3], vec![4, 5, 6]];
        assert_eq!(product_lists(&lists).len(), 6);
    }

    #[test]
    fn index_tuples_match_product() {
        let mut seen = Vec::new();
        for_each_index_tuple(&[2, 3], |t| seen.push(t.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[5], vec![1, 2]);
        let mut none = Vec::new();
        for_each_index_tuple(&[2, 0], |t| none.push(t.to_vec()));
        assert!(none.is_empty());
        let mut one = Vec::new();
        for_each_index_tuple(&[], |t| one.push(t.to_vec()));
        assert_eq!(one, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn bounded_tuples_count() {
        assert_eq!(bounded_tuples(3, 3).len(), 64);
        assert_eq!(bounded_tuples(0, 5), vec![Vec::<usize>::new()]);
    }
}
