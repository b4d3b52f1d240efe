//! Helpers on sorted, duplicate-free vertex vectors.

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

pub fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

pub fn contains(a: &[usize], x: usize) -> bool {
    a.binary_search(&x).is_ok()
}

pub fn insert(a: &mut Vec<usize>, x: usize) {
    if let Err(pos) = a.binary_search(&x) {
        a.insert(pos, x);
    }
}

pub fn remove(a: &mut Vec<usize>, x: usize) {
    if let Ok(pos) = a.binary_search(&x) {
        a.remove(pos);
    }
}

pub fn sorted(mut a: Vec<usize>) -> Vec<usize> {
    a.sort_unstable();
    a.dedup();
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        assert!(is_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_subset(&[], &[]));
        assert_eq!(intersection(&[0, 2, 4], &[2, 3, 4]), vec![2, 4]);
        assert_eq!(union(&[0, 2], &[1, 2]), vec![0, 1, 2]);
        assert_eq!(difference(&[0, 1, 2], &[1]), vec![0, 2]);
        let mut s = vec![1, 3];
        insert(&mut s, 2);
        insert(&mut s, 3);
        remove(&mut s, 1);
        assert_eq!(s, vec![2, 3]);
    }
}
