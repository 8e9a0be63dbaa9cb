//! Minimal fixed-width bit rows used for adjacency storage.

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// True when the two rows share a set bit.
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Iterate set bit positions in ascending order.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_test_ones() {
        let mut row = vec![0u64; words_for(130)];
        for i in [0, 63, 64, 127, 129] {
            set(&mut row, i);
        }
        assert!(test(&row, 64));
        assert!(!test(&row, 65));
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![0, 63, 64, 127, 129]);
        assert_eq!(count(&row), 5);
        clear(&mut row, 64);
        assert!(!test(&row, 64));
    }

    #[test]
    fn intersection() {
        let mut a = vec![0u64; 2];
        let mut b = vec![0u64; 2];
        set(&mut a, 70);
        set(&mut b, 71);
        assert!(!intersects(&a, &b));
        set(&mut b, 70);
        assert!(intersects(&a, &b));
    }
}
