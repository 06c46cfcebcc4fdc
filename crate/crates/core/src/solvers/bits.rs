//! Fixed-width vertex bitsets for the search kernels.

/// A set of vertex ids below `64 * W`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Bits<W> {
    pub const EMPTY: Self = Self([0; W]);

    pub fn full(n: usize) -> Self {
        let mut b = Self::EMPTY;
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    pub fn from_iter(vs: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::EMPTY;
        for v in vs {
            b.insert(v);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v >> 6] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v >> 6] &= !(1 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn and(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..W {
            r.0[i] &= o.0[i];
        }
        r
    }

    #[inline]
    pub fn or(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..W {
            r.0[i] |= o.0[i];
        }
        r
    }

    #[inline]
    pub fn minus(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..W {
            r.0[i] &= !o.0[i];
        }
        r
    }

    #[inline]
    pub fn intersects(&self, o: &Self) -> bool {
        (0..W).any(|i| self.0[i] & o.0[i] != 0)
    }

    /// Removes and returns the smallest element.
    #[inline]
    pub fn pop_first(&mut self) -> Option<usize> {
        for i in 0..W {
            let w = self.0[i];
            if w != 0 {
                self.0[i] = w & (w - 1);
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut b = *self;
        std::iter::from_fn(move || b.pop_first())
    }
}

/// Bitset adjacency of a graph with at most `64 * W` vertices.
pub(crate) fn adjacency<const W: usize>(g: &crate::graph::Graph) -> Vec<Bits<W>> {
    (0..g.n())
        .map(|v| Bits::from_iter(g.neighbors(v).iter().copied()))
        .collect()
}

/// Largest vertex count the bitset kernels accept.
pub const MAX_SEARCH_VERTICES: usize = 512;

/// Calls `$f::<W>($args)` with the smallest supported width covering `$n`
/// vertices. `$n` must not exceed [`MAX_SEARCH_VERTICES`].
macro_rules! with_width {
    ($n:expr, $f:ident ( $($arg:expr),* $(,)? )) => {{
        let n = $n;
        if n <= 64 {
            $f::<1>($($arg),*)
        } else if n <= 128 {
            $f::<2>($($arg),*)
        } else if n <= 256 {
            $f::<4>($($arg),*)
        } else {
            debug_assert!(n <= $crate::solvers::bits::MAX_SEARCH_VERTICES);
            $f::<8>($($arg),*)
        }
    }};
}
pub(crate) use with_width;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let mut a: Bits<2> = Bits::from_iter([0, 5, 64, 127]);
        assert_eq!(a.len(), 4);
        assert!(a.contains(64) && !a.contains(63));
        let b = Bits::from_iter([5, 127, 100]);
        assert_eq!(a.and(&b).iter().collect::<Vec<_>>(), vec![5, 127]);
        assert_eq!(a.minus(&b).iter().collect::<Vec<_>>(), vec![0, 64]);
        assert_eq!(a.or(&b).len(), 5);
        a.remove(0);
        assert_eq!(a.pop_first(), Some(5));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![64, 127]);
        assert!(Bits::<1>::EMPTY.is_empty());
        assert_eq!(Bits::<1>::full(64).len(), 64);
    }
}
