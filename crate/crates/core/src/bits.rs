//! Small helpers for `u32` bitmasks over carriers of at most 32 elements.

/// Iterator over the indices of set bits, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(u32);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

pub fn bits(mask: u32) -> Bits {
    Bits(mask)
}

#[inline]
pub fn bit(i: usize) -> u32 {
    1u32 << i
}

#[inline]
pub fn has(mask: u32, i: usize) -> bool {
    mask & (1u32 << i) != 0
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}
