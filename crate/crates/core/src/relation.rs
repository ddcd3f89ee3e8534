//! Dense boolean matrices, stored one `u32` row mask per row.

use crate::bits::{bits, full, has};

/// A relation between a carrier of `rows` elements and one of `cols` elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl BitMatrix {
    pub fn empty(rows: usize, cols: usize) -> Self {
        assert!(cols <= 32, "at most 32 columns are supported");
        BitMatrix {
            rows,
            cols,
            data: vec![0; rows],
        }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        let mut m = Self::empty(rows, cols);
        for r in m.data.iter_mut() {
            *r = full(cols);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::empty(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.data[i] |= 1 << j;
                }
            }
        }
        m
    }

    pub fn from_rows(cols: usize, data: Vec<u32>) -> Self {
        assert!(cols <= 32);
        assert!(data.iter().all(|r| r & !full(cols) == 0), "row mask exceeds column count");
        BitMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        has(self.data[i], j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> u32 {
        self.data[i]
    }

    pub fn row_masks(&self) -> &[u32] {
        &self.data
    }

    /// Mask of the rows related to column `j`.
    pub fn column(&self, j: usize) -> u32 {
        let mut c = 0;
        for (i, r) in self.data.iter().enumerate() {
            if has(*r, j) {
                c |= 1 << i;
            }
        }
        c
    }

    /// Union of the rows selected by `mask`: the image of a set.
    pub fn image(&self, mask: u32) -> u32 {
        bits(mask).fold(0, |acc, i| acc | self.data[i])
    }

    /// Relational composite `self ; other`: `i` is related to `k` when some
    /// `j` has `self(i, j)` and `other(j, k)`.
    pub fn compose(&self, other: &BitMatrix) -> Option<BitMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let data = self.data.iter().map(|&r| other.image(r)).collect();
        Some(BitMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn is_subset_of(&self, other: &BitMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.data.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| bits(r).map(move |j| (i, j)))
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            let line: String = (0..self.cols)
                .map(|j| if has(*r, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
