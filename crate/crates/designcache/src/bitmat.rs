//! Dense bit-packed 0/1 matrix.
//!
//! Row-major, 64 bits per word. The matrices here are at most a few thousand
//! in each dimension, so a dense layout is both smaller and faster than any
//! sparse representation.

/// A dense binary matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            words: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let word = self.words[r * self.words_per_row + c / 64];
        (word >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.words[r * self.words_per_row + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    pub fn row_weight(&self, r: usize) -> usize {
        let start = r * self.words_per_row;
        self.words[start..start + self.words_per_row]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }

    /// Total number of 1-entries.
    pub fn ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Column indices of the 1-entries in row `r`, ascending.
    pub fn row_support(&self, r: usize) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.get(r, c)).collect()
    }

    /// Row indices of the 1-entries in column `c`, ascending.
    pub fn col_support(&self, c: usize) -> Vec<usize> {
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    /// Row `r` as an ASCII '0'/'1' string of length `cols`.
    pub fn row_bit_string(&self, r: usize) -> String {
        (0..self.cols)
            .map(|c| if self.get(r, c) { '1' } else { '0' })
            .collect()
    }

    /// Parse rows of '0'/'1' strings, all of length `cols`.
    pub fn from_bit_strings(rows: &[String], cols: usize) -> Option<Self> {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, s) in rows.iter().enumerate() {
            if s.len() != cols {
                return None;
            }
            for (c, ch) in s.bytes().enumerate() {
                match ch {
                    b'0' => {}
                    b'1' => m.set(r, c, true),
                    _ => return None,
                }
            }
        }
        Some(m)
    }
}
