//! Dense bit matrices over F₂.

/// Rows of packed bits over a fixed number of columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    words_per_row: usize,
    rows: Vec<Vec<u64>>,
}

impl Gf2Matrix {
    pub fn new(cols: usize) -> Self {
        Gf2Matrix {
            cols,
            words_per_row: cols.div_ceil(64),
            rows: Vec::new(),
        }
    }

    /// Builds a matrix from rows of 0/1 flags.
    pub fn from_bits<R: AsRef<[bool]>>(cols: usize, rows: impl IntoIterator<Item = R>) -> Self {
        let mut m = Self::new(cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length");
            m.push_row(r.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i));
        }
        m
    }

    /// Appends a row with ones in the given columns. Repeated columns cancel.
    pub fn push_row(&mut self, ones: impl IntoIterator<Item = usize>) {
        let mut row = vec![0u64; self.words_per_row];
        for c in ones {
            assert!(c < self.cols, "column {c} out of range");
            row[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r][c / 64] >> (c % 64) & 1 == 1
    }

    /// Rank by Gaussian elimination on a private copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, bit) = (col / 64, 1u64 << (col % 64));
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for r in rank + 1..rows.len() {
                if rows[r][w] & bit != 0 {
                    for (dst, src) in rows[r][w..].iter_mut().zip(&pivot_row[w..]) {
                        *dst ^= src;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Dimension of the left kernel, `nrows - rank`.
    pub fn row_nullity(&self) -> usize {
        self.nrows() - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        let id = Gf2Matrix::from_bits(3, [[true, false, false], [false, true, false], [false, false, true]]);
        assert_eq!(id.rank(), 3);
        let twins = Gf2Matrix::from_bits(2, [[true, true], [true, true]]);
        assert_eq!(twins.rank(), 1);
        let dep = Gf2Matrix::from_bits(3, [[true, true, false], [false, true, true], [true, false, true]]);
        assert_eq!(dep.rank(), 2);
        assert_eq!(dep.row_nullity(), 1);
        assert_eq!(Gf2Matrix::new(5).rank(), 0);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = Gf2Matrix::new(200);
        m.push_row([0, 63, 64, 199]);
        m.push_row([63, 64]);
        m.push_row([0, 199]);
        assert_eq!(m.rank(), 2);
        assert!(m.get(0, 199));
        assert!(!m.get(1, 199));
    }

    /// Rank by exhaustive search: the largest k such that some k rows are
    /// independent, i.e. no nonempty subset of them sums to zero.
    fn brute_rank(rows: &[Vec<bool>]) -> usize {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let independent = |mask: u32| {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            (1u32..1 << idx.len()).all(|sub| {
                (0..cols).any(|c| {
                    idx.iter()
                        .enumerate()
                        .filter(|(j, _)| sub >> j & 1 == 1)
                        .fold(false, |acc, (_, &i)| acc ^ rows[i][c])
                })
            })
        };
        (0u32..1 << n)
            .filter(|&m| independent(m))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn matches_brute_force(rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 7), 0..7)) {
            let m = Gf2Matrix::from_bits(7, &rows);
            prop_assert_eq!(m.rank(), brute_rank(&rows));
        }
    }
}
