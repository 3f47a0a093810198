//! Dense row-reduction over Z/p. Everything here is Gaussian elimination.

/// Row-echelon state with unit pivots, supporting incremental row insertion.
#[derive(Debug, Clone)]
pub struct Rref {
    p: u64,
    ncols: usize,
    /// Reduced rows, each with a recorded pivot column.
    rows: Vec<(usize, Vec<u32>)>,
}

impl Rref {
    pub fn new(p: u32, ncols: usize) -> Self {
        Rref { p: p as u64, ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat inverse.
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Reduce a vector against the current rows, in place.
    pub fn reduce(&self, v: &mut [u32]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot] as u64;
            if c == 0 {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row.iter()) {
                let sub = c * (*r as u64) % self.p;
                let cur = *x as u64;
                *x = ((cur + self.p - sub) % self.p) as u32;
            }
        }
    }

    /// Insert a row; returns true if it increased the rank.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|c| *c != 0) else {
            return false;
        };
        let inv = self.inv(v[pivot] as u64);
        for x in v.iter_mut() {
            *x = ((*x as u64) * inv % self.p) as u32;
        }
        // Back-substitute into existing rows.
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot] as u64;
            if c == 0 {
                continue;
            }
            for (r, x) in row.iter_mut().zip(v.iter()) {
                let sub = c * (*x as u64) % self.p;
                let cur = *r as u64;
                *r = ((cur + self.p - sub) % self.p) as u32;
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(c, _)| *c);
        true
    }

    /// Does the span contain this vector?
    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| *c == 0)
    }
}

/// Basis of the nullspace of the matrix whose columns are `cols` (each of
/// length `nrows`): vectors c with sum_j c_j col_j = 0.
pub fn kernel_basis(p: u32, nrows: usize, cols: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let ncols = cols.len();
    // Row-reduce the transpose-augmented system: track column operations by
    // reducing [A | not needed]; instead reduce A's columns as rows of A^T.
    let mut rref = Rref::new(p, nrows + ncols);
    // Row i of the lifted system: (col_i, e_i).
    let mut inserted = Vec::new();
    for (i, col) in cols.iter().enumerate() {
        debug_assert_eq!(col.len(), nrows);
        let mut row = vec![0u32; nrows + ncols];
        row[..nrows].copy_from_slice(col);
        row[nrows + i] = 1;
        rref.insert(row.clone());
        inserted.push(row);
    }
    // Kernel vectors are the rows whose leading block vanished.
    let mut out = Vec::new();
    for (pivot, row) in &rref.rows {
        if *pivot >= nrows {
            out.push(row[nrows..].to_vec());
        }
    }
    out
}

/// Rank of the matrix given by rows.
pub fn rank(p: u32, ncols: usize, rows: &[Vec<u32>]) -> usize {
    let mut rref = Rref::new(p, ncols);
    for r in rows {
        rref.insert(r.clone());
    }
    rref.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // Columns (1,2), (2,4), (0,1) over F_5: second column is twice the
        // first, so the kernel contains (2, -1, 0) up to scale.
        let cols = vec![vec![1, 2], vec![2, 4], vec![0, 1]];
        let ker = kernel_basis(5, 2, &cols);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        // Verify: k0*(1,2) + k1*(2,4) + k2*(0,1) = 0 mod 5.
        let a = (k[0] + 2 * k[1]) % 5;
        let b = (2 * k[0] + 4 * k[1] + k[2]) % 5;
        assert_eq!((a, b), (0, 0));
        assert_eq!(rank(5, 3, &[vec![1, 2, 0], vec![2, 4, 1]]), 2);
    }

    #[test]
    fn contains_detects_span_membership() {
        let mut r = Rref::new(7, 3);
        r.insert(vec![1, 1, 0]);
        r.insert(vec![0, 1, 1]);
        assert!(r.contains(&[1, 2, 1]));
        assert!(!r.contains(&[0, 0, 1]));
    }
}
