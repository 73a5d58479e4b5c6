//! Prime fields and matrix rank over them.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0} is not prime")]
pub struct NotPrime(pub u64);

/// The field Z/p for a prime p. Homology ranks depend on this choice, so it
/// travels explicitly through every homological computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(NotPrime(p))
        }
    }

    pub fn f2() -> Self {
        PrimeField { p: 2 }
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        // p stays well below 2^32 in practice; widen to be safe anyway.
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Rank of a dense matrix given as rows; entries are signed and get
    /// reduced mod p here. Consumes the rows.
    pub fn rank(&self, rows: Vec<Vec<i8>>, cols: usize) -> usize {
        if self.p == 2 {
            rank_gf2(rows, cols)
        } else {
            self.rank_generic(rows, cols)
        }
    }

    fn rank_generic(&self, rows: Vec<Vec<i8>>, cols: usize) -> usize {
        let p = self.p;
        let reduce = |e: i8| -> u64 { ((e as i64).rem_euclid(p as i64)) as u64 };
        let mut mat: Vec<Vec<u64>> = rows
            .into_iter()
            .map(|r| {
                debug_assert_eq!(r.len(), cols);
                r.into_iter().map(reduce).collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
                continue;
            };
            mat.swap(rank, pivot);
            let inv = self.inv(mat[rank][col]);
            for x in &mut mat[rank][col..] {
                *x = self.mul(*x, inv);
            }
            let (above, rest) = mat.split_at_mut(rank);
            let (pivot_row, below) = rest.split_first_mut().unwrap();
            for row in above.iter_mut().chain(below.iter_mut()) {
                let factor = row[col];
                if factor != 0 {
                    for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x = (*x + p - self.mul(factor, pv)) % p;
                    }
                }
            }
            rank += 1;
            if rank == mat.len() {
                break;
            }
        }
        rank
    }
}

/// GF(2) rank on bit-packed rows.
fn rank_gf2(rows: Vec<Vec<i8>>, cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in rows {
        debug_assert_eq!(row.len(), cols);
        let mut packed = vec![0u64; words];
        for (c, &e) in row.iter().enumerate() {
            if e & 1 != 0 {
                packed[c / 64] ^= 1 << (c % 64);
            }
        }
        for (b, &piv) in basis.iter().zip(&pivots) {
            if packed[piv / 64] & (1 << (piv % 64)) != 0 {
                for w in 0..words {
                    packed[w] ^= b[w];
                }
            }
        }
        if let Some(w) = packed.iter().position(|&x| x != 0) {
            let pivot = w * 64 + packed[w].trailing_zeros() as usize;
            basis.push(packed);
            pivots.push(pivot);
        }
    }
    basis.len()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(101).is_ok());
        assert_eq!(PrimeField::new(1), Err(NotPrime(1)));
        assert_eq!(PrimeField::new(91), Err(NotPrime(91)));
        assert_eq!(PrimeField::new(0), Err(NotPrime(0)));
    }

    #[test]
    fn inverse() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    fn rank_over(p: u64, rows: &[&[i8]], cols: usize) -> usize {
        let f = PrimeField::new(p).unwrap();
        f.rank(rows.iter().map(|r| r.to_vec()).collect(), cols)
    }

    #[test]
    fn ranks() {
        // Identity.
        assert_eq!(rank_over(2, &[&[1, 0], &[0, 1]], 2), 2);
        assert_eq!(rank_over(5, &[&[1, 0], &[0, 1]], 2), 2);
        // Dependent rows.
        assert_eq!(rank_over(5, &[&[1, 2], &[2, 4]], 2), 1);
        // Sum of rows is zero mod 3 but not mod 2.
        assert_eq!(rank_over(3, &[&[1, 1], &[1, -1], &[1, 0]], 2), 2);
        // Zero matrix.
        assert_eq!(rank_over(2, &[&[0, 0, 0]], 3), 0);
        // Empty matrix.
        assert_eq!(rank_over(2, &[], 4), 0);
        // A matrix whose rank differs between F2 and F3: [[1,1],[1,-1]].
        // det = -2, zero mod 2, nonzero mod 3.
        assert_eq!(rank_over(2, &[&[1, 1], &[1, -1]], 2), 1);
        assert_eq!(rank_over(3, &[&[1, 1], &[1, -1]], 2), 2);
    }

    #[test]
    fn wide_matrix_gf2() {
        // 70 columns forces two words per row.
        let mut r1 = vec![0i8; 70];
        let mut r2 = vec![0i8; 70];
        r1[0] = 1;
        r1[69] = 1;
        r2[69] = 1;
        let sum: Vec<i8> = r1.iter().zip(&r2).map(|(a, b)| a ^ b).collect();
        assert_eq!(rank_over(2, &[&r1, &r2, &sum], 70), 2);
    }
}
