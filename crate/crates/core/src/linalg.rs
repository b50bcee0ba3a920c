//! Exact nullspaces of sparse rational matrices.
//!
//! The kernel is found modulo a word-sized prime first (rank profile and an
//! inverse of a maximal nonsingular block), then lifted p-adically to exact
//! rationals and checked against every row of the original matrix. A
//! verified basis that is the identity on the non-pivot columns certifies
//! the rational kernel dimension. Small dense systems use plain rational
//! elimination instead.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A sparse row: `(column, value)` pairs with distinct columns.
pub type SparseRow = Vec<(usize, BigRational)>;

/// Dense systems above this many cells are refused.
pub const MAX_DENSE_CELLS: usize = 10_000_000;

const PRIMES: [u64; 6] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
];

/// Kernel basis in reduced form: basis vector `t` is 1 at `free[t]`, 0 at
/// the other free columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    pub basis: Vec<Vec<BigRational>>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn to_mod(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Scale each row by the lcm of its denominators; entries must fit in i64
/// with room for the lifting residuals.
fn integerize(rows: &[SparseRow]) -> Result<Vec<Vec<(usize, i64)>>> {
    let limit = BigInt::from(1i64 << 62);
    rows.iter()
        .filter(|r| r.iter().any(|(_, v)| !v.is_zero()))
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
            r.iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| {
                    let x = v.numer() * (&l / v.denom());
                    if x.abs() >= limit {
                        return Err(Error::Overflow("integerized matrix entry"));
                    }
                    Ok((*c, x.to_i64().unwrap()))
                })
                .collect()
        })
        .collect()
}

/// Column rank profile and matching rows of a maximal nonsingular block.
fn rank_profile(rows: &[Vec<(usize, i64)>], ncols: usize, p: u64) -> (Vec<usize>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut d = vec![0u64; ncols];
            for &(c, v) in r {
                d[c] = to_mod(v, p);
            }
            d
        })
        .collect();
    let mut alive: Vec<usize> = (0..m.len()).collect();
    let (mut pcols, mut prows) = (Vec::new(), Vec::new());
    for col in 0..ncols {
        let Some(pos) = alive.iter().position(|&i| m[i][col] != 0) else {
            continue;
        };
        let piv = alive.remove(pos);
        let inv = inv_mod(m[piv][col], p);
        let prow: Vec<u64> = m[piv].iter().map(|&x| x * inv % p).collect();
        for &i in &alive {
            let f = m[i][col];
            if f != 0 {
                let row = &mut m[i];
                for c in col..ncols {
                    if prow[c] != 0 {
                        row[c] = (row[c] + (p - f) * prow[c]) % p;
                    }
                }
            }
        }
        pcols.push(col);
        prows.push(piv);
    }
    (pcols, prows)
}

/// Inverse of a square matrix mod p, or `None` if singular.
fn inverse_mod(a: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| m[i][col] != 0)?;
        m.swap(col, piv);
        let inv = inv_mod(m[col][col], p);
        for x in m[col].iter_mut() {
            *x = *x * inv % p;
        }
        let prow = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            let f = row[col];
            if i != col && f != 0 {
                for (x, &y) in row.iter_mut().zip(&prow) {
                    if y != 0 {
                        *x = (*x + (p - f) * y) % p;
                    }
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rational number `a/b` with `a ≡ b u (mod m)` and `|a|, b ≤ sqrt(m/2)`.
pub fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

/// Reconstruct a whole vector over one common denominator.
fn reconstruct_vector(xs: &[BigInt], m: &BigInt) -> Option<(Vec<BigInt>, BigInt)> {
    let half = m / 2u32;
    let bound = (m / 2u32).sqrt();
    let mut den = BigInt::one();
    let mut nums: Vec<BigInt> = Vec::with_capacity(xs.len());
    for x in xs {
        let mut y = (x * &den).mod_floor(m);
        if y > half {
            y -= m;
        }
        if y.abs() <= bound {
            nums.push(y);
            continue;
        }
        let (a, b) = rational_reconstruction(&y, m)?;
        for n in &mut nums {
            *n *= &b;
        }
        den *= &b;
        if den > bound {
            return None;
        }
        nums.push(a);
    }
    Some((nums, den))
}

/// `log2` of a Hadamard-type bound on the numerators and denominators of
/// the solution of `B x = b` for every right-hand side.
fn hadamard_bits(rows: &[Vec<(usize, i64)>], prows: &[usize]) -> f64 {
    prows
        .iter()
        .map(|&i| {
            let s: f64 = rows[i].iter().map(|&(_, v)| (v as f64) * (v as f64)).sum();
            (s.sqrt() + 1.0).log2() + 1.0
        })
        .sum()
}

/// Try to compute the kernel with prime `p`. `Ok(None)` means the prime was
/// unlucky and another should be used.
fn kernel_with_prime(rows: &[Vec<(usize, i64)>], ncols: usize, p: u64) -> Result<Option<Kernel>> {
    let (pcols, prows) = rank_profile(rows, ncols, p);
    let r = pcols.len();
    let mut is_piv = vec![false; ncols];
    for &c in &pcols {
        is_piv[c] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_piv[c]).collect();
    if free.is_empty() {
        return Ok(Some(Kernel {
            ncols,
            pivots: pcols,
            free,
            basis: Vec::new(),
        }));
    }
    let mut colpos = vec![usize::MAX; ncols];
    for (k, &c) in pcols.iter().enumerate() {
        colpos[c] = k;
    }
    let mut freepos = vec![usize::MAX; ncols];
    for (k, &c) in free.iter().enumerate() {
        freepos[c] = k;
    }
    // B = A[R, P] sparse over pivot positions; rhs = -A[R, F]
    let mut bmat: Vec<Vec<(usize, i64)>> = Vec::with_capacity(r);
    let nf = free.len();
    let mut res: Vec<Vec<i128>> = vec![vec![0; nf]; r];
    for (k, &i) in prows.iter().enumerate() {
        let mut row = Vec::new();
        for &(c, v) in &rows[i] {
            if is_piv[c] {
                row.push((colpos[c], v));
            } else {
                res[k][freepos[c]] = -(v as i128);
            }
        }
        bmat.push(row);
    }
    let dense: Vec<Vec<u64>> = bmat
        .iter()
        .map(|row| {
            let mut d = vec![0u64; r];
            for &(c, v) in row {
                d[c] = to_mod(v, p);
            }
            d
        })
        .collect();
    let Some(cinv) = inverse_mod(&dense, p) else {
        return Ok(None);
    };

    let bits = 2.0 * (hadamard_bits(rows, &prows) + 1.0) + 2.0;
    let max_steps = (bits / (p as f64).log2()).ceil() as usize + 2;
    let pb = BigInt::from(p);
    let mut acc: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); nf]; r];
    let mut modulus = BigInt::one();
    let mut checkpoint = 8usize.min(max_steps);
    let mut y = vec![vec![0u64; nf]; r];
    for step in 1..=max_steps {
        // y = C · (res mod p)
        let resm: Vec<Vec<u64>> = res
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| x.rem_euclid(p as i128) as u64)
                    .collect()
            })
            .collect();
        for (i, yrow) in y.iter_mut().enumerate() {
            for (t, slot) in yrow.iter_mut().enumerate() {
                let mut s: u128 = 0;
                for (k, &c) in cinv[i].iter().enumerate() {
                    if c != 0 {
                        s += (c as u128) * (resm[k][t] as u128);
                    }
                }
                *slot = (s % p as u128) as u64;
            }
        }
        // res = (res - B y) / p
        for (k, row) in bmat.iter().enumerate() {
            for t in 0..nf {
                let mut s = res[k][t];
                for &(c, v) in row {
                    s -= v as i128 * y[c][t] as i128;
                }
                debug_assert_eq!(s.rem_euclid(p as i128), 0);
                res[k][t] = s / p as i128;
            }
        }
        for (arow, yrow) in acc.iter_mut().zip(&y) {
            for (a, &v) in arow.iter_mut().zip(yrow) {
                if v != 0 {
                    *a += &modulus * v;
                }
            }
        }
        modulus *= &pb;

        if step == checkpoint || step == max_steps {
            checkpoint = (checkpoint * 2).min(max_steps);
            if let Some(basis) = try_finish(rows, ncols, &pcols, &free, &acc, &modulus) {
                return Ok(Some(Kernel {
                    ncols,
                    pivots: pcols,
                    free,
                    basis,
                }));
            }
        }
    }
    Ok(None)
}

fn try_finish(
    rows: &[Vec<(usize, i64)>],
    ncols: usize,
    pcols: &[usize],
    free: &[usize],
    acc: &[Vec<BigInt>],
    modulus: &BigInt,
) -> Option<Vec<Vec<BigRational>>> {
    let mut basis = Vec::with_capacity(free.len());
    for (t, &f) in free.iter().enumerate() {
        let xs: Vec<BigInt> = acc.iter().map(|row| row[t].clone()).collect();
        let (nums, den) = reconstruct_vector(&xs, modulus)?;
        let mut ints = vec![BigInt::zero(); ncols];
        for (k, &c) in pcols.iter().enumerate() {
            ints[c] = nums[k].clone();
        }
        ints[f] = den.clone();
        for row in rows {
            let s: BigInt = row.iter().map(|&(c, v)| &ints[c] * v).sum();
            if !s.is_zero() {
                return None;
            }
        }
        basis.push(
            ints.into_iter()
                .map(|n| BigRational::new(n, den.clone()))
                .collect(),
        );
    }
    Some(basis)
}

/// Exact kernel of the matrix with the given sparse rows.
pub fn kernel(rows: &[SparseRow], ncols: usize) -> Result<Kernel> {
    let rows = integerize(rows)?;
    if ncols == 0 {
        return Ok(Kernel {
            ncols,
            pivots: Vec::new(),
            free: Vec::new(),
            basis: Vec::new(),
        });
    }
    if rows.len().saturating_mul(ncols) > MAX_DENSE_CELLS {
        return Err(Error::SystemTooLarge {
            rows: rows.len(),
            cols: ncols,
        });
    }
    for p in PRIMES {
        if let Some(k) = kernel_with_prime(&rows, ncols, p)? {
            return Ok(k);
        }
    }
    Err(Error::KernelNotCertified)
}

/// Row-reduce a small dense rational matrix in place; returns pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

/// Each row scaled by the lcm of its denominators.
fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

fn rank_mod(rows: &[Vec<BigInt>], p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.mod_floor(&pb).to_u64().unwrap())
                .collect()
        })
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        let prow: Vec<u64> = m[r].iter().map(|&x| x * inv % p).collect();
        for row in m.iter_mut().skip(r + 1) {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row.iter_mut().zip(&prow) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Fraction-free elimination over the integers.
fn rank_bareiss(mut m: Vec<Vec<BigInt>>) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let (head, tail) = m.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            for j in c + 1..ncols {
                row[j] = (&row[j] * &prow[c] - &row[c] * &prow[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = prow[c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Exact rank of a dense rational matrix. A full rank modulo a prime is
/// already a certificate; otherwise fraction-free elimination decides.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let ints = integer_rows(rows);
    let full = rows.len().min(rows.first().map_or(0, |r| r.len()));
    if rank_mod(&ints, PRIMES[0]) == full {
        return full;
    }
    rank_bareiss(ints)
}

/// Solve `Σ_j x_j cols[j] = target` exactly; `None` if inconsistent.
pub fn solve_columns(
    cols: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_paths_agree() {
        let m: Vec<Vec<BigRational>> = [[1, 2, 3], [2, 4, 6], [1, 0, 1], [0, 2, 2]]
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::new(x.into(), 3.into()))
                    .collect()
            })
            .collect();
        assert_eq!(rank(&m), 2);
        assert_eq!(rank_bareiss(integer_rows(&m)), 2);
        let mut r = m.clone();
        assert_eq!(rref(&mut r).len(), 2);
        let id: Vec<Vec<BigRational>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| BigRational::from_integer(BigInt::from(i32::from(i == j))))
                    .collect()
            })
            .collect();
        assert_eq!(rank(&id), 3);
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn sparse(dense: &[Vec<i64>]) -> Vec<SparseRow> {
        dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c, q(v)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_kernels() {
        let k = kernel(&sparse(&[vec![1, 1, 1]]), 3).unwrap();
        assert_eq!(k.pivots, vec![0]);
        assert_eq!(k.free, vec![1, 2]);
        assert_eq!(
            k.basis,
            vec![vec![q(-1), q(1), q(0)], vec![q(-1), q(0), q(1)]]
        );

        let k = kernel(&sparse(&[vec![2, 3], vec![4, 6]]), 2).unwrap();
        assert_eq!(
            k.basis,
            vec![vec![BigRational::new((-3).into(), 2.into()), q(1)]]
        );

        let k = kernel(&sparse(&[vec![1, 0], vec![0, 1]]), 2).unwrap();
        assert_eq!(k.dim(), 0);
        assert_eq!(kernel(&[], 3).unwrap().dim(), 3);
    }

    #[test]
    fn matches_rational_elimination() {
        // a pseudo-random integer matrix with a planted dependency
        let mut state = 12345u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 2001) as i64 - 1000
        };
        let mut dense: Vec<Vec<i64>> = (0..9).map(|_| (0..14).map(|_| next()).collect()).collect();
        let extra: Vec<i64> = (0..14).map(|c| 3 * dense[0][c] - 7 * dense[4][c]).collect();
        dense.push(extra);
        let k = kernel(&sparse(&dense), 14).unwrap();
        let qrows: Vec<Vec<BigRational>> = dense
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        assert_eq!(k.dim(), 14 - rank(&qrows));
        for v in &k.basis {
            for r in &qrows {
                let s: BigRational = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(s.is_zero());
            }
        }
        // reduced form: identity on free columns
        for (t, v) in k.basis.iter().enumerate() {
            for (s, &f) in k.free.iter().enumerate() {
                assert_eq!(v[f], q(i64::from(s == t)));
            }
        }
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003i64);
        // 3/7 mod m
        let inv7 = BigInt::from(7).modpow(&(&m - 2), &m);
        let u = (BigInt::from(3) * inv7) % &m;
        assert_eq!(rational_reconstruction(&u, &m), Some((3.into(), 7.into())));
    }

    #[test]
    fn solve_small() {
        let cols = vec![vec![q(1), q(0)], vec![q(1), q(1)]];
        assert_eq!(solve_columns(&cols, &[q(3), q(2)]), Some(vec![q(1), q(2)]));
        let cols = vec![vec![q(1), q(1)]];
        assert_eq!(solve_columns(&cols, &[q(1), q(2)]), None);
    }
}
