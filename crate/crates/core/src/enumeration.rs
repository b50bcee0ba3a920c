//! f-, h-, g- and γ-vectors and the enumerative identities relating them.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::complex::{bit, SimplicialComplex};
use crate::error::{Error, Result};

/// Checked binomial coefficient; zero when `k > n` or either is negative.
pub fn binom(n: i64, k: i64) -> Result<i64> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b)
        .ok_or(Error::Overflow("face-number arithmetic"))
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b)
        .ok_or(Error::Overflow("face-number arithmetic"))
}

/// All four face-number vectors of a complex with `d = dim + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantVectors {
    pub d: usize,
    /// `f_{-1}, f_0, …, f_{d-1}`
    pub f: Vec<i64>,
    /// `h_0, …, h_d`
    pub h: Vec<i64>,
    /// `g_0, …, g_{⌈d/2⌉}`
    pub g: Vec<i64>,
    /// `γ_0, …, γ_{⌊d/2⌋}`; absent when `h` is not palindromic in the γ basis.
    pub gamma: Option<Vec<i64>>,
}

impl InvariantVectors {
    pub fn of(c: &SimplicialComplex) -> Result<Self> {
        let d = c.rank();
        let f = f_vector(c);
        let h = h_from_f(&f, d)?;
        let g = g_from_h(&h);
        let gamma = gamma_from_h(&h, d).ok();
        Ok(InvariantVectors { d, f, h, g, gamma })
    }

    pub fn f0(&self) -> i64 {
        self.f.get(1).copied().unwrap_or(0)
    }

    pub fn f1(&self) -> i64 {
        self.f.get(2).copied().unwrap_or(0)
    }

    /// `g_i`, zero outside the stored range.
    pub fn g_at(&self, i: usize) -> i64 {
        self.g.get(i).copied().unwrap_or(0)
    }
}

/// Face counts `f_{-1} = 1, f_0, …, f_{dim}`.
pub fn f_vector(c: &SimplicialComplex) -> Vec<i64> {
    c.face_counts().into_iter().map(|n| n as i64).collect()
}

/// `h_i = Σ_{j≤i} (-1)^{i-j} C(d-j, i-j) f_{j-1}`.
pub fn h_from_f(f: &[i64], d: usize) -> Result<Vec<i64>> {
    if f.len() != d + 1 {
        return Err(Error::InconsistentLengths(format!(
            "f has {} entries, expected d+1 = {}",
            f.len(),
            d + 1
        )));
    }
    let d = d as i64;
    (0..=d)
        .map(|i| {
            (0..=i).try_fold(0i64, |acc, j| {
                let term = mul(binom(d - j, i - j)?, f[j as usize])?;
                add(acc, if (i - j) % 2 == 0 { term } else { -term })
            })
        })
        .collect()
}

/// Inverse of [`h_from_f`]: `f_{j-1} = Σ_{i≤j} C(d-i, j-i) h_i`.
pub fn f_from_h(h: &[i64], d: usize) -> Result<Vec<i64>> {
    if h.len() != d + 1 {
        return Err(Error::InconsistentLengths(format!(
            "h has {} entries, expected d+1 = {}",
            h.len(),
            d + 1
        )));
    }
    let d = d as i64;
    (0..=d)
        .map(|j| {
            (0..=j).try_fold(0i64, |acc, i| {
                add(acc, mul(binom(d - i, j - i)?, h[i as usize])?)
            })
        })
        .collect()
}

/// `g_0 = h_0`, `g_j = h_j - h_{j-1}` for `j ≤ ⌈d/2⌉`, with `d = h.len() - 1`.
pub fn g_from_h(h: &[i64]) -> Vec<i64> {
    let d = h.len().saturating_sub(1);
    (0..=d.div_ceil(2))
        .map(|j| h.get(j).copied().unwrap_or(0) - if j == 0 { 0 } else { h[j - 1] })
        .collect()
}

/// Coefficients of `h(t)` in the basis `t^k (1+t)^{d-2k}`.
pub fn gamma_from_h(h: &[i64], d: usize) -> Result<Vec<i64>> {
    if h.len() != d + 1 {
        return Err(Error::InconsistentLengths(format!(
            "h has {} entries, expected d+1 = {}",
            h.len(),
            d + 1
        )));
    }
    let mut r = h.to_vec();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let gk = r[k];
        gamma.push(gk);
        let e = (d - 2 * k) as i64;
        for j in 0..=e {
            r[k + j as usize] -= mul(gk, binom(e, j)?)?;
        }
    }
    if r.iter().any(|&x| x != 0) {
        return Err(Error::GammaRemainder(r));
    }
    Ok(gamma)
}

pub fn check_dehn_sommerville(h: &[i64]) -> bool {
    h.iter().eq(h.iter().rev())
}

/// `g_2 = f_1 - d f_0 + C(d+1, 2)`.
pub fn g2_linear(f0: i64, f1: i64, d: usize) -> i64 {
    let d = d as i64;
    f1 - d * f0 + d * (d + 1) / 2
}

/// Product of integer polynomials given by coefficient lists.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn vertex_links(c: &SimplicialComplex) -> impl Iterator<Item = SimplicialComplex> + '_ {
    (0..c.num_vertices()).map(|i| c.link_mask(bit(i)))
}

/// `Σ_v g_k(lk v) - (k+1) g_{k+1}(Δ) - (d+1-k) g_k(Δ)`, zero on spheres.
pub fn mcmullen_residual(c: &SimplicialComplex, k: usize) -> Result<i64> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let d = c.rank();
    if d == 0 || k > (d - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "k = {k} outside 0..=⌊(d-1)/2⌋ for d = {d}"
        )));
    }
    let inv = InvariantVectors::of(c)?;
    let mut sum = 0i64;
    for lk in vertex_links(c) {
        sum = add(sum, InvariantVectors::of(&lk)?.g_at(k))?;
    }
    Ok(sum - (k as i64 + 1) * inv.g_at(k + 1) - (d as i64 + 1 - k as i64) * inv.g_at(k))
}

fn gamma_at(v: &InvariantVectors, i: usize) -> Result<i64> {
    let gamma = v
        .gamma
        .as_ref()
        .ok_or_else(|| Error::Hypothesis("γ-vector undefined (h not palindromic)".into()))?;
    Ok(gamma.get(i).copied().unwrap_or(0))
}

/// `Σ_v γ_i(lk v) - (i+1) γ_{i+1}(Δ) - (2d-4i) γ_i(Δ)`, zero on spheres.
pub fn gamma_mcmullen_residual(c: &SimplicialComplex, i: usize) -> Result<i64> {
    let d = c.rank();
    if d == 0 || i > (d - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "i = {i} outside 0..=⌊(d-1)/2⌋ for d = {d}"
        )));
    }
    let inv = InvariantVectors::of(c)?;
    let mut sum = 0i64;
    for lk in vertex_links(c) {
        sum = add(sum, gamma_at(&InvariantVectors::of(&lk)?, i)?)?;
    }
    let (i64i, d64) = (i as i64, d as i64);
    Ok(sum - (i64i + 1) * gamma_at(&inv, i + 1)? - (2 * d64 - 4 * i64i) * gamma_at(&inv, i)?)
}

/// `(g_k, f_0/(k+2))` for a `2k`-dimensional complex with no missing faces
/// above dimension `k`.
pub fn corollary_s_k_2k_bound(
    c: &SimplicialComplex,
    k: usize,
) -> Result<(BigRational, BigRational)> {
    if c.dim() != 2 * k as isize || !c.in_class_s(k) {
        return Err(Error::ClassViolation(format!(
            "expected S({k},{}), got dim {} with max missing dim {:?}",
            2 * k,
            c.dim(),
            c.max_missing_dim()
        )));
    }
    let inv = InvariantVectors::of(c)?;
    let lhs = BigRational::from_integer(BigInt::from(inv.g_at(k)));
    let rhs = BigRational::new(BigInt::from(inv.f0()), BigInt::from(k as i64 + 2));
    Ok((lhs, rhs))
}

/// `u = d - (largest missing-face dimension)`; `None` for a simplex.
pub fn u_parameter(c: &SimplicialComplex) -> Option<usize> {
    c.max_missing_dim().map(|m| c.rank().saturating_sub(m))
}

/// `ũ = min(u, ⌊(d-1)/2⌋)`.
pub fn u_tilde(c: &SimplicialComplex) -> Option<usize> {
    let d = c.rank();
    u_parameter(c).map(|u| u.min(d.saturating_sub(1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(parts: &[SimplicialComplex]) -> SimplicialComplex {
        parts[1..].iter().fold(parts[0].clone(), |a, b| a.join(b))
    }

    fn bs(d: usize) -> SimplicialComplex {
        SimplicialComplex::boundary_simplex(d).unwrap()
    }

    /// Brute-force face count: test every vertex subset for membership.
    fn oracle_f(c: &SimplicialComplex) -> Vec<i64> {
        let n = c.num_vertices();
        let mut f = vec![0i64; c.rank() + 1];
        for s in 0u32..(1 << n) {
            let set: Vec<_> = (0..n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| c.vertices()[i])
                .collect();
            if c.contains_face(&set) {
                f[set.len()] += 1;
            }
        }
        f
    }

    #[test]
    fn f_vectors() {
        let oct = sphere(&[bs(1), bs(1), bs(1)]);
        assert_eq!(f_vector(&oct), vec![1, 6, 12, 8]);
        assert_eq!(f_vector(&bs(4)), vec![1, 5, 10, 10, 5]);
        let k24 = sphere(&[bs(2), bs(2), bs(1)]);
        assert_eq!(f_vector(&k24), oracle_f(&k24));
        assert_eq!(f_vector(&k24), vec![1, 8, 27, 48, 45, 18]);
        assert_eq!(f_vector(&k24)[1], 8);
    }

    #[test]
    fn h_g_gamma() {
        for d in 1..=8 {
            let h = h_from_f(&f_vector(&bs(d)), d).unwrap();
            assert_eq!(h, vec![1; d + 1]);
        }
        let oct = sphere(&[bs(1), bs(1), bs(1)]);
        let inv = InvariantVectors::of(&oct).unwrap();
        assert_eq!(inv.h, vec![1, 3, 3, 1]);
        assert_eq!(inv.gamma, Some(vec![1, 0]));
        assert_eq!(inv.gamma.as_ref().unwrap()[1], inv.f0() - 2 * inv.d as i64);
        let k25 = sphere(&[bs(2), bs(2), bs(2)]);
        let inv = InvariantVectors::of(&k25).unwrap();
        assert_eq!(inv.h, vec![1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(
            inv.h,
            poly_mul(&poly_mul(&[1, 1, 1], &[1, 1, 1]), &[1, 1, 1])
        );
        assert_eq!(inv.g, vec![1, 2, 3, 1]);
    }

    #[test]
    fn round_trip_and_lengths() {
        let f = vec![1, 8, 27, 48, 45, 18];
        assert_eq!(f_from_h(&h_from_f(&f, 5).unwrap(), 5).unwrap(), f);
        assert!(matches!(
            h_from_f(&f, 4),
            Err(Error::InconsistentLengths(_))
        ));
        assert!(matches!(
            gamma_from_h(&[1, 2, 0], 2),
            Err(Error::GammaRemainder(_))
        ));
    }

    #[test]
    fn dehn_sommerville() {
        assert!(check_dehn_sommerville(&[1, 3, 3, 1]));
        assert!(!check_dehn_sommerville(&[1, 2, 0]));
        assert!(check_dehn_sommerville(&[1, 3, 5, 5, 3, 1]));
    }

    #[test]
    fn g2_linear_values() {
        assert_eq!(g2_linear(8, 27, 5), 2);
        for d in 2..8 {
            assert_eq!(
                g2_linear(d as i64 + 1, binom(d as i64 + 1, 2).unwrap(), d),
                0
            );
        }
        assert_eq!(g2_linear(10, 40, 5), 5);
        let cross5 = sphere(&[bs(1), bs(1), bs(1), bs(1), bs(1)]);
        let f = f_vector(&cross5);
        assert_eq!((f[1], f[2]), (10, 40));
    }

    #[test]
    fn residuals_vanish() {
        let oct = sphere(&[bs(1), bs(1), bs(1)]);
        assert_eq!(mcmullen_residual(&oct, 0).unwrap(), 0);
        assert_eq!(mcmullen_residual(&oct, 1).unwrap(), 0);
        assert_eq!(gamma_mcmullen_residual(&oct, 0).unwrap(), 0);
        let k24 = sphere(&[bs(2), bs(2), bs(1)]);
        assert_eq!(mcmullen_residual(&k24, 1).unwrap(), 0);
        assert_eq!(gamma_mcmullen_residual(&k24, 0).unwrap(), 0);
        assert_eq!(InvariantVectors::of(&k24).unwrap().gamma.unwrap()[1], -2);
        let k25 = sphere(&[bs(2), bs(2), bs(2)]);
        assert_eq!(mcmullen_residual(&k25, 2).unwrap(), 0);
        assert_eq!(gamma_mcmullen_residual(&k25, 1).unwrap(), 0);
        assert!(mcmullen_residual(&oct, 2).is_err());
        let mixed = SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert_eq!(mcmullen_residual(&mixed, 0), Err(Error::NotPure));
    }

    #[test]
    fn s_k_2k_bound() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let k24 = sphere(&[bs(2), bs(2), bs(1)]);
        assert_eq!(corollary_s_k_2k_bound(&k24, 2).unwrap(), (r(2, 1), r(2, 1)));
        let oct = sphere(&[bs(1), bs(1), bs(1)]);
        assert_eq!(corollary_s_k_2k_bound(&oct, 1).unwrap(), (r(2, 1), r(2, 1)));
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let x = sphere(&[bs(1), c4.clone(), c4]);
        let (lhs, rhs) = corollary_s_k_2k_bound(&x, 2).unwrap();
        assert_eq!(lhs, r(5, 1));
        assert!(lhs >= rhs);
        assert!(matches!(
            corollary_s_k_2k_bound(&k24, 1),
            Err(Error::ClassViolation(_))
        ));
    }

    #[test]
    fn u_values() {
        let k25 = sphere(&[bs(2), bs(2), bs(2)]);
        assert_eq!(u_parameter(&k25), Some(4));
        assert_eq!(u_tilde(&k25), Some(2));
        let k24 = sphere(&[bs(2), bs(2), bs(1)]);
        assert_eq!(u_tilde(&k24), Some(2));
    }
}
