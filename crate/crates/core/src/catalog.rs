//! Named spheres with their natural coordinates, and the two counterexample
//! reproductions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::complex::{SimplicialComplex, Vertex};
use crate::enumeration::{binom, f_from_h, g_from_h, gamma_from_h, poly_mul, InvariantVectors};
use crate::error::{Error, Result};
use crate::linalg;
use crate::sequences::{level_necessary_conditions, SequenceVerdict};
use crate::stress::{self, Embedding, Monomial, StressPolynomial};

pub type Coords = BTreeMap<Vertex, Vec<BigRational>>;

/// A catalog complex with optional natural coordinates and expected
/// invariants computed independently of face enumeration.
#[derive(Clone, Debug)]
pub struct NamedSphere {
    pub name: String,
    pub complex: SimplicialComplex,
    pub natural_coords: Option<Embedding>,
    pub expected: Option<InvariantVectors>,
}

impl NamedSphere {
    fn new(
        name: String,
        complex: SimplicialComplex,
        coords: Option<Coords>,
        h: Option<Vec<i64>>,
    ) -> Result<Self> {
        let natural_coords = coords
            .map(|c| Embedding::natural(&complex, c))
            .transpose()?;
        let d = complex.rank();
        let expected = h.map(|h| expected_from_h(h, d)).transpose()?;
        Ok(NamedSphere {
            name,
            complex,
            natural_coords,
            expected,
        })
    }

    /// Computed invariants agree with the expected ones, when present.
    pub fn matches_expected(&self) -> Result<bool> {
        match &self.expected {
            None => Ok(true),
            Some(e) => Ok(&InvariantVectors::of(&self.complex)? == e),
        }
    }
}

fn expected_from_h(h: Vec<i64>, d: usize) -> Result<InvariantVectors> {
    let f = f_from_h(&h, d)?;
    let g = g_from_h(&h);
    let gamma = gamma_from_h(&h, d).ok();
    Ok(InvariantVectors { d, f, h, g, gamma })
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `e_1, …, e_a, -Σ e_i` on the vertices `1..=a+1`.
fn simplex_coords(a: usize) -> Coords {
    (0..=a)
        .map(|i| {
            let p = (0..a)
                .map(|j| {
                    if i == a {
                        q(-1)
                    } else if i == j {
                        q(1)
                    } else {
                        q(0)
                    }
                })
                .collect();
            (i as Vertex + 1, p)
        })
        .collect()
}

/// Rational points on the unit circle, `t` evenly spaced in `[-2, 2]`.
fn cycle_coords(n: usize) -> Coords {
    (0..n)
        .map(|i| {
            let t = BigRational::new(
                BigInt::from(4 * i as i64 - 2 * (n as i64 - 1)),
                BigInt::from(n as i64 - 1),
            );
            let den = BigRational::one() + &t * &t;
            let x = (BigRational::one() - &t * &t) / &den;
            let y = (q(2) * &t) / &den;
            (i as Vertex + 1, vec![x, y])
        })
        .collect()
}

/// Join of complexes together with the free sum of their coordinates.
fn free_sum(parts: &[(SimplicialComplex, Coords)]) -> (SimplicialComplex, Coords) {
    let mut acc = (SimplicialComplex::empty(), Coords::new());
    for (c, p) in parts {
        let (joined, offset) = acc.0.join_relabeled(c);
        let (da, db) = (acc.0.rank(), c.rank());
        let mut coords: Coords = acc
            .1
            .into_iter()
            .map(|(v, mut x)| {
                x.extend(std::iter::repeat_n(q(0), db));
                (v, x)
            })
            .collect();
        for (&v, x) in p {
            let mut y = vec![q(0); da];
            y.extend(x.iter().cloned());
            coords.insert(v + offset.unwrap_or(0), y);
        }
        acc = (joined, coords);
    }
    acc
}

fn bs(a: usize) -> Result<(SimplicialComplex, Coords)> {
    if a == 0 {
        return Ok((SimplicialComplex::empty(), Coords::new()));
    }
    Ok((SimplicialComplex::boundary_simplex(a)?, simplex_coords(a)))
}

fn ones(a: usize) -> Vec<i64> {
    vec![1; a + 1]
}

pub fn boundary_simplex(d: usize) -> Result<NamedSphere> {
    let (c, p) = bs(d)?;
    NamedSphere::new(format!("bd-simplex-{d}"), c, Some(p), Some(ones(d)))
}

pub fn cycle(n: usize) -> Result<NamedSphere> {
    let c = SimplicialComplex::cycle(n)?;
    NamedSphere::new(
        format!("cycle-{n}"),
        c,
        Some(cycle_coords(n)),
        Some(vec![1, n as i64 - 2, 1]),
    )
}

/// Boundary of the `d`-dimensional cross-polytope.
pub fn cross_polytope(d: usize) -> Result<NamedSphere> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "cross-polytope needs d >= 1".into(),
        ));
    }
    let parts: Vec<_> = (0..d).map(|_| bs(1)).collect::<Result<_>>()?;
    let (c, p) = free_sum(&parts);
    let h = (0..=d as i64)
        .map(|i| binom(d as i64, i))
        .collect::<Result<_>>()?;
    NamedSphere::new(format!("cross-{d}"), c, Some(p), Some(h))
}

/// `∂σ^i * ∂σ^i * ∂σ^{d-2i}` for `d/3 <= i <= d/2`, checked to lie in `S(i, d-1)`.
pub fn build_k(i: usize, d: usize) -> Result<NamedSphere> {
    if i == 0 || 3 * i < d || 2 * i > d {
        return Err(Error::InvalidParameter(format!(
            "K(i, d-1) needs d/3 <= i <= d/2, got i = {i}, d = {d}"
        )));
    }
    let (c, p) = free_sum(&[bs(i)?, bs(i)?, bs(d - 2 * i)?]);
    if !c.in_class_s(i) {
        return Err(Error::ClassViolation(format!(
            "K({i},{}) not in S({i},{})",
            d - 1,
            d - 1
        )));
    }
    let h = poly_mul(&poly_mul(&ones(i), &ones(i)), &ones(d - 2 * i));
    NamedSphere::new(format!("K({i},{})", d - 1), c, Some(p), Some(h))
}

/// `∂σ^1 * C_n * C_m`, a 4-sphere.
pub fn suspended_cycles(n: usize, m: usize) -> Result<NamedSphere> {
    let cn = (SimplicialComplex::cycle(n)?, cycle_coords(n));
    let cm = (SimplicialComplex::cycle(m)?, cycle_coords(m));
    let (c, p) = free_sum(&[bs(1)?, cn, cm]);
    let h = poly_mul(
        &poly_mul(&ones(1), &[1, n as i64 - 2, 1]),
        &[1, m as i64 - 2, 1],
    );
    NamedSphere::new(format!("S0*C{n}*C{m}"), c, Some(p), Some(h))
}

/// The polytope `P` with `u = 2m+1`: three groups of vertices
/// `e_1..e_{u-1}, -Σ`, then `e_u..e_{2u-2}, -Σ`, then `e_{2u-1}, e_{2u}, -(e_{2u-1}+e_{2u})`.
pub fn counterexample_polytope(m: usize) -> Result<NamedSphere> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "the counterexample polytope needs m >= 1".into(),
        ));
    }
    let u = 2 * m + 1;
    let dim = 2 * u;
    let mut coords = Coords::new();
    let mut label: Vertex = 1;
    for (start, len) in [(0, u - 1), (u - 1, u - 1), (2 * u - 2, 2)] {
        for j in 0..len {
            let mut p = vec![q(0); dim];
            p[start + j] = q(1);
            coords.insert(label, p);
            label += 1;
        }
        let mut p = vec![q(0); dim];
        for x in &mut p[start..start + len] {
            *x = q(-1);
        }
        coords.insert(label, p);
        label += 1;
    }
    let k = build_k(2 * m, 4 * m + 2)?;
    let groups = counterexample_groups(m);
    let mut missing: Vec<Vec<Vertex>> = k
        .complex
        .missing_faces()
        .into_iter()
        .map(|f| f.vertex_set)
        .collect();
    missing.sort();
    if missing != groups {
        return Err(Error::ClassViolation(format!(
            "missing faces {missing:?}, expected {groups:?}"
        )));
    }
    NamedSphere::new(
        format!("counterexample-{m}"),
        k.complex,
        Some(coords),
        k.expected.map(|e| e.h),
    )
}

/// The three vertex groups of the counterexample polytope.
pub fn counterexample_groups(m: usize) -> Vec<Vec<Vertex>> {
    let u = (2 * m + 1) as Vertex;
    vec![
        (1..=u).collect(),
        (u + 1..=2 * u).collect(),
        (2 * u + 1..=2 * u + 3).collect(),
    ]
}

/// Every facet spans a hyperplane `a·x = 1` with all other vertices on the
/// side `a·x < 1`; certifies that the facets are facets of the convex hull.
pub fn certify_boundary(c: &SimplicialComplex, e: &Embedding) -> bool {
    let d = e.dim();
    c.facets().iter().all(|facet| {
        let pts: Vec<&Vec<BigRational>> = facet.iter().map(|v| &e.coords[v]).collect();
        if pts.len() != d {
            return false;
        }
        let cols: Vec<Vec<BigRational>> = (0..d)
            .map(|j| pts.iter().map(|p| p[j].clone()).collect())
            .collect();
        let rows: Vec<Vec<BigRational>> = pts.iter().map(|p| p.to_vec()).collect();
        if linalg::rank(&rows) < d {
            return false;
        }
        let Some(a) = linalg::solve_columns(&cols, &vec![BigRational::one(); d]) else {
            return false;
        };
        e.coords
            .iter()
            .filter(|(v, _)| !facet.contains(v))
            .all(|(_, p)| {
                let dot: BigRational = p.iter().zip(&a).map(|(x, y)| x * y).sum();
                dot < BigRational::one()
            })
    })
}

/// The shipped catalog.
pub fn catalog() -> Result<Vec<NamedSphere>> {
    let mut out = Vec::new();
    for d in 1..=8 {
        out.push(boundary_simplex(d)?);
    }
    for n in 3..=8 {
        out.push(cycle(n)?);
    }
    for d in 2..=7 {
        out.push(cross_polytope(d)?);
    }
    for d in 3..=8usize {
        for i in d.div_ceil(3)..=d / 2 {
            out.push(build_k(i, d)?);
        }
    }
    for n in 3..=6 {
        for m in n..=6 {
            out.push(suspended_cycles(n, m)?);
        }
    }
    for m in 1..=2 {
        out.push(counterexample_polytope(m)?);
    }
    Ok(out)
}

/// Look up a catalog entry by name.
pub fn by_name(name: &str) -> Result<NamedSphere> {
    catalog()?
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownComplex(name.to_string()))
}

/// `g_j` of `K(u-k, 2u-1)`: `j+1` up to `2k`, then `2k+1` up to `u-k`, then `2u+1-2j`.
pub fn example_g_formula(u: usize, k: usize, j: usize) -> Result<i64> {
    if k == 0 || u < 3 * k || j > u {
        return Err(Error::InvalidParameter(format!(
            "need u >= 3k >= 3 and 0 <= j <= u, got u = {u}, k = {k}, j = {j}"
        )));
    }
    let (u, k, j) = (u as i64, k as i64, j as i64);
    Ok(if j <= 2 * k {
        j + 1
    } else if j <= u - k {
        2 * k + 1
    } else {
        2 * u + 1 - 2 * j
    })
}

/// Default vertex cap for the level counterexample.
pub const LEVEL_VERTEX_CAP: usize = 32;

#[derive(Clone, Debug, Serialize)]
pub struct LevelCounterexampleReport {
    pub u: usize,
    pub k: usize,
    pub name: String,
    pub g: Vec<i64>,
    pub formula: Vec<i64>,
    pub formula_matches: bool,
    pub g_u: i64,
    pub level_conditions: SequenceVerdict,
    /// `None` when the stress systems exceed the size cap.
    pub socle: Option<Vec<usize>>,
}

impl LevelCounterexampleReport {
    /// The g-vector matches the formula, `g_u = 1`, the level conditions
    /// fail, and any computed socle is nonzero below degree `u`.
    pub fn holds(&self) -> bool {
        self.formula_matches
            && self.g_u == 1
            && !self.level_conditions.holds
            && self
                .socle
                .as_ref()
                .is_none_or(|s| s[..self.u].iter().any(|&x| x > 0))
    }
}

/// `K(u-k, 2u-1)` has a non-level face ring. Socles are computed under a
/// generic embedding when the complex has at most `cap` vertices.
pub fn verify_counterexample_level(
    u: usize,
    k: usize,
    seed: u64,
    cap: usize,
) -> Result<LevelCounterexampleReport> {
    if k == 0 || u < 3 * k {
        return Err(Error::InvalidParameter(format!(
            "need u >= 3k >= 3, got u = {u}, k = {k}"
        )));
    }
    let s = build_k(u - k, 2 * u)?;
    if s.complex.num_vertices() > cap {
        return Err(Error::CapExceeded {
            vertices: s.complex.num_vertices(),
            cap,
        });
    }
    let inv = InvariantVectors::of(&s.complex)?;
    let formula: Vec<i64> = (0..=u)
        .map(|j| example_g_formula(u, k, j))
        .collect::<Result<_>>()?;
    let g = inv.g.clone();
    let seq: Vec<u64> = g.iter().map(|&x| x.max(0) as u64).collect();
    let e = Embedding::generic(&s.complex, seed);
    let socle = match stress::socle_dims(&s.complex, &e) {
        Ok(v) => Some(v),
        Err(Error::SystemTooLarge { .. }) => None,
        Err(err) => return Err(err),
    };
    Ok(LevelCounterexampleReport {
        u,
        k,
        name: s.name,
        formula_matches: g == formula,
        g_u: inv.g_at(u),
        level_conditions: level_necessary_conditions(&seq),
        g,
        formula,
        socle,
    })
}

/// `f = (y1 - (u/3) y3)(y2 - (u/3) y3)(y1 - y2)^{u-2}` in the variables
/// `y1, y2, y3` given as linear polynomials.
fn support_stress(y: [&StressPolynomial; 3], u: usize) -> StressPolynomial {
    let c = BigRational::new(BigInt::from(u as i64), BigInt::from(3));
    let a = y[0].add(&y[2].scale(&-c.clone()));
    let b = y[1].add(&y[2].scale(&-c));
    let diff = y[0].add(&y[1].scale(&-BigRational::one()));
    a.mul(&b).mul(&diff.pow(u - 2))
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportCounterexampleReport {
    pub m: usize,
    pub u: usize,
    pub face_supported: bool,
    pub operator_equations_hold: bool,
    pub operator_equations: usize,
    /// `dim S_u` under the natural embedding; `None` above the size cap.
    pub stress_dim: Option<usize>,
    /// `f` is a multiple of the computed basis vector.
    pub spans_stress_space: Option<bool>,
    /// Coefficient of `y1^m y2^m y3` in `f`, as a `p/q` string.
    pub coefficient: String,
    pub candidate_faces: usize,
    pub unsupported_faces: usize,
    pub derivative_span: Option<usize>,
    pub g_u_minus_1: i64,
}

impl SupportCounterexampleReport {
    pub fn holds(&self) -> bool {
        self.face_supported
            && self.operator_equations_hold
            && self.stress_dim.is_none_or(|d| d == 1)
            && self.spans_stress_space != Some(false)
            && self.coefficient == "0"
            && self.unsupported_faces == self.candidate_faces
            && self
                .derivative_span
                .is_none_or(|s| (s as i64) < self.g_u_minus_1)
    }
}

fn cap_none<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::SystemTooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Subsets of `set` of size `k`.
fn subsets(set: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    if k == 0 {
        return vec![vec![]];
    }
    if set.len() < k {
        return vec![];
    }
    let mut out = subsets(&set[1..], k);
    for mut s in subsets(&set[1..], k - 1) {
        s.insert(0, set[0]);
        out.push(s);
    }
    out.sort();
    out
}

/// The explicit degree-`u` stress of the counterexample polytope, expanded in
/// vertex variables.
pub fn counterexample_stress(m: usize) -> StressPolynomial {
    let u = 2 * m + 1;
    let ys: Vec<StressPolynomial> = counterexample_groups(m)
        .iter()
        .map(|g| StressPolynomial::linear(&g.iter().map(|&v| (v, BigRational::one())).collect()))
        .collect();
    support_stress([&ys[0], &ys[1], &ys[2]], u)
}

/// Reproduce the stress-support counterexample for `m`.
pub fn verify_counterexample_support(m: usize) -> Result<SupportCounterexampleReport> {
    let p = counterexample_polytope(m)?;
    let u = 2 * m + 1;
    let c = &p.complex;
    let e = p
        .natural_coords
        .as_ref()
        .expect("the counterexample polytope carries coordinates");
    let f = counterexample_stress(m);
    let forms = stress::theta_forms(e);
    let operator_equations_hold = forms.iter().all(|l| f.apply_form(l).is_zero());

    // coefficient in the group variables y1, y2, y3 = x1, x2, x3
    let ys: Vec<StressPolynomial> = (1..=3)
        .map(|v| StressPolynomial::linear(&BTreeMap::from([(v, q(1))])))
        .collect();
    let fy = support_stress([&ys[0], &ys[1], &ys[2]], u);
    let coefficient = fy.coefficient(&Monomial::from_pairs([
        (1, m as u32),
        (2, m as u32),
        (3, 1),
    ]));

    let groups = counterexample_groups(m);
    let mut candidate_faces = 0;
    let mut unsupported_faces = 0;
    for a in subsets(&groups[0], m) {
        for b in subsets(&groups[1], m) {
            for &v in &groups[2] {
                let mut face: Vec<Vertex> = a.iter().chain(&b).copied().collect();
                face.push(v);
                if c.contains_face(&face) {
                    candidate_faces += 1;
                    if !f.participates(&face) {
                        unsupported_faces += 1;
                    }
                }
            }
        }
    }

    let basis = cap_none(stress::stress_space(c, e, u))?;
    let stress_dim = basis.as_ref().map(|b| b.dim());
    let spans_stress_space = basis
        .as_ref()
        .map(|b| b.dim() == 1 && b.combine(&b.coordinates(&f)) == f);
    let derivative_span = cap_none(stress::derivative_span_dim(c, e, u - 1))?;
    let g_u_minus_1 = InvariantVectors::of(c)?.g_at(u - 1);
    Ok(SupportCounterexampleReport {
        m,
        u,
        face_supported: f.is_face_supported(c),
        operator_equations_hold,
        operator_equations: forms.len(),
        stress_dim,
        spans_stress_space,
        coefficient: coefficient.to_string(),
        candidate_faces,
        unsupported_faces,
        derivative_span,
        g_u_minus_1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_matches_expected_invariants() {
        let cat = catalog().unwrap();
        assert_eq!(cat.len(), 8 + 6 + 6 + 8 + 10 + 2);
        for s in &cat {
            assert!(s.matches_expected().unwrap(), "{}", s.name);
            let e = s.natural_coords.as_ref().unwrap();
            assert_eq!(e.dim(), s.complex.rank(), "{}", s.name);
        }
        let names: Vec<&str> = cat.iter().map(|s| s.name.as_str()).collect();
        assert!(
            names.contains(&"K(2,4)") && names.contains(&"K(4,7)") && names.contains(&"S0*C3*C6")
        );
    }

    #[test]
    fn natural_coordinates_realize_the_boundary() {
        for s in catalog().unwrap() {
            if s.complex.num_vertices() <= 14 {
                let e = s.natural_coords.as_ref().unwrap();
                assert!(certify_boundary(&s.complex, e), "{}", s.name);
            }
        }
        let oct = cross_polytope(3).unwrap();
        let mut bad = oct.natural_coords.clone().unwrap();
        bad.coords.insert(1, vec![q(0), q(0), q(0)]);
        assert!(!certify_boundary(&oct.complex, &bad));
    }

    #[test]
    fn k_builders() {
        let k = build_k(2, 5).unwrap();
        assert_eq!(k.name, "K(2,4)");
        assert_eq!(k.complex.num_vertices(), 8);
        let k = build_k(2, 6).unwrap();
        assert_eq!(k.expected.as_ref().unwrap().g, vec![1, 2, 3, 1]);
        assert_eq!(
            build_k(1, 3).unwrap().complex,
            cross_polytope(3).unwrap().complex
        );
        assert!(build_k(1, 4).is_err());
        assert!(build_k(2, 3).is_err());
    }

    #[test]
    fn g_formula() {
        assert_eq!(example_g_formula(3, 1, 1).unwrap(), 2);
        assert_eq!(example_g_formula(3, 1, 3).unwrap(), 1);
        assert_eq!(example_g_formula(6, 2, 4).unwrap(), 5);
        assert_eq!(example_g_formula(6, 2, 5).unwrap(), 3);
        for u in 3..=7 {
            for k in 1..=u / 3 {
                assert_eq!(example_g_formula(u, k, 2 * k).unwrap(), 2 * k as i64 + 1);
                assert_eq!(example_g_formula(u, k, u - k).unwrap(), 2 * k as i64 + 1);
                let g = InvariantVectors::of(&build_k(u - k, 2 * u).unwrap().complex)
                    .unwrap()
                    .g;
                let f: Vec<i64> = (0..=u)
                    .map(|j| example_g_formula(u, k, j).unwrap())
                    .collect();
                assert_eq!(g, f, "u={u} k={k}");
            }
        }
        assert!(example_g_formula(2, 1, 0).is_err());
    }

    #[test]
    fn counterexample_polytope_m1() {
        let p = counterexample_polytope(1).unwrap();
        assert_eq!(p.complex.num_vertices(), 9);
        let e = p.natural_coords.as_ref().unwrap();
        let theta1 = &stress::theta_forms(e)[0];
        assert_eq!(theta1, &BTreeMap::from([(1, q(1)), (3, q(-1))]));
        assert_eq!(p.complex, build_k(2, 6).unwrap().complex);
        assert!(certify_boundary(&p.complex, e));
    }

    #[test]
    fn level_counterexample() {
        let r = verify_counterexample_level(3, 1, 1, 64).unwrap();
        assert_eq!(r.g, vec![1, 2, 3, 1]);
        assert_eq!(r.socle, Some(vec![0, 0, 1, 1]));
        assert!(r.holds());
        assert!(matches!(
            verify_counterexample_level(4, 1, 1, 8),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn support_counterexample() {
        let r = verify_counterexample_support(1).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.stress_dim, Some(1));
        assert_eq!(r.unsupported_faces, 27);
        assert_eq!(r.derivative_span, Some(2));
        assert_eq!(r.g_u_minus_1, 3);
        assert_eq!(r.operator_equations, 7);
    }
}
