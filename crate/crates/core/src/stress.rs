//! Affine stresses: face-supported polynomials killed by the derivative
//! operators of the coordinate forms and of the all-ones form.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{positions, SimplicialComplex, Vertex};
use crate::enumeration::InvariantVectors;
use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::sequences::{Condition, Failure, SequenceVerdict};

/// Half-width of the range generic coordinates are drawn from.
pub const GENERIC_RANGE: i64 = 1 << 20;

/// A monomial, stored as `(vertex, exponent)` pairs sorted by vertex.
///
/// Ordered by degree, then lexicographically by exponent along increasing
/// vertex labels (a larger exponent on a smaller label sorts later).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Vertex, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Vertex) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Build from arbitrary `(vertex, exponent)` pairs; zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Vertex, u32)>) -> Self {
        let mut map: BTreeMap<Vertex, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Vertex) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn pairs(&self) -> &[(Vertex, u32)] {
        &self.0
    }

    pub fn support(&self) -> Vec<Vertex> {
        self.0.iter().map(|&(v, _)| v).collect()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    /// `∂_μ self = coef · self/μ`, or `None` when `μ` does not divide.
    pub fn derivative(&self, mu: &Monomial) -> Option<(BigInt, Monomial)> {
        let mut coef = BigInt::one();
        let mut out = Vec::new();
        for &(v, e) in &self.0 {
            let s = mu.exponent(v);
            if s > e {
                return None;
            }
            for t in 0..s {
                coef *= e - t;
            }
            if e > s {
                out.push((v, e - s));
            }
        }
        if mu.0.iter().any(|&(v, _)| self.exponent(v) == 0) {
            return None;
        }
        Some((coef, Monomial(out)))
    }

    /// Dense exponent vector over `vertices`.
    pub fn dense(&self, vertices: &[Vertex]) -> Vec<u32> {
        vertices.iter().map(|&v| self.exponent(v)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => {
                                a.next();
                                b.next();
                            }
                            o => return o,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("x{v}")
                } else {
                    format!("x{v}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A linear form `Σ ℓ_v x_v`.
pub type LinearForm = BTreeMap<Vertex, BigRational>;

/// A homogeneous polynomial of fixed degree with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StressPolynomial {
    pub degree: usize,
    pub terms: BTreeMap<Monomial, BigRational>,
}

impl StressPolynomial {
    pub fn zero(degree: usize) -> Self {
        StressPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero(0);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.times(n), a * b);
            }
        }
        out
    }

    /// Linear polynomial `Σ ℓ_v x_v`.
    pub fn linear(form: &LinearForm) -> Self {
        let mut out = Self::zero(1);
        for (&v, c) in form {
            out.add_term(Monomial::var(v), c.clone());
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(BigRational::one()), |acc, _| acc.mul(self))
    }

    /// `∂_μ`; the degree drops by `deg μ` (saturating at zero).
    pub fn derivative(&self, mu: &Monomial) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(mu.degree() as usize));
        // m -> m / mu is injective, so no two terms collide
        for (m, c) in &self.terms {
            if let Some((k, rest)) = m.derivative(mu) {
                out.terms.insert(rest, c * k);
            }
        }
        out
    }

    /// `∂_ℓ = Σ ℓ_v ∂_{x_v}`.
    pub fn apply_form(&self, form: &LinearForm) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (&v, l) in form {
            let d = self.derivative(&Monomial::var(v));
            for (m, c) in d.terms {
                out.add_term(m, c * l);
            }
        }
        out
    }

    /// Whether every monomial is supported on a face.
    pub fn is_face_supported(&self, c: &SimplicialComplex) -> bool {
        self.terms
            .keys()
            .all(|m| m.degree() == 0 || c.contains_face(&m.support()))
    }

    /// Face support and all operator equations, checked exactly.
    pub fn is_stress(&self, c: &SimplicialComplex, e: &Embedding) -> bool {
        self.is_face_supported(c) && theta_forms(e).iter().all(|f| self.apply_form(f).is_zero())
    }

    /// Faces participating in the polynomial: every nonempty subset of a
    /// monomial's support.
    pub fn support_faces(&self) -> BTreeSet<Vec<Vertex>> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            let s = m.support();
            for mask in 1u32..(1 << s.len()) {
                out.insert(positions(mask as u128).map(|i| s[i]).collect());
            }
        }
        out
    }

    /// Whether the face `tau` participates.
    pub fn participates(&self, tau: &[Vertex]) -> bool {
        self.terms
            .keys()
            .any(|m| tau.iter().all(|&v| m.exponent(v) > 0))
    }
}

impl fmt::Display for StressPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| format!("({c})*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingKind {
    Generic,
    Natural,
}

/// Vertex coordinates in `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub coords: BTreeMap<Vertex, Vec<BigRational>>,
    pub kind: EmbeddingKind,
    pub seed: Option<u64>,
}

impl Embedding {
    /// Integer coordinates drawn uniformly from `[-2^20, 2^20]`.
    pub fn generic(c: &SimplicialComplex, seed: u64) -> Self {
        Self::generic_in(c.vertices(), c.rank(), seed)
    }

    pub fn generic_in(vertices: &[Vertex], d: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coords = vertices
            .iter()
            .map(|&v| {
                let p = (0..d)
                    .map(|_| {
                        BigRational::from_integer(
                            rng.gen_range(-GENERIC_RANGE..=GENERIC_RANGE).into(),
                        )
                    })
                    .collect();
                (v, p)
            })
            .collect();
        Embedding {
            coords,
            kind: EmbeddingKind::Generic,
            seed: Some(seed),
        }
    }

    /// Given coordinates; every vertex needs exactly `dim + 1` of them.
    pub fn natural(
        c: &SimplicialComplex,
        coords: BTreeMap<Vertex, Vec<BigRational>>,
    ) -> Result<Self> {
        let d = c.rank();
        for &v in c.vertices() {
            match coords.get(&v) {
                None => return Err(Error::Embedding(format!("no coordinates for vertex {v}"))),
                Some(p) if p.len() != d => {
                    return Err(Error::Embedding(format!(
                        "vertex {v} has {} coordinates, expected {d}",
                        p.len()
                    )))
                }
                _ => {}
            }
        }
        let coords = coords
            .into_iter()
            .filter(|(v, _)| c.index_of(*v).is_some())
            .collect();
        Ok(Embedding {
            coords,
            kind: EmbeddingKind::Natural,
            seed: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.values().next().map_or(0, |p| p.len())
    }

    /// Coordinates of the given vertices only.
    pub fn restricted(&self, vertices: &[Vertex]) -> Self {
        let coords = vertices
            .iter()
            .filter_map(|v| self.coords.get(v).map(|p| (*v, p.clone())))
            .collect();
        Embedding {
            coords,
            kind: self.kind,
            seed: self.seed,
        }
    }
}

/// Heights `b_u` in the cone check stay small so that the base coordinates
/// `a_u / b_u` share a small common denominator.
pub const CONE_HEIGHT_RANGE: i64 = 9;

/// The second seed of the rank-stability certificate.
pub fn companion_seed(seed: u64) -> u64 {
    seed ^ 0x9E37_79B9_7F4A_7C15
}

/// `θ_1, …, θ_d` followed by `c = Σ x_v`.
pub fn theta_forms(e: &Embedding) -> Vec<LinearForm> {
    let d = e.dim();
    let mut forms: Vec<LinearForm> = (0..d)
        .map(|j| {
            e.coords
                .iter()
                .filter(|(_, p)| !p[j].is_zero())
                .map(|(&v, p)| (v, p[j].clone()))
                .collect()
        })
        .collect();
    forms.push(e.coords.keys().map(|&v| (v, BigRational::one())).collect());
    forms
}

/// All monomials of degree `k` supported on a face, in increasing order.
pub fn face_monomials(c: &SimplicialComplex, k: usize) -> Vec<Monomial> {
    if k == 0 {
        return vec![Monomial::one()];
    }
    let mut out = Vec::new();
    for layer in c.faces_by_size().iter().skip(1).take(k) {
        for &f in layer {
            let labels = c.labels(f);
            compositions(k as u32, labels.len(), &mut Vec::new(), &mut |parts| {
                out.push(Monomial(
                    labels.iter().copied().zip(parts.iter().copied()).collect(),
                ));
            });
        }
    }
    out.sort();
    out
}

fn compositions(total: u32, parts: usize, acc: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if parts == 1 {
        acc.push(total);
        emit(acc);
        acc.pop();
        return;
    }
    for first in 1..=total.saturating_sub(parts as u32 - 1) {
        acc.push(first);
        compositions(total - first, parts - 1, acc, emit);
        acc.pop();
    }
}

/// A basis of the degree-`k` affine stresses, reduced so that basis vector
/// `t` is 1 on `columns[free[t]]` and 0 on the other free monomials.
#[derive(Clone, Debug)]
pub struct StressBasis<'a> {
    pub complex: &'a SimplicialComplex,
    pub embedding: &'a Embedding,
    pub degree: usize,
    pub columns: Vec<Monomial>,
    pub free: Vec<usize>,
    pub basis: Vec<StressPolynomial>,
}

impl StressBasis<'_> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a stress of this degree in the reduced basis.
    pub fn coordinates(&self, s: &StressPolynomial) -> Vec<BigRational> {
        self.free
            .iter()
            .map(|&f| s.coefficient(&self.columns[f]))
            .collect()
    }

    /// `Σ_t a_t basis_t`.
    pub fn combine(&self, a: &[BigRational]) -> StressPolynomial {
        self.basis
            .iter()
            .zip(a)
            .fold(StressPolynomial::zero(self.degree), |acc, (b, x)| {
                acc.add(&b.scale(x))
            })
    }
}

/// Rows of the operator system in degree `k` over the given columns.
fn stress_rows(
    c: &SimplicialComplex,
    e: &Embedding,
    k: usize,
    columns: &[Monomial],
) -> Vec<SparseRow> {
    let index: HashMap<&Monomial, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let forms = theta_forms(e);
    let mut rows = Vec::new();
    for nu in face_monomials(c, k - 1) {
        // columns nu * x_v that are face-supported, with factor (nu_v + 1)
        let targets: Vec<(Vertex, usize, i64)> = c
            .vertices()
            .iter()
            .filter_map(|&v| {
                let m = nu.times(&Monomial::var(v));
                index
                    .get(&m)
                    .map(|&col| (v, col, nu.exponent(v) as i64 + 1))
            })
            .collect();
        for form in &forms {
            let row: SparseRow = targets
                .iter()
                .filter_map(|&(v, col, mult)| {
                    form.get(&v)
                        .map(|l| (col, l * BigRational::from_integer(mult.into())))
                })
                .collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rows
}

/// Exact basis of the degree-`k` affine stresses of `(c, e)`. Degree 0 gives
/// the constants.
pub fn stress_space<'a>(
    c: &'a SimplicialComplex,
    e: &'a Embedding,
    k: usize,
) -> Result<StressBasis<'a>> {
    if e.dim() != c.rank() {
        return Err(Error::Embedding(format!(
            "embedding has {} coordinates, complex needs {}",
            e.dim(),
            c.rank()
        )));
    }
    if let Some(v) = c.vertices().iter().find(|v| !e.coords.contains_key(v)) {
        return Err(Error::Embedding(format!("no coordinates for vertex {v}")));
    }
    let columns = face_monomials(c, k);
    if k == 0 {
        return Ok(StressBasis {
            complex: c,
            embedding: e,
            degree: 0,
            columns,
            free: vec![0],
            basis: vec![StressPolynomial::constant(BigRational::one())],
        });
    }
    let rows = stress_rows(c, e, k, &columns);
    let ker = linalg::kernel(&rows, columns.len())?;
    let basis = ker
        .basis
        .iter()
        .map(|v| {
            let mut p = StressPolynomial::zero(k);
            for (m, x) in columns.iter().zip(v) {
                if !x.is_zero() {
                    p.terms.insert(m.clone(), x.clone());
                }
            }
            p
        })
        .collect();
    Ok(StressBasis {
        complex: c,
        embedding: e,
        degree: k,
        columns,
        free: ker.free,
        basis,
    })
}

/// Stress dimensions for `k = 1..=⌊d/2⌋`.
pub fn stress_dims(c: &SimplicialComplex, e: &Embedding) -> Result<Vec<usize>> {
    (1..=c.rank() / 2)
        .map(|k| stress_space(c, e, k).map(|b| b.dim()))
        .collect()
}

/// Stress dimensions under two generic embeddings; disagreement is reported
/// as a degenerate embedding.
pub fn certified_generic_dims(
    c: &SimplicialComplex,
    seed: u64,
    degrees: &[usize],
) -> Result<Vec<usize>> {
    let e1 = Embedding::generic(c, seed);
    let e2 = Embedding::generic(c, companion_seed(seed));
    let first: Vec<usize> = degrees
        .iter()
        .map(|&k| stress_space(c, &e1, k).map(|b| b.dim()))
        .collect::<Result<_>>()?;
    let second: Vec<usize> = degrees
        .iter()
        .map(|&k| stress_space(c, &e2, k).map(|b| b.dim()))
        .collect::<Result<_>>()?;
    if first != second {
        return Err(Error::DegenerateEmbedding { first, second });
    }
    Ok(first)
}

/// Rank of `{∂_{x_v} ω : ω ∈ upper, v}` inside the lower stress space. Only
/// the coefficients at the lower free monomials are needed:
/// `(∂_v ω)[μ] = (μ_v + 1) ω[μ x_v]`.
fn derivative_rank(upper: &StressBasis, lower: &StressBasis) -> usize {
    let mut rows = Vec::new();
    for w in &upper.basis {
        for &v in upper.complex.vertices() {
            let x = Monomial::var(v);
            let row: Vec<BigRational> = lower
                .free
                .iter()
                .map(|&f| {
                    let mu = &lower.columns[f];
                    let c = w.coefficient(&mu.times(&x));
                    c * BigInt::from(mu.exponent(v) + 1)
                })
                .collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        0
    } else {
        linalg::rank(&rows)
    }
}

/// `dim span{∂_{x_v} ω : ω ∈ S_{k+1}, v ∈ V}`.
pub fn derivative_span_dim(c: &SimplicialComplex, e: &Embedding, k: usize) -> Result<usize> {
    let upper = stress_space(c, e, k + 1)?;
    let lower = stress_space(c, e, k)?;
    Ok(derivative_rank(&upper, &lower))
}

/// `dim S_k - dim span{∂_{x_v} S_{k+1}}` for `k = 0..=⌊d/2⌋`. Above
/// `⌊d/2⌋` the stress spaces vanish, so the top entry is `dim S_{⌊d/2⌋}`.
pub fn socle_dims(c: &SimplicialComplex, e: &Embedding) -> Result<Vec<usize>> {
    let spaces: Vec<StressBasis> = (0..=c.rank() / 2)
        .map(|k| stress_space(c, e, k))
        .collect::<Result<_>>()?;
    Ok(socle_from(&spaces))
}

/// Socle dimensions in degrees `k < below`; needs only `S_0, …, S_below`.
pub fn socle_dims_below(c: &SimplicialComplex, e: &Embedding, below: usize) -> Result<Vec<usize>> {
    let spaces: Vec<StressBasis> = (0..=below)
        .map(|k| stress_space(c, e, k))
        .collect::<Result<_>>()?;
    let mut socle = socle_from(&spaces);
    socle.truncate(below);
    Ok(socle)
}

/// Socle dimensions from the stress spaces of degrees `0..=top`.
pub fn socle_from(spaces: &[StressBasis]) -> Vec<usize> {
    let top = spaces.len().saturating_sub(1);
    (0..spaces.len())
        .map(|k| {
            let span = if k < top {
                derivative_rank(&spaces[k + 1], &spaces[k])
            } else {
                0
            };
            spaces[k].dim() - span
        })
        .collect()
}

/// Level up to `up_to`: the socle vanishes in every degree below it.
pub fn is_level(c: &SimplicialComplex, e: &Embedding, up_to: usize) -> Result<SequenceVerdict> {
    if up_to > c.rank() / 2 {
        return Err(Error::InvalidParameter(format!(
            "up_to = {up_to} exceeds ⌊d/2⌋ = {}",
            c.rank() / 2
        )));
    }
    let socle = socle_dims(c, e)?;
    let failures: Vec<Failure> = socle
        .iter()
        .enumerate()
        .take(up_to)
        .filter(|(_, &s)| s > 0)
        .map(|(k, &s)| Failure {
            condition: Condition::Socle,
            witness: vec![k],
            detail: format!("socle of dimension {s} in degree {k} < {up_to}"),
        })
        .collect();
    Ok(SequenceVerdict {
        holds: failures.is_empty(),
        failures,
    })
}

/// Small deterministic weights for generic combinations of basis vectors.
fn weights(n: usize) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    (0..n)
        .map(|_| BigRational::from_integer(rng.gen_range(1i64..=1000).into()))
        .collect()
}

/// A stress on `st(τ)` in which every face of `τ` of size at most `i`
/// participates. `Ok(None)` when no basis combination achieves this.
pub fn star_stress_witness(
    c: &SimplicialComplex,
    e: &Embedding,
    tau: &[Vertex],
    i: usize,
) -> Result<Option<StressPolynomial>> {
    let d = c.rank();
    let k = tau.len();
    if k == 0 || k >= d || 2 * i > d - k || i == 0 {
        return Err(Error::Hypothesis(format!(
            "need 1 <= |τ| = {k} < d = {d} and 1 <= i = {i} <= (d-|τ|)/2"
        )));
    }
    let link = c.link(tau)?;
    if InvariantVectors::of(&link)?.g_at(i) < 1 {
        return Ok(None);
    }
    let star = c.star(tau)?;
    let es = e.restricted(star.vertices());
    let basis = stress_space(&star, &es, i)?;
    if basis.dim() == 0 {
        return Ok(None);
    }
    let mut subsets = Vec::new();
    for mask in 1u32..(1 << k) {
        if mask.count_ones() as usize <= i {
            subsets.push(positions(mask as u128).map(|j| tau[j]).collect::<Vec<_>>());
        }
    }
    let good = |w: &StressPolynomial| subsets.iter().all(|s| w.participates(s));
    let candidate = basis.combine(&weights(basis.dim()));
    if good(&candidate) {
        return Ok(Some(candidate));
    }
    Ok(basis.basis.iter().find(|w| good(w)).cloned())
}

/// Outcome of the cone-lift check for one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeLiftReport {
    pub degree: usize,
    pub dim_base: usize,
    pub dim_cone: usize,
    /// Per basis stress of the base: a cone stress restricts to it.
    pub lifted: Vec<bool>,
    /// Per basis stress: the lift's support is `skel_{i-1}(apex * supp)`.
    pub support_matches: Vec<bool>,
}

impl ConeLiftReport {
    pub fn holds(&self) -> bool {
        self.dim_cone >= self.dim_base
            && self.lifted.iter().all(|&x| x)
            && self.support_matches.iter().all(|&x| x)
    }
}

/// Draw `a_u ∈ Q^{d-1}`, `b_u`, embed the base by `a_u / b_u` and the cone
/// by `(a_u, b_u)` with the apex at the origin, and check that every degree-`i`
/// stress of the base is the apex-free part of a cone stress, rescaled by
/// `x_u ↦ x_u / b_u`, with the predicted support.
pub fn cone_lift_check(base: &SimplicialComplex, i: usize, seed: u64) -> Result<ConeLiftReport> {
    let d1 = base.rank();
    let apex = base.vertices().last().copied().unwrap_or(0) + 1;
    let cone = base.cone(apex)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p_base = BTreeMap::new();
    let mut p_cone = BTreeMap::new();
    let mut b_of = BTreeMap::new();
    for &u in base.vertices() {
        let a: Vec<BigInt> = (0..d1)
            .map(|_| rng.gen_range(-GENERIC_RANGE..=GENERIC_RANGE).into())
            .collect();
        let mut b: i64 = 0;
        while b == 0 {
            b = rng.gen_range(-CONE_HEIGHT_RANGE..=CONE_HEIGHT_RANGE);
        }
        let b = BigInt::from(b);
        p_base.insert(
            u,
            a.iter()
                .map(|x| BigRational::new(x.clone(), b.clone()))
                .collect::<Vec<_>>(),
        );
        let mut full: Vec<BigRational> = a.into_iter().map(BigRational::from_integer).collect();
        full.push(BigRational::from_integer(b.clone()));
        p_cone.insert(u, full);
        b_of.insert(u, b);
    }
    p_cone.insert(apex, vec![BigRational::zero(); d1 + 1]);
    let e_base = Embedding {
        coords: p_base,
        kind: EmbeddingKind::Generic,
        seed: Some(seed),
    };
    let e_cone = Embedding {
        coords: p_cone,
        kind: EmbeddingKind::Generic,
        seed: Some(seed),
    };
    let sb = stress_space(base, &e_base, i)?;
    let sc = stress_space(&cone, &e_cone, i)?;

    let base_monos = face_monomials(base, i);
    let cols: Vec<Vec<BigRational>> = sc
        .basis
        .iter()
        .map(|w| base_monos.iter().map(|m| w.coefficient(m)).collect())
        .collect();
    let mut lifted = Vec::new();
    let mut support_matches = Vec::new();
    for w in &sb.basis {
        let target: Vec<BigRational> = base_monos
            .iter()
            .map(|m| {
                let bpow = m
                    .pairs()
                    .iter()
                    .fold(BigInt::one(), |acc, &(v, e)| acc * b_of[&v].pow(e));
                w.coefficient(m) / BigRational::from_integer(bpow)
            })
            .collect();
        match linalg::solve_columns(&cols, &target) {
            Some(x) => {
                lifted.push(true);
                let lift = sc.combine(&x);
                let mut expect = BTreeSet::new();
                for f in w.support_faces() {
                    if f.len() < i {
                        let mut g = f.clone();
                        g.push(apex);
                        expect.insert(g);
                    }
                    expect.insert(f);
                }
                expect.insert(vec![apex]);
                support_matches.push(lift.support_faces() == expect);
            }
            None => {
                lifted.push(false);
                support_matches.push(false);
            }
        }
    }
    Ok(ConeLiftReport {
        degree: i,
        dim_base: sb.dim(),
        dim_cone: sc.dim(),
        lifted,
        support_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(d: usize) -> SimplicialComplex {
        SimplicialComplex::boundary_simplex(d).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        bs(1).join(&bs(1)).join(&bs(1))
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn monomial_algebra() {
        let m = Monomial::from_pairs([(1, 2), (3, 1)]);
        assert_eq!(m.degree(), 3);
        assert_eq!(
            m.derivative(&Monomial::var(1)),
            Some((2.into(), Monomial::from_pairs([(1, 1), (3, 1)])))
        );
        assert_eq!(m.derivative(&Monomial::var(2)), None);
        assert_eq!(m.derivative(&Monomial::one()), Some((1.into(), m.clone())));
        assert!(Monomial::from_pairs([(1, 2)]) > Monomial::from_pairs([(1, 1), (2, 1)]));
        assert!(Monomial::from_pairs([(1, 1), (2, 1)]) > Monomial::from_pairs([(2, 2)]));
        assert_eq!(m.dense(&[1, 2, 3]), vec![2, 0, 1]);
    }

    #[test]
    fn face_monomial_counts() {
        // cross-polytope in dimension 6 (d = 6), degree 3: 12 + 60*2 + 160
        let cross6 = (1..6).fold(bs(1), |a, _| a.join(&bs(1)));
        assert_eq!(face_monomials(&cross6, 3).len(), 292);
        let c4 = SimplicialComplex::cycle(4).unwrap();
        assert_eq!(face_monomials(&c4, 2).len(), 4 + 4);
    }

    #[test]
    fn theta_of_small_embedding() {
        let pt = SimplicialComplex::from_facets([[7]]).unwrap();
        let e = Embedding::natural(&pt, BTreeMap::from([(7, vec![q(3)])])).unwrap();
        let forms = theta_forms(&e);
        assert_eq!(forms.len(), 2);
        assert_eq!(forms[0], BTreeMap::from([(7, q(3))]));
        assert_eq!(forms[1], BTreeMap::from([(7, q(1))]));
        let g = Embedding::generic(&octahedron(), 1);
        let forms = theta_forms(&g);
        assert_eq!(forms.len(), 4);
        assert!(forms.iter().all(|f| f.len() == 6));
    }

    #[test]
    fn octahedron_stresses() {
        let oct = octahedron();
        let e1 = Embedding::generic(&oct, 1);
        let s = stress_space(&oct, &e1, 1).unwrap();
        assert_eq!(s.dim(), 2);
        for w in &s.basis {
            assert!(w.is_stress(&oct, &e1));
        }
        assert_eq!(certified_generic_dims(&oct, 2, &[1]).unwrap(), vec![2]);
        assert_eq!(
            stress_space(&bs(3), &Embedding::generic(&bs(3), 9), 1)
                .unwrap()
                .dim(),
            0
        );
        let k0 = stress_space(&oct, &e1, 0).unwrap();
        assert_eq!(k0.dim(), 1);
    }

    #[test]
    fn derivatives_of_stresses_are_stresses() {
        let k24 = bs(2).join(&bs(2)).join(&bs(1));
        let e = Embedding::generic(&k24, 3);
        let s2 = stress_space(&k24, &e, 2).unwrap();
        assert_eq!(s2.dim(), 2);
        let s1 = stress_space(&k24, &e, 1).unwrap();
        assert_eq!(s1.dim(), 2);
        for w in &s2.basis {
            for &v in k24.vertices() {
                let d = w.derivative(&Monomial::var(v));
                assert!(d.is_stress(&k24, &e));
                // coordinates in the reduced basis reproduce the derivative
                assert_eq!(s1.combine(&s1.coordinates(&d)), d);
            }
            assert_eq!(&w.derivative(&Monomial::one()), w);
        }
        let lin = &s1.basis[0];
        let c = lin.derivative(&Monomial::var(
            lin.terms.keys().next().unwrap().support()[0],
        ));
        assert_eq!(c.degree, 0);
    }

    #[test]
    fn socles_and_levelness() {
        let k24 = bs(2).join(&bs(2)).join(&bs(1));
        let e = Embedding::generic(&k24, 5);
        assert_eq!(socle_dims(&k24, &e).unwrap(), vec![0, 0, 2]);
        assert!(is_level(&k24, &e, 2).unwrap().holds);
        let oct = octahedron();
        let e = Embedding::generic(&oct, 5);
        // top degree ⌊d/2⌋ = 1 carries the whole of A_1
        assert_eq!(socle_dims(&oct, &e).unwrap(), vec![0, 2]);
        let s3 = bs(3);
        assert!(is_level(&s3, &Embedding::generic(&s3, 1), 0).unwrap().holds);
    }

    #[test]
    fn star_witnesses() {
        let oct = octahedron();
        let e = Embedding::generic(&oct, 11);
        let w = star_stress_witness(&oct, &e, &[1], 1).unwrap().unwrap();
        assert!(w.is_stress(&oct, &e));
        assert!(w.participates(&[1]));
        let star = oct.star(&[1]).unwrap();
        assert!(w.terms.keys().all(|m| star.contains_face(&m.support())));

        let k24 = bs(2).join(&bs(2)).join(&bs(1));
        let e = Embedding::generic(&k24, 11);
        let w = star_stress_witness(&k24, &e, &[1], 2).unwrap().unwrap();
        assert!(w.is_stress(&k24, &e));
        assert!(matches!(
            star_stress_witness(&k24, &e, &[1, 4], 2),
            Err(Error::Hypothesis(_))
        ));

        let s4 = bs(4);
        assert_eq!(
            star_stress_witness(&s4, &Embedding::generic(&s4, 1), &[1], 1).unwrap(),
            None
        );
    }

    #[test]
    fn cone_lifts() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let r = cone_lift_check(&c4, 1, 7).unwrap();
        assert_eq!(r.dim_base, 1);
        assert!(r.holds(), "{r:?}");
        let r = cone_lift_check(&bs(2), 1, 7).unwrap();
        assert_eq!(r.dim_base, 0);
        assert!(r.holds());
    }
}
