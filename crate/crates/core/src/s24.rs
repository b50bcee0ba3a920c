//! 4-spheres without missing faces of dimension above 2: admissible
//! contractions, induced copies of `∂σ²*∂σ²`, splitting, and the lower bound
//! `g_2 >= (2/5) f_0 - 6/5`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::complex::{SimplicialComplex, Vertex};
use crate::enumeration::InvariantVectors;
use crate::error::{Error, Result};

/// `g_2` of the suspension of `∂σ²*∂σ²`.
pub const G2_SUSPENDED_GAMMA: i64 = 2;

fn g(c: &SimplicialComplex, i: usize) -> Result<i64> {
    Ok(InvariantVectors::of(c)?.g_at(i))
}

/// Fails unless `c` is a 4-dimensional complex with every missing face of
/// dimension at most 2.
pub fn require_s24(c: &SimplicialComplex) -> Result<()> {
    if c.dim() != 4 || !c.in_class_s(2) {
        return Err(Error::ClassViolation(format!(
            "expected a 4-sphere in S(2,4), got dim {} with max missing dim {:?}",
            c.dim(),
            c.max_missing_dim()
        )));
    }
    Ok(())
}

/// Edges whose contraction passes the link condition and stays in `S(2,4)`.
pub fn admissible_contractions(c: &SimplicialComplex) -> Result<Vec<[Vertex; 2]>> {
    require_s24(c)?;
    let mut out = Vec::new();
    for e in c.faces_of_dim(1) {
        if let Ok(next) = c.contract_edge(e[0], e[1]) {
            if next.in_class_s(2) {
                out.push([e[0], e[1]]);
            }
        }
    }
    Ok(out)
}

/// `(g_2 before, g_2 after, g_1(lk e))` for a contractible edge.
pub fn contraction_identity_check(
    c: &SimplicialComplex,
    e: [Vertex; 2],
) -> Result<(i64, i64, i64)> {
    let after = c.contract_edge(e[0], e[1])?;
    Ok((g(c, 2)?, g(&after, 2)?, g(&c.link(&e)?, 1)?))
}

/// An induced copy of `∂σ²*∂σ²` on six vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedGamma {
    pub subset: Vec<Vertex>,
    pub triangles: [Vec<Vertex>; 2],
    /// Vertex counts of the components of the complement.
    pub component_sizes: Vec<usize>,
}

impl InducedGamma {
    /// Every complementary component has at least two vertices.
    pub fn violates_reduced(&self) -> bool {
        self.component_sizes.iter().all(|&s| s >= 2)
    }
}

fn join_of_boundaries(a: &[Vertex], b: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in b {
            let mut f: Vec<Vertex> = a
                .iter()
                .chain(b)
                .copied()
                .filter(|&v| v != x && v != y)
                .collect();
            f.sort();
            out.insert(f);
        }
    }
    out
}

fn induces_gamma(c: &SimplicialComplex, t1: &[Vertex], t2: &[Vertex]) -> Result<bool> {
    let mut w: Vec<Vertex> = t1.iter().chain(t2).copied().collect();
    w.sort();
    let ind = c.induced(&w)?;
    Ok(ind.facets().into_iter().collect::<BTreeSet<_>>() == join_of_boundaries(t1, t2))
}

/// All 6-subsets inducing `∂σ²*∂σ²`, found as pairs of disjoint missing
/// 2-faces.
pub fn find_induced_gamma(c: &SimplicialComplex) -> Result<Vec<InducedGamma>> {
    require_s24(c)?;
    let triangles: Vec<Vec<Vertex>> = c
        .missing_faces()
        .into_iter()
        .map(|f| f.vertex_set)
        .filter(|s| s.len() == 3)
        .collect();
    let mut out = Vec::new();
    for (i, t1) in triangles.iter().enumerate() {
        for t2 in &triangles[i + 1..] {
            if t1.iter().any(|v| t2.contains(v)) || !induces_gamma(c, t1, t2)? {
                continue;
            }
            let mut subset: Vec<Vertex> = t1.iter().chain(t2).copied().collect();
            subset.sort();
            let rest: Vec<Vertex> = c
                .vertices()
                .iter()
                .copied()
                .filter(|v| !subset.contains(v))
                .collect();
            let mut component_sizes = if rest.is_empty() {
                Vec::new()
            } else {
                c.induced(&rest)?
                    .components()
                    .iter()
                    .map(|x| x.len())
                    .collect()
            };
            component_sizes.sort();
            out.push(InducedGamma {
                subset,
                triangles: [t1.clone(), t2.clone()],
                component_sizes,
            });
        }
    }
    Ok(out)
}

/// One applied reduction move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionMove {
    pub edge: [Vertex; 2],
    pub g2_before: i64,
    pub g2_after: i64,
    pub g1_link: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub admissible_edges: Vec<[Vertex; 2]>,
    pub induced_gammas: Vec<InducedGamma>,
    pub reduced: bool,
    pub trace: Vec<ContractionMove>,
    #[serde(skip)]
    pub result: SimplicialComplex,
}

/// Reduced-ness of `c` without modifying it.
pub fn analyze(c: &SimplicialComplex) -> Result<ReductionReport> {
    let admissible_edges = admissible_contractions(c)?;
    let induced_gammas = find_induced_gamma(c)?;
    let reduced =
        admissible_edges.is_empty() && !induced_gammas.iter().any(InducedGamma::violates_reduced);
    Ok(ReductionReport {
        admissible_edges,
        induced_gammas,
        reduced,
        trace: Vec::new(),
        result: c.clone(),
    })
}

/// Apply admissible contractions (lexicographically first edge each time)
/// until none remain, then analyze the result.
pub fn reduce(c: &SimplicialComplex) -> Result<ReductionReport> {
    let mut cur = c.clone();
    let mut trace = Vec::new();
    loop {
        let edges = admissible_contractions(&cur)?;
        let Some(&edge) = edges.first() else { break };
        let (g2_before, g2_after, g1_link) = contraction_identity_check(&cur, edge)?;
        trace.push(ContractionMove {
            edge,
            g2_before,
            g2_after,
            g1_link,
        });
        cur = cur.contract_edge(edge[0], edge[1])?;
    }
    let mut report = analyze(&cur)?;
    report.trace = trace;
    Ok(report)
}

/// The two capped sides of a split along `Γ`.
#[derive(Clone, Debug)]
pub struct Split {
    pub sides: [SimplicialComplex; 2],
    /// Facets of `c` on each side before capping.
    pub parts: [Vec<Vec<Vertex>>; 2],
    pub cone_vertices: [Vertex; 2],
    pub g2: i64,
    pub g2_sides: [i64; 2],
}

impl Split {
    /// `g_2(Δ) = g_2(Δ_1) + g_2(Δ_2) - g_2(ΣΓ)`.
    pub fn additivity_holds(&self) -> bool {
        self.g2 == self.g2_sides[0] + self.g2_sides[1] - G2_SUSPENDED_GAMMA
    }
}

/// Cut `c` along the induced `∂σ²*∂σ²` on `subset` and cap both sides with a
/// cone over it.
pub fn split_along_gamma(c: &SimplicialComplex, subset: &[Vertex]) -> Result<Split> {
    require_s24(c)?;
    let mut w = subset.to_vec();
    w.sort();
    w.dedup();
    let gamma = find_induced_gamma(c)?
        .into_iter()
        .find(|g| g.subset == w)
        .ok_or_else(|| Error::NotGamma(subset.to_vec()))?;
    let facets = c.facets();
    let in_w = |f: &[Vertex]| f.iter().all(|v| w.contains(v));
    let mut by_ridge: BTreeMap<Vec<Vertex>, Vec<usize>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for x in f {
            let r: Vec<Vertex> = f.iter().copied().filter(|v| v != x).collect();
            if !in_w(&r) {
                by_ridge.entry(r).or_default().push(i);
            }
        }
    }
    let mut class = vec![usize::MAX; facets.len()];
    let mut count = 0;
    for s in 0..facets.len() {
        if class[s] != usize::MAX {
            continue;
        }
        class[s] = count;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for x in &facets[i] {
                let r: Vec<Vertex> = facets[i].iter().copied().filter(|v| v != x).collect();
                for &j in by_ridge.get(&r).into_iter().flatten() {
                    if class[j] == usize::MAX {
                        class[j] = count;
                        stack.push(j);
                    }
                }
            }
        }
        count += 1;
    }
    if count != 2 {
        return Err(Error::NonSeparating(count));
    }
    let parts: [Vec<Vec<Vertex>>; 2] = [0, 1].map(|k| {
        facets
            .iter()
            .zip(&class)
            .filter(|(_, &c)| c == k)
            .map(|(f, _)| f.clone())
            .collect()
    });
    let sizes: Vec<usize> = parts
        .iter()
        .map(|p| {
            p.iter()
                .flatten()
                .filter(|v| !w.contains(v))
                .collect::<BTreeSet<_>>()
                .len()
        })
        .collect();
    if sizes.iter().any(|&s| s < 2) {
        return Err(Error::SplitRefused(sizes));
    }
    let top = *c.vertices().last().unwrap();
    let cone_vertices = [top + 1, top + 2];
    let [t1, t2] = &gamma.triangles;
    let cap = join_of_boundaries(t1, t2);
    let sides = [0, 1].map(|k| {
        let mut fs = parts[k].clone();
        fs.extend(cap.iter().map(|f| {
            let mut f = f.clone();
            f.push(cone_vertices[k]);
            f
        }));
        SimplicialComplex::from_facets(fs)
    });
    let [s1, s2] = sides;
    let sides = [s1?, s2?];
    Ok(Split {
        g2: g(c, 2)?,
        g2_sides: [g(&sides[0], 2)?, g(&sides[1], 2)?],
        sides,
        parts,
        cone_vertices,
    })
}

/// Stellar subdivision of `face` with a new vertex `max + 1`.
pub fn stellar_subdivision(c: &SimplicialComplex, face: &[Vertex]) -> Result<SimplicialComplex> {
    if !c.contains_face(face) || face.is_empty() {
        return Err(Error::NotAFace(face.to_vec()));
    }
    let fresh = c.vertices().last().unwrap() + 1;
    let mut out = Vec::new();
    for f in c.facets() {
        if face.iter().all(|v| f.contains(v)) {
            for x in face {
                let mut g: Vec<Vertex> = f.iter().copied().filter(|v| v != x).collect();
                g.push(fresh);
                out.push(g);
            }
        } else {
            out.push(f);
        }
    }
    SimplicialComplex::from_facets(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainBound {
    pub f0: i64,
    pub g2: i64,
    /// `(2/5) f_0 - 6/5` as `p/q`.
    pub bound: String,
    pub holds: bool,
    pub tight: bool,
    /// `f_0 / 4` as `p/q`.
    pub weak_bound: String,
    pub weak_holds: bool,
}

/// `g_2 >= (2/5) f_0 - 6/5` and `g_2 >= f_0/4`, in exact arithmetic.
pub fn verify_theorem_main_s24(c: &SimplicialComplex) -> Result<MainBound> {
    require_s24(c)?;
    let inv = InvariantVectors::of(c)?;
    let (f0, g2) = (inv.f0(), inv.g_at(2));
    let lhs = BigRational::from_integer(BigInt::from(g2));
    let bound = BigRational::new(BigInt::from(2 * f0 - 6), BigInt::from(5));
    let weak = BigRational::new(BigInt::from(f0), BigInt::from(4));
    Ok(MainBound {
        f0,
        g2,
        holds: lhs >= bound,
        tight: lhs == bound,
        bound: bound.to_string(),
        weak_holds: lhs >= weak,
        weak_bound: weak.to_string(),
    })
}

/// `(g_2, g_1, g_2 >= g_1)`; a probe, not a pass/fail gate.
pub fn probe_nevo(c: &SimplicialComplex) -> Result<(i64, i64, bool)> {
    require_s24(c)?;
    let inv = InvariantVectors::of(c)?;
    Ok((inv.g_at(2), inv.g_at(1), inv.g_at(2) >= inv.g_at(1)))
}

/// Shapes of spheres in `S(d-2, d-1)` with `g_2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum G2OneShape {
    /// `∂σ^i * ∂σ^{d-i}`
    SimplexBoundaries { i: usize },
    /// `C_n * ∂σ^{d-2}`
    CycleJoin { n: usize },
}

/// Classify by missing faces: two complementary missing faces, or a missing
/// `(d-2)`-face whose complement induces a cycle.
pub fn classify_g2_one(c: &SimplicialComplex) -> Result<Option<G2OneShape>> {
    let d = c.rank();
    if InvariantVectors::of(c)?.g_at(2) != 1 {
        return Ok(None);
    }
    let missing: Vec<Vec<Vertex>> = c
        .missing_faces()
        .into_iter()
        .map(|f| f.vertex_set)
        .collect();
    let all: BTreeSet<Vertex> = c.vertices().iter().copied().collect();
    let facets: BTreeSet<Vec<Vertex>> = c.facets().into_iter().collect();
    if missing.len() == 2 && missing[0].len() + missing[1].len() == all.len() {
        let (a, b) = (&missing[0], &missing[1]);
        if a.iter().all(|v| !b.contains(v)) && join_of_boundaries(a, b) == facets {
            let i = a.len().min(b.len()) - 1;
            return Ok(Some(G2OneShape::SimplexBoundaries { i }));
        }
    }
    for m in missing.iter().filter(|m| m.len() == d - 1) {
        let rest: Vec<Vertex> = all.iter().copied().filter(|v| !m.contains(v)).collect();
        let ind = c.induced(&rest)?;
        let n = rest.len();
        let is_cycle = n >= 3
            && ind.dim() == 1
            && ind.face_counts().get(2) == Some(&n)
            && ind.components().len() == 1
            && rest.iter().all(|&v| {
                ind.link(&[v])
                    .map(|l| l.num_vertices() == 2)
                    .unwrap_or(false)
            });
        if !is_cycle {
            continue;
        }
        let mut expect = BTreeSet::new();
        for e in ind.facets() {
            for &x in m {
                let mut f: Vec<Vertex> = e
                    .iter()
                    .chain(m.iter())
                    .copied()
                    .filter(|&v| v != x)
                    .collect();
                f.sort();
                expect.insert(f);
            }
        }
        if expect == facets {
            return Ok(Some(G2OneShape::CycleJoin { n }));
        }
    }
    Ok(None)
}

/// Whether two complexes are isomorphic, by backtracking over vertex maps.
pub fn is_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    if a.face_counts() != b.face_counts() {
        return false;
    }
    let fa = a.facets();
    let fb = b.facets();
    let degree = |f: &[Vec<Vertex>], v: Vertex| f.iter().filter(|x| x.contains(&v)).count();
    let search = IsoSearch {
        va: a.vertices().to_vec(),
        vb: b.vertices().to_vec(),
        da: a.vertices().iter().map(|&v| degree(&fa, v)).collect(),
        db: b.vertices().iter().map(|&v| degree(&fb, v)).collect(),
        fa,
        b,
    };
    search.extend(0, &mut BTreeMap::new(), &mut vec![false; b.num_vertices()])
}

struct IsoSearch<'a> {
    va: Vec<Vertex>,
    vb: Vec<Vertex>,
    da: Vec<usize>,
    db: Vec<usize>,
    fa: Vec<Vec<Vertex>>,
    b: &'a SimplicialComplex,
}

impl IsoSearch<'_> {
    fn extend(&self, k: usize, map: &mut BTreeMap<Vertex, Vertex>, used: &mut [bool]) -> bool {
        if k == self.va.len() {
            return true;
        }
        let v = self.va[k];
        for j in 0..self.vb.len() {
            if used[j] || self.da[k] != self.db[j] {
                continue;
            }
            map.insert(v, self.vb[j]);
            let ok = self
                .fa
                .iter()
                .filter(|f| f.contains(&v) && f.iter().all(|x| map.contains_key(x)))
                .all(|f| {
                    self.b
                        .contains_face(&f.iter().map(|x| map[x]).collect::<Vec<_>>())
                });
            if ok {
                used[j] = true;
                if self.extend(k + 1, map, used) {
                    return true;
                }
                used[j] = false;
            }
            map.remove(&v);
        }
        false
    }
}
