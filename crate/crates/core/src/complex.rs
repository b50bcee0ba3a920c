//! Immutable simplicial complexes stored by their facets.
//!
//! Faces are subsets of the vertex list, encoded internally as bitmasks over
//! vertex positions (at most 128 vertices). The full face lattice is
//! materialized lazily on first use and cached, so every query after the first
//! is a hash lookup.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::homology;

/// Vertex label. Labels are arbitrary integers; outputs are always sorted.
pub type Vertex = i64;

pub(crate) type Mask = u128;

pub(crate) const MAX_VERTICES: usize = 128;

#[inline]
pub(crate) fn bit(i: usize) -> Mask {
    1u128 << i
}

#[inline]
pub(crate) fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Iterate the positions of the set bits of `m` in increasing order.
pub(crate) fn positions(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Keep only inclusion-maximal masks, sorted canonically by position lists.
fn maximal(masks: impl IntoIterator<Item = Mask>) -> Vec<Mask> {
    let mut all: Vec<Mask> = masks
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    all.sort_by_key(|m| std::cmp::Reverse(size(*m)));
    let mut kept: Vec<Mask> = Vec::new();
    for m in all {
        if !kept.iter().any(|k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_by_cached_key(|m| positions(*m).collect::<Vec<_>>());
    kept
}

/// A finite abstract simplicial complex, given by its facets.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Mask>,
    faces: OnceLock<Vec<Vec<Mask>>>,
    lookup: OnceLock<HashSet<Mask>>,
}

/// A minimal non-face: every proper subset is a face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MissingFace {
    pub vertex_set: Vec<Vertex>,
}

impl MissingFace {
    pub fn dim(&self) -> usize {
        self.vertex_set.len() - 1
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl std::hash::Hash for SimplicialComplex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.facets.hash(state);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("dim", &self.dim())
            .field("facets", &self.facets())
            .finish()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facets()
            .iter()
            .map(|fc| {
                let labels: Vec<String> = fc.iter().map(|v| v.to_string()).collect();
                format!("[{}]", labels.join(","))
            })
            .collect();
        write!(f, "{{{}}}", facets.join(" "))
    }
}

impl SimplicialComplex {
    /// Build a complex from a list of facets. Non-maximal sets are absorbed.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Vertex]>,
    {
        let facets: Vec<Vec<Vertex>> = facets.into_iter().map(|f| f.as_ref().to_vec()).collect();
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut labels: Vec<Vertex> = Vec::new();
        for f in &facets {
            if f.is_empty() {
                return Err(Error::EmptyFacet);
            }
            let mut seen = HashSet::new();
            for &v in f {
                if !seen.insert(v) {
                    return Err(Error::DuplicateVertex {
                        facet: f.clone(),
                        vertex: v,
                    });
                }
            }
            labels.extend_from_slice(f);
        }
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let index: HashMap<Vertex, usize> =
            labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let masks = facets
            .iter()
            .map(|f| f.iter().fold(0, |m, v| m | bit(index[v])));
        Ok(Self::from_masks(labels, masks))
    }

    /// Normalize a family of masks over `vertices` into a complex, dropping
    /// unused vertices and non-maximal sets.
    pub(crate) fn from_masks(vertices: Vec<Vertex>, masks: impl IntoIterator<Item = Mask>) -> Self {
        let masks = maximal(masks);
        let used = masks.iter().fold(0, |a, m| a | m);
        let (vertices, masks) = if size(used) == vertices.len() {
            (vertices, masks)
        } else {
            let keep: Vec<usize> = positions(used).collect();
            let mut remap = vec![usize::MAX; vertices.len()];
            for (new, &old) in keep.iter().enumerate() {
                remap[old] = new;
            }
            let verts = keep.iter().map(|&i| vertices[i]).collect();
            let masks = masks
                .iter()
                .map(|&m| positions(m).fold(0, |a, i| a | bit(remap[i])))
                .collect::<Vec<_>>();
            (verts, maximal(masks))
        };
        let masks = if masks.is_empty() { vec![0] } else { masks };
        SimplicialComplex {
            vertices,
            facets: masks,
            faces: OnceLock::new(),
            lookup: OnceLock::new(),
        }
    }

    /// The complex `{∅}`: the boundary of a 0-simplex, i.e. the (-1)-sphere.
    pub fn empty() -> Self {
        Self::from_masks(Vec::new(), [0])
    }

    /// ∂σ^d on the vertices `1..=d+1`.
    pub fn boundary_simplex(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "boundary_simplex needs d >= 1".into(),
            ));
        }
        if d + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(d + 1));
        }
        let all: Mask = (0..=d).fold(0, |a, i| a | bit(i));
        let vertices = (1..=d as Vertex + 1).collect();
        Ok(Self::from_masks(vertices, (0..=d).map(|i| all & !bit(i))))
    }

    /// The full simplex σ^d on `1..=d+1`.
    pub fn simplex(d: usize) -> Result<Self> {
        if d + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(d + 1));
        }
        let all: Mask = (0..=d).fold(0, |a, i| a | bit(i));
        Ok(Self::from_masks((1..=d as Vertex + 1).collect(), [all]))
    }

    /// The n-cycle on `1..=n` in cyclic order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "a cycle needs n >= 3, got {n}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Self::from_masks(
            (1..=n as Vertex).collect(),
            (0..n).map(|i| bit(i) | bit((i + 1) % n)),
        ))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|&m| size(m) as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    /// `dim + 1`, the number of coordinates of a natural embedding.
    pub fn rank(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let s = size(self.facets[0]);
        self.facets.iter().all(|&m| size(m) == s)
    }

    /// Facets as sorted label lists, in canonical order.
    pub fn facets(&self) -> Vec<Vec<Vertex>> {
        self.facets.iter().map(|&m| self.labels(m)).collect()
    }

    pub(crate) fn index_of(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub(crate) fn labels(&self, m: Mask) -> Vec<Vertex> {
        positions(m).map(|i| self.vertices[i]).collect()
    }

    /// Mask of a vertex set; errors on labels outside the complex.
    pub(crate) fn mask(&self, set: &[Vertex]) -> Result<Mask> {
        set.iter().try_fold(0, |m, &v| {
            self.index_of(v)
                .map(|i| m | bit(i))
                .ok_or(Error::UnknownVertex(v))
        })
    }

    /// All faces grouped by size (index 0 holds the empty face).
    pub(crate) fn faces_by_size(&self) -> &[Vec<Mask>] {
        self.faces.get_or_init(|| {
            let mut set: HashSet<Mask> = HashSet::new();
            for &f in &self.facets {
                let mut s = f;
                loop {
                    set.insert(s);
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & f;
                }
            }
            let top = self.facets.iter().map(|&m| size(m)).max().unwrap_or(0);
            let mut by_size = vec![Vec::new(); top + 1];
            for m in set {
                by_size[size(m)].push(m);
            }
            for layer in &mut by_size {
                layer.sort_by_cached_key(|m| positions(*m).collect::<Vec<_>>());
            }
            by_size
        })
    }

    fn lookup(&self) -> &HashSet<Mask> {
        self.lookup
            .get_or_init(|| self.faces_by_size().iter().flatten().copied().collect())
    }

    pub(crate) fn is_face_mask(&self, m: Mask) -> bool {
        self.lookup().contains(&m)
    }

    pub fn contains_face(&self, set: &[Vertex]) -> bool {
        match self.mask(set) {
            Ok(m) => self.is_face_mask(m) && size(m) == set.len(),
            Err(_) => false,
        }
    }

    /// All faces of dimension `i` (use `-1` for the empty face).
    pub fn faces_of_dim(&self, i: isize) -> Vec<Vec<Vertex>> {
        let s = (i + 1) as usize;
        self.faces_by_size()
            .get(s)
            .map(|l| l.iter().map(|&m| self.labels(m)).collect())
            .unwrap_or_default()
    }

    /// Number of faces of each size, starting with the empty face.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(|l| l.len()).collect()
    }

    fn face_mask(&self, tau: &[Vertex]) -> Result<Mask> {
        let m = self.mask(tau).map_err(|_| Error::NotAFace(sorted(tau)))?;
        if size(m) != tau.len() || !self.is_face_mask(m) {
            return Err(Error::NotAFace(sorted(tau)));
        }
        Ok(m)
    }

    /// Relabel every vertex by adding `offset`.
    pub fn shifted(&self, offset: Vertex) -> Self {
        let vertices = self.vertices.iter().map(|v| v + offset).collect();
        Self::from_masks(vertices, self.facets.iter().copied())
    }

    /// Relabel vertices through `f`, which must be injective on the vertex set.
    pub fn relabeled(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Self> {
        let facets: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .map(|&m| self.labels(m).into_iter().map(&f).collect())
            .collect();
        if self.facets == [0] {
            return Ok(Self::empty());
        }
        let out = Self::from_facets(facets)?;
        if out.num_vertices() != self.num_vertices() {
            return Err(Error::InvalidParameter(
                "relabeling is not injective".into(),
            ));
        }
        Ok(out)
    }

    /// Join, relabeling `other` with an offset when the vertex sets overlap.
    /// Returns the offset that was applied, if any.
    pub fn join_relabeled(&self, other: &Self) -> (Self, Option<Vertex>) {
        let overlap = other.vertices.iter().any(|v| self.index_of(*v).is_some());
        let (other, offset) = if overlap {
            let off = self.vertices.last().unwrap() - other.vertices.first().unwrap() + 1;
            (other.shifted(off), Some(off))
        } else {
            (other.clone(), None)
        };
        let mut labels: Vec<Vertex> = self
            .vertices
            .iter()
            .chain(other.vertices.iter())
            .copied()
            .collect();
        labels.sort_unstable();
        assert!(
            labels.len() <= MAX_VERTICES,
            "join exceeds {MAX_VERTICES} vertices"
        );
        let pos: HashMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let lift = |c: &Self, m: Mask| positions(m).fold(0, |a, i| a | bit(pos[&c.vertices[i]]));
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(lift(self, a) | lift(&other, b));
            }
        }
        (Self::from_masks(labels, facets), offset)
    }

    pub fn join(&self, other: &Self) -> Self {
        self.join_relabeled(other).0
    }

    /// Cone with the given apex, which must be a fresh label.
    pub fn cone(&self, apex: Vertex) -> Result<Self> {
        if self.index_of(apex).is_some() {
            return Err(Error::InvalidParameter(format!(
                "apex {apex} is already a vertex"
            )));
        }
        Ok(self.join(&Self::from_facets([[apex]])?))
    }

    /// Join with two fresh vertices `max+1`, `max+2`.
    pub fn suspension(&self) -> Self {
        let top = self.vertices.last().copied().unwrap_or(0);
        let poles = Self::from_facets([[top + 1], [top + 2]]).expect("two points");
        self.join(&poles)
    }

    pub fn link(&self, tau: &[Vertex]) -> Result<Self> {
        let t = self.face_mask(tau)?;
        Ok(self.link_mask(t))
    }

    pub(crate) fn link_mask(&self, t: Mask) -> Self {
        let facets = self.facets.iter().filter(|&&f| f & t == t).map(|&f| f & !t);
        Self::from_masks(self.vertices.clone(), facets)
    }

    pub fn star(&self, tau: &[Vertex]) -> Result<Self> {
        let t = self.face_mask(tau)?;
        Ok(self.star_mask(t))
    }

    pub(crate) fn star_mask(&self, t: Mask) -> Self {
        Self::from_masks(
            self.vertices.clone(),
            self.facets.iter().copied().filter(|&f| f & t == t),
        )
    }

    /// Faces not containing `v`.
    pub fn antistar(&self, v: Vertex) -> Result<Self> {
        let i = self.index_of(v).ok_or(Error::UnknownVertex(v))?;
        Ok(Self::from_masks(
            self.vertices.clone(),
            self.facets.iter().map(|&f| f & !bit(i)),
        ))
    }

    pub fn skeleton(&self, k: usize) -> Self {
        let keep = self.faces_by_size().iter().take(k + 2).flatten().copied();
        Self::from_masks(self.vertices.clone(), keep.collect::<Vec<_>>())
    }

    /// Induced subcomplex on `w`.
    pub fn induced(&self, w: &[Vertex]) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let m = self.mask(w)?;
        Ok(self.induced_mask(m))
    }

    pub(crate) fn induced_mask(&self, m: Mask) -> Self {
        Self::from_masks(self.vertices.clone(), self.facets.iter().map(|&f| f & m))
    }

    pub(crate) fn missing_face_masks(&self) -> Vec<Mask> {
        let faces = self.faces_by_size();
        let n = self.vertices.len();
        let mut out = Vec::new();
        for layer in faces {
            for &sigma in layer {
                // sigma plus a vertex above its top position; each missing face
                // arises once, from itself minus its largest vertex.
                let start = if sigma == 0 {
                    0
                } else {
                    128 - sigma.leading_zeros() as usize
                };
                for v in start..n {
                    let tau = sigma | bit(v);
                    if self.is_face_mask(tau) {
                        continue;
                    }
                    if positions(tau).all(|w| self.is_face_mask(tau & !bit(w))) {
                        out.push(tau);
                    }
                }
            }
        }
        out.sort_by_cached_key(|m| (size(*m), positions(*m).collect::<Vec<_>>()));
        out
    }

    /// All missing faces, sorted by dimension then lexicographically.
    pub fn missing_faces(&self) -> Vec<MissingFace> {
        self.missing_face_masks()
            .into_iter()
            .map(|m| MissingFace {
                vertex_set: self.labels(m),
            })
            .collect()
    }

    /// Number of missing faces of each dimension `0..=max`.
    pub fn missing_face_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for m in self.missing_face_masks() {
            let d = size(m) - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        counts
    }

    /// Largest dimension of a missing face; `None` for a simplex.
    pub fn max_missing_dim(&self) -> Option<usize> {
        self.missing_face_masks().last().map(|&m| size(m) - 1)
    }

    /// Whether all missing faces have dimension at most `j`.
    ///
    /// This is only the missing-face half of membership in `S(j, d-1)`;
    /// sphere-ness is checked separately by [`Self::is_z2_homology_sphere`].
    pub fn in_class_s(&self, j: usize) -> bool {
        self.max_missing_dim().is_none_or(|m| m <= j)
    }

    pub fn is_flag(&self) -> bool {
        self.in_class_s(1)
    }

    /// Whether the edge `uv` satisfies `lk(uv) = lk(u) ∩ lk(v)`.
    pub(crate) fn link_condition(&self, a: usize, b: usize) -> bool {
        let (u, v) = (bit(a), bit(b));
        self.faces_by_size().iter().flatten().all(|&s| {
            s & (u | v) != 0
                || !self.is_face_mask(s | u)
                || !self.is_face_mask(s | v)
                || self.is_face_mask(s | u | v)
        })
    }

    /// Contract the edge `uv` to a fresh vertex `max + 1`.
    ///
    /// Refused when `uv` lies in a missing face; the error carries one such
    /// face as a witness.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let a = self.index_of(u).ok_or(Error::UnknownVertex(u))?;
        let b = self.index_of(v).ok_or(Error::UnknownVertex(v))?;
        if a == b || !self.is_face_mask(bit(a) | bit(b)) {
            return Err(Error::NotAnEdge { u, v });
        }
        if !self.link_condition(a, b) {
            let pair = bit(a) | bit(b);
            let witness = self
                .missing_face_masks()
                .into_iter()
                .find(|&m| m & pair == pair)
                .expect("a failed link condition always has a witness missing face");
            return Err(Error::LinkCondition {
                edge: [u.min(v), u.max(v)],
                missing_face: self.labels(witness),
            });
        }
        Ok(self.contract_unchecked(a, b))
    }

    fn contract_unchecked(&self, a: usize, b: usize) -> Self {
        let fresh = self.vertices.last().unwrap() + 1;
        let mut labels: Vec<Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != a && i != b)
            .map(|(_, &x)| x)
            .collect();
        labels.push(fresh);
        let n = labels.len();
        let mut remap = vec![0usize; self.vertices.len()];
        let mut next = 0;
        for (i, slot) in remap.iter_mut().enumerate() {
            if i == a || i == b {
                *slot = n - 1;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let facets = self
            .facets
            .iter()
            .map(|&f| positions(f).fold(0, |m, i| m | bit(remap[i])));
        Self::from_masks(labels, facets.collect::<Vec<_>>())
    }

    /// Whether every link (including that of the empty face) has the reduced
    /// Z/2 homology of a sphere of the right dimension.
    pub fn is_z2_homology_sphere(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(homology::is_z2_homology_sphere(self))
    }

    /// Connected components of the 1-skeleton, as sorted label lists.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertices.len();
        let mut adj = vec![0 as Mask; n];
        if let Some(layer) = self.faces_by_size().get(2) {
            for &e in layer {
                let mut it = positions(e);
                let (x, y) = (it.next().unwrap(), it.next().unwrap());
                adj[x] |= bit(y);
                adj[y] |= bit(x);
            }
        }
        let mut seen: Mask = 0;
        let mut out = Vec::new();
        for s in 0..n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let next = positions(frontier).fold(0, |a, i| a | adj[i]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(self.labels(comp));
        }
        out
    }
}

fn sorted(v: &[Vertex]) -> Vec<Vertex> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().copied()).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        let s = SimplicialComplex::boundary_simplex(1).unwrap();
        s.join(&s).join(&s)
    }

    #[test]
    fn triangle_boundary() {
        let t = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(t.dim(), 1);
        assert_eq!(t, SimplicialComplex::boundary_simplex(2).unwrap());
        assert_eq!(t, SimplicialComplex::cycle(3).unwrap());
    }

    #[test]
    fn maximality_absorbs_subsets() {
        let t = c(&[&[1, 2, 3], &[1, 2], &[3]]);
        assert_eq!(t.facets(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn rejects_bad_input() {
        let empty: Vec<Vec<Vertex>> = vec![];
        assert_eq!(
            SimplicialComplex::from_facets(empty),
            Err(Error::EmptyInput)
        );
        assert!(matches!(
            SimplicialComplex::from_facets([vec![1, 2, 1]]),
            Err(Error::DuplicateVertex { vertex: 1, .. })
        ));
        assert_eq!(
            SimplicialComplex::from_facets([Vec::<Vertex>::new()]),
            Err(Error::EmptyFacet)
        );
        assert!(SimplicialComplex::boundary_simplex(0).is_err());
        assert!(SimplicialComplex::cycle(2).is_err());
    }

    #[test]
    fn octahedron_from_facets_matches_join() {
        // antipodal pairs (1,2), (3,4), (5,6)
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let oct = SimplicialComplex::from_facets(&facets).unwrap();
        assert_eq!(oct.dim(), 2);
        assert_eq!(oct.num_vertices(), 6);
        assert_eq!(oct, octahedron());
        // C4 = 1-2-3-4 has antipodes (1,3), (2,4)
        let c4 = SimplicialComplex::cycle(4)
            .unwrap()
            .relabeled(|v| [0, 1, 3, 2, 4][v as usize])
            .unwrap();
        assert_eq!(c4.suspension(), oct);
    }

    #[test]
    fn boundary_simplex_small_cases() {
        let s1 = SimplicialComplex::boundary_simplex(1).unwrap();
        assert_eq!(s1.facets(), vec![vec![1], vec![2]]);
        assert_eq!(s1.dim(), 0);
        let s4 = SimplicialComplex::boundary_simplex(4).unwrap();
        assert_eq!(s4.facets().len(), 5);
        assert_eq!(s4.face_counts(), vec![1, 5, 10, 10, 5]);
    }

    #[test]
    fn joins_of_simplex_boundaries() {
        let s1 = SimplicialComplex::boundary_simplex(1).unwrap();
        assert_eq!(
            s1.join(&s1),
            SimplicialComplex::cycle(4)
                .unwrap()
                .relabeled(|v| [0, 1, 3, 2, 4][v as usize])
                .unwrap()
        );
        let s2 = SimplicialComplex::boundary_simplex(2).unwrap();
        let k = s2.join(&s2).join(&s1);
        assert_eq!(k.num_vertices(), 8);
        assert_eq!(k.dim(), 4);
        let (_, off) = s2.join_relabeled(&s2);
        assert_eq!(off, Some(3));
    }

    #[test]
    fn links_and_stars() {
        let oct = octahedron();
        for &v in oct.vertices() {
            let lk = oct.link(&[v]).unwrap();
            assert_eq!(lk.num_vertices(), 4);
            assert_eq!(lk.face_counts(), vec![1, 4, 4]);
            assert_eq!(lk.missing_faces().len(), 2);
        }
        assert_eq!(oct.link(&[]).unwrap(), oct);
        let s4 = SimplicialComplex::boundary_simplex(4).unwrap();
        let lk = s4.link(&[1, 2]).unwrap();
        assert_eq!(
            lk,
            SimplicialComplex::boundary_simplex(2).unwrap().shifted(2)
        );
        let a = SimplicialComplex::cycle(5).unwrap();
        let cone = a.cone(9).unwrap();
        assert_eq!(cone.star(&[9]).unwrap(), cone);
        assert!(matches!(oct.link(&[1, 2]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn skeleton_and_induced() {
        let s3 = SimplicialComplex::boundary_simplex(3).unwrap();
        let k4 = s3.skeleton(1);
        assert_eq!(k4.facets().len(), 6);
        assert_eq!(k4.dim(), 1);
        let oct = octahedron();
        let pair = oct.induced(&[1, 2]).unwrap();
        assert_eq!(pair.facets(), vec![vec![1], vec![2]]);
        let c6 = SimplicialComplex::cycle(6).unwrap();
        assert_eq!(
            c6.induced(&[1, 2, 3]).unwrap().facets(),
            vec![vec![1, 2], vec![2, 3]]
        );
        assert_eq!(c6.induced(&[]), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn missing_faces_of_small_complexes() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let m: Vec<Vec<Vertex>> = c4
            .missing_faces()
            .into_iter()
            .map(|m| m.vertex_set)
            .collect();
        assert_eq!(m, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(c4.missing_face_counts(), vec![0, 2]);
        let s1 = SimplicialComplex::boundary_simplex(1).unwrap();
        let s2 = SimplicialComplex::boundary_simplex(2).unwrap();
        let k = s2.join(&s2).join(&s1);
        let m: Vec<Vec<Vertex>> = k
            .missing_faces()
            .into_iter()
            .map(|m| m.vertex_set)
            .collect();
        assert_eq!(m, vec![vec![7, 8], vec![1, 2, 3], vec![4, 5, 6]]);
        assert!(octahedron().in_class_s(1));
        assert_eq!(
            SimplicialComplex::simplex(3).unwrap().max_missing_dim(),
            None
        );
    }

    #[test]
    fn contraction() {
        let c4 = SimplicialComplex::cycle(4).unwrap();
        let c3 = c4.contract_edge(1, 2).unwrap();
        assert_eq!(c3.num_vertices(), 3);
        assert_eq!(
            c3,
            SimplicialComplex::cycle(3)
                .unwrap()
                .relabeled(|v| [0, 3, 4, 5][v as usize])
                .unwrap()
        );

        let oct = octahedron();
        let e = oct.faces_of_dim(1)[0].clone();
        let c = oct.contract_edge(e[0], e[1]).unwrap();
        assert_eq!(c.face_counts(), vec![1, 5, 9, 6]);
        assert!(c.is_z2_homology_sphere().unwrap());

        // every edge of ∂σ³ lies in the missing face 1234
        let s3 = SimplicialComplex::boundary_simplex(3).unwrap();
        match s3.contract_edge(1, 2) {
            Err(Error::LinkCondition { missing_face, .. }) => {
                assert_eq!(missing_face, vec![1, 2, 3, 4])
            }
            other => panic!("expected refusal, got {other:?}"),
        }
        assert!(matches!(
            c4.contract_edge(1, 3),
            Err(Error::NotAnEdge { .. })
        ));
    }

    #[test]
    fn homology_spheres() {
        assert!(octahedron().is_z2_homology_sphere().unwrap());
        assert!(!SimplicialComplex::simplex(2)
            .unwrap()
            .is_z2_homology_sphere()
            .unwrap());
        let s2 = SimplicialComplex::boundary_simplex(2).unwrap();
        assert!(s2.join(&s2).join(&s2).is_z2_homology_sphere().unwrap());
        assert!(SimplicialComplex::empty().is_z2_homology_sphere().unwrap());
        let mixed = c(&[&[1, 2, 3], &[3, 4]]);
        assert_eq!(mixed.is_z2_homology_sphere(), Err(Error::NotPure));
        // two disjoint triangles boundaries: a pure 1-complex that is not a sphere
        let two = c(&[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6]]);
        assert!(!two.is_z2_homology_sphere().unwrap());
    }

    #[test]
    fn antistar_removes_vertex() {
        let oct = octahedron();
        let a = oct.antistar(1).unwrap();
        assert_eq!(a.num_vertices(), 5);
        assert_eq!(a.facets().len(), 4);
    }

    #[test]
    fn components_of_graph() {
        let two = c(&[&[1, 2], &[3, 4], &[4, 5]]);
        assert_eq!(two.components(), vec![vec![1, 2], vec![3, 4, 5]]);
    }
}
