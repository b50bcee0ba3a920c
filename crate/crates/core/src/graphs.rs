//! Graphs of complexes, exact independence numbers and the α-inequalities
//! for g-numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::complex::{bit, positions, Mask, SimplicialComplex, Vertex};
use crate::enumeration::InvariantVectors;
use crate::error::{Error, Result};

/// Default vertex cap for the exact independence number.
pub const DEFAULT_ALPHA_CAP: usize = 64;

/// A simple undirected graph on labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build from labels and edges; loops are rejected, repeated edges merged.
    pub fn new(vertices: Vec<Vertex>, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(a, b) in edges {
            let i = vertices
                .binary_search(&a)
                .map_err(|_| Error::UnknownVertex(a))?;
            let j = vertices
                .binary_search(&b)
                .map_err(|_| Error::UnknownVertex(b))?;
            if i == j {
                return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { vertices, adj })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list.iter().filter(|&&j| j > i) {
                out.push((self.vertices[i], self.vertices[j]));
            }
        }
        out
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        match (
            self.vertices.binary_search(&a),
            self.vertices.binary_search(&b),
        ) {
            (Ok(i), Ok(j)) => self.adj[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Whether no two of `set` are adjacent.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// The graph with one vertex removed.
    pub fn without(&self, v: Vertex) -> Result<Self> {
        let verts: Vec<Vertex> = self.vertices.iter().copied().filter(|&x| x != v).collect();
        if verts.len() == self.vertices.len() {
            return Err(Error::UnknownVertex(v));
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        Graph::new(verts, &edges)
    }
}

/// The 1-skeleton of a complex.
pub fn graph_of(c: &SimplicialComplex) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = c
        .faces_of_dim(1)
        .into_iter()
        .map(|e| (e[0], e[1]))
        .collect();
    Graph::new(c.vertices().to_vec(), &edges).expect("edges of a complex are valid")
}

/// Greedy coloring of the candidate set in the complement graph; returns the
/// vertices in color order together with their color numbers.
fn color_classes(p: Mask, cadj: &[Mask]) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut uncolored = p;
    let mut k = 0;
    while uncolored != 0 {
        k += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            order.push(v);
            colors.push(k);
            uncolored &= !bit(v);
            avail &= !bit(v) & !cadj[v];
        }
    }
    (order, colors)
}

fn max_clique(r: Mask, p: Mask, cadj: &[Mask], best: &mut Mask) {
    if p == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    let (order, colors) = color_classes(p, cadj);
    let mut p = p;
    for idx in (0..order.len()).rev() {
        if r.count_ones() as usize + colors[idx] <= best.count_ones() as usize {
            return;
        }
        let v = order[idx];
        max_clique(r | bit(v), p & cadj[v], cadj, best);
        p &= !bit(v);
    }
}

/// Exact independence number with a witness set, by branch and bound on
/// cliques of the complement. Refuses graphs above `cap` vertices.
pub fn independence_number(g: &Graph, cap: usize) -> Result<(usize, Vec<Vertex>)> {
    let n = g.num_vertices();
    if n > cap.min(128) {
        return Err(Error::CapExceeded {
            vertices: n,
            cap: cap.min(128),
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let all: Mask = if n == 128 { Mask::MAX } else { (1 << n) - 1 };
    let cadj: Vec<Mask> = (0..n)
        .map(|i| {
            let nb = g.adj[i].iter().fold(0, |m, &j| m | bit(j));
            all & !nb & !bit(i)
        })
        .collect();
    let mut best: Mask = 0;
    max_clique(0, all, &cadj, &mut best);
    let witness: Vec<Vertex> = positions(best).map(|i| g.vertices[i]).collect();
    Ok((witness.len(), witness))
}

/// Turán's lower bound `f0² / (2 f1 + f0)` on the independence number.
pub fn turan_bound(f0: u64, f1: u64) -> Result<BigRational> {
    if f0 == 0 {
        return Err(Error::InvalidParameter("Turán bound needs f0 >= 1".into()));
    }
    let f0 = BigInt::from(f0);
    Ok(BigRational::new(&f0 * &f0, BigInt::from(2u64 * f1) + &f0))
}

/// One row of an α-inequality report. `holds` is `None` when a hypothesis
/// fails and the row was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCheck {
    pub statement: &'static str,
    pub i: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: Option<bool>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaReport {
    pub d: usize,
    pub alpha: usize,
    pub witness: Vec<Vertex>,
    pub max_missing_dim: Option<usize>,
    pub checks: Vec<AlphaCheck>,
}

impl AlphaReport {
    /// No applicable row fails.
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds != Some(false))
    }

    pub fn applied(&self) -> impl Iterator<Item = &AlphaCheck> {
        self.checks.iter().filter(|c| c.holds.is_some())
    }
}

pub const STMT_G_I_ALPHA: &str = "g_i >= alpha";
pub const STMT_FLAG_G2: &str = "flag: g_2 >= (d-4) alpha";
pub const STMT_FLAG_GI: &str = "flag: g_i >= (d-2i) alpha";
pub const STMT_G_I_2ALPHA: &str = "g_i >= 2 alpha";

/// Evaluate every α-inequality whose hypotheses the complex meets; the rest
/// are listed as skipped with the failing hypothesis.
pub fn verify_alpha_inequalities(c: &SimplicialComplex, cap: usize) -> Result<AlphaReport> {
    let inv = InvariantVectors::of(c)?;
    let d = inv.d;
    let (alpha, witness) = independence_number(&graph_of(c), cap)?;
    let a = alpha as i64;
    let mm = c.max_missing_dim();
    let m = mm.unwrap_or(0);
    let flag = m <= 1;
    let mut checks = Vec::new();
    let mut row = |statement, i: usize, rhs: i64, ok: bool, note: String| {
        let lhs = inv.g_at(i);
        checks.push(AlphaCheck {
            statement,
            i,
            lhs,
            rhs,
            holds: ok.then_some(lhs >= rhs),
            note,
        });
    };

    for i in 1..=d.saturating_sub(1) / 2 {
        let ok = m + i < d;
        row(
            STMT_G_I_ALPHA,
            i,
            a,
            ok,
            if ok {
                String::new()
            } else {
                format!("needs max missing dim <= {}", d as i64 - i as i64 - 1)
            },
        );
    }
    if d.saturating_sub(1) / 2 < 1 {
        row(
            STMT_G_I_ALPHA,
            1,
            a,
            false,
            format!("no i with 1 <= i <= (d-1)/2 for d = {d}"),
        );
    }

    let gate = if d < 5 {
        format!("needs d >= 5, got {d}")
    } else if !flag {
        "needs a flag complex".into()
    } else {
        String::new()
    };
    row(
        STMT_FLAG_G2,
        2,
        (d as i64 - 4) * a,
        gate.is_empty(),
        gate.clone(),
    );
    for i in 2..=d.saturating_sub(1) / 2 {
        row(
            STMT_FLAG_GI,
            i,
            (d as i64 - 2 * i as i64) * a,
            gate.is_empty(),
            gate.clone(),
        );
    }

    for i in 2..=d / 3 {
        let j = ((d as i64 - 1) / 2 - 1).min(d as i64 - 2 * i as i64);
        let ok = (m as i64) <= j;
        row(
            STMT_G_I_2ALPHA,
            i,
            2 * a,
            ok,
            if ok {
                String::new()
            } else {
                format!("needs max missing dim <= {j}")
            },
        );
    }
    if d / 3 < 2 {
        row(
            STMT_G_I_2ALPHA,
            2,
            2 * a,
            false,
            format!("no i with 2 <= i <= d/3 for d = {d}"),
        );
    }

    Ok(AlphaReport {
        d,
        alpha,
        witness,
        max_missing_dim: mm,
        checks,
    })
}

/// Graph on the `(k-1)`-faces, two faces adjacent when their union is a face.
pub fn face_union_graph(c: &SimplicialComplex, k: usize) -> Graph {
    let faces = c.faces_by_size().get(k).cloned().unwrap_or_default();
    let mut edges = Vec::new();
    for (x, &s) in faces.iter().enumerate() {
        for (y, &t) in faces.iter().enumerate().skip(x + 1) {
            if c.is_face_mask(s | t) {
                edges.push((x as Vertex, y as Vertex));
            }
        }
    }
    Graph::new((0..faces.len() as Vertex).collect(), &edges).expect("indices are valid")
}

/// One diagnostic row: no pass/fail meaning is attached.
#[derive(Clone, Debug, Serialize)]
pub struct RatioSample {
    pub k: usize,
    pub hypotheses_met: bool,
    pub g_k_plus_1: i64,
    pub f_k_minus_1: i64,
    pub exponent: f64,
    pub ratio: f64,
    /// Exact α of the face-union graph when under the cap, else `None`.
    pub alpha_k: Option<usize>,
    pub turan_k: String,
}

/// Sweep `g_{k+1} / f_{k-1}^{(2k+2)/(3k+1)}` over the available `k`, along
/// with the independence number of the face-union graph.
pub fn ratio_sweep(c: &SimplicialComplex, cap: usize) -> Result<Vec<RatioSample>> {
    let inv = InvariantVectors::of(c)?;
    let d = inv.d;
    let m = c.max_missing_dim().unwrap_or(0) as i64;
    let mut out = Vec::new();
    for k in 1..=d / 2 {
        if k + 1 >= inv.g.len() {
            break;
        }
        let hypotheses_met = k >= 2 && d >= 3 * (k + 1) && m <= d as i64 - 2 - 2 * k as i64;
        let f = inv.f[k];
        let exponent = (2 * k + 2) as f64 / (3 * k + 1) as f64;
        let gk1 = inv.g_at(k + 1);
        let kg = face_union_graph(c, k);
        let alpha_k = independence_number(&kg, cap).ok().map(|x| x.0);
        let turan_k = turan_bound(kg.num_vertices() as u64, kg.num_edges() as u64)?.to_string();
        out.push(RatioSample {
            k,
            hypotheses_met,
            g_k_plus_1: gk1,
            f_k_minus_1: f,
            exponent,
            ratio: gk1 as f64 / (f as f64).powf(exponent),
            alpha_k,
            turan_k,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(d: usize) -> SimplicialComplex {
        SimplicialComplex::boundary_simplex(d).unwrap()
    }

    fn cross(d: usize) -> SimplicialComplex {
        (1..d).fold(bs(1), |a, _| a.join(&bs(1)))
    }

    /// α by scanning every vertex subset.
    fn brute_alpha(g: &Graph) -> usize {
        let n = g.num_vertices();
        (0u64..1 << n)
            .filter(|s| {
                let set: Vec<Vertex> = (0..n)
                    .filter(|i| s >> i & 1 == 1)
                    .map(|i| g.vertices()[i])
                    .collect();
                g.is_independent(&set)
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn graphs_of_complexes() {
        assert_eq!(graph_of(&cross(3)).num_edges(), 12);
        assert_eq!(graph_of(&bs(5)).num_edges(), 15);
        assert_eq!(
            graph_of(&SimplicialComplex::cycle(6).unwrap()).num_edges(),
            6
        );
    }

    #[test]
    fn alpha_values() {
        for g in [
            graph_of(&cross(3)),
            graph_of(&bs(4)),
            graph_of(&SimplicialComplex::cycle(6).unwrap()),
        ] {
            let (a, w) = independence_number(&g, 64).unwrap();
            assert_eq!(a, brute_alpha(&g));
            assert_eq!(w.len(), a);
            assert!(g.is_independent(&w));
        }
        assert_eq!(independence_number(&graph_of(&cross(3)), 64).unwrap().0, 2);
        assert_eq!(independence_number(&graph_of(&bs(4)), 64).unwrap().0, 1);
        assert_eq!(
            independence_number(&graph_of(&SimplicialComplex::cycle(6).unwrap()), 64)
                .unwrap()
                .0,
            3
        );
        let big = graph_of(&SimplicialComplex::cycle(70).unwrap());
        assert!(matches!(
            independence_number(&big, 64),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(independence_number(&big, 128).unwrap().0, 35);
    }

    #[test]
    fn turan() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(turan_bound(6, 12).unwrap(), r(6, 5));
        assert_eq!(turan_bound(7, 0).unwrap(), r(7, 1));
        assert!(BigRational::from_integer(2.into()) >= turan_bound(6, 12).unwrap());
    }

    #[test]
    fn alpha_inequalities() {
        let r = verify_alpha_inequalities(&cross(5), 64).unwrap();
        let row = r
            .checks
            .iter()
            .find(|c| c.statement == STMT_FLAG_G2)
            .unwrap();
        assert_eq!((row.lhs, row.rhs, row.holds), (5, 2, Some(true)));
        assert!(r.all_hold());

        let c4 = SimplicialComplex::cycle(4).unwrap();
        let x = bs(1).join(&c4).join(&c4);
        let r = verify_alpha_inequalities(&x, 64).unwrap();
        assert_eq!(r.alpha, 2);
        let row = r
            .checks
            .iter()
            .find(|c| c.statement == STMT_G_I_ALPHA && c.i == 2)
            .unwrap();
        assert_eq!((row.lhs, row.rhs, row.holds), (5, 2, Some(true)));

        let r = verify_alpha_inequalities(&cross(3), 64).unwrap();
        assert!(r
            .checks
            .iter()
            .filter(|c| c.statement == STMT_FLAG_G2)
            .all(|c| c.holds.is_none()));
    }

    #[test]
    fn sweep_runs() {
        let s = ratio_sweep(&cross(5), 64).unwrap();
        assert!(!s.is_empty());
        assert!(s.iter().all(|x| !x.hypotheses_met));
        // k = 1: graph on vertices, adjacency through edges
        assert_eq!(s[0].alpha_k, Some(2));
    }
}
