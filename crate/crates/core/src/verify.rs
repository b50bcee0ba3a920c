//! Verification reports: every identity, inequality and reproduction as a
//! named check with both sides recorded.

use std::time::Instant;

use serde::Serialize;

use crate::catalog::{self, NamedSphere};
use crate::complex::SimplicialComplex;
use crate::enumeration::{self, f_from_h, h_from_f, InvariantVectors};
use crate::error::{Error, Result};
use crate::graphs;
use crate::s24;
use crate::sequences::{corollary_level_g_check, is_m_sequence};
use crate::stress::{self, Embedding, StressBasis};

/// Statement ids with a one-line description, sorted by id.
pub const STATEMENTS: &[(&str, &str)] = &[
    ("alpha.flag-g2", "flag sphere with d >= 5: g_2 >= (d-4) * alpha"),
    ("alpha.flag-gi", "flag sphere: g_i >= (d-2i) * alpha for 2 <= i <= (d-1)/2"),
    ("alpha.g-i", "no missing face of dimension >= d-i: g_i >= alpha"),
    ("alpha.g-i-2alpha", "2 <= i <= d/3 and small missing faces: g_i >= 2 alpha"),
    ("counterexample.level", "K(u-k, 2u-1): g matches the piecewise formula, g_u = 1, the ring is not level"),
    ("counterexample.support", "explicit degree-u stress of P: operators vanish, coefficient 0, no F∪G∪v face in its support"),
    ("dehn-sommerville", "h_i = h_{d-i}"),
    ("expected-invariants", "face numbers agree with the product formula for the construction"),
    ("f-h-roundtrip", "f -> h -> f is the identity"),
    ("g-middle-odd", "odd d: g_{(d+1)/2} = 0"),
    ("gamma-mcmullen", "sum over vertices of gamma_i(lk v) = (i+1) gamma_{i+1} + (2d-4i) gamma_i"),
    ("homology-sphere", "every link has the Z/2 homology of a sphere of the right dimension"),
    ("level-corollary", "(1, g_1, ..., g_u~) meets the level-sequence conditions"),
    ("m-sequence", "the g-vector is an M-sequence"),
    ("mcmullen", "sum over vertices of g_k(lk v) = (k+1) g_{k+1} + (d+1-k) g_k"),
    ("s-k-2k", "2k-sphere without missing faces above dimension k: g_k >= f_0/(k+2)"),
    ("s24.main", "S(2,4): g_2 >= (2/5) f_0 - 6/5"),
    ("s24.nevo", "probe: S(2,4) with g_2 >= g_1"),
    ("s24.weak", "S(2,4): g_2 >= f_0/4"),
    ("socle", "dim socle in degree k equals the number of missing (d-k)-faces, k < (d-1)/2"),
    ("stress-dims", "dim of affine k-stresses equals g_k under two generic embeddings"),
    ("stress-dims-natural", "dim of affine k-stresses equals g_k under the natural embedding"),
];

pub fn describe(statement: &str) -> Option<&'static str> {
    STATEMENTS
        .iter()
        .find(|(id, _)| *id == statement)
        .map(|(_, d)| *d)
}

/// One evaluated statement. `holds` is `None` when the check was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub statement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub holds: Option<bool>,
    pub probe: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Check {
    fn new(
        statement: &'static str,
        index: Option<usize>,
        lhs: impl ToString,
        rhs: impl ToString,
        holds: bool,
    ) -> Self {
        Check {
            statement,
            index,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            holds: Some(holds),
            probe: false,
            note: String::new(),
            runtime_ms: None,
        }
    }

    fn skipped(statement: &'static str, index: Option<usize>, note: impl Into<String>) -> Self {
        Check {
            statement,
            index,
            lhs: String::new(),
            rhs: String::new(),
            holds: None,
            probe: false,
            note: note.into(),
            runtime_ms: None,
        }
    }

    pub fn failed(&self) -> bool {
        !self.probe && self.holds == Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub checks: Vec<Check>,
    pub status: i32,
}

impl VerificationReport {
    pub fn new(target: impl Into<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by_key(|c| c.statement);
        let status = i32::from(checks.iter().any(Check::failed));
        VerificationReport {
            target: target.into(),
            checks,
            status,
        }
    }
}

/// Knobs shared by all checks.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub alpha_cap: usize,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 1,
            alpha_cap: graphs::DEFAULT_ALPHA_CAP,
            timings: false,
        }
    }
}

fn fmt_vec<T: ToString>(v: &[T]) -> String {
    format!(
        "({})",
        v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    )
}

/// Run `f`, stamping the elapsed time on every produced check when asked.
fn timed(
    opts: &Options,
    out: &mut Vec<Check>,
    f: impl FnOnce(&mut Vec<Check>) -> Result<()>,
) -> Result<()> {
    let start = Instant::now();
    let before = out.len();
    f(out)?;
    if opts.timings {
        let ms = start.elapsed().as_millis() as u64;
        for c in &mut out[before..] {
            c.runtime_ms = Some(ms);
        }
    }
    Ok(())
}

/// Stress spaces of degrees `0..=⌊d/2⌋`, stopping at the first that exceeds
/// the size cap.
fn spaces<'a>(c: &'a SimplicialComplex, e: &'a Embedding) -> Result<Vec<StressBasis<'a>>> {
    let mut out = Vec::new();
    for k in 0..=c.rank() / 2 {
        match stress::stress_space(c, e, k) {
            Ok(b) => out.push(b),
            Err(Error::SystemTooLarge { .. }) => break,
            Err(err) => return Err(err),
        }
    }
    Ok(out)
}

fn face_number_checks(s: &NamedSphere, inv: &InvariantVectors, out: &mut Vec<Check>) -> Result<()> {
    let d = inv.d;
    if let Some(e) = &s.expected {
        out.push(Check::new(
            "expected-invariants",
            None,
            fmt_vec(&inv.h),
            fmt_vec(&e.h),
            inv == e,
        ));
    }
    let back = f_from_h(&h_from_f(&inv.f, d)?, d)?;
    out.push(Check::new(
        "f-h-roundtrip",
        None,
        fmt_vec(&back),
        fmt_vec(&inv.f),
        back == inv.f,
    ));
    let rev: Vec<i64> = inv.h.iter().rev().copied().collect();
    out.push(Check::new(
        "dehn-sommerville",
        None,
        fmt_vec(&inv.h),
        fmt_vec(&rev),
        enumeration::check_dehn_sommerville(&inv.h),
    ));
    if d % 2 == 1 {
        let top = d.div_ceil(2);
        out.push(Check::new(
            "g-middle-odd",
            Some(top),
            inv.g_at(top),
            0,
            inv.g_at(top) == 0,
        ));
    }
    for k in 0..=d.saturating_sub(1) / 2 {
        let r = enumeration::mcmullen_residual(&s.complex, k)?;
        out.push(Check::new("mcmullen", Some(k), r, 0, r == 0));
        match enumeration::gamma_mcmullen_residual(&s.complex, k) {
            Ok(r) => out.push(Check::new("gamma-mcmullen", Some(k), r, 0, r == 0)),
            Err(Error::Hypothesis(n)) => out.push(Check::skipped("gamma-mcmullen", Some(k), n)),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn sequence_checks(s: &NamedSphere, inv: &InvariantVectors, out: &mut Vec<Check>) {
    let g: Vec<u64> = inv.g.iter().map(|&x| x.max(0) as u64).collect();
    let v = is_m_sequence(&g);
    out.push(Check::new(
        "m-sequence",
        None,
        fmt_vec(&inv.g),
        v.to_string(),
        v.holds,
    ));
    match enumeration::u_tilde(&s.complex) {
        Some(ut) => {
            let v = corollary_level_g_check(&g, ut);
            out.push(Check::new(
                "level-corollary",
                Some(ut),
                fmt_vec(&g[..=ut.min(g.len() - 1)]),
                v.to_string(),
                v.holds,
            ));
        }
        None => out.push(Check::skipped("level-corollary", None, "no missing faces")),
    }
}

fn stress_checks(
    s: &NamedSphere,
    inv: &InvariantVectors,
    opts: &Options,
    out: &mut Vec<Check>,
) -> Result<()> {
    let c = &s.complex;
    let d = inv.d;
    let top = d / 2;
    let e1 = Embedding::generic(c, opts.seed);
    let e2 = Embedding::generic(c, stress::companion_seed(opts.seed));
    let sp1 = spaces(c, &e1)?;
    let sp2 = spaces(c, &e2)?;
    let first: Vec<usize> = sp1.iter().map(|b| b.dim()).collect();
    let second: Vec<usize> = sp2.iter().map(|b| b.dim()).collect();
    if first != second {
        return Err(Error::DegenerateEmbedding { first, second });
    }
    for k in 1..=top {
        match first.get(k) {
            Some(&dim) => out.push(Check::new(
                "stress-dims",
                Some(k),
                dim,
                inv.g_at(k),
                dim as i64 == inv.g_at(k),
            )),
            None => out.push(Check::skipped(
                "stress-dims",
                Some(k),
                "linear system above the size cap",
            )),
        }
    }
    if let Some(e) = &s.natural_coords {
        let nat = spaces(c, e)?;
        for k in 1..=top {
            match nat.get(k) {
                Some(b) => out.push(Check::new(
                    "stress-dims-natural",
                    Some(k),
                    b.dim(),
                    inv.g_at(k),
                    b.dim() as i64 == inv.g_at(k),
                )),
                None => out.push(Check::skipped(
                    "stress-dims-natural",
                    Some(k),
                    "linear system above the size cap",
                )),
            }
        }
    }
    let missing = c.missing_face_counts();
    let below = d.saturating_sub(1) / 2;
    if sp1.len() > below {
        let socle = stress::socle_from(&sp1[..=below]);
        for (k, &s) in socle.iter().take(below).enumerate() {
            let m = missing.get(d - k).copied().unwrap_or(0);
            out.push(Check::new("socle", Some(k), s, m, s == m));
        }
    } else {
        out.push(Check::skipped(
            "socle",
            None,
            "linear system above the size cap",
        ));
    }
    Ok(())
}

fn alpha_checks(c: &SimplicialComplex, opts: &Options, out: &mut Vec<Check>) -> Result<()> {
    let report = match graphs::verify_alpha_inequalities(c, opts.alpha_cap) {
        Ok(r) => r,
        Err(Error::CapExceeded { vertices, cap }) => {
            out.push(Check::skipped(
                "alpha.g-i",
                None,
                format!("{vertices} vertices above the cap of {cap}"),
            ));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    for a in &report.checks {
        let id = match a.statement {
            graphs::STMT_G_I_ALPHA => "alpha.g-i",
            graphs::STMT_FLAG_G2 => "alpha.flag-g2",
            graphs::STMT_FLAG_GI => "alpha.flag-gi",
            _ => "alpha.g-i-2alpha",
        };
        out.push(match a.holds {
            Some(h) => Check::new(id, Some(a.i), a.lhs, a.rhs, h),
            None => Check::skipped(id, Some(a.i), a.note.clone()),
        });
    }
    Ok(())
}

fn class_checks(c: &SimplicialComplex, inv: &InvariantVectors, out: &mut Vec<Check>) -> Result<()> {
    if s24::require_s24(c).is_ok() {
        let b = s24::verify_theorem_main_s24(c)?;
        out.push(Check::new("s24.main", None, b.g2, &b.bound, b.holds));
        out.push(Check::new(
            "s24.weak",
            None,
            b.g2,
            &b.weak_bound,
            b.weak_holds,
        ));
        let (g2, g1, holds) = s24::probe_nevo(c)?;
        let mut probe = Check::new("s24.nevo", None, g2, g1, holds);
        probe.probe = true;
        out.push(probe);
    }
    let d = inv.d;
    if d % 2 == 1 && d >= 3 {
        let k = (d - 1) / 2;
        if c.in_class_s(k) {
            let (lhs, rhs) = enumeration::corollary_s_k_2k_bound(c, k)?;
            out.push(Check::new("s-k-2k", Some(k), &lhs, &rhs, lhs >= rhs));
        }
    }
    Ok(())
}

/// Every applicable statement on one sphere.
pub fn verify_sphere(s: &NamedSphere, opts: &Options) -> Result<VerificationReport> {
    let inv = InvariantVectors::of(&s.complex)?;
    let mut out = Vec::new();
    timed(opts, &mut out, |out| {
        let ok = s.complex.is_z2_homology_sphere()?;
        out.push(Check::new("homology-sphere", None, ok, true, ok));
        Ok(())
    })?;
    timed(opts, &mut out, |out| face_number_checks(s, &inv, out))?;
    timed(opts, &mut out, |out| {
        sequence_checks(s, &inv, out);
        Ok(())
    })?;
    timed(opts, &mut out, |out| stress_checks(s, &inv, opts, out))?;
    timed(opts, &mut out, |out| alpha_checks(&s.complex, opts, out))?;
    timed(opts, &mut out, |out| class_checks(&s.complex, &inv, out))?;
    Ok(VerificationReport::new(s.name.clone(), out))
}

/// The level counterexample for `K(u-k, 2u-1)`.
pub fn verify_level_counterexample(
    u: usize,
    k: usize,
    opts: &Options,
) -> Result<VerificationReport> {
    let mut out = Vec::new();
    let mut name = String::new();
    timed(opts, &mut out, |out| {
        let r = catalog::verify_counterexample_level(u, k, opts.seed, catalog::LEVEL_VERTEX_CAP)?;
        name = r.name.clone();
        let socle = r
            .socle
            .as_ref()
            .map_or("skipped".to_string(), |s| fmt_vec(s));
        let mut c = Check::new(
            "counterexample.level",
            Some(u),
            fmt_vec(&r.g),
            fmt_vec(&r.formula),
            r.holds(),
        );
        c.note = format!(
            "g_u = {}; level conditions {}; socle {socle}",
            r.g_u, r.level_conditions
        );
        out.push(c);
        Ok(())
    })?;
    Ok(VerificationReport::new(name, out))
}

/// The support counterexample on the polytope with `u = 2m+1`.
pub fn verify_support_counterexample(m: usize, opts: &Options) -> Result<VerificationReport> {
    let mut out = Vec::new();
    timed(opts, &mut out, |out| {
        let r = catalog::verify_counterexample_support(m)?;
        let mut c = Check::new(
            "counterexample.support",
            Some(m),
            format!(
                "coefficient {}, unsupported {}",
                r.coefficient, r.unsupported_faces
            ),
            format!("coefficient 0, unsupported {}", r.candidate_faces),
            r.holds(),
        );
        let show = |x: Option<usize>| x.map_or("skipped".to_string(), |v| v.to_string());
        c.note = format!(
            "operators {} of {} vanish; dim S_u = {}; derivative span {} vs g_(u-1) = {}",
            if r.operator_equations_hold {
                r.operator_equations
            } else {
                0
            },
            r.operator_equations,
            show(r.stress_dim),
            show(r.derivative_span),
            r.g_u_minus_1
        );
        out.push(c);
        Ok(())
    })?;
    Ok(VerificationReport::new(format!("counterexample-{m}"), out))
}

/// The α-inequality family across the catalog.
pub fn verify_alpha_family(opts: &Options) -> Result<Vec<VerificationReport>> {
    catalog::catalog()?
        .iter()
        .map(|s| {
            let mut out = Vec::new();
            timed(opts, &mut out, |out| alpha_checks(&s.complex, opts, out))?;
            Ok(VerificationReport::new(s.name.clone(), out))
        })
        .collect()
}

/// The full suite: every catalog sphere, then both counterexamples.
pub fn verify_all(opts: &Options) -> Result<Vec<VerificationReport>> {
    let cat = catalog::catalog()?;
    let results: Vec<Result<VerificationReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = cat
            .iter()
            .map(|s| scope.spawn(move || verify_sphere(s, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let mut reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    reports.push(verify_level_counterexample(3, 1, opts)?);
    reports.push(verify_level_counterexample(4, 1, opts)?);
    reports.push(verify_support_counterexample(1, opts)?);
    reports.push(verify_support_counterexample(2, opts)?);
    Ok(reports)
}

/// 0 when no non-probe check failed, 1 otherwise.
pub fn overall_status(reports: &[VerificationReport]) -> i32 {
    i32::from(reports.iter().any(|r| r.status != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statements_sorted_and_unique() {
        let ids: Vec<&str> = STATEMENTS.iter().map(|(id, _)| *id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn k24_report() {
        let s = catalog::build_k(2, 5).unwrap();
        let r = verify_sphere(&s, &Options::default()).unwrap();
        assert_eq!(r.status, 0);
        for c in &r.checks {
            assert!(describe(c.statement).is_some(), "{}", c.statement);
        }
        let main = r.checks.iter().find(|c| c.statement == "s24.main").unwrap();
        assert_eq!((main.lhs.as_str(), main.rhs.as_str()), ("2", "2"));
        assert!(r
            .checks
            .windows(2)
            .all(|w| w[0].statement <= w[1].statement));
    }

    #[test]
    fn counterexample_reports() {
        let opts = Options::default();
        assert_eq!(verify_level_counterexample(3, 1, &opts).unwrap().status, 0);
        let r = verify_support_counterexample(1, &opts).unwrap();
        assert_eq!(r.status, 0);
        assert!(r.checks[0].lhs.contains("unsupported 27"));
    }
}
