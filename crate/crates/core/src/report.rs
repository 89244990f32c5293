//! The analysis report: a versioned JSON document and its plain-text
//! rendering.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::algebra::{print_presentation, BoundQuiverAlgebra};
use crate::decomposition::{
    is_nakayama, enumerate_indecomposables, module_name, summary, IndecomposableLibrary, Provenance, Strategy,
    SummandInfo,
};
use crate::error::Result;
use crate::homological::HomDim;
use crate::tilting::{
    canonical_cotilting_in_c, canonical_tilting_in_c, check_splitting_criterion, is_quasi_tilted,
    projective_injectives, tilted_verdict, CanonicalModule, SplittingCriterion, TorsionPair, Verdict,
};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalReport {
    pub summands: Vec<SummandInfo>,
    pub certified: bool,
    /// Largest `pd` over the summands of `T_C`, or `id` for `C_C`.
    pub max_dimension: HomDim,
    pub ext1: usize,
    pub summand_count: usize,
    pub vertex_count: usize,
    pub all_in_c: bool,
}

impl CanonicalReport {
    fn new(c: &CanonicalModule) -> Self {
        let cert = &c.certificate;
        CanonicalReport {
            summands: summary(&cert.module),
            certified: cert.certified(),
            max_dimension: cert.max_dimension,
            ext1: cert.ext1,
            summand_count: cert.summand_count,
            vertex_count: cert.vertex_count,
            all_in_c: c.all_in_c(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub splitting: bool,
    pub torsion: Vec<String>,
    pub free: Vec<String>,
    pub neither: Vec<String>,
    /// Splitting via `τ`-closure of the torsion-free class, against `pd ≤ 1`
    /// on that class.
    pub criterion: SplittingCriterion,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiTiltedReport {
    pub quasi_tilted: bool,
    pub gl_dim_exceeds: bool,
    pub offenders: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LibraryReport {
    pub provenance: Provenance,
    pub size: usize,
    pub modules: Vec<String>,
    pub warnings: Vec<String>,
    /// Torsion pair of `T_C`; absent when `T_C` is.
    pub splitting: Option<SplittingReport>,
    pub quasi_tilted: QuasiTiltedReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub algebra: String,
    pub field: String,
    pub seed: u64,
    pub dim: usize,
    pub vertices: Vec<String>,
    pub gl_dim: HomDim,
    pub dom_dim: HomDim,
    pub is_auslander: bool,
    /// For `gl.dim = 2`: `T_C` and `C_C` exist and are isomorphic.
    pub tilting_cotilting: Option<bool>,
    pub projective_injectives: Vec<SummandInfo>,
    pub t_c: Option<CanonicalReport>,
    pub c_c: Option<CanonicalReport>,
    pub omega_da: Vec<SummandInfo>,
    pub tau_omega_da: Vec<SummandInfo>,
    pub pd_of_tau_omega_da: HomDim,
    pub verdict: Verdict,
    pub note: Option<String>,
    pub library: Option<LibraryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

/// The closed-form library for Nakayama algebras, `None` otherwise.
pub fn default_library(a: &BoundQuiverAlgebra) -> Result<Option<IndecomposableLibrary>> {
    if is_nakayama(a) {
        enumerate_indecomposables(a, &Strategy::NakayamaClosedForm).map(Some)
    } else {
        Ok(None)
    }
}

struct Clock {
    enabled: bool,
    marks: BTreeMap<String, f64>,
    last: Instant,
}

impl Clock {
    fn lap(&mut self, name: &str) {
        if self.enabled {
            let now = Instant::now();
            self.marks
                .insert(name.to_string(), (now - self.last).as_secs_f64() * 1000.0);
            self.last = now;
        }
    }
}

fn library_report(
    lib: &IndecomposableLibrary,
    t_c: Option<&CanonicalModule>,
) -> Result<LibraryReport> {
    let names: Vec<String> = lib.modules.iter().map(module_name).collect();
    let pick = |ix: &[usize]| ix.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
    let splitting = match t_c {
        Some(t) => {
            let pair = TorsionPair::new(&t.module);
            let part = crate::tilting::partition(&pair, lib)?;
            Some(SplittingReport {
                splitting: part.splitting(),
                torsion: pick(&part.torsion),
                free: pick(&part.free),
                neither: pick(&part.neither),
                criterion: check_splitting_criterion(&t.module, lib)?,
            })
        }
        None => None,
    };
    let q = is_quasi_tilted(lib);
    Ok(LibraryReport {
        provenance: lib.provenance,
        size: lib.len(),
        modules: names.clone(),
        warnings: lib.warnings.clone(),
        splitting,
        quasi_tilted: QuasiTiltedReport {
            quasi_tilted: q.quasi_tilted,
            gl_dim_exceeds: q.gl_dim_exceeds,
            offenders: pick(&q.offenders),
        },
    })
}

/// Runs the full analysis. Timings are recorded only when asked for, so the
/// default report is a deterministic function of the input.
pub fn analyze(a: &BoundQuiverAlgebra, lib: Option<&IndecomposableLibrary>, timings: bool) -> Result<AnalysisReport> {
    let mut clock = Clock {
        enabled: timings,
        marks: BTreeMap::new(),
        last: Instant::now(),
    };
    let verdict = tilted_verdict(a)?;
    clock.lap("verdict");
    let t_c = canonical_tilting_in_c(a)?;
    let c_c = canonical_cotilting_in_c(a)?;
    clock.lap("canonical_modules");
    let library = match lib {
        Some(lib) => Some(library_report(lib, t_c.as_ref())?),
        None => None,
    };
    clock.lap("library");
    Ok(AnalysisReport {
        schema: SCHEMA,
        algebra: print_presentation(a.presentation()),
        field: a.field().to_string(),
        seed: a.seed(),
        dim: a.dim(),
        vertices: a.quiver().vertices().to_vec(),
        gl_dim: verdict.auslander.gl_dim,
        dom_dim: verdict.auslander.dom_dim,
        is_auslander: verdict.auslander.is_auslander,
        tilting_cotilting: verdict.auslander.tilting_cotilting,
        projective_injectives: summary(&projective_injectives(a)),
        t_c: t_c.as_ref().map(CanonicalReport::new),
        c_c: c_c.as_ref().map(CanonicalReport::new),
        omega_da: summary(&verdict.omega_da),
        tau_omega_da: summary(&verdict.tau_omega_da),
        pd_of_tau_omega_da: verdict.pd_of_tau_omega_da,
        verdict: verdict.verdict,
        note: verdict.note.clone(),
        library,
        timings_ms: timings.then_some(clock.marks),
    })
}

pub fn to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialises")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        other => other.to_string(),
    }
}

fn summands(v: &Value) -> String {
    let Some(items) = v.as_array() else {
        return "-".into();
    };
    if items.is_empty() {
        return "0".into();
    }
    items
        .iter()
        .map(|s| {
            let dims = s["dim_vector"]
                .as_array()
                .map(|d| d.iter().map(Value::to_string).collect::<Vec<_>>().join(","))
                .unwrap_or_default();
            let name = match &s["label"] {
                Value::String(l) => l.clone(),
                _ => format!("M({dims})"),
            };
            let mult = s["multiplicity"].as_u64().unwrap_or(1);
            let power = if mult > 1 { format!("^{mult}") } else { String::new() };
            format!("{name}{power} [{dims}]")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn names(v: &Value) -> String {
    match v.as_array() {
        Some(items) if !items.is_empty() => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        _ => "-".into(),
    }
}

fn canonical_line(out: &mut Vec<String>, title: &str, v: &Value) {
    if v.is_null() {
        out.push(format!("{title}: absent"));
        return;
    }
    out.push(format!("{title}: {}", summands(&v["summands"])));
    out.push(format!(
        "  certified: {} (max dim {}, ext1 {}, {} of {} summands, in C: {})",
        scalar(&v["certified"]),
        scalar(&v["max_dimension"]),
        scalar(&v["ext1"]),
        scalar(&v["summand_count"]),
        scalar(&v["vertex_count"]),
        scalar(&v["all_in_c"]),
    ));
}

/// Plain-text form of a report, computed from its JSON alone.
pub fn render_text(v: &Value) -> String {
    let mut out = Vec::new();
    out.push(format!(
        "algebra: {} vertices, dim {}, field {}, seed {}",
        v["vertices"].as_array().map_or(0, Vec::len),
        scalar(&v["dim"]),
        scalar(&v["field"]),
        scalar(&v["seed"]),
    ));
    out.push(format!("gl.dim: {}", scalar(&v["gl_dim"])));
    out.push(format!("dom.dim: {}", scalar(&v["dom_dim"])));
    out.push(format!("auslander: {}", scalar(&v["is_auslander"])));
    if !v["tilting_cotilting"].is_null() {
        out.push(format!("tilting-cotilting in C: {}", scalar(&v["tilting_cotilting"])));
    }
    out.push(format!("projective-injectives: {}", summands(&v["projective_injectives"])));
    canonical_line(&mut out, "T_C", &v["t_c"]);
    canonical_line(&mut out, "C_C", &v["c_c"]);
    out.push(format!("Omega DA: {}", summands(&v["omega_da"])));
    out.push(format!("tau Omega DA: {}", summands(&v["tau_omega_da"])));
    out.push(format!("pd(tau Omega DA): {}", scalar(&v["pd_of_tau_omega_da"])));
    let lib = &v["library"];
    if !lib.is_null() {
        out.push(format!(
            "library: {} indecomposables ({})",
            scalar(&lib["size"]),
            scalar(&lib["provenance"])
        ));
        for w in lib["warnings"].as_array().into_iter().flatten() {
            out.push(format!("  warning: {}", scalar(w)));
        }
        let s = &lib["splitting"];
        if !s.is_null() {
            out.push(format!("splitting: {}", scalar(&s["splitting"])));
            out.push(format!("  torsion: {}", names(&s["torsion"])));
            out.push(format!("  free: {}", names(&s["free"])));
            out.push(format!("  neither: {}", names(&s["neither"])));
            let c = &s["criterion"];
            out.push(format!(
                "  tau-closed free class: {}, max pd on free class: {}, consistent: {}",
                scalar(&c["splitting"]),
                scalar(&c["max_pd_on_f"]),
                scalar(&c["consistent"]),
            ));
        }
        let q = &lib["quasi_tilted"];
        out.push(format!("quasi-tilted: {}", scalar(&q["quasi_tilted"])));
    }
    let note = match &v["note"] {
        Value::String(n) => format!(" ({n})"),
        _ => String::new(),
    };
    out.push(format!("verdict: {}{note}", scalar(&v["verdict"])));
    if let Some(t) = v.get("timings_ms").and_then(Value::as_object) {
        for (k, ms) in t {
            out.push(format!("time {k}: {} ms", scalar(ms)));
        }
    }
    out.join("\n") + "\n"
}
