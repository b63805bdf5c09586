//! Command bodies shared by the CLI: each produces human-readable text, a
//! JSON verdict tree and an exit status.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::frontend::parse::InputDocument;
use crate::ginzburg::DgPresentation;
use crate::gqa::{format_rational, GradedQuiver, Path};
use crate::jacobian::{self, Bounds, H0Verdict, JacobianError};
use crate::orbitcat::{self, OrbitError};

pub const SCHEMA_VERSION: u64 = 1;
/// Largest `H⁰` dimension for which the multiplication table is emitted.
pub const TABLE_LIMIT: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Undetermined,
    Fail,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Undetermined => 2,
            Status::InputError => 3,
        }
    }

    /// Combines two statuses; a failure outranks an undetermined verdict.
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undetermined => "undetermined",
            Status::InputError => "input-error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub verdicts: Value,
}

impl Outcome {
    fn input_error(message: String) -> Outcome {
        Outcome {
            status: Status::InputError,
            text: format!("error: {message}\n"),
            verdicts: json!({ "status": Status::InputError.label(), "error": message }),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Bounds from the document's `option` statements, overridden by flags.
pub fn effective_bounds(doc: &InputDocument, max_steps: Option<usize>, max_basis: Option<usize>) -> Bounds {
    let defaults = Bounds::default();
    let from_doc = |key: &str| doc.options.get(key).and_then(|v| usize::try_from(*v).ok());
    Bounds {
        max_steps: max_steps.or_else(|| from_doc("max_steps")).unwrap_or(defaults.max_steps),
        max_basis: max_basis.or_else(|| from_doc("max_basis")).unwrap_or(defaults.max_basis),
    }
}

pub fn bounds_json(b: &Bounds) -> Value {
    json!({ "max_steps": b.max_steps, "max_basis": b.max_basis })
}

/// Assembles the versioned report document.
pub fn report_json(command: &str, input_sha256: &str, verdicts: Value, bounds: Value, diagrammatic: bool) -> String {
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "input_sha256": input_sha256,
        "verdicts": verdicts,
        "bounds": bounds,
        "flags": { "diagrammatic": diagrammatic },
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn element_json(q: &GradedQuiver, x: &crate::gqa::AlgElement) -> Value {
    Value::Array(
        x.iter()
            .map(|(p, c)| json!({ "path": q.display_path(p), "coefficient": format_rational(c) }))
            .collect(),
    )
}

struct Built {
    quiver: GradedQuiver,
    presentation: Option<DgPresentation>,
    validity: Outcome,
}

/// Potential validation plus d² check; the presentation is kept when the
/// potential is valid.
fn build(doc: &InputDocument) -> Built {
    let fail = |message: String| Built {
        quiver: GradedQuiver::new(Vec::<String>::new(), Vec::new()).expect("empty quiver"),
        presentation: None,
        validity: Outcome::input_error(message),
    };
    let q = match doc.quiver() {
        Ok(q) => q,
        Err(e) => return fail(e.to_string()),
    };
    let w = match doc.potential(&q) {
        Ok(w) => w,
        Err(e) => return fail(e.to_string()),
    };
    let report = w.validate(&q);
    let mut text = String::new();
    let mut v = Map::new();
    v.insert("n".into(), json!(doc.n));
    v.insert("required_degree".into(), json!(report.required_degree));
    v.insert(
        "offending_terms".into(),
        Value::Array(
            report
                .offending_terms
                .iter()
                .map(|(t, d)| json!({ "term": t, "degree": d }))
                .collect(),
        ),
    );
    v.insert(
        "arrow_degrees_in_range".into(),
        json!({
            "range": [-(doc.n - 2), 0],
            "ok": report.arrow_degrees_in_range(),
            "outside": report.arrows_outside_bounds.iter().map(|(a, d)| json!({ "arrow": a, "degree": d })).collect::<Vec<_>>(),
        }),
    );
    if !report.is_valid() {
        for (t, d) in &report.offending_terms {
            text.push_str(&format!(
                "potential term {t} has degree {d}, expected {} (= 3 - n)\n",
                report.required_degree
            ));
        }
        v.insert("potential_valid".into(), json!(false));
        v.insert("status".into(), json!(Status::Fail.label()));
        return Built {
            quiver: q,
            presentation: None,
            validity: Outcome {
                status: Status::Fail,
                text,
                verdicts: Value::Object(v),
            },
        };
    }
    text.push_str(&format!("potential: valid (every term has degree {})\n", report.required_degree));
    if !report.arrow_degrees_in_range() {
        text.push_str(&format!("note: arrow degrees outside [{}, 0]\n", -(doc.n - 2)));
    }
    v.insert("potential_valid".into(), json!(true));
    let pres = match DgPresentation::new(&q, w) {
        Ok(p) => p,
        Err(e) => return fail(e.to_string()),
    };
    let d2 = pres.check_d_squared();
    let ext = pres.extended_quiver();
    v.insert(
        "d_squared".into(),
        json!({
            "generators_checked": d2.generators_checked,
            "residues": d2.residues.iter().map(|r| json!({ "generator": r.generator, "residue": element_json(ext, &r.element) })).collect::<Vec<_>>(),
        }),
    );
    let generator_problems = pres.check_generators();
    v.insert("generator_checks".into(), json!(generator_problems));
    let status = if d2.passed() && generator_problems.is_empty() {
        text.push_str(&format!("d^2 = 0 on all {} generators\n", d2.generators_checked));
        Status::Pass
    } else {
        for r in &d2.residues {
            text.push_str(&format!("d^2({}) = {}\n", ext.display_arrow(ext.arrow_id(&r.generator).expect("generator")), r.residue));
        }
        for p in &generator_problems {
            text.push_str(&format!("{p}\n"));
        }
        Status::Fail
    };
    v.insert("status".into(), json!(status.label()));
    Built {
        quiver: q,
        presentation: Some(pres),
        validity: Outcome {
            status,
            text,
            verdicts: Value::Object(v),
        },
    }
}

/// `check`: potential degree and `d² = 0`.
pub fn run_check(doc: &InputDocument) -> Outcome {
    build(doc).validity
}

/// `gamma`: the extended quiver with degrees and the differential.
pub fn run_gamma(doc: &InputDocument) -> Outcome {
    let built = build(doc);
    let pres = match built.presentation {
        Some(p) => p,
        None => return built.validity,
    };
    let ext = pres.extended_quiver();
    let mut text = format!("Gamma_{}(Q, W)\n", pres.n());
    text.push_str(&format!("vertices: {}\n", ext.vertex_names().join(" ")));
    let mut generators = Vec::new();
    let mut degrees = String::new();
    for (id, a) in ext.arrows() {
        let name = ext.display_arrow(id);
        text.push_str(&format!("{name} : {} -> {}\n", ext.vertex_name(a.source), ext.vertex_name(a.target)));
        degrees.push_str(&format!("|{name}| = {}\n", a.degree));
        generators.push(json!({
            "name": a.name,
            "source": ext.vertex_name(a.source),
            "target": ext.vertex_name(a.target),
            "degree": a.degree,
            "d": element_json(ext, pres.differential_on_generator(id)),
            "d_text": ext.display_element(pres.differential_on_generator(id)),
        }));
    }
    text.push_str(&degrees);
    for (name, value) in pres.differential_table() {
        text.push_str(&format!("d({name}) = {value}\n"));
    }
    let mut v = match built.validity.verdicts {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    v.insert("generators".into(), Value::Array(generators));
    v.insert("generators_nonpositive".into(), json!(pres.generators_nonpositive()));
    text.push_str(&built.validity.text);
    Outcome {
        status: built.validity.status,
        text,
        verdicts: Value::Object(v),
    }
}

fn paths_json(q: &GradedQuiver, ps: &[Path]) -> Value {
    Value::Array(ps.iter().map(|p| json!(q.display_path(p))).collect())
}

/// `h0`: verdict, basis and multiplication table.
pub fn run_h0(doc: &InputDocument, bounds: Bounds) -> Outcome {
    let built = build(doc);
    let pres = match (built.validity.status, built.presentation) {
        (Status::Pass, Some(p)) => p,
        (_, _) => return built.validity,
    };
    let _ = built.quiver;
    let res = match jacobian::h0(&pres, bounds) {
        Ok(r) => r,
        Err(e @ JacobianError::OutOfScope { .. }) => return Outcome::input_error(e.to_string()),
        Err(e) => {
            return Outcome {
                status: Status::Fail,
                text: format!("{e}\n"),
                verdicts: json!({ "status": Status::Fail.label(), "error": e.to_string() }),
            }
        }
    };
    let q = res.quiver();
    let mut text = String::new();
    let mut v = Map::new();
    let relations: Vec<String> = res.relations.iter().map(|r| q.display_element(r)).collect();
    v.insert("relations".into(), json!(relations));
    v.insert(
        "rewriting".into(),
        json!({
            "complete": res.system.is_complete(),
            "steps": res.system.steps(),
            "rules": res.system.rules().iter().map(|r| json!({
                "leading": q.display_path(&r.leading),
                "tail": q.display_element(&r.tail),
            })).collect::<Vec<_>>(),
        }),
    );
    v.insert("notes".into(), json!(res.notes));
    let status = match &res.verdict {
        H0Verdict::Finite { dimension, basis } => {
            text.push_str("H0: finite\n");
            text.push_str(&format!("dimension: {dimension}\n"));
            let names: Vec<String> = basis.iter().map(|p| q.display_path(p)).collect();
            text.push_str(&format!("basis: {}\n", names.join(" ")));
            v.insert("verdict".into(), json!("finite"));
            v.insert("dimension".into(), json!(dimension));
            v.insert("basis".into(), paths_json(q, basis));
            Status::Pass
        }
        H0Verdict::Infinite { witness } => {
            text.push_str("H0: infinite\n");
            text.push_str(&format!("witness cycle: {}\n", q.display_path(witness)));
            v.insert("verdict".into(), json!("infinite"));
            v.insert("witness".into(), json!(q.display_path(witness)));
            Status::Fail
        }
        H0Verdict::Undetermined { reason } => {
            text.push_str(&format!("H0: undetermined ({reason})\n"));
            v.insert("verdict".into(), json!("undetermined"));
            v.insert("reason".into(), json!(reason));
            Status::Undetermined
        }
    };
    text.push_str(&format!("relations: {}\n", if relations.is_empty() { "none".to_string() } else { relations.join(", ") }));
    for r in res.system.rules() {
        text.push_str(&format!("rule: {} -> {}\n", q.display_path(&r.leading), q.display_element(&r.tail)));
    }
    if let Some(dimension) = res.dimension() {
        if dimension <= TABLE_LIMIT {
            let table = jacobian::multiplication_table(&res).expect("finite verdict");
            text.push_str("multiplication:\n");
            let mut rows = Vec::new();
            for (x, y, z) in &table {
                let (xs, ys, zs) = (q.display_path(x), q.display_path(y), q.display_element(z));
                text.push_str(&format!("  {xs} · {ys} = {zs}\n"));
                rows.push(json!({ "left": xs, "right": ys, "product": element_json(q, z) }));
            }
            v.insert("multiplication".into(), Value::Array(rows));
        } else {
            text.push_str(&format!("multiplication table omitted (dimension > {TABLE_LIMIT})\n"));
        }
    }
    for note in &res.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    v.insert("status".into(), json!(status.label()));
    Outcome {
        status,
        text,
        verdicts: Value::Object(v),
    }
}

/// `report`: `check`, `gamma` and `h0` together.
pub fn run_report(doc: &InputDocument, bounds: Bounds) -> Outcome {
    let gamma = run_gamma(doc);
    let mut status = gamma.status;
    let mut text = gamma.text.clone();
    let mut v = Map::new();
    v.insert("gamma".into(), gamma.verdicts);
    if gamma.status == Status::Pass {
        let h = run_h0(doc, bounds);
        status = status.and(h.status);
        text.push_str(&h.text);
        v.insert("h0".into(), h.verdicts);
    }
    v.insert("status".into(), json!(status.label()));
    Outcome {
        status,
        text,
        verdicts: Value::Object(v),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitChecks {
    pub cy: bool,
    pub tilting: bool,
}

/// `orbit`: checks on `C^{(m)}_{A_n}`.
pub fn run_orbit(dynkin: &str, n: usize, m: usize, checks: OrbitChecks) -> Outcome {
    match orbit_inner(dynkin, n, m, checks) {
        Ok(o) => o,
        Err(e) => Outcome::input_error(e.to_string()),
    }
}

fn orbit_inner(dynkin: &str, n: usize, m: usize, checks: OrbitChecks) -> Result<Outcome, OrbitError> {
    if dynkin != "A" {
        return Err(OrbitError::UnsupportedType(dynkin.to_string()));
    }
    let objects = orbitcat::enumerate_orbit_objects(n, m)?;
    let mut text = format!("orbit category C^({m}) of A_{n}\n");
    text.push_str(&format!("objects: {}\n", objects.len()));
    let mut v = Map::new();
    v.insert("type".into(), json!("A"));
    v.insert("n".into(), json!(n));
    v.insert("m".into(), json!(m));
    v.insert("objects".into(), json!(objects.iter().map(|o| o.to_string()).collect::<Vec<_>>()));
    let mut status = Status::Pass;
    if checks.cy {
        let cy = orbitcat::check_cy(n, m)?;
        text.push_str(&format!(
            "CY check (dim Hom(X,Y) = dim Hom(Y, X[{}])): {} pairs, {} violations\n",
            m + 1,
            cy.pairs,
            cy.violations.len()
        ));
        v.insert(
            "cy".into(),
            json!({
                "shift": cy.shift_checked,
                "pairs": cy.pairs,
                "violations": cy.violations.iter().map(|x| json!({
                    "x": x.x, "y": x.y, "hom_xy": x.hom_xy, "hom_y_shifted_x": x.hom_y_shifted_x,
                })).collect::<Vec<_>>(),
            }),
        );
        if !cy.passed() {
            status = Status::Fail;
        }
    }
    if checks.tilting {
        let t = orbitcat::check_cluster_tilting(n, m)?;
        let fmt_dims = |d: &[usize]| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        text.push_str(&format!("Hom(T, T[r]) for r = 1..{m}: {}\n", fmt_dims(&t.self_ext)));
        if m > 1 {
            text.push_str(&format!("Hom(T, T[-r]) for r = 1..{}: {}\n", m - 1, fmt_dims(&t.negative_self_ext)));
        }
        text.push_str(&format!("dim End(T): {}\n", t.end_dim));
        let passing: Vec<&str> = t.classification.iter().filter(|e| e.vanishing).map(|e| e.object.as_str()).collect();
        text.push_str(&format!("objects with Hom(T, L[r]) = 0 for r = 1..{m}: {}\n", passing.join(" ")));
        text.push_str(&format!(
            "add(T) classification: {}\n",
            if t.classification_matches() { "matches" } else { "MISMATCH" }
        ));
        v.insert(
            "tilting".into(),
            json!({
                "self_ext": t.self_ext,
                "negative_self_ext": t.negative_self_ext,
                "end_dim": t.end_dim,
                "classification_matches": t.classification_matches(),
                "classification": t.classification.iter().map(|e| json!({
                    "object": e.object, "in_add_t": e.in_add_t, "ext_dims": e.ext_dims, "vanishing": e.vanishing,
                })).collect::<Vec<_>>(),
            }),
        );
        if !t.passed() {
            status = Status::Fail;
        }
    }
    v.insert("status".into(), json!(status.label()));
    Ok(Outcome {
        status,
        text,
        verdicts: Value::Object(v),
    })
}
