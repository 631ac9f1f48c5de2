use std::fmt::Write as _;

use purebraid::braidlie::{PnLieElement, PureBraidLie};
use purebraid::central::{
    adjoint_kernel_with, centralizer_of_element, centralizer_of_top_with, matches_prediction, verify_theorem_with,
    Direct, MatrixSource,
};
use purebraid::freelie::witt_dimension;
use purebraid::repmaps::{criterion_test_with, Conclusion, CriterionReport, RepresentationSpec, DEFAULT_ORDER};
use purebraid::syntax::parse_element;
use serde_json::{json, Map, Value};

use crate::args::{CacheAction, Command, Settings};
use crate::cache::DiskCache;
use crate::report::Report;
use crate::{EXIT_CRITERION_FAILED, EXIT_OK, EXIT_VERIFY_FAILED};

type Outcome = Result<Report, String>;

/// Runs a command; the second value holds cache warnings for stderr.
pub fn execute(command: &Command, settings: &Settings) -> (Outcome, Vec<String>) {
    let cache = match &settings.cache_dir {
        Some(dir) => match DiskCache::new(dir) {
            Ok(c) => Some(c),
            Err(e) => return (Err(format!("cannot use cache directory {}: {e}", dir.display())), Vec::new()),
        },
        None => None,
    };
    let src: &dyn MatrixSource = match &cache {
        Some(c) => c,
        None => &Direct,
    };
    let outcome = match command {
        Command::Dims => dims(settings),
        Command::Basis => basis(settings, src),
        Command::Bracket { expr } => bracket(settings, expr),
        Command::Verify => verify(settings, src),
        Command::Centralizer { .. } => centralizer(settings, src),
        Command::AdjointKernel => adjoint(settings, src),
        Command::Criterion { .. } => criterion(settings, src),
        Command::Cache { action } => match &cache {
            Some(c) => cache_command(*action, settings, c),
            None => Err(format!("the cache commands need --cache-dir or {}", crate::args::CACHE_ENV)),
        },
    };
    let warnings = cache.map(|c| c.take_warnings()).unwrap_or_default();
    (outcome.map(|r| Report { command: command.name().to_string(), ..r }), warnings)
}

fn err(e: purebraid::Error) -> String {
    e.to_string()
}

fn lie_for(settings: &Settings, min_n: usize) -> Result<PureBraidLie, String> {
    let n = settings.require_n()?;
    if n < min_n {
        return Err(format!("--n {n} is too small for this command (need n >= {min_n})"));
    }
    Ok(PureBraidLie::new(n).map_err(err)?.with_degree_cap(settings.degree_cap))
}

fn inputs(settings: &Settings, extra: &[(&str, Value)]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(settings.n));
    m.insert("max_degree".into(), json!(settings.max_degree));
    m.insert("degree_cap".into(), json!(settings.degree_cap));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    m
}

fn report(inputs: Map<String, Value>, status: &str, result: Value, text: String, exit_code: i32) -> Report {
    Report { command: String::new(), inputs, status: status.into(), result, text, exit_code, notes: Vec::new() }
}

fn elements(xs: &[PnLieElement]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn dims(settings: &Settings) -> Outcome {
    let lie = lie_for(settings, 2)?;
    let max_q = settings.require_max_degree()?;
    let n = lie.n();
    let mut text = format!("ranks of E_0^q(P_{n}) as a sum over free factors L[V_2] .. L[V_{n}]\n");
    let mut rows = Vec::new();
    for q in 1..=max_q {
        let parts: Vec<u64> = (2..=n).map(|m| witt_dimension((m - 1) as u64, q as u64)).collect();
        let total: u64 = parts.iter().sum();
        let split: Vec<String> = parts.iter().map(u64::to_string).collect();
        writeln!(text, "q={q} rank={total} components={}", split.join("+")).unwrap();
        rows.push(json!({ "q": q, "rank": total, "components": (2..=n).zip(&parts).map(|(m, r)| json!({"m": m, "rank": r})).collect::<Vec<_>>() }));
    }
    Ok(report(inputs(settings, &[]), "ok", json!({ "degrees": rows }), text, EXIT_OK))
}

fn basis(settings: &Settings, src: &dyn MatrixSource) -> Outcome {
    let lie = lie_for(settings, 2)?;
    let max_q = settings.require_max_degree()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for q in 1..=max_q {
        let b = src.basis(&lie, q).map_err(err)?;
        let els: Vec<PnLieElement> = (0..b.len()).map(|i| b.element(i)).collect();
        writeln!(text, "q={q} size={}", b.len()).unwrap();
        for (i, x) in els.iter().enumerate() {
            writeln!(text, "  {i}: {x}").unwrap();
        }
        rows.push(json!({ "q": q, "size": b.len(), "elements": elements(&els) }));
    }
    Ok(report(inputs(settings, &[]), "ok", json!({ "degrees": rows }), text, EXIT_OK))
}

fn bracket(settings: &Settings, expr: &str) -> Outcome {
    let lie = lie_for(settings, 2)?;
    let x = parse_element(expr, &lie).map_err(err)?;
    let text = format!("{x}\n");
    let result = json!({ "element": x.to_string(), "degree": x.degree() });
    Ok(report(inputs(settings, &[("expr", json!(expr))]), "ok", result, text, EXIT_OK))
}

fn verify(settings: &Settings, src: &dyn MatrixSource) -> Outcome {
    let lie = lie_for(settings, 3)?;
    let max_q = settings.require_max_degree()?;
    let relations = lie.verify_relations(max_q).map_err(err)?;
    let theorem = verify_theorem_with(&lie, max_q, src).map_err(err)?;
    let pass = relations.passed() && theorem.passed();
    let mut text = format!(
        "relations n={} max_degree={max_q}: braid={} antisymmetry={} jacobi={} containment={} verdict={}\n",
        lie.n(),
        relations.braid_relations,
        relations.antisymmetry,
        relations.jacobi,
        relations.ideal_containment,
        if relations.passed() { "pass" } else { "fail" }
    );
    if let Some(f) = &relations.failure {
        writeln!(text, "relation failure: {} witness={}", f.check, f.value).unwrap();
    }
    text.push_str(&theorem.to_text());
    let degrees: Vec<Value> = theorem
        .degrees
        .iter()
        .map(|d| json!({ "q": d.q, "rank": d.rank, "basis": elements(&d.basis), "pass": d.pass }))
        .collect();
    let result = json!({
        "relations": {
            "braid_relations": relations.braid_relations,
            "antisymmetry": relations.antisymmetry,
            "jacobi": relations.jacobi,
            "containment": relations.ideal_containment,
            "pass": relations.passed(),
            "failure": relations.failure.as_ref().map(|f| json!({ "check": f.check, "witness": f.value })),
        },
        "centralizer": { "degrees": degrees, "pass": theorem.passed() },
    });
    let (status, code) = if pass { ("pass", EXIT_OK) } else { ("fail", EXIT_VERIFY_FAILED) };
    Ok(report(inputs(settings, &[]), status, result, text, code))
}

fn centralizer(settings: &Settings, src: &dyn MatrixSource) -> Outcome {
    let lie = lie_for(settings, 3)?;
    let max_q = settings.require_max_degree()?;
    let element = settings.element.as_deref().map(|e| parse_element(e, &lie)).transpose().map_err(err)?;
    let mut text = match &element {
        Some(z) => format!("centralizer of {z} in E_0(P_{})\n", lie.n()),
        None => format!("centralizer of L[V_{0}] in E_0(P_{0})\n", lie.n()),
    };
    let mut rows = Vec::new();
    for q in 1..=max_q {
        let basis = match &element {
            Some(z) => centralizer_of_element(&lie, z, q),
            None => centralizer_of_top_with(&lie, q, src),
        }
        .map_err(err)?;
        let strs: Vec<String> = basis.iter().map(ToString::to_string).collect();
        write!(text, "q={q} rank={} basis=[{}]", basis.len(), strs.join("; ")).unwrap();
        let mut row = json!({ "q": q, "rank": basis.len(), "basis": elements(&basis) });
        if element.is_none() {
            let expected = matches_prediction(&lie, q, &basis);
            write!(text, " matches_prediction={expected}").unwrap();
            row["matches_prediction"] = json!(expected);
        }
        text.push('\n');
        rows.push(row);
    }
    let extra = [("element", json!(element.as_ref().map(ToString::to_string)))];
    Ok(report(inputs(settings, &extra), "ok", json!({ "degrees": rows }), text, EXIT_OK))
}

fn adjoint(settings: &Settings, src: &dyn MatrixSource) -> Outcome {
    let lie = lie_for(settings, 3)?;
    let max_q = settings.require_max_degree()?;
    let mut text = format!("kernel of ad: E_0(P_{0}) -> Der(E_0(P_{0}))\n", lie.n());
    let mut rows = Vec::new();
    for q in 1..=max_q {
        let k = adjoint_kernel_with(&lie, q, src).map_err(err)?;
        let top = centralizer_of_top_with(&lie, q, src).map_err(err)?;
        let strs: Vec<String> = k.iter().map(ToString::to_string).collect();
        writeln!(text, "q={q} rank={} basis=[{}] equals_top_centralizer={}", k.len(), strs.join("; "), k == top).unwrap();
        rows.push(json!({ "q": q, "rank": k.len(), "basis": elements(&k), "equals_top_centralizer": k == top }));
    }
    Ok(report(inputs(settings, &[]), "ok", json!({ "degrees": rows }), text, EXIT_OK))
}

fn resolve_spec(settings: &Settings) -> Result<RepresentationSpec, String> {
    let rep = settings.rep.as_deref().ok_or("--rep is required (burau, gassner or a spec file)")?;
    match rep {
        "burau" | "gassner" => {
            let n = settings.require_n()?;
            let spec = if rep == "burau" {
                RepresentationSpec::burau(n, DEFAULT_ORDER)
            } else {
                RepresentationSpec::gassner(n, DEFAULT_ORDER)
            };
            spec.map_err(err)
        }
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read representation spec {path}: {e}"))?;
            let spec = RepresentationSpec::from_toml_str(&text).map_err(err)?;
            if let Some(n) = settings.n {
                if n != spec.n() {
                    return Err(format!("--n {n} does not match the spec's n = {}", spec.n()));
                }
            }
            Ok(spec)
        }
    }
}

fn criterion(settings: &Settings, src: &dyn MatrixSource) -> Outcome {
    let spec = resolve_spec(settings)?;
    let max_q = settings.require_max_degree()?;
    let lie = PureBraidLie::new(spec.n()).map_err(err)?.with_degree_cap(settings.degree_cap);
    let r = criterion_test_with(&spec, &lie, max_q, src, None).map_err(err)?;
    let (status, code) = match r.conclusion {
        Conclusion::Met { .. } => ("criterion-met", EXIT_OK),
        Conclusion::Failed { .. } => ("criterion-not-satisfied", EXIT_CRITERION_FAILED),
    };
    let mut extra = vec![("rep", json!(settings.rep))];
    if settings.n.is_none() {
        extra.push(("spec_n", json!(spec.n())));
    }
    Ok(report(inputs(settings, &extra), status, criterion_json(&r), r.to_text(), code))
}

fn criterion_json(r: &CriterionReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "degree": c.degree,
                "check": c.kind.name(),
                "columns": c.columns,
                "rank": c.rank,
                "injective": c.injective,
                "witness": c.witness.as_ref().map(ToString::to_string),
                "witness_label": c.witness_label(),
            })
        })
        .collect();
    let conclusion = match &r.conclusion {
        Conclusion::Met { up_to } => json!({
            "status": "criterion-met",
            "up_to": up_to,
            "beyond_max_degree": "inconclusive",
        }),
        Conclusion::Failed { degree, check } => json!({
            "status": "criterion-not-satisfied",
            "degree": degree,
            "check": check.name(),
        }),
    };
    json!({
        "representation": { "family": r.family, "n": r.n, "size": r.size, "variables": r.vars },
        "specializes_to_burau": r.specializes_to_burau,
        "checks": checks,
        "conclusion": conclusion,
    })
}

fn cache_command(action: CacheAction, settings: &Settings, cache: &DiskCache) -> Outcome {
    let dir = cache.dir().display().to_string();
    match action {
        CacheAction::Build => {
            let lie = lie_for(settings, 2)?;
            let max_q = settings.require_max_degree()?;
            if max_q + 1 > settings.degree_cap {
                return Err(format!("cache build needs degree {} which exceeds the cap {}", max_q + 1, settings.degree_cap));
            }
            cache.build(&lie, max_q).map_err(err)?;
            let s = cache.stats();
            let entries = max_q * (lie.generators().len() + 1) + 1;
            let text = format!("cache {dir}: n={} max_degree={max_q} entries={entries}\n", lie.n());
            let result = json!({ "entries": entries });
            let mut r = report(inputs(settings, &[("cache_dir", json!(dir))]), "ok", result, text, EXIT_OK);
            r.notes.push(format!("computed {} entries, reused {}", s.misses, s.hits));
            Ok(r)
        }
        CacheAction::Inspect => {
            let entries = cache.inspect().map_err(|e| format!("cannot read cache {dir}: {e}"))?;
            let mut text = format!("cache {dir}: {} entries\n", entries.len());
            let mut rows = Vec::new();
            for e in &entries {
                let status = e.problem.as_deref().unwrap_or("ok");
                writeln!(text, "{} [{}] {status}", e.file, e.meta.as_deref().unwrap_or("?")).unwrap();
                rows.push(json!({ "file": e.file, "meta": e.meta, "valid": e.problem.is_none(), "problem": e.problem }));
            }
            let status = if entries.iter().all(|e| e.problem.is_none()) { "ok" } else { "invalid-entries" };
            Ok(report(inputs(settings, &[("cache_dir", json!(dir))]), status, json!({ "entries": rows }), text, EXIT_OK))
        }
        CacheAction::Clear => {
            let removed = cache.clear().map_err(|e| format!("cannot clear cache {dir}: {e}"))?;
            let text = format!("cache {dir}: cleared\n");
            let mut r = report(inputs(settings, &[("cache_dir", json!(dir))]), "ok", json!({ "entries": 0 }), text, EXIT_OK);
            r.notes.push(format!("removed {removed} entries"));
            Ok(r)
        }
    }
}
