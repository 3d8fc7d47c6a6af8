//! Subcommand implementations. Each returns an [`Output`] holding every
//! rendering; `main` prints the requested one.

use std::fmt::Write as _;

use hessdot::dot_action::e_positivity_report;
use hessdot::induction::{has_theorem_failure, verify_h, verify_n};
use hessdot::orientations::{
    for_each_acyclic_orientation, max_sink_set_size, sink_ascent_table, sink_set_json, sink_sets,
};
use hessdot::roots::{
    enumerate_hessenberg_functions, height_via_chains, ideal_of, is_abelian, is_strictly_negative,
    lower_central_series, roots_of,
};
use hessdot::{
    build_graph, partitions_of, Composition, DecompositionCache, HessenbergFunction, Suite,
    Summary, VerifyOptions,
};
use serde_json::{json, Value};

use crate::error::CliError;

/// A command result in every supported format.
pub struct Output {
    pub json: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub pretty: String,
    /// A theorem-level check failed.
    pub theorem_failure: bool,
}

impl Output {
    fn new(
        json: Value,
        csv_header: Vec<&'static str>,
        csv_rows: Vec<Vec<String>>,
        pretty: String,
    ) -> Self {
        Self {
            json,
            csv_header,
            csv_rows,
            pretty,
            theorem_failure: false,
        }
    }
}

fn parse_values(text: &str, what: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|v| {
            v.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!(
                    "{what} `{text}`: `{v}` is not a nonnegative integer"
                ))
            })
        })
        .collect()
}

/// Parses and validates a comma-separated Hessenberg function.
pub fn parse_h(text: &str, max_n: usize) -> Result<HessenbergFunction, CliError> {
    let values = parse_values(text, "Hessenberg function")?;
    guard(values.len(), max_n)?;
    HessenbergFunction::new(values)
        .map_err(|e| CliError::Usage(format!("invalid Hessenberg function `{text}`: {e}")))
}

fn parse_composition(text: &str, n: usize) -> Result<Composition, CliError> {
    let parts = parse_values(text, "composition")?;
    if parts.contains(&0) || parts.iter().sum::<usize>() != n {
        return Err(CliError::Usage(format!(
            "`{text}` is not a composition of {n} into positive parts"
        )));
    }
    Ok(Composition::new(parts))
}

/// The size guard.
pub fn guard(n: usize, max_n: usize) -> Result<(), CliError> {
    if n > max_n {
        return Err(CliError::SizeGuard { n, max_n });
    }
    Ok(())
}

fn tuple(values: &[usize]) -> String {
    let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", shown.join(","))
}

pub fn analyze(h: &HessenbergFunction) -> Result<Output, CliError> {
    let graph = build_graph(h);
    let (minus, _) = roots_of(h);
    let ideal = ideal_of(h);
    let height = lower_central_series(&ideal)?.height;
    let m = max_sink_set_size(&graph);
    let mut sizes = serde_json::Map::new();
    let mut degree_table = Vec::new();
    for k in 1..=m {
        let sets = sink_sets(&graph, k);
        sizes.insert(k.to_string(), json!(sets.len()));
        if k >= 2 {
            for t in &sets {
                degree_table.push(sink_set_json(h, t)?);
            }
        }
    }
    let json = json!({
        "h": h.values(),
        "n": h.n(),
        "negative_roots": minus.len(),
        "ideal": ideal.pairs(),
        "abelian": is_abelian(h),
        "strictly_negative": is_strictly_negative(h),
        "height": height,
        "chain_height": height_via_chains(&ideal),
        "edges": graph.edges().len(),
        "m_gamma": m,
        "sink_set_sizes": sizes,
        "sink_sets": degree_table,
    });
    let scalar_fields = [
        "n",
        "negative_roots",
        "abelian",
        "strictly_negative",
        "height",
        "chain_height",
        "edges",
        "m_gamma",
    ];
    let mut rows = vec![vec!["h".to_string(), tuple(h.values())]];
    rows.extend(
        scalar_fields
            .iter()
            .map(|f| vec![f.to_string(), json[f].to_string()]),
    );
    rows.push(vec!["ideal".into(), json["ideal"].to_string()]);
    rows.push(vec![
        "sink_set_sizes".into(),
        json["sink_set_sizes"].to_string(),
    ]);
    let mut pretty = String::new();
    for row in &rows {
        let _ = writeln!(pretty, "{:<18} {}", row[0], row[1]);
    }
    for t in &degree_table {
        let _ = writeln!(
            pretty,
            "T = {:<12} deg = {:<3} h_T = {}",
            t["T"].to_string(),
            t["deg"],
            t["h_T"]
        );
    }
    Ok(Output::new(json, vec!["field", "value"], rows, pretty))
}

fn term(coeff: i128, label: &str) -> String {
    if coeff == 1 {
        format!("M^({label})")
    } else {
        format!("{coeff}M^({label})")
    }
}

pub fn decompose(h: &HessenbergFunction, cache: &DecompositionCache) -> Result<Output, CliError> {
    let dec = cache.get(h)?;
    let negatives = e_positivity_report(&dec);
    let mut json = dec.to_json();
    json["e_positivity"] = json!({ "e_positive": negatives.is_empty(), "negative": negatives });
    let rows = dec
        .rows()
        .into_iter()
        .map(|(i, lambda, c, d)| vec![i.to_string(), lambda, c.to_string(), d.to_string()])
        .collect();
    let mut pretty = format!("h = {}   m(Γ_h) = {}\n", tuple(h.values()), dec.m_gamma);
    for (i, row) in dec.c.iter().enumerate() {
        let terms: Vec<String> = row
            .iter()
            .zip(&dec.labels)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, l)| term(c, &l.to_string()))
            .collect();
        let shown = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        let _ = writeln!(pretty, "H^{} = {shown}", 2 * i);
    }
    let _ = writeln!(
        pretty,
        "e-positive: {}",
        if negatives.is_empty() { "yes" } else { "no" }
    );
    Ok(Output::new(
        json,
        vec!["degree", "lambda", "c", "d"],
        rows,
        pretty,
    ))
}

pub fn betti(
    h: &HessenbergFunction,
    nu: Option<&str>,
    cache: &DecompositionCache,
) -> Result<Output, CliError> {
    let compositions = match nu {
        Some(text) => vec![parse_composition(text, h.n())?],
        None => partitions_of(h.n())
            .list()
            .iter()
            .map(Composition::from)
            .collect(),
    };
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut pretty = String::new();
    for nu in &compositions {
        let poly = cache.poincare(nu, h)?;
        let label: Vec<String> = nu.parts().iter().map(ToString::to_string).collect();
        let label = label.join(",");
        for (i, c) in poly.coeffs.iter().enumerate() {
            rows.push(vec![label.clone(), i.to_string(), c.to_string()]);
        }
        let _ = writeln!(pretty, "ν = ({label}): {:?}", poly.trimmed());
        entries.push(json!({ "nu": nu.parts(), "coeffs": poly.coeffs }));
    }
    let json = json!({ "h": h.values(), "poincare": entries });
    Ok(Output::new(
        json,
        vec!["nu", "degree", "coefficient"],
        rows,
        pretty,
    ))
}

pub fn orientations(h: &HessenbergFunction, list: bool) -> Result<Output, CliError> {
    let graph = build_graph(h);
    let table = sink_ascent_table(&graph);
    let mut counts = Vec::new();
    let mut rows = Vec::new();
    let mut pretty = format!("h = {}   edges = {:?}\n", tuple(h.values()), graph.edges());
    let mut total = 0u64;
    for (k, by_asc) in table.iter().enumerate() {
        for (asc, &count) in by_asc.iter().enumerate() {
            if count > 0 {
                total += count;
                counts.push(json!({ "sinks": k, "asc": asc, "count": count }));
                rows.push(vec![k.to_string(), asc.to_string(), count.to_string()]);
                let _ = writeln!(pretty, "sinks = {k:<2} asc = {asc:<3} count = {count}");
            }
        }
    }
    let _ = writeln!(pretty, "acyclic orientations: {total}");
    let sets = (1..=max_sink_set_size(&graph))
        .flat_map(|k| sink_sets(&graph, k))
        .map(|t| sink_set_json(h, &t))
        .collect::<hessdot::Result<Vec<_>>>()?;
    let mut json = json!({
        "h": h.values(),
        "edges": graph.edges(),
        "acyclic_orientations": total,
        "sink_ascent": counts,
        "sink_sets": sets,
    });
    if list {
        let mut all = Vec::new();
        for_each_acyclic_orientation(&graph, |o| all.push(o.to_json(&graph)));
        json["orientations"] = Value::Array(all);
    }
    Ok(Output::new(
        json,
        vec!["sinks", "asc", "count"],
        rows,
        pretty,
    ))
}

pub fn verify(
    target: &str,
    suite: Suite,
    max_n: usize,
    cache: &DecompositionCache,
) -> Result<Output, CliError> {
    let options = VerifyOptions::default();
    let reports = if target.contains(',') {
        verify_h(&parse_h(target, max_n)?, suite, &options, cache)?
    } else {
        let n: usize = target.parse().map_err(|_| {
            CliError::Usage(format!(
                "`{target}` is neither a size n nor a Hessenberg function"
            ))
        })?;
        if n == 0 {
            return Err(CliError::Usage("n must be at least 1".into()));
        }
        guard(n, max_n)?;
        verify_n(n, suite, &options, cache)?
    };
    let summary = Summary::of(&reports);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.check.clone(),
                json!(r.kind).as_str().unwrap_or_default().to_string(),
                r.passed.to_string(),
                r.location.to_string(),
            ]
        })
        .collect();
    let mut pretty = String::new();
    for r in &reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(pretty, "{status} {:<30} {}", r.check, r.location);
    }
    let _ = writeln!(
        pretty,
        "{} checks: {} passed, {} failed, {} findings",
        summary.total, summary.passed, summary.failed, summary.findings
    );
    let mut output = Output::new(
        json!({ "summary": summary, "reports": reports }),
        vec!["check", "kind", "passed", "location"],
        rows,
        pretty,
    );
    output.theorem_failure = has_theorem_failure(&reports);
    Ok(output)
}

pub fn enumerate(
    n: usize,
    abelian: bool,
    strictly_negative: bool,
    max_n: usize,
) -> Result<Output, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    guard(n, max_n)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut pretty = String::new();
    for h in enumerate_hessenberg_functions(n) {
        let (a, s) = (is_abelian(&h), is_strictly_negative(&h));
        if (abelian && !a) || (strictly_negative && !s) {
            continue;
        }
        rows.push(vec![tuple(h.values()), a.to_string(), s.to_string()]);
        let _ = writeln!(pretty, "{}", tuple(h.values()));
        entries.push(json!({ "h": h.values(), "abelian": a, "strictly_negative": s }));
    }
    Ok(Output::new(
        Value::Array(entries),
        vec!["h", "abelian", "strictly_negative"],
        rows,
        pretty,
    ))
}
