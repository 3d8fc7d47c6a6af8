//! The graded decomposition `H^{2i}(Hess(S, h)) = Σ c_{λ,i} M^λ` and the
//! independent oracles that cross-examine it.
//!
//! `c` is computed by solving `N c_i = b_i`, where `b_i[ν]` is the `t^{2i}`
//! coefficient of the Poincaré polynomial of `Hess(X_ν, h)` (the dimension of the
//! `S_ν`-invariants of `H^{2i}(Hess(S, h))`). The oracles — acyclic orientations,
//! `P_h`-tableaux and proper colorings — never feed back into that computation.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::betti::{poincare, Composition, GradedPolynomial};
use crate::error::{Error, Result};
use crate::orientations::{
    build_graph, max_sink_set_size, sink_ascent_table, IncomparabilityGraph,
};
use crate::partitions::{count_ph_tableaux, partitions_of, tabloids, Int, Partition};
use crate::report::CheckReport;
use crate::roots::HessenbergFunction;

/// Poincaré polynomials of `Hess(X_ν, h)` for every `ν ⊢ n`, in `≼` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub h: HessenbergFunction,
    pub labels: Vec<Partition>,
    pub polys: Vec<GradedPolynomial>,
}

impl BettiTable {
    /// The polynomial for `ν`.
    pub fn get(&self, nu: &Partition) -> Option<&GradedPolynomial> {
        self.labels
            .iter()
            .position(|p| p == nu)
            .map(|k| &self.polys[k])
    }
}

/// Computes every `P(Hess(X_ν, h))` directly.
pub fn betti_table(h: &HessenbergFunction) -> BettiTable {
    betti_table_with(h, poincare).expect("poincare cannot fail on a partition of n")
}

/// Like [`betti_table`] but obtains each polynomial from `source` (e.g. a cache).
pub fn betti_table_with<F>(h: &HessenbergFunction, source: F) -> Result<BettiTable>
where
    F: Fn(&Composition, &HessenbergFunction) -> Result<GradedPolynomial> + Sync,
{
    let labels = partitions_of(h.n()).list().to_vec();
    let polys = labels
        .par_iter()
        .map(|nu| source(&Composition::from(nu), h))
        .collect::<Result<Vec<_>>>()?;
    Ok(BettiTable {
        h: h.clone(),
        labels,
        polys,
    })
}

/// Graded coefficients in the tabloid basis (`c`) and the Specht basis (`d`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRepDecomposition {
    pub h: HessenbergFunction,
    /// `m(Γ_h)`.
    pub m_gamma: usize,
    pub labels: Vec<Partition>,
    /// `c[i][k]` is the coefficient of `M^{labels[k]}` in degree `2i`.
    pub c: Vec<Vec<Int>>,
    /// `d[i][k]` is the multiplicity of `S^{labels[k]}` in degree `2i`.
    pub d: Vec<Vec<Int>>,
}

impl GradedRepDecomposition {
    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// Number of degrees stored (`|Φ_h^-| + 1`).
    pub fn degrees(&self) -> usize {
        self.c.len()
    }

    fn index(&self, lambda: &Partition) -> Option<usize> {
        self.labels.iter().position(|p| p == lambda)
    }

    /// `c_{λ,i}`, zero outside the stored range.
    pub fn c_at(&self, lambda: &Partition, i: usize) -> Int {
        match (self.index(lambda), self.c.get(i)) {
            (Some(k), Some(row)) => row[k],
            _ => 0,
        }
    }

    /// `d_{λ,i}`, zero outside the stored range.
    pub fn d_at(&self, lambda: &Partition, i: usize) -> Int {
        match (self.index(lambda), self.d.get(i)) {
            (Some(k), Some(row)) => row[k],
            _ => 0,
        }
    }

    /// `c_{λ,i}` for a possibly shifted degree; negative degrees give 0.
    pub fn c_shifted(&self, lambda: &Partition, i: usize, shift: usize) -> Int {
        i.checked_sub(shift).map_or(0, |j| self.c_at(lambda, j))
    }

    /// `dim H^{2i}(Hess(S, h)) = Σ_λ c_{λ,i} dim M^λ`.
    pub fn betti_numbers(&self) -> Vec<Int> {
        self.c
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.labels)
                    .map(|(c, l)| c * l.tabloid_dimension())
                    .sum()
            })
            .collect()
    }

    /// Decompose JSON: `{"h", "m_gamma", "coeffs": {"c": {"<i>": {"3,1": c}}, "d": …}}`.
    ///
    /// Only nonzero coefficients are listed.
    pub fn to_json(&self) -> Value {
        let table = |rows: &Vec<Vec<Int>>| {
            let mut by_degree = Map::new();
            for (i, row) in rows.iter().enumerate() {
                let mut entries = Map::new();
                for (k, &v) in row.iter().enumerate() {
                    if v != 0 {
                        entries.insert(self.labels[k].to_string(), json!(v as i64));
                    }
                }
                by_degree.insert(i.to_string(), Value::Object(entries));
            }
            Value::Object(by_degree)
        };
        json!({
            "h": self.h.values(),
            "m_gamma": self.m_gamma,
            "coeffs": { "c": table(&self.c), "d": table(&self.d) },
        })
    }

    /// Rows `(degree, λ, c, d)` for every degree and partition.
    pub fn rows(&self) -> Vec<(usize, String, Int, Int)> {
        let mut out = Vec::new();
        for i in 0..self.degrees() {
            for (k, l) in self.labels.iter().enumerate() {
                out.push((i, l.to_string(), self.c[i][k], self.d[i][k]));
            }
        }
        out
    }
}

/// Computes the decomposition of `H^*(Hess(S, h))`.
pub fn decompose(h: &HessenbergFunction) -> Result<GradedRepDecomposition> {
    decompose_from_betti(&betti_table(h))
}

/// Solves `N c_i = b_i` in every degree from a precomputed Betti table.
pub fn decompose_from_betti(table: &BettiTable) -> Result<GradedRepDecomposition> {
    let h = &table.h;
    let tab = tabloids(h.n());
    let degrees = h.dim() + 1;
    let mut c = Vec::with_capacity(degrees);
    let mut d = Vec::with_capacity(degrees);
    for i in 0..degrees {
        let b: Vec<Int> = table.polys.iter().map(|p| Int::from(p.coeff(i))).collect();
        let ci = tab.solve_n(&b)?;
        if tab.n_matrix.apply(&ci) != b {
            return Err(Error::NonIntegralSolution(format!(
                "N·c does not reproduce the Betti vector in degree {i}"
            )));
        }
        d.push(tab.c_to_d(&ci));
        c.push(ci);
    }
    Ok(GradedRepDecomposition {
        h: h.clone(),
        m_gamma: max_sink_set_size(&build_graph(h)),
        labels: table.labels.clone(),
        c,
        d,
    })
}

/// Source of Poincaré polynomials used by [`DecompositionCache`].
pub type BettiSource =
    dyn Fn(&Composition, &HessenbergFunction) -> Result<GradedPolynomial> + Send + Sync;

/// Memoizes decompositions across many checks (sweeps revisit the same `h_T`).
pub struct DecompositionCache {
    source: Box<BettiSource>,
    memo: Mutex<HashMap<HessenbergFunction, Arc<GradedRepDecomposition>>>,
}

impl Default for DecompositionCache {
    fn default() -> Self {
        Self::new(Box::new(poincare))
    }
}

impl DecompositionCache {
    /// A cache drawing Betti polynomials from `source`.
    pub fn new(source: Box<BettiSource>) -> Self {
        Self {
            source,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The decomposition for `h`, computed at most once per cache.
    pub fn get(&self, h: &HessenbergFunction) -> Result<Arc<GradedRepDecomposition>> {
        if let Some(d) = self.memo.lock().expect("memo lock").get(h) {
            return Ok(d.clone());
        }
        let table = betti_table_with(h, &*self.source)?;
        let dec = Arc::new(decompose_from_betti(&table)?);
        self.memo
            .lock()
            .expect("memo lock")
            .insert(h.clone(), dec.clone());
        Ok(dec)
    }

    /// A Poincaré polynomial from the underlying source.
    pub fn poincare(&self, nu: &Composition, h: &HessenbergFunction) -> Result<GradedPolynomial> {
        (self.source)(nu, h)
    }
}

fn location(h: &HessenbergFunction) -> Value {
    json!({ "h": h.values() })
}

/// Sink/ascent oracle: `Σ_{parts(λ)=k} c_{λ,i} = |{ω ∈ A_k : asc(ω) = i}|`.
pub fn orientation_checks(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let graph = build_graph(h);
    orientation_checks_on(&graph, dec)
}

fn orientation_checks_on(
    graph: &IncomparabilityGraph,
    dec: &GradedRepDecomposition,
) -> CheckReport {
    let n = graph.n();
    let table = sink_ascent_table(graph);
    let expected: Vec<Vec<i64>> = (1..=n)
        .map(|k| table[k].iter().map(|&v| v as i64).collect())
        .collect();
    let actual: Vec<Vec<i64>> = (1..=n)
        .map(|k| {
            (0..dec.degrees())
                .map(|i| {
                    dec.labels
                        .iter()
                        .enumerate()
                        .filter(|(_, l)| l.len() == k)
                        .map(|(idx, _)| dec.c[i][idx] as i64)
                        .sum()
                })
                .collect()
        })
        .collect();
    CheckReport::compare(
        "orientation_sink_counts",
        location(graph.source()),
        json!(expected),
        json!(actual),
    )
}

/// Gasharov oracle: `Σ_i d_{λ,i}` equals the number of `P_h`-tableaux of shape `λ^∨`.
pub fn gasharov_check(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let mut expected = Map::new();
    let mut actual = Map::new();
    for (k, l) in dec.labels.iter().enumerate() {
        let count = count_ph_tableaux(h, &l.dual()).expect("same size");
        let summed: Int = dec.d.iter().map(|row| row[k]).sum();
        expected.insert(l.to_string(), json!(count));
        actual.insert(l.to_string(), json!(summed as i64));
    }
    CheckReport::compare(
        "gasharov_tableaux",
        location(h),
        Value::Object(expected),
        Value::Object(actual),
    )
}

/// `Σ_i dim H^{2i}(Hess(S, h)) = n!`.
pub fn total_dimension_check(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let factorial: Int = (1..=h.n() as Int).product();
    let total: Int = dec.betti_numbers().iter().sum();
    CheckReport::compare(
        "total_dimension",
        location(h),
        json!(factorial as i64),
        json!(total as i64),
    )
}

/// The Betti numbers of the smooth projective `Hess(S, h)` are palindromic.
pub fn palindromic_check(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let betti: Vec<i64> = dec.betti_numbers().iter().map(|&v| v as i64).collect();
    let reversed: Vec<i64> = betti.iter().rev().copied().collect();
    CheckReport::compare(
        "betti_palindromic",
        location(h),
        json!(reversed),
        json!(betti),
    )
}

/// `c_{λ,i} = d_{λ,i} = 0` whenever `λ` has more than `m(Γ_h)` parts.
pub fn support_check(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let mut offenders = Vec::new();
    for i in 0..dec.degrees() {
        for (k, l) in dec.labels.iter().enumerate() {
            if l.len() > dec.m_gamma && (dec.c[i][k] != 0 || dec.d[i][k] != 0) {
                offenders.push(json!({"degree": i, "lambda": l.to_string()}));
            }
        }
    }
    CheckReport::compare(
        "support_bound",
        json!({ "h": h.values(), "m_gamma": dec.m_gamma }),
        json!([]),
        json!(offenders),
    )
}

/// A negative coefficient `c_{λ,i}`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NegativeCoefficient {
    pub lambda: Partition,
    pub degree: usize,
    pub value: i64,
}

/// Lists every negative `c_{λ,i}`.
pub fn e_positivity_report(dec: &GradedRepDecomposition) -> Vec<NegativeCoefficient> {
    let mut out = Vec::new();
    for (i, row) in dec.c.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            if v < 0 {
                out.push(NegativeCoefficient {
                    lambda: dec.labels[k].clone(),
                    degree: i,
                    value: v as i64,
                });
            }
        }
    }
    out
}

/// The e-positivity statement as a report: theorem-level for abelian `h`,
/// conjecture-level otherwise.
pub fn e_positivity_check(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let negatives = e_positivity_report(dec);
    let report = CheckReport::compare("e_positivity", location(h), json!([]), json!(negatives));
    if crate::roots::is_abelian(h) {
        report
    } else {
        report.conjecture()
    }
}

/// `Z(λ, μ)`: 0-1 matrices with row sums `λ` and column sums `μ`, i.e. the
/// coefficient of `m_μ` in `e_λ`.
pub fn zero_one_matrices(rows: &[usize], cols: &[usize]) -> u64 {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return 0;
    }
    let mut remaining = cols.to_vec();
    fn rec(rows: &[usize], remaining: &mut [usize]) -> u64 {
        let Some((&r, rest)) = rows.split_first() else {
            return u64::from(remaining.iter().all(|&c| c == 0));
        };
        // Gale–Ryser style pruning: a column cannot take more ones than rows left.
        if remaining.iter().any(|&c| c > rows.len()) {
            return 0;
        }
        let mut total = 0;
        choose(r, 0, remaining, rest, &mut total);
        total
    }
    fn choose(left: usize, col: usize, remaining: &mut [usize], rest: &[usize], total: &mut u64) {
        if left == 0 {
            *total += rec(rest, remaining);
            return;
        }
        if remaining.len() - col < left {
            return;
        }
        for c in col..remaining.len() {
            if remaining[c] > 0 {
                remaining[c] -= 1;
                choose(left - 1, c + 1, remaining, rest, total);
                remaining[c] += 1;
            }
        }
    }
    rec(rows, &mut remaining)
}

/// Monomial coefficients of the chromatic quasisymmetric function:
/// `[x^{content} t^i] X_Γ` for every content vector in `[n]^n` that occurs.
pub fn coloring_counts(graph: &IncomparabilityGraph) -> HashMap<(Vec<u8>, usize), u64> {
    let n = graph.n();
    let mut counts = HashMap::new();
    let mut colors = vec![0usize; n + 1];
    let mut content = vec![0u8; n];
    fn rec(
        graph: &IncomparabilityGraph,
        v: usize,
        asc: usize,
        colors: &mut Vec<usize>,
        content: &mut Vec<u8>,
        counts: &mut HashMap<(Vec<u8>, usize), u64>,
    ) {
        let n = graph.n();
        if v > n {
            *counts.entry((content.clone(), asc)).or_insert(0) += 1;
            return;
        }
        'color: for col in 1..=n {
            let mut extra = 0;
            for (u, &cu) in colors.iter().enumerate().take(v).skip(1) {
                if graph.has_edge(u, v) {
                    if cu == col {
                        continue 'color;
                    }
                    if cu < col {
                        extra += 1;
                    }
                }
            }
            colors[v] = col;
            content[col - 1] += 1;
            rec(graph, v + 1, asc + extra, colors, content, counts);
            content[col - 1] -= 1;
        }
    }
    rec(graph, 1, 0, &mut colors, &mut content, &mut counts);
    counts
}

/// Chromatic quasisymmetric oracle: `[m_μ t^i] X_Γ = Σ_λ c_{λ,i} Z(λ, μ)` for
/// every `μ ⊢ n` and degree `i`, with the coloring side brute-forced. Also
/// checks that the coloring counts are symmetric in the variables.
pub fn csf_oracle(h: &HessenbergFunction, dec: &GradedRepDecomposition) -> CheckReport {
    let graph = build_graph(h);
    let n = h.n();
    let counts = coloring_counts(&graph);
    let mut symmetric = true;
    for ((content, i), &v) in &counts {
        let mu = Partition::from_unsorted(content.iter().map(|&x| x as usize).collect());
        let mut padded: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
        padded.resize(n, 0);
        if counts.get(&(padded, *i)).copied().unwrap_or(0) != v {
            symmetric = false;
        }
    }
    let mut expected = BTreeMap::new();
    let mut actual = BTreeMap::new();
    for i in 0..dec.degrees() {
        for mu in &dec.labels {
            let mut padded: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
            padded.resize(n, 0);
            let observed = counts.get(&(padded, i)).copied().unwrap_or(0) as i64;
            let predicted: Int = dec
                .labels
                .iter()
                .enumerate()
                .map(|(k, l)| dec.c[i][k] * zero_one_matrices(l.parts(), mu.parts()) as Int)
                .sum();
            let key = format!("{i}:{mu}");
            expected.insert(key.clone(), observed);
            actual.insert(key, predicted as i64);
        }
    }
    let mut report =
        CheckReport::compare("csf_monomial", location(h), json!(expected), json!(actual));
    if !symmetric {
        report.passed = false;
        report.actual =
            json!({"error": "coloring counts are not symmetric", "values": report.actual});
    }
    report
}
