//! Permutations, inversion sets, and Poincaré polynomials of the regular
//! Hessenberg varieties `Hess(X_ν, h)`, plus shortest coset representatives and
//! the induced Hessenberg function `h_z`.
//!
//! The Poincaré polynomial is the sum over all `w ∈ S_n` with
//! `w⁻¹(J_ν) ⊆ Φ_h` of `t^{2 inv_h(w)}`, where
//! `inv_h(w) = |{(i, j) : i > j, w(i) < w(j), i <= h(j)}|`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{HessenbergFunction, Root, RootSet};

/// A permutation in one-line notation `[w(1), …, w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Self { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            one_line: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Self { one_line: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composition needs equal ranks");
        Self {
            one_line: other.one_line.iter().map(|&v| self.at(v)).collect(),
        }
    }

    /// `N^-(w) = {t_i - t_j : i > j, w(i) < w(j)}`.
    pub fn inversion_set(&self) -> RootSet {
        let n = self.n();
        let mut set = RootSet::empty(n);
        for i in 1..=n {
            for j in 1..i {
                if self.at(i) < self.at(j) {
                    set.insert(Root::new(i, j));
                }
            }
        }
        set
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.inversion_set().len()
    }

    /// The root `w(t_i - t_j) = t_{w(i)} - t_{w(j)}`.
    pub fn act(&self, r: Root) -> Root {
        Root::new(self.at(r.i), self.at(r.j))
    }

    /// Applies [`Permutation::act`] to every member of a root set.
    pub fn act_on(&self, set: &RootSet) -> RootSet {
        RootSet::from_roots(set.n(), set.iter().map(|r| self.act(r)))
            .expect("permutations preserve roots")
    }

    /// Views a permutation fixing `k + 1..=n` as an element of `S_k`.
    pub fn truncate(&self, k: usize) -> Option<Permutation> {
        (self.one_line[k..]
            .iter()
            .enumerate()
            .all(|(s, &v)| v == k + s + 1))
        .then(|| Self {
            one_line: self.one_line[..k].to_vec(),
        })
    }

    /// Embeds `S_k` into `S_n` by fixing `k + 1..=n`.
    pub fn extend(&self, n: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.extend(self.n() + 1..=n);
        Self { one_line }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

impl fmt::Display for Permutation {
    /// Formats as `[1 4 2 5 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line.iter().join(" "))
    }
}

/// All permutations of `[n]` in lexicographic one-line order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(|one_line| Permutation { one_line })
}

/// A composition of `n` into nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    /// A two-part composition `(ν₁, ν₂)`.
    pub fn two(nu1: usize, nu2: usize) -> Self {
        Self {
            parts: vec![nu1, nu2],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Self { parts }
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl From<&crate::partitions::Partition> for Composition {
    fn from(p: &crate::partitions::Partition) -> Self {
        Self {
            parts: p.parts().to_vec(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// `J_ν`: the indices `p` of the simple roots `α_p = t_p - t_{p+1}` that remain
/// after deleting `α_s` for every proper nonzero partial sum `s` of `ν`.
pub fn j_of(nu: &Composition) -> Vec<usize> {
    let n = nu.size();
    let mut cut = vec![false; n + 1];
    let mut sum = 0;
    for &p in nu.parts() {
        sum += p;
        if sum > 0 && sum < n {
            cut[sum] = true;
        }
    }
    (1..n).filter(|&p| !cut[p]).collect()
}

/// `w⁻¹(α_p) ∈ Φ_h` for every `p ∈ J`: with `i = w⁻¹(p)`, `j = w⁻¹(p + 1)`,
/// either `i < j`, or `i > j` and `i <= h(j)`.
pub fn satisfies_condition(w: &Permutation, j_set: &[usize], h: &HessenbergFunction) -> bool {
    let inv = w.inverse();
    satisfies_with_inverse(&inv, j_set, h)
}

fn satisfies_with_inverse(inv: &Permutation, j_set: &[usize], h: &HessenbergFunction) -> bool {
    j_set.iter().all(|&p| {
        let i = inv.at(p);
        let j = inv.at(p + 1);
        i < j || i <= h.h(j)
    })
}

/// `inv_h(w) = |N^-(w) ∩ Φ_h^-|`.
pub fn inv_h(w: &Permutation, h: &HessenbergFunction) -> usize {
    let n = w.n();
    let mut count = 0;
    for j in 1..=n {
        for i in j + 1..=h.h(j) {
            if w.at(i) < w.at(j) {
                count += 1;
            }
        }
    }
    count
}

/// A polynomial `Σ c_i t^{2i}`, stored as `[c_0, c_1, …]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedPolynomial {
    pub coeffs: Vec<i64>,
}

impl GradedPolynomial {
    pub fn zero(len: usize) -> Self {
        Self {
            coeffs: vec![0; len],
        }
    }

    /// Value at `t = 1`.
    pub fn total(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Coefficient of `t^{2i}` (0 beyond the stored range).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Adds `t^{2 shift} · other` in place, growing as needed.
    pub fn add_shifted(&mut self, other: &GradedPolynomial, shift: usize) {
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += c;
        }
    }

    /// Coefficients with trailing zeros removed, for comparisons.
    pub fn trimmed(&self) -> Vec<i64> {
        let mut v = self.coeffs.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Whether `c_i = c_{d-i}` where `d` is the index of the top nonzero term.
    pub fn is_palindromic(&self) -> bool {
        let v = self.trimmed();
        v.iter().eq(v.iter().rev())
    }
}

/// `P(Hess(X_ν, h), t)`. The coefficient vector has length `|Φ_h^-| + 1`.
pub fn poincare(nu: &Composition, h: &HessenbergFunction) -> Result<GradedPolynomial> {
    if nu.size() != h.n() {
        return Err(Error::InvalidComposition {
            parts: nu.parts().to_vec(),
            n: h.n(),
        });
    }
    let j_set = j_of(nu);
    let mut poly = GradedPolynomial::zero(h.dim() + 1);
    for w in permutations(h.n()) {
        if satisfies_condition(&w, &j_set, h) {
            poly.coeffs[inv_h(&w, h)] += 1;
        }
    }
    Ok(poly)
}

/// Whether `z` lists the values `1..=ν₁+1` in increasing order of position,
/// i.e. `z⁻¹(α_i) ∈ Φ^+` for `i = 1..=ν₁`.
pub fn is_shortest_coset_rep(z: &Permutation, nu1: usize) -> bool {
    let inv = z.inverse();
    (1..=nu1).all(|i| inv.at(i) < inv.at(i + 1))
}

/// Factors `w = y z` with `y ∈ S_{[ν₁+1]}` and `z` a shortest coset representative.
///
/// `z` re-sorts the entries of `w` lying in `[ν₁+1]`; `y` (returned in `S_n`,
/// fixing everything above `ν₁+1`) records their original order.
pub fn shortest_coset_decompose(w: &Permutation, nu1: usize) -> Result<(Permutation, Permutation)> {
    let k = nu1 + 1;
    if k > w.n() {
        return Err(Error::InvalidComposition {
            parts: vec![nu1],
            n: w.n(),
        });
    }
    let mut small = 0;
    let one_line = w
        .one_line()
        .iter()
        .map(|&v| {
            if v <= k {
                small += 1;
                small
            } else {
                v
            }
        })
        .collect();
    let z = Permutation { one_line };
    let y = w.compose(&z.inverse());
    debug_assert!(y.truncate(k).is_some());
    Ok((y, z))
}

/// All shortest coset representatives for `S_{[ν₁+1]} \ S_n`, lexicographic.
pub fn shortest_coset_reps(n: usize, nu1: usize) -> Vec<Permutation> {
    permutations(n)
        .filter(|z| is_shortest_coset_rep(z, nu1))
        .collect()
}

/// `h_z` on `[ν₁+1]`, with `Φ_{h_z} = z Φ_h ∩ Φ_ν`: the root `t_i - t_j`
/// (`i, j <= ν₁+1`) belongs iff `z⁻¹(i) <= h(z⁻¹(j))`.
pub fn h_z(h: &HessenbergFunction, z: &Permutation, nu1: usize) -> Result<HessenbergFunction> {
    if z.n() != h.n() || nu1 + 1 > h.n() || !is_shortest_coset_rep(z, nu1) {
        return Err(Error::NotShortestRepresentative(z.one_line().to_vec()));
    }
    let k = nu1 + 1;
    let inv = z.inverse();
    let mut values = Vec::with_capacity(k);
    for j in 1..=k {
        let column: Vec<usize> = (1..=k).filter(|&i| inv.at(i) <= h.h(inv.at(j))).collect();
        let top = column.len();
        if column != (1..=top).collect::<Vec<_>>() {
            return Err(Error::ResultNotHessenberg(format!(
                "column {j} of z Φ_h ∩ Φ_ν is {column:?}, not an initial segment"
            )));
        }
        values.push(top);
    }
    HessenbergFunction::new(values).map_err(|e| Error::ResultNotHessenberg(e.to_string()))
}
