//! Integer certification of the inequalities relating `α₁`, `τ`, `τ_B` and
//! `b`, plus recognition of the graphs where `α₁ = n²/2 − m` is attained.
//!
//! Every inequality is stored with denominators cleared, so `lhs <= rhs` is
//! decided in exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{
    bits, complement, complete_bipartite, degree_in, join, EdgeSet, Graph, GraphError,
};
use crate::graph6;
use crate::solvers;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    /// `4(α₁ + τ) <= n²`
    Egt,
    /// `4(α₁ + τ_B) <= n²`
    Bip,
    /// `16(α₁ + τ_B) <= 5n²`
    Cor516,
    /// `4α₁ <= n·b`
    LemmaNb4,
    /// `4τ_B <= n² − b²`
    LemmaTaub,
    /// `2α₁ <= n² − 2m`
    ThmMatch,
}

/// Conjecture checks may fail (a counterexample); theorem checks may not (a bug).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Conjecture,
    Theorem,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Egt,
        CheckName::Bip,
        CheckName::Cor516,
        CheckName::LemmaNb4,
        CheckName::LemmaTaub,
        CheckName::ThmMatch,
    ];

    pub fn kind(self) -> CheckKind {
        match self {
            CheckName::Egt | CheckName::Bip => CheckKind::Conjecture,
            _ => CheckKind::Theorem,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Egt => "egt",
            CheckName::Bip => "bip",
            CheckName::Cor516 => "cor516",
            CheckName::LemmaNb4 => "lemma-nb4",
            CheckName::LemmaTaub => "lemma-taub",
            CheckName::ThmMatch => "thm-match",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check `{0}`")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckName {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

/// One evaluated inequality `lhs <= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub tight: bool,
}

impl Check {
    pub fn new(lhs: i64, rhs: i64) -> Self {
        Self { lhs, rhs, holds: lhs <= rhs, tight: lhs == rhs }
    }
}

fn i(x: usize) -> i64 {
    x as i64
}

pub fn check_egt(n: usize, alpha1: usize, tau: usize) -> Check {
    Check::new(4 * (i(alpha1) + i(tau)), i(n) * i(n))
}

pub fn check_bip_conjecture(n: usize, alpha1: usize, tau_b: usize) -> Check {
    Check::new(4 * (i(alpha1) + i(tau_b)), i(n) * i(n))
}

pub fn check_cor_5n2_16(n: usize, alpha1: usize, tau_b: usize) -> Check {
    Check::new(16 * (i(alpha1) + i(tau_b)), 5 * i(n) * i(n))
}

pub fn check_lemma_nb4(n: usize, alpha1: usize, b: usize) -> Check {
    Check::new(4 * i(alpha1), i(n) * i(b))
}

pub fn check_lemma_taub(n: usize, tau_b: usize, b: usize) -> Check {
    Check::new(4 * i(tau_b), i(n) * i(n) - i(b) * i(b))
}

pub fn check_thm_match(n: usize, m: usize, alpha1: usize) -> Check {
    Check::new(2 * i(alpha1), i(n) * i(n) - 2 * i(m))
}

/// Sizes `[r₁, …, r_t]` (ascending) with `G ≅ K_{r₁,r₁} ∨ … ∨ K_{r_t,r_t}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JoinProfile {
    parts: Vec<usize>,
}

impl JoinProfile {
    /// Sorts the parts; every part must be at least 1.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, GraphError> {
        if parts.contains(&0) {
            return Err(GraphError::InvalidConstruction("join parts must be at least 1"));
        }
        let n: usize = parts.iter().map(|r| 2 * r).sum();
        if n > crate::graph::MAX_VERTICES {
            return Err(GraphError::CapacityExceeded { n, max: crate::graph::MAX_VERTICES });
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|r| 2 * r).sum()
    }

    /// `K_{r₁,r₁} ∨ … ∨ K_{r_t,r_t}`, factors laid out consecutively.
    pub fn to_graph(&self) -> Graph {
        let factors: Vec<Graph> = self
            .parts
            .iter()
            .map(|&r| complete_bipartite(r, r).expect("checked capacity"))
            .collect();
        join(&factors).expect("checked capacity")
    }

    /// The triangle-independent set of size `Σ rᵢ²` made of the edges inside
    /// each factor, on the labelling of [`JoinProfile::to_graph`].
    pub fn certified_set(&self) -> (Graph, EdgeSet) {
        let g = self.to_graph();
        let mut a = EdgeSet::empty(&g);
        let mut offset = 0;
        for &r in &self.parts {
            for u in offset..offset + r {
                for v in offset + r..offset + 2 * r {
                    a.insert_unchecked(u, v);
                }
            }
            offset += 2 * r;
        }
        (g, a)
    }
}

impl fmt::Display for JoinProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Recognises joins of balanced complete bipartite graphs: `G` qualifies iff
/// its complement is a disjoint union of cliques in which every clique size
/// occurs an even number of times.
pub fn recognize_join_of_balanced_bicliques(g: &Graph) -> Option<JoinProfile> {
    let co = complement(g);
    let mut unseen = co.vertex_mask();
    let mut sizes = Vec::new();
    while unseen != 0 {
        let v = unseen.trailing_zeros() as usize;
        let clique = co.row(v) | 1 << v;
        if bits(clique).any(|u| co.row(u) | 1 << u != clique) {
            return None;
        }
        sizes.push(clique.count_ones() as usize);
        unseen &= !clique;
    }
    sizes.sort_unstable();
    let mut parts = Vec::with_capacity(sizes.len() / 2);
    for pair in sizes.chunks(2) {
        match pair {
            [a, b] if a == b => parts.push(*a),
            _ => return None,
        }
    }
    JoinProfile::new(parts).ok()
}

/// A per-edge inequality that an optimal triangle-independent set violated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessViolation {
    /// `d_A(u) + d_A(v) > b(G)` for an edge `uv` of `G`.
    NeighborhoodSum { u: usize, v: usize, lhs: usize, rhs: usize },
    /// `d_A(u) > n − d_G(v)` for an edge `uv` of `A`.
    EndpointDegree { u: usize, v: usize, lhs: usize, rhs: usize },
}

/// Checks `d_A(u) + d_A(v) <= b` on every edge of `g` and
/// `d_A(u) <= n − d_G(v)` in both orientations of every edge of `a`.
pub fn certify_witness_invariants(g: &Graph, a: &EdgeSet, b: usize) -> Vec<WitnessViolation> {
    let n = g.n();
    let deg_a: Vec<usize> = (0..n).map(|v| degree_in(a, v)).collect();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let lhs = deg_a[u] + deg_a[v];
        if lhs > b {
            out.push(WitnessViolation::NeighborhoodSum { u, v, lhs, rhs: b });
        }
    }
    for (x, y) in a.pairs() {
        for (u, v) in [(x, y), (y, x)] {
            let rhs = n - g.degree(v);
            if deg_a[u] > rhs {
                out.push(WitnessViolation::EndpointDegree { u, v, lhs: deg_a[u], rhs });
            }
        }
    }
    out
}

/// Everything known about one graph: parameter values, every check, the join
/// profile when there is one, and any witness-invariant violations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha1: usize,
    pub tau: usize,
    pub tau_b: usize,
    pub b: usize,
    pub checks: BTreeMap<CheckName, Check>,
    pub join_profile: Option<JoinProfile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness_violations: Vec<WitnessViolation>,
}

impl BoundReport {
    /// Solves all four parameters and evaluates every check.
    pub fn evaluate(g: &Graph) -> Self {
        let a = solvers::alpha1(g);
        let tau = solvers::tau(g).value;
        let tau_b = solvers::tau_b(g).value;
        let b = solvers::max_induced_bipartite(g).value;
        let mut report = Self::from_values(g, a.value, tau, tau_b, b);
        report.witness_violations = certify_witness_invariants(g, &a.witness, b);
        report
    }

    pub fn from_values(g: &Graph, alpha1: usize, tau: usize, tau_b: usize, b: usize) -> Self {
        let (n, m) = (g.n(), g.m());
        let checks = BTreeMap::from([
            (CheckName::Egt, check_egt(n, alpha1, tau)),
            (CheckName::Bip, check_bip_conjecture(n, alpha1, tau_b)),
            (CheckName::Cor516, check_cor_5n2_16(n, alpha1, tau_b)),
            (CheckName::LemmaNb4, check_lemma_nb4(n, alpha1, b)),
            (CheckName::LemmaTaub, check_lemma_taub(n, tau_b, b)),
            (CheckName::ThmMatch, check_thm_match(n, m, alpha1)),
        ]);
        Self {
            graph6: graph6::encode(g),
            n,
            m,
            alpha1,
            tau,
            tau_b,
            b,
            checks,
            join_profile: recognize_join_of_balanced_bicliques(g),
            witness_violations: Vec::new(),
        }
    }

    pub fn check(&self, name: CheckName) -> Check {
        self.checks[&name]
    }

    /// Theorem checks that fail, including a mismatch between tightness of
    /// `thm-match` and acceptance by the join recogniser.
    pub fn theorem_failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .filter(|(name, c)| name.kind() == CheckKind::Theorem && !c.holds)
            .map(|(name, c)| format!("{name}: {} > {}", c.lhs, c.rhs))
            .collect();
        let tight = self.check(CheckName::ThmMatch).tight;
        if tight != self.join_profile.is_some() {
            out.push(format!(
                "thm-match tight = {tight} but join recogniser {}",
                if self.join_profile.is_some() { "accepts" } else { "rejects" }
            ));
        }
        out.extend(self.witness_violations.iter().map(|v| format!("witness: {v:?}")));
        out
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn csv_header() -> Vec<String> {
        let mut cols: Vec<String> =
            ["graph6", "n", "m", "alpha1", "tau", "tau_b", "b"].map(String::from).to_vec();
        for name in CheckName::ALL {
            for field in ["lhs", "rhs", "holds", "tight"] {
                cols.push(format!("{name}_{field}"));
            }
        }
        cols.push("join_profile".into());
        cols
    }

    pub fn csv_record(&self) -> Vec<String> {
        let mut rec = vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.alpha1.to_string(),
            self.tau.to_string(),
            self.tau_b.to_string(),
            self.b.to_string(),
        ];
        for name in CheckName::ALL {
            let c = self.check(name);
            rec.extend([c.lhs.to_string(), c.rhs.to_string(), c.holds.to_string(), c.tight.to_string()]);
        }
        rec.push(self.join_profile.as_ref().map(|p| p.to_string()).unwrap_or_default());
        rec
    }
}
