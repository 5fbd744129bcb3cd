//! The analysis report: a single structured document with stable key
//! ordering, serializable as JSON or rendered as text. Vectors print as
//! primitive integer tuples with an explicit denominator when needed.

use exactla::vector::QVec;
use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use std::fmt::Write as _;

pub fn format_vector(v: &QVec) -> String {
    let mut den = BigInt::from(1);
    for x in v {
        den = den.lcm(x.denom());
    }
    let ints: Vec<String> = v
        .iter()
        .map(|x| (x.numer() * (&den / x.denom())).to_string())
        .collect();
    if den == BigInt::from(1) {
        format!("({})", ints.join(","))
    } else {
        format!("({})/{}", ints.join(","), den)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub seed: u64,
    pub instance: InstanceEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cf: Option<CfSection>,
    pub spcl: Vec<SpclEntry>,
    /// Cover relations of the containment order on spcl, as index pairs
    /// (lower, upper).
    pub hasse: Vec<(usize, usize)>,
    pub exceptional: Vec<ExceptionalEntry>,
    pub convergence: Vec<ConvergenceEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ifd: Vec<IfdEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<(String, u128)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceEcho {
    pub name: String,
    pub root_datum: String,
    /// 1-based simple-root indices of G.
    pub g_simple: Vec<usize>,
    pub weights: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub fund_chars: Vec<String>,
    pub oracle: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CfSection {
    pub components: Vec<CfComponentEntry>,
    pub omegas_independent: bool,
    pub spcl_trivial: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CfComponentEntry {
    /// 1-based weight indices.
    pub members: Vec<usize>,
    pub omega: String,
    pub fund_chars: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpclEntry {
    /// 1-based weight indices of Psi_U.
    pub members: Vec<usize>,
    pub special: String,
    pub minset: String,
    /// 1-based simple-root indices of the stabilizer Levi.
    pub stab: Option<Vec<usize>>,
    pub env: Option<Vec<usize>>,
    pub lambda: String,
    pub matching: Option<Vec<(usize, String)>>,
    pub lambda_identity_checked: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalEntry {
    /// Index into spcl.
    pub subspace: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_prime: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_vector: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceEntry {
    pub subspace: usize,
    pub mu: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IfdEntry {
    pub name: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stab: Option<Vec<usize>>,
    pub standard_position: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "pvs report v{} (seed {})", self.tool_version, self.seed);
        let _ = writeln!(
            s,
            "instance {} on {} with G = simple roots {:?}",
            self.instance.name, self.instance.root_datum, self.instance.g_simple
        );
        let _ = writeln!(s, "weights ({}):", self.instance.weights.len());
        for (i, w) in self.instance.weights.iter().enumerate() {
            let _ = writeln!(
                s,
                "  {:>3}  {}  x{}",
                i + 1,
                w,
                self.instance.multiplicities[i]
            );
        }
        let _ = writeln!(s, "fundamental characters: {}", self.instance.fund_chars.join(" "));
        if let Some(cf) = &self.cf {
            let _ = writeln!(
                s,
                "cf: {} component(s), independent characters: {}, Spcl trivial: {}",
                cf.components.len(),
                cf.omegas_independent,
                cf.spcl_trivial
            );
            for c in &cf.components {
                let _ = writeln!(s, "  component {:?} omega {}", c.members, c.omega);
            }
        }
        let _ = writeln!(s, "spcl ({} entries):", self.spcl.len());
        for (i, e) in self.spcl.iter().enumerate() {
            let _ = writeln!(
                s,
                "  [{}] members {:?} special={} minset={} stab={:?} env={:?}",
                i, e.members, e.special, e.minset, e.stab, e.env
            );
        }
        let _ = writeln!(s, "hasse cover edges: {:?}", self.hasse);
        for e in &self.exceptional {
            let _ = writeln!(
                s,
                "exceptional[{}]: {}{}",
                e.subspace,
                e.status,
                match (&e.u_prime, &e.kernel_vector) {
                    (Some(u), Some(k)) => format!(" u'={u:?} x={k}"),
                    _ => String::new(),
                }
            );
        }
        for e in &self.convergence {
            let _ = writeln!(
                s,
                "convergence[{}] mu={}: {}{}",
                e.subspace,
                e.mu,
                e.outcome,
                e.witness
                    .as_ref()
                    .map(|w| format!(" witness {w}"))
                    .unwrap_or_default()
            );
        }
        for e in &self.ifd {
            let _ = writeln!(
                s,
                "ifd {}: {} word={:?} members={:?} (standard position: {})",
                e.name, e.outcome, e.word, e.members, e.standard_position
            );
        }
        if let Some(t) = &self.timings_ms {
            for (k, v) in t {
                let _ = writeln!(s, "timing {k}: {v} ms");
            }
        }
        s
    }
}
