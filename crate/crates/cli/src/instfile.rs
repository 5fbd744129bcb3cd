//! The instance file format: JSON descriptions of a PVS instance by split
//! root datum, weight multiset (explicit or DK block), character data,
//! oracle and analysis caps. All indices in files are 1-based; vectors
//! are integer tuples in the declared basis.

use anyhow::{anyhow, bail, Context, Result};
use exactla::vector::{self, QVec};
use pvscore::{Caps, PvsInstance};
use relinv::{CustomFrip, Oracle};
use rootsys::{build_root_datum, ParabolicIndex, RootDatum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub name: String,
    pub root_datum: String,
    /// "simple_roots" (coefficient tuples) or "ambient" (coordinates).
    #[serde(default = "default_basis")]
    pub basis: String,
    /// 1-based indices into the simple roots of the root datum.
    #[serde(default)]
    pub g_simple: Vec<usize>,
    /// Explicit weights; exactly one of psi_v / dk must be present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_v: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<usize>>,
    /// DK block: weighted Dynkin labels on the ambient simple roots.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dk: Option<DkBlock>,
    /// Generators of X*(G); omitted means the coroot annihilator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xstar_g: Option<Vec<Vec<i64>>>,
    /// Fundamental characters; omitted means "take the oracle's FRIP
    /// characters".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fund_chars: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSpec>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<CapsSpec>,
    /// Induced filtration data blocks for the ifd command.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ifds: Vec<IfdBlock>,
}

fn default_basis() -> String {
    "simple_roots".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DkBlock {
    pub h_labels: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapsSpec {
    #[serde(default)]
    pub max_weights: Option<usize>,
    #[serde(default)]
    pub trials: Option<u32>,
    #[serde(default)]
    pub heights: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OracleSpec {
    GlChain { sizes: Vec<usize> },
    SymChain { sizes: Vec<usize> },
    SkewChain { sizes: Vec<usize> },
    SpChain { sizes: Vec<usize> },
    SoChain { sizes: Vec<usize> },
    /// Slot weights are the instance weights in psi order.
    BinaryCubicDiscSym3 {},
    BinaryCubicDiscMat3 {},
    Custom { frips: Vec<CustomFripSpec> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CustomFripSpec {
    /// Character in the file's vector basis.
    pub weight: Vec<i64>,
    pub degree: usize,
    /// terms: [coefficient, [[var, pow], ...]] with 1-based vars.
    pub terms: Vec<(i64, Vec<(usize, u32)>)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IfdBlock {
    pub name: String,
    /// 1-based simple-root indices of the parabolic Q.
    pub q: Vec<usize>,
    /// 1-based index -> weighted Dynkin label on the Levi of Q.
    #[serde(default)]
    pub levi_labels: BTreeMap<String, i64>,
}

impl IfdBlock {
    pub fn to_spec(&self) -> Result<dktype::IfdSpec> {
        let q0: Vec<usize> = one_based(&self.q)?;
        let mut levi = BTreeMap::new();
        for (k, v) in &self.levi_labels {
            let i: usize = k
                .parse()
                .with_context(|| format!("ifd {}: bad levi index {k}", self.name))?;
            if i == 0 {
                bail!("ifd {}: indices are 1-based", self.name);
            }
            levi.insert(i - 1, *v);
        }
        Ok(dktype::IfdSpec {
            q_subset: ParabolicIndex::from_slice(&q0),
            levi_labels: levi,
        })
    }
}

fn one_based(v: &[usize]) -> Result<Vec<usize>> {
    v.iter()
        .map(|&i| {
            if i == 0 {
                Err(anyhow!("indices in instance files are 1-based"))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

impl InstanceFile {
    pub fn load(path: &std::path::Path) -> Result<InstanceFile> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let file: InstanceFile = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        Ok(file)
    }

    fn vector(&self, datum: &RootDatum, v: &[i64], field: &str) -> Result<QVec> {
        match self.basis.as_str() {
            "ambient" => {
                if v.len() != datum.ambient_dim {
                    bail!(
                        "field {field}: vector has length {}, ambient dim is {}",
                        v.len(),
                        datum.ambient_dim
                    );
                }
                Ok(v.iter().map(|&x| vector::rat(x)).collect())
            }
            "simple_roots" => {
                if v.len() != datum.rank() {
                    bail!(
                        "field {field}: coefficient tuple has length {}, rank is {}",
                        v.len(),
                        datum.rank()
                    );
                }
                let coeffs: QVec = v.iter().map(|&x| vector::rat(x)).collect();
                Ok(datum.from_simple_coords(&coeffs))
            }
            other => bail!("unknown basis {other:?}"),
        }
    }

    /// Materializes the instance: builds the root datum, resolves the
    /// weight list (explicit or DK), the oracle binding and the
    /// fundamental characters.
    pub fn to_instance(&self) -> Result<PvsInstance> {
        let datum = build_root_datum(&self.root_datum)
            .map_err(|e| anyhow!("field root_datum: {e}"))?;
        let caps = {
            let mut caps = Caps::default();
            if let Some(c) = &self.caps {
                if let Some(m) = c.max_weights {
                    caps.max_weights = m;
                }
                if let Some(t) = c.trials {
                    caps.trials = t;
                }
                if let Some(h) = &c.heights {
                    caps.heights = h.clone();
                }
            }
            caps
        };
        if self.oracle.is_some() && self.seed.is_none() {
            bail!("field seed: mandatory when an oracle is present");
        }
        let seed = self.seed.unwrap_or(0);

        let (g_simple, psi): (ParabolicIndex, Vec<(QVec, usize)>) =
            match (&self.psi_v, &self.dk) {
                (Some(_), Some(_)) | (None, None) => {
                    bail!("exactly one of psi_v and dk must be present")
                }
                (Some(weights), None) => {
                    let g = ParabolicIndex::from_slice(&one_based(&self.g_simple)?);
                    let mults = match &self.multiplicities {
                        Some(m) => {
                            if m.len() != weights.len() {
                                bail!("field multiplicities: length mismatch with psi_v");
                            }
                            m.clone()
                        }
                        None => vec![1; weights.len()],
                    };
                    let psi = weights
                        .iter()
                        .zip(mults)
                        .map(|(w, m)| Ok((self.vector(&datum, w, "psi_v")?, m)))
                        .collect::<Result<Vec<_>>>()?;
                    (g, psi)
                }
                (None, Some(dk)) => {
                    if dk.h_labels.len() != datum.rank() {
                        bail!(
                            "field dk.h_labels: {} labels for rank {}",
                            dk.h_labels.len(),
                            datum.rank()
                        );
                    }
                    let h = dktype::GradingElement::new(dk.h_labels.clone());
                    if !h.is_dominant() {
                        bail!("field dk.h_labels: grading labels must be nonnegative");
                    }
                    let g: Vec<usize> = (0..datum.rank()).filter(|&i| h.labels[i] == 0).collect();
                    let psi = datum
                        .positive_roots
                        .iter()
                        .filter(|r| h.pair_coeffs(&r.coeffs) == 2)
                        .map(|r| (r.vector.clone(), 1))
                        .collect();
                    (ParabolicIndex::from_slice(&g), psi)
                }
            };

        let oracle: Option<Oracle> = match &self.oracle {
            None => None,
            Some(spec) => Some(self.build_oracle(&datum, spec, &psi)?),
        };
        let fund_chars: Vec<QVec> = match &self.fund_chars {
            Some(list) => list
                .iter()
                .map(|v| self.vector(&datum, v, "fund_chars"))
                .collect::<Result<Vec<_>>>()?,
            None => oracle
                .as_ref()
                .map(|o| o.frip_weights())
                .unwrap_or_default(),
        };
        let xstar: Vec<QVec> = match &self.xstar_g {
            Some(list) => list
                .iter()
                .map(|v| self.vector(&datum, v, "xstar_g"))
                .collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };

        PvsInstance::new(
            &self.name, datum, g_simple, psi, xstar, fund_chars, oracle, caps, seed,
        )
        .map_err(|e| anyhow!("{e}"))
    }

    fn build_oracle(
        &self,
        datum: &RootDatum,
        spec: &OracleSpec,
        psi: &[(QVec, usize)],
    ) -> Result<Oracle> {
        let psi_weights: Vec<QVec> = psi.iter().map(|(w, _)| w.clone()).collect();
        Ok(match spec {
            OracleSpec::GlChain { sizes } => Oracle::GlChain { sizes: sizes.clone() },
            OracleSpec::SymChain { sizes } => Oracle::SymChain { sizes: sizes.clone() },
            OracleSpec::SkewChain { sizes } => Oracle::SkewChain { sizes: sizes.clone() },
            OracleSpec::SpChain { sizes } => Oracle::SpChain { sizes: sizes.clone() },
            OracleSpec::SoChain { sizes } => Oracle::SoChain { sizes: sizes.clone() },
            OracleSpec::BinaryCubicDiscSym3 {} => Oracle::BinaryCubicDiscSym3 {
                slot_weights: psi_weights,
            },
            OracleSpec::BinaryCubicDiscMat3 {} => Oracle::BinaryCubicDiscMat3 {
                slot_weights: psi_weights,
            },
            OracleSpec::Custom { frips } => {
                let frips = frips
                    .iter()
                    .map(|f| {
                        let weight = self.vector(datum, &f.weight, "oracle.frips.weight")?;
                        let terms = f
                            .terms
                            .iter()
                            .map(|(c, powers)| {
                                let powers = powers
                                    .iter()
                                    .map(|&(var, pow)| {
                                        if var == 0 {
                                            bail!("custom FRIP variables are 1-based")
                                        }
                                        Ok((var - 1, pow))
                                    })
                                    .collect::<Result<Vec<_>>>()?;
                                Ok((vector::rat(*c), powers))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok(CustomFrip {
                            weight,
                            degree: f.degree,
                            terms,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Oracle::Custom {
                    slot_weights: psi_weights,
                    frips,
                }
            }
        })
    }
}
