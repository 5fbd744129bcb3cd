//! Analysis orchestration: the full pipeline over one instance, with
//! deterministic report assembly and optional parallelism over the
//! per-subspace certifications.

use crate::instfile::InstanceFile;
use crate::report::*;
use anyhow::Result;
use exactla::vector::{self, QVec, Rat};
use pvscore::{ConvergenceOutcome, ExceptionalStatus, MinsetStatus, PvsInstance, SpecialReport, Trivalent};
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::time::Instant;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Extra mu vectors as coefficient lists over the fundamental
    /// characters.
    pub extra_mu: Vec<Vec<Rat>>,
    pub jobs: Option<usize>,
    pub timings: bool,
}

fn one_based_set(s: &BTreeSet<usize>) -> Vec<usize> {
    s.iter().map(|&j| j + 1).collect()
}

fn trivalent_label(t: Trivalent) -> String {
    match t {
        Trivalent::Yes => "yes".into(),
        Trivalent::No => "no".into(),
        Trivalent::Unknown => "unknown".into(),
    }
}

fn spcl_entry(r: &SpecialReport) -> SpclEntry {
    SpclEntry {
        members: one_based_set(&r.members),
        special: trivalent_label(r.special),
        minset: r.minset.label().into(),
        stab: r.stab.as_ref().map(|p| p.0.iter().map(|&i| i + 1).collect()),
        env: r.env.as_ref().map(|p| p.0.iter().map(|&i| i + 1).collect()),
        lambda: format_vector(&r.lambda),
        matching: r.matching.as_ref().map(|m| {
            m.pairs
                .iter()
                .map(|(j, slot)| {
                    let label = match slot {
                        pvscore::RootSlot::Zero => "0".to_string(),
                        pvscore::RootSlot::Root(v) => format_vector(v),
                    };
                    (j + 1, label)
                })
                .collect()
        }),
        lambda_identity_checked: r.lambda_identity_checked,
    }
}

pub fn instance_echo(file: &InstanceFile, inst: &PvsInstance) -> InstanceEcho {
    InstanceEcho {
        name: inst.name.clone(),
        root_datum: inst.datum.type_label.clone(),
        g_simple: inst.g_simple.0.iter().map(|&i| i + 1).collect(),
        weights: inst.psi.iter().map(|w| format_vector(&w.vector)).collect(),
        multiplicities: inst.psi.iter().map(|w| w.multiplicity).collect(),
        fund_chars: inst.fund_chars.iter().map(format_vector).collect(),
        oracle: file.oracle.as_ref().map(|o| format!("{o:?}")),
    }
}

/// Cover relations of the containment order among the special members.
pub fn hasse_covers(sets: &[BTreeSet<usize>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i == j || !a.is_subset(b) {
                continue;
            }
            let strict = a.len() < b.len();
            if !strict {
                continue;
            }
            let between = sets.iter().enumerate().any(|(k, c)| {
                k != i && k != j && a.is_subset(c) && c.is_subset(b) && a.len() < c.len() && c.len() < b.len()
            });
            if !between {
                edges.push((i, j));
            }
        }
    }
    edges.sort();
    edges
}

pub fn analyze(file: &InstanceFile, inst: &PvsInstance, opts: &AnalyzeOptions) -> Result<Report> {
    if let Some(jobs) = opts.jobs {
        // a per-run pool would be cleaner, but a global pool keeps the
        // rayon wiring trivial and the report assembly is order-fixed
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let mut timings: Vec<(String, u128)> = Vec::new();
    let clock = Instant::now();
    let cf = if inst.weight_count() > 0 {
        let cf = inst.cf_decompose().map_err(crate::error_of)?;
        Some(CfSection {
            components: cf
                .components
                .iter()
                .map(|c| CfComponentEntry {
                    members: one_based_set(&c.members),
                    omega: format_vector(&c.omega),
                    fund_chars: c.fund_chars.iter().map(|&i| i + 1).collect(),
                })
                .collect(),
            omegas_independent: cf.omegas_independent,
            spcl_trivial: cf.spcl_trivial,
        })
    } else {
        None
    };
    timings.push(("cf".into(), clock.elapsed().as_millis()));

    let clock = Instant::now();
    let candidates = inst.enumerate_spcl().map_err(crate::error_of)?;
    let spcl: Vec<SpclEntry> = candidates.iter().map(spcl_entry).collect();
    timings.push(("spcl".into(), clock.elapsed().as_millis()));

    let special_idx: Vec<usize> = candidates
        .iter()
        .enumerate()
        .filter(|(_, r)| r.special.is_yes())
        .map(|(i, _)| i)
        .collect();
    let special_sets: Vec<BTreeSet<usize>> = special_idx
        .iter()
        .map(|&i| candidates[i].members.clone())
        .collect();
    let hasse: Vec<(usize, usize)> = hasse_covers(&special_sets)
        .into_iter()
        .map(|(a, b)| (special_idx[a], special_idx[b]))
        .collect();

    let clock = Instant::now();
    let exceptional: Vec<ExceptionalEntry> = special_idx
        .par_iter()
        .map(|&i| {
            let r = &candidates[i];
            let stab = r.stab.clone().expect("special implies stabilized");
            let status = inst.is_exceptional(&r.members, &stab);
            match status {
                ExceptionalStatus::Exceptional {
                    u_prime,
                    kernel_vector,
                } => ExceptionalEntry {
                    subspace: i,
                    status: "exceptional".into(),
                    u_prime: Some(one_based_set(&u_prime)),
                    kernel_vector: Some(format_vector(&kernel_vector)),
                },
                ExceptionalStatus::NotExceptional => ExceptionalEntry {
                    subspace: i,
                    status: "not-exceptional".into(),
                    u_prime: None,
                    kernel_vector: None,
                },
                ExceptionalStatus::Unknown => ExceptionalEntry {
                    subspace: i,
                    status: "unknown".into(),
                    u_prime: None,
                    kernel_vector: None,
                },
            }
        })
        .collect();
    timings.push(("exceptional".into(), clock.elapsed().as_millis()));

    let clock = Instant::now();
    let mut mus: Vec<QVec> = Vec::new();
    if !inst.fund_chars.is_empty() {
        mus.push(inst.default_mu());
        for coeffs in &opts.extra_mu {
            let mut mu = vector::zeros(inst.dim());
            for (c, chi) in coeffs.iter().zip(&inst.fund_chars) {
                for (a, b) in mu.iter_mut().zip(chi) {
                    *a += c * b;
                }
            }
            mus.push(mu);
        }
    }
    let convergence: Vec<ConvergenceEntry> = special_idx
        .par_iter()
        .flat_map(|&i| {
            let r = &candidates[i];
            mus.par_iter()
                .map(move |mu| {
                    match inst
                        .convergence_certificate(&r.members, mu)
                        .map_err(crate::error_of)
                    {
                        Ok(ConvergenceOutcome::Certificate { rays, .. }) => ConvergenceEntry {
                            subspace: i,
                            mu: format_vector(mu),
                            outcome: "positive".into(),
                            rays: Some(rays.iter().map(format_vector).collect()),
                            witness: None,
                        },
                        Ok(ConvergenceOutcome::Fails { witness, .. }) => ConvergenceEntry {
                            subspace: i,
                            mu: format_vector(mu),
                            outcome: "fails".into(),
                            rays: None,
                            witness: Some(format_vector(&witness)),
                        },
                        Err(e) => ConvergenceEntry {
                            subspace: i,
                            mu: format_vector(mu),
                            outcome: format!("error: {e}"),
                            rays: None,
                            witness: None,
                        },
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    timings.push(("convergence".into(), clock.elapsed().as_millis()));

    let clock = Instant::now();
    let mut ifd_entries = Vec::new();
    for block in &file.ifds {
        ifd_entries.push(run_ifd(inst, block)?);
    }
    timings.push(("ifd".into(), clock.elapsed().as_millis()));

    Ok(Report {
        tool_version: TOOL_VERSION.into(),
        seed: inst.seed,
        instance: instance_echo(file, inst),
        cf,
        spcl,
        hasse,
        exceptional,
        convergence,
        ifd: ifd_entries,
        timings_ms: if opts.timings { Some(timings) } else { None },
    })
}

pub fn run_ifd(inst: &PvsInstance, block: &crate::instfile::IfdBlock) -> Result<IfdEntry> {
    let spec = block.to_spec()?;
    let h = dktype::ifd_to_grading(&inst.datum, &spec).map_err(crate::dk_error_of)?;
    match dktype::standardize_ifiltration(inst, &h) {
        Ok(outcome) => Ok(IfdEntry {
            name: block.name.clone(),
            outcome: "found".into(),
            word: Some(outcome.word.iter().map(|&i| i + 1).collect()),
            members: Some(one_based_set(&outcome.members)),
            stab: outcome
                .report
                .stab
                .as_ref()
                .map(|p| p.0.iter().map(|&i| i + 1).collect()),
            standard_position: outcome.standard_position.label().into(),
        }),
        Err(dktype::DkError::NotFound) => {
            // recompute the unconjugated position's status for the record
            let standard = standard_position_status(inst, &h);
            Ok(IfdEntry {
                name: block.name.clone(),
                outcome: "not-found".into(),
                word: None,
                members: None,
                stab: None,
                standard_position: standard.label().into(),
            })
        }
        Err(e) => Err(crate::dk_error_of(e)),
    }
}

fn standard_position_status(inst: &PvsInstance, h: &dktype::GradingElement) -> MinsetStatus {
    let members: BTreeSet<usize> = inst
        .psi
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            let coeffs = inst.datum.simple_coords(&w.vector);
            let pairing: Rat = coeffs
                .iter()
                .zip(&h.labels)
                .map(|(c, &l)| c * vector::rat(l))
                .sum();
            pairing >= vector::rat(2)
        })
        .map(|(j, _)| j)
        .collect();
    inst.minset_certify(&members)
}
