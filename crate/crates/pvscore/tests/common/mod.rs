//! Shared golden-instance builders for the integration tests.
#![allow(dead_code)]

use exactla::vector::{self, QVec};
use pvscore::{Caps, PvsInstance};
use relinv::{CustomFrip, Oracle};
use rootsys::{build_root_datum, ParabolicIndex};

/// Binary quadratic forms for GL2 inside Sp4 coordinates: Psi_V =
/// {beta, beta+alpha, beta+2alpha} with alpha = e1-e2, beta = 2e2.
pub fn binary_quadratics(seed: u64) -> PvsInstance {
    let datum = build_root_datum("C2").unwrap();
    let psi = vec![
        (vec![vector::rat(0), vector::rat(2)], 1),
        (vec![vector::rat(1), vector::rat(1)], 1),
        (vec![vector::rat(2), vector::rat(0)], 1),
    ];
    PvsInstance::new(
        "binary-quadratics",
        datum,
        ParabolicIndex::from_slice(&[0]),
        psi,
        Vec::new(),
        vec![vec![vector::rat(2), vector::rat(2)]],
        Some(Oracle::SymChain { sizes: vec![2] }),
        Caps::default(),
        seed,
    )
    .unwrap()
}

/// Binary cubic forms for GL2 inside G2 coordinates: Psi_V =
/// {beta, beta+alpha, beta+2alpha, beta+3alpha}, alpha short.
pub fn binary_cubics(seed: u64) -> PvsInstance {
    let datum = build_root_datum("G2").unwrap();
    let alpha = datum.simple_roots[0].clone();
    let beta = datum.simple_roots[1].clone();
    let wk = |k: i64| -> QVec {
        vector::add(&beta, &vector::scale(&alpha, &vector::rat(k)))
    };
    let psi: Vec<(QVec, usize)> = (0..4).map(|k| (wk(k), 1)).collect();
    let slot_weights: Vec<QVec> = (0..4).map(wk).collect();
    // slots (x0,x1,x2,x3) = (d,c,b,a) of a x^3 + b x^2 y + c x y^2 + d y^3
    let disc = CustomFrip {
        weight: vector::add(
            &vector::scale(&beta, &vector::rat(4)),
            &vector::scale(&alpha, &vector::rat(6)),
        ),
        degree: 4,
        terms: vec![
            (vector::rat(18), vec![(3, 1), (2, 1), (1, 1), (0, 1)]),
            (vector::rat(-4), vec![(2, 3), (0, 1)]),
            (vector::rat(1), vec![(2, 2), (1, 2)]),
            (vector::rat(-4), vec![(3, 1), (1, 3)]),
            (vector::rat(-27), vec![(3, 2), (0, 2)]),
        ],
    };
    let fund = disc.weight.clone();
    PvsInstance::new(
        "binary-cubics",
        datum,
        ParabolicIndex::from_slice(&[0]),
        psi,
        Vec::new(),
        vec![fund],
        Some(Oracle::Custom {
            slot_weights,
            frips: vec![disc],
        }),
        Caps::default(),
        seed,
    )
    .unwrap()
}

/// The GL chain with blocks (n1, n2, n1) inside GL(2 n1 + n2).
pub fn gl_chain_instance(n1: usize, n2: usize, seed: u64) -> PvsInstance {
    let n = 2 * n1 + n2;
    let datum = build_root_datum(&format!("GL({n})")).unwrap();
    let boundaries = [n1 - 1, n1 + n2 - 1];
    let g_simple: Vec<usize> = (0..n - 1).filter(|i| !boundaries.contains(i)).collect();
    let oracle = Oracle::GlChain {
        sizes: vec![n1, n2, n1],
    };
    let psi: Vec<(QVec, usize)> = oracle.slot_weights().into_iter().map(|w| (w, 1)).collect();
    let fund = oracle.frip_weights();
    PvsInstance::new(
        &format!("gl-chain-{n1}-{n2}-{n1}"),
        datum,
        ParabolicIndex::from_slice(&g_simple),
        psi,
        Vec::new(),
        fund,
        Some(oracle),
        Caps::default(),
        seed,
    )
    .unwrap()
}

/// Weight subset by positions in the instance's psi list.
pub fn subset(ids: &[usize]) -> std::collections::BTreeSet<usize> {
    ids.iter().copied().collect()
}
