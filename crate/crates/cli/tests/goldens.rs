//! Remaining per-operation golden checks on the big instances.

use pvs_cli::instfile::InstanceFile;
use pvscore::{MinsetStatus, PvsInstance};
use std::collections::BTreeSet;
use std::path::PathBuf;

fn load(name: &str) -> PvsInstance {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name);
    InstanceFile::load(&path).unwrap().to_instance().unwrap()
}

// E6 with the first matrix zero: the cubic is y^3 det B, identically
// degenerate, so the subspace is (likely) outside Minset.
#[test]
fn e6_first_matrix_zero_is_refuted() {
    let inst = load("e6-prime.json");
    let second_matrix: BTreeSet<usize> = (9..18).collect();
    assert_eq!(
        inst.minset_certify(&second_matrix),
        MinsetStatus::RefutedLikely
    );
}

// F4: U5 is special, hence its certification must succeed.
#[test]
fn f4_u5_certified() {
    let inst = load("f4-prime.json");
    let u5: BTreeSet<usize> = (4..12).collect();
    assert!(inst.minset_certify(&u5).is_certified());
}

// Strengthened cone check on F4: every special U
// admits a Minset subspace U' with chi strictly positive on Psi_{U'}.
#[test]
fn f4_positive_support_witnesses() {
    let inst = load("f4-prime.json");
    let chi = inst.fund_chars[0].clone();
    for r in inst.special_subspaces().unwrap() {
        let w = inst
            .positive_support_witness(&r.members, &chi, 12)
            .unwrap_or_else(|| panic!("witness for {:?}", r.members));
        assert!(inst.minset_certify(&w).is_certified());
        assert!(w.is_subset(&r.members));
    }
}

// The E6 star-closure assignments reached through env_of are
// exercised in the acceptance suite; here we pin two cases directly.
#[test]
fn e6_star_closure_cases() {
    let inst = load("e6-prime.json");
    let u3: BTreeSet<usize> = (0..18).filter(|j| ![3, 4, 6, 7, 12, 15].contains(j)).collect();
    let u1: BTreeSet<usize> = (0..18).filter(|j| ![3, 6, 12, 15].contains(j)).collect();
    let env = inst.env_of(&u3).unwrap();
    assert_eq!(inst.star_closure(&u3, &env), u1, "Env(U3) * U3 = U1");
    let u3pp: BTreeSet<usize> =
        (0..18).filter(|j| ![3, 4, 6, 7, 12, 15, 16].contains(j)).collect();
    let u1pp: BTreeSet<usize> = (0..18).filter(|j| ![3, 6, 7, 12, 15, 16].contains(j)).collect();
    let env = inst.env_of(&u3pp).unwrap();
    assert_eq!(inst.star_closure(&u3pp, &env), u1pp, "Env(U3'') * U3'' = U1''");
}
