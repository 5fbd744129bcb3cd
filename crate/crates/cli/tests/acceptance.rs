//! Acceptance suite: one test per criterion, each printing a pass line
//! (run with --nocapture to see them). Golden values are the worked
//! rank-two, GL-chain, F4 and E6 instances with their published
//! stabilizers, envelopes, Hasse diagram, exceptional table and induced
//! filtration results.

use exactla::vector::{self, rat, ratio, QVec};
use pvs_cli::instfile::InstanceFile;
use pvs_cli::run::hasse_covers;
use pvscore::{ConvergenceOutcome, ExceptionalStatus, MatchingVariant, PvsInstance, Trivalent};
use rootsys::ParabolicIndex;
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

fn instance_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../instances")
        .join(name)
}

fn load(name: &str) -> (InstanceFile, PvsInstance) {
    let file = InstanceFile::load(&instance_path(name)).expect("instance file loads");
    let inst = file.to_instance().expect("instance materializes");
    (file, inst)
}

fn set(ids: &[usize]) -> BTreeSet<usize> {
    ids.iter().copied().collect()
}

fn complement(n: usize, removed: &[usize]) -> BTreeSet<usize> {
    (0..n).filter(|j| !removed.contains(j)).collect()
}

fn pass(criterion: &str, what: &str, t: Instant) {
    println!(
        "[acceptance] {criterion}: PASS - {what} ({:.2}s)",
        t.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_1_golden_rank2_g2() {
    let t = Instant::now();
    let (_, inst) = load("binary-cubics-g2.json");
    let specials = inst.special_subspaces().unwrap();
    let sets: Vec<BTreeSet<usize>> = specials.iter().map(|r| r.members.clone()).collect();
    assert_eq!(
        sets,
        vec![set(&[1, 2, 3]), set(&[0, 1, 2, 3])],
        "Spcl(V) must be exactly {{U, V}} with Psi_U = Psi_V minus {{beta}}"
    );
    let u = &specials[0];
    assert_eq!(u.stab, Some(ParabolicIndex::empty()), "Stab(U) = Borel");
    assert_eq!(u.env, Some(ParabolicIndex::empty()), "Env(U) = Borel");
    assert!(t.elapsed().as_secs() < 1, "criterion 1 must finish in < 1 s");
    pass("criterion 1", "G2 binary cubics: Spcl = {V, U}, Stab(U) = Env(U) = Borel", t);
}

#[test]
fn criterion_2_golden_gl2_prime() {
    let t = Instant::now();
    // (n1, n2) = (1, 2)
    let (_, inst) = load("gl2-prime-1-2.json");
    let sets: Vec<BTreeSet<usize>> = inst
        .special_subspaces()
        .unwrap()
        .iter()
        .map(|r| r.members.clone())
        .collect();
    // V1: first n2-n1 columns of x1 vanish; V2: last rows of x2 vanish
    let v1 = complement(4, &[0]);
    let v2 = complement(4, &[3]);
    assert_eq!(sets.len(), 3);
    assert!(sets.contains(&(0..4).collect()));
    assert!(sets.contains(&v1), "V1 by column vanishing");
    assert!(sets.contains(&v2), "V2 by row vanishing");
    // (n1, n2) = (2, 3)
    let (_, inst) = load("gl2-prime-2-3.json");
    let sets: Vec<BTreeSet<usize>> = inst
        .special_subspaces()
        .unwrap()
        .iter()
        .map(|r| r.members.clone())
        .collect();
    let v1 = complement(12, &[0, 3]);
    let v2 = complement(12, &[10, 11]);
    assert_eq!(sets.len(), 3);
    assert!(sets.contains(&(0..12).collect()));
    assert!(sets.contains(&v1));
    assert!(sets.contains(&v2));
    assert!(t.elapsed().as_secs() < 5, "criterion 2 must finish in < 5 s");
    pass("criterion 2", "GL2': Spcl = {V, V1, V2} for (1,2) and (2,3)", t);
}

struct F4Golden {
    name: &'static str,
    removed: &'static [usize],
    stab: &'static [usize],
    env: &'static [usize],
}

const F4_GOLDEN: &[F4Golden] = &[
    F4Golden { name: "V", removed: &[], stab: &[0, 2, 3], env: &[0, 2, 3] },
    F4Golden { name: "U1", removed: &[0, 6], stab: &[0, 3], env: &[0, 3] },
    F4Golden { name: "U2", removed: &[0, 1, 3], stab: &[2], env: &[2] },
    F4Golden { name: "U3", removed: &[0, 1, 2], stab: &[3], env: &[3] },
    F4Golden { name: "U4", removed: &[0, 1, 3, 6], stab: &[], env: &[2] },
    F4Golden { name: "U5", removed: &[0, 1, 2, 3], stab: &[], env: &[] },
];

#[test]
fn criterion_3_golden_f4_prime() {
    let t = Instant::now();
    let (_, inst) = load("f4-prime.json");
    let specials = inst.special_subspaces().unwrap();
    assert_eq!(specials.len(), 6, "Spcl(V) = {{V, U1..U5}}");
    for g in F4_GOLDEN {
        let members = complement(12, g.removed);
        let report = specials
            .iter()
            .find(|r| r.members == members)
            .unwrap_or_else(|| panic!("{} missing from Spcl", g.name));
        assert_eq!(
            report.stab,
            Some(ParabolicIndex::from_slice(g.stab)),
            "Stab({})",
            g.name
        );
        assert_eq!(
            report.env,
            Some(ParabolicIndex::from_slice(g.env)),
            "Env({})",
            g.name
        );
    }
    // the headline inequality Env(U4) != Stab(U4)
    let u4 = complement(12, &[0, 1, 3, 6]);
    let r = specials.iter().find(|r| r.members == u4).unwrap();
    assert_ne!(r.stab, r.env, "Env(U4) = (00*0) strictly contains Stab(U4) = (0000)");
    assert!(t.elapsed().as_secs() < 30, "criterion 3 must finish in < 30 s");
    pass("criterion 3", "F4': six specials with published stabilizers and envelopes", t);
}

/// theta (the diagram involution) as a permutation of the 18 display
/// slots of the E6 instance.
fn theta(j: usize) -> usize {
    const PERM: [usize; 9] = [8, 5, 2, 7, 4, 1, 6, 3, 0];
    if j < 9 {
        PERM[j]
    } else {
        PERM[j - 9] + 9
    }
}

fn theta_removed(removed: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = removed.iter().map(|&j| theta(j)).collect();
    v.sort();
    v
}

struct E6Golden {
    name: &'static str,
    removed: Vec<usize>,
    stab: Vec<usize>,
}

fn e6_golden() -> Vec<E6Golden> {
    let u1 = vec![3, 6, 12, 15];
    let u2 = vec![0, 3, 6];
    let u3 = vec![3, 4, 6, 7, 12, 15];
    let u1p = theta_removed(&u1);
    let u2p = theta_removed(&u2);
    let u3p = theta_removed(&u3);
    let union = |a: &[usize], b: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
        v.sort();
        v.dedup();
        v
    };
    let u1pp = union(&u1, &u1p);
    let u2pp = union(&u2, &u2p);
    let u3pp = union(&u3, &u3p);
    vec![
        E6Golden { name: "V", removed: vec![], stab: vec![0, 1, 2, 4, 5] },
        E6Golden { name: "U1", removed: u1.clone(), stab: vec![1, 2, 5] },
        E6Golden { name: "U2", removed: u2.clone(), stab: vec![0, 2, 5] },
        E6Golden { name: "U3", removed: u3.clone(), stab: vec![2] },
        E6Golden { name: "U1'", removed: u1p.clone(), stab: vec![0, 1, 4] },
        E6Golden { name: "U2'", removed: u2p.clone(), stab: vec![0, 4, 5] },
        E6Golden { name: "U3'", removed: u3p.clone(), stab: vec![4] },
        E6Golden { name: "U1''", removed: u1pp.clone(), stab: vec![1] },
        E6Golden { name: "U2''", removed: u2pp.clone(), stab: vec![0, 5] },
        E6Golden { name: "U3''", removed: u3pp.clone(), stab: vec![] },
        E6Golden { name: "U12", removed: union(&u1, &u2), stab: vec![2, 5] },
        E6Golden { name: "U1'2", removed: union(&u1p, &u2), stab: vec![0] },
        E6Golden { name: "U12'", removed: union(&u1, &u2p), stab: vec![5] },
        E6Golden { name: "U1'2'", removed: union(&u1p, &u2p), stab: vec![0, 4] },
        E6Golden { name: "U1''2", removed: union(&u1pp, &u2), stab: vec![] },
        E6Golden { name: "U1''2'", removed: union(&u1pp, &u2p), stab: vec![] },
        E6Golden { name: "U3'2", removed: union(&u3p, &u2), stab: vec![] },
        E6Golden { name: "U32'", removed: union(&u3, &u2p), stab: vec![] },
    ]
}

/// Cover edges of the printed Hasse diagram, by golden names.
const E6_HASSE: &[(&str, &str)] = &[
    ("U1", "V"), ("U1'", "V"), ("U2", "V"), ("U2'", "V"),
    ("U3", "U1"), ("U3'", "U1'"),
    ("U1''", "U1"), ("U1''", "U1'"),
    ("U12", "U1"), ("U12", "U2"),
    ("U1'2", "U1'"), ("U1'2", "U2"),
    ("U12'", "U1"), ("U12'", "U2'"),
    ("U1'2'", "U1'"), ("U1'2'", "U2'"),
    ("U2''", "U2"), ("U2''", "U2'"),
    ("U3''", "U3"), ("U3''", "U3'"), ("U3''", "U1''"),
    ("U3'2", "U3'"), ("U3'2", "U1'2"),
    ("U32'", "U3"), ("U32'", "U12'"),
    ("U1''2", "U1''"), ("U1''2", "U12"), ("U1''2", "U1'2"),
    ("U1''2'", "U1''"), ("U1''2'", "U12'"), ("U1''2'", "U1'2'"),
];

#[test]
fn criterion_4_golden_e6_prime() {
    let t = Instant::now();
    let (_, inst) = load("e6-prime.json");
    let specials = inst.special_subspaces().unwrap();
    let golden = e6_golden();
    assert_eq!(specials.len(), 18, "18-element Spcl(V)");
    // identify each golden set and check its stabilizer
    let mut index_of_name = std::collections::BTreeMap::new();
    for g in &golden {
        let members = complement(18, &g.removed);
        let pos = specials
            .iter()
            .position(|r| r.members == members)
            .unwrap_or_else(|| panic!("{} missing from Spcl", g.name));
        assert_eq!(
            specials[pos].stab,
            Some(ParabolicIndex::from_slice(&g.stab)),
            "Stab({})",
            g.name
        );
        index_of_name.insert(g.name, pos);
    }
    // Hasse diagram: computed covers must equal the printed diagram
    let sets: Vec<BTreeSet<usize>> = specials.iter().map(|r| r.members.clone()).collect();
    let computed = hasse_covers(&sets);
    let mut expected: Vec<(usize, usize)> = E6_HASSE
        .iter()
        .map(|(a, b)| (index_of_name[a], index_of_name[b]))
        .collect();
    expected.sort();
    assert_eq!(computed, expected, "Hasse cover edges match the printed diagram");
    // exceptional table: all except U2, U2' and V
    for g in &golden {
        let members = complement(18, &g.removed);
        let r = specials.iter().find(|r| r.members == members).unwrap();
        let status = inst.is_exceptional(&members, r.stab.as_ref().unwrap());
        let should_be_exceptional = !matches!(g.name, "V" | "U2" | "U2'");
        assert_eq!(
            status.is_exceptional(),
            should_be_exceptional,
            "exceptional status of {}",
            g.name
        );
    }
    // the nine Env * U assignments plus the nine Env = Stab spaces
    let env_equals_stab = ["V", "U1", "U1'", "U2", "U2'", "U12", "U1'2'", "U1''", "U2''"];
    for g in &golden {
        let members = complement(18, &g.removed);
        let r = specials.iter().find(|r| r.members == members).unwrap();
        let env = r.env.clone().unwrap();
        if env_equals_stab.contains(&g.name) {
            assert_eq!(r.stab.clone().unwrap(), env, "Env({0}) = Stab({0})", g.name);
            continue;
        }
        let closure = inst.star_closure(&members, &env);
        let target_name = match g.name {
            "U3" | "U32'" | "U12'" => "U1",
            "U3'" | "U3'2" | "U1'2" => "U1'",
            "U3''" | "U1''2" | "U1''2'" => "U1''",
            other => panic!("unclassified golden {other}"),
        };
        let target = complement(
            18,
            &golden.iter().find(|g| g.name == target_name).unwrap().removed,
        );
        assert_eq!(closure, target, "Env(U) * U for {}", g.name);
    }
    assert!(t.elapsed().as_secs() < 300, "criterion 4 must finish in < 5 min");
    pass(
        "criterion 4",
        "E6': 18 specials, Hasse diagram, exceptional table, Env*U assignments",
        t,
    );
}

#[test]
fn criterion_5_binary_quadratic_forms() {
    let t = Instant::now();
    let (_, inst) = load("binary-quadratics.json");
    let u = set(&[1, 2]);
    let stab = inst.stabilizer_of(&u).unwrap();
    match inst.is_exceptional(&u, &stab) {
        ExceptionalStatus::Exceptional { u_prime, .. } => {
            assert_eq!(u_prime, set(&[1]), "witness U' = V_(beta+alpha)");
        }
        other => panic!("U must be exceptional, got {other:?}"),
    }
    for s in [ratio(1, 2), rat(1), rat(2)] {
        let mu: QVec = vec![s.clone(), s.clone()];
        match inst.convergence_certificate(&u, &mu).unwrap() {
            ConvergenceOutcome::Fails { witness, value, .. } => {
                assert!(value == rat(0), "witness ray pairs to zero");
                assert_eq!(&witness[0] + &witness[1], rat(0));
            }
            _ => panic!("certificate must fail on U"),
        }
        match inst.convergence_certificate(&inst.full_set(), &mu).unwrap() {
            ConvergenceOutcome::Certificate { values, .. } => {
                assert!(values.iter().all(|v| v > &rat(0)));
            }
            _ => panic!("certificate must succeed on V"),
        }
    }
    assert!(t.elapsed().as_secs() < 1, "criterion 5 must finish in < 1 s");
    pass(
        "criterion 5",
        "binary quadratics: exceptional pair and convergence certificates",
        t,
    );
}

#[test]
fn criterion_6_dk_reconstruction() {
    let t = Instant::now();
    for (file, datum, labels, expected) in [
        ("f4-prime.json", "F4", vec![0i64, 2, 0, 0], 12usize),
        ("e6-prime.json", "E6", vec![0, 0, 0, 2, 0, 0], 18),
    ] {
        let (_, inst) = load(file);
        let d = rootsys::build_root_datum(datum).unwrap();
        let h = dktype::GradingElement::new(labels);
        let rebuilt = dktype::build_dk_pvs(
            "dk",
            d,
            &h,
            None,
            Vec::new(),
            pvscore::Caps::default(),
            1,
        )
        .unwrap();
        assert_eq!(rebuilt.weight_count(), expected);
        let from_file: BTreeSet<Vec<String>> = inst
            .psi
            .iter()
            .map(|w| w.vector.iter().map(|x| x.to_string()).collect())
            .collect();
        let from_dk: BTreeSet<Vec<String>> = rebuilt
            .psi
            .iter()
            .map(|w| w.vector.iter().map(|x| x.to_string()).collect())
            .collect();
        assert_eq!(from_file, from_dk, "{file}: weight sets agree exactly");
    }
    pass("criterion 6", "DK reconstruction of the F4 and E6 weight displays", t);
}

#[test]
fn criterion_7_ifd_suite() {
    let t = Instant::now();
    // rank two: the beta-parabolic gives U = Psi minus {beta}
    for (file, expected) in [
        ("binary-quadratics.json", set(&[1, 2])),
        ("binary-cubics-g2.json", set(&[1, 2, 3])),
    ] {
        let (f, inst) = load(file);
        let entry = pvs_cli::run::run_ifd(&inst, &f.ifds[0]).unwrap();
        assert_eq!(entry.outcome, "found", "{file}");
        let members: BTreeSet<usize> =
            entry.members.unwrap().iter().map(|j| j - 1).collect();
        assert_eq!(members, expected, "{file}: U = V cap n_Q");
        assert_eq!(entry.word, Some(vec![]), "{file}: already standard");
    }
    // GL2' both parabolics
    for (file, n, expected) in [
        ("gl2-prime-1-2.json", 4usize, vec![complement(4, &[0]), complement(4, &[3])]),
        (
            "gl2-prime-2-3.json",
            12,
            vec![complement(12, &[0, 3]), complement(12, &[10, 11])],
        ),
    ] {
        let (f, inst) = load(file);
        let _ = n;
        for (block, want) in f.ifds.iter().zip(expected) {
            let entry = pvs_cli::run::run_ifd(&inst, block).unwrap();
            assert_eq!(entry.outcome, "found");
            let members: BTreeSet<usize> =
                entry.members.unwrap().iter().map(|j| j - 1).collect();
            assert_eq!(members, want, "{file}/{}", block.name);
        }
    }
    // F4': u1, u2, u3, and u2 again through the second induction stage
    {
        let (f, inst) = load("f4-prime.json");
        let expect = |name: &str| -> BTreeSet<usize> {
            let removed: &[usize] = match name {
                "u1" => &[0, 6],
                "u2" | "u2-again" => &[0, 1, 3],
                "u3" => &[0, 1, 2],
                _ => panic!(),
            };
            complement(12, removed)
        };
        for block in &f.ifds {
            let entry = pvs_cli::run::run_ifd(&inst, block).unwrap();
            assert_eq!(entry.outcome, "found", "f4/{}", block.name);
            let members: BTreeSet<usize> =
                entry.members.unwrap().iter().map(|j| j - 1).collect();
            assert_eq!(members, expect(&block.name), "f4/{}", block.name);
            assert_eq!(entry.word, Some(vec![]), "f4/{}: standard position works", block.name);
        }
    }
    // E6': the full list including the U3'' case that needs the
    // nontrivial reflection at the node defining G
    {
        let (f, inst) = load("e6-prime.json");
        let golden = e6_golden();
        let removed_of = |name: &str| -> &Vec<usize> {
            &golden.iter().find(|g| g.name == name).unwrap().removed
        };
        let expect: Vec<(&str, &str)> = vec![
            ("u1", "U1"),
            ("u2", "U2"),
            ("u1-cap-u2", "U12"),
            ("u2-dprime", "U2''"),
            ("u1-again", "U1"),
            ("u1-mirror", "U1'"),
            ("u2-mirror", "U2'"),
            ("u1-cap-u2-mirror", "U1'2'"),
            ("u3-dprime", "U3''"),
        ];
        for (block, (bname, gname)) in f.ifds.iter().zip(expect) {
            assert_eq!(block.name, bname);
            let entry = pvs_cli::run::run_ifd(&inst, block).unwrap();
            assert_eq!(entry.outcome, "found", "e6/{bname}");
            let members: BTreeSet<usize> =
                entry.members.unwrap().iter().map(|j| j - 1).collect();
            assert_eq!(members, complement(18, removed_of(gname)), "e6/{bname}");
            if bname == "u3-dprime" {
                // the simple reflection at the (Bourbaki) node alpha_4
                assert_eq!(
                    entry.word,
                    Some(vec![4]),
                    "U3'' requires the reflection at the node defining G"
                );
                assert_eq!(entry.standard_position, "refuted-likely");
            }
        }
    }
    // the k = 5 GL chain counterexample: V cap n_Q is not in Minset,
    // so the search must leave the standard position
    {
        let (f, inst) = load("gl-chain-5.json");
        let entry = pvs_cli::run::run_ifd(&inst, &f.ifds[0]).unwrap();
        assert_eq!(
            entry.standard_position, "refuted-likely",
            "V cap n_Q must fail Minset certification"
        );
        assert_ne!(
            entry.word,
            Some(vec![]),
            "no identity-position special subspace for the k=5 chain"
        );
    }
    assert!(t.elapsed().as_secs() < 300, "criterion 7 must finish in < 5 min");
    pass("criterion 7", "IFD suite over all four example groups", t);
}

#[test]
fn criterion_8_property_suites() {
    let t = Instant::now();
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20240810);
    let (_, quadratics) = load("binary-quadratics.json");
    let (_, cubics) = load("binary-cubics-g2.json");
    let (_, gl12) = load("gl2-prime-1-2.json");
    let (_, f4) = load("f4-prime.json");
    let small = [&quadratics, &cubics, &gl12, &f4];

    // closure idempotence / extensivity / monotonicity, 200 cases
    for _ in 0..200 {
        let inst = small[rng.gen_range(0..small.len())];
        let n = inst.weight_count();
        let u: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let subset = ParabolicIndex(
            inst.g_simple
                .0
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect(),
        );
        let cu = inst.star_closure(&u, &subset);
        assert!(u.is_subset(&cu));
        assert_eq!(inst.star_closure(&cu, &subset), cu);
        if let Some(extra) = (0..n).find(|j| !u.contains(j)) {
            let mut bigger = u.clone();
            bigger.insert(extra);
            assert!(cu.is_subset(&inst.star_closure(&bigger, &subset)));
        }
    }

    // Prop-cent lambda identity on every enumerated special of every
    // golden instance (E6 included)
    let (_, e6) = load("e6-prime.json");
    let (_, gl23) = load("gl2-prime-2-3.json");
    for inst in [&quadratics, &cubics, &gl12, &gl23, &f4, &e6] {
        for r in inst.special_subspaces().unwrap() {
            assert_eq!(r.special, Trivalent::Yes);
            assert!(
                r.lambda_identity_checked,
                "lambda identity on {:?}",
                r.members
            );
            assert!(r.stab.clone().unwrap().is_subset(&r.env.clone().unwrap()));
        }
    }

    // intersections of specials on E6, over all pairs
    {
        let specials = e6.special_subspaces().unwrap();
        for a in &specials {
            for b in &specials {
                let inter: BTreeSet<usize> =
                    a.members.intersection(&b.members).copied().collect();
                if !e6.minset_certify(&inter).is_certified() {
                    continue;
                }
                let rep = e6.is_special(&inter).unwrap();
                assert!(rep.special.is_yes(), "intersection {:?}", inter);
                assert_eq!(
                    rep.stab,
                    Some(a.stab.clone().unwrap().intersect(&b.stab.clone().unwrap())),
                    "stabilizer of the intersection"
                );
            }
        }
    }

    // envelope closures on E6 over all Minset-certified P0-stable subsets
    {
        for members in e6.p0_stable_subsets().unwrap() {
            if members.is_empty() || !e6.minset_certify(&members).is_certified() {
                continue;
            }
            let env = e6.env_of(&members).unwrap();
            let tilde = e6.star_closure(&members, &env);
            let rep = e6.is_special(&tilde).unwrap();
            assert!(rep.special.is_yes(), "Env*U special for {:?}", members);
            assert_eq!(rep.stab.as_ref(), Some(&env));
            assert_eq!(rep.env.as_ref(), Some(&env));
        }
    }

    // Cor lam(U) cone membership and the full support matching for every
    // Minset-certified subset of the small instances
    for inst in [&quadratics, &cubics, &gl12] {
        let n = inst.weight_count();
        for mask in 0u32..(1 << n) {
            let members: BTreeSet<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            if !inst.minset_certify(&members).is_certified() {
                continue;
            }
            let lambda = inst.lambda_of(&members);
            let mut gens: Vec<QVec> =
                members.iter().map(|&j| inst.psi[j].vector.clone()).collect();
            gens.extend(inst.g_simple_vectors());
            assert!(exactla::cone_membership(&lambda, &gens).unwrap().is_some());
            assert!(inst.matching_iota(&members, MatchingVariant::Full).is_some());
            assert!(inst
                .fundamental_cone_check(&members)
                .checks
                .iter()
                .all(|c| c.rational_ok));
        }
    }

    // positive envelope part-allin on 200 random instances
    for _ in 0..200 {
        let dim = rng.gen_range(1..=5);
        let k = rng.gen_range(1..=8);
        let gens: Vec<QVec> = (0..k)
            .map(|_| (0..dim).map(|_| rat(rng.gen_range(-4..=4))).collect())
            .collect();
        let coeffs: Vec<i64> = (0..k).map(|_| rng.gen_range(0..=3)).collect();
        let target: QVec = (0..dim)
            .map(|c| {
                let mut acc = rat(0);
                for (x, g) in coeffs.iter().zip(&gens) {
                    acc += rat(*x) * &g[c];
                }
                acc
            })
            .collect();
        let env = exactla::positive_envelope(&target, &gens).unwrap();
        let span: Vec<QVec> = env.iter().map(|&i| gens[i].clone()).collect();
        for (i, g) in gens.iter().enumerate() {
            if exactla::span_contains(&span, g) {
                assert!(env.contains(&i), "part allin");
            }
        }
    }

    // extreme-ray reconstruction on 100 random cones
    for _ in 0..100 {
        let dim = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=6);
        let ineqs: Vec<QVec> = (0..k)
            .map(|_| (0..dim).map(|_| rat(rng.gen_range(-3..=3))).collect())
            .collect();
        let cone = exactla::ConeDescription::new(dim, ineqs.clone());
        let data = cone.rays();
        for r in &data.rays {
            assert!(ineqs.iter().all(|a| vector::dot(a, r) >= rat(0)));
        }
        for l in &data.lineality {
            assert!(ineqs.iter().all(|a| vector::dot(a, l) == rat(0)));
        }
    }

    // relative invariance of every built-in oracle kind (exactness of the
    // torus-scaling identity)
    {
        use relinv::Oracle;
        let oracles = [
            Oracle::GlChain { sizes: vec![1, 2, 1] },
            Oracle::SymChain { sizes: vec![2] },
            Oracle::SkewChain { sizes: vec![4] },
            Oracle::SpChain { sizes: vec![2, 4] },
            Oracle::SoChain { sizes: vec![2, 5] },
        ];
        for o in &oracles {
            let slots = o.num_slots();
            let dim = o.ambient_dim();
            let weights = o.slot_weights();
            let chis = o.frip_weights();
            for case in 0..25u64 {
                let support: Vec<usize> = (0..slots).collect();
                let point =
                    relinv::sample_point(slots, &support, 5, relinv::mix_seed(&[99, case]));
                let u: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
                let uq: QVec = u.iter().map(|&x| rat(x)).collect();
                let tpow = |e: i64| -> exactla::vector::Rat {
                    let two = rat(2);
                    let mut acc = rat(1);
                    for _ in 0..e.abs() {
                        acc *= &two;
                    }
                    if e < 0 {
                        acc.recip()
                    } else {
                        acc
                    }
                };
                let scaled: Vec<exactla::vector::Rat> = point
                    .iter()
                    .zip(&weights)
                    .map(|(v, w)| {
                        let e: i64 = vector::dot(w, &uq).numer().try_into().unwrap();
                        v * tpow(e)
                    })
                    .collect();
                let base = o.evaluate_frips(&point).unwrap();
                let after = o.evaluate_frips(&scaled).unwrap();
                for ((b, a), chi) in base.iter().zip(&after).zip(&chis) {
                    let e: i64 = vector::dot(chi, &uq).numer().try_into().unwrap();
                    assert_eq!(a, &(b * tpow(e)), "relative invariance");
                }
            }
        }
    }
    pass("criterion 8", "property suites: closures, lambda identities, intersections, envelope closures, cones, invariance", t);
}

#[test]
fn criterion_9_weyl_infrastructure() {
    let t = Instant::now();
    let f4 = rootsys::build_root_datum("F4").unwrap();
    assert_eq!(rootsys::WeylGroup::new(&f4).unwrap().count(), 1152);
    let e6 = rootsys::build_root_datum("E6").unwrap();
    assert_eq!(rootsys::WeylGroup::new(&e6).unwrap().count(), 51840);
    // minimality spot-checks
    let left = ParabolicIndex::from_slice(&[0, 1]);
    let right = ParabolicIndex::from_slice(&[2, 3]);
    for word in [vec![0usize, 1, 2, 3, 2], vec![3, 2, 1, 0], vec![1, 2, 1, 3]] {
        let w = rootsys::WeylElement::from_word(&f4, &word);
        let rep = rootsys::min_double_coset_rep(&f4, &w, &left, &right);
        assert!(rep.length(&f4) <= w.length(&f4));
        for &i in &left.0 {
            let u = rootsys::WeylElement::simple_reflection(&f4, i);
            assert!(u.compose(&rep).length(&f4) >= rep.length(&f4));
        }
        for &j in &right.0 {
            let v = rootsys::WeylElement::simple_reflection(&f4, j);
            assert!(rep.compose(&v).length(&f4) >= rep.length(&f4));
        }
    }
    assert!(t.elapsed().as_secs() < 120, "criterion 9 must finish in < 2 min");
    pass("criterion 9", "|W(F4)| = 1152, |W(E6)| = 51840, double-coset minimality", t);
}
