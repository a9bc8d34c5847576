//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails, except for a criterion whose statement is
//! contradicted by an oracle-confirmed answer: that one is reported as FAIL
//! with the counterexample.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rank1_stems::characters::{fixed_dim, RotationGroup};
use rank1_stems::oracle::{oracle_char_matrix, oracle_o2_cyclic, oracle_torus, verify};
use rank1_stems::rep::{b_of, dim_cyclic, restrict, restrict_to_torus, restriction_suspension, Parity};
use rank1_stems::stems::{stems_cyclic_block, stems_dihedral_block, stems_torus};
use rank1_stems::{
    stems, BlockAnswer, BlockId, ExtendedNat, GroupId, Irreducible, LineLabel, SubgroupDescriptor,
    VirtualRep, INF,
};
use rank1_stems_cli::report::Report;

const LO: i64 = -25;
const HI: i64 = 25;
const S_MAX: u64 = 64;

enum Failure {
    Red(String),
    /// The criterion itself is contradicted by a verified answer.
    Known(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Failure {
        Failure::Red(s)
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Failure {
        Failure::Red(s.to_string())
    }
}

type Outcome = Result<String, Failure>;

type Criterion = (&'static str, fn() -> Outcome);

fn fin(n: u64) -> ExtendedNat {
    ExtendedNat::Finite(n)
}

fn random_irreducible(rng: &mut ChaCha8Rng, group: GroupId) -> Irreducible {
    use Irreducible::*;
    let n = rng.gen_range(1..=12u64);
    match group {
        GroupId::SO2 | GroupId::Spin2 => Z(n),
        GroupId::O2 => *[Delta, Sigma(n)].choose(rng).unwrap(),
        GroupId::Pin2 => *[Delta, Sigma(n), H(2 * (n / 2) + 1)].choose(rng).unwrap(),
        GroupId::SO3 => W(2 * n + 1),
        GroupId::SU2 => *[W(2 * n + 1), V(2 * n)].choose(rng).unwrap(),
    }
}

fn random_rep(rng: &mut ChaCha8Rng, group: GroupId) -> VirtualRep {
    let count = rng.gen_range(0..=5);
    let terms: Vec<(i64, Irreducible)> =
        (0..count).map(|_| (rng.gen_range(-3..=3), random_irreducible(rng, group))).collect();
    VirtualRep::from_terms(group, terms).unwrap()
}

fn rep(group: GroupId, terms: &[(i64, Irreducible)]) -> VirtualRep {
    VirtualRep::from_terms(group, terms.iter().copied()).unwrap()
}

fn first_difference(
    calc: &BTreeMap<i64, ExtendedNat>,
    oracle: &BTreeMap<i64, ExtendedNat>,
) -> Option<(i64, ExtendedNat, ExtendedNat)> {
    oracle.iter().find(|(k, v)| calc.get(k) != Some(v)).map(|(&k, &v)| (k, calc[&k], v))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let u = random_rep(&mut rng, GroupId::SO2);
        let calc = stems_torus(&u).map_err(|e| e.to_string())?.window(LO, HI);
        let oracle = oracle_torus(&u, LO, HI, S_MAX).map_err(|e| e.to_string())?;
        if let Some((k, c, o)) = first_difference(&calc, &oracle) {
            return Err(format!("{u}: degree {k}: calculator {c}, oracle {o}").into());
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        return Err(format!("took {elapsed:?}").into());
    }
    Ok(format!("200 circle representations agree with the resolution ({elapsed:.2?})"))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut parities = [0u32; 2];
    for _ in 0..200 {
        let mut u = random_rep(&mut rng, GroupId::O2);
        if rng.gen_bool(0.5) {
            u.add_term(rng.gen_range(-3..=3), Irreducible::Delta).unwrap();
        }
        parities[b_of(&u).unwrap().rem_euclid(2) as usize] += 1;
        let calc = stems_cyclic_block(&u).map_err(|e| e.to_string())?.window(LO, HI);
        let oracle = oracle_o2_cyclic(&u, LO, HI, S_MAX).map_err(|e| e.to_string())?;
        if let Some((k, c, o)) = first_difference(&calc, &oracle) {
            return Err(format!("{u}: degree {k}: calculator {c}, oracle {o}").into());
        }
    }
    if parities.contains(&0) {
        return Err(format!("parities not both covered: {parities:?}").into());
    }
    Ok(format!("200 O(2) representations agree ({} with b even, {} with b odd)", parities[0], parities[1]))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 0..100 {
        let group = if n % 2 == 0 { GroupId::O2 } else { GroupId::Pin2 };
        let u = random_rep(&mut rng, group);
        let b = b_of(&u).unwrap();
        let block = stems_cyclic_block(&u).map_err(|e| e.to_string())?;
        for k in LO..=HI {
            let must_vanish = match Parity::of(b) {
                Parity::Odd => k.rem_euclid(2) == 1,
                Parity::Even => k.rem_euclid(2) == 0 && k != b,
            };
            if must_vanish && !block.query(k).is_zero() {
                return Err(format!("{u} over {group}: degree {k} is {}", block.query(k)).into());
            }
        }
    }
    Ok("100 O(2)/Pin(2) representations vanish in the forced degrees".into())
}

/// `min(m_U + 1, spot degrees, 0)`.
fn floor_of(answer: &BlockAnswer) -> i64 {
    answer
        .blocks
        .iter()
        .filter(|b| b.id != BlockId::Cyclic)
        .flat_map(|b| b.lines.lines().iter().map(|l| l.start()))
        .fold((answer.range.0 + 1).min(0), i64::min)
}

/// Nonzero degrees below the floor that are the unit class of the cyclic
/// block: one untwisted class in degree `m_U`, which happens when `b` is
/// even and `d_U` attains its minimum at `b`.
fn is_unit_class(answer: &BlockAnswer, k: i64) -> bool {
    let torus = LineLabel::Subgroup(SubgroupDescriptor::FullTorus);
    k == answer.range.0
        && k.rem_euclid(2) == 0
        && answer.query(k) == fin(1)
        && answer.cyclic().lines().iter().any(|l| l.step() == 0 && l.start() == k && l.label() == torus)
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut tested = 0;
    let mut counterexamples = Vec::new();
    for group in GroupId::ALL {
        let mut reps: Vec<VirtualRep> = (0..50).map(|_| random_rep(&mut rng, group)).collect();
        reps.push(VirtualRep::zero(group));
        for u in reps {
            let answer = stems(&u).map_err(|e| Failure::Red(e.to_string()))?;
            let floor = floor_of(&answer);
            for k in (floor - 30..floor).filter(|&k| !answer.query(k).is_zero()) {
                if !is_unit_class(&answer, k) {
                    return Err(Failure::Red(format!(
                        "{u} over {group}: degree {k} below floor {floor} is {}",
                        answer.query(k)
                    )));
                }
                let report = verify(&answer, k, k, S_MAX).map_err(|e| e.to_string())?;
                if !report.passed() {
                    return Err(format!("{u} over {group}: degree {k} not confirmed by the oracle").into());
                }
                counterexamples.push(format!("{u} over {group} in degree {k}"));
            }
            tested += 1;
        }
    }
    if let Some(first) = counterexamples.first() {
        return Err(Failure::Known(format!(
            "{} of {tested} answers have the cyclic unit class in degree m_U, below m_U + 1, \
             each confirmed by the oracle (first: {first}); every other degree below the floor, and every odd degree, vanishes",
            counterexamples.len()
        )));
    }
    Ok(format!("{tested} answers vanish below their floor"))
}

fn criterion_5() -> Outcome {
    let pairs = [(GroupId::SO3, GroupId::O2), (GroupId::SU2, GroupId::Pin2)];
    let mut checked = 0;
    for (from, to) in pairs {
        let mut irreducibles: Vec<Irreducible> = (1..=10).map(|i| Irreducible::W(2 * i + 1)).collect();
        if from == GroupId::SU2 {
            irreducibles.extend((1..=10).map(|i| Irreducible::V(2 * i)));
        }
        for irr in irreducibles {
            let u = VirtualRep::irreducible(from, irr).unwrap();
            let res = restrict(&u, to).map_err(|e| e.to_string())?;
            // trivial summands of the restriction are carried as a suspension
            let k = restriction_suspension(&u);
            for s in 1..=30 {
                if dim_cyclic(&u, s) != dim_cyclic(&res, s) + k {
                    return Err(format!("{irr} over {from}, s = {s}").into());
                }
            }
            let mut torus = restrict_to_torus(&res);
            torus.add_zero(k);
            if torus != restrict_to_torus(&u) {
                return Err(format!("torus weights of {irr} over {from}").into());
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} irreducibles restrict consistently (trivial summands as suspension)"))
}

fn criterion_6() -> Outcome {
    for group in GroupId::ALL {
        let answer = stems(&VirtualRep::zero(group)).map_err(|e| e.to_string())?;
        let expected = if group.is_torus() { fin(1) } else { INF };
        if answer.query(0) != expected {
            return Err(format!("{group}: degree 0 is {}", answer.query(0)).into());
        }
    }
    for group in [GroupId::SO3, GroupId::SU2] {
        let answer = stems(&VirtualRep::zero(group)).unwrap();
        let isolated = answer
            .blocks
            .iter()
            .filter(|b| matches!(b.id, BlockId::Isolated(_)))
            .filter(|b| b.lines.lines().iter().any(|l| l.step() == 0 && l.start() == 0))
            .count();
        let cluster = answer.blocks[1]
            .lines
            .lines()
            .iter()
            .any(|l| l.label() == LineLabel::DegreeZeroSections && l.start() == 0 && l.mult() == INF);
        if isolated != 5 || !cluster {
            return Err(format!("{group}: {isolated} isolated spots, cluster present: {cluster}").into());
        }
    }
    Ok("Burnside ring in degree 0: 1 for circles, infinite otherwise; 5 isolated spots plus cluster".into())
}

fn criterion_7() -> Outcome {
    let fixed = [
        (3, RotationGroup::A4, 0),
        (5, RotationGroup::KleinD4, 2),
        (5, RotationGroup::S4, 0),
        (5, RotationGroup::D8, 1),
        (13, RotationGroup::A5, 1),
    ];
    for (dim, group, expected) in fixed {
        let i = (dim - 1) / 2;
        let exact = fixed_dim(i, group).map_err(|e| e.to_string())?;
        if exact != expected {
            return Err(format!("dim W({dim})^{group:?} = {exact}, expected {expected}").into());
        }
    }
    for group in RotationGroup::ALL {
        for i in 0..=20 {
            let exact = fixed_dim(i, group).map_err(|e| e.to_string())?;
            let float = oracle_char_matrix(group, i).map_err(|e| e.to_string())?;
            if exact != float {
                return Err(format!("{group:?}, i = {i}: exact {exact}, matrices {float}").into());
            }
        }
    }
    Ok("five fixed values; exact characters equal matrix traces on all five tables, i <= 20".into())
}

fn isolated(answer: &BlockAnswer, h: SubgroupDescriptor) -> Vec<i64> {
    answer.block(BlockId::Isolated(h)).unwrap().lines().iter().map(|l| l.start()).collect()
}

fn criterion_8() -> Outcome {
    use rank1_stems::IsolatedTag::*;
    let w5 = stems(&rep(GroupId::SO3, &[(1, Irreducible::W(5))])).unwrap();
    let w3 = stems(&rep(GroupId::SO3, &[(1, Irreducible::W(3))])).unwrap();
    if !isolated(&w5, SubgroupDescriptor::Exc(KleinD4)).is_empty() {
        return Err("W(5): D4 block not empty".into());
    }
    if isolated(&w5, SubgroupDescriptor::Exc(A4)) != [0] {
        return Err("W(5): no A4 spot in degree 0".into());
    }
    for tag in [SO3, A5, S4, A4, KleinD4] {
        if isolated(&w3, SubgroupDescriptor::Exc(tag)) != [0] {
            return Err(format!("W(3): {tag:?} spot missing").into());
        }
    }
    Ok("W(5): D4 empty, A4 in degree 0; W(3): five spots in degree 0".into())
}

struct SpotCheck {
    group: GroupId,
    rep: &'static str,
    value: VirtualRep,
    /// Checked against the dihedral block rather than the total.
    dihedral_only: bool,
    expect: Vec<(i64, ExtendedNat)>,
    odd_zero: bool,
}

fn spot_checks() -> Vec<SpotCheck> {
    use Irreducible::*;
    let case = |group, text, terms: &[(i64, Irreducible)], expect: Vec<(i64, ExtendedNat)>| SpotCheck {
        group,
        rep: text,
        value: rep(group, terms),
        dihedral_only: false,
        expect,
        odd_zero: false,
    };
    let mut checks = vec![
        case(GroupId::SO2, "-z(1)", &[(-1, Z(1))], vec![(-1, fin(0)), (1, INF)]),
        case(GroupId::SO2, "-z(1) - z(2)", &[(-1, Z(1)), (-1, Z(2))], vec![(-3, fin(1)), (-1, fin(1))]),
        case(GroupId::O2, "2*delta - sigma(1)", &[(2, Delta), (-1, Sigma(1))], vec![(1, fin(0)), (5, INF)]),
        case(GroupId::O2, "delta - sigma(1)", &[(1, Delta), (-1, Sigma(1))], vec![(2, INF)]),
        case(
            GroupId::O2,
            "sigma(2) - 2*sigma(1)",
            &[(1, Sigma(2)), (-2, Sigma(1))],
            vec![(-1, fin(1)), (0, INF)],
        ),
        case(GroupId::SO3, "W(3)", &[(1, W(3))], vec![(0, INF), (2, INF), (4, fin(0))]),
        case(
            GroupId::SU2,
            "V(2)",
            &[(1, V(2))],
            vec![(0, INF), (1, fin(0)), (2, fin(0)), (3, INF), (7, INF)],
        ),
    ];
    checks[3].odd_zero = true;
    checks[4].dihedral_only = true;
    checks[5].odd_zero = true;
    checks
}

fn criterion_9() -> Outcome {
    for check in spot_checks() {
        let start = Instant::now();
        let answer = stems(&check.value).map_err(|e| e.to_string())?;
        let query = |k| {
            if check.dihedral_only {
                stems_dihedral_block(&check.value, &[]).unwrap().query(k)
            } else {
                answer.query(k)
            }
        };
        for &(k, v) in &check.expect {
            if query(k) != v {
                return Err(format!(
                    "{} over {}: degree {k} is {}, expected {v}",
                    check.rep,
                    check.group,
                    query(k)
                )
                .into());
            }
        }
        if check.odd_zero {
            if let Some(k) = (LO..=HI).filter(|k| k.rem_euclid(2) == 1).find(|&k| !query(k).is_zero()) {
                return Err(format!("{} over {}: odd degree {k} nonzero", check.rep, check.group).into());
            }
        }
        let report = verify(&answer, LO, HI, S_MAX).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("{} over {}: oracle {}", check.rep, check.group, report.mismatches[0]).into());
        }
        if start.elapsed() > Duration::from_secs(1) {
            return Err(format!("{} over {} took {:?}", check.rep, check.group, start.elapsed()).into());
        }
    }
    Ok("seven worked cases match, each confirmed by the oracle in under 1 s".into())
}

fn cli(args: &[&str]) -> (i32, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_rank1-stems")).args(args).output().expect("binary runs");
    (output.status.code().unwrap_or(-1), String::from_utf8(output.stdout).unwrap())
}

fn criterion_10() -> Outcome {
    for check in spot_checks() {
        let base =
            ["--group", check.group.name(), "--rep", check.rep, "--degrees", "-8..8", "--format", "json"];
        let (code, json) = cli(&base);
        if code != 0 {
            return Err(format!("{} exited {code}", check.rep).into());
        }
        let report: Report = serde_json::from_str(&json).map_err(|e| format!("{}: {e}", check.rep))?;
        let again: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        if again != report || report.group != check.group.name() {
            return Err(format!("{}: JSON does not round-trip", check.rep).into());
        }
        let answer = stems(&check.value).unwrap();
        if report.table.iter().any(|r| answer.query(r.degree) != r.dim) {
            return Err(format!("{}: JSON table disagrees with the library", check.rep).into());
        }

        let (_, shifted) = cli(&[&base[..], &["--shift", "-3"]].concat());
        let shifted: Report = serde_json::from_str(&shifted).map_err(|e| e.to_string())?;
        for row in &shifted.table {
            if row.dim != answer.query(row.degree + 3) {
                return Err(format!("{}: --shift -3 wrong at degree {}", check.rep, row.degree).into());
            }
        }

        let (ok, _) = cli(&[&base[..], &["--check-oracle"]].concat());
        let (faulty, _) = cli(&[&base[..], &["--check-oracle", "--inject-fault"]].concat());
        if ok != 0 || faulty != 2 {
            return Err(format!("{}: oracle exit codes {ok} and {faulty}", check.rep).into());
        }
    }
    Ok("JSON round-trips, --shift moves the table, injected faults exit 2".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence, circle groups", criterion_1),
        ("oracle equivalence, O(2) cyclic block", criterion_2),
        ("parity vanishing", criterion_3),
        ("vanishing floor", criterion_4),
        ("restriction consistency", criterion_5),
        ("degree-zero structure", criterion_6),
        ("character engine", criterion_7),
        ("isolated Weyl actions", criterion_8),
        ("worked spot checks", criterion_9),
        ("command-line contract", criterion_10),
    ];
    let (mut failed, mut known) = (0, 0);
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(Failure::Red(detail)) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", n + 1);
            }
            Err(Failure::Known(detail)) => {
                known += 1;
                println!(
                    "criterion {:>2} FAIL  {name} (criterion contradicted, see README): {detail}",
                    n + 1
                );
            }
        }
    }
    let passed = criteria.len() - failed - known;
    println!("{passed} of {} criteria pass, {known} contradicted, {failed} failing", criteria.len());
    // a contradicted criterion stays red but does not fail the build
    if failed > 0 {
        std::process::exit(1);
    }
}
