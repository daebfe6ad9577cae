//! Acceptance criteria, one line of output per criterion.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use hopfq::actions::{check_antipode_colinear, check_antipode_linear, ActionData, CoactionData};
use hopfq::catalog::{
    cyclic, dimodule_fixtures, direct_product, function_algebra, group_algebra, loop7, octonion_units, s3, s3_index,
};
use hopfq::exactla::FieldDesc;
use hopfq::formats::{
    parse_action, parse_bundle, parse_cayley, parse_coaction, parse_structure, write_action, write_bundle, write_cayley,
    write_coaction, write_structure, StructureKind,
};
use hopfq::longdimod::{
    check_d_equation, check_lemma_identities, check_long_dimodule, d_map, trivial_action_dimodule,
    trivial_coaction_dimodule, LongDimodule, Variant,
};
use hopfq::loops::{associativity_witness, is_associative, loop_algebra, search_ip_loops};
use hopfq::smash::{
    build_smash_coproduct, build_smash_product, permutation_action, random_cosmash_inputs, random_smash_inputs,
    sweep_cosmash, sweep_smash, CosmashInput, SmashInput, DEFAULT_SEED,
};
use hopfq::structures::{
    check_antipode_basic, check_quasi_identities, dualize, hopf_coquasigroup_suite, hopf_quasigroup_suite,
    tensor_product, HopfData,
};

const Q: FieldDesc = FieldDesc::Rationals;

fn f5() -> FieldDesc {
    FieldDesc::prime(5).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("Q[C2]", group_algebra(&cyclic(2), Q)),
        ("Q[C3]", group_algebra(&cyclic(3), Q)),
        ("Q[S3]", group_algebra(&s3(), Q)),
        ("GF(5)[S3]", group_algebra(&s3(), f5())),
    ];
    let mut bad = Vec::new();
    for (name, h) in &cases {
        if !hopf_quasigroup_suite(h).all_pass() {
            bad.push(format!("{name} quasigroup suite"));
        }
        if !hopf_coquasigroup_suite(&dualize(h)).all_pass() {
            bad.push(format!("{name} dual coquasigroup suite"));
        }
    }
    let t = start.elapsed();
    let fast = t < Duration::from_secs(1);
    outcome(
        bad.is_empty() && fast,
        format!("4 group algebras and their duals, failures {bad:?}, {} (limit 1s)", secs(t)),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let found = search_ip_loops(7, true, None).expect("order 7 is searchable");
    let t = start.elapsed();
    let Some(table) = found.first() else {
        return outcome(false, "no non-associative IP loop of order 7 found");
    };
    let h = loop_algebra(table, Q).expect("search returns IP loops");
    let quasi = check_quasi_identities(&h).all_pass();
    let antipode = check_antipode_basic(&h).all_pass();
    let witness = associativity_witness(table);
    let pass = quasi && antipode && !is_associative(table) && witness.is_some() && t < Duration::from_secs(60);
    outcome(
        pass,
        format!(
            "{} table(s), quasi {quasi}, antipode {antipode}, associativity witness {witness:?}, exhaustive search {} (limit 60s)",
            found.len(),
            secs(t)
        ),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let fixtures = dimodule_fixtures();
    let mut bad = Vec::new();
    let mut max_dim = 0;
    let (mut quasi, mut coquasi) = (0, 0);
    for (name, d) in &fixtures {
        max_dim = max_dim.max(d.dim());
        match d.variant() {
            Variant::OverQuasigroup => quasi += 1,
            Variant::OverCoquasigroup => coquasi += 1,
        }
        if !check_long_dimodule(d).all_pass() {
            bad.push(format!("{name}: not a dimodule"));
        }
        if !check_d_equation(&d_map(d)).all_pass() {
            bad.push(format!("{name}: D-equation"));
        }
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && fixtures.len() >= 10 && quasi > 0 && coquasi > 0 && t < Duration::from_secs(120);
    outcome(
        pass,
        format!(
            "{} dimodules ({quasi} over quasigroups, {coquasi} over coquasigroups, max dim {max_dim}), failures {bad:?}, {} (limit 120s)",
            fixtures.len(),
            secs(t)
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut degenerate: Vec<(String, LongDimodule)> = dimodule_fixtures()
        .into_iter()
        .filter(|(_, d)| {
            let h = d.hopf();
            d.action().same_tensor(&ActionData::trivial(h, d.dim()))
                || d.coaction().same_tensor(&CoactionData::trivial(h, d.dim()))
        })
        .collect();
    for (name, t) in [("C2", cyclic(2)), ("S3", s3()), ("loop7", loop7()), ("C2xC3", direct_product(&cyclic(2), &cyclic(3)))] {
        for field in [Q, f5()] {
            let h = group_algebra(&t, field);
            let tag = format!("{name}/{field}");
            degenerate.push((format!("{tag} mult, trivial coaction"), trivial_coaction_dimodule(&h, &ActionData::regular(&h)).unwrap()));
            degenerate.push((format!("{tag} trivial, trivial"), trivial_coaction_dimodule(&h, &ActionData::trivial(&h, 3)).unwrap()));
            let grades: Vec<usize> = (0..4).map(|i| (i * 2 + 1) % t.order()).collect();
            let graded = CoactionData::graded(field, h.dim(), &grades);
            if let Ok(d) = trivial_action_dimodule(&h, &graded) {
                degenerate.push((format!("{tag} trivial action, graded"), d));
            }
            if t.order() != 7 {
                let d = trivial_action_dimodule(&h, &CoactionData::regular(&h)).unwrap();
                degenerate.push((format!("{tag} trivial action, delta"), d));
            }
            let hc = function_algebra(&t, field);
            let d = trivial_action_dimodule(&hc, &CoactionData::regular(&hc)).unwrap();
            degenerate.push((format!("{tag} dual, trivial action, delta"), d));
        }
    }
    let bad: Vec<&String> = degenerate.iter().filter(|(_, d)| !d_map(d).is_identity()).map(|(n, _)| n).collect();
    outcome(bad.is_empty(), format!("{} trivial (co)action dimodules, non-identity {bad:?}", degenerate.len()))
}

fn inversion_smash() -> SmashInput {
    let h = group_algebra(&cyclic(2), Q);
    let a = group_algebra(&cyclic(3), Q);
    SmashInput::new(h, a, permutation_action(Q, &[vec![0, 1, 2], vec![0, 2, 1]])).unwrap()
}

fn criterion_5() -> Outcome {
    let built = build_smash_product(&inversion_smash()).unwrap();
    // A ⊗ H basis a·2 + h to the dihedral index h·3 + a
    let perm: Vec<usize> = (0..6).map(|p| s3_index(p / 2, p % 2)).collect();
    let target = loop_algebra(&s3(), Q).unwrap();
    let exact = built.relabel(&perm).same_tensors(&target);
    let suite = hopf_quasigroup_suite(&built);
    outcome(
        exact && suite.all_pass(),
        format!("reindex a*2+h -> h*3+a, structure constants equal {exact}, full suite {}", suite.all_pass()),
    )
}

fn criterion_6() -> Outcome {
    let count = 120;
    let start = Instant::now();
    let s = sweep_smash(DEFAULT_SEED, count, Q);
    let c = sweep_cosmash(DEFAULT_SEED, count, Q);
    let t = start.elapsed();
    let pass = s.discrepancies.is_empty()
        && c.discrepancies.is_empty()
        && s.hypothesis_failures == 0
        && c.hypothesis_failures == 0;
    outcome(
        pass,
        format!(
            "seed {DEFAULT_SEED:#x}: smash {count} inputs ({} p&q, {} neither, discrepancies {:?}); \
             cosmash {count} inputs ({} p&q, {} neither, discrepancies {:?}); {}",
            s.p_and_q,
            s.neither,
            s.discrepancies,
            c.p_and_q,
            c.neither,
            c.discrepancies,
            secs(t)
        ),
    )
}

/// The literal dual lemma fails on these valid fixtures: 30 of 49 basis
/// vectors for the first identity, 30 of 343 pairs for the second.
const LDMCP_PROFILE: [(&str, usize, usize); 3] = [
    ("co: H(x)M, k^loop7, M = (H, delta)", 30, 30),
    ("co: M(x)H, k^loop7, M = H by mult", 30, 30),
    ("co: tensor of half-trivial types over k^loop7", 30, 30),
];

fn criterion_7() -> (Outcome, bool) {
    let mut notes = Vec::new();
    let mut quasi_ok = true;
    let mut co_profile = Vec::new();
    for (name, d) in dimodule_fixtures() {
        let r = check_lemma_identities(&d);
        match d.variant() {
            Variant::OverQuasigroup => quasi_ok &= r.all_pass(),
            Variant::OverCoquasigroup if !r.all_pass() => {
                let f1 = r.entry("ldmcp1").map_or(0, |e| e.failures);
                let f2 = r.entry("ldmcp2").map_or(0, |e| e.failures);
                co_profile.push((name, f1, f2));
            }
            Variant::OverCoquasigroup => {}
        }
    }
    notes.push(format!("ldmp1/ldmp2 on quasigroup fixtures {}", if quasi_ok { "pass" } else { "FAIL" }));

    // falsification: μ-action with Δ-coaction breaks compatibility and the lemmas
    let g6 = group_algebra(&s3(), Q);
    let broken = LongDimodule::over(&g6, ActionData::regular(&g6), CoactionData::regular(&g6)).unwrap();
    let quasi_falsified = check_lemma_identities(&broken).entries().iter().any(|e| e.witness.is_some());
    let f6 = function_algebra(&s3(), Q);
    let broken = LongDimodule::over(&f6, ActionData::regular(&f6), CoactionData::regular(&f6)).unwrap();
    let co_falsified = check_lemma_identities(&broken).entries().iter().any(|e| e.witness.is_some());

    // antipode H-linearity and H-colinearity on every valid smash input
    let smash: Vec<SmashInput> = std::iter::once(inversion_smash())
        .chain(random_smash_inputs(DEFAULT_SEED, 40, Q))
        .collect();
    let linear_ok = smash
        .iter()
        .all(|i| check_antipode_linear(&i.h, &i.a, &i.act).unwrap().all_pass());
    let cosmash: Vec<CosmashInput> = random_cosmash_inputs(DEFAULT_SEED, 40, Q);
    let colinear_ok = cosmash
        .iter()
        .all(|i| check_antipode_colinear(&i.h, &i.c, &i.coact).unwrap().all_pass());
    // a transposition of two elements of C3 is not an automorphism
    let swap = permutation_action(Q, &[vec![0, 1, 2], vec![1, 0, 2]]);
    let (c2, c3) = (group_algebra(&cyclic(2), Q), group_algebra(&cyclic(3), Q));
    let linear_falsified = check_antipode_linear(&c2, &c3, &swap).unwrap().entries().iter().any(|e| e.witness.is_some());
    let k2 = function_algebra(&cyclic(2), Q);
    let colinear_falsified = check_antipode_colinear(&k2, &c3, &CoactionData::from_action(&swap))
        .unwrap()
        .entries()
        .iter()
        .any(|e| e.witness.is_some());
    notes.push(format!(
        "antipode H-linear on {} inputs {linear_ok}, H-colinear on {} inputs {colinear_ok}",
        smash.len(),
        cosmash.len()
    ));
    notes.push(format!(
        "falsified: ldmp {quasi_falsified}, ldmcp {co_falsified}, linear {linear_falsified}, colinear {colinear_falsified}"
    ));
    let co_ok = co_profile.is_empty();
    notes.push(format!("ldmcp1/ldmcp2 fail on valid fixtures (name, ldmcp1 failures, ldmcp2 failures): {co_profile:?}"));

    let expected: Vec<(String, usize, usize)> =
        LDMCP_PROFILE.iter().map(|&(n, a, b)| (n.to_string(), a, b)).collect();
    let rest_ok = quasi_ok && quasi_falsified && co_falsified && linear_ok && colinear_ok && linear_falsified && colinear_falsified;
    let profile_matches = co_profile == expected;
    (outcome(rest_ok && co_ok, notes.join("; ")), rest_ok && profile_matches)
}

fn hopf_fixtures() -> Vec<(String, HopfData, StructureKind)> {
    let mut out = Vec::new();
    let tables = [
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("S3", s3()),
        ("C2xC3", direct_product(&cyclic(2), &cyclic(3))),
        ("loop7", loop7()),
        ("octonion units", octonion_units()),
    ];
    for (name, t) in &tables {
        for field in [Q, f5()] {
            let h = loop_algebra(t, field).unwrap();
            out.push((format!("k[{name}] over {field}"), (*h).clone(), StructureKind::Quasigroup));
            out.push((format!("k^{name} over {field}"), h.dual(), StructureKind::Coquasigroup));
        }
    }
    let c2 = loop_algebra(&cyclic(2), Q).unwrap();
    let l7 = loop_algebra(&loop7(), Q).unwrap();
    out.push(("k[C2] (x) k[loop7]".into(), tensor_product(&c2, &l7).unwrap(), StructureKind::Quasigroup));
    out.push(("C2 smash Q[C3]".into(), (*build_smash_product(&inversion_smash()).unwrap()).clone(), StructureKind::Quasigroup));
    for (i, input) in random_smash_inputs(DEFAULT_SEED, 10, Q).iter().enumerate() {
        let built = build_smash_product(input).unwrap();
        if hopf_quasigroup_suite(&built).all_pass() {
            out.push((format!("sweep smash {i}"), (*built).clone(), StructureKind::Quasigroup));
        }
    }
    for (i, input) in random_cosmash_inputs(DEFAULT_SEED, 10, Q).iter().enumerate() {
        let built = build_smash_coproduct(input).unwrap();
        if hopf_coquasigroup_suite(&built).all_pass() {
            out.push((format!("sweep cosmash {i}"), (*built).clone(), StructureKind::Coquasigroup));
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let fixtures = hopf_fixtures();
    let bad: Vec<&String> = fixtures
        .iter()
        .filter(|(_, h, _)| !check_antipode_basic(h).all_pass())
        .map(|(n, _, _)| n)
        .collect();
    outcome(bad.is_empty(), format!("{} Hopf (co)quasigroups, failures {bad:?}", fixtures.len()))
}

fn fixture_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures"))
}

/// Writes, parses and writes again, returning whether both texts agree.
fn round_trip_file(text: &str) -> Result<bool, String> {
    let head = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let word = head.split_whitespace().next().unwrap_or("");
    let e = |e: hopfq::Error| e.to_string();
    let once = match word {
        "hopfqg" | "hopfcoqg" => {
            let f = parse_structure(text).map_err(e)?;
            write_structure(f.kind, &f.data)
        }
        "loop" => write_cayley(&parse_cayley(text).map_err(e)?),
        "action" => write_action(&parse_action(text, Q).map_err(e)?),
        "coaction" => write_coaction(&parse_coaction(text, Q).map_err(e)?),
        _ => write_bundle(&parse_bundle(text).map_err(e)?),
    };
    let twice = match word {
        "hopfqg" | "hopfcoqg" => {
            let f = parse_structure(&once).map_err(e)?;
            write_structure(f.kind, &f.data)
        }
        "loop" => write_cayley(&parse_cayley(&once).map_err(e)?),
        "action" => write_action(&parse_action(&once, Q).map_err(e)?),
        "coaction" => write_coaction(&parse_coaction(&once, Q).map_err(e)?),
        _ => write_bundle(&parse_bundle(&once).map_err(e)?),
    };
    Ok(once == twice)
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for (name, h, kind) in hopf_fixtures() {
        n += 1;
        let text = write_structure(kind, &h);
        let back = parse_structure(&text).unwrap();
        if !back.data.same_tensors(&h) || write_structure(back.kind, &back.data) != text {
            bad.push(name);
        }
    }
    for (name, d) in dimodule_fixtures() {
        n += 2;
        let f = d.field();
        let a = write_action(d.action());
        let c = write_coaction(d.coaction());
        let a_back = parse_action(&a, f).unwrap();
        let c_back = parse_coaction(&c, f).unwrap();
        if !a_back.same_tensor(d.action()) || write_action(&a_back) != a {
            bad.push(format!("{name} action"));
        }
        if !c_back.same_tensor(d.coaction()) || write_coaction(&c_back) != c {
            bad.push(format!("{name} coaction"));
        }
    }
    let mut tables = vec![cyclic(1), cyclic(2), s3(), loop7(), octonion_units()];
    for order in 1..=7 {
        tables.extend(search_ip_loops(order, false, None).unwrap());
    }
    for t in &tables {
        n += 1;
        let text = write_cayley(t);
        let back = parse_cayley(&text).unwrap();
        if &back != t || write_cayley(&back) != text {
            bad.push(format!("cayley {text:?}"));
        }
    }
    let mut files: Vec<_> = std::fs::read_dir(fixture_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for p in &files {
        n += 1;
        let text = std::fs::read_to_string(p).unwrap();
        if round_trip_file(&text) != Ok(true) {
            bad.push(p.display().to_string());
        }
    }

    // exit codes
    let bin = env!("CARGO_BIN_EXE_hopfq");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o");
    let out = out.to_str().unwrap();
    let runs: Vec<(Vec<&str>, i32)> = vec![
        (vec!["verify", "c2.hq"], 0),
        (vec!["verify", "loop7.hq"], 0),
        (vec!["verify", "corrupted.hq"], 1),
        (vec!["verify", "not-latin.cayley"], 1),
        (vec!["verify", "missing.hq"], 2),
        (vec!["verify", "c2-on-c3.act"], 2),
        (vec!["loop-algebra", "s3.cayley", "-o", out], 0),
        (vec!["loop-algebra", "not-latin.cayley", "-o", out], 1),
        (vec!["smash", "c2-on-c3.bundle"], 0),
        (vec!["cosmash", "c2dual-on-c3.bundle"], 0),
        (vec!["dequation", "h-mu-trivial.bundle"], 0),
        (vec!["dual", "c2.hq", "-o", out], 0),
        (vec!["no-such-command"], 2),
    ];
    let mut code_bad = Vec::new();
    for (args, want) in &runs {
        let got = Command::new(bin).args(args).current_dir(fixture_dir()).output().unwrap().status.code();
        if got != Some(*want) || !matches!(got, Some(0..=2)) {
            code_bad.push(format!("{args:?}: {got:?} (want {want})"));
        }
    }
    outcome(
        bad.is_empty() && code_bad.is_empty(),
        format!(
            "{n} serialize/parse/serialize round trips, mismatches {bad:?}; {} CLI runs, exit-code mismatches {code_bad:?}",
            runs.len()
        ),
    )
}

fn main() {
    let mut unexpected = 0;
    let mut report = |n: usize, o: Outcome, accepted: bool| {
        println!("criterion {n}: {} | {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !accepted {
            unexpected += 1;
        }
    };
    for (n, f) in [
        (1, criterion_1 as fn() -> Outcome),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
    ] {
        let o = f();
        let ok = o.pass;
        report(n, o, ok);
    }
    // known failure: the accepted state is the documented failure profile
    let (o, profile_ok) = criterion_7();
    report(7, o, profile_ok);
    for (n, f) in [(8, criterion_8 as fn() -> Outcome), (9, criterion_9)] {
        let o = f();
        let ok = o.pass;
        report(n, o, ok);
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criterion result(s) differ from the expected state");
        std::process::exit(1);
    }
}
