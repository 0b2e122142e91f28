//! Acceptance suite: one test per shipped claim, each printing a
//! PASS/FAIL line (visible with `--nocapture`).
//!
//! Run with: `cargo test -p mvlc-cli --test acceptance -- --nocapture`

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use mvlc_core::catalog::Catalog;
use mvlc_core::config::{AdderChoice, Config};
use mvlc_core::generate::{
    gen_binary_rca, gen_qfa_decomposed, gen_quaternary_rca, gen_v1_adder, gen_v1_multiplier,
    gen_wallace_binary, gen_wallace_quaternary,
};
use mvlc_core::logic::{
    add_oracle, binary_to_quaternary, gray_decode, gray_encode, published, quaternary_to_binary,
    CodeMap, DigitVector, LogicLevel, Radix,
};
use mvlc_core::netlist::{fanout_map, insert_buffers, Netlist, NetlistBuilder};
use mvlc_core::report::{metrics, thesis_rows};
use mvlc_core::sim::{equiv_check, verify_exhaustive, Oracle};

fn criterion(id: u32, desc: &str, f: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(f);
    match &result {
        Ok(()) => println!("acceptance criterion {id}: PASS - {desc}"),
        Err(_) => println!("acceptance criterion {id}: FAIL - {desc}"),
    }
    if let Err(e) = result {
        resume_unwind(e);
    }
}

fn cat() -> Catalog {
    Catalog::builtin_default()
}

fn mvlc(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_mvlc"))
        .args(args)
        .output()
        .expect("mvlc binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn criterion_1_quaternary_adder_correctness() {
    criterion(
        1,
        "every quaternary FA variant matches the arithmetic oracle on all 32 vectors; \
the two published erratum rows are flagged",
        || {
            let start = Instant::now();
            let c = cat();

            // all behavioral variants, the decomposed structural adder and
            // the hybrid V1 adder
            let variants = [
                ("qfa_v1", Some("3ps")),
                ("qfa_v1", Some("1ps")),
                ("qfa_v2", Some("ebrahimi")),
                ("qfa_v3", Some("moaiyeri")),
                ("qfa_v3", Some("roosta_3ps")),
                ("qfa_v3", Some("roosta_1ps")),
                ("qfa_v3", Some("roosta_3ps_buffered")),
                ("qfa_v3", Some("roosta_1ps_buffered")),
            ];
            for (name, variant) in variants {
                let choice = AdderChoice {
                    name: name.into(),
                    variant: variant.map(str::to_string),
                };
                let nl = gen_quaternary_rca(&c, &choice, 1).unwrap();
                let r = verify_exhaustive(&nl, &c, Oracle::Add, None).unwrap();
                assert_eq!(r.total_vectors, 32, "{name}/{variant:?}");
                assert!(r.is_ok(), "{name}/{variant:?}: {:?}", r.mismatches.first());
            }
            for nl in [gen_v1_adder(&c, &Config::default()), gen_qfa_decomposed()] {
                let r = verify_exhaustive(&nl, &c, Oracle::Add, None).unwrap();
                assert_eq!(r.total_vectors, 32);
                assert!(r.is_ok(), "{}: {:?}", nl.name, r.mismatches.first());
            }

            // the published table, taken literally, disagrees with
            // arithmetic on exactly the two known rows
            let mut bad_rows = Vec::new();
            for (i, &(a, b, ci, qs, qc)) in published::QFA_TABLE.iter().enumerate() {
                let (s, co) = add_oracle(
                    Radix::Quaternary,
                    LogicLevel::quaternary(a).unwrap(),
                    LogicLevel::quaternary(b).unwrap(),
                    LogicLevel::binary(ci).unwrap(),
                )
                .unwrap();
                if (s.value(), co.value()) != (qs, qc) {
                    bad_rows.push(i);
                }
            }
            assert_eq!(bad_rows, published::QFA_ERRATA.to_vec());
            // the misplaced row is the ci=1 arithmetic result
            let (a, b, _, qs, qc) = published::QFA_TABLE[published::QFA_ERRATA[1]];
            let (s, co) = add_oracle(
                Radix::Quaternary,
                LogicLevel::quaternary(a).unwrap(),
                LogicLevel::quaternary(b).unwrap(),
                LogicLevel::binary(1).unwrap(),
            )
            .unwrap();
            assert_eq!((s.value(), co.value()), (qs, qc));

            assert!(
                start.elapsed().as_secs_f64() < 1.0,
                "took {:?}",
                start.elapsed()
            );
        },
    );
}

#[test]
fn criterion_2_multiplier_correctness() {
    criterion(
        2,
        "4x4 quaternary multipliers (direct and hybrid) and the 8x8 binary multiplier \
match integer multiplication on all 65536 operand pairs; hybrid ≡ direct",
        || {
            let start = Instant::now();
            let c = cat();
            let cfg = Config::default();

            let direct = gen_wallace_quaternary(&c, &cfg, 4).unwrap();
            let r = verify_exhaustive(&direct, &c, Oracle::Mul, None).unwrap();
            assert_eq!(r.total_vectors, 65536);
            assert!(r.is_ok(), "{:?}", r.mismatches.first());

            let hybrid = gen_v1_multiplier(&c, &cfg, 4).unwrap();
            let r = verify_exhaustive(&hybrid, &c, Oracle::Mul, None).unwrap();
            assert_eq!(r.total_vectors, 65536);
            assert!(r.is_ok(), "{:?}", r.mismatches.first());

            let eq = equiv_check(&hybrid, &direct, &c, None, None).unwrap();
            assert_eq!(eq.total_vectors, 65536);
            assert!(eq.is_ok(), "{:?}", eq.mismatches.first());

            let binary = gen_wallace_binary(&c, 8).unwrap();
            let r = verify_exhaustive(&binary, &c, Oracle::Mul, None).unwrap();
            assert_eq!(r.total_vectors, 65536);
            assert!(r.is_ok(), "{:?}", r.mismatches.first());

            assert!(
                start.elapsed().as_secs_f64() < 60.0,
                "took {:?}",
                start.elapsed()
            );
        },
    );
}

#[test]
fn criterion_3_table_reproduction() {
    criterion(
        3,
        "report --table emits the published transistor counts and ratios",
        || {
            let parse_csv = |out: &str| -> Vec<(String, u32, Option<f64>)> {
                out.lines()
                    .skip(1)
                    .map(|line| {
                        let cols: Vec<&str> = line.split(',').collect();
                        (
                            cols[0].to_string(),
                            cols[1].parse().unwrap(),
                            (!cols[2].is_empty()).then(|| cols[2].parse().unwrap()),
                        )
                    })
                    .collect()
            };

            let (out, _, code) = mvlc(&["report", "--table", "nand", "--format", "csv"]);
            assert_eq!(code, 0);
            let rows = parse_csv(&out);
            assert_eq!(
                rows.iter().map(|r| r.1).collect::<Vec<_>>(),
                vec![20, 16, 4]
            );
            assert_eq!(
                rows.iter().map(|r| r.2.unwrap()).collect::<Vec<_>>(),
                vec![5.0, 4.0, 1.0]
            );

            let (out, _, code) = mvlc(&["report", "--table", "adders", "--format", "csv"]);
            assert_eq!(code, 0);
            let rows = parse_csv(&out);
            assert_eq!(
                rows.iter().map(|r| r.1).collect::<Vec<_>>(),
                vec![112, 112, 111, 154, 82, 130]
            );
            for (row, want) in rows.iter().zip([4.0, 4.0, 4.0, 5.5, 2.9, 4.65]) {
                let got = row.2.unwrap();
                assert!((got - want).abs() <= 0.1, "{}: {got} vs {want}", row.0);
            }

            let (out, _, code) = mvlc(&["report", "--table", "multipliers", "--format", "csv"]);
            assert_eq!(code, 0);
            let rows = parse_csv(&out);
            assert_eq!(
                rows.iter().map(|r| r.1).collect::<Vec<_>>(),
                vec![1892, 2032, 2888]
            );
        },
    );
}

#[test]
fn criterion_4_thesis_invariant() {
    criterion(
        4,
        "every quaternary/binary counterpart pair has TC ratio above the 2.0 information ratio",
        || {
            let rows = thesis_rows(&cat());
            assert!(rows.len() >= 12, "only {} pairs costed", rows.len());
            for row in &rows {
                assert_eq!(row.information_ratio, 2.0, "{}", row.subject);
                assert!(
                    row.tc_ratio > 2.0,
                    "{} vs {}: ratio {} not above 2.0",
                    row.subject,
                    row.baseline,
                    row.tc_ratio
                );
            }
        },
    );
}

#[test]
fn criterion_5_codec_properties() {
    criterion(
        5,
        "gray codec round-trips with adjacency; positional conversion preserves value \
on 10^4 seeded vectors",
        || {
            for q in 0..4u8 {
                let level = LogicLevel::quaternary(q).unwrap();
                let (x, y) = gray_decode(level).unwrap();
                assert_eq!(gray_encode(x, y).unwrap(), level);
            }
            for x in 0..2u8 {
                for y in 0..2u8 {
                    let (xl, yl) = (
                        LogicLevel::binary(x).unwrap(),
                        LogicLevel::binary(y).unwrap(),
                    );
                    let q = gray_encode(xl, yl).unwrap();
                    assert_eq!(gray_decode(q).unwrap(), (xl, yl));
                }
            }
            let map = CodeMap::gray();
            for q in 0..3u8 {
                let (x0, y0) = map.forward(LogicLevel::quaternary(q).unwrap()).unwrap();
                let (x1, y1) = map.forward(LogicLevel::quaternary(q + 1).unwrap()).unwrap();
                let dist = (x0 != x1) as u8 + (y0 != y1) as u8;
                assert_eq!(dist, 1, "levels {q} and {}", q + 1);
            }

            // 10^4 seeded-random vectors through the positional map
            let positional = CodeMap::positional();
            let mut state: u64 = 0x6d766c63; // fixed seed
            let mut next = || {
                state = state.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            };
            for _ in 0..10_000 {
                let len = (next() % 13) as usize;
                let digits: Vec<u8> = (0..len).map(|_| (next() % 4) as u8).collect();
                let v = DigitVector::new(Radix::Quaternary, digits).unwrap();
                let bits = quaternary_to_binary(&v, &positional).unwrap();
                assert_eq!(bits.value(), v.value());
                assert_eq!(binary_to_quaternary(&bits, &positional).unwrap(), v);
            }
        },
    );
}

#[test]
fn criterion_6_structural_counts() {
    criterion(
        6,
        "64 AND gates in the 8x8 binary tree; 16 digit multipliers in the 4x4 quaternary \
tree; every digit-multiplier carry net is ternary",
        || {
            let c = cat();
            let cfg = Config::default();
            let wb8 = gen_wallace_binary(&c, 8).unwrap();
            let ands = wb8
                .instances
                .iter()
                .filter(|i| i.primitive.name == "and2_binary")
                .count();
            assert_eq!(ands, 64);

            let wq4 = gen_wallace_quaternary(&c, &cfg, 4).unwrap();
            let muls: Vec<_> = wq4
                .instances
                .iter()
                .filter(|i| i.primitive.name == "qmul_digit")
                .collect();
            assert_eq!(muls.len(), 16);
            for inst in muls {
                let carry_net = &inst.bindings["c"];
                assert_eq!(wq4.nets[carry_net], Radix::Ternary, "{}", inst.id);
            }
        },
    );
}

#[test]
fn criterion_7_buffer_pass() {
    criterion(
        7,
        "buffer insertion caps every fan-out at 4, never lowers cost, preserves behavior; \
buffered Roosta variants report 100 and 148",
        || {
            let c = cat();
            let cfg = Config::default();
            let mut circuits: Vec<Netlist> = vec![
                gen_binary_rca(4).unwrap(),
                gen_quaternary_rca(&c, &AdderChoice::default(), 2).unwrap(),
                gen_v1_adder(&c, &cfg),
                gen_wallace_binary(&c, 3).unwrap(),
                gen_wallace_quaternary(&c, &cfg, 2).unwrap(),
                gen_v1_multiplier(&c, &cfg, 2).unwrap(),
            ];
            // one circuit with genuinely high fan-out
            let mut b = NetlistBuilder::new("fanout9");
            let a = b.input("a", Radix::Quaternary);
            for i in 0..9 {
                let y = b.output(&format!("y{i}"), Radix::Quaternary);
                b.instance(
                    &format!("g{i}"),
                    "inverter_quaternary",
                    None,
                    &[("a", &a), ("y", &y)],
                );
            }
            circuits.push(b.finish());

            for nl in &circuits {
                let buffered = insert_buffers(nl, &c, 4).unwrap();
                let fans = fanout_map(&buffered, &c).unwrap();
                assert!(fans.values().all(|&f| f <= 4), "{}", nl.name);
                let before = metrics(nl, &c).unwrap().derived_tc;
                let after = metrics(&buffered, &c).unwrap().derived_tc;
                assert!(after >= before, "{}", nl.name);
                let eq = equiv_check(nl, &buffered, &c, None, None).unwrap();
                assert!(eq.is_ok(), "{}: {:?}", nl.name, eq.mismatches.first());
            }

            assert_eq!(
                c.get("qfa_v3", Some("roosta_3ps_buffered"))
                    .unwrap()
                    .reported_tc,
                Some(100)
            );
            assert_eq!(
                c.get("qfa_v3", Some("roosta_1ps_buffered"))
                    .unwrap()
                    .reported_tc,
                Some(148)
            );
        },
    );
}

#[test]
fn criterion_8_composition_discrepancy_footnotes() {
    criterion(
        8,
        "hybrid circuits report both derived and reported counts with an explicit \
discrepancy note",
        || {
            let c = cat();
            let cfg = Config::default();

            let v1 = gen_v1_adder(&c, &cfg);
            let m = metrics(&v1, &c).unwrap();
            assert_eq!(m.derived_tc, 96);
            assert_eq!(m.reported_tc, Some(112));
            assert!(
                m.notes.iter().any(|n| n.contains("discrepancy")),
                "missing note: {:?}",
                m.notes
            );

            let hybrid = gen_v1_multiplier(&c, &cfg, 4).unwrap();
            let m = metrics(&hybrid, &c).unwrap();
            assert_eq!(m.reported_tc, Some(2032));
            assert!(m.derived_tc > 0 && m.derived_tc != 2032);
            assert!(m.notes.iter().any(|n| n.contains("discrepancy")));

            // the rendered report surfaces the note
            let path = tmp("accept8_v1_adder.json");
            mvlc_core::json::save(&v1, &path).unwrap();
            let (out, _, code) = mvlc(&[
                "report",
                "--circuit",
                path.to_str().unwrap(),
                "--format",
                "md",
            ]);
            assert_eq!(code, 0);
            assert!(out.contains("derived_tc: 96"), "{out}");
            assert!(out.contains("reported_tc: 112"), "{out}");
            assert!(out.contains("discrepancy"), "{out}");
        },
    );
}

#[test]
fn criterion_9_determinism() {
    criterion(
        9,
        "report and exhaustive-verify runs are byte-identical given identical flags",
        || {
            let path = tmp("accept9_qrca2.json");
            let (_, _, code) = mvlc(&[
                "build",
                "quaternary_rca",
                "--n",
                "2",
                "-o",
                path.to_str().unwrap(),
            ]);
            assert_eq!(code, 0);

            for args in [
                vec!["report", "--table", "adders", "--format", "md"],
                vec!["report", "--table", "multipliers", "--format", "json"],
                vec![
                    "report",
                    "--circuit",
                    path.to_str().unwrap(),
                    "--format",
                    "csv",
                ],
                vec![
                    "verify",
                    "-c",
                    path.to_str().unwrap(),
                    "--oracle",
                    "add",
                    "--exhaustive",
                ],
                vec!["catalog", "list", "--format", "csv"],
            ] {
                let (out1, _, code1) = mvlc(&args);
                let (out2, _, code2) = mvlc(&args);
                assert_eq!(code1, 0, "{args:?}");
                assert_eq!(code2, 0);
                assert_eq!(out1, out2, "{args:?} not byte-identical");
            }

            // building the same circuit twice yields identical files
            let path2 = tmp("accept9_qrca2_again.json");
            mvlc(&[
                "build",
                "quaternary_rca",
                "--n",
                "2",
                "-o",
                path2.to_str().unwrap(),
            ]);
            assert_eq!(
                std::fs::read(&path).unwrap(),
                std::fs::read(&path2).unwrap()
            );
        },
    );
}
