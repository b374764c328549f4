use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkgram"))
        .args(args)
        .env_remove("PARKGRAM_MAX_ORDER")
        .env_remove("PARKGRAM_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn counts() {
    assert_eq!(
        stdout(&["count", "rational", "-a", "4", "-b", "7"]),
        "4096\n"
    );
    assert_eq!(stdout(&["count", "u", "-u", "1,2"]), "3\n");
    assert_eq!(
        stdout(&["count", "basic", "--alpha", "1", "--beta", "1", "-n", "3"]),
        "16\n"
    );
    assert_eq!(
        stdout(&[
            "count",
            "u",
            "-u",
            "1,1,2,2,3,3,4",
            "--method",
            "bruteforce"
        ]),
        "4096\n"
    );
    let all = stdout(&[
        "count",
        "periodic",
        "-a",
        "3",
        "-b",
        "2",
        "-k",
        "2",
        "--all-methods",
    ]);
    assert_eq!(all.matches(" 243\n").count(), 4, "{all}");
    assert!(all.ends_with("AGREE\n"));
}

#[test]
fn count_json() {
    assert_eq!(
        stdout(&["--json", "count", "rational", "-a", "3", "-b", "2"]),
        "{\"method\":\"formula\",\"value\":\"3\"}\n"
    );
}

#[test]
fn count_preconditions() {
    assert_eq!(code(&["count", "rational", "-a", "4", "-b", "6"]), 2);
    assert_eq!(code(&["count", "periodic", "-a", "3", "-b", "2"]), 2);
    assert_eq!(
        code(&["count", "u", "-u", "1/2,2", "--method", "bruteforce"]),
        2
    );
    assert_eq!(code(&["count", "nonsense"]), 2);
}

#[test]
fn enumerate_lists_in_order() {
    assert_eq!(stdout(&["enumerate", "-u", "1,2"]), "1,1\n1,2\n2,1\n");
    assert_eq!(
        stdout(&["enumerate", "-a", "3", "-b", "2", "-k", "2", "--count-only"]),
        "243\n"
    );
    assert_eq!(
        stdout(&["--json", "enumerate", "-u", "1,2"]),
        "[[1,1],[1,2],[2,1]]\n"
    );
    assert_eq!(code(&["--max-enum", "3", "enumerate", "-u", "1,2,3,4"]), 2);
}

#[test]
fn check_membership() {
    assert_eq!(stdout(&["check", "-s", "2,1", "-u", "1,2"]), "parking\n");
    assert_eq!(
        stdout(&["check", "-s", "2,2", "-u", "1,2"]),
        "not parking\n"
    );
    assert_eq!(
        stdout(&["check", "-s", "2,1,1", "-x", "1,1/2,1/2"]),
        "parking\n"
    );
    assert_eq!(
        stdout(&["check", "-s", "1,2,2", "-x", "1,1/2,1/2"]),
        "not parking\n"
    );
    assert_eq!(
        stdout(&["check", "-s", "2,0,3,0,1,2,0", "-a", "4", "-b", "7"]),
        "parking\n"
    );
    let blocks = stdout(&[
        "check", "-s", "4,0,3,1", "-a", "3", "-b", "2", "-k", "2", "--blocks",
    ]);
    assert_eq!(
        blocks,
        "parking\nlengths (2,2)\nblock 1: 1,2 at positions 1,3\nblock 2: 5,4 at positions 0,2\n"
    );
}

#[test]
fn qpolys() {
    assert_eq!(
        stdout(&["qpoly", "classical", "-n", "2"]),
        "q^2 + 2*q\ncoefficients: [0, 2, 1]\n"
    );
    let q = stdout(&[
        "qpoly", "periodic", "-a", "3", "-b", "2", "-d", "2", "--check",
    ]);
    assert!(q.ends_with("CHECK OK\n"), "{q}");
    let out = run(&["qpoly", "periodic", "-a", "4", "-b", "2", "-d", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("congruent"));
    assert!(stdout(&["qpoly", "blocks", "-b", "2", "-d", "2", "--check"]).contains("CHECK OK"));
    assert_eq!(
        stdout(&["--json", "qpoly", "bruteforce", "-u", "1,2"]),
        "{\"coefficients\":[\"0\",\"2\",\"1\"],\"human\":\"q^2 + 2*q\"}\n"
    );
}

#[test]
fn derivatives() {
    assert_eq!(
        stdout(&["derive", "-g", "G", "-s", "S", "-n", "3", "--subst", "A=1,S=1"]),
        "16\n"
    );
    assert_eq!(
        stdout(&[
            "derive",
            "-g",
            "H",
            "-s",
            "z",
            "-n",
            "4",
            "--subst",
            "y=1,z=1,x=2,w=3"
        ]),
        "5488\n"
    );
    let subst = "z1=1,z2=1,y1=1,y2=1,x1=2,x2=2,w1=2,w2=2";
    assert_eq!(
        stdout(&[
            "derive", "-g", "K:2", "-s", "z1*z2", "-n", "4", "--subst", subst, "--hook", "spec:b=2"
        ]),
        "3888\n"
    );
    assert_eq!(
        stdout(&["derive", "-g", "G", "-s", "S", "-n", "1"]),
        "A*S^2\n"
    );
    assert_eq!(
        stdout(&["derive", "-g", "F", "-s", "f0", "-n", "2"]),
        "f1*g2 + f2*g1^2\n"
    );
    assert_eq!(code(&["derive", "-g", "Q", "-s", "S", "-n", "1"]), 2);
    assert_eq!(code(&["derive", "-g", "G", "-s", "S", "-n", "13"]), 2);
    assert_eq!(
        code(&[
            "--max-order",
            "20",
            "derive",
            "-g",
            "H",
            "-s",
            "z",
            "-n",
            "13",
            "--subst",
            "x=1,y=1,z=1,w=1"
        ]),
        0
    );
}

#[test]
fn derive_from_rules_file() {
    let dir = std::env::temp_dir().join(format!("parkgram-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.txt");
    std::fs::write(&path, "# trees\nA -> A^3*S\nS -> A*S^2\n").unwrap();
    let out = stdout(&[
        "derive",
        "--rules",
        path.to_str().unwrap(),
        "-s",
        "S",
        "-n",
        "2",
        "--subst",
        "A=1,S=1",
    ]);
    assert_eq!(out, "3\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn spec_listing() {
    assert_eq!(
        stdout(&["spec", "-k", "2", "-b", "2"]),
        "(2,2)\n(3,1)\n(4,0)\n"
    );
    assert_eq!(
        stdout(&["--json", "spec", "-k", "2", "-b", "3"]),
        "[[3,3],[4,2],[5,1],[6,0]]\n"
    );
}

#[test]
fn conversions() {
    assert_eq!(
        stdout(&["convert", "ab2u", "-s", "2,0,3,0,1,2,0"]),
        "3,1,4,1,2,3,1\n"
    );
    assert_eq!(
        stdout(&["convert", "u2ab", "-s", "3,1,4,1,2,3,1"]),
        "2,0,3,0,1,2,0\n"
    );
    let path = "E[1]E[3]E[6]N E[4]N E[0]E[5]N E[2]N";
    assert_eq!(
        stdout(&[
            "convert",
            "pf2dyck",
            "-s",
            "2,0,3,0,1,2,0",
            "-a",
            "4",
            "-b",
            "7"
        ]),
        format!("{path}\n")
    );
    assert_eq!(
        stdout(&["convert", "dyck2pf", "-s", path, "-a", "4", "-b", "7"]),
        "2,0,3,0,1,2,0\n"
    );
    assert_eq!(
        code(&[
            "convert",
            "pf2dyck",
            "-s",
            "3,3,3,3,3,3,3",
            "-a",
            "4",
            "-b",
            "7"
        ]),
        2
    );
    assert_eq!(code(&["convert", "dyck2pf", "-s", "E[0]E[0]N"]), 2);
}

#[test]
fn verification_suites() {
    let abel = stdout(&[
        "verify", "abel", "--k", "3", "--n", "5", "--trials", "20", "--seed", "7",
    ]);
    assert_eq!(
        abel.lines().filter(|l| l.starts_with("PASS abel")).count(),
        20
    );
    assert!(abel.ends_with("20 passed, 0 failed (seed 7)\n"));
    let periodic = stdout(&["verify", "periodic", "-a", "2", "-b", "3", "-k", "2"]);
    assert!(periodic.contains("bruteforce = 1184"), "{periodic}");
    assert!(periodic.ends_with("5 passed, 0 failed (seed 1729)\n"));
    let all = stdout(&["verify", "all", "--quick"]);
    assert!(all.contains(" 0 failed"), "{all}");
    assert_eq!(code(&["verify", "q-periodic", "-a", "3", "-b", "2"]), 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "abel-uniform", "--trials", "10"][..],
        &["verify", "scaling", "--seed", "99"][..],
        &["--json", "verify", "abel"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn environment_caps() {
    let out = Command::new(env!("CARGO_BIN_EXE_parkgram"))
        .args(["derive", "-g", "G", "-s", "S", "-n", "5"])
        .env("PARKGRAM_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn short_value_aliases() {
    assert!(stdout(&["qpoly", "lemma52", "-l", "3", "-k", "2", "--check"]).ends_with("CHECK OK\n"));
    assert!(
        stdout(&["qpoly", "finalcor", "-b", "2", "-d", "2", "--check"]).ends_with("CHECK OK\n")
    );
    assert!(stdout(&["verify", "thm15", "-a", "3", "-b", "2", "-k", "2"]).contains(" 0 failed"));
    assert!(stdout(&["verify", "thm24", "-a", "3", "-b", "2", "-d", "2"]).contains(" 0 failed"));
    assert!(stdout(&["verify", "cor3", "--trials", "3"]).contains(" 0 failed"));
}
