//! End-to-end tests against the compiled binary: byte-exact stdout goldens
//! and the exit-code contract (0 ok, 1 failure, 2 bad input, 3 guard).

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_genocchi-cli"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} exited {code}: {err}");
    out
}

fn fails_with(args: &[&str], code: i32) {
    let (got, _, err) = run(args);
    assert_eq!(got, code, "{args:?} stderr: {err}");
    assert!(err.starts_with("error: "), "{args:?} stderr: {err}");
}

#[test]
fn listing_matches_the_small_sets() {
    assert_eq!(
        stdout_of(&["list", "--family", "ec", "--n", "6"]),
        "(1,2,3,4,5,6)\n(1,2,4,3,5,6)\n(1,2,5,6,3,4)\n"
    );
    assert_eq!(
        stdout_of(&["list", "--family", "dc", "--n", "6"]),
        "(1,3,5,6,4,2)\n(1,4,3,5,6,2)\n(1,5,6,3,4,2)\n"
    );
    assert_eq!(
        stdout_of(&["list", "--family", "dumont", "--n", "5"]),
        "21435\n34215\n42135\n"
    );
    assert_eq!(
        stdout_of(&["list", "--family", "soe", "--n", "5"]),
        "12345\n13245\n14523\n"
    );
    assert_eq!(
        stdout_of(&["list", "--family", "lag-m", "--n", "4"]),
        "(L0UDL0; 0,0,0,0)\n(L0UDL0; 0,0,1,0)\n(L0L0L0L0; 0,0,0,0)\n"
    );
    assert_eq!(
        stdout_of(&["list", "--family", "lag-mstar", "--n", "4"]),
        "(UDUD; 0,1,0,1)\n(UL1L0D; 0,1,0,1)\n(UL1L0D; 0,1,1,1)\n"
    );
}

#[test]
fn listing_formats() {
    assert_eq!(
        stdout_of(&["list", "--family", "ec", "--n", "6", "--format", "json"]),
        "[{\"object\":\"(1,2,3,4,5,6)\"},{\"object\":\"(1,2,4,3,5,6)\"},{\"object\":\"(1,2,5,6,3,4)\"}]\n"
    );
    assert_eq!(
        stdout_of(&["list", "--family", "ec", "--n", "6", "--format", "csv"]),
        "object\n\"(1,2,3,4,5,6)\"\n\"(1,2,4,3,5,6)\"\n\"(1,2,5,6,3,4)\"\n"
    );
}

#[test]
fn counting_families() {
    assert_eq!(stdout_of(&["count", "--family", "ec", "--n", "6"]), "3\n");
    assert_eq!(stdout_of(&["count", "--family", "dc", "--n", "6"]), "3\n");
    assert_eq!(stdout_of(&["count", "--family", "dumont", "--n", "5"]), "3\n");
    assert_eq!(
        stdout_of(&["count", "--family", "ec", "--multiset", "1^2,2^2,3^2,4^2"]),
        "14\n"
    );
    assert_eq!(
        stdout_of(&["count", "--family", "ec", "--multiset", "1,2,3"]),
        "0\n"
    );
    // (n+1)! free histories once the guard is lifted
    assert_eq!(
        stdout_of(&["count", "--family", "lag-all", "--n", "10", "--unsafe-no-guard"]),
        "39916800\n"
    );
}

#[test]
fn mapping_examples() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["map", "--bijection", "theta", "--input", "(1,5,6,3,4,2)"],
            "34215\n",
        ),
        (
            &["map", "--bijection", "phi_fv", "--input", "528713649"],
            "(UUL0UDDL1D; 0,1,0,0,3,1,1,1)\n",
        ),
        (
            &["map", "--bijection", "phi_fv", "--inverse", "--input", "(UL1UDL0D; 0,1,1,2,0,0)"],
            "4372156\n",
        ),
        (
            &["map", "--bijection", "eta", "--input", "(1,2,5,6,3,4)"],
            "14523\n",
        ),
        (
            &["map", "--bijection", "eta", "--inverse", "--input", "14523"],
            "(1,2,5,6,3,4)\n",
        ),
        (
            &["map", "--bijection", "rho", "--input", "(L0UDL0; 0,0,1,0)"],
            "(UL1L0D; 0,1,1,1)\n",
        ),
        (
            &["map", "--bijection", "rho", "--inverse", "--input", "(UDUD; 0,1,0,1)"],
            "(L0L0L0L0; 0,0,0,0)\n",
        ),
        (&["map", "--bijection", "psi", "--input", "(1,2)"], "(1,2)\n"),
        (
            &["map", "--bijection", "psi", "--input", "(1,2^2,4^3,6,5^2,6,1^2,8,1^2,4,5,8,3^2,4)"],
            "(1^2,5,8,4,3^2,4,1,6,5^2,6,4^3,2^2,1^2,8)\n",
        ),
        (
            &["map", "--bijection", "Phi", "--input", "(1,2,5,6,3,4)"],
            "42135\n",
        ),
        (
            &["map", "--bijection", "Psi", "--inverse", "--input", "34215"],
            "(1,2,5,6,3,4)\n",
        ),
    ];
    for (args, want) in cases {
        assert_eq!(&stdout_of(args), want, "{args:?}");
    }
}

#[test]
fn table_rendering() {
    assert_eq!(
        stdout_of(&["table", "--kind", "genocchi", "--max-n", "8", "--format", "csv"]),
        "n,value\n1,1\n2,1\n3,3\n4,17\n5,155\n6,2073\n7,38227\n8,929569\n"
    );
    assert_eq!(
        stdout_of(&["table", "--kind", "f-eq", "--n", "5"]),
        "S={}: 1\nS={2}: 1\nS={3}: 3\nS={2,3}: 1\nS={4}: 7\nS={2,4}: 3\nS={3,4}: 7\nS={2,3,4}: 1\nS={5}: 15\nS={2,5}: 7\nS={3,5}: 17\nS={2,3,5}: 3\nS={4,5}: 31\nS={2,4,5}: 7\nS={3,4,5}: 15\nS={2,3,4,5}: 1\n"
    );
    assert_eq!(
        stdout_of(&["table", "--kind", "genocchi-k", "--max-n", "2", "--max-k", "2"]),
        "n=1 k=1: 1\nn=1 k=2: 2\nn=2 k=1: 1\nn=2 k=2: 14\n"
    );
    assert_eq!(
        stdout_of(&["table", "--kind", "genocchi-k", "--max-n", "2", "--max-k", "2", "--format", "json"]),
        "[{\"k\":1,\"n\":1,\"value\":1},{\"k\":2,\"n\":1,\"value\":2},{\"k\":1,\"n\":2,\"value\":1},{\"k\":2,\"n\":2,\"value\":14}]\n"
    );
}

#[test]
fn verify_reports_each_check() {
    let out = stdout_of(&["verify", "--suite", "roundtrips", "--max-n", "2"]);
    assert_eq!(
        out,
        "ok   maps round-trip over the set content [2]: 1 cycles checked through every stage\n\
         ok   maps round-trip over the set content [4]: 1 cycles checked through every stage\n\
         ok   random words survive the history round trip: 1000 random words of lengths 9 to 13\n\
         ok   the two composite routes compared: the routes pair identically on [6]: 0 of 3, [8]: 2 of 17\n\
         all 4 checks passed\n"
    );
    let (code, _, _) = run(&["verify", "--suite", "psi-order", "--max-n", "4", "--samples", "20", "--seed", "7"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_input_exits_two() {
    fails_with(&["count", "--family", "quux", "--n", "4"], 2);
    fails_with(&["count", "--family", "ec", "--multiset", "1,2^x"], 2);
    fails_with(&["count", "--family", "dumont", "--n", "4"], 2);
    fails_with(&["count", "--family", "dumont", "--multiset", "1,2"], 2);
    fails_with(&["count", "--family", "ec", "--n", "4", "--multiset", "1,2"], 2);
    fails_with(&["map", "--bijection", "twist", "--input", "(1,2)"], 2);
    fails_with(&["map", "--bijection", "theta", "--inverse", "--input", "21"], 2);
    fails_with(&["map", "--bijection", "rho", "--input", "(UDUD; 0,1,0,1)"], 2);
    fails_with(&["verify", "--suite", "nonsense"], 2);
}

#[test]
fn guards_exit_three_until_lifted() {
    fails_with(&["count", "--family", "ec", "--n", "20"], 3);
    fails_with(&["list", "--family", "lag-all", "--n", "10"], 3);
    fails_with(&["table", "--kind", "f-eq", "--n", "13"], 3);
    let (code, out, _) = run(&["table", "--kind", "f-eq", "--n", "13", "--unsafe-no-guard"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1 << 12);
}
