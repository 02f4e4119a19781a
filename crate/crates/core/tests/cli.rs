use std::process::{Command, Output};

fn chromsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromsym")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn csf_of_a_path_from_a_cotree() {
    let out = chromsym(&["csf", "J(K1,E2)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 * mt[1,1,1]\n1 * mt[2,1]\n");
}

#[test]
fn csf_of_the_claw_in_e_basis_with_check() {
    let out = chromsym(&["csf", "n=4; edges=0-1,0-2,0-3", "--basis", "e", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 * e[2,1,1]\n-2 * e[2,2]\n5 * e[3,1]\n4 * e[4]\n");
}

#[test]
fn canonize_prints_plain_and_sugared_forms() {
    let out = chromsym(&["canonize", "J(U(K2,K1),U(K6,K1))"]);
    assert_eq!(
        stdout(&out),
        "J(U(K1,J(K1,K1)),U(K1,J(K1,K1,K1,K1,K1,K1)))\nJ(U(K1,K2),U(K1,K6))\n"
    );
}

#[test]
fn chrompoly_json_keeps_key_order() {
    let out = chromsym(&["--format", "json", "chrompoly", "n=3; edges=0-1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["graph", "csf_mtilde", "chromatic_poly_falling"]);
}

#[test]
fn enumerate_threshold_counts_powers_of_two() {
    let out = chromsym(&["enumerate", "--class", "threshold", "--n-max", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1 + 2 + 4 + 8 + 16);
}

#[test]
fn demos_pass_their_claims() {
    for demo in ["stanley-demo", "counterexample-demo"] {
        let out = chromsym(&[demo]);
        assert_eq!(out.status.code(), Some(0), "{demo}");
        assert!(!stdout(&out).contains("FAIL"), "{demo}");
    }
}

#[test]
fn epositive_exits_one_on_the_false_complement_claim() {
    let out = chromsym(&["epositive", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL every claw-free cograph has a triangle-free complement"), "{text}");
    assert!(!text.lines().filter(|l| l.contains("e-positive")).any(|l| l.starts_with("FAIL")));
}

#[test]
fn bad_input_exits_two() {
    let out = chromsym(&["csf", "U(K1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
