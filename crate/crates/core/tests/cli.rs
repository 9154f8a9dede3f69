use std::process::{Command, Output};

fn vknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vknot")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = vknot(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn fpoly_of_virtual_hopf() {
    assert_eq!(stdout(&["fpoly", "--code", "A+o | A-u"]), "-A^-2 - A^-4");
    assert_eq!(stdout(&["bracket", "--name", "vhopf_plus"]), "A + A^-1");
}

#[test]
fn dn_has_no_filamentation() {
    assert_eq!(stdout(&["filament", "--family", "Dn", "--n", "3"]), "none");
}

#[test]
fn witness_with_pair_numbers() {
    assert_eq!(stdout(&["filament", "--code", "A+ B+ C- A- C+ B-"]), "{(A,A), (B,C)}\n(A,A): 0\n(B,C): 0");
}

#[test]
fn galex_json_is_the_closed_form() {
    let out = stdout(&["galex", "--family", "Kn", "--n", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let want = serde_json::to_value(vknot::alexander::g_closed_form_kn(2).unwrap()).unwrap();
    assert_eq!(v["result"], want);
    assert_eq!(v["invariant"], "galex");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["reduce", "--family", "Kn", "--n", "2", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(vknot(&["fpoly", "--code", "A+o B"]).status.code(), Some(2));
    assert_eq!(vknot(&["filament", "--code", "A+ | A-"]).status.code(), Some(1));
    assert_eq!(vknot(&["fpoly", "--code", "A+ A-"]).status.code(), Some(1));
    assert_eq!(vknot(&["corpus", "--name", "nope"]).status.code(), Some(1));
    assert_eq!(vknot(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn family_and_corpus() {
    assert_eq!(stdout(&["family", "Kn", "--n", "1"]), "X-u Y1-o X+o Y1+u");
    assert_eq!(stdout(&["family", "--family", "Dn", "--n", "2"]), "X- Y2- Y1- X+ Y1+ Y2+");
    assert_eq!(stdout(&["corpus", "--name", "virtual_trefoil"]), "A+o B+o A-u B-u");
}

#[test]
fn reduce_finds_a_path() {
    let out = stdout(&["reduce", "--family", "Kn", "--n", "1"]);
    assert!(out.starts_with("status: reduced\nresult: \"\""), "{out}");
}

#[test]
fn parse_and_canon_agree() {
    let canon = stdout(&["canon", "--code", "B-o A+u | A-o B+u"]);
    let parsed = stdout(&["parse", "--code", "B-o A+u | A-o B+u"]);
    assert_eq!(parsed.lines().nth(1).unwrap(), format!("canonical: {canon}"));
}

#[test]
fn reads_code_from_file() {
    let dir = std::env::temp_dir().join(format!("vknot-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("code.txt");
    std::fs::write(&path, "A+o B-u C+o A-u B+o C-u\n").unwrap();
    assert_eq!(stdout(&["jones", "--file", path.to_str().unwrap()]), "-t^4 + t^3 + t");
    std::fs::remove_dir_all(dir).unwrap();
}
