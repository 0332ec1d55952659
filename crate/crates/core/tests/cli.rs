use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn finspace(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_finspace"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("finspace-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn pi1_of_the_circle() {
    let circle = data("circle.poset");
    let (code, out, _) = finspace(&[
        "pi1",
        circle.to_str().unwrap(),
        "--basepoint",
        "a",
        "--tree",
        "a<c,b<c,b<d",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("<g[a<d] | >\n"), "{out}");
    assert!(out.contains("H1 = Z\n"));
    // The automatic tree is the lexicographic one, leaving b<d as generator.
    let (code, out, _) = finspace(&[
        "pi1",
        circle.to_str().unwrap(),
        "--basepoint",
        "a",
        "--tree",
        "auto",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.contains("<g[b<d] | >\n") && out.contains("H1 = Z\n"),
        "{out}"
    );
}

#[test]
fn cover_verify_and_round_trip() {
    let circle = data("circle.poset");
    let total = tmp("total.poset");
    let dot = tmp("cover.dot");
    let args = [
        "--tree",
        "a<c,b<c,b<d",
        "--group",
        "Z6",
        "--hom",
        "g[a<d]->2",
    ];
    let mut cmd = vec!["cover", circle.to_str().unwrap()];
    cmd.extend(args);
    cmd.extend([
        "--verify",
        "--out",
        total.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    let (code, out, err) = finspace(&cmd);
    assert_eq!(code, 0, "{err}");
    for line in ["points: 24", "components: 2", "covering conditions: PASS"] {
        assert!(out.lines().any(|l| l == line), "missing `{line}` in\n{out}");
    }
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(dot_text.matches(" [label=").count(), 24);
    assert_eq!(dot_text.matches(" -> ").count(), 24);

    let mut cmd = vec!["verify", circle.to_str().unwrap(), total.to_str().unwrap()];
    cmd.extend(args);
    let (code, out, _) = finspace(&cmd);
    assert_eq!(code, 0);
    assert!(out.contains("covering conditions: PASS"));

    // Corrupt the total space with an extra relation between sheets.
    let text = std::fs::read_to_string(&total).unwrap() + "(a,0) < (c,1)\n";
    let bad = tmp("bad.poset");
    std::fs::write(&bad, text).unwrap();
    let mut cmd = vec!["verify", circle.to_str().unwrap(), bad.to_str().unwrap()];
    cmd.extend(args);
    let (code, out, _) = finspace(&cmd);
    assert_eq!(code, 1);
    assert!(
        out.contains("condition (2)") && out.contains("FAIL"),
        "{out}"
    );
}

#[test]
fn homology_of_a_chain() {
    let (code, out, _) = finspace(&["homology", data("chain3.poset").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("H0 = Z\nH1 = 0\n"), "{out}");
    let (_, json, _) = finspace(&[
        "homology",
        data("circle.poset").to_str().unwrap(),
        "--json",
        "--max-dim",
        "1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["homology"][1]["betti"], 1);
}

#[test]
fn exit_codes() {
    let circle = data("circle.poset");
    let c = circle.to_str().unwrap();
    // Relator violations and unknown generators are domain errors.
    let (code, _, err) = finspace(&["cover", c, "--group", "Z6", "--hom", "g[a<c]->1"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a generator"), "{err}");
    let (code, _, _) = finspace(&["pi1", c, "--tree", "a<c,a<d"]);
    assert_eq!(code, 1);
    let bad = tmp("broken.poset");
    std::fs::write(&bad, "points: a b\na < z\n").unwrap();
    let (code, _, err) = finspace(&["info", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(finspace(&["cover", c, "--group", "Q8"]).0, 2);
    assert_eq!(finspace(&["nonsense"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let c = data("circle.poset");
    let args = [
        "cover",
        c.to_str().unwrap(),
        "--group",
        "table:",
        "--hom",
        "g[b<d]->r",
    ];
    let table = format!("table:{}", data("s3.table").display());
    let args: Vec<&str> = args
        .iter()
        .map(|a| if *a == "table:" { table.as_str() } else { a })
        .collect();
    let first = finspace(&args);
    assert_eq!(first.0, 0, "{}", first.2);
    assert!(first.1.contains("components: 2"), "{}", first.1);
    assert_eq!(first, finspace(&args));
}

#[test]
fn forest_seeds_the_tree_and_quotient_merges_classes() {
    let (_, out, _) = finspace(&[
        "tree",
        data("circle.poset").to_str().unwrap(),
        "--forest",
        "b<d",
    ]);
    assert_eq!(out, "tree: a<c, a<d, b<d\n");
    let f = tmp("nont0.poset");
    std::fs::write(&f, "points: a b c\na < b\nb < a\nb < c\n").unwrap();
    let (code, out, _) = finspace(&["quotient", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "# a ~ b\npoints: a c\na < c\n");
    let (_, dot, _) = finspace(&["dot", f.to_str().unwrap()]);
    assert!(dot.contains("label=\"a ~ b\""));
}
