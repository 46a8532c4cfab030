use propalg::cli::run;

fn cli(args: &[&str]) -> propalg::cli::Outcome {
    let mut full = vec!["propalg"];
    full.extend_from_slice(args);
    run(full, &mut std::io::empty())
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn enumerate() {
    assert_eq!(cli(&["enumerate", "--n", "4"]).stdout.lines().count(), 18);
    assert_eq!(cli(&["enumerate", "--n", "1"]).stdout, "@\n");
    let bad = cli(&["enumerate", "--n", "9"]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("error"));
    let json = cli(&["enumerate", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["schema"], "propalg.report/1");
    assert_eq!(v["data"]["count"], 7);
}

#[test]
fn member() {
    assert_eq!(cli(&["member", "--property", "split", "Cr"]).stdout.trim(), "Cr false");
    assert_eq!(cli(&["member", "--property", "O", "B?"]).stdout.trim(), "B? true");
    assert_eq!(cli(&["member", "--property", "no_such", "B?"]).code, 2);
    let piped = run(["propalg", "member", "--property", "bipartite"], &mut "Bw\nCr\n".as_bytes());
    assert_eq!(piped.stdout, "Bw false\nCr true\n");
}

#[test]
fn partition() {
    let out = cli(&["partition", "--property", "O", "--property", "K", "Cr"]);
    assert_eq!(out.code, 1);
    let out = cli(&["partition", "--property", "O", "--property", "K", "--all", "--essential", "C^"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["data"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_suites() {
    let t2 = cli(&["verify", "theorem2", "--r", "2", "--s", "2", "--n", "7"]);
    assert_eq!(t2.code, 0, "{}", t2.stdout);
    let p10 = cli(&["verify", "prop10", "--forbidden", &data("cycles.g6")]);
    assert_eq!(p10.code, 0);
    let v: serde_json::Value = serde_json::from_str(&p10.stdout).unwrap();
    assert_eq!(v["params"]["hereditary"], true);
    let t7 = cli(&["verify", "theorem7", "--property", "bipartite", "--n", "6"]);
    assert_eq!(t7.code, 0);
    let v: serde_json::Value = serde_json::from_str(&t7.stdout).unwrap();
    assert_eq!(v["params"]["factors"], 2);
    for suite in ["prop1", "lemma5", "lemma6", "prop8", "prop9", "roundtrips"] {
        assert_eq!(cli(&["verify", suite]).code, 0, "{suite}");
    }
    let wrong = cli(&["verify", "prop9", "--forbidden", &data("cycles.g6")]);
    assert_eq!(wrong.code, 2);
}

#[test]
fn reports_are_deterministic() {
    let a = cli(&["verify", "lemma6"]);
    let b = cli(&["verify", "lemma6"]);
    assert_eq!(a, b);
    let text = cli(&["verify", "prop8", "--format", "text"]);
    assert!(text.stdout.starts_with("verify prop8: PASS"));
}

#[test]
fn definitions_file_and_output_file() {
    let dir = std::env::temp_dir().join(format!("propalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let defs = dir.join("defs.txt");
    std::fs::write(&defs, "two_colour = product(O, O)\n").unwrap();
    let out = dir.join("out.txt");
    let r = cli(&["member", "--defs", defs.to_str().unwrap(), "--property", "two_colour", "--out", out.to_str().unwrap(), "Dhc"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "Dhc false\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
