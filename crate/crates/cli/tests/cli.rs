use std::path::PathBuf;
use std::process::{Command, Output};

fn coxcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxcat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = coxcat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn golden_outputs() {
    let cases: [(&str, &[&str]); 9] = [
        ("chi_cat_c_2.json", &["chi", "--family", "cat-c", "--n", "2", "--format", "json"]),
        ("verify_cat_d_2.json", &["verify", "--family", "cat-d", "--n", "2"]),
        ("verify_raney_2_2.json", &["verify", "--family", "raney", "--n", "2", "--m", "2"]),
        ("stats_cat_c_2.json", &["stats", "--family", "cat-c", "--n", "2", "--format", "json"]),
        ("sketches_type_c_2.json", &["sketches", "--family", "type-c", "--n", "2", "--format", "json"]),
        ("classes_type_d_2.json", &["classes", "--family", "type-d", "--n", "2", "--format", "json"]),
        ("regions_boolean_2.json", &["regions", "--family", "boolean", "--n", "2", "--format", "json"]),
        ("bounded_cat_c_1.json", &["bounded", "--family", "cat-c", "--n", "1", "--format", "json"]),
        ("canonical_cat_d_2.json", &["canonical", "--family", "cat-d", "--sketch", "abab;1 -2", "--format", "json"]),
    ];
    for (file, args) in cases {
        assert_eq!(stdout(args), golden(file), "{file}");
    }
}

#[test]
fn braid_chi_text() {
    assert_eq!(stdout(&["chi", "--family", "braid", "--n", "3", "--format", "text"]), "t^3 - 3t^2 + 2t\n");
}

#[test]
fn verify_reports_four_routes() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["verify", "--family", "cat-d", "--n", "2"])).unwrap();
    for key in ["regions", "formula", "chi_minus1", "classes"] {
        assert_eq!(v[key], 16, "{key}");
    }
    assert_eq!(v["pass"], true);
}

#[test]
fn usage_errors_exit_two() {
    let bad: [&[&str]; 6] = [
        &["chi", "--family", "nope", "--n", "2"],
        &["chi", "--family", "braid"],
        &["chi", "--family", "braid", "--n", "5"],
        &["regions", "--family", "braid", "--n", "6"],
        &["classes", "--family", "cat-c", "--n", "2"],
        &["verify", "--family", "raney", "--n", "2"],
    ];
    for args in bad {
        assert_eq!(coxcat(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn max_n_lifts_the_limit() {
    let out = stdout(&["chi", "--family", "braid", "--n", "5", "--max-n", "5"]);
    assert_eq!(out, "t^5 - 10t^4 + 35t^3 - 50t^2 + 24t\n");
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("coxcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chi.txt");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["chi", "--family", "boolean", "--n", "2", "--out", p]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "t^2 - 2t + 1\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn stats_text() {
    assert_eq!(stdout(&["stats", "--family", "braid", "--n", "3"]), "0 0\n1 2\n2 3\n3 1\n");
}

#[test]
fn threads_env_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_coxcat"))
        .args(["regions", "--family", "cat-c", "--n", "2"])
        .env("COXCAT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "48\n");
}

fn parse_svg(s: &str) -> roxmltree::Document<'_> {
    roxmltree::Document::parse(s).expect("well-formed svg")
}

#[test]
fn arc_svg_structure() {
    let svg = stdout(&["render", "--kind", "arc", "--sketch", "abaaba;-3 1 -2", "--format", "svg"]);
    let doc = parse_svg(&svg);
    let arcs: Vec<_> = doc.descendants().filter(|n| n.attribute("class") == Some("arc")).collect();
    // six chains of two letters each
    assert_eq!(arcs.len(), 6);
    let circles = doc.descendants().filter(|n| n.has_tag_name("circle")).count();
    assert_eq!(circles, 12);
    let center = doc.descendants().find(|n| n.attribute("class") == Some("center")).unwrap();
    assert_eq!(center.attribute("stroke"), Some("blue"));
    for a in arcs {
        let d: Vec<&str> = a.attribute("d").unwrap().split_whitespace().collect();
        // M x y A r r 0 0 1 x y: start left of end, sweep over the top
        let (x1, x2): (f64, f64) = (d[1].parse().unwrap(), d[9].parse().unwrap());
        assert!(x1 < x2);
        assert_eq!(d[2], d[10]);
        assert_eq!(d[8], "1");
    }
}

#[test]
fn pointed_arc_svg_labels() {
    let svg = stdout(&["render", "--kind", "arc", "--sketch", "aaab*ab;2 -1"]);
    let doc = parse_svg(&svg);
    let labels: Vec<&str> = doc.descendants().filter(|n| n.has_tag_name("text")).filter_map(|n| n.text()).collect();
    assert_eq!(labels, ["-3/2", "2", "-1", "-1/2", "1", "2", "-2", "-1", "1/2", "1", "-2", "3/2"]);
}

#[test]
fn path_svg_structure() {
    let svg = stdout(&["render", "--kind", "path", "--sketch", "aaab*ab;2 -1"]);
    let doc = parse_svg(&svg);
    let steps: Vec<_> = doc.descendants().filter(|n| n.attribute("class") == Some("step")).collect();
    assert_eq!(steps.len(), 6);
    assert_eq!(steps.iter().filter(|n| n.attribute("stroke") == Some("red")).count(), 1);
}

#[test]
fn text_renderings() {
    let arc = stdout(&["render", "--kind", "arc", "--sketch", "abaaba;-3 1 -2", "--format", "text"]);
    assert_eq!(arc.lines().nth(1), Some("-3 -3 1 -2 1 2 -2 -1 2 -1 3 3"));
    let path = stdout(&["render", "--kind", "path", "--sketch", "abaaba;-3 1 -2", "--format", "text"]);
    assert_eq!(path, "UDUUDU\nlabels: -3 +1 -2\n");
}

#[test]
fn seed_check_passes() {
    let out = stdout(&["--seed-check"]);
    assert!(out.lines().count() > 30);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn sketch_may_start_with_a_minus() {
    let out = stdout(&["canonical", "--family", "fubini", "--sketch", "-3 -6 -2 +1 +4 -5 | +5 -4 -1 +2 +6 +3"]);
    assert_eq!(out, "-6 -3 -2 +4 +1 -5 | +5 -1 -4 +2 +3 +6\n");
}
