use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcinv")).args(args).output().expect("spawn fcinv")
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn graph_show() {
    let out = ok(&["graph", "show", "--type", "B", "--rank", "3"]);
    assert_eq!(out.trim_end(), "B_3\ngenerators: s_1 s_2 s_3\nedge s_1 s_2 m=3\nedge s_2 s_3 m=4");
    let v: serde_json::Value = serde_json::from_str(&ok(&["graph", "show", "--type", "affA", "--rank", "4", "--format", "json"])).unwrap();
    assert!(v.is_object());
}

#[test]
fn enumerate_formats_agree() {
    // FC elements of A_3 are counted by Catalan(4) = 14
    let base = ["enumerate", "--type", "A", "--rank", "4", "--max-length", "6"];
    let text = ok(&base);
    assert!(text.contains("total 14"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&ok(&[&base[..], &["--format", "json"]].concat())).unwrap();
    let counts: Vec<u64> = json["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 3, 5, 4, 1, 0, 0]);
    let csv = ok(&[&base[..], &["--format", "csv"]].concat());
    let from_csv: Vec<u64> = csv
        .lines()
        .filter_map(|l| l.split_once(','))
        .filter_map(|(_, c)| c.parse().ok())
        .collect();
    assert_eq!(from_csv, counts);
}

#[test]
fn enumerate_involutions_and_stream() {
    let inv = ok(&["enumerate", "--type", "A", "--rank", "4", "--max-length", "6", "--involutions"]);
    assert!(inv.contains("total 6"), "{inv}");
    let words = ok(&["enumerate", "--type", "A", "--rank", "3", "--max-length", "3", "--stream"]);
    assert_eq!(words.lines().collect::<Vec<_>>(), ["e", "s_1", "s_2", "s_1 s_2", "s_2 s_1"]);
}

#[test]
fn genfunc_subcommands() {
    assert_eq!(ok(&["genfunc", "maj", "--type", "A", "--rank", "4"]).trim(), "1 + q + 2*q^2 + q^3 + q^4");
    assert_eq!(ok(&["genfunc", "card", "--type", "A", "--rank", "4"]).trim(), "6");
    let csv = ok(&["genfunc", "length", "--type", "affA", "--rank", "3", "--max-length", "4", "--format", "csv"]);
    assert_eq!(csv.split_whitespace().collect::<Vec<_>>(), ["0,1", "1,3", "2,0", "3,0", "4,0"]);
    let j: serde_json::Value =
        serde_json::from_str(&ok(&["genfunc", "maj", "--type", "B", "--rank", "3", "--descents", "1", "--format", "json"])).unwrap();
    assert_eq!(j["var"], "q");
}

#[test]
fn series_csv_rows() {
    let csv = ok(&["series", "--id", "M", "--xmax", "4", "--tmax", "3", "--format", "csv"]);
    let rows: Vec<(usize, usize, String)> = csv
        .lines()
        .filter_map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            Some((f.first()?.parse().ok()?, f.get(1)?.parse().ok()?, f.get(2)?.to_string()))
        })
        .collect();
    assert!(rows.contains(&(0, 0, "1".into())), "{csv}");
    assert!(rows.iter().all(|(x, t, _)| *x <= 4 && *t <= 3));
}

#[test]
fn walks_family() {
    let text = ok(&["walks", "family", "--n", "4", "--tmax", "6"]);
    let csv = ok(&["walks", "family", "--n", "4", "--tmax", "6", "--format", "csv"]);
    assert_eq!(text.trim(), "1 + 4*t + 3*t^2 + t^3 + 3*t^4 + 2*t^6");
    assert_eq!(csv.split_whitespace().count(), 7);
}

#[test]
fn verify_and_cells() {
    let out = ok(&["verify", "--type", "B", "--rank", "2"]);
    assert!(out.trim_end().ends_with("all match"), "{out}");
    let bad = run(&["verify", "--type", "affC", "--rank", "2", "--max-length", "10"]);
    assert_eq!(bad.status.code(), Some(1));
    let cells = ok(&["cells", "--rank", "3", "--max-length", "4"]);
    assert!(cells.contains("4 cells") && cells.contains("audit: pass"), "{cells}");
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["graph", "show", "--type", "E", "--rank", "3"][..],
        &["graph", "show", "--type", "A", "--rank", "1"],
        &["series", "--id", "nope", "--xmax", "1", "--tmax", "1"],
        &["enumerate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["enumerate", "--type", "affB", "--rank", "3", "--max-length", "30", "--format", "json"];
    assert_eq!(ok(&args), ok(&[&["--threads", "1"][..], &args].concat()));
}
