use clap::Parser;
use hamweight::cli::{run, Cli};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("hamweight").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = invoke(args);
    (code, serde_json::from_str(&out).unwrap())
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_owned()).collect()
}

#[test]
fn weights_all_methods_agree() {
    let (code, doc) = json(&["weights", "--q", "2", "--m", "3", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["params"]["n"], 7);
    assert_eq!(doc["params"]["k"], 4);
    assert_eq!(doc["field"]["modulus"], serde_json::json!([1, 0, 1, 1]));
    let full: Vec<&Value> = doc["results"].as_array().unwrap().iter().filter(|r| r.get("total").is_some()).collect();
    assert_eq!(full.len(), 4);
    for r in full {
        assert_eq!(strings(&r["counts"]), ["1", "0", "0", "7", "7", "0", "0", "1"]);
    }
}

#[test]
fn weights_refuses_non_coprime_parameters() {
    let (code, doc) = json(&["weights", "--q", "3", "--m", "2", "--method", "recursion"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "gcd-precondition");
    assert_eq!(doc["pass"], false);
}

#[test]
fn weights_override_marks_output_unverified() {
    let (code, doc) =
        json(&["weights", "--q", "3", "--m", "2", "--method", "recursion", "--unsafe-ignore-gcd"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["unverified"], true);
    assert_eq!(strings(&doc["results"][0]["counts"]), ["1", "0", "0", "8", "0"]);
}

#[test]
fn weights_csv_large() {
    let (code, out, _) = invoke(&["weights", "--q", "2", "--m", "10", "--method", "recursion", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("weight,count"));
    let rows: Vec<(usize, num_bigint::BigUint)> = lines
        .map(|l| {
            let (w, c) = l.split_once(',').unwrap();
            (w.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 1024);
    let total: num_bigint::BigUint = rows.iter().map(|(_, c)| c).sum();
    assert_eq!(total, num_bigint::BigUint::from(1u8) << 1013usize);
}

#[test]
fn binary_method_needs_q_two() {
    let (code, doc) = json(&["weights", "--q", "3", "--m", "3", "--method", "binary"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "invalid-parameter");
}

#[test]
fn direct_enumeration_refused_past_guard() {
    let (code, doc) = json(&["weights", "--q", "5", "--m", "3", "--method", "direct"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "work-bound");
    let (code, doc) = json(&["weights", "--q", "5", "--m", "3", "--method", "all"]);
    assert_eq!(code, 3);
    assert_eq!(doc["pass"], true);
    assert!(doc["results"].as_array().unwrap().iter().any(|r| r.get("skipped").is_some()));
}

#[test]
fn verify_moisio_suite() {
    let (code, doc) = json(&["verify", "--q", "3", "--m", "3", "--suite", "moisio"]);
    assert_eq!(code, 0);
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 26);
    assert!(results.iter().all(|r| r["pass"] == true));
    assert_eq!(results[0]["identity"], "moisio-identity");
}

#[test]
fn verify_pless_suite() {
    let (code, doc) = json(&["verify", "--q", "2", "--m", "3", "--suite", "pless", "--hmax", "6"]);
    assert_eq!(code, 0);
    let hs: Vec<u64> = doc["results"].as_array().unwrap().iter().map(|r| r["parameters"]["h"].as_u64().unwrap()).collect();
    assert_eq!(hs, (0..=6).collect::<Vec<_>>());
}

#[test]
fn verify_all_suites() {
    let (code, doc) = json(&["verify", "--q", "4", "--m", "2", "--suite", "all"]);
    assert_eq!(code, 0);
    assert_eq!(doc["pass"], true);
    let (code, doc) = json(&["verify", "--q", "3", "--m", "2"]);
    assert_eq!(code, 0, "{doc:#}");
}

#[test]
fn verify_work_bound_skips() {
    let (code, doc) = json(&["verify", "--q", "5", "--m", "3", "--suite", "kloosterman", "--work-bound", "10"]);
    assert_eq!(code, 3);
    assert_eq!(doc["pass"], false);
    assert!(doc["results"].as_array().unwrap().iter().all(|r| r.get("skipped").is_some()));
}

#[test]
fn verify_suite_needing_coprime_parameters() {
    let (code, doc) = json(&["verify", "--q", "3", "--m", "2", "--suite", "pless"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "gcd-precondition");
}

#[test]
fn sums_examples() {
    let (code, doc) = json(&["sums", "--q", "2", "--m", "3", "--s", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"][0]["integer"], "-1");
    let (code, doc) = json(&["sums", "--q", "3", "--s", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["results"].as_array().unwrap().len(), 2);
    assert_eq!(doc["total"], "1");
    let (code, doc) = json(&["sums", "--q", "5", "--s", "1"]);
    assert_eq!(code, 0);
    let r = doc["results"].as_array().unwrap();
    assert_eq!(r.len(), 4);
    assert!(r.iter().all(|x| x["coords"].as_array().unwrap().len() == 4));
    assert!(r.iter().any(|x| x["integer"].is_null()));
}

#[test]
fn code_info_examples() {
    for (q, m, n, k, cyclic, zero) in [(2, 3, 7, 4, true, Some(1)), (3, 3, 13, 10, true, Some(2)), (3, 2, 4, 2, false, None)] {
        let (code, doc) = json(&["code-info", "--q", &q.to_string(), "--m", &m.to_string()]);
        assert_eq!(code, 0);
        let info = &doc["results"][0];
        assert_eq!((info["n"].as_u64(), info["k"].as_u64(), info["d"].as_u64()), (Some(n), Some(k), Some(3)));
        assert_eq!(info["cyclic"], cyclic);
        assert_eq!(info["defining_zero_exponent"].as_u64(), zero);
        assert_eq!(info["parity_check_columns"].as_array().unwrap().len() as u64, n);
    }
    let (_, out, _) = invoke(&["code-info", "--q", "2", "--m", "3", "--format", "text"]);
    assert!(out.starts_with("[7,4,3] over F_2, cyclic, defining zero γ^1"));
}

#[test]
fn seed_set_runs_the_matrix() {
    let (code, doc) = json(&["weights", "--seed-set", "--method", "all", "--enumeration-guard", "1048576"]);
    let docs = doc.as_array().unwrap();
    assert_eq!(docs.len(), 8);
    assert!(docs.iter().all(|d| d["pass"] == true));
    // direct enumeration of the larger codes is over the guard
    assert_eq!(code, 3);
}

#[test]
fn output_is_deterministic() {
    let a = invoke(&["verify", "--q", "2", "--m", "4"]);
    let b = invoke(&["verify", "--q", "2", "--m", "4"]);
    assert_eq!(a, b);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("hamweight-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = invoke(&["weights", "--q", "2", "--m", "2", "--output", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(strings(&doc["results"][0]["counts"]), ["1", "0", "0", "1"]);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn invalid_parameters() {
    let (code, doc) = json(&["weights", "--q", "6", "--m", "2"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "not-prime-power");
    let (code, _) = json(&["code-info", "--q", "2", "--m", "1"]);
    assert_eq!(code, 2);
    assert!(Cli::try_parse_from(["hamweight", "weights", "--q", "2"]).is_err());
    assert!(Cli::try_parse_from(["hamweight", "verify", "--q", "2", "--m", "3", "--suite", "nope"]).is_err());
}

#[test]
fn text_errors_go_to_stderr() {
    let (code, out, err) = invoke(&["weights", "--q", "3", "--m", "2", "--format", "text"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error [gcd-precondition]"));
}
