use clausen::numerics::parse_decimal;
use clausen::PrecisionContext;
use clausen_cli::{run, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("clausen").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = cli(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.schema.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(s: &jsonschema::JSONSchema, v: &Value) {
    if let Err(errors) = s.validate(v) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}\n{v}");
    }
}

const GOLDEN: &[&str] = &[
    "L7(2)",
    "Cl2(pi/2)",
    "Cl2(pi/3)",
    "D((1+i*sqrt(7))/2)",
    "4/(7*sqrt(7))*(3*Cl2(2*atan(sqrt(7)))-3*Cl2(4*atan(sqrt(7)))+Cl2(6*atan(sqrt(7))))",
    "hurwitz(2, 1/3)",
    "Li2(-4/5)",
    "zeta(3)",
    "gamma(1/3)",
];

#[test]
fn every_output_validates_against_schema() {
    let s = schema();
    for args in [
        vec!["eval", "Cl2(pi/3)"],
        vec!["eval", "Li2(2)"],
        vec!["--digits", "30", "pslq", "ln(2)", "ln(3)", "ln(6)"],
        vec!["--digits", "30", "pslq", "pi", "exp(1)", "--max-coeff", "20"],
        vec!["scan-angles", "--kmax", "13", "--jmax", "3"],
        vec!["--digits", "30", "integrate", "i7"],
        vec!["--digits", "30", "integrate", "I", "3"],
        vec!["--digits", "30", "integrate", "panel", "5"],
        vec!["--digits", "30", "integrate", "c2"],
        vec!["--digits", "30", "integrate", "eq45"],
        vec!["--digits", "30", "integrate", "a6", "pi/2"],
        vec!["--digits", "30", "verify", "--filter", "group-a"],
    ] {
        assert_valid(&s, &json(&args));
    }
}

#[test]
fn verify_conjectures_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let (code, out, _) = cli(&["verify", "--filter", "conjecture", "--json", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid(&schema(), &v);
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 5);
    for item in items {
        assert_eq!(item["status"], "conjectural-numeric");
        assert_eq!(item["passed"], true);
    }
}

#[test]
fn text_and_json_agree() {
    for e in GOLDEN {
        let (code, text, _) = cli(&["eval", e]);
        assert_eq!(code, EXIT_OK);
        let v = json(&["eval", e]);
        assert_eq!(text.trim(), v["re"].as_str().unwrap(), "{e}");
        assert_eq!(v["im"], "0");
    }
    let (_, text, _) = cli(&["--digits", "30", "integrate", "i7"]);
    let v = json(&["--digits", "30", "integrate", "i7"]);
    assert_eq!(text.lines().next().unwrap(), v["value"].as_str().unwrap());
}

#[test]
fn thirty_and_sixty_digits_agree() {
    let ctx = PrecisionContext::new(80).unwrap();
    for e in GOLDEN {
        let lo = json(&["--digits", "30", "eval", e]);
        let hi = json(&["--digits", "60", "eval", e]);
        let a = parse_decimal(lo["re"].as_str().unwrap(), &ctx).unwrap();
        let b = parse_decimal(hi["re"].as_str().unwrap(), &ctx).unwrap();
        assert!((a - b).abs() < ctx.pow10(-25), "{e}");
    }
}

#[test]
fn digits_from_environment() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_clausen"))
        .args(["--format", "json", "eval", "pi"])
        .env("CLAUSEN_DIGITS", "25")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["digits"], 25);
    assert_eq!(v["re"], "3.141592653589793238462643");
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| {
        std::process::Command::new(env!("CARGO_BIN_EXE_clausen")).args(args).output().unwrap().status.code()
    };
    assert_eq!(status(&["eval", "1+"]), Some(EXIT_USAGE));
    assert_eq!(status(&["eval", "gamma(0)"]), Some(EXIT_NUMERIC));
    assert_eq!(status(&["eval", "1"]), Some(EXIT_OK));
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&[]).0, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "Cl2("]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "nope(1)"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--digits", "5", "eval", "1"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--filter", "no-such-entry"]).0, EXIT_USAGE);
    assert_eq!(cli(&["integrate", "panel", "12"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "Cl2(i)"]).0, EXIT_NUMERIC);
    assert_eq!(cli(&["eval", "zeta(1)"]).0, EXIT_NUMERIC);
    assert_eq!(cli(&["integrate", "I", "1"]).0, EXIT_NUMERIC);
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
    let (code, _, err) = cli(&["eval", "Cl2("]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("offset 4"), "{err}");
}

#[test]
fn tolerance_override() {
    // verify_tol must stay above eval_tol = 1e-25 at 30 digits
    assert_eq!(cli(&["--digits", "30", "--tol", "1e-29", "verify", "--filter", "c1-vanishes"]).0, EXIT_USAGE);
    let v = json(&["--digits", "30", "--tol", "1e-22", "verify", "--filter", "clausen-duplication"]);
    assert_eq!(v[0]["tol"], "1.00e-22");
}

#[test]
fn unary_minus_argument() {
    let (code, out, _) = cli(&["eval", "-Cl2(pi/3)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("-1.01494160640965362502"));
}
