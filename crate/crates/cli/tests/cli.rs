use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;

use webflat::field::FieldSpec;
use webflat::parse::{parse_field_spec, parse_poly};
use webflat::RatFn;
use webflat_cli::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("webflat").chain(args.iter().copied()))
}

#[test]
fn flat_reports_false_for_the_diagonal_field() {
    let out = cli(&["flat", "--vf", "x^3 ; y^3-1"]);
    assert_eq!(out, Outcome { stdout: "flat: false\n".into(), stderr: String::new(), code: EXIT_OK });
}

#[test]
fn json_curvature_matches_the_known_fraction() {
    let out = cli(&["dual-curvature", "--vf", "x^3 ; y^3-1", "--format", "json"]);
    assert_eq!(out.code, EXIT_OK);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["command"], "dual-curvature");
    assert_eq!(doc["field"], Value::Null);
    assert_eq!(doc["result"]["kind"], "ratfn");
    assert_eq!(doc["result"]["chart"], "pq");
    let num = parse_poly(doc["result"]["numerator"].as_str().unwrap(), None).unwrap();
    let den = parse_poly(doc["result"]["denominator"].as_str().unwrap(), None).unwrap();
    let expected = RatFn::new(
        parse_poly("(3*p^4 + 22*p^2 - 10*q^3*p^2 - 25 + 18*q^3 + 7*q^6)*p*q^2", None).unwrap(),
        parse_poly("-3*(p^4 - 2*q^3*p^2 - 2*p^2 + q^6 + 1 - 2*q^3)^2", None).unwrap(),
    )
    .unwrap();
    assert!(RatFn::new(num, den).unwrap().cross_eq(&expected));
}

#[test]
fn text_goldens() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["legendre", "--vf", "x^3 ; y^3-1"],
            "value: x^3*p^3 + 3*x^2*p^2*q - x^3*p + 3*x*p*q^2 + q^3 - 1\nslope: x\nchart: pq\n\
             a0: p^3 - p\na1: 3*p^2*q\na2: 3*p*q^2\na3: q^3 - 1\n",
        ),
        (&["sing", "--vf", "x^3 ; y^3-1", "--at", "0,1"], "nu: 1\ntau: 1\nradial: false\nspecial: false\n"),
        (&["sing", "--vf", "x + x^2 ; y", "--at", "0,0"], "nu: 1\ntau: 2\nradial: true\nspecial: true\n"),
        (&["gauss", "--vf", "x^3 ; y^3 - z^3 ; 0", "--at", "1,2,1"], "line: 7, -1, -5\n"),
        (&["gauss", "--vf", "x^3 ; y^3 - 1", "--at", "1,2"], "line: 7, -1, -5\n"),
        (&["eta", "--eta", "0 ; 1 ; 2", "--order", "1"], "eta: true\n"),
        (&["eta", "--eta", "0 ; 1 ; x", "--order", "1"], "eta: false\n"),
        (&["tangent-cone", "--vf", "y ; x"], "value: -x^2 + y^2\n"),
        (&["curvature", "--web", "p^3 - p"], "numerator: 0\ndenominator: 1\nchart: xy\n"),
        (&["discriminant", "--web", "p^3 - p"], "value: -4\nchart: xy\n"),
        (&["dual-curvature", "--vf", "x^3 ; y^3-1", "--along", "q"], ""),
        (&["classify", "--field", "t^2=t-1", "--nu", "t"], "classified: true\nflat: true\ninflection_reduced: true\n"),
        (&["classify", "--nu", "2"], "classified: false\nflat: true\ninflection_reduced: false\n"),
    ];
    for (args, expected) in cases {
        let out = cli(args);
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        if expected.is_empty() {
            assert!(out.stdout.ends_with("chart: pq\nholomorphic: true\n"), "{}", out.stdout);
        } else {
            assert_eq!(&out.stdout, expected, "{args:?}");
        }
    }
}

#[test]
fn inflection_degree_line() {
    let out = cli(&["inflection", "--vf", "x^3 ; y^3-1"]);
    let value = out.stdout.lines().next().unwrap().strip_prefix("value: ").unwrap();
    let expect = parse_poly("3*z*x^3*(y^3 - z^3)*(y^2 - x^2)", None).unwrap();
    assert_eq!(parse_poly(value, None).unwrap(), expect);
    assert!(out.stdout.ends_with("degree: 9\n"));
}

#[test]
fn field_is_reported_in_json() {
    let out = cli(&["classify", "--field", "t^2=t-1", "--nu", "1-t", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    let field = doc["field"].as_str().unwrap();
    assert_eq!(parse_field_spec(field).unwrap(), FieldSpec::eisenstein());
    assert_eq!(doc["result"]["classified"], true);
}

#[test]
fn domain_errors_exit_with_two_and_their_name() {
    let cases: &[(&[&str], &str)] = &[
        (&["legendre", "--vf", "x ; y"], "DegreeTooLow"),
        (&["dual-curvature", "--vf", "x^4 ; x^3*y"], "DegenerateWeb"),
        (&["sing", "--vf", "x^3 ; y^3-1", "--at", "5,5"], "NotSingular"),
        (&["classify", "--nu", "1"], "DegenerateParameter"),
        (&["gauss", "--vf", "x^3 ; y^3 - z^3 ; 0", "--at", "0,1,1"], "SingularPoint"),
        (&["flat", "--vf", "0 ; 0"], "ZeroField"),
        (&["inflection", "--vf", "x^2 ; y ; 0"], "NonHomogeneous"),
        (&["dual-curvature", "--vf", "x^3 ; y^3-1", "--along", "0"], "ZeroPolynomial"),
        (&["eta", "--eta", "0 ; y ; 1", "--order", "1"], "InvariantViolated"),
        (&["curvature", "--web", "p^2 + x"], "DegreeTooLow"),
    ];
    for (args, name) in cases {
        let out = cli(args);
        assert_eq!(out.code, EXIT_DOMAIN, "{args:?}");
        assert!(out.stderr.starts_with(&format!("{name}:")), "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn usage_and_parse_errors_exit_with_one() {
    let cases: &[(&[&str], &str)] = &[
        (&["flat", "--vf", "x^"], "ParseError: parse error at offset 2"),
        (&["flat", "--vf", "t*x ; y"], "ThetaWithoutField"),
        (&["flat", "--vf", "w ; y"], "UnknownVariable"),
        (&["flat"], "UsageError"),
        (&["flat", "--vf", "x ; y ; z ; x"], "UsageError"),
        (&["bogus"], "error:"),
        (&["flat", "--vf", "x^3 ; y^3", "--field", "t^2=t+2"], "ParseError"),
        (&[], "error:"),
    ];
    for (args, prefix) in cases {
        let out = cli(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stderr.starts_with(prefix), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let args = ["dual-curvature", "--vf", "x^3 + y ; y^3 - x - 1", "--format", "json"];
    let first = cli(&args);
    for _ in 0..3 {
        assert_eq!(cli(&args), first);
    }
}

#[test]
fn batch_keeps_input_order() {
    let lines = [
        "flat --vf \"x^3 ; y^3-1\"",
        "# comment",
        "",
        "sing --vf 'x^3 ; y^3-1' --at 0,1",
        "legendre --vf \"x ; y\"",
        "eta --eta \"0 ; 1 ; 2\" --order 1",
    ];
    let dir = std::env::temp_dir().join(format!("webflat-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("jobs.txt");
    std::fs::write(&path, lines.join("\n")).unwrap();
    let out = cli(&["--batch", path.to_str().unwrap()]);
    let expect: String = [
        cli(&["flat", "--vf", "x^3 ; y^3-1"]).stdout,
        cli(&["sing", "--vf", "x^3 ; y^3-1", "--at", "0,1"]).stdout,
        cli(&["eta", "--eta", "0 ; 1 ; 2", "--order", "1"]).stdout,
    ]
    .concat();
    assert_eq!(out.stdout, expect);
    assert!(out.stderr.starts_with("DegreeTooLow"));
    assert_eq!(out.code, EXIT_DOMAIN);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_sets_the_process_exit_code() {
    let bin = env!("CARGO_BIN_EXE_webflat");
    let ok = Command::new(bin).args(["flat", "--vf", "x^3 ; y^3-1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "flat: false\n");
    let domain = Command::new(bin).args(["legendre", "--vf", "x ; y"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(2));
    assert!(String::from_utf8(domain.stderr).unwrap().contains("DegreeTooLow"));
    let usage = Command::new(bin).args(["flat", "--vf", "x^"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
}

/// Random expression text following the grammar.
fn expr_text() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["x", "y", "z", "p", "q"]).prop_map(String::from),
        (0u32..20, 1u32..5).prop_map(|(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") }),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner.clone(), 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.prop_map(|a| format!("-({a})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rendering_reparses_to_the_same_polynomial(src in expr_text()) {
        let p = parse_poly(&src, None).unwrap();
        let rendered = p.to_string();
        prop_assert_eq!(parse_poly(&rendered, None).unwrap(), p.clone());
        prop_assert_eq!(parse_poly(&rendered, None).unwrap().to_string(), rendered);
    }

    #[test]
    fn rendering_over_the_extension(src in expr_text(), a in -5i32..5, b in -5i32..5) {
        let k = FieldSpec::eisenstein();
        let src = format!("({src})*({a} + ({b})*t)");
        let p = parse_poly(&src, Some(&k)).unwrap();
        prop_assert_eq!(parse_poly(&p.to_string(), Some(&k)).unwrap(), p);
    }
}
