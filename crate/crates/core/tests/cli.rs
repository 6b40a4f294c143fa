use std::process::Command;

use treecat::{Category, OrderEmbedding};

fn treecat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_treecat")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn enumerate_lists_morphisms() {
    let (code, out, _) = treecat(&["enumerate", "--cat", "pt", "--from", "()", "--to", "()()"]);
    assert_eq!(code, 0);
    assert_eq!(out, "() -> ()() : [0,2]\n() -> ()() : [0,1]\n");
    let (_, out, _) = treecat(&["enumerate", "--cat", "fpt", "--from", "()", "--to", "(())", "--count-only"]);
    assert_eq!(out, "3\n");
}

#[test]
fn json_output_roundtrips_to_text() {
    let args = ["enumerate", "--cat", "pt", "--from", "()", "--to", "(()())"];
    let (_, text, _) = treecat(&args);
    let mut json_args = args.to_vec();
    json_args.push("--json");
    let (code, json, _) = treecat(&json_args);
    assert_eq!(code, 0);
    let items: Vec<String> = serde_json::from_str(&json).unwrap();
    let rebuilt: String = items.iter().map(|s| format!("{s}\n")).collect();
    assert_eq!(rebuilt, text);
    for item in items {
        OrderEmbedding::parse(&item, Category::PT).unwrap();
    }
}

#[test]
fn encode_decode_compare() {
    let (code, word, _) = treecat(&["encode", "--morphism", "() -> ()() : [0,1]"]);
    assert_eq!((code, word.as_str()), (0, "(0 )0 ( )\n"));
    let (code, f, _) = treecat(&["decode", "--word", "( ) (0 )0"]);
    assert_eq!((code, f.as_str()), (0, "() -> ()() : [0,2]\n"));
    let (_, cmp, _) = treecat(&["compare", "--w1", "(0 )0 ( )", "--w2", "( ) (0 )0"]);
    assert_eq!(cmp, "GT\n");
    let (code, _, err) = treecat(&["decode", "--word", "(0 )1"]);
    assert_eq!(code, 2);
    assert!(err.contains("token 1"), "{err}");
}

#[test]
fn divides_prints_witness() {
    let (code, out, _) = treecat(&["divides", "--f", " -> () : [0]", "--g", " -> (()) : [0]"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("WITNESS () -> (()) : [0,"), "{out}");
}

#[test]
fn structure_checks() {
    let (code, out, _) = treecat(&["planar-reps", "--tree", "(())()"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    let (code, out, _) = treecat(&["propf", "--u", "()()", "--v", "(()())"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(1), Some("()() | (()()) | 2 | 1 1 | true"));
    let (code, out, _) = treecat(&["pushout-check", "--tree", "(())", "--vertex", "1", "--probe", "(())"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("OK lhs=1 rhs=1"));
    let (code, _, _) = treecat(&["pushout-check", "--tree", "(())", "--vertex", "7", "--probe", "(())"]);
    assert_eq!(code, 2);
}

#[test]
fn lab_and_groebner() {
    let (code, out, _) = treecat(&["lab", "good-pairs", "--base", "()", "--max-size", "5", "--seed", "3", "--len", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("SEQ ")).count(), 6);
    assert!(out.lines().any(|l| l.starts_with("GOOD ") || l == "BAD"));
    assert!(out.lines().last().unwrap().starts_with("ANTICHAIN "));

    let (code, out, _) = treecat(&["groebner", "demo", "--base", "", "--cap", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "GEN  ->  : [0]\nSTABLE@1\n");
}

#[test]
fn paper_example_and_usage() {
    let (code, out, _) = treecat(&["paper-example"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "(())() -> ((((()()))())((()()()))) : [0,2,4,8]\n\
         (0 (0 (1 (1 ( ) ( ) )1 )1 ( ) )0 (0 ( ( ) ( ) ( ) ) )0 )0\nOK\n"
    );
    let (code, _, err) = treecat(&["enumerate", "--from", "()"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
}
