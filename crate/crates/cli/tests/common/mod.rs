#![allow(dead_code)]

use std::path::{Path, PathBuf};

use bvkit::braid::BraidWord;
use bvkit::diagram::{Flavor, GroupContext};
use bvkit::dsl::{print_document, Document};
use bvkit::labeled::LabelGroupSpec;
use bvkit::random::{self, Shape};
use bvkit_cli::{run_command, Outcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

pub const GOLDEN_COUNT: u64 = 50;

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    crate_dir().join("tests/golden")
}

pub fn golden_path(i: u64) -> PathBuf {
    golden_dir().join(format!("case_{i:02}.bv"))
}

fn context_for(rng: &mut ChaCha8Rng) -> GroupContext {
    let d = rng.gen_range(2..=3);
    let r = rng.gen_range(1..=3);
    let flavor = [Flavor::V, Flavor::F, Flavor::T][rng.gen_range(0..3)];
    let spec = match (flavor, rng.gen_range(0..4)) {
        (_, 0) => LabelGroupSpec::trivial(d).unwrap(),
        (_, 1) => LabelGroupSpec::ribbon(d, true).unwrap(),
        (Flavor::V, 2) => LabelGroupSpec::ribbon(d, false).unwrap(),
        (Flavor::V, 3) => {
            let gens = (1..d as i32).map(|k| BraidWord::new(d, vec![k]).unwrap()).collect();
            LabelGroupSpec::new(d, gens, false).unwrap()
        }
        _ => {
            // squares of the standard generators are pure
            let gens = (1..d as i32).map(|k| BraidWord::new(d, vec![k, k]).unwrap()).collect();
            LabelGroupSpec::new(d, gens, true).unwrap()
        }
    };
    GroupContext::new(r, spec, flavor).unwrap()
}

/// The canonical text of golden document `i`: a random group and one to three
/// reduced elements built from generators.
pub fn golden_document(i: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(0x601d + i);
    let ctx = context_for(&mut rng);
    let count = rng.gen_range(1..=3);
    let elements = ["a", "b", "c"][..count]
        .iter()
        .map(|name| {
            let shape = Shape {
                carets: rng.gen_range(0..=3),
                braid_len: rng.gen_range(0..=6),
                label_len: 2,
            };
            let embeddings = rng.gen_range(0..=2);
            let g = random::element_from_generators(&mut rng, &ctx, shape, embeddings);
            (name.to_string(), ctx.reduce(&g).unwrap())
        })
        .collect();
    print_document(&Document { context: ctx, elements })
}

/// Rewrites the golden files when `BLESS=1`.
pub fn bless_if_requested() {
    if std::env::var("BLESS").as_deref() == Ok("1") {
        std::fs::create_dir_all(golden_dir()).unwrap();
        for i in 0..GOLDEN_COUNT {
            std::fs::write(golden_path(i), golden_document(i)).unwrap();
        }
    }
}

pub fn run(args: &[&str], input: &str) -> Outcome {
    let mut argv = vec!["bvkit"];
    argv.extend_from_slice(args);
    run_command(argv, &mut input.as_bytes())
}

pub fn run_file(args: &[&str], file: &Path) -> Outcome {
    let mut argv = vec!["bvkit", "--file", file.to_str().unwrap()];
    argv.extend_from_slice(args);
    run_command(argv, &mut std::io::empty())
}

pub fn schema(name: &str) -> jsonschema::Validator {
    let path = crate_dir().join("schemas").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Parses command output and checks it against the named schema.
pub fn validated(name: &str, out: &Outcome) -> Value {
    assert!(out.code == 0 || out.code == 1, "exit {}: {}", out.code, out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{}", out.stdout);
    v
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("tests/fixtures").join(name)
}
