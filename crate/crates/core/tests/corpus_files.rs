use std::fs;
use std::path::PathBuf;

use homlie::corpus;
use homlie::format::AlgebraFile;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[test]
fn shipped_files_match_the_builders() {
    let all = corpus::all();
    for (name, g) in &all {
        let path = corpus_dir().join(format!("{name}.json"));
        let text = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(text, AlgebraFile::from_algebra(name, g).to_json(), "{name}");
        assert_eq!(&AlgebraFile::from_json(&text).unwrap().to_algebra(None).unwrap(), g, "{name}");
    }
    let shipped = fs::read_dir(corpus_dir()).unwrap().count();
    assert_eq!(shipped, all.len());
}

/// `cargo test -p homlie --test corpus_files -- --ignored` rewrites the corpus.
#[test]
#[ignore]
fn regenerate() {
    for (name, g) in corpus::all() {
        fs::write(corpus_dir().join(format!("{name}.json")), AlgebraFile::from_algebra(&name, &g).to_json()).unwrap();
    }
}
