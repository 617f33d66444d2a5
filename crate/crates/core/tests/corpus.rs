use std::fs;
use std::path::PathBuf;

use monodromy_core::io;

fn corpus_dir(sub: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", sub].iter().collect()
}

fn files(sub: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = fs::read_dir(corpus_dir(sub))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

#[test]
fn every_file_round_trips_byte_for_byte() {
    let mut count = 0;
    for (name, text) in files("factorizations") {
        let f = io::factorization_from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(io::factorization_to_json(&f), text, "{name}");
        count += 1;
    }
    for (name, text) in files("theta") {
        let t = io::theta_from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(io::theta_to_json(&t), text, "{name}");
        count += 1;
    }
    for (name, text) in files("linear_systems") {
        let l = io::linear_system_from_json(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(io::linear_system_to_json(&l), text, "{name}");
        count += 1;
    }
    assert!(count >= 20, "corpus has only {count} files");
}

#[test]
fn factorization_validity_matches_file_names() {
    for (name, text) in files("factorizations") {
        let f = io::factorization_from_json(&text).unwrap();
        let expect_valid = !(name.contains("flip") || name.contains("missing") || name.contains("mutated"));
        assert_eq!(f.is_valid(), expect_valid, "{name}\n{}", f.validate());
    }
}

#[test]
fn theta_validity_matches_file_names() {
    for (name, text) in files("theta") {
        let t = io::theta_from_json(&text).unwrap();
        assert_eq!(t.validate_rep().pass, !name.contains("bad"), "{name}");
    }
}
