use hfsplit_core::error::StaircaseError;
use hfsplit_core::{d_table, surgery_complex, tensor, torus_14_15, whitehead_sum_22, Convention, Staircase};

#[test]
fn saved_staircases_load_back_unchanged() {
    let dir = tempfile::tempdir().unwrap();
    for s in [torus_14_15(), whitehead_sum_22()] {
        let path = dir.path().join("s.json");
        std::fs::write(&path, s.to_json()).unwrap();
        assert_eq!(Staircase::load(&path).unwrap(), s);
    }
}

#[test]
fn loaded_files_give_the_built_in_table() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    std::fs::write(&a, torus_14_15().to_json()).unwrap();
    std::fs::write(&b, whitehead_sum_22().to_json()).unwrap();

    let gens = tensor(&Staircase::load(&a).unwrap(), &Staircase::load(&b).unwrap()).unwrap();
    let built_in = surgery_complex(15).unwrap();
    let from_files = d_table(&gens, 225, Convention::Table1).unwrap();
    let expected = d_table(&built_in.generators, 225, Convention::Table1).unwrap();
    assert!(from_files.iter().eq(expected.iter()));
}

#[test]
fn missing_and_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(Staircase::load(dir.path().join("absent.json")), Err(StaircaseError::Io { .. })));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"alpha\": 0}").unwrap();
    assert!(matches!(Staircase::load(&bad), Err(StaircaseError::Parse(_))));

    std::fs::write(&bad, "[[0, 3], [1, 1], [2, 0]]").unwrap();
    assert!(matches!(Staircase::load(&bad), Err(StaircaseError::Asymmetric(..))));
}
