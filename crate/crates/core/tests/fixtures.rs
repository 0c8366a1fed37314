use std::path::PathBuf;

use spinq_core::fock::SectorModel;
use spinq_core::partitions::GroupData;
use spinq_core::Error;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(sub)
}

fn json_files(sub: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir(sub))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    out.sort();
    out
}

#[test]
fn every_group_fixture_validates() {
    let files = json_files("groups");
    assert!(files.len() >= 5);
    for p in files {
        let g = GroupData::load(&p).unwrap_or_else(|e| panic!("{}: {}", p.display(), e));
        g.validate().unwrap();
    }
}

#[test]
fn group_fixtures_match_builtins() {
    let z3 = GroupData::load(dir("groups/z3.json")).unwrap();
    assert_eq!(z3.character_table, GroupData::cyclic(3).character_table);
    let z2 = GroupData::load(dir("groups/z2.json")).unwrap();
    assert_eq!(z2.character_table, GroupData::cyclic(2).character_table);
    let trivial = GroupData::load(dir("groups/trivial.json")).unwrap();
    assert_eq!(trivial.num_classes(), 1);
    let s3 = GroupData::load(dir("groups/s3.json")).unwrap();
    assert_eq!(s3.labels(), vec!["e", "t", "r"]);
    assert_eq!(s3.linear_characters().unwrap(), vec![0, 1]);
    let bare = GroupData::load(dir("groups/z2_no_table.json")).unwrap();
    assert!(bare.character_table.is_none());
}

#[test]
fn every_model_fixture_loads() {
    for p in json_files("models") {
        SectorModel::load(&p).unwrap_or_else(|e| panic!("{}: {}", p.display(), e));
    }
    let m = SectorModel::load(dir("models/point_3_2.json")).unwrap();
    assert_eq!(m.total_dims(), (3, 2));
    let m = SectorModel::load(dir("models/z2_sectors.json")).unwrap();
    assert_eq!(m.dims(), &[(1, 1), (1, 0)]);
    assert_eq!(m.group().name, "Z2");
}

#[test]
fn missing_file_names_the_path() {
    let err = GroupData::load(dir("groups/absent.json")).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert!(err.to_string().contains("absent.json"));
}
