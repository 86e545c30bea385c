use quandle_core::corpus::{self, generate};

#[test]
fn shipped_files_are_current() {
    let files = generate().unwrap();
    assert_eq!(files.diagrams, corpus::DIAGRAMS_JSON, "run `cargo run -p quandle-core --example generate_corpus`");
    assert_eq!(files.move_pairs, corpus::MOVE_PAIRS_JSON);
    assert_eq!(files.theta, corpus::THETA_JSON);
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for (name, text) in &files.diagram_files {
        let shipped = std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(&shipped, text, "{name}");
        assert_eq!(quandle_core::diagram::OrientedDiagram::from_json_str(&shipped).unwrap(), corpus::diagram(name).unwrap());
    }
}

#[test]
fn diagrams_load() {
    let all = corpus::diagrams().unwrap();
    let crossings: Vec<(String, usize)> = all.iter().map(|d| (d.name.clone(), d.diagram.crossing_count())).collect();
    let find = |n: &str| crossings.iter().find(|(m, _)| m == n).unwrap().1;
    assert_eq!(find("unknot"), 0);
    assert_eq!(find("unknot_r1_pos"), 1);
    assert_eq!(find("unknot_r2"), 2);
    assert_eq!(find("trefoil"), 3);
    assert_eq!(find("trefoil_6"), 6);
    assert_eq!(find("hopf_reversed"), 2);
    assert_eq!(corpus::diagram("hopf_reversed").unwrap().writhe(), -2);
    assert_eq!(corpus::diagram("unknot_r1_neg").unwrap().writhe(), -1);
    assert!(!corpus::diagram("trefoil_6").unwrap().r3_faces().is_empty());
    assert!(corpus::diagram("nope").is_err());
}

#[test]
fn move_pairs_replay() {
    let pairs = corpus::move_pairs().unwrap();
    for family in ["R1", "R2", "R3"] {
        assert!(pairs.iter().filter(|p| p.result.kind.family() == family).count() >= 2, "{family}");
    }
    for p in &pairs {
        let delta = p.after().crossing_count() as i64 - p.before.crossing_count() as i64;
        let want = match p.result.kind.family() {
            "R1" => [1, -1],
            "R2" => [2, -2],
            _ => [0, 0],
        };
        assert!(want.contains(&delta), "{}", p.name);
    }
}
