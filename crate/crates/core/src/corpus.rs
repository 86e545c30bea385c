//! Bundled diagrams and Reidemeister move pairs.
//!
//! The JSON files under `corpus/` are produced by [`generate`] (run the
//! `generate_corpus` example to rewrite them). Loading a pair re-applies its
//! move and checks the stored result.

use serde_json::{json, Value};

use crate::diagram::{MoveKind, MoveResult, OrientedDiagram, R1Side};
use crate::error::{Error, Result};
use crate::homology::Cochain;
use crate::json::{cocycle_to_json, parse_cocycle};
use crate::ring::{IntegersMod, Ring};

pub const DIAGRAMS_JSON: &str = include_str!("../corpus/diagrams.json");
pub const MOVE_PAIRS_JSON: &str = include_str!("../corpus/move_pairs.json");
/// Mochizuki's 3-cocycle on dihedral(3) with values in Z_3.
pub const THETA_JSON: &str = include_str!("../corpus/theta_dihedral3.json");

pub const TREFOIL_PD: &str = "X(4,2,5,1);X(6,4,1,3);X(2,6,3,5)";
pub const FIGURE_EIGHT_PD: &str = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";
pub const HOPF_PD: &str = "X(1,3,2,4);X(3,1,4,2)";

#[derive(Clone, Debug)]
pub struct NamedDiagram {
    pub name: String,
    pub description: String,
    pub diagram: OrientedDiagram,
}

#[derive(Clone, Debug)]
pub struct MovePair {
    pub name: String,
    pub before: OrientedDiagram,
    pub result: MoveResult,
}

impl MovePair {
    pub fn after(&self) -> &OrientedDiagram {
        &self.result.diagram
    }
}

fn load(text: &str, what: &str) -> Result<Vec<Value>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::format(format!("{what}: {e}")))?;
    v.as_array().cloned().ok_or_else(|| Error::format(format!("{what}: expected a list")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::format(format!("corpus entry is missing \"{key}\"")))
}

fn name_of(v: &Value) -> Result<String> {
    field(v, "name")?.as_str().map(str::to_owned).ok_or_else(|| Error::format("corpus name must be a string"))
}

pub fn diagrams() -> Result<Vec<NamedDiagram>> {
    load(DIAGRAMS_JSON, "diagram corpus")?
        .iter()
        .map(|v| {
            Ok(NamedDiagram {
                name: name_of(v)?,
                description: v.get("description").and_then(Value::as_str).unwrap_or_default().to_owned(),
                diagram: OrientedDiagram::from_json(field(v, "diagram")?)?,
            })
        })
        .collect()
}

pub fn diagram(name: &str) -> Result<OrientedDiagram> {
    diagrams()?
        .into_iter()
        .find(|d| d.name == name)
        .map(|d| d.diagram)
        .ok_or_else(|| Error::parameter(format!("no corpus diagram named `{name}`")))
}

pub fn move_pairs() -> Result<Vec<MovePair>> {
    load(MOVE_PAIRS_JSON, "move pair corpus")?
        .iter()
        .map(|v| {
            let name = name_of(v)?;
            let before = OrientedDiagram::from_json(field(v, "before")?)?;
            let kind = MoveKind::from_json(field(v, "move")?)?;
            let after = OrientedDiagram::from_json(field(v, "after")?)?;
            let result = before.apply(&kind)?;
            if result.diagram != after {
                return Err(Error::Invariant(format!("move pair `{name}`: applying the move does not give the stored diagram")));
            }
            Ok(MovePair { name, before, result })
        })
        .collect()
}

/// The entries of [`move_pairs`] whose move belongs to `family` ("R1", "R2", "R3").
pub fn move_pairs_of(family: &str) -> Result<Vec<MovePair>> {
    Ok(move_pairs()?.into_iter().filter(|p| p.result.kind.family() == family).collect())
}

/// θ read from the bundled file.
pub fn theta() -> Result<Cochain<IntegersMod>> {
    parse_cocycle(THETA_JSON, 3)
}

/// θ(x, y, z) = (x − y)·((2z − y)³ + y³ − 2z³)/3 mod 3.
fn theta_from_formula() -> Cochain<IntegersMod> {
    let r = IntegersMod::new(3).expect("3 is a valid modulus");
    Cochain::from_fn(r.clone(), 3, 3, |t| {
        let (x, y, z) = (t[0] as i64, t[1] as i64, t[2] as i64);
        r.from_i64((x - y) * (((2 * z - y).pow(3) + y.pow(3) - 2 * z.pow(3)) / 3))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusFiles {
    pub diagrams: String,
    pub move_pairs: String,
    pub theta: String,
    /// One `(name, file contents)` per diagram, for use with the command line.
    pub diagram_files: Vec<(String, String)>,
}

fn first_r2_with_triangle(d: &OrientedDiagram) -> Result<MoveResult> {
    for (f, darts) in d.faces().iter().enumerate() {
        for &(a, _) in darts {
            for &(b, _) in darts {
                if a == b {
                    continue;
                }
                let m = d.apply_r2(a, b, f)?;
                if !m.diagram.r3_faces().is_empty() {
                    return Ok(m);
                }
            }
        }
    }
    Err(Error::MoveInapplicable("no R2 move creates an R3 triangle".into()))
}

fn first_r2(d: &OrientedDiagram) -> Result<MoveResult> {
    let faces = d.faces();
    let (f, darts) = faces.iter().enumerate().find(|(_, darts)| darts.len() > 1).expect("diagram with crossings");
    d.apply_r2(darts[0].0, darts[1].0, f)
}

/// Contents of the files under `corpus/`.
pub fn generate() -> Result<CorpusFiles> {
    let unknot = OrientedDiagram::unknot();
    let trefoil = OrientedDiagram::parse_pd(TREFOIL_PD)?;
    let figure_eight = OrientedDiagram::parse_pd(FIGURE_EIGHT_PD)?;
    let hopf = OrientedDiagram::parse_pd(HOPF_PD)?;

    let trefoil_r2 = first_r2_with_triangle(&trefoil)?;
    let triangle = trefoil_r2.diagram.r3_faces()[0];
    let triangle_edges = trefoil_r2.diagram.faces()[triangle].iter().map(|&(e, _)| e).collect::<Vec<_>>();
    let curl_edge = (0..trefoil_r2.diagram.edge_count()).find(|e| !triangle_edges.contains(e)).expect("edge off the triangle");
    let trefoil_6 = trefoil_r2.diagram.apply_r1(curl_edge, R1Side::Left, 1)?.diagram;
    if trefoil_6.r3_faces().is_empty() {
        return Err(Error::Invariant("six-crossing trefoil lost its triangle".into()));
    }

    let named = [
        ("unknot", "crossingless unknot", unknot.clone()),
        ("unknot_r1_pos", "unknot with one positive curl", unknot.apply_r1(0, R1Side::Left, 1)?.diagram),
        ("unknot_r1_neg", "unknot with one negative curl", unknot.apply_r1(0, R1Side::Right, -1)?.diagram),
        ("unknot_r2", "unknot with a bigon", unknot.apply_r2(0, 0, 1)?.diagram),
        ("trefoil", "right-handed trefoil", trefoil.clone()),
        ("trefoil_6", "trefoil with a bigon and a curl, carrying an R3 triangle", trefoil_6.clone()),
        ("figure_eight", "figure-eight knot", figure_eight.clone()),
        ("hopf", "positive Hopf link", hopf.clone()),
        ("hopf_reversed", "Hopf link with the second component reversed", hopf.reverse_component(1)?),
    ];
    let diagram_files = named.iter().map(|(name, _, d)| (name.to_string(), d.to_json().to_string() + "\n")).collect();
    let diagrams_json: Vec<Value> =
        named.iter().map(|(name, description, d)| json!({"name": name, "description": description, "diagram": d.to_json()})).collect();

    let trefoil_curl = trefoil.apply_r1(0, R1Side::Left, 1)?.diagram;
    let trefoil_bigon = first_r2(&trefoil)?.diagram;
    let moves: Vec<(&str, &OrientedDiagram, MoveKind)> = vec![
        ("r1_unknot_left_pos", &unknot, MoveKind::R1 { edge: 0, side: R1Side::Left, sign: 1 }),
        ("r1_unknot_right_neg", &unknot, MoveKind::R1 { edge: 0, side: R1Side::Right, sign: -1 }),
        ("r1_trefoil_left_pos", &trefoil, MoveKind::R1 { edge: 0, side: R1Side::Left, sign: 1 }),
        ("r1_trefoil_right_neg", &trefoil, MoveKind::R1 { edge: 3, side: R1Side::Right, sign: -1 }),
        ("r1_figure_eight_left_neg", &figure_eight, MoveKind::R1 { edge: 2, side: R1Side::Left, sign: -1 }),
        ("r1_hopf_right_pos", &hopf, MoveKind::R1 { edge: 1, side: R1Side::Right, sign: 1 }),
        ("r1_inverse_trefoil", &trefoil_curl, MoveKind::R1Inverse { crossing: trefoil_curl.r1_curls()[0] }),
        ("r2_unknot", &unknot, MoveKind::R2 { over: 0, under: 0, face: 1 }),
        ("r2_trefoil", &trefoil, first_r2(&trefoil)?.kind),
        ("r2_figure_eight", &figure_eight, first_r2(&figure_eight)?.kind),
        ("r2_hopf", &hopf, first_r2(&hopf)?.kind),
        ("r2_trefoil_triangle", &trefoil, trefoil_r2.kind.clone()),
        ("r2_inverse_trefoil", &trefoil_bigon, MoveKind::R2Inverse { face: trefoil_bigon.r2_bigons()[0] }),
        ("r3_trefoil_r2", &trefoil_r2.diagram, MoveKind::R3 { face: triangle }),
        ("r3_trefoil_6", &trefoil_6, MoveKind::R3 { face: trefoil_6.r3_faces()[0] }),
    ];
    let mut pairs_json = Vec::new();
    for (name, before, kind) in moves {
        let after = before.apply(&kind)?.diagram;
        pairs_json.push(json!({"name": name, "before": before.to_json(), "move": kind.to_json(), "after": after.to_json()}));
    }
    let pretty = |v: Vec<Value>| format!("[\n  {}\n]\n", v.iter().map(Value::to_string).collect::<Vec<_>>().join(",\n  "));
    Ok(CorpusFiles {
        diagrams: pretty(diagrams_json),
        move_pairs: pretty(pairs_json),
        theta: cocycle_to_json(&theta_from_formula(), 3).to_string() + "\n",
        diagram_files,
    })
}
