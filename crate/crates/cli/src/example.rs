//! The built-in S3 example: `Z2` acting on the two-way quiver algebra
//! through `H = ⟨(12)⟩ ≤ S3`, extended by zero and globalized.
//!
//! The claimed table rows and β formulas ship in `data/s3_example.json`.

use std::fmt::Write;

use partial_actions::algebra_action::{globalize_extension_by_zero, BlockProvenance, GlobalizationResult};
use partial_actions::block::{wreath_apply, Block, FormalSum, Payload};
use partial_actions::group::{ClaimedRow, FiniteGroup};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::commands::factor_outcome;
use crate::document::{hom_from_generators, ClaimedRowDoc, GroupDoc};
use crate::{Outcome, Section};

pub const FIXTURE: &str = include_str!("../data/s3_example.json");

#[derive(Deserialize)]
pub struct Fixture {
    pub source: String,
    pub group: GroupDoc,
    pub generators: Vec<String>,
    pub rows: Vec<ClaimedRowDoc>,
    pub beta: Vec<String>,
}

pub fn fixture() -> Fixture {
    serde_json::from_str(FIXTURE).expect("the embedded fixture parses")
}

/// The automorphism group of the quiver algebra: the identity and the swap σ.
pub fn quiver_block() -> Block {
    let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], Some(vec!["1".into(), "σ".into()]))
        .expect("Z2 table");
    Block::new("Lambda", z2)
}

/// The envelope of the example, blocks in transversal order.
pub fn envelope() -> (FiniteGroup, GlobalizationResult) {
    let f = fixture();
    let group = f.group.build().expect("S3");
    let rho = f.generators.iter().map(|g| (g.clone(), "σ".to_string())).collect();
    let action = hom_from_generators(&group, &f.generators, quiver_block(), &rho).expect("ρ");
    let res = globalize_extension_by_zero(&action).expect("envelope");
    (group, res)
}

/// A parsed formula `β_g(x,y,z) = (…)`: for each output position, the input
/// variable and the subgroup element acting on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaFormula {
    pub text: String,
    pub g: String,
    pub components: Vec<(Option<String>, String)>,
}

pub fn parse_beta(text: &str) -> Option<BetaFormula> {
    let body = text.trim().strip_prefix("β_")?;
    let (lhs, rhs) = body.split_once('=')?;
    let (g, vars) = match lhs.find("(x") {
        Some(i) => (&lhs[..i], &lhs[i..]),
        None => (lhs, "(x,y,z)"),
    };
    let vars: Vec<String> = vars
        .strip_prefix('(')?
        .strip_suffix(')')?
        .split(',')
        .map(|v| v.trim().to_string())
        .collect();
    let components = if rhs.trim() == "id" {
        vars.iter().map(|v| (None, v.clone())).collect()
    } else {
        rhs.trim()
            .strip_prefix('(')?
            .strip_suffix(')')?
            .split(',')
            .map(|c| {
                let c = c.trim();
                let v = vars.iter().find(|v| c.ends_with(v.as_str()))?;
                let prefix = &c[..c.len() - v.len()];
                Some(((!prefix.is_empty()).then(|| prefix.to_string()), v.clone()))
            })
            .collect::<Option<Vec<_>>>()?
    };
    Some(BetaFormula {
        text: text.to_string(),
        g: g.to_string(),
        components,
    })
}

/// Whether the constructed `β_g` sends `(x, y, z)` to the formula's tuple.
pub fn check_beta(group: &FiniteGroup, res: &GlobalizationResult, formula: &BetaFormula) -> bool {
    let Some(g) = group.element(&formula.g) else {
        return false;
    };
    let block = quiver_block();
    let sigma = block.aut().element("σ").expect("σ");
    let vars = ["x", "y", "z"];
    let input: FormalSum = vars
        .iter()
        .enumerate()
        .map(|(p, v)| (p, Payload { token: v.to_string(), twist: 0 }))
        .collect();
    let Ok(output) = wreath_apply(res.action(g), &input) else {
        return false;
    };
    let expected: Option<FormalSum> = formula
        .components
        .iter()
        .enumerate()
        .map(|(p, (h, v))| {
            let twist = match h {
                None => 0,
                // (12) is the generator of H and acts as σ.
                Some(h) if h == "(12)" => sigma,
                Some(_) => return None,
            };
            Some((p, Payload { token: v.clone(), twist }))
        })
        .collect();
    expected.is_some_and(|e| e == output)
}

fn beta_section() -> (String, Value, bool) {
    let f = fixture();
    let (group, res) = envelope();
    let order: Vec<String> = res
        .provenance()
        .iter()
        .map(|p| match *p {
            BlockProvenance::Coset { rep } => group.name(rep).to_string(),
            BlockProvenance::Orbit { g, .. } => group.name(g).to_string(),
        })
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "envelope: {} ({} blocks)", res.envelope(), res.block_count());
    let _ = writeln!(text, "block order: ({})", order.join(","));
    let mut rows = Vec::new();
    let mut pass = true;
    for line in &f.beta {
        let ok = parse_beta(line).is_some_and(|b| check_beta(&group, &res, &b));
        pass &= ok;
        let _ = writeln!(text, "{}  {line}", if ok { "PASS" } else { "FAIL" });
        rows.push(json!({"formula": line, "pass": ok}));
    }
    text.push_str(&res.checks().to_string());
    let value = json!({
        "block_order": order,
        "formulas": rows,
        "checks": crate::render::checks_json(res.checks()),
    });
    (text, value, pass && res.checks().all_pass())
}

fn table_section() -> (String, Value) {
    let f = fixture();
    let group = f.group.build().expect("S3");
    let gens: Vec<usize> = f.generators.iter().map(|g| group.element(g).expect("generator")).collect();
    let rows: Vec<ClaimedRow> = f
        .rows
        .iter()
        .map(|r| ClaimedRow::new(&r.g, &r.g_i, &r.j, &r.h))
        .collect();
    let out = factor_outcome(&group, &gens, Some(&rows)).expect("fixture rows resolve");
    let text = format!("claimed rows: {}\n{}", f.source, out.text);
    (text, out.json)
}

/// Exit status depends only on the β formulas.
pub fn run(section: Section) -> Outcome {
    match section {
        Section::Table => {
            let (text, json) = table_section();
            Outcome { text, json, pass: true }
        }
        Section::Beta => {
            let (text, json, pass) = beta_section();
            Outcome { text, json, pass }
        }
        Section::All => {
            let (t1, j1) = table_section();
            let (t2, j2, pass) = beta_section();
            Outcome {
                text: format!("{t1}\n{t2}"),
                json: json!({"table": j1, "beta": j2}),
                pass,
            }
        }
    }
}
