use std::fmt::Write;

use partial_actions::algebra_action::{BlockProvenance, GlobalizationResult, GlobalizationRoute};
use partial_actions::block::{BlockAlgebra, WreathMap};
use partial_actions::group::{CosetFactorization, DiscrepancyReport, FiniteGroup, RowStatus};
use partial_actions::report::{EnvelopingChecks, VerificationReport};
use partial_actions::set_action::{SetGlobalization, SetPartialAction};
use serde_json::{json, Value};

pub fn verification_json(report: &VerificationReport) -> Value {
    Value::Array(
        report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "axiom": c.axiom.label(),
                    "pass": c.passed(),
                    "witness": c.witness,
                })
            })
            .collect(),
    )
}

pub fn checks_json(checks: &EnvelopingChecks) -> Value {
    json!({
        "ideal": checks.ideal,
        "covers": checks.covers,
        "intersection": checks.intersection,
        "equivariance": checks.equivariance,
    })
}

fn route_name(route: GlobalizationRoute) -> &'static str {
    match route {
        GlobalizationRoute::ExtensionByZero => "extension_by_zero",
        GlobalizationRoute::KBlocks => "k_blocks",
        GlobalizationRoute::BlockPower => "block_power",
        GlobalizationRoute::Mixed => "mixed",
    }
}

fn wreath_json(map: &WreathMap, algebra: &BlockAlgebra) -> Value {
    Value::Array(
        map.entries()
            .map(|(p, q, t)| json!({"from": p, "to": q, "twist": algebra.block(p).aut().name(t)}))
            .collect(),
    )
}

fn wreath_text(map: &WreathMap, algebra: &BlockAlgebra) -> String {
    let parts: Vec<String> = map
        .entries()
        .map(|(p, q, t)| {
            let aut = algebra.block(p).aut();
            if t == aut.identity() {
                format!("{p}→{q}")
            } else {
                format!("{p}→{q}[{}]", aut.name(t))
            }
        })
        .collect();
    parts.join(", ")
}

pub fn algebra_report(group: &FiniteGroup, source: &BlockAlgebra, res: &GlobalizationResult) -> (String, Value) {
    let env = res.envelope();
    let blocks: Vec<Value> = res
        .provenance()
        .iter()
        .zip(env.blocks())
        .map(|(p, b)| match *p {
            BlockProvenance::Coset { rep } => json!({"class": b.class(), "coset_rep": group.name(rep)}),
            BlockProvenance::Orbit { g, position } => {
                json!({"class": b.class(), "g": group.name(g), "position": position})
            }
        })
        .collect();
    let action: serde_json::Map<String, Value> = group
        .elements()
        .map(|g| (group.name(g).to_string(), wreath_json(res.action(g), env)))
        .collect();
    let value = json!({
        "route": route_name(res.route()),
        "envelope_blocks": blocks,
        "action": action,
        "embedding": wreath_json(res.embedding(), source),
        "checks": checks_json(res.checks()),
        "action_is_global": res.checks().global_action,
    });

    let mut text = String::new();
    let _ = writeln!(text, "route: {}", route_name(res.route()));
    let _ = writeln!(text, "envelope: {env} ({} blocks)", env.len());
    for (i, p) in res.provenance().iter().enumerate() {
        let _ = match *p {
            BlockProvenance::Coset { rep } => writeln!(text, "  block {i}: coset of {}", group.name(rep)),
            BlockProvenance::Orbit { g, position } => {
                writeln!(text, "  block {i}: class of ({}, {position})", group.name(g))
            }
        };
    }
    let _ = writeln!(text, "embedding: {}", wreath_text(res.embedding(), source));
    for g in group.elements() {
        let _ = writeln!(text, "β_{}: {}", group.name(g), wreath_text(res.action(g), env));
    }
    text.push_str(&res.checks().to_string());
    (text, value)
}

pub fn set_report(spa: &SetPartialAction, env: &SetGlobalization, checks: &EnvelopingChecks) -> (String, Value) {
    let group = spa.group();
    let points = env.envelope().carrier();
    let blocks: Vec<Value> = env
        .witnesses()
        .iter()
        .zip(points)
        .map(|(&(g, x), label)| json!({"label": label, "g": group.name(g), "x": spa.carrier()[x]}))
        .collect();
    let perms = env.envelope().permutations();
    let action: serde_json::Map<String, Value> = group
        .elements()
        .map(|g| {
            let moves: Vec<Value> = perms[g]
                .iter()
                .enumerate()
                .map(|(p, &q)| json!({"from": p, "to": q}))
                .collect();
            (group.name(g).to_string(), Value::Array(moves))
        })
        .collect();
    let embedding: Vec<Value> = env
        .embedding()
        .iter()
        .enumerate()
        .map(|(x, &p)| json!({"from": spa.carrier()[x], "to": p}))
        .collect();
    let value = json!({
        "route": "set",
        "envelope_blocks": blocks,
        "action": action,
        "embedding": embedding,
        "checks": checks_json(checks),
        "action_is_global": checks.global_action,
    });

    let mut text = String::new();
    let _ = writeln!(text, "route: set");
    let _ = writeln!(text, "envelope: {} points", points.len());
    let _ = writeln!(text, "  {}", points.join(" "));
    let emb: Vec<String> = env
        .embedding()
        .iter()
        .enumerate()
        .map(|(x, &p)| format!("{}→{}", spa.carrier()[x], points[p]))
        .collect();
    let _ = writeln!(text, "embedding: {}", emb.join(", "));
    for g in group.elements() {
        let moves: Vec<String> = perms[g].iter().enumerate().map(|(p, &q)| format!("{p}→{q}")).collect();
        let _ = writeln!(text, "β_{}: {}", group.name(g), moves.join(", "));
    }
    text.push_str(&checks.to_string());
    (text, value)
}

/// The three-column j/h table, annotated when `report` is given.
pub fn factor_table(cf: &CosetFactorization, report: Option<&DiscrepancyReport>) -> (String, Value) {
    let grp = cf.group();
    let reps = cf.transversal().reps();
    let names = |xs: &[usize]| xs.iter().map(|&x| grp.name(x).to_string()).collect::<Vec<_>>();
    let mut text = String::new();
    let _ = writeln!(text, "H = {{{}}}", names(cf.subgroup().members()).join(", "));
    let _ = writeln!(text, "T = {{{}}}", names(reps).join(", "));
    let pairs: Vec<String> = cf
        .rows()
        .iter()
        .map(|r| format!("({},{})", grp.name(r.g), grp.name(reps[r.rep_index])))
        .collect();
    let w0 = pairs.iter().map(|p| p.chars().count()).max().unwrap_or(0).max(8);
    let w1 = grp.names().iter().map(|n| n.chars().count()).max().unwrap_or(1).max(8);
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
    let mut header = format!("{}  {}  {}", pad("(g,g_i)", w0), pad("j", w1), pad("h", w1));
    if report.is_some() {
        header.push_str("  status");
    }
    let _ = writeln!(text, "{}", header.trim_end());

    let mut rows = Vec::new();
    for (r, pair) in cf.rows().iter().zip(&pairs) {
        let j = grp.name(reps[r.j_index]);
        let h = grp.name(r.h);
        let mut line = format!("{}  {}  {}", pad(pair, w0), pad(j, w1), pad(h, w1));
        let mut row = json!({
            "g": grp.name(r.g),
            "g_i": grp.name(reps[r.rep_index]),
            "j": j,
            "h": h,
        });
        if let Some(report) = report {
            let (status, note) = match report.verdict(r.g, r.rep_index) {
                Some(c) => match &c.status {
                    RowStatus::Match => ("MATCH", String::new()),
                    RowStatus::Mismatch {
                        claimed_h_outside_subgroup,
                        ..
                    } => {
                        let mut note = format!(" (claimed j={}, h={}", c.claimed.j, c.claimed.h);
                        if *claimed_h_outside_subgroup {
                            note.push_str("; claimed h is not in H");
                        }
                        note.push(')');
                        row["claimed"] = json!({"j": c.claimed.j, "h": c.claimed.h});
                        ("MISMATCH", note)
                    }
                },
                None => ("MISSING", " (not among the claimed rows)".to_string()),
            };
            line.push_str(&format!("  {status}{note}"));
            row["status"] = json!(status);
        }
        let _ = writeln!(text, "{}", line.trim_end());
        rows.push(row);
    }

    let cocycles = cf.check_cocycles();
    let _ = writeln!(
        text,
        "cocycle identities: {} ({} triples)",
        if cocycles.holds() { "PASS" } else { "FAIL" },
        cocycles.triples_checked
    );
    let mut value = json!({
        "subgroup": names(cf.subgroup().members()),
        "transversal": names(reps),
        "rows": rows,
        "cocycles": {
            "triples_checked": cocycles.triples_checked,
            "j_failures": cocycles.j_failures,
            "h_failures": cocycles.h_failures,
        },
    });
    if let Some(report) = report {
        let _ = writeln!(
            text,
            "{} MATCH, {} MISMATCH, {} MISSING",
            report.matches(),
            report.mismatches(),
            report.missing.len()
        );
        value["summary"] = json!({
            "match": report.matches(),
            "mismatch": report.mismatches(),
            "missing": report.missing.len(),
        });
    }
    (text, value)
}
