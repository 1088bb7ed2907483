use std::fmt::Write;
use std::path::PathBuf;

use partial_actions::algebra_action::globalize as globalize_algebra;
use partial_actions::group::{
    coset_factorize, cross_validate_table, left_transversal, subgroup_closure, ClaimedRow,
    FiniteGroup,
};
use partial_actions::set_action::{enumerate_partial_actions, globalize_set};
use partial_actions::Error;
use serde_json::{json, Value};

use crate::document::{
    Action, ActionDoc, ClaimedTable, GroupDoc, GroupRef, WorkbenchDocument,
};
use crate::render::{algebra_report, factor_table, set_report, verification_json};
use crate::{read, CliError, Outcome};

fn describe(action: &Action) -> String {
    match action {
        Action::Set(spa) => format!(
            "set partial action of a group of order {} on {{{}}}",
            spa.group().order(),
            spa.carrier().join(", ")
        ),
        Action::Algebra(pa) => format!(
            "partial action of a group of order {} on {}",
            pa.group().order(),
            pa.algebra()
        ),
    }
}

/// Checks the axioms of every action in the document.
pub fn verify(file: &PathBuf) -> Result<Outcome, CliError> {
    let doc = WorkbenchDocument::parse(&read(file)?)?;
    let mut text = String::new();
    let mut reports = serde_json::Map::new();
    let mut pass = true;
    for (name, action) in doc.actions()? {
        let report = match &action {
            Action::Set(spa) => spa.verify(),
            Action::Algebra(pa) => pa.verify(),
        };
        pass &= report.all_pass();
        let _ = writeln!(text, "action `{name}`: {}", describe(&action));
        text.push_str(&report.to_string());
        let _ = writeln!(text, "verdict: {}\n", if report.all_pass() { "PASS" } else { "FAIL" });
        reports.insert(
            name,
            json!({"pass": report.all_pass(), "checks": verification_json(&report)}),
        );
    }
    Ok(Outcome {
        text,
        json: json!({"pass": pass, "actions": reports}),
        pass,
    })
}

fn subgroup_of(group: &FiniteGroup, generators: &[String]) -> Result<Vec<usize>, CliError> {
    generators
        .iter()
        .map(|g| {
            group
                .element(g)
                .ok_or_else(|| CliError::Input(format!("unknown group element `{g}`")))
        })
        .collect()
}

/// The j/h table of `⟨generators⟩ ≤ group`, optionally compared with claimed
/// rows. Fails (exit 1) only when a comparison finds discrepancies.
pub fn factorize(
    group: &str,
    generators: &[String],
    compare: Option<&PathBuf>,
) -> Result<Outcome, CliError> {
    let grp = GroupDoc::parse_spec(group)?.build()?;
    let gens = subgroup_of(&grp, generators)?;
    let claimed = compare
        .map(|path| ClaimedTable::parse(&read(path)?))
        .transpose()?;
    let rows: Vec<ClaimedRow> = claimed
        .iter()
        .flat_map(|t| &t.rows)
        .map(|r| ClaimedRow::new(&r.g, &r.g_i, &r.j, &r.h))
        .collect();
    factor_outcome(&grp, &gens, claimed.as_ref().map(|_| rows.as_slice()))
}

pub(crate) fn factor_outcome(
    grp: &FiniteGroup,
    gens: &[usize],
    claimed: Option<&[ClaimedRow]>,
) -> Result<Outcome, CliError> {
    let h = subgroup_closure(grp, gens);
    let cf = coset_factorize(&left_transversal(&h)).map_err(|e| CliError::Input(e.to_string()))?;
    let report = claimed
        .map(|rows| cross_validate_table(&cf, rows))
        .transpose()
        .map_err(|e| CliError::Input(format!("claimed rows: {e}")))?;
    let (text, json) = factor_table(&cf, report.as_ref());
    let pass = cf.check_cocycles().holds() && report.as_ref().is_none_or(|r| r.is_clean());
    Ok(Outcome { text, json, pass })
}

/// Globalizes each action (or the selected one). A single report is emitted
/// bare; several are keyed by action name.
pub fn globalize(file: &PathBuf, only: Option<&str>) -> Result<Outcome, CliError> {
    let doc = WorkbenchDocument::parse(&read(file)?)?;
    let mut actions = doc.actions()?;
    if let Some(name) = only {
        actions.retain(|(n, _)| n == name);
        if actions.is_empty() {
            return Err(CliError::Input(format!("no action named `{name}`")));
        }
    }
    let single = actions.len() == 1;
    let mut text = String::new();
    let mut reports = serde_json::Map::new();
    let mut pass = true;
    for (name, action) in &actions {
        let _ = writeln!(text, "action `{name}`: {}", describe(action));
        let (t, v, ok) = globalize_one(action)?;
        pass &= ok;
        text.push_str(&t);
        text.push('\n');
        reports.insert(name.clone(), v);
    }
    let json = if single {
        reports.into_iter().next().map(|(_, v)| v).unwrap_or(Value::Null)
    } else {
        Value::Object(reports)
    };
    Ok(Outcome { text, json, pass })
}

fn globalize_one(action: &Action) -> Result<(String, Value, bool), CliError> {
    let invalid = |report: String| {
        let text = format!("not a partial action; no envelope built\n{report}");
        let value = json!({"error": "invalid partial action", "report": report});
        Ok((text, value, false))
    };
    match action {
        Action::Set(spa) => match globalize_set(spa) {
            Ok(env) => {
                let checks = env.verify(spa);
                let (t, v) = set_report(spa, &env, &checks);
                Ok((t, v, checks.all_pass()))
            }
            Err(Error::InvalidAction(r)) => invalid(r),
            Err(e) => Err(CliError::Input(e.to_string())),
        },
        Action::Algebra(pa) => match globalize_algebra(pa) {
            Ok(res) => {
                let (t, v) = algebra_report(pa.group(), pa.algebra(), &res);
                Ok((t, v, res.checks().all_pass()))
            }
            Err(Error::InvalidAction(r)) => invalid(r),
            Err(e @ (Error::InternalInconsistency(_) | Error::TwistTransportConflict(_))) => {
                let msg = e.to_string();
                Ok((format!("globalization failed: {msg}\n"), json!({"error": msg}), false))
            }
            Err(e) => Err(CliError::Input(e.to_string())),
        },
    }
}

/// Lists every partial action of a group on `x1, …, x_size`.
pub fn enumerate(
    group: &str,
    size: usize,
    envelopes: bool,
    emit: Option<usize>,
) -> Result<Outcome, CliError> {
    let spec = GroupDoc::parse_spec(group)?;
    let grp = spec.build()?;
    let all = enumerate_partial_actions(&grp, size).map_err(|e| CliError::Input(e.to_string()))?;

    if let Some(k) = emit {
        let spa = all
            .get(k.wrapping_sub(1))
            .ok_or_else(|| CliError::Input(format!("there is no action #{k} (1..={})", all.len())))?;
        let maps = grp
            .elements()
            .filter(|&g| !spa.domain(g).is_empty())
            .map(|g| {
                let m = spa
                    .domain(g)
                    .into_iter()
                    .map(|x| {
                        let y = spa.apply(g, x).expect("in domain");
                        (spa.carrier()[x].clone(), spa.carrier()[y].clone())
                    })
                    .collect();
                (grp.name(g).to_string(), m)
            })
            .collect();
        let doc = WorkbenchDocument::with_action(
            &format!("enumerated-{k}"),
            ActionDoc::Set {
                group: GroupRef::Inline(spec),
                carrier: spa.carrier().to_vec(),
                domains: None,
                maps,
            },
        );
        let json: Value = serde_json::to_value(&doc).expect("documents serialize");
        return Ok(Outcome {
            text: doc.to_json() + "\n",
            json,
            pass: true,
        });
    }

    let mut text = format!("{} partial actions\n", all.len());
    let mut listing = Vec::with_capacity(all.len());
    for (i, spa) in all.iter().enumerate() {
        let mut entry = json!({"id": i + 1, "action": spa.to_string()});
        let _ = write!(text, "#{} {spa}", i + 1);
        if envelopes {
            let env = globalize_set(spa).map_err(|e| CliError::Input(e.to_string()))?;
            entry["envelope_size"] = json!(env.size());
            let _ = write!(text, "  envelope: {}", env.size());
        }
        text.push('\n');
        listing.push(entry);
    }
    Ok(Outcome {
        text,
        json: json!({"count": all.len(), "actions": listing}),
        pass: true,
    })
}
