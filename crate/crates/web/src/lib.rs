//! Browser bindings: dimension series, spin character tables and Schur
//! Q-function expansions. Each operation returns a JSON string.
//!
//! The `*_json` functions are plain Rust and run natively; the exported
//! wrappers only convert errors to JS values.

use std::sync::Arc;

use serde_json::json;
use wasm_bindgen::prelude::*;

use spinq_core::fock::{dim_series, euler_s_series, euler_series, SectorModel};
use spinq_core::partitions::{GroupData, Partition};
use spinq_core::series::PowerSeries;
use spinq_core::spinchar::char_table;
use spinq_core::symfunc::{omega_dim_series, p_in_Q, q_in_p, Q_in_p};

/// Largest degree the page accepts; keeps the tab responsive.
pub const MAX_DEGREE: u32 = 40;

fn check_degree(n: u32) -> Result<(), String> {
    if n > MAX_DEGREE {
        return Err(format!("degree {} is above the demo limit {}", n, MAX_DEGREE));
    }
    Ok(())
}

fn coeffs(s: &PowerSeries) -> Vec<String> {
    s.integer_coeffs().iter().map(|c| c.to_string()).collect()
}

fn group_named(name: &str) -> Result<GroupData, String> {
    match name {
        "trivial" => Ok(GroupData::trivial()),
        "z2" => Ok(GroupData::cyclic(2)),
        "z3" => Ok(GroupData::cyclic(3)),
        other => GroupData::from_json_str(other).map_err(|e| e.to_string()),
    }
}

/// `kind` is one of `omega`, `fock-dim`, `euler`, `euler-s`; `d0`, `d1` give
/// the point model for `fock-dim` and `e = d0 - d1` for the Euler series.
pub fn series_json(kind: &str, n: u32, d0: u32, d1: u32) -> Result<String, String> {
    check_degree(n)?;
    let n = n as usize;
    let e = d0 as i64 - d1 as i64;
    let s = match kind {
        "omega" => omega_dim_series(n),
        "fock-dim" => dim_series(&SectorModel::point(d0, d1), n),
        "euler" => euler_series(e, n),
        "euler-s" => euler_s_series(e, n),
        other => return Err(format!("unknown series `{}`", other)),
    };
    Ok(json!({ "kind": kind, "coefficients": coeffs(&s) }).to_string())
}

/// `group` is `trivial`, `z2`, `z3` or a group description in JSON.
pub fn chartable_json(group: &str, degree: u32) -> Result<String, String> {
    if degree > 10 {
        return Err("character tables are limited to degree 10 here".into());
    }
    let g = Arc::new(group_named(group)?);
    let labels = g.labels();
    let t = char_table(g.clone(), degree).map_err(|e| e.to_string())?;
    let columns: Vec<String> = t
        .columns
        .iter()
        .map(|c| if c.num_labels() == 1 { c.to_string() } else { c.display_with(&labels) })
        .collect();
    Ok(json!({
        "columns": columns,
        "Z": t.centralizers.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
        "rows": t.rows.iter().map(|r| json!({
            "name": r.name,
            "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "warnings": t.warnings,
    })
    .to_string())
}

/// `basis` is `q` (index a degree), `Q` or `p` (index a partition like `3,1`).
pub fn expand_json(basis: &str, index: &str) -> Result<String, String> {
    let parse = |s: &str| s.parse::<Partition>().map_err(|_| format!("`{}` is not a partition", s));
    let text = match basis {
        "q" => {
            let n: u32 = index.trim().parse().map_err(|_| format!("`{}` is not a degree", index))?;
            if n > 20 {
                return Err("q_n is limited to n <= 20 here".into());
            }
            format!("q_{} = {}", n, q_in_p(n))
        }
        "Q" => {
            let l = parse(index)?;
            if l.weight() > 14 {
                return Err("Q_lambda is limited to |lambda| <= 14 here".into());
            }
            format!("Q_{} = {}", l, Q_in_p(&l).map_err(|e| e.to_string())?)
        }
        "p" => {
            let mu = parse(index)?;
            if mu.weight() > 12 {
                return Err("p_mu is limited to |mu| <= 12 here".into());
            }
            let terms = p_in_Q(&mu).map_err(|e| e.to_string())?;
            let items: Vec<String> = terms.iter().map(|(l, c)| format!("{}*Q{}", c, l)).collect();
            format!("p_{} = {}", mu, items.join(" + ").replace("+ -", "- "))
        }
        other => return Err(format!("unknown basis `{}`", other)),
    };
    Ok(json!({ "expansion": text }).to_string())
}

#[wasm_bindgen]
pub fn series(kind: &str, n: u32, d0: u32, d1: u32) -> Result<String, JsValue> {
    series_json(kind, n, d0, d1).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn chartable(group: &str, degree: u32) -> Result<String, JsValue> {
    chartable_json(group, degree).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn expand(basis: &str, index: &str) -> Result<String, JsValue> {
    expand_json(basis, index).map_err(|e| JsValue::from_str(&e))
}
