use std::fmt::Write as _;
use std::sync::Arc;

use pisys_core::counting::{self, Certificate, CountOptions, FiniteTable, MultReport};
use pisys_core::gcm::type_name;
use pisys_core::overext::{canonical_pi_general, connected_subsets, hyperbolic_sl_catalog};
use pisys_core::pisystem::pi_type;
use pisys_core::{ext_decompose, ext_subdiagrams, Gcm, PiSystem, RootSystem, Sign};
use serde_json::{json, Value};

use crate::{input, CliError, Cli, Command};

/// Largest ambient rank for `mult --cross-check`.
const CROSS_CHECK_MAX_RANK: usize = 5;
/// Largest rank for listing every connected subdiagram.
const SUBSET_LIST_MAX_RANK: usize = 20;

type Out = Result<String, CliError>;

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(1));
    }
    v
}

fn emit(json: bool, v: Value, human: String) -> String {
    if json {
        format!("{}\n", with_schema(v))
    } else {
        human
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn type_label(g: &Gcm) -> String {
    type_name(g).map(|t| t.0).unwrap_or_else(|| "unnamed".into())
}

fn matrix_text(g: &Gcm) -> String {
    g.matrix().iter().map(|r| format!("  {r:?}\n")).collect()
}

fn roots_text(s: &PiSystem) -> String {
    s.roots().iter().map(|r| format!("  {r:?}\n")).collect()
}

pub fn run(cli: &Cli) -> Out {
    let j = cli.json;
    match &cli.command {
        Command::Classify { diagram } => classify(j, &input::diagram(diagram)?),
        Command::Subdiagrams { ext, diagram } => subdiagrams(j, *ext, &input::diagram(diagram)?),
        Command::Check { ambient, pi } => check(j, &input::pi_system(pi, ambient.as_deref())?),
        Command::Type { ambient, pi } => pi_type_cmd(j, &input::pi_system(pi, ambient.as_deref())?),
        Command::Normalize { ambient, pi } => normalize(j, &input::pi_system(pi, ambient.as_deref())?),
        Command::Support { ambient, pi } => support(j, &input::pi_system(pi, ambient.as_deref())?),
        Command::Mult { k, x, height, cross_check } => {
            mult(j, (k, &input::diagram(k)?), (x, &input::diagram(x)?), *height, *cross_check)
        }
        Command::Enumerate { x, k, height, budget } => {
            enumerate(j, &input::diagram(x)?, &input::diagram(k)?, *height, *budget)
        }
        Command::Canonicalize { ambient, pi } => canonicalize(j, &input::pi_system(pi, ambient.as_deref())?),
        Command::Catalog => catalog(j),
        Command::Table { max_rank } => table(*max_rank),
    }
}

fn classify(j: bool, g: &Gcm) -> Out {
    let c = g.classify()?;
    let dec = if g.is_symmetric() && c.is_indecomposable() { ext_decompose(g)? } else { None };
    let class_text = match c.single() {
        Some(k) => k.to_string(),
        None => {
            let parts: Vec<String> = c.components.iter().map(|p| format!("{} {:?}", p.class, p.vertices)).collect();
            format!("decomposable: {}", parts.join(" + "))
        }
    };
    let ext_text = if dec.is_some() { "Ext" } else { "not Ext" };
    let name = type_name(g).map(|t| t.0);
    let mut human = format!("{class_text}, {ext_text}\n");
    if let Some(n) = &name {
        let _ = writeln!(human, "type: {n}");
    }
    if let Some(d) = &dec {
        let _ = writeln!(human, "overextended vertex {}, special vertex {}, finite part {:?}", d.p, d.q, d.finite_part);
    }
    let v = json!({
        "rank": g.rank(),
        "type": name,
        "class": class_text,
        "components": c.components,
        "hyperbolic": c.is_hyperbolic(),
        "ext": dec.is_some(),
        "decomposition": dec,
    });
    Ok(emit(j, v, human))
}

fn subdiagrams(j: bool, ext: bool, g: &Gcm) -> Out {
    let mut out = String::new();
    if ext {
        for d in ext_subdiagrams(g)? {
            if j {
                let _ = writeln!(out, "{}", with_schema(to_value(&d)));
            } else {
                let name = d.name.clone().unwrap_or_else(|| "unnamed".into());
                let _ = writeln!(out, "{:?} {name} p={} q={} finite={:?}", d.vertices, d.p, d.q, d.finite_part);
            }
        }
        return Ok(out);
    }
    if g.rank() > SUBSET_LIST_MAX_RANK {
        return Err(pisys_core::Error::RankCapExceeded { rank: g.rank(), cap: SUBSET_LIST_MAX_RANK }.into());
    }
    for vs in connected_subsets(g) {
        let sub = g.subdiagram(&vs)?;
        let class = sub.classify()?.single().map(|c| c.to_string()).unwrap_or_default();
        let name = type_name(&sub).map(|t| t.0);
        if j {
            let v = json!({ "vertices": vs, "class": class, "type": name });
            let _ = writeln!(out, "{}", with_schema(v));
        } else {
            let _ = writeln!(out, "{vs:?} {class} {}", name.unwrap_or_else(|| "unnamed".into()));
        }
    }
    Ok(out)
}

fn pi_value(s: &PiSystem) -> Value {
    to_value(s)
}

fn check(j: bool, s: &PiSystem) -> Out {
    let name = pi_type(s).map(|t| t.0);
    let mut v = pi_value(s);
    v["type"] = json!(name);
    v["independent"] = json!(s.is_linearly_independent());
    let human = format!(
        "valid π-system of type {}{}\nroots:\n{}type matrix:\n{}",
        name.as_deref().unwrap_or("unnamed"),
        if s.is_linearly_independent() { "" } else { " (linearly dependent)" },
        roots_text(s),
        matrix_text(s.type_matrix()),
    );
    Ok(emit(j, v, human))
}

fn pi_type_cmd(j: bool, s: &PiSystem) -> Out {
    let m = s.type_matrix();
    let name = type_label(m);
    let v = json!({ "type": name, "type_matrix": m.matrix(), "independent": s.is_linearly_independent() });
    Ok(emit(j, v, format!("{name}\n{}", matrix_text(m))))
}

fn normalize(j: bool, s: &PiSystem) -> Out {
    let (w, sign, n) = s.sign_normalize()?;
    let v = json!({ "word": w, "sign": sign, "system": pi_value(&n) });
    let human = format!("sign: {sign}\nword: {:?}\nroots:\n{}", w.0, roots_text(&n));
    Ok(emit(j, v, human))
}

fn support(j: bool, s: &PiSystem) -> Out {
    let (y, w, k) = s.locate_affine_support()?;
    let v = json!({ "y": y, "word": w, "k": k });
    Ok(emit(j, v, format!("Y: {y:?}\nword: {:?}\nk: {k}\n", w.0)))
}

fn count_options(height: i64) -> Result<CountOptions, CliError> {
    let table = match std::env::var_os("PISYS_TABLE") {
        Some(p) if !p.is_empty() => Some(Arc::new(FiniteTable::load(std::path::Path::new(&p))?)),
        _ => None,
    };
    Ok(CountOptions { table, height, ..Default::default() })
}

fn certificate_text(r: &MultReport) -> String {
    let mut s = String::new();
    match &r.certificate {
        Certificate::Ext { subdiagrams, summary } => {
            let parts: Vec<String> = summary.iter().map(|(n, c)| format!("{c} × {n}")).collect();
            let _ = writeln!(s, "Ext subdiagrams: {}", if parts.is_empty() { "none".into() } else { parts.join(", ") });
            for e in subdiagrams {
                let d = &e.subdiagram;
                let _ = writeln!(
                    s,
                    "  {:?} {} finite part {} mult {}",
                    d.vertices,
                    d.name.as_deref().unwrap_or("unnamed"),
                    d.finite_name.as_deref().unwrap_or("unnamed"),
                    e.finite_mult
                );
            }
        }
        Certificate::AffineFamily { witness, word, y, k_invariants } => {
            let _ = writeln!(s, "witness {witness:?}, moved into {y:?} by {:?}; shifts give k = {k_invariants:?}", word.0);
        }
        Certificate::Finite { oracle } => {
            let _ = writeln!(s, "finite oracle {oracle}");
        }
        Certificate::None => {}
    }
    s
}

fn mult(j: bool, (kn, k): (&str, &Gcm), (xn, x): (&str, &Gcm), height: i64, cross: bool) -> Out {
    let opts = count_options(height)?;
    let r = counting::mult(k, x, &opts)?;
    let mut v = json!({ "value": r.value, "k": r.k, "x": r.x, "certificate": r.certificate });
    let mut human = format!("mult({kn}, {xn}) = {}\n{}", r.value, certificate_text(&r));
    if cross {
        if x.rank() <= CROSS_CHECK_MAX_RANK {
            let c = counting::cross_check(k, x, height, &opts)?;
            let _ = writeln!(
                human,
                "cross-check: {} classes among {} π-systems of height ≤ {}: {}",
                c.classes,
                c.systems,
                c.height,
                if c.agrees { "agrees" } else { "DISAGREES" }
            );
            v["cross_check"] = to_value(&c);
        } else {
            let _ = writeln!(human, "cross-check: skipped (rank {} > {CROSS_CHECK_MAX_RANK})", x.rank());
            v["cross_check"] = json!({ "skipped": format!("rank {} > {CROSS_CHECK_MAX_RANK}", x.rank()) });
        }
    }
    Ok(emit(j, v, human))
}

fn enumerate(j: bool, x: &Gcm, k: &Gcm, height: i64, budget: usize) -> Out {
    let rs = Arc::new(RootSystem::new(x.clone())?);
    let found = counting::enumerate_pi_systems_budget(&rs, k, height, budget)?;
    let systems: Vec<&[Vec<i64>]> = found.iter().map(|s| s.roots()).collect();
    let mut human = format!("{} π-systems\n", found.len());
    for s in &systems {
        let _ = writeln!(human, "  {s:?}");
    }
    Ok(emit(j, json!({ "height": height, "count": found.len(), "systems": systems }), human))
}

fn canonicalize(j: bool, s: &PiSystem) -> Out {
    let c = counting::canonicalize(s)?;
    let rs = s.ambient();
    let rep = canonical_pi_general(rs, &c.z, &c.finite_orbit_rep)?;
    let rep = if c.sign == Sign::Negative { rep.negated() } else { rep };
    let z_type = type_label(&rs.gcm().subdiagram(&c.z)?);
    let mut v = pi_value(&rep);
    v["sign"] = json!(c.sign);
    v["z"] = json!(c.z);
    v["z_type"] = json!(z_type);
    v["finite_orbit_rep"] = json!(c.finite_orbit_rep);
    let human = format!(
        "sign: {}\nZ: {:?} ({z_type})\nfinite part representative: {:?}\nrepresentative:\n{}",
        c.sign,
        c.z,
        c.finite_orbit_rep,
        roots_text(&rep)
    );
    Ok(emit(j, v, human))
}

fn catalog(j: bool) -> Out {
    let mut entries = Vec::new();
    let mut human = String::new();
    for e in hyperbolic_sl_catalog() {
        let class = e.gcm.classify()?.single().map(|c| c.to_string()).unwrap_or_default();
        let _ = writeln!(human, "{:<12} rank {:<2} {}{}", e.name, e.gcm.rank(), class, if e.is_ext { ", Ext" } else { "" });
        entries.push(json!({ "name": e.name, "rank": e.gcm.rank(), "is_ext": e.is_ext, "class": class, "gcm": e.gcm }));
    }
    let _ = writeln!(human, "hyp:rank2:<a>  rank 2  [[2,-a],[-a,2]] for a >= 3");
    Ok(emit(j, json!({ "entries": entries, "rank2_family": "hyp:rank2:<a>, a >= 3" }), human))
}

fn table(max_rank: usize) -> Out {
    let mut out = String::new();
    for e in counting::generate_table(max_rank)? {
        let _ = writeln!(out, "{}", serde_json::to_string(&e).expect("serializable"));
    }
    Ok(out)
}
