//! Recomputes a table of elliptic classes by every available method.

use rayon::prelude::*;
use serde_json::json;

use super::{
    attach_words, elliptic_classes, length_identity, power_closed_form, EllipticClassRecord,
    PowerKind,
};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rootdata::{Family, RootDatum, TorusElt};
use crate::torusnorm::{projection_power, sigma, sigma_power_via_good_data};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    F4,
    G2,
    E6,
    E6Twisted,
    E7,
    E8,
    D4Triality,
    Classical { family: Family, rank: usize, twisted: bool },
}

impl TableId {
    /// `F4`, `2E6`, `3D4`, `C6`, `2A5`, `2D4`, ...
    pub fn parse(s: &str) -> Result<TableId> {
        let t = s.trim();
        let unknown = || Error::UnknownTable(t.to_string());
        Ok(match t {
            "F4" => TableId::F4,
            "G2" => TableId::G2,
            "E6" => TableId::E6,
            "2E6" => TableId::E6Twisted,
            "E7" => TableId::E7,
            "E8" => TableId::E8,
            "3D4" => TableId::D4Triality,
            _ => {
                let (twisted, body) = match t.strip_prefix('2') {
                    Some(b) => (true, b),
                    None => (false, t),
                };
                let family = match body.chars().next() {
                    Some('A') => Family::A,
                    Some('B') => Family::B,
                    Some('C') => Family::C,
                    Some('D') => Family::D,
                    _ => return Err(unknown()),
                };
                let rank: usize = body[1..].parse().map_err(|_| unknown())?;
                let min = match family {
                    Family::D => 3,
                    Family::B | Family::C => 2,
                    _ => 1,
                };
                let twist_ok = !twisted || matches!(family, Family::A | Family::D) && rank >= 2;
                if rank < min || rank > 8 || !twist_ok {
                    return Err(unknown());
                }
                TableId::Classical { family, rank, twisted }
            }
        })
    }

    pub fn type_label(&self) -> String {
        match self {
            TableId::F4 => "F4".into(),
            TableId::G2 => "G2".into(),
            TableId::E6 | TableId::E6Twisted => "E6".into(),
            TableId::E7 => "E7".into(),
            TableId::E8 => "E8".into(),
            TableId::D4Triality => "D4".into(),
            TableId::Classical { family, rank, .. } => format!("{family:?}{rank}"),
        }
    }

    pub fn delta(&self) -> &'static str {
        match self {
            TableId::E6Twisted | TableId::Classical { twisted: true, .. } => "flip",
            TableId::D4Triality => "triality",
            _ => "none",
        }
    }

    pub fn twisted(&self) -> bool {
        self.delta() != "none"
    }

    pub fn name(&self) -> String {
        let prefix = match self {
            TableId::D4Triality => "3",
            _ if self.twisted() => "2",
            _ => "",
        };
        format!("{prefix}{}", self.type_label())
    }
}

/// Every named isogeny of the type whose lattice is stable under `delta`,
/// without duplicates, simply connected first.
pub fn named_isogenies(type_label: &str, delta: &str) -> Result<Vec<RootDatum>> {
    let sc = RootDatum::named(type_label, "sc", delta)?;
    let mut names: Vec<String> = vec!["sc".into(), "adjoint".into()];
    if let Some(t) = sc.simple_type() {
        match t.family {
            Family::A => {
                let m = t.rank + 1;
                names.extend((2..m).filter(|k| m % k == 0).map(|k| format!("SL/{k}")));
            }
            Family::D => {
                names.push("SO".into());
                if t.rank % 2 == 0 {
                    names.push("semispin".into());
                }
            }
            _ => {}
        }
    }
    let mut out: Vec<RootDatum> = Vec::new();
    for name in names {
        let Ok(rd) = RootDatum::named(type_label, &name, delta) else { continue };
        let same = |a: &QMatrix, b: &QMatrix| {
            crate::rootdata::lattice::sublattice(a, &crate::linalg::inverse(b).unwrap())
                && crate::rootdata::lattice::sublattice(b, &crate::linalg::inverse(a).unwrap())
        };
        if !out.iter().any(|o| same(o.cochar_basis(), rd.cochar_basis())) {
            out.push(rd);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct IsogenyRow {
    pub group: String,
    pub direct: Option<TorusElt>,
    pub formula: Option<TorusElt>,
    pub closed_form: Option<TorusElt>,
    pub sigma_power: TorusElt,
    pub kind: PowerKind,
    /// `o(w) * o(sigma(w)^{o(w)})`, the order of every lift (the class is elliptic).
    pub lift_order: u64,
    pub agree: bool,
}

#[derive(Debug, Clone)]
pub struct ClassRow {
    pub record: EllipticClassRecord,
    pub length_identity: Option<bool>,
    pub per_isogeny: Vec<IsogenyRow>,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub table: String,
    pub groups: Vec<String>,
    pub rows: Vec<ClassRow>,
}

impl TableReport {
    pub fn mismatches(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| r.mismatches.iter().map(move |m| format!("{}: {m}", r.record.label)))
            .collect()
    }

    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.mismatches.is_empty())
    }

    pub fn row(&self, label: &str) -> Option<&ClassRow> {
        self.rows.iter().find(|r| r.record.label == label)
    }

    pub fn to_csv(&self) -> String {
        let mut head = vec!["label".to_string(), "o(w)".into(), "listed_order".into()];
        for g in &self.groups {
            head.push(format!("sigma_power[{g}]"));
            head.push(format!("sigma_power_order[{g}]"));
            head.push(format!("lift_order[{g}]"));
        }
        head.push("exact".into());
        head.push("agree".into());
        let mut out = head.join(",") + "\n";
        for r in &self.rows {
            let mut cells = vec![
                csv_cell(&r.record.label),
                r.record.order.to_string(),
                r.record.listed_order.map(|o| o.to_string()).unwrap_or_default(),
            ];
            for g in &r.per_isogeny {
                cells.push(g.kind.as_str().to_string());
                cells.push(g.sigma_power.order().to_string());
                cells.push(g.lift_order.to_string());
            }
            cells.push("true".into());
            cells.push(r.mismatches.is_empty().to_string());
            out += &(cells.join(",") + "\n");
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "table": self.table,
            "groups": self.groups,
            "pass": self.pass(),
            "mismatches": self.mismatches(),
            "rows": self.rows.iter().map(|r| {
                let mut v = r.record.to_json();
                v["length_identity"] = json!(r.length_identity);
                v["mismatches"] = json!(r.mismatches);
                v["isogenies"] = json!(r.per_isogeny.iter().map(|g| json!({
                    "group": g.group,
                    "sigma_power": g.sigma_power,
                    "sigma_power_order": g.sigma_power.order(),
                    "kind": g.kind,
                    "direct": g.direct,
                    "formula": g.formula,
                    "closed_form": g.closed_form,
                    "lift_order": g.lift_order,
                    "exact": true,
                    "agree": g.agree,
                })).collect::<Vec<_>>());
                v
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_plain(&self) -> String {
        let mut lines = vec![format!("table {}", self.table)];
        let width = self.rows.iter().map(|r| r.record.label.len()).max().unwrap_or(5).max(5);
        let mut head = format!("{:<width$}  {:>4}  {:>6}", "class", "o(w)", "listed");
        for g in &self.groups {
            head += &format!("  {g:>14}");
        }
        lines.push(head);
        for r in &self.rows {
            let listed = r.record.listed_order.map(|o| o.to_string()).unwrap_or_else(|| "-".into());
            let mut line = format!("{:<width$}  {:>4}  {:>6}", r.record.label, r.record.order, listed);
            for g in &r.per_isogeny {
                line += &format!("  {:>14}", format!("{} o~={}", g.kind.as_str(), g.lift_order));
            }
            if !r.mismatches.is_empty() {
                line += "  MISMATCH";
            }
            lines.push(line);
        }
        let m = self.mismatches();
        lines.push(if m.is_empty() { "pass".into() } else { format!("FAIL ({} mismatches)", m.len()) });
        lines.extend(m.into_iter().map(|s| format!("  {s}")));
        lines.join("\n") + "\n"
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Verifies a table for the listed isogenies (all named ones when `None`).
pub fn verify_table(
    table: TableId,
    isogenies: Option<&[String]>,
    words: Option<&[(String, String)]>,
) -> Result<TableReport> {
    let ty = table.type_label();
    let data: Vec<RootDatum> = match isogenies {
        None => named_isogenies(&ty, table.delta())?,
        Some(list) => list.iter().map(|i| RootDatum::named(&ty, i, table.delta())).collect::<Result<_>>()?,
    };
    let first = data.first().ok_or_else(|| Error::UnknownTable(table.name()))?;
    let mut records = elliptic_classes(first, table.twisted())?;
    if let Some(w) = words {
        attach_words(first, &mut records, w)?;
    }
    let rows: Vec<ClassRow> = records.into_par_iter().map(|rec| check_record(&data, rec)).collect();
    Ok(TableReport { table: table.name(), groups: data.iter().map(RootDatum::group_name).collect(), rows })
}

fn check_record(data: &[RootDatum], rec: EllipticClassRecord) -> ClassRow {
    let mut mismatches = Vec::new();
    if let Some(listed) = rec.listed_order {
        if listed != rec.order {
            mismatches.push(format!("listed order {listed}, computed order {}", rec.order));
        }
    }
    let length = match (&rec.rep, &rec.good_data) {
        (Some(x), Some(g)) => {
            let ok = length_identity(&data[0], x, rec.order, g);
            if !ok {
                mismatches.push("length identity fails".into());
            }
            Some(ok)
        }
        _ => None,
    };
    let mut per = Vec::new();
    for rd in data {
        let direct = rec.rep.as_ref().map(|x| {
            let (o, t) = projection_power(rd, &sigma(rd, x));
            debug_assert_eq!(o, rec.order);
            t
        });
        let formula = match rec.good_data.as_ref().map(|g| sigma_power_via_good_data(rd, g)) {
            Some(Ok(t)) => Some(t),
            Some(Err(e)) => {
                mismatches.push(format!("{}: {e}", rd.group_name()));
                None
            }
            None => None,
        };
        let closed = power_closed_form(rd, &rec).ok().map(|(t, _)| t);
        let values: Vec<&TorusElt> = [&direct, &formula, &closed].into_iter().flatten().collect();
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        if !agree {
            mismatches.push(format!("{}: methods disagree", rd.group_name()));
        }
        let Some(value) = values.first().map(|t| (*t).clone()) else {
            mismatches.push(format!("{}: no method applies", rd.group_name()));
            continue;
        };
        per.push(IsogenyRow {
            group: rd.group_name(),
            kind: PowerKind::of(rd, &value),
            lift_order: rec.order * value.order(),
            sigma_power: value,
            direct,
            formula,
            closed_form: closed,
            agree,
        });
    }
    ClassRow { record: rec, length_identity: length, per_isogeny: per, mismatches }
}
