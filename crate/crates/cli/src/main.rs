use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use weyl_lift::classes::{
    elliptic_classes, find_class, lift_order, parse_word_file, power_closed_form, verify_table,
    EllipticClassRecord, LiftOptions, TableId,
};
use weyl_lift::rational::format_qvec;
use weyl_lift::regular::{regular_power_witness, regularity};
use weyl_lift::rootdata::{parse_group, RootDatumFile};
use weyl_lift::splitting::{decide, splitting_classes, splittings_equivalent, Certificate, SplittingVerdict};
use weyl_lift::torusnorm::{order_elt, projection_power, sigma};
use weyl_lift::weyl::group_order;
use weyl_lift::{DeltaSpec, RootDatum, TwistedWeylElt};

#[derive(Parser)]
#[command(name = "weyl-lift", version, about = "Minimal orders of lifts of Weyl group elements")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Args)]
struct Datum {
    /// Group name (`SO(7)`, `Spin8`, `C3:adjoint`, `2A5`, `F4`), or a JSON datum file.
    group: String,
    /// Isogeny keyword; the group is then read as a Cartan type.
    #[arg(long)]
    isogeny: Option<String>,
    /// Add the diagram automorphism of order 2.
    #[arg(long)]
    twisted: bool,
}

impl Datum {
    fn build(&self) -> Result<RootDatum> {
        let rd = if self.group.ends_with(".json") || Path::new(&self.group).is_file() {
            let text = std::fs::read_to_string(&self.group).with_context(|| format!("reading {}", self.group))?;
            RootDatumFile::from_json(&text)?.build()?
        } else if let Some(iso) = &self.isogeny {
            RootDatum::named(&self.group, iso, "none")?
        } else {
            parse_group(&self.group)?
        };
        if self.twisted && rd.delta().is_none() {
            return Ok(rd.with_delta(DeltaSpec::Flip)?);
        }
        Ok(rd)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Summary of a root datum.
    Describe(Datum),
    /// Minimal order of a lift of an element.
    LiftOrder {
        #[command(flatten)]
        datum: Datum,
        /// Element as a word: `2323432134`, `1,10,2`, trailing `d` for delta.
        #[arg(long, conflicts_with = "class", required_unless_present = "class")]
        word: Option<String>,
        /// Elliptic class label or partition such as `[2,1]`.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value_t = 2)]
        torsion_bound: u64,
    },
    /// Elliptic classes of a datum with their sigma-powers.
    EllipticTable(Datum),
    /// Recompute a table (`F4`, `E7`, `2E6`, `C6`, ...) and report mismatches.
    Verify {
        table: String,
        /// Restrict to these isogenies (repeatable).
        #[arg(long)]
        isogeny: Vec<String>,
        /// `label: word` lines replacing the built-in representatives.
        #[arg(long)]
        words: Option<String>,
    },
    /// Regular orders of an element.
    Regular {
        #[command(flatten)]
        datum: Datum,
        #[arg(long)]
        word: String,
    },
    /// Whether W lifts to the group.
    Splitting {
        #[command(flatten)]
        datum: Datum,
        /// Largest torsion level searched.
        #[arg(long, default_value_t = 8)]
        torsion_bound: u64,
        /// Residue characteristic 2.
        #[arg(long)]
        char2: bool,
        /// List inequivalent certificates at the torsion bound.
        #[arg(long)]
        classes: bool,
    },
    /// Whether two certificate files give equivalent splittings.
    EquivalentSplittings {
        #[command(flatten)]
        datum: Datum,
        first: String,
        second: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("WEYL_LIFT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let f = cli.format;
    match &cli.command {
        Command::Describe(d) => describe(&d.build()?, f),
        Command::LiftOrder { datum, word, class, torsion_bound } => {
            let rd = datum.build()?;
            let x = match (word, class) {
                (Some(w), _) => TwistedWeylElt::parse(&rd, w)?,
                (None, Some(label)) => {
                    let records = elliptic_classes(&rd, datum.twisted || rd.delta().is_some())?;
                    let rec = find_class(&records, label)?;
                    rec.rep.clone().ok_or_else(|| anyhow!("class {label} has no representative word"))?
                }
                (None, None) => bail!("give --word or --class"),
            };
            lift(&rd, &x, *torsion_bound, f)
        }
        Command::EllipticTable(d) => elliptic_table(&d.build()?, d.twisted, f),
        Command::Verify { table, isogeny, words } => {
            let id = TableId::parse(table)?;
            let words = match words {
                Some(p) => Some(parse_word_file(&std::fs::read_to_string(p).with_context(|| format!("reading {p}"))?)?),
                None => None,
            };
            let list = (!isogeny.is_empty()).then_some(isogeny.as_slice());
            let report = verify_table(id, list, words.as_deref())?;
            print!(
                "{}",
                match f {
                    Format::Plain => report.to_plain(),
                    Format::Csv => report.to_csv(),
                    Format::Json => format!("{:#}\n", report.to_json()),
                }
            );
            Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Regular { datum, word } => {
            let rd = datum.build()?;
            regular(&rd, &TwistedWeylElt::parse(&rd, word)?, f)
        }
        Command::Splitting { datum, torsion_bound, char2, classes } => {
            let rd = datum.build()?;
            if *classes {
                let reps = splitting_classes(&rd, *torsion_bound)?;
                return certificate_list(&rd, &reps, f);
            }
            splitting(&rd, &decide(&rd, *char2, *torsion_bound)?, f)
        }
        Command::EquivalentSplittings { datum, first, second } => {
            let rd = datum.build()?;
            let read = |p: &str| -> Result<Certificate> {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading {p}"))?;
                Ok(Certificate::from_json(&rd, &serde_json::from_str(&text)?)?)
            };
            let eq = splittings_equivalent(&rd, &read(first)?, &read(second)?)?;
            match f {
                Format::Json => println!("{}", json!({ "equivalent": eq })),
                Format::Csv => println!("equivalent\n{eq}"),
                Format::Plain => println!("{}", if eq { "equivalent" } else { "not equivalent" }),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Key-value output shared by the single-report commands.
fn emit(pairs: &[(&str, serde_json::Value)], f: Format) {
    let text = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match f {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            println!("{:#}", serde_json::Value::Object(map));
        }
        Format::Csv => {
            println!("key,value");
            for (k, v) in pairs {
                let s = text(v);
                if s.contains([',', '"']) {
                    println!("{k},\"{}\"", s.replace('"', "\"\""));
                } else {
                    println!("{k},{s}");
                }
            }
        }
        Format::Plain => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in pairs {
                println!("{k:<width$}  {}", text(v));
            }
        }
    }
}

fn describe(rd: &RootDatum, f: Format) -> Result<ExitCode> {
    let delta = rd.delta().map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(","));
    emit(
        &[
            ("group", json!(rd.group_name())),
            ("type", json!(rd.type_label())),
            ("rank", json!(rd.rank())),
            ("roots", json!(2 * rd.positive_roots().len())),
            ("weyl_group_order", json!(group_order(rd).to_string())),
            ("center_order", json!(rd.center_order())),
            ("fundamental_group_order", json!(rd.fundamental_group_order())),
            ("rho_check", json!(format_qvec(rd.rho()))),
            ("rho_check_in_lattice", json!(rd.rho_in_lattice())),
            ("z_g_order", json!(rd.z_g().order())),
            ("delta", json!(delta)),
        ],
        f,
    );
    Ok(ExitCode::SUCCESS)
}

fn lift(rd: &RootDatum, x: &TwistedWeylElt, k: u64, f: Format) -> Result<ExitCode> {
    let r = lift_order(rd, x, LiftOptions { torsion_bound: k })?;
    emit(
        &[
            ("element", json!(x.to_string(rd))),
            ("weyl_order", json!(r.weyl_order)),
            ("lift_order", json!(r.lift_order)),
            ("minimum", json!(r.minimum)),
            ("exact", json!(r.exact)),
            ("method", json!(r.method.as_str())),
            ("sigma_order", json!(order_elt(rd, &sigma(rd, x)))),
            ("witness", json!(r.witness.to_string(rd))),
        ],
        f,
    );
    Ok(ExitCode::SUCCESS)
}

fn elliptic_table(rd: &RootDatum, twisted: bool, f: Format) -> Result<ExitCode> {
    let records = elliptic_classes(rd, twisted || rd.delta().is_some())?;
    let power = |rec: &EllipticClassRecord| -> Option<weyl_lift::TorusElt> {
        match &rec.rep {
            Some(x) => Some(projection_power(rd, &sigma(rd, x)).1),
            None => power_closed_form(rd, rec).ok().map(|(t, _)| t),
        }
    };
    let rows: Vec<(EllipticClassRecord, Option<weyl_lift::TorusElt>)> = records
        .into_iter()
        .map(|r| {
            let p = power(&r);
            (r, p)
        })
        .collect();
    match f {
        Format::Json => {
            let list: Vec<serde_json::Value> = rows
                .iter()
                .map(|(r, p)| {
                    let mut v = r.to_json();
                    v["sigma_power"] = json!(p);
                    v["lift_order"] = json!(p.as_ref().map(|t| r.order * t.order()));
                    v
                })
                .collect();
            println!("{:#}", json!({ "group": rd.group_name(), "classes": list }));
        }
        Format::Csv => {
            println!("label,word,order,sigma_power,lift_order");
            for (r, p) in &rows {
                println!(
                    "\"{}\",{},{},{},{}",
                    r.label,
                    r.rep_word.clone().unwrap_or_default(),
                    r.order,
                    p.as_ref().map(|t| format_qvec(t.coords())).unwrap_or_default().replace(',', " "),
                    p.as_ref().map(|t| (r.order * t.order()).to_string()).unwrap_or_default()
                );
            }
        }
        Format::Plain => {
            println!("{}", rd.group_name());
            let width = rows.iter().map(|(r, _)| r.label.len()).max().unwrap_or(5).max(5);
            println!("{:<width$}  {:>4}  {:>4}  word", "class", "o(w)", "o~");
            for (r, p) in &rows {
                let lift = p.as_ref().map(|t| (r.order * t.order()).to_string()).unwrap_or_else(|| "-".into());
                println!("{:<width$}  {:>4}  {:>4}  {}", r.label, r.order, lift, r.rep_word.clone().unwrap_or_default());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn regular(rd: &RootDatum, x: &TwistedWeylElt, f: Format) -> Result<ExitCode> {
    let rep = regularity(rd, x);
    let (o, t) = projection_power(rd, &sigma(rd, x));
    let mut laws = Vec::new();
    for &d in rep.regular_orders.iter().filter(|&&d| d > 1) {
        let target = rd.torus_scale(&rd.z_g(), (o / d) as i64);
        let witness = regular_power_witness(rd, x, d)?.map(|y| y.to_string(rd));
        laws.push(json!({ "d": d, "holds_here": t == target, "class_witness": witness }));
    }
    emit(
        &[
            ("element", json!(rep.word)),
            ("order", json!(rep.order)),
            ("regular_orders", json!(rep.regular_orders)),
            ("z_regular", json!(rep.z_regular)),
            ("eigenspace_dims", json!(rep.eigenspace_dims)),
            ("sigma_power", json!(format_qvec(t.coords()))),
            ("power_law", json!(laws)),
        ],
        f,
    );
    Ok(ExitCode::SUCCESS)
}

fn certificate_text(c: &Certificate) -> String {
    c.t.iter().enumerate().map(|(i, t)| format!("t_{} = {}", i + 1, format_qvec(t.coords()))).collect::<Vec<_>>().join("; ")
}

fn splitting(rd: &RootDatum, v: &SplittingVerdict, f: Format) -> Result<ExitCode> {
    if f == Format::Json {
        let mut out = v.to_json();
        out["group"] = json!(rd.group_name());
        println!("{out:#}");
        return Ok(ExitCode::SUCCESS);
    }
    let verdict = match v.splits {
        Some(true) => "splits",
        Some(false) => "does not split",
        None => "undecided",
    };
    let mut pairs = vec![
        ("group", json!(rd.group_name())),
        ("verdict", json!(verdict)),
        ("source", json!(v.source.as_str())),
        ("classification_only", json!(v.classification_only)),
    ];
    if let Some(k) = v.torsion_bound {
        pairs.push(("torsion_bound", json!(k)));
    }
    if let Some(c) = &v.certificate {
        pairs.push(("certificate", json!(certificate_text(c))));
    }
    for o in &v.obstructions {
        pairs.push(("obstruction", json!(o.describe())));
    }
    emit(&pairs, f);
    Ok(ExitCode::SUCCESS)
}

fn certificate_list(rd: &RootDatum, reps: &[Certificate], f: Format) -> Result<ExitCode> {
    match f {
        Format::Json => {
            println!("{:#}", json!({ "group": rd.group_name(), "certificates": reps.iter().map(Certificate::to_json).collect::<Vec<_>>() }));
        }
        _ => {
            let pairs: Vec<(&str, serde_json::Value)> = std::iter::once(("classes", json!(reps.len())))
                .chain(reps.iter().map(|c| ("certificate", json!(certificate_text(c)))))
                .collect();
            emit(&pairs, f);
        }
    }
    Ok(ExitCode::SUCCESS)
}
