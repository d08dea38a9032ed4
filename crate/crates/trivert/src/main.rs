//! Command-line surface over the library: enumerate the classified
//! families, compute six-tuples and 4-manifold verdicts, decompose arcs,
//! run the surgery-homology reports, and render the model.
//!
//! Exit codes: 0 success, 1 internal consistency failure, 2 usage error,
//! 3 degenerate arc, 4 invalid trisection data.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use trivert::arc::{
    boundary_chord, composite_arc, crossing_word, decompose_word, standard_arc, Arc,
    CompositeFamily, CompositePlan, SingularModel, StandardArc,
};
use trivert::families::{is_vertical_realizable, SearchBounds};
use trivert::homology::{
    classify_double, distinguish_family, homology, DoubleForm, SurgeryPresentation,
};
use trivert::io::{self, event_records, ManifoldRecord, SixTupleRecord};
use trivert::trisection::{
    classify_four_manifold, CaseASubcase, ClassifyError, TrisectionData,
};

#[derive(Parser)]
#[command(name = "trivert", version, about = "Vertical 3-manifolds of simplified (2,0)-trisection maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseName {
    A,
    B,
    Id,
}

#[derive(Args)]
struct DataSource {
    /// Trisection-data file (see README for the schema).
    #[arg(long, conflicts_with = "builtin")]
    data: Option<PathBuf>,
    /// Builtin data: `a:SIGN:Q`, `a:SIGN:x1`, `a:SIGN:x2`, `b:POWER:SIGN:EPS2`, or `id`.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct ArcSource {
    /// Arc file: one `x y` vertex per line, rationals as `num/den`.
    #[arg(long, conflicts_with = "template")]
    arc: Option<PathBuf>,
    /// Builtin template: `aa|bb|cc|ba|cb|ac|chord` or `composite:R:S`.
    #[arg(long)]
    template: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the classified families and their invariants.
    Enumerate {
        #[arg(long, value_enum)]
        case: CaseName,
        /// Parameter range `LO..HI` (inclusive) for the transverse main family.
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Six-tuple of vertical 3-manifolds of one data set.
    SixTuple {
        #[command(flatten)]
        data: DataSource,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Source 4-manifold determined by the six-tuple.
    Classify {
        #[command(flatten)]
        data: DataSource,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Connected-sum normal form of the vertical 3-manifold over an arc.
    Decompose {
        #[command(flatten)]
        data: DataSource,
        #[command(flatten)]
        arc: ArcSource,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// First homology of a two-component surgery presentation.
    Homology {
        #[arg(long)]
        r1: i64,
        #[arg(long)]
        r2: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Intersection-form type of the doubled 4-manifold.
    Double {
        #[arg(long)]
        f1: i64,
        #[arg(long)]
        f2: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Static SVG of the model and an arc.
    Render {
        #[command(flatten)]
        arc: ArcSource,
        /// Output file.
        #[arg(short, long)]
        out: PathBuf,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load_data(src: &DataSource) -> Result<TrisectionData, ExitCode> {
    let data = if let Some(path) = &src.data {
        let text = std::fs::read_to_string(path).map_err(|e| {
            eprintln!("error: cannot read {}: {e}", path.display());
            ExitCode::from(2)
        })?;
        io::parse_data(&text).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(4)
        })?
    } else if let Some(spec) = &src.builtin {
        parse_builtin(spec).ok_or_else(|| {
            eprintln!("error: bad builtin spec `{spec}`");
            ExitCode::from(2)
        })?
    } else {
        eprintln!("error: provide --data FILE or --builtin SPEC");
        return Err(ExitCode::from(2));
    };
    let violations = data.validate();
    if !violations.is_empty() {
        for v in &violations {
            eprintln!("invalid data: {v}");
        }
        return Err(ExitCode::from(4));
    }
    Ok(data)
}

fn parse_builtin(spec: &str) -> Option<TrisectionData> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["id"] => Some(TrisectionData::identity()),
        ["a", sign, sub] => {
            let sign: i8 = match *sign {
                "+1" | "+" => 1,
                "-1" | "-" => -1,
                _ => return None,
            };
            let subcase = match *sub {
                "x1" => CaseASubcase::ExceptionalOne,
                "x2" => CaseASubcase::ExceptionalTwo,
                q => CaseASubcase::Main { q: q.parse::<i64>().ok()?.into() },
            };
            TrisectionData::case_a(sign, subcase).ok()
        }
        ["b", power, sign, eps2] => {
            let power: u8 = power.parse().ok()?;
            if power != 1 && power != 4 {
                return None;
            }
            let s = |x: &str| match x {
                "+1" | "+" => Some(1i8),
                "-1" | "-" => Some(-1),
                _ => None,
            };
            Some(TrisectionData::case_b(power, s(sign)?, s(eps2)?))
        }
        _ => None,
    }
}

fn load_arc(src: &ArcSource) -> Result<Arc, ExitCode> {
    if let Some(path) = &src.arc {
        let text = std::fs::read_to_string(path).map_err(|e| {
            eprintln!("error: cannot read {}: {e}", path.display());
            ExitCode::from(2)
        })?;
        io::parse_arc(&text).map_err(|e| {
            eprintln!("error: degenerate or malformed arc: {e}");
            ExitCode::from(3)
        })
    } else if let Some(t) = &src.template {
        parse_template(t).ok_or_else(|| {
            eprintln!("error: unknown template `{t}`");
            ExitCode::from(2)
        })
    } else {
        eprintln!("error: provide --arc FILE or --template NAME");
        Err(ExitCode::from(2))
    }
}

fn parse_template(spec: &str) -> Option<Arc> {
    if spec == "chord" {
        return Some(boundary_chord());
    }
    if let Some(which) = StandardArc::from_name(spec) {
        return Some(standard_arc(which));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    if let ["composite", r, s] = parts.as_slice() {
        let plan = CompositePlan {
            family: CompositeFamily::CcCb,
            r: r.parse().ok()?,
            s: s.parse().ok()?,
            dips: vec![],
            reversed: false,
        };
        if plan.r + plan.s == 0 || plan.r > 3 || plan.s > 3 {
            return None;
        }
        return Some(composite_arc(&plan));
    }
    None
}

fn verdict_text(data: &TrisectionData) -> String {
    match classify_four_manifold(data) {
        Ok(c) => c.verdict.to_string(),
        Err(ClassifyError::UnrecognizedTuple) => "-".to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn run_enumerate(case: CaseName, q: &str, format: Format) -> ExitCode {
    let mut rows: Vec<(String, TrisectionData)> = Vec::new();
    match case {
        CaseName::Id => rows.push(("identity".into(), TrisectionData::identity())),
        CaseName::B => {
            for power in [1u8, 4] {
                for sign in [1i8, -1] {
                    for eps2 in [1i8, -1] {
                        let label = format!("b power={power} sign={sign:+} eps2={eps2:+}");
                        rows.push((label, TrisectionData::case_b(power, sign, eps2)));
                    }
                }
            }
        }
        CaseName::A => {
            let Some((lo, hi)) = q.split_once("..") else {
                return usage_error("bad --q range, expected LO..HI");
            };
            let (Ok(lo), Ok(hi)) = (lo.parse::<i64>(), hi.parse::<i64>()) else {
                return usage_error("bad --q bounds");
            };
            if lo > hi {
                return usage_error("empty --q range");
            }
            for sign in [1i8, -1] {
                for qq in lo..=hi {
                    let sub = CaseASubcase::Main { q: BigInt::from(qq) };
                    if let Ok(data) = TrisectionData::case_a(sign, sub) {
                        rows.push((format!("a main sign={sign:+} q={qq}"), data));
                    }
                }
                for (name, sub) in [
                    ("x1", CaseASubcase::ExceptionalOne),
                    ("x2", CaseASubcase::ExceptionalTwo),
                ] {
                    let data = TrisectionData::case_a(sign, sub).expect("sporadics build");
                    rows.push((format!("a {name} sign={sign:+}"), data));
                }
            }
        }
    }

    let bounds = SearchBounds::default();
    let mut failures = 0usize;
    let mut out_rows = Vec::new();
    for (label, data) in &rows {
        let tuple = match data.six_tuple() {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{label}: {e}");
                failures += 1;
                continue;
            }
        };
        let canonical = tuple.canonical();
        // internal checks: every entry must land in the classified families
        for entry in canonical.entries() {
            if is_vertical_realizable(entry, &bounds).is_none() {
                eprintln!("{label}: entry {} not realizable", entry.render());
                failures += 1;
            }
        }
        let verdict = verdict_text(data);
        out_rows.push((label.clone(), canonical, verdict));
    }
    match format {
        Format::Text => {
            for (label, canonical, verdict) in &out_rows {
                println!("{label}");
                println!("{}", canonical.render_table());
                println!("4-manifold: {verdict}");
                println!();
            }
            println!("{} rows", out_rows.len());
        }
        Format::Json => {
            let items: Vec<_> = out_rows
                .iter()
                .map(|(label, canonical, verdict)| {
                    json!({
                        "label": label,
                        "six_tuple": SixTupleRecord::of(canonical),
                        "four_manifold": verdict,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).expect("serializable"));
        }
    }
    if failures > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run() -> Result<ExitCode, ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate { case, q, format } => Ok(run_enumerate(case, &q, format)),
        Command::SixTuple { data, format } => {
            let data = load_data(&data)?;
            let tuple = data.six_tuple().map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(4)
            })?;
            match format {
                Format::Text => {
                    println!("{}", tuple.render_table());
                    println!("canonical:");
                    println!("{}", tuple.canonical().render_table());
                }
                Format::Json => {
                    let v = json!({
                        "six_tuple": SixTupleRecord::of(&tuple),
                        "canonical": SixTupleRecord::of(&tuple.canonical()),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { data, format } => {
            let data = load_data(&data)?;
            match format {
                Format::Text => println!("{}", verdict_text(&data)),
                Format::Json => {
                    let v = json!({ "four_manifold": verdict_text(&data) });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { data, arc, format } => {
            let data = load_data(&data)?;
            let arc = load_arc(&arc)?;
            let word = crossing_word(&arc, &SingularModel::standard()).map_err(|e| {
                eprintln!("error: degenerate arc: {e}");
                ExitCode::from(3)
            })?;
            let manifold = decompose_word(&word, &data).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(3)
            })?;
            let witness = is_vertical_realizable(&manifold, &SearchBounds::default());
            match format {
                Format::Text => {
                    println!("normal form: {}", manifold.render());
                    match &witness {
                        Some(w) => println!("family witness: {w}"),
                        None => println!("family witness: none within default bounds"),
                    }
                    println!("crossing word: {}", word.render());
                }
                Format::Json => {
                    let v = json!({
                        "normal_form": ManifoldRecord::of(&manifold),
                        "family_witness": witness.map(|w| w.to_string()),
                        "crossing_word": event_records(&word),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homology { r1, r2, n, format } => {
            let p = SurgeryPresentation::new(r1, r2, n);
            let g = homology(&p);
            let report = distinguish_family(&[p]);
            debug_assert!(report.all_distinguished());
            match format {
                Format::Text => println!("{g}"),
                Format::Json => {
                    let v = json!({
                        "factors": g.factors().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                        "text": g.to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Double { f1, f2, n, format } => {
            let name = classify_double(&DoubleForm::new(f1, f2, n));
            match format {
                Format::Text => println!("{name}"),
                Format::Json => {
                    let v = json!({ "double": name.to_string() });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { arc, out } => {
            let arc = load_arc(&arc)?;
            let svg = trivert::svg::render_svg(&arc);
            std::fs::write(&out, svg).map_err(|e| {
                eprintln!("error: cannot write {}: {e}", out.display());
                ExitCode::from(2)
            })?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(code) => code,
    }
}
