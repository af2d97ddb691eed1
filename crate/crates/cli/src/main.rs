use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cubek3::binforms::{classify_case, stability, BinaryForm, CaseId, Stability, TABLE};
use cubek3::cubio::{analyze, cubic_from_points, AnalysisReport, CubicForm, PlanePoint, ProjLine};
use cubek3::e6lines::{
    fmt_class, nodal_line_count, nodal_line_orbits, standard_node_roots, tritangents, weyl_report,
};
use cubek3::f3orbits::{cusp_count, fmt_vec, from_signed, wd5_orbits_on_short, we6_stabilizer};
use cubek3::kodaira::fiber_configuration;
use cubek3::lattices::{canonical_data, discriminant_form, fqf_isometric, parse_lattice, PICARD_TABLE};
use cubek3::rational::{parse_rational_list, Q};
use cubek3::verify::Registry;
use cubek3::Error;

const SCHEMA_VERSION: u32 = 1;

const EXIT_DOMAIN: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Cubic surfaces with a pair of skew lines, their binary forms (F5, F2),
/// and the K3 lattice data attached to them.
#[derive(Parser)]
#[command(name = "cubek3", version)]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stability and case of a pair (F5, F2).
    Classify(PairArgs),
    /// Full report for a cubic surface and two skew lines on it.
    Analyze(AnalyzeArgs),
    /// Blow up six plane points and analyze a pair of skew lines.
    FromPoints(PointsArgs),
    /// Print the case table and the Picard lattice table.
    Tables,
    /// W(D5)-orbits on orthogonal k-sets of short classes.
    Orbits {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        k: u8,
    },
    /// Line combinatorics of the cubic surface.
    Lines {
        /// Also list the nodal line orbits for the first k standard node roots.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        nodes: Option<u8>,
    },
    /// Invariants of a lattice such as "U+A2^5" or "A2(-1)+A2^4".
    Lattice {
        #[arg(long)]
        expr: String,
        /// Check that this lattice has discriminant form -q of the first.
        #[arg(long)]
        complement: Option<String>,
    },
    /// Run the verification suite.
    Verify {
        /// Run only the named checks.
        #[arg(long)]
        only: Vec<String>,
        /// Include wall-clock times.
        #[arg(long)]
        timing: bool,
        /// List the check names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Six coefficients of F5, x0^5 first.
    #[arg(long, allow_hyphen_values = true)]
    f5: String,
    /// Three coefficients of F2, x0^2 first.
    #[arg(long, allow_hyphen_values = true)]
    f2: String,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Twenty coefficients, monomials in lexicographic order x0^3, x0^2 x1, ..., x3^3.
    #[arg(long, allow_hyphen_values = true)]
    cubic: String,
    /// First line as two points: "a,b,c,d;e,f,g,h".
    #[arg(long, allow_hyphen_values = true)]
    l: String,
    /// Second line, skew to the first.
    #[arg(long, allow_hyphen_values = true)]
    m: String,
}

#[derive(Args)]
struct PointsArgs {
    /// Six points of P^2: "x,y,z;x,y,z;...".
    #[arg(long, allow_hyphen_values = true)]
    points: String,
    /// Chords p_i p_j and p_k p_l to use as the skew pair, as "i,j,k,l".
    #[arg(long, default_value = "1,2,1,3")]
    pair: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::WrongDegree { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Output {
    value: Value,
    text: String,
    verification_failed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let name = command_name(&cli.command);
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                let mut obj = json!({ "schema_version": SCHEMA_VERSION, "command": name });
                obj["result"] = out.value;
                emit(&format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable")));
            } else {
                emit(&out.text);
            }
            if out.verification_failed {
                ExitCode::from(EXIT_VERIFY)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            let (kind, msg, code) = match f {
                Failure::Usage(m) => ("usage", m, EXIT_USAGE),
                Failure::Domain(m) => ("domain", m, EXIT_DOMAIN),
            };
            if cli.json {
                let obj = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "error": { "kind": kind, "message": msg },
                });
                emit(&format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable")));
            }
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify(_) => "classify",
        Command::Analyze(_) => "analyze",
        Command::FromPoints(_) => "from-points",
        Command::Tables => "tables",
        Command::Orbits { .. } => "orbits",
        Command::Lines { .. } => "lines",
        Command::Lattice { .. } => "lattice",
        Command::Verify { .. } => "verify",
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn run(c: &Command) -> Result<Output, Failure> {
    match c {
        Command::Classify(a) => classify(a),
        Command::Analyze(a) => {
            let f = CubicForm::parse(&a.cubic)?;
            let l = ProjLine::parse(&a.l)?;
            let m = ProjLine::parse(&a.m)?;
            let r = analyze(&f, &l, &m)?;
            Ok(Output { text: report_text(&r), value: to_value(&r), verification_failed: false })
        }
        Command::FromPoints(a) => from_points(a),
        Command::Tables => Ok(tables()),
        Command::Orbits { k } => orbits(usize::from(*k)),
        Command::Lines { nodes } => lines(nodes.map(usize::from)),
        Command::Lattice { expr, complement } => lattice(expr, complement.as_deref()),
        Command::Verify { only, timing, list } => verify(only, *timing, *list),
    }
}

fn parse_form(s: &str, degree: usize) -> Result<BinaryForm, Failure> {
    let c = parse_rational_list(s)?;
    if c.len() != degree + 1 {
        return Err(Failure::Usage(format!(
            "expected {} coefficients for a form of degree {degree}, got {}",
            degree + 1,
            c.len()
        )));
    }
    Ok(BinaryForm::new(c))
}

fn verdict_label(s: Stability) -> &'static str {
    match s {
        Stability::Stable => "stable",
        Stability::StrictlySemistable => "strictly semistable",
        Stability::Unstable => "unstable",
    }
}

fn classify(a: &PairArgs) -> Result<Output, Failure> {
    let f5 = parse_form(&a.f5, 5)?;
    let f2 = parse_form(&a.f2, 2)?;
    let verdict = stability(&f5, &f2)?;
    let case = classify_case(&f5, &f2)?;
    let fibers = match case.case_id {
        CaseId::Cusp => None,
        _ => Some(fiber_configuration(&f5, &f2)?),
    };
    let stratum = cubek3::cubio::stratum_label(case.case_id);
    let mut text = String::new();
    let _ = writeln!(text, "F5: {f5}\nF2: {f2}");
    let _ = writeln!(text, "stability: {}", verdict_label(verdict.verdict));
    if let Some(w) = &verdict.witness {
        let _ = writeln!(text, "max weight: {} at {} (m5 = {}, m2 = {})", w.weight, w.locus, w.m5, w.m2);
    }
    let _ = writeln!(text, "case: {}", case.case_id);
    let _ = writeln!(text, "type vector: {:?}", case.type_vector);
    if let Some(fc) = &fibers {
        let parts: Vec<String> = fc.multiset().iter().map(|(t, n)| format!("{n} {t}")).collect();
        let _ = writeln!(text, "fibres: {} (Euler number {})", parts.join(", "), fc.euler_total);
    }
    if let (Some(r), Some(e)) = (case.nodes, case.eckardt) {
        let _ = writeln!(text, "nodes: {r}\nEckardt points: {e}");
    }
    let _ = writeln!(text, "stratum: {}", stratum.as_deref().unwrap_or("none"));
    let value = json!({
        "f5": to_value(&f5),
        "f2": to_value(&f2),
        "stability": to_value(&verdict),
        "case": to_value(&case),
        "fibers": to_value(&fibers),
        "stratum": stratum,
    });
    Ok(Output { value, text, verification_failed: false })
}

fn report_text(r: &AnalysisReport) -> String {
    let mut t = String::new();
    let n = &r.normal_form;
    let _ = writeln!(t, "A00 = {}, A01 = {}, A11 = {}", n.a00, n.a01, n.a11);
    let _ = writeln!(t, "B0 = {}, B1 = {}", n.b0, n.b1);
    let _ = writeln!(t, "F5 ~ {}\nF2 ~ {}", r.f5.canonical(), r.f2.canonical());
    let _ = writeln!(t, "bordered determinant = -F5: {}", r.bordered_identity);
    let _ = writeln!(t, "stability: {}", verdict_label(r.stability.verdict));
    let _ = writeln!(t, "case: {}", r.case.case_id);
    let _ = writeln!(t, "type vector: {:?}", r.case.type_vector);
    if let Some(fc) = &r.fibers {
        let parts: Vec<String> = fc.multiset().iter().map(|(t, n)| format!("{n} {t}")).collect();
        let _ = writeln!(t, "fibres: {}", parts.join(", "));
    }
    if let (Some(rn), Some(e)) = (r.case.nodes, r.case.eckardt) {
        let _ = writeln!(t, "nodes: {rn}\nEckardt points: {e}");
    }
    let _ = writeln!(t, "stratum: {}", r.stratum.as_deref().unwrap_or("none"));
    if let (Some(m), Some(tt)) = (&r.m_t, &r.t_t) {
        let _ = writeln!(t, "M(t) = {m}, T(t) = {tt} (generic for this type)");
    }
    if let Some(s) = &r.shioda {
        let _ = writeln!(t, "Mordell-Weil order: {}", s.mw_order);
    }
    t
}

fn parse_points(s: &str) -> Result<Vec<PlanePoint>, Failure> {
    let pts: Vec<PlanePoint> = s
        .split(';')
        .map(|p| {
            let v = parse_rational_list(p)?;
            let arr: [Q; 3] = v.try_into().map_err(|_| {
                Failure::Usage(format!("point `{}` needs 3 coordinates", p.trim()))
            })?;
            Ok(arr)
        })
        .collect::<Result<_, Failure>>()?;
    if pts.len() != 6 {
        return Err(Failure::Usage(format!("expected 6 points, got {}", pts.len())));
    }
    Ok(pts)
}

fn from_points(a: &PointsArgs) -> Result<Output, Failure> {
    let pts = parse_points(&a.points)?;
    let idx: Vec<usize> = a
        .pair
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad index `{x}`"))))
        .collect::<Result<_, _>>()?;
    if idx.len() != 4 || idx.iter().any(|&i| !(1..=6).contains(&i)) || idx[0] == idx[1] || idx[2] == idx[3] {
        return Err(Failure::Usage("--pair needs four indices i,j,k,l in 1..6 with i != j, k != l".into()));
    }
    let b = cubic_from_points(&pts)?;
    let l = b.chord(idx[0], idx[1]).expect("valid chord").clone();
    let m = b.chord(idx[2], idx[3]).expect("valid chord").clone();
    let r = analyze(&b.cubic, &l, &m)?;
    let mut text = String::new();
    let _ = writeln!(text, "cubic: {}", b.cubic);
    let _ = writeln!(text, "l: {l}\nm: {m}");
    text.push_str(&report_text(&r));
    let value = json!({
        "cubic": to_value(&b.cubic),
        "lines": to_value(&b.lines),
        "l": to_value(&l),
        "m": to_value(&m),
        "analysis": to_value(&r),
    });
    Ok(Output { value, text, verification_failed: false })
}

fn tables() -> Output {
    let mut text = format!("{:<5} {:<22} {:<11} {:<29} r  e\n", "case", "type vector", "conic", "Kodaira fibres");
    let mut rows = Vec::new();
    for row in TABLE.iter() {
        let kod: Vec<String> = row.kodaira.iter().map(|(t, n)| format!("{n} {t}")).collect();
        let _ = writeln!(
            text,
            "{:<5} {:<22} {:<11} {:<29} {}  {}",
            row.id.label(),
            format!("{:?}", row.type_vector),
            row.conic_fibres,
            kod.join(", "),
            row.nodes,
            row.eckardt
        );
        rows.push(json!({
            "case": row.id.label(),
            "type_vector": row.type_vector,
            "conic_fibres": row.conic_fibres,
            "kodaira": kod,
            "nodes": row.nodes,
            "eckardt": row.eckardt,
        }));
    }
    text.push_str("\nrow  M(t)                T(t)\n");
    let mut lat = Vec::new();
    for (row, m, t) in PICARD_TABLE {
        let _ = writeln!(text, "{row:<4} {m:<19} {t}");
        lat.push(json!({ "row": row, "m": m, "t": t }));
    }
    Output { value: json!({ "cases": rows, "lattices": lat }), text, verification_failed: false }
}

fn orbits(k: usize) -> Result<Output, Failure> {
    let reports = wd5_orbits_on_short(k)?;
    let gk = we6_stabilizer(k)?;
    let index_sum: usize = reports.iter().map(|r| r.stabilizer_index_in_gk).sum();
    let mut text = String::new();
    let _ = writeln!(text, "k = {k}: {} orthogonal sets, |G_k| = {}", gk.sets, gk.order);
    for r in &reports {
        let rep: Vec<String> = r.representative.iter().map(|v| fmt_vec(&from_signed(v))).collect();
        let _ = writeln!(
            text,
            "orbit of {}: size {}, stabilizer {}, index {}",
            rep.join(" "),
            r.orbit_size,
            r.stabilizer_order,
            r.stabilizer_index_in_gk
        );
    }
    let _ = writeln!(text, "index sum: {index_sum}");
    let value = json!({ "k": k, "g_k": to_value(&gk), "orbits": to_value(&reports), "index_sum": index_sum });
    Ok(Output { value, text, verification_failed: false })
}

fn lines(nodes: Option<usize>) -> Result<Output, Failure> {
    let w = weyl_report();
    let roots = standard_node_roots();
    let counts: Vec<usize> = (1..=4).map(|k| nodal_line_count(&roots[..k])).collect::<Result<_, _>>()?;
    let mut text = String::new();
    let _ = writeln!(text, "|W(E6)| = {}, line stabilizer {} (index {})", w.order, w.line_stabilizer, w.line_stabilizer_index);
    let _ = writeln!(text, "tritangent planes: {}", tritangents().len());
    let _ = writeln!(text, "lines through nodes, 1..4 nodes: {counts:?}");
    let _ = writeln!(text, "cusps: {}", cusp_count());
    let mut value = json!({
        "weyl": to_value(&w),
        "tritangents": tritangents().len(),
        "nodal_line_counts": counts,
        "cusps": cusp_count(),
    });
    if let Some(k) = nodes {
        let orbs = nodal_line_orbits(&roots[..k])?;
        let _ = writeln!(text, "node roots: {}", roots[..k].iter().map(fmt_class).collect::<Vec<_>>().join(", "));
        let mut list = Vec::new();
        for o in &orbs {
            let names: Vec<String> = o.iter().map(fmt_class).collect();
            let _ = writeln!(text, "  {}", names.join(", "));
            list.push(names);
        }
        value["nodal_line_orbits"] = json!(list);
    }
    Ok(Output { value, text, verification_failed: false })
}

fn lattice(expr: &str, complement: Option<&str>) -> Result<Output, Failure> {
    let l = parse_lattice(expr)?;
    let sig = l.signature()?;
    let q = discriminant_form(&l)?;
    let mut text = String::new();
    let _ = writeln!(text, "{expr}: rank {}, signature {sig:?}, even {}", l.rank(), l.is_even());
    let _ = writeln!(text, "determinant {}, discriminant group {:?}", l.det(), q.abelian_invariants());
    let _ = writeln!(text, "discriminant form: {}", canonical_data(&q));
    let mut value = json!({
        "expr": expr,
        "rank": l.rank(),
        "signature": [sig.0, sig.1],
        "even": l.is_even(),
        "determinant": l.det().to_string(),
        "discriminant_group": q.abelian_invariants(),
        "discriminant_form": canonical_data(&q),
    });
    if let Some(other) = complement {
        let t = parse_lattice(other)?;
        let qt = discriminant_form(&t)?;
        let ok = fqf_isometric(&qt, &q.negate())?;
        let _ = writeln!(text, "q({other}) = -q({expr}): {ok}");
        value["complement"] = json!({ "expr": other, "matches": ok });
    }
    Ok(Output { value, text, verification_failed: false })
}

fn verify(only: &[String], timing: bool, list: bool) -> Result<Output, Failure> {
    let registry = Registry::default();
    if list {
        let names = registry.names();
        let text = names.iter().map(|n| format!("{n}\n")).collect();
        return Ok(Output { value: json!({ "checks": names }), text, verification_failed: false });
    }
    if let Some(bad) = only.iter().find(|n| registry.get(n).is_none()) {
        return Err(Failure::Usage(format!("unknown check `{bad}`")));
    }
    let r = registry.run(only, timing);
    let mut text = String::new();
    for c in &r.checks {
        let _ = write!(
            text,
            "[{}] {:>2} {}: expected {}, computed {}",
            if c.outcome.pass { "PASS" } else { "FAIL" },
            c.criterion,
            c.name,
            c.outcome.expected,
            c.outcome.computed
        );
        if let Some(ms) = c.millis {
            let _ = write!(text, " ({ms} ms)");
        }
        text.push('\n');
    }
    let _ = writeln!(text, "{} passed, {} failed", r.passed, r.failed);
    Ok(Output { value: to_value(&r), text, verification_failed: !r.pass })
}
