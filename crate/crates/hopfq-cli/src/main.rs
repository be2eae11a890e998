//! `hopfq` — exact verification and construction of non-associative
//! bimonoids and Hopf quasigroups from structure-constant files.
//!
//! Every verifying subcommand prints a deterministic report (JSON by
//! default) and exits 0 when all checked laws pass, 1 on a law failure
//! (the witness is in the report), and 2 on input or shape errors.

mod report;

use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use hopfq::algebra::AlgebraicStructure;
use hopfq::catalog;
use hopfq::deform::{deform, make_cocycle};
use hopfq::error::Error;
use hopfq::formats::{ElementJson, FunctionalJson, StructureJson};
use hopfq::laws;
use hopfq::linmap::LinMap;
use hopfq::loops::{chein_double, loop_algebra, parse_loop_text};
use hopfq::pairing::{
    actions_from_pairing, bowtie, check_pairing, double_cross_product, make_skew_pairing,
    pairing_to_cocycle,
};
use hopfq::qtyd::{
    biproduct, check_quasitriangular, iso_w, make_quasitriangular, projection_from_pairing,
    split_to_yd,
};
use hopfq::{Field, Result};

use report::Report;

#[derive(Parser)]
#[command(name = "hopfq", version, about = "Exact Hopf-quasigroup toolkit")]
struct Cli {
    /// Ground field: `q` for rationals, `p/N` for the prime field mod N.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Report rendering: `json` or `text`.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a structure file against a named law suite.
    Verify {
        /// Structure JSON path, or `-` for stdin.
        structure: String,
        #[arg(long)]
        suite: String,
    },
    /// Loop-table operations: classify, linearize, or Chein-double.
    Loop {
        #[command(subcommand)]
        op: LoopOp,
    },
    /// Twist a structure by a two-cocycle.
    Deform {
        structure: String,
        cocycle: String,
        /// Rescale a non-normal cocycle instead of rejecting it.
        #[arg(long)]
        auto_normalize: bool,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Skew-pairing operations.
    Pairing {
        #[command(subcommand)]
        op: PairingOp,
    },
    /// Double crossproduct from the actions a pairing induces.
    Dcp {
        a: String,
        h: String,
        tau: String,
    },
    /// Quasitriangular structures, projections, splitting and biproducts.
    Qt {
        #[command(subcommand)]
        op: QtOp,
    },
    /// Emit a builtin object (structure, loop, pairing or R-matrix).
    Builtin {
        /// One of: taft4, ms32, ms32-algebra, tau-prinej, r-alpha, group.
        key: String,
        /// Parameter for r-alpha, e.g. `1`, `-2`, `3/5`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Group table (loop text) for the `group` key.
        #[arg(long)]
        table: Option<String>,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Re-render a saved report.
    Report { file: String },
}

#[derive(Subcommand)]
enum LoopOp {
    /// Classify a loop table against the tracked identities.
    Classify { table: String },
    /// Linearize a loop table over the field.
    Algebra {
        table: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Chein double of a group table.
    Chein {
        table: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum PairingOp {
    /// Run the skew-pairing suite.
    Check { a: String, h: String, tau: String },
    /// Compute the convolution inverse of the pairing.
    Invert {
        a: String,
        h: String,
        tau: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Emit the induced two-cocycle on A⊗H.
    Cocycle {
        a: String,
        h: String,
        tau: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Build the twisted tensor product A⋈H.
    Bowtie {
        a: String,
        h: String,
        tau: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum QtOp {
    /// Verify the quasitriangular axioms for an R-matrix, or sample the
    /// builtin one-parameter family over a list of exact parameters.
    Check {
        h: String,
        /// Element JSON for R; omit to sample the builtin family instead.
        r: Option<String>,
        /// Comma-separated parameter list for the builtin family.
        #[arg(long, allow_hyphen_values = true, default_value = "0,1,-2,3/5")]
        alphas: String,
    },
    /// Build and verify the strong projection from a pairing and an R-matrix.
    Project {
        a: String,
        h: String,
        tau: String,
        /// Element JSON for R; ignored when --alpha is given.
        r: String,
        /// Use the builtin one-parameter R-matrix family on the 4-dimensional
        /// Taft algebra with this exact rational parameter.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Split a saved projection bundle into its braided structure.
    Split {
        bundle: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Assemble the biproduct from a saved projection bundle and compare it
    /// with the twisted tensor product.
    Biproduct {
        bundle: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn parse_field(s: &str) -> Result<Field> {
    if s == "q" {
        return Ok(Field::Rational);
    }
    if let Some(p) = s.strip_prefix("p/") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::BadField(format!("bad modulus in {s:?}")))?;
        return Field::Prime(p).validate();
    }
    Err(Error::BadField(format!(
        "unknown field {s:?} (expected q or p/N)"
    )))
}

/// Writes an artifact: to a file (recorded in the report), to stdout when the
/// path is `-` (suppressing the report), or inline into the report details.
fn emit_artifact(
    report: &mut Report,
    out: &Option<String>,
    name: &str,
    content: String,
    inline: serde_json::Value,
) -> Result<bool> {
    match out.as_deref() {
        Some("-") => {
            print!("{content}");
            Ok(true)
        }
        Some(path) => {
            std::fs::write(path, content)?;
            report.artifacts.push(path.to_string());
            Ok(false)
        }
        None => {
            report.detail(name, inline);
            Ok(false)
        }
    }
}

fn load_structure(path: &str, field: Field, report: &mut Report) -> Result<Arc<AlgebraicStructure>> {
    let s = StructureJson::parse(&read_input(path)?)?.to_structure(field)?;
    let (s, suite, _) = laws::classify_best(s)?;
    report.input(s.name(), s.dim());
    report.detail(
        &format!("class[{}]", s.name()),
        serde_json::Value::String(suite.to_string()),
    );
    Ok(Arc::new(s))
}

fn structure_artifact(s: &AlgebraicStructure) -> (String, serde_json::Value) {
    let j = StructureJson::from_structure(s);
    let v = serde_json::to_value(&j).expect("structure serializes");
    let mut text = serde_json::to_string_pretty(&j).expect("structure serializes");
    text.push('\n');
    (text, v)
}

fn run(cli: &Cli, argv: &[String]) -> Result<(Report, i32)> {
    let field = parse_field(&cli.field)?;
    let mut report = Report::new(argv, field.to_string());
    let mut suppress = false;

    match &cli.command {
        Command::Verify { structure, suite } => {
            let s = StructureJson::parse(&read_input(structure)?)?.to_structure(field)?;
            report.input(s.name(), s.dim());
            let (reports, class) = laws::verify_structure(&s, suite)?;
            report.laws(&reports);
            if let Some(c) = class {
                report.detail("class", serde_json::Value::String(c.to_string()));
            }
        }
        Command::Loop { op } => match op {
            LoopOp::Classify { table } => {
                let l = parse_loop_text(&read_input(table)?)?;
                report.input("loop", l.order());
                let c = l.classify();
                report.detail("classification", serde_json::to_value(&c).expect("serializes"));
            }
            LoopOp::Algebra { table, out } => {
                let l = parse_loop_text(&read_input(table)?)?;
                let s = loop_algebra(&l, field, "loop-algebra")?;
                report.input(s.name(), s.dim());
                if let Some(c) = s.class() {
                    report.detail("class", serde_json::Value::String(c.to_string()));
                }
                let (text, inline) = structure_artifact(&s);
                suppress = emit_artifact(&mut report, out, "structure", text, inline)?;
            }
            LoopOp::Chein { table, out } => {
                let g = parse_loop_text(&read_input(table)?)?;
                let d = chein_double(&g)?;
                report.input("chein-double", d.order());
                report.detail(
                    "classification",
                    serde_json::to_value(d.classify()).expect("serializes"),
                );
                let text = d.to_text();
                let inline = serde_json::Value::String(text.clone());
                suppress = emit_artifact(&mut report, out, "loop", text, inline)?;
            }
        },
        Command::Deform {
            structure,
            cocycle,
            auto_normalize,
            out,
        } => {
            let s = load_structure(structure, field, &mut report)?;
            let f = FunctionalJson::parse(&read_input(cocycle)?)?;
            let sigma = f.to_map(field, s.space(), s.space())?;
            let c = make_cocycle(&s, sigma, *auto_normalize)?;
            report.laws(c.reports());
            let outcome = deform(&c)?;
            report.laws(&outcome.reports);
            if let Some(cl) = outcome.structure.class() {
                report.detail("deformed-class", serde_json::Value::String(cl.to_string()));
            }
            let (text, inline) = structure_artifact(&outcome.structure);
            suppress = emit_artifact(&mut report, out, "deformed", text, inline)?;
        }
        Command::Pairing { op } => {
            let (a_path, h_path, tau_path) = match op {
                PairingOp::Check { a, h, tau }
                | PairingOp::Invert { a, h, tau, .. }
                | PairingOp::Cocycle { a, h, tau, .. }
                | PairingOp::Bowtie { a, h, tau, .. } => (a, h, tau),
            };
            let a = load_structure(a_path, field, &mut report)?;
            let h = load_structure(h_path, field, &mut report)?;
            let tau = FunctionalJson::parse(&read_input(tau_path)?)?
                .to_map(field, a.space(), h.space())?;
            match op {
                PairingOp::Check { .. } => {
                    let p = check_pairing(&a, &h, tau)?;
                    report.laws(p.reports());
                }
                PairingOp::Invert { out, .. } => {
                    let p = check_pairing(&a, &h, tau)?;
                    report.laws(p.reports());
                    let j = FunctionalJson::from_map(
                        p.tau_inv(),
                        Some(format!("{}⊗{}", a.name(), h.name())),
                    )?;
                    let mut text = serde_json::to_string_pretty(&j).expect("serializes");
                    text.push('\n');
                    let inline = serde_json::to_value(&j).expect("serializes");
                    suppress = emit_artifact(&mut report, out, "tau_inv", text, inline)?;
                }
                PairingOp::Cocycle { out, .. } => {
                    let p = make_skew_pairing(&a, &h, tau)?;
                    report.laws(p.reports());
                    let c = pairing_to_cocycle(&p)?;
                    report.laws(c.reports());
                    let j = FunctionalJson::from_map(c.sigma(), Some(c.base().name().to_string()))?;
                    let mut text = serde_json::to_string_pretty(&j).expect("serializes");
                    text.push('\n');
                    let inline = serde_json::to_value(&j).expect("serializes");
                    suppress = emit_artifact(&mut report, out, "omega", text, inline)?;
                }
                PairingOp::Bowtie { out, .. } => {
                    let p = make_skew_pairing(&a, &h, tau)?;
                    report.laws(p.reports());
                    let bt = bowtie(&p)?;
                    report.laws(&bt.twist.reports);
                    report.detail(
                        "product-matches-twist",
                        serde_json::Value::Bool(true),
                    );
                    let (text, inline) = structure_artifact(&bt.structure);
                    suppress = emit_artifact(&mut report, out, "bowtie", text, inline)?;
                }
            }
        }
        Command::Dcp { a, h, tau } => {
            let a = load_structure(a, field, &mut report)?;
            let h = load_structure(h, field, &mut report)?;
            let tau = FunctionalJson::parse(&read_input(tau)?)?.to_map(field, a.space(), h.space())?;
            let p = make_skew_pairing(&a, &h, tau)?;
            report.laws(p.reports());
            let acts = actions_from_pairing(&p)?;
            report.laws(&acts.reports_a);
            report.laws(&acts.reports_h);
            let dcp = double_cross_product(&a, &h, &acts)?;
            report.laws(&dcp.majid_reports);
            report.laws(&dcp.suite_reports);
            report.detail(
                "equivalence-agrees",
                serde_json::Value::Bool(dcp.majid_pass() == dcp.suite_pass()),
            );
            let bt = bowtie(&p)?;
            report.detail(
                "product-matches-bowtie",
                serde_json::Value::Bool(dcp.structure.mul() == bt.structure.mul()),
            );
        }
        Command::Qt { op } => match op {
            QtOp::Check { h, r, alphas } => {
                let h = load_structure(h, field, &mut report)?;
                match r {
                    Some(r) => {
                        let r = ElementJson::parse(&read_input(r)?)?.to_map(field, h.space())?;
                        let qt = check_quasitriangular(&h, r)?;
                        report.laws(qt.reports());
                    }
                    None => {
                        for al in alphas.split(',') {
                            let alpha = field.parse(al.trim())?;
                            let r = catalog::r_alpha_map(field, &alpha, &h)?;
                            let qt = check_quasitriangular(&h, r)?;
                            report.detail(
                                &format!("alpha[{}]", alpha.render()),
                                serde_json::Value::Bool(qt.reports().iter().all(|l| l.pass)),
                            );
                            report.laws(qt.reports());
                        }
                    }
                }
            }
            QtOp::Project {
                a,
                h,
                tau,
                r,
                alpha,
                out,
            } => {
                let a_s = load_structure(a, field, &mut report)?;
                let h_s = load_structure(h, field, &mut report)?;
                let tau_j = FunctionalJson::parse(&read_input(tau)?)?;
                let tau_m = tau_j.to_map(field, a_s.space(), h_s.space())?;
                let r_m = match alpha {
                    Some(al) => {
                        let al = field.parse(al)?;
                        catalog::r_alpha_map(field, &al, &h_s)?
                    }
                    None => ElementJson::parse(&read_input(r)?)?.to_map(field, h_s.space())?,
                };
                let p = make_skew_pairing(&a_s, &h_s, tau_m)?;
                report.laws(p.reports());
                let qt = make_quasitriangular(&h_s, r_m.clone())?;
                report.laws(qt.reports());
                let proj = projection_from_pairing(&p, &qt)?;
                report.laws(&proj.rt_reports);
                report.laws(&proj.reports);
                let bundle = json!({
                    "a": serde_json::to_value(StructureJson::from_structure(&a_s)).unwrap(),
                    "h": serde_json::to_value(StructureJson::from_structure(&h_s)).unwrap(),
                    "tau": serde_json::to_value(&tau_j).unwrap(),
                    "r": serde_json::to_value(ElementJson::from_map(&r_m)?).unwrap(),
                });
                let mut text = serde_json::to_string_pretty(&bundle).expect("serializes");
                text.push('\n');
                suppress = emit_artifact(&mut report, out, "projection-bundle", text, bundle)?;
            }
            QtOp::Split { bundle, out } => {
                let (proj, _) = load_bundle(bundle, field, &mut report)?;
                let split = split_to_yd(&proj)?;
                report.laws(&split.reports);
                let braided = json!({
                    "mul": map_triples(&split.braided.mul),
                    "unit": map_vec(&split.braided.unit),
                    "comul": comul_triples(&split.braided.comul),
                    "counit": counit_vec(&split.braided.counit),
                    "antipode": endo_pairs(&split.braided.antipode),
                    "action": map_triples(&split.braided.action),
                    "coaction": coaction_triples(&split.braided.coaction),
                });
                let mut text = serde_json::to_string_pretty(&braided).expect("serializes");
                text.push('\n');
                suppress = emit_artifact(&mut report, out, "braided", text, braided)?;
            }
            QtOp::Biproduct { bundle, out } => {
                let (proj, _) = load_bundle(bundle, field, &mut report)?;
                let split = split_to_yd(&proj)?;
                report.laws(&split.reports);
                let (bp, bp_reports) = biproduct(&split.braided)?;
                report.laws(&bp_reports);
                let iso = iso_w(&proj, &bp)?;
                report.laws(&iso.reports);
                report.detail("isomorphic-to-bowtie", serde_json::Value::Bool(true));
                let (text, inline) = structure_artifact(&bp);
                suppress = emit_artifact(&mut report, out, "biproduct", text, inline)?;
            }
        },
        Command::Builtin {
            key,
            alpha,
            table,
            out,
        } => {
            let (text, inline) = match key.as_str() {
                "group" => {
                    let path = table.as_ref().ok_or_else(|| {
                        Error::Parse("builtin group needs --table <loop.txt>".into())
                    })?;
                    let g = parse_loop_text(&read_input(path)?)?;
                    let cls = g.classify();
                    if !cls.group.holds {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at {:?}",
                            cls.group.witness
                        )));
                    }
                    let s = loop_algebra(&g, field, "group-algebra")?;
                    structure_artifact(&s)
                }
                "taft4" => structure_artifact(catalog::taft4(field)?.as_ref()),
                "ms32" => {
                    let l = catalog::ms32()?;
                    let text = l.to_text();
                    let inline = serde_json::Value::String(text.clone());
                    (text, inline)
                }
                "ms32-algebra" => structure_artifact(catalog::ms32_algebra(field)?.as_ref()),
                "tau-prinej" => {
                    let p = catalog::tau_prinej(field)?;
                    let j = FunctionalJson::from_map(
                        p.tau(),
                        Some("ms32-algebra⊗taft4".to_string()),
                    )?;
                    let mut text = serde_json::to_string_pretty(&j).expect("serializes");
                    text.push('\n');
                    let inline = serde_json::to_value(&j).expect("serializes");
                    (text, inline)
                }
                "r-alpha" => {
                    let al = match alpha {
                        Some(al) => field.parse(al)?,
                        None => field.zero(),
                    };
                    let qt = catalog::r_alpha(field, &al)?;
                    let j = ElementJson::from_map(qt.r())?;
                    let mut text = serde_json::to_string_pretty(&j).expect("serializes");
                    text.push('\n');
                    let inline = serde_json::to_value(&j).expect("serializes");
                    (text, inline)
                }
                other => {
                    return Err(Error::Unknown {
                        kind: "builtin".into(),
                        name: other.to_string(),
                    })
                }
            };
            // Builtins are artifacts, not reports: default to stdout.
            let _ = inline;
            match out.as_deref() {
                Some("-") | None => {
                    print!("{text}");
                    suppress = true;
                }
                Some(path) => {
                    std::fs::write(path, text)?;
                    report.artifacts.push(path.to_string());
                }
            }
        }
        Command::Report { file } => {
            let saved: Report = serde_json::from_str(&read_input(file)?)
                .map_err(|e| Error::Parse(format!("report json: {e}")))?;
            print!("{}", saved.render(&cli.format));
            let code = if saved.status == "ok" { 0 } else { 1 };
            return Ok((saved, -(code + 1))); // negative marker: already printed
        }
    }

    let code = report.finalize();
    if suppress {
        Ok((report, -(code + 1)))
    } else {
        Ok((report, code))
    }
}

/// Loads the four ingredients of a projection bundle and rebuilds the
/// verified projection.
fn load_bundle(
    path: &str,
    field: Field,
    report: &mut Report,
) -> Result<(hopfq::qtyd::Projection, ())> {
    let v: serde_json::Value = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Error::Parse(format!("bundle json: {e}")))?;
    let get = |k: &str| -> Result<serde_json::Value> {
        v.get(k)
            .cloned()
            .ok_or_else(|| Error::Parse(format!("bundle is missing {k:?}")))
    };
    let a: StructureJson = serde_json::from_value(get("a")?)
        .map_err(|e| Error::Parse(format!("bundle a: {e}")))?;
    let h: StructureJson = serde_json::from_value(get("h")?)
        .map_err(|e| Error::Parse(format!("bundle h: {e}")))?;
    let tau: FunctionalJson = serde_json::from_value(get("tau")?)
        .map_err(|e| Error::Parse(format!("bundle tau: {e}")))?;
    let r: ElementJson = serde_json::from_value(get("r")?)
        .map_err(|e| Error::Parse(format!("bundle r: {e}")))?;
    let (a, _, _) = laws::classify_best(a.to_structure(field)?)?;
    let (h, _, _) = laws::classify_best(h.to_structure(field)?)?;
    let (a, h) = (Arc::new(a), Arc::new(h));
    report.input(a.name(), a.dim());
    report.input(h.name(), h.dim());
    let tau = tau.to_map(field, a.space(), h.space())?;
    let r = r.to_map(field, h.space())?;
    let p = make_skew_pairing(&a, &h, tau)?;
    let qt = make_quasitriangular(&h, r)?;
    Ok((projection_from_pairing(&p, &qt)?, ()))
}

fn map_triples(m: &LinMap) -> serde_json::Value {
    // X⊗Y -> Z entries as [i, j, k, coeff], 1-based.
    let dy = m.domain()[1].dim();
    let entries: Vec<serde_json::Value> = m
        .entries()
        .map(|(i, o, c)| {
            json!([
                (i as usize) / dy + 1,
                (i as usize) % dy + 1,
                o as usize + 1,
                c.render()
            ])
        })
        .collect();
    serde_json::Value::Array(entries)
}

fn comul_triples(m: &LinMap) -> serde_json::Value {
    let dy = m.codomain()[1].dim();
    let entries: Vec<serde_json::Value> = m
        .entries()
        .map(|(i, o, c)| {
            json!([
                i as usize + 1,
                (o as usize) / dy + 1,
                (o as usize) % dy + 1,
                c.render()
            ])
        })
        .collect();
    serde_json::Value::Array(entries)
}

fn coaction_triples(m: &LinMap) -> serde_json::Value {
    comul_triples(m)
}

fn map_vec(m: &LinMap) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = m
        .entries()
        .map(|(_, o, c)| json!([o as usize + 1, c.render()]))
        .collect();
    serde_json::Value::Array(entries)
}

fn counit_vec(m: &LinMap) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = m
        .entries()
        .map(|(i, _, c)| json!([i as usize + 1, c.render()]))
        .collect();
    serde_json::Value::Array(entries)
}

fn endo_pairs(m: &LinMap) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = m
        .entries()
        .map(|(i, o, c)| json!([i as usize + 1, o as usize + 1, c.render()]))
        .collect();
    serde_json::Value::Array(entries)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match run(&cli, &argv[1..]) {
        Ok((report, code)) => {
            if code < 0 {
                // Artifact already went to stdout; report suppressed.
                ExitCode::from(((-code) - 1) as u8)
            } else {
                print!("{}", report.render(&cli.format));
                ExitCode::from(code as u8)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
