use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use simsun_core::bijection::{
    phi_forward, psi_forward, psi_inverse, verify_phi, verify_psi, InsertionHistory,
};
use simsun_core::perm::{self, enumerate_permutations};
use simsun_core::poly::ratio;
use simsun_core::registry::{self, ENTRIES};
use simsun_core::rootcheck::{certify_rz, refine, verify_roots, ROOT_SUITES};
use simsun_core::series::{build, SeriesName, DEFAULT_ORDER};
use simsun_core::simsun::{
    for_each_snake, gen_simsun_first, gen_simsun_second, label_first, label_peak, label_second,
};
use simsun_core::{CycleDecomposition, Engine, Error, Family, IdentityReport, Permutation, Poly};

/// Simsun permutations: triangles, enumeration, identity checks, bijections,
/// root certification and generating functions.
#[derive(Parser)]
#[command(name = "simsun", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rows of a polynomial family up to n.
    Triangle {
        /// S, What, W, R, T, Pplus, Pminus, P, A, Sxq, Sxyq or D.
        family: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List a permutation class with its statistics.
    Enumerate {
        /// simsun1, simsun2, snakes, alternating or cud.
        class: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check an identity (or `all`); `list` shows the ids.
    Verify {
        id: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
        /// Run against an engine with an off-by-one in one family.
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
    /// Map a permutation through phi or psi, or verify the map up to n.
    Bijection {
        /// phi or psi.
        map: String,
        /// Word (`3412`, `1,10,2,…`) or cycles (`(1,4,3)(2)`, psi only).
        #[arg(long, conflicts_with = "n")]
        perm: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a root suite, or certify one polynomial with `certify --poly`.
    Roots {
        /// rz, lemma-chow, theorem-interlace, corollary-sxq or certify.
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        poly: Option<String>,
        /// Refine certified root intervals to width at most 2^-bits.
        #[arg(long, default_value_t = 16)]
        bits: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print n!·[z^n] of a generating function.
    Series {
        /// Sxz, What, Sxz-from-What, springer, Sxqz, one-minus-sin-negq or trivariate.
        name: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        format: FormatArg,
    },
}

/// Failures mapped onto exit codes.
enum Failure {
    Usage(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, (String, Failure)>;

const LISTING_MAX_N: usize = 10;
const SNAKE_LISTING_MAX_N: usize = 8;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, Failure::Violation)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err((_, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(e: impl Into<Failure>) -> Result<T, (String, Failure)> {
    Err((String::new(), e.into()))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Triangle { family, n, format } => cmd_triangle(&family, n, format.format),
        Command::Enumerate { class, n, format } => cmd_enumerate(&class, n, format.format),
        Command::Verify {
            id,
            n_max,
            format,
            mutate,
        } => cmd_verify(&id, n_max, format.format, mutate.as_deref()),
        Command::Bijection {
            map,
            perm,
            n,
            format,
        } => cmd_bijection(&map, perm.as_deref(), n, format.format),
        Command::Roots {
            suite,
            n_max,
            poly,
            bits,
            format,
        } => cmd_roots(&suite, n_max, poly.as_deref(), bits, format.format),
        Command::Series {
            name,
            order,
            format,
        } => cmd_series(&name, order, format.format),
    }
}

fn envelope(command: &str, params: Value, results: Value) -> String {
    let v = json!({ "command": command, "params": params, "results": results });
    format!(
        "{}\n",
        serde_json::to_string_pretty(&v).expect("serializable")
    )
}

fn cmd_triangle(family: &str, n: usize, format: Format) -> Outcome {
    let family: Family = family.parse().or_else(usage)?;
    let t = Engine::new().triangle(family, n).or_else(usage)?;
    Ok(match format {
        Format::Csv => t.to_csv(),
        Format::Json => envelope(
            "triangle",
            json!({ "family": family.name(), "n": n }),
            t.to_json()["rows"].clone(),
        ),
        Format::Text => {
            let mut s = String::new();
            for (m, p) in t.rows() {
                writeln!(s, "{family}_{m} = {p}").unwrap();
            }
            s
        }
    })
}

/// Rows of `(object, [(column, value)])`.
type Listing = (Vec<&'static str>, Vec<(String, Vec<usize>)>);

fn listing(class: &str, n: usize) -> Result<Listing, (String, Failure)> {
    let bound = if class == "snakes" {
        SNAKE_LISTING_MAX_N
    } else {
        LISTING_MAX_N
    };
    let known = ["simsun1", "simsun2", "snakes", "alternating", "cud"];
    if !known.contains(&class) {
        return usage(Error::Unknown {
            kind: "class",
            name: class.to_string(),
        });
    }
    if n > bound {
        return usage(Failure::Usage(format!(
            "n = {n} exceeds the listing bound {bound} for {class}"
        )));
    }
    let word_row = |p: &Permutation| {
        let s = p.word_stats();
        (p.to_string(), vec![s.des, s.pk, s.lpk, s.uprun])
    };
    let word_cols = vec!["des", "pk", "lpk", "uprun"];
    Ok(match class {
        "simsun1" => (
            word_cols,
            gen_simsun_first(n).iter().map(word_row).collect(),
        ),
        "alternating" => (
            word_cols,
            enumerate_permutations(n)
                .filter(|p| p.is_alternating())
                .map(|p| word_row(&p))
                .collect(),
        ),
        "simsun2" => (
            vec!["exc", "cyc", "fix", "cpk"],
            gen_simsun_second(n)
                .iter()
                .map(|c| {
                    let s = c.to_permutation().cycle_stats();
                    (c.to_string(), vec![s.exc, s.cyc, s.fix, s.cpk])
                })
                .collect(),
        ),
        "cud" => (
            vec!["cyc"],
            enumerate_permutations(n)
                .filter(|p| p.is_cycle_up_down())
                .map(|p| (p.to_cycles().to_string(), vec![perm::cyc(p.word())]))
                .collect(),
        ),
        _ => {
            let mut rows = Vec::new();
            for_each_snake(n, |w| {
                let s: Vec<String> = w.iter().map(i64::to_string).collect();
                rows.push((s.join(" "), Vec::new()));
            });
            (Vec::new(), rows)
        }
    })
}

fn cmd_enumerate(class: &str, n: usize, format: Format) -> Outcome {
    let (cols, rows) = listing(class, n)?;
    Ok(match format {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(obj, vals)| {
                    let mut m = serde_json::Map::new();
                    m.insert("perm".into(), json!(obj));
                    for (c, v) in cols.iter().zip(vals) {
                        m.insert((*c).into(), json!(v));
                    }
                    Value::Object(m)
                })
                .collect();
            envelope(
                "enumerate",
                json!({ "class": class, "n": n, "count": rows.len() }),
                Value::Array(items),
            )
        }
        Format::Csv => {
            let mut s = String::new();
            let header: Vec<&str> = std::iter::once("perm")
                .chain(cols.iter().copied())
                .collect();
            writeln!(s, "{}", header.join(",")).unwrap();
            for (obj, vals) in &rows {
                let mut fields = vec![format!("\"{obj}\"")];
                fields.extend(vals.iter().map(usize::to_string));
                writeln!(s, "{}", fields.join(",")).unwrap();
            }
            writeln!(s, "count,{}", rows.len()).unwrap();
            s
        }
        Format::Text => {
            let mut s = String::new();
            if !cols.is_empty() {
                writeln!(s, "perm\t{}", cols.join("\t")).unwrap();
            }
            for (obj, vals) in &rows {
                let vals: Vec<String> = vals.iter().map(usize::to_string).collect();
                if vals.is_empty() {
                    writeln!(s, "{obj}").unwrap();
                } else {
                    writeln!(s, "{obj}\t{}", vals.join("\t")).unwrap();
                }
            }
            writeln!(s, "count: {}", rows.len()).unwrap();
            s
        }
    })
}

fn render_reports(
    command: &str,
    params: Value,
    reports: &[IdentityReport],
    format: Format,
) -> Outcome {
    let all_pass = reports.iter().all(IdentityReport::passed);
    let out = match format {
        Format::Json => envelope(
            command,
            params,
            serde_json::to_value(reports).expect("serializable"),
        ),
        Format::Csv => {
            let mut s = String::from("id,n_min,n_max,verdict,counterexample\n");
            for r in reports {
                let verdict = if r.passed() { "pass" } else { "fail" };
                let ce = r.counterexample.as_deref().unwrap_or("").replace('"', "'");
                writeln!(s, "{},{},{},{verdict},\"{ce}\"", r.id, r.n_min, r.n_max).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                if r.passed() {
                    writeln!(s, "PASS {} n={}..={}", r.id, r.n_min, r.n_max).unwrap();
                } else {
                    let ce = r.counterexample.as_deref().unwrap_or("no n checked");
                    writeln!(s, "FAIL {} n={}..={}: {ce}", r.id, r.n_min, r.n_max).unwrap();
                }
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(s, "{passed}/{} passed", reports.len()).unwrap();
            s
        }
    };
    if all_pass {
        Ok(out)
    } else {
        Err((out, Failure::Violation))
    }
}

fn cmd_verify(id: &str, n_max: Option<usize>, format: Format, mutate: Option<&str>) -> Outcome {
    let engine = match mutate {
        None => Engine::new(),
        Some(name) => {
            let f: Family = name.parse().or_else(usage)?;
            if !Family::RECURRENT.contains(&f) {
                return usage(Failure::Usage(format!("{f} has no recurrence to mutate")));
            }
            Engine::with_mutation(f)
        }
    };
    if id == "list" {
        let mut s = String::new();
        for e in ENTRIES {
            writeln!(
                s,
                "{:<22} n={}..={} (max {})  {}",
                e.id, e.min_n, e.default_n_max, e.max_n, e.summary
            )
            .unwrap();
        }
        return Ok(s);
    }
    let reports = if id == "all" {
        registry::verify_all(&engine, n_max).or_else(usage)?
    } else {
        let entry = registry::lookup(id).or_else(usage)?;
        let n = n_max.unwrap_or(entry.default_n_max);
        vec![registry::verify_identity(&engine, id, n).or_else(usage)?]
    };
    let params = json!({ "id": id, "n_max": n_max, "mutate": mutate });
    render_reports("verify", params, &reports, format)
}

fn parse_source(s: &str) -> Result<Permutation, (String, Failure)> {
    Permutation::parse_any(s).or_else(usage)
}

fn cmd_bijection(map: &str, perm: Option<&str>, n: Option<usize>, format: Format) -> Outcome {
    if map != "phi" && map != "psi" {
        return usage(Error::Unknown {
            kind: "bijection",
            name: map.to_string(),
        });
    }
    if let Some(n) = n {
        let max = registry::lookup(map).or_else(usage)?.max_n;
        if n == 0 || n > max {
            return usage(Failure::Usage(format!("n = {n} out of range 1..={max}")));
        }
        let report = if map == "phi" {
            verify_phi(n)
        } else {
            verify_psi(n)
        };
        return render_reports(
            "bijection",
            json!({ "map": map, "n": n }),
            &[report],
            format,
        );
    }
    let Some(text) = perm else {
        return usage(Failure::Usage("give --perm or --n".into()));
    };
    let (source, history, images): (String, String, Vec<String>) = if map == "phi" {
        let p = parse_source(text)?;
        let img = phi_forward(&p).or_else(usage)?;
        (
            label_first(&p).or_else(usage)?.to_string(),
            history_string(&p)?,
            img.image
                .iter()
                .map(|t| label_peak(t).to_string())
                .collect(),
        )
    } else if text.trim_start().starts_with('(') {
        let c: CycleDecomposition = text.parse().or_else(usage)?;
        let p = psi_inverse(&c).or_else(usage)?;
        (
            label_second(&c).or_else(usage)?.to_string(),
            history_string(&p)?,
            vec![label_first(&p).or_else(usage)?.to_string()],
        )
    } else {
        let p = parse_source(text)?;
        let c = psi_forward(&p).or_else(usage)?;
        (
            label_first(&p).or_else(usage)?.to_string(),
            history_string(&p)?,
            vec![label_second(&c).or_else(usage)?.to_string()],
        )
    };
    Ok(match format {
        Format::Json => envelope(
            "bijection",
            json!({ "map": map, "perm": text }),
            json!([{ "source": source, "history": history, "image": images }]),
        ),
        Format::Csv => {
            let mut s = String::from("source,image\n");
            for i in &images {
                writeln!(s, "\"{source}\",\"{i}\"").unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!("{source}\nhistory: {history}\n");
            if images.len() == 1 {
                writeln!(s, "-> {}", images[0]).unwrap();
            } else {
                writeln!(s, "-> {} permutations:", images.len()).unwrap();
                for i in &images {
                    writeln!(s, "   {i}").unwrap();
                }
            }
            s
        }
    })
}

fn history_string(p: &Permutation) -> Result<String, (String, Failure)> {
    let h = InsertionHistory::of(p).or_else(usage)?;
    if h.steps().is_empty() {
        return Ok("(base)".into());
    }
    let steps: Vec<String> = h.steps().iter().map(ToString::to_string).collect();
    Ok(steps.join(" "))
}

fn cmd_roots(
    suite: &str,
    n_max: Option<usize>,
    poly: Option<&str>,
    bits: u32,
    format: Format,
) -> Outcome {
    if suite == "certify" {
        let Some(text) = poly else {
            return usage(Failure::Usage("certify needs --poly".into()));
        };
        let p: Poly = text.parse().or_else(usage)?;
        let c = certify_rz(&p).or_else(usage)?;
        let sqf = c.isolation.poly.squarefree_part();
        let width = ratio(1, 1i64 << bits.min(62));
        let intervals: Vec<String> = c
            .isolation
            .roots
            .iter()
            .map(|(iv, m)| {
                let mut iv = iv.clone();
                while !iv.is_exact() && &iv.hi - &iv.lo > width {
                    iv = refine(&sqf, &iv);
                }
                if *m == 1 {
                    iv.to_string()
                } else {
                    format!("{iv} x{m}")
                }
            })
            .collect();
        let out = match format {
            Format::Json => envelope(
                "roots",
                json!({ "suite": suite, "poly": p.to_string() }),
                json!([{
                    "real_rooted": c.real_rooted,
                    "all_nonpositive": c.all_nonpositive,
                    "all_simple": c.all_simple,
                    "roots": intervals,
                }]),
            ),
            _ => {
                let mut s = format!("{p}\n");
                writeln!(s, "real_rooted: {}", c.real_rooted).unwrap();
                writeln!(s, "all_nonpositive: {}", c.all_nonpositive).unwrap();
                writeln!(s, "all_simple: {}", c.all_simple).unwrap();
                for iv in &intervals {
                    writeln!(s, "root in {iv}").unwrap();
                }
                s
            }
        };
        return if c.holds() {
            Ok(out)
        } else {
            Err((out, Failure::Violation))
        };
    }
    if !ROOT_SUITES.contains(&suite) {
        return usage(Error::Unknown {
            kind: "root suite",
            name: suite.to_string(),
        });
    }
    let n = n_max.unwrap_or(registry::lookup(suite).or_else(usage)?.default_n_max);
    let report = verify_roots(&Engine::new(), suite, n).or_else(usage)?;
    if format == Format::Text {
        let mut s = String::new();
        for (m, ok) in &report.verdicts {
            writeln!(s, "n={m}\t{}", if *ok { "pass" } else { "fail" }).unwrap();
        }
        return match render_reports("roots", Value::Null, &[report], format) {
            Ok(tail) => Ok(s + &tail),
            Err((tail, f)) => Err((s + &tail, f)),
        };
    }
    render_reports(
        "roots",
        json!({ "suite": suite, "n_max": n }),
        &[report],
        format,
    )
}

fn cmd_series(name: &str, order: usize, format: Format) -> Outcome {
    let which: SeriesName = name.parse().or_else(usage)?;
    let s = build(which, order).or_else(usage)?;
    Ok(match format {
        Format::Json => envelope(
            "series",
            json!({ "name": name, "order": order }),
            s.to_json()["egf_coeffs"].clone(),
        ),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for n in 0..=order {
                writeln!(out, "{n},\"{}\"", s.egf_coeff(n)).unwrap();
            }
            out
        }
        Format::Text => s.to_string(),
    })
}
