//! `brsc`: command-line front end for the brsc library.
//!
//! A complex argument is a JSON file, `-` for standard input, or
//! `cat:NAME[:key=value,...]` for a catalog entry. Results are printed as
//! JSON. Predicate commands exit with 1 when the predicate is false.

use std::io::{Read, Write};
use std::process::ExitCode;

use brsc::catalog::{self, Params};
use brsc::{iso, json, lattice, matroid, operators, reproduce, t_operator};
use brsc::{Complex, Error, Face, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "brsc", version, about = "Boolean representable simplicial complexes")]
struct Cli {
    /// Worker threads; 0 lets rayon decide.
    #[arg(long, global = true, env = "BRSC_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of the main invariants.
    Check { input: String },
    /// The lattice of flats.
    Flats { input: String },
    /// Closure of a face, e.g. `135` or `1,3,5`.
    Closure { input: String, face: String },
    /// Boolean representability, with a facet witness when it fails.
    Brcheck { input: String },
    /// The family T(H), or T(H_k) with `--k`.
    Tfam {
        input: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Whether H = J(T(H)) truncated at dimension d.
    Tbrsc { input: String },
    /// Dimension of J(T(H)) relative to H.
    Codim { input: String },
    /// Minimality classes of paving complexes of dimension 2.
    Classify {
        #[command(subcommand)]
        kind: ClassifyKind,
    },
    /// Operators producing new complexes.
    Op {
        #[command(subcommand)]
        op: OpKind,
    },
    /// Matroid tests and constructions.
    Matroid {
        #[command(subcommand)]
        task: MatroidTask,
    },
    /// Named complexes.
    Catalog {
        #[command(subcommand)]
        task: CatalogTask,
    },
    /// Isomorphism tests.
    Iso {
        #[command(subcommand)]
        task: IsoTask,
    },
    /// Reruns a reproducible computation; `--list` shows the tags.
    Reproduce {
        tag: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum ClassifyKind {
    /// Maximal complexes that do not go up, up to isomorphism.
    Mngu {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Minimal complexes that go up, one per class.
    Mgu {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum OpKind {
    /// H^up, iterated `--m` times.
    Up {
        input: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// H + p.
    Plus {
        input: String,
        #[arg(long, default_value = "p")]
        label: String,
    },
    /// H ⊕ p.
    Oplus {
        input: String,
        #[arg(long, default_value = "p")]
        label: String,
    },
    /// H ⊞ p.
    Boxplus {
        input: String,
        #[arg(long, default_value = "p")]
        label: String,
    },
    /// B_d(L) on n vertices.
    Bd {
        #[arg(long)]
        n: usize,
        /// The distinguished set, e.g. `123` or `1,2,3`.
        #[arg(long)]
        l: String,
        #[arg(long)]
        d: usize,
    },
    /// Sum over a common vertex set: unions of a face of each.
    Sum { a: String, b: String },
    /// Faces of size at most k.
    Truncate { input: String, k: usize },
}

#[derive(Subcommand)]
enum MatroidTask {
    /// Exchange property and near-matroid property.
    Check { input: String },
    /// Matroid extensions of a paving matroid of dimension 2.
    Extend {
        input: String,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// A shelling order, if one exists.
    Shelling { input: String },
    /// The complex H* built from the lines.
    Hstar { input: String },
    /// Whether the pure part of the k-truncation is BR and TBRSC.
    PureConjecture {
        input: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum CatalogTask {
    List,
    /// Builds an entry; parameters are `key=value`.
    Get { name: String, params: Vec<String> },
}

#[derive(Subcommand)]
enum IsoTask {
    /// Prints an isomorphism A -> B, exit 1 when none exists.
    Check { a: String, b: String },
    /// Canonical relabelling.
    Canon { input: String },
}

/// Outcome of a command: JSON to print and whether its predicate held.
struct Output {
    value: Value,
    pass: bool,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, pass: true }
    }

    fn verdict(value: Value, pass: bool) -> Self {
        Output { value, pass }
    }
}

fn load(arg: &str) -> Result<Complex> {
    if let Some(rest) = arg.strip_prefix("cat:") {
        let (name, params) = rest.split_once(':').unwrap_or((rest, ""));
        let tokens: Vec<&str> = params.split(',').filter(|t| !t.is_empty()).collect();
        return catalog::named(name, &Params::parse(&tokens)?);
    }
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?
    };
    json::parse_complex(&text)
}

fn faces(c: &Complex, xs: impl IntoIterator<Item = Face>) -> Value {
    json::faces_value(c, xs)
}

fn opt_face(c: &Complex, x: Option<Face>) -> Value {
    x.map_or(Value::Null, |x| json::face_value(c, x))
}

fn check(c: &Complex) -> Value {
    let br = lattice::is_boolean_representable(c);
    let gu = t_operator::goes_up(c);
    let shelling = matroid::is_shellable(c);
    json!({
        "vertices": c.n(),
        "facets": c.facets().len(),
        "dim": c.dim(),
        "pure": c.is_pure(),
        "paving": c.is_paving(),
        "flats": lattice::flats(c).len(),
        "boolean_representable": br.representable,
        "br_witness": opt_face(c, br.witness),
        "tbrsc": t_operator::is_tbrsc(c),
        "matroid": matroid::is_matroid(c).matroid,
        "near_matroid": matroid::is_near_matroid(c),
        "shellable": shelling.is_some(),
        "t_family_size": gu.t_family_size,
        "dim_jt": gu.dim_jt,
        "codimension": gu.codimension,
        "goes_up": gu.goes_up,
    })
}

fn op(kind: OpKind) -> Result<Output> {
    let c = match kind {
        OpKind::Up { input, m } => operators::up_iter(&load(&input)?, m),
        OpKind::Plus { input, label } => operators::plus_point(&load(&input)?, &label)?,
        OpKind::Oplus { input, label } => operators::oplus_point(&load(&input)?, &label)?,
        OpKind::Boxplus { input, label } => operators::boxplus_point(&load(&input)?, &label)?,
        OpKind::Bd { n, l, d } => {
            let l = Complex::new(n, [])?.parse_face(&l)?;
            operators::b_d(n, l, d)?
        }
        OpKind::Sum { a, b } => load(&a)?.sum(&load(&b)?)?,
        OpKind::Truncate { input, k } => load(&input)?.truncate(k)?,
    };
    Ok(Output::ok(json::complex_value(&c)))
}

fn matroid_task(task: MatroidTask) -> Result<Output> {
    Ok(match task {
        MatroidTask::Check { input } => {
            let c = load(&input)?;
            let v = matroid::is_matroid(&c);
            let violation = v.violation.map_or(Value::Null, |(i, j)| {
                json!([json::face_value(&c, i), json::face_value(&c, j)])
            });
            let value = json!({
                "matroid": v.matroid,
                "violation": violation,
                "near_matroid": matroid::is_near_matroid(&c),
            });
            Output::verdict(value, v.matroid)
        }
        MatroidTask::Extend { input, budget } => {
            let c = load(&input)?;
            let (candidate, verdict) = matroid::matroid_extension_candidate(&c)?;
            let search = matroid::search_matroid_extensions(&c, budget)?;
            if !search.complete {
                return Err(Error::Budget { nodes: search.nodes });
            }
            let value = json!({
                "verdict": verdict.as_str(),
                "candidate": json::complex_value(&candidate),
                "extensions": search.extensions.iter().map(json::complex_value).collect::<Vec<_>>(),
                "variables": search.variables,
                "nodes": search.nodes,
            });
            Output::ok(value)
        }
        MatroidTask::Shelling { input } => {
            let c = load(&input)?;
            match matroid::is_shellable(&c) {
                Some(s) => {
                    let certs: Vec<Value> = s.certificates.iter().map(|x| faces(&c, x.iter().copied())).collect();
                    let order: Vec<Value> = s.order.iter().map(|&x| json::face_value(&c, x)).collect();
                    Output::ok(json!({ "shellable": true, "order": order, "certificates": certs }))
                }
                None => Output::verdict(json!({ "shellable": false }), false),
            }
        }
        MatroidTask::Hstar { input } => Output::ok(json::complex_value(&matroid::h_star(&load(&input)?)?)),
        MatroidTask::PureConjecture { input, k } => {
            let r = matroid::check_pure_conjecture(&load(&input)?, k)?;
            let value = json!({
                "k": r.k,
                "pure_part_is_br": r.pure_k_is_brsc,
                "pure_part_is_tbrsc": r.pure_k_is_tbrsc,
            });
            Output::verdict(value, r.pure_k_is_brsc && r.pure_k_is_tbrsc)
        }
    })
}

fn classify(kind: ClassifyKind) -> Result<Output> {
    Ok(match kind {
        ClassifyKind::Mngu { n, d } => {
            let classes = t_operator::enumerate_mngu(n, d)?;
            let list: Vec<Value> = classes
                .iter()
                .map(|c| json!({ "complex": json::complex_value(c), "defect": faces(c, c.defect().map(|s| s.members().to_vec()).unwrap_or_default()) }))
                .collect();
            Output::ok(json!({ "n": n, "d": d, "classes": list.len(), "members": list }))
        }
        ClassifyKind::Mgu { n } => {
            let m = t_operator::enumerate_mgu(n)?;
            let list: Vec<Value> = m
                .members
                .iter()
                .map(|((i, j), c)| json!({ "i": i, "j": j, "complex": json::complex_value(c) }))
                .collect();
            let value = json!({
                "n": m.n,
                "classes": list.len(),
                "members": list,
                "all_minimal_going_up": m.all_minimal_going_up,
                "pairwise_non_isomorphic": m.pairwise_non_isomorphic,
                "exhaustive_count": m.exhaustive_count,
            });
            let pass = m.all_minimal_going_up && m.pairwise_non_isomorphic;
            Output::verdict(value, pass)
        }
    })
}

fn catalog_task(task: CatalogTask) -> Result<Output> {
    Ok(match task {
        CatalogTask::List => {
            let entries: Vec<Value> = catalog::registry()
                .iter()
                .map(|e| {
                    let params: serde_json::Map<String, Value> =
                        e.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                    json!({ "name": e.name, "params": params, "about": e.about })
                })
                .collect();
            Output::ok(Value::Array(entries))
        }
        CatalogTask::Get { name, params } => {
            Output::ok(json::complex_value(&catalog::named(&name, &Params::parse(&params)?)?))
        }
    })
}

fn iso_task(task: IsoTask) -> Result<Output> {
    Ok(match task {
        IsoTask::Check { a, b } => {
            let (a, b) = (load(&a)?, load(&b)?);
            match iso::are_isomorphic(&a, &b) {
                Some(perm) => {
                    let map: serde_json::Map<String, Value> = perm
                        .iter()
                        .enumerate()
                        .map(|(v, &w)| (a.labels()[v].clone(), json!(b.labels()[w])))
                        .collect();
                    Output::ok(json!({ "isomorphic": true, "map": map }))
                }
                None => Output::verdict(json!({ "isomorphic": false }), false),
            }
        }
        IsoTask::Canon { input } => {
            let c = load(&input)?;
            let f = iso::canonical_form(&c);
            let canon = Complex::new(f.n, f.facets.iter().copied())?;
            let perm: serde_json::Map<String, Value> = f
                .perm
                .iter()
                .enumerate()
                .map(|(v, &w)| (c.labels()[v].clone(), json!(w + 1)))
                .collect();
            Output::ok(json!({ "complex": json::complex_value(&canon), "perm": perm }))
        }
    })
}

fn reproduce_cmd(tag: Option<String>, list: bool, n: Option<usize>, seed: Option<u64>) -> Result<Output> {
    if list || tag.is_none() {
        let tags: Vec<Value> = reproduce::sections()
            .iter()
            .map(|s| json!({ "tag": s.tag, "criterion": s.criterion, "title": s.title }))
            .collect();
        return Ok(Output::ok(Value::Array(tags)));
    }
    let section = reproduce::find(tag.as_deref().unwrap_or_default())?;
    let mut opts = reproduce::Options { n, ..Default::default() };
    if let Some(s) = seed {
        opts.seed = s;
    }
    let checks = (section.run)(&opts)?;
    let pass = checks.iter().all(|c| c.pass);
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
        .collect();
    let value = json!({ "tag": section.tag, "title": section.title, "pass": pass, "checks": list });
    Ok(Output::verdict(value, pass))
}

fn run(cmd: Cmd) -> Result<Output> {
    Ok(match cmd {
        Cmd::Check { input } => Output::ok(check(&load(&input)?)),
        Cmd::Flats { input } => {
            let c = load(&input)?;
            let fl = lattice::flats(&c);
            Output::ok(json!({ "count": fl.len(), "height": fl.height(), "flats": faces(&c, fl.iter()) }))
        }
        Cmd::Closure { input, face } => {
            let c = load(&input)?;
            let x = c.parse_face(&face)?;
            let cl = lattice::closure(&c, x);
            Output::ok(json!({ "face": json::face_value(&c, x), "closure": json::face_value(&c, cl), "flat": cl == x }))
        }
        Cmd::Brcheck { input } => {
            let c = load(&input)?;
            let v = lattice::is_boolean_representable(&c);
            Output::verdict(
                json!({ "representable": v.representable, "witness": opt_face(&c, v.witness) }),
                v.representable,
            )
        }
        Cmd::Tfam { input, k } => {
            let c = load(&input)?;
            let t = match k {
                Some(k) => t_operator::t_family_at(&c, k)?,
                None => t_operator::t_family(&c),
            };
            Output::ok(json!({ "count": t.len(), "height": t.height(), "members": faces(&c, t.iter()) }))
        }
        Cmd::Tbrsc { input } => {
            let c = load(&input)?;
            let yes = t_operator::is_tbrsc(&c);
            let jt = t_operator::truncated_transversal_complex(&c);
            Output::verdict(json!({ "tbrsc": yes, "truncated_jt": json::complex_value(&jt) }), yes)
        }
        Cmd::Codim { input } => {
            let c = load(&input)?;
            let r = t_operator::goes_up(&c);
            let witness = r.witness.map_or(Value::Null, |(x, y)| {
                json!({ "x": json::face_value(&c, x), "y": json::face_value(&c, y) })
            });
            Output::ok(json!({
                "dim": c.dim(),
                "dim_jt": r.dim_jt,
                "codimension": r.codimension,
                "goes_up": r.goes_up,
                "t_family_size": r.t_family_size,
                "max_chain_length": r.max_chain_length,
                "witness": witness,
            }))
        }
        Cmd::Classify { kind } => classify(kind)?,
        Cmd::Op { op: kind } => op(kind)?,
        Cmd::Matroid { task } => matroid_task(task)?,
        Cmd::Catalog { task } => catalog_task(task)?,
        Cmd::Iso { task } => iso_task(task)?,
        Cmd::Reproduce { tag, list, n, seed } => reproduce_cmd(tag, list, n, seed)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("brsc: cannot start thread pool: {e}");
        return ExitCode::from(3);
    }
    match run(cli.cmd) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.value).expect("JSON values serialize");
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("brsc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
