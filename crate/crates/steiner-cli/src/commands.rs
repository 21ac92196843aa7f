use std::fs;

use serde_json::json;

use steiner::algebra::{
    check_cross_axioms, companion_matrix, format_rational, is_zero_divisor,
    multiplication_table_check, parse_vector, steiner_product, DivisionTable, NormIdentity,
};
use steiner::design::{builtin, parse, reference_models, BuiltinModel, DEFAULT_MAX_TRIPLES};
use steiner::dynamics::{iterate_l, rank_growth, vector_norm, verify_thmdyn};
use steiner::group::{
    are_isomorphic_in, classify_orientations, oriented_aut_group, profile_group, sts_aut_group,
    AutOptions, ClassifyOptions,
};
use steiner::Error;

use crate::args::{Command, DynamicsCommand, Format, InputArgs, OutputArgs, TableKind};
use crate::suite;

pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match &e {
            Error::TooManyTriples { .. } | Error::DegreeTooLarge { .. } => 3,
            Error::DegenerateSpectrum(_) => 1,
            _ => 2,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::new(2, e.to_string())
    }
}

fn load_model(input: &InputArgs) -> Result<BuiltinModel, CliError> {
    match (&input.builtin, &input.input) {
        (Some(name), None) => Ok(builtin::builtin_model(name)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)?;
            Ok(parse::parse_any(&text)?)
        }
        _ => Err(CliError::new(
            2,
            "exactly one of --builtin/--input required",
        )),
    }
}

fn load_oriented(input: &InputArgs) -> Result<steiner::design::OrientedSts, CliError> {
    match load_model(input)? {
        BuiltinModel::Oriented(o) => Ok(o),
        BuiltinModel::Unoriented(_) => Err(CliError::new(
            2,
            "this command needs an oriented system (builtin o*_n or bracketed input)",
        )),
    }
}

fn emit(output: &OutputArgs, text: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn max_triples(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| {
        std::env::var("STEINER_MAX_TRIPLES")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .or(Some(DEFAULT_MAX_TRIPLES))
}

pub fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Classify {
            input,
            output,
            max_triples: cap,
        } => {
            let model = load_model(&input)?;
            let sts = model.base().clone();
            let opts = ClassifyOptions {
                aut: AutOptions::default(),
                max_triples: max_triples(cap),
            };
            let report = classify_orientations(&sts, &opts)?;
            // match table: which class each bundled representative lands in
            let base_aut = sts_aut_group(&sts, &opts.aut)?;
            let mut matches: Vec<(String, usize)> = vec![];
            for (name, model, _) in reference_models(sts.n()) {
                if model.base() != &sts {
                    continue;
                }
                for (i, class) in report.classes.iter().enumerate() {
                    if are_isomorphic_in(&base_aut, &model, &class.representative)?.is_some() {
                        matches.push((name.to_string(), i + 1));
                        break;
                    }
                }
            }
            match output.format {
                Format::Json => {
                    let mut j = report.to_json();
                    j["model_classes"] = json!(matches
                        .iter()
                        .map(|(name, idx)| json!({"model": name, "class": idx}))
                        .collect::<Vec<_>>());
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let mut text = report.to_string();
                    if !matches.is_empty() {
                        text.push_str("model-to-class matches:\n");
                        for (name, idx) in &matches {
                            text.push_str(&format!("  {name} ~ class {idx}\n"));
                        }
                    }
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
        Command::Aut { input, output } => {
            let model = load_model(&input)?;
            let base = model.base().clone();
            let base_aut = sts_aut_group(&base, &AutOptions::default())?;
            let (group, label) = match &model {
                BuiltinModel::Oriented(o) => (oriented_aut_group(o, &base_aut)?, "oriented system"),
                BuiltinModel::Unoriented(_) => (base_aut.clone(), "system"),
            };
            let profile = profile_group(&group);
            let gens: Vec<String> = group.generators().iter().map(|g| g.to_string()).collect();
            match output.format {
                Format::Json => {
                    let j = json!({
                        "kind": label,
                        "n": base.n(),
                        "order": group.order(),
                        "base_aut_order": base_aut.order(),
                        "profile": profile.catalog_name,
                        "is_abelian": profile.is_abelian,
                        "exponent": profile.exponent,
                        "is_cyclic": profile.is_cyclic,
                        "generators": group.generators().iter().map(|g| g.images().to_vec()).collect::<Vec<_>>(),
                        "generators_cycles": gens,
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let mut text = format!(
                        "automorphism group of the {label}: order {} ({})\n",
                        group.order(),
                        profile.catalog_name
                    );
                    if matches!(model, BuiltinModel::Oriented(_)) {
                        text.push_str(&format!(
                            "base system automorphism order: {}\n",
                            base_aut.order()
                        ));
                    }
                    text.push_str(&format!("generators: {}\n", gens.join(" ")));
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
        Command::Product {
            input,
            output,
            a,
            b,
        } => {
            let o = load_oriented(&input)?;
            let av = parse_vector(&a, o.n())?;
            let bv = parse_vector(&b, o.n())?;
            let p = steiner_product(&o, &av, &bv)?;
            match output.format {
                Format::Json => emit(
                    &output,
                    format!("{}\n", serde_json::to_string(&p.to_json()).unwrap()),
                )?,
                _ => emit(&output, format!("{p}\n"))?,
            }
            Ok(0)
        }
        Command::Companion { input, output, w } => {
            let o = load_oriented(&input)?;
            let wv = parse_vector(&w, o.n())?;
            let m = companion_matrix(&o, &wv)?;
            let rank = m.rank();
            let kernel = m.kernel();
            match output.format {
                Format::Json => {
                    let j = json!({
                        "matrix": m.to_json(),
                        "rank": rank,
                        "kernel": kernel.iter().map(|k| k.to_json()).collect::<Vec<_>>(),
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let mut text = m.to_grid();
                    text.push_str(&format!("rank: {rank}\n"));
                    for k in &kernel {
                        text.push_str(&format!("kernel: {k}\n"));
                    }
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
        Command::Zerodiv { input, output, w } => {
            let o = load_oriented(&input)?;
            let wv = parse_vector(&w, o.n())?;
            let report = is_zero_divisor(&o, &wv)?;
            match output.format {
                Format::Json => {
                    let j = json!({
                        "is_zero_divisor": report.is_zero_divisor,
                        "rank": report.rank,
                        "witness": report.witness.as_ref().map(|w| w.to_json()),
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let mut text = format!(
                        "{} (rank {} of {})\n",
                        if report.is_zero_divisor {
                            "zero divisor"
                        } else {
                            "not a zero divisor"
                        },
                        report.rank,
                        o.n()
                    );
                    if let Some(wit) = &report.witness {
                        text.push_str(&format!("witness: {wit}\n"));
                    }
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
        Command::Axioms {
            input,
            output,
            seed,
        } => {
            let o = load_oriented(&input)?;
            let report = check_cross_axioms(&o, seed);
            match output.format {
                Format::Json => {
                    let norm = match &report.norm_identity {
                        NormIdentity::Pass => json!({"pass": true}),
                        NormIdentity::Fail { v, w, lhs, rhs } => json!({
                            "pass": false,
                            "witness_v": v.to_json(),
                            "witness_w": w.to_json(),
                            "lhs": format_rational(lhs),
                            "rhs": format_rational(rhs),
                        }),
                    };
                    let j = json!({
                        "bilinear": report.bilinear,
                        "orthogonality": report.orthogonality,
                        "norm_identity": norm,
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let mut text = format!(
                        "axiom 1 (bilinear): {}\naxiom 2 (orthogonality): {}\n",
                        pass_str(report.bilinear),
                        pass_str(report.orthogonality)
                    );
                    match &report.norm_identity {
                        NormIdentity::Pass => {
                            text.push_str("axiom 3 (norm identity): PASS\n");
                        }
                        NormIdentity::Fail { v, w, lhs, rhs } => {
                            text.push_str(&format!(
                                "axiom 3 (norm identity): FAIL\n  witness v = {v}\n  witness w = {w}\n  |v|^2|w|^2 = {} but |vxw|^2 + <v,w>^2 = {}\n",
                                format_rational(lhs),
                                format_rational(rhs)
                            ));
                        }
                    }
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
        Command::Tables {
            input,
            output,
            table,
        } => {
            let o = load_oriented(&input)?;
            let kind = match table {
                TableKind::Quaternion => DivisionTable::Quaternion,
                TableKind::Octonion => DivisionTable::Octonion,
            };
            let matches = multiplication_table_check(&o, kind)?;
            match output.format {
                Format::Json => emit(
                    &output,
                    format!(
                        "{}\n",
                        serde_json::to_string(&json!({"matches": matches})).unwrap()
                    ),
                )?,
                _ => emit(
                    &output,
                    format!("{}\n", if matches { "match" } else { "no match" }),
                )?,
            }
            Ok(0)
        }
        Command::Dynamics(cmd) => run_dynamics(cmd),
        Command::Models { output } => {
            let names = builtin::builtin_names();
            match output.format {
                Format::Json => emit(
                    &output,
                    format!("{}\n", serde_json::to_string(&json!(names)).unwrap()),
                )?,
                _ => emit(&output, names.join("\n") + "\n")?,
            }
            Ok(0)
        }
        Command::Verify {
            output,
            only,
            seed,
            horizon,
        } => {
            let section = match only.as_deref() {
                None => None,
                Some("classification") => Some(suite::Section::Classification),
                Some("algebra") => Some(suite::Section::Algebra),
                Some("dynamics") => Some(suite::Section::Dynamics),
                Some(other) => {
                    return Err(CliError::new(
                        2,
                        format!("unknown section {other:?} (classification|algebra|dynamics)"),
                    ))
                }
            };
            let cfg = suite::SuiteConfig {
                seed,
                horizon,
                only: section,
            };
            let results = suite::run_suite(&cfg);
            let all_pass = results.iter().all(|r| r.pass);
            match output.format {
                Format::Json => {
                    let j = json!({
                        "seed": seed,
                        "horizon": horizon,
                        "criteria": results.iter().map(|r| json!({
                            "id": r.id,
                            "section": r.section.name(),
                            "name": r.name,
                            "pass": r.pass,
                            "details": r.details,
                        })).collect::<Vec<_>>(),
                        "all_pass": all_pass,
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let mut text = String::new();
                    for r in &results {
                        text.push_str(&format!(
                            "{} {} {} [{}]\n",
                            r.id,
                            pass_str(r.pass),
                            r.name,
                            r.section.name()
                        ));
                        for d in &r.details {
                            text.push_str(&format!("    {d}\n"));
                        }
                    }
                    text.push_str(&format!(
                        "{} of {} checks passed\n",
                        results.iter().filter(|r| r.pass).count(),
                        results.len()
                    ));
                    emit(&output, text)?;
                }
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn pass_str(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run_dynamics(cmd: DynamicsCommand) -> Result<i32, CliError> {
    match cmd {
        DynamicsCommand::Rank {
            input,
            output,
            v,
            w,
            max_k,
        } => {
            let o = load_oriented(&input)?;
            let vv = parse_vector(&v, o.n())?;
            let wv = parse_vector(&w, o.n())?;
            let k = max_k.unwrap_or(o.n() + 1);
            let growth = rank_growth(&o, &vv, &wv, k)?;
            match output.format {
                Format::Json => {
                    let j = json!({
                        "ranks": growth.ranks,
                        "plateau_k": growth.plateau_k,
                        "plateau_rank": growth.plateau_rank,
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    let ranks: Vec<String> = growth.ranks.iter().map(|r| r.to_string()).collect();
                    let mut text = format!("ranks: {}\n", ranks.join(" "));
                    match (growth.plateau_k, growth.plateau_rank) {
                        (Some(k), Some(r)) => {
                            text.push_str(&format!("plateau: rank {r} from k = {k}\n"))
                        }
                        _ => text.push_str("plateau: not reached within max-k\n"),
                    }
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
        DynamicsCommand::Verify {
            input,
            output,
            v,
            w,
            horizon,
            tol,
        } => {
            let o = load_oriented(&input)?;
            let vv = parse_vector(&v, o.n())?;
            let wv = parse_vector(&w, o.n())?;
            let report = verify_thmdyn(&o, &wv, &vv, horizon, &tol.tolerances())?;
            match output.format {
                Format::Json => emit(
                    &output,
                    format!("{}\n", serde_json::to_string(&report.to_json()).unwrap()),
                )?,
                _ => {
                    let mut text = format!(
                        "p = {}, rates = {:?}, null component: {}\n",
                        report.p, report.lambdas, report.null_component
                    );
                    for c in &report.checks {
                        text.push_str(&format!(
                            "{:>14}: {} (expected {}, measured {}{})\n",
                            c.name,
                            pass_str(c.pass),
                            c.expected,
                            c.measured,
                            c.note
                                .as_ref()
                                .map(|n| format!("; {n}"))
                                .unwrap_or_default()
                        ));
                    }
                    emit(&output, text)?;
                }
            }
            Ok(if report.all_pass { 0 } else { 1 })
        }
        DynamicsCommand::Trace {
            input,
            output,
            v,
            w,
            k,
        } => {
            let o = load_oriented(&input)?;
            let vv = parse_vector(&v, o.n())?;
            let wv = parse_vector(&w, o.n())?;
            let trace = iterate_l(&o, &wv.to_f64(), &vv.to_f64(), k)?;
            match output.format {
                Format::Json => {
                    let j = json!({
                        "iterates": trace.iterates,
                        "normalized": trace.normalized,
                    });
                    emit(&output, format!("{}\n", serde_json::to_string(&j).unwrap()))?;
                }
                _ => {
                    // CSV: k, norm, normalized coordinates (blank when undefined)
                    let n = o.n();
                    let mut text = String::from("k,norm");
                    for i in 1..=n {
                        text.push_str(&format!(",c{i}"));
                    }
                    text.push('\n');
                    for (step, it) in trace.iterates.iter().enumerate() {
                        let norm = vector_norm(it);
                        text.push_str(&format!("{step},{norm}"));
                        match &trace.normalized[step] {
                            Some(u) => {
                                for x in u {
                                    text.push_str(&format!(",{x}"));
                                }
                            }
                            None => {
                                for _ in 0..n {
                                    text.push(',');
                                }
                            }
                        }
                        text.push('\n');
                    }
                    emit(&output, text)?;
                }
            }
            Ok(0)
        }
    }
}
