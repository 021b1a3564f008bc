//! `hyperoct`: enumeration dumps, element construction, character tables,
//! and the theorem-verification harness for hyperoctahedral groups.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage or configuration errors.

mod output;
mod verify_cmd;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperoct::algebra::{
    composition_idempotent, coset_sum, eigen_element, partition_idempotent,
    reutenauer_idempotent, shape_sum, sign_idempotent, vazirani_idempotent_bounded, Sign,
};
use hyperoct::characters::Theta;
use hyperoct::compositions::{signed_compositions, signed_partitions};
use hyperoct::group::{
    centralizer_order, group_elements_bounded, group_order, standard_cycles,
};
use hyperoct::{SignedComposition, SignedPartition};
use output::{Format, Table};
use std::process::ExitCode;

const DEFAULT_HARD_CAP: usize = 6;

#[derive(Parser)]
#[command(
    name = "hyperoct",
    about = "Exact computations and theorem verification in hyperoctahedral groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List signed compositions, signed partitions, group elements, or
    /// conjugacy-class data.
    Enumerate(EnumerateArgs),
    /// Construct a distinguished algebra element and dump it.
    Element(ElementArgs),
    /// Tabulate the centralizer character of a signed partition and the
    /// class-function image of its idempotent.
    Characters(CharactersArgs),
    /// Apply the canonical map to class functions to an element.
    Theta(ElementArgs),
    /// Run the verification suite.
    Verify(verify_cmd::VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Rank of the group.
    #[arg(long)]
    n: usize,
    /// What to enumerate.
    #[arg(long, value_enum, default_value_t = What::Sc)]
    what: What,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Lift the soft rank caps (within the hard cap).
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    /// Signed compositions.
    Sc,
    /// Signed partitions.
    Sp,
    /// All group elements in canonical order.
    Group,
    /// Conjugacy classes with sizes and representatives.
    Classes,
}

#[derive(Args)]
struct ElementArgs {
    /// Which element to build.
    #[arg(long, value_enum)]
    kind: ElementKind,
    /// Signed composition parameter, e.g. `-1,3,-2,1,3,-1`.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Signed partition parameter, e.g. `3,3,1,-2,-1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Sign for the `eps` kind.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<String>,
    /// Rank; inferred from `--p`/`--lambda` when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum ElementKind {
    /// Coset-representative sum x_p.
    X,
    /// Descent-shape sum x_p^v.
    Xv,
    /// Reutenauer idempotent r on the full block.
    R,
    /// Sign idempotent on the full block (needs --sign).
    Eps,
    /// Quasi-idempotent e_p.
    E,
    /// Primitive idempotent E_lambda.
    #[value(name = "E", alias = "big-e")]
    BigE,
    /// Eigen-element with cyclotomic coefficients.
    Etilde,
    /// Ordered-set-partition reconstruction of e_p.
    #[value(name = "I-oracle", alias = "oracle")]
    Oracle,
}

#[derive(Args)]
struct CharactersArgs {
    /// Signed partition, e.g. `2,2`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Rank; inferred from `--lambda` when omitted.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    force: bool,
}

/// A usage/config problem (exit 2), distinct from a verification failure
/// (exit 1).
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub fn hard_cap() -> usize {
    std::env::var("HYPEROCT_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_HARD_CAP)
}

/// Enforce `n >= 1`, the hard cap, and a per-task soft cap that `--force`
/// lifts to `forced`.
pub fn guard_rank(
    n: usize,
    soft: Option<usize>,
    forced: Option<usize>,
    force: bool,
    task: &str,
) -> Result<(), UsageError> {
    if n == 0 {
        return Err(UsageError("n must be at least 1".into()));
    }
    let cap = hard_cap();
    if n > cap {
        return Err(UsageError(format!(
            "n = {n} exceeds the hard cap {cap} for {task}; set HYPEROCT_MAX_N to raise it"
        )));
    }
    let limit = if force { forced } else { soft };
    if let Some(limit) = limit {
        if n > limit {
            let hint = if !force && forced.is_none_or(|f| f > limit) {
                " (pass --force to allow it)"
            } else {
                ""
            };
            return Err(UsageError(format!(
                "n = {n} exceeds the cap {limit} for {task}{hint}"
            )));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Element(args) => cmd_element(args, false),
        Command::Theta(args) => cmd_element(args, true),
        Command::Characters(args) => cmd_characters(args),
        Command::Verify(args) => return verify_cmd::cmd_verify(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), UsageError> {
    guard_rank(args.n, None, None, args.force, "enumeration")?;
    let n = args.n;
    match args.what {
        What::Sc => {
            let all = signed_compositions(n)?;
            let json = serde_json::Value::Array(
                all.iter()
                    .map(|c| serde_json::to_value(c).unwrap())
                    .collect(),
            );
            let mut table = Table::new(vec!["composition"]);
            for c in &all {
                table.row(vec![c.to_string()]);
            }
            args.format.emit(&json, &table);
        }
        What::Sp => {
            let all = signed_partitions(n)?;
            let json = serde_json::Value::Array(
                all.iter()
                    .map(|c| serde_json::to_value(c).unwrap())
                    .collect(),
            );
            let mut table = Table::new(vec!["partition"]);
            for c in &all {
                table.row(vec![c.to_string()]);
            }
            args.format.emit(&json, &table);
        }
        What::Group => {
            let elems = group_elements_bounded(n, hard_cap())?;
            let json = serde_json::Value::Array(
                elems
                    .iter()
                    .map(|w| serde_json::to_value(w).unwrap())
                    .collect(),
            );
            let mut table = Table::new(vec!["one-row"]);
            for w in &elems {
                table.row(vec![w.one_row()]);
            }
            args.format.emit(&json, &table);
        }
        What::Classes => {
            let mut rows = Vec::new();
            for lambda in signed_partitions(n)? {
                let rep = standard_cycles(&lambda).representative;
                let z = centralizer_order(&lambda);
                let size = group_order(n) / z;
                rows.push((lambda, size, z, rep));
            }
            let json = serde_json::Value::Array(
                rows.iter()
                    .map(|(l, size, z, rep)| {
                        serde_json::json!({
                            "type": serde_json::to_value(l).unwrap(),
                            "size": size,
                            "centralizer_order": z,
                            "representative": serde_json::to_value(rep).unwrap(),
                        })
                    })
                    .collect(),
            );
            let mut table = Table::new(vec!["type", "size", "centralizer", "representative"]);
            for (l, size, z, rep) in &rows {
                table.row(vec![
                    l.to_string(),
                    size.to_string(),
                    z.to_string(),
                    rep.one_row(),
                ]);
            }
            args.format.emit(&json, &table);
        }
    }
    Ok(())
}

struct ElementParams {
    n: usize,
    p: Option<SignedComposition>,
    lambda: Option<SignedPartition>,
}

fn element_params(args: &ElementArgs, needs: &str) -> Result<ElementParams, UsageError> {
    let p: Option<SignedComposition> = match &args.p {
        Some(s) => Some(s.parse()?),
        None => None,
    };
    let lambda: Option<SignedPartition> = match &args.lambda {
        Some(s) => Some(s.parse()?),
        None => None,
    };
    let inferred = p
        .as_ref()
        .map(|c| c.weight())
        .or(lambda.as_ref().map(|l| l.weight()));
    let n = match (args.n, inferred) {
        (Some(n), Some(w)) if n != w => {
            return Err(UsageError(format!(
                "--n {n} disagrees with the weight {w} of the given parts"
            )));
        }
        (Some(n), _) => n,
        (None, Some(w)) => w,
        (None, None) => {
            return Err(UsageError(format!(
                "--n is required for this kind ({needs})"
            )));
        }
    };
    Ok(ElementParams { n, p, lambda })
}

fn cmd_element(args: ElementArgs, apply_theta: bool) -> Result<(), UsageError> {
    let params = element_params(&args, "no composition or partition given")?;
    let n = params.n;
    let heavy = matches!(
        args.kind,
        ElementKind::E | ElementKind::BigE | ElementKind::Etilde | ElementKind::Oracle
    );
    let task = if apply_theta {
        "the class-function map"
    } else if heavy {
        "idempotent construction"
    } else {
        "element construction"
    };
    let (soft, forced) = if apply_theta || heavy {
        (Some(4), Some(5))
    } else {
        (None, None)
    };
    guard_rank(n, soft, forced, args.force, task)?;

    let need_p = || -> Result<&SignedComposition, UsageError> {
        params
            .p
            .as_ref()
            .ok_or_else(|| UsageError("this kind requires --p".into()))
    };
    let need_lambda = || -> Result<&SignedPartition, UsageError> {
        params
            .lambda
            .as_ref()
            .ok_or_else(|| UsageError("this kind requires --lambda".into()))
    };

    // cyclotomic-valued kinds are dumped directly; rational kinds can be
    // passed through theta
    let rational = match args.kind {
        ElementKind::X => Some(coset_sum(need_p()?)?),
        ElementKind::Xv => Some(shape_sum(need_p()?)?),
        ElementKind::R => Some(reutenauer_idempotent(n, 1..=n)),
        ElementKind::Eps => {
            let sign = match args.sign.as_deref() {
                Some("+") | Some("plus") => Sign::Plus,
                Some("-") | Some("minus") => Sign::Minus,
                Some(other) => {
                    return Err(UsageError(format!("unknown sign {other:?}, use + or -")))
                }
                None => return Err(UsageError("--sign is required for eps".into())),
            };
            Some(sign_idempotent(n, 1..=n, sign))
        }
        ElementKind::E => Some(composition_idempotent(need_p()?)?),
        ElementKind::BigE => Some(partition_idempotent(need_lambda()?)?),
        ElementKind::Oracle => Some(vazirani_idempotent_bounded(need_p()?, 5)?),
        ElementKind::Etilde => None,
    };

    if apply_theta {
        let Some(u) = rational else {
            return Err(UsageError(
                "the class-function map applies to rational elements only".into(),
            ));
        };
        let theta = Theta::new(n)?;
        let image = theta.apply(&u)?;
        let mut table = Table::new(vec!["class", "value"]);
        for (mu, v) in image.iter() {
            table.row_right(vec![mu.to_string(), v.to_string()]);
        }
        args.format.emit(&image.to_json(), &table);
        return Ok(());
    }

    let json;
    let mut table = Table::new(vec!["perm", "coeff"]);
    match rational {
        Some(u) => {
            json = u.to_json();
            for (w, c) in u.terms() {
                table.row_right(vec![
                    w.one_row(),
                    hyperoct::scalars::rational_string(c),
                ]);
            }
        }
        None => {
            let u = eigen_element(need_lambda()?)?;
            json = u.to_json();
            for (w, c) in u.terms() {
                table.row_right(vec![w.one_row(), c.to_string()]);
            }
        }
    }
    args.format.emit(&json, &table);
    Ok(())
}

fn cmd_characters(args: CharactersArgs) -> Result<(), UsageError> {
    let lambda: SignedPartition = args.lambda.parse()?;
    if let Some(n) = args.n {
        if n != lambda.weight() {
            return Err(UsageError(format!(
                "--n {n} disagrees with the weight {} of the partition",
                lambda.weight()
            )));
        }
    }
    let n = lambda.weight();
    guard_rank(n, Some(4), Some(5), args.force, "character computation")?;

    let phi = hyperoct::characters::centralizer_character(&lambda)?;
    let theta = Theta::new(n)?;
    let image = theta.apply(&partition_idempotent(&lambda)?)?;
    // the image must be a class indicator; anything else would falsify
    // the classification and deserves a loud failure
    let mut label = None;
    for (mu, v) in image.iter() {
        if v.is_zero() {
            continue;
        }
        if *v != hyperoct::Cyclotomic::one() || label.is_some() {
            return Err(UsageError(format!(
                "theta image of E_{lambda} is not a class indicator: {}",
                serde_json::to_string(&image.to_json()).unwrap()
            )));
        }
        label = Some(mu.clone());
    }
    let label = label.ok_or_else(|| UsageError("theta image is zero".into()))?;

    let mut table = Table::new(vec!["generator", "element", "order", "value"]);
    let mut gen_json = Vec::new();
    for (gen, elem, value) in phi.generator_values() {
        table.row_right(vec![
            gen.to_string(),
            elem.one_row(),
            elem.order().to_string(),
            value.to_string(),
        ]);
        gen_json.push(serde_json::json!({
            "generator": gen.to_string(),
            "element": serde_json::to_value(elem).unwrap(),
            "order": elem.order(),
            "value": value.to_json(),
        }));
    }
    let json = serde_json::json!({
        "lambda": serde_json::to_value(&lambda).unwrap(),
        "centralizer_order": phi.subgroup().len(),
        "generators": gen_json,
        "theta_image_class": label.to_string(),
    });
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).unwrap()),
        Format::Table => {
            print!("{}", table.render());
            println!("theta image class: {label}");
        }
        Format::Csv => {
            print!("{}", table.render_csv());
            println!("theta-image,{label}");
        }
    }
    Ok(())
}
