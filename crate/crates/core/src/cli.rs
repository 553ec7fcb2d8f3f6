//! Command-line front end.

use crate::costrat::{d_coeffs_from_table, k_block, norm_ratio, HbarConfig};
use crate::golden::{builtin, load_dir, verify_all, Column, TableReport};
use crate::lattice::{gamma_x, kernel_preset, parse_q, pq_map, ExpKernel, TorusPoint};
use crate::relcoeff::coeff_table;
use crate::repthy::WeightSystemCache;
use crate::rootsys::{DynkinLabels, Family, LieType, RootSystem};
use crate::subsys::{are_conjugate, build_poset, enumerate_classes, find_class, SubsystemClass};
use crate::weyl::WeylGroup;
use crate::{Error, Result, Q};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "reftype", version, about = "Reflection types, coefficient tables and K blocks for classical compact groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Clone, Args)]
pub struct KernelArgs {
    /// `sc`, `so-odd` or a file holding the kernel matrix.
    #[arg(long, default_value = "sc")]
    pub kernel: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the conjugacy classes of root subsystems.
    Subsystems(GroupArgs),
    /// Hasse diagram of the class order.
    Hasse(GroupArgs),
    /// Reduced coefficients `C/N` of one class.
    Coeffs {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long)]
        class: String,
    },
    /// Reduced `D` coefficients of one class.
    Dcoeffs {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long)]
        class: String,
    },
    /// Normalized `K` block inside the window `‖λ+δ‖ ≤ cutoff`.
    Kblock {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long)]
        class: String,
        #[arg(long)]
        cutoff: String,
        /// Adds the numeric factor `N_{λ'}/N_λ` for this `ħ`.
        #[arg(long)]
        hbar: Option<f64>,
    },
    /// `p/q` ratios of the positive roots.
    Pq {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        kernel: KernelArgs,
    },
    /// Root subsystem fixed by a torus point.
    Gammax {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        kernel: KernelArgs,
        /// `A=a1,..,an;B=b1,..,bn` in simple coroot coordinates, `A` in units of `2πi`.
        #[arg(long)]
        point: String,
    },
    /// Recompute the reference tables and report every difference.
    Verify {
        /// Directory of table files; the built-in tables otherwise.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub family: String,
    pub rank: usize,
    pub kernel: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub lambda: Vec<i64>,
    pub c_over_n: String,
    pub d: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub group: GroupDoc,
    pub class: String,
    pub entries: Vec<EntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KEntryDoc {
    pub lambda_p: Vec<i64>,
    pub lambda: Vec<i64>,
    pub k: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KBlockDoc {
    pub group: GroupDoc,
    pub class: String,
    pub cutoff2: String,
    pub rows: Vec<Vec<i64>>,
    pub incomplete_rows: Vec<Vec<i64>>,
    pub entries: Vec<KEntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub label: String,
    pub closed: bool,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemsDoc {
    pub family: String,
    pub rank: usize,
    pub classes: Vec<ClassDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDoc {
    pub family: String,
    pub rank: usize,
    pub classes: Vec<ClassDoc>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqEntryDoc {
    pub root: usize,
    pub coords: Vec<i64>,
    pub p: i64,
    pub q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqDoc {
    pub group: GroupDoc,
    pub roots: Vec<PqEntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDoc {
    pub group: GroupDoc,
    pub roots: Vec<usize>,
    pub positive_coords: Vec<Vec<i64>>,
    pub closed: bool,
    pub class: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub group: String,
    pub class: String,
    pub lambda: Vec<i64>,
    pub column: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub groups: Vec<String>,
    pub checked: usize,
    pub mismatches: Vec<MismatchDoc>,
}

/// Rendered output and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

struct Ctx {
    rs: RootSystem,
    wg: WeylGroup,
}

impl Ctx {
    fn new(g: &GroupArgs) -> Result<Self> {
        let rs = RootSystem::new(LieType::new(g.family, g.rank)?);
        let wg = WeylGroup::generate(&rs);
        Ok(Ctx { rs, wg })
    }

    fn group_doc(&self, kernel: &ExpKernel) -> GroupDoc {
        GroupDoc {
            family: self.rs.lie_type().family().letter().to_string(),
            rank: self.rs.rank(),
            kernel: kernel.name.clone(),
        }
    }
}

fn unsupported<T>(cmd: &str, f: Format) -> Result<T> {
    Err(Error::InvalidArgument(format!("format {f:?} is not available for `{cmd}`").to_lowercase()))
}

fn to_json<T: Serialize>(x: &T) -> Result<String> {
    serde_json::to_string_pretty(x)
        .map(|s| s + "\n")
        .map_err(|e| Error::Parse(e.to_string()))
}

fn csv_labels(l: &[i64]) -> String {
    l.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn class_docs(classes: &[SubsystemClass]) -> Vec<ClassDoc> {
    classes
        .iter()
        .map(|c| ClassDoc {
            label: c.label.clone(),
            closed: c.closed(),
            size: c.representative.len(),
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CoeffKind {
    C,
    D,
}

fn coeff_doc(ctx: &Ctx, kernel: &ExpKernel, class: &str, kind: CoeffKind) -> Result<TableDoc> {
    let classes = enumerate_classes(&ctx.rs, &ctx.wg);
    let class = find_class(&ctx.rs, &classes, class)?;
    let pq = pq_map(&ctx.rs, kernel)?;
    let ct = coeff_table(&ctx.rs, &ctx.wg, class, &pq)?;
    let dt = d_coeffs_from_table(&ctx.rs, &ctx.wg, &ct, &WeightSystemCache::new())?;
    let keys: BTreeSet<&DynkinLabels> = match kind {
        CoeffKind::C => ct.entries.keys().collect(),
        CoeffKind::D => dt.support().collect(),
    };
    let entries = keys
        .into_iter()
        .map(|l| EntryDoc {
            lambda: l.0.clone(),
            c_over_n: ct.get(&l.0).to_string(),
            d: dt.get(&l.0).to_string(),
        })
        .collect();
    Ok(TableDoc {
        group: ctx.group_doc(kernel),
        class: class.label.clone(),
        entries,
    })
}

fn render_table(doc: &TableDoc, kind: CoeffKind, format: Format) -> Result<String> {
    let name = if kind == CoeffKind::C { "coeffs" } else { "dcoeffs" };
    let value = |e: &EntryDoc| if kind == CoeffKind::C { e.c_over_n.clone() } else { e.d.clone() };
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let mut s = format!("lambda,{}\n", if kind == CoeffKind::C { "c_over_n" } else { "d" });
            for e in &doc.entries {
                let _ = writeln!(s, "{},{}", csv_labels(&e.lambda), value(e));
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = format!(
                "# {}{} kernel {} class {}\n# lambda  C/N  D\n",
                doc.group.family, doc.group.rank, doc.group.kernel, doc.class
            );
            for e in &doc.entries {
                let _ = writeln!(s, "{:>8} {:>8} {:>8}", DynkinLabels(e.lambda.clone()), e.c_over_n, e.d);
            }
            Ok(s)
        }
        f => unsupported(name, f),
    }
}

fn kblock_doc(ctx: &Ctx, kernel: &ExpKernel, class: &str, cutoff: Q, hbar: Option<f64>) -> Result<KBlockDoc> {
    let classes = enumerate_classes(&ctx.rs, &ctx.wg);
    let class = find_class(&ctx.rs, &classes, class)?;
    let pq = pq_map(&ctx.rs, kernel)?;
    let ct = coeff_table(&ctx.rs, &ctx.wg, class, &pq)?;
    let dt = d_coeffs_from_table(&ctx.rs, &ctx.wg, &ct, &WeightSystemCache::new())?;
    let cutoff2 = cutoff * cutoff;
    let block = k_block(&ctx.rs, &ctx.wg, &dt, cutoff2);
    let cfg = hbar.map(|hbar| HbarConfig {
        hbar,
        dim_g: ctx.rs.len() + ctx.rs.rank(),
    });
    let entries = block
        .entries
        .iter()
        .map(|((lp, l), k)| {
            let norm_ratio = match cfg {
                Some(cfg) => Some(norm_ratio(&ctx.rs, cfg, &lp.0, &l.0)?.value),
                None => None,
            };
            Ok(KEntryDoc {
                lambda_p: lp.0.clone(),
                lambda: l.0.clone(),
                k: k.to_string(),
                norm_ratio,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KBlockDoc {
        group: ctx.group_doc(kernel),
        class: class.label.clone(),
        cutoff2: cutoff2.to_string(),
        rows: block.rows.iter().map(|l| l.0.clone()).collect(),
        incomplete_rows: block.incomplete_rows.iter().map(|l| l.0.clone()).collect(),
        entries,
    })
}

fn render_kblock(doc: &KBlockDoc, format: Format) -> Result<String> {
    let ratio = |e: &KEntryDoc| e.norm_ratio.map(|r| format!("{r:e}")).unwrap_or_default();
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let mut s = String::from("lambda_p,lambda,k,norm_ratio\n");
            for e in &doc.entries {
                let _ = writeln!(s, "{},{},{},{}", csv_labels(&e.lambda_p), csv_labels(&e.lambda), e.k, ratio(e));
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = format!(
                "# {}{} kernel {} class {} cutoff2 {}\n# {} rows, {} incomplete\n# lambda'  lambda  K\n",
                doc.group.family,
                doc.group.rank,
                doc.group.kernel,
                doc.class,
                doc.cutoff2,
                doc.rows.len(),
                doc.incomplete_rows.len()
            );
            for e in &doc.entries {
                let _ = writeln!(
                    s,
                    "{:>8} {:>8} {:>8} {}",
                    DynkinLabels(e.lambda_p.clone()),
                    DynkinLabels(e.lambda.clone()),
                    e.k,
                    ratio(e)
                );
            }
            Ok(s)
        }
        f => unsupported("kblock", f),
    }
}

fn pq_doc(ctx: &Ctx, kernel: &ExpKernel) -> Result<PqDoc> {
    let pq = pq_map(&ctx.rs, kernel)?;
    let roots = (0..ctx.rs.n_positive())
        .map(|i| PqEntryDoc {
            root: i,
            coords: ctx
                .rs
                .labels_to_root_coords(ctx.rs.root_labels(i))
                .iter()
                .map(|c| c.to_integer())
                .collect(),
            p: pq[i].p,
            q: pq[i].q,
        })
        .collect();
    Ok(PqDoc {
        group: ctx.group_doc(kernel),
        roots,
    })
}

fn gamma_doc(ctx: &Ctx, kernel: &ExpKernel, point: &str) -> Result<GammaDoc> {
    let pq = pq_map(&ctx.rs, kernel)?;
    let x: TorusPoint = point.parse()?;
    let g = gamma_x(&ctx.rs, &pq, &x)?;
    let classes = enumerate_classes(&ctx.rs, &ctx.wg);
    let class = classes
        .iter()
        .find(|c| c.representative.len() == g.len() && are_conjugate(&ctx.wg, &g.roots, &c.representative.roots).is_some())
        .map(|c| c.label.clone());
    let positive_coords = g
        .roots
        .iter()
        .filter(|&&i| ctx.rs.is_positive(i))
        .map(|&i| {
            ctx.rs
                .labels_to_root_coords(ctx.rs.root_labels(i))
                .iter()
                .map(|c| c.to_integer())
                .collect()
        })
        .collect();
    Ok(GammaDoc {
        group: ctx.group_doc(kernel),
        roots: g.roots,
        positive_coords,
        closed: g.closed,
        class,
    })
}

fn verify_doc(reports: &[TableReport]) -> VerifyDoc {
    VerifyDoc {
        groups: reports.iter().map(|r| r.group.clone()).collect(),
        checked: reports.iter().map(|r| r.checked).sum(),
        mismatches: reports
            .iter()
            .flat_map(|r| &r.mismatches)
            .map(|m| MismatchDoc {
                group: m.group.clone(),
                class: m.class.clone(),
                lambda: m.lambda.0.clone(),
                column: match m.column {
                    Column::C => "c_over_n".into(),
                    Column::D => "d".into(),
                },
                expected: m.expected.to_string(),
                got: m.got.to_string(),
            })
            .collect(),
    }
}

/// Runs a parsed command and renders its output.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Subsystems(g) => {
            let ctx = Ctx::new(g)?;
            let classes = enumerate_classes(&ctx.rs, &ctx.wg);
            let doc = SubsystemsDoc {
                family: g.family.letter().to_string(),
                rank: g.rank,
                classes: class_docs(&classes),
            };
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&doc)?,
                Format::Csv => {
                    let mut s = String::from("label,closed,size\n");
                    for c in &doc.classes {
                        let _ = writeln!(s, "{},{},{}", c.label, c.closed, c.size);
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("# {}{}: {} classes\n", doc.family, doc.rank, doc.classes.len());
                    for c in &doc.classes {
                        let closed = if c.closed { "closed" } else { "not closed" };
                        let _ = writeln!(s, "{:<12} {:>4} roots  {closed}", c.label, c.size);
                    }
                    s
                }
                f => unsupported("subsystems", f)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Hasse(g) => {
            let ctx = Ctx::new(g)?;
            let poset = build_poset(&ctx.wg, enumerate_classes(&ctx.rs, &ctx.wg));
            let text = match cli.format.unwrap_or(Format::Dot) {
                Format::Dot => poset.to_dot(&ctx.rs.lie_type().to_string()),
                Format::Json => to_json(&HasseDoc {
                    family: g.family.letter().to_string(),
                    rank: g.rank,
                    classes: class_docs(&poset.classes),
                    edges: poset.edge_labels(),
                })?,
                Format::Text => poset
                    .edge_labels()
                    .iter()
                    .map(|(a, b)| format!("{a} < {b}\n"))
                    .collect(),
                f => unsupported("hasse", f)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Coeffs { group, kernel, class } | Command::Dcoeffs { group, kernel, class } => {
            let kind = if matches!(cli.command, Command::Coeffs { .. }) { CoeffKind::C } else { CoeffKind::D };
            let ctx = Ctx::new(group)?;
            let kernel = kernel_preset(&kernel.kernel, ctx.rs.lie_type())?;
            let doc = coeff_doc(&ctx, &kernel, class, kind)?;
            Ok(Outcome::ok(render_table(&doc, kind, cli.format.unwrap_or(Format::Text))?))
        }
        Command::Kblock {
            group,
            kernel,
            class,
            cutoff,
            hbar,
        } => {
            let ctx = Ctx::new(group)?;
            let kernel = kernel_preset(&kernel.kernel, ctx.rs.lie_type())?;
            let cutoff = parse_q(cutoff)?;
            if cutoff < Q::from_integer(0) {
                return Err(Error::InvalidArgument("cutoff must be nonnegative".into()));
            }
            let doc = kblock_doc(&ctx, &kernel, class, cutoff, *hbar)?;
            Ok(Outcome::ok(render_kblock(&doc, cli.format.unwrap_or(Format::Text))?))
        }
        Command::Pq { group, kernel } => {
            let ctx = Ctx::new(group)?;
            let kernel = kernel_preset(&kernel.kernel, ctx.rs.lie_type())?;
            let doc = pq_doc(&ctx, &kernel)?;
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&doc)?,
                Format::Csv => {
                    let mut s = String::from("root,coords,p,q\n");
                    for r in &doc.roots {
                        let _ = writeln!(s, "{},{},{},{}", r.root, csv_labels(&r.coords), r.p, r.q);
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!("# {}{} kernel {}\n", doc.group.family, doc.group.rank, doc.group.kernel);
                    for r in &doc.roots {
                        let _ = writeln!(s, "{:>3}  {:<16} p/q = {}/{}", r.root, csv_labels(&r.coords), r.p, r.q);
                    }
                    s
                }
                f => unsupported("pq", f)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Gammax { group, kernel, point } => {
            let ctx = Ctx::new(group)?;
            let kernel = kernel_preset(&kernel.kernel, ctx.rs.lie_type())?;
            let doc = gamma_doc(&ctx, &kernel, point)?;
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&doc)?,
                Format::Text => {
                    let mut s = format!(
                        "class {}\nclosed {}\nroots {}\n",
                        doc.class.as_deref().unwrap_or("?"),
                        doc.closed,
                        csv_labels(&doc.roots.iter().map(|&r| r as i64).collect::<Vec<_>>())
                    );
                    for c in &doc.positive_coords {
                        let _ = writeln!(s, "  {}", csv_labels(c));
                    }
                    s
                }
                f => unsupported("gammax", f)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify { corpus } => {
            let tables = match corpus {
                Some(dir) => load_dir(dir)?,
                None => builtin(),
            };
            let reports = verify_all(&tables)?;
            let doc = verify_doc(&reports);
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => to_json(&doc)?,
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let _ = writeln!(
                            s,
                            "{:<8} {:>5} entries  {} mismatches  nodes {:?}",
                            r.group,
                            r.checked,
                            r.mismatches.len(),
                            r.permutation
                        );
                        for m in &r.mismatches {
                            let _ = writeln!(s, "  {m}");
                        }
                    }
                    s
                }
                f => unsupported("verify", f)?,
            };
            let code = if doc.mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
            Ok(Outcome { text, code })
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (program name first), runs the command and writes the
/// result to stdout or `--out`.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_MISMATCH;
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Outcome> {
        let mut argv = vec!["reftype"];
        argv.extend_from_slice(args);
        execute(&Cli::try_parse_from(argv).expect("arguments parse"))
    }

    #[test]
    fn su2_coeffs_csv() {
        let o = exec(&["coeffs", "--family", "A", "--rank", "1", "--class", "0", "--format", "csv"]).unwrap();
        assert_eq!(o.text, "lambda,c_over_n\n0,3\n2,-1\n");
        let o = exec(&["dcoeffs", "--family", "A", "--rank", "1", "--class", "0", "--format", "csv"]).unwrap();
        assert_eq!(o.text, "lambda,d\n0,2\n2,-1\n");
    }

    #[test]
    fn json_round_trip() {
        let o = exec(&["coeffs", "--family", "C", "--rank", "2", "--class", "C1", "--format", "json"]).unwrap();
        let doc: TableDoc = serde_json::from_str(&o.text).unwrap();
        assert_eq!(to_json(&doc).unwrap(), o.text);
        assert_eq!(doc.group.kernel, "sc");
    }

    #[test]
    fn a3_subsystems() {
        let o = exec(&["subsystems", "--family", "A", "--rank", "3", "--format", "json"]).unwrap();
        let doc: SubsystemsDoc = serde_json::from_str(&o.text).unwrap();
        assert_eq!(doc.classes.len(), 5);
        assert!(doc.classes.iter().all(|c| c.closed));
    }

    #[test]
    fn usage_errors() {
        let e = exec(&["coeffs", "--family", "A", "--rank", "2", "--class", "B1"]).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_USAGE);
        let e = exec(&["subsystems", "--family", "A", "--rank", "9"]).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_USAGE);
        assert!(exec(&["subsystems", "--family", "A", "--rank", "2", "--format", "dot"]).is_err());
        assert_eq!(run(["reftype", "nonsense"]), EXIT_USAGE);
        assert_eq!(run(["reftype", "pq", "--family", "Q", "--rank", "2"]), EXIT_USAGE);
    }

    #[test]
    fn gammax_so5() {
        let o = exec(&[
            "gammax", "--family", "C", "--rank", "2", "--kernel", "so-odd", "--point", "A=1/4,0", "--format", "json",
        ])
        .unwrap();
        let doc: GammaDoc = serde_json::from_str(&o.text).unwrap();
        assert!(!doc.closed);
        assert_eq!(doc.class.as_deref(), Some("D2"));
        assert_eq!(doc.positive_coords, vec![vec![1, 0], vec![1, 1]]);
    }
}
