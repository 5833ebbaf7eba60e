use clap::{Parser, Subcommand, ValueEnum};
use genocchi_core::action::{orbit, orbit_sum, Action};
use genocchi_core::cf::{catalog, catalog_names, seidel};
use genocchi_core::family::{family_poly, gamma_pistol, generate_pistols, generate_with, Budget, FamilyId, GenMode, StatMap};
use genocchi_core::path::{phi, phi_inverse, psi, psi_inverse, PathDiagram};
use genocchi_core::poly::gamma_extract;
use genocchi_core::verify::{run_many, CheckId, Params, Status, VerificationReport};
use genocchi_core::{Permutation, Poly, VarId};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "genocchi", version, about = "Exact enumeration and identity checks for Genocchi-type permutation families")]
struct Cli {
    /// Largest carrier an enumeration may walk, given as k for k!.
    #[arg(long, global = true, value_name = "K")]
    budget: Option<u32>,

    /// Also write the result as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one check, or `all`.
    Verify {
        check: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Run the checks concurrently; output order is unchanged.
        #[arg(long)]
        parallel: bool,
    },
    /// Generating polynomial of a family; variables left out of `--vars` are set to 1.
    Poly {
        family: FamilyId,
        n: usize,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<VarId>>,
    },
    /// List the members of a family.
    Enumerate { family: FamilyId, n: usize },
    /// Expand a named continued fraction.
    Cf {
        name: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Gamma coefficients in the basis t^k (1+yt)^(n-2k).
    Gamma {
        family: FamilyId,
        n: usize,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<VarId>>,
    },
    /// Orbit of a word under an action, with its orbit sum in p^ress q^les.
    Orbit { action: Action, word: Permutation },
    /// Apply a path bijection or its inverse.
    Bijection {
        map: MapKind,
        /// A word for phi/psi; steps and labels for the inverses.
        input: Vec<String>,
    },
    /// The first rows of the Genocchi columns.
    Seidel {
        #[arg(default_value_t = 6)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Phi,
    Psi,
    PhiInverse,
    PsiInverse,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<genocchi_core::Error> for Failure {
    fn from(e: genocchi_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<(String, Value), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.map(Budget::factorial).unwrap_or_default();
    let result = match cli.cmd {
        Cmd::Verify { check, max_n, order, parallel } => {
            let params = Params { max_n, order, budget };
            verify(&check, &params, parallel, cli.json.as_ref())
        }
        cmd => other(cmd, &budget).and_then(|(text, value)| {
            if let Some(path) = &cli.json {
                write_json(path, &value)?;
            }
            println!("{text}");
            Ok(())
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_json(path: &PathBuf, value: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn verify(check: &str, params: &Params, parallel: bool, json: Option<&PathBuf>) -> Result<(), Failure> {
    let checks: Vec<CheckId> = if check == "all" {
        CheckId::all().to_vec()
    } else {
        vec![check.parse()?]
    };
    let reports = run_many(&checks, params, parallel);
    for r in &reports {
        print_report(r);
    }
    if let Some(path) = json {
        let value = serde_json::to_value(&reports).map_err(|e| Failure::Usage(e.to_string()))?;
        write_json(path, &value)?;
    }
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, skip) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    println!("{pass} passed, {fail} failed, {skip} skipped");
    if fail > 0 {
        Err(Failure::Verification)
    } else if skip > 0 {
        Err(Failure::Usage("some checks exceeded the enumeration budget".into()))
    } else {
        Ok(())
    }
}

fn print_report(r: &VerificationReport) {
    let mut params = Vec::new();
    if let Some(n) = r.max_n {
        params.push(format!("n<={n}"));
    }
    if let Some(o) = r.order {
        params.push(format!("order {o}"));
    }
    println!("{} {} ({}) {}ms", r.status, r.check, params.join(", "), r.wall_time_ms);
    for line in r.witness.lines() {
        println!("    {line}");
    }
}

fn other(cmd: Cmd, budget: &Budget) -> Out {
    match cmd {
        Cmd::Verify { .. } => unreachable!("handled in main"),
        Cmd::Poly { family, n, vars } => poly(family, n, vars, budget),
        Cmd::Enumerate { family, n } => enumerate(family, n, budget),
        Cmd::Cf { name, order } => {
            let s = catalog::<BigInt>(&name).map_err(|_| {
                Failure::Usage(format!("unknown continued fraction `{name}`; expected one of {}", catalog_names().join(", ")))
            })?;
            let s = s.expand(order);
            let value = match s.constants() {
                Some(cs) => json!(cs.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
                None => json!(s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            };
            Ok((s.to_string(), value))
        }
        Cmd::Gamma { family, n, vars } => {
            let mut map = StatMap::default_for(family);
            if matches!(family, FamilyId::X | FamilyId::Xbar | FamilyId::Xhat) {
                // abar and bbar break the symmetry.
                map.0.retain(|(v, _)| !matches!(v, VarId::ABar | VarId::BBar));
            }
            map.0.retain(|(v, _)| matches!(v, VarId::T | VarId::Y) || vars.as_ref().map_or(true, |k| k.contains(v)));
            let p: Poly = family_poly(family, n, &map, GenMode::Pruned, budget)?;
            let g = gamma_extract(&p, n as u32)?;
            let lines: Vec<String> = g.gammas.iter().enumerate().map(|(k, c)| format!("gamma_{k}: {c}")).collect();
            let value = json!(g.gammas.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            Ok((lines.join("\n"), value))
        }
        Cmd::Orbit { action, word } => {
            let o = orbit(&word, action)?;
            let map = StatMap(vec![(VarId::P, genocchi_core::Stat::Ress), (VarId::Q, genocchi_core::Stat::Les)]);
            let sum: Poly = orbit_sum(&o, &map);
            let members: Vec<String> = o.members.iter().map(|m| m.to_string()).collect();
            let text = format!("{}\norbit sum: {sum}", members.join("\n"));
            Ok((text, json!({ "members": members, "sum": sum.to_string() })))
        }
        Cmd::Bijection { map, input } => bijection(map, &input),
        Cmd::Seidel { n } => {
            let (g, h, hn) = seidel::<BigInt>(n);
            let row = |v: &[BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
            let text = format!("G: {}\nH: {}\nh: {}", row(&g).join(", "), row(&h).join(", "), row(&hn).join(", "));
            Ok((text, json!({ "G": row(&g), "H": row(&h), "h": row(&hn) })))
        }
    }
}

fn full_poly(family: FamilyId, n: usize, budget: &Budget) -> Result<Poly, Failure> {
    if family == FamilyId::Pistol {
        return Ok(gamma_pistol(n, budget)?);
    }
    Ok(family_poly(family, n, &StatMap::default_for(family), GenMode::Pruned, budget)?)
}

fn poly(family: FamilyId, n: usize, vars: Option<Vec<VarId>>, budget: &Budget) -> Out {
    let p = match (&vars, family) {
        (Some(keep), FamilyId::Pistol) => {
            use VarId::*;
            let ones: Vec<(VarId, Poly)> = [Alpha, Beta, Gamma, AlphaBar, BetaBar, GammaBar]
                .iter()
                .filter(|v| !keep.contains(v))
                .map(|&v| (v, Poly::one()))
                .collect();
            gamma_pistol::<BigInt>(n, budget)?.subs_many(&ones)
        }
        (Some(keep), _) => {
            let map = StatMap(StatMap::default_for(family).0.into_iter().filter(|(v, _)| keep.contains(v)).collect());
            family_poly(family, n, &map, GenMode::Pruned, budget)?
        }
        (None, _) => full_poly(family, n, budget)?,
    };
    let value = serde_json::to_value(&p).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((p.to_string(), json!({ "text": p.to_string(), "terms": value })))
}

fn enumerate(family: FamilyId, n: usize, budget: &Budget) -> Out {
    let words: Vec<String> = if family == FamilyId::Pistol {
        generate_pistols(n, budget)?.iter().map(|f| f.to_string()).collect()
    } else {
        generate_with(family, n, GenMode::Pruned, budget)?.iter().map(|s| s.to_string()).collect()
    };
    let text = format!("{}\n{} members", words.join("\n"), words.len());
    Ok((text, json!(words)))
}

fn bijection(map: MapKind, input: &[String]) -> Out {
    let diagram_out = |d: PathDiagram| {
        let text = format!("{}\n{}", d.path, d.labels_string());
        let value = json!({ "steps": d.path.to_string(), "labels": d.labels_string() });
        Ok((text, value))
    };
    match map {
        MapKind::Phi | MapKind::Psi => {
            let s: Permutation = input.join(" ").parse()?;
            let d = if matches!(map, MapKind::Phi) { phi(&s)? } else { psi(&s)? };
            diagram_out(d)
        }
        MapKind::PhiInverse | MapKind::PsiInverse => {
            let [steps, labels @ ..] = input else {
                return Err(Failure::Usage("expected a step string and a label list".into()));
            };
            let d = PathDiagram::parse(steps, &labels.join(""))?;
            let s = if matches!(map, MapKind::PhiInverse) { phi_inverse(&d)? } else { psi_inverse(&d)? };
            Ok((s.to_string(), json!(s.to_string())))
        }
    }
}
