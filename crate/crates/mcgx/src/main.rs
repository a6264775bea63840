//! `mcgx`: compute in the mapping class group of a punctured surface and
//! decide handlebody-extension membership.

use clap::{Parser, Subcommand};
use mcg_core::ext::{self, Certificate};
use mcg_core::gens::GeneratorTable;
use mcg_core::link::{self, ArcOrientation};
use mcg_core::{Signature, Word};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mcgx", about = "mapping classes, handlebody extensions, and plat gluings")]
struct Cli {
    /// Genus of the surface.
    #[arg(short = 'g', long)]
    genus: u32,
    /// Number of arcs (2n punctures).
    #[arg(short = 'n', long)]
    arcs: u32,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Search depth for membership and coset queries.
    #[arg(long, default_value_t = 6)]
    depth: u32,
    /// Seed for randomized experiments (link invariance sampling).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the link presentation in exchange format to this file.
    #[arg(long)]
    emit_presentation: Option<std::path::PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compose a generator word and print the automorphism.
    Compose { word: String },
    /// Apply a mapping class to a word in the surface group.
    Act { word: String, target: String },
    /// Induced permutation of the punctures.
    Perm { word: String },
    /// Induced action on first homology.
    Homology { word: String },
    /// Run the full relation suite.
    Relations,
    /// Decide or refute extension membership.
    Member {
        word: String,
        /// Require an extension fixing each arc (the pure subgroup).
        #[arg(long)]
        pure: bool,
    },
    /// Decide whether two gluing words present the same link.
    Coset { word1: String, word2: String },
    /// Present the link complement glued by the word.
    Link {
        word: String,
        /// Also compute abelianization and Alexander data.
        #[arg(long)]
        invariants: bool,
    },
    /// Dump the curve catalog.
    Catalog,
    /// Print the generating set.
    Gens {
        #[arg(long)]
        pure: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}

fn parse(table: &GeneratorTable, text: &str) -> Result<mcg_core::MappingClass, String> {
    table.parse_class(text).map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let sig = Signature::new(cli.genus, cli.arcs).map_err(|e| e.to_string())?;
    let table = GeneratorTable::new(&sig);
    match &cli.cmd {
        Cmd::Compose { word } => {
            let mc = parse(&table, word)?;
            let a = table.realize(&mc).map_err(|e| e.to_string())?;
            if cli.json {
                let images: Vec<_> = (0..sig.rank() as u32)
                    .map(|i| {
                        json!({
                            "generator": sig.gen_name(i),
                            "image": sig.display_word(&a.apply(&Word::gen(i))),
                        })
                    })
                    .collect();
                println!("{}", json!({ "word": mc.expression(), "images": images }));
            } else {
                println!("class: {}", mc.expression());
                for i in 0..sig.rank() as u32 {
                    let img = a.apply(&Word::gen(i));
                    println!("  {} -> {}", sig.gen_name(i), render(&sig, &img));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Act { word, target } => {
            let mc = parse(&table, word)?;
            let a = table.realize(&mc).map_err(|e| e.to_string())?;
            let w = sig.parse_word(target).map_err(|e| e.to_string())?;
            let img = a.checked_apply(&w).map_err(|e| e.to_string())?;
            if cli.json {
                println!("{}", json!({ "image": sig.display_word(&img) }));
            } else {
                println!("{}", render(&sig, &img));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Perm { word } => {
            let mc = parse(&table, word)?;
            let a = table.realize(&mc).map_err(|e| e.to_string())?;
            let p = a.induced_permutation().ok_or("not a mapping class")?;
            if cli.json {
                let imgs: Vec<usize> = (0..p.degree()).map(|i| p.image(i) + 1).collect();
                println!("{}", json!({ "cycles": p.cycles(), "images": imgs }));
            } else {
                println!("{}", p.cycles());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Homology { word } => {
            let mc = parse(&table, word)?;
            let a = table.realize(&mc).map_err(|e| e.to_string())?;
            let h = a.homology_action();
            if cli.json {
                let rows: Vec<Vec<String>> = (0..sig.rank())
                    .map(|i| (0..sig.rank()).map(|j| h.mat[(i, j)].to_string()).collect())
                    .collect();
                println!("{}", json!({ "matrix": rows, "det": h.det().to_string() }));
            } else {
                for i in 0..sig.rank() {
                    let row: Vec<String> =
                        (0..sig.rank()).map(|j| h.mat[(i, j)].to_string()).collect();
                    println!("[ {} ]", row.join(" "));
                }
                println!("det = {}", h.det());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Relations => {
            let checks = ext::relation_suite(&table);
            let all_pass = checks.iter().all(|c| c.passed);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&checks).unwrap());
            } else {
                for c in &checks {
                    println!("{}", c.report_line());
                }
                println!(
                    "{} relations, {} failed",
                    checks.len(),
                    checks.iter().filter(|c| !c.passed).count()
                );
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Member { word, pure } => {
            let mc = parse(&table, word)?;
            let cert = ext::membership(&table, &mc, cli.depth, *pure)?;
            print_certificate(cli, &cert);
            Ok(certificate_exit(&cert))
        }
        Cmd::Coset { word1, word2 } => {
            let w1 = parse(&table, word1)?;
            let w2 = parse(&table, word2)?;
            let cert = ext::coset_equivalent(&table, &w1, &w2, cli.depth)?;
            print_certificate(cli, &cert);
            Ok(certificate_exit(&cert))
        }
        Cmd::Link { word, invariants } => {
            let mc = parse(&table, word)?;
            let a = table.realize(&mc).map_err(|e| e.to_string())?;
            let pres = link::link_presentation(&sig, &a, ArcOrientation::Forward)
                .map_err(|e| e.to_string())?;
            if let Some(path) = &cli.emit_presentation {
                std::fs::write(path, pres.to_exchange()).map_err(|e| e.to_string())?;
            }
            let mut payload = json!({ "presentation": pres.to_text() });
            if !cli.json {
                print!("{}", pres.to_text());
            }
            if *invariants {
                let (free, tors) = pres.abelianization();
                let (afree, ators) = pres.ambient_abelianization();
                let comps = link::link_components(&sig, &a).map_err(|e| e.to_string())?;
                let alex = link::alexander_matrix(&sig, &pres, &comps);
                let gcds = link::minor_gcds(&alex, 6);
                let names: Vec<String> = (1..=comps.count).map(|i| format!("t{}", i)).collect();
                let gstr: Vec<String> = gcds.iter().map(|p| p.render(&names)).collect();
                if cli.json {
                    payload["invariants"] = json!({
                        "h1_free_rank": free,
                        "h1_torsion": tors.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        "ambient_free_rank": afree,
                        "ambient_torsion": ators.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        "components": comps.count,
                        "minor_gcds": gstr,
                    });
                } else {
                    println!("components: {}", comps.count);
                    println!("H1(complement): {}", h1_string(free, &tors));
                    println!("H1(ambient): {}", h1_string(afree, &ators));
                    println!("minor gcds: [{}]", gstr.join(", "));
                }
            }
            if cli.json {
                println!("{}", payload);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Catalog => {
            if cli.json {
                let entries: Vec<_> = table
                    .catalog()
                    .iter()
                    .map(|c| {
                        json!({
                            "name": c.name,
                            "word": sig.display_word(&c.word),
                            "homology": c.homology,
                        })
                    })
                    .collect();
                println!("{}", json!(entries));
            } else {
                for c in table.catalog().iter() {
                    println!("{:<12} {:<40} {:?}", c.name, render(&sig, &c.word), c.homology);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gens { pure } => {
            let gs = table.generating_set(*pure);
            if cli.json {
                println!("{}", json!(gs));
            } else {
                for name in gs {
                    println!("{}", name);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render(sig: &Signature, w: &Word) -> String {
    let s = sig.display_word(w);
    if s.is_empty() {
        "<identity>".to_string()
    } else {
        s
    }
}

fn h1_string(free: usize, tors: &[mcg_core::num_bigint::BigInt]) -> String {
    let mut parts = Vec::new();
    match free {
        0 => {}
        1 => parts.push("Z".to_string()),
        k => parts.push(format!("Z^{}", k)),
    }
    for t in tors {
        parts.push(format!("Z/{}", t));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn print_certificate(cli: &Cli, cert: &Certificate) {
    if cli.json {
        println!("{}", serde_json::to_string(cert).unwrap());
    } else {
        println!("{}", cert.describe());
    }
}

fn certificate_exit(cert: &Certificate) -> ExitCode {
    match cert {
        Certificate::Member { .. } => ExitCode::SUCCESS,
        Certificate::Refuted { .. } => ExitCode::from(1),
        Certificate::Unknown { .. } => ExitCode::from(2),
    }
}
