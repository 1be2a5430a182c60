//! `grig` — command-line access to the group, lift, homology, and
//! evidence computations. Output is deterministic given identical
//! arguments and seed: exit 0 on success, 1 on domain errors, 2 on usage
//! errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grigorchuk::emit::{self, KernelJson, LiftJson, PortraitJson, SchreierJson, ShoePermJson};
use grigorchuk::group::{Gen, GenWord};
use grigorchuk::words::BinaryWord;
use grigorchuk::{evidence, homology, pants, portrait, schreier, verify};

#[derive(Parser)]
#[command(name = "grig", version, about = "Exact computation in Grigorchuk's group and its pants-tree lift")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct FormatOpt {
    /// Output format (dot applies to portraits and Schreier graphs)
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a generator word to a binary word (rightmost letter first)
    Eval {
        /// word over a,b,c,d; "e" is the identity
        word: String,
        /// word over 0,1; "^" is the root
        target: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// As eval, but each letter acts through its closed-form description
    EvalClosed {
        word: String,
        target: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Decide whether a word acts as the identity
    Trivial {
        word: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Decide whether two words represent the same element
    Equal {
        left: String,
        right: String,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Order of the element represented by a word
    Order {
        word: String,
        /// exponent cap: fail beyond order 2^cap
        #[arg(long, default_value_t = grigorchuk::DEFAULT_ORDER_CAP_EXP)]
        cap: u32,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Swap-vertex portrait of a word
    Portrait {
        word: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Closed-form swap vertices of a single generator
    Swaps {
        /// one of a, b, c, d
        generator: char,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Labeled action graph of the generators on one level
    Schreier {
        level: usize,
        #[arg(long, default_value_t = grigorchuk::DEFAULT_DEPTH_CAP)]
        cap: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Exact ball sizes in the word metric
    Ball {
        radius: usize,
        #[arg(long, default_value_t = grigorchuk::DEFAULT_BALL_CAP)]
        cap: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Order histogram over seeded random reduced words
    SampleOrders {
        #[arg(long, default_value_t = 500)]
        count: u64,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = grigorchuk::DEFAULT_ORDER_CAP_EXP)]
        cap: u32,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Lift of a word: portrait plus Dehn-twist coordinates
    Lift {
        word: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Twist vector of a relator (a word trivial in G)
    Kernel {
        word: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Shoe permutation induced by a word
    Shoes {
        word: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[command(flatten)]
        format: FormatOpt,
    },
    /// Run the self-check suite
    Verify {
        /// run only the named sections (repeatable)
        #[arg(long)]
        section: Vec<String>,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = grigorchuk::DEFAULT_ORDER_CAP_EXP)]
        cap: u32,
        #[command(flatten)]
        format: FormatOpt,
    },
}

fn parse_genword(s: &str) -> grigorchuk::Result<GenWord> {
    if s == "e" {
        return Ok(GenWord::identity());
    }
    s.parse()
}

fn parse_binword(s: &str) -> grigorchuk::Result<BinaryWord> {
    if s == "^" {
        return Ok(BinaryWord::ROOT);
    }
    s.parse()
}

/// Visible spelling of a word in text output: the root prints as "^".
fn spell(w: &BinaryWord) -> String {
    if w.is_empty() {
        "^".to_string()
    } else {
        w.to_string()
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("usage error: {msg}");
    ExitCode::from(2)
}

fn run(command: Command) -> grigorchuk::Result<ExitCode> {
    match command {
        Command::Eval { word, target, format } | Command::EvalClosed { word, target, format }
            if matches!(format.format, Format::Dot) =>
        {
            let _ = (word, target);
            Ok(usage_error("dot output is not defined for eval"))
        }
        Command::Eval { word, target, format } => {
            let image = parse_genword(&word)?.apply(parse_binword(&target)?);
            match format.format {
                Format::Text => println!("{image}"),
                _ => println!("{}", serde_json::json!({ "word": image.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::EvalClosed { word, target, format } => {
            let image = parse_genword(&word)?.apply_closed(parse_binword(&target)?);
            match format.format {
                Format::Text => println!("{image}"),
                _ => println!("{}", serde_json::json!({ "word": image.to_string() })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trivial { word, format } => {
            let answer = parse_genword(&word)?.is_trivial()?;
            match format.format {
                Format::Json => println!("{}", serde_json::json!({ "trivial": answer })),
                _ => println!("{answer}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equal { left, right, format } => {
            let answer = parse_genword(&left)?.equal(&parse_genword(&right)?)?;
            match format.format {
                Format::Json => println!("{}", serde_json::json!({ "equal": answer })),
                _ => println!("{answer}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Order { word, cap, format } => {
            let order = parse_genword(&word)?.order(cap)?;
            match format.format {
                Format::Json => println!("{}", serde_json::json!({ "order": order })),
                _ => println!("{order}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Portrait { word, depth, format } => {
            let p = portrait::portrait(&parse_genword(&word)?, depth)?;
            match format.format {
                Format::Text => {
                    for v in p.swap_vertices() {
                        println!("{}", spell(&v));
                    }
                }
                Format::Json => println!("{}", emit::to_json(&PortraitJson::from(&p))),
                Format::Dot => print!("{}", emit::portrait_dot(&p)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Swaps { generator, depth, format } => {
            let g = Gen::from_char(generator)?;
            let vs = portrait::swap_vertices(g, depth);
            match format.format {
                Format::Json => {
                    let names: Vec<String> = vs.iter().map(BinaryWord::to_string).collect();
                    println!("{}", serde_json::json!({ "depth": depth, "swaps": names }));
                }
                _ => {
                    for v in vs {
                        println!("{}", spell(&v));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Schreier { level, cap, format } => {
            let g = schreier::schreier_with_cap(level, cap)?;
            match format.format {
                Format::Text => {
                    for (from, gen, to) in g.edges() {
                        println!("{} {} {}", spell(&from), gen, spell(&to));
                    }
                }
                Format::Json => println!("{}", emit::to_json(&SchreierJson::from(&g))),
                Format::Dot => print!("{}", emit::schreier_dot(&g)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ball { radius, cap, format } => {
            let table = evidence::ball_sizes_with_cap(radius, cap)?;
            match format.format {
                Format::Json => {
                    println!("{}", serde_json::json!({ "radius": radius, "sizes": table.sizes }))
                }
                _ => {
                    for (r, size) in table.sizes.iter().enumerate() {
                        println!("{r} {size}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SampleOrders { count, max_len, seed, cap, format } => {
            let hist = evidence::sample_orders(count, max_len, seed, cap);
            match format.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "count": count,
                        "max_len": max_len,
                        "seed": seed,
                        "cap": cap,
                        "histogram": hist.by_order,
                        "failures": hist.failures,
                    })
                ),
                _ => {
                    for (order, n) in &hist.by_order {
                        println!("{order} {n}");
                    }
                    println!("failures {}", hist.failures);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lift { word, depth, format } => {
            let lift = pants::lift_word(&parse_genword(&word)?, depth)?;
            match format.format {
                Format::Json => println!("{}", emit::to_json(&LiftJson::from(&lift))),
                _ => {
                    for v in lift.swap_vertices() {
                        println!("swap {}", spell(&v));
                    }
                    for (w, t) in lift.twists() {
                        println!("twist {} {t}", spell(w));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel { word, depth, format } => {
            let twists = pants::kernel_vector(&parse_genword(&word)?, depth)?;
            match format.format {
                Format::Json => {
                    println!("{}", emit::to_json(&KernelJson { twists: emit::twists_json(&twists) }))
                }
                _ => {
                    for (w, t) in &twists {
                        println!("{} {t}", spell(w));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Shoes { word, depth, format } => {
            let perm = homology::shoe_perm(&parse_genword(&word)?, depth)?;
            match format.format {
                Format::Json => println!("{}", emit::to_json(&ShoePermJson::from(&perm))),
                _ => {
                    for (from, to) in perm.moved() {
                        println!("{from} {to}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { section, depth, seed, cap, format } => {
            for name in &section {
                if !verify::SECTION_NAMES.contains(&name.as_str()) {
                    return Ok(usage_error(&format!(
                        "unknown section {name:?}; known sections: {}",
                        verify::SECTION_NAMES.join(", ")
                    )));
                }
            }
            let params = verify::VerifyParams {
                depth,
                seed,
                cap_exp: cap,
                sections: if section.is_empty() { None } else { Some(section) },
            };
            let report = verify::run(&params);
            match format.format {
                Format::Json => println!("{}", emit::to_json(&report)),
                _ => {
                    for note in &report.notes {
                        println!("note: {note}");
                    }
                    for s in &report.sections {
                        println!("{}: {} ({})", s.name, if s.pass { "PASS" } else { "FAIL" }, s.detail);
                    }
                    println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
                }
            }
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
