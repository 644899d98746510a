use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxkit::affine::{AffineRootDatum, AffineType};
use coxkit::automata::{build_automaton, low_elements, AutomatonKind};
use coxkit::coxeter::{cayley_bfs, CoxeterMatrix, CoxeterSystem, FiniteType, GroupElement};
use coxkit::dihedral::{canonical_generators, canonical_generators_repfree, DihedralSubgroup};
use coxkit::prefixes::{is_reflection_prefix, palindromic_word, prefixes_of, reflection_root};
use coxkit::roots::{enumerate_roots, m_small_roots, CoverKind, RootPoset, DEFAULT_DEPTH_CAP};
use coxkit::series::{chain_series, dfa_series, pal_series, RationalSeries};
use coxkit::CoxError;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "coxkit", version, about = "Exact combinatorics of Coxeter systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots by depth, with dominance depth and root-poset covers
    Roots {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        /// Show the m-small roots instead of a depth ball
        #[arg(long, value_name = "M")]
        small: Option<usize>,
        /// List covers
        #[arg(long)]
        poset: bool,
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
    },
    /// Canonical automaton on m-small inversion sets
    Automaton {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Kind::Red)]
        kind: Kind,
        #[arg(long, value_name = "FILE")]
        dot: Option<String>,
        /// Print the generating function of accepted words
        #[arg(long)]
        series: bool,
        /// List the minimal element of each small set
        #[arg(long)]
        low: bool,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Reflections up to a length, with palindromic words and roots
    Reflections {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 7)]
        max_length: usize,
    },
    /// Reflection prefixes of a reflection, or a prefix check with --check
    Prefixes {
        #[command(flatten)]
        sys: SystemArgs,
        word: String,
        #[arg(long)]
        check: bool,
    },
    /// Canonical generators of the dihedral reflection subgroup <r, t>
    Dihedral {
        #[command(flatten)]
        sys: SystemArgs,
        word_r: String,
        word_t: String,
        /// Use reflection lengths instead of root depths
        #[arg(long)]
        repfree: bool,
    },
    /// Orbit polynomials and closed-form series of an affine Weyl group
    Affine {
        /// Affine type, e.g. ~B3 (the tilde is optional)
        kind: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct SystemArgs {
    /// Named system: A3, B4, D5, E8, F4, G2, H3, H4, I2(m), U3, ~A2, ~G2, ...
    #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
    preset: Option<String>,
    /// Coxeter matrix as JSON {"rank":n,"m":[[...]]} (0 encodes infinity), inline or a file path
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long, value_enum, default_value_t = Norm::Unitary)]
    norm: Norm,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 200_000)]
    max_elements: usize,
    #[arg(long, default_value_t = 100_000)]
    max_roots: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Norm {
    Unitary,
    Crystallographic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Red,
    Pref,
}

impl SystemArgs {
    fn build(&self) -> anyhow::Result<CoxeterSystem> {
        let sys = match (&self.preset, &self.matrix, self.norm) {
            (Some(p), _, Norm::Unitary) => CoxeterSystem::from_preset(p)?,
            (Some(p), _, Norm::Crystallographic) => {
                let (m, g) = match p.trim().strip_prefix('~') {
                    Some(rest) => {
                        let t = AffineType::parse(rest)?;
                        (t.coxeter_matrix(), t.gram())
                    }
                    None => {
                        let t = parse_finite(p)?;
                        (CoxeterMatrix::finite(t), t.gram())
                    }
                };
                CoxeterSystem::crystallographic(m, g)?
            }
            (None, Some(text), Norm::Unitary) => {
                let text = if text.trim_start().starts_with('{') {
                    text.clone()
                } else {
                    fs::read_to_string(text).map_err(|e| CoxError::Parse(format!("{text}: {e}")))?
                };
                CoxeterSystem::new(CoxeterMatrix::from_json(&text)?)
            }
            (None, Some(_), Norm::Crystallographic) => {
                return Err(CoxError::Parse("crystallographic norms need a Weyl or affine preset".into()).into())
            }
            (None, None, _) => return Err(CoxError::Parse("give --preset or --matrix".into()).into()),
        };
        Ok(sys)
    }

    fn element_cap(&self, rank: usize) -> usize {
        match std::env::var("COXKIT_MAX_MEM").ok().and_then(|v| parse_bytes(&v)) {
            // two n x n matrices of small algebraic numbers per element, plus bookkeeping
            Some(bytes) => self.max_elements.min(bytes / (2 * rank * rank * 64 + 256)).max(1),
            None => self.max_elements,
        }
    }

    fn element(&self, sys: &CoxeterSystem, word: &str) -> anyhow::Result<GroupElement> {
        Ok(sys.parse_element(word)?)
    }
}

fn parse_finite(name: &str) -> anyhow::Result<FiniteType> {
    let name = name.trim();
    let unknown = || CoxError::UnknownPreset(name.to_string());
    let mut chars = name.chars();
    let letter = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    Ok(FiniteType::new(letter, n).map_err(|_| unknown())?)
}

fn parse_bytes(v: &str) -> Option<usize> {
    let v = v.trim();
    let (digits, mult) = match v.chars().last()? {
        'K' | 'k' => (&v[..v.len() - 1], 1 << 10),
        'M' | 'm' => (&v[..v.len() - 1], 1 << 20),
        'G' | 'g' => (&v[..v.len() - 1], 1 << 30),
        _ => (v, 1),
    };
    digits.trim().parse::<usize>().ok().map(|d| d * mult)
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
        _ => print!("{text}"),
    }
}

fn write_dot(path: &Option<String>, dot: &str) -> anyhow::Result<()> {
    if let Some(path) = path {
        fs::write(path, dot).with_context(|| format!("writing {path}"))?;
    }
    Ok(())
}

fn series_text(name: &str, s: &RationalSeries, terms: usize) -> String {
    let coeffs: Vec<String> = s.coefficients(terms).iter().map(|c| c.to_string()).collect();
    format!("{name}(q) = {s}\n  first {terms} coefficients: {}\n", coeffs.join(", "))
}

fn cmd_roots(args: &SystemArgs, max_depth: usize, small: Option<usize>, poset: bool, dot: &Option<String>) -> anyhow::Result<()> {
    let sys = args.build()?;
    let p: RootPoset = match small {
        Some(m) => m_small_roots(&sys, m, DEFAULT_DEPTH_CAP, args.max_roots)?,
        None => enumerate_roots(&sys, max_depth, args.max_roots)?,
    };
    let dot_text = p.to_dot();
    write_dot(dot, &dot_text)?;
    if args.format == Format::Dot {
        print!("{dot_text}");
        return Ok(());
    }
    let mut text = String::new();
    for d in 0..=p.max_depth() {
        let level: Vec<String> = p.level(d).map(|r| format!("{} (dp_inf {})", r.label(), r.dpinf)).collect();
        if !level.is_empty() {
            text += &format!("depth {d}: {}\n", level.join(", "));
        }
    }
    text += &format!("{} roots\n", p.len());
    let kind = |k: CoverKind| if k == CoverKind::Long { "long" } else { "short" };
    if poset {
        for c in p.covers() {
            text += &format!(
                "{} -> {} by s{} ({})\n",
                p.roots()[c.from].label(),
                p.roots()[c.to].label(),
                c.generator + 1,
                kind(c.kind)
            );
        }
    }
    let roots: Vec<Value> = p
        .roots()
        .iter()
        .map(|r| json!({ "root": r.label(), "depth": r.depth, "dpinf": r.dpinf }))
        .collect();
    let covers: Vec<Value> = p
        .covers()
        .iter()
        .map(|c| json!({ "from": c.from, "to": c.to, "generator": c.generator + 1, "kind": kind(c.kind) }))
        .collect();
    emit(args.format, text, json!({ "roots": roots, "covers": covers }));
    Ok(())
}

fn cmd_automaton(
    args: &SystemArgs,
    m: usize,
    kind: Kind,
    dot: &Option<String>,
    series: bool,
    low: bool,
    terms: usize,
) -> anyhow::Result<()> {
    let sys = args.build()?;
    let kind = if kind == Kind::Red { AutomatonKind::Red } else { AutomatonKind::Pref };
    let dfa = build_automaton(&sys, m, kind, args.max_roots)?;
    write_dot(dot, &dfa.to_dot())?;
    if args.format == Format::Dot {
        print!("{}", dfa.to_dot());
        return Ok(());
    }
    let mut text = format!(
        "{} automaton, m = {m}\n{} small roots\n{} states ({} distinct small sets), {} final\n",
        kind.name(),
        dfa.small_roots().len(),
        dfa.len(),
        dfa.distinct_small_sets(),
        dfa.final_count()
    );
    let mut value = dfa.to_json();
    if low {
        let lows = low_elements(&sys, &dfa, args.element_cap(sys.rank()))?;
        let rejected: Vec<&Vec<usize>> =
            dfa.states().iter().filter(|s| !s.accept_flag).map(|s| &s.small_set).collect();
        let mut listing = BTreeMap::new();
        text += "low elements:\n";
        let mut lows: Vec<_> = lows.into_iter().collect();
        lows.sort_by(|a, b| (a.1.length(), a.1.word()).cmp(&(b.1.length(), b.1.word())));
        for (set, w) in &lows {
            let mark = if kind == AutomatonKind::Pref && rejected.contains(&set) { " (rejecting)" } else { "" };
            text += &format!("  {}{mark}\n", w.word());
            listing.insert(w.word().to_string(), set.clone());
        }
        value["low_elements"] = json!(listing);
    }
    if series {
        let s = dfa_series(&dfa);
        text += &series_text("W", &s, terms);
        value["series"] = s.to_json(terms);
        if kind == AutomatonKind::Pref {
            let pref = chain_series(&s);
            let pal = pal_series(&pref);
            text += &series_text("Pref_T", &pref, terms);
            text += &series_text("Pal", &pal, terms);
            value["pref_series"] = pref.to_json(terms);
            value["pal_series"] = pal.to_json(terms);
        }
    }
    emit(args.format, text, value);
    Ok(())
}

fn cmd_reflections(args: &SystemArgs, max_length: usize) -> anyhow::Result<()> {
    let sys = args.build()?;
    let ball = cayley_bfs(&sys, max_length, args.element_cap(sys.rank()))?;
    let mut census = vec![0usize; max_length + 1];
    let mut text = String::new();
    let mut list = Vec::new();
    for w in ball.iter() {
        let Some(root) = sys.is_reflection(w) else { continue };
        census[w.length()] += 1;
        let pal = palindromic_word(&sys, w)?;
        let depth = sys.root_depth(&root)?;
        text += &format!("{}  palindrome {}  root {}  depth {depth}\n", w.word(), pal, root.label());
        list.push(json!({
            "word": w.word().to_string(),
            "palindrome": pal.to_one_based(),
            "root": root.label(),
            "depth": depth,
        }));
    }
    let counts: Vec<String> = census.iter().map(|c| c.to_string()).collect();
    text += &format!("census by length: {}\n", counts.join(", "));
    emit(args.format, text, json!({ "census": census, "reflections": list }));
    Ok(())
}

fn cmd_prefixes(args: &SystemArgs, word: &str, check: bool) -> anyhow::Result<()> {
    let sys = args.build()?;
    let w = args.element(&sys, word)?;
    if check {
        let found = if w.is_identity() { None } else { is_reflection_prefix(&sys, &w)? };
        let (text, value) = match found {
            Some(p) => (
                format!(
                    "{} is a reflection prefix of {} (root {})\n",
                    w.word(),
                    p.reflection.word(),
                    p.root.label()
                ),
                json!({ "prefix": true, "reflection": p.reflection.word().to_string(), "root": p.root.label() }),
            ),
            None => (format!("{} is not a reflection prefix\n", w.word()), json!({ "prefix": false })),
        };
        emit(args.format, text, value);
        return Ok(());
    }
    let prefixes = prefixes_of(&sys, &w)?;
    let words: Vec<String> = prefixes.iter().map(|p| p.element.word().to_string()).collect();
    let pal = palindromic_word(&sys, &w)?;
    let text = format!(
        "reflection {} (root {})\nprefixes: {}\n",
        pal,
        reflection_root(&sys, &w)?.label(),
        words.join(", ")
    );
    emit(args.format, text, json!({ "reflection": pal.to_one_based(), "prefixes": words }));
    Ok(())
}

fn cmd_dihedral(args: &SystemArgs, r: &str, t: &str, repfree: bool) -> anyhow::Result<()> {
    let sys = args.build()?;
    let r = args.element(&sys, r)?;
    let t = args.element(&sys, t)?;
    let d: DihedralSubgroup =
        if repfree { canonical_generators_repfree(&sys, &r, &t)? } else { canonical_generators(&sys, &r, &t)? };
    let (a, b) = (&d.canonical.0, &d.canonical.1);
    let order = d.order.map_or_else(|| "infinite".to_string(), |m| m.to_string());
    let mut text = format!("canonical generators: {}, {}\norder of product: {order}\n", a.word(), b.word());
    let mut value = json!({
        "canonical": [a.word().to_string(), b.word().to_string()],
        "order": d.order,
    });
    if let Some((x, y)) = &d.simple_roots {
        text += &format!("simple roots: {}, {}\n", x.label(), y.label());
        value["simple_roots"] = json!([x.label(), y.label()]);
    }
    emit(args.format, text, value);
    Ok(())
}

fn cmd_affine(kind: &str, terms: usize, format: Format) -> anyhow::Result<()> {
    if format == Format::Dot {
        bail!(CoxError::Parse("affine output is text or json".into()));
    }
    let datum = AffineRootDatum::from_name(kind)?;
    let ds = datum.depth_series()?;
    let mut text = format!("{}\n", datum.kind().name());
    for o in &ds.orbits {
        text += &format!(
            "orbit {} ({} roots{}): P = {}, M = {}\n",
            o.orbit + 1,
            datum.orbits()[o.orbit].len(),
            if datum.orbit_contains_highest_root(o.orbit) { ", highest root" } else { "" },
            o.polynomial,
            o.max_depth
        );
    }
    text += &format!("P = {}\nM = {}\n", ds.numerator, ds.period);
    text += &series_text("Phi+", &ds.series, terms);
    text += &series_text("T", &ds.reflection_series(), terms);
    emit(format, text, datum.report(terms)?);
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<CoxError>() {
        Some(CoxError::CapExceeded { .. }) => 3,
        Some(CoxError::NotReflection(_) | CoxError::NotPositiveRoot(_) | CoxError::Domain(_) | CoxError::FieldMismatch) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Roots { sys, max_depth, small, poset, dot } => cmd_roots(sys, *max_depth, *small, *poset, dot),
        Command::Automaton { sys, m, kind, dot, series, low, terms } => {
            cmd_automaton(sys, *m, *kind, dot, *series, *low, *terms)
        }
        Command::Reflections { sys, max_length } => cmd_reflections(sys, *max_length),
        Command::Prefixes { sys, word, check } => cmd_prefixes(sys, word, *check),
        Command::Dihedral { sys, word_r, word_t, repfree } => cmd_dihedral(sys, word_r, word_t, *repfree),
        Command::Affine { kind, terms, format } => cmd_affine(kind, *terms, *format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
