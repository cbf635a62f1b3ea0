//! `covertool` command-line front end.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical check failed,
//! 2 usage or input error, 3 resource cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use covertool::betti::betti_oracle;
use covertool::depth::{analytic_spread, depth_table};
use covertool::graph::check_cm_vwc_labeling;
use covertool::ideal::cover_ideal_recursive;
use covertool::io::{self, Input};
use covertool::lq::{hs_ideal, linear_quotients_check, LqOutcome};
use covertool::normality::{
    associated_primes, closure_power, decomposition_certificate, normality_certify, persistence_check,
};
use covertool::rees::{
    check_kernel, default_t_order, l_exchange_check, rees_groebner, standard_monomials,
    structure_and_quadraticity_check, toric_ideal, verify_groebner, ReesPresentation, ToricIdeal,
};
use covertool::scan::{scan, Check, Mode, ScanConfig};
use covertool::{cover_ideal, par, power, Caps, Error, Graph, MonomialIdeal, OrderSpec};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "covertool", version, about = "Cover ideals of Cohen-Macaulay very well-covered graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    /// Input JSON (graph or ideal); standard input when omitted or `-`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Lex order on the base variables: A is x1>y1>x2>..., B is x1>...>xn>y1>...
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::A)]
    order: OrderArg,
    /// Power exponent, homological index or standard-monomial degree.
    #[arg(long, global = true)]
    k: Option<u32>,
    /// Power whose homological shift ideals are taken.
    #[arg(long, global = true)]
    ell: Option<u32>,
    /// Largest power examined.
    #[arg(long, global = true)]
    kmax: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 keeps the default pool).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true)]
    cap_spairs: Option<usize>,
    #[arg(long, global = true)]
    cap_box: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    WhiskerRandom,
    WhiskerExhaustive,
    CmvwcRandom,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportWhat {
    Ideal,
    Rees,
    Toric,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Cohen-Macaulay very well-covered labeling conditions.
    CheckCmvwc,
    /// Cover ideal of the input graph.
    CoverIdeal {
        /// Build it by the structural recursion instead of cover enumeration.
        #[arg(long)]
        recursive: bool,
    },
    /// k-th power of the ideal.
    Power,
    /// Linear quotients of the k-th power under --order.
    Lq,
    /// k-th homological shift ideal of the ell-th power (order A trace).
    Hs,
    /// Multigraded Betti numbers of the k-th power.
    Betti,
    /// Depth table for powers 1..kmax.
    Depth,
    /// Analytic spread of the ideal.
    Spread,
    /// Reduced basis of the toric ideal.
    ToricGb,
    /// Reduced basis of the Rees presentation ideal.
    ReesGb,
    /// Standard monomials of degree k.
    StdMonomials,
    /// Exchange property for standard monomials of degree up to kmax.
    LExchange,
    /// Verify the Rees and toric bases: S-pairs, kernel membership, shape.
    GbCheck,
    /// Integral closure of the k-th power.
    Closure,
    /// Normality certificate by lattice points (kmax bounds the powers checked).
    Normality,
    /// Normality certificate by the recursive splitting of the cover ideal.
    DecompositionCert,
    /// Associated primes of the k-th power.
    Ass,
    /// Persistence of associated primes up to kmax.
    Persistence,
    /// Seeded scan over generated graphs (JSON lines).
    Scan {
        #[arg(long, value_enum, default_value_t = ModeArg::WhiskerRandom)]
        mode: ModeArg,
        /// Comma-separated subset of lq_powers,hs_lq,gb_quadratic,cor411,normality,persistence,depth.
        #[arg(long, default_value = "lq_powers")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Also scan the 12-vertex example graph.
        #[arg(long)]
        with_fix2: bool,
    },
    /// Plain-text ring and ideal declarations for other algebra systems.
    Export {
        #[arg(long, value_enum, default_value_t = ExportWhat::Ideal)]
        what: ExportWhat,
    },
}

/// Result of a command: output text and whether its check passed.
struct Outcome {
    text: String,
    passed: bool,
    resource: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, passed: true, resource: false }
    }

    fn check(text: String, passed: bool) -> Outcome {
        Outcome { text, passed, resource: false }
    }
}

type CmdResult = Result<Outcome, Error>;

struct Ctx {
    opts: Opts,
    caps: Caps,
}

impl Ctx {
    fn input(&self) -> Result<Input, Error> {
        io::parse_input(&io::read_input(self.opts.input.as_deref())?)
    }

    fn graph(&self) -> Result<Graph, Error> {
        match self.input()? {
            Input::Graph(g) => Ok(g),
            Input::Ideal(_) => Err(Error::Argument("this command needs a graph input".into())),
        }
    }

    /// The input ideal, or the cover ideal of an input graph.
    fn ideal(&self) -> Result<MonomialIdeal, Error> {
        match self.input()? {
            Input::Ideal(i) => Ok(i),
            Input::Graph(g) => Ok(cover_ideal(&g, &self.caps)?.ideal),
        }
    }

    fn ideal_power(&self) -> Result<MonomialIdeal, Error> {
        let i = self.ideal()?;
        match self.opts.k.unwrap_or(1) {
            1 => Ok(i),
            k => power(&i, k),
        }
    }

    fn order(&self, i: &MonomialIdeal) -> Result<OrderSpec, Error> {
        let ring = i.ring();
        match (self.opts.order, ring.pairs()) {
            (OrderArg::A, Some(n)) => Ok(OrderSpec::order_a(n)),
            (OrderArg::B, Some(n)) => Ok(OrderSpec::order_b(n)),
            (OrderArg::A, None) => Ok(OrderSpec::default_for(ring)),
            (OrderArg::B, None) => Err(Error::Argument("order B needs x/y variables".into())),
        }
    }

    fn render(&self, value: Value, text: impl FnOnce() -> String) -> Result<String, Error> {
        match self.opts.format {
            Format::Json => Ok(format!("{value}\n")),
            Format::Text => Ok(text()),
            Format::Csv => Err(Error::Argument("csv output is only available for depth".into())),
        }
    }

    fn ideal_out(&self, i: &MonomialIdeal) -> Result<String, Error> {
        self.render(io::ideal_to_json(i), || format!("{}\n", i.format()))
    }
}

fn rees(ctx: &Ctx, i: &MonomialIdeal) -> Result<ReesPresentation, Error> {
    let base = ctx.order(i)?;
    rees_groebner(i, &base, &default_t_order(i, &base), &ctx.caps)
}

fn toric(ctx: &Ctx, i: &MonomialIdeal) -> Result<ToricIdeal, Error> {
    let base = OrderSpec::default_for(i.ring());
    toric_ideal(i, &default_t_order(i, &base), &ctx.caps)
}

fn basis_text(ring: &covertool::rees::ExtRing, els: &[covertool::rees::Binomial]) -> String {
    els.iter().map(|b| format!("{}\n", b.format(ring))).collect()
}

fn run(cmd: &Command, ctx: &Ctx) -> CmdResult {
    match cmd {
        Command::CheckCmvwc => {
            let r = check_cm_vwc_labeling(&ctx.graph()?)?;
            let text = ctx.render(json!({"schema": "covertool.cmvwc/1", "report": r}), || {
                if r.passed {
                    "passed\n".into()
                } else {
                    r.violations.iter().map(|v| format!("{:?}: {}\n", v.condition, v.description)).collect()
                }
            })?;
            Ok(Outcome::check(text, r.passed))
        }
        Command::CoverIdeal { recursive } => {
            let g = ctx.graph()?;
            let i = if *recursive { cover_ideal_recursive(&g)? } else { cover_ideal(&g, &ctx.caps)?.ideal };
            Ok(Outcome::ok(ctx.ideal_out(&i)?))
        }
        Command::Power => Ok(Outcome::ok(ctx.ideal_out(&ctx.ideal_power()?)?)),
        Command::Lq => {
            let i = ctx.ideal_power()?;
            let out = linear_quotients_check(&i, &ctx.order(&i)?)?;
            let passed = out.is_success();
            let text = ctx.render(json!({"schema": "covertool.lq/1", "outcome": out}), || match &out {
                LqOutcome::Success(t) => {
                    format!("linear quotients; max |set(u)| = {}\n", t.max_set_size())
                }
                LqOutcome::Failure(f) => format!(
                    "no linear quotients at generator {} ({}): colon contains {}\n",
                    f.position + 1,
                    i.ring().format(&f.generator),
                    i.ring().format(&f.witness)
                ),
            })?;
            Ok(Outcome::check(text, passed))
        }
        Command::Hs => {
            let base = ctx.ideal()?;
            let i = match ctx.opts.ell.unwrap_or(1) {
                1 => base,
                ell => power(&base, ell)?,
            };
            let order = OrderSpec::default_for(i.ring());
            let trace = linear_quotients_check(&i, &order)?.into_trace()?;
            let hs = hs_ideal(&trace, ctx.opts.k.unwrap_or(1) as usize)?;
            Ok(Outcome::ok(ctx.ideal_out(&hs)?))
        }
        Command::Betti => {
            let i = ctx.ideal_power()?;
            let t = betti_oracle(&i, &ctx.caps)?;
            let text = ctx.render(io::betti_to_json(&t, i.ring()), || {
                t.entries.iter().map(|((h, a), b)| format!("{h} {} {b}\n", i.ring().format(a))).collect()
            })?;
            Ok(Outcome::ok(text))
        }
        Command::Depth => {
            let t = depth_table(&ctx.graph()?, ctx.opts.kmax.unwrap_or(3), &ctx.caps)?;
            let text = match ctx.opts.format {
                Format::Csv => io::depth_to_csv(&t),
                _ => ctx.render(json!({"schema": "covertool.depth/1", "table": t}), || t.to_csv())?,
            };
            Ok(Outcome::check(text, t.is_non_increasing()))
        }
        Command::Spread => {
            let s = analytic_spread(&ctx.ideal()?)?;
            Ok(Outcome::ok(ctx.render(json!({"schema": "covertool.spread/1", "analytic_spread": s}), || format!("{s}\n"))?))
        }
        Command::ToricGb => {
            let t = toric(ctx, &ctx.ideal()?)?;
            Ok(Outcome::ok(ctx.render(io::basis_to_json(&t.ring, &t.basis), || basis_text(&t.ring, &t.basis.elements))?))
        }
        Command::ReesGb => {
            let p = rees(ctx, &ctx.ideal()?)?;
            Ok(Outcome::ok(ctx.render(io::basis_to_json(&p.ring, &p.basis), || basis_text(&p.ring, &p.basis.elements))?))
        }
        Command::StdMonomials => {
            let t = toric(ctx, &ctx.ideal()?)?;
            let n = ctx.opts.k.unwrap_or(2);
            let n = u16::try_from(n).map_err(|_| Error::Argument("degree too large".into()))?;
            let std = standard_monomials(&t, n, &ctx.caps)?;
            let names: Vec<String> = std
                .iter()
                .map(|m| t.ring.format(&{
                    let mut e = vec![0u16; t.ring.nvars()];
                    e[t.ring.n_base()..].copy_from_slice(&m.0);
                    covertool::Monomial(e)
                }))
                .collect();
            let text = ctx.render(
                json!({"schema": "covertool.std-monomials/1", "degree": n, "count": std.len(), "monomials": names}),
                || names.iter().map(|s| format!("{s}\n")).collect(),
            )?;
            Ok(Outcome::ok(text))
        }
        Command::LExchange => {
            let i = ctx.ideal()?;
            let base = ctx.order(&i)?;
            let n_max = u16::try_from(ctx.opts.kmax.unwrap_or(2)).map_err(|_| Error::Argument("kmax too large".into()))?;
            let r = l_exchange_check(&i, &base, &default_t_order(&i, &base), n_max, &ctx.caps)?;
            let passed = r.passed();
            let text = ctx.render(json!({"schema": "covertool.l-exchange/1", "report": r}), || {
                if passed {
                    format!("exchange property holds up to degree {n_max}\n")
                } else {
                    format!("counterexample: {:?}\n", r.counterexample)
                }
            })?;
            Ok(Outcome::check(text, passed))
        }
        Command::GbCheck => {
            let i = ctx.ideal()?;
            let p = rees(ctx, &i)?;
            let t = toric(ctx, &i)?;
            let rees_ok = verify_groebner(&p.basis)?.is_ok();
            let toric_ok = verify_groebner(&t.basis)?.is_ok();
            let kernel_ok = p.basis.elements.iter().all(|b| check_kernel(&p.ring, b))
                && t.basis.elements.iter().all(|b| check_kernel(&t.ring, b));
            let s = structure_and_quadraticity_check(&p.ring, &p.basis, Some(&t.basis));
            let passed = rees_ok && toric_ok && kernel_ok;
            let value = json!({
                "schema": "covertool.gb-check/1",
                "rees_groebner": rees_ok,
                "toric_groebner": toric_ok,
                "kernel": kernel_ok,
                "cor411_form": s.cor411_form,
                "quadratic": s.quadratic,
                "max_degree": s.max_degree,
                "exceptions": s.exceptions,
            });
            let text = ctx.render(value, || {
                format!(
                    "rees groebner: {rees_ok}\ntoric groebner: {toric_ok}\nkernel: {kernel_ok}\ncor411 form: {}\nquadratic: {} (max degree {})\n",
                    s.cor411_form, s.quadratic, s.max_degree
                )
            })?;
            Ok(Outcome::check(text, passed))
        }
        Command::Closure => {
            let i = ctx.ideal()?;
            let c = closure_power(&i, ctx.opts.k.unwrap_or(1), &ctx.caps)?;
            Ok(Outcome::ok(ctx.ideal_out(&c)?))
        }
        Command::Normality => {
            let cert = normality_certify(&ctx.ideal()?, ctx.opts.kmax, &ctx.caps)?;
            let passed = !cert.is_failure();
            let text = ctx.render(json!({"schema": "covertool.certificate/1", "certificate": cert}), || {
                format!("{:?} (checked k = {:?})\n", cert.verdict, cert.checked_k)
            })?;
            Ok(Outcome::check(text, passed))
        }
        Command::DecompositionCert => {
            let cert = decomposition_certificate(&ctx.graph()?)?;
            let passed = !cert.is_failure();
            let text = ctx.render(json!({"schema": "covertool.certificate/1", "certificate": cert}), || {
                format!("{:?}\n{}", cert.verdict, cert.notes.iter().map(|n| format!("{n}\n")).collect::<String>())
            })?;
            Ok(Outcome::check(text, passed))
        }
        Command::Ass => {
            let i = ctx.ideal_power()?;
            let primes = associated_primes(&i, &ctx.caps)?;
            let names: Vec<String> = primes.iter().map(|p| p.format(i.ring())).collect();
            let text = ctx.render(json!({"schema": "covertool.ass/1", "primes": names}), || {
                names.iter().map(|s| format!("{s}\n")).collect()
            })?;
            Ok(Outcome::ok(text))
        }
        Command::Persistence => {
            let i = ctx.ideal()?;
            let r = persistence_check(&i, ctx.opts.kmax.unwrap_or(3), &ctx.caps)?;
            let passed = r.passed();
            let text = ctx.render(json!({"schema": "covertool.persistence/1", "report": r}), || {
                let sizes: Vec<usize> = r.ass.iter().map(Vec::len).collect();
                format!("passed: {passed}; |Ass(I^k)| = {sizes:?}\n")
            })?;
            Ok(Outcome::check(text, passed))
        }
        Command::Scan { mode, checks, n_min, n_max, count, with_fix2 } => {
            let checks = checks
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| Check::parse(s).ok_or_else(|| Error::Argument(format!("unknown check {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let mode = match mode {
                ModeArg::WhiskerRandom => Mode::WhiskerRandom,
                ModeArg::WhiskerExhaustive => Mode::WhiskerExhaustive,
                ModeArg::CmvwcRandom => Mode::CmvwcRandom,
            };
            let mut cfg = ScanConfig::new(mode, checks);
            cfg.seed = ctx.opts.seed;
            cfg.n_min = *n_min;
            cfg.n_max = *n_max;
            cfg.count = *count;
            cfg.k_max = ctx.opts.kmax.unwrap_or(2);
            cfg.ell_max = ctx.opts.ell.unwrap_or(2);
            cfg.caps = ctx.caps;
            if *with_fix2 {
                cfg = cfg.with_fix2();
            }
            let r = scan(&cfg)?;
            if ctx.opts.format == Format::Csv {
                return Err(Error::Argument("scan writes JSON lines".into()));
            }
            Ok(Outcome { text: r.to_jsonl(), passed: r.failures() == 0, resource: r.resource_stops() > 0 })
        }
        Command::Export { what } => {
            let i = ctx.ideal()?;
            let text = match what {
                ExportWhat::Ideal => io::export_cas_ideal(&i),
                ExportWhat::Rees => {
                    let p = rees(ctx, &i)?;
                    io::export_cas_basis(&p.ring, &p.basis)
                }
                ExportWhat::Toric => {
                    let t = toric(ctx, &i)?;
                    io::export_cas_basis(&t.ring, &t.basis)
                }
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Resource { .. } | Error::Overflow { .. } => 3,
        Error::Finding(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::from_env().map(|c| Caps {
        spairs: cli.opts.cap_spairs.unwrap_or(c.spairs),
        box_points: cli.opts.cap_box.unwrap_or(c.box_points),
        ..c
    });
    let caps = match caps {
        Ok(c) => c,
        Err(e) => {
            eprintln!("covertool: COVERTOOL_CAPS: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx { opts: cli.opts.clone(), caps };
    let result = par::with_threads(ctx.opts.jobs, || run(&cli.command, &ctx));
    match result {
        Ok(out) => {
            let written = match &ctx.opts.out {
                Some(p) => io::write_output(p, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("covertool: {e}");
                return ExitCode::from(2);
            }
            if !out.passed {
                ExitCode::from(1)
            } else if out.resource {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("covertool: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
