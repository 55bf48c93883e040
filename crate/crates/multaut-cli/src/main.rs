//! multaut: evaluate, compose, invert, and classify multiplicative
//! automorphisms of R, C, and finite fields from the shell.
//!
//! Exit codes: 0 on success with the result on stdout, 1 on a domain
//! error with the error name and context on stderr, 2 on a usage error.
//! Output is byte-identical for identical arguments across runs.

mod render;
mod wire;

use clap::{ArgGroup, Args, Parser, Subcommand};
use multaut::bridge::{from_multiplicative, to_multiplicative, DEFAULT_LATTICE_WINDOW};
use multaut::ffauto::{frobenius_subgroup, multiplicative_automorphisms};
use multaut::sampling::Lcg64;
use multaut::{ComplexAuto, Error, FiniteField, RealAuto};
use num_complex::Complex64;
use wire::{AdditiveMap, Failure, HomSubject};

#[derive(Parser)]
#[command(
    name = "multaut",
    version,
    about = "Multiplicative automorphisms of R, C, and finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an automorphism at a point
    Eval(EvalArgs),
    /// Compose two automorphisms of one family (the second is applied first)
    Compose(ComposeArgs),
    /// Invert an automorphism
    Invert(InvertArgs),
    /// Report the component and subgroup flags of a complex automorphism
    Classify(ClassifyArgs),
    /// List the power-map automorphism exponents of GF(p^n)
    FfEnum(FfEnumArgs),
    /// Sampled multiplicativity report for an automorphism spec
    #[command(long_about = "Sampled multiplicativity report for an automorphism spec.\n\n\
        Pairs are drawn with a 64-bit linear congruential generator\n\
        (state <- state * 6364136223846793005 + 1442695040888963407, top\n\
        53 bits make a uniform in [0,1)), so the report is byte-identical\n\
        for a given seed. Each draw places the modulus log-uniformly in\n\
        [1e-3, 1e3]; complex draws add a uniform argument, real draws a\n\
        uniform sign. The report prints the maximum over all pairs of\n\
        |f(z*w) - f(z)*f(w)| / max(1, |f(z*w)|, |f(z)*f(w)|), then exact\n\
        fixed-point checks at 0 and 1 and -1 (and i and -i for the\n\
        complex family).")]
    CheckHom(CheckHomArgs),
    /// Print the composition table of {id, conj, eps2, eps2_bar}
    Table(TableArgs),
    /// Move between lattice-fixing additive maps and multiplicative ones
    Bridge(BridgeArgs),
    /// Decide whether an additive map fixes the lattice 2*pi*i*Z
    CheckLattice(CheckLatticeArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("family").required(true).args(["real", "complex"])))]
struct EvalArgs {
    /// use the real family eps_alpha
    #[arg(long)]
    real: bool,
    /// use the complex family eps_{alpha,u}
    #[arg(long)]
    complex: bool,
    /// exponent of the real automorphism
    #[arg(long, allow_negative_numbers = true, requires = "real")]
    alpha: Option<f64>,
    /// evaluation point on the real line
    #[arg(long, allow_negative_numbers = true, requires = "real")]
    x: Option<f64>,
    /// Re(alpha) of the complex automorphism
    #[arg(long, allow_negative_numbers = true, requires = "complex")]
    alpha_re: Option<f64>,
    /// Im(alpha) of the complex automorphism
    #[arg(long, allow_negative_numbers = true, requires = "complex")]
    alpha_im: Option<f64>,
    /// conjugation flag u, 1 or -1
    #[arg(long, allow_negative_numbers = true, requires = "complex")]
    conj: Option<i64>,
    /// Re(z) of the evaluation point
    #[arg(long, allow_negative_numbers = true, requires = "complex")]
    z_re: Option<f64>,
    /// Im(z) of the evaluation point
    #[arg(long, allow_negative_numbers = true, requires = "complex")]
    z_im: Option<f64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("family").required(true).args(["real", "complex"])))]
struct ComposeArgs {
    /// compose in the real family
    #[arg(long)]
    real: bool,
    /// compose in the complex family
    #[arg(long)]
    complex: bool,
    /// outer map f of f o g: an exponent for --real, parameter JSON for --complex
    #[arg(value_name = "F", allow_hyphen_values = true)]
    outer: String,
    /// inner map g, applied first
    #[arg(value_name = "G", allow_hyphen_values = true)]
    inner: String,
}

#[derive(Args)]
#[command(group(ArgGroup::new("family").required(true).args(["real", "complex"])))]
struct InvertArgs {
    /// invert in the real family
    #[arg(long)]
    real: bool,
    /// invert in the complex family
    #[arg(long)]
    complex: bool,
    /// the map to invert: an exponent for --real, parameter JSON for --complex
    #[arg(value_name = "F", allow_hyphen_values = true)]
    map: String,
}

#[derive(Args)]
struct ClassifyArgs {
    /// classification applies to the complex family
    #[arg(long)]
    complex: bool,
    /// parameter JSON of the automorphism
    #[arg(value_name = "F", allow_hyphen_values = true)]
    map: String,
}

#[derive(Args)]
struct FfEnumArgs {
    /// field characteristic, a prime
    #[arg(long)]
    p: u64,
    /// extension degree, at least 1
    #[arg(long)]
    n: u32,
    /// list only the Frobenius-generated subgroup p^j mod (q-1)
    #[arg(long)]
    frobenius: bool,
}

#[derive(Args)]
struct CheckHomArgs {
    /// automorphism JSON; must carry "kind": "real" or "complex"
    #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
    spec: String,
    /// number of sampled pairs
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// seed of the linear congruential generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TableArgs {
    /// the table is for the complex family
    #[arg(long)]
    complex: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["to_mult", "from_mult"])))]
struct BridgeArgs {
    /// lattice-fixing additive JSON {"eta":..,"alpha_re":..,"alpha_im":..} to multiplicative parameters
    #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
    to_mult: Option<String>,
    /// multiplicative JSON {"re_alpha":..,"im_alpha":..,"conj":..} to additive parameters
    #[arg(long, value_name = "JSON", allow_hyphen_values = true)]
    from_mult: Option<String>,
}

#[derive(Args)]
struct CheckLatticeArgs {
    /// largest |k| whose lattice point 2*pi*i*k is tested
    #[arg(long, default_value_t = DEFAULT_LATTICE_WINDOW,
          value_parser = clap::value_parser!(i64).range(1..))]
    k_max: i64,
    /// additive map JSON: alpha/beta components, or eta/alpha for the lattice-fixing form
    #[arg(value_name = "JSON", allow_hyphen_values = true)]
    map: String,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => print!("{out}"),
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            std::process::exit(2);
        }
        Err(Failure::Domain(err)) => {
            eprintln!("{}: {err}", err.name());
            std::process::exit(1);
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Eval(args) => run_eval(args),
        Command::Compose(args) => run_compose(args),
        Command::Invert(args) => run_invert(args),
        Command::Classify(args) => run_classify(args),
        Command::FfEnum(args) => run_ff_enum(args),
        Command::CheckHom(args) => run_check_hom(args),
        Command::Table(args) => run_table(args),
        Command::Bridge(args) => run_bridge(args),
        Command::CheckLattice(args) => run_check_lattice(args),
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing required flag {flag} for this family")))
}

fn finite(v: f64) -> Result<(), Failure> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Failure::Domain(Error::NonFinite("result")))
    }
}

fn run_eval(args: EvalArgs) -> Result<String, Failure> {
    if args.real {
        let f = RealAuto::new(need(args.alpha, "--alpha")?)?;
        let y = f.eval(need(args.x, "--x")?);
        finite(y)?;
        Ok(format!("{}\n", render::float(y)))
    } else {
        let u = wire::sign_flag(need(args.conj, "--conj")?)?;
        let f = ComplexAuto::new(
            need(args.alpha_re, "--alpha-re")?,
            need(args.alpha_im, "--alpha-im")?,
            u,
        )?;
        let z = Complex64::new(need(args.z_re, "--z-re")?, need(args.z_im, "--z-im")?);
        let w = f.eval(z);
        finite(w.re)?;
        finite(w.im)?;
        Ok(format!("{}\n", render::point(w)))
    }
}

fn run_compose(args: ComposeArgs) -> Result<String, Failure> {
    if args.real {
        let f = RealAuto::new(wire::real_exponent(&args.outer)?)?;
        let g = RealAuto::new(wire::real_exponent(&args.inner)?)?;
        // revalidation traps exponent products that left the family
        let h = RealAuto::new(f.compose(&g).alpha())?;
        Ok(format!("{}\n", render::float(h.alpha())))
    } else {
        let f = wire::complex_auto(&args.outer)?;
        let g = wire::complex_auto(&args.inner)?;
        let h = f.compose(&g);
        let h = ComplexAuto::new(h.re_alpha(), h.im_alpha(), h.conj_sign())?;
        Ok(format!("{}\n", render::complex_params(&h)))
    }
}

fn run_invert(args: InvertArgs) -> Result<String, Failure> {
    if args.real {
        let f = RealAuto::new(wire::real_exponent(&args.map)?)?;
        let g = RealAuto::new(f.invert().alpha())?;
        Ok(format!("{}\n", render::float(g.alpha())))
    } else {
        let f = wire::complex_auto(&args.map)?;
        let g = f.invert();
        let g = ComplexAuto::new(g.re_alpha(), g.im_alpha(), g.conj_sign())?;
        Ok(format!("{}\n", render::complex_params(&g)))
    }
}

fn run_classify(args: ClassifyArgs) -> Result<String, Failure> {
    if !args.complex {
        return Err(Failure::Usage("classify requires --complex".to_string()));
    }
    let f = wire::complex_auto(&args.map)?;
    Ok(format!(
        "component={}\nrotation_like={}\ncommutes_with_conjugation={}\nincreasing_on_reals={}\n",
        f.component(),
        f.is_rotation_like(),
        f.commutes_with_conjugation(),
        f.is_increasing_on_reals()
    ))
}

fn run_ff_enum(args: FfEnumArgs) -> Result<String, Failure> {
    let field = FiniteField::new(args.p, args.n)?;
    let autos = if args.frobenius {
        frobenius_subgroup(&field)
    } else {
        multiplicative_automorphisms(&field)
    };
    let exponents: Vec<String> = autos.iter().map(|a| a.exponent().to_string()).collect();
    let label = if args.frobenius { "order" } else { "phi" };
    Ok(format!("{}\n{}={}\n", exponents.join(" "), label, autos.len()))
}

fn run_check_hom(args: CheckHomArgs) -> Result<String, Failure> {
    let subject = wire::hom_subject(&args.spec)?;
    let mut rng = Lcg64::new(args.seed);
    let mut max_dev = 0.0f64;
    let mut out = String::new();
    match subject {
        HomSubject::Real(f) => {
            for _ in 0..args.samples {
                let z = rng.real_sample();
                let w = rng.real_sample();
                let lhs = f.eval(z * w);
                let rhs = f.eval(z) * f.eval(w);
                let dev = (lhs - rhs).abs() / 1.0f64.max(lhs.abs()).max(rhs.abs());
                max_dev = max_dev.max(dev);
            }
            out.push_str(&format!("max_rel_dev={}\n", render::deviation(max_dev)));
            for (label, x) in [("0", 0.0f64), ("1", 1.0), ("-1", -1.0)] {
                let got = f.eval(x);
                if got == x {
                    out.push_str(&format!("f({label})={label} ok\n"));
                } else {
                    out.push_str(&format!("f({label})={} FAIL\n", render::float(got)));
                }
            }
        }
        HomSubject::Complex(f) => {
            for _ in 0..args.samples {
                let z = rng.complex_sample();
                let w = rng.complex_sample();
                let lhs = f.eval(z * w);
                let rhs = f.eval(z) * f.eval(w);
                let dev = (lhs - rhs).norm() / 1.0f64.max(lhs.norm()).max(rhs.norm());
                max_dev = max_dev.max(dev);
            }
            out.push_str(&format!("max_rel_dev={}\n", render::deviation(max_dev)));
            let conjugating = f.conj_sign() == -1;
            let i = Complex64::new(0.0, 1.0);
            let checks = [
                ("0", Complex64::new(0.0, 0.0), "0", Complex64::new(0.0, 0.0)),
                ("1", Complex64::new(1.0, 0.0), "1", Complex64::new(1.0, 0.0)),
                ("-1", Complex64::new(-1.0, 0.0), "-1", Complex64::new(-1.0, 0.0)),
                ("i", i, if conjugating { "-i" } else { "i" }, if conjugating { -i } else { i }),
                ("-i", -i, if conjugating { "i" } else { "-i" }, if conjugating { i } else { -i }),
            ];
            for (label, point, want_label, want) in checks {
                let got = f.eval(point);
                if got.re == want.re && got.im == want.im {
                    out.push_str(&format!("f({label})={want_label} ok\n"));
                } else {
                    out.push_str(&format!(
                        "f({label})=({},{}) FAIL\n",
                        render::float(got.re),
                        render::float(got.im)
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn run_table(args: TableArgs) -> Result<String, Failure> {
    if !args.complex {
        return Err(Failure::Usage("table requires --complex".to_string()));
    }
    let conj = ComplexAuto::conjugation();
    let eps2 = ComplexAuto::new(2.0, 0.0, 1).expect("2 is off the imaginary axis");
    let named = [
        ("id", ComplexAuto::identity()),
        ("conj", conj),
        ("eps2", eps2),
        ("eps2_bar", eps2.compose(&conj)),
    ];
    let cells: Vec<Vec<String>> = named
        .iter()
        .map(|(_, f)| named.iter().map(|(_, g)| f.compose(g).to_string()).collect())
        .collect();
    let label_width = named.iter().map(|(name, _)| name.len()).max().unwrap();
    let cell_width = named
        .iter()
        .map(|(name, _)| name.len())
        .chain(cells.iter().flatten().map(String::len))
        .max()
        .unwrap();
    let mut out = String::new();
    let mut header = format!("{:<label_width$}", "*");
    for (name, _) in &named {
        header.push_str(&format!("  {name:<cell_width$}"));
    }
    out.push_str(header.trim_end());
    out.push('\n');
    for (row, (name, _)) in named.iter().enumerate() {
        let mut line = format!("{name:<label_width$}");
        for cell in &cells[row] {
            line.push_str(&format!("  {cell:<cell_width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn run_bridge(args: BridgeArgs) -> Result<String, Failure> {
    if let Some(text) = &args.to_mult {
        let phi = wire::lattice_auto(text)?;
        Ok(format!("{}\n", render::complex_params(&to_multiplicative(&phi))))
    } else {
        let text = args.from_mult.as_ref().expect("clap enforces one direction");
        let g = wire::complex_auto(text)?;
        Ok(format!("{}\n", render::lattice_params(&from_multiplicative(&g))))
    }
}

fn run_check_lattice(args: CheckLatticeArgs) -> Result<String, Failure> {
    let verdict = match wire::additive_map(&args.map)? {
        AdditiveMap::General(psi) => psi.fixes_lattice(args.k_max),
        AdditiveMap::Lattice(phi) => phi.fixes_lattice(args.k_max),
    };
    Ok(format!("{verdict}\n"))
}
