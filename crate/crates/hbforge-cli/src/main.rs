//! Command-line surface: run computations, serialize results, and replay
//! the golden-example verification registry.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hbforge::groebner::{eliminate, groebner_basis_with, Budget};
use hbforge::ideal::Ideal;
use hbforge::matrix::{signed_maximal_minors, PolyMatrix};
use hbforge::points::{
    arrangement_gradient, position_report, sector2_audit, uniform_check, PointSet,
};
use hbforge::poly::{parse, Polynomial};
use hbforge::rees::{
    bigraded_min_gens, cm_via_pd, g_condition, is_reduction, rees_presentation, sylvester_form,
};
use hbforge::resolution::{
    acyclicity_check, buchsbaum_rim, fixed_minors, minors_ideal,
    resolve_quotient, TwoDegreeShape,
};
use hbforge::ring::{MonomialOrder, PolyRing};
use hbforge::verify::{run_example, REGISTRY};
use hbforge::{AlgebraError, CoeffField, Result};

#[derive(Parser)]
#[command(name = "hbforge", version, about = "Exact kernel for codimension-two ideals, Rees algebras and plane points")]
struct Cli {
    /// Coefficient field: a prime p, or Q for the rationals
    #[arg(long, global = true)]
    field: Option<String>,
    /// Monomial order: grevlex, lex, or block:v1,v2;v3,...
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,
    /// Ambient variables
    #[arg(long, global = true, default_value = "x,y,z", value_delimiter = ',')]
    vars: Vec<String>,
    /// Randomness seed
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// S-pair degree budget
    #[arg(long = "budget-deg", global = true)]
    budget_deg: Option<i64>,
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealArg {
    /// Comma-separated generators
    gens: String,
}

#[derive(Args)]
struct MatrixArg {
    /// Matrix rows separated by ';', entries by ','
    matrix: String,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of an ideal
    Gb(IdealArg),
    /// Normal form of a polynomial against an ideal
    Nf { poly: String, gens: String },
    /// Eliminate variables from an ideal
    Elim {
        /// Comma-separated variables to eliminate
        #[arg(long, value_delimiter = ',')]
        drop: Vec<String>,
        gens: String,
    },
    /// Intersection of two ideals
    Intersect { a: String, b: String },
    /// Ideal quotient A : B
    Quotient { a: String, b: String },
    /// Saturation A : B^infinity
    Saturate { a: String, b: String },
    /// Dimension, Hilbert-series numerator and multiplicity
    Hilbert(IdealArg),
    /// Minimal graded free resolution of R/I
    Res(IdealArg),
    /// Graded Betti table of R/I
    Betti(IdealArg),
    /// Ideal of t x t minors of a matrix
    Minors {
        #[arg(short = 't', long)]
        size: usize,
        matrix: String,
    },
    /// Maximal minors fixing the lower block of a two-degree shape
    FixedMinors {
        #[arg(short, long)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        eps1: i64,
        #[arg(long, default_value_t = 1)]
        eps2: i64,
        matrix: String,
    },
    /// Buchsbaum-Rim complex of a matrix with acyclicity certificate
    Brim(MatrixArg),
    /// Symmetric-algebra presentation ideal of an ideal
    Sym(IdealArg),
    /// Rees presentation ideal (dual-route, cross-checked)
    Rees(IdealArg),
    /// Special fiber, analytic spread and fiber multiplicity
    Fiber(IdealArg),
    /// Sylvester form of two polynomials against a content pair
    Sylvester {
        f: String,
        g: String,
        /// Content pair, comma-separated
        pair: String,
    },
    /// Linear-type test for an ideal
    Lintype(IdealArg),
    /// Reduction test: is J a reduction of I, with reduction number
    Reduction {
        j: String,
        i: String,
        #[arg(long, default_value_t = 6)]
        rmax: usize,
    },
    /// G_s condition on a presentation matrix
    Gcond {
        #[arg(short, long)]
        s: usize,
        matrix: String,
    },
    /// Cohen-Macaulayness via projective dimension
    Cmpd(IdealArg),
    /// Plane-points laboratory
    Points {
        #[command(subcommand)]
        cmd: PointsCmd,
    },
    /// Jacobian ideal of a generic line arrangement
    Arrangement {
        #[arg(short, long)]
        d: usize,
        #[arg(short, long)]
        n: usize,
    },
    /// Sample random shapes and report Rees bidegree tables (exploratory)
    Hunt {
        #[arg(long, default_value_t = 5)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        d1: i64,
        #[arg(long, default_value_t = 2)]
        d2: i64,
    },
    /// Replay golden-example registry entries
    Verify {
        /// Entry id; omit with --all to run everything
        id: Option<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum PointsCmd {
    /// Generate random points in the affine chart z = 1
    Gen {
        #[arg(short, long)]
        n: usize,
    },
    /// Vanishing ideal of a point set
    Ideal {
        /// Points as a:b:c triples, comma-separated; random when omitted
        #[arg(long)]
        coords: Option<String>,
        #[arg(short, long, default_value_t = 6)]
        n: usize,
    },
    /// Position classification (generic / tight) with graded dimensions
    Report {
        #[arg(long)]
        coords: Option<String>,
        #[arg(short, long, default_value_t = 6)]
        n: usize,
    },
    /// Exhaustive uniform-position check
    Uniform {
        #[arg(long)]
        coords: Option<String>,
        #[arg(short, long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        m_max: Option<usize>,
        /// Allow the subset explosion past 14 points
        #[arg(long)]
        allow_large: bool,
    },
    /// Sector-2 boundary audit (h = s - 2, tight)
    Audit {
        #[arg(long)]
        coords: Option<String>,
        #[arg(short, long, default_value_t = 18)]
        n: usize,
        /// Run the expensive Rees-algebra checks as well
        #[arg(long)]
        full: bool,
        /// Sample the general-quadric modification of the pinned 4x3 shape
        /// instead of a point set; outcomes reported, not asserted
        #[arg(long)]
        modified: bool,
    },
}

struct Ctx {
    ring: Arc<PolyRing>,
    field: CoeffField,
    budget: Budget,
    seed: u64,
    json: bool,
}

fn parse_field(cli: &Cli) -> Result<CoeffField> {
    let spec = cli
        .field
        .clone()
        .or_else(|| std::env::var("HBFORGE_FIELD").ok())
        .unwrap_or_else(|| "32003".to_string());
    if spec == "Q" || spec == "q" {
        return Ok(CoeffField::Rationals);
    }
    let p: u64 = spec
        .parse()
        .map_err(|_| AlgebraError::Parse(format!("bad field spec {spec}")))?;
    CoeffField::prime(p)
}

fn parse_order(spec: &str, vars: &[String]) -> Result<MonomialOrder> {
    match spec {
        "grevlex" => Ok(MonomialOrder::Grevlex),
        "lex" => Ok(MonomialOrder::Lex),
        s if s.starts_with("block:") => {
            let idx = |name: &str| -> Result<usize> {
                vars.iter()
                    .position(|v| v == name)
                    .ok_or_else(|| AlgebraError::Parse(format!("unknown variable {name}")))
            };
            let blocks = s["block:".len()..]
                .split(';')
                .map(|b| b.split(',').map(idx).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(MonomialOrder::Block(blocks))
        }
        _ => Err(AlgebraError::Parse(format!("bad order spec {spec}"))),
    }
}

impl Ctx {
    fn new(cli: &Cli) -> Result<Self> {
        let field = parse_field(cli)?;
        let order = parse_order(&cli.order, &cli.vars)?;
        let names: Vec<&str> = cli.vars.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::standard(&names, field.clone(), order)?;
        let mut budget = Budget::default();
        if let Some(d) = cli.budget_deg {
            budget.max_spair_degree = d;
        }
        Ok(Ctx {
            ring,
            field,
            budget,
            seed: cli.seed,
            json: cli.json,
        })
    }

    fn ideal(&self, gens: &str) -> Result<Ideal> {
        let ps = gens
            .split(',')
            .map(|s| parse(s.trim(), &self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ps, self.budget)
    }

    fn matrix(&self, spec: &str) -> Result<PolyMatrix> {
        let rows: Vec<Vec<&str>> = spec
            .split(';')
            .map(|r| r.split(',').map(|e| e.trim()).collect())
            .collect();
        let refs: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
        PolyMatrix::parse_grid(&self.ring, &refs)
    }

    fn points(&self, coords: &Option<String>, n: usize) -> Result<PointSet> {
        match coords {
            Some(spec) => {
                let triples = spec
                    .split(',')
                    .map(|t| {
                        let parts: Vec<i64> = t
                            .split(':')
                            .map(|c| c.trim().parse::<i64>())
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|_| {
                                AlgebraError::Parse(format!("bad coordinate triple {t}"))
                            })?;
                        if parts.len() != 3 {
                            return Err(AlgebraError::Parse(format!(
                                "coordinate triple {t} needs 3 entries"
                            )));
                        }
                        Ok([parts[0], parts[1], parts[2]])
                    })
                    .collect::<Result<Vec<_>>>()?;
                let r3 = PolyRing::standard(
                    &["x", "y", "z"],
                    self.field.clone(),
                    MonomialOrder::Grevlex,
                )?;
                PointSet::from_coords(&r3, &triples)
            }
            None => PointSet::random(self.field.clone(), n, self.seed),
        }
    }

    fn emit_polys(&self, label: &str, ps: &[Polynomial]) {
        if self.json {
            let v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            println!("{}", json!({ label: v }));
        } else {
            for p in ps {
                println!("{p}");
            }
        }
    }

    fn emit(&self, value: serde_json::Value, human: String) {
        if self.json {
            println!("{value}");
        } else {
            println!("{human}");
        }
    }
}

fn resolution_human(res: &hbforge::resolution::FreeResolution) -> String {
    let mut out = String::new();
    for (i, sh) in res.shifts.iter().enumerate() {
        out.push_str(&format!("F{i}: rank {} shifts {:?}\n", sh.len(), sh));
    }
    out.push_str(&format!("minimal: {}", res.minimal));
    out
}

fn run(cli: &Cli) -> Result<bool> {
    let ctx = Ctx::new(cli)?;
    match &cli.command {
        Command::Gb(arg) => {
            let gb = groebner_basis_with(&ctx.ideal(&arg.gens)?.gens, &ctx.budget, false)?;
            ctx.emit_polys("basis", &gb.basis);
        }
        Command::Nf { poly, gens } => {
            let ideal = ctx.ideal(gens)?;
            let p = parse(poly, &ctx.ring)?;
            let nf = ideal.gb()?.normal_form(&p)?;
            ctx.emit_polys("normal_form", &[nf]);
        }
        Command::Elim { drop, gens } => {
            let ideal = ctx.ideal(gens)?;
            let names: Vec<&str> = drop.iter().map(|s| s.as_str()).collect();
            let (polys, subring) = eliminate(&ideal.gens, &names, &ctx.budget)?;
            if ctx.json {
                let v: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
                println!(
                    "{}",
                    json!({"vars": subring.vars, "generators": v})
                );
            } else {
                for p in &polys {
                    println!("{p}");
                }
            }
        }
        Command::Intersect { a, b } => {
            let out = ctx.ideal(a)?.intersect(&ctx.ideal(b)?)?;
            ctx.emit_polys("generators", &out.gens);
        }
        Command::Quotient { a, b } => {
            let out = ctx.ideal(a)?.quotient(&ctx.ideal(b)?)?;
            ctx.emit_polys("generators", &out.gens);
        }
        Command::Saturate { a, b } => {
            let (out, steps) = ctx.ideal(a)?.saturate(&ctx.ideal(b)?)?;
            if ctx.json {
                let v: Vec<String> = out.gens.iter().map(|p| p.to_string()).collect();
                println!("{}", json!({"generators": v, "steps": steps}));
            } else {
                println!("stabilized after {steps} quotient steps");
                for p in &out.gens {
                    println!("{p}");
                }
            }
        }
        Command::Hilbert(arg) => {
            let hd = ctx.ideal(&arg.gens)?.hilbert()?;
            ctx.emit(
                json!({
                    "dim": hd.dim, "height": hd.height,
                    "numerator": hd.numerator, "multiplicity": hd.multiplicity,
                }),
                format!(
                    "dim {}  height {}  multiplicity {}\nnumerator {:?}",
                    hd.dim, hd.height, hd.multiplicity, hd.numerator
                ),
            );
        }
        Command::Res(arg) => {
            let (res, betti) = resolve_quotient(&ctx.ideal(&arg.gens)?)?;
            ctx.emit(
                json!({"shifts": res.shifts, "betti": betti.to_json(), "minimal": res.minimal}),
                format!("{}\n{}", resolution_human(&res), betti.render()),
            );
        }
        Command::Betti(arg) => {
            let (_, betti) = resolve_quotient(&ctx.ideal(&arg.gens)?)?;
            ctx.emit(betti.to_json(), betti.render());
        }
        Command::Minors { size, matrix } => {
            let m = ctx.matrix(matrix)?;
            let out = minors_ideal(&m, *size, &ctx.budget)?;
            ctx.emit_polys("generators", &out.gens);
        }
        Command::FixedMinors {
            a,
            eps1,
            eps2,
            matrix,
        } => {
            let shape = TwoDegreeShape::new(ctx.matrix(matrix)?, *a, *eps1, *eps2)?;
            let out = fixed_minors(&shape, &ctx.budget)?;
            ctx.emit_polys("generators", &out.gens);
        }
        Command::Brim(arg) => {
            let m = ctx.matrix(&arg.matrix)?.infer_shifts_zero_rows()?;
            let res = buchsbaum_rim(&m)?;
            let cert = acyclicity_check(&res, &ctx.budget)?;
            ctx.emit(
                json!({
                    "shifts": res.shifts,
                    "acyclic": cert.acyclic,
                    "ranks": cert.ranks, "expected": cert.expected, "grades": cert.grades,
                }),
                format!(
                    "{}\nacyclic: {} (ranks {:?}, expected {:?}, grades {:?})",
                    resolution_human(&res),
                    cert.acyclic,
                    cert.ranks,
                    cert.expected,
                    cert.grades
                ),
            );
        }
        Command::Sym(arg) => {
            let rp = rees_presentation(&ctx.ideal(&arg.gens)?.gens, &ctx.budget)?;
            ctx.emit_polys("generators", &rp.sym.gens);
        }
        Command::Rees(arg) => {
            let rp = rees_presentation(&ctx.ideal(&arg.gens)?.gens, &ctx.budget)?;
            if ctx.json {
                let v: Vec<String> = rp.rees.gens.iter().map(|p| p.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "generators": v,
                        "bidegrees": bigraded_min_gens(&rp.rees)?
                            .iter().map(|((a, b), c)| json!([a, b, c])).collect::<Vec<_>>(),
                        "linear_type": rp.is_linear_type()?,
                    })
                );
            } else {
                for p in &rp.rees.gens {
                    println!("{p}");
                }
                println!("bidegrees: {:?}", bigraded_min_gens(&rp.rees)?);
            }
        }
        Command::Fiber(arg) => {
            let rp = rees_presentation(&ctx.ideal(&arg.gens)?.gens, &ctx.budget)?;
            let (q, spread, mult) = rp.fiber_and_spread()?;
            ctx.emit(
                json!({
                    "fiber_relations": q.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "analytic_spread": spread,
                    "fiber_multiplicity": mult,
                }),
                format!("analytic spread {spread}, fiber multiplicity {mult}"),
            );
        }
        Command::Sylvester { f, g, pair } => {
            let parts: Vec<&str> = pair.split(',').map(|s| s.trim()).collect();
            if parts.len() != 2 {
                return Err(AlgebraError::Parse("content pair needs 2 entries".into()));
            }
            let fp = parse(f, &ctx.ring)?;
            let gp = parse(g, &ctx.ring)?;
            let a = parse(parts[0], &ctx.ring)?;
            let b = parse(parts[1], &ctx.ring)?;
            let h = sylvester_form(&fp, &gp, (&a, &b))?;
            ctx.emit_polys("sylvester", &[h]);
        }
        Command::Lintype(arg) => {
            let rp = rees_presentation(&ctx.ideal(&arg.gens)?.gens, &ctx.budget)?;
            let lt = rp.is_linear_type()?;
            ctx.emit(json!({"linear_type": lt}), format!("linear type: {lt}"));
        }
        Command::Reduction { j, i, rmax } => {
            let cert = is_reduction(&ctx.ideal(j)?, &ctx.ideal(i)?, *rmax)?;
            ctx.emit(
                json!({"holds": cert.holds, "r": cert.r}),
                format!("reduction: {} (r = {:?})", cert.holds, cert.r),
            );
        }
        Command::Gcond { s, matrix } => {
            let m = ctx.matrix(matrix)?;
            let cert = g_condition(&m, *s, &ctx.budget)?;
            ctx.emit(
                json!({"holds": cert.holds, "witness": cert.witness, "heights": cert.heights}),
                format!(
                    "G_{s}: {} (witness {:?}, heights {:?})",
                    cert.holds, cert.witness, cert.heights
                ),
            );
        }
        Command::Cmpd(arg) => {
            let cert = cm_via_pd(&ctx.ideal(&arg.gens)?)?;
            ctx.emit(
                json!({"pd": cert.pd, "height": cert.height, "cm": cert.cm}),
                format!(
                    "projective dimension {}, height {}, Cohen-Macaulay: {}",
                    cert.pd, cert.height, cert.cm
                ),
            );
        }
        Command::Points { cmd } => run_points(&ctx, cmd)?,
        Command::Arrangement { d, n } => {
            let (f, jf, cert) =
                arrangement_gradient(*d, *n, ctx.seed, ctx.field.clone(), &ctx.budget)?;
            ctx.emit(
                json!({
                    "form": f.to_string(),
                    "jacobian": jf.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "linear_type": cert.linear_type,
                    "g_condition": {"holds": cert.gcond.holds, "heights": cert.gcond.heights},
                }),
                format!(
                    "F = {f}\nlinear type: {}\nG-condition: {} (heights {:?})",
                    cert.linear_type, cert.gcond.holds, cert.gcond.heights
                ),
            );
        }
        Command::Hunt { count, d1, d2 } => hunt(&ctx, *count, *d1, *d2)?,
        Command::Verify { id, all } => {
            let ids: Vec<&str> = if *all {
                REGISTRY.to_vec()
            } else {
                match id {
                    Some(s) => vec![s.as_str()],
                    None => {
                        return Err(AlgebraError::Precondition(
                            "pass an entry id or --all".into(),
                        ))
                    }
                }
            };
            let mut ok = true;
            for entry in ids {
                let report = run_example(entry)?;
                if ctx.json {
                    println!("{}", report.to_json());
                } else {
                    print!("{}", report.render());
                }
                ok &= report.all_pass();
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn run_points(ctx: &Ctx, cmd: &PointsCmd) -> Result<()> {
    match cmd {
        PointsCmd::Gen { n } => {
            let pts = PointSet::random(ctx.field.clone(), *n, ctx.seed)?;
            if ctx.json {
                println!("{}", pts.to_json());
            } else {
                for p in &pts.points {
                    println!("{}:{}:{}", p[0], p[1], p[2]);
                }
            }
        }
        PointsCmd::Ideal { coords, n } => {
            let pts = ctx.points(coords, *n)?;
            let ideal = pts.ideal_of_points()?;
            ctx.emit_polys("generators", &ideal.gens);
        }
        PointsCmd::Report { coords, n } => {
            let pts = ctx.points(coords, *n)?;
            let ideal = pts.ideal_of_points()?;
            let rep = position_report(&ideal, pts.points.len() as i64)?;
            let human = format!(
                "n {}  s {}  h {}\ndim I_s {}  dim I_s+1 {}  dim R_1 I_s {}\ngeneric {}  tight {}  reg {}",
                rep.n, rep.s, rep.h, rep.dim_is, rep.dim_is1, rep.dim_r1is,
                rep.generic, rep.tight, rep.reg
            );
            ctx.emit(rep.to_json(), human);
        }
        PointsCmd::Uniform {
            coords,
            n,
            m_max,
            allow_large,
        } => {
            let pts = ctx.points(coords, *n)?;
            let m = m_max.unwrap_or(pts.points.len());
            let (uniform, witness) = uniform_check(&pts, m, *allow_large)?;
            ctx.emit(
                json!({"uniform": uniform, "witness": witness}),
                format!("uniform: {uniform} (witness {witness:?})"),
            );
        }
        PointsCmd::Audit {
            coords,
            n,
            full,
            modified,
        } => {
            if *modified {
                let facts = hbforge::verify::modified_block_sample(ctx.seed)?;
                for f in &facts {
                    println!("{}: {}", f.name, f.computed);
                }
                return Ok(());
            }
            let pts = ctx.points(coords, *n)?;
            let ideal = pts.ideal_of_points()?;
            let audit = sector2_audit(&ideal, pts.points.len() as i64, *full)?;
            ctx.emit(audit.to_json(), format!("{audit:#?}"));
        }
    }
    Ok(())
}

/// Exploratory sampler: random 3x2 shapes with column degrees (d1, d2),
/// reporting the bidegree tables of the Rees presentation.  Observational
/// only; nothing is asserted.
fn hunt(ctx: &Ctx, count: u64, d1: i64, d2: i64) -> Result<()> {
    use rand::{Rng, SeedableRng};
    let r3 = PolyRing::standard(
        &["x", "y", "z"],
        ctx.field.clone(),
        MonomialOrder::Grevlex,
    )?;
    let range = match ctx.field {
        CoeffField::Prime(p) => p,
        CoeffField::Rationals => 101,
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut rows_out = Vec::new();
    for k in 0..count {
        let mut rand_form = |deg: i64| {
            let terms = hbforge::ideal::monomials_of_degree(3, deg as u16)
                .into_iter()
                .map(|e| (e, r3.field.from_i64(rng.random_range(0..range) as i64)))
                .collect();
            Polynomial::from_terms(&r3, terms)
        };
        let entries = vec![
            vec![rand_form(d1), rand_form(d2)],
            vec![rand_form(d1), rand_form(d2)],
            vec![rand_form(d1), rand_form(d2)],
        ];
        let phi = PolyMatrix::new(&r3, entries)?;
        let gens = signed_maximal_minors(&phi)?;
        let ideal = Ideal::new(gens.clone(), ctx.budget)?;
        if ideal.dimension_height()?.1 != 2 {
            continue;
        }
        let rp = rees_presentation(&gens, &ctx.budget)?;
        let table = bigraded_min_gens(&rp.rees)?;
        let (_, spread, mult) = rp.fiber_and_spread()?;
        if ctx.json {
            rows_out.push(json!({
                "sample": k,
                "bidegrees": table.iter().map(|((a, b), c)| json!([a, b, c])).collect::<Vec<_>>(),
                "linear_type": rp.is_linear_type()?,
                "analytic_spread": spread,
                "fiber_multiplicity": mult,
            }));
        } else {
            println!(
                "sample {k}: bidegrees {table:?}, spread {spread}, fiber mult {mult}"
            );
        }
    }
    if ctx.json {
        println!("{}", serde_json::Value::Array(rows_out));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
