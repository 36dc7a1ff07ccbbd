//! Command line front end. Each subcommand builds a monoid from its textual
//! spec, runs the matching computation, and prints one report; `--json`
//! switches the rendering and `--csv` emits plot-ready series. Exit codes:
//! 0 success, 2 input error, 3 budget exhaustion.

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::block::{block_label, block_presentation, davenport, group_from_factors};
use crate::constructions::{
    infinite_delta_member, infinite_delta_witness, noasym_monoid, noasym_series, ChainFamily,
    MabcFamily, MabcSpec,
};
use crate::engine::{self, length_set, LengthSet, DEFAULT_BUDGET};
use crate::error::Error;
use crate::invariants::{
    asymptotic_ld, betti_ld_test, default_psi, delta_scan, ld_search, length_stats,
    sandwich_check, tame_degree,
};
use crate::monoid::{
    make_affine, make_numerical, make_puiseux, Element, MonoidPresentation,
};
use crate::parse::{
    parse_block_element, parse_group, parse_group_subset, parse_n_list, parse_naturals,
    parse_rational, parse_rationals, parse_vector, parse_vectors,
};
use crate::report::{series_csv, Report, Value};
use crate::Result;

#[derive(Parser, Debug)]
#[command(
    name = "lendens",
    version,
    about = "Exact factorization-length invariants of finitely generated monoids"
)]
struct Cli {
    /// Emit the report as JSON instead of key-value text.
    #[arg(long, global = true)]
    json: bool,

    /// Work budget for enumerations; computations that would pass it stop
    /// with exit code 3.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Print elapsed wall time to standard error.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SpecKind {
    /// Numerical semigroup from generators "6,9,20".
    Ns,
    /// Affine semigroup from vectors "(4,0,0);(7,0,0)".
    Affine,
    /// Block monoid from a group "Z5" or "Z2xZ2xZ3".
    Block,
    /// Puiseux monoid from rational atoms "4/3,8/5".
    Puiseux,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical semigroup: stats of one element, or a bounded scan.
    Ns {
        /// Generators, e.g. "6,9,20".
        generators: String,
        /// Element to analyze; omit to scan for delta sets and minimum
        /// length density.
        #[arg(long)]
        element: Option<u64>,
        /// Largest element scanned (default 500).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Affine semigroup over vectors: element stats or a bounded scan.
    Affine {
        /// Generators, e.g. "(4,0,0);(7,0,0);(0,3,0)".
        generators: String,
        /// Element to analyze, e.g. "(28,3,3)".
        #[arg(long)]
        element: Option<String>,
        /// Largest coordinate sum scanned (default 60).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Block monoid of a finite abelian group: atoms, element stats, or a
    /// bounded scan.
    Block {
        /// Group, e.g. "Z5" or "Z2xZ2xZ3".
        group: String,
        /// Restrict the support, e.g. "(1);(4)".
        #[arg(long)]
        restrict: Option<String>,
        /// Element as a block, e.g. "(1)^5(4)^5".
        #[arg(long)]
        element: Option<String>,
        /// Largest block length scanned (default twice the Davenport
        /// constant).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Two-slope family M(a,b,c): per-index densities, or one power's
    /// length set.
    Mabc {
        a: u64,
        b: u64,
        /// Slope parameter in [0,1], e.g. "1/2".
        c: String,
        /// Truncation: indices i = 1..=I are materialized.
        max_index: u64,
        /// Analyze q_{i,ia}^{t*ia} for "i" or "i,t" instead of tabulating.
        #[arg(long)]
        power: Option<String>,
    },

    /// Chain-relation monoid a_1^3 = a_2^4 = a_3^6 = ... = a_i^{2i}.
    Chain {
        /// Number of atoms in the chain (at least 3).
        index: u64,
        /// Analyze a_1^{3t} (default t = 1).
        #[arg(long)]
        power: Option<u64>,
        /// Largest word length scanned (default 12).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Member <2i, 3i, 6i+1> of the unbounded-delta family.
    Infdelta {
        /// Family index (at least 2).
        index: u64,
        /// Scan limit (default covers the witness i(6i+1)).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Puiseux monoid: element stats, a bounded scan, or the no-limit
    /// series.
    Puiseux {
        /// Atoms, e.g. "4/3,8/5"; omit when using --noasym.
        atoms: Option<String>,
        /// Use the built-in no-asymptotic-density atom list at this level
        /// (0 or 1).
        #[arg(long)]
        noasym: Option<u64>,
        /// Element to analyze, e.g. "8" or "800/1201".
        #[arg(long)]
        element: Option<String>,
        /// With --noasym: exponents n for the ld(8n) series, e.g.
        /// "99,100" or "1..20".
        #[arg(long)]
        series: Option<String>,
        /// Print the series as CSV (n,ld_num,ld_den) instead of a report.
        #[arg(long, requires = "series", conflicts_with = "json")]
        csv: bool,
        /// Largest cleared degree scanned (default 200).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Length densities of the powers x^n with a predicted limit.
    Asym {
        /// Monoid kind for SPEC.
        kind: SpecKind,
        /// Monoid spec in the kind's grammar.
        spec: String,
        /// Base element x.
        #[arg(long)]
        element: String,
        /// Support restriction for block monoids.
        #[arg(long)]
        restrict: Option<String>,
        /// Number of powers computed.
        #[arg(long, default_value_t = 10)]
        terms: u64,
        /// Convergence tolerance for the trailing terms.
        #[arg(long, default_value = "1/100")]
        tol: String,
        /// Eventual minimal gap d for the two-sided bound check.
        #[arg(long, requires = "tame_t")]
        d: Option<u64>,
        /// Tameness bound T for the two-sided bound check.
        #[arg(long)]
        tame_t: Option<u64>,
        /// First exponent the bound is tested at (default: first n with d
        /// in the delta set of x^n).
        #[arg(long)]
        psi: Option<u64>,
        /// Print the series as CSV (n,ld_num,ld_den) instead of a report.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },

    /// Scan for delta sets and the minimum length density.
    Search {
        /// Monoid kind for SPEC.
        kind: SpecKind,
        /// Monoid spec in the kind's grammar.
        spec: String,
        /// Support restriction for block monoids.
        #[arg(long)]
        restrict: Option<String>,
        /// Scan limit (kind-specific default).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Betti elements up to a bound and whether they attain the minimum
    /// length density.
    Betti {
        /// Monoid kind for SPEC.
        kind: SpecKind,
        /// Monoid spec in the kind's grammar.
        spec: String,
        /// Support restriction for block monoids.
        #[arg(long)]
        restrict: Option<String>,
        /// Scan limit (kind-specific default).
        #[arg(long)]
        bound: Option<u64>,
    },

    /// Catenary degree of one element, optionally with a tame degree.
    Catenary {
        /// Monoid kind for SPEC.
        kind: SpecKind,
        /// Monoid spec in the kind's grammar.
        spec: String,
        /// Element to analyze.
        #[arg(long)]
        element: String,
        /// Support restriction for block monoids.
        #[arg(long)]
        restrict: Option<String>,
        /// Also compute the tame degree against this factorization, given
        /// as atom exponents, e.g. "(0,0,1)".
        #[arg(long)]
        tame_factorization: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ns { .. } => "ns",
            Command::Affine { .. } => "affine",
            Command::Block { .. } => "block",
            Command::Mabc { .. } => "mabc",
            Command::Chain { .. } => "chain",
            Command::Infdelta { .. } => "infdelta",
            Command::Puiseux { .. } => "puiseux",
            Command::Asym { .. } => "asym",
            Command::Search { .. } => "search",
            Command::Betti { .. } => "betti",
            Command::Catenary { .. } => "catenary",
        }
    }
}

/// Runs the CLI against the given argument list and returns the process
/// exit code. Reports go to standard output; usage problems, error
/// messages, and timing go to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 { 0 } else { 2 };
        }
    };
    let start = Instant::now();
    let code = match dispatch(&cli) {
        Ok((report, csv)) => {
            if let Some(text) = csv {
                print!("{text}");
            } else if cli.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_human());
            }
            0
        }
        Err(e) if e.exit_code() == 3 => {
            let mut r = Report::new();
            r.push_text("command", cli.command.name());
            r.push("complete", Value::Bool(false));
            r.push_text("error", e.to_string());
            if cli.json {
                print!("{}", r.render_json());
            } else {
                print!("{}", r.render_human());
            }
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    if cli.timing {
        eprintln!("elapsed_ms: {}", start.elapsed().as_millis());
    }
    code
}

type Output = (Report, Option<String>);

fn dispatch(cli: &Cli) -> Result<Output> {
    let budget = cli.budget;
    let mut report = Report::new();
    report.push_text("command", cli.command.name());
    let mut csv_out = None;

    match &cli.command {
        Command::Ns {
            generators,
            element,
            bound,
        } => {
            let m = make_numerical(&parse_naturals(generators)?)?;
            report.push_text("monoid", monoid_echo(&m));
            match element {
                Some(x) => {
                    let el = Element::Natural(*x);
                    report.push_text("element", el.to_string());
                    let ls = length_set(&m, &el)?;
                    push_stats(&mut report, &ls);
                }
                None => scan_summary(&mut report, &m, bound.unwrap_or(500), budget)?,
            }
        }

        Command::Affine {
            generators,
            element,
            bound,
        } => {
            let m = make_affine(&parse_vectors(generators)?)?;
            report.push_text("monoid", monoid_echo(&m));
            match element {
                Some(s) => {
                    let el = Element::Vector(parse_vector(s)?);
                    report.push_text("element", el.to_string());
                    let ls = length_set(&m, &el)?;
                    push_stats(&mut report, &ls);
                }
                None => scan_summary(&mut report, &m, bound.unwrap_or(60), budget)?,
            }
        }

        Command::Block {
            group,
            restrict,
            element,
            bound,
        } => {
            let m = build_monoid(SpecKind::Block, group, restrict.as_deref())?;
            let b = match &m {
                MonoidPresentation::Block(b) => b,
                _ => unreachable!("block kind builds a block monoid"),
            };
            report.push_text("group", b.group().display_name());
            report.push_text(
                "support",
                b.support()
                    .iter()
                    .map(|g| format!("({g})"))
                    .collect::<Vec<_>>()
                    .join(""),
            );
            let dav = davenport(b.group(), budget)?;
            report.push("davenport", Value::Nat(dav));
            report.push("atom_count", Value::Nat(b.atoms().len() as u64));
            if b.atoms().len() <= 40 {
                let rows = (0..b.atoms().len())
                    .map(|i| {
                        vec![
                            Value::Text(b.atom_label(i)),
                            Value::Nat(b.atoms()[i].iter().sum()),
                        ]
                    })
                    .collect();
                report.push(
                    "atoms",
                    Value::Table {
                        columns: vec!["atom".into(), "length".into()],
                        rows,
                    },
                );
            }
            match element {
                Some(s) => {
                    let counts = parse_block_element(s, b.group(), b.support())?;
                    report.push_text("element", block_label(b.support(), &counts));
                    let ls = length_set(&m, &Element::Vector(counts))?;
                    push_stats(&mut report, &ls);
                }
                None => scan_summary(&mut report, &m, bound.unwrap_or(2 * dav), budget)?,
            }
        }

        Command::Mabc {
            a,
            b,
            c,
            max_index,
            power,
        } => {
            let fam = MabcFamily::new(MabcSpec {
                a: *a,
                b: *b,
                c: parse_rational(c)?,
                max_index: *max_index,
            })?;
            report.push("a", Value::Nat(*a));
            report.push("b", Value::Nat(*b));
            report.push("c", Value::Rat(fam.spec.c.clone()));
            report.push("max_index", Value::Nat(*max_index));
            report.push("atom_count", Value::Nat(fam.monoid.atom_count() as u64));
            match power {
                Some(s) => {
                    let parts = parse_naturals(s)?;
                    let (i, t) = match parts.as_slice() {
                        [i] => (*i, 1),
                        [i, t] => (*i, *t),
                        _ => {
                            return Err(Error::Parse(format!(
                                "expected --power \"i\" or \"i,t\", got '{s}'"
                            )))
                        }
                    };
                    let el = fam.power_element(i, t)?;
                    report.push_text("element", element_label(&fam.monoid, &el));
                    let ls = length_set(&fam.monoid, &el)?;
                    push_stats(&mut report, &ls);
                    let closed = fam.power_lengths_closed(i, t)?;
                    report.push("closed_form_agrees", Value::Bool(ls == closed));
                }
                None => {
                    let mut rows = Vec::new();
                    for i in 1..=*max_index {
                        let ls = fam.power_lengths_closed(i, 1)?;
                        let st = length_stats(&ls);
                        rows.push(vec![
                            Value::Nat(i),
                            Value::Nat(fam.k(i)?),
                            Value::Nat(st.min),
                            Value::Nat(st.max),
                            Value::Nat(st.size),
                            Value::Rat(st.elasticity),
                            Value::OptRat(st.length_density),
                        ]);
                    }
                    report.push(
                        "powers",
                        Value::Table {
                            columns: vec![
                                "i".into(),
                                "k".into(),
                                "min".into(),
                                "max".into(),
                                "size".into(),
                                "elasticity".into(),
                                "ld".into(),
                            ],
                            rows,
                        },
                    );
                }
            }
        }

        Command::Chain {
            index,
            power,
            bound,
        } => {
            let fam = ChainFamily::new(*index)?;
            report.push("index", Value::Nat(*index));
            report.push("exponents", Value::Nats(fam.exponents().to_vec()));
            let t = power.unwrap_or(1);
            let el = fam.power_element(t)?;
            report.push_text("element", element_label(&fam.monoid, &el));
            let ls = length_set(&fam.monoid, &el)?;
            push_stats(&mut report, &ls);
            let closed = fam.power_lengths_closed(t)?;
            report.push("closed_form_agrees", Value::Bool(ls == closed));
            let deltas = delta_scan(&fam.monoid, bound.unwrap_or(12), budget)?;
            report.push("delta_scan", Value::Nats(deltas));
        }

        Command::Infdelta { index, bound } => {
            let m = infinite_delta_member(*index)?;
            report.push("index", Value::Nat(*index));
            report.push_text("monoid", monoid_echo(&m));
            let w = infinite_delta_witness(*index);
            report.push("witness_element", Value::Nat(w));
            let ls = length_set(&m, &Element::Natural(w))?;
            push_stats(&mut report, &ls);
            let b = bound.unwrap_or_else(|| 500.max(w + 1));
            scan_summary(&mut report, &m, b, budget)?;
        }

        Command::Puiseux {
            atoms,
            noasym,
            element,
            series,
            csv,
            bound,
        } => {
            let (m, level) = match (atoms, noasym) {
                (Some(_), Some(_)) => {
                    return Err(Error::Parse(
                        "give either an atom list or --noasym, not both".into(),
                    ))
                }
                (None, None) => {
                    return Err(Error::Parse(
                        "an atom list or --noasym is required".into(),
                    ))
                }
                (Some(s), None) => (make_puiseux(&parse_rationals(s)?)?, None),
                (None, Some(l)) => (noasym_monoid(*l)?, Some(*l)),
            };
            report.push_text("monoid", monoid_echo(&m));
            if let Some(l) = level {
                report.push("noasym_level", Value::Nat(l));
            }
            if let MonoidPresentation::Puiseux(p) = &m {
                report.push("clear_denominator", Value::Nat(p.clear_denominator()));
            }
            if let Some(s) = series {
                let Some(l) = level else {
                    return Err(Error::Parse("--series requires --noasym".into()));
                };
                let ns = parse_n_list(s)?;
                let rows = noasym_series(l, &ns)?;
                if *csv {
                    csv_out = Some(series_csv(&rows));
                } else {
                    report.push("series", series_table(&rows));
                }
            } else if let Some(s) = element {
                let el = Element::Rational(parse_rational(s)?);
                report.push_text("element", el.to_string());
                let ls = length_set(&m, &el)?;
                push_stats(&mut report, &ls);
            } else {
                scan_summary(&mut report, &m, bound.unwrap_or(200), budget)?;
            }
        }

        Command::Asym {
            kind,
            spec,
            element,
            restrict,
            terms,
            tol,
            d,
            tame_t,
            psi,
            csv,
        } => {
            let m = build_monoid(*kind, spec, restrict.as_deref())?;
            report.push_text("monoid", monoid_echo(&m));
            let x = parse_element(&m, element)?;
            report.push_text("element", element_label(&m, &x));
            let tolerance = parse_rational(tol)?;
            let rep = asymptotic_ld(&m, &x, *terms, &tolerance)?;
            report.push("terms", Value::Nat(*terms));
            report.push("tolerance", Value::Rat(tolerance));
            if *csv {
                csv_out = Some(series_csv(&rep.terms));
            } else {
                report.push("series", series_table(&rep.terms));
            }
            report.push("delta_pool", Value::Nats(rep.delta_pool.clone()));
            report.push(
                "delta_pool_partial",
                Value::Bool(rep.delta_pool_partial),
            );
            report.push("predicted_limit", Value::OptRat(rep.predicted_limit.clone()));
            report.push("converged", Value::Bool(rep.converged));
            if let Some(d) = d {
                let t = tame_t.expect("clap enforces --tame-t with --d");
                report.push("d", Value::Nat(*d));
                report.push("tame_bound", Value::Nat(t));
                let first = match psi {
                    Some(p) => Some(*p),
                    None => default_psi(&m, &x, *d, *terms)?,
                };
                match first {
                    None => report.push("psi_found", Value::Bool(false)),
                    Some(p) => {
                        report.push("psi", Value::Nat(p));
                        let mut rows = Vec::new();
                        let mut all_ok = true;
                        for n in p..=*terms {
                            let ok = sandwich_check(&m, &x, n, *d, t)?;
                            all_ok &= ok;
                            rows.push(vec![Value::Nat(n), Value::Bool(ok)]);
                        }
                        report.push(
                            "sandwich",
                            Value::Table {
                                columns: vec!["n".into(), "within_bounds".into()],
                                rows,
                            },
                        );
                        report.push("sandwich_holds", Value::Bool(all_ok));
                    }
                }
            }
        }

        Command::Search {
            kind,
            spec,
            restrict,
            bound,
        } => {
            let m = build_monoid(*kind, spec, restrict.as_deref())?;
            report.push_text("monoid", monoid_echo(&m));
            let b = match bound {
                Some(b) => *b,
                None => default_bound(&m, budget)?,
            };
            scan_summary(&mut report, &m, b, budget)?;
        }

        Command::Betti {
            kind,
            spec,
            restrict,
            bound,
        } => {
            let m = build_monoid(*kind, spec, restrict.as_deref())?;
            report.push_text("monoid", monoid_echo(&m));
            let b = match bound {
                Some(b) => *b,
                None => default_bound(&m, budget)?,
            };
            report.push("bound", Value::Nat(b));
            let r = betti_ld_test(&m, b, budget)?;
            let rows = r
                .betti
                .iter()
                .map(|(be, ld)| {
                    vec![
                        Value::Text(element_label(&m, &be.element)),
                        Value::Nats(
                            be.set
                                .lengths()
                                .map(|l| l.values().to_vec())
                                .unwrap_or_default(),
                        ),
                        Value::OptRat(ld.clone()),
                        Value::Nat(be.partition.blocks.len() as u64),
                        Value::Nat(be.set.len() as u64),
                    ]
                })
                .collect();
            report.push(
                "betti",
                Value::Table {
                    columns: vec![
                        "element".into(),
                        "lengths".into(),
                        "ld".into(),
                        "components".into(),
                        "factorizations".into(),
                    ],
                    rows,
                },
            );
            report.push("minimum_ld", Value::Rat(r.search.minimum_ld.clone()));
            report.push(
                "lower_bound_certificate",
                Value::Rat(r.search.lower_bound_certificate.clone()),
            );
            report.push("attained_at_betti", Value::Bool(r.attained_at_betti));
            match &r.witness {
                Some(w) => report.push_text("betti_witness", element_label(&m, w)),
                None => report.push("betti_witness", Value::OptRat(None)),
            }
        }

        Command::Catenary {
            kind,
            spec,
            element,
            restrict,
            tame_factorization,
        } => {
            let m = build_monoid(*kind, spec, restrict.as_deref())?;
            report.push_text("monoid", monoid_echo(&m));
            let x = parse_element(&m, element)?;
            report.push_text("element", element_label(&m, &x));
            let set = engine::factorizations(&m, &x, budget)?;
            set.require_complete()?;
            if set.is_empty() {
                return Err(Error::NotInMonoid(x.to_string()));
            }
            report.push("factorizations", Value::Nat(set.len() as u64));
            if let Some(ls) = set.lengths() {
                push_stats(&mut report, &ls);
            }
            let c = engine::catenary_degree_of_set(&set)?;
            report.push("catenary_degree", Value::Nat(c));
            if let Some(tf) = tame_factorization {
                let xf = parse_vector(tf)?;
                report.push_text("tame_factorization", Element::Vector(xf.clone()).to_string());
                let t = tame_degree(&m, &x, &xf, budget)?;
                report.push("tame_degree", Value::Nat(t.value));
                report.push("tame_adjusted", Value::Bool(t.adjusted));
            }
        }
    }

    report.push("complete", Value::Bool(true));
    Ok((report, csv_out))
}

fn build_monoid(kind: SpecKind, spec: &str, restrict: Option<&str>) -> Result<MonoidPresentation> {
    if restrict.is_some() && kind != SpecKind::Block {
        return Err(Error::Parse(
            "--restrict only applies to block monoids".into(),
        ));
    }
    match kind {
        SpecKind::Ns => make_numerical(&parse_naturals(spec)?),
        SpecKind::Affine => make_affine(&parse_vectors(spec)?),
        SpecKind::Puiseux => make_puiseux(&parse_rationals(spec)?),
        SpecKind::Block => {
            let g = group_from_factors(&parse_group(spec)?)?;
            let support = match restrict {
                None => None,
                Some(r) => Some(
                    parse_group_subset(r)?
                        .iter()
                        .map(|v| g.element(v))
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            block_presentation(&g, support)
        }
    }
}

fn default_bound(m: &MonoidPresentation, budget: u64) -> Result<u64> {
    Ok(match m {
        MonoidPresentation::Numerical(_) => 500,
        MonoidPresentation::Affine(_) => 60,
        MonoidPresentation::Puiseux(_) => 200,
        MonoidPresentation::Presented(_) => 12,
        MonoidPresentation::Block(b) => 2 * davenport(b.group(), budget)?,
        MonoidPresentation::DirectSum(_) => 60,
    })
}

fn parse_element(m: &MonoidPresentation, s: &str) -> Result<Element> {
    match m {
        MonoidPresentation::Numerical(_) => {
            let t = s.trim();
            t.parse::<u64>().map(Element::Natural).map_err(|_| {
                Error::Parse(format!("expected a natural number element, got '{t}'"))
            })
        }
        MonoidPresentation::Affine(_) => Ok(Element::Vector(parse_vector(s)?)),
        MonoidPresentation::Puiseux(_) => Ok(Element::Rational(parse_rational(s)?)),
        MonoidPresentation::Block(b) => Ok(Element::Vector(parse_block_element(
            s,
            b.group(),
            b.support(),
        )?)),
        _ => Err(Error::Parse(
            "element input is not supported for this monoid kind".into(),
        )),
    }
}

fn element_label(m: &MonoidPresentation, el: &Element) -> String {
    match (m, el) {
        (MonoidPresentation::Block(b), Element::Vector(v)) => block_label(b.support(), v),
        (MonoidPresentation::Presented(p), Element::Vector(v)) => {
            word_label(p.atom_labels(), v)
        }
        _ => el.to_string(),
    }
}

fn word_label(labels: &[String], word: &[u64]) -> String {
    let mut parts = Vec::new();
    for (l, &c) in labels.iter().zip(word) {
        if c == 0 {
            continue;
        }
        if c == 1 {
            parts.push(l.clone());
        } else {
            parts.push(format!("{l}^{c}"));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn monoid_echo(m: &MonoidPresentation) -> String {
    match m {
        MonoidPresentation::Numerical(n) => format!(
            "<{}>",
            n.generators()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
        MonoidPresentation::Affine(a) => format!(
            "<{}>",
            a.generators()
                .iter()
                .map(|v| Element::Vector(v.clone()).to_string())
                .collect::<Vec<_>>()
                .join(";")
        ),
        MonoidPresentation::Puiseux(p) => format!(
            "<{}>",
            p.atoms()
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
        MonoidPresentation::Block(b) => {
            if b.support().len() as u64 == b.group().order() {
                format!("B({})", b.group().display_name())
            } else {
                format!(
                    "B({}, {{{}}})",
                    b.group().display_name(),
                    b.support()
                        .iter()
                        .map(|g| format!("({g})"))
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
        }
        MonoidPresentation::Presented(p) => {
            format!("presented monoid on {} atoms", p.atom_count())
        }
        MonoidPresentation::DirectSum(parts) => parts
            .iter()
            .map(monoid_echo)
            .collect::<Vec<_>>()
            .join(" (+) "),
    }
}

fn push_stats(report: &mut Report, ls: &LengthSet) {
    let st = length_stats(ls);
    report.push("lengths", Value::Nats(ls.values().to_vec()));
    report.push("size", Value::Nat(st.size));
    report.push("min_length", Value::Nat(st.min));
    report.push("max_length", Value::Nat(st.max));
    report.push("elasticity", Value::Rat(st.elasticity));
    report.push("delta", Value::Nats(st.delta));
    report.push("length_density", Value::OptRat(st.length_density));
}

fn scan_summary(
    report: &mut Report,
    m: &MonoidPresentation,
    bound: u64,
    budget: u64,
) -> Result<()> {
    report.push("bound", Value::Nat(bound));
    let deltas = delta_scan(m, bound, budget)?;
    report.push("delta_scan", Value::Nats(deltas));
    match ld_search(m, bound, budget) {
        Ok(r) => {
            report.push("minimum_ld", Value::Rat(r.minimum_ld));
            report.push_text("witness", element_label(m, &r.witness));
            report.push(
                "witness_lengths",
                Value::Nats(r.witness_lengths.values().to_vec()),
            );
            report.push("max_delta_seen", Value::Nat(r.max_delta_seen));
            report.push(
                "lower_bound_certificate",
                Value::Rat(r.lower_bound_certificate),
            );
            report.push(
                "accepted_within_scan",
                Value::Bool(r.accepted_within_scan),
            );
        }
        Err(Error::NoLdElements) => {
            report.push("ld_elements_found", Value::Bool(false));
        }
        Err(e) => return Err(e),
    }
    report.push("under_approximation", Value::Bool(true));
    Ok(())
}

fn series_table(rows: &[(u64, Option<crate::Rational>)]) -> Value {
    Value::Table {
        columns: vec!["n".into(), "ld".into()],
        rows: rows
            .iter()
            .map(|(n, ld)| vec![Value::Nat(*n), Value::OptRat(ld.clone())])
            .collect(),
    }
}
