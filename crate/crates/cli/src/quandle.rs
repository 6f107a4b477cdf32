use clap::{Subcommand, ValueEnum};
use dehnkit::constructions::alexander_biorder_check;
use dehnkit::quandles::{FiniteQuandle, OrderSemantics, OrderSide, QuandleError};
use serde_json::json;

use crate::report::{usage, yes_no, CmdResult, Report};
use crate::sources::{cap, format_classes, parse_ints, quandle_spec, Loaded, QuandleSource};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Side {
    Left,
    Right,
    Bi,
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Check the quandle axioms
    Validate {
        #[command(flatten)]
        source: QuandleSource,
    },
    /// Orbits of the inner group
    Components {
        #[command(flatten)]
        source: QuandleSource,
    },
    /// Order of the inner automorphism group
    Inn {
        #[command(flatten)]
        source: QuandleSource,
    },
    /// Count automorphisms
    Aut {
        #[command(flatten)]
        source: QuandleSource,
    },
    /// Least k with S_y^k = id for all y
    Exponent {
        #[command(flatten)]
        source: QuandleSource,
    },
    /// Search for a compatible linear order
    OrderSearch {
        #[command(flatten)]
        source: QuandleSource,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
        /// Require z*x < z*y rather than z*x <= z*y on the left
        #[arg(long)]
        strict: bool,
    },
    /// Find an isomorphism to another quandle
    Iso {
        #[command(flatten)]
        source: QuandleSource,
        /// Preset or JSON file to compare against
        #[arg(long)]
        other: String,
    },
    /// Print the table as JSON or CSV
    Export {
        #[command(flatten)]
        source: QuandleSource,
        #[arg(long)]
        csv: bool,
    },
    /// Sampled bi-order check for the Alexander quandle on Z^2 with matrix M
    Biorder {
        /// Entries a,b,c,d of M = [[a, b], [c, d]]
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        range: i64,
    },
}

fn side(s: Side) -> OrderSide {
    match s {
        Side::Left => OrderSide::Left,
        Side::Right => OrderSide::Right,
        Side::Bi => OrderSide::Bi,
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
        Side::Bi => "bi",
    }
}

fn labels(q: &FiniteQuandle, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| q.label(x)).collect()
}

pub fn run(action: &Action, seed: u64) -> CmdResult {
    match action {
        Action::Validate { source } => match source.load_checked()? {
            Loaded::Ok(q) => Ok(Report::new(
                true,
                format!("valid quandle of size {}", q.size()),
                json!({ "valid": true, "size": q.size() }),
            )),
            Loaded::Invalid(QuandleError::AxiomViolation { axiom, witness }) => Ok(Report::new(
                false,
                format!("axiom violation: {axiom} fails at {witness:?}"),
                json!({ "valid": false, "axiom": axiom, "witness": witness }),
            )),
            Loaded::Invalid(e) => Err(usage(e.to_string())),
        },
        Action::Components { source } => {
            let q = source.load()?;
            let comps = q.components();
            let mut text = format!("{} components\n", comps.len());
            for c in &comps {
                text.push_str(&format!("{}\n", format_classes(c)));
            }
            Ok(Report::new(true, text, json!({ "size": q.size(), "components": comps })))
        }
        Action::Inn { source } => {
            let q = source.load()?;
            let inn = q.inner_group(cap(dehnkit::groups::DEFAULT_CAP)?)?;
            Ok(Report::new(
                true,
                format!("|Inn| = {}\nfaithful {}", inn.order(), yes_no(q.is_faithful())),
                json!({ "size": q.size(), "inn_order": inn.order(), "faithful": q.is_faithful() }),
            ))
        }
        Action::Aut { source } => {
            let q = source.load()?;
            let auts = q.automorphisms()?;
            Ok(Report::new(
                true,
                format!("|Aut| = {}", auts.len()),
                json!({ "size": q.size(), "aut_order": auts.len() }),
            ))
        }
        Action::Exponent { source } => {
            let q = source.load()?;
            Ok(Report::new(
                true,
                format!("exponent {}\ninvolutory {}", q.exponent(), yes_no(q.is_involutory())),
                json!({ "exponent": q.exponent(), "involutory": q.is_involutory() }),
            ))
        }
        Action::OrderSearch { source, side: s, strict } => {
            let q = source.load()?;
            let semantics = if *strict { OrderSemantics::Strict } else { OrderSemantics::Weak };
            let order = q.search_linear_order_with(side(*s), semantics)?;
            let braid = q.braid_pair();
            let mut text = match &order {
                Some(o) => format!("{} order: {}\n", side_name(*s), labels(&q, o).join(" < ")),
                None => format!("no {} order\n", side_name(*s)),
            };
            if let Some((x, y)) = braid {
                text.push_str(&format!("braid pair {} {}\n", q.label(x), q.label(y)));
            }
            Ok(Report::new(
                true,
                text,
                json!({
                    "side": side_name(*s),
                    "semantics": semantics,
                    "orderable": order.is_some(),
                    "order": order,
                    "braid_pair": braid,
                }),
            ))
        }
        Action::Iso { source, other } => {
            let q = source.load()?;
            let r = quandle_spec(other)?;
            let iso = q.find_isomorphism(&r)?;
            let text = match &iso {
                Some(m) => format!("isomorphic\n{}", format_classes(m)),
                None => "not isomorphic".to_string(),
            };
            Ok(Report::new(iso.is_some(), text, json!({ "isomorphic": iso.is_some(), "map": iso })))
        }
        Action::Export { source, csv } => {
            let q = source.load()?;
            let body: serde_json::Value = serde_json::from_str(&q.to_json()).expect("quandle json");
            let text = if *csv { q.to_csv() } else { q.to_json() };
            Ok(Report::new(true, text, json!({ "quandle": body })))
        }
        Action::Biorder { matrix, samples, range } => {
            let e = parse_ints(matrix, 4)?;
            let m = [[e[0], e[1]], [e[2], e[3]]];
            if *range <= 0 {
                return Err(usage("--range must be positive"));
            }
            let v = alexander_biorder_check(m, *samples, *range, seed)?;
            let mut text = format!(
                "condition {}\nmonotone {}\npositive samples {}\ntriples {}\n",
                yes_no(v.condition_holds),
                yes_no(v.operation_monotone),
                v.positive_samples,
                v.triples
            );
            if let Some(c) = v.counterexample {
                text.push_str(&format!("counterexample {c:?}\n"));
            }
            Ok(Report::new(v.holds(), text, json!({ "seed": seed, "verdict": v })))
        }
    }
}
