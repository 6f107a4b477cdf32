use std::path::PathBuf;

use clap::{Args, Subcommand};
use dehnkit::homsym::PrimitiveClass;
use dehnkit::knots::{
    coloring_count, parse_diagram, trefoil_torus_check_with, two_generator_structure, wirtinger_presentation, Diagram,
    TORUS_PROBE_DEPTH,
};
use serde_json::json;

use crate::report::{usage, yes_no, CmdResult, Report, UsageError};
use crate::sources::{parse_ints, quandle_spec, read};

#[derive(Args, Debug)]
pub struct DiagramSource {
    /// Diagram file (`c OVER IN OUT SIGN` lines)
    #[arg(long, conflicts_with = "knot")]
    diagram: Option<PathBuf>,
    /// unknot, trefoil or figure8
    #[arg(long)]
    knot: Option<String>,
}

impl DiagramSource {
    fn load(&self) -> Result<Diagram, UsageError> {
        match (&self.diagram, self.knot.as_deref()) {
            (Some(path), _) => Ok(parse_diagram(&read(path)?)?),
            (None, Some("unknot")) => Ok(Diagram::unknot()),
            (None, Some("trefoil")) => Ok(Diagram::trefoil()),
            (None, Some("figure8")) => Ok(Diagram::figure_eight()),
            (None, Some(k)) => Err(usage(format!("unknown knot {k:?}"))),
            (None, None) => Err(usage("a diagram needs --diagram or --knot")),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Count quandle colorings of a diagram
    Color {
        #[command(flatten)]
        source: DiagramSource,
        /// Quandle preset or JSON file
        #[arg(long)]
        quandle: String,
    },
    /// Print the Wirtinger presentation
    Wirtinger {
        #[command(flatten)]
        source: DiagramSource,
    },
    /// Check the torus classes model the trefoil quandle
    TrefoilCheck {
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, default_value_t = TORUS_PROBE_DEPTH)]
        depth: usize,
    },
    /// Classify the subquandle generated by two torus classes
    TwoGen {
        /// First class as p,q
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Second class as p,q
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
}

fn torus_class(s: &str) -> Result<PrimitiveClass, UsageError> {
    let v: Vec<i64> = parse_ints(s, 2)?;
    PrimitiveClass::new(v, 0).map_err(|e| usage(format!("{s:?}: {e}")))
}

pub fn run(action: &Action) -> CmdResult {
    match action {
        Action::Color { source, quandle } => {
            let d = source.load()?;
            let q = quandle_spec(quandle)?;
            let n = coloring_count(&d, &q)?;
            Ok(Report::new(
                true,
                format!("{n} colorings"),
                json!({ "arcs": d.arcs(), "crossings": d.crossings().len(), "quandle_size": q.size(), "colorings": n }),
            ))
        }
        Action::Wirtinger { source } => {
            let d = source.load()?;
            let w = wirtinger_presentation(&d);
            Ok(Report::new(true, w.to_string(), json!({ "presentation": w })))
        }
        Action::TrefoilCheck { bound, depth } => {
            if *bound < 1 {
                return Err(usage("--bound must be at least 1"));
            }
            let r = trefoil_torus_check_with(*bound, *depth);
            let text = format!(
                "braid relations {}\nidempotent {}\nreachable {}/{} classes\nwitnesses valid {}\nmodel relations to depth {}: {}, unexplained {}\nholds {}",
                yes_no(r.braid_relations),
                yes_no(r.idempotent),
                r.reachable,
                r.classes_in_box,
                yes_no(r.witnesses_valid),
                r.probe_depth,
                r.model_relations,
                r.unexplained.len(),
                yes_no(r.holds())
            );
            Ok(Report::new(r.holds(), text, json!({ "holds": r.holds(), "report": r })))
        }
        Action::TwoGen { x, y, depth } => {
            let (a, b) = (torus_class(x)?, torus_class(y)?);
            let r = two_generator_structure(&a, &b, *depth);
            let text = format!(
                "intersection {}\nkind {:?}\nverified {}\nrelation {}",
                r.intersection,
                r.kind,
                yes_no(r.verified),
                r.relation.as_ref().map_or("none".to_string(), |rel| format!("found at length {}", rel.length))
            );
            Ok(Report::new(r.verified, text, json!({ "report": r })))
        }
    }
}
