use clap::{Args, Subcommand};
use dehnkit::constructions::{core_dehn_witness, dehn_quandle, dehn_witness, env_abelianization, DehnQuandle};
use dehnkit::groups::parse_element;
use serde_json::json;

use crate::report::{usage, yes_no, CmdResult, Report, UsageError};
use crate::sources::{group_preset, GroupSource, QuandleSource};

#[derive(Args, Debug, Clone)]
pub struct DehnSource {
    #[command(flatten)]
    group: GroupSource,
    /// Seed elements separated by '|' (default: the group's generators)
    #[arg(long)]
    seeds: Option<String>,
}

impl DehnSource {
    fn load(&self) -> Result<DehnQuandle, UsageError> {
        let g = self.group.load()?;
        let seeds = match &self.seeds {
            None => g.generators().to_vec(),
            Some(s) => {
                let degree = g.element(0).as_perm().map(|p| p.degree());
                s.split('|')
                    .map(|lit| {
                        let e = parse_element(lit.trim(), degree)?;
                        g.index_of(&e).ok_or_else(|| usage(format!("seed {lit:?} is not in the group")))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
        };
        Ok(dehn_quandle(g, &seeds)?)
    }
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Build D(A^G) and list its classes
    Build {
        #[command(flatten)]
        source: DehnSource,
        /// Print the element labels
        #[arg(long)]
        list: bool,
    },
    /// Abelianized enveloping group: free of rank c(A^G), no torsion
    EnvAb {
        #[command(flatten)]
        source: DehnSource,
    },
    /// Inn(D(A^G)) against G/Z(G)
    InnCheck {
        #[command(flatten)]
        source: DehnSource,
    },
    /// Realise a quandle as a Dehn quandle
    Witness {
        #[command(flatten)]
        source: QuandleSource,
        /// Use the doubling construction for Core(GROUP) instead
        #[arg(long, conflicts_with_all = ["input", "preset"])]
        core: Option<String>,
    },
}

pub fn run(action: &Action) -> CmdResult {
    match action {
        Action::Build { source, list } => {
            let d = source.load()?;
            let (c, ct) = d.class_counts();
            let labels: Vec<String> = (0..d.quandle.size()).map(|x| d.quandle.label(x)).collect();
            let mut text = format!("size {}\ngroup order {}\nclasses {c}\n", d.quandle.size(), d.group.order());
            if *list {
                for (i, l) in labels.iter().enumerate() {
                    text.push_str(&format!("{i}\t{l}\n"));
                }
            }
            Ok(Report::new(
                true,
                text,
                json!({
                    "size": d.quandle.size(),
                    "group_order": d.group.order(),
                    "classes": c,
                    "torsion_classes": ct,
                    "labels": labels,
                }),
            ))
        }
        Action::EnvAb { source } => {
            let d = source.load()?;
            let (c, _) = d.class_counts();
            let ab = env_abelianization(&d.quandle);
            let torsion: Vec<String> = ab.invariant_factors.iter().map(ToString::to_string).collect();
            let ok = ab.free_rank == c && torsion.is_empty();
            let shape = if torsion.is_empty() {
                format!("Z^{}", ab.free_rank)
            } else {
                format!("Z^{} + {}", ab.free_rank, torsion.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + "))
            };
            Ok(Report::new(
                ok,
                format!("Env(D)^ab = {shape}\nclasses {c}\nmatches {}", yes_no(ok)),
                json!({ "free_rank": ab.free_rank, "torsion": torsion, "classes": c, "holds": ok }),
            ))
        }
        Action::InnCheck { source } => {
            let d = source.load()?;
            let r = d.inn_equals_central_quotient()?;
            Ok(Report::new(
                r.holds,
                format!(
                    "|Inn(D)| = {}\n|G/Z(G)| = {}\nnatural map verified {}\nholds {}",
                    r.inn_order,
                    r.quotient_order,
                    yes_no(r.natural_map_verified),
                    yes_no(r.holds)
                ),
                json!({ "report": r }),
            ))
        }
        Action::Witness { source, core } => {
            if let Some(spec) = core {
                let g = group_preset(spec)?;
                let w = core_dehn_witness(&g)?;
                return Ok(Report::new(
                    true,
                    format!("Core is Dehn inside a group of order {}", w.dehn.group.order()),
                    json!({ "dehn": true, "group_order": w.dehn.group.order(), "iso": w.iso }),
                ));
            }
            let q = source.load()?;
            match dehn_witness(&q)? {
                Some(w) => Ok(Report::new(
                    true,
                    format!("Dehn quandle inside Inn of order {}", w.dehn.group.order()),
                    json!({ "dehn": true, "group_order": w.dehn.group.order(), "iso": w.iso }),
                )),
                None => Ok(Report::new(
                    false,
                    "undetermined: the quandle is not faithful",
                    json!({ "dehn": null }),
                )),
            }
        }
    }
}
