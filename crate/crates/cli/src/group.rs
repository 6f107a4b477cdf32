use clap::Subcommand;
use serde_json::json;

use crate::report::{CmdResult, Report};
use crate::sources::GroupSource;

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Close the generators under multiplication
    Generate {
        #[command(flatten)]
        source: GroupSource,
        /// List every element
        #[arg(long)]
        list: bool,
    },
    /// Conjugacy classes with representatives
    Classes {
        #[command(flatten)]
        source: GroupSource,
    },
    /// Elements of the center
    Center {
        #[command(flatten)]
        source: GroupSource,
    },
}

pub fn run(action: &Action) -> CmdResult {
    match action {
        Action::Generate { source, list } => {
            let g = source.load()?;
            let gens: Vec<String> = g.generators().iter().map(|&i| g.element(i).to_string()).collect();
            let mut text = format!("order {}\ngenerators {}\n", g.order(), gens.join(", "));
            let mut body = json!({ "order": g.order(), "generators": gens });
            if *list {
                let elems: Vec<String> = g.elements().iter().map(ToString::to_string).collect();
                for (i, e) in elems.iter().enumerate() {
                    text.push_str(&format!("{i}\t{e}\n"));
                }
                body["elements"] = json!(elems);
            }
            Ok(Report::new(true, text, body))
        }
        Action::Classes { source } => {
            let g = source.load()?;
            let classes = g.conjugacy_classes();
            let mut text = format!("{} classes\n", classes.len());
            let mut rows = Vec::new();
            for c in &classes {
                let rep = g.element(c[0]).to_string();
                text.push_str(&format!("size {}\torder {}\t{}\n", c.len(), g.element_order(c[0]), rep));
                rows.push(json!({ "size": c.len(), "element_order": g.element_order(c[0]), "representative": rep, "members": c }));
            }
            Ok(Report::new(true, text, json!({ "order": g.order(), "classes": rows })))
        }
        Action::Center { source } => {
            let g = source.load()?;
            let z: Vec<String> = g.center().iter().map(|&i| g.element(i).to_string()).collect();
            let mut text = format!("center order {}\n", z.len());
            for e in &z {
                text.push_str(&format!("{e}\n"));
            }
            Ok(Report::new(true, text, json!({ "order": g.order(), "center_order": z.len(), "center": z })))
        }
    }
}
