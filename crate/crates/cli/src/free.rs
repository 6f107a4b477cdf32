use clap::Subcommand;
use dehnkit::completion::involutory_word;
use dehnkit::freeq::{
    core_embed, free_normalize_expr, inv_multiply, inv_normalize, parse_expr, Alphabet, InvolutoryWord,
};
use serde_json::json;

use crate::report::{CmdResult, Report, UsageError};

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Normal form of a word such as `a*b*-c` or `a*(b*c)`
    Normalize {
        word: String,
        /// Normalize in the free involutory quandle instead
        #[arg(long)]
        involutory: bool,
    },
    /// Product of two free involutory normal forms
    Multiply { u: String, v: String },
    /// Image of a free involutory word in the free group
    CoreEmbed { word: String },
    /// Decide equality of two free quandle words
    Equal { a: String, b: String },
}

fn inv_word(s: &str, alphabet: &mut Alphabet) -> Result<InvolutoryWord, UsageError> {
    let w = involutory_word(&parse_expr(s, alphabet)?);
    let mut seq = vec![w.base];
    seq.extend(w.ops.iter().map(|&(g, _)| g));
    Ok(inv_normalize(&seq))
}

fn show(w: &InvolutoryWord, alphabet: &Alphabet) -> String {
    w.letters().iter().map(|&s| alphabet.name(s)).collect::<Vec<_>>().join("*")
}

pub fn run(action: &Action) -> CmdResult {
    let mut alphabet = Alphabet::default();
    match action {
        Action::Normalize { word, involutory: true } => {
            let w = inv_word(word, &mut alphabet)?;
            let s = show(&w, &alphabet);
            Ok(Report::new(true, s.clone(), json!({ "normal_form": s, "length": w.len() })))
        }
        Action::Normalize { word, involutory: false } => {
            let e = free_normalize_expr(&parse_expr(word, &mut alphabet)?);
            let s = e.display(&alphabet);
            Ok(Report::new(
                true,
                s.clone(),
                json!({ "normal_form": s, "conjugator_length": e.conjugator.len() }),
            ))
        }
        Action::Multiply { u, v } => {
            let (u, v) = (inv_word(u, &mut alphabet)?, inv_word(v, &mut alphabet)?);
            let s = show(&inv_multiply(&u, &v), &alphabet);
            Ok(Report::new(true, s.clone(), json!({ "product": s })))
        }
        Action::CoreEmbed { word } => {
            let w = inv_word(word, &mut alphabet)?;
            let g = core_embed(&w).display(&alphabet);
            Ok(Report::new(
                true,
                g.clone(),
                json!({ "normal_form": show(&w, &alphabet), "image": g }),
            ))
        }
        Action::Equal { a, b } => {
            let ea = free_normalize_expr(&parse_expr(a, &mut alphabet)?);
            let eb = free_normalize_expr(&parse_expr(b, &mut alphabet)?);
            let eq = ea == eb;
            Ok(Report::new(
                eq,
                if eq { "equal" } else { "different" },
                json!({ "equal": eq, "a": ea.display(&alphabet), "b": eb.display(&alphabet) }),
            ))
        }
    }
}
